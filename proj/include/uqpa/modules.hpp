#pragma once

// The indecomposable modules X^{+-}_s (1 <= s <= p) and P^{+-}_s
// (1 <= s <= p-1) as explicit K, E, F matrices, and an intertwiner solver.
//
// Matrices act on column vectors: entry (r, c) is the coefficient of basis
// vector r in the image of basis vector c.

#include <string>
#include <vector>

#include "uqpa/cyclo.hpp"
#include "uqpa/linalg.hpp"

namespace uqpa {

struct ModuleLabel {
  bool projective = false;
  int sign = 1;  // +1 or -1
  int s = 1;
  std::string str() const;  // "X+_2", "P-_1"
  friend auto operator<=>(const ModuleLabel&, const ModuleLabel&) = default;
};

struct ModuleData {
  ModuleLabel label;
  std::size_t dimension = 0;
  std::vector<std::string> basis_names;
  Matrix K;
  Matrix E;
  Matrix F;
};

/// Throws std::out_of_range unless 1 <= s <= p.
ModuleData simple_module(const Field& f, int sign, int s);
/// Throws std::out_of_range unless 1 <= s <= p-1. Basis order a, b, x, y.
ModuleData projective_module(const Field& f, int sign, int s);
ModuleData make_module(const Field& f, const ModuleLabel& label);

/// Every label admissible at the field's p, simples first.
std::vector<ModuleLabel> all_labels(int p);

/// Names of the relations that fail: "K invertible diagonal", "KEK^-1",
/// "KFK^-1", "[E,F]", "E^p", "F^p", "K^2p". Empty when the module is valid.
std::vector<std::string> module_defects(const ModuleData& m);

bool is_intertwiner(const ModuleData& src, const ModuleData& tgt, const Matrix& map);

struct HomBasis {
  ModuleLabel source;
  ModuleLabel target;
  std::vector<Matrix> maps;
};

/// Basis of {M : M g_src = g_tgt M for g in K, E, F}.
HomBasis intertwiner_space(const ModuleData& src, const ModuleData& tgt);

/// Hom-space dimension predicted by the module tables.
int expected_hom_dim(int p, const ModuleLabel& src, const ModuleLabel& tgt);

/// The explicit module maps: P_s -> X_s (b_i -> v_i), X_s -> P_s
/// (v_i -> a_i), P_s -> P_s (b_i -> a_i) and P_s -> P^{-+}_{p-s} for
/// (f1, f2) in {(1,0), (0,1)}.
struct NamedMap {
  std::string name;
  ModuleLabel source;
  ModuleLabel target;
  Matrix map;
};
std::vector<NamedMap> explicit_maps(const Field& f);

struct HomFormCheck {
  std::string name;
  bool intertwiner = false;
  bool in_span = false;
  bool independent_of_identity = true;  // meaningful for endomorphisms only
};
std::vector<HomFormCheck> verify_hom_forms(const Field& f);

}  // namespace uqpa
