#include "uqpa/modules.hpp"

#include <stdexcept>

namespace uqpa {

std::string ModuleLabel::str() const {
  return std::string(projective ? "P" : "X") + (sign > 0 ? "+" : "-") + "_" + std::to_string(s);
}

namespace {

CycloNum signed_one(const Field& f, int sign) { return sign > 0 ? f.one() : -f.one(); }

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace

ModuleData simple_module(const Field& f, int sign, int s) {
  if (s < 1 || s > f.p()) throw std::out_of_range("simple_module: s out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("simple_module: sign must be +-1");
  ModuleData m;
  m.label = {false, sign, s};
  m.dimension = s;
  m.K = Matrix(f, s, s);
  m.E = Matrix(f, s, s);
  m.F = Matrix(f, s, s);
  const CycloNum sg = signed_one(f, sign);
  for (int n = 0; n < s; ++n) {
    m.basis_names.push_back("v" + std::to_string(n));
    m.K(n, n) = sg * f.q_pow(s - 1 - 2 * n);
    if (n > 0) m.E(n - 1, n) = sg * f.qint(n) * f.qint(s - n);
    if (n + 1 < s) m.F(n + 1, n) = f.one();
  }
  return m;
}

ModuleData projective_module(const Field& f, int sign, int s) {
  const int p = f.p();
  if (s < 1 || s > p - 1) throw std::out_of_range("projective_module: s out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("projective_module: sign must be +-1");
  const int t = p - s;
  const std::size_t dim = 2 * p;
  ModuleData m;
  m.label = {true, sign, s};
  m.dimension = dim;
  m.K = Matrix(f, dim, dim);
  m.E = Matrix(f, dim, dim);
  m.F = Matrix(f, dim, dim);
  auto a = [&](int i) { return static_cast<std::size_t>(i); };
  auto b = [&](int i) { return static_cast<std::size_t>(s + i); };
  auto x = [&](int j) { return static_cast<std::size_t>(2 * s + j); };
  auto y = [&](int j) { return static_cast<std::size_t>(2 * s + t + j); };
  for (int i = 0; i < s; ++i) m.basis_names.push_back("a" + std::to_string(i));
  for (int i = 0; i < s; ++i) m.basis_names.push_back("b" + std::to_string(i));
  for (int j = 0; j < t; ++j) m.basis_names.push_back("x" + std::to_string(j));
  for (int j = 0; j < t; ++j) m.basis_names.push_back("y" + std::to_string(j));

  const CycloNum sg = signed_one(f, sign);
  for (int i = 0; i < s; ++i) {
    const CycloNum k = sg * f.q_pow(s - 1 - 2 * i);
    m.K(a(i), a(i)) = k;
    m.K(b(i), b(i)) = k;
    if (i > 0) {
      const CycloNum e = sg * f.qint(i) * f.qint(s - i);
      m.E(a(i - 1), a(i)) = e;
      m.E(b(i - 1), b(i)) = e;
      m.E(a(i - 1), b(i)) += f.one();
    }
    if (i + 1 < s) {
      m.F(a(i + 1), a(i)) = f.one();
      m.F(b(i + 1), b(i)) = f.one();
    }
  }
  m.E(x(t - 1), b(0)) = f.one();
  m.F(y(0), b(s - 1)) = f.one();
  for (int j = 0; j < t; ++j) {
    const CycloNum k = -sg * f.q_pow(t - 1 - 2 * j);
    m.K(x(j), x(j)) = k;
    m.K(y(j), y(j)) = k;
    if (j > 0) {
      const CycloNum e = -sg * f.qint(j) * f.qint(t - j);
      m.E(x(j - 1), x(j)) = e;
      m.E(y(j - 1), y(j)) = e;
    }
    if (j + 1 < t) {
      m.F(x(j + 1), x(j)) = f.one();
      m.F(y(j + 1), y(j)) = f.one();
    }
  }
  m.E(a(s - 1), y(0)) = f.one();
  m.F(a(0), x(t - 1)) = f.one();
  return m;
}

ModuleData make_module(const Field& f, const ModuleLabel& label) {
  return label.projective ? projective_module(f, label.sign, label.s)
                          : simple_module(f, label.sign, label.s);
}

std::vector<ModuleLabel> all_labels(int p) {
  std::vector<ModuleLabel> out;
  for (int sign : {1, -1}) {
    for (int s = 1; s <= p; ++s) out.push_back({false, sign, s});
  }
  for (int sign : {1, -1}) {
    for (int s = 1; s < p; ++s) out.push_back({true, sign, s});
  }
  return out;
}

std::vector<std::string> module_defects(const ModuleData& m) {
  const Field& f = m.K.field();
  const std::size_t d = m.dimension;
  std::vector<std::string> out;
  bool invertible = m.K.is_diagonal();
  for (std::size_t i = 0; invertible && i < d; ++i) invertible = !m.K(i, i).is_zero();
  if (!invertible) {
    out.push_back("K invertible diagonal");
    return out;
  }
  Matrix k_inv(f, d, d);
  for (std::size_t i = 0; i < d; ++i) k_inv(i, i) = m.K(i, i).inverse();
  if (!(m.K * m.E * k_inv == f.q_pow(2) * m.E)) out.push_back("KEK^-1");
  if (!(m.K * m.F * k_inv == f.q_pow(-2) * m.F)) out.push_back("KFK^-1");
  const CycloNum denom = (f.q() - f.q_pow(-1)).inverse();
  if (!(commutator(m.E, m.F) == denom * (m.K - k_inv))) out.push_back("[E,F]");
  const unsigned p = static_cast<unsigned>(f.p());
  if (!m.E.pow(p).is_zero()) out.push_back("E^p");
  if (!m.F.pow(p).is_zero()) out.push_back("F^p");
  if (!(m.K.pow(2 * p) == Matrix::identity(f, d))) out.push_back("K^2p");
  return out;
}

bool is_intertwiner(const ModuleData& src, const ModuleData& tgt, const Matrix& map) {
  return map * src.K == tgt.K * map && map * src.E == tgt.E * map && map * src.F == tgt.F * map;
}

HomBasis intertwiner_space(const ModuleData& src, const ModuleData& tgt) {
  const Field& f = src.K.field();
  const std::size_t ds = src.dimension;
  const std::size_t dt = tgt.dimension;
  // Unknown M(r, c) sits at index r * ds + c; each generator contributes the
  // entries of M g_src - g_tgt M.
  const std::size_t unknowns = dt * ds;
  Matrix system(f, 3 * unknowns, unknowns);
  std::size_t row = 0;
  for (const auto& [gs, gt] : {std::pair{&src.K, &tgt.K}, std::pair{&src.E, &tgt.E},
                               std::pair{&src.F, &tgt.F}}) {
    for (std::size_t r = 0; r < dt; ++r) {
      for (std::size_t c = 0; c < ds; ++c, ++row) {
        for (std::size_t k = 0; k < ds; ++k) {
          if (!(*gs)(k, c).is_zero()) system(row, r * ds + k) += (*gs)(k, c);
        }
        for (std::size_t k = 0; k < dt; ++k) {
          if (!(*gt)(r, k).is_zero()) system(row, k * ds + c) -= (*gt)(r, k);
        }
      }
    }
  }
  HomBasis out{src.label, tgt.label, {}};
  for (const auto& v : nullspace(system)) {
    Matrix m(f, dt, ds);
    for (std::size_t r = 0; r < dt; ++r) {
      for (std::size_t c = 0; c < ds; ++c) m(r, c) = v[r * ds + c];
    }
    out.maps.push_back(std::move(m));
  }
  return out;
}

int expected_hom_dim(int p, const ModuleLabel& src, const ModuleLabel& tgt) {
  if (!src.projective && !tgt.projective) {
    return (src.sign == tgt.sign && src.s == tgt.s) ? 1 : 0;
  }
  if (src.projective && !tgt.projective) {
    if (tgt.s == p) return 0;  // X_p is projective and simple, not a quotient of P_s
    return (src.sign == tgt.sign && src.s == tgt.s) ? 1 : 0;
  }
  if (!src.projective && tgt.projective) {
    if (src.s == p) return 0;
    return (src.sign == tgt.sign && src.s == tgt.s) ? 1 : 0;
  }
  if (src.sign == tgt.sign) return src.s == tgt.s ? 2 : 0;
  return src.s == p - tgt.s ? 2 : 0;
}

std::vector<NamedMap> explicit_maps(const Field& f) {
  const int p = f.p();
  std::vector<NamedMap> out;
  for (int sign : {1, -1}) {
    for (int s = 1; s < p; ++s) {
      const int t = p - s;
      const ModuleLabel ps{true, sign, s};
      const ModuleLabel xs{false, sign, s};
      const std::size_t dim = 2 * p;
      const std::string tag = ps.str();

      Matrix to_simple(f, s, dim);
      for (int i = 0; i < s; ++i) to_simple(i, s + i) = f.one();
      out.push_back({tag + "->" + xs.str() + " b_i->v_i", ps, xs, to_simple});

      Matrix from_simple(f, dim, s);
      for (int i = 0; i < s; ++i) from_simple(i, i) = f.one();
      out.push_back({xs.str() + "->" + tag + " v_i->a_i", xs, ps, from_simple});

      Matrix nil(f, dim, dim);
      for (int i = 0; i < s; ++i) nil(i, s + i) = f.one();
      out.push_back({tag + "->" + tag + " b_i->a_i", ps, ps, nil});

      // Target P^{-sign}_{t}: a~ has t entries, b~ t, x~ and y~ have s.
      const ModuleLabel pt{true, -sign, t};
      for (auto [f1, f2] : {std::pair{1, 0}, std::pair{0, 1}}) {
        Matrix m(f, dim, dim);
        for (int i = 0; i < s; ++i) {
          if (f1) m(2 * t + i, s + i) = f.one();       // b_i -> x~_i
          if (f2) m(2 * t + s + i, s + i) = f.one();   // b_i -> y~_i
        }
        for (int j = 0; j < t; ++j) {
          if (f2) m(j, 2 * s + j) = f.one();           // x_j -> a~_j
          if (f1) m(j, 2 * s + t + j) = f.one();       // y_j -> a~_j
        }
        out.push_back({tag + "->" + pt.str() + " (f1,f2)=(" + std::to_string(f1) + "," +
                           std::to_string(f2) + ")",
                       ps, pt, m});
      }
    }
  }
  return out;
}

std::vector<HomFormCheck> verify_hom_forms(const Field& f) {
  std::vector<HomFormCheck> out;
  for (const auto& nm : explicit_maps(f)) {
    const ModuleData src = make_module(f, nm.source);
    const ModuleData tgt = make_module(f, nm.target);
    HomFormCheck c;
    c.name = nm.name;
    c.intertwiner = is_intertwiner(src, tgt, nm.map);
    const HomBasis basis = intertwiner_space(src, tgt);
    // In the span iff appending the map to the basis keeps the rank.
    auto stacked_rank = [&](std::vector<Matrix> ms) {
      Matrix rows(f, ms.size(), tgt.dimension * src.dimension);
      for (std::size_t k = 0; k < ms.size(); ++k) {
        for (std::size_t r = 0; r < tgt.dimension; ++r) {
          for (std::size_t col = 0; col < src.dimension; ++col) {
            rows(k, r * src.dimension + col) = ms[k](r, col);
          }
        }
      }
      return rank(rows);
    };
    std::vector<Matrix> with = basis.maps;
    with.push_back(nm.map);
    c.in_span = stacked_rank(with) == basis.maps.size();
    if (nm.source == nm.target) {
      c.independent_of_identity =
          stacked_rank({Matrix::identity(f, src.dimension), nm.map}) == 2;
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace uqpa
