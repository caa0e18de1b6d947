#pragma once

// Exact linear algebra over the cyclotomic field: a small dense matrix type
// for module matrices and an incremental sparse echelon form for ranks,
// nullspaces and linear relations among large sparse vectors.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "uqpa/cyclo.hpp"

namespace uqpa {

class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& field, std::size_t n);

  const Field& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  CycloNum& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycloNum& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  bool is_diagonal() const;
  Matrix pow(unsigned e) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const CycloNum& s, const Matrix& a);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Rows of canonical CycloNum strings.
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  const Field* field_ = nullptr;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycloNum> data_;
};

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<CycloNum>> nullspace(const Matrix& m);

using SparseVec = std::map<std::size_t, CycloNum>;

/// Rows kept in echelon form with unit leading entries; inserting a vector
/// reduces it against the existing rows first.
class SparseEchelon {
 public:
  explicit SparseEchelon(const Field& field) : field_(&field) {}

  /// Returns true when v was independent of everything inserted so far.
  bool insert(SparseVec v);
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  const Field* field_;
  std::map<std::size_t, SparseVec> rows_;  // keyed by pivot column
};

/// Basis of {c : sum_i c_i v_i = 0}.
std::vector<std::vector<CycloNum>> linear_relations(const Field& field,
                                                    const std::vector<SparseVec>& vs);

}  // namespace uqpa
