#include "uqpa/linalg.hpp"

#include <stdexcept>

namespace uqpa {

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r != c && !(*this)(r, c).is_zero()) return false;
    }
  }
  return true;
}

Matrix Matrix::pow(unsigned e) const {
  if (rows_ != cols_) throw std::invalid_argument("Matrix::pow: not square");
  Matrix acc = identity(*field_, rows_);
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
  Matrix out(*a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycloNum& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

Matrix operator*(const CycloNum& s, const Matrix& a) {
  Matrix out = a;
  for (auto& x : out.data_) x = s * x;
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r].push_back((*this)(r, c).str());
  }
  return out;
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const CycloNum inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const CycloNum factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<std::vector<CycloNum>> nullspace(const Matrix& m) {
  const RowEchelon e = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<CycloNum>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<CycloNum> x(m.cols(), f.zero());
    x[free] = f.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

SparseVec SparseEchelon::reduce(SparseVec v) const {
  auto it = v.begin();
  while (it != v.end()) {
    const auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const CycloNum factor = it->second;
    for (const auto& [col, val] : row->second) {
      if (col == it->first) continue;
      auto [slot, inserted] = v.try_emplace(col, field_->zero());
      slot->second -= factor * val;
      if (slot->second.is_zero()) v.erase(slot);
    }
    it = v.erase(it);
  }
  return v;
}

bool SparseEchelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const CycloNum inv = v.begin()->second.inverse();
  for (auto& [col, val] : v) val *= inv;
  const std::size_t lead = v.begin()->first;
  rows_.emplace(lead, std::move(v));
  return true;
}

std::vector<std::vector<CycloNum>> linear_relations(const Field& field,
                                                    const std::vector<SparseVec>& vs) {
  std::size_t tag_base = 0;
  for (const auto& v : vs) {
    if (!v.empty()) tag_base = std::max(tag_base, v.rbegin()->first + 1);
  }
  SparseEchelon echelon(field);
  std::vector<std::vector<CycloNum>> relations;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    SparseVec aug = vs[i];
    aug.emplace(tag_base + i, field.one());
    SparseVec reduced = echelon.reduce(std::move(aug));
    if (reduced.begin()->first >= tag_base) {
      std::vector<CycloNum> rel(vs.size(), field.zero());
      for (const auto& [col, val] : reduced) rel[col - tag_base] = val;
      relations.push_back(std::move(rel));
    } else {
      echelon.insert(std::move(reduced));
    }
  }
  return relations;
}

}  // namespace uqpa
