#include "superrep/exact_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace srep {

ExactMatrix ExactMatrix::identity(size_t n, FieldTag field) {
  ExactMatrix m(n, n, field);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = GRat(1);
  return m;
}

bool ExactMatrix::validate_field() const {
  if (field_ == FieldTag::ComplexQi) return true;
  for (const auto& e : entries_)
    if (e.im != 0) return false;
  return true;
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool ExactMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? GRat(1) : GRat(0))) return false;
  return true;
}

namespace {
void require_same_shape(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch");
  if (a.field() != b.field())
    throw std::invalid_argument("matrix field mismatch");
}
}  // namespace

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  require_same_shape(*this, o);
  ExactMatrix r(rows_, cols_, field_);
  for (size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = entries_[k] + o.entries_[k];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  require_same_shape(*this, o);
  ExactMatrix r(rows_, cols_, field_);
  for (size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = entries_[k] - o.entries_[k];
  return r;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix r(rows_, cols_, field_);
  for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = -entries_[k];
  return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product mismatch");
  if (field_ != o.field_) throw std::invalid_argument("matrix field mismatch");
  ExactMatrix r(rows_, o.cols_, field_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const GRat& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

ExactMatrix ExactMatrix::scaled(const GRat& c) const {
  ExactMatrix r(rows_, cols_, field_);
  for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] * c;
  return r;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix r(cols_, rows_, field_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

ExactMatrix ExactMatrix::submatrix(const std::vector<size_t>& row_idx,
                                   const std::vector<size_t>& col_idx) const {
  ExactMatrix r(row_idx.size(), col_idx.size(), field_);
  for (size_t i = 0; i < row_idx.size(); ++i)
    for (size_t j = 0; j < col_idx.size(); ++j)
      r.at(i, j) = at(row_idx[i], col_idx[j]);
  return r;
}

ExactMatrix ExactMatrix::column(size_t j) const {
  ExactMatrix r(rows_, 1, field_);
  for (size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
  return r;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.field() != b.field())
    throw std::invalid_argument("hstack mismatch");
  ExactMatrix r(a.rows(), a.cols() + b.cols(), a.field());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

std::string ExactMatrix::to_text() const {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (size_t j = 0; j < cols_; ++j)
      out << (j ? ", " : "") << to_string(at(i, j));
    out << "]";
  }
  out << "]";
  return out.str();
}

RrefResult mat_rref(const ExactMatrix& m) {
  RrefResult res{m, {}, 0};
  ExactMatrix& a = res.rref;
  size_t pivot_row = 0;
  for (size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    size_t sel = a.rows();
    for (size_t i = pivot_row; i < a.rows(); ++i)
      if (!a.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel == a.rows()) continue;
    if (sel != pivot_row)
      for (size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(sel, j), a.at(pivot_row, j));
    GRat inv = GRat(1) / a.at(pivot_row, col);
    for (size_t j = col; j < a.cols(); ++j)
      a.at(pivot_row, j) = a.at(pivot_row, j) * inv;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == pivot_row || a.at(i, col).is_zero()) continue;
      GRat f = a.at(i, col);
      for (size_t j = col; j < a.cols(); ++j)
        a.at(i, j) = a.at(i, j) - f * a.at(pivot_row, j);
    }
    res.pivots.push_back(col);
    ++pivot_row;
  }
  res.rank = res.pivots.size();
  return res;
}

ExactMatrix mat_kernel(const ExactMatrix& m) {
  RrefResult r = mat_rref(m);
  std::vector<size_t> free_cols;
  {
    size_t p = 0;
    for (size_t j = 0; j < m.cols(); ++j) {
      if (p < r.pivots.size() && r.pivots[p] == j)
        ++p;
      else
        free_cols.push_back(j);
    }
  }
  ExactMatrix basis(m.cols(), free_cols.size(), m.field());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    size_t f = free_cols[k];
    basis.at(f, k) = GRat(1);
    for (size_t p = 0; p < r.pivots.size(); ++p)
      basis.at(r.pivots[p], k) = -r.rref.at(p, f);
  }
  return basis;
}

size_t mat_rank(const ExactMatrix& m) { return mat_rref(m).rank; }

GRat mat_det(const ExactMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det of non-square matrix");
  ExactMatrix a = m;
  GRat det(1);
  size_t n = a.rows();
  for (size_t col = 0; col < n; ++col) {
    size_t sel = n;
    for (size_t i = col; i < n; ++i)
      if (!a.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel == n) return GRat(0);
    if (sel != col) {
      for (size_t j = 0; j < n; ++j) std::swap(a.at(sel, j), a.at(col, j));
      det = -det;
    }
    det = det * a.at(col, col);
    GRat inv = GRat(1) / a.at(col, col);
    for (size_t i = col + 1; i < n; ++i) {
      if (a.at(i, col).is_zero()) continue;
      GRat f = a.at(i, col) * inv;
      for (size_t j = col; j < n; ++j)
        a.at(i, j) = a.at(i, j) - f * a.at(col, j);
    }
  }
  return det;
}

std::optional<ExactMatrix> mat_inverse(const ExactMatrix& m) {
  if (!m.is_square()) return std::nullopt;
  ExactMatrix aug =
      ExactMatrix::hstack(m, ExactMatrix::identity(m.rows(), m.field()));
  RrefResult r = mat_rref(aug);
  if (r.rank != m.rows()) return std::nullopt;
  std::vector<size_t> all_rows, right;
  for (size_t i = 0; i < m.rows(); ++i) all_rows.push_back(i);
  for (size_t j = 0; j < m.cols(); ++j) right.push_back(m.cols() + j);
  // rank n forces the pivots into the left block
  if (r.pivots[m.rows() - 1] >= m.cols()) return std::nullopt;
  return r.rref.submatrix(all_rows, right);
}

std::optional<ExactMatrix> mat_solve(const ExactMatrix& a,
                                     const ExactMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve mismatch");
  ExactMatrix aug = ExactMatrix::hstack(a, b);
  RrefResult r = mat_rref(aug);
  for (size_t p : r.pivots)
    if (p >= a.cols()) return std::nullopt;  // inconsistent system
  ExactMatrix x(a.cols(), b.cols(), a.field());
  for (size_t p = 0; p < r.pivots.size(); ++p)
    for (size_t j = 0; j < b.cols(); ++j)
      x.at(r.pivots[p], j) = r.rref.at(p, a.cols() + j);
  return x;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.field() != b.field()) throw std::invalid_argument("kron field mismatch");
  ExactMatrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (size_t s = 0; s < b.rows(); ++s)
        for (size_t t = 0; t < b.cols(); ++t)
          r.at(i * b.rows() + s, j * b.cols() + t) = a.at(i, j) * b.at(s, t);
    }
  return r;
}

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.field() != b.field())
    throw std::invalid_argument("direct sum field mismatch");
  ExactMatrix r(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j)
      r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return r;
}

}  // namespace srep
