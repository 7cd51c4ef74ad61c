#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "superrep/scalar.hpp"

namespace srep {

// Dense matrix over Q or Q(i), row-major. RealQ matrices must have im = 0
// in every entry (checked by validate_field).
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0), field_(FieldTag::RealQ) {}
  ExactMatrix(size_t rows, size_t cols, FieldTag field)
      : rows_(rows), cols_(cols), field_(field), entries_(rows * cols) {}

  static ExactMatrix identity(size_t n, FieldTag field);
  static ExactMatrix zero(size_t rows, size_t cols, FieldTag field) {
    return ExactMatrix(rows, cols, field);
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  FieldTag field() const { return field_; }

  GRat& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }
  const GRat& at(size_t i, size_t j) const { return entries_[i * cols_ + j]; }

  bool validate_field() const;
  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator-() const;
  ExactMatrix scaled(const GRat& c) const;
  ExactMatrix transpose() const;

  bool operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  // Rows/columns selected by index lists (used for block extraction).
  ExactMatrix submatrix(const std::vector<size_t>& row_idx,
                        const std::vector<size_t>& col_idx) const;
  ExactMatrix column(size_t j) const;
  static ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);

  std::string to_text() const;

 private:
  size_t rows_, cols_;
  FieldTag field_;
  std::vector<GRat> entries_;
};

struct RrefResult {
  ExactMatrix rref;
  std::vector<size_t> pivots;
  size_t rank = 0;
};

// Unique reduced row echelon form; rank = pivot count.
RrefResult mat_rref(const ExactMatrix& m);

// Basis of {x : m x = 0}, one column per basis vector; count = cols - rank.
ExactMatrix mat_kernel(const ExactMatrix& m);

size_t mat_rank(const ExactMatrix& m);
GRat mat_det(const ExactMatrix& m);
std::optional<ExactMatrix> mat_inverse(const ExactMatrix& m);

// One solution of a x = b (b may have several columns), if consistent.
std::optional<ExactMatrix> mat_solve(const ExactMatrix& a,
                                     const ExactMatrix& b);

// Plain Kronecker product, row-major (first factor major).
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace srep
