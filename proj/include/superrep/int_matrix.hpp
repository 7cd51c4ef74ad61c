#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace srep {

// Dense integer matrix, row-major, arbitrary precision entries.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(size_t n);
  static IntMatrix zero(size_t rows, size_t cols) {
    return IntMatrix(rows, cols);
  }
  static IntMatrix from_columns(size_t rows,
                                const std::vector<std::vector<mpz_class>>& cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  mpz_class& at(size_t i, size_t j) { return entries_[i * cols_ + j]; }
  const mpz_class& at(size_t i, size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool is_zero() const;
  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;
  IntMatrix transpose() const;
  IntMatrix column(size_t j) const;
  std::vector<mpz_class> column_vec(size_t j) const;

  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);

  std::string to_text() const;

 private:
  size_t rows_, cols_;
  std::vector<mpz_class> entries_;
};

struct SmithResult {
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix d;  // diagonal with d1 | d2 | ...
  IntMatrix v;  // unimodular, cols x cols
  std::vector<mpz_class> invariant_factors;  // the nonzero diagonal entries
};

// u * a * v = d with |det u| = |det v| = 1 and divisibility chain on d.
SmithResult smith_normal_form(const IntMatrix& a);

mpz_class int_det(const IntMatrix& a);

// Z-basis of {x : a x = 0}, one column per basis vector.
IntMatrix int_kernel(const IntMatrix& a);

// One integer solution of a x = b, if any.
std::optional<std::vector<mpz_class>> int_solve(const IntMatrix& a,
                                                const std::vector<mpz_class>& b);

// Columns of `lattice` span a sublattice of Z^rows; membership is integer
// solvability, so index-2 distinctions are seen.
bool lattice_contains(const IntMatrix& lattice, const std::vector<mpz_class>& v);

enum class LatticeOrder { Equal, AcontainsB, BcontainsA, Incomparable };

LatticeOrder lattice_compare(const IntMatrix& a, const IntMatrix& b);

// {x : m x lies in the lattice spanned by rel}; columns generate the result.
IntMatrix kernel_mod_lattice(const IntMatrix& m, const IntMatrix& rel);

// Invariants of Z^rank / (columns of relations).
struct GroupInvariants {
  size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1

  bool operator==(const GroupInvariants& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_text() const;  // "Z^r + Z/d1 + ..." style, "0" if trivial
};

GroupInvariants cokernel_invariants(size_t ambient_rank,
                                    const IntMatrix& relations);

}  // namespace srep
