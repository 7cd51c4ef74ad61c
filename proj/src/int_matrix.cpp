#include "superrep/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace srep {

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(
    size_t rows, const std::vector<std::vector<mpz_class>>& cols) {
  IntMatrix m(rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows)
      throw std::invalid_argument("column length mismatch");
    for (size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("product mismatch");
  IntMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("shape mismatch");
  IntMatrix r(rows_, cols_);
  for (size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = entries_[k] + o.entries_[k];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("shape mismatch");
  IntMatrix r(rows_, cols_);
  for (size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = entries_[k] - o.entries_[k];
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(rows_, cols_);
  for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = -entries_[k];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMatrix IntMatrix::column(size_t j) const {
  IntMatrix r(rows_, 1);
  for (size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
  return r;
}

std::vector<mpz_class> IntMatrix::column_vec(size_t j) const {
  std::vector<mpz_class> v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack mismatch");
  IntMatrix r(a.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

std::string IntMatrix::to_text() const {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (size_t j = 0; j < cols_; ++j)
      out << (j ? ", " : "") << at(i, j).get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

namespace {

struct SnfWork {
  IntMatrix d, u, v;

  void row_swap(size_t a, size_t b) {
    for (size_t j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
    for (size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void col_swap(size_t a, size_t b) {
    for (size_t i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
    for (size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
  }
  void row_addmul(size_t dst, size_t src, const mpz_class& c) {
    for (size_t j = 0; j < d.cols(); ++j) d.at(dst, j) += c * d.at(src, j);
    for (size_t j = 0; j < u.cols(); ++j) u.at(dst, j) += c * u.at(src, j);
  }
  void col_addmul(size_t dst, size_t src, const mpz_class& c) {
    for (size_t i = 0; i < d.rows(); ++i) d.at(i, dst) += c * d.at(i, src);
    for (size_t i = 0; i < v.rows(); ++i) v.at(i, dst) += c * v.at(i, src);
  }
  void row_negate(size_t a) {
    for (size_t j = 0; j < d.cols(); ++j) d.at(a, j) = -d.at(a, j);
    for (size_t j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
  SnfWork w{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  const size_t m = a.rows(), n = a.cols();
  const size_t steps = std::min(m, n);

  for (size_t t = 0; t < steps; ++t) {
    // pivot: smallest |entry| != 0 in the trailing block
    size_t pi = m, pj = n;
    mpz_class best;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j) {
        const mpz_class& e = w.d.at(i, j);
        if (e == 0) continue;
        mpz_class ab = abs(e);
        if (pi == m || ab < best) {
          best = ab;
          pi = i;
          pj = j;
        }
      }
    if (pi == m) break;  // trailing block is zero
    if (pi != t) w.row_swap(pi, t);
    if (pj != t) w.col_swap(pj, t);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        if (w.d.at(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), w.d.at(i, t).get_mpz_t(),
                   w.d.at(t, t).get_mpz_t());
        w.row_addmul(i, t, -q);
        if (w.d.at(i, t) != 0) {
          w.row_swap(i, t);  // remainder is smaller, keep reducing
          clean = false;
        }
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (w.d.at(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), w.d.at(t, j).get_mpz_t(),
                   w.d.at(t, t).get_mpz_t());
        w.col_addmul(j, t, -q);
        if (w.d.at(t, j) != 0) {
          w.col_swap(j, t);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility sweep over the trailing block
      for (size_t i = t + 1; i < m && clean; ++i)
        for (size_t j = t + 1; j < n && clean; ++j)
          if (w.d.at(i, j) % w.d.at(t, t) != 0) {
            w.row_addmul(t, i, 1);
            clean = false;
          }
    }
    if (w.d.at(t, t) < 0) w.row_negate(t);
  }

  SmithResult res{w.u, w.d, w.v, {}};
  for (size_t t = 0; t < steps; ++t)
    if (w.d.at(t, t) != 0) res.invariant_factors.push_back(w.d.at(t, t));
  return res;
}

mpz_class int_det(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det of non-square");
  const size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  IntMatrix w = a;
  mpz_class prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      size_t sel = n;
      for (size_t i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          sel = i;
          break;
        }
      if (sel == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(sel, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        mpz_class num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(),
                     prev.get_mpz_t());
      }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

IntMatrix int_kernel(const IntMatrix& a) {
  SmithResult s = smith_normal_form(a);
  const size_t r = s.invariant_factors.size();
  std::vector<std::vector<mpz_class>> cols;
  for (size_t j = r; j < a.cols(); ++j) cols.push_back(s.v.column_vec(j));
  return IntMatrix::from_columns(a.cols(), cols);
}

std::optional<std::vector<mpz_class>> int_solve(const IntMatrix& a,
                                                const std::vector<mpz_class>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve mismatch");
  SmithResult s = smith_normal_form(a);
  // a x = b <=> d (v^-1 x) = u b
  std::vector<mpz_class> c(a.rows());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.rows(); ++j) c[i] += s.u.at(i, j) * b[j];
  const size_t r = s.invariant_factors.size();
  std::vector<mpz_class> z(a.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    if (i < r && i < a.cols()) {
      if (c[i] % s.d.at(i, i) != 0) return std::nullopt;
      z[i] = c[i] / s.d.at(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<mpz_class> x(a.cols());
  for (size_t i = 0; i < a.cols(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) x[i] += s.v.at(i, j) * z[j];
  return x;
}

bool lattice_contains(const IntMatrix& lattice,
                      const std::vector<mpz_class>& v) {
  if (lattice.cols() == 0) {
    for (const auto& e : v)
      if (e != 0) return false;
    return true;
  }
  return int_solve(lattice, v).has_value();
}

LatticeOrder lattice_compare(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("lattice row count mismatch");
  bool a_in_b = true, b_in_a = true;
  for (size_t j = 0; j < a.cols() && a_in_b; ++j)
    a_in_b = lattice_contains(b, a.column_vec(j));
  for (size_t j = 0; j < b.cols() && b_in_a; ++j)
    b_in_a = lattice_contains(a, b.column_vec(j));
  if (a_in_b && b_in_a) return LatticeOrder::Equal;
  if (b_in_a) return LatticeOrder::AcontainsB;
  if (a_in_b) return LatticeOrder::BcontainsA;
  return LatticeOrder::Incomparable;
}

IntMatrix kernel_mod_lattice(const IntMatrix& m, const IntMatrix& rel) {
  if (rel.cols() == 0) return int_kernel(m);
  if (m.rows() != rel.rows())
    throw std::invalid_argument("kernel_mod_lattice row mismatch");
  IntMatrix stacked = IntMatrix::hstack(m, rel);
  IntMatrix k = int_kernel(stacked);
  // keep the m-coefficient block of every kernel generator
  IntMatrix out(m.cols(), k.cols());
  for (size_t i = 0; i < m.cols(); ++i)
    for (size_t j = 0; j < k.cols(); ++j) out.at(i, j) = k.at(i, j);
  return out;
}

std::string GroupInvariants::to_text() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank == 1) {
    out << "Z";
    first = false;
  } else if (free_rank > 1) {
    out << "Z^" << free_rank;
    first = false;
  }
  for (const auto& d : torsion) {
    if (!first) out << " + ";
    out << "Z/" << d.get_str();
    first = false;
  }
  return out.str();
}

GroupInvariants cokernel_invariants(size_t ambient_rank,
                                    const IntMatrix& relations) {
  if (relations.cols() == 0) return GroupInvariants{ambient_rank, {}};
  if (relations.rows() != ambient_rank)
    throw std::invalid_argument("relation rows != ambient rank");
  SmithResult s = smith_normal_form(relations);
  GroupInvariants g;
  g.free_rank = ambient_rank - s.invariant_factors.size();
  for (const auto& d : s.invariant_factors)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

}  // namespace srep
