#pragma once

#include <string>
#include <vector>

#include "superrep/super_space.hpp"

namespace srep {

// Structure constants over an ordered basis, even generators first:
// [X_i, X_j] = sum_k c[i][j][k] X_k.
struct LieSuperAlgebra {
  FieldTag field = FieldTag::RealQ;
  std::vector<std::string> names;   // even block then odd block
  size_t n_even = 0;
  std::vector<std::vector<std::vector<GRat>>> c;

  size_t dim() const { return names.size(); }
  Parity parity_of(size_t i) const {
    return i < n_even ? Parity::Even : Parity::Odd;
  }
  const GRat& coeff(size_t i, size_t j, size_t k) const { return c[i][j][k]; }

  bool operator==(const LieSuperAlgebra& o) const {
    return field == o.field && names == o.names && n_even == o.n_even &&
           c == o.c;
  }
};

LieSuperAlgebra make_algebra(FieldTag field,
                             std::vector<std::string> even_names,
                             std::vector<std::string> odd_names);

struct JacobiReport {
  bool ok = true;
  std::string message;     // first violation, with both sides evaluated
  size_t i = 0, j = 0, k = 0;
};

// Super antisymmetry, bracket parity, and the super Jacobi identity
// [X,[Y,Z]] = [[X,Y],Z] + (-1)^{|X||Y|}[Y,[X,Z]] over all triples.
JacobiReport check_jacobi(const LieSuperAlgebra& g);

// Same algebra with the odd-odd brackets negated.
LieSuperAlgebra bar(const LieSuperAlgebra& g);

// p generators squaring to -1 (e_1..e_p), q squaring to +1 (f_1..f_q),
// pairwise anti-commuting.
struct CliffordSignature {
  size_t p = 0;
  size_t q = 0;

  size_t total() const { return p + q; }
  // degree of the shift realized by this signature
  long degree() const { return static_cast<long>(p) - static_cast<long>(q); }
  bool operator==(const CliffordSignature& o) const {
    return p == o.p && q == o.q;
  }
};

struct CliffordReport {
  bool ok = true;
  std::string message;
};

// actions = odd operators, e-generators first then f-generators; checks
// squares and pairwise anti-commutators against the signature.
CliffordReport clifford_relation_check(const CliffordSignature& sig,
                                       const std::vector<ExactMatrix>& actions);

// U(g) super-tensor Cl(p,q): Clifford generators are odd and supercommute
// with g. Relations are enforced at module validation time.
struct ShiftedContext {
  LieSuperAlgebra algebra;
  CliffordSignature signature;

  FieldTag field() const { return algebra.field; }
  bool operator==(const ShiftedContext& o) const {
    return algebra == o.algebra && signature == o.signature;
  }
};

LieSuperAlgebra builtin_trivial(FieldTag field);
LieSuperAlgebra builtin_q1(FieldTag field);  // [Q,Q] = 2H

// name: "trivial", "q1", or "clifford:p,q"
ShiftedContext builtin_context(const std::string& name, FieldTag field);

}  // namespace srep
