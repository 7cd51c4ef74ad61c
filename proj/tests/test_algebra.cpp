#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "superrep/algebra.hpp"

using namespace srep;

namespace {

ExactMatrix qmat(size_t n, std::initializer_list<long> entries,
                 FieldTag f = FieldTag::RealQ) {
  ExactMatrix m(n, n, f);
  size_t k = 0;
  for (long e : entries) {
    m.at(k / n, k % n) = GRat(e);
    ++k;
  }
  return m;
}

// re-evaluate a reported Jacobi violation from the structure constants
bool violation_is_genuine(const LieSuperAlgebra& g, size_t i, size_t j,
                          size_t k) {
  const size_t n = g.dim();
  int sgn = koszul_sign(g.parity_of(i), g.parity_of(j));
  for (size_t t = 0; t < n; ++t) {
    GRat lhs, rhs;
    for (size_t m = 0; m < n; ++m) {
      lhs += g.coeff(j, k, m) * g.coeff(i, m, t);
      rhs += g.coeff(i, j, m) * g.coeff(m, k, t);
      rhs += GRat(sgn) * g.coeff(i, k, m) * g.coeff(j, m, t);
    }
    if (lhs != rhs) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("builtin q1 passes the Jacobi check") {
  LieSuperAlgebra q1 = builtin_q1(FieldTag::ComplexQi);
  CHECK(q1.dim() == 2);
  CHECK(q1.coeff(1, 1, 0) == GRat(2));  // [Q,Q] = 2H
  CHECK(check_jacobi(q1).ok);
}

TEST_CASE("abelian even algebra passes") {
  LieSuperAlgebra g = make_algebra(FieldTag::RealQ, {"X", "Y"}, {});
  CHECK(check_jacobi(g).ok);
}

TEST_CASE("corrupted q1 fails with a genuine violation") {
  LieSuperAlgebra g = builtin_q1(FieldTag::ComplexQi);
  g.c[0][1][1] = GRat(1);   // [H,Q] = Q
  g.c[1][0][1] = GRat(-1);  // keep antisymmetry intact
  JacobiReport rep = check_jacobi(g);
  CHECK(!rep.ok);
  CHECK(violation_is_genuine(g, rep.i, rep.j, rep.k));
}

TEST_CASE("antisymmetry violations are reported") {
  LieSuperAlgebra g = builtin_q1(FieldTag::ComplexQi);
  g.c[0][1][1] = GRat(1);  // mirror bracket left at zero
  JacobiReport rep = check_jacobi(g);
  CHECK(!rep.ok);
  CHECK(rep.message.find("antisymmetry") != std::string::npos);
}

TEST_CASE("bar negates the odd-odd brackets") {
  LieSuperAlgebra q1 = builtin_q1(FieldTag::ComplexQi);
  LieSuperAlgebra b = bar(q1);
  CHECK(b.coeff(1, 1, 0) == GRat(-2));
  CHECK(check_jacobi(b).ok);
  CHECK(bar(b) == q1);
  LieSuperAlgebra even = make_algebra(FieldTag::RealQ, {"X"}, {});
  CHECK(bar(even) == even);
}

TEST_CASE("bar preserves Jacobi on scaled q1 variants") {
  for (long c : {1L, 3L, -2L, 5L}) {
    LieSuperAlgebra g = builtin_q1(FieldTag::ComplexQi);
    g.c[1][1][0] = GRat(c);
    REQUIRE(check_jacobi(g).ok);
    CHECK(check_jacobi(bar(g)).ok);
  }
}

TEST_CASE("clifford relation check") {
  // Cl(1,0) on (1|1): rotation squares to -1
  CHECK(clifford_relation_check({1, 0}, {qmat(2, {0, -1, 1, 0})}).ok);
  // Cl(0,1): swap squares to +1
  CHECK(clifford_relation_check({0, 1}, {qmat(2, {0, 1, 1, 0})}).ok);
  // Cl(1,1) with commuting generators fails: e = rot (x) I, f = I (x) swap
  ExactMatrix e = qmat(4, {0, 0, -1, 0,
                           0, 0, 0, -1,
                           1, 0, 0, 0,
                           0, 1, 0, 0});
  ExactMatrix f = qmat(4, {0, 1, 0, 0,
                           1, 0, 0, 0,
                           0, 0, 0, 1,
                           0, 0, 1, 0});
  auto rep = clifford_relation_check({1, 1}, {e, f});
  CHECK(!rep.ok);
  CHECK(rep.message.find("anti-commute") != std::string::npos);
  // wrong square sign
  CHECK(!clifford_relation_check({1, 0}, {qmat(2, {0, 1, 1, 0})}).ok);
}

TEST_CASE("builtin contexts") {
  ShiftedContext t = builtin_context("trivial", FieldTag::RealQ);
  CHECK(t.algebra.dim() == 0);
  CHECK(t.signature.total() == 0);
  ShiftedContext q = builtin_context("q1", FieldTag::ComplexQi);
  CHECK(q.algebra.names == std::vector<std::string>{"H", "Q"});
  ShiftedContext c = builtin_context("clifford:1,1", FieldTag::RealQ);
  CHECK(c.signature == CliffordSignature{1, 1});
  CHECK_THROWS(builtin_context("nope", FieldTag::RealQ));
}
