#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace srep;
using namespace srep::testsupport;

namespace {
const FieldTag C = FieldTag::ComplexQi;
const FieldTag R = FieldTag::RealQ;

// classical table: number of ungraded irreducible real Cl(p,0)-modules and
// their dimensions, from Cl(p,0) = R, C, H, H+H, H(2), C(4), R(8), R(8)+R(8),
// R(16), C(16) for p = 0..9
struct Row {
  size_t count;
  size_t dim;
};
constexpr Row kRealTable[10] = {{1, 1}, {1, 2}, {1, 4}, {2, 4}, {1, 8},
                                {1, 8}, {1, 8}, {2, 8}, {1, 16}, {1, 32}};

}  // namespace

TEST_CASE("composition of I + Pi") {
  SuperModule s =
      direct_sum_modules(q1_trivial(false, C), q1_trivial(true, C));
  CompositionReport rep = composition_factors(s);
  REQUIRE(rep.factors.size() == 2);
  CHECK(rep.total_dimension() == 2);
  bool has_even = false, has_odd = false;
  for (const auto& f : rep.factors) {
    CHECK(f.multiplicity == 1);
    CHECK(f.certified);
    CHECK(validate_module(f.module).ok);
    has_even = has_even || f.module.space.dim_even == 1;
    has_odd = has_odd || f.module.space.dim_odd == 1;
  }
  CHECK(has_even);
  CHECK(has_odd);
}

TEST_CASE("Delta C_2 is irreducible and isomorphic to L_4") {
  SuperModule d = plain_delta(q1_C(GRat(2), C));
  CompositionReport rep = composition_factors(d);
  REQUIRE(rep.factors.size() == 1);
  CHECK(rep.factors[0].multiplicity == 1);
  CHECK(rep.factors[0].certified);
  CHECK(iso_test(rep.factors[0].module, q1_L(GRat(4), GRat(2), C)).yes());
}

TEST_CASE("complex graded Cl(1) regular module is irreducible") {
  auto irreps = clifford_irreducibles(1, 0, C, true);
  REQUIRE(irreps.size() == 1);
  CompositionReport rep = composition_factors(irreps[0]);
  CHECK(rep.factors.size() == 1);
  CHECK(rep.factors[0].certified);
}

TEST_CASE("scrambled sums decompose with the right multiplicities") {
  std::mt19937 rng(321);
  SuperModule l4 = q1_L(GRat(4), GRat(2), C);
  SuperModule sum = direct_sum_modules(direct_sum_modules(l4, l4),
                                       q1_trivial(false, C));
  SuperModule s = scramble(sum, rng);
  CompositionReport rep = composition_factors(s);
  CHECK(rep.total_dimension() == 5);
  bool found_l4 = false;
  for (const auto& f : rep.factors)
    if (f.module.dim() == 2) {
      CHECK(f.multiplicity == 2);
      CHECK(iso_test(f.module, l4).yes());
      found_l4 = true;
    }
  CHECK(found_l4);
}

TEST_CASE("classify the q1 irreducibles") {
  IrreducibleTag i_tag = classify_irreducible(q1_trivial(false, C));
  CHECK(!i_tag.type_q);
  CHECK(!i_tag.self_dual);
  CHECK(i_tag.involution == InvolutionVerdict::No);

  IrreducibleTag l_tag = classify_irreducible(q1_L(GRat(4), GRat(2), C));
  CHECK(l_tag.type_q);
  CHECK(l_tag.self_dual);
  CHECK(l_tag.involution == InvolutionVerdict::Yes);
}

TEST_CASE("classify the real graded Cl(1,0) module") {
  SuperModule v;
  v.context = ShiftedContext{builtin_trivial(R), {1, 0}};
  v.space = SuperSpace{1, 1, R};
  v.graded = true;
  v.e_action.push_back(qm(2, {0, -1, 1, 0}, R));
  IrreducibleTag tag = classify_irreducible(v);
  CHECK(tag.self_dual);
  CHECK(tag.involution == InvolutionVerdict::No);
  CHECK(tag.type_q);
  CHECK(tag.division == RealDivision::R);
}

TEST_CASE("Q^2 = 2 over R is still R-irreducible of type Q") {
  // the odd involution is Q / sqrt(2), which exists over R
  SuperModule s;
  s.context = ShiftedContext{builtin_q1(R), {0, 0}};
  s.space = SuperSpace{1, 1, R};
  s.graded = true;
  s.g_action = {qm(2, {2, 0, 0, 2}, R), qm(2, {0, 1, 2, 0}, R)};
  REQUIRE(validate_module(s).ok);
  IrreducibleTag tag = classify_irreducible(s);
  CHECK(tag.type_q);
  CHECK(tag.involution == InvolutionVerdict::Yes);
  CHECK(tag.division == RealDivision::R);
}

TEST_CASE("classify rejects the real split case") {
  // an even generator acting with eigenvalues +-sqrt(2): the commutant is
  // the real quadratic field Q(sqrt 2), Q-irreducible but not R-irreducible
  LieSuperAlgebra g = make_algebra(R, {"X"}, {});
  SuperModule s;
  s.context = ShiftedContext{g, {0, 0}};
  s.space = SuperSpace{2, 0, R};
  s.graded = true;
  s.g_action = {qm(2, {0, 1, 2, 0}, R)};
  REQUIRE(validate_module(s).ok);
  CompositionReport rep = composition_factors(s);
  REQUIRE(rep.factors.size() == 1);  // nothing splits over Q
  CHECK(rep.factors[0].multiplicity == 1);
  CHECK_THROWS_WITH_AS(classify_irreducible(s),
                       doctest::Contains("not R-irreducible"),
                       std::domain_error);
}

TEST_CASE("ungraded real Clifford irreducibles match the classical table") {
  for (size_t p = 0; p <= 9; ++p) {
    auto irreps = clifford_irreducibles(p, 0, R, false);
    CHECK(irreps.size() == kRealTable[p].count);
    for (const auto& m : irreps) {
      CHECK(m.dim() == kRealTable[p].dim);
      CHECK(validate_module(m).ok);
    }
    if (irreps.size() == 2)
      CHECK(!iso_test(irreps[0], irreps[1]).yes());
  }
}

TEST_CASE("ungraded Cl(1,0) and Cl(0,1) exact models") {
  auto rot = clifford_irreducibles(1, 0, R, false);
  REQUIRE(rot.size() == 1);
  CHECK(rot[0].e_action[0] == qm(2, {0, -1, 1, 0}, R));
  auto pm = clifford_irreducibles(0, 1, R, false);
  REQUIRE(pm.size() == 2);
  CHECK(pm[0].f_action[0].at(0, 0) == GRat(1));
  CHECK(pm[1].f_action[0].at(0, 0) == GRat(-1));
}

TEST_CASE("mixed signatures through the (1,1) recursion") {
  auto irreps = clifford_irreducibles(2, 2, R, false);
  // Cl(2,2) = R(4): one irreducible of dimension 4
  REQUIRE(irreps.size() == 1);
  CHECK(irreps[0].dim() == 4);
  CHECK(validate_module(irreps[0]).ok);
  auto c03 = clifford_irreducibles(0, 3, R, false);
  // Cl(0,3) = C(2): one irreducible of dimension 4
  REQUIRE(c03.size() == 1);
  CHECK(c03[0].dim() == 4);
}

TEST_CASE("graded real Clifford irreducibles reproduce the ABS pattern") {
  const size_t counts[9] = {2, 1, 1, 1, 2, 1, 1, 1, 2};
  const size_t half_dims[9] = {1, 1, 2, 4, 4, 8, 8, 8, 8};
  for (size_t n = 0; n <= 8; ++n) {
    auto irreps = clifford_irreducibles(n, 0, R, true);
    CHECK(irreps.size() == counts[n]);
    for (const auto& m : irreps) {
      CHECK(validate_module(m).ok);
      CHECK(m.graded);
      if (n == 0) {
        CHECK(m.dim() == 1);
      } else {
        CHECK(m.space.dim_even == half_dims[n]);
        CHECK(m.space.dim_odd == half_dims[n]);
      }
    }
  }
}

TEST_CASE("complex Clifford irreducible counts alternate") {
  for (size_t n = 0; n <= 6; ++n) {
    auto ungraded = clifford_irreducibles(n, 0, C, false);
    CHECK(ungraded.size() == (n % 2 == 0 ? 1 : 2));
    auto graded = clifford_irreducibles(n, 0, C, true);
    CHECK(graded.size() == (n % 2 == 0 ? 2 : 1));
    for (const auto& m : graded) CHECK(validate_module(m).ok);
    if (graded.size() == 2) {
      // the even-degree pair is exchanged by parity reversal
      CHECK(!iso_test(graded[0], graded[1]).yes());
      CHECK(iso_test(parity_reverse(graded[0]), graded[1]).yes());
    }
  }
}

TEST_CASE("ungraded Cl(8,0) has one irreducible of dimension 16") {
  auto irreps = clifford_irreducibles(8, 0, R, false);
  REQUIRE(irreps.size() == 1);
  CHECK(irreps[0].dim() == 16);
}

TEST_CASE("shift of the trivial degree-0 registry") {
  auto deg0 = clifford_irreducibles(0, 0, C, true);  // I and Pi
  REQUIRE(deg0.size() == 2);
  ShiftOutput shifted = shift_irreducibles(deg0);
  CHECK(shifted.notes.empty());
  REQUIRE(shifted.modules.size() == 1);
  const SuperModule& m = shifted.modules[0];
  CHECK(m.space == SuperSpace{1, 1, C});
  CHECK(m.context.signature.p == 1);
  CHECK(validate_module(m).ok);
  auto deg1 = clifford_irreducibles(1, 0, C, true);
  REQUIRE(deg1.size() == 1);
  CHECK(iso_test(m, deg1[0]).yes());
}

TEST_CASE("shift of q1 degree 0 gives the Q+- pairs") {
  std::vector<SuperModule> deg0 = {q1_trivial(false, C), q1_trivial(true, C),
                                   q1_L(GRat(4), GRat(2), C)};
  ShiftOutput shifted = shift_irreducibles(deg0);
  CHECK(shifted.notes.empty());
  REQUIRE(shifted.modules.size() == 3);  // I+Pi, L4+, L4-
  size_t q_count = 0;
  std::vector<const SuperModule*> qpair;
  for (const auto& m : shifted.modules) {
    CHECK(validate_module(m).ok);
    if (m.dim() == 2 && !m.g_action[0].is_zero()) {
      ++q_count;
      qpair.push_back(&m);
    }
  }
  REQUIRE(q_count == 2);
  // Q+ and Q- are distinct, but Q+ = Pi(Q-) through the odd involution
  CHECK(!iso_test(*qpair[0], *qpair[1]).yes());
  CHECK(iso_test(*qpair[0], parity_reverse(*qpair[1])).yes());
}

TEST_CASE("double shift then Morita reduction returns to degree 0") {
  auto deg0 = clifford_irreducibles(0, 0, C, true);
  ShiftOutput once = shift_irreducibles(deg0);
  ShiftOutput twice = shift_irreducibles(once.modules);
  REQUIRE(twice.modules.size() == 2);
  for (const auto& m : twice.modules) {
    REQUIRE(validate_module(m).ok);
    SuperModule reduced = morita_reduce(m);
    CHECK(reduced.context.signature.total() == 0);
    bool is_i = iso_test(reduced, deg0[0]).yes();
    bool is_pi = iso_test(reduced, deg0[1]).yes();
    CHECK((is_i || is_pi));
  }
}
