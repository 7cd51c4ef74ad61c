#pragma once

#include "superrep/supermodule.hpp"

namespace srep {

struct CompositionFactor {
  SuperModule module;
  size_t multiplicity = 1;
  // set when the commutant analysis pins the factor down; otherwise the
  // factor is presumed irreducible (search budget exhausted)
  bool certified = false;
  std::string note;
};

struct CompositionReport {
  std::vector<CompositionFactor> factors;

  size_t total_dimension() const;
};

// Splits along invariant subspaces found by deterministic cyclic closures
// (single basis vectors, then +-1 sums of 2 and 3), then singular elements
// of the commutant, then seeded random vectors; recurses on submodule and
// quotient.
CompositionReport composition_factors(const SuperModule& m,
                                      unsigned rng_seed = 12345);

enum class RealDivision { R, C, H, NotApplicable };

struct IrreducibleTag {
  bool type_q = false;  // nonzero odd commutant
  RealDivision division = RealDivision::NotApplicable;
  bool self_dual = false;
  InvolutionVerdict involution = InvolutionVerdict::No;
};

// Tags a (certified or presumed) irreducible graded module. Throws when the
// commutant shows the input is not irreducible over the modeled field
// ("input not R-irreducible" over RealQ).
IrreducibleTag classify_irreducible(const SuperModule& m);

// Explicit rational matrix models of the irreducible Cl(p,q)-modules over
// the trivial algebra, p + q <= 9. The recursion path is fixed:
//   real ungraded:
//     base (0,0), (1,0) rotation, (2,0) left quaternions, (0,1) f = +-1;
//     p,q >= 1      : Cl(p,q)   = Cl(p-1,q-1) (x) Cl(1,1)
//     p = 0, q >= 2 : Cl(0,q)   = Cl(q-2,0)   (x) Cl(0,2)
//     p >= 3, q = 0 : Cl(p,0)   = Cl(0,p-2)   (x) Cl(2,0), split along the
//                     tracked commutant of the smaller module
//   complex ungraded: base n = 0, 1; Cl(n) = Cl(n-2) (x) Cl(2)
//   graded: regrade of the ungraded (p,q+1) list (real) or (p+1,q) list
//   (complex), consuming the last appended generator as the grading.
std::vector<SuperModule> clifford_irreducibles(size_t p, size_t q,
                                               FieldTag field, bool graded);

struct ShiftOutput {
  std::vector<SuperModule> modules;
  std::vector<std::string> notes;  // e.g. square-root obstructions
};

// Complex degree shift: type M pairs {M, M^Pi} contribute M + M^Pi with the
// extra Clifford generator alpha (-1)^F, type Q modules contribute the pair
// Q+- with e = +-(-1)^F alpha for the normalized odd involution alpha.
ShiftOutput shift_irreducibles(const std::vector<SuperModule>& degree_n);

}  // namespace srep
