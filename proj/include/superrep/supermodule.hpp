#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superrep/algebra.hpp"

namespace srep {

// A representation of U(g) super-tensor Cl(p,q) on exact matrices.
// Graded modules keep the even-block-first basis convention of SuperSpace;
// ungraded modules live on (d|0) with no block constraints.
struct SuperModule {
  ShiftedContext context;
  SuperSpace space;
  bool graded = true;
  std::vector<ExactMatrix> g_action;  // one per algebra generator
  std::vector<ExactMatrix> e_action;  // signature.p entries, squares -1
  std::vector<ExactMatrix> f_action;  // signature.q entries, squares +1

  size_t dim() const { return space.dim(); }
  FieldTag field() const { return context.field(); }
  ExactMatrix grading() const { return grading_operator(space); }

  // g-generators with odd parity plus every Clifford generator.
  std::vector<const ExactMatrix*> odd_operators() const;
  std::vector<const ExactMatrix*> all_operators() const;
};

SuperModule make_zero_module(const ShiftedContext& ctx, bool graded);

struct ValidationReport {
  bool ok = true;
  std::string message;
};

// Bracket compatibility, Clifford relations, supercommutation, and (graded)
// parity block patterns, all exact; reports the first failure found.
ValidationReport validate_module(const SuperModule& m);

SuperModule direct_sum_modules(const SuperModule& a, const SuperModule& b);

// Conjugate every action by T (columns of T = new basis in old coordinates);
// the caller supplies the parity split of the new basis.
SuperModule change_basis(const SuperModule& m, const ExactMatrix& t,
                         const SuperSpace& new_space, bool graded);

// Right parity reversal: blocks swapped, action matrices transported with
// no sign changes.
SuperModule parity_reverse(const SuperModule& m);

// Negates every odd acting operator (odd g-generators and Clifford).
SuperModule conjugate(const SuperModule& m);

// Forgets the grading; same signature, dim x 0 split.
SuperModule forget_grading(const SuperModule& m);

// Delta-tilde: ungraded over (p,q) -> graded over (p+1,q) on U + U; the new
// generator e_{p+1} = [[0,-Id],[Id,0]] is appended last.
SuperModule diag_lift(const SuperModule& m);

// p_0: graded over (p+1,q) -> ungraded over (p,q) using alpha = e_last (-1)^F;
// exact inverse of diag_lift on its image.
SuperModule project_even(const SuperModule& m);

// Delta = restrict_generator(diag_lift(u)).
SuperModule plain_delta(const SuperModule& m);

// i*: drops the last e-generator action.
SuperModule restrict_generator(const SuperModule& m);

// Real field: the grading exchanged with an f-generator; complex field:
// with an e-generator via i (-1)^F.
SuperModule degrade(const SuperModule& m);  // graded (p,q) -> ungraded
SuperModule regrade(const SuperModule& m);  // ungraded -> graded

// Graded (g,(p,q))-module -> graded (gbar,(q,p))-module on the same space:
// odd actions composed with the grading operator.
SuperModule bar_module(const SuperModule& m, const LieSuperAlgebra& gbar);

// Graded tensor product; signatures add, first-factor Clifford generators
// act on the first slot, second-factor generators pick up a grading twist.
SuperModule tensor_modules(const SuperModule& v, const SuperModule& w);

// U boxtimes W = (Delta U) (x) W regraded by [[0, i Id],[-i Id, 0]].
SuperModule boxtimes(const SuperModule& u, const SuperModule& w);

// Morita reduction along Cl(2) (complex, p >= 2) or Cl(1,1) (real, p,q >= 1):
// consumes the last generators, halves the dimension.
SuperModule morita_reduce(const SuperModule& m);

// The reverse embedding, doubling the dimension; morita_reduce of the result
// returns the input on the nose.
SuperModule morita_embed(const SuperModule& m);

struct HomSpace {
  Parity parity = Parity::Even;
  std::vector<ExactMatrix> basis;  // plain-commuting maps source -> target

  size_t dim() const { return basis.size(); }
};

// All T with T rho_v(a) = rho_w(a) T for every acting operator a, restricted
// to the requested parity block pattern (ungraded modules: no pattern).
HomSpace hom_space(const SuperModule& v, const SuperModule& w, Parity parity);

enum class IsoVerdict { Isomorphic, NotIsomorphic, Undecided };

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::NotIsomorphic;
  std::optional<ExactMatrix> witness;  // invertible equivariant map v -> w

  bool yes() const { return verdict == IsoVerdict::Isomorphic; }
};

// Searches the even hom space for an invertible element: single basis
// elements, +-1/+-i pairs, then a determinant-polynomial sweep that decides
// exactly when the hom space has dimension <= 2.
IsoResult iso_test(const SuperModule& v, const SuperModule& w);

enum class InvolutionVerdict { Yes, No, Undecided };

struct InvolutionResult {
  InvolutionVerdict verdict = InvolutionVerdict::No;
  std::optional<ExactMatrix> element;  // A in the odd commutant
  std::optional<GRat> square;          // c with A^2 = c Id
};

// Decides existence of an equivariant parity reversing involution over the
// modeled ground field (R or C): the square map on the odd commutant span
// must represent a nonzero (complex) or positive (real) scalar.
InvolutionResult involution_exists(const SuperModule& v);

}  // namespace srep
