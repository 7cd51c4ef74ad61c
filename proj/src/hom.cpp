#include <stdexcept>

#include "superrep/supermodule.hpp"

namespace srep {

namespace {

void require_comparable(const SuperModule& v, const SuperModule& w) {
  if (!(v.context == w.context))
    throw std::invalid_argument("modules live over different contexts");
  if (v.graded != w.graded)
    throw std::invalid_argument("graded/ungraded mismatch");
  if (v.field() != w.field())
    throw std::invalid_argument("field mismatch");
}

}  // namespace

HomSpace hom_space(const SuperModule& v, const SuperModule& w, Parity parity) {
  require_comparable(v, w);
  const size_t dv = v.dim(), dw = w.dim();
  // unknowns: the entries of T allowed by the block pattern
  std::vector<std::pair<size_t, size_t>> slots;
  for (size_t i = 0; i < dw; ++i)
    for (size_t j = 0; j < dv; ++j) {
      if (v.graded &&
          parity_add(w.space.parity_of(i), v.space.parity_of(j)) != parity)
        continue;
      slots.emplace_back(i, j);
    }
  std::vector<std::vector<size_t>> slot_of(dw, std::vector<size_t>(dv, SIZE_MAX));
  for (size_t s = 0; s < slots.size(); ++s)
    slot_of[slots[s].first][slots[s].second] = s;

  auto ops_v = v.all_operators();
  auto ops_w = w.all_operators();
  ExactMatrix system(ops_v.size() * dw * dv, slots.size(), v.field());
  size_t row = 0;
  for (size_t op = 0; op < ops_v.size(); ++op) {
    const ExactMatrix& av = *ops_v[op];
    const ExactMatrix& aw = *ops_w[op];
    for (size_t i = 0; i < dw; ++i)
      for (size_t j = 0; j < dv; ++j, ++row) {
        // (T av - aw T)[i,j] = 0
        for (size_t k = 0; k < dv; ++k)
          if (slot_of[i][k] != SIZE_MAX && !av.at(k, j).is_zero())
            system.at(row, slot_of[i][k]) += av.at(k, j);
        for (size_t k = 0; k < dw; ++k)
          if (slot_of[k][j] != SIZE_MAX && !aw.at(i, k).is_zero())
            system.at(row, slot_of[k][j]) -= aw.at(i, k);
      }
  }
  ExactMatrix null = mat_kernel(system);
  HomSpace hs;
  hs.parity = parity;
  for (size_t c = 0; c < null.cols(); ++c) {
    ExactMatrix t(dw, dv, v.field());
    for (size_t s = 0; s < slots.size(); ++s)
      t.at(slots[s].first, slots[s].second) = null.at(s, c);
    hs.basis.push_back(std::move(t));
  }
  return hs;
}

namespace {

std::optional<ExactMatrix> invertible_or_null(const ExactMatrix& t) {
  if (mat_det(t).is_zero()) return std::nullopt;
  return t;
}

std::vector<GRat> unit_coeffs(FieldTag field) {
  std::vector<GRat> c{GRat(1), GRat(-1)};
  if (field == FieldTag::ComplexQi) {
    c.push_back(grat_i());
    c.push_back(-grat_i());
  }
  return c;
}

}  // namespace

IsoResult iso_test(const SuperModule& v, const SuperModule& w) {
  require_comparable(v, w);
  if (v.graded) {
    if (v.space.dim_even != w.space.dim_even ||
        v.space.dim_odd != w.space.dim_odd)
      return {IsoVerdict::NotIsomorphic, std::nullopt};
  } else if (v.dim() != w.dim()) {
    return {IsoVerdict::NotIsomorphic, std::nullopt};
  }
  if (v.dim() == 0)
    return {IsoVerdict::Isomorphic, ExactMatrix(0, 0, v.field())};

  HomSpace hom = hom_space(v, w, Parity::Even);
  if (hom.dim() == 0) return {IsoVerdict::NotIsomorphic, std::nullopt};

  for (const auto& t : hom.basis)
    if (auto wit = invertible_or_null(t)) return {IsoVerdict::Isomorphic, wit};

  auto units = unit_coeffs(v.field());
  for (size_t i = 0; i < hom.dim(); ++i)
    for (size_t j = i + 1; j < hom.dim(); ++j)
      for (const auto& a : units)
        for (const auto& b : units) {
          ExactMatrix t = hom.basis[i].scaled(a) + hom.basis[j].scaled(b);
          if (auto wit = invertible_or_null(t))
            return {IsoVerdict::Isomorphic, wit};
        }

  if (hom.dim() == 1) return {IsoVerdict::NotIsomorphic, std::nullopt};
  if (hom.dim() == 2) {
    // det(B0 + t B1) has degree <= dim; if it vanishes at dim+1 points and
    // B1 is singular, the whole pencil is singular.
    const size_t n = v.dim();
    for (long t = 0; t <= static_cast<long>(n); ++t) {
      ExactMatrix cand = hom.basis[0] + hom.basis[1].scaled(GRat(rat(t)));
      if (auto wit = invertible_or_null(cand))
        return {IsoVerdict::Isomorphic, wit};
    }
    return {IsoVerdict::NotIsomorphic, std::nullopt};
  }
  return {IsoVerdict::Undecided, std::nullopt};
}

namespace {

// x^2 for x in the span of basis, as a quadratic form in the coefficients,
// when every product lands in the scalars; nullopt otherwise.
struct SquareForm {
  std::vector<GRat> diag;                 // coefficient of a_i^2
  std::vector<std::vector<GRat>> cross;   // coefficient of a_i a_j, i < j
};

std::optional<GRat> as_scalar(const ExactMatrix& m) {
  GRat c = m.at(0, 0);
  ExactMatrix expect = ExactMatrix::identity(m.rows(), m.field()).scaled(c);
  if (m == expect) return c;
  return std::nullopt;
}

std::optional<SquareForm> square_form(const std::vector<ExactMatrix>& basis) {
  SquareForm f;
  f.diag.resize(basis.size());
  f.cross.assign(basis.size(), std::vector<GRat>(basis.size()));
  for (size_t i = 0; i < basis.size(); ++i) {
    auto c = as_scalar(basis[i] * basis[i]);
    if (!c) return std::nullopt;
    f.diag[i] = *c;
    for (size_t j = i + 1; j < basis.size(); ++j) {
      auto s = as_scalar(basis[i] * basis[j] + basis[j] * basis[i]);
      if (!s) return std::nullopt;
      f.cross[i][j] = *s;
    }
  }
  return f;
}

GRat eval_form(const SquareForm& f, const std::vector<Rational>& a) {
  GRat out;
  for (size_t i = 0; i < f.diag.size(); ++i) {
    out += f.diag[i] * GRat(a[i] * a[i]);
    for (size_t j = i + 1; j < f.diag.size(); ++j)
      out += f.cross[i][j] * GRat(a[i] * a[j]);
  }
  return out;
}

}  // namespace

InvolutionResult involution_exists(const SuperModule& v) {
  if (!v.graded)
    throw std::invalid_argument("involution_exists needs a graded module");
  HomSpace odd = hom_space(v, v, Parity::Odd);
  if (odd.dim() == 0) return {InvolutionVerdict::No, std::nullopt, std::nullopt};
  const bool complex = v.field() == FieldTag::ComplexQi;

  auto qualifies = [&](const GRat& c) {
    if (complex) return !c.is_zero();
    return c.is_real() && c.re > 0;
  };

  // any single element or unit-coefficient pair with a qualifying scalar
  // square settles it
  for (const auto& b : odd.basis)
    if (auto c = as_scalar(b * b); c && qualifies(*c))
      return {InvolutionVerdict::Yes, b, *c};
  const std::vector<GRat> units =
      complex ? std::vector<GRat>{GRat(1), GRat(-1), grat_i(), -grat_i()}
              : std::vector<GRat>{GRat(1), GRat(-1)};
  for (size_t i = 0; i < odd.dim(); ++i)
    for (size_t j = i + 1; j < odd.dim(); ++j)
      for (const auto& a : units)
        for (const auto& b : units) {
          ExactMatrix cand = odd.basis[i].scaled(a) + odd.basis[j].scaled(b);
          if (auto c = as_scalar(cand * cand); c && qualifies(*c))
            return {InvolutionVerdict::Yes, cand, *c};
        }

  if (odd.dim() > 2)
    return {InvolutionVerdict::Undecided, std::nullopt, std::nullopt};
  auto form = square_form(odd.basis);
  if (!form)
    return {InvolutionVerdict::Undecided, std::nullopt, std::nullopt};

  std::vector<std::vector<Rational>> points;
  if (odd.dim() == 1) {
    points = {{rat(1)}};
  } else {
    points = {{rat(1), rat(0)}, {rat(0), rat(1)}, {rat(1), rat(1)},
              {rat(1), rat(-1)}, {rat(1), rat(2)}, {rat(2), rat(1)},
              {rat(1), rat(-2)}, {rat(2), rat(-1)}};
    // vertex of q(1,t) along the second coordinate, where the maximum sits
    const GRat& c2 = form->diag[1];
    const GRat& c12 = form->cross[0][1];
    if (!c2.is_zero() && c2.is_real() && c12.is_real())
      points.push_back({rat(1), -c12.re / (2 * c2.re)});
    else if (c2.is_zero() && !c12.is_zero() && c12.is_real() &&
             form->diag[0].is_real())
      points.push_back({rat(1), (1 - form->diag[0].re) / c12.re});
  }
  for (const auto& a : points) {
    GRat val = eval_form(*form, a);
    if (!qualifies(val)) continue;
    ExactMatrix elt = odd.basis[0].scaled(GRat(a[0]));
    for (size_t i = 1; i < odd.basis.size(); ++i)
      elt = elt + odd.basis[i].scaled(GRat(a[i]));
    return {InvolutionVerdict::Yes, elt, val};
  }
  return {InvolutionVerdict::No, std::nullopt, std::nullopt};
}

}  // namespace srep
