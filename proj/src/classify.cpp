#include "superrep/classify.hpp"

#include <random>
#include <stdexcept>

namespace srep {

size_t CompositionReport::total_dimension() const {
  size_t d = 0;
  for (const auto& f : factors) d += f.module.dim() * f.multiplicity;
  return d;
}

namespace {

// Incremental row-reduced span with exact membership tests.
class Span {
 public:
  explicit Span(size_t dim, FieldTag field) : dim_(dim), field_(field) {}

  size_t size() const { return rows_.size(); }

  // returns true when the vector enlarged the span
  bool add(std::vector<GRat> v) {
    reduce(v);
    size_t lead = dim_;
    for (size_t j = 0; j < dim_; ++j)
      if (!v[j].is_zero()) {
        lead = j;
        break;
      }
    if (lead == dim_) return false;
    GRat inv = GRat(1) / v[lead];
    for (size_t j = lead; j < dim_; ++j) v[j] = v[j] * inv;
    for (auto& r : rows_)
      if (!r.second[lead].is_zero()) {
        GRat f = r.second[lead];
        for (size_t j = lead; j < dim_; ++j)
          r.second[j] = r.second[j] - f * v[j];
      }
    rows_.emplace_back(lead, std::move(v));
    return true;
  }

  ExactMatrix basis_columns() const {
    ExactMatrix b(dim_, rows_.size(), field_);
    for (size_t k = 0; k < rows_.size(); ++k)
      for (size_t j = 0; j < dim_; ++j) b.at(j, k) = rows_[k].second[j];
    return b;
  }

 private:
  void reduce(std::vector<GRat>& v) const {
    for (const auto& [lead, row] : rows_) {
      if (v[lead].is_zero()) continue;
      GRat f = v[lead];
      for (size_t j = lead; j < dim_; ++j) v[j] = v[j] - f * row[j];
    }
  }

  size_t dim_;
  FieldTag field_;
  std::vector<std::pair<size_t, std::vector<GRat>>> rows_;
};

std::vector<GRat> apply_op(const ExactMatrix& op, const std::vector<GRat>& v) {
  std::vector<GRat> out(op.rows());
  for (size_t i = 0; i < op.rows(); ++i)
    for (size_t j = 0; j < op.cols(); ++j)
      if (!op.at(i, j).is_zero()) out[i] += op.at(i, j) * v[j];
  return out;
}

// Smallest invariant (and graded, when applicable) subspace containing
// seed; gives up early once the closure saturates the whole space.
ExactMatrix cyclic_closure(const SuperModule& m, const std::vector<GRat>& seed) {
  std::vector<ExactMatrix> gens;
  for (const auto* op : m.all_operators()) gens.push_back(*op);
  if (m.graded) gens.push_back(m.grading());
  Span span(m.dim(), m.field());
  std::vector<std::vector<GRat>> frontier;
  if (span.add(seed)) frontier.push_back(seed);
  while (!frontier.empty() && span.size() < m.dim()) {
    std::vector<std::vector<GRat>> next;
    for (const auto& v : frontier) {
      for (const auto& g : gens) {
        auto w = apply_op(g, v);
        if (span.add(w)) next.push_back(std::move(w));
      }
      if (span.size() == m.dim()) break;
    }
    frontier = std::move(next);
  }
  return span.basis_columns();
}

// Columns of b span a subspace closed under the grading; returns a basis
// arranged even-block-first together with the block sizes.
std::pair<ExactMatrix, std::pair<size_t, size_t>> graded_arrange(
    const SuperModule& m, const ExactMatrix& b) {
  ExactMatrix g = m.grading();
  Span even(m.dim(), m.field()), odd(m.dim(), m.field());
  for (size_t c = 0; c < b.cols(); ++c) {
    std::vector<GRat> v(m.dim()), gv;
    for (size_t i = 0; i < m.dim(); ++i) v[i] = b.at(i, c);
    gv = apply_op(g, v);
    std::vector<GRat> ve(m.dim()), vo(m.dim());
    for (size_t i = 0; i < m.dim(); ++i) {
      GRat half(rat(1, 2));
      ve[i] = (v[i] + gv[i]) * half;
      vo[i] = (v[i] - gv[i]) * half;
    }
    even.add(std::move(ve));
    odd.add(std::move(vo));
  }
  if (even.size() + odd.size() != b.cols())
    throw std::logic_error("subspace is not graded");
  ExactMatrix be = even.basis_columns(), bo = odd.basis_columns();
  return {ExactMatrix::hstack(be, bo), {be.cols(), bo.cols()}};
}

// Extends the (arranged) subspace basis to a full basis using standard
// basis vectors of matching parity.
ExactMatrix complete_basis(const SuperModule& m, const ExactMatrix& sub,
                           size_t sub_even, SuperSpace& out_space,
                           std::vector<size_t>& sub_idx,
                           std::vector<size_t>& quot_idx) {
  const size_t d = m.dim();
  Span even(d, m.field()), odd(d, m.field());
  std::vector<std::vector<GRat>> even_cols, odd_cols;
  auto col_of = [&](const ExactMatrix& mat, size_t c) {
    std::vector<GRat> v(d);
    for (size_t i = 0; i < d; ++i) v[i] = mat.at(i, c);
    return v;
  };
  for (size_t c = 0; c < sub.cols(); ++c) {
    auto v = col_of(sub, c);
    if (c < sub_even) {
      even.add(v);
      even_cols.push_back(v);
    } else {
      odd.add(v);
      odd_cols.push_back(v);
    }
  }
  size_t d_even = m.graded ? m.space.dim_even : d;
  for (size_t i = 0; i < d; ++i) {
    std::vector<GRat> e(d);
    e[i] = GRat(1);
    if (i < d_even) {
      if (even.add(e)) even_cols.push_back(e);
    } else {
      if (odd.add(e)) odd_cols.push_back(e);
    }
  }
  ExactMatrix t(d, d, m.field());
  size_t col = 0;
  sub_idx.clear();
  quot_idx.clear();
  for (size_t k = 0; k < even_cols.size(); ++k, ++col) {
    for (size_t i = 0; i < d; ++i) t.at(i, col) = even_cols[k][i];
    (k < sub_even ? sub_idx : quot_idx).push_back(col);
  }
  size_t sub_odd = sub.cols() - sub_even;
  for (size_t k = 0; k < odd_cols.size(); ++k, ++col) {
    for (size_t i = 0; i < d; ++i) t.at(i, col) = odd_cols[k][i];
    (k < sub_odd ? sub_idx : quot_idx).push_back(col);
  }
  out_space = SuperSpace{even_cols.size(), odd_cols.size(), m.field()};
  return t;
}

struct SplitPair {
  SuperModule sub, quot;
};

SplitPair split_along(const SuperModule& m, const ExactMatrix& basis) {
  auto [arranged, blocks] = m.graded
                                ? graded_arrange(m, basis)
                                : std::make_pair(basis, std::make_pair(
                                                            basis.cols(),
                                                            size_t{0}));
  SuperSpace full_space;
  std::vector<size_t> sub_idx, quot_idx;
  ExactMatrix t =
      complete_basis(m, arranged, blocks.first, full_space, sub_idx, quot_idx);
  SuperModule whole = change_basis(m, t, full_space, m.graded);

  auto carve = [&](const std::vector<size_t>& idx) {
    SuperModule piece;
    piece.context = m.context;
    piece.graded = m.graded;
    size_t pe = 0;
    for (size_t i : idx)
      if (full_space.parity_of(i) == Parity::Even) ++pe;
    piece.space = m.graded ? SuperSpace{pe, idx.size() - pe, m.field()}
                           : SuperSpace{idx.size(), 0, m.field()};
    for (const auto& a : whole.g_action)
      piece.g_action.push_back(a.submatrix(idx, idx));
    for (const auto& e : whole.e_action)
      piece.e_action.push_back(e.submatrix(idx, idx));
    for (const auto& f : whole.f_action)
      piece.f_action.push_back(f.submatrix(idx, idx));
    return piece;
  };
  return {carve(sub_idx), carve(quot_idx)};
}

// Fixed deterministic order: single basis vectors, signed pairs, signed
// triples, capped so large modules fall through to the commutant stage.
std::vector<std::vector<GRat>> deterministic_seeds(size_t d) {
  constexpr size_t kSeedBudget = 400;
  std::vector<std::vector<GRat>> seeds;
  auto vec = [&](std::initializer_list<std::pair<size_t, long>> entries) {
    std::vector<GRat> v(d);
    for (auto [idx, c] : entries) v[idx] = GRat(c);
    return v;
  };
  for (size_t i = 0; i < d; ++i) seeds.push_back(vec({{i, 1}}));
  for (size_t i = 0; i < d && seeds.size() < kSeedBudget; ++i)
    for (size_t j = i + 1; j < d && seeds.size() < kSeedBudget; ++j) {
      seeds.push_back(vec({{i, 1}, {j, 1}}));
      seeds.push_back(vec({{i, 1}, {j, -1}}));
    }
  for (size_t i = 0; i < d && seeds.size() < kSeedBudget; ++i)
    for (size_t j = i + 1; j < d && seeds.size() < kSeedBudget; ++j)
      for (size_t k = j + 1; k < d && seeds.size() < kSeedBudget; ++k)
        for (long sj : {1L, -1L})
          for (long sk : {1L, -1L})
            seeds.push_back(vec({{i, 1}, {j, sj}, {k, sk}}));
  return seeds;
}

// Rational roots of det(b0 + t b1), found by interpolation.
std::vector<Rational> pencil_roots(const ExactMatrix& b0,
                                   const ExactMatrix& b1) {
  const size_t n = b0.rows();
  // interpolate the determinant polynomial at t = 0..n
  std::vector<GRat> values;
  for (size_t t = 0; t <= n; ++t)
    values.push_back(mat_det(b0 + b1.scaled(GRat(rat(static_cast<long>(t))))));
  // Newton -> monomial coefficients
  std::vector<std::vector<GRat>> table{values};
  for (size_t k = 1; k <= n; ++k) {
    std::vector<GRat> row;
    for (size_t i = 0; i + 1 < table.back().size(); ++i)
      row.push_back((table.back()[i + 1] - table.back()[i]) /
                    GRat(rat(static_cast<long>(k))));
    table.push_back(std::move(row));
  }
  std::vector<GRat> coeff(n + 1);  // monomial coefficients
  std::vector<GRat> poly{GRat(1)};  // product (t)(t-1)... in monomial form
  for (size_t k = 0; k <= n; ++k) {
    for (size_t j = 0; j < poly.size(); ++j) coeff[j] += table[k][0] * poly[j];
    // multiply poly by (t - k)
    std::vector<GRat> next(poly.size() + 1);
    for (size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * GRat(rat(static_cast<long>(k)));
    }
    poly = std::move(next);
  }
  size_t deg = coeff.size();
  while (deg > 0 && coeff[deg - 1].is_zero()) --deg;
  std::vector<Rational> roots;
  if (deg == 0) return roots;  // identically zero: every t works
  // clear denominators of the real parts (rational roots must kill both
  // the real and imaginary components; candidates come from either)
  auto candidates_from = [&](auto pick) {
    std::vector<Rational> cands;
    mpz_class den(1);
    for (size_t j = 0; j < deg; ++j)
      den = den * pick(coeff[j]).get_den() / gcd(den, pick(coeff[j]).get_den());
    std::vector<mpz_class> ic(deg);
    bool any = false;
    for (size_t j = 0; j < deg; ++j) {
      Rational scaled = pick(coeff[j]) * Rational(den);
      ic[j] = scaled.get_num();
      if (ic[j] != 0) any = true;
    }
    if (!any) return cands;
    size_t lo = 0;
    while (ic[lo] == 0) ++lo;
    mpz_class a0 = abs(ic[lo]), an = abs(ic[deg - 1]);
    const mpz_class bound(4096);  // divisor scan cap; this is a heuristic
    for (mpz_class p(1); p <= a0 && p <= bound; ++p) {
      if (a0 % p != 0) continue;
      const mpz_class divisors[2] = {p, mpz_class(a0 / p)};
      for (const mpz_class& pp : divisors)
        for (mpz_class q(1); q <= an && q <= bound; ++q) {
          if (an % q != 0) continue;
          cands.push_back(rat(pp, q));
          cands.push_back(rat(-pp, q));
        }
    }
    cands.push_back(Rational(0));
    return cands;
  };
  auto eval = [&](const Rational& t) {
    GRat acc;
    GRat tt(t);
    for (size_t j = deg; j-- > 0;) acc = acc * tt + coeff[j];
    return acc;
  };
  auto collect = [&](const std::vector<Rational>& cands) {
    for (const auto& c : cands)
      if (eval(c).is_zero()) roots.push_back(c);
  };
  collect(candidates_from([](const GRat& z) { return z.re; }));
  if (roots.empty())
    collect(candidates_from([](const GRat& z) { return z.im; }));
  return roots;
}

// Proper invariant graded subspace from a singular element of the even
// commutant, when one is reachable by singles or pencil roots.
std::optional<ExactMatrix> commutant_split(const SuperModule& m,
                                           const HomSpace& comm) {
  auto proper_kernel = [&](const ExactMatrix& t) -> std::optional<ExactMatrix> {
    if (t.is_zero()) return std::nullopt;
    ExactMatrix k = mat_kernel(t);
    if (k.cols() == 0 || k.cols() == m.dim()) return std::nullopt;
    return k;
  };
  for (const auto& t : comm.basis)
    if (auto k = proper_kernel(t)) return k;
  for (size_t i = 0; i < comm.basis.size(); ++i)
    for (size_t j = i + 1; j < comm.basis.size(); ++j) {
      // det identically zero: any combination is singular
      ExactMatrix probe = comm.basis[i] + comm.basis[j];
      for (const auto& r : pencil_roots(comm.basis[i], comm.basis[j])) {
        ExactMatrix t = comm.basis[i] + comm.basis[j].scaled(GRat(r));
        if (auto k = proper_kernel(t)) return k;
      }
      if (auto k = proper_kernel(probe)) return k;
    }
  return std::nullopt;
}

struct LeafInfo {
  SuperModule module;
  bool certified = false;
  std::string note;
};

void decompose(const SuperModule& m, std::mt19937& rng,
               std::vector<LeafInfo>& leaves) {
  if (m.dim() == 0) return;
  auto try_split = [&](const ExactMatrix& basis) {
    SplitPair pair = split_along(m, basis);
    decompose(pair.sub, rng, leaves);
    decompose(pair.quot, rng, leaves);
  };
  for (const auto& seed : deterministic_seeds(m.dim())) {
    ExactMatrix closure = cyclic_closure(m, seed);
    if (closure.cols() > 0 && closure.cols() < m.dim()) {
      try_split(closure);
      return;
    }
  }
  HomSpace comm = hom_space(m, m, Parity::Even);
  if (comm.dim() <= 1) {
    leaves.push_back({m, true, ""});
    return;
  }
  if (auto k = commutant_split(m, comm)) {
    // the kernel of an even equivariant map is invariant and graded
    try_split(*k);
    return;
  }
  if (comm.dim() == 2) {
    // commutant is a rational quadratic field; irreducible over the base
    // field, possibly not absolutely irreducible
    leaves.push_back({m, true, "quadratic commutant"});
    return;
  }
  std::uniform_int_distribution<long> coeff(-2, 2);
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<GRat> seed(m.dim());
    for (auto& c : seed) c = GRat(coeff(rng));
    ExactMatrix closure = cyclic_closure(m, seed);
    if (closure.cols() > 0 && closure.cols() < m.dim()) {
      try_split(closure);
      return;
    }
  }
  leaves.push_back({m, false, "presumed irreducible (budget exhausted)"});
}

}  // namespace

CompositionReport composition_factors(const SuperModule& m, unsigned rng_seed) {
  std::mt19937 rng(rng_seed);
  std::vector<LeafInfo> leaves;
  decompose(m, rng, leaves);
  CompositionReport report;
  for (auto& leaf : leaves) {
    bool merged = false;
    for (auto& f : report.factors) {
      if (f.module.dim() != leaf.module.dim()) continue;
      IsoResult iso = iso_test(f.module, leaf.module);
      if (iso.verdict == IsoVerdict::Isomorphic) {
        ++f.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged)
      report.factors.push_back(
          {std::move(leaf.module), 1, leaf.certified, leaf.note});
  }
  return report;
}

IrreducibleTag classify_irreducible(const SuperModule& m) {
  if (!m.graded)
    throw std::invalid_argument("classify_irreducible needs a graded module");
  IrreducibleTag tag;
  HomSpace even = hom_space(m, m, Parity::Even);
  HomSpace odd = hom_space(m, m, Parity::Odd);
  tag.type_q = odd.dim() > 0;
  tag.self_dual = iso_test(m, parity_reverse(m)).yes();
  tag.involution = involution_exists(m).verdict;
  if (m.field() == FieldTag::RealQ) {
    switch (even.dim()) {
      case 1:
        tag.division = RealDivision::R;
        break;
      case 2: {
        // complete the square on a non-scalar commutant element
        const ExactMatrix* j = nullptr;
        for (const auto& t : even.basis) {
          ExactMatrix diff =
              t - ExactMatrix::identity(t.rows(), t.field())
                      .scaled(t.at(0, 0));
          if (!diff.is_zero()) {
            j = &t;
            break;
          }
        }
        if (!j) throw std::logic_error("degenerate commutant basis");
        ExactMatrix jj = (*j) * (*j);
        // j^2 = a j + b; shifted element squares to (b + a^2/4)
        GRat a, b;
        {
          // solve in the span {Id, j}
          ExactMatrix sys(m.dim() * m.dim(), 2, m.field());
          ExactMatrix rhs(m.dim() * m.dim(), 1, m.field());
          ExactMatrix id = ExactMatrix::identity(m.dim(), m.field());
          for (size_t i = 0; i < m.dim(); ++i)
            for (size_t k = 0; k < m.dim(); ++k) {
              sys.at(i * m.dim() + k, 0) = j->at(i, k);
              sys.at(i * m.dim() + k, 1) = id.at(i, k);
              rhs.at(i * m.dim() + k, 0) = jj.at(i, k);
            }
          auto sol = mat_solve(sys, rhs);
          if (!sol) throw std::logic_error("commutant not closed");
          a = sol->at(0, 0);
          b = sol->at(1, 0);
        }
        GRat c = b + a * a * GRat(rat(1, 4));
        if (!c.is_real() || c.re > 0 || c.re == 0)
          throw std::domain_error("input not R-irreducible");
        tag.division = RealDivision::C;
        break;
      }
      case 4:
        tag.division = RealDivision::H;
        break;
      default:
        throw std::domain_error("input not R-irreducible");
    }
  } else {
    if (even.dim() != 1)
      throw std::domain_error("input not C-irreducible");
    tag.division = RealDivision::NotApplicable;
  }
  return tag;
}

namespace {

// Clifford irreducible under construction, with explicit generators of its
// commutant (empty = R, one J = C, two = H).
struct Tracked {
  SuperModule module;
  std::vector<ExactMatrix> end_gens;
};

SuperModule bare_module(FieldTag field, size_t p, size_t q, size_t dim) {
  SuperModule m;
  m.context = ShiftedContext{builtin_trivial(field), {p, q}};
  m.space = SuperSpace{dim, 0, field};
  m.graded = false;
  return m;
}

ExactMatrix mat2(FieldTag f, long a, long b, long c, long d) {
  ExactMatrix m(2, 2, f);
  m.at(0, 0) = GRat(a);
  m.at(0, 1) = GRat(b);
  m.at(1, 0) = GRat(c);
  m.at(1, 1) = GRat(d);
  return m;
}

// left multiplication by i, j and right multiplication by i, j on the
// quaternions with basis (1, i, j, k)
ExactMatrix quat_L_i(FieldTag f) {
  ExactMatrix m(4, 4, f);
  m.at(1, 0) = GRat(1);
  m.at(0, 1) = GRat(-1);
  m.at(3, 2) = GRat(1);
  m.at(2, 3) = GRat(-1);
  return m;
}
ExactMatrix quat_L_j(FieldTag f) {
  ExactMatrix m(4, 4, f);
  m.at(2, 0) = GRat(1);
  m.at(3, 1) = GRat(-1);
  m.at(0, 2) = GRat(-1);
  m.at(1, 3) = GRat(1);
  return m;
}
ExactMatrix quat_R_i(FieldTag f) {
  ExactMatrix m(4, 4, f);
  m.at(1, 0) = GRat(1);
  m.at(0, 1) = GRat(-1);
  m.at(3, 2) = GRat(-1);
  m.at(2, 3) = GRat(1);
  return m;
}
ExactMatrix quat_R_j(FieldTag f) {
  ExactMatrix m(4, 4, f);
  m.at(2, 0) = GRat(1);
  m.at(3, 1) = GRat(1);
  m.at(0, 2) = GRat(-1);
  m.at(1, 3) = GRat(-1);
  return m;
}

std::vector<Tracked> real_ungraded(size_t p, size_t q);

// W (x) k^2 along Cl(1,1) or Cl(0,2); the twist swaps e- and f-types
// exactly when omega squares to -1.
Tracked tensor_2x2(const Tracked& w, size_t new_p, size_t new_q,
                   const ExactMatrix& gen1, const ExactMatrix& gen2,
                   const ExactMatrix& omega, bool swap_types) {
  FieldTag f = w.module.field();
  const size_t d = w.module.dim();
  Tracked out;
  out.module = bare_module(f, new_p, new_q, 2 * d);
  ExactMatrix id = ExactMatrix::identity(d, f);
  auto twist = [&](const ExactMatrix& g) { return kron(g, omega); };
  const auto& old_e = w.module.e_action;
  const auto& old_f = w.module.f_action;
  if (swap_types) {
    for (const auto& g : old_f) out.module.e_action.push_back(twist(g));
  } else {
    for (const auto& g : old_e) out.module.e_action.push_back(twist(g));
  }
  if (swap_types) {
    for (const auto& g : old_e) out.module.f_action.push_back(twist(g));
  } else {
    for (const auto& g : old_f) out.module.f_action.push_back(twist(g));
  }
  // new generators appended last
  for (const auto& g : {gen1, gen2}) {
    ExactMatrix lifted = kron(id, g);
    ExactMatrix sq = g * g;
    bool is_e = sq.at(0, 0) == GRat(-1);
    (is_e ? out.module.e_action : out.module.f_action)
        .push_back(std::move(lifted));
  }
  for (const auto& j : w.end_gens)
    out.end_gens.push_back(kron(j, ExactMatrix::identity(2, f)));
  return out;
}

// restrict every action of m to the +1 eigenspace of s (s^2 = Id, s in the
// commutant), keeping the listed commutant elements that survive
Tracked cut_plus(const Tracked& t, const ExactMatrix& s,
                 const std::vector<ExactMatrix>& keep) {
  ExactMatrix basis = mat_kernel(
      s - ExactMatrix::identity(s.rows(), s.field()));
  auto restrict_to = [&](const ExactMatrix& op) {
    auto sol = mat_solve(basis, op * basis);
    if (!sol) throw std::logic_error("commutant eigenspace not invariant");
    return *sol;
  };
  Tracked out;
  out.module = bare_module(t.module.field(), t.module.context.signature.p,
                           t.module.context.signature.q, basis.cols());
  for (const auto& e : t.module.e_action)
    out.module.e_action.push_back(restrict_to(e));
  for (const auto& f : t.module.f_action)
    out.module.f_action.push_back(restrict_to(f));
  for (const auto& j : keep) out.end_gens.push_back(restrict_to(j));
  return out;
}

// W (x) H along Cl(p,0) = Cl(0,p-2) (x) Cl(2,0), splitting along the
// tracked commutant of W (multiplicity 1, 2, or 4).
std::vector<Tracked> tensor_quat(const Tracked& w, size_t new_p) {
  FieldTag f = w.module.field();
  const size_t d = w.module.dim();
  ExactMatrix id = ExactMatrix::identity(d, f);
  ExactMatrix li = quat_L_i(f), lj = quat_L_j(f);
  ExactMatrix omega = li * lj;  // L_k, squares to -1
  Tracked big;
  big.module = bare_module(f, new_p, 0, 4 * d);
  // old f-generators become e-type through the omega twist
  for (const auto& g : w.module.f_action)
    big.module.e_action.push_back(kron(g, omega));
  big.module.e_action.push_back(kron(id, li));
  big.module.e_action.push_back(kron(id, lj));
  for (const auto& g : w.module.e_action)
    big.module.f_action.push_back(kron(g, omega));

  ExactMatrix ri = kron(id, quat_R_i(f)), rj = kron(id, quat_R_j(f));
  if (w.end_gens.empty()) {
    big.end_gens = {ri, rj};
    return {big};
  }
  if (w.end_gens.size() == 1) {
    ExactMatrix s = kron(w.end_gens[0], quat_R_i(f));
    ExactMatrix j_lift = kron(w.end_gens[0], ExactMatrix::identity(4, f));
    return {cut_plus(big, s, {j_lift})};
  }
  // quaternionic commutant: two commuting splits, piece has commutant R
  ExactMatrix s1 = kron(w.end_gens[0], quat_R_i(f));
  ExactMatrix s2 = kron(w.end_gens[1], quat_R_j(f));
  Tracked half = cut_plus(big, s1, {s2});
  Tracked quarter = cut_plus(half, half.end_gens[0], {});
  return {quarter};
}

std::vector<Tracked> real_ungraded(size_t p, size_t q) {
  const FieldTag f = FieldTag::RealQ;
  if (p == 0 && q == 0) return {{bare_module(f, 0, 0, 1), {}}};
  if (p == 1 && q == 0) {
    Tracked t{bare_module(f, 1, 0, 2), {}};
    t.module.e_action.push_back(mat2(f, 0, -1, 1, 0));
    t.end_gens.push_back(t.module.e_action[0]);
    return {t};
  }
  if (p == 2 && q == 0) {
    Tracked t{bare_module(f, 2, 0, 4), {}};
    t.module.e_action.push_back(quat_L_i(f));
    t.module.e_action.push_back(quat_L_j(f));
    t.end_gens = {quat_R_i(f), quat_R_j(f)};
    return {t};
  }
  if (p == 0 && q == 1) {
    Tracked plus{bare_module(f, 0, 1, 1), {}};
    plus.module.f_action.push_back(ExactMatrix::identity(1, f));
    Tracked minus{bare_module(f, 0, 1, 1), {}};
    minus.module.f_action.push_back(
        ExactMatrix::identity(1, f).scaled(GRat(-1)));
    return {plus, minus};
  }
  if (p >= 1 && q >= 1) {
    // Cl(p,q) = Cl(p-1,q-1) (x) Cl(1,1)
    ExactMatrix e = mat2(f, 0, -1, 1, 0), ff = mat2(f, 0, 1, 1, 0);
    ExactMatrix omega = mat2(f, 1, 0, 0, -1);  // F E
    std::vector<Tracked> out;
    for (const auto& w : real_ungraded(p - 1, q - 1))
      out.push_back(tensor_2x2(w, p, q, e, ff, omega, false));
    return out;
  }
  if (p == 0) {
    // Cl(0,q) = Cl(q-2,0) (x) Cl(0,2)
    ExactMatrix f1 = mat2(f, 1, 0, 0, -1), f2 = mat2(f, 0, 1, 1, 0);
    ExactMatrix omega = f1 * f2;  // squares to -1, swaps the types
    std::vector<Tracked> out;
    for (const auto& w : real_ungraded(q - 2, 0))
      out.push_back(tensor_2x2(w, 0, q, f1, f2, omega, true));
    return out;
  }
  // p >= 3, q = 0: Cl(p,0) = Cl(0,p-2) (x) Cl(2,0)
  std::vector<Tracked> out;
  for (const auto& w : real_ungraded(0, p - 2))
    for (auto& piece : tensor_quat(w, p)) out.push_back(std::move(piece));
  return out;
}

std::vector<Tracked> complex_ungraded(size_t n) {
  const FieldTag f = FieldTag::ComplexQi;
  if (n == 0) return {{bare_module(f, 0, 0, 1), {}}};
  if (n == 1) {
    Tracked plus{bare_module(f, 1, 0, 1), {}};
    ExactMatrix e(1, 1, f);
    e.at(0, 0) = grat_i();
    plus.module.e_action.push_back(e);
    Tracked minus{bare_module(f, 1, 0, 1), {}};
    minus.module.e_action.push_back(e.scaled(GRat(-1)));
    return {plus, minus};
  }
  // Cl(n) = Cl(n-2) (x) Cl(2)
  ExactMatrix e1(2, 2, f), e2(2, 2, f);
  e1.at(0, 0) = grat_i();
  e1.at(1, 1) = -grat_i();
  e2.at(0, 1) = GRat(1);
  e2.at(1, 0) = GRat(-1);
  ExactMatrix omega = (e1 * e2).scaled(grat_i());
  std::vector<Tracked> out;
  for (const auto& w : complex_ungraded(n - 2))
    out.push_back(tensor_2x2(w, n, 0, e1, e2, omega, false));
  return out;
}

}  // namespace

std::vector<SuperModule> clifford_irreducibles(size_t p, size_t q,
                                               FieldTag field, bool graded) {
  if (p + q > 9)
    throw std::invalid_argument("Clifford signature too large (p+q <= 9)");
  std::vector<Tracked> tracked;
  if (field == FieldTag::RealQ) {
    tracked = graded ? real_ungraded(p, q + 1) : real_ungraded(p, q);
  } else {
    if (q != 0)
      throw std::invalid_argument(
          "complex Clifford signatures are normalized to (n,0)");
    tracked = graded ? complex_ungraded(p + 1) : complex_ungraded(p);
  }
  std::vector<SuperModule> out;
  for (auto& t : tracked)
    out.push_back(graded ? regrade(t.module) : std::move(t.module));
  return out;
}

ShiftOutput shift_irreducibles(const std::vector<SuperModule>& degree_n) {
  ShiftOutput out;
  if (degree_n.empty()) return out;
  if (degree_n.front().field() != FieldTag::ComplexQi)
    throw std::invalid_argument("shift_irreducibles needs the ComplexQi field");
  std::vector<bool> consumed(degree_n.size(), false);
  for (size_t i = 0; i < degree_n.size(); ++i) {
    if (consumed[i]) continue;
    const SuperModule& v = degree_n[i];
    if (!v.graded) throw std::invalid_argument("shift needs graded input");
    HomSpace odd = hom_space(v, v, Parity::Odd);
    if (odd.dim() > 0) {
      // type Q: normalize the odd involution and emit Q+-
      if (odd.dim() != 1)
        throw std::invalid_argument("shift input is not irreducible");
      ExactMatrix a = odd.basis[0];
      ExactMatrix sq = a * a;
      GRat c = sq.at(0, 0);
      if (sq != ExactMatrix::identity(v.dim(), v.field()).scaled(c))
        throw std::invalid_argument("odd endomorphism square is not scalar");
      auto root = exact_sqrt(c);
      if (!root) {
        out.notes.push_back(
            "odd involution unnormalizable: square root of " + to_string(c) +
            " does not exist in Q(i); pair skipped");
        consumed[i] = true;
        continue;
      }
      ExactMatrix alpha = a.scaled(GRat(1) / GRat(*root));
      ExactMatrix g = v.grading();
      for (int sign : {+1, -1}) {
        SuperModule q = v;
        q.context.signature.p += 1;
        q.e_action.push_back((g * alpha).scaled(GRat(sign)));
        out.modules.push_back(std::move(q));
      }
      consumed[i] = true;
      continue;
    }
    // type M: locate the parity partner, emit M + M^Pi once per pair
    SuperModule rev = parity_reverse(v);
    for (size_t j = i; j < degree_n.size(); ++j) {
      if (consumed[j] && j != i) continue;
      if (iso_test(rev, degree_n[j]).yes()) {
        consumed[j] = true;
        break;
      }
    }
    consumed[i] = true;
    SuperModule s = direct_sum_modules(v, rev);
    // swap of the two summands as a matrix in the direct-sum basis
    const size_t d0 = v.space.dim_even, d1 = v.space.dim_odd;
    auto pos_a = [&](size_t k) { return k < d0 ? k : d1 + k; };
    auto pos_b = [&](size_t k) { return k < d1 ? d0 + k : d0 + d1 + k; };
    ExactMatrix alpha(s.dim(), s.dim(), s.field());
    for (size_t k = 0; k < v.dim(); ++k) {
      size_t pi_k = k < d0 ? d1 + k : k - d0;  // index of vector k in V^Pi
      alpha.at(pos_b(pi_k), pos_a(k)) = GRat(1);
      alpha.at(pos_a(k), pos_b(pi_k)) = GRat(1);
    }
    s.context.signature.p += 1;
    s.e_action.push_back(alpha * s.grading());
    out.modules.push_back(std::move(s));
  }
  return out;
}

}  // namespace srep
