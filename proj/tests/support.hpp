#pragma once

#include <random>

#include "superrep/classify.hpp"
#include "superrep/specfile.hpp"

namespace srep::testsupport {

inline ExactMatrix qm(size_t n, std::initializer_list<long> entries,
                      FieldTag f) {
  ExactMatrix m(n, n, f);
  size_t k = 0;
  for (long e : entries) {
    m.at(k / n, k % n) = GRat(e);
    ++k;
  }
  return m;
}

// graded q(1)-module L_lambda on (1|1); root = sqrt(lambda)
inline SuperModule q1_L(const GRat& lambda, const GRat& root, FieldTag field) {
  SuperModule m;
  m.context = ShiftedContext{builtin_q1(field), {0, 0}};
  m.space = SuperSpace{1, 1, field};
  m.graded = true;
  ExactMatrix h(2, 2, field), q(2, 2, field);
  h.at(0, 0) = lambda;
  h.at(1, 1) = lambda;
  q.at(0, 1) = root;
  q.at(1, 0) = root;
  m.g_action = {h, q};
  return m;
}

// trivial graded q(1)-modules I = (1|0) and Pi = (0|1)
inline SuperModule q1_trivial(bool odd, FieldTag field) {
  SuperModule m;
  m.context = ShiftedContext{builtin_q1(field), {0, 0}};
  m.space = odd ? SuperSpace{0, 1, field} : SuperSpace{1, 0, field};
  m.graded = true;
  m.g_action.assign(2, ExactMatrix::zero(1, 1, field));
  return m;
}

// ungraded q(1)-module C_mu: H acts by mu^2, Q by mu
inline SuperModule q1_C(const GRat& mu, FieldTag field) {
  SuperModule m;
  m.context = ShiftedContext{builtin_q1(field), {0, 0}};
  m.space = SuperSpace{1, 0, field};
  m.graded = false;
  ExactMatrix h(1, 1, field), q(1, 1, field);
  h.at(0, 0) = mu * mu;
  q.at(0, 0) = mu;
  m.g_action = {h, q};
  return m;
}

// random even invertible basis change applied to a module
inline SuperModule scramble(const SuperModule& m, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-2, 2);
  for (int attempt = 0; attempt < 100; ++attempt) {
    ExactMatrix t(m.dim(), m.dim(), m.field());
    for (size_t i = 0; i < m.dim(); ++i)
      for (size_t j = 0; j < m.dim(); ++j) {
        if (m.graded &&
            m.space.parity_of(i) != m.space.parity_of(j))
          continue;
        t.at(i, j) = GRat(d(rng));
      }
    if (mat_det(t).is_zero()) continue;
    return change_basis(m, t, m.space, m.graded);
  }
  return m;
}

// ungraded tensor of a graded module with an ungraded one, independent of
// the library's graded tensor: X(v (x) w) = Xv (x) w + (-1)^{|X||v|} v (x) Xw
inline SuperModule ungraded_tensor(const SuperModule& v, const SuperModule& u) {
  SuperModule out;
  out.context = v.context;
  out.context.signature.p += u.context.signature.p;
  out.context.signature.q += u.context.signature.q;
  out.graded = false;
  out.space = SuperSpace{v.dim() * u.dim(), 0, v.field()};
  ExactMatrix idv = ExactMatrix::identity(v.dim(), v.field());
  ExactMatrix idu = ExactMatrix::identity(u.dim(), u.field());
  ExactMatrix gv = v.grading();
  const auto& alg = v.context.algebra;
  for (size_t i = 0; i < alg.dim(); ++i)
    out.g_action.push_back(alg.parity_of(i) == Parity::Even
                               ? kron(v.g_action[i], idu) +
                                     kron(idv, u.g_action[i])
                               : kron(v.g_action[i], idu) +
                                     kron(gv, u.g_action[i]));
  for (const auto& e : v.e_action) out.e_action.push_back(kron(e, idu));
  for (const auto& e : u.e_action) out.e_action.push_back(kron(gv, e));
  for (const auto& f : v.f_action) out.f_action.push_back(kron(f, idu));
  for (const auto& f : u.f_action) out.f_action.push_back(kron(gv, f));
  return out;
}

// Isomorphism of semisimple modules through their composition multisets;
// iso_test alone is inconclusive once repeated factors push the hom space
// past the search budget.
inline bool iso_semisimple(const SuperModule& a, const SuperModule& b) {
  if (a.dim() != b.dim()) return false;
  CompositionReport ra = composition_factors(a);
  CompositionReport rb = composition_factors(b);
  if (ra.factors.size() != rb.factors.size()) return false;
  std::vector<bool> used(rb.factors.size(), false);
  for (const auto& fa : ra.factors) {
    bool matched = false;
    for (size_t j = 0; j < rb.factors.size() && !matched; ++j) {
      if (used[j] || rb.factors[j].multiplicity != fa.multiplicity) continue;
      if (iso_test(fa.module, rb.factors[j].module).yes()) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

// random validated graded module: a scrambled direct sum of irreducibles
inline SuperModule random_module(const std::vector<SuperModule>& irreps,
                                 size_t max_dim, std::mt19937& rng) {
  std::uniform_int_distribution<size_t> pick(0, irreps.size() - 1);
  SuperModule sum = irreps[pick(rng)];
  while (true) {
    const SuperModule& next = irreps[pick(rng)];
    if (sum.dim() + next.dim() > max_dim) break;
    sum = direct_sum_modules(sum, next);
    std::uniform_int_distribution<int> more(0, 2);
    if (more(rng) == 0) break;
  }
  return scramble(sum, rng);
}

}  // namespace srep::testsupport
