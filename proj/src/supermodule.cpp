#include "superrep/supermodule.hpp"

#include <stdexcept>

namespace srep {

std::vector<const ExactMatrix*> SuperModule::odd_operators() const {
  std::vector<const ExactMatrix*> ops;
  for (size_t i = context.algebra.n_even; i < context.algebra.dim(); ++i)
    ops.push_back(&g_action[i]);
  for (const auto& e : e_action) ops.push_back(&e);
  for (const auto& f : f_action) ops.push_back(&f);
  return ops;
}

std::vector<const ExactMatrix*> SuperModule::all_operators() const {
  std::vector<const ExactMatrix*> ops;
  for (const auto& a : g_action) ops.push_back(&a);
  for (const auto& e : e_action) ops.push_back(&e);
  for (const auto& f : f_action) ops.push_back(&f);
  return ops;
}

SuperModule make_zero_module(const ShiftedContext& ctx, bool graded) {
  SuperModule m;
  m.context = ctx;
  m.space = SuperSpace{0, 0, ctx.field()};
  m.graded = graded;
  m.g_action.assign(ctx.algebra.dim(), ExactMatrix(0, 0, ctx.field()));
  m.e_action.assign(ctx.signature.p, ExactMatrix(0, 0, ctx.field()));
  m.f_action.assign(ctx.signature.q, ExactMatrix(0, 0, ctx.field()));
  return m;
}

namespace {

bool pattern_ok(const SuperSpace& sp, const ExactMatrix& m, Parity p) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero() &&
          parity_add(sp.parity_of(i), sp.parity_of(j)) != p)
        return false;
  return true;
}

std::string op_name(const SuperModule& m, size_t k) {
  const auto& alg = m.context.algebra;
  if (k < alg.dim()) return alg.names[k];
  k -= alg.dim();
  if (k < m.context.signature.p) return "e" + std::to_string(k + 1);
  return "f" + std::to_string(k - m.context.signature.p + 1);
}

}  // namespace

ValidationReport validate_module(const SuperModule& m) {
  const auto& alg = m.context.algebra;
  const size_t d = m.dim();
  if (m.g_action.size() != alg.dim())
    return {false, "wrong number of algebra actions"};
  if (m.e_action.size() != m.context.signature.p ||
      m.f_action.size() != m.context.signature.q)
    return {false, "wrong number of Clifford actions"};
  if (!m.graded && m.space.dim_odd != 0)
    return {false, "ungraded module must have dim_odd = 0"};

  auto ops = m.all_operators();
  for (size_t k = 0; k < ops.size(); ++k) {
    if (ops[k]->rows() != d || ops[k]->cols() != d)
      return {false, "action of " + op_name(m, k) + " has wrong shape"};
    if (ops[k]->field() != m.field())
      return {false, "action of " + op_name(m, k) + " is over the wrong field"};
    if (!ops[k]->validate_field())
      return {false, "RealQ action of " + op_name(m, k) +
                         " has a nonzero imaginary part"};
  }

  if (m.graded) {
    for (size_t i = 0; i < alg.dim(); ++i)
      if (!pattern_ok(m.space, m.g_action[i], alg.parity_of(i)))
        return {false, "action of " + alg.names[i] +
                           " violates its parity block pattern"};
    for (const auto& e : m.e_action)
      if (!pattern_ok(m.space, e, Parity::Odd))
        return {false, "an e-generator action is not an odd map"};
    for (const auto& f : m.f_action)
      if (!pattern_ok(m.space, f, Parity::Odd))
        return {false, "an f-generator action is not an odd map"};
  }

  // bracket compatibility with the structure constants
  for (size_t i = 0; i < alg.dim(); ++i)
    for (size_t j = 0; j < alg.dim(); ++j) {
      int sgn = koszul_sign(alg.parity_of(i), alg.parity_of(j));
      ExactMatrix lhs = m.g_action[i] * m.g_action[j] -
                        m.g_action[j] * m.g_action[i]
                            .scaled(GRat(sgn));
      ExactMatrix rhs(d, d, m.field());
      for (size_t k = 0; k < alg.dim(); ++k)
        if (!alg.coeff(i, j, k).is_zero())
          rhs = rhs + m.g_action[k].scaled(alg.coeff(i, j, k));
      if (lhs != rhs)
        return {false, "bracket [" + alg.names[i] + "," + alg.names[j] +
                           "] fails, residual " + (lhs - rhs).to_text()};
    }

  // Clifford relations
  std::vector<ExactMatrix> cliff = m.e_action;
  cliff.insert(cliff.end(), m.f_action.begin(), m.f_action.end());
  if (auto rep = clifford_relation_check(m.context.signature, cliff); !rep.ok)
    return {false, rep.message};

  // Clifford generators supercommute with g
  for (size_t c = 0; c < cliff.size(); ++c)
    for (size_t i = 0; i < alg.dim(); ++i) {
      int sgn = alg.parity_of(i) == Parity::Odd ? +1 : -1;
      ExactMatrix resid =
          cliff[c] * m.g_action[i] + m.g_action[i].scaled(GRat(sgn)) * cliff[c];
      if (!resid.is_zero())
        return {false, "Clifford generator " + op_name(m, alg.dim() + c) +
                           " fails to supercommute with " + alg.names[i] +
                           ", residual " + resid.to_text()};
    }
  return {};
}

SuperModule direct_sum_modules(const SuperModule& a, const SuperModule& b) {
  if (!(a.context == b.context) || a.graded != b.graded)
    throw std::invalid_argument("direct sum of incompatible modules");
  SuperModule r;
  r.context = a.context;
  r.graded = a.graded;
  r.space = SuperSpace{a.space.dim_even + b.space.dim_even,
                       a.space.dim_odd + b.space.dim_odd, a.field()};
  // basis order: a-even, b-even, a-odd, b-odd
  std::vector<size_t> pos_a(a.dim()), pos_b(b.dim());
  for (size_t i = 0; i < a.dim(); ++i)
    pos_a[i] = i < a.space.dim_even
                   ? i
                   : b.space.dim_even + i;
  for (size_t i = 0; i < b.dim(); ++i)
    pos_b[i] = i < b.space.dim_even
                   ? a.space.dim_even + i
                   : a.space.dim_even + a.space.dim_odd + i;
  auto combine = [&](const ExactMatrix& ma, const ExactMatrix& mb) {
    ExactMatrix out(r.dim(), r.dim(), r.field());
    for (size_t i = 0; i < a.dim(); ++i)
      for (size_t j = 0; j < a.dim(); ++j)
        out.at(pos_a[i], pos_a[j]) = ma.at(i, j);
    for (size_t i = 0; i < b.dim(); ++i)
      for (size_t j = 0; j < b.dim(); ++j)
        out.at(pos_b[i], pos_b[j]) = mb.at(i, j);
    return out;
  };
  for (size_t k = 0; k < a.g_action.size(); ++k)
    r.g_action.push_back(combine(a.g_action[k], b.g_action[k]));
  for (size_t k = 0; k < a.e_action.size(); ++k)
    r.e_action.push_back(combine(a.e_action[k], b.e_action[k]));
  for (size_t k = 0; k < a.f_action.size(); ++k)
    r.f_action.push_back(combine(a.f_action[k], b.f_action[k]));
  return r;
}

SuperModule change_basis(const SuperModule& m, const ExactMatrix& t,
                         const SuperSpace& new_space, bool graded) {
  auto tinv = mat_inverse(t);
  if (!tinv) throw std::invalid_argument("basis change matrix is singular");
  SuperModule r;
  r.context = m.context;
  r.space = new_space;
  r.graded = graded;
  auto conj = [&](const ExactMatrix& a) { return (*tinv) * a * t; };
  for (const auto& a : m.g_action) r.g_action.push_back(conj(a));
  for (const auto& e : m.e_action) r.e_action.push_back(conj(e));
  for (const auto& f : m.f_action) r.f_action.push_back(conj(f));
  return r;
}

SuperModule parity_reverse(const SuperModule& m) {
  if (!m.graded)
    throw std::invalid_argument("parity reversal needs a graded module");
  ExactMatrix p = parity_transport(m.space);
  // p is a permutation; conjugation transports matrices unchanged
  return change_basis(m, mat_inverse(p).value(), parity_reverse_space(m.space),
                      true);
}

SuperModule conjugate(const SuperModule& m) {
  SuperModule r = m;
  const auto& alg = m.context.algebra;
  for (size_t i = alg.n_even; i < alg.dim(); ++i)
    r.g_action[i] = -r.g_action[i];
  for (auto& e : r.e_action) e = -e;
  for (auto& f : r.f_action) f = -f;
  return r;
}

SuperModule forget_grading(const SuperModule& m) {
  SuperModule r = m;
  r.graded = false;
  r.space = SuperSpace{m.dim(), 0, m.field()};
  return r;
}

SuperModule diag_lift(const SuperModule& m) {
  if (m.graded) throw std::invalid_argument("diag_lift needs ungraded input");
  const size_t d = m.dim();
  SuperModule r;
  r.context = m.context;
  r.context.signature.p += 1;
  r.graded = true;
  r.space = SuperSpace{d, d, m.field()};
  auto diag = [&](const ExactMatrix& a) {
    ExactMatrix out(2 * d, 2 * d, m.field());
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        out.at(i, j) = a.at(i, j);
        out.at(d + i, d + j) = a.at(i, j);
      }
    return out;
  };
  auto anti = [&](const ExactMatrix& a) {
    ExactMatrix out(2 * d, 2 * d, m.field());
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        out.at(i, d + j) = a.at(i, j);
        out.at(d + i, j) = a.at(i, j);
      }
    return out;
  };
  const auto& alg = m.context.algebra;
  for (size_t i = 0; i < alg.dim(); ++i)
    r.g_action.push_back(alg.parity_of(i) == Parity::Even
                             ? diag(m.g_action[i])
                             : anti(m.g_action[i]));
  for (const auto& e : m.e_action) r.e_action.push_back(anti(e));
  ExactMatrix new_e(2 * d, 2 * d, m.field());
  for (size_t i = 0; i < d; ++i) {
    new_e.at(i, d + i) = GRat(-1);
    new_e.at(d + i, i) = GRat(1);
  }
  r.e_action.push_back(std::move(new_e));
  for (const auto& f : m.f_action) r.f_action.push_back(anti(f));
  return r;
}

SuperModule project_even(const SuperModule& m) {
  if (!m.graded || m.context.signature.p == 0)
    throw std::invalid_argument(
        "project_even needs a graded module with an e-generator");
  ExactMatrix alpha = m.e_action.back() * m.grading();
  std::vector<size_t> even_idx;
  for (size_t i = 0; i < m.space.dim_even; ++i) even_idx.push_back(i);
  SuperModule r;
  r.context = m.context;
  r.context.signature.p -= 1;
  r.graded = false;
  r.space = SuperSpace{m.space.dim_even, 0, m.field()};
  auto even_block = [&](const ExactMatrix& a) {
    return a.submatrix(even_idx, even_idx);
  };
  const auto& alg = m.context.algebra;
  for (size_t i = 0; i < alg.dim(); ++i)
    r.g_action.push_back(alg.parity_of(i) == Parity::Even
                             ? even_block(m.g_action[i])
                             : even_block(alpha * m.g_action[i]));
  for (size_t k = 0; k + 1 < m.e_action.size(); ++k)
    r.e_action.push_back(even_block(alpha * m.e_action[k]));
  for (const auto& f : m.f_action)
    r.f_action.push_back(even_block(alpha * f));
  return r;
}

SuperModule plain_delta(const SuperModule& m) {
  return restrict_generator(diag_lift(m));
}

SuperModule restrict_generator(const SuperModule& m) {
  if (m.context.signature.p == 0)
    throw std::invalid_argument("restrict_generator needs an e-generator");
  SuperModule r = m;
  r.context.signature.p -= 1;
  r.e_action.pop_back();
  return r;
}

SuperModule degrade(const SuperModule& m) {
  if (!m.graded) throw std::invalid_argument("degrade needs graded input");
  SuperModule r = forget_grading(m);
  if (m.field() == FieldTag::RealQ) {
    r.context.signature.q += 1;
    r.f_action.push_back(m.grading());
  } else {
    r.context.signature.p += 1;
    r.e_action.push_back(m.grading().scaled(grat_i()));
  }
  return r;
}

namespace {

// Basis of the c-eigenspace of an involution matrix, as columns.
ExactMatrix eigenbasis(const ExactMatrix& invol, const GRat& c) {
  ExactMatrix shifted = invol - ExactMatrix::identity(invol.rows(),
                                                      invol.field())
                                    .scaled(c);
  return mat_kernel(shifted);
}

}  // namespace

SuperModule regrade(const SuperModule& m) {
  if (m.graded) throw std::invalid_argument("regrade needs ungraded input");
  SuperModule base = m;
  ExactMatrix grading(0, 0, m.field());
  if (m.field() == FieldTag::RealQ) {
    if (m.context.signature.q == 0)
      throw std::invalid_argument("regrade needs an f-generator");
    grading = m.f_action.back();
    base.f_action.pop_back();
    base.context.signature.q -= 1;
  } else {
    if (m.context.signature.p == 0)
      throw std::invalid_argument("regrade needs an e-generator");
    grading = m.e_action.back().scaled(-grat_i());
    base.e_action.pop_back();
    base.context.signature.p -= 1;
  }
  ExactMatrix plus = eigenbasis(grading, GRat(1));
  ExactMatrix minus = eigenbasis(grading, GRat(-1));
  if (plus.cols() + minus.cols() != m.dim())
    throw std::invalid_argument("grading candidate is not an involution");
  ExactMatrix t = ExactMatrix::hstack(plus, minus);
  SuperSpace sp{plus.cols(), minus.cols(), m.field()};
  return change_basis(base, t, sp, true);
}

SuperModule bar_module(const SuperModule& m, const LieSuperAlgebra& gbar) {
  if (!m.graded) throw std::invalid_argument("bar_module needs graded input");
  const auto& alg = m.context.algebra;
  if (gbar.dim() != alg.dim() || gbar.n_even != alg.n_even)
    throw std::invalid_argument("bar algebra shape mismatch");
  ExactMatrix g = m.grading();
  SuperModule r;
  r.context = ShiftedContext{gbar,
                             {m.context.signature.q, m.context.signature.p}};
  r.space = m.space;
  r.graded = true;
  for (size_t i = 0; i < alg.dim(); ++i)
    r.g_action.push_back(alg.parity_of(i) == Parity::Even ? m.g_action[i]
                                                          : m.g_action[i] * g);
  // e -> f and f -> e; the composite with the grading flips the square sign
  for (const auto& f : m.f_action) r.e_action.push_back(f * g);
  for (const auto& e : m.e_action) r.f_action.push_back(e * g);
  return r;
}

SuperModule tensor_modules(const SuperModule& v, const SuperModule& w) {
  if (!v.graded || !w.graded)
    throw std::invalid_argument("tensor_modules needs graded inputs");
  if (!(v.context.algebra == w.context.algebra))
    throw std::invalid_argument("tensor over different algebras");
  if (v.field() != w.field())
    throw std::invalid_argument("tensor over different fields");
  TensorIndex t = tensor_space(v.space, w.space);
  ExactMatrix id_v = ExactMatrix::identity(v.dim(), v.field());
  ExactMatrix id_w = ExactMatrix::identity(w.dim(), w.field());
  ExactMatrix gv = v.grading();
  auto first = [&](const ExactMatrix& a) {
    return plain_tensor_matrix(a, id_w, t, t);
  };
  auto second_even = [&](const ExactMatrix& b) {
    return plain_tensor_matrix(id_v, b, t, t);
  };
  auto second_odd = [&](const ExactMatrix& b) {
    return plain_tensor_matrix(gv, b, t, t);
  };

  SuperModule r;
  r.context = v.context;
  r.context.signature.p += w.context.signature.p;
  r.context.signature.q += w.context.signature.q;
  r.space = t.space;
  r.graded = true;
  const auto& alg = v.context.algebra;
  for (size_t i = 0; i < alg.dim(); ++i)
    r.g_action.push_back(alg.parity_of(i) == Parity::Even
                             ? first(v.g_action[i]) + second_even(w.g_action[i])
                             : first(v.g_action[i]) + second_odd(w.g_action[i]));
  for (const auto& e : v.e_action) r.e_action.push_back(first(e));
  for (const auto& e : w.e_action) r.e_action.push_back(second_odd(e));
  for (const auto& f : v.f_action) r.f_action.push_back(first(f));
  for (const auto& f : w.f_action) r.f_action.push_back(second_odd(f));
  return r;
}

SuperModule boxtimes(const SuperModule& u, const SuperModule& w) {
  if (u.graded || w.graded)
    throw std::invalid_argument("boxtimes needs ungraded inputs");
  if (u.field() != FieldTag::ComplexQi)
    throw std::invalid_argument("boxtimes needs the ComplexQi field");
  if (!(u.context.algebra == w.context.algebra))
    throw std::invalid_argument("boxtimes over different algebras");
  const size_t du = u.dim(), dw = w.dim(), n = du * dw;
  FieldTag fld = u.field();
  // Delta U (x) W on (U(x)W) + (U(x)W), plain Kronecker indexing
  auto halves = [&](const ExactMatrix& tl, const ExactMatrix& tr,
                    const ExactMatrix& bl, const ExactMatrix& br) {
    ExactMatrix out(2 * n, 2 * n, fld);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        out.at(i, j) = tl.at(i, j);
        out.at(i, n + j) = tr.at(i, j);
        out.at(n + i, j) = bl.at(i, j);
        out.at(n + i, n + j) = br.at(i, j);
      }
    return out;
  };
  ExactMatrix idu = ExactMatrix::identity(du, fld);
  ExactMatrix idw = ExactMatrix::identity(dw, fld);
  ExactMatrix zn = ExactMatrix::zero(n, n, fld);

  SuperModule big;
  big.context = u.context;
  big.context.signature.p += w.context.signature.p;
  big.context.signature.q += w.context.signature.q;
  big.graded = false;
  big.space = SuperSpace{2 * n, 0, fld};
  const auto& alg = u.context.algebra;
  for (size_t i = 0; i < alg.dim(); ++i) {
    if (alg.parity_of(i) == Parity::Even) {
      ExactMatrix k = kron(u.g_action[i], idw) + kron(idu, w.g_action[i]);
      big.g_action.push_back(halves(k, zn, zn, k));
    } else {
      ExactMatrix a = kron(u.g_action[i], idw);   // X1 (x) 1
      ExactMatrix b = kron(idu, w.g_action[i]);   // 1 (x) X1
      big.g_action.push_back(halves(b, a, a, -b));
    }
  }
  auto lift_odd_first = [&](const ExactMatrix& eu) {
    ExactMatrix a = kron(eu, idw);
    return halves(zn, a, a, zn);
  };
  auto lift_odd_second = [&](const ExactMatrix& ew) {
    ExactMatrix b = kron(idu, ew);
    return halves(b, zn, zn, -b);
  };
  for (const auto& e : u.e_action) big.e_action.push_back(lift_odd_first(e));
  for (const auto& e : w.e_action) big.e_action.push_back(lift_odd_second(e));
  for (const auto& f : u.f_action) big.f_action.push_back(lift_odd_first(f));
  for (const auto& f : w.f_action) big.f_action.push_back(lift_odd_second(f));

  // grading operator [[0, i Id],[-i Id, 0]]
  ExactMatrix grading =
      halves(zn, ExactMatrix::identity(n, fld).scaled(grat_i()),
             ExactMatrix::identity(n, fld).scaled(-grat_i()), zn);
  ExactMatrix plus = eigenbasis(grading, GRat(1));
  ExactMatrix minus = eigenbasis(grading, GRat(-1));
  ExactMatrix t = ExactMatrix::hstack(plus, minus);
  SuperSpace sp{plus.cols(), minus.cols(), fld};
  return change_basis(big, t, sp, true);
}

namespace {

struct MoritaSplit {
  ExactMatrix omega;
  size_t consumed_e = 0, consumed_f = 0;
};

MoritaSplit morita_omega(const SuperModule& m) {
  const auto& sig = m.context.signature;
  if (m.field() == FieldTag::ComplexQi) {
    if (sig.p < 2)
      throw std::invalid_argument("complex Morita reduction needs p >= 2");
    ExactMatrix omega =
        (m.e_action[sig.p - 2] * m.e_action[sig.p - 1]).scaled(grat_i());
    return {omega, 2, 0};
  }
  if (sig.p < 1 || sig.q < 1)
    throw std::invalid_argument("real Morita reduction needs p, q >= 1");
  return {m.f_action[sig.q - 1] * m.e_action[sig.p - 1], 1, 1};
}

}  // namespace

SuperModule morita_reduce(const SuperModule& m) {
  MoritaSplit ms = morita_omega(m);
  const auto& alg = m.context.algebra;
  // twist the surviving odd operators so they commute with the consumed pair
  auto twist = [&](const ExactMatrix& a) { return a * ms.omega; };

  ExactMatrix basis(0, 0, m.field());
  SuperSpace sp{0, 0, m.field()};
  if (m.graded) {
    // omega is even, so the eigenspace splits along the parity blocks
    std::vector<size_t> even_idx, odd_idx;
    for (size_t i = 0; i < m.space.dim_even; ++i) even_idx.push_back(i);
    for (size_t i = m.space.dim_even; i < m.dim(); ++i) odd_idx.push_back(i);
    ExactMatrix oe = ms.omega.submatrix(even_idx, even_idx);
    ExactMatrix oo = ms.omega.submatrix(odd_idx, odd_idx);
    ExactMatrix be = eigenbasis(oe, GRat(1));
    ExactMatrix bo = eigenbasis(oo, GRat(1));
    basis = ExactMatrix(m.dim(), be.cols() + bo.cols(), m.field());
    for (size_t j = 0; j < be.cols(); ++j)
      for (size_t i = 0; i < even_idx.size(); ++i)
        basis.at(even_idx[i], j) = be.at(i, j);
    for (size_t j = 0; j < bo.cols(); ++j)
      for (size_t i = 0; i < odd_idx.size(); ++i)
        basis.at(odd_idx[i], be.cols() + j) = bo.at(i, j);
    sp = SuperSpace{be.cols(), bo.cols(), m.field()};
  } else {
    basis = eigenbasis(ms.omega, GRat(1));
    sp = SuperSpace{basis.cols(), 0, m.field()};
  }

  auto restrict_to = [&](const ExactMatrix& op) {
    auto sol = mat_solve(basis, op * basis);
    if (!sol)
      throw std::logic_error("Morita eigenspace is not invariant");
    return *sol;
  };

  SuperModule r;
  r.context = m.context;
  r.context.signature.p -= ms.consumed_e;
  r.context.signature.q -= ms.consumed_f;
  r.graded = m.graded;
  r.space = sp;
  for (size_t i = 0; i < alg.dim(); ++i)
    r.g_action.push_back(alg.parity_of(i) == Parity::Even
                             ? restrict_to(m.g_action[i])
                             : restrict_to(twist(m.g_action[i])));
  for (size_t k = 0; k + ms.consumed_e < m.e_action.size(); ++k)
    r.e_action.push_back(restrict_to(twist(m.e_action[k])));
  for (size_t k = 0; k + ms.consumed_f < m.f_action.size(); ++k)
    r.f_action.push_back(restrict_to(twist(m.f_action[k])));
  return r;
}

SuperModule morita_embed(const SuperModule& m) {
  const size_t d = m.dim();
  FieldTag fld = m.field();
  // second factor: (1|1) space carrying the consumed Clifford pair
  SuperSpace cs{1, 1, fld};
  ExactMatrix E(2, 2, fld), F(2, 2, fld), E2(2, 2, fld), W(2, 2, fld);
  E.at(0, 1) = GRat(-1);
  E.at(1, 0) = GRat(1);
  F.at(0, 1) = GRat(1);
  F.at(1, 0) = GRat(1);
  E2.at(0, 1) = grat_i();
  E2.at(1, 0) = grat_i();
  bool complex = fld == FieldTag::ComplexQi;
  // twist matrix: diag(1,-1) in both cases
  W.at(0, 0) = GRat(1);
  W.at(1, 1) = GRat(-1);

  SuperSpace msp = m.graded ? m.space : SuperSpace{d, 0, fld};
  TensorIndex t = tensor_space(msp, cs);
  ExactMatrix id2 = ExactMatrix::identity(2, fld);
  ExactMatrix idd = ExactMatrix::identity(d, fld);
  auto lift_even = [&](const ExactMatrix& a) {
    return plain_tensor_matrix(a, id2, t, t);
  };
  auto lift_odd = [&](const ExactMatrix& a) {
    return plain_tensor_matrix(a, W, t, t);
  };

  SuperModule r;
  r.context = m.context;
  r.context.signature.p += complex ? 2 : 1;
  r.context.signature.q += complex ? 0 : 1;
  r.graded = m.graded;
  r.space = m.graded ? t.space : SuperSpace{2 * d, 0, fld};
  const auto& alg = m.context.algebra;
  for (size_t i = 0; i < alg.dim(); ++i)
    r.g_action.push_back(alg.parity_of(i) == Parity::Even
                             ? lift_even(m.g_action[i])
                             : lift_odd(m.g_action[i]));
  for (const auto& e : m.e_action) r.e_action.push_back(lift_odd(e));
  r.e_action.push_back(plain_tensor_matrix(idd, E, t, t));
  if (complex) r.e_action.push_back(plain_tensor_matrix(idd, E2, t, t));
  for (const auto& f : m.f_action) r.f_action.push_back(lift_odd(f));
  if (!complex) r.f_action.push_back(plain_tensor_matrix(idd, F, t, t));
  return r;
}

}  // namespace srep
