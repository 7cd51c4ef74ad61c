#include "superrep/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace srep {

LieSuperAlgebra make_algebra(FieldTag field,
                             std::vector<std::string> even_names,
                             std::vector<std::string> odd_names) {
  LieSuperAlgebra g;
  g.field = field;
  g.n_even = even_names.size();
  g.names = std::move(even_names);
  g.names.insert(g.names.end(), odd_names.begin(), odd_names.end());
  const size_t n = g.names.size();
  g.c.assign(n, std::vector<std::vector<GRat>>(n, std::vector<GRat>(n)));
  return g;
}

namespace {

std::vector<GRat> bracket_of(const LieSuperAlgebra& g,
                             const std::vector<GRat>& x,
                             const std::vector<GRat>& y) {
  const size_t n = g.dim();
  std::vector<GRat> out(n);
  for (size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      for (size_t k = 0; k < n; ++k)
        out[k] += x[i] * y[j] * g.coeff(i, j, k);
    }
  }
  return out;
}

std::vector<GRat> basis_vec(size_t n, size_t i) {
  std::vector<GRat> v(n);
  v[i] = GRat(1);
  return v;
}

std::string combo_text(const LieSuperAlgebra& g, const std::vector<GRat>& v) {
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    if (!first) out << " + ";
    out << "(" << to_string(v[k]) << ")*" << g.names[k];
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace

JacobiReport check_jacobi(const LieSuperAlgebra& g) {
  const size_t n = g.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      int sgn = koszul_sign(g.parity_of(i), g.parity_of(j));
      for (size_t k = 0; k < n; ++k) {
        // super antisymmetry
        GRat lhs = g.coeff(i, j, k);
        GRat rhs = GRat(-sgn) * g.coeff(j, i, k);
        if (lhs != rhs)
          return {false,
                  "antisymmetry fails: c[" + g.names[i] + "][" + g.names[j] +
                      "][" + g.names[k] + "] = " + to_string(lhs) +
                      " but -(-1)^{|i||j|} c[j][i][k] = " + to_string(rhs),
                  i, j, k};
        // bracket parity
        if (!g.coeff(i, j, k).is_zero() &&
            g.parity_of(k) != parity_add(g.parity_of(i), g.parity_of(j)))
          return {false,
                  "bracket parity fails at [" + g.names[i] + "," + g.names[j] +
                      "] -> " + g.names[k],
                  i, j, k};
      }
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        auto X = basis_vec(n, i), Y = basis_vec(n, j), Z = basis_vec(n, k);
        auto lhs = bracket_of(g, X, bracket_of(g, Y, Z));
        auto rhs = bracket_of(g, bracket_of(g, X, Y), Z);
        auto yxz = bracket_of(g, Y, bracket_of(g, X, Z));
        int sgn = koszul_sign(g.parity_of(i), g.parity_of(j));
        for (size_t t = 0; t < n; ++t) rhs[t] += GRat(sgn) * yxz[t];
        if (lhs != rhs) {
          std::vector<GRat> residual(n);
          for (size_t t = 0; t < n; ++t) residual[t] = lhs[t] - rhs[t];
          return {false,
                  "Jacobi fails at (" + g.names[i] + "," + g.names[j] + "," +
                      g.names[k] + "): [X,[Y,Z]] = " + combo_text(g, lhs) +
                      ", [[X,Y],Z] + (-1)^{|X||Y|}[Y,[X,Z]] = " +
                      combo_text(g, rhs),
                  i, j, k};
        }
      }
  return {};
}

LieSuperAlgebra bar(const LieSuperAlgebra& g) {
  LieSuperAlgebra out = g;
  for (size_t i = g.n_even; i < g.dim(); ++i)
    for (size_t j = g.n_even; j < g.dim(); ++j)
      for (size_t k = 0; k < g.dim(); ++k) out.c[i][j][k] = -g.c[i][j][k];
  return out;
}

CliffordReport clifford_relation_check(const CliffordSignature& sig,
                                       const std::vector<ExactMatrix>& actions) {
  if (actions.size() != sig.total())
    return {false, "expected " + std::to_string(sig.total()) +
                       " Clifford actions, got " +
                       std::to_string(actions.size())};
  auto name_of = [&](size_t k) {
    return k < sig.p ? "e" + std::to_string(k + 1)
                     : "f" + std::to_string(k - sig.p + 1);
  };
  for (size_t k = 0; k < actions.size(); ++k) {
    const ExactMatrix& a = actions[k];
    if (!a.is_square()) return {false, name_of(k) + " is not square"};
    ExactMatrix sq = a * a;
    int want = k < sig.p ? -1 : +1;
    ExactMatrix expect =
        ExactMatrix::identity(a.rows(), a.field()).scaled(GRat(want));
    if (sq != expect)
      return {false, name_of(k) + "^2 != " + std::to_string(want) +
                         "*Id, residual " + (sq - expect).to_text()};
  }
  for (size_t k = 0; k < actions.size(); ++k)
    for (size_t l = k + 1; l < actions.size(); ++l) {
      ExactMatrix anti = actions[k] * actions[l] + actions[l] * actions[k];
      if (!anti.is_zero())
        return {false, name_of(k) + " and " + name_of(l) +
                           " do not anti-commute, residual " + anti.to_text()};
    }
  return {};
}

LieSuperAlgebra builtin_trivial(FieldTag field) {
  return make_algebra(field, {}, {});
}

LieSuperAlgebra builtin_q1(FieldTag field) {
  LieSuperAlgebra g = make_algebra(field, {"H"}, {"Q"});
  g.c[1][1][0] = GRat(2);  // [Q,Q] = 2H
  return g;
}

ShiftedContext builtin_context(const std::string& name, FieldTag field) {
  if (name == "trivial") return {builtin_trivial(field), {}};
  if (name == "q1") return {builtin_q1(field), {}};
  if (name.rfind("clifford:", 0) == 0) {
    std::string rest = name.substr(9);
    auto comma = rest.find(',');
    try {
      size_t p, q;
      if (comma == std::string::npos) {
        p = std::stoul(rest);
        q = 0;
      } else {
        p = std::stoul(rest.substr(0, comma));
        q = std::stoul(rest.substr(comma + 1));
      }
      return {builtin_trivial(field), {p, q}};
    } catch (const std::exception&) {
      throw std::invalid_argument("bad clifford signature in '" + name + "'");
    }
  }
  throw std::invalid_argument("unknown builtin '" + name + "'");
}

}  // namespace srep
