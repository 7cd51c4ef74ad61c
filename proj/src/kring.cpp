#include "superrep/kring.hpp"

#include <sstream>
#include <stdexcept>

namespace srep {

namespace {

void require_member_context(const SuperModule& m,
                            const IrreducibleRegistry& reg) {
  if (!(m.context == reg.context) || m.graded != reg.graded)
    throw std::invalid_argument("module does not match the registry context");
}

// trace character key for trivial-algebra registries: the class of a module
// over a (semisimple) Clifford context is pinned down by the block
// dimensions together with the trace of the full generator word
std::vector<GRat> character_key(const SuperModule& m) {
  ExactMatrix word = ExactMatrix::identity(m.dim(), m.field());
  for (const auto& e : m.e_action) word = word * e;
  for (const auto& f : m.f_action) word = word * f;
  if (m.graded) word = word * m.grading();
  GRat trace;
  for (size_t i = 0; i < m.dim(); ++i) trace += word.at(i, i);
  GRat d0(rat(static_cast<long>(m.graded ? m.space.dim_even : m.dim())));
  GRat d1(rat(static_cast<long>(m.graded ? m.space.dim_odd : 0)));
  return {d0, d1, trace};
}

std::vector<mpz_class> class_by_character(const SuperModule& m,
                                          IrreducibleRegistry& reg) {
  ExactMatrix keys(3, reg.size(), m.field());
  for (size_t j = 0; j < reg.size(); ++j) {
    auto k = character_key(reg.modules[j]);
    for (size_t i = 0; i < 3; ++i) keys.at(i, j) = k[i];
  }
  if (mat_rank(keys) != reg.size())
    throw std::logic_error(
        "registry character keys are degenerate; cannot decompose by traces");
  auto k = character_key(m);
  ExactMatrix rhs(3, 1, m.field());
  for (size_t i = 0; i < 3; ++i) rhs.at(i, 0) = k[i];
  auto sol = mat_solve(keys, rhs);
  if (!sol)
    throw std::invalid_argument(
        "module does not decompose over the registry entries");
  std::vector<mpz_class> out(reg.size());
  for (size_t j = 0; j < reg.size(); ++j) {
    const GRat& c = sol->at(j, 0);
    if (!c.is_real() || c.re.get_den() != 1 || c.re < 0)
      throw std::invalid_argument(
          "non-integral multiplicity in character decomposition");
    out[j] = c.re.get_num();
  }
  return out;
}

}  // namespace

std::vector<mpz_class> class_of(const SuperModule& m,
                                IrreducibleRegistry& reg) {
  require_member_context(m, reg);
  if (reg.context.algebra.dim() == 0 && !reg.modules.empty())
    return class_by_character(m, reg);

  CompositionReport report = composition_factors(m);
  std::vector<mpz_class> coeff(reg.size());
  for (const auto& factor : report.factors) {
    size_t found = reg.size();
    for (size_t j = 0; j < reg.size(); ++j) {
      IsoResult iso = iso_test(factor.module, reg.modules[j]);
      if (iso.verdict == IsoVerdict::Undecided)
        throw std::runtime_error(
            "undecided isomorphism while matching registry entry " +
            std::to_string(j));
      if (iso.yes()) {
        found = j;
        break;
      }
    }
    if (found == reg.size()) {
      reg.modules.push_back(factor.module);
      coeff.push_back(0);
    }
    coeff[found] += mpz_class(static_cast<long>(factor.multiplicity));
  }
  return coeff;
}

IntMatrix map_matrix_fn(const ModuleFunctor& fn, IrreducibleRegistry& src,
                        IrreducibleRegistry& tgt) {
  std::vector<std::vector<mpz_class>> cols;
  for (size_t j = 0; j < src.size(); ++j)
    cols.push_back(class_of(fn(src.modules[j]), tgt));
  for (auto& c : cols) c.resize(tgt.size());  // pad newly discovered entries
  return IntMatrix::from_columns(tgt.size(), cols);
}

IntMatrix map_matrix(Functor f, IrreducibleRegistry& src,
                     IrreducibleRegistry& tgt) {
  switch (f) {
    case Functor::Pi:
      return map_matrix_fn(parity_reverse, src, tgt);
    case Functor::Dag:
      return map_matrix_fn(conjugate, src, tgt);
    case Functor::Delta:
      return map_matrix_fn(plain_delta, src, tgt);
    case Functor::DeltaTilde:
      return map_matrix_fn(diag_lift, src, tgt);
    case Functor::Forget:
      return map_matrix_fn(forget_grading, src, tgt);
    case Functor::Restrict:
      return map_matrix_fn(restrict_generator, src, tgt);
    case Functor::ProjectEven:
      return map_matrix_fn(project_even, src, tgt);
    case Functor::ForgetThenLift:
      return map_matrix_fn(
          [](const SuperModule& m) { return diag_lift(forget_grading(m)); },
          src, tgt);
  }
  throw std::logic_error("unknown functor");
}

IntMatrix eigenlattice(const IntMatrix& involution, int sign) {
  if (involution.rows() != involution.cols())
    throw std::invalid_argument("involution matrix must be square");
  if (!(involution * involution == IntMatrix::identity(involution.rows())))
    throw std::invalid_argument("matrix is not an involution");
  IntMatrix shifted = involution;
  for (size_t i = 0; i < shifted.rows(); ++i)
    shifted.at(i, i) -= sign;
  return int_kernel(shifted);
}

GroupPresentation quotient_group(size_t ambient_rank,
                                 const IntMatrix& relations) {
  if (relations.cols() != 0 && relations.rows() != ambient_rank)
    throw std::invalid_argument("relation columns outside the ambient lattice");
  GroupPresentation p;
  p.ambient_rank = ambient_rank;
  p.relations = relations.cols() ? relations : IntMatrix(ambient_rank, 0);
  p.invariants = cokernel_invariants(ambient_rank, p.relations);
  return p;
}

namespace {

GroupInvariants node_invariants(size_t ambient, const IntMatrix& generators,
                                const IntMatrix& relations) {
  const bool full = generators.cols() == ambient &&
                    generators == IntMatrix::identity(ambient);
  if (full) return cokernel_invariants(ambient, relations);
  if (relations.cols() == 0) return GroupInvariants{generators.cols(), {}};
  // express the relations in generator coordinates
  std::vector<std::vector<mpz_class>> cols;
  for (size_t j = 0; j < relations.cols(); ++j) {
    auto sol = int_solve(generators, relations.column_vec(j));
    if (!sol)
      throw std::logic_error("node relations outside the generator lattice");
    cols.push_back(*sol);
  }
  return cokernel_invariants(generators.cols(),
                             IntMatrix::from_columns(generators.cols(), cols));
}

std::string lattice_text(const IntMatrix& l) {
  std::ostringstream out;
  out << "lattice rank " << int_kernel(l.transpose()).cols() << " cols "
      << l.cols();
  return out.str();
}

}  // namespace

std::vector<NodeVerdict> check_exactness(const ExactSequence& seq) {
  const size_t n = seq.nodes.size();
  std::vector<NodeVerdict> verdicts;
  size_t first = seq.cyclic ? 0 : 1;
  size_t last = seq.cyclic ? n : n - 1;  // exclusive
  for (size_t k = first; k < last; ++k) {
    const SeqNode& node = seq.nodes[k];
    const SeqNode& prev = seq.nodes[(k + n - 1) % n];
    const SeqNode& next = seq.nodes[(k + 1) % n];
    const SeqArrow& u = seq.arrows[(k + n - 1) % n];
    const SeqArrow& v = seq.arrows[k];

    NodeVerdict verdict{node.name, false, ""};
    IntMatrix image = u.matrix * prev.generators;
    // range check: the image must land in the node subgroup
    IntMatrix subgroup = IntMatrix::hstack(node.generators, node.relations);
    bool in_range = true;
    for (size_t j = 0; j < image.cols() && in_range; ++j)
      in_range = lattice_contains(subgroup, image.column_vec(j));
    if (!in_range) {
      verdict.detail = "image of " + u.name + " leaves the subgroup";
      verdicts.push_back(verdict);
      continue;
    }
    IntMatrix image_sat = IntMatrix::hstack(image, node.relations);
    IntMatrix vg = v.matrix * node.generators;
    IntMatrix kernel_coeff = kernel_mod_lattice(vg, next.relations);
    IntMatrix kernel_sat =
        IntMatrix::hstack(node.generators * kernel_coeff, node.relations);
    LatticeOrder order = lattice_compare(image_sat, kernel_sat);
    if (order == LatticeOrder::Equal) {
      verdict.exact = true;
    } else {
      std::ostringstream out;
      out << "Im(" << u.name << ") vs Ker(" << v.name << "): ";
      switch (order) {
        case LatticeOrder::AcontainsB:
          out << "image strictly contains kernel";
          break;
        case LatticeOrder::BcontainsA:
          out << "kernel strictly contains image";
          break;
        default:
          out << "incomparable";
      }
      out << " [" << lattice_text(image_sat) << " vs "
          << lattice_text(kernel_sat) << "]";
      verdict.detail = out.str();
    }
    verdicts.push_back(verdict);
  }
  return verdicts;
}

RegistryStore::RegistryStore(LieSuperAlgebra algebra, FieldTag field,
                             std::vector<SuperModule> graded_degree0,
                             std::vector<SuperModule> ungraded_degree0)
    : algebra_(std::move(algebra)),
      field_(field),
      graded_seeds_(std::move(graded_degree0)),
      ungraded_seeds_(std::move(ungraded_degree0)) {}

IrreducibleRegistry& RegistryStore::graded_at(size_t p, size_t q) {
  auto key = std::make_tuple(p, q, true);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  IrreducibleRegistry reg;
  reg.context = ShiftedContext{algebra_, {p, q}};
  reg.graded = true;
  if (algebra_.dim() == 0) {
    reg.modules = clifford_irreducibles(p, q, field_, /*graded=*/true);
  } else if (p == 0 && q == 0) {
    for (const auto& m : graded_seeds_) class_of(m, reg);
  } else if (field_ == FieldTag::ComplexQi && q == 0) {
    ShiftOutput shifted = shift_irreducibles(graded_at(p - 1, 0).modules);
    if (!shifted.notes.empty())
      throw std::runtime_error("degree shift obstruction: " +
                               shifted.notes.front());
    for (const auto& m : shifted.modules) class_of(m, reg);
  }
  // other signatures start empty and grow by closure
  return cache_.emplace(key, std::move(reg)).first->second;
}

IrreducibleRegistry& RegistryStore::ungraded_at(size_t p, size_t q) {
  auto key = std::make_tuple(p, q, false);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  IrreducibleRegistry reg;
  reg.context = ShiftedContext{algebra_, {p, q}};
  reg.graded = false;
  if (algebra_.dim() == 0) {
    reg.modules = clifford_irreducibles(p, q, field_, /*graded=*/false);
  } else if (p == 0 && q == 0) {
    for (const auto& m : ungraded_seeds_) class_of(m, reg);
  }
  return cache_.emplace(key, std::move(reg)).first->second;
}

namespace {

std::string deg_name(const std::string& base, size_t n) {
  return base + "^{-" + std::to_string(n) + "}";
}

IntMatrix identity_of(const IrreducibleRegistry& reg) {
  return IntMatrix::identity(reg.size());
}

IntMatrix empty_relations(const IrreducibleRegistry& reg) {
  return IntMatrix(reg.size(), 0);
}

}  // namespace

// closes the pair of registries under the arrows of the six-term sequence
void close_degrees(RegistryStore& store, size_t p, size_t q) {
  for (int pass = 0; pass < 8; ++pass) {
    IrreducibleRegistry& rn = store.graded_at(p, q);
    IrreducibleRegistry& rn1 = store.graded_at(p + 1, q);
    size_t before = rn.size() + rn1.size();
    for (size_t j = 0; j < rn1.size(); ++j)
      class_of(restrict_generator(rn1.modules[j]), rn);
    for (size_t j = 0; j < rn.size(); ++j)
      class_of(diag_lift(forget_grading(rn.modules[j])), rn1);
    for (size_t j = 0; j < rn.size(); ++j)
      class_of(parity_reverse(rn.modules[j]), rn);
    for (size_t j = 0; j < rn1.size(); ++j)
      class_of(parity_reverse(rn1.modules[j]), rn1);
    if (rn.size() + rn1.size() == before) return;
  }
  throw std::runtime_error("registries failed to close under the sequence");
}

namespace {

ExactSequence build_six(RegistryStore& store, size_t degree) {
  const size_t n = degree;
  close_degrees(store, n, 0);
  IrreducibleRegistry& rn = store.graded_at(n);
  IrreducibleRegistry& rn1 = store.graded_at(n + 1);
  const size_t before = rn.size() + rn1.size();

  IntMatrix pi_n = map_matrix(Functor::Pi, rn, rn);
  IntMatrix pi_n1 = map_matrix(Functor::Pi, rn1, rn1);
  IntMatrix i_star = map_matrix(Functor::Restrict, rn1, rn);
  IntMatrix fwd = map_matrix(Functor::ForgetThenLift, rn, rn1);
  if (rn.size() + rn1.size() != before)
    throw std::logic_error("registry grew while assembling the sequence");

  // delta is well defined on the quotient: (1 - Pi) must kill the relations
  if (!((IntMatrix::identity(rn.size()) - pi_n) * i_star).is_zero())
    throw std::logic_error("delta depends on the coset representative");
  if (!((IntMatrix::identity(rn1.size()) - pi_n1) * fwd).is_zero())
    throw std::logic_error("delta' depends on the coset representative");

  const bool complex = store.field() == FieldTag::ComplexQi;
  ExactSequence seq;
  seq.cyclic = true;
  auto add_node = [&](std::string name, IrreducibleRegistry& reg,
                      IntMatrix gens, IntMatrix rels) {
    GroupInvariants inv = node_invariants(reg.size(), gens, rels);
    seq.nodes.push_back(
        {std::move(name), reg.size(), std::move(gens), std::move(rels), inv});
  };
  add_node(deg_name("R+", n), rn, eigenlattice(pi_n, +1), empty_relations(rn));
  add_node(deg_name("SR", n), rn, identity_of(rn), i_star);
  add_node(deg_name("RZ2", n), rn, identity_of(rn), empty_relations(rn));
  add_node(deg_name("R+", n + 1), rn1, eigenlattice(pi_n1, +1),
           empty_relations(rn1));
  add_node(complex ? deg_name("SR", n + 1)
                   : "SR^{" + std::to_string(n + 1) + "}(gbar)",
           rn1, identity_of(rn1), fwd);
  add_node(deg_name("RZ2", n + 1), rn1, identity_of(rn1),
           empty_relations(rn1));

  seq.arrows.push_back({"pi", IntMatrix::identity(rn.size())});
  seq.arrows.push_back({"delta", IntMatrix::identity(rn.size()) - pi_n});
  seq.arrows.push_back({"f", fwd});
  seq.arrows.push_back({"pi'", IntMatrix::identity(rn1.size())});
  seq.arrows.push_back({"delta'", IntMatrix::identity(rn1.size()) - pi_n1});
  seq.arrows.push_back({"i*", i_star});
  return seq;
}

ExactSequence build_twentyfour(RegistryStore& store) {
  if (store.field() != FieldTag::RealQ)
    throw std::invalid_argument("the 24-term sequence is a real construction");
  // registries 0..9 and the restriction maps between them
  std::vector<IntMatrix> pi(10), istar(10);  // istar[n] : degree n+1 -> n
  for (size_t n = 0; n <= 9; ++n) store.graded_at(n);
  for (size_t n = 0; n <= 9; ++n) {
    IrreducibleRegistry& reg = store.graded_at(n);
    pi[n] = map_matrix(Functor::Pi, reg, reg);
    if (n < 9)
      istar[n] =
          map_matrix(Functor::Restrict, store.graded_at(n + 1), reg);
  }

  ExactSequence seq;
  seq.cyclic = false;
  auto reg_of = [&](size_t n) -> IrreducibleRegistry& {
    return store.graded_at(n);
  };
  auto add_node = [&](std::string name, size_t n, IntMatrix gens,
                      IntMatrix rels) {
    GroupInvariants inv = node_invariants(reg_of(n).size(), gens, rels);
    seq.nodes.push_back(
        {std::move(name), reg_of(n).size(), std::move(gens), std::move(rels),
         inv});
  };

  add_node(deg_name("RZ2", 9), 9, identity_of(reg_of(9)),
           empty_relations(reg_of(9)));
  seq.arrows.push_back({"i*", istar[8]});
  for (size_t n = 8; n >= 1; --n) {
    add_node(deg_name("R+", n), n, eigenlattice(pi[n], +1),
             empty_relations(reg_of(n)));
    seq.arrows.push_back({"pi", IntMatrix::identity(reg_of(n).size())});
    add_node(deg_name("SR", n), n, identity_of(reg_of(n)), istar[n]);
    seq.arrows.push_back(
        {"delta", IntMatrix::identity(reg_of(n).size()) - pi[n]});
    add_node(deg_name("RZ2", n), n, identity_of(reg_of(n)),
             empty_relations(reg_of(n)));
    seq.arrows.push_back({"i*", istar[n - 1]});
  }
  add_node(deg_name("R+", 0), 0, eigenlattice(pi[0], +1),
           empty_relations(reg_of(0)));
  return seq;
}

}  // namespace

ExactSequence build_sequence(RegistryStore& store, SequenceVariant variant,
                             size_t degree) {
  switch (variant) {
    case SequenceVariant::SixComplex:
      if (store.field() != FieldTag::ComplexQi)
        throw std::invalid_argument("six-complex needs the ComplexQi field");
      return build_six(store, degree);
    case SequenceVariant::SixReal:
      if (store.field() != FieldTag::RealQ)
        throw std::invalid_argument("six-real needs the RealQ field");
      return build_six(store, degree);
    case SequenceVariant::TwentyFour:
      return build_twentyfour(store);
  }
  throw std::logic_error("unknown sequence variant");
}

DegreeGroups degree_groups(RegistryStore& store, size_t p, size_t q) {
  close_degrees(store, p, q);
  IrreducibleRegistry& rn = store.graded_at(p, q);
  IrreducibleRegistry& rn1 = store.graded_at(p + 1, q);
  IntMatrix pi = map_matrix(Functor::Pi, rn, rn);
  IntMatrix i_star = map_matrix(Functor::Restrict, rn1, rn);
  DegreeGroups g;
  g.rz2_rank = rn.size();
  g.rplus_rank = eigenlattice(pi, +1).cols();
  g.rminus_rank = eigenlattice(pi, -1).cols();
  g.sr = cokernel_invariants(rn.size(), i_star);
  return g;
}

}  // namespace srep
