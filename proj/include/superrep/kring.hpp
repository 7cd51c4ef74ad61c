#pragma once

#include <functional>
#include <map>
#include <string>

#include "superrep/classify.hpp"
#include "superrep/int_matrix.hpp"

namespace srep {

// Ordered list of pairwise non-isomorphic irreducibles over one context;
// the basis of a free abelian group. Grows on demand through class_of.
struct IrreducibleRegistry {
  ShiftedContext context;
  bool graded = true;
  std::vector<SuperModule> modules;

  size_t size() const { return modules.size(); }
};

// Coefficients of m in the registry basis, by composition factors matched
// through iso_test (generic path) or by exact trace characters (trivial
// algebra, where registries are complete). Unseen irreducibles are appended.
std::vector<mpz_class> class_of(const SuperModule& m,
                                IrreducibleRegistry& reg);

using ModuleFunctor = std::function<SuperModule(const SuperModule&)>;

// Column j = class_of(fn(generator j)). Registries must be stable under fn
// up to growth; freshly appended targets pad earlier columns with zeros.
IntMatrix map_matrix_fn(const ModuleFunctor& fn, IrreducibleRegistry& src,
                        IrreducibleRegistry& tgt);

enum class Functor { Pi, Dag, Delta, DeltaTilde, Forget, Restrict, ProjectEven,
                     ForgetThenLift };

IntMatrix map_matrix(Functor f, IrreducibleRegistry& src,
                     IrreducibleRegistry& tgt);

// Integer kernel basis of (involution - sign); sign +1 gives R_+ (or R_sc),
// sign -1 gives R_- (or R_ac).
IntMatrix eigenlattice(const IntMatrix& involution, int sign);

struct GroupPresentation {
  size_t ambient_rank = 0;
  IntMatrix relations;
  GroupInvariants invariants;
};

GroupPresentation quotient_group(size_t ambient_rank,
                                 const IntMatrix& relations);

// One node of a (co)chain of finitely generated abelian groups: the group is
// span(generators) / span(relations) inside the ambient registry lattice.
struct SeqNode {
  std::string name;
  size_t ambient = 0;
  IntMatrix generators;
  IntMatrix relations;
  GroupInvariants invariants;
};

struct SeqArrow {
  std::string name;
  IntMatrix matrix;  // ambient coordinates, source -> target
};

struct ExactSequence {
  bool cyclic = false;
  std::vector<SeqNode> nodes;
  std::vector<SeqArrow> arrows;  // arrows[i] : nodes[i] -> nodes[i+1 (mod)]
};

struct NodeVerdict {
  std::string node;
  bool exact = false;
  std::string detail;
};

// Im = Ker at every interior node (every node when cyclic), computed as
// lattice equality after saturating both sides with the node relations.
std::vector<NodeVerdict> check_exactness(const ExactSequence& seq);

// Registries per Clifford signature for a fixed algebra. Trivial algebras
// get complete Clifford lists; complex algebras get degree-0 seeds shifted
// upward; anything else starts from the seeds and grows by closure.
class RegistryStore {
 public:
  RegistryStore(LieSuperAlgebra algebra, FieldTag field,
                std::vector<SuperModule> graded_degree0 = {},
                std::vector<SuperModule> ungraded_degree0 = {});

  const LieSuperAlgebra& algebra() const { return algebra_; }
  FieldTag field() const { return field_; }

  IrreducibleRegistry& graded_at(size_t p, size_t q = 0);
  IrreducibleRegistry& ungraded_at(size_t p, size_t q = 0);

 private:
  LieSuperAlgebra algebra_;
  FieldTag field_;
  std::vector<SuperModule> graded_seeds_, ungraded_seeds_;
  std::map<std::tuple<size_t, size_t, bool>, IrreducibleRegistry> cache_;
};

enum class SequenceVariant { SixComplex, SixReal, TwentyFour };

// Closes the registries at (p,q) and (p+1,q) under restriction, the graded
// realization of the forgetful map, and parity reversal.
void close_degrees(RegistryStore& store, size_t p, size_t q = 0);

// SixComplex / SixReal: the cyclic sequence
//   R+^{-n} -pi-> SR^{-n} -delta-> RZ2^{-n} -f-> R+^{-n-1} -pi-> SR^{-n-1}
//   -delta-> RZ2^{-n-1} -i*-> R+^{-n}
// where f is realized on graded modules as diag_lift after forgetting the
// grading, and the second SR node is the ungraded super representation
// group (real case: SR^{n+1} of the bar algebra).
// TwentyFour: the linear window n = 8..1 of the real long exact sequence,
// with head RZ2^{-9} and tail R+^{0}; its 24 interior nodes are checked.
ExactSequence build_sequence(RegistryStore& store, SequenceVariant variant,
                             size_t degree = 0);

struct DegreeGroups {
  size_t rz2_rank = 0;
  size_t rplus_rank = 0;
  size_t rminus_rank = 0;
  GroupInvariants sr;
};

// Invariants of RZ2, R+, R-, SR at signature (p,q); the SR relations come
// from the restriction map out of (p+1,q).
DegreeGroups degree_groups(RegistryStore& store, size_t p, size_t q = 0);

}  // namespace srep
