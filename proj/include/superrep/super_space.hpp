#pragma once

#include <vector>

#include "superrep/exact_matrix.hpp"

namespace srep {

enum class Parity { Even, Odd };

inline Parity parity_add(Parity a, Parity b) {
  return a == b ? Parity::Even : Parity::Odd;
}

// (-1)^{|x||y|}: -1 exactly when both are odd.
inline int koszul_sign(Parity a, Parity b) {
  return (a == Parity::Odd && b == Parity::Odd) ? -1 : +1;
}

// Basis convention everywhere: even block first, then odd block.
struct SuperSpace {
  size_t dim_even = 0;
  size_t dim_odd = 0;
  FieldTag field = FieldTag::RealQ;

  size_t dim() const { return dim_even + dim_odd; }
  Parity parity_of(size_t index) const {
    return index < dim_even ? Parity::Even : Parity::Odd;
  }
  bool operator==(const SuperSpace& o) const {
    return dim_even == o.dim_even && dim_odd == o.dim_odd && field == o.field;
  }
};

// +1 on the even block, -1 on the odd block.
ExactMatrix grading_operator(const SuperSpace& v);

// Homogeneous linear map between super spaces. Even maps preserve the
// block split, odd maps swap it; mixed matrices are rejected.
struct GradedMap {
  SuperSpace source;
  SuperSpace target;
  ExactMatrix matrix;
  Parity parity = Parity::Even;

  bool block_pattern_ok() const;
};

GradedMap make_graded_map(const SuperSpace& source, const SuperSpace& target,
                          ExactMatrix matrix, Parity parity);

// Even and odd dimensions swapped; basis vectors keep their identity, so a
// matrix on V transports to V^Pi by conjugating with the block permutation.
SuperSpace parity_reverse_space(const SuperSpace& v);

// Permutation matrix sending the basis order of V to the basis order of
// V^Pi (odd block first becomes the new even block).
ExactMatrix parity_transport(const SuperSpace& v);

// Tensor product space with its deterministic index bijection.
// Even block: V0*W0 pairs then V1*W1; odd block: V1*W0 then V0*W1;
// lexicographic (V index major) within each of the four groups.
struct TensorIndex {
  SuperSpace space;
  // position[i][j] = basis slot of v_i (x) w_j in the tensor order
  std::vector<std::vector<size_t>> position;
};

TensorIndex tensor_space(const SuperSpace& v, const SuperSpace& w);

// Plain matrix tensor product transported to the graded basis order:
// (v_i (x) w_j) -> sum A[i',i] B[j',j] (v_i' (x) w_j'), no signs.
ExactMatrix plain_tensor_matrix(const ExactMatrix& a, const ExactMatrix& b,
                                const TensorIndex& src, const TensorIndex& dst);

// Koszul-signed tensor of homogeneous maps:
// (f (x) g)(v (x) w) = (-1)^{|g||v|} f(v) (x) g(w).
GradedMap map_tensor(const GradedMap& f, const GradedMap& g);

}  // namespace srep
