#include "superrep/super_space.hpp"

#include <stdexcept>

namespace srep {

ExactMatrix grading_operator(const SuperSpace& v) {
  ExactMatrix g(v.dim(), v.dim(), v.field);
  for (size_t i = 0; i < v.dim(); ++i)
    g.at(i, i) = v.parity_of(i) == Parity::Even ? GRat(1) : GRat(-1);
  return g;
}

bool GradedMap::block_pattern_ok() const {
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim())
    return false;
  for (size_t i = 0; i < matrix.rows(); ++i)
    for (size_t j = 0; j < matrix.cols(); ++j) {
      if (matrix.at(i, j).is_zero()) continue;
      Parity block = parity_add(target.parity_of(i), source.parity_of(j));
      if (block != parity) return false;
    }
  return true;
}

GradedMap make_graded_map(const SuperSpace& source, const SuperSpace& target,
                          ExactMatrix matrix, Parity parity) {
  GradedMap m{source, target, std::move(matrix), parity};
  if (source.field != target.field || m.matrix.field() != source.field)
    throw std::invalid_argument("graded map field mismatch");
  if (!m.block_pattern_ok())
    throw std::invalid_argument("matrix violates the declared parity blocks");
  return m;
}

SuperSpace parity_reverse_space(const SuperSpace& v) {
  return SuperSpace{v.dim_odd, v.dim_even, v.field};
}

ExactMatrix parity_transport(const SuperSpace& v) {
  // column j holds the image of old basis vector j in the new order
  ExactMatrix p(v.dim(), v.dim(), v.field);
  for (size_t j = 0; j < v.dim(); ++j) {
    size_t new_pos = j < v.dim_even ? v.dim_odd + j : j - v.dim_even;
    p.at(new_pos, j) = GRat(1);
  }
  return p;
}

TensorIndex tensor_space(const SuperSpace& v, const SuperSpace& w) {
  if (v.field != w.field)
    throw std::invalid_argument("tensor of spaces over different fields");
  TensorIndex t;
  t.space.field = v.field;
  t.space.dim_even = v.dim_even * w.dim_even + v.dim_odd * w.dim_odd;
  t.space.dim_odd = v.dim_odd * w.dim_even + v.dim_even * w.dim_odd;
  t.position.assign(v.dim(), std::vector<size_t>(w.dim(), 0));
  size_t slot = 0;
  auto fill = [&](Parity pv, Parity pw) {
    for (size_t i = 0; i < v.dim(); ++i) {
      if (v.parity_of(i) != pv) continue;
      for (size_t j = 0; j < w.dim(); ++j) {
        if (w.parity_of(j) != pw) continue;
        t.position[i][j] = slot++;
      }
    }
  };
  fill(Parity::Even, Parity::Even);
  fill(Parity::Odd, Parity::Odd);
  fill(Parity::Odd, Parity::Even);
  fill(Parity::Even, Parity::Odd);
  return t;
}

ExactMatrix plain_tensor_matrix(const ExactMatrix& a, const ExactMatrix& b,
                                const TensorIndex& src,
                                const TensorIndex& dst) {
  ExactMatrix r(dst.space.dim(), src.space.dim(), src.space.field);
  for (size_t i2 = 0; i2 < a.rows(); ++i2)
    for (size_t i1 = 0; i1 < a.cols(); ++i1) {
      if (a.at(i2, i1).is_zero()) continue;
      for (size_t j2 = 0; j2 < b.rows(); ++j2)
        for (size_t j1 = 0; j1 < b.cols(); ++j1) {
          if (b.at(j2, j1).is_zero()) continue;
          r.at(dst.position[i2][j2], src.position[i1][j1]) =
              a.at(i2, i1) * b.at(j2, j1);
        }
    }
  return r;
}

GradedMap map_tensor(const GradedMap& f, const GradedMap& g) {
  TensorIndex src = tensor_space(f.source, g.source);
  TensorIndex dst = tensor_space(f.target, g.target);
  // twist the first factor by the grading when g is odd:
  // (f (x) g) = plain(f o (-1)^{F |g|}, g)
  ExactMatrix a = f.matrix;
  if (g.parity == Parity::Odd) a = a * grading_operator(f.source);
  ExactMatrix m = plain_tensor_matrix(a, g.matrix, src, dst);
  return make_graded_map(src.space, dst.space, std::move(m),
                         parity_add(f.parity, g.parity));
}

}  // namespace srep
