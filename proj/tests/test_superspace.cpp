#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "superrep/super_space.hpp"

using namespace srep;

namespace {

ExactMatrix rand_pattern_matrix(const SuperSpace& sp, Parity p,
                                std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-2, 2);
  ExactMatrix m(sp.dim(), sp.dim(), sp.field);
  for (size_t i = 0; i < sp.dim(); ++i)
    for (size_t j = 0; j < sp.dim(); ++j)
      if (parity_add(sp.parity_of(i), sp.parity_of(j)) == p)
        m.at(i, j) = GRat(d(rng));
  return m;
}

}  // namespace

TEST_CASE("koszul sign") {
  CHECK(koszul_sign(Parity::Odd, Parity::Odd) == -1);
  CHECK(koszul_sign(Parity::Even, Parity::Odd) == 1);
  CHECK(koszul_sign(Parity::Even, Parity::Even) == 1);
}

TEST_CASE("grading operator squares to the identity") {
  for (auto [e, o] : {std::pair<size_t, size_t>{1, 0}, {2, 3}, {0, 2}}) {
    SuperSpace sp{e, o, FieldTag::RealQ};
    ExactMatrix g = grading_operator(sp);
    CHECK((g * g).is_identity());
  }
}

TEST_CASE("tensor space dimensions") {
  SuperSpace a{1, 0, FieldTag::RealQ}, b{1, 1, FieldTag::RealQ},
      c{0, 1, FieldTag::RealQ};
  CHECK(tensor_space(a, a).space == SuperSpace{1, 0, FieldTag::RealQ});
  CHECK(tensor_space(b, b).space == SuperSpace{2, 2, FieldTag::RealQ});
  CHECK(tensor_space(c, c).space == SuperSpace{1, 0, FieldTag::RealQ});
}

TEST_CASE("tensor basis parity is additive") {
  SuperSpace v{2, 1, FieldTag::RealQ}, w{1, 2, FieldTag::RealQ};
  TensorIndex t = tensor_space(v, w);
  for (size_t i = 0; i < v.dim(); ++i)
    for (size_t j = 0; j < w.dim(); ++j)
      CHECK(t.space.parity_of(t.position[i][j]) ==
            parity_add(v.parity_of(i), w.parity_of(j)));
}

TEST_CASE("map_tensor of identities is the identity") {
  SuperSpace v{2, 1, FieldTag::RealQ}, w{1, 1, FieldTag::RealQ};
  GradedMap idv =
      make_graded_map(v, v, ExactMatrix::identity(3, v.field), Parity::Even);
  GradedMap idw =
      make_graded_map(w, w, ExactMatrix::identity(2, w.field), Parity::Even);
  CHECK(map_tensor(idv, idw).matrix.is_identity());
}

TEST_CASE("grading of a tensor is the tensor of gradings") {
  SuperSpace v{2, 1, FieldTag::RealQ}, w{1, 2, FieldTag::RealQ};
  GradedMap gv = make_graded_map(v, v, grading_operator(v), Parity::Even);
  GradedMap gw = make_graded_map(w, w, grading_operator(w), Parity::Even);
  TensorIndex t = tensor_space(v, w);
  CHECK(map_tensor(gv, gw).matrix == grading_operator(t.space));
}

TEST_CASE("odd times odd picks up the Koszul sign") {
  SuperSpace v{0, 1, FieldTag::RealQ};
  SuperSpace vpi{1, 0, FieldTag::RealQ};
  ExactMatrix f(1, 1, FieldTag::RealQ);
  f.at(0, 0) = GRat(1);
  GradedMap fo = make_graded_map(v, vpi, f, Parity::Odd);
  GradedMap go = make_graded_map(v, vpi, f, Parity::Odd);
  GradedMap prod = map_tensor(fo, go);
  // (f (x) g)(v (x) v) = (-1)^{|g||v|} f(v) (x) g(v) = -(fv (x) gv)
  CHECK(prod.matrix.at(0, 0) == GRat(-1));
  CHECK(prod.parity == Parity::Even);
}

TEST_CASE("parity reversal of spaces") {
  SuperSpace v{2, 1, FieldTag::RealQ};
  CHECK(parity_reverse_space(v) == SuperSpace{1, 2, FieldTag::RealQ});
  CHECK(parity_reverse_space(parity_reverse_space(v)) == v);
  SuperSpace z{0, 0, FieldTag::RealQ};
  CHECK(parity_reverse_space(z) == z);
}

TEST_CASE("graded map block patterns are enforced") {
  SuperSpace v{1, 1, FieldTag::RealQ};
  ExactMatrix diag = ExactMatrix::identity(2, FieldTag::RealQ);
  CHECK_NOTHROW(make_graded_map(v, v, diag, Parity::Even));
  CHECK_THROWS(make_graded_map(v, v, diag, Parity::Odd));
  ExactMatrix anti(2, 2, FieldTag::RealQ);
  anti.at(0, 1) = GRat(1);
  anti.at(1, 0) = GRat(1);
  CHECK_NOTHROW(make_graded_map(v, v, anti, Parity::Odd));
  CHECK_THROWS(make_graded_map(v, v, anti, Parity::Even));
}

TEST_CASE("conjugation by the grading flips odd maps") {
  std::mt19937 rng(3);
  SuperSpace v{2, 2, FieldTag::RealQ};
  ExactMatrix g = grading_operator(v);
  for (int trial = 0; trial < 20; ++trial) {
    for (Parity p : {Parity::Even, Parity::Odd}) {
      ExactMatrix m = rand_pattern_matrix(v, p, rng);
      ExactMatrix conj = g * m * g;
      CHECK(conj == (p == Parity::Even ? m : -m));
    }
  }
}

TEST_CASE("map_tensor is associative along the tensor reindexing") {
  std::mt19937 rng(5);
  SuperSpace a{1, 1, FieldTag::RealQ}, b{2, 1, FieldTag::RealQ},
      c{1, 2, FieldTag::RealQ};
  for (int trial = 0; trial < 6; ++trial) {
    for (Parity pa : {Parity::Even, Parity::Odd})
      for (Parity pb : {Parity::Even, Parity::Odd}) {
        GradedMap fa =
            make_graded_map(a, a, rand_pattern_matrix(a, pa, rng), pa);
        GradedMap fb =
            make_graded_map(b, b, rand_pattern_matrix(b, pb, rng), pb);
        GradedMap fc = make_graded_map(
            c, c, rand_pattern_matrix(c, Parity::Even, rng), Parity::Even);
        GradedMap left = map_tensor(map_tensor(fa, fb), fc);
        GradedMap right = map_tensor(fa, map_tensor(fb, fc));
        TensorIndex ab = tensor_space(a, b);
        TensorIndex ab_c = tensor_space(ab.space, c);
        TensorIndex bc = tensor_space(b, c);
        TensorIndex a_bc = tensor_space(a, bc.space);
        bool equal = true;
        for (size_t i1 = 0; i1 < a.dim() && equal; ++i1)
          for (size_t j1 = 0; j1 < b.dim() && equal; ++j1)
            for (size_t k1 = 0; k1 < c.dim() && equal; ++k1)
              for (size_t i2 = 0; i2 < a.dim() && equal; ++i2)
                for (size_t j2 = 0; j2 < b.dim() && equal; ++j2)
                  for (size_t k2 = 0; k2 < c.dim() && equal; ++k2) {
                    size_t lc = ab_c.position[ab.position[i1][j1]][k1];
                    size_t lr = ab_c.position[ab.position[i2][j2]][k2];
                    size_t rc = a_bc.position[i1][bc.position[j1][k1]];
                    size_t rr = a_bc.position[i2][bc.position[j2][k2]];
                    equal = left.matrix.at(lr, lc) == right.matrix.at(rr, rc);
                  }
        CHECK(equal);
      }
  }
}
