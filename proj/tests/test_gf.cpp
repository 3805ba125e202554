#include "doctest.h"

#include "p3/gf.hpp"

using namespace p3;

namespace {

Matrix mat(const Field& F, std::vector<std::vector<int>> rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = F.from_int(rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("field_make examples") {
  auto f2 = Field::make(2);
  CHECK(f2->order() == 2);
  CHECK(f2->degree() == 1);

  auto f9 = Field::make(3, 2);
  CHECK(f9->order() == 9);
  // t^2 + 1
  CHECK(f9->modulus_poly() == std::vector<unsigned>{1, 0});
  CHECK(f9->mul(f9->t(), f9->t()) == f9->from_int(-1));

  CHECK(Field::make(2, 2)->modulus_poly() == std::vector<unsigned>{1, 1});
  CHECK(Field::make(5, 2)->modulus_poly() == std::vector<unsigned>{2, 0});

  try {
    Field::make(4);
    FAIL("expected NonPrime");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPrime);
  }
  CHECK_THROWS_AS(Field::make(3, 3), Error);
}

TEST_CASE("field axioms exhaustive for small fields") {
  for (auto [p, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}}) {
    auto F = Field::make(p, d);
    const unsigned q = F->order();
    for (unsigned a = 0; a < q; ++a) {
      Scalar sa = F->element(a);
      CHECK(F->pow(sa, q) == sa);
      if (a != 0) CHECK(F->mul(sa, F->inv(sa)) == F->one());
      CHECK(F->add(sa, F->neg(sa)) == F->zero());
      for (unsigned b = 0; b < q; ++b) {
        Scalar sb = F->element(b);
        CHECK(F->add(sa, sb) == F->add(sb, sa));
        CHECK(F->mul(sa, sb) == F->mul(sb, sa));
        // Frobenius is additive and multiplicative
        CHECK(F->pow(F->add(sa, sb), p) == F->add(F->pow(sa, p), F->pow(sb, p)));
        CHECK(F->pow(F->mul(sa, sb), p) == F->mul(F->pow(sa, p), F->pow(sb, p)));
        for (unsigned c = 0; c < q; ++c) {
          Scalar sc = F->element(c);
          CHECK(F->mul(F->mul(sa, sb), sc) == F->mul(sa, F->mul(sb, sc)));
          CHECK(F->add(F->add(sa, sb), sc) == F->add(sa, F->add(sb, sc)));
          CHECK(F->mul(sa, F->add(sb, sc)) == F->add(F->mul(sa, sb), F->mul(sa, sc)));
        }
      }
    }
  }
}

TEST_CASE("scalar strings round trip") {
  auto F = Field::make(3, 2);
  CHECK(F->to_string(F->t()) == "t");
  CHECK(F->to_string(F->from_coeffs(std::vector<unsigned>{1, 2})) == "1+2*t");
  CHECK(F->parse("-1") == F->from_int(2));
  CHECK(F->parse("1+2*t") == F->from_coeffs(std::vector<unsigned>{1, 2}));
  CHECK(F->parse("2t") == F->mul(F->from_int(2), F->t()));
  for (unsigned c = 0; c < 9; ++c) CHECK(F->parse(F->to_string(F->element(c))) == F->element(c));
  CHECK_THROWS_AS(F->parse("x"), Error);
  CHECK_THROWS_AS(Field::make(3)->parse("t"), Error);
}

TEST_CASE("linsolve examples") {
  auto F3 = Field::make(3);
  Matrix I = Matrix::identity(*F3, 3);
  Matrix b = mat(*F3, {{1}, {2}, {0}});
  auto r = linsolve(*F3, I, b);
  REQUIRE(r.particular);
  CHECK(*r.particular == b);
  CHECK(r.nullspace.empty());

  Matrix Z(3, 3);
  auto rz = linsolve(*F3, Z, Matrix(3, 1));
  REQUIRE(rz.particular);
  CHECK(rz.nullspace.size() == 3);

  auto F2 = Field::make(2);
  auto r2 = linsolve(*F2, mat(*F2, {{1, 1}, {1, 1}}), Matrix(2, 1));
  REQUIRE(r2.nullspace.size() == 1);
  CHECK(r2.nullspace[0] == Vec{Scalar{1}, Scalar{1}});

  // inconsistent system
  auto bad = linsolve(*F2, mat(*F2, {{1, 1}, {1, 1}}), mat(*F2, {{0}, {1}}));
  CHECK_FALSE(bad.particular);

  CHECK_THROWS_AS(linsolve(*F2, Matrix(2, 2), Matrix(3, 1)), Error);
}

TEST_CASE("rank plus nullity") {
  auto F = Field::make(5);
  std::uint32_t state = 12345;
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t rows = 1 + trial % 6, cols = 1 + (trial * 7) % 9;
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        state = state * 1103515245u + 12345u;
        m(i, j) = F->from_int((state >> 16) % 5 < 3 ? 0 : (state >> 8) % 5);
      }
    auto ns = nullspace(*F, m);
    CHECK(rank(*F, m) + ns.size() == cols);
    for (const auto& v : ns) CHECK(is_zero(mat_vec(*F, m, v)));
  }
}

TEST_CASE("determinant and inverse") {
  auto F = Field::make(7);
  Matrix m = mat(*F, {{2, 1}, {1, 1}});
  CHECK(determinant(*F, m) == F->one());
  auto inv = inverse(*F, m);
  REQUIRE(inv);
  CHECK(mat_mul(*F, m, *inv) == Matrix::identity(*F, 2));
  CHECK_FALSE(inverse(*F, mat(*F, {{1, 2}, {2, 4}})));
}

TEST_CASE("subspaces") {
  auto F = Field::make(3);
  auto S = Subspace::span(*F, 3, {Vec{Scalar{1}, Scalar{1}, Scalar{0}}, Vec{Scalar{2}, Scalar{2}, Scalar{0}}});
  CHECK(S.dim() == 1);
  CHECK(S.contains(*F, Vec{Scalar{2}, Scalar{2}, Scalar{0}}));
  CHECK_FALSE(S.contains(*F, Vec{Scalar{1}, Scalar{0}, Scalar{0}}));
  auto T = Subspace::span(*F, 3, {Vec{Scalar{0}, Scalar{1}, Scalar{0}}, Vec{Scalar{1}, Scalar{0}, Scalar{0}}});
  CHECK(intersect(*F, S, T).dim() == 1);
  CHECK(sum(*F, S, T).dim() == 2);
  CHECK(S.non_pivots() == std::vector<std::size_t>{1, 2});
  auto U = Subspace::span(*F, 3, {Vec{Scalar{0}, Scalar{0}, Scalar{1}}});
  CHECK(intersect(*F, S, U).dim() == 0);
}
