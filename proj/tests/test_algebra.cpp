#include "doctest.h"

#include "p3/algebra.hpp"
#include "p3/families.hpp"

using namespace p3;

namespace {

Algebra fam(Label l, unsigned p) {
  auto F = Field::make(p);
  return build_family_algebra(l, p, default_params(l, p, F));
}

std::size_t idx(const Algebra& A, const std::string& label) {
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (A.labels()[i] == label) return i;
  FAIL("no basis label " << label);
  return 0;
}

}  // namespace

TEST_CASE("multiply examples") {
  Algebra B1 = fam(Label::B1, 3);
  const Field& F = B1.field();
  Vec x = B1.generator("x"), y = B1.generator("y");
  Vec yx = B1.multiply(y, x);
  Vec expect(B1.dim());
  expect[idx(B1, "xy")] = F.one();
  expect[idx(B1, "y")] = F.from_int(-1);
  CHECK(yx == expect);
  for (std::size_t i = 0; i < B1.dim(); ++i) CHECK(B1.multiply(B1.unit(), B1.basis(i)) == B1.basis(i));

  Algebra A3 = fam(Label::A3, 2);
  CHECK(is_zero(A3.multiply(A3.generator("x"), A3.generator("x"))));
  CHECK_THROWS_AS(A3.multiply(Vec(3), A3.unit()), Error);
}

TEST_CASE("ideal closure") {
  Algebra B1 = fam(Label::B1, 2);
  CHECK(ideal_closure(B1, {B1.unit()}).is_whole());
  CHECK(ideal_closure(B1, {B1.generator("y"), B1.generator("z")}).dim() == 6);
  Algebra B1_3 = fam(Label::B1, 3);
  CHECK(ideal_closure(B1_3, {B1_3.generator("y"), B1_3.generator("z")}).dim() == 24);
  Algebra C12 = fam(Label::C12, 3);
  auto I = ideal_closure(C12, {C12.generator("y")});
  CHECK(I.dim() == 24);
  CHECK(is_two_sided_ideal(C12, I));
}

TEST_CASE("nilpotency") {
  Algebra A3 = fam(Label::A3, 2);
  auto zero = ideal_is_nilpotent(A3, Subspace(8));
  CHECK(zero.nilpotent);
  CHECK(zero.index == 1);
  auto aug = ideal_closure(A3, {A3.generator("x"), A3.generator("y"), A3.generator("z")});
  auto r = ideal_is_nilpotent(A3, aug);
  CHECK(r.nilpotent);
  CHECK(r.index == 4);
  CHECK(r.power_dims == std::vector<std::size_t>{7, 4, 1, 0});

  Algebra A1 = fam(Label::A1, 2);
  auto nx = ideal_is_nilpotent(A1, ideal_closure(A1, {A1.generator("x")}));
  CHECK_FALSE(nx.nilpotent);

  Subspace not_ideal = Subspace::span(A1.field(), 8, {A1.unit()});
  not_ideal = Subspace::span(A1.field(), 8, {A1.generator("x")});
  CHECK_THROWS_AS(ideal_is_nilpotent(A1, not_ideal), Error);
}

TEST_CASE("quotients") {
  Algebra B1 = fam(Label::B1, 3);
  auto same = quotient(B1, Subspace(27));
  CHECK(same.algebra.dim() == 27);
  auto I = ideal_closure(B1, {B1.generator("y"), B1.generator("z")});
  auto q = quotient(B1, I);
  CHECK(q.algebra.dim() == 3);
  CHECK(q.algebra.is_commutative());
  Vec x = q.algebra.generator("x");
  CHECK(q.algebra.power(x, 3) == x);
  CHECK(I.dim() + q.algebra.dim() == B1.dim());

  Algebra C12 = fam(Label::C12, 2);
  auto q2 = quotient(C12, ideal_closure(C12, {C12.generator("y")}));
  CHECK(q2.algebra.dim() == 2);
  CHECK(q2.algebra.is_commutative());
  CHECK_THROWS_AS(quotient(C12, ideal_closure(C12, {C12.unit()})), Error);
}

TEST_CASE("corners") {
  Algebra C10 = fam(Label::C10, 2);
  CHECK(corner(C10, C10.unit()).algebra.dim() == 8);
  Vec z = C10.generator("z");
  auto c1 = corner(C10, z);
  CHECK(c1.algebra.dim() == 4);
  CHECK(rank(C10.field(), mat_mul(C10.field(), C10.left_matrix(z), C10.right_matrix(z))) == 4);

  Algebra C14 = fam(Label::C14, 3);
  const Field& F = C14.field();
  Vec z3 = C14.generator("z");
  Vec e0 = subtracted(F, C14.unit(), C14.multiply(z3, z3));
  CHECK(corner(C14, e0).algebra.dim() == 9);
  CHECK_THROWS_AS(corner(C14, C14.generator("x")), Error);
}

TEST_CASE("iso_from_generators") {
  Algebra A2 = fam(Label::A2, 2);
  AlgebraMap id;
  id.source_generators = {"x", "y", "z"};
  id.source_relations = presentation_catalog(Label::A2, 2, {}).presentation.relations();
  id.source_dim = 8;
  id.target = &A2;
  id.images = {A2.generator("x"), A2.generator("y"), A2.generator("z")};
  CHECK(iso_from_generators(id).ok);

  // k[u]/<u^8> -> A2, u -> z
  AlgebraMap cyc;
  cyc.source_generators = {"u"};
  cyc.source_relations = {NcPoly::word(std::vector<int>(8, 0))};
  cyc.source_dim = 8;
  for (int k = 0; k < 8; ++k) cyc.source_basis_words.push_back(std::vector<int>(k, 0));
  cyc.target = &A2;
  cyc.images = {A2.generator("z")};
  CHECK(iso_from_generators(cyc).ok);

  cyc.images = {A2.generator("x")};
  auto bad = iso_from_generators(cyc);
  CHECK_FALSE(bad.ok);
  CHECK(bad.diagnostic.find("subalgebra") != std::string::npos);

  cyc.source_relations = {NcPoly::word(std::vector<int>(4, 0))};
  cyc.images = {A2.generator("z")};
  CHECK_FALSE(iso_from_generators(cyc).ok);
}

TEST_CASE("tensor product and center") {
  auto F = Field::make(2);
  Algebra A3 = fam(Label::A3, 2);
  Algebra T = tensor_product(A3, A3);
  CHECK(T.dim() == 64);
  CHECK(T.is_commutative());
  CHECK(center(A3).dim() == 8);
  Algebra C5 = fam(Label::C5, 2);
  // center of the Heisenberg-type restricted enveloping algebra at p=2
  auto Z = center(C5);
  CHECK(Z.contains(C5.field(), C5.generator("z")));
  CHECK_FALSE(Z.contains(C5.field(), C5.generator("x")));
}

TEST_CASE("associativity certificate catches a broken table") {
  auto F = Field::make(2);
  // basis 1, a with a*a = 1 + a is associative; break it by making a*a = a only on one side
  std::vector<SparseVec> prods(4);
  prods[0] = {Term{0, F->one()}};
  prods[1] = {Term{1, F->one()}};
  prods[2] = {Term{1, F->one()}};
  prods[3] = {Term{0, F->one()}, Term{1, F->one()}};
  Algebra ok(F, {"1", "a"}, prods, unit_vec(2, 0));
  CHECK_FALSE(associativity_failure(ok));

  // three-dim table with a*b = c, b*a = 0, and (a*a)*b != a*(a*b)
  std::vector<SparseVec> p3(9);
  for (std::size_t i = 0; i < 3; ++i) {
    p3[0 * 3 + i] = {Term{static_cast<std::uint32_t>(i), F->one()}};
    p3[i * 3 + 0] = {Term{static_cast<std::uint32_t>(i), F->one()}};
  }
  p3[1 * 3 + 1] = {Term{2, F->one()}};  // a*a = b
  p3[1 * 3 + 2] = {};                   // a*b = 0
  p3[2 * 3 + 1] = {Term{0, F->one()}};  // b*a = 1
  Algebra broken(F, {"1", "a", "b"}, p3, unit_vec(3, 0));
  CHECK(associativity_failure(broken).has_value());
}
