#include "doctest.h"

#include "p3/hopf.hpp"
#include "p3/structure.hpp"

using namespace p3;

namespace {

Params defaults(Label l, unsigned p) { return default_params(l, p, Field::make(p)); }

Params c16_params(bool symmetric) {
  auto K = Field::make(3, 2);
  Params prm;
  prm.lambda = symmetric ? K->t() : K->one();
  prm.delta = symmetric ? K->from_int(-1) : K->one();
  return prm;
}

const AxiomCheck& check_named(const HopfAxiomReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::runtime_error("missing check " + name);
}

}  // namespace

TEST_CASE("tensor square products") {
  auto F = Field::make(2);
  Algebra A = build_family_algebra(Label::C4, 2, {});
  TensorSquare T(A);
  Vec x = A.generator("x"), y = A.generator("y");
  Vec a = T.pure(x, A.unit()), b = T.pure(A.unit(), y);
  CHECK(T.multiply(a, b) == T.pure(x, y));
  CHECK(is_zero(T.multiply(a, a)));
}

TEST_CASE("every family with a datum is a Hopf algebra at p = 2") {
  for (Label l : all_labels()) {
    if (!label_supports_prime(l, 2) || l == Label::B3) continue;
    CAPTURE(to_string(l));
    auto h = comultiplication_build(l, 2, defaults(l, 2));
    auto r = hopf_axiom_check(h);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.ok);
    }
  }
  CHECK_THROWS_AS(comultiplication_build(Label::B3, 2, {}), Error);
  CHECK_THROWS_AS(comultiplication_build(Label::A3, 5, {}), Error);
}

TEST_CASE("B1 comultiplication and primitives") {
  auto h = comultiplication_build(Label::B1, 2, {});
  const Algebra& A = h.algebra;
  TensorSquare T(A);
  Vec y = A.generator("y"), z = A.generator("z");
  Vec expect = added(A.field(), added(A.field(), T.pure(z, A.unit()), T.pure(A.unit(), z)), T.pure(y, y));
  CHECK(h.delta_gens[2] == expect);
  auto P = primitive_space(h);
  REQUIRE(P.size() == 2);
  CHECK(!is_zero(A.commutator(P[0], P[1])));
}

TEST_CASE("primitive dimensions by type") {
  CHECK(primitive_space(comultiplication_build(Label::A3, 2, {})).size() == 1);
  CHECK(primitive_space(comultiplication_build(Label::A5, 2, {})).size() == 1);
  CHECK(primitive_space(comultiplication_build(Label::C4, 2, {})).size() == 3);
  CHECK(primitive_space(comultiplication_build(Label::B2, 3, {})).size() == 2);
}

TEST_CASE("A1 at p = 3: printed bracket sign is not coassociative") {
  auto printed = hopf_axiom_check(comultiplication_build(Label::A1, 3, {}));
  CHECK(!check_named(printed, "coassociativity").ok);
  CHECK(check_named(printed, "delta_relations").ok);
  auto flipped = hopf_axiom_check(comultiplication_build(Label::A1, 3, {}, HopfVariant::BracketSignFlipped));
  CHECK(flipped.all_ok());
  // A2 to A4 accept both signs
  CHECK(hopf_axiom_check(comultiplication_build(Label::A3, 3, {})).all_ok());
  CHECK(hopf_axiom_check(comultiplication_build(Label::A3, 3, {}, HopfVariant::BracketSignFlipped)).all_ok());
}

TEST_CASE("antipode") {
  auto h = comultiplication_build(Label::B3, 3, {});
  const Algebra& A = h.algebra;
  const Field& F = A.field();
  Vec x = A.generator("x"), y = A.generator("y"), z = A.generator("z");
  CHECK(hopf_axiom_check(h).all_ok());
  // S(z) = -z - 2xy
  Vec sz = subtracted(F, scaled(F, F.from_int(-1), z), scaled(F, F.from_int(2), A.multiply(x, y)));
  CHECK(h.antipode_gens[2] == sz);
  // S²(z) = z + 2y
  Matrix s2 = mat_mul(F, h.antipode, h.antipode);
  CHECK(mat_vec(F, s2, z) == added(F, z, scaled(F, F.from_int(2), y)));
  CHECK(antipode_order(h, 9) == std::optional<unsigned>(3));

  CHECK(antipode_order(comultiplication_build(Label::A1, 2, {}), 4) == std::optional<unsigned>(1));
  CHECK(antipode_order(comultiplication_build(Label::C1, 3, {}), 9) == std::optional<unsigned>(1));
  // A1 at p = 2: S(y) = x - y
  auto a1 = comultiplication_build(Label::A1, 2, {});
  CHECK(a1.antipode_gens[1] == subtracted(a1.algebra.field(), a1.algebra.generator("x"), a1.algebra.generator("y")));
}

TEST_CASE("corrupted antipode fails") {
  auto h = comultiplication_build(Label::B1, 2, {});
  const Algebra& A = h.algebra;
  Vec y = A.generator("y");
  std::size_t iy = 0;
  while (A.basis(iy) != y) ++iy;
  // S(y) = y is the true antipode in characteristic 2; use x + y
  Vec bad = added(A.field(), A.generator("x"), y);
  for (std::size_t r = 0; r < A.dim(); ++r) h.antipode(r, iy) = bad[r];
  auto rep = hopf_axiom_check(h);
  CHECK(!check_named(rep, "antipode").ok);
}

TEST_CASE("integrals") {
  Algebra A3 = build_family_algebra(Label::A3, 2, {});
  auto I = integral_spaces(A3);
  CHECK(I.unimodular);
  CHECK(I.left[0] == unit_vec(8, 7));  // xyz
  CHECK(I.alpha_multiplicative);
  CHECK(integral_spaces(build_family_algebra(Label::A5, 3, defaults(Label::A5, 3))).unimodular);
  Algebra B1 = build_family_algebra(Label::B1, 2, {});
  auto J = integral_spaces(B1);
  CHECK(!J.unimodular);
  CHECK(dot(B1.field(), J.alpha, B1.generator("x")) != B1.field().zero());
}

TEST_CASE("symmetric forms") {
  auto s = symmetric_form_search(build_family_algebra(Label::A1, 2, {}));
  CHECK(s.form.has_value());
  auto b2 = symmetric_form_search(build_family_algebra(Label::B2, 2, {}));
  CHECK(!b2.form.has_value());
  CHECK(b2.exhaustive);
  // Nakayama criterion: n vertices, Loewy length t, symmetric iff n | t - 1
  Algebra B2 = build_family_algebra(Label::B2, 2, {});
  auto claimed = claimed_radical_generators(B2, Label::B2, 2);
  REQUIRE(claimed);
  auto rad = radical_certificate(B2, *claimed).ideal;
  auto idems = primitive_idempotents_for(B2, Label::B2, {}, 2, rad);
  auto shape = nakayama_shape(B2, idems, rad);
  REQUIRE(shape);
  REQUIRE(shape->size() == 1);
  CHECK((*shape)[0].vertices == 4);
  CHECK(((*shape)[0].loewy_length - 1) % (*shape)[0].vertices != 0);

  for (bool sym : {true, false}) {
    auto prm = c16_params(sym);
    Algebra C16 = build_family_algebra(Label::C16, 3, prm);
    auto r = symmetric_form_search(C16);
    CHECK(r.form.has_value() == sym);
  }
}

TEST_CASE("Nakayama automorphisms") {
  Algebra C11 = build_family_algebra(Label::C11, 2, {});
  auto f = frobenius_nakayama(C11);
  const Field& F = C11.field();
  auto tc = restricted_nakayama_check(C11, f);
  CHECK(tc.exact);
  CHECK(tc.order_p);
  CHECK(tc.traces[0] == F.one());
  CHECK(mat_vec(F, *f.nakayama, C11.generator("x")) == added(F, C11.generator("x"), C11.unit()));

  // at p = 3 the sign is visible: x - 1, not x + 1
  Algebra C11p3 = build_family_algebra(Label::C11, 3, {});
  const Field& F3 = C11p3.field();
  auto f3 = frobenius_nakayama(C11p3);
  auto tc3 = restricted_nakayama_check(C11p3, f3);
  CHECK(tc3.ok);
  CHECK(tc3.traces[0] == F3.one());
  Vec x3 = C11p3.generator("x");
  CHECK(mat_vec(F3, *f3.nakayama, x3) == added(F3, x3, C11p3.scalar(F3.neg(F3.one()))));
  for (Label l : {Label::C12, Label::C13, Label::C14, Label::C16}) {
    Algebra A = build_family_algebra(l, 3, {});
    CHECK_MESSAGE(restricted_nakayama_check(A, frobenius_nakayama(A)).ok, to_string(l));
  }

  Algebra C5 = build_family_algebra(Label::C5, 3, {});
  auto g = frobenius_nakayama(C5);
  CHECK(*g.nakayama == Matrix::identity(C5.field(), 27));
}

TEST_CASE("winding automorphism gives the Nakayama automorphism") {
  auto a3 = winding_nakayama_check(comultiplication_build(Label::A3, 2, {}));
  CHECK(a3.ok);
  CHECK(a3.xi_identity);
  CHECK(a3.s2_identity);
  auto b1 = winding_nakayama_check(comultiplication_build(Label::B1, 2, {}));
  CHECK(b1.ok);
  CHECK(!b1.xi_identity);
  auto c16 = winding_nakayama_check(comultiplication_build(Label::C16, 3, c16_params(true)));
  CHECK(c16.ok);
  auto b2 = winding_nakayama_check(comultiplication_build(Label::B2, 3, {}));
  CHECK(b2.ok);
}

TEST_CASE("Hopf report") {
  auto r = hopf_report(Label::B3, 3, {});
  CHECK(r.axioms.all_ok());
  CHECK(r.primitive_dim == 2);
  CHECK(r.antipode_sq_order == std::optional<unsigned>(3));
  CHECK(r.symmetric == std::optional<bool>(false));
  CHECK(r.left_integral_dim == 1);
  CHECK(expected_symmetric(Label::C16, c16_params(true), *Field::make(3, 2)));
}
