#include "doctest.h"

#include <algorithm>

#include "p3/coverings.hpp"

using namespace p3;

TEST_CASE("example covering") {
  for (unsigned p : {2u, 3u}) {
    auto F = Field::make(p);
    Covering c = covering_build(example_covering(F, p));
    CHECK(c.quiver.vertices.size() == p);
    CHECK(c.quiver.arrows.size() == 2 * p);
    CHECK(c.algebra.dim() == p * p * p);
    CHECK(pushdown_holds(c));
    std::string zp = "(z,g^1)^" + std::to_string(p);
    CHECK(std::find(c.quiver.relations.begin(), c.quiver.relations.end(), zp) != c.quiver.relations.end());
    for (const auto& a : c.quiver.arrows) {
      if (a.label.rfind("(y", 0) == 0) CHECK(a.target == (a.source + 1) % p);
      if (a.label.rfind("(z", 0) == 0) CHECK(a.target == a.source);
    }
    std::string why;
    CHECK(covering_equiv_twisted(example_covering(F, p), &why));
  }
}

TEST_CASE("trivial weights give disjoint copies") {
  auto F = Field::make(2);
  WeightedPresentation wp = example_covering(F, 2);
  wp.weights = {0, 0};
  wp.m = 3;
  Covering c = covering_build(wp);
  CHECK(c.algebra.dim() == 12);
  for (const auto& a : c.quiver.arrows) CHECK(a.source == a.target);
  CHECK(central_primitive_idempotents(c.algebra).size() == 3);
}

TEST_CASE("B3 base covering relations") {
  auto F = Field::make(3);
  WeightedPresentation wp;
  wp.base = lambda_presentation(F, 3, true);
  wp.m = 3;
  wp.weights = {1, 1};
  Covering c = covering_build(wp);
  CHECK(c.quiver.vertices.size() == 3);
  CHECK(c.quiver.arrows.size() == 6);
  // z_{i+1} y_i - y_{i+1} z_i + y_{i+1} y_i at i = 0
  bool found = false;
  for (const auto& r : c.quiver.relations) {
    found = found || r == "(z,g^1)*(y,g^0) - (y,g^1)*(z,g^0) + (y,g^1)*(y,g^0)";
  }
  CHECK(found);
}

TEST_CASE("non-homogeneous relation") {
  auto F = Field::make(2);
  WeightedPresentation wp;
  wp.base = lambda_presentation(F, 2, true);  // zy - yz + y^2 mixes weights 1 and 2 when w(z) = 0
  wp.m = 2;
  wp.weights = {1, 0};
  try {
    covering_build(wp);
    FAIL("expected NonHomogeneousRelation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonHomogeneousRelation);
  }
}

TEST_CASE("twisted tensor products") {
  auto F = Field::make(2);
  Algebra L = build_from_presentation(lambda_presentation(F, 2, false));
  Algebra flip = twisted_tensor_build(L, 2, flip_twisting_map(L, 2));
  Algebra plain = tensor_product(dual_group_algebra(F, 2), L);
  REQUIRE(flip.dim() == plain.dim());
  for (std::size_t i = 0; i < flip.dim(); ++i)
    for (std::size_t j = 0; j < flip.dim(); ++j) CHECK(flip.basis_product(i, j) == plain.basis_product(i, j));

  Covering c = covering_build(example_covering(F, 2));
  Algebra T = twisted_tensor_build(L, 2, weight_twisting_map(L, 2, c.base_weights));
  CHECK(T.dim() == 8);
  CHECK_FALSE(T.is_commutative());

  TwistingMap bad = flip_twisting_map(L, 2);
  bad.images[0 * 2 + 0] = bad.images[0 * 2 + 1];  // tau(1 ⊗ eps_0) = eps_1 ⊗ 1
  try {
    twisted_tensor_build(L, 2, bad);
    FAIL("expected TauAxiomViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TauAxiomViolation);
    CHECK(std::string(e.what()).find("unit") != std::string::npos);
  }
}

TEST_CASE("catalogue covering data") {
  for (unsigned p : {2u, 3u}) {
    auto F = Field::make(p);
    for (Label l : {Label::B1, Label::C11, Label::B3, Label::C16}) {
      if (!label_supports_prime(l, p)) continue;
      auto d = catalogue_covering(l, p, default_params(l, p, F), F);
      CHECK(covering_equiv_twisted(d.wp));
      auto iso = covering_matches_catalogue(d);
      CHECK_MESSAGE(iso.ok, to_string(l) << " p=" << p << ": " << iso.diagnostic);
    }
  }
}

TEST_CASE("C16 covering at p=3 with delta = -1") {
  auto F9 = Field::make(3, 2);
  Params prm;
  prm.lambda = F9->t();
  auto d = catalogue_covering(Label::C16, 3, prm, F9);
  CHECK(d.a == 2);
  CHECK(*d.params.delta == F9->from_int(-1));
  CHECK(covering_equiv_twisted(d.wp));
  auto iso = covering_matches_catalogue(d);
  CHECK_MESSAGE(iso.ok, iso.diagnostic);
  Covering c = covering_build(d.wp);
  for (const auto& a : c.quiver.arrows) {
    int step = (static_cast<int>(a.target) - static_cast<int>(a.source) + 3) % 3;
    if (a.label.rfind("(y", 0) == 0) CHECK(step == 2);             // -1
    if (a.label.rfind("(z", 0) == 0) CHECK(step == (3 - 2) % 3);   // -a
  }
  CHECK(quiver_to_dot(c.quiver, "C16").find("w=") != std::string::npos);
}
