#include "doctest.h"

#include <chrono>

#include "p3/coverings.hpp"
#include "p3/homology.hpp"
#include "p3/structure.hpp"

using namespace p3;

namespace {

Algebra fam(Label l, unsigned p) {
  auto F = Field::make(p);
  return build_family_algebra(l, p, default_params(l, p, F));
}

Subspace rad_of(const Algebra& A, Label l, unsigned p) {
  auto gens = claimed_radical_generators(A, l, p);
  REQUIRE(gens.has_value());
  return radical_certificate(A, *gens).ideal;
}

// k[u]/(u^n)
Algebra truncated(FieldPtr F, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("u^" + std::to_string(i));
  auto prod = [&](std::size_t i, std::size_t j) {
    if (i + j >= n) return SparseVec{};
    return SparseVec{Term{static_cast<std::uint32_t>(i + j), F->one()}};
  };
  return Algebra::from_product(F, labels, prod, unit_vec(n, 0), {{"u", unit_vec(n, 1)}});
}

Subspace span_from(std::size_t d, std::size_t from, const Field& F) {
  Subspace s(d);
  for (std::size_t i = from; i < d; ++i) s.insert(F, unit_vec(d, i));
  return s;
}

}  // namespace

TEST_CASE("series helpers") {
  CHECK(binomial_series(3, 4) == std::vector<std::size_t>{1, 3, 6, 10, 15});
  CHECK(binomial_series(1, 2) == std::vector<std::size_t>{1, 1, 1});
  CHECK(indicator_series(3, 6) == std::vector<std::size_t>{1, 0, 0, 1, 0, 0, 1});
}

TEST_CASE("trivial module over k[u]/(u^3) has one class per degree") {
  auto F = Field::make(3);
  Algebra A = truncated(F, 3);
  auto d = local_trivial_ext(A, span_from(3, 1, *F), 10);
  CHECK(d == binomial_series(1, 10));
}

TEST_CASE("module checks") {
  auto F = Field::make(2);
  Algebra A = truncated(F, 4);
  ModuleRep k = trivial_module(A);
  CHECK(k.dim == 1);
  check_module(k);
  ModuleRep bad = k;
  bad.action[1](0, 0) = F->one();
  CHECK_THROWS_AS(check_module(bad), Error);
}

TEST_CASE("elementary abelian rank 3 at p = 2") {
  Algebra A = fam(Label::A3, 2);
  auto d = local_trivial_ext(A, rad_of(A, Label::A3, 2), 8);
  CHECK(d == binomial_series(3, 8));
}

TEST_CASE("Nakayama closed form") {
  auto e = nakayama_ext_closed_form(9, 3);
  CHECK(e.l1 == 3);
  CHECK(!e.l2.has_value());
  CHECK(e.x_degree == 6);
  auto f = nakayama_ext_closed_form(3, 4);
  CHECK(f.l1 == 3);
  REQUIRE(f.l2.has_value());
  CHECK(*f.l2 == 2);
  CHECK(*f.y_degree == 5);
  auto g = nakayama_ext_closed_form(3, 9);
  CHECK(g.l1 == 1);
  CHECK(g.x_degree == 2);
  CHECK(!g.l2.has_value());
  CHECK(g.dims(4) == std::vector<std::size_t>{1, 0, 1, 0, 1});
}

TEST_CASE("Nakayama generic resolution agrees with the closed form") {
  auto F = Field::make(2);
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t t = 2; t <= 7; ++t) {
      CAPTURE(n);
      CAPTURE(t);
      CHECK(nakayama_ext_generic(F, n, t, 14) == nakayama_ext_closed_form(n, t).dims(14));
    }
}

TEST_CASE("periodicity") {
  auto F = Field::make(2);
  BasicAlgebra B = nakayama_algebra(F, 4, 2);
  ResolutionSetup s{&B.algebra, B.idempotents, B.rad, std::nullopt};
  ModuleRep S = simple_module(B.algebra, B.idempotents[0], B.rad);
  ResolutionOptions opt;
  opt.steps = 12;
  auto tr = minimal_resolution(s, S, opt);
  CHECK(periodicity_detect(tr) == std::optional<std::size_t>(4));

  Algebra A = truncated(F, 4);
  ResolutionSetup s2{&A, {A.unit()}, span_from(4, 1, *F), std::nullopt};
  auto tr2 = minimal_resolution(s2, trivial_module(A), opt);
  CHECK(periodicity_detect(tr2) == std::optional<std::size_t>(2));
}

TEST_CASE("Künneth for two truncated polynomial rings") {
  auto F = Field::make(3);
  auto r = kunneth_check(truncated(F, 3), truncated(F, 9), 8);
  CHECK(r.ok);
  CHECK(r.tensor_dims == binomial_series(2, 8));
}

TEST_CASE("Eckmann-Shapiro along the diagonal lift into a covering") {
  auto F = Field::make(2);
  const Field& K = *F;
  Covering c = covering_build(example_covering(F, 2));
  const std::size_t d = c.base.dim();
  REQUIRE(c.base.basis(0) == c.base.unit());
  Subspace lrad(c.algebra.dim());
  std::vector<Vec> idems, inclusion;
  for (unsigned g = 0; g < 2; ++g) {
    idems.push_back(covering_basis(c, 0, g));
    for (std::size_t b = 1; b < d; ++b) lrad.insert(K, covering_basis(c, b, g));
  }
  for (std::size_t b = 0; b < d; ++b) inclusion.push_back(covering_lift(c, c.base.basis(b), {K.one(), K.one()}));
  auto r = eckmann_shapiro_check(c.algebra, idems, lrad, c.base, span_from(d, 1, K), inclusion, idems, 6);
  CHECK(r.ok);
  CHECK(r.lhs.size() == 7);
  CHECK(r.lhs[0] == 2);

  CHECK_THROWS_AS(eckmann_shapiro_check(c.algebra, idems, lrad, c.base, span_from(d, 1, K), inclusion,
                                        {idems[0]}, 2),
                  Error);
}

TEST_CASE("cohomology reports match the claimed series") {
  for (Label l : {Label::A2, Label::A3, Label::A4, Label::C13, Label::B2, Label::C10, Label::C14}) {
    CAPTURE(to_string(l));
    auto F = Field::make(2);
    auto rep = cohomology_report(l, 2, default_params(l, 2, F), 8);
    for (const auto& b : rep.blocks) CHECK(b.status == "match");
  }
  auto F3 = Field::make(3);
  auto rep = cohomology_report(Label::B2, 3, default_params(Label::B2, 3, F3), 12);
  REQUIRE(!rep.blocks.empty());
  CHECK(rep.blocks[0].dims == indicator_series(6, 12));
}

TEST_CASE("A3 at p = 3 to degree 20") {
  auto t0 = std::chrono::steady_clock::now();
  Algebra A = fam(Label::A3, 3);
  auto inst = presentation_catalog(Label::A3, 3, default_params(Label::A3, 3, A.field_ptr()), A.field_ptr());
  auto d = local_trivial_ext(A, rad_of(A, Label::A3, 3), 20, presentation_grading(inst.presentation, A));
  CHECK(d == binomial_series(3, 20));
  MESSAGE("seconds: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}
