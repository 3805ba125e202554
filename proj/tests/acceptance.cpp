// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "p3/coverings.hpp"
#include "p3/homology.hpp"
#include "p3/hopf.hpp"
#include "p3/structure.hpp"

using namespace p3;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void fail(const std::string& what) {
    if (ok) note.str("");
    if (!ok) note << "; ";
    ok = false;
    note << what;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(1);
  os << std::fixed << s << "s";
  return os.str();
}

std::string family_name(Label l, unsigned p) { return to_string(l) + " p=" + std::to_string(p); }

struct Instance {
  Label label;
  unsigned p;
  Params params;
  FieldPtr field;
};

// Every applicable label at p, plus the second C16 parameter set.
std::vector<Instance> instances(unsigned p) {
  std::vector<Instance> out;
  for (Label l : all_labels()) {
    if (!label_supports_prime(l, p)) continue;
    auto F = Field::make(p);
    out.push_back({l, p, default_params(l, p, F), F});
  }
  if (p > 2) {
    auto F = Field::make(p, 2);
    Params prm;
    prm.lambda = F->t();
    out.push_back({Label::C16, p, prm, F});
  }
  return out;
}

Subspace radical_of(const Algebra& A, Label l, unsigned p) {
  auto gens = claimed_radical_generators(A, l, p);
  if (!gens) throw Error(ErrorCode::PrerequisitesUnavailable, "no radical generators for " + to_string(l));
  return radical_certificate(A, *gens).ideal;
}

bool relations_vanish(const Algebra& A, const Presentation& P) {
  std::vector<Vec> images;
  for (const auto& name : P.names) images.push_back(A.generator(name));
  for (const auto& r : P.relations())
    if (!is_zero(evaluate(A, r, images))) return false;
  return true;
}

bool build_ok(const Instance& in, const AssocPolicy& policy, Outcome& o) {
  auto inst = presentation_catalog(in.label, in.p, in.params, in.field);
  Algebra A = build_family_algebra(inst);
  std::size_t expect = static_cast<std::size_t>(in.p) * in.p * in.p;
  if (A.dim() != expect) {
    o.fail(family_name(in.label, in.p) + " has dim " + std::to_string(A.dim()));
    return false;
  }
  if (associativity_failure(A, policy)) {
    o.fail(family_name(in.label, in.p) + " not associative");
    return false;
  }
  if (!relations_vanish(A, inst.presentation)) {
    o.fail(family_name(in.label, in.p) + " relations do not vanish");
    return false;
  }
  return true;
}

Outcome criterion1() {
  Outcome o;
  std::size_t built = 0;
  auto t0 = Clock::now();
  AssocPolicy full;
  full.full_limit = 27;
  for (unsigned p : {2u, 3u})
    for (const auto& in : instances(p)) built += build_ok(in, full, o);
  double small = seconds_since(t0);
  if (small >= 60) o.fail("p<=3 took " + fmt_seconds(small));

  auto t1 = Clock::now();
  AssocPolicy anchored;
  for (const auto& in : instances(5)) built += build_ok(in, anchored, o);
  double big = seconds_since(t1);
  if (big >= 600) o.fail("p=5 took " + fmt_seconds(big));
  if (o.ok) {
    o.note << built << " instances, full associativity at p<=3 (" << fmt_seconds(small)
           << "), generator-anchored at p=5 (" << fmt_seconds(big) << ")";
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t rows = 0;
  for (unsigned p : {2u, 3u})
    for (Label l : all_labels()) {
      if (!label_supports_prime(l, p)) continue;
      try {
        auto F = Field::make(p);
        auto m = morita_classify(l, p, default_params(l, p, F));
        if (m.type != expected_morita(l)) o.fail(family_name(l, p) + " is " + to_string(m.type));
        ++rows;
      } catch (const Error& e) {
        o.fail(family_name(l, p) + ": " + e.what());
      }
    }
  if (o.ok) o.note << rows << " rows reproduced";
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (unsigned p : {2u, 3u}) {
    auto F = Field::make(p);
    const std::size_t d = static_cast<std::size_t>(p) * p * p;

    Algebra A1 = build_family_algebra(Label::A1, p, {});
    auto idems = central_primitive_idempotents(A1);
    IdempotentSet s;
    s.elems = idems;
    if (idems.size() != d || !check_idempotent_set(A1, s)) {
      o.fail("A1 p=" + std::to_string(p) + ": " + std::to_string(idems.size()) + " idempotents");
    }

    Algebra A2 = build_family_algebra(Label::A2, p, {});
    AlgebraMap cyc;
    cyc.source_generators = {"u"};
    cyc.source_relations = {NcPoly::word(std::vector<int>(d, 0))};
    cyc.source_dim = d;
    for (std::size_t k = 0; k < d; ++k) cyc.source_basis_words.push_back(std::vector<int>(k, 0));
    cyc.target = &A2;
    cyc.images = {A2.generator("z")};
    auto iso = iso_from_generators(cyc);
    if (!iso.ok) o.fail("A2 p=" + std::to_string(p) + ": " + iso.diagnostic);

    Algebra C10 = build_family_algebra(Label::C10, p, {});
    auto blocks = central_primitive_idempotents(C10);
    auto mats = matrix_block_idempotents(C10);
    std::size_t commutative = 0;
    for (const auto& e : blocks)
      if (corner(C10, e).algebra.is_commutative()) ++commutative;
    if (blocks.size() != p || mats.size() != p - 1 || commutative != 1) {
      o.fail("C10 p=" + std::to_string(p) + ": " + std::to_string(blocks.size()) + " blocks, " +
             std::to_string(mats.size()) + " matrix, " + std::to_string(commutative) + " commutative");
    }
  }
  if (o.ok) o.note << "A1 splits into p^3 idempotents, A2 = k[u]/u^{p^3}, C10 = local + (p-1) matrix blocks";
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (unsigned p : {2u, 3u}) {
    auto shapes = [&](Label l) {
      Algebra A = build_family_algebra(l, p, {});
      Subspace r = radical_of(A, l, p);
      auto s = nakayama_shape(A, primitive_idempotents_for(A, l, {}, p, r), r);
      if (!s) throw Error(ErrorCode::CertificateFailure, family_name(l, p) + " is not Nakayama");
      return std::make_pair(*s, matrix_block_idempotents(A).size());
    };
    auto expect = [&](Label l, std::size_t blocks, std::size_t n, std::size_t t, std::size_t matrix) {
      auto [s, m] = shapes(l);
      bool ok = s.size() == blocks && m == matrix;
      for (const auto& sh : s) ok = ok && sh.vertices == n && sh.loewy_length == t;
      if (!ok) o.fail(family_name(l, p) + " shape mismatch");
    };
    expect(Label::B2, 1, p * p, p, 0);
    expect(Label::C12, 1, p, p * p, 0);
    expect(Label::C13, p, p, p, 0);
    expect(Label::C14, 1, p, p, p - 1);
  }
  for (unsigned p : {2u, 3u, 5u}) {
    auto F = Field::make(p);
    std::size_t w = orbit_walk(p, b2_f_coeffs(*F, p), *F);
    if (w != p * p) o.fail("orbit walk p=" + std::to_string(p) + " gives " + std::to_string(w));
  }
  for (unsigned p : {2u, 3u, 5u, 7u})
    for (unsigned m = 1; m < p; ++m) {
      bool minus_one = power_sum_mod(p, m) == p - 1;
      if (minus_one != (m == p - 1)) o.fail("power sum p=" + std::to_string(p) + " m=" + std::to_string(m));
    }
  if (o.ok) o.note << "B2 (p^2,p), C12 (p,p^2), C13 p x (p,p), C14 (p,p)+(p-1) matrix; orbits p^2; power sums exact";
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto t0 = Clock::now();
  auto F = Field::make(2);
  std::size_t pairs = 0;
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t t = 2; t <= 12; ++t) {
      auto generic = nakayama_ext_generic(F, n, t, 24);
      auto closed = nakayama_ext_closed_form(n, t).dims(24);
      if (generic != closed) o.fail("(n,t)=(" + std::to_string(n) + "," + std::to_string(t) + ")");
      ++pairs;
    }
  double s = seconds_since(t0);
  if (s >= 60) o.fail("took " + fmt_seconds(s));
  if (o.ok) o.note << pairs << " pairs agree to degree 24 (" << fmt_seconds(s) << ")";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const std::vector<Label> claimed{Label::B2, Label::C12, Label::C13, Label::C14, Label::A2, Label::A3,
                                   Label::C4, Label::C7,  Label::C9,  Label::C10, Label::A4};
  const std::vector<Label> logged{Label::C5, Label::C6, Label::C15, Label::B1, Label::B3, Label::C16, Label::A5};
  std::size_t matched = 0, emitted = 0;
  for (unsigned p : {2u, 3u}) {
    for (Label l : claimed) {
      try {
        auto rep = cohomology_report(l, p, {}, 20);
        for (const auto& b : rep.blocks) {
          if (b.status != "match") o.fail(family_name(l, p) + " " + b.block + " is " + b.status);
          if (b.dims.size() != 21) o.fail(family_name(l, p) + " " + b.block + " stopped early");
        }
        ++matched;
      } catch (const Error& e) {
        o.fail(family_name(l, p) + ": " + e.what());
      }
    }
    for (Label l : logged) {
      if (!label_supports_prime(l, p)) continue;
      try {
        auto rep = cohomology_report(l, p, {}, 20);
        for (const auto& b : rep.blocks)
          if (b.status == "match") o.fail(family_name(l, p) + " should be log-only");
        ++emitted;
      } catch (const Error& e) {
        o.fail(family_name(l, p) + ": " + e.what());
      }
    }
  }
  if (o.ok) o.note << matched << " claimed profiles match to degree 20, " << emitted << " log-only profiles emitted";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t n = 0;
  for (unsigned p : {2u, 3u}) {
    auto F = Field::make(p);
    std::string why;
    if (!covering_equiv_twisted(example_covering(F, p), &why)) o.fail("example p=" + std::to_string(p) + ": " + why);
    for (Label l : {Label::B1, Label::B3, Label::C16}) {
      auto d = catalogue_covering(l, p, default_params(l, p, F), F);
      if (!covering_equiv_twisted(d.wp, &why)) o.fail(family_name(l, p) + ": " + why);
      auto iso = covering_matches_catalogue(d);
      if (!iso.ok) o.fail(family_name(l, p) + ": " + iso.diagnostic);
      ++n;
    }
  }
  if (o.ok) o.note << "example + " << n << " catalogue coverings equal their twisted tensor products and tables";
  return o;
}

// Γ = base, Λ = covering algebra, Γ -> Λ along the diagonal lift.
EckmannShapiroResult shapiro(const WeightedPresentation& wp, std::size_t maxdeg) {
  Covering c = covering_build(wp);
  const Field& K = c.algebra.field();
  const std::size_t d = c.base.dim();
  std::vector<Vec> base_gens;
  for (const auto& g : c.base.generators()) base_gens.push_back(g.value);
  Subspace grad = radical_certificate(c.base, base_gens).ideal;
  if (grad.dim() + 1 != d || c.base.basis(0) != c.base.unit()) {
    throw Error(ErrorCode::PrerequisitesUnavailable, "base algebra is not local on the monomial basis");
  }
  Subspace lrad(c.algebra.dim());
  std::vector<Vec> idems, inclusion;
  for (unsigned g = 0; g < wp.m; ++g) {
    idems.push_back(covering_basis(c, 0, g));
    for (std::size_t b = 1; b < d; ++b) lrad.insert(K, covering_basis(c, b, g));
  }
  std::vector<Scalar> ones(wp.m, K.one());
  for (std::size_t b = 0; b < d; ++b) inclusion.push_back(covering_lift(c, c.base.basis(b), ones));
  return eckmann_shapiro_check(c.algebra, idems, lrad, c.base, grad, inclusion, idems, maxdeg);
}

Outcome criterion8() {
  Outcome o;
  std::vector<std::pair<Label, unsigned>> cases{{Label::B1, 2}, {Label::B3, 2}, {Label::C16, 2}, {Label::B1, 3}};
  for (auto [l, p] : cases) {
    try {
      auto F = Field::make(p);
      auto r = shapiro(catalogue_covering(l, p, default_params(l, p, F), F).wp, 10);
      if (!r.ok) o.fail(family_name(l, p) + " dimensions differ");
    } catch (const Error& e) {
      o.fail(family_name(l, p) + ": " + e.what());
    }
  }
  if (o.ok) o.note << "B1, B3, C16 at p=2 and B1 at p=3 agree to degree 10";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t checked = 0;
  for (unsigned p : {2u, 3u})
    for (const auto& in : instances(p)) {
      auto inst = presentation_catalog(in.label, p, in.params, in.field);
      if (!inst.hopf.available) continue;
      try {
        HopfData h = comultiplication_build(in.label, p, inst.params);
        auto ax = hopf_axiom_check(h);
        for (const auto& c : ax.checks)
          if (!c.ok) o.fail(family_name(in.label, p) + " " + c.name + " (" + c.detail + ")");
        std::size_t prim = primitive_space(h).size();
        std::size_t want = label_type(in.label) == 'A' ? 1 : label_type(in.label) == 'B' ? 2 : 3;
        if (prim != want) o.fail(family_name(in.label, p) + " primitive dim " + std::to_string(prim));
        auto ord = antipode_order(h, p * p);
        unsigned want_ord = in.label == Label::B3 ? p : 1;
        if (ord != std::optional<unsigned>(want_ord)) o.fail(family_name(in.label, p) + " S^2 order");
        auto I = integral_spaces(h.algebra);
        if (I.left.size() != 1 || I.right.size() != 1) o.fail(family_name(in.label, p) + " integrals");
        ++checked;
      } catch (const Error& e) {
        o.fail(family_name(in.label, p) + ": " + e.what());
      }
    }
  if (o.ok) {
    o.note << checked << " Hopf algebras: axioms, primitives, S^2 order, integrals";
  } else {
    o.note << " [" << checked << " Hopf algebras checked]";
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::size_t verdicts = 0;
  auto verdict = [&](const Algebra& A, const std::string& who) -> std::optional<bool> {
    auto s = symmetric_form_search(A, 0);
    if (!s.form && !s.exhaustive && !s.obstruction) {
      o.fail(who + ": negative verdict without exhaustive search or obstruction");
      return std::nullopt;
    }
    ++verdicts;
    return s.form.has_value();
  };
  for (unsigned p : {2u, 3u})
    for (const auto& in : instances(p)) {
      auto inst = presentation_catalog(in.label, p, in.params, in.field);
      if (!inst.hopf.available) continue;
      std::string who = family_name(in.label, p);
      try {
        Algebra A = build_family_algebra(inst);
        auto v = verdict(A, who);
        bool expect = expected_symmetric(in.label, inst.params, *in.field);
        if (v && *v != expect) o.fail(who + (*v ? " symmetric" : " not symmetric"));
      } catch (const Error& e) {
        o.fail(who + ": " + e.what());
      }
    }
  for (unsigned p : {2u, 3u}) {
    Algebra B2 = build_family_algebra(Label::B2, p, {});
    auto s = symmetric_form_search(B2, 0);
    Subspace r = radical_of(B2, Label::B2, p);
    auto shape = nakayama_shape(B2, primitive_idempotents_for(B2, Label::B2, {}, p, r), r);
    bool divides = shape && ((*shape)[0].loewy_length - 1) % (*shape)[0].vertices == 0;
    if (s.form || !(s.exhaustive || s.obstruction) || !shape || divides) {
      o.fail("B2 p=" + std::to_string(p) + " not certified non-symmetric by both routes");
    }
  }
  // every nonzero λ in GF(9), δ from λ^{-1} = ±λ
  auto F9 = Field::make(3, 2);
  std::size_t swept = 0;
  for (unsigned code = 1; code < F9->order(); ++code) {
    Params prm;
    prm.lambda = Scalar{static_cast<std::uint16_t>(code)};
    FamilyInstance inst;
    try {
      inst = presentation_catalog(Label::C16, 3, prm, F9);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidParams) continue;
      throw;
    }
    Scalar l = *inst.params.lambda;
    bool expect = F9->mul(l, l) == F9->neg(F9->one());
    auto v = verdict(build_family_algebra(inst), "C16 lambda=" + F9->to_string(l));
    if (v && *v != expect) o.fail("C16 lambda=" + F9->to_string(l));
    ++swept;
  }
  if (swept == 0) o.fail("no admissible C16 parameters over GF(9)");
  if (o.ok) o.note << verdicts << " verdicts; B2 by search and n+1 not dividing t-1; C16 over " << swept << " parameters";
  return o;
}

Outcome criterion11() {
  Outcome o;
  Algebra A2 = build_family_algebra(Label::A5, 2, {});
  auto l2 = radical_layer_dims(A2, radical_of(A2, Label::A5, 2));
  if (l2 != std::vector<std::size_t>{1, 2, 2, 2, 1}) o.fail("p=2 layers");
  auto F3 = Field::make(3);
  Params b1;
  b1.beta = F3->one();
  Algebra A3 = build_family_algebra(Label::A5, 3, b1);
  auto l3 = radical_layer_dims(A3, radical_of(A3, Label::A5, 3));
  if (l3 != std::vector<std::size_t>{1, 2, 3, 3, 3, 3, 3, 3, 3, 2, 1}) o.fail("p=3 layers");
  auto iso = a5_semidihedral_iso();
  if (!iso.ok) o.fail("semidihedral: " + iso.diagnostic);
  if (o.ok) o.note << "layers [1,2,2,2,1] and [1,2,3,3,3,3,3,3,3,2,1]; semidihedral iso via x = [y,z]";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7, criterion8,
                                                       criterion9, criterion10, criterion11};
  int failures = 0;
  auto t0 = Clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << " - " << o.note.str() << std::endl;
    failures += !o.ok;
  }
  std::cout << "total " << fmt_seconds(seconds_since(t0)) << ", " << failures << " failing" << std::endl;
  return failures ? 1 : 0;
}
