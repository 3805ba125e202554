#include "p3/report.hpp"

#include <functional>

#include "p3/coverings.hpp"
#include "p3/error.hpp"
#include "p3/structure.hpp"

namespace p3 {

bool FamilyReport::failed() const {
  for (const auto& c : checks)
    if (c.status == "fail") return true;
  return false;
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "[" + s + "]";
}

std::size_t expected_primitive_dim(Label l) {
  switch (label_type(l)) {
    case 'A': return 1;
    case 'B': return 2;
    default: return 3;
  }
}

bool is_covering_label(Label l) { return l == Label::B1 || l == Label::B3 || l == Label::C11 || l == Label::C16; }

bool is_nakayama_label(Label l) { return l == Label::B2 || l == Label::C12 || l == Label::C13 || l == Label::C14; }

}  // namespace

FamilyReport verify_family(Label label, unsigned p, const Params& given, const VerifyOptions& opt) {
  FamilyReport r;
  r.label = label;
  r.p = p;
  r.params = given;
  if (!label_supports_prime(label, p)) {
    r.checks.push_back({"build", "skipped", to_string(label) + " exists only for p>2"});
    return r;
  }
  FieldPtr F = family_field(label, p, given);
  r.field = F;
  FamilyInstance inst;
  Algebra A;
  try {
    inst = presentation_catalog(label, p, given, F);
    r.params = inst.params;
    A = build_family_algebra(inst);
    AssocPolicy policy;
    std::string how = A.dim() <= policy.full_limit ? "full associativity" : "generator-anchored associativity";
    if (A.dim() != static_cast<std::size_t>(p) * p * p) {
      r.checks.push_back({"build", "fail", "dimension " + std::to_string(A.dim())});
      return r;
    }
    r.checks.push_back({"build", "pass", "dim " + std::to_string(A.dim()) + ", " + how + ", relations vanish"});
  } catch (const Error& e) {
    r.checks.push_back({"build", "fail", e.what()});
    return r;
  }
  const Params& prm = inst.params;

  auto run = [&](const std::string& name, const std::function<CheckRecord()>& fn) {
    try {
      CheckRecord c = fn();
      c.name = name;
      r.checks.push_back(c);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::PrerequisitesUnavailable) {
        r.checks.push_back({name, "skipped", e.what()});
      } else if (e.code() == ErrorCode::SearchInconclusive) {
        r.checks.push_back({name, "inconclusive", e.what()});
      } else {
        r.checks.push_back({name, "fail", e.what()});
      }
    }
  };

  run("morita", [&] {
    auto m = morita_classify(label, p, prm);
    return CheckRecord{"", "pass", to_string(m.type) + ": " + m.evidence};
  });

  run("radical_layers", [&] {
    auto claimed = claimed_radical_generators(A, label, p);
    if (!claimed) return CheckRecord{"", "skipped", "no radical generators catalogued"};
    auto layers = radical_layer_dims(A, radical_certificate(A, *claimed).ideal);
    if (label == Label::A5 && (p == 2 || (p == 3 && prm.beta && *prm.beta == F->one()))) {
      std::vector<std::size_t> expect =
          p == 2 ? std::vector<std::size_t>{1, 2, 2, 2, 1} : std::vector<std::size_t>{1, 2, 3, 3, 3, 3, 3, 3, 3, 2, 1};
      return CheckRecord{"", layers == expect ? "pass" : "fail", join(layers) + " against " + join(expect)};
    }
    return CheckRecord{"", "log-only", join(layers)};
  });

  if (label == Label::A5 && p == 2) {
    run("semidihedral", [&] {
      auto iso = a5_semidihedral_iso();
      return CheckRecord{"", iso.ok ? "pass" : "fail", iso.diagnostic};
    });
  }

  if (is_covering_label(label)) {
    run("covering", [&] {
      auto d = catalogue_covering(label, p, prm, F);
      std::string detail;
      bool twisted = covering_equiv_twisted(d.wp, &detail);
      auto iso = covering_matches_catalogue(d);
      std::string s = std::string("twisted tensor ") + (twisted ? "equivalent" : "differs: " + detail) +
                      "; catalogue iso " + (iso.ok ? "ok" : "fails: " + iso.diagnostic);
      return CheckRecord{"", twisted && iso.ok ? "pass" : "fail", s};
    });
  }

  run("cohomology", [&] {
    auto rep = cohomology_report(label, p, prm, opt.max_degree);
    r.cohomology = rep;
    r.max_degree = opt.max_degree;
    std::size_t match = 0, log = 0, skipped = 0, truncated = 0;
    for (const auto& b : rep.blocks) {
      if (b.status == "match") ++match;
      if (b.status == "log-only") ++log;
      if (b.status == "skipped") ++skipped;
      if (b.status == "truncated") ++truncated;
    }
    std::string detail = std::to_string(rep.blocks.size()) + " block(s): " + std::to_string(match) + " match, " +
                         std::to_string(log) + " log-only, " + std::to_string(truncated) + " truncated, " +
                         std::to_string(skipped) + " skipped";
    std::string status = match == rep.blocks.size() ? "pass" : skipped == rep.blocks.size() ? "skipped" : "log-only";
    return CheckRecord{"", status, detail};
  });

  if (p <= 3) {
    std::optional<bool> verdict;
    run("symmetric", [&] {
      auto s = symmetric_form_search(A, opt.seed);
      verdict = s.form.has_value();
      bool expect = expected_symmetric(label, prm, *F);
      std::string how = s.obstruction ? "obstruction A·a ⊂ [A,A]"
                                      : (s.exhaustive ? "exhaustive" : "seeded search") + std::string(", ") +
                                            std::to_string(s.trials) + " trial(s)";
      std::string found = std::string(*verdict ? "symmetric" : "not symmetric") + " (" + how + ")";
      if (!inst.hopf.available) return CheckRecord{"", "log-only", found + "; no Hopf datum at this prime"};
      return CheckRecord{"", *verdict == expect ? "pass" : "fail", found};
    });
    if (is_nakayama_label(label)) {
      run("nakayama_symmetry", [&] {
        auto claimed = claimed_radical_generators(A, label, p);
        if (!claimed) return CheckRecord{"", "skipped", "no radical generators catalogued"};
        auto rad = radical_certificate(A, *claimed).ideal;
        auto shapes = nakayama_shape(A, primitive_idempotents_for(A, label, prm, p, rad), rad);
        if (!shapes) return CheckRecord{"", "fail", "not a Nakayama algebra"};
        bool sym = true;
        std::string s;
        for (const auto& sh : *shapes) {
          sym = sym && (sh.loewy_length - 1) % sh.vertices == 0;
          s += "(" + std::to_string(sh.vertices) + "," + std::to_string(sh.loewy_length) + ")";
        }
        bool agree = sym == expected_symmetric(label, prm, *F) && (!verdict || *verdict == sym);
        return CheckRecord{"", agree ? "pass" : "fail",
                           "n | t-1 criterion on " + s + ": " + (sym ? "symmetric" : "not symmetric")};
      });
    }
    if (label_type(label) == 'C') {
      run("restricted_nakayama", [&] {
        auto f = frobenius_nakayama(A, opt.seed);
        auto t = restricted_nakayama_check(A, f);
        std::string tr;
        for (auto s : t.traces) tr += (tr.empty() ? "" : ",") + F->to_string(s);
        return CheckRecord{"", t.ok ? "pass" : "fail",
                           "Tr(ad) = (" + tr + "), σ(g) = g - Tr(ad g) " + (t.exact ? "holds" : "fails") + ", σ^p " +
                               (t.order_p ? "= id" : "!= id")};
      });
    }
    try {
      HopfReport h = hopf_report(label, p, prm, opt.seed);
      r.hopf = h;
      std::string failed;
      for (const auto& c : h.axioms.checks)
        if (!c.ok) failed += (failed.empty() ? "" : "; ") + c.name + ": " + c.detail;
      r.checks.push_back({"hopf_axioms", failed.empty() ? "pass" : "fail", failed.empty() ? "all five hold" : failed});
      r.checks.push_back({"primitive_dim", h.primitive_dim == expected_primitive_dim(label) ? "pass" : "fail",
                          std::to_string(h.primitive_dim)});
      unsigned expect_order = label == Label::B3 ? p : 1;
      r.checks.push_back({"antipode_order", h.antipode_sq_order == std::optional<unsigned>(expect_order) ? "pass" : "fail",
                          h.antipode_sq_order ? std::to_string(*h.antipode_sq_order) : "beyond p^2"});
      r.checks.push_back({"integrals", h.left_integral_dim == 1 && h.right_integral_dim == 1 ? "pass" : "fail",
                          std::string(h.unimodular ? "unimodular" : "not unimodular")});
      r.checks.push_back({"winding", h.winding_ok ? "pass" : "fail",
                          "Nakayama automorphism of order " +
                              (h.nakayama_order ? std::to_string(*h.nakayama_order) : std::string("> p^2"))});
    } catch (const Error& e) {
      if (e.code() == ErrorCode::HopfDataUnavailable) {
        r.checks.push_back({"hopf", "skipped", e.what()});
      } else {
        r.checks.push_back({"hopf", "fail", e.what()});
      }
    }
  } else {
    r.checks.push_back({"hopf", "skipped", "Hopf and symmetry suites run for p <= 3"});
  }
  return r;
}

Json params_json(const Params& params, const Field& F) {
  Json j = Json::object();
  if (params.beta) j["beta"] = F.to_string(*params.beta);
  if (params.lambda) j["lambda"] = F.to_string(*params.lambda);
  if (params.delta) j["delta"] = F.to_string(*params.delta);
  return j;
}

Json to_json(const CheckRecord& c) { return Json{{"name", c.name}, {"status", c.status}, {"details", c.details}}; }

Json to_json(const ExtProfile& e) {
  Json j{{"block", e.block}, {"dims", e.dims}};
  j["period"] = e.period ? Json(*e.period) : Json(nullptr);
  j["claim"] = e.claim;
  j["status"] = e.status;
  return j;
}

Json to_json(const CohomologyReport& r, std::size_t max_degree) {
  Json blocks = Json::array();
  for (const auto& b : r.blocks) blocks.push_back(to_json(b));
  return Json{{"family", to_string(r.label)}, {"p", r.p}, {"max_degree", max_degree}, {"note", r.note}, {"blocks", blocks}};
}

Json to_json(const HopfReport& r) {
  Json axioms = Json::object();
  for (const auto& c : r.axioms.checks) axioms[c.name] = c.ok;
  Json j{{"family", to_string(r.label)}, {"p", r.p}, {"axioms", axioms}, {"primitive_dim", r.primitive_dim}};
  j["antipode_sq_order"] = r.antipode_sq_order ? Json(*r.antipode_sq_order) : Json(nullptr);
  j["unimodular"] = r.unimodular;
  j["symmetric"] = r.symmetric ? Json(*r.symmetric) : Json(nullptr);
  j["nakayama_order"] = r.nakayama_order ? Json(*r.nakayama_order) : Json(nullptr);
  j["winding"] = r.winding_ok;
  return j;
}

Json to_json(const FamilyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  Json j{{"family", to_string(r.label)}, {"p", r.p}};
  j["params"] = r.field ? params_json(r.params, *r.field) : Json::object();
  j["status"] = r.failed() ? "fail" : (r.checks.size() == 1 && r.checks[0].status == "skipped" ? "skipped" : "pass");
  j["checks"] = checks;
  if (r.cohomology) j["ext"] = to_json(*r.cohomology, r.max_degree);
  if (r.hopf) j["hopf"] = to_json(*r.hopf);
  return j;
}

namespace {

Json sparse_json(const Field& F, const Vec& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != F.zero()) out.push_back(Json::array({i, F.to_string(v[i])}));
  return out;
}

std::string p_support(Label l) {
  if (!label_supports_prime(l, 2)) return "p>2";
  if (l == Label::B3) return "all p; Hopf datum p>2";
  return "all p";
}

Json params_schema(Label l) {
  if (l == Label::A5) return Json{{"beta", "GF(p), p>2 only; default 1"}};
  if (l == Label::C16) {
    return Json{{"lambda", "GF(p) or GF(p^2) as a+b*t, nonzero"}, {"delta", "1 or -1; -1 needs p>2"}};
  }
  return Json::object();
}

}  // namespace

Json table_json(const Algebra& A) {
  const Field& F = A.field();
  Json field{{"p", F.characteristic()}, {"degree", F.degree()}};
  if (F.degree() > 1) field["modulus"] = F.modulus_poly();
  Json mult = Json::array();
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      for (const auto& t : A.basis_product(i, j)) mult.push_back(Json::array({i, j, t.index, F.to_string(t.coeff)}));
  Json gens = Json::object();
  for (const auto& g : A.generators()) gens[g.name] = sparse_json(F, g.value);
  return Json{{"field", field},        {"dim", A.dim()},           {"labels", A.labels()},
              {"mult", mult},          {"unit", sparse_json(F, A.unit())}, {"generators", gens}};
}

Json catalogue_json(const std::vector<unsigned>& primes) {
  Json out = Json::array();
  for (Label l : all_labels()) {
    Json pres = Json::array();
    for (unsigned p : primes) {
      if (!label_supports_prime(l, p)) continue;
      FieldPtr F = family_field(l, p, {});
      auto inst = presentation_catalog(l, p, default_params(l, p, F), F);
      Json hopf{{"available", inst.hopf.available}};
      if (inst.hopf.available) {
        hopf["Y"] = inst.hopf.Y;
        hopf["Z"] = inst.hopf.Z;
      } else {
        hopf["reason"] = inst.hopf.reason;
      }
      pres.push_back(Json{{"p", p},
                          {"params", params_json(inst.params, *F)},
                          {"generators", inst.presentation.names},
                          {"relations", inst.presentation.relation_strings()},
                          {"hopf", hopf}});
    }
    out.push_back(Json{{"label", to_string(l)},
                       {"p_support", p_support(l)},
                       {"params_schema", params_schema(l)},
                       {"presentations", pres}});
  }
  return out;
}

ParsedParams parse_params(Label label, unsigned p, const std::string& beta, const std::string& lambda,
                          const std::string& delta) {
  bool ext = lambda.find('t') != std::string::npos || delta.find('t') != std::string::npos;
  if (beta.find('t') != std::string::npos) throw Error(ErrorCode::InvalidParams, "beta must lie in GF(p)");
  if (ext && label != Label::C16) throw Error(ErrorCode::InvalidParams, "GF(p^2) parameters apply to C16 only");
  ParsedParams out;
  out.field = Field::make(p, ext ? 2 : 1);
  if (!beta.empty()) out.params.beta = out.field->parse(beta);
  if (!lambda.empty()) out.params.lambda = out.field->parse(lambda);
  if (!delta.empty()) out.params.delta = out.field->parse(delta);
  if (!beta.empty() && label != Label::A5) throw Error(ErrorCode::InvalidParams, "beta applies to A5 only");
  if ((!lambda.empty() || !delta.empty()) && label != Label::C16) {
    throw Error(ErrorCode::InvalidParams, "lambda and delta apply to C16 only");
  }
  return out;
}

}  // namespace p3
