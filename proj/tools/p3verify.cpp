// p3verify: command-line front end to the verification workbench.

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "p3/error.hpp"
#include "p3/report.hpp"
#include "p3/structure.hpp"

using namespace p3;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct Common {
  std::vector<std::string> families;
  bool all = false;
  unsigned p = 2;
  std::string beta, lambda, delta;
  std::size_t max_degree = 20;
  std::uint64_t seed = 0;
  std::string out;
  unsigned jobs = 1;
  bool dot = false;
};

bool usage_error(ErrorCode c) {
  return c == ErrorCode::InvalidParams || c == ErrorCode::ParseError || c == ErrorCode::NonPrime ||
         c == ErrorCode::IncompatiblePrime;
}

void emit(const Json& j, const std::string& out) {
  std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidParams, "cannot write " + out);
  f << text;
}

Label single_family(const Common& c) {
  if (c.families.size() != 1) throw Error(ErrorCode::InvalidParams, "exactly one --family is required");
  return parse_label(c.families[0]);
}

Params family_params(Label l, const Common& c) { return parse_params(l, c.p, c.beta, c.lambda, c.delta).params; }

void require_prime(unsigned p) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
}

int run_verify(const Common& c) {
  require_prime(c.p);
  std::vector<Label> labels;
  if (c.all) {
    if (!c.families.empty()) throw Error(ErrorCode::InvalidParams, "--all and --family are exclusive");
    if (!c.beta.empty() || !c.lambda.empty() || !c.delta.empty()) {
      throw Error(ErrorCode::InvalidParams, "parameters need a single --family");
    }
    labels = all_labels();
  } else {
    if (c.families.empty()) throw Error(ErrorCode::InvalidParams, "give --family or --all");
    for (const auto& f : c.families) labels.push_back(parse_label(f));
  }
  std::vector<Params> params;
  for (Label l : labels) params.push_back(family_params(l, c));

  VerifyOptions opt;
  opt.max_degree = c.max_degree;
  opt.seed = c.seed;
  std::vector<FamilyReport> reports(labels.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < labels.size();) reports[i] = verify_family(labels[i], c.p, params[i], opt);
  };
  unsigned n = std::max(1u, std::min<unsigned>(c.jobs, labels.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Json fams = Json::array();
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : reports) {
    Json j = to_json(r);
    std::string s = j["status"];
    (s == "fail" ? fail : s == "skipped" ? skipped : pass)++;
    fams.push_back(std::move(j));
  }
  Json doc{{"tool", "p3verify"}, {"p", c.p}, {"max_degree", c.max_degree}, {"seed", c.seed}, {"families", fams}};
  doc["summary"] = Json{{"pass", pass}, {"fail", fail}, {"skipped", skipped}};
  emit(doc, c.out);
  return fail ? kFail : kPass;
}

int run_quiver(const Common& c) {
  require_prime(c.p);
  Label l = single_family(c);
  Params prm = family_params(l, c);
  auto inst = presentation_catalog(l, c.p, prm);
  Algebra A = build_family_algebra(inst);
  auto claimed = claimed_radical_generators(A, l, c.p);
  if (!claimed) throw Error(ErrorCode::PrerequisitesUnavailable, "no radical generators catalogued for " + to_string(l));
  auto rad = radical_certificate(A, *claimed).ideal;
  auto Q = quiver_extract(A, primitive_idempotents_for(A, l, inst.params, c.p, rad), rad);
  if (c.dot) {
    std::string text = quiver_to_dot(Q, to_string(l) + "_p" + std::to_string(c.p));
    if (c.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream(c.out, std::ios::binary) << text;
    }
    return kPass;
  }
  Json arrows = Json::array();
  for (const auto& a : Q.arrows) arrows.push_back(Json{{"source", a.source}, {"target", a.target}, {"label", a.label}});
  emit(Json{{"family", to_string(l)}, {"p", c.p}, {"vertices", Q.vertices}, {"arrows", arrows}, {"relations", Q.relations}},
       c.out);
  return kPass;
}

int run_ext(const Common& c) {
  require_prime(c.p);
  Label l = single_family(c);
  auto rep = cohomology_report(l, c.p, family_params(l, c), c.max_degree);
  emit(to_json(rep, c.max_degree), c.out);
  return kPass;
}

int run_table(const Common& c) {
  require_prime(c.p);
  Label l = single_family(c);
  auto parsed = parse_params(l, c.p, c.beta, c.lambda, c.delta);
  auto inst = presentation_catalog(l, c.p, parsed.params);
  emit(table_json(build_family_algebra(inst)), c.out);
  return kPass;
}

int run_hopf(const Common& c) {
  require_prime(c.p);
  Label l = single_family(c);
  auto rep = hopf_report(l, c.p, family_params(l, c), c.seed);
  emit(to_json(rep), c.out);
  return rep.axioms.all_ok() && rep.winding_ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification workbench for connected Hopf algebras of dimension p^3"};
  app.require_subcommand(1);
  Common c;
  std::vector<unsigned> primes{2, 3};

  auto add_family = [&](CLI::App* s) {
    s->add_option("--family", c.families, "family label, e.g. A3 or C16");
    s->add_option("--p", c.p, "prime")->required();
    s->add_option("--beta", c.beta, "A5 parameter");
    s->add_option("--lambda", c.lambda, "C16 parameter, \"a+b*t\" for GF(p^2)");
    s->add_option("--delta", c.delta, "C16 parameter");
    s->add_option("--out", c.out, "write JSON here instead of stdout");
  };

  auto* verify = app.add_subcommand("verify", "run every suite on the given families");
  add_family(verify);
  verify->add_flag("--all", c.all, "all 24 families");
  verify->add_option("--max-degree", c.max_degree, "Ext degree bound")->check(CLI::Range(0, 64));
  verify->add_option("--seed", c.seed, "seed for randomized searches");
  verify->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1, 256));

  auto* quiver = app.add_subcommand("quiver", "Gabriel quiver with relations");
  add_family(quiver);
  quiver->add_flag("--dot", c.dot, "Graphviz output");

  auto* ext = app.add_subcommand("ext", "Ext of the simples per block");
  add_family(ext);
  ext->add_option("--max-degree", c.max_degree, "Ext degree bound")->check(CLI::Range(0, 64));

  auto* hopf = app.add_subcommand("hopf", "Hopf axioms, integrals and Nakayama data");
  add_family(hopf);
  hopf->add_option("--seed", c.seed, "seed for randomized searches");

  auto* cat = app.add_subcommand("catalogue", "presentations and Hopf data as JSON");
  cat->add_option("--p", primes, "primes")->capture_default_str();
  cat->add_option("--out", c.out, "write JSON here instead of stdout");

  auto* table = app.add_subcommand("table", "structure constants as JSON");
  add_family(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return run_verify(c);
    if (*quiver) return run_quiver(c);
    if (*ext) return run_ext(c);
    if (*hopf) return run_hopf(c);
    if (*table) return run_table(c);
    for (unsigned p : primes) require_prime(p);
    emit(catalogue_json(primes), c.out);
    return kPass;
  } catch (const Error& e) {
    std::cerr << "p3verify: " << e.what() << "\n";
    return usage_error(e.code()) ? kUsage : kFail;
  }
}
