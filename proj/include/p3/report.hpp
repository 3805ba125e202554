#pragma once

// Verification suites per family and their JSON form.

#include <string>
#include <vector>

#include "json.hpp"
#include "p3/families.hpp"
#include "p3/homology.hpp"
#include "p3/hopf.hpp"

namespace p3 {

using Json = nlohmann::ordered_json;

struct CheckRecord {
  std::string name;
  std::string status;  // pass, fail, skipped, inconclusive, log-only
  std::string details;
};

struct FamilyReport {
  Label label;
  unsigned p = 0;
  Params params;
  FieldPtr field;
  std::vector<CheckRecord> checks;
  std::optional<CohomologyReport> cohomology;
  std::size_t max_degree = 0;
  std::optional<HopfReport> hopf;

  bool failed() const;
};

struct VerifyOptions {
  std::size_t max_degree = 20;
  std::uint64_t seed = 0;
};

FamilyReport verify_family(Label label, unsigned p, const Params& params, const VerifyOptions& opt = {});

/// Scalars of the family's field as "a+b*t" strings.
Json params_json(const Params& params, const Field& F);
Json to_json(const CheckRecord& c);
Json to_json(const ExtProfile& e);
Json to_json(const CohomologyReport& r, std::size_t max_degree);
Json to_json(const HopfReport& r);
Json to_json(const FamilyReport& r);
/// {field, dim, labels, mult: [i, j, k, c] triples, unit, generators}.
Json table_json(const Algebra& A);
/// One entry per label: p-support, parameter schema, presentations at each prime.
Json catalogue_json(const std::vector<unsigned>& primes);

/// Parses --beta/--lambda/--delta strings; GF(p^2) when any mentions t.
struct ParsedParams {
  Params params;
  FieldPtr field;
};
ParsedParams parse_params(Label label, unsigned p, const std::string& beta, const std::string& lambda,
                          const std::string& delta);

}  // namespace p3
