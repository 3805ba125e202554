#pragma once

// Minimal projective resolutions, Ext dimensions and cohomology reports.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "p3/algebra.hpp"
#include "p3/families.hpp"

namespace p3 {

using Degree = std::vector<int>;

/// Left module: one action matrix per basis element of the algebra.
struct ModuleRep {
  const Algebra* algebra = nullptr;
  std::size_t dim = 0;
  std::vector<Matrix> action;
  /// Per basis vector; empty when ungraded.
  std::vector<Degree> degrees;

  Matrix act(const Vec& a) const;
};

/// Throws NotAModule when the unit or a structure constant is not respected.
void check_module(const ModuleRep& M);

Subspace left_ideal(const Algebra& A, const std::vector<Vec>& gens);
/// U / V for left ideals V ⊂ U of A.
ModuleRep subquotient_module(const Algebra& A, const Subspace& U, const Subspace& V);
/// A / (two-sided ideal of the generators); must be one-dimensional.
ModuleRep trivial_module(const Algebra& A);
/// A e / rad e.
ModuleRep simple_module(const Algebra& A, const Vec& e, const Subspace& rad);
/// Restriction along sub -> A given by the images of the basis of sub.
ModuleRep restrict_module(const ModuleRep& N, const Algebra& sub, const std::vector<Vec>& images);

struct Grading {
  std::vector<Degree> basis_degree;
};

/// Integer weights on the generators making every relation homogeneous,
/// verified on the full table. nullopt when only the zero grading exists.
std::optional<Grading> presentation_grading(const Presentation& P, const Algebra& A);
bool grading_respected(const Algebra& A, const Grading& g);

struct ResolutionSetup {
  const Algebra* algebra = nullptr;
  /// Orthogonal primitive idempotents summing to 1 on the modules resolved.
  std::vector<Vec> idempotents;
  Subspace rad;
  std::optional<Grading> grading;
};

struct ResolutionOptions {
  std::size_t steps = 22;
  /// Syzygies up to this dimension are kept for periodicity tests.
  std::size_t keep_syzygies_up_to = 64;
  /// Stop (truncated) once a projective exceeds this dimension.
  std::size_t max_projective_dim = 40000;
};

/// Action of the idempotents followed by the arrows.
struct GeneratorAction {
  std::vector<Matrix> mats;
  std::size_t dim() const { return mats.empty() ? 0 : mats[0].rows(); }
};

struct ResolutionTrace {
  FieldPtr field;
  std::vector<std::vector<std::size_t>> betti;  // betti[i][j]: copies of P_j in P_i
  std::vector<std::size_t> syzygy_dims;          // dim Ω^i, i = 0.. (Ω^0 = M)
  std::size_t steps = 0;
  bool terminated = false;
  bool truncated = false;
  std::vector<std::optional<GeneratorAction>> syzygies;
  /// summand vertices of each P_i
  std::vector<std::vector<std::size_t>> vertices;
  /// Top generators of M (module coordinates).
  std::vector<Vec> top_generators;
  /// components[i][k'] = {(k, x)}: the generator of summand k' of P_i has
  /// component x ∈ A e_{j_k} in summand k of P_{i-1} (i >= 1).
  std::vector<std::vector<std::vector<std::pair<std::size_t, SparseVec>>>> components;
};

ResolutionTrace minimal_resolution(const ResolutionSetup& setup, const ModuleRep& M, const ResolutionOptions& opt = {});

/// dim Ext^i(M, N) for i <= maxdeg from the Hom complex of a trace with at
/// least maxdeg + 2 steps.
std::vector<std::size_t> ext_dims(const ResolutionSetup& setup, const ResolutionTrace& trace, const ModuleRep& N,
                                  std::size_t maxdeg);

/// Least d > 0 with Ω^d M ≅ M among the kept syzygies.
std::optional<std::size_t> periodicity_detect(const ResolutionTrace& trace, std::uint64_t seed = 0);

struct NakayamaExt {
  std::size_t l1 = 0;
  std::optional<std::size_t> l2;
  std::size_t x_degree = 0;
  std::optional<std::size_t> y_degree;
  std::string ring;
  std::vector<std::size_t> dims(std::size_t maxdeg) const;
};

NakayamaExt nakayama_ext_closed_form(std::size_t n, std::size_t t);

struct BasicAlgebra {
  Algebra algebra;
  std::vector<Vec> idempotents;
  std::vector<Vec> arrows;
  Subspace rad;
};

/// Path algebra of the oriented n-cycle modulo paths of length t.
BasicAlgebra nakayama_algebra(FieldPtr F, std::size_t n, std::size_t t);

/// dim Ext^i(S_0, S_0) over the Nakayama algebra from the generic resolution.
std::vector<std::size_t> nakayama_ext_generic(FieldPtr F, std::size_t n, std::size_t t, std::size_t maxdeg);

/// Local algebra with trivial module: ext dims of k.
std::vector<std::size_t> local_trivial_ext(const Algebra& A, const Subspace& rad, std::size_t maxdeg,
                                           const std::optional<Grading>& grading = std::nullopt);

struct KunnethResult {
  bool ok = false;
  std::vector<std::size_t> tensor_dims, convolution;
};

/// Ext dims of k over A ⊗ B against the convolution of those over A and B
/// (A, B local with radicals generated by their generators).
KunnethResult kunneth_check(const Algebra& A, const Algebra& B, std::size_t maxdeg);

struct EckmannShapiroResult {
  bool ok = false;
  std::vector<std::size_t> lhs, rhs;
};

/// Γ ⊂ Λ via images of Γ's basis; M = trivial Γ-module; N = Λ/rad Λ.
/// Λ must be free as a right Γ-module on right_basis (FreenessNotVerified).
EckmannShapiroResult eckmann_shapiro_check(const Algebra& Lambda, const std::vector<Vec>& lambda_idempotents,
                                           const Subspace& lambda_rad, const Algebra& Gamma,
                                           const Subspace& gamma_rad, const std::vector<Vec>& inclusion,
                                           const std::vector<Vec>& right_basis, std::size_t maxdeg);

struct ExtProfile {
  std::string block;
  std::vector<std::size_t> dims;
  std::optional<std::size_t> period;
  std::string claim;
  std::string status;  // "match", "log-only", "truncated", "skipped"
};

struct CohomologyReport {
  Label label;
  unsigned p = 0;
  std::vector<ExtProfile> blocks;
  std::string note;
};

/// Per central block: Ext of its simple (the trivial module in its own block)
/// against the claimed series. Throws ClaimMismatch on disagreement.
CohomologyReport cohomology_report(Label label, unsigned p, const Params& params, std::size_t maxdeg = 20);

std::vector<std::size_t> binomial_series(std::size_t r, std::size_t maxdeg);
std::vector<std::size_t> indicator_series(std::size_t period, std::size_t maxdeg);

}  // namespace p3
