#pragma once

// Comultiplication, antipode, integrals and Frobenius forms of the catalogue.

#include <optional>
#include <string>
#include <vector>

#include "p3/algebra.hpp"
#include "p3/families.hpp"

namespace p3 {

/// A ⊗ A on pairs of basis indices (i * dim + j); products evaluated on demand.
class TensorSquare {
 public:
  explicit TensorSquare(const Algebra& A) : A_(&A) {}
  std::size_t dim() const { return A_->dim() * A_->dim(); }
  const Algebra& base() const { return *A_; }
  Vec pure(const Vec& a, const Vec& b) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec one() const { return pure(A_->unit(), A_->unit()); }
  Vec evaluate(const NcPoly& poly, const std::vector<Vec>& images) const;

 private:
  const Algebra* A_;
};

struct HopfData {
  FamilyInstance inst;
  Algebra algebra;
  /// normal word of every basis monomial
  std::vector<std::vector<int>> words;
  std::vector<Vec> delta_gens;
  std::vector<Vec> antipode_gens;
  /// Δ of every basis element
  std::vector<Vec> delta;
  /// S on the basis (column i = S(b_i))
  Matrix antipode;
  /// ε on the basis
  Vec counit;
};

enum class HopfVariant {
  Printed,
  /// A1-A4: Z = ω(x)[y⊗1 + 1⊗y - ω(x)]^{p-1} + ω(y)
  BracketSignFlipped,
};

/// Throws HopfDataUnavailable (no datum for the label at p) or ScalePolicy (p > 3).
HopfData comultiplication_build(Label label, unsigned p, const Params& params,
                                HopfVariant variant = HopfVariant::Printed);

struct AxiomCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct HopfAxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_ok() const;
};

/// delta_relations, coassociativity, counit, antipode, antipode_relations.
HopfAxiomReport hopf_axiom_check(const HopfData& h);

/// Basis of {h : Δ(h) = h⊗1 + 1⊗h}.
std::vector<Vec> primitive_space(const HopfData& h);

/// Least n >= 1 with S^{2n} = id, nullopt beyond the cap.
std::optional<unsigned> antipode_order(const HopfData& h, unsigned cap);

struct IntegralSpaces {
  std::vector<Vec> left, right;
  bool unimodular = false;
  /// Λ b_i = alpha[i] Λ for a left integral Λ
  Vec alpha;
  bool alpha_multiplicative = false;
};

/// ε vanishes on the generators. Throws IntegralDimensionNot1.
IntegralSpaces integral_spaces(const Algebra& A);

struct FrobeniusForm {
  Vec lambda;
  Matrix gram;  // λ(b_i b_j)
  std::optional<Matrix> nakayama;
};

Matrix gram_matrix(const Algebra& A, const Vec& lambda);

struct SymmetricSearch {
  std::optional<FrobeniusForm> form;
  bool exhaustive = false;
  /// nonzero a with A a ⊂ [A, A]: no symmetric form can be nondegenerate
  std::optional<Vec> obstruction;
  std::size_t solution_dim = 0;
  std::size_t trials = 0;
};

/// Throws SearchInconclusive when nothing was found outside the exhaustive regime.
SymmetricSearch symmetric_form_search(const Algebra& A, std::uint64_t seed = 0);

/// σ with λ(ab) = λ(b σ(a)), certified an automorphism. Throws NoFrobeniusFormFound.
FrobeniusForm frobenius_nakayama(const Algebra& A, std::uint64_t seed = 0, const std::optional<Vec>& lambda = std::nullopt);

/// σ^{-1}(g) = g + Tr(ad g) on the generators (σ as in frobenius_nakayama); σ^p = id.
struct TraceCheck {
  bool ok = false;
  bool exact = false;
  bool order_p = false;
  std::vector<Scalar> traces;
};
TraceCheck restricted_nakayama_check(const Algebra& A, const FrobeniusForm& form);

/// Order of an automorphism matrix, nullopt beyond the cap.
std::optional<unsigned> automorphism_order(const Field& F, const Matrix& m, unsigned cap);

/// A unit u with u σ(g) = τ(g) u on the generators (τ σ^{-1} inner).
std::optional<Vec> inner_twist(const Algebra& A, const Matrix& sigma, const Matrix& tau, std::uint64_t seed = 0);

/// λ with (id ⊗ λ)Δ(h) = λ(h) 1.
std::vector<Vec> left_integrals_dual(const HopfData& h);

struct WindingCheck {
  bool ok = false;
  /// λ(ab) = λ(S²ξ(b) a) for the left integral λ of H^*
  bool direct = false;
  /// (S²ξ)^{-1} against frobenius_nakayama's σ up to an inner automorphism
  bool inner_equivalent = false;
  bool xi_identity = false;
  bool s2_identity = false;
  Matrix nu;
};

WindingCheck winding_nakayama_check(const HopfData& h, std::uint64_t seed = 0);

struct HopfReport {
  Label label;
  unsigned p = 0;
  HopfAxiomReport axioms;
  std::size_t primitive_dim = 0;
  std::optional<unsigned> antipode_sq_order;
  bool unimodular = false;
  std::size_t left_integral_dim = 0, right_integral_dim = 0;
  std::optional<bool> symmetric;  // nullopt: inconclusive
  std::string symmetric_method;
  std::optional<unsigned> nakayama_order;
  bool winding_ok = false;
};

HopfReport hopf_report(Label label, unsigned p, const Params& params, std::uint64_t seed = 0,
                       HopfVariant variant = HopfVariant::Printed);

/// Symmetry verdict stated for the family.
bool expected_symmetric(Label label, const Params& params, const Field& F);

}  // namespace p3
