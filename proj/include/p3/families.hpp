#pragma once

// The catalogue of connected Hopf algebras of dimension p^3 as presented
// algebras on generators x, y, z, and the rewriting engine that turns a
// presentation into a structure-constant table on the monomials x^r y^s z^t.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "p3/algebra.hpp"

namespace p3 {

enum class Label { A1, A2, A3, A4, A5, B1, B2, B3, C1, C2, C3, C4, C5, C6, C7, C8, C9, C10, C11, C12, C13, C14, C15, C16 };

const std::vector<Label>& all_labels();
std::string to_string(Label l);
Label parse_label(const std::string& s);
inline char label_type(Label l) { return to_string(l)[0]; }

struct Params {
  std::optional<Scalar> beta;
  std::optional<Scalar> lambda;
  std::optional<Scalar> delta;
};

/// Generators g_0 < g_1 < ... with rules
///   g_j g_i -> comm[j][i]        (j > i)
///   g_i^{bound[i]} -> power[i]
/// The right-hand sides are arbitrary polynomials; normal words are
/// g_0^{e_0} g_1^{e_1} ... with e_i < bound[i].
struct Presentation {
  FieldPtr field;
  unsigned p = 0;
  std::vector<std::string> names{"x", "y", "z"};
  std::vector<unsigned> bounds;
  std::vector<std::vector<NcPoly>> comm;  // only [j][i] with j > i used
  std::vector<NcPoly> power;
  std::optional<Label> label;
  Params params;

  std::size_t ngens() const { return names.size(); }
  /// Relations lhs - rhs: commutation rules in the order (1,0), (2,0), (2,1), ...
  /// followed by the power rules.
  std::vector<NcPoly> relations() const;
  std::vector<std::string> relation_strings() const;
  const std::vector<std::string>& name_list() const { return names; }
};

/// Presentation with commuting generators (g_j g_i -> g_i g_j) and zero powers g^p.
Presentation commutative_presentation(FieldPtr F, unsigned p, std::vector<std::string> names = {"x", "y", "z"});
/// Sets the rule g_j g_i -> g_i g_j + extra.
void set_commutation(Presentation& P, int j, int i, const NcPoly& extra);

struct HopfSlots {
  bool available = false;
  std::string reason;  // set when unavailable
  std::string Y, Z;    // textual description
};

struct FamilyInstance {
  Label label;
  unsigned p = 0;
  Params params;
  Presentation presentation;
  HopfSlots hopf;
};

/// Field needed for the parameters: GF(p^2) when lambda lies outside GF(p).
FieldPtr family_field(Label label, unsigned p, const Params& params);
/// Default parameters: beta = 1 for A5 (p > 2), lambda = delta = 1 for C16.
Params default_params(Label label, unsigned p, const FieldPtr& F);

FamilyInstance presentation_catalog(Label label, unsigned p, const Params& params, FieldPtr F = nullptr);
bool label_supports_prime(Label label, unsigned p);

/// B2's f(x) coefficients: entry i is the coefficient of x^i.
std::vector<Scalar> b2_f_coeffs(const Field& F, unsigned p);

// ---------------------------------------------------------------------------
// Rewriting

class Rewriter {
 public:
  explicit Rewriter(const Presentation& pres, std::size_t step_cap = 1000000);

  std::size_t dim() const { return dim_; }
  std::size_t monomial_index(const std::vector<unsigned>& exps) const;
  std::vector<unsigned> exponents(std::size_t index) const;
  std::string monomial_label(std::size_t index) const;
  /// Normal monomial as a word.
  std::vector<int> monomial_word(std::size_t index) const;

  /// Linear combination of normal monomials equal to the word.
  SparseVec normalize_word(const std::vector<int>& letters);
  SparseVec normalize(const NcPoly& poly);
  /// Product of two normal monomials.
  SparseVec multiply_monomials(std::size_t a, std::size_t b);

  std::size_t steps() const { return steps_; }

 private:
  const SparseVec& act(int g, std::size_t m);
  SparseVec act_poly_on(const NcPoly& poly, const SparseVec& v);
  void count_step();

  Presentation pres_;
  std::size_t dim_ = 1;
  std::vector<std::size_t> stride_;
  std::size_t cap_;
  std::size_t steps_ = 0;
  std::vector<std::vector<std::optional<SparseVec>>> cache_;
  std::vector<std::vector<char>> busy_;
};

Algebra build_from_presentation(const Presentation& pres, const AssocPolicy& policy = {});
Algebra build_family_algebra(Label label, unsigned p, const Params& params);
Algebra build_family_algebra(const FamilyInstance& inst);

// ---------------------------------------------------------------------------
// Restricted Lie algebras of dimension 3

struct RestrictedLie {
  FieldPtr field;
  unsigned p = 0;
  std::array<std::string, 3> names{"x1", "x2", "x3"};
  /// bracket[i][j] = [x_i, x_j] in coordinates.
  std::array<std::array<Vec, 3>, 3> bracket;
  std::array<Vec, 3> p_op;
};

RestrictedLie make_lie(FieldPtr F, unsigned p);
/// Sets [x_i, x_j] = v and [x_j, x_i] = -v.
void set_bracket(RestrictedLie& L, int i, int j, const Vec& v);
Matrix ad_matrix(const RestrictedLie& L, const Vec& v);

struct LieCheck {
  bool ok = false;
  std::string diagnostic;
};

LieCheck verify_p_operation(const RestrictedLie& L);
Presentation enveloping_presentation(const RestrictedLie& L);
Algebra restricted_enveloping(const RestrictedLie& L);

/// Lie data for C5, C6 and the sl2 datum (e, f, h' = -h/2) behind C15.
RestrictedLie lie_c5(FieldPtr F, unsigned p);
RestrictedLie lie_c6(FieldPtr F, unsigned p);
RestrictedLie lie_sl2_prime(FieldPtr F, unsigned p);

// ---------------------------------------------------------------------------

/// sum_{i=1}^{p-1} (binom(p, i) / p mod p) as coefficients indexed by i.
std::vector<Scalar> omega_coeffs(const Field& F, unsigned p);

/// Local algebras k<y,z>/<y^p, yz - zy - c y^2, z^p> with c = 0 or 1.
Presentation lambda_presentation(FieldPtr F, unsigned p, bool twisted);

}  // namespace p3
