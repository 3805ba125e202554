#pragma once

// Covering quivers for cyclic weight functions and twisted tensor products.

#include <string>
#include <vector>

#include "p3/algebra.hpp"
#include "p3/families.hpp"
#include "p3/structure.hpp"

namespace p3 {

/// One-vertex quiver with loops (the presentation's generators), a cyclic
/// group Z_m and a weight per loop.
struct WeightedPresentation {
  Presentation base;
  unsigned m = 0;
  std::vector<int> weights;
  std::string name = "covering";
};

struct Covering {
  QuiverPresentation quiver;
  Algebra algebra;   // basis (b, g) at index g * dim(base) + b
  Algebra base;
  std::vector<int> base_weights;  // weight of each normal monomial
};

/// Weight of a word, mod m.
int word_weight(const std::vector<int>& letters, const std::vector<int>& weights, unsigned m);

Covering covering_build(const WeightedPresentation& wp);

/// Basis element (b, g) of a covering.
Vec covering_basis(const Covering& c, std::size_t b, unsigned g);
/// sum_g coeff[g] (v, g) for a base element v.
Vec covering_lift(const Covering& c, const Vec& v, const std::vector<Scalar>& coeff);

/// tau(b ⊗ eps_g) stored at images[b * m + g], as a vector of k[G]^* ⊗ L
/// (index g' * dim L + b').
struct TwistingMap {
  unsigned m = 0;
  std::vector<Vec> images;
};

TwistingMap flip_twisting_map(const Algebra& L, unsigned m);
/// tau(b ⊗ eps_g) = eps_{g + w(b)} ⊗ b.
TwistingMap weight_twisting_map(const Algebra& L, unsigned m, const std::vector<int>& base_weights);

/// k[Z_m]^*: orthogonal idempotents eps_g.
Algebra dual_group_algebra(FieldPtr F, unsigned m);

/// Table on eps_g ⊗ b (index g * dim L + b). Throws TauAxiomViolation.
Algebra twisted_tensor_build(const Algebra& L, unsigned m, const TwistingMap& tau);

/// Checks eps_g ⊗ b -> (b, g - w(b)) is an algebra isomorphism.
bool covering_equiv_twisted(const WeightedPresentation& wp, std::string* detail = nullptr);

/// The summed structure constants of the covering equal those of the base.
bool pushdown_holds(const Covering& c);

/// Covering data of the catalogue (B1, C11, B3, C16) and the generator images
/// realising the family inside the covering algebra.
struct CoveringDatum {
  WeightedPresentation wp;
  Label label;
  Params params;
  unsigned a = 0;  // C16 only: lambda^{-1} = a lambda
};

CoveringDatum catalogue_covering(Label label, unsigned p, const Params& params, FieldPtr F = nullptr);
/// Example with base Lambda_1, w(y) = 1, w(z) = 0, m = p.
WeightedPresentation example_covering(FieldPtr F, unsigned p);
std::vector<Vec> catalogue_images(const CoveringDatum& d, const Covering& c);
/// Iso check catalogue table -> covering algebra.
IsoResult covering_matches_catalogue(const CoveringDatum& d);

}  // namespace p3
