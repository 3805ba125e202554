#pragma once

// Idempotents, radicals, quivers and Morita types.

#include <optional>
#include <string>
#include <vector>

#include "p3/algebra.hpp"
#include "p3/families.hpp"

namespace p3 {

struct IdempotentSet {
  std::vector<Vec> elems;
  /// tags[k][m] = index of the root of the m-th separable element on elems[k].
  std::vector<std::vector<unsigned>> tags;
  bool complete = false;
  bool orthogonal = false;
};

/// e_r = prod_{s != r} (u - s) / (r - s), one idempotent per root.
IdempotentSet split_idempotents(const Algebra& A, const Vec& u, const std::vector<Scalar>& roots);
/// Nonzero pairwise products of two commuting complete sets; tags are concatenated.
IdempotentSet refine(const Algebra& A, const IdempotentSet& a, const IdempotentSet& b);
bool check_idempotent_set(const Algebra& A, const IdempotentSet& s);

/// Primitive idempotents of the centre, found from the Frobenius-fixed part of Z(A).
std::vector<Vec> central_primitive_idempotents(const Algebra& A);

struct QuotientBlock {
  std::size_t dim = 0;
  bool matrix = false;  // certified M_n(k); otherwise a copy of k
};

struct RadicalCertificate {
  Subspace ideal;
  std::size_t nilpotency_index = 0;
  std::vector<QuotientBlock> blocks;
};

RadicalCertificate radical_certificate(const Algebra& A, const std::vector<Vec>& claimed_gens);

/// dims of A/rad, rad/rad^2, ... (sum = dim A).
std::vector<std::size_t> radical_layer_dims(const Algebra& A, const Subspace& rad);
std::vector<Subspace> radical_powers(const Algebra& A, const Subspace& rad);

/// True iff the block (dim n^2) is simple and has an n-dimensional faithful module.
bool matrix_block_certificate(const Algebra& block, unsigned n);
/// Checks that the matrices act as a simple module of dimension n on which the
/// generator relations hold, i.e. that they generate M_n(k).
bool module_generates_full_matrix_algebra(const Field& F, const std::vector<Matrix>& mats, std::size_t n);

struct Arrow {
  std::size_t source = 0, target = 0;
  std::string label;
  Vec element;  // representing element e_target a e_source
};

struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::string> relations;
  /// Optional weight data for coverings.
  unsigned group_order = 0;
  std::vector<int> weights;
};

/// Primitive idempotents from the catalogue's separable elements, with
/// matrix blocks stripped and primitivity (local corners) certified.
IdempotentSet primitive_idempotents_for(const Algebra& A, Label label, const Params& params, unsigned p,
                                        const Subspace& rad);
/// Central idempotents of A whose blocks are certified matrix algebras.
std::vector<Vec> matrix_block_idempotents(const Algebra& A);
QuiverPresentation quiver_extract(const Algebra& A, const IdempotentSet& idems, const Subspace& rad);
std::string quiver_to_dot(const QuiverPresentation& Q, const std::string& name);

std::size_t orbit_walk(unsigned p, const std::vector<Scalar>& f_coeffs, const Field& F);
/// sum_{j=1}^{p-1} j^m mod p
unsigned power_sum_mod(unsigned p, unsigned m);

struct NakayamaShape {
  std::size_t vertices = 0;
  std::size_t loewy_length = 0;
};

/// One shape per connected component of the quiver; nullopt unless every
/// component is a single oriented cycle with uniserial projectives of equal length.
std::optional<std::vector<NakayamaShape>> nakayama_shape(const Algebra& A, const IdempotentSet& idems,
                                                          const Subspace& rad);

enum class MoritaType { Semisimple, GroupAlgebraLike, NakayamaSelfinjective, RestrictedEnveloping, CoveringOfLocal, OtherLocal };

std::string to_string(MoritaType t);
MoritaType expected_morita(Label label);

/// Catalogue radical generators (empty optional when not supplied).
std::optional<std::vector<Vec>> claimed_radical_generators(const Algebra& A, Label label, unsigned p);

struct MoritaResult {
  MoritaType type;
  std::string evidence;
};

MoritaResult morita_classify(Label label, unsigned p, const Params& params);
/// Catalogue table of C5, C6 or C15 against u(g) for its restricted Lie datum.
IsoResult enveloping_matches_catalogue(Label label, unsigned p);

/// A5 at p = 2 against k<y,z>/((yz)^2 - (zy)^2, y^2, z^2 - yzy), x = [y,z].
/// The source is bounded by its normal words for the weights |y| = 1, |z| = 2.
IsoResult a5_semidihedral_iso();

/// True when the algebra is commutative, local and isomorphic to a tensor
/// product of truncated polynomial rings k[u]/(u^{p^a}).
bool is_truncated_polynomial_tensor(const Algebra& B, unsigned p, std::string* detail = nullptr);

}  // namespace p3
