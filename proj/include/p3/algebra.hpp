#pragma once

// Finite-dimensional associative unital algebras given by structure constants.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "p3/gf.hpp"

namespace p3 {

struct Term {
  std::uint32_t index = 0;
  Scalar coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

using SparseVec = std::vector<Term>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& s, std::size_t dim);

struct NamedElement {
  std::string name;
  Vec value;
};

class Algebra {
 public:
  Algebra() = default;
  /// products[i * dim + j] holds b_i * b_j.
  Algebra(FieldPtr field, std::vector<std::string> labels, std::vector<SparseVec> products, Vec unit,
          std::vector<NamedElement> generators = {});

  /// Builds a table by evaluating a product callback on every basis pair.
  static Algebra from_product(FieldPtr field, std::vector<std::string> labels,
                              const std::function<SparseVec(std::size_t, std::size_t)>& product, Vec unit,
                              std::vector<NamedElement> generators = {});

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseVec& basis_product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  const Vec& unit() const { return unit_; }
  const std::vector<NamedElement>& generators() const { return generators_; }
  /// Named generator lookup; throws InvalidParams when missing.
  const Vec& generator(const std::string& name) const;
  void set_generators(std::vector<NamedElement> gens) { generators_ = std::move(gens); }

  Vec basis(std::size_t i) const { return unit_vec(dim(), i); }
  Vec scalar(Scalar s) const { return scaled(*field_, s, unit_); }

  Vec multiply(const Vec& a, const Vec& b) const;
  /// a * b_j
  Vec multiply_basis_right(const Vec& a, std::size_t j) const;
  /// b_i * a
  Vec multiply_basis_left(std::size_t i, const Vec& a) const;
  Vec power(const Vec& a, unsigned long long e) const;
  Vec commutator(const Vec& a, const Vec& b) const;

  /// Matrix of v -> a v (columns indexed by basis).
  Matrix left_matrix(const Vec& a) const;
  /// Matrix of v -> v a.
  Matrix right_matrix(const Vec& a) const;

  bool is_commutative() const;
  std::string format(const Vec& v) const;

 private:
  FieldPtr field_;
  std::vector<std::string> labels_;
  std::vector<SparseVec> products_;
  Vec unit_;
  std::vector<NamedElement> generators_;
};

// ---------------------------------------------------------------------------
// Certificates

struct AssocPolicy {
  /// Full triple check when dim <= full_limit.
  std::size_t full_limit = 27;
  std::size_t random_triples = 100000;
  std::uint64_t seed = 0;
};

struct Triple {
  std::size_t i = 0, j = 0, k = 0;
};

/// Returns the first basis triple violating associativity, if any.
std::optional<Triple> associativity_failure(const Algebra& A, const AssocPolicy& policy = {});
/// True when the unit acts as a two-sided identity on every basis element.
bool unit_is_identity(const Algebra& A);

// ---------------------------------------------------------------------------
// Ideals, quotients, corners

Subspace ideal_closure(const Algebra& A, const std::vector<Vec>& gens);
bool is_two_sided_ideal(const Algebra& A, const Subspace& I);
/// span{ a b : a in I, b in J }
Subspace product_space(const Algebra& A, const Subspace& I, const Subspace& J);

struct NilpotencyResult {
  bool nilpotent = false;
  std::size_t index = 0;  // least m with I^m = 0 when nilpotent
  std::vector<std::size_t> power_dims;  // dim I^1, I^2, ...
};

NilpotencyResult ideal_is_nilpotent(const Algebra& A, const Subspace& I);

struct Quotient {
  Algebra algebra;
  std::vector<std::size_t> complement;  // coordinates of A kept as the quotient basis
  Vec project(const Field& F, const Subspace& I, const Vec& a) const;
};

Quotient quotient(const Algebra& A, const Subspace& I);

struct Corner {
  Algebra algebra;
  Subspace space;  // eAe inside A
  Vec embed(const Vec& local) const;
  Vec restrict_to(const Vec& global) const;
};

Corner corner(const Algebra& A, const Vec& e);

Algebra tensor_product(const Algebra& A, const Algebra& B);

/// Smallest subalgebra containing 1 and gens.
Subspace subalgebra_closure(const Algebra& A, const std::vector<Vec>& gens);
Subspace center(const Algebra& A);

// ---------------------------------------------------------------------------
// Noncommutative polynomials and algebra maps

struct Word {
  std::vector<int> letters;  // generator indices
  Scalar coeff;
};

struct NcPoly {
  std::vector<Word> terms;
  static NcPoly word(std::vector<int> letters, Scalar c = Scalar{1});
  NcPoly& add(std::vector<int> letters, Scalar c);
  NcPoly& add(const NcPoly& other, const Field& F, Scalar scale);
  std::string format(const Field& F, const std::vector<std::string>& names) const;
};

/// Evaluates poly with generator i sent to images[i].
Vec evaluate(const Algebra& A, const NcPoly& poly, const std::vector<Vec>& images);
Vec evaluate_word(const Algebra& A, const std::vector<int>& letters, const std::vector<Vec>& images);

struct AlgebraMap {
  std::vector<std::string> source_generators;
  std::vector<NcPoly> source_relations;
  std::size_t source_dim = 0;
  /// Optional basis of the source as words; enables the rank (bijectivity) check.
  std::vector<std::vector<int>> source_basis_words;
  const Algebra* target = nullptr;
  std::vector<Vec> images;
};

struct IsoResult {
  bool ok = false;
  std::string diagnostic;
};

IsoResult iso_from_generators(const AlgebraMap& map);

}  // namespace p3
