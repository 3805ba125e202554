#pragma once

// Exact arithmetic over GF(p) and GF(p^2), plus dense linear algebra.
//
// Field elements are small integer codes. For GF(p) the code is the residue;
// for GF(p^2) = GF(p)[t]/(t^2 + a t + b) the element c0 + c1 t has code
// c0 + p * c1. All operations go through precomputed tables.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "p3/error.hpp"

namespace p3 {

struct Scalar {
  std::uint16_t code = 0;
  friend auto operator<=>(Scalar, Scalar) = default;
};

using Vec = std::vector<Scalar>;

class Field {
 public:
  /// GF(p) for degree 1, GF(p^2) for degree 2. The quadratic modulus is the
  /// lexicographically smallest monic t^2 + a t + b, ordered by (a, b), with no
  /// root in GF(p).
  static std::shared_ptr<const Field> make(unsigned p, unsigned degree = 1);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return degree_; }
  unsigned order() const { return q_; }
  /// Coefficients (b, a) of t^2 + a t + b; empty for prime fields.
  const std::vector<unsigned>& modulus_poly() const { return modulus_; }

  Scalar zero() const { return Scalar{0}; }
  Scalar one() const { return Scalar{1}; }
  /// The adjoined root t of the modulus (degree 2 only).
  Scalar t() const;
  Scalar from_int(long long v) const;
  Scalar from_coeffs(std::span<const unsigned> coeffs) const;
  std::vector<unsigned> coeffs(Scalar s) const;
  /// Element with the given code; codes enumerate the field as 0..order()-1.
  Scalar element(unsigned code) const { return Scalar{static_cast<std::uint16_t>(code)}; }

  Scalar add(Scalar a, Scalar b) const { return Scalar{add_[a.code * q_ + b.code]}; }
  Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }
  Scalar neg(Scalar a) const { return Scalar{neg_[a.code]}; }
  Scalar mul(Scalar a, Scalar b) const { return Scalar{mul_[a.code * q_ + b.code]}; }
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, unsigned long long e) const;
  bool is_zero(Scalar a) const { return a.code == 0; }
  bool in_prime_field(Scalar a) const { return a.code < p_; }

  /// "3", "t", "2+t", "1+2*t" style rendering, parsed back by parse().
  std::string to_string(Scalar s) const;
  Scalar parse(const std::string& text) const;

  bool operator==(const Field& other) const {
    return p_ == other.p_ && degree_ == other.degree_ && modulus_ == other.modulus_;
  }

  // Raw table access for hot loops.
  const std::uint16_t* add_table() const { return add_.data(); }
  const std::uint16_t* mul_table() const { return mul_.data(); }

 private:
  Field() = default;

  unsigned p_ = 0;
  unsigned degree_ = 1;
  unsigned q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(unsigned n);

// ---------------------------------------------------------------------------
// Vectors

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
void axpy(const Field& F, Vec& y, Scalar a, const Vec& x);  // y += a x
Vec scaled(const Field& F, Scalar a, const Vec& x);
Vec added(const Field& F, const Vec& a, const Vec& b);
Vec subtracted(const Field& F, const Vec& a, const Vec& b);
Scalar dot(const Field& F, const Vec& a, const Vec& b);

// ---------------------------------------------------------------------------
// Dense matrices

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(const Field& F, std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
  const Scalar* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }
  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);
  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix mat_mul(const Field& F, const Matrix& a, const Matrix& b);
Vec mat_vec(const Field& F, const Matrix& a, const Vec& v);
Matrix mat_add(const Field& F, const Matrix& a, const Matrix& b);
Matrix mat_sub(const Field& F, const Matrix& a, const Matrix& b);
Matrix mat_pow(const Field& F, const Matrix& a, unsigned long long e);
bool is_zero(const Matrix& m);

/// In-place reduced row echelon form. Returns pivot columns in row order.
std::vector<std::size_t> rref_in_place(const Field& F, Matrix& m);
std::size_t rank(const Field& F, Matrix m);
Scalar determinant(const Field& F, Matrix m);
std::optional<Matrix> inverse(const Field& F, const Matrix& m);
/// Basis of { v : m v = 0 }.
std::vector<Vec> nullspace(const Field& F, const Matrix& m);
/// Basis of { v : v^T m = 0 }.
std::vector<Vec> left_nullspace(const Field& F, const Matrix& m);

struct SolveResult {
  std::optional<Matrix> particular;  // X with A X = B, when one exists
  std::vector<Vec> nullspace;        // basis of ker A
};

/// Solves A X = B exactly.
SolveResult linsolve(const Field& F, const Matrix& a, const Matrix& b);

// ---------------------------------------------------------------------------
// Subspaces kept in fully reduced echelon form.

class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
  static Subspace span(const Field& F, std::size_t ambient, const std::vector<Vec>& vecs);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residue of v after eliminating the pivot coordinates; zero iff v is inside.
  Vec reduce(const Field& F, Vec v) const;
  bool contains(const Field& F, const Vec& v) const;
  /// Inserts v; returns true when the dimension grew.
  bool insert(const Field& F, Vec v);
  /// Coordinates of v (assumed inside) with respect to basis().
  Vec coords(const Vec& v) const;
  bool is_whole() const { return dim() == ambient_; }
  /// Coordinates not used as pivots, ascending.
  std::vector<std::size_t> non_pivots() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.canonical() == b.canonical();
  }

 private:
  std::vector<Vec> canonical() const;

  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace intersect(const Field& F, const Subspace& a, const Subspace& b);
Subspace sum(const Field& F, const Subspace& a, const Subspace& b);

}  // namespace p3
