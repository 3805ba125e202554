#include "p3/gf.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace p3 {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::shared_ptr<const Field> Field::make(unsigned p, unsigned degree) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (degree != 1 && degree != 2) {
    throw Error(ErrorCode::InvalidDegree, "field degree must be 1 or 2, got " + std::to_string(degree));
  }
  if (degree == 1 && p > 251) throw Error(ErrorCode::InvalidDegree, "prime too large for table arithmetic");
  if (degree == 2 && p > 13) throw Error(ErrorCode::InvalidDegree, "prime too large for GF(p^2) tables");

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->degree_ = degree;
  f->q_ = degree == 1 ? p : p * p;
  const unsigned q = f->q_;

  if (degree == 2) {
    // Smallest (a, b) such that t^2 + a t + b has no root in GF(p).
    bool found = false;
    for (unsigned a = 0; a < p && !found; ++a) {
      for (unsigned b = 0; b < p && !found; ++b) {
        bool has_root = false;
        for (unsigned r = 0; r < p; ++r) {
          if ((r * r + a * r + b) % p == 0) {
            has_root = true;
            break;
          }
        }
        if (!has_root) {
          f->modulus_ = {b, a};
          found = true;
        }
      }
    }
  }

  f->add_.resize(q * q);
  f->mul_.resize(q * q);
  f->neg_.resize(q);
  f->inv_.assign(q, 0);
  auto split = [p](unsigned c) { return std::pair<unsigned, unsigned>{c % p, c / p}; };
  for (unsigned x = 0; x < q; ++x) {
    auto [x0, x1] = split(x);
    f->neg_[x] = static_cast<std::uint16_t>((p - x0) % p + p * ((p - x1) % p));
    for (unsigned y = 0; y < q; ++y) {
      auto [y0, y1] = split(y);
      unsigned s0 = (x0 + y0) % p;
      unsigned s1 = (x1 + y1) % p;
      f->add_[x * q + y] = static_cast<std::uint16_t>(s0 + p * s1);
      unsigned m0 = x0 * y0;
      unsigned m1 = x0 * y1 + x1 * y0;
      unsigned m2 = x1 * y1;
      if (degree == 2) {
        // t^2 = -a t - b
        unsigned b = f->modulus_[0], a = f->modulus_[1];
        m0 += (p - b) * m2;
        m1 += (p - a) * m2;
      }
      f->mul_[x * q + y] = static_cast<std::uint16_t>(m0 % p + p * (m1 % p));
    }
  }
  for (unsigned x = 1; x < q; ++x) {
    for (unsigned y = 1; y < q; ++y) {
      if (f->mul_[x * q + y] == 1) {
        f->inv_[x] = static_cast<std::uint16_t>(y);
        break;
      }
    }
  }
  return f;
}

Scalar Field::t() const {
  if (degree_ != 2) throw Error(ErrorCode::InvalidDegree, "t exists only in GF(p^2)");
  return Scalar{static_cast<std::uint16_t>(p_)};
}

Scalar Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar{static_cast<std::uint16_t>(r)};
}

Scalar Field::from_coeffs(std::span<const unsigned> coeffs) const {
  if (coeffs.size() > degree_) throw Error(ErrorCode::ShapeMismatch, "too many coefficients");
  unsigned code = 0;
  unsigned scale = 1;
  for (unsigned c : coeffs) {
    code += (c % p_) * scale;
    scale *= p_;
  }
  return Scalar{static_cast<std::uint16_t>(code)};
}

std::vector<unsigned> Field::coeffs(Scalar s) const {
  if (degree_ == 1) return {s.code};
  return {s.code % p_, s.code / p_};
}

Scalar Field::inv(Scalar a) const {
  if (a.code == 0) throw Error(ErrorCode::ShapeMismatch, "inverse of zero");
  return Scalar{inv_[a.code]};
}

Scalar Field::pow(Scalar a, unsigned long long e) const {
  Scalar result = one();
  Scalar base = a;
  while (e > 0) {
    if (e & 1ULL) result = mul(result, base);
    base = mul(base, base);
    e >>= 1ULL;
  }
  return result;
}

std::string Field::to_string(Scalar s) const {
  auto c = coeffs(s);
  if (degree_ == 1 || c[1] == 0) return std::to_string(c[0]);
  std::string tpart = c[1] == 1 ? "t" : std::to_string(c[1]) + "*t";
  if (c[0] == 0) return tpart;
  return std::to_string(c[0]) + "+" + tpart;
}

Scalar Field::parse(const std::string& text) const {
  // Accepts sums of terms "k", "t", "k*t", "kt", with optional leading '-'.
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty scalar");
  Scalar total = zero();
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') negative = !negative;
      ++i;
    }
    long long coeff = 1;
    bool have_digits = false;
    long long digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits = digits * 10 + (s[i] - '0');
      have_digits = true;
      ++i;
    }
    if (have_digits) coeff = digits;
    bool has_t = false;
    if (i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == 't') {
      has_t = true;
      ++i;
    }
    if (!have_digits && !has_t) throw Error(ErrorCode::ParseError, "cannot parse scalar '" + text + "'");
    Scalar term = from_int(coeff);
    if (has_t) term = mul(term, t());
    if (negative) term = neg(term);
    total = add(total, term);
    if (i < s.size() && s[i] != '+' && s[i] != '-') {
      throw Error(ErrorCode::ParseError, "cannot parse scalar '" + text + "'");
    }
  }
  return total;
}

// ---------------------------------------------------------------------------

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Scalar{1};
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Scalar s) { return s.code == 0; });
}

void axpy(const Field& F, Vec& y, Scalar a, const Vec& x) {
  if (y.size() != x.size()) throw Error(ErrorCode::ShapeMismatch, "axpy length mismatch");
  if (a.code == 0) return;
  const unsigned q = F.order();
  const std::uint16_t* mrow = F.mul_table() + a.code * q;
  const std::uint16_t* add = F.add_table();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].code != 0) y[i].code = add[y[i].code * q + mrow[x[i].code]];
  }
}

Vec scaled(const Field& F, Scalar a, const Vec& x) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = F.mul(a, x[i]);
  return r;
}

Vec added(const Field& F, const Vec& a, const Vec& b) {
  Vec r = a;
  axpy(F, r, F.one(), b);
  return r;
}

Vec subtracted(const Field& F, const Vec& a, const Vec& b) {
  Vec r = a;
  axpy(F, r, F.neg(F.one()), b);
  return r;
}

Scalar dot(const Field& F, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::ShapeMismatch, "dot length mismatch");
  Scalar s = F.zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].code && b[i].code) s = F.add(s, F.mul(a[i], b[i]));
  }
  return s;
}

// ---------------------------------------------------------------------------

Matrix Matrix::identity(const Field& F, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = F.one();
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error(ErrorCode::ShapeMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const { return Vec(row_ptr(r), row_ptr(r) + cols_); }

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "row length mismatch");
  std::copy(v.begin(), v.end(), row_ptr(r));
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix mat_mul(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "mat_mul shape mismatch");
  Matrix c(a.rows(), b.cols());
  const unsigned q = F.order();
  const std::uint16_t* mul = F.mul_table();
  const std::uint16_t* add = F.add_table();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar* crow = c.row_ptr(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const unsigned aik = a(i, k).code;
      if (aik == 0) continue;
      const std::uint16_t* mrow = mul + aik * q;
      const Scalar* brow = b.row_ptr(k);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (brow[j].code) crow[j].code = add[crow[j].code * q + mrow[brow[j].code]];
      }
    }
  }
  return c;
}

Vec mat_vec(const Field& F, const Matrix& a, const Vec& v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::ShapeMismatch, "mat_vec shape mismatch");
  Vec r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar s = F.zero();
    const Scalar* row = a.row_ptr(i);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (row[j].code && v[j].code) s = F.add(s, F.mul(row[j], v[j]));
    }
    r[i] = s;
  }
  return r;
}

Matrix mat_add(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "mat_add");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.add(a(i, j), b(i, j));
  return c;
}

Matrix mat_sub(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "mat_sub");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.sub(a(i, j), b(i, j));
  return c;
}

Matrix mat_pow(const Field& F, const Matrix& a, unsigned long long e) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::ShapeMismatch, "mat_pow needs a square matrix");
  Matrix result = Matrix::identity(F, a.rows());
  Matrix base = a;
  while (e > 0) {
    if (e & 1ULL) result = mat_mul(F, result, base);
    e >>= 1ULL;
    if (e) base = mat_mul(F, base, base);
  }
  return result;
}

bool is_zero(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c).code) return false;
  return true;
}

namespace {

// row_dst += a * row_src over [from, cols)
void row_axpy(const Field& F, Scalar* dst, Scalar a, const Scalar* src, std::size_t from, std::size_t cols) {
  const unsigned q = F.order();
  const std::uint16_t* mrow = F.mul_table() + a.code * q;
  const std::uint16_t* add = F.add_table();
  for (std::size_t j = from; j < cols; ++j) {
    if (src[j].code) dst[j].code = add[dst[j].code * q + mrow[src[j].code]];
  }
}

void row_scale(const Field& F, Scalar* row, Scalar a, std::size_t from, std::size_t cols) {
  for (std::size_t j = from; j < cols; ++j) row[j] = F.mul(a, row[j]);
}

}  // namespace

std::vector<std::size_t> rref_in_place(const Field& F, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (m(i, c).code) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != r) {
      std::swap_ranges(m.row_ptr(sel), m.row_ptr(sel) + cols, m.row_ptr(r));
    }
    row_scale(F, m.row_ptr(r), F.inv(m(r, c)), c, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Scalar f = m(i, c);
      if (f.code) row_axpy(F, m.row_ptr(i), F.neg(f), m.row_ptr(r), c, cols);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Field& F, Matrix m) { return rref_in_place(F, m).size(); }

Scalar determinant(const Field& F, Matrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = F.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = n;
    for (std::size_t i = c; i < n; ++i) {
      if (m(i, c).code) {
        sel = i;
        break;
      }
    }
    if (sel == n) return F.zero();
    if (sel != c) {
      std::swap_ranges(m.row_ptr(sel), m.row_ptr(sel) + n, m.row_ptr(c));
      det = F.neg(det);
    }
    Scalar piv = m(c, c);
    det = F.mul(det, piv);
    Scalar pinv = F.inv(piv);
    for (std::size_t i = c + 1; i < n; ++i) {
      Scalar f = m(i, c);
      if (f.code) row_axpy(F, m.row_ptr(i), F.neg(F.mul(f, pinv)), m.row_ptr(c), c, n);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Field& F, const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::ShapeMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F.one();
  }
  auto piv = rref_in_place(F, aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<Vec> nullspace(const Field& F, const Matrix& m) {
  Matrix r = m;
  auto pivots = rref_in_place(F, r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = F.one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = F.neg(r(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> left_nullspace(const Field& F, const Matrix& m) { return nullspace(F, m.transposed()); }

SolveResult linsolve(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "linsolve: A and B row counts differ");
  const std::size_t n = a.cols(), k = b.cols(), m = a.rows();
  Matrix aug(m, n + k);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  auto pivots = rref_in_place(F, aug);
  SolveResult result;
  bool consistent = true;
  for (auto c : pivots) {
    if (c >= n) {
      consistent = false;
      break;
    }
  }
  if (consistent) {
    Matrix x(n, k);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (std::size_t j = 0; j < k; ++j) x(pivots[r], j) = aug(r, n + j);
    result.particular = std::move(x);
  }
  std::vector<bool> is_pivot(n, false);
  std::size_t npiv = 0;
  for (auto c : pivots) {
    if (c < n) {
      is_pivot[c] = true;
      ++npiv;
    }
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n);
    v[free] = F.one();
    for (std::size_t r = 0; r < npiv; ++r) v[pivots[r]] = F.neg(aug(r, free));
    result.nullspace.push_back(std::move(v));
  }
  return result;
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(const Field& F, std::size_t ambient, const std::vector<Vec>& vecs) {
  Subspace s(ambient);
  for (const auto& v : vecs) s.insert(F, v);
  return s;
}

Vec Subspace::reduce(const Field& F, Vec v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::ShapeMismatch, "subspace ambient mismatch");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    Scalar c = v[pivots_[k]];
    if (c.code) axpy(F, v, F.neg(c), basis_[k]);
  }
  return v;
}

bool Subspace::contains(const Field& F, const Vec& v) const { return is_zero(reduce(F, v)); }

bool Subspace::insert(const Field& F, Vec v) {
  v = reduce(F, std::move(v));
  std::size_t piv = 0;
  while (piv < v.size() && v[piv].code == 0) ++piv;
  if (piv == v.size()) return false;
  Scalar inv = F.inv(v[piv]);
  for (auto& s : v) s = F.mul(inv, s);
  for (auto& b : basis_) {
    Scalar c = b[piv];
    if (c.code) axpy(F, b, F.neg(c), v);
  }
  // keep rows sorted by pivot
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  auto idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, piv);
  basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

Vec Subspace::coords(const Vec& v) const {
  Vec c(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (k < pivots_.size() && pivots_[k] == i) {
      ++k;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

std::vector<Vec> Subspace::canonical() const { return basis_; }

Subspace intersect(const Field& F, const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorCode::ShapeMismatch, "intersect ambient mismatch");
  // Solve sum_i s_i a_i - sum_j t_j b_j = 0.
  const std::size_t n = a.ambient();
  std::vector<Vec> cols;
  for (const auto& v : a.basis()) cols.push_back(v);
  for (const auto& v : b.basis()) cols.push_back(scaled(F, F.neg(F.one()), v));
  Subspace out(n);
  if (cols.empty()) return out;
  Matrix m = Matrix::from_columns(cols, n);
  for (const auto& sol : nullspace(F, m)) {
    Vec v(n);
    for (std::size_t i = 0; i < a.dim(); ++i) axpy(F, v, sol[i], a.basis()[i]);
    out.insert(F, v);
  }
  return out;
}

Subspace sum(const Field& F, const Subspace& a, const Subspace& b) {
  Subspace out = a;
  for (const auto& v : b.basis()) out.insert(F, v);
  return out;
}

}  // namespace p3
