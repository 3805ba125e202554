#include "p3/algebra.hpp"

#include <deque>
#include <random>
#include <sstream>

namespace p3 {

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].code) s.push_back(Term{static_cast<std::uint32_t>(i), v[i]});
  }
  return s;
}

Vec to_dense(const SparseVec& s, std::size_t dim) {
  Vec v(dim);
  for (const auto& t : s) v[t.index] = t.coeff;
  return v;
}

Algebra::Algebra(FieldPtr field, std::vector<std::string> labels, std::vector<SparseVec> products, Vec unit,
                 std::vector<NamedElement> generators)
    : field_(std::move(field)),
      labels_(std::move(labels)),
      products_(std::move(products)),
      unit_(std::move(unit)),
      generators_(std::move(generators)) {
  const std::size_t d = labels_.size();
  if (products_.size() != d * d) throw Error(ErrorCode::ShapeMismatch, "structure constants must have dim^2 entries");
  if (unit_.size() != d) throw Error(ErrorCode::ShapeMismatch, "unit has wrong length");
  for (const auto& g : generators_) {
    if (g.value.size() != d) throw Error(ErrorCode::ShapeMismatch, "generator " + g.name + " has wrong length");
  }
}

Algebra Algebra::from_product(FieldPtr field, std::vector<std::string> labels,
                              const std::function<SparseVec(std::size_t, std::size_t)>& product, Vec unit,
                              std::vector<NamedElement> generators) {
  const std::size_t d = labels.size();
  std::vector<SparseVec> products(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) products[i * d + j] = product(i, j);
  return Algebra(std::move(field), std::move(labels), std::move(products), std::move(unit), std::move(generators));
}

const Vec& Algebra::generator(const std::string& name) const {
  for (const auto& g : generators_) {
    if (g.name == name) return g.value;
  }
  throw Error(ErrorCode::InvalidParams, "no generator named " + name);
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
  const std::size_t d = dim();
  if (a.size() != d || b.size() != d) throw Error(ErrorCode::ShapeMismatch, "multiply: element length differs from dim");
  const Field& F = *field_;
  Vec r(d);
  std::vector<std::uint32_t> bnz;
  for (std::size_t j = 0; j < d; ++j)
    if (b[j].code) bnz.push_back(static_cast<std::uint32_t>(j));
  for (std::size_t i = 0; i < d; ++i) {
    if (!a[i].code) continue;
    for (auto j : bnz) {
      Scalar ab = F.mul(a[i], b[j]);
      for (const auto& t : products_[i * d + j]) r[t.index] = F.add(r[t.index], F.mul(ab, t.coeff));
    }
  }
  return r;
}

Vec Algebra::multiply_basis_right(const Vec& a, std::size_t j) const {
  const Field& F = *field_;
  const std::size_t d = dim();
  Vec r(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!a[i].code) continue;
    for (const auto& t : products_[i * d + j]) r[t.index] = F.add(r[t.index], F.mul(a[i], t.coeff));
  }
  return r;
}

Vec Algebra::multiply_basis_left(std::size_t i, const Vec& a) const {
  const Field& F = *field_;
  const std::size_t d = dim();
  Vec r(d);
  for (std::size_t j = 0; j < d; ++j) {
    if (!a[j].code) continue;
    for (const auto& t : products_[i * d + j]) r[t.index] = F.add(r[t.index], F.mul(a[j], t.coeff));
  }
  return r;
}

Vec Algebra::power(const Vec& a, unsigned long long e) const {
  Vec result = unit_;
  Vec base = a;
  while (e > 0) {
    if (e & 1ULL) result = multiply(result, base);
    e >>= 1ULL;
    if (e) base = multiply(base, base);
  }
  return result;
}

Vec Algebra::commutator(const Vec& a, const Vec& b) const {
  return subtracted(*field_, multiply(a, b), multiply(b, a));
}

Matrix Algebra::left_matrix(const Vec& a) const {
  const std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec col = multiply_basis_right(a, j);
    for (std::size_t r = 0; r < d; ++r) m(r, j) = col[r];
  }
  return m;
}

Matrix Algebra::right_matrix(const Vec& a) const {
  const std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec col = multiply_basis_left(i, a);
    for (std::size_t r = 0; r < d; ++r) m(r, i) = col[r];
  }
  return m;
}

bool Algebra::is_commutative() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (to_dense(products_[i * d + j], d) != to_dense(products_[j * d + i], d)) return false;
  return true;
}

std::string Algebra::format(const Vec& v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].code) continue;
    if (!first) os << " + ";
    first = false;
    std::string c = field_->to_string(v[i]);
    if (c != "1") os << (c.find('+') != std::string::npos ? "(" + c + ")" : c) << "*";
    os << labels_[i];
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

Vec product_of_basis(const Algebra& A, std::size_t i, std::size_t j) { return to_dense(A.basis_product(i, j), A.dim()); }

// (sum_k c_k b_k) * b_l
Vec dense_times_basis(const Algebra& A, const Vec& v, std::size_t l) { return A.multiply_basis_right(v, l); }

bool triple_ok(const Algebra& A, std::size_t i, std::size_t j, std::size_t k) {
  Vec left = dense_times_basis(A, product_of_basis(A, i, j), k);
  Vec right = A.multiply_basis_left(i, product_of_basis(A, j, k));
  return left == right;
}

std::vector<std::size_t> generator_support(const Algebra& A) {
  std::vector<std::size_t> out;
  for (const auto& g : A.generators()) {
    auto s = to_sparse(g.value);
    if (s.size() == 1 && s[0].coeff.code == 1) out.push_back(s[0].index);
  }
  return out;
}

// Generators if they generate A as an algebra, otherwise the full basis.
std::vector<Vec> generating_set(const Algebra& A) {
  if (!A.generators().empty()) {
    std::vector<Vec> gens;
    for (const auto& g : A.generators()) gens.push_back(g.value);
    if (subalgebra_closure(A, gens).is_whole()) return gens;
  }
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < A.dim(); ++i) basis.push_back(A.basis(i));
  return basis;
}

}  // namespace

std::optional<Triple> associativity_failure(const Algebra& A, const AssocPolicy& policy) {
  const std::size_t d = A.dim();
  if (d <= policy.full_limit) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Vec ij = product_of_basis(A, i, j);
        for (std::size_t k = 0; k < d; ++k) {
          if (dense_times_basis(A, ij, k) != A.multiply_basis_left(i, product_of_basis(A, j, k))) {
            return Triple{i, j, k};
          }
        }
      }
    return std::nullopt;
  }
  // Generator-anchored: every (b_i, b_j, g) with g a basis generator.
  auto gens = generator_support(A);
  if (gens.empty()) {
    for (std::size_t k = 0; k < d; ++k) gens.push_back(k);
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (auto g : gens)
        if (!triple_ok(A, i, j, g)) return Triple{i, j, g};
  std::mt19937_64 rng(policy.seed);
  std::uniform_int_distribution<std::size_t> pick(0, d - 1);
  for (std::size_t n = 0; n < policy.random_triples; ++n) {
    std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
    if (!triple_ok(A, i, j, k)) return Triple{i, j, k};
  }
  return std::nullopt;
}

bool unit_is_identity(const Algebra& A) {
  for (std::size_t i = 0; i < A.dim(); ++i) {
    Vec b = A.basis(i);
    if (A.multiply(A.unit(), b) != b || A.multiply(b, A.unit()) != b) return false;
  }
  return true;
}

Subspace subalgebra_closure(const Algebra& A, const std::vector<Vec>& gens) {
  const Field& F = A.field();
  Subspace S(A.dim());
  std::deque<Vec> queue;
  if (S.insert(F, A.unit())) queue.push_back(A.unit());
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Vec w = A.multiply(v, g);
      if (S.insert(F, w)) queue.push_back(std::move(w));
    }
    if (S.is_whole()) break;
  }
  return S;
}

Subspace ideal_closure(const Algebra& A, const std::vector<Vec>& gens) {
  const Field& F = A.field();
  Subspace S(A.dim());
  std::deque<Vec> queue;
  for (const auto& g : gens) {
    if (S.insert(F, g)) queue.push_back(g);
  }
  auto mult = generating_set(A);
  while (!queue.empty() && !S.is_whole()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& m : mult) {
      Vec l = A.multiply(m, v);
      if (S.insert(F, l)) queue.push_back(std::move(l));
      Vec r = A.multiply(v, m);
      if (S.insert(F, r)) queue.push_back(std::move(r));
    }
  }
  return S;
}

bool is_two_sided_ideal(const Algebra& A, const Subspace& I) {
  const Field& F = A.field();
  auto mult = generating_set(A);
  for (const auto& v : I.basis()) {
    for (const auto& m : mult) {
      if (!I.contains(F, A.multiply(m, v)) || !I.contains(F, A.multiply(v, m))) return false;
    }
  }
  return true;
}

Subspace product_space(const Algebra& A, const Subspace& I, const Subspace& J) {
  const Field& F = A.field();
  Subspace S(A.dim());
  for (const auto& a : I.basis()) {
    for (const auto& b : J.basis()) {
      S.insert(F, A.multiply(a, b));
      if (S.is_whole()) return S;
    }
  }
  return S;
}

NilpotencyResult ideal_is_nilpotent(const Algebra& A, const Subspace& I) {
  if (!is_two_sided_ideal(A, I)) throw Error(ErrorCode::NotAnIdeal, "subspace is not a two-sided ideal");
  NilpotencyResult r;
  if (I.dim() == 0) {
    r.nilpotent = true;
    r.index = 1;
    r.power_dims = {0};
    return r;
  }
  Subspace power = I;
  r.power_dims.push_back(power.dim());
  for (std::size_t m = 2; m <= A.dim() + 1; ++m) {
    Subspace next = product_space(A, power, I);
    r.power_dims.push_back(next.dim());
    if (next.dim() == 0) {
      r.nilpotent = true;
      r.index = m;
      return r;
    }
    if (next.dim() == power.dim()) return r;
    power = std::move(next);
  }
  return r;
}

Vec Quotient::project(const Field& F, const Subspace& I, const Vec& a) const {
  Vec red = I.reduce(F, a);
  Vec out(complement.size());
  for (std::size_t k = 0; k < complement.size(); ++k) out[k] = red[complement[k]];
  return out;
}

Quotient quotient(const Algebra& A, const Subspace& I) {
  if (I.is_whole()) throw Error(ErrorCode::WholeAlgebra, "cannot take the quotient by the whole algebra");
  const Field& F = A.field();
  Quotient q;
  q.complement = I.non_pivots();
  const std::size_t d = q.complement.size();
  std::vector<std::string> labels;
  for (auto c : q.complement) labels.push_back(A.labels()[c]);
  std::vector<SparseVec> products(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec prod = to_dense(A.basis_product(q.complement[i], q.complement[j]), A.dim());
      products[i * d + j] = to_sparse(q.project(F, I, prod));
    }
  std::vector<NamedElement> gens;
  for (const auto& g : A.generators()) gens.push_back({g.name, q.project(F, I, g.value)});
  q.algebra = Algebra(A.field_ptr(), std::move(labels), std::move(products), q.project(F, I, A.unit()), std::move(gens));
  return q;
}

Vec Corner::embed(const Vec& local) const {
  const Field& F = algebra.field();
  Vec out(space.ambient());
  for (std::size_t k = 0; k < local.size(); ++k) axpy(F, out, local[k], space.basis()[k]);
  return out;
}

Vec Corner::restrict_to(const Vec& global) const { return space.coords(global); }

Corner corner(const Algebra& A, const Vec& e) {
  const Field& F = A.field();
  if (A.multiply(e, e) != e) throw Error(ErrorCode::NotIdempotent, "corner needs an idempotent");
  Corner c;
  c.space = Subspace(A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    c.space.insert(F, A.multiply(A.multiply_basis_left(i, e), e));
  }
  const auto& basis = c.space.basis();
  const std::size_t d = basis.size();
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < d; ++k) labels.push_back("c" + std::to_string(k));
  std::vector<SparseVec> products(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) products[i * d + j] = to_sparse(c.space.coords(A.multiply(basis[i], basis[j])));
  std::vector<NamedElement> gens;
  for (const auto& g : A.generators()) gens.push_back({g.name, c.space.coords(A.multiply(A.multiply(e, g.value), e))});
  c.algebra = Algebra(A.field_ptr(), std::move(labels), std::move(products), c.space.coords(e), std::move(gens));
  return c;
}

Algebra tensor_product(const Algebra& A, const Algebra& B) {
  if (!(A.field() == B.field())) throw Error(ErrorCode::ShapeMismatch, "tensor product over different fields");
  const Field& F = A.field();
  const std::size_t da = A.dim(), db = B.dim();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) labels.push_back(A.labels()[i] + "⊗" + B.labels()[j]);
  auto prod = [&](std::size_t u, std::size_t v) {
    const auto& pa = A.basis_product(u / db, v / db);
    const auto& pb = B.basis_product(u % db, v % db);
    SparseVec out;
    for (const auto& s : pa)
      for (const auto& t : pb) out.push_back(Term{static_cast<std::uint32_t>(s.index * db + t.index), F.mul(s.coeff, t.coeff)});
    return out;
  };
  Vec unit(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) unit[i * db + j] = F.mul(A.unit()[i], B.unit()[j]);
  std::vector<NamedElement> gens;
  for (const auto& g : A.generators()) {
    Vec v(da * db);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < db; ++j) v[i * db + j] = F.mul(g.value[i], B.unit()[j]);
    gens.push_back({g.name + "⊗1", v});
  }
  for (const auto& g : B.generators()) {
    Vec v(da * db);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < db; ++j) v[i * db + j] = F.mul(A.unit()[i], g.value[j]);
    gens.push_back({"1⊗" + g.name, v});
  }
  return Algebra::from_product(A.field_ptr(), std::move(labels), prod, std::move(unit), std::move(gens));
}

Subspace center(const Algebra& A) {
  const Field& F = A.field();
  const std::size_t d = A.dim();
  auto gens = generating_set(A);
  Matrix stacked(d * gens.size(), d);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Matrix diff = mat_sub(F, A.right_matrix(gens[g]), A.left_matrix(gens[g]));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) stacked(g * d + r, c) = diff(r, c);
  }
  return Subspace::span(F, d, nullspace(F, stacked));
}

// ---------------------------------------------------------------------------

NcPoly NcPoly::word(std::vector<int> letters, Scalar c) {
  NcPoly p;
  p.terms.push_back(Word{std::move(letters), c});
  return p;
}

NcPoly& NcPoly::add(std::vector<int> letters, Scalar c) {
  terms.push_back(Word{std::move(letters), c});
  return *this;
}

NcPoly& NcPoly::add(const NcPoly& other, const Field& F, Scalar scale) {
  for (const auto& w : other.terms) terms.push_back(Word{w.letters, F.mul(scale, w.coeff)});
  return *this;
}

std::string NcPoly::format(const Field& F, const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& w : terms) {
    if (!w.coeff.code) continue;
    Scalar c = w.coeff;
    bool negative = false;
    if (F.degree() == 1 && c.code > F.characteristic() / 2) {
      negative = true;
      c = F.neg(c);
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string cs = F.to_string(c);
    bool unit_coeff = cs == "1";
    if (!unit_coeff) os << (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs);
    if (w.letters.empty()) {
      if (unit_coeff) os << "1";
      continue;
    }
    // compress runs into powers
    bool short_names = true;
    for (const auto& n : names) short_names = short_names && n.size() == 1;
    std::size_t i = 0;
    bool first_factor = true;
    while (i < w.letters.size()) {
      std::size_t j = i;
      while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
      if (!short_names && !first_factor) os << "*";
      first_factor = false;
      os << names[static_cast<std::size_t>(w.letters[i])];
      if (j - i > 1) os << "^" << (j - i);
      i = j;
    }
  }
  if (first) os << "0";
  return os.str();
}

Vec evaluate_word(const Algebra& A, const std::vector<int>& letters, const std::vector<Vec>& images) {
  Vec v = A.unit();
  for (int l : letters) v = A.multiply(v, images.at(static_cast<std::size_t>(l)));
  return v;
}

Vec evaluate(const Algebra& A, const NcPoly& poly, const std::vector<Vec>& images) {
  const Field& F = A.field();
  Vec out(A.dim());
  for (const auto& w : poly.terms) {
    if (!w.coeff.code) continue;
    axpy(F, out, w.coeff, evaluate_word(A, w.letters, images));
  }
  return out;
}

IsoResult iso_from_generators(const AlgebraMap& map) {
  IsoResult res;
  if (!map.target) {
    res.diagnostic = "no target algebra";
    return res;
  }
  const Algebra& T = *map.target;
  if (map.images.size() != map.source_generators.size()) {
    res.diagnostic = "image count differs from generator count";
    return res;
  }
  for (std::size_t r = 0; r < map.source_relations.size(); ++r) {
    Vec v = evaluate(T, map.source_relations[r], map.images);
    if (!is_zero(v)) {
      res.diagnostic = "relation " + map.source_relations[r].format(T.field(), map.source_generators) +
                       " maps to " + T.format(v);
      return res;
    }
  }
  Subspace S = subalgebra_closure(T, map.images);
  if (!S.is_whole()) {
    res.diagnostic = "images generate a subalgebra of dim " + std::to_string(S.dim()) + " < " + std::to_string(T.dim());
    return res;
  }
  if (map.source_dim != T.dim()) {
    res.diagnostic = "dimension mismatch: source " + std::to_string(map.source_dim) + ", target " + std::to_string(T.dim());
    return res;
  }
  if (!map.source_basis_words.empty()) {
    std::vector<Vec> cols;
    for (const auto& w : map.source_basis_words) cols.push_back(evaluate_word(T, w, map.images));
    if (cols.size() != T.dim() || rank(T.field(), Matrix::from_columns(cols, T.dim())) != T.dim()) {
      res.diagnostic = "basis images are not independent";
      return res;
    }
  }
  res.ok = true;
  return res;
}

}  // namespace p3
