#include "p3/hopf.hpp"

#include <cmath>
#include <random>

#include "p3/error.hpp"

namespace p3 {

namespace {

std::vector<std::pair<std::size_t, Scalar>> nonzeros(const Vec& v) {
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].code) out.emplace_back(i, v[i]);
  return out;
}

Scalar apply_covector(const Field& F, const Vec& lambda, const SparseVec& v) {
  Scalar s = F.zero();
  for (const auto& t : v) s = F.add(s, F.mul(lambda[t.index], t.coeff));
  return s;
}

Vec random_vec(const Field& F, std::size_t n, std::mt19937_64& rng) {
  Vec v(n);
  for (auto& s : v) s = F.element(static_cast<unsigned>(rng() % F.order()));
  return v;
}

Vec combine(const Field& F, const std::vector<Vec>& basis, const Vec& coeffs, std::size_t n) {
  Vec v(n);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (coeffs[k].code) axpy(F, v, coeffs[k], basis[k]);
  return v;
}

bool is_unit(const Algebra& A, const Vec& u) { return rank(A.field(), A.left_matrix(u)) == A.dim(); }

}  // namespace

Vec TensorSquare::pure(const Vec& a, const Vec& b) const {
  const Field& F = A_->field();
  const std::size_t d = A_->dim();
  Vec out(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!a[i].code) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (b[j].code) out[i * d + j] = F.mul(a[i], b[j]);
  }
  return out;
}

Vec TensorSquare::multiply(const Vec& a, const Vec& b) const {
  const Field& F = A_->field();
  const std::size_t d = A_->dim();
  Vec out(d * d);
  auto na = nonzeros(a), nb = nonzeros(b);
  for (const auto& [ia, ca] : na) {
    const std::size_t i = ia / d, j = ia % d;
    for (const auto& [ib, cb] : nb) {
      const SparseVec& P = A_->basis_product(i, ib / d);
      const SparseVec& Q = A_->basis_product(j, ib % d);
      if (P.empty() || Q.empty()) continue;
      const Scalar c = F.mul(ca, cb);
      for (const auto& s : P) {
        const Scalar cs = F.mul(c, s.coeff);
        for (const auto& t : Q) {
          Scalar& o = out[s.index * d + t.index];
          o = F.add(o, F.mul(cs, t.coeff));
        }
      }
    }
  }
  return out;
}

Vec TensorSquare::evaluate(const NcPoly& poly, const std::vector<Vec>& images) const {
  const Field& F = A_->field();
  Vec out(dim());
  for (const auto& w : poly.terms) {
    Vec v = one();
    for (int g : w.letters) v = multiply(v, images[g]);
    axpy(F, out, w.coeff, v);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// ω(t) = sum_{i=1}^{p-1} binom(p, i)/p t^i ⊗ t^{p-i}
Vec omega(const TensorSquare& T, const Vec& t, unsigned p) {
  const Algebra& A = T.base();
  const Field& F = A.field();
  auto c = omega_coeffs(F, p);
  Vec out(T.dim());
  for (unsigned i = 1; i < p; ++i) axpy(F, out, c[i], T.pure(A.power(t, i), A.power(t, p - i)));
  return out;
}

Vec primitive_part(const TensorSquare& T, const Vec& g) { return added(T.base().field(), T.pure(g, T.base().unit()), T.pure(T.base().unit(), g)); }

}  // namespace

HopfData comultiplication_build(Label label, unsigned p, const Params& params, HopfVariant variant) {
  if (p > 3) throw Error(ErrorCode::ScalePolicy, "Hopf verification runs for p <= 3 only");
  FieldPtr F = family_field(label, p, params);
  HopfData h;
  h.inst = presentation_catalog(label, p, params, F);
  if (!h.inst.hopf.available) throw Error(ErrorCode::HopfDataUnavailable, h.inst.hopf.reason);
  h.algebra = build_family_algebra(h.inst);
  const Algebra& A = h.algebra;
  const Field& K = A.field();
  const std::size_t d = A.dim();
  Rewriter rw(h.inst.presentation);
  for (std::size_t i = 0; i < d; ++i) h.words.push_back(rw.monomial_word(i));

  TensorSquare T(A);
  const Vec x = A.generator("x"), y = A.generator("y"), z = A.generator("z");
  Vec Y(T.dim()), Z(T.dim());
  switch (label_type(label)) {
    case 'A': {
      Y = omega(T, x, p);
      Vec base = primitive_part(T, y);
      if (label != Label::A5) {
        axpy(K, base, variant == HopfVariant::BracketSignFlipped ? K.from_int(-1) : K.one(), Y);
      }
      Vec pw = T.one();
      for (unsigned i = 0; i + 1 < p; ++i) pw = T.multiply(pw, base);
      Z = added(K, T.multiply(Y, pw), omega(T, y, p));
      break;
    }
    case 'B':
      if (label == Label::B1) Z = omega(T, y, p);
      if (label == Label::B2) Z = omega(T, x, p);
      if (label == Label::B3) Z = scaled(K, K.from_int(-2), T.pure(x, y));
      break;
    default:
      break;
  }
  h.delta_gens = {primitive_part(T, x), added(K, primitive_part(T, y), Y), added(K, primitive_part(T, z), Z)};

  for (std::size_t i = 0; i < d; ++i) {
    Vec v = T.one();
    for (int g : h.words[i]) v = T.multiply(v, h.delta_gens[g]);
    h.delta.push_back(std::move(v));
  }
  h.counit = unit_vec(d, 0);

  // S(g) = -g - sum S(a) b over the non-primitive part sum a ⊗ b of Δ(g)
  h.antipode_gens.clear();
  auto antipode_of_basis = [&](std::size_t i) {
    Vec v = A.unit();
    for (auto it = h.words[i].rbegin(); it != h.words[i].rend(); ++it) {
      if (static_cast<std::size_t>(*it) >= h.antipode_gens.size()) {
        throw Error(ErrorCode::CertificateFailure, "antipode recursion needs S of a later generator");
      }
      v = A.multiply(v, h.antipode_gens[*it]);
    }
    return v;
  };
  const std::vector<Vec> gens{x, y, z};
  for (std::size_t g = 0; g < 3; ++g) {
    Vec rest = subtracted(K, h.delta_gens[g], primitive_part(T, gens[g]));
    Vec s = scaled(K, K.from_int(-1), gens[g]);
    for (const auto& [idx, c] : nonzeros(rest)) {
      Vec term = A.multiply_basis_right(antipode_of_basis(idx / d), idx % d);
      axpy(K, s, K.neg(c), term);
    }
    h.antipode_gens.push_back(s);
  }
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < d; ++i) cols.push_back(antipode_of_basis(i));
  h.antipode = Matrix::from_columns(cols, d);
  return h;
}

bool HopfAxiomReport::all_ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return !checks.empty();
}

HopfAxiomReport hopf_axiom_check(const HopfData& h) {
  const Algebra& A = h.algebra;
  const Field& F = A.field();
  const std::size_t d = A.dim();
  TensorSquare T(A);
  HopfAxiomReport rep;
  const auto& P = h.inst.presentation;
  auto rels = P.relations();
  auto strs = P.relation_strings();

  {
    AxiomCheck c{"delta_relations", true, ""};
    for (std::size_t r = 0; r < rels.size() && c.ok; ++r) {
      if (!is_zero(T.evaluate(rels[r], h.delta_gens))) {
        c.ok = false;
        c.detail = "Δ does not annihilate " + strs[r];
      }
    }
    if (c.ok && d <= 8) {
      for (std::size_t i = 0; i < d && c.ok; ++i)
        for (std::size_t j = 0; j < d && c.ok; ++j) {
          Vec lhs = T.multiply(h.delta[i], h.delta[j]);
          Vec rhs(T.dim());
          for (const auto& t : A.basis_product(i, j)) axpy(F, rhs, t.coeff, h.delta[t.index]);
          if (lhs != rhs) {
            c.ok = false;
            c.detail = "Δ(b_i)Δ(b_j) != Δ(b_i b_j) at (" + A.labels()[i] + ", " + A.labels()[j] + ")";
          }
        }
    }
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c{"coassociativity", true, ""};
    for (std::size_t g = 0; g < h.delta_gens.size() && c.ok; ++g) {
      Vec left(d * d * d), right(d * d * d);
      for (const auto& [idx, coef] : nonzeros(h.delta_gens[g])) {
        const std::size_t i = idx / d, j = idx % d;
        for (const auto& [m, cm] : nonzeros(h.delta[i])) {
          Scalar& o = left[m * d + j];
          o = F.add(o, F.mul(coef, cm));
        }
        for (const auto& [m, cm] : nonzeros(h.delta[j])) {
          Scalar& o = right[i * d * d + m];
          o = F.add(o, F.mul(coef, cm));
        }
      }
      if (left != right) {
        c.ok = false;
        c.detail = "(Δ⊗1)Δ != (1⊗Δ)Δ on " + P.names[g];
      }
    }
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c{"counit", true, ""};
    for (std::size_t i = 0; i < d && c.ok; ++i)
      for (std::size_t j = 0; j < d && c.ok; ++j) {
        Scalar e = apply_covector(F, h.counit, A.basis_product(i, j));
        if (e != F.mul(h.counit[i], h.counit[j])) {
          c.ok = false;
          c.detail = "ε is not multiplicative";
        }
      }
    for (std::size_t b = 0; b < d && c.ok; ++b) {
      Vec l(d), r(d);
      for (const auto& [idx, coef] : nonzeros(h.delta[b])) {
        const std::size_t i = idx / d, j = idx % d;
        l[j] = F.add(l[j], F.mul(coef, h.counit[i]));
        r[i] = F.add(r[i], F.mul(coef, h.counit[j]));
      }
      if (l != A.basis(b) || r != A.basis(b)) {
        c.ok = false;
        c.detail = "counit fails on " + A.labels()[b];
      }
    }
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c{"antipode", true, ""};
    std::vector<Vec> S;
    for (std::size_t i = 0; i < d; ++i) S.push_back(h.antipode.column(i));
    for (std::size_t b = 0; b < d && c.ok; ++b) {
      // m(S⊗1)Δ and m(1⊗S)Δ
      std::vector<Vec> left_part(d, Vec(d)), right_part(d, Vec(d));
      for (const auto& [idx, coef] : nonzeros(h.delta[b])) {
        const std::size_t i = idx / d, j = idx % d;
        axpy(F, left_part[j], coef, S[i]);
        axpy(F, right_part[i], coef, S[j]);
      }
      Vec l(d), r(d);
      for (std::size_t k = 0; k < d; ++k) {
        if (!is_zero(left_part[k])) l = added(F, l, A.multiply_basis_right(left_part[k], k));
        if (!is_zero(right_part[k])) r = added(F, r, A.multiply_basis_left(k, right_part[k]));
      }
      Vec expect = scaled(F, h.counit[b], A.unit());
      if (l != expect || r != expect) {
        c.ok = false;
        c.detail = std::string(l != expect ? "m(S⊗1)Δ" : "m(1⊗S)Δ") + " != uε on " + A.labels()[b];
      }
    }
    rep.checks.push_back(c);
  }
  {
    AxiomCheck c{"antipode_relations", true, ""};
    for (std::size_t r = 0; r < rels.size() && c.ok; ++r) {
      NcPoly rev;
      for (const auto& w : rels[r].terms) rev.add(std::vector<int>(w.letters.rbegin(), w.letters.rend()), w.coeff);
      if (!is_zero(evaluate(A, rev, h.antipode_gens))) {
        c.ok = false;
        c.detail = "S (as an anti-map) does not annihilate " + strs[r];
      }
    }
    rep.checks.push_back(c);
  }
  return rep;
}

std::vector<Vec> primitive_space(const HopfData& h) {
  const Algebra& A = h.algebra;
  const Field& F = A.field();
  const std::size_t d = A.dim();
  TensorSquare T(A);
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < d; ++i) cols.push_back(subtracted(F, h.delta[i], primitive_part(T, A.basis(i))));
  return nullspace(F, Matrix::from_columns(cols, d * d));
}

std::optional<unsigned> automorphism_order(const Field& F, const Matrix& m, unsigned cap) {
  Matrix id = Matrix::identity(F, m.rows());
  Matrix pw = m;
  for (unsigned n = 1; n <= cap; ++n) {
    if (pw == id) return n;
    pw = mat_mul(F, pw, m);
  }
  return std::nullopt;
}

std::optional<unsigned> antipode_order(const HopfData& h, unsigned cap) {
  const Field& F = h.algebra.field();
  return automorphism_order(F, mat_mul(F, h.antipode, h.antipode), cap);
}

// ---------------------------------------------------------------------------

namespace {

Matrix stacked(const std::vector<Matrix>& ms) {
  std::vector<Vec> rows;
  for (const auto& m : ms)
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return Matrix::from_rows(rows, ms.empty() ? 0 : ms[0].cols());
}

}  // namespace

IntegralSpaces integral_spaces(const Algebra& A) {
  const Field& F = A.field();
  const std::size_t d = A.dim();
  std::vector<Matrix> L, R;
  for (const auto& g : A.generators()) {
    L.push_back(A.left_matrix(g.value));
    R.push_back(A.right_matrix(g.value));
  }
  IntegralSpaces out;
  out.left = nullspace(F, stacked(L));
  out.right = nullspace(F, stacked(R));
  if (out.left.size() != 1 || out.right.size() != 1) {
    throw Error(ErrorCode::IntegralDimensionNot1, "integral spaces have dimensions " + std::to_string(out.left.size()) +
                                                      " and " + std::to_string(out.right.size()));
  }
  const Vec& lam = out.left[0];
  std::size_t piv = 0;
  while (!lam[piv].code) ++piv;
  out.alpha = Vec(d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec v = A.multiply_basis_right(lam, i);
    Scalar a = F.div(v[piv], lam[piv]);
    if (v != scaled(F, a, lam)) throw Error(ErrorCode::CertificateFailure, "left integrals are not a right submodule");
    out.alpha[i] = a;
  }
  out.unimodular = Subspace::span(F, d, out.left).contains(F, out.right[0]);
  out.alpha_multiplicative = true;
  for (std::size_t i = 0; i < d && out.alpha_multiplicative; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (apply_covector(F, out.alpha, A.basis_product(i, j)) != F.mul(out.alpha[i], out.alpha[j])) {
        out.alpha_multiplicative = false;
        break;
      }
  return out;
}

Matrix gram_matrix(const Algebra& A, const Vec& lambda) {
  const std::size_t d = A.dim();
  Matrix G(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) G(i, j) = apply_covector(A.field(), lambda, A.basis_product(i, j));
  return G;
}

namespace {

constexpr double kExhaustiveLimit = 1e6;
constexpr std::size_t kRandomTrials = 10000;

// Searches span(basis) for a covector with invertible Gram matrix.
struct FormSearch {
  std::optional<Vec> found;
  bool exhaustive = false;
  std::size_t trials = 0;
};

FormSearch search_forms(const Algebra& A, const std::vector<Vec>& basis, std::uint64_t seed) {
  const Field& F = A.field();
  const std::size_t d = A.dim(), m = basis.size();
  FormSearch out;
  if (m == 0) {
    out.exhaustive = true;
    return out;
  }
  std::vector<Matrix> grams;
  for (const auto& b : basis) grams.push_back(gram_matrix(A, b));
  auto gram_of = [&](const Vec& c) {
    Matrix G(d, d);
    for (std::size_t k = 0; k < m; ++k) {
      if (!c[k].code) continue;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) G(i, j) = F.add(G(i, j), F.mul(c[k], grams[k](i, j)));
    }
    return G;
  };
  const double space = std::pow(static_cast<double>(F.order()), static_cast<double>(m));
  if (space <= kExhaustiveLimit) {
    out.exhaustive = true;
    const std::size_t q = F.order(), total = static_cast<std::size_t>(space);
    for (std::size_t code = 1; code < total; ++code) {
      Vec c(m);
      std::size_t rest = code;
      for (std::size_t k = 0; k < m; ++k) {
        c[k] = F.element(static_cast<unsigned>(rest % q));
        rest /= q;
      }
      // one representative per projective point: leading coefficient 1
      std::size_t lead = 0;
      while (!c[lead].code) ++lead;
      if (c[lead] != F.one()) continue;
      ++out.trials;
      if (rank(F, gram_of(c)) == d) {
        out.found = combine(F, basis, c, d);
        return out;
      }
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  Vec c = random_vec(F, m, rng);
  std::size_t best = rank(F, gram_of(c));
  for (std::size_t t = 0; t < kRandomTrials; ++t) {
    ++out.trials;
    if (best == d) {
      out.found = combine(F, basis, c, d);
      return out;
    }
    Vec step = random_vec(F, m, rng);
    Scalar s = F.element(1 + static_cast<unsigned>(rng() % (F.order() - 1)));
    Vec next = c;
    axpy(F, next, s, step);
    std::size_t r = rank(F, gram_of(next));
    if (r >= best) {
      best = r;
      c = next;
    }
  }
  return out;
}

}  // namespace

SymmetricSearch symmetric_form_search(const Algebra& A, std::uint64_t seed) {
  const Field& F = A.field();
  const std::size_t d = A.dim();
  Subspace comm(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) comm.insert(F, A.commutator(A.basis(i), A.basis(j)));
  std::vector<Vec> W;
  if (comm.dim() == 0) {
    for (std::size_t i = 0; i < d; ++i) W.push_back(unit_vec(d, i));
  } else {
    W = nullspace(F, Matrix::from_rows(comm.basis(), d));
  }
  SymmetricSearch out;
  out.solution_dim = W.size();

  // a with λ(A a) = 0 for every symmetric λ
  std::vector<Matrix> grams;
  for (const auto& w : W) grams.push_back(gram_matrix(A, w));
  auto common = W.empty() ? std::vector<Vec>{unit_vec(d, 0)} : nullspace(F, stacked(grams));
  if (!common.empty()) {
    out.obstruction = common[0];
    out.exhaustive = true;
    return out;
  }
  auto s = search_forms(A, W, seed);
  out.exhaustive = s.exhaustive;
  out.trials = s.trials;
  if (s.found) {
    FrobeniusForm f;
    f.lambda = *s.found;
    f.gram = gram_matrix(A, f.lambda);
    f.nakayama = Matrix::identity(F, d);
    out.form = f;
  } else if (!s.exhaustive) {
    throw Error(ErrorCode::SearchInconclusive,
                "no nondegenerate symmetric form in " + std::to_string(s.trials) + " seeded trials");
  }
  return out;
}

FrobeniusForm frobenius_nakayama(const Algebra& A, std::uint64_t seed, const std::optional<Vec>& given) {
  const Field& F = A.field();
  const std::size_t d = A.dim();
  FrobeniusForm f;
  std::optional<Vec> lambda;
  if (given) {
    if (rank(F, gram_matrix(A, *given)) == d) lambda = given;
  } else {
    Vec top = unit_vec(d, d - 1);
    if (rank(F, gram_matrix(A, top)) == d) {
      lambda = top;
    } else {
      std::vector<Vec> all;
      for (std::size_t i = 0; i < d; ++i) all.push_back(unit_vec(d, i));
      lambda = search_forms(A, all, seed).found;
    }
  }
  if (!lambda) throw Error(ErrorCode::NoFrobeniusFormFound, "no nondegenerate form found");
  f.lambda = *lambda;
  f.gram = gram_matrix(A, f.lambda);
  // λ(b_j σ(b_i)) = (G σ)_{ji} = G_{ij}: σ = G^{-1} G^T
  auto inv = inverse(F, f.gram);
  Matrix sigma = mat_mul(F, *inv, f.gram.transposed());
  std::vector<Vec> img;
  for (std::size_t i = 0; i < d; ++i) img.push_back(sigma.column(i));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec lhs(d);
      for (const auto& t : A.basis_product(i, j)) axpy(F, lhs, t.coeff, img[t.index]);
      if (lhs != A.multiply(img[i], img[j])) {
        throw Error(ErrorCode::CertificateFailure, "Nakayama map is not multiplicative");
      }
    }
  f.nakayama = sigma;
  return f;
}

std::optional<Vec> inner_twist(const Algebra& A, const Matrix& sigma, const Matrix& tau, std::uint64_t seed) {
  const Field& F = A.field();
  const std::size_t d = A.dim();
  // u σ(g) - τ(g) u = 0
  std::vector<Matrix> eqs;
  for (const auto& g : A.generators()) {
    Vec sg = mat_vec(F, sigma, g.value), tg = mat_vec(F, tau, g.value);
    eqs.push_back(mat_sub(F, A.right_matrix(sg), A.left_matrix(tg)));
  }
  auto sols = nullspace(F, stacked(eqs));
  for (const auto& u : sols)
    if (is_unit(A, u)) return u;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 64 && !sols.empty(); ++t) {
    Vec u = combine(F, sols, random_vec(F, sols.size(), rng), d);
    if (is_unit(A, u)) return u;
  }
  return std::nullopt;
}

TraceCheck restricted_nakayama_check(const Algebra& A, const FrobeniusForm& form) {
  const Field& F = A.field();
  const std::size_t d = A.dim();
  const auto& gens = A.generators();
  std::vector<Vec> gv;
  for (const auto& g : gens) gv.push_back(g.value);
  Matrix G = Matrix::from_columns(gv, d);
  TraceCheck out;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    Scalar tr = F.zero();
    for (std::size_t b = 0; b < gens.size(); ++b) {
      auto sol = linsolve(F, G, Matrix::from_columns({A.commutator(gv[a], gv[b])}, d));
      if (!sol.particular) throw Error(ErrorCode::CertificateFailure, "generators do not span a Lie algebra");
      tr = F.add(tr, (*sol.particular)(b, 0));
    }
    out.traces.push_back(tr);
  }
  const Matrix& sigma = *form.nakayama;
  out.exact = true;
  for (std::size_t a = 0; a < gens.size(); ++a)
    if (mat_vec(F, sigma, gv[a]) != added(F, gv[a], A.scalar(F.neg(out.traces[a])))) out.exact = false;
  unsigned p = F.characteristic();
  out.order_p = mat_pow(F, sigma, p) == Matrix::identity(F, d);
  out.ok = out.exact && out.order_p;
  return out;
}

std::vector<Vec> left_integrals_dual(const HopfData& h) {
  const Field& F = h.algebra.field();
  const std::size_t d = h.algebra.dim();
  // sum_j c_ij λ_j - λ_b [i = 0] = 0 for Δ(b) = sum c_ij b_i ⊗ b_j
  std::vector<Vec> rows;
  for (std::size_t b = 0; b < d; ++b) {
    std::vector<Vec> eq(d, Vec(d));
    for (const auto& [idx, c] : nonzeros(h.delta[b])) eq[idx / d][idx % d] = F.add(eq[idx / d][idx % d], c);
    eq[0][b] = F.sub(eq[0][b], F.one());
    for (auto& r : eq)
      if (!is_zero(r)) rows.push_back(std::move(r));
  }
  return nullspace(F, Matrix::from_rows(rows, d));
}

WindingCheck winding_nakayama_check(const HopfData& h, std::uint64_t seed) {
  const Algebra& A = h.algebra;
  const Field& F = A.field();
  const std::size_t d = A.dim();
  WindingCheck out;
  auto lam = left_integrals_dual(h);
  if (lam.size() != 1) {
    throw Error(ErrorCode::IntegralDimensionNot1, "left integrals of the dual have dimension " + std::to_string(lam.size()));
  }
  IntegralSpaces I = integral_spaces(A);
  Matrix xi(d, d);
  for (std::size_t b = 0; b < d; ++b)
    for (const auto& [idx, c] : nonzeros(h.delta[b])) xi(idx % d, b) = F.add(xi(idx % d, b), F.mul(c, I.alpha[idx / d]));
  Matrix s2 = mat_mul(F, h.antipode, h.antipode);
  out.nu = mat_mul(F, s2, xi);
  Matrix id = Matrix::identity(F, d);
  out.xi_identity = xi == id;
  out.s2_identity = s2 == id;

  FrobeniusForm canon;
  canon.lambda = lam[0];
  canon.gram = gram_matrix(A, lam[0]);
  // λ(ab) = λ(ν(b) a), so σ = ν^{-1} in the convention λ(ab) = λ(b σ(a))
  auto nu_inv = inverse(F, out.nu);
  if (!nu_inv) return out;
  out.direct = rank(F, canon.gram) == d && canon.gram.transposed() == mat_mul(F, canon.gram, *nu_inv);
  FrobeniusForm searched = frobenius_nakayama(A, seed);
  out.inner_equivalent = inner_twist(A, *searched.nakayama, *nu_inv, seed).has_value();
  out.ok = out.direct && out.inner_equivalent;
  return out;
}

bool expected_symmetric(Label label, const Params& params, const Field& F) {
  switch (label) {
    case Label::B1:
    case Label::B2:
    case Label::B3:
    case Label::C11:
    case Label::C12:
    case Label::C13:
    case Label::C14:
      return false;
    case Label::C16: {
      Scalar l = *params.lambda;
      return F.mul(l, l) == F.neg(F.one());
    }
    default:
      return true;
  }
}

HopfReport hopf_report(Label label, unsigned p, const Params& params, std::uint64_t seed, HopfVariant variant) {
  HopfData h = comultiplication_build(label, p, params, variant);
  const Field& F = h.algebra.field();
  HopfReport r;
  r.label = label;
  r.p = p;
  r.axioms = hopf_axiom_check(h);
  r.primitive_dim = primitive_space(h).size();
  r.antipode_sq_order = antipode_order(h, p * p);
  IntegralSpaces I = integral_spaces(h.algebra);
  r.unimodular = I.unimodular;
  r.left_integral_dim = I.left.size();
  r.right_integral_dim = I.right.size();
  try {
    auto s = symmetric_form_search(h.algebra, seed);
    r.symmetric = s.form.has_value();
    r.symmetric_method = s.obstruction ? "obstruction: A a ⊂ [A,A]" : s.exhaustive ? "exhaustive" : "seeded search";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SearchInconclusive) throw;
    r.symmetric_method = e.what();
  }
  auto w = winding_nakayama_check(h, seed);
  r.winding_ok = w.ok;
  r.nakayama_order = automorphism_order(F, w.nu, p * p);
  return r;
}

}  // namespace p3
