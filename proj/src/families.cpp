#include "p3/families.hpp"

#include <sstream>

namespace p3 {

namespace {

constexpr int X = 0, Y = 1, Z = 2;

const char* kLabelNames[] = {"A1", "A2", "A3", "A4", "A5", "B1", "B2", "B3", "C1", "C2", "C3", "C4",
                             "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "C13", "C14", "C15", "C16"};

std::vector<int> rep(int g, unsigned n) { return std::vector<int>(n, g); }

std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

const std::vector<Label>& all_labels() {
  static const std::vector<Label> labels = [] {
    std::vector<Label> v;
    for (int i = 0; i <= static_cast<int>(Label::C16); ++i) v.push_back(static_cast<Label>(i));
    return v;
  }();
  return labels;
}

std::string to_string(Label l) { return kLabelNames[static_cast<int>(l)]; }

Label parse_label(const std::string& s) {
  for (Label l : all_labels()) {
    if (to_string(l) == s) return l;
  }
  throw Error(ErrorCode::ParseError, "unknown family label '" + s + "'");
}

bool label_supports_prime(Label label, unsigned p) {
  if (label == Label::C6 || label == Label::C15) return p > 2;
  return true;
}

std::vector<Scalar> omega_coeffs(const Field& F, unsigned p) {
  std::vector<Scalar> c(p, F.zero());
  unsigned long long binom = 1;
  for (unsigned i = 1; i < p; ++i) {
    binom = binom * (p - i + 1) / i;
    c[i] = F.from_int(static_cast<long long>((binom / p) % p));
  }
  return c;
}

std::vector<Scalar> b2_f_coeffs(const Field& F, unsigned p) {
  std::vector<Scalar> c(p, F.zero());
  for (unsigned i = 1; i < p; ++i) {
    Scalar v = F.inv(F.from_int(p - i));
    c[i] = (i % 2 == 1) ? v : F.neg(v);
  }
  return c;
}

// ---------------------------------------------------------------------------

std::vector<NcPoly> Presentation::relations() const {
  const Field& F = *field;
  std::vector<NcPoly> out;
  const int n = static_cast<int>(ngens());
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      NcPoly r = NcPoly::word({j, i});
      r.add(comm[j][i], F, F.neg(F.one()));
      out.push_back(r);
    }
  for (int i = 0; i < n; ++i) {
    NcPoly r = NcPoly::word(rep(i, bounds[i]));
    r.add(power[i], F, F.neg(F.one()));
    out.push_back(r);
  }
  return out;
}

std::vector<std::string> Presentation::relation_strings() const {
  const Field& F = *field;
  std::vector<std::string> out;
  const int n = static_cast<int>(ngens());
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      out.push_back(NcPoly::word({j, i}).format(F, names) + " = " + comm[j][i].format(F, names));
  for (int i = 0; i < n; ++i) out.push_back(NcPoly::word(rep(i, bounds[i])).format(F, names) + " = " + power[i].format(F, names));
  return out;
}

Presentation commutative_presentation(FieldPtr F, unsigned p, std::vector<std::string> names) {
  Presentation P;
  P.field = std::move(F);
  P.p = p;
  P.names = std::move(names);
  const std::size_t n = P.names.size();
  P.bounds.assign(n, p);
  P.comm.assign(n, std::vector<NcPoly>(n));
  P.power.assign(n, NcPoly{});
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) P.comm[j][i] = NcPoly::word({static_cast<int>(i), static_cast<int>(j)});
  return P;
}

void set_commutation(Presentation& P, int j, int i, const NcPoly& extra) {
  NcPoly r = NcPoly::word({i, j});
  r.add(extra, *P.field, P.field->one());
  P.comm[j][i] = r;
}

FieldPtr family_field(Label label, unsigned p, const Params& params) {
  if (label == Label::C16 && params.lambda && params.lambda->code >= p) return Field::make(p, 2);
  return Field::make(p, 1);
}

Params default_params(Label label, unsigned p, const FieldPtr& F) {
  Params params;
  if (label == Label::A5 && p > 2) params.beta = F->one();
  if (label == Label::C16) {
    params.lambda = F->one();
    params.delta = F->one();
  }
  return params;
}

FamilyInstance presentation_catalog(Label label, unsigned p, const Params& given, FieldPtr F) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (!label_supports_prime(label, p)) {
    throw Error(ErrorCode::IncompatiblePrime, to_string(label) + " exists only for p > 2");
  }
  if (!F) F = family_field(label, p, given);
  const Field& K = *F;
  const Scalar one = K.one();
  const Scalar m1 = K.neg(one);

  FamilyInstance inst;
  inst.label = label;
  inst.p = p;
  Params params = given;
  Params defaults = default_params(label, p, F);
  if (!params.beta) params.beta = defaults.beta;
  if (!params.lambda) params.lambda = defaults.lambda;

  Presentation P = commutative_presentation(F, p);
  P.label = label;

  auto power_to = [&](int g, NcPoly rhs) { P.power[g] = std::move(rhs); };
  auto gen = [&](int g) { return NcPoly::word({g}); };
  auto b1_commutation = [&]() { set_commutation(P, Y, X, NcPoly::word({Y}, m1)); };  // yx = xy - y
  auto c5_commutation = [&]() { set_commutation(P, Y, X, NcPoly::word({Z}, m1)); };  // yx = xy - z

  HopfSlots& H = inst.hopf;
  H.available = true;
  const std::string a1_Z = "ω(x)[y⊗1 + 1⊗y + ω(x)]^{p-1} + ω(y)";

  switch (label) {
    case Label::A1:
    case Label::C1:
      power_to(X, gen(X));
      power_to(Y, gen(Y));
      power_to(Z, gen(Z));
      break;
    case Label::A2:
      power_to(Y, gen(X));
      power_to(Z, gen(Y));
      break;
    case Label::A3:
    case Label::C4:
      break;
    case Label::A4:
      power_to(Z, gen(X));
      break;
    case Label::A5:
      set_commutation(P, Z, Y, NcPoly::word({X}, m1));  // zy = yz - x
      if (p == 2) {
        power_to(Z, NcPoly::word({X, Y}, m1));  // z^2 = -xy
      } else {
        NcPoly rhs = NcPoly::word(cat(rep(X, p - 1), {Y}), m1);
        rhs.add({X}, *params.beta);
        power_to(Z, rhs);
      }
      break;
    case Label::B1:
    case Label::C11:
      b1_commutation();
      power_to(X, gen(X));
      break;
    case Label::B2: {
      b1_commutation();
      // zy = yz - y f(x)
      auto f = b2_f_coeffs(K, p);
      NcPoly extra;
      for (unsigned i = 1; i < p; ++i) extra.add(cat({Y}, rep(X, i)), K.neg(f[i]));
      set_commutation(P, Z, Y, extra);
      power_to(X, gen(X));
      power_to(Z, gen(Z));
      break;
    }
    case Label::B3:
      b1_commutation();
      set_commutation(P, Z, X, NcPoly::word({Z}, m1));     // zx = xz - z
      set_commutation(P, Z, Y, NcPoly::word({Y, Y}, m1));  // zy = yz - y^2
      power_to(X, gen(X));
      break;
    case Label::C2:
      power_to(X, gen(Y));
      power_to(Y, gen(Z));
      break;
    case Label::C3:
      power_to(Y, gen(Z));
      break;
    case Label::C5:
      c5_commutation();
      break;
    case Label::C6:
      c5_commutation();
      power_to(X, gen(Z));
      break;
    case Label::C7:
      power_to(Z, gen(Z));
      break;
    case Label::C8:
      power_to(X, gen(Y));
      power_to(Z, gen(Z));
      break;
    case Label::C9:
      power_to(Y, gen(Y));
      power_to(Z, gen(Z));
      break;
    case Label::C10:
      c5_commutation();
      power_to(Z, gen(Z));
      break;
    case Label::C12:
      b1_commutation();
      power_to(X, gen(X));
      power_to(Y, gen(Z));
      break;
    case Label::C13:
      b1_commutation();
      power_to(X, gen(X));
      power_to(Z, gen(Z));
      break;
    case Label::C14:
      b1_commutation();
      power_to(X, gen(X));
      power_to(Y, gen(Z));
      power_to(Z, gen(Z));
      break;
    case Label::C15:
      c5_commutation();
      set_commutation(P, Z, X, NcPoly::word({X}, m1));   // zx = xz - x
      set_commutation(P, Z, Y, NcPoly::word({Y}, one));  // zy = yz + y
      power_to(Z, gen(Z));
      break;
    case Label::C16: {
      Scalar lambda = *params.lambda;
      if (K.is_zero(lambda)) throw Error(ErrorCode::InvalidParams, "C16 needs lambda != 0");
      Scalar delta = K.pow(lambda, p - 1);
      if (delta != one && delta != m1) {
        throw Error(ErrorCode::InvalidParams, "C16 needs lambda^(p-1) = ±1, got " + K.to_string(delta));
      }
      if (params.delta && *params.delta != delta) {
        throw Error(ErrorCode::InvalidParams,
                    "C16 delta must equal lambda^(p-1) = " + K.to_string(delta) + ", got " + K.to_string(*params.delta));
      }
      params.delta = delta;
      set_commutation(P, Z, X, NcPoly::word({X}, K.neg(lambda)));          // zx = xz - λx
      set_commutation(P, Z, Y, NcPoly::word({Y}, K.neg(K.inv(lambda))));  // zy = yz - λ^{-1}y
      power_to(Z, NcPoly::word({Z}, delta));
      break;
    }
  }

  switch (label_type(label)) {
    case 'A':
      H.Y = "ω(x)";
      H.Z = label == Label::A5 ? "ω(x)(y⊗1 + 1⊗y)^{p-1} + ω(y)" : a1_Z;
      break;
    case 'B':
      H.Y = "0";
      if (label == Label::B1) H.Z = "ω(y)";
      if (label == Label::B2) H.Z = "ω(x)";
      if (label == Label::B3) {
        if (p == 2) {
          H.available = false;
          H.reason = "B3 comultiplication is given for p > 2 only";
        }
        H.Z = "-2x⊗y";
      }
      break;
    default:
      H.Y = "0";
      H.Z = "0";
  }

  P.params = params;
  inst.params = params;
  inst.presentation = std::move(P);
  return inst;
}

// ---------------------------------------------------------------------------

Rewriter::Rewriter(const Presentation& pres, std::size_t step_cap) : pres_(pres), cap_(step_cap) {
  const std::size_t n = pres_.ngens();
  if (pres_.bounds.size() != n || pres_.power.size() != n || pres_.comm.size() != n) {
    throw Error(ErrorCode::ShapeMismatch, "presentation rule tables do not match the generator count");
  }
  stride_.assign(n, 1);
  for (std::size_t i = n; i-- > 0;) {
    stride_[i] = dim_;
    dim_ *= pres_.bounds[i];
  }
  cache_.assign(n, std::vector<std::optional<SparseVec>>(dim_));
  busy_.assign(n, std::vector<char>(dim_, 0));
}

std::size_t Rewriter::monomial_index(const std::vector<unsigned>& exps) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) idx += exps[i] * stride_[i];
  return idx;
}

std::vector<unsigned> Rewriter::exponents(std::size_t index) const {
  std::vector<unsigned> e(pres_.ngens());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<unsigned>((index / stride_[i]) % pres_.bounds[i]);
  return e;
}

std::string Rewriter::monomial_label(std::size_t index) const {
  auto e = exponents(index);
  bool short_names = true;
  for (const auto& n : pres_.names) short_names = short_names && n.size() == 1;
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!out.empty() && !short_names) out += "*";
    out += pres_.names[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<int> Rewriter::monomial_word(std::size_t index) const {
  auto e = exponents(index);
  std::vector<int> w;
  for (std::size_t i = 0; i < e.size(); ++i) w.insert(w.end(), e[i], static_cast<int>(i));
  return w;
}

void Rewriter::count_step() {
  if (++steps_ > cap_) {
    throw Error(ErrorCode::RewriteCapExceeded, "rewriting exceeded " + std::to_string(cap_) + " steps");
  }
}

const SparseVec& Rewriter::act(int g, std::size_t m) {
  auto& slot = cache_[g][m];
  if (slot) return *slot;
  if (busy_[g][m]) {
    throw Error(ErrorCode::RewriteCapExceeded,
                "rewriting does not terminate at " + pres_.names[g] + "*" + monomial_label(m));
  }
  busy_[g][m] = 1;
  count_step();
  auto e = exponents(m);
  std::size_t lead = e.size();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i]) {
      lead = i;
      break;
    }
  }
  SparseVec result;
  const Scalar one = pres_.field->one();
  if (lead < static_cast<std::size_t>(g)) {
    // g * g_lead ... -> comm[g][lead] * (rest)
    e[lead] -= 1;
    result = act_poly_on(pres_.comm[g][lead], SparseVec{Term{static_cast<std::uint32_t>(monomial_index(e)), one}});
  } else if (e[g] + 1 < pres_.bounds[g]) {
    e[g] += 1;
    result = SparseVec{Term{static_cast<std::uint32_t>(monomial_index(e)), one}};
  } else {
    e[g] = 0;
    result = act_poly_on(pres_.power[g], SparseVec{Term{static_cast<std::uint32_t>(monomial_index(e)), one}});
  }
  busy_[g][m] = 0;
  slot = std::move(result);
  return *slot;
}

SparseVec Rewriter::act_poly_on(const NcPoly& poly, const SparseVec& v) {
  const Field& F = *pres_.field;
  Vec acc(dim_);
  for (const auto& w : poly.terms) {
    if (!w.coeff.code) continue;
    SparseVec cur = v;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      Vec next(dim_);
      for (const auto& t : cur) {
        // copy: act() may grow caches but never invalidates other entries
        SparseVec img = act(*it, t.index);
        for (const auto& u : img) next[u.index] = F.add(next[u.index], F.mul(t.coeff, u.coeff));
      }
      cur = to_sparse(next);
    }
    for (const auto& t : cur) acc[t.index] = F.add(acc[t.index], F.mul(w.coeff, t.coeff));
  }
  return to_sparse(acc);
}

SparseVec Rewriter::normalize_word(const std::vector<int>& letters) {
  return act_poly_on(NcPoly::word(letters), SparseVec{Term{0, pres_.field->one()}});
}

SparseVec Rewriter::normalize(const NcPoly& poly) {
  return act_poly_on(poly, SparseVec{Term{0, pres_.field->one()}});
}

SparseVec Rewriter::multiply_monomials(std::size_t a, std::size_t b) {
  return act_poly_on(NcPoly::word(monomial_word(a)), SparseVec{Term{static_cast<std::uint32_t>(b), pres_.field->one()}});
}

Algebra build_from_presentation(const Presentation& pres, const AssocPolicy& policy) {
  Rewriter rw(pres);
  const std::size_t d = rw.dim();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back(rw.monomial_label(i));
  std::vector<SparseVec> products(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) products[i * d + j] = rw.multiply_monomials(i, j);
  std::vector<NamedElement> gens;
  for (std::size_t g = 0; g < pres.ngens(); ++g) {
    gens.push_back({pres.names[g], to_dense(rw.normalize_word({static_cast<int>(g)}), d)});
  }
  Algebra A(pres.field, std::move(labels), std::move(products), unit_vec(d, 0), std::move(gens));

  const std::string who = pres.label ? to_string(*pres.label) + " at p=" + std::to_string(pres.p) : "presentation";
  if (!unit_is_identity(A)) throw Error(ErrorCode::CertificateFailure, who + ": unit is not an identity");
  if (auto bad = associativity_failure(A, policy)) {
    throw Error(ErrorCode::CertificateFailure, who + ": associativity fails at (" + A.labels()[bad->i] + ", " +
                                                   A.labels()[bad->j] + ", " + A.labels()[bad->k] + ")");
  }
  std::vector<Vec> images;
  for (const auto& g : A.generators()) images.push_back(g.value);
  auto rels = pres.relations();
  auto strs = pres.relation_strings();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    if (!is_zero(evaluate(A, rels[r], images))) {
      throw Error(ErrorCode::CertificateFailure, who + ": relation " + strs[r] + " does not vanish");
    }
  }
  return A;
}

Algebra build_family_algebra(const FamilyInstance& inst) {
  AssocPolicy policy;
  Algebra A = build_from_presentation(inst.presentation, policy);
  const std::size_t expect = static_cast<std::size_t>(inst.p) * inst.p * inst.p;
  if (A.dim() != expect) {
    throw Error(ErrorCode::CertificateFailure, to_string(inst.label) + ": dimension " + std::to_string(A.dim()));
  }
  return A;
}

Algebra build_family_algebra(Label label, unsigned p, const Params& params) {
  return build_family_algebra(presentation_catalog(label, p, params));
}

// ---------------------------------------------------------------------------

RestrictedLie make_lie(FieldPtr F, unsigned p) {
  RestrictedLie L;
  L.field = std::move(F);
  L.p = p;
  for (auto& row : L.bracket)
    for (auto& v : row) v = Vec(3);
  for (auto& v : L.p_op) v = Vec(3);
  return L;
}

void set_bracket(RestrictedLie& L, int i, int j, const Vec& v) {
  L.bracket[i][j] = v;
  L.bracket[j][i] = scaled(*L.field, L.field->neg(L.field->one()), v);
}

namespace {

Vec lie_bracket(const RestrictedLie& L, const Vec& u, const Vec& v) {
  const Field& F = *L.field;
  Vec out(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Scalar c = F.mul(u[i], v[j]);
      if (c.code) axpy(F, out, c, L.bracket[i][j]);
    }
  return out;
}

}  // namespace

Matrix ad_matrix(const RestrictedLie& L, const Vec& v) {
  Matrix m(3, 3);
  for (int j = 0; j < 3; ++j) {
    Vec col = lie_bracket(L, v, unit_vec(3, j));
    for (int r = 0; r < 3; ++r) m(r, j) = col[r];
  }
  return m;
}

LieCheck verify_p_operation(const RestrictedLie& L) {
  const Field& F = *L.field;
  LieCheck res;
  for (int i = 0; i < 3; ++i) {
    if (!is_zero(L.bracket[i][i])) {
      res.diagnostic = "[" + L.names[i] + "," + L.names[i] + "] != 0";
      return res;
    }
    for (int j = 0; j < 3; ++j) {
      if (added(F, L.bracket[i][j], L.bracket[j][i]) != Vec(3)) {
        res.diagnostic = "bracket is not antisymmetric on " + L.names[i] + ", " + L.names[j];
        return res;
      }
    }
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Vec a = unit_vec(3, i), b = unit_vec(3, j), c = unit_vec(3, k);
        Vec s = lie_bracket(L, a, lie_bracket(L, b, c));
        s = added(F, s, lie_bracket(L, b, lie_bracket(L, c, a)));
        s = added(F, s, lie_bracket(L, c, lie_bracket(L, a, b)));
        if (!is_zero(s)) {
          res.diagnostic = "Jacobi identity fails on " + L.names[i] + ", " + L.names[j] + ", " + L.names[k];
          return res;
        }
      }
  for (int i = 0; i < 3; ++i) {
    Matrix lhs = mat_pow(F, ad_matrix(L, unit_vec(3, i)), L.p);
    Matrix rhs = ad_matrix(L, L.p_op[i]);
    if (!(lhs == rhs)) {
      res.diagnostic = "(ad " + L.names[i] + ")^p != ad(" + L.names[i] + "^[p])";
      return res;
    }
  }
  res.ok = true;
  return res;
}

Presentation enveloping_presentation(const RestrictedLie& L) {
  const Field& F = *L.field;
  Presentation P = commutative_presentation(L.field, L.p, {L.names[0], L.names[1], L.names[2]});
  for (int j = 1; j < 3; ++j)
    for (int i = 0; i < j; ++i) {
      // x_j x_i = x_i x_j - [x_i, x_j]
      NcPoly extra;
      for (int k = 0; k < 3; ++k) {
        if (L.bracket[i][j][k].code) extra.add({k}, F.neg(L.bracket[i][j][k]));
      }
      set_commutation(P, j, i, extra);
    }
  for (int i = 0; i < 3; ++i) {
    NcPoly rhs;
    for (int k = 0; k < 3; ++k) {
      if (L.p_op[i][k].code) rhs.add({k}, L.p_op[i][k]);
    }
    P.power[i] = rhs;
  }
  return P;
}

Algebra restricted_enveloping(const RestrictedLie& L) {
  auto check = verify_p_operation(L);
  if (!check.ok) throw Error(ErrorCode::CertificateFailure, "restricted Lie datum invalid: " + check.diagnostic);
  return build_from_presentation(enveloping_presentation(L));
}

RestrictedLie lie_c5(FieldPtr F, unsigned p) {
  RestrictedLie L = make_lie(F, p);
  set_bracket(L, 0, 1, unit_vec(3, 2));
  return L;
}

RestrictedLie lie_c6(FieldPtr F, unsigned p) {
  RestrictedLie L = lie_c5(F, p);
  L.p_op[0] = unit_vec(3, 2);
  return L;
}

RestrictedLie lie_sl2_prime(FieldPtr F, unsigned p) {
  RestrictedLie L = make_lie(F, p);
  L.names = {"e", "f", "h'"};
  const Field& K = *L.field;
  // [e,f] = h = -2h', [e,h'] = e, [f,h'] = -f
  set_bracket(L, 0, 1, scaled(K, K.from_int(-2), unit_vec(3, 2)));
  set_bracket(L, 0, 2, unit_vec(3, 0));
  set_bracket(L, 1, 2, scaled(K, K.neg(K.one()), unit_vec(3, 1)));
  L.p_op[2] = unit_vec(3, 2);
  return L;
}

Presentation lambda_presentation(FieldPtr F, unsigned p, bool twisted) {
  Presentation P = commutative_presentation(F, p, {"y", "z"});
  if (twisted) set_commutation(P, 1, 0, NcPoly::word({0, 0}, P.field->neg(P.field->one())));  // zy = yz - y^2
  return P;
}

}  // namespace p3
