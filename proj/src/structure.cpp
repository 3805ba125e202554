#include "p3/structure.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>

namespace p3 {

namespace {

std::vector<Scalar> prime_roots(const Field& F, unsigned p) {
  std::vector<Scalar> r;
  for (unsigned i = 0; i < p; ++i) r.push_back(F.from_int(i));
  return r;
}

// e * prod_{s != r} (b - s) / (r - s) over all field elements s
Vec lagrange_piece(const Algebra& A, const Vec& e, const Vec& b, Scalar r) {
  const Field& F = A.field();
  Vec acc = e;
  for (unsigned c = 0; c < F.order(); ++c) {
    Scalar s = F.element(c);
    if (s == r) continue;
    Vec factor = subtracted(F, b, A.scalar(s));
    acc = A.multiply(acc, scaled(F, F.inv(F.sub(r, s)), factor));
    if (is_zero(acc)) break;
  }
  return acc;
}

// Span of { l v r : v in basis(S) }.
Subspace sandwich(const Algebra& A, const Vec& l, const Subspace& S, const Vec& r) {
  Subspace out(A.dim());
  for (const auto& v : S.basis()) out.insert(A.field(), A.multiply(A.multiply(l, v), r));
  return out;
}

Subspace whole_space(const Algebra& A) {
  Subspace S(A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) S.insert(A.field(), A.basis(i));
  return S;
}

std::optional<unsigned> integer_sqrt(std::size_t d) {
  for (unsigned n = 1; n * n <= d; ++n)
    if (n * n == d) return n;
  return std::nullopt;
}

bool is_power_of(std::size_t v, unsigned p) {
  if (v == 0) return false;
  while (v % p == 0) v /= p;
  return v == 1;
}

}  // namespace

IdempotentSet split_idempotents(const Algebra& A, const Vec& u, const std::vector<Scalar>& roots) {
  const Field& F = A.field();
  Vec poly = A.unit();
  for (Scalar r : roots) poly = A.multiply(poly, subtracted(F, u, A.scalar(r)));
  if (!is_zero(poly)) {
    throw Error(ErrorCode::PolynomialNotSatisfied, "element does not satisfy the split polynomial with the given roots");
  }
  IdempotentSet out;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    Vec e = A.unit();
    for (std::size_t l = 0; l < roots.size(); ++l) {
      if (l == k) continue;
      Scalar denom = F.inv(F.sub(roots[k], roots[l]));
      e = A.multiply(e, scaled(F, denom, subtracted(F, u, A.scalar(roots[l]))));
    }
    out.elems.push_back(e);
    out.tags.push_back({static_cast<unsigned>(k)});
  }
  out.complete = true;
  out.orthogonal = check_idempotent_set(A, out);
  return out;
}

IdempotentSet refine(const Algebra& A, const IdempotentSet& a, const IdempotentSet& b) {
  IdempotentSet out;
  for (std::size_t i = 0; i < a.elems.size(); ++i)
    for (std::size_t j = 0; j < b.elems.size(); ++j) {
      Vec e = A.multiply(a.elems[i], b.elems[j]);
      if (is_zero(e)) continue;
      out.elems.push_back(e);
      auto tag = a.tags[i];
      tag.insert(tag.end(), b.tags[j].begin(), b.tags[j].end());
      out.tags.push_back(tag);
    }
  out.complete = a.complete && b.complete;
  out.orthogonal = check_idempotent_set(A, out);
  return out;
}

bool check_idempotent_set(const Algebra& A, const IdempotentSet& s) {
  const Field& F = A.field();
  Vec total(A.dim());
  for (std::size_t i = 0; i < s.elems.size(); ++i) {
    total = added(F, total, s.elems[i]);
    for (std::size_t j = 0; j < s.elems.size(); ++j) {
      Vec prod = A.multiply(s.elems[i], s.elems[j]);
      if (i == j ? prod != s.elems[i] : !is_zero(prod)) return false;
    }
  }
  return !s.complete || total == A.unit();
}

std::vector<Vec> central_primitive_idempotents(const Algebra& A) {
  const Field& F = A.field();
  Subspace Z = center(A);
  const std::size_t m = Z.dim();
  // c -> c^q is linear on the commutative algebra Z(A); its fixed points are
  // spanned by the primitive central idempotents.
  Matrix frob(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    Vec img = A.power(Z.basis()[k], F.order());
    Vec c = Z.coords(img);
    for (std::size_t r = 0; r < m; ++r) frob(r, k) = c[r];
  }
  Matrix shifted = mat_sub(F, frob, Matrix::identity(F, m));
  std::vector<Vec> fixed;
  for (const auto& coords : nullspace(F, shifted)) {
    Vec v(A.dim());
    for (std::size_t k = 0; k < m; ++k) axpy(F, v, coords[k], Z.basis()[k]);
    fixed.push_back(v);
  }
  std::vector<Vec> idems{A.unit()};
  for (const auto& b : fixed) {
    std::vector<Vec> next;
    for (const auto& e : idems) {
      Vec eb = A.multiply(e, b);
      // already constant on this block?
      bool constant = false;
      for (unsigned c = 0; c < F.order() && !constant; ++c) {
        if (eb == scaled(F, F.element(c), e)) constant = true;
      }
      if (constant) {
        next.push_back(e);
        continue;
      }
      for (unsigned c = 0; c < F.order(); ++c) {
        Vec piece = lagrange_piece(A, e, b, F.element(c));
        if (!is_zero(piece)) next.push_back(piece);
      }
    }
    idems = std::move(next);
  }
  std::sort(idems.begin(), idems.end(), [](const Vec& a, const Vec& b) { return a > b; });
  return idems;
}

// ---------------------------------------------------------------------------

bool module_generates_full_matrix_algebra(const Field& F, const std::vector<Matrix>& mats, std::size_t n) {
  // span of all words in mats must be n^2 dimensional
  auto flatten = [n](const Matrix& m) {
    Vec v(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) v[r * n + c] = m(r, c);
    return v;
  };
  Subspace S(n * n);
  std::deque<Matrix> queue;
  Matrix I = Matrix::identity(F, n);
  S.insert(F, flatten(I));
  queue.push_back(I);
  while (!queue.empty() && !S.is_whole()) {
    Matrix w = queue.front();
    queue.pop_front();
    for (const auto& g : mats) {
      Matrix next = mat_mul(F, w, g);
      if (S.insert(F, flatten(next))) queue.push_back(next);
    }
  }
  return S.is_whole();
}

bool matrix_block_certificate(const Algebra& B, unsigned n) {
  const Field& F = B.field();
  if (B.dim() != static_cast<std::size_t>(n) * n) return false;
  if (B.is_commutative() && n > 1) return false;
  // simplicity: every basis element generates the whole block
  for (std::size_t i = 0; i < B.dim(); ++i) {
    if (!ideal_closure(B, {B.basis(i)}).is_whole()) return false;
  }
  auto left_ideal = [&](const Vec& v) {
    Subspace L(B.dim());
    for (std::size_t k = 0; k < B.dim(); ++k) L.insert(F, B.multiply_basis_left(k, v));
    return L;
  };
  // descend to a left ideal of dimension n
  Vec v = B.unit();
  Subspace L = left_ideal(v);
  bool progress = true;
  while (L.dim() > n && progress) {
    progress = false;
    for (std::size_t k = 0; k < B.dim() && !progress; ++k) {
      for (int side = 0; side < 2 && !progress; ++side) {
        Vec w = side == 0 ? B.multiply_basis_left(k, v) : B.multiply_basis_right(v, k);
        if (is_zero(w)) continue;
        Subspace Lw = left_ideal(w);
        if (Lw.dim() < L.dim()) {
          v = w;
          L = std::move(Lw);
          progress = true;
        }
      }
    }
  }
  if (L.dim() != n) return false;
  // representation on L must be injective
  std::vector<Vec> cols;
  for (std::size_t k = 0; k < B.dim(); ++k) {
    Vec flat;
    for (const auto& l : L.basis()) {
      Vec c = L.coords(B.multiply_basis_left(k, l));
      flat.insert(flat.end(), c.begin(), c.end());
    }
    cols.push_back(flat);
  }
  return rank(F, Matrix::from_columns(cols, static_cast<std::size_t>(n) * n)) == B.dim();
}

std::vector<Vec> matrix_block_idempotents(const Algebra& A) {
  std::vector<Vec> out;
  for (const auto& c : central_primitive_idempotents(A)) {
    Corner blk = corner(A, c);
    if (blk.algebra.is_commutative()) continue;
    auto n = integer_sqrt(blk.algebra.dim());
    if (n && matrix_block_certificate(blk.algebra, *n)) out.push_back(c);
  }
  return out;
}

RadicalCertificate radical_certificate(const Algebra& A, const std::vector<Vec>& claimed_gens) {
  RadicalCertificate cert;
  cert.ideal = claimed_gens.empty() ? Subspace(A.dim()) : ideal_closure(A, claimed_gens);
  auto nil = ideal_is_nilpotent(A, cert.ideal);
  if (!nil.nilpotent) throw Error(ErrorCode::NotNilpotent, "claimed radical generators span a non-nilpotent ideal");
  cert.nilpotency_index = nil.index;
  Quotient Q = quotient(A, cert.ideal);
  for (const auto& c : central_primitive_idempotents(Q.algebra)) {
    Corner blk = corner(Q.algebra, c);
    QuotientBlock qb;
    qb.dim = blk.algebra.dim();
    if (qb.dim == 1) {
      cert.blocks.push_back(qb);
      continue;
    }
    auto n = integer_sqrt(qb.dim);
    if (n && matrix_block_certificate(blk.algebra, *n)) {
      qb.matrix = true;
      cert.blocks.push_back(qb);
      continue;
    }
    throw Error(ErrorCode::QuotientNotSemisimpleEvidence,
                "quotient block of dimension " + std::to_string(qb.dim) + " is neither k nor a certified matrix block");
  }
  return cert;
}

std::vector<Subspace> radical_powers(const Algebra& A, const Subspace& rad) {
  std::vector<Subspace> powers{whole_space(A), rad};
  while (powers.back().dim() > 0) {
    Subspace next = product_space(A, powers.back(), rad);
    if (next.dim() == powers.back().dim()) throw Error(ErrorCode::NotNilpotent, "radical powers stabilise");
    powers.push_back(std::move(next));
  }
  return powers;
}

std::vector<std::size_t> radical_layer_dims(const Algebra& A, const Subspace& rad) {
  auto powers = radical_powers(A, rad);
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k + 1 < powers.size(); ++k) dims.push_back(powers[k].dim() - powers[k + 1].dim());
  return dims;
}

// ---------------------------------------------------------------------------

IdempotentSet primitive_idempotents_for(const Algebra& A, Label label, const Params& params, unsigned p,
                                        const Subspace& rad) {
  const Field& F = A.field();
  std::vector<std::pair<std::string, std::vector<Scalar>>> data;
  auto Zp = prime_roots(F, p);
  switch (label) {
    case Label::A1:
    case Label::C1:
      data = {{"x", Zp}, {"y", Zp}, {"z", Zp}};
      break;
    case Label::B1:
    case Label::B3:
    case Label::C11:
    case Label::C12:
      data = {{"x", Zp}};
      break;
    case Label::B2:
    case Label::C13:
    case Label::C14:
      data = {{"x", Zp}, {"z", Zp}};
      break;
    case Label::C7:
    case Label::C8:
    case Label::C10:
      data = {{"z", Zp}};
      break;
    case Label::C9:
      data = {{"y", Zp}, {"z", Zp}};
      break;
    case Label::C16: {
      std::vector<Scalar> roots;
      for (unsigned i = 0; i < p; ++i) roots.push_back(F.mul(F.from_int(i), *params.lambda));
      data = {{"z", roots}};
      break;
    }
    case Label::C15:
      throw Error(ErrorCode::PrerequisitesUnavailable, "no separable elements are catalogued for C15");
    default:
      break;
  }
  IdempotentSet set;
  set.elems = {A.unit()};
  set.tags = {{}};
  set.complete = true;
  set.orthogonal = true;
  for (const auto& [name, roots] : data) set = refine(A, set, split_idempotents(A, A.generator(name), roots));

  auto blocks = matrix_block_idempotents(A);
  IdempotentSet basic;
  basic.complete = blocks.empty();
  basic.orthogonal = true;
  for (std::size_t k = 0; k < set.elems.size(); ++k) {
    bool in_matrix = false;
    for (const auto& c : blocks) in_matrix = in_matrix || A.multiply(set.elems[k], c) == set.elems[k];
    if (in_matrix) continue;
    basic.elems.push_back(set.elems[k]);
    basic.tags.push_back(set.tags[k]);
  }
  for (const auto& e : basic.elems) {
    Subspace whole_corner = sandwich(A, e, whole_space(A), e);
    Subspace rad_corner = sandwich(A, e, rad, e);
    if (whole_corner.dim() != rad_corner.dim() + 1) {
      throw Error(ErrorCode::IdempotentsNotPrimitive, "corner of an idempotent is not local");
    }
  }
  return basic;
}

namespace {

std::string vertex_name(const std::vector<unsigned>& tag) {
  std::string s = "v";
  for (std::size_t k = 0; k < tag.size(); ++k) s += (k ? "_" : "") + std::to_string(tag[k]);
  if (tag.empty()) s += "0";
  return s;
}

}  // namespace

QuiverPresentation quiver_extract(const Algebra& A, const IdempotentSet& idems, const Subspace& rad) {
  const Field& F = A.field();
  if (!check_idempotent_set(A, idems)) {
    throw Error(ErrorCode::IdempotentsNotPrimitive, "idempotents are not orthogonal");
  }
  // vertices in tag order
  std::vector<std::size_t> order(idems.elems.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return idems.tags[a] < idems.tags[b]; });
  QuiverPresentation Q;
  std::vector<Vec> es;
  for (auto k : order) {
    Q.vertices.push_back(vertex_name(idems.tags[k]));
    es.push_back(idems.elems[k]);
  }
  Subspace rad2 = product_space(A, rad, rad);
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = 0; j < es.size(); ++j) {
      Subspace top = sandwich(A, es[j], rad, es[i]);
      Subspace low = sandwich(A, es[j], rad2, es[i]);
      std::size_t mult = top.dim() - low.dim();
      if (mult == 0) continue;
      Subspace chosen = low;
      std::size_t found = 0;
      for (const auto& g : A.generators()) {
        if (found == mult) break;
        Vec c = A.multiply(A.multiply(es[j], g.value), es[i]);
        if (!top.contains(F, c) || chosen.contains(F, c)) continue;
        chosen.insert(F, c);
        Q.arrows.push_back(Arrow{i, j, g.name, c});
        ++found;
      }
      for (const auto& b : top.basis()) {
        if (found == mult) break;
        if (chosen.contains(F, b)) continue;
        chosen.insert(F, b);
        Q.arrows.push_back(Arrow{i, j, "a", b});
        ++found;
      }
    }
  }
  std::stable_sort(Q.arrows.begin(), Q.arrows.end(),
                   [](const Arrow& a, const Arrow& b) { return a.source < b.source; });
  return Q;
}

std::string quiver_to_dot(const QuiverPresentation& Q, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  os << "  rankdir=LR;\n";
  for (const auto& v : Q.vertices) os << "  \"" << v << "\";\n";
  for (std::size_t k = 0; k < Q.arrows.size(); ++k) {
    const auto& a = Q.arrows[k];
    os << "  \"" << Q.vertices[a.source] << "\" -> \"" << Q.vertices[a.target] << "\" [label=\"" << a.label;
    if (!Q.weights.empty()) os << " (w=" << Q.weights[k] << ")";
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------

std::size_t orbit_walk(unsigned p, const std::vector<Scalar>& f, const Field& F) {
  auto f_at = [&](unsigned i) {
    Scalar s = F.zero();
    for (std::size_t k = 0; k < f.size(); ++k) s = F.add(s, F.mul(f[k], F.pow(F.from_int(i), k)));
    return s;
  };
  unsigned i = 0;
  Scalar j = F.zero();
  std::size_t steps = 0;
  do {
    j = F.sub(j, f_at(i));
    i = (i + 1) % p;
    ++steps;
  } while (!(i == 0 && j == F.zero()) && steps <= static_cast<std::size_t>(p) * p * F.order());
  return steps;
}

unsigned power_sum_mod(unsigned p, unsigned m) {
  unsigned long long s = 0;
  for (unsigned j = 1; j < p; ++j) {
    unsigned long long t = 1;
    for (unsigned k = 0; k < m; ++k) t = t * j % p;
    s = (s + t) % p;
  }
  return static_cast<unsigned>(s);
}

std::optional<std::vector<NakayamaShape>> nakayama_shape(const Algebra& A, const IdempotentSet& idems,
                                                          const Subspace& rad) {
  QuiverPresentation Q = quiver_extract(A, idems, rad);
  const std::size_t n = Q.vertices.size();
  std::vector<int> out(n, -1), in_count(n, 0), out_count(n, 0);
  for (const auto& a : Q.arrows) {
    out[a.source] = static_cast<int>(a.target);
    out_count[a.source]++;
    in_count[a.target]++;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (out_count[v] != 1 || in_count[v] != 1) return std::nullopt;
  }
  // vertex order matches the sorted order used by quiver_extract
  std::vector<std::size_t> order(idems.elems.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return idems.tags[a] < idems.tags[b]; });

  auto powers = radical_powers(A, rad);
  std::vector<std::size_t> loewy(n);
  for (std::size_t v = 0; v < n; ++v) {
    const Vec& e = idems.elems[order[v]];
    std::size_t prev = 0;
    std::size_t length = 0;
    for (std::size_t k = powers.size(); k-- > 0;) {
      Subspace Pk(A.dim());
      for (const auto& b : powers[k].basis()) Pk.insert(A.field(), A.multiply(b, e));
      std::size_t layer = Pk.dim() - prev;
      if (layer > 1) return std::nullopt;
      if (layer == 1) ++length;
      prev = Pk.dim();
    }
    loewy[v] = length;
  }
  std::vector<NakayamaShape> shapes;
  std::vector<bool> seen(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (seen[v]) continue;
    std::size_t size = 0;
    std::size_t cur = v;
    do {
      seen[cur] = true;
      if (loewy[cur] != loewy[v]) return std::nullopt;
      cur = static_cast<std::size_t>(out[cur]);
      ++size;
    } while (cur != v && !seen[cur]);
    if (cur != v) return std::nullopt;
    shapes.push_back(NakayamaShape{size, loewy[v]});
  }
  return shapes;
}

// ---------------------------------------------------------------------------

bool is_truncated_polynomial_tensor(const Algebra& B, unsigned p, std::string* detail) {
  const Field& F = B.field();
  auto fail = [&](const std::string& why) {
    if (detail) *detail = why;
    return false;
  };
  if (!B.is_commutative()) return fail("not commutative");
  const std::size_t d = B.dim();
  // c -> c^(q^N) is linear on a commutative algebra; its kernel is the nilradical
  unsigned long long e = F.order();
  while (e < d) e *= F.order();
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < d; ++i) cols.push_back(B.power(B.basis(i), e));
  Matrix frob = Matrix::from_columns(cols, d);
  Subspace m = Subspace::span(F, d, nullspace(F, frob));
  if (m.dim() + 1 != d) return fail("not local with residue field k");
  Subspace m2 = product_space(B, m, m);
  // lifts of generators into m
  std::vector<Vec> candidates;
  for (const auto& g : B.generators()) {
    Vec image = B.power(g.value, e);
    // image = c * 1 for the residue c of g
    Scalar c = F.zero();
    for (std::size_t i = 0; i < d; ++i) {
      if (B.unit()[i].code) {
        c = F.div(image[i], B.unit()[i]);
        break;
      }
    }
    candidates.push_back(subtracted(F, g.value, B.scalar(c)));
  }
  for (const auto& b : m.basis()) candidates.push_back(b);
  std::vector<Vec> us;
  Subspace chosen = m2;
  for (const auto& c : candidates) {
    if (!m.contains(F, c) || chosen.contains(F, c)) continue;
    chosen.insert(F, c);
    us.push_back(c);
  }
  std::vector<std::size_t> orders;
  std::size_t product = 1;
  for (const auto& u : us) {
    std::size_t n = 1;
    Vec pw = u;
    while (!is_zero(pw)) {
      pw = B.multiply(pw, u);
      ++n;
      if (n > d) return fail("generator not nilpotent");
    }
    if (!is_power_of(n, p)) return fail("nilpotency order " + std::to_string(n) + " is not a power of p");
    orders.push_back(n);
    product *= n;
  }
  if (product != d) return fail("orders multiply to " + std::to_string(product) + ", not " + std::to_string(d));
  // monomials in the u's span B
  Subspace span(d);
  std::vector<std::size_t> exps(us.size(), 0);
  while (true) {
    Vec mono = B.unit();
    for (std::size_t k = 0; k < us.size(); ++k) mono = B.multiply(mono, B.power(us[k], exps[k]));
    span.insert(F, mono);
    std::size_t k = 0;
    while (k < exps.size() && ++exps[k] == orders[k]) exps[k++] = 0;
    if (k == exps.size()) break;
  }
  if (!span.is_whole()) return fail("monomials do not span");
  if (detail) {
    std::ostringstream os;
    for (std::size_t k = 0; k < orders.size(); ++k) os << (k ? "⊗" : "") << "k[u]/(u^" << orders[k] << ")";
    if (orders.empty()) os << "k";
    *detail = os.str();
  }
  return true;
}

std::string to_string(MoritaType t) {
  switch (t) {
    case MoritaType::Semisimple: return "Semisimple";
    case MoritaType::GroupAlgebraLike: return "GroupAlgebraLike";
    case MoritaType::NakayamaSelfinjective: return "NakayamaSelfinjective";
    case MoritaType::RestrictedEnveloping: return "RestrictedEnveloping";
    case MoritaType::CoveringOfLocal: return "CoveringOfLocal";
    case MoritaType::OtherLocal: return "OtherLocal";
  }
  return "Unknown";
}

MoritaType expected_morita(Label label) {
  switch (label) {
    case Label::A1:
    case Label::C1:
      return MoritaType::Semisimple;
    case Label::A2:
    case Label::C2:
    case Label::A3:
    case Label::C4:
    case Label::A4:
    case Label::C3:
    case Label::C7:
    case Label::C8:
    case Label::C9:
    case Label::C10:
      return MoritaType::GroupAlgebraLike;
    case Label::B2:
    case Label::C12:
    case Label::C13:
    case Label::C14:
      return MoritaType::NakayamaSelfinjective;
    case Label::C5:
    case Label::C6:
    case Label::C15:
      return MoritaType::RestrictedEnveloping;
    case Label::B1:
    case Label::C11:
    case Label::B3:
    case Label::C16:
      return MoritaType::CoveringOfLocal;
    case Label::A5:
      return MoritaType::OtherLocal;
  }
  return MoritaType::OtherLocal;
}

std::optional<std::vector<Vec>> claimed_radical_generators(const Algebra& A, Label label, unsigned p) {
  const Field& F = A.field();
  auto g = [&](const char* n) { return A.generator(n); };
  auto e0_of_z = [&]() {
    // e_0 = 1 - z^{p-1}
    return subtracted(F, A.unit(), A.power(g("z"), p - 1));
  };
  switch (label) {
    case Label::A1:
    case Label::C1:
      return std::vector<Vec>{};
    case Label::A2:
    case Label::A3:
    case Label::A4:
    case Label::A5:
    case Label::C2:
    case Label::C3:
    case Label::C4:
    case Label::C5:
    case Label::C6:
      return std::vector<Vec>{g("x"), g("y"), g("z")};
    case Label::B1:
    case Label::B3:
    case Label::C11:
      return std::vector<Vec>{g("y"), g("z")};
    case Label::B2:
    case Label::C12:
    case Label::C13:
      return std::vector<Vec>{g("y")};
    case Label::C14:
      return std::vector<Vec>{A.multiply(g("y"), e0_of_z())};
    case Label::C7:
    case Label::C8:
    case Label::C16:
      return std::vector<Vec>{g("x"), g("y")};
    case Label::C9:
      return std::vector<Vec>{g("x")};
    case Label::C10: {
      Vec e0 = e0_of_z();
      return std::vector<Vec>{A.multiply(g("x"), e0), A.multiply(g("y"), e0)};
    }
    case Label::C15:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace p3
