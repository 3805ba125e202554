#include "p3/coverings.hpp"

#include <sstream>

namespace p3 {

namespace {

int mod(long long v, unsigned m) { return static_cast<int>(((v % m) + m) % m); }

std::string lift_name(const std::string& a, unsigned g) { return "(" + a + ",g^" + std::to_string(g) + ")"; }

}  // namespace

int word_weight(const std::vector<int>& letters, const std::vector<int>& weights, unsigned m) {
  long long s = 0;
  for (int l : letters) s += weights.at(static_cast<std::size_t>(l));
  return mod(s, m);
}

Vec covering_basis(const Covering& c, std::size_t b, unsigned g) {
  return unit_vec(c.algebra.dim(), g * c.base.dim() + b);
}

Vec covering_lift(const Covering& c, const Vec& v, const std::vector<Scalar>& coeff) {
  const Field& F = c.algebra.field();
  const std::size_t d = c.base.dim();
  Vec out(c.algebra.dim());
  for (unsigned g = 0; g < coeff.size(); ++g)
    for (std::size_t b = 0; b < d; ++b) out[g * d + b] = F.mul(coeff[g], v[b]);
  return out;
}

Covering covering_build(const WeightedPresentation& wp) {
  const Presentation& P = wp.base;
  const Field& F = *P.field;
  const unsigned m = wp.m;
  if (m == 0 || wp.weights.size() != P.ngens()) {
    throw Error(ErrorCode::InvalidParams, "covering needs a positive group order and one weight per arrow");
  }
  auto rels = P.relations();
  std::vector<int> rel_weight;
  for (const auto& r : rels) {
    int w = -1;
    for (const auto& t : r.terms) {
      if (!t.coeff.code) continue;
      int tw = word_weight(t.letters, wp.weights, m);
      if (w >= 0 && tw != w) {
        throw Error(ErrorCode::NonHomogeneousRelation, "relation " + r.format(F, P.names) + " mixes weights");
      }
      w = tw;
    }
    rel_weight.push_back(std::max(w, 0));
  }

  Covering c;
  c.base = build_from_presentation(P);
  Rewriter rw(P);
  const std::size_t d = c.base.dim();
  for (std::size_t b = 0; b < d; ++b) c.base_weights.push_back(word_weight(rw.monomial_word(b), wp.weights, m));

  // (b', g')(b, g) = [g' = g + w(b)] (b'b, g)
  std::vector<std::string> labels;
  for (unsigned g = 0; g < m; ++g)
    for (std::size_t b = 0; b < d; ++b) labels.push_back(lift_name(c.base.labels()[b], g));
  Vec unit(m * d);
  for (unsigned g = 0; g < m; ++g)
    for (std::size_t b = 0; b < d; ++b) unit[g * d + b] = c.base.unit()[b];
  const auto& weights = c.base_weights;
  auto product = [&](std::size_t i, std::size_t j) {
    std::size_t gi = i / d, bi = i % d, gj = j / d, bj = j % d;
    SparseVec out;
    if (static_cast<int>(gi) != mod(static_cast<long long>(gj) + weights[bj], m)) return out;
    for (const auto& t : c.base.basis_product(bi, bj)) {
      out.push_back(Term{static_cast<std::uint32_t>(gj * d + t.index), t.coeff});
    }
    return out;
  };

  // quiver data
  QuiverPresentation& Q = c.quiver;
  Q.group_order = m;
  std::vector<NamedElement> gens;
  for (unsigned g = 0; g < m; ++g) Q.vertices.push_back("v" + std::to_string(g));
  std::vector<std::string> arrow_names;
  for (std::size_t a = 0; a < P.ngens(); ++a)
    for (unsigned g = 0; g < m; ++g) arrow_names.push_back(lift_name(P.names[a], g));

  c.algebra = Algebra::from_product(P.field, labels, product, unit);
  for (unsigned g = 0; g < m; ++g) gens.push_back({"e" + std::to_string(g), covering_lift(c, c.base.unit(), [&] {
                                                     std::vector<Scalar> k(m);
                                                     k[g] = F.one();
                                                     return k;
                                                   }())});
  std::vector<Vec> arrow_elems;
  for (std::size_t a = 0; a < P.ngens(); ++a) {
    Vec base_gen = c.base.generator(P.names[a]);
    for (unsigned g = 0; g < m; ++g) {
      std::vector<Scalar> k(m);
      k[g] = F.one();
      Vec e = covering_lift(c, base_gen, k);
      unsigned target = static_cast<unsigned>(mod(static_cast<long long>(g) + wp.weights[a], m));
      Q.arrows.push_back(Arrow{g, target, arrow_names[a * m + g], e});
      Q.weights.push_back(mod(wp.weights[a], m));
      arrow_elems.push_back(e);
      gens.push_back({arrow_names[a * m + g], e});
    }
  }
  c.algebra.set_generators(gens);

  // lifted relations at every start vertex; words act right to left
  for (std::size_t r = 0; r < rels.size(); ++r) {
    for (unsigned g = 0; g < m; ++g) {
      NcPoly lifted;
      for (const auto& t : rels[r].terms) {
        if (!t.coeff.code) continue;
        std::vector<int> letters(t.letters.size());
        long long at = g;
        for (std::size_t k = t.letters.size(); k-- > 0;) {
          int a = t.letters[k];
          letters[k] = a * static_cast<int>(m) + mod(at, m);
          at += wp.weights[static_cast<std::size_t>(a)];
        }
        lifted.add(letters, t.coeff);
      }
      // uniform: every path runs (v,g) -> (v, g + w(r)), and the lift vanishes
      Vec val = evaluate(c.algebra, lifted, arrow_elems);
      std::vector<Scalar> at_g(m), at_end(m);
      at_g[g] = F.one();
      at_end[static_cast<unsigned>(mod(static_cast<long long>(g) + rel_weight[r], m))] = F.one();
      Vec eg = covering_lift(c, c.base.unit(), at_g), eend = covering_lift(c, c.base.unit(), at_end);
      if (!is_zero(val)) throw Error(ErrorCode::CertificateFailure, "lifted relation does not vanish in the covering");
      for (const auto& t : lifted.terms) {
        Vec path = evaluate_word(c.algebra, t.letters, arrow_elems);
        if (c.algebra.multiply(c.algebra.multiply(eend, path), eg) != path) {
          throw Error(ErrorCode::CertificateFailure, "lifted relation is not uniform");
        }
      }
      Q.relations.push_back(lifted.format(F, arrow_names));
    }
  }
  return c;
}

bool pushdown_holds(const Covering& c) {
  const Field& F = c.algebra.field();
  const std::size_t d = c.base.dim();
  const unsigned m = c.quiver.group_order;
  for (std::size_t b1 = 0; b1 < d; ++b1)
    for (std::size_t b2 = 0; b2 < d; ++b2)
      for (unsigned g = 0; g < m; ++g) {
        Vec pushed(d);
        for (unsigned h = 0; h < m; ++h) {
          for (const auto& t : c.algebra.basis_product(h * d + b1, g * d + b2)) {
            pushed[t.index % d] = F.add(pushed[t.index % d], t.coeff);
          }
        }
        if (pushed != to_dense(c.base.basis_product(b1, b2), d)) return false;
      }
  return true;
}

// ---------------------------------------------------------------------------

Algebra dual_group_algebra(FieldPtr F, unsigned m) {
  std::vector<std::string> labels;
  Vec unit(m);
  for (unsigned g = 0; g < m; ++g) {
    labels.push_back("e" + std::to_string(g));
    unit[g] = F->one();
  }
  auto product = [&](std::size_t i, std::size_t j) {
    return i == j ? SparseVec{Term{static_cast<std::uint32_t>(i), F->one()}} : SparseVec{};
  };
  return Algebra::from_product(F, labels, product, unit);
}

TwistingMap flip_twisting_map(const Algebra& L, unsigned m) {
  TwistingMap tau{m, {}};
  const std::size_t d = L.dim();
  for (std::size_t b = 0; b < d; ++b)
    for (unsigned g = 0; g < m; ++g) tau.images.push_back(unit_vec(m * d, g * d + b));
  return tau;
}

TwistingMap weight_twisting_map(const Algebra& L, unsigned m, const std::vector<int>& base_weights) {
  TwistingMap tau{m, {}};
  const std::size_t d = L.dim();
  for (std::size_t b = 0; b < d; ++b)
    for (unsigned g = 0; g < m; ++g)
      tau.images.push_back(unit_vec(m * d, static_cast<std::size_t>(mod(static_cast<long long>(g) + base_weights[b], m)) * d + b));
  return tau;
}

namespace {

// tau(v ⊗ eps_g) for v in L
Vec tau_apply(const Field& F, const TwistingMap& tau, const Vec& v, unsigned g, std::size_t total) {
  Vec out(total);
  for (std::size_t b = 0; b < v.size(); ++b) {
    if (v[b].code) axpy(F, out, v[b], tau.images[b * tau.m + g]);
  }
  return out;
}

// (id ⊗ mu)(x ⊗ b'): right-multiply the L factor
Vec right_mult(const Algebra& L, const Vec& x, std::size_t bp, unsigned m) {
  const Field& F = L.field();
  const std::size_t d = L.dim();
  Vec out(m * d);
  for (unsigned g = 0; g < m; ++g)
    for (std::size_t b = 0; b < d; ++b) {
      Scalar c = x[g * d + b];
      if (!c.code) continue;
      for (const auto& t : L.basis_product(b, bp)) out[g * d + t.index] = F.add(out[g * d + t.index], F.mul(c, t.coeff));
    }
  return out;
}

void check_tau(const Algebra& L, const TwistingMap& tau) {
  const Field& F = L.field();
  const unsigned m = tau.m;
  const std::size_t d = L.dim(), total = m * d;
  if (tau.images.size() != d * m) throw Error(ErrorCode::ShapeMismatch, "twisting map has the wrong number of images");
  // tau(1 ⊗ eps_g) = eps_g ⊗ 1
  for (unsigned g = 0; g < m; ++g) {
    Vec expect(total);
    for (std::size_t b = 0; b < d; ++b) expect[g * d + b] = L.unit()[b];
    if (tau_apply(F, tau, L.unit(), g, total) != expect) {
      throw Error(ErrorCode::TauAxiomViolation, "unit of the first factor: tau(1 ⊗ eps_g) != eps_g ⊗ 1");
    }
  }
  // tau(b ⊗ 1) = 1 ⊗ b
  for (std::size_t b = 0; b < d; ++b) {
    Vec sum(total), expect(total);
    for (unsigned g = 0; g < m; ++g) {
      sum = added(F, sum, tau.images[b * m + g]);
      expect[g * d + b] = F.one();
    }
    if (sum != expect) throw Error(ErrorCode::TauAxiomViolation, "unit of k[G]^*: tau(b ⊗ 1) != 1 ⊗ b");
  }
  // tau(b b' ⊗ eps_g) = (id ⊗ mu)(tau ⊗ id)(b ⊗ tau(b' ⊗ eps_g))
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t bp = 0; bp < d; ++bp)
      for (unsigned g = 0; g < m; ++g) {
        Vec lhs = tau_apply(F, tau, to_dense(L.basis_product(b, bp), d), g, total);
        Vec rhs(total);
        const Vec& inner = tau.images[bp * m + g];
        for (unsigned h = 0; h < m; ++h)
          for (std::size_t c = 0; c < d; ++c) {
            Scalar s = inner[h * d + c];
            if (!s.code) continue;
            axpy(F, rhs, s, right_mult(L, tau.images[b * m + h], c, m));
          }
        if (lhs != rhs) throw Error(ErrorCode::TauAxiomViolation, "multiplicativity in the algebra factor");
      }
  // tau(b ⊗ eps_g eps_h) = (mu ⊗ id)(id ⊗ tau)(tau(b ⊗ eps_g) ⊗ eps_h)
  for (std::size_t b = 0; b < d; ++b)
    for (unsigned g = 0; g < m; ++g)
      for (unsigned h = 0; h < m; ++h) {
        Vec lhs = g == h ? tau.images[b * m + g] : Vec(total);
        Vec rhs(total);
        const Vec& first = tau.images[b * m + g];
        for (unsigned k = 0; k < m; ++k)
          for (std::size_t c = 0; c < d; ++c) {
            Scalar s = first[k * d + c];
            if (!s.code) continue;
            const Vec& second = tau.images[c * m + h];
            // eps_k eps_k' = [k = k'] eps_k
            for (std::size_t c2 = 0; c2 < d; ++c2) rhs[k * d + c2] = F.add(rhs[k * d + c2], F.mul(s, second[k * d + c2]));
          }
        if (lhs != rhs) throw Error(ErrorCode::TauAxiomViolation, "multiplicativity in k[G]^*");
      }
}

}  // namespace

Algebra twisted_tensor_build(const Algebra& L, unsigned m, const TwistingMap& tau) {
  if (tau.m != m) throw Error(ErrorCode::ShapeMismatch, "twisting map group order differs");
  check_tau(L, tau);
  const Field& F = L.field();
  const std::size_t d = L.dim();
  std::vector<std::string> labels;
  for (unsigned g = 0; g < m; ++g)
    for (std::size_t b = 0; b < d; ++b) labels.push_back("e" + std::to_string(g) + "⊗" + L.labels()[b]);
  Vec unit(m * d);
  for (unsigned g = 0; g < m; ++g)
    for (std::size_t b = 0; b < d; ++b) unit[g * d + b] = L.unit()[b];
  // (eps_g ⊗ b)(eps_h ⊗ b') = eps_g tau(b ⊗ eps_h) b'
  auto product = [&](std::size_t i, std::size_t j) {
    std::size_t g = i / d, b = i % d, h = j / d, bp = j % d;
    const Vec& t = tau.images[b * m + h];
    Vec acc(d);
    for (std::size_t c = 0; c < d; ++c) {
      Scalar s = t[g * d + c];
      if (!s.code) continue;
      for (const auto& term : L.basis_product(c, bp)) acc[term.index] = F.add(acc[term.index], F.mul(s, term.coeff));
    }
    SparseVec out;
    for (std::size_t c = 0; c < d; ++c)
      if (acc[c].code) out.push_back(Term{static_cast<std::uint32_t>(g * d + c), acc[c]});
    return out;
  };
  Algebra T = Algebra::from_product(L.field_ptr(), labels, product, unit);
  if (auto bad = associativity_failure(T)) {
    throw Error(ErrorCode::CertificateFailure, "twisted tensor product is not associative");
  }
  return T;
}

bool covering_equiv_twisted(const WeightedPresentation& wp, std::string* detail) {
  Covering c = covering_build(wp);
  Algebra T = twisted_tensor_build(c.base, wp.m, weight_twisting_map(c.base, wp.m, c.base_weights));
  const std::size_t d = c.base.dim();
  const unsigned m = wp.m;
  // phi(eps_g ⊗ b) = (b, g - w(b)) is a permutation of bases
  auto phi_index = [&](std::size_t i) {
    std::size_t g = i / d, b = i % d;
    return static_cast<std::size_t>(mod(static_cast<long long>(g) - c.base_weights[b], m)) * d + b;
  };
  auto phi = [&](const SparseVec& v) {
    Vec out(T.dim());
    for (const auto& t : v) out[phi_index(t.index)] = t.coeff;
    return out;
  };
  auto fail = [&](const std::string& why) {
    if (detail) *detail = why;
    return false;
  };
  if (phi(to_sparse(T.unit())) != c.algebra.unit()) return fail("unit not preserved");
  for (std::size_t i = 0; i < T.dim(); ++i)
    for (std::size_t j = 0; j < T.dim(); ++j) {
      Vec lhs = phi(T.basis_product(i, j));
      Vec rhs = to_dense(c.algebra.basis_product(phi_index(i), phi_index(j)), T.dim());
      if (lhs != rhs) return fail("product of " + T.labels()[i] + " and " + T.labels()[j] + " not preserved");
    }
  if (detail) *detail = "eps_g ⊗ b -> (b, g - w(b)) is multiplicative and bijective";
  return true;
}

// ---------------------------------------------------------------------------

WeightedPresentation example_covering(FieldPtr F, unsigned p) {
  WeightedPresentation wp;
  wp.base = lambda_presentation(F, p, false);
  wp.m = p;
  wp.weights = {1, 0};
  wp.name = "example";
  return wp;
}

CoveringDatum catalogue_covering(Label label, unsigned p, const Params& params, FieldPtr F) {
  auto inst = presentation_catalog(label, p, params, F);
  FieldPtr K = inst.presentation.field;
  CoveringDatum d;
  d.label = label;
  d.params = inst.params;
  d.wp.m = p;
  d.wp.name = to_string(label);
  switch (label) {
    case Label::B1:
    case Label::C11:
      d.wp.base = lambda_presentation(K, p, false);
      d.wp.weights = {1, 0};
      break;
    case Label::B3:
      d.wp.base = lambda_presentation(K, p, true);
      d.wp.weights = {1, 1};
      break;
    case Label::C16: {
      Scalar lam = *inst.params.lambda;
      Scalar a = K->inv(K->mul(lam, lam));
      if (!K->in_prime_field(a)) throw Error(ErrorCode::InvalidParams, "lambda^{-2} is not in the prime field");
      d.a = a.code;
      d.wp.base = lambda_presentation(K, p, false);
      d.wp.weights = {-1, -static_cast<int>(d.a)};
      break;
    }
    default:
      throw Error(ErrorCode::PrerequisitesUnavailable, to_string(label) + " has no covering datum");
  }
  return d;
}

std::vector<Vec> catalogue_images(const CoveringDatum& d, const Covering& c) {
  const Field& F = c.algebra.field();
  const unsigned m = d.wp.m;
  std::vector<Scalar> ones(m, F.one()), index(m);
  for (unsigned g = 0; g < m; ++g) index[g] = F.from_int(g);
  Vec y = covering_lift(c, c.base.generator("y"), ones);
  Vec z = covering_lift(c, c.base.generator("z"), ones);
  if (d.label == Label::C16) {
    std::vector<Scalar> scaled_index(m);
    for (unsigned g = 0; g < m; ++g) scaled_index[g] = F.mul(index[g], *d.params.lambda);
    return {y, z, covering_lift(c, c.base.unit(), scaled_index)};
  }
  return {covering_lift(c, c.base.unit(), index), y, z};
}

IsoResult covering_matches_catalogue(const CoveringDatum& d) {
  Covering c = covering_build(d.wp);
  auto inst = presentation_catalog(d.label, d.wp.m, d.params, d.wp.base.field);
  AlgebraMap map;
  map.source_generators = inst.presentation.names;
  map.source_relations = inst.presentation.relations();
  map.source_dim = c.base.dim() * d.wp.m;
  map.target = &c.algebra;
  map.images = catalogue_images(d, c);
  return iso_from_generators(map);
}

}  // namespace p3
