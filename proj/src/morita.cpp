#include <algorithm>
#include <sstream>

#include "p3/coverings.hpp"
#include "p3/structure.hpp"

namespace p3 {

namespace {

// weighted degree, then lexicographic with z > y
bool word_greater(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& weight) {
  int wa = 0, wb = 0;
  for (int g : a) wa += weight[g];
  for (int g : b) wb += weight[g];
  if (wa != wb) return wa > wb;
  return a > b;
}

bool contains_factor(const std::vector<int>& w, const std::vector<int>& f) {
  return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

}  // namespace

IsoResult a5_semidihedral_iso() {
  const int Y = 0, Z = 1;
  auto F = Field::make(2);
  Algebra A = build_family_algebra(Label::A5, 2, {});
  const Scalar one = F->one(), m1 = F->from_int(-1);
  // leading word -> remainder
  struct Rule {
    std::vector<int> lead;
    NcPoly rest;
  };
  std::vector<Rule> rules{{{Z, Y, Z, Y}, NcPoly::word({Y, Z, Y, Z})}, {{Y, Y}, NcPoly{}}, {{Z, Z}, NcPoly::word({Y, Z, Y})}};
  const std::vector<int> weight{1, 2};
  std::vector<NcPoly> relations;
  for (const auto& r : rules) {
    for (const auto& t : r.rest.terms)
      if (!word_greater(r.lead, t.letters, weight)) return {false, "rewriting rule is not decreasing"};
    NcPoly rel = NcPoly::word(r.lead, one);
    rel.add(r.rest, *F, m1);
    relations.push_back(rel);
  }
  // normal words: no leading word as a factor
  std::vector<std::vector<int>> normal{{}}, frontier{{}};
  for (std::size_t len = 1; !frontier.empty(); ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (int g : {Y, Z}) {
        auto v = w;
        v.push_back(g);
        bool reducible = false;
        for (const auto& r : rules) reducible = reducible || contains_factor(v, r.lead);
        if (!reducible) next.push_back(v);
      }
    normal.insert(normal.end(), next.begin(), next.end());
    frontier = std::move(next);
    if (len > 64) return {false, "normal words do not terminate"};
  }
  AlgebraMap m;
  m.source_generators = {"y", "z"};
  m.source_relations = relations;
  m.source_dim = normal.size();
  m.source_basis_words = normal;
  m.target = &A;
  m.images = {A.generator("y"), A.generator("z")};
  if (A.commutator(m.images[0], m.images[1]) != A.generator("x")) return {false, "[y,z] != x in A5"};
  auto res = iso_from_generators(m);
  if (res.ok) res.diagnostic = std::to_string(normal.size()) + " normal words; y, z -> y, z with x = [y,z]";
  return res;
}

IsoResult enveloping_matches_catalogue(Label label, unsigned p) {
  auto F = Field::make(p);
  RestrictedLie lie;
  switch (label) {
    case Label::C5: lie = lie_c5(F, p); break;
    case Label::C6: lie = lie_c6(F, p); break;
    case Label::C15: lie = lie_sl2_prime(F, p); break;
    default:
      throw Error(ErrorCode::PrerequisitesUnavailable, to_string(label) + " has no restricted Lie datum");
  }
  auto check = verify_p_operation(lie);
  if (!check.ok) return {false, "restricted Lie datum fails: " + check.diagnostic};
  Algebra U = restricted_enveloping(lie);
  auto inst = presentation_catalog(label, p, {}, F);
  AlgebraMap m;
  m.source_generators = inst.presentation.names;
  m.source_relations = inst.presentation.relations();
  m.source_dim = static_cast<std::size_t>(p) * p * p;
  m.target = &U;
  if (label == Label::C15) {
    m.images = {U.generator("e"), scaled(*F, F->neg(F->inv(F->from_int(2))), U.generator("f")), U.generator("h'")};
  } else {
    m.images = {U.generator("x1"), U.generator("x2"), U.generator("x3")};
  }
  return iso_from_generators(m);
}

namespace {

bool group_algebra_like(const Algebra& A, unsigned p, std::string& evidence) {
  std::ostringstream os;
  for (const auto& c : central_primitive_idempotents(A)) {
    Corner blk = corner(A, c);
    std::string why;
    if (is_truncated_polynomial_tensor(blk.algebra, p, &why)) {
      os << "[" << why << "]";
      continue;
    }
    if (blk.algebra.dim() == 1) {
      os << "[k]";
      continue;
    }
    unsigned n = 1;
    while (n * n < blk.algebra.dim()) ++n;
    if (n * n == blk.algebra.dim() && matrix_block_certificate(blk.algebra, n)) {
      os << "[M_" << n << "]";
      continue;
    }
    return false;
  }
  evidence = "blocks " + os.str();
  return true;
}

}  // namespace

MoritaResult morita_classify(Label label, unsigned p, const Params& params) {
  auto inst = presentation_catalog(label, p, params, params.lambda ? family_field(label, p, params) : nullptr);
  Algebra A = build_family_algebra(inst);
  auto claimed = claimed_radical_generators(A, label, p);
  std::optional<RadicalCertificate> cert;
  if (claimed) cert = radical_certificate(A, *claimed);

  auto finish = [&](MoritaType t, std::string evidence) {
    if (t != expected_morita(label)) {
      throw Error(ErrorCode::TableMismatch, to_string(label) + " classified as " + to_string(t) + ", table says " +
                                                to_string(expected_morita(label)));
    }
    return MoritaResult{t, std::move(evidence)};
  };

  if (cert && cert->ideal.dim() == 0) {
    return finish(MoritaType::Semisimple,
                  "radical is zero; " + std::to_string(cert->blocks.size()) + " one-dimensional blocks");
  }
  std::string ev;
  if (group_algebra_like(A, p, ev)) return finish(MoritaType::GroupAlgebraLike, ev);

  if (cert) {
    try {
      auto idems = primitive_idempotents_for(A, label, inst.params, p, cert->ideal);
      if (auto shapes = nakayama_shape(A, idems, cert->ideal)) {
        std::ostringstream os;
        os << "Nakayama blocks";
        for (const auto& s : *shapes) {
          bool symmetric = (s.loewy_length - 1) % s.vertices == 0;
          os << " (n=" << s.vertices << ", t=" << s.loewy_length << (symmetric ? ", symmetric" : "") << ")";
        }
        auto blocks = matrix_block_idempotents(A);
        if (!blocks.empty()) os << " plus " << blocks.size() << " matrix blocks";
        return finish(MoritaType::NakayamaSelfinjective, os.str());
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrerequisitesUnavailable) throw;
    }
  }

  if (label == Label::C5 || label == Label::C6 || label == Label::C15) {
    auto iso = enveloping_matches_catalogue(label, p);
    if (iso.ok) return finish(MoritaType::RestrictedEnveloping, "isomorphic to u(g) for the catalogue Lie datum");
  }
  if (label == Label::B1 || label == Label::C11 || label == Label::B3 || label == Label::C16) {
    auto d = catalogue_covering(label, p, inst.params, inst.presentation.field);
    if (covering_equiv_twisted(d.wp) && covering_matches_catalogue(d).ok) {
      return finish(MoritaType::CoveringOfLocal,
                    "isomorphic to a Z_" + std::to_string(p) + " covering of a local algebra of dimension " +
                        std::to_string(static_cast<std::size_t>(p) * p));
    }
  }
  if (cert && cert->ideal.dim() + 1 == A.dim()) {
    return finish(MoritaType::OtherLocal, "local: radical of codimension 1, nilpotency index " +
                                              std::to_string(cert->nilpotency_index));
  }
  throw Error(ErrorCode::TableMismatch, to_string(label) + ": no evidence chain step applies");
}

}  // namespace p3
