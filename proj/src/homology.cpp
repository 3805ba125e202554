#include "p3/homology.hpp"

#include "p3/structure.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace p3 {

Matrix ModuleRep::act(const Vec& a) const {
  const Field& F = algebra->field();
  Matrix out(dim, dim);
  for (std::size_t b = 0; b < a.size(); ++b) {
    if (!a[b].code) continue;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) out(r, c) = F.add(out(r, c), F.mul(a[b], action[b](r, c)));
  }
  return out;
}

void check_module(const ModuleRep& M) {
  const Algebra& A = *M.algebra;
  const Field& F = A.field();
  if (M.action.size() != A.dim()) throw Error(ErrorCode::NotAModule, "one action matrix per basis element expected");
  if (M.act(A.unit()) != Matrix::identity(F, M.dim)) throw Error(ErrorCode::NotAModule, "unit does not act as identity");
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      if (mat_mul(F, M.action[i], M.action[j]) != M.act(to_dense(A.basis_product(i, j), A.dim()))) {
        throw Error(ErrorCode::NotAModule,
                    "action of " + A.labels()[i] + " * " + A.labels()[j] + " disagrees with the structure constants");
      }
    }
}

Subspace left_ideal(const Algebra& A, const std::vector<Vec>& gens) {
  Subspace L(A.dim());
  for (const auto& g : gens)
    for (std::size_t b = 0; b < A.dim(); ++b) L.insert(A.field(), A.multiply_basis_left(b, g));
  return L;
}

ModuleRep subquotient_module(const Algebra& A, const Subspace& U, const Subspace& V) {
  const Field& F = A.field();
  // quotient basis: elements of U reduced mod V, which vanish on V's pivots
  Subspace Q(A.dim());
  for (const auto& u : U.basis()) Q.insert(F, V.reduce(F, u));
  ModuleRep M;
  M.algebra = &A;
  M.dim = Q.dim();
  for (std::size_t b = 0; b < A.dim(); ++b) {
    Matrix m(M.dim, M.dim);
    for (std::size_t c = 0; c < M.dim; ++c) {
      Vec img = V.reduce(F, A.multiply_basis_left(b, Q.basis()[c]));
      if (!Q.contains(F, img)) throw Error(ErrorCode::NotAModule, "U is not a left ideal containing V");
      Vec co = Q.coords(img);
      for (std::size_t r = 0; r < M.dim; ++r) m(r, c) = co[r];
    }
    M.action.push_back(std::move(m));
  }
  return M;
}

ModuleRep trivial_module(const Algebra& A) {
  std::vector<Vec> gens;
  for (const auto& g : A.generators()) gens.push_back(g.value);
  Subspace I = ideal_closure(A, gens);
  Subspace whole(A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) whole.insert(A.field(), A.basis(i));
  ModuleRep M = subquotient_module(A, whole, I);
  if (M.dim != 1) throw Error(ErrorCode::NotAModule, "generators do not span an augmentation ideal");
  return M;
}

ModuleRep simple_module(const Algebra& A, const Vec& e, const Subspace& rad) {
  const Field& F = A.field();
  Subspace U(A.dim()), V(A.dim());
  for (std::size_t b = 0; b < A.dim(); ++b) U.insert(F, A.multiply_basis_left(b, e));
  for (const auto& r : rad.basis()) V.insert(F, A.multiply(r, e));
  return subquotient_module(A, U, V);
}

ModuleRep restrict_module(const ModuleRep& N, const Algebra& sub, const std::vector<Vec>& images) {
  ModuleRep M;
  M.algebra = &sub;
  M.dim = N.dim;
  for (const auto& img : images) M.action.push_back(N.act(img));
  return M;
}

// ---------------------------------------------------------------------------
// gradings

namespace {

struct Frac {
  long long n = 0, d = 1;
};

Frac norm(Frac f) {
  if (f.d < 0) f.n = -f.n, f.d = -f.d;
  long long g = std::gcd(f.n < 0 ? -f.n : f.n, f.d);
  if (g > 1) f.n /= g, f.d /= g;
  return f;
}
Frac operator-(Frac a, Frac b) { return norm({a.n * b.d - b.n * a.d, a.d * b.d}); }
Frac operator*(Frac a, Frac b) { return norm({a.n * b.n, a.d * b.d}); }
Frac operator/(Frac a, Frac b) { return norm({a.n * b.d, a.d * b.n}); }

// Integer basis of the rational kernel of rows (each of length n).
std::vector<std::vector<int>> integer_kernel(std::vector<std::vector<long long>> rows, std::size_t n) {
  std::vector<std::vector<Frac>> m;
  for (auto& r : rows) {
    std::vector<Frac> fr;
    for (auto v : r) fr.push_back({v, 1});
    m.push_back(fr);
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < m.size(); ++c) {
    std::size_t r = row;
    while (r < m.size() && m[r][c].n == 0) ++r;
    if (r == m.size()) continue;
    std::swap(m[r], m[row]);
    Frac piv = m[row][c];
    for (auto& x : m[row]) x = x / piv;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == row || m[k][c].n == 0) continue;
      Frac f = m[k][c];
      for (std::size_t cc = 0; cc < n; ++cc) m[k][cc] = m[k][cc] - f * m[row][cc];
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<std::vector<int>> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Frac> v(n, Frac{0, 1});
    v[free] = {1, 1};
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = Frac{0, 1} - m[k][free];
    long long l = 1;
    for (auto& f : v) l = std::lcm(l, f.d);
    std::vector<int> iv;
    for (auto& f : v) iv.push_back(static_cast<int>(f.n * (l / f.d)));
    out.push_back(iv);
  }
  return out;
}

Degree add_deg(const Degree& a, const Degree& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  Degree c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

}  // namespace

bool grading_respected(const Algebra& A, const Grading& g) {
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Degree want = add_deg(g.basis_degree[i], g.basis_degree[j]);
      for (const auto& t : A.basis_product(i, j))
        if (g.basis_degree[t.index] != want) return false;
    }
  return true;
}

std::optional<Grading> presentation_grading(const Presentation& P, const Algebra& A) {
  const std::size_t n = P.ngens();
  std::vector<std::vector<long long>> rows;
  for (const auto& r : P.relations()) {
    std::vector<long long> first;
    for (const auto& t : r.terms) {
      if (!t.coeff.code) continue;
      std::vector<long long> counts(n, 0);
      for (int l : t.letters) counts[static_cast<std::size_t>(l)]++;
      if (first.empty()) {
        first = counts;
        continue;
      }
      std::vector<long long> diff(n);
      for (std::size_t i = 0; i < n; ++i) diff[i] = counts[i] - first[i];
      rows.push_back(diff);
    }
    // a lone nonzero word (e.g. x^p = 0) imposes nothing
  }
  auto basis = integer_kernel(rows, n);
  if (basis.empty()) return std::nullopt;
  Rewriter rw(P);
  Grading g;
  for (std::size_t b = 0; b < A.dim(); ++b) {
    auto e = rw.exponents(b);
    Degree d(basis.size(), 0);
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t i = 0; i < n; ++i) d[k] += static_cast<int>(e[i]) * basis[k][i];
    g.basis_degree.push_back(d);
  }
  if (!grading_respected(A, g)) return std::nullopt;
  return g;
}

// ---------------------------------------------------------------------------
// resolutions

namespace {

struct Piece {
  Degree deg;
  std::vector<std::size_t> coords;  // global coordinates
};

struct FreeMod {
  std::vector<std::size_t> vertex;
  std::vector<Degree> shift;
  std::vector<std::size_t> offset;
  std::size_t dim = 0;
  std::vector<Piece> pieces;
  std::map<Degree, std::size_t> piece_of;
  std::vector<std::size_t> coord_piece, coord_local;

  const Piece* find(const Degree& d) const {
    auto it = piece_of.find(d);
    return it == piece_of.end() ? nullptr : &pieces[it->second];
  }
};

struct Context {
  const Algebra* A = nullptr;
  const Field* F = nullptr;
  bool graded = false;
  std::vector<Vec> idem;
  std::vector<Vec> arrows;
  std::vector<Degree> arrow_deg;
  // per vertex: basis of A e_j (A coordinates), its degrees, coordinates map
  std::vector<std::vector<Vec>> ae_basis;
  std::vector<std::vector<Degree>> ae_deg;
  std::vector<Subspace> ae_space;
  // left multiplication matrices on A e_j
  std::vector<std::vector<Matrix>> arrow_mat;  // [a][j]
  std::vector<std::vector<Matrix>> idem_mat;   // [i][j]
  std::vector<std::vector<std::vector<Matrix>>> basis_mat;  // [j][c][j'] : left mult by ae_basis[j][c] on A e_j'
  const Subspace* rad = nullptr;
};

Matrix left_mult_on(const Context& ctx, const Vec& a, std::size_t j) {
  const auto& B = ctx.ae_basis[j];
  Matrix m(B.size(), B.size());
  for (std::size_t c = 0; c < B.size(); ++c) {
    Vec img = ctx.A->multiply(a, B[c]);
    Vec co = ctx.ae_space[j].coords(img);
    if (!ctx.ae_space[j].contains(*ctx.F, img)) throw Error(ErrorCode::ShapeMismatch, "A e_j not a left ideal");
    for (std::size_t r = 0; r < B.size(); ++r) m(r, c) = co[r];
  }
  return m;
}

Context make_context(const ResolutionSetup& s) {
  Context ctx;
  ctx.A = s.algebra;
  ctx.F = &s.algebra->field();
  ctx.idem = s.idempotents;
  ctx.rad = &s.rad;
  const Algebra& A = *s.algebra;
  const Field& F = *ctx.F;
  ctx.graded = s.grading.has_value();
  // graded mode needs idempotents acting on the monomial basis and a monomial radical
  if (ctx.graded) {
    std::size_t in_rad = 0;
    for (std::size_t b = 0; b < A.dim(); ++b) in_rad += s.rad.contains(F, A.basis(b)) ? 1 : 0;
    if (in_rad != s.rad.dim()) ctx.graded = false;
    for (const auto& e : s.idempotents)
      for (std::size_t b = 0; b < A.dim() && ctx.graded; ++b) {
        Vec be = A.multiply(A.basis(b), e);
        if (!is_zero(be) && be != A.basis(b)) ctx.graded = false;
      }
  }
  auto deg_of = [&](std::size_t b) { return ctx.graded ? s.grading->basis_degree[b] : Degree{}; };

  Subspace r2 = product_space(A, s.rad, s.rad);
  Subspace chosen = r2;
  if (ctx.graded) {
    for (std::size_t b = 0; b < A.dim(); ++b) {
      Vec v = A.basis(b);
      if (!s.rad.contains(F, v) || chosen.contains(F, v)) continue;
      chosen.insert(F, v);
      ctx.arrows.push_back(v);
      ctx.arrow_deg.push_back(deg_of(b));
    }
  } else {
    for (const auto& v : s.rad.basis()) {
      if (chosen.contains(F, v)) continue;
      chosen.insert(F, v);
      ctx.arrows.push_back(v);
      ctx.arrow_deg.push_back({});
    }
  }
  for (const auto& e : s.idempotents) {
    std::vector<Vec> basis;
    std::vector<Degree> degs;
    Subspace sp(A.dim());
    if (ctx.graded) {
      for (std::size_t b = 0; b < A.dim(); ++b) {
        if (A.multiply(A.basis(b), e) == A.basis(b)) {
          basis.push_back(A.basis(b));
          degs.push_back(deg_of(b));
          sp.insert(F, A.basis(b));
        }
      }
      // coordinates are read off pivots; with unit vectors the pivot order is the index order
    } else {
      for (std::size_t b = 0; b < A.dim(); ++b) sp.insert(F, A.multiply(A.basis(b), e));
      basis = sp.basis();
      degs.assign(basis.size(), Degree{});
    }
    if (ctx.graded) basis = sp.basis();
    ctx.ae_basis.push_back(basis);
    ctx.ae_deg.push_back(degs);
    ctx.ae_space.push_back(sp);
  }
  const std::size_t nv = s.idempotents.size();
  for (const auto& a : ctx.arrows) {
    std::vector<Matrix> per;
    for (std::size_t j = 0; j < nv; ++j) per.push_back(left_mult_on(ctx, a, j));
    ctx.arrow_mat.push_back(per);
  }
  for (const auto& e : ctx.idem) {
    std::vector<Matrix> per;
    for (std::size_t j = 0; j < nv; ++j) per.push_back(left_mult_on(ctx, e, j));
    ctx.idem_mat.push_back(per);
  }
  ctx.basis_mat.resize(nv);
  for (std::size_t j = 0; j < nv; ++j)
    for (const auto& c : ctx.ae_basis[j]) {
      std::vector<Matrix> per;
      for (std::size_t jp = 0; jp < nv; ++jp) per.push_back(left_mult_on(ctx, c, jp));
      ctx.basis_mat[j].push_back(per);
    }
  return ctx;
}

FreeMod build_free(const Context& ctx, const std::vector<std::size_t>& vertex, const std::vector<Degree>& shift) {
  FreeMod P;
  P.vertex = vertex;
  P.shift = shift;
  for (std::size_t k = 0; k < vertex.size(); ++k) {
    P.offset.push_back(P.dim);
    P.dim += ctx.ae_basis[vertex[k]].size();
  }
  P.coord_piece.resize(P.dim);
  P.coord_local.resize(P.dim);
  for (std::size_t k = 0; k < vertex.size(); ++k) {
    const auto& degs = ctx.ae_deg[vertex[k]];
    for (std::size_t c = 0; c < degs.size(); ++c) {
      Degree d = add_deg(shift[k], degs[c]);
      auto it = P.piece_of.find(d);
      if (it == P.piece_of.end()) {
        it = P.piece_of.emplace(d, P.pieces.size()).first;
        P.pieces.push_back(Piece{d, {}});
      }
      std::size_t g = P.offset[k] + c;
      P.coord_piece[g] = it->second;
      P.coord_local[g] = P.pieces[it->second].coords.size();
      P.pieces[it->second].coords.push_back(g);
    }
  }
  return P;
}

// y = (matrix family on each summand) x
Vec act_free(const Context& ctx, const FreeMod& P, const std::vector<Matrix>& per_vertex, const Vec& x) {
  const Field& F = *ctx.F;
  Vec y(P.dim);
  for (std::size_t k = 0; k < P.vertex.size(); ++k) {
    const Matrix& m = per_vertex[P.vertex[k]];
    const std::size_t off = P.offset[k], n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
      Scalar v = x[off + c];
      if (!v.code) continue;
      for (std::size_t r = 0; r < n; ++r) {
        Scalar e = m(r, c);
        if (e.code) y[off + r] = F.add(y[off + r], F.mul(v, e));
      }
    }
  }
  return y;
}

Vec to_local(const Piece& pc, const Vec& global) {
  Vec v(pc.coords.size());
  for (std::size_t l = 0; l < pc.coords.size(); ++l) v[l] = global[pc.coords[l]];
  return v;
}

Vec to_global(const FreeMod& P, const Piece& pc, const Vec& local) {
  Vec g(P.dim);
  for (std::size_t l = 0; l < pc.coords.size(); ++l) g[pc.coords[l]] = local[l];
  return g;
}

struct Generator {
  std::size_t vertex;
  Degree deg;
  Vec vec;  // global coordinates of the ambient (free module or M)
};

// Kernel of the map P -> target given column images; per piece of P.
std::map<Degree, std::vector<Vec>> piecewise_kernel(const Context& ctx, const FreeMod& P,
                                                     const std::vector<Vec>& column_images,
                                                     const FreeMod* target) {
  std::map<Degree, std::vector<Vec>> K;
  for (const auto& pc : P.pieces) {
    const Piece* tp = target ? target->find(pc.deg) : nullptr;
    std::size_t rows = target ? (tp ? tp->coords.size() : 0) : column_images.empty() ? 0 : column_images[0].size();
    std::vector<Vec> cols;
    for (auto g : pc.coords) {
      const Vec& img = column_images[g];
      if (target) cols.push_back(tp ? to_local(*tp, img) : Vec{});
      else cols.push_back(img);
    }
    std::vector<Vec> ker;
    if (rows == 0) {
      for (std::size_t l = 0; l < pc.coords.size(); ++l) ker.push_back(unit_vec(pc.coords.size(), l));
    } else {
      ker = nullspace(*ctx.F, Matrix::from_columns(cols, rows));
    }
    if (!ker.empty()) K[pc.deg] = std::move(ker);
  }
  return K;
}

}  // namespace

ResolutionTrace minimal_resolution(const ResolutionSetup& setup, const ModuleRep& M, const ResolutionOptions& opt) {
  Context ctx = make_context(setup);
  const Field& F = *ctx.F;
  const Algebra& A = *ctx.A;
  const std::size_t nv = ctx.idem.size();
  ResolutionTrace tr;

  // step 0: generators of M
  std::vector<Matrix> rho_idem, rho_arrow;
  for (const auto& e : ctx.idem) rho_idem.push_back(M.act(e));
  for (const auto& a : ctx.arrows) rho_arrow.push_back(M.act(a));
  {
    Matrix sum(M.dim, M.dim);
    for (const auto& m : rho_idem) sum = mat_add(F, sum, m);
    if (sum != Matrix::identity(F, M.dim)) throw Error(ErrorCode::NotAModule, "idempotents do not sum to 1 on the module");
  }
  if (M.degrees.size() != M.dim) ctx.graded = false;
  if (!ctx.graded) {
    for (auto& d : ctx.ae_deg)
      for (auto& x : d) x.clear();
    for (auto& d : ctx.arrow_deg) d.clear();
  }
  const bool graded = ctx.graded;
  tr.field = A.field_ptr();
  Subspace S(M.dim);
  for (const auto& m : rho_arrow)
    for (std::size_t c = 0; c < M.dim; ++c) S.insert(F, m.column(c));
  std::vector<Generator> gens;
  for (std::size_t b = 0; b < M.dim; ++b)
    for (std::size_t j = 0; j < nv; ++j) {
      Vec v = rho_idem[j].column(b);
      if (S.insert(F, v)) gens.push_back({j, graded ? M.degrees[b] : Degree{}, v});
    }
  {
    GeneratorAction ga;
    ga.mats = rho_idem;
    ga.mats.insert(ga.mats.end(), rho_arrow.begin(), rho_arrow.end());
    tr.syzygies.push_back(ga);
  }
  tr.syzygy_dims.push_back(M.dim);

  std::vector<std::size_t> vertex;
  std::vector<Degree> shift;
  for (const auto& g : gens) {
    vertex.push_back(g.vertex);
    shift.push_back(g.deg);
    tr.top_generators.push_back(g.vec);
  }
  FreeMod P = build_free(ctx, vertex, shift);
  auto record_betti = [&](const FreeMod& Q) {
    std::vector<std::size_t> b(nv, 0);
    for (auto v : Q.vertex) b[v]++;
    tr.betti.push_back(b);
    tr.vertices.push_back(Q.vertex);
  };
  record_betti(P);
  tr.components.push_back({});

  // pi_0 columns
  std::vector<Vec> cols(P.dim);
  for (std::size_t k = 0; k < P.vertex.size(); ++k) {
    std::size_t j = P.vertex[k];
    for (std::size_t c = 0; c < ctx.ae_basis[j].size(); ++c) {
      cols[P.offset[k] + c] = mat_vec(F, M.act(ctx.ae_basis[j][c]), gens[k].vec);
    }
  }
  auto K = piecewise_kernel(ctx, P, cols, nullptr);
  tr.steps = 1;

  while (tr.steps < opt.steps) {
    std::size_t kdim = 0;
    for (const auto& [d, vs] : K) kdim += vs.size();
    tr.syzygy_dims.push_back(kdim);
    if (kdim == 0) {
      tr.terminated = true;
      tr.syzygies.push_back(std::nullopt);
      break;
    }
    // keep small syzygies
    if (kdim <= opt.keep_syzygies_up_to) {
      Subspace W(P.dim);
      for (const auto& [d, vs] : K)
        for (const auto& v : vs) W.insert(F, to_global(P, *P.find(d), v));
      GeneratorAction ga;
      auto add = [&](const std::vector<Matrix>& per) {
        Matrix m(kdim, kdim);
        for (std::size_t c = 0; c < kdim; ++c) {
          Vec co = W.coords(act_free(ctx, P, per, W.basis()[c]));
          for (std::size_t r = 0; r < kdim; ++r) m(r, c) = co[r];
        }
        ga.mats.push_back(m);
      };
      for (const auto& per : ctx.idem_mat) add(per);
      for (const auto& per : ctx.arrow_mat) add(per);
      tr.syzygies.push_back(ga);
    } else {
      tr.syzygies.push_back(std::nullopt);
    }

    // radical of K, piecewise
    std::map<Degree, Subspace> RK;
    for (const auto& [d, vs] : K) {
      for (std::size_t a = 0; a < ctx.arrows.size(); ++a) {
        Degree td = add_deg(d, ctx.arrow_deg[a]);
        const Piece* tp = P.find(td);
        if (!tp) continue;
        auto it = RK.find(td);
        if (it == RK.end()) it = RK.emplace(td, Subspace(tp->coords.size())).first;
        for (const auto& v : vs) {
          Vec img = act_free(ctx, P, ctx.arrow_mat[a], to_global(P, *P.find(d), v));
          it->second.insert(F, to_local(*tp, img));
        }
      }
    }
    // top generators
    std::vector<Generator> ngens;
    for (const auto& [d, vs] : K) {
      const Piece& pc = *P.find(d);
      auto it = RK.find(d);
      Subspace Sd = it == RK.end() ? Subspace(pc.coords.size()) : it->second;
      for (const auto& v : vs) {
        Vec g = to_global(P, pc, v);
        for (std::size_t j = 0; j < nv; ++j) {
          Vec w = act_free(ctx, P, ctx.idem_mat[j], g);
          if (Sd.insert(F, to_local(pc, w))) ngens.push_back({j, d, w});
        }
      }
    }
    // minimality: generators lie in rad P
    std::vector<std::vector<std::pair<std::size_t, SparseVec>>> comps;
    for (const auto& g : ngens) {
      std::vector<std::pair<std::size_t, SparseVec>> comp;
      for (std::size_t k = 0; k < P.vertex.size(); ++k) {
        std::size_t j = P.vertex[k];
        Vec x(A.dim());
        bool nz = false;
        for (std::size_t c = 0; c < ctx.ae_basis[j].size(); ++c) {
          Scalar s = g.vec[P.offset[k] + c];
          if (!s.code) continue;
          axpy(F, x, s, ctx.ae_basis[j][c]);
          nz = true;
        }
        if (!nz) continue;
        if (!ctx.rad->contains(F, x)) {
          throw Error(ErrorCode::CertificateFailure, "resolution is not minimal: boundary leaves rad P");
        }
        comp.push_back({k, to_sparse(x)});
      }
      comps.push_back(std::move(comp));
    }

    std::vector<std::size_t> nvert;
    std::vector<Degree> nshift;
    for (const auto& g : ngens) {
      nvert.push_back(g.vertex);
      nshift.push_back(g.deg);
    }
    FreeMod Pn = build_free(ctx, nvert, nshift);
    if (Pn.dim > opt.max_projective_dim) {
      tr.truncated = true;
      break;
    }
    record_betti(Pn);
    tr.components.push_back(std::move(comps));
    ++tr.steps;

    std::vector<Vec> ncols(Pn.dim);
    for (std::size_t k = 0; k < Pn.vertex.size(); ++k) {
      std::size_t j = Pn.vertex[k];
      for (std::size_t c = 0; c < ctx.ae_basis[j].size(); ++c) {
        ncols[Pn.offset[k] + c] = act_free(ctx, P, ctx.basis_mat[j][c], ngens[k].vec);
      }
    }
    K = piecewise_kernel(ctx, Pn, ncols, &P);
    P = std::move(Pn);
  }
  return tr;
}

std::vector<std::size_t> ext_dims(const ResolutionSetup& setup, const ResolutionTrace& tr, const ModuleRep& N,
                                  std::size_t maxdeg) {
  const Field& F = setup.algebra->field();
  std::vector<Subspace> EN;
  for (const auto& e : setup.idempotents) {
    Matrix m = N.act(e);
    Subspace s(N.dim);
    for (std::size_t c = 0; c < N.dim; ++c) s.insert(F, m.column(c));
    EN.push_back(s);
  }
  auto hom_dim = [&](std::size_t i) {
    std::size_t d = 0;
    if (i >= tr.vertices.size()) return d;
    for (auto v : tr.vertices[i]) d += EN[v].dim();
    return d;
  };
  // rank of d^i : Hom(P_i, N) -> Hom(P_{i+1}, N)
  auto rank_d = [&](std::size_t i) -> std::size_t {
    if (i + 1 >= tr.vertices.size()) return 0;
    const auto& src = tr.vertices[i];
    const auto& dst = tr.vertices[i + 1];
    std::vector<std::size_t> src_off, dst_off;
    std::size_t cols = 0, rows = 0;
    for (auto v : src) {
      src_off.push_back(cols);
      cols += EN[v].dim();
    }
    for (auto v : dst) {
      dst_off.push_back(rows);
      rows += EN[v].dim();
    }
    if (rows == 0 || cols == 0) return 0;
    Matrix D(rows, cols);
    for (std::size_t kp = 0; kp < dst.size(); ++kp) {
      for (const auto& [k, x] : tr.components[i + 1][kp]) {
        Matrix rx = N.act(to_dense(x, setup.algebra->dim()));
        const Subspace& from = EN[src[k]];
        const Subspace& to = EN[dst[kp]];
        for (std::size_t c = 0; c < from.dim(); ++c) {
          Vec img = mat_vec(F, rx, from.basis()[c]);
          Vec co = to.coords(img);
          for (std::size_t r = 0; r < to.dim(); ++r) D(dst_off[kp] + r, src_off[k] + c) = F.add(D(dst_off[kp] + r, src_off[k] + c), co[r]);
        }
      }
    }
    return rank(F, D);
  };
  std::vector<std::size_t> dims;
  std::size_t prev_rank = 0;
  for (std::size_t i = 0; i <= maxdeg; ++i) {
    if (!tr.terminated && i + 1 >= tr.steps) break;  // not enough steps for this degree
    std::size_t r = rank_d(i);
    dims.push_back(hom_dim(i) - r - prev_rank);
    prev_rank = r;
  }
  return dims;
}

std::optional<std::size_t> periodicity_detect(const ResolutionTrace& tr, std::uint64_t seed) {
  if (!tr.field || tr.syzygies.empty() || !tr.syzygies[0]) return std::nullopt;
  const Field& F = *tr.field;
  const GeneratorAction& M = *tr.syzygies[0];
  const std::size_t m = tr.syzygy_dims[0];
  if (m == 0 || m > 16) return std::nullopt;
  std::mt19937_64 rng(seed);
  for (std::size_t d = 1; d < tr.syzygies.size(); ++d) {
    if (!tr.syzygies[d] || tr.syzygy_dims[d] != m) continue;
    const GeneratorAction& O = *tr.syzygies[d];
    // T M_g = O_g T, unknown T[r][s] at r * m + s
    const std::size_t n = m * m;
    std::vector<Vec> rows;
    for (std::size_t g = 0; g < M.mats.size(); ++g)
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
          Vec row(n);
          for (std::size_t s = 0; s < m; ++s) {
            row[r * m + s] = F.add(row[r * m + s], M.mats[g](s, c));
            row[s * m + c] = F.sub(row[s * m + c], O.mats[g](r, s));
          }
          rows.push_back(row);
        }
    auto sols = nullspace(F, Matrix::from_rows(rows, n));
    auto to_matrix = [&](const Vec& v) {
      Matrix T(m, m);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s) T(r, s) = v[r * m + s];
      return T;
    };
    std::vector<Vec> tries = sols;
    for (int k = 0; k < 32 && !sols.empty(); ++k) {
      Vec v(n);
      for (const auto& b : sols) axpy(F, v, F.element(static_cast<unsigned>(rng() % F.order())), b);
      tries.push_back(v);
    }
    for (const auto& v : tries) {
      if (determinant(F, to_matrix(v)).code) return d;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> NakayamaExt::dims(std::size_t maxdeg) const {
  std::vector<std::size_t> d(maxdeg + 1, 0);
  for (std::size_t i = 0; i <= maxdeg; ++i) {
    if (i % x_degree == 0) d[i] = 1;
    if (y_degree && i >= *y_degree && (i - *y_degree) % x_degree == 0) d[i] = 1;
  }
  return d;
}

NakayamaExt nakayama_ext_closed_form(std::size_t n, std::size_t t) {
  if (n < 2 || t < 2) throw Error(ErrorCode::InvalidParams, "closed form needs n > 1 and t >= 2");
  NakayamaExt e;
  std::size_t r = t % n;
  e.l1 = n / std::gcd(r, n);
  for (std::size_t l = 0; l < n; ++l) {
    if ((l * r + 1) % n == 0) {
      e.l2 = l;
      break;
    }
  }
  e.x_degree = 2 * e.l1;
  if (e.l2) {
    e.y_degree = 2 * *e.l2 + 1;
    e.ring = "k[x,y]/<y^2>, |x| = " + std::to_string(e.x_degree) + ", |y| = " + std::to_string(*e.y_degree);
  } else {
    e.ring = "k[x], |x| = " + std::to_string(e.x_degree);
  }
  return e;
}

BasicAlgebra nakayama_algebra(FieldPtr F, std::size_t n, std::size_t t) {
  // basis (i, l): path of length l starting at vertex i, index i * t + l
  const std::size_t d = n * t;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < t; ++l)
      labels.push_back(l == 0 ? "e" + std::to_string(i) : "a" + std::to_string(i) + (l > 1 ? "^" + std::to_string(l) : ""));
  Vec unit(d);
  for (std::size_t i = 0; i < n; ++i) unit[i * t] = F->one();
  auto product = [&](std::size_t a, std::size_t b) {
    std::size_t j = a / t, l2 = a % t, i = b / t, l1 = b % t;
    if ((i + l1) % n != j || l1 + l2 >= t) return SparseVec{};
    return SparseVec{Term{static_cast<std::uint32_t>(i * t + l1 + l2), F->one()}};
  };
  BasicAlgebra out;
  out.algebra = Algebra::from_product(F, labels, product, unit);
  out.rad = Subspace(d);
  std::vector<NamedElement> gens;
  for (std::size_t i = 0; i < n; ++i) {
    out.idempotents.push_back(unit_vec(d, i * t));
    if (t > 1) out.arrows.push_back(unit_vec(d, i * t + 1));
    for (std::size_t l = 1; l < t; ++l) out.rad.insert(*F, unit_vec(d, i * t + l));
  }
  for (std::size_t i = 0; i < out.arrows.size(); ++i) gens.push_back({"a" + std::to_string(i), out.arrows[i]});
  out.algebra.set_generators(gens);
  return out;
}

std::vector<std::size_t> nakayama_ext_generic(FieldPtr F, std::size_t n, std::size_t t, std::size_t maxdeg) {
  BasicAlgebra B = nakayama_algebra(F, n, t);
  ResolutionSetup s{&B.algebra, B.idempotents, B.rad, std::nullopt};
  ModuleRep S = simple_module(B.algebra, B.idempotents[0], B.rad);
  ResolutionOptions opt;
  opt.steps = maxdeg + 2;
  auto tr = minimal_resolution(s, S, opt);
  return ext_dims(s, tr, S, maxdeg);
}

std::vector<std::size_t> local_trivial_ext(const Algebra& A, const Subspace& rad, std::size_t maxdeg,
                                           const std::optional<Grading>& grading) {
  ResolutionSetup s{&A, {A.unit()}, rad, grading};
  ModuleRep k = trivial_module(A);
  if (grading) k.degrees = {Degree(grading->basis_degree[0].size(), 0)};
  ResolutionOptions opt;
  opt.steps = maxdeg + 2;
  opt.keep_syzygies_up_to = 0;
  auto tr = minimal_resolution(s, k, opt);
  return ext_dims(s, tr, k, maxdeg);
}

namespace {

Subspace augmentation(const Algebra& A) {
  std::vector<Vec> gens;
  for (const auto& g : A.generators()) gens.push_back(g.value);
  Subspace I = ideal_closure(A, gens);
  if (I.dim() + 1 != A.dim() || !ideal_is_nilpotent(A, I).nilpotent) {
    throw Error(ErrorCode::NotNilpotent, "generators do not span a nilpotent augmentation ideal");
  }
  return I;
}

}  // namespace

KunnethResult kunneth_check(const Algebra& A, const Algebra& B, std::size_t maxdeg) {
  KunnethResult r;
  auto a = local_trivial_ext(A, augmentation(A), maxdeg);
  auto b = local_trivial_ext(B, augmentation(B), maxdeg);
  Algebra T = tensor_product(A, B);
  r.tensor_dims = local_trivial_ext(T, augmentation(T), maxdeg);
  r.convolution.assign(maxdeg + 1, 0);
  for (std::size_t n = 0; n <= maxdeg; ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      std::size_t x = i < a.size() ? a[i] : 0, y = n - i < b.size() ? b[n - i] : 0;
      r.convolution[n] += x * y;
    }
  r.ok = r.tensor_dims == r.convolution;
  return r;
}

EckmannShapiroResult eckmann_shapiro_check(const Algebra& Lambda, const std::vector<Vec>& lambda_idempotents,
                                           const Subspace& lambda_rad, const Algebra& Gamma,
                                           const Subspace& gamma_rad, const std::vector<Vec>& inclusion,
                                           const std::vector<Vec>& right_basis, std::size_t maxdeg) {
  const Field& F = Lambda.field();
  // freeness: { r_k ι(b) } is a basis of Λ
  Subspace span(Lambda.dim());
  for (const auto& r : right_basis)
    for (const auto& img : inclusion) span.insert(F, Lambda.multiply(r, img));
  if (!span.is_whole() || right_basis.size() * Gamma.dim() != Lambda.dim()) {
    throw Error(ErrorCode::FreenessNotVerified, "the given elements are not a right basis of Λ over Γ");
  }
  Subspace whole_l(Lambda.dim()), whole_g(Gamma.dim());
  for (std::size_t i = 0; i < Lambda.dim(); ++i) whole_l.insert(F, Lambda.basis(i));
  for (std::size_t i = 0; i < Gamma.dim(); ++i) whole_g.insert(F, Gamma.basis(i));

  // Λ ⊗_Γ k = Λ / Λ ι(rad Γ)
  std::vector<Vec> rad_images;
  for (const auto& r : gamma_rad.basis()) {
    Vec img(Lambda.dim());
    for (std::size_t b = 0; b < Gamma.dim(); ++b)
      if (r[b].code) axpy(F, img, r[b], inclusion[b]);
    rad_images.push_back(img);
  }
  ModuleRep induced = subquotient_module(Lambda, whole_l, left_ideal(Lambda, rad_images));
  ModuleRep top = subquotient_module(Lambda, whole_l, lambda_rad);
  ResolutionOptions opt;
  opt.steps = maxdeg + 2;
  ResolutionSetup sl{&Lambda, lambda_idempotents, lambda_rad, std::nullopt};
  auto tl = minimal_resolution(sl, induced, opt);

  ModuleRep k = subquotient_module(Gamma, whole_g, gamma_rad);
  ModuleRep restricted = restrict_module(top, Gamma, inclusion);
  check_module(restricted);
  ResolutionSetup sg{&Gamma, {Gamma.unit()}, gamma_rad, std::nullopt};
  auto tg = minimal_resolution(sg, k, opt);

  EckmannShapiroResult res;
  res.lhs = ext_dims(sl, tl, top, maxdeg);
  res.rhs = ext_dims(sg, tg, restricted, maxdeg);
  res.ok = res.lhs == res.rhs && res.lhs.size() == maxdeg + 1;
  return res;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> binomial_series(std::size_t r, std::size_t maxdeg) {
  // C(i + r - 1, r - 1)
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= maxdeg; ++i) {
    std::size_t c = 1;
    for (std::size_t k = 1; k < r; ++k) c = c * (i + k) / k;
    out.push_back(c);
  }
  return out;
}

std::vector<std::size_t> indicator_series(std::size_t period, std::size_t maxdeg) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= maxdeg; ++i) out.push_back(i % period == 0 ? 1 : 0);
  return out;
}

namespace {

struct BlockClaim {
  std::optional<std::vector<std::size_t>> series;
  std::string text;
};

BlockClaim claim_for(Label label, unsigned p, bool matrix_block, std::size_t maxdeg) {
  if (matrix_block) return {indicator_series(maxdeg + 1, maxdeg), "matrix block: projective simple"};
  switch (label) {
    case Label::A1:
    case Label::C1:
      return {indicator_series(maxdeg + 1, maxdeg), "semisimple"};
    case Label::A2:
    case Label::C2:
    case Label::C8:
    case Label::C9:
      return {binomial_series(1, maxdeg), "truncated polynomial: one class per degree"};
    case Label::A4:
    case Label::C3:
    case Label::C7:
    case Label::C10:
      return {binomial_series(2, maxdeg), "Künneth of two truncated polynomial rings: n + 1"};
    case Label::A3:
    case Label::C4:
      return {binomial_series(3, maxdeg), "elementary abelian of rank 3: 1/(1-t)^3"};
    case Label::B2:
      return {indicator_series(2 * p, maxdeg), "k[x], |x| = " + std::to_string(2 * p)};
    case Label::C12:
    case Label::C13:
    case Label::C14:
      return {indicator_series(2, maxdeg), "k[x], |x| = 2"};
    case Label::A5:
      return {std::nullopt, p == 2 ? "related to semidihedral" : "unknown"};
    default:
      return {std::nullopt, "Noetherian-only"};
  }
}

}  // namespace

CohomologyReport cohomology_report(Label label, unsigned p, const Params& params, std::size_t maxdeg) {
  CohomologyReport rep;
  rep.label = label;
  rep.p = p;
  auto inst = presentation_catalog(label, p, params, params.lambda ? family_field(label, p, params) : nullptr);
  Algebra A = build_family_algebra(inst);
  auto claimed = claimed_radical_generators(A, label, p);
  if (!claimed) {
    rep.note = "no radical generators catalogued; resolution skipped";
    rep.blocks.push_back(ExtProfile{"all", {}, std::nullopt, claim_for(label, p, false, maxdeg).text, "skipped"});
    return rep;
  }
  Subspace rad = radical_certificate(A, *claimed).ideal;
  const bool local = rad.dim() + 1 == A.dim();
  std::vector<Vec> idems = local ? std::vector<Vec>{A.unit()}
                                 : primitive_idempotents_for(A, label, inst.params, p, rad).elems;
  auto blocks = central_primitive_idempotents(A);
  auto matrix = matrix_block_idempotents(A);
  ModuleRep T = trivial_module(A);
  const Field& F = A.field();
  rep.note = "Ext dimensions of the block simples; ring structure compared at Hilbert-series level";

  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const Vec& c = blocks[bi];
    ExtProfile prof;
    bool is_matrix = std::find(matrix.begin(), matrix.end(), c) != matrix.end();
    bool has_trivial = T.act(c)(0, 0) == F.one();
    prof.block = "block " + std::to_string(bi) + (has_trivial ? " (trivial module)" : "") + (is_matrix ? " (matrix)" : "");
    BlockClaim claim = claim_for(label, p, is_matrix, maxdeg);
    prof.claim = claim.text;
    if (is_matrix) {
      prof.dims = indicator_series(maxdeg + 1, maxdeg);
    } else {
      std::vector<Vec> in_block;
      for (const auto& e : idems)
        if (A.multiply(c, e) == e) in_block.push_back(e);
      if (in_block.empty()) throw Error(ErrorCode::IdempotentsNotPrimitive, "block without primitive idempotents");
      std::optional<Grading> grading;
      if (local) grading = presentation_grading(inst.presentation, A);
      ResolutionSetup s{&A, in_block, rad, grading};
      ModuleRep S = has_trivial ? T : simple_module(A, in_block[0], rad);
      if (grading && has_trivial) S.degrees = {Degree(grading->basis_degree[0].size(), 0)};
      ResolutionOptions opt;
      opt.steps = maxdeg + 2;
      opt.keep_syzygies_up_to = 16;
      auto tr = minimal_resolution(s, S, opt);
      prof.dims = ext_dims(s, tr, S, maxdeg);
      prof.period = periodicity_detect(tr);
    }
    if (!claim.series) {
      prof.status = prof.dims.size() == maxdeg + 1 ? "log-only" : "truncated";
    } else if (prof.dims == *claim.series) {
      prof.status = "match";
    } else {
      throw Error(ErrorCode::ClaimMismatch, to_string(label) + " " + prof.block + ": Ext dimensions disagree with " + claim.text);
    }
    rep.blocks.push_back(prof);
  }
  return rep;
}

}  // namespace p3
