#include "rmw/stable.hpp"

#include <deque>

namespace rmw {

namespace {

// u: A -> B with g o u = h, where g: B -> C and h: A -> C.
std::optional<ModuleMap> factor_post(const Module& A, const Module& B, const Module& C, const ModuleMap& g,
                                     const ModuleMap& h) {
  Mat H = hom_basis(A, B);
  const int n = flat_size(A, C);
  Vec target = flatten(A, C, h);
  if (H.cols() == 0) {
    if (vzero(target)) return zero_map(A, B);
    return std::nullopt;
  }
  Mat M(n, H.cols());
  for (int k = 0; k < H.cols(); ++k) M.set_col(k, flatten(A, C, compose(g, unflatten(A, B, H.col(k)))));
  auto c = solve(M, target);
  if (!c) return std::nullopt;
  return unflatten(A, B, H * *c);
}

// u: B -> C with u o g = h, where g: A -> B and h: A -> C.
std::optional<ModuleMap> factor_pre(const Module& A, const Module& B, const Module& C, const ModuleMap& g,
                                    const ModuleMap& h) {
  Mat H = hom_basis(B, C);
  const int n = flat_size(A, C);
  Vec target = flatten(A, C, h);
  if (H.cols() == 0) {
    if (vzero(target)) return zero_map(B, C);
    return std::nullopt;
  }
  Mat M(n, H.cols());
  for (int k = 0; k < H.cols(); ++k) M.set_col(k, flatten(A, C, compose(unflatten(B, C, H.col(k)), g)));
  auto c = solve(M, target);
  if (!c) return std::nullopt;
  return unflatten(B, C, H * *c);
}

ModuleMap must(std::optional<ModuleMap> m, const char* what) {
  if (!m) throw Error("InternalError", what);
  return *m;
}

Mat row_annihilator(const Mat& W, int n) {
  if (W.cols() == 0) return Mat::identity(n);
  Mat L = left_annihilator(W);
  return L.rows() ? L : Mat(0, n);
}

}  // namespace

ARSequence ar_sequence(const Module& X) {
  AlgebraPtr A = X.alg;
  Cover pc = proj_cover(X);
  const Module& P = pc.P;
  SubModule om = kernel(P, X, pc.map);
  const Module& OX = om.sub;
  const ModuleMap& iota = om.incl;
  ARSequence ar;
  ar.tauX = strip_projectives(syzygy(syzygy(nakayama(X))));
  const Module& TX = ar.tauX;
  // Ext^1(X, tau X) = Hom(Omega X, tau X) / (maps extending to P).
  Mat V = hom_basis(OX, TX);
  const int n = flat_size(OX, TX);
  Mat Wraw(n, 0);
  {
    Mat HP = hom_basis(P, TX);
    for (int k = 0; k < HP.cols(); ++k) {
      Mat col(n, 1);
      col.set_col(0, flatten(OX, TX, compose(unflatten(P, TX, HP.col(k)), iota)));
      Wraw = Mat::hcat(Wraw, col);
    }
  }
  Mat W = Wraw.cols() ? colspace(Wraw) : Wraw;
  Mat L = row_annihilator(W, n);
  // The almost split class is annihilated by rad End(X).
  Mat E = hom_basis(X, X);
  Mat R = end_radical(X, E);
  Mat cons(0, V.cols());
  for (int r = 0; r < R.cols(); ++r) {
    ModuleMap rx = unflatten(X, X, R.col(r));
    ModuleMap rt = must(factor_post(P, P, X, pc.map, compose(rx, pc.map)), "lift of an endomorphism");
    ModuleMap ro = must(factor_post(OX, OX, P, iota, compose(rt, iota)), "restriction to the syzygy");
    Mat Mr(n, V.cols());
    for (int k = 0; k < V.cols(); ++k) Mr.set_col(k, flatten(OX, TX, compose(unflatten(OX, TX, V.col(k)), ro)));
    if (L.rows()) cons = Mat::vcat(cons, L * Mr);
  }
  Mat K = cons.rows() ? nullspace(cons) : Mat::identity(V.cols());
  Vec chosen;
  for (int c = 0; c < K.cols() && chosen.empty(); ++c) {
    Vec v = V * K.col(c);
    if (!vzero(L * v)) chosen = v;
  }
  if (chosen.empty()) throw Error("InternalError", "no almost split extension found");
  ModuleMap v = unflatten(OX, TX, chosen);
  DirectSum ds = direct_sum(A, {TX, P});
  ModuleMap push = add_maps(compose(ds.incl[0], v), scale_map(Q(-1), compose(ds.incl[1], iota)));
  QuotModule q = cokernel(OX, ds.sum, push);
  ar.E = q.quot;
  ar.f = compose(q.proj, ds.incl[0]);
  ModuleMap h = compose(pc.map, ds.proj[1]);
  ar.g = must(factor_pre(ds.sum, ar.E, X, q.proj, h), "map to X from the pushout");
  return ar;
}

std::shared_ptr<QuiverAlgebra> preprojective_A(int n) {
  std::vector<std::string> vs;
  std::vector<Arrow> as;
  for (int i = 0; i < n; ++i) vs.push_back(std::to_string(i + 1));
  // a_i: i -> i+1 and b_i: i+1 -> i.
  for (int i = 0; i + 1 < n; ++i) {
    as.push_back(Arrow{"a" + std::to_string(i + 1), i, i + 1});
    as.push_back(Arrow{"b" + std::to_string(i + 1), i + 1, i});
  }
  auto a = [](int i) { return 2 * i; };
  auto b = [](int i) { return 2 * i + 1; };
  std::vector<Relation> rels;
  for (int v = 0; v < n; ++v) {
    Relation r;
    if (v + 1 < n) r.terms.push_back(RelationTerm{Q(1), {a(v), b(v)}});       // v -> v+1 -> v
    if (v > 0) r.terms.push_back(RelationTerm{Q(-1), {b(v - 1), a(v - 1)}});  // v -> v-1 -> v
    if (!r.terms.empty()) rels.push_back(r);
  }
  return build_algebra(vs, as, rels);
}

int StableCategory::find(const Module& M) const {
  for (int x = 0; x < size(); ++x)
    if (mods_[x].dim == M.dim && find_iso(mods_[x], M)) return x;
  return -1;
}

Obj StableCategory::decompose_stable(const Module& M) const {
  Obj out;
  if (M.total_dim() == 0) return out;
  for (const auto& s : decompose(M)) {
    if (is_projective_indec(s.mod)) continue;
    const int x = find(s.mod);
    if (x < 0) throw Error("InternalError", "summand outside the stable catalog");
    out.push_back(x);
  }
  return sorted(out);
}

ModuleMap StableCategory::representative(int x, int y, const Vec& coords) const {
  ModuleMap f = zero_map(mods_[x], mods_[y]);
  const auto& B = basis_[idx(x, y)];
  for (size_t b = 0; b < B.size(); ++b)
    if (sgn(coords[b]) != 0) f = add_maps(f, scale_map(coords[b], B[b]));
  return f;
}

Vec StableCategory::reduce(int x, int y, const ModuleMap& f) const {
  const size_t k = idx(x, y);
  const int d = static_cast<int>(basis_[k].size());
  if (d == 0) return Vec();
  auto c = solve(reducer_[k], flatten(mods_[x], mods_[y], f));
  if (!c) throw Error("InternalError", "map outside Hom space");
  return Vec(c->begin() + ph_cols_[k], c->end());
}

ModuleMap StableCategory::random_projective_map(int x, int y, Rng& rng) const {
  const Mat& P = ph_[idx(x, y)];
  if (P.cols() == 0) return zero_map(mods_[x], mods_[y]);
  return unflatten(mods_[x], mods_[y], P * rng.random_vec(P.cols()));
}

Obj StableCategory::cone_pushout(int x, int y, const ModuleMap& f) const {
  const Module& X = mods_[x];
  const Module& Y = mods_[y];
  Cover ih = inj_hull(X);
  DirectSum ds = direct_sum(A_, {Y, ih.P});
  ModuleMap m = add_maps(compose(ds.incl[0], f), scale_map(Q(-1), compose(ds.incl[1], ih.map)));
  QuotModule q = cokernel(X, ds.sum, m);
  return decompose_stable(q.quot);
}

StableCategory::StableCategory(AlgebraPtr A, int max_objects) : A_(std::move(A)) {
  const QuiverAlgebra& Alg = *A_;
  if (!Alg.self_injective()) throw Error("NotSelfInjective", "stable category requires a self-injective algebra");
  // Knit: start from the non-projective simples and close under AR sequences.
  std::deque<int> queue;
  auto add_module = [&](const Module& M) {
    int x = find(M);
    if (x >= 0) return x;
    if (size() >= max_objects) throw Error("CatalogTooLarge", "more than " + std::to_string(max_objects) + " objects");
    mods_.push_back(M);
    queue.push_back(size() - 1);
    return size() - 1;
  };
  for (int v = 0; v < Alg.num_vertices(); ++v) {
    Module S = simple_module(A_, v);
    if (!is_projective_indec(S)) add_module(S);
  }
  std::vector<std::vector<std::pair<int, int>>> into;  // per target: (source, multiplicity)
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    ARSequence ar = ar_sequence(mods_[x]);
    add_module(ar.tauX);
    std::vector<std::pair<int, int>> arr;
    for (const auto& s : decompose(ar.E)) {
      if (is_projective_indec(s.mod)) continue;
      const int y = add_module(s.mod);
      bool found = false;
      for (auto& [src, mult] : arr)
        if (src == y) {
          ++mult;
          found = true;
        }
      if (!found) arr.emplace_back(y, 1);
    }
    if (static_cast<int>(into.size()) <= x) into.resize(x + 1);
    into[x] = arr;
  }
  const int N = size();
  into.resize(N);
  arrows_.assign(N, std::vector<int>(N, 0));
  for (int x = 0; x < N; ++x)
    for (auto [y, m] : into[x]) arrows_[y][x] += m;

  // Stable Hom spaces.
  std::vector<Cover> pcov(N);
  for (int y = 0; y < N; ++y) pcov[y] = proj_cover(mods_[y]);
  basis_.assign(static_cast<size_t>(N) * N, {});
  reducer_.assign(static_cast<size_t>(N) * N, Mat());
  ph_cols_.assign(static_cast<size_t>(N) * N, 0);
  ph_.assign(static_cast<size_t>(N) * N, Mat());
  std::vector<std::string> names;
  for (int x = 0; x < N; ++x) names.push_back("M" + std::to_string(x + 1) + "[" + mods_[x].dim_vector() + "]");
  FinCat C(names);
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      const Module& Mx = mods_[x];
      const Module& My = mods_[y];
      const int n = flat_size(Mx, My);
      Mat H = hom_basis(Mx, My);
      Mat PHraw(n, 0);
      Mat G = hom_basis(Mx, pcov[y].P);
      for (int k = 0; k < G.cols(); ++k) {
        Mat col(n, 1);
        col.set_col(0, flatten(Mx, My, compose(pcov[y].map, unflatten(Mx, pcov[y].P, G.col(k)))));
        PHraw = Mat::hcat(PHraw, col);
      }
      Mat PH = PHraw.cols() ? colspace(PHraw) : PHraw;
      if (PH.cols() && PH.rows() == 0) PH = Mat(n, 0);
      const size_t k = idx(x, y);
      ph_[k] = PH;
      std::vector<Vec> st;
      if (H.cols()) {
        Mat both = Mat::hcat(PH, H);
        for (int c : independent_cols(both))
          if (c >= PH.cols()) st.push_back(both.col(c));
      }
      for (const auto& v : st) basis_[k].push_back(unflatten(Mx, My, v));
      ph_cols_[k] = PH.cols();
      reducer_[k] = st.empty() ? PH : Mat::hcat(PH, Mat::from_cols(st, n));
      C.set_dim(x, y, static_cast<int>(st.size()));
    }
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      const int dxy = C.dim(x, y);
      if (dxy == 0) continue;
      for (int z = 0; z < N; ++z) {
        const int dyz = C.dim(y, z);
        if (dyz == 0) continue;
        Mat T(C.dim(x, z), dxy * dyz);
        for (int a = 0; a < dxy; ++a)
          for (int b = 0; b < dyz; ++b) {
            Vec c = reduce(x, z, compose(basis_[idx(y, z)][b], basis_[idx(x, y)][a]));
            for (int r = 0; r < T.rows(); ++r) T(r, a * dyz + b) = c[r];
          }
        C.set_table(x, y, z, std::move(T));
      }
    }
  for (int x = 0; x < N; ++x) {
    if (C.dim(x, x) == 0) throw Error("InternalError", "stably zero catalog object");
    C.set_id(x, reduce(x, x, identity_map(mods_[x])));
  }

  // Suspension Omega^{-1} and its inverse Omega, with identifying isos.
  std::vector<int> sig(N), sinv(N), tau(N), serre(N);
  std::vector<Cover> hull(N);
  std::vector<QuotModule> cok(N);
  std::vector<SubModule> ker(N);
  std::vector<ModuleMap> phi(N), phi_inv(N);
  for (int x = 0; x < N; ++x) {
    hull[x] = inj_hull(mods_[x]);
    cok[x] = cokernel(mods_[x], hull[x].P, hull[x].map);
    sig[x] = find(cok[x].quot);
    if (sig[x] < 0) throw Error("InternalError", "catalog not closed under Sigma");
    phi[x] = *find_iso(mods_[sig[x]], cok[x].quot);
    phi_inv[x] = *map_inverse(phi[x]);
    ker[x] = kernel(pcov[x].P, mods_[x], pcov[x].map);
    sinv[x] = find(ker[x].sub);
    if (sinv[x] < 0) throw Error("InternalError", "catalog not closed under Sigma^{-1}");
    tau[x] = find(strip_projectives(syzygy(syzygy(nakayama(mods_[x])))));
    if (tau[x] < 0) throw Error("InternalError", "catalog not closed under tau");
  }
  for (int x = 0; x < N; ++x) serre[x] = tau[sig[x]];
  C.set_sigma(sig);
  for (int x = 0; x < N; ++x)
    if (C.sigma_inv(x) != sinv[x]) throw Error("InternalError", "Omega and Omega^{-1} are not inverse on the catalog");
  C.set_tau(tau);
  C.set_serre(serre);
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      const int d = C.dim(x, y);
      Mat S(C.dim(sig[x], sig[y]), d);
      for (int b = 0; b < d; ++b) {
        const ModuleMap& f = basis_[idx(x, y)][b];
        ModuleMap F = must(factor_pre(mods_[x], hull[x].P, hull[y].P, hull[x].map, compose(hull[y].map, f)),
                           "extension to injective hulls");
        ModuleMap c = must(factor_pre(hull[x].P, cok[x].quot, cok[y].quot, cok[x].proj, compose(cok[y].proj, F)),
                           "induced map on cosyzygies");
        S.set_col(b, reduce(sig[x], sig[y], compose(phi_inv[y], compose(c, phi[x]))));
      }
      C.set_sigma_mor(x, y, S);
    }
  // Sigma^{-1} on morphisms is the exact inverse of Sigma.
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      const Mat& S = C.sigma_mor(sinv[x], sinv[y]);
      if (S.rows() == 0) {
        C.set_sigma_inv_mor(x, y, Mat(0, 0));
        continue;
      }
      auto inv = inverse(S);
      if (!inv) throw Error("InternalError", "Sigma is not bijective on a Hom space");
      C.set_sigma_inv_mor(x, y, *inv);
    }
  // Trace functional: any functional that is nonzero on the socle of
  // Hom(x, Sx) as a right End(x)-module (the maps killed by rad End(x));
  // perfectness of the resulting pairing is checked by the caller.
  C.finalize();
  for (int x = 0; x < N; ++x) {
    const int s = serre[x];
    const int d = C.dim(x, s);
    if (d == 0) throw Error("SerreViolation", "Hom(x, Sx) = 0 for " + C.name(x));
    const Mat& R = C.rad(x, x);
    Mat cons(0, d);
    for (int r = 0; r < R.cols(); ++r) {
      Mat m(d, d);
      for (int a = 0; a < d; ++a) m.set_col(a, C.compose(x, x, s, R.col(r), unit_vec(d, a)));
      cons = Mat::vcat(cons, m);
    }
    Mat soc = cons.rows() ? nullspace(cons) : Mat::identity(d);
    if (soc.cols() != 1) throw Error("SerreViolation", "socle of Hom(x, Sx) is not simple at " + C.name(x));
    int at = 0;
    while (sgn(soc(at, 0)) == 0) ++at;
    C.set_trace(x, unit_vec(d, at));
  }
  cat_ = make_category(std::move(C));
}

}  // namespace rmw
