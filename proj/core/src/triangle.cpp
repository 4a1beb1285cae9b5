#include "rmw/triangle.hpp"

#include <algorithm>
#include <set>

namespace rmw {

namespace {

Morph single(int x, int y, const Vec& v) { return Morph{{x}, {y}, {v}}; }

Mat stack_rows(const std::vector<Mat>& parts, int cols) {
  Mat acc(0, cols);
  for (const auto& p : parts)
    if (p.rows() > 0) acc = Mat::vcat(acc, p);
  return acc;
}


// Fallback for the cone: the long exact Hom sequence fixes dim Hom(W, Z) for
// every W; every object with that dimension vector is tried with generic
// maps g (g f = 0) and h (h g = 0, (Sigma f) h = 0) until the triangle is
// certified exact.
std::optional<Triangle> cone_by_dimension(const FinCat& C, const Morph& f) {
  const int n = C.size();
  const Obj SX = C.sigma(f.src);
  const Morph sf = C.sigma(f);
  std::vector<int> want(n);
  for (int W = 0; W < n; ++W) {
    const Obj w{W};
    const int dy = hom_dim(C, w, f.tgt), dsx = hom_dim(C, w, SX);
    const int ra = (dy && hom_dim(C, w, f.src)) ? rank(post_mat(C, f, w)) : 0;
    const int rd = (dsx && hom_dim(C, w, sf.tgt)) ? rank(post_mat(C, sf, w)) : 0;
    want[W] = (dy - ra) + (dsx - rd);
  }
  // Non-negative integer solutions of sum_V m_V dim(W, V) = want_W.
  std::vector<std::vector<int>> sols;
  std::vector<int> m(n, 0), acc(n, 0);
  auto rec = [&](auto&& self, int V) -> void {
    if (sols.size() >= 64) return;
    if (V == n) {
      if (acc == want) sols.push_back(m);
      return;
    }
    for (int k = 0;; ++k) {
      bool ok = true;
      for (int W = 0; W < n && ok; ++W) ok = acc[W] + k * C.dim(W, V) <= want[W];
      if (!ok) break;
      m[V] = k;
      for (int W = 0; W < n; ++W) acc[W] += k * C.dim(W, V);
      self(self, V + 1);
      for (int W = 0; W < n; ++W) acc[W] -= k * C.dim(W, V);
      m[V] = 0;
      if (C.dim(V, V) == 0) break;
    }
  };
  rec(rec, 0);
  Rng rng(0xfa11);
  for (const auto& sol : sols) {
    Obj Z;
    for (int V = 0; V < n; ++V)
      for (int k = 0; k < sol[V]; ++k) Z.push_back(V);
    const int hyz = hom_dim(C, f.tgt, Z);
    Mat Ng = hyz ? (hom_dim(C, f.src, Z) ? nullspace(pre_mat(C, f, Z)) : Mat::identity(hyz)) : Mat(0, 0);
    for (int attempt = 0; attempt < 8; ++attempt) {
      Triangle t;
      t.X = f.src;
      t.Y = f.tgt;
      t.Z = Z;
      t.f = f;
      Vec cg(Ng.cols());
      for (auto& c : cg) c = rng.small_q();
      t.g = unflat(C, f.tgt, Z, Ng.cols() ? Ng * cg : Vec(hyz));
      const int hzx = hom_dim(C, Z, SX);
      Mat Nh(hzx, 0);
      if (hzx > 0) {
        Mat A = hom_dim(C, f.tgt, SX) ? pre_mat(C, t.g, SX) : Mat(0, hzx);
        Mat B = hom_dim(C, Z, sf.tgt) ? post_mat(C, sf, Z) : Mat(0, hzx);
        Mat stack = Mat::vcat(A, B);
        Nh = stack.rows() ? nullspace(stack) : Mat::identity(hzx);
      }
      Vec ch(Nh.cols());
      for (auto& c : ch) c = rng.small_q();
      t.h = unflat(C, Z, SX, Nh.cols() ? Nh * ch : Vec(hzx));
      if (check_exact(C, t).empty()) return t;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<int> distinct(const Obj& X) {
  std::set<int> s(X.begin(), X.end());
  return std::vector<int>(s.begin(), s.end());
}

bool in_add(const Obj& X, const std::vector<int>& G) {
  for (int x : X)
    if (std::find(G.begin(), G.end(), x) == G.end()) return false;
  return true;
}

Triangle cone(const FinCat& C, const Morph& f) {
  const Obj& X = f.src;
  const Obj& Y = f.tgt;
  const int n = C.size();
  // Image of Hom(W, f) for every indecomposable W, and its annihilator.
  std::vector<Mat> img(n), ann(n);
  for (int W = 0; W < n; ++W) {
    const int hy = hom_dim(C, {W}, Y);
    Mat P = post_mat(C, f, {W});
    img[W] = (P.cols() && hy) ? colspace(P) : Mat(hy, 0);
    ann[W] = hy ? (img[W].cols() ? left_annihilator(img[W]) : Mat::identity(hy)) : Mat(0, 0);
  }
  // Part 1: socle of the functor F = Hom(-,Y)/Im.
  Obj Z1;
  std::vector<Morph> psi;  // Y -> S W
  for (int W = 0; W < n; ++W) {
    const int hy = hom_dim(C, {W}, Y);
    if (hy == 0) continue;
    std::vector<Mat> cons;
    for (int W2 = 0; W2 < n; ++W2) {
      const Mat& R = C.rad(W2, W);
      if (R.cols() == 0 || ann[W2].rows() == 0) continue;
      for (int r = 0; r < R.cols(); ++r) {
        Mat pre = pre_mat(C, single(W2, W, R.col(r)), Y);  // Hom(W,Y) -> Hom(W2,Y)
        cons.push_back(ann[W2] * pre);
      }
    }
    Mat socpre = cons.empty() ? Mat::identity(hy) : nullspace(stack_rows(cons, hy));
    const int r0 = img[W].cols();
    const int s = socpre.cols() - r0;
    if (s <= 0) continue;
    Mat both = Mat::hcat(img[W], socpre);
    auto ind = independent_cols(both);
    std::vector<Vec> reps;
    for (int c : ind)
      if (c >= r0) reps.push_back(both.col(c));
    if (static_cast<int>(reps.size()) != s) throw Error("InternalError", "cone: socle representatives");
    Mat M = Mat::hcat(img[W], Mat::from_cols(reps, hy));  // hy x (r0 + s)
    const int SW = C.serre(W);
    const Obj Sobj{SW};
    // Pairing P(u, psi) = tr_W(psi o u), u in Hom(W,Y), psi in Hom(Y, SW).
    const int hp = hom_dim(C, Y, Sobj);
    Mat Pair(hy, hp);
    for (int k = 0; k < hp; ++k) {
      Morph ps = unflat(C, Y, Sobj, unit_vec(hp, k));
      Mat pm = post_mat(C, ps, {W});  // Hom(W,Y) -> Hom(W,SW)
      Mat tr = Mat::from_rows({C.trace(W)}, C.dim(W, SW)) * pm;  // 1 x hy
      for (int u = 0; u < hy; ++u) Pair(u, k) = tr(0, u);
    }
    for (int j = 0; j < s; ++j) {
      Vec rhs(r0 + s);
      rhs[r0 + j] = 1;
      auto lam = solve(M.transpose(), rhs);
      if (!lam) throw Error("InternalError", "cone: dual functional");
      auto coef = solve(Pair, *lam);
      if (!coef) throw Error("SerreViolation", "cone: Serre pairing not perfect at " + C.name(W));
      Z1.push_back(SW);
      psi.push_back(unflat(C, Y, Sobj, *coef));
    }
  }
  // Part 2: Sigma V summands from the kernel of Hom(V, f).
  Obj Z2;
  std::vector<Morph> vs;  // V -> X
  for (int V = 0; V < n; ++V) {
    const int hx = hom_dim(C, {V}, X);
    if (hx == 0) continue;
    Mat P = post_mat(C, f, {V});
    Mat K = P.rows() ? nullspace(P) : Mat::identity(hx);
    if (K.cols() == 0) continue;
    const int U = C.serre_inv(V);
    Mat pre = pre_mat(C, single(U, V, C.socle_element(V)), X);  // Hom(V,X) -> Hom(U,X)
    Mat imgs = pre * K;
    for (int c : independent_cols(imgs)) {
      Z2.push_back(C.sigma(V));
      vs.push_back(unflat(C, {V}, X, K.col(c)));
    }
  }
  Triangle t;
  t.X = X;
  t.Y = Y;
  t.Z = concat(Z1, Z2);
  t.f = f;
  const Obj SX = C.sigma(X);
  // g = [psi; 0].
  t.g = zero_morph(C, Y, t.Z);
  for (size_t j = 0; j < psi.size(); ++j)
    for (size_t i = 0; i < Y.size(); ++i) t.g.at(static_cast<int>(j), static_cast<int>(i)) = psi[j].at(0, static_cast<int>(i));
  // h2 = Sigma v.
  Morph h2 = zero_morph(C, Z2, SX);
  for (size_t c = 0; c < vs.size(); ++c) {
    Morph sv = C.sigma(vs[c]);
    for (size_t i = 0; i < SX.size(); ++i) h2.at(static_cast<int>(i), static_cast<int>(c)) = sv.at(static_cast<int>(i), 0);
  }
  // h1: generic solution of h1 g1 = 0, (Sigma f) h1 = 0.
  Morph g1 = zero_morph(C, Y, Z1);
  for (size_t j = 0; j < psi.size(); ++j)
    for (size_t i = 0; i < Y.size(); ++i) g1.at(static_cast<int>(j), static_cast<int>(i)) = psi[j].at(0, static_cast<int>(i));
  const int hz1 = hom_dim(C, Z1, SX);
  Mat N(hz1, 0);
  if (hz1 > 0) {
    Mat A = pre_mat(C, g1, SX);
    Mat B = post_mat(C, C.sigma(f), Z1);
    Mat stack = Mat::vcat(A.rows() ? A : Mat(0, hz1), B.rows() ? B : Mat(0, hz1));
    N = stack.rows() ? nullspace(stack) : Mat::identity(hz1);
  }
  Rng rng(0xc0de);
  std::string last_err;
  for (int attempt = 0; attempt < 12; ++attempt) {
    Vec coef(N.cols());
    for (auto& c : coef) c = attempt == 0 ? Q(1) : rng.small_q();
    Morph h1 = unflat(C, Z1, SX, N.cols() ? N * coef : Vec(hz1));
    t.h = hstack(C, h1, h2);
    last_err = check_exact(C, t);
    if (last_err.empty()) return t;
  }
  if (auto alt = cone_by_dimension(C, f)) return *alt;
  throw Error("ConeFailure", "no exact triangle found for the cone: " + last_err);
}

Triangle cocone(const FinCat& C, const Morph& f) {
  const FinCat& D = C.op();
  Triangle to = cone(D, to_op(f));  // in C^op: Y -> X -> Z' -> Sigma^{-1} Y
  Triangle t;
  t.Z = f.tgt;
  t.Y = f.src;
  t.X = to.Z;
  t.f = to_op(to.g);  // Z' -> X
  t.g = f;
  Morph d = to_op(to.h);  // Sigma^{-1} Y -> Z'
  t.h = C.sigma(d);        // Y -> Sigma Z'
  return t;
}

std::string check_exact(const FinCat& C, const Triangle& t) {
  if (!is_zero(compose(C, t.g, t.f))) return "g f != 0";
  if (!is_zero(compose(C, t.h, t.g))) return "h g != 0";
  Morph sf = C.sigma(t.f);
  if (!is_zero(compose(C, sf, t.h))) return "(Sigma f) h != 0";
  for (int W = 0; W < C.size(); ++W) {
    const Obj w{W};
    const int dy = hom_dim(C, w, t.Y), dz = hom_dim(C, w, t.Z), dsx = hom_dim(C, w, sf.src);
    const int ra = rank(post_mat(C, t.f, w));
    const int rb = rank(post_mat(C, t.g, w));
    const int rc = rank(post_mat(C, t.h, w));
    const int rd = rank(post_mat(C, sf, w));
    if (ra + rb != dy) return "not exact at Y for W=" + C.name(W);
    if (rb + rc != dz) return "not exact at Z for W=" + C.name(W);
    if (rc + rd != dsx) return "not exact at Sigma X for W=" + C.name(W);
  }
  return "";
}

Approx min_right_approx(const LinCat& C, const Obj& X, const std::vector<int>& G) {
  Approx ap;
  std::vector<Morph> cols;
  for (int g : distinct(G)) {
    const int h = hom_dim(C, {g}, X);
    if (h == 0) continue;
    Mat radG(h, 0);
    for (int g2 : distinct(G)) {
      const Mat& R = C.rad(g, g2);
      if (R.cols() == 0 || hom_dim(C, {g2}, X) == 0) continue;
      for (int r = 0; r < R.cols(); ++r) radG = Mat::hcat(radG, pre_mat(C, single(g, g2, R.col(r)), X));
    }
    Mat base = radG.cols() ? colspace(radG) : radG;
    Mat comp = complement_basis(base, h);
    for (int c = 0; c < comp.cols(); ++c) {
      ap.A.push_back(g);
      cols.push_back(unflat(C, {g}, X, comp.col(c)));
    }
  }
  ap.map = zero_morph(C, ap.A, X);
  for (size_t c = 0; c < cols.size(); ++c)
    for (size_t j = 0; j < X.size(); ++j) ap.map.at(static_cast<int>(j), static_cast<int>(c)) = cols[c].at(static_cast<int>(j), 0);
  return ap;
}

Approx min_left_approx(const FinCat& C, const Obj& X, const std::vector<int>& G) {
  Approx a = min_right_approx(C.op(), X, G);
  return Approx{a.A, to_op(a.map)};
}

bool is_right_minimal(const LinCat& C, const Morph& alpha) {
  const Obj& A = alpha.src;
  const int d = hom_dim(C, A, A);
  if (d == 0) return true;
  Mat P = post_mat(C, alpha, A);
  Mat K = P.rows() ? nullspace(P) : Mat::identity(d);
  for (int c = 0; c < K.cols(); ++c) {
    Morph phi = unflat(C, A, A, K.col(c));
    for (size_t j = 0; j < A.size(); ++j)
      for (size_t i = 0; i < A.size(); ++i)
        if (A[i] == A[j] && sgn(dot(C.augmentation(A[i]), phi.at(static_cast<int>(j), static_cast<int>(i)))) != 0)
          return false;
  }
  return true;
}

bool is_right_approx(const LinCat& C, const Morph& alpha, const std::vector<int>& G) {
  for (int g : distinct(G)) {
    const int h = hom_dim(C, {g}, alpha.tgt);
    if (h == 0) continue;
    Mat P = post_mat(C, alpha, {g});
    if (rank(P) != h) return false;
  }
  return true;
}

std::optional<Morph> factor_through(const LinCat& C, const Morph& alpha, const Morph& f) {
  const int d = hom_dim(C, f.src, alpha.src);
  if (d == 0) {
    if (is_zero(f)) return zero_morph(C, f.src, alpha.src);
    return std::nullopt;
  }
  Mat P = post_mat(C, alpha, f.src);
  auto u = solve(P, flat(f));
  if (!u) return std::nullopt;
  return unflat(C, f.src, alpha.src, *u);
}

std::optional<Morph> factor_through_left(const LinCat& C, const Morph& beta, const Morph& f) {
  const int d = hom_dim(C, beta.tgt, f.tgt);
  if (d == 0) {
    if (is_zero(f)) return zero_morph(C, beta.tgt, f.tgt);
    return std::nullopt;
  }
  Mat P = pre_mat(C, beta, f.tgt);
  auto v = solve(P, flat(f));
  if (!v) return std::nullopt;
  return unflat(C, beta.tgt, f.tgt, *v);
}

std::optional<IdealWitness> ideal_membership(const LinCat& C, const Morph& f, const std::vector<int>& G) {
  Approx ap = min_right_approx(C, f.tgt, G);
  auto u = factor_through(C, ap.map, f);
  if (!u) return std::nullopt;
  return IdealWitness{*u, ap.map};
}

}  // namespace rmw
