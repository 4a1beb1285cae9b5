#include "rmw/rigid.hpp"

#include <algorithm>
#include <functional>

namespace rmw {

namespace {

// Rows: concatenation over g in G of the matrix of Hom(g, phi), flattened.
Mat action_rows(const LinCat& C, const Obj& G, const Morph& phi) {
  std::vector<Q> out;
  for (int g : distinct(G)) {
    if (hom_dim(C, {g}, phi.src) == 0 || hom_dim(C, {g}, phi.tgt) == 0) continue;
    Mat P = post_mat(C, phi, {g});
    for (int r = 0; r < P.rows(); ++r)
      for (int c = 0; c < P.cols(); ++c) out.push_back(P(r, c));
  }
  Mat m(static_cast<int>(out.size()), 1);
  for (size_t i = 0; i < out.size(); ++i) m(static_cast<int>(i), 0) = out[i];
  return m;
}

// The positions of X whose entries lie outside `drop`.
std::vector<int> positions_outside(const Obj& X, const Sub& drop) {
  std::vector<int> pos;
  for (size_t i = 0; i < X.size(); ++i)
    if (!sub_contains(drop, X[i])) pos.push_back(static_cast<int>(i));
  return pos;
}

}  // namespace

bool is_rigid(const FinCat& C, const Obj& X) { return hom_dim(C, X, C.sigma(X)) == 0; }

bool is_basic(const Obj& X) { return distinct(X).size() == X.size(); }

bool is_cluster_tilting(const FinCat& C, const Obj& X) {
  if (X.empty()) return C.size() == 0;
  if (!is_rigid(C, X)) return false;
  const Sub add = make_sub(X);
  for (int y = 0; y < C.size(); ++y) {
    if (sub_contains(add, y)) continue;
    Obj XY = concat(X, {y});
    if (is_rigid(C, XY)) return false;
  }
  return true;
}

std::vector<Obj> enumerate_basic_rigid(const FinCat& C) {
  const int n = C.size();
  std::vector<bool> self(n);
  for (int x = 0; x < n; ++x) self[x] = C.dim(x, C.sigma(x)) == 0;
  std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) ok[x][y] = C.dim(x, C.sigma(y)) == 0 && C.dim(y, C.sigma(x)) == 0;
  std::vector<Obj> out;
  Obj cur;
  std::function<void(int)> rec = [&](int start) {
    out.push_back(cur);
    for (int y = start; y < n; ++y) {
      if (!self[y]) continue;
      bool good = true;
      for (int x : cur) good = good && ok[x][y];
      if (!good) continue;
      cur.push_back(y);
      rec(y + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

Obj complement_summand(const Obj& T, const Obj& R) {
  Obj rest = T;
  for (int r : R) {
    auto it = std::find(rest.begin(), rest.end(), r);
    if (it == rest.end()) throw InputError("NotASummand", "R is not a summand of T");
    rest.erase(it);
  }
  return rest;
}

Mutation mutate(const FinCat& C, const Obj& T, const Obj& R) {
  if (!is_basic(T)) throw InputError("NotBasic", "T must be basic");
  if (!is_rigid(C, T)) throw InputError("NotRigid", "T must be rigid");
  Mutation m;
  m.T = T;
  m.R = R;
  m.Tbar = complement_summand(T, R);
  Approx ap = min_right_approx(C, R, make_sub(m.Tbar));
  m.exchange = cocone(C, ap.map);
  m.B = ap.A;
  m.Rstar = m.exchange.X;
  m.Tprime = concat(m.Tbar, m.Rstar);
  if (!is_rigid(C, m.Tprime)) throw Error("RigidityLost", "mutated object is not rigid");
  if (hom_dim(C, m.Tbar, C.sigma(m.Rstar)) != 0) throw Error("RigidityLost", "Sigma R* is not in Tbar^perp");
  if (!is_basic(m.Tprime)) throw Error("RigidityLost", "mutated object is not basic");
  if (m.Rstar.size() != R.size()) throw Error("RigidityLost", "summand counts of R and R* differ");
  return m;
}

Obj comutate(const FinCat& C, const Obj& Rstar, const Obj& Tbar) {
  Approx ap = min_left_approx(C, Rstar, make_sub(Tbar));
  return cone(C, ap.map).Z;
}

R0Result approx_R0(const FinCat& C, const Obj& X, const Obj& T, const Obj& Tbar) {
  R0Result r;
  r.X = X;
  // T0 -alpha-> X, with cocone Y -gamma-> T0.
  Approx a0 = min_right_approx(C, X, make_sub(T));
  Triangle t1 = cocone(C, a0.map);
  // Tbar1 -beta-> Y.
  Approx a1 = min_right_approx(C, t1.X, make_sub(Tbar));
  Morph phi = compose(C, t1.f, a1.map);  // Tbar1 -> T0
  Triangle t2 = cone(C, phi);              // Tbar1 -> T0 -g''-> R0X
  r.R0X = t2.Z;
  const Morph& g2 = t2.g;
  auto part = factor_through_left(C, g2, a0.map);
  if (!part) throw Error("ConstructionFailed", "R0: alpha does not factor through T0 -> R0X");
  const int d = hom_dim(C, r.R0X, X);
  Mat K = d ? nullspace(pre_mat(C, g2, X)) : Mat(0, 0);
  if (d && pre_mat(C, g2, X).rows() == 0) K = Mat::identity(d);
  Rng rng(0x7e57);
  const Obj Tb = make_sub(Tbar);
  std::string last;
  for (int attempt = 0; attempt < 24; ++attempt) {
    Morph eta = *part;
    if (attempt > 0 && K.cols() > 0) {
      Vec coef(K.cols());
      for (auto& c : coef) c = rng.small_q();
      eta = add(eta, unflat(C, r.R0X, X, K * coef));
    }
    Triangle t = cocone(C, eta);
    r.attempts = attempt + 1;
    if (hom_dim(C, Tb, t.X) != 0) {
      last = "Z not in Tbar^perp";
      continue;
    }
    if (!hom_surjective(C, T, eta)) {
      last = "connecting map not in (T^perp)";
      continue;
    }
    r.eta = eta;
    r.tri = t;
    return r;
  }
  throw Error("ConstructionFailed", "R0: no approximation in the class S found (" + last + ")");
}

L0Result approx_L0(const FinCat& C, const Obj& X, const Obj& Tprime, const Obj& Tbar) {
  const FinCat& D = C.op();
  R0Result r = approx_R0(D, X, C.serre(Tprime), C.serre(Tbar));
  L0Result l;
  l.X = X;
  l.L0X = r.R0X;
  l.eps = to_op(r.eta);
  l.sigma_Z = r.tri.X;
  l.alpha_op = to_op(r.tri.f);
  return l;
}

Mat kill_matrix(const LinCat& C, const Obj& G, const Obj& A, const Obj& B) {
  const int d = hom_dim(C, A, B);
  std::vector<Vec> cols;
  int rows = 0;
  for (int b = 0; b < d; ++b) {
    Morph phi = unflat(C, A, B, unit_vec(d, b));
    Mat m = action_rows(C, G, phi);
    rows = m.rows();
    cols.push_back(m.col(0));
  }
  if (d == 0) {
    for (int g : distinct(G)) rows += hom_dim(C, {g}, A) * hom_dim(C, {g}, B);
    return Mat(rows, 0);
  }
  return Mat::from_cols(cols, rows);
}

std::optional<Lift> lift_left(const LinCat& C, const Obj& G, const Morph& p, const Morph& q) {
  const Obj& Xp = p.tgt;
  const Obj& Y = q.tgt;
  const int d = hom_dim(C, Xp, Y);
  Mat K = kill_matrix(C, G, p.src, Y);
  Vec b = K.cols() ? K * flat(q) : Vec(K.rows());
  Lift L;
  if (d == 0) {
    if (!vzero(b)) return std::nullopt;
    L.g = zero_morph(C, Xp, Y);
    return L;
  }
  Mat A = K.cols() ? K * pre_mat(C, p, Y) : Mat(K.rows(), d);
  auto sol = solve(A, b);
  if (!sol) return std::nullopt;
  L.g = unflat(C, Xp, Y, *sol);
  Mat N = nullspace(A);
  Mat Kg = kill_matrix(C, G, Xp, Y);
  L.unique = N.cols() == 0 || Kg.rows() == 0 || (Kg * N).is_zero();
  return L;
}

std::optional<Lift> lift_right(const LinCat& C, const Obj& G, const Morph& p, const Morph& q) {
  const Obj& X = q.src;
  const Obj& Yp = p.src;
  const int d = hom_dim(C, X, Yp);
  Mat K = kill_matrix(C, G, X, p.tgt);
  Vec b = K.cols() ? K * flat(q) : Vec(K.rows());
  Lift L;
  if (d == 0) {
    if (!vzero(b)) return std::nullopt;
    L.g = zero_morph(C, X, Yp);
    return L;
  }
  Mat A = K.cols() ? K * post_mat(C, p, X) : Mat(K.rows(), d);
  auto sol = solve(A, b);
  if (!sol) return std::nullopt;
  L.g = unflat(C, X, Yp, *sol);
  Mat N = nullspace(A);
  Mat Kg = kill_matrix(C, G, X, Yp);
  L.unique = N.cols() == 0 || Kg.rows() == 0 || (Kg * N).is_zero();
  return L;
}

namespace {

// The unique summand of X outside `drop`, as a position; -1 if there is not
// exactly one.
int single_survivor(const Obj& X, const Sub& drop) {
  auto pos = positions_outside(X, drop);
  return pos.size() == 1 ? pos[0] : -1;
}

Vec block_vec(const Morph& g, int j, int i) { return g.at(j, i); }

}  // namespace

MainReport verify_main_equivalence(const FinCat& C, const Obj& T, const Obj& R) {
  MainReport rep;
  auto fail = [&](const std::string& s) { rep.failures.push_back(s); };
  rep.mut = mutate(C, T, R);
  const Obj& Tbar = rep.mut.Tbar;
  const Obj& Tp = rep.mut.Tprime;
  rep.cbar = cbar_T(C, T, Tbar);
  rep.cbar_alt = cbar_T_alt(C, Tbar, Tp);
  if (rep.cbar != rep.cbar_alt) fail("the two Cbar(T) criteria disagree");
  rep.sigma_Tprime = make_sub(C.sigma(Tp));
  rep.tau_T = make_sub(C.tau(T));
  rep.tau_cbar = sub_map(rep.cbar, &FinCat::tau, C);
  rep.P1 = quotient_category(C, rep.cbar, rep.sigma_Tprime);
  rep.P2 = quotient_category(C, rep.tau_cbar, rep.tau_T);
  const Quotient& P1 = rep.P1;
  const Quotient& P2 = rep.P2;
  const int n1 = static_cast<int>(P1.objects.size()), n2 = static_cast<int>(P2.objects.size());

  // On tau Cbar(T), maps killed by Hom(Tbar,-) are exactly the maps
  // factoring through add tau T.
  rep.ideals_agree = true;
  for (int x : rep.tau_cbar)
    for (int y : rep.tau_cbar) {
      const int d = C.dim(x, y);
      if (d == 0) continue;
      Mat I = ideal_space(C, x, y, rep.tau_T);
      Mat K = kill_matrix(C, Tbar, {x}, {y});
      Mat N = K.rows() ? nullspace(K) : Mat::identity(d);
      const int ri = I.cols() ? rank(I) : 0;
      const int rn = N.cols() ? rank(N) : 0;
      const int rb = (I.cols() && N.cols()) ? rank(Mat::hcat(I, N)) : std::max(ri, rn);
      if (ri != rn || rb != ri) {
        rep.ideals_agree = false;
        fail("ideal (Tbar^perp) differs from (tau T) at (" + C.name(x) + "," + C.name(y) + ")");
      }
    }

  // G on objects.
  std::vector<L0Result> L(n1);
  std::vector<int> gpos(n1, -1);
  rep.object_map.assign(n1, -1);
  for (int i = 0; i < n1; ++i) {
    L[i] = approx_L0(C, {P1.objects[i]}, Tp, Tbar);
    for (int z : L[i].L0X)
      if (!sub_contains(rep.tau_cbar, z)) fail("L0(" + C.name(P1.objects[i]) + ") has a summand outside tau Cbar(T)");
    gpos[i] = single_survivor(L[i].L0X, rep.tau_T);
    if (gpos[i] < 0) {
      fail("G(" + C.name(P1.objects[i]) + ") is not indecomposable in the quotient");
      continue;
    }
    rep.object_map[i] = P2.pos(L[i].L0X[gpos[i]]);
  }
  {
    std::vector<int> seen(n2, 0);
    for (int i = 0; i < n1; ++i)
      if (rep.object_map[i] >= 0) ++seen[rep.object_map[i]];
    bool bij = n1 == n2;
    for (int j = 0; j < n2; ++j) bij = bij && seen[j] == 1;
    if (!bij) fail("G is not a bijection on indecomposable objects");
  }
  if (!rep.failures.empty()) return rep;

  // G on morphisms: matrices P1(i,j) -> P2(Gi,Gj).
  std::vector<Mat> M(static_cast<size_t>(n1) * n1);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) {
      const int d1 = P1.P.dim(i, j);
      const int gi = rep.object_map[i], gj = rep.object_map[j];
      const int d2 = P2.P.dim(gi, gj);
      Mat Mij(d2, d1);
      for (int e = 0; e < d1; ++e) {
        Vec fc = P1.lift_of(i, j) * unit_vec(d1, e);
        Morph f = unflat(C, {P1.objects[i]}, {P1.objects[j]}, fc);
        Morph q = compose(C, L[j].eps, f);
        auto lift = lift_left(C, Tbar, L[i].eps, q);
        ++rep.morphisms_checked;
        if (!lift) {
          fail("G(f) does not exist for a basis map " + C.name(P1.objects[i]) + " -> " + C.name(P1.objects[j]));
          continue;
        }
        if (!lift->unique) {
          rep.lifts_unique = false;
          fail("lift defining G(f) is not unique");
        }
        Vec blk = block_vec(lift->g, gpos[j], gpos[i]);
        Vec img = d2 ? P2.proj_of(gi, gj) * blk : Vec();
        for (int r = 0; r < d2; ++r) Mij(r, e) = img[r];
      }
      if (d1 != d2 || (d1 > 0 && rank(Mij) != d1)) {
        rep.hom_bijective = false;
        fail("G is not bijective on Hom(" + C.name(P1.objects[i]) + "," + C.name(P1.objects[j]) + ")");
      }
      M[static_cast<size_t>(i) * n1 + j] = Mij;
    }
  // Identities and composition.
  for (int i = 0; i < n1; ++i) {
    const Mat& Mii = M[static_cast<size_t>(i) * n1 + i];
    if (!(Mii * P1.P.id(i) == P2.P.id(rep.object_map[i]))) {
      rep.functorial = false;
      fail("G does not preserve the identity of " + C.name(P1.objects[i]));
    }
  }
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j)
      for (int k = 0; k < n1; ++k) {
        const int dij = P1.P.dim(i, j), djk = P1.P.dim(j, k);
        if (dij == 0 || djk == 0) continue;
        const Mat& Mij = M[static_cast<size_t>(i) * n1 + j];
        const Mat& Mjk = M[static_cast<size_t>(j) * n1 + k];
        const Mat& Mik = M[static_cast<size_t>(i) * n1 + k];
        for (int a = 0; a < dij; ++a)
          for (int b = 0; b < djk; ++b) {
            Vec ea = unit_vec(dij, a), eb = unit_vec(djk, b);
            Vec lhs = P1.P.dim(i, k) ? Mik * P1.P.compose(i, j, k, ea, eb) : Vec();
            Vec rhs = P2.P.compose(rep.object_map[i], rep.object_map[j], rep.object_map[k], Mij * ea, Mjk * eb);
            if (lhs != rhs) {
              rep.functorial = false;
              fail("G does not preserve a composite " + C.name(P1.objects[i]) + " -> " + C.name(P1.objects[j]) +
                   " -> " + C.name(P1.objects[k]));
            }
          }
      }

  // H on objects and the unit X -> H G X.
  std::vector<R0Result> H(n2);
  for (int j = 0; j < n2; ++j) H[j] = approx_R0(C, {P2.objects[j]}, T, Tbar);
  for (int i = 0; i < n1; ++i) {
    const int gi = rep.object_map[i];
    const R0Result& hg = H[gi];
    // H G X = R0 (G X); the unit is a lift of eps_X through eta_{L0 X}
    // composed with the inclusion of the surviving summand.
    Morph incl = inclusion(C, L[i].L0X, {gpos[i]});
    Morph proj = projection(C, L[i].L0X, {gpos[i]});
    Morph eps1 = compose(C, proj, L[i].eps);  // X -> G X (indecomposable)
    auto u = lift_right(C, Tbar, hg.eta, eps1);
    if (!u) {
      rep.unit_iso = false;
      fail("unit does not exist at " + C.name(P1.objects[i]));
      continue;
    }
    (void)incl;
    const int hp = single_survivor(hg.R0X, rep.sigma_Tprime);
    if (hp < 0 || hg.R0X[hp] != P1.objects[i] ||
        sgn(dot(C.augmentation(P1.objects[i]), u->g.at(hp, 0))) == 0) {
      rep.unit_iso = false;
      fail("unit is not an isomorphism at " + C.name(P1.objects[i]));
    }
  }
  // Counit G H Y -> Y: lift of eta_Y through eps_{R0 Y}.
  for (int j = 0; j < n2; ++j) {
    const R0Result& h = H[j];
    const int hp = single_survivor(h.R0X, rep.sigma_Tprime);
    if (hp < 0) {
      rep.counit_iso = false;
      fail("H(" + C.name(P2.objects[j]) + ") is not indecomposable in the quotient");
      continue;
    }
    const int i = P1.pos(h.R0X[hp]);
    if (i < 0 || rep.object_map[i] != j) {
      rep.counit_iso = false;
      fail("G H is not the identity on objects at " + C.name(P2.objects[j]));
      continue;
    }
    Morph eta1 = compose(C, h.eta, inclusion(C, h.R0X, {hp}));  // H Y summand -> Y
    auto c = lift_left(C, Tbar, L[i].eps, eta1);                // G H Y -> Y
    if (!c || sgn(dot(C.augmentation(P2.objects[j]), c->g.at(0, gpos[i]))) == 0) {
      rep.counit_iso = false;
      fail("counit is not an isomorphism at " + C.name(P2.objects[j]));
    }
  }
  rep.quiver_certificate = quiver_iso(quiver_of(P1.P), quiver_of(P2.P));
  if (!rep.quiver_certificate) fail("quivers of the two quotients are not isomorphic");
  rep.pass = rep.failures.empty();
  return rep;
}

}  // namespace rmw
