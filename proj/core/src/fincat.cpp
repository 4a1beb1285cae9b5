#include "rmw/fincat.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace rmw {

// ---------------------------------------------------------------------------
// LinCat

LinCat::LinCat(std::vector<std::string> names) : names_(std::move(names)) {
  const size_t n = names_.size();
  dims_.assign(n * n, 0);
  tables_.assign(n * n * n, Mat());
  ids_.assign(n, Vec());
}

int LinCat::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

void LinCat::set_dim(int x, int y, int d) { dims_[idx2(x, y)] = d; }

Vec LinCat::compose(int x, int y, int z, const Vec& a, const Vec& b) const {
  const int dxz = dim(x, z), dyz = dim(y, z), dxy = dim(x, y);
  Vec out(dxz);
  if (dxz == 0 || dxy == 0 || dyz == 0) return out;
  const Mat& T = table(x, y, z);
  for (int i = 0; i < dxy; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < dyz; ++j) {
      if (sgn(b[j]) == 0) continue;
      Q c = a[i] * b[j];
      const int col = i * dyz + j;
      for (int r = 0; r < dxz; ++r) {
        const Q& t = T(r, col);
        if (sgn(t) != 0) out[r] += c * t;
      }
    }
  }
  return out;
}

void LinCat::finalize() {
  const int n = size();
  rad_endo_.assign(n, Mat());
  aug_.assign(n, Vec());
  full_.assign(static_cast<size_t>(n) * n, Mat());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) full_[idx2(x, y)] = Mat::identity(dim(x, y));
  for (int x = 0; x < n; ++x) {
    const int d = dim(x, x);
    if (d == 0) throw Error("ZeroObject", "object " + names_[x] + " has zero endomorphism ring");
    // Left multiplication operators on End(x).
    std::vector<Mat> L(d, Mat(d, d));
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        Vec ab = compose(x, x, x, unit_vec(d, b), unit_vec(d, a));  // a o b
        for (int r = 0; r < d; ++r) L[a](r, b) = ab[r];
      }
    Mat G(d, d);
    for (int a = 0; a < d; ++a)
      for (int b = a; b < d; ++b) {
        Mat p = L[a] * L[b];
        Q tr = 0;
        for (int r = 0; r < d; ++r) tr += p(r, r);
        G(a, b) = tr;
        G(b, a) = tr;
      }
    Mat R = nullspace(G);
    if (R.cols() != d - 1)
      throw Error("NonSplitField", "End(" + names_[x] + ")/rad is not the ground field");
    rad_endo_[x] = R.cols() ? R : Mat(d, 0);
    // Augmentation: lambda(rad) = 0, lambda(id) = 1.
    Mat M = Mat::hcat(rad_endo_[x], Mat::from_cols({ids_[x]}, d));
    Vec rhs(d);
    rhs[d - 1] = 1;
    auto lam = solve(M.transpose(), rhs);
    if (!lam) throw Error("InternalError", "augmentation");
    aug_[x] = *lam;
  }
}

const Mat& LinCat::rad(int x, int y) const {
  if (x == y) return rad_endo_[x];
  return full_[idx2(x, y)];
}

Mat LinCat::rad2(int x, int y) const {
  const int d = dim(x, y);
  std::vector<Vec> cols;
  for (int z = 0; z < size(); ++z) {
    const Mat& r1 = rad(x, z);
    const Mat& r2 = rad(z, y);
    if (r1.cols() == 0 || r2.cols() == 0) continue;
    for (int a = 0; a < r1.cols(); ++a) {
      Vec va = r1.col(a);
      for (int b = 0; b < r2.cols(); ++b) {
        Vec c = compose(x, z, y, va, r2.col(b));
        if (!vzero(c)) cols.push_back(std::move(c));
      }
    }
  }
  if (cols.empty()) return Mat(d, 0);
  return colspace(Mat::from_cols(cols, d));
}

std::string LinCat::check_axioms() const {
  const int n = size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int a = 0; a < dim(x, y); ++a) {
        Vec e = unit_vec(dim(x, y), a);
        if (compose(x, x, y, ids_[x], e) != e || compose(x, y, y, e, ids_[y]) != e)
          return "identity fails at (" + names_[x] + "," + names_[y] + ")";
      }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (dim(x, y) == 0) continue;
      for (int z = 0; z < n; ++z) {
        if (dim(y, z) == 0) continue;
        for (int w = 0; w < n; ++w) {
          if (dim(z, w) == 0) continue;
          for (int a = 0; a < dim(x, y); ++a)
            for (int b = 0; b < dim(y, z); ++b) {
              Vec ba = compose(x, y, z, unit_vec(dim(x, y), a), unit_vec(dim(y, z), b));
              for (int c = 0; c < dim(z, w); ++c) {
                Vec ec = unit_vec(dim(z, w), c);
                Vec left = compose(x, z, w, ba, ec);
                Vec cb = compose(y, z, w, unit_vec(dim(y, z), b), ec);
                Vec right = compose(x, y, w, unit_vec(dim(x, y), a), cb);
                if (left != right)
                  return "associativity fails at (" + names_[x] + "," + names_[y] + "," + names_[z] + "," + names_[w] +
                         ")";
              }
            }
        }
      }
    }
  return "";
}

// ---------------------------------------------------------------------------
// Morphisms between direct sums

namespace {

std::vector<int> block_offsets(const LinCat& C, const Obj& X, const Obj& Y) {
  std::vector<int> off;
  off.reserve(X.size() * Y.size() + 1);
  int o = 0;
  for (size_t j = 0; j < Y.size(); ++j)
    for (size_t i = 0; i < X.size(); ++i) {
      off.push_back(o);
      o += C.dim(X[i], Y[j]);
    }
  off.push_back(o);
  return off;
}

}  // namespace

int hom_dim(const LinCat& C, const Obj& X, const Obj& Y) {
  int s = 0;
  for (int x : X)
    for (int y : Y) s += C.dim(x, y);
  return s;
}

Morph zero_morph(const LinCat& C, const Obj& X, const Obj& Y) {
  Morph f{X, Y, {}};
  f.blk.reserve(X.size() * Y.size());
  for (size_t j = 0; j < Y.size(); ++j)
    for (size_t i = 0; i < X.size(); ++i) f.blk.emplace_back(C.dim(X[i], Y[j]));
  return f;
}

Morph id_morph(const LinCat& C, const Obj& X) {
  Morph f = zero_morph(C, X, X);
  for (size_t i = 0; i < X.size(); ++i) f.at(static_cast<int>(i), static_cast<int>(i)) = C.id(X[i]);
  return f;
}

Morph compose(const LinCat& C, const Morph& g, const Morph& f) {
  if (f.tgt != g.src) throw Error("InternalError", "compose: objects do not match");
  Morph h = zero_morph(C, f.src, g.tgt);
  const int nx = static_cast<int>(f.src.size()), ny = static_cast<int>(f.tgt.size()),
            nz = static_cast<int>(g.tgt.size());
  for (int k = 0; k < nz; ++k)
    for (int i = 0; i < nx; ++i) {
      Vec& acc = h.at(k, i);
      for (int j = 0; j < ny; ++j) {
        const Vec& a = f.at(j, i);
        const Vec& b = g.at(k, j);
        if (a.empty() || b.empty() || vzero(a) || vzero(b)) continue;
        acc = vadd(acc, C.compose(f.src[i], f.tgt[j], g.tgt[k], a, b));
      }
    }
  return h;
}

Morph add(const Morph& f, const Morph& g) {
  Morph h = f;
  for (size_t b = 0; b < h.blk.size(); ++b) h.blk[b] = vadd(h.blk[b], g.blk[b]);
  return h;
}

Morph sub(const Morph& f, const Morph& g) {
  Morph h = f;
  for (size_t b = 0; b < h.blk.size(); ++b) h.blk[b] = vsub(h.blk[b], g.blk[b]);
  return h;
}

Morph scale(const Q& s, const Morph& f) {
  Morph h = f;
  for (auto& b : h.blk) b = vscale(s, b);
  return h;
}

bool is_zero(const Morph& f) {
  for (const auto& b : f.blk)
    if (!vzero(b)) return false;
  return true;
}

Vec flat(const Morph& f) {
  Vec out;
  for (const auto& b : f.blk) out.insert(out.end(), b.begin(), b.end());
  return out;
}

Morph unflat(const LinCat& C, const Obj& X, const Obj& Y, const Vec& v) {
  Morph f = zero_morph(C, X, Y);
  size_t k = 0;
  for (auto& b : f.blk)
    for (auto& x : b) x = v[k++];
  return f;
}

Mat post_mat(const LinCat& C, const Morph& g, const Obj& W) {
  const Obj& Y = g.src;
  const Obj& Z = g.tgt;
  auto offY = block_offsets(C, W, Y);
  auto offZ = block_offsets(C, W, Z);
  Mat M(offZ.back(), offY.back());
  const int nw = static_cast<int>(W.size());
  for (size_t j = 0; j < Y.size(); ++j)
    for (int i = 0; i < nw; ++i) {
      const int d = C.dim(W[i], Y[j]);
      for (int c = 0; c < d; ++c) {
        Vec e = unit_vec(d, c);
        const int col = offY[j * nw + i] + c;
        for (size_t k = 0; k < Z.size(); ++k) {
          const Vec& gb = g.at(static_cast<int>(k), static_cast<int>(j));
          if (gb.empty() || vzero(gb)) continue;
          Vec r = C.compose(W[i], Y[j], Z[k], e, gb);
          const int o = offZ[k * nw + i];
          for (size_t t = 0; t < r.size(); ++t) M(o + static_cast<int>(t), col) = r[t];
        }
      }
    }
  return M;
}

Mat pre_mat(const LinCat& C, const Morph& f, const Obj& W) {
  const Obj& X = f.src;
  const Obj& Y = f.tgt;
  auto offY = block_offsets(C, Y, W);
  auto offX = block_offsets(C, X, W);
  Mat M(offX.back(), offY.back());
  const int ny = static_cast<int>(Y.size()), nx = static_cast<int>(X.size());
  for (size_t k = 0; k < W.size(); ++k)
    for (int j = 0; j < ny; ++j) {
      const int d = C.dim(Y[j], W[k]);
      for (int c = 0; c < d; ++c) {
        Vec e = unit_vec(d, c);
        const int col = offY[k * ny + j] + c;
        for (int i = 0; i < nx; ++i) {
          const Vec& fb = f.at(j, i);
          if (fb.empty() || vzero(fb)) continue;
          Vec r = C.compose(X[i], Y[j], W[k], fb, e);
          const int o = offX[k * nx + i];
          for (size_t t = 0; t < r.size(); ++t) M(o + static_cast<int>(t), col) = r[t];
        }
      }
    }
  return M;
}

Obj concat(const Obj& a, const Obj& b) {
  Obj c = a;
  c.insert(c.end(), b.begin(), b.end());
  return c;
}

Morph hstack(const LinCat& C, const Morph& a, const Morph& b) {
  Morph h = zero_morph(C, concat(a.src, b.src), a.tgt);
  const int na = static_cast<int>(a.src.size());
  for (size_t j = 0; j < a.tgt.size(); ++j) {
    for (int i = 0; i < na; ++i) h.at(static_cast<int>(j), i) = a.at(static_cast<int>(j), i);
    for (size_t i = 0; i < b.src.size(); ++i)
      h.at(static_cast<int>(j), na + static_cast<int>(i)) = b.at(static_cast<int>(j), static_cast<int>(i));
  }
  return h;
}

Morph vstack(const LinCat& C, const Morph& a, const Morph& b) {
  Morph h = zero_morph(C, a.src, concat(a.tgt, b.tgt));
  const int na = static_cast<int>(a.tgt.size());
  for (size_t i = 0; i < a.src.size(); ++i) {
    for (int j = 0; j < na; ++j) h.at(j, static_cast<int>(i)) = a.at(j, static_cast<int>(i));
    for (size_t j = 0; j < b.tgt.size(); ++j)
      h.at(na + static_cast<int>(j), static_cast<int>(i)) = b.at(static_cast<int>(j), static_cast<int>(i));
  }
  return h;
}

Morph restrict(const Morph& f, const std::vector<int>& tgt_pos, const std::vector<int>& src_pos) {
  Morph h;
  for (int i : src_pos) h.src.push_back(f.src[i]);
  for (int j : tgt_pos) h.tgt.push_back(f.tgt[j]);
  for (int j : tgt_pos)
    for (int i : src_pos) h.blk.push_back(f.at(j, i));
  return h;
}

Morph inclusion(const LinCat& C, const Obj& X, const std::vector<int>& pos) {
  Obj S;
  for (int p : pos) S.push_back(X[p]);
  Morph f = zero_morph(C, S, X);
  for (size_t k = 0; k < pos.size(); ++k) f.at(pos[k], static_cast<int>(k)) = C.id(X[pos[k]]);
  return f;
}

Morph projection(const LinCat& C, const Obj& X, const std::vector<int>& pos) {
  Obj S;
  for (int p : pos) S.push_back(X[p]);
  Morph f = zero_morph(C, X, S);
  for (size_t k = 0; k < pos.size(); ++k) f.at(static_cast<int>(k), pos[k]) = C.id(X[pos[k]]);
  return f;
}

std::vector<Morph> hom_basis(const LinCat& C, const Obj& X, const Obj& Y) {
  const int d = hom_dim(C, X, Y);
  std::vector<Morph> out;
  for (int k = 0; k < d; ++k) out.push_back(unflat(C, X, Y, unit_vec(d, k)));
  return out;
}

bool is_iso(const LinCat& C, const Morph& f) {
  if (f.src.size() != f.tgt.size()) return false;
  if (!same_multiset(f.src, f.tgt)) return false;
  const int n = static_cast<int>(f.src.size());
  if (n == 0) return true;
  Mat M(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (f.src[i] == f.tgt[j]) M(j, i) = dot(C.augmentation(f.src[i]), f.at(j, i));
  return rank(M) == n;
}

Obj sorted(Obj X) {
  std::sort(X.begin(), X.end());
  return X;
}

bool same_multiset(const Obj& a, const Obj& b) { return sorted(a) == sorted(b); }

std::string obj_str(const LinCat& C, const Obj& X) {
  if (X.empty()) return "0";
  std::map<int, int> mult;
  for (int x : X) ++mult[x];
  std::vector<std::pair<std::string, int>> parts;
  for (auto& [x, m] : mult) parts.emplace_back(C.name(x), m);
  std::sort(parts.begin(), parts.end());
  std::string s;
  for (size_t k = 0; k < parts.size(); ++k) {
    if (k) s += "+";
    s += parts[k].first;
    if (parts[k].second > 1) s += "^" + std::to_string(parts[k].second);
  }
  return s;
}

// ---------------------------------------------------------------------------
// FinCat

FinCat::FinCat(std::vector<std::string> names) : LinCat(std::move(names)) {
  const size_t n = names_.size();
  sigma_mor_.assign(n * n, Mat());
  sigma_inv_mor_.assign(n * n, Mat());
  trace_.assign(n, Vec());
}

namespace {

std::vector<int> invert_perm(const std::vector<int>& p) {
  std::vector<int> q(p.size(), -1);
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= static_cast<int>(p.size()) || q[p[i]] != -1)
      throw Error("InternalError", "object map is not a bijection");
    q[p[i]] = static_cast<int>(i);
  }
  return q;
}

}  // namespace

void FinCat::set_sigma(std::vector<int> s) {
  sigma_inv_ = invert_perm(s);
  sigma_ = std::move(s);
}

void FinCat::set_tau(std::vector<int> t) {
  tau_inv_ = invert_perm(t);
  tau_ = std::move(t);
}

void FinCat::set_serre(std::vector<int> s) {
  serre_inv_ = invert_perm(s);
  serre_ = std::move(s);
}

void FinCat::finalize_all() {
  finalize();
  const int n = size();
  socle_.assign(n, Vec());
  for (int v = 0; v < n; ++v) {
    const int u = serre_inv_[v];
    const int m = dim(u, v), d = dim(v, v);
    // P(b, a) = tr_u(b o a), a in Hom(u,v), b in End(v).
    Mat P(d, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < d; ++b) P(b, a) = dot(trace_[u], compose(u, v, v, unit_vec(m, a), unit_vec(d, b)));
    auto s = solve(P, augmentation(v));
    if (!s) throw Error("SerreViolation", "no socle element for " + names_[v]);
    socle_[v] = *s;
  }
}

Obj FinCat::sigma(const Obj& X) const {
  Obj Y;
  for (int x : X) Y.push_back(sigma_[x]);
  return Y;
}
Obj FinCat::sigma_inv(const Obj& X) const {
  Obj Y;
  for (int x : X) Y.push_back(sigma_inv_[x]);
  return Y;
}
Obj FinCat::tau(const Obj& X) const {
  Obj Y;
  for (int x : X) Y.push_back(tau_[x]);
  return Y;
}
Obj FinCat::serre(const Obj& X) const {
  Obj Y;
  for (int x : X) Y.push_back(serre_[x]);
  return Y;
}

Morph FinCat::sigma(const Morph& f) const {
  Morph g{sigma(f.src), sigma(f.tgt), {}};
  for (size_t j = 0; j < f.tgt.size(); ++j)
    for (size_t i = 0; i < f.src.size(); ++i) {
      const Vec& b = f.at(static_cast<int>(j), static_cast<int>(i));
      const Mat& M = sigma_mor(f.src[i], f.tgt[j]);
      g.blk.push_back(b.empty() ? Vec() : M * b);
    }
  return g;
}

Morph FinCat::sigma_inv(const Morph& f) const {
  Morph g{sigma_inv(f.src), sigma_inv(f.tgt), {}};
  for (size_t j = 0; j < f.tgt.size(); ++j)
    for (size_t i = 0; i < f.src.size(); ++i) {
      const Vec& b = f.at(static_cast<int>(j), static_cast<int>(i));
      const Mat& M = sigma_inv_mor(f.src[i], f.tgt[j]);
      g.blk.push_back(b.empty() ? Vec() : M * b);
    }
  return g;
}

std::string FinCat::check_sigma_functor() const {
  const int n = size();
  for (int x = 0; x < n; ++x) {
    if (sigma_mor(x, x) * id(x) != id(sigma_[x])) return "Sigma does not preserve the identity of " + names_[x];
    for (int y = 0; y < n; ++y) {
      const int d = dim(x, y);
      if (dim(sigma_[x], sigma_[y]) != d) return "Sigma changes dim Hom(" + names_[x] + "," + names_[y] + ")";
      if (d == 0) continue;
      if (!(sigma_inv_mor(sigma_[x], sigma_[y]) * sigma_mor(x, y) == Mat::identity(d)))
        return "Sigma^-1 Sigma != id on Hom(" + names_[x] + "," + names_[y] + ")";
      for (int z = 0; z < n; ++z) {
        const int e = dim(y, z);
        if (e == 0) continue;
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < e; ++b) {
            Vec ea = unit_vec(d, a), eb = unit_vec(e, b);
            Vec lhs = sigma_mor(x, z) * compose(x, y, z, ea, eb);
            Vec rhs = compose(sigma_[x], sigma_[y], sigma_[z], sigma_mor(x, y) * ea, sigma_mor(y, z) * eb);
            if (lhs != rhs)
              return "Sigma not functorial at (" + names_[x] + "," + names_[y] + "," + names_[z] + ")";
          }
      }
    }
  }
  return "";
}

std::string FinCat::check_serre_pairing() const {
  const int n = size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int sx = serre_[x];
      const int d1 = dim(x, y), d2 = dim(y, sx);
      if (d1 != d2) return "dim Hom(" + names_[x] + "," + names_[y] + ") != dim Hom(" + names_[y] + ",S" + names_[x] + ")";
      if (d1 == 0) continue;
      Mat P(d1, d2);
      for (int a = 0; a < d1; ++a)
        for (int b = 0; b < d2; ++b) P(a, b) = dot(trace_[x], compose(x, y, sx, unit_vec(d1, a), unit_vec(d2, b)));
      if (rank(P) != d1) return "Serre pairing degenerate at (" + names_[x] + "," + names_[y] + ")";
    }
  return "";
}

std::string FinCat::check_serre_is_tau_sigma() const {
  for (int x = 0; x < size(); ++x)
    if (serre_[x] != tau_[sigma_[x]]) return "S != tau Sigma at " + names_[x];
  return "";
}

std::string FinCat::check_serre_dimensions() const {
  for (int x = 0; x < size(); ++x)
    for (int y = 0; y < size(); ++y)
      if (dim(x, y) != dim(y, serre_[x]))
        return "dim Hom(" + names_[x] + "," + names_[y] + ") != dim Hom(" + names_[y] + ",S" + names_[x] + ")";
  return "";
}

FinCat build_opposite(const FinCat& C) {
  const int n = C.size();
  FinCat D(C.names());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) D.set_dim(x, y, C.dim(y, x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int dxy = D.dim(x, y);
      if (dxy == 0) continue;
      for (int z = 0; z < n; ++z) {
        const int dyz = D.dim(y, z), dxz = D.dim(x, z);
        if (dyz == 0) continue;
        // b o_op a = a o b in C, for a in Hom(y,x), b in Hom(z,y).
        const Mat& T = C.table(z, y, x);
        Mat M(dxz, dxy * dyz);
        for (int a = 0; a < dxy; ++a)
          for (int b = 0; b < dyz; ++b)
            for (int r = 0; r < dxz; ++r) M(r, a * dyz + b) = T(r, b * dxy + a);
        D.set_table(x, y, z, std::move(M));
      }
    }
  for (int x = 0; x < n; ++x) D.set_id(x, C.id(x));
  std::vector<int> s(n), t(n), S(n);
  for (int x = 0; x < n; ++x) {
    s[x] = C.sigma_inv(x);
    t[x] = C.tau_inv(x);
    S[x] = C.serre_inv(x);
  }
  D.set_sigma(s);
  D.set_tau(t);
  D.set_serre(S);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      // Sigma_op on Hom_op(x,y) = Hom(y,x) is Sigma^{-1}; its inverse is Sigma.
      D.set_sigma_mor(x, y, C.sigma_inv_mor(y, x));
      D.set_sigma_inv_mor(x, y, C.sigma_mor(y, x));
    }
  for (int x = 0; x < n; ++x) D.set_trace(x, C.trace(C.serre_inv(x)));
  D.coords = C.coords;
  D.label = C.label.empty() ? "" : C.label + "^op";
  return D;
}

Category::Category(FinCat base) : C_(std::move(base)) {
  C_.finalize_all();
  Cop_ = build_opposite(C_);
  Cop_.finalize_all();
  C_.op_ = &Cop_;
  Cop_.op_ = &C_;
}

CategoryPtr make_category(FinCat base) { return std::make_shared<const Category>(std::move(base)); }

Morph to_op(const Morph& f) {
  Morph g{f.tgt, f.src, {}};
  for (size_t i = 0; i < f.src.size(); ++i)
    for (size_t j = 0; j < f.tgt.size(); ++j) g.blk.push_back(f.at(static_cast<int>(j), static_cast<int>(i)));
  return g;
}

// ---------------------------------------------------------------------------
// Quotients

int Quotient::pos(int catalog_id) const {
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == catalog_id) return static_cast<int>(i);
  return -1;
}

Mat ideal_space(const LinCat& C, int x, int y, const std::vector<int>& I) {
  const int d = C.dim(x, y);
  Mat acc(d, 0);
  if (d == 0) return acc;
  for (int i : I) {
    if (C.dim(x, i) == 0 || C.dim(i, y) == 0) continue;
    acc = Mat::hcat(acc, C.table(x, i, y));
  }
  if (acc.cols() == 0) return acc;
  return colspace(acc);
}

Quotient quotient_category(const LinCat& C, const std::vector<int>& objects, const std::vector<int>& I) {
  Quotient Qt;
  for (int x : objects)
    if (std::find(I.begin(), I.end(), x) == I.end()) Qt.objects.push_back(x);
  const int m = static_cast<int>(Qt.objects.size());
  std::vector<std::string> names;
  for (int x : Qt.objects) names.push_back(C.name(x));
  Qt.P = LinCat(names);
  Qt.proj.assign(static_cast<size_t>(m) * m, Mat());
  Qt.lift.assign(static_cast<size_t>(m) * m, Mat());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int x = Qt.objects[i], y = Qt.objects[j];
      const int d = C.dim(x, y);
      Mat J = ideal_space(C, x, y, I);
      Mat comp = complement_basis(J, d);
      const int q = comp.cols();
      Qt.P.set_dim(i, j, q);
      Mat pr(q, d);
      if (d > 0 && q > 0) {
        Mat full = Mat::hcat(J, comp);
        Mat inv = *inverse(full);
        pr = inv.block(J.cols(), 0, q, d);
      }
      Qt.proj[static_cast<size_t>(i) * m + j] = pr;
      Qt.lift[static_cast<size_t>(i) * m + j] = q ? comp : Mat(d, 0);
    }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int dij = Qt.P.dim(i, j);
      if (dij == 0) continue;
      for (int k = 0; k < m; ++k) {
        const int djk = Qt.P.dim(j, k), dik = Qt.P.dim(i, k);
        if (djk == 0) continue;
        Mat T(dik, dij * djk);
        const Mat& Lij = Qt.lift_of(i, j);
        const Mat& Ljk = Qt.lift_of(j, k);
        const Mat& Pik = Qt.proj_of(i, k);
        for (int a = 0; a < dij; ++a)
          for (int b = 0; b < djk; ++b) {
            if (dik == 0) continue;
            Vec c = C.compose(Qt.objects[i], Qt.objects[j], Qt.objects[k], Lij.col(a), Ljk.col(b));
            Vec pc = Pik * c;
            for (int r = 0; r < dik; ++r) T(r, a * djk + b) = pc[r];
          }
        Qt.P.set_table(i, j, k, std::move(T));
      }
    }
  for (int i = 0; i < m; ++i) Qt.P.set_id(i, Qt.proj_of(i, i) * C.id(Qt.objects[i]));
  Qt.P.finalize();
  return Qt;
}

Quotient full_subcategory(const LinCat& C, const std::vector<int>& objects) { return quotient_category(C, objects, {}); }

std::vector<std::vector<int>> quiver_of(const LinCat& P) {
  const int n = P.size();
  std::vector<std::vector<int>> A(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int r = P.rad(x, y).cols();
      if (r == 0) continue;
      A[x][y] = r - P.rad2(x, y).cols();
    }
  return A;
}

std::vector<std::vector<int>> hom_dims(const LinCat& P) {
  const int n = P.size();
  std::vector<std::vector<int>> H(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) H[x][y] = P.dim(x, y);
  return H;
}

std::optional<std::vector<int>> quiver_iso(const std::vector<std::vector<int>>& A,
                                           const std::vector<std::vector<int>>& B,
                                           const std::vector<std::vector<int>>* homA,
                                           const std::vector<std::vector<int>>* homB) {
  const int n = static_cast<int>(A.size());
  if (static_cast<int>(B.size()) != n) return std::nullopt;
  if ((homA == nullptr) != (homB == nullptr)) return std::nullopt;
  auto signature = [&](const std::vector<std::vector<int>>& M, const std::vector<std::vector<int>>* H, int v) {
    std::vector<int> out, in;
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      if (M[v][w]) out.push_back(M[v][w]);
      if (M[w][v]) in.push_back(M[w][v]);
    }
    std::sort(out.begin(), out.end());
    std::sort(in.begin(), in.end());
    std::vector<int> sig{M[v][v]};
    sig.push_back(-1);
    sig.insert(sig.end(), out.begin(), out.end());
    sig.push_back(-2);
    sig.insert(sig.end(), in.begin(), in.end());
    if (H) {
      std::vector<int> ho, hi;
      for (int w = 0; w < n; ++w) {
        ho.push_back((*H)[v][w]);
        hi.push_back((*H)[w][v]);
      }
      std::sort(ho.begin(), ho.end());
      std::sort(hi.begin(), hi.end());
      sig.push_back(-3);
      sig.push_back((*H)[v][v]);
      sig.insert(sig.end(), ho.begin(), ho.end());
      sig.insert(sig.end(), hi.begin(), hi.end());
    }
    return sig;
  };
  std::vector<std::vector<int>> sa(n), sb(n);
  for (int v = 0; v < n; ++v) {
    sa[v] = signature(A, homA, v);
    sb[v] = signature(B, homB, v);
  }
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> rec = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || sa[v] != sb[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        const int mu = map[u];
        if (A[u][v] != B[mu][w] || A[v][u] != B[w][mu]) ok = false;
        if (homA && ((*homA)[u][v] != (*homB)[mu][w] || (*homA)[v][u] != (*homB)[w][mu])) ok = false;
      }
      if (A[v][v] != B[w][w]) ok = false;
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (rec(v + 1)) return true;
      used[w] = false;
      map[v] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

std::string quiver_dot(const std::string& name, const std::vector<std::string>& labels,
                       const std::vector<std::vector<int>>& arrows, const std::vector<bool>& marked) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=LR;\n";
  for (size_t v = 0; v < labels.size(); ++v) {
    bool m = !marked.empty() && marked[v];
    os << "  v" << v << " [label=\"" << labels[v] << "\", shape=" << (m ? "circle" : "plaintext") << "];\n";
  }
  for (size_t v = 0; v < arrows.size(); ++v)
    for (size_t w = 0; w < arrows[v].size(); ++w)
      for (int k = 0; k < arrows[v][w]; ++k) os << "  v" << v << " -> v" << w << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace rmw
