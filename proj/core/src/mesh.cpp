#include "rmw/mesh.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rmw {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int floor_mod(int a, int b) { return a - floor_div(a, b) * b; }

}  // namespace

std::string OrbitSpec::str() const {
  return "ZA" + std::to_string(n) + "/<tau^" + std::to_string(a) + " Sigma^" + std::to_string(b) + ">";
}

std::string cover_name(const CoverVertex& v) { return "(" + std::to_string(v.p) + "," + std::to_string(v.i) + ")"; }

CoverVertex cover_tau(const CoverVertex& v, int k) { return {v.p - k, v.i}; }

CoverVertex cover_sigma(int n, const CoverVertex& v) { return {v.p + v.i, n + 1 - v.i}; }

CoverVertex cover_sigma_inv(int n, const CoverVertex& v) {
  const int j = n + 1 - v.i;
  return {v.p - j, j};
}

CoverVertex cover_serre(int n, const CoverVertex& v) { return cover_tau(cover_sigma(n, v)); }

CoverVertex apply_F(const OrbitSpec& s, const CoverVertex& v, int k) {
  CoverVertex w = v;
  if (k >= 0) {
    for (int t = 0; t < k; ++t) {
      for (int u = 0; u < std::abs(s.b); ++u) w = s.b > 0 ? cover_sigma(s.n, w) : cover_sigma_inv(s.n, w);
      w = cover_tau(w, s.a);
    }
  } else {
    for (int t = 0; t < -k; ++t) {
      w = cover_tau(w, -s.a);
      for (int u = 0; u < std::abs(s.b); ++u) w = s.b > 0 ? cover_sigma_inv(s.n, w) : cover_sigma(s.n, w);
    }
  }
  return w;
}

int hom_dim_cover(int n, const CoverVertex& v, const CoverVertex& w) {
  // w = (v.p + b, v.i + a' - b) with 0 <= a' <= n - v.i, 0 <= b <= v.i - 1.
  const int b = w.p - v.p;
  if (b < 0 || b > v.i - 1) return 0;
  const int ap = w.i - v.i + b;
  if (ap < 0 || ap > n - v.i) return 0;
  if (w.i < 1 || w.i > n) return 0;
  return 1;
}

std::vector<CoverVertex> hammock(int n, const CoverVertex& v) {
  std::vector<CoverVertex> out;
  for (int b = 0; b <= v.i - 1; ++b)
    for (int ap = 0; ap <= n - v.i; ++ap) out.push_back({v.p + b, v.i + ap - b});
  return out;
}

std::vector<CoverVertex> mesh_predecessors(int n, const CoverVertex& w) {
  std::vector<CoverVertex> out;
  if (w.i > 1) out.push_back({w.p, w.i - 1});
  if (w.i < n) out.push_back({w.p - 1, w.i + 1});
  return out;
}

std::vector<std::pair<CoverVertex, int>> knit_hom_from(int n, const CoverVertex& v) {
  std::map<CoverVertex, int> d;
  auto get = [&](const CoverVertex& w) {
    auto it = d.find(w);
    return it == d.end() ? 0 : it->second;
  };
  std::vector<std::pair<CoverVertex, int>> out;
  for (int p = v.p; p <= v.p + n; ++p)
    for (int i = 1; i <= n; ++i) {
      CoverVertex w{p, i};
      int val;
      if (w == v) {
        val = 1;
      } else if (p == v.p && i < v.i) {
        val = 0;
      } else {
        int s = 0;
        for (const auto& u : mesh_predecessors(n, w)) s += get(u);
        val = std::max(0, s - get(cover_tau(w)));
      }
      d[w] = val;
      out.emplace_back(w, val);
    }
  return out;
}

std::pair<int, int> translation_power(const OrbitSpec& s) {
  // Sigma^2 = tau^{-(n+1)} on ZA_n.
  if (s.b % 2 == 0) return {1, s.a - (s.b / 2) * (s.n + 1)};
  return {2, 2 * s.a - s.b * (s.n + 1)};
}

OrbitQuotient::OrbitQuotient(const OrbitSpec& s) : spec_(s) {
  if (s.n < 1) throw InputError("BadSpec", "n must be positive");
  auto [m, e] = translation_power(s);
  m_ = m;
  e_ = e;
  if (e_ == 0) throw Error("NonFreeAction", s.str() + ": a power of the generator acts trivially");
  const int E = std::abs(e_);
  by_slot_.assign(static_cast<size_t>(E) * (s.n + 1), std::vector<int>{-1, 0});
  // Collect representatives.
  std::vector<std::tuple<CoverVertex, CoverVertex, int>> links;
  for (int p = 0; p < E; ++p)
    for (int i = 1; i <= s.n; ++i) {
      CoverVertex v{p, i};
      if (m_ == 1) {
        reps_.push_back(v);
        continue;
      }
      int j = 0;
      CoverVertex w0 = normalize(apply_F(s, v, 1), j);
      if (w0 == v) throw Error("NonFreeAction", s.str() + ": vertex " + cover_name(v) + " has a fixed orbit");
      if (v < w0)
        reps_.push_back(v);
      else
        links.emplace_back(v, w0, 2 * j - 1);
    }
  for (size_t x = 0; x < reps_.size(); ++x)
    by_slot_[static_cast<size_t>(reps_[x].p) * (s.n + 1) + reps_[x].i] = {static_cast<int>(x), 0};
  for (const auto& [v, w0, extra] : links) {
    const auto& slot = by_slot_[static_cast<size_t>(w0.p) * (s.n + 1) + w0.i];
    if (slot[0] < 0 || slot[1] != 0) throw Error("InternalError", "orbit representative bookkeeping");
    by_slot_[static_cast<size_t>(v.p) * (s.n + 1) + v.i] = {slot[0], extra};
  }
}

CoverVertex OrbitQuotient::normalize(const CoverVertex& v, int& j) const {
  const int E = std::abs(e_);
  CoverVertex v0{floor_mod(v.p, E), v.i};
  // F^{m j}(v0) = tau^{e j}(v0) = (v0.p - e j, i) = v.
  j = (v0.p - v.p) / e_;
  return v0;
}

std::pair<int, int> OrbitQuotient::locate(const CoverVertex& v) const {
  if (v.i < 1 || v.i > spec_.n) throw Error("InternalError", "vertex outside ZA_n");
  int j = 0;
  CoverVertex v0 = normalize(v, j);
  const auto& slot = by_slot_[static_cast<size_t>(v0.p) * (spec_.n + 1) + v0.i];
  return {slot[0], m_ * j + slot[1]};
}

std::vector<int> OrbitQuotient::hom_degrees(int x, int y) const {
  const int n = spec_.n;
  const int L = m_ * (2 * n + std::abs(e_) + 4);
  std::vector<int> out;
  const CoverVertex& vx = reps_[x];
  for (int k = -L; k <= L; ++k)
    if (hom_dim_cover(n, vx, apply_F(spec_, reps_[y], k))) out.push_back(k);
  return out;
}

std::vector<std::vector<int>> OrbitQuotient::mesh_arrows() const {
  const int N = size();
  std::vector<std::vector<int>> A(N, std::vector<int>(N, 0));
  for (int x = 0; x < N; ++x) {
    const CoverVertex& v = reps_[x];
    if (v.i < spec_.n) ++A[x][index({v.p, v.i + 1})];
    if (v.i > 1) ++A[x][index({v.p + 1, v.i - 1})];
  }
  return A;
}

FinCat build_mesh_category(const OrbitSpec& s) {
  OrbitQuotient O(s);
  const int N = O.size();
  std::vector<std::string> names;
  for (int x = 0; x < N; ++x) names.push_back(cover_name(O.rep(x)));
  FinCat C(names);
  std::vector<std::vector<int>> deg(static_cast<size_t>(N) * N);
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      deg[x * N + y] = O.hom_degrees(x, y);
      C.set_dim(x, y, static_cast<int>(deg[x * N + y].size()));
    }
  auto pos = [&](int x, int y, int k) {
    const auto& d = deg[x * N + y];
    auto it = std::lower_bound(d.begin(), d.end(), k);
    return (it != d.end() && *it == k) ? static_cast<int>(it - d.begin()) : -1;
  };
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      const auto& dxy = deg[x * N + y];
      if (dxy.empty()) continue;
      for (int z = 0; z < N; ++z) {
        const auto& dyz = deg[y * N + z];
        if (dyz.empty()) continue;
        const int dxz = C.dim(x, z);
        Mat T(dxz, static_cast<int>(dxy.size() * dyz.size()));
        for (size_t a = 0; a < dxy.size(); ++a)
          for (size_t b = 0; b < dyz.size(); ++b) {
            const int r = pos(x, z, dxy[a] + dyz[b]);
            if (r >= 0) T(r, static_cast<int>(a * dyz.size() + b)) = 1;
          }
        C.set_table(x, y, z, std::move(T));
      }
    }
  for (int x = 0; x < N; ++x) {
    const int p0 = pos(x, x, 0);
    if (p0 < 0) throw Error("InternalError", "missing identity");
    C.set_id(x, unit_vec(C.dim(x, x), p0));
  }
  std::vector<int> sig(N), sinv(N), tau(N), serre(N), sdeg(N), sidg(N), tdeg(N);
  for (int x = 0; x < N; ++x) {
    auto [sx, ks] = O.locate(cover_sigma(s.n, O.rep(x)));
    sig[x] = sx;
    sdeg[x] = ks;
    auto [ix, ki] = O.locate(cover_sigma_inv(s.n, O.rep(x)));
    sinv[x] = ix;
    sidg[x] = ki;
    tau[x] = O.index(cover_tau(O.rep(x)));
    auto [sx2, kt] = O.locate(cover_serre(s.n, O.rep(x)));
    serre[x] = sx2;
    tdeg[x] = kt;
  }
  C.set_sigma(sig);
  C.set_tau(tau);
  C.set_serre(serre);
  for (int x = 0; x < N; ++x)
    if (C.sigma_inv(x) != sinv[x]) throw Error("InternalError", "Sigma^{-1} bookkeeping");
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      const auto& dxy = deg[x * N + y];
      Mat S(C.dim(sig[x], sig[y]), static_cast<int>(dxy.size()));
      Mat Si(C.dim(sinv[x], sinv[y]), static_cast<int>(dxy.size()));
      for (size_t a = 0; a < dxy.size(); ++a) {
        const int r = pos(sig[x], sig[y], dxy[a] + sdeg[y] - sdeg[x]);
        const int ri = pos(sinv[x], sinv[y], dxy[a] + sidg[y] - sidg[x]);
        if (r < 0 || ri < 0) throw Error("InternalError", "Sigma does not preserve hammocks");
        // Sigma^b carries the triangle-functor sign (-1)^b, so the induced
        // suspension scales a degree-k map by (-1)^(b k).
        const int sgnk = ((s.b * dxy[a]) % 2 != 0) ? -1 : 1;
        const int sgni = ((s.b * (dxy[a] + sidg[y] - sidg[x])) % 2 != 0) ? -1 : 1;
        S(r, static_cast<int>(a)) = sgnk;
        Si(ri, static_cast<int>(a)) = sgni;
      }
      C.set_sigma_mor(x, y, S);
      C.set_sigma_inv_mor(x, y, Si);
    }
  for (int x = 0; x < N; ++x) {
    const int t = pos(x, serre[x], tdeg[x]);
    if (t < 0) throw Error("InternalError", "Serre trace degree missing");
    C.set_trace(x, unit_vec(C.dim(x, serre[x]), t));
  }
  for (int x = 0; x < N; ++x) C.coords.emplace_back(O.rep(x).p, O.rep(x).i);
  C.label = s.str();
  return C;
}

}  // namespace rmw
