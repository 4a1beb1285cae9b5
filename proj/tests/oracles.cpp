#include "oracles.hpp"

#include <cstdlib>
#include <functional>

namespace rmw_oracle {

DObj d_tau(int n, const DObj& x) {
  (void)n;
  if (x.a > 1) return {x.a - 1, x.b - 1, x.s};
  // tau P_b = I_b[-1] = [b, n][-1].
  return {x.b, n, x.s - 1};
}

DObj d_tau_inv(int n, const DObj& x) {
  if (x.b < n) return {x.a + 1, x.b + 1, x.s};
  // tau^{-1} I_a = P_a[1] = [1, a][1].
  return {1, x.a, x.s + 1};
}

DObj d_shift(const DObj& x, int k) { return {x.a, x.b, x.s + k}; }

DObj d_from_cover(int n, int p, int i) {
  DObj x{1, i, 0};
  for (int k = 0; k < p; ++k) x = d_tau_inv(n, x);
  for (int k = 0; k < -p; ++k) x = d_tau(n, x);
  return x;
}

namespace {

int module_hom(const DObj& x, const DObj& y) { return x.a <= y.a && y.a <= x.b && x.b <= y.b ? 1 : 0; }

int euler(int n, const DObj& x, const DObj& y) {
  auto in = [](const DObj& m, int v) { return m.a <= v && v <= m.b ? 1 : 0; };
  int e = 0;
  for (int v = 1; v <= n; ++v) e += in(x, v) * in(y, v);
  for (int j = 1; j < n; ++j) e -= in(x, j + 1) * in(y, j);  // arrow j+1 -> j
  return e;
}

}  // namespace

int d_hom(int n, const DObj& x, const DObj& y) {
  if (y.s == x.s) return module_hom(x, y);
  if (y.s == x.s + 1) return module_hom(x, y) - euler(n, x, y);
  return 0;
}

int orbit_hom(int n, int a, int b, int p1, int i1, int p2, int i2) {
  const DObj x = d_from_cover(n, p1, i1);
  auto F = [&](DObj y, int k) {
    // F = tau^a [b]; F^{-1} = tau^{-a} [-b].
    const int reps = std::abs(k);
    for (int r = 0; r < reps; ++r) {
      const int ta = k > 0 ? a : -a;
      for (int t = 0; t < std::abs(ta); ++t) y = ta > 0 ? d_tau(n, y) : d_tau_inv(n, y);
      y = d_shift(y, k > 0 ? b : -b);
    }
    return y;
  };
  const DObj y = d_from_cover(n, p2, i2);
  // Hom(x, F^k y) vanishes once the shifts differ by more than one; the
  // window below is generous for the orbit parameters used in the tests.
  int total = 0;
  const int window = 4 * (n + 2) * (std::abs(a) + std::abs(b) + 1);
  for (int k = -window; k <= window; ++k) total += d_hom(n, x, F(y, k));
  return total;
}

int orbit_object_count(int n, int a, int b) { return n * std::abs(2 * a - b * (n + 1)) / 2; }

NonCrossing noncrossing_diagonals(int polygon) {
  std::vector<std::pair<int, int>> diags;
  for (int i = 0; i < polygon; ++i)
    for (int j = i + 2; j < polygon; ++j)
      if (!(i == 0 && j == polygon - 1)) diags.emplace_back(i, j);
  auto cross = [](const std::pair<int, int>& d, const std::pair<int, int>& e) {
    const auto [i, j] = d;
    const auto [k, l] = e;
    return (i < k && k < j && j < l) || (k < i && i < l && l < j);
  };
  NonCrossing out;
  out.by_size.assign(diags.size() + 1, 0);
  std::vector<int> chosen;
  const size_t max_size = polygon >= 3 ? static_cast<size_t>(polygon - 3) : 0;
  std::function<void(size_t)> rec = [&](size_t start) {
    ++out.by_size[chosen.size()];
    ++out.total;
    if (chosen.size() == max_size) ++out.triangulations;
    for (size_t d = start; d < diags.size(); ++d) {
      bool ok = true;
      for (int c : chosen) ok = ok && !cross(diags[d], diags[static_cast<size_t>(c)]);
      if (!ok) continue;
      chosen.push_back(static_cast<int>(d));
      rec(d + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  while (out.by_size.size() > 1 && out.by_size.back() == 0) out.by_size.pop_back();
  return out;
}

int nakayama_stable_count(int vertices, int loewy) { return vertices * (loewy - 1); }

}  // namespace rmw_oracle
