// Exact dense linear algebra over the rationals.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace rmw {

using Q = mpq_class;
using Vec = std::vector<Q>;

// Row-major dense matrix of rationals.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Mat zeros(int rows, int cols) { return Mat(rows, cols); }
  static Mat identity(int n);
  // Matrix whose columns are the given vectors (all of length `rows`).
  static Mat from_cols(const std::vector<Vec>& cols, int rows);
  static Mat from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  Q& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Q& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  Vec col(int j) const;
  Vec row(int i) const;
  void set_col(int j, const Vec& v);
  std::vector<Vec> col_list() const;

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Vec operator*(const Vec& v) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  bool operator==(const Mat& o) const;
  bool is_zero() const;

  // Horizontal / vertical concatenation.
  static Mat hcat(const Mat& a, const Mat& b);
  static Mat vcat(const Mat& a, const Mat& b);
  Mat block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const Mat& b);

  std::string str() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Q> a_;
};

struct RrefResult {
  Mat R;                    // reduced row echelon form
  std::vector<int> pivots;  // pivot column of each nonzero row
};

RrefResult rref(const Mat& m);
int rank(const Mat& m);
// Basis of {x : m x = 0}, as columns of a (cols x k) matrix.
Mat nullspace(const Mat& m);
// Basis of the column space made of a subset of the columns of m.
Mat colspace(const Mat& m);
// Indices of a maximal independent subset of columns (greedy left to right).
std::vector<int> independent_cols(const Mat& m);
// Rows spanning {y : y m = 0}; result is (k x rows).
Mat left_annihilator(const Mat& m);
// A particular solution of m x = b, if any (free variables set to zero).
std::optional<Vec> solve(const Mat& m, const Vec& b);
std::optional<Mat> solve(const Mat& m, const Mat& b);
std::optional<Mat> inverse(const Mat& m);
// Columns extending the column space of `sub` (in Q^dim) to all of Q^dim,
// chosen among standard basis vectors.
Mat complement_basis(const Mat& sub, int dim);
// True iff every column of `v` lies in the column space of `space`.
bool in_span(const Mat& space, const Mat& v);
bool in_span(const Mat& space, const Vec& v);
// Intersection of two column spaces in Q^n (basis as columns).
Mat intersect(const Mat& a, const Mat& b);

Vec vadd(const Vec& a, const Vec& b);
Vec vsub(const Vec& a, const Vec& b);
Vec vscale(const Q& s, const Vec& a);
Q dot(const Vec& a, const Vec& b);
bool vzero(const Vec& a);
Vec unit_vec(int n, int i);

std::string qstr(const Q& q);
Q qparse(const std::string& s);

// Deterministic pseudo-random source used by all generic-choice steps.
class Rng {
 public:
  explicit Rng(uint64_t seed = 0x5eed) : g_(seed) {}
  int small_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
  Q small_q() { return Q(small_int(-4, 4)); }
  Vec random_vec(int n);
  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

}  // namespace rmw
