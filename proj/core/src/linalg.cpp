#include "rmw/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rmw {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols, int rows) {
  Mat m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows) throw std::invalid_argument("from_cols: length mismatch");
    for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
  Mat m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols) throw std::invalid_argument("from_rows: length mismatch");
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Mat::col(int j) const {
  Vec v(r_);
  for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Mat::row(int i) const {
  Vec v(c_);
  for (int j = 0; j < c_; ++j) v[j] = (*this)(i, j);
  return v;
}

void Mat::set_col(int j, const Vec& v) {
  for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

std::vector<Vec> Mat::col_list() const {
  std::vector<Vec> out;
  out.reserve(c_);
  for (int j = 0; j < c_; ++j) out.push_back(col(j));
  return out;
}

Mat Mat::transpose() const {
  Mat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("Mat*: dimension mismatch");
  Mat m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Q& x = (*this)(i, k);
      if (sgn(x) == 0) continue;
      for (int j = 0; j < o.c_; ++j) {
        const Q& y = o(k, j);
        if (sgn(y) != 0) m(i, j) += x * y;
      }
    }
  return m;
}

Vec Mat::operator*(const Vec& v) const {
  if (c_ != static_cast<int>(v.size())) throw std::invalid_argument("Mat*Vec: dimension mismatch");
  Vec out(r_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k)
      if (sgn(v[k]) != 0 && sgn((*this)(i, k)) != 0) out[i] += (*this)(i, k) * v[k];
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat+: dimension mismatch");
  Mat m(*this);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat-: dimension mismatch");
  Mat m(*this);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
  return m;
}

bool Mat::operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

Mat Mat::hcat(const Mat& a, const Mat& b) {
  if (a.c_ == 0) return b;
  if (b.c_ == 0) return a;
  if (a.r_ != b.r_) throw std::invalid_argument("hcat: row mismatch");
  Mat m(a.r_, a.c_ + b.c_);
  m.set_block(0, 0, a);
  m.set_block(0, a.c_, b);
  return m;
}

Mat Mat::vcat(const Mat& a, const Mat& b) {
  if (a.r_ == 0 && b.r_ == 0) return Mat(0, std::max(a.c_, b.c_));
  if (a.r_ == 0) return b;
  if (b.r_ == 0) return a;
  if (a.c_ != b.c_) throw std::invalid_argument("vcat: column mismatch");
  Mat m(a.r_ + b.r_, a.c_);
  m.set_block(0, 0, a);
  m.set_block(a.r_, 0, b);
  return m;
}

Mat Mat::block(int r0, int c0, int nr, int nc) const {
  Mat m(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void Mat::set_block(int r0, int c0, const Mat& b) {
  for (int i = 0; i < b.r_; ++i)
    for (int j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::string Mat::str() const {
  std::ostringstream os;
  for (int i = 0; i < r_; ++i) {
    os << "[";
    for (int j = 0; j < c_; ++j) os << (j ? " " : "") << qstr((*this)(i, j));
    os << "]\n";
  }
  return os.str();
}

RrefResult rref(const Mat& m) {
  RrefResult res{m, {}};
  Mat& R = res.R;
  int rows = R.rows(), cols = R.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(R(i, c)) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(R(piv, j), R(r, j));
    Q inv = 1 / R(r, c);
    for (int j = c; j < cols; ++j) R(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(R(i, c)) == 0) continue;
      Q f = R(i, c);
      for (int j = c; j < cols; ++j)
        if (sgn(R(r, j)) != 0) R(i, j) -= f * R(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  return res;
}

int rank(const Mat& m) {
  if (m.empty()) return 0;
  return static_cast<int>(rref(m).pivots.size());
}

Mat nullspace(const Mat& m) {
  int cols = m.cols();
  if (m.rows() == 0) return Mat::identity(cols);
  auto rr = rref(m);
  std::vector<bool> is_piv(cols, false);
  for (int p : rr.pivots) is_piv[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec v(cols);
    v[f] = 1;
    for (size_t r = 0; r < rr.pivots.size(); ++r) v[rr.pivots[r]] = -rr.R(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return Mat::from_cols(basis, cols);
}

std::vector<int> independent_cols(const Mat& m) {
  if (m.empty()) return {};
  return rref(m).pivots;
}

Mat colspace(const Mat& m) {
  auto idx = independent_cols(m);
  Mat out(m.rows(), static_cast<int>(idx.size()));
  for (size_t k = 0; k < idx.size(); ++k) out.set_col(static_cast<int>(k), m.col(idx[k]));
  return out;
}

Mat left_annihilator(const Mat& m) {
  if (m.cols() == 0) return Mat::identity(m.rows());
  return nullspace(m.transpose()).transpose();
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  int rows = m.rows(), cols = m.cols();
  if (static_cast<int>(b.size()) != rows) throw std::invalid_argument("solve: rhs length mismatch");
  Mat aug(rows, cols + 1);
  aug.set_block(0, 0, m);
  for (int i = 0; i < rows; ++i) aug(i, cols) = b[i];
  auto rr = rref(aug);
  Vec x(cols);
  for (size_t r = 0; r < rr.pivots.size(); ++r) {
    int p = rr.pivots[r];
    if (p == cols) return std::nullopt;
    x[p] = rr.R(static_cast<int>(r), cols);
  }
  return x;
}

std::optional<Mat> solve(const Mat& m, const Mat& b) {
  int rows = m.rows(), cols = m.cols(), k = b.cols();
  if (b.rows() != rows) throw std::invalid_argument("solve: rhs rows mismatch");
  Mat aug(rows, cols + k);
  aug.set_block(0, 0, m);
  aug.set_block(0, cols, b);
  auto rr = rref(aug);
  Mat x(cols, k);
  for (size_t r = 0; r < rr.pivots.size(); ++r) {
    int p = rr.pivots[r];
    if (p >= cols) return std::nullopt;
    for (int j = 0; j < k; ++j) x(p, j) = rr.R(static_cast<int>(r), cols + j);
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Mat::identity(m.rows()));
}

Mat complement_basis(const Mat& sub, int dim) {
  Mat cur = sub.cols() == 0 ? Mat(dim, 0) : colspace(sub);
  int r = cur.cols();
  std::vector<Vec> extra;
  for (int i = 0; i < dim && r < dim; ++i) {
    Mat cand = Mat::hcat(cur, Mat::from_cols({unit_vec(dim, i)}, dim));
    if (rank(cand) > r) {
      cur = cand;
      ++r;
      extra.push_back(unit_vec(dim, i));
    }
  }
  return Mat::from_cols(extra, dim);
}

bool in_span(const Mat& space, const Mat& v) {
  if (v.cols() == 0) return true;
  if (space.cols() == 0) return v.is_zero();
  return solve(space, v).has_value();
}

bool in_span(const Mat& space, const Vec& v) { return in_span(space, Mat::from_cols({v}, static_cast<int>(v.size()))); }

Mat intersect(const Mat& a, const Mat& b) {
  int n = a.rows();
  if (a.cols() == 0 || b.cols() == 0) return Mat(n, 0);
  // x in both: a u = b w  <=>  [a -b] (u;w) = 0.
  Mat neg_b = Mat::zeros(b.rows(), b.cols()) - b;
  Mat ker = nullspace(Mat::hcat(a, neg_b));
  Mat u = ker.block(0, 0, a.cols(), ker.cols());
  return colspace(a * u);
}

Vec vadd(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
Vec vsub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
Vec vscale(const Q& s, const Vec& a) {
  Vec r(a);
  for (auto& x : r) x *= s;
  return r;
}
Q dot(const Vec& a, const Vec& b) {
  Q s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}
bool vzero(const Vec& a) {
  for (const auto& x : a)
    if (sgn(x) != 0) return false;
  return true;
}
Vec unit_vec(int n, int i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

std::string qstr(const Q& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Q qparse(const std::string& s) {
  Q q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

Vec Rng::random_vec(int n) {
  Vec v(n);
  for (auto& x : v) x = small_q();
  return v;
}

}  // namespace rmw
