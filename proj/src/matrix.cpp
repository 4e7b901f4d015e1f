#include "endolie/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace endolie {

PrimeField::PrimeField(i64 modulus) : p(modulus) {
  if (modulus < 2 || modulus > 2147483647LL)
    throw std::invalid_argument("modulus out of range [2, 2^31-1]");
  if (!is_prime(modulus)) throw std::invalid_argument("modulus is not prime");
}

bool PrimeField::is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 PrimeField::pow(i64 a, i64 e) const {
  a = reduce(a);
  i64 r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

i64 PrimeField::inv(i64 a) const {
  a = reduce(a);
  if (a == 0) throw std::domain_error("inverse of zero");
  return pow(a, p - 2);
}

Mat::Mat(i64 p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dims");
}

Mat Mat::identity(i64 p, int n) {
  Mat m(p, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_rows(i64 p, const std::vector<std::vector<i64>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Mat m(p, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void Mat::set(int r, int c, i64 v) {
  i64 w = v % p_;
  if (w < 0) w += p_;
  a_[static_cast<size_t>(r) * cols_ + c] = w;
}

bool Mat::operator==(const Mat& o) const {
  return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Mat::is_zero() const {
  for (i64 v : a_)
    if (v != 0) return false;
  return true;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
    throw std::invalid_argument("shape/field mismatch in +");
  Mat r(p_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] + o.a_[i]) % p_;
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
    throw std::invalid_argument("shape/field mismatch in -");
  Mat r(p_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) {
    i64 v = (a_[i] - o.a_[i]) % p_;
    r.a_[i] = v < 0 ? v + p_ : v;
  }
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_ || p_ != o.p_)
    throw std::invalid_argument("shape/field mismatch in *");
  Mat r(p_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      i64 v = at(i, k);
      if (v == 0) continue;
      const size_t ro = static_cast<size_t>(k) * o.cols_;
      const size_t ri = static_cast<size_t>(i) * o.cols_;
      for (int j = 0; j < o.cols_; ++j)
        r.a_[ri + j] = (r.a_[ri + j] + v * o.a_[ro + j]) % p_;
    }
  }
  return r;
}

Mat Mat::scaled(i64 c) const {
  i64 w = c % p_;
  if (w < 0) w += p_;
  Mat r(p_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] * w) % p_;
  return r;
}

Mat Mat::transpose() const {
  Mat r(p_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

Mat Mat::kron(const Mat& o) const {
  if (p_ != o.p_) throw std::invalid_argument("field mismatch in kron");
  Mat r(p_, rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      i64 v = at(i, j);
      if (v == 0) continue;
      for (int k = 0; k < o.rows_; ++k)
        for (int l = 0; l < o.cols_; ++l)
          r.set(i * o.rows_ + k, j * o.cols_ + l, v * o.at(k, l) % p_);
    }
  return r;
}

Mat Mat::pow(i64 e) const {
  if (rows_ != cols_) throw std::invalid_argument("pow of non-square");
  Mat base = *this;
  Mat r = identity(p_, rows_);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::vector<i64> Mat::apply(const std::vector<i64>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("apply: size mismatch");
  std::vector<i64> r(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    i64 s = 0;
    for (int j = 0; j < cols_; ++j) s = (s + at(i, j) * (v[j] % p_)) % p_;
    r[i] = s < 0 ? s + p_ : s;
  }
  return r;
}

std::vector<i64> Mat::row(int r) const {
  return std::vector<i64>(a_.begin() + static_cast<size_t>(r) * cols_,
                          a_.begin() + static_cast<size_t>(r + 1) * cols_);
}

std::vector<i64> Mat::col(int c) const {
  std::vector<i64> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

Mat Mat::select_cols(const std::vector<int>& idx) const {
  Mat r(p_, rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (size_t j = 0; j < idx.size(); ++j)
      r.set(i, static_cast<int>(j), at(i, idx[j]));
  return r;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.p_ != b.p_)
    throw std::invalid_argument("hstack mismatch");
  Mat r(a.p_, a.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) r.set(i, j, a.at(i, j));
    for (int j = 0; j < b.cols_; ++j) r.set(i, a.cols_ + j, b.at(i, j));
  }
  return r;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  if (a.cols_ != b.cols_ || a.p_ != b.p_)
    throw std::invalid_argument("vstack mismatch");
  Mat r(a.p_, a.rows_ + b.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.set(i, j, a.at(i, j));
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.set(a.rows_ + i, j, b.at(i, j));
  return r;
}

Mat Mat::diag_sum(const Mat& a, const Mat& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("diag_sum field mismatch");
  Mat r(a.p_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) r.set(i, j, a.at(i, j));
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) r.set(a.rows_ + i, a.cols_ + j, b.at(i, j));
  return r;
}

Mat Mat::from_col(i64 p, const std::vector<i64>& v) {
  Mat r(p, static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) r.set(static_cast<int>(i), 0, v[i]);
  return r;
}

RowEchelon::RowEchelon(const Mat& input) : m(input) {
  PrimeField f(m.p_);
  int r = 0;
  for (int c = 0; c < m.cols_ && r < m.rows_; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows_; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols_; ++j) {
        i64 t = m.at(r, j);
        m.set(r, j, m.at(piv, j));
        m.set(piv, j, t);
      }
    i64 inv = f.inv(m.at(r, c));
    for (int j = c; j < m.cols_; ++j) m.set(r, j, f.mul(inv, m.at(r, j)));
    for (int i = 0; i < m.rows_; ++i) {
      if (i == r) continue;
      i64 v = m.at(i, c);
      if (v == 0) continue;
      for (int j = c; j < m.cols_; ++j)
        m.set(i, j, f.sub(m.at(i, j), f.mul(v, m.at(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
}

int Mat::rank() const { return RowEchelon(*this).rank(); }

Mat Mat::kernel() const {
  RowEchelon re(*this);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : re.pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat k(p_, cols_, static_cast<int>(free_cols.size()));
  PrimeField f(p_);
  for (size_t j = 0; j < free_cols.size(); ++j) {
    int fc = free_cols[j];
    k.set(fc, static_cast<int>(j), 1);
    for (size_t r = 0; r < re.pivots.size(); ++r)
      k.set(re.pivots[r], static_cast<int>(j),
            f.neg(re.m.at(static_cast<int>(r), fc)));
  }
  return k;
}

Mat Mat::column_space() const {
  RowEchelon re(*this);
  return select_cols(re.pivots);
}

std::optional<std::vector<i64>> Mat::solve(const std::vector<i64>& b) const {
  auto x = solve_matrix(from_col(p_, b));
  if (!x) return std::nullopt;
  return x->col(0);
}

std::optional<Mat> Mat::solve_matrix(const Mat& b) const {
  if (b.rows_ != rows_ || b.p_ != p_)
    throw std::invalid_argument("solve: shape/field mismatch");
  RowEchelon re(hstack(*this, b));
  Mat x(p_, cols_, b.cols_);
  for (size_t r = 0; r < re.pivots.size(); ++r) {
    int c = re.pivots[r];
    if (c >= cols_) return std::nullopt;  // pivot in the rhs block
    for (int j = 0; j < b.cols_; ++j)
      x.set(c, j, re.m.at(static_cast<int>(r), cols_ + j));
  }
  return x;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  if (rank() != rows_) return std::nullopt;
  return solve_matrix(identity(p_, rows_));
}

std::string Mat::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) os << at(i, j) << (j + 1 < cols_ ? " " : "");
    os << "\n";
  }
  return os.str();
}

}  // namespace endolie
