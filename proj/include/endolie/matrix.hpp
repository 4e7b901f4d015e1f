#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace endolie {

using i64 = std::int64_t;

/// Arithmetic in the prime field F_p. The modulus is checked for
/// primality at construction; all results are residues in [0, p).
struct PrimeField {
  i64 p;

  explicit PrimeField(i64 modulus);

  static bool is_prime(i64 n);

  i64 reduce(i64 x) const {
    i64 r = x % p;
    return r < 0 ? r + p : r;
  }
  i64 add(i64 a, i64 b) const { return (a + b) % p; }
  i64 sub(i64 a, i64 b) const { return reduce(a - b); }
  i64 mul(i64 a, i64 b) const { return (a * b) % p; }
  i64 neg(i64 a) const { return a == 0 ? 0 : p - a; }
  i64 pow(i64 a, i64 e) const;
  i64 inv(i64 a) const;  // throws on a == 0
};

/// Dense matrix over F_p, row-major. Pivoting is always "first nonzero",
/// so echelon forms and kernel bases are reproducible byte for byte.
class Mat {
 public:
  Mat() : p_(2), rows_(0), cols_(0) {}
  Mat(i64 p, int rows, int cols);

  static Mat identity(i64 p, int n);
  static Mat zero(i64 p, int rows, int cols) { return Mat(p, rows, cols); }
  static Mat from_rows(i64 p, const std::vector<std::vector<i64>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  i64 p() const { return p_; }

  i64 at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, i64 v);

  bool operator==(const Mat& o) const;
  bool is_zero() const;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scaled(i64 c) const;
  Mat transpose() const;
  Mat kron(const Mat& o) const;
  Mat pow(i64 e) const;

  std::vector<i64> apply(const std::vector<i64>& v) const;  // m * v
  std::vector<i64> row(int r) const;
  std::vector<i64> col(int c) const;
  Mat select_cols(const std::vector<int>& idx) const;

  static Mat hstack(const Mat& a, const Mat& b);
  static Mat vstack(const Mat& a, const Mat& b);
  /// Block diagonal of a and b.
  static Mat diag_sum(const Mat& a, const Mat& b);
  static Mat from_col(i64 p, const std::vector<i64>& v);

  int rank() const;
  /// Columns form a basis of the right null space (count = cols - rank).
  Mat kernel() const;
  /// Column space basis, as a matrix whose columns are the chosen
  /// original columns reduced to a basis (deterministic order).
  Mat column_space() const;

  /// Some x with (*this) * x = b, or nullopt when inconsistent.
  std::optional<std::vector<i64>> solve(const std::vector<i64>& b) const;
  /// Some X with (*this) * X = B, or nullopt.
  std::optional<Mat> solve_matrix(const Mat& b) const;
  std::optional<Mat> inverse() const;

  std::string to_string() const;

 private:
  i64 p_;
  int rows_, cols_;
  std::vector<i64> a_;

  friend struct RowEchelon;
};

/// Row echelon data computed once and queried for rank/solve/kernel.
struct RowEchelon {
  Mat m;                    // reduced rows
  std::vector<int> pivots;  // pivot column of each nonzero row

  explicit RowEchelon(const Mat& input);
  int rank() const { return static_cast<int>(pivots.size()); }
};

}  // namespace endolie
