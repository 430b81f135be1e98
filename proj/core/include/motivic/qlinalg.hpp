#pragma once

// Exact rational linear algebra: dense matrices over Q, Kronecker products,
// row reduction, bounded chain complexes and their homology.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace motivic {

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
/// Parses "p/q" or "p". Throws InvariantError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Dense row-major matrix of rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }
  static QMatrix ones(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  QMatrix transpose() const;
  bool is_zero() const;
  /// Copies `block` into this matrix with its top-left corner at (row, col).
  void set_block(std::size_t row, std::size_t col, const QMatrix& block);
  QMatrix column(std::size_t c) const;

  friend bool operator==(const QMatrix& a, const QMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// A * B. Throws ShapeError when A.cols() != B.rows().
QMatrix matmul(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Rational& s, const QMatrix& a);

/// Kronecker product. Row (i, j) of the result, i a row of A and j a row of
/// B, sits at index i * B.rows() + j; columns are flattened the same way.
QMatrix kron(const QMatrix& a, const QMatrix& b);
/// kron of a list, left to right; the empty list gives the 1x1 identity.
QMatrix kron_all(const std::vector<QMatrix>& factors);

/// Block-diagonal sum.
QMatrix direct_sum(const QMatrix& a, const QMatrix& b);

struct RowEchelon {
  QMatrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination; the pivot in each column is the first nonzero
/// entry at or below the current row.
RowEchelon row_reduce(const QMatrix& a);
std::size_t rank(const QMatrix& a);
/// Columns form a basis of ker A: one vector per free column, with a 1 in
/// that column.
QMatrix kernel_basis(const QMatrix& a);

/// Bounded chain complex C_lo .. C_hi with d_n : C_n -> C_{n-1}.
class ChainComplex {
 public:
  ChainComplex() = default;
  /// Missing dims are zero; missing differentials are zero maps. Throws
  /// ShapeError on bad shapes and InvariantError unless d_{n} d_{n+1} = 0.
  ChainComplex(int lo, int hi, std::map<int, std::size_t> dims,
               std::map<int, QMatrix> differentials = {});

  /// Q^dim placed in one degree.
  static ChainComplex concentrated(int degree, std::size_t dim);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  std::size_t dim(int n) const;
  /// d_n as a dim(n-1) x dim(n) matrix.
  QMatrix differential(int n) const;
  const std::map<int, std::size_t>& dims() const { return dims_; }
  const std::map<int, QMatrix>& differentials() const { return differentials_; }

 private:
  int lo_ = 0;
  int hi_ = -1;
  std::map<int, std::size_t> dims_;
  std::map<int, QMatrix> differentials_;
};

/// dim H_n = nullity(d_n) - rank(d_{n+1}) for lo <= n <= hi.
std::map<int, std::size_t> homology_dims(const ChainComplex& c);
long euler_characteristic(const ChainComplex& c);
long euler_characteristic(const std::map<int, std::size_t>& dims);

/// Degreewise maps C_n -> D_n; missing degrees are zero.
struct ChainMap {
  std::map<int, QMatrix> components;

  QMatrix at(int n, const ChainComplex& source, const ChainComplex& target) const;
};

bool is_chain_map(const ChainMap& f, const ChainComplex& source, const ChainComplex& target);
ChainMap compose(const ChainMap& f, const ChainMap& g, const ChainComplex& a, const ChainComplex& b,
                 const ChainComplex& c);  // g o f : a -> c

/// Cone(f)_n = C_{n-1} (+) D_n with d(x, y) = (-dx, f x + dy).
ChainComplex mapping_cone(const ChainMap& f, const ChainComplex& source, const ChainComplex& target);

}  // namespace motivic
