#include "motivic/qlinalg.hpp"

#include <algorithm>
#include <cctype>

#include "motivic/error.hpp"

namespace motivic {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw InvariantError("Rational: malformed literal '" + std::string(text) + "'");
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num));
  mpz_class d{std::string(den)};
  if (d == 0) throw InvariantError("Rational: denominator must be nonzero");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------------------

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw ShapeError("QMatrix: length(entries) must equal rows * cols");
  for (auto& e : entries_) e.canonicalize();
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("QMatrix: ragged initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  for (auto& e : entries_) e.canonicalize();
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::ones(std::size_t rows, std::size_t cols) {
  return QMatrix(rows, cols, std::vector<Rational>(rows * cols, Rational(1)));
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool QMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

void QMatrix::set_block(std::size_t row, std::size_t col, const QMatrix& block) {
  if (row + block.rows() > rows_ || col + block.cols() > cols_)
    throw ShapeError("QMatrix::set_block: block does not fit");
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c) (*this)(row + r, col + c) = block(r, c);
}

QMatrix QMatrix::column(std::size_t c) const {
  QMatrix v(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, c);
  return v;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matmul: inner dimensions differ");
  QMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Rational& x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += x * b(l, j);
    }
  return c;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) { return matmul(a, b); }

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix sum: shapes differ");
  QMatrix c = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t col = 0; col < a.cols(); ++col) c(r, col) += b(r, col);
  return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) { return a + Rational(-1) * b; }

QMatrix operator*(const Rational& s, const QMatrix& a) {
  QMatrix c = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t col = 0; col < a.cols(); ++col) c(r, col) *= s;
  return c;
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) c(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return c;
}

QMatrix kron_all(const std::vector<QMatrix>& factors) {
  QMatrix acc = QMatrix::identity(1);
  for (const auto& f : factors) acc = kron(acc, f);
  return acc;
}

QMatrix direct_sum(const QMatrix& a, const QMatrix& b) {
  QMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), a.cols(), b);
  return c;
}

// ---------------------------------------------------------------------------

RowEchelon row_reduce(const QMatrix& a) {
  RowEchelon out{a, {}};
  QMatrix& m = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const QMatrix& a) { return row_reduce(a).pivots.size(); }

QMatrix kernel_basis(const QMatrix& a) {
  const RowEchelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  QMatrix basis(a.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const std::size_t f = free_cols[j];
    basis(f, j) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], j) = -e.reduced(r, f);
  }
  return basis;
}

// ---------------------------------------------------------------------------

ChainComplex::ChainComplex(int lo, int hi, std::map<int, std::size_t> dims,
                           std::map<int, QMatrix> differentials)
    : lo_(lo), hi_(hi), dims_(std::move(dims)), differentials_(std::move(differentials)) {
  for (const auto& [n, d] : dims_)
    if (d != 0 && (n < lo_ || n > hi_)) throw InvariantError("ChainComplex: dimension outside [lo, hi]");
  for (const auto& [n, m] : differentials_) {
    if (m.rows() != dim(n - 1) || m.cols() != dim(n))
      throw ShapeError("ChainComplex: differential d_" + std::to_string(n) + " has the wrong shape");
  }
  for (int n = lo_; n < hi_; ++n) {
    if (!(differential(n) * differential(n + 1)).is_zero())
      throw InvariantError("ChainComplex: d_" + std::to_string(n) + " o d_" + std::to_string(n + 1) +
                           " != 0");
  }
}

ChainComplex ChainComplex::concentrated(int degree, std::size_t dim) {
  return ChainComplex(degree, degree, {{degree, dim}});
}

std::size_t ChainComplex::dim(int n) const {
  auto it = dims_.find(n);
  return it == dims_.end() ? 0 : it->second;
}

QMatrix ChainComplex::differential(int n) const {
  auto it = differentials_.find(n);
  if (it != differentials_.end()) return it->second;
  return QMatrix(dim(n - 1), dim(n));
}

std::map<int, std::size_t> homology_dims(const ChainComplex& c) {
  std::map<int, std::size_t> h;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    const std::size_t nullity = c.dim(n) - rank(c.differential(n));
    h[n] = nullity - rank(c.differential(n + 1));
  }
  return h;
}

long euler_characteristic(const std::map<int, std::size_t>& dims) {
  long chi = 0;
  for (const auto& [n, d] : dims) chi += (n % 2 == 0 ? 1L : -1L) * static_cast<long>(d);
  return chi;
}

long euler_characteristic(const ChainComplex& c) { return euler_characteristic(c.dims()); }

QMatrix ChainMap::at(int n, const ChainComplex& source, const ChainComplex& target) const {
  auto it = components.find(n);
  if (it != components.end()) return it->second;
  return QMatrix(target.dim(n), source.dim(n));
}

bool is_chain_map(const ChainMap& f, const ChainComplex& source, const ChainComplex& target) {
  for (const auto& [n, m] : f.components)
    if (m.rows() != target.dim(n) || m.cols() != source.dim(n)) return false;
  const int lo = std::min(source.lo(), target.lo());
  const int hi = std::max(source.hi(), target.hi());
  for (int n = lo; n <= hi + 1; ++n) {
    if (target.differential(n) * f.at(n, source, target) != f.at(n - 1, source, target) * source.differential(n))
      return false;
  }
  return true;
}

ChainMap compose(const ChainMap& f, const ChainMap& g, const ChainComplex& a, const ChainComplex& b,
                 const ChainComplex& c) {
  ChainMap h;
  for (int n = std::min({a.lo(), b.lo(), c.lo()}); n <= std::max({a.hi(), b.hi(), c.hi()}); ++n) {
    if (a.dim(n) == 0 || c.dim(n) == 0) continue;
    h.components[n] = g.at(n, b, c) * f.at(n, a, b);
  }
  return h;
}

ChainComplex mapping_cone(const ChainMap& f, const ChainComplex& source, const ChainComplex& target) {
  if (!is_chain_map(f, source, target)) throw InvariantError("mapping_cone: not a chain map");
  const int lo = std::min(source.lo() + 1, target.lo());
  const int hi = std::max(source.hi() + 1, target.hi());
  std::map<int, std::size_t> dims;
  for (int n = lo; n <= hi; ++n) dims[n] = source.dim(n - 1) + target.dim(n);
  std::map<int, QMatrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    // (x, y) in C_{n-1} + D_n  ->  (-dx, f x + dy) in C_{n-2} + D_{n-1}
    QMatrix d(dims[n - 1], dims[n]);
    d.set_block(0, 0, Rational(-1) * source.differential(n - 1));
    d.set_block(source.dim(n - 2), 0, f.at(n - 1, source, target));
    d.set_block(source.dim(n - 2), source.dim(n - 1), target.differential(n));
    diffs[n] = std::move(d);
  }
  return ChainComplex(lo, hi, std::move(dims), std::move(diffs));
}

}  // namespace motivic
