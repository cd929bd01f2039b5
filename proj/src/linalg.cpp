#include "ordcone/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace ordcone {

QVector QVector::unit(std::size_t dim, std::size_t i) {
  QVector v(dim);
  v[i] = 1;
  return v;
}

bool QVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

QVector QVector::operator-() const {
  QVector out(*this);
  for (auto& q : out.entries_) q = -q;
  return out;
}

QVector& QVector::operator+=(const QVector& other) {
  if (other.dim() != dim()) throw DimensionError("vector dimensions differ");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

QVector& QVector::operator-=(const QVector& other) {
  if (other.dim() != dim()) throw DimensionError("vector dimensions differ");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

QVector& QVector::operator*=(const Rational& s) {
  for (auto& q : entries_) q *= s;
  return *this;
}

bool operator<(const QVector& a, const QVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.dim() != b.dim()) throw DimensionError("dot: dimensions differ");
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

QVector primitive(const QVector& v) {
  Integer den_lcm = 1;
  for (const auto& q : v) den_lcm = lcm(den_lcm, denominator_of(q));
  Integer num_gcd = 0;
  for (const auto& q : v) num_gcd = gcd(num_gcd, Integer(numerator_of(q) * (den_lcm / denominator_of(q))));
  if (num_gcd == 0) return v;
  QVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    out[i] = Rational(Integer(numerator_of(v[i]) * (den_lcm / denominator_of(v[i])) / num_gcd));
  return out;
}

QVector primitive_line(const QVector& v) {
  QVector p = primitive(v);
  for (const auto& q : p) {
    if (q == 0) continue;
    if (q < 0) p = -p;
    break;
  }
  return p;
}

std::string to_string(const QVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << to_string(v[i]);
  os << ')';
  return os.str();
}

QMatrix::QMatrix(std::size_t nrows, std::size_t ncols) : ncols_(ncols), rows_(nrows, QVector(ncols)) {}

QMatrix::QMatrix(std::size_t ncols, std::vector<QVector> rows) : ncols_(ncols), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.dim() != ncols_) throw DimensionError("matrix rows must share the column count");
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(std::size_t nrows, std::span<const QVector> columns) {
  QMatrix m(nrows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].dim() != nrows) throw DimensionError("column length mismatch");
    for (std::size_t i = 0; i < nrows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

QVector QMatrix::column(std::size_t j) const {
  QVector c(nrows());
  for (std::size_t i = 0; i < nrows(); ++i) c[i] = rows_[i][j];
  return c;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(ncols_, nrows());
  for (std::size_t i = 0; i < nrows(); ++i)
    for (std::size_t j = 0; j < ncols_; ++j) t(j, i) = rows_[i][j];
  return t;
}

QVector QMatrix::operator*(const QVector& x) const {
  if (x.dim() != ncols_) throw DimensionError("matrix-vector product: dimension mismatch");
  QVector y(nrows());
  for (std::size_t i = 0; i < nrows(); ++i) y[i] = dot(rows_[i], x);
  return y;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (other.nrows() != ncols_) throw DimensionError("matrix product: dimension mismatch");
  QMatrix out(nrows(), other.ncols());
  for (std::size_t i = 0; i < nrows(); ++i)
    for (std::size_t j = 0; j < other.ncols(); ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < ncols_; ++k) s += rows_[i][k] * other(k, j);
      out(i, j) = s;
    }
  return out;
}

namespace {

using IntRow = std::vector<Integer>;

// Clears denominators row by row; scaling a row does not change its span.
std::vector<IntRow> integer_rows(std::size_t ncols, std::span<const QVector> rows) {
  std::vector<IntRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.dim() != ncols) throw DimensionError("row length differs from column count");
    Integer den = 1;
    for (const auto& q : r) den = lcm(den, denominator_of(q));
    IntRow ir(ncols);
    for (std::size_t j = 0; j < ncols; ++j) ir[j] = numerator_of(r[j]) * (den / denominator_of(r[j]));
    out.push_back(std::move(ir));
  }
  return out;
}

struct IntegerEchelon {
  std::vector<IntRow> rows;  // only the pivot rows, in order
  std::vector<std::size_t> pivots;
};

// Bareiss fraction-free elimination. Every division below is exact.
IntegerEchelon bareiss(std::vector<IntRow> m, std::size_t ncols) {
  IntegerEchelon out;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

// Solves the echelon system for the pivot variables given values of the others.
void back_substitute(const IntegerEchelon& e, std::size_t ncols, std::vector<Rational>& x) {
  for (std::size_t k = e.rows.size(); k-- > 0;) {
    const std::size_t p = e.pivots[k];
    Rational s = 0;
    for (std::size_t j = p + 1; j < ncols; ++j)
      if (x[j] != 0) s += Rational(e.rows[k][j]) * x[j];
    x[p] = -s / Rational(e.rows[k][p]);
  }
}

}  // namespace

std::size_t rank(std::size_t ncols, std::span<const QVector> rows) {
  return bareiss(integer_rows(ncols, rows), ncols).pivots.size();
}

std::size_t rank(const QMatrix& m) { return rank(m.ncols(), m.rows()); }

std::vector<QVector> kernel_basis(std::size_t ncols, std::span<const QVector> rows) {
  const IntegerEchelon e = bareiss(integer_rows(ncols, rows), ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<QVector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(ncols);
    x[f] = 1;
    back_substitute(e, ncols, x);
    basis.push_back(primitive_line(QVector(std::move(x))));
  }
  return basis;
}

std::vector<QVector> kernel_basis(const QMatrix& m) { return kernel_basis(m.ncols(), m.rows()); }

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.dim() != m.nrows()) throw DimensionError("solve: right-hand side length must equal row count");
  const std::size_t n = m.ncols();
  std::vector<QVector> augmented;
  augmented.reserve(m.nrows());
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    std::vector<Rational> r(m.row(i).begin(), m.row(i).end());
    r.push_back(b[i]);
    augmented.emplace_back(std::move(r));
  }
  const IntegerEchelon e = bareiss(integer_rows(n + 1, augmented), n + 1);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;

  std::vector<Rational> x(n + 1);
  x[n] = -1;  // moves the right-hand side across: sum a_j x_j - b = 0
  back_substitute(e, n + 1, x);
  x.pop_back();
  return QVector(std::move(x));
}

RowEchelon reduced_row_echelon(std::size_t ncols, std::span<const QVector> rows) {
  const IntegerEchelon e = bareiss(integer_rows(ncols, rows), ncols);
  RowEchelon out;
  out.pivots = e.pivots;
  for (const auto& ir : e.rows) {
    QVector r(ncols);
    for (std::size_t j = 0; j < ncols; ++j) r[j] = Rational(ir[j]);
    out.rows.push_back(std::move(r));
  }
  for (std::size_t k = out.rows.size(); k-- > 0;) {
    const std::size_t p = out.pivots[k];
    out.rows[k] *= Rational(1) / out.rows[k][p];
    for (std::size_t i = 0; i < k; ++i) {
      const Rational f = out.rows[i][p];
      if (f != 0) out.rows[i] -= f * out.rows[k];
    }
  }
  return out;
}

std::vector<QVector> span_basis(std::size_t ncols, std::span<const QVector> rows) {
  RowEchelon e = reduced_row_echelon(ncols, rows);
  std::vector<QVector> out;
  out.reserve(e.rows.size());
  for (const auto& r : e.rows) out.push_back(primitive_line(r));
  return out;
}

bool same_span(std::size_t ncols, std::span<const QVector> a, std::span<const QVector> b) {
  const std::size_t ra = rank(ncols, a);
  if (ra != rank(ncols, b)) return false;
  std::vector<QVector> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  return rank(ncols, both) == ra;
}

}  // namespace ordcone
