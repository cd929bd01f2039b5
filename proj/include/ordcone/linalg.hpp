#ifndef ORDCONE_LINALG_HPP
#define ORDCONE_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordcone/rational.hpp"

namespace ordcone {

/// Thrown whenever two operands disagree in dimension.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * A vector of exact rationals; used both for points of the ambient space and
 * for linear functionals on it (the dual is identified with the same
 * coordinate space through the standard pairing).
 */
class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t dim) : entries_(dim) {}
  explicit QVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  QVector(std::initializer_list<Rational> entries) : entries_(entries) {}

  static QVector unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  std::span<const Rational> entries() const { return entries_; }

  bool is_zero() const;

  QVector operator-() const;
  QVector& operator+=(const QVector& other);
  QVector& operator-=(const QVector& other);
  QVector& operator*=(const Rational& s);

  friend QVector operator+(QVector a, const QVector& b) { return a += b; }
  friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
  friend QVector operator*(const Rational& s, QVector a) { return a *= s; }
  friend bool operator==(const QVector&, const QVector&) = default;
  /// Lexicographic order on entries; used for canonical sorting.
  friend bool operator<(const QVector& a, const QVector& b);

 private:
  std::vector<Rational> entries_;
};

Rational dot(const QVector& a, const QVector& b);

/// Scales to the primitive integer vector on the same ray (positive factor).
QVector primitive(const QVector& v);

/// As primitive(), additionally flipping the sign so that the first nonzero
/// entry is positive. Only meaningful for directions of a subspace.
QVector primitive_line(const QVector& v);

std::string to_string(const QVector& v);

/// Row-major matrix of rationals. The column count is tracked separately so
/// that matrices with zero rows still know their width.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t nrows, std::size_t ncols);
  QMatrix(std::size_t ncols, std::vector<QVector> rows);

  static QMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length nrows).
  static QMatrix from_columns(std::size_t nrows, std::span<const QVector> columns);

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const QVector& row(std::size_t i) const { return rows_[i]; }
  const std::vector<QVector>& rows() const { return rows_; }
  QVector column(std::size_t j) const;
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }

  QMatrix transpose() const;
  QVector operator*(const QVector& x) const;
  QMatrix operator*(const QMatrix& other) const;
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t ncols_ = 0;
  std::vector<QVector> rows_;
};

/// Exact rank, computed by fraction-free elimination.
std::size_t rank(const QMatrix& m);
std::size_t rank(std::size_t ncols, std::span<const QVector> rows);

/**
 * Basis of {x : m x = 0}. Vectors are primitive integer vectors, one per free
 * column of the echelon form, with sign fixed by the first nonzero entry.
 * An empty result means the kernel is trivial.
 */
std::vector<QVector> kernel_basis(const QMatrix& m);
std::vector<QVector> kernel_basis(std::size_t ncols, std::span<const QVector> rows);

/// A particular solution of m x = b with free variables set to zero, or
/// std::nullopt if the system is inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);

/// Reduced row echelon form, zero rows dropped.
struct RowEchelon {
  std::vector<QVector> rows;
  std::vector<std::size_t> pivots;
};
RowEchelon reduced_row_echelon(std::size_t ncols, std::span<const QVector> rows);

/// Canonical basis of span(rows): the nonzero RREF rows, primitive and sign-fixed.
std::vector<QVector> span_basis(std::size_t ncols, std::span<const QVector> rows);

/// True iff the two families span the same subspace of Q^ncols.
bool same_span(std::size_t ncols, std::span<const QVector> a, std::span<const QVector> b);

/// Basis of the orthogonal complement {y : <y, v> = 0 for all v in vs}.
inline std::vector<QVector> orthogonal_complement(std::size_t ncols, std::span<const QVector> vs) {
  return kernel_basis(ncols, vs);
}

}  // namespace ordcone

#endif  // ORDCONE_LINALG_HPP
