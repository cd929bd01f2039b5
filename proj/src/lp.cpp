#include "ordcone/lp.hpp"

namespace ordcone {

StandardForm to_standard_form(const LinearProgram& lp) {
  if (lp.objective.dim() != lp.num_vars) throw DimensionError("objective length differs from variable count");
  std::size_t slacks = 0;
  for (const auto& c : lp.constraints) {
    if (c.coefficients.dim() != lp.num_vars) throw DimensionError("constraint length differs from variable count");
    if (c.relation != Relation::Equal) ++slacks;
  }
  const std::size_t n = lp.num_vars + slacks;
  StandardForm sf;
  sf.original_vars = lp.num_vars;
  sf.a = QMatrix(lp.constraints.size(), n);
  sf.b = QVector(lp.constraints.size());
  sf.c = QVector(n);
  for (std::size_t j = 0; j < lp.num_vars; ++j) sf.c[j] = lp.objective[j];

  std::size_t slack = lp.num_vars;
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& con = lp.constraints[i];
    for (std::size_t j = 0; j < lp.num_vars; ++j) sf.a(i, j) = con.coefficients[j];
    sf.b[i] = con.rhs;
    if (con.relation == Relation::LessEqual) sf.a(i, slack++) = 1;
    if (con.relation == Relation::GreaterEqual) sf.a(i, slack++) = -1;
    if (sf.b[i] < 0) {
      for (std::size_t j = 0; j < n; ++j) sf.a(i, j) = -sf.a(i, j);
      sf.b[i] = -sf.b[i];
    }
  }
  return sf;
}

LpTableau::LpTableau(const StandardForm& sf) : ncols_(sf.a.ncols() + sf.a.nrows()) {
  // Columns: the standard-form columns, then one artificial per row, which
  // forms the starting basis.
  const std::size_t n = sf.a.ncols();
  for (std::size_t i = 0; i < sf.a.nrows(); ++i) {
    std::vector<Rational> row(ncols_ + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = sf.a(i, j);
    row[n + i] = 1;
    row[ncols_] = sf.b[i];
    rows_.push_back(std::move(row));
    basis_.push_back(n + i);
  }
}

void LpTableau::pivot(std::size_t r, std::size_t col) {
  const Rational p = rows_[r][col];
  for (auto& v : rows_[r]) v /= p;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i == r) continue;
    const Rational f = rows_[i][col];
    if (f == 0) continue;
    for (std::size_t j = 0; j <= ncols_; ++j)
      if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
  }
  basis_[r] = col;
  ++pivots_;
}

bool LpTableau::optimise(const QVector& cost, const std::vector<bool>& allowed) {
  while (true) {
    std::size_t entering = ncols_;
    for (std::size_t j = 0; j < ncols_ && entering == ncols_; ++j) {
      if (!allowed[j]) continue;
      Rational reduced = cost[j];
      for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i][j] != 0) reduced -= cost[basis_[i]] * rows_[i][j];
      if (reduced < 0) entering = j;
    }
    if (entering == ncols_) return true;

    std::size_t leaving = rows_.size();
    Rational best;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i][entering] <= 0) continue;
      const Rational ratio = rows_[i][ncols_] / rows_[i][entering];
      if (leaving == rows_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leaving])) {
        leaving = i;
        best = ratio;
      }
    }
    if (leaving == rows_.size()) return false;
    pivot(leaving, entering);
  }
}

Rational LpTableau::objective_value(const QVector& cost) const {
  Rational z = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) z += cost[basis_[i]] * rows_[i][ncols_];
  return z;
}

QVector LpTableau::basic_solution() const {
  QVector z(ncols_);
  for (std::size_t i = 0; i < rows_.size(); ++i) z[basis_[i]] = rows_[i][ncols_];
  return z;
}

void LpTableau::expel_columns_from(std::size_t first_banned) {
  for (std::size_t i = 0; i < rows_.size();) {
    if (basis_[i] < first_banned) {
      ++i;
      continue;
    }
    std::size_t col = 0;
    while (col < first_banned && rows_[i][col] == 0) ++col;
    if (col < first_banned) {
      pivot(i, col);
      ++i;
    } else {
      rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
      basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
}

LpSolution solve_lp(const LinearProgram& lp) {
  const StandardForm sf = to_standard_form(lp);
  const std::size_t n = sf.a.ncols();
  LpTableau tableau(sf);

  QVector phase_one_cost(tableau.num_cols());
  for (std::size_t j = n; j < tableau.num_cols(); ++j) phase_one_cost[j] = 1;
  std::vector<bool> allowed(tableau.num_cols(), true);
  tableau.optimise(phase_one_cost, allowed);

  LpSolution out;
  if (tableau.objective_value(phase_one_cost) > 0) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  tableau.expel_columns_from(n);

  QVector cost(tableau.num_cols());
  for (std::size_t j = 0; j < n; ++j) cost[j] = sf.c[j];
  for (std::size_t j = n; j < tableau.num_cols(); ++j) allowed[j] = false;
  if (!tableau.optimise(cost, allowed)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.value = tableau.objective_value(cost);
  const QVector z = tableau.basic_solution();
  out.x = QVector(sf.original_vars);
  for (std::size_t j = 0; j < sf.original_vars; ++j) out.x[j] = z[j];
  return out;
}

}  // namespace ordcone
