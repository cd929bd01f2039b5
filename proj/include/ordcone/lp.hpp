#ifndef ORDCONE_LP_HPP
#define ORDCONE_LP_HPP

#include <vector>

#include "ordcone/linalg.hpp"

namespace ordcone {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
  QVector coefficients;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// minimize <objective, x>  subject to the constraints and x >= 0.
struct LinearProgram {
  std::size_t num_vars = 0;
  QVector objective;
  std::vector<LinearConstraint> constraints;
};

/// minimize <c, z> subject to a z = b, z >= 0, with b >= 0. The first
/// `original_vars` columns are the program's variables, the rest are slacks.
struct StandardForm {
  QMatrix a;
  QVector b;
  QVector c;
  std::size_t original_vars = 0;
};

StandardForm to_standard_form(const LinearProgram& lp);

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  QVector x;  // values of the original variables when optimal
};

/**
 * Dense simplex tableau over exact rationals. Entering and leaving variables
 * follow Bland's rule (smallest eligible index), which rules out cycling.
 */
class LpTableau {
 public:
  explicit LpTableau(const StandardForm& sf);

  /// Minimises <cost, z> from the current basic feasible solution, never
  /// letting a column with allowed[j] == false enter. Returns false if
  /// the objective is unbounded below.
  bool optimise(const QVector& cost, const std::vector<bool>& allowed);

  Rational objective_value(const QVector& cost) const;
  QVector basic_solution() const;

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return ncols_; }
  std::size_t pivots() const { return pivots_; }

  /// Pivots basic columns >= first_banned out of the basis where possible and
  /// drops rows on which that is impossible (they are redundant).
  void expel_columns_from(std::size_t first_banned);

 private:
  void pivot(std::size_t row, std::size_t col);

  std::size_t ncols_;
  std::vector<std::vector<Rational>> rows_;  // each row: ncols_ coefficients then rhs
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

/// Two-phase simplex with Bland's rule.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace ordcone

#endif  // ORDCONE_LP_HPP
