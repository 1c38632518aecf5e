#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace gridplan {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class RowSense { LE, EQ, GE };
enum class ObjSense { Min, Max };

enum class SolveStatus {
  Optimal,
  Infeasible,
  Unbounded,
  TimeLimit,
  NumericError,
};

const char* to_string(SolveStatus s);

struct LpVar {
  std::string name;
  double lb = 0.0;
  double ub = kInf;
  double obj = 0.0;
  bool integer = false;
};

struct LpRow {
  std::string name;
  RowSense sense = RowSense::LE;
  double rhs = 0.0;
  std::vector<std::pair<std::int32_t, double>> coeffs;
};

class LinearProgram {
 public:
  ObjSense objective_sense = ObjSense::Min;

  int add_var(std::string name, double lb, double ub, double obj, bool integer = false);
  int add_row(std::string name, RowSense sense, double rhs);
  void add_coeff(int row, int var, double value);

  int num_vars() const { return static_cast<int>(vars_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<LpVar>& vars() const { return vars_; }
  const std::vector<LpRow>& rows() const { return rows_; }
  LpVar& var(int j) { return vars_[static_cast<std::size_t>(j)]; }
  const LpVar& var(int j) const { return vars_[static_cast<std::size_t>(j)]; }
  const LpRow& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

  // Empty when well formed, otherwise one message per defect.
  std::vector<std::string> validate() const;

  // Algebraic text dump, one constraint per line. Diagnostic only.
  std::string to_text() const;

 private:
  std::vector<LpVar> vars_;
  std::vector<LpRow> rows_;
};

struct Solution {
  SolveStatus status = SolveStatus::NumericError;
  std::vector<double> x;
  std::vector<double> row_dual;      // LP only
  std::vector<double> reduced_cost;  // LP only
  double objective = std::numeric_limits<double>::quiet_NaN();
  double best_bound = std::numeric_limits<double>::quiet_NaN();  // MILP
  double rel_gap = std::numeric_limits<double>::quiet_NaN();     // MILP
  std::int64_t iterations = 0;
  std::int64_t nodes = 0;
};

// Value of the bounded-variable LP dual built from (row_dual, reduced_cost):
// sum_i rhs_i*y_i plus reduced costs applied at the finite bound their sign
// selects. Equals the primal objective at a true optimum.
double dual_objective(const LinearProgram& lp, const Solution& sol);

}  // namespace gridplan
