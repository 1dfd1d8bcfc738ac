#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace rlpp {

struct LpOptions {
  double optimality_tol = 1e-7;  // reduced-cost threshold
  double pivot_tol = 1e-9;
  double drift_tol = 1e-7;       // basic-solution residual before refactoring
  long max_iterations = 5'000'000;
  int stall_limit = 2000;        // degenerate pivots before Bland's rule
  int refactor_every = 3000;
};

enum class LpStatus { kOptimal, kUnbounded, kIterationLimit, kDeadline };

// Primal simplex for  max c^T x  s.t.  A x <= b,  x >= 0,  with b >= 0.
//
// The all-slack basis is feasible, so no phase 1 is needed; this covers
// every LP in this codebase (budget and set-packing rows). Columns may be
// added after a solve and the basis is reused, which is what makes the
// column-generation master cheap to re-optimize. The basis inverse is kept
// explicitly and updated per pivot, with refactorization on drift.
class SimplexSolver {
 public:
  explicit SimplexSolver(std::vector<double> rhs, LpOptions options = {});

  // Returns the structural column's index. Entries are (row, coefficient)
  // pairs; rows must be unique and in range.
  int add_column(double objective,
                 std::vector<std::pair<int, double>> entries);

  int num_rows() const { return m_; }
  int num_columns() const { return static_cast<int>(cols_.size()); }

  LpStatus solve(
      std::optional<std::chrono::steady_clock::time_point> deadline = {});

  double objective_value() const;
  // Primal value of structural column j (0 when nonbasic).
  double primal(int j) const;
  // Row duals y >= 0 for the current basis, clamped at 0.
  std::vector<double> duals() const;
  long iterations() const { return iterations_; }

 private:
  struct Col {
    double obj;
    std::vector<std::pair<int, double>> entries;
  };

  int num_vars() const { return m_ + static_cast<int>(cols_.size()); }
  bool is_slack(int var) const { return var < m_; }
  double var_obj(int var) const { return is_slack(var) ? 0.0 : cols_[var - m_].obj; }

  void compute_duals(std::vector<double>& y) const;
  double reduced_cost(int var, const std::vector<double>& y) const;
  void column_direction(int var, std::vector<double>& d) const;
  void refactor();
  double basic_residual() const;
  std::uint32_t tie_rand() {
    tie_state_ ^= tie_state_ << 13;
    tie_state_ ^= tie_state_ >> 17;
    tie_state_ ^= tie_state_ << 5;
    return tie_state_;
  }

  int m_;
  LpOptions opt_;
  std::vector<double> rhs_;
  std::vector<Col> cols_;
  std::vector<int> basis_;        // variable occupying each basis slot
  std::vector<int> basis_slot_;   // per variable: slot index or -1
  std::vector<double> binv_;      // m x m, row-major
  std::vector<double> xb_;        // basic variable values
  long iterations_ = 0;
  int pivots_since_refactor_ = 0;
  std::uint32_t tie_state_ = 0x9E3779B9u;  // fixed seed: runs stay identical
};

}  // namespace rlpp
