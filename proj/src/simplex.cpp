#include "rlpp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rlpp {

SimplexSolver::SimplexSolver(std::vector<double> rhs, LpOptions options)
    : m_(static_cast<int>(rhs.size())), opt_(options), rhs_(std::move(rhs)) {
  for (double b : rhs_)
    if (b < 0.0)
      throw std::invalid_argument("rhs must be nonnegative (got " +
                                  std::to_string(b) + ")");
  basis_.resize(m_);
  basis_slot_.assign(m_, -1);
  binv_.assign(static_cast<size_t>(m_) * m_, 0.0);
  xb_ = rhs_;
  for (int r = 0; r < m_; ++r) {
    basis_[r] = r;  // slack basis
    basis_slot_[r] = r;
    binv_[static_cast<size_t>(r) * m_ + r] = 1.0;
  }
}

int SimplexSolver::add_column(double objective,
                              std::vector<std::pair<int, double>> entries) {
  for (auto [row, coef] : entries) {
    (void)coef;
    if (row < 0 || row >= m_)
      throw std::invalid_argument("column entry row out of range");
  }
  cols_.push_back({objective, std::move(entries)});
  basis_slot_.push_back(-1);
  return static_cast<int>(cols_.size()) - 1;
}

void SimplexSolver::compute_duals(std::vector<double>& y) const {
  y.assign(m_, 0.0);
  for (int r = 0; r < m_; ++r) {
    const double c = var_obj(basis_[r]);
    if (c == 0.0) continue;
    const double* row = &binv_[static_cast<size_t>(r) * m_];
    for (int i = 0; i < m_; ++i) y[i] += c * row[i];
  }
}

double SimplexSolver::reduced_cost(int var,
                                   const std::vector<double>& y) const {
  if (is_slack(var)) return -y[var];
  const Col& col = cols_[var - m_];
  double rc = col.obj;
  for (auto [row, coef] : col.entries) rc -= y[row] * coef;
  return rc;
}

void SimplexSolver::column_direction(int var, std::vector<double>& d) const {
  d.assign(m_, 0.0);
  if (is_slack(var)) {
    for (int i = 0; i < m_; ++i) d[i] = binv_[static_cast<size_t>(i) * m_ + var];
    return;
  }
  for (auto [row, coef] : cols_[var - m_].entries)
    for (int i = 0; i < m_; ++i)
      d[i] += coef * binv_[static_cast<size_t>(i) * m_ + row];
}

double SimplexSolver::basic_residual() const {
  // || B x_B - b ||_inf
  std::vector<double> acc(rhs_);
  for (int r = 0; r < m_; ++r) {
    const int var = basis_[r];
    const double x = xb_[r];
    if (x == 0.0) continue;
    if (is_slack(var)) {
      acc[var] -= x;
    } else {
      for (auto [row, coef] : cols_[var - m_].entries) acc[row] -= x * coef;
    }
  }
  double res = 0.0;
  for (double v : acc) res = std::max(res, std::abs(v));
  return res;
}

void SimplexSolver::refactor() {
  // Rebuild binv_ by Gauss-Jordan on the basis matrix with partial pivoting.
  std::vector<double> work(static_cast<size_t>(m_) * m_, 0.0);
  for (int r = 0; r < m_; ++r) {
    const int var = basis_[r];
    if (is_slack(var)) {
      work[static_cast<size_t>(var) * m_ + r] = 1.0;
    } else {
      for (auto [row, coef] : cols_[var - m_].entries)
        work[static_cast<size_t>(row) * m_ + r] = coef;
    }
  }
  std::vector<double> inv(static_cast<size_t>(m_) * m_, 0.0);
  for (int i = 0; i < m_; ++i) inv[static_cast<size_t>(i) * m_ + i] = 1.0;

  for (int col = 0; col < m_; ++col) {
    int piv = col;
    double best = std::abs(work[static_cast<size_t>(col) * m_ + col]);
    for (int r = col + 1; r < m_; ++r) {
      const double v = std::abs(work[static_cast<size_t>(r) * m_ + col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < 1e-12) throw std::runtime_error("singular basis in refactor");
    if (piv != col) {
      for (int k = 0; k < m_; ++k) {
        std::swap(work[static_cast<size_t>(piv) * m_ + k],
                  work[static_cast<size_t>(col) * m_ + k]);
        std::swap(inv[static_cast<size_t>(piv) * m_ + k],
                  inv[static_cast<size_t>(col) * m_ + k]);
      }
    }
    const double d = work[static_cast<size_t>(col) * m_ + col];
    for (int k = 0; k < m_; ++k) {
      work[static_cast<size_t>(col) * m_ + k] /= d;
      inv[static_cast<size_t>(col) * m_ + k] /= d;
    }
    for (int r = 0; r < m_; ++r) {
      if (r == col) continue;
      const double f = work[static_cast<size_t>(r) * m_ + col];
      if (f == 0.0) continue;
      for (int k = 0; k < m_; ++k) {
        work[static_cast<size_t>(r) * m_ + k] -=
            f * work[static_cast<size_t>(col) * m_ + k];
        inv[static_cast<size_t>(r) * m_ + k] -=
            f * inv[static_cast<size_t>(col) * m_ + k];
      }
    }
  }
  binv_ = std::move(inv);

  // x_B = binv * b
  for (int r = 0; r < m_; ++r) {
    const double* row = &binv_[static_cast<size_t>(r) * m_];
    double x = 0.0;
    for (int i = 0; i < m_; ++i) x += row[i] * rhs_[i];
    xb_[r] = x;
  }
  pivots_since_refactor_ = 0;
}

LpStatus SimplexSolver::solve(
    std::optional<std::chrono::steady_clock::time_point> deadline) {
  std::vector<double> y, d;
  bool bland = false;
  bool y_fresh = true;
  int degenerate_run = 0;
  compute_duals(y);

  // Devex reference weights, one per variable; reset on reference decay.
  std::vector<double> devex(num_vars(), 1.0);

  for (;; ++iterations_) {
    if (iterations_ >= opt_.max_iterations) return LpStatus::kIterationLimit;
    if (deadline && (iterations_ & 63) == 0 &&
        std::chrono::steady_clock::now() > *deadline)
      return LpStatus::kDeadline;

    // Price by Devex (rc^2 / weight), falling back to Bland's rule when
    // degeneracy stalls progress; plain Dantzig churns badly on the
    // set-packing bases the master produces.
    devex.resize(num_vars(), 1.0);
    int entering = -1;
    double best_rc = 0.0;
    double best_score = 0.0;
    const int nv = num_vars();
    for (int var = 0; var < nv; ++var) {
      if (basis_slot_[var] >= 0) continue;
      const double rc = reduced_cost(var, y);
      if (rc <= opt_.optimality_tol) continue;
      if (bland) {
        entering = var;
        best_rc = rc;
        break;
      }
      const double score = rc * rc / devex[var];
      if (score > best_score) {
        entering = var;
        best_rc = rc;
        best_score = score;
      }
    }
    if (entering < 0) {
      // Optimality must be certified against exact duals, not the
      // incrementally updated ones.
      if (!y_fresh) {
        compute_duals(y);
        y_fresh = true;
        continue;
      }
      if (basic_residual() > opt_.drift_tol) {
        refactor();
        compute_duals(y);
        continue;  // re-price against the clean factorization
      }
      return LpStatus::kOptimal;
    }

    column_direction(entering, d);

    // Ratio test with randomized (fixed-stream) degenerate tie-breaking.
    int leave_slot = -1;
    double theta = 0.0;
    int tie_count = 0;
    for (int r = 0; r < m_; ++r) {
      if (d[r] <= opt_.pivot_tol) continue;
      const double ratio = std::max(xb_[r], 0.0) / d[r];
      if (leave_slot < 0 || ratio < theta - 1e-12) {
        leave_slot = r;
        theta = ratio;
        tie_count = 1;
      } else if (ratio < theta + 1e-12) {
        bool take;
        if (bland) {
          take = basis_[r] < basis_[leave_slot];
        } else if (d[r] > 4.0 * d[leave_slot]) {
          take = true;  // clearly better numerics
        } else if (4.0 * d[r] < d[leave_slot]) {
          take = false;
        } else {
          take = tie_rand() % static_cast<std::uint32_t>(++tie_count) == 0;
        }
        if (take) {
          leave_slot = r;
          theta = ratio;
        }
      }
    }
    if (leave_slot < 0) return LpStatus::kUnbounded;

    // Pivot: update basis, basic values, duals, and the inverse.
    const int leaving = basis_[leave_slot];
    basis_slot_[leaving] = -1;
    basis_[leave_slot] = entering;
    basis_slot_[entering] = leave_slot;

    for (int r = 0; r < m_; ++r) xb_[r] -= theta * d[r];
    xb_[leave_slot] = theta;

    double* prow = &binv_[static_cast<size_t>(leave_slot) * m_];
    const double pivot = d[leave_slot];
    for (int k = 0; k < m_; ++k) prow[k] /= pivot;
    // y' = y + rc_e * (updated pivot row); O(m) instead of re-deriving
    // c_B B^{-1} each iteration.
    for (int k = 0; k < m_; ++k) y[k] += best_rc * prow[k];
    y_fresh = false;
    for (int r = 0; r < m_; ++r) {
      if (r == leave_slot) continue;
      const double f = d[r];
      if (std::abs(f) <= 1e-13) continue;  // drop tolerance; drift-checked
      double* row = &binv_[static_cast<size_t>(r) * m_];
      for (int k = 0; k < m_; ++k) row[k] -= f * prow[k];
    }

    // Devex update from the (new) pivot row: alpha_j = prow . a_j.
    if (!bland) {
      const double we = devex[entering];
      double wmax = 1.0;
      for (int var = 0; var < nv; ++var) {
        if (basis_slot_[var] >= 0) continue;
        double alpha;
        if (is_slack(var)) {
          alpha = prow[var];
        } else {
          alpha = 0.0;
          for (auto [row, coef] : cols_[var - m_].entries)
            alpha += coef * prow[row];
        }
        const double cand = alpha * alpha * we;
        if (cand > devex[var]) devex[var] = cand;
        if (devex[var] > wmax) wmax = devex[var];
      }
      devex[leaving] = std::max(we / (pivot * pivot), 1.0);
      devex[entering] = 1.0;
      if (wmax > 1e10)  // reference framework decayed; restart it
        std::fill(devex.begin(), devex.end(), 1.0);
    }

    if (theta <= 1e-12) {
      if (++degenerate_run >= opt_.stall_limit) bland = true;
    } else {
      degenerate_run = 0;
      bland = false;
    }

    if (++pivots_since_refactor_ >= opt_.refactor_every) {
      refactor();
      compute_duals(y);
      y_fresh = true;
    }
  }
}

double SimplexSolver::objective_value() const {
  double obj = 0.0;
  for (int r = 0; r < m_; ++r) obj += var_obj(basis_[r]) * xb_[r];
  return obj;
}

double SimplexSolver::primal(int j) const {
  const int slot = basis_slot_[m_ + j];
  if (slot < 0) return 0.0;
  return std::max(xb_[slot], 0.0);
}

std::vector<double> SimplexSolver::duals() const {
  std::vector<double> y;
  compute_duals(y);
  for (double& v : y) v = std::max(v, 0.0);
  return y;
}

}  // namespace rlpp
