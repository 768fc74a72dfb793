#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <vector>

namespace lpp {

enum class LPStatus { Optimal, Unbounded, Infeasible };

enum class Sense { Minimize, Maximize };

/// Canonical-form program: maximize objective . x subject to
/// constraints * x <= rhs and x >= 0. Equalities are encoded by callers as
/// paired inequalities so a single form covers everything downstream.
template <typename Scalar>
struct StandardLP {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> constraints;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> rhs;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> objective;

  Eigen::Index rows() const { return constraints.rows(); }
  Eigen::Index cols() const { return constraints.cols(); }
};

template <typename Scalar>
struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  Scalar value{};
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> primal;  // one entry per variable
  /// One entry per row, read off the final basis. When the dual optimum is
  /// not unique the basis-determined one is returned; anything priced from it
  /// inherits that choice.
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> dual;
};

namespace detail {

/// Dense tableau simplex over an ordered field. Bland's rule in both phases:
/// entering column is the lowest index with positive reduced cost, the ratio
/// test breaks ties on the lowest basic index. That rule cannot cycle and
/// makes every outcome a deterministic function of the input.
template <typename Scalar>
class SimplexTableau {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

 public:
  explicit SimplexTableau(const StandardLP<Scalar>& lp)
      : m_(lp.rows()), n_(lp.cols()) {
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (lp.rhs(i) < Scalar(0)) ++k_;
    }
    total_ = n_ + m_ + k_;
    tableau_ = Matrix::Zero(m_, total_);
    beta_ = Vector::Zero(m_);
    basis_.resize(static_cast<std::size_t>(m_));

    Eigen::Index art = 0;
    for (Eigen::Index i = 0; i < m_; ++i) {
      const bool flip = lp.rhs(i) < Scalar(0);
      const Scalar sign = flip ? Scalar(-1) : Scalar(1);
      for (Eigen::Index j = 0; j < n_; ++j) tableau_(i, j) = sign * lp.constraints(i, j);
      tableau_(i, n_ + i) = sign;  // slack
      beta_(i) = sign * lp.rhs(i);
      if (flip) {
        tableau_(i, n_ + m_ + art) = Scalar(1);
        basis_[static_cast<std::size_t>(i)] = n_ + m_ + art;
        ++art;
      } else {
        basis_[static_cast<std::size_t>(i)] = n_ + i;
      }
    }
  }

  LPOutcome<Scalar> run(const StandardLP<Scalar>& lp) {
    LPOutcome<Scalar> out;
    if (k_ > 0) {
      Vector phase1 = Vector::Zero(total_);
      for (Eigen::Index a = 0; a < k_; ++a) phase1(n_ + m_ + a) = Scalar(-1);
      load_objective(phase1);
      const bool bounded = iterate(total_);
      if (!bounded) throw std::logic_error("phase-1 objective cannot be unbounded");
      if (objective_value_ < Scalar(0)) {
        out.status = LPStatus::Infeasible;
        return out;
      }
      expel_artificials();
    }

    Vector phase2 = Vector::Zero(total_);
    phase2.head(n_) = lp.objective;
    load_objective(phase2);
    if (!iterate(n_ + m_)) {
      out.status = LPStatus::Unbounded;
      return out;
    }

    out.status = LPStatus::Optimal;
    out.value = objective_value_;
    out.primal = Vector::Zero(n_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < n_) out.primal(basis_[static_cast<std::size_t>(i)]) = beta_(i);
    }
    out.dual = Vector::Zero(m_);
    for (Eigen::Index i = 0; i < m_; ++i) out.dual(i) = -reduced_(n_ + i);
    return out;
  }

 private:
  void load_objective(const Vector& cost) {
    cost_ = cost;
    reduced_ = cost;
    objective_value_ = Scalar(0);
    for (Eigen::Index i = 0; i < m_; ++i) {
      const Scalar cb = cost_(basis_[static_cast<std::size_t>(i)]);
      if (cb == Scalar(0)) continue;
      objective_value_ += cb * beta_(i);
      reduced_ -= cb * tableau_.row(i).transpose();
    }
  }

  /// Pivots until no allowed column improves. Returns false on unboundedness.
  bool iterate(Eigen::Index allowed_cols) {
    for (;;) {
      Eigen::Index entering = -1;
      for (Eigen::Index j = 0; j < allowed_cols; ++j) {
        if (reduced_(j) > Scalar(0)) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return true;

      Eigen::Index leaving = -1;
      Scalar best_ratio{};
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (tableau_(i, entering) <= Scalar(0)) continue;
        const Scalar ratio = beta_(i) / tableau_(i, entering);
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio &&
             basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leaving)])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;
      pivot(leaving, entering);
    }
  }

  void pivot(Eigen::Index row, Eigen::Index col) {
    const Scalar inv = Scalar(1) / tableau_(row, col);
    tableau_.row(row) *= inv;
    beta_(row) *= inv;
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (i == row) continue;
      const Scalar factor = tableau_(i, col);
      if (factor == Scalar(0)) continue;
      tableau_.row(i) -= factor * tableau_.row(row);
      beta_(i) -= factor * beta_(row);
    }
    const Scalar gain = reduced_(col);
    if (gain != Scalar(0)) {
      objective_value_ += gain * beta_(row);
      reduced_ -= gain * tableau_.row(row).transpose();
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  /// After a zero-violation phase 1, swaps any artificial still in the basis
  /// for a structural or slack column. A row with no such column is linearly
  /// dependent; its artificial stays pinned at zero and never re-enters.
  void expel_artificials() {
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < n_ + m_) continue;
      for (Eigen::Index j = 0; j < n_ + m_; ++j) {
        if (tableau_(i, j) != Scalar(0)) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  Eigen::Index m_, n_, k_ = 0, total_ = 0;
  Matrix tableau_;
  Vector beta_;
  Vector cost_;
  Vector reduced_;
  Scalar objective_value_{};
  std::vector<Eigen::Index> basis_;
};

}  // namespace detail

template <typename Scalar>
LPOutcome<Scalar> solve(const StandardLP<Scalar>& lp) {
  if (lp.rhs.size() != lp.rows() || lp.objective.size() != lp.cols()) {
    throw std::invalid_argument("linear program dimensions disagree");
  }
  detail::SimplexTableau<Scalar> tableau(lp);
  return tableau.run(lp);
}

/// Re-optimizes a secondary objective over the optimal face of `lp`.
/// `fixed_value` must be the optimal value of `lp`; the face is pinned by a
/// pair of inequalities so the canonical form is preserved. The returned dual
/// covers the two extra rows as well.
template <typename Scalar>
LPOutcome<Scalar> solve_with_value_constraint(
    const StandardLP<Scalar>& lp, const Scalar& fixed_value,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& secondary_objective,
    Sense direction) {
  if (secondary_objective.size() != lp.cols()) {
    throw std::invalid_argument("secondary objective has wrong length");
  }
  StandardLP<Scalar> staged;
  const Eigen::Index m = lp.rows();
  staged.constraints.resize(m + 2, lp.cols());
  staged.constraints.topRows(m) = lp.constraints;
  staged.constraints.row(m) = lp.objective.transpose();
  staged.constraints.row(m + 1) = -lp.objective.transpose();
  staged.rhs.resize(m + 2);
  staged.rhs.head(m) = lp.rhs;
  staged.rhs(m) = fixed_value;
  staged.rhs(m + 1) = -fixed_value;
  staged.objective =
      direction == Sense::Maximize ? secondary_objective : (-secondary_objective).eval();

  LPOutcome<Scalar> out = solve(staged);
  if (out.status == LPStatus::Infeasible) {
    throw std::logic_error("value constraint unattainable: fixed_value is not the optimum");
  }
  if (out.status == LPStatus::Optimal && direction == Sense::Minimize) {
    out.value = -out.value;
  }
  return out;
}

}  // namespace lpp
