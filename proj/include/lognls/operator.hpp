#pragma once

// Discrete delta-vertex Laplacian -Delta_gamma on the star graph.
//
// Interior rows are the standard second difference; the vertex row is the
// unique row that makes <A u, v> equal the discrete quadratic form for
// every pair of states (summation by parts against the trapezoid weights),
// so A is exactly symmetric in the weighted inner product.  The outer node
// is Dirichlet.
//
// The same bordered structure (N tridiagonal blocks coupled through one
// vertex unknown) backs the linear solves used by Crank-Nicolson stepping,
// inverse power iteration, and preconditioned descent.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "lognls/functionals.hpp"
#include "lognls/grid.hpp"

namespace lognls {

struct DiscreteOperator {
  GridSpec grid;
  double gamma = 0.0;
};

// A u with (A u)_j = -(u_{j-1} - 2 u_j + u_{j+1})/h^2 in the interior and
// the form-consistent vertex row (2/(N h)) [ sum_i (u(0) - u_{i,1})/h - gamma u(0) ].
inline GraphState apply_laplacian(const DiscreteOperator& op, const GraphState& u) {
  if (!(u.grid == op.grid)) throw std::invalid_argument("apply_laplacian: grid mismatch");
  const double h = op.grid.spacing;
  const int n = op.grid.edges;
  const int m = op.grid.points_per_edge;
  GraphState r(op.grid);

  cplx flux{0.0, 0.0};
  for (int i = 0; i < n; ++i) flux += (u.vertex - u.samples[i][0]) / h;
  r.vertex = (2.0 / (n * h)) * (flux - op.gamma * u.vertex);

  for (int i = 0; i < n; ++i) {
    const auto& e = u.samples[i];
    auto& o = r.samples[i];
    for (int k = 0; k + 1 < m; ++k) {
      const cplx left = (k == 0) ? u.vertex : e[k - 1];
      const cplx right = (k + 2 == m) ? cplx{0.0, 0.0} : e[k + 1];
      o[k] = (2.0 * e[k] - left - right) / (h * h);
    }
    o[m - 1] = cplx{0.0, 0.0};
  }
  return r;
}

// Solves (alpha I + beta A) x = rhs, with A the operator above; one Thomas
// sweep per edge plus a scalar vertex reconciliation, O(N M) total.
class ShiftedVertexSolver {
 public:
  ShiftedVertexSolver(const DiscreteOperator& op, cplx alpha, cplx beta)
      : op_(op), alpha_(alpha), beta_(beta) {
    const double h = op.grid.spacing;
    const int n = op.grid.edges;
    const int rows = op.grid.points_per_edge - 1;  // interior unknowns per edge
    diag_ = alpha + beta * (2.0 / (h * h));
    off_ = -beta / (h * h);
    vertex_diag_ = alpha + beta * (2.0 / (h * h) - 2.0 * op.gamma / (n * h));
    vertex_off_ = -beta * 2.0 / (n * h * h);

    // Forward-elimination coefficients for the constant tridiagonal block.
    cprime_.resize(rows);
    denom_.resize(rows);
    cplx d = diag_;
    for (int k = 0; k < rows; ++k) {
      if (std::abs(d) == 0.0) throw std::runtime_error("vertex solver: singular pivot");
      denom_[k] = 1.0 / d;
      cprime_[k] = off_ * denom_[k];
      d = diag_ - off_ * cprime_[k];
    }

    // z solves T z = e_1; only z_1 is needed for the vertex equation but the
    // full vector enters back-substitution.
    z_.assign(rows, cplx{0.0, 0.0});
    std::vector<cplx> e1(rows, cplx{0.0, 0.0});
    e1[0] = cplx{1.0, 0.0};
    solve_block(e1, z_);
    coupled_vertex_diag_ = vertex_diag_ - vertex_off_ * off_ * double(n) * z_[0];
    if (std::abs(coupled_vertex_diag_) == 0.0)
      throw std::runtime_error("vertex solver: singular vertex pivot");
  }

  GraphState solve(const GraphState& rhs) const {
    if (!(rhs.grid == op_.grid)) throw std::invalid_argument("vertex solver: grid mismatch");
    const int n = op_.grid.edges;
    const int rows = op_.grid.points_per_edge - 1;
    GraphState x(op_.grid);

    std::vector<std::vector<cplx>> y(n, std::vector<cplx>(rows));
    cplx y_sum{0.0, 0.0};
    std::vector<cplx> r(rows);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < rows; ++k) r[k] = rhs.samples[i][k];
      solve_block(r, y[i]);
      y_sum += y[i][0];
    }

    const cplx v = (rhs.vertex - vertex_off_ * y_sum) / coupled_vertex_diag_;
    x.vertex = v;
    const cplx vscale = off_ * v;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < rows; ++k) x.samples[i][k] = y[i][k] - vscale * z_[k];
      x.samples[i][rows] = cplx{0.0, 0.0};
    }
    return x;
  }

 private:
  void solve_block(const std::vector<cplx>& rhs, std::vector<cplx>& out) const {
    const int rows = static_cast<int>(rhs.size());
    out.resize(rows);
    out[0] = rhs[0] * denom_[0];
    for (int k = 1; k < rows; ++k) out[k] = (rhs[k] - off_ * out[k - 1]) * denom_[k];
    for (int k = rows - 2; k >= 0; --k) out[k] -= cprime_[k] * out[k + 1];
  }

  DiscreteOperator op_;
  cplx alpha_, beta_;
  cplx diag_, off_, vertex_diag_, vertex_off_, coupled_vertex_diag_;
  std::vector<cplx> cprime_, denom_, z_;
};

// Smallest eigenvalue of A by shifted inverse power iteration; the shift
// sits safely below -gamma^2/N^2 so the shifted operator is definite.
inline double smallest_eigenvalue(const DiscreteOperator& op, double tol = 1e-10,
                                  int max_iter = 5000) {
  const double sigma = -(op.gamma > 0.0 ? op.gamma * op.gamma : 0.0) - 1.0;
  ShiftedVertexSolver solver(op, cplx{-sigma, 0.0}, cplx{1.0, 0.0});  // A - sigma I

  GraphState x = state_from_profile(
      op.grid, [&](double t) { return cplx{std::exp(-t), 0.0}; });
  double rho_prev = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    x = solver.solve(x);
    const double nrm = l2_norm(x);
    if (!(nrm > 0.0)) throw std::runtime_error("smallest_eigenvalue: iterate vanished");
    x = (1.0 / nrm) * x;
    const double rho = inner_product(apply_laplacian(op, x), x) / mass(x);
    if (it > 0 && std::abs(rho - rho_prev) <= tol * std::max(1.0, std::abs(rho))) return rho;
    rho_prev = rho;
  }
  return rho_prev;
}

}  // namespace lognls
