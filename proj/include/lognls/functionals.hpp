#pragma once

// Scalar functionals on graph states: the vertex quadratic form, the
// logarithmic integral through the A/B split, energy, action, the Nehari
// functional, the scaled Kirchhoff functional Q, W-norms built from the
// per-edge Luxemburg norms, and the two inequality gaps (log-Sobolev and
// the vertex trace bound).
//
// Gradient energies use forward differences, mass and the log integral
// the trapezoid weights of inner_product; with these choices the discrete
// identities 2*action = nehari + mass and <A u, u> = form close exactly.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lognls/grid.hpp"
#include "lognls/orlicz.hpp"

namespace lognls {

// F_gamma[u] = sum_e int |du_e|^2 dx - gamma |u(0)|^2.
inline double quadratic_form(const GraphState& u, double gamma) {
  const double h = u.grid.spacing;
  double acc = 0.0;
  for (int i = 0; i < u.grid.edges; ++i) {
    const auto& e = u.samples[i];
    acc += std::norm(e[0] - u.vertex) / h;
    for (std::size_t k = 0; k + 1 < e.size(); ++k) acc += std::norm(e[k + 1] - e[k]) / h;
  }
  return acc - gamma * std::norm(u.vertex);
}

inline double gradient_energy(const GraphState& u) { return quadratic_form(u, 0.0); }

// int_Gamma |u|^2 Log|u|^2 dx, evaluated as B(|u|) - A(|u|) pointwise so
// the integrand vanishes where u does.
inline double log_integral(const GraphState& u) {
  const double h = u.grid.spacing;
  double acc = double(u.grid.edges) * (h / 2.0) * log_weight(std::abs(u.vertex));
  for (int i = 0; i < u.grid.edges; ++i) {
    const auto& e = u.samples[i];
    const int m = u.grid.points_per_edge;
    for (int k = 0; k + 1 < m; ++k) acc += h * log_weight(std::abs(e[k]));
    acc += (h / 2.0) * log_weight(std::abs(e[m - 1]));
  }
  return acc;
}

inline double edge_log_integral(const EdgeProfile& p) {
  const double h = p.spacing;
  const int m = p.cells();
  double acc = (h / 2.0) * (log_weight(std::abs(p.values[0])) + log_weight(std::abs(p.values[m])));
  for (int k = 1; k < m; ++k) acc += h * log_weight(std::abs(p.values[k]));
  return acc;
}

// Half-line Nehari functional I(u, omega) = |u'|^2 + omega |u|^2 - int |u|^2 Log|u|^2.
inline double halfline_nehari(const EdgeProfile& p, double omega) {
  return edge_gradient_energy(p) + omega * edge_mass(p) - edge_log_integral(p);
}

inline double edge_h1_norm(const EdgeProfile& p) {
  return std::sqrt(edge_gradient_energy(p) + edge_mass(p));
}

// ||u||_W per edge is ||u||_{H^1} + ||u||_{L^A}; the graph norm adds the
// squares across edges.
inline double w_norm(const GraphState& u) {
  double acc = 0.0;
  for (int i = 0; i < u.grid.edges; ++i) {
    const EdgeProfile p = edge_profile(u, i);
    const double per_edge = edge_h1_norm(p) + luxemburg_norm(p);
    acc += per_edge * per_edge;
  }
  return std::sqrt(acc);
}

struct FunctionalReport {
  double mass = 0.0;      // ||u||^2_{L^2(Gamma)}
  double form = 0.0;      // F_gamma[u]
  double log_int = 0.0;   // int |u|^2 Log|u|^2
  double energy = 0.0;    // E = form/2 - log_int/2
  double action = 0.0;    // S_{omega,gamma}
  double nehari = 0.0;    // I_{omega,gamma}
  std::vector<double> luxemburg;  // per-edge L^A norms
  double w_norm = 0.0;
};

inline FunctionalReport functionals(const GraphState& u, double omega, double gamma) {
  FunctionalReport r;
  r.mass = mass(u);
  r.form = quadratic_form(u, gamma);
  r.log_int = log_integral(u);
  r.energy = 0.5 * r.form - 0.5 * r.log_int;
  r.action = 0.5 * r.form + 0.5 * (omega + 1.0) * r.mass - 0.5 * r.log_int;
  r.nehari = r.form + omega * r.mass - r.log_int;
  double acc = 0.0;
  for (int i = 0; i < u.grid.edges; ++i) {
    const EdgeProfile p = edge_profile(u, i);
    r.luxemburg.push_back(luxemburg_norm(p));
    const double per_edge = edge_h1_norm(p) + r.luxemburg.back();
    acc += per_edge * per_edge;
  }
  r.w_norm = std::sqrt(acc);
  return r;
}

// Q_omega(u) = (4/N^2) ||u'||^2 + omega ||u||^2 - int |u|^2 Log|u|^2.
inline double q_functional(const GraphState& u, double omega) {
  const double n = u.grid.edges;
  return (4.0 / (n * n)) * gradient_energy(u) + omega * mass(u) - log_integral(u);
}

// Gap of the graph log-Sobolev inequality: returns RHS - LHS of
//   int |u|^2 Log|u|^2 <= (alpha^2/pi) ||u'||^2
//                         + (Log(2||u||^2) - 1 - Log alpha) ||u||^2.
inline double log_sobolev_gap(const GraphState& u, double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("log_sobolev_gap: alpha must be positive");
  const double m = mass(u);
  if (m <= 0.0) throw std::domain_error("log_sobolev_gap: zero state");
  const double rhs = alpha * alpha / (kSqrtPi * kSqrtPi) * gradient_energy(u) +
                     (std::log(2.0 * m) - 1.0 - std::log(alpha)) * m;
  return rhs - log_integral(u);
}

// Gap of the vertex trace bound |f(0)|^2 <= eps ||f||^2 + eps^-1 ||f'||^2.
inline double trace_bound_gap(const EdgeProfile& f, double eps) {
  if (!(eps > 0.0)) throw std::domain_error("trace_bound_gap: eps must be positive");
  return eps * edge_mass(f) + edge_gradient_energy(f) / eps - std::norm(f.values[0]);
}

}  // namespace lognls
