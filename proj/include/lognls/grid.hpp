#pragma once

// Star-graph grids and discrete states.
//
// A star graph with N edges is modeled as N copies of [0, L] glued at a
// single vertex (x = 0).  Each edge carries M cells of width h = L/M; a
// state stores one shared complex vertex value plus per-edge samples at
// x = h, 2h, ..., L.  The outer node x = L realizes the truncation of the
// half-line by a homogeneous Dirichlet condition and is pinned to zero.
//
// Quadrature is trapezoidal: the vertex belongs to all N edges and carries
// weight N*h/2, interior nodes carry h, the outer node h/2 (value 0).

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace lognls {

using cplx = std::complex<double>;

struct GridSpec {
  int edges = 0;            // N >= 2
  double length = 0.0;      // L, edge truncation
  int points_per_edge = 0;  // M >= 2
  double spacing = 0.0;     // h = L/M

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.edges == b.edges && a.length == b.length &&
           a.points_per_edge == b.points_per_edge;
  }
};

inline GridSpec build_grid(int edges, double length, int points_per_edge) {
  if (edges < 2) throw std::invalid_argument("build_grid: a star graph needs at least 2 edges");
  if (!(length > 0.0)) throw std::invalid_argument("build_grid: edge length must be positive");
  if (points_per_edge < 2) throw std::invalid_argument("build_grid: need at least 2 points per edge");
  return GridSpec{edges, length, points_per_edge, length / points_per_edge};
}

// Complex samples on all edges of a star graph.  samples[i][k] lives at
// x = (k+1)*h on edge i, k = 0..M-1; the last entry (x = L) is kept zero.
struct GraphState {
  GridSpec grid;
  cplx vertex{0.0, 0.0};
  std::vector<std::vector<cplx>> samples;

  GraphState() = default;
  explicit GraphState(const GridSpec& g)
      : grid(g), samples(g.edges, std::vector<cplx>(g.points_per_edge, cplx{0.0, 0.0})) {}

  // Node access with the vertex at j = 0 and the edge samples at j = 1..M.
  cplx at(int edge, int j) const { return j == 0 ? vertex : samples[edge][j - 1]; }

  void pin_outer() {
    for (auto& e : samples) e.back() = cplx{0.0, 0.0};
  }
};

inline GraphState zero_state(const GridSpec& g) { return GraphState(g); }

inline void require_same_grid(const GraphState& u, const GraphState& v) {
  if (!(u.grid == v.grid)) throw std::invalid_argument("graph states live on different grids");
}

// Builds a state from per-edge profiles f_i : [0, L] -> C.  The profiles
// must agree at the vertex (continuity across the glue point).
inline GraphState state_from_profile(const GridSpec& g,
                                     const std::vector<std::function<cplx(double)>>& f) {
  if (static_cast<int>(f.size()) != g.edges)
    throw std::invalid_argument("state_from_profile: one profile per edge required");
  const cplx v0 = f[0](0.0);
  for (int i = 1; i < g.edges; ++i) {
    const cplx vi = f[i](0.0);
    const double scale = std::max({1.0, std::abs(v0), std::abs(vi)});
    if (std::abs(vi - v0) > 1e-12 * scale)
      throw std::invalid_argument("state_from_profile: profiles disagree at the vertex");
  }
  GraphState u(g);
  u.vertex = v0;
  for (int i = 0; i < g.edges; ++i)
    for (int k = 0; k + 1 < g.points_per_edge; ++k)
      u.samples[i][k] = f[i]((k + 1) * g.spacing);
  u.pin_outer();  // x = L carries the Dirichlet truncation
  return u;
}

inline GraphState state_from_profile(const GridSpec& g, const std::function<cplx(double)>& f) {
  return state_from_profile(g, std::vector<std::function<cplx(double)>>(g.edges, f));
}

// Complex L2 pairing sum w_k u_k conj(v_k) with trapezoid weights.
inline cplx complex_pairing(const GraphState& u, const GraphState& v) {
  require_same_grid(u, v);
  const double h = u.grid.spacing;
  cplx acc = double(u.grid.edges) * (h / 2.0) * u.vertex * std::conj(v.vertex);
  for (int i = 0; i < u.grid.edges; ++i) {
    const auto& a = u.samples[i];
    const auto& b = v.samples[i];
    const int m = u.grid.points_per_edge;
    for (int k = 0; k + 1 < m; ++k) acc += h * a[k] * std::conj(b[k]);
    acc += (h / 2.0) * a[m - 1] * std::conj(b[m - 1]);
  }
  return acc;
}

// Real scalar product Re int_Gamma u conj(v) dx.
inline double inner_product(const GraphState& u, const GraphState& v) {
  return complex_pairing(u, v).real();
}

inline double mass(const GraphState& u) { return inner_product(u, u); }

inline double l2_norm(const GraphState& u) { return std::sqrt(std::max(0.0, mass(u))); }

inline double max_abs(const GraphState& u) {
  double m = std::abs(u.vertex);
  for (const auto& e : u.samples)
    for (const auto& z : e) m = std::max(m, std::abs(z));
  return m;
}

// Elementwise algebra (value semantics; grids must match).
inline GraphState operator*(cplx c, const GraphState& u) {
  GraphState r = u;
  r.vertex *= c;
  for (auto& e : r.samples)
    for (auto& z : e) z *= c;
  return r;
}

inline GraphState operator*(double c, const GraphState& u) { return cplx(c, 0.0) * u; }

inline GraphState operator+(const GraphState& u, const GraphState& v) {
  require_same_grid(u, v);
  GraphState r = u;
  r.vertex += v.vertex;
  for (int i = 0; i < r.grid.edges; ++i)
    for (std::size_t k = 0; k < r.samples[i].size(); ++k) r.samples[i][k] += v.samples[i][k];
  return r;
}

inline GraphState operator-(const GraphState& u, const GraphState& v) {
  require_same_grid(u, v);
  GraphState r = u;
  r.vertex -= v.vertex;
  for (int i = 0; i < r.grid.edges; ++i)
    for (std::size_t k = 0; k < r.samples[i].size(); ++k) r.samples[i][k] -= v.samples[i][k];
  return r;
}

inline double l2_distance(const GraphState& u, const GraphState& v) { return l2_norm(u - v); }

// inf_theta || u - e^{i theta} v ||_{L^2}; the optimal phase is the argument
// of the complex pairing, so the infimum has a closed form.
inline double phase_distance_l2(const GraphState& u, const GraphState& v) {
  const double d2 = mass(u) + mass(v) - 2.0 * std::abs(complex_pairing(u, v));
  return std::sqrt(std::max(0.0, d2));
}

// Fraction of the mass sitting in the outermost cells; monitors how much
// the truncation at L is actually felt by a state.
inline double tail_fraction(const GraphState& u, int tail_cells = 16) {
  const double h = u.grid.spacing;
  const int m = u.grid.points_per_edge;
  double tail = 0.0;
  for (const auto& e : u.samples)
    for (int k = std::max(0, m - tail_cells); k < m; ++k)
      tail += (k + 1 == m ? h / 2.0 : h) * std::norm(e[k]);
  const double total = mass(u);
  return total > 0.0 ? tail / total : 0.0;
}

// One edge viewed as a half-line profile; values[k] lives at x = k*h,
// k = 0..M (the vertex value is values[0]).  Trapezoid weights h/2, h,
// ..., h, h/2.
struct EdgeProfile {
  double spacing = 0.0;
  std::vector<cplx> values;

  int cells() const { return static_cast<int>(values.size()) - 1; }
};

inline EdgeProfile edge_profile(const GraphState& u, int edge) {
  EdgeProfile p;
  p.spacing = u.grid.spacing;
  p.values.resize(u.grid.points_per_edge + 1);
  p.values[0] = u.vertex;
  for (int k = 0; k < u.grid.points_per_edge; ++k) p.values[k + 1] = u.samples[edge][k];
  return p;
}

inline EdgeProfile profile_from_function(const GridSpec& g, const std::function<cplx(double)>& f) {
  EdgeProfile p;
  p.spacing = g.spacing;
  p.values.resize(g.points_per_edge + 1);
  for (int k = 0; k <= g.points_per_edge; ++k) p.values[k] = f(k * g.spacing);
  return p;
}

inline double edge_mass(const EdgeProfile& p) {
  const double h = p.spacing;
  const int m = p.cells();
  double acc = (h / 2.0) * (std::norm(p.values[0]) + std::norm(p.values[m]));
  for (int k = 1; k < m; ++k) acc += h * std::norm(p.values[k]);
  return acc;
}

inline double edge_gradient_energy(const EdgeProfile& p) {
  const double h = p.spacing;
  double acc = 0.0;
  for (int k = 0; k < p.cells(); ++k) acc += std::norm(p.values[k + 1] - p.values[k]) / h;
  return acc;
}

}  // namespace lognls
