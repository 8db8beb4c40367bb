// Discretization of (t, r, x). The r-axis is collapsed at r = delta: values
// for r >= delta coincide with the free layer, so only layers r_j = j*dt,
// j = 0..m-1, plus the collapsed layer are ever stored. delta must be an
// integer multiple of dt so the transport term advances exactly one r-layer
// per backward time step.
#pragma once

#include "lagqvi/problem.hpp"
#include "lagqvi/types.hpp"

namespace lagqvi {

struct Grid {
    int n_t = 0;       // time steps; dt = T/n_t
    int m = 0;         // lag steps; delta = m*dt
    int n_x = 0;       // state intervals; dx = (x_hi-x_lo)/n_x
    Real x_lo = -1;
    Real x_hi = 1;
    Real horizon = 1;  // T, copied from the owning spec

    Real dt() const { return horizon / n_t; }
    Real dx() const { return (x_hi - x_lo) / n_x; }
    Real lag() const { return m * dt(); }
    Real t_node(int k) const { return horizon * k / n_t; }
    Real x_node(int i) const { return x_lo + (x_hi - x_lo) * i / n_x; }
    int nearest_t_index(Real t) const;
    int nearest_x_index(Real x) const;
};

// Enforces commensurability (delta = m*dt exactly, up to roundoff) and the
// CFL bound dt*(max sigma^2/dx^2 + max |b|/dx) <= 1 computed from the
// families' analytic sup bounds. Throws ConfigError with the two nearest
// admissible n_t on a commensurability failure, or with the largest stable dt
// on a CFL failure.
Grid build_grid(const ProblemSpec& spec, int n_t, int n_x, Real x_lo, Real x_hi);

Real cfl_ratio(const ProblemSpec& spec, Real dt, Real dx);

}  // namespace lagqvi
