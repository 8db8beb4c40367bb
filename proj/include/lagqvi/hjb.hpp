// Explicit monotone backward solver for the coupled lag/free system, written
// in the unified obstacle form: the lag layers carry the transport step and a
// vacuous obstacle 2L(T+1), the free layer carries the intervention obstacle
// evaluated on the freshly written r=0 layer of the same time slice, so no
// in-slice fixed point is needed.
#pragma once

#include "lagqvi/value_field.hpp"

#include <limits>

namespace lagqvi {

struct SchemeConfig {
    // Active-set detection tolerance; <= 0 selects 1e-12 * max(1, L(T+1)).
    Real obstacle_tol = -1;
    Real resolved_obstacle_tol(const ProblemSpec& spec) const;
};

struct ResidualReport {
    Real pde_residual_sup = 0;        // sup |min-form residual| at interior nodes
    Real obstacle_violation_sup = 0;  // sup (V - N_hat[V])^+
    Real active_fraction = 0;         // share of free-layer nodes with a binding obstacle
};

// One explicit step of the discrete generator b*D_upwind + 0.5*sigma^2*
// D2_central + g applied to the slice u_next, producing the slice at t_k.
// Boundary nodes use copied-slope ghost values. Both the lag transport and
// the free-layer continuation go through here so that layer orderings are
// preserved bitwise.
Vector generator_step(const ProblemSpec& spec, const Grid& grid, int k,
                      const Vector& u_next);

// min{h(x_i), min over feasible grid impulses of h(x_i+xi) + ell(T, xi)};
// shared by every r-layer at t = T.
Vector terminal_slice(const ProblemSpec& spec, const Grid& grid);

struct Intervention {
    Real value = std::numeric_limits<Real>::infinity();
    Real xi = 0;
    bool feasible = false;
};

// Best immediate impulse from node i using the slice `landing` as the r=0
// values: min over grid destinations inside the cone and domain of
// landing(i') + ell(t_k, (i'-i)*dx). Ties break toward smaller |xi|. An empty
// feasible set yields the +infinity sentinel.
Intervention best_impulse(const ProblemSpec& spec, const Grid& grid,
                          const Vector& landing, int k, int i);

// Same, reading the r=0 layer of `field` at time index k.
Intervention intervention(const ValueField& field, const ProblemSpec& spec,
                          const Grid& grid, int k, int i);

// Writes layers r_0..r_{m-1} at time index k from the layers at k+1 (layer
// index m-1 advances from the free layer). No obstacle applies for r < delta.
void step_lag_layers(ValueField& field, const ProblemSpec& spec, const Grid& grid, int k);

// Writes the free layer at k: min{continuation step, intervention}, where the
// intervention reads the r=0 layer already written at k.
void step_free_layer(ValueField& field, const ProblemSpec& spec, const Grid& grid, int k);

ValueField solve(const ProblemSpec& spec, const Grid& grid, const SchemeConfig& scheme = {});

// Discrete min-form residuals of the solved field, re-evaluated from the
// stored layers (not from solver internals).
ResidualReport residuals(const ValueField& field, const ProblemSpec& spec,
                         const Grid& grid, const SchemeConfig& scheme = {});

// Value table of the uncontrolled flow (no impulses): the plain linear PDE
// swept backward from h. Used as a Monte Carlo oracle for trivial control.
Matrix solve_uncontrolled(const ProblemSpec& spec, const Grid& grid);

}  // namespace lagqvi
