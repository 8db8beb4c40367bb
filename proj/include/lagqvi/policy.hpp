// Optimal-policy extraction from a solved field: the active obstacle set of
// the free layer and the minimizing impulse per node, plus the pure action
// query used by the simulator.
#pragma once

#include "lagqvi/hjb.hpp"

#include <utility>
#include <vector>

namespace lagqvi {

struct Action {
    bool impulse = false;
    Real xi = 0;
};

struct PolicyTable {
    ProblemSpec spec;
    Grid grid;
    BoolGrid act;     // (n_t+1) x (n_x+1), free-layer active set
    Matrix xi_star;   // impulse size where act, NaN elsewhere
    Real tol = 0;
};

// Default active-set tolerance: 10 * pde_residual_sup + 1e-10, so grid-level
// near-ties do not chatter.
Real default_policy_tol(const ValueField& field);

// act marks free-layer nodes with v0 >= intervention - tol; xi_star is the
// intervention argmin (ties toward smaller |xi|). tol <= 0 is a ConfigError.
PolicyTable extract_policy(const ValueField& field, const ProblemSpec& spec,
                           const Grid& grid, Real tol);

// Wait while the lag has not elapsed (r < delta, t < T); otherwise impulse
// with the nearest active node's xi_star. At t = T the terminal minimization
// is consulted directly (terminal impulses are lag-exempt).
Action decide(const PolicyTable& policy, Real t, Real r, Real x);

// Ordered impulse times and sizes. Admissibility (first-impulse bound,
// inter-impulse gaps, cone membership) is checked by simulate::check_admissible.
struct ImpulseSchedule {
    std::vector<std::pair<Real, Real>> impulses;  // (tau_i, xi_i)
};

}  // namespace lagqvi
