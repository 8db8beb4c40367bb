// Classical no-lag baseline, lag -> 0 limit study, sup/inf convolutions and
// empirical continuity moduli of solved fields.
#pragma once

#include "lagqvi/hjb.hpp"

#include <vector>

namespace lagqvi {

// Value table of the classical impulse problem (no decision lag): the
// obstacle is self-referential within a slice, resolved by value iteration to
// `tol` or `max_iter` sweeps (non-convergence raises SolveError with the
// iteration trace).
Matrix classical_qvi_solve(const ProblemSpec& spec, const Grid& grid,
                           Real tol = 1e-10, int max_iter = 50);

struct LimitStudy {
    std::vector<Real> deltas;  // strictly decreasing
    std::vector<Real> gaps;    // per-delta signed sup of V_delta(0,.,.) - V_classical(0,.)
    Real rate = 0;             // fitted log-log slope of gap vs delta (NaN if any gap <= 0)
};

// Solves the lag problem per delta on the same (n_t, n_x) grid and measures
// the sup gap against the classical baseline at t = 0 over all stored layers.
LimitStudy lag_limit_study(const ProblemSpec& spec, const Grid& grid,
                           const std::vector<Real>& deltas);

// Discrete sup/inf convolutions with quadratic penalty 1/(2 gamma^2) over the
// node set. The squared distance separates per axis, so the extremum is taken
// by exact sequential 1D passes over x, r and t. gamma must lie in (0, 1).
ValueField sup_convolution(const ValueField& field, Real gamma);
ValueField inf_convolution(const ValueField& field, Real gamma);

struct ModuliReport {
    Real lipschitz_x = 0;     // max |dV| / |dx|
    Real holder_t_local = 0;  // max |dV| / sqrt(|dt|), |dt| <= delta
    Real holder_t_global = 0; // same over dyadic strides up to the horizon
    Real holder_r = 0;        // max |dV| / sqrt(|d(r ^ delta)|)
};

// Measured over adjacent and stride-2 node pairs (plus dyadic strides for the
// global t modulus); used for cross-resolution boundedness checks.
ModuliReport continuity_moduli(const ValueField& field);

}  // namespace lagqvi
