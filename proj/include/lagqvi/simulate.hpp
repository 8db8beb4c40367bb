// Euler-Maruyama simulation of the impulse-controlled state equation, cost
// estimation, admissibility checking, and Monte Carlo verification of the
// dynamic programming identities.
#pragma once

#include "lagqvi/policy.hpp"
#include "lagqvi/rng.hpp"
#include "lagqvi/value_field.hpp"

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

namespace lagqvi {

struct McConfig {
    int n_paths = 10000;
    Real dt_sim = 0;  // <= 0 selects the grid dt of the consuming operation
    std::uint64_t seed = 1;
    bool antithetic = false;
};

enum class InfeasibleMode { Strict, Tolerant };

struct TrivialControl {};
struct ScheduleControl {
    ImpulseSchedule schedule;
};
struct PolicyControl {
    const PolicyTable* policy = nullptr;
};
using Controller = std::variant<TrivialControl, ScheduleControl, PolicyControl>;

struct InitialTriple {
    Real t = 0;
    Real r = 0;
    Real x = 0;
};

struct PathPoint {
    Real t = 0;
    Real x = 0;
    Real r = 0;
    bool impulse = false;
    Real xi = 0;
};

struct PathResult {
    Real cost = 0;
    ImpulseSchedule schedule;    // impulses actually applied
    int rejected = 0;            // infeasible requests dropped in tolerant mode
    std::vector<PathPoint> points;  // populated only when recording
};

// One controlled path on [t, T]. The controller is consulted at the initial
// triple and then once per step after the diffusion update; impulse times are
// snapped to step times. Infeasible requests (r < delta before T) throw
// AdmissibilityError in strict mode and are rejected in tolerant mode.
PathResult simulate_path(const ProblemSpec& spec, const InitialTriple& init,
                         const Controller& controller, GaussianStream& noise,
                         Real dt_sim, InfeasibleMode mode = InfeasibleMode::Strict,
                         bool record = false);

struct SimResult {
    Real mean_cost = 0;
    Real stderr_cost = 0;
    int n_paths = 0;
    std::map<int, int> impulse_histogram;  // impulses per path -> path count
    std::vector<std::vector<PathPoint>> paths;  // retained only on request
};

SimResult estimate_cost(const ProblemSpec& spec, const InitialTriple& init,
                        const Controller& controller, const McConfig& mc,
                        InfeasibleMode mode = InfeasibleMode::Strict,
                        int record_paths = 0);

struct AdmissibilityReport {
    bool admissible = true;
    std::string violation;  // description of the first violation
};

// Checks the first-impulse bound tau_1 >= (t+delta-r) v t, the inter-impulse
// gaps (terminal impulses are exempt), and cone membership of each xi != 0.
AdmissibilityReport check_admissible(const ImpulseSchedule& schedule, Real t,
                                     Real r, Real delta, Real horizon,
                                     const ConeSpec& cone);

struct DppResidual {
    Real residual = 0;     // MC value - field value
    Real stderr_mc = 0;
    Real field_value = 0;
    Real mc_value = 0;
    int regime = 1;        // 1: r < delta (equality), 2: r >= delta (inequality)
    bool obstacle_ok = true;  // regime 2 only: v0 <= intervention at the nearest node
};

// Simulates the uncontrolled flow to time s and compares
// E[V(s, r+s-t, X0(s)) + int g] against the stored field value. For r <
// delta, s must lie in [t, t+delta-r); for r >= delta, s in [t, T].
DppResidual dpp_check(const ValueField& field, const ProblemSpec& spec,
                      const InitialTriple& init, Real s, const McConfig& mc);

}  // namespace lagqvi
