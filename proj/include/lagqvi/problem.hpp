// Problem instances: horizon, decision lag, coefficient selections, impulse
// cost, cone, and the declared constants (L, ell0, alpha) behind the standing
// hypotheses. Instances are immutable after construction and safe to share.
#pragma once

#include "lagqvi/coefficients.hpp"
#include "lagqvi/types.hpp"

#include <string>
#include <vector>

namespace lagqvi {

// Impulse cost ell(t, xi) = c0(t) + alpha*|xi|. With c0 nonincreasing and
// c0(T) >= ell0 > 0 the subadditivity, time-monotonicity and coercivity
// conditions hold automatically.
struct ImpulseCostSpec {
    CoefficientRef c0 = constant_coefficient(0.1);
    Real alpha = 0.5;
};

enum class ConeDirection { Nonnegative, Nonpositive, FullLine };

struct ConeSpec {
    ConeDirection direction = ConeDirection::FullLine;
    bool contains(Real xi) const {
        switch (direction) {
            case ConeDirection::Nonnegative: return xi >= 0;
            case ConeDirection::Nonpositive: return xi <= 0;
            case ConeDirection::FullLine: return true;
        }
        return false;
    }
};

std::string cone_name(ConeDirection d);
ConeDirection cone_from_name(const std::string& name);

struct ProblemSpec {
    Real horizon = 1.0;  // T
    Real lag = 0.25;     // delta
    int dim = 1;
    CoefficientRef drift;     // b(t,x)
    CoefficientRef vol;       // sigma(t,x)
    CoefficientRef running;   // g(t,x)
    CoefficientRef terminal;  // h(x)
    ImpulseCostSpec impulse_cost;
    ConeSpec cone;
    Real bound_L = 1.0;  // common bound / Lipschitz constant
    Real ell0 = 0.1;
    Real alpha = 0.5;

    Real drift_at(Real t, Real x) const { return eval(drift, t, x); }
    Real vol_at(Real t, Real x) const { return eval(vol, t, x); }
    Real running_at(Real t, Real x) const { return eval(running, t, x); }
    Real terminal_at(Real x) const { return eval(terminal, horizon, x); }
    Real impulse_cost_at(Real t, Real xi) const {
        return eval(impulse_cost.c0, t, 0.0) + impulse_cost.alpha * std::abs(xi);
    }
};

// Rejects structurally degenerate instances (delta outside (0,T), non-positive
// constants, bad family parameters) with a ConfigError naming the field.
void check_well_formed(const ProblemSpec& spec);

struct ValidationClause {
    std::string name;
    bool pass = true;
    Real worst = 0;       // worst sampled ratio/margin for the clause
    std::string witness;  // sample point realizing the worst case, on failure
};

struct ValidationReport {
    std::vector<ValidationClause> clauses;
    int n_samples = 0;
    unsigned long long seed = 0;
    bool pass() const;
    const ValidationClause* find(const std::string& name) const;
};

// Sampled check of the standing hypotheses: state-coefficient bound and
// Lipschitz clauses, cost bound and Lipschitz clauses, impulse-cost
// coercivity, time monotonicity and strict subadditivity.
ValidationReport validate_hypotheses(const ProblemSpec& spec, int n_samples,
                                     unsigned long long seed);

// H(t,x,p,P) = b*p + 0.5*sigma^2*P + g in dimension one.
Real hamiltonian(const ProblemSpec& spec, Real t, Real x, Real p, Real P);

}  // namespace lagqvi
