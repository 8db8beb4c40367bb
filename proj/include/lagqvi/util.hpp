// Small shared utilities: deterministic compensated summation and a
// fork-join parallel loop capped by LAGQVI_THREADS. Results never depend on
// the thread count: work items write to disjoint slots and reductions run in
// index order afterwards.
#pragma once

#include "lagqvi/types.hpp"

#include <functional>
#include <vector>

namespace lagqvi {

struct KahanSum {
    Real sum = 0;
    Real carry = 0;
    void add(Real v) {
        const Real y = v - carry;
        const Real t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

int thread_budget();

void parallel_for(long n, const std::function<void(long)>& body);

}  // namespace lagqvi
