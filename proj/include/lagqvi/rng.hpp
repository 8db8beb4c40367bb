// Deterministic per-path Gaussian streams. Normals come from Box-Muller over
// mt19937_64 bits so results are identical across standard libraries; each
// path derives its own seed from (base seed, path index) via splitmix64.
#pragma once

#include "lagqvi/types.hpp"

#include <cstdint>
#include <random>

namespace lagqvi {

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class GaussianStream {
  public:
    GaussianStream(std::uint64_t seed, bool mirror = false)
        : gen_(seed), mirror_(mirror) {}

    // Uniform in (0, 1].
    Real uniform_pos() {
        return (static_cast<Real>(gen_() >> 11) + 1.0) * 0x1.0p-53;
    }

    Real normal() {
        if (have_spare_) {
            have_spare_ = false;
            return mirror_ ? -spare_ : spare_;
        }
        const Real u1 = uniform_pos();
        const Real u2 = uniform_pos();
        const Real rad = std::sqrt(-2.0 * std::log(u1));
        constexpr Real two_pi = 6.283185307179586476925286766559;
        spare_ = rad * std::sin(two_pi * u2);
        have_spare_ = true;
        const Real z = rad * std::cos(two_pi * u2);
        return mirror_ ? -z : z;
    }

  private:
    std::mt19937_64 gen_;
    bool mirror_;
    bool have_spare_ = false;
    Real spare_ = 0;
};

// Antithetic pairing shares one generator seed between paths 2p and 2p+1.
inline GaussianStream path_stream(std::uint64_t base_seed, std::uint64_t path,
                                  bool antithetic) {
    const std::uint64_t block = antithetic ? path / 2 : path;
    const bool mirror = antithetic && (path % 2 == 1);
    return GaussianStream(splitmix64(base_seed ^ splitmix64(block + 1)), mirror);
}

}  // namespace lagqvi
