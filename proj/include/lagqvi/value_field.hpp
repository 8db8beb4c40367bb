// Storage for the solved value function. Layer j < m holds V(t, j*dt, x) on
// the lag region; layer m holds the free layer V0(t, x) = V(t, delta, x).
// Queries with r >= delta resolve to the free layer.
#pragma once

#include "lagqvi/grid.hpp"
#include "lagqvi/types.hpp"

#include <string>
#include <vector>

namespace lagqvi {

struct SolveMeta {
    std::string spec_hash;
    std::string scheme = "explicit-upwind";
    Real obstacle_tol = 0;
    Real pde_residual_sup = 0;
};

class ValueField {
  public:
    ValueField() = default;
    explicit ValueField(const Grid& grid)
        : grid_(grid),
          layers_(static_cast<size_t>(grid.m) + 1,
                  Matrix::Zero(grid.n_t + 1, grid.n_x + 1)) {}

    const Grid& grid() const { return grid_; }
    int n_layers() const { return static_cast<int>(layers_.size()); }

    Matrix& layer(int j) { return layers_[static_cast<size_t>(j)]; }
    const Matrix& layer(int j) const { return layers_[static_cast<size_t>(j)]; }
    Matrix& free_layer() { return layers_.back(); }
    const Matrix& free_layer() const { return layers_.back(); }

    // Node accessor; the layer index is clamped at m (r-collapse).
    Real at(int k, int j, int i) const {
        return layers_[static_cast<size_t>(std::min(j, grid_.m))](k, i);
    }

    SolveMeta meta;

  private:
    Grid grid_;
    std::vector<Matrix> layers_;
};

// Multilinear interpolation in (t, r ^ delta, x); exact at nodes, arguments
// clamped to the stored domain.
Real interpolate(const ValueField& field, Real t, Real r, Real x);

}  // namespace lagqvi
