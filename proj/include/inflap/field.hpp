#pragma once

#include <string>
#include <vector>

#include "inflap/geometry.hpp"

namespace inflap {

/// Real values on a uniform grid. Exterior nodes hold NaN; Dirichlet nodes
/// (boundary rim, obstacle) hold their data exactly.
struct ScalarField {
  GridSpec grid;
  std::vector<double> values;

  struct Meta {
    std::string problem;  // "potential" | "groundstate" | "pharmonic" | ...
    long iterations = 0;
    double residual = 0.0;  // final sup-norm change per sweep
    bool converged = true;
    double p = 0.0;         // p-harmonic runs
    double lambda = 0.0;    // ground-state runs
    std::string lambda_source;
    int stencil_k = 0;
    bool stagnation_retry = false;
  } meta;

  double at(int i, int j) const { return values[grid.idx(i, j)]; }
  double& at(int i, int j) { return values[grid.idx(i, j)]; }
};

ScalarField make_field(GridSpec grid, double fill = 0.0);

/// Bilinear interpolation of the field at p. Returns false when p falls in a
/// cell with an exterior (NaN) corner or outside the grid.
bool bilinear_value(const ScalarField& f, Vec2 p, double* out);

namespace io {

/// Flat CSV: header "x,y,mask,value", one row per node, row-major. Mask codes:
/// 0 interior, 1 boundary, 2 exterior, 3 obstacle. Reals with 17 significant
/// digits; exterior values print as nan.
void write_csv(const ScalarField& f, const std::string& path);

/// Binary grid: int64 nx, int64 ny, float64 h, float64 origin_x, float64
/// origin_y, then nx*ny row-major float64 values, little-endian. Exterior
/// nodes are NaN; the loader rebuilds the mask as exterior-vs-interior.
void write_binary(const ScalarField& f, const std::string& path);
ScalarField read_binary(const std::string& path);

}  // namespace io

}  // namespace inflap
