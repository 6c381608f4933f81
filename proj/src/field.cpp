#include "inflap/field.hpp"

#include <bit>
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <limits>
#include <stdexcept>

namespace inflap {

ScalarField make_field(GridSpec grid, double fill) {
  ScalarField f;
  f.values.assign(grid.mask.size(), fill);
  for (size_t i = 0; i < grid.mask.size(); ++i)
    if (grid.mask[i] == NodeLabel::Exterior)
      f.values[i] = std::numeric_limits<double>::quiet_NaN();
  f.grid = std::move(grid);
  return f;
}

bool bilinear_value(const ScalarField& f, Vec2 p, double* out) {
  const GridSpec& g = f.grid;
  double fx = (p.x - g.origin.x) / g.h;
  double fy = (p.y - g.origin.y) / g.h;
  int i = static_cast<int>(std::floor(fx));
  int j = static_cast<int>(std::floor(fy));
  if (i < 0 || j < 0 || i + 1 >= g.nx || j + 1 >= g.ny) return false;
  double ax = fx - i, ay = fy - j;
  double v00 = f.values[g.idx(i, j)], v10 = f.values[g.idx(i + 1, j)];
  double v01 = f.values[g.idx(i, j + 1)], v11 = f.values[g.idx(i + 1, j + 1)];
  double v = (1 - ax) * (1 - ay) * v00 + ax * (1 - ay) * v10 +
             (1 - ax) * ay * v01 + ax * ay * v11;
  if (!std::isfinite(v)) return false;
  *out = v;
  return true;
}

namespace io {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using File = std::unique_ptr<std::FILE, FileCloser>;

File open_or_throw(const std::string& path, const char* mode) {
  File f(std::fopen(path.c_str(), mode));
  if (!f) throw std::runtime_error("cannot open " + path);
  return f;
}

static_assert(std::endian::native == std::endian::little,
              "binary field format is little-endian");

}  // namespace

void write_csv(const ScalarField& f, const std::string& path) {
  File fp = open_or_throw(path, "w");
  std::fprintf(fp.get(), "x,y,mask,value\n");
  const GridSpec& g = f.grid;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      Vec2 p = g.node(i, j);
      std::fprintf(fp.get(), "%.17g,%.17g,%d,%.17g\n", p.x, p.y,
                   static_cast<int>(g.label(i, j)), f.values[g.idx(i, j)]);
    }
  }
}

void write_binary(const ScalarField& f, const std::string& path) {
  File fp = open_or_throw(path, "wb");
  std::int64_t nx = f.grid.nx, ny = f.grid.ny;
  double h = f.grid.h, ox = f.grid.origin.x, oy = f.grid.origin.y;
  std::fwrite(&nx, sizeof nx, 1, fp.get());
  std::fwrite(&ny, sizeof ny, 1, fp.get());
  std::fwrite(&h, sizeof h, 1, fp.get());
  std::fwrite(&ox, sizeof ox, 1, fp.get());
  std::fwrite(&oy, sizeof oy, 1, fp.get());
  std::fwrite(f.values.data(), sizeof(double), f.values.size(), fp.get());
}

ScalarField read_binary(const std::string& path) {
  File fp = open_or_throw(path, "rb");
  std::int64_t nx = 0, ny = 0;
  double h = 0, ox = 0, oy = 0;
  if (std::fread(&nx, sizeof nx, 1, fp.get()) != 1 ||
      std::fread(&ny, sizeof ny, 1, fp.get()) != 1 ||
      std::fread(&h, sizeof h, 1, fp.get()) != 1 ||
      std::fread(&ox, sizeof ox, 1, fp.get()) != 1 ||
      std::fread(&oy, sizeof oy, 1, fp.get()) != 1)
    throw std::runtime_error("truncated field header in " + path);
  if (nx <= 0 || ny <= 0 || nx * ny > (1LL << 31) || !(h > 0))
    throw std::runtime_error("invalid field header in " + path);
  ScalarField f;
  f.grid.nx = static_cast<int>(nx);
  f.grid.ny = static_cast<int>(ny);
  f.grid.h = h;
  f.grid.origin = {ox, oy};
  f.values.resize(static_cast<size_t>(nx * ny));
  if (std::fread(f.values.data(), sizeof(double), f.values.size(), fp.get()) !=
      f.values.size())
    throw std::runtime_error("truncated field data in " + path);
  // the binary format carries no mask; recover exterior-vs-interior from NaN
  f.grid.mask.resize(f.values.size());
  for (size_t i = 0; i < f.values.size(); ++i)
    f.grid.mask[i] = std::isfinite(f.values[i]) ? NodeLabel::Interior
                                                : NodeLabel::Exterior;
  return f;
}

}  // namespace io

}  // namespace inflap
