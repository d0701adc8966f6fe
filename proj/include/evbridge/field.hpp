#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "evbridge/common.hpp"

namespace evbridge {

// Dense H x W grid of doubles, row-major. Used for intensity images,
// log-intensity, gradient components and real-valued count fields.
struct ScalarField {
  int width = 0;
  int height = 0;
  std::vector<double> data;

  ScalarField() = default;
  ScalarField(int w, int h, double fill = 0.0)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {
    if (w <= 0 || h <= 0) throw dimension_error("ScalarField: non-positive size");
  }

  double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
  double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
  std::size_t size() const { return data.size(); }

  bool same_shape(const ScalarField& o) const {
    return width == o.width && height == o.height;
  }
};

// Per-pixel 2-vectors stored as two scalar planes (x-component u, y-component v).
struct VectorField {
  int width = 0;
  int height = 0;
  std::vector<double> u;
  std::vector<double> v;

  VectorField() = default;
  VectorField(int w, int h, double fu = 0.0, double fv = 0.0)
      : width(w),
        height(h),
        u(static_cast<std::size_t>(w) * h, fu),
        v(static_cast<std::size_t>(w) * h, fv) {
    if (w <= 0 || h <= 0) throw dimension_error("VectorField: non-positive size");
  }

  double& ux(int x, int y) { return u[static_cast<std::size_t>(y) * width + x]; }
  double ux(int x, int y) const { return u[static_cast<std::size_t>(y) * width + x]; }
  double& vy(int x, int y) { return v[static_cast<std::size_t>(y) * width + x]; }
  double vy(int x, int y) const { return v[static_cast<std::size_t>(y) * width + x]; }
  std::size_t size() const { return u.size(); }

  bool same_shape(const VectorField& o) const {
    return width == o.width && height == o.height;
  }
  bool same_shape(const ScalarField& o) const {
    return width == o.width && height == o.height;
  }
};

inline void ensure_finite(const ScalarField& f, const char* what) {
  for (double x : f.data)
    if (!std::isfinite(x)) throw validation_error(std::string(what) + ": non-finite value");
}

inline void ensure_finite(const VectorField& f, const char* what) {
  for (double x : f.u)
    if (!std::isfinite(x)) throw validation_error(std::string(what) + ": non-finite value");
  for (double x : f.v)
    if (!std::isfinite(x)) throw validation_error(std::string(what) + ": non-finite value");
}

// Pixelwise ln(I + eps). Intensities are expected normalized to [0, 1];
// eps keeps the log finite at I = 0.
inline ScalarField log_transform(const ScalarField& img, double eps = 1e-3) {
  if (!(eps > 0.0)) throw std::domain_error("log_transform: eps must be > 0");
  ScalarField out(img.width, img.height);
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    const double I = img.data[i];
    if (I < 0.0 || !std::isfinite(I))
      throw std::domain_error("log_transform: negative or non-finite intensity");
    out.data[i] = std::log(I + eps);
  }
  return out;
}

// Central differences in the interior, one-sided at the borders. Exact for
// fields linear in x and y, which the event-model oracle tests rely on.
inline VectorField spatial_gradient(const ScalarField& f) {
  if (f.width < 2 || f.height < 2)
    throw dimension_error("spatial_gradient: needs width and height >= 2");
  VectorField g(f.width, f.height);
  const int W = f.width, H = f.height;
  for (int y = 0; y < H; ++y) {
    for (int x = 0; x < W; ++x) {
      double gx, gy;
      if (x == 0)
        gx = f.at(1, y) - f.at(0, y);
      else if (x == W - 1)
        gx = f.at(W - 1, y) - f.at(W - 2, y);
      else
        gx = 0.5 * (f.at(x + 1, y) - f.at(x - 1, y));
      if (y == 0)
        gy = f.at(x, 1) - f.at(x, 0);
      else if (y == H - 1)
        gy = f.at(x, H - 1) - f.at(x, H - 2);
      else
        gy = 0.5 * (f.at(x, y + 1) - f.at(x, y - 1));
      g.ux(x, y) = gx;
      g.vy(x, y) = gy;
    }
  }
  return g;
}

// Pointwise inner product of two vector fields.
inline ScalarField dot_field(const VectorField& g, const VectorField& w) {
  if (!g.same_shape(w)) throw dimension_error("dot_field: shape mismatch");
  ScalarField out(g.width, g.height);
  for (std::size_t i = 0; i < out.data.size(); ++i)
    out.data[i] = g.u[i] * w.u[i] + g.v[i] * w.v[i];
  return out;
}

}  // namespace evbridge
