#pragma once

#include "lfsyn/core.hpp"

namespace lfsyn {

/// Aperture disparity map A_{o<-i}: for every pixel x of the output view o,
/// the displacement (dx, dy) in pixels such that view i holds the same
/// radiance at x + A(x). Stored as a two-channel raster.
class DisparityMap : public Raster {
public:
  DisparityMap() = default;
  DisparityMap(int width, int height, double dx = 0.0, double dy = 0.0);

  [[nodiscard]] double &dx(int x, int y) noexcept { return at(x, y, 0); }
  [[nodiscard]] double dx(int x, int y) const noexcept { return at(x, y, 0); }
  [[nodiscard]] double &dy(int x, int y) noexcept { return at(x, y, 1); }
  [[nodiscard]] double dy(int x, int y) const noexcept { return at(x, y, 1); }

  [[nodiscard]] bool is_finite() const noexcept;

  /// Per-pixel a * this + b * other.
  [[nodiscard]] DisparityMap blend(double a, const DisparityMap &other, double b) const;
  [[nodiscard]] DisparityMap scaled(double factor) const;
};

enum class Border {
  Clamp, ///< samples outside the image repeat the edge pixel
  Zero,  ///< samples outside the image read as 0
};

/// Bilinear sample of channel c at continuous position (px, py); pixel
/// centers sit on integer coordinates.
double sample_bilinear(const Raster &image, double px, double py, int c, Border border);

/// Backward warp: output(x) = image(x + adm(x)) with bilinear interpolation.
ViewImage warp(const ViewImage &image, const DisparityMap &adm, Border border = Border::Clamp);

/// Same backward warp applied to a displacement field.
DisparityMap warp(const DisparityMap &field, const DisparityMap &adm,
                  Border border = Border::Clamp);

/// Mean over pixels and channels of |target - warp(source, adm)|.
double warp_residual(const ViewImage &target, const ViewImage &source, const DisparityMap &adm);

/// Mean absolute difference over pixels and channels.
double mean_abs_difference(const Raster &a, const Raster &b);

} // namespace lfsyn
