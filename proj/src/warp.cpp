#include "lfsyn/warp.hpp"

#include <algorithm>
#include <cmath>

namespace lfsyn {

DisparityMap::DisparityMap(int width, int height, double dx, double dy)
    : Raster(width, height, 2) {
  for (std::size_t i = 0; i < data_.size(); i += 2) {
    data_[i] = dx;
    data_[i + 1] = dy;
  }
}

bool DisparityMap::is_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

DisparityMap DisparityMap::blend(double a, const DisparityMap &other, double b) const {
  require_same_shape(*this, other, "disparity blend");
  DisparityMap out(width_, height_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = a * data_[i] + b * other.data_[i];
  }
  return out;
}

DisparityMap DisparityMap::scaled(double factor) const {
  DisparityMap out(width_, height_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = factor * data_[i];
  }
  return out;
}

namespace {

// Tap value with the border policy applied to integer coordinates.
double tap(const Raster &image, int x, int y, int c, Border border) {
  if (x < 0 || x >= image.width() || y < 0 || y >= image.height()) {
    if (border == Border::Zero) {
      return 0.0;
    }
    x = std::clamp(x, 0, image.width() - 1);
    y = std::clamp(y, 0, image.height() - 1);
  }
  return image.at(x, y, c);
}

template <typename Out>
void warp_into(const Raster &in, const DisparityMap &adm, Border border, Out &out) {
  require_same_shape(in, adm, "warp");
  const int channels = in.channels();
  for (int y = 0; y < in.height(); ++y) {
    for (int x = 0; x < in.width(); ++x) {
      const double px = x + adm.dx(x, y);
      const double py = y + adm.dy(x, y);
      for (int c = 0; c < channels; ++c) {
        out.at(x, y, c) = sample_bilinear(in, px, py, c, border);
      }
    }
  }
}

} // namespace

double sample_bilinear(const Raster &image, double px, double py, int c, Border border) {
  if (border == Border::Clamp) {
    px = std::clamp(px, 0.0, static_cast<double>(image.width() - 1));
    py = std::clamp(py, 0.0, static_cast<double>(image.height() - 1));
  }
  const double fx0 = std::floor(px);
  const double fy0 = std::floor(py);
  const double tx = px - fx0;
  const double ty = py - fy0;
  const int x0 = static_cast<int>(fx0);
  const int y0 = static_cast<int>(fy0);

  const double top = std::lerp(tap(image, x0, y0, c, border),
                               tx > 0.0 ? tap(image, x0 + 1, y0, c, border) : 0.0, tx);
  if (ty == 0.0) {
    return top;
  }
  const double bottom = std::lerp(tap(image, x0, y0 + 1, c, border),
                                  tx > 0.0 ? tap(image, x0 + 1, y0 + 1, c, border) : 0.0, tx);
  return std::lerp(top, bottom, ty);
}

ViewImage warp(const ViewImage &image, const DisparityMap &adm, Border border) {
  ViewImage out(image.width(), image.height(), image.channels());
  warp_into(image, adm, border, out);
  return out;
}

DisparityMap warp(const DisparityMap &field, const DisparityMap &adm, Border border) {
  DisparityMap out(field.width(), field.height());
  warp_into(field, adm, border, out);
  return out;
}

double mean_abs_difference(const Raster &a, const Raster &b) {
  require_same_shape(a, b, "mean absolute difference");
  if (a.channels() != b.channels()) {
    throw Error("mean absolute difference: channel mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    sum += std::abs(a.data()[i] - b.data()[i]);
  }
  return sum / static_cast<double>(a.data().size());
}

double warp_residual(const ViewImage &target, const ViewImage &source, const DisparityMap &adm) {
  require_same_shape(target, source, "warp residual");
  return mean_abs_difference(target, warp(source, adm));
}

} // namespace lfsyn
