#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lfsyn {

/// Raised for any violated precondition or malformed input.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Regular grid of angular samples. Index (i, j) is (row, col) and maps to
/// normalized coordinates v = i / (rows - 1), u = j / (cols - 1). A single
/// sample along an axis sits at coordinate 0.
class AngularGrid {
public:
  AngularGrid(int rows, int cols);

  [[nodiscard]] int rows() const noexcept { return rows_; }
  [[nodiscard]] int cols() const noexcept { return cols_; }
  [[nodiscard]] std::size_t size() const noexcept {
    return static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_);
  }

  [[nodiscard]] double u(int col) const;
  [[nodiscard]] double v(int row) const;

  bool operator==(const AngularGrid &) const = default;

private:
  int rows_;
  int cols_;
};

/// Dense row-major, channel-interleaved array of doubles. Base storage for
/// views, disparity maps and confidence maps.
class Raster {
public:
  Raster() = default;
  Raster(int width, int height, int channels, double fill = 0.0);

  [[nodiscard]] int width() const noexcept { return width_; }
  [[nodiscard]] int height() const noexcept { return height_; }
  [[nodiscard]] int channels() const noexcept { return channels_; }
  [[nodiscard]] std::size_t pixel_count() const noexcept {
    return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  }

  [[nodiscard]] double &at(int x, int y, int c = 0) noexcept {
    return data_[index(x, y, c)];
  }
  [[nodiscard]] double at(int x, int y, int c = 0) const noexcept {
    return data_[index(x, y, c)];
  }

  [[nodiscard]] std::vector<double> &data() noexcept { return data_; }
  [[nodiscard]] const std::vector<double> &data() const noexcept { return data_; }

  [[nodiscard]] bool same_shape(const Raster &other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  bool operator==(const Raster &) const = default;

protected:
  [[nodiscard]] std::size_t index(int x, int y, int c) const noexcept {
    return (static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
            static_cast<std::size_t>(x)) *
               static_cast<std::size_t>(channels_) +
           static_cast<std::size_t>(c);
  }

  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<double> data_;
};

/// One sub-aperture image. Radiance is normalized to [0, 1]; 1 or 3 channels.
class ViewImage : public Raster {
public:
  ViewImage() = default;
  ViewImage(int width, int height, int channels, double fill = 0.0);

  /// True when every sample is finite and inside [0, 1].
  [[nodiscard]] bool is_valid_radiance() const noexcept;
};

/// Throws unless both rasters have the same width and height.
void require_same_shape(const Raster &a, const Raster &b, const char *what);

/// 4D light field: one view per angular grid cell, all of identical shape.
class LightField {
public:
  LightField(AngularGrid grid, std::vector<ViewImage> views);

  [[nodiscard]] const AngularGrid &grid() const noexcept { return grid_; }
  [[nodiscard]] int width() const noexcept { return views_.front().width(); }
  [[nodiscard]] int height() const noexcept { return views_.front().height(); }
  [[nodiscard]] int channels() const noexcept { return views_.front().channels(); }

  [[nodiscard]] const ViewImage &view(int row, int col) const;
  [[nodiscard]] const std::vector<ViewImage> &views() const noexcept { return views_; }

  /// Replaces one view. The replacement must match the shared shape.
  void set_view(int row, int col, ViewImage view);

  bool operator==(const LightField &) const = default;

private:
  AngularGrid grid_;
  std::vector<ViewImage> views_;
};

enum class EpiAxis {
  Horizontal, ///< fixed (y, v); rows of the EPI vary u, columns vary x
  Vertical,   ///< fixed (x, u); rows of the EPI vary v, columns vary y
};

/// Epipolar plane image: angular extent rows by spatial extent columns.
struct EpiImage {
  EpiAxis axis = EpiAxis::Horizontal;
  Raster data; ///< width = spatial extent, height = angular extent

  [[nodiscard]] int angular_extent() const noexcept { return data.height(); }
  [[nodiscard]] int spatial_extent() const noexcept { return data.width(); }
};

/// Copies the EPI at a fixed spatial scanline and a fixed angular index.
/// Horizontal: fixed_spatial is the image row y, fixed_angular the grid row.
/// Vertical: fixed_spatial is the image column x, fixed_angular the grid column.
EpiImage extract_epi(const LightField &lf, EpiAxis axis, int fixed_spatial,
                     int fixed_angular);

const ViewImage &view_at(const LightField &lf, int row, int col);

struct CornerView {
  ViewImage image;
  double u = 0.0;
  double v = 0.0;
};

/// Corners in order (0,0), (0,cols-1), (rows-1,0), (rows-1,cols-1).
std::array<CornerView, 4> corner_views(const LightField &lf);

/// Builds the 2x2 light field made of the corner views of `lf`.
LightField corner_lightfield(const LightField &lf);

} // namespace lfsyn
