#include "lfsyn/core.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace lfsyn {

AngularGrid::AngularGrid(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) {
    throw Error("angular grid needs at least one row and one column, got " +
                std::to_string(rows) + "x" + std::to_string(cols));
  }
}

double AngularGrid::u(int col) const {
  if (col < 0 || col >= cols_) {
    throw Error("angular column " + std::to_string(col) + " out of range");
  }
  return cols_ > 1 ? static_cast<double>(col) / (cols_ - 1) : 0.0;
}

double AngularGrid::v(int row) const {
  if (row < 0 || row >= rows_) {
    throw Error("angular row " + std::to_string(row) + " out of range");
  }
  return rows_ > 1 ? static_cast<double>(row) / (rows_ - 1) : 0.0;
}

Raster::Raster(int width, int height, int channels, double fill)
    : width_(width), height_(height), channels_(channels) {
  if (width < 1 || height < 1 || channels < 1) {
    throw Error("raster dimensions must be positive");
  }
  data_.assign(pixel_count() * static_cast<std::size_t>(channels), fill);
}

ViewImage::ViewImage(int width, int height, int channels, double fill)
    : Raster(width, height, channels, fill) {
  if (channels != 1 && channels != 3) {
    throw Error("views carry 1 or 3 channels, got " + std::to_string(channels));
  }
}

bool ViewImage::is_valid_radiance() const noexcept {
  for (double value : data_) {
    if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
      return false;
    }
  }
  return true;
}

void require_same_shape(const Raster &a, const Raster &b, const char *what) {
  if (!a.same_shape(b)) {
    throw Error(std::string(what) + ": dimension mismatch (" + std::to_string(a.width()) +
                "x" + std::to_string(a.height()) + " vs " + std::to_string(b.width()) +
                "x" + std::to_string(b.height()) + ")");
  }
}

LightField::LightField(AngularGrid grid, std::vector<ViewImage> views)
    : grid_(grid), views_(std::move(views)) {
  if (views_.size() != grid_.size()) {
    throw Error("light field expects " + std::to_string(grid_.size()) + " views, got " +
                std::to_string(views_.size()));
  }
  const ViewImage &first = views_.front();
  for (const ViewImage &view : views_) {
    if (!view.same_shape(first) || view.channels() != first.channels()) {
      throw Error("light field views must share width, height and channels");
    }
  }
}

const ViewImage &LightField::view(int row, int col) const {
  if (row < 0 || row >= grid_.rows()) {
    throw Error("view row " + std::to_string(row) + " out of range [0, " +
                std::to_string(grid_.rows()) + ")");
  }
  if (col < 0 || col >= grid_.cols()) {
    throw Error("view column " + std::to_string(col) + " out of range [0, " +
                std::to_string(grid_.cols()) + ")");
  }
  return views_[static_cast<std::size_t>(row) * grid_.cols() + col];
}

void LightField::set_view(int row, int col, ViewImage view) {
  const ViewImage &current = this->view(row, col);
  if (!view.same_shape(current) || view.channels() != current.channels()) {
    throw Error("replacement view does not match the light field shape");
  }
  views_[static_cast<std::size_t>(row) * grid_.cols() + col] = std::move(view);
}

EpiImage extract_epi(const LightField &lf, EpiAxis axis, int fixed_spatial,
                     int fixed_angular) {
  const int channels = lf.channels();
  EpiImage epi;
  epi.axis = axis;
  if (axis == EpiAxis::Horizontal) {
    if (fixed_spatial < 0 || fixed_spatial >= lf.height()) {
      throw Error("horizontal EPI: spatial index y=" + std::to_string(fixed_spatial) + " out of range");
    }
    if (fixed_angular < 0 || fixed_angular >= lf.grid().rows()) {
      throw Error("horizontal EPI: angular index v=" + std::to_string(fixed_angular) + " out of range");
    }
    const int cols = lf.grid().cols();
    epi.data = Raster(lf.width(), cols, channels);
    for (int a = 0; a < cols; ++a) {
      const ViewImage &view = lf.view(fixed_angular, a);
      for (int x = 0; x < lf.width(); ++x) {
        for (int c = 0; c < channels; ++c) {
          epi.data.at(x, a, c) = view.at(x, fixed_spatial, c);
        }
      }
    }
  } else {
    if (fixed_spatial < 0 || fixed_spatial >= lf.width()) {
      throw Error("vertical EPI: spatial index x=" + std::to_string(fixed_spatial) + " out of range");
    }
    if (fixed_angular < 0 || fixed_angular >= lf.grid().cols()) {
      throw Error("vertical EPI: angular index u=" + std::to_string(fixed_angular) + " out of range");
    }
    const int rows = lf.grid().rows();
    epi.data = Raster(lf.height(), rows, channels);
    for (int a = 0; a < rows; ++a) {
      const ViewImage &view = lf.view(a, fixed_angular);
      for (int y = 0; y < lf.height(); ++y) {
        for (int c = 0; c < channels; ++c) {
          epi.data.at(y, a, c) = view.at(fixed_spatial, y, c);
        }
      }
    }
  }
  return epi;
}

const ViewImage &view_at(const LightField &lf, int row, int col) { return lf.view(row, col); }

std::array<CornerView, 4> corner_views(const LightField &lf) {
  const AngularGrid &grid = lf.grid();
  if (grid.rows() < 2 || grid.cols() < 2) {
    throw Error("corner views need an angular grid of at least 2x2");
  }
  const int last_row = grid.rows() - 1;
  const int last_col = grid.cols() - 1;
  return {CornerView{lf.view(0, 0), 0.0, 0.0}, CornerView{lf.view(0, last_col), 1.0, 0.0},
          CornerView{lf.view(last_row, 0), 0.0, 1.0},
          CornerView{lf.view(last_row, last_col), 1.0, 1.0}};
}

LightField corner_lightfield(const LightField &lf) {
  auto corners = corner_views(lf);
  std::vector<ViewImage> views;
  views.reserve(4);
  for (auto &corner : corners) {
    views.push_back(std::move(corner.image));
  }
  return LightField(AngularGrid(2, 2), std::move(views));
}

} // namespace lfsyn
