#include "lfsyn/viz.hpp"

#include "lfsyn/io.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lfsyn {
namespace {

unsigned char to_byte(double v) {
  return static_cast<unsigned char>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

Rgb8Image blank(int width, int height) {
  Rgb8Image image;
  image.width = width;
  image.height = height;
  image.pixels.assign(static_cast<std::size_t>(width) * height * 3, 0);
  return image;
}

void put(Rgb8Image &image, int x, int y, double r, double g, double b) {
  const std::size_t i = (static_cast<std::size_t>(y) * image.width + x) * 3;
  image.pixels[i] = to_byte(r);
  image.pixels[i + 1] = to_byte(g);
  image.pixels[i + 2] = to_byte(b);
}

} // namespace

std::array<unsigned char, 3> Rgb8Image::at(int x, int y) const {
  const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
  return {pixels[i], pixels[i + 1], pixels[i + 2]};
}

Rgb8Image colorize_wcm(const ConfidenceMap &map) {
  Rgb8Image image = blank(map.width(), map.height());
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      const double t = std::clamp(2.0 * (map.at(x, y) - 0.5), -1.0, 1.0);
      if (t >= 0.0) {
        put(image, x, y, 1.0 - 0.5 * t, 1.0 - t, 1.0 - t);
      } else {
        put(image, x, y, 1.0 + t, 1.0 + t, 1.0 + 0.5 * t);
      }
    }
  }
  return image;
}

Rgb8Image gray_wcm(const ConfidenceMap &map) {
  Rgb8Image image = blank(map.width(), map.height());
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      const double v = map.at(x, y);
      put(image, x, y, v, v, v);
    }
  }
  return image;
}

Rgb8Image colorize_adm(const DisparityMap &adm, std::optional<double> max_magnitude) {
  double scale = max_magnitude.value_or(0.0);
  if (!max_magnitude) {
    for (int y = 0; y < adm.height(); ++y) {
      for (int x = 0; x < adm.width(); ++x) {
        scale = std::max(scale, std::hypot(adm.dx(x, y), adm.dy(x, y)));
      }
    }
  }
  Rgb8Image image = blank(adm.width(), adm.height());
  for (int y = 0; y < adm.height(); ++y) {
    for (int x = 0; x < adm.width(); ++x) {
      const double mag = std::hypot(adm.dx(x, y), adm.dy(x, y));
      const double sat = scale > 0.0 ? std::min(mag / scale, 1.0) : 0.0;
      double hue = std::atan2(adm.dy(x, y), adm.dx(x, y)) / (2.0 * std::numbers::pi);
      if (hue < 0.0) {
        hue += 1.0;
      }
      // HSV with V = 1: white at zero saturation.
      const double h6 = hue * 6.0;
      const int sector = static_cast<int>(std::floor(h6)) % 6;
      const double f = h6 - std::floor(h6);
      const double p = 1.0 - sat;
      const double q = 1.0 - sat * f;
      const double t = 1.0 - sat * (1.0 - f);
      double r = 1.0;
      double g = 1.0;
      double b = 1.0;
      switch (sector) {
      case 0: r = 1.0; g = t; b = p; break;
      case 1: r = q; g = 1.0; b = p; break;
      case 2: r = p; g = 1.0; b = t; break;
      case 3: r = p; g = q; b = 1.0; break;
      case 4: r = t; g = p; b = 1.0; break;
      default: r = 1.0; g = p; b = q; break;
      }
      put(image, x, y, r, g, b);
    }
  }
  return image;
}

ViewImage epi_image(const EpiImage &epi, int angular_scale) {
  if (angular_scale < 1) {
    throw Error("EPI angular scale must be at least 1");
  }
  const Raster &src = epi.data;
  ViewImage out(src.width(), src.height() * angular_scale, src.channels());
  for (int a = 0; a < src.height(); ++a) {
    for (int rep = 0; rep < angular_scale; ++rep) {
      for (int s = 0; s < src.width(); ++s) {
        for (int c = 0; c < src.channels(); ++c) {
          out.at(s, a * angular_scale + rep, c) = src.at(s, a, c);
        }
      }
    }
  }
  return out;
}

void save_rgb8(const Rgb8Image &image, const std::filesystem::path &path) {
  save_png_rgb8(image.width, image.height, 3, image.pixels, path);
}

} // namespace lfsyn
