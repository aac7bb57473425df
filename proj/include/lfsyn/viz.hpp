#pragma once

#include "lfsyn/core.hpp"
#include "lfsyn/warp.hpp"
#include "lfsyn/wcm.hpp"

#include <array>
#include <filesystem>
#include <optional>
#include <vector>

namespace lfsyn {

/// 8-bit RGB image used for exports only.
struct Rgb8Image {
  int width = 0;
  int height = 0;
  std::vector<unsigned char> pixels; ///< interleaved RGB

  [[nodiscard]] std::array<unsigned char, 3> at(int x, int y) const;
};

/// Diverging red/blue coding: 0.5 is white, values toward 1 shade to dark red
/// (the source contributes more), values toward 0 shade to dark blue.
Rgb8Image colorize_wcm(const ConfidenceMap &map);

/// Grayscale 0..255.
Rgb8Image gray_wcm(const ConfidenceMap &map);

/// Direction as hue, magnitude as saturation: zero vectors are white and
/// longer vectors are stronger colors. Magnitudes are scaled by
/// `max_magnitude`, or by the largest magnitude in the map when absent.
Rgb8Image colorize_adm(const DisparityMap &adm, std::optional<double> max_magnitude = {});

/// EPI as an image with the angular axis vertical, each angular row repeated
/// `angular_scale` times.
ViewImage epi_image(const EpiImage &epi, int angular_scale = 1);

void save_rgb8(const Rgb8Image &image, const std::filesystem::path &path);

} // namespace lfsyn
