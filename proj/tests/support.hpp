#pragma once

#include "lfsyn/core.hpp"
#include "lfsyn/scene.hpp"
#include "lfsyn/warp.hpp"

#include <random>
#include <vector>

namespace lfsyn::test {

inline ViewImage random_view(std::mt19937_64 &rng, int width, int height, int channels) {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  ViewImage view(width, height, channels);
  for (double &v : view.data()) {
    v = dist(rng);
  }
  return view;
}

inline DisparityMap random_adm(std::mt19937_64 &rng, int width, int height, double range) {
  std::uniform_real_distribution<double> dist(-range, range);
  DisparityMap adm(width, height);
  for (double &v : adm.data()) {
    v = dist(rng);
  }
  return adm;
}

inline DisparityMap negated(const DisparityMap &adm) { return adm.scaled(-1.0); }

inline SceneSpec three_layer_scene(int width, int height, double baseline, std::uint64_t seed) {
  SceneSpec spec;
  spec.width = width;
  spec.height = height;
  spec.baseline = baseline;
  spec.seed = seed;

  LayerSpec back;
  back.alpha = 1.5;

  LayerSpec disc;
  disc.alpha = 3.0;
  disc.texture.seed = 5;
  disc.mask.shape = MaskShape::Disc;
  disc.mask.cx = 0.32 * width;
  disc.mask.cy = 0.62 * height;
  disc.mask.radius = 0.18 * width;

  LayerSpec front;
  front.alpha = 10.0;
  front.texture.seed = 9;
  front.mask.shape = MaskShape::Rect;
  front.mask.x0 = 0.55 * width;
  front.mask.x1 = 0.85 * width;
  front.mask.y0 = 0.15 * height;
  front.mask.y1 = 0.45 * height;

  spec.layers = {back, disc, front};
  return spec;
}

/// Scenes shared by the property checks.
inline std::vector<SceneSpec> scene_set(int size = 64) {
  return {single_layer_scene(size, size, 8.0, 1), two_layer_scene(size, size, 12.0, 2),
          three_layer_scene(size, size, 10.0, 3)};
}

} // namespace lfsyn::test
