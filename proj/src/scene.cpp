#include "lfsyn/scene.hpp"

#include "lfsyn/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace lfsyn {
namespace {

// splitmix64; portable and bit-reproducible, unlike std distributions.
class SeededStream {
public:
  explicit SeededStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

private:
  std::uint64_t state_;
};

struct Wave {
  double fx = 0.0;
  double fy = 0.0;
  double phase = 0.0;
  std::array<double, 3> amplitude{};
};

struct Blotch {
  double cx = 0.0;
  double cy = 0.0;
  std::array<double, 3> amplitude{};
};

class Texture {
public:
  Texture(const SceneSpec &spec, std::size_t layer_index) {
    const TextureSpec &tex = spec.layers[layer_index].texture;
    SeededStream rng(spec.seed * 0x2545F4914F6CDD1DULL + (layer_index + 1) * 0x9E3779B97F4A7C15ULL +
                     tex.seed);
    for (double &b : base_) {
      b = rng.uniform(0.3, 0.7);
    }
    if (tex.base) {
      base_ = *tex.base;
    }

    const double wave_budget = 0.18 / std::max(1, tex.waves);
    const double log_lo = std::log(tex.min_wavelength);
    const double log_hi = std::log(tex.max_wavelength);
    for (int i = 0; i < tex.waves; ++i) {
      Wave w;
      const double theta = rng.uniform(0.0, std::numbers::pi);
      const double wavelength = std::exp(rng.uniform(log_lo, log_hi));
      w.fx = 2.0 * std::numbers::pi * std::cos(theta) / wavelength;
      w.fy = 2.0 * std::numbers::pi * std::sin(theta) / wavelength;
      w.phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
      for (double &a : w.amplitude) {
        a = wave_budget * rng.uniform(0.5, 1.0);
      }
      waves_.push_back(w);
    }

    const double margin = spec.baseline + 3.0 * tex.blotch_sigma;
    for (int i = 0; i < tex.blotches; ++i) {
      Blotch b;
      b.cx = rng.uniform(-margin, spec.width + margin);
      b.cy = rng.uniform(-margin, spec.height + margin);
      for (double &a : b.amplitude) {
        a = rng.uniform(-0.15, 0.15);
      }
      blotches_.push_back(b);
    }
    inv_two_sigma2_ = 1.0 / (2.0 * tex.blotch_sigma * tex.blotch_sigma);
  }

  std::array<double, 3> operator()(double x, double y) const noexcept {
    std::array<double, 3> color = base_;
    for (const Wave &w : waves_) {
      const double s = std::sin(w.fx * x + w.fy * y + w.phase);
      for (int c = 0; c < 3; ++c) {
        color[c] += w.amplitude[c] * s;
      }
    }
    for (const Blotch &b : blotches_) {
      const double dx = x - b.cx;
      const double dy = y - b.cy;
      const double g = std::exp(-(dx * dx + dy * dy) * inv_two_sigma2_);
      for (int c = 0; c < 3; ++c) {
        color[c] += b.amplitude[c] * g;
      }
    }
    for (double &c : color) {
      c = std::clamp(c, 0.0, 1.0);
    }
    return color;
  }

private:
  std::array<double, 3> base_{};
  std::vector<Wave> waves_;
  std::vector<Blotch> blotches_;
  double inv_two_sigma2_ = 0.0;
};

// Layer-frame position of pixel (x, y) as seen from (u, v).
struct LayerPoint {
  double x;
  double y;
};

LayerPoint to_layer_frame(const SceneSpec &spec, std::size_t layer, AngularPoint at, double x,
                          double y) {
  const double s = spec.shift_factor(layer);
  return {x - s * (at.u - 0.5), y - s * (at.v - 0.5)};
}

} // namespace

bool MaskSpec::covers(double x, double y) const noexcept {
  switch (shape) {
  case MaskShape::Full:
    return true;
  case MaskShape::Rect:
    return x >= x0 && x < x1 && y >= y0 && y < y1;
  case MaskShape::Disc: {
    const double dx = x - cx;
    const double dy = y - cy;
    return dx * dx + dy * dy < radius * radius;
  }
  }
  return false;
}

void SceneSpec::validate() const {
  if (width < 1 || height < 1) {
    throw Error("scene: width and height must be positive");
  }
  if (channels != 1 && channels != 3) {
    throw Error("scene: channels must be 1 or 3");
  }
  if (!std::isfinite(baseline) || baseline < 0.0) {
    throw Error("scene: baseline must be finite and >= 0");
  }
  if (layers.empty()) {
    throw Error("scene: at least one layer is required");
  }
  if (layers.front().mask.shape != MaskShape::Full) {
    throw Error("scene: the backmost layer must be fully opaque");
  }
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const LayerSpec &layer = layers[i];
    if (!std::isfinite(layer.alpha) || layer.alpha <= 1.0) {
      throw Error("scene: layer " + std::to_string(i) + " needs a finite alpha > 1");
    }
    if (i > 0 && layer.alpha <= layers[i - 1].alpha) {
      throw Error("scene: layer " + std::to_string(i) +
                  " must shift more than the layer behind it (strictly larger alpha)");
    }
    const TextureSpec &tex = layer.texture;
    if (tex.min_wavelength <= 0.0 || tex.max_wavelength < tex.min_wavelength) {
      throw Error("scene: layer " + std::to_string(i) + " has an invalid wavelength band");
    }
    if (tex.waves < 0 || tex.blotches < 0 || tex.blotch_sigma <= 0.0) {
      throw Error("scene: layer " + std::to_string(i) + " has invalid texture counts");
    }
  }
}

double SceneSpec::shift_factor(std::size_t layer) const {
  return (1.0 - 1.0 / layers.at(layer).alpha) * baseline;
}

std::size_t visible_layer(const SceneSpec &spec, AngularPoint at, double x, double y) {
  for (std::size_t l = spec.layers.size(); l-- > 0;) {
    const LayerPoint p = to_layer_frame(spec, l, at, x, y);
    if (spec.layers[l].mask.covers(p.x, p.y)) {
      return l;
    }
  }
  return 0;
}

std::array<double, 3> texture_color(const SceneSpec &spec, std::size_t layer, double x, double y) {
  return Texture(spec, layer)(x, y);
}

ViewImage render_view(const SceneSpec &spec, double u, double v) {
  spec.validate();
  std::vector<Texture> textures;
  textures.reserve(spec.layers.size());
  for (std::size_t l = 0; l < spec.layers.size(); ++l) {
    textures.emplace_back(spec, l);
  }

  const AngularPoint at{u, v};
  ViewImage view(spec.width, spec.height, spec.channels);
  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x) {
      const std::size_t l = visible_layer(spec, at, x, y);
      const LayerPoint p = to_layer_frame(spec, l, at, x, y);
      const auto color = textures[l](p.x, p.y);
      if (spec.channels == 1) {
        view.at(x, y) = color[0];
      } else {
        for (int c = 0; c < 3; ++c) {
          view.at(x, y, c) = color[c];
        }
      }
    }
  }
  return view;
}

LightField render_lightfield(const SceneSpec &spec, const AngularGrid &grid) {
  spec.validate();
  std::vector<ViewImage> views(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const int row = static_cast<int>(i) / grid.cols();
    const int col = static_cast<int>(i) % grid.cols();
    views[i] = render_view(spec, grid.u(col), grid.v(row));
  });
  return LightField(grid, std::move(views));
}

DisparityMap oracle_adm(const SceneSpec &spec, AngularPoint target, AngularPoint source) {
  spec.validate();
  DisparityMap adm(spec.width, spec.height);
  const double du = source.u - target.u;
  const double dv = source.v - target.v;
  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x) {
      const double s = spec.shift_factor(visible_layer(spec, target, x, y));
      adm.dx(x, y) = s * du;
      adm.dy(x, y) = s * dv;
    }
  }
  return adm;
}

std::size_t OcclusionMask::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

OcclusionMask &OcclusionMask::operator|=(const OcclusionMask &other) {
  if (other.width_ != width_ || other.height_ != height_) {
    throw Error("occlusion mask union: dimension mismatch");
  }
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    bits_[i] = static_cast<std::uint8_t>(bits_[i] | other.bits_[i]);
  }
  return *this;
}

OcclusionMask occlusion_mask(const SceneSpec &spec, AngularPoint target, AngularPoint source) {
  spec.validate();
  OcclusionMask mask(spec.width, spec.height);
  const double du = source.u - target.u;
  const double dv = source.v - target.v;
  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x) {
      const std::size_t l = visible_layer(spec, target, x, y);
      const double s = spec.shift_factor(l);
      mask.set(x, y, visible_layer(spec, source, x + s * du, y + s * dv) != l);
    }
  }
  return mask;
}

ConfidencePair oracle_wcm(const SceneSpec &spec, AngularPoint target, AngularPoint source0,
                          AngularPoint source1) {
  const OcclusionMask hidden0 = occlusion_mask(spec, target, source0);
  const OcclusionMask hidden1 = occlusion_mask(spec, target, source1);
  ConfidencePair pair{ConfidenceMap(spec.width, spec.height, 0.5),
                      ConfidenceMap(spec.width, spec.height, 0.5)};
  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x) {
      const bool h0 = hidden0.at(x, y);
      const bool h1 = hidden1.at(x, y);
      if (h0 && !h1) {
        pair.from0.at(x, y) = 0.0;
        pair.from1.at(x, y) = 1.0;
      } else if (h1 && !h0) {
        pair.from0.at(x, y) = 1.0;
        pair.from1.at(x, y) = 0.0;
      }
    }
  }
  return pair;
}

SceneSpec single_layer_scene(int width, int height, double baseline, std::uint64_t seed) {
  SceneSpec spec;
  spec.width = width;
  spec.height = height;
  spec.baseline = baseline;
  spec.seed = seed;
  spec.layers.push_back(LayerSpec{2.0, TextureSpec{}, MaskSpec{}});
  return spec;
}

SceneSpec two_layer_scene(int width, int height, double baseline, std::uint64_t seed) {
  SceneSpec spec;
  spec.width = width;
  spec.height = height;
  spec.baseline = baseline;
  spec.seed = seed;

  LayerSpec background;
  background.alpha = 1.6;
  background.texture.base = std::array<double, 3>{0.30, 0.42, 0.62};

  LayerSpec occluder;
  occluder.alpha = 8.0;
  occluder.texture.seed = 17;
  occluder.texture.min_wavelength = 24.0;
  occluder.texture.base = std::array<double, 3>{0.72, 0.55, 0.30};
  occluder.mask.shape = MaskShape::Rect;
  occluder.mask.x0 = std::round(0.30 * width);
  occluder.mask.x1 = std::round(0.66 * width);
  occluder.mask.y0 = std::round(0.24 * height);
  occluder.mask.y1 = std::round(0.74 * height);

  spec.layers = {background, occluder};
  return spec;
}

} // namespace lfsyn
