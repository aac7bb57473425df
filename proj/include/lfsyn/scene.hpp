#pragma once

#include "lfsyn/core.hpp"
#include "lfsyn/warp.hpp"
#include "lfsyn/wcm.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace lfsyn {

/// Procedural band-limited texture. Parameters are expanded from the seed;
/// the texture is a continuous function of the layer-frame position so any
/// sub-pixel shift samples it exactly.
struct TextureSpec {
  std::uint64_t seed = 0;
  double min_wavelength = 32.0; ///< shortest sinusoid period in pixels
  double max_wavelength = 96.0;
  int waves = 6;                ///< sinusoids per channel
  int blotches = 10;            ///< seeded Gaussian color blotches
  double blotch_sigma = 10.0;   ///< blotch radius in pixels
  std::optional<std::array<double, 3>> base; ///< mean color; seeded when absent
};

enum class MaskShape { Full, Rect, Disc };

/// Opacity support of a layer in its reference frame (the view at u = v = 0.5).
/// Rect covers [x0, x1) x [y0, y1); Disc covers |p - c| < r.
struct MaskSpec {
  MaskShape shape = MaskShape::Full;
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
  double cx = 0.0, cy = 0.0, radius = 0.0;

  [[nodiscard]] bool covers(double x, double y) const noexcept;
};

struct LayerSpec {
  double alpha = 2.0; ///< disparity ratio Z / F, > 1
  TextureSpec texture;
  MaskSpec mask;
};

/// Layered fronto-parallel Lambertian scene. Layers are ordered back to
/// front; a layer with ratio alpha moves (1 - 1/alpha) * baseline pixels
/// across the full angular range.
struct SceneSpec {
  int width = 128;
  int height = 128;
  int channels = 3;
  double baseline = 4.0;
  std::uint64_t seed = 1;
  std::vector<LayerSpec> layers;

  /// Throws Error when an invariant is broken.
  void validate() const;

  /// (1 - 1/alpha) * baseline for the given layer.
  [[nodiscard]] double shift_factor(std::size_t layer) const;
};

struct AngularPoint {
  double u = 0.0;
  double v = 0.0;
};

/// Index of the front-most layer seen at pixel position (x, y) of view (u, v).
std::size_t visible_layer(const SceneSpec &spec, AngularPoint at, double x, double y);

/// Radiance of one layer's texture at a layer-frame position.
std::array<double, 3> texture_color(const SceneSpec &spec, std::size_t layer, double x, double y);

ViewImage render_view(const SceneSpec &spec, double u, double v);

LightField render_lightfield(const SceneSpec &spec, const AngularGrid &grid);

/// Exact A_{target<-source}: on the pixels of `target`, the displacement of
/// the layer visible there, (1 - 1/alpha) * baseline * (source - target).
/// Backward-warping the source view by it reproduces the target view
/// wherever the target pixel is not occluded in the source.
DisparityMap oracle_adm(const SceneSpec &spec, AngularPoint target, AngularPoint source);

/// Per-pixel mask: true iff the surface seen at `target` is hidden at `source`.
class OcclusionMask {
public:
  OcclusionMask(int width, int height) : width_(width), height_(height), bits_(width * height) {}

  [[nodiscard]] int width() const noexcept { return width_; }
  [[nodiscard]] int height() const noexcept { return height_; }
  [[nodiscard]] bool at(int x, int y) const noexcept { return bits_[y * width_ + x] != 0; }
  void set(int x, int y, bool value) noexcept { bits_[y * width_ + x] = value ? 1 : 0; }
  [[nodiscard]] std::size_t count() const noexcept;

  OcclusionMask &operator|=(const OcclusionMask &other);

private:
  int width_;
  int height_;
  std::vector<std::uint8_t> bits_;
};

OcclusionMask occlusion_mask(const SceneSpec &spec, AngularPoint target, AngularPoint source);

/// Exact confidence pair for target view `target` blended from boundary views
/// `source0` and `source1`: (0, 1) where the target surface is hidden only in
/// source0, (1, 0) where hidden only in source1, (0.5, 0.5) otherwise.
ConfidencePair oracle_wcm(const SceneSpec &spec, AngularPoint target, AngularPoint source0,
                          AngularPoint source1);

/// Stock scenes used by the tools and tests.
SceneSpec single_layer_scene(int width, int height, double baseline, std::uint64_t seed);
SceneSpec two_layer_scene(int width, int height, double baseline, std::uint64_t seed);

} // namespace lfsyn
