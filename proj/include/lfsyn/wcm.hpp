#pragma once

#include "lfsyn/core.hpp"
#include "lfsyn/warp.hpp"

namespace lfsyn {

/// Warping confidence map O_{k<-i}: how reliably view i predicts each pixel
/// of target view k. Values in [0, 1].
class ConfidenceMap : public Raster {
public:
  ConfidenceMap() = default;
  ConfidenceMap(int width, int height, double fill = 0.0) : Raster(width, height, 1, fill) {}

  [[nodiscard]] bool in_unit_range() const noexcept;
};

struct ConfidencePair {
  ConfidenceMap from0; ///< O_{k<-0}
  ConfidenceMap from1; ///< O_{k<-1}
};

inline constexpr double kConfidenceEps = 1e-8;

/// Both maps constant 0.5.
ConfidencePair uniform_confidence(int width, int height);

/// Rescales a nonnegative pair so it sums to one per pixel:
/// o_i' = (o_i + eps/2) / (o0 + o1 + eps). Pixels where both inputs vanish
/// become an even 0.5/0.5 blend.
ConfidencePair normalize_pair(const ConfidenceMap &o0, const ConfidenceMap &o1,
                              double eps = kConfidenceEps);

struct PhotometricWcmParams {
  double sigma = 0.05;         ///< photometric agreement scale (normalized radiance)
  double sigma_disparity = 1.0; ///< forward-backward consistency scale (pixels)
  double eps = kConfidenceEps;
};

/// Heuristic confidence estimate for target k between boundary views l0, l1.
///
/// Both boundary views are warped to k. Where the warps agree photometrically
/// the pair stays near 0.5/0.5. Where they disagree, each side is scored by a
/// forward-backward check of its intermediate map against the boundary map
/// scaled to k (A_{0<-k} = k A_{0<-1} on view 0, A_{1<-k} = (1 - k) A_{1<-0} on
/// view 1), and weight moves toward the more consistent side.
ConfidencePair estimate_wcm_photometric(const ViewImage &l0, const ViewImage &l1,
                                        const DisparityMap &a_k0, const DisparityMap &a_k1,
                                        const DisparityMap &a_10, const DisparityMap &a_01,
                                        double k, const PhotometricWcmParams &params = {});

} // namespace lfsyn
