#pragma once

#include "lfsyn/adm.hpp"
#include "lfsyn/core.hpp"
#include "lfsyn/scene.hpp"
#include "lfsyn/warp.hpp"
#include "lfsyn/wcm.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace lfsyn {

/// (1-k) P(L0, A_{k<-0}) + k P(L1, A_{k<-1}).
ViewImage infer_free_space(const ViewImage &l0, const ViewImage &l1, const DisparityMap &a_k0,
                           const DisparityMap &a_k1, double k);

struct InferenceDiagnostics {
  std::size_t fallback_pixels = 0; ///< pixels where the normalizer vanished
};

inline constexpr double kNormalizerEps = 1e-8;

/// Confidence-weighted blend of the two warped boundary views:
///   [(1-k) O0 * P(L0, A_{k<-0}) + k O1 * P(L1, A_{k<-1})] / [(1-k) O0 + k O1]
/// per pixel. Where the normalizer falls below eps the pixel is an even blend
/// of both warps and is counted in the diagnostics.
ViewImage infer_occlusion_aware(const ViewImage &l0, const ViewImage &l1,
                                const DisparityMap &a_k0, const DisparityMap &a_k1,
                                const ConfidenceMap &o_k0, const ConfidenceMap &o_k1, double k,
                                InferenceDiagnostics *diagnostics = nullptr);

enum class Estimator { Oracle, Classical };

struct ReconstructionOptions {
  Estimator estimator = Estimator::Classical;
  std::optional<SceneSpec> scene; ///< required by the oracle estimator
  bool use_wcm = true;            ///< false forces uniform 0.5 confidences
  int max_disp = 0;               ///< classical search range; 0 picks one from the image size
  PhotometricWcmParams wcm;
};

struct ReconstructionStats {
  std::size_t synthesized_views = 0;
  std::size_t fallback_pixels = 0;
};

/// Dense light field on `target_grid` from a 2x2 corner light field. Target
/// columns are synthesized along u on the top and bottom rows first, then
/// every column is filled along v from its two synthesized end views.
/// Corner views are copied through unchanged.
LightField reconstruct_dense(const LightField &corners, const AngularGrid &target_grid,
                             const ReconstructionOptions &options,
                             ReconstructionStats *stats = nullptr);

/// Fixed 3x3 kernel, row-major, applied as a correlation.
using Kernel3x3 = std::array<double, 9>;

/// Builds a kernel from nine values; throws on any other length.
Kernel3x3 make_kernel(const std::vector<double> &values);

inline constexpr Kernel3x3 kDeltaKernel{0, 0, 0, 0, 1, 0, 0, 0, 0};

/// Alternating 4D filter: a 3x3 spatial pass inside every view, then a 3x3
/// angular pass across neighbouring views at every pixel, then a scalar
/// scale. Replicate padding in both domains. Equal to a full 4D correlation
/// with the outer-product kernel spatial(sy,sx) * angular(ay,ax).
LightField separable_conv4d(const LightField &lf, const Kernel3x3 &spatial,
                            const Kernel3x3 &angular, double scale = 1.0);

} // namespace lfsyn
