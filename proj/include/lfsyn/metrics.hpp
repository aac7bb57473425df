#pragma once

#include "lfsyn/core.hpp"
#include "lfsyn/warp.hpp"

#include <optional>
#include <span>
#include <vector>

namespace lfsyn {

/// PSNR in dB with peak 1.0, MSE averaged over all pixels and channels.
/// Identical images return +infinity; reports clamp it to kPsnrReportCap.
double psnr(const ViewImage &a, const ViewImage &b);

inline constexpr double kPsnrReportCap = 100.0;

/// Mean SSIM over all fully contained 11x11 Gaussian windows (sigma 1.5),
/// C1 = 0.01^2, C2 = 0.03^2. Color images are compared on Rec.601 luma.
double ssim(const ViewImage &a, const ViewImage &b);

/// Rec.601 luma of a 3-channel view; 1-channel views are copied.
Raster luma(const ViewImage &image);

// Loss evaluators. All norms are mean absolute values over pixels and channels.

/// (1/N) sum_i |gt_i - pred_i|.
double loss_reconstruction(std::span<const ViewImage> pred, std::span<const ViewImage> gt);

struct IntermediateSample {
  ViewImage view;    ///< ground-truth view at k
  DisparityMap a_k0; ///< A_{k<-0}
  DisparityMap a_k1; ///< A_{k<-1}
};

/// |L0 - P(L1, A01)| + |L1 - P(L0, A10)| + mean_i |Lk - P(L1, Ak1)| + mean_i |Lk - P(L0, Ak0)|.
double loss_warping(const ViewImage &l0, const ViewImage &l1, const DisparityMap &a_01,
                    const DisparityMap &a_10, std::span<const IntermediateSample> intermediates);

/// Sum over both maps of mean |grad_x A| + mean |grad_y A| with forward
/// differences; the per-pixel gradient norm adds |d(dx)| + |d(dy)|.
double loss_smoothness(const DisparityMap &a_01, const DisparityMap &a_10);

struct LossWeights {
  double reconstruction = 200.0; ///< lambda_1
  double perceptual = 1000.0;    ///< lambda_2
  double warping = 100.0;        ///< lambda_3
  double smoothness = 1.0;       ///< lambda_4
};

struct LossReport {
  double l_r = 0.0;
  std::optional<double> l_c; ///< perceptual term; not computed by this library
  double l_w = 0.0;
  double l_s = 0.0;
  double total = 0.0;
  bool perceptual_missing = true;
};

/// Weighted total. An absent perceptual term contributes zero and is flagged.
LossReport combined_loss_report(double l_r, std::optional<double> l_c, double l_w, double l_s,
                                const LossWeights &weights = {});

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  double adjusted_r2 = 0.0;
  double pcc = 0.0;
};

/// Least-squares line y = intercept + slope * x with R^2, adjusted R^2 and
/// Pearson correlation. Needs >= 3 samples and non-constant x. When y is
/// constant the fit is exact and R^2 = PCC = 1.
LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys);

} // namespace lfsyn
