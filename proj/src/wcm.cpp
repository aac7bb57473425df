#include "lfsyn/wcm.hpp"

#include <algorithm>
#include <cmath>

namespace lfsyn {

bool ConfidenceMap::in_unit_range() const noexcept {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; });
}

ConfidencePair uniform_confidence(int width, int height) {
  return {ConfidenceMap(width, height, 0.5), ConfidenceMap(width, height, 0.5)};
}

ConfidencePair normalize_pair(const ConfidenceMap &o0, const ConfidenceMap &o1, double eps) {
  require_same_shape(o0, o1, "normalize_pair");
  if (!(eps > 0.0)) {
    throw Error("normalize_pair: eps must be positive");
  }
  ConfidencePair out{ConfidenceMap(o0.width(), o0.height()),
                     ConfidenceMap(o0.width(), o0.height())};
  const double half_eps = 0.5 * eps;
  for (std::size_t i = 0; i < o0.data().size(); ++i) {
    const double a = o0.data()[i];
    const double b = o1.data()[i];
    if (!(a >= 0.0) || !(b >= 0.0)) {
      throw Error("normalize_pair: confidences must be nonnegative");
    }
    const double denom = a + b + eps;
    out.from0.data()[i] = (a + half_eps) / denom;
    out.from1.data()[i] = (b + half_eps) / denom;
  }
  return out;
}

namespace {

double channel_mean_abs(const ViewImage &a, const ViewImage &b, int x, int y) {
  double sum = 0.0;
  for (int c = 0; c < a.channels(); ++c) {
    sum += std::abs(a.at(x, y, c) - b.at(x, y, c));
  }
  return sum / a.channels();
}

// |A_{k<-i}(x) + A_{i<-k}(x + A_{k<-i}(x))|^2
double round_trip_error2(const DisparityMap &a_ki, const DisparityMap &back_at_source, int x,
                         int y) {
  const double ex = a_ki.dx(x, y) + back_at_source.dx(x, y);
  const double ey = a_ki.dy(x, y) + back_at_source.dy(x, y);
  return ex * ex + ey * ey;
}

} // namespace

ConfidencePair estimate_wcm_photometric(const ViewImage &l0, const ViewImage &l1,
                                        const DisparityMap &a_k0, const DisparityMap &a_k1,
                                        const DisparityMap &a_10, const DisparityMap &a_01,
                                        double k, const PhotometricWcmParams &params) {
  require_same_shape(l0, l1, "estimate_wcm_photometric");
  require_same_shape(l0, a_k0, "estimate_wcm_photometric");
  require_same_shape(l0, a_k1, "estimate_wcm_photometric");
  require_same_shape(l0, a_10, "estimate_wcm_photometric");
  require_same_shape(l0, a_01, "estimate_wcm_photometric");
  if (l0.channels() != l1.channels()) {
    throw Error("estimate_wcm_photometric: channel mismatch");
  }
  if (!(params.sigma > 0.0) || !(params.sigma_disparity > 0.0)) {
    throw Error("estimate_wcm_photometric: sigma values must be positive");
  }
  if (!(k >= 0.0 && k <= 1.0)) {
    throw Error("estimate_wcm_photometric: k must lie in [0, 1]");
  }

  const ViewImage w0 = warp(l0, a_k0);
  const ViewImage w1 = warp(l1, a_k1);
  // A_{0<-k} lives on view 0 pixels, A_{1<-k} on view 1 pixels; sample each
  // where the intermediate map lands.
  const DisparityMap back0 = warp(a_01.scaled(k), a_k0);
  const DisparityMap back1 = warp(a_10.scaled(1.0 - k), a_k1);

  const int width = l0.width();
  const int height = l0.height();
  ConfidenceMap raw0(width, height);
  ConfidenceMap raw1(width, height);
  const double inv_sigma2 = 1.0 / (params.sigma * params.sigma);
  const double inv_sigma_d2 = 1.0 / (params.sigma_disparity * params.sigma_disparity);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double e = channel_mean_abs(w0, w1, x, y);
      const double disagreement = -std::expm1(-e * e * inv_sigma2);
      const double log0 = -disagreement * round_trip_error2(a_k0, back0, x, y) * inv_sigma_d2;
      const double log1 = -disagreement * round_trip_error2(a_k1, back1, x, y) * inv_sigma_d2;
      // Scale so the larger side is 1; the ratio is what matters and this
      // keeps the pair well away from the eps floor.
      const double top = std::max(log0, log1);
      raw0.at(x, y) = std::exp(log0 - top);
      raw1.at(x, y) = std::exp(log1 - top);
    }
  }
  return normalize_pair(raw0, raw1, params.eps);
}

} // namespace lfsyn
