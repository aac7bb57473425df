#pragma once

#include "lfsyn/core.hpp"
#include "lfsyn/metrics.hpp"
#include "lfsyn/warp.hpp"

#include <span>
#include <vector>

namespace lfsyn {

struct IntermediateAdm {
  DisparityMap a_k0; ///< A_{k<-0}
  DisparityMap a_k1; ///< A_{k<-1}
};

/// Intermediate maps for position k from the two boundary maps:
///   A_{k<-0} = (k+1)/2 A_{1<-0} + (1-k)/2 A_{0<-1}
///   A_{k<-1} = k/2 A_{1<-0} + (1 - k/2) A_{0<-1}
/// With exactly antisymmetric inputs these reduce to k A_{1<-0} and
/// (k-1) A_{1<-0}.
IntermediateAdm intermediate_adm_from_source(double k, const DisparityMap &a_10,
                                             const DisparityMap &a_01);

struct Pixel {
  int x = 0;
  int y = 0;
  bool operator==(const Pixel &) const = default;
};

struct PointLinearity {
  Pixel point;
  std::vector<double> shifts; ///< |A(point)| per interval
  LinearFit fit;
};

struct LinearityReport {
  std::vector<PointLinearity> points;
  double mean_r2 = 0.0;
  double mean_adjusted_r2 = 0.0;
  double mean_pcc = 0.0;
};

/// Fits shift magnitude |A(p)| against aperture interval for every tracked
/// point. adm_sequence[i] is the map estimated at intervals[i].
LinearityReport check_linearity(std::span<const DisparityMap> adm_sequence,
                                std::span<const double> intervals, std::span<const Pixel> points);

enum class SearchAxis { Horizontal, Vertical };

struct BoundaryAdm {
  DisparityMap a_10; ///< A_{1<-0}, on the pixels of view 1 (right / bottom)
  DisparityMap a_01; ///< A_{0<-1}, on the pixels of view 0 (left / top)
};

inline constexpr int kSadWindow = 7;

/// Windowed SAD search along the epipolar axis with parabolic sub-pixel
/// refinement. Candidates span [-max_disp, max_disp]; ties keep the smaller
/// magnitude. A zero-cost match is taken as exact and not refined.
BoundaryAdm estimate_boundary_adm(const ViewImage &view0, const ViewImage &view1, int max_disp,
                                  SearchAxis axis = SearchAxis::Horizontal);

/// One direction of the search: the map on `reference` pixels pointing into `other`.
DisparityMap estimate_adm_one_way(const ViewImage &reference, const ViewImage &other,
                                  int max_disp, SearchAxis axis = SearchAxis::Horizontal);

/// Top-M Shi-Tomasi corner responses with non-maximum suppression, keeping
/// `margin` pixels away from the borders.
std::vector<Pixel> select_feature_points(const ViewImage &image, int count, int suppression_radius,
                                         int margin);

} // namespace lfsyn
