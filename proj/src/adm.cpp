#include "lfsyn/adm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

namespace lfsyn {

IntermediateAdm intermediate_adm_from_source(double k, const DisparityMap &a_10,
                                             const DisparityMap &a_01) {
  require_same_shape(a_10, a_01, "intermediate_adm_from_source");
  if (!(k >= 0.0 && k <= 1.0)) {
    throw Error("intermediate_adm_from_source: k must lie in [0, 1]");
  }
  return {a_10.blend((k + 1.0) / 2.0, a_01, (1.0 - k) / 2.0),
          a_10.blend(k / 2.0, a_01, 1.0 - k / 2.0)};
}

LinearityReport check_linearity(std::span<const DisparityMap> adm_sequence,
                                std::span<const double> intervals, std::span<const Pixel> points) {
  if (adm_sequence.size() != intervals.size()) {
    throw Error("check_linearity: one map per interval is required");
  }
  if (intervals.size() < 3) {
    throw Error("check_linearity: at least 3 intervals are needed, got " +
                std::to_string(intervals.size()));
  }
  if (points.empty()) {
    throw Error("check_linearity: no points to track");
  }
  for (std::size_t i = 1; i < adm_sequence.size(); ++i) {
    require_same_shape(adm_sequence[0], adm_sequence[i], "check_linearity");
  }
  const DisparityMap &first = adm_sequence[0];

  LinearityReport report;
  for (const Pixel &p : points) {
    if (p.x < 0 || p.x >= first.width() || p.y < 0 || p.y >= first.height()) {
      throw Error("check_linearity: point (" + std::to_string(p.x) + ", " +
                  std::to_string(p.y) + ") is outside the map");
    }
    PointLinearity entry;
    entry.point = p;
    for (const DisparityMap &map : adm_sequence) {
      entry.shifts.push_back(std::hypot(map.dx(p.x, p.y), map.dy(p.x, p.y)));
    }
    entry.fit = linear_fit(intervals, entry.shifts);
    report.mean_r2 += entry.fit.r2;
    report.mean_adjusted_r2 += entry.fit.adjusted_r2;
    report.mean_pcc += entry.fit.pcc;
    report.points.push_back(std::move(entry));
  }
  const auto n = static_cast<double>(report.points.size());
  report.mean_r2 /= n;
  report.mean_adjusted_r2 /= n;
  report.mean_pcc /= n;
  return report;
}

namespace {

Raster transpose(const Raster &in) {
  Raster out(in.height(), in.width(), in.channels());
  for (int y = 0; y < in.height(); ++y) {
    for (int x = 0; x < in.width(); ++x) {
      for (int c = 0; c < in.channels(); ++c) {
        out.at(y, x, c) = in.at(x, y, c);
      }
    }
  }
  return out;
}

// Box sum over a square window with edge replication.
Raster box_sum(const Raster &in, int radius) {
  const int w = in.width();
  const int h = in.height();
  Raster rows(w, h, 1);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int d = -radius; d <= radius; ++d) {
        acc += in.at(std::clamp(x + d, 0, w - 1), y);
      }
      rows.at(x, y) = acc;
    }
  }
  Raster out(w, h, 1);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int d = -radius; d <= radius; ++d) {
        acc += rows.at(x, std::clamp(y + d, 0, h - 1));
      }
      out.at(x, y) = acc;
    }
  }
  return out;
}

// Horizontal search on row-major rasters; returns per-pixel displacement.
Raster search_rows(const Raster &reference, const Raster &other, int max_disp) {
  const int w = reference.width();
  const int h = reference.height();
  const int channels = reference.channels();
  const int candidates = 2 * max_disp + 1;

  std::vector<Raster> costs;
  costs.reserve(static_cast<std::size_t>(candidates));
  Raster diff(w, h, 1);
  for (int d = -max_disp; d <= max_disp; ++d) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const int xs = std::clamp(x + d, 0, w - 1);
        double acc = 0.0;
        for (int c = 0; c < channels; ++c) {
          acc += std::abs(reference.at(x, y, c) - other.at(xs, y, c));
        }
        diff.at(x, y) = acc;
      }
    }
    costs.push_back(box_sum(diff, kSadWindow / 2));
  }

  Raster out(w, h, 1);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      int best = max_disp; // index of d = 0
      double best_cost = costs[static_cast<std::size_t>(best)].at(x, y);
      for (int m = 1; m <= max_disp; ++m) {
        for (int d : {-m, m}) {
          const int idx = d + max_disp;
          const double c = costs[static_cast<std::size_t>(idx)].at(x, y);
          if (c < best_cost) {
            best_cost = c;
            best = idx;
          }
        }
      }
      double disparity = best - max_disp;
      if (best_cost > 0.0 && best > 0 && best < candidates - 1) {
        const double cm = costs[static_cast<std::size_t>(best - 1)].at(x, y);
        const double cp = costs[static_cast<std::size_t>(best + 1)].at(x, y);
        const double curvature = cm - 2.0 * best_cost + cp;
        if (curvature > 0.0) {
          disparity += std::clamp((cm - cp) / (2.0 * curvature), -0.5, 0.5);
        }
      }
      out.at(x, y) = disparity;
    }
  }
  return out;
}

} // namespace

DisparityMap estimate_adm_one_way(const ViewImage &reference, const ViewImage &other,
                                  int max_disp, SearchAxis axis) {
  require_same_shape(reference, other, "estimate_boundary_adm");
  if (reference.channels() != other.channels()) {
    throw Error("estimate_boundary_adm: channel mismatch");
  }
  if (max_disp < 1) {
    throw Error("estimate_boundary_adm: max_disp must be at least 1");
  }
  const int extent = axis == SearchAxis::Horizontal ? reference.width() : reference.height();
  if (max_disp >= extent) {
    throw Error("estimate_boundary_adm: max_disp " + std::to_string(max_disp) +
                " must be smaller than the image extent " + std::to_string(extent) +
                " along the search axis");
  }

  DisparityMap adm(reference.width(), reference.height());
  if (axis == SearchAxis::Horizontal) {
    const Raster d = search_rows(reference, other, max_disp);
    for (int y = 0; y < adm.height(); ++y) {
      for (int x = 0; x < adm.width(); ++x) {
        adm.dx(x, y) = d.at(x, y);
      }
    }
  } else {
    const Raster d = search_rows(transpose(reference), transpose(other), max_disp);
    for (int y = 0; y < adm.height(); ++y) {
      for (int x = 0; x < adm.width(); ++x) {
        adm.dy(x, y) = d.at(y, x);
      }
    }
  }
  return adm;
}

BoundaryAdm estimate_boundary_adm(const ViewImage &view0, const ViewImage &view1, int max_disp,
                                  SearchAxis axis) {
  return {estimate_adm_one_way(view1, view0, max_disp, axis),
          estimate_adm_one_way(view0, view1, max_disp, axis)};
}

std::vector<Pixel> select_feature_points(const ViewImage &image, int count, int suppression_radius,
                                         int margin) {
  if (count < 1) {
    throw Error("select_feature_points: count must be positive");
  }
  const Raster gray = luma(image);
  const int w = gray.width();
  const int h = gray.height();
  Raster gxx(w, h, 1);
  Raster gyy(w, h, 1);
  Raster gxy(w, h, 1);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double gx =
          0.5 * (gray.at(std::min(x + 1, w - 1), y) - gray.at(std::max(x - 1, 0), y));
      const double gy =
          0.5 * (gray.at(x, std::min(y + 1, h - 1)) - gray.at(x, std::max(y - 1, 0)));
      gxx.at(x, y) = gx * gx;
      gyy.at(x, y) = gy * gy;
      gxy.at(x, y) = gx * gy;
    }
  }
  const Raster sxx = box_sum(gxx, 2);
  const Raster syy = box_sum(gyy, 2);
  const Raster sxy = box_sum(gxy, 2);

  struct Candidate {
    double response;
    Pixel p;
  };
  std::vector<Candidate> candidates;
  for (int y = margin; y < h - margin; ++y) {
    for (int x = margin; x < w - margin; ++x) {
      const double a = sxx.at(x, y);
      const double c = syy.at(x, y);
      const double b = sxy.at(x, y);
      const double half_diff = 0.5 * (a - c);
      const double min_eig = 0.5 * (a + c) - std::sqrt(half_diff * half_diff + b * b);
      candidates.push_back({min_eig, {x, y}});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate &l, const Candidate &r) { return l.response > r.response; });

  std::vector<Pixel> picked;
  const long r2 = static_cast<long>(suppression_radius) * suppression_radius;
  for (const Candidate &cand : candidates) {
    if (static_cast<int>(picked.size()) == count) {
      break;
    }
    const bool isolated = std::none_of(picked.begin(), picked.end(), [&](const Pixel &q) {
      const long dx = q.x - cand.p.x;
      const long dy = q.y - cand.p.y;
      return dx * dx + dy * dy < r2;
    });
    if (isolated) {
      picked.push_back(cand.p);
    }
  }
  return picked;
}

} // namespace lfsyn
