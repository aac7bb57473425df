#include "lfsyn/synth.hpp"

#include "lfsyn/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <string>

namespace lfsyn {
namespace {

void check_inputs(const ViewImage &l0, const ViewImage &l1, const DisparityMap &a_k0,
                  const DisparityMap &a_k1, double k, const char *what) {
  require_same_shape(l0, l1, what);
  require_same_shape(l0, a_k0, what);
  require_same_shape(l0, a_k1, what);
  if (l0.channels() != l1.channels()) {
    throw Error(std::string(what) + ": channel mismatch");
  }
  if (!(k >= 0.0 && k <= 1.0)) {
    throw Error(std::string(what) + ": k must lie in [0, 1]");
  }
}

} // namespace

ViewImage infer_free_space(const ViewImage &l0, const ViewImage &l1, const DisparityMap &a_k0,
                           const DisparityMap &a_k1, double k) {
  check_inputs(l0, l1, a_k0, a_k1, k, "infer_free_space");
  const ViewImage w0 = warp(l0, a_k0);
  const ViewImage w1 = warp(l1, a_k1);
  ViewImage out(l0.width(), l0.height(), l0.channels());
  for (std::size_t i = 0; i < out.data().size(); ++i) {
    out.data()[i] = (1.0 - k) * w0.data()[i] + k * w1.data()[i];
  }
  return out;
}

ViewImage infer_occlusion_aware(const ViewImage &l0, const ViewImage &l1,
                                const DisparityMap &a_k0, const DisparityMap &a_k1,
                                const ConfidenceMap &o_k0, const ConfidenceMap &o_k1, double k,
                                InferenceDiagnostics *diagnostics) {
  check_inputs(l0, l1, a_k0, a_k1, k, "infer_occlusion_aware");
  require_same_shape(l0, o_k0, "infer_occlusion_aware");
  require_same_shape(l0, o_k1, "infer_occlusion_aware");
  if (!o_k0.in_unit_range() || !o_k1.in_unit_range()) {
    throw Error("infer_occlusion_aware: confidences must lie in [0, 1]");
  }

  const ViewImage w0 = warp(l0, a_k0);
  const ViewImage w1 = warp(l1, a_k1);
  const int channels = l0.channels();
  ViewImage out(l0.width(), l0.height(), channels);
  std::size_t fallbacks = 0;
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      const double weight0 = (1.0 - k) * o_k0.at(x, y);
      const double weight1 = k * o_k1.at(x, y);
      const double normalizer = weight0 + weight1;
      if (normalizer < kNormalizerEps) {
        ++fallbacks;
        for (int c = 0; c < channels; ++c) {
          out.at(x, y, c) = 0.5 * (w0.at(x, y, c) + w1.at(x, y, c));
        }
        continue;
      }
      for (int c = 0; c < channels; ++c) {
        out.at(x, y, c) = (weight0 * w0.at(x, y, c) + weight1 * w1.at(x, y, c)) / normalizer;
      }
    }
  }
  if (diagnostics) {
    diagnostics->fallback_pixels += fallbacks;
  }
  return out;
}

namespace {

struct PairTarget {
  double k;
  AngularPoint at;
};

// Synthesizes every target between view0 (at p0) and view1 (at p1).
std::vector<ViewImage> synthesize_between(const ViewImage &view0, const ViewImage &view1,
                                          AngularPoint p0, AngularPoint p1, SearchAxis axis,
                                          const std::vector<PairTarget> &targets,
                                          const ReconstructionOptions &options,
                                          ReconstructionStats &stats) {
  std::vector<ViewImage> out(targets.size());
  if (targets.empty()) {
    return out;
  }

  std::optional<BoundaryAdm> boundary;
  if (options.estimator == Estimator::Classical) {
    int max_disp = options.max_disp;
    if (max_disp <= 0) {
      const int extent = axis == SearchAxis::Horizontal ? view0.width() : view0.height();
      max_disp = std::clamp(extent / 8, 1, std::max(1, extent - 1));
    }
    boundary = estimate_boundary_adm(view0, view1, max_disp, axis);
  }

  std::atomic<std::size_t> fallbacks{0};
  parallel_for(targets.size(), [&](std::size_t i) {
    const PairTarget &t = targets[i];
    DisparityMap a_k0;
    DisparityMap a_k1;
    ConfidencePair confidence;
    if (options.estimator == Estimator::Oracle) {
      a_k0 = oracle_adm(*options.scene, t.at, p0);
      a_k1 = oracle_adm(*options.scene, t.at, p1);
      confidence = options.use_wcm ? oracle_wcm(*options.scene, t.at, p0, p1)
                                   : uniform_confidence(view0.width(), view0.height());
    } else {
      IntermediateAdm inter = intermediate_adm_from_source(t.k, boundary->a_10, boundary->a_01);
      a_k0 = std::move(inter.a_k0);
      a_k1 = std::move(inter.a_k1);
      confidence = options.use_wcm
                       ? estimate_wcm_photometric(view0, view1, a_k0, a_k1, boundary->a_10,
                                                  boundary->a_01, t.k, options.wcm)
                       : uniform_confidence(view0.width(), view0.height());
    }
    InferenceDiagnostics diag;
    out[i] = infer_occlusion_aware(view0, view1, a_k0, a_k1, confidence.from0, confidence.from1,
                                   t.k, &diag);
    fallbacks += diag.fallback_pixels;
  });
  stats.fallback_pixels += fallbacks;
  stats.synthesized_views += targets.size();
  return out;
}

} // namespace

LightField reconstruct_dense(const LightField &corners, const AngularGrid &target_grid,
                             const ReconstructionOptions &options, ReconstructionStats *stats) {
  if (corners.grid().rows() != 2 || corners.grid().cols() != 2) {
    throw Error("reconstruct_dense: input must be a 2x2 corner light field");
  }
  if (target_grid.rows() < 2 || target_grid.cols() < 2) {
    throw Error("reconstruct_dense: target grid must be at least 2x2");
  }
  if (options.estimator == Estimator::Oracle) {
    if (!options.scene) {
      throw Error("reconstruct_dense: the oracle estimator needs the scene description");
    }
    options.scene->validate();
    if (options.scene->width != corners.width() || options.scene->height != corners.height()) {
      throw Error("reconstruct_dense: scene size does not match the corner views");
    }
  }

  const int rows = target_grid.rows();
  const int cols = target_grid.cols();
  ReconstructionStats local;

  // u pass: interior columns of the top and bottom rows.
  std::vector<PairTarget> u_targets;
  for (int j = 1; j + 1 < cols; ++j) {
    u_targets.push_back({target_grid.u(j), {}});
  }
  std::array<std::vector<ViewImage>, 2> edge_rows;
  for (int r = 0; r < 2; ++r) {
    const double v = static_cast<double>(r);
    std::vector<PairTarget> targets = u_targets;
    for (PairTarget &t : targets) {
      t.at = {t.k, v};
    }
    std::vector<ViewImage> interior =
        synthesize_between(corners.view(r, 0), corners.view(r, 1), {0.0, v}, {1.0, v},
                           SearchAxis::Horizontal, targets, options, local);
    std::vector<ViewImage> row;
    row.reserve(static_cast<std::size_t>(cols));
    row.push_back(corners.view(r, 0));
    for (ViewImage &view : interior) {
      row.push_back(std::move(view));
    }
    row.push_back(corners.view(r, 1));
    edge_rows[static_cast<std::size_t>(r)] = std::move(row);
  }

  // v pass: interior rows of every column.
  std::vector<ViewImage> views(target_grid.size());
  for (int j = 0; j < cols; ++j) {
    const double u = target_grid.u(j);
    std::vector<PairTarget> targets;
    for (int i = 1; i + 1 < rows; ++i) {
      targets.push_back({target_grid.v(i), {u, target_grid.v(i)}});
    }
    const ViewImage &top = edge_rows[0][static_cast<std::size_t>(j)];
    const ViewImage &bottom = edge_rows[1][static_cast<std::size_t>(j)];
    std::vector<ViewImage> interior = synthesize_between(top, bottom, {u, 0.0}, {u, 1.0},
                                                         SearchAxis::Vertical, targets, options,
                                                         local);
    views[static_cast<std::size_t>(j)] = top;
    for (int i = 1; i + 1 < rows; ++i) {
      views[static_cast<std::size_t>(i) * cols + j] =
          std::move(interior[static_cast<std::size_t>(i - 1)]);
    }
    views[static_cast<std::size_t>(rows - 1) * cols + j] = bottom;
  }

  if (stats) {
    *stats = local;
  }
  return LightField(target_grid, std::move(views));
}

Kernel3x3 make_kernel(const std::vector<double> &values) {
  if (values.size() != 9) {
    throw Error("kernel must have exactly 9 (3x3) values, got " + std::to_string(values.size()));
  }
  Kernel3x3 kernel{};
  std::copy(values.begin(), values.end(), kernel.begin());
  return kernel;
}

LightField separable_conv4d(const LightField &lf, const Kernel3x3 &spatial,
                            const Kernel3x3 &angular, double scale) {
  const AngularGrid &grid = lf.grid();
  const int w = lf.width();
  const int h = lf.height();
  const int channels = lf.channels();

  std::vector<ViewImage> filtered(grid.size());
  parallel_for(grid.size(), [&](std::size_t idx) {
    const ViewImage &in = lf.views()[idx];
    ViewImage out(w, h, channels);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        for (int c = 0; c < channels; ++c) {
          double acc = 0.0;
          for (int ky = 0; ky < 3; ++ky) {
            const int sy = std::clamp(y + ky - 1, 0, h - 1);
            for (int kx = 0; kx < 3; ++kx) {
              const int sx = std::clamp(x + kx - 1, 0, w - 1);
              acc += spatial[static_cast<std::size_t>(ky * 3 + kx)] * in.at(sx, sy, c);
            }
          }
          out.at(x, y, c) = acc;
        }
      }
    }
    filtered[idx] = std::move(out);
  });

  const int rows = grid.rows();
  const int cols = grid.cols();
  std::vector<ViewImage> result(grid.size());
  parallel_for(grid.size(), [&](std::size_t idx) {
    const int row = static_cast<int>(idx) / cols;
    const int col = static_cast<int>(idx) % cols;
    ViewImage out(w, h, channels);
    for (int ky = 0; ky < 3; ++ky) {
      const int sr = std::clamp(row + ky - 1, 0, rows - 1);
      for (int kx = 0; kx < 3; ++kx) {
        const int sc = std::clamp(col + kx - 1, 0, cols - 1);
        const double weight = angular[static_cast<std::size_t>(ky * 3 + kx)];
        const auto &src = filtered[static_cast<std::size_t>(sr) * cols + sc].data();
        for (std::size_t i = 0; i < src.size(); ++i) {
          out.data()[i] += weight * src[i];
        }
      }
    }
    for (double &value : out.data()) {
      value *= scale;
    }
    result[idx] = std::move(out);
  });
  return LightField(grid, std::move(result));
}

} // namespace lfsyn
