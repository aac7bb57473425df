#include "lfsyn/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace lfsyn {

double psnr(const ViewImage &a, const ViewImage &b) {
  require_same_shape(a, b, "psnr");
  if (a.channels() != b.channels()) {
    throw Error("psnr: channel mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    const double d = a.data()[i] - b.data()[i];
    sum += d * d;
  }
  const double mse = sum / static_cast<double>(a.data().size());
  if (mse == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return 10.0 * std::log10(1.0 / mse);
}

Raster luma(const ViewImage &image) {
  Raster out(image.width(), image.height(), 1);
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      out.at(x, y) = image.channels() == 1 ? image.at(x, y)
                                           : 0.299 * image.at(x, y, 0) +
                                                 0.587 * image.at(x, y, 1) +
                                                 0.114 * image.at(x, y, 2);
    }
  }
  return out;
}

namespace {

constexpr int kWindow = 11;
constexpr double kSigma = 1.5;
constexpr double kC1 = 0.01 * 0.01;
constexpr double kC2 = 0.03 * 0.03;

std::array<double, kWindow> gaussian_taps() {
  std::array<double, kWindow> taps{};
  double sum = 0.0;
  for (int i = 0; i < kWindow; ++i) {
    const double d = i - kWindow / 2;
    taps[i] = std::exp(-d * d / (2.0 * kSigma * kSigma));
    sum += taps[i];
  }
  for (double &t : taps) {
    t /= sum;
  }
  return taps;
}

// 'valid' separable filtering: output is (w - 10) x (h - 10).
Raster filter_valid(const Raster &in, const std::array<double, kWindow> &taps) {
  const int ow = in.width() - kWindow + 1;
  const int oh = in.height() - kWindow + 1;
  Raster rows(ow, in.height(), 1);
  for (int y = 0; y < in.height(); ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int i = 0; i < kWindow; ++i) {
        acc += taps[i] * in.at(x + i, y);
      }
      rows.at(x, y) = acc;
    }
  }
  Raster out(ow, oh, 1);
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int i = 0; i < kWindow; ++i) {
        acc += taps[i] * rows.at(x, y + i);
      }
      out.at(x, y) = acc;
    }
  }
  return out;
}

Raster product(const Raster &a, const Raster &b) {
  Raster out(a.width(), a.height(), 1);
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    out.data()[i] = a.data()[i] * b.data()[i];
  }
  return out;
}

} // namespace

double ssim(const ViewImage &a, const ViewImage &b) {
  require_same_shape(a, b, "ssim");
  if (a.channels() != b.channels()) {
    throw Error("ssim: channel mismatch");
  }
  if (a.width() < kWindow || a.height() < kWindow) {
    throw Error("ssim: image smaller than the 11x11 window");
  }
  const auto taps = gaussian_taps();
  const Raster ya = luma(a);
  const Raster yb = luma(b);

  const Raster mu_a = filter_valid(ya, taps);
  const Raster mu_b = filter_valid(yb, taps);
  const Raster e_aa = filter_valid(product(ya, ya), taps);
  const Raster e_bb = filter_valid(product(yb, yb), taps);
  const Raster e_ab = filter_valid(product(ya, yb), taps);

  double sum = 0.0;
  const std::size_t n = mu_a.data().size();
  for (std::size_t i = 0; i < n; ++i) {
    const double ma = mu_a.data()[i];
    const double mb = mu_b.data()[i];
    const double var_a = e_aa.data()[i] - ma * ma;
    const double var_b = e_bb.data()[i] - mb * mb;
    const double cov = e_ab.data()[i] - ma * mb;
    const double num = (2.0 * ma * mb + kC1) * (2.0 * cov + kC2);
    const double den = (ma * ma + mb * mb + kC1) * (var_a + var_b + kC2);
    sum += num / den;
  }
  return sum / static_cast<double>(n);
}

double loss_reconstruction(std::span<const ViewImage> pred, std::span<const ViewImage> gt) {
  if (pred.size() != gt.size()) {
    throw Error("loss_reconstruction: " + std::to_string(pred.size()) +
                " predictions vs " + std::to_string(gt.size()) + " ground-truth views");
  }
  if (pred.empty()) {
    throw Error("loss_reconstruction: needs at least one view pair");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    sum += mean_abs_difference(gt[i], pred[i]);
  }
  return sum / static_cast<double>(pred.size());
}

double loss_warping(const ViewImage &l0, const ViewImage &l1, const DisparityMap &a_01,
                    const DisparityMap &a_10, std::span<const IntermediateSample> intermediates) {
  require_same_shape(l0, l1, "loss_warping");
  double loss = warp_residual(l0, l1, a_01) + warp_residual(l1, l0, a_10);
  if (!intermediates.empty()) {
    double from1 = 0.0;
    double from0 = 0.0;
    for (const IntermediateSample &s : intermediates) {
      from1 += warp_residual(s.view, l1, s.a_k1);
      from0 += warp_residual(s.view, l0, s.a_k0);
    }
    const auto n = static_cast<double>(intermediates.size());
    loss += from1 / n + from0 / n;
  }
  return loss;
}

namespace {

double gradient_l1(const DisparityMap &map) {
  const int w = map.width();
  const int h = map.height();
  double gx = 0.0;
  double gy = 0.0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x + 1 < w; ++x) {
      gx += std::abs(map.dx(x + 1, y) - map.dx(x, y)) + std::abs(map.dy(x + 1, y) - map.dy(x, y));
    }
  }
  for (int y = 0; y + 1 < h; ++y) {
    for (int x = 0; x < w; ++x) {
      gy += std::abs(map.dx(x, y + 1) - map.dx(x, y)) + std::abs(map.dy(x, y + 1) - map.dy(x, y));
    }
  }
  const double mean_x = w > 1 ? gx / (static_cast<double>(w - 1) * h) : 0.0;
  const double mean_y = h > 1 ? gy / (static_cast<double>(h - 1) * w) : 0.0;
  return mean_x + mean_y;
}

} // namespace

double loss_smoothness(const DisparityMap &a_01, const DisparityMap &a_10) {
  require_same_shape(a_01, a_10, "loss_smoothness");
  return gradient_l1(a_01) + gradient_l1(a_10);
}

LossReport combined_loss_report(double l_r, std::optional<double> l_c, double l_w, double l_s,
                                const LossWeights &weights) {
  LossReport report;
  report.l_r = l_r;
  report.l_c = l_c;
  report.l_w = l_w;
  report.l_s = l_s;
  report.perceptual_missing = !l_c.has_value();
  report.total = weights.reconstruction * l_r + weights.warping * l_w + weights.smoothness * l_s;
  if (l_c) {
    report.total += weights.perceptual * *l_c;
  }
  return report;
}

LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error("linear_fit: sample count mismatch");
  }
  const std::size_t n = xs.size();
  if (n < 3) {
    throw Error("linear_fit: needs at least 3 samples, got " + std::to_string(n));
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0) {
    throw Error("linear_fit: x values are all equal; the fit is underdetermined");
  }

  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (syy == 0.0) {
    fit.r2 = 1.0;
    fit.adjusted_r2 = 1.0;
    fit.pcc = 1.0;
    return fit;
  }
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += r * r;
  }
  fit.r2 = 1.0 - ss_res / syy;
  fit.adjusted_r2 = 1.0 - (1.0 - fit.r2) * static_cast<double>(n - 1) / static_cast<double>(n - 2);
  fit.pcc = sxy / std::sqrt(sxx * syy);
  return fit;
}

} // namespace lfsyn
