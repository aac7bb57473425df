#include "support.hpp"

#include "lfsyn/metrics.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace lfsyn;

TEST_CASE("PSNR closed forms") {
  const ViewImage a(4, 4, 3, 0.2);
  const ViewImage b(4, 4, 3, 0.3);
  CHECK(psnr(a, b) == doctest::Approx(20.0).epsilon(1e-12));
  const ViewImage c(4, 4, 3, 0.21);
  CHECK(psnr(a, c) == doctest::Approx(40.0).epsilon(1e-10));
  CHECK(psnr(a, a) == std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS((void)psnr(a, ViewImage(4, 3, 3)), Error);
  CHECK_THROWS_AS((void)psnr(a, ViewImage(4, 4, 1)), Error);
}

TEST_CASE("luma weights") {
  ViewImage v(1, 1, 3);
  v.data() = {1.0, 0.0, 0.0};
  CHECK(luma(v).at(0, 0) == doctest::Approx(0.299));
  v.data() = {0.0, 1.0, 0.0};
  CHECK(luma(v).at(0, 0) == doctest::Approx(0.587));
  const ViewImage g(1, 1, 1, 0.4);
  CHECK(luma(g).at(0, 0) == 0.4);
}

namespace {

// Per-window SSIM computed from scratch on one gray window.
double window_ssim(const ViewImage &a, const ViewImage &b, int x0, int y0) {
  double w[11][11];
  double sum = 0.0;
  for (int i = 0; i < 11; ++i) {
    for (int j = 0; j < 11; ++j) {
      w[i][j] = std::exp(-((i - 5.0) * (i - 5.0) + (j - 5.0) * (j - 5.0)) / 4.5);
      sum += w[i][j];
    }
  }
  double ma = 0, mb = 0, saa = 0, sbb = 0, sab = 0;
  for (int i = 0; i < 11; ++i) {
    for (int j = 0; j < 11; ++j) {
      const double g = w[i][j] / sum;
      const double p = a.at(x0 + j, y0 + i);
      const double q = b.at(x0 + j, y0 + i);
      ma += g * p;
      mb += g * q;
      saa += g * p * p;
      sbb += g * q * q;
      sab += g * p * q;
    }
  }
  const double va = saa - ma * ma;
  const double vb = sbb - mb * mb;
  const double cov = sab - ma * mb;
  const double c1 = 1e-4;
  const double c2 = 9e-4;
  return (2 * ma * mb + c1) * (2 * cov + c2) / ((ma * ma + mb * mb + c1) * (va + vb + c2));
}

} // namespace

TEST_CASE("SSIM against a per-window reference") {
  std::mt19937_64 rng(1);
  const ViewImage a = test::random_view(rng, 15, 13, 1);
  ViewImage b = a;
  for (std::size_t i = 0; i < b.data().size(); ++i) {
    b.data()[i] = 0.8 * b.data()[i] + 0.1 * std::sin(static_cast<double>(i));
  }
  double expected = 0.0;
  int n = 0;
  for (int y = 0; y + 11 <= 13; ++y) {
    for (int x = 0; x + 11 <= 15; ++x) {
      expected += window_ssim(a, b, x, y);
      ++n;
    }
  }
  CHECK(n == 15);
  CHECK(ssim(a, b) == doctest::Approx(expected / n).epsilon(1e-9));
  CHECK(ssim(a, b) == doctest::Approx(ssim(b, a)).epsilon(1e-14));
  CHECK(ssim(a, a) == 1.0);
  CHECK_THROWS_AS((void)ssim(ViewImage(10, 20, 1), ViewImage(10, 20, 1)), Error);
}

TEST_CASE("SSIM of constant images") {
  const ViewImage a(12, 12, 3, 0.5);
  const ViewImage b(12, 12, 3, 0.6);
  const double mu = 0.5;
  const double nu = 0.6;
  const double expected = (2 * mu * nu + 1e-4) / (mu * mu + nu * nu + 1e-4);
  CHECK(ssim(a, b) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("reconstruction loss") {
  ViewImage a(2, 1, 1);
  ViewImage b(2, 1, 1);
  a.data() = {0.0, 1.0};
  b.data() = {0.5, 0.5};
  const std::vector<ViewImage> pa{a, a};
  const std::vector<ViewImage> pb{b, a};
  CHECK(loss_reconstruction(pa, pb) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(loss_reconstruction(pa, pa) == 0.0);
  const std::vector<ViewImage> one{a};
  CHECK_THROWS_AS((void)loss_reconstruction(pa, one), Error);
  CHECK_THROWS_AS((void)loss_reconstruction({}, {}), Error);
}

TEST_CASE("warping loss with intermediate views") {
  ViewImage l0(2, 1, 1);
  ViewImage l1(2, 1, 1);
  l0.data() = {0.0, 1.0};
  l1.data() = {1.0, 1.0};
  const DisparityMap z(2, 1);
  // Boundary terms: 0.5 each. Intermediate view 0.25 everywhere:
  // |Lk - P(L1)| = 0.75, |Lk - P(L0)| = mean(0.25, 0.75) = 0.5.
  IntermediateSample s{ViewImage(2, 1, 1, 0.25), z, z};
  const std::vector<IntermediateSample> samples{s};
  CHECK(loss_warping(l0, l1, z, z, samples) == doctest::Approx(0.5 + 0.5 + 0.75 + 0.5));
  CHECK(loss_warping(l0, l0, z, z, {}) == 0.0);
}

TEST_CASE("smoothness loss of a ramp equals its slope") {
  DisparityMap ramp(6, 4);
  for (int y = 0; y < 4; ++y) {
    for (int x = 0; x < 6; ++x) {
      ramp.dx(x, y) = 0.3 * x;
    }
  }
  CHECK(loss_smoothness(ramp, DisparityMap(6, 4)) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(loss_smoothness(DisparityMap(6, 4, 2.0, 1.0), DisparityMap(6, 4, -1.0, 0.5)) == 0.0);
}

TEST_CASE("combined loss") {
  const LossReport r = combined_loss_report(0.01, std::nullopt, 0.02, 0.5);
  CHECK(r.total == doctest::Approx(2.0 + 2.0 + 0.5));
  CHECK(r.perceptual_missing);
  const LossReport with = combined_loss_report(0.01, 0.001, 0.02, 0.5);
  CHECK(with.total == doctest::Approx(5.5));
  CHECK_FALSE(with.perceptual_missing);
  LossWeights w;
  w.reconstruction = 1.0;
  CHECK(combined_loss_report(1.0, std::nullopt, 0.0, 0.0, w).total == 1.0);
}

TEST_CASE("linear fit statistics") {
  const std::vector<double> xs{1, 2, 3, 4, 5};
  const std::vector<double> exact{1.5, 3.5, 5.5, 7.5, 9.5};
  const LinearFit f = linear_fit(xs, exact);
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(f.intercept == doctest::Approx(-0.5));
  CHECK(f.r2 == doctest::Approx(1.0));
  CHECK(f.pcc == doctest::Approx(1.0));

  const std::vector<double> noisy{1.0, 2.2, 2.8, 4.1, 5.0};
  const LinearFit g = linear_fit(xs, noisy);
  // Independent: Pearson r from sums, R^2 = r^2 for a single regressor.
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    sx += xs[i];
    sy += noisy[i];
    sxx += xs[i] * xs[i];
    syy += noisy[i] * noisy[i];
    sxy += xs[i] * noisy[i];
  }
  const double r = (5 * sxy - sx * sy) / std::sqrt((5 * sxx - sx * sx) * (5 * syy - sy * sy));
  CHECK(g.pcc == doctest::Approx(r).epsilon(1e-12));
  CHECK(g.r2 == doctest::Approx(r * r).epsilon(1e-12));
  CHECK(g.adjusted_r2 == doctest::Approx(1 - (1 - r * r) * 4.0 / 3.0).epsilon(1e-12));

  const std::vector<double> flat{2, 2, 2, 2, 2};
  CHECK(linear_fit(xs, flat).r2 == 1.0);
  CHECK_THROWS_AS((void)linear_fit(flat, xs), Error);
  const std::vector<double> two{1, 2};
  CHECK_THROWS_AS((void)linear_fit(two, two), Error);
}
