#include "support.hpp"

#include "lfsyn/metrics.hpp"
#include "lfsyn/scene.hpp"
#include "lfsyn/synth.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace lfsyn;

TEST_CASE("free-space inference at the endpoints") {
  std::mt19937_64 rng(1);
  const ViewImage l0 = test::random_view(rng, 6, 5, 3);
  const ViewImage l1 = test::random_view(rng, 6, 5, 3);
  const DisparityMap z(6, 5);
  CHECK(infer_free_space(l0, l1, z, z, 0.0) == l0);
  CHECK(infer_free_space(l0, l1, z, z, 1.0) == l1);
  const ViewImage mid = infer_free_space(l0, l1, z, z, 0.5);
  CHECK(mid.at(2, 3, 1) == doctest::Approx(0.5 * (l0.at(2, 3, 1) + l1.at(2, 3, 1))));
  CHECK_THROWS_AS((void)infer_free_space(l0, l1, z, z, 1.2), Error);
}

TEST_CASE("occlusion-aware inference matches the weighted blend") {
  std::mt19937_64 rng(2);
  const ViewImage l0 = test::random_view(rng, 7, 7, 3);
  const ViewImage l1 = test::random_view(rng, 7, 7, 3);
  const DisparityMap a0 = test::random_adm(rng, 7, 7, 2.0);
  const DisparityMap a1 = test::random_adm(rng, 7, 7, 2.0);
  ConfidenceMap o0(7, 7);
  ConfidenceMap o1(7, 7);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (std::size_t i = 0; i < o0.data().size(); ++i) {
    o0.data()[i] = u(rng);
    o1.data()[i] = 1.0 - o0.data()[i];
  }
  const double k = 0.3;
  const ViewImage out = infer_occlusion_aware(l0, l1, a0, a1, o0, o1, k);
  const ViewImage w0 = warp(l0, a0);
  const ViewImage w1 = warp(l1, a1);
  for (int y = 0; y < 7; ++y) {
    for (int x = 0; x < 7; ++x) {
      const double p = (1 - k) * o0.at(x, y);
      const double q = k * o1.at(x, y);
      for (int c = 0; c < 3; ++c) {
        CHECK(out.at(x, y, c) ==
              doctest::Approx((p * w0.at(x, y, c) + q * w1.at(x, y, c)) / (p + q)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("uniform confidences reduce to free space bit for bit") {
  std::mt19937_64 rng(3);
  const ViewImage l0 = test::random_view(rng, 9, 6, 3);
  const ViewImage l1 = test::random_view(rng, 9, 6, 3);
  const DisparityMap a0 = test::random_adm(rng, 9, 6, 3.0);
  const DisparityMap a1 = test::random_adm(rng, 9, 6, 3.0);
  const ConfidencePair u = uniform_confidence(9, 6);
  for (double k : {0.0, 0.1, 1.0 / 3.0, 0.5, 0.77, 1.0}) {
    CHECK(infer_occlusion_aware(l0, l1, a0, a1, u.from0, u.from1, k) ==
          infer_free_space(l0, l1, a0, a1, k));
  }
}

TEST_CASE("one-sided confidence selects that warp") {
  std::mt19937_64 rng(4);
  const ViewImage l0 = test::random_view(rng, 5, 5, 1);
  const ViewImage l1 = test::random_view(rng, 5, 5, 1);
  const DisparityMap z(5, 5);
  const ConfidenceMap one(5, 5, 1.0);
  const ConfidenceMap zero(5, 5, 0.0);
  const ViewImage out = infer_occlusion_aware(l0, l1, z, z, zero, one, 0.4);
  for (std::size_t i = 0; i < out.data().size(); ++i) {
    CHECK(out.data()[i] == doctest::Approx(l1.data()[i]).epsilon(1e-14));
  }
}

TEST_CASE("vanishing normalizer falls back to an even blend") {
  const ViewImage l0(3, 3, 1, 0.2);
  const ViewImage l1(3, 3, 1, 0.6);
  const DisparityMap z(3, 3);
  // k = 0 with no confidence in view 0: the normalizer is zero everywhere.
  InferenceDiagnostics diag;
  const ViewImage out = infer_occlusion_aware(l0, l1, z, z, ConfidenceMap(3, 3, 0.0),
                                              ConfidenceMap(3, 3, 1.0), 0.0, &diag);
  CHECK(diag.fallback_pixels == 9);
  CHECK(out.at(1, 1) == doctest::Approx(0.4));
}

TEST_CASE("dense reconstruction keeps the corners and fills the grid") {
  const SceneSpec s = single_layer_scene(32, 32, 4.0, 1);
  const LightField corners = render_lightfield(s, AngularGrid(2, 2));

  ReconstructionOptions oracle;
  oracle.estimator = Estimator::Oracle;
  oracle.scene = s;
  CHECK(reconstruct_dense(corners, AngularGrid(2, 2), oracle) == corners);

  ReconstructionStats stats;
  const LightField dense = reconstruct_dense(corners, AngularGrid(16, 16), oracle, &stats);
  CHECK(dense.grid().size() == 256);
  CHECK(stats.synthesized_views == 252);
  CHECK(dense.view(0, 0) == corners.view(0, 0));
  CHECK(dense.view(0, 15) == corners.view(0, 1));
  CHECK(dense.view(15, 0) == corners.view(1, 0));
  CHECK(dense.view(15, 15) == corners.view(1, 1));
  const ViewImage truth = render_view(s, 7.0 / 15.0, 4.0 / 15.0);
  CHECK(psnr(dense.view(4, 7), truth) > 45.0);
}

TEST_CASE("classical reconstruction of an occluded scene") {
  const SceneSpec s = two_layer_scene(64, 64, 12.0, 1);
  const LightField corners = render_lightfield(s, AngularGrid(2, 2));
  const AngularGrid target(4, 4);
  const LightField gt = render_lightfield(s, target);
  ReconstructionOptions opt;
  opt.max_disp = 10;
  const LightField aware = reconstruct_dense(corners, target, opt);
  opt.use_wcm = false;
  const LightField free = reconstruct_dense(corners, target, opt);
  double pa = 0.0;
  double pf = 0.0;
  for (int r = 1; r < 3; ++r) {
    for (int c = 1; c < 3; ++c) {
      pa += psnr(aware.view(r, c), gt.view(r, c)) / 4;
      pf += psnr(free.view(r, c), gt.view(r, c)) / 4;
    }
  }
  CHECK(pa > 25.0);
  CHECK(pa > pf);
}

TEST_CASE("dense reconstruction preconditions") {
  const SceneSpec s = single_layer_scene(16, 16, 4.0, 1);
  const LightField corners = render_lightfield(s, AngularGrid(2, 2));
  ReconstructionOptions oracle;
  oracle.estimator = Estimator::Oracle;
  CHECK_THROWS_AS((void)reconstruct_dense(corners, AngularGrid(4, 4), oracle), Error);
  oracle.scene = single_layer_scene(20, 16, 4.0, 1);
  CHECK_THROWS_AS((void)reconstruct_dense(corners, AngularGrid(4, 4), oracle), Error);
  const LightField three = render_lightfield(s, AngularGrid(3, 3));
  CHECK_THROWS_AS((void)reconstruct_dense(three, AngularGrid(4, 4), ReconstructionOptions{}),
                  Error);
  CHECK_THROWS_AS((void)reconstruct_dense(corners, AngularGrid(1, 4), ReconstructionOptions{}),
                  Error);
}

TEST_CASE("separable 4D filter") {
  std::mt19937_64 rng(5);
  const AngularGrid grid(3, 4);
  std::vector<ViewImage> views;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    views.push_back(test::random_view(rng, 5, 6, 1));
  }
  const LightField lf(grid, views);
  CHECK(separable_conv4d(lf, kDeltaKernel, kDeltaKernel) == lf);

  const Kernel3x3 box = make_kernel(std::vector<double>(9, 1.0 / 9.0));
  const Kernel3x3 shift = make_kernel({0, 0, 0, 0, 0, 1, 0, 0, 0});
  // Angular shift by one column with replicate padding, spatial box blur.
  const LightField out = separable_conv4d(lf, box, shift, 2.0);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 4; ++c) {
      const ViewImage &src = lf.view(r, std::min(c + 1, 3));
      for (int y = 0; y < 6; ++y) {
        for (int x = 0; x < 5; ++x) {
          double acc = 0.0;
          for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
              acc += src.at(std::clamp(x + dx, 0, 4), std::clamp(y + dy, 0, 5)) / 9.0;
            }
          }
          CHECK(out.view(r, c).at(x, y) == doctest::Approx(2.0 * acc).epsilon(1e-12));
        }
      }
    }
  }
  CHECK_THROWS_AS((void)make_kernel({1, 2, 3}), Error);
}
