#include "support.hpp"

#include "lfsyn/adm.hpp"
#include "lfsyn/scene.hpp"
#include "lfsyn/wcm.hpp"

#include <doctest.h>

#include <cmath>

using namespace lfsyn;

TEST_CASE("uniform confidence") {
  const ConfidencePair u = uniform_confidence(3, 2);
  for (double v : u.from0.data()) {
    CHECK(v == 0.5);
  }
  CHECK(u.from0 == u.from1);
}

TEST_CASE("pair normalization") {
  ConfidenceMap a(3, 1);
  ConfidenceMap b(3, 1);
  a.data() = {0.0, 3.0, 0.2};
  b.data() = {0.0, 1.0, 0.6};
  const ConfidencePair p = normalize_pair(a, b);
  CHECK(p.from0.at(0, 0) == 0.5);
  CHECK(p.from1.at(0, 0) == 0.5);
  CHECK(p.from0.at(1, 0) == doctest::Approx(0.75).epsilon(1e-8));
  CHECK(p.from1.at(2, 0) == doctest::Approx(0.75).epsilon(1e-8));
  for (int x = 0; x < 3; ++x) {
    CHECK(std::abs(p.from0.at(x, 0) + p.from1.at(x, 0) - 1.0) < 1e-15);
  }
  CHECK(p.from0.in_unit_range());

  a.at(2, 0) = -0.1;
  CHECK_THROWS_AS((void)normalize_pair(a, b), Error);
  CHECK_THROWS_AS((void)normalize_pair(ConfidenceMap(2, 2), ConfidenceMap(3, 2)), Error);
}

namespace {

struct Setup {
  ViewImage l0, l1;
  BoundaryAdm b;
};

Setup horizontal_pair(const SceneSpec &s) {
  Setup out{render_view(s, 0.0, 0.5), render_view(s, 1.0, 0.5), {}};
  out.b = estimate_boundary_adm(out.l0, out.l1, static_cast<int>(s.baseline) + 2);
  return out;
}

} // namespace

TEST_CASE("photometric confidences stay even where warps agree") {
  const SceneSpec s = single_layer_scene(48, 48, 4.0, 1);
  const Setup p = horizontal_pair(s);
  for (double k : {0.25, 0.5, 0.75}) {
    const IntermediateAdm a = intermediate_adm_from_source(k, p.b.a_10, p.b.a_01);
    const ConfidencePair w =
        estimate_wcm_photometric(p.l0, p.l1, a.a_k0, a.a_k1, p.b.a_10, p.b.a_01, k);
    for (int y = 8; y < 40; ++y) {
      for (int x = 8; x < 40; ++x) {
        CHECK(std::abs(w.from0.at(x, y) - 0.5) < 0.05);
      }
    }
  }
}

TEST_CASE("photometric confidences favour the unoccluded side") {
  const SceneSpec s = two_layer_scene(96, 96, 16.0, 1);
  const Setup p = horizontal_pair(s);
  const double k = 0.5;
  const IntermediateAdm a = intermediate_adm_from_source(k, p.b.a_10, p.b.a_01);
  const ConfidencePair w =
      estimate_wcm_photometric(p.l0, p.l1, a.a_k0, a.a_k1, p.b.a_10, p.b.a_01, k);
  const ConfidencePair truth = oracle_wcm(s, {k, 0.5}, {0.0, 0.5}, {1.0, 0.5});
  int occluded = 0;
  int agree = 0;
  for (int y = 0; y < 96; ++y) {
    for (int x = 0; x < 96; ++x) {
      const double t = truth.from0.at(x, y);
      if (t != 0.5) {
        ++occluded;
        agree += (t > 0.5) == (w.from0.at(x, y) > 0.5) ? 1 : 0;
      }
    }
  }
  REQUIRE(occluded > 0);
  CHECK(static_cast<double>(agree) / occluded > 0.7);
  CHECK(w.from0.in_unit_range());
  CHECK(w.from1.in_unit_range());
}

TEST_CASE("photometric confidences are mirror symmetric") {
  const SceneSpec s = test::three_layer_scene(48, 48, 10.0, 2);
  const Setup p = horizontal_pair(s);
  for (double k : {0.25, 0.375, 0.5}) {
    const IntermediateAdm a = intermediate_adm_from_source(k, p.b.a_10, p.b.a_01);
    const ConfidencePair fwd =
        estimate_wcm_photometric(p.l0, p.l1, a.a_k0, a.a_k1, p.b.a_10, p.b.a_01, k);
    const ConfidencePair rev =
        estimate_wcm_photometric(p.l1, p.l0, a.a_k1, a.a_k0, p.b.a_01, p.b.a_10, 1.0 - k);
    CHECK(fwd.from0 == rev.from1);
    CHECK(fwd.from1 == rev.from0);
  }
}

TEST_CASE("photometric estimator preconditions") {
  const ViewImage v(8, 8, 3, 0.5);
  const DisparityMap z(8, 8);
  CHECK_THROWS_AS((void)estimate_wcm_photometric(v, v, z, z, z, z, 1.5), Error);
  CHECK_THROWS_AS((void)estimate_wcm_photometric(v, ViewImage(7, 8, 3), z, z, z, z, 0.5), Error);
  PhotometricWcmParams bad;
  bad.sigma = 0.0;
  CHECK_THROWS_AS((void)estimate_wcm_photometric(v, v, z, z, z, z, 0.5, bad), Error);
}
