#include "support.hpp"

#include "lfsyn/io.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

using namespace lfsyn;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string &name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string bytes_of(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const fs::path &p, const std::string &bytes) {
  std::ofstream out(p, std::ios::binary);
  out << bytes;
}

std::string float_bytes(std::initializer_list<float> values) {
  std::string out;
  for (float v : values) {
    char b[4];
    std::memcpy(b, &v, 4);
    out.append(b, 4);
  }
  return out;
}

} // namespace

TEST_CASE("PNG round trips within quantization") {
  TempDir dir("lfsyn_test_png");
  std::mt19937_64 rng(1);
  const ViewImage img = test::random_view(rng, 11, 7, 3);
  save_png(img, dir.path / "a8.png", 8);
  save_png(img, dir.path / "a16.png", 16);
  const ViewImage b8 = load_png(dir.path / "a8.png");
  const ViewImage b16 = load_png(dir.path / "a16.png");
  REQUIRE(b8.same_shape(img));
  for (std::size_t i = 0; i < img.data().size(); ++i) {
    CHECK(std::abs(b8.data()[i] - img.data()[i]) <= 0.5 / 255.0 + 1e-12);
    CHECK(std::abs(b16.data()[i] - img.data()[i]) <= 0.5 / 65535.0 + 1e-12);
  }
  const ViewImage gray = test::random_view(rng, 5, 5, 1);
  save_png(gray, dir.path / "g.png");
  CHECK(load_png(dir.path / "g.png").channels() == 1);
  CHECK_THROWS_AS(save_png(img, dir.path / "x.png", 12), Error);
  CHECK_THROWS_AS((void)load_png(dir.path / "missing.png"), Error);
}

TEST_CASE("PNG alpha is dropped") {
  TempDir dir("lfsyn_test_png_alpha");
  const std::vector<unsigned char> rgba{255, 0, 0, 128, 0, 255, 0, 255};
  save_png_rgb8(2, 1, 4, rgba, dir.path / "rgba.png");
  const ViewImage v = load_png(dir.path / "rgba.png");
  CHECK(v.channels() == 3);
  CHECK(v.at(0, 0, 0) == 1.0);
  CHECK(v.at(1, 0, 1) == 1.0);
}

TEST_CASE("light field directories") {
  TempDir dir("lfsyn_test_lf");
  std::mt19937_64 rng(2);
  std::vector<ViewImage> views;
  for (int i = 0; i < 6; ++i) {
    views.push_back(test::random_view(rng, 4, 3, 3));
  }
  const LightField lf(AngularGrid(3, 2), views);
  save_lightfield(lf, dir.path / "lf", 8, std::nullopt, "external");
  CHECK(fs::exists(dir.path / "lf" / "view_02_01.png"));
  CHECK(view_file_name(10, 3) == "view_10_03.png");
  const LightFieldMetadata meta = load_metadata(dir.path / "lf");
  CHECK(meta.rows == 3);
  CHECK(meta.cols == 2);
  CHECK_FALSE(meta.baseline_px.has_value());
  CHECK(meta.source == "external");
  CHECK(read_text(dir.path / "lf" / kLightFieldMetadataFile) ==
        "{\n  \"rows\": 3,\n  \"cols\": 2,\n  \"width\": 4,\n  \"height\": 3,\n"
        "  \"channels\": 3,\n  \"bit_depth\": 8,\n  \"baseline_px\": null,\n"
        "  \"source\": \"external\"\n}\n");

  fs::remove(dir.path / "lf" / "view_01_00.png");
  try {
    (void)load_lightfield(dir.path / "lf");
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(std::string(e.what()).find("view_01_00.png") != std::string::npos);
  }
  CHECK_THROWS_AS((void)load_metadata(dir.path / "nothing"), Error);
}

TEST_CASE("PFM layout and round trip") {
  TempDir dir("lfsyn_test_pfm");
  // Hand-written file: rows bottom-up, little endian.
  write_bytes(dir.path / "hand.pfm", "Pf\n2 2\n-1.0\n" + float_bytes({3.0f, 4.0f, 1.0f, 2.0f}));
  const FloatImage hand = load_pfm(dir.path / "hand.pfm");
  CHECK(hand.width == 2);
  CHECK(hand.channels == 1);
  CHECK(hand.data == std::vector<float>{1.0f, 2.0f, 3.0f, 4.0f});

  save_pfm(hand, dir.path / "out.pfm");
  const std::string written = bytes_of(dir.path / "out.pfm");
  CHECK(written.substr(written.size() - 16) == float_bytes({3.0f, 4.0f, 1.0f, 2.0f}));
  save_pfm(load_pfm(dir.path / "out.pfm"), dir.path / "again.pfm");
  CHECK(bytes_of(dir.path / "again.pfm") == written);

  const FloatImage color{1, 1, 3, {0.25f, -7.5f, 1e-20f}};
  save_pfm(color, dir.path / "c.pfm");
  CHECK(load_pfm(dir.path / "c.pfm").data == color.data);
}

TEST_CASE("PFM rejects bad input") {
  TempDir dir("lfsyn_test_pfm_bad");
  write_bytes(dir.path / "be.pfm", "Pf\n1 1\n1.0\n" + float_bytes({1.0f}));
  CHECK_THROWS_AS((void)load_pfm(dir.path / "be.pfm"), Error);
  write_bytes(dir.path / "nan.pfm",
              "Pf\n1 1\n-1.0\n" + float_bytes({std::numeric_limits<float>::quiet_NaN()}));
  CHECK_THROWS_AS((void)load_pfm(dir.path / "nan.pfm"), Error);
  write_bytes(dir.path / "short.pfm", "Pf\n2 2\n-1.0\n" + float_bytes({1.0f}));
  CHECK_THROWS_AS((void)load_pfm(dir.path / "short.pfm"), Error);
  write_bytes(dir.path / "magic.pfm", "P5\n1 1\n-1.0\n" + float_bytes({1.0f}));
  CHECK_THROWS_AS((void)load_pfm(dir.path / "magic.pfm"), Error);
}

TEST_CASE("map files keep single precision values") {
  TempDir dir("lfsyn_test_maps");
  std::mt19937_64 rng(3);
  const DisparityMap adm = test::random_adm(rng, 5, 4, 10.0);
  save_adm(adm, dir.path / "a");
  CHECK(fs::exists(dir.path / "a_dx.pfm"));
  const DisparityMap back = load_adm(dir.path / "a");
  for (std::size_t i = 0; i < adm.data().size(); ++i) {
    CHECK(back.data()[i] == static_cast<double>(static_cast<float>(adm.data()[i])));
  }
  ConfidenceMap w(3, 2, 0.25);
  w.at(2, 1) = 1.0;
  save_wcm(w, dir.path / "w.pfm");
  CHECK(load_wcm(dir.path / "w.pfm") == w);

  save_pfm(FloatImage{1, 1, 1, {1.5f}}, dir.path / "big.pfm");
  CHECK_THROWS_AS((void)load_wcm(dir.path / "big.pfm"), Error);
}

TEST_CASE("scene documents") {
  const SceneSpec s = test::three_layer_scene(40, 30, 6.0, 11);
  const std::string text = format_scene(s);
  const SceneSpec back = parse_scene(text);
  CHECK(format_scene(back) == text);
  CHECK(render_view(back, 0.2, 0.4) == render_view(s, 0.2, 0.4));

  CHECK_THROWS_AS((void)parse_scene(R"({"width": 8, "height": 8, "layers": []})"), Error);
  CHECK_THROWS_AS((void)parse_scene("{not json"), Error);
  CHECK_THROWS_AS(
      (void)parse_scene(R"({"seed": 1, "width": 8, "height": 8, "layers": [{"alpha": 0.5}]})"),
      Error);
}

TEST_CASE("metric report text") {
  MetricReport r;
  r.psnr_db = std::numeric_limits<double>::infinity();
  r.ssim = 0.123456789;
  r.l_r = 1.0 / 3.0;
  r.per_view.push_back({0, 1, 41.23456789, 0.99});
  CHECK(format_report(r) == "{\n"
                            "  \"psnr_db\": 100.0,\n"
                            "  \"ssim\": 0.123457,\n"
                            "  \"l_r\": 0.333333,\n"
                            "  \"l_w\": null,\n"
                            "  \"l_s\": null,\n"
                            "  \"l_total\": null,\n"
                            "  \"perceptual\": \"n/a\",\n"
                            "  \"per_view\": [\n"
                            "    {\n"
                            "      \"row\": 0,\n"
                            "      \"col\": 1,\n"
                            "      \"psnr_db\": 41.2346,\n"
                            "      \"ssim\": 0.99\n"
                            "    }\n"
                            "  ]\n"
                            "}\n");
  CHECK(round_significant(123456789.0) == 123457000.0);
  CHECK(round_significant(0.0) == 0.0);
}
