#include "cli.hpp"

#include "lfsyn/adm.hpp"
#include "lfsyn/io.hpp"
#include "lfsyn/metrics.hpp"
#include "lfsyn/scene.hpp"
#include "lfsyn/synth.hpp"
#include "lfsyn/viz.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace lfsyn::cli {
namespace {

using json = nlohmann::ordered_json;

AngularGrid parse_grid(const std::string &text) {
  int rows = 0;
  int cols = 0;
  char sep = 0;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%d%c%d%c", &rows, &sep, &cols, &extra) != 3 ||
      (sep != 'x' && sep != 'X') || rows < 1 || cols < 1) {
    throw Error("grid must look like RxC with positive sizes, got '" + text + "'");
  }
  return AngularGrid(rows, cols);
}

bool is_corner(const AngularGrid &grid, int row, int col) {
  return (row == 0 || row == grid.rows() - 1) && (col == 0 || col == grid.cols() - 1);
}

std::string cell_name(const char *prefix, int row, int col, const char *suffix) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_%02d_%02d%s", prefix, row, col, suffix);
  return buf;
}

void save_mask(const OcclusionMask &mask, const fs::path &path) {
  std::vector<unsigned char> pixels(static_cast<std::size_t>(mask.width()) * mask.height());
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      pixels[static_cast<std::size_t>(y) * mask.width() + x] = mask.at(x, y) ? 255 : 0;
    }
  }
  save_png_rgb8(mask.width(), mask.height(), 1, pixels, path);
}

Kernel3x3 kernel_from(const json &doc, const char *key) {
  if (!doc.contains(key)) {
    return kDeltaKernel;
  }
  return make_kernel(doc.at(key).get<std::vector<double>>());
}

int max_disp_for(const SceneSpec &scene) {
  double widest = 0.0;
  for (std::size_t l = 0; l < scene.layers.size(); ++l) {
    widest = std::max(widest, std::abs(scene.shift_factor(l)));
  }
  const int limit = std::min(scene.width, scene.height) - 1;
  return std::clamp(static_cast<int>(std::ceil(widest)) + 2, 1, limit);
}

// Per-view scores over the compared views; PSNR is capped before averaging.
MetricReport score_views(const LightField &pred, const LightField &gt, bool include_corners) {
  if (!(pred.grid() == gt.grid())) {
    throw Error("predicted and ground-truth grids differ");
  }
  MetricReport report;
  for (int r = 0; r < gt.grid().rows(); ++r) {
    for (int c = 0; c < gt.grid().cols(); ++c) {
      if (!include_corners && is_corner(gt.grid(), r, c)) {
        continue;
      }
      const double p = std::min(psnr(pred.view(r, c), gt.view(r, c)), kPsnrReportCap);
      report.per_view.push_back({r, c, p, ssim(pred.view(r, c), gt.view(r, c))});
    }
  }
  if (report.per_view.empty()) {
    throw Error("no synthesized views to score; pass --include-corners for a corner-only grid");
  }
  for (const ViewScore &s : report.per_view) {
    report.psnr_db += s.psnr_db;
    report.ssim += s.ssim;
  }
  report.psnr_db /= static_cast<double>(report.per_view.size());
  report.ssim /= static_cast<double>(report.per_view.size());
  return report;
}

// Warping and smoothness terms align each predicted view with its ground
// truth: the two-view warping loss and the map smoothness of that pair,
// averaged over the scored views. Identical light fields score zero.
void add_losses(MetricReport &report, const LightField &pred, const LightField &gt,
                int max_disp) {
  std::vector<ViewImage> p;
  std::vector<ViewImage> g;
  double l_w = 0.0;
  double l_s = 0.0;
  for (const ViewScore &s : report.per_view) {
    const ViewImage &pv = pred.view(s.row, s.col);
    const ViewImage &gv = gt.view(s.row, s.col);
    const BoundaryAdm b = estimate_boundary_adm(gv, pv, max_disp);
    l_w += loss_warping(gv, pv, b.a_01, b.a_10, {});
    l_s += loss_smoothness(b.a_01, b.a_10);
    p.push_back(pv);
    g.push_back(gv);
  }
  const double n = static_cast<double>(report.per_view.size());
  const LossReport losses = combined_loss_report(loss_reconstruction(p, g), std::nullopt,
                                                 l_w / n, l_s / n);
  report.l_r = losses.l_r;
  report.l_w = losses.l_w;
  report.l_s = losses.l_s;
  report.l_total = losses.total;
}

int default_max_disp(int extent) { return std::clamp(extent / 8, 1, std::max(1, extent - 1)); }

constexpr int kAlignmentRange = 4;

// ---- subcommands -----------------------------------------------------------

struct GenerateArgs {
  std::string spec;
  std::string grid;
  std::string out;
  std::string oracle_out;
  int bit_depth = 8;
};

int cmd_generate(const GenerateArgs &a) {
  const SceneSpec scene = load_scene(a.spec);
  const AngularGrid grid = parse_grid(a.grid);
  const LightField lf = render_lightfield(scene, grid);
  save_lightfield(lf, a.out, a.bit_depth, scene.baseline, "synthetic");
  if (!a.oracle_out.empty()) {
    const fs::path dir = a.oracle_out;
    fs::create_directories(dir);
    save_scene(scene, dir / "scene.json");
    for (int r = 0; r < grid.rows(); ++r) {
      for (int c = 0; c < grid.cols(); ++c) {
        const AngularPoint target{grid.u(c), grid.v(r)};
        const AngularPoint s0{0.0, grid.v(r)};
        const AngularPoint s1{1.0, grid.v(r)};
        save_adm(oracle_adm(scene, target, s0), dir / cell_name("adm", r, c, "_h0"));
        save_adm(oracle_adm(scene, target, s1), dir / cell_name("adm", r, c, "_h1"));
        const ConfidencePair w = oracle_wcm(scene, target, s0, s1);
        save_wcm(w.from0, dir / cell_name("wcm", r, c, "_h0.pfm"));
        save_wcm(w.from1, dir / cell_name("wcm", r, c, "_h1.pfm"));
        save_mask(occlusion_mask(scene, target, s0), dir / cell_name("occ", r, c, "_h0.png"));
        save_mask(occlusion_mask(scene, target, s1), dir / cell_name("occ", r, c, "_h1.png"));
      }
    }
  }
  std::cout << "wrote " << grid.size() << " views to " << a.out << "\n";
  return 0;
}

struct ReconstructArgs {
  std::string in;
  std::string target;
  std::string estimator = "classical";
  std::string scene;
  bool no_wcm = false;
  std::string refine;
  std::string out;
  std::string report;
  int max_disp = 0;
  double sigma = PhotometricWcmParams{}.sigma;
  double sigma_disparity = PhotometricWcmParams{}.sigma_disparity;
};

int cmd_reconstruct(const ReconstructArgs &a) {
  const LightFieldMetadata meta = load_metadata(a.in);
  const LightField input = load_lightfield(a.in);
  const LightField corners = input.grid().size() == 4 ? input : corner_lightfield(input);
  const AngularGrid target = parse_grid(a.target);

  ReconstructionOptions options;
  options.estimator = a.estimator == "oracle" ? Estimator::Oracle : Estimator::Classical;
  options.use_wcm = !a.no_wcm;
  options.max_disp = a.max_disp;
  options.wcm.sigma = a.sigma;
  options.wcm.sigma_disparity = a.sigma_disparity;
  if (!a.scene.empty()) {
    options.scene = load_scene(a.scene);
  }
  if (options.estimator == Estimator::Oracle && !options.scene) {
    throw Error("the oracle estimator needs --scene");
  }

  ReconstructionStats stats;
  LightField dense = reconstruct_dense(corners, target, options, &stats);
  if (!a.refine.empty()) {
    const json doc = json::parse(read_text(a.refine));
    dense = separable_conv4d(dense, kernel_from(doc, "spatial"), kernel_from(doc, "angular"),
                             doc.value("scale", 1.0));
  }
  save_lightfield(dense, a.out, meta.bit_depth, meta.baseline_px, meta.source);
  std::cout << "synthesized " << stats.synthesized_views << " views, " << stats.fallback_pixels
            << " fallback pixels\n";

  if (!a.report.empty()) {
    if (!options.scene) {
      throw Error("--report needs --scene to render the ground truth");
    }
    const LightField gt = render_lightfield(*options.scene, target);
    const bool corners_only = target.size() == 4;
    const MetricReport report = score_views(dense, gt, corners_only);
    write_text(a.report, format_report(report));
    std::cout << "mean PSNR " << report.psnr_db << " dB, mean SSIM " << report.ssim << "\n";
  }
  return 0;
}

struct EvaluateArgs {
  std::string pred;
  std::string gt;
  bool losses = false;
  bool include_corners = false;
  std::string report;
  int max_disp = 0;
};

int cmd_evaluate(const EvaluateArgs &a) {
  const LightField pred = load_lightfield(a.pred);
  const LightField gt = load_lightfield(a.gt);
  MetricReport report = score_views(pred, gt, a.include_corners);
  if (a.losses) {
    add_losses(report, pred, gt,
               std::min(a.max_disp > 0 ? a.max_disp : kAlignmentRange, gt.width() - 1));
  }
  write_text(a.report, format_report(report));
  std::cout << "mean PSNR " << report.psnr_db << " dB, mean SSIM " << report.ssim << " over "
            << report.per_view.size() << " views\n";
  return 0;
}

struct LinearityArgs {
  std::string scene;
  int intervals = 6;
  int points = 9;
  std::string report;
  std::string estimator = "classical";
  int max_disp = 0;
};

int cmd_linearity(const LinearityArgs &a) {
  if (a.intervals < 3) {
    throw Error("--intervals must be at least 3 for a line fit");
  }
  if (a.points < 1) {
    throw Error("--points must be positive");
  }
  const SceneSpec scene = load_scene(a.scene);
  const bool oracle = a.estimator == "oracle";
  const int max_disp = a.max_disp > 0 ? a.max_disp : max_disp_for(scene);

  const AngularPoint left{0.0, 0.5};
  const ViewImage view0 = render_view(scene, left.u, left.v);
  const int radius = std::max(4, std::min(scene.width, scene.height) / 12);
  const std::vector<Pixel> points =
      select_feature_points(view0, a.points, radius, max_disp + kSadWindow);
  if (points.empty()) {
    throw Error("no feature points found");
  }

  std::vector<DisparityMap> maps;
  std::vector<double> intervals;
  for (int d = 1; d <= a.intervals; ++d) {
    const AngularPoint right{static_cast<double>(d) / a.intervals, 0.5};
    intervals.push_back(d);
    if (oracle) {
      maps.push_back(oracle_adm(scene, left, right));
    } else {
      maps.push_back(
          estimate_adm_one_way(view0, render_view(scene, right.u, right.v), max_disp));
    }
  }
  const LinearityReport lin = check_linearity(maps, intervals, points);

  json doc;
  doc["estimator"] = a.estimator;
  doc["intervals"] = intervals;
  json rows = json::array();
  for (const PointLinearity &p : lin.points) {
    json row;
    row["x"] = p.point.x;
    row["y"] = p.point.y;
    json shifts = json::array();
    for (double s : p.shifts) {
      shifts.push_back(round_significant(s));
    }
    row["shifts"] = shifts;
    row["slope"] = round_significant(p.fit.slope);
    row["r2"] = round_significant(p.fit.r2);
    row["adjusted_r2"] = round_significant(p.fit.adjusted_r2);
    row["pcc"] = round_significant(p.fit.pcc);
    rows.push_back(row);
  }
  doc["points"] = rows;
  doc["average"] = {{"r2", round_significant(lin.mean_r2)},
                    {"adjusted_r2", round_significant(lin.mean_adjusted_r2)},
                    {"pcc", round_significant(lin.mean_pcc)}};
  write_text(a.report, doc.dump(2) + "\n");

  std::printf("%-10s %10s %12s %10s\n", "point", "R2", "adj. R2", "PCC");
  for (const PointLinearity &p : lin.points) {
    char name[32];
    std::snprintf(name, sizeof name, "(%d,%d)", p.point.x, p.point.y);
    std::printf("%-10s %10.6f %12.6f %10.6f\n", name, p.fit.r2, p.fit.adjusted_r2, p.fit.pcc);
  }
  std::printf("%-10s %10.6f %12.6f %10.6f\n", "average", lin.mean_r2, lin.mean_adjusted_r2,
              lin.mean_pcc);
  return 0;
}

struct EstimateArgs {
  std::string in;
  int row = 0;
  std::string out;
  int max_disp = 0;
};

int cmd_estimate(const EstimateArgs &a) {
  const LightField lf = load_lightfield(a.in);
  if (a.row < 0 || a.row >= lf.grid().rows() || lf.grid().cols() < 2) {
    throw Error("--row is outside the light field or the grid has one column");
  }
  const int max_disp = a.max_disp > 0 ? a.max_disp : default_max_disp(lf.width());
  const BoundaryAdm b =
      estimate_boundary_adm(lf.view(a.row, 0), lf.view(a.row, lf.grid().cols() - 1), max_disp);
  const fs::path dir = a.out;
  fs::create_directories(dir);
  save_adm(b.a_10, dir / "adm_10");
  save_adm(b.a_01, dir / "adm_01");
  std::cout << "wrote boundary maps to " << a.out << "\n";
  return 0;
}

struct EpiArgs {
  std::string in;
  std::optional<int> row;
  std::optional<int> view_row;
  std::optional<int> col;
  std::optional<int> view_col;
  int scale = 8;
  std::string out;
};

int cmd_epi(const EpiArgs &a) {
  const LightField lf = load_lightfield(a.in);
  EpiImage epi;
  if (a.row && a.view_row) {
    epi = extract_epi(lf, EpiAxis::Horizontal, *a.row, *a.view_row);
  } else if (a.col && a.view_col) {
    epi = extract_epi(lf, EpiAxis::Vertical, *a.col, *a.view_col);
  } else {
    throw Error("give either --row with --view-row or --col with --view-col");
  }
  save_png(epi_image(epi, a.scale), a.out);
  return 0;
}

int cmd_wcm_export(const std::string &in, const std::string &out, bool gray) {
  const ConfidenceMap map = load_wcm(in);
  save_rgb8(gray ? gray_wcm(map) : colorize_wcm(map), out);
  return 0;
}

int cmd_adm_export(const std::string &in, const std::string &out,
                   std::optional<double> max_magnitude) {
  save_rgb8(colorize_adm(load_adm(in), max_magnitude), out);
  return 0;
}

} // namespace

int run(const std::vector<std::string> &args) {
  CLI::App app{"Light field view synthesis toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto *generate = app.add_subcommand("generate", "Render a synthetic light field from a scene file");
  generate->add_option("--spec", gen.spec, "Scene file")->required();
  generate->add_option("--grid", gen.grid, "Angular grid RxC")->required();
  generate->add_option("--out", gen.out, "Output directory")->required();
  generate->add_option("--oracle-out", gen.oracle_out, "Directory for exact maps and masks");
  generate->add_option("--bit-depth", gen.bit_depth, "PNG bit depth")->check(CLI::IsMember({8, 16}));

  ReconstructArgs rec;
  auto *reconstruct = app.add_subcommand("reconstruct", "Dense light field from corner views");
  reconstruct->add_option("--in", rec.in, "Input light field directory")->required();
  reconstruct->add_option("--target", rec.target, "Target grid RxC")->required();
  reconstruct->add_option("--estimator", rec.estimator, "classical or oracle")
      ->check(CLI::IsMember({"classical", "oracle"}));
  reconstruct->add_option("--scene", rec.scene, "Scene file (oracle maps, ground truth)");
  reconstruct->add_flag("--no-wcm", rec.no_wcm, "Uniform 0.5 confidences");
  reconstruct->add_option("--refine", rec.refine, "Kernel file for a 4D filter pass");
  reconstruct->add_option("--out", rec.out, "Output directory")->required();
  reconstruct->add_option("--report", rec.report, "Metric report against the scene");
  reconstruct->add_option("--max-disp", rec.max_disp, "Classical search range in pixels");
  reconstruct->add_option("--sigma", rec.sigma, "Photometric confidence scale");
  reconstruct->add_option("--sigma-disparity", rec.sigma_disparity,
                          "Round-trip consistency scale in pixels");

  EvaluateArgs ev;
  auto *evaluate = app.add_subcommand("evaluate", "Score a light field against ground truth");
  evaluate->add_option("--pred", ev.pred, "Predicted light field directory")->required();
  evaluate->add_option("--gt", ev.gt, "Ground-truth light field directory")->required();
  evaluate->add_flag("--losses", ev.losses, "Also report loss terms");
  evaluate->add_flag("--include-corners", ev.include_corners, "Score corner views too");
  evaluate->add_option("--report", ev.report, "Report file")->required();
  evaluate->add_option("--max-disp", ev.max_disp, "Search range for the loss maps");

  LinearityArgs lin;
  auto *linearity = app.add_subcommand("linearity", "Shift versus aperture interval fits");
  linearity->add_option("--scene", lin.scene, "Scene file")->required();
  linearity->add_option("--intervals", lin.intervals, "Number of aperture intervals")->required();
  linearity->add_option("--points", lin.points, "Number of feature points")->required();
  linearity->add_option("--report", lin.report, "Report file")->required();
  linearity->add_option("--estimator", lin.estimator, "classical or oracle")
      ->check(CLI::IsMember({"classical", "oracle"}));
  linearity->add_option("--max-disp", lin.max_disp, "Classical search range in pixels");

  EstimateArgs est;
  auto *estimate = app.add_subcommand("estimate", "Classical boundary maps for one view row");
  estimate->add_option("--in", est.in, "Light field directory")->required();
  estimate->add_option("--row", est.row, "Grid row");
  estimate->add_option("--out", est.out, "Output directory")->required();
  estimate->add_option("--max-disp", est.max_disp, "Search range in pixels");

  EpiArgs epi;
  auto *epi_cmd = app.add_subcommand("epi", "Export an epipolar plane image");
  epi_cmd->add_option("--in", epi.in, "Light field directory")->required();
  epi_cmd->add_option("--row", epi.row, "Image row for a horizontal slice");
  epi_cmd->add_option("--view-row", epi.view_row, "Grid row for a horizontal slice");
  epi_cmd->add_option("--col", epi.col, "Image column for a vertical slice");
  epi_cmd->add_option("--view-col", epi.view_col, "Grid column for a vertical slice");
  epi_cmd->add_option("--scale", epi.scale, "Angular upscale factor");
  epi_cmd->add_option("--out", epi.out, "Output PNG")->required();

  std::string wcm_in;
  std::string wcm_out;
  bool wcm_gray = false;
  auto *wcm_cmd = app.add_subcommand("wcm-export", "Color-code a confidence map");
  wcm_cmd->add_option("--in", wcm_in, "PFM confidence map")->required();
  wcm_cmd->add_option("--out", wcm_out, "Output PNG")->required();
  wcm_cmd->add_flag("--gray", wcm_gray, "Grayscale instead of red/blue");

  std::string adm_in;
  std::string adm_out;
  std::optional<double> adm_max;
  auto *adm_cmd = app.add_subcommand("adm-export", "Color-code a disparity map");
  adm_cmd->add_option("--in", adm_in, "Map prefix (reads <prefix>_dx.pfm, <prefix>_dy.pfm)")
      ->required();
  adm_cmd->add_option("--out", adm_out, "Output PNG")->required();
  adm_cmd->add_option("--max-magnitude", adm_max, "Magnitude mapped to full saturation");

  std::vector<const char *> argv;
  argv.reserve(args.size());
  for (const std::string &s : args) {
    argv.push_back(s.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  }

  try {
    if (generate->parsed()) {
      return cmd_generate(gen);
    }
    if (reconstruct->parsed()) {
      return cmd_reconstruct(rec);
    }
    if (evaluate->parsed()) {
      return cmd_evaluate(ev);
    }
    if (linearity->parsed()) {
      return cmd_linearity(lin);
    }
    if (estimate->parsed()) {
      return cmd_estimate(est);
    }
    if (epi_cmd->parsed()) {
      return cmd_epi(epi);
    }
    if (wcm_cmd->parsed()) {
      return cmd_wcm_export(wcm_in, wcm_out, wcm_gray);
    }
    if (adm_cmd->parsed()) {
      return cmd_adm_export(adm_in, adm_out, adm_max);
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

} // namespace lfsyn::cli
