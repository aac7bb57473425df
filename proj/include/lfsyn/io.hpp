#pragma once

#include "lfsyn/core.hpp"
#include "lfsyn/scene.hpp"
#include "lfsyn/warp.hpp"
#include "lfsyn/wcm.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace lfsyn {

namespace fs = std::filesystem;

// ---- PNG ---------------------------------------------------------------

/// Loads an 8- or 16-bit gray/RGB PNG (alpha is dropped) as normalized radiance.
ViewImage load_png(const fs::path &path);

/// Quantizes to the given bit depth (8 or 16) after clamping to [0, 1].
void save_png(const ViewImage &image, const fs::path &path, int bit_depth = 8);

/// Raw 8-bit RGB/gray buffer writer for visualizations.
void save_png_rgb8(int width, int height, int channels, const std::vector<unsigned char> &pixels,
                   const fs::path &path);

// ---- light field directories --------------------------------------------

struct LightFieldMetadata {
  int rows = 0;
  int cols = 0;
  int width = 0;
  int height = 0;
  int channels = 0;
  int bit_depth = 8;
  std::optional<double> baseline_px;
  std::string source = "synthetic"; ///< "synthetic" or "external"
};

inline constexpr const char *kLightFieldMetadataFile = "lightfield.json";

/// "view_RR_CC.png" with zero-padded row and column.
std::string view_file_name(int row, int col);

LightFieldMetadata load_metadata(const fs::path &dir);
LightField load_lightfield(const fs::path &dir);

/// Writes views plus the metadata document; creates the directory.
void save_lightfield(const LightField &lf, const fs::path &dir, int bit_depth = 8,
                     std::optional<double> baseline_px = std::nullopt,
                     const std::string &source = "synthetic");

// ---- PFM float maps ---------------------------------------------------------

struct FloatImage {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<float> data; ///< row-major, top row first
};

/// Little-endian PFM ("Pf" gray or "PF" color); rows are stored bottom-up on disk.
void save_pfm(const FloatImage &image, const fs::path &path);

/// Rejects big-endian files, malformed headers, truncated data and non-finite samples.
FloatImage load_pfm(const fs::path &path);

/// Writes `<prefix>_dx.pfm` and `<prefix>_dy.pfm` at single precision.
void save_adm(const DisparityMap &adm, const fs::path &prefix);
DisparityMap load_adm(const fs::path &prefix);

void save_wcm(const ConfidenceMap &map, const fs::path &path);
ConfidenceMap load_wcm(const fs::path &path);

// ---- scene specs ------------------------------------------------------------------

SceneSpec parse_scene(const std::string &text);
std::string format_scene(const SceneSpec &spec);
SceneSpec load_scene(const fs::path &path);
void save_scene(const SceneSpec &spec, const fs::path &path);

// ---- metric reports ---------------------------------------------------------------

struct ViewScore {
  int row = 0;
  int col = 0;
  double psnr_db = 0.0;
  double ssim = 0.0;
};

struct MetricReport {
  double psnr_db = 0.0;
  double ssim = 0.0;
  std::optional<double> l_r;
  std::optional<double> l_w;
  std::optional<double> l_s;
  std::optional<double> l_total;
  std::vector<ViewScore> per_view;
};

/// Rounds to 6 significant digits.
double round_significant(double value);

/// Stable structured text: fixed field names, 6 significant digits, PSNR
/// capped at kPsnrReportCap, the perceptual term marked "n/a".
std::string format_report(const MetricReport &report);
void write_text(const fs::path &path, const std::string &text);
std::string read_text(const fs::path &path);

} // namespace lfsyn
