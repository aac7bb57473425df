#include "lfsyn/io.hpp"

#include "lfsyn/metrics.hpp"
#include "lfsyn/parallel.hpp"

#include <json.hpp>
#include <png.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cerrno>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>

namespace lfsyn {

using ordered_json = nlohmann::ordered_json;

namespace {

struct FileCloser {
  void operator()(std::FILE *f) const noexcept {
    if (f) {
      std::fclose(f);
    }
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const fs::path &path, const char *mode) {
  FilePtr file(std::fopen(path.string().c_str(), mode));
  if (!file) {
    throw Error("cannot open " + path.string() + ": " + std::strerror(errno));
  }
  return file;
}

struct RawPng {
  png_uint_32 width = 0;
  png_uint_32 height = 0;
  int channels = 0;
  int bit_depth = 0;
  std::vector<unsigned char> bytes;
  std::vector<png_bytep> rows;
  char message[256] = {};
};

void png_error_to_buffer(png_structp png, png_const_charp msg) {
  auto *raw = static_cast<RawPng *>(png_get_error_ptr(png));
  std::snprintf(raw->message, sizeof(raw->message), "%s", msg);
  png_longjmp(png, 1);
}

void png_warning_ignored(png_structp, png_const_charp) {}

// Plain C-style reader: nothing with a destructor lives in this frame.
bool read_png_raw(std::FILE *file, RawPng *raw) {
  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, raw, png_error_to_buffer, png_warning_ignored);
  if (!png) {
    std::snprintf(raw->message, sizeof(raw->message), "out of memory");
    return false;
  }
  png_infop info = png_create_info_struct(png);
  if (!info || setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    return false;
  }
  png_init_io(png, file);
  png_read_info(png, info);

  const int color_type = png_get_color_type(png, info);
  if (color_type == PNG_COLOR_TYPE_PALETTE) {
    png_set_palette_to_rgb(png);
  }
  if (color_type == PNG_COLOR_TYPE_GRAY && png_get_bit_depth(png, info) < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  if (color_type & PNG_COLOR_MASK_ALPHA) {
    png_set_strip_alpha(png);
  }
  png_read_update_info(png, info);

  raw->width = png_get_image_width(png, info);
  raw->height = png_get_image_height(png, info);
  raw->channels = png_get_channels(png, info);
  raw->bit_depth = png_get_bit_depth(png, info);
  const std::size_t stride = png_get_rowbytes(png, info);
  raw->bytes.resize(stride * raw->height);
  raw->rows.resize(raw->height);
  for (png_uint_32 y = 0; y < raw->height; ++y) {
    raw->rows[y] = raw->bytes.data() + y * stride;
  }
  png_read_image(png, raw->rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return true;
}

struct PngWriteJob {
  int width;
  int height;
  int channels;
  int bit_depth;
  const unsigned char *bytes; ///< big-endian samples for 16-bit
  char message[256];
};

int color_type_for(int channels) {
  switch (channels) {
  case 1: return PNG_COLOR_TYPE_GRAY;
  case 2: return PNG_COLOR_TYPE_GRAY_ALPHA;
  case 4: return PNG_COLOR_TYPE_RGB_ALPHA;
  default: return PNG_COLOR_TYPE_RGB;
  }
}

bool write_png_raw(std::FILE *file, PngWriteJob *job) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, job, nullptr, nullptr);
  if (!png) {
    std::snprintf(job->message, sizeof(job->message), "out of memory");
    return false;
  }
  png_infop info = png_create_info_struct(png);
  if (!info || setjmp(png_jmpbuf(png))) {
    std::snprintf(job->message, sizeof(job->message), "libpng write failure");
    png_destroy_write_struct(&png, info ? &info : nullptr);
    return false;
  }
  png_init_io(png, file);
  png_set_IHDR(png, info, static_cast<png_uint_32>(job->width),
               static_cast<png_uint_32>(job->height), job->bit_depth,
               color_type_for(job->channels), PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  const std::size_t stride =
      static_cast<std::size_t>(job->width) * job->channels * (job->bit_depth / 8);
  for (int y = 0; y < job->height; ++y) {
    png_write_row(png, job->bytes + y * stride);
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return true;
}

void write_png_bytes(const fs::path &path, int width, int height, int channels, int bit_depth,
                     const std::vector<unsigned char> &bytes) {
  FilePtr file = open_file(path, "wb");
  PngWriteJob job{width, height, channels, bit_depth, bytes.data(), {}};
  if (!write_png_raw(file.get(), &job)) {
    throw Error("failed to write " + path.string() + ": " + job.message);
  }
}

} // namespace

ViewImage load_png(const fs::path &path) {
  FilePtr file = open_file(path, "rb");
  RawPng raw;
  if (!read_png_raw(file.get(), &raw)) {
    throw Error("failed to decode PNG " + path.string() + ": " + raw.message);
  }
  if (raw.channels != 1 && raw.channels != 3) {
    throw Error(path.string() + ": unsupported channel count " + std::to_string(raw.channels));
  }
  ViewImage image(static_cast<int>(raw.width), static_cast<int>(raw.height), raw.channels);
  auto &data = image.data();
  if (raw.bit_depth == 16) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      const unsigned value = (raw.bytes[2 * i] << 8) | raw.bytes[2 * i + 1];
      data[i] = value / 65535.0;
    }
  } else {
    for (std::size_t i = 0; i < data.size(); ++i) {
      data[i] = raw.bytes[i] / 255.0;
    }
  }
  return image;
}

void save_png(const ViewImage &image, const fs::path &path, int bit_depth) {
  if (bit_depth != 8 && bit_depth != 16) {
    throw Error("PNG bit depth must be 8 or 16, got " + std::to_string(bit_depth));
  }
  const auto &data = image.data();
  std::vector<unsigned char> bytes(data.size() * static_cast<std::size_t>(bit_depth / 8));
  const double peak = bit_depth == 16 ? 65535.0 : 255.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double clamped = std::isfinite(data[i]) ? std::clamp(data[i], 0.0, 1.0) : 0.0;
    const auto q = static_cast<unsigned>(std::lround(clamped * peak));
    if (bit_depth == 16) {
      bytes[2 * i] = static_cast<unsigned char>(q >> 8);
      bytes[2 * i + 1] = static_cast<unsigned char>(q & 0xFF);
    } else {
      bytes[i] = static_cast<unsigned char>(q);
    }
  }
  write_png_bytes(path, image.width(), image.height(), image.channels(), bit_depth, bytes);
}

void save_png_rgb8(int width, int height, int channels, const std::vector<unsigned char> &pixels,
                   const fs::path &path) {
  if (channels < 1 || channels > 4) {
    throw Error("save_png_rgb8: channels must be 1 to 4");
  }
  if (pixels.size() != static_cast<std::size_t>(width) * height * channels) {
    throw Error("save_png_rgb8: buffer size does not match the image shape");
  }
  write_png_bytes(path, width, height, channels, 8, pixels);
}

std::string view_file_name(int row, int col) {
  char name[64];
  std::snprintf(name, sizeof(name), "view_%02d_%02d.png", row, col);
  return name;
}

LightFieldMetadata load_metadata(const fs::path &dir) {
  const fs::path path = dir / kLightFieldMetadataFile;
  if (!fs::exists(path)) {
    throw Error("missing light field metadata " + path.string());
  }
  LightFieldMetadata meta;
  try {
    const auto doc = nlohmann::json::parse(read_text(path));
    meta.rows = doc.at("rows").get<int>();
    meta.cols = doc.at("cols").get<int>();
    meta.width = doc.at("width").get<int>();
    meta.height = doc.at("height").get<int>();
    meta.channels = doc.at("channels").get<int>();
    meta.bit_depth = doc.at("bit_depth").get<int>();
    if (doc.contains("baseline_px") && !doc["baseline_px"].is_null()) {
      meta.baseline_px = doc["baseline_px"].get<double>();
    }
    meta.source = doc.value("source", std::string("external"));
  } catch (const nlohmann::json::exception &e) {
    throw Error("malformed metadata " + path.string() + ": " + e.what());
  }
  if (meta.rows < 1 || meta.cols < 1 || meta.width < 1 || meta.height < 1) {
    throw Error("malformed metadata " + path.string() + ": non-positive dimension");
  }
  if (meta.channels != 1 && meta.channels != 3) {
    throw Error("malformed metadata " + path.string() + ": channels must be 1 or 3");
  }
  if (meta.bit_depth != 8 && meta.bit_depth != 16) {
    throw Error("malformed metadata " + path.string() + ": bit_depth must be 8 or 16");
  }
  if (meta.source != "synthetic" && meta.source != "external") {
    throw Error("malformed metadata " + path.string() + ": unknown source '" + meta.source + "'");
  }
  return meta;
}

LightField load_lightfield(const fs::path &dir) {
  const LightFieldMetadata meta = load_metadata(dir);
  const AngularGrid grid(meta.rows, meta.cols);
  for (int r = 0; r < meta.rows; ++r) {
    for (int c = 0; c < meta.cols; ++c) {
      const fs::path file = dir / view_file_name(r, c);
      if (!fs::exists(file)) {
        throw Error("light field is missing view file " + file.string());
      }
    }
  }
  std::vector<ViewImage> views(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const int r = static_cast<int>(i) / meta.cols;
    const int c = static_cast<int>(i) % meta.cols;
    const fs::path file = dir / view_file_name(r, c);
    ViewImage view = load_png(file);
    if (view.width() != meta.width || view.height() != meta.height ||
        view.channels() != meta.channels) {
      throw Error("view file " + file.string() + " is " + std::to_string(view.width()) + "x" +
                  std::to_string(view.height()) + "x" + std::to_string(view.channels()) +
                  ", metadata declares " + std::to_string(meta.width) + "x" +
                  std::to_string(meta.height) + "x" + std::to_string(meta.channels));
    }
    views[i] = std::move(view);
  });
  return LightField(grid, std::move(views));
}

void save_lightfield(const LightField &lf, const fs::path &dir, int bit_depth,
                     std::optional<double> baseline_px, const std::string &source) {
  fs::create_directories(dir);
  for (int r = 0; r < lf.grid().rows(); ++r) {
    for (int c = 0; c < lf.grid().cols(); ++c) {
      save_png(lf.view(r, c), dir / view_file_name(r, c), bit_depth);
    }
  }
  ordered_json doc;
  doc["rows"] = lf.grid().rows();
  doc["cols"] = lf.grid().cols();
  doc["width"] = lf.width();
  doc["height"] = lf.height();
  doc["channels"] = lf.channels();
  doc["bit_depth"] = bit_depth;
  doc["baseline_px"] = baseline_px ? ordered_json(*baseline_px) : ordered_json(nullptr);
  doc["source"] = source;
  write_text(dir / kLightFieldMetadataFile, doc.dump(2) + "\n");
}

void save_pfm(const FloatImage &image, const fs::path &path) {
  if (image.channels != 1 && image.channels != 3) {
    throw Error("PFM supports 1 or 3 channels");
  }
  if (image.data.size() != static_cast<std::size_t>(image.width) * image.height * image.channels) {
    throw Error("PFM data size does not match the declared shape");
  }
  std::ostringstream header;
  header << (image.channels == 1 ? "Pf" : "PF") << '\n'
         << image.width << ' ' << image.height << '\n'
         << "-1.0" << '\n';
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot open " + path.string() + " for writing");
  }
  const std::string h = header.str();
  out.write(h.data(), static_cast<std::streamsize>(h.size()));
  const std::size_t row_len = static_cast<std::size_t>(image.width) * image.channels;
  std::vector<unsigned char> row(row_len * 4);
  for (int y = image.height - 1; y >= 0; --y) {
    for (std::size_t i = 0; i < row_len; ++i) {
      auto bits = std::bit_cast<std::uint32_t>(image.data[y * row_len + i]);
      for (int b = 0; b < 4; ++b) {
        row[i * 4 + b] = static_cast<unsigned char>((bits >> (8 * b)) & 0xFF);
      }
    }
    out.write(reinterpret_cast<const char *>(row.data()), static_cast<std::streamsize>(row.size()));
  }
  if (!out) {
    throw Error("failed writing " + path.string());
  }
}

FloatImage load_pfm(const fs::path &path) {
  const std::string bytes = read_text(path);
  std::size_t pos = 0;
  auto next_token = [&]() {
    while (pos < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[pos]))) {
      ++pos;
    }
    const std::size_t start = pos;
    while (pos < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
      ++pos;
    }
    if (start == pos) {
      throw Error("malformed PFM header in " + path.string());
    }
    return bytes.substr(start, pos - start);
  };

  FloatImage image;
  const std::string magic = next_token();
  if (magic == "Pf") {
    image.channels = 1;
  } else if (magic == "PF") {
    image.channels = 3;
  } else {
    throw Error("malformed PFM header in " + path.string() + ": bad magic '" + magic + "'");
  }
  double scale = 0.0;
  try {
    image.width = std::stoi(next_token());
    image.height = std::stoi(next_token());
    scale = std::stod(next_token());
  } catch (const std::logic_error &) {
    throw Error("malformed PFM header in " + path.string());
  }
  if (image.width < 1 || image.height < 1 || scale == 0.0 || !std::isfinite(scale)) {
    throw Error("malformed PFM header in " + path.string());
  }
  if (scale > 0.0) {
    throw Error(path.string() +
                ": big-endian PFM (positive scale) is not supported; re-export as little-endian");
  }
  if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
    throw Error("malformed PFM header in " + path.string());
  }
  ++pos; // single whitespace byte before the raster

  const std::size_t row_len = static_cast<std::size_t>(image.width) * image.channels;
  const std::size_t expected = row_len * image.height * 4;
  if (bytes.size() - pos < expected) {
    throw Error(path.string() + ": truncated PFM raster");
  }
  image.data.resize(row_len * image.height);
  for (int file_row = 0; file_row < image.height; ++file_row) {
    const int y = image.height - 1 - file_row;
    for (std::size_t i = 0; i < row_len; ++i) {
      std::uint32_t bits = 0;
      for (int b = 0; b < 4; ++b) {
        bits |= static_cast<std::uint32_t>(static_cast<unsigned char>(
                    bytes[pos + (file_row * row_len + i) * 4 + b]))
                << (8 * b);
      }
      const float value = std::bit_cast<float>(bits);
      if (!std::isfinite(value)) {
        throw Error(path.string() + ": non-finite sample at (" + std::to_string(i / image.channels) +
                    ", " + std::to_string(y) + ")");
      }
      image.data[y * row_len + i] = value;
    }
  }
  return image;
}

namespace {

FloatImage channel_to_float(const Raster &raster, int channel) {
  FloatImage image;
  image.width = raster.width();
  image.height = raster.height();
  image.channels = 1;
  image.data.resize(raster.pixel_count());
  for (int y = 0; y < raster.height(); ++y) {
    for (int x = 0; x < raster.width(); ++x) {
      image.data[static_cast<std::size_t>(y) * raster.width() + x] =
          static_cast<float>(raster.at(x, y, channel));
    }
  }
  return image;
}

fs::path with_suffix(const fs::path &prefix, const char *suffix) {
  return fs::path(prefix.string() + suffix);
}

FloatImage load_single_channel(const fs::path &path) {
  FloatImage image = load_pfm(path);
  if (image.channels != 1) {
    throw Error(path.string() + ": expected a single-channel (Pf) map");
  }
  return image;
}

} // namespace

void save_adm(const DisparityMap &adm, const fs::path &prefix) {
  save_pfm(channel_to_float(adm, 0), with_suffix(prefix, "_dx.pfm"));
  save_pfm(channel_to_float(adm, 1), with_suffix(prefix, "_dy.pfm"));
}

DisparityMap load_adm(const fs::path &prefix) {
  const FloatImage dx = load_single_channel(with_suffix(prefix, "_dx.pfm"));
  const FloatImage dy = load_single_channel(with_suffix(prefix, "_dy.pfm"));
  if (dx.width != dy.width || dx.height != dy.height) {
    throw Error(prefix.string() + ": _dx and _dy maps differ in size");
  }
  DisparityMap adm(dx.width, dx.height);
  for (int y = 0; y < dx.height; ++y) {
    for (int x = 0; x < dx.width; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * dx.width + x;
      adm.dx(x, y) = dx.data[i];
      adm.dy(x, y) = dy.data[i];
    }
  }
  return adm;
}

void save_wcm(const ConfidenceMap &map, const fs::path &path) {
  save_pfm(channel_to_float(map, 0), path);
}

ConfidenceMap load_wcm(const fs::path &path) {
  const FloatImage image = load_single_channel(path);
  ConfidenceMap map(image.width, image.height);
  for (std::size_t i = 0; i < image.data.size(); ++i) {
    map.data()[i] = image.data[i];
  }
  if (!map.in_unit_range()) {
    throw Error(path.string() + ": confidence values must lie in [0, 1]");
  }
  return map;
}

namespace {

const char *shape_name(MaskShape shape) {
  switch (shape) {
  case MaskShape::Full:
    return "full";
  case MaskShape::Rect:
    return "rect";
  case MaskShape::Disc:
    return "disc";
  }
  return "full";
}

MaskSpec parse_mask(const nlohmann::json &j) {
  MaskSpec mask;
  const std::string shape = j.value("shape", std::string("full"));
  if (shape == "full") {
    mask.shape = MaskShape::Full;
  } else if (shape == "rect") {
    mask.shape = MaskShape::Rect;
    mask.x0 = j.at("x0").get<double>();
    mask.y0 = j.at("y0").get<double>();
    mask.x1 = j.at("x1").get<double>();
    mask.y1 = j.at("y1").get<double>();
  } else if (shape == "disc") {
    mask.shape = MaskShape::Disc;
    mask.cx = j.at("cx").get<double>();
    mask.cy = j.at("cy").get<double>();
    mask.radius = j.at("radius").get<double>();
  } else {
    throw Error("scene: unknown mask shape '" + shape + "'");
  }
  return mask;
}

TextureSpec parse_texture(const nlohmann::json &j) {
  TextureSpec tex;
  tex.seed = j.value("seed", tex.seed);
  tex.min_wavelength = j.value("min_wavelength", tex.min_wavelength);
  tex.max_wavelength = j.value("max_wavelength", tex.max_wavelength);
  tex.waves = j.value("waves", tex.waves);
  tex.blotches = j.value("blotches", tex.blotches);
  tex.blotch_sigma = j.value("blotch_sigma", tex.blotch_sigma);
  if (j.contains("base")) {
    tex.base = j.at("base").get<std::array<double, 3>>();
  }
  return tex;
}

} // namespace

SceneSpec parse_scene(const std::string &text) {
  SceneSpec spec;
  try {
    const auto doc = nlohmann::json::parse(text);
    if (!doc.contains("seed")) {
      throw Error("scene: the 'seed' field is mandatory");
    }
    spec.seed = doc.at("seed").get<std::uint64_t>();
    spec.width = doc.at("width").get<int>();
    spec.height = doc.at("height").get<int>();
    spec.channels = doc.value("channels", 3);
    spec.baseline = doc.value("baseline", 4.0);
    for (const auto &layer_doc : doc.at("layers")) {
      LayerSpec layer;
      layer.alpha = layer_doc.at("alpha").get<double>();
      if (layer_doc.contains("texture")) {
        layer.texture = parse_texture(layer_doc["texture"]);
      }
      if (layer_doc.contains("mask")) {
        layer.mask = parse_mask(layer_doc["mask"]);
      }
      spec.layers.push_back(layer);
    }
  } catch (const nlohmann::json::exception &e) {
    throw Error(std::string("scene: malformed document: ") + e.what());
  }
  spec.validate();
  return spec;
}

std::string format_scene(const SceneSpec &spec) {
  ordered_json doc;
  doc["width"] = spec.width;
  doc["height"] = spec.height;
  doc["channels"] = spec.channels;
  doc["baseline"] = spec.baseline;
  doc["seed"] = spec.seed;
  doc["layers"] = ordered_json::array();
  for (const LayerSpec &layer : spec.layers) {
    ordered_json l;
    l["alpha"] = layer.alpha;
    ordered_json tex;
    tex["seed"] = layer.texture.seed;
    tex["min_wavelength"] = layer.texture.min_wavelength;
    tex["max_wavelength"] = layer.texture.max_wavelength;
    tex["waves"] = layer.texture.waves;
    tex["blotches"] = layer.texture.blotches;
    tex["blotch_sigma"] = layer.texture.blotch_sigma;
    if (layer.texture.base) {
      tex["base"] = *layer.texture.base;
    }
    l["texture"] = tex;
    ordered_json mask;
    mask["shape"] = shape_name(layer.mask.shape);
    if (layer.mask.shape == MaskShape::Rect) {
      mask["x0"] = layer.mask.x0;
      mask["y0"] = layer.mask.y0;
      mask["x1"] = layer.mask.x1;
      mask["y1"] = layer.mask.y1;
    } else if (layer.mask.shape == MaskShape::Disc) {
      mask["cx"] = layer.mask.cx;
      mask["cy"] = layer.mask.cy;
      mask["radius"] = layer.mask.radius;
    }
    l["mask"] = mask;
    doc["layers"].push_back(l);
  }
  return doc.dump(2) + "\n";
}

SceneSpec load_scene(const fs::path &path) {
  try {
    return parse_scene(read_text(path));
  } catch (const Error &e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void save_scene(const SceneSpec &spec, const fs::path &path) {
  write_text(path, format_scene(spec));
}

double round_significant(double value) {
  if (!std::isfinite(value) || value == 0.0) {
    return value;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return std::strtod(buf, nullptr);
}

namespace {

ordered_json optional_number(const std::optional<double> &value) {
  if (!value) {
    return nullptr;
  }
  return round_significant(*value);
}

double capped_psnr(double db) { return round_significant(std::min(db, kPsnrReportCap)); }

} // namespace

std::string format_report(const MetricReport &report) {
  ordered_json doc;
  doc["psnr_db"] = capped_psnr(report.psnr_db);
  doc["ssim"] = round_significant(report.ssim);
  doc["l_r"] = optional_number(report.l_r);
  doc["l_w"] = optional_number(report.l_w);
  doc["l_s"] = optional_number(report.l_s);
  doc["l_total"] = optional_number(report.l_total);
  doc["perceptual"] = "n/a";
  doc["per_view"] = ordered_json::array();
  for (const ViewScore &score : report.per_view) {
    ordered_json v;
    v["row"] = score.row;
    v["col"] = score.col;
    v["psnr_db"] = capped_psnr(score.psnr_db);
    v["ssim"] = round_significant(score.ssim);
    doc["per_view"].push_back(v);
  }
  return doc.dump(2) + "\n";
}

void write_text(const fs::path &path, const std::string &text) {
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot open " + path.string() + " for writing");
  }
  out << text;
  if (!out) {
    throw Error("failed writing " + path.string());
  }
}

std::string read_text(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

} // namespace lfsyn
