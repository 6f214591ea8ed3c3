#include "ifslab/ppm.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <string>

#include "ifslab/errors.hpp"

namespace ifslab {

namespace {

std::vector<std::uint8_t> header(int width, int height) {
  const std::string h = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  return {h.begin(), h.end()};
}

}  // namespace

std::uint8_t gray_level(std::int32_t escape, int depth) {
  if (escape <= 0 || depth <= 0) return 0;
  const long v = std::lround(255.0 * static_cast<double>(escape) / depth);
  return static_cast<std::uint8_t>(std::clamp(v, 0L, 255L));
}

std::vector<std::uint8_t> encode_ppm(const EscapeGrid& grid) {
  std::vector<std::uint8_t> out = header(grid.width, grid.height);
  out.reserve(out.size() + grid.values.size() * 3);
  for (std::int32_t v : grid.values) {
    const std::uint8_t g = gray_level(v, grid.depth);
    out.insert(out.end(), {g, g, g});
  }
  return out;
}

Raster::Raster(int width, int height, Window view, Rgb background)
    : width_(width), height_(height), view_(view) {
  if (width < 1 || height < 1) throw Error(ErrorKind::invalid_window, "raster needs at least one pixel");
  if (!(view.x0 < view.x1) || !(view.y0 < view.y1)) throw Error(ErrorKind::invalid_window, "empty view");
  pixels_.resize(static_cast<std::size_t>(width) * height * 3);
  for (std::size_t k = 0; k < pixels_.size(); k += 3) {
    pixels_[k] = background[0];
    pixels_[k + 1] = background[1];
    pixels_[k + 2] = background[2];
  }
}

bool Raster::locate(Complex z, int& i, int& j) const {
  const double u = (z.real() - view_.x0) / (view_.x1 - view_.x0);
  const double v = (view_.y1 - z.imag()) / (view_.y1 - view_.y0);
  if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0)) return false;
  i = std::min(static_cast<int>(u * width_), width_ - 1);
  j = std::min(static_cast<int>(v * height_), height_ - 1);
  return true;
}

void Raster::set(int i, int j, Rgb color) {
  if (i < 0 || j < 0 || i >= width_ || j >= height_) return;
  const std::size_t k = (static_cast<std::size_t>(j) * width_ + i) * 3;
  pixels_[k] = color[0];
  pixels_[k + 1] = color[1];
  pixels_[k + 2] = color[2];
}

Rgb Raster::get(int i, int j) const {
  const std::size_t k = (static_cast<std::size_t>(j) * width_ + i) * 3;
  return {pixels_[k], pixels_[k + 1], pixels_[k + 2]};
}

void Raster::plot(Complex z, Rgb color) {
  int i = 0, j = 0;
  if (locate(z, i, j)) set(i, j, color);
}

void Raster::circle(const Disk& disk, Rgb color) {
  if (!(disk.radius > 0.0)) return;
  const double px = std::min((view_.x1 - view_.x0) / width_, (view_.y1 - view_.y0) / height_);
  const int steps = std::clamp(static_cast<int>(8.0 * disk.radius / px), 16, 20000);
  for (int s = 0; s < steps; ++s) {
    plot(disk.center + std::polar(disk.radius, 2.0 * std::numbers::pi * s / steps), color);
  }
}

std::vector<std::uint8_t> Raster::encode() const {
  std::vector<std::uint8_t> out = header(width_, height_);
  out.insert(out.end(), pixels_.begin(), pixels_.end());
  return out;
}

void write_binary_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io_error, "cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out.flush()) throw Error(ErrorKind::io_error, "write to '" + path + "' failed");
}

}  // namespace ifslab
