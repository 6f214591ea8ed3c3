#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ifslab/numerics.hpp"
#include "ifslab/paramspace.hpp"

namespace ifslab {

using Rgb = std::array<std::uint8_t, 3>;

/// 0 for survivors, otherwise round(255 * escape / depth).
std::uint8_t gray_level(std::int32_t escape, int depth);

/// Binary P6 image of an escape grid, gray triplets, top row first.
std::vector<std::uint8_t> encode_ppm(const EscapeGrid& grid);

/// RGB canvas over a rectangle of the plane, for attractor plots.
class Raster {
 public:
  Raster(int width, int height, Window view, Rgb background = {255, 255, 255});

  int width() const { return width_; }
  int height() const { return height_; }
  const Window& view() const { return view_; }

  /// Pixel containing z, or false when z is outside the view.
  bool locate(Complex z, int& i, int& j) const;

  void set(int i, int j, Rgb color);
  Rgb get(int i, int j) const;
  void plot(Complex z, Rgb color);
  /// Circle outline, sampled finely enough to leave no gaps.
  void circle(const Disk& disk, Rgb color);

  std::vector<std::uint8_t> encode() const;

 private:
  int width_;
  int height_;
  Window view_;
  std::vector<std::uint8_t> pixels_;
};

/// Throws ErrorKind::io_error.
void write_binary_file(const std::string& path, const std::vector<std::uint8_t>& bytes);

}  // namespace ifslab
