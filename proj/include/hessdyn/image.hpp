#pragma once
// Minimal raster image with a binary portable-pixmap (P6) writer.

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hessdyn {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
};

struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  ///< row-major RGB triples

  Image() = default;
  Image(int w, int h) : width(w), height(h) {
    if (w < 1 || h < 1) throw std::invalid_argument("image dimensions must be positive");
    pixels.assign(static_cast<size_t>(w) * static_cast<size_t>(h) * 3, 0);
  }

  void set(int x, int y, Rgb c) {
    size_t i = 3 * (static_cast<size_t>(y) * static_cast<size_t>(width) +
                    static_cast<size_t>(x));
    pixels[i] = c.r;
    pixels[i + 1] = c.g;
    pixels[i + 2] = c.b;
  }
};

/// Binary P6 with a fixed header layout, so equal pixel data gives
/// byte-identical files.
inline void write_ppm(const Image& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
  if (!out) throw std::runtime_error("short write on: " + path);
}

}  // namespace hessdyn
