#pragma once

// File formats.
//
// Phase file: the ASCII line "S1PHASE <rows> <cols>\n" followed by rows*cols
// little-endian IEEE-754 doubles in row-major order, each in [-pi, pi).
//
// Mask file: binary PGM (P5, maxval 255); 0 = unknown, 255 = known.
//
// Renders: binary PGM (gray) or PPM (hue wheel).

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "s1inpaint/image.hpp"

namespace s1 {

/// Malformed or inconsistent file contents.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem failures (open, write, rename).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string encode_phase(const PhaseImage& x);
PhaseImage decode_phase(const std::string& bytes);

PhaseImage read_phase_file(const std::filesystem::path& path);
void write_phase_file(const std::filesystem::path& path, const PhaseImage& x);

std::string encode_mask(const Mask& m);
Mask decode_mask(const std::string& bytes);

Mask read_mask_file(const std::filesystem::path& path);
void write_mask_file(const std::filesystem::path& path, const Mask& m);

enum class RenderStyle { gray, hue };

/// Gray level floor((x + pi) / (2 pi) * 256), clamped to 255.
std::uint8_t gray_level(double x);

struct Rgb {
  std::uint8_t r, g, b;
};

/// Phase mapped to the HSV hue wheel at full saturation and value.
Rgb hue_color(double x);

/// Encoded PGM (gray) or PPM (hue) bytes.
std::string render(const PhaseImage& x, RenderStyle style);
void write_render(const std::filesystem::path& path, const PhaseImage& x,
                  RenderStyle style);

/// Writes `bytes` to `path` via a temporary file in the same directory and a
/// rename, so readers never see a partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& bytes);
std::string read_file(const std::filesystem::path& path);

}  // namespace s1
