#include "s1inpaint/io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>

#include "s1inpaint/circle.hpp"

namespace s1 {

namespace {

constexpr const char* kPhaseMagic = "S1PHASE";

void put_le64(std::string& out, double v) {
  auto bits = std::bit_cast<std::uint64_t>(v);
  for (int k = 0; k < 8; ++k) {
    out.push_back(static_cast<char>(bits & 0xFFu));
    bits >>= 8;
  }
}

double get_le64(const char* p) {
  std::uint64_t bits = 0;
  for (int k = 7; k >= 0; --k) {
    bits = (bits << 8) | static_cast<unsigned char>(p[k]);
  }
  return std::bit_cast<double>(bits);
}

// Parses a decimal dimension at bytes[pos..]; advances pos.
std::size_t parse_dim(const std::string& bytes, std::size_t& pos, const char* what) {
  const std::size_t begin = pos;
  std::size_t value = 0;
  while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
    const std::size_t digit = static_cast<std::size_t>(bytes[pos] - '0');
    if (value > (std::numeric_limits<std::uint32_t>::max() - digit) / 10) {
      throw FormatError(std::string("header: ") + what + " too large at byte offset " +
                        std::to_string(begin));
    }
    value = value * 10 + digit;
    ++pos;
  }
  if (pos == begin) {
    throw FormatError(std::string("header: expected ") + what + " at byte offset " +
                      std::to_string(begin));
  }
  return value;
}

void expect_char(const std::string& bytes, std::size_t& pos, char c, const char* what) {
  if (pos >= bytes.size() || bytes[pos] != c) {
    throw FormatError(std::string("header: expected ") + what + " at byte offset " +
                      std::to_string(pos));
  }
  ++pos;
}

// PNM header tokenizer: skips whitespace and '#' comments.
std::size_t pnm_number(const std::string& bytes, std::size_t& pos, const char* what) {
  for (;;) {
    while (pos < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[pos]))) ++pos;
    if (pos < bytes.size() && bytes[pos] == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      continue;
    }
    break;
  }
  return parse_dim(bytes, pos, what);
}

}  // namespace

std::string encode_phase(const PhaseImage& x) {
  std::string out = std::string(kPhaseMagic) + ' ' + std::to_string(x.rows()) + ' ' +
                    std::to_string(x.cols()) + '\n';
  out.reserve(out.size() + 8 * x.size());
  for (double v : x.values()) put_le64(out, v);
  return out;
}

PhaseImage decode_phase(const std::string& bytes) {
  const std::size_t magic_len = std::strlen(kPhaseMagic);
  if (bytes.compare(0, magic_len, kPhaseMagic) != 0) {
    throw FormatError("header: missing S1PHASE magic at byte offset 0");
  }
  std::size_t pos = magic_len;
  expect_char(bytes, pos, ' ', "space");
  const std::size_t rows = parse_dim(bytes, pos, "row count");
  expect_char(bytes, pos, ' ', "space");
  const std::size_t cols = parse_dim(bytes, pos, "column count");
  expect_char(bytes, pos, '\n', "newline");
  if (rows == 0 || cols == 0) {
    throw FormatError("header: dimensions must be positive, got " + std::to_string(rows) +
                      "x" + std::to_string(cols));
  }

  if (rows > std::numeric_limits<std::size_t>::max() / 8 / cols) {
    throw FormatError("header: dimensions overflow");
  }
  const std::size_t header = pos;
  const std::size_t expected = rows * cols * 8;
  const std::size_t payload = bytes.size() - header;
  if (payload < expected) {
    throw FormatError("truncated payload: expected " + std::to_string(expected) +
                      " bytes after header ending at byte offset " +
                      std::to_string(header) + ", found " + std::to_string(payload));
  }
  if (payload > expected) {
    throw FormatError("trailing data at byte offset " + std::to_string(header + expected));
  }

  PhaseImage img({rows, cols});
  for (std::size_t i = 0; i < img.size(); ++i) {
    const std::size_t offset = header + 8 * i;
    const double v = get_le64(bytes.data() + offset);
    if (!(v >= -kPi && v < kPi)) {
      std::ostringstream os;
      os.precision(17);
      os << "pixel (" << i / cols << ", " << i % cols << ") at byte offset " << offset
         << " has value " << v << " outside [-pi, pi)";
      throw FormatError(os.str());
    }
    img[i] = v;
  }
  return img;
}

PhaseImage read_phase_file(const std::filesystem::path& path) {
  try {
    return decode_phase(read_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_phase_file(const std::filesystem::path& path, const PhaseImage& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= -kPi && x[i] < kPi)) {
      throw std::invalid_argument("write_phase_file: pixel " + std::to_string(i) +
                                  " is not an angle in [-pi, pi)");
    }
  }
  write_file_atomic(path, encode_phase(x));
}

std::string encode_mask(const Mask& m) {
  std::string out = "P5\n" + std::to_string(m.cols()) + ' ' + std::to_string(m.rows()) +
                    "\n255\n";
  for (PixelState s : m.values()) {
    out.push_back(static_cast<char>(s == PixelState::known ? 255 : 0));
  }
  return out;
}

Mask decode_mask(const std::string& bytes) {
  if (bytes.compare(0, 2, "P5") != 0) {
    throw FormatError("mask: missing P5 magic at byte offset 0");
  }
  std::size_t pos = 2;
  const std::size_t cols = pnm_number(bytes, pos, "width");
  const std::size_t rows = pnm_number(bytes, pos, "height");
  const std::size_t maxval = pnm_number(bytes, pos, "maxval");
  if (maxval != 255) {
    throw FormatError("mask: maxval must be 255, got " + std::to_string(maxval));
  }
  if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
    throw FormatError("mask: expected whitespace after maxval at byte offset " +
                      std::to_string(pos));
  }
  ++pos;
  if (rows == 0 || cols == 0) throw FormatError("mask: dimensions must be positive");
  const std::size_t expected = rows * cols;
  if (bytes.size() - pos < expected) {
    throw FormatError("mask: truncated payload: expected " + std::to_string(expected) +
                      " bytes from byte offset " + std::to_string(pos) + ", found " +
                      std::to_string(bytes.size() - pos));
  }
  Mask m({rows, cols});
  for (std::size_t i = 0; i < expected; ++i) {
    const auto v = static_cast<unsigned char>(bytes[pos + i]);
    if (v == 0) {
      m[i] = PixelState::unknown;
    } else if (v == 255) {
      m[i] = PixelState::known;
    } else {
      throw FormatError("mask: pixel (" + std::to_string(i / cols) + ", " +
                        std::to_string(i % cols) + ") at byte offset " +
                        std::to_string(pos + i) + " has value " + std::to_string(v) +
                        "; only 0 and 255 are allowed");
    }
  }
  return m;
}

Mask read_mask_file(const std::filesystem::path& path) {
  try {
    return decode_mask(read_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_mask_file(const std::filesystem::path& path, const Mask& m) {
  write_file_atomic(path, encode_mask(m));
}

std::uint8_t gray_level(double x) {
  const double level = std::floor((x + kPi) / kTwoPi * 256.0);
  return static_cast<std::uint8_t>(std::clamp(level, 0.0, 255.0));
}

Rgb hue_color(double x) {
  double h = (x + kPi) / kTwoPi;  // [0, 1)
  h = std::clamp(h, 0.0, 1.0) * 6.0;
  const int sector = std::min(static_cast<int>(std::floor(h)), 5);
  const double t = h - sector;
  const double q = 1.0 - t;
  double r = 0, g = 0, b = 0;
  switch (sector) {
    case 0: r = 1; g = t; b = 0; break;
    case 1: r = q; g = 1; b = 0; break;
    case 2: r = 0; g = 1; b = t; break;
    case 3: r = 0; g = q; b = 1; break;
    case 4: r = t; g = 0; b = 1; break;
    default: r = 1; g = 0; b = q; break;
  }
  auto byte = [](double v) { return static_cast<std::uint8_t>(std::lround(v * 255.0)); };
  return {byte(r), byte(g), byte(b)};
}

std::string render(const PhaseImage& x, RenderStyle style) {
  const std::string dims = std::to_string(x.cols()) + ' ' + std::to_string(x.rows());
  std::string out;
  if (style == RenderStyle::gray) {
    out = "P5\n" + dims + "\n255\n";
    for (double v : x.values()) out.push_back(static_cast<char>(gray_level(v)));
  } else {
    out = "P6\n" + dims + "\n255\n";
    for (double v : x.values()) {
      const Rgb c = hue_color(v);
      out.push_back(static_cast<char>(c.r));
      out.push_back(static_cast<char>(c.g));
      out.push_back(static_cast<char>(c.b));
    }
  }
  return out;
}

void write_render(const std::filesystem::path& path, const PhaseImage& x,
                  RenderStyle style) {
  write_file_atomic(path, render(x, style));
}

void write_file_atomic(const std::filesystem::path& path, const std::string& bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw IoError("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename " + tmp.string() + " to " + path.string());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read from " + path.string() + " failed");
  return ss.str();
}

}  // namespace s1
