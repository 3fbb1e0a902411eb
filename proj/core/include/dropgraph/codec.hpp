#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dropgraph/image.hpp"

namespace dropgraph {

enum class Codec { kPng, kJpeg };

const char* to_string(Codec codec);
/// Throws kUnsupportedCodec for anything but "png" / "jpeg" / "jpg".
Codec parse_codec(std::string_view name);

/// Pinned encoder settings; recorded verbatim in reports.
struct PngSettings {
  int compression_level = 6;
  int filter = 0;  // PNG filter type None, adaptive filtering off
};

struct JpegSettings {
  int quality = 90;
  bool baseline = true;
  // 4:4:4; a single grayscale component is never subsampled.
};

std::vector<std::uint8_t> encode_png_gray(const Raster<std::uint8_t>& gray,
                                          const PngSettings& settings = {});
std::vector<std::uint8_t> encode_jpeg_gray(const Raster<std::uint8_t>& gray,
                                           const JpegSettings& settings = {});

/// Decodes PNG or JPEG (sniffed from the signature) into 8-bit RGB.
/// Grayscale is replicated across channels; alpha is dropped.
/// Throws kDecode on malformed data.
ColorImage decode_image(std::span<const std::uint8_t> bytes);
ColorImage read_image(const std::filesystem::path& path);

/// Writes an RGB PNG (used for synthetic frames and debugging renders).
void write_png_rgb(const std::filesystem::path& path, const ColorImage& img);
void write_png_gray(const std::filesystem::path& path, const Raster<std::uint8_t>& gray);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);

/// Lowercase hex SHA-256 of a byte buffer.
std::string sha256_hex(std::span<const std::uint8_t> bytes);

}  // namespace dropgraph
