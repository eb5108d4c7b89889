#pragma once

#include <filesystem>

#include "samf/image.hpp"

namespace samf {

/// Decodes an 8- or 16-bit PNG/JPEG into [0,1] RGB planes. Single-channel
/// files are replicated into all three planes; alpha is dropped.
ColorImage read_image(const std::filesystem::path& path);

/// Writes 8-bit output; the format follows the extension. Images whose
/// channels are identical are written single-channel.
void write_image(const std::filesystem::path& path, const ColorImage& image);
void write_image(const std::filesystem::path& path, const GrayImage& image);

/// Writes a signed field mapped linearly from [lo, hi] to [0, 255].
void write_scaled(const std::filesystem::path& path, const GrayImage& field, double lo, double hi);

void write_mask(const std::filesystem::path& path, const Mask& mask);
/// Reads a mask; pixels with luminance >= 0.5 are set.
Mask read_mask(const std::filesystem::path& path);

/// 8-bit quantization used at the I/O boundary: round(v * 255), clamped.
std::uint8_t to_u8(double v);

}  // namespace samf
