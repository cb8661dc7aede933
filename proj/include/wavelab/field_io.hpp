#pragma once

#include <filesystem>
#include <iosfwd>
#include <variant>

#include "wavelab/field.hpp"

namespace wavelab {

/// Flat binary container, all little-endian:
///
///   offset  size  content
///   0       8     magic "WAVLABF1"
///   8       4     uint32 dims
///   12      4     uint32 points per axis N
///   16      8     float64 box length L
///   24      4     uint32 kind (0 = real, 1 = spectral)
///   28      4     uint32 reserved, 0
///   32      ...   payload: N^n float64 (real) or N^n interleaved (re, im)
///                 float64 pairs (spectral), row-major flat order
void write_field_binary(std::ostream& out, const RealField& field);
void write_field_binary(std::ostream& out, const SpectralField& field);
void write_field_binary(const std::filesystem::path& path, const RealField& field);
void write_field_binary(const std::filesystem::path& path, const SpectralField& field);

using AnyField = std::variant<RealField, SpectralField>;

/// Throws std::runtime_error on a malformed or truncated container.
AnyField read_field_binary(std::istream& in);
AnyField read_field_binary(const std::filesystem::path& path);

/// CSV with columns x0[,x1,x2],value (real) or xi0[,xi1,xi2],re,im
/// (spectral). Refuses grids with more than max_rows points.
void write_field_csv(std::ostream& out, const RealField& field, std::size_t max_rows = 1u << 16);
void write_field_csv(std::ostream& out, const SpectralField& field,
                     std::size_t max_rows = 1u << 16);

}  // namespace wavelab
