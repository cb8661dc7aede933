#include "wavelab/field_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace wavelab {
namespace {

constexpr std::array<char, 8> kMagic{'W', 'A', 'V', 'L', 'A', 'B', 'F', '1'};
constexpr std::uint32_t kReal = 0;
constexpr std::uint32_t kSpectral = 1;

template <class T>
T to_little(T value) {
  if constexpr (std::endian::native == std::endian::big) {
    auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(value);
    std::reverse(bytes.begin(), bytes.end());
    return std::bit_cast<T>(bytes);
  }
  return value;
}

template <class T>
void put(std::ostream& out, T value) {
  const auto little = to_little(value);
  out.write(reinterpret_cast<const char*>(&little), sizeof(T));
}

template <class T>
T get(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw std::runtime_error("field container: truncated input");
  return to_little(value);
}

void put_header(std::ostream& out, const GridSpec& grid, std::uint32_t kind) {
  out.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(out, static_cast<std::uint32_t>(grid.dims()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(grid.points()));
  put<double>(out, grid.box_length());
  put<std::uint32_t>(out, kind);
  put<std::uint32_t>(out, 0);
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void check_rows(const GridSpec& grid, std::size_t max_rows) {
  if (grid.size() > max_rows) {
    throw std::invalid_argument("write_field_csv: grid has " + std::to_string(grid.size()) +
                                " points, more than the CSV limit " + std::to_string(max_rows));
  }
}

}  // namespace

void write_field_binary(std::ostream& out, const RealField& field) {
  put_header(out, field.grid(), kReal);
  for (double v : field.samples()) put<double>(out, v);
}

void write_field_binary(std::ostream& out, const SpectralField& field) {
  put_header(out, field.grid(), kSpectral);
  for (const auto& c : field.coeffs()) {
    put<double>(out, c.real());
    put<double>(out, c.imag());
  }
}

void write_field_binary(const std::filesystem::path& path, const RealField& field) {
  auto out = open_out(path);
  write_field_binary(out, field);
}

void write_field_binary(const std::filesystem::path& path, const SpectralField& field) {
  auto out = open_out(path);
  write_field_binary(out, field);
}

AnyField read_field_binary(std::istream& in) {
  std::array<char, 8> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw std::runtime_error("field container: bad magic");
  const auto dims = get<std::uint32_t>(in);
  const auto points = get<std::uint32_t>(in);
  const auto length = get<double>(in);
  const auto kind = get<std::uint32_t>(in);
  get<std::uint32_t>(in);
  GridSpec grid = [&] {
    try {
      return make_grid(static_cast<int>(dims), length, static_cast<int>(points));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(std::string("field container: ") + e.what());
    }
  }();
  if (kind == kReal) {
    std::vector<double> samples(grid.size());
    for (auto& v : samples) v = get<double>(in);
    return RealField(grid, std::move(samples));
  }
  if (kind == kSpectral) {
    std::vector<Complex> coeffs(grid.size());
    for (auto& c : coeffs) {
      const double re = get<double>(in);
      const double im = get<double>(in);
      c = Complex(re, im);
    }
    return SpectralField(grid, std::move(coeffs));
  }
  throw std::runtime_error("field container: unknown kind " + std::to_string(kind));
}

AnyField read_field_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_field_binary(in);
}

void write_field_csv(std::ostream& out, const RealField& field, std::size_t max_rows) {
  const auto& grid = field.grid();
  check_rows(grid, max_rows);
  for (int d = 0; d < grid.dims(); ++d) out << 'x' << d << ',';
  out << "value\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto index = grid.unflatten(i);
    for (int d = 0; d < grid.dims(); ++d) out << format_double(grid.coordinate(index[d])) << ',';
    out << format_double(field[i]) << '\n';
  }
}

void write_field_csv(std::ostream& out, const SpectralField& field, std::size_t max_rows) {
  const auto& grid = field.grid();
  check_rows(grid, max_rows);
  for (int d = 0; d < grid.dims(); ++d) out << "xi" << d << ',';
  out << "re,im\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto index = grid.unflatten(i);
    for (int d = 0; d < grid.dims(); ++d) out << format_double(grid.frequency(index[d])) << ',';
    out << format_double(field[i].real()) << ',' << format_double(field[i].imag()) << '\n';
  }
}

}  // namespace wavelab
