#include "nlm/io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace nlm {
namespace {

static_assert(sizeof(double) == 8);

void write_payload(const std::filesystem::path& path, const double* data, std::size_t count) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  if constexpr (std::endian::native == std::endian::little) {
    out.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(count * 8));
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      std::uint64_t bits;
      std::memcpy(&bits, &data[i], 8);
      char b[8];
      for (int k = 0; k < 8; ++k) b[k] = static_cast<char>((bits >> (8 * k)) & 0xff);
      out.write(b, 8);
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_sidecar(const std::filesystem::path& path, const Grid& g, int component,
                   const std::string& name) {
  nlohmann::json j;
  j["dim"] = g.dim();
  j["n"] = g.n();
  j["L"] = g.half_width();
  j["component"] = component;
  j["name"] = name;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace

void dump_scalar(const std::string& dir, const std::string& name, const ScalarField& f,
                 int component) {
  std::filesystem::create_directories(dir);
  std::filesystem::path base = std::filesystem::path(dir) / name;
  write_payload(base.string() + ".f64", f.data(), f.size());
  write_sidecar(base.string() + ".json", f.grid(), component, name);
}

void dump_vector(const std::string& dir, const std::string& name, const VectorField& f) {
  for (int c = 0; c < 3; ++c)
    dump_scalar(dir, name + "." + std::to_string(c), f.comp(c), c);
}

ScalarField load_scalar(const std::string& dir, const std::string& name) {
  std::filesystem::path base = std::filesystem::path(dir) / name;
  std::ifstream meta(base.string() + ".json");
  if (!meta) throw std::runtime_error("cannot open " + base.string() + ".json");
  nlohmann::json j;
  meta >> j;
  Grid g(j.at("dim").get<int>(), j.at("n").get<int>(), j.at("L").get<double>());

  std::ifstream in(base.string() + ".f64", std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + base.string() + ".f64");
  std::vector<double> values(g.cell_count());
  in.read(reinterpret_cast<char*>(values.data()),
          static_cast<std::streamsize>(values.size() * 8));
  if (static_cast<std::size_t>(in.gcount()) != values.size() * 8)
    throw std::runtime_error("short read: " + base.string() + ".f64");
  if constexpr (std::endian::native != std::endian::little) {
    for (double& v : values) {
      std::uint64_t bits;
      std::memcpy(&bits, &v, 8);
      std::uint64_t sw = 0;
      for (int k = 0; k < 8; ++k) sw |= ((bits >> (8 * k)) & 0xff) << (8 * (7 - k));
      std::memcpy(&v, &sw, 8);
    }
  }
  return ScalarField(g, std::move(values));
}

}  // namespace nlm
