#include "gnsym/serialize.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace gnsym {

namespace {

static_assert(std::endian::native == std::endian::little, "serialization assumes a little-endian host");

void put_u64(std::ofstream& os, std::uint64_t v) { os.write(reinterpret_cast<const char*>(&v), sizeof v); }

std::uint64_t get_u64(std::ifstream& is) {
  std::uint64_t v = 0;
  if (!is.read(reinterpret_cast<char*>(&v), sizeof v)) throw std::runtime_error("truncated grid function header");
  return v;
}

}  // namespace

void write_grid_function(const GridFunction& u, const std::string& path, const std::string& note) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path);
  put_u64(os, static_cast<std::uint64_t>(u.grid.d));
  put_u64(os, static_cast<std::uint64_t>(u.grid.n));
  put_u64(os, std::bit_cast<std::uint64_t>(u.grid.L));
  put_u64(os, u.space == Space::Frequency ? 1u : 0u);
  os.write(reinterpret_cast<const char*>(u.samples.data()),
           static_cast<std::streamsize>(u.samples.size() * sizeof(cplx)));

  nlohmann::ordered_json meta;
  meta["d"] = u.grid.d;
  meta["n"] = u.grid.n;
  meta["L"] = u.grid.L;
  meta["space"] = u.space == Space::Frequency ? "frequency" : "physical";
  meta["xi_shift"] = std::vector<double>(u.grid.xi_shift.begin(), u.grid.xi_shift.begin() + u.grid.d);
  meta["samples"] = u.samples.size();
  meta["layout"] = "row-major, axis 0 slowest; frequency samples in centered order";
  if (!note.empty()) meta["note"] = note;
  std::ofstream js(path + ".json");
  js << meta.dump(2) << "\n";
}

GridFunction read_grid_function(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path);
  const int d = static_cast<int>(get_u64(is));
  const int n = static_cast<int>(get_u64(is));
  const double L = std::bit_cast<double>(get_u64(is));
  const std::uint64_t space = get_u64(is);
  GridFunction u{Grid::make(d, n, L), space == 1 ? Space::Frequency : Space::Physical, {}};
  u.samples.resize(u.grid.size());
  if (!is.read(reinterpret_cast<char*>(u.samples.data()), static_cast<std::streamsize>(u.samples.size() * sizeof(cplx))))
    throw std::runtime_error("truncated grid function samples in " + path);
  std::ifstream js(path + ".json");
  if (js) {
    const auto meta = nlohmann::json::parse(js);
    if (meta.contains("xi_shift")) {
      const auto shift = meta["xi_shift"].get<std::vector<double>>();
      for (std::size_t a = 0; a < shift.size() && a < 3; ++a) u.grid.xi_shift[a] = shift[a];
    }
  }
  return u;
}

}  // namespace gnsym
