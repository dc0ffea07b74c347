#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <numbers>

#include "doctest.h"
#include "gnsym/grid.hpp"
#include "gnsym/serialize.hpp"
#include "gnsym/spectral.hpp"

using namespace gnsym;

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(Grid::make(1, 6, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Grid::make(1, 48, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Grid::make(4, 8, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Grid::make(1, 8, 0.0), std::invalid_argument);
  CHECK_NOTHROW(Grid::make(3, 8, 2.0));
}

TEST_CASE("grid spacings and frequency coverage") {
  const Grid g = Grid::make(2, 64, 8.0);
  CHECK(g.h() == doctest::Approx(0.25));
  CHECK(g.dxi() == doctest::Approx(std::numbers::pi / 8.0));
  CHECK(g.size() == 64u * 64u);
  CHECK(g.cell_x() == doctest::Approx(0.0625));
  // Samples run over [-pi n/(2L), pi n/(2L)), shifted by half a spacing.
  const double lo = -std::numbers::pi * 64 / 16.0;
  CHECK(g.xi(0, 0) == doctest::Approx(lo + 0.5 * g.dxi()));
  CHECK(g.xi(0, 63) < -lo);
  CHECK(g.xi_extent() == doctest::Approx(-lo));
}

TEST_CASE("the half shift keeps samples off the origin and the unit sphere") {
  for (int d = 1; d <= 3; ++d)
    for (double L : {3.14159, 8.0, std::numbers::pi * 4}) {
      const Grid g = Grid::make(d, d == 3 ? 16 : 64, L);
      for (std::size_t i = 0; i < g.size(); ++i) {
        const auto xi = g.xi_at(i);
        double r2 = 0.0;
        for (int a = 0; a < d; ++a) r2 += xi[a] * xi[a];
        CHECK(r2 > 0.0);
        if (d == 1) CHECK(std::abs(std::sqrt(r2) - 1.0) > 0.0);
      }
    }
}

TEST_CASE("unflatten is row-major with axis 0 slowest") {
  const Grid g = Grid::make(3, 8, 1.0);
  const auto idx = g.unflatten(1 * 64 + 2 * 8 + 3);
  CHECK(idx[0] == 1);
  CHECK(idx[1] == 2);
  CHECK(idx[2] == 3);
  CHECK(g.x_at(0)[0] == doctest::Approx(-1.0));
}

TEST_CASE("windows centred away from the origin") {
  const Grid g = Grid::around(2, 32, 4.0, {1.0, 0.0, 0.0});
  CHECK(g.xi_shift[0] == doctest::Approx(1.0 + 0.5 * g.dxi()));
  CHECK(g.xi_shift[2] == 0.0);
  CHECK_FALSE(g.same_as(Grid::make(2, 32, 4.0)));
  CHECK(g.same_as(Grid::around(2, 32, 4.0, {1.0, 0.0, 0.0})));
}

TEST_CASE("binary serialisation round trip") {
  const Grid g = Grid::around(2, 16, 3.0, {1.0, 0.0, 0.0});
  GridFunction u = GridFunction::zeros(g, Space::Frequency);
  for (std::size_t i = 0; i < u.samples.size(); ++i) u.samples[i] = {std::sin(0.1 * i), std::cos(0.3 * i)};
  const auto path = (std::filesystem::temp_directory_path() / "gnsym_roundtrip.bin").string();
  write_grid_function(u, path, "round trip");
  const GridFunction v = read_grid_function(path);
  CHECK(v.grid.same_as(g));
  CHECK(v.space == Space::Frequency);
  REQUIRE(v.samples.size() == u.samples.size());
  for (std::size_t i = 0; i < u.samples.size(); ++i) CHECK(v.samples[i] == u.samples[i]);
  // Header: d, n, L bits, space flag.
  std::FILE* f = std::fopen(path.c_str(), "rb");
  REQUIRE(f);
  std::uint64_t head[4];
  REQUIRE(std::fread(head, sizeof head, 1, f) == 1);
  std::fclose(f);
  CHECK(head[0] == 2);
  CHECK(head[1] == 16);
  double L;
  std::memcpy(&L, &head[2], sizeof L);
  CHECK(L == 3.0);
  CHECK(head[3] == 1);
  CHECK(std::filesystem::file_size(path) == 32 + 16 * 16 * 16);
  std::filesystem::remove(path);
  std::filesystem::remove(path + ".json");
}
