#include <algorithm>
#include <set>

#include "doctest.h"
#include "gnsym/exponents.hpp"

using namespace gnsym;

namespace {

using Pt = std::pair<Rat, Rat>;

std::set<Pt> vertex_set(const std::vector<RegionPolyline>& lines, const std::string& kind = "") {
  std::set<Pt> out;
  for (const auto& l : lines)
    if (kind.empty() || l.kind == kind) out.insert(l.vertices.begin(), l.vertices.end());
  return out;
}

Pt P(long a, long b, long c, long e) { return {rat(a, b), rat(c, e)}; }

RegionParams params(int d, int k) {
  RegionParams p;
  p.d = d;
  p.k = k;
  return p;
}

}  // namespace

TEST_CASE("A-calculus diagram for (d,k) = (4,2) has the Stein-Tomas vertices") {
  const auto lines = region_boundary("acalc", params(4, 2));
  const auto v = vertex_set(lines);
  CHECK(v.count(P(1, 2, 1, 4)));
  CHECK(v.count(P(2, 3, 1, 6)));
  CHECK(v.count(P(3, 4, 1, 2)));
}

TEST_CASE("exceptional segments for k = 2") {
  const auto lines = region_boundary("acalc", params(4, 2));
  std::vector<std::set<Pt>> segs;
  for (const auto& l : lines)
    if (l.kind == "exceptional") segs.emplace_back(l.vertices.begin(), l.vertices.end());
  REQUIRE(segs.size() == 2);
  const std::set<Pt> a{P(2, 3, 1, 6), P(2, 3, 0, 1)}, b{P(5, 6, 1, 3), P(1, 1, 1, 3)};
  CHECK(std::count(segs.begin(), segs.end(), a) == 1);
  CHECK(std::count(segs.begin(), segs.end(), b) == 1);
}

TEST_CASE("region vertices stay in the closed triangle") {
  for (const char* id : {"acalc", "alevel", "sphere", "generalhd", "local"})
    for (int d = 2; d <= 4; ++d) {
      RegionParams p = params(d, d - 1);
      p.kappa = Rat(1, 2);
      p.s = 2;
      p.alpha2 = Rat(1, 4);
      for (const auto& l : region_boundary(id, p))
        for (const auto& [x, y] : l.vertices) {
          CHECK(y >= 0);
          CHECK(y <= x);
          CHECK(x <= 1);
        }
    }
}

TEST_CASE("acalc boundaries lie on lines where two pieces agree") {
  const auto pieces = a_pieces(4, 2);
  for (const auto& l : region_boundary("acalc", params(4, 2))) {
    if (l.kind != "boundary") continue;
    for (const auto& [x, y] : l.vertices) {
      // Both endpoints attain the minimum with at least two distinct affine forms.
      const Rat a = big_a(RecipExponent(x), RecipExponent(y), 4, 2);
      int hits = 0;
      std::set<std::tuple<Rat, Rat, Rat>> forms;
      for (const auto& p : pieces)
        if (p.at(x, y) == a && forms.insert({p.cx, p.cy, p.c0}).second) ++hits;
      CHECK(hits >= 2);
    }
  }
}

TEST_CASE("level set with alpha = 1/4 ends at 1/q = 3/8") {
  RegionParams p = params(4, 2);
  p.alpha1 = Rat(3, 4);
  p.alpha2 = Rat(1, 4);
  const auto lines = region_boundary("alevel", p);
  // (k + 2 - 4 alpha2) / (2(k + 2)) with k = 2.
  CHECK(vertex_set(lines).count(P(1, 2, 3, 8)));
  // Each level polyline sits on a single level, alpha1 or alpha2.
  for (const auto& l : lines) {
    REQUIRE_FALSE(l.vertices.empty());
    const auto& [x0, y0] = l.vertices.front();
    const Rat level = big_a(RecipExponent(x0), RecipExponent(y0), 4, 2);
    CHECK((level == p.alpha1 || level == p.alpha2));
    for (const auto& [x, y] : l.vertices) CHECK(big_a(RecipExponent(x), RecipExponent(y), 4, 2) == level);
  }
}

TEST_CASE("sphere region vertices are admissible or on its boundary") {
  RegionParams p = params(2, 1);
  p.s = 2;
  p.kappa = Rat(1, 2);
  const auto lines = region_boundary("sphere", p);
  REQUIRE_FALSE(lines.empty());
  // The closed polygon contains the Strong example (1/r, 1/q) = (1/2, 1/6).
  CHECK(vertex_set(lines).count(P(1, 2, 1, 6)));
}

TEST_CASE("contradictory bounds give an empty region") {
  RegionParams p = params(2, 1);
  p.s = Rat(1, 2);
  p.kappa = 0;
  CHECK(region_boundary("sphere", p).empty());
}

TEST_CASE("unknown region id") { CHECK_THROWS_AS(region_boundary("nope", params(2, 1)), std::invalid_argument); }
