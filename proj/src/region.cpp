#include <algorithm>
#include <stdexcept>

#include "gnsym/exponents.hpp"

namespace gnsym {

namespace {

using Point = std::pair<Rat, Rat>;
using Polygon = std::vector<Point>;

// a*x + b*y + c >= 0
struct HalfPlane {
  Rat a, b, c;
  Rat eval(const Point& p) const { return Rat(a * p.first + b * p.second + c); }
};

Polygon clip(const Polygon& poly, const HalfPlane& h) {
  Polygon out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& cur = poly[i];
    const Point& nxt = poly[(i + 1) % n];
    const Rat fc = h.eval(cur), fn = h.eval(nxt);
    if (fc >= 0) out.push_back(cur);
    if ((fc > 0 && fn < 0) || (fc < 0 && fn > 0)) {
      const Rat t = fc / (fc - fn);
      out.emplace_back(cur.first + t * (nxt.first - cur.first), cur.second + t * (nxt.second - cur.second));
    }
  }
  Polygon dedup;
  for (const auto& p : out)
    if (dedup.empty() || dedup.back() != p) dedup.push_back(p);
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  return dedup;
}

Polygon clip_all(Polygon poly, const std::vector<HalfPlane>& hs) {
  for (const auto& h : hs) {
    if (poly.empty()) break;
    poly = clip(poly, h);
  }
  return poly;
}

// Vertices of a convex polygon on the line value == 0, reduced to the two extreme ones.
std::vector<Point> face_on_line(const Polygon& poly, const HalfPlane& line) {
  std::vector<Point> on;
  for (const auto& p : poly)
    if (line.eval(p) == 0 && std::find(on.begin(), on.end(), p) == on.end()) on.push_back(p);
  if (on.size() <= 2) return on;
  std::sort(on.begin(), on.end());
  return {on.front(), on.back()};
}

// A piece class: identical affine forms share one class (A2 and A3 coincide when k = d-1).
struct PieceClass {
  std::string label;
  APiece form;
};

std::vector<PieceClass> piece_classes(int d, int k) {
  std::vector<PieceClass> out;
  for (const auto& p : a_pieces(d, k)) {
    auto same = std::find_if(out.begin(), out.end(), [&](const PieceClass& c) {
      return c.form.cx == p.cx && c.form.cy == p.cy && c.form.c0 == p.c0;
    });
    if (same != out.end())
      same->label += "=" + p.name;
    else
      out.push_back({p.name, p});
  }
  return out;
}

HalfPlane difference(const APiece& lhs, const APiece& rhs) {  // lhs - rhs
  return {Rat(lhs.cx - rhs.cx), Rat(lhs.cy - rhs.cy), Rat(lhs.c0 - rhs.c0)};
}

// Cell of class i inside `domain`: where piece i attains the minimum.
Polygon cell(const Polygon& domain, const std::vector<PieceClass>& cls, std::size_t i) {
  std::vector<HalfPlane> hs;
  for (std::size_t m = 0; m < cls.size(); ++m)
    if (m != i) hs.push_back(difference(cls[m].form, cls[i].form));
  return clip_all(domain, hs);
}

Polygon triangle() { return {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}}; }

Polygon square(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1) {
  return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
}

std::vector<RegionPolyline> exceptional_segments(int k) {
  const Rat x = rat(k + 2, 2 * (k + 1));
  const Rat ytop = rat(k * k, 2 * (k + 1) * (k + 2));
  const Rat y = rat(k, 2 * (k + 1));
  const Rat xlo = rat(k * k + 6 * k + 4, 2 * (k + 1) * (k + 2));
  return {
      {{{x, ytop}, {x, Rat(0)}}, "E", "exceptional"},
      {{{xlo, y}, {Rat(1), y}}, "E'", "exceptional"},
  };
}

std::vector<RegionPolyline> acalc(const RegionParams& p) {
  if (p.d < 2 || p.k < 1 || p.k > p.d - 1) throw std::invalid_argument("acalc needs d >= 2 and 1 <= k <= d-1");
  const auto cls = piece_classes(p.d, p.k);
  std::vector<Polygon> cells;
  for (std::size_t i = 0; i < cls.size(); ++i) cells.push_back(cell(triangle(), cls, i));
  std::vector<RegionPolyline> out;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (std::size_t j = i + 1; j < cls.size(); ++j) {
      auto face = face_on_line(cells[i], difference(cls[i].form, cls[j].form));
      if (face.size() == 2) out.push_back({face, cls[i].label + "|" + cls[j].label, "boundary"});
    }
  }
  for (auto& e : exceptional_segments(p.k)) out.push_back(std::move(e));
  return out;
}

std::vector<RegionPolyline> alevel(const RegionParams& p) {
  if (p.d < 2 || p.k < 1 || p.k > p.d - 1) throw std::invalid_argument("alevel needs d >= 2 and 1 <= k <= d-1");
  const auto cls = piece_classes(p.d, p.k);
  const Polygon sq = square(rat(1, 2), Rat(1), Rat(0), rat(1, 2));
  std::vector<RegionPolyline> out;
  const std::pair<const char*, const Rat*> levels[] = {{"A=alpha1", &p.alpha1}, {"A=alpha2", &p.alpha2}};
  for (const auto& [label, alpha] : levels) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      const APiece& f = cls[i].form;
      const HalfPlane below{Rat(-f.cx), Rat(-f.cy), Rat(*alpha - f.c0)};  // A_i <= alpha
      const Polygon c = clip(cell(sq, cls, i), below);
      if (c.empty()) continue;
      if (f.cx == 0 && f.cy == 0) {
        // A constant piece equal to the level fills its whole cell.
        if (f.c0 == *alpha) out.push_back({c, label, "level"});
        continue;
      }
      auto face = face_on_line(c, {f.cx, f.cy, Rat(f.c0 - *alpha)});
      if (face.size() == 2) out.push_back({face, label, "level"});
    }
  }
  return out;
}

RegionPolyline as_region(Polygon poly, std::string label) { return {std::move(poly), std::move(label), "region"}; }

std::vector<RegionPolyline> sphere(const RegionParams& p) {
  const Rat d = p.d;
  const Rat lower = 2 * (1 - p.kappa) / (d + 1);
  const Rat upper = (1 - p.kappa) * p.s / d;
  const Rat c = (d + 1 - 2 * p.kappa) / (2 * d);
  // x = 1/r, y = 1/q
  Polygon poly = clip_all(square(rat(1, 2), Rat(1), Rat(0), rat(1, 2)),
                          {{Rat(1), Rat(-1), Rat(-lower)},
                           {Rat(-1), Rat(1), upper},
                           {Rat(1), Rat(0), Rat(-c)},
                           {Rat(0), Rat(-1), Rat(1 - c)}});
  if (poly.empty()) return {};
  return {as_region(std::move(poly), "sphere admissible")};
}

std::vector<RegionPolyline> generalhd(const RegionParams& p) {
  SymbolProfile prof{p.d, p.k, p.alpha1, p.alpha2, p.s1, p.s2, p.kappa};
  const Rat abar = prof.abar(), sbar = prof.sbar();
  const Rat lower = 2 * abar / (p.k + 2);
  const Rat upper = sbar / p.d;
  const Rat c = (p.k + 2 * abar) / (2 * (p.k + 1));
  Polygon poly = clip_all(square(rat(1, 2), Rat(1), Rat(0), rat(1, 2)),
                          {{Rat(1), Rat(-1), Rat(-lower)},
                           {Rat(-1), Rat(1), upper},
                           {Rat(1), Rat(0), Rat(-c)},
                           {Rat(0), Rat(-1), Rat(1 - c)}});
  if (poly.empty()) return {};
  return {as_region(std::move(poly), "general admissible")};
}

std::vector<RegionPolyline> local(const RegionParams& p) {
  Polygon poly;
  if (p.d == 1) {
    poly = clip_all(triangle(), {{Rat(1), Rat(-1), Rat(p.kappa - 1)}, {Rat(-1), Rat(1), p.s}});
  } else {
    const int k = p.d - 1;
    const Rat lower = 2 * (1 - p.kappa) / (k + 2);
    const Rat upper = p.s / p.d;
    const Rat c = (k + 2 - 2 * p.kappa) / (2 * (k + 1));
    poly = clip_all(square(rat(1, 2), Rat(1), Rat(0), rat(1, 2)),
                    {{Rat(1), Rat(-1), Rat(-lower)},
                     {Rat(-1), Rat(1), upper},
                     {Rat(1), Rat(0), Rat(-c)},
                     {Rat(0), Rat(-1), Rat(1 - c)}});
  }
  if (poly.empty()) return {};
  return {as_region(std::move(poly), "local admissible")};
}

}  // namespace

std::vector<RegionPolyline> region_boundary(const std::string& id, const RegionParams& params) {
  if (id == "acalc") return acalc(params);
  if (id == "alevel") return alevel(params);
  if (id == "sphere") return sphere(params);
  if (id == "generalhd") return generalhd(params);
  if (id == "local") return local(params);
  throw std::invalid_argument("unknown checker id '" + id + "' (expected acalc, alevel, sphere, generalhd, local)");
}

}  // namespace gnsym
