#include "gnsym/symbols.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gnsym/parallel.hpp"

namespace gnsym {

namespace {

double norm_of(const std::array<double, 3>& xi, int d) {
  double r2 = 0.0;
  for (int a = 0; a < d; ++a) r2 += xi[a] * xi[a];
  return std::sqrt(r2);
}

std::string fmt(const char* head, double s) {
  std::ostringstream os;
  os << head << "(" << s << ")";
  return os.str();
}

}  // namespace

SymbolSpec SymbolSpec::identity() { return {}; }

SymbolSpec SymbolSpec::radial_power_minus_one(double s) {
  SymbolSpec m;
  m.kind_ = Kind::RadialPowerMinusOne;
  m.s_ = s;
  m.name_ = fmt("radial_power_minus_one", s);
  return m;
}

SymbolSpec SymbolSpec::bessel_power(double s) {
  SymbolSpec m;
  m.kind_ = Kind::BesselPower;
  m.s_ = s;
  m.name_ = fmt("bessel_power", s);
  return m;
}

SymbolSpec SymbolSpec::radial_power(double s) {
  SymbolSpec m;
  m.kind_ = Kind::RadialPower;
  m.s_ = s;
  m.name_ = fmt("radial_power", s);
  return m;
}

SymbolSpec SymbolSpec::point_zeros(std::vector<Zero> zeros, double s) {
  SymbolSpec m;
  m.kind_ = Kind::PointZeros;
  m.s_ = s;
  m.zeros_ = std::move(zeros);
  m.name_ = fmt("point_zeros", s);
  return m;
}

SymbolSpec SymbolSpec::tabulated(Grid grid, cvec centered_values) {
  if (centered_values.size() != grid.size()) throw std::invalid_argument("tabulated symbol size does not match grid");
  SymbolSpec m;
  m.kind_ = Kind::Tabulated;
  m.table_grid_ = grid;
  m.table_ = std::make_shared<const cvec>(std::move(centered_values));
  m.name_ = "tabulated";
  return m;
}

SymbolSpec SymbolSpec::function(std::string name, Fn fn) {
  SymbolSpec m;
  m.kind_ = Kind::Function;
  m.fn_ = std::move(fn);
  m.name_ = std::move(name);
  return m;
}

SymbolSpec SymbolSpec::product(const SymbolSpec& a, const SymbolSpec& b) {
  SymbolSpec m;
  m.kind_ = Kind::Product;
  m.left_ = std::make_shared<const SymbolSpec>(a);
  m.right_ = std::make_shared<const SymbolSpec>(b);
  m.name_ = a.name_ + "*" + b.name_;
  return m;
}

cplx SymbolSpec::at(const std::array<double, 3>& xi, int d) const {
  switch (kind_) {
    case Kind::Identity:
      return 1.0;
    case Kind::RadialPowerMinusOne:
      return std::pow(norm_of(xi, d), s_) - 1.0;
    case Kind::BesselPower: {
      const double r = norm_of(xi, d);
      return std::pow(1.0 + r * r, 0.5 * s_);
    }
    case Kind::RadialPower:
      return std::pow(norm_of(xi, d), s_);
    case Kind::PointZeros: {
      if (d != 1) throw std::invalid_argument("point-zero symbols are one-dimensional");
      double v = 1.0, total = 0.0;
      for (const auto& z : zeros_) {
        const double t = xi[0] - z.point;
        v *= z.order == 1.0 ? t : std::pow(std::abs(t), z.order);
        total += z.order;
      }
      return v * std::pow(1.0 + xi[0] * xi[0], 0.5 * (s_ - total));
    }
    case Kind::Tabulated:
      throw std::logic_error("tabulated symbols are only available through sample()");
    case Kind::Function:
      return fn_(xi, d);
    case Kind::Product:
      return left_->at(xi, d) * right_->at(xi, d);
  }
  return 0.0;
}

cvec SymbolSpec::sample(const Grid& grid) const {
  if (kind_ == Kind::Tabulated) {
    if (!grid.same_as(table_grid_)) throw std::invalid_argument("tabulated symbol sampled on a different grid");
    return *table_;
  }
  if (kind_ == Kind::Product) {
    cvec a = left_->sample(grid);
    const cvec b = right_->sample(grid);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
    return a;
  }
  cvec out(grid.size());
  par::for_each_index(out.size(), [&](std::size_t i) { out[i] = at(grid.xi_at(i), grid.d); });
  return out;
}

}  // namespace gnsym
