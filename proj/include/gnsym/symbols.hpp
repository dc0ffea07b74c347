#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gnsym/grid.hpp"

namespace gnsym {

// Fourier symbols P(xi). Radial kinds use |xi|, BesselPower uses <xi> = (1 + |xi|^2)^{1/2}.
class SymbolSpec {
 public:
  enum class Kind { Identity, RadialPowerMinusOne, BesselPower, RadialPower, PointZeros, Tabulated, Function, Product };
  struct Zero {
    double point;  // d = 1 only
    double order;  // order 1 uses the signed factor (xi - point)
  };
  using Fn = std::function<cplx(const std::array<double, 3>& xi, int d)>;

  static SymbolSpec identity();
  static SymbolSpec radial_power_minus_one(double s);  // |xi|^s - 1
  static SymbolSpec bessel_power(double s);            // <xi>^s
  static SymbolSpec radial_power(double s);            // |xi|^s
  // prod_l f_l(xi) * <xi>^{s - sum orders}, f_l = |xi - point|^order (signed when order == 1)
  static SymbolSpec point_zeros(std::vector<Zero> zeros, double s);
  static SymbolSpec tabulated(Grid grid, cvec centered_values);
  static SymbolSpec function(std::string name, Fn fn);
  static SymbolSpec product(const SymbolSpec& a, const SymbolSpec& b);

  Kind kind() const { return kind_; }
  double s() const { return s_; }
  const std::string& name() const { return name_; }

  // Pointwise value. Tabulated symbols have no pointwise form and throw.
  cplx at(const std::array<double, 3>& xi, int d) const;
  // Values at every frequency sample of `grid`, centered order. Parallel over samples.
  cvec sample(const Grid& grid) const;

 private:
  Kind kind_ = Kind::Identity;
  double s_ = 0.0;
  std::string name_ = "identity";
  std::vector<Zero> zeros_;
  Grid table_grid_;
  std::shared_ptr<const cvec> table_;
  Fn fn_;
  std::shared_ptr<const SymbolSpec> left_, right_;
};

}  // namespace gnsym
