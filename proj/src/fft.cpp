#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "fft_internal.hpp"
#include "gnsym/parallel.hpp"

namespace gnsym::detail {

namespace {

// FFTW planning is not thread-safe, execution is. Plans are made once per shape on a scratch
// buffer and then run on caller memory through the new-array interface.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int d, int n, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    const auto key = std::make_tuple(d, n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    int dims[3] = {n, n, n};
    std::size_t total = 1;
    for (int a = 0; a < d; ++a) total *= static_cast<std::size_t>(n);
    auto* scratch = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * total));
    fftw_plan plan = fftw_plan_dft(d, dims, scratch, scratch, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    if (!plan) throw std::runtime_error("FFTW failed to create a plan");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

// Storage index of frequency index m (centered storage i = m + n/2) in FFTW's natural order.
std::size_t natural_index(const Grid& g, std::size_t centered, int& parity) {
  const auto idx = g.unflatten(centered);
  std::size_t out = 0;
  parity = 0;
  for (int a = 0; a < g.d; ++a) {
    const int m = idx[a] - g.n / 2;
    parity += m;
    out = out * static_cast<std::size_t>(g.n) + static_cast<std::size_t>((m + g.n) % g.n);
  }
  return out;
}

double shift_phase(const Grid& g, std::size_t flat) {
  const auto x = g.x_at(flat);
  double ph = 0.0;
  for (int a = 0; a < g.d; ++a) ph += x[a] * g.xi_shift[a];
  return ph;
}

template <class F>
void loop(bool parallel, std::size_t n, F&& f) {
  if (parallel)
    par::for_each_index(n, f);
  else
    for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace

void fft_inplace(cvec& data, int d, int n, int sign) {
  fftw_plan plan = cache().get(d, n, sign);
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, p, p);
}

GridFunction transform(const GridFunction& u, bool to_frequency, bool parallel) {
  const Grid& g = u.grid;
  const Space want_in = to_frequency ? Space::Physical : Space::Frequency;
  if (u.space != want_in) throw std::invalid_argument("transform called on the wrong space");
  if (u.samples.size() != g.size()) throw std::invalid_argument("sample count does not match grid");
  const std::size_t total = g.size();
  const double norm = std::pow(2.0 * std::numbers::pi, -0.5 * g.d);
  cvec buf(total);
  GridFunction out{g, to_frequency ? Space::Frequency : Space::Physical, cvec(total)};
  if (to_frequency) {
    loop(parallel, total, [&](std::size_t i) { buf[i] = u.samples[i] * std::polar(1.0, -shift_phase(g, i)); });
    fft_inplace(buf, g.d, g.n, FFTW_FORWARD);
    const double c = norm * g.cell_x();
    loop(parallel, total, [&](std::size_t j) {
      int parity = 0;
      const std::size_t src = natural_index(g, j, parity);
      out.samples[j] = (parity % 2 == 0 ? c : -c) * buf[src];
    });
  } else {
    loop(parallel, total, [&](std::size_t j) {
      int parity = 0;
      const std::size_t dst = natural_index(g, j, parity);
      buf[dst] = parity % 2 == 0 ? u.samples[j] : -u.samples[j];
    });
    fft_inplace(buf, g.d, g.n, FFTW_BACKWARD);
    const double c = norm * g.cell_xi();
    loop(parallel, total, [&](std::size_t i) { out.samples[i] = c * buf[i] * std::polar(1.0, shift_phase(g, i)); });
  }
  return out;
}

}  // namespace gnsym::detail
