#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

// Thin facade over FFTW. Plans are cached per (size, direction) and created
// under a mutex (the FFTW planner is not thread-safe); execution goes through
// the new-array interface, which is safe to call concurrently. Plans are made
// with FFTW_UNALIGNED so they accept whatever buffers std::vector hands us.

namespace powertriad::detail {
namespace {

std::mutex g_planner_mutex;

fftw_plan plan_for(std::size_t n, int sign) {
  static std::map<std::pair<std::size_t, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(g_planner_mutex);
  auto key = std::make_pair(n, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<cplx> scratch(n);
  fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n),
                                 reinterpret_cast<fftw_complex*>(scratch.data()),
                                 reinterpret_cast<fftw_complex*>(scratch.data()),
                                 sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!p) throw std::runtime_error("fft: planning failed for n=" + std::to_string(n));
  cache.emplace(key, p);
  return p;
}

std::vector<cplx> transform(const std::vector<cplx>& x, int sign) {
  if (x.empty()) return {};
  std::vector<cplx> out(x.size());
  std::vector<cplx> in(x); // FFTW may clobber input in the general case
  fftw_execute_dft(plan_for(x.size(), sign),
                   reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

} // namespace

std::vector<cplx> fft(const std::vector<cplx>& x) { return transform(x, FFTW_FORWARD); }

std::vector<cplx> ifft(const std::vector<cplx>& x) {
  std::vector<cplx> out = transform(x, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(x.size());
  for (cplx& v : out) v *= scale;
  return out;
}

std::vector<cplx> fft_real(const std::vector<double>& x) {
  std::vector<cplx> in(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) in[k] = cplx(x[k], 0.0);
  return fft(in);
}

} // namespace powertriad::detail
