#include "powertriad/windows.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace powertriad {

const char* window_name(Window w) {
  switch (w) {
    case Window::rectangular: return "rectangular";
    case Window::hamming: return "hamming";
    case Window::blackman: return "blackman";
  }
  return "unknown";
}

std::vector<double> make_window(Window w, std::size_t n) {
  if (n == 0) throw std::invalid_argument("window length must be > 0");
  std::vector<double> taps(n, 1.0);
  if (n == 1 || w == Window::rectangular) return taps;
  const double denom = static_cast<double>(n - 1);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  // Fill the lower half and mirror it so the window is symmetric bit-for-bit;
  // linear-phase FIR designs built on it then have exactly (anti)symmetric taps.
  for (std::size_t k = 0; k <= (n - 1) / 2; ++k) {
    const double u = static_cast<double>(k) / denom;
    switch (w) {
      case Window::rectangular: break;
      case Window::hamming:
        taps[k] = 0.54 - 0.46 * std::cos(two_pi * u);
        break;
      case Window::blackman:
        taps[k] = 0.42 - 0.5 * std::cos(two_pi * u) + 0.08 * std::cos(2.0 * two_pi * u);
        break;
    }
    taps[n - 1 - k] = taps[k];
  }
  return taps;
}

} // namespace powertriad
