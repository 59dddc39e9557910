#pragma once

#include <cstddef>
#include <vector>

namespace powertriad {

/// Taper applied to FIR designs.
enum class Window { rectangular, hamming, blackman };

const char* window_name(Window w);

/// Length-n symmetric window taps (periodic=false convention: endpoints included).
std::vector<double> make_window(Window w, std::size_t n);

} // namespace powertriad
