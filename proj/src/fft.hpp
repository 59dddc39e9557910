#pragma once

#include "powertriad/waveform.hpp"

#include <vector>

namespace powertriad::detail {

/// Unnormalized forward DFT: X[k] = sum_n x[n] exp(-j 2 pi k n / N).
std::vector<cplx> fft(const std::vector<cplx>& x);

/// Inverse DFT with 1/N: ifft(fft(x)) == x up to rounding.
std::vector<cplx> ifft(const std::vector<cplx>& x);

/// Forward DFT of a real series (returns the full complex spectrum).
std::vector<cplx> fft_real(const std::vector<double>& x);

} // namespace powertriad::detail
