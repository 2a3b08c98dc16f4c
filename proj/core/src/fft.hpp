#pragma once

#include <complex>
#include <vector>

// Thin FFTW wrapper: unnormalized forward (e^{-2 pi i jk/n}) and backward
// transforms on power-of-two sizes, with a process-wide plan cache (FFTW plan
// creation is not thread-safe; execution on distinct arrays is).

namespace rankone::detail {

void fft_forward(std::vector<std::complex<double>>& data);
void fft_backward(std::vector<std::complex<double>>& data);

}  // namespace rankone::detail
