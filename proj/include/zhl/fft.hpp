#pragma once

#include <complex>
#include <vector>

namespace zhl {

using cplx = std::complex<double>;

// Thin wrappers around FFTW with cached plans.  All transforms are the
// plain unnormalized DFT pair
//   forward:  c_k = sum_j f_j exp(-2*pi*i*j*k/n)
//   backward: f_j = sum_k c_k exp(+2*pi*i*j*k/n)
// Normalization and the physical phase conventions live in grid.hpp.
void fft_forward(std::vector<cplx>& data);
void fft_backward(std::vector<cplx>& data);

// In-place 2-D transforms on row-major data (n0 rows, n1 columns).
void fft2_forward(std::vector<cplx>& data, int n0, int n1);
void fft2_backward(std::vector<cplx>& data, int n0, int n1);

}  // namespace zhl
