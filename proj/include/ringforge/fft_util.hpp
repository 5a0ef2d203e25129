#ifndef RINGFORGE_FFT_UTIL_HPP
#define RINGFORGE_FFT_UTIL_HPP

#include <complex>
#include <vector>

namespace ringforge::fft {

// Real 1-D transforms backed by FFTW (FFTW_ESTIMATE plans, so results are
// deterministic run to run). Forward returns the n/2+1 non-negative
// frequency bins; inverse is normalized by 1/n.
std::vector<std::complex<double>> rfft(const std::vector<double>& in);
std::vector<double> irfft(const std::vector<std::complex<double>>& spectrum, int n);

} // namespace ringforge::fft

#endif
