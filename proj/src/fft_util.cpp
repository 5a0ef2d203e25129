#include "ringforge/fft_util.hpp"

#include <mutex>

#include <fftw3.h>

#include "ringforge/errors.hpp"

namespace ringforge::fft {
namespace {

// FFTW plan creation/destruction is not thread-safe; execution of a plan on
// its own arrays is. Serialize the planner only.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

std::vector<std::complex<double>> rfft(const std::vector<double>& in) {
    const int n = static_cast<int>(in.size());
    if (n < 2) throw ValidationError("rfft: need at least 2 samples");
    std::vector<double> buf(in);
    std::vector<std::complex<double>> out(n / 2 + 1);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_r2c_1d(n, buf.data(),
                                    reinterpret_cast<fftw_complex*>(out.data()), FFTW_ESTIMATE);
    }
    if (!plan) throw ValidationError("rfft: planner failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

std::vector<double> irfft(const std::vector<std::complex<double>>& spectrum, int n) {
    if (n < 2 || static_cast<int>(spectrum.size()) != n / 2 + 1)
        throw ValidationError("irfft: spectrum size does not match n");
    std::vector<std::complex<double>> buf(spectrum);
    std::vector<double> out(n);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_c2r_1d(n, reinterpret_cast<fftw_complex*>(buf.data()), out.data(),
                                    FFTW_ESTIMATE);
    }
    if (!plan) throw ValidationError("irfft: planner failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    for (double& v : out) v /= n;
    return out;
}

} // namespace ringforge::fft
