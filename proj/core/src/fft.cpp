#include "fwarp/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace fwarp {

namespace {
// FFTW plan creation is not thread-safe; execution on plan-owned arrays is
// serialized here as well since the library is used from test drivers only.
std::mutex& fftw_mutex() {
  static std::mutex mu;
  return mu;
}
}  // namespace

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& in, bool inverse) {
  const std::size_t n = in.size();
  std::vector<std::complex<double>> out(n);
  std::lock_guard<std::mutex> lock(fftw_mutex());
  fftw_plan plan = fftw_plan_dft_1d(
      static_cast<int>(n),
      reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
      reinterpret_cast<fftw_complex*>(out.data()), inverse ? FFTW_BACKWARD : FFTW_FORWARD,
      FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  return out;
}

std::vector<std::complex<double>> dft_real(const std::vector<double>& in) {
  std::vector<std::complex<double>> tmp(in.begin(), in.end());
  return dft(tmp, false);
}

}  // namespace fwarp
