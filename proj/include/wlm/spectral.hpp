#ifndef WLM_SPECTRAL_HPP
#define WLM_SPECTRAL_HPP

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace wlm {

struct Psd {
  Eigen::VectorXd freq;   // Hz, 0 .. fs/2
  Eigen::VectorXd power;  // one-sided density, units^2/Hz
};

// Welch estimate: Hann-tapered segments with the given overlap, averaged
// one-sided periodograms. Input is used as-is (callers remove the mean).
inline Psd welch_psd(const Eigen::VectorXd& x, double fs, int segment = 256,
                     double overlap = 0.5) {
  const int n = static_cast<int>(x.size());
  if (n < 2) throw std::invalid_argument("welch_psd: need >= 2 samples");
  const int nseg = std::min(segment, n);
  int step = nseg - static_cast<int>(std::floor(nseg * overlap));
  if (step < 1) step = 1;

  Eigen::VectorXd window(nseg);
  for (int j = 0; j < nseg; ++j) {
    window[j] = 0.5 * (1.0 - std::cos(2.0 * M_PI * j / nseg));  // periodic Hann
  }
  const double win_power = window.squaredNorm();

  const int n_bins = nseg / 2 + 1;
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(n_bins);
  int n_segments = 0;

  Eigen::FFT<double> fft;
  std::vector<double> buf(nseg);
  std::vector<std::complex<double>> spec;
  for (int start = 0; start + nseg <= n; start += step) {
    for (int j = 0; j < nseg; ++j) buf[j] = x[start + j] * window[j];
    fft.fwd(spec, buf);
    for (int k = 0; k < n_bins; ++k) {
      double p = std::norm(spec[k]) / (fs * win_power);
      if (k > 0 && !(nseg % 2 == 0 && k == nseg / 2)) p *= 2.0;  // one-sided
      acc[k] += p;
    }
    ++n_segments;
  }
  if (n_segments == 0) throw std::invalid_argument("welch_psd: no full segment");

  Psd out;
  out.power = acc / n_segments;
  out.freq.resize(n_bins);
  for (int k = 0; k < n_bins; ++k) out.freq[k] = k * fs / nseg;
  return out;
}

// Integral of the piecewise-linear PSD over [lo, hi], clipped to the
// estimated frequency range.
inline double band_power(const Psd& psd, double lo, double hi) {
  const Eigen::Index n = psd.freq.size();
  if (n < 2 || hi <= lo) return 0.0;
  double total = 0.0;
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    double f0 = psd.freq[i], f1 = psd.freq[i + 1];
    double a = std::max(f0, lo), b = std::min(f1, hi);
    if (b <= a) continue;
    double p0 = psd.power[i], p1 = psd.power[i + 1];
    double slope = (p1 - p0) / (f1 - f0);
    double pa = p0 + slope * (a - f0);
    double pb = p0 + slope * (b - f0);
    total += 0.5 * (pa + pb) * (b - a);
  }
  return total;
}

// FFT energy of the mean-removed signal, DC bin excluded. With the 1/N^2
// normalization this equals the biased time-domain variance (Parseval).
inline double spectral_energy(const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  if (n < 2) return 0.0;
  std::vector<double> buf(n);
  const double mean = x.mean();
  for (int j = 0; j < n; ++j) buf[j] = x[j] - mean;
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> spec;
  fft.fwd(spec, buf);
  double sum = 0.0;
  for (int k = 1; k < n; ++k) sum += std::norm(spec[k]);
  return sum / (static_cast<double>(n) * n);
}

}  // namespace wlm

#endif  // WLM_SPECTRAL_HPP
