// include/tse/signal.h
//
// Copyright 2026  The tse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TSE_SIGNAL_H_
#define TSE_SIGNAL_H_

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "tse/errors.h"
#include "tse/rng.h"

namespace tse {

// Mono waveform. Samples are dimensionless amplitudes (nominal [-1, 1]);
// sample_rate is in Hz.
template <typename Scalar>
struct BasicWaveform {
  Eigen::Array<Scalar, Eigen::Dynamic, 1> samples;
  int sample_rate = 0;

  BasicWaveform() = default;
  BasicWaveform(Eigen::Array<Scalar, Eigen::Dynamic, 1> s, int rate)
      : samples(std::move(s)), sample_rate(rate) {}

  Eigen::Index num_samples() const { return samples.size(); }
  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

using Waveform = BasicWaveform<double>;

// Mean squared amplitude.
template <typename Derived>
typename Derived::Scalar power(const Eigen::ArrayBase<Derived>& samples) {
  if (samples.size() == 0) throw LengthError("power of empty signal");
  return samples.square().sum() / static_cast<typename Derived::Scalar>(samples.size());
}

template <typename Scalar>
Scalar power(const BasicWaveform<Scalar>& w) {
  return power(w.samples);
}

template <typename Scalar>
void check_waveform(const BasicWaveform<Scalar>& w, const std::string& what) {
  if (w.samples.size() == 0) throw LengthError(what + " is empty");
  if (w.sample_rate <= 0) throw FormatError(what + " has non-positive sample rate");
  if (!w.samples.isFinite().all()) throw FormatError(what + " has non-finite samples");
}

// SNR sentinel: a +inf ratio request disables the noise term entirely.
inline constexpr double kNoNoiseSnrDb = std::numeric_limits<double>::infinity();

inline bool is_no_noise(double snr_db) {
  return std::isinf(snr_db) && snr_db > 0;
}

// Scales `other` by g so that 10*log10(power(reference) / power(g*other))
// equals ratio_db. Exact up to floating-point rounding.
template <typename Scalar>
BasicWaveform<Scalar> scale_to_ratio(const BasicWaveform<Scalar>& reference,
                                     const BasicWaveform<Scalar>& other,
                                     double ratio_db) {
  const Scalar p_ref = power(reference);
  const Scalar p_other = power(other);
  if (p_other <= Scalar(0)) throw ZeroPowerError("cannot scale zero-power signal");
  if (p_ref <= Scalar(0)) throw ZeroPowerError("reference signal has zero power");
  const double g = std::sqrt(static_cast<double>(p_ref) /
                             (static_cast<double>(p_other) * std::pow(10.0, ratio_db / 10.0)));
  return {other.samples * Scalar(g), other.sample_rate};
}

// Target/interferer/noise/mixture quadruple; Y = S + I' + N' where I' and N'
// are the ratio-scaled interferer and noise.
struct MixtureExample {
  Waveform mixture;     // Y
  Waveform target;      // S (untouched)
  Waveform interferer;  // I', post-scaling
  Waveform noise;       // N', post-scaling
  std::string target_speaker_id;
  std::string interferer_speaker_id;
  double sir_db = 0.0;
  double snr_db = 0.0;
  uint64_t seed = 0;
};

// Cuts or tiles `w` to exactly `target_len` samples. Longer signals are cut
// from a random offset; shorter ones are tiled circularly from a random
// offset. Deterministic per rng state.
Waveform fit_to_length(const Waveform& w, Eigen::Index target_len, Rng* rng);

// Builds a mixture at the requested SIR/SNR. The interferer is scaled
// against the target, the noise against the noise-free mixture S + I'.
// snr_db == kNoNoiseSnrDb yields an all-zero noise track.
MixtureExample mix(const Waveform& target, const Waveform& interferer,
                   const Waveform& noise, double sir_db, double snr_db,
                   uint64_t seed);

// Achieved ratios, re-measured from the stored tracks.
double measured_sir_db(const MixtureExample& ex);
double measured_snr_db(const MixtureExample& ex);

// Checks MixtureExample invariants: consistent lengths/rates, mixture
// additivity within `rel_tol`, achieved ratios within `ratio_tol_db`.
void check_mixture(const MixtureExample& ex, double rel_tol = 1e-6,
                   double ratio_tol_db = 0.01);

}  // namespace tse

#endif  // TSE_SIGNAL_H_
