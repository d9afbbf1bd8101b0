// src/signal.cc
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

#include "tse/signal.h"

namespace tse {

Waveform fit_to_length(const Waveform& w, Eigen::Index target_len, Rng* rng) {
  if (target_len < 1) throw LengthError("target length must be >= 1");
  const Eigen::Index n = w.samples.size();
  if (n < 1) throw LengthError("cannot fit an empty signal");
  Eigen::ArrayXd out(target_len);
  if (n >= target_len) {
    const auto offset =
        static_cast<Eigen::Index>(rng->uniform_int(static_cast<uint64_t>(n - target_len + 1)));
    out = w.samples.segment(offset, target_len);
  } else {
    const auto offset = static_cast<Eigen::Index>(rng->uniform_int(static_cast<uint64_t>(n)));
    for (Eigen::Index t = 0; t < target_len; ++t) {
      out[t] = w.samples[(offset + t) % n];
    }
  }
  return {std::move(out), w.sample_rate};
}

MixtureExample mix(const Waveform& target, const Waveform& interferer,
                   const Waveform& noise, double sir_db, double snr_db,
                   uint64_t seed) {
  if (target.samples.size() < 1 || interferer.samples.size() < 1 ||
      (noise.samples.size() < 1 && !is_no_noise(snr_db))) {
    throw LengthError("mix inputs must have at least 1 sample");
  }
  if (target.sample_rate != interferer.sample_rate ||
      (!is_no_noise(snr_db) && target.sample_rate != noise.sample_rate)) {
    throw FormatError("mix inputs must share a sample rate");
  }

  const Eigen::Index len = target.samples.size();
  Rng rng(derive_seed(seed, "fit"));
  const Waveform i_fit = fit_to_length(interferer, len, &rng);
  const Waveform i_scaled = scale_to_ratio(target, i_fit, sir_db);

  Waveform speech{target.samples + i_scaled.samples, target.sample_rate};
  Waveform n_scaled;
  if (is_no_noise(snr_db)) {
    n_scaled = {Eigen::ArrayXd::Zero(len), target.sample_rate};
  } else {
    const Waveform n_fit = fit_to_length(noise, len, &rng);
    n_scaled = scale_to_ratio(speech, n_fit, snr_db);
  }

  MixtureExample ex;
  ex.target = target;
  ex.interferer = i_scaled;
  ex.noise = n_scaled;
  ex.mixture = {speech.samples + n_scaled.samples, target.sample_rate};
  ex.sir_db = sir_db;
  ex.snr_db = snr_db;
  ex.seed = seed;
  return ex;
}

double measured_sir_db(const MixtureExample& ex) {
  return 10.0 * std::log10(power(ex.target) / power(ex.interferer));
}

double measured_snr_db(const MixtureExample& ex) {
  Eigen::ArrayXd speech = ex.target.samples + ex.interferer.samples;
  return 10.0 * std::log10(power(speech) / power(ex.noise));
}

void check_mixture(const MixtureExample& ex, double rel_tol, double ratio_tol_db) {
  check_waveform(ex.mixture, "mixture");
  check_waveform(ex.target, "target");
  check_waveform(ex.interferer, "interferer");
  const Eigen::Index len = ex.mixture.samples.size();
  if (ex.target.samples.size() != len || ex.interferer.samples.size() != len ||
      ex.noise.samples.size() != len) {
    throw LengthError("mixture tracks have mismatched lengths");
  }
  if (ex.target.sample_rate != ex.mixture.sample_rate ||
      ex.interferer.sample_rate != ex.mixture.sample_rate ||
      ex.noise.sample_rate != ex.mixture.sample_rate) {
    throw FormatError("mixture tracks have mismatched sample rates");
  }
  if (!ex.target_speaker_id.empty() &&
      ex.target_speaker_id == ex.interferer_speaker_id) {
    throw FormatError("target and interferer speaker ids coincide");
  }

  Eigen::ArrayXd resid =
      ex.mixture.samples - (ex.target.samples + ex.interferer.samples + ex.noise.samples);
  const double scale = std::sqrt(power(ex.mixture.samples));
  const double resid_rms = std::sqrt(power(resid));
  if (resid_rms > rel_tol * std::max(scale, 1e-30)) {
    throw FormatError("mixture does not equal target + interferer + noise");
  }

  if (std::abs(measured_sir_db(ex) - ex.sir_db) > ratio_tol_db) {
    throw FormatError("achieved SIR deviates from requested");
  }
  if (is_no_noise(ex.snr_db)) {
    if (ex.noise.samples.abs().maxCoeff() != 0.0) {
      throw FormatError("no-noise mixture has a nonzero noise track");
    }
  } else if (std::abs(measured_snr_db(ex) - ex.snr_db) > ratio_tol_db) {
    throw FormatError("achieved SNR deviates from requested");
  }
}

}  // namespace tse
