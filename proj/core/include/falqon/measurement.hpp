// Copyright 2026 The falqon-lab authors.
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
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "falqon/pauli.hpp"
#include "falqon/state_vector.hpp"

namespace falqon {

/// How an observable expectation is estimated each layer.
///
/// Exact computes the expectation to machine precision. PauliShots draws
/// `samples` Bernoulli outcomes per Pauli term (the term-by-term
/// measurement model; scales to any n the simulator handles).
/// FullMultinomial draws `samples` eigenvalues of the full observable
/// from their Born distribution (requires a dense eigendecomposition,
/// n <= 14). Every mode is unbiased.
struct EstimatorConfig {
    enum class Mode { Exact, PauliShots, FullMultinomial };
    Mode mode = Mode::Exact;
    int samples = 1;
    std::uint64_t seed = 0;
};

/// Binds an observable to an estimator configuration. FullMultinomial
/// eigendecomposes the observable once at construction so that per-layer
/// estimates cost one projection. Each estimate owns an RNG stream
/// derived from (config seed, call ordinal), so concurrent or reordered
/// calls reproduce exactly.
class ObservableEstimator {
  public:
    ObservableEstimator(PauliSum observable, EstimatorConfig config, int num_qubits);

    double estimate(const StateVector& state, std::uint64_t call_ordinal) const;

    const PauliSum& observable() const { return observable_; }
    const EstimatorConfig& config() const { return config_; }

  private:
    double estimate_pauli_shots(const StateVector& state, std::uint64_t ordinal) const;
    double estimate_multinomial(const StateVector& state, std::uint64_t ordinal) const;

    PauliSum observable_;
    EstimatorConfig config_;
    int n_ = 0;
    // FullMultinomial cache: eigenvalues and column-major eigenvectors.
    std::vector<double> eigenvalues_;
    std::vector<std::complex<double>> eigenvectors_;
};

/// One-shot convenience wrapper around ObservableEstimator.
double estimate_observable(const StateVector& state, const PauliSum& observable,
                           const EstimatorConfig& config, std::uint64_t call_ordinal = 0);

/// Highest qubit count accepted by the FullMultinomial mode.
inline constexpr int kMultinomialQubitLimit = 14;

} // namespace falqon
