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
#include "falqon/measurement.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "dense_ops.hpp"
#include "falqon/errors.hpp"
#include "falqon/rng.hpp"

namespace falqon {

ObservableEstimator::ObservableEstimator(PauliSum observable, EstimatorConfig config, int num_qubits)
    : observable_(std::move(observable)), config_(config), n_(num_qubits) {
    if (observable_.num_qubits() != n_) throw ParameterError("observable qubit count mismatch");
    if (config_.mode != EstimatorConfig::Mode::Exact && config_.samples < 1)
        throw ParameterError("estimator needs at least one sample");

    if (config_.mode == EstimatorConfig::Mode::FullMultinomial) {
        if (n_ > kMultinomialQubitLimit)
            throw CapacityError("FullMultinomial estimator limited to 14 qubits");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
            detail::dense_pauli_matrix(observable_));
        const auto dim = static_cast<std::size_t>(solver.eigenvalues().size());
        eigenvalues_.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + dim);
        eigenvectors_.assign(solver.eigenvectors().data(), solver.eigenvectors().data() + dim * dim);
    }
}

double ObservableEstimator::estimate(const StateVector& state, std::uint64_t call_ordinal) const {
    if (state.num_qubits() != n_) throw ParameterError("state qubit count mismatch");
    switch (config_.mode) {
        case EstimatorConfig::Mode::Exact:
            return state.expectation(observable_);
        case EstimatorConfig::Mode::PauliShots:
            return estimate_pauli_shots(state, call_ordinal);
        case EstimatorConfig::Mode::FullMultinomial:
            return estimate_multinomial(state, call_ordinal);
    }
    throw ParameterError("unknown estimator mode");
}

double ObservableEstimator::estimate_pauli_shots(const StateVector& state,
                                                 std::uint64_t ordinal) const {
    RandomStream rng = RandomStream::derive(config_.seed, ordinal);
    double acc = 0.0;
    for (const PauliTerm& term : observable_.terms()) {
        // Non-identity Pauli strings have +-1 eigenvalues, so sampling is
        // Bernoulli with success probability (1 + <P>)/2.
        const double expect =
            pauli_string_expectation(term.string, state.amplitudes()).real();
        const double p = std::clamp(0.5 * (1.0 + expect), 0.0, 1.0);
        int plus = 0;
        for (int s = 0; s < config_.samples; ++s) plus += rng.bernoulli(p) ? 1 : 0;
        const double mean = 2.0 * static_cast<double>(plus) / config_.samples - 1.0;
        acc += term.coefficient * mean;
    }
    return acc;
}

double ObservableEstimator::estimate_multinomial(const StateVector& state,
                                                 std::uint64_t ordinal) const {
    const std::size_t dim = state.dimension();
    // Born weights |<v_i|psi>|^2 over the cached eigenbasis.
    Eigen::Map<const Eigen::MatrixXcd> vecs(eigenvectors_.data(), static_cast<Eigen::Index>(dim),
                                            static_cast<Eigen::Index>(dim));
    Eigen::Map<const Eigen::VectorXcd> psi(state.amplitudes().data(),
                                           static_cast<Eigen::Index>(dim));
    const Eigen::VectorXcd projections = vecs.adjoint() * psi;

    std::vector<double> cumulative(dim);
    double acc = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        acc += std::norm(projections[static_cast<Eigen::Index>(i)]);
        cumulative[i] = acc;
    }

    RandomStream rng = RandomStream::derive(config_.seed, ordinal);
    double sum = 0.0;
    for (int s = 0; s < config_.samples; ++s) {
        const double u = rng.uniform01() * acc;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        auto idx = static_cast<std::size_t>(std::distance(cumulative.begin(), it));
        if (idx >= dim) idx = dim - 1;
        sum += eigenvalues_[idx];
    }
    return sum / config_.samples;
}

double estimate_observable(const StateVector& state, const PauliSum& observable,
                           const EstimatorConfig& config, std::uint64_t call_ordinal) {
    return ObservableEstimator(observable, config, state.num_qubits())
        .estimate(state, call_ordinal);
}

} // namespace falqon
