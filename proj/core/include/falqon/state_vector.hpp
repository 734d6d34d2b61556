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
#include <span>
#include <string>
#include <vector>

#include "falqon/hamiltonian.hpp"
#include "falqon/pauli.hpp"

namespace falqon {

/// Full 2^n statevector. Evolution member functions mutate in place;
/// one run owns one state, distinct runs never share.
class StateVector {
  public:
    StateVector() = default;

    /// Tensor power of (|0> - |1>)/sqrt(2): the SumX driver ground state,
    /// energy -n.
    static StateVector driver_ground(int n);
    /// Tensor power of (|0> + |1>)/sqrt(2).
    static StateVector uniform_plus(int n);
    static StateVector basis_state(int n, std::uint64_t z);
    /// Validates normalization to 1e-9.
    static StateVector from_amplitudes(int n, std::vector<std::complex<double>> amplitudes);

    int num_qubits() const { return n_; }
    std::size_t dimension() const { return amps_.size(); }
    std::span<const std::complex<double>> amplitudes() const { return amps_; }
    std::span<std::complex<double>> mutable_amplitudes() { return amps_; }

    double norm() const;
    double probability(std::uint64_t z) const;
    std::complex<double> inner_product(const StateVector& other) const;

    /// Multiplies amplitude z by exp(-i * values[z] * dt).
    void apply_diagonal_phase(const IsingDiagonal& diag, double dt);
    /// Same with precomputed per-basis phases (fixed-dt inner loops).
    void apply_phase_table(std::span<const std::complex<double>> phases);
    /// exp(-i * angle * X) on one qubit.
    void apply_x_rotation(int qubit, double angle);
    /// exp(-i * angle * sum_j X_j): the same rotation on every qubit.
    void apply_uniform_x_rotation(double angle);
    /// exp(-i * theta * P) for one Pauli string.
    void apply_pauli_exponential(const PauliString& string, double theta);
    /// Driver-layer unitary exp(-i * angle * H_d). Exact product of
    /// single-qubit rotations for SumX; a symmetric (Strang) product over
    /// the terms for custom drivers.
    void apply_driver(const DriverSpec& driver, double angle);

    double expectation_diagonal(const IsingDiagonal& diag) const;
    double expectation(const PauliSum& observable) const;

    /// `shots` independent draws from |amplitudes|^2; deterministic
    /// under the seed.
    std::vector<std::uint64_t> sample_bitstrings(int shots, std::uint64_t seed) const;

    // Debug dump: little-endian (real, imag) float64 pairs in basis order.
    void save_binary(const std::string& path) const;
    static StateVector load_binary(const std::string& path);

  private:
    int n_ = 0;
    std::vector<std::complex<double>> amps_;
};

/// Phase table for exp(-i * values[z] * dt).
std::vector<std::complex<double>> problem_phase_table(const IsingDiagonal& diag, double dt);

/// One Trotter layer U_d(beta) U_p: the diagonal problem phase over dt,
/// then the driver rotation with angle beta * dt.
void apply_layer(StateVector& state, const IsingDiagonal& diag, double beta, double dt,
                 const DriverSpec& driver);

} // namespace falqon
