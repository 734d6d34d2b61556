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
#include "falqon/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>

#include "falqon/errors.hpp"
#include "falqon/rng.hpp"

namespace falqon {
namespace {

std::size_t checked_dimension(int n) {
    if (n < 1) throw ParameterError("state needs at least one qubit");
    if (n > kStateCapacityQubits) throw CapacityError("statevector limited to 24 qubits");
    return std::size_t{1} << n;
}

} // namespace

StateVector StateVector::driver_ground(int n) {
    StateVector psi;
    psi.n_ = n;
    const std::size_t dim = checked_dimension(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    psi.amps_.resize(dim);
    for (std::uint64_t z = 0; z < dim; ++z) {
        psi.amps_[z] = (std::popcount(z) & 1) ? -scale : scale;
    }
    return psi;
}

StateVector StateVector::uniform_plus(int n) {
    StateVector psi;
    psi.n_ = n;
    const std::size_t dim = checked_dimension(n);
    psi.amps_.assign(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
    return psi;
}

StateVector StateVector::basis_state(int n, std::uint64_t z) {
    StateVector psi;
    psi.n_ = n;
    const std::size_t dim = checked_dimension(n);
    if (z >= dim) throw ParameterError("basis index out of range");
    psi.amps_.assign(dim, 0.0);
    psi.amps_[z] = 1.0;
    return psi;
}

StateVector StateVector::from_amplitudes(int n, std::vector<std::complex<double>> amplitudes) {
    const std::size_t dim = checked_dimension(n);
    if (amplitudes.size() != dim) throw ParameterError("amplitude count must be 2^n");
    double norm2 = 0.0;
    for (const auto& a : amplitudes) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 1e-9) throw ParameterError("amplitudes are not normalized");
    StateVector psi;
    psi.n_ = n;
    psi.amps_ = std::move(amplitudes);
    return psi;
}

double StateVector::norm() const {
    double norm2 = 0.0;
    for (const auto& a : amps_) norm2 += std::norm(a);
    return std::sqrt(norm2);
}

double StateVector::probability(std::uint64_t z) const {
    if (z >= amps_.size()) throw ParameterError("basis index out of range");
    return std::norm(amps_[z]);
}

std::complex<double> StateVector::inner_product(const StateVector& other) const {
    if (other.n_ != n_) throw ParameterError("state size mismatch");
    std::complex<double> acc = 0.0;
    for (std::size_t z = 0; z < amps_.size(); ++z) acc += std::conj(amps_[z]) * other.amps_[z];
    return acc;
}

void StateVector::apply_diagonal_phase(const IsingDiagonal& diag, double dt) {
    if (diag.n != n_) throw ParameterError("diagonal size mismatch");
    for (std::size_t z = 0; z < amps_.size(); ++z) {
        const double theta = -diag.values[z] * dt;
        amps_[z] *= std::complex<double>(std::cos(theta), std::sin(theta));
    }
}

void StateVector::apply_phase_table(std::span<const std::complex<double>> phases) {
    if (phases.size() != amps_.size()) throw ParameterError("phase table size mismatch");
    for (std::size_t z = 0; z < amps_.size(); ++z) amps_[z] *= phases[z];
}

void StateVector::apply_x_rotation(int qubit, double angle) {
    if (qubit < 0 || qubit >= n_) throw ParameterError("qubit index out of range");
    const double c = std::cos(angle);
    const std::complex<double> ms(0.0, -std::sin(angle));
    const std::uint64_t bit = 1ull << qubit;
    const std::size_t dim = amps_.size();
    for (std::uint64_t base = 0; base < dim; ++base) {
        if (base & bit) continue;
        const std::uint64_t up = base | bit;
        const std::complex<double> a0 = amps_[base];
        const std::complex<double> a1 = amps_[up];
        amps_[base] = c * a0 + ms * a1;
        amps_[up] = ms * a0 + c * a1;
    }
}

void StateVector::apply_uniform_x_rotation(double angle) {
    for (int j = 0; j < n_; ++j) apply_x_rotation(j, angle);
}

void StateVector::apply_pauli_exponential(const PauliString& p, double theta) {
    if (p.n != n_) throw ParameterError("Pauli string size mismatch");
    const double c = std::cos(theta);
    const std::complex<double> ms(0.0, -std::sin(theta));
    const std::size_t dim = amps_.size();

    if (p.x_mask == 0) {
        // Diagonal string: amplitude-wise phase c - i s (-1)^{|z & z_mask|}.
        for (std::uint64_t z = 0; z < dim; ++z) {
            const double sign = (std::popcount(z & p.z_mask) & 1) ? -1.0 : 1.0;
            amps_[z] *= c + ms * sign;
        }
        return;
    }

    const int y_quarter = p.y_count() & 3;
    constexpr std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (std::uint64_t z = 0; z < dim; ++z) {
        const std::uint64_t partner = z ^ p.x_mask;
        if (partner < z) continue;
        const std::complex<double> phase_from_partner =
            powers[(y_quarter + 2 * (std::popcount(partner & p.z_mask) & 1)) & 3];
        const std::complex<double> phase_from_z =
            powers[(y_quarter + 2 * (std::popcount(z & p.z_mask) & 1)) & 3];
        const std::complex<double> a0 = amps_[z];
        const std::complex<double> a1 = amps_[partner];
        amps_[z] = c * a0 + ms * phase_from_partner * a1;
        amps_[partner] = c * a1 + ms * phase_from_z * a0;
    }
}

void StateVector::apply_driver(const DriverSpec& driver, double angle) {
    if (driver.kind == DriverSpec::Kind::SumX) {
        apply_uniform_x_rotation(angle);
        return;
    }
    // Symmetric product formula; exact when the driver terms commute.
    const PauliSum& sum = driver.as_pauli_sum(n_);
    const auto& terms = sum.terms();
    for (const PauliTerm& t : terms) apply_pauli_exponential(t.string, 0.5 * angle * t.coefficient);
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        apply_pauli_exponential(it->string, 0.5 * angle * it->coefficient);
}

double StateVector::expectation_diagonal(const IsingDiagonal& diag) const {
    if (diag.n != n_) throw ParameterError("diagonal size mismatch");
    double acc = 0.0;
    for (std::size_t z = 0; z < amps_.size(); ++z) acc += diag.values[z] * std::norm(amps_[z]);
    return acc;
}

double StateVector::expectation(const PauliSum& observable) const {
    if (observable.num_qubits() != n_) throw ParameterError("observable size mismatch");
    return pauli_sum_expectation(observable, amps_);
}

std::vector<std::uint64_t> StateVector::sample_bitstrings(int shots, std::uint64_t seed) const {
    if (shots < 1) throw ParameterError("shots must be >= 1");
    std::vector<double> cumulative(amps_.size());
    double acc = 0.0;
    for (std::size_t z = 0; z < amps_.size(); ++z) {
        acc += std::norm(amps_[z]);
        cumulative[z] = acc;
    }
    RandomStream rng(seed);
    std::vector<std::uint64_t> out(static_cast<std::size_t>(shots));
    for (auto& sample : out) {
        const double u = rng.uniform01() * acc;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        sample = static_cast<std::uint64_t>(std::distance(cumulative.begin(), it));
        if (sample >= amps_.size()) sample = amps_.size() - 1;
    }
    return out;
}

void StateVector::save_binary(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write state dump: " + path);
    for (const auto& a : amps_) {
        const double re = a.real();
        const double im = a.imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof re);
        out.write(reinterpret_cast<const char*>(&im), sizeof im);
    }
    if (!out) throw IoError("short write: " + path);
}

StateVector StateVector::load_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw IoError("cannot read state dump: " + path);
    const auto bytes = static_cast<std::size_t>(in.tellg());
    in.seekg(0);
    const std::size_t dim = bytes / (2 * sizeof(double));
    if (dim == 0 || (dim & (dim - 1)) != 0 || bytes != dim * 2 * sizeof(double))
        throw IoError("state dump is not a 2^n array of complex doubles");
    StateVector psi;
    psi.n_ = std::countr_zero(dim);
    psi.amps_.resize(dim);
    for (auto& a : psi.amps_) {
        double re, im;
        in.read(reinterpret_cast<char*>(&re), sizeof re);
        in.read(reinterpret_cast<char*>(&im), sizeof im);
        a = {re, im};
    }
    if (!in) throw IoError("truncated state dump: " + path);
    return psi;
}

std::vector<std::complex<double>> problem_phase_table(const IsingDiagonal& diag, double dt) {
    std::vector<std::complex<double>> phases(diag.values.size());
    for (std::size_t z = 0; z < phases.size(); ++z) {
        const double theta = -diag.values[z] * dt;
        phases[z] = {std::cos(theta), std::sin(theta)};
    }
    return phases;
}

void apply_layer(StateVector& state, const IsingDiagonal& diag, double beta, double dt,
                 const DriverSpec& driver) {
    if (dt <= 0.0) throw ParameterError("dt must be positive");
    state.apply_diagonal_phase(diag, dt);
    state.apply_driver(driver, beta * dt);
}

} // namespace falqon
