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
#include "dense_ops.hpp"

#include <bit>

namespace falqon::detail {
namespace {

constexpr std::complex<double> kPowersOfI[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

std::complex<double> basis_phase(const PauliString& p, std::uint64_t z) {
    const int quarter = (p.y_count() + 2 * (std::popcount(z & p.z_mask) & 1)) & 3;
    return kPowersOfI[quarter];
}

} // namespace

std::complex<double> pauli_matrix_entry(const PauliString& p, std::uint64_t row, std::uint64_t col) {
    if (row != (col ^ p.x_mask)) return 0.0;
    return basis_phase(p, col);
}

Eigen::MatrixXcd dense_pauli_matrix(const PauliSum& sum) {
    const std::int64_t dim = std::int64_t{1} << sum.num_qubits();
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
    for (const PauliTerm& t : sum.terms()) {
        for (std::int64_t col = 0; col < dim; ++col) {
            const auto z = static_cast<std::uint64_t>(col);
            mat(static_cast<std::int64_t>(z ^ t.string.x_mask), col) +=
                t.coefficient * basis_phase(t.string, z);
        }
    }
    return mat;
}

Eigen::MatrixXcd dense_hamiltonian(const IsingDiagonal& diag, const DriverSpec& driver, double beta) {
    Eigen::MatrixXcd mat = beta * dense_pauli_matrix(driver.as_pauli_sum(diag.n));
    const std::int64_t dim = std::int64_t{1} << diag.n;
    for (std::int64_t z = 0; z < dim; ++z) {
        mat(z, z) += diag.values[static_cast<std::size_t>(z)];
    }
    return mat;
}

Eigen::MatrixXd dense_hamiltonian_sum_x(const IsingDiagonal& diag, double beta) {
    const std::int64_t dim = std::int64_t{1} << diag.n;
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(dim, dim);
    for (std::int64_t z = 0; z < dim; ++z) {
        mat(z, z) = diag.values[static_cast<std::size_t>(z)];
        for (int j = 0; j < diag.n; ++j) {
            mat(z ^ (std::int64_t{1} << j), z) += beta;
        }
    }
    return mat;
}

double spectral_norm(const PauliSum& sum) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense_pauli_matrix(sum),
                                                           Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
}

} // namespace falqon::detail
