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
//
// Internal dense-matrix helpers shared by the implementation files; not
// part of the installed interface.
#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "falqon/hamiltonian.hpp"
#include "falqon/pauli.hpp"

namespace falqon::detail {

/// <z'|P|z> is basis_phase(P, z) when z' == z ^ x_mask, else 0.
std::complex<double> pauli_matrix_entry(const PauliString& p, std::uint64_t row, std::uint64_t col);

Eigen::MatrixXcd dense_pauli_matrix(const PauliSum& sum);

/// diag + beta * driver, complex Hermitian.
Eigen::MatrixXcd dense_hamiltonian(const IsingDiagonal& diag, const DriverSpec& driver, double beta);

/// Fast path for the SumX driver: the matrix is real symmetric.
Eigen::MatrixXd dense_hamiltonian_sum_x(const IsingDiagonal& diag, double beta);

double spectral_norm(const PauliSum& sum);

} // namespace falqon::detail
