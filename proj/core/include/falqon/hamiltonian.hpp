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

#include <cstdint>
#include <vector>

#include "falqon/graph.hpp"
#include "falqon/pauli.hpp"

namespace falqon {

/// Diagonal Ising problem Hamiltonian stored as the explicit 2^n array
/// values[z] = <z|H|z>. For a MaxCut instance, values[z] = -cut_value(z),
/// so the ground energy is minus the maximum cut and the array is
/// symmetric under global bit flip.
struct IsingDiagonal {
    int n = 0;
    std::vector<double> values;

    double min_value() const;
    double max_abs_value() const;
    /// Basis states within a relative tolerance of the minimum.
    std::vector<std::uint64_t> ground_indices(double rel_tol = 1e-12) const;
};

/// Driver Hamiltonian. SumX is the standard transverse-field mixer; any
/// other Hermitian driver is carried as an explicit real-weighted Pauli
/// sum (real weights make Hermiticity structural).
struct DriverSpec {
    enum class Kind { SumX, Custom };
    Kind kind = Kind::SumX;
    PauliSum custom;

    static DriverSpec sum_x() { return {}; }
    static DriverSpec custom_pauli(PauliSum sum);

    PauliSum as_pauli_sum(int n) const;
};

/// Number of qubits above which 2^n arrays are refused.
inline constexpr int kStateCapacityQubits = 24;

IsingDiagonal build_problem_diagonal(const Graph& graph);

/// The feedback observable i[H_d, H_p] as a Pauli sum. For the SumX
/// driver on a MaxCut instance this is sum over edges of
/// w * (Y_u Z_v + Z_u Y_v); term count is at most n(n-1). Custom drivers
/// go through symbolic Pauli commutation.
PauliSum build_commutator_observable(const Graph& graph, const DriverSpec& driver);
PauliSum build_commutator_observable(const PauliSum& driver, const PauliSum& problem);

struct OperatorNorms {
    double problem = 0.0; // ||H_p||, exact for a diagonal operator
    double driver = 0.0;  // ||H_d||; n for SumX, dense eigensolve or
                          // sum-of-|coefficients| bound for custom drivers
};

OperatorNorms operator_norms(const Graph& graph, const DriverSpec& driver);

/// MaxCut problem Hamiltonian as an explicit Pauli sum (w/2 * Z_u Z_v per
/// edge plus the identity offset dropped); used for symbolic commutators.
PauliSum problem_pauli_sum(const Graph& graph);

} // namespace falqon
