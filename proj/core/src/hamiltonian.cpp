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
#include "falqon/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <utility>

#include "dense_ops.hpp"
#include "falqon/errors.hpp"

namespace falqon {

namespace {
constexpr int kDenseNormQubitLimit = 10;
}

double IsingDiagonal::min_value() const {
    return *std::min_element(values.begin(), values.end());
}

double IsingDiagonal::max_abs_value() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

std::vector<std::uint64_t> IsingDiagonal::ground_indices(double rel_tol) const {
    const double min = min_value();
    const double tol = rel_tol * std::max(1.0, std::abs(min));
    std::vector<std::uint64_t> out;
    for (std::size_t z = 0; z < values.size(); ++z) {
        if (values[z] <= min + tol) out.push_back(static_cast<std::uint64_t>(z));
    }
    return out;
}

DriverSpec DriverSpec::custom_pauli(PauliSum sum) {
    DriverSpec d;
    d.kind = Kind::Custom;
    d.custom = std::move(sum);
    d.custom.compress();
    return d;
}

PauliSum DriverSpec::as_pauli_sum(int n) const {
    if (kind == Kind::SumX) return PauliSum::sum_x(n);
    if (custom.num_qubits() != n) throw ParameterError("custom driver qubit count mismatch");
    return custom;
}

IsingDiagonal build_problem_diagonal(const Graph& graph) {
    graph.validate();
    if (graph.n > kStateCapacityQubits)
        throw CapacityError("problem diagonal limited to 24 qubits");

    IsingDiagonal diag;
    diag.n = graph.n;
    const std::size_t dim = std::size_t{1} << graph.n;
    diag.values.assign(dim, 0.0);
    for (const Edge& e : graph.edges) {
        const std::uint64_t mask = (1ull << e.u) | (1ull << e.v);
        for (std::uint64_t z = 0; z < dim; ++z) {
            // Edge contributes -w when cut: eigenvalue is -cut_value(z).
            if (std::popcount(z & mask) & 1) diag.values[z] -= e.weight;
        }
    }
    return diag;
}

PauliSum problem_pauli_sum(const Graph& graph) {
    PauliSum sum(graph.n);
    for (const Edge& e : graph.edges) {
        PauliString zz;
        zz.n = graph.n;
        zz.z_mask = (1ull << e.u) | (1ull << e.v);
        sum.add(0.5 * e.weight, zz);
    }
    sum.compress();
    return sum;
}

PauliSum build_commutator_observable(const PauliSum& driver, const PauliSum& problem) {
    if (driver.num_qubits() != problem.num_qubits())
        throw ParameterError("commutator operand qubit counts differ");

    std::map<std::pair<std::uint64_t, std::uint64_t>, std::complex<double>> acc;
    for (const PauliTerm& a : driver.terms()) {
        for (const PauliTerm& b : problem.terms()) {
            if (commutes(a.string, b.string)) continue;
            // For anticommuting strings, i[A, B] = 2i * AB.
            const PauliProduct prod = multiply(a.string, b.string);
            const std::complex<double> coeff =
                std::complex<double>(0.0, 2.0) * prod.phase * (a.coefficient * b.coefficient);
            acc[{prod.string.x_mask, prod.string.z_mask}] += coeff;
        }
    }

    PauliSum out(driver.num_qubits());
    for (const auto& [masks, coeff] : acc) {
        if (std::abs(coeff) <= 1e-14) continue;
        if (std::abs(coeff.imag()) > 1e-12 * std::max(1.0, std::abs(coeff.real())))
            throw NumericalError("commutator of Hermitian Pauli sums came out non-Hermitian");
        PauliString p;
        p.n = driver.num_qubits();
        p.x_mask = masks.first;
        p.z_mask = masks.second;
        out.add(coeff.real(), p);
    }
    out.compress();
    return out;
}

PauliSum build_commutator_observable(const Graph& graph, const DriverSpec& driver) {
    graph.validate();
    if (driver.kind == DriverSpec::Kind::SumX) {
        PauliSum sum(graph.n);
        for (const Edge& e : graph.edges) {
            PauliString yz;
            yz.n = graph.n;
            yz.x_mask = 1ull << e.u;
            yz.z_mask = (1ull << e.u) | (1ull << e.v);
            sum.add(e.weight, yz);
            PauliString zy;
            zy.n = graph.n;
            zy.x_mask = 1ull << e.v;
            zy.z_mask = (1ull << e.u) | (1ull << e.v);
            sum.add(e.weight, zy);
        }
        sum.compress();
        return sum;
    }
    return build_commutator_observable(driver.as_pauli_sum(graph.n), problem_pauli_sum(graph));
}

OperatorNorms operator_norms(const Graph& graph, const DriverSpec& driver) {
    OperatorNorms norms;
    norms.problem = build_problem_diagonal(graph).max_abs_value();
    if (driver.kind == DriverSpec::Kind::SumX) {
        norms.driver = static_cast<double>(graph.n);
    } else if (graph.n <= kDenseNormQubitLimit) {
        norms.driver = detail::spectral_norm(driver.as_pauli_sum(graph.n));
    } else {
        // Upper bound; safe wherever the norm enters a denominator bound.
        norms.driver = driver.custom.sum_abs_coefficients();
    }
    return norms;
}

} // namespace falqon
