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
#include <string_view>
#include <vector>

namespace falqon {

/// One Pauli string over n qubits, held as the pair of bit masks of the
/// symplectic representation: x_mask marks qubits carrying X or Y,
/// z_mask marks qubits carrying Z or Y.
///
/// Phase convention, fixed globally: Y|0> = i|1>, Y|1> = -i|0>.
struct PauliString {
    int n = 0;
    std::uint64_t x_mask = 0;
    std::uint64_t z_mask = 0;

    /// Parses letters such as "YZI"; character j is the operator on
    /// qubit j.
    static PauliString from_letters(std::string_view letters);
    std::string letters() const;

    bool identity() const { return x_mask == 0 && z_mask == 0; }
    int y_count() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// Result of multiplying two Pauli strings: phase * string, with phase a
/// power of i.
struct PauliProduct {
    std::complex<double> phase;
    PauliString string;
};

PauliProduct multiply(const PauliString& a, const PauliString& b);
bool commutes(const PauliString& a, const PauliString& b);

struct PauliTerm {
    double coefficient = 0.0;
    PauliString string;
};

/// Real-weighted sum of Pauli strings. Canonical form: terms sorted by
/// (z_mask, x_mask), no duplicates, no zero coefficients.
class PauliSum {
  public:
    PauliSum() = default;
    explicit PauliSum(int n) : n_(n) {}

    int num_qubits() const { return n_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// Accumulates a term, merging with an existing equal string.
    void add(double coefficient, const PauliString& string);

    /// Drops terms with |coefficient| <= eps and sorts canonically.
    void compress(double eps = 1e-12);

    double sum_abs_coefficients() const;

    static PauliSum sum_x(int n);
    static PauliSum sum_y(int n);

    /// One term per line: "coeff letters", e.g. "1 YZ".
    std::string to_text() const;
    static PauliSum from_text(std::string_view text);

  private:
    int n_ = 0;
    std::vector<PauliTerm> terms_;
};

/// Writes P|in> into `out` (distinct buffers, both of length 2^n).
void apply_pauli_string(const PauliString& string, std::span<const std::complex<double>> in,
                        std::span<std::complex<double>> out);

/// <psi|P|psi> as a complex number; real for a Hermitian context.
std::complex<double> pauli_string_expectation(const PauliString& string,
                                              std::span<const std::complex<double>> amplitudes);

/// Sum of coefficient-weighted string expectations; the imaginary part
/// is a numerical residue for real-weighted sums.
double pauli_sum_expectation(const PauliSum& sum, std::span<const std::complex<double>> amplitudes);

} // namespace falqon
