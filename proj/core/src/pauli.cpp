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
#include "falqon/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "falqon/errors.hpp"

namespace falqon {
namespace {

constexpr std::complex<double> kPowersOfI[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

// phase(z) for P|z> = phase(z) |z ^ x_mask>: i^{#Y} * (-1)^{|z & z_mask|}.
inline std::complex<double> basis_phase(const PauliString& p, std::uint64_t z) {
    const int quarter =
        (p.y_count() + 2 * (std::popcount(z & p.z_mask) & 1)) & 3;
    return kPowersOfI[quarter];
}

} // namespace

PauliString PauliString::from_letters(std::string_view letters) {
    PauliString p;
    p.n = static_cast<int>(letters.size());
    if (p.n > 64) throw ParameterError("Pauli string limited to 64 qubits");
    for (int j = 0; j < p.n; ++j) {
        switch (letters[static_cast<std::size_t>(j)]) {
            case 'I': break;
            case 'X': p.x_mask |= 1ull << j; break;
            case 'Y': p.x_mask |= 1ull << j; p.z_mask |= 1ull << j; break;
            case 'Z': p.z_mask |= 1ull << j; break;
            default: throw ParameterError("Pauli letters must be one of I, X, Y, Z");
        }
    }
    return p;
}

std::string PauliString::letters() const {
    std::string s(static_cast<std::size_t>(n), 'I');
    for (int j = 0; j < n; ++j) {
        const bool x = (x_mask >> j) & 1ull;
        const bool z = (z_mask >> j) & 1ull;
        if (x && z) s[static_cast<std::size_t>(j)] = 'Y';
        else if (x) s[static_cast<std::size_t>(j)] = 'X';
        else if (z) s[static_cast<std::size_t>(j)] = 'Z';
    }
    return s;
}

int PauliString::y_count() const { return std::popcount(x_mask & z_mask); }

PauliProduct multiply(const PauliString& a, const PauliString& b) {
    if (a.n != b.n) throw ParameterError("Pauli string size mismatch");
    PauliString out;
    out.n = a.n;
    out.x_mask = a.x_mask ^ b.x_mask;
    out.z_mask = a.z_mask ^ b.z_mask;
    // Letter strings factor as i^{#Y} X^x Z^z; commuting Z^za past X^xb
    // costs (-1)^{|za & xb|}, and the result owes a factor i^{-#Y(out)}.
    int quarter = a.y_count() + b.y_count() - out.y_count();
    quarter += 2 * (std::popcount(a.z_mask & b.x_mask) & 1);
    return {kPowersOfI[((quarter % 4) + 4) % 4], out};
}

bool commutes(const PauliString& a, const PauliString& b) {
    const int anti = (std::popcount(a.x_mask & b.z_mask) + std::popcount(a.z_mask & b.x_mask)) & 1;
    return anti == 0;
}

void PauliSum::add(double coefficient, const PauliString& string) {
    if (string.n != n_) throw ParameterError("Pauli term size mismatch");
    for (PauliTerm& t : terms_) {
        if (t.string == string) {
            t.coefficient += coefficient;
            return;
        }
    }
    terms_.push_back({coefficient, string});
}

void PauliSum::compress(double eps) {
    std::erase_if(terms_, [eps](const PauliTerm& t) { return std::abs(t.coefficient) <= eps; });
    std::sort(terms_.begin(), terms_.end(), [](const PauliTerm& a, const PauliTerm& b) {
        return std::tie(a.string.z_mask, a.string.x_mask) <
               std::tie(b.string.z_mask, b.string.x_mask);
    });
}

double PauliSum::sum_abs_coefficients() const {
    double sum = 0.0;
    for (const PauliTerm& t : terms_) sum += std::abs(t.coefficient);
    return sum;
}

PauliSum PauliSum::sum_x(int n) {
    PauliSum s(n);
    for (int j = 0; j < n; ++j) {
        PauliString p;
        p.n = n;
        p.x_mask = 1ull << j;
        s.add(1.0, p);
    }
    return s;
}

PauliSum PauliSum::sum_y(int n) {
    PauliSum s(n);
    for (int j = 0; j < n; ++j) {
        PauliString p;
        p.n = n;
        p.x_mask = 1ull << j;
        p.z_mask = 1ull << j;
        s.add(1.0, p);
    }
    return s;
}

std::string PauliSum::to_text() const {
    std::string out;
    for (const PauliTerm& t : terms_) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", t.coefficient);
        out += buf;
        out += " ";
        out += t.string.letters();
        out += "\n";
    }
    return out;
}

PauliSum PauliSum::from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    PauliSum sum;
    bool first = true;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        double coeff;
        std::string letters;
        if (!(ls >> coeff)) continue;
        if (!(ls >> letters)) throw ParameterError("Pauli term line needs letters");
        PauliString p = PauliString::from_letters(letters);
        if (first) {
            sum = PauliSum(p.n);
            first = false;
        }
        sum.add(coeff, p);
    }
    sum.compress(0.0);
    return sum;
}

void apply_pauli_string(const PauliString& p, std::span<const std::complex<double>> in,
                        std::span<std::complex<double>> out) {
    const std::size_t dim = in.size();
    if (out.size() != dim) throw ParameterError("Pauli apply: buffer size mismatch");
    for (std::uint64_t y = 0; y < dim; ++y) {
        const std::uint64_t src = y ^ p.x_mask;
        out[y] = basis_phase(p, src) * in[src];
    }
}

std::complex<double> pauli_string_expectation(const PauliString& p,
                                              std::span<const std::complex<double>> amplitudes) {
    std::complex<double> acc = 0.0;
    const std::size_t dim = amplitudes.size();
    for (std::uint64_t y = 0; y < dim; ++y) {
        const std::uint64_t src = y ^ p.x_mask;
        acc += std::conj(amplitudes[y]) * basis_phase(p, src) * amplitudes[src];
    }
    return acc;
}

double pauli_sum_expectation(const PauliSum& sum, std::span<const std::complex<double>> amplitudes) {
    double acc = 0.0;
    for (const PauliTerm& t : sum.terms()) {
        acc += t.coefficient * pauli_string_expectation(t.string, amplitudes).real();
    }
    return acc;
}

} // namespace falqon
