// Copyright 2026 The Enigma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only helpers: random instances and a naive index-order enumerator that
// shares no code with the library's Gray-code solver.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "enigma/core.hpp"

namespace enigma::testing {

inline SpinConfig spins_of(std::uint64_t s, index_type n) {
    SpinConfig z(n);
    for (index_type i = 0; i < n; ++i) z[i] = ((s >> i) & 1u) ? 1 : -1;
    return z;
}

inline BitConfig bits_of(std::uint64_t s, index_type n) {
    BitConfig x(n);
    for (index_type i = 0; i < n; ++i) x[i] = (s >> i) & 1u;
    return x;
}

/// Real coefficients, each pair present with probability `density`.
inline IsingModel random_ising(index_type n, Rng& rng, double density = 0.5) {
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::bernoulli_distribution present(density);
    IsingModel model(n, coeff(rng));
    for (index_type i = 0; i < n; ++i) model.set_linear(i, coeff(rng));
    for (index_type i = 0; i < n; ++i) {
        for (index_type j = i + 1; j < n; ++j) {
            if (present(rng)) model.set_quadratic(i, j, coeff(rng));
        }
    }
    return model;
}

inline std::vector<double> naive_ising_energies(const IsingModel& model) {
    const index_type n = model.num_variables();
    std::vector<double> out(std::size_t{1} << n);
    for (std::uint64_t s = 0; s < out.size(); ++s) out[s] = eval_ising(model, spins_of(s, n));
    return out;
}

inline std::vector<double> naive_qubo_energies(const QuboModel& model) {
    const index_type n = model.num_variables();
    std::vector<double> out(std::size_t{1} << n);
    for (std::uint64_t s = 0; s < out.size(); ++s) out[s] = eval_qubo(model, bits_of(s, n));
    return out;
}

inline std::vector<double> sorted(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v;
}

inline bool close(double a, double b, double rel, double abs_floor = 1e-12) {
    return std::abs(a - b) <= std::max(abs_floor, rel * std::max(std::abs(a), std::abs(b)));
}

}  // namespace enigma::testing
