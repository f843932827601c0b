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

#include "enigma/enigma1.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "enigma/errors.hpp"

namespace enigma {

bool KeyI::is_target(index_type i) const {
    return std::binary_search(targets.begin(), targets.end(), i);
}

void KeyI::validate() const {
    if (n == 0) throw InvalidKeyError("key covers zero qubits");
    if (!(tau > 0.0) || !std::isfinite(tau)) throw InvalidKeyError("stretch factor must be positive and finite");
    for (std::size_t k = 0; k < targets.size(); ++k) {
        if (targets[k] >= n) throw InvalidKeyError("target qubit " + std::to_string(targets[k]) + " out of range");
        if (k > 0 && targets[k] <= targets[k - 1]) throw InvalidKeyError("target list must be sorted and unique");
    }
}

KeyI gen_key1(index_type n, Rng& rng, std::optional<double> tau_override) {
    if (n == 0) throw DomainError("key size must be at least 1");
    KeyI key;
    key.n = n;
    std::bernoulli_distribution coin(0.5);
    for (index_type i = 0; i < n; ++i) {
        if (coin(rng)) key.targets.push_back(i);
    }
    if (tau_override) {
        key.tau = *tau_override;
    } else {
        std::normal_distribution<double> normal(1.0, 1.0);
        key.tau = 1.0 + std::abs(normal(rng));
    }
    key.validate();
    return key;
}

IsingModel encrypt1(const IsingModel& model, const KeyI& key) {
    key.validate();
    const index_type n = model.num_variables();
    if (key.n != n) {
        throw DimensionError("key covers " + std::to_string(key.n) + " qubits, model has " + std::to_string(n));
    }
    std::vector<bool> flipped(n, false);
    for (auto t : key.targets) flipped[t] = true;

    IsingModel out(n);
    for (index_type i = 0; i < n; ++i) {
        const double h = flipped[i] ? -model.linear(i) : model.linear(i);
        out.set_linear(i, key.tau * h);
    }
    for (const auto& [pair, value] : model.quadratic()) {
        const double J = flipped[pair.first] != flipped[pair.second] ? -value : value;
        out.set_quadratic(pair.first, pair.second, key.tau * J);
    }
    return out;
}

std::pair<IsingModel, KeyI> obfuscate1(const IsingModel& model, Rng& rng, std::optional<double> tau_override) {
    KeyI key = gen_key1(model.num_variables(), rng, tau_override);
    key.offset = model.offset();
    return {encrypt1(model, key), key};
}

OutcomeDistribution decrypt1(const OutcomeDistribution& dist, const KeyI& key) {
    key.validate();
    if (dist.num_bits() != key.n) {
        throw DimensionError("distribution has " + std::to_string(dist.num_bits()) + "-bit outcomes, key covers " +
                             std::to_string(key.n) + " qubits");
    }
    OutcomeDistribution out(key.n);
    for (const auto& [bits, weight] : dist.counts()) {
        std::string toggled = bits;
        for (auto t : key.targets) toggled[t] = toggled[t] == '0' ? '1' : '0';
        out.add(toggled, weight);
    }
    return out;
}

SpinConfig flip_targets(std::span<const std::int8_t> z, const KeyI& key) {
    if (z.size() != key.n) throw DimensionError("spin configuration does not match key size");
    SpinConfig out(z.begin(), z.end());
    for (auto t : key.targets) out[t] = static_cast<std::int8_t>(-out[t]);
    return out;
}

double recover_energy1(double value, const KeyI& key, double original_offset) {
    if (!(key.tau > 0.0)) throw InvalidKeyError("stretch factor must be positive");
    return value / key.tau + original_offset;
}

double attack_complexity1(index_type n) {
    if (n == 0) throw DomainError("problem size must be at least 1");
    return static_cast<double>(n);
}

}  // namespace enigma
