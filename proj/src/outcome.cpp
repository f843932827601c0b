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

#include "enigma/outcome.hpp"

#include <cmath>

#include "enigma/errors.hpp"

namespace enigma {

std::string to_bitstring(std::span<const std::uint8_t> x) {
    std::string bits(x.size(), '0');
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > 1) throw DomainError("bit value must be 0 or 1");
        if (x[i]) bits[i] = '1';
    }
    return bits;
}

BitConfig from_bitstring(std::string_view bits) {
    BitConfig x(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            x[i] = 1;
        } else if (bits[i] != '0') {
            throw DomainError("bitstring contains a character other than '0' or '1'");
        }
    }
    return x;
}

std::string index_to_bitstring(std::uint64_t index, index_type n) {
    std::string bits(n, '0');
    for (index_type i = 0; i < n; ++i) {
        if ((index >> i) & 1u) bits[i] = '1';
    }
    return bits;
}

OutcomeDistribution::OutcomeDistribution(index_type n) : n_(n) {
    if (n == 0) throw DomainError("distribution must cover at least one bit");
}

OutcomeDistribution::OutcomeDistribution(index_type n, const Counts& counts) : OutcomeDistribution(n) {
    for (const auto& [bits, weight] : counts) add(bits, weight);
}

void OutcomeDistribution::add(const std::string& bits, double weight) {
    if (bits.size() != n_) {
        throw DimensionError("bitstring '" + bits + "' does not have length " + std::to_string(n_));
    }
    from_bitstring(bits);  // validates the alphabet
    if (!(weight >= 0.0) || !std::isfinite(weight)) throw DomainError("outcome weight must be finite and nonnegative");
    counts_[bits] += weight;
}

double OutcomeDistribution::weight(const std::string& bits) const {
    auto it = counts_.find(bits);
    return it == counts_.end() ? 0.0 : it->second;
}

double OutcomeDistribution::total_weight() const noexcept {
    double total = 0.0;
    for (const auto& entry : counts_) total += entry.second;
    return total;
}

bool OutcomeDistribution::is_normalized(double tolerance) const noexcept {
    return std::abs(total_weight() - 1.0) <= tolerance;
}

OutcomeDistribution OutcomeDistribution::normalized() const {
    const double total = total_weight();
    if (!(total > 0.0)) throw DomainError("cannot normalize a distribution with zero total weight");
    OutcomeDistribution out(n_);
    for (const auto& [bits, weight] : counts_) out.counts_[bits] = weight / total;
    return out;
}

}  // namespace enigma
