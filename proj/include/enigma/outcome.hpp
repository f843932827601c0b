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

#pragma once

#include <map>
#include <string>
#include <string_view>

#include "enigma/core.hpp"

namespace enigma {

/// Bitstrings are written with character i holding the bit of qubit i, so
/// "01" means x_0 = 0 (z_0 = -1) and x_1 = 1 (z_1 = +1).
std::string to_bitstring(std::span<const std::uint8_t> x);
BitConfig from_bitstring(std::string_view bits);
/// Bitstring of the basis-state index: character i is bit i of `index`.
std::string index_to_bitstring(std::uint64_t index, index_type n);

/// Measured outcomes with nonnegative weights. All bitstrings share length n.
class OutcomeDistribution {
 public:
    using Counts = std::map<std::string, double>;

    explicit OutcomeDistribution(index_type n);
    OutcomeDistribution(index_type n, const Counts& counts);

    index_type num_bits() const noexcept { return n_; }
    const Counts& counts() const noexcept { return counts_; }
    std::size_t size() const noexcept { return counts_.size(); }
    bool empty() const noexcept { return counts_.empty(); }

    /// Merges into an existing entry.
    void add(const std::string& bits, double weight);
    double weight(const std::string& bits) const;
    double total_weight() const noexcept;
    bool is_normalized(double tolerance = 1e-9) const noexcept;
    OutcomeDistribution normalized() const;

    friend bool operator==(const OutcomeDistribution&, const OutcomeDistribution&) = default;

 private:
    index_type n_;
    Counts counts_;
};

}  // namespace enigma
