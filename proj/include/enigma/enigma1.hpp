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

// Coefficient ciphering: gauge spin flips on a secret qubit subset followed
// by a positive rescaling of every coefficient.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "enigma/core.hpp"
#include "enigma/outcome.hpp"

namespace enigma {

/// Client-secret decryption material for the coefficient cipher.
struct KeyI {
    index_type n = 0;
    std::vector<index_type> targets;  // sorted, unique, < n
    double tau = 1.0;                 // stretch factor, > 0
    double offset = 0.0;              // offset withheld from the server

    bool is_target(index_type i) const;
    /// Throws InvalidKeyError when an invariant is violated.
    void validate() const;

    friend bool operator==(const KeyI&, const KeyI&) = default;
};

/// Each qubit joins the target set with probability 1/2 and
/// tau = 1 + |N(1, 1)|, unless `tau_override` is given.
KeyI gen_key1(index_type n, Rng& rng, std::optional<double> tau_override = std::nullopt);

/// h_i -> -h_i for i in T; J_ij -> -J_ij when exactly one endpoint is in T;
/// then everything is multiplied by tau. The returned offset is zero.
IsingModel encrypt1(const IsingModel& model, const KeyI& key);

/// Generates a key for `model` (recording its offset) and encrypts.
std::pair<IsingModel, KeyI> obfuscate1(const IsingModel& model, Rng& rng,
                                       std::optional<double> tau_override = std::nullopt);

/// Toggles the bits of every target qubit, leaving weights untouched.
OutcomeDistribution decrypt1(const OutcomeDistribution& dist, const KeyI& key);

/// Negates spins in the target set.
SpinConfig flip_targets(std::span<const std::int8_t> z, const KeyI& key);

/// Maps an energy of the encrypted model back to the client's scale.
double recover_energy1(double value, const KeyI& key, double original_offset);

/// log2 of the brute-force search over all 2^n target subsets.
double attack_complexity1(index_type n);

}  // namespace enigma
