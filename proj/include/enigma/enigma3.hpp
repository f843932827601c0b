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

// Graph regularization with decoy variables.
//
// Given primary degrees d_i and a target degree d* >= max d_i, the deficiency
// of node i is e_i = d* - d_i and s = sum e_i. Adding m decoy nodes, joined to
// primaries and to each other but never adding primary-primary edges, can
// produce a d*-regular graph iff
//
//   (1) m d* >= s
//   (2) m^2 - (d* + 1) m + s >= 0
//   (3) m >= max e_i
//   (4) (m + n) d* is even.

#pragma once

#include <optional>
#include <vector>

#include "enigma/core.hpp"
#include "enigma/enigma2.hpp"

namespace enigma {

struct RegularizationPlan {
    std::size_t d_star = 0;
    index_type m = 0;
    std::vector<std::size_t> deficiencies;  // e_i, one per primary node
    std::size_t total_deficiency = 0;       // s
    std::vector<Pair> decoy_edges;          // over [0, n + m), each touches a decoy
};

bool check_conditions(std::size_t n, std::size_t m, std::size_t d_star, std::size_t s, std::size_t max_e);

/// Smallest m in [m_min, n + d* + 1] satisfying all four conditions.
/// Throws InternalError if no m in that range qualifies.
index_type minimal_decoy_count(std::span<const std::size_t> degrees, std::size_t d_star, index_type m_min = 0);

/// Deterministic construction of the decoy edges.
///
/// Primaries are served in order of decreasing deficiency; each one is joined
/// to the e_i decoys with the most remaining capacity. The remaining decoy
/// deficiencies are then closed among the decoys, always taking the decoy with
/// the highest remaining deficiency and linking it to the next-highest ones.
/// Ties go to the lowest index. The result is checked for d*-regularity; a
/// stall raises InternalError.
RegularizationPlan regular_edge_set(std::span<const std::size_t> degrees, std::size_t d_star, index_type m);

struct Enigma3Options {
    std::optional<std::size_t> d_star;  // defaults to the maximum primary degree
    index_type m_min = 0;
    std::size_t bins = 10;
    RouletteMode mode = RouletteMode::inverse;
    std::optional<double> tau;
};

struct KeyIII {
    KeyII base;
    std::size_t d_star = 0;

    void validate() const { base.validate(); }

    friend bool operator==(const KeyIII&, const KeyIII&) = default;
};

struct Enigma3Result {
    IsingModel encrypted;
    KeyIII key;
    QuboModel augmented;  // before permutation
    DecoyPlacement placement;
    RegularizationPlan plan;
};

/// Decoy edges from regular_edge_set become B/C entries weighted by the
/// roulette wheel; every decoy also gets a linear (C diagonal) term. The tail
/// is shared with encrypt2.
Enigma3Result encrypt3(const IsingModel& model, const Enigma3Options& options, Rng& rng);

OutcomeDistribution decrypt3(const OutcomeDistribution& dist, const KeyIII& key);

double attack_complexity3(index_type n, index_type m);

}  // namespace enigma
