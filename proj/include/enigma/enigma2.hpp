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

// Decoy-variable embedding.
//
// The input Ising model is converted to a QUBO over x, extended with m decoy
// bits y through
//
//     g~(x, y) = g(x) + sum B_ij x_i y_j + sum C_ij y_i y_j,
//
// where every B and C entry is positive. Because the extra terms vanish at
// y = 0 and are nonnegative elsewhere, every global minimizer of g~ restricts
// to a global minimizer of g. The variables are then shuffled, mapped back to
// Ising form and passed through the coefficient cipher.

#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "enigma/core.hpp"
#include "enigma/enigma1.hpp"
#include "enigma/outcome.hpp"

namespace enigma {

enum class RouletteMode { preserve, inverse };

RouletteMode parse_roulette_mode(std::string_view name);
std::string_view to_string(RouletteMode mode);

/// Histogram-backed sampler for decoy weights. Bins are equal-width over the
/// magnitude range of the source coefficients.
struct RouletteWheel {
    std::vector<double> bin_edges;       // b + 1 ascending values
    std::vector<double> sector_weights;  // b nonnegative values
    std::vector<double> frequencies;     // normalized source histogram, p_i
    RouletteMode mode = RouletteMode::inverse;

    std::size_t num_bins() const noexcept { return sector_weights.size(); }
    /// Index of the bin holding magnitude `value` (clamped to the range).
    std::size_t bin_of(double value) const;
};

/// `coeffs` may be signed; only magnitudes are binned. Zero-weight bins in
/// inverse mode stay at zero.
RouletteWheel build_roulette(std::span<const double> coeffs, std::size_t bins = 10,
                             RouletteMode mode = RouletteMode::inverse);

/// Draws a bin with probability proportional to its sector weight, then a
/// uniform value inside it. A bin whose lower edge is 0 starts at half its
/// width, so the result is always strictly positive.
double sample_weight(const RouletteWheel& wheel, Rng& rng);

/// Positions are in the augmented index space [0, n + m); decoy j lives at
/// n + j. Values are the QUBO coefficients of x_i y_j and y_i y_j.
struct DecoyPlacement {
    index_type n = 0;
    index_type m = 0;
    std::map<Pair, double> B;  // (primary, decoy) -> coefficient > 0
    std::map<Pair, double> C;  // (decoy, decoy), first <= second -> coefficient > 0
};

/// Each decoy column j receives k_out ~ U{1..kmax_out} primary neighbours
/// drawn without replacement, and k_in ~ U{1..min(kmax_in, j + 1)} entries in
/// the upper-triangular column j of C (rows 0..j, so row j is the decoy's own
/// linear term). Throws PlacementError when kmax_out exceeds n.
std::pair<QuboModel, DecoyPlacement> embed_decoys(const QuboModel& qubo, index_type m, std::size_t kmax_out,
                                                  std::size_t kmax_in, const RouletteWheel& wheel, Rng& rng);

/// Writes the decoy placement into a copy of `qubo` widened to n + m variables.
QuboModel augment(const QuboModel& qubo, const DecoyPlacement& placement);

/// Index map of a permutation matrix: variable i of x~ moves to position
/// forward[i] of x^ = P x~.
struct Permutation {
    std::vector<index_type> forward;

    index_type size() const noexcept { return forward.size(); }
    Permutation inverse() const;
    bool is_valid() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
};

Permutation identity_permutation(index_type size);
/// Fisher-Yates shuffle.
Permutation gen_permutation(index_type size, Rng& rng);

/// A^ = P A~ P^T, i.e. A^(perm(i), perm(j)) = A~(i, j).
QuboModel apply_permutation(const QuboModel& qubo, const Permutation& perm);

/// x^[perm(i)] = x~[i].
BitConfig permute_bits(std::span<const std::uint8_t> x, const Permutation& perm);
/// x~[i] = x^[perm(i)].
BitConfig unpermute_bits(std::span<const std::uint8_t> x, const Permutation& perm);

struct KeyII {
    index_type n = 0;
    index_type m = 0;
    Permutation perm;
    KeyI key1;            // over n + m qubits
    double offset = 0.0;  // offset of the original model

    void validate() const;

    friend bool operator==(const KeyII&, const KeyII&) = default;
};

struct Enigma2Options {
    index_type m = 1;
    std::size_t kmax_out = 1;
    std::size_t kmax_in = 1;
    std::size_t bins = 10;
    RouletteMode mode = RouletteMode::inverse;
    std::optional<double> tau;  // fixed stretch factor instead of sampling
};

/// Everything the pipeline produces, including intermediate models that are
/// useful for verification. Only `encrypted` goes to the server.
struct Enigma2Result {
    IsingModel encrypted;
    KeyII key;
    QuboModel augmented;  // before permutation
    DecoyPlacement placement;
};

/// ising_to_qubo -> roulette over the QUBO coefficients -> embed_decoys ->
/// permute -> qubo_to_ising -> encrypt1.
Enigma2Result encrypt2(const IsingModel& model, const Enigma2Options& options, Rng& rng);

/// Shared tail of the decoy schemes: permute, convert to Ising and cipher.
Enigma2Result finish_decoy_pipeline(const IsingModel& model, QuboModel augmented, DecoyPlacement placement,
                                    std::optional<double> tau, Rng& rng);

/// decrypt1 -> undo the permutation -> drop the m decoy bits -> merge
/// weights of outcomes that collide on the primary bits.
OutcomeDistribution decrypt2(const OutcomeDistribution& dist, const KeyII& key);

/// log2((n + m) * (n + m)! * 2^(n + m)), evaluated with exact integers.
double attack_complexity2(index_type n, index_type m);

}  // namespace enigma
