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

#include "enigma/enigma2.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "enigma/errors.hpp"

namespace enigma {

RouletteMode parse_roulette_mode(std::string_view name) {
    if (name == "preserve") return RouletteMode::preserve;
    if (name == "inverse") return RouletteMode::inverse;
    throw DomainError("unknown roulette mode '" + std::string(name) + "'");
}

std::string_view to_string(RouletteMode mode) {
    return mode == RouletteMode::preserve ? "preserve" : "inverse";
}

// roulette wheel

std::size_t RouletteWheel::bin_of(double value) const {
    const std::size_t b = num_bins();
    const double lo = bin_edges.front();
    const double width = (bin_edges.back() - lo) / static_cast<double>(b);
    if (!(width > 0.0)) return 0;
    const double pos = std::floor((value - lo) / width);
    if (pos < 0.0) return 0;
    return std::min(static_cast<std::size_t>(pos), b - 1);
}

RouletteWheel build_roulette(std::span<const double> coeffs, std::size_t bins, RouletteMode mode) {
    if (coeffs.empty()) throw DomainError("roulette wheel needs at least one coefficient");
    if (bins == 0) throw DomainError("roulette wheel needs at least one bin");

    double lo = std::abs(coeffs.front());
    double hi = lo;
    for (double v : coeffs) {
        lo = std::min(lo, std::abs(v));
        hi = std::max(hi, std::abs(v));
    }
    // All-zero input would otherwise give a wheel that can only emit 0.
    if (hi == 0.0) hi = 1.0;

    RouletteWheel wheel;
    wheel.mode = mode;
    wheel.bin_edges.resize(bins + 1);
    const double width = (hi - lo) / static_cast<double>(bins);
    for (std::size_t i = 0; i <= bins; ++i) wheel.bin_edges[i] = lo + width * static_cast<double>(i);
    wheel.bin_edges.back() = hi;

    wheel.sector_weights.assign(bins, 0.0);
    std::vector<std::size_t> counts(bins, 0);
    for (double v : coeffs) ++counts[wheel.bin_of(std::abs(v))];

    wheel.frequencies.resize(bins);
    const double total = static_cast<double>(coeffs.size());
    for (std::size_t i = 0; i < bins; ++i) {
        const double p = static_cast<double>(counts[i]) / total;
        wheel.frequencies[i] = p;
        if (counts[i] == 0) continue;
        wheel.sector_weights[i] = mode == RouletteMode::preserve ? p : 1.0 / p;
    }
    return wheel;
}

double sample_weight(const RouletteWheel& wheel, Rng& rng) {
    const std::size_t b = wheel.num_bins();
    if (b == 0 || wheel.bin_edges.size() != b + 1) throw InvalidWheelError("roulette wheel is malformed");
    double total = 0.0;
    for (double w : wheel.sector_weights) {
        if (!(w >= 0.0)) throw InvalidWheelError("sector weights must be nonnegative");
        total += w;
    }
    if (!(total > 0.0)) throw InvalidWheelError("all sector weights are zero");

    std::discrete_distribution<std::size_t> pick(wheel.sector_weights.begin(), wheel.sector_weights.end());
    const std::size_t bin = pick(rng);
    double lower = wheel.bin_edges[bin];
    const double upper = wheel.bin_edges[bin + 1];
    if (lower <= 0.0) lower = 0.5 * (upper - lower);
    if (!(upper > lower)) {
        if (!(lower > 0.0)) throw InvalidWheelError("roulette bin cannot produce a positive weight");
        return lower;
    }
    std::uniform_real_distribution<double> uniform(lower, upper);
    return uniform(rng);
}

// decoy embedding

std::pair<QuboModel, DecoyPlacement> embed_decoys(const QuboModel& qubo, index_type m, std::size_t kmax_out,
                                                  std::size_t kmax_in, const RouletteWheel& wheel, Rng& rng) {
    const index_type n = qubo.num_variables();
    if (m == 0) throw DomainError("decoy count must be at least 1");
    if (kmax_out == 0 || kmax_in == 0) throw DomainError("kmax_out and kmax_in must be at least 1");
    if (kmax_out > n) {
        throw PlacementError("kmax_out = " + std::to_string(kmax_out) + " exceeds the " + std::to_string(n) +
                             " available primary variables");
    }

    DecoyPlacement placement;
    placement.n = n;
    placement.m = m;

    std::vector<index_type> primaries(n);
    std::iota(primaries.begin(), primaries.end(), index_type{0});

    for (index_type j = 0; j < m; ++j) {
        const index_type decoy = n + j;

        std::uniform_int_distribution<std::size_t> out_count(1, kmax_out);
        const std::size_t k_out = out_count(rng);
        // partial Fisher-Yates: the first k_out entries are a uniform sample
        for (std::size_t r = 0; r < k_out; ++r) {
            std::uniform_int_distribution<std::size_t> pick(r, n - 1);
            std::swap(primaries[r], primaries[pick(rng)]);
            placement.B[{primaries[r], decoy}] = sample_weight(wheel, rng);
        }

        std::vector<index_type> rows(j + 1);
        std::iota(rows.begin(), rows.end(), n);
        std::uniform_int_distribution<std::size_t> in_count(1, std::min<std::size_t>(kmax_in, j + 1));
        const std::size_t k_in = in_count(rng);
        for (std::size_t r = 0; r < k_in; ++r) {
            std::uniform_int_distribution<std::size_t> pick(r, rows.size() - 1);
            std::swap(rows[r], rows[pick(rng)]);
            placement.C[{rows[r], decoy}] = sample_weight(wheel, rng);
        }
    }
    return {augment(qubo, placement), placement};
}

QuboModel augment(const QuboModel& qubo, const DecoyPlacement& placement) {
    if (placement.n != qubo.num_variables()) throw DimensionError("placement does not match QUBO size");
    QuboModel out(placement.n + placement.m, qubo.coefficients(), qubo.offset());
    for (const auto& [pair, value] : placement.B) {
        if (!(value > 0.0)) throw PlacementError("B entries must be positive");
        if (pair.first >= placement.n || pair.second < placement.n) throw PlacementError("B entry outside the x-y block");
        out.set(pair.first, pair.second, value);
    }
    for (const auto& [pair, value] : placement.C) {
        if (!(value > 0.0)) throw PlacementError("C entries must be positive");
        if (pair.first < placement.n) throw PlacementError("C entry outside the y-y block");
        out.set(pair.first, pair.second, value);
    }
    return out;
}

// permutation

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.forward.resize(forward.size());
    for (index_type i = 0; i < forward.size(); ++i) inv.forward[forward[i]] = i;
    return inv;
}

bool Permutation::is_valid() const {
    std::vector<bool> hit(forward.size(), false);
    for (auto v : forward) {
        if (v >= forward.size() || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

Permutation identity_permutation(index_type size) {
    Permutation p;
    p.forward.resize(size);
    std::iota(p.forward.begin(), p.forward.end(), index_type{0});
    return p;
}

Permutation gen_permutation(index_type size, Rng& rng) {
    if (size == 0) throw DomainError("permutation size must be at least 1");
    Permutation p = identity_permutation(size);
    for (index_type i = size - 1; i > 0; --i) {
        std::uniform_int_distribution<index_type> pick(0, i);
        std::swap(p.forward[i], p.forward[pick(rng)]);
    }
    return p;
}

QuboModel apply_permutation(const QuboModel& qubo, const Permutation& perm) {
    if (perm.size() != qubo.num_variables()) throw DimensionError("permutation size does not match QUBO size");
    if (!perm.is_valid()) throw DomainError("not a permutation");
    QuboModel out(qubo.num_variables(), qubo.offset());
    for (const auto& [pair, value] : qubo.coefficients()) {
        out.set(perm.forward[pair.first], perm.forward[pair.second], value);
    }
    return out;
}

BitConfig permute_bits(std::span<const std::uint8_t> x, const Permutation& perm) {
    if (x.size() != perm.size()) throw DimensionError("configuration does not match permutation size");
    BitConfig out(x.size());
    for (index_type i = 0; i < x.size(); ++i) out[perm.forward[i]] = x[i];
    return out;
}

BitConfig unpermute_bits(std::span<const std::uint8_t> x, const Permutation& perm) {
    if (x.size() != perm.size()) throw DimensionError("configuration does not match permutation size");
    BitConfig out(x.size());
    for (index_type i = 0; i < x.size(); ++i) out[i] = x[perm.forward[i]];
    return out;
}

// pipeline

void KeyII::validate() const {
    if (n == 0) throw InvalidKeyError("key covers zero primary variables");
    if (perm.size() != n + m || !perm.is_valid()) throw InvalidKeyError("key permutation is not a bijection on n + m");
    if (key1.n != n + m) throw InvalidKeyError("inner key size differs from n + m");
    key1.validate();
}

Enigma2Result finish_decoy_pipeline(const IsingModel& model, QuboModel augmented, DecoyPlacement placement,
                                    std::optional<double> tau, Rng& rng) {
    const index_type total = augmented.num_variables();
    Permutation perm = gen_permutation(total, rng);
    IsingModel shuffled = qubo_to_ising(apply_permutation(augmented, perm));
    KeyI key1 = gen_key1(total, rng, tau);
    key1.offset = shuffled.offset();
    IsingModel encrypted = encrypt1(shuffled, key1);

    KeyII key;
    key.n = model.num_variables();
    key.m = total - model.num_variables();
    key.perm = std::move(perm);
    key.key1 = std::move(key1);
    key.offset = model.offset();
    return {std::move(encrypted), std::move(key), std::move(augmented), std::move(placement)};
}

Enigma2Result encrypt2(const IsingModel& model, const Enigma2Options& options, Rng& rng) {
    if (options.m == 0) throw DomainError("decoy count must be at least 1");
    QuboModel qubo = ising_to_qubo(model);

    std::vector<double> values;
    values.reserve(qubo.coefficients().size());
    for (const auto& entry : qubo.coefficients()) values.push_back(entry.second);
    if (values.empty()) values.push_back(0.0);
    RouletteWheel wheel = build_roulette(values, options.bins, options.mode);

    auto [augmented, placement] = embed_decoys(qubo, options.m, options.kmax_out, options.kmax_in, wheel, rng);
    return finish_decoy_pipeline(model, std::move(augmented), std::move(placement), options.tau, rng);
}

OutcomeDistribution decrypt2(const OutcomeDistribution& dist, const KeyII& key) {
    key.validate();
    const index_type total = key.n + key.m;
    if (dist.num_bits() != total) {
        throw DimensionError("distribution has " + std::to_string(dist.num_bits()) + "-bit outcomes, key covers " +
                             std::to_string(total) + " qubits");
    }
    OutcomeDistribution unflipped = decrypt1(dist, key.key1);
    OutcomeDistribution out(key.n);
    std::string primary(key.n, '0');
    for (const auto& [bits, weight] : unflipped.counts()) {
        for (index_type i = 0; i < key.n; ++i) primary[i] = bits[key.perm.forward[i]];
        out.add(primary, weight);
    }
    return out;
}

double attack_complexity2(index_type n, index_type m) {
    if (n == 0) throw DomainError("problem size must be at least 1");
    using boost::multiprecision::cpp_int;
    const index_type total = n + m;
    cpp_int value = total;
    for (index_type k = 2; k <= total; ++k) value *= k;
    value <<= total;

    const auto top = boost::multiprecision::msb(value);
    if (top < 53) return std::log2(value.convert_to<double>());
    const auto shift = top - 52;
    cpp_int head = value >> shift;
    return std::log2(head.convert_to<double>()) + static_cast<double>(shift);
}

}  // namespace enigma
