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

#include "enigma/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "enigma/errors.hpp"

namespace enigma {

namespace {

// Low bits walked by Gray code between exact re-evaluations. Bounds the
// rounding drift of the incremental updates to 2^kBlockBits steps.
constexpr index_type kBlockBits = 10;

struct Neighbour {
    index_type index;
    double weight;
};

using Adjacency = std::vector<std::vector<Neighbour>>;

void check_cap(index_type n) {
    if (n > kBruteForceMaxVariables) {
        throw ResourceError("brute force is capped at " + std::to_string(kBruteForceMaxVariables) +
                            " variables, model has " + std::to_string(n));
    }
}

// `exact(state)` evaluates the energy of a basis state from scratch and
// `delta(config, k)` the change from flipping variable k of `config`.
template <class Exact, class Delta>
std::vector<double> enumerate(index_type n, Exact exact, Delta delta) {
    const std::uint64_t states = std::uint64_t{1} << n;
    const index_type low = std::min(n, kBlockBits);
    const std::uint64_t block = std::uint64_t{1} << low;
    std::vector<double> energies(states);
    BitConfig config(n, 0);
    for (std::uint64_t base = 0; base < states; base += block) {
        for (index_type i = 0; i < n; ++i) config[i] = (base >> i) & 1u;
        double energy = exact(config);
        energies[base] = energy;
        std::uint64_t gray = 0;
        for (std::uint64_t t = 1; t < block; ++t) {
            const auto k = static_cast<index_type>(std::countr_zero(t));
            energy += delta(config, k);
            config[k] ^= 1u;
            gray ^= std::uint64_t{1} << k;
            energies[base | gray] = energy;
        }
    }
    return energies;
}

// Ground-level candidates are re-evaluated exactly, so the reported minimum
// is the energy of an actual state rather than an incrementally updated sum.
template <class Exact>
SpectrumReport summarize(index_type n, std::vector<double> state_energies, double scale, Exact exact) {
    SpectrumReport report;
    report.tolerance = 1e-9 * scale;
    const double gray_min = *std::min_element(state_energies.begin(), state_energies.end());
    BitConfig config(n);
    for (std::uint64_t s = 0; s < state_energies.size(); ++s) {
        if (state_energies[s] <= gray_min + report.tolerance) {
            for (index_type i = 0; i < n; ++i) config[i] = (s >> i) & 1u;
            state_energies[s] = exact(config);
        }
    }
    report.energies = state_energies;
    std::sort(report.energies.begin(), report.energies.end());
    report.global_min = report.energies.front();
    const double ceiling = report.global_min + report.tolerance;
    for (std::uint64_t s = 0; s < state_energies.size(); ++s) {
        if (state_energies[s] <= ceiling) report.argmin_set.insert(index_to_bitstring(s, n));
    }
    auto excited = std::upper_bound(report.energies.begin(), report.energies.end(), ceiling);
    report.gap = excited == report.energies.end() ? std::numeric_limits<double>::infinity()
                                                  : *excited - report.global_min;
    report.state_energies = std::move(state_energies);
    return report;
}

}  // namespace

SpectrumReport brute_force(const IsingModel& model) {
    const index_type n = model.num_variables();
    check_cap(n);
    Adjacency adj(n);
    double scale = std::abs(model.offset());
    for (double h : model.linear()) scale += std::abs(h);
    for (const auto& [pair, value] : model.quadratic()) {
        adj[pair.first].push_back({pair.second, value});
        adj[pair.second].push_back({pair.first, value});
        scale += std::abs(value);
    }
    const auto& h = model.linear();
    auto exact = [&model](const BitConfig& x) { return eval_ising(model, bits_to_spins(x)); };
    // Flipping z_k changes the energy by -2 z_k (h_k + sum_j J_kj z_j).
    auto delta = [&adj, &h](const BitConfig& x, index_type k) {
        double field = h[k];
        for (const auto& nb : adj[k]) field += x[nb.index] ? nb.weight : -nb.weight;
        return x[k] ? -2.0 * field : 2.0 * field;
    };
    return summarize(n, enumerate(n, exact, delta), scale, exact);
}

SpectrumReport brute_force(const QuboModel& model) {
    const index_type n = model.num_variables();
    check_cap(n);
    Adjacency adj(n);
    std::vector<double> diag(n, 0.0);
    double scale = std::abs(model.offset());
    for (const auto& [pair, value] : model.coefficients()) {
        scale += std::abs(value);
        if (pair.first == pair.second) {
            diag[pair.first] = value;
        } else {
            adj[pair.first].push_back({pair.second, value});
            adj[pair.second].push_back({pair.first, value});
        }
    }
    auto exact = [&model](const BitConfig& x) { return eval_qubo(model, x); };
    // Flipping x_k changes the energy by (1 - 2 x_k)(A_kk + sum_j A_kj x_j).
    auto delta = [&adj, &diag](const BitConfig& x, index_type k) {
        double field = diag[k];
        for (const auto& nb : adj[k]) {
            if (x[nb.index]) field += nb.weight;
        }
        return x[k] ? -field : field;
    };
    return summarize(n, enumerate(n, exact, delta), scale, exact);
}

OutcomeDistribution argmin_distribution(const SpectrumReport& report, index_type n) {
    OutcomeDistribution dist(n);
    const double w = 1.0 / static_cast<double>(report.argmin_set.size());
    for (const auto& bits : report.argmin_set) dist.add(bits, w);
    return dist;
}

double energy_of(const IsingModel& model, const std::string& bits) {
    return eval_ising(model, bits_to_spins(from_bitstring(bits)));
}

double energy_of(const QuboModel& model, const std::string& bits) { return eval_qubo(model, from_bitstring(bits)); }

double expected_value(const OutcomeDistribution& dist, const IsingModel& model) {
    if (dist.num_bits() != model.num_variables()) throw DimensionError("distribution and model sizes differ");
    double ev = 0.0;
    for (const auto& [bits, weight] : dist.counts()) ev += weight * energy_of(model, bits);
    return ev;
}

double ar(const OutcomeDistribution& dist, const IsingModel& model, double global_min) {
    if (global_min == 0.0) throw UndefinedMetricError("approximation ratio is undefined for a zero global minimum");
    if (!dist.is_normalized()) throw DomainError("approximation ratio needs a normalized distribution");
    if (dist.num_bits() != model.num_variables()) throw DimensionError("distribution and model sizes differ");
    double excess = 0.0;
    for (const auto& [bits, weight] : dist.counts()) excess += weight * (energy_of(model, bits) - global_min);
    return 1.0 + excess / global_min;
}

double rar(const OutcomeDistribution& dist, const IsingModel& model, double global_min, std::size_t k) {
    if (k == 0) throw DomainError("k must be at least 1");
    if (k >= dist.size()) return ar(dist, model, global_min);
    if (global_min == 0.0) throw UndefinedMetricError("approximation ratio is undefined for a zero global minimum");
    if (!dist.is_normalized()) throw DomainError("approximation ratio needs a normalized distribution");

    struct Entry {
        double weight;
        double energy;
        const std::string* bits;
    };
    std::vector<Entry> entries;
    entries.reserve(dist.size());
    for (const auto& [bits, weight] : dist.counts()) entries.push_back({weight, energy_of(model, bits), &bits});
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return std::tie(b.weight, a.energy, *a.bits) < std::tie(a.weight, b.energy, *b.bits);
    });

    double mass = 0.0;
    for (std::size_t i = 0; i < k; ++i) mass += entries[i].weight;
    if (!(mass > 0.0)) throw UndefinedMetricError("top-k outcomes carry no weight");
    double excess = 0.0;
    for (std::size_t i = 0; i < k; ++i) excess += (entries[i].weight / mass) * (entries[i].energy - global_min);
    return 1.0 + excess / global_min;
}

}  // namespace enigma
