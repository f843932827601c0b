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

#include "enigma/enigma3.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "enigma/errors.hpp"

namespace enigma {

namespace {

struct Deficiency {
    std::vector<std::size_t> e;
    std::size_t s = 0;
    std::size_t max_e = 0;
};

Deficiency deficiencies(std::span<const std::size_t> degrees, std::size_t d_star) {
    Deficiency out;
    out.e.reserve(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] > d_star) {
            throw DomainError("target degree " + std::to_string(d_star) + " is below the degree " +
                              std::to_string(degrees[i]) + " of node " + std::to_string(i));
        }
        const std::size_t e = d_star - degrees[i];
        out.e.push_back(e);
        out.s += e;
        out.max_e = std::max(out.max_e, e);
    }
    return out;
}

// Indices sorted by descending key, ties by ascending index.
std::vector<std::size_t> by_priority(const std::vector<std::size_t>& key) {
    std::vector<std::size_t> order(key.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&key](std::size_t a, std::size_t b) { return key[a] > key[b]; });
    return order;
}

}  // namespace

bool check_conditions(std::size_t n, std::size_t m, std::size_t d_star, std::size_t s, std::size_t max_e) {
    using wide = long long;
    const wide M = static_cast<wide>(m);
    const wide D = static_cast<wide>(d_star);
    const wide S = static_cast<wide>(s);
    const bool enough_stubs = M * D >= S;
    const bool room_among_decoys = M * M - (D + 1) * M + S >= 0;
    const bool enough_decoys = M >= static_cast<wide>(max_e);
    const bool even_degree_sum = ((M + static_cast<wide>(n)) * D) % 2 == 0;
    return enough_stubs && room_among_decoys && enough_decoys && even_degree_sum;
}

index_type minimal_decoy_count(std::span<const std::size_t> degrees, std::size_t d_star, index_type m_min) {
    const Deficiency def = deficiencies(degrees, d_star);
    const std::size_t n = degrees.size();
    const index_type upper = n + d_star + 1;
    for (index_type m = m_min; m <= upper; ++m) {
        if (check_conditions(n, m, d_star, def.s, def.max_e)) return m;
    }
    throw InternalError("no decoy count in [" + std::to_string(m_min) + ", " + std::to_string(upper) +
                        "] regularizes the graph");
}

RegularizationPlan regular_edge_set(std::span<const std::size_t> degrees, std::size_t d_star, index_type m) {
    const Deficiency def = deficiencies(degrees, d_star);
    const std::size_t n = degrees.size();
    if (!check_conditions(n, m, d_star, def.s, def.max_e)) {
        throw DomainError("decoy count " + std::to_string(m) + " cannot make the graph " + std::to_string(d_star) +
                          "-regular");
    }

    RegularizationPlan plan;
    plan.d_star = d_star;
    plan.m = m;
    plan.deficiencies = def.e;
    plan.total_deficiency = def.s;

    // Phase 1: primaries to decoys.
    std::vector<std::size_t> capacity(m, d_star);
    for (std::size_t i : by_priority(def.e)) {
        const std::size_t need = def.e[i];
        if (need == 0) break;
        const auto decoys = by_priority(capacity);
        for (std::size_t r = 0; r < need; ++r) {
            const std::size_t d = decoys[r];
            if (capacity[d] == 0) throw InternalError("decoy capacity exhausted while attaching primaries");
            --capacity[d];
            plan.decoy_edges.emplace_back(i, n + d);
        }
    }

    // Phase 2: decoys among themselves.
    std::vector<std::size_t> residual = capacity;
    while (true) {
        const auto order = by_priority(residual);
        if (order.empty() || residual[order.front()] == 0) break;
        const std::size_t u = order.front();
        const std::size_t need = residual[u];
        std::size_t linked = 0;
        for (std::size_t r = 1; r < order.size() && linked < need; ++r) {
            const std::size_t v = order[r];
            if (residual[v] == 0) break;
            --residual[v];
            plan.decoy_edges.emplace_back(n + std::min(u, v), n + std::max(u, v));
            ++linked;
        }
        if (linked < need) throw InternalError("decoy degrees cannot be closed without multi-edges");
        residual[u] = 0;
    }

    std::sort(plan.decoy_edges.begin(), plan.decoy_edges.end());
    return plan;
}

Enigma3Result encrypt3(const IsingModel& model, const Enigma3Options& options, Rng& rng) {
    const ProblemGraph graph = problem_graph(model);
    const std::size_t max_degree = graph.max_degree();
    const std::size_t d_star = options.d_star.value_or(max_degree);
    if (d_star < max_degree) {
        throw DomainError("target degree " + std::to_string(d_star) + " is below the maximum degree " +
                          std::to_string(max_degree));
    }
    const index_type n = model.num_variables();
    const index_type m = minimal_decoy_count(graph.degrees, d_star, options.m_min);
    RegularizationPlan plan = regular_edge_set(graph.degrees, d_star, m);

    const QuboModel qubo = ising_to_qubo(model);
    std::vector<double> values;
    for (const auto& entry : qubo.coefficients()) values.push_back(entry.second);
    if (values.empty()) values.push_back(0.0);
    const RouletteWheel wheel = build_roulette(values, options.bins, options.mode);

    DecoyPlacement placement;
    placement.n = n;
    placement.m = m;
    for (const Pair& edge : plan.decoy_edges) {
        const double w = sample_weight(wheel, rng);
        if (edge.first < n) {
            placement.B[edge] = w;
        } else {
            placement.C[edge] = w;
        }
    }
    for (index_type j = 0; j < m; ++j) placement.C[{n + j, n + j}] = sample_weight(wheel, rng);

    QuboModel augmented = augment(qubo, placement);
    Enigma2Result tail = finish_decoy_pipeline(model, std::move(augmented), std::move(placement), options.tau, rng);

    const ProblemGraph out_graph = problem_graph(tail.encrypted);
    if (!out_graph.is_regular(d_star)) throw InternalError("obfuscated graph is not regular");

    KeyIII key{std::move(tail.key), d_star};
    return {std::move(tail.encrypted), std::move(key), std::move(tail.augmented), std::move(tail.placement),
            std::move(plan)};
}

OutcomeDistribution decrypt3(const OutcomeDistribution& dist, const KeyIII& key) { return decrypt2(dist, key.base); }

double attack_complexity3(index_type n, index_type m) { return attack_complexity2(n, m); }

}  // namespace enigma
