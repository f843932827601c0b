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

#include "enigma/core.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "enigma/errors.hpp"

namespace enigma {

namespace {

Pair canonical(index_type i, index_type j) { return i < j ? Pair{i, j} : Pair{j, i}; }

void check_size(index_type n) {
    if (n == 0) throw DomainError("model must have at least one variable");
}

}  // namespace

SpinConfig bits_to_spins(std::span<const std::uint8_t> x) {
    SpinConfig z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > 1) throw DomainError("bit value must be 0 or 1");
        z[i] = x[i] ? 1 : -1;
    }
    return z;
}

BitConfig spins_to_bits(std::span<const std::int8_t> z) {
    BitConfig x(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] != 1 && z[i] != -1) throw DomainError("spin value must be -1 or +1");
        x[i] = z[i] == 1 ? 1 : 0;
    }
    return x;
}

// IsingModel

IsingModel::IsingModel(index_type num_variables, double offset)
        : h_(num_variables, 0.0), offset_(offset) {
    check_size(num_variables);
}

IsingModel::IsingModel(std::vector<double> linear, const Couplings& quadratic, double offset)
        : h_(std::move(linear)), offset_(offset) {
    check_size(h_.size());
    for (const auto& [key, value] : quadratic) add_quadratic(key.first, key.second, value);
}

double IsingModel::quadratic(index_type i, index_type j) const {
    auto it = J_.find(canonical(i, j));
    return it == J_.end() ? 0.0 : it->second;
}

void IsingModel::set_linear(index_type i, double value) {
    if (i >= h_.size()) throw DimensionError("linear index out of range");
    h_[i] = value;
}

void IsingModel::add_quadratic(index_type i, index_type j, double value) {
    if (i == j) throw DomainError("self-coupling (" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (i >= h_.size() || j >= h_.size()) throw DimensionError("coupling index out of range");
    auto key = canonical(i, j);
    auto it = J_.find(key);
    double total = (it == J_.end() ? 0.0 : it->second) + value;
    if (total == 0.0) {
        if (it != J_.end()) J_.erase(it);
    } else if (it == J_.end()) {
        J_.emplace(key, total);
    } else {
        it->second = total;
    }
}

void IsingModel::set_quadratic(index_type i, index_type j, double value) {
    if (i == j) throw DomainError("self-coupling (" + std::to_string(i) + "," + std::to_string(j) + ")");
    if (i >= h_.size() || j >= h_.size()) throw DimensionError("coupling index out of range");
    auto key = canonical(i, j);
    if (value == 0.0) {
        J_.erase(key);
    } else {
        J_[key] = value;
    }
}

// QuboModel

QuboModel::QuboModel(index_type num_variables, double offset) : n_(num_variables), offset_(offset) {
    check_size(num_variables);
}

QuboModel::QuboModel(index_type num_variables, const Coefficients& coefficients, double offset)
        : QuboModel(num_variables, offset) {
    for (const auto& [key, value] : coefficients) add(key.first, key.second, value);
}

double QuboModel::coefficient(index_type i, index_type j) const {
    auto it = A_.find(canonical(i, j));
    return it == A_.end() ? 0.0 : it->second;
}

void QuboModel::add(index_type i, index_type j, double value) {
    if (i >= n_ || j >= n_) throw DimensionError("coefficient index out of range");
    auto key = canonical(i, j);
    auto it = A_.find(key);
    double total = (it == A_.end() ? 0.0 : it->second) + value;
    if (total == 0.0) {
        if (it != A_.end()) A_.erase(it);
    } else if (it == A_.end()) {
        A_.emplace(key, total);
    } else {
        it->second = total;
    }
}

void QuboModel::set(index_type i, index_type j, double value) {
    if (i >= n_ || j >= n_) throw DimensionError("coefficient index out of range");
    auto key = canonical(i, j);
    if (value == 0.0) {
        A_.erase(key);
    } else {
        A_[key] = value;
    }
}

// evaluation

double eval_ising(const IsingModel& model, std::span<const std::int8_t> z) {
    const index_type n = model.num_variables();
    if (z.size() != n) {
        throw DimensionError("spin configuration has length " + std::to_string(z.size()) +
                             ", model has " + std::to_string(n) + " variables");
    }
    for (auto s : z) {
        if (s != 1 && s != -1) throw DomainError("spin value must be -1 or +1");
    }
    double energy = 0.0;
    const auto& h = model.linear();
    for (index_type i = 0; i < n; ++i) energy += h[i] * z[i];
    for (const auto& [key, value] : model.quadratic()) energy += value * z[key.first] * z[key.second];
    return energy + model.offset();
}

double eval_qubo(const QuboModel& model, std::span<const std::uint8_t> x) {
    const index_type n = model.num_variables();
    if (x.size() != n) {
        throw DimensionError("bit configuration has length " + std::to_string(x.size()) +
                             ", model has " + std::to_string(n) + " variables");
    }
    for (auto b : x) {
        if (b > 1) throw DomainError("bit value must be 0 or 1");
    }
    double energy = 0.0;
    for (const auto& [key, value] : model.coefficients()) {
        if (x[key.first] && x[key.second]) energy += value;
    }
    return energy + model.offset();
}

// conversion

QuboModel ising_to_qubo(const IsingModel& model) {
    const index_type n = model.num_variables();
    QuboModel qubo(n);
    std::vector<double> diag(n);
    double offset = model.offset();
    for (index_type i = 0; i < n; ++i) {
        diag[i] = 2.0 * model.linear(i);
        offset -= model.linear(i);
    }
    for (const auto& [key, value] : model.quadratic()) {
        diag[key.first] -= 2.0 * value;
        diag[key.second] -= 2.0 * value;
        offset += value;
        qubo.set(key.first, key.second, 4.0 * value);
    }
    for (index_type i = 0; i < n; ++i) qubo.set(i, i, diag[i]);
    qubo.set_offset(offset);
    return qubo;
}

IsingModel qubo_to_ising(const QuboModel& model) {
    const index_type n = model.num_variables();
    std::vector<double> h(n, 0.0);
    IsingModel ising(n);
    double offset = model.offset();
    for (const auto& [key, value] : model.coefficients()) {
        auto [i, j] = key;
        if (i == j) {
            h[i] += value / 2.0;
            offset += value / 2.0;
        } else {
            const double quarter = value / 4.0;
            ising.set_quadratic(i, j, quarter);
            h[i] += quarter;
            h[j] += quarter;
            offset += quarter;
        }
    }
    for (index_type i = 0; i < n; ++i) ising.set_linear(i, h[i]);
    ising.set_offset(offset);
    return ising;
}

// graphs

std::size_t ProblemGraph::max_degree() const noexcept {
    return degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
}

bool ProblemGraph::is_regular(std::size_t degree) const noexcept {
    return std::all_of(degrees.begin(), degrees.end(), [degree](std::size_t d) { return d == degree; });
}

ProblemGraph problem_graph(index_type num_nodes, std::span<const Pair> edges) {
    ProblemGraph graph;
    graph.num_nodes = num_nodes;
    graph.degrees.assign(num_nodes, 0);
    std::set<Pair> seen;
    for (auto [a, b] : edges) {
        if (a == b) throw DomainError("self-loop in edge list");
        if (a >= num_nodes || b >= num_nodes) throw DimensionError("edge index out of range");
        auto key = canonical(a, b);
        if (!seen.insert(key).second) throw DomainError("duplicate edge in edge list");
        ++graph.degrees[key.first];
        ++graph.degrees[key.second];
    }
    graph.edges.assign(seen.begin(), seen.end());
    return graph;
}

ProblemGraph problem_graph(const IsingModel& model) {
    std::vector<Pair> edges;
    edges.reserve(model.num_interactions());
    for (const auto& entry : model.quadratic()) edges.push_back(entry.first);
    return problem_graph(model.num_variables(), edges);
}

ProblemGraph problem_graph(const QuboModel& model) {
    std::vector<Pair> edges;
    for (const auto& entry : model.coefficients()) {
        if (entry.first.first != entry.first.second) edges.push_back(entry.first);
    }
    return problem_graph(model.num_variables(), edges);
}

}  // namespace enigma
