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

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace enigma {

using index_type = std::size_t;

/// Random source used throughout the library. Always passed explicitly.
using Rng = std::mt19937_64;

/// Unordered pair key, stored canonically as (min, max).
using Pair = std::pair<index_type, index_type>;

/// Spin values are -1 or +1.
using SpinConfig = std::vector<std::int8_t>;
/// Bit values are 0 or 1. Bit i maps to spin z_i = 2 x_i - 1.
using BitConfig = std::vector<std::uint8_t>;

SpinConfig bits_to_spins(std::span<const std::uint8_t> x);
BitConfig spins_to_bits(std::span<const std::int8_t> z);

/// Ising objective
///
///     f(z) = sum_i h_i z_i + sum_{i<j} J_ij z_i z_j + offset,   z_i in {-1, +1}.
///
/// Couplings are kept in a sorted map keyed by (i, j) with i < j. A coupling
/// that becomes exactly zero is erased, so the stored support is always the
/// edge set of the problem graph.
class IsingModel {
 public:
    using Couplings = std::map<Pair, double>;

    explicit IsingModel(index_type num_variables, double offset = 0.0);
    IsingModel(std::vector<double> linear, const Couplings& quadratic, double offset = 0.0);

    index_type num_variables() const noexcept { return h_.size(); }
    const std::vector<double>& linear() const noexcept { return h_; }
    double linear(index_type i) const { return h_.at(i); }
    const Couplings& quadratic() const noexcept { return J_; }
    /// Zero when the pair is absent.
    double quadratic(index_type i, index_type j) const;
    double offset() const noexcept { return offset_; }
    std::size_t num_interactions() const noexcept { return J_.size(); }

    void set_linear(index_type i, double value);
    /// Accumulates into J_{min(i,j), max(i,j)}. Self-pairs are rejected.
    void add_quadratic(index_type i, index_type j, double value);
    void set_quadratic(index_type i, index_type j, double value);
    void set_offset(double value) noexcept { offset_ = value; }

    friend bool operator==(const IsingModel&, const IsingModel&) = default;

 private:
    std::vector<double> h_;
    Couplings J_;
    double offset_ = 0.0;
};

/// QUBO objective
///
///     g(x) = sum_i A_ii x_i + sum_{i<j} A_ij x_i x_j + offset,   x_i in {0, 1}.
///
/// Only upper-triangular-or-diagonal keys are stored. An off-diagonal entry is
/// the full coefficient of x_i x_j (twice the symmetric-matrix element).
class QuboModel {
 public:
    using Coefficients = std::map<Pair, double>;

    explicit QuboModel(index_type num_variables, double offset = 0.0);
    QuboModel(index_type num_variables, const Coefficients& coefficients, double offset = 0.0);

    index_type num_variables() const noexcept { return n_; }
    const Coefficients& coefficients() const noexcept { return A_; }
    double coefficient(index_type i, index_type j) const;
    double offset() const noexcept { return offset_; }

    void add(index_type i, index_type j, double value);
    void set(index_type i, index_type j, double value);
    void set_offset(double value) noexcept { offset_ = value; }

    friend bool operator==(const QuboModel&, const QuboModel&) = default;

 private:
    index_type n_;
    Coefficients A_;
    double offset_ = 0.0;
};

/// Evaluates in a fixed order: linear terms by ascending index, then couplings
/// by ascending pair, then the offset.
double eval_ising(const IsingModel& model, std::span<const std::int8_t> z);

/// Evaluates in ascending (i, j) key order, then adds the offset.
double eval_qubo(const QuboModel& model, std::span<const std::uint8_t> x);

/// Maps through z = 2x - 1:
///   A_ii = 2 h_i - 2 sum_{j != i} J_ij,   A_ij = 4 J_ij,
///   offset' = offset - sum_i h_i + sum_{i<j} J_ij.
QuboModel ising_to_qubo(const IsingModel& model);

/// Inverse map through x = (z + 1) / 2:
///   h_i = A_ii / 2 + sum_{j != i} A_ij / 4,   J_ij = A_ij / 4,
///   offset' = offset + sum_i A_ii / 2 + sum_{i<j} A_ij / 4.
IsingModel qubo_to_ising(const QuboModel& model);

struct ProblemGraph {
    index_type num_nodes = 0;
    std::vector<Pair> edges;  // sorted, i < j
    std::vector<std::size_t> degrees;

    std::size_t max_degree() const noexcept;
    bool is_regular(std::size_t degree) const noexcept;
};

ProblemGraph problem_graph(const IsingModel& model);
ProblemGraph problem_graph(const QuboModel& model);
/// Graph view of an explicit edge list (duplicates rejected).
ProblemGraph problem_graph(index_type num_nodes, std::span<const Pair> edges);

}  // namespace enigma
