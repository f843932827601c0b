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

#include "enigma/qaoa.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "enigma/errors.hpp"

namespace enigma {

namespace {

void check_cap(index_type n) {
    if (n > kSimulatorMaxQubits) {
        throw ResourceError("simulator is capped at " + std::to_string(kSimulatorMaxQubits) + " qubits, model has " +
                            std::to_string(n));
    }
}

void check_params(const QaoaParams& params) {
    if (params.gammas.size() != params.betas.size()) throw DimensionError("gammas and betas differ in length");
}

StateVector evolve(index_type n, const std::vector<double>& energies, const QaoaParams& params) {
    const std::size_t dim = std::size_t{1} << n;
    StateVector psi(dim, std::complex<double>(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
    for (std::size_t layer = 0; layer < params.layers(); ++layer) {
        const double gamma = params.gammas[layer];
        for (std::size_t s = 0; s < dim; ++s) psi[s] *= std::polar(1.0, -gamma * energies[s]);

        const double c = std::cos(params.betas[layer]);
        const std::complex<double> is(0.0, -std::sin(params.betas[layer]));
        for (index_type q = 0; q < n; ++q) {
            const std::size_t bit = std::size_t{1} << q;
            for (std::size_t s = 0; s < dim; ++s) {
                if (s & bit) continue;
                const auto a0 = psi[s];
                const auto a1 = psi[s | bit];
                psi[s] = c * a0 + is * a1;
                psi[s | bit] = is * a0 + c * a1;
            }
        }
    }
    return psi;
}

double expectation_of(const StateVector& psi, const std::vector<double>& energies, double offset) {
    double ev = 0.0;
    for (std::size_t s = 0; s < psi.size(); ++s) ev += std::norm(psi[s]) * energies[s];
    return ev + offset;
}

}  // namespace

std::vector<double> diagonal_energies(const IsingModel& model) {
    const index_type n = model.num_variables();
    check_cap(n);
    const std::size_t dim = std::size_t{1} << n;
    const auto& h = model.linear();
    std::vector<double> energies(dim, 0.0);
    for (std::size_t s = 0; s < dim; ++s) {
        double e = 0.0;
        for (index_type i = 0; i < n; ++i) e += ((s >> i) & 1u) ? h[i] : -h[i];
        for (const auto& [pair, value] : model.quadratic()) {
            const bool same = ((s >> pair.first) & 1u) == ((s >> pair.second) & 1u);
            e += same ? value : -value;
        }
        energies[s] = e;
    }
    return energies;
}

StateVector simulate(const IsingModel& model, const QaoaParams& params) {
    check_params(params);
    return evolve(model.num_variables(), diagonal_energies(model), params);
}

double expectation(const IsingModel& model, const QaoaParams& params) {
    check_params(params);
    const auto energies = diagonal_energies(model);
    return expectation_of(evolve(model.num_variables(), energies, params), energies, model.offset());
}

double norm(const StateVector& state) {
    double total = 0.0;
    for (const auto& a : state) total += std::norm(a);
    return std::sqrt(total);
}

OptimizeResult optimize(const IsingModel& model, const OptimizeOptions& options, Rng& rng) {
    if (options.layers == 0) throw DomainError("QAOA needs at least one layer");
    if (options.max_iters == 0) throw DomainError("max_iters must be at least 1");
    if (options.restarts == 0) throw DomainError("restarts must be at least 1");

    const index_type n = model.num_variables();
    const auto energies = diagonal_energies(model);
    const std::size_t p = options.layers;
    const std::size_t dims = 2 * p;

    // Coordinates 0..p-1 are gammas, p..2p-1 betas.
    auto objective = [&](const std::vector<double>& theta) {
        QaoaParams params{{theta.begin(), theta.begin() + static_cast<std::ptrdiff_t>(p)},
                          {theta.begin() + static_cast<std::ptrdiff_t>(p), theta.end()}};
        return expectation_of(evolve(n, energies, params), energies, model.offset());
    };

    const std::size_t restarts = std::min(options.restarts, options.max_iters);
    const std::size_t sweeps_per_restart = options.max_iters / restarts;
    const std::size_t evals = std::max<std::size_t>(options.line_evals, 3);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

    OptimizeResult result;
    result.best_value = std::numeric_limits<double>::infinity();
    std::vector<double> best_theta(dims, 0.0);
    std::uniform_real_distribution<double> init(0.0, std::numbers::pi);

    for (std::size_t r = 0; r < restarts; ++r) {
        std::vector<double> theta(dims);
        for (auto& t : theta) t = init(rng);
        double value = objective(theta);
        double window = std::numbers::pi / 2.0;

        for (std::size_t sweep = 0; sweep < sweeps_per_restart; ++sweep) {
            for (std::size_t c = 0; c < dims; ++c) {
                const double origin = theta[c];
                auto at = [&](double v) {
                    theta[c] = v;
                    return objective(theta);
                };
                double lo = origin - window;
                double hi = origin + window;
                double x1 = hi - inv_phi * (hi - lo);
                double x2 = lo + inv_phi * (hi - lo);
                double f1 = at(x1);
                double f2 = at(x2);
                double best_x = origin;
                double best_f = value;
                auto keep = [&](double x, double f) {
                    if (f < best_f) {
                        best_f = f;
                        best_x = x;
                    }
                };
                keep(x1, f1);
                keep(x2, f2);
                for (std::size_t e = 2; e < evals; ++e) {
                    if (f1 < f2) {
                        hi = x2;
                        x2 = x1;
                        f2 = f1;
                        x1 = hi - inv_phi * (hi - lo);
                        f1 = at(x1);
                        keep(x1, f1);
                    } else {
                        lo = x1;
                        x1 = x2;
                        f1 = f2;
                        x2 = lo + inv_phi * (hi - lo);
                        f2 = at(x2);
                        keep(x2, f2);
                    }
                }
                theta[c] = best_x;
                value = best_f;
            }
            window = std::max(window * 0.6, 1e-6);

            if (value < result.best_value) {
                result.best_value = value;
                best_theta = theta;
            }
            result.trace.push_back(result.best_value);
        }
    }

    result.params.gammas.assign(best_theta.begin(), best_theta.begin() + static_cast<std::ptrdiff_t>(p));
    result.params.betas.assign(best_theta.begin() + static_cast<std::ptrdiff_t>(p), best_theta.end());
    return result;
}

OutcomeDistribution sample(const StateVector& state, std::size_t shots, Rng& rng) {
    if (shots == 0) throw DomainError("shots must be at least 1");
    if (state.size() < 2 || !std::has_single_bit(state.size())) throw DimensionError("state size must be a power of two");
    const auto n = static_cast<index_type>(std::countr_zero(state.size()));
    std::vector<double> probs(state.size());
    for (std::size_t s = 0; s < state.size(); ++s) probs[s] = std::norm(state[s]);
    std::discrete_distribution<std::size_t> pick(probs.begin(), probs.end());
    std::vector<std::size_t> counts(state.size(), 0);
    for (std::size_t k = 0; k < shots; ++k) ++counts[pick(rng)];

    OutcomeDistribution dist(n);
    for (std::size_t s = 0; s < counts.size(); ++s) {
        if (counts[s]) dist.add(index_to_bitstring(s, n), static_cast<double>(counts[s]) / static_cast<double>(shots));
    }
    return dist;
}

}  // namespace enigma
