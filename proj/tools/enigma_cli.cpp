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

// Command-line driver: gen, encrypt, solve, decrypt, verify, stats, qaoa-sim.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <openssl/evp.h>

#include "CLI11.hpp"

#include "enigma/benchgen.hpp"
#include "enigma/enigma1.hpp"
#include "enigma/enigma2.hpp"
#include "enigma/enigma3.hpp"
#include "enigma/errors.hpp"
#include "enigma/oracle.hpp"
#include "enigma/qaoa.hpp"
#include "enigma/serialize.hpp"

namespace {

using namespace enigma;

constexpr const char* kVersion = "0.1.0";

class VerificationFailed : public Error {
 public:
    explicit VerificationFailed(const std::string& what) : Error("verification_failed", what) {}
};

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string data = buffer.str();

    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw InternalError("SHA-256 digest failed");
    }
    std::ostringstream hex;
    for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

IsingModel read_problem(const std::string& path) {
    const Json doc = read_json_file(path);
    if (doc.is_object() && doc.contains("A")) return qubo_to_ising(qubo_from_json(doc));
    return ising_from_json(doc);
}

void print(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

index_type key_size(const AnyKey& key) {
    return std::visit(
        [](const auto& k) -> index_type {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, KeyI>) return k.n;
            else if constexpr (std::is_same_v<K, KeyII>) return k.n;
            else return k.base.n;
        },
        key);
}

OutcomeDistribution decrypt_any(const OutcomeDistribution& dist, const AnyKey& key) {
    return std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, KeyI>) return decrypt1(dist, k);
            else if constexpr (std::is_same_v<K, KeyII>) return decrypt2(dist, k);
            else return decrypt3(dist, k);
        },
        key);
}

Json string_set(const std::set<std::string>& items) {
    Json out = Json::array();
    for (const auto& s : items) out.push_back(s);
    return out;
}

struct GenArgs {
    std::string family = "sk";
    index_type n = 6;
    std::uint64_t seed = 1;
    std::string out;
};

void run_gen(const GenArgs& a) {
    Rng rng(a.seed);
    write_json_file(a.out, to_json(generate(parse_family(a.family), a.n, rng)));
}

struct EncryptArgs {
    std::string problem, scheme = "I", out, key_out, roulette = "inverse", manifest_out;
    index_type m = 1;
    std::size_t kmax_out = 1, kmax_in = 1, bins = 10;
    std::optional<std::size_t> d_star;
    std::optional<double> tau;
    std::uint64_t seed = 1;
};

void run_encrypt(const EncryptArgs& a) {
    namespace fs = std::filesystem;
    if (fs::weakly_canonical(a.out) == fs::weakly_canonical(a.key_out)) {
        throw DomainError("the key must not be written to the problem file");
    }
    const IsingModel model = read_problem(a.problem);
    Rng rng(a.seed);
    Json key;
    IsingModel encrypted(1);
    if (a.scheme == "I") {
        auto [e, k] = obfuscate1(model, rng, a.tau);
        encrypted = std::move(e);
        key = to_json(k);
    } else if (a.scheme == "II") {
        Enigma2Options opt;
        opt.m = a.m;
        opt.kmax_out = a.kmax_out;
        opt.kmax_in = a.kmax_in;
        opt.bins = a.bins;
        opt.mode = parse_roulette_mode(a.roulette);
        opt.tau = a.tau;
        auto r = encrypt2(model, opt, rng);
        encrypted = std::move(r.encrypted);
        key = to_json(r.key);
    } else if (a.scheme == "III") {
        Enigma3Options opt;
        opt.d_star = a.d_star;
        opt.bins = a.bins;
        opt.mode = parse_roulette_mode(a.roulette);
        opt.tau = a.tau;
        auto r = encrypt3(model, opt, rng);
        encrypted = std::move(r.encrypted);
        key = to_json(r.key);
    } else {
        throw DomainError("unknown scheme '" + a.scheme + "'");
    }
    write_json_file(a.out, to_json(encrypted));
    write_json_file(a.key_out, key);

    if (!a.manifest_out.empty()) {
        Json manifest;
        manifest["tool"] = "enigma";
        manifest["version"] = kVersion;
        manifest["command"] = "encrypt";
        manifest["scheme"] = a.scheme;
        manifest["seed"] = a.seed;
        manifest["options"] = {{"m", a.m},       {"kmax_out", a.kmax_out}, {"kmax_in", a.kmax_in},
                               {"bins", a.bins}, {"roulette", a.roulette}};
        if (a.d_star) manifest["options"]["d_star"] = *a.d_star;
        if (a.tau) manifest["options"]["tau"] = *a.tau;
        manifest["inputs"] = {{"problem", {{"path", a.problem}, {"sha256", sha256_file(a.problem)}}}};
        manifest["outputs"] = {{"problem", {{"path", a.out}, {"sha256", sha256_file(a.out)}}},
                               {"key", {{"path", a.key_out}, {"sha256", sha256_file(a.key_out)}}}};
        write_json_file(a.manifest_out, manifest);
    }
}

struct SolveArgs {
    std::string problem, method = "brute", out;
    std::size_t layers = 1, iters = 200, shots = 4096;
    std::uint64_t seed = 1;
};

void run_solve(const SolveArgs& a) {
    const IsingModel model = read_problem(a.problem);
    const index_type n = model.num_variables();
    if (a.method == "brute") {
        write_json_file(a.out, to_json(argmin_distribution(brute_force(model), n)));
    } else if (a.method == "qaoa") {
        Rng rng(a.seed);
        OptimizeOptions opt;
        opt.layers = a.layers;
        opt.max_iters = a.iters;
        auto r = optimize(model, opt, rng);
        write_json_file(a.out, to_json(sample(simulate(model, r.params), a.shots, rng)));
    } else {
        throw DomainError("unknown method '" + a.method + "'");
    }
}

struct DecryptArgs {
    std::string key, dist, out;
};

void run_decrypt(const DecryptArgs& a) {
    const AnyKey key = key_from_json(read_json_file(a.key));
    const auto dist = distribution_from_json(read_json_file(a.dist));
    write_json_file(a.out, to_json(decrypt_any(dist, key)));
}

struct VerifyArgs {
    std::string problem, key, dist, require = "exact";
};

void run_verify(const VerifyArgs& a) {
    const IsingModel model = read_problem(a.problem);
    const AnyKey key = key_from_json(read_json_file(a.key));
    if (key_size(key) != model.num_variables()) throw DimensionError("key does not match the problem size");
    const auto decoded = decrypt_any(distribution_from_json(read_json_file(a.dist)), key);
    const auto report = brute_force(model);

    std::set<std::string> recovered;
    bool ok = false;
    if (a.require == "exact") {
        for (const auto& [bits, w] : decoded.counts()) {
            if (w > 0.0) recovered.insert(bits);
        }
        ok = recovered == report.argmin_set;
    } else if (a.require == "top") {
        double best = 0.0;
        for (const auto& [bits, w] : decoded.counts()) best = std::max(best, w);
        for (const auto& [bits, w] : decoded.counts()) {
            if (w == best && w > 0.0) recovered.insert(bits);
        }
        ok = !recovered.empty() && std::all_of(recovered.begin(), recovered.end(), [&](const std::string& s) {
            return report.argmin_set.count(s) == 1;
        });
    } else {
        throw DomainError("unknown requirement '" + a.require + "'");
    }

    Json out;
    out["ok"] = ok;
    out["require"] = a.require;
    out["global_min"] = report.global_min;
    out["expected"] = string_set(report.argmin_set);
    out["recovered"] = string_set(recovered);
    print(out);
    if (!ok) throw VerificationFailed("decoded outcomes do not match the ground states");
}

struct StatsArgs {
    std::string scheme, key, problem, dist;
    std::optional<index_type> n;
    index_type m = 0;
    std::size_t k = 5;
};

void run_stats(const StatsArgs& a) {
    Json out;
    if (!a.key.empty() || !a.scheme.empty()) {
        std::string scheme = a.scheme;
        index_type n = a.n.value_or(0), m = a.m;
        if (!a.key.empty()) {
            const Json doc = read_json_file(a.key);
            const AnyKey key = key_from_json(doc);
            scheme = doc["scheme"].get<std::string>();
            if (auto* k2 = std::get_if<KeyII>(&key)) n = k2->n, m = k2->m;
            else if (auto* k3 = std::get_if<KeyIII>(&key)) n = k3->base.n, m = k3->base.m;
            else n = std::get<KeyI>(key).n, m = 0;
        } else if (!a.n) {
            throw DomainError("--n is required with --scheme");
        }
        double value = 0.0;
        if (scheme == "I") value = attack_complexity1(n);
        else if (scheme == "II") value = attack_complexity2(n, m);
        else if (scheme == "III") value = attack_complexity3(n, m);
        else throw DomainError("unknown scheme '" + scheme + "'");
        out["scheme"] = scheme;
        out["n"] = n;
        out["m"] = m;
        out["log2_complexity"] = value;
    }
    if (!a.problem.empty() || !a.dist.empty()) {
        if (a.problem.empty() || a.dist.empty()) throw DomainError("metrics need both --problem and --dist");
        const IsingModel model = read_problem(a.problem);
        auto dist = distribution_from_json(read_json_file(a.dist)).normalized();
        const double gmin = brute_force(model).global_min;
        out["global_min"] = gmin;
        out["expected_value"] = expected_value(dist, model);
        out["ar"] = ar(dist, model, gmin);
        out["k"] = a.k;
        out["rar"] = rar(dist, model, gmin, a.k);
    }
    if (out.is_null()) throw DomainError("nothing to report; pass --scheme, --key or --problem with --dist");
    print(out);
}

struct QaoaArgs {
    std::string problem, out;
    std::size_t layers = 1, iters = 200, shots = 4096;
    std::uint64_t seed = 1;
};

void run_qaoa(const QaoaArgs& a) {
    const IsingModel model = read_problem(a.problem);
    Rng rng(a.seed);
    OptimizeOptions opt;
    opt.layers = a.layers;
    opt.max_iters = a.iters;
    auto r = optimize(model, opt, rng);
    auto dist = sample(simulate(model, r.params), a.shots, rng);
    const double gmin = brute_force(model).global_min;

    Json out;
    out["layers"] = a.layers;
    out["gammas"] = r.params.gammas;
    out["betas"] = r.params.betas;
    out["expectation"] = r.best_value;
    out["global_min"] = gmin;
    if (gmin != 0.0) {
        out["ar"] = ar(dist, model, gmin);
        out["rar"] = rar(dist, model, gmin);
    }
    out["sweeps"] = r.trace.size();
    print(out);
    if (!a.out.empty()) write_json_file(a.out, to_json(dist));
}

void fail(const std::string& code, const std::string& message) {
    Json err;
    err["error"] = {{"code", code}, {"message", message}};
    std::cerr << err.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Obfuscate optimization problems before sending them to an untrusted solver"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate a benchmark instance");
    g->add_option("--family", gen.family, "regular3, sk, er, ba1 or ba2")->capture_default_str();
    g->add_option("--n", gen.n, "Number of variables")->capture_default_str();
    g->add_option("--seed", gen.seed)->capture_default_str();
    g->add_option("--out", gen.out, "Output problem file")->required();

    EncryptArgs enc;
    auto* e = app.add_subcommand("encrypt", "Obfuscate a problem");
    e->add_option("--problem", enc.problem)->required()->check(CLI::ExistingFile);
    e->add_option("--scheme", enc.scheme)->check(CLI::IsMember({"I", "II", "III"}))->capture_default_str();
    e->add_option("--out", enc.out, "Encrypted problem file")->required();
    e->add_option("--key-out", enc.key_out, "Key file, kept by the client")->required();
    e->add_option("--m", enc.m, "Decoy count (II)")->capture_default_str();
    e->add_option("--kmax-out", enc.kmax_out, "Max primaries per decoy (II)")->capture_default_str();
    e->add_option("--kmax-in", enc.kmax_in, "Max decoy-decoy entries per decoy (II)")->capture_default_str();
    e->add_option("--bins", enc.bins, "Roulette bins")->capture_default_str();
    e->add_option("--roulette", enc.roulette)->check(CLI::IsMember({"inverse", "preserve"}))->capture_default_str();
    e->add_option("--d-star", enc.d_star, "Target degree (III)");
    e->add_option("--tau", enc.tau, "Fixed stretch factor");
    e->add_option("--seed", enc.seed)->capture_default_str();
    e->add_option("--manifest-out", enc.manifest_out, "Run manifest file");

    SolveArgs sol;
    auto* s = app.add_subcommand("solve", "Solve a problem exactly or with simulated QAOA");
    s->add_option("--problem", sol.problem)->required()->check(CLI::ExistingFile);
    s->add_option("--method", sol.method)->check(CLI::IsMember({"brute", "qaoa"}))->capture_default_str();
    s->add_option("--layers", sol.layers)->capture_default_str();
    s->add_option("--iters", sol.iters)->capture_default_str();
    s->add_option("--shots", sol.shots)->capture_default_str();
    s->add_option("--seed", sol.seed)->capture_default_str();
    s->add_option("--out", sol.out, "Output distribution file")->required();

    DecryptArgs dec;
    auto* d = app.add_subcommand("decrypt", "Map a solver distribution back to the original variables");
    d->add_option("--key", dec.key)->required()->check(CLI::ExistingFile);
    d->add_option("--dist", dec.dist)->required()->check(CLI::ExistingFile);
    d->add_option("--out", dec.out)->required();

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "Check that a decrypted distribution recovers the ground states");
    v->add_option("--problem", ver.problem, "Original problem")->required()->check(CLI::ExistingFile);
    v->add_option("--key", ver.key)->required()->check(CLI::ExistingFile);
    v->add_option("--dist", ver.dist, "Distribution over the encrypted variables")
        ->required()
        ->check(CLI::ExistingFile);
    v->add_option("--require", ver.require, "exact: support equals the ground states; top: modes are ground states")
        ->check(CLI::IsMember({"exact", "top"}))
        ->capture_default_str();

    StatsArgs st;
    auto* t = app.add_subcommand("stats", "Attack complexity and approximation ratios");
    t->add_option("--scheme", st.scheme)->check(CLI::IsMember({"I", "II", "III"}));
    t->add_option("--n", st.n);
    t->add_option("--m", st.m)->capture_default_str();
    t->add_option("--key", st.key)->check(CLI::ExistingFile);
    t->add_option("--problem", st.problem)->check(CLI::ExistingFile);
    t->add_option("--dist", st.dist)->check(CLI::ExistingFile);
    t->add_option("--k", st.k, "Outcomes kept by the restricted ratio")->capture_default_str();

    QaoaArgs qa;
    auto* q = app.add_subcommand("qaoa-sim", "Optimize and sample a QAOA circuit");
    q->add_option("--problem", qa.problem)->required()->check(CLI::ExistingFile);
    q->add_option("--layers", qa.layers)->capture_default_str();
    q->add_option("--iters", qa.iters)->capture_default_str();
    q->add_option("--shots", qa.shots)->capture_default_str();
    q->add_option("--seed", qa.seed)->capture_default_str();
    q->add_option("--out", qa.out, "Output distribution file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::CallForVersion& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        fail("usage_error", err.what());
        return 2;
    }

    try {
        if (*g) run_gen(gen);
        else if (*e) run_encrypt(enc);
        else if (*s) run_solve(sol);
        else if (*d) run_decrypt(dec);
        else if (*v) run_verify(ver);
        else if (*t) run_stats(st);
        else if (*q) run_qaoa(qa);
    } catch (const Error& err) {
        fail(err.code(), err.what());
        return 1;
    } catch (const std::exception& err) {
        fail("internal_error", err.what());
        return 1;
    }
    return 0;
}
