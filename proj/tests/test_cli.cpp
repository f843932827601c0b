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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "catch_amalgamated.hpp"

#include "enigma/benchgen.hpp"
#include "enigma/serialize.hpp"

namespace enigma {

namespace fs = std::filesystem;

namespace {

class Workspace {
 public:
    Workspace() : dir_(fs::temp_directory_path() / ("enigma_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(dir_);
    }
    ~Workspace() { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    // Runs the CLI, capturing stdout and stderr; returns the exit status.
    int run(const std::string& args) {
        const std::string cmd = std::string("\"") + ENIGMA_CLI_PATH + "\" " + args + " > \"" + path("stdout") +
                                "\" 2> \"" + path("stderr") + "\"";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    std::string read(const std::string& name) const {
        std::ifstream in(path(name));
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

 private:
    fs::path dir_;
};

}  // namespace

TEST_CASE("round trip for every scheme and family", "[cli]") {
    Workspace ws;
    const std::string p = ws.path("p.json"), enc = ws.path("enc.json"), key = ws.path("key.json"),
                      dist = ws.path("dist.json"), dec = ws.path("dec.json");
    for (Family family : kAllFamilies) {
        for (const char* scheme : {"I", "II", "III"}) {
            const int seeds = std::string(scheme) == "I" ? 20 : 4;
            for (int seed = 1; seed <= seeds; ++seed) {
                const std::string s = " --seed " + std::to_string(seed);
                INFO(to_string(family) << " scheme " << scheme << " seed " << seed);
                REQUIRE(ws.run("gen --family " + std::string(to_string(family)) + " --n 6 --out " + p + s) == 0);
                REQUIRE(ws.run("encrypt --problem " + p + " --scheme " + scheme + " --out " + enc + " --key-out " +
                               key + s) == 0);
                REQUIRE(ws.run("solve --method brute --problem " + enc + " --out " + dist) == 0);
                REQUIRE(ws.run("decrypt --key " + key + " --dist " + dist + " --out " + dec) == 0);
                REQUIRE(ws.run("verify --problem " + p + " --key " + key + " --dist " + dist) == 0);
                REQUIRE(parse_json(ws.read("stdout"))["ok"] == true);
            }
        }
    }
}

TEST_CASE("encrypted problem carries no key material", "[cli]") {
    Workspace ws;
    REQUIRE(ws.run("gen --family er --n 5 --seed 3 --out " + ws.path("p.json")) == 0);
    REQUIRE(ws.run("encrypt --problem " + ws.path("p.json") + " --scheme II --m 2 --out " + ws.path("e.json") +
                   " --key-out " + ws.path("k.json") + " --manifest-out " + ws.path("run.json")) == 0);
    const Json doc = read_json_file(ws.path("e.json"));
    CHECK(doc.size() == 4);
    CHECK(!doc.contains("perm"));
    CHECK(!doc.contains("key1"));
    const Json manifest = read_json_file(ws.path("run.json"));
    CHECK(manifest["inputs"]["problem"]["sha256"].get<std::string>().size() == 64);
    CHECK(manifest["scheme"] == "II");

    CHECK(ws.run("encrypt --problem " + ws.path("p.json") + " --out " + ws.path("same.json") + " --key-out " +
                 ws.path("same.json")) != 0);
}

TEST_CASE("runs are reproducible", "[cli]") {
    Workspace ws;
    REQUIRE(ws.run("gen --family ba2 --n 7 --seed 9 --out " + ws.path("p.json")) == 0);
    for (const char* tag : {"a", "b"}) {
        REQUIRE(ws.run("encrypt --problem " + ws.path("p.json") + " --scheme III --seed 4 --out " +
                       ws.path(std::string("e_") + tag + ".json") + " --key-out " +
                       ws.path(std::string("k_") + tag + ".json")) == 0);
    }
    CHECK(ws.read("e_a.json") == ws.read("e_b.json"));
    CHECK(ws.read("k_a.json") == ws.read("k_b.json"));
}

TEST_CASE("wrong key fails verification", "[cli]") {
    Workspace ws;
    const std::string p = ws.path("p.json"), enc = ws.path("enc.json"), key = ws.path("key.json"),
                      dist = ws.path("dist.json");
    REQUIRE(ws.run("gen --family sk --n 6 --seed 2 --out " + p) == 0);
    REQUIRE(ws.run("encrypt --problem " + p + " --out " + enc + " --key-out " + key) == 0);
    REQUIRE(ws.run("solve --problem " + enc + " --out " + dist) == 0);

    // Toggle qubit 0's membership in the target set.
    Json doc = read_json_file(key);
    Json targets = Json::array();
    bool had_zero = false;
    for (const auto& t : doc["targets"]) {
        if (t == 0) had_zero = true;
        else targets.push_back(t);
    }
    if (!had_zero) targets.insert(targets.begin(), 0);
    doc["targets"] = targets;
    write_json_file(ws.path("wrong.json"), doc);
    CHECK(ws.run("verify --problem " + p + " --key " + ws.path("wrong.json") + " --dist " + dist) != 0);
    CHECK(parse_json(ws.read("stderr"))["error"]["code"] == "verification_failed");

    // A key for a different problem size.
    REQUIRE(ws.run("gen --family sk --n 5 --out " + ws.path("p5.json")) == 0);
    REQUIRE(ws.run("encrypt --problem " + ws.path("p5.json") + " --out " + ws.path("e5.json") + " --key-out " +
                   ws.path("k5.json")) == 0);
    CHECK(ws.run("verify --problem " + p + " --key " + ws.path("k5.json") + " --dist " + dist) != 0);
    CHECK(parse_json(ws.read("stderr"))["error"]["code"] == "dimension_error");
}

TEST_CASE("stats", "[cli]") {
    Workspace ws;
    REQUIRE(ws.run("stats --scheme II --n 3 --m 1") == 0);
    const Json out = parse_json(ws.read("stdout"));
    CHECK(std::abs(out["log2_complexity"].get<double>() - 10.584962500721156) < 1e-9);

    REQUIRE(ws.run("stats --scheme I --n 7") == 0);
    CHECK(parse_json(ws.read("stdout"))["log2_complexity"] == 7.0);

    const std::string p = ws.path("p.json"), d = ws.path("d.json");
    write_json_file(p, to_json(IsingModel({0.0, 0.0}, {{{0, 1}, 1.0}})));
    write_json_file(d, to_json(OutcomeDistribution(2, {{"01", 0.4}, {"10", 0.3}, {"00", 0.2}, {"11", 0.1}})));
    REQUIRE(ws.run("stats --problem " + p + " --dist " + d + " --k 2") == 0);
    const Json metrics = parse_json(ws.read("stdout"));
    CHECK(metrics["rar"] == 1.0);
    CHECK(metrics["ar"].get<double>() == Catch::Approx(0.4));
}

TEST_CASE("qaoa commands", "[cli]") {
    Workspace ws;
    const std::string p = ws.path("p.json");
    write_json_file(p, to_json(IsingModel({0.0, 0.0}, {{{0, 1}, 1.0}})));
    REQUIRE(ws.run("qaoa-sim --problem " + p + " --seed 3 --out " + ws.path("q.json")) == 0);
    const Json out = parse_json(ws.read("stdout"));
    CHECK(out["expectation"].get<double>() <= -0.99);
    CHECK(distribution_from_json(read_json_file(ws.path("q.json"))).is_normalized());

    REQUIRE(ws.run("solve --method qaoa --problem " + p + " --out " + ws.path("s.json")) == 0);
    REQUIRE(ws.run("encrypt --problem " + p + " --out " + ws.path("e.json") + " --key-out " + ws.path("k.json")) == 0);
    REQUIRE(ws.run("solve --method qaoa --problem " + ws.path("e.json") + " --out " + ws.path("s.json")) == 0);
    CHECK(ws.run("verify --require top --problem " + p + " --key " + ws.path("k.json") + " --dist " +
                 ws.path("s.json")) == 0);
}

TEST_CASE("errors are machine readable", "[cli]") {
    Workspace ws;
    CHECK(ws.run("gen --family grid --out " + ws.path("x.json")) != 0);
    CHECK(parse_json(ws.read("stderr"))["error"]["code"] == "domain_error");

    std::ofstream(ws.path("bad.json")) << R"({"n":2,"h":[0],"J":[],"offset":0})";
    CHECK(ws.run("solve --problem " + ws.path("bad.json") + " --out " + ws.path("d.json")) != 0);
    CHECK(parse_json(ws.read("stderr"))["error"]["code"] == "schema_error");

    CHECK(ws.run("encrypt --scheme IV") != 0);
    CHECK(parse_json(ws.read("stderr"))["error"]["code"] == "usage_error");

    write_json_file(ws.path("big.json"), to_json(IsingModel(20)));
    CHECK(ws.run("qaoa-sim --problem " + ws.path("big.json")) != 0);
    CHECK(parse_json(ws.read("stderr"))["error"]["code"] == "resource_error");
}

}  // namespace enigma
