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

#include "enigma/serialize.hpp"

#include <fstream>
#include <sstream>

#include "enigma/errors.hpp"

namespace enigma {

namespace {

const Json& field(const Json& doc, const char* name) {
    if (!doc.is_object()) throw SchemaError("expected a JSON object");
    auto it = doc.find(name);
    if (it == doc.end()) throw SchemaError(std::string("missing field '") + name + "'");
    return *it;
}

index_type as_index(const Json& value, const char* what) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw SchemaError(std::string("'") + what + "' must be a nonnegative integer");
    }
    return value.get<index_type>();
}

double as_real(const Json& value, const char* what) {
    if (!value.is_number()) throw SchemaError(std::string("'") + what + "' must be a number");
    return value.get<double>();
}

void expect_scheme(const Json& doc, const char* scheme) {
    const Json& s = field(doc, "scheme");
    if (!s.is_string() || s.get<std::string>() != scheme) {
        throw SchemaError(std::string("expected a scheme ") + scheme + " key");
    }
}

Json triples(const std::map<Pair, double>& entries) {
    Json out = Json::array();
    for (const auto& [pair, value] : entries) out.push_back(Json::array({pair.first, pair.second, value}));
    return out;
}

template <class Fn>
void for_each_triple(const Json& list, const char* what, Fn fn) {
    if (!list.is_array()) throw SchemaError(std::string("'") + what + "' must be an array");
    for (const Json& t : list) {
        if (!t.is_array() || t.size() != 3) throw SchemaError(std::string("'") + what + "' entries must be [i, j, value]");
        fn(as_index(t[0], what), as_index(t[1], what), as_real(t[2], what));
    }
}

// Library errors raised while rebuilding a value become schema errors.
template <class Fn>
auto rethrow_as_schema(Fn fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        throw SchemaError(e.what());
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(e.what());
    }
}

Json key2_fields(const KeyII& key, const char* scheme) {
    Json doc;
    doc["scheme"] = scheme;
    doc["n"] = key.n;
    doc["m"] = key.m;
    doc["perm"] = key.perm.forward;
    doc["key1"] = to_json(key.key1);
    doc["offset"] = key.offset;
    return doc;
}

KeyII key2_body(const Json& doc) {
    KeyII key;
    key.n = as_index(field(doc, "n"), "n");
    key.m = as_index(field(doc, "m"), "m");
    const Json& perm = field(doc, "perm");
    if (!perm.is_array()) throw SchemaError("'perm' must be an array");
    for (const Json& v : perm) key.perm.forward.push_back(as_index(v, "perm"));
    key.key1 = key1_from_json(field(doc, "key1"));
    key.offset = as_real(field(doc, "offset"), "offset");
    rethrow_as_schema([&] {
        key.validate();
        return 0;
    });
    return key;
}

}  // namespace

Json to_json(const IsingModel& model) {
    Json doc;
    doc["n"] = model.num_variables();
    doc["h"] = model.linear();
    doc["J"] = triples(model.quadratic());
    doc["offset"] = model.offset();
    return doc;
}

Json to_json(const QuboModel& model) {
    Json doc;
    doc["n"] = model.num_variables();
    doc["A"] = triples(model.coefficients());
    doc["offset"] = model.offset();
    return doc;
}

Json to_json(const KeyI& key) {
    Json doc;
    doc["scheme"] = "I";
    doc["n"] = key.n;
    doc["targets"] = key.targets;
    doc["tau"] = key.tau;
    doc["offset"] = key.offset;
    return doc;
}

Json to_json(const KeyII& key) { return key2_fields(key, "II"); }

Json to_json(const KeyIII& key) {
    Json doc = key2_fields(key.base, "III");
    doc["d_star"] = key.d_star;
    return doc;
}

Json to_json(const OutcomeDistribution& dist) {
    Json doc;
    doc["n"] = dist.num_bits();
    Json counts = Json::object();
    for (const auto& [bits, weight] : dist.counts()) counts[bits] = weight;
    doc["counts"] = counts;
    return doc;
}

IsingModel ising_from_json(const Json& doc) {
    return rethrow_as_schema([&] {
        const index_type n = as_index(field(doc, "n"), "n");
        const Json& h = field(doc, "h");
        if (!h.is_array() || h.size() != n) throw SchemaError("'h' must be an array of length n");
        std::vector<double> linear;
        for (const Json& v : h) linear.push_back(as_real(v, "h"));
        IsingModel model(std::move(linear), {}, as_real(field(doc, "offset"), "offset"));
        for_each_triple(field(doc, "J"), "J", [&](index_type i, index_type j, double v) {
            if (i >= j) throw SchemaError("'J' pairs must satisfy i < j");
            if (model.quadratic(i, j) != 0.0) throw SchemaError("duplicate pair in 'J'");
            model.set_quadratic(i, j, v);
        });
        return model;
    });
}

QuboModel qubo_from_json(const Json& doc) {
    return rethrow_as_schema([&] {
        const index_type n = as_index(field(doc, "n"), "n");
        QuboModel model(n, as_real(field(doc, "offset"), "offset"));
        for_each_triple(field(doc, "A"), "A", [&](index_type i, index_type j, double v) {
            if (i > j) throw SchemaError("'A' pairs must satisfy i <= j");
            if (model.coefficient(i, j) != 0.0) throw SchemaError("duplicate pair in 'A'");
            model.set(i, j, v);
        });
        return model;
    });
}

KeyI key1_from_json(const Json& doc) {
    return rethrow_as_schema([&] {
        expect_scheme(doc, "I");
        KeyI key;
        key.n = as_index(field(doc, "n"), "n");
        const Json& targets = field(doc, "targets");
        if (!targets.is_array()) throw SchemaError("'targets' must be an array");
        for (const Json& t : targets) key.targets.push_back(as_index(t, "targets"));
        key.tau = as_real(field(doc, "tau"), "tau");
        key.offset = as_real(field(doc, "offset"), "offset");
        key.validate();
        return key;
    });
}

KeyII key2_from_json(const Json& doc) {
    return rethrow_as_schema([&] {
        expect_scheme(doc, "II");
        return key2_body(doc);
    });
}

KeyIII key3_from_json(const Json& doc) {
    return rethrow_as_schema([&] {
        expect_scheme(doc, "III");
        KeyIII key;
        key.base = key2_body(doc);
        key.d_star = as_index(field(doc, "d_star"), "d_star");
        return key;
    });
}

OutcomeDistribution distribution_from_json(const Json& doc) {
    return rethrow_as_schema([&] {
        OutcomeDistribution dist(as_index(field(doc, "n"), "n"));
        const Json& counts = field(doc, "counts");
        if (!counts.is_object()) throw SchemaError("'counts' must be an object");
        for (const auto& [bits, weight] : counts.items()) dist.add(bits, as_real(weight, "counts"));
        return dist;
    });
}

AnyKey key_from_json(const Json& doc) {
    const Json& scheme = field(doc, "scheme");
    if (!scheme.is_string()) throw SchemaError("'scheme' must be a string");
    const auto name = scheme.get<std::string>();
    if (name == "I") return key1_from_json(doc);
    if (name == "II") return key2_from_json(doc);
    if (name == "III") return key3_from_json(doc);
    throw SchemaError("unknown scheme '" + name + "'");
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str());
}

void write_json_file(const std::string& path, const Json& doc) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot write '" + path + "'");
    out << doc.dump(2) << '\n';
}

}  // namespace enigma
