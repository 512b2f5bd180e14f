#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cvp.hpp"

namespace latred {

using Json = nlohmann::ordered_json;

// Serializable problem: basis rows as decimal strings so entries of any
// size survive JSON untouched.
struct Instance {
    std::size_t n = 0;
    Mat basis;
    std::optional<Vec> target;
    std::optional<std::uint64_t> seed;
};

struct ResultRecord {
    std::string problem;  // "svp" | "cvp"
    Vec x;
    Vec v;  // Bx; the closest point w for CVP
    Int min_sq;
    std::string oracle;  // "enum" | "assisted"
    long oracle_calls = 0;
    ReductionParams params;
    bool verified = false;
};

inline Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (const Int& c : v) a.push_back(to_decimal(c));
    return a;
}

inline Vec vec_from_json(const Json& a) {
    Vec v;
    for (const auto& s : a) v.push_back(parse_decimal(s.get<std::string>()));
    return v;
}

inline Json instance_to_json(const Instance& inst) {
    Json j;
    j["n"] = inst.n;
    Json rows = Json::array();
    for (std::size_t i = 0; i < inst.n; ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < inst.n; ++k) row.push_back(to_decimal(inst.basis.at(i, k)));
        rows.push_back(row);
    }
    j["basis"] = rows;
    if (inst.target) j["target"] = vec_to_json(*inst.target);
    if (inst.seed) j["seed"] = *inst.seed;
    return j;
}

inline Instance instance_from_json(const Json& j) {
    Instance inst;
    inst.n = j.at("n").get<std::size_t>();
    if (inst.n == 0) throw ContractViolation("instance: n must be >= 1");
    const Json& rows = j.at("basis");
    if (rows.size() != inst.n) throw ContractViolation("instance: basis row count != n");
    std::vector<Vec> r;
    for (const auto& row : rows) {
        if (row.size() != inst.n) throw ContractViolation("instance: basis is not square");
        r.push_back(vec_from_json(row));
    }
    inst.basis = Mat::from_rows(r);
    if (j.contains("target")) {
        Vec t = vec_from_json(j.at("target"));
        if (t.size() != inst.n) throw ContractViolation("instance: target length != n");
        inst.target = std::move(t);
    }
    if (j.contains("seed")) inst.seed = j.at("seed").get<std::uint64_t>();
    return inst;
}

inline Json result_to_json(const ResultRecord& r) {
    Json j;
    j["problem"] = r.problem;
    j["x"] = vec_to_json(r.x);
    j[r.problem == "cvp" ? "w" : "v"] = vec_to_json(r.v);
    j["min_sq"] = to_decimal(r.min_sq);
    j["oracle"] = r.oracle;
    j["oracle_calls"] = r.oracle_calls;
    Json p;
    p["p"] = to_decimal(r.params.modulus);
    Json a = Json::array();
    for (unsigned long e : r.params.exponents) a.push_back(e);
    p["a"] = a;
    p["M1"] = to_decimal(r.params.coeff_bound);
    p["M2"] = to_decimal(r.params.length_bound);
    j["params_digest"] = p;
    j["verified"] = r.verified;
    return j;
}

// Seeded deterministic generation; regenerates until the basis is
// nonsingular. Entries are drawn via modular reduction of the raw 64-bit
// stream so the bytes are identical across standard libraries.
inline Instance generate_instance(std::size_t n, long max_entry, std::uint64_t seed) {
    if (n == 0 || max_entry < 1) throw ContractViolation("generate_instance: bad arguments");
    std::mt19937_64 rng(seed);
    std::uint64_t range = 2 * static_cast<std::uint64_t>(max_entry) + 1;
    Instance inst;
    inst.n = n;
    inst.seed = seed;
    do {
        inst.basis = Mat(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                inst.basis.at(i, k) =
                    static_cast<long>(rng() % range) - max_entry;
    } while (det_bareiss(inst.basis) == 0);
    return inst;
}

}  // namespace latred
