#pragma once

#include "macwilliams.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace rankmw {

using Json = nlohmann::ordered_json;

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return Json::parse(in);
}

// ---- field description --------------------------------------------------
// {"p":2,"s":1,"m":4,"modulus_qm":[1,1,0,0,1]}
// Polynomial coefficient lists are low-degree-first; omitted moduli and
// primitive trigger the deterministic selection in FieldTower::make.

inline FieldTower::Spec field_spec_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("field description must be an object");
    FieldTower::Spec spec;
    spec.p = j.at("p").get<unsigned>();
    spec.s = j.value("s", 1u);
    spec.m = j.at("m").get<unsigned>();
    auto read_poly = [&](const char* key) -> std::optional<std::vector<std::uint32_t>> {
        if (!j.contains(key)) return std::nullopt;
        std::vector<std::uint32_t> c;
        for (const auto& e : j.at(key)) c.push_back(e.get<std::uint32_t>());
        return c;
    };
    spec.modulus_q = read_poly("modulus_q");
    spec.modulus_qm = read_poly("modulus_qm");
    if (j.contains("primitive_qm")) spec.primitive_qm = j.at("primitive_qm").get<std::uint32_t>();
    return spec;
}

inline TowerPtr tower_from_json(const Json& j) {
    return FieldTower::make(field_spec_from_json(j));
}

/// Resolved field description, embedding the selected moduli and primitive
/// element so a report is reproducible on any implementation.
inline Json field_to_json(const FieldTower& t) {
    Json j;
    j["p"] = t.p();
    j["s"] = t.s();
    j["m"] = t.m();
    j["modulus_q"] = t.modulus_q();
    j["modulus_qm"] = t.modulus_qm();
    j["primitive_qm"] = t.primitive_qm();
    return j;
}

// ---- generator matrices --------------------------------------------------
// An entry is "0", "1", "a^k" (a power of primitive_qm, optionally negated:
// "-a^k"), a raw integer code, or a coordinate list over GF(q).

inline std::uint32_t parse_entry(const FieldTower& t, const Json& e) {
    if (e.is_number_integer()) {
        long long raw = e.get<long long>();
        if (raw < 0 || raw >= t.q_to_m()) throw std::invalid_argument("entry code out of range");
        return static_cast<std::uint32_t>(raw);
    }
    if (e.is_array()) {
        std::vector<std::uint32_t> coords;
        for (const auto& c : e) coords.push_back(c.get<std::uint32_t>());
        return t.from_ext_coords(coords);
    }
    if (e.is_string()) {
        std::string s = e.get<std::string>();
        bool negate = false;
        if (!s.empty() && s[0] == '-') {
            negate = true;
            s.erase(0, 1);
        }
        std::uint32_t code;
        if (s == "0") {
            code = 0;
        } else if (s == "1") {
            code = 1;
        } else if (s == "a") {
            code = t.primitive_qm();
        } else if (s.rfind("a^", 0) == 0) {
            long long e_pow = std::stoll(s.substr(2));
            code = t.ext_pow(t.primitive_qm(), e_pow);
        } else {
            throw std::invalid_argument("cannot parse matrix entry '" + s + "'");
        }
        return negate ? t.neg(code) : code;
    }
    throw std::invalid_argument("matrix entry must be a string, integer, or coordinate list");
}

inline Matrix generator_from_json(const FieldTower& t, const Json& rows) {
    if (!rows.is_array()) throw std::invalid_argument("generator must be an array of rows");
    const std::size_t k = rows.size();
    std::size_t n = 0;
    if (k > 0) {
        if (!rows[0].is_array()) throw std::invalid_argument("generator rows must be arrays");
        n = rows[0].size();
    }
    Matrix g(ext_view(t), k, n);
    for (std::size_t r = 0; r < k; ++r) {
        if (rows[r].size() != n) throw std::invalid_argument("ragged generator matrix");
        for (std::size_t c = 0; c < n; ++c) g(r, c) = parse_entry(t, rows[r][c]);
    }
    return g;
}

/// Rows serialized as coordinate lists over GF(q), the canonical output form.
inline Json generator_to_json(const FieldTower& t, const Matrix& g) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < g.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(t.ext_coords(g(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- homogeneous polynomials ----------------------------------------------
// {"degree":7,"coeffs":["1","0","105",...]} with decimal-string coefficients,
// low index first (index = power of y).

inline Json hompoly_to_json(const HomPoly& p) {
    Json j;
    j["degree"] = p.degree();
    Json coeffs = Json::array();
    for (unsigned i = 0; i <= p.degree(); ++i) coeffs.push_back(to_decimal(p[i]));
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline HomPoly hompoly_from_json(const Json& j) {
    unsigned degree = j.at("degree").get<unsigned>();
    const auto& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != degree + 1)
        throw std::invalid_argument("coeffs must be an array of degree+1 entries");
    std::vector<BigInt> c;
    c.reserve(coeffs.size());
    for (const auto& e : coeffs) {
        if (e.is_string())
            c.emplace_back(e.get<std::string>());
        else
            c.emplace_back(e.get<long long>());
    }
    return HomPoly(std::move(c));
}

}  // namespace rankmw
