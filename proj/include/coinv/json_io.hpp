#pragma once

#include <json.hpp>

#include <coinv/characters.hpp>
#include <coinv/oracle.hpp>
#include <coinv/reconstruct.hpp>

namespace coinv {

using Json = nlohmann::ordered_json;

inline Json to_json(const SkewComponent& c) {
    Json j;
    j["base_content"] = c.base_content.to_string();
    Json cells = Json::array();
    for (const auto& cell : c.cells) cells.push_back({cell.row, cell.col});
    j["cells"] = std::move(cells);
    return j;
}

inline Json to_json(const SkewPair& sp) {
    Json j = Json::array();
    for (int which : {0, 1})
        for (const auto& c : sp.list(which)) {
            Json e;
            e["which"] = which;
            e["base_content"] = c.base_content.to_string();
            Json cells = Json::array();
            for (const auto& cell : c.cells) cells.push_back({cell.row, cell.col});
            e["cells"] = std::move(cells);
            j.push_back(std::move(e));
        }
    return j;
}

inline Json to_json(const PlacedComponent& pc) {
    Json j = to_json(pc.comp);
    j["entries"] = pc.entries;
    return j;
}

inline Json to_json(const SkewTableau& st) {
    Json j = Json::array();
    for (int which : {0, 1})
        for (const auto& c : st.list(which)) {
            Json e;
            e["which"] = which;
            e.update(to_json(c));
            j.push_back(std::move(e));
        }
    return j;
}

inline Json to_json(const std::vector<WeightEntry>& ws) {
    Json j = Json::array();
    for (const auto& e : ws) j.push_back({{"a", e.a.to_string()}, {"list", e.list}});
    return j;
}

// Filling as nested value rows, one block per component.
inline Json filling_json(const Bipartition& shape, const QFilling& q) {
    Json j;
    std::size_t at = 0;
    for (int comp : {0, 1}) {
        Json block = Json::array();
        for (int len : shape.part(comp)) {
            Json row = Json::array();
            for (int c = 0; c < len; ++c) row.push_back(q[at++]);
            block.push_back(std::move(row));
        }
        j[comp == 0 ? "comp0" : "comp1"] = std::move(block);
    }
    return j;
}

inline Json to_json(const BoundReport& r) {
    Json j;
    j["n"] = r.n;
    j["scenario"] = r.scenario;
    j["shape"] = to_string(r.shape);
    j["det_mult"] = r.det_mult;
    j["chi_generic"] = r.chi_generic;
    j["chi_total"] = r.chi_total;
    j["coinvariant_type"] = r.coinvariant_type;
    j["eps_chi_lower"] = r.eps_chi_lower;
    j["theorem_bound"] = r.theorem;
    return j;
}

inline Json to_json(const BidegreeDims& e) {
    Json j;
    j["a"] = e.a;
    j["b"] = e.b;
    j["dim"] = e.dim;
    Json iso;
    for (BChar ch : all_bchars)
        iso[to_string(ch)] = e.iso[static_cast<int>(ch)];
    j["iso"] = std::move(iso);
    return j;
}

inline Json to_json(const GradedReport& r) {
    Json j;
    j["n"] = r.n;
    j["complete"] = r.complete;
    j["top_degree"] = r.top_degree;
    Json entries = Json::array();
    for (const auto& e : r.entries) entries.push_back(to_json(e));
    j["bidegrees"] = std::move(entries);
    return j;
}

inline Json to_json(const EpsilonReport& r) {
    Json j;
    j["n"] = r.graded.n;
    j["dim"] = r.dim;
    j["principal"] = r.principal;
    j["eps"] = r.eps;
    j["det_dim"] = r.det_dim;
    j["chi_prime_dim"] = r.chi_prime_dim;
    j["eps_chi"] = r.eps_chi;
    j["graded"] = to_json(r.graded);
    return j;
}

}  // namespace coinv
