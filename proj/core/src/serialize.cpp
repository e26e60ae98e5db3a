#include "slrep/serialize.hpp"

#include "slrep/errors.hpp"

namespace slrep {

json matrix_to_json(const RfMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

RfMatrix matrix_from_json(const json& j, int level) {
    if (!j.is_array() || j.empty()) throw domain_error("matrix JSON must be a non-empty array");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j[0].size());
    RfMatrix m(rows, cols, level);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j[r].size()) != cols)
            throw domain_error("matrix JSON rows have unequal lengths");
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = parse_ratfunc(j[r][c].get<std::string>(), level);
    }
    return m;
}

json to_json(const CocycleModule& m) {
    json gens = json::array();
    for (int i = 1; i < m.level(); ++i)
        gens.push_back(json{{"matrix", matrix_to_json(m.gen_matrix(i))}, {"swap", i}});
    return json{{"gens", std::move(gens)}, {"level", m.level()}, {"rank", m.rank()}};
}

CocycleModule cocycle_module_from_json(const json& j) {
    const int level = j.at("level").get<int>();
    const int rank = j.at("rank").get<int>();
    std::vector<RfMatrix> gens(std::max(0, level - 1), RfMatrix::identity(rank, level));
    for (const auto& g : j.at("gens")) {
        int i = g.at("swap").get<int>();
        if (i < 1 || i > level - 1) throw domain_error("swap index outside 1..level-1");
        gens[i - 1] = matrix_from_json(g.at("matrix"), level);
    }
    return CocycleModule(level, rank, std::move(gens));
}

json to_json(const TrivializationWitness& w, int) { return json{{"phi", matrix_to_json(w.phi)}}; }

TrivializationWitness witness_from_json(const json& j, int level) {
    return TrivializationWitness{matrix_from_json(j.at("phi"), level)};
}

json to_json(const OpenSubgroupSpec& spec) {
    json gens = json::array();
    for (const auto& g : spec.extra_gens) gens.push_back(g.images());
    return json{{"S", spec.support}, {"W", spec.window}, {"gens", std::move(gens)}};
}

OpenSubgroupSpec subgroup_spec_from_json(const json& j, int level) {
    OpenSubgroupSpec spec;
    spec.support = j.at("S").get<std::vector<int>>();
    spec.window = j.at("W").get<std::vector<int>>();
    for (const auto& g : j.at("gens")) {
        std::vector<int> images = g.get<std::vector<int>>();
        if (static_cast<int>(images.size()) != level)
            throw domain_error("generator image list length differs from level");
        spec.extra_gens.push_back(Permutation(std::move(images)));
    }
    return spec;
}

json to_json(const CanonicalOpenSubgroup& c) { return json{{"H", c.H}, {"T", c.T}}; }

CanonicalOpenSubgroup canonical_subgroup_from_json(const json& j) {
    CanonicalOpenSubgroup c;
    c.T = j.at("T").get<std::vector<int>>();
    c.H = j.at("H").get<std::vector<std::vector<int>>>();
    return c;
}

json to_json(const PermModuleExpr& e) {
    json kappa = json::object();
    for (const auto& [s, mult] : e.kappa) kappa[std::to_string(s)] = mult.get_str();
    return json{{"kappa", std::move(kappa)}};
}

PermModuleExpr perm_module_expr_from_json(const json& j) {
    PermModuleExpr e;
    for (const auto& [key, value] : j.at("kappa").items()) {
        Int mult(value.get<std::string>());
        e.kappa[std::stoi(key)] = mult;
    }
    return e;
}

json classification_to_json(const Classification& c) {
    json nu = json::array();
    for (int r = 0; r < c.nu.rows(); ++r) {
        json row = json::array();
        for (int col = 0; col < c.nu.cols(); ++col) row.push_back(to_string(c.nu.at(r, col)));
        nu.push_back(std::move(row));
    }
    return json{{"jordan", c.jordan}, {"nu", std::move(nu)}, {"rank", c.nu.rows()}};
}

} // namespace slrep
