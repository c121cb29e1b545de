#include "aos/config_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aos/errors.hpp"

namespace aos {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw ConfigError(std::string(what) + ": invalid JSON");
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

SystemConfig parse_system_config(const std::string& json_text) {
    const json j = parse_json(json_text, "config");
    try {
        if (j.contains("paper_preset")) {
            const double q = j.at("paper_preset").at("q").get<double>();
            const int N = j.value("N", 6);
            const long long T = j.value("T", 100000LL);
            const uint64_t seed = j.value("seed", 1ULL);
            return make_paper_config(q, N, T, seed);
        }

        SystemConfig cfg;
        cfg.N = j.at("N").get<int>();
        cfg.T = j.value("T", 100000LL);
        cfg.seed = j.value("seed", 1ULL);
        for (const auto& jn : j.at("nodes")) {
            NodeConfig node;
            node.lambda = jn.at("lambda").get<double>();
            node.chain.omega = jn.at("omega").get<std::vector<double>>();
            node.chain.R = static_cast<int>(node.chain.omega.size());
            const auto rows = jn.at("P").get<std::vector<std::vector<double>>>();
            if (static_cast<int>(rows.size()) != node.chain.R)
                throw ConfigError("P and omega disagree on the weight-state count");
            for (const auto& row : rows) {
                if (static_cast<int>(row.size()) != node.chain.R)
                    throw ConfigError("P is not square");
                node.chain.P.insert(node.chain.P.end(), row.begin(), row.end());
            }
            cfg.nodes.push_back(std::move(node));
        }
        cfg.M = static_cast<int>(cfg.nodes.size());
        if (j.contains("M") && j.at("M").get<int>() != cfg.M)
            throw ConfigError("declared M does not match the node list");
        cfg.validate();
        return cfg;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

SystemConfig load_system_config(const std::string& path) {
    return parse_system_config(read_file(path));
}

PolicyArtifact make_artifact(const RelaxedSolution& rel, int M, int N) {
    PolicyArtifact a;
    a.eta1 = rel.eta1;
    a.eta2 = rel.eta2;
    a.alpha = rel.alpha;
    a.J_re = rel.J_re;
    a.D_re = rel.D_re;
    a.M = M;
    a.N = N;
    a.policies = rel.policies;
    a.measures = rel.mixed;
    return a;
}

namespace {

json matrix_to_json(const std::vector<double>& flat, int rows, int cols) {
    json out = json::array();
    for (int s = 0; s < rows; ++s) {
        json row = json::array();
        for (int r = 0; r < cols; ++r) row.push_back(flat[static_cast<size_t>(s) * cols + r]);
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<double> matrix_from_json(const json& j, int cols, const char* what) {
    std::vector<double> flat;
    for (const auto& row : j) {
        if (static_cast<int>(row.size()) != cols)
            throw ConfigError(std::string(what) + ": ragged matrix");
        for (const auto& v : row) flat.push_back(v.get<double>());
    }
    return flat;
}

}  // namespace

void save_artifact(const PolicyArtifact& a, const std::string& path) {
    json j;
    j["format"] = "aos-policy-v1";
    j["eta1"] = a.eta1;
    j["eta2"] = a.eta2;
    j["alpha"] = a.alpha;
    j["J_re"] = a.J_re;
    j["D_re"] = a.D_re;
    j["M"] = a.M;
    j["N"] = a.N;
    json nodes = json::array();
    for (int i = 0; i < a.M; ++i) {
        const TransmitPolicy& pol = a.policies[i];
        const MixedMeasures& mm = a.measures[i];
        json jn;
        jn["S_max"] = pol.S_max;
        jn["R"] = pol.R;
        jn["xi"] = matrix_to_json(pol.xi, pol.S_max + 1, pol.R);
        jn["mu"] = matrix_to_json(mm.mu, mm.S_max + 1, mm.R);
        jn["nu"] = matrix_to_json(mm.nu, mm.S_max + 1, mm.R);
        jn["omega"] = mm.omega;
        nodes.push_back(std::move(jn));
    }
    j["nodes"] = std::move(nodes);

    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path);
    out << j.dump(1) << '\n';
}

PolicyArtifact load_artifact(const std::string& path) {
    const json j = parse_json(read_file(path), "artifact");
    try {
        if (j.value("format", "") != std::string("aos-policy-v1"))
            throw ConfigError("artifact: unknown format tag");
        PolicyArtifact a;
        a.eta1 = j.at("eta1").get<double>();
        a.eta2 = j.at("eta2").get<double>();
        a.alpha = j.at("alpha").get<double>();
        a.J_re = j.at("J_re").get<double>();
        a.D_re = j.at("D_re").get<double>();
        a.M = j.at("M").get<int>();
        a.N = j.at("N").get<int>();
        for (const auto& jn : j.at("nodes")) {
            TransmitPolicy pol;
            pol.S_max = jn.at("S_max").get<int>();
            pol.R = jn.at("R").get<int>();
            pol.xi = matrix_from_json(jn.at("xi"), pol.R, "xi");
            MixedMeasures mm;
            mm.S_max = pol.S_max;
            mm.R = pol.R;
            mm.mu = matrix_from_json(jn.at("mu"), mm.R, "mu");
            mm.nu = matrix_from_json(jn.at("nu"), mm.R, "nu");
            mm.omega = jn.at("omega").get<std::vector<double>>();
            if (pol.xi.size() != static_cast<size_t>(pol.S_max + 1) * pol.R)
                throw ConfigError("artifact: xi size mismatch");
            a.policies.push_back(std::move(pol));
            a.measures.push_back(std::move(mm));
        }
        if (static_cast<int>(a.policies.size()) != a.M)
            throw ConfigError("artifact: node count mismatch");
        return a;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("artifact: ") + e.what());
    }
}

}  // namespace aos
