#include "entps/cli_config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace entps {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            throw DomainError("config: unknown key \"" + item.key() + "\" in " + where);
        }
    }
}

complexd read_pair(const json& j, const std::string& key) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw DomainError("config: \"" + key + "\" must be a [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) {
        throw DomainError("config: top level must be an object");
    }
    reject_unknown(j, {"params", "kappa", "sigma", "tau", "cutoff", "tier", "seed",
                       "quadrature", "output"},
                   "top level");
    if (j.contains("params") && j.contains("kappa")) {
        throw DomainError("config: give either \"params\" or \"kappa\", not both");
    }

    RunConfig cfg;
    if (j.contains("params")) {
        const json& p = j["params"];
        reject_unknown(p, {"alpha", "beta", "gamma", "delta"}, "params");
        for (const char* key : {"alpha", "beta", "gamma", "delta"}) {
            if (!p.contains(key)) {
                throw DomainError(std::string("config: params missing \"") + key + "\"");
            }
        }
        cfg.params = validate_params(p["alpha"].get<double>(), p["beta"].get<double>(),
                                     p["gamma"].get<double>(), p["delta"].get<double>());
    } else if (j.contains("kappa")) {
        cfg.params = husimi_params(j["kappa"].get<double>());
    }
    if (j.contains("sigma")) cfg.sigma = read_pair(j["sigma"], "sigma");
    if (j.contains("tau")) cfg.tau = read_pair(j["tau"], "tau");
    if (j.contains("cutoff")) {
        cfg.cutoff = j["cutoff"].get<int>();
        if (cfg.cutoff < 1) throw DomainError("config: cutoff must be >= 1");
    }
    if (j.contains("tier")) {
        const std::string t = j["tier"].get<std::string>();
        if (t == "quick") {
            cfg.tier = verify::Tier::quick;
        } else if (t == "full") {
            cfg.tier = verify::Tier::full;
        } else {
            throw DomainError("config: tier must be \"quick\" or \"full\"");
        }
    }
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("quadrature")) {
        const json& q = j["quadrature"];
        reject_unknown(q, {"order2d", "order4d"}, "quadrature");
        if (q.contains("order2d")) cfg.order2d = q["order2d"].get<int>();
        if (q.contains("order4d")) cfg.order4d = q["order4d"].get<int>();
        if (cfg.order2d < 1 || cfg.order4d < 1) {
            throw DomainError("config: quadrature orders must be >= 1");
        }
    }
    if (j.contains("output")) {
        const json& o = j["output"];
        reject_unknown(o, {"path", "format"}, "output");
        if (o.contains("path")) cfg.output_path = o["path"].get<std::string>();
        if (o.contains("format")) {
            cfg.output_format = o["format"].get<std::string>();
            if (cfg.output_format != "json" && cfg.output_format != "csv") {
                throw DomainError("config: output format must be \"json\" or \"csv\"");
            }
        }
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("config: cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

complexd parse_complex(const std::string& text) {
    std::size_t comma = text.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            const double re = std::stod(text, &used);
            if (used != text.size()) throw DomainError("");
            return {re, 0.0};
        }
        const std::string re_part = text.substr(0, comma);
        const std::string im_part = text.substr(comma + 1);
        const double re = std::stod(re_part, &used);
        if (used != re_part.size()) throw DomainError("");
        const double im = std::stod(im_part, &used);
        if (used != im_part.size()) throw DomainError("");
        return {re, im};
    } catch (const std::exception&) {
        throw DomainError("expected a complex literal \"re,im\", got \"" + text + "\"");
    }
}

}  // namespace entps
