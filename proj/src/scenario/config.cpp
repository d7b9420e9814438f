// config.cpp — JSON scenario documents

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qbt/scenario.hpp"

namespace qbt::scenario {

using nlohmann::json;

namespace {

const std::set<std::string> kKnownKeys{
    "name", "description", "model", "gamma0", "T_env", "g", "gamma_phi", "J", "bloch", "bloch_a", "bloch_b",
    "rho", "field", "dt", "t_max", "sample_stride", "out_dir", "plot", "panels",
};

std::string vec_text(const Vec3& b) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << b.x() << ", " << b.y() << ", " << b.z() << ")";
    return os.str();
}

double number(const json& doc, const std::string& key) {
    const json& v = doc.at(key);
    if (!v.is_number()) {
        throw ConfigError("field '" + key + "' must be a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw ConfigError("field '" + key + "' must be finite");
    }
    return x;
}

std::optional<double> optional_number(const json& doc, const std::string& key) {
    if (!doc.contains(key)) {
        return std::nullopt;
    }
    return number(doc, key);
}

Vec3 vector3(const json& doc, const std::string& key) {
    const json& v = doc.at(key);
    if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() || !v[2].is_number()) {
        throw ConfigError("field '" + key + "' must be an array of three numbers");
    }
    return Vec3(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
}

std::string text(const json& doc, const std::string& key) {
    const json& v = doc.at(key);
    if (!v.is_string()) {
        throw ConfigError("field '" + key + "' must be a string");
    }
    return v.get<std::string>();
}

ModelKind parse_model(const std::string& s) {
    if (s == "thermal_bath") return ModelKind::thermal_bath;
    if (s == "dephasing") return ModelKind::dephasing;
    if (s == "two_atom") return ModelKind::two_atom;
    if (s == "exchange_unitary") return ModelKind::exchange_unitary;
    throw ConfigError("field 'model' has unknown value '" + s +
                      "' (expected thermal_bath, dephasing, two_atom or exchange_unitary)");
}

Panel parse_panel(const std::string& s) {
    if (s == "heat_work") return Panel::heat_work;
    if (s == "temperature") return Panel::temperature;
    if (s == "bloch") return Panel::bloch;
    throw ConfigError("field 'panels' has unknown entry '" + s + "'");
}

ComplexMatrix parse_rho(const json& v) {
    if (!v.is_array() || v.size() != 4) {
        throw ConfigError("field 'rho' must be a 4x4 array");
    }
    ComplexMatrix rho(4, 4);
    for (int i = 0; i < 4; ++i) {
        if (!v[i].is_array() || v[i].size() != 4) {
            throw ConfigError("field 'rho' must be a 4x4 array");
        }
        for (int j = 0; j < 4; ++j) {
            const json& e = v[i][j];
            if (e.is_number()) {
                rho(i, j) = e.get<double>();
            } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
                rho(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
            } else {
                throw ConfigError("field 'rho' entries must be numbers or [re, im] pairs");
            }
        }
    }
    return rho;
}

void require_param(const ScenarioConfig& cfg, const std::optional<double>& p, const char* key) {
    if (!p) {
        throw ConfigError("model '" + to_string(cfg.model) + "' requires field '" + key + "'");
    }
}

void forbid_param(const ScenarioConfig& cfg, const std::optional<double>& p, const char* key) {
    if (p) {
        throw ConfigError("model '" + to_string(cfg.model) + "' does not take field '" + key + "'");
    }
}

void require_positive(const std::optional<double>& p, const char* key) {
    if (p && !(*p > 0.0)) {
        throw ConfigError(std::string("field '") + key + "' must be positive (negative or zero rate)");
    }
}

} // namespace

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::thermal_bath: return "thermal_bath";
        case ModelKind::dephasing: return "dephasing";
        case ModelKind::two_atom: return "two_atom";
        case ModelKind::exchange_unitary: return "exchange_unitary";
    }
    return "?";
}

std::string to_string(Panel panel) {
    switch (panel) {
        case Panel::heat_work: return "heat_work";
        case Panel::temperature: return "temperature";
        case Panel::bloch: return "bloch";
    }
    return "?";
}

void validate(const ScenarioConfig& cfg) {
    if (cfg.name.empty()) {
        throw ConfigError("field 'name' must be a non-empty string");
    }
    for (char c : cfg.name) {
        if (c == '/' || c == '\\') {
            throw ConfigError("field 'name' must not contain path separators");
        }
    }
    require_positive(cfg.gamma0, "gamma0");
    require_positive(cfg.gamma_phi, "gamma_phi");
    if (cfg.T_env && !(*cfg.T_env >= 0.0)) {
        throw ConfigError("field 'T_env' must be >= 0");
    }
    switch (cfg.model) {
        case ModelKind::thermal_bath:
            require_param(cfg, cfg.gamma0, "gamma0");
            require_param(cfg, cfg.T_env, "T_env");
            forbid_param(cfg, cfg.g, "g");
            forbid_param(cfg, cfg.gamma_phi, "gamma_phi");
            forbid_param(cfg, cfg.J, "J");
            break;
        case ModelKind::dephasing:
            require_param(cfg, cfg.gamma_phi, "gamma_phi");
            forbid_param(cfg, cfg.gamma0, "gamma0");
            forbid_param(cfg, cfg.g, "g");
            forbid_param(cfg, cfg.J, "J");
            break;
        case ModelKind::two_atom:
            require_param(cfg, cfg.gamma0, "gamma0");
            require_param(cfg, cfg.g, "g");
            forbid_param(cfg, cfg.gamma_phi, "gamma_phi");
            forbid_param(cfg, cfg.J, "J");
            if (!(*cfg.g >= 0.0 && *cfg.g <= 1.0)) {
                throw ConfigError("field 'g' must lie in [0, 1]");
            }
            if (cfg.T_env && *cfg.T_env != 0.0) {
                throw ConfigError("model 'two_atom' is a zero-temperature model; field 'T_env' must be 0");
            }
            break;
        case ModelKind::exchange_unitary:
            require_param(cfg, cfg.J, "J");
            forbid_param(cfg, cfg.gamma0, "gamma0");
            forbid_param(cfg, cfg.g, "g");
            forbid_param(cfg, cfg.gamma_phi, "gamma_phi");
            if (*cfg.J == 0.0) {
                throw ConfigError("field 'J' must be nonzero");
            }
            break;
    }

    const std::size_t wanted = cfg.dim() == 2 ? 1 : 2;
    if (cfg.rho) {
        if (cfg.dim() != 4) {
            throw ConfigError("field 'rho' is only valid for two-qubit models");
        }
        if (auto v = density_violation(*cfg.rho); !v.empty()) {
            throw ConfigError("field 'rho' is not a density matrix: " + v);
        }
    } else if (cfg.bloch.size() != wanted) {
        throw ConfigError(cfg.dim() == 2 ? "model '" + to_string(cfg.model) + "' requires field 'bloch'"
                                         : "model '" + to_string(cfg.model) +
                                               "' requires fields 'bloch_a' and 'bloch_b' (or 'rho')");
    }
    const char* names[] = {"bloch", "bloch_a", "bloch_b"};
    for (std::size_t i = 0; i < cfg.bloch.size(); ++i) {
        const char* key = cfg.dim() == 2 ? names[0] : names[1 + i];
        const Vec3& b = cfg.bloch[i];
        if (!b.allFinite() || b.norm() > 1.0 + kBlochSlack) {
            std::ostringstream os;
            os << "field '" << key << "' = " << vec_text(b) << " has modulus " << b.norm()
               << " > 1 (unphysical Bloch vector)";
            throw ConfigError(os.str());
        }
    }
    if (!cfg.field.allFinite() || !(cfg.field.norm() > 0.0)) {
        throw ConfigError("field 'field' must be a nonzero vector");
    }
    if (!(cfg.integrator.dt > 0.0)) {
        throw ConfigError("field 'dt' must be positive");
    }
    if (!(cfg.integrator.t_max > 0.0)) {
        throw ConfigError("field 't_max' must be positive");
    }
    if (cfg.integrator.sample_stride < 1) {
        throw ConfigError("field 'sample_stride' must be >= 1");
    }
}

ScenarioConfig parse_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("scenario document must be a JSON object");
    }
    for (const auto& item : doc.items()) {
        if (!kKnownKeys.count(item.key())) {
            throw ConfigError("unknown field '" + item.key() + "'");
        }
    }
    for (const char* key : {"name", "model"}) {
        if (!doc.contains(key)) {
            throw ConfigError(std::string("missing required field '") + key + "'");
        }
    }

    ScenarioConfig cfg;
    cfg.name = text(doc, "name");
    if (doc.contains("description")) cfg.description = text(doc, "description");
    cfg.model = parse_model(text(doc, "model"));
    cfg.gamma0 = optional_number(doc, "gamma0");
    cfg.T_env = optional_number(doc, "T_env");
    cfg.g = optional_number(doc, "g");
    cfg.gamma_phi = optional_number(doc, "gamma_phi");
    cfg.J = optional_number(doc, "J");

    if (cfg.dim() == 2) {
        if (doc.contains("bloch_a") || doc.contains("bloch_b") || doc.contains("rho")) {
            throw ConfigError("model '" + to_string(cfg.model) + "' takes a single field 'bloch'");
        }
        if (doc.contains("bloch")) cfg.bloch.push_back(vector3(doc, "bloch"));
    } else {
        if (doc.contains("bloch")) {
            throw ConfigError("model '" + to_string(cfg.model) + "' takes 'bloch_a'/'bloch_b', not 'bloch'");
        }
        if (doc.contains("rho")) {
            if (doc.contains("bloch_a") || doc.contains("bloch_b")) {
                throw ConfigError("give either 'rho' or 'bloch_a'/'bloch_b', not both");
            }
            cfg.rho = parse_rho(doc.at("rho"));
        } else if (doc.contains("bloch_a") && doc.contains("bloch_b")) {
            cfg.bloch.push_back(vector3(doc, "bloch_a"));
            cfg.bloch.push_back(vector3(doc, "bloch_b"));
        }
    }

    if (doc.contains("field")) cfg.field = vector3(doc, "field");
    if (doc.contains("dt")) cfg.integrator.dt = number(doc, "dt");
    if (doc.contains("t_max")) cfg.integrator.t_max = number(doc, "t_max");
    if (doc.contains("sample_stride")) {
        const json& s = doc.at("sample_stride");
        if (!s.is_number_integer()) {
            throw ConfigError("field 'sample_stride' must be an integer");
        }
        cfg.integrator.sample_stride = s.get<int>();
    }
    if (doc.contains("out_dir")) cfg.out_dir = text(doc, "out_dir");
    if (doc.contains("plot")) {
        if (!doc.at("plot").is_boolean()) {
            throw ConfigError("field 'plot' must be a boolean");
        }
        cfg.plot = doc.at("plot").get<bool>();
    }
    if (doc.contains("panels")) {
        const json& p = doc.at("panels");
        if (!p.is_array()) {
            throw ConfigError("field 'panels' must be an array of strings");
        }
        for (const auto& e : p) {
            if (!e.is_string()) {
                throw ConfigError("field 'panels' must be an array of strings");
            }
            cfg.panels.push_back(parse_panel(e.get<std::string>()));
        }
    } else {
        cfg.panels = {Panel::heat_work, Panel::temperature};
    }
    validate(cfg);
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read scenario file '" + path.string() + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

void set_parameter(ScenarioConfig& cfg, const std::string& key, double value) {
    if (key == "gamma0") cfg.gamma0 = value;
    else if (key == "T_env") cfg.T_env = value;
    else if (key == "g") cfg.g = value;
    else if (key == "gamma_phi") cfg.gamma_phi = value;
    else if (key == "J") cfg.J = value;
    else if (key == "dt") cfg.integrator.dt = value;
    else if (key == "t_max") cfg.integrator.t_max = value;
    else if (key == "sample_stride") {
        if (value != std::floor(value)) {
            throw ConfigError("parameter 'sample_stride' must be an integer");
        }
        cfg.integrator.sample_stride = static_cast<int>(value);
    } else {
        throw ConfigError("unknown sweep parameter '" + key + "'");
    }
    validate(cfg);
}

ScenarioConfig resolve_scenario(const std::string& name_or_path) {
    if (auto cfg = find_builtin(name_or_path)) {
        return *cfg;
    }
    if (std::filesystem::exists(name_or_path)) {
        return load_config(name_or_path);
    }
    throw ConfigError("'" + name_or_path + "' is neither a built-in scenario nor a readable config file");
}

} // namespace qbt::scenario
