#include "mimcool/params.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "mimcool/errors.hpp"

namespace mim {

DerivedQuantities validate(const SystemParams& p) {
    if (p.kappa1 <= 0.0) throw NonPositiveRate("kappa1 must be > 0");
    if (p.kappa2 <= 0.0) throw NonPositiveRate("kappa2 must be > 0");
    if (p.omega_m <= 0.0) throw NonPositiveRate("omega_m must be > 0");
    if (p.gamma_m <= 0.0) throw NonPositiveRate("gamma_m must be > 0");
    if (p.gm < 0.0) throw NonPositiveRate("gm must be >= 0");
    if (p.delta1 == 0.0) throw ZeroDetuning("delta1 must be nonzero");
    if (p.delta2 == 0.0) throw ZeroDetuning("delta2 must be nonzero");
    if (p.E1 < 0.0) throw NegativeAmplitude("E1 must be >= 0");
    if (p.E2 < 0.0) throw NegativeAmplitude("E2 must be >= 0");
    if (p.J < 0.0) throw NegativeAmplitude("J must be >= 0");
    if (p.n_th < 0.0) throw NegativeAmplitude("n_th must be >= 0");

    DerivedQuantities d;
    d.Gamma_m = p.gamma_m / p.kappa1;
    d.J_E1 = (p.gm / p.omega_m) * (p.E1 / p.kappa1);
    d.J_E2 = (p.gm / p.omega_m) * (p.E2 / p.kappa1);
    d.cavity_freq_gap = p.delta2 - p.delta1;
    d.weak_coupling_warning = p.gm / p.omega_m > 1e-2;
    return d;
}

SystemParams swap12(const SystemParams& p) {
    SystemParams q = p;
    std::swap(q.kappa1, q.kappa2);
    std::swap(q.E1, q.E2);
    std::swap(q.delta1, q.delta2);
    return q;
}

namespace {

const std::set<std::string> kKeys = {
    "kappa1", "kappa2", "gm",      "omega_m", "gamma_m", "delta1",
    "delta2", "E1",     "E2",      "J",       "n_th"};

}  // namespace

SystemParams parse_config(std::istream& in) {
    std::map<std::string, double> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected key=value");
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        auto strip = [](std::string s) {
            auto a = s.find_first_not_of(" \t");
            auto b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string()
                                          : s.substr(a, b - a + 1);
        };
        key = strip(key);
        val = strip(val);
        if (!kKeys.count(key))
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": unknown key '" + key + "'");
        if (kv.count(key))
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": duplicate key '" + key + "'");
        size_t pos = 0;
        double x;
        try {
            x = std::stod(val, &pos);
        } catch (const std::exception&) {
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": bad number '" + val + "'");
        }
        if (pos != val.size())
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": bad number '" + val + "'");
        kv[key] = x;
    }
    for (const auto& k : kKeys)
        if (!kv.count(k)) throw ConfigError("config: missing key '" + k + "'");

    SystemParams p;
    p.kappa1 = kv["kappa1"];
    p.kappa2 = kv["kappa2"];
    p.gm = kv["gm"];
    p.omega_m = kv["omega_m"];
    p.gamma_m = kv["gamma_m"];
    p.delta1 = kv["delta1"];
    p.delta2 = kv["delta2"];
    p.E1 = kv["E1"];
    p.E2 = kv["E2"];
    p.J = kv["J"];
    p.n_th = kv["n_th"];
    validate(p);
    return p;
}

SystemParams load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in);
}

}  // namespace mim
