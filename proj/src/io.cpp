#include "virmtc/io.hpp"

#include "virmtc/errors.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <unistd.h>

namespace virmtc {

namespace fs = std::filesystem;

std::string fmt12(double x) {
    if (x == 0) x = 0;  // no "-0"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double round12(double x) { return std::stod(fmt12(x)); }

json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw ValidationError("rational must be a \"num/den\" string");
    return parse_rational(j.get<std::string>());
}

json cyclo_json(const CycloNumber& x) {
    json coeffs = json::object();
    const auto& c = x.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) coeffs[std::to_string(k)] = to_string(c[k]);
    return {{"N", x.modulus()}, {"coeffs", coeffs}};
}

CycloNumber cyclo_from_json(const json& j) {
    try {
        const int N = j.at("N").get<int>();
        if (N < 1) throw ValidationError("cyclotomic modulus must be positive");
        std::vector<std::pair<long long, Rational>> terms;
        for (const auto& [k, v] : j.at("coeffs").items()) terms.emplace_back(std::stoll(k), rational_from_json(v));
        return CycloNumber::from_terms(N, terms);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed cyclotomic number: ") + e.what());
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const ValidationError*>(&e)) throw;
        throw ValidationError(std::string("malformed cyclotomic number: ") + e.what());
    }
}

json label_json(const KacLabel& x) { return x.str(); }

KacLabel label_from_json(const json& j) {
    if (!j.is_string()) throw ValidationError("Kac label must be an \"m,n\" string");
    return KacLabel::parse(j.get<std::string>());
}

json model_json(const MinimalModel& M) { return {{"p", M.p()}, {"q", M.q()}}; }

json subcat_record(const MinimalCategory& C, const Subcategory& S) {
    ModularityReport m = is_modular(C, S.members);
    return {{"name", S.name},
            {"members", labels_of(C, S.members)},
            {"modular", m.modular},
            {"center", labels_of(C, m.center.center)},
            {"fsexp", C.data.fsexp(S.members)}};
}

json candidate_json(const GluingCandidate& g) {
    json bij = json::array(), w = json::array();
    for (const auto& [a, b] : g.labels) bij.push_back({a.str(), b.str()});
    for (const auto& s : g.weight_sums) w.push_back(to_string(s));
    return {{"left", g.left},
            {"right", g.right},
            {"bijection", bij},
            {"weights", w},
            {"integral", g.integral},
            {"twist_inverse", g.twist_inverse}};
}

json export_modular_data(const MinimalCategory& C) {
    const MinimalModel& M = C.model;
    json simples = json::array(), theta = json::array(), S = json::array();
    for (int a = 0; a < M.rank(); ++a) {
        const KacLabel x = M.simples()[a];
        simples.push_back({{"m", x.m}, {"n", x.n}, {"h", to_string(C.data.weight(a))}});
        theta.push_back(to_string(C.data.theta_exponent(a)));
        json row = json::array();
        for (int b = 0; b < M.rank(); ++b) row.push_back(round12(C.data.s_float()(a, b)));
        S.push_back(row);
    }
    json fusion;
    to_json(fusion, C.ring);
    return {{"p", M.p()},         {"q", M.q()},       {"c", to_string(central_charge(M))},
            {"simples", simples}, {"S_float", S},     {"theta", theta},
            {"fusion", fusion}};
}

MinimalCategory import_modular_data(const json& j) {
    try {
        MinimalModel M(j.at("p").get<int>(), j.at("q").get<int>());
        if (M.p() != j.at("p").get<int>()) throw ValidationError("export files store p < q");
        FusionRing ring = j.at("fusion").get<FusionRing>();
        MinimalCategory C(M, std::move(ring), std::nullopt);
        if (rational_from_json(j.at("c")) != central_charge(M)) throw ValidationError("central charge does not match (p,q)");
        const auto& simples = j.at("simples");
        const auto& theta = j.at("theta");
        const auto& S = j.at("S_float");
        if (static_cast<int>(simples.size()) != M.rank() || static_cast<int>(theta.size()) != M.rank() ||
            static_cast<int>(S.size()) != M.rank())
            throw ValidationError("simple-object count does not match (p,q)");
        for (int a = 0; a < M.rank(); ++a) {
            const KacLabel x{simples[a].at("m").get<int>(), simples[a].at("n").get<int>()};
            if (x != M.simples()[a]) throw ValidationError("simple " + x.str() + " out of canonical order");
            if (rational_from_json(simples[a].at("h")) != C.data.weight(a))
                throw ValidationError("weight of " + x.str() + " does not match");
            if (rational_from_json(theta[a]) != C.data.theta_exponent(a))
                throw ValidationError("twist of " + x.str() + " does not match");
            for (int b = 0; b < M.rank(); ++b)
                if (std::abs(S[a].at(b).get<double>() - C.data.s_float()(a, b)) > 1e-10)
                    throw ValidationError("S matrix entry (" + std::to_string(a) + "," + std::to_string(b) +
                                          ") does not match");
        }
        FusionRing fresh = minimal_fusion_ring(M);
        if (!(fresh == C.ring)) throw ValidationError("fusion rules do not match (p,q)");
        return C;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed modular-data file: ") + e.what());
    }
}

json extension_ring_json(const ExtensionCategory& E) {
    json j;
    to_json(j, E.ring());
    j["ambiguity_log"] = E.ambiguity_log();
    return j;
}

Cache Cache::from_env() {
    const char* env = std::getenv("VIRMTC_CACHE");
    if (env && *env) {
        std::string v = env;
        if (v == "off" || v == "0" || v == "none") return Cache();
        return Cache(fs::path(v));
    }
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return Cache(fs::path(xdg) / "virmtc");
    if (const char* home = std::getenv("HOME"); home && *home) return Cache(fs::path(home) / ".cache" / "virmtc");
    return Cache();
}

fs::path Cache::file(int p, int q) const {
    return dir_ / ("v" + std::to_string(kSchemaVersion)) / ("C_" + std::to_string(p) + "_" + std::to_string(q) + ".json");
}

namespace {

std::shared_ptr<const MinimalCategory> load(const fs::path& f, int p, int q) {
    std::ifstream in(f);
    if (!in) return nullptr;
    try {
        json j = json::parse(in);
        if (j.at("schema").get<int>() != kSchemaVersion || j.at("p").get<int>() != p || j.at("q").get<int>() != q)
            return nullptr;
        MinimalModel M(p, q);
        const auto& S = j.at("S_float");
        Eigen::MatrixXd s(M.rank(), M.rank());
        if (static_cast<int>(S.size()) != M.rank()) return nullptr;
        for (int a = 0; a < M.rank(); ++a)
            for (int b = 0; b < M.rank(); ++b) s(a, b) = S.at(a).at(b).get<double>();
        return std::make_shared<const MinimalCategory>(M, j.at("fusion").get<FusionRing>(), s);
    } catch (const std::exception&) {
        return nullptr;
    }
}

void store(const fs::path& f, const MinimalCategory& C) {
    std::error_code ec;
    fs::create_directories(f.parent_path(), ec);
    if (ec) return;
    json S = json::array();
    for (int a = 0; a < C.model.rank(); ++a) {
        json row = json::array();
        for (int b = 0; b < C.model.rank(); ++b) row.push_back(C.data.s_float()(a, b));
        S.push_back(row);
    }
    json fusion;
    to_json(fusion, C.ring);
    json j = {{"schema", kSchemaVersion}, {"p", C.model.p()}, {"q", C.model.q()}, {"fusion", fusion}, {"S_float", S}};
    fs::path tmp = f;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << j.dump() << '\n';
        if (!out) return;
    }
    fs::rename(tmp, f, ec);
    if (ec) fs::remove(tmp, ec);
}

}  // namespace

namespace {

std::mutex memo_mu;
std::map<std::tuple<int, int, std::string>, std::shared_ptr<const MinimalCategory>> memo;

}  // namespace

void Cache::clear_memory() {
    std::lock_guard lock(memo_mu);
    memo.clear();
}

std::shared_ptr<const MinimalCategory> Cache::category(int p, int q) const {
    MinimalModel M(p, q);
    const auto key = std::make_tuple(M.p(), M.q(), enabled_ ? dir_.string() : std::string());
    std::lock_guard lock(memo_mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::shared_ptr<const MinimalCategory> C;
    if (enabled_) C = load(file(M.p(), M.q()), M.p(), M.q());
    if (!C) {
        C = std::make_shared<const MinimalCategory>(M.p(), M.q());
        if (enabled_) store(file(M.p(), M.q()), *C);
    }
    memo[key] = C;
    return C;
}

}  // namespace virmtc
