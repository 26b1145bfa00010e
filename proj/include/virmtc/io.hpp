#pragma once

#include "virmtc/extension.hpp"
#include "virmtc/gluing.hpp"
#include "virmtc/subcat.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <memory>
#include <string>

namespace virmtc {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// "%.12g", the printed form of every float.
std::string fmt12(double x);
/// x rounded to 12 significant digits, for JSON numbers.
double round12(double x);

json rational_json(const Rational& r);
Rational rational_from_json(const json& j);
json cyclo_json(const CycloNumber& x);
CycloNumber cyclo_from_json(const json& j);
json label_json(const KacLabel& x);
KacLabel label_from_json(const json& j);
json model_json(const MinimalModel& M);

/// {"name","members","modular","center","fsexp"}
json subcat_record(const MinimalCategory& C, const Subcategory& S);
json candidate_json(const GluingCandidate& g);

/// Self-contained modular data: p, q, c, simples with weights, S_float, theta, fusion.
json export_modular_data(const MinimalCategory& C);
/// Rebuilds the category and checks the file against it (ValidationError on mismatch).
MinimalCategory import_modular_data(const json& j);

json extension_ring_json(const ExtensionCategory& E);

/// On-disk store of fusion rings and float S matrices keyed by (p, q, schema).
class Cache {
public:
    /// Reads VIRMTC_CACHE: a directory, or "off"; default ~/.cache/virmtc.
    static Cache from_env();
    static Cache disabled() { return Cache(); }
    explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)), enabled_(true) {}

    bool enabled() const { return enabled_; }
    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path file(int p, int q) const;

    /// Loads from disk when possible; otherwise computes and stores.  A corrupt or
    /// stale file is ignored and rewritten.
    std::shared_ptr<const MinimalCategory> category(int p, int q) const;
    /// Drops the in-process copies so the next call goes back to disk.
    static void clear_memory();

private:
    Cache() = default;
    std::filesystem::path dir_;
    bool enabled_ = false;
};

}  // namespace virmtc
