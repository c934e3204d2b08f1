#include "vulnfactory/json_io.hpp"

#include <limits>

#include <json.hpp>

#include "vulnfactory/errors.hpp"

namespace vulnfactory::json {
namespace {

using nlohmann::ordered_json;

ordered_json big(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    if (v > 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
        return static_cast<std::uint64_t>(v);
    }
    return to_decimal(v);
}

ordered_json parse(std::string_view text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

int parse_cwe_key(const std::string& key) {
    if (!is_decimal(key) || key.size() > 9) {
        throw InputError("count key '" + key + "' is not a CWE id");
    }
    return std::stoi(key);
}

}  // namespace

std::string census(const CensusReport& r) {
    ordered_json j;
    j["k"] = big(r.k);
    j["base"] = big(r.base_count);
    j["generated"] = big(r.generated);
    j["total"] = big(r.total);
    return j.dump();
}

std::string verdict(const Verdict& v) {
    ordered_json j;
    j["bound"] = big(v.bound);
    j["violated"] = v.violated;
    j["trace_length"] = v.trace.length();
    if (!v.trace.states.empty()) {
        j["final_state"] = {{"k", big(v.trace.final_state().k)}, {"count", big(v.trace.final_state().count)}};
    }
    return j.dump();
}

std::string scan_report(const ScanReport& r) {
    ordered_json j;
    j["manifest_n"] = big(r.manifest_n);
    j["findings"] = ordered_json::array();
    for (const ScanFinding& f : r.findings) {
        ordered_json item;
        item["cwe"] = f.cwe.id;
        item["n"] = f.recovered_n ? big(*f.recovered_n) : ordered_json(nullptr);
        item["line"] = f.line;
        j["findings"].push_back(std::move(item));
    }
    j["consistent"] = r.consistent;
    return j.dump();
}

std::string emission(const EmissionSummary& e) {
    ordered_json j;
    j["n"] = big(e.n);
    j["description_hash"] = e.description_hash;
    j["description_len"] = e.description_len;
    return j.dump();
}

std::string abundance(const AbundanceTable& t) {
    ordered_json j;
    j["label"] = t.snapshot_label;
    j["entries"] = ordered_json::object();
    for (const auto& [cwe, fraction] : t.entries) {
        j["entries"][std::to_string(cwe)] = fraction;
    }
    return j.dump();
}

CountsDocument parse_counts(std::string_view text) {
    const ordered_json doc = parse(text);
    if (!doc.is_object() || !doc.contains("counts") || !doc["counts"].is_object()) {
        throw InputError("expected an object with a \"counts\" object");
    }
    CountsDocument out;
    for (const auto& [key, value] : doc["counts"].items()) {
        if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
            throw InputError("count for '" + key + "' must be a non-negative integer");
        }
        out.counts[parse_cwe_key(key)] = value.get<std::uint64_t>();
    }
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) {
            throw InputError("\"label\" must be a string");
        }
        out.label = doc["label"].get<std::string>();
    }
    return out;
}

DeploymentProfile parse_shares(std::string_view text) {
    const ordered_json doc = parse(text);
    if (!doc.is_object() || !doc.contains("shares") || !doc["shares"].is_object()) {
        throw InputError("expected an object with a \"shares\" object");
    }
    DeploymentProfile profile;
    for (const auto& [key, value] : doc["shares"].items()) {
        if (!value.is_number()) {
            throw InputError("share for '" + key + "' must be a number");
        }
        profile.shares[key] = value.get<double>();
    }
    return profile;
}

std::string error(std::string_view code, std::string_view message) {
    ordered_json j;
    j["error"] = code;
    j["message"] = message;
    return j.dump();
}

}  // namespace vulnfactory::json
