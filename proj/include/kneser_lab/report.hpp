#pragma once

#include <string>
#include <utility>

#include <nlohmann/json.hpp>

namespace kneser_lab {

using json = nlohmann::json;

inline constexpr const char* schema_version = "kneser-lab/1";

/// Outcome of a single property or lemma check.
///
/// `hypothesis_met == false` means the check was vacuous for this input; such
/// reports still have `pass == true`. A failing report always carries a witness.
struct VerificationReport {
    std::string check;
    bool hypothesis_met = true;
    bool pass = true;
    json witness = nullptr;
    json details = json::object();

    static VerificationReport vacuous(std::string check, json details = json::object()) {
        return {std::move(check), false, true, nullptr, std::move(details)};
    }

    json to_json() const {
        return json{{"schema", schema_version},
                    {"check", check},
                    {"hypothesis_met", hypothesis_met},
                    {"pass", pass},
                    {"witness", witness},
                    {"details", details}};
    }
};

}  // namespace kneser_lab
