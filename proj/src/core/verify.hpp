#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace charsum {

// Sweep configuration for the identity registry. Random sampling is always
// seeded; a run with a fixed config is bit-reproducible apart from timing.
struct SweepConfig {
    std::vector<std::string> identities; // empty or {"all"}: whole registry
    std::int64_t q_min = 3;
    std::int64_t q_max = 2000;
    std::optional<std::int64_t> q_mod; // keep only q with q % q_mod == q_class
    std::int64_t q_class = 1;
    bool exhaustive = false;
    std::int64_t samples = 50;
    std::uint64_t seed = 42;
    std::optional<double> tolerance; // absolute; default 1e-6 * q per field
    int threads = 0;                 // 0: hardware concurrency
    bool with_timing = true;
    std::string corrupt; // test hook: flips the closed-form side's sign
};

const std::vector<std::string>& identity_names();
bool is_identity_name(const std::string& name);
std::string identity_description(const std::string& name);

struct VerifyOutcome {
    nlohmann::json report;
    std::int64_t tested = 0;
    std::int64_t failed = 0;
};

VerifyOutcome run_verify(const SweepConfig& cfg);

} // namespace charsum
