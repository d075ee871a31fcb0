#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "domreconf/families.hpp"
#include "domreconf/solution_space.hpp"

namespace domreconf {

enum class Verdict { pass, fail, skipped };

const char* to_string(Verdict verdict);

// Integer parameters of one claim instance, e.g. {"d", 2}, {"b", 3}.
using ClaimParams = std::map<std::string, std::int64_t>;

struct ClaimReport {
    std::string claim_id;
    ClaimParams params;
    Verdict verdict = Verdict::skipped;
    // Computed numbers in the order they were recorded.
    std::vector<std::pair<std::string, std::string>> evidence;
    // First failed sub-assertion, or why the claim was skipped.
    std::string detail;
    double runtime = 0.0; // seconds

    const std::string* find(const std::string& key) const;
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct VerifyOptions {
    SearchLimits limits;
    std::uint64_t seed = kDefaultSeed;
    // Applied to every generated ladder graph before a check runs; lets tests
    // plant a construction bug and watch the checks catch it.
    std::function<void(LadderGraph&)> ladder_mutation;
};

// Known claim ids, in report order.
const std::vector<std::string>& claim_ids();

// Runs one claim. Missing parameters take their defaults (the first instance
// listed by run_all). Throws PreconditionError on an unknown id or a
// parameter out of range; resource caps yield Verdict::skipped.
ClaimReport run_claim(const std::string& claim_id, const ClaimParams& params = {},
                      const VerifyOptions& options = {});

enum class Level { quick, full };

struct ClaimInstance {
    std::string claim_id;
    ClaimParams params;
};

// quick leaves out thm5 at n = 2, fact9 and lem3.
std::vector<ClaimInstance> claim_plan(Level level);

// Runs the plan (optionally restricted to `only`) on up to `threads` workers.
// Reports come back in plan order whatever the worker count.
std::vector<ClaimReport> run_all(Level level, const VerifyOptions& options = {}, unsigned threads = 1,
                                 const std::vector<std::string>& only = {});

// 0 when every report passed, 1 when any failed, 3 when none failed but some were skipped.
int overall_status(const std::vector<ClaimReport>& reports);

std::string describe_params(const ClaimParams& params);

// Fixed-width table, one row per report.
std::string format_table(const std::vector<ClaimReport>& reports, bool with_runtime = false);

// JSON array, one object per report. Runtime is omitted unless requested so
// that reports stay byte-identical across runs.
std::string format_json(const std::vector<ClaimReport>& reports, bool with_runtime = false);

} // namespace domreconf
