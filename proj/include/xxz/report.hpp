#pragma once
// Check scheduling and reporting: named residual checks grouped into suites,
// a worker pool with deterministic output order, and JSON-lines emission.

#include "xxz/sov.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace xxz {

struct RunConfig {
    int N = 2;
    std::uint64_t seed = 1;
    double tol = 0;          // 0: use default_tol(N)
    int workers = 0;         // 0: XXZ_MABA_WORKERS env var, else 1
    std::vector<std::string> suites;
    std::string config_path; // optional JSON with explicit parameters
    std::string out_path;    // optional JSON-lines destination
};

struct CheckRecord {
    std::string name;
    std::string anchor; // which structural identity the check exercises
    int N = 0;
    std::uint64_t seed = 0;
    double residual = 0;
    double tolerance = 0;
    bool pass = false;
    double ms = 0;
};

double default_tol(int N);

// names of all known suites, in canonical order
const std::vector<std::string>& suite_names();

// build the model instance for a run: from the config file when given,
// otherwise a generic random draw
ModelInstance instance_for(const RunConfig& cfg);

// run the requested suites; records come back in a deterministic order
// independent of the worker count.  Throws std::invalid_argument on an
// unknown suite name.
std::vector<CheckRecord> run_suites(const RunConfig& cfg, const ModelInstance& inst);

int resolve_workers(const RunConfig& cfg);

void write_jsonl(const std::vector<CheckRecord>& recs, const std::string& path);
void print_summary(const std::vector<CheckRecord>& recs, std::ostream& os);
bool all_pass(const std::vector<CheckRecord>& recs);

// parse a model instance from a JSON file ({"q": [re,im], "v": [[re,im],...],
// boundary parameter names as [re,im] pairs, "N" implied by v)
ModelInstance instance_from_json(const std::string& path);

} // namespace xxz
