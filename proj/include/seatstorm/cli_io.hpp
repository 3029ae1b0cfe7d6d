#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seatstorm/bribery.hpp"
#include "seatstorm/experiments.hpp"

namespace seatstorm {

/// Input problems (bad files, bad flags, inconsistent data). The CLI maps
/// these to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An election as loaded from disk: the party list in tie-break order plus
/// per-district top-choice counts, and optionally ranked ballots.
struct ElectionData {
    std::vector<Party> parties;
    std::vector<std::string> district_ids;  // in order of first appearance
    Election election;                      // thresholds filled in by the caller
    std::optional<RankedElection> ranked;
};

struct LoadOptions {
    ThresholdSpec threshold = ThresholdSpec::absolute(0);
    // seats per district id; districts missing from the map use default_seats
    std::map<std::string, int> seats_by_district;
    int default_seats = 1;
    // explicit tie-break order (party names); default: file order of first appearance
    std::vector<std::string> tie_break;
};

/// Loads "district_id,party,votes" rows (header required). Duplicate
/// (district, party) rows accumulate. Thresholds are resolved per district
/// from the spec in the options.
ElectionData load_election(const std::string& csv_path, const LoadOptions& options);

/// Loads "district_id,multiplicity,ranking" rows where ranking is a
/// '>'-separated list of party names forming a full permutation.
RankedElection load_ranked_ballots(const std::string& csv_path, const ElectionData& data,
                                   const LoadOptions& options);

/// Inverse of load_election: writing and reloading yields the same value.
void write_election_csv(const ElectionData& data, std::ostream& os);

/// Declarative run configuration (JSON document). Unknown keys are
/// rejected; command-line flags override file values.
struct RunConfig {
    std::optional<std::string> method;
    std::vector<std::string> divisors;
    std::optional<std::string> threshold;  // "abs:N" or a fraction/decimal
    std::map<std::string, int> seats_by_district;
    std::optional<int> default_seats;
    std::vector<std::string> tie_break;
    std::optional<std::string> mode;
    std::optional<std::string> objective;
    std::optional<std::string> direction;
    std::optional<std::string> star;
    std::optional<int> target_seats;
    std::optional<Votes> budget;
    std::optional<std::string> budget_fraction;
    std::optional<std::uint64_t> seed;
    std::vector<int> merge_targets;
    std::optional<int> merge_trials;
};

RunConfig parse_config_file(const std::string& path);

/// Entry point behind the binary: parses argv, runs one subcommand.
/// Exit status: 0 success, 1 NO decision under --assert-yes, 2 input error.
int cli_dispatch(const std::vector<std::string>& args);

}  // namespace seatstorm
