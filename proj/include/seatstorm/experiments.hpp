#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "seatstorm/alloc.hpp"
#include "seatstorm/bribery.hpp"
#include "seatstorm/cost.hpp"
#include "seatstorm/heuristics.hpp"

namespace seatstorm {

/// Threshold sweep: for each grid threshold (a percentage of the district's
/// ballots, resolved to an absolute value per point) compute how many seats
/// a fixed budget fraction can gain for (or take from) the distinguished
/// party.
struct SweepPoint {
    Rational threshold_percent;
    int seat_delta = 0;
};

struct SweepResult {
    Direction direction = Direction::Constructive;
    Rational budget_fraction;
    std::vector<SweepPoint> points;
};

/// Default grid: 0% to 12% in 0.05% steps.
std::vector<Rational> default_threshold_grid();

SweepResult threshold_sweep(const TopChoiceProfile& profile, int seats, int star,
                            const Rational& budget_fraction, const Method& method,
                            Direction direction,
                            const std::vector<Rational>& grid_percent = default_threshold_grid());

/// Plot data: one "threshold-percent seat-delta" pair per line.
void write_sweep_dat(const SweepResult& result, std::ostream& os);

/// District merging: repeatedly merge two uniformly random districts down to
/// each target count, solve the optimal campaign for the goal, and report
/// the per-seat budget relative to the original districting. Constructive
/// goal: a majority (floor(kappa/2)+1 seats); destructive goal: losing half
/// of the originally held seats.
struct MergePlan {
    std::uint64_t seed = 1;
    std::vector<int> target_district_counts;
    int trials = 3;
};

struct MergeRow {
    int districts = 0;
    std::vector<Votes> trial_budgets;
    double average_budget = 0.0;
    double budget_per_seat = 0.0;
    double ratio_to_original = 0.0;
};

struct MergeReport {
    Direction direction = Direction::Constructive;
    int goal_seats = 0;
    int seat_change = 0;  // seats gained (constructive) or lost (destructive)
    std::vector<MergeRow> rows;
};

MergeReport district_merge_experiment(const Election& election, const ThresholdSpec& threshold,
                                      const Method& method, int star, Direction direction,
                                      const MergePlan& plan);

/// The merged election of one trial, exposed for reproducibility tests.
Election merged_election(const Election& election, const ThresholdSpec& threshold,
                         std::uint64_t seed, int trial, int target_districts);

/// Per-country heuristic effectiveness matrix (strategy x party selection).
struct CountrySpec {
    std::string name;
    Election election;
    Method method = Method::dhondt();
};

struct EffectivenessReport {
    std::vector<std::string> countries;
    std::vector<EffectivenessTable> tables;
};

EffectivenessReport effectiveness_experiment(const std::vector<CountrySpec>& countries,
                                             Direction direction);

void write_effectiveness_csv(const EffectivenessReport& report, std::ostream& os);
void write_merge_csv(const MergeReport& report, std::ostream& os);

}  // namespace seatstorm
