#pragma once

#include <string>
#include <vector>

#include "seatstorm/bribery.hpp"
#include "seatstorm/cost.hpp"

namespace seatstorm {

/// Simple bribing strategies measured against the optimal solvers. Each
/// non-optimal strategy is a deterministic schedule of vote moves; its
/// budget for a goal is the shortest schedule prefix that achieves it.
enum class StrategyKind { Optimal, Balanced, WeakestRival, StrongestRival };

std::string strategy_name(StrategyKind kind);

struct StrategyOutcome {
    Cost budget;        // smallest prefix budget reaching the goal
    CampaignPlan plan;  // the corresponding moves
};

/// Goal: one additional seat for the distinguished party (constructive) or
/// one seat fewer (destructive), starting from the unbribed allocation.
/// Balanced moves votes proportionally to rival vote counts (largest-
/// remainder rounding, re-proportioned as sources run dry); WeakestRival
/// and StrongestRival drain into/out of the rivals ranked by their original
/// counts. In multi-district elections the schedule is applied inside the
/// district with the cheapest next marginal seat according to the optimal
/// cost table.
StrategyOutcome run_strategy(const Election& election, const Method& method, int star,
                             StrategyKind kind, Direction direction);

struct EffectivenessCell {
    Cost budget;
    double ratio = 0.0;  // budget / optimal budget for the same selection
};

/// One effectiveness table: strategies x {average over parties, strongest
/// party, weakest party}. The average column divides the mean strategy
/// budget over the eligible parties by the mean optimal budget. In the
/// destructive direction, parties without a seat are not eligible and the
/// weakest column uses the weakest party holding a seat.
struct EffectivenessTable {
    std::vector<StrategyKind> strategies;
    std::vector<std::string> columns;
    // cells[strategy][column]
    std::vector<std::vector<EffectivenessCell>> cells;
};

EffectivenessTable effectiveness_ratios(const Election& election, const Method& method,
                                        Direction direction);

}  // namespace seatstorm
