#pragma once

#include "seatstorm/bribery.hpp"
#include "seatstorm/cost.hpp"
#include "seatstorm/oracle.hpp"

namespace seatstorm {

/// Per-district bribery price list: for district j and seat count s, the
/// minimal number of vote moves so that P* gets at least s seats there
/// (constructive) or at most s seats (destructive), with the witness moves.
/// Rows are dominance-pruned: an entry survives only if no entry with a
/// weakly better seat count is as cheap.
struct CostTableEntry {
    int seats = 0;
    Cost cost;
    CampaignPlan plan;  // district-local moves (district index set to 0)
};

struct CostTable {
    Direction direction = Direction::Constructive;
    std::vector<std::vector<CostTableEntry>> districts;
};

CostTable build_cost_table(const Election& election, const Method& method, int star,
                           Direction direction);

/// Constructive multi-district seat bribery: group-knapsack DP over the cost
/// table, one seat target per district, total >= ell within budget.
Decision mab(const Election& election, const Method& method, int star, int ell, Votes budget);

/// Destructive counterpart: total <= ell.
Decision dmab(const Election& election, const Method& method, int star, int ell, Votes budget);

/// Destructive multi-district winner bribery under FPTP: per beneficiary
/// rival, a knapsack over districts (flip a district to the rival, or flip a
/// district P* holds to any third party).
Decision fptp_dmawb(const Election& election, int star, Votes budget);

struct MultiSearchLimits {
    int max_districts = 3;
    int max_parties = 4;
    Votes max_district_votes = 8;
    Votes max_budget = 6;
};

/// Exhaustive desk-scale decider for the NP-hard multi-district winner
/// problems: ranges over all per-district move vectors within the budget.
Decision winner_multi_search(const Election& election, const Method& method, int star,
                             Direction direction, Votes budget,
                             const MultiSearchLimits& limits = MultiSearchLimits{});

/// Dispatch: single-district instances go to solve_single; multi-district
/// seats objectives to mab/dmab; FPTP destructive winner to fptp_dmawb; the
/// remaining winner variants to the guardrailed exhaustive search.
Decision solve(const BriberyInstance& instance);

struct MultiBudgetResult {
    Cost budget;
    CampaignPlan plan;
};

/// Minimal YES budget for any instance solve() accepts.
MultiBudgetResult min_budget(const BriberyInstance& instance_without_budget);

/// Binary search over ell on top of solve(), any district count.
int max_seat_delta(const Election& election, const Method& method, int star,
                   Direction direction, Votes budget);

}  // namespace seatstorm
