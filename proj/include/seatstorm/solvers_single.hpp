#pragma once

#include "seatstorm/bribery.hpp"
#include "seatstorm/cost.hpp"

namespace seatstorm {

/// Number of seats a party with support y takes before the pivot entry
/// pivot_support/d_pivot_pos of the distinguished party, for a divisor
/// method. "Before" uses strict comparison unless the party precedes the
/// distinguished party in tie-break order (favorable), where ties count.
int phi_constructive(Votes y, Votes pivot_support, int pivot_pos, Votes tau,
                     const DivisorSequence& seq, int kappa, bool favorable);

// Single-district deciders. Each takes the district in top-choice mode with
// an absolute threshold. All of them return a replayable witness on YES.
Decision fptp_ab(const District& d, int star, Votes budget);
Decision fptp_dab(const District& d, int star, const Objective& objective, Votes budget);
Decision divisor_ab(const District& d, const DivisorSequence& seq, int star, int ell,
                    Votes budget);
Decision divisor_dab(const District& d, const DivisorSequence& seq, int star, int ell,
                     Votes budget);
Decision lrm_ab(const District& d, int star, int ell, Votes budget);
Decision lrm_dab(const District& d, int star, int ell, Votes budget);
Decision winner_ab(const District& d, const Method& method, int star, Votes budget);
Decision winner_dab_divisor(const District& d, const DivisorSequence& seq, int star,
                            Votes budget);
Decision winner_dab_lrm(const District& d, int star, Votes budget);

/// Dispatch to the matching decider. The instance must be single-district.
Decision solve_single(const BriberyInstance& instance);

struct BudgetSearchResult {
    Cost budget;        // minimal K yielding YES, unbounded when infeasible
    CampaignPlan plan;  // witness at that K
};

/// Minimal budget by binary search over K (decisions are monotone in K).
BudgetSearchResult min_budget_single(const BriberyInstance& instance_without_budget);

/// Maximum seats gainable (constructive) or removable (destructive) for the
/// distinguished party with the given budget, by binary search over ell.
int max_seat_delta_single(const Election& election, const Method& method, int star,
                          Direction direction, Votes budget);

}  // namespace seatstorm
