#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "seatstorm/bribery.hpp"
#include "seatstorm/cost.hpp"

namespace seatstorm {

struct InstanceTooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Hard guardrails for exhaustive enumeration. Exceeding any of them is an
/// error, not a slow run.
struct OracleLimits {
    int max_parties = 5;
    Votes max_district_votes = 15;
    int max_districts = 3;
    // second-chance mode
    int max_ranked_parties = 4;
    Votes max_ranked_ballots = 10;
    Votes max_ranked_budget = 4;
};

struct OracleResult {
    bool yes = false;       // some bribery of cost <= K succeeds
    Cost min_budget;        // minimal successful cost within K, unbounded if none
};

/// Which move vectors the enumeration ranges over. All: full from/to
/// matrices. StarOnly: constructive moves all flow into P*, destructive
/// moves all flow out of P* (the restricted family of Lemma 2).
enum class MoveFamily { All, StarOnly };

/// Exhaustive decision for top-choice instances: enumerates every
/// aggregated move vector of total cost <= K across the districts,
/// replays it and evaluates the objective.
OracleResult oracle_decide_top_choice(const BriberyInstance& instance,
                                      MoveFamily family = MoveFamily::All,
                                      const OracleLimits& limits = OracleLimits{});

/// One reachable seat outcome of a district together with the minimal move
/// cost producing it and a count vector realizing it.
struct DistrictOutcome {
    Votes cost;
    std::vector<int> seats;
    std::vector<Votes> counts;
};

/// All distinct seat outcomes of a district reachable with at most `budget`
/// moves, minimal cost each, sorted by cost. This is the enumeration core of
/// oracle_decide_top_choice; the cross-check harness shares it.
std::vector<DistrictOutcome> enumerate_district_outcomes(const District& d, Votes budget,
                                                         const Method& method,
                                                         MoveFamily family = MoveFamily::All,
                                                         int star = 0,
                                                         Direction direction = Direction::Constructive);

struct RankedBriberyInstance {
    RankedElection election;
    Method method = Method::dhondt();
    int star = 0;
    Direction direction = Direction::Constructive;
    Objective objective = Objective::winner();
    Votes budget = 0;
};

/// Exhaustive decision in the second-chance mode: chooses up to K ballots
/// to rewrite and ranges each rewritten ballot over all strict rankings.
/// Single-district only.
OracleResult oracle_decide_second_chance(const RankedBriberyInstance& instance,
                                         const OracleLimits& limits = OracleLimits{});

}  // namespace seatstorm
