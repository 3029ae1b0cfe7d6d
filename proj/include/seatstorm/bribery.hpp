#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seatstorm/alloc.hpp"
#include "seatstorm/core.hpp"

namespace seatstorm {

enum class Direction { Constructive, Destructive };

/// Seats(ell): at least ell seats (constructive) / at most ell seats
/// (destructive). Winner: strictly more seats than every rival
/// (constructive) / some rival strictly ahead (destructive).
struct Objective {
    enum class Kind { Seats, Winner };

    static Objective seats(int ell) { return Objective{Kind::Seats, ell}; }
    static Objective winner() { return Objective{Kind::Winner, 0}; }

    Kind kind = Kind::Seats;
    int ell = 0;
};

/// One election district in top-choice mode, with its absolute threshold
/// already resolved.
struct District {
    TopChoiceProfile profile;
    Votes threshold = 0;
    int seats = 1;
};

/// Shared party universe across districts; party i+1 is tie-break rank i+1.
struct Election {
    int num_parties = 0;
    std::vector<District> districts;

    Votes total_votes() const {
        Votes n = 0;
        for (const auto& d : districts) n += d.profile.total();
        return n;
    }
    int total_seats() const {
        int k = 0;
        for (const auto& d : districts) k += d.seats;
        return k;
    }

    static Election single(TopChoiceProfile profile, Votes threshold, int seats) {
        Election e;
        e.num_parties = profile.parties();
        e.districts.push_back(District{std::move(profile), threshold, seats});
        return e;
    }
};

/// Ranked-ballot counterpart for the second-chance mode.
struct RankedDistrict {
    RankedProfile profile;
    Votes threshold = 0;
    int seats = 1;
};

struct RankedElection {
    int num_parties = 0;
    std::vector<RankedDistrict> districts;

    Votes total_votes() const {
        Votes n = 0;
        for (const auto& d : districts) n += d.profile.total();
        return n;
    }
};

struct BriberyInstance {
    Election election;
    Method method = Method::dhondt();
    int star = 0;  // 0-based distinguished party
    Direction direction = Direction::Constructive;
    Objective objective = Objective::winner();
    Votes budget = 0;  // K
};

/// One aggregated vote move inside a district.
struct Move {
    int district = 0;
    int from = 0;  // 0-based party
    int to = 0;
    Votes count = 0;
};

/// Witness for a YES decision: replaying the moves yields an outcome that
/// satisfies the objective, at total cost <= K.
struct CampaignPlan {
    std::vector<Move> moves;

    Votes cost() const {
        Votes c = 0;
        for (const auto& m : moves) c += m.count;
        return c;
    }
};

struct Decision {
    bool yes = false;
    CampaignPlan plan;  // meaningful only when yes
};

/// Seat totals over all districts. A district in which no party reaches the
/// threshold has an undefined allocation; for bribery outcomes it counts as
/// zero seats for everyone, which matches how the deciders treat parties
/// pushed below the threshold.
SeatAllocation evaluate_election(const Election& election, const Method& method);

/// Per-district allocation with the same zero convention.
SeatAllocation evaluate_district(const District& district, const Method& method);

bool objective_satisfied(const SeatAllocation& totals, int star, Direction direction,
                         const Objective& objective);

/// Applies the moves, validating that no party count goes negative.
Election apply_plan(const Election& election, const CampaignPlan& plan);

/// Full witness check: cost within budget and objective satisfied after replay.
bool plan_certifies(const BriberyInstance& instance, const CampaignPlan& plan);

}  // namespace seatstorm
