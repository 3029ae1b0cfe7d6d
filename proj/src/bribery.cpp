#include "seatstorm/bribery.hpp"

#include <stdexcept>

namespace seatstorm {

SeatAllocation evaluate_district(const District& district, const Method& method) {
    ApportionmentProblem p;
    p.sigma = top_choice_support(district.profile, district.threshold);
    p.threshold = district.threshold;
    p.seats = district.seats;
    if (p.sigma.total() == 0) {
        SeatAllocation zero;
        zero.seats.assign(district.profile.counts.size(), 0);
        return zero;
    }
    return apportion(p, method);
}

SeatAllocation evaluate_election(const Election& election, const Method& method) {
    std::vector<SeatAllocation> per_district;
    per_district.reserve(election.districts.size());
    for (const auto& d : election.districts) per_district.push_back(evaluate_district(d, method));
    SeatAllocation total = aggregate_districts(per_district);
    total.seats.resize(static_cast<std::size_t>(election.num_parties), 0);
    return total;
}

bool objective_satisfied(const SeatAllocation& totals, int star, Direction direction,
                         const Objective& objective) {
    const int own = totals.seats[static_cast<std::size_t>(star)];
    if (objective.kind == Objective::Kind::Seats) {
        return direction == Direction::Constructive ? own >= objective.ell : own <= objective.ell;
    }
    if (direction == Direction::Constructive) {
        for (int i = 0; i < totals.parties(); ++i)
            if (i != star && totals.seats[static_cast<std::size_t>(i)] >= own) return false;
        return true;
    }
    for (int i = 0; i < totals.parties(); ++i)
        if (i != star && totals.seats[static_cast<std::size_t>(i)] > own) return true;
    return false;
}

Election apply_plan(const Election& election, const CampaignPlan& plan) {
    Election bribed = election;
    for (const auto& m : plan.moves) {
        if (m.count < 0) throw std::invalid_argument("negative move count");
        if (m.count == 0) continue;
        if (m.district < 0 || m.district >= static_cast<int>(bribed.districts.size()))
            throw std::invalid_argument("move references unknown district");
        auto& counts = bribed.districts[static_cast<std::size_t>(m.district)].profile.counts;
        if (m.from < 0 || m.to < 0 || m.from >= static_cast<int>(counts.size()) ||
            m.to >= static_cast<int>(counts.size()))
            throw std::invalid_argument("move references unknown party");
        counts[static_cast<std::size_t>(m.from)] -= m.count;
        counts[static_cast<std::size_t>(m.to)] += m.count;
        if (counts[static_cast<std::size_t>(m.from)] < 0)
            throw std::invalid_argument("move takes more votes than available");
    }
    return bribed;
}

bool plan_certifies(const BriberyInstance& instance, const CampaignPlan& plan) {
    if (plan.cost() > instance.budget) return false;
    Election bribed = apply_plan(instance.election, plan);
    SeatAllocation totals = evaluate_election(bribed, instance.method);
    return objective_satisfied(totals, instance.star, instance.direction, instance.objective);
}

}  // namespace seatstorm
