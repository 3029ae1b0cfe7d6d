#include "seatstorm/oracle.hpp"

#include <algorithm>
#include <map>

namespace seatstorm {

namespace {

void check_top_choice_limits(const BriberyInstance& instance, const OracleLimits& limits) {
    const auto& e = instance.election;
    if (e.num_parties > limits.max_parties)
        throw InstanceTooLargeError("oracle limit exceeded: " + std::to_string(e.num_parties) +
                                    " parties > " + std::to_string(limits.max_parties));
    if (static_cast<int>(e.districts.size()) > limits.max_districts)
        throw InstanceTooLargeError("oracle limit exceeded: " +
                                    std::to_string(e.districts.size()) + " districts > " +
                                    std::to_string(limits.max_districts));
    for (const auto& d : e.districts) {
        if (d.profile.total() > limits.max_district_votes)
            throw InstanceTooLargeError("oracle limit exceeded: district with " +
                                        std::to_string(d.profile.total()) + " votes > " +
                                        std::to_string(limits.max_district_votes));
    }
    if (instance.budget > e.total_votes())
        throw InstanceTooLargeError("oracle limit exceeded: budget above total votes");
}

SeatAllocation district_seats(const District& d, const std::vector<Votes>& counts,
                              const Method& method) {
    District modified = d;
    modified.profile.counts = counts;
    return evaluate_district(modified, method);
}

// Enumerates final count vectors c' with sum preserved and removal mass
// sum(max(0, c_i - c'_i)) <= budget. With MoveFamily::StarOnly the vector is
// further restricted so that only P* gains (constructive) or only P* loses
// (destructive).
void enumerate_district(const District& d, Votes budget, MoveFamily family, int star,
                        Direction direction, const Method& method,
                        std::map<std::vector<int>, std::pair<Votes, std::vector<Votes>>>& best) {
    const auto& c = d.profile.counts;
    const int m = static_cast<int>(c.size());
    std::vector<Votes> current(c.size(), 0);

    auto consider = [&](Votes moved) {
        SeatAllocation seats = district_seats(d, current, method);
        auto it = best.find(seats.seats);
        if (it == best.end())
            best.emplace(seats.seats, std::make_pair(moved, current));
        else if (moved < it->second.first)
            it->second = std::make_pair(moved, current);
    };

    // DFS over parties; removed = total removal mass so far, delta = running
    // sum difference (must return to zero).
    auto dfs = [&](auto&& self, int i, Votes removed, Votes delta) -> void {
        if (i == m) {
            if (delta == 0) consider(removed);
            return;
        }
        Votes lo = std::max<Votes>(0, c[static_cast<std::size_t>(i)] - (budget - removed));
        Votes hi = c[static_cast<std::size_t>(i)] + budget;
        if (family == MoveFamily::StarOnly) {
            if (direction == Direction::Constructive) {
                // rivals may only lose, P* may only gain
                if (i == star) lo = c[static_cast<std::size_t>(i)];
                else hi = c[static_cast<std::size_t>(i)];
            } else {
                if (i == star) hi = c[static_cast<std::size_t>(i)];
                else lo = c[static_cast<std::size_t>(i)];
            }
        }
        for (Votes v = lo; v <= hi; ++v) {
            Votes r = std::max<Votes>(0, c[static_cast<std::size_t>(i)] - v);
            if (removed + r > budget) continue;
            current[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, removed + r, delta + (v - c[static_cast<std::size_t>(i)]));
        }
    };
    dfs(dfs, 0, 0, 0);
}

}  // namespace

std::vector<DistrictOutcome> enumerate_district_outcomes(const District& d, Votes budget,
                                                         const Method& method, MoveFamily family,
                                                         int star, Direction direction) {
    std::map<std::vector<int>, std::pair<Votes, std::vector<Votes>>> best;
    enumerate_district(d, budget, family, star, direction, method, best);
    std::vector<DistrictOutcome> list;
    list.reserve(best.size());
    for (auto& [seats, payload] : best)
        list.push_back(DistrictOutcome{payload.first, seats, payload.second});
    std::sort(list.begin(), list.end(),
              [](const DistrictOutcome& a, const DistrictOutcome& b) { return a.cost < b.cost; });
    return list;
}

OracleResult oracle_decide_top_choice(const BriberyInstance& instance, MoveFamily family,
                                      const OracleLimits& limits) {
    check_top_choice_limits(instance, limits);
    const auto& e = instance.election;
    const int q = static_cast<int>(e.districts.size());

    std::vector<std::vector<DistrictOutcome>> outcomes(static_cast<std::size_t>(q));
    for (int j = 0; j < q; ++j) {
        outcomes[static_cast<std::size_t>(j)] =
            enumerate_district_outcomes(e.districts[static_cast<std::size_t>(j)], instance.budget,
                                        instance.method, family, instance.star,
                                        instance.direction);
    }

    Cost best_total = Cost::unbounded();
    std::vector<int> totals(static_cast<std::size_t>(e.num_parties), 0);

    auto dfs = [&](auto&& self, int j, Votes spent) -> void {
        if (j == q) {
            SeatAllocation agg;
            agg.seats = totals;
            if (objective_satisfied(agg, instance.star, instance.direction, instance.objective))
                best_total = min(best_total, Cost(spent));
            return;
        }
        for (const auto& option : outcomes[static_cast<std::size_t>(j)]) {
            if (spent + option.cost > instance.budget) break;  // sorted by cost
            if (best_total.within(spent + option.cost)) continue;  // cannot improve
            for (std::size_t i = 0; i < option.seats.size(); ++i)
                totals[i] += option.seats[static_cast<std::size_t>(i)];
            self(self, j + 1, spent + option.cost);
            for (std::size_t i = 0; i < option.seats.size(); ++i)
                totals[i] -= option.seats[static_cast<std::size_t>(i)];
        }
    };
    dfs(dfs, 0, 0);

    OracleResult r;
    r.min_budget = best_total;
    r.yes = best_total.within(instance.budget);
    return r;
}

namespace {

std::vector<std::vector<int>> all_rankings(int m) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

OracleResult oracle_decide_second_chance(const RankedBriberyInstance& instance,
                                         const OracleLimits& limits) {
    const auto& e = instance.election;
    if (e.districts.size() != 1)
        throw InstanceTooLargeError("second-chance oracle handles a single district");
    if (e.num_parties > limits.max_ranked_parties)
        throw InstanceTooLargeError("oracle limit exceeded: " + std::to_string(e.num_parties) +
                                    " parties > " + std::to_string(limits.max_ranked_parties));
    if (e.total_votes() > limits.max_ranked_ballots)
        throw InstanceTooLargeError("oracle limit exceeded: " + std::to_string(e.total_votes()) +
                                    " ballots > " + std::to_string(limits.max_ranked_ballots));
    if (instance.budget > limits.max_ranked_budget)
        throw InstanceTooLargeError("oracle limit exceeded: budget " +
                                    std::to_string(instance.budget) + " > " +
                                    std::to_string(limits.max_ranked_budget));

    const auto& district = e.districts.front();
    const auto rankings = all_rankings(e.num_parties);
    const int types = static_cast<int>(district.profile.ballots.size());
    const int perms = static_cast<int>(rankings.size());

    Cost best = Cost::unbounded();

    auto evaluate_profile = [&](const RankedProfile& profile, Votes moved) {
        SupportAllocation sigma;
        try {
            sigma = second_chance_support(profile, district.threshold);
        } catch (const UndefinedSupportError&) {
            sigma.support.assign(static_cast<std::size_t>(e.num_parties), 0);
        }
        SeatAllocation seats;
        if (sigma.total() == 0) {
            seats.seats.assign(static_cast<std::size_t>(e.num_parties), 0);
        } else {
            ApportionmentProblem p;
            p.sigma = sigma;
            p.threshold = district.threshold;
            p.seats = district.seats;
            seats = apportion(p, instance.method);
        }
        if (objective_satisfied(seats, instance.star, instance.direction, instance.objective))
            best = min(best, Cost(moved));
    };

    // taken[b]: ballots removed from type b; added[p]: rewritten ballots whose
    // new ranking is permutation p. Both respect the same running total.
    std::vector<Votes> taken(static_cast<std::size_t>(types), 0);
    std::vector<Votes> added(static_cast<std::size_t>(perms), 0);

    auto assemble = [&](Votes moved) {
        RankedProfile profile;
        profile.num_parties = e.num_parties;
        for (int b = 0; b < types; ++b) {
            const auto& src = district.profile.ballots[static_cast<std::size_t>(b)];
            Votes kept = src.multiplicity - taken[static_cast<std::size_t>(b)];
            if (kept > 0) profile.ballots.push_back(RankedBallot{src.ranking, kept});
        }
        for (int p = 0; p < perms; ++p) {
            if (added[static_cast<std::size_t>(p)] > 0)
                profile.ballots.push_back(
                    RankedBallot{rankings[static_cast<std::size_t>(p)], added[static_cast<std::size_t>(p)]});
        }
        evaluate_profile(profile, moved);
    };

    auto place = [&](auto&& self, int p, Votes remaining, Votes moved) -> void {
        if (p == perms) {
            if (remaining == 0) assemble(moved);
            return;
        }
        for (Votes a = 0; a <= remaining; ++a) {
            added[static_cast<std::size_t>(p)] = a;
            self(self, p + 1, remaining - a, moved);
        }
        added[static_cast<std::size_t>(p)] = 0;
    };

    auto pick = [&](auto&& self, int b, Votes left) -> void {
        if (b == types) {
            Votes total_taken = instance.budget - left;
            place(place, 0, total_taken, total_taken);
            return;
        }
        Votes cap = std::min<Votes>(left, district.profile.ballots[static_cast<std::size_t>(b)].multiplicity);
        for (Votes t = 0; t <= cap; ++t) {
            taken[static_cast<std::size_t>(b)] = t;
            self(self, b + 1, left - t);
        }
        taken[static_cast<std::size_t>(b)] = 0;
    };
    pick(pick, 0, instance.budget);

    OracleResult r;
    r.min_budget = best;
    r.yes = best.within(instance.budget);
    return r;
}

}  // namespace seatstorm
