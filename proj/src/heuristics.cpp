#include "seatstorm/heuristics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "seatstorm/solvers_multi.hpp"
#include "seatstorm/solvers_single.hpp"

namespace seatstorm {

std::string strategy_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::Optimal: return "optimal";
        case StrategyKind::Balanced: return "balanced";
        case StrategyKind::WeakestRival: return "weakest-rival";
        case StrategyKind::StrongestRival: return "strongest-rival";
    }
    return "?";
}

namespace {

// Largest-remainder rounding of b proportional shares over weights, capped
// by per-source availability and re-proportioned until b is placed.
std::vector<Votes> proportional_amounts(const std::vector<Votes>& weights,
                                        const std::vector<Votes>& available, Votes b) {
    const std::size_t n = weights.size();
    std::vector<Votes> out(n, 0);
    Votes left = b;
    while (left > 0) {
        Votes total = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (out[i] < available[i]) total += weights[i];
        if (total == 0) {
            // weights exhausted; fall back to any remaining capacity
            for (std::size_t i = 0; i < n && left > 0; ++i) {
                Votes take = std::min(left, available[i] - out[i]);
                out[i] += take;
                left -= take;
            }
            break;
        }
        // shares of `left` proportional to weights, floor plus largest
        // remainders, ties to the lower index
        std::vector<Votes> add(n, 0);
        std::vector<std::pair<__int128, std::size_t>> rems;
        Votes assigned = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (out[i] >= available[i]) continue;
            __int128 num = static_cast<__int128>(left) * weights[i];
            add[i] = static_cast<Votes>(num / total);
            rems.push_back({num % total, i});
            assigned += add[i];
        }
        std::stable_sort(rems.begin(), rems.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        for (auto& [rem, i] : rems) {
            if (assigned >= left) break;
            add[i] += 1;
            assigned += 1;
        }
        bool progressed = false;
        for (std::size_t i = 0; i < n; ++i) {
            Votes take = std::min(add[i], available[i] - out[i]);
            if (take > 0) progressed = true;
            out[i] += take;
            left -= take;
        }
        if (!progressed) break;  // no capacity anywhere
    }
    return out;
}

// Deterministic move schedule of one strategy inside one district: the moves
// performed when spending exactly b votes.
std::vector<Move> schedule_moves(const District& d, int district_index, int star,
                                 StrategyKind kind, Direction direction, Votes b) {
    const auto& c = d.profile.counts;
    const int m = static_cast<int>(c.size());
    std::vector<Move> moves;

    std::vector<int> rivals;
    for (int i = 0; i < m; ++i)
        if (i != star) rivals.push_back(i);

    if (kind == StrategyKind::Balanced) {
        std::vector<Votes> weights, available;
        for (int r : rivals) {
            weights.push_back(c[static_cast<std::size_t>(r)]);
            available.push_back(direction == Direction::Constructive
                                    ? c[static_cast<std::size_t>(r)]
                                    : b);  // receivers are uncapped
        }
        std::vector<Votes> amounts = proportional_amounts(weights, available, b);
        for (std::size_t i = 0; i < rivals.size(); ++i) {
            if (amounts[i] <= 0) continue;
            int r = rivals[static_cast<std::size_t>(i)];
            if (direction == Direction::Constructive)
                moves.push_back(Move{district_index, r, star, amounts[i]});
            else
                moves.push_back(Move{district_index, star, r, amounts[i]});
        }
        return moves;
    }

    // rank rivals by original vote count; "weakest" prefers the lower count
    std::stable_sort(rivals.begin(), rivals.end(), [&](int a, int bb) {
        if (c[static_cast<std::size_t>(a)] != c[static_cast<std::size_t>(bb)])
            return kind == StrategyKind::WeakestRival
                       ? c[static_cast<std::size_t>(a)] < c[static_cast<std::size_t>(bb)]
                       : c[static_cast<std::size_t>(a)] > c[static_cast<std::size_t>(bb)];
        return a < bb;
    });

    if (direction == Direction::Constructive) {
        Votes left = b;
        for (int r : rivals) {
            if (left <= 0) break;
            Votes take = std::min(left, c[static_cast<std::size_t>(r)]);
            if (take > 0) moves.push_back(Move{district_index, r, star, take});
            left -= take;
        }
    } else if (!rivals.empty()) {
        moves.push_back(Move{district_index, star, rivals.front(), b});
    }
    return moves;
}

Votes schedule_capacity(const District& d, int star, Direction direction) {
    if (direction == Direction::Destructive)
        return d.profile.counts[static_cast<std::size_t>(star)];
    return d.profile.total() - d.profile.counts[static_cast<std::size_t>(star)];
}

// Smallest prefix budget of the schedule meeting the goal inside the chosen
// district, with the other districts untouched.
StrategyOutcome search_schedule(const Election& election, const Method& method, int star,
                                StrategyKind kind, Direction direction, int district,
                                int goal_seats) {
    const District& d = election.districts[static_cast<std::size_t>(district)];
    const Votes cap = schedule_capacity(d, star, direction);

    auto total_star_seats = [&](Votes b) {
        CampaignPlan plan;
        plan.moves = schedule_moves(d, district, star, kind, direction, b);
        Election bribed = apply_plan(election, plan);
        return evaluate_election(bribed, method).seats[static_cast<std::size_t>(star)];
    };
    auto reached = [&](Votes b) {
        int s = total_star_seats(b);
        return direction == Direction::Constructive ? s >= goal_seats : s <= goal_seats;
    };

    if (!reached(cap)) return StrategyOutcome{Cost::unbounded(), {}};

    Votes best;
    if (cap <= 4096) {
        Votes b = 0;
        while (!reached(b)) ++b;
        best = b;
    } else {
        // monotone search; spot checks below the boundary keep rounding
        // artifacts of the balanced schedule from overshooting
        Votes lo = 0, hi = cap;
        while (lo < hi) {
            Votes mid = lo + (hi - lo) / 2;
            if (reached(mid)) hi = mid;
            else lo = mid + 1;
        }
        best = lo;
        for (Votes probe = std::max<Votes>(0, best - 8); probe < best; ++probe) {
            if (reached(probe)) {
                best = probe;
                break;
            }
        }
    }
    StrategyOutcome out;
    out.budget = Cost(best);
    out.plan.moves = schedule_moves(d, district, star, kind, direction, best);
    return out;
}

}  // namespace

StrategyOutcome run_strategy(const Election& election, const Method& method, int star,
                             StrategyKind kind, Direction direction) {
    const SeatAllocation now = evaluate_election(election, method);
    const int current = now.seats[static_cast<std::size_t>(star)];
    const int goal = direction == Direction::Constructive ? current + 1 : current - 1;
    if (direction == Direction::Constructive && goal > election.total_seats())
        return StrategyOutcome{Cost::unbounded(), {}};
    if (direction == Direction::Destructive && current < 1)
        throw std::invalid_argument("destructive goal needs a party holding a seat");

    if (kind == StrategyKind::Optimal) {
        BriberyInstance inst;
        inst.election = election;
        inst.method = method;
        inst.star = star;
        inst.direction = direction;
        inst.objective = Objective::seats(goal);
        MultiBudgetResult r = min_budget(inst);
        return StrategyOutcome{r.budget, r.plan};
    }

    if (election.districts.size() == 1)
        return search_schedule(election, method, star, kind, direction, 0, goal);

    // pick the district with the cheapest next marginal seat for P*
    // according to the optimal per-district price list
    CostTable table = build_cost_table(election, method, star, direction);
    int best_district = -1;
    Cost best_marginal = Cost::unbounded();
    for (int j = 0; j < static_cast<int>(election.districts.size()); ++j) {
        const District& d = election.districts[static_cast<std::size_t>(j)];
        const int local =
            evaluate_district(d, method).seats[static_cast<std::size_t>(star)];
        const int target = direction == Direction::Constructive ? local + 1 : local - 1;
        if (target < 0 || target > d.seats) continue;
        Cost marginal = Cost::unbounded();
        for (const auto& entry : table.districts[static_cast<std::size_t>(j)]) {
            const bool covers = direction == Direction::Constructive ? entry.seats >= target
                                                                     : entry.seats <= target;
            if (covers) marginal = min(marginal, entry.cost);
        }
        if (marginal < best_marginal) {
            best_marginal = marginal;
            best_district = j;
        }
    }
    if (best_district < 0) return StrategyOutcome{Cost::unbounded(), {}};
    return search_schedule(election, method, star, kind, direction, best_district, goal);
}

EffectivenessTable effectiveness_ratios(const Election& election, const Method& method,
                                        Direction direction) {
    const SeatAllocation now = evaluate_election(election, method);
    const int m = election.num_parties;

    std::vector<Votes> national(static_cast<std::size_t>(m), 0);
    for (const auto& d : election.districts)
        for (int i = 0; i < m && i < d.profile.parties(); ++i)
            national[static_cast<std::size_t>(i)] += d.profile.counts[static_cast<std::size_t>(i)];

    std::vector<int> eligible;
    for (int i = 0; i < m; ++i) {
        if (direction == Direction::Destructive && now.seats[static_cast<std::size_t>(i)] < 1)
            continue;
        eligible.push_back(i);
    }
    if (eligible.empty()) throw std::invalid_argument("no eligible distinguished party");

    int strongest = eligible.front(), weakest = eligible.front();
    for (int i : eligible) {
        if (national[static_cast<std::size_t>(i)] > national[static_cast<std::size_t>(strongest)])
            strongest = i;
        if (national[static_cast<std::size_t>(i)] < national[static_cast<std::size_t>(weakest)])
            weakest = i;
    }

    EffectivenessTable table;
    table.strategies = {StrategyKind::Optimal, StrategyKind::Balanced,
                        StrategyKind::WeakestRival, StrategyKind::StrongestRival};
    table.columns = {"average", "strongest",
                     direction == Direction::Destructive ? "weakest-with-seat" : "weakest"};

    // budgets[strategy][party]
    std::vector<std::vector<Votes>> budgets(table.strategies.size());
    for (std::size_t s = 0; s < table.strategies.size(); ++s) {
        for (int i : eligible) {
            StrategyOutcome r = run_strategy(election, method, i, table.strategies[s], direction);
            if (r.budget.is_unbounded())
                throw std::runtime_error("strategy " + strategy_name(table.strategies[s]) +
                                         " infeasible for party " + std::to_string(i + 1));
            budgets[s].push_back(r.budget.value());
        }
    }

    auto party_slot = [&](int party) {
        return static_cast<std::size_t>(std::find(eligible.begin(), eligible.end(), party) -
                                        eligible.begin());
    };

    table.cells.resize(table.strategies.size());
    for (std::size_t s = 0; s < table.strategies.size(); ++s) {
        double mean = 0, mean_opt = 0;
        for (std::size_t p = 0; p < eligible.size(); ++p) {
            mean += static_cast<double>(budgets[s][p]);
            mean_opt += static_cast<double>(budgets[0][p]);
        }
        EffectivenessCell avg;
        avg.budget = Cost(static_cast<Votes>(mean / static_cast<double>(eligible.size())));
        avg.ratio = mean_opt == 0 ? 1.0 : mean / mean_opt;

        EffectivenessCell sp, wp;
        sp.budget = Cost(budgets[s][party_slot(strongest)]);
        double opt_sp = static_cast<double>(budgets[0][party_slot(strongest)]);
        sp.ratio = opt_sp == 0 ? 1.0 : static_cast<double>(budgets[s][party_slot(strongest)]) / opt_sp;
        wp.budget = Cost(budgets[s][party_slot(weakest)]);
        double opt_wp = static_cast<double>(budgets[0][party_slot(weakest)]);
        wp.ratio = opt_wp == 0 ? 1.0 : static_cast<double>(budgets[s][party_slot(weakest)]) / opt_wp;

        table.cells[s] = {avg, sp, wp};
    }
    return table;
}

}  // namespace seatstorm
