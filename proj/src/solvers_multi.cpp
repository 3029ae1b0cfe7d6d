#include "seatstorm/solvers_multi.hpp"

#include <algorithm>
#include <stdexcept>

#include "seatstorm/solvers_single.hpp"

namespace seatstorm {

namespace {

BriberyInstance district_instance(const District& d, const Method& method, int star,
                                  Direction dir, const Objective& obj, Votes budget) {
    BriberyInstance inst;
    inst.election = Election::single(d.profile, d.threshold, d.seats);
    inst.method = method;
    inst.star = star;
    inst.direction = dir;
    inst.objective = obj;
    inst.budget = budget;
    return inst;
}

void append_moves(CampaignPlan& plan, const CampaignPlan& local, int district) {
    for (Move m : local.moves) {
        m.district = district;
        plan.moves.push_back(m);
    }
}

}  // namespace

CostTable build_cost_table(const Election& election, const Method& method, int star,
                           Direction direction) {
    CostTable table;
    table.direction = direction;
    const bool constructive = direction == Direction::Constructive;

    for (const auto& d : election.districts) {
        std::vector<CostTableEntry> row;
        for (int s = 0; s <= d.seats; ++s) {
            CostTableEntry e;
            e.seats = s;
            if (constructive && s == 0) {
                e.cost = Cost(0);
            } else if (!constructive && s == d.seats) {
                e.cost = Cost(0);
            } else if (method.kind() == Method::Kind::Fptp && constructive && s > 0 &&
                       s < d.seats) {
                continue;  // FPTP districts are all-or-nothing
            } else if (method.kind() == Method::Kind::Fptp && !constructive && s > 0 &&
                       s < d.seats) {
                continue;
            } else {
                BriberyInstance inst = district_instance(
                    d, method, star, direction,
                    Objective::seats(s), 0);
                BudgetSearchResult r = min_budget_single(inst);
                e.cost = r.budget;
                e.plan = r.plan;
            }
            if (!e.cost.is_unbounded()) row.push_back(e);
        }
        // dominance pruning: keep an entry only when no entry with a weakly
        // better seat count is as cheap ("only consider the larger value of s
        // for equal cost" in the constructive direction, the smaller in the
        // destructive one)
        std::vector<CostTableEntry> pruned;
        if (constructive) {
            Cost best = Cost::unbounded();
            for (auto it = row.rbegin(); it != row.rend(); ++it) {
                if (it->cost < best) {
                    pruned.push_back(*it);
                    best = it->cost;
                }
            }
            std::reverse(pruned.begin(), pruned.end());
        } else {
            Cost best = Cost::unbounded();
            for (const auto& e : row) {
                if (e.cost < best) {
                    pruned.push_back(e);
                    best = e.cost;
                }
            }
        }
        table.districts.push_back(std::move(pruned));
    }
    return table;
}

namespace {

struct SeatDpResult {
    Cost cost;
    std::vector<int> choice;  // entry index per district
};

// min-cost group knapsack: pick one cost-table entry per district so that
// the seat total is >= goal (constructive) or <= goal (destructive)
SeatDpResult seat_table_dp(const CostTable& table, int goal) {
    const int q = static_cast<int>(table.districts.size());
    const bool constructive = table.direction == Direction::Constructive;

    if (constructive) {
        // state: seats still needed, clamped at zero
        std::vector<std::vector<Cost>> dp(static_cast<std::size_t>(q) + 1,
                                          std::vector<Cost>(static_cast<std::size_t>(goal) + 1,
                                                            Cost::unbounded()));
        std::vector<std::vector<int>> pick(static_cast<std::size_t>(q) + 1,
                                           std::vector<int>(static_cast<std::size_t>(goal) + 1, -1));
        dp[0][0] = Cost(0);
        for (int j = 1; j <= q; ++j) {
            const auto& row = table.districts[static_cast<std::size_t>(j - 1)];
            for (int g = 0; g <= goal; ++g)
                for (int e = 0; e < static_cast<int>(row.size()); ++e) {
                    int prev = std::max(0, g - row[static_cast<std::size_t>(e)].seats);
                    Cost cand = dp[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(prev)] +
                                row[static_cast<std::size_t>(e)].cost;
                    if (cand < dp[static_cast<std::size_t>(j)][static_cast<std::size_t>(g)]) {
                        dp[static_cast<std::size_t>(j)][static_cast<std::size_t>(g)] = cand;
                        pick[static_cast<std::size_t>(j)][static_cast<std::size_t>(g)] = e;
                    }
                }
        }
        SeatDpResult r;
        r.cost = dp[static_cast<std::size_t>(q)][static_cast<std::size_t>(goal)];
        if (!r.cost.is_unbounded()) {
            int g = goal;
            r.choice.assign(static_cast<std::size_t>(q), -1);
            for (int j = q; j >= 1; --j) {
                int e = pick[static_cast<std::size_t>(j)][static_cast<std::size_t>(g)];
                r.choice[static_cast<std::size_t>(j - 1)] = e;
                g = std::max(0, g - table.districts[static_cast<std::size_t>(j - 1)]
                                      [static_cast<std::size_t>(e)].seats);
            }
        }
        return r;
    }

    // destructive: seats allowance left
    std::vector<std::vector<Cost>> dp(static_cast<std::size_t>(q) + 1,
                                      std::vector<Cost>(static_cast<std::size_t>(goal) + 1,
                                                        Cost::unbounded()));
    std::vector<std::vector<int>> pick(static_cast<std::size_t>(q) + 1,
                                       std::vector<int>(static_cast<std::size_t>(goal) + 1, -1));
    for (int g = 0; g <= goal; ++g) dp[0][static_cast<std::size_t>(g)] = Cost(0);
    for (int j = 1; j <= q; ++j) {
        const auto& row = table.districts[static_cast<std::size_t>(j - 1)];
        for (int g = 0; g <= goal; ++g)
            for (int e = 0; e < static_cast<int>(row.size()); ++e) {
                int s = row[static_cast<std::size_t>(e)].seats;
                if (s > g) continue;
                Cost cand = dp[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(g - s)] +
                            row[static_cast<std::size_t>(e)].cost;
                if (cand < dp[static_cast<std::size_t>(j)][static_cast<std::size_t>(g)]) {
                    dp[static_cast<std::size_t>(j)][static_cast<std::size_t>(g)] = cand;
                    pick[static_cast<std::size_t>(j)][static_cast<std::size_t>(g)] = e;
                }
            }
    }
    SeatDpResult r;
    r.cost = dp[static_cast<std::size_t>(q)][static_cast<std::size_t>(goal)];
    if (!r.cost.is_unbounded()) {
        int g = goal;
        r.choice.assign(static_cast<std::size_t>(q), -1);
        for (int j = q; j >= 1; --j) {
            int e = pick[static_cast<std::size_t>(j)][static_cast<std::size_t>(g)];
            r.choice[static_cast<std::size_t>(j - 1)] = e;
            g -= table.districts[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(e)].seats;
        }
    }
    return r;
}

Decision seat_bribery_multi(const Election& election, const Method& method, int star, int ell,
                            Votes budget, Direction direction) {
    const int kappa = election.total_seats();
    if (direction == Direction::Constructive) {
        if (ell < 1 || ell > kappa) throw std::invalid_argument("target seats out of range");
    } else {
        if (ell < 0 || ell > kappa) throw std::invalid_argument("target seats out of range");
        if (ell >= kappa) return Decision{true, {}};
    }
    CostTable table = build_cost_table(election, method, star, direction);
    SeatDpResult r = seat_table_dp(table, ell);
    if (!r.cost.within(budget)) return Decision{false, {}};
    Decision dec;
    dec.yes = true;
    for (int j = 0; j < static_cast<int>(r.choice.size()); ++j) {
        const auto& entry = table.districts[static_cast<std::size_t>(j)]
                                           [static_cast<std::size_t>(r.choice[static_cast<std::size_t>(j)])];
        append_moves(dec.plan, entry.plan, j);
    }
    return dec;
}

}  // namespace

Decision mab(const Election& election, const Method& method, int star, int ell, Votes budget) {
    return seat_bribery_multi(election, method, star, ell, budget, Direction::Constructive);
}

Decision dmab(const Election& election, const Method& method, int star, int ell, Votes budget) {
    return seat_bribery_multi(election, method, star, ell, budget, Direction::Destructive);
}

Decision fptp_dmawb(const Election& election, int star, Votes budget) {
    const Method method = Method::fptp();
    const int m = election.num_parties;
    const int q = static_cast<int>(election.districts.size());
    SeatAllocation totals = evaluate_election(election, method);
    if (objective_satisfied(totals, star, Direction::Destructive, Objective::winner()))
        return Decision{true, {}};
    if (m == 1) return Decision{false, {}};

    // per district: who wins it now, and the price of flipping it to each party
    std::vector<int> winner_now(static_cast<std::size_t>(q), -1);
    std::vector<std::vector<BudgetSearchResult>> flip(static_cast<std::size_t>(q));
    for (int j = 0; j < q; ++j) {
        const District& d = election.districts[static_cast<std::size_t>(j)];
        SeatAllocation seats = evaluate_district(d, method);
        for (int i = 0; i < m; ++i)
            if (seats.seats[static_cast<std::size_t>(i)] > 0) winner_now[static_cast<std::size_t>(j)] = i;
        flip[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(m));
        for (int p = 0; p < m; ++p) {
            if (p == winner_now[static_cast<std::size_t>(j)]) {
                flip[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)] =
                    BudgetSearchResult{Cost::unbounded(), {}};  // already theirs
                continue;
            }
            BriberyInstance inst =
                district_instance(d, method, p, Direction::Constructive, Objective::winner(), 0);
            flip[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)] = min_budget_single(inst);
        }
    }

    // A district P* holds can also be voided outright: push every party
    // below the threshold (dumping the removed votes on parties that stay
    // below it), so its seats lapse without any rival collecting them.
    std::vector<BudgetSearchResult> voided(static_cast<std::size_t>(q));
    for (int j = 0; j < q; ++j) {
        const District& d = election.districts[static_cast<std::size_t>(j)];
        const Votes tau = d.threshold;
        voided[static_cast<std::size_t>(j)].budget = Cost::unbounded();
        if (tau < 1 || d.profile.total() > static_cast<Votes>(m) * (tau - 1)) continue;
        CampaignPlan plan;
        Votes cost = 0;
        std::vector<Votes> room(d.profile.counts.size());
        for (int i = 0; i < m; ++i)
            room[static_cast<std::size_t>(i)] =
                std::max<Votes>(0, tau - 1 - d.profile.counts[static_cast<std::size_t>(i)]);
        int sink = 0;
        for (int i = 0; i < m; ++i) {
            Votes excess =
                std::max<Votes>(0, d.profile.counts[static_cast<std::size_t>(i)] - (tau - 1));
            cost += excess;
            while (excess > 0) {
                while (sink < m && room[static_cast<std::size_t>(sink)] == 0) ++sink;
                Votes mv = std::min(excess, room[static_cast<std::size_t>(sink)]);
                plan.moves.push_back(Move{0, i, sink, mv});
                room[static_cast<std::size_t>(sink)] -= mv;
                excess -= mv;
            }
        }
        voided[static_cast<std::size_t>(j)] = BudgetSearchResult{Cost(cost), plan};
    }

    struct Option {
        Cost weight;
        int value;
        int target;  // party the district is flipped to; -2: voided
    };

    Decision best{false, {}};
    Cost best_cost = Cost::unbounded();
    for (int p = 0; p < m; ++p) {
        if (p == star) continue;
        const int delta = totals.seats[static_cast<std::size_t>(star)] -
                          totals.seats[static_cast<std::size_t>(p)] + 1;

        std::vector<std::vector<Option>> options(static_cast<std::size_t>(q));
        for (int j = 0; j < q; ++j) {
            const int kj = election.districts[static_cast<std::size_t>(j)].seats;
            const bool star_holds = winner_now[static_cast<std::size_t>(j)] == star;
            auto& opts = options[static_cast<std::size_t>(j)];
            opts.push_back(Option{Cost(0), 0, -1});
            const auto& to_p = flip[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)];
            if (winner_now[static_cast<std::size_t>(j)] != p && !to_p.budget.is_unbounded())
                opts.push_back(Option{to_p.budget, star_holds ? 2 * kj : kj, p});
            if (star_holds) {
                // stripping a P*-held district without handing it to p: flip
                // it to a third party, or void it below the threshold
                Cost cheapest = Cost::unbounded();
                int who = -1;
                for (int t = 0; t < m; ++t) {
                    if (t == star || t == p) continue;
                    const auto& r = flip[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
                    if (r.budget < cheapest) {
                        cheapest = r.budget;
                        who = t;
                    }
                }
                if (voided[static_cast<std::size_t>(j)].budget < cheapest) {
                    cheapest = voided[static_cast<std::size_t>(j)].budget;
                    who = -2;
                }
                if (who != -1 && !cheapest.is_unbounded())
                    opts.push_back(Option{cheapest, kj, who});
            }
        }

        const int goal = std::max(delta, 0);
        std::vector<std::vector<Cost>> dp(static_cast<std::size_t>(q) + 1,
                                          std::vector<Cost>(static_cast<std::size_t>(goal) + 1,
                                                            Cost::unbounded()));
        std::vector<std::vector<int>> pick(static_cast<std::size_t>(q) + 1,
                                           std::vector<int>(static_cast<std::size_t>(goal) + 1, -1));
        dp[0][0] = Cost(0);
        for (int j = 1; j <= q; ++j)
            for (int g = 0; g <= goal; ++g)
                for (int o = 0; o < static_cast<int>(options[static_cast<std::size_t>(j - 1)].size());
                     ++o) {
                    const Option& opt = options[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(o)];
                    int prev = std::max(0, g - opt.value);
                    Cost cand =
                        dp[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(prev)] + opt.weight;
                    if (cand < dp[static_cast<std::size_t>(j)][static_cast<std::size_t>(g)]) {
                        dp[static_cast<std::size_t>(j)][static_cast<std::size_t>(g)] = cand;
                        pick[static_cast<std::size_t>(j)][static_cast<std::size_t>(g)] = o;
                    }
                }
        const Cost need = dp[static_cast<std::size_t>(q)][static_cast<std::size_t>(goal)];
        if (need.within(budget) && need < best_cost) {
            best_cost = need;
            best.yes = true;
            best.plan.moves.clear();
            int g = goal;
            for (int j = q; j >= 1; --j) {
                int o = pick[static_cast<std::size_t>(j)][static_cast<std::size_t>(g)];
                const Option& opt = options[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(o)];
                if (opt.target >= 0)
                    append_moves(best.plan,
                                 flip[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(opt.target)].plan,
                                 j - 1);
                else if (opt.target == -2)
                    append_moves(best.plan, voided[static_cast<std::size_t>(j - 1)].plan, j - 1);
                g = std::max(0, g - opt.value);
            }
        }
    }
    return best;
}

Decision winner_multi_search(const Election& election, const Method& method, int star,
                             Direction direction, Votes budget,
                             const MultiSearchLimits& limits) {
    const int q = static_cast<int>(election.districts.size());
    if (q > limits.max_districts)
        throw InstanceTooLargeError("winner_multi_search limit exceeded: " + std::to_string(q) +
                                    " districts > " + std::to_string(limits.max_districts));
    if (election.num_parties > limits.max_parties)
        throw InstanceTooLargeError("winner_multi_search limit exceeded: " +
                                    std::to_string(election.num_parties) + " parties > " +
                                    std::to_string(limits.max_parties));
    for (const auto& d : election.districts)
        if (d.profile.total() > limits.max_district_votes)
            throw InstanceTooLargeError("winner_multi_search limit exceeded: district with " +
                                        std::to_string(d.profile.total()) + " votes > " +
                                        std::to_string(limits.max_district_votes));
    if (budget > limits.max_budget)
        throw InstanceTooLargeError("winner_multi_search limit exceeded: budget " +
                                    std::to_string(budget) + " > " +
                                    std::to_string(limits.max_budget));

    std::vector<std::vector<DistrictOutcome>> outcomes(static_cast<std::size_t>(q));
    for (int j = 0; j < q; ++j)
        outcomes[static_cast<std::size_t>(j)] = enumerate_district_outcomes(
            election.districts[static_cast<std::size_t>(j)], budget, method);

    const Objective obj = Objective::winner();
    std::vector<int> totals(static_cast<std::size_t>(election.num_parties), 0);
    std::vector<int> choice(static_cast<std::size_t>(q), -1);
    Cost best = Cost::unbounded();
    std::vector<int> best_choice;

    auto dfs = [&](auto&& self, int j, Votes spent) -> void {
        if (j == q) {
            SeatAllocation agg;
            agg.seats = totals;
            agg.seats.resize(static_cast<std::size_t>(election.num_parties), 0);
            if (objective_satisfied(agg, star, direction, obj) && Cost(spent) < best) {
                best = Cost(spent);
                best_choice = choice;
            }
            return;
        }
        for (int o = 0; o < static_cast<int>(outcomes[static_cast<std::size_t>(j)].size()); ++o) {
            const auto& opt = outcomes[static_cast<std::size_t>(j)][static_cast<std::size_t>(o)];
            if (spent + opt.cost > budget) break;
            if (best.within(spent + opt.cost)) continue;
            choice[static_cast<std::size_t>(j)] = o;
            for (std::size_t i = 0; i < opt.seats.size(); ++i) totals[i] += opt.seats[i];
            self(self, j + 1, spent + opt.cost);
            for (std::size_t i = 0; i < opt.seats.size(); ++i) totals[i] -= opt.seats[i];
        }
    };
    dfs(dfs, 0, 0);

    if (best.is_unbounded()) return Decision{false, {}};
    Decision dec;
    dec.yes = true;
    for (int j = 0; j < q; ++j) {
        const auto& opt = outcomes[static_cast<std::size_t>(j)]
                                  [static_cast<std::size_t>(best_choice[static_cast<std::size_t>(j)])];
        // rebuild moves from the representative count vector: pair donors
        // with receivers
        const auto& before = election.districts[static_cast<std::size_t>(j)].profile.counts;
        std::vector<std::pair<int, Votes>> donors, receivers;
        for (int i = 0; i < static_cast<int>(before.size()); ++i) {
            Votes diff = opt.counts[static_cast<std::size_t>(i)] - before[static_cast<std::size_t>(i)];
            if (diff < 0) donors.push_back({i, -diff});
            if (diff > 0) receivers.push_back({i, diff});
        }
        std::size_t r = 0;
        for (auto& [from, amount] : donors) {
            while (amount > 0) {
                auto& [to, need] = receivers[r];
                Votes mv = std::min(amount, need);
                dec.plan.moves.push_back(Move{j, from, to, mv});
                amount -= mv;
                need -= mv;
                if (need == 0) ++r;
            }
        }
    }
    return dec;
}

Decision solve(const BriberyInstance& instance) {
    if (instance.election.districts.size() == 1) return solve_single(instance);
    if (instance.objective.kind == Objective::Kind::Seats) {
        return instance.direction == Direction::Constructive
                   ? mab(instance.election, instance.method, instance.star, instance.objective.ell,
                         instance.budget)
                   : dmab(instance.election, instance.method, instance.star,
                          instance.objective.ell, instance.budget);
    }
    if (instance.method.kind() == Method::Kind::Fptp &&
        instance.direction == Direction::Destructive)
        return fptp_dmawb(instance.election, instance.star, instance.budget);
    return winner_multi_search(instance.election, instance.method, instance.star,
                               instance.direction, instance.budget);
}

MultiBudgetResult min_budget(const BriberyInstance& instance_without_budget) {
    BriberyInstance probe = instance_without_budget;
    const Votes n = probe.election.total_votes();
    probe.budget = n;
    Decision at_max = solve(probe);
    if (!at_max.yes) return MultiBudgetResult{Cost::unbounded(), {}};
    Votes lo = 0, hi = n;
    Decision witness = at_max;
    while (lo < hi) {
        Votes mid = lo + (hi - lo) / 2;
        probe.budget = mid;
        Decision dec = solve(probe);
        if (dec.yes) {
            hi = mid;
            witness = dec;
        } else {
            lo = mid + 1;
        }
    }
    return MultiBudgetResult{Cost(lo), witness.plan};
}

int max_seat_delta(const Election& election, const Method& method, int star,
                   Direction direction, Votes budget) {
    if (election.districts.size() == 1)
        return max_seat_delta_single(election, method, star, direction, budget);
    const int kappa = election.total_seats();
    const int current =
        evaluate_election(election, method).seats[static_cast<std::size_t>(star)];
    BriberyInstance probe;
    probe.election = election;
    probe.method = method;
    probe.star = star;
    probe.direction = direction;
    probe.budget = budget;
    if (direction == Direction::Constructive) {
        probe.objective = Objective::seats(1);
        if (!solve(probe).yes) return 0;
        int lo = 1, hi = kappa;
        while (lo < hi) {
            int mid = lo + (hi - lo + 1) / 2;
            probe.objective = Objective::seats(mid);
            if (solve(probe).yes) lo = mid;
            else hi = mid - 1;
        }
        return std::max(0, lo - current);
    }
    int lo = 0, hi = current;
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        probe.objective = Objective::seats(mid);
        if (solve(probe).yes) hi = mid;
        else lo = mid + 1;
    }
    return current - lo;
}

}  // namespace seatstorm
