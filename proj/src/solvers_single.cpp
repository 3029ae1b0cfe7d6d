#include "seatstorm/solvers_single.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace seatstorm {

namespace {

Votes effective_floor(Votes tau) { return std::max<Votes>(tau, 1); }

// Removal mass needed so that no rival blocks P* from winning an FPTP
// district when P* ends with q votes. A rival is harmless once it is below
// the threshold or at most q (strictly below q when it precedes P*).
Votes fptp_removals_needed(const std::vector<Votes>& c, int star, Votes q, Votes tau) {
    Votes need = 0;
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
        if (i == star) continue;
        Votes cap = i < star ? q - 1 : q;
        cap = std::max<Votes>(cap, tau - 1);
        need += std::max<Votes>(0, c[static_cast<std::size_t>(i)] - cap);
    }
    return need;
}

// Drains `amount` votes into P* on top of the targeted removals, taking from
// rivals that still have votes left, lowest index first.
void drain_extra(std::vector<Votes>& taken, const std::vector<Votes>& c, int star,
                 Votes amount) {
    for (int i = 0; i < static_cast<int>(c.size()) && amount > 0; ++i) {
        if (i == star) continue;
        Votes avail = c[static_cast<std::size_t>(i)] - taken[static_cast<std::size_t>(i)];
        Votes take = std::min(avail, amount);
        taken[static_cast<std::size_t>(i)] += take;
        amount -= take;
    }
    assert(amount == 0);
}

CampaignPlan plan_from_removals(const std::vector<Votes>& taken, int star) {
    CampaignPlan plan;
    for (int i = 0; i < static_cast<int>(taken.size()); ++i)
        if (taken[static_cast<std::size_t>(i)] > 0)
            plan.moves.push_back(Move{0, i, star, taken[static_cast<std::size_t>(i)]});
    return plan;
}

}  // namespace

Decision fptp_ab(const District& d, int star, Votes budget) {
    const auto& c = d.profile.counts;
    const Votes n = d.profile.total();
    const Votes x_max = std::min(budget, n - c[static_cast<std::size_t>(star)]);

    auto wins_with = [&](Votes x) {
        Votes q = c[static_cast<std::size_t>(star)] + x;
        if (q < effective_floor(d.threshold)) return false;
        return fptp_removals_needed(c, star, q, d.threshold) <= x;
    };

    if (!wins_with(x_max)) return Decision{false, {}};

    // smallest sufficient x; wins_with is monotone in x
    Votes lo = 0, hi = x_max;
    while (lo < hi) {
        Votes mid = lo + (hi - lo) / 2;
        if (wins_with(mid)) hi = mid;
        else lo = mid + 1;
    }
    const Votes q = c[static_cast<std::size_t>(star)] + lo;
    std::vector<Votes> taken(c.size(), 0);
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
        if (i == star) continue;
        Votes cap = std::max<Votes>(i < star ? q - 1 : q, d.threshold - 1);
        taken[static_cast<std::size_t>(i)] =
            std::max<Votes>(0, c[static_cast<std::size_t>(i)] - cap);
    }
    Votes used = std::accumulate(taken.begin(), taken.end(), Votes{0});
    drain_extra(taken, c, star, lo - used);
    return Decision{true, plan_from_removals(taken, star)};
}

Decision fptp_dab(const District& d, int star, const Objective& objective, Votes budget) {
    const auto& c = d.profile.counts;
    const int m = static_cast<int>(c.size());
    const Votes n = d.profile.total();
    const Votes floor = effective_floor(d.threshold);
    const bool seats_goal = objective.kind == Objective::Kind::Seats;

    if (seats_goal && objective.ell >= d.seats) return Decision{true, {}};

    // Route 1: some rival ends beating P*. For each beneficiary, all moved
    // votes flow into it, taken from P* first (doubly effective), then from
    // the other rivals.
    auto beats_after = [&](int b, Votes t) {
        Votes from_star = std::min(t, c[static_cast<std::size_t>(star)]);
        Votes star_final = c[static_cast<std::size_t>(star)] - from_star;
        Votes b_final = c[static_cast<std::size_t>(b)] + t;
        if (b_final < floor) return false;
        if (star_final < effective_floor(d.threshold)) return true;  // P* holds no seats
        return b < star ? b_final >= star_final : b_final > star_final;
    };

    Cost best = Cost::unbounded();
    int best_b = -1;
    for (int b = 0; b < m; ++b) {
        if (b == star) continue;
        Votes cap = std::min(budget, n - c[static_cast<std::size_t>(b)]);
        if (!beats_after(b, cap)) continue;
        Votes lo = 0, hi = cap;
        while (lo < hi) {
            Votes mid = lo + (hi - lo) / 2;
            if (beats_after(b, mid)) hi = mid;
            else lo = mid + 1;
        }
        if (Cost(lo) < best) {
            best = Cost(lo);
            best_b = b;
        }
    }

    // Route 2 (Seats only): P* simply drops below the threshold; with an
    // undefined or rival-less outcome it still holds zero seats.
    Cost below = Cost::unbounded();
    if (seats_goal && m >= 2) {
        Votes needed = std::max<Votes>(0, c[static_cast<std::size_t>(star)] - floor + 1);
        below = Cost(needed);
    }
    if (seats_goal && c[static_cast<std::size_t>(star)] < floor) below = Cost(0);

    Cost chosen = min(best, below);
    if (!chosen.within(budget)) return Decision{false, {}};

    CampaignPlan plan;
    if (best.within(budget) && best == chosen) {
        Votes t = best.value();
        Votes from_star = std::min(t, c[static_cast<std::size_t>(star)]);
        if (from_star > 0) plan.moves.push_back(Move{0, star, best_b, from_star});
        Votes rest = t - from_star;
        for (int i = 0; i < m && rest > 0; ++i) {
            if (i == star || i == best_b) continue;
            Votes take = std::min(rest, c[static_cast<std::size_t>(i)]);
            if (take > 0) plan.moves.push_back(Move{0, i, best_b, take});
            rest -= take;
        }
    } else if (chosen.value() > 0) {
        int dest = star == 0 ? 1 : 0;
        plan.moves.push_back(Move{0, star, dest, chosen.value()});
    }
    return Decision{true, plan};
}

// ---------------------------------------------------------------------------
// Divisor-method seat bribery (gamma tables + party-by-party DP)
// ---------------------------------------------------------------------------

int phi_constructive(Votes y, Votes pivot_support, int pivot_pos, Votes tau,
                     const DivisorSequence& seq, int kappa, bool favorable) {
    if (y <= 0 || y < tau) return 0;
    auto beats = [&](int z) {
        int cmp = compare_fractions(y, seq.value(z), pivot_support, seq.value(pivot_pos));
        return favorable ? cmp >= 0 : cmp > 0;
    };
    if (!beats(1)) return 0;
    int lo = 1, hi = kappa;  // largest z with beats(z); prefix property
    while (lo < hi) {
        int mid = lo + (hi - lo + 1) / 2;
        if (beats(mid)) lo = mid;
        else hi = mid - 1;
    }
    return lo;
}

namespace {

using SeatCost = std::pair<int, Votes>;  // (seats before pivot, vote moves)

// Exact reachable (x, cost) pairs for a nonincreasing phi under removals.
template <typename Phi>
std::vector<SeatCost> gamma_by_removal(Votes p, Votes remove_cap, Votes budget, Phi&& phi) {
    std::vector<SeatCost> entries;
    int x = phi(p);
    entries.push_back({x, 0});
    Votes cap = std::min(remove_cap, budget);
    Votes lo = 0;
    while (x > 0 && lo < cap) {
        if (phi(p - cap) >= x) break;
        Votes a = lo, b = cap;  // phi(p-a) == x, phi(p-b) < x
        while (a + 1 < b) {
            Votes mid = a + (b - a) / 2;
            if (phi(p - mid) < x) b = mid;
            else a = mid;
        }
        x = phi(p - b);
        lo = b;
        entries.push_back({x, b});
    }
    return entries;
}

// Exact reachable (x, cost) pairs for a nondecreasing phi under additions.
template <typename Phi>
std::vector<SeatCost> gamma_by_addition(Votes p, Votes add_cap, int max_x, Phi&& phi) {
    std::vector<SeatCost> entries;
    int x = phi(p);
    entries.push_back({x, 0});
    Votes lo = 0;
    while (x < max_x && lo < add_cap) {
        if (phi(p + add_cap) <= x) break;
        Votes a = lo, b = add_cap;  // phi(p+a) == x, phi(p+b) > x
        while (a + 1 < b) {
            Votes mid = a + (b - a) / 2;
            if (phi(p + mid) > x) b = mid;
            else a = mid;
        }
        x = phi(p + b);
        lo = b;
        entries.push_back({x, b});
    }
    return entries;
}

struct SeatTable {
    // tab[i][s]: minimal cost over the first i rivals; the meaning of s
    // depends on the direction (exactly s seats / at least s seats).
    std::vector<std::vector<Cost>> tab;
    std::vector<std::vector<int>> pick;  // chosen gamma index for backtrace
};

SeatTable run_exact_dp(const std::vector<std::vector<SeatCost>>& gammas, int max_s) {
    const int r = static_cast<int>(gammas.size());
    SeatTable t;
    t.tab.assign(static_cast<std::size_t>(r) + 1,
                 std::vector<Cost>(static_cast<std::size_t>(max_s) + 1, Cost::unbounded()));
    t.pick.assign(static_cast<std::size_t>(r) + 1,
                  std::vector<int>(static_cast<std::size_t>(max_s) + 1, -1));
    t.tab[0][0] = Cost(0);
    for (int i = 1; i <= r; ++i) {
        const auto& g = gammas[static_cast<std::size_t>(i - 1)];
        for (int s = 0; s <= max_s; ++s) {
            for (int e = 0; e < static_cast<int>(g.size()); ++e) {
                const auto& [x, cost] = g[static_cast<std::size_t>(e)];
                if (x > s) continue;
                Cost cand = t.tab[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(s - x)] +
                            Cost(cost);
                if (cand < t.tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)]) {
                    t.tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] = cand;
                    t.pick[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] = e;
                }
            }
        }
    }
    return t;
}

SeatTable run_atleast_dp(const std::vector<std::vector<SeatCost>>& gammas, int max_s) {
    const int r = static_cast<int>(gammas.size());
    SeatTable t;
    t.tab.assign(static_cast<std::size_t>(r) + 1,
                 std::vector<Cost>(static_cast<std::size_t>(max_s) + 1, Cost::unbounded()));
    t.pick.assign(static_cast<std::size_t>(r) + 1,
                  std::vector<int>(static_cast<std::size_t>(max_s) + 1, -1));
    for (int s = 0; s <= max_s; ++s) t.tab[0][static_cast<std::size_t>(s)] = s == 0 ? Cost(0) : Cost::unbounded();
    for (int i = 1; i <= r; ++i) {
        const auto& g = gammas[static_cast<std::size_t>(i - 1)];
        for (int s = 0; s <= max_s; ++s) {
            for (int e = 0; e < static_cast<int>(g.size()); ++e) {
                const auto& [x, cost] = g[static_cast<std::size_t>(e)];
                int prev = std::max(0, s - x);
                Cost cand = t.tab[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(prev)] +
                            Cost(cost);
                if (cand < t.tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)]) {
                    t.tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] = cand;
                    t.pick[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] = e;
                }
            }
        }
    }
    return t;
}

std::vector<int> rivals_of(int m, int star) {
    std::vector<int> r;
    for (int i = 0; i < m; ++i)
        if (i != star) r.push_back(i);
    return r;
}

}  // namespace

Decision divisor_ab(const District& d, const DivisorSequence& seq, int star, int ell,
                    Votes budget) {
    const auto& c = d.profile.counts;
    const int m = static_cast<int>(c.size());
    const int kappa = d.seats;
    if (ell < 1 || ell > kappa) throw std::invalid_argument("constructive target out of range");

    const Votes n = d.profile.total();
    const Votes k_eff = std::min(budget, n - c[static_cast<std::size_t>(star)]);
    const Votes q = c[static_cast<std::size_t>(star)] + k_eff;
    if (q < d.threshold || q == 0) return Decision{false, {}};

    const auto rivals = rivals_of(m, star);
    std::vector<std::vector<SeatCost>> gammas;
    for (int r : rivals) {
        auto phi = [&](Votes y) {
            return phi_constructive(y, q, ell, d.threshold, seq, kappa, r < star);
        };
        gammas.push_back(gamma_by_removal(c[static_cast<std::size_t>(r)],
                                          c[static_cast<std::size_t>(r)], k_eff, phi));
    }

    SeatTable t = run_exact_dp(gammas, kappa - ell);
    int best_s = -1;
    Cost best = Cost::unbounded();
    for (int s = 0; s <= kappa - ell; ++s) {
        const Cost& v = t.tab[rivals.size()][static_cast<std::size_t>(s)];
        if (v.within(k_eff) && v < best) {
            best = v;
            best_s = s;
        }
    }
    if (best_s < 0) return Decision{false, {}};

    std::vector<Votes> taken(c.size(), 0);
    int s = best_s;
    for (int i = static_cast<int>(rivals.size()); i >= 1; --i) {
        int e = t.pick[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
        const auto& [x, cost] = gammas[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(e)];
        taken[static_cast<std::size_t>(rivals[static_cast<std::size_t>(i - 1)])] = cost;
        s -= x;
    }
    Votes used = std::accumulate(taken.begin(), taken.end(), Votes{0});
    drain_extra(taken, c, star, k_eff - used);
    return Decision{true, plan_from_removals(taken, star)};
}

Decision divisor_dab(const District& d, const DivisorSequence& seq, int star, int ell,
                     Votes budget) {
    const auto& c = d.profile.counts;
    const int m = static_cast<int>(c.size());
    const int kappa = d.seats;
    if (ell < 0 || ell > kappa) throw std::invalid_argument("destructive target out of range");
    if (ell >= kappa) return Decision{true, {}};
    if (m == 1) return Decision{false, {}};

    const Votes floor = effective_floor(d.threshold);
    const Votes k_rem = std::min(budget, c[static_cast<std::size_t>(star)]);
    const Votes q = c[static_cast<std::size_t>(star)] - k_rem;

    if (q < floor) {
        Votes needed = std::max<Votes>(0, c[static_cast<std::size_t>(star)] - floor + 1);
        CampaignPlan plan;
        if (needed > 0) plan.moves.push_back(Move{0, star, star == 0 ? 1 : 0, needed});
        return Decision{true, plan};
    }

    const auto rivals = rivals_of(m, star);
    std::vector<std::vector<SeatCost>> gammas;
    for (int r : rivals) {
        auto phi = [&](Votes y) {
            return phi_constructive(y, q, ell + 1, d.threshold, seq, kappa, r < star);
        };
        gammas.push_back(gamma_by_addition(c[static_cast<std::size_t>(r)], k_rem, kappa, phi));
    }

    SeatTable t = run_atleast_dp(gammas, kappa - ell);
    const Cost need = t.tab[rivals.size()][static_cast<std::size_t>(kappa - ell)];
    if (!need.within(k_rem)) return Decision{false, {}};

    std::vector<Votes> given(c.size(), 0);
    int s = kappa - ell;
    for (int i = static_cast<int>(rivals.size()); i >= 1; --i) {
        int e = t.pick[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
        const auto& [x, cost] = gammas[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(e)];
        given[static_cast<std::size_t>(rivals[static_cast<std::size_t>(i - 1)])] = cost;
        s = std::max(0, s - x);
    }
    Votes used = std::accumulate(given.begin(), given.end(), Votes{0});
    given[static_cast<std::size_t>(rivals.front())] += k_rem - used;  // surplus only helps

    CampaignPlan plan;
    for (int i = 0; i < m; ++i)
        if (given[static_cast<std::size_t>(i)] > 0)
            plan.moves.push_back(Move{0, star, i, given[static_cast<std::size_t>(i)]});
    return Decision{true, plan};
}

// ---------------------------------------------------------------------------
// Largest-remainder seat bribery
// ---------------------------------------------------------------------------

namespace {

struct LrmShare {
    int lqu;         // floor(kappa * y / n)
    Votes rem_num;   // (kappa * y) mod n, the remainder over denominator n
};

LrmShare lrm_share(Votes y, Votes n, int kappa) {
    __int128 t = static_cast<__int128>(kappa) * y;
    return LrmShare{static_cast<int>(t / n), static_cast<Votes>(t % n)};
}

// Seats a party with y votes takes before the distinguished party's
// remainder-seat entry: the lower quota, plus one when its remainder beats
// the distinguished remainder (ties favor the lower index).
int phi_lrm(Votes y, Votes tau, Votes n, int kappa, Votes pivot_rem_num, bool favorable) {
    if (y <= 0 || y < tau) return 0;
    LrmShare s = lrm_share(y, n, kappa);
    int extra = (favorable ? s.rem_num >= pivot_rem_num : s.rem_num > pivot_rem_num) ? 1 : 0;
    return std::min(kappa, s.lqu + extra);
}

}  // namespace

Decision lrm_ab(const District& d, int star, int ell, Votes budget) {
    const auto& c = d.profile.counts;
    const int m = static_cast<int>(c.size());
    const int kappa = d.seats;
    const Votes tau = d.threshold;
    if (ell < 1 || ell > kappa) throw std::invalid_argument("constructive target out of range");

    const Votes n_total = d.profile.total();
    const Votes k_eff = std::min(budget, n_total - c[static_cast<std::size_t>(star)]);
    if (c[static_cast<std::size_t>(star)] + k_eff < effective_floor(tau))
        return Decision{false, {}};

    // Rivals in the race can be pushed below the threshold at a cost of
    // sigma - tau + 1 votes each (credited to P*). Which survivors remain
    // matters through tie-breaking, but only via their side of P* in the
    // tie-break order, and within a side pushing the cheapest first is
    // exchange-optimal; so the stages range over one push count per side.
    std::vector<int> fav, unfav;  // rivals before/after P* in tie-break order
    Votes below_pool_base = 0;    // votes held by parties outside the race
    for (int r = 0; r < m; ++r) {
        if (r == star) continue;
        if (c[static_cast<std::size_t>(r)] >= tau && c[static_cast<std::size_t>(r)] > 0)
            (r < star ? fav : unfav).push_back(r);
        else
            below_pool_base += c[static_cast<std::size_t>(r)];
    }
    auto by_support = [&](int a, int b) {
        if (c[static_cast<std::size_t>(a)] != c[static_cast<std::size_t>(b)])
            return c[static_cast<std::size_t>(a)] < c[static_cast<std::size_t>(b)];
        return a < b;
    };
    std::sort(fav.begin(), fav.end(), by_support);
    std::sort(unfav.begin(), unfav.end(), by_support);

    const int max_fav = tau >= 1 ? static_cast<int>(fav.size()) : 0;
    const int max_unfav = tau >= 1 ? static_cast<int>(unfav.size()) : 0;

    for (int total_pushed = 0; total_pushed <= max_fav + max_unfav; ++total_pushed) {
        for (int a = 0; a <= std::min(total_pushed, max_fav); ++a) {
            const int b = total_pushed - a;
            if (b > max_unfav) continue;

            Votes push_cost = 0;
            for (int i = 0; i < a; ++i)
                push_cost += c[static_cast<std::size_t>(fav[static_cast<std::size_t>(i)])] - tau + 1;
            for (int i = 0; i < b; ++i)
                push_cost +=
                    c[static_cast<std::size_t>(unfav[static_cast<std::size_t>(i)])] - tau + 1;
            if (push_cost > k_eff) continue;

            std::vector<int> survivors;
            for (int i = a; i < static_cast<int>(fav.size()); ++i)
                survivors.push_back(fav[static_cast<std::size_t>(i)]);
            for (int i = b; i < static_cast<int>(unfav.size()); ++i)
                survivors.push_back(unfav[static_cast<std::size_t>(i)]);
            std::sort(survivors.begin(), survivors.end());

            const Votes k_alg = k_eff - push_cost;
            const Votes below_pool =
                below_pool_base + static_cast<Votes>(total_pushed) * (tau - 1);
            Votes surv_total = 0, drain_cap = 0;
            for (int r : survivors) {
                surv_total += c[static_cast<std::size_t>(r)];
                drain_cap +=
                    tau >= 1 ? c[static_cast<std::size_t>(r)] - tau : c[static_cast<std::size_t>(r)];
            }
            // votes routable into P* at this stage, and the share of them
            // drained from survivors (which is what shrinks n)
            const Votes into = std::min(k_alg, drain_cap + below_pool);
            const Votes drained = std::min(k_alg, drain_cap);
            const Votes sigma1 = c[static_cast<std::size_t>(star)] + push_cost + into;
            const Votes n_state = sigma1 + surv_total - drained;
            if (sigma1 < effective_floor(tau) || n_state <= 0) continue;

            LrmShare own = lrm_share(sigma1, n_state, kappa);
            bool decided = false;
            std::vector<Votes> dp_taken(c.size(), 0);
            if (own.lqu >= ell) {
                decided = true;
            } else if (own.lqu == ell - 1) {
                std::vector<std::vector<SeatCost>> gammas;
                for (int r : survivors) {
                    auto phi = [&](Votes y) {
                        return phi_lrm(y, tau, n_state, kappa, own.rem_num, r < star);
                    };
                    Votes cap = tau >= 1 ? c[static_cast<std::size_t>(r)] - tau
                                         : c[static_cast<std::size_t>(r)];
                    gammas.push_back(
                        gamma_by_removal(c[static_cast<std::size_t>(r)], cap, drained, phi));
                }
                SeatTable t = run_exact_dp(gammas, kappa - ell);
                int best_s = -1;
                Cost best = Cost::unbounded();
                for (int s = 0; s <= kappa - ell; ++s) {
                    const Cost& v = t.tab[survivors.size()][static_cast<std::size_t>(s)];
                    if (v.within(drained) && v < best) {
                        best = v;
                        best_s = s;
                    }
                }
                if (best_s >= 0) {
                    decided = true;
                    int s = best_s;
                    for (int i = static_cast<int>(survivors.size()); i >= 1; --i) {
                        int e = t.pick[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
                        const auto& [x, cost] =
                            gammas[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(e)];
                        dp_taken[static_cast<std::size_t>(
                            survivors[static_cast<std::size_t>(i - 1)])] = cost;
                        s -= x;
                    }
                }
            }
            if (!decided) continue;

            // assemble: pushes, targeted drains, then filler drains from
            // survivor slack and finally from out-of-race vote pools
            std::vector<Votes> taken(c.size(), 0);
            for (int i = 0; i < a; ++i) {
                int r = fav[static_cast<std::size_t>(i)];
                taken[static_cast<std::size_t>(r)] = c[static_cast<std::size_t>(r)] - tau + 1;
            }
            for (int i = 0; i < b; ++i) {
                int r = unfav[static_cast<std::size_t>(i)];
                taken[static_cast<std::size_t>(r)] = c[static_cast<std::size_t>(r)] - tau + 1;
            }
            Votes remaining = drained;
            for (int r : survivors) {
                taken[static_cast<std::size_t>(r)] = dp_taken[static_cast<std::size_t>(r)];
                remaining -= dp_taken[static_cast<std::size_t>(r)];
            }
            for (int r : survivors) {
                if (remaining <= 0) break;
                Votes floor_r = tau >= 1 ? tau : 0;
                Votes slack =
                    c[static_cast<std::size_t>(r)] - floor_r - taken[static_cast<std::size_t>(r)];
                Votes take = std::min(slack, remaining);
                taken[static_cast<std::size_t>(r)] += take;
                remaining -= take;
            }
            Votes from_outside = into - drained;
            for (int r = 0; r < m && from_outside > 0; ++r) {
                if (r == star) continue;
                if (std::find(survivors.begin(), survivors.end(), r) != survivors.end())
                    continue;
                Votes avail =
                    c[static_cast<std::size_t>(r)] - taken[static_cast<std::size_t>(r)];
                Votes take = std::min(avail, from_outside);
                taken[static_cast<std::size_t>(r)] += take;
                from_outside -= take;
            }
            return Decision{true, plan_from_removals(taken, star)};
        }
    }
    return Decision{false, {}};
}

Decision lrm_dab(const District& d, int star, int ell, Votes budget) {
    const auto& c = d.profile.counts;
    const int m = static_cast<int>(c.size());
    const int kappa = d.seats;
    const Votes tau = d.threshold;
    if (ell < 0 || ell > kappa) throw std::invalid_argument("destructive target out of range");
    if (ell >= kappa) return Decision{true, {}};
    if (m == 1) return Decision{false, {}};

    const Votes floor = effective_floor(tau);
    const Votes k_rem = std::min(budget, c[static_cast<std::size_t>(star)]);
    const Votes q = c[static_cast<std::size_t>(star)] - k_rem;

    if (q < floor) {
        Votes needed = std::max<Votes>(0, c[static_cast<std::size_t>(star)] - floor + 1);
        CampaignPlan plan;
        if (needed > 0) plan.moves.push_back(Move{0, star, star == 0 ? 1 : 0, needed});
        return Decision{true, plan};
    }

    // A rival below max(tau,1) can be brought into the race with votes from
    // P*'s removed pool. Like the pushes in the constructive case, which
    // side of P* a raised party sits on matters for remainder ties, and
    // within a side the cheapest raise is exchange-optimal: the stages range
    // over one raise count per side.
    std::vector<int> survivors;
    std::vector<int> fav_raise, unfav_raise;
    for (int r = 0; r < m; ++r) {
        if (r == star) continue;
        if (c[static_cast<std::size_t>(r)] >= floor)
            survivors.push_back(r);
        else
            (r < star ? fav_raise : unfav_raise).push_back(r);
    }
    auto cheapest_first = [&](int a, int b) {
        if (c[static_cast<std::size_t>(a)] != c[static_cast<std::size_t>(b)])
            return c[static_cast<std::size_t>(a)] > c[static_cast<std::size_t>(b)];
        return a < b;
    };
    std::sort(fav_raise.begin(), fav_raise.end(), cheapest_first);
    std::sort(unfav_raise.begin(), unfav_raise.end(), cheapest_first);

    Votes surv_n = q + k_rem;  // = p*
    for (int r : survivors) surv_n += c[static_cast<std::size_t>(r)];

    const int max_a = static_cast<int>(fav_raise.size());
    const int max_b = static_cast<int>(unfav_raise.size());
    for (int raised_total = 0; raised_total <= max_a + max_b; ++raised_total) {
        for (int a = 0; a <= std::min(raised_total, max_a); ++a) {
            const int b = raised_total - a;
            if (b > max_b) continue;

            std::vector<int> raised;
            for (int i = 0; i < a; ++i) raised.push_back(fav_raise[static_cast<std::size_t>(i)]);
            for (int i = 0; i < b; ++i) raised.push_back(unfav_raise[static_cast<std::size_t>(i)]);

            Votes raise_total = 0;
            Votes n_state = surv_n;
            for (int t : raised) {
                raise_total += floor - c[static_cast<std::size_t>(t)];
                n_state += c[static_cast<std::size_t>(t)];
            }
            if (raise_total > k_rem) continue;
            const Votes budget_j = k_rem - raise_total;

            std::vector<int> recipients = survivors;
            recipients.insert(recipients.end(), raised.begin(), raised.end());
            std::sort(recipients.begin(), recipients.end());
            if (recipients.empty()) continue;  // P* alone keeps every seat

            LrmShare own = lrm_share(q, n_state, kappa);
            bool decided = false;
            std::vector<Votes> dp_given(c.size(), 0);
            if (own.lqu <= ell - 1) {
                decided = true;  // P* tops out at lqu + 1 <= ell seats
            } else if (own.lqu == ell) {
                std::vector<std::vector<SeatCost>> gammas;
                for (int r : recipients) {
                    bool was_raised =
                        std::find(raised.begin(), raised.end(), r) != raised.end();
                    Votes y0 = was_raised ? floor : c[static_cast<std::size_t>(r)];
                    auto phi = [&](Votes y) {
                        return phi_lrm(y, tau, n_state, kappa, own.rem_num, r < star);
                    };
                    gammas.push_back(gamma_by_addition(y0, budget_j, kappa, phi));
                }
                SeatTable t = run_atleast_dp(gammas, kappa - ell);
                const Cost need = t.tab[recipients.size()][static_cast<std::size_t>(kappa - ell)];
                if (need.within(budget_j)) {
                    decided = true;
                    int s = kappa - ell;
                    for (int i = static_cast<int>(recipients.size()); i >= 1; --i) {
                        int e = t.pick[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)];
                        const auto& [x, cost] =
                            gammas[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(e)];
                        dp_given[static_cast<std::size_t>(
                            recipients[static_cast<std::size_t>(i - 1)])] = cost;
                        s = std::max(0, s - x);
                    }
                }
            }
            if (!decided) continue;

            std::vector<Votes> given(c.size(), 0);
            Votes used = 0;
            for (int t : raised) {
                given[static_cast<std::size_t>(t)] = floor - c[static_cast<std::size_t>(t)];
                used += given[static_cast<std::size_t>(t)];
            }
            for (int r : recipients) {
                given[static_cast<std::size_t>(r)] += dp_given[static_cast<std::size_t>(r)];
                used += dp_given[static_cast<std::size_t>(r)];
            }
            given[static_cast<std::size_t>(recipients.front())] += k_rem - used;
            CampaignPlan plan;
            for (int i = 0; i < m; ++i)
                if (given[static_cast<std::size_t>(i)] > 0)
                    plan.moves.push_back(Move{0, star, i, given[static_cast<std::size_t>(i)]});
            return Decision{true, plan};
        }
    }
    return Decision{false, {}};
}


// ---------------------------------------------------------------------------
// Winner bribery (guess the pivotal cutoff entry, then a per-party DP)
// ---------------------------------------------------------------------------

namespace {

// A guess fixes the value of the pivotal cutoff entry (the kappa-th best
// fraction-list entry, or the weakest remainder that still wins a remainder
// seat under LRM) together with the last tie-break-favored party t. Against
// a fixed cutoff, seat counts decompose over parties, and a DP over parties
// tracks (seats, votes removed, votes added); a guess is accepted only when
// the counts sum to exactly kappa, which forces the guessed cutoff to be the
// real one. Unlike the seat-target solvers, moves range over arbitrary
// from/to pairs: several rivals may need to gain votes at once (a trailing
// party lifted over the threshold can strip the distinguished party of a
// seat it would otherwise win on tie-break).

struct WinnerWitness {
    bool yes = false;
    std::vector<Votes> delta;  // per-party net vote change
};

// Seat count of a party holding y votes against a divisor cutoff pv/pd.
int divisor_count(Votes y, Votes tau, int kappa, const DivisorSequence& seq, Votes pv,
                  const Rational& pd, bool favorable) {
    if (y <= 0 || y < std::max<Votes>(tau, 1)) return 0;
    auto beats = [&](int z) {
        int cmp = compare_fractions(y, seq.value(z), pv, pd);
        return favorable ? cmp >= 0 : cmp > 0;
    };
    if (!beats(1)) return 0;
    int lo = 1, hi = kappa;
    while (lo < hi) {
        int mid = lo + (hi - lo + 1) / 2;
        if (beats(mid)) lo = mid;
        else hi = mid - 1;
    }
    return lo;
}

// Per-party seat counts as a function of the final support, for one guess.
// Entries are precomputed over the reachable support window of each party.
struct CountTableSet {
    std::vector<Votes> lo;                // lowest reachable support per party
    std::vector<std::vector<int>> count;  // count[i][y - lo[i]]

    int at(int i, Votes y) const {
        return count[static_cast<std::size_t>(i)]
                    [static_cast<std::size_t>(y - lo[static_cast<std::size_t>(i)])];
    }
};

// Frontier DP over parties. State: (seats, removed, added, surviving-support
// sum); the last component is tracked only under LRM, where the counts table
// was built for one specific final denominator and the accepted profile must
// realize it.
struct WinnerDpSpec {
    const std::vector<Votes>* counts;
    const CountTableSet* tables;
    Votes budget;
    int kappa;
    Votes tau;
    int special;      // the party that must reach lambda seats
    int lambda;
    int star;         // < lambda seats required (ignored when == special)
    bool bound_all;   // constructive: every party but `special` stays < lambda
    Votes want_w;     // LRM: required surviving-support sum, -1 to disable
};

WinnerWitness run_winner_dp(const WinnerDpSpec& spec) {
    const auto& c = *spec.counts;
    const int m = static_cast<int>(c.size());
    const Votes K = spec.budget;

    struct Key {
        int j;
        Votes rem, add, w;
        bool operator<(const Key& o) const {
            if (j != o.j) return j < o.j;
            if (rem != o.rem) return rem < o.rem;
            if (add != o.add) return add < o.add;
            return w < o.w;
        }
    };
    using Layer = std::map<Key, Votes>;  // -> chosen delta for this party

    std::vector<Layer> layers(static_cast<std::size_t>(m) + 1);
    layers[0][Key{0, 0, 0, 0}] = 0;

    for (int i = 0; i < m; ++i) {
        for (const auto& [key, unused] : layers[static_cast<std::size_t>(i)]) {
            (void)unused;
            Votes d_lo = -std::min<Votes>(c[static_cast<std::size_t>(i)], K - key.rem);
            Votes d_hi = K - key.add;
            if (spec.bound_all) {
                if (i == spec.special) d_lo = std::max<Votes>(d_lo, 0);
            } else {
                if (i == spec.special) d_lo = std::max<Votes>(d_lo, 0);
                if (i == spec.star) d_hi = std::min<Votes>(d_hi, 0);
            }
            for (Votes d = d_lo; d <= d_hi; ++d) {
                Votes y = c[static_cast<std::size_t>(i)] + d;
                int cnt = spec.tables->at(i, y);
                if (i == spec.special) {
                    if (cnt < spec.lambda) continue;
                } else if (spec.bound_all || i == spec.star) {
                    if (cnt >= spec.lambda) continue;
                }
                Key next{key.j + cnt, key.rem + std::max<Votes>(-d, 0),
                         key.add + std::max<Votes>(d, 0), key.w};
                if (next.j > spec.kappa) continue;
                if (spec.want_w >= 0) {
                    next.w += (y >= spec.tau && y > 0) ? y : 0;
                    if (next.w > spec.want_w) continue;
                }
                auto& layer = layers[static_cast<std::size_t>(i + 1)];
                if (layer.find(next) == layer.end()) layer[next] = d;
            }
        }
    }

    // accept any total t = removed = added <= K with all seats placed
    for (const auto& [key, unused] : layers[static_cast<std::size_t>(m)]) {
        (void)unused;
        if (key.j != spec.kappa) continue;
        if (key.rem != key.add) continue;
        if (spec.want_w >= 0 && key.w != spec.want_w) continue;

        WinnerWitness out;
        out.yes = true;
        out.delta.assign(c.size(), 0);
        Key cur = key;
        for (int i = m; i >= 1; --i) {
            Votes d = layers[static_cast<std::size_t>(i)].at(cur);
            out.delta[static_cast<std::size_t>(i - 1)] = d;
            Votes y = c[static_cast<std::size_t>(i - 1)] + d;
            int cnt = spec.tables->at(i - 1, y);
            cur.j -= cnt;
            cur.rem -= std::max<Votes>(-d, 0);
            cur.add -= std::max<Votes>(d, 0);
            if (spec.want_w >= 0) cur.w -= (y >= spec.tau && y > 0) ? y : 0;
        }
        return out;
    }
    return {};
}

CampaignPlan plan_from_delta(const std::vector<Votes>& delta) {
    CampaignPlan plan;
    std::vector<std::pair<int, Votes>> donors, receivers;
    for (int i = 0; i < static_cast<int>(delta.size()); ++i) {
        if (delta[static_cast<std::size_t>(i)] < 0)
            donors.push_back({i, -delta[static_cast<std::size_t>(i)]});
        if (delta[static_cast<std::size_t>(i)] > 0)
            receivers.push_back({i, delta[static_cast<std::size_t>(i)]});
    }
    std::size_t r = 0;
    for (auto& [from, amount] : donors) {
        while (amount > 0) {
            auto& [to, need] = receivers[r];
            Votes mv = std::min(amount, need);
            plan.moves.push_back(Move{0, from, to, mv});
            amount -= mv;
            need -= mv;
            if (need == 0) ++r;
        }
    }
    return plan;
}

// Cheap prescreen for a (special, lambda) pair: the special party must reach
// lambda seats somewhere in its support window, and the star must be able to
// fall below lambda somewhere in its own.
bool winner_guess_feasible(const CountTableSet& tables, int special, int star, int lambda) {
    int best = 0;
    for (int v : tables.count[static_cast<std::size_t>(special)]) best = std::max(best, v);
    if (best < lambda) return false;
    if (special != star) {
        int low = tables.count[static_cast<std::size_t>(star)].empty() ? 0 : 1 << 20;
        for (int v : tables.count[static_cast<std::size_t>(star)]) low = std::min(low, v);
        if (low >= lambda) return false;
    }
    return true;
}

Decision winner_solve_divisor(const District& d, const DivisorSequence& seq, int star,
                              Votes budget, Direction direction) {
    const auto& c = d.profile.counts;
    const int m = static_cast<int>(c.size());
    const int kappa = d.seats;
    const Votes K = std::min(budget, d.profile.total());

    // cutoff candidates: every fraction-list entry of every reachable support
    std::vector<std::pair<Votes, Rational>> pivots;
    for (int s = 0; s < m; ++s) {
        Votes y_lo = std::max<Votes>(0, c[static_cast<std::size_t>(s)] - K);
        Votes y_hi = c[static_cast<std::size_t>(s)] + K;
        for (Votes y = std::max<Votes>(y_lo, 1); y <= y_hi; ++y)
            for (int z = 1; z <= kappa; ++z) pivots.push_back({y, seq.value(z)});
    }
    std::sort(pivots.begin(), pivots.end(), [](const auto& a, const auto& b) {
        int cmp = compare_fractions(a.first, a.second, b.first, b.second);
        if (cmp != 0) return cmp < 0;
        return false;
    });
    pivots.erase(std::unique(pivots.begin(), pivots.end(),
                             [](const auto& a, const auto& b) {
                                 return compare_fractions(a.first, a.second, b.first, b.second) ==
                                        0;
                             }),
                 pivots.end());

    const bool constructive = direction == Direction::Constructive;
    for (const auto& [pv, pd] : pivots) {
        for (int t = -1; t < m; ++t) {
            CountTableSet tables;
            tables.lo.resize(static_cast<std::size_t>(m));
            tables.count.resize(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) {
                Votes lo = std::max<Votes>(0, c[static_cast<std::size_t>(i)] - K);
                tables.lo[static_cast<std::size_t>(i)] = lo;
                for (Votes y = lo; y <= c[static_cast<std::size_t>(i)] + K; ++y)
                    tables.count[static_cast<std::size_t>(i)].push_back(
                        divisor_count(y, d.threshold, kappa, seq, pv, pd, i <= t));
            }
            std::vector<int> specials;
            if (constructive) specials.push_back(star);
            else
                for (int w = 0; w < m; ++w)
                    if (w != star) specials.push_back(w);
            for (int special : specials) {
                for (int lambda = 1; lambda <= kappa; ++lambda) {
                    if (!winner_guess_feasible(tables, special, star, lambda)) continue;
                    WinnerDpSpec spec{&c,     &tables, K,    kappa,      d.threshold,
                                      special, lambda, star, constructive, -1};
                    WinnerWitness w = run_winner_dp(spec);
                    if (w.yes) return Decision{true, plan_from_delta(w.delta)};
                }
            }
        }
    }
    return Decision{false, {}};
}

Decision winner_solve_lrm(const District& d, int star, Votes budget, Direction direction) {
    const auto& c = d.profile.counts;
    const int m = static_cast<int>(c.size());
    const int kappa = d.seats;
    const Votes n = d.profile.total();
    const Votes K = std::min(budget, n);
    const bool constructive = direction == Direction::Constructive;

    for (Votes n_final = 1; n_final <= n; ++n_final) {
        // remainder classes of every reachable support, plus a sentinel above
        // all remainders for allocations without remainder seats
        std::vector<Votes> pivots;
        for (int s = 0; s < m; ++s) {
            Votes y_lo = std::max<Votes>(0, c[static_cast<std::size_t>(s)] - K);
            for (Votes y = y_lo; y <= c[static_cast<std::size_t>(s)] + K; ++y)
                pivots.push_back(static_cast<Votes>((static_cast<__int128>(kappa) * y) % n_final));
        }
        pivots.push_back(n_final);
        std::sort(pivots.begin(), pivots.end());
        pivots.erase(std::unique(pivots.begin(), pivots.end()), pivots.end());

        for (Votes pivot : pivots) {
            for (int t = -1; t < m; ++t) {
                CountTableSet tables;
                tables.lo.resize(static_cast<std::size_t>(m));
                tables.count.resize(static_cast<std::size_t>(m));
                for (int i = 0; i < m; ++i) {
                    Votes lo = std::max<Votes>(0, c[static_cast<std::size_t>(i)] - K);
                    tables.lo[static_cast<std::size_t>(i)] = lo;
                    for (Votes y = lo; y <= c[static_cast<std::size_t>(i)] + K; ++y) {
                        int cnt = 0;
                        if (y > 0 && y >= d.threshold && y <= n_final) {
                            __int128 share = static_cast<__int128>(kappa) * y;
                            int lqu = static_cast<int>(share / n_final);
                            Votes rem = static_cast<Votes>(share % n_final);
                            bool fav = i <= t;
                            int extra = (fav ? rem >= pivot : rem > pivot) ? 1 : 0;
                            cnt = std::min(kappa, lqu + extra);
                        }
                        tables.count[static_cast<std::size_t>(i)].push_back(cnt);
                    }
                }
                std::vector<int> specials;
                if (constructive) specials.push_back(star);
                else
                    for (int w = 0; w < m; ++w)
                        if (w != star) specials.push_back(w);
                for (int special : specials) {
                    for (int lambda = 1; lambda <= kappa; ++lambda) {
                        if (!winner_guess_feasible(tables, special, star, lambda)) continue;
                        WinnerDpSpec spec{&c,     &tables, K,    kappa,      d.threshold,
                                          special, lambda, star, constructive, n_final};
                        WinnerWitness w = run_winner_dp(spec);
                        if (w.yes) return Decision{true, plan_from_delta(w.delta)};
                    }
                }
            }
        }
    }
    return Decision{false, {}};
}

bool winner_objective_now(const District& d, const Method& method, int star, Direction dir) {
    SeatAllocation seats = evaluate_district(d, method);
    return objective_satisfied(seats, star, dir, Objective::winner());
}

Decision winner_solve(const District& d, const Method& method, int star, Votes budget,
                      Direction direction) {
    if (winner_objective_now(d, method, star, direction)) return Decision{true, {}};
    if (d.profile.parties() == 1) return Decision{false, {}};
    if (method.kind() == Method::Kind::Divisor)
        return winner_solve_divisor(d, method.sequence(), star, budget, direction);
    return winner_solve_lrm(d, star, budget, direction);
}

}  // namespace

Decision winner_ab(const District& d, const Method& method, int star, Votes budget) {
    if (method.kind() == Method::Kind::Fptp) return fptp_ab(d, star, budget);
    return winner_solve(d, method, star, budget, Direction::Constructive);
}

Decision winner_dab_divisor(const District& d, const DivisorSequence& seq, int star,
                            Votes budget) {
    return winner_solve(d, Method::divisor(seq), star, budget, Direction::Destructive);
}

Decision winner_dab_lrm(const District& d, int star, Votes budget) {
    return winner_solve(d, Method::lrm(), star, budget, Direction::Destructive);
}

Decision solve_single(const BriberyInstance& instance) {
    if (instance.election.districts.size() != 1)
        throw std::invalid_argument("single-district solver got a multi-district instance");
    const District& d = instance.election.districts.front();
    const int m = d.profile.parties();
    if (instance.star < 0 || instance.star >= m)
        throw std::invalid_argument("distinguished party out of range");
    if (instance.budget < 0) throw std::invalid_argument("negative budget");

    const bool constructive = instance.direction == Direction::Constructive;
    const bool seats_goal = instance.objective.kind == Objective::Kind::Seats;

    if (instance.method.kind() == Method::Kind::Fptp) {
        if (constructive) {
            if (seats_goal && (instance.objective.ell < 1 || instance.objective.ell > d.seats))
                throw std::invalid_argument("constructive target out of range");
            return fptp_ab(d, instance.star, instance.budget);
        }
        return fptp_dab(d, instance.star, instance.objective, instance.budget);
    }

    if (seats_goal) {
        const int ell = instance.objective.ell;
        if (instance.method.kind() == Method::Kind::Lrm)
            return constructive ? lrm_ab(d, instance.star, ell, instance.budget)
                                : lrm_dab(d, instance.star, ell, instance.budget);
        const DivisorSequence& seq = instance.method.sequence();
        return constructive ? divisor_ab(d, seq, instance.star, ell, instance.budget)
                            : divisor_dab(d, seq, instance.star, ell, instance.budget);
    }
    return constructive ? winner_ab(d, instance.method, instance.star, instance.budget)
                        : winner_solve(d, instance.method, instance.star, instance.budget,
                          Direction::Destructive);
}

BudgetSearchResult min_budget_single(const BriberyInstance& instance_without_budget) {
    BriberyInstance probe = instance_without_budget;
    const Votes n = probe.election.total_votes();
    probe.budget = n;
    Decision at_max = solve_single(probe);
    if (!at_max.yes) return BudgetSearchResult{Cost::unbounded(), {}};

    Votes lo = 0, hi = n;
    Decision witness = at_max;
    while (lo < hi) {
        Votes mid = lo + (hi - lo) / 2;
        probe.budget = mid;
        Decision dec = solve_single(probe);
        if (dec.yes) {
            hi = mid;
            witness = dec;
        } else {
            lo = mid + 1;
        }
    }
    return BudgetSearchResult{Cost(lo), witness.plan};
}

int max_seat_delta_single(const Election& election, const Method& method, int star,
                          Direction direction, Votes budget) {
    if (election.districts.size() != 1)
        throw std::invalid_argument("single-district helper got a multi-district instance");
    const District& d = election.districts.front();
    const int kappa = d.seats;
    const int current = evaluate_district(d, method).seats[static_cast<std::size_t>(star)];

    BriberyInstance probe;
    probe.election = election;
    probe.method = method;
    probe.star = star;
    probe.direction = direction;
    probe.budget = budget;

    if (direction == Direction::Constructive) {
        probe.objective = Objective::seats(1);
        if (!solve_single(probe).yes) return 0;
        int lo = 1, hi = kappa;  // largest ell with YES
        while (lo < hi) {
            int mid = lo + (hi - lo + 1) / 2;
            probe.objective = Objective::seats(mid);
            if (solve_single(probe).yes) lo = mid;
            else hi = mid - 1;
        }
        return std::max(0, lo - current);
    }
    int lo = 0, hi = current;  // smallest ell with YES; ell = current always YES
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        probe.objective = Objective::seats(mid);
        if (solve_single(probe).yes) hi = mid;
        else lo = mid + 1;
    }
    return current - lo;
}

}  // namespace seatstorm
