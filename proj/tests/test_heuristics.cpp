#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seatstorm/heuristics.hpp"
#include "seatstorm/oracle.hpp"
#include "seatstorm/solvers_multi.hpp"

using namespace seatstorm;

namespace {

Election single(std::vector<Votes> counts, Votes tau, int seats) {
    return Election::single(TopChoiceProfile{std::move(counts)}, tau, seats);
}

}  // namespace

TEST_CASE("every strategy budget replays to the goal") {
    Election e = single({5, 3, 1}, 0, 2);
    const Method method = Method::dhondt();
    for (StrategyKind kind : {StrategyKind::Optimal, StrategyKind::Balanced,
                              StrategyKind::WeakestRival, StrategyKind::StrongestRival}) {
        StrategyOutcome r = run_strategy(e, method, 1, kind, Direction::Constructive);
        REQUIRE_FALSE(r.budget.is_unbounded());
        Election bribed = apply_plan(e, r.plan);
        int before = evaluate_election(e, method).seats[1];
        int after = evaluate_election(bribed, method).seats[1];
        CHECK(after >= before + 1);
        CHECK(r.plan.cost() == r.budget.value());
    }
}

TEST_CASE("optimal strategy is never beaten") {
    std::vector<Election> fixtures = {
        single({9, 6, 4, 2}, 2, 3),
        single({12, 5, 3}, 3, 4),
        single({7, 7, 2}, 0, 2),
    };
    for (const auto& e : fixtures) {
        for (Direction dir : {Direction::Constructive, Direction::Destructive}) {
            SeatAllocation now = evaluate_election(e, Method::dhondt());
            for (int star = 0; star < e.num_parties; ++star) {
                if (dir == Direction::Destructive && now.seats[static_cast<std::size_t>(star)] < 1)
                    continue;
                if (dir == Direction::Constructive &&
                    now.seats[static_cast<std::size_t>(star)] >= e.total_seats())
                    continue;
                StrategyOutcome opt =
                    run_strategy(e, Method::dhondt(), star, StrategyKind::Optimal, dir);
                for (StrategyKind kind : {StrategyKind::Balanced, StrategyKind::WeakestRival,
                                          StrategyKind::StrongestRival}) {
                    StrategyOutcome r = run_strategy(e, Method::dhondt(), star, kind, dir);
                    if (r.budget.is_unbounded()) continue;
                    REQUIRE_FALSE(opt.budget.is_unbounded());
                    CHECK(opt.budget.value() <= r.budget.value());
                }
            }
        }
    }
}

TEST_CASE("threshold push makes all strategies coincide") {
    // a party holding exactly one seat just above the threshold loses it the
    // same way under every strategy: drop below the threshold
    Election e = single({10, 5, 3}, 5, 4);
    SeatAllocation now = evaluate_election(e, Method::dhondt());
    REQUIRE(now.seats[1] == 1);
    for (StrategyKind kind : {StrategyKind::Optimal, StrategyKind::Balanced,
                              StrategyKind::WeakestRival, StrategyKind::StrongestRival}) {
        StrategyOutcome r = run_strategy(e, Method::dhondt(), 1, kind, Direction::Destructive);
        REQUIRE_FALSE(r.budget.is_unbounded());
        CHECK(r.budget.value() == 1);  // 4 - 4 + 1
    }
}

TEST_CASE("balanced schedule conserves votes and caps sources") {
    Election e = single({8, 5, 3, 2}, 0, 3);
    StrategyOutcome r = run_strategy(e, Method::lrm(), 0, StrategyKind::Balanced,
                                     Direction::Constructive);
    REQUIRE_FALSE(r.budget.is_unbounded());
    Election bribed = apply_plan(e, r.plan);  // apply_plan validates sources
    CHECK(bribed.total_votes() == e.total_votes());
}

TEST_CASE("weakest and strongest rival schedules rank by original counts") {
    Election e = single({6, 2, 5}, 0, 2);
    StrategyOutcome w =
        run_strategy(e, Method::dhondt(), 0, StrategyKind::WeakestRival, Direction::Constructive);
    REQUIRE_FALSE(w.budget.is_unbounded());
    REQUIRE_FALSE(w.plan.moves.empty());
    CHECK(w.plan.moves.front().from == 1);

    StrategyOutcome s = run_strategy(e, Method::dhondt(), 0, StrategyKind::StrongestRival,
                                     Direction::Constructive);
    REQUIRE_FALSE(s.budget.is_unbounded());
    REQUIRE_FALSE(s.plan.moves.empty());
    CHECK(s.plan.moves.front().from == 2);
}

TEST_CASE("infeasible when the schedule exhausts movable votes") {
    Election e = single({4, 0}, 0, 2);
    StrategyOutcome r =
        run_strategy(e, Method::dhondt(), 0, StrategyKind::Balanced, Direction::Constructive);
    CHECK(r.budget.is_unbounded());
}

TEST_CASE("effectiveness table ratios") {
    Election e = single({9, 6, 4, 2}, 2, 3);
    EffectivenessTable t = effectiveness_ratios(e, Method::dhondt(), Direction::Constructive);
    REQUIRE(t.strategies.size() == 4);
    REQUIRE(t.cells.size() == 4);
    // the optimal row is all ones by definition
    for (const auto& cell : t.cells[0]) CHECK(cell.ratio == doctest::Approx(1.0));
    // every other ratio is at least one (solver optimality)
    for (std::size_t s = 1; s < t.cells.size(); ++s)
        for (const auto& cell : t.cells[s]) CHECK(cell.ratio >= 1.0 - 1e-12);
}

TEST_CASE("multi-district heuristics pick a district and reach the goal") {
    Election e;
    e.num_parties = 3;
    e.districts.push_back(District{TopChoiceProfile{{6, 5, 1}}, 0, 2});
    e.districts.push_back(District{TopChoiceProfile{{9, 2, 2}}, 0, 2});
    for (StrategyKind kind : {StrategyKind::Balanced, StrategyKind::WeakestRival,
                              StrategyKind::StrongestRival}) {
        StrategyOutcome r = run_strategy(e, Method::dhondt(), 1, kind, Direction::Constructive);
        REQUIRE_FALSE(r.budget.is_unbounded());
        Election bribed = apply_plan(e, r.plan);
        CHECK(evaluate_election(bribed, Method::dhondt()).seats[1] >=
              evaluate_election(e, Method::dhondt()).seats[1] + 1);
        // district-local schedule: all moves in one district
        for (const auto& mv : r.plan.moves) CHECK(mv.district == r.plan.moves.front().district);
    }
}

TEST_CASE("table ratios recompute from the raw budgets") {
    Election e = single({12, 5, 3}, 3, 4);
    EffectivenessTable t = effectiveness_ratios(e, Method::dhondt(), Direction::Constructive);
    for (std::size_t s = 0; s < t.strategies.size(); ++s)
        for (std::size_t col = 1; col < t.columns.size(); ++col) {
            double strat = static_cast<double>(t.cells[s][col].budget.value());
            double opt = static_cast<double>(t.cells[0][col].budget.value());
            double expect = opt == 0 ? 1.0 : strat / opt;
            CHECK(t.cells[s][col].ratio == doctest::Approx(expect));
        }
}
