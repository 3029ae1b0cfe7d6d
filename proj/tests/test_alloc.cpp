#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seatstorm/alloc.hpp"

using namespace seatstorm;

namespace {

// The 2052-ballot running example: eight ballot groups over five parties.
RankedProfile running_example_ballots() {
    RankedProfile p;
    p.num_parties = 5;
    auto add = [&](std::vector<int> ranking, Votes mult) {
        p.ballots.push_back(RankedBallot{std::move(ranking), mult});
    };
    add({0, 1, 2, 4, 3}, 604);
    add({1, 0, 4, 3, 2}, 215);
    add({2, 1, 0, 3, 4}, 355);
    add({0, 4, 2, 1, 3}, 300);
    add({3, 1, 2, 0, 4}, 178);
    add({1, 3, 2, 0, 4}, 148);
    add({0, 2, 3, 4, 1}, 200);
    add({4, 1, 2, 3, 0}, 52);
    return p;
}

}  // namespace

TEST_CASE("resolve_threshold") {
    CHECK(resolve_threshold(ThresholdSpec::relative(Rational(1, 20)), 2000) == 100);
    CHECK(resolve_threshold(ThresholdSpec::relative(Rational(0)), 12345) == 0);
    CHECK(resolve_threshold(ThresholdSpec::relative(Rational::parse("0.0325")), 4764742) ==
          154855);
    CHECK(resolve_threshold(ThresholdSpec::absolute(42), 7) == 42);
    CHECK_THROWS(ThresholdSpec::relative(Rational(3, 2)));
    CHECK_THROWS(ThresholdSpec::relative(Rational(-1, 2)));
    CHECK_THROWS(resolve_threshold(ThresholdSpec::relative(Rational(1, 2)), 0));
}

TEST_CASE("top-choice support on the running example") {
    TopChoiceProfile profile;
    profile.counts = {1104, 363, 355, 178, 52};
    SupportAllocation sigma = top_choice_support(profile, 100);
    CHECK(sigma.support == std::vector<Votes>{1104, 363, 355, 178, 0});
    CHECK(sigma.total() == 2000);

    CHECK(top_choice_support(profile, 0).support == profile.counts);

    TopChoiceProfile small;
    small.counts = {3, 2, 2};
    CHECK(top_choice_support(small, 3).support == std::vector<Votes>{3, 0, 0});
}

TEST_CASE("ranked profile top choices match the running example tallies") {
    RankedProfile p = running_example_ballots();
    CHECK(p.total() == 2052);
    CHECK(p.top_choices().counts == std::vector<Votes>{1104, 363, 355, 178, 52});
}

TEST_CASE("second-chance support transfers the eliminated party's ballots") {
    RankedProfile p = running_example_ballots();
    SupportAllocation sigma = second_chance_support(p, 100);
    CHECK(sigma.support == std::vector<Votes>{1104, 415, 355, 178, 0});
    CHECK(sigma.total() == 2052);
}

TEST_CASE("second-chance with zero threshold reduces to top choices") {
    RankedProfile p = running_example_ballots();
    SupportAllocation sc = second_chance_support(p, 0);
    SupportAllocation tc = top_choice_support(p.top_choices(), 0);
    CHECK(sc.support == tc.support);
}

TEST_CASE("second-chance direct transfer on a small profile") {
    RankedProfile p;
    p.num_parties = 3;
    p.ballots.push_back(RankedBallot{{0, 1, 2}, 3});
    p.ballots.push_back(RankedBallot{{1, 0, 2}, 3});
    p.ballots.push_back(RankedBallot{{2, 0, 1}, 2});
    SupportAllocation sigma = second_chance_support(p, 3);
    CHECK(sigma.support == std::vector<Votes>{5, 3, 0});
}

TEST_CASE("second-chance errors when nobody qualifies") {
    RankedProfile p;
    p.num_parties = 2;
    p.ballots.push_back(RankedBallot{{0, 1}, 2});
    CHECK_THROWS_AS(second_chance_support(p, 5), UndefinedSupportError);
}

TEST_CASE("second-chance never lowers a qualifying party's support") {
    RankedProfile p = running_example_ballots();
    for (Votes tau : {0, 50, 100, 200, 360, 1000}) {
        TopChoiceProfile tops = p.top_choices();
        bool any = false;
        for (Votes c : tops.counts) any = any || c >= tau;
        if (!any) continue;
        SupportAllocation sc = second_chance_support(p, tau);
        SupportAllocation tc = top_choice_support(tops, tau);
        Votes total = 0;
        for (std::size_t i = 0; i < sc.support.size(); ++i) {
            if (tops.counts[i] >= tau) CHECK(sc.support[i] >= tc.support[i]);
            total += sc.support[i];
        }
        CHECK(total == p.total());
    }
}
