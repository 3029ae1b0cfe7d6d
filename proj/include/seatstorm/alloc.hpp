#pragma once

#include <cstdint>
#include <vector>

#include "seatstorm/core.hpp"
#include "seatstorm/rational.hpp"

namespace seatstorm {

/// Aggregated top-choice ballots: counts[i] is the number of ballots whose
/// top choice is party i+1.
struct TopChoiceProfile {
    std::vector<Votes> counts;

    Votes total() const {
        Votes n = 0;
        for (Votes c : counts) n += c;
        return n;
    }
    int parties() const { return static_cast<int>(counts.size()); }
};

/// Full strict rankings with multiplicities. ranking holds 0-based party
/// ids from most to least preferred and must be a permutation of the
/// whole party set.
struct RankedBallot {
    std::vector<int> ranking;
    Votes multiplicity = 1;
};

struct RankedProfile {
    int num_parties = 0;
    std::vector<RankedBallot> ballots;

    Votes total() const {
        Votes n = 0;
        for (const auto& b : ballots) n += b.multiplicity;
        return n;
    }

    TopChoiceProfile top_choices() const;
};

struct ThresholdSpec {
    enum class Kind { Absolute, Relative };

    static ThresholdSpec absolute(Votes t);
    static ThresholdSpec relative(const Rational& fraction);

    Kind kind = Kind::Absolute;
    Votes absolute_value = 0;
    Rational fraction;  // within [0,1]
};

struct UndefinedSupportError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Absolute thresholds pass through; a relative threshold rho over n
/// ballots becomes ceil(rho*n), so a party with exactly rho*n top choices
/// still qualifies (p_i >= ceil(rho*n) <=> p_i >= rho*n for integers).
Votes resolve_threshold(const ThresholdSpec& spec, Votes n);

/// Top-choice mode: sigma(P_i) = p_i when p_i >= tau, else 0.
SupportAllocation top_choice_support(const TopChoiceProfile& profile, Votes tau);

/// Second-chance mode: the qualifying set P_tau is fixed from original top
/// choices; every ballot then supports its most preferred qualifying party.
/// One transfer pass, no cascading. Errors when P_tau is empty.
SupportAllocation second_chance_support(const RankedProfile& profile, Votes tau);

}  // namespace seatstorm
