#include "seatstorm/alloc.hpp"

#include <stdexcept>

namespace seatstorm {

TopChoiceProfile RankedProfile::top_choices() const {
    TopChoiceProfile p;
    p.counts.assign(static_cast<std::size_t>(num_parties), 0);
    for (const auto& b : ballots) {
        if (static_cast<int>(b.ranking.size()) != num_parties)
            throw std::invalid_argument("ranking does not cover the full party set");
        p.counts[static_cast<std::size_t>(b.ranking.front())] += b.multiplicity;
    }
    return p;
}

ThresholdSpec ThresholdSpec::absolute(Votes t) {
    if (t < 0) throw std::invalid_argument("absolute threshold must be nonnegative");
    ThresholdSpec s;
    s.kind = Kind::Absolute;
    s.absolute_value = t;
    return s;
}

ThresholdSpec ThresholdSpec::relative(const Rational& fraction) {
    if (fraction < Rational(0) || fraction > Rational(1))
        throw std::invalid_argument("relative threshold must lie in [0,1]");
    ThresholdSpec s;
    s.kind = Kind::Relative;
    s.fraction = fraction;
    return s;
}

Votes resolve_threshold(const ThresholdSpec& spec, Votes n) {
    if (spec.kind == ThresholdSpec::Kind::Absolute) return spec.absolute_value;
    if (n < 1) throw std::invalid_argument("relative threshold needs at least one ballot");
    return (Rational(n) * spec.fraction).ceil();
}

SupportAllocation top_choice_support(const TopChoiceProfile& profile, Votes tau) {
    SupportAllocation sigma;
    sigma.support.resize(profile.counts.size());
    for (std::size_t i = 0; i < profile.counts.size(); ++i)
        sigma.support[i] = profile.counts[i] >= tau ? profile.counts[i] : 0;
    return sigma;
}

SupportAllocation second_chance_support(const RankedProfile& profile, Votes tau) {
    TopChoiceProfile tops = profile.top_choices();
    std::vector<bool> qualified(tops.counts.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < tops.counts.size(); ++i) {
        qualified[i] = tops.counts[i] >= tau;
        any = any || qualified[i];
    }
    if (!any) throw UndefinedSupportError("no party reaches the threshold");

    SupportAllocation sigma;
    sigma.support.assign(tops.counts.size(), 0);
    for (const auto& b : profile.ballots) {
        for (int party : b.ranking) {
            if (qualified[static_cast<std::size_t>(party)]) {
                sigma.support[static_cast<std::size_t>(party)] += b.multiplicity;
                break;
            }
        }
    }
    return sigma;
}

}  // namespace seatstorm
