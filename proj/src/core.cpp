#include "seatstorm/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace seatstorm {

DivisorSequence DivisorSequence::custom(std::vector<Rational> values) {
    if (values.empty())
        throw std::invalid_argument("custom divisor sequence needs at least one value");
    if (values.front() < Rational(1))
        throw std::invalid_argument("divisor sequence must start at d_1 >= 1");
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i - 1] < values[i]))
            throw std::invalid_argument("divisor sequence must be strictly increasing");
    }
    DivisorSequence seq(Kind::Custom);
    seq.custom_ = std::move(values);
    return seq;
}

Rational DivisorSequence::value(int i) const {
    if (i < 1) throw std::invalid_argument("divisor position must be >= 1");
    switch (kind_) {
        case Kind::DHondt:
            return Rational(i);
        case Kind::SainteLague:
            return Rational(2 * static_cast<std::int64_t>(i) - 1);
        case Kind::Custom:
            if (static_cast<std::size_t>(i) > custom_.size())
                throw std::invalid_argument("custom divisor sequence has no position " +
                                            std::to_string(i));
            return custom_[static_cast<std::size_t>(i - 1)];
    }
    throw std::logic_error("unreachable");
}

std::string DivisorSequence::name() const {
    switch (kind_) {
        case Kind::DHondt: return "dhondt";
        case Kind::SainteLague: return "sainte-lague";
        case Kind::Custom: return "custom";
    }
    return "?";
}

const DivisorSequence& Method::sequence() const {
    if (kind_ != Kind::Divisor)
        throw std::logic_error("method has no divisor sequence");
    return seq_;
}

std::string Method::name() const {
    switch (kind_) {
        case Kind::Fptp: return "fptp";
        case Kind::Lrm: return "lrm";
        case Kind::Divisor: return seq_.name();
    }
    return "?";
}

Rational divisor_value(const DivisorSequence& seq, int i) { return seq.value(i); }

namespace {

// Effective support: a party counts only when it clears the threshold.
std::vector<Votes> effective_support(const ApportionmentProblem& p) {
    std::vector<Votes> s(p.sigma.support.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        s[i] = p.sigma.support[i] >= p.threshold ? p.sigma.support[i] : 0;
    return s;
}

SeatAllocation apportion_fptp(const std::vector<Votes>& s, int kappa) {
    int best = -1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] <= 0) continue;
        if (best < 0 || s[i] > s[static_cast<std::size_t>(best)]) best = static_cast<int>(i);
    }
    if (best < 0) throw UndefinedAllocationError("no party above the threshold");
    SeatAllocation a;
    a.seats.assign(s.size(), 0);
    a.seats[static_cast<std::size_t>(best)] = kappa;
    return a;
}

// Highest-averages greedy: award each seat to the party whose next fraction
// sigma/d_{taken+1} is largest; ties go to the lower index. Equivalent to
// picking the kappa largest fraction-list entries under the stated tie order.
SeatAllocation apportion_divisor(const std::vector<Votes>& s, int kappa,
                                 const DivisorSequence& seq) {
    const int m = static_cast<int>(s.size());
    bool any = false;
    for (Votes v : s) any = any || v > 0;
    if (!any) throw UndefinedAllocationError("no party above the threshold");

    SeatAllocation a;
    a.seats.assign(s.size(), 0);
    std::vector<Rational> div(static_cast<std::size_t>(kappa) + 1, Rational(1));
    for (int z = 1; z <= kappa; ++z) div[static_cast<std::size_t>(z)] = seq.value(z);

    for (int seat = 0; seat < kappa; ++seat) {
        int best = -1;
        for (int i = 0; i < m; ++i) {
            if (s[static_cast<std::size_t>(i)] <= 0) continue;
            if (best < 0) {
                best = i;
                continue;
            }
            const auto& di = div[static_cast<std::size_t>(a.seats[static_cast<std::size_t>(i)] + 1)];
            const auto& db = div[static_cast<std::size_t>(a.seats[static_cast<std::size_t>(best)] + 1)];
            if (compare_fractions(s[static_cast<std::size_t>(i)], di,
                                  s[static_cast<std::size_t>(best)], db) > 0)
                best = i;
        }
        a.seats[static_cast<std::size_t>(best)] += 1;
    }
    return a;
}

SeatAllocation apportion_lrm(const std::vector<Votes>& s, int kappa) {
    const int m = static_cast<int>(s.size());
    Votes n = 0;
    for (Votes v : s) n += v;
    if (n == 0) throw UndefinedAllocationError("no party above the threshold");

    SeatAllocation a;
    a.seats.assign(s.size(), 0);
    std::vector<Votes> rem_num(s.size(), 0);  // remainder numerators over n
    int assigned = 0;
    for (int i = 0; i < m; ++i) {
        if (s[static_cast<std::size_t>(i)] <= 0) continue;
        __int128 share = static_cast<__int128>(kappa) * s[static_cast<std::size_t>(i)];
        Votes lqu = static_cast<Votes>(share / n);
        a.seats[static_cast<std::size_t>(i)] = static_cast<int>(lqu);
        rem_num[static_cast<std::size_t>(i)] = static_cast<Votes>(share % n);
        assigned += static_cast<int>(lqu);
    }
    int rest = kappa - assigned;
    std::vector<int> order;
    for (int i = 0; i < m; ++i)
        if (s[static_cast<std::size_t>(i)] > 0) order.push_back(i);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return rem_num[static_cast<std::size_t>(x)] > rem_num[static_cast<std::size_t>(y)];
    });
    for (int r = 0; r < rest; ++r)
        a.seats[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] += 1;
    return a;
}

}  // namespace

SeatAllocation apportion(const ApportionmentProblem& problem, const Method& method) {
    if (problem.seats < 1) throw std::invalid_argument("seat count must be >= 1");
    std::vector<Votes> s = effective_support(problem);
    switch (method.kind()) {
        case Method::Kind::Fptp:
            return apportion_fptp(s, problem.seats);
        case Method::Kind::Divisor:
            return apportion_divisor(s, problem.seats, method.sequence());
        case Method::Kind::Lrm:
            return apportion_lrm(s, problem.seats);
    }
    throw std::logic_error("unreachable");
}

SeatAllocation aggregate_districts(const std::vector<SeatAllocation>& allocations) {
    SeatAllocation total;
    for (const auto& a : allocations) {
        if (a.seats.size() > total.seats.size()) total.seats.resize(a.seats.size(), 0);
        for (std::size_t i = 0; i < a.seats.size(); ++i) total.seats[i] += a.seats[i];
    }
    return total;
}

}  // namespace seatstorm
