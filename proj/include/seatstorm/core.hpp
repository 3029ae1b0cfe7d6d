#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seatstorm/rational.hpp"

namespace seatstorm {

using Votes = std::int64_t;

/// Parties are identified by their 1-based index, which is also their
/// position in the global tie-break order: wherever fraction values,
/// remainders or supports tie, the party with the smaller index wins.
struct Party {
    int index = 0;  // 1-based, contiguous
    std::string name;
};

/// Thrown when no party reaches the threshold and a seat allocation is
/// requested anyway.
struct UndefinedAllocationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Strictly increasing divisor sequence d_1 < d_2 < ..., d_1 >= 1.
/// The presets are D'Hondt (1,2,3,...) and Sainte-Lague (1,3,5,...);
/// custom sequences carry explicit exact rational values.
class DivisorSequence {
public:
    enum class Kind { DHondt, SainteLague, Custom };

    static DivisorSequence dhondt() { return DivisorSequence(Kind::DHondt); }
    static DivisorSequence sainte_lague() { return DivisorSequence(Kind::SainteLague); }
    static DivisorSequence custom(std::vector<Rational> values);

    Kind kind() const { return kind_; }

    /// d_i for 1-based position i. Custom sequences are only defined for
    /// the positions they list.
    Rational value(int i) const;

    std::string name() const;

private:
    explicit DivisorSequence(Kind k) : kind_(k) {}

    Kind kind_;
    std::vector<Rational> custom_;
};

class Method {
public:
    enum class Kind { Fptp, Divisor, Lrm };

    static Method fptp() { return Method(Kind::Fptp); }
    static Method lrm() { return Method(Kind::Lrm); }
    static Method divisor(DivisorSequence seq) {
        Method m(Kind::Divisor);
        m.seq_ = std::move(seq);
        return m;
    }
    static Method dhondt() { return divisor(DivisorSequence::dhondt()); }
    static Method sainte_lague() { return divisor(DivisorSequence::sainte_lague()); }

    Kind kind() const { return kind_; }
    bool is_divisor() const { return kind_ == Kind::Divisor; }
    const DivisorSequence& sequence() const;

    std::string name() const;

private:
    explicit Method(Kind k) : kind_(k), seq_(DivisorSequence::dhondt()) {}

    Kind kind_;
    DivisorSequence seq_;
};

/// Per-party support after threshold/mode processing. Parties below the
/// threshold at allocation time hold zero. total() is the LRM denominator.
struct SupportAllocation {
    std::vector<Votes> support;

    Votes total() const {
        Votes n = 0;
        for (Votes s : support) n += s;
        return n;
    }
    int parties() const { return static_cast<int>(support.size()); }
};

struct SeatAllocation {
    std::vector<int> seats;

    int total() const {
        int t = 0;
        for (int s : seats) t += s;
        return t;
    }
    int parties() const { return static_cast<int>(seats.size()); }
};

struct ApportionmentProblem {
    SupportAllocation sigma;
    Votes threshold = 0;  // absolute
    int seats = 1;        // kappa
};

/// d_i of the sequence, exact. Errors on i < 1.
Rational divisor_value(const DivisorSequence& seq, int i);

/// Threshold-aware resolute seat allocation.
///   Divisor: the kappa largest fraction-list entries sigma(P)/d_z, ties by
///     (party index, then divisor position).
///   LRM: lower-quota seats floor(kappa*sigma/n), then remainder seats to the
///     largest remainders among above-threshold parties, ties by index.
///   FPTP: every seat to the tie-break-minimal strongest party.
/// Throws UndefinedAllocationError when no party has positive support.
SeatAllocation apportion(const ApportionmentProblem& problem, const Method& method);

/// Component-wise sum over a shared party universe; shorter vectors
/// contribute zero for their missing parties.
SeatAllocation aggregate_districts(const std::vector<SeatAllocation>& allocations);

}  // namespace seatstorm
