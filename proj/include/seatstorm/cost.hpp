#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace seatstorm {

/// Vote-move cost that can be unbounded. Unreachable configurations carry
/// the unbounded marker instead of a sentinel integer, so arithmetic on
/// them can never silently produce a "cheap" bogus value.
class Cost {
public:
    constexpr Cost() : value_(0), unbounded_(false) {}
    constexpr Cost(std::int64_t v) : value_(v), unbounded_(false) {}

    static constexpr Cost unbounded() {
        Cost c;
        c.unbounded_ = true;
        return c;
    }

    bool is_unbounded() const { return unbounded_; }
    std::int64_t value() const {
        if (unbounded_) throw std::logic_error("value() on unbounded cost");
        return value_;
    }

    friend Cost operator+(const Cost& a, const Cost& b) {
        if (a.unbounded_ || b.unbounded_) return unbounded();
        return Cost(a.value_ + b.value_);
    }

    bool within(std::int64_t budget) const {
        return !unbounded_ && value_ <= budget;
    }

    friend bool operator<(const Cost& a, const Cost& b) {
        if (a.unbounded_) return false;
        if (b.unbounded_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator==(const Cost& a, const Cost& b) {
        if (a.unbounded_ != b.unbounded_) return false;
        return a.unbounded_ || a.value_ == b.value_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Cost& c) {
        if (c.unbounded_) return os << "unbounded";
        return os << c.value_;
    }

private:
    std::int64_t value_;
    bool unbounded_;
};

inline Cost min(const Cost& a, const Cost& b) { return a < b ? a : b; }

}  // namespace seatstorm
