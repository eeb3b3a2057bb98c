#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace ksub {

// Exact rational, always canonical (gcd(|num|, den) = 1, den >= 1).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Extended rational value: a finite exact rational or +infinity. Addition
// absorbs infinity; negative infinity is unrepresentable, so subtraction
// demands finite operands.
class CostValue {
public:
    CostValue() : finite_(0) {}
    CostValue(const Rational& q) : finite_(q) {}
    CostValue(long v) : finite_(v) {}

    static CostValue infinity() {
        CostValue v;
        v.infinite_ = true;
        return v;
    }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }

    const Rational& rational() const;

    CostValue operator+(const CostValue& o) const;
    CostValue operator-(const CostValue& o) const;  // finite operands only

    bool operator==(const CostValue& o) const {
        if (infinite_ || o.infinite_) return infinite_ == o.infinite_;
        return finite_ == o.finite_;
    }
    bool operator<(const CostValue& o) const {
        if (infinite_) return false;
        if (o.infinite_) return true;
        return finite_ < o.finite_;
    }
    bool operator<=(const CostValue& o) const { return *this < o || *this == o; }
    bool operator>(const CostValue& o) const { return o < *this; }
    bool operator>=(const CostValue& o) const { return o <= *this; }

    // "p", "p/q", or "inf".
    std::string str() const;

private:
    Rational finite_;
    bool infinite_ = false;
};

// The two right-hand-side forms of the relaxation inequalities:
// (a+b)/2 when meet and join coincide, a+b-c otherwise. Infinite arguments
// are rejected.
CostValue rhs_avg(const CostValue& a, const CostValue& b);
CostValue rhs_general(const CostValue& a, const CostValue& b, const CostValue& c);

// Accepts "p", "p/q", finite decimals like "-1.25" (converted exactly), and
// the token "inf". Throws std::invalid_argument on anything else.
CostValue parse_value(std::string_view token);

std::string format_value(const CostValue& v);
std::string format_rational(const Rational& q);

}  // namespace ksub
