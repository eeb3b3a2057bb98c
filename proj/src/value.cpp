#include "ksub/value.hpp"

#include <cctype>
#include <stdexcept>

namespace ksub {

const Rational& CostValue::rational() const {
    if (infinite_)
        throw std::domain_error("value is +inf, not a rational");
    return finite_;
}

CostValue CostValue::operator+(const CostValue& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return CostValue(Rational(finite_ + o.finite_));
}

CostValue CostValue::operator-(const CostValue& o) const {
    if (infinite_ || o.infinite_)
        throw std::domain_error("subtraction requires finite operands");
    return CostValue(Rational(finite_ - o.finite_));
}

std::string CostValue::str() const { return format_value(*this); }

CostValue rhs_avg(const CostValue& a, const CostValue& b) {
    if (a.is_infinite() || b.is_infinite())
        throw std::domain_error("rhs_avg requires finite operands");
    Rational r = (a.rational() + b.rational()) / 2;
    return CostValue(r);
}

CostValue rhs_general(const CostValue& a, const CostValue& b, const CostValue& c) {
    if (a.is_infinite() || b.is_infinite() || c.is_infinite())
        throw std::domain_error("rhs_general requires finite operands");
    return CostValue(Rational(a.rational() + b.rational() - c.rational()));
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

CostValue parse_value(std::string_view token) {
    if (token == "inf" || token == "+inf")
        return CostValue::infinity();

    std::string_view body = token;
    bool negative = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        negative = body[0] == '-';
        body.remove_prefix(1);
    }
    if (body.empty())
        throw std::invalid_argument("empty value token");

    std::string num, den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view p = body.substr(0, slash);
        std::string_view q = body.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q))
            throw std::invalid_argument("bad fraction: " + std::string(token));
        num = std::string(p);
        den = std::string(q);
        if (mpz_class(den, 10) == 0)
            throw std::invalid_argument("zero denominator: " + std::string(token));
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view ip = body.substr(0, dot);
        std::string_view fp = body.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp)))
            throw std::invalid_argument("bad decimal: " + std::string(token));
        num = std::string(ip) + std::string(fp);
        if (num.empty())
            throw std::invalid_argument("bad decimal: " + std::string(token));
        den = "1" + std::string(fp.size(), '0');
    } else {
        if (!all_digits(body))
            throw std::invalid_argument("bad value: " + std::string(token));
        num = std::string(body);
    }

    Rational q{mpz_class(num, 10), mpz_class(den, 10)};
    q.canonicalize();
    if (negative) q = -q;
    return CostValue(q);
}

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_value(const CostValue& v) {
    if (v.is_infinite()) return "inf";
    return format_rational(v.rational());
}

}  // namespace ksub
