#include "coopshare/rational.hpp"

#include "coopshare/errors.hpp"

#include <cctype>
#include <ostream>

namespace coopshare {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw Error(ErrorCode::ParseError, "rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw Error(ErrorCode::InternalError, "division by zero rational");
    value_ /= o.value_;
    return *this;
}

namespace {

bool valid_integer_token(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    const std::string den = slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw Error(ErrorCode::ParseError, "malformed rational '" + text + "'");
    Rational r;
    r.value_ = mpq_class(mpz_class(num), mpz_class(den));
    if (r.value_.get_den() == 0)
        throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    r.value_.canonicalize();
    return r;
}

std::string Rational::str() const {
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace coopshare
