#include "lcc/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace lcc {

Scalar::Scalar(const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw std::invalid_argument("Scalar: zero denominator");
    v_ = boost::multiprecision::cpp_rational(num, den); // normalizes sign and gcd
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.v_ = -v_;
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero())
        throw std::invalid_argument("Scalar: division by zero");
    v_ /= o.v_;
    return *this;
}

Scalar Scalar::reciprocal() const {
    if (is_zero())
        throw std::invalid_argument("Scalar: reciprocal of zero");
    return Scalar(1) / *this;
}

Scalar Scalar::parse(const std::string& text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    auto digits = [&](const char* what) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw std::invalid_argument(std::string("Scalar: expected ") + what + " in '" + text + "'");
        return BigInt(text.substr(start, pos - start));
    };
    BigInt num = digits("numerator");
    BigInt den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = digits("denominator");
    }
    if (pos != text.size())
        throw std::invalid_argument("Scalar: trailing characters in '" + text + "'");
    Scalar r(num, den);
    return negative ? -r : r;
}

std::string Scalar::str() const {
    std::string s = numerator().str();
    if (!is_integer())
        s += "/" + denominator().str();
    return s;
}

} // namespace lcc
