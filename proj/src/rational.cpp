#include "tddel/rational.hpp"

#include "tddel/errors.hpp"

namespace tddel {

namespace {

bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!looks_like_integer(num))
        throw InputError("not a rational number: '" + text + "'");
    mpz_class numerator(num);
    mpz_class denominator(1);
    if (slash != std::string::npos) {
        const std::string den = text.substr(slash + 1);
        if (!looks_like_integer(den))
            throw InputError("not a rational number: '" + text + "'");
        denominator = mpz_class(den);
        if (denominator == 0)
            throw InputError("zero denominator in rational: '" + text + "'");
    }
    Rational value(numerator, denominator);
    value.canonicalize();
    return value;
}

std::string rational_to_string(const Rational& value) {
    return value.get_str();
}

} // namespace tddel
