#include "gvmlab/rational.hpp"

#include <cctype>
#include <ostream>

namespace gvmlab {

Rational Rational::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    if (t.empty())
        throw DomainError("Rational: empty string");
    auto slash = t.find('/');
    auto check_int = [&](const std::string& s) {
        if (s.empty())
            throw DomainError("Rational: bad literal '" + text + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            throw DomainError("Rational: bad literal '" + text + "'");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw DomainError("Rational: bad literal '" + text + "'");
    };
    if (slash == std::string::npos) {
        check_int(t);
        return Rational(mpq_class(mpz_class(t)));
    }
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den);
    if (d == 0)
        throw DomainError("Rational: zero denominator in '" + text + "'");
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (is_integer())
        return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational falling_factorial(long l, long k) {
    if (k < 0)
        throw DomainError("falling_factorial: negative k");
    Rational acc = 1;
    for (long s = 0; s < k; ++s)
        acc *= Rational(l - s);
    return acc;
}

}  // namespace gvmlab
