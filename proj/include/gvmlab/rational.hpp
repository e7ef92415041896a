#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace gvmlab {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};
struct DimensionError : Error {
    using Error::Error;
};
struct TruncationError : Error {
    using Error::Error;
};
struct UnsupportedGeneratorError : Error {
    using Error::Error;
};
struct InternalError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

/// Exact rational scalar. Always in lowest terms with positive denominator;
/// zero is 0/1. Arithmetic never rounds.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, scalars mix freely
    Rational(long num, long den) {
        if (den == 0)
            throw DomainError("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Lenient parse: "3", "-3/6" (reduced to "-1/2"), surrounding spaces allowed.
    static Rational parse(const std::string& text);

    /// Canonical form: "p/q" with q>0 in lowest terms, "p" alone when q=1.
    std::string str() const;

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    /// In Z_+ (non-negative integer).
    bool is_nonneg_integer() const { return is_integer() && sgn(v_) >= 0; }
    /// In N (positive integer).
    bool is_positive_integer() const { return is_integer() && sgn(v_) > 0; }
    /// Valid only when is_integer() and the value fits a long.
    long to_long() const {
        if (!is_integer())
            throw DomainError("Rational: " + str() + " is not an integer");
        return static_cast<long>(v_.get_num().get_si());
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw DomainError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero())
            throw DomainError("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Falling factorial A_l^k = l(l-1)...(l-k+1), A_l^0 = 1.
Rational falling_factorial(long l, long k);

}  // namespace gvmlab
