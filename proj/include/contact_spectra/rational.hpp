#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>

#include "contact_spectra/errors.hpp"

namespace contact_spectra {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number.  Canonical form is kept after every operation:
// denominator > 0 and gcd(|num|, den) = 1; zero is 0/1.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(const BigInt& n) : num_(n), den_(1) {}
    Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rat operator-() const { return Rat(-num_, den_, already_reduced{}); }

    Rat operator+(const Rat& o) const {
        return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rat operator-(const Rat& o) const {
        return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rat operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }
    Rat operator/(const Rat& o) const {
        if (o.num_ == 0) throw ValidationError("rational division by zero");
        return Rat(num_ * o.den_, den_ * o.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rat& o) const {
        BigInt l = num_ * o.den_, r = o.num_ * den_;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rat abs() const { return num_ < 0 ? -*this : *this; }

    BigInt floor() const {
        BigInt q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    BigInt ceil() const {
        BigInt q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    // "a/b", or "a" when integral.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }
    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(BigInt(s));
        return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    }

private:
    struct already_reduced {};
    Rat(BigInt n, BigInt d, already_reduced) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (den_ == 0) throw ValidationError("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        if (num_ == 0) { den_ = 1; return; }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        num_ /= g;
        den_ /= g;
    }

    BigInt num_;
    BigInt den_;  // > 0
};

enum class RatOp { Add, Sub, Mul, Div };

inline Rat rat_arith(const Rat& x, const Rat& y, RatOp op) {
    switch (op) {
        case RatOp::Add: return x + y;
        case RatOp::Sub: return x - y;
        case RatOp::Mul: return x * y;
        case RatOp::Div: return x / y;
    }
    throw ValidationError("unknown rational operation");
}

}  // namespace contact_spectra
