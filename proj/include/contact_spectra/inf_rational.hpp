#pragma once

#include <compare>
#include <string>

#include "contact_spectra/rational.hpp"

namespace contact_spectra {

// q + c*eps with eps a positive infinitesimal: smaller than every positive
// rational, treated as irrational.  Order is lexicographic in (q, c).
//
// Arithmetic is first-order in eps (eps^2 terms are dropped).  Every target
// quantity here is a floor/ceil where only the standard part and the sign of
// the infinitesimal coefficient matter, and the exact values whose first-order
// coefficient vanishes are exact rationals to all orders, so the truncation is
// lossless for this domain.
class InfRat {
public:
    InfRat() = default;
    InfRat(Rat std_part) : std_(std::move(std_part)) {}
    InfRat(long long std_part) : std_(std_part) {}
    InfRat(Rat std_part, Rat inf_part) : std_(std::move(std_part)), inf_(std::move(inf_part)) {}

    const Rat& std_part() const { return std_; }
    const Rat& inf_part() const { return inf_; }

    static InfRat eps() { return InfRat(Rat(0), Rat(1)); }

    InfRat operator-() const { return InfRat(-std_, -inf_); }
    InfRat operator+(const InfRat& o) const { return InfRat(std_ + o.std_, inf_ + o.inf_); }
    InfRat operator-(const InfRat& o) const { return InfRat(std_ - o.std_, inf_ - o.inf_); }

    // (a + b eps)(c + d eps) = ac + (ad + bc) eps  [eps^2 dropped]
    InfRat operator*(const InfRat& o) const {
        return InfRat(std_ * o.std_, std_ * o.inf_ + inf_ * o.std_);
    }
    // (a + b eps)/(c + d eps) = a/c + ((bc - ad)/c^2) eps, c != 0
    InfRat operator/(const InfRat& o) const {
        if (o.std_.is_zero())
            throw ValidationError("division by an infinitesimal");
        return InfRat(std_ / o.std_, (inf_ * o.std_ - std_ * o.inf_) / (o.std_ * o.std_));
    }

    bool operator==(const InfRat& o) const { return std_ == o.std_ && inf_ == o.inf_; }
    std::strong_ordering operator<=>(const InfRat& o) const {
        auto c = std_ <=> o.std_;
        return c != 0 ? c : inf_ <=> o.inf_;
    }

    std::string str() const {
        if (inf_.is_zero()) return std_.str();
        std::string s = std_.is_zero() ? "" : std_.str();
        if (inf_ == Rat(1)) return s + "+ε";
        if (inf_ == Rat(-1)) return s + "-ε";
        if (inf_.sign() > 0) return s + "+" + inf_.str() + "ε";
        return s + "-" + inf_.abs().str() + "ε";
    }

private:
    Rat std_;  // q
    Rat inf_;  // c
};

// floor(q + c eps) under the eps -> 0+ order: for non-integral q the
// infinitesimal cannot bridge the gap to the next integer; for integral q the
// sign of c decides the side.
inline BigInt inf_floor(const InfRat& x) {
    BigInt f = x.std_part().floor();
    if (x.std_part().is_integer() && x.inf_part().sign() < 0) --f;
    return f;
}

inline BigInt inf_ceil(const InfRat& x) {
    BigInt c = x.std_part().ceil();
    if (x.std_part().is_integer() && x.inf_part().sign() > 0) ++c;
    return c;
}

}  // namespace contact_spectra
