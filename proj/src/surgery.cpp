#include "contact_spectra/surgery.hpp"

#include <algorithm>
#include <numeric>

#include "contact_spectra/errors.hpp"

namespace contact_spectra {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw ValidationError(msg);
}

bool plus_minus_one_mod_8(long long p) {
    long long r = p % 8;
    return r == 1 || r == 7;
}

void validate_sphere_parameters(const ContactDescriptor& d, long long n) {
    require(d.copies >= 1, "copy count must be >= 1");
    require(d.p >= 3 && d.p % 2 == 1, "p must be odd and >= 3");
    require(plus_minus_one_mod_8(d.p),
            "p = " + std::to_string(d.p) + " is not +-1 mod 8; the underlying manifold "
            "is the Kervaire sphere, outside this procedure");
    require(n >= 5 && n % 2 == 1, "n must be odd and >= 5");
}

}  // namespace

const char* Certificate::case_name(Case c) {
    switch (c) {
        case Case::QGt2p1: return "qGt2p1";
        case Case::QLt2p1: return "qLt2p1";
        case Case::QEq2p1: return "qEq2p1";
        case Case::PEqQ: return "pEqQ";
    }
    return "?";
}

long long transport_afg_bound(long long b, long long n, long long k_handle, long long j) {
    require(b >= 0, "bound must be >= 0");
    if (k_handle == 2)
        throw ValidationError("1-surgery can change which loops are contractible; "
                              "bound transport is not defined for k = 2");
    require(k_handle >= 1 && k_handle <= n, "handle index must lie in [1, n]");
    long long d = n - k_handle;
    for (long long r : {0LL, 1LL}) {
        long long m = j - r;
        if (d == 0) {
            if (m == 0) return b + 1;
        } else if (m >= d && m % d == 0 && (m / d) % 2 == 1) {
            return b + 1;
        }
    }
    return b;
}

RankValue connected_sum_rank(const std::vector<RankValue>& summands) {
    RankValue total(0);
    for (const RankValue& r : summands) {
        total.lo += r.lo;
        total.hi += r.hi;
    }
    return total;
}

std::vector<std::pair<long long, long long>> connected_sum_dichotomy(long long rk_n,
                                                                     long long rk_n1) {
    require(rk_n >= 0 && rk_n1 >= 0, "ranks must be >= 0");
    std::vector<std::pair<long long, long long>> out;
    out.emplace_back(rk_n + 1, rk_n1);
    if (rk_n1 >= 1) out.emplace_back(rk_n, rk_n1 - 1);
    return out;
}

std::vector<BigInt> separating_copy_counts(long long b_xi, long long b_xik,
                                           const BigInt& N0, int steps) {
    require(b_xi >= 0 && b_xik >= 0, "bounds must be >= 0");
    require(N0 >= 1, "N0 must be >= 1");
    require(steps >= 0, "steps must be >= 0");
    long long b = std::max(b_xi, b_xik);
    std::vector<BigInt> out;
    out.reserve(static_cast<size_t>(steps) + 1);
    BigInt v = N0;
    for (int l = 0; l <= steps; ++l) {
        out.push_back(v);
        v *= (b + 2);
    }
    for (int l = 0; l + 1 <= steps; ++l) {
        if (l == 0 && N0 <= b) continue;  // the l = 0 pair needs N0 > b
        if (!(BigInt(b_xi) + out[static_cast<size_t>(l)] * (b_xik + 1) <
              out[static_cast<size_t>(l) + 1]))
            throw std::logic_error("separating inequality failed at step " +
                                   std::to_string(l));
    }
    return out;
}

MeanEuler mean_euler_characteristic(long long p, long long n) {
    require(p >= 1 && p % 2 == 1, "p must be odd and >= 1");
    require(n >= 5 && n % 2 == 1, "n must be odd and >= 5");
    return MeanEuler{Rat((n - 1) * p + 1, 2 * ((n - 2) * p + 2))};
}

MeanEuler mean_euler_connected_sum(const std::vector<MeanEuler>& values, long long n) {
    require(!values.empty(), "need at least one summand");
    Rat half_sign = Rat(n % 2 == 0 ? 1 : -1, 2);
    Rat acc = values.front().value;
    for (size_t i = 1; i < values.size(); ++i) acc = acc + values[i].value + half_sign;
    return MeanEuler{acc};
}

MeanEuler mean_euler_l_copies(long long p, long long n, long long l) {
    require(l >= 1, "copy count must be >= 1");
    Rat sign = Rat(n % 2 == 0 ? 1 : -1);
    Rat bracket = Rat((n - 1) * p + 1, (n - 2) * p + 2) + sign;
    return MeanEuler{Rat(l, 2) * bracket - sign / Rat(2)};
}

EulerMatch euler_matching_counts(const std::vector<long long>& primes, long long n) {
    require(primes.size() >= 2, "need at least two parameters to match");
    for (size_t i = 0; i < primes.size(); ++i) {
        require(primes[i] >= 3 && primes[i] % 2 == 1 && plus_minus_one_mod_8(primes[i]),
                "parameters must be odd, >= 3 and +-1 mod 8");
        for (size_t j = 0; j < i; ++j)
            require(primes[i] != primes[j], "parameters must be distinct");
    }
    require(n >= 5 && n % 2 == 1, "n must be odd and >= 5");

    Rat sign = Rat(n % 2 == 0 ? 1 : -1);
    auto bracket = [&](long long p) {
        return Rat((n - 1) * p + 1, (n - 2) * p + 2) + sign;
    };

    // l_i = l_1 * bracket(p_1)/bracket(p_i); minimal l_1 clears every
    // denominator at once.
    BigInt l1 = 1;
    for (size_t i = 1; i < primes.size(); ++i) {
        Rat ratio = bracket(primes.front()) / bracket(primes[i]);
        l1 = boost::multiprecision::lcm(l1, ratio.den());
    }

    EulerMatch match;
    match.primes = primes;
    for (size_t i = 0; i < primes.size(); ++i) {
        Rat li = Rat(l1) * bracket(primes.front()) / bracket(primes[i]);
        if (!li.is_integer() || li.sign() <= 0)
            throw std::logic_error("copy count for p=" + std::to_string(primes[i]) +
                                   " did not come out a positive integer");
        match.counts.push_back(li.num());
    }

    // defining property, asserted: all chi_m agree exactly
    match.chi = Rat(l1, 2) * bracket(primes.front()) - sign / Rat(2);
    for (size_t i = 0; i < primes.size(); ++i) {
        Rat chi_i = Rat(match.counts[i], 2) * bracket(primes[i]) - sign / Rat(2);
        if (!(chi_i == match.chi))
            throw std::logic_error("matched mean Euler characteristics disagree");
    }
    return match;
}

namespace {

ExcludedFormCheck excluded_form_scan(long long k, long long n) {
    ExcludedFormCheck chk;
    chk.k = k;
    chk.n = n;
    chk.scanned_l_up_to = k / (n - 1) + 2;
    chk.excluded = true;
    for (long long l = 1; l <= chk.scanned_l_up_to; ++l) {
        long long base = (2 * l - 1) * (n - 1);
        if (k == base || k == base + 1) {
            chk.excluded = false;
            break;
        }
    }
    return chk;
}

Certificate make_certificate(Certificate::Case kase, long long k, long long n,
                             const ContactDescriptor& bounded,
                             const ContactDescriptor& witness, long long bk_bounded,
                             long long rank_witness_per_copy) {
    Certificate cert;
    cert.kase = kase;
    cert.k = k;
    cert.n = n;
    cert.bounded_side = bounded;
    cert.witness_side = witness;
    cert.bk_bounded = bk_bounded;
    cert.rank_witness_per_copy = rank_witness_per_copy;
    cert.upper_bound = bounded.copies * bk_bounded;
    cert.lower_rank = witness.copies * rank_witness_per_copy;
    cert.excluded_form_check = excluded_form_scan(k, n);
    if (!cert.excluded_form_check.excluded)
        throw std::logic_error("certificate degree lies in the cocore-orbit form");
    if (!(cert.upper_bound < cert.lower_rank))
        throw std::logic_error("certificate rank gap is not strict");
    return cert;
}

// Distinct p < q: the degree is chosen per the case split on q vs 2p+1 so
// that the q-side table has rank 1 while the p-side perturbed form has no
// generator at all, and the degree avoids the cocore-orbit form.
Certificate distinguish_distinct(const ContactDescriptor& small_p,
                                 const ContactDescriptor& big_q, long long n) {
    long long p = small_p.p, q = big_q.p;
    Certificate::Case kase;
    long long k;
    if (q > 2 * p + 1) {
        kase = Certificate::Case::QGt2p1;
        k = (2 * p + 1) * (n - 2) + 2;  // = ladder_degree(q, 2p+2, n)
    } else if (q < 2 * p + 1) {
        kase = Certificate::Case::QLt2p1;
        // Both candidate degrees sit at ladder_degree(q, 2p+1, n) + {0,-1};
        // the cocore-form overlap rules out one of them depending on n mod 4.
        k = n % 4 == 1 ? 2 * p * (n - 2) + 4 : 2 * p * (n - 2) + 3;
    } else {
        kase = Certificate::Case::QEq2p1;
        k = (4 * p + 1) * (n - 2) + 4;  // = ladder_degree(q, 2q, n)
    }

    RankResult witness_rank = sh_rank(FamilyDescriptor::ustilovsky(q, n), k);
    if (!(witness_rank.rank == RankValue(1)))
        throw std::logic_error("witness-side rank is not 1 at the chosen degree");
    long long bk = perturbed_bk_closed_form(p, n, k);
    if (bk != 0)
        throw std::logic_error("bounded-side generator count is not 0 at the chosen degree");
    return make_certificate(kase, k, n, small_p, big_q, bk, 1);
}

// Equal p, different copy counts: any degree with a single perturbed
// generator and table rank 1 separates j copies from i copies as soon as
// min(i,j)*1 < max(i,j).
Certificate distinguish_equal(const ContactDescriptor& fewer,
                              const ContactDescriptor& more, long long n) {
    long long p = fewer.p;
    for (long long l = 3; ; l += 2) {
        if ((l - 1) % p == 0) continue;
        long long k = ladder_degree(p, l, n);
        if (k < n) continue;
        if (!excluded_form_scan(k, n).excluded) continue;
        long long bk = perturbed_bk_closed_form(p, n, k);
        if (bk != 1) continue;
        RankResult rank = sh_rank(FamilyDescriptor::ustilovsky(p, n), k);
        if (!(rank.rank == RankValue(1))) continue;
        return make_certificate(Certificate::Case::PEqQ, k, n, fewer, more, bk, 1);
    }
}

}  // namespace

std::optional<Certificate> distinguish(const ContactDescriptor& left,
                                       const ContactDescriptor& right, long long n) {
    validate_sphere_parameters(left, n);
    validate_sphere_parameters(right, n);
    if (left == right) return std::nullopt;

    if (left.p == right.p) {
        const auto& fewer = left.copies < right.copies ? left : right;
        const auto& more = left.copies < right.copies ? right : left;
        return distinguish_equal(fewer, more, n);
    }
    const auto& small_p = left.p < right.p ? left : right;
    const auto& big_q = left.p < right.p ? right : left;
    return distinguish_distinct(small_p, big_q, n);
}

void verify_certificate(const Certificate& cert) {
    // (a) the gap itself
    if (!(cert.upper_bound < cert.lower_rank))
        throw std::logic_error("verification failed: no strict rank gap");
    if (cert.upper_bound != cert.bounded_side.copies * cert.bk_bounded ||
        cert.lower_rank != cert.witness_side.copies * cert.rank_witness_per_copy)
        throw std::logic_error("verification failed: sides do not multiply out");

    // (b) fresh exhaustive scan of the cocore-orbit degree form
    ExcludedFormCheck fresh = excluded_form_scan(cert.k, cert.n);
    if (!fresh.excluded)
        throw std::logic_error("verification failed: degree lies in the cocore-orbit form");

    // (c) bounded side's count at k, recomputed from the enumerated strata
    // graded by the Gauss-bracket route rather than the degree-ladder table
    long long counted =
        perturbed_bk_by_enumeration(cert.bounded_side.p, cert.n, cert.k);
    if (counted != cert.bk_bounded)
        throw std::logic_error("verification failed: enumerated generator count is " +
                               std::to_string(counted) + ", certificate claims " +
                               std::to_string(cert.bk_bounded));

    // witness side's table rank per copy
    RankResult rank = sh_rank(FamilyDescriptor::ustilovsky(cert.witness_side.p, cert.n),
                              cert.k);
    if (!(rank.rank == RankValue(cert.rank_witness_per_copy)))
        throw std::logic_error("verification failed: witness rank per copy mismatch");
}

}  // namespace contact_spectra
