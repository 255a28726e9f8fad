#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "contact_spectra/spectrum_homology.hpp"

namespace contact_spectra {

// A j-fold connected sum of one (2,...,2,p) sphere with itself.
struct ContactDescriptor {
    long long copies = 1;
    long long p = 3;

    bool operator==(const ContactDescriptor&) const = default;
};

// Record of the scan showing that a degree avoids the cocore-orbit form
// (2l-1)(n-1) + {0,1} for every l.
struct ExcludedFormCheck {
    long long k = 0;
    long long n = 0;
    long long scanned_l_up_to = 0;
    bool excluded = false;
};

// A non-contactomorphism witness: at degree k one side has a filling of rank
// lower_rank while every filling of the other side is bounded by upper_bound.
struct Certificate {
    enum class Case { QGt2p1, QLt2p1, QEq2p1, PEqQ };

    long long k = 0;
    long long lower_rank = 0;
    long long upper_bound = 0;
    ExcludedFormCheck excluded_form_check;
    Case kase = Case::QGt2p1;

    // context for self-contained re-verification
    long long n = 0;
    ContactDescriptor bounded_side;   // the side every filling of which is bounded
    ContactDescriptor witness_side;   // the side carrying the rank-`lower_rank` filling
    long long bk_bounded = 0;         // per-copy generator bound of the bounded side at k
    long long rank_witness_per_copy = 0;

    static const char* case_name(Case c);
};

// Bound transport under (k-1)-surgery: b + 1 when j lies in the cocore-orbit
// degree form (n-k)(2N+1)+{0,1}, N >= 0, and b otherwise.  k = 2 is refused
// (1-surgery can change which loops are contractible).
long long transport_afg_bound(long long b, long long n, long long k_handle, long long j);

// Degree-wise rank of a boundary connected sum: the summand ranks add,
// intervals as intervals.
RankValue connected_sum_rank(const std::vector<RankValue>& summands);

// The two admissible (rk_n, rk_{n+1}) outcomes for the boundary connected
// sum V of W: (rk_n(W)+1, rk_{n+1}(W)) always, (rk_n(W), rk_{n+1}(W)-1) when
// rk_{n+1}(W) >= 1.
std::vector<std::pair<long long, long long>> connected_sum_dichotomy(long long rk_n,
                                                                     long long rk_n1);

// Copy counts N_l = N0*(b+2)^l, b = max(b_xi, b_xik), whose fillings outgrow
// every transported bound: b_xi + N_l*(b_xik+1) < N_{l+1}.  The inequality is
// asserted for every consecutive pair with l >= 1, and for the (N_0, N_1)
// pair when N0 > b; failure is a logic error.
std::vector<BigInt> separating_copy_counts(long long b_xi, long long b_xik,
                                           const BigInt& N0, int steps);

// Mean Euler characteristic of S^1-equivariant symplectic homology.
struct MeanEuler {
    Rat value;
    bool operator==(const MeanEuler&) const = default;
};

// chi_m of the (2,...,2,p) sphere: ((n-1)p+1) / (2((n-2)p+2)).
MeanEuler mean_euler_characteristic(long long p, long long n);

// Fold of chi(V1 # V2) = chi1 + chi2 + (-1)^n / 2 over the list.
MeanEuler mean_euler_connected_sum(const std::vector<MeanEuler>& values, long long n);

// Closed form for l copies of one summand; must agree with the fold.
MeanEuler mean_euler_l_copies(long long p, long long n, long long l);

// Copy counts l_i (minimal l_1) making the chi_m of the l_i-fold sums of the
// given spheres exactly equal; the common value is returned and re-verified.
struct EulerMatch {
    std::vector<long long> primes;
    std::vector<BigInt> counts;
    Rat chi;
};
EulerMatch euler_matching_counts(const std::vector<long long>& primes, long long n);

// Decision procedure: a certificate distinguishing the two connected sums, or
// nothing when the parameters are equal.
std::optional<Certificate> distinguish(const ContactDescriptor& left,
                                       const ContactDescriptor& right, long long n);

// Independent soundness check of a certificate: the rank gap, the excluded
// degree form (fresh scan), and the bounded side's generator count at k
// recomputed from the enumerated perturbed spectrum.  Throws on failure.
void verify_certificate(const Certificate& cert);

}  // namespace contact_spectra
