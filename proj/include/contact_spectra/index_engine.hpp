#pragma once

#include <vector>

#include "contact_spectra/rational.hpp"

namespace contact_spectra {

// Brieskorn exponents a = (a_0, ..., a_n), the defining data of the link of
// z_0^{a_0} + ... + z_n^{a_n} = 0.
struct ExponentVector {
    std::vector<long long> entries;

    ExponentVector() = default;
    explicit ExponentVector(std::vector<long long> a);

    long long n() const { return static_cast<long long>(entries.size()) - 1; }
};

// Per-trajectory index data: period parameter L (period t = L*pi/2), the
// Morse index of the chosen critical point on the orbit stratum, the stratum
// dimension and sign(h'') of the Hamiltonian slope (+1 by convention).
struct IndexInput {
    long long L = 1;
    long long morse_index = 0;
    long long stratum_dim = 0;
    int hess_sign = +1;
};

// Morse-Bott index of the closed Reeb trajectory with period L*pi/2 on the
// Brieskorn manifold of a:  2*sum_k ceil(L/a_k) - 2L + morse_index - (n-1).
// Assumes sign(h'') = +1; the stratum-dimension correction is already folded
// into the closed form.
long long brieskorn_index(const ExponentVector& a, const IndexInput& inp);

// Morse-Bott grading of a transversely non-degenerate orbit:
// mu_CZ + morse_index - dim/2 + sign/2.  Throws ParityError when the result
// is not an integer (inconsistent stratum data).
long long morse_bott_index(long long mu_cz, const IndexInput& inp);

// Linear growth rate of the index under iteration, per trajectory family:
// Delta = 2L*(sum_k 1/a_k - 1), exact.
Rat mean_index(const ExponentVector& a, long long L);

// mu(k-th iterate) - k*Delta, exact; bounded by 2(n-1) in absolute value for
// the families in the catalog.
Rat iteration_residual(const ExponentVector& a, long long L, long long k,
                       long long morse_index);

// Strictly increasing degree ladder of the (2,...,2,p) spheres:
// (l-1)(n-2) + 2*ceil(l/p).
long long ladder_degree(long long p, long long l, long long n);

// Offset between this grading convention and the one used by some of the
// cited index computations: half the dimension of the contact manifold.
// Recorded for reference; never applied by any routine here.
inline Rat alternative_grading_offset(long long n) { return Rat(2 * n - 1, 2); }

}  // namespace contact_spectra
