#include "contact_spectra/index_engine.hpp"

#include "contact_spectra/errors.hpp"

namespace contact_spectra {

namespace {

long long ceil_div(long long x, long long d) {
    // d > 0
    long long q = x / d;
    if (x % d != 0 && x > 0) ++q;
    return q;
}

}  // namespace

ExponentVector::ExponentVector(std::vector<long long> a) : entries(std::move(a)) {
    if (entries.size() < 2)
        throw ValidationError("exponent vector needs at least two entries");
    for (long long e : entries)
        if (e < 2) throw ValidationError("exponents must be >= 2");
}

long long brieskorn_index(const ExponentVector& a, const IndexInput& inp) {
    if (inp.L < 1) throw ValidationError("period parameter L must be >= 1");
    if (inp.hess_sign != +1)
        throw ValidationError("brieskorn_index is derived for sign(h'') = +1");
    if (inp.morse_index < 0) throw ValidationError("negative Morse index");
    long long s = 0;
    for (long long e : a.entries) s += ceil_div(inp.L, e);
    return 2 * s - 2 * inp.L + inp.morse_index - (a.n() - 1);
}

long long morse_bott_index(long long mu_cz, const IndexInput& inp) {
    if (inp.hess_sign != +1 && inp.hess_sign != -1)
        throw ValidationError("sign(h'') must be +1 or -1 for non-constant orbits");
    if (inp.morse_index < 0 || inp.morse_index > inp.stratum_dim)
        throw ValidationError("Morse index must lie in [0, stratum dim]");
    long long twice = 2 * mu_cz + 2 * inp.morse_index - inp.stratum_dim + inp.hess_sign;
    if (twice % 2 != 0)
        throw ParityError("half-integer grading: stratum dimension and sign(h'') disagree");
    return twice / 2;
}

Rat mean_index(const ExponentVector& a, long long L) {
    Rat s(0);
    for (long long e : a.entries) s += Rat(1, e);
    return Rat(2 * L) * (s - Rat(1));
}

Rat iteration_residual(const ExponentVector& a, long long L, long long k,
                       long long morse_index) {
    if (L < 1 || k < 1) throw ValidationError("L and k must be >= 1");
    IndexInput inp;
    inp.L = k * L;
    inp.morse_index = morse_index;
    long long mu_iter = brieskorn_index(a, inp);
    return Rat(mu_iter) - Rat(k) * mean_index(a, L);
}

long long ladder_degree(long long p, long long l, long long n) {
    if (p < 3 || p % 2 == 0) throw ValidationError("p must be odd and >= 3");
    long long c = l / p;
    if (l % p != 0 && l > 0) ++c;  // ceil(l/p), any sign of l
    return (l - 1) * (n - 2) + 2 * c;
}

}  // namespace contact_spectra
