#include "contact_spectra/spectrum_homology.hpp"

#include <algorithm>

#include "contact_spectra/errors.hpp"

namespace contact_spectra {

std::string justification_name(Justification j) {
    switch (j) {
        case Justification::Symmetry: return "symmetry";
        case Justification::ActionGap: return "action-gap";
        case Justification::IndexGap: return "index-gap";
        case Justification::FillingClass: return "filling-class";
        case Justification::Bound: return "bound";
        case Justification::Unknown: return "unknown";
    }
    return "?";
}

long long perturbed_bk_closed_form(long long p, long long n, long long k) {
    FamilyDescriptor::ustilovsky_perturbed(p, n);
    long long count = 0;
    // Contributions of the orbits with parameter M, read off the graded
    // generator lists.  Lowest degree of parameter M is f(M) - 1, so the scan
    // below is exhaustive for degree k.
    for (long long M = 2; ladder_degree(p, M, n) - 1 <= k; M += 2) {
        auto hit = [&](long long deg) { return deg == k; };
        long long fM = ladder_degree(p, M, n);
        long long fM1 = ladder_degree(p, M + 1, n);
        long long fM2 = ladder_degree(p, M + 2, n);
        if (hit(fM - 1)) ++count;  // M gamma_0^+
        if (hit(fM)) ++count;      // M gamma_1^+
        if (hit(fM + 1)) ++count;  // M gamma_0
        if (M % p != 0) {
            if (hit(fM1 - 1)) ++count;  // M gamma_{n-4}
            if (hit(fM1)) ++count;      // M gamma_{n-3}
            // top cell M gamma_{2n-7}
            if (hit(fM2 - ((M + 1) % p == 0 ? 4 : 2))) ++count;
        } else {
            if (hit(fM2 - 2)) ++count;  // top cell M gamma_{2n-5}
        }
        long long minus_shift = (M + 1) % p == 0 ? 2 : 0;  // w_1-circle corrections
        if (hit(fM2 - 1 - minus_shift)) ++count;           // M gamma_0^-
        if (hit(fM2 - minus_shift)) ++count;               // M gamma_1^-
    }
    return count;
}

long long ladder_window(long long p, long long n, long long k) {
    long long M = 2;
    while (ladder_degree(p, M, n) - 1 <= k) M += 2;
    return M + 2;  // one ladder step of margin
}

long long perturbed_bk_by_enumeration(long long p, long long n, long long k) {
    auto gens = spectrum(FamilyDescriptor::ustilovsky_perturbed(p, n), ladder_window(p, n, k));
    return std::count_if(gens.begin(), gens.end(),
                         [&](const Generator& g) { return g.degree == k; });
}

namespace {

AfgBound afg_bound_perturbed(const FamilyDescriptor& fam, long long k) {
    long long closed = perturbed_bk_closed_form(fam.p, fam.n, k);
    long long counted = perturbed_bk_by_enumeration(fam.p, fam.n, k);
    if (closed != counted)
        throw std::logic_error("perturbed generator count mismatch at degree " +
                               std::to_string(k) + ": table " + std::to_string(closed) +
                               " vs enumeration " + std::to_string(counted));
    AfgBound b;
    b.degree = k;
    b.bound = closed;
    b.family = fam;
    b.window_valid_up_to = ladder_window(fam.p, fam.n, k);
    return b;
}

// Window bound for enumerated families, from the linear index growth
// 2*L*s - (n-1) <= mu <= 2*L*s + 3n + 2 with s = sum 1/a_i - 1.
long long enumeration_window(const ExponentVector& a, const Rat& s, long long k) {
    long long n = a.n();
    if (s.sign() > 0) {
        // smallest L with 2Ls - (n-1) > k
        Rat bound = (Rat(k + n - 1)) / (Rat(2) * s);
        return static_cast<long long>(bound.floor()) + 2;
    }
    // s < 0: smallest L with 2Ls + 3n + 2 < k
    Rat bound = (Rat(k - 3 * n - 2)) / (Rat(2) * s);
    return static_cast<long long>(bound.floor()) + 2;
}

AfgBound afg_bound_enumerated(const FamilyDescriptor& fam, long long k) {
    ExponentVector a = fam.exponent_vector();
    Rat s(0);
    for (long long e : a.entries) s += Rat(1, e);
    s -= Rat(1);
    if (s.is_zero())
        throw WindowError("mean index vanishes for " + fam.name() +
                          ": generator counts per degree are not certified by "
                          "any finite window");
    long long window = enumeration_window(a, s, k);
    if (fam.family == FamilyDescriptor::Family::SigmaPlus ||
        fam.family == FamilyDescriptor::Family::SigmaMinus) {
        long long limit = 2 * fam.exponents.front() - 1;
        if (window > limit)
            throw WindowError("window hypothesis fails for " + fam.name() + " at degree " +
                              std::to_string(k) + ": need strata up to L=" +
                              std::to_string(window) + " but the exponent " +
                              std::to_string(fam.exponents.front()) +
                              " certifies only L <= " + std::to_string(limit));
    }
    auto gens = spectrum(fam, window);
    AfgBound b;
    b.degree = k;
    b.bound = std::count_if(gens.begin(), gens.end(),
                            [&](const Generator& g) { return g.degree == k; });
    b.family = fam;
    b.window_valid_up_to = window;
    return b;
}

}  // namespace

AfgBound afg_bound(const FamilyDescriptor& fam, long long k) {
    fam.validate();
    if (fam.family == FamilyDescriptor::Family::UstilovskyPerturbed)
        return afg_bound_perturbed(fam, k);
    return afg_bound_enumerated(fam, k);
}

namespace {

RankResult make_rank(long long k, RankValue v, Justification j) {
    RankResult r;
    r.degree = k;
    r.rank = v;
    r.justification = j;
    return r;
}

RankResult sigma_plus_rank(const FamilyDescriptor& fam, long long k) {
    long long a3 = fam.exponents.front();
    long long n = fam.n;
    if (k >= a3 + n - 3)
        throw WindowError("degree " + std::to_string(k) + " is outside the window of " +
                          fam.name() + ": generators with L >= " + std::to_string(a3) +
                          " reach down to degree " + std::to_string(a3 + n - 3));
    if (k >= n + 1) return make_rank(k, RankValue(2), Justification::Symmetry);
    if (k == n || k == n - 1) return make_rank(k, RankValue(1), Justification::Symmetry);
    return make_rank(k, RankValue(0), Justification::IndexGap);
}

RankResult sigma_minus_rank(const FamilyDescriptor& fam, long long k) {
    long long a2 = fam.exponents.front();
    long long n = fam.n;
    Rat s(0);
    for (long long e : fam.exponents) s += Rat(1, e);
    s -= Rat(1, 6);
    if (s.sign() >= 0)
        throw WindowError("window hypothesis fails for " + fam.name() +
                          ": sum of reciprocal exponents must stay below 1/6");
    Rat tail_bound = Rat(2 * a2) * s + Rat(3 * n + 2);
    if (Rat(k) <= tail_bound)
        throw WindowError("degree " + std::to_string(k) + " is outside the window of " +
                          fam.name() + ": long orbits are only excluded above degree " +
                          tail_bound.str());
    if (3 * (n - k) >= 2 * a2)
        throw WindowError("degree " + std::to_string(k) + " needs strata up to L=" +
                          std::to_string(3 * (n - k)) + ", beyond the certified window of " +
                          fam.name());
    if (k <= n - 2) return make_rank(k, RankValue(1), Justification::ActionGap);
    return make_rank(k, RankValue(0), Justification::IndexGap);
}

// Reeb-generated ranks of the (2,...,2,p) family from the degree table.
RankResult ustilovsky_plus_rank(const FamilyDescriptor& fam, long long k) {
    long long p = fam.p, n = fam.n;
    if (k < n - 1) return make_rank(k, RankValue(0), Justification::IndexGap);
    for (long long l = 2; ladder_degree(p, l, n) - 2 <= k; ++l) {
        long long f = ladder_degree(p, l, n);
        bool even = l % 2 == 0;
        bool drop = (l - 1) % p == 0;  // the uncertain configuration
        if (even && drop) {
            if (k == f - 2 || k == f - 1)
                return make_rank(k, RankValue(0, 1), Justification::Unknown);
            continue;
        }
        if (k == f - 1) {
            bool occupied = even || !drop;  // l even: l*gamma_0; l odd: (l-1)*gamma_{n-2}
            if (occupied) return make_rank(k, RankValue(1), Justification::ActionGap);
        }
        if (k == f) {
            // l even: the (l-2)-fold top cell, which needs l >= 4; l odd: the
            // (l-1)-fold middle cells, which need p !| l-1.
            bool occupied = even ? l >= 4 : !drop;
            if (occupied) return make_rank(k, RankValue(1), Justification::ActionGap);
        }
    }
    return make_rank(k, RankValue(0), Justification::IndexGap);
}

}  // namespace

RankResult sh_plus_rank(const FamilyDescriptor& fam, long long k) {
    fam.validate();
    switch (fam.family) {
        case FamilyDescriptor::Family::SigmaPlus: return sigma_plus_rank(fam, k);
        case FamilyDescriptor::Family::SigmaMinus: return sigma_minus_rank(fam, k);
        case FamilyDescriptor::Family::Ustilovsky: return ustilovsky_plus_rank(fam, k);
        default:
            throw ValidationError("ranks are tabulated for ustilovsky, sigma_plus and "
                                  "sigma_minus families only");
    }
}

RankResult sh_rank(const FamilyDescriptor& fam, long long k) {
    fam.validate();
    if (fam.family != FamilyDescriptor::Family::Ustilovsky)
        throw ValidationError("full SH ranks are tabulated for the ustilovsky family");
    if (k < fam.n)
        throw WindowError("the rank table runs over degrees k >= n; below that the "
                          "filling's Morse complex enters");
    if (k == fam.n)  // no Reeb generator here; the filling's fundamental class remains
        return [&] {
            RankResult r;
            r.degree = k;
            r.rank = RankValue(1);
            r.justification = Justification::FillingClass;
            return r;
        }();
    return ustilovsky_plus_rank(fam, k);
}

std::map<long long, RankValue> sh_rank_by_enumeration(long long p, long long n,
                                                      long long k_min, long long k_max) {
    auto fam = FamilyDescriptor::ustilovsky(p, n);
    auto gens = spectrum(fam, ladder_window(p, n, k_max));

    std::map<long long, std::vector<const Generator*>> by_degree;
    for (const Generator& g : gens) by_degree[g.degree].push_back(&g);

    // A differential from degree k+1 to degree k is excluded when the two
    // generators sit on the same stratum (the Morse differential vanishes
    // with Z_2 coefficients) or when the upper one has the smaller action.
    auto uncertain_pair = [&](long long upper_deg) {
        auto u = by_degree.find(upper_deg);
        auto v = by_degree.find(upper_deg - 1);
        if (u == by_degree.end() || v == by_degree.end()) return false;
        for (const Generator* gu : u->second)
            for (const Generator* gv : v->second)
                if (gu->stratum.L != gv->stratum.L &&
                    gu->stratum.length > gv->stratum.length)
                    return true;
        return false;
    };

    std::map<long long, RankValue> out;
    for (long long k = k_min; k <= k_max; ++k) {
        long long count = by_degree.count(k) ? (long long)by_degree[k].size() : 0;
        if (k == n) ++count;  // fundamental class of the filling
        bool unknown = uncertain_pair(k) || uncertain_pair(k + 1);
        out[k] = unknown ? RankValue(std::max(0LL, count - 1), count) : RankValue(count);
    }
    return out;
}

long long sh_rank_bound(long long k, const AfgBound& b, long long betti_rel) {
    if (betti_rel < 0) throw ValidationError("negative Betti number");
    if (b.degree != k) throw ValidationError("degree mismatch between bound and query");
    return b.bound + betti_rel;
}

}  // namespace contact_spectra
