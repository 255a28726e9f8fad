#pragma once

#include <map>
#include <string>

#include "contact_spectra/orbit_catalog.hpp"

namespace contact_spectra {

// Exact rank, or an interval when the differential between an adjacent
// generator pair is not pinned down by the action/stratum arguments.
struct RankValue {
    long long lo = 0;
    long long hi = 0;

    RankValue() = default;
    RankValue(long long exact) : lo(exact), hi(exact) {}
    RankValue(long long lo_, long long hi_) : lo(lo_), hi(hi_) {}

    bool exact() const { return lo == hi; }
    bool operator==(const RankValue&) const = default;

    std::string str() const {
        if (exact()) return std::to_string(lo);
        return "{" + std::to_string(lo) + ".." + std::to_string(hi) + "}";
    }
};

// Which argument pins the differential (or the value) down.
enum class Justification { Symmetry, ActionGap, IndexGap, FillingClass, Bound, Unknown };

std::string justification_name(Justification j);

struct RankResult {
    long long degree = 0;
    RankValue rank;
    Justification justification = Justification::IndexGap;
};

// Count bound for generators of one degree, certified over an enumeration
// window.
struct AfgBound {
    long long degree = 0;
    long long bound = 0;
    FamilyDescriptor family;
    long long window_valid_up_to = 0;
};

// Generator-count bound b_k for the perturbed Ustilovsky form, from the
// degree-ladder table alone (no stratum enumeration).
long long perturbed_bk_closed_form(long long p, long long n, long long k);

// Same count from the enumerated strata graded through the Gauss-bracket
// index route; the independent code path.
long long perturbed_bk_by_enumeration(long long p, long long n, long long k);

// Enumeration window that certifies degree k for the (perturbed) ladder
// families: one ladder step past the first parameter whose lowest degree
// clears k.
long long ladder_window(long long p, long long n, long long k);

// b_k of a family.  For the perturbed family the closed form and the
// enumerated count are both computed and must agree.  For enumerated
// families the window is derived from the index growth rate; families with
// zero mean index cannot be certified and raise WindowError.
AfgBound afg_bound(const FamilyDescriptor& family, long long k);

// Rank of the Reeb-generated part in degree k, with the per-family reason
// the differential vanishes.  Interval-valued exactly at the uncertain
// adjacent pairs of the (2,...,2,p) table.
RankResult sh_plus_rank(const FamilyDescriptor& family, long long k);

// Full symplectic-homology rank for the (2,...,2,p) family, k >= n: the
// Reeb-generated ranks plus the filling's fundamental class in degree n.
RankResult sh_rank(const FamilyDescriptor& family, long long k);

// Same table recomputed from the enumerated spectrum with the
// action/stratum adjacency analysis; the independent route used to verify
// the closed form.
std::map<long long, RankValue> sh_rank_by_enumeration(long long p, long long n,
                                                      long long k_min, long long k_max);

// rk SH_k <= b_k + rk H_{n-k}(V, dV); the Betti number is caller-supplied
// topological input.
long long sh_rank_bound(long long k, const AfgBound& b, long long betti_rel);

}  // namespace contact_spectra
