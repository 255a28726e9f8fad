#include "contact_spectra/orbit_catalog.hpp"

#include <algorithm>
#include <numeric>

#include "contact_spectra/errors.hpp"

namespace contact_spectra {

namespace {

bool is_odd(long long x) { return x % 2 != 0; }

void require(bool ok, const std::string& msg) {
    if (!ok) throw ValidationError(msg);
}

std::string subscript_label(long long L, long long cell, const std::string& suffix) {
    return std::to_string(L) + "γ_" + std::to_string(cell) + suffix;
}

}  // namespace

StratumKind StratumKind::sphere(long long odd_dim) {
    require(odd_dim >= 1 && is_odd(odd_dim), "sphere stratum dimension must be odd");
    return StratumKind{Type::Sphere, odd_dim, {}};
}
StratumKind StratumKind::unit_cotangent(long long base_dim) {
    require(base_dim >= 1, "unit cotangent base dimension must be >= 1");
    return StratumKind{Type::UnitCotangent, base_dim, {}};
}
StratumKind StratumKind::circle() { return StratumKind{Type::Circle, 0, {}}; }
StratumKind StratumKind::point() { return StratumKind{Type::Point, 0, {}}; }
StratumKind StratumKind::custom(std::vector<long long> cells) {
    StratumKind k{Type::Custom, 0, std::move(cells)};
    std::sort(k.custom_cells.begin(), k.custom_cells.end());
    return k;
}

long long StratumKind::dim() const {
    switch (type) {
        case Type::Sphere: return param;
        case Type::UnitCotangent: return 2 * param - 1;
        case Type::Circle: return 1;
        case Type::Point: return 0;
        case Type::Custom:
            return custom_cells.empty() ? 0 : custom_cells.back();
    }
    return 0;
}

std::vector<long long> StratumKind::cells() const {
    switch (type) {
        case Type::Sphere: return {0, param};
        case Type::UnitCotangent: return {0, param - 1, param, 2 * param - 1};
        case Type::Circle: return {0, 1};
        case Type::Point: return {0};
        case Type::Custom: return custom_cells;
    }
    return {};
}

std::string StratumKind::name() const {
    switch (type) {
        case Type::Sphere: return "S^" + std::to_string(param);
        case Type::UnitCotangent: return "S*S^" + std::to_string(param);
        case Type::Circle: return "S^1";
        case Type::Point: return "pt";
        case Type::Custom: return "custom";
    }
    return "?";
}

std::string OrbitStratum::branch_suffix() const {
    switch (branch) {
        case Branch::TildePlus: return "^+";
        case Branch::TildeMinus: return "^-";
        default: return "";
    }
}

FamilyDescriptor FamilyDescriptor::brieskorn(std::vector<long long> exponents,
                                             std::optional<std::vector<long long>> cells) {
    FamilyDescriptor d;
    d.family = Family::Brieskorn;
    d.exponents = std::move(exponents);
    d.custom_cells = std::move(cells);
    d.n = static_cast<long long>(d.exponents.size()) - 1;
    d.validate();
    return d;
}
FamilyDescriptor FamilyDescriptor::ustilovsky(long long p, long long n) {
    FamilyDescriptor d;
    d.family = Family::Ustilovsky;
    d.p = p;
    d.n = n;
    d.validate();
    return d;
}
FamilyDescriptor FamilyDescriptor::ustilovsky_perturbed(long long p, long long n) {
    FamilyDescriptor d;
    d.family = Family::UstilovskyPerturbed;
    d.p = p;
    d.n = n;
    d.validate();
    return d;
}
FamilyDescriptor FamilyDescriptor::sigma_plus(long long n, std::vector<long long> tail) {
    FamilyDescriptor d;
    d.family = Family::SigmaPlus;
    d.n = n;
    d.exponents = std::move(tail);
    d.validate();
    return d;
}
FamilyDescriptor FamilyDescriptor::sigma_minus(long long n, std::vector<long long> tail) {
    FamilyDescriptor d;
    d.family = Family::SigmaMinus;
    d.n = n;
    d.exponents = std::move(tail);
    d.validate();
    return d;
}

namespace {

void validate_odd_coprime_tail(const std::vector<long long>& tail, const char* what) {
    for (size_t i = 0; i < tail.size(); ++i) {
        require(tail[i] >= 3 && is_odd(tail[i]),
                std::string(what) + " exponents must be odd and >= 3");
        if (i > 0)
            require(tail[i] > tail[i - 1],
                    std::string(what) + " exponents must be strictly increasing");
        for (size_t j = 0; j < i; ++j)
            require(std::gcd(tail[i], tail[j]) == 1,
                    std::string(what) + " exponents must be pairwise coprime");
    }
}

}  // namespace

void FamilyDescriptor::validate() const {
    switch (family) {
        case Family::Brieskorn: {
            require(exponents.size() >= 2, "brieskorn needs at least two exponents");
            for (long long e : exponents) require(e >= 2, "exponents must be >= 2");
            break;
        }
        case Family::Ustilovsky:
        case Family::UstilovskyPerturbed:
            require(p >= 3 && is_odd(p), "p must be odd and >= 3");
            require(n >= 5 && is_odd(n), "n must be odd and >= 5");
            break;
        case Family::SigmaPlus:
            require(n >= 3, "n must be >= 3");
            require(static_cast<long long>(exponents.size()) == n - 2,
                    "sigma_plus needs exponents a_3..a_n");
            validate_odd_coprime_tail(exponents, "sigma_plus");
            break;
        case Family::SigmaMinus:
            require(n >= 3, "n must be >= 3");
            require(static_cast<long long>(exponents.size()) == n - 1,
                    "sigma_minus needs exponents a_2..a_n");
            validate_odd_coprime_tail(exponents, "sigma_minus");
            for (long long e : exponents)
                require(e % 3 != 0,
                        "sigma_minus exponents must be coprime to 3 so the orbit "
                        "strata stay on the 6Z ladder");
            break;
    }
}

ExponentVector FamilyDescriptor::exponent_vector() const {
    switch (family) {
        case Family::Brieskorn: return ExponentVector(exponents);
        case Family::Ustilovsky: {
            std::vector<long long> a(static_cast<size_t>(n), 2);
            a.push_back(p);
            return ExponentVector(a);
        }
        case Family::SigmaPlus: {
            std::vector<long long> a{2, 2, 2};
            a.insert(a.end(), exponents.begin(), exponents.end());
            return ExponentVector(a);
        }
        case Family::SigmaMinus: {
            std::vector<long long> a{2, 3};
            a.insert(a.end(), exponents.begin(), exponents.end());
            return ExponentVector(a);
        }
        case Family::UstilovskyPerturbed:
            throw ValidationError("the perturbed family has no single exponent vector");
    }
    throw ValidationError("unknown family");
}

std::string FamilyDescriptor::name() const {
    auto tail = [this]() {
        std::string s;
        for (size_t i = 0; i < exponents.size(); ++i)
            s += (i ? "," : "") + std::to_string(exponents[i]);
        return s;
    };
    switch (family) {
        case Family::Brieskorn: return "brieskorn(" + tail() + ")";
        case Family::Ustilovsky:
            return "ustilovsky(p=" + std::to_string(p) + ",n=" + std::to_string(n) + ")";
        case Family::UstilovskyPerturbed:
            return "ustilovsky_perturbed(p=" + std::to_string(p) + ",n=" + std::to_string(n) + ")";
        case Family::SigmaPlus:
            return "sigma_plus(n=" + std::to_string(n) + ";" + tail() + ")";
        case Family::SigmaMinus:
            return "sigma_minus(n=" + std::to_string(n) + ";" + tail() + ")";
    }
    return "?";
}

FamilyDescriptor FamilyDescriptor::parse(const std::string& family, long long p, long long n,
                                         const std::vector<long long>& exponents,
                                         const std::optional<std::vector<long long>>& cells) {
    if (family == "brieskorn") return brieskorn(exponents, cells);
    if (family == "ustilovsky") return ustilovsky(p, n);
    if (family == "ustilovsky_perturbed") return ustilovsky_perturbed(p, n);
    if (family == "sigma_plus") return sigma_plus(n, exponents);
    if (family == "sigma_minus") return sigma_minus(n, exponents);
    throw ValidationError("unknown family '" + family + "'");
}

namespace {

// Topology of {z : z_k = 0 for k not active} in the link, read off the active
// sub-vector of exponents.  Known cases: all twos (unit cotangent of a
// sphere), (2,3) (a circle), and the full (2,...,2,p) vector with n odd
// (a homotopy sphere).  Everything else is Custom.
StratumKind resolve_kind(const ExponentVector& a, const std::set<int>& active,
                         const std::optional<std::vector<long long>>& custom_cells) {
    std::vector<long long> sub;
    for (int k : active) sub.push_back(a.entries[static_cast<size_t>(k)]);
    std::sort(sub.begin(), sub.end());

    bool all_two = std::all_of(sub.begin(), sub.end(), [](long long e) { return e == 2; });
    if (all_two)
        return StratumKind::unit_cotangent(static_cast<long long>(sub.size()) - 1);
    if (sub.size() == 2 && sub[0] == 2 && sub[1] == 3) return StratumKind::circle();

    bool ustilovsky_shape =
        sub.size() >= 3 && is_odd(sub.back()) && sub.back() >= 3 &&
        std::all_of(sub.begin(), sub.end() - 1, [](long long e) { return e == 2; });
    if (ustilovsky_shape && active.size() == a.entries.size() && is_odd(a.n()))
        return StratumKind::sphere(2 * a.n() - 1);

    if (custom_cells) return StratumKind::custom(*custom_cells);
    return StratumKind::custom({});
}

}  // namespace

std::vector<OrbitStratum> enumerate_strata(
    const ExponentVector& a, long long L_max,
    const std::optional<std::vector<long long>>& custom_cells) {
    require(L_max >= 0, "L_max must be >= 0");
    std::vector<OrbitStratum> out;
    for (long long L = 1; L <= L_max; ++L) {
        std::set<int> active;
        for (size_t k = 0; k < a.entries.size(); ++k)
            if (L % a.entries[k] == 0) active.insert(static_cast<int>(k));
        if (active.size() < 2) continue;  // at least two coordinates are non-zero
        OrbitStratum s;
        s.L = L;
        s.length = InfRat(Rat(L));
        s.active_coords = std::move(active);
        s.kind = resolve_kind(a, s.active_coords, custom_cells);
        s.dim = s.kind.dim();
        s.branch = OrbitStratum::Branch::Plain;
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<OrbitStratum> enumerate_perturbed_strata(long long p, long long n,
                                                     long long L_max) {
    FamilyDescriptor::ustilovsky_perturbed(p, n);  // validates p, n
    std::vector<OrbitStratum> out;
    const InfRat one_plus_eps(Rat(1), Rat(1));
    const InfRat one_minus_eps(Rat(1), Rat(-1));
    for (long long L = 2; L <= L_max; L += 2) {
        {
            OrbitStratum s;  // w_0-axis circle, period L/(1+eps) * pi/2
            s.L = L;
            s.length = InfRat(Rat(L)) / one_plus_eps;
            s.kind = StratumKind::circle();
            s.dim = 1;
            s.active_coords = {0};
            s.branch = OrbitStratum::Branch::TildePlus;
            out.push_back(std::move(s));
        }
        {
            OrbitStratum s;  // middle stratum in the w_2..w_n coordinates
            s.L = L;
            s.length = InfRat(Rat(L));
            s.branch = OrbitStratum::Branch::Tilde;
            if (L % p == 0) {
                s.kind = StratumKind::sphere(2 * n - 5);
                for (int k = 2; k <= static_cast<int>(n); ++k) s.active_coords.insert(k);
            } else {
                s.kind = StratumKind::unit_cotangent(n - 3);
                for (int k = 2; k <= static_cast<int>(n) - 1; ++k) s.active_coords.insert(k);
            }
            s.dim = s.kind.dim();
            out.push_back(std::move(s));
        }
        {
            OrbitStratum s;  // w_1-axis circle, period L/(1-eps) * pi/2
            s.L = L;
            s.length = InfRat(Rat(L)) / one_minus_eps;
            s.kind = StratumKind::circle();
            s.dim = 1;
            s.active_coords = {1};
            s.branch = OrbitStratum::Branch::TildeMinus;
            out.push_back(std::move(s));
        }
    }
    return out;
}

long long perturbed_cz_index(long long p, long long n, const InfRat& len) {
    const InfRat one_plus_eps(Rat(1), Rat(1));
    const InfRat one_minus_eps(Rat(1), Rat(-1));
    const InfRat two(Rat(2));
    auto brackets = [](const InfRat& x) { return inf_floor(x) + inf_ceil(x); };

    BigInt s = brackets(len * one_plus_eps / two) + brackets(len * one_minus_eps / two);
    s += BigInt(n - 2) * brackets(len / two);
    s += brackets(len / InfRat(Rat(p)));
    s -= brackets(len);
    return static_cast<long long>(s);
}

namespace {

std::vector<Generator> grade_unperturbed(const FamilyDescriptor& fam,
                                         const std::vector<OrbitStratum>& strata) {
    ExponentVector a = fam.exponent_vector();
    std::vector<Generator> out;
    for (const OrbitStratum& s : strata) {
        if (s.kind.type == StratumKind::Type::Custom && s.kind.custom_cells.empty())
            throw ValidationError("stratum topology unknown for " + fam.name() +
                                  " at L=" + std::to_string(s.L) +
                                  "; supply Morse cells explicitly");
        for (long long c : s.kind.cells()) {
            Generator g;
            g.stratum = s;
            g.morse_cell = c;
            IndexInput inp;
            inp.L = s.L;
            inp.morse_index = c;
            inp.stratum_dim = s.dim;
            g.degree = brieskorn_index(a, inp);
            g.label = subscript_label(s.L, c, s.branch_suffix());
            out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<Generator> grade_perturbed(const FamilyDescriptor& fam,
                                       const std::vector<OrbitStratum>& strata) {
    std::vector<Generator> out;
    for (const OrbitStratum& s : strata) {
        long long cz = perturbed_cz_index(fam.p, fam.n, s.length);
        for (long long c : s.kind.cells()) {
            Generator g;
            g.stratum = s;
            g.morse_cell = c;
            IndexInput inp;
            inp.L = s.L;
            inp.morse_index = c;
            inp.stratum_dim = s.dim;
            g.degree = morse_bott_index(cz, inp);
            g.label = subscript_label(s.L, c, s.branch_suffix());
            out.push_back(std::move(g));
        }
    }
    return out;
}

// Largest even L enumerated for the Sigma+- families before the stratum
// topology table stops applying.
long long sigma_window_limit(const FamilyDescriptor& fam) {
    return 2 * fam.exponents.front() - 1;
}

}  // namespace

std::vector<Generator> spectrum(const FamilyDescriptor& fam, long long L_max) {
    fam.validate();
    require(L_max >= 0, "L_max must be >= 0");
    std::vector<Generator> out;
    switch (fam.family) {
        case FamilyDescriptor::Family::UstilovskyPerturbed:
            out = grade_perturbed(fam, enumerate_perturbed_strata(fam.p, fam.n, L_max));
            break;
        case FamilyDescriptor::Family::SigmaPlus:
        case FamilyDescriptor::Family::SigmaMinus:
            if (L_max > sigma_window_limit(fam))
                throw WindowError("window hypothesis fails: smallest large exponent " +
                                  std::to_string(fam.exponents.front()) +
                                  " certifies the stratum table only for L <= " +
                                  std::to_string(sigma_window_limit(fam)));
            out = grade_unperturbed(fam, enumerate_strata(fam.exponent_vector(), L_max));
            break;
        default:
            out = grade_unperturbed(
                fam, enumerate_strata(fam.exponent_vector(), L_max, fam.custom_cells));
            break;
    }
    std::sort(out.begin(), out.end(), [](const Generator& x, const Generator& y) {
        if (x.stratum.length != y.stratum.length) return x.stratum.length < y.stratum.length;
        if (x.stratum.branch != y.stratum.branch) return x.stratum.branch < y.stratum.branch;
        return x.morse_cell < y.morse_cell;
    });
    return out;
}

std::vector<long long> handle_spectrum(long long n, long long k, long long count) {
    require(k >= 1, "handle index must be >= 1");
    if (k >= n) throw ValidationError("only subcritical handles (k < n) carry cocore orbits");
    require(count >= 0, "count must be >= 0");
    std::vector<long long> out;
    out.reserve(static_cast<size_t>(2 * count));
    for (long long l = 1; l <= count; ++l) {
        out.push_back((n - k) * (2 * l - 1));
        out.push_back((n - k) * (2 * l - 1) + 1);
    }
    return out;
}

Rat periodic_flow_index(long long mu_cz_fix, long long fix_dim, long long morse_index) {
    require(fix_dim >= 1, "fixed-point set must contain the orbit (dim >= 1)");
    require(morse_index >= 0, "negative Morse index");
    return Rat(mu_cz_fix) - Rat(fix_dim - 1, 2) + Rat(morse_index);
}

}  // namespace contact_spectra
