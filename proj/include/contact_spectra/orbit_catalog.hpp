#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "contact_spectra/index_engine.hpp"
#include "contact_spectra/inf_rational.hpp"

namespace contact_spectra {

// Topological type of one manifold of closed Reeb orbits, together with the
// Morse cell set of the standard Morse function on it.
struct StratumKind {
    enum class Type { Sphere, UnitCotangent, Circle, Point, Custom };

    Type type = Type::Point;
    // Sphere: odd dimension 2m-1.  UnitCotangent: base sphere dimension m.
    long long param = 0;
    std::vector<long long> custom_cells;

    static StratumKind sphere(long long odd_dim);
    static StratumKind unit_cotangent(long long base_dim);
    static StratumKind circle();
    static StratumKind point();
    static StratumKind custom(std::vector<long long> cells);

    long long dim() const;
    std::vector<long long> cells() const;
    std::string name() const;

    bool operator==(const StratumKind&) const = default;
};

// One manifold N^L of closed Reeb orbits.  `length` is the coefficient of
// pi/2 in the period; for the perturbed circle families it carries the
// infinitesimal shift L/(1 +- eps).
struct OrbitStratum {
    enum class Branch { Plain, Tilde, TildePlus, TildeMinus };

    long long L = 0;
    InfRat length;
    StratumKind kind;
    long long dim = 0;
    std::set<int> active_coords;
    Branch branch = Branch::Plain;

    std::string branch_suffix() const;
};

// One chain-complex generator: a Morse cell on an orbit stratum with its
// Morse-Bott degree.
struct Generator {
    OrbitStratum stratum;
    long long morse_cell = 0;
    long long degree = 0;
    std::string label;
};

// The manifold families whose strata and gradings are built in.
struct FamilyDescriptor {
    enum class Family { Brieskorn, Ustilovsky, UstilovskyPerturbed, SigmaPlus, SigmaMinus };

    Family family = Family::Ustilovsky;
    long long p = 0;                     // Ustilovsky families
    long long n = 0;
    std::vector<long long> exponents;    // Brieskorn: full vector; Sigma+-: the tail
    std::optional<std::vector<long long>> custom_cells;  // Brieskorn fallback strata

    static FamilyDescriptor brieskorn(std::vector<long long> exponents,
                                      std::optional<std::vector<long long>> cells = {});
    static FamilyDescriptor ustilovsky(long long p, long long n);
    static FamilyDescriptor ustilovsky_perturbed(long long p, long long n);
    static FamilyDescriptor sigma_plus(long long n, std::vector<long long> tail);
    static FamilyDescriptor sigma_minus(long long n, std::vector<long long> tail);

    void validate() const;
    ExponentVector exponent_vector() const;  // not defined for the perturbed family
    std::string name() const;

    static FamilyDescriptor parse(const std::string& family, long long p, long long n,
                                  const std::vector<long long>& exponents,
                                  const std::optional<std::vector<long long>>& cells);
};

// Strata of the standard Brieskorn Reeb flow: one stratum per L <= L_max with
// at least two coordinates k satisfying a_k | L.  Kind is resolved from the
// active sub-vector where the topology is known; otherwise Custom.
std::vector<OrbitStratum> enumerate_strata(
    const ExponentVector& a, long long L_max,
    const std::optional<std::vector<long long>>& custom_cells = {});

// Strata of the perturbed Ustilovsky form: per even L, the w_0/w_1 circles at
// lengths L/(1+eps) and L/(1-eps) and the middle stratum (S*S^{n-3} for
// p !| L, S^{2n-5} for p | L).
std::vector<OrbitStratum> enumerate_perturbed_strata(long long p, long long n,
                                                     long long L_max);

// Conley-Zehnder index of a trajectory of the perturbed form of length
// len*pi/2, by the Gauss-bracket sum evaluated in exact infinitesimal
// arithmetic.
long long perturbed_cz_index(long long p, long long n, const InfRat& len);

// Full generator spectrum of a family, graded.  Unperturbed families go
// through brieskorn_index, the perturbed family through perturbed_cz_index
// followed by the Morse-Bott correction.
std::vector<Generator> spectrum(const FamilyDescriptor& family, long long L_max);

// First `count` index pairs (n-k)(2l-1) + {0,1}, l = 1, 2, ..., of the closed
// orbits on the cocore of a subcritical k-handle.
std::vector<long long> handle_spectrum(long long n, long long k, long long count);

// Index of the non-degenerate orbits produced by perturbing a periodic Reeb
// flow: mu_CZ(Fix) - dim(Fix/S^1)/2 + morse_index, with dim(Fix/S^1) =
// fix_dim - 1.  May be half-integral on inconsistent input; callers check
// is_integer().
Rat periodic_flow_index(long long mu_cz_fix, long long fix_dim, long long morse_index);

}  // namespace contact_spectra
