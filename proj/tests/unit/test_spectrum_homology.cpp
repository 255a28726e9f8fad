#include <doctest.h>

#include "contact_spectra/errors.hpp"
#include "contact_spectra/spectrum_homology.hpp"

using namespace contact_spectra;

TEST_CASE("perturbed generator counts: table vs enumeration") {
    for (long long p : {7, 23, 31}) {
        for (long long n : {5, 9}) {
            for (long long k = 0; k <= 120; ++k) {
                CAPTURE(p);
                CAPTURE(n);
                CAPTURE(k);
                CHECK(perturbed_bk_closed_form(p, n, k) == perturbed_bk_by_enumeration(p, n, k));
            }
        }
    }
}

TEST_CASE("perturbed counts around the ladder") {
    long long p = 7, n = 5;
    // l even, p !| l-1: counts 1,2,2,1 at offsets -2..+1
    long long l = 4, f = ladder_degree(p, l, n);
    CHECK(perturbed_bk_closed_form(p, n, f - 2) == 1);
    CHECK(perturbed_bk_closed_form(p, n, f - 1) == 2);
    CHECK(perturbed_bk_closed_form(p, n, f) == 2);
    CHECK(perturbed_bk_closed_form(p, n, f + 1) == 1);
    // l odd: 1, 1 at offsets -1, 0
    l = 5;
    f = ladder_degree(p, l, n);
    CHECK(perturbed_bk_closed_form(p, n, f - 1) == 1);
    CHECK(perturbed_bk_closed_form(p, n, f) == 1);
    // l even, p | l-1: six singleton slots
    l = 8;
    f = ladder_degree(p, l, n);
    for (long long off = -4; off <= 1; ++off)
        CHECK(perturbed_bk_closed_form(p, n, f + off) == 1);
    // 2p | l-1 leaves the whole window empty
    l = 15;
    f = ladder_degree(p, l, n);
    for (long long off = -3; off <= 0; ++off)
        CHECK(perturbed_bk_closed_form(p, n, f + off) == 0);
}

TEST_CASE("afg bounds") {
    SUBCASE("perturbed family cross-checks internally") {
        auto fam = FamilyDescriptor::ustilovsky_perturbed(7, 5);
        AfgBound b = afg_bound(fam, ladder_degree(7, 4, 5) - 1);
        CHECK(b.bound == 2);
        CHECK(b.window_valid_up_to > 4);
        CHECK(afg_bound(fam, 0).bound == 0);  // below the minimal degree
        CHECK(afg_bound(fam, 3).bound == 0);
    }
    SUBCASE("unperturbed families are counted within certified windows") {
        auto fam = FamilyDescriptor::ustilovsky(7, 5);
        CHECK(afg_bound(fam, 4).bound == 1);   // 2*gamma_0
        CHECK(afg_bound(fam, 5).bound == 0);
        CHECK(afg_bound(fam, 10).bound == 1);  // 4*gamma_0
        CHECK(afg_bound(fam, 11).bound == 1);  // 2*gamma_{2n-3}
    }
    SUBCASE("zero mean index cannot be certified") {
        auto fam = FamilyDescriptor::brieskorn({2, 2}, {{0, 0, 1, 1}});
        CHECK_THROWS_AS(afg_bound(fam, 0), WindowError);
    }
    SUBCASE("enlarging the window never changes a certified bound") {
        auto fam = FamilyDescriptor::ustilovsky_perturbed(7, 5);
        for (long long k = 0; k <= 60; ++k) {
            AfgBound b = afg_bound(fam, k);
            auto wide = spectrum(fam, 4 * b.window_valid_up_to);
            long long recount = std::count_if(wide.begin(), wide.end(),
                                              [&](const Generator& g) { return g.degree == k; });
            CHECK(recount == b.bound);
        }
    }
}

TEST_CASE("rank tables for the sphere families") {
    SUBCASE("sigma_plus") {
        auto fam = FamilyDescriptor::sigma_plus(5, {101, 103, 107});
        CHECK(sh_plus_rank(fam, 6).rank == RankValue(2));
        CHECK(sh_plus_rank(fam, 4).rank == RankValue(1));
        CHECK(sh_plus_rank(fam, 5).rank == RankValue(1));
        CHECK(sh_plus_rank(fam, 3).rank == RankValue(0));
        CHECK(sh_plus_rank(fam, 100).rank == RankValue(2));
        CHECK(sh_plus_rank(fam, 6).justification == Justification::Symmetry);
        CHECK_THROWS_AS(sh_plus_rank(fam, 103), WindowError);
    }
    SUBCASE("sigma_minus") {
        auto fam = FamilyDescriptor::sigma_minus(5, {1009, 1013, 1019, 1021});
        CHECK(sh_plus_rank(fam, 3).rank == RankValue(1));
        CHECK(sh_plus_rank(fam, -100).rank == RankValue(1));
        CHECK(sh_plus_rank(fam, 4).rank == RankValue(0));
        CHECK(sh_plus_rank(fam, 3).justification == Justification::ActionGap);
        CHECK_THROWS_AS(sh_plus_rank(fam, -700), WindowError);
        auto bad = FamilyDescriptor::sigma_minus(5, {7, 11, 13, 17});
        CHECK_THROWS_AS(sh_plus_rank(bad, 3), WindowError);  // reciprocal sum over 1/6
    }
}

TEST_CASE("rank table of the (2,...,2,p) spheres") {
    long long p = 7, n = 5;
    auto fam = FamilyDescriptor::ustilovsky(p, n);

    SUBCASE("degree n carries the filling class only") {
        CHECK(sh_plus_rank(fam, n).rank == RankValue(0));
        RankResult full = sh_rank(fam, n);
        CHECK(full.rank == RankValue(1));
        CHECK(full.justification == Justification::FillingClass);
        CHECK_THROWS_AS(sh_rank(fam, n - 1), WindowError);
    }
    SUBCASE("certain and uncertain slots") {
        CHECK(sh_rank(fam, ladder_degree(p, 4, n) - 1).rank == RankValue(1));
        CHECK(sh_rank(fam, ladder_degree(p, 4, n)).rank == RankValue(1));
        // l = 8 has p | l-1: the adjacent pair is undetermined
        long long f8 = ladder_degree(p, 8, n);
        CHECK(sh_rank(fam, f8 - 2).rank == RankValue(0, 1));
        CHECK(sh_rank(fam, f8 - 1).rank == RankValue(0, 1));
        CHECK(sh_rank(fam, f8 - 2).justification == Justification::Unknown);
        CHECK(sh_rank(fam, f8).rank == RankValue(0));
        // l = 15 is odd with p | l-1: the middle block is missing entirely
        long long f15 = ladder_degree(p, 15, n);
        CHECK(sh_rank(fam, f15 - 1).rank == RankValue(0));
        CHECK(sh_rank(fam, f15).rank == RankValue(0));
    }
    SUBCASE("closed table equals the enumerated table") {
        auto enumerated = sh_rank_by_enumeration(p, n, n, 200);
        for (long long k = n; k <= 200; ++k) {
            CAPTURE(k);
            CHECK(sh_rank(fam, k).rank == enumerated.at(k));
        }
    }
}

TEST_CASE("rank bound from a generator bound plus topology") {
    auto fam = FamilyDescriptor::ustilovsky_perturbed(7, 5);
    AfgBound zero = afg_bound(fam, 3);
    CHECK(sh_rank_bound(3, zero, 0) == 0);
    AfgBound two = afg_bound(fam, ladder_degree(7, 4, 5) - 1);
    CHECK(sh_rank_bound(two.degree, two, 1) == 3);
    CHECK(sh_rank_bound(two.degree, two, 0) == two.bound);
    CHECK_THROWS_AS(sh_rank_bound(5, two, 0), ValidationError);
}
