#include <doctest.h>

#include "contact_spectra/errors.hpp"
#include "contact_spectra/index_engine.hpp"

using namespace contact_spectra;

namespace {

ExponentVector ustilovsky_exponents(long long p, long long n) {
    std::vector<long long> a(static_cast<size_t>(n), 2);
    a.push_back(p);
    return ExponentVector(a);
}

IndexInput input(long long L, long long morse, long long dim = 0) {
    IndexInput i;
    i.L = L;
    i.morse_index = morse;
    i.stratum_dim = dim;
    return i;
}

}  // namespace

TEST_CASE("closed trajectory index on (2,2,2,2,2,7)") {
    ExponentVector a({2, 2, 2, 2, 2, 7});
    CHECK(brieskorn_index(a, input(2, 0)) == 4);
    CHECK(brieskorn_index(a, input(2, 7)) == 11);
}

TEST_CASE("closed trajectory index on the (2,3,...) family") {
    // large coprime tail: index is -L/3 + (n-1) + c for L on the 6Z ladder
    ExponentVector a({2, 3, 101, 103, 107});
    CHECK(brieskorn_index(a, input(6, 0)) == 2);
    CHECK(brieskorn_index(a, input(6, 1)) == 3);
    CHECK(brieskorn_index(a, input(12, 0)) == 0);
}

TEST_CASE("the four case formulas of the (2,...,2,p) family") {
    // checked against the direct evaluation for all even L, three n, three p
    for (long long n : {5, 7, 9}) {
        for (long long p : {7, 23, 31}) {
            ExponentVector a = ustilovsky_exponents(p, n);
            for (long long L = 2; L <= 1000; L += 2) {
                auto ceil_div = [](long long x, long long d) { return (x + d - 1) / d; };
                long long f_L = ladder_degree(p, L, n);
                CHECK(brieskorn_index(a, input(L, 0)) == f_L - 1);
                if (L % p != 0) {
                    CHECK(brieskorn_index(a, input(L, n - 2)) ==
                          L * (n - 2) + 2 * ceil_div(L + 1, p) - 1);
                    CHECK(brieskorn_index(a, input(L, n - 1)) ==
                          L * (n - 2) + 2 * ceil_div(L + 1, p));
                    long long top = (L + 1) * (n - 2) + 2 * ceil_div(L + 2, p);
                    if ((L + 1) % p == 0) top -= 2;
                    CHECK(brieskorn_index(a, input(L, 2 * n - 3)) == top);
                } else {
                    CHECK(brieskorn_index(a, input(L, 2 * n - 1)) ==
                          (L + 1) * (n - 2) + 2 * ceil_div(L + 2, p));
                }
            }
        }
    }
}

TEST_CASE("stratum-corrected grading") {
    IndexInput i = input(2, 0, 1);
    CHECK(morse_bott_index(4, i) == 4);
    i = input(2, 3, 5);
    CHECK(morse_bott_index(4, i) == 5);
    i = input(2, 0, 0);
    CHECK_THROWS_AS(morse_bott_index(0, i), ParityError);
}

TEST_CASE("mean index") {
    CHECK(mean_index(ExponentVector({2, 2, 2, 2, 2, 7}), 2) == Rat(46, 7));
    CHECK(mean_index(ExponentVector({2, 2}), 2) == Rat(0));
    CHECK(mean_index(ExponentVector({2, 3, 7, 43, 47, 53}), 6).sign() < 0);
}

TEST_CASE("iteration residual stays within 2(n-1)") {
    SUBCASE("flat family: zero mean index, constant residual") {
        ExponentVector a({2, 2});
        for (long long k = 1; k <= 20; ++k)
            CHECK(iteration_residual(a, 2, k, 0) == Rat(0));
    }
    SUBCASE("catalog families, brute-force sweep") {
        struct Probe {
            std::vector<long long> a;
            long long L;
            std::vector<long long> cells;
        };
        std::vector<Probe> probes = {
            {{2, 2, 2, 2, 2, 7}, 2, {0, 3, 4, 7}},
            {{2, 3, 11, 13, 17, 19}, 6, {0, 1}},
            {{2, 2, 2, 5, 47, 49}, 2, {0, 1, 2, 3}},
            {{2, 2, 2, 2, 2, 2, 2, 49}, 2, {0, 5, 6, 11}},
        };
        for (const Probe& pr : probes) {
            ExponentVector a(pr.a);
            Rat bound(2 * (a.n() - 1));
            for (long long cell : pr.cells)
                for (long long k = 1; k <= 100; ++k)
                    CHECK(iteration_residual(a, pr.L, k, cell).abs() <= bound);
        }
    }
}

TEST_CASE("degree ladder") {
    CHECK(ladder_degree(7, 16, 5) == 51);
    CHECK(ladder_degree(23, 16, 5) == 47);
    CHECK(ladder_degree(23, 1, 5) == 2);
    CHECK(ladder_degree(3, 1, 7) == 2);  // (l-1)(n-2) + 2*ceil(1/p)

    // strict monotonicity across sign changes and p | l boundaries
    for (long long p : {3, 7, 23, 997}) {
        for (long long n : {5, 7, 9, 11}) {
            long long prev = ladder_degree(p, -10000, n);
            for (long long l = -9999; l <= 10000; ++l) {
                long long cur = ladder_degree(p, l, n);
                CHECK(cur > prev);
                prev = cur;
            }
        }
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(ExponentVector({2}), ValidationError);
    CHECK_THROWS_AS(ExponentVector({2, 1}), ValidationError);
    CHECK_THROWS_AS(ladder_degree(4, 1, 5), ValidationError);
    ExponentVector a({2, 2, 2, 2, 2, 7});
    IndexInput bad = input(0, 0);
    CHECK_THROWS_AS(brieskorn_index(a, bad), ValidationError);
}

TEST_CASE("alternative grading offset is recorded, not applied") {
    CHECK(alternative_grading_offset(5) == Rat(9, 2));
    ExponentVector a({2, 2, 2, 2, 2, 7});
    CHECK(brieskorn_index(a, input(2, 0)) == 4);  // no half-integer shift anywhere
}
