#include <doctest.h>

#include "contact_spectra/errors.hpp"
#include "contact_spectra/surgery.hpp"

using namespace contact_spectra;

TEST_CASE("bound transport under surgery") {
    CHECK(transport_afg_bound(0, 5, 1, 4) == 1);   // 4 = 4*(2*0+1)+0
    CHECK(transport_afg_bound(0, 5, 1, 5) == 1);
    CHECK(transport_afg_bound(0, 5, 1, 6) == 0);   // 6 not in {4,5,12,13,20,21,...}
    CHECK(transport_afg_bound(3, 5, 1, 13) == 4);
    CHECK(transport_afg_bound(3, 5, 1, 21) == 4);
    CHECK(transport_afg_bound(3, 5, 1, 8) == 3);
    CHECK_THROWS_AS(transport_afg_bound(0, 5, 2, 4), ValidationError);
    CHECK_THROWS_AS(transport_afg_bound(0, 5, 6, 4), ValidationError);

    // agrees with the cocore degree list
    for (long long k : {1, 3, 4}) {
        auto degrees = handle_spectrum(5, k, 40);
        for (long long j = 0; j <= 100; ++j) {
            bool listed = std::find(degrees.begin(), degrees.end(), j) != degrees.end();
            CHECK(transport_afg_bound(7, 5, k, j) == (listed ? 8 : 7));
        }
    }
}

TEST_CASE("connected-sum rank addition") {
    CHECK(connected_sum_rank({RankValue(1), RankValue(1), RankValue(1)}) == RankValue(3));
    CHECK(connected_sum_rank({RankValue(0), RankValue(0)}) == RankValue(0));
    CHECK(connected_sum_rank({RankValue(0, 1), RankValue(0, 1)}) == RankValue(0, 2));
}

TEST_CASE("connected-sum dichotomy") {
    using pairs = std::vector<std::pair<long long, long long>>;
    CHECK(connected_sum_dichotomy(0, 0) == pairs{{1, 0}});
    CHECK(connected_sum_dichotomy(2, 3) == pairs{{3, 3}, {2, 2}});
    CHECK(connected_sum_dichotomy(0, 1) == pairs{{1, 1}, {0, 0}});
}

TEST_CASE("separating copy counts") {
    CHECK(separating_copy_counts(0, 0, 1, 3) ==
          std::vector<BigInt>{1, 2, 4, 8});
    CHECK(separating_copy_counts(4, 2, 8, 2) ==
          std::vector<BigInt>{8, 48, 288});
    CHECK(separating_copy_counts(5, 1, 3, 0) == std::vector<BigInt>{3});

    // inequality grid: every consecutive pair with l >= 1, and the first pair
    // whenever N0 exceeds both bounds
    for (long long bxi = 0; bxi <= 9; ++bxi)
        for (long long bxik = 0; bxik <= 9; ++bxik)
            for (long long n0 = 1; n0 <= 10; ++n0)
                CHECK_NOTHROW(separating_copy_counts(bxi, bxik, n0, 20));
}

TEST_CASE("mean Euler characteristic") {
    CHECK(mean_euler_characteristic(3, 5).value == Rat(13, 22));
    CHECK(mean_euler_characteristic(7, 5).value == Rat(29, 46));
    CHECK(mean_euler_characteristic(1, 5).value == Rat(1, 2));  // degenerate limit

    SUBCASE("fold identities") {
        MeanEuler single = mean_euler_characteristic(3, 5);
        CHECK(mean_euler_connected_sum({single}, 5) == single);
        CHECK(mean_euler_connected_sum({single, single}, 5).value == Rat(15, 22));
        CHECK(mean_euler_l_copies(3, 5, 2).value == Rat(15, 22));
        CHECK(mean_euler_l_copies(3, 5, 3).value == Rat(23, 22));
    }
    SUBCASE("closed form equals the iterated fold") {
        for (long long p : {3, 7, 23}) {
            for (long long n : {5, 9}) {
                std::vector<MeanEuler> acc;
                for (long long l = 1; l <= 50; ++l) {
                    acc.push_back(mean_euler_characteristic(p, n));
                    CHECK(mean_euler_connected_sum(acc, n) == mean_euler_l_copies(p, n, l));
                }
            }
        }
    }
}

TEST_CASE("matching mean Euler characteristics") {
    SUBCASE("pair (7, 23)") {
        EulerMatch m = euler_matching_counts({7, 23}, 5);
        REQUIRE(m.counts.size() == 2);
        for (const BigInt& c : m.counts) CHECK(c > 0);
        // all chi agree, re-verified through the fold
        for (size_t i = 0; i < m.counts.size(); ++i) {
            std::vector<MeanEuler> copies(
                static_cast<size_t>(m.counts[i].convert_to<long long>()),
                mean_euler_characteristic(m.primes[i], 5));
            CHECK(mean_euler_connected_sum(copies, 5).value == m.chi);
        }
    }
    SUBCASE("minimality of the first count") {
        EulerMatch m = euler_matching_counts({7, 23, 31}, 5);
        CHECK(m.counts[0] == 253);
        CHECK(m.counts[1] == 213);
        CHECK(m.counts[2] == 209);
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(euler_matching_counts({7, 7}, 5), ValidationError);
        CHECK_THROWS_AS(euler_matching_counts({7}, 5), ValidationError);
        CHECK_THROWS_AS(euler_matching_counts({7, 11}, 5), ValidationError);
    }
}

TEST_CASE("distinguish: the three cases of distinct parameters") {
    SUBCASE("q > 2p+1") {
        auto cert = distinguish({1, 7}, {1, 23}, 5);
        REQUIRE(cert);
        CHECK(cert->k == 47);
        CHECK(cert->kase == Certificate::Case::QGt2p1);
        CHECK(cert->lower_rank == 1);
        CHECK(cert->upper_bound == 0);
        CHECK(cert->excluded_form_check.excluded);
        // the ladder identities behind the choice of degree
        CHECK(ladder_degree(23, 16, 5) == 47);
        CHECK(ladder_degree(7, 16, 5) == 51);
        CHECK_NOTHROW(verify_certificate(*cert));
    }
    SUBCASE("q = 2p+1") {
        auto cert = distinguish({1, 7}, {1, 15}, 5);
        REQUIRE(cert);
        CHECK(cert->kase == Certificate::Case::QEq2p1);
        CHECK(cert->k == 91);
        CHECK(ladder_degree(15, 30, 5) == 91);
        CHECK(ladder_degree(7, 30, 5) == 97);
        CHECK_NOTHROW(verify_certificate(*cert));
    }
    SUBCASE("q < 2p+1") {
        auto cert = distinguish({1, 23}, {1, 25}, 5);
        REQUIRE(cert);
        CHECK(cert->kase == Certificate::Case::QLt2p1);
        CHECK(cert->k == 2 * 23 * 3 + 4);  // n = 5 = 1 mod 4 picks the even degree
        CHECK_NOTHROW(verify_certificate(*cert));

        auto cert7 = distinguish({1, 23}, {1, 25}, 7);
        REQUIRE(cert7);
        CHECK(cert7->k == 2 * 23 * 5 + 3);  // n = 7 = 3 mod 4 picks the odd degree
        CHECK_NOTHROW(verify_certificate(*cert7));
    }
    SUBCASE("sides are normalized") {
        auto cert = distinguish({1, 23}, {1, 7}, 5);
        REQUIRE(cert);
        CHECK(cert->k == 47);
        CHECK(cert->bounded_side == ContactDescriptor{1, 7});
        CHECK(cert->witness_side == ContactDescriptor{1, 23});
    }
}

TEST_CASE("distinguish: copy counts") {
    SUBCASE("equal descriptors have no certificate") {
        CHECK(!distinguish({1, 7}, {1, 7}, 5));
        CHECK(!distinguish({3, 23}, {3, 23}, 5));
    }
    SUBCASE("equal p, different copy counts") {
        auto cert = distinguish({2, 7}, {5, 7}, 5);
        REQUIRE(cert);
        CHECK(cert->kase == Certificate::Case::PEqQ);
        CHECK(cert->lower_rank == 5);
        CHECK(cert->upper_bound == 2);
        CHECK(cert->bk_bounded == 1);
        CHECK_NOTHROW(verify_certificate(*cert));
    }
    SUBCASE("copies scale the gap") {
        auto cert = distinguish({4, 7}, {3, 23}, 5);
        REQUIRE(cert);
        CHECK(cert->lower_rank == 3);
        CHECK(cert->upper_bound == 0);
        CHECK_NOTHROW(verify_certificate(*cert));
    }
}

TEST_CASE("distinguish: validation") {
    CHECK_THROWS_AS(distinguish({1, 11}, {1, 7}, 5), ValidationError);  // 11 = 3 mod 8
    CHECK_THROWS_AS(distinguish({1, 8}, {1, 7}, 5), ValidationError);
    CHECK_THROWS_AS(distinguish({0, 7}, {1, 23}, 5), ValidationError);
    CHECK_THROWS_AS(distinguish({1, 7}, {1, 23}, 4), ValidationError);
    CHECK_NOTHROW(distinguish({1, 7}, {1, 9}, 5));  // 9 = 1 mod 8 is admissible
}

TEST_CASE("certificate verification catches tampering") {
    auto cert = distinguish({1, 7}, {1, 23}, 5);
    REQUIRE(cert);
    Certificate bad = *cert;
    bad.k = 48;  // occupied degree on the bounded side
    CHECK_THROWS_AS(verify_certificate(bad), std::logic_error);
    bad = *cert;
    bad.lower_rank = 0;
    CHECK_THROWS_AS(verify_certificate(bad), std::logic_error);
    bad = *cert;
    bad.bk_bounded = 1;
    CHECK_THROWS_AS(verify_certificate(bad), std::logic_error);
}

TEST_CASE("desk-scale sweep over admissible pairs") {
    std::vector<long long> ps;
    for (long long p = 3; p <= 49; p += 2)
        if (p % 8 == 1 || p % 8 == 7) ps.push_back(p);
    CHECK(ps == std::vector<long long>{7, 9, 15, 17, 23, 25, 31, 33, 39, 41, 47, 49});
    for (long long n : {5, 7, 9}) {
        for (size_t i = 0; i < ps.size(); ++i) {
            for (size_t j = i + 1; j < ps.size(); ++j) {
                CAPTURE(n);
                CAPTURE(ps[i]);
                CAPTURE(ps[j]);
                auto cert = distinguish({1, ps[i]}, {1, ps[j]}, n);
                REQUIRE(cert);
                CHECK_NOTHROW(verify_certificate(*cert));
            }
        }
    }
}
