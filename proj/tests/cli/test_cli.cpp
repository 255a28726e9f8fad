#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "contact_spectra/tables.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("CONTACT_SPECTRA_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "CONTACT_SPECTRA_CLI must point at the binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("spectrum command") {
    auto r = run_cli("spectrum --family ustilovsky --p 7 --n 5 --lmax 4");
    CHECK(r.exit_code == 0);
    auto table = contact_spectra::parse_spectrum_table(r.out);
    CHECK(table.rows.size() == 8);  // L = 2, 4, four cells each
    CHECK(table.rows.front().degree == 4);

    auto empty = run_cli("spectrum --family ustilovsky --p 7 --n 5 --lmax 1");
    CHECK(empty.exit_code == 0);
    CHECK(contact_spectra::parse_spectrum_table(empty.out).rows.empty());

    CHECK(run_cli("spectrum --family ustilovsky --p 8 --n 5 --lmax 4").exit_code == 2);
    CHECK(run_cli("spectrum --family sigma_plus --n 5 --exponents 11,13,15 --lmax 40")
              .exit_code == 3);
    CHECK(run_cli("spectrum --family ustilovsky --p 7 --n 5").exit_code == 2);
}

TEST_CASE("distinguish command") {
    auto r = run_cli("distinguish --n 5 --left 1x7 --right 1x23 --verify");
    CHECK(r.exit_code == 0);
    auto cert = contact_spectra::parse_certificate(r.out);
    CHECK(cert.k == 47);

    CHECK(run_cli("distinguish --n 5 --left 1x7 --right 1x7").exit_code == 1);
    CHECK(run_cli("distinguish --n 5 --left 1x11 --right 1x7").exit_code == 2);
}

TEST_CASE("euler commands") {
    auto r = run_cli("euler --n 5 --p 3 --copies 2");
    CHECK(r.exit_code == 0);
    CHECK(contact_spectra::parse_euler_result(r.out).chi == "15/22");

    auto m = run_cli("euler-match --n 5 --primes 7,23");
    CHECK(m.exit_code == 0);
    auto table = contact_spectra::parse_euler_match_table(m.out);
    CHECK(table.rows.size() == 2);
}

TEST_CASE("handle-spectrum and sum-sequence commands") {
    auto h = run_cli("handle-spectrum --n 5 --k 2 --count 3 --format csv");
    CHECK(h.exit_code == 0);
    CHECK(h.out.find("3") != std::string::npos);

    auto s = run_cli("sum-sequence --b-xi 4 --b-xik 2 --n0 8 --steps 3");
    CHECK(s.exit_code == 0);
    auto table = contact_spectra::parse_sum_sequence_table(s.out);
    CHECK(table.counts == std::vector<std::string>{"8", "48", "288", "1728"});
}

TEST_CASE("afg and sh-ranks commands") {
    auto a = run_cli("afg --family ustilovsky_perturbed --p 7 --n 5 --kmin 0 --kmax 12");
    CHECK(a.exit_code == 0);
    auto bounds = contact_spectra::parse_afg_table(a.out);
    CHECK(bounds.rows.size() == 13);

    auto s = run_cli("sh-ranks --family ustilovsky --p 7 --n 5 --kmin 5 --kmax 30 --table sh");
    CHECK(s.exit_code == 0);
    auto ranks = contact_spectra::parse_rank_table(s.out);
    CHECK(ranks.rows.front().lo == 1);  // the filling class at k = n

    // window violations exit 3
    CHECK(run_cli("sh-ranks --family sigma_plus --n 5 --exponents 11,13,15 --k 100")
              .exit_code == 3);
}
