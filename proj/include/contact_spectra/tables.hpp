#pragma once

#include <string>
#include <vector>

#include "contact_spectra/surgery.hpp"

namespace contact_spectra {

enum class OutputFormat { Json, Csv, Markdown };
OutputFormat parse_format(const std::string& s);

// Row/table projections of the library results.  JSON is the canonical
// schema and round-trips exactly; CSV and markdown are one-way projections.

struct SpectrumRow {
    long long L = 0;
    std::string stratum;
    std::string branch;
    long long cell = 0;
    long long degree = 0;
    std::string length_std;  // exact rationals, as "a/b" strings
    std::string length_inf;
    std::string label;
    bool operator==(const SpectrumRow&) const = default;
};
struct SpectrumTable {
    std::string family;
    long long lmax = 0;
    std::vector<SpectrumRow> rows;
    bool operator==(const SpectrumTable&) const = default;
};
SpectrumTable make_spectrum_table(const FamilyDescriptor& fam, long long lmax);

struct AfgRow {
    long long k = 0;
    long long bound = 0;
    long long window_valid_up_to = 0;
    bool operator==(const AfgRow&) const = default;
};
struct AfgTable {
    std::string family;
    std::vector<AfgRow> rows;
    bool operator==(const AfgTable&) const = default;
};
AfgTable make_afg_table(const FamilyDescriptor& fam, long long k_min, long long k_max);

struct RankRow {
    long long k = 0;
    long long lo = 0;
    long long hi = 0;
    std::string justification;
    bool operator==(const RankRow&) const = default;
};
struct RankTable {
    std::string family;
    std::string variant;  // "sh_plus" or "sh"
    std::vector<RankRow> rows;
    bool operator==(const RankTable&) const = default;
};
RankTable make_rank_table(const FamilyDescriptor& fam, long long k_min, long long k_max,
                          bool full_sh);

struct EulerResult {
    long long p = 0;
    long long n = 0;
    long long copies = 1;
    std::string chi;  // exact rational
    bool operator==(const EulerResult&) const = default;
};
EulerResult make_euler_result(long long p, long long n, long long copies);

struct EulerMatchRow {
    long long p = 0;
    std::string copies;  // may exceed 64 bits
    bool operator==(const EulerMatchRow&) const = default;
};
struct EulerMatchTable {
    long long n = 0;
    std::string chi;
    std::vector<EulerMatchRow> rows;
    bool operator==(const EulerMatchTable&) const = default;
};
EulerMatchTable make_euler_match_table(const std::vector<long long>& primes, long long n);

struct HandleTable {
    long long n = 0;
    long long k = 0;
    long long count = 0;
    std::vector<long long> indices;
    bool operator==(const HandleTable&) const = default;
};
HandleTable make_handle_table(long long n, long long k, long long count);

struct SumSequenceTable {
    long long b_xi = 0;
    long long b_xik = 0;
    std::string n0;
    long long steps = 0;
    std::vector<std::string> counts;
    bool operator==(const SumSequenceTable&) const = default;
};
SumSequenceTable make_sum_sequence_table(long long b_xi, long long b_xik,
                                         const std::string& n0, long long steps);

// Renderers and (for JSON) parsers.
std::string render_json(const SpectrumTable&);
std::string render_json(const AfgTable&);
std::string render_json(const RankTable&);
std::string render_json(const Certificate&);
std::string render_json(const EulerResult&);
std::string render_json(const EulerMatchTable&);
std::string render_json(const HandleTable&);
std::string render_json(const SumSequenceTable&);

SpectrumTable parse_spectrum_table(const std::string& json);
AfgTable parse_afg_table(const std::string& json);
RankTable parse_rank_table(const std::string& json);
Certificate parse_certificate(const std::string& json);
EulerResult parse_euler_result(const std::string& json);
EulerMatchTable parse_euler_match_table(const std::string& json);
HandleTable parse_handle_table(const std::string& json);
SumSequenceTable parse_sum_sequence_table(const std::string& json);

std::string render(const SpectrumTable&, OutputFormat);
std::string render(const AfgTable&, OutputFormat);
std::string render(const RankTable&, OutputFormat);
std::string render(const Certificate&, OutputFormat);
std::string render(const EulerResult&, OutputFormat);
std::string render(const EulerMatchTable&, OutputFormat);
std::string render(const HandleTable&, OutputFormat);
std::string render(const SumSequenceTable&, OutputFormat);

bool certificates_equal(const Certificate& a, const Certificate& b);

}  // namespace contact_spectra
