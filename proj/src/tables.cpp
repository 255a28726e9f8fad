#include "contact_spectra/tables.hpp"

#include <json.hpp>
#include <sstream>

#include "contact_spectra/errors.hpp"

namespace contact_spectra {

using nlohmann::json;

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "markdown" || s == "md") return OutputFormat::Markdown;
    throw ValidationError("unknown format '" + s + "' (expected json, csv or markdown)");
}

namespace {

std::string branch_name(OrbitStratum::Branch b) {
    switch (b) {
        case OrbitStratum::Branch::Plain: return "plain";
        case OrbitStratum::Branch::Tilde: return "tilde";
        case OrbitStratum::Branch::TildePlus: return "tilde_plus";
        case OrbitStratum::Branch::TildeMinus: return "tilde_minus";
    }
    return "?";
}

// Human-readable length column: the infinitesimal part shown symbolically.
std::string length_display(const std::string& std_part, const std::string& inf_part) {
    InfRat v(Rat::parse(std_part), Rat::parse(inf_part));
    return v.str();
}

struct Grid {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string grid_csv(const Grid& g) {
    std::ostringstream os;
    auto line = [&os](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
        os << "\n";
    };
    line(g.header);
    for (const auto& r : g.rows) line(r);
    return os.str();
}

std::string grid_markdown(const Grid& g) {
    std::ostringstream os;
    auto line = [&os](const std::vector<std::string>& cells) {
        os << "|";
        for (const auto& c : cells) os << " " << c << " |";
        os << "\n";
    };
    line(g.header);
    os << "|";
    for (size_t i = 0; i < g.header.size(); ++i) os << "---|";
    os << "\n";
    for (const auto& r : g.rows) line(r);
    return os.str();
}

std::string emit(const Grid& g, OutputFormat f, const std::string& json_text) {
    switch (f) {
        case OutputFormat::Json: return json_text;
        case OutputFormat::Csv: return grid_csv(g);
        case OutputFormat::Markdown: return grid_markdown(g);
    }
    return json_text;
}

}  // namespace

SpectrumTable make_spectrum_table(const FamilyDescriptor& fam, long long lmax) {
    SpectrumTable t;
    t.family = fam.name();
    t.lmax = lmax;
    for (const Generator& g : spectrum(fam, lmax)) {
        SpectrumRow r;
        r.L = g.stratum.L;
        r.stratum = g.stratum.kind.name();
        r.branch = branch_name(g.stratum.branch);
        r.cell = g.morse_cell;
        r.degree = g.degree;
        r.length_std = g.stratum.length.std_part().str();
        r.length_inf = g.stratum.length.inf_part().str();
        r.label = g.label;
        t.rows.push_back(std::move(r));
    }
    return t;
}

AfgTable make_afg_table(const FamilyDescriptor& fam, long long k_min, long long k_max) {
    AfgTable t;
    t.family = fam.name();
    for (long long k = k_min; k <= k_max; ++k) {
        AfgBound b = afg_bound(fam, k);
        t.rows.push_back({k, b.bound, b.window_valid_up_to});
    }
    return t;
}

RankTable make_rank_table(const FamilyDescriptor& fam, long long k_min, long long k_max,
                          bool full_sh) {
    RankTable t;
    t.family = fam.name();
    t.variant = full_sh ? "sh" : "sh_plus";
    for (long long k = k_min; k <= k_max; ++k) {
        RankResult r = full_sh ? sh_rank(fam, k) : sh_plus_rank(fam, k);
        t.rows.push_back({k, r.rank.lo, r.rank.hi, justification_name(r.justification)});
    }
    return t;
}

EulerResult make_euler_result(long long p, long long n, long long copies) {
    EulerResult r;
    r.p = p;
    r.n = n;
    r.copies = copies;
    r.chi = mean_euler_l_copies(p, n, copies).value.str();
    return r;
}

EulerMatchTable make_euler_match_table(const std::vector<long long>& primes, long long n) {
    EulerMatch m = euler_matching_counts(primes, n);
    EulerMatchTable t;
    t.n = n;
    t.chi = m.chi.str();
    for (size_t i = 0; i < m.primes.size(); ++i)
        t.rows.push_back({m.primes[i], m.counts[i].str()});
    return t;
}

HandleTable make_handle_table(long long n, long long k, long long count) {
    HandleTable t;
    t.n = n;
    t.k = k;
    t.count = count;
    t.indices = handle_spectrum(n, k, count);
    return t;
}

SumSequenceTable make_sum_sequence_table(long long b_xi, long long b_xik,
                                         const std::string& n0, long long steps) {
    SumSequenceTable t;
    t.b_xi = b_xi;
    t.b_xik = b_xik;
    t.n0 = n0;
    t.steps = steps;
    for (const BigInt& v :
         separating_copy_counts(b_xi, b_xik, BigInt(n0), static_cast<int>(steps)))
        t.counts.push_back(v.str());
    return t;
}

// ---- JSON ----

namespace {

json to_json(const SpectrumRow& r) {
    return json{{"L", r.L},
                {"stratum", r.stratum},
                {"branch", r.branch},
                {"cell", r.cell},
                {"degree", r.degree},
                {"length", {{"std", r.length_std}, {"inf", r.length_inf}}},
                {"label", r.label}};
}

SpectrumRow spectrum_row_from_json(const json& j) {
    SpectrumRow r;
    r.L = j.at("L");
    r.stratum = j.at("stratum");
    r.branch = j.at("branch");
    r.cell = j.at("cell");
    r.degree = j.at("degree");
    r.length_std = j.at("length").at("std");
    r.length_inf = j.at("length").at("inf");
    r.label = j.at("label");
    return r;
}

json to_json(const Certificate& c) {
    return json{
        {"k", c.k},
        {"lower_rank", c.lower_rank},
        {"upper_bound", c.upper_bound},
        {"case", Certificate::case_name(c.kase)},
        {"n", c.n},
        {"excluded_form_check",
         {{"k", c.excluded_form_check.k},
          {"n", c.excluded_form_check.n},
          {"scanned_l_up_to", c.excluded_form_check.scanned_l_up_to},
          {"excluded", c.excluded_form_check.excluded}}},
        {"bounded_side", {{"copies", c.bounded_side.copies}, {"p", c.bounded_side.p}}},
        {"witness_side", {{"copies", c.witness_side.copies}, {"p", c.witness_side.p}}},
        {"bk_bounded", c.bk_bounded},
        {"rank_witness_per_copy", c.rank_witness_per_copy}};
}

Certificate::Case case_from_name(const std::string& s) {
    for (auto c : {Certificate::Case::QGt2p1, Certificate::Case::QLt2p1,
                   Certificate::Case::QEq2p1, Certificate::Case::PEqQ})
        if (s == Certificate::case_name(c)) return c;
    throw ValidationError("unknown certificate case '" + s + "'");
}

}  // namespace

std::string render_json(const SpectrumTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows) rows.push_back(to_json(r));
    return json{{"family", t.family}, {"lmax", t.lmax}, {"generators", rows}}.dump(2);
}

SpectrumTable parse_spectrum_table(const std::string& text) {
    json j = json::parse(text);
    SpectrumTable t;
    t.family = j.at("family");
    t.lmax = j.at("lmax");
    for (const auto& r : j.at("generators")) t.rows.push_back(spectrum_row_from_json(r));
    return t;
}

std::string render_json(const AfgTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"k", r.k},
                        {"bound", r.bound},
                        {"window_valid_up_to", r.window_valid_up_to}});
    return json{{"family", t.family}, {"bounds", rows}}.dump(2);
}

AfgTable parse_afg_table(const std::string& text) {
    json j = json::parse(text);
    AfgTable t;
    t.family = j.at("family");
    for (const auto& r : j.at("bounds"))
        t.rows.push_back({r.at("k"), r.at("bound"), r.at("window_valid_up_to")});
    return t;
}

std::string render_json(const RankTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"k", r.k},
                        {"rank_lo", r.lo},
                        {"rank_hi", r.hi},
                        {"justification", r.justification}});
    return json{{"family", t.family}, {"variant", t.variant}, {"ranks", rows}}.dump(2);
}

RankTable parse_rank_table(const std::string& text) {
    json j = json::parse(text);
    RankTable t;
    t.family = j.at("family");
    t.variant = j.at("variant");
    for (const auto& r : j.at("ranks"))
        t.rows.push_back({r.at("k"), r.at("rank_lo"), r.at("rank_hi"),
                          r.at("justification")});
    return t;
}

std::string render_json(const Certificate& c) { return to_json(c).dump(2); }

Certificate parse_certificate(const std::string& text) {
    json j = json::parse(text);
    Certificate c;
    c.k = j.at("k");
    c.lower_rank = j.at("lower_rank");
    c.upper_bound = j.at("upper_bound");
    c.kase = case_from_name(j.at("case"));
    c.n = j.at("n");
    const json& e = j.at("excluded_form_check");
    c.excluded_form_check = {e.at("k"), e.at("n"), e.at("scanned_l_up_to"),
                             e.at("excluded")};
    c.bounded_side = {j.at("bounded_side").at("copies"), j.at("bounded_side").at("p")};
    c.witness_side = {j.at("witness_side").at("copies"), j.at("witness_side").at("p")};
    c.bk_bounded = j.at("bk_bounded");
    c.rank_witness_per_copy = j.at("rank_witness_per_copy");
    return c;
}

std::string render_json(const EulerResult& r) {
    return json{{"p", r.p}, {"n", r.n}, {"copies", r.copies}, {"chi_m", r.chi}}.dump(2);
}

EulerResult parse_euler_result(const std::string& text) {
    json j = json::parse(text);
    return EulerResult{j.at("p"), j.at("n"), j.at("copies"), j.at("chi_m")};
}

std::string render_json(const EulerMatchTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows) rows.push_back({{"p", r.p}, {"copies", r.copies}});
    return json{{"n", t.n}, {"chi_m", t.chi}, {"matches", rows}}.dump(2);
}

EulerMatchTable parse_euler_match_table(const std::string& text) {
    json j = json::parse(text);
    EulerMatchTable t;
    t.n = j.at("n");
    t.chi = j.at("chi_m");
    for (const auto& r : j.at("matches")) t.rows.push_back({r.at("p"), r.at("copies")});
    return t;
}

std::string render_json(const HandleTable& t) {
    return json{{"n", t.n}, {"k", t.k}, {"count", t.count}, {"indices", t.indices}}.dump(2);
}

HandleTable parse_handle_table(const std::string& text) {
    json j = json::parse(text);
    HandleTable t;
    t.n = j.at("n");
    t.k = j.at("k");
    t.count = j.at("count");
    t.indices = j.at("indices").get<std::vector<long long>>();
    return t;
}

std::string render_json(const SumSequenceTable& t) {
    return json{{"b_xi", t.b_xi},
                {"b_xik", t.b_xik},
                {"n0", t.n0},
                {"steps", t.steps},
                {"counts", t.counts}}
        .dump(2);
}

SumSequenceTable parse_sum_sequence_table(const std::string& text) {
    json j = json::parse(text);
    SumSequenceTable t;
    t.b_xi = j.at("b_xi");
    t.b_xik = j.at("b_xik");
    t.n0 = j.at("n0");
    t.steps = j.at("steps");
    t.counts = j.at("counts").get<std::vector<std::string>>();
    return t;
}

// ---- grids ----

std::string render(const SpectrumTable& t, OutputFormat f) {
    Grid g;
    g.header = {"L", "stratum", "branch", "cell", "degree", "length", "label"};
    for (const auto& r : t.rows)
        g.rows.push_back({std::to_string(r.L), r.stratum, r.branch,
                          std::to_string(r.cell), std::to_string(r.degree),
                          length_display(r.length_std, r.length_inf), r.label});
    return emit(g, f, render_json(t));
}

std::string render(const AfgTable& t, OutputFormat f) {
    Grid g;
    g.header = {"k", "b_k", "window_valid_up_to"};
    for (const auto& r : t.rows)
        g.rows.push_back({std::to_string(r.k), std::to_string(r.bound),
                          std::to_string(r.window_valid_up_to)});
    return emit(g, f, render_json(t));
}

std::string render(const RankTable& t, OutputFormat f) {
    Grid g;
    g.header = {"k", "rank", "justification"};
    for (const auto& r : t.rows) {
        std::string rank = r.lo == r.hi
                               ? std::to_string(r.lo)
                               : "{" + std::to_string(r.lo) + ".." + std::to_string(r.hi) + "}";
        g.rows.push_back({std::to_string(r.k), rank, r.justification});
    }
    return emit(g, f, render_json(t));
}

std::string render(const Certificate& c, OutputFormat f) {
    Grid g;
    g.header = {"field", "value"};
    g.rows = {{"case", Certificate::case_name(c.kase)},
              {"k", std::to_string(c.k)},
              {"lower_rank", std::to_string(c.lower_rank)},
              {"upper_bound", std::to_string(c.upper_bound)},
              {"excluded_form", c.excluded_form_check.excluded ? "yes" : "no"},
              {"bounded_side", std::to_string(c.bounded_side.copies) + "x" +
                                   std::to_string(c.bounded_side.p)},
              {"witness_side", std::to_string(c.witness_side.copies) + "x" +
                                   std::to_string(c.witness_side.p)}};
    return emit(g, f, render_json(c));
}

std::string render(const EulerResult& r, OutputFormat f) {
    Grid g;
    g.header = {"p", "n", "copies", "chi_m"};
    g.rows = {{std::to_string(r.p), std::to_string(r.n), std::to_string(r.copies), r.chi}};
    return emit(g, f, render_json(r));
}

std::string render(const EulerMatchTable& t, OutputFormat f) {
    Grid g;
    g.header = {"p", "copies", "chi_m"};
    for (const auto& r : t.rows) g.rows.push_back({std::to_string(r.p), r.copies, t.chi});
    return emit(g, f, render_json(t));
}

std::string render(const HandleTable& t, OutputFormat f) {
    Grid g;
    g.header = {"position", "degree"};
    for (size_t i = 0; i < t.indices.size(); ++i)
        g.rows.push_back({std::to_string(i), std::to_string(t.indices[i])});
    return emit(g, f, render_json(t));
}

std::string render(const SumSequenceTable& t, OutputFormat f) {
    Grid g;
    g.header = {"l", "N_l"};
    for (size_t i = 0; i < t.counts.size(); ++i)
        g.rows.push_back({std::to_string(i), t.counts[i]});
    return emit(g, f, render_json(t));
}

bool certificates_equal(const Certificate& a, const Certificate& b) {
    return a.k == b.k && a.lower_rank == b.lower_rank && a.upper_bound == b.upper_bound &&
           a.kase == b.kase && a.n == b.n &&
           a.excluded_form_check.k == b.excluded_form_check.k &&
           a.excluded_form_check.n == b.excluded_form_check.n &&
           a.excluded_form_check.scanned_l_up_to == b.excluded_form_check.scanned_l_up_to &&
           a.excluded_form_check.excluded == b.excluded_form_check.excluded &&
           a.bounded_side == b.bounded_side && a.witness_side == b.witness_side &&
           a.bk_bounded == b.bk_bounded &&
           a.rank_witness_per_copy == b.rank_witness_per_copy;
}

}  // namespace contact_spectra
