#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "contact_spectra/tables.hpp"

namespace cs = contact_spectra;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitValidation = 2;
constexpr int kExitWindow = 3;

std::vector<long long> parse_long_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    return out;
}

cs::ContactDescriptor parse_sum_descriptor(const std::string& s) {
    auto x = s.find('x');
    if (x == std::string::npos)
        throw cs::ValidationError("descriptor '" + s + "' is not of the form JxP");
    cs::ContactDescriptor d;
    d.copies = std::stoll(s.substr(0, x));
    d.p = std::stoll(s.substr(x + 1));
    return d;
}

struct FamilyFlags {
    std::string family;
    long long p = 0;
    long long n = 0;
    std::string exponents;
    std::string cells;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family,
                        "ustilovsky | ustilovsky_perturbed | sigma_plus | sigma_minus | "
                        "brieskorn")
            ->required();
        cmd->add_option("--p", p, "exponent p of the (2,...,2,p) families");
        cmd->add_option("--n", n, "half-dimension of the filling");
        cmd->add_option("--exponents", exponents,
                        "comma-separated exponents (full vector for brieskorn, tail for "
                        "sigma families)");
        cmd->add_option("--cells", cells,
                        "comma-separated Morse cells for brieskorn strata of unknown type");
    }

    cs::FamilyDescriptor descriptor() const {
        std::optional<std::vector<long long>> cc;
        if (!cells.empty()) cc = parse_long_list(cells);
        return cs::FamilyDescriptor::parse(family, p, n, parse_long_list(exponents), cc);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reeb-orbit index spectra and contact invariants of Brieskorn manifolds"};
    app.require_subcommand(1);

    std::string format = "json";

    // spectrum
    auto* sp = app.add_subcommand("spectrum", "graded generator spectrum of a family");
    FamilyFlags sp_fam;
    sp_fam.attach(sp);
    long long sp_lmax = 0;
    sp->add_option("--lmax", sp_lmax, "largest period parameter L")->required();
    sp->add_option("--format", format, "json | csv | markdown");

    // distinguish
    auto* di = app.add_subcommand("distinguish",
                                  "non-contactomorphism certificate for two connected sums");
    std::string di_left, di_right;
    long long di_n = 0;
    bool di_verify = false;
    di->add_option("--n", di_n, "half-dimension of the filling")->required();
    di->add_option("--left", di_left, "JxP, the j-fold sum of the p-sphere")->required();
    di->add_option("--right", di_right, "IxQ")->required();
    di->add_flag("--verify", di_verify, "re-run the independent enumeration check");
    di->add_option("--format", format, "json | csv | markdown");

    // afg
    auto* af = app.add_subcommand("afg", "generator-count bounds b_k");
    FamilyFlags af_fam;
    af_fam.attach(af);
    long long af_k = 0, af_kmin = 0, af_kmax = -1;
    af->add_option("--k", af_k, "single degree");
    af->add_option("--kmin", af_kmin, "first degree of a table");
    af->add_option("--kmax", af_kmax, "last degree of a table");
    af->add_option("--format", format, "json | csv | markdown");

    // sh-ranks
    auto* sh = app.add_subcommand("sh-ranks", "symplectic-homology rank tables");
    FamilyFlags sh_fam;
    sh_fam.attach(sh);
    long long sh_k = 0, sh_kmin = 0, sh_kmax = -1;
    std::string sh_variant = "sh_plus";
    sh->add_option("--k", sh_k, "single degree");
    sh->add_option("--kmin", sh_kmin, "first degree of a table");
    sh->add_option("--kmax", sh_kmax, "last degree of a table");
    sh->add_option("--table", sh_variant, "sh_plus (Reeb part) or sh (full, k >= n)");
    sh->add_option("--format", format, "json | csv | markdown");

    // euler
    auto* eu = app.add_subcommand("euler", "mean Euler characteristic of l-fold sums");
    long long eu_p = 0, eu_n = 0, eu_copies = 1;
    eu->add_option("--p", eu_p)->required();
    eu->add_option("--n", eu_n)->required();
    eu->add_option("--copies", eu_copies, "number of connected-sum copies");
    eu->add_option("--format", format, "json | csv | markdown");

    // euler-match
    auto* em = app.add_subcommand("euler-match",
                                  "copy counts giving equal mean Euler characteristics");
    std::string em_primes;
    long long em_n = 0;
    em->add_option("--n", em_n)->required();
    em->add_option("--primes", em_primes, "comma-separated parameters p_i")->required();
    em->add_option("--format", format, "json | csv | markdown");

    // handle-spectrum
    auto* ha = app.add_subcommand("handle-spectrum",
                                  "degrees of the closed orbits on a subcritical handle");
    long long ha_n = 0, ha_k = 0, ha_count = 0;
    ha->add_option("--n", ha_n)->required();
    ha->add_option("--k", ha_k, "handle index")->required();
    ha->add_option("--count", ha_count, "number of index pairs")->required();
    ha->add_option("--format", format, "json | csv | markdown");

    // sum-sequence
    auto* sq = app.add_subcommand("sum-sequence",
                                  "copy counts whose ranks outgrow every transported bound");
    long long sq_bxi = 0, sq_bxik = 0, sq_steps = 0;
    std::string sq_n0 = "1";
    sq->add_option("--b-xi", sq_bxi)->required();
    sq->add_option("--b-xik", sq_bxik)->required();
    sq->add_option("--n0", sq_n0);
    sq->add_option("--steps", sq_steps)->required();
    sq->add_option("--format", format, "json | csv | markdown");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        cs::OutputFormat fmt = cs::parse_format(format);

        if (*sp) {
            std::cout << cs::render(cs::make_spectrum_table(sp_fam.descriptor(), sp_lmax), fmt);
            return kExitOk;
        }
        if (*di) {
            auto cert = cs::distinguish(parse_sum_descriptor(di_left),
                                        parse_sum_descriptor(di_right), di_n);
            if (!cert) {
                std::cerr << "equal parameters: the two descriptors name the same contact "
                             "structure\n";
                return kExitNegative;
            }
            if (di_verify) cs::verify_certificate(*cert);
            std::cout << cs::render(*cert, fmt);
            return kExitOk;
        }
        if (*af) {
            if (af_kmax < af_kmin) af_kmin = af_kmax = af_k;
            std::cout << cs::render(cs::make_afg_table(af_fam.descriptor(), af_kmin, af_kmax),
                                    fmt);
            return kExitOk;
        }
        if (*sh) {
            if (sh_kmax < sh_kmin) sh_kmin = sh_kmax = sh_k;
            bool full = sh_variant == "sh";
            if (!full && sh_variant != "sh_plus")
                throw cs::ValidationError("--table must be sh or sh_plus");
            std::cout << cs::render(
                cs::make_rank_table(sh_fam.descriptor(), sh_kmin, sh_kmax, full), fmt);
            return kExitOk;
        }
        if (*eu) {
            std::cout << cs::render(cs::make_euler_result(eu_p, eu_n, eu_copies), fmt);
            return kExitOk;
        }
        if (*em) {
            std::cout << cs::render(cs::make_euler_match_table(parse_long_list(em_primes), em_n),
                                    fmt);
            return kExitOk;
        }
        if (*ha) {
            std::cout << cs::render(cs::make_handle_table(ha_n, ha_k, ha_count), fmt);
            return kExitOk;
        }
        if (*sq) {
            std::cout << cs::render(cs::make_sum_sequence_table(sq_bxi, sq_bxik, sq_n0, sq_steps),
                                    fmt);
            return kExitOk;
        }
    } catch (const cs::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const cs::WindowError& e) {
        std::cerr << "window error: " << e.what() << "\n";
        return kExitWindow;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
