// kumlat: exact-integer invariants governing rational Lagrangian fibrations
// on generalized Kummer varieties.
//
// Subcommands:
//   fm                 cohomological Fourier-Mukai transform of a Mukai vector
//   bb                 Beauville-Bogomolov square of a class on K^nA
//   check              fibration criterion for a principal surface
//   survey             batch criterion table with lattice cross-check
//   lattice isotropic  bounded square-zero vector search on a raw lattice
//
// Exit codes: 0 success, 2 usage error, 3 domain error, 4 consistency
// failure. Every error also prints a one-line JSON object to stderr.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kumlat/abelian_surface.hpp"
#include "kumlat/error.hpp"
#include "kumlat/fourier_mukai.hpp"
#include "kumlat/integer.hpp"
#include "kumlat/kummer.hpp"
#include "kumlat/lattice.hpp"
#include "kumlat/serialize.hpp"

namespace {

using namespace kumlat;

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitConsistency = 4;

void emit_error(const std::string& code, const std::string& message) {
    std::cerr << "{\"error\":" << json_string(code)
              << ",\"message\":" << json_string(message) << "}\n";
}

DivisorClass parse_class(const std::string& csv) {
    return DivisorClass(parse_csv_ints(csv));
}

struct FmArgs {
    std::string r, c1, chi, gram = "2";
    int wit = 0;
};

struct BbArgs {
    std::string gram = "2", n, cls;
};

struct CheckArgs {
    std::string n;
};

struct SurveyArgs {
    std::string max_n, bound = "1000", limit; // empty limit: cross-check everything
    std::string format = "json";
};

struct IsotropicArgs {
    std::string gram, bound;
};

int run_fm(const FmArgs& a) {
    const GramMatrix g = GramMatrix::parse(a.gram);
    const MukaiVector v{parse_int(a.r), parse_class(a.c1), parse_int(a.chi)};
    if (v.c1.size() != g.rank()) {
        throw DimensionMismatch("--c1 length must equal the gram matrix rank");
    }
    const MukaiVector out = fm_transform(v, WitIndex(a.wit));
    std::cout << to_json(out) << "\n";
    return 0;
}

int run_bb(const BbArgs& a) {
    const GramMatrix g = GramMatrix::parse(a.gram);
    const KummerLattice k(g, parse_int(a.n));
    const std::vector<Int> coords = parse_csv_ints(a.cls);
    if (coords.size() != g.rank() + 1) {
        throw DimensionMismatch(
            "--class must list the divisor coordinates plus the epsilon coefficient");
    }
    const KummerClass x = split(k, DivisorClass(coords));
    if (k.n() == 2) {
        // the form arithmetic is fine at n = 2, but the fibration criterion
        // is only stated for n > 2; flag rather than silently extrapolate
        std::cerr << "{\"warning\":\"OutOfRegime\",\"message\":\"n = 2 is outside "
                     "the fibration criterion's range n > 2; the form value is "
                     "still exact\"}\n";
    }
    std::cout << "{\"q\":" << json_int(bb_square(k, x)) << "}\n";
    return 0;
}

int run_check(const CheckArgs& a) {
    const Int n = parse_int(a.n);
    std::cout << to_json(n, fibration_check_principal(n)) << "\n";
    return 0;
}

int run_survey(const SurveyArgs& a) {
    const Int max_n = parse_int(a.max_n);
    const Int bound = parse_int(a.bound);
    const Int limit = a.limit.empty() ? max_n : parse_int(a.limit);
    const std::vector<SurveyRow> rows = survey_principal(max_n, bound, limit);
    if (a.format == "tsv") {
        std::cout << survey_tsv_header() << "\n";
        for (const SurveyRow& row : rows) std::cout << to_tsv(row) << "\n";
    } else {
        for (const SurveyRow& row : rows) std::cout << to_json(row) << "\n";
    }
    return 0;
}

int run_isotropic(const IsotropicArgs& a) {
    const GramMatrix g = GramMatrix::parse(a.gram);
    std::cout << to_json(isotropic_search(g, parse_int(a.bound))) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice invariants of rational Lagrangian fibrations on generalized Kummer varieties"};
    app.require_subcommand(1);

    FmArgs fm_args;
    CLI::App* fm = app.add_subcommand("fm", "Fourier-Mukai transform of a Mukai vector");
    fm->add_option("--r", fm_args.r, "rank")->required();
    fm->add_option("--c1", fm_args.c1, "first Chern class, comma-separated coordinates")->required();
    fm->add_option("--chi", fm_args.chi, "Euler characteristic")->required();
    fm->add_option("--wit", fm_args.wit, "WIT index")->required()->check(CLI::Range(0, 2));
    fm->add_option("--gram", fm_args.gram, "surface lattice, rows ';'-separated (default principal [2])");

    BbArgs bb_args;
    CLI::App* bb = app.add_subcommand("bb", "Beauville-Bogomolov square on NS(K^nA)");
    bb->add_option("--gram", bb_args.gram, "surface lattice (default principal [2])");
    bb->add_option("--n", bb_args.n, "number of points, n >= 2")->required();
    bb->add_option("--class", bb_args.cls, "divisor coordinates then epsilon coefficient")->required();

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "fibration criterion for principal K^nA, n > 2");
    check->add_option("--n", check_args.n, "number of points")->required();

    SurveyArgs survey_args;
    CLI::App* survey = app.add_subcommand("survey", "criterion table for n = 3..max-n");
    survey->add_option("--max-n", survey_args.max_n, "last n")->required();
    survey->add_option("--cross-check-bound", survey_args.bound, "search bound for the lattice cross-check (default 1000)");
    survey->add_option("--cross-check-limit", survey_args.limit, "cross-check rows with n up to this (default: all)");
    survey->add_option("--format", survey_args.format, "json (lines) or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    IsotropicArgs iso_args;
    CLI::App* lattice = app.add_subcommand("lattice", "raw lattice utilities");
    lattice->require_subcommand(1);
    CLI::App* isotropic = lattice->add_subcommand("isotropic", "search for a nonzero square-zero vector");
    isotropic->add_option("--gram", iso_args.gram, "gram matrix, rows ';'-separated")->required();
    isotropic->add_option("--bound", iso_args.bound, "sup-norm search bound")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("UsageError", e.what());
        return kExitUsage;
    }

    try {
        if (fm->parsed()) return run_fm(fm_args);
        if (bb->parsed()) return run_bb(bb_args);
        if (check->parsed()) return run_check(check_args);
        if (survey->parsed()) return run_survey(survey_args);
        if (lattice->parsed() && isotropic->parsed()) return run_isotropic(iso_args);
    } catch (const ParseError& e) {
        emit_error("ParseError", e.what());
        return kExitUsage;
    } catch (const ConsistencyFailure& e) {
        emit_error("ConsistencyFailure", e.what());
        return kExitConsistency;
    } catch (const DomainError& e) {
        emit_error(e.code(), e.what());
        return kExitDomain;
    }
    return 0;
}
