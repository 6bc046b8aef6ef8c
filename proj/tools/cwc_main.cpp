#include "cwc/boundary.hpp"
#include "cwc/complex.hpp"
#include "cwc/expansion.hpp"
#include "cwc/io.hpp"
#include "cwc/report.hpp"
#include "cwc/spectral.hpp"
#include "cwc/zoo.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitBudget = 4;
constexpr int kExitInapplicable = 5;

struct CommonOpts {
    std::string input;
    std::string zoo_name;
    std::vector<int> params;
    std::string format = "text";
    bool reduced = false;
    double tol = 1e-10;
    int budget = 26;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--input,input", o.input, "cwx or facet file");
    cmd->add_option("--zoo", o.zoo_name, "named built-in complex");
    cmd->add_option("--param", o.params, "integer parameters for --zoo");
    cmd->add_option("--format", o.format, "text|machine")
        ->check(CLI::IsMember({"text", "machine"}));
    cmd->add_flag("--reduced", o.reduced, "use reduced (co)homology conventions");
    cmd->add_option("--tol", o.tol, "eigensolver tolerance");
    cmd->add_option("--budget", o.budget, "log2 cap on exact-search enumeration");
}

cwc::CWComplex load(const CommonOpts& o) {
    if (o.input.empty() == o.zoo_name.empty())
        throw cwc::ParseError("exactly one input source required (path or --zoo)");
    if (!o.zoo_name.empty()) return cwc::zoo(o.zoo_name, o.params);
    return cwc::read_complex_file(o.input);
}

cwc::CWComplex load_valid(const CommonOpts& o) {
    cwc::CWComplex x = load(o);
    cwc::ValidationReport rep = cwc::validate(x);
    if (!rep.ok) {
        std::cerr << cwc::render_validation(rep, false);
        std::exit(kExitValidation);
    }
    return x;
}

cwc::ExpansionBudget budget_of(const CommonOpts& o) {
    cwc::ExpansionBudget b;
    b.max_quotient_exponent = o.budget;
    return b;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cwc: homology, Laplacian spectra, and expansion constants of CW complexes"};
    app.require_subcommand(1);

    CommonOpts o;
    int dim = -1;
    std::string field = "f2";
    std::string kind = "lower";
    std::string variant = "boundary";

    auto* c_info = app.add_subcommand("info", "summary of a complex");
    auto* c_validate = app.add_subcommand("validate", "check complex invariants");
    auto* c_betti = app.add_subcommand("betti", "Betti numbers");
    auto* c_spectrum = app.add_subcommand("spectrum", "Laplacian spectra");
    auto* c_expansion = app.add_subcommand("expansion", "exact expansion constants");
    auto* c_sweep = app.add_subcommand("sweep", "sweep cut for the top eigenvector");
    auto* c_cheeger = app.add_subcommand("cheeger", "Cheeger-Buser report in top dimension");
    auto* c_orient = app.add_subcommand("orient", "top-dimensional orientability");

    for (auto* cmd : {c_info, c_validate, c_betti, c_spectrum, c_expansion, c_sweep,
                      c_cheeger, c_orient})
        add_common(cmd, o);
    c_betti->add_option("--dim", dim, "cochain dimension (default: all)");
    c_betti->add_option("--field", field, "f2|q")->check(CLI::IsMember({"f2", "q"}));
    c_spectrum->add_option("--dim", dim, "cochain dimension")->required();
    c_spectrum->add_option("--kind", kind, "upper|lower|full")
        ->check(CLI::IsMember({"upper", "lower", "full"}));
    c_expansion->add_option("--dim", dim, "cochain dimension")->required();
    c_expansion->add_option("--variant", variant, "boundary|coboundary")
        ->check(CLI::IsMember({"boundary", "coboundary"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << e.what() << "\n";
        return kExitParse;
    }

    const bool machine = o.format == "machine";

    try {
        if (c_info->parsed()) {
            std::cout << cwc::render_info(load_valid(o), machine);
        } else if (c_validate->parsed()) {
            cwc::ValidationReport rep = cwc::validate(load(o));
            std::cout << cwc::render_validation(rep, machine);
            if (!rep.ok) return kExitValidation;
        } else if (c_betti->parsed()) {
            cwc::CWComplex x = load_valid(o);
            cwc::Field f = field == "q" ? cwc::Field::q : cwc::Field::f2;
            int lo = dim < 0 ? 0 : dim, hi = dim < 0 ? x.dim : dim;
            if (dim > x.dim) throw cwc::InapplicableError("dimension exceeds complex dimension");
            for (int n = lo; n <= hi; ++n) {
                int b = cwc::betti(x, n, f, o.reduced);
                if (machine) std::cout << "betti_" << n << " " << b << "\n";
                else std::cout << "b_" << n << "(" << (f == cwc::Field::q ? "Q" : "F2")
                               << ") = " << b << "\n";
            }
        } else if (c_spectrum->parsed()) {
            cwc::CWComplex x = load_valid(o);
            if (kind == "full") {
                cwc::Mat lap = cwc::laplacian(x, dim, cwc::LapKind::full, o.reduced);
                cwc::EigenResult eig = cwc::sym_eigen(lap, o.tol);
                if (machine) {
                    std::cout << "dim " << dim << "\nkind full\nspectrum";
                    for (double v : eig.values) std::cout << " " << cwc::format_real(v);
                    std::cout << "\n";
                } else {
                    std::cout << "full Laplacian spectrum, dimension " << dim << ":";
                    for (double v : eig.values) std::cout << " " << cwc::format_real(v);
                    std::cout << "\n";
                }
            } else {
                auto d = kind == "upper" ? cwc::LapKind::upper : cwc::LapKind::lower;
                std::cout << cwc::render_spectral(
                    cwc::smallest_nontrivial_eigenvalue(x, dim, d, o.reduced, o.tol), machine);
            }
        } else if (c_expansion->parsed()) {
            cwc::CWComplex x = load_valid(o);
            cwc::ExpansionCertificate cert =
                variant == "coboundary"
                    ? cwc::coboundary_expansion(x, dim, o.reduced, budget_of(o))
                    : cwc::boundary_expansion(x, dim, o.reduced, budget_of(o));
            std::cout << cwc::render_expansion(cert, machine);
        } else if (c_sweep->parsed()) {
            cwc::CWComplex x = load_valid(o);
            cwc::SpectralReport spec =
                cwc::smallest_nontrivial_eigenvalue(x, x.dim, cwc::LapKind::lower, o.reduced,
                                                    o.tol);
            std::cout << cwc::render_sweep(cwc::sweep(x, spec.eigenvector), machine);
        } else if (c_cheeger->parsed()) {
            cwc::CWComplex x = load_valid(o);
            std::cout << cwc::render_cheeger(cwc::cheeger_check(x, o.reduced, budget_of(o)),
                                             machine);
        } else if (c_orient->parsed()) {
            cwc::CWComplex x = load_valid(o);
            std::cout << cwc::render_orientability(cwc::check_orientability(x), machine);
        }
    } catch (const cwc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const cwc::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const cwc::InapplicableError& e) {
        std::cerr << "inapplicable: " << e.what() << "\n";
        return kExitInapplicable;
    } catch (const std::invalid_argument& e) {
        std::cerr << "inapplicable: " << e.what() << "\n";
        return kExitInapplicable;
    } catch (const std::out_of_range& e) {
        std::cerr << "inapplicable: " << e.what() << "\n";
        return kExitInapplicable;
    }
    return 0;
}
