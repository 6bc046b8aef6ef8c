#include "cwc/report.hpp"

#include <cstdio>
#include <sstream>

namespace cwc {

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%#.12g", v);
    return buf;
}

std::string format_rat(const Rat& r) {
    std::ostringstream os;
    os << numerator(r) << "/" << denominator(r);
    return os.str();
}

// Text-mode rationals: integers shown without the /1.
static std::string format_rat_text(const Rat& r) {
    std::ostringstream os;
    if (denominator(r) == 1) os << numerator(r);
    else os << numerator(r) << "/" << denominator(r);
    return os.str();
}

namespace {

std::string bits(const F2Vec& v) {
    std::string out;
    for (int i = 0; i < v.len; ++i) {
        if (i) out += ' ';
        out += v.get(i) ? '1' : '0';
    }
    return out;
}

std::string support_str(const F2Vec& v) {
    std::string out = "{";
    bool first = true;
    for (int i : v.support()) {
        if (!first) out += ", ";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

const char* kind_name(LapKind k) {
    switch (k) {
        case LapKind::lower: return "lower";
        case LapKind::upper: return "upper";
        case LapKind::full: return "full";
    }
    return "?";
}

}  // namespace

std::string render_validation(const ValidationReport& rep, bool machine) {
    std::ostringstream os;
    if (machine) {
        os << "ok " << (rep.ok ? 1 : 0) << "\n";
        for (const auto& v : rep.violations)
            os << "violation " << v.n << " " << v.row << " " << v.col << " " << v.message << "\n";
    } else {
        os << (rep.ok ? "valid\n" : "INVALID\n");
        for (const auto& v : rep.violations)
            os << "  n=" << v.n << " row=" << v.row << " col=" << v.col << ": " << v.message
               << "\n";
    }
    return os.str();
}

std::string render_info(const CWComplex& x, bool machine) {
    std::ostringstream os;
    if (machine) {
        os << "dim " << x.dim << "\n";
        for (int n = 0; n <= x.dim; ++n) os << "cells_" << n << " " << x.cells(n) << "\n";
        os << "euler " << euler_characteristic(x) << "\n";
        os << "regular_asserted " << (x.regular_asserted ? 1 : 0) << "\n";
        if (x.dim >= 1) os << "boundary_cells " << boundary_set(x).size() << "\n";
    } else {
        os << "dimension " << x.dim << "\n";
        os << "cells:";
        for (int n = 0; n <= x.dim; ++n) os << " " << x.cells(n);
        os << "\neuler characteristic " << euler_characteristic(x) << "\n";
        if (x.dim >= 1)
            os << "boundary (d-1)-cells: " << boundary_set(x).size() << "\n";
    }
    return os.str();
}

std::string render_orientability(const OrientabilityResult& res, bool machine) {
    std::ostringstream os;
    if (machine) {
        os << "orientable " << (res.orientable ? 1 : 0) << "\n";
        if (res.orientable) {
            os << "signs";
            for (int s : res.orientation.signs) os << " " << s;
            os << "\n";
        } else if (res.crowded_cell >= 0) {
            os << "witness_crowded_cell " << res.crowded_cell << "\n";
        } else {
            os << "witness_odd_cycle";
            for (int c : res.odd_cycle) os << " " << c;
            os << "\n";
        }
    } else {
        if (res.orientable) {
            os << "orientable\nsigns:";
            for (int s : res.orientation.signs) os << " " << (s > 0 ? "+" : "-");
            os << "\n";
        } else if (res.crowded_cell >= 0) {
            os << "non-orientable: (d-1)-cell " << res.crowded_cell
               << " has three or more cofaces\n";
        } else {
            os << "non-orientable: odd sign cycle through d-cells";
            for (int c : res.odd_cycle) os << " " << c;
            os << "\n";
        }
    }
    return os.str();
}

std::string render_spectral(const SpectralReport& rep, bool machine) {
    std::ostringstream os;
    if (machine) {
        os << "dim " << rep.n << "\n";
        os << "kind " << kind_name(rep.kind) << "\n";
        os << "lambda " << format_real(rep.lambda) << "\n";
        os << "trivial_dim " << rep.trivial_dim << "\n";
        os << "zero_threshold " << format_real(rep.zero_threshold) << "\n";
        os << "spectrum";
        for (double v : rep.restricted_spectrum) os << " " << format_real(v);
        os << "\n";
        os << "eigenvector";
        for (double v : rep.eigenvector) os << " " << format_real(v);
        os << "\n";
    } else {
        os << "smallest nontrivial eigenvalue of the " << kind_name(rep.kind)
           << " Laplacian, dimension " << rep.n << "\n";
        os << "lambda = " << format_real(rep.lambda) << "\n";
        os << "projected-out trivial subspace dimension " << rep.trivial_dim << "\n";
        os << "restricted spectrum:";
        for (double v : rep.restricted_spectrum) os << " " << format_real(v);
        os << "\n";
    }
    return os.str();
}

std::string render_expansion(const ExpansionCertificate& cert, bool machine) {
    std::ostringstream os;
    if (machine) {
        os << "dim " << cert.n << "\n";
        os << "variant " << (cert.coboundary ? "coboundary" : "boundary") << "\n";
        os << "h " << cert.numerator << "/" << cert.denominator << "\n";
        os << "h_reduced " << format_rat(cert.h) << "\n";
        os << "witness " << bits(cert.witness) << "\n";
    } else {
        os << (cert.coboundary ? "coboundary" : "boundary") << " expansion, dimension "
           << cert.n << "\n";
        os << "h = " << format_rat_text(cert.h) << " (= " << cert.numerator << "/"
           << cert.denominator << ")\n";
        os << "witness support " << support_str(cert.witness) << "\n";
    }
    return os.str();
}

std::string render_sweep(const SweepProfile& prof, bool machine) {
    std::ostringstream os;
    if (machine) {
        os << "num_virtual " << prof.num_virtual << "\n";
        os << "order";
        for (int c : prof.order_real) os << " " << c;
        os << "\n";
        os << "crossings";
        for (long long c : prof.crossings) os << " " << c;
        os << "\n";
        os << "H " << format_rat(prof.H) << "\n";
        os << "argmin " << prof.argmin << "\n";
        os << "m " << prof.m << "\n";
        os << "witness " << bits(prof.witness) << "\n";
    } else {
        os << "sweep over " << prof.order_real.size() << " top cells, " << prof.num_virtual
           << " virtual cells\n";
        os << "cell order (by |f|):";
        for (int c : prof.order_real) os << " " << c;
        os << "\n|C_i|:";
        for (long long c : prof.crossings) os << " " << c;
        os << "\nH[f] = " << format_rat_text(prof.H) << " at cut index " << prof.argmin << "\n";
        os << "m = " << prof.m << "\n";
        os << "witness support " << support_str(prof.witness) << "\n";
    }
    return os.str();
}

std::string render_cheeger(const CheegerReport& rep, bool machine) {
    std::ostringstream os;
    auto verdict = [](bool applicable, bool holds) {
        if (!applicable) return "INAPPLICABLE";
        return holds ? "HOLDS" : "FAILS";
    };
    if (machine) {
        os << "d " << rep.d << "\n";
        os << "regular_asserted " << rep.regular_asserted << "\n";
        os << "incidence_pm1 " << rep.incidence_pm1 << "\n";
        os << "orientable " << rep.orientable << "\n";
        os << "max_lower_degree_le2 " << rep.max_lower_degree_le2 << "\n";
        os << "lambda_d " << format_real(rep.lambda_d) << "\n";
        os << "h_d " << format_rat(rep.h_d.h) << "\n";
        os << "h_num " << rep.h_d.numerator << "\n";
        os << "h_den " << rep.h_d.denominator << "\n";
        os << "m " << rep.m << "\n";
        os << "lower_applicable " << rep.lower_applicable << "\n";
        os << "lower_holds " << rep.lower_holds << "\n";
        os << "lower_slack " << format_real(rep.lower_slack) << "\n";
        os << "upper_applicable " << rep.upper_applicable << "\n";
        os << "upper_holds " << rep.upper_holds << "\n";
        os << "upper_bound " << format_real(rep.upper_bound_value) << "\n";
        os << "upper_slack " << format_real(rep.upper_slack) << "\n";
        os << "witness " << bits(rep.h_d.witness) << "\n";
    } else {
        os << "Cheeger-Buser check in top dimension d = " << rep.d << "\n";
        os << "hypotheses:\n";
        os << "  regular_asserted      " << (rep.regular_asserted ? "yes" : "no") << "\n";
        os << "  incidence in {-1,0,1} " << (rep.incidence_pm1 ? "yes" : "no") << "\n";
        os << "  orientable            " << (rep.orientable ? "yes" : "no") << "\n";
        os << "  (d-1)-degrees <= 2    " << (rep.max_lower_degree_le2 ? "yes" : "no") << "\n";
        os << "lambda_d = " << format_real(rep.lambda_d) << "\n";
        os << "h_d = " << format_rat_text(rep.h_d.h) << " (= " << rep.h_d.numerator << "/"
           << rep.h_d.denominator << ")";
        os << ", witness support " << support_str(rep.h_d.witness) << "\n";
        os << "m = " << rep.m << "\n";
        os << "lower bound lambda_d <= h_d: " << verdict(rep.lower_applicable, rep.lower_holds);
        if (rep.lower_applicable) os << " (slack " << format_real(rep.lower_slack) << ")";
        if (!rep.lower_applicable)
            os << " (failed hypothesis: "
               << (!rep.regular_asserted ? "regular_asserted"
                   : !rep.incidence_pm1  ? "incidence_pm1"
                                         : "orientable")
               << ")";
        os << "\n";
        os << "upper bound h_d <= sqrt(2 m lambda_d) = " << format_real(rep.upper_bound_value)
           << ": " << verdict(rep.upper_applicable, rep.upper_holds);
        if (rep.upper_applicable) os << " (slack " << format_real(rep.upper_slack) << ")";
        if (!rep.upper_applicable)
            os << " (failed hypothesis: "
               << (!rep.regular_asserted ? "regular_asserted"
                   : !rep.incidence_pm1  ? "incidence_pm1"
                                         : "max_lower_degree_le2")
               << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace cwc
