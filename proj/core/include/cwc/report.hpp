#pragma once

#include "cwc/complex.hpp"
#include "cwc/expansion.hpp"
#include "cwc/spectral.hpp"

#include <string>

namespace cwc {

// 12 significant digits, trailing zeros kept.
std::string format_real(double v);

// Reduced rational as p/q.
std::string format_rat(const Rat& r);

std::string render_validation(const ValidationReport& rep, bool machine);
std::string render_info(const CWComplex& x, bool machine);
std::string render_orientability(const OrientabilityResult& res, bool machine);
std::string render_spectral(const SpectralReport& rep, bool machine);
std::string render_expansion(const ExpansionCertificate& cert, bool machine);
std::string render_sweep(const SweepProfile& prof, bool machine);
std::string render_cheeger(const CheegerReport& rep, bool machine);

}  // namespace cwc
