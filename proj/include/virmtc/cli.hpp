#pragma once

#include "virmtc/io.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace virmtc {

/// Markdown section for one (p,q): counts, modular set, and the join table for p >= 5.
std::string report_section(const MinimalCategory& C, double tol = 1e-9);
/// Sections for every coprime p < q with pmin <= p <= pmax and q <= qmax.
std::string report(int pmin, int pmax, int qmax, const Cache& cache, double tol = 1e-9);

/// Runs one command.  Exit status 0, 2 on invalid input, 3 on an internal inconsistency.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace virmtc
