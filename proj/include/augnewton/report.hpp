#pragma once

#include <optional>
#include <string>
#include <vector>

#include "augnewton/polytope.hpp"
#include "augnewton/scenarios.hpp"
#include "augnewton/selftest.hpp"

namespace augnewton {

enum class Format { text, json, csv };

std::optional<Format> parse_format(const std::string& name);

/// RFC-4180: fields containing commas, quotes or newlines are quoted, with
/// embedded quotes doubled.
std::string csv_field(const std::string& value);

std::string report_newton(const LatticePolytope& poly, const Fingerprint& fp, Format f);
std::string report_alpha(const std::vector<AlphaRow>& rows, Format f,
                         const std::optional<std::string>& check_status);
std::string report_orbit(const std::string& scenario, const std::vector<OrbitRow>& rows,
                         const Verdict& verdict, Format f);

struct TorusReportRow {
    unsigned i;
    std::size_t monomials;
    bool simplex;
    long long det_abs;
    bool inverse_ok;
};

std::string report_torus(unsigned n, const std::vector<TorusReportRow>& rows, bool ok,
                         Format f);
std::string report_selftest(const std::vector<CriterionResult>& results, Format f);

}  // namespace augnewton
