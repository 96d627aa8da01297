#include "augnewton/report.hpp"

#include <sstream>

#include <json.hpp>

namespace augnewton {

namespace {

using Json = nlohmann::ordered_json;

Json fingerprint_json(const Fingerprint& fp, const std::vector<ExponentVector>& vertices) {
    Json j;
    j["intrinsic_dim"] = fp.intrinsic_dim;
    j["total"] = fp.total;
    j["boundary"] = fp.boundary;
    j["interior"] = fp.interior;
    if (fp.normalized_volume)
        j["normalized_volume"] = *fp.normalized_volume;
    else
        j["normalized_volume"] = nullptr;
    Json verts = Json::array();
    for (const auto& v : vertices) {
        Json row = Json::array();
        for (std::size_t i = 0; i < v.size(); ++i)
            row.push_back(v[i]);
        verts.push_back(std::move(row));
    }
    j["vertices"] = std::move(verts);
    return j;
}

std::string vertices_text(const std::vector<ExponentVector>& vertices) {
    std::string out;
    for (const auto& v : vertices) {
        if (!out.empty())
            out += " ";
        out += "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i)
                out += ",";
            out += std::to_string(v[i]);
        }
        out += ")";
    }
    return out;
}

std::string nvol_text(const Fingerprint& fp) {
    return fp.normalized_volume ? std::to_string(*fp.normalized_volume) : "";
}

// Fixed-width text table; first row is the header.
std::string table_text(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c >= width.size())
                width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                line += "  ";
            line += row[c];
            if (c + 1 < row.size())
                line.append(width[c] - row[c].size(), ' ');
        }
        out += line + "\n";
    }
    return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i)
            out += ",";
        out += csv_field(fields[i]);
    }
    out += "\r\n";
    return out;
}

std::vector<std::string> fp_fields(const Fingerprint& fp) {
    return {std::to_string(fp.intrinsic_dim), std::to_string(fp.total),
            std::to_string(fp.boundary), std::to_string(fp.interior), nvol_text(fp)};
}

}  // namespace

std::optional<Format> parse_format(const std::string& name) {
    if (name == "text")
        return Format::text;
    if (name == "json")
        return Format::json;
    if (name == "csv")
        return Format::csv;
    return std::nullopt;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos)
        return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"')
            out += "\"\"";
        else
            out += c;
    }
    out += "\"";
    return out;
}

std::string report_newton(const LatticePolytope& poly, const Fingerprint& fp, Format f) {
    switch (f) {
        case Format::json:
            return fingerprint_json(fp, poly.vertices).dump(2) + "\n";
        case Format::csv: {
            std::string out = csv_line(
                {"intrinsic_dim", "total", "boundary", "interior", "normalized_volume",
                 "vertices"});
            auto fields = fp_fields(fp);
            fields.push_back(vertices_text(poly.vertices));
            out += csv_line(fields);
            return out;
        }
        case Format::text: {
            std::ostringstream out;
            out << "intrinsic_dim      " << fp.intrinsic_dim << "\n";
            out << "total              " << fp.total << "\n";
            out << "boundary           " << fp.boundary << "\n";
            out << "interior           " << fp.interior << "\n";
            out << "normalized_volume  " << (fp.normalized_volume ? nvol_text(fp) : "-")
                << "\n";
            out << "vertices           " << vertices_text(poly.vertices) << "\n";
            return out.str();
        }
    }
    return {};
}

std::string report_alpha(const std::vector<AlphaRow>& rows, Format f,
                         const std::optional<std::string>& check_status) {
    switch (f) {
        case Format::json: {
            Json j;
            Json jr = Json::array();
            for (const auto& r : rows) {
                Json row;
                row["n"] = r.n;
                row["monomials"] = r.monomials;
                row["fingerprint"] = fingerprint_json(r.fp, r.vertices);
                jr.push_back(std::move(row));
            }
            j["rows"] = std::move(jr);
            if (check_status)
                j["check"] = *check_status;
            return j.dump(2) + "\n";
        }
        case Format::csv: {
            std::string out =
                csv_line({"n", "monomials", "dim", "total", "boundary", "interior", "nvol"});
            for (const auto& r : rows) {
                std::vector<std::string> fields = {std::to_string(r.n),
                                                   std::to_string(r.monomials)};
                auto fp = fp_fields(r.fp);
                fields.insert(fields.end(), fp.begin(), fp.end());
                out += csv_line(fields);
            }
            return out;
        }
        case Format::text: {
            std::vector<std::vector<std::string>> table;
            table.push_back({"n", "monomials", "dim", "total", "boundary", "interior", "nvol"});
            for (const auto& r : rows) {
                std::vector<std::string> row = {std::to_string(r.n),
                                                std::to_string(r.monomials)};
                auto fp = fp_fields(r.fp);
                row.insert(row.end(), fp.begin(), fp.end());
                table.push_back(std::move(row));
            }
            std::string out = table_text(table);
            if (check_status)
                out += "check: " + *check_status + "\n";
            return out;
        }
    }
    return {};
}

std::string report_orbit(const std::string& scenario, const std::vector<OrbitRow>& rows,
                         const Verdict& verdict, Format f) {
    switch (f) {
        case Format::json: {
            Json j;
            j["scenario"] = scenario;
            Json jr = Json::array();
            for (const auto& r : rows) {
                Json row;
                row["n"] = r.n;
                row["monomials"] = r.monomials;
                row["fingerprint"] = fingerprint_json(r.fp, r.vertices);
                jr.push_back(std::move(row));
            }
            j["rows"] = std::move(jr);
            j["distinct"] = verdict.distinct;
            if (verdict.witness)
                j["witness"] = Json::array({verdict.witness->first, verdict.witness->second});
            else
                j["witness"] = nullptr;
            return j.dump(2) + "\n";
        }
        case Format::csv: {
            std::string out =
                csv_line({"n", "monomials", "dim", "total", "boundary", "interior", "nvol"});
            for (const auto& r : rows) {
                std::vector<std::string> fields = {std::to_string(r.n),
                                                   std::to_string(r.monomials)};
                auto fp = fp_fields(r.fp);
                fields.insert(fields.end(), fp.begin(), fp.end());
                out += csv_line(fields);
            }
            return out;
        }
        case Format::text: {
            std::vector<std::vector<std::string>> table;
            table.push_back({"n", "monomials", "dim", "total", "boundary", "interior", "nvol"});
            for (const auto& r : rows) {
                std::vector<std::string> row = {std::to_string(r.n),
                                                std::to_string(r.monomials)};
                auto fp = fp_fields(r.fp);
                row.insert(row.end(), fp.begin(), fp.end());
                table.push_back(std::move(row));
            }
            std::string out = "scenario: " + scenario + "\n" + table_text(table);
            out += "distinct: " + std::string(verdict.distinct ? "true" : "false") + "\n";
            if (verdict.witness)
                out += "witness: rows " + std::to_string(verdict.witness->first) + " and " +
                       std::to_string(verdict.witness->second) + "\n";
            return out;
        }
    }
    return {};
}

std::string report_torus(unsigned n, const std::vector<TorusReportRow>& rows, bool ok,
                         Format f) {
    switch (f) {
        case Format::json: {
            Json j;
            j["n"] = n;
            Json jr = Json::array();
            for (const auto& r : rows) {
                Json row;
                row["i"] = r.i;
                row["monomials"] = r.monomials;
                row["simplex"] = r.simplex;
                row["det_abs"] = r.det_abs;
                row["inverse_ok"] = r.inverse_ok;
                jr.push_back(std::move(row));
            }
            j["rows"] = std::move(jr);
            j["ok"] = ok;
            return j.dump(2) + "\n";
        }
        case Format::csv: {
            std::string out = csv_line({"i", "monomials", "simplex", "det_abs", "inverse_ok"});
            for (const auto& r : rows)
                out += csv_line({std::to_string(r.i), std::to_string(r.monomials),
                                 r.simplex ? "true" : "false", std::to_string(r.det_abs),
                                 r.inverse_ok ? "true" : "false"});
            return out;
        }
        case Format::text: {
            std::vector<std::vector<std::string>> table;
            table.push_back({"i", "monomials", "simplex", "|det S|", "inverse_ok"});
            for (const auto& r : rows)
                table.push_back({std::to_string(r.i), std::to_string(r.monomials),
                                 r.simplex ? "true" : "false", std::to_string(r.det_abs),
                                 r.inverse_ok ? "true" : "false"});
            std::string out = "n: " + std::to_string(n) + "\n" + table_text(table);
            out += "ok: " + std::string(ok ? "true" : "false") + "\n";
            return out;
        }
    }
    return {};
}

std::string report_selftest(const std::vector<CriterionResult>& results, Format f) {
    switch (f) {
        case Format::json: {
            Json j = Json::array();
            for (const auto& r : results) {
                Json row;
                row["criterion"] = r.id;
                row["name"] = r.name;
                row["passed"] = r.passed;
                row["detail"] = r.detail;
                j.push_back(std::move(row));
            }
            return j.dump(2) + "\n";
        }
        case Format::csv: {
            std::string out = csv_line({"criterion", "name", "passed", "detail"});
            for (const auto& r : results)
                out += csv_line({std::to_string(r.id), r.name, r.passed ? "true" : "false",
                                 r.detail});
            return out;
        }
        case Format::text: {
            std::string out;
            for (const auto& r : results)
                out += std::string(r.passed ? "PASS" : "FAIL") + "  " + std::to_string(r.id) +
                       "  " + r.name + ": " + r.detail + "\n";
            return out;
        }
    }
    return {};
}

}  // namespace augnewton
