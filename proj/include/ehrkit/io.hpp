#pragma once

// Machine-readable records for the CLI: JSON, long-form CSV and plain text.
// Rationals always travel as "p/q" strings.

#include "ehrkit/ehrhart.hpp"
#include "ehrkit/numeric.hpp"
#include "ehrkit/polynomial.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ehrkit {

enum class OutputFormat { json, csv, plain };

inline OutputFormat parse_output_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "plain") return OutputFormat::plain;
    throw domain_error("unknown output format \"" + name + "\"");
}

struct Evaluation {
    unsigned t = 0;
    Natural count;

    friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

struct OutputRecord {
    Family family = Family::hypersimplex;
    unsigned k = 0;
    unsigned n = 0;
    unsigned dim = 0;
    std::vector<Rational> coefficients;       // dim + 1 entries
    std::optional<std::vector<Evaluation>> evaluations;
    std::optional<bool> verified;              // set when a brute-force check ran

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Closed-form record for (family, k, n); coefficients padded to dim + 1.
inline OutputRecord make_record(Family family, unsigned k, unsigned n, MemoTable& memo) {
    const Polynomial p = closed_form_ehrhart(family, k, n, memo);
    OutputRecord record{family, k, n, dimension(family, n), {}, std::nullopt, std::nullopt};
    for (unsigned d = 0; d <= record.dim; ++d) record.coefficients.push_back(p.coefficient(d));
    return record;
}

inline nlohmann::json to_json(const OutputRecord& r) {
    nlohmann::json j;
    j["family"] = family_name(r.family);
    j["k"] = r.k;
    j["n"] = r.n;
    j["dim"] = r.dim;
    auto coefficients = nlohmann::json::array();
    for (const auto& c : r.coefficients) coefficients.push_back(to_string(c));
    j["coefficients"] = std::move(coefficients);
    if (r.evaluations) {
        auto evaluations = nlohmann::json::array();
        for (const auto& e : *r.evaluations) {
            nlohmann::json count;
            if (e.count >= 0 && e.count <= std::numeric_limits<std::uint64_t>::max()) {
                count = static_cast<std::uint64_t>(e.count);
            } else {
                count = e.count.str();
            }
            evaluations.push_back(nlohmann::json::array({e.t, count}));
        }
        j["evaluations"] = std::move(evaluations);
    }
    if (r.verified) j["verified"] = *r.verified;
    return j;
}

inline OutputRecord record_from_json(const nlohmann::json& j) {
    OutputRecord r;
    r.family = parse_family(j.at("family").get<std::string>());
    r.k = j.at("k").get<unsigned>();
    r.n = j.at("n").get<unsigned>();
    r.dim = j.at("dim").get<unsigned>();
    for (const auto& c : j.at("coefficients")) r.coefficients.push_back(parse_rational(c.get<std::string>()));
    if (j.contains("evaluations")) {
        r.evaluations.emplace();
        for (const auto& e : j.at("evaluations")) {
            const auto& count = e.at(1);
            Natural value = count.is_string() ? Natural(count.get<std::string>()) : Natural(count.get<std::uint64_t>());
            r.evaluations->push_back({e.at(0).get<unsigned>(), std::move(value)});
        }
    }
    if (j.contains("verified")) r.verified = j.at("verified").get<bool>();
    return r;
}

inline void write_csv_header(std::ostream& out) { out << "family,k,n,degree,coefficient\n"; }

/// Long form: one row per coefficient.
inline void write_csv_rows(std::ostream& out, const OutputRecord& r) {
    for (std::size_t d = 0; d < r.coefficients.size(); ++d) {
        out << family_name(r.family) << ',' << r.k << ',' << r.n << ',' << d << ',' << to_string(r.coefficients[d])
            << '\n';
    }
}

inline void write_plain(std::ostream& out, const OutputRecord& r) {
    out << family_name(r.family) << '(' << r.k << ',' << r.n << "): " << to_string(Polynomial(r.coefficients))
        << '\n';
    if (r.evaluations) {
        for (const auto& e : *r.evaluations) out << "  i(" << e.t << ") = " << e.count.str() << '\n';
    }
    if (r.verified) out << "  verified: " << (*r.verified ? "match" : "MISMATCH") << '\n';
}

inline void write_records(std::ostream& out, const std::vector<OutputRecord>& records, OutputFormat format) {
    switch (format) {
    case OutputFormat::json: {
        auto array = nlohmann::json::array();
        for (const auto& r : records) array.push_back(to_json(r));
        out << array.dump(2) << '\n';
        break;
    }
    case OutputFormat::csv:
        write_csv_header(out);
        for (const auto& r : records) write_csv_rows(out, r);
        break;
    case OutputFormat::plain:
        for (const auto& r : records) write_plain(out, r);
        break;
    }
}

} // namespace ehrkit
