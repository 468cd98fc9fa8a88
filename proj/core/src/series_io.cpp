#include "gwcount/series_io.hpp"

#include "gwcount/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace gwcount {

namespace {

using nlohmann::json;

bool digits_only(std::string_view text) {
    if (text.empty()) {
        return false;
    }
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            return false;
        }
    }
    return true;
}

PolySeries from_json(const json& doc) {
    if (!doc.is_object()) {
        throw FormatError("expected a JSON object", "$");
    }
    const auto degree_it = doc.find("degree");
    if (degree_it == doc.end()) {
        throw FormatError("missing field", "degree");
    }
    if (!degree_it->is_number_integer()) {
        throw FormatError("expected an integer", "degree");
    }
    const auto degree = degree_it->get<long long>();
    if (degree < 1 || degree > 4096) {
        throw FormatError("degree out of range 1..4096", "degree");
    }

    const auto basis_it = doc.find("basis");
    if (basis_it == doc.end()) {
        throw FormatError("missing field", "basis");
    }
    if (!basis_it->is_array() || basis_it->size() != 3) {
        throw FormatError("expected an array of exactly 3 rows", "basis");
    }

    std::array<PolySeries::Coefficients, 3> rows;
    for (std::size_t r = 0; r < 3; ++r) {
        const json& row = (*basis_it)[r];
        const std::string where = "basis[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != static_cast<std::size_t>(degree) + 1) {
            throw FormatError("expected an array of " + std::to_string(degree + 1) + " coefficients",
                              where);
        }
        rows[r].reserve(row.size());
        for (std::size_t c = 0; c < row.size(); ++c) {
            const std::string at = where + "[" + std::to_string(c) + "]";
            if (!row[c].is_string()) {
                throw FormatError("coefficient must be a \"p/q\" string", at);
            }
            try {
                rows[r].push_back(parse_rational(row[c].get_ref<const std::string&>()));
            } catch (const FormatError& e) {
                throw FormatError(e.what(), at);
            }
        }
    }
    return PolySeries(static_cast<int>(degree), std::move(rows));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string literal(text);
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                 : body.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den)) {
        throw FormatError("malformed rational \"" + literal + "\"", "");
    }
    mpz_class denominator(std::string(den), 10);
    if (denominator == 0) {
        throw FormatError("zero denominator in \"" + literal + "\"", "");
    }
    mpz_class numerator(std::string(num), 10);
    if (text.front() == '-') {
        numerator = -numerator;
    }
    Rational value(numerator, denominator);
    value.canonicalize();
    return value;
}

std::string format_rational(const Rational& value) {
    Rational copy(value);
    copy.canonicalize();
    return copy.get_str(10);
}

PolySeries parse_series_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(e.what(), "byte " + std::to_string(e.byte));
    }
    return from_json(doc);
}

PolySeries read_series_json(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_series_json(buffer.str());
}

std::string write_series_json(const PolySeries& series) {
    nlohmann::ordered_json doc;
    doc["degree"] = series.degree();
    auto basis = nlohmann::ordered_json::array();
    for (const auto& row : series.basis()) {
        auto out = nlohmann::ordered_json::array();
        for (const auto& c : row) {
            out.push_back(format_rational(c));
        }
        basis.push_back(std::move(out));
    }
    doc["basis"] = std::move(basis);
    return doc.dump();
}

}  // namespace gwcount
