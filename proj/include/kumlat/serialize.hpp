#pragma once

// Text interfaces: JSON and TSV emission, CSV coordinate parsing. JSON is
// written by hand so that arbitrary-width integers come out as exact number
// tokens; field order is fixed, output is byte-deterministic.

#include <string>
#include <vector>

#include "fourier_mukai.hpp"
#include "integer.hpp"
#include "kummer.hpp"
#include "lattice.hpp"

namespace kumlat {

inline std::vector<Int> parse_csv_ints(const std::string& text) {
    std::vector<Int> out;
    for (const std::string& cell : detail::split(text, ',')) {
        out.push_back(parse_int(detail::trim(cell)));
    }
    return out;
}

inline std::string csv_join(const std::vector<Int>& coords) {
    std::string out;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ',';
        out += coords[i].str();
    }
    return out;
}

inline std::string json_int(const Int& x) { return x.str(); }

inline std::string json_bool(bool b) { return b ? "true" : "false"; }

inline std::string json_int_array(const std::vector<Int>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += xs[i].str();
    }
    out += ']';
    return out;
}

inline std::string json_string(const std::string& s) {
    // All emitted strings are identifier-like; no escaping needed beyond
    // quoting, but keep the writer honest about the two JSON specials.
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string to_json(const MukaiVector& v) {
    return "{\"r\":" + json_int(v.r) + ",\"c1\":" + json_int_array(v.c1.coords()) +
           ",\"chi\":" + json_int(v.chi) + "}";
}

// Array of arrays of integers, row major.
inline std::string to_json(const GramMatrix& g) {
    std::string out = "[";
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (i) out += ',';
        out += json_int_array(g.rows()[i]);
    }
    out += ']';
    return out;
}

inline std::string to_json(const SearchOutcome& o) {
    std::string out = "{\"kind\":" + json_string(to_string(o.kind));
    out += ",\"witness\":";
    out += o.witness ? json_int_array(o.witness->coords()) : "null";
    out += ",\"bound\":" + json_int(o.bound) + "}";
    return out;
}

// A Kummer class serializes as the flat coordinate list, divisor part first
// and the epsilon coefficient last, matching the CSV input convention.
inline std::vector<Int> flat_coords(const KummerClass& x) {
    std::vector<Int> coords = x.d.coords();
    coords.push_back(x.s);
    return coords;
}

inline std::string to_json(const KummerSearchOutcome& o) {
    std::string out = "{\"kind\":" + json_string(to_string(o.kind));
    out += ",\"witness\":";
    out += o.witness ? json_int_array(flat_coords(*o.witness)) : "null";
    out += ",\"bound\":" + json_int(o.bound) + "}";
    return out;
}

inline std::string to_json(const Int& n, const FibrationCheck& c) {
    std::string out = "{\"n\":" + json_int(n);
    out += ",\"fibration_exists\":" + json_bool(c.fibration_exists);
    out += ",\"m\":" + (c.m ? json_int(*c.m) : std::string("null"));
    out += ",\"base_dim\":" + json_int(c.base_dim) + "}";
    return out;
}

inline std::string to_json(const SurveyRow& row) {
    std::string out = "{\"n\":" + json_int(row.n);
    out += ",\"exists\":" + json_bool(row.fibration_exists);
    out += ",\"m\":" + (row.m ? json_int(*row.m) : std::string("null"));
    out += ",\"witness\":";
    out += row.witness ? json_int_array(flat_coords(*row.witness)) : "null";
    out += ",\"outcome_kind\":";
    out += row.outcome_kind ? json_string(to_string(*row.outcome_kind)) : "null";
    out += "}";
    return out;
}

inline std::string survey_tsv_header() {
    return "n\texists\tm\twitness\toutcome_kind";
}

// Absent cells print as "-".
inline std::string to_tsv(const SurveyRow& row) {
    std::string out = row.n.str();
    out += '\t';
    out += row.fibration_exists ? "true" : "false";
    out += '\t';
    out += row.m ? row.m->str() : "-";
    out += '\t';
    out += row.witness ? csv_join(flat_coords(*row.witness)) : "-";
    out += '\t';
    out += row.outcome_kind ? to_string(*row.outcome_kind) : "-";
    return out;
}

} // namespace kumlat
