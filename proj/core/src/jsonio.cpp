#include "slw/jsonio.hpp"

#include <cstdio>
#include <fstream>

#include "slw/errors.hpp"

namespace slw {
namespace jsonio {

json matrix_to_json(const QMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

QMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw domain_error("matrix JSON must be a nested array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw domain_error("ragged matrix JSON");
        for (std::size_t c = 0; c < cols; ++c) {
            const json& e = j[i][c];
            if (e.is_string())
                m(i, c) = rat_from_string(e.get<std::string>());
            else if (e.is_number_integer())
                m(i, c) = Rational(e.get<long long>());
            else
                throw domain_error("rational matrix entries must be integers or p/q strings");
        }
    }
    return m;
}

DMatrix dmatrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw domain_error("matrix JSON must be a nested array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    DMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw domain_error("ragged matrix JSON");
        for (std::size_t c = 0; c < cols; ++c) {
            const json& e = j[i][c];
            if (e.is_string())
                m(i, c) = rat_to_double(rat_from_string(e.get<std::string>()));
            else if (e.is_number())
                m(i, c) = e.get<double>();
            else
                throw domain_error("real matrix entries must be numbers or p/q strings");
        }
    }
    return m;
}

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void dump_rec(const json& j, std::string& out, int indent, int depth) {
    auto pad = [&](int d) {
        if (indent >= 0) {
            out += "\n";
            out.append(static_cast<std::size_t>(indent) * d, ' ');
        }
    };
    switch (j.type()) {
        case json::value_t::object: {
            out += "{";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",";
                first = false;
                pad(depth + 1);
                out += json(it.key()).dump();
                out += indent >= 0 ? ": " : ":";
                dump_rec(it.value(), out, indent, depth + 1);
            }
            if (!first) pad(depth);
            out += "}";
            break;
        }
        case json::value_t::array: {
            out += "[";
            bool first = true;
            for (const auto& e : j) {
                if (!first) out += ",";
                first = false;
                pad(depth + 1);
                dump_rec(e, out, indent, depth + 1);
            }
            if (!first) pad(depth);
            out += "]";
            break;
        }
        case json::value_t::number_float:
            out += format_double(j.get<double>());
            break;
        default:
            out += j.dump();
    }
}

} // namespace

std::string dump(const json& j, int indent) {
    std::string out;
    dump_rec(j, out, indent, 0);
    return out;
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

} // namespace jsonio
} // namespace slw
