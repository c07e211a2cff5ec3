#include "json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace hhset::detail {

namespace {

void write(const json& j, int indent, int depth, std::string& out)
{
    const auto newline = [&](int d) {
        if (indent >= 0) {
            out += '\n';
            out.append(static_cast<std::size_t>(indent * d), ' ');
        }
    };
    switch (j.type()) {
    case json::value_t::number_float: {
        const double x = j.get<double>();
        if (!std::isfinite(x)) {
            out += "null";
            return;
        }
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        out += buf;
        return;
    }
    case json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        // Flat numeric arrays stay on one line.
        const bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_number(); });
        out += '[';
        bool first = true;
        for (const auto& e : j) {
            if (!first) {
                out += flat ? ", " : ",";
            }
            first = false;
            if (!flat) {
                newline(depth + 1);
            }
            write(e, indent, depth + 1, out);
        }
        if (!flat) {
            newline(depth);
        }
        out += ']';
        return;
    }
    case json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) {
                out += ',';
            }
            first = false;
            newline(depth + 1);
            out += json(key).dump();
            out += indent >= 0 ? ": " : ":";
            write(value, indent, depth + 1, out);
        }
        newline(depth);
        out += '}';
        return;
    }
    default:
        out += j.dump();
    }
}

} // namespace

std::string dump(const json& j, int indent)
{
    std::string out;
    write(j, indent, 0, out);
    return out;
}

double number(const json& j)
{
    if (j.is_null()) {
        return std::nan("");
    }
    return j.get<double>();
}

} // namespace hhset::detail
