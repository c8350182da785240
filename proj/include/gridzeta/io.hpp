#ifndef GRIDZETA_IO_HPP
#define GRIDZETA_IO_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "region.hpp"
#include "series.hpp"
#include "surface.hpp"

// Text formats: complex literals "a+bi", numbers with 17 significant digits,
// JSON records for series and surface points, CSV cells.

namespace gridzeta::io
{

using json = nlohmann::ordered_json;

namespace detail
{

// Parses an unsigned decimal at s[pos...]; from_chars does not take a
// leading '+', so signs are handled by the caller.
inline bool read_number(std::string_view s, std::size_t &pos, double &out)
{
    const char *first = s.data() + pos, *last = s.data() + s.size();
    const auto r = std::from_chars(first, last, out, std::chars_format::general);
    if (r.ec != std::errc() || r.ptr == first) {
        return false;
    }
    pos += static_cast<std::size_t>(r.ptr - first);
    return true;
}

inline double read_sign(std::string_view s, std::size_t &pos)
{
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        return s[pos++] == '-' ? -1.0 : 1.0;
    }
    return 1.0;
}

// [sign] (number [i] | i)
inline bool read_term(std::string_view s, std::size_t &pos, double &value, bool &imaginary)
{
    const double sign = read_sign(s, pos);
    if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        value = sign;
        imaginary = true;
        return true;
    }
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        return false;
    }
    if (!read_number(s, pos, value)) {
        return false;
    }
    value *= sign;
    imaginary = pos < s.size() && s[pos] == 'i';
    if (imaginary) {
        ++pos;
    }
    return true;
}

}

/// Parses "a", "bi", "a+bi", "a-bi", "i", "-i" (decimal point '.', exponent
/// allowed, no spaces). Throws domain_error on anything else.
inline complex parse_complex(std::string_view s)
{
    const auto fail = [&s]() -> complex {
        throw domain_error("parse_complex: cannot parse \"" + std::string(s) + "\" as a+bi");
    };
    if (s.empty()) {
        return fail();
    }
    std::size_t pos = 0;
    double a = 0.0;
    bool imag = false;
    if (!detail::read_term(s, pos, a, imag)) {
        return fail();
    }
    if (!std::isfinite(a)) {
        return fail();
    }
    if (pos == s.size()) {
        return imag ? complex(0.0, a) : complex(a, 0.0);
    }
    if (imag || (s[pos] != '+' && s[pos] != '-')) {
        return fail();
    }
    double b = 0.0;
    bool imag2 = false;
    if (!detail::read_term(s, pos, b, imag2) || !imag2 || pos != s.size()) {
        return fail();
    }
    if (!std::isfinite(b)) {
        return fail();
    }
    return {a, b};
}

/// %.17g; non-finite values become "nan", "inf", "-inf".
inline std::string format_number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace detail
{

inline void write_json(std::string &out, const json &j, int indent, int level)
{
    const auto newline = [&](int l) {
        if (indent >= 0) {
            out += '\n';
            out.append(static_cast<std::size_t>(indent * l), ' ');
        }
    };
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (const auto &[key, value] : j.items()) {
                if (!first) {
                    out += ',';
                }
                first = false;
                newline(level + 1);
                out += json(key).dump();
                out += indent >= 0 ? ": " : ":";
                write_json(out, value, indent, level + 1);
            }
            newline(level);
            out += '}';
            return;
        }
        case json::value_t::array: {
            out += '[';
            // Short numeric arrays ([re, im] pairs) stay on one line.
            const bool flat = j.size() <= 2u && std::all_of(j.begin(), j.end(), [](const json &e) { return e.is_number(); });
            bool first = true;
            for (const auto &value : j) {
                if (!first) {
                    out += flat && indent >= 0 ? ", " : ",";
                }
                first = false;
                if (!flat) {
                    newline(level + 1);
                }
                write_json(out, value, indent, level + 1);
            }
            if (!flat && !j.empty()) {
                newline(level);
            }
            out += ']';
            return;
        }
        case json::value_t::number_float: {
            const double x = j.get<double>();
            out += std::isfinite(x) ? format_number(x) : "null";
            return;
        }
        default:
            out += j.dump();
    }
}

}

/// JSON text with every floating-point number written to 17 significant digits.
inline std::string dump(const json &j, int indent = 2)
{
    std::string out;
    detail::write_json(out, j, indent, 0);
    return out;
}

/// [re, im]
inline json complex_json(complex z)
{
    return json::array({z.real(), z.imag()});
}

inline complex complex_from_json(const json &j)
{
    if (!j.is_array() || j.size() != 2u || !j[0].is_number() || !j[1].is_number()) {
        throw domain_error("complex_from_json: expected [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

/// {"var": var, "order": n, "coeffs": ["num/den", ...]}
inline json series_json(const exact::exact_series &s, const std::string &var = "u")
{
    json coeffs = json::array();
    for (std::size_t i = 0; i <= s.order(); ++i) {
        coeffs.push_back(exact::to_fraction_string(s[i]));
    }
    return json{{"var", var}, {"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

inline exact::exact_series series_from_json(const json &j)
{
    if (!j.contains("order") || !j.contains("coeffs") || !j["coeffs"].is_array() ||
        j["coeffs"].size() != j["order"].get<std::size_t>() + 1u) {
        throw domain_error("series_from_json: malformed series record");
    }
    exact::exact_series s(j["order"].get<std::size_t>());
    for (std::size_t i = 0; i <= s.order(); ++i) {
        try {
            s[i] = exact::big_rational(j["coeffs"][i].get<std::string>());
        } catch (const std::runtime_error &) {
            throw domain_error("series_from_json: bad coefficient at index " + std::to_string(i));
        }
    }
    return s;
}

/// {"u": [re, im], "t": [re, im]}
inline json surface_point_json(const surface::surface_point &p)
{
    return json{{"u", complex_json(p.u())}, {"t", complex_json(p.t())}};
}

inline surface::surface_point surface_point_from_json(const json &j)
{
    if (!j.contains("u") || !j.contains("t")) {
        throw domain_error("surface_point_from_json: expected keys u and t");
    }
    return surface::surface_point(complex_from_json(j["u"]), complex_from_json(j["t"]));
}

/// A CSV row; strings are written as they are, numbers with 17 digits.
class csv_row
{
    public:
        csv_row &operator<<(double x)
        {
            return cell(format_number(x));
        }
        csv_row &operator<<(complex z)
        {
            cell(format_number(z.real()));
            return cell(format_number(z.imag()));
        }
        csv_row &operator<<(const std::string &s)
        {
            return cell(s);
        }
        csv_row &operator<<(const char *s)
        {
            return cell(s);
        }
        template <typename I>
            requires std::is_integral_v<I>
        csv_row &operator<<(I n)
        {
            return cell(std::to_string(n));
        }
        const std::string &str() const
        {
            return m_text;
        }

    private:
        csv_row &cell(const std::string &s)
        {
            if (!m_empty) {
                m_text += ',';
            }
            m_empty = false;
            m_text += s;
            return *this;
        }
        std::string m_text;
        bool m_empty = true;
};

}

#endif
