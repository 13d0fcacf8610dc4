#include "ordercone/rational.hpp"

#include <algorithm>
#include <cctype>

namespace ordercone {

std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

Rat parse_rat(std::string_view text) {
    // trim surrounding whitespace
    const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty rational literal");

    const auto digits_only = [](std::string_view s) {
        if (s.empty()) return false;
        return std::all_of(s.begin(), s.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c)) != 0;
        });
    };

    std::string_view num = text;
    std::string_view den;
    if (auto pos = text.find('/'); pos != std::string_view::npos) {
        num = text.substr(0, pos);
        den = text.substr(pos + 1);
        if (den.find('/') != std::string_view::npos)
            throw ParseError("malformed rational '" + std::string(text) + "'");
    }

    bool negative = false;
    if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
        negative = num.front() == '-';
        num.remove_prefix(1);
    }
    if (!digits_only(num))
        throw ParseError("malformed rational '" + std::string(text) + "'");

    Int n(std::string(num));
    if (negative) n = -n;

    Int d = 1;
    if (!den.empty() || text.find('/') != std::string_view::npos) {
        if (!digits_only(den))
            throw ParseError("malformed rational '" + std::string(text) +
                             "' (denominator must be an unsigned integer)");
        d = Int(std::string(den));
        if (d == 0)
            throw ParseError("malformed rational '" + std::string(text) + "' (zero denominator)");
    }
    return Rat(n, d);
}

Vec parse_vec(std::string_view text, char sep) {
    Vec out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        std::string_view tok = pos == std::string_view::npos
                                   ? text.substr(start)
                                   : text.substr(start, pos - start);
        out.push_back(parse_rat(tok));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string vec_to_string(const Vec& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += rat_to_string(v[i]);
    }
    return s;
}

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw DimensionMismatchError("dot: vector lengths differ");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw DimensionMismatchError("vec_add: vector lengths differ");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw DimensionMismatchError("vec_sub: vector lengths differ");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_neg(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vec vec_scale(const Rat& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

bool vec_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace ordercone
