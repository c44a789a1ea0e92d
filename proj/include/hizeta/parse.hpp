#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "hizeta/numerics.hpp"

namespace hizeta {

namespace detail {

inline std::string_view trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
}

inline double parse_real(std::string_view text, std::string_view what) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError("malformed " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace detail

/// Parses `1.5`, `0.3i`, `i`, `-i`, `1+2i`, `2-0.5i`, `1e-3+2e1i`.
inline Complex parse_complex(std::string_view text) {
    text = detail::trim(text);
    if (text.empty()) throw ParseError("empty complex literal");
    if (text.back() != 'i') return detail::parse_real(text, "complex literal");

    const std::string_view body = text.substr(0, text.size() - 1);
    // The real/imaginary split is the last sign that is not a leading sign and
    // not part of an exponent.
    std::size_t cut = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            cut = k;
            break;
        }
    }
    auto imag_part = [](std::string_view t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return detail::parse_real(t, "imaginary part");
    };
    if (cut == std::string_view::npos) return {0.0, imag_part(body)};
    return {detail::parse_real(body.substr(0, cut), "real part"), imag_part(body.substr(cut))};
}

/// Comma separated complex literals.
inline std::vector<Complex> parse_complex_list(std::string_view text) {
    std::vector<Complex> out;
    for (auto part : detail::split(text, ',')) out.push_back(parse_complex(part));
    return out;
}

}  // namespace hizeta
