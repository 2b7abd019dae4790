#include "lyubeznik/problem.hpp"

#include <cctype>
#include <charconv>

#include "lyubeznik/parse.hpp"

namespace lyz {

namespace {

std::size_t skip_space(std::string_view s, std::size_t i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) {
        ++i;
    }
    return i;
}

std::size_t trim_end(std::string_view s, std::size_t begin, std::size_t end) {
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
        --end;
    }
    return end;
}

// Splits a comma list; each item with its absolute offset, trimmed.
std::vector<std::pair<std::string, std::size_t>> split_list(std::string_view s, std::size_t base) {
    std::vector<std::pair<std::string, std::size_t>> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            std::size_t b = start;
            while (b < i && std::isspace(static_cast<unsigned char>(s[b]))) {
                ++b;
            }
            const std::size_t e = trim_end(s, b, i);
            out.emplace_back(std::string(s.substr(b, e - b)), base + b);
            start = i + 1;
        }
    }
    return out;
}

std::int64_t parse_int(const std::string& s, std::size_t offset, bool allow_negative) {
    std::int64_t v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!allow_negative && !s.empty() && s[0] == '-') {
        throw ParseError("expected a nonnegative integer", offset);
    }
    if (!s.empty() && s[0] == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (s.empty() || ec != std::errc() || ptr != last) {
        throw ParseError("expected an integer, got '" + s + "'", offset);
    }
    return v;
}

} // namespace

ProblemSpec parse_problem(std::string_view input) {
    // Join continuation lines in place so that byte offsets stay valid.
    std::string text(input);
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '\\') {
            continue;
        }
        std::size_t k = skip_space(text, i + 1);
        if (k < text.size() && text[k] == '\n') {
            for (std::size_t m = i; m <= k; ++m) {
                text[m] = ' ';
            }
        } else if (k == text.size()) {
            text[i] = ' ';
        }
    }
    ProblemSpec spec;
    bool have_p = false, have_vars = false, have_ideal = false, have_point = false;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string::npos) {
            line_end = text.size();
        }
        std::string_view line(text.data() + line_start, line_end - line_start);
        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const std::size_t b = skip_space(line, 0);
        if (b < line.size()) {
            const std::size_t eq = line.find('=');
            if (eq == std::string_view::npos) {
                throw ParseError("expected 'key = value'", line_start + b);
            }
            const std::string key(line.substr(b, trim_end(line, b, eq) - b));
            const std::size_t vb = skip_space(line, eq + 1);
            const std::size_t ve = trim_end(line, vb, line.size());
            const std::string_view value = line.substr(vb, ve - vb);
            const std::size_t voff = line_start + vb;
            auto once = [&](bool& seen) {
                if (seen) {
                    throw ParseError("duplicate key '" + key + "'", line_start + b);
                }
                seen = true;
            };
            if (key == "p") {
                once(have_p);
                const std::int64_t p = parse_int(std::string(value), voff, false);
                if (p < 2 || p > 0xffffffffLL || !is_prime(std::uint64_t(p))) {
                    throw ParseError("p = " + std::string(value) + " is not a prime below 2^32", voff);
                }
                spec.p = std::uint64_t(p);
            } else if (key == "vars") {
                once(have_vars);
                for (auto& [name, off] : split_list(value, voff)) {
                    if (name.empty()) {
                        throw ParseError("empty variable name", off);
                    }
                    spec.vars.push_back(name);
                }
            } else if (key == "ideal") {
                once(have_ideal);
                spec.ideal_text = std::string(value);
                spec.ideal_offset = voff;
            } else if (key == "point") {
                once(have_point);
                for (auto& [item, off] : split_list(value, voff)) {
                    spec.point.push_back(parse_int(item, off, true));
                }
            } else {
                throw ParseError("unknown key '" + key + "'", line_start + b);
            }
        }
        line_start = line_end + 1;
    }
    if (!have_p) {
        throw ParseError("missing 'p = <prime>'", text.size());
    }
    if (!have_vars) {
        throw ParseError("missing 'vars = ...'", text.size());
    }
    if (!have_ideal) {
        throw ParseError("missing 'ideal = ...'", text.size());
    }
    if (have_point && spec.point.size() != spec.vars.size()) {
        throw ParseError("point has " + std::to_string(spec.point.size()) + " coordinates for " +
                             std::to_string(spec.vars.size()) + " variables",
                         text.size());
    }
    return spec;
}

Problem build_problem(const ProblemSpec& spec) {
    RingPtr ring;
    try {
        ring = make_ring(Coeff(spec.p), spec.vars);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what(), 0);
    }
    std::vector<Polynomial> gens;
    try {
        gens = parse_poly_list(spec.ideal_text, ring);
    } catch (const ParseError& e) {
        throw ParseError(e.message(), spec.ideal_offset + e.offset());
    }
    if (!spec.point.empty()) {
        for (auto& g : gens) {
            g = g.translate(spec.point);
        }
    }
    Submodule ideal = Submodule::ideal(ring, gens);
    return Problem{ring, std::move(gens), std::move(ideal)};
}

} // namespace lyz
