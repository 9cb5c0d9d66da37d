#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fixity/errors.hpp"
#include "fixity/perm_group.hpp"
#include "fixity/permutation.hpp"

namespace fixity {

// Group file format:
//
//   degree 5
//   # comment
//   (0 1 2)(3 4)
//   img 1 0 2 3 4
//
// One generator per non-comment line, in cycle notation or as an image list.
// Printing emits canonical text; canonical text parses and prints back byte for byte.

enum class GeneratorNotation { cycles, images };

struct GroupFile {
    std::size_t degree = 0;
    std::vector<Permutation> generators;
    std::vector<GeneratorNotation> notation;

    PermGroup group() const { return PermGroup(degree, generators); }
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline std::string_view strip_comment(std::string_view s)
{
    const auto hash = s.find('#');
    return trim(hash == std::string_view::npos ? s : s.substr(0, hash));
}

inline Point parse_point(std::string_view token, std::size_t line)
{
    if (token.empty())
        throw ParseError(line, "empty point");
    std::uint64_t value = 0;
    for (char c : token) {
        if (c < '0' || c > '9')
            throw ParseError(line, "expected a point, got '" + std::string(token) + "'");
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
        if (value > 0xffffffffULL)
            throw ParseError(line, "point too large");
    }
    return static_cast<Point>(value);
}

inline std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t')
            ++i;
        if (i > start)
            out.push_back(s.substr(start, i - start));
    }
    return out;
}

inline std::size_t parse_header(std::string_view line, std::string_view keyword, std::size_t line_no)
{
    const auto tokens = split_ws(line);
    if (tokens.size() != 2 || tokens[0] != keyword)
        throw ParseError(line_no, "expected '" + std::string(keyword) + " <n>'");
    const Point n = parse_point(tokens[1], line_no);
    if (n == 0)
        throw ParseError(line_no, std::string(keyword) + " must be positive");
    return n;
}

} // namespace detail

/// Parses cycle notation such as "(0 1 2)(3 4)"; "()" is the identity.
inline Permutation parse_cycles(std::string_view text, std::size_t degree, std::size_t line = 0)
{
    std::vector<std::vector<Point>> cycles;
    std::size_t i = 0;
    text = detail::trim(text);
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t') {
            ++i;
            continue;
        }
        if (text[i] != '(')
            throw ParseError(line, "expected '(' in cycle notation");
        const auto close = text.find(')', i);
        if (close == std::string_view::npos)
            throw ParseError(line, "unterminated cycle");
        std::vector<Point> cycle;
        std::string_view body = text.substr(i + 1, close - i - 1);
        std::string normalized(body);
        std::replace(normalized.begin(), normalized.end(), ',', ' ');
        for (auto token : detail::split_ws(normalized))
            cycle.push_back(detail::parse_point(token, line));
        if (!cycle.empty())
            cycles.push_back(std::move(cycle));
        i = close + 1;
    }
    try {
        return Permutation::from_cycles(degree, cycles);
    } catch (const InvalidArgument& e) {
        throw ParseError(line, e.what());
    }
}

inline GroupFile parse_group(std::istream& in)
{
    GroupFile file;
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = detail::strip_comment(raw);
        if (line.empty())
            continue;
        if (!have_header) {
            file.degree = detail::parse_header(line, "degree", line_no);
            have_header = true;
            continue;
        }
        if (line.front() == '(') {
            file.generators.push_back(parse_cycles(line, file.degree, line_no));
            file.notation.push_back(GeneratorNotation::cycles);
        } else {
            const auto tokens = detail::split_ws(line);
            if (tokens.empty() || tokens[0] != "img")
                throw ParseError(line_no, "generator must be cycle notation or 'img ...'");
            if (tokens.size() - 1 != file.degree)
                throw ParseError(line_no, "image list has " + std::to_string(tokens.size() - 1) +
                                              " entries, expected " + std::to_string(file.degree));
            std::vector<Point> images;
            for (std::size_t k = 1; k < tokens.size(); ++k)
                images.push_back(detail::parse_point(tokens[k], line_no));
            try {
                file.generators.emplace_back(std::move(images));
            } catch (const InvalidArgument& e) {
                throw ParseError(line_no, e.what());
            }
            file.notation.push_back(GeneratorNotation::images);
        }
    }
    if (!have_header)
        throw ParseError(line_no, "missing 'degree <n>' header");
    return file;
}

inline GroupFile parse_group(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_group(in);
}

inline GroupFile read_group_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open group file '" + path + "'");
    try {
        return parse_group(in);
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

inline std::string print_group(const GroupFile& file)
{
    std::string out = "degree " + std::to_string(file.degree) + "\n";
    for (std::size_t i = 0; i < file.generators.size(); ++i) {
        const auto style = i < file.notation.size() ? file.notation[i] : GeneratorNotation::cycles;
        if (style == GeneratorNotation::cycles) {
            out += to_cycle_string(file.generators[i]);
        } else {
            out += "img";
            for (Point p : file.generators[i].images())
                out += " " + std::to_string(p);
        }
        out += '\n';
    }
    return out;
}

inline std::string print_group(const PermGroup& group)
{
    GroupFile file;
    file.degree = group.degree();
    file.generators.assign(group.generators().begin(), group.generators().end());
    return print_group(file);
}

} // namespace fixity
