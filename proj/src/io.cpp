#include "dfl/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace dfl {

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i >= line.size())
            break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

bool is_comment_or_blank(const std::vector<Token>& tokens)
{
    return tokens.empty() || tokens.front().text.front() == '#';
}

[[noreturn]] void fail(const std::string& source, std::size_t line, std::size_t column, const std::string& what)
{
    throw Error(ErrorKind::ParseError,
                source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
}

Rational parse_at(const std::string& source, std::size_t line, const Token& tok)
{
    try {
        return parse_rational(tok.text);
    } catch (const Error&) {
        fail(source, line, tok.column, "expected a number, got '" + tok.text + "'");
    }
}

std::ifstream open(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::FileNotFound, path);
    return in;
}

}  // namespace

SiteSetPtr parse_sites(std::istream& in, const std::string& source)
{
    std::vector<Point> points;
    std::size_t dim = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = tokenize(line);
        if (is_comment_or_blank(tokens))
            continue;
        if (dim == 0)
            dim = tokens.size();
        if (tokens.size() != dim) {
            throw Error(ErrorKind::DimensionMismatch, source + ":" + std::to_string(lineno) + ": expected "
                                                          + std::to_string(dim) + " coordinates, got "
                                                          + std::to_string(tokens.size()));
        }
        std::vector<Rational> coords;
        for (const auto& tok : tokens)
            coords.push_back(parse_at(source, lineno, tok));
        points.emplace_back(std::move(coords));
    }
    if (points.empty())
        throw Error(ErrorKind::ParseError, source + ": no sites");
    return make_sites(std::move(points));
}

Triangulation parse_triangulation(std::istream& in, SiteSetPtr sites, const std::string& source)
{
    std::vector<Simplex> simplices;
    const std::size_t want = sites->dim() + 1;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = tokenize(line);
        if (is_comment_or_blank(tokens))
            continue;
        if (tokens.size() != want) {
            throw Error(ErrorKind::DimensionMismatch, source + ":" + std::to_string(lineno) + ": expected "
                                                          + std::to_string(want) + " indices, got "
                                                          + std::to_string(tokens.size()));
        }
        std::vector<Index> idx;
        for (const auto& tok : tokens) {
            Index v = 0;
            const auto* first = tok.text.data();
            const auto* last = first + tok.text.size();
            auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec != std::errc() || ptr != last)
                fail(source, lineno, tok.column, "expected a site index, got '" + tok.text + "'");
            if (v >= sites->size())
                fail(source, lineno, tok.column, "site index " + tok.text + " out of range");
            idx.push_back(v);
        }
        simplices.emplace_back(idx);
    }
    return Triangulation(std::move(sites), std::move(simplices));
}

HeightField parse_heights(std::istream& in, const std::string& source)
{
    HeightField h;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = tokenize(line);
        if (is_comment_or_blank(tokens))
            continue;
        if (tokens.size() != 1)
            fail(source, lineno, tokens[1].column, "expected one value per line");
        h.values.push_back(parse_at(source, lineno, tokens[0]));
    }
    return h;
}

SiteSetPtr read_sites(const std::string& path)
{
    auto in = open(path);
    return parse_sites(in, path);
}

Triangulation read_triangulation(const std::string& path, SiteSetPtr sites)
{
    auto in = open(path);
    return parse_triangulation(in, std::move(sites), path);
}

HeightField read_heights(const std::string& path)
{
    auto in = open(path);
    return parse_heights(in, path);
}

void write_sites(std::ostream& out, const SiteSet& sites)
{
    for (const auto& p : sites.points()) {
        for (std::size_t i = 0; i < p.dim(); ++i)
            out << (i ? " " : "") << to_exact_string(p[i]);
        out << '\n';
    }
}

void write_triangulation(std::ostream& out, const Triangulation& t)
{
    for (const auto& s : t.simplices()) {
        for (std::size_t i = 0; i < s.size(); ++i)
            out << (i ? " " : "") << s[i];
        out << '\n';
    }
}

}  // namespace dfl
