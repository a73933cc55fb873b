#include "exgraph/graph6.hpp"

#include "exgraph/errors.hpp"

#include <istream>
#include <ostream>

namespace exgraph {

namespace {

constexpr std::string_view header = ">>graph6<<";
constexpr long max_order = 68719476735L; // 2^36 - 1

void put_size(std::string& out, long n)
{
    auto put6 = [&](long v) { out.push_back(static_cast<char>(63 + (v & 63))); };
    if (n <= 62) {
        put6(n);
    } else if (n <= 258047) {
        out.push_back('~');
        put6(n >> 12);
        put6(n >> 6);
        put6(n);
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6)
            put6(n >> shift);
    }
}

int sextet(std::string_view text, std::size_t pos)
{
    if (pos >= text.size())
        throw ParseError("graph6 input truncated", pos);
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
        throw ParseError("byte " + std::to_string(c) + " outside the graph6 range 63..126", pos);
    return c - 63;
}

} // namespace

std::string to_graph6(const SimpleGraph& g)
{
    std::string out;
    const int n = g.order();
    put_size(out, n);
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

SimpleGraph from_graph6(std::string_view text)
{
    std::size_t pos = 0;
    if (text.starts_with(header))
        pos = header.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);

    long n = 0;
    if (pos < text.size() && text[pos] == '~') {
        if (pos + 1 < text.size() && text[pos + 1] == '~') {
            pos += 2;
            for (int k = 0; k < 6; ++k)
                n = (n << 6) | sextet(text, pos++);
        } else {
            pos += 1;
            for (int k = 0; k < 3; ++k)
                n = (n << 6) | sextet(text, pos++);
        }
    } else {
        n = sextet(text, pos++);
    }
    if (n > max_order || n > 1'000'000)
        throw ParseError("graph order " + std::to_string(n) + " is too large", 0);

    const long bits = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos < body)
        throw ParseError("graph6 body truncated: expected " + std::to_string(body) + " data bytes", text.size());
    if (text.size() - pos > body)
        throw ParseError("unexpected trailing bytes after graph6 body", pos + body);

    SimpleGraph g(static_cast<int>(n));
    long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const std::size_t at = pos + static_cast<std::size_t>(k / 6);
            const int value = sextet(text, at);
            if ((value >> (5 - k % 6)) & 1)
                g.set_edge(i, j, true);
        }
    }
    if (bits % 6 != 0) {
        const std::size_t at = pos + body - 1;
        const int pad = static_cast<int>(6 - bits % 6);
        if ((sextet(text, at) & ((1 << pad) - 1)) != 0)
            throw ParseError("nonzero padding bits in graph6 body", at);
    }
    return g;
}

std::vector<SimpleGraph> read_graph6_lines(std::istream& in)
{
    std::vector<SimpleGraph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

void write_graph6_lines(std::ostream& out, const std::vector<SimpleGraph>& graphs)
{
    for (const auto& g : graphs)
        out << to_graph6(g) << '\n';
}

} // namespace exgraph
