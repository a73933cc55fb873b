#include "exgraph/family.hpp"

#include "exgraph/chromatic.hpp"
#include "exgraph/errors.hpp"
#include "exgraph/graph6.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace exgraph {

int ForbiddenFamily::total_order() const noexcept
{
    int t = 0;
    for (const auto& p : patterns)
        t += p.order();
    return t;
}

std::string ForbiddenFamily::label() const
{
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i)
            out += ',';
        out += names[i];
    }
    return out;
}

ForbiddenFamily make_family(std::vector<SimpleGraph> patterns, std::vector<std::string> names)
{
    if (patterns.empty())
        throw std::invalid_argument("a forbidden family needs at least one pattern");
    ForbiddenFamily f;
    f.patterns = std::move(patterns);
    f.names = std::move(names);
    f.names.resize(f.patterns.size());
    for (std::size_t i = 0; i < f.patterns.size(); ++i) {
        if (f.names[i].empty())
            f.names[i] = "g6:" + to_graph6(f.patterns[i]);
        f.chi.push_back(chromatic_number(f.patterns[i]));
    }
    return f;
}

SimpleGraph parse_pattern(std::string_view token)
{
    if (token.starts_with("g6:"))
        return from_graph6(token.substr(3));
    if (token.size() < 2)
        throw InvalidSpec("unknown pattern '" + std::string(token) + "'");
    int n = 0;
    auto digits = token.substr(1);
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || end != digits.data() + digits.size())
        throw InvalidSpec("unknown pattern '" + std::string(token) + "' (expected wN, kN, cN, pN or g6:...)");
    switch (token[0]) {
    case 'w': case 'W': return wheel_graph(n);
    case 'k': case 'K': return complete_graph(n);
    case 'c': case 'C': return cycle_graph(n);
    case 'p': case 'P': return path_graph(n);
    default: break;
    }
    throw InvalidSpec("unknown pattern '" + std::string(token) + "' (expected wN, kN, cN, pN or g6:...)");
}

ForbiddenFamily parse_family(std::string_view spec)
{
    std::vector<SimpleGraph> patterns;
    std::vector<std::string> names;
    while (!spec.empty()) {
        auto comma = spec.find(',');
        auto token = spec.substr(0, comma);
        while (!token.empty() && token.front() == ' ')
            token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ')
            token.remove_suffix(1);
        if (token.empty())
            throw InvalidSpec("empty token in family spec");
        patterns.push_back(parse_pattern(token));
        std::string name(token);
        if (!name.starts_with("g6:"))
            for (auto& c : name)
                c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        names.push_back(std::move(name));
        if (comma == std::string_view::npos)
            break;
        spec.remove_prefix(comma + 1);
        if (spec.empty())
            throw InvalidSpec("trailing comma in family spec");
    }
    if (patterns.empty())
        throw InvalidSpec("empty family spec");
    return make_family(std::move(patterns), std::move(names));
}

} // namespace exgraph
