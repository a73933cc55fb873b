#include "exgraph/constructions.hpp"

#include "exgraph/canonical.hpp"
#include "exgraph/errors.hpp"
#include "exgraph/oracle.hpp"
#include "exgraph/subgraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace exgraph {

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

long choose2(long x)
{
    return x < 2 ? 0 : x * (x - 1) / 2;
}

std::vector<ComponentLayout> u_component_layout(int n0, int k)
{
    if (k < 3)
        throw InvalidSpec("bounded-component regular graphs need k >= 3, got " + std::to_string(k));
    if (n0 < k)
        throw Infeasible("n0 = " + std::to_string(n0) + " is below k = " + std::to_string(k) +
                         ": no (k-1)-regular or nearly regular graph exists");
    const int lo = k;
    const int hi = 2 * k - 2;
    const int count = (n0 + hi - 1) / hi;
    if (count * lo > n0)
        throw Infeasible("n0 = " + std::to_string(n0) + " cannot be split into components of order " +
                         std::to_string(lo) + ".." + std::to_string(hi));
    std::vector<int> orders(static_cast<std::size_t>(count), lo);
    int extra = n0 - count * lo;
    const bool odd_degree = (k - 1) % 2 == 1;
    // Odd degree: lo and hi are even, so fill in steps of two and place any odd unit last.
    const int step = odd_degree ? 2 : 1;
    for (auto& o : orders) {
        const int room = hi - o;
        const int add = std::min(room, extra - extra % step);
        o += add;
        extra -= add;
    }
    if (extra > 0) {
        auto it = std::find_if(orders.begin(), orders.end(), [&](int o) { return o < hi; });
        if (it == orders.end())
            throw Infeasible("n0 = " + std::to_string(n0) + " has no valid component split");
        *it += extra;
    }
    std::sort(orders.begin(), orders.end(), std::greater<>());
    std::vector<ComponentLayout> out;
    for (int o : orders)
        out.push_back({o, odd_degree && o % 2 == 1});
    return out;
}

namespace {

// Circulant of degree d on m vertices (offsets 1..d/2, plus m/2 for odd d and even m).
// For odd d and odd m the last vertex is left with degree d - 1.
void place_circulant(SimpleGraph& g, int first, int m, int d)
{
    for (int s = 1; s <= d / 2; ++s)
        for (int i = 0; i < m; ++i)
            g.set_edge(first + i, first + (i + s) % m, true);
    if (d % 2 == 0)
        return;
    if (m % 2 == 0) {
        for (int i = 0; i < m / 2; ++i)
            g.set_edge(first + i, first + i + m / 2, true);
    } else {
        const int s = (m - 1) / 2;
        for (int i = 0; i < s; ++i)
            g.set_edge(first + i, first + i + s, true);
    }
}

} // namespace

SimpleGraph u_family_member(int n0, int k)
{
    auto layout = u_component_layout(n0, k);
    SimpleGraph g(n0);
    int first = 0;
    for (const auto& c : layout) {
        place_circulant(g, first, c.order, k - 1);
        first += c.order;
    }
    return g;
}

bool validate_u_family(const SimpleGraph& g, int k)
{
    if (k < 1)
        return false;
    int deficient = 0;
    for (int d : g.degrees()) {
        if (d == k - 2)
            ++deficient;
        else if (d != k - 1)
            return false;
    }
    if (deficient > 1)
        return false;
    return !contains_subgraph(g, path_graph(2 * k - 1)).has_value();
}

long wheel_bracket(int n, int k, int n0)
{
    return static_cast<long>(n0) * (n - n0) + floor_div(static_cast<long>(k - 1) * n0, 2) + 1;
}

FormulaValue wheel_extremal_value(int n, int k)
{
    if (n < 1)
        throw InvalidSpec("wheel formula needs n >= 1");
    if (k < 1)
        throw InvalidSpec("wheel formula needs k >= 1");
    FormulaValue out;
    for (int n0 = 1; n0 <= n; ++n0) {
        const long v = wheel_bracket(n, k, n0);
        if (out.argmax.empty() || v > out.value) {
            out.value = v;
            out.argmax = {n0};
        } else if (v == out.value) {
            out.argmax.push_back(n0);
        }
    }
    return out;
}

ConstructionRecipe wheel_extremal_recipe(int n, int k, std::optional<int> n0)
{
    if (k < 3)
        throw InvalidSpec("wheel construction needs k >= 3, got " + std::to_string(k));
    auto make = [&](int side) {
        if (side < k)
            throw Infeasible("n0 = " + std::to_string(side) + " violates n0 >= k = " + std::to_string(k));
        if (n - side < 2)
            throw Infeasible("n0 = " + std::to_string(side) + " violates n - n0 >= 2 (n = " + std::to_string(n) +
                             ", room is needed for the extra edge)");
        ConstructionRecipe r;
        r.n = n;
        r.k = k;
        r.ell = 1;
        r.n0 = side;
        r.components = u_component_layout(side, k);
        return r;
    };
    if (n0)
        return make(*n0);
    auto value = wheel_extremal_value(n, k);
    std::string reasons;
    for (auto it = value.argmax.rbegin(); it != value.argmax.rend(); ++it) {
        try {
            return make(*it);
        } catch (const Infeasible& e) {
            reasons += std::string(reasons.empty() ? "" : "; ") + e.what();
        }
    }
    throw Infeasible("no maximizing n0 is realizable for n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                     ": " + reasons);
}

SimpleGraph build_recipe(const ConstructionRecipe& r)
{
    if (r.ell < 1 || r.n < r.ell)
        throw InvalidSpec("recipe needs 1 <= ell <= n");
    const int inner = r.n - r.ell + 1;
    SimpleGraph h(inner);
    if (r.k > 0) {
        if (r.n0 < 1 || inner - r.n0 < 2)
            throw Infeasible("recipe side sizes do not fit n");
        int first = 0;
        for (const auto& c : r.components) {
            place_circulant(h, first, c.order, r.k - 1);
            first += c.order;
        }
        if (first != r.n0)
            throw InvalidSpec("component orders must sum to n0");
        for (int a = 0; a < r.n0; ++a)
            for (int b = r.n0; b < inner; ++b)
                h.set_edge(a, b, true);
        h.set_edge(r.n0, r.n0 + 1, true);
    }
    return union_extremal_graph(r.n, r.ell, h);
}

SimpleGraph wheel_extremal_graph(int n, int k, std::optional<int> n0)
{
    return build_recipe(wheel_extremal_recipe(n, k, n0));
}

long union_term(int n, int ell, long inner_ex)
{
    return choose2(ell - 1) + static_cast<long>(ell - 1) * (n - ell + 1) + inner_ex;
}

FormulaValue union_extremal_value(int n, const ForbiddenFamily& family, const ExProvider& ex)
{
    FormulaValue out;
    for (int ell = 1; ell <= family.size(); ++ell) {
        if (n - ell + 1 < 1)
            break;
        const long v = union_term(n, ell, ex(n - ell + 1, ell));
        if (out.argmax.empty() || v > out.value) {
            out.value = v;
            out.argmax = {ell};
        } else if (v == out.value) {
            out.argmax.push_back(ell);
        }
    }
    if (out.argmax.empty())
        throw InvalidSpec("union formula needs n >= 1");
    return out;
}

SimpleGraph union_extremal_graph(int n, int ell, const SimpleGraph& h)
{
    if (ell < 1)
        throw InvalidSpec("ell must be >= 1");
    if (h.order() != n - ell + 1)
        throw InvalidSpec("inner graph has order " + std::to_string(h.order()) + ", expected n - ell + 1 = " +
                          std::to_string(n - ell + 1));
    if (ell == 1)
        return h;
    const SimpleGraph parts[] = {complete_graph(ell - 1), h};
    return join(parts);
}

WheelUnionValue union_wheels_value(int n, std::span<const int> ks)
{
    if (ks.empty())
        throw InvalidSpec("wheel list must be nonempty");
    if (n < 1)
        throw InvalidSpec("n must be >= 1");
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] < 2)
            throw InvalidSpec("wheel parameters must be >= 2");
        if (i > 0 && ks[i] > ks[i - 1])
            throw InvalidSpec("wheel parameters must be non-increasing");
    }
    WheelUnionValue out;
    out.outside_formula_range = std::any_of(ks.begin(), ks.end(), [](int k) { return k < 3; });
    const int m = std::min(static_cast<int>(ks.size()), n);

    bool first = true;
    for (int i = 1; i <= m; ++i) {
        const long k = ks[i - 1];
        for (int n0 = 1; n0 <= n; ++n0) {
            const long v = static_cast<long>(n0) * (n - n0) + static_cast<long>(i - 1) * (n0 - i + 1) +
                           choose2(i - 1) + floor_div((k - 1) * (n0 - i + 1), 2) + 1;
            if (first || v > out.value) {
                out.value = v;
                out.argmax_pairs = {{i, n0}};
                first = false;
            } else if (v == out.value) {
                out.argmax_pairs.emplace_back(i, n0);
            }
        }
    }

    first = true;
    for (int ell = 1; ell <= m; ++ell) {
        const long v = union_term(n, ell, wheel_extremal_value(n - ell + 1, ks[ell - 1]).value);
        if (first || v > out.composed_value) {
            out.composed_value = v;
            out.argmax_ell = {ell};
            first = false;
        } else if (v == out.composed_value) {
            out.argmax_ell.push_back(ell);
        }
    }
    if (out.value != out.composed_value)
        throw std::logic_error("wheel union forms disagree at n = " + std::to_string(n) + ": " +
                               std::to_string(out.value) + " vs " + std::to_string(out.composed_value));
    return out;
}

FormulaValue multi_wheel_value(int n, int k, int m)
{
    if (n < 1 || m < 1)
        throw InvalidSpec("multi-wheel formula needs n >= 1 and m >= 1");
    FormulaValue out;
    for (int n0 = 1; n0 <= n; ++n0) {
        const long v = choose2(m - 1) + floor_div(static_cast<long>(k - 1) * n0, 2) +
                       static_cast<long>(n0 + m - 1) * (n - m + 1) - static_cast<long>(n0) * n0 + 1;
        if (out.argmax.empty() || v > out.value) {
            out.value = v;
            out.argmax = {n0};
        } else if (v == out.value) {
            out.argmax.push_back(n0);
        }
    }
    return out;
}

std::optional<std::function<long(int)>> closed_form_ex(const SimpleGraph& pattern)
{
    const int p = pattern.order();
    if (p >= 2 && pattern.edge_count() == choose2(p)) {
        const int r = p - 1;
        return [r](int m) { return turan_edge_count(m, r); };
    }
    if (p >= 7 && p % 2 == 1 && pattern.edge_count() == 2L * (p - 1) && isomorphic(pattern, wheel_graph(p))) {
        const int k = (p - 1) / 2;
        return [k](int m) { return wheel_extremal_value(m, k).value; };
    }
    return std::nullopt;
}

ExProvider formula_provider(const ForbiddenFamily& family)
{
    std::vector<std::function<long(int)>> forms;
    for (int i = 0; i < family.size(); ++i) {
        auto f = closed_form_ex(family.patterns[i]);
        if (!f)
            throw InvalidSpec("no closed-form extremal number for pattern '" + family.names[i] + "'");
        forms.push_back(std::move(*f));
    }
    return [forms](int m, int ell) { return forms.at(static_cast<std::size_t>(ell - 1))(m); };
}

ProperOrderReport check_properly_ordered(const ForbiddenFamily& family, int n, const ExtremalEnumerator& oracle)
{
    ProperOrderReport report;
    report.n = n;
    report.properly_ordered = true;
    for (int ell = 1; ell <= family.size(); ++ell) {
        ForbiddenFamily single = make_family({family.patterns[ell - 1]}, {family.names[ell - 1]});
        ExtremalResult res = oracle(n, single);
        ProperOrderLevel level;
        level.ell = ell;
        level.ex_value = res.ex_value;
        level.extremal_count = static_cast<int>(res.witnesses.size());
        for (const auto& w : res.witnesses) {
            bool clean = true;
            for (int j = 0; j < ell && clean; ++j)
                clean = !contains_subgraph(w, family.patterns[j]).has_value();
            if (clean) {
                level.witness = w;
                break;
            }
        }
        report.properly_ordered = report.properly_ordered && level.witness.has_value();
        report.levels.push_back(std::move(level));
    }
    return report;
}

} // namespace exgraph
