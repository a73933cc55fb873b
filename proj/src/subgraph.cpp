#include "exgraph/subgraph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace exgraph {

namespace {

template <int W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    void set(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1u; }

    Bits& operator&=(const Bits& o)
    {
        for (int i = 0; i < W; ++i)
            w[i] &= o.w[i];
        return *this;
    }
    Bits without(const Bits& o) const
    {
        Bits r = *this;
        for (int i = 0; i < W; ++i)
            r.w[i] &= ~o.w[i];
        return r;
    }
    int count() const
    {
        int c = 0;
        for (auto x : w)
            c += std::popcount(x);
        return c;
    }
    bool operator==(const Bits&) const = default;

    template <class F>
    bool for_each(F&& f) const
    {
        for (int i = 0; i < W; ++i)
            for (auto bits = w[i]; bits; bits &= bits - 1)
                if (f(i * 64 + std::countr_zero(bits)))
                    return true;
        return false;
    }
};

template <int W>
struct BitsHash {
    std::size_t operator()(const Bits<W>& b) const noexcept
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto x : b.w) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

// Pattern vertices in search order: highest degree first, then repeatedly the vertex
// with most already-placed neighbours (ties: degree, then index). A forced root goes first.
struct Plan {
    int size = 0;
    std::vector<int> order;
    std::vector<std::vector<int>> back;
    std::vector<int> degree;
};

Plan make_plan(const SimpleGraph& pattern, int root = -1)
{
    Plan plan;
    const int p = pattern.order();
    plan.size = p;
    std::vector<int> deg = pattern.degrees();
    std::vector<int> placed_neighbours(p, 0);
    std::vector<char> placed(p, 0);
    std::vector<int> position(p, -1);
    for (int step = 0; step < p; ++step) {
        int pick = -1;
        if (step == 0 && root >= 0) {
            pick = root;
        } else {
            for (int v = 0; v < p; ++v) {
                if (placed[v])
                    continue;
                if (pick < 0 || placed_neighbours[v] > placed_neighbours[pick] ||
                    (placed_neighbours[v] == placed_neighbours[pick] && deg[v] > deg[pick]))
                    pick = v;
            }
        }
        placed[pick] = 1;
        position[pick] = step;
        plan.order.push_back(pick);
        plan.degree.push_back(deg[pick]);
        std::vector<int> back;
        for (int u : pattern.neighbors(pick)) {
            if (placed[u] && u != pick)
                back.push_back(position[u]);
            ++placed_neighbours[u];
        }
        plan.back.push_back(std::move(back));
    }
    return plan;
}

template <int W>
class Engine {
public:
    using Set = Bits<W>;

    explicit Engine(const SimpleGraph& host) : n_(host.order()), rows_(host.order()), degree_(host.degrees())
    {
        for (int v = 0; v < n_; ++v) {
            auto r = host.row(v);
            for (std::size_t i = 0; i < r.size(); ++i)
                rows_[v].w[i] = r[i];
        }
        max_degree_ = degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
        at_least_.resize(static_cast<std::size_t>(max_degree_) + 2);
        for (int d = 0; d <= max_degree_ + 1; ++d)
            for (int v = 0; v < n_; ++v)
                if (degree_[v] >= d)
                    at_least_[d].set(v);
    }

    Set all() const
    {
        Set s;
        for (int v = 0; v < n_; ++v)
            s.set(v);
        return s;
    }

    // Calls on_match(host_of_position) for every embedding inside `avail`;
    // stops and returns true as soon as on_match returns true.
    template <class F>
    bool enumerate(const Plan& plan, const Set& avail, int root_host, F&& on_match) const
    {
        if (plan.size == 0)
            return on_match(std::vector<int>{});
        for (int d : plan.degree)
            if (d > max_degree_)
                return false;
        std::vector<int> host_of(plan.size, -1);
        Set used;
        return expand(plan, avail, root_host, 0, host_of, used, on_match);
    }

    Set image(const std::vector<int>& host_of) const
    {
        Set s;
        for (int v : host_of)
            s.set(v);
        return s;
    }

private:
    template <class F>
    bool expand(const Plan& plan, const Set& avail, int root_host, int pos, std::vector<int>& host_of, Set& used,
                F& on_match) const
    {
        if (pos == plan.size)
            return on_match(host_of);
        Set cand = avail.without(used);
        cand &= at_least_[plan.degree[pos]];
        if (pos == 0 && root_host >= 0) {
            const bool ok = cand.test(root_host);
            cand = Set{};
            if (ok)
                cand.set(root_host);
        }
        for (int b : plan.back[pos])
            cand &= rows_[host_of[b]];
        return cand.for_each([&](int v) {
            host_of[pos] = v;
            used.set(v);
            const bool stop = expand(plan, avail, root_host, pos + 1, host_of, used, on_match);
            used.reset(v);
            return stop;
        });
    }

    int n_;
    std::vector<Set> rows_;
    std::vector<int> degree_;
    int max_degree_ = 0;
    std::vector<Set> at_least_;
};

Embedding to_embedding(const Plan& plan, const std::vector<int>& host_of)
{
    Embedding e;
    e.map.assign(plan.size, -1);
    for (int pos = 0; pos < plan.size; ++pos)
        e.map[plan.order[pos]] = host_of[pos];
    return e;
}

template <int W>
class FamilySearch {
public:
    using Set = Bits<W>;

    FamilySearch(const Engine<W>& engine, const ForbiddenFamily& family, std::vector<int> members)
        : engine_(engine), family_(family), members_(std::move(members))
    {
        // Largest pattern first fails fastest.
        std::stable_sort(members_.begin(), members_.end(), [&](int a, int b) {
            const auto& pa = family_.patterns[a];
            const auto& pb = family_.patterns[b];
            if (pa.order() != pb.order())
                return pa.order() > pb.order();
            return pa.edge_count() > pb.edge_count();
        });
        for (int m : members_)
            plans_.push_back(make_plan(family_.patterns[m]));
        remaining_.assign(members_.size() + 1, 0);
        for (int i = static_cast<int>(members_.size()) - 1; i >= 0; --i)
            remaining_[i] = remaining_[i + 1] + family_.patterns[members_[i]].order();
        failed_.resize(members_.size());
        found_.resize(family_.patterns.size());
    }

    bool solve(const Set& avail) { return solve(0, avail); }

    const std::vector<Embedding>& found() const { return found_; }

private:
    bool solve(std::size_t level, const Set& avail)
    {
        if (level == members_.size())
            return true;
        if (avail.count() < remaining_[level])
            return false;
        if (failed_[level].contains(avail))
            return false;
        std::unordered_set<Set, BitsHash<W>> tried;
        const Plan& plan = plans_[level];
        const bool hit = engine_.enumerate(plan, avail, -1, [&](const std::vector<int>& host_of) {
            Set img = engine_.image(host_of);
            if (!tried.insert(img).second)
                return false;
            if (!solve(level + 1, avail.without(img)))
                return false;
            found_[members_[level]] = to_embedding(plan, host_of);
            return true;
        });
        if (!hit)
            failed_[level].insert(avail);
        return hit;
    }

    const Engine<W>& engine_;
    const ForbiddenFamily& family_;
    std::vector<int> members_;
    std::vector<Plan> plans_;
    std::vector<int> remaining_;
    std::vector<std::unordered_set<Set, BitsHash<W>>> failed_;
    std::vector<Embedding> found_;
};

template <int W>
std::optional<Embedding> single_impl(const SimpleGraph& host, const SimpleGraph& pattern)
{
    Engine<W> engine(host);
    Plan plan = make_plan(pattern);
    std::optional<Embedding> out;
    engine.enumerate(plan, engine.all(), -1, [&](const std::vector<int>& host_of) {
        out = to_embedding(plan, host_of);
        return true;
    });
    return out;
}

template <int W>
std::optional<std::vector<Embedding>> family_impl(const SimpleGraph& host, const ForbiddenFamily& family)
{
    Engine<W> engine(host);
    std::vector<int> members(family.patterns.size());
    std::iota(members.begin(), members.end(), 0);
    FamilySearch<W> search(engine, family, members);
    if (!search.solve(engine.all()))
        return std::nullopt;
    return search.found();
}

// Every occurrence in `host` must use `root`: some F_i covers it, the rest of the
// family sits in the remaining vertices.
template <int W>
bool rooted_free_impl(const SimpleGraph& host, const ForbiddenFamily& family, int root)
{
    Engine<W> engine(host);
    const auto all = engine.all();
    for (int i = 0; i < family.size(); ++i) {
        bool repeat = false;
        for (int j = 0; j < i; ++j)
            repeat = repeat || family.patterns[j] == family.patterns[i];
        if (repeat)
            continue;
        std::vector<int> rest;
        for (int j = 0; j < family.size(); ++j)
            if (j != i)
                rest.push_back(j);
        FamilySearch<W> others(engine, family, rest);
        std::unordered_set<Bits<W>, BitsHash<W>> tried;
        const SimpleGraph& pattern = family.patterns[i];
        for (int x = 0; x < pattern.order(); ++x) {
            Plan plan = make_plan(pattern, x);
            const bool hit = engine.enumerate(plan, all, root, [&](const std::vector<int>& host_of) {
                auto img = engine.image(host_of);
                if (!tried.insert(img).second)
                    return false;
                return others.solve(all.without(img));
            });
            if (hit)
                return false;
        }
    }
    return true;
}

template <class R, class F>
R dispatch(int n, F&& f)
{
    if (n <= 64)
        return f.template operator()<1>();
    if (n <= 128)
        return f.template operator()<2>();
    if (n <= 256)
        return f.template operator()<4>();
    if (n <= 512)
        return f.template operator()<8>();
    if (n <= 1024)
        return f.template operator()<16>();
    throw std::length_error("subgraph search supports hosts of at most 1024 vertices");
}

} // namespace

bool is_embedding(const SimpleGraph& host, const SimpleGraph& pattern, const Embedding& e)
{
    if (static_cast<int>(e.map.size()) != pattern.order())
        return false;
    std::vector<char> hit(host.order(), 0);
    for (int v : e.map) {
        if (v < 0 || v >= host.order() || hit[v])
            return false;
        hit[v] = 1;
    }
    for (auto [a, b] : pattern.edges())
        if (!host.adjacent(e.map[a], e.map[b]))
            return false;
    return true;
}

std::optional<Embedding> contains_subgraph(const SimpleGraph& host, const SimpleGraph& pattern)
{
    if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count())
        return std::nullopt;
    return dispatch<std::optional<Embedding>>(
        host.order(), [&]<int W>() { return single_impl<W>(host, pattern); });
}

std::optional<std::vector<Embedding>> contains_disjoint_family(const SimpleGraph& host, const ForbiddenFamily& family)
{
    long edges = 0;
    for (const auto& p : family.patterns)
        edges += p.edge_count();
    if (family.total_order() > host.order() || edges > host.edge_count())
        return std::nullopt;
    return dispatch<std::optional<std::vector<Embedding>>>(
        host.order(), [&]<int W>() { return family_impl<W>(host, family); });
}

bool is_free(const SimpleGraph& host, const ForbiddenFamily& family)
{
    return !contains_disjoint_family(host, family).has_value();
}

bool is_free_given_free_parent(const SimpleGraph& host, const ForbiddenFamily& family, int new_vertex)
{
    long edges = 0;
    for (const auto& p : family.patterns)
        edges += p.edge_count();
    if (family.total_order() > host.order() || edges > host.edge_count())
        return true;
    return dispatch<bool>(host.order(), [&]<int W>() { return rooted_free_impl<W>(host, family, new_vertex); });
}

} // namespace exgraph
