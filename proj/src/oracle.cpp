#include "exgraph/oracle.hpp"

#include "exgraph/canonical.hpp"
#include "exgraph/errors.hpp"
#include "exgraph/subgraph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace exgraph {

namespace {

int thread_slots()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int thread_id()
{
#ifdef _OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

struct Canonical {
    std::string cert;
    SimpleGraph graph;
};

Canonical canonicalize(const SimpleGraph& g)
{
    auto lab = canonical_labeling(g);
    return {std::move(lab.certificate), g.relabeled(lab.labeling)};
}

void sort_unique(std::vector<Canonical>& items)
{
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.cert < b.cert; });
    items.erase(std::unique(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.cert == b.cert; }),
                items.end());
}

class Meter {
public:
    explicit Meter(const OracleBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

    // False once the budget is spent; safe to call from several threads.
    bool charge()
    {
        if (stopped_.load(std::memory_order_relaxed))
            return false;
        const long used = ++count_;
        if (budget_.max_candidates > 0 && used > budget_.max_candidates) {
            stopped_ = true;
            return false;
        }
        if (budget_.max_seconds > 0 && (used & 1023) == 0) {
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
            if (elapsed.count() > budget_.max_seconds) {
                stopped_ = true;
                return false;
            }
        }
        return true;
    }

    bool stopped() const { return stopped_.load(); }
    long used() const { return count_.load(); }

private:
    const OracleBudget& budget_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<long> count_{0};
    std::atomic<bool> stopped_{false};
};

// All one-vertex extensions of `parent` that keep the new vertex at minimum degree,
// reach `min_edges`, and stay family-free.
template <class Emit>
void extend(const SimpleGraph& parent, const ForbiddenFamily& family, long min_edges, Meter& meter, Emit&& emit)
{
    const int old = parent.order();
    const int m = old + 1;
    const auto deg = parent.degrees();
    const int min_deg = old == 0 ? 0 : *std::min_element(deg.begin(), deg.end());
    const long low = std::max<long>(0, min_edges - parent.edge_count());
    const long high = std::min<long>(old, min_deg + 1);
    if (low > high)
        return;
    SimpleGraph child(m);
    for (auto [u, v] : parent.edges())
        child.set_edge(u, v, true);
    const std::uint32_t limit = std::uint32_t{1} << old;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        const int d = std::popcount(mask);
        if (d < low || d > high)
            continue;
        bool min_ok = true;
        for (int u = 0; u < old && min_ok; ++u)
            min_ok = deg[u] + static_cast<int>((mask >> u) & 1u) >= d;
        if (!min_ok)
            continue;
        if (!meter.charge())
            return;
        for (int u = 0; u < old; ++u)
            child.set_edge(u, old, (mask >> u) & 1u);
        if (is_free_given_free_parent(child, family, old))
            emit(child);
    }
}

} // namespace

std::vector<long> level_bounds(int n, long target)
{
    std::vector<long> bound(static_cast<std::size_t>(n) + 1, 0);
    if (n < 1)
        return bound;
    bound[n] = std::max<long>(0, target);
    for (int m = n; m >= 2; --m)
        bound[m - 1] = std::max<long>(0, bound[m] - (2 * bound[m]) / m);
    return bound;
}

SimpleGraph greedy_free_graph(int n, const ForbiddenFamily& family, std::uint64_t seed, int trials)
{
    SimpleGraph empty(n);
    if (!is_free(empty, family))
        throw std::domain_error("no family-free graph of order " + std::to_string(n) + " exists");
    std::vector<SimpleGraph> starts{empty};
    const int chi_min = *std::min_element(family.chi.begin(), family.chi.end());
    if (chi_min >= 2 && n > 0) {
        SimpleGraph t = turan_graph(n, std::max(1, chi_min - 1));
        if (t.order() == n && is_free(t, family))
            starts.push_back(std::move(t));
    }
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);

    SimpleGraph best = starts.back();
    for (int t = 0; t < std::max(1, trials); ++t) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(t));
        SimpleGraph g = starts[static_cast<std::size_t>(t) % starts.size()];
        auto order = pairs;
        std::shuffle(order.begin(), order.end(), rng);
        for (auto [u, v] : order) {
            if (g.adjacent(u, v))
                continue;
            g.set_edge(u, v, true);
            if (!is_free_given_free_parent(g, family, u))
                g.set_edge(u, v, false);
        }
        if (g.edge_count() > best.edge_count())
            best = std::move(g);
    }
    return best;
}

ExtremalResult brute_force_ex(int n, const ForbiddenFamily& family, const OracleBudget& budget)
{
    if (n < 1)
        throw InvalidSpec("oracle needs n >= 1");
    if (n > budget.hard_cap && !budget.allow_above_cap)
        throw InvalidSpec("n = " + std::to_string(n) + " exceeds the oracle cap of " + std::to_string(budget.hard_cap) +
                          "; set allow_above_cap (--allow-large on the command line) to proceed");
    if (n > 31)
        throw InvalidSpec("oracle supports n <= 31");

    const SimpleGraph seed_graph = greedy_free_graph(n, family, budget.seed);
    const auto bound = level_bounds(n, seed_graph.edge_count());

    ExtremalResult result;
    result.n = n;
    result.family = family;

    Meter meter(budget);
    std::vector<Canonical> level{canonicalize(SimpleGraph(1))};
    if (!is_free(level[0].graph, family))
        throw std::domain_error("every graph of order 1 contains the family");

    const int slots = thread_slots();
    for (int m = 2; m <= n && !meter.stopped(); ++m) {
        const bool last = m == n;
        std::vector<std::vector<Canonical>> found(static_cast<std::size_t>(slots));
        std::vector<long> local_best(static_cast<std::size_t>(slots), bound[m]);
        const long count = static_cast<long>(level.size());
#pragma omp parallel for schedule(dynamic, 1) if (budget.parallel)
        for (long i = 0; i < count; ++i) {
            const int slot = thread_id();
            auto& out = found[slot];
            const long floor_edges = last ? local_best[slot] : bound[m];
            extend(level[i].graph, family, floor_edges, meter, [&](const SimpleGraph& child) {
                if (!last) {
                    out.push_back(canonicalize(child));
                    return;
                }
                // Final order: only the edge maximum matters, canonicalize later.
                if (child.edge_count() < local_best[slot])
                    return;
                if (child.edge_count() > local_best[slot]) {
                    local_best[slot] = child.edge_count();
                    std::erase_if(out, [&](const Canonical& c) { return c.graph.edge_count() < local_best[slot]; });
                }
                out.push_back({std::string{}, child});
            });
        }
        std::vector<Canonical> next;
        for (auto& part : found)
            for (auto& item : part)
                next.push_back(std::move(item));
        if (last) {
            long top = -1;
            for (const auto& c : next)
                top = std::max<long>(top, c.graph.edge_count());
            std::vector<Canonical> best;
            for (const auto& c : next)
                if (c.graph.edge_count() == top)
                    best.push_back(canonicalize(c.graph));
            next = std::move(best);
        }
        sort_unique(next);
        level = std::move(next);
        if (level.empty() && !meter.stopped())
            throw std::logic_error("oracle lost every graph at order " + std::to_string(m) +
                                   " despite a witness of order " + std::to_string(n));
    }
    result.candidates_examined = meter.used();

    if (meter.stopped()) {
        result.ex_value = seed_graph.edge_count();
        result.witnesses = {canonicalize(seed_graph).graph};
        result.exhaustive = false;
        throw BudgetExceeded("oracle budget exhausted at n = " + std::to_string(n) + " after " +
                                 std::to_string(result.candidates_examined) + " candidates; best lower bound " +
                                 std::to_string(result.ex_value),
                             std::move(result));
    }
    if (n == 1)
        level = {canonicalize(SimpleGraph(1))};
    result.ex_value = level.front().graph.edge_count();
    for (auto& c : level)
        result.witnesses.push_back(std::move(c.graph));
    result.exhaustive = true;
    return result;
}

LabeledResult labeled_space_ex(int n, const ForbiddenFamily& family, bool parallel)
{
    if (n < 1 || n > 7)
        throw InvalidSpec("labeled-space oracle supports 1 <= n <= 7");
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    const long total = 1L << pairs.size();
    const int slots = thread_slots();
    std::vector<long> best(static_cast<std::size_t>(slots), -1);
    std::vector<long> count(static_cast<std::size_t>(slots), 0);
#pragma omp parallel for schedule(static) if (parallel)
    for (long mask = 0; mask < total; ++mask) {
        const int slot = thread_id();
        const long e = std::popcount(static_cast<unsigned long>(mask));
        if (e < best[slot])
            continue;
        SimpleGraph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1)
                g.set_edge(pairs[i].first, pairs[i].second, true);
        if (!is_free(g, family))
            continue;
        if (e > best[slot]) {
            best[slot] = e;
            count[slot] = 0;
        }
        ++count[slot];
    }
    LabeledResult out;
    out.ex_value = *std::max_element(best.begin(), best.end());
    for (int s = 0; s < slots; ++s)
        if (best[s] == out.ex_value)
            out.labeled_extremal_count += count[s];
    if (out.ex_value < 0)
        throw std::domain_error("no family-free graph of order " + std::to_string(n) + " exists");
    return out;
}

bool maximality_audit(const SimpleGraph& witness, const ForbiddenFamily& family)
{
    if (!is_free(witness, family))
        throw std::invalid_argument("maximality audit needs a family-free graph");
    SimpleGraph g = witness;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (g.adjacent(u, v))
                continue;
            g.set_edge(u, v, true);
            const bool still_free = is_free_given_free_parent(g, family, u);
            g.set_edge(u, v, false);
            if (still_free)
                return false;
        }
    return true;
}

ThresholdReport threshold_scan(const ForbiddenFamily& family, int from, int to,
                               const std::function<long(int)>& formula, const OracleBudget& budget)
{
    ThresholdReport report;
    for (int n = from; n <= to; ++n) {
        ThresholdRow row;
        row.n = n;
        row.formula_value = formula(n);
        try {
            auto res = brute_force_ex(n, family, budget);
            row.oracle_value = res.ex_value;
            row.witness_count = static_cast<int>(res.witnesses.size());
            row.exhaustive = res.exhaustive;
        } catch (const BudgetExceeded&) {
            row.oracle_value.reset();
        }
        row.match = row.oracle_value && *row.oracle_value == row.formula_value;
        report.rows.push_back(row);
    }
    for (auto it = report.rows.rbegin(); it != report.rows.rend() && it->match; ++it)
        report.first_agreement = it->n;
    return report;
}

ExProvider oracle_provider(const ForbiddenFamily& family, const OracleBudget& budget)
{
    auto memo = std::make_shared<std::map<std::pair<int, int>, long>>();
    return [family, budget, memo](int m, int ell) {
        auto key = std::make_pair(m, ell);
        if (auto it = memo->find(key); it != memo->end())
            return it->second;
        ForbiddenFamily single = make_family({family.patterns.at(static_cast<std::size_t>(ell - 1))},
                                             {family.names.at(static_cast<std::size_t>(ell - 1))});
        const long v = brute_force_ex(m, single, budget).ex_value;
        memo->emplace(key, v);
        return v;
    };
}

ExProvider auto_provider(const ForbiddenFamily& family, const OracleBudget& budget)
{
    std::vector<std::optional<std::function<long(int)>>> forms;
    for (const auto& p : family.patterns)
        forms.push_back(closed_form_ex(p));
    ExProvider fallback = oracle_provider(family, budget);
    return [forms, fallback](int m, int ell) {
        const auto& f = forms.at(static_cast<std::size_t>(ell - 1));
        return f ? (*f)(m) : fallback(m, ell);
    };
}

} // namespace exgraph
