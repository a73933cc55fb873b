#include "exgraph/canonical.hpp"

#include "exgraph/graph6.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace exgraph {

namespace {

using Cells = std::vector<std::vector<int>>;

constexpr int no_jump = -1;
constexpr std::size_t max_stored_automorphisms = 256;

class CanonSearch {
public:
    explicit CanonSearch(const SimpleGraph& g)
        : g_(g), n_(g.order()), words_(std::max(1, g.words_per_row()))
    {
    }

    CanonicalLabeling run()
    {
        Cells cells;
        if (n_ > 0) {
            cells.emplace_back(n_);
            std::iota(cells[0].begin(), cells[0].end(), 0);
        }
        search(cells);
        CanonicalLabeling out;
        out.labeling.assign(n_, 0);
        for (int pos = 0; pos < n_; ++pos)
            out.labeling[best_lab_[pos]] = pos;
        out.certificate = to_graph6(g_.relabeled(out.labeling));
        return out;
    }

private:
    int count_into(int v, const std::vector<std::uint64_t>& set) const
    {
        auto r = g_.row(v);
        int c = 0;
        for (std::size_t w = 0; w < r.size(); ++w)
            c += std::popcount(r[w] & set[w]);
        return c;
    }

    void refine(Cells& cells) const
    {
        std::vector<std::uint64_t> splitter(static_cast<std::size_t>(words_));
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
                std::fill(splitter.begin(), splitter.end(), 0);
                for (int v : cells[s])
                    splitter[v >> 6] |= std::uint64_t{1} << (v & 63);
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (cells[c].size() == 1)
                        continue;
                    std::vector<std::pair<int, int>> keyed;
                    keyed.reserve(cells[c].size());
                    for (int v : cells[c])
                        keyed.emplace_back(count_into(v, splitter), v);
                    std::stable_sort(keyed.begin(), keyed.end(),
                                     [](const auto& a, const auto& b) { return a.first < b.first; });
                    if (keyed.front().first == keyed.back().first)
                        continue;
                    Cells pieces;
                    for (std::size_t i = 0; i < keyed.size(); ++i) {
                        if (i == 0 || keyed[i].first != keyed[i - 1].first)
                            pieces.emplace_back();
                        pieces.back().push_back(keyed[i].second);
                    }
                    cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    std::vector<std::uint64_t> permuted_rows(const std::vector<int>& lab) const
    {
        std::vector<int> pos(n_);
        for (int i = 0; i < n_; ++i)
            pos[lab[i]] = i;
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_) * words_, 0);
        for (int i = 0; i < n_; ++i) {
            auto r = g_.row(lab[i]);
            for (std::size_t w = 0; w < r.size(); ++w)
                for (auto bits = r[w]; bits; bits &= bits - 1) {
                    const int p = pos[static_cast<int>(w) * 64 + std::countr_zero(bits)];
                    rows[static_cast<std::size_t>(i) * words_ + (p >> 6)] |= std::uint64_t{1} << (p & 63);
                }
        }
        return rows;
    }

    bool same_orbit(int a, int b) const
    {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(path_.begin(), path_.end(), [&](int p) { return gamma[p] == p; });
            if (!fixes)
                continue;
            for (int v = 0; v < n_; ++v)
                parent[find(v)] = find(gamma[v]);
        }
        return find(a) == find(b);
    }

    int leaf(const Cells& cells)
    {
        std::vector<int> lab;
        lab.reserve(n_);
        for (const auto& c : cells)
            lab.push_back(c.front());
        auto rows = permuted_rows(lab);
        if (!have_best_ || rows < best_rows_) {
            have_best_ = true;
            best_rows_ = std::move(rows);
            best_lab_ = std::move(lab);
            best_path_ = path_;
            return no_jump;
        }
        if (rows != best_rows_)
            return no_jump;
        // Equal leaves: the map best_lab[i] -> lab[i] is an automorphism fixing the
        // common prefix of the two paths and carrying the explored branch onto this one.
        if (automorphisms_.size() < max_stored_automorphisms) {
            std::vector<int> gamma(n_);
            for (int i = 0; i < n_; ++i)
                gamma[best_lab_[i]] = lab[i];
            automorphisms_.push_back(std::move(gamma));
        }
        std::size_t diverge = 0;
        while (diverge < path_.size() && diverge < best_path_.size() && path_[diverge] == best_path_[diverge])
            ++diverge;
        return static_cast<int>(diverge);
    }

    int search(Cells cells)
    {
        refine(cells);
        auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (target == cells.end())
            return leaf(cells);

        const int depth = static_cast<int>(path_.size());
        const std::size_t t = static_cast<std::size_t>(target - cells.begin());
        const std::vector<int> members = cells[t];
        std::vector<int> tried;
        for (int v : members) {
            if (std::any_of(tried.begin(), tried.end(), [&](int u) { return same_orbit(u, v); }))
                continue;
            tried.push_back(v);

            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != t) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int u : members)
                    if (u != v)
                        rest.push_back(u);
                child.push_back(std::move(rest));
            }
            path_.push_back(v);
            const int jump = search(std::move(child));
            path_.pop_back();
            if (jump != no_jump && jump < depth)
                return jump;
        }
        return no_jump;
    }

    const SimpleGraph& g_;
    int n_;
    int words_;
    bool have_best_ = false;
    std::vector<std::uint64_t> best_rows_;
    std::vector<int> best_lab_;
    std::vector<int> best_path_;
    std::vector<int> path_;
    std::vector<std::vector<int>> automorphisms_;
};

} // namespace

CanonicalLabeling canonical_labeling(const SimpleGraph& g)
{
    return CanonSearch(g).run();
}

std::string canonical_form(const SimpleGraph& g)
{
    return canonical_labeling(g).certificate;
}

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace exgraph
