#pragma once

#include "exgraph/constructions.hpp"
#include "exgraph/family.hpp"
#include "exgraph/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace exgraph {

struct OracleBudget {
    /// Maximum number of candidate graphs examined (0 = unlimited).
    long max_candidates = 200'000'000;
    /// Wall-clock limit in seconds (0 = unlimited).
    double max_seconds = 0;
    int hard_cap = 10;
    /// Required to run above hard_cap.
    bool allow_above_cap = false;
    /// Parallel level expansion (OpenMP); results do not depend on it.
    bool parallel = true;
    std::uint64_t seed = 0;
};

struct ExtremalResult {
    int n = 0;
    ForbiddenFamily family;
    long ex_value = 0;
    /// Pairwise non-isomorphic, canonically labeled, sorted by certificate.
    std::vector<SimpleGraph> witnesses;
    /// True iff every isomorphism class was covered.
    bool exhaustive = false;
    long candidates_examined = 0;
};

/// Thrown on budget exhaustion. `partial` carries the best lower bound found
/// (exhaustive = false).
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, ExtremalResult partial)
        : std::runtime_error(what), partial(std::move(partial))
    {
    }
    ExtremalResult partial;
};

/// ex(n, family) and EX(n, family) up to isomorphism.
///
/// Vertex-by-vertex isomorph-free generation of family-free graphs only (freeness is
/// hereditary, so a graph containing the family is never extended). Each graph is reached
/// from the one obtained by deleting a minimum-degree vertex, which yields per-order edge
/// lower bounds from a heuristic witness at order n; branches below them are cut.
ExtremalResult brute_force_ex(int n, const ForbiddenFamily& family, const OracleBudget& budget = {});

/// Independent check: filters all 2^C(n,2) labeled graphs. n <= 7.
struct LabeledResult {
    long ex_value = 0;
    long labeled_extremal_count = 0;
};
LabeledResult labeled_space_ex(int n, const ForbiddenFamily& family, bool parallel = true);

/// Family-free graph on n vertices from randomized greedy edge addition (lower bound).
SimpleGraph greedy_free_graph(int n, const ForbiddenFamily& family, std::uint64_t seed, int trials = 64);

/// Per-order edge lower bounds L[m], m = 0..n, implied by L[n] under minimum-degree deletion.
std::vector<long> level_bounds(int n, long target);

/// True iff adding any missing edge creates an occurrence. Throws std::invalid_argument if
/// `witness` is not family-free.
bool maximality_audit(const SimpleGraph& witness, const ForbiddenFamily& family);

struct ThresholdRow {
    int n = 0;
    std::optional<long> oracle_value;
    long formula_value = 0;
    bool match = false;
    int witness_count = 0;
    bool exhaustive = false;
};

struct ThresholdReport {
    std::vector<ThresholdRow> rows;
    /// Least scanned n from which every larger scanned row matches.
    std::optional<int> first_agreement;
};

/// Rows whose oracle run exhausts the budget are kept with an unknown oracle value.
ThresholdReport threshold_scan(const ForbiddenFamily& family, int from, int to,
                               const std::function<long(int)>& formula, const OracleBudget& budget = {});

/// ex(m, F_ell) from the oracle, memoized.
ExProvider oracle_provider(const ForbiddenFamily& family, const OracleBudget& budget = {});
/// Closed form where available (complete graphs, odd wheels W_{2k+1} with k >= 3), oracle otherwise.
ExProvider auto_provider(const ForbiddenFamily& family, const OracleBudget& budget = {});

} // namespace exgraph
