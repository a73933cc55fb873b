#pragma once

#include "exgraph/family.hpp"
#include "exgraph/graph.hpp"

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace exgraph {

struct ExtremalResult;

/// One component of the bounded-component (k-1)-regular graph placed on the n0 side.
struct ComponentLayout {
    int order = 0;
    /// True for the single component carrying the one vertex of degree k-2.
    bool nearly_regular = false;
};

/// Parameters of one extremal construction: K_{ell-1} joined with
/// K_{n0, n-ell+1-n0}, a bounded-component graph on the n0 side and one edge on the other.
/// ell = 1 means no clique side; k = 0 marks a recipe without a wheel part.
struct ConstructionRecipe {
    int n = 0;
    int k = 0;
    int ell = 1;
    int n0 = 0;
    std::vector<ComponentLayout> components;
};

/// A maximum together with every parameter value attaining it.
struct FormulaValue {
    long value = 0;
    std::vector<int> argmax;
};

/// Component orders in [k, 2k-2], largest first, summing to n0, with at most one odd
/// component when k - 1 is odd. Throws Infeasible when no such split exists.
std::vector<ComponentLayout> u_component_layout(int n0, int k);

/// (k-1)-regular, or nearly (k-1)-regular when (k-1) n0 is odd, with every component of
/// order at most 2k-2 (hence P_{2k-1}-free). Each component is a circulant.
SimpleGraph u_family_member(int n0, int k);

/// P_{2k-1}-free and (k-1)-regular or nearly (k-1)-regular.
bool validate_u_family(const SimpleGraph& g, int k);

/// n0 (n - n0) + floor((k-1) n0 / 2) + 1
long wheel_bracket(int n, int k, int n0);
/// Maximum of wheel_bracket over 1 <= n0 <= n with the full argmax set.
FormulaValue wheel_extremal_value(int n, int k);

ConstructionRecipe wheel_extremal_recipe(int n, int k, std::optional<int> n0 = std::nullopt);
SimpleGraph build_recipe(const ConstructionRecipe& recipe);
/// Without n0, the largest argmax n0 whose construction is realizable is used.
SimpleGraph wheel_extremal_graph(int n, int k, std::optional<int> n0 = std::nullopt);

/// ex(m, F_ell) for 1 <= ell <= h.
using ExProvider = std::function<long(int m, int ell)>;

/// max over 1 <= ell <= h of C(ell-1, 2) + (ell-1)(n-ell+1) + ex(n-ell+1, F_ell).
/// Terms with n - ell + 1 < 1 are skipped.
FormulaValue union_extremal_value(int n, const ForbiddenFamily& family, const ExProvider& ex);
long union_term(int n, int ell, long inner_ex);

/// K_{ell-1} joined with h; requires |h| = n - ell + 1.
SimpleGraph union_extremal_graph(int n, int ell, const SimpleGraph& h);

struct WheelUnionValue {
    /// Literal double maximum over (i, n0), 1 <= i <= min(m, n), 1 <= n0 <= n.
    long value = 0;
    std::vector<std::pair<int, int>> argmax_pairs;
    /// max over ell of C(ell-1,2) + (ell-1)(n-ell+1) + wheel_extremal_value(n-ell+1, k_ell).
    long composed_value = 0;
    std::vector<int> argmax_ell;
    /// Set when some k_i < 3 (no closed form for those wheels is claimed).
    bool outside_formula_range = false;
};

/// ks must be non-increasing with every entry >= 2. Throws std::logic_error if the two
/// forms disagree.
WheelUnionValue union_wheels_value(int n, std::span<const int> ks);

/// max over 1 <= n0 <= n of C(m-1,2) + floor((k-1) n0/2) + (n0+m-1)(n-m+1) - n0^2 + 1.
FormulaValue multi_wheel_value(int n, int k, int m);

/// Closed-form ex(m, pattern) when the pattern is a complete graph (Turan) or an odd wheel
/// W_{2k+1} with k >= 3; empty otherwise.
std::optional<std::function<long(int)>> closed_form_ex(const SimpleGraph& pattern);
/// Provider built from closed forms; throws InvalidSpec if some pattern has none.
ExProvider formula_provider(const ForbiddenFamily& family);

using ExtremalEnumerator = std::function<ExtremalResult(int n, const ForbiddenFamily& single)>;

struct ProperOrderLevel {
    int ell = 0;
    /// An extremal graph for F_ell containing none of F_1..F_ell, if any exists.
    std::optional<SimpleGraph> witness;
    long ex_value = 0;
    int extremal_count = 0;
};

struct ProperOrderReport {
    int n = 0;
    bool properly_ordered = false;
    std::vector<ProperOrderLevel> levels;
};

/// Enumerator failures (such as an exhausted budget) propagate.
ProperOrderReport check_properly_ordered(const ForbiddenFamily& family, int n, const ExtremalEnumerator& oracle);

long floor_div(long a, long b);
long choose2(long x);

} // namespace exgraph
