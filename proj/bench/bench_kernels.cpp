// Serial reference vs OpenMP kernels. Each pair must produce identical results.

#include "exgraph/oracle.hpp"
#include "exgraph/stability.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

using namespace exgraph;

namespace {

template <class F>
double best_of(int reps, F&& f)
{
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

int mismatches = 0;

void row(const char* name, double serial, double parallel, bool same)
{
    mismatches += !same;
    std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel, serial / parallel,
                same ? "identical" : "MISMATCH");
}

void labeled(int n, const char* spec)
{
    auto fam = parse_family(spec);
    LabeledResult a, b;
    const double s = best_of(3, [&] { a = labeled_space_ex(n, fam, false); });
    const double p = best_of(3, [&] { b = labeled_space_ex(n, fam, true); });
    char name[64];
    std::snprintf(name, sizeof name, "labeled filter n=%d [%s]", n, spec);
    row(name, s, p, a.ex_value == b.ex_value && a.labeled_extremal_count == b.labeled_extremal_count);
}

void oracle(int n, const char* spec)
{
    auto fam = parse_family(spec);
    OracleBudget serial, parallel;
    serial.parallel = false;
    ExtremalResult a, b;
    const double s = best_of(3, [&] { a = brute_force_ex(n, fam, serial); });
    const double p = best_of(3, [&] { b = brute_force_ex(n, fam, parallel); });
    char name[64];
    std::snprintf(name, sizeof name, "oracle levels n=%d [%s]", n, spec);
    row(name, s, p, a.ex_value == b.ex_value && a.witnesses == b.witnesses);
}

void local_search(int n, int r)
{
    std::mt19937_64 rng(5);
    std::bernoulli_distribution coin(0.5);
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    LocalSearchOptions serial, parallel;
    serial.parallel = false;
    serial.starts = parallel.starts = 64;
    PartitionDiagnostics a, b;
    const double s = best_of(3, [&] { a = min_internal_partition(g, r, PartitionMode::LocalSearch, 0.1, serial); });
    const double p = best_of(3, [&] { b = min_internal_partition(g, r, PartitionMode::LocalSearch, 0.1, parallel); });
    char name[64];
    std::snprintf(name, sizeof name, "local search n=%d r=%d", n, r);
    row(name, s, p, a.part_of == b.part_of);
}

} // namespace

int main()
{
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#endif
    std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");
    labeled(7, "k3");
    labeled(7, "k3,k3");
    oracle(10, "k3,k3");
    oracle(10, "w7");
    oracle(10, "k3,c4");
    local_search(200, 3);
    local_search(400, 2);
    return mismatches;
}
