// Compares the serial reference elimination against the OpenMP kernel on
// random matrices over GF(p) and over the rationals, and times the two main
// pipelines (signatures, posets) end to end.

#include <chrono>
#include <cstdio>
#include <random>

#include "qdeg/orbits.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace qdeg;
using Clock = std::chrono::steady_clock;

namespace {

template <class Fn>
double time_once(Fn&& fn) {
    auto start = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class F>
void bench_rank_kernels(const char* label, F f, std::size_t size, int reps) {
    std::mt19937_64 rng(7);
    std::vector<Matrix<F>> mats;
    for (int i = 0; i < reps; ++i) mats.push_back(random_matrix(f, size, size, rng));
    std::size_t sink = 0;
    double serial = time_once([&] {
        for (const auto& m : mats) sink += rank_serial(m);
    });
    double parallel = time_once([&] {
        for (const auto& m : mats) sink += rank(m);
    });
    std::printf("%-14s %4zux%-4zu x%-3d  serial %8.3fms  parallel %8.3fms  (x%.2f)\n", label,
                size, size, reps, 1e3 * serial, 1e3 * parallel, serial / parallel);
    if (sink == 0xdeadbeef) std::printf("impossible\n");
}

void bench_pipeline() {
    RationalField f;
    Quiver q;
    q.add_vertex("p");
    q.add_vertex("q");
    q.add_vertex("b");
    q.add_vertex("v1");
    q.add_vertex("v2");
    q.add_arrow("s1", "p", "b");
    q.add_arrow("s2", "q", "b");
    q.add_arrow("e1", "b", "v1");
    q.add_arrow("e2", "v2", "v1");
    auto qp = std::make_shared<const Quiver>(q);
    DimVector d = {1, 1, 2, 2, 1};
    StarEmbedding e = embed_type_D(q, d);

    std::mt19937_64 rng(8);
    auto v = random_rep(f, qp, d, rng);
    double sig = time_once([&] { orbit_signature(v, e); });
    std::printf("%-14s n=%d, %zu functions        %10.3fms\n", "signature", e.n,
                enumerate_rank_functions(e.n).size(), 1e3 * sig);

    double poset = time_once([&] {
        auto os = enumerate_orbits(f, qp, d, 9);
        hasse_poset(os, e);
    });
    std::printf("%-14s D5 (1,1,2,2,1)           %10.3fms\n", "poset", 1e3 * poset);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled (serial build)\n");
#endif
    bench_rank_kernels("GF(65521)", PrimeField(65521), 64, 20);
    bench_rank_kernels("GF(65521)", PrimeField(65521), 256, 5);
    bench_rank_kernels("GF(2^61-1)", PrimeField(2305843009213693951ULL), 256, 5);
    bench_rank_kernels("rationals", RationalField{}, 32, 5);
    bench_rank_kernels("rationals", RationalField{}, 64, 2);
    bench_pipeline();
    return 0;
}
