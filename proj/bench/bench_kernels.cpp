// Times the OpenMP kernels against their serial reference implementations
// and checks that both produce identical output.
//
//   bench_kernels [repeats]

#include "bilat/corpus.hpp"
#include "bilat/duality.hpp"
#include "bilat/enumerate.hpp"
#include "bilat/prodrep.hpp"
#include "bilat/varieties.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace bilat;

namespace {

double time_ms(const std::function<void()>& f, int repeats) {
    double best = 1e30;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-34s %10.2f ms %10.2f ms   x%.2f   %s\n", name.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "outputs equal" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run the serial kernel\n");
#endif
    std::printf("%-34s %13s %13s\n", "kernel", "serial", "parallel");

    {
        // Evaluation-map enumeration over the squared DB power space
        // (the F_DB(2) search: 28224 monotone maps over 16 points).
        AlterEgo ego = standard_alter_ego(Variety::DB);
        StructuredSpace power = power_space(ego, 2);
        std::vector<std::vector<int>> a, b;
        double ts = time_ms(
            [&] { a = enumerate_evaluation_maps(power, ego, Exec::Serial, std::uint64_t(1) << 36); },
            repeats);
        double tp = time_ms(
            [&] { b = enumerate_evaluation_maps(power, ego, Exec::Parallel, std::uint64_t(1) << 36); },
            repeats);
        row("evaluation maps 4~^2", ts, tp, a == b);
    }

    {
        // Homomorphism enumeration from the 36-element free algebra into a
        // 256-element bowtie power.
        FreeAlgebra f = free_algebra(Variety::DB, 1);
        AlgPtr src = make_alg(f.algebra);
        FinAlgebra big = product(bowtie(chain_lattice(4, true)).algebra,
                                 canonical("4"));
        AlgPtr tgt = make_alg(big);
        std::vector<Hom> a, b;
        double ts = time_ms([&] { a = enumerate_homs(src, tgt, Exec::Serial); }, repeats);
        double tp = time_ms([&] { b = enumerate_homs(src, tgt, Exec::Parallel); }, repeats);
        bool equal = a.size() == b.size();
        for (std::size_t i = 0; equal && i < a.size(); ++i) equal = a[i].map == b[i].map;
        row("homs F_DB(1) -> bowtie(4ch) x 4", ts, tp, equal);
    }

    {
        // Congruence lattice of a 64-element bowtie (principal congruences
        // batched over pairs).
        AlgPtr big = make_alg(bowtie(product(chain_lattice(2, true), chain_lattice(4, true))).algebra);
        CongruenceLattice a, b;
        double ts = time_ms([&] { a = congruence_lattice(big, Exec::Serial); }, repeats);
        double tp = time_ms([&] { b = congruence_lattice(big, Exec::Parallel); }, repeats);
        bool equal = a.congruences.size() == b.congruences.size();
        for (std::size_t i = 0; equal && i < a.congruences.size(); ++i)
            equal = a.congruences[i].block_of == b.congruences[i].block_of;
        row("congruence lattice, 64 elements", ts, tp, equal);
    }

    return 0;
}
