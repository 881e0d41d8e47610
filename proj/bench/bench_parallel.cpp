// Wall-clock comparison of the serial reference paths against the OpenMP
// ones, on workloads big enough to exercise the parallel loops.  Each kernel
// is also cross-checked: both paths must return identical results.
#include "grk/fock.hpp"
#include "grk/tableaux.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace grk;

namespace {

double seconds(const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

void report(const char* name, double serial, double parallel, bool agree) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   x%.2f   %s\n", name,
                serial, parallel, serial / parallel,
                agree ? "results agree" : "RESULTS DIFFER");
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    bool all_agree = true;

    {
        QuantumChar qc(2);
        std::vector<long> kappa{0, 1};
        std::vector<Multipartition> shapes;
        for (auto& mu : enumerate_multipartitions(9, 2)) shapes.push_back(mu);
        std::vector<QCharacter> a, b;
        specht_qcharacters(shapes, kappa, qc, Exec::serial);  // warm-up
        double ts = seconds(
            [&] { a = specht_qcharacters(shapes, kappa, qc, Exec::serial); });
        double tp = seconds(
            [&] { b = specht_qcharacters(shapes, kappa, qc, Exec::parallel); });
        bool ok = a == b;
        all_agree = all_agree && ok;
        report("specht characters d=9 l=2", ts, tp, ok);
    }

    {
        QuantumChar qc(3);
        std::vector<long> kappa{0};
        RootElement alpha;  // principal block of d = 10
        Multipartition mu = Multipartition::parse("4,3,2,1");
        for (const Node& a : mu.nodes()) add_to(alpha, node_residue(a, kappa, qc));
        std::map<std::pair<std::vector<long>, std::vector<long>>, LaurentPoly>
            a, b;
        graded_dimension_table(alpha, kappa, qc, Exec::serial);  // warm-up
        double ts = seconds(
            [&] { a = graded_dimension_table(alpha, kappa, qc, Exec::serial); });
        double tp = seconds([&] {
            b = graded_dimension_table(alpha, kappa, qc, Exec::parallel);
        });
        bool ok = a == b;
        all_agree = all_agree && ok;
        report("graded dimensions d=10", ts, tp, ok);
    }

    {
        QuantumChar qc(3);
        std::vector<long> kappa{0, 1};
        std::vector<RelationViolation> a, b;
        verify_uqg_relations(4, kappa, qc, Exec::serial);  // warm-up
        double ts = seconds(
            [&] { a = verify_uqg_relations(4, kappa, qc, Exec::serial); });
        double tp = seconds(
            [&] { b = verify_uqg_relations(4, kappa, qc, Exec::parallel); });
        bool ok = a == b && a.empty();
        all_agree = all_agree && ok;
        report("fock relations dmax=4 l=2", ts, tp, ok);
    }

    return all_agree ? 0 : 1;
}
