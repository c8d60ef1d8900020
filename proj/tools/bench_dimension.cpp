// Compares the serial and OpenMP-parallel dimension searches on the named
// fixtures, a canonical interval order, and seeded random interval orders.
// Both runs must agree on the value and on the certificate node count.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "intorder/dimension.hpp"
#include "intorder/instances.hpp"
#include "intorder/interval.hpp"

namespace {

struct BenchCase {
  std::string label;
  intorder::Poset poset;
};

double run_ms(const intorder::Poset& p, int jobs,
              intorder::DimensionResult& result) {
  intorder::DimensionOptions options;
  options.jobs = jobs;
  auto start = std::chrono::steady_clock::now();
  result = intorder::exact_dimension(p, options);
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel exact-dimension benchmark"};
  int jobs =
#ifdef _OPENMP
      omp_get_max_threads();
#else
      1;
#endif
  app.add_option("--jobs", jobs, "threads for the parallel run");
  int random_n = 12;
  app.add_option("--n", random_n, "size of the random instances");
  int trials = 3;
  app.add_option("--trials", trials, "number of random instances");
  std::uint64_t seed = 2026;
  app.add_option("--seed", seed, "base seed for the random instances");
  CLI11_PARSE(app, argc, argv);

  std::vector<BenchCase> cases;
  for (const char* name : {"FX2", "H0", "G0"})
    cases.push_back({name, intorder::named(name).poset});
  cases.push_back({"canonical(4)", intorder::canonical_interval_order(4).first});
  for (int t = 0; t < trials; ++t) {
    intorder::RandomRepSpec spec;
    spec.n = random_n;
    spec.lengths = {intorder::Rational(1), intorder::Rational(2)};
    spec.grid = 2;
    spec.seed = seed + static_cast<std::uint64_t>(t);
    intorder::Representation rep = intorder::random_representation(spec);
    cases.push_back({"random(n=" + std::to_string(random_n) +
                         ", seed=" + std::to_string(spec.seed) + ")",
                     intorder::poset_from_representation(rep)});
  }

  std::printf("%-28s %4s %4s %12s %12s %8s %12s\n", "instance", "n", "dim",
              "serial ms", "parallel ms", "speedup", "nodes");
  bool consistent = true;
  for (const BenchCase& bench : cases) {
    intorder::DimensionResult serial;
    intorder::DimensionResult parallel;
    double serial_ms = run_ms(bench.poset, 1, serial);
    double parallel_ms = run_ms(bench.poset, jobs, parallel);
    bool same = serial.dimension == parallel.dimension &&
                serial.certificate.nodes_explored ==
                    parallel.certificate.nodes_explored;
    consistent = consistent && same;
    std::printf("%-28s %4d %4d %12.2f %12.2f %7.2fx %12llu%s\n",
                bench.label.c_str(), bench.poset.size(), serial.dimension,
                serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                static_cast<unsigned long long>(
                    serial.certificate.nodes_explored),
                same ? "" : "  MISMATCH");
  }
  if (!consistent) {
    std::fprintf(stderr, "serial and parallel runs disagree\n");
    return 1;
  }
  return 0;
}
