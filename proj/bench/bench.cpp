// Times the parallel embedding search and property runner against their
// serial counterparts.

#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <random>

#include "hdk/fuzz.hpp"
#include "hdk/kernel.hpp"
#include "hdk/reference.hpp"

namespace {

template <class Fn>
double seconds(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

/// Searches a tall 2-diagram of endomorphism cells for a two-cell pattern.
bool bench_search(std::size_t height, int repeats) {
  using namespace hdk;
  Signature sig(3);
  GeneratorId star = sig.add_generator("*", 0);
  Diagram pt = Diagram::point(star);
  GeneratorId f = sig.add_generator("f", 1, pt, pt);
  Diagram f1(pt, {Entry{f, Embedding{}}});
  GeneratorId s = sig.add_generator("s", 2, f1, f1);
  Diagram word(pt, std::vector<Entry>(8, Entry{f, Embedding{}}));
  std::mt19937_64 rng(3);
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < height; ++i) entries.push_back(Entry{s, Embedding{rng() % 8}});
  Diagram tall(word, entries);
  Diagram pattern(Diagram(pt, {Entry{f, Embedding{}}, Entry{f, Embedding{}}}),
                  {Entry{s, Embedding{0}}, Entry{s, Embedding{1}}});
  slices(tall, sig);

  std::size_t parallel_count = 0, serial_count = 0;
  const int threads = omp_get_max_threads();
  omp_set_num_threads(1);
  const double serial = seconds([&] {
    for (int i = 0; i < repeats; ++i) serial_count = find_embeddings(pattern, tall, sig).size();
  });
  omp_set_num_threads(threads);
  const double parallel = seconds([&] {
    for (int i = 0; i < repeats; ++i) parallel_count = find_embeddings(pattern, tall, sig).size();
  });
  bool agree = parallel_count == serial_count;
  std::printf("%-48s %10.3f %10.3f %8.2f%s\n", ("embedding search, height " + std::to_string(height)).c_str(),
              serial, parallel, parallel > 0 ? serial / parallel : 0.0, agree ? "" : "  (results differ)");
  if (height <= 256) {
    // the uncached literal search, once, for scale
    std::size_t literal_count = 0;
    const double literal = seconds([&] { literal_count = reference::find_embeddings(pattern, tall, sig).size(); });
    agree = agree && literal_count == parallel_count;
    std::printf("%-48s %10.3f\n", "  literal reference search, one run", literal);
  }
  return agree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel kernels versus their serial counterparts"};
  std::size_t cases = 200;
  std::uint64_t seed = 7;
  hdk::fuzz::Limits limits;
  app.add_option("--cases", cases, "Cases per property");
  app.add_option("--seed", seed, "Base seed");
  app.add_option("--max-dim", limits.max_dim, "Largest diagram dimension")->check(CLI::Range(1, 4));
  CLI11_PARSE(app, argc, argv);

  using namespace hdk::fuzz;
  std::vector<Property> all = metatheory();
  all.push_back(normal_form());
  all.push_back(rewrite_size_law());
  for (const auto& p : move_round_trips()) all.push_back(p);

  std::printf("threads: %d, cases per property: %zu\n", omp_get_max_threads(), cases);
  std::printf("%-48s %10s %10s %8s\n", "", "1 thread s", "parallel s", "speedup");
  bool agree = true;
  for (std::size_t height : {256, 4096}) agree = bench_search(height, height > 1000 ? 20 : 200) && agree;
  double total_serial = 0, total_parallel = 0;
  for (const Property& p : all) {
    PropertyReport s = run_serial(p, cases, seed, limits);
    PropertyReport q = run(p, cases, seed, limits);
    agree = agree && s == q;
    total_serial += s.seconds;
    total_parallel += q.seconds;
    std::printf("%-48s %10.3f %10.3f %8.2f%s\n", p.name.c_str(), s.seconds, q.seconds,
                q.seconds > 0 ? s.seconds / q.seconds : 0.0, s == q ? "" : "  (results differ)");
  }
  std::printf("%-48s %10.3f %10.3f %8.2f\n", "total", total_serial, total_parallel,
              total_parallel > 0 ? total_serial / total_parallel : 0.0);
  return agree ? 0 : 1;
}
