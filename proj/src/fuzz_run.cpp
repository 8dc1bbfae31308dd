#include <chrono>
#include <cstdio>
#include <exception>

#include "hdk/fuzz.hpp"

namespace hdk::fuzz {
namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Outcome run_case(const Property& p, std::uint64_t seed, std::size_t i, const Limits& limits) {
  Gen g(case_seed(seed, p.name, i), p.limits.value_or(limits));
  try {
    return p.check(g);
  } catch (const std::exception& e) {
    return Outcome::fail(std::string("threw ") + e.what());
  }
}

PropertyReport summarize(const Property& p, const std::vector<Outcome>& outcomes, double seconds) {
  PropertyReport r;
  r.name = p.name;
  r.cases = outcomes.size();
  r.seconds = seconds;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].vacuous) ++r.vacuous;
    if (outcomes[i].ok) continue;
    if (r.failures++ == 0) {
      r.first_failing_case = i;
      r.first_message = outcomes[i].message;
    }
  }
  return r;
}

double since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::uint64_t case_seed(std::uint64_t seed, const std::string& property, std::size_t index) {
  return splitmix(splitmix(seed ^ fnv1a(property)) + index);
}

PropertyReport run(const Property& p, std::size_t cases, std::uint64_t seed, const Limits& limits) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes(cases);
  const long n = static_cast<long>(cases);
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) outcomes[i] = run_case(p, seed, static_cast<std::size_t>(i), limits);
  return summarize(p, outcomes, since(start));
}

PropertyReport run_serial(const Property& p, std::size_t cases, std::uint64_t seed, const Limits& limits) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes(cases);
  for (std::size_t i = 0; i < cases; ++i) outcomes[i] = run_case(p, seed, i, limits);
  return summarize(p, outcomes, since(start));
}

std::string format_report(const PropertyReport& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
  std::string out = r.name + ": " + std::to_string(r.cases - r.failures - r.vacuous) + "/" +
                    std::to_string(r.cases) + " passed";
  if (r.vacuous) out += ", " + std::to_string(r.vacuous) + " without an instance";
  out += " (" + std::string(buf) + ")";
  if (r.first_failing_case)
    out += "\n  first failure, case " + std::to_string(*r.first_failing_case) + ": " + r.first_message;
  return out;
}

}  // namespace hdk::fuzz
