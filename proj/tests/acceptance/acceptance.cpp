// Acceptance criteria for braidthom, one PASS/FAIL line each.
// Usage: braidthom_acceptance [--seed S] [--threads T]

#include <braidthom/named.hpp>
#include <braidthom/subgroups.hpp>
#include <braidthom/text.hpp>
#include <braidthom/verify.hpp>

#include <fmt/format.h>

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

using namespace braidthom;

namespace {

struct Verdict {
  bool ok;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Verdict()> check;
};

GenConfig g_cfg;
unsigned g_threads = 1;

Verdict suites(std::initializer_list<std::pair<const char*, std::uint64_t>> runs) {
  std::string detail;
  bool ok = true;
  for (const auto& [name, trials] : runs) {
    const SuiteReport r = run_suite(name, trials, g_cfg, g_threads);
    if (!detail.empty()) detail += ", ";
    detail += fmt::format("{} {}/{}", name, r.trials - r.failures.size(), r.trials);
    if (!r.passed()) {
      ok = false;
      detail += fmt::format(" [trial {}: {}]", r.failures[0].trial, r.failures[0].message);
    }
  }
  return {ok, detail};
}

Verdict half_twist_identity() {
  const bool eq = equal(parse_element("[0 | e (1) | 0]"), parse_element("[100 | s1 (1,1) | 100]"));
  return {eq, eq ? "equal" : "not equal"};
}

Verdict chi1_criterion() {
  const auto x = chi1(named("x0"));
  Verdict v = suites({{"chi1_hom", 200}});
  v.detail = fmt::format("chi1(x0)={}, {}", x, v.detail);
  v.ok = v.ok && x == 1;
  return v;
}

Verdict named_criterion() {
  const Element t1 = named("t1");
  const Element t2 = named("t2");
  const Element h1 = named("h1");
  const Element h2 = named("h2");
  const Element psi = named("psi");
  const bool rel = equal(h2, mul(mul(psi, inv(h1)), inv(psi)));
  const bool nontrivial = !is_identity(h1);
  return {rel && nontrivial,
          fmt::format("h2 = psi h1^-1 psi^-1: {}, h1 != 1: {}, h1 = {}", rel, nontrivial,
                      format_element(h1))};
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::strcmp(argv[i], "--seed") == 0) g_cfg.seed = std::strtoull(argv[i + 1], nullptr, 10);
    if (std::strcmp(argv[i], "--threads") == 0) {
      g_threads = static_cast<unsigned>(std::strtoul(argv[i + 1], nullptr, 10));
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "half-twist expansion identity", 1, half_twist_identity},
      {2, "chi1(x0) = 1 and chi1 additive on 200 pairs", 10, chi1_criterion},
      {3, "group axioms, 1000 triples", 300, [] { return suites({{"group_axioms", 1000}}); }},
      {4, "confluence, 1000 elements", 300, [] { return suites({{"confluence", 1000}}); }},
      {5, "braid oracle cross-check, 1000 pairs", 120,
       [] { return suites({{"braid_oracle_crosscheck", 1000}}); }},
      {6, "conjugate / push_into_1 / commconj, 200 each", 300,
       [] {
         return suites(
             {{"lemma_conjugate", 200}, {"lemma_push_into_1", 200}, {"lemma_commconj", 200}});
       }},
      {7, "bP normal in rV, 200 conjugations", 120,
       [] { return suites({{"lemma_normal_bP", 200}}); }},
      {8, "left_part homomorphism and section, 200 each", 300,
       [] { return suites({{"lemma_onto_bP", 200}}); }},
      {9, "HNN round-trip, 200 elements", 300, [] { return suites({{"hnn_roundtrip", 200}}); }},
      {10, "z_center central, psi not central, 200 elements", 300,
       [] { return suites({{"center", 200}}); }},
      {11, "three_factor and shuffle conjugation, 100 elements", 300,
       [] { return suites({{"three_factor", 100}}); }},
      {12, "t1, t2, h1, h2 and h2 = psi h1^-1 psi^-1", 30, named_criterion},
  };

  int failed = 0;
  fmt::print("acceptance (seed {})\n", g_cfg.seed);
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = v.ok && in_time;
    failed += pass ? 0 : 1;
    fmt::print("{} [{:2}] {} ({:.2f} s, limit {:.0f} s{}): {}\n", pass ? "PASS" : "FAIL", c.id,
               c.title, secs, c.limit_seconds, in_time ? "" : ", too slow", v.detail);
    std::fflush(stdout);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failed),
             criteria.size());
  return failed == 0 ? 0 : 1;
}
