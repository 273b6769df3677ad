#include "braidthom/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <json.hpp>
#include <optional>
#include <thread>

#include "braidthom/decompose.hpp"
#include "braidthom/errors.hpp"
#include "braidthom/named.hpp"
#include "braidthom/text.hpp"

namespace braidthom {
namespace {

constexpr std::array<std::string_view, 13> kSuites = {
    "group_axioms",      "confluence",      "braid_oracle_crosscheck", "lemma_conjugate",
    "lemma_push_into_1", "lemma_commconj",  "lemma_normal_bP",         "lemma_onto_bP",
    "chi1_hom",          "hnn_roundtrip",   "center",                  "three_factor",
    "fig5_conventions"};

struct Outcome {
  std::optional<Failure> failure;
  bool witness = false;  // suite-level existence checks (center)
};

// Collects the elements a trial touched so a failure can be replayed.
class Trial {
 public:
  Trial(std::uint64_t index, const GenConfig& cfg) : index_(index), rng_(cfg.seed, index) {}

  Rng& rng() { return rng_; }
  std::uint64_t index() const { return index_; }

  const Element& keep(const Element& g) {
    elements_.push_back(format_element(g));
    return g;
  }
  Element draw(const GenConfig& cfg, std::optional<Subgroup> tag) {
    GenConfig c = cfg;
    c.constrain = tag;
    return keep(random_element(c, rng_));
  }

  void check(bool ok, const std::string& what) {
    if (!ok && !failure_) failure_ = what;
  }
  bool failed() const { return failure_.has_value(); }

  Outcome finish(bool witness = false) {
    Outcome o;
    o.witness = witness;
    if (failure_) o.failure = Failure{index_, *failure_, elements_};
    return o;
  }
  Outcome crash(const std::string& what) {
    return {Failure{index_, what, elements_}, false};
  }

 private:
  std::uint64_t index_;
  Rng rng_;
  std::vector<std::string> elements_;
  std::optional<std::string> failure_;
};

using Body = std::function<Outcome(Trial&, const GenConfig&)>;

Element conj(const Element& a, const Element& g) { return mul(mul(a, g), inv(a)); }

Outcome group_axioms(Trial& t, const GenConfig& cfg) {
  const Element a = t.draw(cfg, std::nullopt);
  const Element b = t.draw(cfg, std::nullopt);
  const Element c = t.draw(cfg, std::nullopt);
  const Element e = Element::identity();
  t.check(equal(mul(mul(a, b), c), mul(a, mul(b, c))), "associativity");
  t.check(equal(mul(e, a), a) && equal(mul(a, e), a), "identity");
  t.check(is_identity(mul(a, inv(a))) && is_identity(mul(inv(a), a)), "inverse");
  t.check(equal(a, mul(mul(a, b), inv(b))), "right cancellation");
  t.check(equal(a, b) == is_identity(mul(a, inv(b))), "equal disagrees with is_identity(a b^-1)");
  const auto k = static_cast<int>(t.rng().uniform(1, a.strands()));
  t.check(equal(expand(a, k), a), "expansion changes the element");
  if (a.rb.untwisted() && b.rb.untwisted()) {
    t.check(v_equal(project_to_v(mul(a, b)), v_mul(project_to_v(a), project_to_v(b))),
            "project_to_v is not multiplicative");
  }
  return t.finish();
}

Outcome confluence(Trial& t, const GenConfig& cfg) {
  Element g = t.draw(cfg, std::nullopt);
  // Pad with expansions so there is something to reduce in several orders.
  const auto pads = t.rng().uniform(1, 4);
  for (std::int64_t p = 0; p < pads; ++p) {
    g = expand(g, static_cast<int>(t.rng().uniform(1, g.strands())));
  }
  t.keep(g);
  const Element canonical = normalize(g);
  Rng& rng = t.rng();
  const Element shuffled = normalize_with(g, [&rng](std::size_t count) {
    return static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(count) - 1));
  });
  t.keep(shuffled);
  t.check(canonical.left == shuffled.left && canonical.right == shuffled.right,
          "reduction orders reach different trees");
  t.check(canonical.twists() == shuffled.twists(), "reduction orders reach different twists");
  t.check(braid_equal(canonical.braid(), shuffled.braid()),
          "reduction orders reach different braids");
  t.check(identical(normalize(canonical), canonical), "normalize is not idempotent");
  t.check(!reduce_step(canonical), "normal form still reducible");
  return t.finish();
}

BraidWord relator(Rng& rng, int n) {
  std::vector<Letter> r;
  const auto i = static_cast<int>(rng.uniform(1, n - 1));
  const auto kind = rng.uniform(0, 2);
  if (kind == 1 && n >= 3) {
    const int j = i < n - 1 ? i + 1 : i - 1;
    const int lo = std::min(i, j);
    r = {{lo, 1}, {lo + 1, 1}, {lo, 1}, {lo + 1, -1}, {lo, -1}, {lo + 1, -1}};
  } else if (kind == 2 && n >= 4) {
    const auto a = static_cast<int>(rng.uniform(1, n - 3));
    const auto b = static_cast<int>(rng.uniform(a + 2, n - 1));
    r = {{a, 1}, {b, 1}, {a, -1}, {b, -1}};
  } else {
    r = {{i, 1}, {i, -1}};
  }
  std::rotate(r.begin(), r.begin() + rng.uniform(0, static_cast<std::int64_t>(r.size()) - 1),
              r.end());
  BraidWord w(n, std::move(r));
  if (rng.coin()) w = w.inverse();
  const BraidWord v = random_braid(rng, n, static_cast<int>(rng.uniform(0, 3)));
  return v * w * v.inverse();
}

BraidWord with_relators(Rng& rng, const BraidWord& u) {
  std::vector<Letter> out = u.letters();
  const auto count = rng.uniform(1, 3);
  for (std::int64_t c = 0; c < count; ++c) {
    const BraidWord r = relator(rng, u.strands());
    const auto at = rng.uniform(0, static_cast<std::int64_t>(out.size()));
    out.insert(out.begin() + at, r.letters().begin(), r.letters().end());
  }
  return BraidWord(u.strands(), std::move(out));
}

Outcome braid_oracle_crosscheck(Trial& t, const GenConfig& cfg) {
  Rng& rng = t.rng();
  const auto n = static_cast<int>(rng.uniform(2, std::max(2, cfg.max_leaves)));
  const BraidWord u = random_braid(rng, n, static_cast<int>(rng.uniform(0, cfg.max_word_len)));
  BraidWord v(n);
  switch (rng.uniform(0, 2)) {
    case 0:  // independent word
      v = random_braid(rng, n, static_cast<int>(rng.uniform(0, cfg.max_word_len)));
      break;
    case 1:  // equal by construction
      v = with_relators(rng, u);
      break;
    default:  // same permutation and exponent sum, usually different
      v = with_relators(rng, u) * BraidWord::power(n, static_cast<int>(rng.uniform(1, n - 1)), 2) *
          BraidWord::power(n, static_cast<int>(rng.uniform(1, n - 1)), -2);
      break;
  }
  const Tree comb(std::string(static_cast<std::size_t>(n - 1), '1') +
                  std::string(static_cast<std::size_t>(n), '0'));
  t.keep(Element(comb, RibbonBraid(u), comb));
  t.keep(Element(comb, RibbonBraid(v), comb));

  const bool eq = braid_equal(u, v);
  if (eq) {
    t.check(rho(u) == rho(v), "equal braids with different permutations");
    t.check(exponent_sum(u) == exponent_sum(v), "equal braids with different exponent sums");
    t.check(linking_matrix(u) == linking_matrix(v), "equal braids with different linking");
  }
  t.check(eq == handle_equal(u, v), "Artin action and handle reduction disagree");
  const BraidWord r = with_relators(rng, u);
  t.check(braid_equal(u, r), "relator insertion judged unequal");
  const BraidWord off = u * BraidWord::power(n, static_cast<int>(rng.uniform(1, n - 1)), 1);
  t.check(!braid_equal(u, off), "u and u*s_i judged equal");
  t.check(braid_equal(u * u.inverse(), BraidWord(n)), "u u^-1 judged nontrivial");
  return t.finish();
}

Outcome lemma_conjugate(Trial& t, const GenConfig& cfg) {
  const Element h = t.draw(cfg, Subgroup::bVhat1);
  t.check(member(h, Subgroup::bVhat1), "generator left bVhat1");
  const Element x0 = named("x0");
  t.check(member(mul(mul(inv(x0), h), x0), Subgroup::bVhat1), "x0^-1 h x0 not in bVhat1");
  return t.finish();
}

Outcome lemma_push_into_1(Trial& t, const GenConfig& cfg) {
  const Element g = t.draw(cfg, Subgroup::Dhat);
  t.check(member(g, Subgroup::Dhat), "generator left Dhat");
  const HnnDecomposition d = hnn_decompose(g);
  t.check(d.shift == 0, "nonzero shift on Dhat");
  const Element xk = power(named("x0"), d.k);
  t.check(member(mul(mul(inv(xk), g), xk), Subgroup::bVhat1), "x0^-k g x0^k not in bVhat1");
  return t.finish();
}

Outcome lemma_commconj(Trial& t, const GenConfig& cfg) {
  const Element a = t.draw(cfg, Subgroup::bVhat1);
  const Element b = t.draw(cfg, Subgroup::bVhat1);
  const Element g = named("g_comm");
  const Element c = mul(mul(inv(g), b), g);
  t.check(equal(mul(a, c), mul(c, a)), "a does not commute with g^-1 b g");
  return t.finish();
}

Outcome lemma_normal_bP(Trial& t, const GenConfig& cfg) {
  const Element p = t.draw(cfg, Subgroup::bP);
  const Element r = t.draw(cfg, std::nullopt);
  t.check(member(p, Subgroup::bP), "generator left bP");
  const Element q = conj(r, p);
  t.check(member(q, Subgroup::bP), "r p r^-1 not in bP");
  t.check(q.left == q.right, "bP normal form is not symmetric");
  const Element wide = expand(q, static_cast<int>(t.rng().uniform(1, q.strands())));
  t.check(wide.left == wide.right, "expanded bP representative is not symmetric");
  return t.finish();
}

Element random_hat_pure(Trial& t, const GenConfig& cfg) {
  Rng& rng = t.rng();
  const auto n = static_cast<int>(rng.uniform(1, cfg.max_leaves));
  const Tree tree = random_tree(rng, n);
  const auto len = static_cast<int>(rng.uniform(0, cfg.max_word_len));
  return t.keep(Element(tree, RibbonBraid(random_pure_braid(rng, n, len, n - 1)), tree));
}

Outcome lemma_onto_bP(Trial& t, const GenConfig& cfg) {
  const Element a = random_hat_pure(t, cfg);
  const Element b = random_hat_pure(t, cfg);
  t.check(equal(left_part(mul(a, b)), mul(left_part(a), left_part(b))),
          "left_part is not multiplicative");
  const Element p = t.draw(cfg, Subgroup::bP);
  const Element s = bp_section(p);
  t.check(member(s, Subgroup::bVhat) && member(s, Subgroup::bP), "section leaves bVhat ∩ bP");
  t.check(equal(left_part(s), p), "left_part(bp_section(p)) != p");
  return t.finish();
}

Outcome chi1_hom(Trial& t, const GenConfig& cfg) {
  const Element a = t.draw(cfg, Subgroup::bVhat);
  const Element b = t.draw(cfg, Subgroup::bVhat);
  t.check(chi1(mul(a, b)) == chi1(a) + chi1(b), "chi1(ab) != chi1(a) + chi1(b)");
  t.check(chi1(inv(a)) == -chi1(a), "chi1(a^-1) != -chi1(a)");
  if (t.index() == 0) t.check(chi1(named("x0")) == 1, "chi1(x0) != 1");
  return t.finish();
}

Outcome hnn_roundtrip(Trial& t, const GenConfig& cfg) {
  const Element g = t.draw(cfg, Subgroup::bVhat);
  const HnnDecomposition d = hnn_decompose(g);
  t.keep(d.base);
  t.check(d.shift == chi1(g), "shift differs from chi1");
  t.check(member(d.base, Subgroup::bV), "base has twists");
  t.check(equal(hnn_recompose(d), g), "recomposition differs");
  return t.finish();
}

Outcome center(Trial& t, const GenConfig& cfg) {
  const Element r = t.draw(cfg, std::nullopt);
  const Element z = named("z_center");
  const Element psi = named("psi");
  t.check(equal(mul(z, r), mul(r, z)), "z_center does not commute");
  return t.finish(!equal(mul(psi, r), mul(r, psi)));
}

Outcome three_factor_suite(Trial& t, const GenConfig& cfg) {
  Rng& rng = t.rng();
  const auto n = static_cast<int>(rng.uniform(1, cfg.max_leaves));
  const Tree tree = random_tree(rng, n);
  Twists m(static_cast<std::size_t>(n));
  for (auto& x : m) x = rng.uniform(-cfg.twist_bound, cfg.twist_bound);
  const Element g = t.keep(Element(tree, RibbonBraid(BraidWord(n), m), tree));
  const ThreeFactors f = three_factor(g);
  t.check(equal(mul(mul(f.braid_part, f.first_twist), f.other_twists), g),
          "three factors do not recompose (twist-only)");
  const Element r = t.draw(cfg, std::nullopt);
  const ThreeFactors fr = three_factor(r);
  t.check(equal(mul(mul(fr.braid_part, fr.first_twist), fr.other_twists), r),
          "three factors do not recompose");

  m[0] = 0;
  const Element h = t.keep(Element(tree, RibbonBraid(BraidWord(n), m), tree));
  const ShuffleConjugation sc = shuffle_conjugation(h);
  t.keep(sc.conjugator);
  t.check(equal(conj(sc.conjugator, h), sc.expected), "shuffle conjugation identity fails");
  return t.finish();
}

Outcome fig5_conventions(Trial& t, const GenConfig&) {
  const Element dot = t.keep(parse_element("[0 | e (1) | 0]"));
  const Element wedge = t.keep(parse_element("[100 | s1 (1,1) | 100]"));
  t.check(equal(dot, wedge), "half-twist expansion pair unequal");
  t.check(identical(expand(dot, 1), wedge), "expand([·,(1),·], 1) is not [∧, s1 (1,1), ∧]");
  const auto back = reduce_step(wedge);
  t.check(back && identical(*back, dot), "reduce_step does not undo the expansion");
  t.check(cable(BraidWord(2, {{1, 1}}), 1) == BraidWord(3, {{1, 1}, {2, 1}}),
          "cable(s1, 1) != s1 s2");
  t.check(chi1(named("x0")) == 1, "chi1(x0) != 1");
  return t.finish();
}

Body body_for(std::string_view name) {
  if (name == "group_axioms") return group_axioms;
  if (name == "confluence") return confluence;
  if (name == "braid_oracle_crosscheck") return braid_oracle_crosscheck;
  if (name == "lemma_conjugate") return lemma_conjugate;
  if (name == "lemma_push_into_1") return lemma_push_into_1;
  if (name == "lemma_commconj") return lemma_commconj;
  if (name == "lemma_normal_bP") return lemma_normal_bP;
  if (name == "lemma_onto_bP") return lemma_onto_bP;
  if (name == "chi1_hom") return chi1_hom;
  if (name == "hnn_roundtrip") return hnn_roundtrip;
  if (name == "center") return center;
  if (name == "three_factor") return three_factor_suite;
  if (name == "fig5_conventions") return fig5_conventions;
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

Outcome run_trial(const Body& body, std::uint64_t index, const GenConfig& cfg) {
  Trial t(index, cfg);
  try {
    return body(t, cfg);
  } catch (const std::exception& e) {
    return t.crash(std::string("exception: ") + e.what());
  }
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

std::string SuiteReport::to_json(int indent) const {
  nlohmann::json j;
  j["suite"] = name;
  j["trials"] = trials;
  j["seed"] = config.seed;
  j["max_leaves"] = config.max_leaves;
  j["max_word_len"] = config.max_word_len;
  j["twist_bound"] = config.twist_bound;
  j["passed"] = passed();
  j["elapsed_seconds"] = elapsed_seconds;
  nlohmann::json fs = nlohmann::json::array();
  for (const Failure& f : failures) {
    fs.push_back({{"trial", f.trial}, {"message", f.message}, {"elements", f.elements}});
  }
  j["failures"] = std::move(fs);
  return j.dump(indent);
}

SuiteReport run_suite(std::string_view name, std::uint64_t trials, const GenConfig& cfg,
                      unsigned threads) {
  const Body body = body_for(name);
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();

  std::vector<Outcome> outcomes(trials);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(trials, 1)));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < trials; i = next++) outcomes[i] = run_trial(body, i, cfg);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SuiteReport report;
  report.name = std::string(name);
  report.trials = trials;
  report.config = cfg;
  bool witness = false;
  for (auto& o : outcomes) {
    if (o.failure) report.failures.push_back(std::move(*o.failure));
    witness = witness || o.witness;
  }
  if (name == "center" && trials > 0 && !witness) {
    report.failures.push_back({trials, "no sampled element fails to commute with psi", {}});
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace braidthom
