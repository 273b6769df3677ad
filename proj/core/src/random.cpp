#include "braidthom/random.hpp"

#include <limits>

#include "braidthom/errors.hpp"
#include "braidthom/named.hpp"

namespace braidthom {
namespace {

Tree tree_of_size(Rng& rng, int leaves) {
  if (leaves == 1) return Tree();
  const auto split = static_cast<int>(rng.uniform(1, leaves - 1));
  Tree l = tree_of_size(rng, split);
  return Tree::join(l, tree_of_size(rng, leaves - split));
}

Twists random_twists(Rng& rng, int n, int bound) {
  Twists t(static_cast<std::size_t>(n));
  for (auto& m : t) m = rng.uniform(-bound, bound);
  return t;
}

Element untwisted(Tree l, BraidWord b, Tree r) {
  return Element(std::move(l), RibbonBraid(std::move(b)), std::move(r));
}

// bV element whose braid fixes the last strand.
Element random_hat(const GenConfig& cfg, Rng& rng) {
  const auto n = static_cast<int>(rng.uniform(1, cfg.max_leaves));
  const auto len = static_cast<int>(rng.uniform(0, cfg.max_word_len));
  BraidWord b = n > 2 ? random_braid(rng, n - 1, len).with_strands(n) : BraidWord(n);
  Tree l = random_tree(rng, n);
  return untwisted(std::move(l), std::move(b), random_tree(rng, n));
}

}  // namespace

void GenConfig::validate() const {
  if (max_leaves < 1 || max_word_len < 1 || twist_bound < 1) {
    throw DomainError("generator bounds must be positive");
  }
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InternalError("Rng::uniform: empty range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % span);
}

Tree random_tree(Rng& rng, int leaves) {
  if (leaves < 1) throw DomainError("random_tree: need at least one leaf");
  return tree_of_size(rng, leaves);
}

BraidWord random_braid(Rng& rng, int strands, int length) {
  if (strands < 2) return BraidWord(strands);
  std::vector<Letter> ls;
  ls.reserve(static_cast<std::size_t>(length));
  for (int c = 0; c < length; ++c) {
    ls.push_back({static_cast<int>(rng.uniform(1, strands - 1)), rng.coin() ? 1 : -1});
  }
  return BraidWord(strands, std::move(ls));
}

BraidWord random_pure_braid(Rng& rng, int strands, int max_length, int top) {
  BraidWord out(strands);
  if (top < 2) return out;
  int room = max_length;
  while (room >= 2 && rng.uniform(0, 3) != 0) {
    const auto conj = static_cast<int>(rng.uniform(0, std::min(3, (room - 2) / 2)));
    const BraidWord v = random_braid(rng, top, conj).with_strands(strands);
    const auto i = static_cast<int>(rng.uniform(1, top - 1));
    const BraidWord sq = BraidWord::power(strands, i, rng.coin() ? 2 : -2);
    out *= v * sq * v.inverse();
    room -= 2 * conj + 2;
  }
  return out;
}

Element random_element(const GenConfig& cfg, Rng& rng) {
  cfg.validate();
  const auto n = static_cast<int>(rng.uniform(1, cfg.max_leaves));
  const auto len = static_cast<int>(rng.uniform(0, cfg.max_word_len));
  if (!cfg.constrain) {
    Tree l = random_tree(rng, n);
    BraidWord b = random_braid(rng, n, len);
    Tree r = random_tree(rng, n);
    return Element(std::move(l), RibbonBraid(std::move(b), random_twists(rng, n, cfg.twist_bound)),
                   std::move(r));
  }
  switch (*cfg.constrain) {
    case Subgroup::F: {
      Tree l = random_tree(rng, n);
      return untwisted(std::move(l), BraidWord(n), random_tree(rng, n));
    }
    case Subgroup::bV: {
      Tree l = random_tree(rng, n);
      BraidWord b = random_braid(rng, n, len);
      return untwisted(std::move(l), std::move(b), random_tree(rng, n));
    }
    case Subgroup::bF: {
      Tree l = random_tree(rng, n);
      BraidWord b = random_pure_braid(rng, n, len, n);
      return untwisted(std::move(l), std::move(b), random_tree(rng, n));
    }
    case Subgroup::bP: {
      Tree t = random_tree(rng, n);
      return untwisted(t, random_pure_braid(rng, n, len, n), t);
    }
    case Subgroup::bT: {
      const auto r = static_cast<int>(rng.uniform(0, n - 1));
      std::vector<int> images(static_cast<std::size_t>(n));
      for (int k = 1; k <= n; ++k) images[static_cast<std::size_t>(k - 1)] = (k - 1 + r) % n + 1;
      BraidWord b = shuffle_braid(Permutation(std::move(images)));
      b *= random_pure_braid(rng, n, len, n);
      Tree l = random_tree(rng, n);
      return untwisted(std::move(l), std::move(b), random_tree(rng, n));
    }
    case Subgroup::bVhat:
      return random_hat(cfg, rng);
    case Subgroup::bVhat1: {
      GenConfig inner = cfg;
      inner.max_leaves = std::max(1, cfg.max_leaves - 1);
      inner.constrain = Subgroup::bV;
      return embed_hat1(random_element(inner, rng));
    }
    case Subgroup::Dhat: {
      const Element g = random_hat(cfg, rng);
      return mul(g, power(named("x0"), -chi1(g)));
    }
  }
  throw InternalError("random_element: unhandled subgroup");
}

Element random_element(const GenConfig& cfg) {
  Rng rng(cfg.seed, 0);
  return random_element(cfg, rng);
}

}  // namespace braidthom
