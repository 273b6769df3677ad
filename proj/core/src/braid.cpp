#include "braidthom/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "braidthom/errors.hpp"

namespace braidthom {

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw DomainError("a braid needs at least one strand");
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw DomainError("a braid needs at least one strand");
  for (const Letter& l : letters_) {
    if (l.index < 1 || l.index >= strands_) {
      throw DomainError("generator s" + std::to_string(l.index) + " does not exist in B_" +
                        std::to_string(strands_));
    }
    if (l.sign != 1 && l.sign != -1) throw DomainError("letter sign must be +1 or -1");
  }
}

BraidWord BraidWord::power(int strands, int index, int exponent) {
  const int sign = exponent < 0 ? -1 : 1;
  return BraidWord(strands, std::vector<Letter>(static_cast<std::size_t>(std::abs(exponent)),
                                                Letter{index, sign}));
}

BraidWord BraidWord::inverse() const {
  BraidWord out(strands_);
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back({it->index, -it->sign});
  }
  return out;
}

BraidWord BraidWord::freely_reduced() const {
  BraidWord out(strands_);
  out.letters_.reserve(letters_.size());
  for (const Letter& l : letters_) {
    if (!out.letters_.empty() && out.letters_.back().index == l.index &&
        out.letters_.back().sign == -l.sign) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(l);
    }
  }
  return out;
}

BraidWord BraidWord::with_strands(int strands) const { return BraidWord(strands, letters_); }

BraidWord& BraidWord::operator*=(const BraidWord& other) {
  if (other.strands_ != strands_) throw DomainError("braid product: strand counts differ");
  std::size_t i = 0;
  while (i < other.letters_.size() && !letters_.empty() &&
         letters_.back().index == other.letters_[i].index &&
         letters_.back().sign == -other.letters_[i].sign) {
    letters_.pop_back();
    ++i;
  }
  letters_.insert(letters_.end(), other.letters_.begin() + static_cast<std::ptrdiff_t>(i),
                  other.letters_.end());
  return *this;
}

Permutation rho(const BraidWord& w) {
  // strand_at[p] = bottom start of the strand currently at position p.
  std::vector<int> strand_at(static_cast<std::size_t>(w.strands()));
  std::iota(strand_at.begin(), strand_at.end(), 1);
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    std::swap(strand_at[static_cast<std::size_t>(it->index - 1)],
              strand_at[static_cast<std::size_t>(it->index)]);
  }
  std::vector<int> images(strand_at.size());
  for (std::size_t pos = 0; pos < strand_at.size(); ++pos) {
    images[static_cast<std::size_t>(strand_at[pos] - 1)] = static_cast<int>(pos) + 1;
  }
  return Permutation(std::move(images));
}

int exponent_sum(const BraidWord& w) {
  int sum = 0;
  for (const Letter& l : w.letters()) sum += l.sign;
  return sum;
}

LinkingMatrix linking_matrix(const BraidWord& w) {
  const auto n = static_cast<std::size_t>(w.strands());
  LinkingMatrix m(n, std::vector<int>(n, 0));
  std::vector<std::size_t> strand_at(n);
  std::iota(strand_at.begin(), strand_at.end(), std::size_t{0});
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    const auto p = static_cast<std::size_t>(it->index - 1);
    const std::size_t a = strand_at[p];
    const std::size_t b = strand_at[p + 1];
    m[a][b] += it->sign;
    m[b][a] += it->sign;
    std::swap(strand_at[p], strand_at[p + 1]);
  }
  return m;
}

BraidWord cable(const BraidWord& w, int k) {
  if (k < 1 || k > w.strands()) throw DomainError("cable: strand index out of range");
  // Built bottom-first, reversed at the end.
  std::vector<Letter> out;
  out.reserve(w.length() * 2);
  int c = k;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    const int i = it->index;
    const int e = it->sign;
    if (i == c) {
      // Single strand from slot c+2 crosses both cable strands, nearest first.
      out.push_back({c + 1, e});
      out.push_back({c, e});
      ++c;
    } else if (i + 1 == c) {
      out.push_back({c - 1, e});
      out.push_back({c, e});
      --c;
    } else if (i + 1 < c) {
      out.push_back({i, e});
    } else {
      out.push_back({i + 1, e});
    }
  }
  std::reverse(out.begin(), out.end());
  return BraidWord(w.strands() + 1, std::move(out));
}

BraidWord delete_strand(const BraidWord& w, int k) {
  if (w.strands() < 2) throw DomainError("delete_strand: cannot delete the only strand");
  if (k < 1 || k > w.strands()) throw DomainError("delete_strand: strand index out of range");
  std::vector<Letter> out;
  out.reserve(w.length());
  int t = k;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    const int i = it->index;
    if (i == t) {
      ++t;
    } else if (i + 1 == t) {
      --t;
    } else {
      out.push_back({i > t ? i - 1 : i, it->sign});
    }
  }
  std::reverse(out.begin(), out.end());
  return BraidWord(w.strands() - 1, std::move(out));
}

bool is_pure(const BraidWord& w) { return rho(w).is_identity(); }

bool is_hat(const BraidWord& w) {
  const int n = w.strands();
  if (n == 1) return true;
  if (rho(w)(n) != n) return false;
  return braid_equal(w, delete_strand(w, n).with_strands(n));
}

BraidWord shuffle_braid(const Permutation& p) {
  // target[pos] = top position the strand currently at pos must reach.
  std::vector<int> target = p.images();
  std::vector<Letter> bottom_first;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t pos = 0; pos + 1 < target.size(); ++pos) {
      if (target[pos] > target[pos + 1]) {
        std::swap(target[pos], target[pos + 1]);
        bottom_first.push_back({static_cast<int>(pos) + 1, 1});
        swapped = true;
      }
    }
  }
  std::reverse(bottom_first.begin(), bottom_first.end());
  return BraidWord(std::max(p.size(), 1), std::move(bottom_first));
}

std::vector<FreeWord> artin_images(const BraidWord& w, std::size_t budget) {
  const auto n = static_cast<std::size_t>(w.strands());
  std::vector<FreeWord> images;
  images.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) images.push_back(FreeWord::generator(static_cast<int>(j)));
  std::size_t total = n;
  // images := images ∘ Act(letter), reading letters left to right.
  for (const Letter& l : w.letters()) {
    FreeWord& xi = images[static_cast<std::size_t>(l.index - 1)];
    FreeWord& xj = images[static_cast<std::size_t>(l.index)];
    total -= xi.size() + xj.size();
    if (l.sign > 0) {
      // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
      FreeWord next = xi * xj * xi.inverse();
      xj = std::move(xi);
      xi = std::move(next);
    } else {
      // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
      FreeWord next = xj.inverse() * xi * xj;
      xi = std::move(xj);
      xj = std::move(next);
    }
    total += xi.size() + xj.size();
    if (total > budget) {
      throw ResourceError("Artin action exceeded free-word budget of " + std::to_string(budget) +
                          " letters");
    }
  }
  return images;
}

bool braid_equal(const BraidWord& u, const BraidWord& v, const OracleOptions& options) {
  if (u.strands() != v.strands()) throw DomainError("braid_equal: strand counts differ");
  const BraidWord ur = u.freely_reduced();
  const BraidWord vr = v.freely_reduced();
  if (ur == vr) return true;
  if (exponent_sum(ur) != exponent_sum(vr)) return false;
  if (rho(ur) != rho(vr)) return false;
  if (linking_matrix(ur) != linking_matrix(vr)) return false;
  try {
    const auto iu = artin_images(ur, options.free_word_budget);
    std::size_t used = 0;
    for (const auto& f : iu) used += f.size();
    const std::size_t rest = options.free_word_budget > used ? options.free_word_budget - used : 0;
    return iu == artin_images(vr, rest);
  } catch (const ResourceError&) {
    if (!options.handle_fallback) throw;
  }
  return handle_equal(ur, vr);
}

BraidWord handle_reduce(const BraidWord& w) {
  std::vector<Letter> word = w.freely_reduced().letters();
  for (;;) {
    // Handle with the leftmost closing letter; its interior holds no
    // handle, so it is a permitted one.
    std::size_t open = 0;
    std::size_t close = 0;
    bool found = false;
    for (std::size_t r = 1; r < word.size() && !found; ++r) {
      const int i = word[r].index;
      for (std::size_t l = r; l-- > 0;) {
        if (word[l].index < i) break;
        if (word[l].index == i) {
          if (word[l].sign == -word[r].sign) {
            open = l;
            close = r;
            found = true;
          }
          break;
        }
      }
    }
    if (!found) break;
    const int i = word[open].index;
    const int e = word[open].sign;
    std::vector<Letter> next(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(open));
    next.reserve(word.size() + 2 * (close - open));
    auto push = [&next](Letter l) {
      if (!next.empty() && next.back().index == l.index && next.back().sign == -l.sign) {
        next.pop_back();
      } else {
        next.push_back(l);
      }
    };
    for (std::size_t p = open + 1; p < close; ++p) {
      if (word[p].index == i + 1) {
        push({i + 1, -e});
        push({i, word[p].sign});
        push({i + 1, e});
      } else {
        push(word[p]);
      }
    }
    for (std::size_t p = close + 1; p < word.size(); ++p) push(word[p]);
    word = std::move(next);
  }
  return BraidWord(w.strands(), std::move(word));
}

bool handle_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw DomainError("handle_equal: strand counts differ");
  return handle_reduce(u * v.inverse()).empty();
}

std::string to_string(const BraidWord& w) {
  if (w.empty()) return "e";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t p = 0; p < ls.size();) {
    std::size_t q = p;
    while (q < ls.size() && ls[q] == ls[p]) ++q;
    const auto exponent = static_cast<long>(q - p) * ls[p].sign;
    if (!out.empty()) out += ' ';
    out += "s" + std::to_string(ls[p].index);
    if (exponent != 1) out += "^" + std::to_string(exponent);
    p = q;
  }
  return out;
}

}  // namespace braidthom
