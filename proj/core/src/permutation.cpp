#include "braidthom/permutation.hpp"

#include <numeric>

#include "braidthom/errors.hpp"

namespace braidthom {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || hit[static_cast<std::size_t>(v)]) {
      throw DomainError("permutation images are not a bijection on 1.." + std::to_string(size()));
    }
    hit[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::adjacent_transposition(int n, int i) {
  if (i < 1 || i >= n) throw DomainError("transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation out = identity(size());
  for (int k = 1; k <= size(); ++k) out.images_[static_cast<std::size_t>((*this)(k) - 1)] = k;
  return out;
}

bool Permutation::is_identity() const {
  for (int k = 1; k <= size(); ++k) {
    if ((*this)(k) != k) return false;
  }
  return true;
}

bool Permutation::is_rotation() const {
  const int n = size();
  if (n == 0) return true;
  const int shift = (*this)(1) - 1;
  for (int k = 1; k <= n; ++k) {
    if ((*this)(k) != (k - 1 + shift) % n + 1) return false;
  }
  return true;
}

Permutation Permutation::doubled(int k) const {
  if (k < 1 || k > size()) throw DomainError("doubled: index out of range");
  const int pk = (*this)(k);
  auto shift = [pk](int v) { return v > pk ? v + 1 : v; };
  std::vector<int> out;
  out.reserve(images_.size() + 1);
  for (int q = 1; q <= size(); ++q) {
    if (q == k) {
      out.push_back(pk);
      out.push_back(pk + 1);
    } else {
      out.push_back(shift((*this)(q)));
    }
  }
  return Permutation(std::move(out));
}

Permutation Permutation::removed(int k) const {
  if (k < 1 || k > size()) throw DomainError("removed: index out of range");
  const int pk = (*this)(k);
  std::vector<int> out;
  out.reserve(images_.size() - 1);
  for (int q = 1; q <= size(); ++q) {
    if (q == k) continue;
    const int v = (*this)(q);
    out.push_back(v > pk ? v - 1 : v);
  }
  return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(images_[i]);
  }
  return out + "]";
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) throw DomainError("compose: size mismatch");
  std::vector<int> out(static_cast<std::size_t>(g.size()));
  for (int k = 1; k <= g.size(); ++k) out[static_cast<std::size_t>(k - 1)] = f(g(k));
  return Permutation(std::move(out));
}

}  // namespace braidthom
