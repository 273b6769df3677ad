#include "braidthom/free_word.hpp"

#include <cstdlib>

namespace braidthom {

FreeWord::FreeWord(const std::vector<int>& letters) {
  letters_.reserve(letters.size());
  for (int l : letters) push(l);
}

void FreeWord::push(int letter) {
  if (!letters_.empty() && letters_.back() == -letter) {
    letters_.pop_back();
  } else {
    letters_.push_back(letter);
  }
}

FreeWord& FreeWord::operator*=(const FreeWord& other) {
  std::size_t i = 0;
  while (i < other.letters_.size() && !letters_.empty() &&
         letters_.back() == -other.letters_[i]) {
    letters_.pop_back();
    ++i;
  }
  letters_.insert(letters_.end(), other.letters_.begin() + static_cast<std::ptrdiff_t>(i),
                  other.letters_.end());
  return *this;
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.letters_.assign(letters_.rbegin(), letters_.rend());
  for (int& l : out.letters_) l = -l;
  return out;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (int l : letters_) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

}  // namespace braidthom
