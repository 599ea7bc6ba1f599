#include "eulerchar/face.hpp"

#include <algorithm>
#include <string>

#include "eulerchar/errors.hpp"

#ifdef __BMI2__
#include <immintrin.h>
#endif

namespace eulerchar {

namespace detail {

Word extract_bits(Word src, Word mask) {
#ifdef __BMI2__
  return _pext_u64(src, mask);
#else
  Word out = 0;
  Word bit = 1;
  while (mask) {
    const Word low = mask & (~mask + 1);
    if (src & low) out |= bit;
    bit <<= 1;
    mask ^= low;
  }
  return out;
#endif
}

}  // namespace detail

Face::Face(std::size_t universe, std::initializer_list<std::size_t> members)
    : Face(universe, std::span<const std::size_t>(members.begin(), members.size())) {}

Face::Face(std::size_t universe, std::span<const std::size_t> members) : Face(universe) {
  for (std::size_t v : members) insert(v);
}

Face Face::from_words(std::size_t universe, std::span<const detail::Word> words) {
  if (words.size() != detail::words_for(universe))
    throw InternalError("Face: word count does not match universe");
  if (!words.empty() && (words.back() & ~detail::tail_mask(universe)))
    throw InternalError("Face: bits set beyond universe");
  Face f;
  f.n_ = universe;
  f.words_.assign(words.begin(), words.end());
  return f;
}

Face Face::full(std::size_t universe) {
  Face f(universe);
  for (auto& w : f.words_) w = ~detail::Word{0};
  if (!f.words_.empty()) f.words_.back() &= detail::tail_mask(universe);
  return f;
}

void Face::insert(std::size_t v) {
  if (v >= n_)
    throw InputError("vertex index " + std::to_string(v) + " out of range for universe of size " +
                     std::to_string(n_));
  detail::set_bit(words_, v);
}

void Face::erase(std::size_t v) {
  if (v < n_) detail::clear_bit(words_, v);
}

void Face::check_same_universe(const Face& o) const {
  if (n_ != o.n_) throw InputError("faces over different universes");
}

bool Face::is_subset_of(const Face& other) const {
  check_same_universe(other);
  return detail::is_subset(words_, other.words_);
}

bool Face::intersects(const Face& other) const {
  check_same_universe(other);
  return detail::intersects(words_, other.words_);
}

Face Face::operator|(const Face& o) const {
  check_same_universe(o);
  Face r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
  return r;
}

Face Face::operator&(const Face& o) const {
  check_same_universe(o);
  Face r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}

Face Face::operator-(const Face& o) const {
  check_same_universe(o);
  Face r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
  return r;
}

Face Face::complement() const { return full(n_) - *this; }

std::vector<std::size_t> Face::members() const {
  std::vector<std::size_t> out;
  detail::for_each_bit(words_, [&](std::size_t v) { out.push_back(v); });
  return out;
}

bool operator<(const Face& a, const Face& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::ostream& operator<<(std::ostream& os, const Face& f) {
  os << '{';
  bool first = true;
  for (std::size_t v : f.members()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

}  // namespace eulerchar
