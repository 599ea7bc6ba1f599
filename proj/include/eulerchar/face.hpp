#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "eulerchar/detail/bits.hpp"

namespace eulerchar {

/// A set of vertex indices over a fixed universe {0, ..., n-1}, packed one
/// bit per vertex.
class Face {
public:
  Face() = default;
  explicit Face(std::size_t universe) : n_(universe), words_(detail::words_for(universe), 0) {}
  Face(std::size_t universe, std::initializer_list<std::size_t> members);
  Face(std::size_t universe, std::span<const std::size_t> members);
  /// Adopts packed words; bits at positions >= universe must be clear.
  static Face from_words(std::size_t universe, std::span<const detail::Word> words);
  static Face full(std::size_t universe);

  std::size_t universe() const { return n_; }
  std::size_t size() const { return detail::popcount(words_); }
  bool empty() const { return detail::is_zero(words_); }
  bool contains(std::size_t v) const { return v < n_ && detail::test_bit(words_, v); }

  void insert(std::size_t v);
  void erase(std::size_t v);

  bool is_subset_of(const Face& other) const;
  bool intersects(const Face& other) const;

  Face operator|(const Face& o) const;
  Face operator&(const Face& o) const;
  /// Set difference.
  Face operator-(const Face& o) const;
  Face complement() const;

  std::vector<std::size_t> members() const;
  std::span<const detail::Word> words() const { return words_; }

  friend bool operator==(const Face& a, const Face& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  /// Lexicographic order on ascending member lists; used for canonical forms.
  friend bool operator<(const Face& a, const Face& b);

  friend std::ostream& operator<<(std::ostream& os, const Face& f);

private:
  void check_same_universe(const Face& o) const;

  std::size_t n_ = 0;
  std::vector<detail::Word> words_;
};

}  // namespace eulerchar
