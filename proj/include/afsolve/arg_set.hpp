// Copyright (c) 2026 afsolve contributors
// SPDX-License-Identifier: MIT

#ifndef AFSOLVE_ARG_SET_HPP
#define AFSOLVE_ARG_SET_HPP

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace afsolve {

using ArgIndex = std::uint32_t;

/// Dense bitset over the arguments 0..universe()-1 of one framework.
class ArgSet {
  using Word = std::uint64_t;
  static constexpr std::size_t kBits = 64;

 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ArgIndex;
    using difference_type = std::ptrdiff_t;
    using pointer = const ArgIndex*;
    using reference = ArgIndex;

    const_iterator() = default;
    const_iterator(const ArgSet* set, std::size_t pos) : set_(set), pos_(pos) { seek(); }

    ArgIndex operator*() const { return static_cast<ArgIndex>(pos_); }
    const_iterator& operator++() {
      ++pos_;
      seek();
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    void seek() {
      const std::size_t n = set_->n_;
      while (pos_ < n) {
        const Word rest = set_->words_[pos_ / kBits] >> (pos_ % kBits);
        if (rest != 0) {
          pos_ += static_cast<std::size_t>(std::countr_zero(rest));
          return;
        }
        pos_ = (pos_ / kBits + 1) * kBits;
      }
      pos_ = n;
    }

    const ArgSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  ArgSet() = default;
  explicit ArgSet(std::size_t universe) : n_(universe), words_((universe + kBits - 1) / kBits, 0) {}

  static ArgSet full(std::size_t universe) {
    ArgSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
    s.trim();
    return s;
  }

  template <class Range>
  static ArgSet of(std::size_t universe, const Range& members) {
    ArgSet s(universe);
    for (auto a : members) s.insert(static_cast<ArgIndex>(a));
    return s;
  }

  static ArgSet of(std::size_t universe, std::initializer_list<ArgIndex> members) {
    ArgSet s(universe);
    for (auto a : members) s.insert(a);
    return s;
  }

  std::size_t universe() const { return n_; }

  bool contains(ArgIndex a) const {
    assert(a < n_);
    return (words_[a / kBits] >> (a % kBits)) & 1U;
  }
  void insert(ArgIndex a) {
    assert(a < n_);
    words_[a / kBits] |= Word{1} << (a % kBits);
  }
  void erase(ArgIndex a) {
    assert(a < n_);
    words_[a / kBits] &= ~(Word{1} << (a % kBits));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  ArgSet& operator|=(const ArgSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ArgSet& operator&=(const ArgSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ArgSet& operator-=(const ArgSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ArgSet operator|(ArgSet a, const ArgSet& b) { return a |= b; }
  friend ArgSet operator&(ArgSet a, const ArgSet& b) { return a &= b; }
  friend ArgSet operator-(ArgSet a, const ArgSet& b) { return a -= b; }

  ArgSet complement() const { return full(n_) - *this; }

  bool is_subset_of(const ArgSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool is_proper_subset_of(const ArgSet& o) const { return is_subset_of(o) && *this != o; }
  bool intersects(const ArgSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  friend bool operator==(const ArgSet&, const ArgSet&) = default;

  const_iterator begin() const { return {this, 0}; }
  const_iterator end() const { return {this, n_}; }

  std::vector<ArgIndex> members() const { return {begin(), end()}; }

 private:
  void trim() {
    if (n_ % kBits != 0 && !words_.empty()) words_.back() &= (Word{1} << (n_ % kBits)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<Word> words_;
};

/// Canonical order: lexicographic comparison of the ascending member lists,
/// so {} < {0} < {0,1} < {1}.
struct CanonicalLess {
  bool operator()(const ArgSet& a, const ArgSet& b) const {
    auto ia = a.begin(), ea = a.end();
    auto ib = b.begin(), eb = b.end();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
      if (*ia != *ib) return *ia < *ib;
    }
    return ia == ea && ib != eb;
  }
};

inline void sort_canonical(std::vector<ArgSet>& sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
}

}  // namespace afsolve

#endif  // AFSOLVE_ARG_SET_HPP
