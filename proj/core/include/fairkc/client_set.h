// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRKC_CLIENT_SET_H_
#define FAIRKC_CLIENT_SET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace fairkc {

// Fixed-universe bitset over client positions [0, size). The solver keeps
// every client subset (remaining clients, ball contents) in this form so that
// ball sizes reduce to word-wise AND + popcount.
class ClientSet {
 public:
  ClientSet() = default;
  explicit ClientSet(std::size_t size, bool filled = false)
      : size_(size), words_((size + 63) / 64, filled ? ~uint64_t{0} : 0) {
    if (filled) TrimTail();
  }

  std::size_t universe() const { return size_; }

  bool Contains(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void Insert(std::size_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void Erase(std::size_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  std::size_t Count() const {
    std::size_t c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool Empty() const {
    for (uint64_t w : words_)
      if (w != 0) return false;
    return true;
  }

  // |this ∩ other|
  std::size_t IntersectCount(const ClientSet& other) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
      c += std::popcount(words_[w] & other.words_[w]);
    return c;
  }

  ClientSet Intersect(const ClientSet& other) const {
    ClientSet out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= other.words_[w];
    return out;
  }
  ClientSet Union(const ClientSet& other) const {
    ClientSet out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] |= other.words_[w];
    return out;
  }
  void Subtract(const ClientSet& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  }
  bool IsSubsetOf(const ClientSet& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  std::vector<std::size_t> Members() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits) {
        out.push_back(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    return out;
  }

  const std::vector<uint64_t>& words() const { return words_; }

  friend bool operator==(const ClientSet&, const ClientSet&) = default;

 private:
  void TrimTail() {
    if (size_ % 64 != 0 && !words_.empty())
      words_.back() &= (uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace fairkc

#endif  // FAIRKC_CLIENT_SET_H_
