#include "hcl/word_oracle.hpp"

#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

namespace hcl {

namespace {

// BFS over braid moves from `start` until `goal` holds; returns the word
// found and the z-exponent accumulated on the way.
std::pair<std::vector<int>, int> braid_search(const WeylGroup& g, const std::vector<int>& start,
                                              const std::function<bool(const std::vector<int>&)>& goal) {
  const WeylType& t = g.type();
  std::map<std::vector<int>, int> seen{{start, 0}};
  std::deque<std::vector<int>> queue{start};
  while (!queue.empty()) {
    std::vector<int> word = std::move(queue.front());
    queue.pop_front();
    const int z = seen.at(word);
    if (goal(word)) return {word, z};
    const int len = static_cast<int>(word.size());
    for (int p = 0; p + 1 < len; ++p) {
      const int i = word[p], j = word[p + 1];
      if (i == j) continue;
      const int m = coxeter_order(t, i, j);
      if (p + m > len) continue;
      bool alternating = true;
      for (int k = 0; k < m && alternating; ++k) alternating = word[p + k] == (k % 2 ? j : i);
      if (!alternating) continue;
      std::vector<int> next = word;
      for (int k = 0; k < m; ++k) next[p + k] = k % 2 ? i : j;
      if (seen.emplace(next, z ^ (m % 2 == 0 ? 1 : 0)).second) queue.push_back(std::move(next));
    }
  }
  throw std::logic_error("braid search: goal unreachable from the given word");
}

}  // namespace

int braid_class_zbit(const WeylGroup& g, const std::vector<int>& word,
                     const std::vector<int>& target) {
  return braid_search(g, word, [&](const std::vector<int>& w) { return w == target; }).second;
}

std::pair<uint32_t, int> reduce_cover_word(const WeylGroup& g, const std::vector<int>& word) {
  std::vector<int> current;
  uint32_t element = 0;
  int z = 0;
  for (int j : word) {
    const uint32_t next = g.mul(element, g.generator(j));
    if (g.length(next) > g.length(element)) {
      current.push_back(j);
    } else {
      // Bring a j to the end, then cancel t~_j t~_j = 1.
      auto [moved, k] =
          braid_search(g, current, [j](const std::vector<int>& w) { return w.back() == j; });
      z ^= k;
      moved.pop_back();
      current = std::move(moved);
    }
    element = next;
  }
  z ^= braid_class_zbit(g, current, g.word(element));
  return {element, z};
}

int cocycle_by_rewriting(const WeylGroup& g, uint32_t a, uint32_t b) {
  std::vector<int> word = g.word(a);
  word.insert(word.end(), g.word(b).begin(), g.word(b).end());
  const auto [element, z] = reduce_cover_word(g, word);
  if (element != g.mul(a, b)) throw std::logic_error("cover rewriting: wrong group element");
  return z ? -1 : 1;
}

}  // namespace hcl
