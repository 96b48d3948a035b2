#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace gq42 {

/// Enumerates all exact covers of a universe of at most 64 elements.
/// `universe` is the set of elements to cover; each candidate is the mask of
/// elements it covers. A solution is a set of pairwise disjoint candidates
/// whose union is exactly the universe. Every solution is emitted exactly
/// once (the search branches on a fixed uncovered element per node), as a
/// sorted list of candidate indices.
class ExactCover {
 public:
  ExactCover(std::uint64_t universe, std::span<const std::uint64_t> candidates)
      : universe_(universe),
        masks_(candidates.begin(), candidates.end()),
        by_element_(64) {
    for (std::size_t c = 0; c < masks_.size(); ++c) {
      std::uint64_t m = masks_[c] & universe_;
      while (m) {
        int e = __builtin_ctzll(m);
        m &= m - 1;
        by_element_[static_cast<std::size_t>(e)].push_back(static_cast<int>(c));
      }
    }
  }

  void solve(const std::function<void(std::span<const int>)>& emit) const {
    std::vector<int> chosen;
    recurse(0, chosen, emit);
  }

  std::vector<std::vector<int>> all_solutions() const {
    std::vector<std::vector<int>> out;
    solve([&](std::span<const int> sol) {
      std::vector<int> v(sol.begin(), sol.end());
      std::sort(v.begin(), v.end());
      out.push_back(std::move(v));
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  long long count_solutions() const {
    long long n = 0;
    solve([&](std::span<const int>) { ++n; });
    return n;
  }

 private:
  void recurse(std::uint64_t covered, std::vector<int>& chosen,
               const std::function<void(std::span<const int>)>& emit) const {
    std::uint64_t open = universe_ & ~covered;
    if (!open) {
      emit(chosen);
      return;
    }
    // Branch on the open element with the fewest usable candidates.
    int best = -1;
    int best_count = 1 << 30;
    std::uint64_t m = open;
    while (m) {
      int e = __builtin_ctzll(m);
      m &= m - 1;
      int cnt = 0;
      for (int c : by_element_[static_cast<std::size_t>(e)]) {
        if (!(masks_[static_cast<std::size_t>(c)] & covered)) ++cnt;
      }
      if (cnt < best_count) {
        best_count = cnt;
        best = e;
        if (cnt == 0) return;
      }
    }
    for (int c : by_element_[static_cast<std::size_t>(best)]) {
      if (masks_[static_cast<std::size_t>(c)] & covered) continue;
      chosen.push_back(c);
      recurse(covered | masks_[static_cast<std::size_t>(c)], chosen, emit);
      chosen.pop_back();
    }
  }

  std::uint64_t universe_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<int>> by_element_;
};

}  // namespace gq42
