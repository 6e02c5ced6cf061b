#pragma once

// Direct N/P recursion memoized on (sorted piles, min(bound, max pile),
// lambda). Shares no code with fibnim::Solver; used as the test oracle.

#include <algorithm>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace testing_oracle {

class NaiveSolver {
public:
    static constexpr std::uint64_t kInf = ~std::uint64_t{0};

    bool is_p(std::vector<std::uint64_t> piles, std::uint64_t bound, int lambda) {
        std::sort(piles.begin(), piles.end());
        const std::uint64_t top = piles.empty() ? 0 : piles.back();
        bound = std::min(bound, top);
        auto key = std::make_tuple(piles, bound, lambda);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        bool p = true;
        for (std::size_t i = 0; i < piles.size() && p; ++i) {
            for (std::uint64_t s = 1; s <= std::min(bound, piles[i]) && p; ++s) {
                auto child = piles;
                child[i] -= s;
                if (is_p(child, s * static_cast<std::uint64_t>(lambda), lambda)) {
                    p = false;
                }
            }
        }
        memo_.emplace(key, p);
        return p;
    }

    /// (pile size, take) pairs reaching a P position, deduplicated.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> winning(std::vector<std::uint64_t> piles, std::uint64_t bound,
                                                                 int lambda) {
        std::sort(piles.begin(), piles.end());
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        for (std::size_t i = 0; i < piles.size(); ++i) {
            if (i > 0 && piles[i] == piles[i - 1]) {
                continue;
            }
            for (std::uint64_t s = 1; s <= std::min(bound, piles[i]); ++s) {
                auto child = piles;
                child[i] -= s;
                if (is_p(child, s * static_cast<std::uint64_t>(lambda), lambda)) {
                    out.emplace_back(piles[i], s);
                }
            }
        }
        return out;
    }

private:
    std::map<std::tuple<std::vector<std::uint64_t>, std::uint64_t, int>, bool> memo_;
};

}  // namespace testing_oracle
