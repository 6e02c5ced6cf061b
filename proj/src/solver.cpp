#include "fibnim/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

namespace fibnim {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

SolverOptions solver_options_from_env() {
    SolverOptions opts;
    if (const char* env = std::getenv("FIBNIM_MEMO_BUDGET"); env != nullptr && *env != '\0') {
        try {
            opts.memo_budget = static_cast<std::size_t>(std::stoull(env));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("FIBNIM_MEMO_BUDGET is not a number: ") + env);
        }
    }
    return opts;
}

std::size_t Solver::KeyHash::operator()(const Key& k) const noexcept {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        lo |= static_cast<std::uint64_t>(k[i]) << (16 * i);
        hi |= static_cast<std::uint64_t>(k[i + 4]) << (16 * i);
    }
    return static_cast<std::size_t>(splitmix64(lo ^ splitmix64(hi)));
}

Solver::Solver(SolverOptions options) : options_(options) {}

Solver::Key Solver::make_key(std::span<const std::uint64_t> piles) {
    Key key{};
    std::size_t n = 0;
    std::vector<std::uint64_t> nonempty;
    for (auto p : piles) {
        if (p == 0) {
            continue;
        }
        if (p > kMaxPileSize) {
            throw std::out_of_range("solver: pile size " + std::to_string(p) + " exceeds " +
                                    std::to_string(kMaxPileSize));
        }
        nonempty.push_back(p);
    }
    if (nonempty.size() > kMaxPiles) {
        throw std::out_of_range("solver: at most " + std::to_string(kMaxPiles) + " nonempty piles supported");
    }
    std::sort(nonempty.begin(), nonempty.end());
    n = nonempty.size();
    for (std::size_t i = 0; i < n; ++i) {
        key[kMaxPiles - n + i] = static_cast<std::uint16_t>(nonempty[i]);
    }
    return key;
}

std::uint32_t Solver::threshold(const Key& root, Dynamic dynamic) {
    auto& memo = memo_for(dynamic);
    if (auto it = memo.find(root); it != memo.end()) {
        return it->second;
    }
    const std::uint64_t lambda = multiplier(dynamic);

    // Explicit stack; a frame resumes its (take, slot) scan after a missing
    // child has been solved.
    struct Frame {
        Key key;
        std::uint32_t take;
        std::uint32_t slot;
    };
    std::vector<Frame> stack;
    stack.push_back(Frame{root, 1, 0});

    while (!stack.empty()) {
        Frame frame = stack.back();
        const std::uint32_t max_pile = frame.key[kMaxPiles - 1];
        std::optional<Key> missing;
        std::uint32_t result = kInfThreshold;
        bool decided = false;

        for (; frame.take <= max_pile && !decided && !missing; ++frame.take, frame.slot = 0) {
            for (; frame.slot < kMaxPiles; ++frame.slot) {
                const std::uint16_t v = frame.key[frame.slot];
                if (v < frame.take || (frame.slot > 0 && frame.key[frame.slot - 1] == v)) {
                    continue;
                }
                Key child = frame.key;
                child[frame.slot] = static_cast<std::uint16_t>(v - frame.take);
                for (std::size_t i = frame.slot; i > 0 && child[i - 1] > child[i]; --i) {
                    std::swap(child[i - 1], child[i]);
                }
                auto it = memo.find(child);
                if (it == memo.end()) {
                    missing = child;
                    break;
                }
                if (lambda * frame.take < it->second) {
                    result = frame.take;
                    decided = true;
                    break;
                }
            }
            if (decided || missing) {
                break;
            }
        }

        if (missing) {
            stack.back().take = frame.take;
            stack.back().slot = frame.slot;
            stack.push_back(Frame{*missing, 1, 0});
            continue;
        }
        if (memo.size() >= options_.memo_budget) {
            throw BudgetExceeded("solver memo budget of " + std::to_string(options_.memo_budget) +
                                 " entries exhausted (set FIBNIM_MEMO_BUDGET to raise it)");
        }
        memo.emplace(frame.key, result);
        stack.pop_back();
    }
    return memo.at(root);
}

bool Solver::is_p_locked(const Position& pos) {
    const auto bound = pos.canonical_bound();
    if (bound == 0) {
        return true;
    }
    return bound < threshold(make_key(pos.piles), pos.dynamic);
}

Outcome Solver::outcome(const Position& pos) {
    std::lock_guard lock(mu_);
    return is_p_locked(pos) ? Outcome::kP : Outcome::kN;
}

std::vector<Move> Solver::winning_moves(const Position& pos) {
    std::lock_guard lock(mu_);
    std::vector<Move> wins;
    if (is_p_locked(pos)) {
        return wins;
    }
    for (const auto& m : legal_moves(pos)) {
        if (is_p_locked(pos.after(m))) {
            wins.push_back(m);
        }
    }
    return wins;
}

ExtNat Solver::min_winning_take(std::span<const std::uint64_t> piles, Dynamic dynamic) {
    std::lock_guard lock(mu_);
    auto t = threshold(make_key(piles), dynamic);
    return t == kInfThreshold ? kInf : ExtNat{t};
}

std::size_t Solver::memo_size() const {
    std::lock_guard lock(mu_);
    return fib_memo_.size() + pow2_memo_.size();
}

void Solver::clear() {
    std::lock_guard lock(mu_);
    fib_memo_.clear();
    pow2_memo_.clear();
}

// Complementary values ------------------------------------------------------

ComplementResult complementary_value(Solver& solver, std::span<const std::uint64_t> piles, std::uint64_t cap) {
    std::uint64_t top = 0;
    for (auto p : piles) {
        top = std::max(top, p);
    }
    if (cap < top) {
        throw std::invalid_argument("complementary_value: cap " + std::to_string(cap) + " is below the largest pile " +
                                    std::to_string(top));
    }
    std::vector<std::uint64_t> with_b(piles.begin(), piles.end());
    with_b.push_back(0);
    for (std::uint64_t b = 0; b <= cap; ++b) {
        with_b.back() = b;
        // (piles, b; inf) is P iff no finite bound makes it N.
        if (solver.min_winning_take(with_b, Dynamic::kFibonacci).is_inf()) {
            return {true, b};
        }
    }
    return {false, cap};
}

std::string TableEntry::to_string() const {
    switch (kind) {
        case Kind::kValue: return std::to_string(value);
        case Kind::kNoComplement: return "inf";
        case Kind::kUnknown: return "?>" + std::to_string(value);
    }
    return "?";
}

CompTable comp_table(Solver& solver, std::uint64_t max_n, std::uint64_t cap) {
    CompTable table{max_n, cap, {}};
    table.cells.resize((max_n + 1) * (max_n + 1));
    for (std::uint64_t i = 0; i <= max_n; ++i) {
        for (std::uint64_t j = 0; j <= max_n; ++j) {
            auto& cell = table.cells[i * (max_n + 1) + j];
            if ((i == 3 && j == 4) || (i == 4 && j == 3)) {
                cell = {TableEntry::Kind::kNoComplement, 0};
                continue;
            }
            if (j < i) {
                cell = table.at(j, i);
                continue;
            }
            const std::uint64_t pair[] = {i, j};
            auto found = complementary_value(solver, pair, std::max(cap, j));
            cell = found.found ? TableEntry{TableEntry::Kind::kValue, found.value}
                               : TableEntry{TableEntry::Kind::kUnknown, found.value};
        }
    }
    return table;
}

Move engine_move(Solver& solver, const Position& pos) {
    auto moves = legal_moves(pos);
    if (moves.empty()) {
        throw GameOver("no legal move from " + pos.to_string());
    }
    auto wins = solver.winning_moves(pos);
    if (!wins.empty()) {
        return wins.front();
    }
    const std::size_t largest = pos.piles.size() - 1;
    return Move{pos.index_of(pos.piles[largest]), pos.piles[largest], 1};
}

}  // namespace fibnim
