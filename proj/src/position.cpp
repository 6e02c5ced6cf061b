#include "fibnim/position.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace fibnim {

Dynamic dynamic_from_int(int lambda) {
    switch (lambda) {
        case 1: return Dynamic::kPowerOfTwo;
        case 2: return Dynamic::kFibonacci;
        default: throw std::invalid_argument("dynamic must be 1 (power-of-two) or 2 (Fibonacci), got " +
                                             std::to_string(lambda));
    }
}

std::string to_string(const Move& m) {
    return "take " + std::to_string(m.take) + " from pile " + std::to_string(m.pile_size);
}

Position Position::make(std::vector<std::uint64_t> piles, ExtNat bound, Dynamic dynamic) {
    std::sort(piles.begin(), piles.end());
    return Position{std::move(piles), bound, dynamic};
}

std::uint64_t Position::max_pile() const { return piles.empty() ? 0 : piles.back(); }

std::uint64_t Position::total() const {
    std::uint64_t t = 0;
    for (auto p : piles) {
        t += p;
    }
    return t;
}

std::uint64_t Position::canonical_bound() const {
    const auto top = max_pile();
    return bound.is_inf() ? top : std::min(bound.value(), top);
}

Position Position::canonical() const { return Position{piles, ExtNat{canonical_bound()}, dynamic}; }

std::uint64_t Position::max_take(std::size_t pile_index) const {
    if (pile_index >= piles.size()) {
        return 0;
    }
    return std::min(piles[pile_index], canonical_bound());
}

bool Position::is_legal(const Move& m) const {
    return m.pile_index < piles.size() && piles[m.pile_index] == m.pile_size && m.take >= 1 &&
           m.take <= max_take(m.pile_index);
}

Position Position::after(const Move& m) const {
    if (!is_legal(m)) {
        throw std::invalid_argument("illegal move: " + fibnim::to_string(m) + " in " + to_string());
    }
    auto next = piles;
    next[m.pile_index] -= m.take;
    return make(std::move(next), ExtNat{multiplier(dynamic) * m.take}, dynamic);
}

std::size_t Position::index_of(std::uint64_t size) const {
    auto it = std::lower_bound(piles.begin(), piles.end(), size);
    if (it == piles.end() || *it != size) {
        return piles.size();
    }
    return static_cast<std::size_t>(it - piles.begin());
}

std::string Position::to_string() const {
    std::ostringstream os;
    os << '(' << join_piles(piles) << "; " << bound.to_string() << ')';
    if (dynamic == Dynamic::kPowerOfTwo) {
        os << " [pow2]";
    }
    return os.str();
}

std::vector<Move> legal_moves(const Position& pos) {
    std::vector<Move> moves;
    const auto cap = pos.canonical_bound();
    for (std::size_t i = 0; i < pos.piles.size(); ++i) {
        if (i > 0 && pos.piles[i] == pos.piles[i - 1]) {
            continue;
        }
        const auto limit = std::min(cap, pos.piles[i]);
        for (std::uint64_t s = 1; s <= limit; ++s) {
            moves.push_back(Move{i, pos.piles[i], s});
        }
    }
    return moves;
}

std::vector<std::uint64_t> parse_piles(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        auto first = token.find_first_not_of(" \t");
        auto last = token.find_last_not_of(" \t");
        if (first == std::string::npos) {
            throw std::invalid_argument("empty pile in '" + text + "'");
        }
        token = token.substr(first, last - first + 1);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw std::invalid_argument("bad pile size '" + token + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw std::invalid_argument("no piles given");
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string join_piles(const std::vector<std::uint64_t>& piles) {
    std::string s;
    for (std::size_t i = 0; i < piles.size(); ++i) {
        if (i > 0) {
            s += ',';
        }
        s += std::to_string(piles[i]);
    }
    return s;
}

}  // namespace fibnim
