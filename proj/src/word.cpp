#include "fibnim/word.hpp"

#include <algorithm>
#include <utility>

#include "fibnim/fib.hpp"

namespace fibnim {

std::string fib_word_concat(std::size_t length) {
    std::string prev = "x";
    std::string cur = "xy";
    if (length <= 1) {
        return prev.substr(0, length);
    }
    while (cur.size() < length) {
        std::string next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur.substr(0, length);
}

std::string fib_word_zeck(std::size_t length) {
    std::string w(length, 'x');
    for (std::size_t n = 0; n < length; ++n) {
        if (z1(n) == ExtNat{1}) {
            w[n] = 'y';
        }
    }
    return w;
}

std::string fib_word_morphism(std::size_t length) {
    std::string u = "x";
    while (u.size() < length) {
        // Parallel update x -> yz, y -> y; the result lives on (y, z).
        std::string v;
        v.reserve(u.size() * 2);
        for (char c : u) {
            if (c == 'x') {
                v += "yz";
            } else {
                v += 'y';
            }
        }
        // Read it back on (x, y).
        for (char& c : v) {
            c = (c == 'y') ? 'x' : 'y';
        }
        u = std::move(v);
    }
    u.resize(length);
    return u;
}

std::string describe(const WordSpec& spec) {
    if (const auto* s = std::get_if<SturmSpec>(&spec)) {
        return "w_" + std::to_string(s->level);
    }
    const auto& h = std::get<HybridSpec>(spec);
    std::string out = "T^" + std::to_string(-h.alpha) + "(w_" + std::to_string(h.p) + "), x=" + std::to_string(h.x);
    if (h.parity == SpecialParity::kPPlusAlpha) {
        out += " [p+alpha parity]";
    }
    return out;
}

// LetterStream --------------------------------------------------------------

LetterStream::LetterStream(std::vector<int> alphabet, Generator gen)
    : alphabet_(std::move(alphabet)), gen_(std::move(gen)) {}

void LetterStream::ensure(std::size_t length) {
    if (letters_.size() >= length) {
        return;
    }
    std::size_t target = std::max<std::size_t>({length, letters_.size() * 2, 64});
    auto grown = gen_(target);
    if (grown.size() < length || !std::equal(letters_.begin(), letters_.end(), grown.begin())) {
        throw std::logic_error("LetterStream: generator is not prefix-stable");
    }
    letters_ = std::move(grown);
}

int LetterStream::index_at(std::size_t i) {
    ensure(i + 1);
    return letters_[i];
}

std::uint64_t LetterStream::value_at(std::size_t i) { return fib(index_at(i)); }

std::vector<int> LetterStream::indices(std::size_t length) {
    ensure(length);
    return {letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(length)};
}

std::vector<std::uint64_t> LetterStream::values(std::size_t length) {
    ensure(length);
    std::vector<std::uint64_t> out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        out.push_back(fib(letters_[i]));
    }
    return out;
}

std::vector<std::uint64_t> LetterStream::partial_sums(std::uint64_t bound) {
    std::vector<std::uint64_t> sums{0};
    std::uint64_t s = 0;
    for (std::size_t i = 0;; ++i) {
        s += value_at(i);
        if (s > bound) {
            break;
        }
        sums.push_back(s);
    }
    return sums;
}

// Sturm words ---------------------------------------------------------------

LetterStream sturm_word(int level) {
    if (level < 1 || level + 1 > kMaxFibIndex) {
        throw std::out_of_range("sturm_word: level must be in [1, " + std::to_string(kMaxFibIndex - 1) + "]");
    }
    auto big = static_cast<std::uint8_t>(level + 1);
    auto small = static_cast<std::uint8_t>(level);
    return LetterStream({level + 1, level}, [big, small](std::size_t n) {
        auto abstract = fib_word_morphism(n);
        std::vector<std::uint8_t> out(n);
        std::transform(abstract.begin(), abstract.end(), out.begin(),
                       [&](char c) { return c == 'x' ? big : small; });
        return out;
    });
}

// Hybrid words --------------------------------------------------------------
//
// Starting from w_p (letters F_{p+1}, F_p), each step down in alpha rewrites
// every letter of the current word. With L the largest letter index of the
// current word:
//
//   generic step:  L -> (L-2, L-3, L-2)            (T3), others unchanged (T1)
//
// A step that produces level alpha is special when F_{p+alpha} < x <=
// F_{p+alpha+1}. Let "eligible" mean that the partial sum of the current word
// before the letter lies in PS(w_p).
//
//   alpha odd:     L -> (L-1, L-2) if eligible     (T2), else T3;
//                  other letters unchanged.
//   alpha even:    L-1 -> (L-2, L-3) if eligible   (T2), else unchanged;
//                  L -> T3; smallest letter unchanged.
//
// The branch is chosen by the parity of alpha. Branching on p+alpha instead
// gives the same words for even p (all the worked p = 8 examples) but
// misclassifies positions for odd p; SpecialParity::kPPlusAlpha keeps that
// variant reachable for comparison.
//
// Every rewrite preserves the letter's value, so partial sums of the current
// word stay partial sums of the next one and all levels share their totals.
// Since x <= F_{p-1}, at most one step is special and never the first one.

namespace {

void validate_hybrid(int p, int alpha, std::uint64_t x) {
    if (p < 3 || p + 1 > kMaxFibIndex) {
        throw WordRangeError("hybrid word: p must be in [3, " + std::to_string(kMaxFibIndex - 1) + "], got " +
                             std::to_string(p));
    }
    if (!(alpha < 0 && alpha > -p + 2)) {
        throw WordRangeError("hybrid word: alpha must satisfy -p+2 < alpha < 0, got alpha=" +
                             std::to_string(alpha) + " p=" + std::to_string(p));
    }
    if (x < 1 || x > fib(p - 1)) {
        throw WordRangeError("hybrid word: x must be in [1, F_{p-1}] = [1, " + std::to_string(fib(p - 1)) +
                             "], got " + std::to_string(x));
    }
}

std::vector<std::uint8_t> build_hybrid(int p, int alpha, std::uint64_t x, SpecialParity parity,
                                       std::size_t min_length) {
    std::vector<std::uint8_t> word;
    {
        auto abstract = fib_word_morphism(min_length);
        word.reserve(abstract.size());
        for (char c : abstract) {
            word.push_back(static_cast<std::uint8_t>(c == 'x' ? p + 1 : p));
        }
    }

    // PS(w_p), complete up to the common total of every level.
    std::vector<std::uint64_t> base_sums{0};
    base_sums.reserve(word.size() + 1);
    for (auto letter : word) {
        base_sums.push_back(base_sums.back() + fib(letter));
    }

    int largest = p + 1;
    for (int level = -1; level >= alpha; --level) {
        const int shifted = p + level;
        const bool special = fib(shifted) < x && x <= fib(shifted + 1);
        const bool odd = ((parity == SpecialParity::kAlpha ? level : shifted) % 2) != 0;
        const auto big = static_cast<std::uint8_t>(largest);
        const auto second = static_cast<std::uint8_t>(largest - 1);

        std::vector<std::uint8_t> next;
        next.reserve(word.size() * 2);
        std::uint64_t before = 0;
        for (auto letter : word) {
            const bool eligible = special && std::binary_search(base_sums.begin(), base_sums.end(), before);
            if (letter == big && !(special && odd && eligible)) {
                next.insert(next.end(), {static_cast<std::uint8_t>(letter - 2), static_cast<std::uint8_t>(letter - 3),
                                         static_cast<std::uint8_t>(letter - 2)});
            } else if ((letter == big && special && odd && eligible) ||
                       (letter == second && special && !odd && eligible)) {
                next.insert(next.end(), {static_cast<std::uint8_t>(letter - 1), static_cast<std::uint8_t>(letter - 2)});
            } else {
                next.push_back(letter);
            }
            before += fib(letter);
        }
        word = std::move(next);
        largest -= 1;
    }
    return word;
}

}  // namespace

LetterStream hybrid_word(int p, int alpha, std::uint64_t x, SpecialParity parity) {
    validate_hybrid(p, alpha, x);
    const int smallest = p + alpha - 1;
    return LetterStream({smallest + 2, smallest + 1, smallest},
                        [p, alpha, x, parity](std::size_t n) { return build_hybrid(p, alpha, x, parity, n); });
}

LetterStream make_stream(const WordSpec& spec) {
    if (const auto* s = std::get_if<SturmSpec>(&spec)) {
        return sturm_word(s->level);
    }
    const auto& h = std::get<HybridSpec>(spec);
    return hybrid_word(h.p, h.alpha, h.x, h.parity);
}

// Partial-sum sets ----------------------------------------------------------

bool PSSet::contains(std::uint64_t n) const {
    if (n > bound) {
        throw std::out_of_range("PSSet::contains: " + std::to_string(n) + " exceeds enumerated bound " +
                                std::to_string(bound));
    }
    return std::binary_search(members.begin(), members.end(), n);
}

PSSet ps_set(int level, std::uint64_t bound) {
    auto stream = sturm_word(level);
    return PSSet{SturmSpec{level}, bound, stream.partial_sums(bound)};
}

bool in_ps(int level, std::uint64_t n) {
    if (level < 1 || level + 1 > kMaxFibIndex) {
        throw std::out_of_range("in_ps: level out of range");
    }
    return z1(n) >= ExtNat{fib(level + 1)};
}

// Sigma ---------------------------------------------------------------------

SigmaParams sigma_params(std::uint64_t m, std::uint64_t r, WordReading reading) {
    if (m == 0 || r == 0) {
        throw std::invalid_argument("sigma: m and r must be positive");
    }
    SigmaParams out;
    out.p = fib_bracket(m);
    const int t = fib_bracket(r);
    out.alpha = t - out.p + 1;
    out.x = fib(out.p + 1) - m;

    if (out.alpha >= 0) {
        int level = out.p + out.alpha;
        if (reading.sturm == SturmReading::kMergeOneTwo && out.alpha > 1) {
            level -= 1;
        }
        out.word = SturmSpec{level};
        return out;
    }
    if (out.alpha <= -out.p + 2) {
        throw SigmaRangeError("sigma: alpha=" + std::to_string(out.alpha) + " is below the hybrid range for p=" +
                              std::to_string(out.p));
    }
    out.word = HybridSpec{out.p, out.alpha, out.x, reading.parity};
    return out;
}

PSSet sigma(std::uint64_t m, std::uint64_t r, std::uint64_t bound, WordReading reading) {
    auto params = sigma_params(m, r, reading);
    auto stream = make_stream(params.word);
    return PSSet{params.word, bound, stream.partial_sums(bound)};
}

}  // namespace fibnim
