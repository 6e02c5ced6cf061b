#include "fibnim/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fibnim/classifiers.hpp"
#include "fibnim/fib.hpp"
#include "fibnim/reference_data.hpp"
#include "fibnim/word.hpp"

namespace fibnim {
namespace {

// Counts cases and keeps the first few failures for the report.
class Tally {
public:
    void ok() { ++checked_; }

    void fail(const std::string& what) {
        ++checked_;
        ++failed_;
        if (samples_.size() < 3) {
            samples_.push_back(what);
        }
    }

    void expect(bool cond, const std::function<std::string()>& what) {
        if (cond) {
            ok();
        } else {
            fail(what());
        }
    }

    Check finish(std::string name) const {
        Check c{std::move(name), failed_ == 0, {}};
        std::ostringstream os;
        os << (checked_ - failed_) << "/" << checked_ << " ok";
        for (const auto& s : samples_) {
            os << "; " << s;
        }
        c.detail = os.str();
        return c;
    }

private:
    std::size_t checked_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> samples_;
};

std::string pos_str(std::vector<std::uint64_t> piles, ExtNat r) { return Position::make(std::move(piles), r).to_string(); }

// Sets built from a(n) = floor(phi n) and b(n) = floor(phi^2 n), n >= 1.
struct BeattySets {
    std::set<std::uint64_t> a, b, aa, ab, ba, bb;

    explicit BeattySets(std::uint64_t limit) {
        for (std::uint64_t n = 1; beatty_lower(n) <= limit; ++n) {
            a.insert(beatty_lower(n));
        }
        for (std::uint64_t n = 1; beatty_upper(n) <= limit; ++n) {
            b.insert(beatty_upper(n));
        }
        for (auto v : a) {
            if (beatty_lower(v) <= limit) aa.insert(beatty_lower(v));
            if (beatty_upper(v) <= limit) ba.insert(beatty_upper(v));
        }
        for (auto v : b) {
            if (beatty_lower(v) <= limit) ab.insert(beatty_lower(v));
            if (beatty_upper(v) <= limit) bb.insert(beatty_upper(v));
        }
    }
};

bool in_shifted(const std::set<std::uint64_t>& s, std::uint64_t n, std::uint64_t shift) {
    return s.contains(n + shift);
}

// Suites ----------------------------------------------------------------------

void suite_zeckendorf(SuiteReport& rep, Solver&, const VerifyOptions& o) {
    // Every set of nonconsecutive indices >= 2 with F_i <= zeck_subset_max,
    // grouped by sum.
    std::map<std::uint64_t, std::vector<std::vector<int>>> by_sum;
    int top = 2;
    while (fib(top + 1) <= o.zeck_subset_max) {
        ++top;
    }
    std::vector<int> chosen;
    std::function<void(int, std::uint64_t)> walk = [&](int next, std::uint64_t sum) {
        if (sum > o.zeck_subset_max) {
            return;
        }
        by_sum[sum].push_back(chosen);
        for (int i = next; i <= top; ++i) {
            chosen.push_back(i);
            walk(i + 2, sum + fib(i));
            chosen.pop_back();
        }
    };
    walk(2, 0);

    Tally unique;
    for (std::uint64_t n = 0; n <= o.zeck_subset_max; ++n) {
        const auto& reps = by_sum[n];
        unique.expect(reps.size() == 1 && reps.front() == zeckendorf(n).indices, [&] {
            return "n=" + std::to_string(n) + " has " + std::to_string(reps.size()) + " representations";
        });
    }
    rep.checks.push_back(unique.finish("unique nonconsecutive representation, n <= " +
                                       std::to_string(o.zeck_subset_max)));

    Tally valid;
    for (std::uint64_t n = 0; n <= o.zeck_max; ++n) {
        const auto z = zeckendorf(n);
        valid.expect(z.is_valid() && z.sum() == n && (n == 0) == z.terms.empty(),
                     [&] { return "n=" + std::to_string(n); });
    }
    rep.checks.push_back(valid.finish("valid and round-trips, n <= " + std::to_string(o.zeck_max)));

    Tally bracket;
    for (std::uint64_t r = 1; r <= o.zeck_max; ++r) {
        const int t = fib_bracket(r);
        bracket.expect(t >= 2 && fib(t) <= r && r < fib(t + 1), [&] { return "r=" + std::to_string(r); });
    }
    rep.checks.push_back(bracket.finish("fib_bracket brackets r, r <= " + std::to_string(o.zeck_max)));
}

void suite_small_take(SuiteReport& rep, Solver&, const VerifyOptions& o) {
    Tally t;
    for (std::uint64_t n = 2; n <= o.small_take_max; ++n) {
        const std::uint64_t first = z1(n).value();
        for (std::uint64_t k = 1; k < first; ++k) {
            t.expect(z1(n - k) <= ExtNat{2 * k},
                     [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); });
        }
    }
    rep.checks.push_back(t.finish("z1(n-k) <= 2k for 1 <= k < z1(n), n <= " + std::to_string(o.small_take_max)));
}

void suite_telescoping(SuiteReport& rep, Solver&, const VerifyOptions& o) {
    Tally t;
    for (int a = 2; a <= o.telescope_max_t; ++a) {
        for (int s = 1; s <= o.telescope_max_s; ++s) {
            t.expect(fib_run_sum(a, s) == fib(a + s + 1) - fib(a + 1),
                     [&] { return "t=" + std::to_string(a) + " s=" + std::to_string(s); });
        }
    }
    rep.checks.push_back(t.finish("F_t + ... + F_{t+s-1} = F_{t+s+1} - F_{t+1}"));
}

void suite_beatty(SuiteReport& rep, Solver&, const VerifyOptions& o) {
    const std::uint64_t n_max = o.beatty_max;
    const BeattySets s(n_max + 8);

    Tally partition;
    Tally floors;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        int hits = 0;
        for (auto c : {BeattyClass::kB2, BeattyClass::kAB2, BeattyClass::kAB1, BeattyClass::kBB1}) {
            hits += in_beatty_class(n, c) ? 1 : 0;
        }
        partition.expect(hits == 1, [&] { return "n=" + std::to_string(n) + " in " + std::to_string(hits) + " classes"; });

        const bool ok = in_beatty_class(n, BeattyClass::kB2) == in_shifted(s.b, n, 2) &&
                        in_beatty_class(n, BeattyClass::kAB2) == in_shifted(s.ab, n, 2) &&
                        in_beatty_class(n, BeattyClass::kAB1) == in_shifted(s.ab, n, 1) &&
                        in_beatty_class(n, BeattyClass::kBB1) == in_shifted(s.bb, n, 1);
        floors.expect(ok, [&] { return "n=" + std::to_string(n); });
    }
    rep.checks.push_back(partition.finish("four classes partition 0.." + std::to_string(n_max)));
    rep.checks.push_back(floors.finish("z1 predicates match floor-function sets"));

    // Shifting every class up by one.
    Tally shift;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        shift.expect(in_shifted(s.b, n, 1) == s.aa.contains(n) && in_shifted(s.ab, n, 1) == s.ba.contains(n),
                     [&] { return "n=" + std::to_string(n); });
    }
    rep.checks.push_back(shift.finish("B-1 = AA and AB-1 = BA"));

    Tally split;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const bool in_a = s.a.contains(n);
        const bool in_b = s.b.contains(n);
        split.expect(in_a != in_b && (!in_a || s.aa.contains(n) != s.ab.contains(n)) &&
                         (!in_b || s.ba.contains(n) != s.bb.contains(n)),
                     [&] { return "n=" + std::to_string(n); });
    }
    rep.checks.push_back(split.finish("A, B partition the positive integers; AA/AB split A; BA/BB split B"));
}

void suite_words(SuiteReport& rep, Solver&, const VerifyOptions& o) {
    const auto concat = fib_word_concat(o.word_length);
    const auto zeck = fib_word_zeck(o.word_length);
    const auto morph = fib_word_morphism(o.word_length);
    Tally agree;
    for (std::size_t i = 0; i < o.word_length; ++i) {
        agree.expect(concat[i] == zeck[i] && zeck[i] == morph[i], [&] { return "letter " + std::to_string(i); });
    }
    rep.checks.push_back(agree.finish("three constructions agree on " + std::to_string(o.word_length) + " letters"));

    const std::string expected = reference::kFibWordPrefix;
    rep.checks.push_back(Check{"reference prefix " + expected, concat.substr(0, expected.size()) == expected,
                               concat.substr(0, expected.size())});

    Tally stable;
    for (int level = 1; level <= 6; ++level) {
        auto s = sturm_word(level);
        auto first = s.indices(500);
        stable.expect(s.indices(1000).size() == 1000 && std::equal(first.begin(), first.end(), s.indices(1000).begin()),
                      [&] { return "w_" + std::to_string(level); });
    }
    for (int p = 3; p <= 9; ++p) {
        for (int alpha = -1; alpha > -p + 2; --alpha) {
            for (std::uint64_t x = 1; x <= fib(p - 1); ++x) {
                auto h = hybrid_word(p, alpha, x);
                auto first = h.indices(300);
                auto longer = h.indices(600);
                stable.expect(std::equal(first.begin(), first.end(), longer.begin()), [&] {
                    return "p=" + std::to_string(p) + " alpha=" + std::to_string(alpha) + " x=" + std::to_string(x);
                });
            }
        }
    }
    rep.checks.push_back(stable.finish("extending a stream keeps its prefix"));
}

std::vector<std::vector<bool>> ps_membership(int max_level, std::uint64_t bound) {
    std::vector<std::vector<bool>> member(max_level + 3, std::vector<bool>(bound + 1, false));
    for (int a = 1; a <= max_level + 2; ++a) {
        for (auto v : ps_set(a, bound).members) {
            member[a][v] = true;
        }
    }
    return member;
}

void suite_ps_nesting(SuiteReport& rep, Solver&, const VerifyOptions& o) {
    const auto member = ps_membership(o.ps_max_level, o.ps_bound);
    Tally t;
    for (int a = 1; a <= o.ps_max_level; ++a) {
        for (int b = 1; b <= a; ++b) {
            bool ok = true;
            for (std::uint64_t n = 0; n <= o.ps_bound && ok; ++n) {
                ok = !member[a][n] || member[b][n];
            }
            t.expect(ok, [&] { return "PS(w_" + std::to_string(a) + ") not in PS(w_" + std::to_string(b) + ")"; });
        }
    }
    rep.checks.push_back(t.finish("PS(w_a) subset of PS(w_b) for b <= a <= " + std::to_string(o.ps_max_level)));
}

void suite_ps_shift(SuiteReport& rep, Solver&, const VerifyOptions& o) {
    const auto member = ps_membership(o.ps_max_level, o.ps_bound);
    Tally t;
    for (int a = 1; a <= o.ps_max_level; ++a) {
        for (std::uint64_t n = 0; n <= o.ps_bound; ++n) {
            if (member[a][n] && !member[a + 1][n]) {
                const std::uint64_t f = fib(a + 1);
                t.expect(n >= f && member[a + 2][n - f],
                         [&] { return "a=" + std::to_string(a) + " n=" + std::to_string(n); });
            }
        }
    }
    rep.checks.push_back(t.finish("n in PS(w_a) minus PS(w_{a+1}) implies n - F_{a+1} in PS(w_{a+2})"));
}

void suite_membership(SuiteReport& rep, Solver&, const VerifyOptions& o) {
    const auto member = ps_membership(o.ps_max_level, o.ps_bound);
    Tally t;
    for (int a = 1; a <= o.ps_max_level; ++a) {
        for (std::uint64_t n = 0; n <= o.ps_bound; ++n) {
            t.expect(in_ps(a, n) == member[a][n], [&] { return "a=" + std::to_string(a) + " n=" + std::to_string(n); });
        }
    }
    rep.checks.push_back(t.finish("Zeckendorf membership test matches enumeration"));
}

void suite_hybrid_examples(SuiteReport& rep, Solver&, const VerifyOptions&) {
    for (const auto& ex : reference::kHybridExamples) {
        const auto params = sigma_params(ex.m, ex.r);
        auto stream = make_stream(params.word);
        const auto got = stream.values(ex.letters.size());
        std::ostringstream os;
        for (auto v : got) {
            os << v << ' ';
        }
        rep.checks.push_back(Check{"m=" + std::to_string(ex.m) + " r=" + std::to_string(ex.r) + " " +
                                       describe(params.word),
                                   got == ex.letters, os.str()});
    }
}

void suite_smallest_letter(SuiteReport& rep, Solver&, const VerifyOptions&) {
    Tally t;
    for (int p = 3; p <= 12; ++p) {
        for (int alpha = -1; alpha > -p + 2; --alpha) {
            for (std::uint64_t x = 1; x <= fib(p - 1); ++x) {
                auto h = hybrid_word(p, alpha, x);
                const auto letters = h.indices(400);
                const auto [lo, hi] = std::minmax_element(letters.begin(), letters.end());
                t.expect(*lo == p + alpha - 1 && *hi == p + alpha + 1, [&] {
                    return "p=" + std::to_string(p) + " alpha=" + std::to_string(alpha) + " x=" + std::to_string(x);
                });
            }
        }
    }
    rep.checks.push_back(t.finish("letters of T^{-alpha}(w_p) span F_{p+alpha-1}..F_{p+alpha+1}"));
}

void suite_one_pile(SuiteReport& rep, Solver& solver, const VerifyOptions& o) {
    Tally oracle;
    Tally word;
    for (std::uint64_t n = 0; n <= o.one_pile_max_n; ++n) {
        std::vector<ExtNat> bounds;
        for (std::uint64_t r = 1; r <= n + 1; ++r) {
            bounds.emplace_back(r);
        }
        bounds.push_back(kInf);
        for (const auto& r : bounds) {
            const auto pos = Position::make({n}, r);
            const auto v = classify_one_pile(n, r);
            const auto truth = solver.outcome(pos);
            bool ok = v.outcome == truth;
            if (ok && truth == Outcome::kN) {
                const auto wins = solver.winning_moves(pos);
                ok = std::any_of(wins.begin(), wins.end(), [&](const Move& m) { return m.take == *v.winning_take; });
            }
            oracle.expect(ok, [&] { return pos.to_string(); });
            word.expect(v.word_form_agrees, [&] { return pos.to_string(); });
        }
    }
    rep.checks.push_back(oracle.finish("classifier and winning take match the solver, n <= " +
                                       std::to_string(o.one_pile_max_n)));
    rep.checks.push_back(word.finish("word form agrees on the same grid"));

    Tally classic;
    for (std::uint64_t n = 1; n <= o.one_pile_max_n; ++n) {
        const bool second_wins = solver.outcome(classic_position(n)) == Outcome::kP;
        classic.expect(second_wins == (classify_classic(n) == ClassicWinner::kSecondPlayer),
                       [&] { return "n=" + std::to_string(n); });
    }
    rep.checks.push_back(classic.finish("classic game: second player wins iff n is Fibonacci"));

    // Word and Zeckendorf tests on a larger grid, with no solver involved.
    Tally consistent;
    std::map<int, std::vector<bool>> member;
    for (std::uint64_t r = 1; r <= o.consistency_max_r; ++r) {
        const int t = fib_bracket(r);
        auto& m = member[t];
        if (m.empty()) {
            m.assign(o.consistency_max_n + 1, false);
            for (auto v : ps_set(t, o.consistency_max_n).members) {
                m[v] = true;
            }
        }
        for (std::uint64_t n = 0; n <= o.consistency_max_n; ++n) {
            const bool p_zeck = z1(n) > ExtNat{r};
            if (p_zeck == m[n]) {
                consistent.ok();
            } else {
                consistent.fail(pos_str({n}, ExtNat{r}));
            }
        }
    }
    rep.checks.push_back(consistent.finish("z1(n) > r iff n in PS(w_t), n <= " + std::to_string(o.consistency_max_n) +
                                           ", r <= " + std::to_string(o.consistency_max_r)));
}

void suite_two_pile(SuiteReport& rep, Solver& solver, const VerifyOptions& o) {
    Tally zeck;
    Tally word;
    Tally moves;
    for (std::uint64_t m = 0; m <= o.two_pile_max_m; ++m) {
        for (std::uint64_t k = 0; k <= o.two_pile_max_k; ++k) {
            for (std::uint64_t r = 1; r <= o.two_pile_max_r; ++r) {
                const auto pos = Position::make({m, m + k}, ExtNat{r});
                const auto truth = solver.outcome(pos);
                const auto z = classify_two_pile_zeck(m, k, r);
                zeck.expect(z.outcome == truth,
                            [&] { return pos.to_string() + " case " + to_string(z.which.tag); });
                word.expect(classify_two_pile_word(m, k, r) == z.outcome, [&] { return pos.to_string(); });

                if (truth == Outcome::kN) {
                    const auto mv = suggest_move_two_pile(m, k, r);
                    bool ok = mv.has_value();
                    if (ok) {
                        // Index 0 is the m pile, 1 the m+k pile.
                        const std::uint64_t size = mv->pile_index == 0 ? m : m + k;
                        const Move real{pos.index_of(size), size, mv->take};
                        ok = pos.is_legal(real) && solver.outcome(pos.after(real)) == Outcome::kP;
                    }
                    moves.expect(ok, [&] { return pos.to_string(); });
                }
            }
        }
    }
    const std::string grid = "m <= " + std::to_string(o.two_pile_max_m) + ", k <= " + std::to_string(o.two_pile_max_k) +
                             ", r <= " + std::to_string(o.two_pile_max_r);
    rep.checks.push_back(zeck.finish("Zeckendorf classifier matches the solver, " + grid));
    rep.checks.push_back(word.finish("word classifier matches the Zeckendorf classifier"));
    rep.checks.push_back(moves.finish("suggested move reaches a P position"));
}

void suite_word_reading(SuiteReport& rep, Solver&, const VerifyOptions& o) {
    struct Variant {
        const char* name;
        WordReading reading;
        bool expect_agreement;
    };
    const Variant variants[] = {
        {"chosen reading", {SturmReading::kMergeOneTwo, SpecialParity::kAlpha}, true},
        {"every alpha >= 0 shifts the level", {SturmReading::kShiftEveryLevel, SpecialParity::kAlpha}, false},
        {"special branch on parity of p+alpha", {SturmReading::kMergeOneTwo, SpecialParity::kPPlusAlpha}, false},
    };
    for (const auto& v : variants) {
        std::size_t bad = 0;
        std::size_t total = 0;
        std::string first;
        for (std::uint64_t m = 1; m <= o.two_pile_max_m; ++m) {
            for (std::uint64_t k = 0; k <= o.two_pile_max_k; ++k) {
                for (std::uint64_t r = 1; r <= o.two_pile_max_r; ++r) {
                    ++total;
                    if (classify_two_pile_word(m, k, r, v.reading) != classify_two_pile_zeck(m, k, r).outcome) {
                        if (bad++ == 0) {
                            first = pos_str({m, m + k}, ExtNat{r});
                        }
                    }
                }
            }
        }
        const bool agrees = bad == 0;
        std::string detail = std::to_string(bad) + "/" + std::to_string(total) + " disagreements";
        if (!first.empty()) {
            detail += "; first " + first;
        }
        rep.checks.push_back(Check{std::string(v.name) + (v.expect_agreement ? " agrees" : " is rejected"),
                                   agrees == v.expect_agreement, detail});
    }
}

void suite_complement_table(SuiteReport& rep, Solver& solver, const VerifyOptions& o) {
    const std::uint64_t n = std::min<std::uint64_t>(o.table_max_n, reference::kTableSize - 1);
    const auto table = comp_table(solver, n, o.table_cap);
    Tally t;
    for (std::uint64_t i = 0; i <= n; ++i) {
        for (std::uint64_t j = 0; j <= n; ++j) {
            const int want = reference::kComplementTable[i][j];
            const auto& got = table.at(i, j);
            const bool ok = want < 0 ? got.kind == TableEntry::Kind::kNoComplement
                                     : got.kind == TableEntry::Kind::kValue && got.value == static_cast<std::uint64_t>(want);
            t.expect(ok, [&] {
                return "(" + std::to_string(i) + "," + std::to_string(j) + ") got " + got.to_string() + " want " +
                       (want < 0 ? std::string("inf") : std::to_string(want));
            });
        }
    }
    rep.checks.push_back(t.finish("reference complementary values, cap " + std::to_string(o.table_cap)));
}

void suite_three_four(SuiteReport& rep, Solver& solver, const VerifyOptions& o) {
    Tally n_pos;
    Tally successor;
    for (std::uint64_t n = 0; n <= o.three_four_max_n; ++n) {
        const auto pos = Position::make({3, 4, n}, kInf);
        n_pos.expect(solver.outcome(pos) == Outcome::kN, [&] { return pos.to_string(); });
        const auto v = classify_34n(n);
        successor.expect(solver.outcome(v.successor) == Outcome::kP,
                         [&] { return pos.to_string() + " -> " + v.successor.to_string(); });
    }
    rep.checks.push_back(n_pos.finish("(3,4,n;inf) is N for n <= " + std::to_string(o.three_four_max_n)));
    rep.checks.push_back(successor.finish("recommended successor is P"));

    VerifyOptions b = o;
    b.beatty_max = std::max<std::uint64_t>(o.beatty_max, 1000);
    suite_beatty(rep, solver, b);
}

void suite_families(SuiteReport& rep, Solver& solver, const VerifyOptions& o) {
    const BeattySets s(o.families_max_n + 8);
    using Pred = std::function<bool(std::uint64_t)>;
    const Pred b2 = [](std::uint64_t z) { return in_beatty_class(z, BeattyClass::kB2); };
    const Pred ab2 = [](std::uint64_t z) { return in_beatty_class(z, BeattyClass::kAB2); };
    const Pred ab1 = [](std::uint64_t z) { return in_beatty_class(z, BeattyClass::kAB1); };
    const Pred bb1 = [](std::uint64_t z) { return in_beatty_class(z, BeattyClass::kBB1); };
    const Pred b1 = [&](std::uint64_t z) { return in_shifted(s.b, z, 1); };
    const Pred bb3 = [&](std::uint64_t z) { return in_shifted(s.bb, z, 3); };
    const Pred bb4 = [&](std::uint64_t z) { return in_shifted(s.bb, z, 4); };
    const Pred ab = [&](std::uint64_t z) { return s.ab.contains(z); };
    const Pred bb = [&](std::uint64_t z) { return s.bb.contains(z); };

    struct Family {
        std::uint64_t p1, p2, r;
        const Pred* in_class;
        const char* name;
    };
    const Family families[] = {
        {3, 3, 2, &b2, "(3,3,z;2), z in B-2"},   {2, 4, 2, &ab2, "(2,4,z;2), z in AB-2"},
        {1, 4, 4, &ab1, "(1,4,z;4), z in AB-1"}, {0, 4, 6, &bb1, "(0,4,z;6), z in BB-1"},
        {0, 1, 2, &b1, "(0,1,z;2), z in B-1"},   {0, 1, 6, &bb4, "(0,1,z;6), z in BB-4"},
        {0, 2, 4, &ab1, "(0,2,z;4), z in AB-1"}, {0, 3, 2, &ab, "(0,3,z;2), z in AB"},
        {1, 1, 2, &b2, "(1,1,z;2), z in B-2"},   {1, 1, 4, &bb, "(1,1,z;4), z in BB"},
        {1, 2, 2, &bb1, "(1,2,z;2), z in BB-1"}, {1, 3, 2, &ab2, "(1,3,z;2), z in AB-2"},
        {2, 2, 2, &b2, "(2,2,z;2), z in B-2"},   {2, 2, 4, &bb, "(2,2,z;4), z in BB"},
        {2, 3, 2, &ab1, "(2,3,z;2), z in AB-1"},
    };
    for (const auto& f : families) {
        Tally t;
        for (std::uint64_t z = 0; z <= o.families_max_n; ++z) {
            if (!(*f.in_class)(z)) {
                continue;
            }
            const auto pos = Position::make({f.p1, f.p2, z}, ExtNat{f.r});
            t.expect(solver.outcome(pos) == Outcome::kP, [&] { return pos.to_string() + " is N"; });
        }
        rep.checks.push_back(t.finish(std::string(f.name) + " is P, z <= " + std::to_string(o.families_max_n)));
    }

    // BB-3 is one short of the shift that (0,1,z;r) in P iff z1(z-1) > r
    // gives; every BB-3 member is N.
    Tally off_by_one;
    for (std::uint64_t z = 0; z <= o.families_max_n; ++z) {
        if (bb3(z)) {
            const auto pos = Position::make({0, 1, z}, ExtNat{6});
            off_by_one.expect(solver.outcome(pos) == Outcome::kN, [&] { return pos.to_string() + " is P"; });
        }
    }
    rep.checks.push_back(off_by_one.finish("(0,1,z;6) with z in BB-3 is N (the family needs BB-4)"));
}

void suite_large_complements(SuiteReport& rep, Solver& solver, const VerifyOptions& o) {
    for (const auto& lc : reference::kLargeComplements) {
        std::vector<std::uint64_t> piles(lc.piles.begin(), lc.piles.end());
        const auto pos = Position::make(piles, kInf);
        if (lc.long_run && !o.long_run) {
            rep.checks.push_back(Check{pos.to_string() + " is P", true, "skipped (needs --long)"});
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        const bool p = solver.outcome(pos) == Outcome::kP;
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream os;
        os.precision(3);
        os << (p ? "P" : "N") << " in " << secs << " s, memo " << solver.memo_size();
        rep.checks.push_back(Check{pos.to_string() + " is P", p, os.str()});
    }
}

void suite_pow2(SuiteReport& rep, Solver& solver, const VerifyOptions& o) {
    Tally classifier;
    Tally nim;
    Tally move;
    std::vector<std::uint64_t> piles;
    std::function<void(std::uint64_t)> walk = [&](std::uint64_t from) {
        if (!piles.empty()) {
            std::vector<ExtNat> bounds;
            for (std::uint64_t r = 1; r <= o.pow2_max_r; ++r) {
                bounds.emplace_back(r);
            }
            bounds.push_back(kInf);
            for (const auto& r : bounds) {
                const auto pos = Position::make(piles, r, Dynamic::kPowerOfTwo);
                const auto truth = solver.outcome(pos);
                const auto v = classify_pow2(piles, r);
                classifier.expect(v.outcome == truth, [&] { return pos.to_string(); });
                if (r.is_inf()) {
                    nim.expect((truth == Outcome::kP) == (nim_sum(piles) == 0), [&] { return pos.to_string(); });
                }
                if (v.move) {
                    move.expect(pos.is_legal(*v.move) && solver.outcome(pos.after(*v.move)) == Outcome::kP,
                                [&] { return pos.to_string(); });
                }
            }
        }
        if (piles.size() == o.pow2_max_piles) {
            return;
        }
        for (std::uint64_t p = from; p <= o.pow2_max_pile; ++p) {
            piles.push_back(p);
            walk(p);
            piles.pop_back();
        }
    };
    walk(0);
    const std::string grid = "up to " + std::to_string(o.pow2_max_piles) + " piles <= " +
                             std::to_string(o.pow2_max_pile) + ", r <= " + std::to_string(o.pow2_max_r) + " and inf";
    rep.checks.push_back(classifier.finish("sb(nim sum) > r classifier matches the solver, " + grid));
    rep.checks.push_back(nim.finish("with r = inf, P iff nim sum is 0"));
    rep.checks.push_back(move.finish("classifier move reaches a P position"));
}

void suite_complement_unique(SuiteReport& rep, Solver& solver, const VerifyOptions& o) {
    Tally t;
    for (std::uint64_t i = 0; i <= o.unique_max_pile; ++i) {
        for (std::uint64_t j = i; j <= o.unique_max_pile; ++j) {
            std::vector<std::uint64_t> ps;
            for (std::uint64_t b = 0; b <= o.unique_cap; ++b) {
                if (solver.outcome(Position::make({i, j, b}, kInf)) == Outcome::kP) {
                    ps.push_back(b);
                }
            }
            const std::uint64_t pair[] = {i, j};
            const auto found = complementary_value(solver, pair, o.unique_cap);
            const bool ok = ps.size() <= 1 && found.found == (ps.size() == 1) && (!found.found || found.value == ps[0]);
            t.expect(ok, [&] {
                return "(" + std::to_string(i) + "," + std::to_string(j) + ") has " + std::to_string(ps.size()) +
                       " P completions";
            });
        }
    }
    rep.checks.push_back(t.finish("at most one b <= " + std::to_string(o.unique_cap) +
                                  " completes a pair to a P position"));
}

void suite_mirror(SuiteReport& rep, Solver& solver, const VerifyOptions& o) {
    Tally fib_mirror;
    for (std::uint64_t m = 0; m <= o.mirror_max_m; ++m) {
        for (std::uint64_t r = 1; r <= m + 1; ++r) {
            fib_mirror.expect(solver.outcome(Position::make({m, m}, ExtNat{r})) == Outcome::kP,
                              [&] { return pos_str({m, m}, ExtNat{r}); });
        }
        fib_mirror.expect(solver.outcome(Position::make({m, m}, kInf)) == Outcome::kP,
                          [&] { return pos_str({m, m}, kInf); });
    }
    rep.checks.push_back(fib_mirror.finish("(m,m;r) is P for m <= " + std::to_string(o.mirror_max_m)));

    Tally pow2_zero;
    for (std::uint64_t a = 0; a <= 20; ++a) {
        for (std::uint64_t b = a; b <= 20; ++b) {
            const std::uint64_t c = a ^ b;
            for (std::uint64_t r = 1; r <= 21; ++r) {
                const auto pos = Position::make({a, b, c}, ExtNat{r}, Dynamic::kPowerOfTwo);
                pow2_zero.expect(solver.outcome(pos) == Outcome::kP, [&] { return pos.to_string(); });
            }
        }
    }
    rep.checks.push_back(pow2_zero.finish("power-of-two positions with zero nim sum are P"));
}

void suite_solver(SuiteReport& rep, Solver& solver, const VerifyOptions& o) {
    std::mt19937_64 rng(o.seed);
    auto pick = [&](std::uint64_t hi) { return std::uniform_int_distribution<std::uint64_t>(0, hi)(rng); };

    Tally canonical;
    Tally recursion;
    for (std::size_t i = 0; i < o.random_samples; ++i) {
        std::vector<std::uint64_t> piles(1 + pick(2));
        for (auto& p : piles) {
            p = pick(40);
        }
        const ExtNat r = pick(9) == 0 ? kInf : ExtNat{1 + pick(80)};
        const Dynamic dyn = pick(1) == 0 ? Dynamic::kFibonacci : Dynamic::kPowerOfTwo;
        const auto pos = Position::make(piles, r, dyn);

        canonical.expect(solver.outcome(pos) == solver.outcome(pos.canonical()), [&] { return pos.to_string(); });

        bool some_p = false;
        for (const auto& m : legal_moves(pos)) {
            some_p = some_p || solver.outcome(pos.after(m)) == Outcome::kP;
        }
        recursion.expect((solver.outcome(pos) == Outcome::kN) == some_p, [&] { return pos.to_string(); });
    }
    rep.checks.push_back(canonical.finish("outcome unchanged by min(bound, max pile)"));
    rep.checks.push_back(recursion.finish("N iff some move reaches P"));
}

using SuiteFn = void (*)(SuiteReport&, Solver&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"zeckendorf", suite_zeckendorf},
        {"small-take-bound", suite_small_take},
        {"telescoping", suite_telescoping},
        {"beatty", suite_beatty},
        {"words", suite_words},
        {"ps-nesting", suite_ps_nesting},
        {"ps-shift", suite_ps_shift},
        {"membership", suite_membership},
        {"hybrid-examples", suite_hybrid_examples},
        {"smallest-letter", suite_smallest_letter},
        {"one-pile", suite_one_pile},
        {"two-pile", suite_two_pile},
        {"word-reading", suite_word_reading},
        {"complement-table", suite_complement_table},
        {"three-four", suite_three_four},
        {"families", suite_families},
        {"large-complements", suite_large_complements},
        {"pow2", suite_pow2},
        {"complement-unique", suite_complement_unique},
        {"mirror", suite_mirror},
        {"solver", suite_solver},
    };
    return suites;
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, Solver& solver, const VerifyOptions& opts) {
    for (const auto& [n, fn] : registry()) {
        if (n == name) {
            SuiteReport rep{name, {}, 0};
            const auto start = std::chrono::steady_clock::now();
            fn(rep, solver, opts);
            rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return rep;
        }
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs_without_complement(Solver& solver, std::uint64_t max_n,
                                                                               std::uint64_t cap) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t i = 0; i <= max_n; ++i) {
        for (std::uint64_t j = i; j <= max_n; ++j) {
            if (i == 3 && j == 4) {
                continue;
            }
            const std::uint64_t pair[] = {i, j};
            if (!complementary_value(solver, pair, std::max(cap, j)).found) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

}  // namespace fibnim
