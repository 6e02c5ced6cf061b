#include <doctest.h>

#include "fibnim/record.hpp"
#include "fibnim/solver.hpp"

using namespace fibnim;

namespace {

OutcomeRecord sample() {
    Solver s;
    OutcomeRecord rec;
    rec.position = Position::make({3, 4, 10}, kInf);
    rec.outcome = s.outcome(rec.position);
    rec.winning_moves = s.winning_moves(rec.position);
    return rec;
}

}  // namespace

TEST_CASE("line format") {
    OutcomeRecord rec;
    rec.position = Position::make({13}, ExtNat{12});
    rec.outcome = Outcome::kP;
    CHECK(to_line(rec) == "piles=13 bound=12 dyn=2 outcome=P moves=- provenance=oracle");

    rec.position = Position::make({10}, ExtNat{2});
    rec.outcome = Outcome::kN;
    rec.winning_moves = {Move{0, 10, 2}};
    rec.provenance = "classifier";
    CHECK(to_line(rec) == "piles=10 bound=2 dyn=2 outcome=N moves=10:2 provenance=classifier");
}

TEST_CASE("line round trip") {
    const auto rec = sample();
    CHECK(parse_line(to_line(rec)) == rec);

    auto pow2 = rec;
    pow2.position.dynamic = Dynamic::kPowerOfTwo;
    pow2.position.bound = ExtNat{7};
    CHECK(parse_line(to_line(pow2)) == pow2);
}

TEST_CASE("line fields in any order") {
    const auto rec = parse_line("outcome=N dyn=2 moves=10:2 bound=2 piles=10");
    CHECK(rec.position == Position::make({10}, ExtNat{2}));
    CHECK(rec.winning_moves == std::vector<Move>{{0, 10, 2}});
    CHECK(rec.provenance == "oracle");
}

TEST_CASE("line parse errors") {
    CHECK_THROWS_AS(parse_line(""), RecordParseError);
    CHECK_THROWS_AS(parse_line("piles=1 bound=1 dyn=2"), RecordParseError);
    CHECK_THROWS_AS(parse_line("piles=1 bound=1 dyn=3 outcome=N moves=-"), RecordParseError);
    CHECK_THROWS_AS(parse_line("piles=1 bound=x dyn=2 outcome=N moves=-"), RecordParseError);
    CHECK_THROWS_AS(parse_line("piles=1 bound=1 dyn=2 outcome=Q moves=-"), RecordParseError);
    CHECK_THROWS_AS(parse_line("piles=1 bound=1 dyn=2 outcome=N moves=1-1"), RecordParseError);
    CHECK_THROWS_AS(parse_line("piles=1 bound=1 dyn=2 outcome=N moves=7:1"), RecordParseError);
    CHECK_THROWS_AS(parse_line("piles=1 bound=1 dyn=2 outcome=N moves=- colour=red"), RecordParseError);
    CHECK_THROWS_AS(parse_line("piles=1 piles=2 bound=1 dyn=2 outcome=N moves=-"), RecordParseError);
    CHECK_THROWS_AS(parse_line("piles=1 junk bound=1 dyn=2 outcome=N moves=-"), RecordParseError);
}

TEST_CASE("json round trip") {
    const auto rec = sample();
    const auto j = to_json(rec);
    CHECK(j["position"]["bound"] == "inf");
    CHECK(j["position"]["piles"] == nlohmann::json({3, 4, 10}));
    CHECK(j["outcome"] == "N");
    CHECK(record_from_json(j) == rec);
    CHECK(record_from_json(nlohmann::json::parse(j.dump())) == rec);

    const auto m = move_to_json(Move{1, 4, 3});
    CHECK(m == nlohmann::json({{"pile_index", 1}, {"pile_size", 4}, {"take", 3}}));

    const auto pos = position_from_json({{"piles", {9, 2}}, {"bound", 5}, {"dynamic", 1}});
    CHECK(pos == Position::make({2, 9}, ExtNat{5}, Dynamic::kPowerOfTwo));
    CHECK_THROWS(position_from_json({{"bound", 5}}));
}
