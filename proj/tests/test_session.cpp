#include <doctest.h>

#include <thread>

#include "fibnim/session.hpp"

using namespace fibnim;

namespace {

CreateRequest request(std::vector<std::uint64_t> piles, ExtNat bound, bool human_first, bool hints = false) {
    CreateRequest req;
    req.piles = std::move(piles);
    req.bound = bound;
    req.human_first = human_first;
    req.hints = hints;
    return req;
}

}  // namespace

TEST_CASE("engine opens when the human moves second") {
    Solver solver;
    SessionStore store(solver);

    const auto a = store.create(request({13}, ExtNat{12}, false));
    CHECK(a.position == Position::make({12}, ExtNat{2}));
    REQUIRE(a.history.size() == 1);
    CHECK(a.history[0].actor == Actor::kEngine);
    CHECK(a.to_move() == Actor::kHuman);

    const auto b = store.create(request({10}, ExtNat{2}, false));
    CHECK(b.position == Position::make({8}, ExtNat{4}));
    CHECK(b.status == Status::kInProgress);

    const auto c = store.create(request({10}, ExtNat{2}, true));
    CHECK(c.history.empty());
    CHECK(c.to_move() == Actor::kHuman);
    CHECK(c.id.size() == 32);
    CHECK(store.size() == 3);
}

TEST_CASE("request validation") {
    Solver solver;
    SessionStoreOptions opts;
    opts.max_pile_size = 50;
    opts.max_sessions = 1;
    SessionStore store(solver, opts);
    CHECK_THROWS_AS(store.create(request({}, kInf, true)), BadRequest);
    CHECK_THROWS_AS(store.create(request({51}, kInf, true)), BadRequest);
    CHECK_THROWS_AS(store.create(request({1, 1, 1, 1, 1, 1, 1, 1, 1}, kInf, true)), BadRequest);
    store.create(request({5}, kInf, true));
    CHECK_THROWS_AS(store.create(request({5}, kInf, true)), BadRequest);
}

TEST_CASE("stuck from the start") {
    Solver solver;
    SessionStore store(solver);
    CHECK(store.create(request({0, 0}, kInf, true)).status == Status::kEngineWon);
    CHECK(store.create(request({0}, kInf, false)).status == Status::kHumanWon);
}

TEST_CASE("illegal moves and missing sessions") {
    Solver solver;
    SessionStore store(solver);
    const auto s = store.create(request({10}, ExtNat{2}, true));

    try {
        store.move(s.id, 0, 3);
        FAIL("expected IllegalMove");
    } catch (const IllegalMove& e) {
        CHECK(e.detail()["max_take"] == 2);
        CHECK(e.detail()["min_take"] == 1);
        CHECK(e.detail()["pile_size"] == 10);
        CHECK(e.detail()["bound"] == 2);
    }
    CHECK_THROWS_AS(store.move(s.id, 0, 0), IllegalMove);
    CHECK_THROWS_AS(store.move(s.id, 1, 1), IllegalMove);
    CHECK(store.get(s.id).history.empty());

    CHECK_THROWS_AS(store.get("0123"), SessionNotFound);
    CHECK_THROWS_AS(store.move("0123", 0, 1), SessionNotFound);
    CHECK_THROWS_AS(store.hint(s.id), HintsDisabled);
}

TEST_CASE("hints") {
    Solver solver;
    SessionStore store(solver);
    const auto n = store.create(request({10}, ExtNat{2}, true, true));
    CHECK(store.hint(n.id) == Move{0, 10, 2});
    const auto p = store.create(request({13}, ExtNat{12}, true, true));
    CHECK_FALSE(store.hint(p.id).has_value());
}

TEST_CASE("a full game keeps history and status consistent") {
    Solver solver;
    SessionStore store(solver);
    auto s = store.create(request({4, 7, 9}, kInf, true, true));
    while (s.status == Status::kInProgress) {
        REQUIRE(s.to_move() == Actor::kHuman);
        // The human always takes one stone from the smallest nonempty pile.
        std::size_t idx = 0;
        while (s.position.piles[idx] == 0) ++idx;
        s = store.move(s.id, idx, 1);
        REQUIRE(replay(s) == s.position);
    }
    // Whoever moved last wins.
    CHECK(legal_moves(s.position).empty());
    CHECK((s.status == Status::kHumanWon) == (s.history.back().actor == Actor::kHuman));
    CHECK_THROWS_AS(store.move(s.id, 0, 1), GameFinished);
    CHECK_THROWS_AS(store.hint(s.id), GameFinished);
}

TEST_CASE("the engine wins from a P start") {
    Solver solver;
    SessionStore store(solver);
    auto s = store.create(request({8, 9, 53}, kInf, true));
    while (s.status == Status::kInProgress) {
        const auto moves = legal_moves(s.position);
        s = store.move(s.id, moves.back().pile_index, moves.back().take);
    }
    CHECK(s.status == Status::kEngineWon);
}

TEST_CASE("session json round trip") {
    Solver solver;
    SessionStore store(solver);
    auto s = store.create(request({3, 5}, ExtNat{4}, false, true));
    s = store.move(s.id, 1, 1);
    const auto j = to_json(s);
    CHECK(j["status"] == to_string(s.status));
    CHECK(j["max_take"].size() == s.position.piles.size());
    const auto back = session_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.position == s.position);
    CHECK(back.history.size() == s.history.size());
    CHECK(to_json(back) == j);

    auto tampered = j;
    tampered["history"][0]["move"]["take"] = 99;
    CHECK_THROWS(session_from_json(tampered));
}

TEST_CASE("expiry and snapshots") {
    Solver solver;
    SessionStoreOptions opts;
    opts.ttl = std::chrono::seconds(60);
    SessionStore store(solver, opts);
    const auto a = store.create(request({5, 6}, kInf, true));
    store.create(request({7}, ExtNat{3}, false));

    const auto snap = store.snapshot();
    CHECK(snap["sessions"].size() == 2);

    CHECK(store.evict_expired(SessionStore::Clock::now()) == 0);
    CHECK(store.evict_expired(SessionStore::Clock::now() + std::chrono::seconds(61)) == 2);
    CHECK(store.size() == 0);

    SessionStore restored(solver, opts);
    restored.restore(snap);
    CHECK(restored.size() == 2);
    CHECK(restored.get(a.id).position == a.position);
}

TEST_CASE("concurrent sessions") {
    Solver solver;
    SessionStore store(solver);
    std::vector<std::thread> threads;
    std::vector<int> finished(6, 0);
    for (int t = 0; t < 6; ++t) {
        threads.emplace_back([&, t] {
            auto s = store.create(request({static_cast<std::uint64_t>(5 + t), 9, 14}, kInf, t % 2 == 0));
            while (s.status == Status::kInProgress) {
                const auto moves = legal_moves(s.position);
                s = store.move(s.id, moves.front().pile_index, moves.front().take);
            }
            finished[t] = replay(s) == s.position ? 1 : 0;
        });
    }
    for (auto& th : threads) th.join();
    for (int f : finished) CHECK(f == 1);
    CHECK(store.size() == 6);
}
