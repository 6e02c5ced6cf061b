#pragma once

// Play sessions: a human against the engine, one position per session.

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fibnim/position.hpp"
#include "fibnim/solver.hpp"

namespace fibnim {

enum class Actor { kHuman, kEngine };
enum class Status { kInProgress, kHumanWon, kEngineWon };

const char* to_string(Actor a);
const char* to_string(Status s);

struct HistoryEntry {
    Actor actor = Actor::kHuman;
    Move move;
    Position after;
};

struct Session {
    std::string id;
    Position initial;
    Position position;
    std::vector<HistoryEntry> history;
    bool human_first = true;
    bool hints_enabled = false;
    Status status = Status::kInProgress;

    /// Whose turn it is; meaningless once the game is over.
    Actor to_move() const;
};

/// Re-applies the history to the initial position. Throws std::logic_error
/// if a recorded move is illegal or a recorded successor differs.
Position replay(const Session& s);

nlohmann::json to_json(const Session& s);
Session session_from_json(const nlohmann::json& j);

// Errors, each mapped to one HTTP status by the server.

class SessionNotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BadRequest : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IllegalMove : public std::invalid_argument {
public:
    IllegalMove(const std::string& msg, nlohmann::json detail)
        : std::invalid_argument(msg), detail_(std::move(detail)) {}
    const nlohmann::json& detail() const { return detail_; }

private:
    nlohmann::json detail_;
};

class GameFinished : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class HintsDisabled : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SessionStoreOptions {
    std::chrono::seconds ttl{std::chrono::hours(6)};
    std::size_t max_sessions = 10'000;
    /// Re-check with the solver that every engine reply from an N position
    /// reaches a P position.
    bool check_engine = true;
    std::size_t max_piles = Solver::kMaxPiles;
    std::uint64_t max_pile_size = 1'000;
};

struct CreateRequest {
    std::vector<std::uint64_t> piles;
    ExtNat bound = kInf;
    Dynamic dynamic = Dynamic::kFibonacci;
    bool human_first = true;
    bool hints = false;
};

/// In-memory sessions with TTL eviction. Operations on one session are
/// serialized; different sessions proceed independently and share the
/// solver.
class SessionStore {
public:
    using Clock = std::chrono::steady_clock;

    explicit SessionStore(Solver& solver, SessionStoreOptions options = {});

    /// Validates the request and, when the engine moves first, plays its
    /// opening move before returning.
    Session create(const CreateRequest& req);

    Session get(const std::string& id);

    /// Applies the human move and the engine reply, if any.
    Session move(const std::string& id, std::size_t pile_index, std::uint64_t take);

    /// First winning move for the human, or nullopt when the human is in a
    /// P position.
    std::optional<Move> hint(const std::string& id);

    /// Drops sessions idle for longer than the TTL; returns how many.
    std::size_t evict_expired(Clock::time_point now = Clock::now());

    std::size_t size() const;

    nlohmann::json snapshot() const;
    void restore(const nlohmann::json& snap);

private:
    struct Entry {
        std::mutex mu;
        Session session;
        Clock::time_point touched;
    };

    std::shared_ptr<Entry> find(const std::string& id);
    std::string new_id();
    void engine_reply(Session& s);
    void update_status(Session& s, Actor mover);

    Solver& solver_;
    SessionStoreOptions options_;
    mutable std::mutex mu_;
    std::map<std::string, std::shared_ptr<Entry>> sessions_;
    std::mt19937_64 rng_;
};

}  // namespace fibnim
