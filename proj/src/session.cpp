#include "fibnim/session.hpp"

#include <cstdio>

#include "fibnim/record.hpp"

namespace fibnim {

const char* to_string(Actor a) { return a == Actor::kHuman ? "human" : "engine"; }

const char* to_string(Status s) {
    switch (s) {
        case Status::kInProgress: return "in-progress";
        case Status::kHumanWon: return "human-won";
        case Status::kEngineWon: return "engine-won";
    }
    return "?";
}

Actor Session::to_move() const {
    const bool human_started = human_first;
    const bool even = history.size() % 2 == 0;
    return (human_started == even) ? Actor::kHuman : Actor::kEngine;
}

Position replay(const Session& s) {
    Position pos = s.initial;
    for (const auto& h : s.history) {
        if (!pos.is_legal(h.move)) {
            throw std::logic_error("replay: illegal move " + to_string(h.move) + " from " + pos.to_string());
        }
        pos = pos.after(h.move);
        if (!(pos == h.after)) {
            throw std::logic_error("replay: history diverges at " + pos.to_string());
        }
    }
    return pos;
}

nlohmann::json to_json(const Session& s) {
    nlohmann::json history = nlohmann::json::array();
    for (const auto& h : s.history) {
        history.push_back({{"actor", to_string(h.actor)}, {"move", move_to_json(h.move)},
                           {"position", position_to_json(h.after)}});
    }
    nlohmann::json max_take = nlohmann::json::array();
    for (std::size_t i = 0; i < s.position.piles.size(); ++i) {
        max_take.push_back(s.position.max_take(i));
    }
    nlohmann::json j = {{"id", s.id},
                        {"initial", position_to_json(s.initial)},
                        {"position", position_to_json(s.position)},
                        {"max_take", max_take},
                        {"history", history},
                        {"human_first", s.human_first},
                        {"hints_enabled", s.hints_enabled},
                        {"status", to_string(s.status)}};
    j["to_move"] = s.status == Status::kInProgress ? nlohmann::json(to_string(s.to_move())) : nlohmann::json(nullptr);
    return j;
}

Session session_from_json(const nlohmann::json& j) {
    Session s;
    s.id = j.at("id").get<std::string>();
    s.initial = position_from_json(j.at("initial"));
    s.position = position_from_json(j.at("position"));
    s.human_first = j.at("human_first").get<bool>();
    s.hints_enabled = j.at("hints_enabled").get<bool>();
    const auto status = j.at("status").get<std::string>();
    s.status = status == "human-won"    ? Status::kHumanWon
               : status == "engine-won" ? Status::kEngineWon
                                        : Status::kInProgress;
    for (const auto& h : j.at("history")) {
        const auto& m = h.at("move");
        s.history.push_back(HistoryEntry{
            h.at("actor").get<std::string>() == "engine" ? Actor::kEngine : Actor::kHuman,
            Move{m.at("pile_index").get<std::size_t>(), m.at("pile_size").get<std::uint64_t>(),
                 m.at("take").get<std::uint64_t>()},
            position_from_json(h.at("position"))});
    }
    if (!(replay(s) == s.position)) {
        throw std::invalid_argument("session " + s.id + ": history does not reach the stored position");
    }
    return s;
}

SessionStore::SessionStore(Solver& solver, SessionStoreOptions options)
    : solver_(solver), options_(options), rng_(std::random_device{}()) {}

std::string SessionStore::new_id() {
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(rng_()),
                  static_cast<unsigned long long>(rng_()));
    return buf;
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& id) {
    std::lock_guard lock(mu_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) {
        throw SessionNotFound("no session '" + id + "'");
    }
    return it->second;
}

void SessionStore::update_status(Session& s, Actor mover) {
    if (legal_moves(s.position).empty()) {
        s.status = mover == Actor::kHuman ? Status::kHumanWon : Status::kEngineWon;
    }
}

void SessionStore::engine_reply(Session& s) {
    if (s.status != Status::kInProgress) {
        return;
    }
    const bool was_n = options_.check_engine && solver_.outcome(s.position) == Outcome::kN;
    const Move m = engine_move(solver_, s.position);
    s.position = s.position.after(m);
    s.history.push_back(HistoryEntry{Actor::kEngine, m, s.position});
    if (was_n && solver_.outcome(s.position) != Outcome::kP) {
        throw std::logic_error("engine left a winning position without reaching a P position: " +
                               s.position.to_string());
    }
    update_status(s, Actor::kEngine);
}

Session SessionStore::create(const CreateRequest& req) {
    if (req.piles.empty() || req.piles.size() > options_.max_piles) {
        throw BadRequest("between 1 and " + std::to_string(options_.max_piles) + " piles are required");
    }
    for (auto p : req.piles) {
        if (p > options_.max_pile_size) {
            throw BadRequest("pile size " + std::to_string(p) + " exceeds the limit of " +
                             std::to_string(options_.max_pile_size));
        }
    }
    evict_expired();

    Session s;
    s.initial = Position::make(req.piles, req.bound, req.dynamic);
    s.position = s.initial;
    s.human_first = req.human_first;
    s.hints_enabled = req.hints;
    if (legal_moves(s.position).empty()) {
        // The side to move is stuck from the start.
        s.status = req.human_first ? Status::kEngineWon : Status::kHumanWon;
    } else if (!req.human_first) {
        engine_reply(s);
    }

    auto entry = std::make_shared<Entry>();
    entry->touched = Clock::now();
    std::lock_guard lock(mu_);
    if (sessions_.size() >= options_.max_sessions) {
        throw BadRequest("too many live sessions");
    }
    s.id = new_id();
    entry->session = s;
    sessions_.emplace(s.id, entry);
    return s;
}

Session SessionStore::get(const std::string& id) {
    auto e = find(id);
    std::lock_guard lock(e->mu);
    e->touched = Clock::now();
    return e->session;
}

Session SessionStore::move(const std::string& id, std::size_t pile_index, std::uint64_t take) {
    auto e = find(id);
    std::lock_guard lock(e->mu);
    e->touched = Clock::now();
    Session& s = e->session;
    if (s.status != Status::kInProgress) {
        throw GameFinished(std::string("game is over: ") + to_string(s.status));
    }
    const auto& pos = s.position;
    if (pile_index >= pos.piles.size()) {
        throw IllegalMove("no pile at index " + std::to_string(pile_index),
                          {{"pile_count", pos.piles.size()}, {"piles", pos.piles}});
    }
    const Move m{pile_index, pos.piles[pile_index], take};
    if (!pos.is_legal(m)) {
        throw IllegalMove("take must be between 1 and " + std::to_string(pos.max_take(pile_index)) + " from pile " +
                              std::to_string(pos.piles[pile_index]),
                          {{"pile_index", pile_index},
                           {"pile_size", pos.piles[pile_index]},
                           {"take", take},
                           {"bound", pos.bound.is_inf() ? nlohmann::json("inf") : nlohmann::json(pos.bound.value())},
                           {"min_take", 1},
                           {"max_take", pos.max_take(pile_index)}});
    }
    Session next = s;
    next.position = pos.after(m);
    next.history.push_back(HistoryEntry{Actor::kHuman, m, next.position});
    update_status(next, Actor::kHuman);
    engine_reply(next);
    s = std::move(next);
    return s;
}

std::optional<Move> SessionStore::hint(const std::string& id) {
    auto e = find(id);
    std::lock_guard lock(e->mu);
    e->touched = Clock::now();
    const Session& s = e->session;
    if (!s.hints_enabled) {
        throw HintsDisabled("hints were not enabled for this session");
    }
    if (s.status != Status::kInProgress) {
        throw GameFinished(std::string("game is over: ") + to_string(s.status));
    }
    auto wins = solver_.winning_moves(s.position);
    if (wins.empty()) {
        return std::nullopt;
    }
    return wins.front();
}

std::size_t SessionStore::evict_expired(Clock::time_point now) {
    std::lock_guard lock(mu_);
    std::size_t dropped = 0;
    for (auto it = sessions_.begin(); it != sessions_.end();) {
        std::unique_lock entry_lock(it->second->mu, std::try_to_lock);
        if (entry_lock.owns_lock() && now - it->second->touched > options_.ttl) {
            entry_lock.unlock();
            it = sessions_.erase(it);
            ++dropped;
        } else {
            ++it;
        }
    }
    return dropped;
}

std::size_t SessionStore::size() const {
    std::lock_guard lock(mu_);
    return sessions_.size();
}

nlohmann::json SessionStore::snapshot() const {
    std::lock_guard lock(mu_);
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [id, e] : sessions_) {
        std::lock_guard entry_lock(e->mu);
        out.push_back(to_json(e->session));
    }
    return {{"sessions", out}};
}

void SessionStore::restore(const nlohmann::json& snap) {
    std::vector<Session> loaded;
    for (const auto& j : snap.at("sessions")) {
        loaded.push_back(session_from_json(j));
    }
    std::lock_guard lock(mu_);
    for (auto& s : loaded) {
        auto e = std::make_shared<Entry>();
        e->touched = Clock::now();
        e->session = std::move(s);
        sessions_[e->session.id] = e;
    }
}

}  // namespace fibnim
