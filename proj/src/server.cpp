#include "fibnim/server.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include <httplib.h>

#include "fibnim/record.hpp"

namespace fibnim {
namespace {

using nlohmann::json;

void send_json(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& code, const std::string& message,
                const json& detail = json::object()) {
    send_json(res, status, {{"code", code}, {"message", message}, {"detail", detail}});
}

json parse_body(const std::string& body) {
    try {
        return json::parse(body);
    } catch (const json::parse_error& e) {
        throw BadRequest(std::string("body is not valid JSON: ") + e.what());
    }
}

// Runs a handler and maps library exceptions onto error responses.
template <typename F>
void guarded(httplib::Response& res, F&& fn) {
    try {
        fn();
    } catch (const SessionNotFound& e) {
        send_error(res, 404, "not_found", e.what());
    } catch (const IllegalMove& e) {
        send_error(res, 422, "illegal_move", e.what(), e.detail());
    } catch (const BadRequest& e) {
        send_error(res, 400, "bad_request", e.what());
    } catch (const GameFinished& e) {
        send_error(res, 409, "game_over", e.what());
    } catch (const HintsDisabled& e) {
        send_error(res, 403, "hints_disabled", e.what());
    } catch (const BudgetExceeded& e) {
        send_error(res, 503, "budget_exceeded", e.what());
    } catch (const json::exception& e) {
        send_error(res, 400, "bad_request", e.what());
    } catch (const std::exception& e) {
        send_error(res, 500, "internal", e.what());
    }
}

}  // namespace

CreateRequest parse_create_request(const std::string& body) {
    const json j = parse_body(body);
    if (!j.is_object()) {
        throw BadRequest("body must be a JSON object");
    }
    CreateRequest req;
    try {
        const auto& piles = j.at("piles");
        if (!piles.is_array()) {
            throw BadRequest("piles must be an array");
        }
        for (const auto& p : piles) {
            if (!p.is_number_unsigned()) {
                throw BadRequest("pile sizes must be nonnegative integers");
            }
            req.piles.push_back(p.get<std::uint64_t>());
        }
        if (j.contains("bound")) {
            const auto& b = j.at("bound");
            req.bound = b.is_string() ? ExtNat::parse(b.get<std::string>()) : ExtNat{b.get<std::uint64_t>()};
        }
        if (j.contains("dynamic")) {
            req.dynamic = dynamic_from_int(j.at("dynamic").get<int>());
        }
        req.human_first = j.value("human_first", true);
        req.hints = j.value("hints", false);
    } catch (const BadRequest&) {
        throw;
    } catch (const std::exception& e) {
        throw BadRequest(std::string("invalid session request: ") + e.what());
    }
    return req;
}

PlayServer::PlayServer(SessionStore& store, ServerOptions options)
    : store_(store), options_(std::move(options)), http_(std::make_unique<httplib::Server>()) {
    if (!options_.snapshot_path.empty() && std::filesystem::exists(options_.snapshot_path)) {
        std::ifstream in(options_.snapshot_path);
        store_.restore(json::parse(in));
    }
    install_routes();
}

PlayServer::~PlayServer() = default;

void PlayServer::install_routes() {
    auto& srv = *http_;

    srv.Get("/api/health", [this](const httplib::Request&, httplib::Response& res) {
        send_json(res, 200, {{"status", "ok"}, {"sessions", store_.size()}});
    });

    srv.Post("/api/session", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { send_json(res, 201, to_json(store_.create(parse_create_request(req.body)))); });
    });

    srv.Get(R"(/api/session/([0-9a-f]+))", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { send_json(res, 200, to_json(store_.get(req.matches[1]))); });
    });

    srv.Post(R"(/api/session/([0-9a-f]+)/move)", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const json j = parse_body(req.body);
            if (!j.is_object() || !j.contains("pile_index") || !j.contains("take")) {
                throw BadRequest("move needs pile_index and take");
            }
            const auto idx = j.at("pile_index").get<std::int64_t>();
            const auto take = j.at("take").get<std::int64_t>();
            if (idx < 0 || take < 0) {
                throw BadRequest("pile_index and take must be nonnegative");
            }
            send_json(res, 200,
                      to_json(store_.move(req.matches[1], static_cast<std::size_t>(idx), static_cast<std::uint64_t>(take))));
        });
    });

    srv.Get(R"(/api/session/([0-9a-f]+)/hint)", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const auto m = store_.hint(req.matches[1]);
            send_json(res, 200, {{"move", m ? move_to_json(*m) : json(nullptr)}});
        });
    });

    if (!options_.static_dir.empty()) {
        if (!srv.set_mount_point("/", options_.static_dir)) {
            throw std::runtime_error("static directory not found: " + options_.static_dir);
        }
    }
}

int PlayServer::bind() {
    if (options_.port == 0) {
        port_ = http_->bind_to_any_port(options_.host);
    } else {
        port_ = http_->bind_to_port(options_.host, options_.port) ? options_.port : -1;
    }
    if (port_ < 0) {
        throw std::runtime_error("cannot bind " + options_.host + ":" + std::to_string(options_.port));
    }
    return port_;
}

void PlayServer::serve() { http_->listen_after_bind(); }

void PlayServer::stop() {
    http_->stop();
    if (!options_.snapshot_path.empty()) {
        std::ofstream out(options_.snapshot_path);
        out << store_.snapshot().dump(2) << '\n';
    }
}

}  // namespace fibnim
