#pragma once

// HTTP+JSON front end for SessionStore.
//
//   POST /api/session                 create   {piles, bound, dynamic, human_first, hints}
//   GET  /api/session/{id}            fetch
//   POST /api/session/{id}/move       move     {pile_index, take}
//   GET  /api/session/{id}/hint       hint     -> {move: {...} | null}
//   GET  /api/health
//
// Errors are {code, message, detail} with a matching HTTP status.

#include <memory>
#include <string>

#include "fibnim/session.hpp"

namespace httplib {
class Server;
}

namespace fibnim {

struct ServerOptions {
    std::string host = "127.0.0.1";
    int port = 8080;               // 0 picks a free port
    std::string static_dir;        // served at / when set
    std::string snapshot_path;     // loaded at start, written by stop()
};

class PlayServer {
public:
    PlayServer(SessionStore& store, ServerOptions options);
    ~PlayServer();

    PlayServer(const PlayServer&) = delete;
    PlayServer& operator=(const PlayServer&) = delete;

    /// Binds the socket; returns the bound port. Throws std::runtime_error
    /// when binding fails.
    int bind();

    /// Serves until stop(); call bind() first.
    void serve();

    /// Stops serving and writes the snapshot when a path is configured.
    void stop();

    int port() const { return port_; }

private:
    void install_routes();

    SessionStore& store_;
    ServerOptions options_;
    std::unique_ptr<httplib::Server> http_;
    int port_ = 0;
};

/// Parses a create request body. Throws BadRequest.
CreateRequest parse_create_request(const std::string& body);

}  // namespace fibnim
