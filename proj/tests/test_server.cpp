#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <thread>

#include <httplib.h>

#include "fibnim/server.hpp"

using namespace fibnim;
using nlohmann::json;

namespace {

// A server on a free port, served from a background thread.
struct RunningServer {
    Solver solver;
    SessionStore store{solver};
    PlayServer server;
    std::thread worker;
    httplib::Client client;

    explicit RunningServer(ServerOptions opts = {})
        : server(store, with_any_port(std::move(opts))), client("127.0.0.1", server.bind()) {
        worker = std::thread([this] { server.serve(); });
        for (int i = 0; i < 200 && !client.Get("/api/health"); ++i) {
            std::this_thread::sleep_for(std::chrono::milliseconds(10));
        }
    }
    ~RunningServer() {
        server.stop();
        worker.join();
    }

    static ServerOptions with_any_port(ServerOptions o) {
        o.port = 0;
        return o;
    }

    json post(const std::string& path, const json& body, int expected) {
        auto res = client.Post(path, body.dump(), "application/json");
        REQUIRE(res);
        CHECK(res->status == expected);
        return json::parse(res->body);
    }
    json get(const std::string& path, int expected) {
        auto res = client.Get(path);
        REQUIRE(res);
        CHECK(res->status == expected);
        return json::parse(res->body);
    }
};

}  // namespace

TEST_CASE("parse_create_request") {
    const auto req = parse_create_request(R"({"piles":[13],"bound":12,"human_first":false})");
    CHECK(req.piles == std::vector<std::uint64_t>{13});
    CHECK(req.bound == ExtNat{12});
    CHECK_FALSE(req.human_first);
    CHECK_FALSE(req.hints);
    CHECK(parse_create_request(R"({"piles":[1],"bound":"inf","dynamic":1})").dynamic == Dynamic::kPowerOfTwo);
    CHECK(parse_create_request(R"({"piles":[1]})").bound.is_inf());
    CHECK_THROWS_AS(parse_create_request("[1]"), BadRequest);
    CHECK_THROWS_AS(parse_create_request("{"), BadRequest);
    CHECK_THROWS_AS(parse_create_request(R"({"bound":3})"), BadRequest);
    CHECK_THROWS_AS(parse_create_request(R"({"piles":[-1]})"), BadRequest);
    CHECK_THROWS_AS(parse_create_request(R"({"piles":[1],"dynamic":5})"), BadRequest);
    CHECK_THROWS_AS(parse_create_request(R"({"piles":[1],"bound":"lots"})"), BadRequest);
}

TEST_CASE("http api") {
    RunningServer srv;

    CHECK(srv.get("/api/health", 200)["status"] == "ok");

    const auto created = srv.post("/api/session", {{"piles", {10}}, {"bound", 2}, {"hints", true}}, 201);
    const std::string id = created["id"];
    CHECK(created["status"] == "in-progress");
    CHECK(created["to_move"] == "human");
    CHECK(created["max_take"] == json({2}));

    CHECK(srv.get("/api/session/" + id, 200) == created);
    CHECK(srv.get("/api/session/" + id + "/hint", 200)["move"] == json({{"pile_index", 0}, {"pile_size", 10}, {"take", 2}}));

    const auto bad = srv.post("/api/session/" + id + "/move", {{"pile_index", 0}, {"take", 3}}, 422);
    CHECK(bad["code"] == "illegal_move");
    CHECK(bad["detail"]["max_take"] == 2);

    const auto moved = srv.post("/api/session/" + id + "/move", {{"pile_index", 0}, {"take", 2}}, 200);
    CHECK(moved["history"].size() == 2);
    CHECK(moved["history"][0]["actor"] == "human");
    CHECK(moved["history"][1]["actor"] == "engine");

    CHECK(srv.get("/api/session/abcdef", 404)["code"] == "not_found");
    CHECK(srv.post("/api/session/" + id + "/move", {{"take", 1}}, 400)["code"] == "bad_request");
    CHECK(srv.post("/api/session/" + id + "/move", {{"pile_index", -1}, {"take", 1}}, 400)["code"] == "bad_request");
    CHECK(srv.post("/api/session", {{"piles", json::array()}}, 400)["code"] == "bad_request");

    const auto quiet = srv.post("/api/session", {{"piles", {4}}}, 201);
    CHECK(srv.get("/api/session/" + quiet["id"].get<std::string>() + "/hint", 403)["code"] == "hints_disabled");

    const auto done = srv.post("/api/session", {{"piles", {0}}}, 201);
    CHECK(done["status"] == "engine-won");
    CHECK(done["to_move"].is_null());
    CHECK(srv.post("/api/session/" + done["id"].get<std::string>() + "/move", {{"pile_index", 0}, {"take", 1}}, 409)["code"] ==
          "game_over");

    CHECK(srv.get("/api/health", 200)["sessions"] == 3);
}

TEST_CASE("static files and snapshots") {
    const auto dir = std::filesystem::temp_directory_path() / "fibnim_server_test";
    std::filesystem::create_directories(dir / "www");
    std::ofstream(dir / "www" / "index.html") << "<p>board</p>";
    const auto snap = dir / "snap.json";
    std::filesystem::remove(snap);

    ServerOptions opts;
    opts.static_dir = (dir / "www").string();
    opts.snapshot_path = snap.string();
    std::string id;
    {
        RunningServer srv(opts);
        auto res = srv.client.Get("/index.html");
        REQUIRE(res);
        CHECK(res->status == 200);
        CHECK(res->body == "<p>board</p>");
        id = srv.post("/api/session", {{"piles", {6, 9}}}, 201)["id"];
    }
    REQUIRE(std::filesystem::exists(snap));
    {
        RunningServer srv(opts);
        CHECK(srv.get("/api/session/" + id, 200)["position"]["piles"] == json({6, 9}));
    }
    std::filesystem::remove_all(dir);
}
