#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace lightsout {

struct ServiceConfig {
    /// When set, every mutation snapshots the session to <state_dir>/<id>.json
    /// and existing snapshots are loaded at start-up.
    std::optional<std::filesystem::path> state_dir;
    std::size_t nullity_budget = 20;
    /// Exposes GET /puzzles/{id}/consistency.
    bool debug_endpoints = false;
    /// Larger graphs are rejected with 400 (the adjacency matrix is dense).
    std::size_t max_vertices = 10000;
};

/// Status code plus JSON body.
struct ApiResponse {
    int status = 200;
    std::string body;
};

/// Puzzle sessions for the interactive board.
///
/// Each handler takes the raw request pieces and returns a JSON response, so
/// the logic is testable without a socket; mount() wires them to HTTP routes:
///
///   POST /puzzles                  create from a document or {family, params}
///   GET  /puzzles/{id}             session view
///   POST /puzzles/{id}/click       {"vertex": k}
///   POST /puzzles/{id}/undo
///   POST /puzzles/{id}/reset
///   GET  /puzzles/{id}/hint?target=all-off|all-on|corollary|<0/1 string>
///   GET  /health
///
/// Mutations of one session are serialised by a per-session mutex; the
/// solver runs on an immutable factorisation outside any lock.
class PuzzleService {
public:
    explicit PuzzleService(ServiceConfig config = {});
    ~PuzzleService();
    PuzzleService(const PuzzleService&) = delete;
    PuzzleService& operator=(const PuzzleService&) = delete;

    ApiResponse create(std::string_view body);
    ApiResponse get(const std::string& id) const;
    ApiResponse click(const std::string& id, std::string_view body);
    ApiResponse undo(const std::string& id);
    ApiResponse reset(const std::string& id);
    ApiResponse hint(const std::string& id, std::string_view target) const;
    ApiResponse consistency(const std::string& id) const;
    ApiResponse health() const;

    [[nodiscard]] std::size_t session_count() const;

    void mount(httplib::Server& server);

private:
    struct Session;
    std::shared_ptr<Session> find(const std::string& id) const;
    void snapshot(const Session& s) const;
    void load_snapshots();

    ServiceConfig config_;
    mutable std::shared_mutex sessions_mutex_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
};

/// HTTP front end around a PuzzleService.
class HttpServer {
public:
    explicit HttpServer(ServiceConfig config = {});
    ~HttpServer();

    /// Binds host:port (port 0 picks a free port). Returns the bound port or
    /// -1 on failure.
    int bind(const std::string& host, int port);
    /// Serves until stop(); call after a successful bind().
    bool listen();
    void stop();

    [[nodiscard]] PuzzleService& service() noexcept { return *service_; }

private:
    std::unique_ptr<PuzzleService> service_;
    std::unique_ptr<httplib::Server> server_;
};

}  // namespace lightsout
