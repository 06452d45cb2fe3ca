#include "lightsout/service.hpp"

#include <httplib.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <random>
#include <sstream>
#include <vector>

#include "json_codec.hpp"
#include "lightsout/document.hpp"
#include "lightsout/generators.hpp"
#include "lightsout/solver.hpp"

namespace lightsout {

using detail::json;

struct PuzzleService::Session {
    std::string id;
    Graph graph;
    std::shared_ptr<const LightsOutSystem> system;
    BitVec initial;
    std::string created_at;

    mutable std::mutex mutex;
    BitVec state;
    std::vector<std::size_t> history;
    std::string updated_at;
};

namespace {

class BadRequest : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string now_iso8601() {
    const auto now = std::chrono::system_clock::now();
    const auto t = std::chrono::system_clock::to_time_t(now);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%S") << '.' << std::setw(3) << std::setfill('0') << ms << 'Z';
    return os.str();
}

std::string new_token() {
    static std::mutex m;
    static std::random_device rd;
    std::lock_guard lock(m);
    std::ostringstream os;
    for (int i = 0; i < 4; ++i) os << std::hex << std::setw(8) << std::setfill('0') << rd();
    return os.str();
}

ApiResponse reply(int status, const json& body) { return ApiResponse{status, body.dump()}; }

ApiResponse error(int status, const std::string& message) { return reply(status, json{{"error", message}}); }

json parse_json(std::string_view body) {
    try {
        return json::parse(body);
    } catch (const json::exception& e) {
        throw BadRequest(std::string("body is not valid JSON: ") + e.what());
    }
}

std::vector<bool> parse_wrap(const json& j, std::size_t axes) {
    if (j.is_boolean()) return std::vector<bool>(axes, j.get<bool>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "none") return {};
        if (s == "both" || s == "all") return std::vector<bool>(axes, true);
        throw BadRequest("wrap must be 'none', 'both', 'all', a boolean or a list of booleans");
    }
    return j.get<std::vector<bool>>();
}

TemplateSpec parse_template(const json& body) {
    const json& params = body.contains("params") ? body["params"] : body;
    if (!params.is_object()) throw BadRequest("params must be an object");
    TemplateSpec spec;
    spec.family = body.at("family").get<std::string>();
    if (auto it = params.find("dims"); it != params.end()) spec.dims = it->get<std::vector<std::size_t>>();
    if (auto it = params.find("wrap"); it != params.end()) spec.wrap = parse_wrap(*it, spec.dims.size());
    spec.diagonal = params.value("diagonal", false);
    spec.self_affect = parse_self_affect(params.value("self", std::string("all")));
    spec.rows = params.value("rows", std::size_t{1});
    spec.radius = params.value("radius", std::size_t{0});
    if (auto it = params.find("mask"); it != params.end()) spec.mask = it->get<std::vector<std::size_t>>();
    if (auto it = params.find("green"); it != params.end()) spec.green = it->get<std::vector<std::size_t>>();
    return spec;
}

// Rejects absurd sizes before anything dense is allocated.
void check_template_size(const TemplateSpec& spec, std::size_t max_vertices) {
    bool too_large = false;
    if (spec.family == "grid" || spec.family == "torus") {
        std::size_t n = 1;
        for (auto d : spec.dims) {
            if (d == 0) continue;
            if (n > max_vertices / d) too_large = true;
            else n *= d;
        }
    } else if (spec.family == "triangular") {
        too_large = spec.rows > 0 && spec.rows > max_vertices / spec.rows;
    } else if (spec.family == "hexagonal") {
        too_large = spec.radius > max_vertices || 3 * spec.radius * (spec.radius + 1) + 1 > max_vertices;
    }
    if (too_large) throw BadRequest("template exceeds " + std::to_string(max_vertices) + " vertices");
}

PuzzleDocument document_from_body(json body) {
    if (!body.contains("version")) body["version"] = document_version;
    if (!body.contains("state") && body["graph"].is_object() && body["graph"].contains("n_vertices")) {
        const auto n = body["graph"]["n_vertices"];
        if (n.is_number_unsigned()) body["state"] = std::string(n.get<std::size_t>(), '0');
    }
    return parse_document(body.dump());
}

BitVec parse_target(std::string_view target, const Graph& g) {
    if (target.empty() || target == "all-off") return BitVec(g.n_vertices);
    if (target == "all-on") return BitVec::ones(g.n_vertices);
    if (target == "corollary") return self_loop_vector(g);
    BitVec t;
    try {
        t = BitVec::from_string(target);
    } catch (const ValidationError&) {
        throw BadRequest("target must be all-off, all-on, corollary or a 0/1 string");
    }
    if (t.size() != g.n_vertices) throw BadRequest("target length does not match vertex count");
    return t;
}

}  // namespace

PuzzleService::PuzzleService(ServiceConfig config) : config_(std::move(config)) {
    if (config_.state_dir) {
        std::filesystem::create_directories(*config_.state_dir);
        load_snapshots();
    }
}

PuzzleService::~PuzzleService() = default;

std::shared_ptr<PuzzleService::Session> PuzzleService::find(const std::string& id) const {
    std::shared_lock lock(sessions_mutex_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

std::size_t PuzzleService::session_count() const {
    std::shared_lock lock(sessions_mutex_);
    return sessions_.size();
}

namespace {

// Caller holds s.mutex.
template <class S>
json session_view(const S& s) {
    json out;
    out["id"] = s.id;
    out["version"] = document_version;
    out["graph"] = detail::graph_to_json(s.graph);
    out["n_vertices"] = s.graph.n_vertices;
    out["n_edges"] = s.graph.edges.size();
    out["state"] = s.state.to_string();
    out["initial_state"] = s.initial.to_string();
    out["history"] = s.history;
    out["created_at"] = s.created_at;
    out["updated_at"] = s.updated_at;
    return out;
}

template <class S>
json snapshot_json(const S& s) {
    json out;
    out["id"] = s.id;
    out["version"] = document_version;
    out["graph"] = detail::graph_to_json(s.graph);
    out["initial_state"] = s.initial.to_string();
    out["state"] = s.state.to_string();
    out["history"] = s.history;
    out["created_at"] = s.created_at;
    out["updated_at"] = s.updated_at;
    return out;
}

}  // namespace

void PuzzleService::snapshot(const Session& s) const {
    if (!config_.state_dir) return;
    const auto final_path = *config_.state_dir / (s.id + ".json");
    auto tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << snapshot_json(s).dump(2) << '\n';
    }
    std::error_code ec;
    std::filesystem::rename(tmp, final_path, ec);
}

void PuzzleService::load_snapshots() {
    for (const auto& entry : std::filesystem::directory_iterator(*config_.state_dir)) {
        if (entry.path().extension() != ".json") continue;
        try {
            std::ifstream in(entry.path());
            const json j = json::parse(in);
            auto s = std::make_shared<Session>();
            s->id = j.at("id").get<std::string>();
            s->graph = detail::graph_from_json(j.at("graph"));
            s->system = std::make_shared<const LightsOutSystem>(s->graph);
            s->initial = BitVec::from_string(j.at("initial_state").get<std::string>());
            s->history = j.at("history").get<std::vector<std::size_t>>();
            s->created_at = j.at("created_at").get<std::string>();
            s->updated_at = j.at("updated_at").get<std::string>();
            // Rebuild the state from history so the invariant holds by construction.
            const auto n = s->graph.n_vertices;
            if (s->initial.size() != n) continue;
            BitVec clicks(n);
            bool ok = true;
            for (auto v : s->history) {
                if (v >= n) ok = false;
                else clicks.flip(v);
            }
            if (!ok) continue;
            s->state = s->system->apply(s->initial, clicks);
            sessions_.emplace(s->id, std::move(s));
        } catch (const std::exception&) {
            // Unreadable snapshot: skip it.
        }
    }
}

ApiResponse PuzzleService::create(std::string_view body) {
    auto s = std::make_shared<Session>();
    try {
        const json j = parse_json(body);
        if (!j.is_object()) throw BadRequest("body must be a JSON object");
        if (j.contains("graph")) {
            auto doc = document_from_body(j);
            s->graph = std::move(doc.puzzle.graph);
            s->initial = std::move(doc.puzzle.state);
        } else if (j.contains("family")) {
            const auto spec = parse_template(j);
            check_template_size(spec, config_.max_vertices);
            s->graph = generate(spec);
            s->initial = BitVec(s->graph.n_vertices);
        } else {
            throw BadRequest("body needs either \"graph\" (puzzle document) or \"family\" (template)");
        }
        if (s->graph.n_vertices > config_.max_vertices)
            throw BadRequest("graph has " + std::to_string(s->graph.n_vertices) + " vertices; limit is " +
                             std::to_string(config_.max_vertices));
    } catch (const BadRequest& e) {
        return error(400, e.what());
    } catch (const ValidationError& e) {
        return error(400, e.what());
    } catch (const json::exception& e) {
        return error(400, std::string("bad template parameters: ") + e.what());
    }

    s->system = std::make_shared<const LightsOutSystem>(s->graph);
    s->state = s->initial;
    s->created_at = s->updated_at = now_iso8601();
    {
        std::unique_lock lock(sessions_mutex_);
        do {
            s->id = new_token();
        } while (sessions_.count(s->id) != 0);
        sessions_.emplace(s->id, s);
    }
    std::lock_guard lock(s->mutex);
    snapshot(*s);
    return reply(201, session_view(*s));
}

ApiResponse PuzzleService::get(const std::string& id) const {
    auto s = find(id);
    if (!s) return error(404, "unknown session");
    std::lock_guard lock(s->mutex);
    return reply(200, session_view(*s));
}

ApiResponse PuzzleService::click(const std::string& id, std::string_view body) {
    auto s = find(id);
    if (!s) return error(404, "unknown session");
    std::size_t vertex = 0;
    try {
        const json j = parse_json(body);
        if (!j.is_object() || !j.contains("vertex") || !j["vertex"].is_number_integer())
            throw BadRequest("body must be {\"vertex\": <index>}");
        if (j["vertex"].get<long long>() < 0) throw BadRequest("vertex index out of range");
        vertex = j["vertex"].get<std::size_t>();
    } catch (const BadRequest& e) {
        return error(400, e.what());
    }
    if (vertex >= s->graph.n_vertices) return error(400, "vertex index out of range");

    std::lock_guard lock(s->mutex);
    s->state ^= s->system->adjacency().row(vertex);
    s->history.push_back(vertex);
    s->updated_at = now_iso8601();
    snapshot(*s);
    return reply(200, session_view(*s));
}

ApiResponse PuzzleService::undo(const std::string& id) {
    auto s = find(id);
    if (!s) return error(404, "unknown session");
    std::lock_guard lock(s->mutex);
    if (s->history.empty()) return error(409, "nothing to undo");
    s->state ^= s->system->adjacency().row(s->history.back());
    s->history.pop_back();
    s->updated_at = now_iso8601();
    snapshot(*s);
    return reply(200, session_view(*s));
}

ApiResponse PuzzleService::reset(const std::string& id) {
    auto s = find(id);
    if (!s) return error(404, "unknown session");
    std::lock_guard lock(s->mutex);
    s->state = s->initial;
    s->history.clear();
    s->updated_at = now_iso8601();
    snapshot(*s);
    return reply(200, session_view(*s));
}

ApiResponse PuzzleService::hint(const std::string& id, std::string_view target_name) const {
    auto s = find(id);
    if (!s) return error(404, "unknown session");
    BitVec state;
    std::string updated_at;
    {
        std::lock_guard lock(s->mutex);
        state = s->state;
        updated_at = s->updated_at;
    }
    BitVec target;
    try {
        target = parse_target(target_name, s->graph);
    } catch (const BadRequest& e) {
        return error(400, e.what());
    }

    json out;
    out["target"] = target.to_string();
    out["nullity"] = s->system->solver().nullity();
    auto result = s->system->minimal(state, target, config_.nullity_budget);
    out["solvable"] = result.has_value();
    if (result) {
        out["clicks"] = result->clicks.clicks.indices();
        out["weight"] = result->clicks.weight();
        out["minimal"] = result->minimal;
    }
    out["updated_at"] = updated_at;
    return reply(200, out);
}

ApiResponse PuzzleService::consistency(const std::string& id) const {
    auto s = find(id);
    if (!s) return error(404, "unknown session");
    std::lock_guard lock(s->mutex);
    BitVec clicks(s->graph.n_vertices);
    for (auto v : s->history) clicks.flip(v);
    const bool ok = s->system->apply(s->initial, clicks) == s->state;
    return reply(200, json{{"consistent", ok}, {"updated_at", s->updated_at}});
}

ApiResponse PuzzleService::health() const {
    return reply(200, json{{"status", "ok"}, {"sessions", session_count()}});
}

void PuzzleService::mount(httplib::Server& server) {
    auto send = [](httplib::Response& res, const ApiResponse& r) {
        res.status = r.status;
        res.set_content(r.body, "application/json");
    };
    server.Get("/health", [this, send](const httplib::Request&, httplib::Response& res) { send(res, health()); });
    server.Post("/puzzles", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, create(req.body));
    });
    server.Get(R"(/puzzles/([0-9a-f]+))", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, get(req.matches[1]));
    });
    server.Post(R"(/puzzles/([0-9a-f]+)/click)",
                [this, send](const httplib::Request& req, httplib::Response& res) {
                    send(res, click(req.matches[1], req.body));
                });
    server.Post(R"(/puzzles/([0-9a-f]+)/undo)", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, undo(req.matches[1]));
    });
    server.Post(R"(/puzzles/([0-9a-f]+)/reset)", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, reset(req.matches[1]));
    });
    server.Get(R"(/puzzles/([0-9a-f]+)/hint)", [this, send](const httplib::Request& req, httplib::Response& res) {
        send(res, hint(req.matches[1], req.get_param_value("target")));
    });
    if (config_.debug_endpoints) {
        server.Get(R"(/puzzles/([0-9a-f]+)/consistency)",
                   [this, send](const httplib::Request& req, httplib::Response& res) {
                       send(res, consistency(req.matches[1]));
                   });
    }
}

HttpServer::HttpServer(ServiceConfig config)
    : service_(std::make_unique<PuzzleService>(std::move(config))), server_(std::make_unique<httplib::Server>()) {
    service_->mount(*server_);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) return server_->bind_to_any_port(host);
    return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return server_->listen_after_bind(); }

void HttpServer::stop() {
    if (server_) server_->stop();
}

}  // namespace lightsout
