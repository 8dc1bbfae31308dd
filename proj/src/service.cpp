#include "hdk/service.hpp"

#include <httplib.h>
#include <json.hpp>

#include "hdk/render.hpp"

namespace hdk {
namespace {

using json = nlohmann::ordered_json;

bool prefix_of(const std::vector<std::size_t>& given, const std::vector<std::size_t>& actual) {
  return given.size() <= actual.size() && std::equal(given.begin(), given.end(), actual.begin());
}

Step homotopy_step(MoveKind kind, Direction dir, const MoveLocation& loc) {
  Step step;
  step.kind = StepKind::homotopy;
  kind.inverse = dir == Direction::inverse;
  step.move = kind;
  step.direction = dir;
  step.location = loc;
  return step;
}

void lower_moves(Session& s, std::size_t height, const std::vector<std::size_t>& coords, std::vector<Step>& out) {
  Signature& sig = *s.doc.signature;
  for (const MoveOption& opt : moves_at(sig, s.state, height)) {
    MoveResult r = opt.interchange ? apply_interchange(sig, s.state, height, *opt.interchange)
                                   : apply_pullthrough(sig, s.state, height, *opt.variant, opt.direction);
    if (!prefix_of(coords, r.move.location.coords)) continue;
    Step step = homotopy_step(opt.kind, opt.direction, r.move.location);
    step.variant = opt.variant;
    out.push_back(std::move(step));
  }
}

struct Candidate {
  MoveKind kind;
  PullVariant variant;
  std::optional<GeneratorId> cell;
  std::size_t cells = 1;
};

void higher_moves(Session& s, std::size_t height, const std::vector<std::size_t>& coords, std::vector<Step>& out) {
  Signature& sig = *s.doc.signature;
  const Diagram& d = s.state;
  if (d.dim() < 4 || height >= d.entries().size()) return;
  MoveLocation loc{height, coords};
  loc.coords.resize(d.dim() - 1, 0);

  for (const auto& [name, base] : s.doc.diagrams) {
    if (base.dim() + 1 != d.dim() || base.dim() == 0) continue;
    std::vector<Candidate> candidates;
    for (GeneratorId g : sig.generators_of_dim(base.dim() + 1))
      if (!sig.at(g).synthesized)
        candidates.push_back({MoveKind{MoveFamily::III, false, false, Composite::atomic}, PullVariant::front, g,
                              sig.source(g).size()});
    for (auto f : {MoveFamily::IV, MoveFamily::V}) {
      candidates.push_back({MoveKind{f, false, false, Composite::atomic}, PullVariant::front, std::nullopt});
      candidates.push_back({MoveKind{f, true, false, Composite::atomic}, PullVariant::primed_front, std::nullopt});
    }
    for (auto v : {PullVariant::front, PullVariant::rear, PullVariant::primed_front, PullVariant::primed_rear})
      candidates.push_back({MoveKind{MoveFamily::VI, false, false, Composite::atomic}, v, std::nullopt});

    for (std::size_t bh = 0; bh < base.entries().size(); ++bh) {
      for (const Candidate& c : candidates) {
        HigherMoveParams params{base, bh, c.variant, c.cells, 1, c.cell};
        for (auto dir : {Direction::forward, Direction::inverse}) {
          try {
            apply_higher_move(sig, d, loc, c.kind, params, dir);
          } catch (const Error&) {
            continue;
          }
          Step step = homotopy_step(c.kind, dir, loc);
          if (c.kind.family != MoveFamily::IV && c.kind.family != MoveFamily::V) step.variant = c.variant;
          step.params.base = name;
          step.params.base_height = bh;
          if (c.cell) {
            step.params.cell = sig.name(*c.cell);
            step.params.cells = c.cells;
          }
          out.push_back(std::move(step));
        }
      }
    }
  }
}

// ---- HTTP plumbing ----

json error_body(ErrorCode code, const std::string& message) {
  return json{{"error", std::string(to_string(code))}, {"message", message}};
}

void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void fail(httplib::Response& res, int status, ErrorCode code, const std::string& message) {
  reply(res, status, error_body(code, message));
}

json summary(const Session& s) {
  const Signature& sig = *s.doc.signature;
  json out;
  out["id"] = s.id;
  out["diagram"] = json::parse(serialize_diagram(s.state, sig));
  out["dim"] = s.state.dim();
  out["height"] = s.state.size();
  out["source_height"] = s.state.dim() > 0 ? s.state.source().size() : 0;
  out["history"] = s.history.size();
  return out;
}

std::vector<std::size_t> parse_coords(const std::string& text) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  std::size_t at = 0;
  while (at <= text.size()) {
    std::size_t comma = text.find(',', at);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(std::stoul(text.substr(at, comma - at)));
    at = comma + 1;
  }
  return out;
}

}  // namespace

Session::Session(std::string id_, ProofDocument doc_, Diagram start_)
    : id(std::move(id_)), doc(std::move(doc_)), start(start_), state(std::move(start_)) {}

std::vector<Step> applicable_steps(Session& session, std::size_t height, const std::vector<std::size_t>& coords) {
  std::vector<Step> out;
  lower_moves(session, height, coords, out);
  higher_moves(session, height, coords, out);
  return out;
}

std::string Service::create(const std::string& text) {
  ProofDocument doc = parse_document(text);
  if (!doc.proof) throw Error(ErrorCode::StepInapplicable, "document has no proof section");
  Report r = check_document(doc);
  if (r.failure) throw Error(r.failure->code, r.failure->message);
  Diagram start = doc.diagram(doc.proof->start);
  std::unique_lock lock(mutex_);
  std::string id = "s" + std::to_string(next_++);
  sessions_.emplace(id, std::make_shared<Session>(id, std::move(doc), std::move(start)));
  return id;
}

std::shared_ptr<Session> Service::find(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

void Service::mount(httplib::Server& server) {
  // Looks the session up and runs `body`, mapping kernel errors to responses.
  auto with_session = [this](const httplib::Request& req, httplib::Response& res, auto&& body) {
    auto session = find(req.path_params.at("id"));
    if (!session) return fail(res, 404, ErrorCode::UnknownReference, "no session " + req.path_params.at("id"));
    try {
      body(*session);
    } catch (const Error& e) {
      const int status = e.code() == ErrorCode::SyntaxError ? 400 : 409;
      fail(res, status, e.code(), e.what());
    } catch (const std::exception& e) {
      fail(res, 400, ErrorCode::SyntaxError, e.what());
    }
  };

  server.Post("/sessions", [this](const httplib::Request& req, httplib::Response& res) {
    try {
      reply(res, 201, json{{"id", create(req.body)}});
    } catch (const Error& e) {
      fail(res, 422, e.code(), e.what());
    }
  });

  server.Get("/sessions/:id/state", [with_session](const httplib::Request& req, httplib::Response& res) {
    with_session(req, res, [&](Session& s) {
      std::shared_lock lock(s.mutex);
      reply(res, 200, summary(s));
    });
  });

  server.Get("/sessions/:id/moves", [with_session](const httplib::Request& req, httplib::Response& res) {
    with_session(req, res, [&](Session& s) {
      if (!req.has_param("height")) return fail(res, 400, ErrorCode::SyntaxError, "missing height");
      std::size_t height;
      std::vector<std::size_t> coords;
      try {
        height = std::stoul(req.get_param_value("height"));
        coords = parse_coords(req.get_param_value("coords"));
      } catch (const std::exception&) {
        return fail(res, 400, ErrorCode::SyntaxError, "height and coords must be natural numbers");
      }
      std::shared_lock lock(s.mutex);
      json moves = json::array();
      for (const Step& step : applicable_steps(s, height, coords)) {
        json entry;
        entry["label"] = step.move.to_string() + (step.variant ? " " + std::string(to_string(*step.variant)) : "");
        entry["step"] = json::parse(serialize_step(step));
        moves.push_back(std::move(entry));
      }
      reply(res, 200, json{{"moves", moves}});
    });
  });

  server.Post("/sessions/:id/apply", [with_session](const httplib::Request& req, httplib::Response& res) {
    with_session(req, res, [&](Session& s) {
      Step step = parse_step(req.body);
      std::unique_lock lock(s.mutex);
      Diagram next = apply_step(s.state, step, s.doc);
      s.states.push_back(s.state);
      s.history.push_back(step);
      s.state = std::move(next);
      reply(res, 200, summary(s));
    });
  });

  server.Post("/sessions/:id/undo", [with_session](const httplib::Request& req, httplib::Response& res) {
    with_session(req, res, [&](Session& s) {
      std::unique_lock lock(s.mutex);
      if (s.history.empty()) return fail(res, 409, ErrorCode::StepInapplicable, "nothing to undo");
      s.state = s.states.back();
      s.states.pop_back();
      s.history.pop_back();
      reply(res, 200, summary(s));
    });
  });

  server.Get("/sessions/:id/projection", [with_session](const httplib::Request& req, httplib::Response& res) {
    with_session(req, res, [&](Session& s) {
      std::shared_lock lock(s.mutex);
      Scene scene = project(s.state, *s.doc.signature);
      if (req.get_param_value("format") == "svg")
        res.set_content(scene_to_svg(scene), "image/svg+xml");
      else
        res.set_content(scene_to_json(scene), "application/json");
    });
  });

  server.Get("/sessions/:id/export", [with_session](const httplib::Request& req, httplib::Response& res) {
    with_session(req, res, [&](Session& s) {
      std::shared_lock lock(s.mutex);
      ProofDocument out;
      out.version = s.doc.version;
      out.signature = s.doc.signature;
      out.diagrams = s.doc.diagrams;
      out.proof = s.doc.proof;
      out.proof->steps = s.history;
      res.set_content(serialize_document(out), "application/json");
    });
  });
}

}  // namespace hdk
