#pragma once

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "hdk/proofdoc.hpp"

namespace httplib {
class Server;
}

namespace hdk {

struct Session {
  std::string id;
  ProofDocument doc;
  Diagram start;
  Diagram state;
  std::vector<Step> history;
  std::vector<Diagram> states;  // states[k] is the state before history[k]
  mutable std::shared_mutex mutex;  // apply and undo take it exclusively

  Session(std::string id, ProofDocument doc, Diagram start);
};

/// In-memory sessions over proof documents, served over HTTP.
class Service {
 public:
  /// Parses `text`, replays its steps and registers a session. Throws on
  /// parse or replay failure.
  std::string create(const std::string& text);
  std::shared_ptr<Session> find(const std::string& id) const;

  /// Registers the routes on `server`.
  void mount(httplib::Server& server);

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::size_t next_ = 1;
};

/// The moves a client may apply at a location, each as a ready-to-send step.
std::vector<Step> applicable_steps(Session& session, std::size_t height,
                                   const std::vector<std::size_t>& coords);

}  // namespace hdk
