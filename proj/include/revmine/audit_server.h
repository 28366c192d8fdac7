// Copyright 2026 The Revmine Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REVMINE_AUDIT_SERVER_H_
#define REVMINE_AUDIT_SERVER_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "revmine/audit.h"
#include "revmine/textproc.h"

namespace revmine {

struct AuditServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  // Static files (the audit UI bundle) mounted at "/" when set.
  std::optional<std::filesystem::path> static_dir;
};

// JSON rendering of an item, including the shared content words between
// passage and summary for highlighting.
std::string AuditItemJson(const AuditItem& item, const StopwordList& stopwords);

// HTTP+JSON front end over an AuditStore:
//   GET  /api/session   {"items": [...], "labeled": n, "total": m}
//   POST /api/label     {"item_id", "label"} -> item
//   GET  /api/report    ?lambdas=0.5,0.6,0.7 -> [ThresholdRow...]
//   GET  /api/next      {"item": item or null}
// Errors come back as {"error": "..."} with a 4xx status.
class AuditServer {
 public:
  AuditServer(AuditStore* store, const StopwordList& stopwords,
              AuditServerOptions options = {});
  ~AuditServer();

  // Binds the socket; returns the bound port. Throws IoError on failure.
  int Bind();
  // Serves until Stop(); call after Bind().
  void Serve();
  // Blocks until Serve() is accepting connections.
  void WaitUntilReady() const;
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace revmine

#endif  // REVMINE_AUDIT_SERVER_H_
