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

#include "revmine/audit_server.h"

#include <mutex>

#include <httplib.h>

#include <json.hpp>

#include "revmine/errors.h"

namespace revmine {

using nlohmann::json;

namespace {

json ItemToJson(const AuditItem& item, const StopwordList& stopwords) {
  auto passage = SplitOnSpaces(item.passage);
  auto summary = SplitOnSpaces(item.summary);
  json j = {{"item_id", item.item_id},
            {"passage", item.passage},
            {"summary", item.summary},
            {"score", item.score},
            {"label", LabelName(item.label)},
            {"shared_tokens", ContentTokens(summary, stopwords)
                                  .Intersection(ContentTokens(passage, stopwords))}};
  j["labeled_at"] =
      item.labeled_at ? json(FormatTimestamp(*item.labeled_at)) : json();
  return j;
}

json RowToJson(const ThresholdRow& row) {
  json j = {{"lambda", row.lambda},
            {"good_count", row.good_count},
            {"unsupported_count", row.unsupported_count},
            {"corpus_size_at_lambda", row.corpus_size_at_lambda}};
  j["good_rate"] = row.good_rate ? json(*row.good_rate) : json();
  return j;
}

void Reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(-1, ' ', false, json::error_handler_t::replace),
                  "application/json; charset=utf-8");
}

void ReplyError(httplib::Response& res, int status, const std::string& what) {
  Reply(res, status, json{{"error", what}});
}

}  // namespace

std::string AuditItemJson(const AuditItem& item, const StopwordList& stopwords) {
  return ItemToJson(item, stopwords).dump();
}

struct AuditServer::Impl {
  AuditStore* store;
  const StopwordList* stopwords;
  AuditServerOptions options;
  httplib::Server server;
  int port = 0;
  // A stop that lands before the accept loop starts must not be lost.
  std::mutex mu;
  bool stop_requested = false;
  bool serving = false;
};

AuditServer::AuditServer(AuditStore* store, const StopwordList& stopwords,
                         AuditServerOptions options)
    : impl_(std::make_unique<Impl>()) {
  impl_->store = store;
  impl_->stopwords = &stopwords;
  impl_->options = std::move(options);
  Impl* s = impl_.get();
  httplib::Server& srv = s->server;

  srv.Get("/api/session", [s](const httplib::Request&, httplib::Response& res) {
    AuditState state = s->store->Snapshot();
    json items = json::array();
    size_t labeled = 0;
    for (const auto& item : state.items) {
      items.push_back(ItemToJson(item, *s->stopwords));
      if (item.label != Label::kUnlabeled) ++labeled;
    }
    Reply(res, 200, json{{"items", std::move(items)},
                         {"labeled", labeled},
                         {"total", state.items.size()}});
  });

  srv.Post("/api/label", [s](const httplib::Request& req,
                             httplib::Response& res) {
    json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded() || !body.is_object() ||
        !body.contains("item_id") || !body["item_id"].is_string() ||
        !body.contains("label") || !body["label"].is_string()) {
      ReplyError(res, 400, "body must be {\"item_id\": string, \"label\": string}");
      return;
    }
    try {
      Label label = ParseLabel(body["label"].get<std::string>());
      AuditItem item = s->store->Label(body["item_id"].get<std::string>(), label);
      Reply(res, 200, ItemToJson(item, *s->stopwords));
    } catch (const NotFoundError& e) {
      ReplyError(res, 404, e.what());
    } catch (const InputError& e) {
      ReplyError(res, 400, e.what());
    } catch (const IoError& e) {
      ReplyError(res, 500, e.what());
    }
  });

  srv.Get("/api/report", [s](const httplib::Request& req,
                             httplib::Response& res) {
    try {
      std::vector<double> lambdas = kDefaultReportLambdas;
      if (req.has_param("lambdas")) {
        lambdas = ParseLambdaList(req.get_param_value("lambdas"));
      }
      json rows = json::array();
      for (const auto& row : s->store->Report(lambdas)) rows.push_back(RowToJson(row));
      Reply(res, 200, rows);
    } catch (const InputError& e) {
      ReplyError(res, 400, e.what());
    }
  });

  srv.Get("/api/next", [s](const httplib::Request&, httplib::Response& res) {
    auto next = s->store->NextUnlabeled();
    Reply(res, 200,
          json{{"item", next ? ItemToJson(*next, *s->stopwords) : json()}});
  });

  srv.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      ReplyError(res, res.status, res.status == 404 ? "not found" : "error");
    }
  });
  srv.set_exception_handler(
      [](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string what = "internal error";
        try {
          std::rethrow_exception(ep);
        } catch (const std::exception& e) {
          what = e.what();
        } catch (...) {
        }
        ReplyError(res, 500, what);
      });

  // The library default is SO_REUSEPORT, which lets a second server share a
  // busy port silently.
  srv.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });

  if (impl_->options.static_dir) {
    srv.set_mount_point("/", impl_->options.static_dir->string());
  }
}

AuditServer::~AuditServer() { Stop(); }

int AuditServer::Bind() {
  httplib::Server& srv = impl_->server;
  const auto& opt = impl_->options;
  if (opt.port == 0) {
    impl_->port = srv.bind_to_any_port(opt.host);
  } else {
    impl_->port = srv.bind_to_port(opt.host, opt.port) ? opt.port : -1;
  }
  if (impl_->port <= 0) {
    throw IoError("cannot bind " + opt.host + ":" + std::to_string(opt.port), 0);
  }
  return impl_->port;
}

void AuditServer::Serve() {
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (impl_->stop_requested) return;
    impl_->serving = true;
  }
  impl_->server.listen_after_bind();
  std::lock_guard<std::mutex> lock(impl_->mu);
  impl_->serving = false;
}

void AuditServer::WaitUntilReady() const { impl_->server.wait_until_ready(); }

void AuditServer::Stop() {
  if (!impl_) return;
  bool serving;
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    impl_->stop_requested = true;
    serving = impl_->serving;
  }
  if (!serving) return;
  // Returns once the loop runs or has already given up.
  impl_->server.wait_until_ready();
  impl_->server.stop();
}

}  // namespace revmine
