//------------------------------------------------------------------------------
//
//   Copyright 2026 The Gridex Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "gridex/service/http_server.hpp"
#include "gridex/ledger/json.hpp"
#include "gridex/market/matching.hpp"
#include "gridex/service/api_error.hpp"

#include <httplib.h>

namespace gridex {
namespace service {

using nlohmann::json;

namespace {

constexpr auto STREAM_POLL = std::chrono::milliseconds(250);

void Reply(httplib::Response &res, json const &body, int status = 200)
{
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void ReplyError(httplib::Response &res, ApiError const &error)
{
  Reply(res, error.ToJson(), error.http_status());
}

template <typename Id>
Id ParseId(std::string const &text, char const *what)
{
  try
  {
    return Id::FromHex(text);
  }
  catch (std::exception const &)
  {
    throw ApiError::BadRequest(std::string("malformed ") + what + " '" + text + "'");
  }
}

json ParseBody(httplib::Request const &req)
{
  try
  {
    return json::parse(req.body);
  }
  catch (json::exception const &err)
  {
    throw ApiError::BadRequest(std::string("body is not JSON: ") + err.what());
  }
}

json AuctionSummary(Snapshot const &snap, contract::Auction const &auction)
{
  json doc = ledger::ToJson(auction);
  auto lot = snap.state->lots.find(auction.lot);
  doc["kwh"] = lot == snap.state->lots.end() ? json(nullptr) : json(lot->second.kwh);
  doc["blocks_remaining"] = auction.deadline_height > snap.height ? auction.deadline_height - snap.height : 0;
  bool const biddable = auction.IsOpen() && snap.height + 1 < auction.deadline_height;
  doc["next_valid_bid"] = biddable ? json(market::NextValidBid(auction)) : json(nullptr);
  return doc;
}

std::optional<contract::AuctionStatus> StatusFilter(std::string const &text)
{
  if (text.empty() || text == "all")
  {
    return std::nullopt;
  }
  for (auto status : {contract::AuctionStatus::Open, contract::AuctionStatus::Settled,
                      contract::AuctionStatus::Discarded})
  {
    if (text == contract::ToString(status))
    {
      return status;
    }
  }
  throw ApiError::BadRequest("unknown auction status '" + text + "'");
}

}  // namespace

HttpServer::HttpServer(NodeService &service, WalletStore const *wallet)
  : service_(service)
  , wallet_(wallet)
  , server_(std::make_unique<httplib::Server>())
{
  Routes();
}

HttpServer::~HttpServer()
{
  Stop();
}

int HttpServer::Bind(std::string const &host, int port)
{
  if (port == 0)
  {
    return server_->bind_to_any_port(host);
  }
  return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpServer::Serve()
{
  return server_->listen_after_bind();
}

void HttpServer::Stop()
{
  stopping_ = true;
  server_->stop();
}

bool HttpServer::running() const
{
  return server_->is_running();
}

void HttpServer::Routes()
{
  auto &srv = *server_;

  srv.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  srv.set_exception_handler([](httplib::Request const &, httplib::Response &res, std::exception_ptr ep) {
    try
    {
      std::rethrow_exception(ep);
    }
    catch (ApiError const &err)
    {
      ReplyError(res, err);
    }
    catch (std::exception const &err)
    {
      ReplyError(res, ApiError::Internal(err.what()));
    }
    catch (...)
    {
      ReplyError(res, ApiError::Internal("unknown failure"));
    }
  });
  srv.set_error_handler([](httplib::Request const &req, httplib::Response &res) {
    if (res.body.empty() && res.status == 404)
    {
      ReplyError(res, ApiError::NotFound("no route for " + req.method + " " + req.path));
    }
  });
  srv.Options(R"(/v1/.*)", [](httplib::Request const &, httplib::Response &res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type, Last-Event-ID");
    res.status = 204;
  });

  srv.Get("/v1/chain/head", [this](httplib::Request const &, httplib::Response &res) {
    auto const snap = service_.snapshot();
    Reply(res, {{"height", snap->height},
                {"hash", snap->head_hash.ToHex()},
                {"state_root", snap->state_root.ToHex()},
                {"tick", snap->blocks.back()->header.tick}});
  });

  srv.Get(R"(/v1/blocks/(\d+))", [this](httplib::Request const &req, httplib::Response &res) {
    auto const snap = service_.snapshot();
    uint64_t   height{};
    try
    {
      height = std::stoull(req.matches[1]);
    }
    catch (std::exception const &)
    {
      throw ApiError::BadRequest("height out of range");
    }
    if (height >= snap->blocks.size())
    {
      throw ApiError::NotFound("no block at height " + std::to_string(height));
    }
    json doc        = ledger::ToJson(*snap->blocks[height]);
    doc["receipts"] = json::array();
    for (auto const &receipt : snap->receipts[height])
    {
      doc["receipts"].push_back(ledger::ToJson(receipt));
    }
    Reply(res, doc);
  });

  srv.Get(R"(/v1/accounts/([^/]+))", [this](httplib::Request const &req, httplib::Response &res) {
    auto const address = ParseId<Address>(req.matches[1], "address");
    auto const next    = service_.NextNonce(address);
    auto const snap    = service_.snapshot();
    auto const account = snap->state->account(address);
    Reply(res, {{"address", address.ToHex()},
                {"balance", account.balance},
                {"nonce", account.nonce},
                {"next_nonce", std::max(next, account.nonce)},
                {"qualified", snap->state->IsQualified(address)},
                {"height", snap->height}});
  });

  srv.Get("/v1/auctions", [this](httplib::Request const &req, httplib::Response &res) {
    auto const filter = StatusFilter(req.get_param_value("status"));
    auto const snap   = service_.snapshot();
    json       list   = json::array();
    for (auto const &[id, auction] : snap->state->auctions)
    {
      if (!filter || auction.status == *filter)
      {
        list.push_back(AuctionSummary(*snap, auction));
      }
    }
    Reply(res, {{"height", snap->height}, {"auctions", list}});
  });

  srv.Get(R"(/v1/auctions/([^/]+))", [this](httplib::Request const &req, httplib::Response &res) {
    auto const id   = ParseId<AuctionId>(req.matches[1], "auction id");
    auto const snap = service_.snapshot();
    auto       it   = snap->state->auctions.find(id);
    if (it == snap->state->auctions.end())
    {
      throw ApiError::NotFound("unknown auction " + id.ToHex());
    }
    json doc       = AuctionSummary(*snap, it->second);
    doc["height"]  = snap->height;
    doc["history"] = json::array();
    auto history   = snap->auction_history.find(id);
    if (history != snap->auction_history.end())
    {
      for (auto const &entry : history->second)
      {
        json item      = ledger::ToJson(entry.event);
        item["height"] = entry.height;
        item["tx_id"]  = entry.tx_id.ToHex();
        doc["history"].push_back(std::move(item));
      }
    }
    Reply(res, doc);
  });

  srv.Get(R"(/v1/lots/([^/]+)/trace)", [this](httplib::Request const &req, httplib::Response &res) {
    auto const id   = ParseId<LotId>(req.matches[1], "lot id");
    auto const snap = service_.snapshot();
    if (!snap->provenance.Contains(id))
    {
      throw ApiError::NotFound("unknown lot " + id.ToHex());
    }
    json trace = json::array();
    for (auto const &entry : snap->provenance.Trace(id))
    {
      trace.push_back(ledger::ToJson(entry));
    }
    Reply(res, {{"lot", id.ToHex()}, {"height", snap->height}, {"trace", trace}});
  });

  srv.Get(R"(/v1/lots/([^/]+))", [this](httplib::Request const &req, httplib::Response &res) {
    auto const id   = ParseId<LotId>(req.matches[1], "lot id");
    auto const snap = service_.snapshot();
    auto       it   = snap->state->lots.find(id);
    if (it == snap->state->lots.end())
    {
      throw ApiError::NotFound("unknown lot " + id.ToHex());
    }
    Reply(res, ledger::ToJson(it->second));
  });

  srv.Get(R"(/v1/bonds/([^/]+))", [this](httplib::Request const &req, httplib::Response &res) {
    auto const id   = ParseId<BondId>(req.matches[1], "bond id");
    auto const snap = service_.snapshot();
    auto       it   = snap->state->bonds.find(id);
    if (it == snap->state->bonds.end())
    {
      throw ApiError::NotFound("unknown bond " + id.ToHex());
    }
    json doc                = ledger::ToJson(it->second);
    doc["height"]           = snap->height;
    doc["blocks_to_mature"] = it->second.maturity_height > snap->height ? it->second.maturity_height - snap->height : 0;
    Reply(res, doc);
  });

  srv.Get(R"(/v1/tx/([^/]+))", [this](httplib::Request const &req, httplib::Response &res) {
    auto const id     = ParseId<Digest32>(req.matches[1], "transaction id");
    auto const record = service_.FindTx(id);
    if (!record)
    {
      throw ApiError::NotFound("unknown transaction " + id.ToHex());
    }
    Reply(res, record->ToJson());
  });

  srv.Post("/v1/tx", [this](httplib::Request const &req, httplib::Response &res) {
    auto const body = ParseBody(req);
    if (!body.is_object() || !body.contains("tx") || !body.at("tx").is_string())
    {
      throw ApiError::BadRequest("expected {\"tx\": \"<hex>\"}");
    }
    ledger::SignedTransaction stx;
    try
    {
      stx = ledger::DecodeSignedTransaction(FromHex(body.at("tx").get<std::string>()));
    }
    catch (std::exception const &err)
    {
      throw ApiError::BadRequest(std::string("transaction does not decode: ") + err.what());
    }
    auto const result = service_.Submit(stx);
    // The first answer for a transaction is always "queued"; repeats echo it.
    Reply(res, {{"tx_id", result.record.tx_id.ToHex()},
                {"status", "queued"},
                {"duplicate", result.duplicate},
                {"current", result.record.ToJson()}},
          result.duplicate ? 200 : 202);
  });

  srv.Get("/v1/wallet", [this](httplib::Request const &, httplib::Response &res) {
    if (wallet_ == nullptr)
    {
      throw ApiError::NotFound("this node has no wallet");
    }
    json list = json::array();
    for (auto const &[name, address] : wallet_->List())
    {
      list.push_back({{"name", name}, {"address", address.ToHex()}});
    }
    Reply(res, {{"wallets", list}});
  });

  srv.Post(R"(/v1/wallet/([^/]+)/sign)", [this](httplib::Request const &req, httplib::Response &res) {
    std::string const name = req.matches[1];
    if (wallet_ == nullptr || !wallet_->Contains(name))
    {
      throw ApiError::NotFound("unknown wallet '" + name + "'");
    }
    auto       doc    = ParseBody(req);
    auto const sender = wallet_->AddressOf(name);
    if (!doc.is_object())
    {
      throw ApiError::BadRequest("expected an unsigned transaction object");
    }
    if (!doc.contains("nonce"))
    {
      doc["nonce"] = service_.NextNonce(sender);
    }
    ledger::Transaction tx;
    try
    {
      tx = ledger::TransactionFromJson(doc, sender);
    }
    catch (std::exception const &err)
    {
      throw ApiError::BadRequest(std::string("malformed transaction: ") + err.what());
    }
    try
    {
      Reply(res, ledger::ToJson(wallet_->Sign(name, std::move(tx))));
    }
    catch (WalletError const &err)
    {
      throw ApiError::Internal(err.what());
    }
  });

  srv.Get("/v1/events", [this](httplib::Request const &req, httplib::Response &res) {
    std::optional<uint64_t> resume;
    if (req.has_header("Last-Event-ID"))
    {
      try
      {
        resume = std::stoull(req.get_header_value("Last-Event-ID"));
      }
      catch (std::exception const &)
      {
        throw ApiError::BadRequest("malformed Last-Event-ID");
      }
    }
    auto subscription = service_.events().Subscribe(resume);
    res.set_header("Cache-Control", "no-cache");
    res.set_chunked_content_provider(
        "text/event-stream",
        [this, subscription](std::size_t, httplib::DataSink &sink) {
          if (stopping_)
          {
            sink.done();
            return true;
          }
          auto batch = subscription->Next(STREAM_POLL);
          if (!batch)
          {
            sink.done();
            return true;
          }
          if (batch->empty())
          {
            static constexpr char KEEPALIVE[] = ": keepalive\n\n";
            return sink.write(KEEPALIVE, sizeof(KEEPALIVE) - 1);
          }
          for (auto const &event : *batch)
          {
            auto const frame = event.Frame();
            if (!sink.write(frame.data(), frame.size()))
            {
              return false;
            }
          }
          return true;
        },
        [this, subscription](bool) { service_.events().Unsubscribe(subscription); });
  });
}

}  // namespace service
}  // namespace gridex
