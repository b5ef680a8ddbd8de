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

#pragma once

#include "gridex/service/node_service.hpp"
#include "gridex/service/wallet.hpp"

#include <atomic>
#include <memory>
#include <string>

namespace httplib {
class Server;
}

namespace gridex {
namespace service {

/**
 * JSON API over HTTP. Routes:
 *
 *   GET  /v1/chain/head
 *   GET  /v1/blocks/{height}
 *   GET  /v1/accounts/{address}
 *   GET  /v1/auctions?status=open|settled|discarded
 *   GET  /v1/auctions/{id}
 *   GET  /v1/lots/{id}
 *   GET  /v1/lots/{id}/trace
 *   GET  /v1/bonds/{id}
 *   GET  /v1/tx/{id}
 *   POST /v1/tx                  {"tx": "<canonical signed bytes, hex>"}
 *   GET  /v1/wallet
 *   POST /v1/wallet/{name}/sign  unsigned transaction document
 *   GET  /v1/events              server-sent events; honours Last-Event-ID
 *
 * Every read serves one snapshot. Errors use the ApiError envelope.
 */
class HttpServer
{
public:
  /// The wallet is optional; without it the sign route answers NOT_FOUND.
  HttpServer(NodeService &service, WalletStore const *wallet = nullptr);
  ~HttpServer();

  /// Binds to host:port; port 0 picks a free one. Returns the bound port or -1.
  int Bind(std::string const &host, int port);

  /// Serves until Stop(). Blocks.
  bool Serve();

  void Stop();

  bool running() const;

private:
  void Routes();

  NodeService                     &service_;
  WalletStore const               *wallet_;
  std::unique_ptr<httplib::Server> server_;
  std::atomic<bool>                stopping_{false};
};

}  // namespace service
}  // namespace gridex
