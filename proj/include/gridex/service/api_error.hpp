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

#include "gridex/ledger/receipt.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace gridex {
namespace service {

/**
 * Error envelope for every non-2xx response:
 *
 *   {"error": {"code": "BAD_NONCE", "message": "..."}}
 *
 * Codes are the receipt rejection reasons plus NOT_FOUND, BAD_REQUEST and INTERNAL.
 */
class ApiError : public std::runtime_error
{
public:
  ApiError(std::string code, std::string const &message, int http_status);

  static ApiError NotFound(std::string const &message);
  static ApiError BadRequest(std::string const &message);
  static ApiError Internal(std::string const &message);
  static ApiError Rejected(ledger::RejectReason reason, std::string const &message);

  std::string const &code() const
  {
    return code_;
  }
  int http_status() const
  {
    return http_status_;
  }

  nlohmann::json ToJson() const;

  /// Throws std::invalid_argument when the document is not an error envelope.
  static ApiError FromJson(nlohmann::json const &doc, int http_status);

private:
  std::string code_;
  int         http_status_;
};

bool IsApiErrorCode(std::string_view code);

}  // namespace service
}  // namespace gridex
