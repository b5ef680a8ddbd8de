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

#include "gridex/service/api_error.hpp"

namespace gridex {
namespace service {

ApiError::ApiError(std::string code, std::string const &message, int http_status)
  : std::runtime_error(message)
  , code_(std::move(code))
  , http_status_(http_status)
{}

ApiError ApiError::NotFound(std::string const &message)
{
  return {"NOT_FOUND", message, 404};
}

ApiError ApiError::BadRequest(std::string const &message)
{
  return {"BAD_REQUEST", message, 400};
}

ApiError ApiError::Internal(std::string const &message)
{
  return {"INTERNAL", message, 500};
}

ApiError ApiError::Rejected(ledger::RejectReason reason, std::string const &message)
{
  return {ledger::ReasonCode(reason), message, 400};
}

nlohmann::json ApiError::ToJson() const
{
  return {{"error", {{"code", code_}, {"message", what()}}}};
}

ApiError ApiError::FromJson(nlohmann::json const &doc, int http_status)
{
  if (!doc.is_object() || !doc.contains("error"))
  {
    throw std::invalid_argument("not an error envelope");
  }
  auto const &error = doc.at("error");
  auto        code  = error.at("code").get<std::string>();
  if (!IsApiErrorCode(code))
  {
    throw std::invalid_argument("unknown error code " + code);
  }
  return {std::move(code), error.value("message", std::string{}), http_status};
}

bool IsApiErrorCode(std::string_view code)
{
  return code == "NOT_FOUND" || code == "BAD_REQUEST" || code == "INTERNAL" ||
         ledger::ReasonFromCode(code).has_value();
}

}  // namespace service
}  // namespace gridex
