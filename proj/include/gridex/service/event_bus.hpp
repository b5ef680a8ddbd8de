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

#include <json.hpp>

#include <chrono>
#include <condition_variable>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace gridex {
namespace service {

struct StreamEvent
{
  uint64_t       seq{0};
  std::string    type;  ///< "receipt" or "head"
  uint64_t       height{0};
  nlohmann::json data;

  nlohmann::json ToJson() const;
  /// Server-sent event frame with the sequence number as its id.
  std::string Frame() const;
};

/**
 * Fan-out of ledger events to stream subscribers. Sequence numbers start at 1
 * and increase by one per published event. A subscriber sees every event
 * published after it subscribed, in order; one that falls more than its
 * queue limit behind is closed rather than skipped forward.
 */
class EventBus
{
public:
  static constexpr std::size_t HISTORY_LIMIT = 4096;
  static constexpr std::size_t QUEUE_LIMIT   = 65536;

  class Subscription
  {
  public:
    /// Waits up to `timeout` for events. Returns nothing once closed.
    std::optional<std::vector<StreamEvent>> Next(std::chrono::milliseconds timeout);
    bool                                    closed() const;

  private:
    friend class EventBus;

    mutable std::mutex      mutex_;
    std::condition_variable ready_;
    std::deque<StreamEvent> pending_;
    bool                    closed_{false};
  };

  uint64_t Publish(std::string type, uint64_t height, nlohmann::json data);

  /// Replays retained history after `after_seq` first, when given.
  std::shared_ptr<Subscription> Subscribe(std::optional<uint64_t> after_seq = std::nullopt);
  void                          Unsubscribe(std::shared_ptr<Subscription> const &subscription);

  /// Closes every subscription; later subscriptions start closed.
  void Close();

  uint64_t last_seq() const;

private:
  mutable std::mutex                         mutex_;
  uint64_t                                   seq_{0};
  bool                                       closed_{false};
  std::deque<StreamEvent>                    history_;
  std::vector<std::shared_ptr<Subscription>> subscribers_;
};

}  // namespace service
}  // namespace gridex
