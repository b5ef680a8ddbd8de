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

#include "gridex/service/event_bus.hpp"

#include <algorithm>

namespace gridex {
namespace service {

nlohmann::json StreamEvent::ToJson() const
{
  return {{"seq", seq}, {"type", type}, {"height", height}, {"data", data}};
}

std::string StreamEvent::Frame() const
{
  return "id: " + std::to_string(seq) + "\nevent: " + type + "\ndata: " + ToJson().dump() + "\n\n";
}

std::optional<std::vector<StreamEvent>> EventBus::Subscription::Next(std::chrono::milliseconds timeout)
{
  std::unique_lock lock(mutex_);
  ready_.wait_for(lock, timeout, [this] { return closed_ || !pending_.empty(); });
  if (pending_.empty() && closed_)
  {
    return std::nullopt;
  }
  std::vector<StreamEvent> out(pending_.begin(), pending_.end());
  pending_.clear();
  return out;
}

bool EventBus::Subscription::closed() const
{
  std::lock_guard lock(mutex_);
  return closed_;
}

uint64_t EventBus::Publish(std::string type, uint64_t height, nlohmann::json data)
{
  std::lock_guard lock(mutex_);
  StreamEvent     event{++seq_, std::move(type), height, std::move(data)};

  history_.push_back(event);
  if (history_.size() > HISTORY_LIMIT)
  {
    history_.pop_front();
  }

  for (auto const &subscriber : subscribers_)
  {
    std::lock_guard sub_lock(subscriber->mutex_);
    if (subscriber->closed_)
    {
      continue;
    }
    if (subscriber->pending_.size() >= QUEUE_LIMIT)
    {
      subscriber->closed_ = true;
    }
    else
    {
      subscriber->pending_.push_back(event);
    }
    subscriber->ready_.notify_all();
  }
  return event.seq;
}

std::shared_ptr<EventBus::Subscription> EventBus::Subscribe(std::optional<uint64_t> after_seq)
{
  auto            subscription = std::make_shared<Subscription>();
  std::lock_guard lock(mutex_);
  if (closed_)
  {
    subscription->closed_ = true;
    return subscription;
  }
  if (after_seq)
  {
    for (auto const &event : history_)
    {
      if (event.seq > *after_seq)
      {
        subscription->pending_.push_back(event);
      }
    }
  }
  subscribers_.push_back(subscription);
  return subscription;
}

void EventBus::Unsubscribe(std::shared_ptr<Subscription> const &subscription)
{
  std::lock_guard lock(mutex_);
  subscribers_.erase(std::remove(subscribers_.begin(), subscribers_.end(), subscription), subscribers_.end());
}

void EventBus::Close()
{
  std::lock_guard lock(mutex_);
  closed_ = true;
  for (auto const &subscriber : subscribers_)
  {
    std::lock_guard sub_lock(subscriber->mutex_);
    subscriber->closed_ = true;
    subscriber->ready_.notify_all();
  }
  subscribers_.clear();
}

uint64_t EventBus::last_seq() const
{
  std::lock_guard lock(mutex_);
  return seq_;
}

}  // namespace service
}  // namespace gridex
