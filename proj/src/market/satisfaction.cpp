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

#include "gridex/market/satisfaction.hpp"

#include <map>
#include <sstream>

namespace gridex {
namespace market {

using ledger::EventKind;

SatisfactionReport ComputeSatisfaction(std::span<ledger::Receipt const> receipts,
                                       std::span<DemandIntent const> intents,
                                       contract::ProtocolParams const &params)
{
  struct Opening
  {
    Address  seller;
    uint64_t base_price;
  };

  std::map<Address, uint64_t> max_price;
  for (auto const &intent : intents)
  {
    auto &price = max_price[intent.buyer];
    price       = std::max(price, intent.max_price);
  }

  std::map<AuctionId, Opening>          openings;
  std::map<AuctionId, contract::SettlementMode> modes;
  std::map<AuctionId, int64_t>          net_escrow;
  std::map<Address, ParticipantSurplus> buyers;
  std::map<Address, ParticipantSurplus> sellers;
  for (auto const &[buyer, price] : max_price)
  {
    buyers[buyer].address = buyer;
  }

  SatisfactionReport report;
  uint64_t           price_sum = 0;

  for (auto const &receipt : receipts)
  {
    if (!receipt.status.accepted())
    {
      continue;
    }
    for (auto const &event : receipt.events)
    {
      if (!event.auction)
      {
        continue;
      }
      switch (event.kind)
      {
      case EventKind::AuctionOpened:
        openings[*event.auction] = {event.from, event.amount};
        break;
      case EventKind::BidAccepted:
        net_escrow[*event.auction] += static_cast<int64_t>(event.amount);
        break;
      case EventKind::BidRefunded:
        net_escrow[*event.auction] -= static_cast<int64_t>(event.amount);
        break;
      case EventKind::BondMinted:
        modes[*event.auction] = contract::SettlementMode::BondAllowed;
        break;
      case EventKind::AuctionSettled:
      {
        uint64_t const price = event.amount;
        auto const     open  = openings.find(*event.auction);
        uint64_t const base  = open == openings.end() ? price : open->second.base_price;

        auto &seller = sellers[event.from];
        seller.address = event.from;
        seller.surplus += static_cast<int64_t>(price) - static_cast<int64_t>(base);
        seller.auctions += 1;
        seller.volume += price;

        auto &buyer = buyers[event.to];
        buyer.address = event.to;
        auto const cap = max_price.find(event.to);
        if (cap != max_price.end())
        {
          buyer.surplus += static_cast<int64_t>(cap->second) - static_cast<int64_t>(price);
        }
        buyer.auctions += 1;
        buyer.volume += price;

        if (modes.count(*event.auction) == 0)
        {
          report.cash_paid_by_buyers += static_cast<uint64_t>(net_escrow[*event.auction]);
          report.cash_received_by_sellers += price;
        }
        report.settled += 1;
        price_sum += price;
        break;
      }
      case EventKind::AuctionDiscarded:
      {
        auto &seller = sellers[event.from];
        seller.address = event.from;
        seller.surplus -= static_cast<int64_t>(params.gas_fee);
        seller.auctions += 1;
        report.discarded += 1;
        break;
      }
      default:
        break;
      }
    }
  }

  uint64_t matched = 0;
  for (auto const &[address, entry] : buyers)
  {
    report.buyers.push_back(entry);
    report.total_buyer_surplus += entry.surplus;
    if (max_price.count(address) != 0 && entry.auctions > 0)
    {
      ++matched;
    }
  }
  for (auto const &[address, entry] : sellers)
  {
    report.sellers.push_back(entry);
    report.total_seller_surplus += entry.surplus;
  }

  report.match_rate = max_price.empty() ? 0.0 : static_cast<double>(matched) / static_cast<double>(max_price.size());
  report.mean_clearing_price =
      report.settled == 0 ? 0.0 : static_cast<double>(price_sum) / static_cast<double>(report.settled);
  return report;
}

nlohmann::json ToJson(SatisfactionReport const &report)
{
  auto rows = [](std::vector<ParticipantSurplus> const &entries) {
    auto out = nlohmann::json::array();
    for (auto const &entry : entries)
    {
      out.push_back({{"address", entry.address.ToHex()},
                     {"surplus", entry.surplus},
                     {"auctions", entry.auctions},
                     {"volume", entry.volume}});
    }
    return out;
  };

  return {{"buyers", rows(report.buyers)},
          {"sellers", rows(report.sellers)},
          {"total_buyer_surplus", report.total_buyer_surplus},
          {"total_seller_surplus", report.total_seller_surplus},
          {"settled", report.settled},
          {"discarded", report.discarded},
          {"cash_paid_by_buyers", report.cash_paid_by_buyers},
          {"cash_received_by_sellers", report.cash_received_by_sellers},
          {"match_rate", report.match_rate},
          {"mean_clearing_price", report.mean_clearing_price}};
}

std::string ToCsv(SatisfactionReport const &report)
{
  std::ostringstream out;
  out << "role,address,surplus,auctions,volume\n";
  for (auto const &entry : report.buyers)
  {
    out << "buyer," << entry.address.ToHex() << ',' << entry.surplus << ',' << entry.auctions << ','
        << entry.volume << '\n';
  }
  for (auto const &entry : report.sellers)
  {
    out << "seller," << entry.address.ToHex() << ',' << entry.surplus << ',' << entry.auctions << ','
        << entry.volume << '\n';
  }
  return out.str();
}

}  // namespace market
}  // namespace gridex
