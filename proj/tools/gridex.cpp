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

#include "gridex/consensus/simulator.hpp"
#include "gridex/ledger/block_log.hpp"
#include "gridex/ledger/chain.hpp"
#include "gridex/ledger/genesis.hpp"
#include "gridex/ledger/json.hpp"
#include "gridex/service/api_error.hpp"
#include "gridex/service/http_server.hpp"
#include "gridex/service/node_service.hpp"
#include "gridex/service/wallet.hpp"

#include <CLI11.hpp>
#include <httplib.h>
#include <json.hpp>

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

namespace {

using namespace gridex;
using nlohmann::json;
using service::ApiError;

constexpr int EXIT_OK    = 0;
constexpr int EXIT_ERROR = 1;
constexpr int EXIT_USAGE = 2;

constexpr char const *DEFAULT_NODE   = "http://127.0.0.1:8700";
constexpr char const *PASSPHRASE_ENV = "GRIDEX_PASSPHRASE";

class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Reported failure that is not an API error, e.g. a chain that does not verify.
class CheckFailed : public std::runtime_error
{
public:
  CheckFailed(std::string const &message, json detail)
    : std::runtime_error(message)
    , detail(std::move(detail))
  {}

  json detail;
};

bool g_json = false;

void Emit(json const &doc, std::string const &human)
{
  if (g_json)
  {
    std::cout << doc.dump(2) << '\n';
  }
  else
  {
    std::cout << human << '\n';
  }
}

std::filesystem::path DefaultWallet()
{
  if (char const *env = std::getenv("GRIDEX_WALLET"))
  {
    return env;
  }
  if (char const *home = std::getenv("HOME"))
  {
    return std::filesystem::path(home) / ".gridex" / "wallet.json";
  }
  return "wallet.json";
}

std::string Passphrase()
{
  char const *env = std::getenv(PASSPHRASE_ENV);
  if (env == nullptr)
  {
    throw UsageError(std::string("set ") + PASSPHRASE_ENV + " to the wallet passphrase");
  }
  return env;
}

std::filesystem::path GenesisSidecar(std::filesystem::path const &log)
{
  return log.string() + ".genesis.json";
}

json ReadJsonFile(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw UsageError("cannot open " + path.string());
  }
  try
  {
    return json::parse(in);
  }
  catch (json::exception const &err)
  {
    throw UsageError(path.string() + " is not valid JSON: " + err.what());
  }
}

void WriteFile(std::filesystem::path const &path, std::string const &text)
{
  std::ofstream out(path, std::ios::trunc);
  out << text;
  if (!out)
  {
    throw std::runtime_error("cannot write " + path.string());
  }
}

template <typename T>
T ParseHex(std::string const &text, char const *what)
{
  try
  {
    return T::FromHex(text);
  }
  catch (std::exception const &)
  {
    throw UsageError(std::string("malformed ") + what + " '" + text + "'");
  }
}

/// Wallet name when the wallet knows it, otherwise a hex address.
Address ResolveAddress(std::string const &text, service::WalletStore const *wallet)
{
  if (wallet != nullptr && wallet->Contains(text))
  {
    return wallet->AddressOf(text);
  }
  return ParseHex<Address>(text, "address");
}

class NodeClient
{
public:
  explicit NodeClient(std::string base)
    : base_(std::move(base))
    , client_(base_)
  {
    client_.set_connection_timeout(5);
    client_.set_read_timeout(30);
  }

  json Get(std::string const &path)
  {
    return Check(client_.Get(path));
  }

  json Post(std::string const &path, json const &body)
  {
    return Check(client_.Post(path, body.dump(), "application/json"));
  }

private:
  json Check(httplib::Result const &result)
  {
    if (!result)
    {
      throw ApiError::Internal("cannot reach node at " + base_ + ": " + httplib::to_string(result.error()));
    }
    json doc;
    try
    {
      doc = json::parse(result->body);
    }
    catch (json::exception const &)
    {
      throw ApiError::Internal("node answered " + std::to_string(result->status) + " with a non-JSON body");
    }
    if (result->status >= 300)
    {
      try
      {
        throw ApiError::FromJson(doc, result->status);
      }
      catch (std::invalid_argument const &)
      {
        throw ApiError::Internal("node answered " + std::to_string(result->status));
      }
    }
    return doc;
  }

  std::string     base_;
  httplib::Client client_;
};

// keygen ------------------------------------------------------------------

struct KeygenArgs
{
  std::string           name;
  std::filesystem::path wallet = DefaultWallet();
  std::string           seed;
};

int RunKeygen(KeygenArgs const &args)
{
  service::WalletStore store(args.wallet, Passphrase());
  Address              address;
  if (args.seed.empty())
  {
    address = store.Create(args.name);
  }
  else
  {
    address = store.Import(args.name, ParseHex<PrivateKey>(args.seed, "seed"));
  }
  auto const public_key = store.PublicKeyOf(args.name);
  Emit({{"name", args.name}, {"address", address.ToHex()}, {"public_key", public_key.ToHex()},
        {"wallet", args.wallet.string()}},
       args.name + " " + address.ToHex());
  return EXIT_OK;
}

// genesis init ------------------------------------------------------------

struct GenesisArgs
{
  std::filesystem::path    out;
  std::filesystem::path    wallet = DefaultWallet();
  std::vector<std::string> authorities;
  std::vector<std::string> funds;
  std::vector<std::string> qualify;
  uint64_t                 interval{1};
  std::size_t              threshold{0};
};

int RunGenesisInit(GenesisArgs const &args)
{
  service::WalletStore  store(args.wallet, Passphrase());
  ledger::GenesisConfig config;
  config.params.schedule.block_interval_ticks = args.interval;

  std::vector<Address> members;
  for (auto const &name : args.authorities)
  {
    if (!store.Contains(name))
    {
      throw UsageError("authority '" + name + "' is not in the wallet");
    }
    config.params.schedule.authorities.push_back({store.AddressOf(name), store.PublicKeyOf(name)});
    members.push_back(store.AddressOf(name));
  }
  if (members.size() >= crypto::MULTISIG_MIN_MEMBERS)
  {
    std::size_t const threshold = args.threshold == 0 ? members.size() / 2 + 1 : args.threshold;
    config.params.authority_account = crypto::MultisigAccount(members, threshold);
  }
  for (auto const &entry : args.funds)
  {
    auto const eq = entry.find('=');
    if (eq == std::string::npos)
    {
      throw UsageError("--fund expects <name|address>=<amount>");
    }
    config.balances[ResolveAddress(entry.substr(0, eq), &store)] += std::stoull(entry.substr(eq + 1));
  }
  for (auto const &who : args.qualify)
  {
    config.qualified.insert(ResolveAddress(who, &store));
  }

  auto const genesis = ledger::BuildGenesis(config);
  WriteFile(args.out, ledger::GenesisToJson(config).dump(2) + "\n");
  auto const hash = ledger::HeaderHash(genesis.block.header);
  Emit({{"genesis", args.out.string()}, {"hash", hash.ToHex()}, {"supply", genesis.state.supply}},
       "genesis " + hash.ToHex() + " written to " + args.out.string());
  return EXIT_OK;
}

// node run ----------------------------------------------------------------

struct NodeArgs
{
  std::filesystem::path genesis;
  std::string           listen = "127.0.0.1:8700";
  std::filesystem::path log;
  std::filesystem::path wallet = DefaultWallet();
  std::string           producer;
  unsigned              tick_ms{250};
};

service::HttpServer *g_server = nullptr;

void HandleSignal(int)
{
  if (g_server != nullptr)
  {
    g_server->Stop();
  }
}

int RunNode(NodeArgs const &args)
{
  auto const colon = args.listen.rfind(':');
  if (colon == std::string::npos)
  {
    throw UsageError("--listen expects host:port");
  }
  std::string const host = args.listen.substr(0, colon);
  int const         port = std::stoi(args.listen.substr(colon + 1));

  auto const config = ledger::GenesisFromJson(ReadJsonFile(args.genesis));

  std::optional<service::WalletStore> wallet;
  if (!args.producer.empty() || std::filesystem::exists(args.wallet))
  {
    wallet.emplace(args.wallet, Passphrase());
  }

  service::ServiceOptions options;
  options.tick_interval = std::chrono::milliseconds(args.tick_ms);
  if (!args.log.empty())
  {
    options.log_path = args.log;
    auto const sidecar = GenesisSidecar(args.log);
    if (!std::filesystem::exists(sidecar))
    {
      WriteFile(sidecar, ledger::GenesisToJson(config).dump(2) + "\n");
    }
  }
  if (!args.producer.empty())
  {
    options.producer_key = wallet->LoadKey(args.producer);
  }

  service::NodeService node(config, options);
  service::HttpServer  server(node, wallet ? &*wallet : nullptr);
  int const            bound = server.Bind(host, port);
  if (bound < 0)
  {
    throw std::runtime_error("cannot listen on " + args.listen);
  }

  g_server = &server;
  std::signal(SIGINT, HandleSignal);
  std::signal(SIGTERM, HandleSignal);

  node.Start();
  auto const snap = node.snapshot();
  std::cerr << "gridex node listening on " << host << ':' << bound << " at height " << snap->height << '\n';
  server.Serve();
  node.Stop();
  g_server = nullptr;
  return EXIT_OK;
}

// sim run -----------------------------------------------------------------

struct SimArgs
{
  std::filesystem::path   scenario;
  std::optional<uint64_t> seed;
  std::optional<uint64_t> until;
  std::filesystem::path   report;
  std::filesystem::path   csv;
};

int RunSim(SimArgs const &args)
{
  consensus::SimConfig config;
  try
  {
    config = consensus::ScenarioFromJson(ReadJsonFile(args.scenario));
  }
  catch (std::invalid_argument const &err)
  {
    throw UsageError(std::string("scenario is invalid: ") + err.what());
  }
  catch (json::exception const &err)
  {
    throw UsageError(std::string("scenario is invalid: ") + err.what());
  }
  if (args.seed)
  {
    config.seed = *args.seed;
  }
  if (args.until)
  {
    config.until_tick = *args.until;
  }

  consensus::Simulator sim(config);
  auto const           report = sim.Run();
  auto const           doc    = consensus::ToJson(report);

  if (!args.report.empty())
  {
    WriteFile(args.report, doc.dump(2) + "\n");
  }
  if (!args.csv.empty())
  {
    WriteFile(args.csv, market::ToCsv(report.satisfaction));
  }
  for (auto const &error : sim.script_errors())
  {
    std::cerr << "script: " << error << '\n';
  }

  if (args.report.empty() || g_json)
  {
    std::cout << doc.dump(2) << '\n';
  }
  else
  {
    auto const &head = report.nodes.front();
    std::cout << "seed " << report.seed << ", " << report.final_tick << " ticks, height " << head.head_height
              << ", " << (report.converged ? "converged" : "not converged") << ", "
              << report.satisfaction.settled << " settled / " << report.satisfaction.discarded << " discarded\n";
  }
  return EXIT_OK;
}

// tx ----------------------------------------------------------------------

struct TxArgs
{
  std::string           node = DEFAULT_NODE;
  std::filesystem::path wallet = DefaultWallet();
  std::string           from;
  std::optional<uint64_t> nonce;
  bool                  wait{false};

  std::string to;
  uint64_t    amount{0};
  std::string lot;
  std::string auction;
  std::string bond;
  uint64_t    base_price{0};
  uint64_t    min_increment{0};
  uint64_t    duration{0};
  std::string mode = "cash";
  uint64_t    kwh{0};
};

int SubmitTx(TxArgs const &args, std::function<ledger::Payload(service::WalletStore const &)> const &build)
{
  service::WalletStore store(args.wallet, Passphrase());
  if (!store.Contains(args.from))
  {
    throw UsageError("wallet has no key named '" + args.from + "'");
  }
  auto const sender = store.AddressOf(args.from);
  auto const payload = build(store);

  NodeClient node(args.node);
  uint64_t   nonce = 0;
  if (args.nonce)
  {
    nonce = *args.nonce;
  }
  else
  {
    nonce = node.Get("/v1/accounts/" + sender.ToHex()).at("next_nonce").get<uint64_t>();
  }

  auto const stx   = store.Sign(args.from, ledger::Transaction{sender, nonce, payload});
  auto const reply = node.Post("/v1/tx", {{"tx", ToHex(ledger::EncodeSignedTransaction(stx))}});
  auto const tx_id = reply.at("tx_id").get<std::string>();

  json outcome = {{"tx_id", tx_id}, {"status", reply.at("status")}, {"nonce", nonce}};
  if (args.wait)
  {
    auto const deadline = std::chrono::steady_clock::now() + std::chrono::seconds(60);
    json       record;
    do
    {
      std::this_thread::sleep_for(std::chrono::milliseconds(200));
      record = node.Get("/v1/tx/" + tx_id);
    } while (record.at("status") == "queued" && std::chrono::steady_clock::now() < deadline);
    outcome = record;
    if (record.at("status") == "rejected")
    {
      auto const code = record.at("reason").get<std::string>();
      throw ApiError(code, "transaction " + tx_id + " was rejected with " + code, 400);
    }
  }
  Emit(outcome, tx_id + " " + outcome.at("status").get<std::string>());
  return EXIT_OK;
}

contract::SettlementMode ParseMode(std::string const &mode)
{
  if (mode == "cash")
  {
    return contract::SettlementMode::Cash;
  }
  if (mode == "bond")
  {
    return contract::SettlementMode::BondAllowed;
  }
  throw UsageError("--mode must be cash or bond");
}

// chain verify / trace ----------------------------------------------------

struct ChainArgs
{
  std::filesystem::path log;
  std::filesystem::path genesis;
  std::string           node;
  std::string           lot;
};

ledger::Genesis GenesisForLog(ChainArgs const &args)
{
  auto path = args.genesis;
  if (path.empty())
  {
    path = GenesisSidecar(args.log);
    if (!std::filesystem::exists(path))
    {
      throw UsageError("no --genesis given and " + path.string() + " does not exist");
    }
  }
  try
  {
    return ledger::BuildGenesis(ledger::GenesisFromJson(ReadJsonFile(path)));
  }
  catch (std::invalid_argument const &err)
  {
    throw UsageError(std::string("genesis is invalid: ") + err.what());
  }
}

std::vector<ledger::Block> LoadVerifiedLog(ChainArgs const &args, ledger::Genesis const &genesis)
{
  std::ifstream in(args.log, std::ios::binary);
  if (!in)
  {
    throw UsageError("cannot open " + args.log.string());
  }
  Bytes const bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  ledger::LoadedChain loaded;
  try
  {
    loaded = ledger::ParseBlockLog(bytes);
  }
  catch (ledger::LogCorruption const &err)
  {
    throw CheckFailed(err.what(), {{"ok", false}, {"reason", err.what()}, {"offset", err.offset()}});
  }
  if (loaded.truncated_bytes > 0)
  {
    auto const reason = "log ends with a partial record of " + std::to_string(loaded.truncated_bytes) + " bytes";
    throw CheckFailed(reason, {{"ok", false}, {"reason", reason}, {"offset", loaded.valid_bytes}});
  }
  auto const verdict = ledger::VerifyChain(loaded.blocks, genesis.state);
  if (!verdict)
  {
    json detail{{"ok", false}, {"reason", verdict.reason}};
    detail["height"] = verdict.height ? json(*verdict.height) : json(nullptr);
    throw CheckFailed(verdict.reason, detail);
  }
  return std::move(loaded.blocks);
}

int RunVerify(ChainArgs const &args)
{
  auto const genesis = GenesisForLog(args);
  auto const blocks  = LoadVerifiedLog(args, genesis);
  auto const replay  = ledger::ReplayChain(blocks, genesis.state);
  auto const head    = ledger::HeaderHash(blocks.back().header);
  auto const root    = ledger::ComputeStateRoot(replay.state);
  Emit({{"ok", true},
        {"height", blocks.back().header.height},
        {"head", head.ToHex()},
        {"state_root", root.ToHex()}},
       "ok: " + std::to_string(blocks.size()) + " blocks, head " + head.ToHex());
  return EXIT_OK;
}

json TraceToJson(std::vector<ledger::ProvenanceEntry> const &trace)
{
  json list = json::array();
  for (auto const &entry : trace)
  {
    list.push_back(ledger::ToJson(entry));
  }
  return list;
}

int RunTrace(ChainArgs const &args)
{
  auto const lot = ParseHex<LotId>(args.lot, "lot id");
  json       trace;
  if (!args.log.empty())
  {
    auto const genesis = GenesisForLog(args);
    auto const blocks  = LoadVerifiedLog(args, genesis);
    try
    {
      trace = TraceToJson(ledger::TraceLot(blocks, genesis.state, lot));
    }
    catch (ledger::UnknownLotError const &err)
    {
      throw ApiError::NotFound(err.what());
    }
  }
  else
  {
    NodeClient node(args.node.empty() ? DEFAULT_NODE : args.node);
    trace = node.Get("/v1/lots/" + lot.ToHex() + "/trace").at("trace");
  }

  std::string human;
  for (auto const &entry : trace)
  {
    auto const &event = entry.at("event");
    human += std::to_string(entry.at("height").get<uint64_t>()) + " " + event.at("kind").get<std::string>() +
             " " + event.value("from", std::string("-")) + " -> " + event.value("to", std::string("-")) + "\n";
  }
  if (!human.empty())
  {
    human.pop_back();
  }
  Emit({{"lot", lot.ToHex()}, {"trace", trace}}, human);
  return EXIT_OK;
}

int ReportError(std::string const &code, std::string const &message, int exit_code, json detail = nullptr)
{
  if (g_json)
  {
    json doc{{"error", {{"code", code}, {"message", message}}}};
    if (!detail.is_null())
    {
      doc["detail"] = detail;
    }
    std::cout << doc.dump(2) << '\n';
  }
  else
  {
    std::cerr << "error: " << message << " (" << code << ")\n";
  }
  return exit_code;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"gridex: auction-based energy trading ledger"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "Machine-readable output");

  std::function<int()> action;

  KeygenArgs keygen;
  auto *keygen_cmd = app.add_subcommand("keygen", "Create a named key in the wallet");
  keygen_cmd->add_option("--name", keygen.name, "Key name")->required();
  keygen_cmd->add_option("--wallet", keygen.wallet, "Wallet file");
  keygen_cmd->add_option("--seed", keygen.seed, "Import this 32-byte hex seed instead of generating one");
  keygen_cmd->callback([&] { action = [&] { return RunKeygen(keygen); }; });

  GenesisArgs genesis;
  auto *genesis_cmd = app.add_subcommand("genesis", "Genesis helpers");
  genesis_cmd->require_subcommand(1);
  auto *genesis_init = genesis_cmd->add_subcommand("init", "Write a genesis file from wallet keys");
  genesis_init->add_option("--out", genesis.out, "Genesis file to write")->required();
  genesis_init->add_option("--wallet", genesis.wallet, "Wallet file");
  genesis_init->add_option("--authority", genesis.authorities, "Authority key name, in schedule order")->required();
  genesis_init->add_option("--fund", genesis.funds, "<name|address>=<amount>");
  genesis_init->add_option("--qualify", genesis.qualify, "Qualified participant");
  genesis_init->add_option("--interval", genesis.interval, "Block interval in ticks");
  genesis_init->add_option("--threshold", genesis.threshold, "Registry threshold (default: majority)");
  genesis_init->callback([&] { action = [&] { return RunGenesisInit(genesis); }; });

  NodeArgs node;
  auto *node_cmd = app.add_subcommand("node", "Run a node");
  node_cmd->require_subcommand(1);
  auto *node_run = node_cmd->add_subcommand("run", "Serve the HTTP API and produce blocks");
  node_run->add_option("--genesis", node.genesis, "Genesis file")->required();
  node_run->add_option("--listen", node.listen, "host:port");
  node_run->add_option("--log", node.log, "Block log");
  node_run->add_option("--wallet", node.wallet, "Wallet file");
  node_run->add_option("--producer", node.producer, "Wallet key that signs blocks");
  node_run->add_option("--tick-ms", node.tick_ms, "Milliseconds per tick");
  node_run->callback([&] { action = [&] { return RunNode(node); }; });

  SimArgs sim;
  auto *sim_cmd = app.add_subcommand("sim", "Network simulation");
  sim_cmd->require_subcommand(1);
  auto *sim_run = sim_cmd->add_subcommand("run", "Run a scenario");
  sim_run->add_option("--scenario", sim.scenario, "Scenario file")->required();
  sim_run->add_option("--seed", sim.seed, "Override the scenario seed");
  sim_run->add_option("--until", sim.until, "Override the final tick");
  sim_run->add_option("--report", sim.report, "Write the JSON report here");
  sim_run->add_option("--csv", sim.csv, "Write the satisfaction CSV here");
  sim_run->callback([&] { action = [&] { return RunSim(sim); }; });

  TxArgs tx;
  auto *tx_cmd = app.add_subcommand("tx", "Build, sign and submit a transaction");
  tx_cmd->require_subcommand(1);
  tx_cmd->add_option("--node", tx.node, "Node base URL");
  tx_cmd->add_option("--wallet", tx.wallet, "Wallet file");
  tx_cmd->add_option("--from", tx.from, "Signing key name")->required();
  tx_cmd->add_option("--nonce", tx.nonce, "Explicit nonce");
  tx_cmd->add_flag("--wait", tx.wait, "Wait for the receipt");

  auto *transfer = tx_cmd->add_subcommand("transfer", "Move funds");
  transfer->add_option("--to", tx.to)->required();
  transfer->add_option("--amount", tx.amount)->required();
  transfer->callback([&] {
    action = [&] {
      return SubmitTx(tx, [&](auto const &store) {
        return ledger::Transfer{ResolveAddress(tx.to, &store), tx.amount};
      });
    };
  });

  auto *open = tx_cmd->add_subcommand("open-auction", "Auction an energy lot");
  open->add_option("--lot", tx.lot)->required();
  open->add_option("--base-price", tx.base_price)->required();
  open->add_option("--min-increment", tx.min_increment, "0 selects the protocol default");
  open->add_option("--duration", tx.duration, "Blocks; 0 selects the protocol default");
  open->add_option("--mode", tx.mode, "cash or bond");
  open->callback([&] {
    action = [&] {
      return SubmitTx(tx, [&](auto const &) {
        return ledger::OpenAuction{ParseHex<LotId>(tx.lot, "lot id"), tx.base_price, tx.min_increment,
                                   tx.duration, ParseMode(tx.mode)};
      });
    };
  });

  auto *bid = tx_cmd->add_subcommand("bid", "Bid on an auction");
  bid->add_option("--auction", tx.auction)->required();
  bid->add_option("--amount", tx.amount)->required();
  bid->callback([&] {
    action = [&] {
      return SubmitTx(tx, [&](auto const &) {
        return ledger::PlaceBid{ParseHex<AuctionId>(tx.auction, "auction id"), tx.amount};
      });
    };
  });

  auto *mint = tx_cmd->add_subcommand("mint-lot", "Register produced energy");
  mint->add_option("--kwh", tx.kwh)->required();
  mint->callback([&] { action = [&] { return SubmitTx(tx, [&](auto const &) { return ledger::MintLot{tx.kwh}; }); }; });

  auto *redeem = tx_cmd->add_subcommand("redeem-bond", "Redeem a mature bond");
  redeem->add_option("--bond", tx.bond)->required();
  redeem->callback([&] {
    action = [&] {
      return SubmitTx(tx, [&](auto const &) { return ledger::RedeemBond{ParseHex<BondId>(tx.bond, "bond id")}; });
    };
  });

  auto *transfer_lot = tx_cmd->add_subcommand("transfer-lot", "Give a lot away");
  transfer_lot->add_option("--lot", tx.lot)->required();
  transfer_lot->add_option("--to", tx.to)->required();
  transfer_lot->callback([&] {
    action = [&] {
      return SubmitTx(tx, [&](auto const &store) {
        return ledger::TransferLot{ParseHex<LotId>(tx.lot, "lot id"), ResolveAddress(tx.to, &store)};
      });
    };
  });

  auto *transfer_bond = tx_cmd->add_subcommand("transfer-bond", "Sell or give a bond");
  transfer_bond->add_option("--bond", tx.bond)->required();
  transfer_bond->add_option("--to", tx.to)->required();
  transfer_bond->callback([&] {
    action = [&] {
      return SubmitTx(tx, [&](auto const &store) {
        return ledger::TransferBond{ParseHex<BondId>(tx.bond, "bond id"), ResolveAddress(tx.to, &store)};
      });
    };
  });

  ChainArgs chain;
  auto *chain_cmd = app.add_subcommand("chain", "Chain tools");
  chain_cmd->require_subcommand(1);
  auto *verify = chain_cmd->add_subcommand("verify", "Verify a block log from genesis");
  verify->add_option("--log", chain.log, "Block log")->required();
  verify->add_option("--genesis", chain.genesis, "Genesis file (default: <log>.genesis.json)");
  verify->callback([&] { action = [&] { return RunVerify(chain); }; });

  auto *trace_cmd = app.add_subcommand("trace", "Provenance queries");
  trace_cmd->require_subcommand(1);
  auto *trace_lot = trace_cmd->add_subcommand("lot", "Ownership chain of an energy lot");
  trace_lot->add_option("id", chain.lot, "Lot id")->required();
  trace_lot->add_option("--node", chain.node, "Ask this node");
  trace_lot->add_option("--log", chain.log, "Replay this block log instead");
  trace_lot->add_option("--genesis", chain.genesis, "Genesis file for --log");
  trace_lot->callback([&] { action = [&] { return RunTrace(chain); }; });

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::CallForHelp const &err)
  {
    return app.exit(err);
  }
  catch (CLI::CallForAllHelp const &err)
  {
    return app.exit(err);
  }
  catch (CLI::ParseError const &err)
  {
    app.exit(err);
    return EXIT_USAGE;
  }

  try
  {
    return action();
  }
  catch (UsageError const &err)
  {
    return ReportError("BAD_REQUEST", err.what(), EXIT_USAGE);
  }
  catch (CheckFailed const &err)
  {
    return ReportError("VERIFY_FAILED", err.what(), EXIT_ERROR, err.detail);
  }
  catch (ApiError const &err)
  {
    return ReportError(err.code(), err.what(), EXIT_ERROR);
  }
  catch (service::WalletError const &err)
  {
    return ReportError("BAD_REQUEST", err.what(), EXIT_USAGE);
  }
  catch (std::exception const &err)
  {
    return ReportError("INTERNAL", err.what(), EXIT_ERROR);
  }
}
