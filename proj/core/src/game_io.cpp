#include "stpg/game_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace stpg {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key) {
  if (!j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<int> int_list(const json& j, const std::string& field) {
  if (!j.is_array())
    throw ParseError(field + ": expected an array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw ParseError(field + ": expected an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

GameDocument document_from_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top-level JSON object expected");

  const json& order = require(j, "order");
  if (!order.is_string() || order.get<std::string>() != "lex-tma")
    throw ValidationError(
        "order: must be \"lex-tma\" (type-major, action-minor, player 1 most "
        "significant)");

  GameDocument doc;
  const json& players = require(j, "players");
  if (!players.is_number_integer())
    throw ParseError("players: expected an integer");
  doc.players = players.get<int>();

  doc.types = int_list(require(j, "types"), "types");
  doc.actions = int_list(require(j, "actions"), "actions");

  const json& adm = require(j, "admissible");
  if (!adm.is_array()) throw ParseError("admissible: expected an array");
  for (std::size_t i = 0; i < adm.size(); ++i) {
    if (!adm[i].is_array())
      throw ParseError("admissible[" + std::to_string(i + 1) +
                       "]: expected an array of action lists");
    std::vector<std::vector<int>> per_type;
    for (std::size_t t = 0; t < adm[i].size(); ++t)
      per_type.push_back(int_list(adm[i][t], "admissible[" +
                                                 std::to_string(i + 1) + "][" +
                                                 std::to_string(t + 1) + "]"));
    doc.admissible.push_back(std::move(per_type));
  }

  const json& prior = require(j, "prior");
  if (!prior.is_array()) throw ParseError("prior: expected an array");
  for (const auto& v : prior) {
    if (!v.is_number())
      throw ParseError("prior: expected an array of numbers");
    doc.prior.push_back(v.get<double>());
  }

  const json& payoffs = require(j, "payoffs");
  if (!payoffs.is_array()) throw ParseError("payoffs: expected an array");
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    if (!payoffs[i].is_array())
      throw ParseError("payoffs[" + std::to_string(i + 1) +
                       "]: expected an array");
    std::vector<std::optional<double>> row;
    row.reserve(payoffs[i].size());
    for (const auto& v : payoffs[i]) {
      if (v.is_null())
        row.push_back(std::nullopt);
      else if (v.is_number())
        row.push_back(v.get<double>());
      else
        throw ParseError("payoffs[" + std::to_string(i + 1) +
                         "]: entries must be numbers or null");
    }
    doc.payoffs.push_back(std::move(row));
  }
  return doc;
}

BayesianGame to_game(const GameDocument& doc) {
  if (doc.players < 1)
    throw ValidationError("players: at least one player required");
  if (static_cast<int>(doc.types.size()) != doc.players)
    throw ValidationError("types: expected " + std::to_string(doc.players) +
                          " entries, got " + std::to_string(doc.types.size()));
  if (static_cast<int>(doc.actions.size()) != doc.players)
    throw ValidationError("actions: expected " + std::to_string(doc.players) +
                          " entries, got " +
                          std::to_string(doc.actions.size()));
  RealVector prior(static_cast<Eigen::Index>(doc.prior.size()));
  for (std::size_t k = 0; k < doc.prior.size(); ++k)
    prior(static_cast<Eigen::Index>(k)) = doc.prior[k];
  return assemble(doc.types, doc.actions, doc.admissible, doc.payoffs,
                  std::move(prior));
}

GameDocument document_of(const BayesianGame& g) {
  GameDocument doc;
  doc.players = g.players();
  doc.types = g.type_cards;
  doc.actions = g.action_cards;
  doc.admissible = g.admissible;
  doc.prior.assign(g.prior.data(), g.prior.data() + g.prior.size());
  for (const auto& row : g.payoffs) {
    std::vector<std::optional<double>> out;
    out.reserve(row.size());
    for (ExtReal v : row)
      out.push_back(v.is_neg_inf() ? std::nullopt
                                   : std::optional<double>(v.value()));
    doc.payoffs.push_back(std::move(out));
  }
  return doc;
}

BayesianGame parse_game(const std::string& text) {
  return to_game(document_from_text(text));
}

BayesianGame load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read game file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_game(buf.str());
}

std::string serialize_game(const BayesianGame& g) {
  const GameDocument doc = document_of(g);
  json j;
  j["order"] = "lex-tma";
  j["players"] = doc.players;
  j["types"] = doc.types;
  j["actions"] = doc.actions;
  j["admissible"] = doc.admissible;
  j["prior"] = doc.prior;
  json rows = json::array();
  for (const auto& row : doc.payoffs) {
    json r = json::array();
    for (const auto& v : row)
      r.push_back(v.has_value() ? json(*v) : json(nullptr));
    rows.push_back(std::move(r));
  }
  j["payoffs"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace stpg
