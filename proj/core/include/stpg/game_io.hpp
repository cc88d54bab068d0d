#ifndef STPG_GAME_IO_HPP
#define STPG_GAME_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "stpg/bayesian_game.hpp"

namespace stpg {

/// On-disk description of a Bayesian game (JSON, UTF-8). Indices are 1-based;
/// payoff cells hold `null` exactly at inadmissible coordinates; the required
/// header field `order` must be "lex-tma" (type-major, action-minor, player 1
/// most significant).
struct GameDocument {
  int players = 0;
  std::vector<int> types;
  std::vector<int> actions;
  std::vector<std::vector<std::vector<int>>> admissible;
  std::vector<double> prior;
  std::vector<std::vector<std::optional<double>>> payoffs;
};

/// Throws ParseError on malformed JSON or missing/ill-typed fields.
GameDocument document_from_text(const std::string& text);

/// Validates and builds the padded game. Throws ValidationError with a
/// field/coordinate diagnostic.
BayesianGame to_game(const GameDocument& doc);

GameDocument document_of(const BayesianGame& g);

/// document_from_text + to_game.
BayesianGame parse_game(const std::string& text);

/// Reads a game file. Throws ParseError when the file cannot be read.
BayesianGame load_game(const std::string& path);

std::string serialize_game(const BayesianGame& g);

}  // namespace stpg

#endif  // STPG_GAME_IO_HPP
