#pragma once

#include <cstddef>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fuzzyess/errors.hpp"
#include "fuzzyess/fuzzy.hpp"

namespace fuzzyess {

using PayoffMatrix = std::vector<std::vector<TriFuzzy>>;

// Symmetric two-player game. payoff(i, j) is the payoff to a player using
// strategy i against an opponent using j.
class SymGame {
 public:
  // Throws ValidationError unless there are >= 2 unique non-empty names and
  // the matrix is square with matching dimension.
  SymGame(std::vector<std::string> strategies, PayoffMatrix payoff, std::string name = {});

  std::size_t size() const noexcept { return strategies_.size(); }
  const std::vector<std::string>& strategies() const noexcept { return strategies_; }
  const std::string& strategy(std::size_t i) const { return strategies_.at(i); }
  const TriFuzzy& payoff(std::size_t i, std::size_t j) const { return payoff_.at(i).at(j); }
  const PayoffMatrix& payoffs() const noexcept { return payoff_; }
  const std::string& name() const noexcept { return name_; }

  // Every payoff has zero half-width.
  bool is_crisp() const noexcept;
  // Index of a strategy by name, or npos.
  std::size_t find(std::string_view strategy) const noexcept;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const SymGame&, const SymGame&) = default;

 private:
  std::vector<std::string> strategies_;
  PayoffMatrix payoff_;
  std::string name_;
};

// General two-player game; payoff1(r, c) and payoff2(r, c) are the payoffs of
// the row and column player when row plays r and column plays c.
class BiGame {
 public:
  // Throws ValidationError unless each player has >= 1 unique non-empty name
  // and both matrices are |S1| x |S2|.
  BiGame(std::vector<std::string> strategies1, std::vector<std::string> strategies2, PayoffMatrix payoff1,
         PayoffMatrix payoff2, std::string name = {});

  std::size_t rows() const noexcept { return strategies1_.size(); }
  std::size_t cols() const noexcept { return strategies2_.size(); }
  const std::vector<std::string>& strategies1() const noexcept { return strategies1_; }
  const std::vector<std::string>& strategies2() const noexcept { return strategies2_; }
  const TriFuzzy& payoff1(std::size_t r, std::size_t c) const { return payoff1_.at(r).at(c); }
  const TriFuzzy& payoff2(std::size_t r, std::size_t c) const { return payoff2_.at(r).at(c); }
  const PayoffMatrix& payoffs1() const noexcept { return payoff1_; }
  const PayoffMatrix& payoffs2() const noexcept { return payoff2_; }
  const std::string& name() const noexcept { return name_; }

  // Same strategy lists and payoff1(i, j) == payoff2(j, i) everywhere.
  bool is_symmetric() const noexcept;

  friend bool operator==(const BiGame&, const BiGame&) = default;

 private:
  std::vector<std::string> strategies1_;
  std::vector<std::string> strategies2_;
  PayoffMatrix payoff1_;
  PayoffMatrix payoff2_;
  std::string name_;
};

using Game = std::variant<SymGame, BiGame>;

// Parses the JSON game document. Throws ParseError for malformed input
// (including a location) and ValidationError for invariant violations.
Game parse_game(std::string_view text);
// Reads and parses a file; an unreadable path is reported as ParseError.
Game load_game(const std::filesystem::path& path);

std::string serialize_game(const SymGame& game);
std::string serialize_game(const BiGame& game);
std::string serialize_game(const Game& game);

// Bimatrix form: payoff1(i, j) = payoff(i, j), payoff2(i, j) = payoff(j, i).
BiGame symmetrize(const SymGame& game);

struct RandomGameParams {
  double center_lo = 0.0;
  double center_hi = 10.0;
  double width_lo = 0.0;
  double width_hi = 3.0;
};

// Strategies are named s1..sN; entries are drawn row-major, center then
// half-width, from uniform doubles built from the raw 64-bit engine output so
// the sequence is identical on every platform.
SymGame random_symmetric_game(std::mt19937_64& rng, std::size_t size, const RandomGameParams& params = {});

}  // namespace fuzzyess
