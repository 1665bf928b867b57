#include "fuzzyess/game.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fuzzyess {

using nlohmann::json;

namespace {

void check_names(const std::vector<std::string>& names, std::size_t min_count, const char* what) {
  if (names.size() < min_count) {
    throw ValidationError(std::string(what) + ": at least " + std::to_string(min_count) + " strategies required");
  }
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) throw ValidationError(std::string(what) + ": strategy names must be non-empty");
    if (!seen.insert(n).second) throw ValidationError(std::string(what) + ": duplicate strategy name '" + n + "'");
  }
}

void check_shape(const PayoffMatrix& m, std::size_t rows, std::size_t cols, const char* what) {
  const auto expected = std::to_string(rows) + "x" + std::to_string(cols);
  if (m.size() != rows) {
    throw ValidationError(std::string(what) + ": expected a " + expected + " matrix, got " + std::to_string(m.size()) +
                          " rows");
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (m[r].size() != cols) {
      throw ValidationError(std::string(what) + ": expected a " + expected + " matrix, row " + std::to_string(r) +
                            " has " + std::to_string(m[r].size()) + " entries");
    }
  }
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

class DocumentReader {
 public:
  explicit DocumentReader(const json& root) : root_(root) {
    if (!root_.is_object()) throw ParseError("document must be a JSON object", "$");
  }

  void allow_only(std::initializer_list<std::string_view> keys) const {
    for (const auto& item : root_.items()) {
      if (std::find(keys.begin(), keys.end(), item.key()) == keys.end()) {
        throw ParseError("unknown field", item.key());
      }
    }
  }

  const json& require(const std::string& key) const {
    const auto it = root_.find(key);
    if (it == root_.end()) throw ParseError("missing required field", key);
    return *it;
  }

  std::string optional_string(const std::string& key) const {
    const auto it = root_.find(key);
    if (it == root_.end()) return {};
    if (!it->is_string()) throw ParseError("expected a string", key);
    return it->get<std::string>();
  }

  std::vector<std::string> names(const std::string& key) const {
    const json& node = require(key);
    if (!node.is_array()) throw ParseError("expected an array of strategy names", key);
    std::vector<std::string> out;
    for (std::size_t k = 0; k < node.size(); ++k) {
      if (!node[k].is_string()) throw ParseError("expected a string", key + "[" + std::to_string(k) + "]");
      out.push_back(node[k].get<std::string>());
    }
    return out;
  }

  PayoffMatrix matrix(const std::string& key) const {
    const json& node = require(key);
    if (!node.is_array()) throw ParseError("expected an array of rows", key);
    PayoffMatrix out;
    for (std::size_t r = 0; r < node.size(); ++r) {
      const std::string row_path = key + "[" + std::to_string(r) + "]";
      if (!node[r].is_array()) throw ParseError("expected an array of payoffs", row_path);
      std::vector<TriFuzzy> row;
      for (std::size_t c = 0; c < node[r].size(); ++c) {
        row.push_back(entry(node[r][c], row_path + "[" + std::to_string(c) + "]"));
      }
      out.push_back(std::move(row));
    }
    return out;
  }

 private:
  static double number(const json& node, const std::string& path) {
    if (!node.is_number()) throw ParseError("expected a number", path);
    return node.get<double>();
  }

  static TriFuzzy entry(const json& node, const std::string& path) {
    double center = 0.0;
    double width = 0.0;
    if (node.is_number()) {
      center = node.get<double>();
    } else if (node.is_object()) {
      for (const auto& item : node.items()) {
        if (item.key() != "a" && item.key() != "b") throw ParseError("unknown field", path + "." + item.key());
      }
      if (!node.contains("a")) throw ParseError("missing center", path + ".a");
      if (!node.contains("b")) throw ParseError("missing half-width", path + ".b");
      center = number(node["a"], path + ".a");
      width = number(node["b"], path + ".b");
    } else {
      throw ParseError("expected a number or an {\"a\", \"b\"} object", path);
    }
    if (width < 0.0) throw ValidationError(path + ".b: half-width must be >= 0");
    try {
      return TriFuzzy(center, width);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(path + ": " + e.what());
    }
  }

  const json& root_;
};

std::string dump(double x) { return json(x).dump(); }

std::string dump_entry(const TriFuzzy& f) {
  if (f.is_crisp()) return dump(f.center());
  return "{\"a\": " + dump(f.center()) + ", \"b\": " + dump(f.half_width()) + "}";
}

void write_names(std::ostringstream& os, const char* key, const std::vector<std::string>& names) {
  os << "  \"" << key << "\": [";
  for (std::size_t k = 0; k < names.size(); ++k) os << (k ? ", " : "") << json(names[k]).dump();
  os << "]";
}

void write_matrix(std::ostringstream& os, const char* key, const PayoffMatrix& m) {
  os << "  \"" << key << "\": [\n";
  for (std::size_t r = 0; r < m.size(); ++r) {
    os << "    [";
    for (std::size_t c = 0; c < m[r].size(); ++c) os << (c ? ", " : "") << dump_entry(m[r][c]);
    os << "]" << (r + 1 < m.size() ? "," : "") << "\n";
  }
  os << "  ]";
}

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

SymGame::SymGame(std::vector<std::string> strategies, PayoffMatrix payoff, std::string name)
    : strategies_(std::move(strategies)), payoff_(std::move(payoff)), name_(std::move(name)) {
  check_names(strategies_, 2, "symmetric game");
  check_shape(payoff_, strategies_.size(), strategies_.size(), "symmetric game payoffs");
}

bool SymGame::is_crisp() const noexcept {
  for (const auto& row : payoff_) {
    for (const auto& f : row) {
      if (!f.is_crisp()) return false;
    }
  }
  return true;
}

std::size_t SymGame::find(std::string_view strategy) const noexcept {
  const auto it = std::find(strategies_.begin(), strategies_.end(), strategy);
  return it == strategies_.end() ? npos : static_cast<std::size_t>(it - strategies_.begin());
}

BiGame::BiGame(std::vector<std::string> strategies1, std::vector<std::string> strategies2, PayoffMatrix payoff1,
               PayoffMatrix payoff2, std::string name)
    : strategies1_(std::move(strategies1)),
      strategies2_(std::move(strategies2)),
      payoff1_(std::move(payoff1)),
      payoff2_(std::move(payoff2)),
      name_(std::move(name)) {
  check_names(strategies1_, 1, "player 1");
  check_names(strategies2_, 1, "player 2");
  check_shape(payoff1_, rows(), cols(), "payoffs1");
  check_shape(payoff2_, rows(), cols(), "payoffs2");
}

bool BiGame::is_symmetric() const noexcept {
  if (strategies1_ != strategies2_) return false;
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      if (!(payoff1_[i][j] == payoff2_[j][i])) return false;
    }
  }
  return true;
}

Game parse_game(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON", line_column(text, e.byte));
  }
  const DocumentReader doc(root);
  const json& type = doc.require("type");
  if (!type.is_string()) throw ParseError("expected a string", "type");
  const auto kind = type.get<std::string>();
  if (kind == "symmetric") {
    doc.allow_only({"type", "name", "description", "strategies", "payoffs"});
    return SymGame(doc.names("strategies"), doc.matrix("payoffs"), doc.optional_string("name"));
  }
  if (kind == "bimatrix") {
    doc.allow_only({"type", "name", "description", "strategies1", "strategies2", "payoffs1", "payoffs2"});
    return BiGame(doc.names("strategies1"), doc.names("strategies2"), doc.matrix("payoffs1"), doc.matrix("payoffs2"),
                  doc.optional_string("name"));
  }
  throw ParseError("expected \"symmetric\" or \"bimatrix\", got \"" + kind + "\"", "type");
}

Game load_game(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file", path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_game(buffer.str());
}

std::string serialize_game(const SymGame& game) {
  std::ostringstream os;
  os << "{\n  \"type\": \"symmetric\",\n";
  if (!game.name().empty()) os << "  \"name\": " << json(game.name()).dump() << ",\n";
  write_names(os, "strategies", game.strategies());
  os << ",\n";
  write_matrix(os, "payoffs", game.payoffs());
  os << "\n}\n";
  return os.str();
}

std::string serialize_game(const BiGame& game) {
  std::ostringstream os;
  os << "{\n  \"type\": \"bimatrix\",\n";
  if (!game.name().empty()) os << "  \"name\": " << json(game.name()).dump() << ",\n";
  write_names(os, "strategies1", game.strategies1());
  os << ",\n";
  write_names(os, "strategies2", game.strategies2());
  os << ",\n";
  write_matrix(os, "payoffs1", game.payoffs1());
  os << ",\n";
  write_matrix(os, "payoffs2", game.payoffs2());
  os << "\n}\n";
  return os.str();
}

std::string serialize_game(const Game& game) {
  return std::visit([](const auto& g) { return serialize_game(g); }, game);
}

BiGame symmetrize(const SymGame& game) {
  const std::size_t n = game.size();
  PayoffMatrix row_player(n, std::vector<TriFuzzy>(n));
  PayoffMatrix column_player(n, std::vector<TriFuzzy>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      row_player[i][j] = game.payoff(i, j);
      column_player[i][j] = game.payoff(j, i);
    }
  }
  return BiGame(game.strategies(), game.strategies(), std::move(row_player), std::move(column_player), game.name());
}

SymGame random_symmetric_game(std::mt19937_64& rng, std::size_t size, const RandomGameParams& params) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < size; ++k) names.push_back("s" + std::to_string(k + 1));
  PayoffMatrix payoff(size, std::vector<TriFuzzy>(size));
  for (auto& row : payoff) {
    for (auto& entry : row) {
      const double center = params.center_lo + (params.center_hi - params.center_lo) * unit_uniform(rng);
      const double width = params.width_lo + (params.width_hi - params.width_lo) * unit_uniform(rng);
      entry = TriFuzzy(center, width);
    }
  }
  return SymGame(std::move(names), std::move(payoff));
}

}  // namespace fuzzyess
