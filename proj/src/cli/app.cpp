#include "fuzzyess/cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fuzzyess/cli/format.hpp"
#include "fuzzyess/ess.hpp"
#include "fuzzyess/game.hpp"
#include "fuzzyess/nash.hpp"

namespace fuzzyess::cli {

namespace {

using nlohmann::ordered_json;

// Thrown for command-line misuse detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string tnorm = "product";
  int grid = 0;  // 0: exact mode unless the T-norm needs a grid
  int eps_grid = SFConfig{}.eps_resolution;
  unsigned threads = 1;
  std::string format;
  int precision = 3;
  std::string output;

  SFConfig config() const {
    SFConfig cfg;
    cfg.tnorm = tnorm == "min" ? TNorm::kMin : TNorm::kProduct;
    if (grid > 0 || cfg.tnorm == TNorm::kMin) {
      cfg.mode = SfMode::kGrid;
      if (grid > 0) cfg.grid_resolution = grid;
    }
    cfg.eps_resolution = eps_grid;
    cfg.threads = threads;
    cfg.validate();
    return cfg;
  }

  OutputSpec output_spec(Format fallback) const {
    OutputSpec spec;
    spec.format = format.empty() ? fallback : (format == "csv" ? Format::kCsv : format == "json" ? Format::kJson : Format::kTable);
    spec.precision = precision;
    spec.destination = output;
    spec.validate();
    return spec;
  }
};

void add_config_options(CLI::App& cmd, CommonOptions& o) {
  cmd.add_option("--tnorm", o.tnorm, "T-norm combining memberships")->check(CLI::IsMember({"product", "min"}));
  cmd.add_option("--grid", o.grid, "Use grid quadrature for SF with N points per axis (N >= 64)");
  cmd.add_option("--eps-grid", o.eps_grid, "Mutant-share samples for the infimum (>= 16)");
  cmd.add_option("--threads", o.threads, "Worker threads across strategy pairs (0 = all cores)");
}

void add_output_options(CLI::App& cmd, CommonOptions& o) {
  cmd.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  cmd.add_option("--precision", o.precision, "Decimal places (1-12)");
  cmd.add_option("--output", o.output, "Write to PATH instead of standard output");
}

// Rounded value as a JSON number so printed digits match the text formats.
ordered_json rounded(double value, int precision) {
  if (std::isnan(value)) return nullptr;
  return std::stod(format_fixed(value, precision));
}

std::string ranking_text(const EssReport& report) {
  std::string out;
  for (std::size_t k = 0; k < report.ranking.size(); ++k) {
    const std::size_t s = report.ranking[k];
    if (k > 0) {
      const std::size_t prev = report.ranking[k - 1];
      out += report.memberships[prev] > report.memberships[s] ? " > " : " = ";
    }
    out += report.strategies[s];
  }
  return out;
}

const char* kind_name(Resistance kind) {
  switch (kind) {
    case Resistance::kFull:
      return "full";
    case Resistance::kCrossing:
      return "crossing";
    case Resistance::kNone:
      return "none";
  }
  return "none";
}

std::string game_label(const std::string& path, const std::string& name) {
  return name.empty() ? std::filesystem::path(path).filename().string() : name;
}

// ----------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string game;
  std::string mode = "both";
  CommonOptions common;
};

struct Analysis {
  std::string label;
  std::string type;
  std::optional<EssReport> ess;
  std::optional<NashReport> nash;
  std::vector<std::string> strategies1;
  std::vector<std::string> strategies2;
};

std::string render_table(const Analysis& a, int p) {
  std::ostringstream os;
  os << "game: " << a.label << " (" << a.type << ", " << a.strategies1.size();
  if (a.type == "bimatrix") os << "x" << a.strategies2.size();
  os << " strategies)\n";
  if (a.ess) {
    const EssReport& r = *a.ess;
    TextTable members({"strategy", "membership"});
    for (std::size_t i = 0; i < r.strategies.size(); ++i) members.add_row({r.strategies[i], format_fixed(r.memberships[i], p)});
    os << "\nfuzzy ESS membership\n" << members.render();

    std::vector<std::string> header{"r_ij"};
    header.insert(header.end(), r.strategies.begin(), r.strategies.end());
    TextTable matrix(header);
    for (std::size_t i = 0; i < r.strategies.size(); ++i) {
      std::vector<std::string> row{r.strategies[i]};
      for (std::size_t j = 0; j < r.strategies.size(); ++j) row.push_back(format_fixed(r.resistibility[i][j], p));
      matrix.add_row(std::move(row));
    }
    os << "\nresistibility (incumbent row against mutant column)\n" << matrix.render();
    os << "\nranking: " << ranking_text(r) << "\n";
  }
  if (a.nash) {
    const NashReport& n = *a.nash;
    std::vector<std::string> header{"row\\col"};
    header.insert(header.end(), a.strategies2.begin(), a.strategies2.end());
    TextTable matrix(header);
    for (std::size_t i = 0; i < a.strategies1.size(); ++i) {
      std::vector<std::string> row{a.strategies1[i]};
      for (std::size_t j = 0; j < a.strategies2.size(); ++j) row.push_back(format_fixed(n.degrees[i][j], p));
      matrix.add_row(std::move(row));
    }
    os << "\nfuzzy Nash degree (row strategy against column strategy)\n" << matrix.render();
    if (!n.symmetric_degrees.empty()) {
      TextTable diag({"profile", "degree"});
      for (std::size_t i = 0; i < a.strategies1.size(); ++i) {
        diag.add_row({"(" + a.strategies1[i] + "," + a.strategies1[i] + ")", format_fixed(n.symmetric_degrees[i], p)});
      }
      os << "\nsymmetric profiles\n" << diag.render();
    }
  }
  return os.str();
}

std::string render_csv(const Analysis& a, int p) {
  std::ostringstream os;
  os << "section,row,column,value\n";
  auto line = [&os](const std::string& section, const std::string& row, const std::string& col, const std::string& v) {
    os << section << ',' << csv_field(row) << ',' << csv_field(col) << ',' << v << '\n';
  };
  if (a.ess) {
    const EssReport& r = *a.ess;
    for (std::size_t i = 0; i < r.strategies.size(); ++i) line("membership", r.strategies[i], "", format_fixed(r.memberships[i], p));
    for (std::size_t i = 0; i < r.strategies.size(); ++i) {
      for (std::size_t j = 0; j < r.strategies.size(); ++j) {
        if (i != j) line("resistibility", r.strategies[i], r.strategies[j], format_fixed(r.resistibility[i][j], p));
      }
    }
    for (std::size_t k = 0; k < r.ranking.size(); ++k) {
      line("ranking", std::to_string(k + 1), r.strategies[r.ranking[k]], format_fixed(r.memberships[r.ranking[k]], p));
    }
  }
  if (a.nash) {
    const NashReport& n = *a.nash;
    for (std::size_t i = 0; i < a.strategies1.size(); ++i) {
      for (std::size_t j = 0; j < a.strategies2.size(); ++j) line("nash", a.strategies1[i], a.strategies2[j], format_fixed(n.degrees[i][j], p));
    }
    for (std::size_t i = 0; i < n.symmetric_degrees.size(); ++i) {
      line("symmetric_nash", a.strategies1[i], a.strategies1[i], format_fixed(n.symmetric_degrees[i], p));
    }
  }
  return os.str();
}

std::string render_json(const Analysis& a, int p) {
  ordered_json doc;
  doc["game"] = {{"name", a.label}, {"type", a.type}, {"strategies1", a.strategies1}, {"strategies2", a.strategies2}};
  if (a.ess) {
    const EssReport& r = *a.ess;
    ordered_json ess;
    ess["strategies"] = r.strategies;
    ordered_json members = ordered_json::array();
    for (double m : r.memberships) members.push_back(rounded(m, p));
    ess["memberships"] = members;
    ordered_json matrix = ordered_json::array();
    ordered_json diagnostics = ordered_json::array();
    for (std::size_t i = 0; i < r.strategies.size(); ++i) {
      ordered_json row = ordered_json::array();
      ordered_json drow = ordered_json::array();
      for (std::size_t j = 0; j < r.strategies.size(); ++j) {
        row.push_back(rounded(r.resistibility[i][j], p));
        if (i == j) {
          drow.push_back(nullptr);
        } else {
          const PairResult& d = r.diagnostics[i][j];
          drow.push_back({{"crossing", rounded(d.crossing, p)},
                          {"sf_at_zero", rounded(d.sf_at_zero, p)},
                          {"kind", kind_name(d.kind)},
                          {"analytic", d.analytic}});
        }
      }
      matrix.push_back(row);
      diagnostics.push_back(drow);
    }
    ess["resistibility"] = matrix;
    ordered_json ranking = ordered_json::array();
    for (std::size_t s : r.ranking) ranking.push_back(r.strategies[s]);
    ess["ranking"] = ranking;
    ess["diagnostics"] = diagnostics;
    doc["ess"] = ess;
  }
  if (a.nash) {
    ordered_json nash;
    ordered_json degrees = ordered_json::array();
    for (const auto& row : a.nash->degrees) {
      ordered_json out = ordered_json::array();
      for (double v : row) out.push_back(rounded(v, p));
      degrees.push_back(out);
    }
    nash["degrees"] = degrees;
    ordered_json diag = ordered_json::array();
    for (double v : a.nash->symmetric_degrees) diag.push_back(rounded(v, p));
    nash["symmetric_degrees"] = diag;
    doc["nash"] = nash;
  }
  return doc.dump(2) + "\n";
}

std::string cmd_analyze(const AnalyzeArgs& args) {
  const SFConfig cfg = args.common.config();
  const OutputSpec spec = args.common.output_spec(Format::kTable);
  const Game game = load_game(args.game);

  Analysis a;
  std::optional<SymGame> sym;
  BiGame bi = std::visit(
      [&](const auto& g) -> BiGame {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, SymGame>) {
          sym = g;
          return symmetrize(g);
        } else {
          return g;
        }
      },
      game);
  a.type = sym ? "symmetric" : "bimatrix";
  a.label = game_label(args.game, bi.name());
  a.strategies1 = bi.strategies1();
  a.strategies2 = bi.strategies2();

  const bool want_ess = args.mode != "nash";
  const bool want_nash = args.mode != "ess";
  if (want_ess && !sym) {
    if (!bi.is_symmetric()) throw UsageError("ESS analysis needs a symmetric game; use --mode nash for bimatrix games");
    sym = SymGame(bi.strategies1(), bi.payoffs1(), bi.name());
  }
  if (want_ess) a.ess = fuzzy_ess(*sym, cfg);
  if (want_nash) a.nash = fuzzy_nash(bi, cfg);

  switch (spec.format) {
    case Format::kCsv:
      return render_csv(a, spec.precision);
    case Format::kJson:
      return render_json(a, spec.precision);
    case Format::kTable:
      break;
  }
  return render_table(a, spec.precision);
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  long long count = 1000;
  std::uint64_t seed = 42;
  std::vector<int> sizes{2, 3, 4, 5};
  CommonOptions common;
};

struct VerifyOutcome {
  std::string text;
  bool passed = true;
};

VerifyOutcome cmd_verify(const VerifyArgs& args) {
  if (args.count < 1) throw UsageError("--count must be >= 1");
  if (args.sizes.empty()) throw UsageError("--sizes must list at least one size");
  for (int s : args.sizes) {
    if (s < 2) throw UsageError("--sizes entries must be >= 2");
  }
  const SFConfig cfg = args.common.config();
  const int p = args.common.output_spec(Format::kTable).precision;
  const bool detailed = args.count <= 10;

  std::mt19937_64 rng(args.seed);
  std::ostringstream os;
  std::ostringstream failures;
  long long violations = 0;
  double worst = std::numeric_limits<double>::infinity();
  double complement_gap = 0.0;
  for (long long k = 0; k < args.count; ++k) {
    const auto size = static_cast<std::size_t>(args.sizes[static_cast<std::size_t>(k) % args.sizes.size()]);
    const SymGame g = random_symmetric_game(rng, size);
    const ContainmentCheck check = verify_theorem1(g, cfg);
    worst = std::min(worst, check.worst_margin);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        const auto& r = check.ess_report.resistibility;
        complement_gap = std::max(complement_gap, std::abs(r[i][j] + r[j][i] - 1.0));
      }
    }
    if (detailed) {
      os << "game " << (k + 1) << " (" << size << " strategies)\n";
      for (std::size_t i = 0; i < size; ++i) {
        const bool ok = check.nash[i] >= check.ess[i] - cfg.containment_tolerance;
        os << "  " << g.strategy(i) << "  nash " << format_fixed(check.nash[i], p) << "  ess "
           << format_fixed(check.ess[i], p) << "  " << (ok ? "ok" : "VIOLATION") << "\n";
      }
    }
    if (!check.holds) {
      ++violations;
      failures << "violating game " << (k + 1) << ":\n" << serialize_game(g);
    }
  }
  os << "checked " << args.count << " games (seed " << args.seed << "): " << violations << " violation"
     << (violations == 1 ? "" : "s") << "\n";
  os << "worst margin nash - ess: " << format_fixed(worst, 9) << "\n";
  os << "max |r_ij + r_ji - 1| (observed only): " << format_fixed(complement_gap, 6) << "\n";
  os << failures.str();
  return {os.str(), violations == 0};
}

// ----------------------------------------------------------- sweep-staghunt

struct SweepArgs {
  double g = 0.0;
  std::string h;
  CommonOptions common;
};

SymGame stag_hunt(double g, double h) {
  return SymGame({"G", "H"}, {{TriFuzzy::crisp(g), TriFuzzy::crisp(0.0)}, {TriFuzzy::crisp(h), TriFuzzy::crisp(h)}},
                 "stag hunt");
}

std::string cmd_sweep(const SweepArgs& args) {
  const OutputSpec spec = args.common.output_spec(Format::kCsv);
  const SFConfig cfg = args.common.config();
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
  {
    std::string text = args.h;
    std::replace(text.begin(), text.end(), ':', ' ');
    std::istringstream in(text);
    in.imbue(std::locale::classic());
    if (!(in >> lo >> hi >> step) || !(in >> std::ws).eof()) throw UsageError("--h must be LO:HI:STEP");
  }
  if (!(args.g > 0.0)) throw UsageError("--g must be positive");
  if (!(lo > 0.0 && lo <= hi && hi < args.g)) throw UsageError("--h range must satisfy 0 < LO <= HI < G");
  if (!(step > 0.0)) throw UsageError("--h step must be positive");

  const auto count = static_cast<long long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  const int p = spec.precision;
  TextTable table({"h", "h/g", "mu(H)", "mu(G)", "ranking"});
  ordered_json rows = ordered_json::array();
  std::ostringstream csv;
  csv << "h,h_over_g,mu_H,mu_G,ranking\n";
  for (long long k = 0; k < count; ++k) {
    const double h = lo + static_cast<double>(k) * step;
    const EssReport r = fuzzy_ess(stag_hunt(args.g, h), cfg);
    const double mu_g = r.memberships[0];
    const double mu_h = r.memberships[1];
    const std::string ranking = ranking_text(r);
    csv << format_fixed(h, p) << ',' << format_fixed(h / args.g, p) << ',' << format_fixed(mu_h, p) << ','
        << format_fixed(mu_g, p) << ',' << ranking << '\n';
    table.add_row({format_fixed(h, p), format_fixed(h / args.g, p), format_fixed(mu_h, p), format_fixed(mu_g, p), ranking});
    rows.push_back({{"h", rounded(h, p)},
                    {"h_over_g", rounded(h / args.g, p)},
                    {"mu_H", rounded(mu_h, p)},
                    {"mu_G", rounded(mu_g, p)},
                    {"ranking", ranking}});
  }
  switch (spec.format) {
    case Format::kCsv:
      return csv.str();
    case Format::kJson:
      return ordered_json({{"g", args.g}, {"rows", rows}}).dump(2) + "\n";
    case Format::kTable:
      break;
  }
  return "stag hunt sweep, g = " + format_fixed(args.g, p) + "\n" + table.render();
}

// ------------------------------------------------------------------ curves

struct CurvesArgs {
  std::string game;
  std::string pair;
  int points = 201;
  CommonOptions common;
};

std::size_t resolve_strategy(const SymGame& g, const std::string& token) {
  if (const std::size_t idx = g.find(token); idx != SymGame::npos) return idx;
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != token.size() || value < 1 || static_cast<std::size_t>(value) > g.size()) {
    throw UsageError("unknown strategy '" + token + "' (use a name or a 1-based index)");
  }
  return static_cast<std::size_t>(value - 1);
}

std::string cmd_curves(const CurvesArgs& args) {
  const OutputSpec spec = args.common.output_spec(Format::kCsv);
  if (spec.format == Format::kTable) throw UsageError("curves supports --format csv or json");
  const SFConfig cfg = args.common.config();
  if (args.points < 2) throw UsageError("--points must be >= 2");
  const Game game = load_game(args.game);
  const auto* sym = std::get_if<SymGame>(&game);
  if (!sym) throw UsageError("curves needs a symmetric game");

  const auto comma = args.pair.find(',');
  if (comma == std::string::npos) throw UsageError("--pair must be I,J");
  const std::size_t i = resolve_strategy(*sym, args.pair.substr(0, comma));
  const std::size_t j = resolve_strategy(*sym, args.pair.substr(comma + 1));
  if (i == j) throw UsageError("--pair needs two different strategies");

  const PairResult pair = analyze_pair(*sym, i, j, cfg);
  const auto trace = trace_pair(*sym, i, j, args.points, cfg);
  const SfCurve curve = sf_curve(*sym, i, j, cfg);
  const double r = pair.resistibility;
  const double sf_r = curve(r);
  const double mu_r = r > 0.0 ? mu_ij(*sym, i, j, r, cfg) : sf_r;

  const std::string si = sym->strategy(i);
  const std::string sj = sym->strategy(j);
  const std::vector<std::pair<std::string, TriFuzzy>> payoffs{
      {"payoff(" + si + "," + si + ")", sym->payoff(i, i)},
      {"payoff(" + si + "," + sj + ")", sym->payoff(i, j)},
      {"payoff(" + sj + "," + si + ")", sym->payoff(j, i)},
      {"payoff(" + sj + "," + sj + ")", sym->payoff(j, j)},
  };
  auto polyline = [](const TriFuzzy& f) {
    return std::vector<std::pair<double, double>>{{f.lower(), 0.0}, {f.center(), 1.0}, {f.upper(), 0.0}};
  };

  const int p = spec.precision;
  if (spec.format == Format::kJson) {
    ordered_json doc;
    doc["incumbent"] = si;
    doc["mutant"] = sj;
    doc["resistibility"] = rounded(r, p);
    doc["kind"] = kind_name(pair.kind);
    ordered_json points = ordered_json::array();
    for (const auto& pt : trace) {
      points.push_back({{"eps", rounded(pt.eps, p)},
                        {"s", rounded(pt.sf, p)},
                        {"mu", rounded(pt.mu, p)},
                        {"min_mu_eps", rounded(pt.min_mu_eps, p)}});
    }
    doc["curve"] = points;
    doc["crossing"] = {{"eps", rounded(r, p)}, {"s", rounded(sf_r, p)}, {"mu", rounded(mu_r, p)}};
    ordered_json members = ordered_json::object();
    for (const auto& [label, f] : payoffs) {
      ordered_json line = ordered_json::array();
      for (const auto& [x, y] : polyline(f)) line.push_back({rounded(x, p), rounded(y, p)});
      members[label] = line;
    }
    doc["memberships"] = members;
    return doc.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "series,eps,s,mu,min_mu_eps,x,membership\n";
  for (const auto& pt : trace) {
    os << "curve," << format_fixed(pt.eps, p) << ',' << format_fixed(pt.sf, p) << ',' << format_fixed(pt.mu, p) << ','
       << format_fixed(pt.min_mu_eps, p) << ",,\n";
  }
  os << "crossing," << format_fixed(r, p) << ',' << format_fixed(sf_r, p) << ',' << format_fixed(mu_r, p) << ','
     << format_fixed(std::min(mu_r, r), p) << ",,\n";
  for (const auto& [label, f] : payoffs) {
    for (const auto& [x, y] : polyline(f)) os << csv_field(label) << ",,,,," << format_fixed(x, p) << ',' << format_fixed(y, p) << '\n';
  }
  return os.str();
}

void emit(const std::string& text, const std::string& destination, std::ostream& out) {
  if (destination.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(destination, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot write " + destination);
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy evolutionarily stable strategies and fuzzy Nash degrees for fuzzy-payoff games",
               args.empty() ? "fuzzyess" : args.front()};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Fuzzy ESS memberships and/or fuzzy Nash degrees of a game file");
  analyze_cmd->add_option("--game", analyze.game, "Game file (JSON)")->required();
  analyze_cmd->add_option("--mode", analyze.mode, "What to compute")->check(CLI::IsMember({"ess", "nash", "both"}));
  add_config_options(*analyze_cmd, analyze.common);
  add_output_options(*analyze_cmd, analyze.common);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check fuzzy NE >= fuzzy ESS on seeded random games");
  verify_cmd->add_option("--count", verify.count, "Number of games");
  verify_cmd->add_option("--seed", verify.seed, "Generator seed");
  verify_cmd->add_option("--sizes", verify.sizes, "Strategy counts, cycled")->delimiter(',');
  add_config_options(*verify_cmd, verify.common);
  verify_cmd->add_option("--precision", verify.common.precision, "Decimal places (1-12)");
  verify_cmd->add_option("--output", verify.common.output, "Write to PATH instead of standard output");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep-staghunt", "Crisp stag hunt memberships over a range of hare payoffs");
  sweep_cmd->set_help_flag("--help", "Print this help message and exit");
  sweep_cmd->add_option("--g", sweep.g, "Stag payoff g > 0")->required();
  sweep_cmd->add_option("--h", sweep.h, "Hare payoff range LO:HI:STEP")->required();
  add_output_options(*sweep_cmd, sweep.common);

  CurvesArgs curves;
  auto* curves_cmd = app.add_subcommand("curves", "Plot data for one incumbent/mutant pair");
  curves_cmd->add_option("--game", curves.game, "Game file (JSON)")->required();
  curves_cmd->add_option("--pair", curves.pair, "Incumbent,mutant as names or 1-based indices")->required();
  curves_cmd->add_option("--points", curves.points, "Samples of the mutant share");
  add_config_options(*curves_cmd, curves.common);
  add_output_options(*curves_cmd, curves.common);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("fuzzyess");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsageError;
  }

  try {
    std::string text;
    int status = kSuccess;
    std::string destination;
    if (*analyze_cmd) {
      text = cmd_analyze(analyze);
      destination = analyze.common.output;
    } else if (*verify_cmd) {
      VerifyOutcome outcome = cmd_verify(verify);
      text = std::move(outcome.text);
      status = outcome.passed ? kSuccess : kVerificationFailed;
      destination = verify.common.output;
    } else if (*sweep_cmd) {
      text = cmd_sweep(sweep);
      destination = sweep.common.output;
    } else if (*curves_cmd) {
      text = cmd_curves(curves);
      destination = curves.common.output;
    }
    emit(text, destination, out);
    return status;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    err << "error: invalid game: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const NumericError& e) {
    err << "error: numeric failure: " << e.what() << "\n";
    return kNumericFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumericFailure;
  }
  return kUsageError;
}

}  // namespace fuzzyess::cli
