// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzyess/cli/app.hpp"
#include "fuzzyess/ess.hpp"
#include "fuzzyess/nash.hpp"
#include "oracles.hpp"

using namespace fuzzyess;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void near(Outcome& o, const std::string& label, double got, double want, double tol) {
  o.require(std::abs(got - want) <= tol, label + " = " + num(got) + ", expected " + num(want) + " +/- " + num(tol));
}

Outcome resistibility_matrix(const SymGame& g, const std::vector<std::vector<double>>& want) {
  Outcome o;
  const EssReport r = fuzzy_ess(g);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) near(o, "r" + std::to_string(i + 1) + std::to_string(j + 1), r.resistibility[i][j], want[i][j], 2e-3);
    }
  }
  return o;
}

Outcome memberships(const SymGame& g, const std::vector<double>& want, const std::vector<std::size_t>& ranking) {
  Outcome o;
  const EssReport r = fuzzy_ess(g);
  for (std::size_t i = 0; i < 3; ++i) near(o, "mu(s" + std::to_string(i + 1) + ")", r.memberships[i], want[i], 2e-3);
  o.require(r.ranking == ranking, "ranking differs");
  return o;
}

Outcome criterion1(const SymGame& t1) {
  return resistibility_matrix(t1, {{0, 1, 0.397}, {0, 0, 0.034}, {0.603, 0.966, 0}});
}

Outcome criterion2(const SymGame& t1) { return memberships(t1, {0.397, 0, 0.603}, {2, 0, 1}); }

Outcome criterion3(const SymGame& t2) {
  Outcome o = resistibility_matrix(t2, {{0, 0.222, 0.295}, {0.778, 0, 0.349}, {0.705, 0.651, 0}});
  const Outcome m = memberships(t2, {0.222, 0.349, 0.651}, {2, 1, 0});
  o.require(m.pass, m.detail);
  return o;
}

Outcome criterion4(const SymGame& t1, const SymGame& t2) {
  Outcome o;
  const auto d1 = symmetric_nash_degrees(t1);
  const auto d2 = symmetric_nash_degrees(t2);
  const std::vector<double> w1{0.958, 0, 0.989};
  const std::vector<double> w2{0.5, 0.854, 0.958};
  for (std::size_t i = 0; i < 3; ++i) {
    near(o, "first game NE(s" + std::to_string(i + 1) + ")", d1[i], w1[i], 2e-3);
    near(o, "second game NE(s" + std::to_string(i + 1) + ")", d2[i], w2[i], 2e-3);
  }
  near(o, "exact NE(s1)", d1[0], 23.0 / 24.0, 1e-9);
  near(o, "exact NE(s3)", d1[2], 95.0 / 96.0, 1e-9);
  near(o, "grid oracle 23/24", sf_greater_oracle(TriFuzzy(5, 1), TriFuzzy(4, 1), 4096), 23.0 / 24.0, 1e-3);
  near(o, "grid oracle 95/96", sf_greater_oracle(TriFuzzy(7, 1), TriFuzzy(5, 2), 4096), 95.0 / 96.0, 1e-3);
  return o;
}

Outcome criterion5(const SymGame& t1, const SymGame& t2) {
  Outcome o;
  int violations = 0;
  double worst = 1.0;
  auto check = [&](const SymGame& g) {
    const ContainmentCheck c = verify_theorem1(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      worst = std::min(worst, c.nash[i] - c.ess[i]);
      if (c.nash[i] < c.ess[i] - 1e-6) ++violations;
    }
  };
  check(t1);
  check(t2);
  std::mt19937_64 rng(42);
  for (int k = 0; k < 1000; ++k) check(random_symmetric_game(rng, 2 + static_cast<std::size_t>(k % 4)));
  o.require(violations == 0, std::to_string(violations) + " violations");
  o.detail = o.pass ? "worst margin " + num(worst) : o.detail + ", worst margin " + num(worst);
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (auto [g, h] : {std::pair{3.0, 1.0}, {2.0, 1.0}, {5.0, 4.0}}) {
    const EssReport r = fuzzy_ess(oracle::crisp_game({{g, 0}, {h, h}}));
    near(o, "stag hunt mu(H)", r.memberships[1], h / g, 1e-4);
    near(o, "stag hunt mu(G)", r.memberships[0], 1 - h / g, 1e-4);
  }
  const EssReport pd = fuzzy_ess(oracle::load_fixture("pd.json"));
  o.require(pd.memberships[0] == 0.0 && pd.memberships[1] == 1.0, "prisoner's dilemma memberships not (0, 1)");
  const EssReport flat = fuzzy_ess(oracle::crisp_game({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) o.require(flat.resistibility[i][j] == 0.5, "equal-payoff r != 0.5");
    }
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> shift(-20, 20);
  double worst_oracle = 0;
  double worst_shift = 0;
  for (int n = 0; n < 500; ++n) {
    const TriFuzzy a = oracle::random_tri(rng);
    const TriFuzzy b = oracle::random_tri(rng);
    const double v = sf_greater(a, b);
    o.require(v + sf_less(a, b) == 1.0, "complement law");
    o.require(sf_greater(a, a) == 0.5, "reflexivity");
    const double t = shift(rng);
    worst_shift = std::max(worst_shift, std::abs(sf_greater(TriFuzzy(a.center() + t, a.half_width()),
                                                            TriFuzzy(b.center() + t, b.half_width())) - v));
    double touch = b.upper() + a.half_width();
    while (touch - a.half_width() < b.upper()) touch = std::nextafter(touch, INFINITY);
    const TriFuzzy far(touch, a.half_width());
    o.require(sf_greater(far, b) == 1.0 && sf_greater(b, far) == 0.0, "disjoint supports");
    worst_oracle = std::max(worst_oracle, std::abs(v - sf_greater_oracle(a, b, 4096)));
  }
  o.require(worst_shift <= 1e-9, "translation error " + num(worst_shift));
  o.require(worst_oracle <= 1e-3, "oracle error " + num(worst_oracle));
  if (o.pass) o.detail = "oracle error " + num(worst_oracle) + ", shift error " + num(worst_shift);
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> factor(0.05, 5);
  double worst = 0;
  for (int n = 0; n < 200; ++n) {
    const TriFuzzy f = oracle::random_tri(rng);
    const TriFuzzy g = oracle::random_tri(rng);
    const double c = factor(rng);
    const TriFuzzy sum = add(f, g);
    const TriFuzzy scaled = scale(f, c);
    for (int q = 0; q <= 20; ++q) {
      const double t = -0.1 + 1.2 * q / 20.0;
      const double zs = sum.lower() + t * (sum.upper() - sum.lower());
      const double zc = scaled.lower() + t * (scaled.upper() - scaled.lower());
      worst = std::max(worst, std::abs(oracle::extension_add(f, g, zs) - membership(sum, zs)));
      worst = std::max(worst, std::abs(oracle::extension_scale(f, c, zc) - membership(scaled, zc)));
    }
  }
  o.require(worst <= 2e-3, "membership error " + num(worst));
  o.require(add(scale(TriFuzzy(5, 1), 0.5), scale(TriFuzzy(6, 1), 0.5)) == TriFuzzy(5.5, 1), "mix T(5,1), T(6,1)");
  o.require(add(scale(TriFuzzy(5, 2), 0.5), scale(TriFuzzy(7, 1), 0.5)) == TriFuzzy(6, 1.5), "mix T(5,2), T(7,1)");
  o.require(scale(TriFuzzy(6, 2), 0.5) == TriFuzzy(3, 1), "scale T(6,2)");
  o.require(add(TriFuzzy(5, 1), TriFuzzy(6, 1)) == TriFuzzy(11, 2), "add T(5,1) + T(6,1)");
  if (o.pass) o.detail = "membership error " + num(worst);
  return o;
}

Outcome criterion9(const SymGame& t1, const SymGame& t2) {
  Outcome o;
  double worst = 0;
  for (const SymGame* g : {&t1, &t2}) {
    const EssReport r = fuzzy_ess(*g);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) worst = std::max(worst, std::abs(r.resistibility[i][j] + r.resistibility[j][i] - 1));
    }
  }
  o.require(worst <= 4e-3, "max |r_ij + r_ji - 1| = " + num(worst));
  if (o.pass) o.detail = "max |r_ij + r_ji - 1| = " + num(worst);
  return o;
}

Outcome criterion10() {
  Outcome o;
  auto run = [](const std::vector<std::string>& args, std::string& out) {
    std::ostringstream os;
    std::ostringstream es;
    const int code = cli::run(args, os, es);
    out = os.str();
    return code;
  };
  const std::string table1 = std::string(FUZZYESS_FIXTURE_DIR) + "/table1.json";
  std::string first;
  std::string second;
  o.require(run({"fuzzyess", "analyze", "--game", table1, "--mode", "ess", "--precision", "3"}, first) == 0,
            "analyze failed");
  run({"fuzzyess", "analyze", "--game", table1, "--mode", "ess", "--precision", "3"}, second);
  for (const char* digits : {"0.397", "0.000", "0.603"}) {
    o.require(first.find(digits) != std::string::npos, std::string("missing ") + digits);
  }
  o.require(first == second, "repeated runs differ");

  const auto bad = (std::filesystem::temp_directory_path() / "fuzzyess_acceptance_bad.json").string();
  std::ofstream(bad) << "{\"type\": \"symmetric\", \"payoffs\": [[1,";
  std::string partial;
  o.require(run({"fuzzyess", "analyze", "--game", bad}, partial) == 2, "malformed input exit code");
  o.require(partial.empty(), "partial output on malformed input");
  return o;
}

}  // namespace

int main() {
  const SymGame t1 = oracle::load_fixture("table1.json");
  const SymGame t2 = oracle::load_fixture("table2.json");
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"first-example resistibilities", [&] { return criterion1(t1); }},
      {"first-example fuzzy ESS set", [&] { return criterion2(t1); }},
      {"second-example resistibilities and ESS set", [&] { return criterion3(t2); }},
      {"fuzzy NE diagonals", [&] { return criterion4(t1, t2); }},
      {"fuzzy NE contains fuzzy ESS", [&] { return criterion5(t1, t2); }},
      {"crisp reduction", criterion6},
      {"satisfaction-function properties", criterion7},
      {"arithmetic oracle", criterion8},
      {"pairwise complement on fixtures", [&] { return criterion9(t1, t2); }},
      {"CLI determinism and format", criterion10},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("%s %2zu %s%s%s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
