// One PASS/FAIL line per acceptance criterion; exits nonzero when any fails.

#include "cycloseq/cli.hpp"
#include "cycloseq/cycloseq.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace cycloseq;

namespace {

using Clock = std::chrono::steady_clock;
using Decimal = boost::multiprecision::cpp_dec_float_50;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

nlohmann::json golden() {
  std::ifstream in(std::string(CYCLOSEQ_TEST_DATA) + "/printed_tables.json");
  return nlohmann::json::parse(in);
}

Envelope cli_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (code != cli::ok) throw std::runtime_error("cycloseq exited with " + std::to_string(code) + ": " + err.str());
  return parse_json(out.str());
}

std::string num(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << v;
  return s.str();
}

bool within(double value, double printed, double tol) { return std::abs(value - printed) <= tol + 1e-12; }

Outcome jump_tables(const nlohmann::json& g) {
  Outcome o;
  const auto t1 = cli_json({"tnum", "--m", "3", "--n", "4"});
  o.check(t1.payload == Json::parse(R"({"2":"7","4":"21","6":"7"})"), "(3,4) distribution " + t1.payload.dump());

  const auto grid = cli_json({"tnum", "--grid", "10"}).payload.at(0);
  std::map<std::pair<std::string, std::string>, std::string> cell;
  for (std::size_t r = 0; r < grid["row_labels"].size(); ++r)
    for (std::size_t c = 0; c < grid["column_labels"].size(); ++c)
      cell[{grid["row_labels"][r], grid["column_labels"][c]}] = grid["rows"][r][c];
  unsigned checked = 0;
  for (const auto& e : g["table2"]["cells"]) {
    const unsigned N = e[0], m = e[1], tau = e[2], count = e[3];
    // the grid labels each family by its larger digit count; T^{mn} = T^{nm}
    const unsigned major = std::max(m, N - m);
    const auto key = std::make_pair(std::to_string(tau), std::to_string(N) + ":" + std::to_string(major));
    const auto it = cell.find(key);
    o.check(it != cell.end() && it->second == std::to_string(count),
            "N=" + std::to_string(N) + " m=" + std::to_string(m) + " tau=" + std::to_string(tau));
    ++checked;
  }
  o.check(checked == 55, "expected 55 printed cells, read " + std::to_string(checked));
  return o;
}

Outcome summed_family_table(const nlohmann::json& g) {
  Outcome o;
  const auto& t5 = g["table5"];
  unsigned entries = 0;
  for (std::size_t p = 0; p < t5["patterns"].size(); ++p) {
    const std::string u = t5["patterns"][p];
    const auto closed = cli_json({"dist", "--m", "5", "--n", "3", "--pattern", u});
    const auto brute = cli_json({"dist", "--m", "5", "--n", "3", "--pattern", u, "--via", "oracle"});
    for (unsigned h = 0; h <= 3; ++h) {
      const std::string printed = std::to_string(t5["rows"][h][p].get<unsigned>());
      const std::string key = std::to_string(h);
      const std::string c = closed.payload.value(key, std::string("0"));
      const std::string b = brute.payload.value(key, std::string("0"));
      o.check(c == printed, u + " h=" + key + " closed form " + c + " vs " + printed);
      o.check(b == printed, u + " h=" + key + " enumeration " + b + " vs " + printed);
      ++entries;
    }
  }
  o.check(entries == 32, "expected 32 entries");
  return o;
}

BigNat tableau_oracle(AppendixKind kind, unsigned fixed, unsigned row, unsigned col) {
  auto tally = [](unsigned s, unsigned i, unsigned j, bool by_weight, unsigned target) {
    BigNat t = 0;
    for (const auto& [key, c] : oracle::tableau_census(s, i, j))
      if ((by_weight ? key.second : key.first) == target) t += c;
    return t;
  };
  switch (kind) {
    case AppendixKind::c_by_k: return tally(0, row, col, false, fixed);
    case AppendixKind::c_by_i: return tally(0, fixed, row, false, col);
    case AppendixKind::cprime_by_k: return tally(1, row, col, false, fixed);
    case AppendixKind::cprime_weight: return tally(1, row, col, true, fixed);
  }
  return 0;
}

// Ledger id covering a disagreement between a printed and computed cell, or "".
std::string ledger_id_for(AppendixKind kind, unsigned fixed, unsigned row, unsigned col, unsigned printed) {
  if (kind == AppendixKind::c_by_i && fixed == 6 && row == 3 && col == 2) return "c6-32";
  if (kind == AppendixKind::cprime_weight && row == 9)
    return "cprime-weight-g" + std::to_string(fixed) + "-9-" + std::to_string(col);
  if (kind == AppendixKind::cprime_by_k && fixed == 0 && printed == 0) return "cprime-k0-blanks";
  return "";
}

Outcome appendix(const nlohmann::json& g, const std::vector<LedgerEntry>& ledger, unsigned& explained) {
  Outcome o;
  std::map<std::string, bool> closed;
  for (const auto& e : ledger) closed[e.id] = e.shipped_matches_oracle;
  unsigned cells = 0;
  explained = 0;
  std::map<std::pair<std::string, unsigned>, Json> emitted;
  for (const char* which : {"c_by_k", "c_by_i", "cprime_by_k", "cprime_weight"})
    for (const auto& m : cli_json({"appendix", "--which", which}).payload)
      emitted[{m["kind"], std::stoul(m["fixed_index"].get<std::string>())}] = m;

  for (const auto& mat : g["appendix"]) {
    const std::string kind_name = mat["kind"];
    const auto kind = parse_appendix_kind(kind_name);
    const unsigned fixed = mat["fixed"];
    const auto it = emitted.find({kind_name, fixed});
    if (it == emitted.end()) {
      o.check(false, kind_name + " " + std::to_string(fixed) + " not emitted");
      continue;
    }
    const Json& m = it->second;
    for (const auto& [r, vals] : mat["rows"].items())
      for (unsigned col : mat["columns"]) {
        const unsigned row = std::stoul(r);
        const std::string key = std::to_string(col);
        const unsigned printed = vals.contains(key) ? vals[key].get<unsigned>() : 0;
        std::string value = "0";
        for (std::size_t ri = 0; ri < m["row_labels"].size(); ++ri)
          for (std::size_t ci = 0; ci < m["column_labels"].size(); ++ci)
            if (m["row_labels"][ri] == r && m["column_labels"][ci] == key) value = m["rows"][ri][ci];
        ++cells;
        if (value == std::to_string(printed)) continue;
        const std::string id = ledger_id_for(kind, fixed, row, col, printed);
        const bool oracle_agrees = tableau_oracle(kind, fixed, row, col) == parse_bignat(value);
        if (!id.empty() && closed.count(id) && closed[id] && oracle_agrees) {
          ++explained;
          continue;
        }
        o.check(false, "unexplained " + kind_name + " " + std::to_string(fixed) + " (" + r + "," + key +
                           "): printed " + std::to_string(printed) + ", emitted " + value);
      }
  }
  o.notes.insert(o.notes.begin(), std::to_string(cells) + " cells, " + std::to_string(explained) +
                                      " ledgered misprints or blanks");
  return o;
}

Outcome sweep() {
  Outcome o;
  const OracleConfig sequential{default_oracle_cap, 1};
  const auto report = equivalence_sweep(12, sequential);
  o.check(report.passed(), std::to_string(report.failures.size()) + " sweep failures");
  for (const auto& f : report.failures) o.notes.push_back(f);
  for (unsigned N = 2; N <= 14; ++N) {
    const auto all = oracle::tally<unsigned>(N, std::nullopt, [&](Word w) { return oracle::jumps(w, N); }, sequential);
    for (unsigned tau = 2; tau <= N; tau += 2) {
      const BigNat closed = t_sum_over_n(N, tau);
      const BigNat brute = all.count(tau) ? all.at(tau) : BigNat(0);
      o.check(closed == 2 * binomial(N, tau) && brute == closed,
              "sum over n, N=" + std::to_string(N) + " tau=" + std::to_string(tau));
    }
  }
  o.notes.insert(o.notes.begin(), std::to_string(report.comparisons) + " distributions compared");
  return o;
}

Outcome worked_examples() {
  Outcome o;
  o.check(fibonacci_gf(4, 2, 2) == 4, "gf(4;2,2)");
  o.check(fibonacci_gf(5, 3, 0) == 20, "gf(5;3,0)");
  o.check(count_pattern({4, 4}, Pattern("001"), 0) == 2, "T^{44}_0(001)");
  std::set<std::string> none;
  for (std::uint64_t r = 0; r < 70; ++r) {
    const Word w = oracle::unrank_colex(r, 8, 4);
    if (oracle::occurrences(w, 8, Pattern("001")) == 0) none.insert(oracle::word_to_string(w, 8));
  }
  o.check(none == std::set<std::string>{"01010101", "10101010"}, "sequences without (001)");
  o.check(c_weight(1, 5, 0, 3) * binomial(3, 3) == 3, "c'^{50}_3 C(3,3)");
  const std::vector<BigNat> expected{8, 24, 16, 8};
  for (unsigned g = 0; g <= 3; ++g) {
    BigNat sum = 0;
    for (unsigned h = 1; h <= 3; ++h) sum += c_weight(1, 5, g, h) * binomial(3, h);
    o.check(divide_exact(8 * sum, BigNat(3)) == expected[g], "(000) chain at " + std::to_string(g));
    o.check(count_pattern({5, 3}, Pattern("000"), g) == expected[g], "(000) closed form at " + std::to_string(g));
  }
  return o;
}

Outcome ledger_closure(const std::vector<LedgerEntry>& ledger, bool tables_ok) {
  Outcome o;
  for (const char* id : {"t44-001-cell", "triple-corner-sign", "run-then-one-chain", "001-prefactor"}) {
    auto it = std::find_if(ledger.begin(), ledger.end(), [&](const LedgerEntry& e) { return e.id == id; });
    if (it == ledger.end()) {
      o.check(false, std::string(id) + " missing");
      continue;
    }
    o.check(!it->oracle.empty() && it->verdict != "unresolved", std::string(id) + " has no verdict");
    o.check(it->shipped_matches_oracle, std::string(id) + " shipped form disagrees with the oracle");
    o.notes.push_back(std::string(id) + ": " + it->verdict);
  }
  o.check(tables_ok, "numeric tables of criteria 1-3 not all reproduced");
  return o;
}

Outcome moments() {
  Outcome o;
  for (unsigned m = 1; m <= 10; ++m) {
    for (unsigned n = 1; n <= 10; ++n)
      o.check(Rational(moment_exact(m, n, 1)) == *moment_closed_form(m, n, 1), "r=1 identity");
    o.check(moment_exact(m, m, 2) * 2 * (2 * m - 1) == BigNat(m) * m * m * binomial(2 * m, m), "r=2 identity");
    o.check(moment_exact(m, m, 3) * 4 * (2 * m - 1) == BigNat(m) * m * m * (m + 1) * binomial(2 * m, m),
            "r=3 identity");
  }
  auto norm = [](unsigned m, unsigned n) { return to_double(binomial(m + n, m)); };
  struct Pair { const char* label; double value, printed; };
  const std::vector<Pair> pairs{
      {"m=2 r=4 exact", to_double(moment_exact(2, 2, 4)) / norm(2, 2), 30.0 / 9},
      {"m=2 r=4 approx", moment_approx(2, 2, 4).value / norm(2, 2), 29.0 / 9},
      {"m=10 r=4 exact", to_double(moment_exact(10, 10, 4)) / norm(10, 10), 827.40},
      {"m=10 r=4 approx", moment_approx(10, 10, 4).value / norm(10, 10), 827.22},
      {"m=10 r=5 exact", to_double(moment_exact(10, 10, 5)) / norm(10, 10), 4895.51},
      {"m=10 r=5 approx", moment_approx(10, 10, 5).value / norm(10, 10), 4891.65},
      {"m=4 n=2 r=3 exact", to_double(moment_exact(4, 2, 3)), 56},
      {"m=4 n=2 r=3 approx", moment_approx(4, 2, 3).value, 58.67},
  };
  for (const auto& p : pairs)
    o.check(within(p.value, p.printed, 0.01),
            std::string(p.label) + ": computed " + num(p.value) + ", printed " + num(p.printed));
  return o;
}

Outcome approximation_rows(const nlohmann::json& g) {
  Outcome o;
  const SequenceFamily f(5, 5);
  const double total = to_double(binomial(10, 5));
  for (unsigned i = 0; i < 6; ++i) {
    const double v = binomial_jump_pmf(f, 2 * i).value * total, printed = g["table3"]["binomial"][i];
    o.check(within(v, printed, 0.01), "binomial tau=" + std::to_string(2 * i) + ": computed " + num(v) +
                                          ", printed " + num(printed));
  }
  for (unsigned i = 0; i < 6; ++i) {
    const double v = t_asymptotic(f, 2.0 * (i + 1)).value, printed = g["table4"]["asymptotic"][i];
    o.check(within(v, printed, 0.01), "asymptotic tau=" + std::to_string(2 * (i + 1)) + ": computed " +
                                          num(v) + ", printed " + num(printed));
  }
  return o;
}

Outcome ising() {
  Outcome o;
  for (unsigned N = 1; N <= 12; ++N)
    for (double nu : {0.1, 0.5, 1.0}) {
      const double z = ising_partition_total(N, nu);
      const double brute = oracle::ising_boltzmann_sum(N, std::nullopt, nu);
      o.check(std::abs(z - brute) <= 1e-12 * brute, "total N=" + std::to_string(N) + " nu=" + num(nu));

      // the enumerated sum and the cosh-only formula are differenced in 50 digits
      const auto counts = oracle::tally<unsigned>(N, std::nullopt, [&](Word w) { return oracle::jumps(w, N); });
      const Decimal v(nu);
      Decimal sum = 0;
      for (const auto& [tau, c] : counts) sum += Decimal(c.str()) * exp((Decimal(N) - 2 * Decimal(tau)) * v);
      const Decimal deficit = sum - pow(2 * cosh(v), N);
      const Decimal sinh_term = pow(2 * sinh(v), N);
      o.check(abs(deficit - sinh_term) <= Decimal("1e-10") * abs(sinh_term),
              "deficit N=" + std::to_string(N) + " nu=" + num(nu));
    }
  return o;
}

Outcome stirling() {
  Outcome o;
  const double v = stirling_binomial(10, 3).value;
  o.check(within(v, 116.1, 0.05) && binomial(10, 3) == 120, "computed " + num(v));
  return o;
}

}  // namespace

int main() {
  const auto g = golden();
  std::vector<LedgerEntry> ledger;
  bool tables_ok = true, all = true;
  unsigned explained = 0;

  auto report = [&](int id, const char* label, double limit, auto&& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (limit > 0) o.check(secs < limit, "took " + num(secs) + " s, limit " + num(limit) + " s");
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << label << " (" << std::fixed
              << std::setprecision(3) << secs << " s)";
    for (const auto& n : o.notes) std::cout << "\n    " << n;
    std::cout << std::endl;
    return o.pass;
  };

  ledger = typo_ledger(OracleConfig{default_oracle_cap, 1});
  tables_ok &= report(1, "jump-number tables", 1.0, [&] { return jump_tables(g); });
  tables_ok &= report(2, "summed (5,3) occurrence table, closed form and enumeration", 1.0,
                      [&] { return summed_family_table(g); });
  tables_ok &= report(3, "coefficient matrices", 0, [&] { return appendix(g, ledger, explained); });
  report(4, "closed forms against enumeration, N <= 12; sum over n, N <= 14", 60.0, [] { return sweep(); });
  report(5, "worked examples", 0, [] { return worked_examples(); });
  report(6, "misprint ledger closure", 0, [&] { return ledger_closure(ledger, tables_ok); });
  report(7, "moment identities and quoted approximation pairs", 0, [] { return moments(); });
  report(8, "binomial-model and asymptotic rows", 0, [&] { return approximation_rows(g); });
  report(9, "ring Ising partition functions", 0, [] { return ising(); });
  report(10, "Gaussian binomial at (10,3)", 0, [] { return stirling(); });
  return all ? 0 : 1;
}
