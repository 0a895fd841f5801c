#pragma once

#include "cycloseq/analytics.hpp"
#include "cycloseq/coeffs.hpp"
#include "cycloseq/format.hpp"
#include "cycloseq/oracle.hpp"
#include "cycloseq/patterncounts.hpp"
#include "cycloseq/physics.hpp"
#include "cycloseq/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace cycloseq::cli {

enum ExitCode { ok = 0, verify_failed = 1, usage_error = 2, domain_error = 3 };

/// Oracle limits, with CYCLOSEQ_ORACLE_CAP overriding the length cap.
inline OracleConfig oracle_config_from_env() {
  OracleConfig config;
  if (const char* cap = std::getenv("CYCLOSEQ_ORACLE_CAP")) {
    try {
      config.cap = static_cast<unsigned>(std::stoul(cap));
    } catch (const std::exception&) {
      throw DomainError(ErrorKind::InvalidArgument, "CYCLOSEQ_ORACLE_CAP must be a number");
    }
  }
  return config;
}

namespace detail {

inline Json distribution_payload(const std::map<unsigned, BigNat>& entries) {
  Json p = Json::object();
  for (const auto& [k, v] : entries) p[std::to_string(k)] = to_string(v);
  return p;
}

inline std::string str(const Rational& v) { return cycloseq::detail::str(v); }

inline Json matrix_json(const CoeffMatrix& m, const std::string& label) {
  Json j;
  j["kind"] = std::string(name(m.kind));
  j["fixed_index"] = std::to_string(m.fixed_index);
  j["label"] = label;
  j["row_labels"] = Json::array();
  j["column_labels"] = Json::array();
  for (auto r : m.row_labels) j["row_labels"].push_back(std::to_string(r));
  for (auto c : m.column_labels) j["column_labels"].push_back(std::to_string(c));
  j["rows"] = Json::array();
  for (const auto& row : m.cells) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    j["rows"].push_back(r);
  }
  return j;
}

inline std::string matrix_label(const CoeffMatrix& m) {
  const std::string f = std::to_string(m.fixed_index);
  switch (m.kind) {
    case AppendixKind::c_by_k: return "c^i_{j" + f + "}  (rows i, columns j)";
    case AppendixKind::c_by_i: return "c^" + f + "_{jk}  (rows j, columns k)";
    case AppendixKind::cprime_by_k: return "c'^i_{j" + f + "}  (rows i, columns j)";
    case AppendixKind::cprime_weight: return "c'^{i" + f + "}_j  (rows i, columns j)";
  }
  return "";
}

}  // namespace detail

/// Parses `args` (without the program name), runs the subcommand and writes
/// the result to `out`, diagnostics to `err`. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact occurrence statistics of strings in cyclic binary sequences", "cycloseq"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "pretty";
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));

  Envelope env;
  std::function<int()> action;
  auto param = [&](const std::string& key, const auto& value) {
    if constexpr (std::is_same_v<std::decay_t<decltype(value)>, std::string>)
      env.parameters[key] = value;
    else
      env.parameters[key] = std::to_string(value);
  };

  // tnum
  auto* tnum = app.add_subcommand("tnum", "jump numbers T^{mn}_tau");
  unsigned t_m = 0, t_n = 0, t_grid = 0;
  std::optional<std::int64_t> t_tau;
  bool t_recurrence = false;
  tnum->add_option("--m", t_m, "zeros");
  tnum->add_option("--n", t_n, "ones");
  tnum->add_option("--tau", t_tau, "single even jump count");
  tnum->add_flag("--recurrence", t_recurrence, "evaluate through the tau recurrence");
  tnum->add_option("--grid", t_grid, "grid of all families with 2 <= N <= value, m >= n");
  tnum->callback([&] {
    action = [&]() -> int {
      env.command = "tnum";
      env.provenance = "closed-form";
      if (t_grid) {
        param("grid", t_grid);
        env.kind = PayloadKind::matrices;
        Json mat;
        mat["kind"] = "t_numbers";
        mat["fixed_index"] = std::to_string(t_grid);
        mat["label"] = "T^{mn}_tau  (rows tau, columns N:m)";
        mat["row_labels"] = Json::array();
        mat["column_labels"] = Json::array();
        mat["rows"] = Json::array();
        std::vector<std::pair<unsigned, unsigned>> cols;
        for (unsigned N = 2; N <= t_grid; ++N)
          for (unsigned m = N - 1; 2 * m >= N; --m) cols.emplace_back(N, m);
        for (auto [N, m] : cols) mat["column_labels"].push_back(std::to_string(N) + ":" + std::to_string(m));
        for (unsigned tau = 2; tau <= t_grid; tau += 2) {
          mat["row_labels"].push_back(std::to_string(tau));
          Json row = Json::array();
          for (auto [N, m] : cols) row.push_back(to_string(t_number(SequenceFamily(m, N - m), tau)));
          mat["rows"].push_back(row);
        }
        env.payload = Json::array({mat});
        return ok;
      }
      param("m", t_m);
      param("n", t_n);
      const SequenceFamily f(t_m, t_n);
      if (t_tau) {
        param("tau", *t_tau);
        env.kind = PayloadKind::scalar;
        env.payload["count"] =
            to_string(t_recurrence ? t_number_by_recurrence(f, *t_tau) : t_number(f, *t_tau));
        return ok;
      }
      env.kind = PayloadKind::distribution;
      env.index = "tau";
      env.payload = detail::distribution_payload(t_distribution(f).entries);
      return ok;
    };
  });

  // dist
  auto* dist = app.add_subcommand("dist", "occurrence distribution of a pattern in a family");
  unsigned d_m = 0, d_n = 0;
  std::string d_pattern, d_via = "closed";
  dist->add_option("--m", d_m, "zeros")->required();
  dist->add_option("--n", d_n, "ones")->required();
  dist->add_option("--pattern", d_pattern, "binary string")->required();
  dist->add_option("--via", d_via, "closed form or enumeration")
      ->check(CLI::IsMember({"closed", "oracle", "both"}));
  dist->callback([&] {
    action = [&]() -> int {
      env.command = "dist";
      param("m", d_m);
      param("n", d_n);
      param("pattern", d_pattern);
      const SequenceFamily f(d_m, d_n);
      const Pattern u(d_pattern);
      env.kind = PayloadKind::distribution;
      env.index = "occurrences";
      if (d_via == "oracle") {
        if (u.size() >= f.length())
          throw DomainError(ErrorKind::PatternTooLong, "pattern must be shorter than N");
        env.provenance = "oracle";
        env.payload = detail::distribution_payload(
            oracle::pattern_distribution(f, u, oracle_config_from_env()).entries);
        return ok;
      }
      const auto closed = pattern_distribution(f, u);
      env.provenance = "closed-form";
      if (d_via == "both") {
        const auto o = oracle::pattern_distribution(f, u, oracle_config_from_env());
        if (o != closed) {
          err << "closed form and enumeration disagree\n";
          return static_cast<int>(verify_failed);
        }
        env.provenance = "both";
      }
      env.payload = detail::distribution_payload(closed.entries);
      return ok;
    };
  });

  // oracle
  auto* orc = app.add_subcommand("oracle", "brute-force occurrence tally");
  unsigned o_m = 0, o_n = 0, o_all = 0;
  std::vector<std::string> o_patterns;
  bool o_jumps = false, o_types = false;
  orc->add_option("--m", o_m, "zeros");
  orc->add_option("--n", o_n, "ones");
  orc->add_option("--all", o_all, "all 2^N words of this length instead of one family");
  orc->add_option("--pattern", o_patterns, "pattern(s); several give the joint tally");
  orc->add_flag("--jumps", o_jumps, "tally jumps");
  orc->add_flag("--types", o_types, "tally block types");
  orc->callback([&] {
    action = [&]() -> int {
      env.command = "oracle";
      env.provenance = "oracle";
      const auto config = oracle_config_from_env();
      std::optional<SequenceFamily> f;
      if (o_all) {
        param("all", o_all);
      } else {
        param("m", o_m);
        param("n", o_n);
        f = SequenceFamily(o_m, o_n);
      }
      if (o_types) {
        if (!f) throw DomainError(ErrorKind::InvalidArgument, "--types needs --m and --n");
        env.kind = PayloadKind::records;
        env.payload = Json::array();
        for (const auto& [type, count] : oracle::type_tally(*f, config)) {
          Json rec;
          auto join = [](const std::vector<unsigned>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
            return s;
          };
          rec["zero_blocks"] = join(type.zero_blocks);
          rec["one_blocks"] = join(type.one_blocks);
          rec["count"] = to_string(count);
          env.payload.push_back(rec);
        }
        return ok;
      }
      if (o_jumps) {
        if (!f) throw DomainError(ErrorKind::InvalidArgument, "--jumps needs --m and --n");
        env.kind = PayloadKind::distribution;
        env.index = "tau";
        env.payload = detail::distribution_payload(oracle::jump_distribution(*f, config).entries);
        return ok;
      }
      if (o_patterns.empty()) throw DomainError(ErrorKind::InvalidArgument, "give --pattern, --jumps or --types");
      std::vector<Pattern> ps;
      std::string joined;
      for (const auto& p : o_patterns) {
        ps.emplace_back(p);
        joined += (joined.empty() ? "" : ";") + p;
      }
      param("pattern", joined);
      const auto joint = oracle::joint_distribution(f, o_all, ps, config);
      if (ps.size() == 1) {
        env.kind = PayloadKind::distribution;
        env.index = "occurrences";
        env.payload = detail::distribution_payload(joint.marginal(0).entries);
        return ok;
      }
      env.kind = PayloadKind::records;
      env.payload = Json::array();
      for (const auto& [key, count] : joint.entries) {
        Json rec;
        for (std::size_t i = 0; i < ps.size(); ++i) rec[ps[i].str()] = std::to_string(key[i]);
        rec["count"] = to_string(count);
        env.payload.push_back(rec);
      }
      return ok;
    };
  });

  // joint
  auto* joint = app.add_subcommand("joint", "joint closed-form tables (01;001), (01;101), (01;001;0001)");
  unsigned j_m = 0, j_n = 0;
  std::string j_which;
  joint->add_option("--m", j_m, "zeros")->required();
  joint->add_option("--n", j_n, "ones")->required();
  joint->add_option("--which", j_which, "table")
      ->required()
      ->check(CLI::IsMember({"01_001", "01_101", "01_001_0001"}));
  joint->callback([&] {
    action = [&]() -> int {
      env.command = "joint";
      env.provenance = "closed-form";
      param("m", j_m);
      param("n", j_n);
      param("which", j_which);
      const SequenceFamily f(j_m, j_n);
      const JointDistribution d = j_which == "01_001"   ? joint_01_001(f)
                                  : j_which == "01_101" ? joint_01_101(f)
                                                        : triple_01_001_0001(f);
      env.kind = PayloadKind::records;
      env.payload = Json::array();
      for (const auto& [key, count] : d.entries) {
        Json rec;
        for (std::size_t i = 0; i < d.patterns.size(); ++i) rec[d.patterns[i].str()] = std::to_string(key[i]);
        rec["count"] = to_string(count);
        env.payload.push_back(rec);
      }
      return ok;
    };
  });

  // coeff
  auto* coeff = app.add_subcommand("coeff", "column-deletion coefficients");
  coeff->set_help_flag("--help", "print this help");  // -h would shadow --h
  std::string c_kind, c_mode = "formula";
  unsigned c_s = 0;
  std::int64_t c_i = -1, c_j = -1, c_k = -1;
  coeff->add_option("--kind", c_kind, "c, cprime, cs (depth s) or cweight")
      ->required()
      ->check(CLI::IsMember({"c", "cprime", "cs", "cweight"}));
  coeff->add_option("--s", c_s, "deleted columns minus one");
  coeff->add_option("--i,--m", c_i, "weight")->required();
  coeff->add_option("--j,--h", c_j, "height")->required();
  coeff->add_option("--k,--g", c_k, "remaining dimension (or weight for cweight)")->required();
  coeff->add_option("--mode", c_mode, "corner convention for c^i_{i0}")
      ->check(CLI::IsMember({"formula", "counting"}));
  coeff->callback([&] {
    action = [&]() -> int {
      env.command = "coeff";
      env.provenance = "closed-form";
      param("kind", c_kind);
      if (c_kind == "cs" || c_kind == "cweight") param("s", c_s);
      param(c_kind == "cweight" ? "m" : "i", c_i);
      param(c_kind == "cweight" ? "h" : "j", c_j);
      param(c_kind == "cweight" ? "g" : "k", c_k);
      BigNat v;
      if (c_kind == "c") {
        param("mode", c_mode);
        v = c_coeff(c_i, c_j, c_k, c_mode == "counting" ? CornerMode::counting : CornerMode::formula);
      } else if (c_kind == "cprime") {
        v = c_prime(c_i, c_j, c_k);
      } else if (c_kind == "cs") {
        v = c_general(c_s, c_i, c_j, c_k);
      } else {
        v = c_weight(c_s, c_i, c_k, c_j);
      }
      env.kind = PayloadKind::scalar;
      env.payload["value"] = to_string(v);
      return ok;
    };
  });

  // appendix
  auto* appendix = app.add_subcommand("appendix", "coefficient matrices");
  std::string a_which;
  unsigned a_max = 12;
  std::optional<unsigned> a_fixed;
  appendix->add_option("--which", a_which, "matrix family")
      ->required()
      ->check(CLI::IsMember({"c_by_k", "c_by_i", "cprime_by_k", "cprime_weight"}));
  appendix->add_option("--max-i", a_max, "largest weight index")->check(CLI::Range(1u, 40u));
  appendix->add_option("--fixed", a_fixed, "only the matrix with this fixed index");
  appendix->callback([&] {
    action = [&]() -> int {
      env.command = "appendix";
      env.provenance = "closed-form";
      param("which", a_which);
      param("max_i", a_max);
      env.kind = PayloadKind::matrices;
      env.payload = Json::array();
      const auto kind = parse_appendix_kind(a_which);
      auto shape = appendix_shape(kind, a_max);
      if (a_fixed) {
        param("fixed", *a_fixed);
        shape.fixed = {*a_fixed};
      }
      for (unsigned f : shape.fixed) {
        const auto m = appendix_matrix(kind, f, shape);
        env.payload.push_back(detail::matrix_json(m, detail::matrix_label(m)));
      }
      return ok;
    };
  });

  // fib
  auto* fib = app.add_subcommand("fib", "subsets of Z_N with exactly h runs of r consecutive elements");
  fib->set_help_flag("--help", "print this help");
  std::int64_t f_N = 0, f_r = 0, f_h = 0;
  fib->add_option("--N", f_N, "ground set size")->required();
  fib->add_option("--r", f_r, "run length")->required();
  fib->add_option("--h", f_h, "number of runs")->required();
  fib->callback([&] {
    action = [&]() -> int {
      env.command = "fib";
      env.provenance = "closed-form";
      param("N", f_N);
      param("r", f_r);
      param("h", f_h);
      env.kind = PayloadKind::scalar;
      env.payload["count"] = to_string(fibonacci_gf(f_N, f_r, f_h));
      return ok;
    };
  });

  // kaplansky
  auto* kap = app.add_subcommand("kaplansky", "cyclic selections with gaps of at least p-1");
  std::int64_t k_N = 0, k_n = 0, k_p = 0;
  kap->add_option("--N", k_N, "points on the circle")->required();
  kap->add_option("--n", k_n, "selected points")->required();
  kap->add_option("--p", k_p, "minimum spacing")->required();
  kap->callback([&] {
    action = [&]() -> int {
      env.command = "kaplansky";
      env.provenance = "closed-form";
      param("N", k_N);
      param("n", k_n);
      param("p", k_p);
      env.kind = PayloadKind::scalar;
      env.payload["count"] = to_string(kaplansky(k_N, k_n, k_p));
      return ok;
    };
  });

  // ising
  auto* ising = app.add_subcommand("ising", "ring Ising partition functions");
  ising->require_subcommand(1);
  unsigned i_N = 0, i_n = 0;
  double i_nu = 0;
  auto* ifixed = ising->add_subcommand("fixed", "fixed number n of down spins");
  ifixed->add_option("--N", i_N, "spins")->required();
  ifixed->add_option("--n", i_n, "down spins")->required();
  ifixed->add_option("--nu", i_nu, "J/kT")->required();
  auto* itotal = ising->add_subcommand("total", "all configurations");
  itotal->add_option("--N", i_N, "spins")->required();
  itotal->add_option("--nu", i_nu, "J/kT")->required();
  ifixed->callback([&] {
    action = [&]() -> int {
      env.command = "ising fixed";
      env.provenance = "closed-form";
      param("N", i_N);
      param("n", i_n);
      param("nu", format_real(i_nu));
      env.kind = PayloadKind::scalar;
      env.payload["Z"] = format_real(ising_partition_fixed(i_N, i_n, i_nu));
      return ok;
    };
  });
  itotal->callback([&] {
    action = [&]() -> int {
      env.command = "ising total";
      env.provenance = "closed-form";
      param("N", i_N);
      param("nu", format_real(i_nu));
      env.kind = PayloadKind::scalar;
      env.payload["Z"] = format_real(ising_partition_total(i_N, i_nu));
      env.payload["cosh_only"] = format_real(std::pow(2 * std::cosh(i_nu), i_N));
      return ok;
    };
  });

  // walk
  auto* walk = app.add_subcommand("walk", "walk with one-step memory");
  unsigned w_N = 0;
  int w_k = 0;
  std::optional<double> w_alpha;
  walk->add_option("--N", w_N, "steps")->required();
  walk->add_option("--k", w_k, "displacement")->required();
  walk->add_option("--alpha", w_alpha, "weight of a direction change")->check(CLI::Range(0.0, 1.0));
  walk->callback([&] {
    action = [&]() -> int {
      env.command = "walk";
      env.provenance = "closed-form";
      param("N", w_N);
      param("k", w_k);
      const auto ww = walk_weight_polynomial(w_N, w_k);
      env.kind = PayloadKind::records;
      env.payload = Json::array();
      for (const auto& [tau, c] : ww.coefficients) {
        Json rec;
        rec["tau"] = std::to_string(tau);
        rec["paths"] = to_string(c);
        if (w_alpha)
          rec["weight"] = format_real(to_double(c) * std::pow(*w_alpha, double(tau)) *
                                      std::pow(1 - *w_alpha, double(w_N) - tau));
        env.payload.push_back(rec);
      }
      if (w_alpha) {
        param("alpha", format_real(*w_alpha));
        Json rec;
        rec["tau"] = "total";
        rec["paths"] = to_string(ww.path_count());
        rec["weight"] = format_real(ww.weight(*w_alpha));
        env.payload.push_back(rec);
      }
      return ok;
    };
  });

  // moments
  auto* moments = app.add_subcommand("moments", "sum_h h^r C(m,h) C(n,h)");
  unsigned mo_m = 0, mo_n = 0, mo_r = 0;
  bool mo_approx = false;
  moments->add_option("--m", mo_m, "zeros")->required();
  moments->add_option("--n", mo_n, "ones")->required();
  moments->add_option("--r", mo_r, "order")->required();
  moments->add_flag("--approx", mo_approx, "add the Stirling-number estimate");
  moments->callback([&] {
    action = [&]() -> int {
      env.command = "moments";
      env.provenance = "closed-form";
      param("m", mo_m);
      param("n", mo_n);
      param("r", mo_r);
      env.kind = PayloadKind::scalar;
      const BigNat exact = moment_exact(mo_m, mo_n, mo_r);
      const BigNat total = binomial(mo_m + mo_n, mo_m);
      env.payload["exact"] = to_string(exact);
      env.payload["exact_normalized"] = format_real(to_double(Rational(exact, total)));
      if (auto cf = moment_closed_form(mo_m, mo_n, mo_r)) env.payload["closed_form"] = detail::str(*cf);
      if (mo_approx) {
        const Rational a = moment_approx_rational(mo_m, mo_n, mo_r);
        env.payload["approx"] = format_real(to_double(a));
        env.payload["approx_normalized"] = format_real(to_double(a / Rational(total)));
      }
      return ok;
    };
  });

  // asym
  auto* asym = app.add_subcommand("asym", "asymptotic jump numbers");
  unsigned as_m = 0, as_n = 0;
  std::optional<double> as_tau;
  bool as_sweep = false;
  double as_step = 0.25;
  asym->add_option("--m", as_m, "zeros")->required();
  asym->add_option("--n", as_n, "ones")->required();
  asym->add_option("--tau", as_tau, "single tau");
  asym->add_flag("--sweep", as_sweep, "curve samples (x, value) for x from 0 to 2(m^n)+2");
  asym->add_option("--step", as_step, "sweep step")->check(CLI::PositiveNumber);
  asym->callback([&] {
    action = [&]() -> int {
      env.command = "asym";
      env.provenance = "closed-form";
      param("m", as_m);
      param("n", as_n);
      const SequenceFamily f(as_m, as_n);
      if (as_tau) {
        param("tau", format_real(*as_tau));
        env.kind = PayloadKind::scalar;
        env.payload["asymptotic"] = format_real(t_asymptotic(f, *as_tau).value);
        return ok;
      }
      env.kind = PayloadKind::records;
      env.payload = Json::array();
      const unsigned top = 2 * std::min(as_m, as_n) + 2;
      if (as_sweep) {
        param("step", format_real(as_step));
        const auto samples = static_cast<unsigned>(std::floor(top / as_step + 1e-9));
        for (unsigned s = 0; s <= samples; ++s) {
          const double x = s * as_step;
          Json rec;
          rec["x"] = format_real(x);
          rec["value"] = format_real(t_asymptotic(f, x).value);
          env.payload.push_back(rec);
        }
        return ok;
      }
      const auto exact = t_distribution(f);
      for (unsigned tau = 2; tau <= top; tau += 2) {
        Json rec;
        rec["tau"] = std::to_string(tau);
        rec["exact"] = to_string(exact.at(tau));
        rec["asymptotic"] = format_real(t_asymptotic(f, tau).value);
        if (tau <= f.length())
          rec["binomial"] = format_real(binomial_jump_pmf(f, tau).value * to_double(binomial(f.length(), f.zeros())));
        env.payload.push_back(rec);
      }
      return ok;
    };
  });

  // types
  auto* types = app.add_subcommand("types", "block types of a family and their multiplicities");
  unsigned ty_m = 0, ty_n = 0;
  types->add_option("--m", ty_m, "zeros")->required();
  types->add_option("--n", ty_n, "ones")->required();
  types->callback([&] {
    action = [&]() -> int {
      env.command = "types";
      env.provenance = "closed-form";
      param("m", ty_m);
      param("n", ty_n);
      env.kind = PayloadKind::records;
      env.payload = Json::array();
      auto join = [](const std::vector<unsigned>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
        return s;
      };
      for (const auto& [type, count] : type_census(SequenceFamily(ty_m, ty_n))) {
        Json rec;
        rec["zero_blocks"] = join(type.zero_blocks);
        rec["one_blocks"] = join(type.one_blocks);
        rec["count"] = to_string(count);
        env.payload.push_back(rec);
      }
      return ok;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "closed forms against enumeration, and the misprint ledger");
  unsigned v_max = 12;
  verify->add_option("--max-N", v_max, "largest sequence length in the sweep")->check(CLI::Range(2u, 20u));
  verify->callback([&] {
    action = [&]() -> int {
      env.command = "verify";
      env.provenance = "both";
      param("max_N", v_max);
      const auto config = oracle_config_from_env();
      const auto sweep = equivalence_sweep(v_max, config);
      const auto ledger = typo_ledger(config);
      env.kind = PayloadKind::records;
      env.payload = Json::array();
      Json summary;
      summary["id"] = "equivalence-sweep";
      summary["subject"] = "solved patterns of length <= 4 and jump distributions, N <= " + std::to_string(v_max);
      summary["printed"] = "";
      summary["alternative"] = "";
      summary["oracle"] = std::to_string(sweep.comparisons - sweep.failures.size()) + " of " +
                          std::to_string(sweep.comparisons) + " distributions equal";
      summary["verdict"] = sweep.passed() ? "closed forms agree" : "mismatch";
      summary["shipped_matches_oracle"] = sweep.passed() ? "yes" : "no";
      env.payload.push_back(summary);
      bool all = sweep.passed();
      for (const auto& e : ledger) {
        Json rec;
        rec["id"] = e.id;
        rec["subject"] = e.subject;
        rec["printed"] = e.printed;
        rec["alternative"] = e.alternative;
        rec["oracle"] = e.oracle;
        rec["verdict"] = e.verdict;
        rec["shipped_matches_oracle"] = e.shipped_matches_oracle ? "yes" : "no";
        all = all && e.shipped_matches_oracle;
        env.payload.push_back(rec);
      }
      for (const auto& f : sweep.failures) err << "mismatch: " << f << "\n";
      return all ? ok : verify_failed;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage_error;
  }

  const OutputFormat format = format_name == "json" ? OutputFormat::json
                              : format_name == "csv" ? OutputFormat::csv
                                                     : OutputFormat::pretty;
  try {
    const int code = action ? action() : static_cast<int>(usage_error);
    if (code == ok || code == verify_failed) out << emit(env, format);
    return code;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return domain_error;
  } catch (const std::invalid_argument& e) {
    err << "InvalidArgument: " << e.what() << "\n";
    return domain_error;
  }
}

}  // namespace cycloseq::cli
