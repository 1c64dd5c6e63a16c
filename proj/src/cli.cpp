#include "dinv/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dinv/plumbing.hpp"

namespace dinv {

namespace {

using ordered_json = nlohmann::ordered_json;

int64_t rat_to_exact_int(const Rat& v, const char* what) {
  if (denominator(v) != 1) throw std::logic_error(std::string(what) + ": not an integer");
  return checked_int64(numerator(v));
}

}  // namespace

std::string render_d_json(const DInvariantResult& res) {
  ordered_json j;
  j["p"] = res.triplet.p;
  j["q"] = res.triplet.q;
  j["r"] = res.triplet.r;
  j["d"] = res.d;
  j["method"] = to_string(res.method);
  if (res.argmax)
    j["argmax"] = ordered_json{{"a", res.argmax->a}, {"m", res.argmax->m}};
  else
    j["argmax"] = nullptr;
  if (res.max_f)
    j["max_f"] = res.max_f->str();
  else
    j["max_f"] = nullptr;
  j["qhb_obstructed"] = res.qhb_obstructed;
  j["pretzel"] = res.pretzel_note;
  return j.dump(2) + "\n";
}

std::string render_d_json_oracle(const Triplet& t, const OracleResult& res) {
  DInvariantResult shell;
  shell.triplet = t;
  shell.d = rat_to_exact_int(res.d_value, "oracle d");
  shell.method = Method::Oracle;
  shell.qhb_obstructed = shell.d != 0;
  shell.pretzel_note = "K(-" + std::to_string(t.p) + "," + std::to_string(t.q) + "," +
                       std::to_string(t.r) + ") not rationally slice";
  return render_d_json(shell);
}

std::string render_triplets_csv(int64_t p) {
  std::ostringstream out;
  out << "p,q,r,s,d\n";
  for (const Triplet& t : enumerate_triplets(p))
    out << t.p << ',' << t.q << ',' << t.r << ',' << (t.q - t.p) << ','
        << d_invariant(t).d << '\n';
  return out.str();
}

std::string render_triplets_table(int64_t p) {
  std::ostringstream out;
  out << "p\tq\tr\ts\td\n";
  for (const Triplet& t : enumerate_triplets(p))
    out << t.p << '\t' << t.q << '\t' << t.r << '\t' << (t.q - t.p) << '\t'
        << d_invariant(t).d << '\n';
  return out.str();
}

std::string render_family_csv(const FamilyReport& rep) {
  std::ostringstream out;
  if (rep.has_expected)
    out << "n,p,q,r,d_computed,d_expected,match,argmax_a,argmax_m\n";
  else
    out << "n,p,q,r,d_computed,argmax_a,argmax_m\n";
  for (const FamilyRow& row : rep.rows) {
    out << row.n << ',' << row.triplet.p << ',' << row.triplet.q << ',' << row.triplet.r
        << ',' << row.d_computed;
    if (rep.has_expected)
      out << ',' << *row.d_expected << ',' << (row.match ? "true" : "false");
    if (row.argmax)
      out << ',' << row.argmax->a << ',' << row.argmax->m << '\n';
    else
      out << ",,\n";
  }
  out << "# family=" << rep.family_name << " rows=" << rep.rows.size()
      << " mismatches=" << rep.mismatches << '\n';
  return out.str();
}

std::string render_region_csv(const Triplet& t) {
  std::ostringstream out;
  out << "m,delta,center_num,center_den,radius_sq_num,radius_sq_den,nearest_odd,tie,"
         "f_at_best,in_region\n";
  for (const RegionSlice& s : region_dump(t))
    out << s.m << ',' << s.delta.str() << ',' << numerator(s.center).str() << ','
        << denominator(s.center).str() << ',' << numerator(s.radius_sq).str() << ','
        << denominator(s.radius_sq).str() << ',' << s.nearest_odd << ','
        << (s.tie ? "true" : "false") << ',' << s.f_at_best.str() << ','
        << (s.in_region ? "true" : "false") << '\n';
  return out.str();
}

OracleCheckOutcome oracle_check(std::uint64_t max_budget, bool inject_fault) {
  ordered_json graphs = ordered_json::array();
  ordered_json skipped = ordered_json::array();
  bool all = true;
  for (int64_t p = 2; p <= 5; ++p) {
    for (const Triplet& t : enumerate_triplets(p)) {
      PlumbingGraph g = build_asl_graph(t);
      Int window = initial_class_count(g);
      if (window > max_budget) {
        skipped.push_back(
            ordered_json{{"triplet", {t.p, t.q, t.r}}, {"window", window.str()}});
        continue;
      }
      OracleOptions opts;
      opts.enum_budget = max_budget;
      auto t0 = std::chrono::steady_clock::now();
      OracleResult ores = oracle_d(g, opts);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      int64_t d_oracle = rat_to_exact_int(ores.d_value, "oracle d");
      int64_t d_fast = d_invariant(t).d + (inject_fault ? 2 : 0);
      bool match = (d_oracle == d_fast);
      all = all && match;
      graphs.push_back(ordered_json{{"triplet", {t.p, t.q, t.r}},
                                    {"d_oracle", d_oracle},
                                    {"d_fast", d_fast},
                                    {"match", match},
                                    {"enumerated", ores.enumerated},
                                    {"seconds", secs}});
    }
  }
  ordered_json chains = ordered_json::array();
  for (int64_t t = 1; t <= 10; ++t) {
    bool ok = true;
    auto table = classify_terminals(t);
    std::uint64_t good = 0;
    for (const auto& [k, outcome] : table) {
      int twos = 0, pos = -1;
      bool only_02 = true;
      for (int i = 0; i < int(k.evals.size()); ++i) {
        if (k.evals[i] == 2) {
          ++twos;
          pos = i + 1;  // 1-indexed position s
        } else if (k.evals[i] != 0) {
          only_02 = false;
        }
      }
      bool should_be_good = only_02 && twos <= 1;
      if (should_be_good != (outcome.verdict == Verdict::Good)) ok = false;
      if (outcome.verdict != Verdict::Good) continue;
      ++good;
      std::vector<int64_t> want(std::size_t(t), 0);
      if (twos == 1) want[std::size_t(t - pos + 1) - 1] = -2;
      if (outcome.terminal.evals != want) ok = false;
    }
    if (good != std::uint64_t(t) + 1) ok = false;
    all = all && ok;
    chains.push_back(ordered_json{{"t", t}, {"ok", ok}});
  }
  ordered_json j;
  j["budget"] = max_budget;
  j["graphs"] = graphs;
  j["skipped"] = skipped;
  j["linear_chain_checks"] = chains;
  j["all_match"] = all;
  return OracleCheckOutcome{j.dump(2) + "\n", all};
}

std::uint64_t default_enum_budget() {
  if (const char* env = std::getenv("DINV_ORACLE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("DINV_ORACLE_BUDGET is not a valid integer");
    }
  }
  return kDefaultEnumBudget;
}

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
  f << text;
}

std::pair<int64_t, int64_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int64_t n = std::stoll(text);
      return {n, n};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range (want A..B or N): " + text);
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"d-invariants of the Brieskorn spheres Sigma(p,q,r) with pq+pr-qr = 1"};
  app.require_subcommand(1);

  int64_t p = 0, q = 0, r = 0;
  std::string method = "fast", out_path, format, family_name, config_path, range = "";
  std::uint64_t enum_budget = 0, step_budget = kDefaultStepBudget;
  bool inject_fault = false;

  auto* cmd_d = app.add_subcommand("d", "d-invariant of one triple");
  cmd_d->add_option("p", p)->required();
  cmd_d->add_option("q", q)->required();
  cmd_d->add_option("r", r)->required();
  cmd_d->add_option("--method", method)->check(CLI::IsMember({"fast", "oracle", "both"}));
  cmd_d->add_option("--enum-budget", enum_budget, "oracle window cap");
  cmd_d->add_option("--step-budget", step_budget, "oracle per-path step cap");
  cmd_d->add_option("--out", out_path);

  auto* cmd_triplets = app.add_subcommand("triplets", "all triples with smallest entry p");
  cmd_triplets->add_option("p", p)->required();
  cmd_triplets->add_option("--format", format)->check(CLI::IsMember({"csv", "table"}));
  cmd_triplets->add_option("--out", out_path);

  auto* cmd_family = app.add_subcommand("family", "verify a parametric family");
  cmd_family->add_option("name", family_name, "built-in family name");
  cmd_family->add_option("--config", config_path, "family spec JSON file");
  cmd_family->add_option("--n", range, "index range A..B")->required();
  cmd_family->add_option("--out", out_path);

  auto* cmd_region = app.add_subcommand("region", "per-slice region analytics (odd p)");
  cmd_region->add_option("p", p)->required();
  cmd_region->add_option("q", q)->required();
  cmd_region->add_option("r", r)->required();
  cmd_region->add_option("--out", out_path);

  auto* cmd_graph = app.add_subcommand("graph", "almost simple linear plumbing graph");
  cmd_graph->add_option("p", p)->required();
  cmd_graph->add_option("q", q)->required();
  cmd_graph->add_option("r", r)->required();
  cmd_graph->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  cmd_graph->add_option("--out", out_path);

  auto* cmd_check = app.add_subcommand("oracle-check", "fast vs brute-force suite");
  cmd_check->add_option("--max-budget", enum_budget, "window cap");
  cmd_check->add_flag("--inject-fault", inject_fault,
                      "bias the fast value to exercise mismatch reporting");
  cmd_check->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (enum_budget == 0) enum_budget = default_enum_budget();
    if (cmd_d->parsed()) {
      Triplet t = make_triplet(p, q, r);
      std::string text;
      if (method == "fast") {
        text = render_d_json(d_invariant(t));
      } else {
        OracleOptions opts;
        opts.enum_budget = enum_budget;
        opts.step_budget = step_budget;
        OracleResult ores = oracle_d(build_asl_graph(t), opts);
        if (method == "oracle") {
          text = render_d_json_oracle(t, ores);
        } else {
          DInvariantResult fast = d_invariant(t);
          int64_t d_oracle = rat_to_exact_int(ores.d_value, "oracle d");
          if (fast.d != d_oracle)
            throw mismatch_error("fast d=" + std::to_string(fast.d) + " but oracle d=" +
                                 std::to_string(d_oracle) + " for " + to_string(t));
          text = render_d_json(fast);
        }
      }
      emit(text, out_path);
    } else if (cmd_triplets->parsed()) {
      emit(format == "table" ? render_triplets_table(p) : render_triplets_csv(p), out_path);
    } else if (cmd_family->parsed()) {
      FamilySpec spec;
      if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) throw std::invalid_argument("cannot read config: " + config_path);
        std::stringstream buf;
        buf << f.rdbuf();
        spec = family_spec_from_json(buf.str());
      } else if (!family_name.empty()) {
        auto found = find_family(family_name);
        if (!found) throw std::invalid_argument("unknown family: " + family_name);
        spec = *found;
      } else {
        throw std::invalid_argument("family: give a name or --config");
      }
      auto [lo, hi] = parse_range(range);
      FamilyReport rep = verify_family(spec, lo, hi);
      emit(render_family_csv(rep), out_path);
      if (rep.mismatches > 0)
        throw mismatch_error("family " + rep.family_name + ": " +
                             std::to_string(rep.mismatches) + " mismatches");
    } else if (cmd_region->parsed()) {
      emit(render_region_csv(make_triplet(p, q, r)), out_path);
    } else if (cmd_graph->parsed()) {
      PlumbingGraph g = build_asl_graph(make_triplet(p, q, r));
      emit(format == "dot" ? graph_to_dot(g) : graph_to_json(g), out_path);
    } else if (cmd_check->parsed()) {
      OracleCheckOutcome outcome = oracle_check(enum_budget, inject_fault);
      emit(outcome.json, out_path);
      if (!outcome.all_match) throw mismatch_error("oracle-check found disagreements");
    }
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const mismatch_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace dinv
