// Command-line front end: single-point formula/bound/oracle queries, seeded
// Monte Carlo estimates, parameter sweeps to CSV, and the verification suite.
//
// Exit codes: 0 success, 2 argument error, 3 enumeration budget refusal,
// 4 verification failure.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rig/combinatorics.hpp"
#include "rig/formulas.hpp"
#include "rig/model.hpp"
#include "rig/montecarlo.hpp"
#include "rig/oracle.hpp"
#include "rig/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace rig;

struct DistOptions {
  bool uniform = false;
  unsigned m = 0;
  std::string p_text;
};

void add_dist_options(CLI::App* cmd, DistOptions& d) {
  cmd->add_flag("--uniform", d.uniform, "use the uniform distribution on m labels");
  cmd->add_option("--m", d.m, "label count (with --uniform)");
  cmd->add_option("--p", d.p_text, "probability vector, e.g. 1/2,1/4,1/4");
}

LabelDistribution resolve_distribution(const DistOptions& d) {
  if (d.uniform) {
    if (d.m == 0) throw std::invalid_argument("--uniform requires --m");
    if (!d.p_text.empty()) throw std::invalid_argument("give either --uniform or --p, not both");
    return LabelDistribution::uniform(d.m);
  }
  if (d.p_text.empty()) throw std::invalid_argument("provide --uniform --m or --p");
  LabelDistribution p = LabelDistribution::parse(d.p_text);
  if (d.m != 0 && d.m != p.label_count())
    throw std::invalid_argument("--m disagrees with the length of --p");
  return p;
}

std::string render(const Rational& v) {
  return to_fraction_string(v) + " (" + to_decimal_string(v) + ")";
}

void print_estimate(const McEstimate& e) {
  std::cout << "estimate " << to_decimal_string(e.point_estimate) << "\n"
            << "ci95_low " << to_decimal_string(e.ci_low) << "\n"
            << "ci95_high " << to_decimal_string(e.ci_high) << "\n"
            << "trials " << e.trials << "\n"
            << "seed " << e.seed << "\n";
}

void apply_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const int v = std::stoi(text);
    if (v < 1) throw std::invalid_argument("bad range: " + text);
    return {v, v};
  }
  const int lo = std::stoi(text.substr(0, colon));
  const int hi = std::stoi(text.substr(colon + 1));
  if (lo < 1 || hi < lo) throw std::invalid_argument("bad range: " + text);
  return {lo, hi};
}

// ---------------------------------------------------------------------------

int run_exact(const std::string& formula, int n, int x, int i, int j, int k,
              const DistOptions& dist) {
  if (formula == "edge-prob") {
    if (dist.uniform) {
      std::cout << render(edge_prob_uniform(n, static_cast<int>(dist.m)).value) << "\n";
    } else {
      const LabelDistribution p = resolve_distribution(dist);
      std::cout << render(edge_prob(n, p.prob(i), p.prob(j)).value) << "\n";
    }
    return 0;
  }
  if (formula == "empty-graph") {
    if (!dist.uniform)
      throw std::invalid_argument(
          "the edgeless-graph probability is exact only in the uniform case; "
          "see `bound empty-graph` for the general lower bound");
    std::cout << render(empty_graph_prob_uniform(n, static_cast<int>(dist.m), k).value) << "\n";
    return 0;
  }
  if (formula == "expected-edges") {
    if (dist.uniform)
      std::cout << render(expected_edge_count_uniform(n, static_cast<int>(dist.m))) << "\n";
    else
      std::cout << render(expected_edge_count(n, resolve_distribution(dist))) << "\n";
    return 0;
  }
  if (formula == "point-in-interval") {
    const LabelDistribution p = resolve_distribution(dist);
    std::cout << render(point_in_interval_prob(n, x, p.prob(i)).value) << "\n";
    return 0;
  }
  if (formula == "coupon-time") {
    if (!dist.uniform)
      throw std::invalid_argument(
          "exact coupon-time needs --uniform; `waiting-time` evaluates the "
          "integral for a general vector");
    std::cout << render(coupon_expected_time_uniform(static_cast<int>(dist.m))) << "\n";
    return 0;
  }
  throw std::invalid_argument("unknown formula: " + formula);
}

int run_bound(const std::string& name, int n, int k, const DistOptions& dist, bool verbatim) {
  if (name == "empty-graph") {
    std::cout << render(empty_graph_prob_lower(n, resolve_distribution(dist), k).value) << "\n";
    return 0;
  }
  if (name == "clique") {
    if (verbatim) {
      if (!dist.uniform) throw std::invalid_argument("--paper-verbatim applies to --uniform");
      std::cout << render(expected_clique_lower_bound_uniform_alt(n, static_cast<int>(dist.m)))
                << "\n";
    } else {
      std::cout << render(expected_clique_lower_bound(n, resolve_distribution(dist))) << "\n";
    }
    return 0;
  }
  if (name == "max-degree") {
    if (verbatim) {
      if (!dist.uniform) throw std::invalid_argument("--paper-verbatim applies to --uniform");
      std::cout << render(max_degree_lower_bound_uniform_alt(n, static_cast<int>(dist.m)))
                << "\n";
    } else {
      std::cout << render(max_degree_lower_bound(n, resolve_distribution(dist)).value) << "\n";
    }
    return 0;
  }
  if (name == "simplex") {
    std::cout << render(simplex_prob_lower_bound(n, resolve_distribution(dist)).value) << "\n";
    return 0;
  }
  if (name == "waiting-time") {
    if (dist.uniform)
      std::cout << render(waiting_time_upper_bound_uniform(static_cast<int>(dist.m))) << "\n";
    else
      std::cout << to_decimal_string(waiting_time_upper_bound(resolve_distribution(dist)))
                << "\n";
    return 0;
  }
  throw std::invalid_argument("unknown bound: " + name);
}

int run_oracle(int n, const DistOptions& dist, const std::string& event_text,
               const std::string& stat_text, std::uint64_t budget) {
  const LabelDistribution p = resolve_distribution(dist);
  const OracleLimits limits{budget};
  if (!event_text.empty()) {
    const Rational v = enumerate_event_prob(n, p, EventQuery::parse(event_text), limits);
    std::cout << render(v) << "\n";
  } else if (!stat_text.empty()) {
    const Rational v = enumerate_expectation(n, p, parse_statistic(stat_text), limits);
    std::cout << render(v) << "\n";
  } else {
    throw std::invalid_argument("provide --event or --stat");
  }
  return 0;
}

int run_simulate(int n, const DistOptions& dist, const std::string& event_text,
                 const std::string& stat_text, std::uint64_t trials, std::uint64_t seed) {
  const LabelDistribution p = resolve_distribution(dist);
  if (!event_text.empty()) {
    print_estimate(estimate_event(n, p, EventQuery::parse(event_text), trials, seed));
  } else if (!stat_text.empty()) {
    print_estimate(estimate_statistic(n, p, parse_statistic(stat_text), trials, seed));
  } else {
    throw std::invalid_argument("provide --event or --stat");
  }
  return 0;
}

int run_waiting_time(const DistOptions& dist, std::uint64_t trials, std::uint64_t seed,
                     std::uint64_t cap) {
  const LabelDistribution p = resolve_distribution(dist);
  std::cout << "collection_time ";
  if (p.is_uniform())
    std::cout << render(coupon_expected_time_uniform(static_cast<int>(p.label_count())));
  else
    std::cout << to_decimal_string(coupon_expected_time(p));
  std::cout << "\nupper_bound ";
  if (p.is_uniform())
    std::cout << render(waiting_time_upper_bound_uniform(static_cast<int>(p.label_count())));
  else
    std::cout << to_decimal_string(waiting_time_upper_bound(p));
  std::cout << "\n";

  const WaitingTimeEstimate w = estimate_waiting_time(p, trials, seed, cap);
  print_estimate(w.estimate);
  std::cout << "truncated " << w.truncated << "\n"
            << "cap " << w.cap << "\n";
  return 0;
}

int run_scheinerman(int m, std::uint64_t trials, std::uint64_t seed) {
  const McEstimate e = scheinerman_max_degree_estimate(m, trials, seed);
  print_estimate(e);
  std::cout << "target " << render(Rational(2, 3)) << "\n";
  return 0;
}

int run_nerve(const std::string& coloring_text, unsigned m) {
  const Coloring coloring = Coloring::parse(coloring_text);
  if (m == 0)
    m = static_cast<unsigned>(
        *std::max_element(coloring.labels.begin(), coloring.labels.end()));
  const SupportSet supports = derive_supports(coloring, static_cast<int>(m));
  std::cout << "supports:";
  for (unsigned label = 1; label <= m; ++label) {
    std::cout << " " << label << "=";
    if (supports.present(label))
      std::cout << "[" << supports.span(label).first << "," << supports.span(label).last << "]";
    else
      std::cout << "-";
  }
  const IntervalGraph graph = build_interval_graph(supports);
  std::cout << "\nedges:";
  for (const auto& [a, b] : graph.edges) std::cout << " {" << a << "," << b << "}";
  std::cout << "\nnerve: " << build_nerve(graph).to_string() << "\n"
            << "clique_number: " << clique_number(graph) << "\n"
            << "max_degree: " << max_degree(graph) << "\n";
  return 0;
}

// --- sweep ------------------------------------------------------------------

struct SweepRow {
  int m, n;
  std::string event, method, value, ci_low, ci_high, trials, seed;
};

// The sweep grid is uniform per m (the setting the bounds target).
// `maxdeg:full` resolves to maxdeg:(m-1) in every cell.
int run_sweep(const std::string& m_range, const std::string& n_range,
              const std::string& event_text, const std::string& stat_text,
              const std::string& methods_text, std::uint64_t trials, std::uint64_t seed,
              const std::string& out_path, std::uint64_t budget) {
  const auto [m_lo, m_hi] = parse_range(m_range);
  const auto [n_lo, n_hi] = parse_range(n_range);
  if (event_text.empty() == stat_text.empty())
    throw std::invalid_argument("provide exactly one of --event or --stat");

  std::vector<std::string> methods;
  {
    std::stringstream ss(methods_text);
    std::string token;
    while (std::getline(ss, token, ',')) methods.push_back(token);
    if (methods.empty()) throw std::invalid_argument("--methods must not be empty");
    for (const auto& method : methods)
      if (method != "exact" && method != "bound" && method != "oracle" && method != "mc")
        throw std::invalid_argument("unknown method: " + method);
  }
  const bool wants_mc = std::find(methods.begin(), methods.end(), "mc") != methods.end();
  if (wants_mc && trials == 0) throw std::invalid_argument("method mc requires --trials");

  const OracleLimits limits{budget};
  std::vector<SweepRow> rows;

  for (int m = m_lo; m <= m_hi; ++m) {
    const LabelDistribution p = LabelDistribution::uniform(m);
    for (int n = n_lo; n <= n_hi; ++n) {
      std::optional<EventQuery> event;
      std::optional<Statistic> stat;
      std::string cell_label;
      if (!event_text.empty()) {
        std::string resolved = event_text;
        if (resolved == "maxdeg:full") resolved = "maxdeg:" + std::to_string(m - 1);
        event = EventQuery::parse(resolved);
        event->validate(n, m);
        cell_label = event->to_string();
      } else {
        stat = parse_statistic(stat_text);
        cell_label = "mean:" + stat_text;
      }

      for (const std::string& method : methods) {
        SweepRow row{m, n, cell_label, method, "", "", "", "", ""};
        if (method == "exact") {
          Rational v;
          if (event && event->kind == EventQuery::Kind::EdgePresent)
            v = edge_prob_uniform(n, m).value;
          else if (event && event->kind == EventQuery::Kind::EmptyGraphWithKVertices)
            v = empty_graph_prob_uniform(n, m, event->a).value;
          else if (event && event->kind == EventQuery::Kind::PointInInterval)
            v = point_in_interval_prob(n, event->a, p.prob(event->b)).value;
          else if (stat && *stat == Statistic::EdgeCount)
            v = expected_edge_count_uniform(n, m);
          else
            throw std::invalid_argument("no exact formula for " + cell_label);
          row.value = to_decimal_string(v);
        } else if (method == "bound") {
          Rational v;
          if (event && event->kind == EventQuery::Kind::IsComplete)
            v = simplex_prob_lower_bound_uniform(n, m).value;
          else if (event && event->kind == EventQuery::Kind::MaxDegreeEquals &&
                   event->a == m - 1)
            v = max_degree_lower_bound_uniform(n, m).value;
          else if (event && event->kind == EventQuery::Kind::EmptyGraphWithKVertices)
            v = empty_graph_prob_lower(n, p, event->a).value;
          else if (stat && *stat == Statistic::CliqueNumber)
            v = expected_clique_lower_bound_uniform(n, m);
          else
            throw std::invalid_argument("no bound for " + cell_label);
          row.value = to_decimal_string(v);
        } else if (method == "oracle") {
          const Rational v = event ? enumerate_event_prob(n, p, *event, limits)
                                   : enumerate_expectation(n, p, *stat, limits);
          row.value = to_decimal_string(v);
        } else {  // mc
          const McEstimate e = event ? estimate_event(n, p, *event, trials, seed)
                                     : estimate_statistic(n, p, *stat, trials, seed);
          row.value = to_decimal_string(e.point_estimate);
          row.ci_low = to_decimal_string(e.ci_low);
          row.ci_high = to_decimal_string(e.ci_high);
          row.trials = std::to_string(e.trials);
          row.seed = std::to_string(e.seed);
        }
        rows.push_back(std::move(row));
      }
    }
  }

  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.m, a.n, a.method) < std::tie(b.m, b.n, b.method);
  });

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
    out = &file;
  }
  *out << "m,n,event,method,value,ci_low,ci_high,trials,seed\n";
  for (const SweepRow& r : rows)
    *out << r.m << ',' << r.n << ',' << r.event << ',' << r.method << ',' << r.value << ','
         << r.ci_low << ',' << r.ci_high << ',' << r.trials << ',' << r.seed << '\n';
  return 0;
}

int run_verify(std::uint64_t budget) {
  const std::vector<CheckResult> results = run_verification(budget);
  print_results(results);
  if (all_passed(results)) {
    std::printf("verify: all checks passed\n");
    return 0;
  }
  std::printf("verify: FAILURES present\n");
  return 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random interval graph model: exact formulas, bounds, enumeration, simulation"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP thread count (0 = library default)");

  // exact
  auto* exact = app.add_subcommand("exact", "evaluate a closed-form value");
  std::string exact_formula;
  exact->add_option("formula", exact_formula,
                    "edge-prob | empty-graph | expected-edges | point-in-interval | coupon-time")
      ->required();
  int exact_n = 1, exact_x = 1, exact_i = 1, exact_j = 2, exact_k = 0;
  DistOptions exact_dist;
  exact->add_option("--n", exact_n, "sample count");
  exact->add_option("--x", exact_x, "position (point-in-interval)");
  exact->add_option("--i", exact_i, "first label");
  exact->add_option("--j", exact_j, "second label");
  exact->add_option("--k", exact_k, "vertex count (empty-graph)");
  add_dist_options(exact, exact_dist);

  // bound
  auto* bound = app.add_subcommand("bound", "evaluate a named bound");
  std::string bound_name;
  bound->add_option("name", bound_name,
                    "empty-graph | clique | max-degree | simplex | waiting-time")
      ->required();
  int bound_n = 1, bound_k = 0;
  bool bound_verbatim = false;
  DistOptions bound_dist;
  bound->add_option("--n", bound_n, "sample count");
  bound->add_option("--k", bound_k, "vertex count (empty-graph)");
  bound->add_flag("--paper-verbatim", bound_verbatim,
                  "use the alternate printed uniform closed form");
  add_dist_options(bound, bound_dist);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact enumeration over all colorings");
  int oracle_n = 1;
  DistOptions oracle_dist;
  std::string oracle_event, oracle_stat;
  std::uint64_t oracle_budget = OracleLimits{}.max_states;
  oracle->add_option("--n", oracle_n, "sample count")->required();
  oracle->add_option("--event", oracle_event,
                     "edge:i,j | empty:k | maxdeg:d | complete | point:x,i | clique-ge:t");
  oracle->add_option("--stat", oracle_stat, "edges | clique | maxdeg");
  oracle->add_option("--budget", oracle_budget, "max number of colorings to enumerate");
  add_dist_options(oracle, oracle_dist);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of an event or mean");
  int sim_n = 1;
  DistOptions sim_dist;
  std::string sim_event, sim_stat;
  std::uint64_t sim_trials = 0, sim_seed = 0;
  simulate->add_option("--n", sim_n, "sample count")->required();
  simulate->add_option("--event", sim_event, "event to estimate (see `oracle`)");
  simulate->add_option("--stat", sim_stat, "statistic mean to estimate");
  simulate->add_option("--trials", sim_trials, "trial count")->required();
  simulate->add_option("--seed", sim_seed, "master seed")->required();
  add_dist_options(simulate, sim_dist);

  // waiting-time
  auto* waiting = app.add_subcommand(
      "waiting-time", "upper bound and Monte Carlo estimate of the waiting time");
  DistOptions wait_dist;
  std::uint64_t wait_trials = 0, wait_seed = 0, wait_cap = 0;
  waiting->add_option("--trials", wait_trials, "trial count")->required();
  waiting->add_option("--seed", wait_seed, "master seed")->required();
  waiting->add_option("--cap", wait_cap, "per-trial step cap (0 = ceil(40 m H_m))");
  add_dist_options(waiting, wait_dist);

  // scheinerman
  auto* schein = app.add_subcommand("scheinerman",
                                    "max-degree probability in the random-endpoint model");
  int schein_m = 2;
  std::uint64_t schein_trials = 0, schein_seed = 0;
  schein->add_option("--m", schein_m, "interval count")->required();
  schein->add_option("--trials", schein_trials, "trial count")->required();
  schein->add_option("--seed", schein_seed, "master seed")->required();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "uniform-case grid evaluation to CSV");
  std::string sweep_m, sweep_n, sweep_event, sweep_stat, sweep_methods, sweep_out;
  std::uint64_t sweep_trials = 0, sweep_seed = 0;
  std::uint64_t sweep_budget = OracleLimits{}.max_states;
  sweep->add_option("--m-range", sweep_m, "label counts, e.g. 2:5")->required();
  sweep->add_option("--n-range", sweep_n, "sample counts, e.g. 2:40")->required();
  sweep->add_option("--event", sweep_event, "event; `maxdeg:full` means degree m-1 per cell");
  sweep->add_option("--stat", sweep_stat, "statistic mean: edges | clique | maxdeg");
  sweep->add_option("--methods", sweep_methods, "subset of exact,bound,oracle,mc")->required();
  sweep->add_option("--trials", sweep_trials, "trials per mc cell");
  sweep->add_option("--seed", sweep_seed, "master seed for mc cells");
  sweep->add_option("--out", sweep_out, "output CSV path (default stdout)");
  sweep->add_option("--budget", sweep_budget, "oracle state budget");

  // verify
  auto* verify = app.add_subcommand("verify", "run the identity/inequality suite");
  std::uint64_t verify_budget = OracleLimits{}.max_states;
  verify->add_option("--budget", verify_budget, "oracle state budget");

  // nerve
  auto* nerve = app.add_subcommand("nerve", "build supports, graph, and nerve of a coloring");
  std::string nerve_coloring;
  unsigned nerve_m = 0;
  nerve->add_option("--coloring", nerve_coloring, "comma-separated labels, e.g. 1,2,1,3")
      ->required();
  nerve->add_option("--m", nerve_m, "label count (default: max label)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    apply_threads(threads);
    if (exact->parsed())
      return run_exact(exact_formula, exact_n, exact_x, exact_i, exact_j, exact_k, exact_dist);
    if (bound->parsed())
      return run_bound(bound_name, bound_n, bound_k, bound_dist, bound_verbatim);
    if (oracle->parsed())
      return run_oracle(oracle_n, oracle_dist, oracle_event, oracle_stat, oracle_budget);
    if (simulate->parsed())
      return run_simulate(sim_n, sim_dist, sim_event, sim_stat, sim_trials, sim_seed);
    if (waiting->parsed()) return run_waiting_time(wait_dist, wait_trials, wait_seed, wait_cap);
    if (schein->parsed()) return run_scheinerman(schein_m, schein_trials, schein_seed);
    if (sweep->parsed())
      return run_sweep(sweep_m, sweep_n, sweep_event, sweep_stat, sweep_methods, sweep_trials,
                       sweep_seed, sweep_out, sweep_budget);
    if (verify->parsed()) return run_verify(verify_budget);
    if (nerve->parsed()) return run_nerve(nerve_coloring, nerve_m);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
