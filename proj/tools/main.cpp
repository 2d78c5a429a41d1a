// Command-line front end: construct / permanent / count / search / verify.
// All output is deterministic for a given argv; JSON payloads follow
// schema/output.schema.json.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permkit/additive_groups.hpp"
#include "permkit/counting.hpp"
#include "permkit/doubling_sequence.hpp"
#include "permkit/exact_matrix.hpp"
#include "permkit/format.hpp"
#include "permkit/involution_builder.hpp"
#include "permkit/linalg.hpp"
#include "permkit/search.hpp"
#include "permkit/validate.hpp"

namespace {

using nlohmann::json;
using namespace permkit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

json witness_json(const Permutation& p) {
  json w;
  w["oneline"] = p.one_line();
  w["cycles"] = to_cycle_string(p);
  return w;
}

// ---- construct ----------------------------------------------------------

int run_construct(int n, const std::string& sequence, const std::string& format) {
  const DoublingSequence seq = DoublingSequence::parse(sequence);
  const Permutation p = build_involution(n, seq);
  if (format == "oneline") {
    std::cout << to_one_line_string(p) << "\n";
  } else if (format == "cycles") {
    std::cout << to_cycle_string(p) << "\n";
  } else {
    std::vector<int> sums;
    for (int k = 1; k <= n; ++k) sums.push_back(k + p(k));
    json out;
    out["command"] = "construct";
    out["n"] = n;
    out["sequence"] = seq.name();
    out["oneline"] = p.one_line();
    out["cycles"] = to_cycle_string(p);
    out["sums"] = sums;
    out["involution"] = p.is_involution();
    std::cout << out.dump() << "\n";
  }
  return kExitOk;
}

// ---- permanent ----------------------------------------------------------

ExactMatrix matrix_for_kind(const std::string& kind, int n) {
  if (kind == "power") return power_matrix(n);
  if (kind == "prime-sum") return indicator_matrix(n, CellCondition::sum_prime);
  if (kind == "pow2-sum") return indicator_matrix(n, CellCondition::sum_power_of_two);
  if (kind == "mersenne-sum") return indicator_matrix(n, CellCondition::sum_mersenne);
  if (kind == "fib-sum") return indicator_matrix(n, DoublingSequence::fibonacci_tail());
  if (kind == "lucas-sum") return indicator_matrix(n, DoublingSequence::lucas_variant());
  if (kind == "tri-sum") return indicator_matrix(n, DoublingSequence::triangular_variant());
  if (kind == "prod-plus-one") return indicator_matrix(n, CellCondition::product_plus_one_prime);
  if (kind == "prod-minus-one") return indicator_matrix(n, CellCondition::product_minus_one_prime);
  if (kind == "norm-form") return indicator_matrix(n, CellCondition::norm_form_prime);
  if (kind == "sum-squares") return indicator_matrix(n, CellCondition::sum_of_squares_prime);
  if (kind == "prime-sum-plus-one")
    return indicator_matrix(n, CellCondition::prime_sum_plus_one_prime);
  if (kind == "prime-prod-minus-two")
    return indicator_matrix(n, CellCondition::prime_product_minus_two_prime);
  fail(errc::parse_error, "unknown matrix kind '" + kind + "'");
}

int run_permanent(const std::string& kind, int n, std::int64_t modulus, int threads,
                  int max_n, const std::string& format) {
  if (modulus < 0) fail(errc::bad_modulus, "modulus must be positive");
  const ExactMatrix m = matrix_for_kind(kind, n);
  json out;
  out["command"] = "permanent";
  out["kind"] = kind;
  out["n"] = n;
  std::string plain;
  if (modulus > 0) {
    const std::uint64_t r =
        permanent_mod(m, static_cast<std::uint64_t>(modulus), max_n > 0 ? max_n : kPermanentModMaxN);
    out["modulus"] = modulus;
    out["residue"] = r;
    plain = std::to_string(r);
  } else {
    const Int v = permanent(m, max_n > 0 ? max_n : kPermanentMaxN, threads);
    out["value"] = v.str();
    plain = v.str();
  }
  if (format == "plain")
    std::cout << plain << "\n";
  else
    std::cout << out.dump() << "\n";
  return kExitOk;
}

// ---- count --------------------------------------------------------------

CountKind parse_count_kind(const std::string& kind) {
  if (kind == "fib") return CountKind::fibonacci;
  if (kind == "pow2") return CountKind::power_two;
  if (kind == "prime-sum") return CountKind::prime_sum;
  if (kind == "chen-even") return CountKind::chen_even;
  fail(errc::parse_error, "unknown count kind '" + kind + "'");
}

int run_count(const std::string& kind, int n_max, bool bfile, int max_n,
              const std::string& format) {
  const CountKind ck = parse_count_kind(kind);
  const auto reports = sequence_counts(ck, n_max, max_n > 0 ? max_n : kCountingMaxN);
  // chen-even tabulates the even-permutation count.
  auto value_of = [&](const CountReport& r) -> Int {
    return ck == CountKind::chen_even ? *r.even : r.total;
  };
  if (bfile || format == "bfile") {
    std::vector<std::pair<std::int64_t, Int>> rows;
    for (const auto& r : reports) rows.emplace_back(r.n, value_of(r));
    std::cout << emit_bfile(rows);
    return kExitOk;
  }
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : reports) {
      json row;
      row["n"] = r.n;
      row["total"] = r.total.str();
      if (r.even) row["even"] = r.even->str();
      if (r.odd) row["odd"] = r.odd->str();
      rows.push_back(row);
    }
    json out;
    out["command"] = "count";
    out["kind"] = kind;
    out["n_max"] = n_max;
    out["rows"] = rows;
    std::cout << out.dump() << "\n";
    return kExitOk;
  }
  for (const auto& r : reports) std::cout << r.n << " " << value_of(r).str() << "\n";
  return kExitOk;
}

// ---- search -------------------------------------------------------------

struct CellProblemSpec {
  CellCondition condition;
  ParityFilter parity = ParityFilter::any;
  // Renders the constraint values the witness realizes, e.g. "k*pi(k)+1".
  std::string (*describe)(const Permutation&) = nullptr;
};

std::string describe_products_plus_one(const Permutation& p) {
  std::string s = "values";
  for (int k = 1; k <= p.degree(); ++k)
    s += " " + std::to_string(static_cast<std::int64_t>(k) * p(k) + 1);
  return s + " all prime";
}
std::string describe_products_minus_one(const Permutation& p) {
  std::string s = "values";
  for (int k = 1; k <= p.degree(); ++k)
    s += " " + std::to_string(static_cast<std::int64_t>(k) * p(k) - 1);
  return s + " all prime";
}
std::string describe_norm_form(const Permutation& p) {
  std::string s = "values";
  for (int k = 1; k <= p.degree(); ++k) {
    const std::int64_t v = static_cast<std::int64_t>(k) * k +
                           static_cast<std::int64_t>(k) * p(k) +
                           static_cast<std::int64_t>(p(k)) * p(k);
    s += " " + std::to_string(v);
  }
  return s + " all prime";
}
std::string describe_sum_squares(const Permutation& p) {
  std::string s = "values";
  for (int k = 1; k <= p.degree(); ++k)
    s += " " + std::to_string(static_cast<std::int64_t>(k) * k +
                              static_cast<std::int64_t>(p(k)) * p(k));
  return s + " all prime";
}
std::string describe_prime_sums(const Permutation& p) {
  const auto primes = PrimeTable::first(p.degree()).primes();
  std::string s = "values";
  for (int k = 1; k <= p.degree(); ++k)
    s += " " + std::to_string(primes[k - 1] + primes[p(k) - 1] + 1);
  return s + " all prime";
}
std::string describe_chen(const Permutation& p) {
  const auto primes = PrimeTable::first(p.degree()).primes();
  std::string s = "values";
  for (int k = 1; k <= p.degree(); ++k)
    s += " " + std::to_string(primes[k - 1] * primes[p(k) - 1] - 2);
  return s + " all prime";
}

std::optional<CellProblemSpec> cell_problem(const std::string& problem) {
  if (problem == "conj43a")
    return CellProblemSpec{CellCondition::product_plus_one_prime, ParityFilter::any,
                           describe_products_plus_one};
  if (problem == "conj43b")
    return CellProblemSpec{CellCondition::product_minus_one_prime, ParityFilter::any,
                           describe_products_minus_one};
  if (problem == "conj44a")
    return CellProblemSpec{CellCondition::norm_form_prime, ParityFilter::any, describe_norm_form};
  if (problem == "conj44b")
    return CellProblemSpec{CellCondition::sum_of_squares_prime, ParityFilter::any,
                           describe_sum_squares};
  if (problem == "conj45")
    return CellProblemSpec{CellCondition::prime_sum_plus_one_prime, ParityFilter::any,
                           describe_prime_sums};
  if (problem == "conj46-even")
    return CellProblemSpec{CellCondition::prime_product_minus_two_prime, ParityFilter::even,
                           describe_chen};
  if (problem == "conj46-odd")
    return CellProblemSpec{CellCondition::prime_product_minus_two_prime, ParityFilter::odd,
                           describe_chen};
  return std::nullopt;
}

struct FractionProblemSpec {
  FractionKind kind;
  Topology topo;
  int target;  // exact rational target, integral for every built-in problem
};

std::optional<FractionProblemSpec> fraction_problem(const std::string& problem) {
  if (problem == "s18a")
    return FractionProblemSpec{FractionKind::sum_reciprocal, Topology::linear, 1};
  if (problem == "eq44")
    return FractionProblemSpec{FractionKind::adj_product_reciprocal, Topology::linear, 1};
  if (problem == "eq45")
    return FractionProblemSpec{FractionKind::adj_sum_reciprocal, Topology::linear, 1};
  if (problem == "eq46")
    return FractionProblemSpec{FractionKind::adj_sum_reciprocal, Topology::cyclic, 1};
  if (problem == "eq47")
    return FractionProblemSpec{FractionKind::adj_difference_reciprocal, Topology::linear, 0};
  if (problem == "eq48")
    return FractionProblemSpec{FractionKind::adj_difference_reciprocal, Topology::cyclic, 0};
  if (problem == "eq49")
    return FractionProblemSpec{FractionKind::adj_square_difference_reciprocal, Topology::linear,
                               0};
  return std::nullopt;
}

int emit_outcome(const std::string& problem, int n, const SearchOutcome& outcome,
                 const std::string& certificate, const std::string& format) {
  if (format == "plain") {
    std::cout << verdict_name(outcome.verdict);
    if (outcome.witness) std::cout << " " << to_one_line_string(*outcome.witness);
    std::cout << "\n";
  } else {
    json out;
    out["command"] = "search";
    out["problem"] = problem;
    out["n"] = n;
    out["verdict"] = verdict_name(outcome.verdict);
    if (outcome.witness) out["witness"] = witness_json(*outcome.witness);
    if (!certificate.empty()) out["certificate"] = certificate;
    out["nodes"] = outcome.nodes;
    out["elapsed_seconds"] = outcome.elapsed_seconds;
    std::cout << out.dump() << "\n";
  }
  return outcome.verdict == Verdict::unknown ? kExitBudget : kExitOk;
}

int run_search(const std::string& problem, int n, const SearchLimits& limits,
               const std::string& format) {
  if (auto spec = cell_problem(problem)) {
    const ExactMatrix allowed = indicator_matrix(n, spec->condition);
    const SearchOutcome outcome = find_perm(allowed, spec->parity, limits);
    std::string cert = outcome.certificate;
    if (outcome.witness && spec->describe) cert = spec->describe(*outcome.witness);
    return emit_outcome(problem, n, outcome, cert, format);
  }
  if (auto spec = fraction_problem(problem)) {
    const SearchOutcome outcome =
        unit_fraction_search(n, spec->kind, spec->topo, Rational(spec->target), limits);
    return emit_outcome(problem, n, outcome, outcome.certificate, format);
  }
  if (problem == "conj49") {
    const SearchOutcome outcome = adjacent_product_search(n, limits);
    return emit_outcome(problem, n, outcome, outcome.certificate, format);
  }
  if (problem == "prime-circle") {
    const SearchOutcome outcome = prime_circle(n, limits);
    return emit_outcome(problem, n, outcome, outcome.certificate, format);
  }
  if (problem == "conj49ii") {
    const PowerSetReport report = fixed_last_power_set(n, limits);
    if (format == "plain") {
      for (std::int64_t p : report.powers) std::cout << p << "\n";
    } else {
      json out;
      out["command"] = "search";
      out["problem"] = "conj49ii";
      out["n"] = n;
      out["powers"] = report.powers;
      out["exhaustive"] = report.exhaustive;
      out["nodes"] = report.nodes;
      std::cout << out.dump() << "\n";
    }
    return report.exhaustive ? kExitOk : kExitBudget;
  }
  if (problem == "eq411") {
    const WeightedSumReport report = weighted_sum_value_set(n);
    if (format == "plain") {
      for (std::int64_t v : report.values) std::cout << v << "\n";
    } else {
      json out;
      out["command"] = "search";
      out["problem"] = "eq411";
      out["n"] = n;
      out["values"] = report.values;
      out["t_min"] = report.t_min;
      out["t_max"] = report.t_max;
      out["equals_interval"] = report.equals_interval;
      std::cout << out.dump() << "\n";
    }
    return kExitOk;
  }
  fail(errc::parse_error, "unknown search problem '" + problem + "'");
}

// ---- verify -------------------------------------------------------------

std::vector<std::int64_t> parse_int_list(const std::string& csv) {
  std::vector<std::int64_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad list entry '" + item + "'");
    }
  }
  return out;
}

int run_verify(const std::string& conjecture, std::int64_t m, int n, const std::string& elements,
               std::uint64_t budget, bool full_enumeration, const std::string& format) {
  json out;
  out["command"] = "verify";
  out["conjecture"] = conjecture;
  std::string plain;

  if (conjecture == "41") {
    const Conj41Result r = verify_conj41_cyclic(m, n, !full_enumeration, budget);
    out["m"] = m;
    out["n"] = n;
    out["verdict"] = r.ok ? "ok" : "counterexample";
    out["subsets"] = r.subsets_enumerated;
    out["searched"] = r.orderings_searched;
    if (!r.ok) out["counterexample"] = r.counterexample;
    plain = r.ok ? "ok" : "counterexample";
  } else if (conjecture == "13i") {
    const CompleteMappingReport r = multiplicative_complete_mapping(m);
    out["p"] = m;
    out["verdict"] = r.empty_confirmed ? "empty" : "witness";
    out["nodes"] = r.nodes;
    out["certificate_residue"] = r.certificate_residue;
    if (r.unexpected_witness) out["witness"] = witness_json(*r.unexpected_witness);
    plain = out["verdict"].get<std::string>() + " certificate_residue=" +
            std::to_string(r.certificate_residue);
  } else if (conjecture == "14i") {
    const auto elems = parse_int_list(elements);
    const Permutation p = distinct_multiple_order(elems);
    out["elements"] = elems;
    out["verdict"] = "witness";
    out["witness"] = witness_json(p);
    json products = json::array();
    for (int k = 1; k <= p.degree(); ++k)
      products.push_back((Int(k) * elems[p(k) - 1]).str());
    out["products"] = products;
    plain = "witness " + to_one_line_string(p);
  } else if (conjecture == "14ii") {
    const auto elems = parse_int_list(elements);
    if (elems.size() != 3) fail(errc::parse_error, "need exactly three elements a,b,c");
    const TriplePowerWitness w = triple_power_distinct(m, elems[0], elems[1], elems[2]);
    out["m"] = m;
    out["elements"] = elems;
    out["verdict"] = "witness";
    out["sigma"] = witness_json(w.sigma);
    out["tau"] = witness_json(w.tau);
    plain = "witness sigma=" + to_one_line_string(w.sigma) + " tau=" + to_one_line_string(w.tau);
  } else if (conjecture == "410") {
    const auto elems = parse_int_list(elements);
    SumsetReport r;
    if (m > 0) {
      r = sumset_bound_check_mod(m, elems, n, budget);
      out["field"] = "mod";
      out["modulus"] = m;
    } else {
      std::vector<Rational> ra(elems.begin(), elems.end());
      r = sumset_bound_check_rational(ra, n, budget);
      out["field"] = "rational";
    }
    out["elements"] = elems;
    out["n"] = n;
    out["set_size"] = r.set_size.str();
    out["bound"] = r.bound.str();
    out["satisfied"] = r.satisfied;
    out["verdict"] = "reported";
    plain = "|S(A)|=" + r.set_size.str() + " bound=" + r.bound.str() +
            (r.satisfied ? " satisfied" : " NOT satisfied");
  } else {
    fail(errc::parse_error, "unknown conjecture '" + conjecture + "'");
  }

  if (format == "plain")
    std::cout << plain << "\n";
  else
    std::cout << out.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation with constrained permutations"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build a sum-constrained involution");
  int c_n = 1;
  std::string c_sequence = "pow2";
  std::string c_format = "oneline";
  construct->add_option("--n", c_n, "degree")->required();
  construct->add_option("--sequence", c_sequence,
                        "pow2|fib|lucas|tri|custom:<comma-separated terms>");
  construct->add_option("--format", c_format, "oneline|cycles|json")
      ->check(CLI::IsMember({"oneline", "cycles", "json"}));

  // permanent
  auto* perm = app.add_subcommand("permanent", "exact or modular permanent");
  std::string p_kind = "power";
  int p_n = 1;
  std::int64_t p_mod = 0;
  int p_threads = 0;
  int p_max_n = 0;
  std::string p_format = "json";
  perm->add_option("--kind", p_kind, "matrix kind (power, prime-sum, pow2-sum, ...)")->required();
  perm->add_option("--n", p_n, "dimension")->required();
  perm->add_option("--mod", p_mod, "compute the residue modulo this value");
  perm->add_option("--threads", p_threads, "worker count for the exact permanent");
  perm->add_option("--max-n", p_max_n, "override the dimension cap");
  perm->add_option("--format", p_format, "json|plain")
      ->check(CLI::IsMember({"json", "plain"}));

  // count
  auto* count = app.add_subcommand("count", "count constrained permutations");
  std::string k_kind = "fib";
  int k_n_max = 1;
  bool k_bfile = false;
  int k_max_n = 0;
  std::string k_format = "plain";
  count->add_option("--kind", k_kind, "fib|pow2|prime-sum|chen-even")->required();
  count->add_option("--n-max", k_n_max, "largest degree")->required();
  count->add_flag("--bfile", k_bfile, "emit OEIS b-file lines");
  count->add_option("--max-n", k_max_n, "override the counting cap");
  count->add_option("--format", k_format, "plain|json|bfile")
      ->check(CLI::IsMember({"plain", "json", "bfile"}));

  // search
  auto* search = app.add_subcommand("search", "pruned backtracking searches");
  std::string s_problem;
  int s_n = 1;
  std::uint64_t s_budget_nodes = 100'000'000ULL;
  double s_timeout = 60.0;
  std::string s_format = "json";
  search
      ->add_option("--problem", s_problem,
                   "conj43a|conj43b|conj44a|conj44b|conj45|conj46-even|conj46-odd|s18a|eq44|"
                   "eq45|eq46|eq47|eq48|eq49|conj49|conj49ii|prime-circle|eq411")
      ->required();
  search->add_option("--n", s_n, "degree")->required();
  search->add_option("--budget-nodes", s_budget_nodes, "node budget");
  search->add_option("--timeout", s_timeout, "wall-clock budget in seconds");
  search->add_option("--format", s_format, "json|plain")
      ->check(CLI::IsMember({"json", "plain"}));
  std::uint64_t s_seed = 0;
  search->add_option("--seed", s_seed, "reserved; all current searches are deterministic");

  // verify
  auto* verify = app.add_subcommand("verify", "finite verification harnesses");
  std::string v_conjecture;
  std::int64_t v_m = 0;
  int v_n = 1;
  std::string v_elements;
  std::uint64_t v_budget = 50'000'000ULL;
  bool v_full = false;
  std::string v_format = "json";
  verify->add_option("--conjecture", v_conjecture, "41|13i|14i|14ii|410")->required();
  verify->add_option("--m", v_m, "modulus (41, 13i, 14ii) or prime field (410)");
  verify->add_option("--n", v_n, "subset size (41) or weight count (410)");
  verify->add_option("--elements", v_elements, "comma-separated elements (14i, 14ii, 410)");
  verify->add_option("--budget", v_budget, "enumeration budget");
  verify->add_flag("--full-enumeration", v_full, "disable the symmetry reduction (41)");
  verify->add_option("--format", v_format, "json|plain")
      ->check(CLI::IsMember({"json", "plain"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) return run_construct(c_n, c_sequence, c_format);
    if (perm->parsed()) {
      if (p_threads <= 0) {
        const char* env = std::getenv("PERMKIT_THREADS");
        p_threads = env ? std::atoi(env) : 1;
        if (p_threads <= 0) p_threads = 1;
      }
      return run_permanent(p_kind, p_n, p_mod, p_threads, p_max_n, p_format);
    }
    if (count->parsed()) return run_count(k_kind, k_n_max, k_bfile, k_max_n, k_format);
    if (search->parsed()) {
      SearchLimits limits;
      limits.max_nodes = s_budget_nodes;
      limits.max_seconds = s_timeout;
      return run_search(s_problem, s_n, limits, s_format);
    }
    if (verify->parsed())
      return run_verify(v_conjecture, v_m, v_n, v_elements, v_budget, v_full, v_format);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
