#include "defres/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <thread>

#include "defres/abacus.hpp"
#include "defres/border_strip.hpp"
#include "defres/deflation.hpp"
#include "defres/wreath.hpp"

namespace defres::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string shape, gamma, theta, alpha, format = "text", evaluator = "auto";
  int m = 0, n = 0;
  bool m_set = false, n_set = false, naive = false;
  std::uint64_t budget = OracleOptions{}.budget;
  int max_size = 10, min_m = 1, max_m = 10, max_n = 10;
};

std::string signed_str(Int v) { return v > 0 ? "+" + std::to_string(v) : std::to_string(v); }

json parts_json(const Composition& c) { return json(c.parts()); }

// A permutation of {0..n-1} made of consecutive cycles of the given lengths.
Permutation permutation_of_type(const Composition& gamma) {
  std::vector<int> image(gamma.size());
  int start = 0;
  for (int len : gamma.parts()) {
    for (int i = 0; i < len; ++i) image[start + i] = start + (i + 1) % len;
    start += len;
  }
  return Permutation(std::move(image));
}

Partition trivial(int m) { return Partition{m}; }
Partition sign_shape(int m) { return Partition(std::vector<int>(m, 1)); }

std::string resolve_evaluator(const std::string& requested, const DeflationQuery& q) {
  if (requested != "auto") return requested;
  if (q.theta == trivial(q.m)) return "theorem";
  if (q.theta == sign_shape(q.m)) return "sign";
  return "recursive";
}

Int evaluate(const std::string& evaluator, const DeflationQuery& q, const OracleOptions& oracle) {
  if (evaluator == "theorem") return defres_theorem(q);
  if (evaluator == "sign") return defres_sign(q);
  if (evaluator == "recursive") return defres_recursive(q);
  return oracle_defres(q.shape, irreducible_character(q.theta), q.n, permutation_of_type(q.gamma), oracle);
}

void emit(const json& j, const Options& o, std::ostream& out, const std::string& text) {
  if (o.format == "json")
    out << j.dump(2) << '\n';
  else
    out << text;
}

void require(bool flag, const char* name) {
  if (!flag) throw std::invalid_argument(std::string("missing required option --") + name);
}

int cmd_defres(const Options& o, std::ostream& out) {
  require(!o.shape.empty(), "shape");
  require(o.m_set, "m");
  require(!o.gamma.empty(), "gamma");
  const SkewPartition shape = parse_skew(o.shape);
  const Composition gamma = parse_composition(o.gamma);
  if (o.m < 1) throw std::invalid_argument("m must be positive");
  const Partition theta = o.theta.empty() ? trivial(o.m) : parse_partition(o.theta);
  if (o.n_set && o.n != gamma.size())
    throw std::invalid_argument("n = " + std::to_string(o.n) + " does not equal |gamma| = " +
                                std::to_string(gamma.size()));
  const DeflationQuery q = make_query(shape, o.m, theta, gamma);
  const std::string evaluator = resolve_evaluator(o.evaluator, q);
  const Int value = evaluate(evaluator, q, OracleOptions{o.naive, o.budget});

  json j;
  j["command"] = "defres";
  j["shape"] = to_string(shape);
  j["m"] = q.m;
  j["n"] = q.n;
  j["theta"] = to_string(theta);
  j["gamma"] = parts_json(gamma);
  j["evaluator"] = evaluator;
  j["value"] = value;
  emit(j, o, out, std::to_string(value) + "\nevaluator: " + evaluator + "\n");
  return kOk;
}

int cmd_mn(const Options& o, std::ostream& out) {
  require(!o.shape.empty(), "shape");
  require(!o.gamma.empty(), "gamma");
  const SkewPartition shape = parse_skew(o.shape);
  const Composition gamma = parse_composition(o.gamma);
  const Int value = mn_value(shape, gamma);
  json j;
  j["command"] = "mn";
  j["shape"] = to_string(shape);
  j["gamma"] = parts_json(gamma);
  j["value"] = value;
  emit(j, o, out, std::to_string(value) + "\n");
  return kOk;
}

int cmd_tableaux(const Options& o, std::ostream& out) {
  require(!o.shape.empty(), "shape");
  require(!o.gamma.empty(), "gamma");
  const SkewPartition shape = parse_skew(o.shape);
  const Composition gamma = parse_composition(o.gamma);
  const int m = o.m_set ? o.m : 1;
  const auto list = m == 1 ? enumerate_bst(shape, gamma) : enumerate_m_bst(shape, m, gamma);

  json j;
  j["command"] = "tableaux";
  j["shape"] = to_string(shape);
  j["m"] = m;
  j["gamma"] = parts_json(gamma);
  j["tableaux"] = json::array();
  std::string text;
  Int total = 0;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const BorderStripTableau& t = list[k];
    const int s = sign(t);
    total += s;
    json entry;
    std::vector<std::string> chain;
    for (const Partition& p : t.chain) chain.push_back(to_string(p));
    std::vector<int> heights, rows;
    for (int label = 1; label <= t.strip_count(); ++label) {
      const StripMeta meta = strip_meta(t.strip(label));
      heights.push_back(meta.height);
      rows.push_back(meta.row_number);
    }
    const auto grid = render(t);
    entry["chain"] = chain;
    entry["grid"] = grid;
    entry["heights"] = heights;
    entry["row_numbers"] = rows;
    entry["sign"] = s;
    j["tableaux"].push_back(entry);

    text += "tableau " + std::to_string(k + 1) + "\n";
    for (const auto& line : grid) text += "  " + line + "\n";
    text += "  sign: " + signed_str(s) + "\n";
  }
  j["count"] = list.size();
  j["total"] = total;
  text += "count: " + std::to_string(list.size()) + "\ntotal: " + std::to_string(total) + "\n";
  emit(j, o, out, text);
  return kOk;
}

int cmd_quotient(const Options& o, std::ostream& out) {
  require(!o.shape.empty(), "shape");
  require(o.n_set, "n");
  const SkewPartition shape = parse_skew(o.shape);
  if (o.n < 1) throw std::invalid_argument("n must be positive");
  if (shape.size() % o.n != 0)
    throw std::invalid_argument("n = " + std::to_string(o.n) + " does not divide |" + to_string(shape) + "| = " +
                                std::to_string(shape.size()));
  if (!is_n_decomposable(shape, o.n))
    throw std::invalid_argument(to_string(shape) + " is not " + std::to_string(o.n) + "-decomposable");
  const QuotientData q = n_quotient(shape, o.n);
  const int beads = canonical_bead_count(shape.outer(), o.n);
  const AbacusDisplay outer = AbacusDisplay::of(shape.outer(), o.n, beads);
  const AbacusDisplay inner = AbacusDisplay::of(shape.inner(), o.n, beads);

  std::vector<std::string> comps;
  for (const SkewPartition& c : q.components) comps.push_back(paren(c));
  json j;
  j["command"] = "quotient";
  j["shape"] = to_string(shape);
  j["n"] = o.n;
  j["components"] = comps;
  j["relabelling"] = cycle_notation(q.relabelling);
  j["sign"] = q.sign;
  j["beads"] = beads;
  j["outer_abacus"] = outer.render();
  j["inner_abacus"] = inner.render();

  std::string text = "components: ";
  for (std::size_t i = 0; i < comps.size(); ++i) text += (i ? ", " : "") + comps[i];
  text += "\nrelabelling: " + cycle_notation(q.relabelling) + "\nsign: " + signed_str(q.sign) + "\n";
  text += "outer abacus:\n";
  for (const auto& line : outer.render()) text += "  " + line + "\n";
  text += "inner abacus:\n";
  for (const auto& line : inner.render()) text += "  " + line + "\n";
  emit(j, o, out, text);
  return kOk;
}

int cmd_farahat(const Options& o, std::ostream& out) {
  require(!o.shape.empty(), "shape");
  require(o.n_set, "n");
  require(!o.alpha.empty(), "alpha");
  const SkewPartition shape = parse_skew(o.shape);
  const Partition alpha = parse_partition(o.alpha);
  const FarahatSides sides = farahat_check(shape, o.n, alpha);
  json j;
  j["command"] = "farahat";
  j["shape"] = to_string(shape);
  j["n"] = o.n;
  j["alpha"] = to_string(alpha);
  j["lhs"] = sides.lhs;
  j["rhs"] = sides.rhs;
  emit(j, o, out, "lhs: " + std::to_string(sides.lhs) + "\nrhs: " + std::to_string(sides.rhs) + "\n");
  return kOk;
}

struct Cell {
  Partition theta;
  int m = 0, n = 0;
  int shapes = 0;
  int checks = 0;
  int failures = 0;
  std::optional<json> counterexample;
};

void run_cell(Cell& cell, const OracleOptions& oracle) {
  const bool is_trivial = cell.theta == trivial(cell.m);
  const bool is_sign = cell.theta == sign_shape(cell.m);
  const ClassFunction theta = irreducible_character(cell.theta);
  const auto shapes = skew_partitions_of(cell.m * cell.n);
  const auto types = partitions_of(cell.n);
  std::vector<WreathProfile> profiles;
  for (const Partition& g : types) profiles.push_back(wreath_profile(theta, cell.n, permutation_of_type(as_composition(g)), oracle));
  cell.shapes = static_cast<int>(shapes.size());
  for (const SkewPartition& shape : shapes) {
    for (std::size_t t = 0; t < types.size(); ++t) {
      const Composition gamma = as_composition(types[t]);
      const DeflationQuery q = make_query(shape, cell.m, cell.theta, gamma);
      const Int expected = oracle_defres(shape, profiles[t]);
      json got;
      bool ok = true;
      auto check = [&](const char* name, Int v) {
        got[name] = v;
        ok = ok && v == expected;
      };
      check("recursive", defres_recursive(q));
      if (is_trivial) check("theorem", defres_theorem(q));
      if (is_sign) check("sign", defres_sign(q));
      ++cell.checks;
      if (ok) continue;
      ++cell.failures;
      if (!cell.counterexample) {
        got["oracle"] = expected;
        got["shape"] = to_string(shape);
        got["gamma"] = parts_json(gamma);
        got["m"] = cell.m;
        got["theta"] = to_string(cell.theta);
        cell.counterexample = got;
      }
    }
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<Cell> cells;
  if (!o.theta.empty()) {
    const Partition kappa = parse_partition(o.theta);
    if (kappa.empty()) throw std::invalid_argument("theta must be a nonempty partition");
    for (int n = 1; n <= o.max_n && kappa.size() * n <= o.max_size; ++n) cells.push_back(Cell{kappa, kappa.size(), n, 0, 0, 0, {}});
  } else {
    for (int m = o.min_m; m <= o.max_m; ++m)
      for (int n = 1; n <= o.max_n && m * n <= o.max_size; ++n) {
        cells.push_back(Cell{trivial(m), m, n, 0, 0, 0, {}});
        if (m > 1) cells.push_back(Cell{sign_shape(m), m, n, 0, 0, 0, {}});
      }
  }

  const OracleOptions oracle{o.naive, o.budget};
  std::vector<std::exception_ptr> errors(cells.size());
  {
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), cells.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
          try {
            run_cell(cells[i], oracle);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  json j;
  j["command"] = "verify";
  j["cells"] = json::array();
  std::string text;
  int checks = 0, failures = 0;
  json first;
  for (const Cell& c : cells) {
    checks += c.checks;
    failures += c.failures;
    if (c.counterexample && first.is_null()) first = *c.counterexample;
    j["cells"].push_back({{"theta", to_string(c.theta)},
                          {"m", c.m},
                          {"n", c.n},
                          {"shapes", c.shapes},
                          {"checks", c.checks},
                          {"failures", c.failures}});
    text += "theta=" + to_string(c.theta) + " m=" + std::to_string(c.m) + " n=" + std::to_string(c.n) +
            " shapes=" + std::to_string(c.shapes) + " pass=" + std::to_string(c.checks - c.failures) +
            " fail=" + std::to_string(c.failures) + "\n";
  }
  j["pass"] = checks - failures;
  j["fail"] = failures;
  j["counterexample"] = first;
  text += "pass: " + std::to_string(checks - failures) + "\nfail: " + std::to_string(failures) + "\n";
  if (!first.is_null()) text += "counterexample: " + first.dump() + "\n";
  emit(j, o, out, text);
  return failures == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Character deflations of symmetric groups", "defres"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_shape = [&](CLI::App* sub) { sub->add_option("--shape", o.shape, "Skew shape, e.g. 6,5,3,2/3,1"); };
  auto add_gamma = [&](CLI::App* sub) { sub->add_option("--gamma", o.gamma, "Cycle type, e.g. 1,2,3"); };
  auto add_m = [&](CLI::App* sub) { sub->add_option("--m", o.m, "Block size m")->each([&](const std::string&) { o.m_set = true; }); };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Number of blocks n")->each([&](const std::string&) { o.n_set = true; }); };
  auto add_oracle = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Maximum oracle evaluations");
    sub->add_flag("--naive", o.naive, "Average over the whole base group");
  };

  CLI::App* defres_cmd = app.add_subcommand("defres", "Evaluate a deflation at a cycle type");
  add_shape(defres_cmd);
  add_m(defres_cmd);
  add_n(defres_cmd);
  add_gamma(defres_cmd);
  defres_cmd->add_option("--theta", o.theta, "Partition kappa of m; default (m)");
  defres_cmd->add_option("--evaluator", o.evaluator, "Evaluation route")
      ->check(CLI::IsMember({"auto", "theorem", "recursive", "sign", "oracle"}));
  add_oracle(defres_cmd);
  common(defres_cmd);

  CLI::App* mn_cmd = app.add_subcommand("mn", "Skew character value");
  add_shape(mn_cmd);
  add_gamma(mn_cmd);
  common(mn_cmd);

  CLI::App* tab_cmd = app.add_subcommand("tableaux", "List (m-)border-strip tableaux");
  add_shape(tab_cmd);
  add_m(tab_cmd);
  add_gamma(tab_cmd);
  common(tab_cmd);

  CLI::App* quo_cmd = app.add_subcommand("quotient", "Abacus n-quotient and n-sign");
  add_shape(quo_cmd);
  add_n(quo_cmd);
  common(quo_cmd);

  CLI::App* far_cmd = app.add_subcommand("farahat", "Both sides of the n-quotient character formula");
  add_shape(far_cmd);
  add_n(far_cmd);
  far_cmd->add_option("--alpha", o.alpha, "Partition alpha of m");
  common(far_cmd);

  CLI::App* ver_cmd = app.add_subcommand("verify", "Cross-check all evaluators against the oracle");
  ver_cmd->add_option("--theta", o.theta, "Only this kappa; default trivial and sign for every m");
  ver_cmd->add_option("--max-size", o.max_size, "Largest m*n");
  ver_cmd->add_option("--min-m", o.min_m, "Smallest m");
  ver_cmd->add_option("--max-m", o.max_m, "Largest m");
  ver_cmd->add_option("--max-n", o.max_n, "Largest n");
  add_oracle(ver_cmd);
  common(ver_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (defres_cmd->parsed()) return cmd_defres(o, out);
    if (mn_cmd->parsed()) return cmd_mn(o, out);
    if (tab_cmd->parsed()) return cmd_tableaux(o, out);
    if (quo_cmd->parsed()) return cmd_quotient(o, out);
    if (far_cmd->parsed()) return cmd_farahat(o, out);
    return cmd_verify(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::overflow_error& e) {
    err << "arithmetic overflow: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  }
}

}  // namespace defres::cli
