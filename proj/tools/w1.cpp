// w1: command-line front end for the solvers, table tools, the NRAM
// interpreter and the property suite.
//
// Exit codes: 0 yes / accepted / all passed, 1 no / rejected / failures,
// 2 usage, input or resource errors.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef W1_CLI11_PACKAGE
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include "bench.hpp"
#include "w1/error.hpp"
#include "w1/generator.hpp"
#include "w1/hitting_set.hpp"
#include "w1/instance.hpp"
#include "w1/normalize.hpp"
#include "w1/nram.hpp"
#include "w1/selftest.hpp"
#include "w1/subset_sum.hpp"
#include "w1/subset_sum_program.hpp"
#include "w1/tables.hpp"
#include "w1/verifier.hpp"
#include "w1/weighted_csp.hpp"

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw w1::UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::optional<std::uint64_t> env_u64(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  try {
    std::size_t used = 0;
    auto x = std::stoull(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument(name);
    return x;
  } catch (const std::exception&) {
    throw w1::UsageError(std::string(name) + " must be a nonnegative integer");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

w1::CspInstance load_instance(const std::string& path) {
  auto inst = w1::parse_instance(read_input(path));
  for (const auto& w : inst.warnings()) std::cerr << "w1: warning: " << w << '\n';
  return inst;
}

void print_stats(const w1::LookupStats& s) {
  std::cout << "d=" << s.d_lookups << " l=" << s.l_lookups << " nodes=" << s.nodes_touched << '\n';
}

struct Common {
  unsigned jobs = 1;
  std::uint64_t max_candidates = w1::kDefaultMaxCandidates;
  std::uint64_t nram_budget = w1::nram::RunOptions{}.budget;
};

Common common_from_env() {
  Common c;
  if (auto v = env_u64("W1_JOBS")) c.jobs = static_cast<unsigned>(std::max<std::uint64_t>(*v, 1));
  if (auto v = env_u64("W1_MAX_CANDIDATES")) c.max_candidates = *v;
  if (auto v = env_u64("W1_NRAM_BUDGET")) c.nram_budget = *v;
  return c;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string file;
  std::string mode = "enumerate";
  std::string certificate;
  bool deterministic = false;
  bool paranoid = false;
  bool stats = false;
  bool no_patch = false;
  unsigned jobs = 0;
};

int run_solve(const SolveArgs& a, const Common& env) {
  const auto inst = load_instance(a.file);
  w1::SolveOptions opts;
  opts.tables.patch_empty = !a.no_patch;
  opts.jobs = a.jobs ? a.jobs : env.jobs;
  opts.tables.jobs = opts.jobs;
  opts.deterministic = a.deterministic;
  opts.paranoid = a.paranoid;
  opts.max_candidates = env.max_candidates;

  if (a.mode == "verify") {
    const auto cert = w1::parse_assignment(a.certificate, inst);
    w1::validate_assignment(cert, inst);
    const auto tables = w1::build_tables(w1::normalize(inst), opts.tables);
    const auto check = w1::check_candidate(cert, tables);
    std::cout << (check.accepted ? "accepted" : "rejected") << '\n';
    if (a.stats) print_stats(check.stats);
    return check.accepted ? kYes : kNo;
  }

  const auto result = w1::solve(inst, opts);
  if (result.witness) {
    std::cout << w1::format_assignment(*result.witness, inst) << '\n';
  } else {
    std::cout << "no solution\n";
  }
  if (a.stats) {
    std::cout << "candidates=" << result.candidates_checked << ' ';
    print_stats(result.stats);
  }
  return result.witness ? kYes : kNo;
}

int run_oracle(const std::string& file, const Common& env) {
  const auto inst = load_instance(file);
  const auto w = w1::oracle_solve(inst, env.max_candidates);
  std::cout << (w ? w1::format_assignment(*w, inst) : std::string("no solution")) << '\n';
  return w ? kYes : kNo;
}

struct TablesArgs {
  std::string file;
  bool dump = false;
  bool dump_satsets = false;
  bool no_patch = false;
  bool prune = false;
};

int run_tables(const TablesArgs& a, const Common& env) {
  const auto inst = load_instance(a.file);
  const auto normalized = w1::normalize(inst);
  if (a.dump_satsets) {
    std::cout << w1::dump_satsets(normalized);
    return kYes;
  }
  w1::TableOptions opts;
  opts.patch_empty = !a.no_patch;
  opts.prune_oversized = a.prune;
  opts.jobs = env.jobs;
  const auto tables = w1::build_tables(normalized, opts);
  if (a.dump) {
    std::cout << w1::dump_tables(tables, inst);
    return kYes;
  }
  const auto s = tables.stats();
  std::cout << "blocks=" << normalized.blocks().size() << " frontier=" << s.frontier_size
            << " d_entries=" << s.d_entries << " l_entries=" << s.l_entries << " trie_nodes=" << s.trie_nodes
            << " max_frontier_support=" << s.max_frontier_support << '\n';
  return kYes;
}

struct SubsetSumArgs {
  std::optional<std::size_t> n;
  unsigned k = 0;
  std::string values;
  std::string target;
  std::optional<unsigned> f;
  std::string engine = "digits";
  bool deterministic = false;
  unsigned jobs = 0;
};

int run_subset_sum(const SubsetSumArgs& a, const Common& env) {
  w1::SubsetSumInstance inst;
  for (const auto& v : split(a.values, ',')) inst.values.push_back(w1::parse_decimal(v));
  inst.target = w1::parse_decimal(a.target);
  inst.k = a.k;
  inst.f_of_k = a.f;
  if (a.n && *a.n != inst.values.size()) {
    throw w1::UsageError("--n is " + std::to_string(*a.n) + " but " + std::to_string(inst.values.size()) +
                         " values were given");
  }
  if (inst.k > inst.values.size()) throw w1::UsageError("k exceeds the number of values");

  std::optional<std::vector<std::size_t>> found;
  if (a.engine == "nram") {
    w1::nram::RunOptions ro;
    ro.budget = env.nram_budget;
    const auto r = w1::nram::run_subset_sum_program(inst, w1::nram::GuessStrategy::exhaustive(), ro);
    if (r.execution.outcome == w1::nram::Outcome::OutOfBudget) {
      throw w1::ResourceLimitError("NRAM step budget exhausted (raise W1_NRAM_BUDGET)");
    }
    found = r.witness;
  } else {
    w1::SubsetSumOptions opts;
    opts.jobs = a.jobs ? a.jobs : env.jobs;
    opts.deterministic = a.deterministic;
    opts.max_candidates = env.max_candidates;
    found = w1::solve(inst, opts);
  }
  if (!found) {
    std::cout << "no subset\n";
    return kNo;
  }
  std::string line;
  for (std::size_t i = 0; i < found->size(); ++i) line += (i ? "," : "") + std::to_string((*found)[i] + 1);
  std::cout << (line.empty() ? "{}" : line) << '\n';
  return kYes;
}

int run_wcsp(const std::string& file, bool stats, const Common& env) {
  const w1::WeightedCspInstance inst(load_instance(file));
  w1::SolveOptions opts;
  opts.jobs = env.jobs;
  opts.max_candidates = env.max_candidates;
  const auto r = w1::solve_wcsp(inst, opts);
  std::cout << (r.witness ? w1::format_assignment(*r.witness, inst.base()) : std::string("no solution")) << '\n';
  if (stats) {
    std::cout << "candidates=" << r.candidates_checked << " weight_rejections=" << r.weight_rejections << ' ';
    print_stats(r.stats);
  }
  return r.witness ? kYes : kNo;
}

int run_hitting(const std::string& file, const Common& env) {
  const auto h = w1::parse_hypergraph_family(read_input(file));
  w1::SolveOptions opts;
  opts.jobs = env.jobs;
  opts.max_candidates = env.max_candidates;
  const auto s = w1::solve_hitting(h, opts);
  if (!s) {
    std::cout << "no hitting set\n";
    return kNo;
  }
  std::string line;
  for (std::size_t i = 0; i < s->size(); ++i) line += (i ? "," : "") + (*s)[i];
  std::cout << (line.empty() ? "{}" : line) << '\n';
  return kYes;
}

struct NramArgs {
  std::string program;
  std::string init;
  std::string guess = "tape:";
  std::string bounds;
  std::optional<std::uint64_t> budget;
  bool trace = false;
  bool half_up = false;
};

w1::nram::NramProgram load_program(const std::string& path) {
  if (path == "bundled:subset-sum") return w1::nram::subset_sum_program();
  return w1::nram::assemble(read_input(path));
}

w1::nram::RunOptions nram_options(const NramArgs& a, const Common& env) {
  w1::nram::RunOptions ro;
  ro.budget = a.budget.value_or(env.nram_budget);
  ro.rounding = a.half_up ? w1::nram::DivRounding::HalfUp : w1::nram::DivRounding::Floor;
  ro.record_trace = a.trace;
  return ro;
}

int run_nram(const NramArgs& a, const Common& env) {
  const auto program = load_program(a.program);
  const auto init = w1::nram::parse_registers(a.init);
  const auto guesses = w1::nram::GuessStrategy::parse(a.guess);
  const auto ex = w1::nram::run(program, init, guesses, nram_options(a, env));
  for (const auto& t : ex.trace) {
    std::cout << "step " << t.step << " pc=" << t.pc << ' ' << w1::nram::mnemonic(t.op);
    if (t.written) std::cout << " r" << *t.written << '=' << t.value;
    std::cout << '\n';
  }
  std::cout << "outcome " << w1::nram::to_string(ex.outcome) << '\n'
            << "steps " << ex.audit.total_steps << '\n'
            << "nondet " << ex.audit.nondet_count() << '\n'
            << "tail " << ex.audit.tail_span() << '\n'
            << "max_register " << ex.audit.max_register_index << '\n'
            << "max_value " << ex.audit.max_value_stored << '\n'
            << "paths " << ex.paths << '\n';
  if (ex.outcome == w1::nram::Outcome::OutOfBudget) return kError;
  return ex.outcome == w1::nram::Outcome::Accept ? kYes : kNo;
}

int run_nram_audit(const NramArgs& a, const Common& env) {
  const auto program = load_program(a.program);
  const auto init = w1::nram::parse_registers(a.init);
  const auto guesses = w1::nram::GuessStrategy::parse(a.guess == "tape:" ? "exhaustive" : a.guess);
  const auto bounds = w1::nram::parse_bounds(a.bounds);
  const auto report = w1::nram::audit(program, init, guesses, bounds, nram_options(a, env));
  std::cout << report.render();
  std::cout << "outcome " << w1::nram::to_string(report.outcome) << " paths " << report.paths << '\n';
  return report.passed() ? kYes : kNo;
}

struct GenArgs {
  w1::GeneratorConfig config;
  bool hypergraph = false;
  w1::HypergraphConfig hyper;
};

std::string render_family(const w1::HypergraphFamilyInstance& h) {
  auto list = [](const std::vector<std::string>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", \"" : "\"") + xs[i] + "\"";
    return s + "]";
  };
  std::ostringstream out;
  out << "{\n  \"ground\": " << list(h.ground) << ",\n  \"hypergraphs\": [";
  for (std::size_t i = 0; i < h.hypergraphs.size(); ++i) {
    const auto& g = h.hypergraphs[i];
    out << (i ? ",\n" : "\n") << "    {\"vertices\": " << list(g.vertices) << ", \"edges\": [";
    for (std::size_t e = 0; e < g.edges.size(); ++e) out << (e ? ", " : "") << list(g.edges[e]);
    out << "]}";
  }
  out << (h.hypergraphs.empty() ? "" : "\n  ") << "],\n  \"k\": " << h.k << "\n}\n";
  return out.str();
}

int run_gen(const GenArgs& a) {
  if (a.hypergraph) {
    std::mt19937_64 rng(a.config.seed);
    w1::HypergraphConfig h = a.hyper;
    h.k = a.config.k;
    std::cout << render_family(w1::random_hypergraph_family(h, rng));
    return kYes;
  }
  std::cout << w1::serialize_instance(w1::random_instance(a.config));
  return kYes;
}

int run_selftest(std::uint64_t seed, unsigned percent, const std::vector<std::string>& only, bool list) {
  if (list) {
    for (const auto& p : w1::properties()) std::cout << p.name << "  " << p.summary << '\n';
    return kYes;
  }
  w1::SelftestConfig cfg;
  cfg.seed = seed;
  cfg.percent = percent;
  bool all = true;
  w1::run_selftest(cfg, only, [&](const w1::PropertyResult& r) {
    all = all && r.pass;
    std::cout << w1::render(r) << std::endl;
  });
  return all ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"w1: parameterized CSP verification toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  Common env;
  try {
    env = common_from_env();
  } catch (const std::exception& e) {
    std::cerr << "w1: error: " << e.what() << '\n';
    return kError;
  }

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Find a size-k satisfying support via the verification tables");
  solve->add_option("file", solve_args.file, "Instance document (- for stdin)")->required();
  solve->add_option("--mode", solve_args.mode, "enumerate or verify")
      ->check(CLI::IsMember({"enumerate", "verify"}));
  solve->add_option("--certificate", solve_args.certificate, "Certificate for verify mode, e.g. x=1,z=1");
  solve->add_flag("--deterministic", solve_args.deterministic, "Lowest witness in enumeration order");
  solve->add_flag("--paranoid", solve_args.paranoid, "Re-check witnesses against the source constraints");
  solve->add_flag("--stats", solve_args.stats, "Print lookup statistics");
  solve->add_flag("--no-patch", solve_args.no_patch, "Build tables without the empty-support frontier patch");
  solve->add_option("--jobs", solve_args.jobs, "Worker threads (default W1_JOBS or 1)");

  SolveArgs verify_args;
  verify_args.mode = "verify";
  auto* verify = app.add_subcommand("verify", "Check one certificate against the verification tables");
  verify->add_option("file", verify_args.file, "Instance document (- for stdin)")->required();
  verify->add_option("certificate", verify_args.certificate, "e.g. x=1,z=1 or {}")->required();
  verify->add_flag("--stats", verify_args.stats, "Print lookup statistics");
  verify->add_flag("--no-patch", verify_args.no_patch, "Build tables without the empty-support frontier patch");

  std::string oracle_file;
  auto* oracle = app.add_subcommand("oracle", "Brute-force reference solver");
  oracle->add_option("file", oracle_file, "Instance document (- for stdin)")->required();

  TablesArgs tables_args;
  auto* tables = app.add_subcommand("tables", "Build and inspect the verification tables");
  tables->add_option("file", tables_args.file, "Instance document (- for stdin)")->required();
  tables->add_flag("--dump", tables_args.dump, "Print every d and l entry");
  tables->add_flag("--dump-satsets", tables_args.dump_satsets, "Print the normalized blocks as a document");
  tables->add_flag("--no-patch", tables_args.no_patch, "Omit the empty-support frontier patch");
  tables->add_flag("--prune", tables_args.prune, "Drop frontier elements of size k + 1");

  SubsetSumArgs ss_args;
  std::size_t ss_n = 0;
  auto* ss = app.add_subcommand("subset-sum", "k-element subset sum by digit-wise checking");
  auto* n_opt = ss->add_option("--n", ss_n, "Number of values (checked against --values)");
  ss->add_option("--k", ss_args.k, "Subset size")->required();
  ss->add_option("--values", ss_args.values, "Comma-separated decimal values")->required();
  ss->add_option("--target", ss_args.target, "Decimal target")->required();
  ss->add_option("--f", ss_args.f, "Digit budget f(k): every number must be at most n^f");
  ss->add_option("--engine", ss_args.engine, "digits or nram")->check(CLI::IsMember({"digits", "nram"}));
  ss->add_flag("--deterministic", ss_args.deterministic, "Lowest subset in enumeration order");
  ss->add_option("--jobs", ss_args.jobs, "Worker threads (default W1_JOBS or 1)");

  std::string wcsp_file;
  bool wcsp_stats = false;
  auto* wcsp = app.add_subcommand("wcsp", "Weighted Boolean CSP with a weight target");
  wcsp->add_option("file", wcsp_file, "Instance document with weights and target (- for stdin)")->required();
  wcsp->add_flag("--stats", wcsp_stats, "Print candidate and lookup statistics");

  std::string hitting_file;
  auto* hitting = app.add_subcommand("hitting-set", "Family-of-hypergraphs hitting set");
  hitting->add_option("file", hitting_file, "Hypergraph family document (- for stdin)")->required();

  NramArgs nram_args;
  auto* nram = app.add_subcommand("nram", "Nondeterministic RAM interpreter");
  nram->require_subcommand(1);
  auto add_nram_common = [&](CLI::App* cmd) {
    cmd->add_option("program", nram_args.program, "Assembly file, - for stdin, or bundled:subset-sum")->required();
    cmd->add_option("--init", nram_args.init, "Register preload, e.g. r1=5,r2=3");
    cmd->add_option("--budget", nram_args.budget, "Per-path step cap (default W1_NRAM_BUDGET or 1000000)");
    cmd->add_flag("--half-up", nram_args.half_up, "DIV2 rounds half up instead of down");
  };
  auto* nram_run = nram->add_subcommand("run", "Run a program");
  add_nram_common(nram_run);
  nram_run->add_option("--guess", nram_args.guess, "tape:3,1,4 | exhaustive | random[:SEED]");
  nram_run->add_flag("--trace", nram_args.trace, "Print every step (tape and random only)");
  auto* nram_audit = nram->add_subcommand("audit", "Audit resource use against bounds over every path");
  add_nram_common(nram_audit);
  nram_audit->add_option("--guess", nram_args.guess, "Guess strategy (default exhaustive)");
  nram_audit->add_option("--bounds", nram_args.bounds, "steps=..,nondet=..,reg=..,value=..,tail=..")->required();
  auto* nram_show = nram->add_subcommand("show", "Print the bundled subset-sum program and its manifest");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a random instance document");
  gen->add_option("--seed", gen_args.config.seed, "RNG seed");
  gen->add_option("--vars", gen_args.config.variables, "Variable count");
  gen->add_option("--domain", gen_args.config.domain, "Domain size including the free value");
  gen->add_option("--constraints", gen_args.config.constraints, "Constraint count");
  gen->add_option("--arity", gen_args.config.max_arity, "Arity cap");
  gen->add_option("--density", gen_args.config.density, "Probability a tuple is listed");
  gen->add_option("--k", gen_args.config.k, "Parameter k");
  gen->add_flag("--plant", gen_args.config.plant, "Guarantee a size-k solution");
  gen->add_flag("--weights", gen_args.config.weights, "Emit per-variable weights");
  gen->add_flag("--target", gen_args.config.target, "Emit a weight target (with --weights)");
  gen->add_option("--max-weight", gen_args.config.max_weight, "Largest weight");
  gen->add_flag("--hypergraph", gen_args.hypergraph, "Emit a hypergraph family instead");
  gen->add_option("--ground", gen_args.hyper.ground, "Hypergraph ground set size");
  gen->add_option("--hypergraphs", gen_args.hyper.hypergraphs, "Number of hypergraphs");

  std::uint64_t st_seed = w1::SelftestConfig{}.seed;
  unsigned st_percent = 100;
  std::vector<std::string> st_only;
  bool st_list = false;
  auto* selftest = app.add_subcommand("selftest", "Run the property suite");
  selftest->add_option("--seed", st_seed, "Suite seed");
  selftest->add_option("--percent", st_percent, "Scale sample counts")->check(CLI::Range(1u, 10000u));
  selftest->add_option("--only", st_only, "Run only the named properties");
  selftest->add_flag("--list", st_list, "List the properties");

  w1tools::BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Table build and per-candidate check cost versus instance size");
  bench->add_option("--sizes", bench_args.sizes, "Variable counts")->delimiter(',');
  bench->add_option("--repeats", bench_args.repeats, "Timing repetitions per size");
  bench->add_option("--sample", bench_args.sample, "Candidates timed per size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }
  if (n_opt->count() > 0) ss_args.n = ss_n;

  try {
    if (*solve) {
      if (solve_args.mode == "verify" && solve_args.certificate.empty() && solve->count("--certificate") == 0) {
        throw w1::UsageError("--mode verify needs --certificate");
      }
      return run_solve(solve_args, env);
    }
    if (*verify) return run_solve(verify_args, env);
    if (*oracle) return run_oracle(oracle_file, env);
    if (*tables) return run_tables(tables_args, env);
    if (*ss) return run_subset_sum(ss_args, env);
    if (*wcsp) return run_wcsp(wcsp_file, wcsp_stats, env);
    if (*hitting) return run_hitting(hitting_file, env);
    if (*nram_run) return run_nram(nram_args, env);
    if (*nram_audit) return run_nram_audit(nram_args, env);
    if (*nram_show) {
      std::cout << w1::nram::subset_sum_source() << "\n; manifest\n";
      std::istringstream m{std::string(w1::nram::subset_sum_manifest_source())};
      for (std::string line; std::getline(m, line);) std::cout << "; " << line << '\n';
      return kYes;
    }
    if (*gen) return run_gen(gen_args);
    if (*selftest) return run_selftest(st_seed, st_percent, st_only, st_list);
    if (*bench) return w1tools::run_bench(bench_args, std::cout);
  } catch (const w1::Error& e) {
    std::cerr << "w1: error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "w1: error: " << e.what() << '\n';
    return kError;
  }
  std::cerr << app.help();
  return kError;
}
