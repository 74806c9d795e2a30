#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hazdt/construct.hpp"
#include "hazdt/function_spec.hpp"
#include "hazdt/implicants.hpp"
#include "hazdt/measures.hpp"
#include "hazdt/optimal.hpp"
#include "hazdt/report.hpp"
#include "hazdt/tree.hpp"
#include "hazdt/verify.hpp"

namespace {

using namespace hazdt;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

std::string trimmed(std::string text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t'))
    text.pop_back();
  std::size_t start = 0;
  while (start < text.size() && (text[start] == ' ' || text[start] == '\t' ||
                                 text[start] == '\n' || text[start] == '\r'))
    ++start;
  return text.substr(start);
}

int run_analyze(const std::string& spec, bool implicants) {
  ParsedFunction parsed = parse_function_spec(spec);
  if (implicants) {
    std::cout << "kind\tword\tliterals\n";
    for (const TernaryWord& w : prime_implicants(parsed.fn).words)
      std::cout << "implicant\t" << w.str() << '\t'
                << literal_notation(w, ImplicantKind::implicant) << '\n';
    for (const TernaryWord& w : prime_implicates(parsed.fn).words)
      std::cout << "implicate\t" << w.str() << '\t'
                << literal_notation(w, ImplicantKind::implicate) << '\n';
    return 0;
  }
  MeasureReport report = analyze_function(parsed.fn, spec);
  std::cout << measure_report_header() << '\n' << measure_report_row(report) << '\n';
  return 0;
}

int run_optimal(const std::string& spec, const std::string& measure, int k,
                const std::string& emit_tree) {
  ParsedFunction parsed = parse_function_spec(spec);
  OptimalResult result = [&] {
    if (measure == "depth") return optimal_depth(parsed.fn);
    if (measure == "size") return optimal_size(parsed.fn);
    if (measure == "depth_u") return optimal_depth_u(parsed.fn);
    if (measure == "size_u") return optimal_size_u(parsed.fn);
    if (measure == "depth_k") return optimal_depth_k(parsed.fn, k);
    if (measure == "size_k") return optimal_size_k(parsed.fn, k);
    throw CLI::ValidationError("--measure", "unknown measure '" + measure + "'");
  }();
  std::cout << "function\tmeasure\tvalue\twitness_size\twitness_depth\n";
  std::cout << spec << '\t' << measure << '\t' << result.value << '\t'
            << result.witness.size() << '\t' << result.witness.depth() << '\n';
  if (!emit_tree.empty()) write_file(emit_tree, result.witness.to_sexpr() + "\n");
  return 0;
}

int run_construct(const std::string& from, const std::string& tree_path,
                  const std::string& spec, int n, int k, bool has_k,
                  const std::string& out, const std::string& boolean_out) {
  if (from == "mux") {
    MuxTrees trees = mux_trees(n);
    write_file(out, trees.ternary_tree.to_sexpr() + "\n");
    if (!boolean_out.empty()) write_file(boolean_out, trees.boolean_tree.to_sexpr() + "\n");
    return 0;
  }
  if (from == "smalldepth") {
    write_file(out, smalldepth_tree(n).to_sexpr() + "\n");
    return 0;
  }
  if (from == "boolean-tree") {
    if (tree_path.empty()) throw CLI::ValidationError("--tree", "boolean-tree needs --tree");
    if (spec.empty()) throw CLI::ValidationError("--function", "boolean-tree needs --function");
    ParsedFunction parsed = parse_function_spec(spec);
    DecisionTree input =
        DecisionTree::parse_sexpr(trimmed(read_file(tree_path)), DecisionTree::Arity::binary);
    DecisionTree converted = has_k ? k_hazard_free_from_boolean(input, parsed.fn, k)
                                   : hazard_free_from_boolean(input, parsed.fn);
    write_file(out, converted.to_sexpr() + "\n");
    return 0;
  }
  throw CLI::ValidationError("--from", "unknown construction '" + from + "'");
}

int run_measures(const std::string& spec, const std::string& at) {
  ParsedFunction parsed = parse_function_spec(spec);
  if (at.empty()) {
    MeasureReport r = analyze_function(parsed.fn, spec);
    // measure columns only; optima are the analyze command's business
    std::cout << "function\tn\ts_u\ts_u_0\ts_u_u\ts_u_1\tbs_u\tcc_u\tk1\tk2\tm\tM\ts\tbs\tcc"
                 "\tstabs\tslys\n";
    auto cell = [](const std::optional<int>& v) {
      return v ? std::to_string(*v) : std::string("skipped(limit)");
    };
    std::cout << spec << '\t' << r.n << '\t' << cell(r.s_u) << '\t' << cell(r.s_u_0) << '\t'
              << cell(r.s_u_u) << '\t' << cell(r.s_u_1) << '\t' << cell(r.bs_u) << '\t'
              << cell(r.cc_u) << '\t' << cell(r.k1) << '\t' << cell(r.k2) << '\t' << cell(r.m)
              << '\t' << cell(r.M) << '\t' << cell(r.s) << '\t' << cell(r.bs) << '\t'
              << cell(r.cc) << '\t' << cell(r.stabs_v) << '\t' << cell(r.slys_v) << '\n';
    return 0;
  }
  // per-input row; the lazy extension keeps large arities usable for the
  // pointwise measures, subset searches report their limit
  TernaryFunction ext = parsed.fn.n <= kDefaultTableLimit
                            ? hazard_free_extension(parsed.fn)
                            : lazy_hazard_free_extension(parsed.fn);
  TernaryWord x = TernaryWord::parse(at);
  std::cout << "function\tat\tvalue\ts_u_at\tbs_u_at\tcc_u_at\tstabs_at\tslys_at\n";
  Ternary value = ext.value(x);
  std::string stabs_cell = is_stable(value)
                               ? std::to_string(stable_sensitivity(ext, x))
                               : std::string("-");
  std::string bs_cell = "skipped(limit)", cc_cell = "skipped(limit)";
  if (parsed.fn.n <= kMaxSubsetSearchVars) {
    bs_cell = std::to_string(block_sensitivity_u(ext, x));
    cc_cell = std::to_string(certificate_complexity_u(ext, x));
  }
  std::cout << spec << '\t' << x.str() << '\t' << to_char(value) << '\t'
            << sensitivity_u(ext, x) << '\t' << bs_cell << '\t' << cc_cell << '\t'
            << stabs_cell << '\t' << stability_sensitivity(ext, x) << '\n';
  return 0;
}

int run_reconstruct(const std::string& spec, const std::string& center_text, int radius,
                    int s) {
  ParsedFunction parsed = parse_function_spec(spec);
  TernaryFunction ext = hazard_free_extension(parsed.fn);
  TernaryWord center = TernaryWord::parse(center_text);
  BallOracle oracle = BallOracle::probe(ext, center, radius);
  TernaryFunction rebuilt = reconstruct_from_ball(oracle, s);
  std::cout << "word\tvalue\n";
  for_each_word(ext.arity(), [&](const TernaryWord& w, std::uint64_t idx) {
    std::cout << w.str() << '\t' << to_char(rebuilt.value_index(idx)) << '\n';
  });
  bool exact = rebuilt == ext;
  std::cerr << (exact ? "reconstruction matches the extension exactly\n"
                      : "reconstruction differs from the extension\n");
  return exact ? 0 : 1;
}

int run_verify(int n, const std::string& filter_name, const std::string& checks_arg,
               const std::string& out, int sample, std::uint64_t seed, int jobs) {
  FunctionFilter filter;
  if (filter_name == "all")
    filter = FunctionFilter::all;
  else if (filter_name == "nondegenerate")
    filter = FunctionFilter::nondegenerate;
  else if (filter_name == "npn")
    filter = FunctionFilter::npn_representatives;
  else
    throw CLI::ValidationError("--filter", "unknown filter '" + filter_name + "'");

  std::vector<BooleanFunction> fs = sample > 0 ? sample_functions(n, sample, seed)
                                               : enumerate_functions(n, filter);

  std::vector<TheoremCheck> checks;
  if (checks_arg == "all") {
    checks = all_checks();
  } else {
    std::vector<std::string> ids;
    std::stringstream ss{checks_arg};
    std::string id;
    while (std::getline(ss, id, ',')) ids.push_back(id);
    checks = checks_by_ids(ids);
  }

  VerifyReport report = run_checks(fs, checks, jobs);
  if (out.empty())
    std::cout << report.to_tsv();
  else
    write_file(out, report.to_tsv());
  std::cerr << "pass=" << report.passes << " fail=" << report.failures
            << " skipped=" << report.skips << '\n';
  return report.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hazard-free decision tree toolkit"};
  app.require_subcommand(1);

  std::string spec, measure = "depth", emit_tree, at, from, tree_path, out, boolean_out;
  std::string center_text, filter_name = "all", checks_arg = "all";
  int k = 0, n = 1, radius = 0, s = 0, sample = 0, jobs = 1;
  int verify_n = 3;
  std::uint64_t seed = 0;
  bool has_k = false;

  bool list_implicants = false;
  CLI::App* analyze = app.add_subcommand("analyze", "full measure report for a function");
  analyze->add_option("--function", spec, "function spec")->required();
  analyze->add_flag("--implicants", list_implicants,
                    "list the prime implicants and implicates instead");

  CLI::App* optimal = app.add_subcommand("optimal", "exact optimal depth or size");
  optimal->add_option("--function", spec, "function spec")->required();
  optimal->add_option("--measure", measure,
                      "one of depth,size,depth_u,size_u,depth_k,size_k")
      ->required();
  optimal->add_option("--k", k, "u-budget for depth_k/size_k");
  optimal->add_option("--emit-tree", emit_tree, "write the witness tree here");

  CLI::App* construct = app.add_subcommand("construct", "build decision trees");
  construct->add_option("--from", from, "boolean-tree, mux, or smalldepth")->required();
  construct->add_option("--tree", tree_path, "input Boolean tree file");
  construct->add_option("--function", spec, "function spec for boolean-tree");
  construct->add_option("--n", n, "family parameter for mux/smalldepth");
  CLI::Option* k_option = construct->add_option("--k", k, "u-budget for boolean-tree");
  construct->add_option("--out", out, "output tree file")->required();
  construct->add_option("--boolean-out", boolean_out, "also write the Boolean mux tree");

  CLI::App* measures_cmd = app.add_subcommand("measures", "sensitivity measures");
  measures_cmd->add_option("--function", spec, "function spec")->required();
  measures_cmd->add_option("--at", at, "word literal for per-input measures");

  CLI::App* reconstruct = app.add_subcommand("reconstruct", "rebuild f~ from a ball");
  reconstruct->add_option("--function", spec, "function spec")->required();
  reconstruct->add_option("--center", center_text, "ball center word")->required();
  reconstruct->add_option("--radius", radius, "ball radius")->required();
  reconstruct->add_option("--s", s, "sensitivity bound")->required();

  CLI::App* verify = app.add_subcommand("verify", "run theorem checks over a sweep");
  verify->add_option("--n", verify_n, "input count for the sweep");
  verify->add_option("--filter", filter_name, "all, nondegenerate, or npn");
  verify->add_option("--checks", checks_arg, "comma-separated check ids or 'all'");
  verify->add_option("--out", out, "report file (stdout when absent)");
  verify->add_option("--sample", sample, "sample this many random functions instead");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--jobs", jobs, "worker threads for the sweep");

  try {
    app.parse(argc, argv);
    has_k = k_option->count() > 0;
    if (analyze->parsed()) return run_analyze(spec, list_implicants);
    if (optimal->parsed()) return run_optimal(spec, measure, k, emit_tree);
    if (construct->parsed())
      return run_construct(from, tree_path, spec, n, k, has_k, out, boolean_out);
    if (measures_cmd->parsed()) return run_measures(spec, at);
    if (reconstruct->parsed()) return run_reconstruct(spec, center_text, radius, s);
    if (verify->parsed())
      return run_verify(verify_n, filter_name, checks_arg, out, sample, seed, jobs);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
