#include "cli.hpp"

#include <boxnet/box_expr.hpp>
#include <boxnet/cograph.hpp>
#include <boxnet/dplace.hpp>
#include <boxnet/ecc.hpp>
#include <boxnet/error.hpp>
#include <boxnet/net.hpp>
#include <boxnet/net_io.hpp>
#include <boxnet/reduce.hpp>
#include <boxnet/translate.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <iterator>
#include <sstream>

namespace boxnet::cli {

namespace {

struct VerificationFailure {};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  return read_file(path);
}

struct ExprSource {
  std::string file;
  std::string inline_text;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", file, "Expression file ('-' for stdin)");
    cmd->add_option("-e,--expr", inline_text, "Expression text instead of a file");
  }

  BoxExpr load() const {
    if (file.empty() == inline_text.empty())
      throw Error(ErrorKind::InvalidArgument, "give exactly one of an expression file or --expr");
    auto expr = parse_box(inline_text.empty() ? read_input(file) : inline_text);
    require_safe(expr);
    return expr;
  }
};

struct PipelineFlags {
  std::string solver = "greedy";
  bool no_opt1 = false;
  bool no_opt2 = false;
  std::size_t state_cap = kDefaultStateCap;
  std::uint64_t branch_budget = kDefaultBranchBudget;

  void attach(CLI::App* cmd) {
    cmd->add_option("--solver", solver, "Clique cover solver")
        ->check(CLI::IsMember({"trivial", "greedy", "exact"}))
        ->capture_default_str();
    cmd->add_flag("--no-opt1", no_opt1, "Do not precover in-in edges");
    cmd->add_flag("--no-opt2", no_opt2, "Keep places with an empty postset");
    cmd->add_option("--state-cap", state_cap, "Reachability graph state cap")->capture_default_str();
    cmd->add_option("--branch-budget", branch_budget, "Exact solver branch budget")->capture_default_str();
  }

  ReduceOptions options() const {
    ReduceOptions o;
    o.solver = parse_solver(solver);
    o.opt1 = !no_opt1;
    o.opt2 = !no_opt2;
    o.state_cap = state_cap;
    o.branch_budget = branch_budget;
    return o;
  }
};

void add_format(CLI::App* cmd, std::string& format, std::vector<std::string> allowed) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(allowed)))->capture_default_str();
}

std::string emit_net(const MarkedNet& net, const std::string& format) {
  if (format == "json") return write_net_json(net);
  if (format == "dot") return write_net_dot(net);
  return write_net_text(net);
}

void deliver(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_file(path, content);
  }
}

std::string format_for(const std::string& format, const std::string& path) {
  if (!format.empty()) return format;
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".json")) return "json";
  if (ends_with(".dot")) return "dot";
  return "text";
}

// Half-open "a..b" or a single number.
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  try {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
      auto n = std::stoul(text);
      return {n, n};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "expected N or A..B, got '" + text + "'");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Box-expression to Petri-net translation, reduction and verification", "boxnet"};
  app.require_subcommand(1);

  // parse
  ExprSource parse_src;
  std::string parse_format = "text";
  auto* parse_cmd = app.add_subcommand("parse", "Parse and validate an expression");
  parse_src.attach(parse_cmd);
  add_format(parse_cmd, parse_format, {"text", "json"});

  // translate
  ExprSource tr_src;
  std::string tr_emit = "net", tr_format, tr_out;
  auto* tr_cmd = app.add_subcommand("translate", "Standard translation to a marked net");
  tr_src.attach(tr_cmd);
  tr_cmd->add_option("--emit", tr_emit, "What to write")->check(CLI::IsMember({"net", "dp-cover"}))->capture_default_str();
  add_format(tr_cmd, tr_format, {"text", "json", "dot"});
  tr_cmd->add_option("--out", tr_out, "Output file (default stdout)");

  // reduce
  ExprSource rd_src;
  PipelineFlags rd_flags;
  std::string rd_format, rd_out, rd_dot, rd_cover_out;
  auto* rd_cmd = app.add_subcommand("reduce", "Reduce through a clique cover of the connection graph");
  rd_src.attach(rd_cmd);
  rd_flags.attach(rd_cmd);
  add_format(rd_cmd, rd_format, {"text", "json", "dot"});
  rd_cmd->add_option("--out", rd_out, "Net output file (default stdout)");
  rd_cmd->add_option("--dot", rd_dot, "Also write the net as DOT");
  rd_cmd->add_option("--cover-out", rd_cover_out, "Also write the clique cover");

  // verify
  ExprSource vf_src;
  PipelineFlags vf_flags;
  auto* vf_cmd = app.add_subcommand("verify", "Reduce and check RG isomorphism with the standard net");
  vf_src.attach(vf_cmd);
  vf_flags.attach(vf_cmd);

  // verify-reduction
  std::string vr_net, vr_cover, vr_kept;
  std::size_t vr_cap = kDefaultStateCap;
  auto* vr_cmd = app.add_subcommand("verify-reduction", "Check a kept-place set against a distributed-place cover");
  vr_cmd->add_option("net", vr_net, "Net file")->required();
  vr_cmd->add_option("cover", vr_cover, "Cover file")->required();
  vr_cmd->add_option("kept", vr_kept, "Kept places file")->required();
  vr_cmd->add_option("--state-cap", vr_cap, "Reachability graph state cap")->capture_default_str();

  // dp-check
  std::string dp_net, dp_cover_file, dp_places;
  bool dp_dynamic = false;
  auto* dp_cmd = app.add_subcommand("dp-check", "Check place sets for the distributed-place property");
  dp_cmd->add_option("net", dp_net, "Net file")->required();
  auto* dp_cover_opt = dp_cmd->add_option("--cover", dp_cover_file, "Cover file, one place set per line");
  dp_cmd->add_option("--places", dp_places, "Place display names separated by blanks")->excludes(dp_cover_opt);
  dp_cmd->add_flag("--dynamic", dp_dynamic, "Also run the sequence-enumerating check");

  // cg
  ExprSource cg_src;
  std::string cg_format = "text";
  bool cg_opt1 = false;
  std::uint64_t cg_limit = 100'000;
  auto* cg_cmd = app.add_subcommand("cg", "Connection graph of an expression");
  cg_src.attach(cg_cmd);
  add_format(cg_cmd, cg_format, {"text", "json", "dot"});
  cg_cmd->add_flag("--opt1", cg_opt1, "Mark in-in edges precovered");
  cg_cmd->add_option("--clique-limit", cg_limit, "Largest max-clique count to enumerate")->capture_default_str();

  // bench
  std::string bench_range = "2..10", bench_solver = "witness";
  bool bench_csv = false;
  auto* bench_cmd = app.add_subcommand("bench", "Size comparisons on expression families");
  auto* bursts_cmd = bench_cmd->add_subcommand("bursts", "Choice between n pairs of concurrent actions");
  bench_cmd->require_subcommand(1);
  bursts_cmd->add_option("--n", bench_range, "N or A..B (inclusive)")->capture_default_str();
  bursts_cmd->add_option("--solver", bench_solver, "Cover used for the reduced net")
      ->check(CLI::IsMember({"witness", "trivial", "greedy", "exact"}))
      ->capture_default_str();
  bursts_cmd->add_flag("--csv", bench_csv, "CSV output");

  // export-dot
  std::string ed_net, ed_out;
  bool ed_rg = false;
  auto* ed_cmd = app.add_subcommand("export-dot", "Write a net (or its reachability graph) as DOT");
  ed_cmd->add_option("net", ed_net, "Net file")->required();
  ed_cmd->add_flag("--rg", ed_rg, "Export the reachability graph instead");
  ed_cmd->add_option("--out", ed_out, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (parse_cmd->parsed()) {
      auto expr = parse_src.load();
      out << (parse_format == "json" ? render_json(expr) : render(expr) + "\n");
    } else if (tr_cmd->parsed()) {
      auto expr = tr_src.load();
      auto net = box_net(expr);
      auto format = format_for(tr_format, tr_out);
      std::string content;
      if (tr_emit == "net") {
        content = emit_net(net, format);
      } else {
        auto cover = dp_cover(expr).flatten();
        content = format == "json" ? write_cover_json(cover)
                  : format == "dot" ? write_net_dot(net, cover)
                                    : write_cover(cover);
      }
      deliver(content, tr_out, out);
    } else if (rd_cmd->parsed()) {
      auto expr = rd_src.load();
      auto outcome = reduce(expr, rd_flags.options());
      deliver(emit_net(outcome.net, format_for(rd_format, rd_out)), rd_out, out);
      if (!rd_dot.empty()) write_file(rd_dot, write_net_dot(outcome.net));
      if (!rd_cover_out.empty()) write_file(rd_cover_out, write_clique_cover(outcome.cover));
      err << "places " << outcome.stats.places << ", transitions " << outcome.stats.transitions << ", arcs "
          << outcome.stats.arcs << ", cliques " << outcome.cover.size() << "\n";
    } else if (vf_cmd->parsed()) {
      auto expr = vf_src.load();
      auto options = vf_flags.options();
      auto outcome = reduce(expr, options);
      auto iso = verify(expr, outcome, options.state_cap);
      if (!iso.isomorphic) {
        out << "not isomorphic, witness " << join(iso.witness, " ") << "\n";
        err << iso.reason << "\n";
        return kVerificationFailed;
      }
      out << "isomorphic, " << iso.states << " states\n";
    } else if (vr_cmd->parsed()) {
      auto net = read_net(read_input(vr_net));
      auto cover = parse_cover(read_input(vr_cover));
      auto kept = parse_place_list(read_input(vr_kept));
      auto report = check_reduction(net, cover, kept, vr_cap);
      out << "pre/post preserved: " << (report.pre_post_preserved ? "yes" : "no") << "\n"
          << "enables preserved: " << (report.enables_preserved ? "yes" : "no") << "\n"
          << "disables preserved: " << (report.disables_preserved ? "yes" : "no") << "\n"
          << "net safe: " << to_string(report.net_safe) << "\n"
          << "side condition: " << to_string(report.side_condition) << "\n";
      for (const auto& o : report.offending) {
        out << "offending {";
        for (std::size_t i = 0; i < o.member.size(); ++i) out << (i ? " " : "") << o.member[i].display_name();
        out << "}: " << o.detail << "\n";
      }
      out << (report.valid() ? "valid" : "invalid") << "\n";
      if (!report.valid()) return kVerificationFailed;
    } else if (dp_cmd->parsed()) {
      auto net = read_net(read_input(dp_net));
      std::vector<PlaceGroup> groups;
      if (!dp_cover_file.empty()) {
        groups = parse_cover(read_input(dp_cover_file));
      } else if (!dp_places.empty()) {
        groups.push_back(parse_place_list(dp_places));
      } else {
        for (const auto& p : net.places()) groups.push_back({p});
      }
      bool all = true;
      for (const auto& g : groups) {
        auto set = net.places_of(g);
        auto verdict = is_distributed_place_static(net, set);
        out << net.format_places(set) << ": " << (verdict ? "distributed" : "not distributed");
        if (verdict) out << (is_pure(net, set) ? ", pure" : ", not pure");
        if (!verdict) out << " (" << verdict.reason << ")";
        if (dp_dynamic) {
          auto dyn = is_distributed_place_dynamic(net, set);
          out << "; dynamic " << (dyn ? "agrees" : "rejects");
          if (static_cast<bool>(dyn) != static_cast<bool>(verdict)) out << " (disagreement)";
          all = all && static_cast<bool>(dyn) == static_cast<bool>(verdict);
        }
        out << "\n";
        all = all && static_cast<bool>(verdict);
      }
      if (!all) return kVerificationFailed;
    } else if (cg_cmd->parsed()) {
      auto expr = cg_src.load();
      auto cg = gamma(expr).connection_graph();
      auto graph = materialize(cg);
      if (cg_opt1) graph = mark_precovered_in_edges(graph);
      if (cg_format == "json") {
        out << write_graph_json(graph);
      } else if (cg_format == "dot") {
        out << write_graph_dot(graph);
      } else {
        out << "# " << render(cg) << "\n";
        out << "# max-cliques " << count_max_cliques(cg) << "\n";
        out << write_graph(graph);
        if (count_max_cliques(cg) <= cg_limit)
          for (const auto& q : max_cliques(cg, cg_limit)) {
            out << "clique";
            for (const auto& v : q) out << " " << v.name();
            out << "\n";
          }
      }
    } else if (bench_cmd->parsed()) {
      auto [lo, hi] = parse_range(bench_range);
      if (lo == 0 || lo > hi) throw Error(ErrorKind::InvalidArgument, "empty range " + bench_range);
      const char* sep = bench_csv ? "," : " ";
      out << (bench_csv ? "" : "# ") << "n" << sep << "standard_entry_places" << sep << "reduced_entry_places" << sep
          << "rg_nodes" << sep << "standard_places" << sep << "reduced_places\n";
      for (auto n = lo; n <= hi; ++n) {
        auto expr = burst_family(n);
        auto standard = box_net(expr);
        auto reduced = bench_solver == "witness"
                           ? net_from_cover(burst_witness_cover(n), true)
                           : reduce(expr, ReduceOptions{.solver = parse_solver(bench_solver)}).net;
        auto iso = rg_isomorphic(standard, reduced);
        if (!iso.isomorphic) {
          err << "n=" << n << ": reduced net is not isomorphic: " << iso.reason << "\n";
          return kVerificationFailed;
        }
        out << n << sep << standard.initial().count() << sep << reduced.initial().count() << sep << iso.states
            << sep << standard.place_count() << sep << reduced.place_count() << "\n";
      }
    } else if (ed_cmd->parsed()) {
      auto net = read_net(read_input(ed_net));
      deliver(ed_rg ? write_reach_graph_dot(net, reach_graph(net)) : write_net_dot(net), ed_out, out);
    }
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << "\n";
    return is_budget_error(e.kind()) ? kBudgetExceeded : kUsageError;
  }
  return kOk;
}

}  // namespace boxnet::cli
