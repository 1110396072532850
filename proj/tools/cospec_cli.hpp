#pragma once

// Command-line front end. Kept in a header so the test suite can drive
// run() in-process with string streams.

#include <cospec/builder.hpp>
#include <cospec/canonical.hpp>
#include <cospec/charpoly.hpp>
#include <cospec/graph.hpp>
#include <cospec/graph6.hpp>
#include <cospec/induced.hpp>
#include <cospec/polynomial.hpp>
#include <cospec/search.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace cospec::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,
  exit_usage = 2,
  exit_parse = 3,
  exit_size_limit = 4,
  exit_not_ds = 10,
};

inline auto default_workers() -> int {
  if (const char* env = std::getenv("COSPEC_WORKERS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      return 1;
    }
  }
  return 1;
}

inline auto vertex_list(VertexSet s) -> Json {
  Json out = Json::array();
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

inline auto graph_json(const Graph& g) -> Json {
  Json j;
  j["graph6"] = write_graph6(g);
  j["n"] = g.order();
  j["edges"] = g.edge_count();
  return j;
}

inline auto format_roots(const std::vector<double>& roots) -> std::string {
  std::ostringstream out;
  out << std::fixed << std::setprecision(9);
  for (std::size_t i = 0; i < roots.size(); ++i)
    out << (i ? " " : "") << (std::abs(roots[i]) < 5e-10 ? 0.0 : roots[i]);
  return out.str();
}

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// The graph argument, or every non-empty stdin line when it is absent or "-".
inline auto inputs(const std::string& arg, Context& ctx) -> std::vector<std::string> {
  if (!arg.empty() && arg != "-")
    return {arg};
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(ctx.in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (!line.empty())
      lines.push_back(line);
  }
  return lines;
}

inline auto charpoly_by(const Graph& g, const std::string& method) -> IntPolynomial {
  if (method == "sachs")
    return charpoly_sachs(g);
  if (method == "schwenk")
    return charpoly_schwenk(g);
  return charpoly_exact(g);
}

inline auto mate_report_json(const std::string& command, const std::string& input, const MateReport& r, int workers,
                             double seconds) -> Json {
  Json j;
  j["command"] = command;
  j["input"] = input;
  Json target = graph_json(r.target);
  target["polynomial"] = r.target_poly.to_string();
  j["target"] = target;
  Json scope;
  scope["n"] = r.scope.n;
  scope["edges"] = r.scope.edges.value_or(-1);
  scope["bipartite_only"] = r.scope.bipartite_only;
  scope["exhaustive"] = r.exhaustive;
  j["scope"] = scope;
  j["ds"] = r.determined_by_spectrum();
  j["mate_count"] = r.mates.size();
  Json mates = Json::array();
  for (const auto& m : r.mates) {
    Json mj;
    mj["graph6"] = write_graph6(m.graph);
    mj["canonical_graph6"] = write_graph6(m.form);
    mj["isolated"] = popcount(m.graph.isolated());
    mj["classification"] = to_string(m.classification);
    mates.push_back(mj);
  }
  j["mates"] = mates;
  j["candidates_visited"] = r.candidates_visited;
  j["workers"] = workers;
  j["elapsed_seconds"] = seconds;
  return j;
}

inline void print_mate_text(std::ostream& out, const Json& j) {
  out << "target: " << j["target"]["graph6"].get<std::string>() << " (n=" << j["target"]["n"]
      << ", edges=" << j["target"]["edges"] << ")\n";
  out << "polynomial: " << j["target"]["polynomial"].get<std::string>() << "\n";
  out << "scope: n=" << j["scope"]["n"] << " edges=" << j["scope"]["edges"]
      << " bipartite_only=" << j["scope"]["bipartite_only"] << " exhaustive=" << j["scope"]["exhaustive"] << "\n";
  out << "candidates: " << j["candidates_visited"] << "\n";
  out << "DS: " << (j["ds"].get<bool>() ? "yes" : "no") << "\n";
  out << "mates: " << j["mate_count"] << "\n";
  for (const auto& m : j["mates"])
    out << "mate " << m["graph6"].get<std::string>() << " " << m["classification"].get<std::string>()
        << " isolated=" << m["isolated"] << "\n";
}

inline auto forbidden_json(const std::string& input, const Graph& g) -> Json {
  const ForbiddenReport report = forbidden_report(g);
  Json j;
  j["command"] = "forbidden";
  j["input"] = input;
  j["graph"] = graph_json(g);
  Json patterns = Json::array();
  for (auto p : all_forbidden_patterns) {
    Json pj;
    pj["pattern"] = pattern_name(p);
    pj["present"] = report.present(p);
    const auto& w = report.witness[static_cast<std::size_t>(p)];
    pj["witness"] = w ? vertex_list(*w) : Json(nullptr);
    patterns.push_back(pj);
  }
  j["patterns"] = patterns;
  j["clear"] = report.clear();
  return j;
}

inline auto decompose_json(const std::string& input, const Graph& g) -> Json {
  Json j;
  j["command"] = "decompose";
  j["input"] = input;
  j["graph"] = graph_json(g);
  auto p = abcd_decompose(g);
  j["decomposed"] = p.has_value();
  if (!p) {
    j["sizes"] = nullptr;
    j["classification"] = nullptr;
    return j;
  }
  const auto s = p->sizes();
  j["sizes"] = {{"A", s[0]}, {"B", s[1]}, {"C", s[2]}, {"D", s[3]}};
  j["sets"] = {{"A", vertex_list(p->a)}, {"B", vertex_list(p->b)}, {"C", vertex_list(p->c)}, {"D", vertex_list(p->d)}};
  j["path"] = p->path;
  const int n = g.order() - 3;
  j["classification"] = n >= 1 ? to_string(classify_mate(g, n)) : "UNKNOWN";
  const IntPolynomial formula = gprime_charpoly_formula(s[0], s[1], s[2], s[3]).shifted(popcount(g.isolated()));
  j["formula_polynomial"] = formula.to_string();
  j["formula_matches"] = formula == charpoly_exact(g);
  return j;
}

inline auto construct(const std::vector<std::string>& words) -> Graph {
  auto arg = [&](std::size_t i) -> int {
    if (i >= words.size())
      throw CLI::ValidationError("construct", "missing argument");
    try {
      std::size_t used = 0;
      int v = std::stoi(words[i], &used);
      if (used != words[i].size() || v < 0)
        throw std::invalid_argument(words[i]);
      return v;
    } catch (const std::logic_error&) {
      throw ParseError("construct: '" + words[i] + "' is not a non-negative integer");
    }
  };
  auto arity = [&](std::size_t count) {
    if (words.size() != count + 1)
      throw CLI::ValidationError("construct", words[0] + " takes " + std::to_string(count) + " argument(s)");
  };
  if (words.empty())
    throw CLI::ValidationError("construct", "missing construction name");
  const std::string& kind = words[0];
  if (kind == "double-star") {
    arity(2);
    return double_star(arg(1), arg(2));
  }
  if (kind == "A") {
    arity(1);
    return gen_A_construction(arg(1));
  }
  if (kind == "B") {
    arity(1);
    return gen_B_construction(arg(1));
  }
  if (kind == "R") {
    arity(0);
    return gen_R();
  }
  if (kind == "star-mate") {
    arity(2);
    return star_mate(arg(1), arg(2));
  }
  throw CLI::ValidationError("construct", "unknown construction '" + kind + "'");
}

inline auto run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) -> int {
  Context ctx{in, out, err};
  CLI::App app{"Exact characteristic polynomials and cospectral-mate search", "cospec"};
  app.require_subcommand(1);

  std::string graph_arg;
  std::string method = "exact";
  std::string report = "text";
  bool roots = false;
  int workers = default_workers();
  std::vector<std::string> construct_words;

  auto* charpoly_cmd = app.add_subcommand("charpoly", "Characteristic polynomial det(xI - A)");
  charpoly_cmd->add_option("graph", graph_arg, "graph6 line or builder expression (stdin when omitted)");
  charpoly_cmd->add_option("--method", method)->check(CLI::IsMember({"exact", "sachs", "schwenk"}));
  charpoly_cmd->add_flag("--roots", roots, "Also print numeric eigenvalues");
  charpoly_cmd->add_option("--report", report)->check(CLI::IsMember({"json", "text"}));

  auto* mates_cmd = app.add_subcommand("mates", "Exhaustive search for cospectral mates");
  auto* ds_cmd = app.add_subcommand("ds", "Decide whether a graph is determined by its spectrum");
  for (auto* cmd : {mates_cmd, ds_cmd}) {
    cmd->add_option("graph", graph_arg, "graph6 line or builder expression (stdin when omitted)");
    cmd->add_option("--report", report)->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--workers", workers, "Worker threads (default COSPEC_WORKERS or 1)")->check(CLI::PositiveNumber);
  }

  auto* construct_cmd = app.add_subcommand("construct", "Emit a named construction as graph6");
  construct_cmd->add_option("construction", construct_words, "double-star a b | A a | B a | R | star-mate x y")
      ->required();

  auto* forbidden_cmd = app.add_subcommand("forbidden", "Induced forbidden patterns");
  auto* decompose_cmd = app.add_subcommand("decompose", "A/B/C/D partition and classification");
  for (auto* cmd : {forbidden_cmd, decompose_cmd}) {
    cmd->add_option("graph", graph_arg, "graph6 line or builder expression (stdin when omitted)");
    cmd->add_option("--report", report)->check(CLI::IsMember({"json", "text"}));
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "cospec: " << e.what() << "\n";
    return exit_usage;
  }

  const bool json = report == "json";
  try {
    if (construct_cmd->parsed()) {
      out << write_graph6(construct(construct_words)) << "\n";
      return exit_ok;
    }

    int status = exit_ok;
    for (const std::string& text : inputs(graph_arg, ctx)) {
      const Graph g = parse_graph_argument(text);

      if (charpoly_cmd->parsed()) {
        const IntPolynomial p = charpoly_by(g, method);
        if (json) {
          Json j;
          j["command"] = "charpoly";
          j["input"] = text;
          j["graph"] = graph_json(g);
          j["method"] = method;
          j["polynomial"] = p.to_string();
          if (roots)
            j["roots"] = numeric_roots(p);
          out << j.dump() << "\n";
        } else {
          out << p.to_string() << "\n";
          if (roots)
            out << "roots: " << format_roots(numeric_roots(p)) << "\n";
        }
      } else if (mates_cmd->parsed() || ds_cmd->parsed()) {
        const auto start = std::chrono::steady_clock::now();
        const MateReport r = cospectral_mates(g, workers);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const Json j = mate_report_json(ds_cmd->parsed() ? "ds" : "mates", text, r, workers, seconds);
        if (json)
          out << j.dump() << "\n";
        else
          print_mate_text(out, j);
        if (ds_cmd->parsed() && !r.determined_by_spectrum())
          status = exit_not_ds;
      } else if (forbidden_cmd->parsed()) {
        const Json j = forbidden_json(text, g);
        if (json) {
          out << j.dump() << "\n";
        } else {
          for (const auto& p : j["patterns"]) {
            out << p["pattern"].get<std::string>() << ": ";
            if (p["present"].get<bool>())
              out << "present " << p["witness"].dump() << "\n";
            else
              out << "absent\n";
          }
        }
      } else if (decompose_cmd->parsed()) {
        const Json j = decompose_json(text, g);
        if (json) {
          out << j.dump() << "\n";
        } else if (!j["decomposed"].get<bool>()) {
          out << "no valid A/B/C/D partition\n";
        } else {
          out << "sizes: A=" << j["sizes"]["A"] << " B=" << j["sizes"]["B"] << " C=" << j["sizes"]["C"]
              << " D=" << j["sizes"]["D"] << "\n";
          out << "classification: " << j["classification"].get<std::string>() << "\n";
          out << "formula: " << j["formula_polynomial"].get<std::string>()
              << (j["formula_matches"].get<bool>() ? " (matches)" : " (differs)") << "\n";
        }
        if (!j["decomposed"].get<bool>())
          status = std::max(status, static_cast<int>(exit_failure));
      }
    }
    return status;
  } catch (const CLI::ValidationError& e) {
    err << "cospec: " << e.what() << "\n";
    return exit_usage;
  } catch (const ParseError& e) {
    err << "cospec: " << e.what() << "\n";
    return exit_parse;
  } catch (const std::length_error& e) {
    err << "cospec: " << e.what() << "\n";
    return exit_size_limit;
  } catch (const DecompositionError& e) {
    err << "cospec: " << e.what() << "\n";
    return exit_failure;
  } catch (const std::invalid_argument& e) {
    err << "cospec: " << e.what() << "\n";
    return exit_parse;
  } catch (const std::out_of_range& e) {
    err << "cospec: " << e.what() << "\n";
    return exit_parse;
  }
}

} // namespace cospec::cli
