#include "lapgraph/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lapgraph/genpoly.hpp"
#include "lapgraph/io.hpp"
#include "lapgraph/linalg.hpp"
#include "lapgraph/spectrum.hpp"

namespace lapgraph::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

int parse_positive_int(const std::string& token, const std::string& what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(token, &used);
    if (used != token.size() || value < 1) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw UsageError("malformed " + what + ": \"" + token + "\"");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) return parts;
    start = pos + 1;
  }
}

GraphFamily parse_family(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw UsageError("malformed family descriptor: \"" + text + "\" (expected name:params)");
  }
  const std::string name = text.substr(0, colon);
  const std::string params = text.substr(colon + 1);
  try {
    if (name == "path") return GraphFamily::path(parse_positive_int(params, "path size"));
    if (name == "cycle") return GraphFamily::cycle(parse_positive_int(params, "cycle size"));
    if (name == "complete") {
      return GraphFamily::complete(parse_positive_int(params, "complete-graph size"));
    }
    if (name == "kbip") {
      const auto sides = split(params, ',');
      if (sides.size() != 2) {
        throw UsageError("kbip takes two sizes: \"kbip:m,n\", got \"" + text + "\"");
      }
      return GraphFamily::complete_bipartite(parse_positive_int(sides[0], "side-A size"),
                                             parse_positive_int(sides[1], "side-B size"));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown family \"" + name + "\" (path, cycle, complete, kbip)");
}

struct Source {
  Graph graph = Graph::build(1, {});
  std::optional<GraphFamily> family;
};

// "star+" and "pendant@v+" prefixes apply to the base family left-to-right:
// star+path:2 is star_of(P2) = K3.
Source resolve_descriptor(const std::string& descriptor) {
  auto segments = split(descriptor, '+');
  Source source;
  source.family = parse_family(segments.back());
  source.graph = generate(*source.family);
  segments.pop_back();
  if (!segments.empty()) source.family.reset();
  for (const auto& segment : segments) {
    try {
      if (segment == "star") {
        source.graph = star_of(source.graph);
      } else if (segment.starts_with("pendant@")) {
        const int v = parse_positive_int(segment.substr(8), "pendant anchor");
        source.graph = attach_pendant(source.graph, v - 1);
      } else {
        throw UsageError("unknown transform \"" + segment + "\" (star, pendant@v)");
      }
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return source;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::set<int> parse_zeros(const std::string& text) {
  std::set<int> zeros;
  for (const auto& token : split(text, ',')) {
    const int v = parse_positive_int(token, "zero-set vertex");
    if (!zeros.insert(v - 1).second) {
      throw UsageError("repeated zero-set vertex: " + token);
    }
  }
  return zeros;
}

ordered_json matrix_json(const ExactMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return ordered_json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

void render_matrix(const ExactMatrix& m, Format format, std::ostream& out,
                   std::optional<std::size_t> rank = std::nullopt) {
  if (format == Format::Json) {
    ordered_json j = matrix_json(m);
    if (rank) j["rank"] = *rank;
    out << j.dump() << '\n';
    return;
  }
  out << io::write_matrix_text(m);
  if (rank) out << "rank " << *rank << '\n';
}

void render_polynomial(const UniPolynomial& p, Format format, std::ostream& out) {
  if (format == Format::Json) {
    ordered_json coeffs = ordered_json::array();
    if (p.zero()) {
      coeffs.push_back("0");
    } else {
      for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    }
    out << ordered_json{{"coeffs", std::move(coeffs)}}.dump() << '\n';
    return;
  }
  out << io::write_polynomial_text(p);
}

std::string cos_display(const CosForm& f) {
  return std::to_string(f.a) + "-" + std::to_string(f.b) + "cos(" + std::to_string(f.num) +
         "pi/" + std::to_string(f.den) + ")";
}

void render_spectrum(const ClosedFormSpectrum& spectrum, Format format, std::ostream& out) {
  if (format == Format::Json) {
    ordered_json entries = ordered_json::array();
    for (const auto& e : spectrum.entries()) {
      if (e.exact()) {
        entries.push_back(
            {{"value", to_string(std::get<Rational>(e.descriptor))}, {"mult", e.multiplicity}});
      } else {
        entries.push_back({{"form", cos_display(std::get<CosForm>(e.descriptor))},
                           {"value_approx", e.approx},
                           {"mult", e.multiplicity}});
      }
    }
    out << ordered_json{{"eigenvalues", std::move(entries)}}.dump() << '\n';
    return;
  }
  for (const auto& e : spectrum.entries()) {
    if (e.exact()) {
      out << to_string(std::get<Rational>(e.descriptor));
    } else {
      out << cos_display(std::get<CosForm>(e.descriptor)) << " ~ " << format_double(e.approx);
    }
    out << " x" << e.multiplicity << '\n';
  }
}

void render_solution(const ObstacleSolution& s, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << io::write_solution_json(s);
    return;
  }
  out << "mode " << io::mode_to_string(s.mode) << '\n';
  if (s.mode == SolveMode::ConstantShift) {
    out << "consistent " << (s.consistent ? "true" : "false") << '\n';
    out << "b " << to_string(*s.shift) << '\n';
  }
  if (s.u) {
    out << "u";
    for (const auto& q : *s.u) out << ' ' << to_string(q);
    out << '\n';
  }
  if (s.mode == SolveMode::Slack) {
    out << "b";
    for (const auto& q : *s.slack) out << ' ' << to_string(q);
    out << '\n';
  }
}

void render_genpoly(const MultilinearPolynomial& mp, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << io::write_genpoly_json(mp);
    return;
  }
  for (const auto& [vars, c] : io::canonical_terms(mp)) {
    out << c.get_str() << ' ';
    if (vars.empty()) {
      out << '1';
    } else {
      for (std::size_t k = 0; k < vars.size(); ++k) {
        if (k > 0) out << '*';
        out << 'x' << vars[k] + 1;
      }
    }
    out << '\n';
  }
}

void render_verify(const VerifyReport& report, Format format, std::ostream& out) {
  if (format == Format::Json) {
    ordered_json violations = ordered_json::array();
    for (const auto& v : report.violations) {
      violations.push_back({{"row", v.row + 1},
                            {"lhs", to_string(v.lhs)},
                            {"expected", to_string(v.expected)}});
    }
    out << ordered_json{{"ok", report.ok}, {"violations", std::move(violations)}}.dump() << '\n';
    return;
  }
  out << "ok " << (report.ok ? "true" : "false") << '\n';
  for (const auto& v : report.violations) {
    out << "row " << v.row + 1 << " lhs " << to_string(v.lhs) << " expected "
        << to_string(v.expected) << '\n';
  }
}

UniPolynomial charpoly_by(const Command& c) {
  switch (c.method) {
    case CharpolyMethod::Leverrier: return charpoly(laplacian(c.graph));
    case CharpolyMethod::Recurrence: {
      const auto kind =
          c.family->kind == GraphFamily::Kind::Path ? TridiagKind::Path : TridiagKind::Cycle;
      return tridiagonal_charpoly(static_cast<std::size_t>(c.family->n), kind);
    }
    case CharpolyMethod::Genpoly: return collapse(generalized_charpoly(c.graph));
  }
  throw std::logic_error("unreachable charpoly method");
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Exact-arithmetic toolkit for graph Laplacians"};
  app.name("lapgraph");
  app.require_subcommand(1);

  std::string family_text, file_path, problem_path, zeros_text, solution_path;
  std::string mode_text = "restricted";
  std::string use_text = "leverrier";
  std::string format_text = "text";
  double tol = 1e-12;

  const auto add_common = [&](CLI::App* sub, bool with_problem) {
    sub->add_option("--family", family_text,
                    "family descriptor: path:n, cycle:n, complete:n, kbip:m,n, with optional "
                    "star+ / pendant@v+ prefixes");
    sub->add_option("--file", file_path, "graph file, edge-list text or JSON");
    if (with_problem) sub->add_option("--problem", problem_path, "problem JSON file");
    sub->add_option("--format", format_text, "output format: text or json");
    return sub;
  };

  add_common(app.add_subcommand("gen", "emit the graph"), false);
  add_common(app.add_subcommand("laplacian", "emit the Laplacian matrix"), false);
  add_common(app.add_subcommand("rref", "reduced row echelon form of the Laplacian"), false);
  auto* charpoly_cmd =
      add_common(app.add_subcommand("charpoly", "characteristic polynomial det(L - tI)"), false);
  charpoly_cmd->add_option("--use", use_text, "method: leverrier, recurrence, genpoly");
  auto* spectrum_cmd = add_common(
      app.add_subcommand("spectrum", "closed-form eigenvalues (families) or Jacobi values"),
      false);
  spectrum_cmd->add_option("--tol", tol, "Jacobi off-diagonal tolerance");
  add_common(app.add_subcommand("genpoly", "generalized characteristic polynomial"), false);
  auto* obstacle_cmd =
      add_common(app.add_subcommand("obstacle", "solve the obstacle problem"), true);
  obstacle_cmd->add_option("--zeros", zeros_text, "comma-separated 1-based zero vertices");
  obstacle_cmd->add_option("--mode", mode_text, "restricted, slack, or constant-shift");
  add_common(app.add_subcommand("star", "characteristic polynomial of star_of(g), by the "
                                        "polynomial transform"),
             false);
  auto* verify_cmd =
      add_common(app.add_subcommand("verify", "re-check a solution row by row"), true);
  verify_cmd->add_option("--zeros", zeros_text, "comma-separated 1-based zero vertices");
  verify_cmd->add_option("--solution", solution_path, "solution JSON file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string verb_name = sub->get_name();

  Command cmd;
  if (verb_name == "gen") cmd.verb = Verb::Gen;
  else if (verb_name == "laplacian") cmd.verb = Verb::Laplacian;
  else if (verb_name == "rref") cmd.verb = Verb::Rref;
  else if (verb_name == "charpoly") cmd.verb = Verb::Charpoly;
  else if (verb_name == "spectrum") cmd.verb = Verb::Spectrum;
  else if (verb_name == "genpoly") cmd.verb = Verb::Genpoly;
  else if (verb_name == "obstacle") cmd.verb = Verb::Obstacle;
  else if (verb_name == "star") cmd.verb = Verb::Star;
  else cmd.verb = Verb::Verify;

  if (format_text == "text") cmd.format = Format::Text;
  else if (format_text == "json") cmd.format = Format::Json;
  else throw UsageError("unknown format \"" + format_text + "\" (text, json)");

  const bool wants_problem = cmd.verb == Verb::Obstacle || cmd.verb == Verb::Verify;
  const int sources =
      (family_text.empty() ? 0 : 1) + (file_path.empty() ? 0 : 1) + (problem_path.empty() ? 0 : 1);
  if (sources != 1) {
    throw UsageError(wants_problem ? "need exactly one of --family, --file, --problem"
                                   : "need exactly one of --family, --file");
  }

  std::optional<SolveMode> problem_mode;
  if (!family_text.empty()) {
    Source source = resolve_descriptor(family_text);
    cmd.graph = std::move(source.graph);
    cmd.family = source.family;
  } else if (!file_path.empty()) {
    cmd.graph = io::read_graph_auto(read_file(file_path));
  } else {
    auto [problem, mode] = io::read_problem_json(read_file(problem_path));
    const auto used = [&](const std::string& name) {
      const CLI::Option* opt = sub->get_option_no_throw(name);
      return opt != nullptr && opt->count() > 0;
    };
    if (used("--zeros") || used("--mode")) {
      throw UsageError("--zeros/--mode conflict with --problem");
    }
    cmd.graph = std::move(problem.graph);
    cmd.zeros = std::move(problem.zero_set);
    problem_mode = mode;
  }

  if (wants_problem && problem_path.empty()) {
    if (zeros_text.empty()) throw UsageError("missing --zeros");
    cmd.zeros = parse_zeros(zeros_text);
  }
  if (cmd.verb == Verb::Obstacle) {
    cmd.mode = problem_mode ? *problem_mode : io::mode_from_string(mode_text);
  }

  if (cmd.verb == Verb::Charpoly) {
    if (use_text == "leverrier") cmd.method = CharpolyMethod::Leverrier;
    else if (use_text == "recurrence") cmd.method = CharpolyMethod::Recurrence;
    else if (use_text == "genpoly") cmd.method = CharpolyMethod::Genpoly;
    else throw UsageError("unknown method \"" + use_text + "\" (leverrier, recurrence, genpoly)");
    if (cmd.method == CharpolyMethod::Recurrence &&
        (!cmd.family || (cmd.family->kind != GraphFamily::Kind::Path &&
                         cmd.family->kind != GraphFamily::Kind::Cycle))) {
      throw UsageError("--use recurrence needs a plain path:n or cycle:n family");
    }
  }

  const int n = cmd.graph.vertex_count();
  if (cmd.verb == Verb::Genpoly ||
      (cmd.verb == Verb::Charpoly && cmd.method == CharpolyMethod::Genpoly)) {
    if (n > kGenpolyMaxVertices) {
      throw UsageError("genpoly cap exceeded: at most " +
                       std::to_string(kGenpolyMaxVertices) + " vertices, got " +
                       std::to_string(n));
    }
  }
  if (cmd.verb != Verb::Gen && n > kDenseVertexCap) {
    throw UsageError("graph too large for exact computation: " + std::to_string(n) +
                     " vertices (cap " + std::to_string(kDenseVertexCap) + ")");
  }

  if (cmd.verb == Verb::Spectrum) {
    if (!(tol > 0)) throw UsageError("--tol must be positive");
    cmd.tol = tol;
  }

  if (cmd.verb == Verb::Verify) {
    if (solution_path.empty()) throw UsageError("missing --solution");
    cmd.solution = io::read_solution_json(read_file(solution_path));
    if (problem_mode && *problem_mode != cmd.solution->mode) {
      throw UsageError("problem and solution modes differ");
    }
    cmd.mode = cmd.solution->mode;
  }

  return cmd;
}

int execute(const Command& c, std::ostream& out) {
  switch (c.verb) {
    case Verb::Gen:
      out << (c.format == Format::Json ? io::write_graph_json(c.graph)
                                       : io::write_edge_list(c.graph));
      return 0;
    case Verb::Laplacian:
      render_matrix(laplacian(c.graph), c.format, out);
      return 0;
    case Verb::Rref: {
      const RrefResult r = rref(laplacian(c.graph));
      render_matrix(r.matrix, c.format, out, r.rank);
      return 0;
    }
    case Verb::Charpoly:
      render_polynomial(charpoly_by(c), c.format, out);
      return 0;
    case Verb::Star: {
      const UniPolynomial p = charpoly(laplacian(c.graph));
      render_polynomial(star_charpoly(p, static_cast<std::size_t>(c.graph.vertex_count())),
                        c.format, out);
      return 0;
    }
    case Verb::Spectrum: {
      if (c.family) {
        render_spectrum(closed_form_spectrum(*c.family), c.format, out);
        return 0;
      }
      const std::vector<double> values = jacobi_eigenvalues(laplacian(c.graph), c.tol);
      if (c.format == Format::Json) {
        ordered_json j = ordered_json::array();
        for (double v : values) j.push_back(v);
        out << ordered_json{{"eigenvalues_approx", std::move(j)}}.dump() << '\n';
      } else {
        for (double v : values) out << format_double(v) << '\n';
      }
      return 0;
    }
    case Verb::Genpoly:
      render_genpoly(generalized_charpoly(c.graph), c.format, out);
      return 0;
    case Verb::Obstacle: {
      const ObstacleSolution s = solve(ObstacleProblem{c.graph, c.zeros}, c.mode);
      render_solution(s, c.format, out);
      return s.consistent ? 0 : kExitInconsistent;
    }
    case Verb::Verify: {
      const ObstacleProblem p{c.graph, c.zeros};
      const VerifyReport report = verify_solution(p, *c.solution);
      render_verify(report, c.format, out);
      return report.ok ? 0 : kExitInconsistent;
    }
  }
  throw std::logic_error("unreachable verb");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return execute(parse_args(args), out);
  } catch (const HelpRequested& help) {
    out << help.what();
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace lapgraph::cli
