#include "lapgraph/io.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace lapgraph::io {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const ordered_json& j) { return j.dump() + "\n"; }

ordered_json graph_to_json(const Graph& g) {
  ordered_json edges = ordered_json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i + 1, j + 1});
  return ordered_json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const ordered_json& j) {
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
    edges.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
  }
  return Graph::build(n, edges);
}

ExactVector rationals_from_json(const ordered_json& j) {
  ExactVector v;
  for (const auto& entry : j) v.push_back(parse_rational(entry.get<std::string>()));
  return v;
}

ordered_json rationals_to_json(const ExactVector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& q : v) out.push_back(lapgraph::to_string(q));
  return out;
}

}  // namespace

std::string mode_to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::Restricted: return "restricted";
    case SolveMode::Slack: return "slack";
    case SolveMode::ConstantShift: return "constant-shift";
  }
  throw std::logic_error("unreachable solve mode");
}

SolveMode mode_from_string(const std::string& text) {
  if (text == "restricted") return SolveMode::Restricted;
  if (text == "slack") return SolveMode::Slack;
  if (text == "constant-shift") return SolveMode::ConstantShift;
  throw std::invalid_argument("unknown mode: \"" + text + "\"");
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [i, j] : g.edges()) out << i + 1 << ' ' << j + 1 << '\n';
  return out.str();
}

Graph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  long count = 0;
  if (!(in >> n >> count) || count < 0) {
    throw std::invalid_argument("edge list must start with \"n <edge count>\"");
  }
  std::vector<std::pair<int, int>> edges;
  for (long k = 0; k < count; ++k) {
    int i = 0, j = 0;
    if (!(in >> i >> j)) throw std::invalid_argument("edge list is truncated");
    edges.emplace_back(i - 1, j - 1);
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("trailing tokens after the edge list");
  return Graph::build(n, edges);
}

std::string write_graph_json(const Graph& g) { return dump(graph_to_json(g)); }

Graph read_graph_json(const std::string& text) { return graph_from_json(parse_json(text)); }

Graph read_graph_auto(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return read_graph_json(text);
  return read_edge_list(text);
}

std::string write_matrix_text(const ExactMatrix& m) {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto& cell = cells[i * m.cols() + j] = lapgraph::to_string(m(i, j));
      width[j] = std::max(width[j], cell.size());
    }
  }
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& cell = cells[i * m.cols() + j];
      if (j > 0) out << ' ';
      out << std::string(width[j] - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

ExactMatrix read_matrix_text(const std::string& text) {
  std::istringstream in(text);
  long rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) {
    throw std::invalid_argument("matrix text must start with \"rows cols\"");
  }
  std::vector<Rational> entries;
  entries.reserve(rows * cols);
  for (long k = 0; k < rows * cols; ++k) {
    std::string token;
    if (!(in >> token)) throw std::invalid_argument("matrix text is truncated");
    entries.push_back(parse_rational(token));
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("trailing tokens after the matrix");
  return ExactMatrix(rows, cols, std::move(entries));
}

std::string write_polynomial_text(const UniPolynomial& p) {
  if (p.zero()) return "0\n";
  std::ostringstream out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k > 0) out << ' ';
    out << p.coeffs()[k].get_str();
  }
  out << '\n';
  return out.str();
}

UniPolynomial read_polynomial_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<Integer> coeffs;
  std::string token;
  while (in >> token) coeffs.push_back(parse_integer(token));
  return UniPolynomial(std::move(coeffs));
}

std::vector<std::pair<std::vector<int>, Integer>> canonical_terms(
    const MultilinearPolynomial& mp) {
  std::vector<std::pair<std::vector<int>, Integer>> terms;
  for (const auto& [mask, c] : mp.terms()) {
    terms.emplace_back(MultilinearPolynomial::vars_of(mask), c);
  }
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return terms;
}

std::string write_genpoly_json(const MultilinearPolynomial& mp) {
  const auto terms = canonical_terms(mp);
  ordered_json out_terms = ordered_json::array();
  for (const auto& [vars, c] : terms) {
    ordered_json jvars = ordered_json::array();
    for (int v : vars) jvars.push_back(v + 1);
    out_terms.push_back({{"vars", std::move(jvars)}, {"coeff", c.get_str()}});
  }
  return dump(ordered_json{{"n", mp.variable_count()}, {"terms", std::move(out_terms)}});
}

MultilinearPolynomial read_genpoly_json(const std::string& text) {
  const ordered_json j = parse_json(text);
  MultilinearPolynomial mp(j.at("n").get<int>());
  for (const auto& term : j.at("terms")) {
    std::vector<int> vars;
    for (const auto& v : term.at("vars")) vars.push_back(v.get<int>() - 1);
    mp.add_term(MultilinearPolynomial::mask_of(vars),
                parse_integer(term.at("coeff").get<std::string>()));
  }
  return mp;
}

std::string write_problem_json(const ObstacleProblem& p, SolveMode mode) {
  ordered_json zeros = ordered_json::array();
  for (int v : p.zero_set) zeros.push_back(v + 1);
  return dump(ordered_json{{"graph", graph_to_json(p.graph)},
                           {"zero_set", std::move(zeros)},
                           {"mode", mode_to_string(mode)}});
}

std::pair<ObstacleProblem, SolveMode> read_problem_json(const std::string& text) {
  const ordered_json j = parse_json(text);
  ObstacleProblem p{graph_from_json(j.at("graph")), {}};
  for (const auto& v : j.at("zero_set")) p.zero_set.insert(v.get<int>() - 1);
  return {std::move(p), mode_from_string(j.at("mode").get<std::string>())};
}

std::string write_solution_json(const ObstacleSolution& s) {
  ordered_json j{{"mode", mode_to_string(s.mode)}};
  if (s.mode == SolveMode::ConstantShift) {
    j["consistent"] = s.consistent;
    j["b"] = lapgraph::to_string(*s.shift);
  }
  if (s.u) j["u"] = rationals_to_json(*s.u);
  if (s.mode == SolveMode::Slack) j["b"] = rationals_to_json(*s.slack);
  return dump(j);
}

ObstacleSolution read_solution_json(const std::string& text) {
  const ordered_json j = parse_json(text);
  ObstacleSolution s;
  s.mode = mode_from_string(j.at("mode").get<std::string>());
  if (j.contains("u")) s.u = rationals_from_json(j.at("u"));
  switch (s.mode) {
    case SolveMode::Restricted: break;
    case SolveMode::Slack:
      s.slack = rationals_from_json(j.at("b"));
      break;
    case SolveMode::ConstantShift:
      s.consistent = j.at("consistent").get<bool>();
      s.shift = parse_rational(j.at("b").get<std::string>());
      break;
  }
  return s;
}

}  // namespace lapgraph::io
