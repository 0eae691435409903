#pragma once

#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lapgraph/graph.hpp"
#include "lapgraph/obstacle.hpp"

namespace lapgraph::cli {

// Exit statuses: 0 success, 1 mathematical no-solution / failed
// verification, 2 usage or validation errors.
inline constexpr int kExitInconsistent = 1;
inline constexpr int kExitUsage = 2;

// Dense matrices and Jacobi sweeps stay desk scale; larger graphs are
// refused up front (gen is exempt).
inline constexpr int kDenseVertexCap = 512;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by parse_args for --help / -h; carries the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Verb { Gen, Laplacian, Rref, Charpoly, Spectrum, Genpoly, Obstacle, Star, Verify };
enum class Format { Text, Json };
enum class CharpolyMethod { Leverrier, Recurrence, Genpoly };

struct Command {
  Verb verb = Verb::Gen;
  Graph graph = Graph::build(1, {});
  std::optional<GraphFamily> family;  // set when the source was a plain family descriptor
  std::set<int> zeros;                // 0-based
  SolveMode mode = SolveMode::Restricted;
  CharpolyMethod method = CharpolyMethod::Leverrier;
  Format format = Format::Text;
  std::optional<ObstacleSolution> solution;  // verify
  double tol = 1e-12;
};

// argv without the program name. Throws UsageError / HelpRequested.
Command parse_args(const std::vector<std::string>& args);

// Writes the rendered result to out; returns the exit status (0 or 1).
int execute(const Command& c, std::ostream& out);

// Full pipeline with error mapping onto exit statuses.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lapgraph::cli
