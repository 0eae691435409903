#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "lapgraph/graph.hpp"
#include "lapgraph/linalg.hpp"
#include "lapgraph/spectrum.hpp"
#include "support/test_support.hpp"

using namespace lapgraph;
namespace ts = lapgraph::testsupport;

namespace {

bool entry_is(const SpectrumEntry& e, long value, std::size_t mult) {
  return e.exact() && std::get<Rational>(e.descriptor) == value && e.multiplicity == mult;
}

UniPolynomial complete_graph_charpoly(int n) {
  // -t (n - t)^(n-1), assembled by repeated multiplication.
  UniPolynomial p{0, -1};
  for (int k = 0; k < n - 1; ++k) p = p * UniPolynomial{n, -1};
  return p;
}

std::vector<GraphFamily> families_up_to(int cap) {
  std::vector<GraphFamily> families;
  for (int n = 1; n <= cap; ++n) families.push_back(GraphFamily::path(n));
  for (int n = 3; n <= cap; ++n) families.push_back(GraphFamily::cycle(n));
  for (int n = 1; n <= cap; ++n) families.push_back(GraphFamily::complete(n));
  for (int m = 1; m < cap; ++m) {
    for (int n = 1; m + n <= cap; ++n) families.push_back(GraphFamily::complete_bipartite(m, n));
  }
  return families;
}

}  // namespace

TEST_CASE("closed-form spectra of the fixed examples") {
  const auto k4 = closed_form_spectrum(GraphFamily::complete(4));
  REQUIRE(k4.entries().size() == 2);
  CHECK(entry_is(k4.entries()[0], 0, 1));
  CHECK(entry_is(k4.entries()[1], 4, 3));

  const auto k23 = closed_form_spectrum(GraphFamily::complete_bipartite(2, 3));
  REQUIRE(k23.entries().size() == 4);
  CHECK(entry_is(k23.entries()[0], 0, 1));
  CHECK(entry_is(k23.entries()[1], 2, 2));
  CHECK(entry_is(k23.entries()[2], 3, 1));
  CHECK(entry_is(k23.entries()[3], 5, 1));

  // 2 - 2cos(2k*pi/4), k = 0..3: values 0, 2, 2, 4.
  const auto c4 = closed_form_spectrum(GraphFamily::cycle(4));
  REQUIRE(c4.entries().size() == 3);
  CHECK(entry_is(c4.entries()[0], 0, 1));
  CHECK(entry_is(c4.entries()[1], 2, 2));
  CHECK(entry_is(c4.entries()[2], 4, 1));

  const auto k11 = closed_form_spectrum(GraphFamily::complete_bipartite(1, 1));
  REQUIRE(k11.entries().size() == 2);
  CHECK(entry_is(k11.entries()[0], 0, 1));
  CHECK(entry_is(k11.entries()[1], 2, 1));

  const auto k22 = closed_form_spectrum(GraphFamily::complete_bipartite(2, 2));
  REQUIRE(k22.entries().size() == 3);
  CHECK(entry_is(k22.entries()[1], 2, 2));
}

TEST_CASE("closed-form descriptors stay consistent") {
  for (const auto& family : families_up_to(10)) {
    const auto spectrum = closed_form_spectrum(family);
    CHECK(spectrum.total_multiplicity() ==
          static_cast<std::size_t>(family.vertex_count()));
    for (const auto& e : spectrum.entries()) {
      if (!e.exact()) {
        CHECK(std::abs(std::get<CosForm>(e.descriptor).value() - e.approx) <= 1e-15);
      }
    }
    const auto values = spectrum.expanded();
    for (std::size_t i = 1; i < values.size(); ++i) CHECK(values[i - 1] <= values[i]);
  }
}

TEST_CASE("closed forms match Jacobi eigenvalues") {
  for (const auto& family : families_up_to(12)) {
    const auto closed = closed_form_spectrum(family).expanded();
    const auto numeric = jacobi_eigenvalues(laplacian(generate(family)));
    REQUIRE(closed.size() == numeric.size());
    for (std::size_t i = 0; i < closed.size(); ++i) {
      CHECK(std::abs(closed[i] - numeric[i]) <= 1e-9);
    }
  }
}

TEST_CASE("path and cycle eigenvalue ranges") {
  for (int n = 1; n <= 12; ++n) {
    for (double v : closed_form_spectrum(GraphFamily::path(n)).expanded()) {
      CHECK(v >= -1e-15);
      CHECK(v < 4.0);
    }
  }
  for (int n = 3; n <= 12; ++n) {
    for (double v : closed_form_spectrum(GraphFamily::cycle(n)).expanded()) {
      CHECK(v >= -1e-15);
      CHECK(v <= 4.0);
    }
  }
}

TEST_CASE("spectrum sum equals trace") {
  for (const auto& family : families_up_to(12)) {
    const Graph g = generate(family);
    long degree_sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);

    const auto spectrum = closed_form_spectrum(family);
    bool all_exact = true;
    Rational exact_sum = 0;
    double approx_sum = 0;
    for (const auto& e : spectrum.entries()) {
      approx_sum += e.approx * static_cast<double>(e.multiplicity);
      if (e.exact()) {
        exact_sum += Rational(e.multiplicity) * std::get<Rational>(e.descriptor);
      } else {
        all_exact = false;
      }
    }
    if (all_exact) CHECK(exact_sum == degree_sum);
    CHECK(approx_sum == doctest::Approx(static_cast<double>(degree_sum)).epsilon(1e-9));
  }
}

TEST_CASE("tridiagonal recurrence fixed values") {
  CHECK(tridiagonal_charpoly(4, TridiagKind::Path) == UniPolynomial{0, -4, 10, -6, 1});
  CHECK(tridiagonal_charpoly(1, TridiagKind::Path) == UniPolynomial{0, -1});
  // C3 = K3, so the cycle recurrence must reproduce -t(3-t)^2.
  CHECK(tridiagonal_charpoly(3, TridiagKind::Cycle) == complete_graph_charpoly(3));
  CHECK_THROWS_AS(tridiagonal_charpoly(0, TridiagKind::Path), std::invalid_argument);
  CHECK_THROWS_AS(tridiagonal_charpoly(2, TridiagKind::Cycle), std::invalid_argument);
}

TEST_CASE("tridiagonal recurrence agrees with charpoly") {
  for (std::size_t n = 1; n <= 16; ++n) {
    CHECK(tridiagonal_charpoly(n, TridiagKind::Path) ==
          charpoly(laplacian(generate(GraphFamily::path(static_cast<int>(n))))));
  }
  for (std::size_t n = 3; n <= 16; ++n) {
    CHECK(tridiagonal_charpoly(n, TridiagKind::Cycle) ==
          charpoly(laplacian(generate(GraphFamily::cycle(static_cast<int>(n))))));
  }
}

TEST_CASE("star transform fixed values") {
  // Star of a single edge is the triangle.
  CHECK(star_charpoly(UniPolynomial{0, -2, 1}, 2) == complete_graph_charpoly(3));
  // Star of a single vertex is the single edge.
  CHECK(star_charpoly(UniPolynomial{0, -1}, 1) == UniPolynomial{0, -2, 1});
  for (int n = 1; n <= 8; ++n) {
    CHECK(star_charpoly(complete_graph_charpoly(n), n) == complete_graph_charpoly(n + 1));
  }
  CHECK_THROWS_AS(star_charpoly(UniPolynomial{1, 1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(star_charpoly(UniPolynomial{0, -1}, 3), std::invalid_argument);
}

TEST_CASE("star transform agrees with the star graph") {
  ts::Rng rng(5001);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> size(1, 8);
    const int n = size(rng);
    const Graph g = n == 1 ? Graph::build(1, {}) : ts::random_connected_graph(rng, n);
    CHECK(star_charpoly(charpoly(laplacian(g)), n) == charpoly(laplacian(star_of(g))));
  }
}

TEST_CASE("zero multiplicity") {
  CHECK(zero_multiplicity(charpoly(laplacian(generate(GraphFamily::path(4))))) == 1);
  CHECK(zero_multiplicity(UniPolynomial{0, -2, 1}) == 1);
  CHECK(zero_multiplicity(UniPolynomial{1}) == 0);
  CHECK_THROWS_AS(zero_multiplicity(UniPolynomial{}), std::invalid_argument);

  ts::Rng rng(5002);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> size(2, 9);
    const Graph g = ts::random_connected_graph(rng, size(rng));
    CHECK(zero_multiplicity(charpoly(laplacian(g))) == 1);
  }

  // Two disjoint edges: zero eigenvalue once per component.
  const Graph two_components = Graph::build(4, {{0, 1}, {2, 3}});
  CHECK(zero_multiplicity(charpoly(laplacian(two_components))) == 2);
}
