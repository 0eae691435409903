#include "lapgraph/genpoly.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "lapgraph/linalg.hpp"

namespace lapgraph {

namespace {

// Same terms, declared over a different (larger) variable count.
MultilinearPolynomial with_variable_count(const MultilinearPolynomial& p, int n) {
  MultilinearPolynomial out(n);
  for (const auto& [mask, c] : p.terms()) out.add_term(mask, c);
  return out;
}

// Re-embeds a polynomial over the vertices of delete_vertex(g, removed)
// into g's numbering, OR-ing `extra` into every term mask.
MultilinearPolynomial lift_deleted(const MultilinearPolynomial& p, int removed, int target_vars,
                                   std::uint32_t extra, const Integer& scale) {
  MultilinearPolynomial out(target_vars);
  for (const auto& [mask, c] : p.terms()) {
    std::uint32_t lifted = 0;
    for (int b = 0; b < target_vars; ++b) {
      if (mask & (1u << b)) lifted |= 1u << (b >= removed ? b + 1 : b);
    }
    out.add_term(lifted | extra, c * scale);
  }
  return out;
}

// Generalized charpoly of g minus one vertex; a single vertex leaves the
// empty matrix, whose determinant is 1.
MultilinearPolynomial deleted_genpoly(const Graph& g, int v) {
  if (g.vertex_count() == 1) return MultilinearPolynomial::constant(0, 1);
  return generalized_charpoly(delete_vertex(g, v));
}

std::vector<int> mapped_neighbors(const Graph& g, int v) {
  std::vector<int> mapped;
  for (int w : g.neighbors(v)) mapped.push_back(w > v ? w - 1 : w);
  return mapped;
}

}  // namespace

MultilinearPolynomial::MultilinearPolynomial(int variable_count) : n_(variable_count) {
  if (variable_count < 0 || variable_count > kGenpolyMaxVertices) {
    throw std::invalid_argument("variable count outside [0, 16]");
  }
}

MultilinearPolynomial MultilinearPolynomial::constant(int variable_count, Integer c) {
  MultilinearPolynomial p(variable_count);
  p.add_term(0, c);
  return p;
}

std::uint32_t MultilinearPolynomial::mask_of(const std::vector<int>& vars) {
  std::uint32_t mask = 0;
  for (int v : vars) {
    if (v < 0 || v >= kGenpolyMaxVertices) {
      throw std::invalid_argument("variable index out of range: " + std::to_string(v + 1));
    }
    if (mask & (1u << v)) {
      throw std::invalid_argument("repeated variable: " + std::to_string(v + 1));
    }
    mask |= 1u << v;
  }
  return mask;
}

std::vector<int> MultilinearPolynomial::vars_of(std::uint32_t mask) {
  std::vector<int> vars;
  for (int b = 0; b < kGenpolyMaxVertices; ++b) {
    if (mask & (1u << b)) vars.push_back(b);
  }
  return vars;
}

Integer MultilinearPolynomial::coeff(std::uint32_t mask) const {
  const auto it = terms_.find(mask);
  return it == terms_.end() ? Integer(0) : it->second;
}

void MultilinearPolynomial::add_term(std::uint32_t mask, const Integer& c) {
  if (mask >= (1u << n_)) throw std::invalid_argument("term uses a variable outside the range");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultilinearPolynomial MultilinearPolynomial::times_linear(int var, const Integer& a,
                                                          const Integer& b) const {
  if (var < 0 || var >= n_) throw std::invalid_argument("variable index out of range");
  MultilinearPolynomial out(n_);
  const std::uint32_t bit = 1u << var;
  for (const auto& [mask, c] : terms_) {
    if (mask & bit) throw std::logic_error("times_linear variable already occurs");
    out.add_term(mask, a * c);
    out.add_term(mask | bit, b * c);
  }
  return out;
}

MultilinearPolynomial& MultilinearPolynomial::operator+=(const MultilinearPolynomial& other) {
  if (n_ != other.n_) throw std::invalid_argument("variable counts differ");
  for (const auto& [mask, c] : other.terms_) add_term(mask, c);
  return *this;
}

MultilinearPolynomial& MultilinearPolynomial::operator-=(const MultilinearPolynomial& other) {
  if (n_ != other.n_) throw std::invalid_argument("variable counts differ");
  for (const auto& [mask, c] : other.terms_) add_term(mask, -c);
  return *this;
}

MultilinearPolynomial generalized_charpoly(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kGenpolyMaxVertices) {
    throw std::invalid_argument("generalized charpoly capped at " +
                                std::to_string(kGenpolyMaxVertices) + " vertices");
  }
  const ExactMatrix l = laplacian(g);
  MultilinearPolynomial p(n);
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    std::vector<std::size_t> keep;
    for (int v = 0; v < n; ++v) {
      if (!(subset & (1u << v))) keep.push_back(static_cast<std::size_t>(v));
    }
    Integer minor = det_bareiss(principal_submatrix(l, keep)).get_num();
    if (std::popcount(subset) % 2 == 1) minor = -minor;
    p.add_term(subset, minor);
  }
  return p;
}

Integer coefficient(const Graph& g, const std::vector<int>& subset) {
  const int n = g.vertex_count();
  std::vector<char> in_subset(n, 0);
  for (int v : subset) {
    if (v < 0 || v >= n) {
      throw std::invalid_argument("subset vertex out of range: " + std::to_string(v + 1));
    }
    if (in_subset[v]) throw std::invalid_argument("repeated subset vertex");
    in_subset[v] = 1;
  }
  std::vector<std::size_t> keep;
  for (int v = 0; v < n; ++v) {
    if (!in_subset[v]) keep.push_back(static_cast<std::size_t>(v));
  }
  Integer minor = det_bareiss(principal_submatrix(laplacian(g), keep)).get_num();
  return subset.size() % 2 == 1 ? Integer(-minor) : minor;
}

UniPolynomial collapse(const MultilinearPolynomial& mp) {
  std::vector<Integer> coeffs(mp.variable_count() + 1, Integer(0));
  for (const auto& [mask, c] : mp.terms()) {
    coeffs[std::popcount(mask)] += c;
  }
  return UniPolynomial(std::move(coeffs));
}

MultilinearPolynomial substitute_shift(const MultilinearPolynomial& mp,
                                       const std::vector<int>& shifted) {
  const std::uint32_t shift_mask = MultilinearPolynomial::mask_of(shifted);
  if (shift_mask >= (1u << mp.variable_count())) {
    throw std::invalid_argument("shifted variable outside the polynomial's range");
  }
  MultilinearPolynomial out(mp.variable_count());
  for (const auto& [mask, c] : mp.terms()) {
    const std::uint32_t w = mask & shift_mask;
    // prod_{i in w}(x_i - 1) expands over the subsets of w.
    std::uint32_t u = w;
    while (true) {
      out.add_term(mask ^ u, std::popcount(u) % 2 == 1 ? Integer(-c) : c);
      if (u == 0) break;
      u = (u - 1) & w;
    }
  }
  return out;
}

MultilinearPolynomial x1_term_prop31(const Graph& g, int v) {
  const int n = g.vertex_count();
  if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
  if (n > kGenpolyMaxVertices) {
    throw std::invalid_argument("generalized charpoly capped at " +
                                std::to_string(kGenpolyMaxVertices) + " vertices");
  }
  const MultilinearPolynomial q = deleted_genpoly(g, v);
  const MultilinearPolynomial q_shifted = substitute_shift(q, mapped_neighbors(g, v));
  return lift_deleted(q_shifted, v, n, 1u << v, Integer(-1));
}

MultilinearPolynomial pendant_genpoly(const Graph& g, int v) {
  const int n = g.vertex_count();
  if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
  if (n + 1 > kGenpolyMaxVertices) {
    throw std::invalid_argument("generalized charpoly capped at " +
                                std::to_string(kGenpolyMaxVertices) + " vertices");
  }
  // (1 - x_w) P_g(.. x_v - 1 ..) minus the shifted deleted-vertex polynomial,
  // where w = n is the pendant vertex.
  const MultilinearPolynomial shifted_whole =
      with_variable_count(substitute_shift(generalized_charpoly(g), {v}), n + 1);
  const MultilinearPolynomial term1 = shifted_whole.times_linear(n, Integer(1), Integer(-1));
  const MultilinearPolynomial term2 = lift_deleted(
      substitute_shift(deleted_genpoly(g, v), mapped_neighbors(g, v)), v, n + 1, 0, Integer(1));
  return term1 - term2;
}

}  // namespace lapgraph
