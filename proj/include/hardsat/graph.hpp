#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hardsat {

/// Undirected multigraph with a 0/1 charge per vertex. Parallel edges are
/// allowed, self-loops are not. Vertices are 0-based.
class ChargedGraph {
public:
  using Edge = std::pair<std::uint32_t, std::uint32_t>;

  ChargedGraph() = default;
  /// Throws std::invalid_argument on an out-of-range endpoint, a self-loop or
  /// a charge vector of the wrong length. Empty `charges` means all zero.
  ChargedGraph(std::uint32_t vertex_count, std::vector<Edge> edges,
               std::vector<std::uint8_t> charges = {});

  std::uint32_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::uint8_t>& charges() const { return charges_; }

  std::vector<std::uint32_t> degrees() const;
  /// Edge indices incident to v, ascending.
  std::vector<std::uint32_t> incident_edges(std::uint32_t v) const;
  bool is_connected() const;
  /// XOR of all charges.
  std::uint8_t total_charge_parity() const;

  ChargedGraph with_charges(std::vector<std::uint8_t> charges) const;
  /// All charges zero except vertex 0.
  ChargedGraph with_single_charge(std::uint32_t vertex = 0) const;

  friend bool operator==(const ChargedGraph&, const ChargedGraph&) = default;

private:
  std::uint32_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> charges_;
};

// The builders below return graphs charged on vertex 0 only, so the total
// charge is odd.

ChargedGraph cycle_graph(std::uint32_t n);
ChargedGraph complete_graph(std::uint32_t n);

/// Random d-regular multigraph on n vertices by the pairing (configuration)
/// model: n*d half-edges are matched uniformly at random; a matching with a
/// self-loop or a disconnected result is rejected and redrawn. Throws
/// std::invalid_argument if n*d is odd or d >= n, std::runtime_error after
/// `max_attempts` rejections.
ChargedGraph random_regular_graph(std::uint32_t n, std::uint32_t d, std::uint64_t seed,
                                  unsigned max_attempts = 10'000);

/// Parses `cycle:N`, `complete:N` or `regular:N:D:SEED`.
ChargedGraph parse_graph_spec(std::string_view spec);

struct Fraction {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  friend bool operator==(const Fraction&, const Fraction&) = default;
  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

std::string to_string(const Fraction& f);

/// Edge expansion min |boundary(S)| / |S| over 1 <= |S| <= n/2, by
/// exhaustive enumeration. Throws std::invalid_argument for n > 20 or n < 2.
Fraction edge_expansion(const ChargedGraph& g);

}  // namespace hardsat
