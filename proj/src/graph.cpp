#include "hardsat/graph.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "hardsat/random.hpp"

namespace hardsat {

ChargedGraph::ChargedGraph(std::uint32_t vertex_count, std::vector<Edge> edges,
                           std::vector<std::uint8_t> charges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), charges_(std::move(charges)) {
  if (charges_.empty())
    charges_.assign(vertex_count_, 0);
  if (charges_.size() != vertex_count_)
    throw std::invalid_argument("charge vector length does not match vertex count");
  for (auto& c : charges_)
    c = c ? 1 : 0;
  for (const auto& [u, v] : edges_) {
    if (u >= vertex_count_ || v >= vertex_count_)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
      throw std::invalid_argument("self-loops are not allowed");
  }
}

std::vector<std::uint32_t> ChargedGraph::degrees() const {
  std::vector<std::uint32_t> deg(vertex_count_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<std::uint32_t> ChargedGraph::incident_edges(std::uint32_t v) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].first == v || edges_[e].second == v)
      out.push_back(e);
  return out;
}

bool ChargedGraph::is_connected() const {
  if (vertex_count_ <= 1)
    return true;
  // Union-find over the edge list.
  std::vector<std::uint32_t> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  std::uint32_t components = vertex_count_;
  for (const auto& [u, v] : edges_) {
    const auto a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::uint8_t ChargedGraph::total_charge_parity() const {
  std::uint8_t p = 0;
  for (auto c : charges_)
    p ^= c;
  return p;
}

ChargedGraph ChargedGraph::with_charges(std::vector<std::uint8_t> charges) const {
  return ChargedGraph(vertex_count_, edges_, std::move(charges));
}

ChargedGraph ChargedGraph::with_single_charge(std::uint32_t vertex) const {
  if (vertex >= vertex_count_)
    throw std::invalid_argument("charged vertex out of range");
  std::vector<std::uint8_t> charges(vertex_count_, 0);
  charges[vertex] = 1;
  return with_charges(std::move(charges));
}

ChargedGraph cycle_graph(std::uint32_t n) {
  if (n < 3)
    throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<ChargedGraph::Edge> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    edges.emplace_back(i, (i + 1) % n);
  return ChargedGraph(n, std::move(edges)).with_single_charge();
}

ChargedGraph complete_graph(std::uint32_t n) {
  if (n < 2)
    throw std::invalid_argument("complete graph needs at least 2 vertices");
  std::vector<ChargedGraph::Edge> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      edges.emplace_back(i, j);
  return ChargedGraph(n, std::move(edges)).with_single_charge();
}

ChargedGraph random_regular_graph(std::uint32_t n, std::uint32_t d, std::uint64_t seed,
                                  unsigned max_attempts) {
  if ((static_cast<std::uint64_t>(n) * d) % 2 != 0)
    throw std::invalid_argument("n*d must be even");
  if (d == 0 || d >= n)
    throw std::invalid_argument("degree must satisfy 1 <= d < n");

  RandomSource rng(seed);
  std::vector<std::uint32_t> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * d);
  for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
    stubs.clear();
    for (std::uint32_t v = 0; v < n; ++v)
      for (std::uint32_t k = 0; k < d; ++k)
        stubs.push_back(v);
    for (std::size_t i = stubs.size(); i > 1; --i)
      std::swap(stubs[i - 1], stubs[rng.uniform(i)]);

    std::vector<ChargedGraph::Edge> edges;
    bool self_loop = false;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      auto u = stubs[i], v = stubs[i + 1];
      if (u == v) {
        self_loop = true;
        break;
      }
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (self_loop)
      continue;
    ChargedGraph g(n, std::move(edges));
    if (!g.is_connected())
      continue;
    return g.with_single_charge();
  }
  throw std::runtime_error("random_regular_graph: no valid pairing after " +
                           std::to_string(max_attempts) + " attempts");
}

namespace {

std::uint64_t spec_number(std::string_view word, std::string_view spec) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size())
    throw std::invalid_argument("bad number '" + std::string(word) + "' in graph spec '" +
                                std::string(spec) + "'");
  return value;
}

}  // namespace

ChargedGraph parse_graph_spec(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto colon = spec.find(':', start);
    parts.push_back(spec.substr(start, colon - start));
    if (colon == std::string_view::npos)
      break;
    start = colon + 1;
  }
  const auto& kind = parts[0];
  if (kind == "cycle" && parts.size() == 2)
    return cycle_graph(static_cast<std::uint32_t>(spec_number(parts[1], spec)));
  if (kind == "complete" && parts.size() == 2)
    return complete_graph(static_cast<std::uint32_t>(spec_number(parts[1], spec)));
  if (kind == "regular" && parts.size() == 4)
    return random_regular_graph(static_cast<std::uint32_t>(spec_number(parts[1], spec)),
                                static_cast<std::uint32_t>(spec_number(parts[2], spec)),
                                spec_number(parts[3], spec));
  throw std::invalid_argument("unrecognized graph spec '" + std::string(spec) +
                              "' (expected cycle:N, complete:N or regular:N:D:SEED)");
}

std::string to_string(const Fraction& f) {
  return std::to_string(f.numerator) + "/" + std::to_string(f.denominator);
}

Fraction edge_expansion(const ChargedGraph& g) {
  const std::uint32_t n = g.vertex_count();
  if (n > 20)
    throw std::invalid_argument("edge_expansion: at most 20 vertices");
  if (n < 2)
    throw std::invalid_argument("edge_expansion: at least 2 vertices");

  Fraction best{0, 0};  // denominator 0 marks "unset"
  const std::uint32_t limit = 1U << n;
  for (std::uint32_t s = 1; s < limit; ++s) {
    const auto size = static_cast<std::uint64_t>(__builtin_popcount(s));
    if (size > n / 2)
      continue;
    std::uint64_t boundary = 0;
    for (const auto& [u, v] : g.edges())
      boundary += ((s >> u) & 1U) != ((s >> v) & 1U);
    // boundary/size < best.num/best.den
    if (best.denominator == 0 || boundary * best.denominator < best.numerator * size)
      best = {boundary, size};
  }
  const std::uint64_t common = std::gcd(best.numerator, best.denominator);
  if (best.numerator == 0)
    return {0, 1};
  return {best.numerator / common, best.denominator / common};
}

}  // namespace hardsat
