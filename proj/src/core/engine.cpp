#include "engine.hpp"

#include <cstdio>
#include <queue>
#include <sstream>

namespace histroute {

std::string_view to_string(RouteError::Kind kind) {
  switch (kind) {
    case RouteError::Kind::FirewallBreach: return "firewall-breach";
    case RouteError::Kind::ProtocolViolation: return "protocol-violation";
    case RouteError::Kind::HopLimitExceeded: return "hop-limit-exceeded";
    case RouteError::Kind::Stalled: return "stalled";
  }
  return "unknown";
}

std::vector<int> bfs_distances(std::span<const std::vector<int>> adjacency, int source) {
  std::vector<int> d(adjacency.size(), -1);
  std::queue<int> q;
  d[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adjacency[static_cast<std::size_t>(v)]) {
      if (d[static_cast<std::size_t>(w)] >= 0) continue;
      d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(v)] + 1;
      q.push(w);
    }
  }
  return d;
}

std::vector<std::vector<int>> graph_adjacency(const VisibilityGraph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
  return adj;
}

std::vector<int> bfs_all(const VisibilityGraph& g, int source) { return bfs_distances(graph_adjacency(g), source); }

std::vector<std::pair<int, int>> sample_pairs(int n, std::size_t count, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("sample_pairs: need at least two vertices");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> out;
  out.reserve(count);
  const auto un = static_cast<std::uint64_t>(n);
  while (out.size() < count) {
    const auto s = static_cast<int>(detail::uniform_below(rng, un));
    // Shift past s so that t is uniform over the other n - 1 vertices.
    auto t = static_cast<int>(detail::uniform_below(rng, un - 1));
    if (t >= s) ++t;
    out.emplace_back(s, t);
  }
  return out;
}

void VerifyReport::write_csv(std::ostream& os) const {
  os << "s,t,bfs,routed,stretch\n";
  char buf[32];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%.6f", r.stretch());
    os << r.s << ',' << r.t << ',' << r.bfs << ',' << r.routed << ',' << (r.routed < 0 ? "" : buf) << '\n';
  }
}

std::string VerifyReport::summary() const {
  char buf[64];
  std::ostringstream os;
  std::snprintf(buf, sizeof buf, "%.3f", max_stretch);
  os << "maxStretch=" << buf << '\n';
  std::snprintf(buf, sizeof buf, "%.3f", mean_stretch);
  os << "meanStretch=" << buf << '\n';
  os << "labBits=" << label_bits << '\n';
  os << "tabBits=" << table_bits << '\n';
  os << "hdrBits=" << header_bits << '\n';
  os << "pairs=" << pairs << '\n';
  os << "failures=" << failure_count << '\n';
  os << "twoStepStalls=" << two_step_violations << '\n';
  return os.str();
}

}  // namespace histroute
