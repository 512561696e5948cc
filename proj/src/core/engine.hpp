#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "random.hpp"
#include "routing.hpp"
#include "scheme_simple.hpp"
#include "visibility.hpp"

namespace histroute {

class RouteError : public std::runtime_error {
 public:
  enum class Kind { FirewallBreach, ProtocolViolation, HopLimitExceeded, Stalled };

  RouteError(Kind kind, const std::string& what, std::vector<int> trace)
      : std::runtime_error(what), kind_(kind), trace_(std::move(trace)) {}
  Kind kind() const { return kind_; }
  const std::vector<int>& trace() const { return trace_; }

 private:
  Kind kind_;
  std::vector<int> trace_;
};

std::string_view to_string(RouteError::Kind kind);

struct Route {
  std::vector<int> trace;                 // s, ..., t; empty when s = t
  std::vector<std::size_t> header_bits;   // header size after each hop
  std::vector<std::uint8_t> rules;        // branch taken at each hop

  int hops() const { return trace.empty() ? 0 : static_cast<int>(trace.size()) - 1; }
};

template <class Scheme>
using StepFunction = std::function<typename Scheme::Step(const LinkTable<typename Scheme::Label>&,
                                                         const typename Scheme::Table&,
                                                         const typename Scheme::Label&,
                                                         const typename Scheme::Header&)>;

/// Moves a packet from s to t, handing the step function nothing but the
/// current link table, routing table, target label and header. The label
/// it returns must name an entry of the link table.
template <class Scheme, class Step>
Route run_route_with(const Scheme& scheme, int s, int t, Step&& step, int hop_limit = 0) {
  const int n = scheme.size();
  if (s < 0 || s >= n || t < 0 || t >= n) throw std::out_of_range("route endpoint out of range");
  if (hop_limit <= 0) hop_limit = 4 * n;
  Route route;
  if (s == t) return route;
  route.trace.push_back(s);
  const auto& target = scheme.label(t);
  auto header = Scheme::empty_header();
  int current = s;
  while (current != t) {
    if (route.hops() >= hop_limit)
      throw RouteError(RouteError::Kind::HopLimitExceeded,
                       "no arrival after " + std::to_string(hop_limit) + " hops", route.trace);
    const auto links = scheme.link_table(current);
    typename Scheme::Step result;
    try {
      result = step(links, scheme.table(current), target, header);
    } catch (const ProtocolError& e) {
      throw RouteError(RouteError::Kind::ProtocolViolation, e.what(), route.trace);
    }
    const auto ids = scheme.link_ids(current);
    int next = -1;
    for (std::size_t i = 0; i < links.entries.size(); ++i)
      if (links.entries[i] == result.next) {
        next = ids[i];
        break;
      }
    if (next < 0)
      throw RouteError(RouteError::Kind::FirewallBreach,
                       "step at vertex " + std::to_string(current) + " returned a label outside its link table",
                       route.trace);
    if (next == current)
      throw RouteError(RouteError::Kind::Stalled, "step at vertex " + std::to_string(current) + " chose itself",
                       route.trace);
    header = result.header;
    current = next;
    route.trace.push_back(current);
    route.header_bits.push_back(scheme.header_bits(header));
    route.rules.push_back(result.rule);
  }
  return route;
}

template <class Scheme>
Route run_route(const Scheme& scheme, int s, int t, int hop_limit = 0) {
  return run_route_with(scheme, s, t, &Scheme::step, hop_limit);
}

/// Unweighted distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(std::span<const std::vector<int>> adjacency, int source);
std::vector<int> bfs_all(const VisibilityGraph& g, int source);

/// Open neighbor lists of the graph a scheme was built on.
template <class Scheme>
std::vector<std::vector<int>> scheme_adjacency(const Scheme& scheme) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(scheme.size()));
  for (int v = 0; v < scheme.size(); ++v)
    for (int w : scheme.link_ids(v))
      if (w != v) adj[static_cast<std::size_t>(v)].push_back(w);
  return adj;
}

std::vector<std::vector<int>> graph_adjacency(const VisibilityGraph& g);

struct PairRecord {
  int s = 0;
  int t = 0;
  int bfs = 0;
  int routed = 0;
  double stretch() const { return bfs == 0 ? 1.0 : static_cast<double>(routed) / bfs; }
};

struct Failure {
  int s = 0;
  int t = 0;
  std::string reason;
  std::vector<int> trace;
};

struct VerifyOptions {
  std::optional<std::size_t> sample_pairs;  // all ordered pairs when empty
  std::uint64_t seed = 1;
  unsigned threads = 0;                     // 0: hardware concurrency
  bool keep_records = false;
  bool two_step_progress = false;
  double stretch_bound = 1.0;
  int hop_limit = 0;
  std::size_t max_failures_kept = 50;
};

struct VerifyReport {
  std::vector<PairRecord> records;
  std::size_t pairs = 0;
  std::size_t failure_count = 0;
  std::vector<Failure> failures;  // the first few, ordered by (s, t)
  double max_stretch = 0.0;
  double mean_stretch = 0.0;
  std::size_t label_bits = 0;
  std::size_t table_bits = 0;
  std::size_t header_bits = 0;   // largest header seen in flight
  std::size_t two_step_violations = 0;  // pairs with a stall at any position
  std::size_t fresh_violations = 0;     // pairs with a stall where the header was empty

  bool ok() const { return failure_count == 0; }
  void write_csv(std::ostream& os) const;
  std::string summary() const;
};

/// Ordered (s, t) pairs with s != t drawn uniformly; deterministic in seed.
std::vector<std::pair<int, int>> sample_pairs(int n, std::size_t count, std::uint64_t seed);

namespace detail {

struct TargetResult {
  std::vector<PairRecord> records;
  std::vector<Failure> failures;
  std::size_t failure_count = 0;
  std::size_t two_step_violations = 0;
  std::size_t fresh_violations = 0;
  std::size_t header_bits = 0;
  double stretch_sum = 0.0;
  double max_stretch = 0.0;
  std::size_t pairs = 0;
  std::size_t delivered = 0;
};

// Routes every listed source to one target; d holds BFS distances to t.
template <class Scheme>
void verify_target(const Scheme& scheme, int t, std::span<const int> sources, const std::vector<int>& d,
                   const VerifyOptions& opt, TargetResult& out) {
  for (int s : sources) {
    if (s == t) continue;
    ++out.pairs;
    PairRecord rec{s, t, d[static_cast<std::size_t>(s)], -1};
    std::string reason;
    std::vector<int> trace;
    try {
      const auto route = run_route(scheme, s, t, opt.hop_limit);
      rec.routed = route.hops();
      trace = route.trace;
      for (auto bits : route.header_bits) out.header_bits = std::max(out.header_bits, bits);
      if (rec.routed > opt.stretch_bound * rec.bfs)
        reason = "stretch " + std::to_string(rec.stretch()) + " exceeds bound";
      if (opt.two_step_progress) {
        // Every position is checked; a stall counts against the lemma form
        // only when the packet arrived there with an empty header.
        const auto& p = route.trace;
        bool stalled = false, fresh_stall = false;
        std::size_t at = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
          const int later = i + 2 < p.size() ? p[i + 2] : t;
          const int now = d[static_cast<std::size_t>(p[i])];
          if (now > 0 && d[static_cast<std::size_t>(later)] > now - 1) {
            stalled = true;
            const bool carried = i > 0 && route.header_bits[i - 1] > 0;
            if (!carried && !fresh_stall) {
              fresh_stall = true;
              at = i;
            }
          }
        }
        if (stalled) ++out.two_step_violations;
        if (fresh_stall) {
          ++out.fresh_violations;
          if (reason.empty()) reason = "no progress within two hops after position " + std::to_string(at);
        }
      }
      ++out.delivered;
      out.stretch_sum += rec.stretch();
      out.max_stretch = std::max(out.max_stretch, rec.stretch());
    } catch (const RouteError& e) {
      reason = std::string(to_string(e.kind())) + ": " + e.what();
      trace = e.trace();
    }
    if (!reason.empty()) {
      ++out.failure_count;
      if (out.failures.size() < opt.max_failures_kept) out.failures.push_back({s, t, reason, trace});
    }
    if (opt.keep_records) out.records.push_back(rec);
  }
}

}  // namespace detail

/// Routes the requested pairs and compares them against BFS distances in
/// `adjacency`. Work is split by target; results merge in target order, so
/// the report does not depend on the thread count.
template <class Scheme>
VerifyReport verify_pairs(const Scheme& scheme, std::span<const std::vector<int>> adjacency, const VerifyOptions& opt) {
  const int n = scheme.size();
  if (static_cast<int>(adjacency.size()) != n) throw std::invalid_argument("verify: graph and scheme sizes differ");

  std::vector<std::vector<int>> sources(static_cast<std::size_t>(n));
  if (opt.sample_pairs) {
    for (auto [s, t] : sample_pairs(n, *opt.sample_pairs, opt.seed)) sources[static_cast<std::size_t>(t)].push_back(s);
  } else {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    for (auto& list : sources) list = all;
  }

  std::vector<detail::TargetResult> results(static_cast<std::size_t>(n));
  unsigned workers = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
  auto work = [&](unsigned w) {
    for (int t = static_cast<int>(w); t < n; t += static_cast<int>(workers)) {
      const auto& src = sources[static_cast<std::size_t>(t)];
      if (src.empty()) continue;
      const auto d = bfs_distances(adjacency, t);
      detail::verify_target(scheme, t, src, d, opt, results[static_cast<std::size_t>(t)]);
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  VerifyReport report;
  double sum = 0.0;
  std::size_t delivered = 0;
  for (auto& r : results) {
    delivered += r.delivered;
    report.pairs += r.pairs;
    report.failure_count += r.failure_count;
    report.two_step_violations += r.two_step_violations;
    report.fresh_violations += r.fresh_violations;
    report.header_bits = std::max(report.header_bits, r.header_bits);
    report.max_stretch = std::max(report.max_stretch, r.max_stretch);
    sum += r.stretch_sum;
    report.records.insert(report.records.end(), r.records.begin(), r.records.end());
    for (auto& f : r.failures) report.failures.push_back(std::move(f));
  }
  report.mean_stretch = delivered ? sum / static_cast<double>(delivered) : 0.0;
  auto by_pair = [](const auto& a, const auto& b) { return std::pair(a.s, a.t) < std::pair(b.s, b.t); };
  std::stable_sort(report.records.begin(), report.records.end(), by_pair);
  std::stable_sort(report.failures.begin(), report.failures.end(), by_pair);
  if (report.failures.size() > opt.max_failures_kept) report.failures.resize(opt.max_failures_kept);

  const auto sizes = scheme.sizes();
  report.label_bits = sizes.label_bits;
  report.table_bits = sizes.table_bits;
  return report;
}

template <class Scheme>
VerifyReport verify_all_pairs(const Scheme& scheme, const VisibilityGraph& g, VerifyOptions opt = {}) {
  opt.stretch_bound = Scheme::kStretchBound;
  opt.two_step_progress = Scheme::kStretchBound > 1.0;
  const auto adj = graph_adjacency(g);
  return verify_pairs(scheme, adj, opt);
}

}  // namespace histroute
