#include <algorithm>
#include <tuple>

#include "dqgraph/graph.hpp"

namespace dqgraph {

namespace {

struct Incidence {
  Vertex neighbour;
  std::size_t arc;
  bool forward;
};

/// Depth-first search for simple cycles through `start` that only visit
/// vertices larger than `start`.
class CycleSearch {
 public:
  CycleSearch(const Digraph& g, std::size_t max_cycles, CycleEnumeration& out)
      : out_{out}, max_cycles_{max_cycles}, adjacency_(static_cast<std::size_t>(g.vertex_count() + 1)),
        on_path_(static_cast<std::size_t>(g.vertex_count() + 1), 0) {
    for (std::size_t e = 0; e < g.arc_count(); ++e) {
      const Arc& a = g.arc(e);
      adjacency_[static_cast<std::size_t>(a.tail)].push_back({a.head, e, true});
      adjacency_[static_cast<std::size_t>(a.head)].push_back({a.tail, e, false});
    }
    for (auto& list : adjacency_)
      std::sort(list.begin(), list.end(), [](const Incidence& x, const Incidence& y) {
        return std::tie(x.neighbour, x.arc) < std::tie(y.neighbour, y.arc);
      });
  }

  void run(Vertex start) {
    start_ = start;
    path_.assign(1, start);
    flags_.clear();
    arcs_.clear();
    on_path_[static_cast<std::size_t>(start)] = 1;
    extend(start);
    on_path_[static_cast<std::size_t>(start)] = 0;
  }

  bool full() const { return out_.truncated; }

 private:
  void extend(Vertex v) {
    for (const Incidence& inc : adjacency_[static_cast<std::size_t>(v)]) {
      if (out_.truncated) return;
      if (inc.neighbour == start_) {
        // Close the cycle; the first edge must differ from the closing one and
        // have the smaller index so each cycle is emitted in one direction.
        if (!arcs_.empty() && inc.arc != arcs_.front() && arcs_.front() < inc.arc) emit(inc);
        continue;
      }
      if (inc.neighbour < start_ || on_path_[static_cast<std::size_t>(inc.neighbour)]) continue;
      path_.push_back(inc.neighbour);
      flags_.push_back(inc.forward);
      arcs_.push_back(inc.arc);
      on_path_[static_cast<std::size_t>(inc.neighbour)] = 1;
      extend(inc.neighbour);
      on_path_[static_cast<std::size_t>(inc.neighbour)] = 0;
      path_.pop_back();
      flags_.pop_back();
      arcs_.pop_back();
    }
  }

  void emit(const Incidence& closing) {
    if (out_.cycles.size() >= max_cycles_) {
      out_.truncated = true;
      return;
    }
    CycleWithOrientation c{path_, flags_};
    c.forward.push_back(closing.forward);
    out_.cycles.push_back(std::move(c));
  }

  CycleEnumeration& out_;
  std::size_t max_cycles_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<char> on_path_;
  Vertex start_{0};
  std::vector<Vertex> path_;
  std::vector<bool> flags_;
  std::vector<std::size_t> arcs_;
};

}  // namespace

CycleEnumeration enumerate_cycles(const Digraph& g, std::size_t max_cycles) {
  CycleEnumeration out;
  CycleSearch search(g, max_cycles, out);
  for (Vertex s = 1; s <= g.vertex_count() && !search.full(); ++s) search.run(s);
  return out;
}

}  // namespace dqgraph
