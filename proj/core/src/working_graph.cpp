#include "working_graph.hpp"

#include <algorithm>

namespace planar5::detail {

WorkingGraph::WorkingGraph(const EmbeddedGraph& g)
    : table_{g.rotations(), g.alive_flags(), {}}, saved_in_(g.vertex_count(), 0), live_(g.live_vertex_count()) {
  table_.before_change = [this](Vertex v) { save(v); };
}

void WorkingGraph::save(Vertex v) {
  auto& stamp = saved_in_[static_cast<std::size_t>(v)];
  if (stamp == epoch_) return;
  stamp = epoch_;
  journal_.push_back({v, table_.rot[static_cast<std::size_t>(v)], table_.alive[static_cast<std::size_t>(v)]});
}

std::size_t WorkingGraph::begin_level() {
  ++epoch_;
  return journal_.size();
}

void WorkingGraph::rollback(std::size_t mark) {
  while (journal_.size() > mark) {
    auto& s = journal_.back();
    const auto i = static_cast<std::size_t>(s.v);
    if (s.alive && !table_.alive[i]) ++live_;
    if (!s.alive && table_.alive[i]) --live_;
    table_.rot[i] = std::move(s.rotation);
    table_.alive[i] = s.alive;
    journal_.pop_back();
  }
  ++epoch_;
}

void WorkingGraph::triangulate_all(std::vector<Edge>* added) { table_.triangulate_all(added); }

void WorkingGraph::remove_and_fill(std::span<const Vertex> removed) {
  std::vector<Vertex> boundary;
  for (Vertex v : removed) {
    for (Vertex u : table_.rot[static_cast<std::size_t>(v)]) boundary.push_back(u);
  }
  for (Vertex v : removed) {
    table_.remove_vertex(v);
    --live_;
  }
  std::sort(boundary.begin(), boundary.end());
  boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());
  table_.triangulate_around(boundary, nullptr);
}

std::vector<Vertex> WorkingGraph::touched_since(std::size_t mark) const {
  std::vector<Vertex> out;
  for (std::size_t i = mark; i < journal_.size(); ++i) out.push_back(journal_[i].v);
  return out;
}

}  // namespace planar5::detail
