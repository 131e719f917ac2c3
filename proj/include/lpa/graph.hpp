#pragma once

// Finite directed graphs E = (E0, E1, r, s) with named vertices and edges,
// plus the path-like value types built on top of them.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpa/error.hpp"

namespace lpa {

enum class VertexId : std::uint32_t {};
enum class EdgeId : std::uint32_t {};

constexpr std::size_t index(VertexId v) noexcept { return static_cast<std::size_t>(v); }
constexpr std::size_t index(EdgeId e) noexcept { return static_cast<std::size_t>(e); }
constexpr VertexId vertex_id(std::size_t i) noexcept { return static_cast<VertexId>(i); }
constexpr EdgeId edge_id(std::size_t i) noexcept { return static_cast<EdgeId>(i); }

struct EdgeRecord {
  std::string name;
  VertexId source;
  VertexId range;
};

// Immutable after construction. Declaration order of vertices and edges is
// preserved and is significant: the designated edge of a vertex is the last
// edge it emits in declaration order.
class Graph {
 public:
  Graph(std::string name, std::vector<std::string> vertices, std::vector<EdgeRecord> edges)
      : name_(std::move(name)), vertex_names_(std::move(vertices)), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < vertex_names_.size(); ++i) {
      if (!vertex_index_.emplace(vertex_names_[i], vertex_id(i)).second) {
        throw GraphError("duplicate vertex identifier '" + vertex_names_[i] + "'");
      }
    }
    out_.resize(vertex_names_.size());
    in_.resize(vertex_names_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      auto const& rec = edges_[i];
      if (index(rec.source) >= vertex_names_.size() || index(rec.range) >= vertex_names_.size()) {
        throw GraphError("edge '" + rec.name + "' has an undeclared endpoint");
      }
      if (vertex_index_.contains(rec.name)) {
        throw GraphError("identifier '" + rec.name + "' names both a vertex and an edge");
      }
      if (!edge_index_.emplace(rec.name, edge_id(i)).second) {
        throw GraphError("duplicate edge identifier '" + rec.name + "'");
      }
      out_[index(rec.source)].push_back(edge_id(i));
      in_[index(rec.range)].push_back(edge_id(i));
    }
  }

  std::string const& name() const noexcept { return name_; }
  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::string const& vertex_name(VertexId v) const { return vertex_names_.at(index(v)); }
  std::string const& edge_name(EdgeId e) const { return edges_.at(index(e)).name; }
  VertexId source(EdgeId e) const { return edges_.at(index(e)).source; }
  VertexId range(EdgeId e) const { return edges_.at(index(e)).range; }
  EdgeRecord const& edge_record(EdgeId e) const { return edges_.at(index(e)); }

  std::span<EdgeId const> out_edges(VertexId v) const { return out_.at(index(v)); }
  std::span<EdgeId const> in_edges(VertexId v) const { return in_.at(index(v)); }
  std::size_t out_degree(VertexId v) const { return out_.at(index(v)).size(); }
  bool is_sink(VertexId v) const { return out_.at(index(v)).empty(); }

  std::optional<EdgeId> designated_edge(VertexId v) const {
    auto const& out = out_.at(index(v));
    if (out.empty()) return std::nullopt;
    return out.back();
  }
  bool is_designated(EdgeId e) const { return designated_edge(source(e)) == e; }

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> result(vertex_count());
    for (std::size_t i = 0; i < result.size(); ++i) result[i] = vertex_id(i);
    return result;
  }
  std::vector<EdgeId> edges() const {
    std::vector<EdgeId> result(edge_count());
    for (std::size_t i = 0; i < result.size(); ++i) result[i] = edge_id(i);
    return result;
  }

  std::optional<VertexId> find_vertex(std::string_view name) const {
    auto it = vertex_index_.find(std::string(name));
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<EdgeId> find_edge(std::string_view name) const {
    auto it = edge_index_.find(std::string(name));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }
  VertexId vertex(std::string_view name) const {
    if (auto v = find_vertex(name)) return *v;
    throw GraphError("unknown vertex '" + std::string(name) + "' in graph " + name_);
  }
  EdgeId edge(std::string_view name) const {
    if (auto e = find_edge(name)) return *e;
    throw GraphError("unknown edge '" + std::string(name) + "' in graph " + name_);
  }

 private:
  std::string name_;
  std::vector<std::string> vertex_names_;
  std::vector<EdgeRecord> edges_;
  std::map<std::string, VertexId, std::less<>> vertex_index_;
  std::map<std::string, EdgeId, std::less<>> edge_index_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

// Incremental construction by name.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::string name) : name_(std::move(name)) {}

  GraphBuilder& vertex(std::string name) {
    if (!ids_.emplace(name, vertex_id(vertices_.size())).second) {
      throw GraphError("duplicate vertex identifier '" + name + "'");
    }
    vertices_.push_back(std::move(name));
    return *this;
  }

  GraphBuilder& edge(std::string name, std::string_view source, std::string_view range) {
    edges_.push_back({std::move(name), lookup(source), lookup(range)});
    return *this;
  }

  bool has_vertex(std::string_view name) const { return ids_.contains(std::string(name)); }

  Graph build() const { return Graph(name_, vertices_, edges_); }

 private:
  VertexId lookup(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) throw GraphError("undeclared endpoint '" + std::string(name) + "'");
    return it->second;
  }

  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<EdgeRecord> edges_;
  std::map<std::string, VertexId> ids_;
};

// A path e1...en with r(ei) = s(ei+1), or the trivial path at a vertex.
// Ordered by length, then source, then edge sequence.
class Path {
 public:
  static Path trivial(VertexId v) { return Path(v, v, {}); }

  static Path of(Graph const& g, std::vector<EdgeId> edges) {
    if (edges.empty()) throw PreconditionError("a path needs at least one edge or an explicit vertex");
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      if (g.range(edges[i]) != g.source(edges[i + 1])) {
        throw PreconditionError("edges " + g.edge_name(edges[i]) + " and " + g.edge_name(edges[i + 1]) +
                                " do not compose");
      }
    }
    VertexId s = g.source(edges.front());
    VertexId r = g.range(edges.back());
    return Path(s, r, std::move(edges));
  }

  static Path edge(Graph const& g, EdgeId e) { return Path(g.source(e), g.range(e), {e}); }

  VertexId source() const noexcept { return source_; }
  VertexId range() const noexcept { return range_; }
  std::size_t length() const noexcept { return edges_.size(); }
  bool is_trivial() const noexcept { return edges_.empty(); }
  std::span<EdgeId const> edges() const noexcept { return edges_; }
  EdgeId last_edge() const { return edges_.back(); }
  EdgeId first_edge() const { return edges_.front(); }

  Path appended(Graph const& g, EdgeId e) const {
    if (g.source(e) != range_) throw PreconditionError("edge " + g.edge_name(e) + " does not extend the path");
    Path result = *this;
    result.edges_.push_back(e);
    result.range_ = g.range(e);
    return result;
  }

  Path without_last(Graph const& g) const {
    Path result = *this;
    result.range_ = g.source(result.edges_.back());
    result.edges_.pop_back();
    return result;
  }

  // this * tail; requires range() == tail.source().
  Path concat(Path const& tail) const {
    if (range_ != tail.source_) throw PreconditionError("paths do not compose");
    Path result = *this;
    result.edges_.insert(result.edges_.end(), tail.edges_.begin(), tail.edges_.end());
    result.range_ = tail.range_;
    return result;
  }

  // If this = prefix * t, return t.
  std::optional<Path> strip_prefix(Graph const& g, Path const& prefix) const {
    if (prefix.source_ != source_ || prefix.length() > length()) return std::nullopt;
    if (!std::equal(prefix.edges_.begin(), prefix.edges_.end(), edges_.begin())) return std::nullopt;
    std::vector<EdgeId> rest(edges_.begin() + static_cast<std::ptrdiff_t>(prefix.length()), edges_.end());
    if (rest.empty()) return trivial(range_);
    return of(g, std::move(rest));
  }

  // mu^0: the vertices visited, in order, without repetition.
  std::vector<VertexId> vertex_set(Graph const& g) const {
    std::vector<VertexId> result{source_};
    for (EdgeId e : edges_) {
      VertexId r = g.range(e);
      if (std::find(result.begin(), result.end(), r) == result.end()) result.push_back(r);
    }
    return result;
  }

  friend bool operator==(Path const&, Path const&) = default;
  friend std::strong_ordering operator<=>(Path const& a, Path const& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    if (auto c = a.source_ <=> b.source_; c != 0) return c;
    return a.edges_ <=> b.edges_;
  }

 private:
  Path(VertexId s, VertexId r, std::vector<EdgeId> edges) : source_(s), range_(r), edges_(std::move(edges)) {}

  VertexId source_;
  VertexId range_;
  std::vector<EdgeId> edges_;
};

// A closed path whose edges have pairwise distinct sources.
class Cycle {
 public:
  static Cycle of(Graph const& g, std::vector<EdgeId> edges) {
    Path p = Path::of(g, std::move(edges));
    if (p.source() != p.range()) throw PreconditionError("path is not closed");
    std::vector<VertexId> sources;
    for (EdgeId e : p.edges()) sources.push_back(g.source(e));
    std::sort(sources.begin(), sources.end());
    if (std::adjacent_find(sources.begin(), sources.end()) != sources.end()) {
      throw PreconditionError("path repeats a source vertex, not a cycle");
    }
    return Cycle(std::move(p));
  }

  Path const& path() const noexcept { return path_; }
  VertexId base() const noexcept { return path_.source(); }
  std::span<EdgeId const> edges() const noexcept { return path_.edges(); }

  friend bool operator==(Cycle const&, Cycle const&) = default;
  friend auto operator<=>(Cycle const& a, Cycle const& b) { return a.path_ <=> b.path_; }

 private:
  explicit Cycle(Path p) : path_(std::move(p)) {}
  Path path_;
};

struct WalkStep {
  EdgeId edge;
  bool reversed = false;  // traversed as the ghost edge e*, from r(e) to s(e)

  friend bool operator==(WalkStep const&, WalkStep const&) = default;
};

// A path in the underlying undirected graph.
class Walk {
 public:
  static Walk of(Graph const& g, VertexId start, std::vector<WalkStep> steps) {
    VertexId at = start;
    for (auto const& step : steps) {
      VertexId from = step.reversed ? g.range(step.edge) : g.source(step.edge);
      if (from != at) throw PreconditionError("walk step " + g.edge_name(step.edge) + " does not compose");
      at = step.reversed ? g.source(step.edge) : g.range(step.edge);
    }
    return Walk(start, at, std::move(steps));
  }

  VertexId start() const noexcept { return start_; }
  VertexId end() const noexcept { return end_; }
  std::span<WalkStep const> steps() const noexcept { return steps_; }

 private:
  Walk(VertexId s, VertexId e, std::vector<WalkStep> steps) : start_(s), end_(e), steps_(std::move(steps)) {}
  VertexId start_;
  VertexId end_;
  std::vector<WalkStep> steps_;
};

// Subset of E0, stored as a membership bitmap over the graph's vertices.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, false) {}
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members) : bits_(universe, false) {
    for (VertexId v : members) insert(v);
  }

  static VertexSet all(std::size_t universe) {
    VertexSet s(universe);
    s.bits_.assign(universe, true);
    return s;
  }
  static VertexSet all(Graph const& g) { return all(g.vertex_count()); }

  static VertexSet from_names(Graph const& g, std::vector<std::string> const& names) {
    VertexSet s(g.vertex_count());
    for (auto const& n : names) s.insert(g.vertex(n));
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  bool contains(VertexId v) const { return bits_.at(index(v)); }
  void insert(VertexId v) { bits_.at(index(v)) = true; }
  void erase(VertexId v) { bits_.at(index(v)) = false; }
  std::size_t size() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }
  bool empty() const { return size() == 0; }

  std::vector<VertexId> members() const {
    std::vector<VertexId> result;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i]) result.push_back(vertex_id(i));
    }
    return result;
  }

  std::vector<std::string> names(Graph const& g) const {
    std::vector<std::string> result;
    for (VertexId v : members()) result.push_back(g.vertex_name(v));
    return result;
  }

  bool is_subset_of(VertexSet const& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] && !other.bits_.at(i)) return false;
    }
    return true;
  }

  VertexSet complement() const {
    VertexSet s = *this;
    s.bits_.flip();
    return s;
  }

  friend bool operator==(VertexSet const&, VertexSet const&) = default;

 private:
  std::vector<bool> bits_;
};

inline void require_same_universe(Graph const& g, VertexSet const& x) {
  if (x.universe() != g.vertex_count()) {
    throw PreconditionError("vertex set does not belong to graph " + g.name());
  }
}

}  // namespace lpa
