#include "trifree/reducer.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "trifree/error.hpp"

namespace trifree {

namespace {

// Logs edge events into the record and forwards them to the graph's observer.
class DeltaLog final : public MutationObserver {
 public:
  DeltaLog(PlaneGraph& g, ReductionRecord& rec) : g_(g), rec_(rec), inner_(g.observer()) {
    g_.set_observer(this);
  }
  ~DeltaLog() override { g_.set_observer(inner_); }
  DeltaLog(const DeltaLog&) = delete;
  DeltaLog& operator=(const DeltaLog&) = delete;

  void before_edge_removed(const PlaneGraph& g, DartId d) override {
    if (inner_) inner_->before_edge_removed(g, d);
  }
  void after_edge_removed(const PlaneGraph& g, VertexId u, VertexId v) override {
    rec_.deltas.push_back({false, u, v});
    ++rec_.edges_deleted;
    if (inner_) inner_->after_edge_removed(g, u, v);
  }
  void before_edge_added(const PlaneGraph& g, VertexId u, VertexId v) override {
    if (inner_) inner_->before_edge_added(g, u, v);
  }
  void after_edge_added(const PlaneGraph& g, DartId d) override {
    rec_.deltas.push_back({true, g.origin(d), g.head(d)});
    ++rec_.edges_added;
    if (inner_) inner_->after_edge_added(g, d);
  }

 private:
  PlaneGraph& g_;
  ReductionRecord& rec_;
  MutationObserver* inner_;
};

bool contains(std::span<const VertexId> set, VertexId v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

// First dart clockwise after x's spoke into the deleted set that survives the
// deletion; kNoDart when x ends up isolated.
DartId corner_after(const PlaneGraph& g, VertexId x, std::span<const VertexId> deleted) {
  DartId spoke = kNoDart;
  for (DartId d : g.darts_of(x)) {
    if (contains(deleted, g.head(d))) {
      spoke = d;
      break;
    }
  }
  if (spoke == kNoDart) {
    throw Error(ErrorCode::kEmbeddingCorruption,
                "vertex " + std::to_string(x) + " has no edge into the reduced configuration");
  }
  DartId d = g.next(spoke);
  while (d != spoke) {
    if (!contains(deleted, g.head(d))) return d;
    d = g.next(d);
  }
  return kNoDart;
}

void delete_vertices(PlaneGraph& g, std::span<const VertexId> vs, ReductionRecord& rec) {
  for (VertexId v : vs) rec.removed.push_back({v, g.neighbors(v)});
  for (VertexId v : vs) {
    while (g.degree(v) > 0) g.remove_edge(g.any_dart(v));
    g.remove_isolated_vertex(v);
  }
}

std::pair<VertexId, VertexId> pick_survivor(const PlaneGraph& g, VertexId a, VertexId b,
                                            const ConstraintCycle* c) {
  const bool a_on = c && c->contains(a);
  const bool b_on = c && c->contains(b);
  if (a_on != b_on) return b_on ? std::pair{b, a} : std::pair{a, b};
  if (g.degree(b) > g.degree(a)) return {b, a};
  return {a, b};
}

void merge(PlaneGraph& g, VertexId p, DartId dp, VertexId q, DartId dq, const ConstraintCycle* c,
           ReductionRecord& rec) {
  auto [a, b] = pick_survivor(g, p, q, c);
  const DartId d_a = a == p ? dp : dq;
  const DartId d_b = a == p ? dq : dp;
  g.merge_vertices(a, b, d_a, d_b);
  rec.identified.emplace_back(a, b);
}

DartId dart_on_face(const PlaneGraph& g, DartId face, VertexId v, std::size_t len) {
  for (DartId d : g.short_face(face, len)) {
    if (g.origin(d) == v) return d;
  }
  throw Error(ErrorCode::kNotSameFace, "vertex " + std::to_string(v) + " is not on the face");
}

void check_local_triangles(const PlaneGraph& g, const ReductionRecord& rec) {
  for (const auto& e : rec.deltas) {
    if (!e.added || !g.alive(e.u) || !g.alive(e.v)) continue;
    auto nu = g.neighbors(e.u);
    auto nv = g.neighbors(e.v);
    std::sort(nu.begin(), nu.end());
    for (VertexId w : nv) {
      if (std::binary_search(nu.begin(), nu.end(), w)) {
        throw Error(ErrorCode::kTriangleFound,
                    "reduction produced triangle " + std::to_string(e.u) + "," +
                        std::to_string(e.v) + "," + std::to_string(w));
      }
    }
  }
}

}  // namespace

ReductionRecord reduce(PlaneGraph& g, const Multigram& m, const ReduceOptions& options) {
  static const ConstraintCycle kNoCycle;
  const ConstraintCycle& cyc = options.constraint ? *options.constraint : kNoCycle;
  if (options.check_secure && !is_secure(g, m, cyc)) {
    throw Error(ErrorCode::kInsecureMultigram,
                std::string(kind_name(m.kind)) + " at pivot " + std::to_string(m.pivot()));
  }

  ReductionRecord rec;
  rec.kind = m.kind;
  rec.gram.assign(m.vertices().begin(), m.vertices().end());
  rec.aux.assign(m.aux().begin(), m.aux().end());
  {
    DeltaLog log(g, rec);
    const auto& v = m.v;
    switch (m.kind) {
      case Kind::kMonogram:
        delete_vertices(g, std::span<const VertexId>(v.data(), 1), rec);
        break;

      case Kind::kOctagram:
        delete_vertices(g, std::span<const VertexId>(v.data(), 4), rec);
        break;

      case Kind::kTetragram:
      case Kind::kHexagram: {
        const std::size_t k = m.size;
        const DartId d1 = dart_on_face(g, m.face, v[0], k);
        const DartId d3 = dart_on_face(g, m.face, v[2], k);
        merge(g, v[0], d1, v[2], d3, options.constraint, rec);
        break;
      }

      case Kind::kDecagram: {
        const std::span<const VertexId> cyc5(v.data(), 5);
        const VertexId x1 = m.x[0], x3 = m.x[2];
        const DartId c1 = corner_after(g, x1, cyc5);
        const DartId c3 = corner_after(g, x3, cyc5);
        delete_vertices(g, cyc5, rec);
        g.insert_edge(x1, c1, x3, c3);
        rec.added_edges.emplace_back(x1, x3);
        break;
      }

      case Kind::kPentagram: {
        const std::span<const VertexId> inner(v.data(), 4);
        const VertexId v5 = v[4];
        const VertexId x2 = m.x[1], x3 = m.x[2], x4 = m.x[3];
        const DartId c_x2 = corner_after(g, x2, inner);
        const DartId c_v5 = corner_after(g, v5, inner);
        const DartId c_x3 = corner_after(g, x3, inner);
        const DartId c_x4 = corner_after(g, x4, inner);
        delete_vertices(g, inner, rec);
        merge(g, x2, c_x2, v5, c_v5, options.constraint, rec);
        merge(g, x3, c_x3, x4, c_x4, options.constraint, rec);
        break;
      }
    }
  }
  if (options.validate) {
    g.validate();
    check_local_triangles(g, rec);
  }
  return rec;
}

namespace {

bool fits(const Coloring& col, const RemovedVertex& r, Color c) {
  for (VertexId w : r.neighbors) {
    if (col[w] == c) return false;
  }
  return true;
}

Color greedy(const Coloring& col, const RemovedVertex& r) {
  for (Color c = 0; c < 3; ++c) {
    if (fits(col, r, c)) return c;
  }
  throw Error(ErrorCode::kExtensionFailure,
              "no free color for vertex " + std::to_string(r.id));
}

// Pentagram case split: c1 = color(x1), c2 = color(x2) = color(v5),
// c3 = color(x3) = color(x4).
void extend_pentagram(const ReductionRecord& rec, Coloring& col) {
  const Color c1 = col[rec.aux[0]];
  const Color c2 = col[rec.aux[1]];
  const Color c3 = col[rec.aux[2]];
  const auto& r = rec.removed;  // v1..v4 in order
  for (const auto& rv : r) col[rv.id] = kNoColor;
  if (c1 == c2) {
    for (int i = 3; i >= 0; --i) col[r[i].id] = greedy(col, r[i]);
  } else if (c2 == c3) {
    for (int i = 0; i < 4; ++i) col[r[i].id] = greedy(col, r[i]);
  } else {
    col[r[1].id] = c1;
    col[r[2].id] = c2;
    col[r[0].id] = static_cast<Color>(3 - c1 - c2);
    col[r[3].id] = static_cast<Color>(3 - c2 - c3);
  }
  for (const auto& rv : r) {
    if (!fits(col, rv, col[rv.id])) {
      throw Error(ErrorCode::kExtensionFailure,
                  "pentagram extension clashes at vertex " + std::to_string(rv.id));
    }
  }
}

void extend_exhaustive(const ReductionRecord& rec, Coloring& col) {
  const auto& r = rec.removed;
  const std::size_t k = r.size();
  std::array<Color, 8> pick{};
  // depth-first over colors of r[0..k)
  std::size_t i = 0;
  for (std::size_t j = 0; j < k; ++j) col[r[j].id] = kNoColor;
  pick[0] = -1;
  while (true) {
    ++pick[i];
    if (pick[i] == 3) {
      col[r[i].id] = kNoColor;
      if (i == 0) break;
      --i;
      continue;
    }
    if (!fits(col, r[i], pick[i])) continue;
    col[r[i].id] = pick[i];
    if (++i == k) return;
    pick[i] = -1;
  }
  throw Error(ErrorCode::kExtensionFailure,
              std::string("no extension for ") + std::string(kind_name(rec.kind)) + " at " +
                  std::to_string(rec.gram.empty() ? kNoVertex : rec.gram[0]));
}

}  // namespace

void extend_in_place(const ReductionRecord& record, Coloring& coloring) {
  VertexId top = 0;
  for (const auto& r : record.removed) {
    top = std::max(top, r.id);
    for (VertexId w : r.neighbors) top = std::max(top, w);
  }
  for (const auto& [s, a] : record.identified) top = std::max({top, s, a});
  if (coloring.size() <= top) coloring.resize(top + 1, kNoColor);

  for (auto it = record.identified.rbegin(); it != record.identified.rend(); ++it) {
    coloring[it->second] = coloring[it->first];
  }
  if (record.removed.empty()) return;
  if (record.kind == Kind::kPentagram && record.removed.size() == 4 && record.aux.size() == 4) {
    extend_pentagram(record, coloring);
  } else {
    extend_exhaustive(record, coloring);
  }
}

Coloring extend(const ReductionRecord& record, Coloring coloring) {
  extend_in_place(record, coloring);
  return coloring;
}

Coloring unwind(std::span<const ReductionRecord> records, Coloring base) {
  for (auto it = records.rbegin(); it != records.rend(); ++it) extend_in_place(*it, base);
  return base;
}

}  // namespace trifree
