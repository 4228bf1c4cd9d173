#include "trifree/multigram.hpp"

#include <algorithm>

namespace trifree {

namespace {

bool in(std::span<const VertexId> set, VertexId v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

// Adjacency where a pair of big vertices counts as non-adjacent.
bool adjacent_lenient(const PlaneGraph& g, VertexId a, VertexId b) {
  if (g.is_big(a) && g.is_big(b)) return false;
  return g.adjacent(a, b);
}

// Path s-a-b-t with a, b outside excluded and distinct from s, t.  s and t are
// small; at most one of a, b may be big.
bool has_path3(const PlaneGraph& g, VertexId s, VertexId t, std::span<const VertexId> excluded) {
  for (VertexId a : g.neighbors(s)) {
    if (a == t || in(excluded, a)) continue;
    if (g.is_small(a)) {
      for (VertexId b : g.neighbors(a)) {
        if (b == s || b == t || in(excluded, b)) continue;
        if (g.adjacent(b, t)) return true;
      }
    } else {
      for (VertexId b : g.neighbors(t)) {
        if (b == s || b == a || in(excluded, b) || g.is_big(b)) continue;
        if (g.adjacent(a, b)) return true;
      }
    }
  }
  return false;
}

std::vector<VertexId> common_neighbors(const PlaneGraph& g, VertexId s, VertexId t,
                                       std::span<const VertexId> excluded) {
  std::vector<VertexId> out;
  for (VertexId a : g.neighbors(s)) {
    if (a == t || in(excluded, a)) continue;
    if (adjacent_lenient(g, a, t)) out.push_back(a);
  }
  return out;
}

bool no_forbidden_neighbor(const PlaneGraph& g, VertexId v, const ConstraintCycle& c) {
  for (VertexId w : g.neighbors(v)) {
    if (!admissible(g, w, c)) return false;
  }
  return true;
}

DartId dart_to(const PlaneGraph& g, VertexId u, VertexId v) {
  for (DartId d : g.darts_of(u)) {
    if (g.head(d) == v) return d;
  }
  return kNoDart;
}

// Vertices of the face walk of d when it is a cycle of exactly len vertices.
std::vector<VertexId> facial_cycle(const PlaneGraph& g, DartId d, std::size_t len) {
  auto walk = g.short_face(d, len);
  if (walk.size() != len) return {};
  std::vector<VertexId> verts;
  for (DartId e : walk) {
    VertexId o = g.origin(e);
    if (in(verts, o)) return {};
    verts.push_back(o);
  }
  return verts;
}

bool tetragram_safe(const PlaneGraph& g, const Multigram& m) {
  const VertexId v1 = m.v[0], v2 = m.v[1], v3 = m.v[2], v4 = m.v[3];
  if (g.adjacent(v1, v3)) return false;
  for (VertexId a : g.neighbors(v1)) {
    if (a == v2 || a == v4) continue;
    if (adjacent_lenient(g, a, v3)) return false;
    if (g.is_small(a)) {
      for (VertexId b : g.neighbors(a)) {
        if (b == v1 || b == v3) continue;
        if (adjacent_lenient(g, b, v3)) return false;
      }
    } else if (g.is_small(v3)) {
      for (VertexId b : g.neighbors(v3)) {
        if (b == v2 || b == v4 || b == a || g.is_big(b)) continue;
        if (g.adjacent(a, b)) return false;
      }
    }
  }
  return true;
}

bool hexagram_safe(const PlaneGraph& g, const Multigram& m) {
  const VertexId v1 = m.v[0], v2 = m.v[1], v3 = m.v[2];
  if (g.adjacent(v1, v3)) return false;
  for (VertexId a : g.neighbors(v1)) {
    if (a == v2) continue;
    if (adjacent_lenient(g, a, v3)) return false;
    if (g.is_small(a)) {
      for (VertexId b : g.neighbors(a)) {
        if (b == v1 || b == v3) continue;
        if (adjacent_lenient(g, b, v3)) return false;
      }
    } else if (g.is_small(v3)) {
      for (VertexId b : g.neighbors(v3)) {
        if (b == v1 || b == a || g.is_big(b)) continue;
        if (g.adjacent(a, b)) return false;
      }
    }
  }
  return true;
}

bool pentagram_safe(const PlaneGraph& g, const Multigram& m) {
  const std::span<const VertexId> inner(m.v.data(), 4);
  const VertexId v3 = m.v[2], v4 = m.v[3], v5 = m.v[4];
  const VertexId x2 = m.x[1], x3 = m.x[2], x4 = m.x[3];
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (m.x[i] == m.x[j] || adjacent_lenient(g, m.x[i], m.x[j])) return false;
    }
  }
  if (x2 == v5 || g.adjacent(x2, v5)) return false;
  if (!common_neighbors(g, x2, v5, inner).empty()) return false;
  if (has_path3(g, x2, v5, inner)) return false;

  if (has_path3(g, x3, x4, inner)) return false;
  const auto ys = common_neighbors(g, x3, x4, inner);
  if (ys.empty()) return true;
  if (ys.size() > 1) return false;
  const DartId e = dart_to(g, v3, v4);
  for (DartId d : {e, PlaneGraph::twin(e)}) {
    auto verts = facial_cycle(g, d, 5);
    if (verts.empty()) continue;
    std::sort(verts.begin(), verts.end());
    std::array<VertexId, 5> want{x3, v3, v4, x4, ys[0]};
    std::sort(want.begin(), want.end());
    if (std::equal(verts.begin(), verts.end(), want.begin())) return true;
  }
  return false;
}

bool decagram_safe(const PlaneGraph& g, const Multigram& m) {
  const VertexId x1 = m.x[0], x3 = m.x[2];
  return x1 != x3 && !g.distance_at_most_two(x1, x3);
}

void push_unique(std::vector<Multigram>& out, const Multigram& m) {
  for (const auto& o : out) {
    if (o.same_configuration(m)) return;
  }
  out.push_back(m);
}

void add_shapes(const PlaneGraph& g, std::span<const VertexId> cyc, DartId face,
                std::vector<Multigram>& out) {
  Multigram m;
  m.size = static_cast<std::uint8_t>(cyc.size());
  std::copy(cyc.begin(), cyc.end(), m.v.begin());
  m.face = face;
  const std::size_t k = cyc.size();
  auto deg3 = [&](VertexId u) { return g.degree(u) == 3; };

  if (k == 4 || k == 6) {
    if (deg3(cyc[0])) {
      m.x[0] = third_neighbor(g, cyc[0], cyc[1], cyc[k - 1]);
      m.num_aux = 1;
    }
    m.kind = k == 4 ? Kind::kTetragram : Kind::kHexagram;
    push_unique(out, m);
    if (k == 4 && std::all_of(cyc.begin(), cyc.end(), deg3)) {
      m.kind = Kind::kOctagram;
      push_unique(out, m);
    }
    return;
  }
  // k == 5
  for (int i = 0; i < 4; ++i) {
    if (!deg3(cyc[i])) return;
  }
  for (int i = 0; i < 4; ++i) {
    m.x[i] = third_neighbor(g, cyc[i], cyc[(i + 4) % 5], cyc[i + 1]);
  }
  m.num_aux = 4;
  m.kind = Kind::kPentagram;
  push_unique(out, m);
  if (deg3(cyc[4])) {
    m.kind = Kind::kDecagram;
    push_unique(out, m);
  }
}

}  // namespace

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::kMonogram: return "monogram";
    case Kind::kTetragram: return "tetragram";
    case Kind::kOctagram: return "octagram";
    case Kind::kDecagram: return "decagram";
    case Kind::kPentagram: return "pentagram";
    case Kind::kHexagram: return "hexagram";
  }
  return "unknown";
}

bool Multigram::same_configuration(const Multigram& o) const {
  return kind == o.kind && size == o.size && std::equal(v.begin(), v.begin() + size, o.v.begin());
}

bool ConstraintCycle::contains(VertexId v) const {
  return std::find(cycle_.begin(), cycle_.end(), v) != cycle_.end();
}

bool admissible(const PlaneGraph& g, VertexId v, const ConstraintCycle& c) {
  return g.is_small(v) && !c.contains(v);
}

VertexId third_neighbor(const PlaneGraph& g, VertexId v, VertexId a, VertexId b) {
  if (g.degree(v) != 3) return kNoVertex;
  for (VertexId w : g.neighbors(v)) {
    if (w != a && w != b) return w;
  }
  return kNoVertex;
}

std::vector<Multigram> candidates_at(const PlaneGraph& g, VertexId v) {
  std::vector<Multigram> out;
  const std::size_t deg = g.degree(v);
  if (deg <= 2) {
    Multigram m;
    m.kind = Kind::kMonogram;
    m.size = 1;
    m.v[0] = v;
    out.push_back(m);
  }
  if (deg > 3) return out;
  for (DartId d : g.darts_of(v)) {
    auto walk = g.short_face(d, 6);
    if (walk.size() < 4) continue;
    std::array<VertexId, 6> cyc{};
    const std::size_t k = walk.size();
    bool distinct = true;
    for (std::size_t i = 0; i < k && distinct; ++i) {
      cyc[i] = g.origin(walk[i]);
      for (std::size_t j = 0; j < i; ++j) distinct = distinct && cyc[j] != cyc[i];
    }
    if (!distinct) continue;
    add_shapes(g, std::span<const VertexId>(cyc.data(), k), d, out);
    std::array<VertexId, 6> rev{};
    rev[0] = cyc[0];
    for (std::size_t i = 1; i < k; ++i) rev[i] = cyc[k - i];
    add_shapes(g, std::span<const VertexId>(rev.data(), k), d, out);
  }
  return out;
}

bool is_safe(const PlaneGraph& g, const Multigram& m) {
  switch (m.kind) {
    case Kind::kMonogram:
    case Kind::kOctagram:
      return true;
    case Kind::kTetragram: return tetragram_safe(g, m);
    case Kind::kHexagram: return hexagram_safe(g, m);
    case Kind::kPentagram: return pentagram_safe(g, m);
    case Kind::kDecagram: return decagram_safe(g, m);
  }
  return false;
}

bool is_secure(const PlaneGraph& g, const Multigram& m, const ConstraintCycle& c) {
  auto adm = [&](VertexId u) { return admissible(g, u, c); };
  const VertexId v1 = m.v[0];
  switch (m.kind) {
    case Kind::kMonogram:
      return g.degree(v1) <= 2 && !c.contains(v1);

    case Kind::kTetragram: {
      if (!adm(v1) || g.degree(v1) != 3 || m.num_aux == 0) return false;
      const VertexId x = m.x[0];
      if (!adm(x)) return false;
      if (!adm(m.v[2])) {
        const DartId e = dart_to(g, v1, x);
        std::vector<VertexId> four;
        for (DartId d : {e, PlaneGraph::twin(e)}) {
          auto verts = facial_cycle(g, d, 4);
          four.insert(four.end(), verts.begin(), verts.end());
        }
        for (VertexId w : g.neighbors(x)) {
          if (!adm(w) && !in(four, w)) return false;
        }
      }
      return tetragram_safe(g, m);
    }

    case Kind::kOctagram:
      for (VertexId u : m.vertices()) {
        if (g.degree(u) != 3 || !adm(u)) return false;
      }
      return true;

    case Kind::kDecagram:
      for (VertexId u : m.vertices()) {
        if (!adm(u)) return false;
      }
      if (!adm(m.x[0]) || !adm(m.x[2])) return false;
      return decagram_safe(g, m);

    case Kind::kPentagram:
      for (VertexId u : m.vertices()) {
        if (!adm(u)) return false;
      }
      for (VertexId u : m.aux()) {
        if (!adm(u)) return false;
      }
      if (!no_forbidden_neighbor(g, m.v[4], c) && !no_forbidden_neighbor(g, m.x[1], c)) return false;
      if (!no_forbidden_neighbor(g, m.x[2], c) && !no_forbidden_neighbor(g, m.x[3], c)) return false;
      return pentagram_safe(g, m);

    case Kind::kHexagram:
      if (!adm(v1) || !adm(m.v[2]) || !adm(m.v[5])) return false;
      if (g.degree(v1) != 3 || m.num_aux == 0 || !adm(m.x[0])) return false;
      return hexagram_safe(g, m);
  }
  return false;
}

std::optional<Multigram> find_secure_with_pivot(const PlaneGraph& g, VertexId v,
                                                const ConstraintCycle& c) {
  if (!g.alive(v)) return std::nullopt;
  const std::size_t deg = g.degree(v);
  if (deg <= 2) {
    if (c.contains(v)) return std::nullopt;
    Multigram m;
    m.kind = Kind::kMonogram;
    m.size = 1;
    m.v[0] = v;
    return m;
  }
  if (deg != 3 || c.contains(v)) return std::nullopt;
  const auto cands = candidates_at(g, v);
  for (Kind kind : kKindOrder) {
    for (const auto& m : cands) {
      if (m.kind == kind && is_secure(g, m, c)) return m;
    }
  }
  return std::nullopt;
}

}  // namespace trifree
