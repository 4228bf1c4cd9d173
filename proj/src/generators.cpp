#include "trifree/generators.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "trifree/catalog.hpp"
#include "trifree/error.hpp"
#include "trifree/oracle.hpp"

namespace trifree {

std::string_view gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::kGrid: return "grid";
    case GenKind::kQuad: return "quad";
    case GenKind::kAugmented: return "augmented";
    case GenKind::kDual: return "dual";
  }
  return "unknown";
}

std::optional<GenKind> parse_gen_kind(std::string_view name) {
  for (GenKind k : {GenKind::kGrid, GenKind::kQuad, GenKind::kAugmented, GenKind::kDual}) {
    if (gen_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// Unbounded adjacency and common-neighbor tests.
bool adjacent_any(const PlaneGraph& g, VertexId a, VertexId b) {
  if (g.degree(a) > g.degree(b)) std::swap(a, b);
  const auto n = g.neighbors(a);
  return std::find(n.begin(), n.end(), b) != n.end();
}

bool within_two(const PlaneGraph& g, VertexId a, VertexId b) {
  if (a == b || adjacent_any(g, a, b)) return true;
  auto na = g.neighbors(a);
  std::sort(na.begin(), na.end());
  for (VertexId w : g.neighbors(b)) {
    if (std::binary_search(na.begin(), na.end(), w)) return true;
  }
  return false;
}

DartId sigma_pow(const PlaneGraph& g, DartId d, std::size_t t) {
  for (std::size_t i = 0; i < t; ++i) d = g.face_next(d);
  return d;
}

// Face length is at least len when no walk prefix of length < len returns to d.
bool face_at_least(const PlaneGraph& g, DartId d, std::size_t len) {
  DartId e = d;
  for (std::size_t i = 1; i < len; ++i) {
    e = g.face_next(e);
    if (e == d) return false;
  }
  return true;
}

DartId random_dart(const PlaneGraph& g, Rng& rng) {
  while (true) {
    const auto d = static_cast<DartId>(uniform(rng, g.dart_capacity()));
    if (g.dart_alive(d)) return d;
  }
}

bool try_chord(PlaneGraph& g, DartId d, std::size_t t) {
  if (!face_at_least(g, d, t + 3)) return false;
  const DartId e = sigma_pow(g, d, t);
  const VertexId a = g.origin(d), c = g.origin(e);
  if (within_two(g, a, c)) return false;
  g.add_edge(d, e);
  return true;
}

PlaneGraph grow_quad(std::size_t size, Rng& rng) {
  PlaneGraph g = PlaneGraph::build(cycle_spec(4));
  while (g.num_vertices() < size) {
    const DartId d = random_dart(g, rng);
    const std::size_t op = uniform(rng, 100);
    if (op < 45) {
      // degree-2 vertex across two corners at walk distance two
      const DartId d2 = sigma_pow(g, d, 2);
      const VertexId a = g.origin(d), c = g.origin(d2);
      if (a == c || adjacent_any(g, a, c)) continue;
      const VertexId z = g.add_vertex();
      const DartId az = g.insert_edge(a, d, z, kNoDart);
      g.insert_edge(c, d2, z, PlaneGraph::twin(az));
    } else if (op < 75 || g.num_vertices() + 1 == size) {
      // two-vertex path parallel to an edge
      const VertexId u = g.origin(d), v = g.head(d);
      const DartId after = g.face_next(d);
      const VertexId p = g.add_vertex();
      const VertexId q = g.add_vertex();
      const DartId up = g.insert_edge(u, d, p, kNoDart);
      const DartId pq = g.insert_edge(p, PlaneGraph::twin(up), q, kNoDart);
      g.insert_edge(v, after, q, PlaneGraph::twin(pq));
    } else {
      try_chord(g, d, uniform(rng, 2) == 0 ? 3 : 5);
    }
  }
  return g;
}

void add_random_chords(PlaneGraph& g, std::size_t attempts, Rng& rng) {
  for (std::size_t i = 0; i < attempts; ++i) {
    const DartId d = random_dart(g, rng);
    try_chord(g, d, 3 + uniform(rng, 3));
  }
}

PlaneGraph make_grid(std::size_t k, double deletion, Rng& rng) {
  PlaneGraph g = PlaneGraph::build(grid_spec(k));
  if (deletion > 0) {
    std::bernoulli_distribution drop(deletion);
    for (DartId d = 0; d < g.dart_capacity(); d += 2) {
      if (drop(rng)) g.remove_edge(d);
    }
  }
  return g;
}

// Dual of a random triangulation with minimum degree five.
PlaneGraph make_dual(std::size_t size, Rng& rng) {
  using Tri = std::array<VertexId, 3>;
  std::vector<Tri> tris;
  for (VertexId i = 0; i < 5; ++i) {
    const VertexId u = 1 + i, u2 = 1 + (i + 1) % 5, l = 6 + i, l2 = 6 + (i + 1) % 5;
    tris.push_back({0, u, u2});
    tris.push_back({u, l, u2});
    tris.push_back({u2, l, l2});
    tris.push_back({11, l2, l});
  }
  VertexId nv = 12;
  auto key = [](VertexId a, VertexId b) { return (std::uint64_t{a} << 32) | b; };

  // consistent orientation by propagation across shared edges
  {
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_edge;
    for (std::size_t t = 0; t < tris.size(); ++t) {
      for (int j = 0; j < 3; ++j) {
        VertexId a = tris[t][j], b = tris[t][(j + 1) % 3];
        by_edge[key(std::min(a, b), std::max(a, b))].push_back(t);
      }
    }
    std::vector<int> done(tris.size(), 0);
    std::vector<std::size_t> stack{0};
    done[0] = 1;
    while (!stack.empty()) {
      const std::size_t t = stack.back();
      stack.pop_back();
      for (int j = 0; j < 3; ++j) {
        const VertexId a = tris[t][j], b = tris[t][(j + 1) % 3];
        for (std::size_t s : by_edge[key(std::min(a, b), std::max(a, b))]) {
          if (done[s]) continue;
          // s must traverse the shared edge as b -> a
          bool has_ab = false;
          for (int i = 0; i < 3; ++i) has_ab = has_ab || (tris[s][i] == a && tris[s][(i + 1) % 3] == b);
          if (has_ab) std::swap(tris[s][0], tris[s][1]);
          done[s] = 1;
          stack.push_back(s);
        }
      }
    }
  }

  while (tris.size() < size) {
    std::unordered_map<std::uint64_t, VertexId> mid;
    auto midpoint = [&](VertexId a, VertexId b) {
      const auto k = key(std::min(a, b), std::max(a, b));
      auto it = mid.find(k);
      if (it != mid.end()) return it->second;
      mid.emplace(k, nv);
      return nv++;
    };
    std::vector<Tri> next;
    next.reserve(tris.size() * 4);
    for (const auto& [a, b, c] : tris) {
      const VertexId ab = midpoint(a, b), bc = midpoint(b, c), ca = midpoint(c, a);
      next.push_back({a, ab, ca});
      next.push_back({ab, b, bc});
      next.push_back({ca, bc, c});
      next.push_back({ab, bc, ca});
    }
    tris.swap(next);
  }

  std::unordered_map<std::uint64_t, std::uint32_t> owner;  // directed edge -> triangle
  std::vector<std::uint32_t> deg(nv, 0);
  for (std::uint32_t t = 0; t < tris.size(); ++t) {
    for (int j = 0; j < 3; ++j) {
      owner[key(tris[t][j], tris[t][(j + 1) % 3])] = t;
      ++deg[tris[t][j]];
    }
  }
  const std::size_t flips = 2 * tris.size();
  for (std::size_t i = 0; i < flips; ++i) {
    const auto t1 = static_cast<std::uint32_t>(uniform(rng, tris.size()));
    const int j = static_cast<int>(uniform(rng, 3));
    const VertexId a = tris[t1][j], b = tris[t1][(j + 1) % 3], c = tris[t1][(j + 2) % 3];
    const std::uint32_t t2 = owner.at(key(b, a));
    VertexId d = kNoVertex;
    for (VertexId w : tris[t2]) {
      if (w != a && w != b) d = w;
    }
    if (deg[a] < 6 || deg[b] < 6 || c == d || owner.contains(key(c, d))) continue;
    owner.erase(key(a, b));
    owner.erase(key(b, a));
    tris[t1] = {c, a, d};
    tris[t2] = {d, b, c};
    for (std::uint32_t t : {t1, t2}) {
      for (int k = 0; k < 3; ++k) owner[key(tris[t][k], tris[t][(k + 1) % 3])] = t;
    }
    --deg[a];
    --deg[b];
    ++deg[c];
    ++deg[d];
  }

  RotationSpec spec(tris.size());
  for (std::uint32_t t = 0; t < tris.size(); ++t) {
    const auto& [p, q, r] = tris[t];
    spec[t] = {owner.at(key(q, p)), owner.at(key(r, q)), owner.at(key(p, r))};
  }
  return PlaneGraph::build(spec);
}

}  // namespace

PlaneGraph generate(const GenSpec& spec) {
  if (spec.size < 1) throw Error(ErrorCode::kInvalidSpec, "size must be at least 1");
  if (!(spec.deletion >= 0.0 && spec.deletion < 1.0)) {
    throw Error(ErrorCode::kInvalidSpec, "deletion probability must lie in [0, 1)");
  }
  Rng rng(spec.seed);
  PlaneGraph g;
  switch (spec.kind) {
    case GenKind::kGrid:
      g = make_grid(spec.size, spec.deletion, rng);
      break;
    case GenKind::kQuad:
      g = grow_quad(spec.size, rng);
      break;
    case GenKind::kAugmented:
      g = grow_quad(spec.size, rng);
      add_random_chords(g, spec.size / 3 + 1, rng);
      break;
    case GenKind::kDual:
      g = make_dual(spec.size, rng);
      break;
  }
  g.validate();
  if (!is_triangle_free(SimpleGraph::from_plane(g))) {
    throw Error(ErrorCode::kInvalidSpec, "generator produced a triangle (kind " +
                                             std::string(gen_kind_name(spec.kind)) + ")");
  }
  return PlaneGraph::build(g.rotation_spec());
}

}  // namespace trifree
