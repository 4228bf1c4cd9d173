#include "trifree/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "trifree/error.hpp"

namespace trifree {

SimpleGraph SimpleGraph::from_plane(const PlaneGraph& g) {
  SimpleGraph s;
  const auto rot = g.rotation_spec();
  s.present.assign(rot.size(), false);
  s.adj.resize(rot.size());
  for (VertexId v = 0; v < rot.size(); ++v) {
    s.present[v] = g.alive(v);
    s.adj[v] = rot[v];
    std::sort(s.adj[v].begin(), s.adj[v].end());
  }
  return s;
}

SimpleGraph SimpleGraph::from_edges(std::size_t n,
                                    const std::vector<std::pair<VertexId, VertexId>>& edges) {
  SimpleGraph s;
  s.present.assign(n, true);
  s.adj.resize(n);
  for (auto [u, v] : edges) {
    s.adj[u].push_back(v);
    s.adj[v].push_back(u);
  }
  for (auto& a : s.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return s;
}

std::size_t SimpleGraph::vertex_count() const {
  return static_cast<std::size_t>(std::count(present.begin(), present.end(), true));
}

bool SimpleGraph::has_edge(VertexId u, VertexId v) const {
  return u < adj.size() && std::binary_search(adj[u].begin(), adj[u].end(), v);
}

bool is_proper(const SimpleGraph& g, const Coloring& coloring) {
  for (VertexId v = 0; v < g.present.size(); ++v) {
    if (!g.present[v]) continue;
    if (v >= coloring.size() || coloring[v] < 0 || coloring[v] > 2) return false;
    for (VertexId w : g.adj[v]) {
      if (w < coloring.size() && coloring[w] == coloring[v]) return false;
    }
  }
  return true;
}

bool is_triangle_free(const SimpleGraph& g) {
  for (VertexId u = 0; u < g.adj.size(); ++u) {
    for (VertexId v : g.adj[u]) {
      if (v <= u) continue;
      const auto& a = g.adj[u].size() <= g.adj[v].size() ? g.adj[u] : g.adj[v];
      const VertexId other = &a == &g.adj[u] ? v : u;
      for (VertexId w : a) {
        if (w != other && g.has_edge(other, w)) return false;
      }
    }
  }
  return true;
}

std::optional<Coloring> brute_force_3color(const SimpleGraph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  if (n > cap) {
    throw Error(ErrorCode::kTooLarge, std::to_string(n) + " vertices exceed cap " + std::to_string(cap));
  }
  Coloring col(g.present.size(), kNoColor);
  std::size_t colored = 0;

  std::function<bool()> search = [&]() -> bool {
    if (colored == n) return true;
    // first fail: fewest available colors, then most neighbors
    VertexId best = kNoVertex;
    int best_free = 4;
    std::size_t best_deg = 0;
    for (VertexId v = 0; v < g.present.size(); ++v) {
      if (!g.present[v] || col[v] != kNoColor) continue;
      bool used[3] = {false, false, false};
      for (VertexId w : g.adj[v]) {
        if (col[w] != kNoColor) used[col[w]] = true;
      }
      const int free = 3 - used[0] - used[1] - used[2];
      if (free < best_free || (free == best_free && g.adj[v].size() > best_deg)) {
        best = v;
        best_free = free;
        best_deg = g.adj[v].size();
      }
    }
    if (best_free == 0) return false;
    for (Color c = 0; c < 3; ++c) {
      bool ok = true;
      for (VertexId w : g.adj[best]) ok = ok && col[w] != c;
      if (!ok) continue;
      col[best] = c;
      ++colored;
      if (search()) return true;
      col[best] = kNoColor;
      --colored;
    }
    return false;
  };
  if (!search()) return std::nullopt;
  return col;
}

namespace {

constexpr std::size_t kBig = 60;

// Embedding-free snapshot plus face orbits recomputed from the rotations.
struct View {
  RotationSpec rot;
  std::vector<bool> present;
  std::vector<std::set<VertexId>> nbr;
  std::vector<std::vector<VertexId>> faces;                   // origins in walk order
  std::map<std::pair<VertexId, VertexId>, std::pair<std::size_t, std::size_t>> at;  // (u,v) -> face, pos
  std::set<std::vector<VertexId>> facial;                     // canonical facial cycles

  bool small(VertexId v) const { return rot[v].size() < kBig; }
  bool adj(VertexId u, VertexId v) const { return nbr[u].contains(v); }
};

std::vector<VertexId> canonical(std::vector<VertexId> cyc) {
  auto best = cyc;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t r = 0; r < cyc.size(); ++r) {
      std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
      best = std::min(best, cyc);
    }
    std::reverse(cyc.begin(), cyc.end());
  }
  return best;
}

View make_view(const PlaneGraph& g, std::size_t cap) {
  if (g.num_vertices() > cap) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(g.num_vertices()) + " vertices exceed cap " + std::to_string(cap));
  }
  View w;
  w.rot = g.rotation_spec();
  const std::size_t n = w.rot.size();
  w.present.assign(n, false);
  w.nbr.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    w.present[v] = g.alive(v);
    w.nbr[v].insert(w.rot[v].begin(), w.rot[v].end());
  }
  // sigma(u->v) = v -> (neighbor after u in v's rotation)
  auto succ = [&](VertexId u, VertexId v) {
    const auto& r = w.rot[v];
    const auto i = static_cast<std::size_t>(std::find(r.begin(), r.end(), u) - r.begin());
    return std::pair{v, r[(i + 1) % r.size()]};
  };
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : w.rot[u]) {
      if (w.at.contains({u, v})) continue;
      const std::size_t f = w.faces.size();
      w.faces.emplace_back();
      std::pair<VertexId, VertexId> e{u, v};
      do {
        w.at[e] = {f, w.faces[f].size()};
        w.faces[f].push_back(e.first);
        e = succ(e.first, e.second);
      } while (e != std::pair{u, v});
    }
  }
  for (const auto& f : w.faces) {
    std::set<VertexId> distinct(f.begin(), f.end());
    if (f.size() >= 4 && f.size() <= 6 && distinct.size() == f.size()) w.facial.insert(canonical(f));
  }
  return w;
}

bool is_facial(const View& w, std::vector<VertexId> cyc) {
  return w.facial.contains(canonical(std::move(cyc)));
}

// All simple paths from s to t with at most max_len edges avoiding blocked.
void paths(const View& w, VertexId s, VertexId t, std::size_t max_len,
           const std::set<VertexId>& blocked, std::vector<std::vector<VertexId>>& out) {
  std::vector<VertexId> cur{s};
  std::function<void()> dfs = [&]() {
    const VertexId x = cur.back();
    if (x == t) {
      out.push_back(cur);
      return;
    }
    if (cur.size() - 1 == max_len) return;
    for (VertexId y : w.nbr[x]) {
      if (blocked.contains(y) || std::find(cur.begin(), cur.end(), y) != cur.end()) continue;
      cur.push_back(y);
      dfs();
      cur.pop_back();
    }
  };
  if (blocked.contains(s) || blocked.contains(t)) return;
  dfs();
}

VertexId third(const View& w, VertexId v, VertexId a, VertexId b) {
  if (w.rot[v].size() != 3) return kNoVertex;
  for (VertexId x : w.rot[v]) {
    if (x != a && x != b) return x;
  }
  return kNoVertex;
}

bool slow_safe(const View& w, const Multigram& m) {
  const auto& v = m.v;
  switch (m.kind) {
    case Kind::kMonogram:
    case Kind::kOctagram:
      return true;
    case Kind::kTetragram:
    case Kind::kHexagram: {
      std::vector<std::vector<VertexId>> ps;
      paths(w, v[0], v[2], 3, {}, ps);
      for (const auto& p : ps) {
        if (m.kind == Kind::kHexagram) {
          if (p != std::vector<VertexId>{v[0], v[1], v[2]}) return false;
        } else {
          for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            bool on_cycle = false;
            for (std::size_t j = 0; j < 4; ++j) {
              const VertexId a = v[j], b = v[(j + 1) % 4];
              on_cycle = on_cycle || (p[i] == a && p[i + 1] == b) || (p[i] == b && p[i + 1] == a);
            }
            if (!on_cycle) return false;
          }
        }
      }
      return true;
    }
    case Kind::kDecagram: {
      const VertexId x1 = m.x[0], x3 = m.x[2];
      if (x1 == x3 || w.adj(x1, x3)) return false;
      for (VertexId y : w.nbr[x1]) {
        if (y != x3 && w.adj(y, x3)) return false;
      }
      return true;
    }
    case Kind::kPentagram: {
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
          if (m.x[i] == m.x[j] || w.adj(m.x[i], m.x[j])) return false;
        }
      }
      const std::set<VertexId> blocked{v[0], v[1], v[2], v[3]};
      std::vector<std::vector<VertexId>> ps;
      paths(w, m.x[1], v[4], 3, blocked, ps);
      if (!ps.empty()) return false;
      ps.clear();
      paths(w, m.x[2], m.x[3], 3, blocked, ps);
      for (const auto& p : ps) {
        if (p.size() != 3) return false;
        if (!is_facial(w, {m.x[2], v[2], v[3], m.x[3], p[1]})) return false;
      }
      return true;
    }
  }
  return false;
}

bool slow_secure(const View& w, const Multigram& m, const ConstraintCycle& c) {
  auto adm = [&](VertexId u) { return w.small(u) && !c.contains(u); };
  auto clean = [&](VertexId u) {
    return std::all_of(w.nbr[u].begin(), w.nbr[u].end(), adm);
  };
  const auto& v = m.v;
  switch (m.kind) {
    case Kind::kMonogram:
      return w.rot[v[0]].size() <= 2 && !c.contains(v[0]);
    case Kind::kTetragram: {
      if (!adm(v[0]) || w.rot[v[0]].size() != 3) return false;
      const VertexId x = third(w, v[0], v[1], v[3]);
      if (x == kNoVertex || !adm(x)) return false;
      if (!adm(v[2])) {
        for (VertexId y : w.nbr[x]) {
          if (adm(y)) continue;
          if (!is_facial(w, {v[0], v[1], y, x}) && !is_facial(w, {v[0], v[3], y, x})) return false;
        }
      }
      return slow_safe(w, m);
    }
    case Kind::kOctagram:
      return std::all_of(v.begin(), v.begin() + 4, adm);
    case Kind::kDecagram:
      return std::all_of(v.begin(), v.begin() + 5, adm) && adm(m.x[0]) && adm(m.x[2]) &&
             slow_safe(w, m);
    case Kind::kPentagram:
      return std::all_of(v.begin(), v.begin() + 5, adm) && std::all_of(m.x.begin(), m.x.end(), adm) &&
             (clean(v[4]) || clean(m.x[1])) && (clean(m.x[2]) || clean(m.x[3])) && slow_safe(w, m);
    case Kind::kHexagram: {
      if (!adm(v[0]) || !adm(v[2]) || !adm(v[5]) || w.rot[v[0]].size() != 3) return false;
      const VertexId x = third(w, v[0], v[1], v[5]);
      return x != kNoVertex && adm(x) && slow_safe(w, m);
    }
  }
  return false;
}

std::vector<Multigram> enumerate(const View& w) {
  std::vector<Multigram> out;
  auto deg = [&](VertexId u) { return w.rot[u].size(); };
  for (VertexId u = 0; u < w.rot.size(); ++u) {
    if (w.present[u] && deg(u) <= 2) {
      Multigram m;
      m.kind = Kind::kMonogram;
      m.size = 1;
      m.v[0] = u;
      out.push_back(m);
    }
  }
  for (const auto& cyc : w.facial) {
    const std::size_t k = cyc.size();
    for (int dir = 0; dir < 2; ++dir) {
      for (std::size_t r = 0; r < k; ++r) {
        Multigram m;
        m.size = static_cast<std::uint8_t>(k);
        for (std::size_t i = 0; i < k; ++i) {
          m.v[i] = dir == 0 ? cyc[(r + i) % k] : cyc[(r + k - i) % k];
        }
        const auto& v = m.v;
        if (k == 4 || k == 6) {
          const VertexId x = third(w, v[0], v[1], v[k - 1]);
          if (x != kNoVertex) {
            m.x[0] = x;
            m.num_aux = 1;
          }
          m.kind = k == 4 ? Kind::kTetragram : Kind::kHexagram;
          out.push_back(m);
          if (k == 4 && std::all_of(v.begin(), v.begin() + 4, [&](VertexId a) { return deg(a) == 3; })) {
            m.kind = Kind::kOctagram;
            out.push_back(m);
          }
        } else {
          if (!std::all_of(v.begin(), v.begin() + 4, [&](VertexId a) { return deg(a) == 3; })) continue;
          for (int i = 0; i < 4; ++i) m.x[i] = third(w, v[i], v[(i + 4) % 5], v[i + 1]);
          m.num_aux = 4;
          m.kind = Kind::kPentagram;
          out.push_back(m);
          if (deg(v[4]) == 3) {
            m.kind = Kind::kDecagram;
            out.push_back(m);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<VertexId>> facial_cycles_slow(const PlaneGraph& g) {
  const View w = make_view(g, g.num_vertices());
  std::vector<std::vector<VertexId>> out;
  for (const auto& f : w.faces) {
    std::set<VertexId> distinct(f.begin(), f.end());
    if (f.size() >= 4 && f.size() <= 6 && distinct.size() == f.size()) out.push_back(f);
  }
  return out;
}

std::vector<Multigram> all_multigrams_slow(const PlaneGraph& g, std::size_t cap) {
  return enumerate(make_view(g, cap));
}

bool is_secure_slow(const PlaneGraph& g, const Multigram& m, const ConstraintCycle& c) {
  return slow_secure(make_view(g, g.num_vertices()), m, c);
}

std::vector<Multigram> all_secure_multigrams_slow(const PlaneGraph& g, const ConstraintCycle& c,
                                                  std::size_t cap) {
  const View w = make_view(g, cap);
  std::vector<Multigram> out;
  for (const auto& m : enumerate(w)) {
    if (slow_secure(w, m, c)) out.push_back(m);
  }
  return out;
}

bool closeness_slow(const PlaneGraph& g, VertexId u, VertexId v, std::size_t cap) {
  const View w = make_view(g, cap);
  if (!w.present[u] || !w.present[v] || !w.small(u) || !w.small(v)) return false;
  std::set<VertexId> blocked;
  for (VertexId x = 0; x < w.rot.size(); ++x) {
    if (!w.small(x)) blocked.insert(x);
  }
  std::vector<std::vector<VertexId>> ps;
  paths(w, u, v, 4, blocked, ps);
  if (!ps.empty()) return true;
  for (const auto& f : w.facial) {
    if (std::find(f.begin(), f.end(), u) != f.end() && std::find(f.begin(), f.end(), v) != f.end()) {
      return true;
    }
  }
  return false;
}

bool close_to_edge_slow(const PlaneGraph& g, VertexId u, VertexId v, VertexId x, std::size_t cap) {
  const View w = make_view(g, cap);
  for (auto e : {std::pair{u, v}, std::pair{v, u}}) {
    const auto it = w.at.find(e);
    if (it == w.at.end()) continue;
    const auto& face = w.faces[it->second.first];
    const std::size_t len = face.size();
    const std::size_t p = it->second.second;
    for (std::size_t i = 0; i < len; ++i) {
      if (face[i] != x) continue;
      for (std::size_t end : {p, (p + 1) % len}) {
        const std::size_t d = i > end ? i - end : end - i;
        if (std::min(d, len - d) <= 2) return true;
      }
    }
  }
  return false;
}

}  // namespace trifree
