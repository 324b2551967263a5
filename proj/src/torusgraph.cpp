#include "acx4/torusgraph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>

#include "acx4/error.hpp"

namespace acx4 {

namespace {

// A component walked as a directed cycle: edge edges[t] joins
// vertices[t] -> vertices[t+1 mod k]; flipped[t] says the stored edge points
// the other way.
struct Cycle {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  std::vector<bool> flipped;
};

struct Structure {
  std::unordered_map<VertexId, std::size_t> index;
  std::vector<std::vector<std::size_t>> incident;
};

std::size_t other_end(const std::vector<GraphEdge>& edges, const Structure& s, std::size_t e,
                      std::size_t v) {
  const std::size_t a = s.index.at(edges[e].from);
  return a == v ? s.index.at(edges[e].to) : a;
}

// Structural checks only: ids, labels, loops, multi-edges, 2-regularity.
Structure check_structure(const RawGraph& g) {
  Structure s;
  if (g.vertices.empty()) throw Error(ErrorCode::kEmptyFamily, "graph has no vertices");
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (!s.index.emplace(g.vertices[i], i).second) {
      throw Error(ErrorCode::kDuplicateVertex, "vertex id '" + g.vertices[i] + "' repeated", i);
    }
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (g.edges[e].label.is_zero()) {
      throw Error(ErrorCode::kZeroLabel, "edge " + std::to_string(e) + " has label (0,0)", e);
    }
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (g.edges[e].from == g.edges[e].to) {
      throw Error(ErrorCode::kSelfLoop, "edge " + std::to_string(e) + " is a loop at '" +
                                            g.edges[e].from + "'",
                  e);
    }
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    for (const VertexId* end : {&g.edges[e].from, &g.edges[e].to}) {
      if (!s.index.count(*end)) {
        throw Error(ErrorCode::kUnknownVertex,
                    "edge " + std::to_string(e) + " references unknown vertex '" + *end + "'", e);
      }
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    std::size_t a = s.index.at(g.edges[e].from);
    std::size_t b = s.index.at(g.edges[e].to);
    if (b < a) std::swap(a, b);
    if (!seen.emplace(a, b).second) {
      throw Error(ErrorCode::kMultiEdge, "more than one edge between '" + g.edges[e].from +
                                             "' and '" + g.edges[e].to + "'",
                  e);
    }
  }
  s.incident.assign(g.vertices.size(), {});
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    s.incident[s.index.at(g.edges[e].from)].push_back(e);
    s.incident[s.index.at(g.edges[e].to)].push_back(e);
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (s.incident[v].size() != 2) {
      throw Error(ErrorCode::kNotTwoRegular,
                  "vertex '" + g.vertices[v] + "' has degree " +
                      std::to_string(s.incident[v].size()) + ", expected 2",
                  v);
    }
  }
  return s;
}

Cycle walk(const std::vector<GraphEdge>& edges, const Structure& s, std::size_t start,
           std::size_t first_edge) {
  Cycle c;
  std::size_t v = start;
  std::size_t e = first_edge;
  do {
    c.vertices.push_back(v);
    c.edges.push_back(e);
    c.flipped.push_back(s.index.at(edges[e].from) != v);
    const std::size_t next = other_end(edges, s, e, v);
    const auto& inc = s.incident[next];
    e = inc[0] == e ? inc[1] : inc[0];
    v = next;
  } while (v != start);
  return c;
}

Cycle reversed(const Cycle& c) {
  Cycle r;
  const std::size_t k = c.vertices.size();
  r.vertices.push_back(c.vertices[0]);
  for (std::size_t t = k - 1; t >= 1; --t) r.vertices.push_back(c.vertices[t]);
  for (std::size_t t = k; t-- > 0;) {
    r.edges.push_back(c.edges[t]);
    r.flipped.push_back(!c.flipped[t]);
  }
  return r;
}

// Components as normalized cycles, ordered by least vertex id.
std::vector<Cycle> normalized_cycles(const std::vector<VertexId>& ids,
                                     const std::vector<GraphEdge>& edges, const Structure& s) {
  std::vector<std::size_t> order(ids.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return vertex_id_less(ids[a], ids[b]); });

  std::vector<bool> visited(ids.size(), false);
  std::vector<Cycle> cycles;
  for (std::size_t start : order) {
    if (visited[start]) continue;
    const std::size_t ea = s.incident[start][0];
    const std::size_t eb = s.incident[start][1];
    Cycle forward = walk(edges, s, start, ea);
    const auto kept = static_cast<std::size_t>(
        std::count(forward.flipped.begin(), forward.flipped.end(), false));
    const std::size_t k = forward.edges.size();
    bool use_reverse = false;
    if (k - kept > kept) {
      use_reverse = true;
    } else if (k - kept == kept) {
      const bool ea_out = edges[ea].from == ids[start];
      const bool eb_out = edges[eb].from == ids[start];
      use_reverse = !ea_out && eb_out;
    }
    Cycle chosen = use_reverse ? reversed(forward) : std::move(forward);
    for (std::size_t v : chosen.vertices) visited[v] = true;
    cycles.push_back(std::move(chosen));
  }
  return cycles;
}

LatticeVector oriented_label(const std::vector<GraphEdge>& edges, const Cycle& c, std::size_t t) {
  const auto& label = edges[c.edges[t]].label;
  return c.flipped[t] ? -label : label;
}

std::vector<LatticeVector> cycle_labels(const std::vector<GraphEdge>& edges, const Cycle& c) {
  std::vector<LatticeVector> out;
  out.reserve(c.edges.size());
  for (std::size_t t = 0; t < c.edges.size(); ++t) out.push_back(oriented_label(edges, c, t));
  return out;
}

std::vector<Cycle> cycles_of(const TorusGraph& g, Structure* structure = nullptr) {
  RawGraph raw{g.vertices(), g.edges()};
  Structure s = check_structure(raw);
  auto cycles = normalized_cycles(g.vertices(), g.edges(), s);
  if (structure) *structure = std::move(s);
  return cycles;
}

VertexId fresh_id(const VertexId& base, const std::set<VertexId>& taken) {
  if (!taken.count(base)) return base;
  for (std::size_t n = 2;; ++n) {
    VertexId candidate = base + "#" + std::to_string(n);
    if (!taken.count(candidate)) return candidate;
  }
}

std::size_t find_vertex(const TorusGraph& g, const VertexId& v) {
  const auto it = std::find(g.vertices().begin(), g.vertices().end(), v);
  if (it == g.vertices().end()) {
    throw Error(ErrorCode::kUnknownVertex, "no vertex '" + v + "'");
  }
  return static_cast<std::size_t>(it - g.vertices().begin());
}

bool matches_minimal_pattern(const std::vector<LatticeVector>& labels, std::size_t start) {
  const std::size_t k = labels.size();
  for (std::size_t block = 0; block < k; block += 4) {
    const auto& l0 = labels[(start + block) % k];
    const auto& l1 = labels[(start + block + 1) % k];
    const auto& l2 = labels[(start + block + 2) % k];
    const auto& l3 = labels[(start + block + 3) % k];
    if (l0 != LatticeVector(1, 0) || l2 != LatticeVector(-1, 0)) return false;
    if (!l1.x.is_zero() || abs(l1.y) != 1 || l3 != -l1) return false;
  }
  return true;
}

}  // namespace

bool vertex_id_less(const VertexId& a, const VertexId& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::size_t is = i;
      std::size_t js = j;
      while (is + 1 < ie && a[is] == '0') ++is;
      while (js + 1 < je && b[js] == '0') ++js;
      if (ie - is != je - js) return ie - is < je - js;
      const int cmp = a.compare(is, ie - is, b, js, je - js);
      if (cmp != 0) return cmp < 0;
      // Equal values: fewer leading zeros first keeps the order strict.
      if (ie - i != je - j) return ie - i < je - j;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

TorusGraph validate_graph(RawGraph raw) {
  const Structure s = check_structure(raw);
  const auto cycles = normalized_cycles(raw.vertices, raw.edges, s);

  for (const auto& c : cycles) {
    const std::size_t k = c.edges.size();
    for (std::size_t t = 0; t < k; ++t) {
      const auto in = oriented_label(raw.edges, c, (t + k - 1) % k);
      const auto out = oriented_label(raw.edges, c, t);
      if (!is_basis(in, out)) {
        const auto& id = raw.vertices[c.vertices[t]];
        throw Error(ErrorCode::kWeightsNotBasis,
                    "weights " + to_string(out) + ", " + to_string(-in) + " at vertex '" + id +
                        "' do not form a basis",
                    c.vertices[t]);
      }
    }
  }
  for (const auto& c : cycles) {
    const std::size_t k = c.edges.size();
    const Integer reference =
        det2(oriented_label(raw.edges, c, k - 1), oriented_label(raw.edges, c, 0));
    for (std::size_t t = 1; t < k; ++t) {
      const Integer d = det2(oriented_label(raw.edges, c, t - 1), oriented_label(raw.edges, c, t));
      if (d != reference) {
        const std::size_t e1 = c.edges[(t + k - 2) % k];
        const std::size_t e2 = c.edges[t - 1];
        const std::size_t e3 = c.edges[t];
        throw Error(ErrorCode::kRecurrenceFails,
                    "labels of edges " + std::to_string(e1) + ", " + std::to_string(e2) + ", " +
                        std::to_string(e3) + " admit no integer a with w3 = -a w2 - w1",
                    e3);
      }
    }
  }
  return TorusGraph(std::move(raw.vertices), std::move(raw.edges));
}

std::array<LatticeVector, 2> weights_at(const TorusGraph& g, const VertexId& v) {
  find_vertex(g, v);
  std::vector<LatticeVector> w;
  for (const auto& e : g.edges()) {
    if (e.from == v) w.push_back(e.label);
    if (e.to == v) w.push_back(-e.label);
  }
  return {w.at(0), w.at(1)};
}

TorusGraph normalize_orientation(const TorusGraph& g) {
  std::vector<GraphEdge> edges = g.edges();
  for (const auto& c : cycles_of(g)) {
    for (std::size_t t = 0; t < c.edges.size(); ++t) {
      if (!c.flipped[t]) continue;
      auto& e = edges[c.edges[t]];
      std::swap(e.from, e.to);
      e.label = -e.label;
    }
  }
  return validate_graph({g.vertices(), std::move(edges)});
}

MultiFanFamily graph_to_family(const TorusGraph& g) {
  std::vector<MultiFan> fans;
  for (const auto& c : cycles_of(g)) fans.push_back(validate_multifan(cycle_labels(g.edges(), c)));
  return MultiFanFamily(std::move(fans));
}

TorusGraph family_to_graph(const MultiFanFamily& fam) {
  RawGraph raw;
  for (std::size_t j = 0; j < fam.size(); ++j) {
    const auto& fan = fam[j];
    auto id = [j](std::size_t i) { return "p" + std::to_string(j) + "," + std::to_string(i); };
    for (std::size_t i = 0; i < fan.size(); ++i) raw.vertices.push_back(id(i));
    for (std::size_t i = 0; i < fan.size(); ++i) {
      raw.edges.push_back({id(i), id((i + 1) % fan.size()), fan[i]});
    }
  }
  return validate_graph(std::move(raw));
}

TorusGraph blow_up_graph(const TorusGraph& g, const VertexId& v) {
  find_vertex(g, v);
  const TorusGraph n = normalize_orientation(g);
  std::vector<VertexId> vertices = n.vertices();
  std::vector<GraphEdge> edges = n.edges();

  const auto in = std::find_if(edges.begin(), edges.end(), [&](const GraphEdge& e) { return e.to == v; });
  const auto out = std::find_if(edges.begin(), edges.end(), [&](const GraphEdge& e) { return e.from == v; });
  std::set<VertexId> taken(vertices.begin(), vertices.end());
  taken.erase(v);
  const VertexId first = fresh_id(v + "'", taken);
  taken.insert(first);
  const VertexId second = fresh_id(v + "''", taken);

  const LatticeVector sum = in->label + out->label;
  in->to = first;
  out->from = second;
  const auto in_pos = in - edges.begin();
  edges.insert(edges.begin() + in_pos + 1, GraphEdge{first, second, sum});

  const auto vpos = std::find(vertices.begin(), vertices.end(), v);
  *vpos = second;
  vertices.insert(vpos, first);
  return validate_graph({std::move(vertices), std::move(edges)});
}

TorusGraph blow_down_graph(const TorusGraph& g, const VertexId& u, const VertexId& v) {
  find_vertex(g, u);
  find_vertex(g, v);
  const TorusGraph n = normalize_orientation(g);
  std::vector<VertexId> vertices = n.vertices();
  std::vector<GraphEdge> edges = n.edges();

  const auto mid = std::find_if(edges.begin(), edges.end(), [&](const GraphEdge& e) {
    return (e.from == u && e.to == v) || (e.from == v && e.to == u);
  });
  if (mid == edges.end()) {
    throw Error(ErrorCode::kUnknownEdge, "no edge joins '" + u + "' and '" + v + "'");
  }
  const VertexId tail = mid->from;
  const VertexId head = mid->to;
  const auto mid_pos = static_cast<std::size_t>(mid - edges.begin());
  const auto in = std::find_if(edges.begin(), edges.end(), [&](const GraphEdge& e) { return e.to == tail; });
  const auto out = std::find_if(edges.begin(), edges.end(), [&](const GraphEdge& e) { return e.from == head; });
  if (mid->label != in->label + out->label) {
    throw Error(ErrorCode::kNotBlowDownable,
                "edge (" + tail + "," + head + ") labeled " + to_string(mid->label) +
                    " is not the sum of its neighbours " + to_string(in->label) + " and " +
                    to_string(out->label),
                mid_pos);
  }
  std::set<VertexId> taken(vertices.begin(), vertices.end());
  taken.erase(tail);
  taken.erase(head);
  const VertexId merged = fresh_id(head + "'", taken);
  in->to = merged;
  out->from = merged;
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(mid_pos));

  *std::find(vertices.begin(), vertices.end(), tail) = merged;
  vertices.erase(std::find(vertices.begin(), vertices.end(), head));
  return validate_graph({std::move(vertices), std::move(edges)});
}

bool is_minimal_graph(const TorusGraph& g) {
  for (const auto& c : cycles_of(g)) {
    const auto labels = cycle_labels(g.edges(), c);
    const std::size_t k = labels.size();
    if (k % 4 != 0) return false;
    std::vector<LatticeVector> backwards;
    for (std::size_t t = k; t-- > 0;) backwards.push_back(-labels[t]);
    bool found = false;
    for (std::size_t s = 0; s < k && !found; ++s) {
      found = matches_minimal_pattern(labels, s) || matches_minimal_pattern(backwards, s);
    }
    if (!found) return false;
  }
  return true;
}

bool is_connected(const TorusGraph& g) { return cycles_of(g).size() == 1; }

std::vector<GkmRelation> gkm_relations(const TorusGraph& g) {
  std::vector<GkmRelation> out;
  out.reserve(g.edges().size());
  for (const auto& e : g.edges()) out.push_back({e.from, e.to, e.label});
  return out;
}

}  // namespace acx4
