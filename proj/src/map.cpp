#include "stq/map.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace stq {

CombinatorialMap CombinatorialMap::from_cyclic_orders(std::vector<std::vector<VertexId>> orders) {
  CombinatorialMap m;
  int n = static_cast<int>(orders.size());
  std::set<std::pair<VertexId, VertexId>> edge_set;
  for (VertexId v = 0; v < n; ++v) {
    std::set<VertexId> seen;
    for (VertexId u : orders[static_cast<size_t>(v)]) {
      if (u < 0 || u >= n || u == v)
        fail(ErrorCode::invalid_argument, "bad neighbor in cyclic order");
      if (!seen.insert(u).second)
        fail(ErrorCode::invalid_argument, "repeated neighbor in cyclic order");
      edge_set.insert({std::min(u, v), std::max(u, v)});
    }
  }
  for (auto [u, v] : edge_set) {
    auto& ou = orders[static_cast<size_t>(u)];
    auto& ov = orders[static_cast<size_t>(v)];
    if (std::find(ou.begin(), ou.end(), v) == ou.end() ||
        std::find(ov.begin(), ov.end(), u) == ov.end())
      fail(ErrorCode::invalid_argument, "adjacency is not symmetric");
  }
  m.orders_ = std::move(orders);
  m.edges_.assign(edge_set.begin(), edge_set.end());
  return m;
}

void CombinatorialMap::check_vertex(VertexId v) const {
  if (v < 0 || v >= vertex_count()) fail(ErrorCode::unknown_vertex, "unknown vertex");
}

int CombinatorialMap::degree(VertexId v) const {
  check_vertex(v);
  return static_cast<int>(orders_[static_cast<size_t>(v)].size());
}

const std::vector<VertexId>& CombinatorialMap::neighbors(VertexId v) const {
  check_vertex(v);
  return orders_[static_cast<size_t>(v)];
}

int CombinatorialMap::edge_index(VertexId u, VertexId v) const {
  std::pair<VertexId, VertexId> key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::vector<Angle> CombinatorialMap::angles_around(VertexId v) const {
  const auto& nbr = neighbors(v);
  std::vector<Angle> out;
  size_t d = nbr.size();
  out.reserve(d);
  for (size_t i = 0; i < d; ++i) out.push_back({nbr[i], v, nbr[(i + 1) % d]});
  return out;
}

int CombinatorialMap::angle_index(const Angle& a) const {
  const auto& nbr = neighbors(a.at);
  size_t d = nbr.size();
  for (size_t i = 0; i < d; ++i)
    if (nbr[i] == a.from && nbr[(i + 1) % d] == a.to) return static_cast<int>(i);
  return -1;
}

CombinatorialMap CombinatorialMap::mirrored() const {
  std::vector<std::vector<VertexId>> rev = orders_;
  for (auto& o : rev) std::reverse(o.begin(), o.end());
  return from_cyclic_orders(std::move(rev));
}

std::vector<Face> CombinatorialMap::trace_faces() const {
  // Next dart of (u -> v) is (v -> w) with w the predecessor of u in the
  // cyclic order at v; orbits of this rule are the faces.
  std::map<std::pair<VertexId, VertexId>, bool> visited;
  for (VertexId v = 0; v < vertex_count(); ++v)
    for (VertexId u : neighbors(v)) visited[{v, u}] = false;

  std::vector<Face> faces;
  for (auto& [dart, seen] : visited) {
    if (seen) continue;
    Face cycle;
    VertexId u = dart.first, v = dart.second;
    size_t guard = visited.size() + 1;
    while (!visited[{u, v}]) {
      visited[{u, v}] = true;
      cycle.push_back(u);
      const auto& nbr = neighbors(v);
      size_t d = nbr.size();
      size_t iu = 0;
      while (iu < d && nbr[iu] != u) ++iu;
      VertexId w = nbr[(iu + d - 1) % d];
      u = v;
      v = w;
      if (--guard == 0)
        fail(ErrorCode::inconsistent_rotation_system, "face walk does not close");
    }
    auto lowest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), lowest, cycle.end());
    faces.push_back(std::move(cycle));
  }
  std::sort(faces.begin(), faces.end());

  int euler = vertex_count() - edge_count() + static_cast<int>(faces.size());
  if (euler != 2)
    fail(ErrorCode::inconsistent_rotation_system,
         "rotation system is not a sphere embedding (V-E+F = " + std::to_string(euler) + ")");
  return faces;
}

MapAutomorphism MapAutomorphism::compose(const MapAutomorphism& inner) const {
  MapAutomorphism out;
  out.image.resize(inner.image.size());
  for (size_t i = 0; i < inner.image.size(); ++i)
    out.image[i] = image.at(static_cast<size_t>(inner.image[i]));
  return out;
}

MapAutomorphism MapAutomorphism::inverse() const {
  MapAutomorphism out;
  out.image.assign(image.size(), -1);
  for (size_t i = 0; i < image.size(); ++i)
    out.image[static_cast<size_t>(image[i])] = static_cast<VertexId>(i);
  return out;
}

bool MapAutomorphism::is_identity() const {
  for (size_t i = 0; i < image.size(); ++i)
    if (image[i] != static_cast<VertexId>(i)) return false;
  return true;
}

int MapAutomorphism::order() const {
  MapAutomorphism acc = *this;
  int k = 1;
  int limit = static_cast<int>(image.size()) * static_cast<int>(image.size()) + 2;
  while (!acc.is_identity()) {
    acc = compose(acc);
    if (++k > limit) fail(ErrorCode::invalid_argument, "not a permutation of finite order");
  }
  return k;
}

PseudoDoubleWheel::PseudoDoubleWheel(int faces) : faces_(faces) {
  if (faces < 6 || faces % 2 != 0)
    fail(ErrorCode::invalid_face_count, "pseudo-double wheel needs an even face count >= 6");
  int n = faces, s = faces + 1;
  std::vector<std::vector<VertexId>> orders(static_cast<size_t>(faces + 2));
  for (int i = 0; i < faces; ++i) {
    int prev = (i + faces - 1) % faces, next = (i + 1) % faces;
    if (i % 2 == 0)
      orders[static_cast<size_t>(i)] = {prev, next, n};  // v_{2i}: ..., v-1 then v+1 then N
    else
      orders[static_cast<size_t>(i)] = {next, prev, s};  // v_{2i+1}: v+1 then v-1 then S
  }
  for (int i = 0; i < faces; i += 2) orders[static_cast<size_t>(n)].push_back(i);
  // At S the edge to v_{2i-1} follows the edge to v_{2i+1}: descending odds.
  for (int j = 0; j < faces / 2; ++j)
    orders[static_cast<size_t>(s)].push_back(((1 - 2 * j) % faces + faces) % faces);
  map_ = CombinatorialMap::from_cyclic_orders(std::move(orders));
}

VertexId PseudoDoubleWheel::rim(int i) const { return ((i % faces_) + faces_) % faces_; }

PseudoDoubleWheel::EdgeKind PseudoDoubleWheel::edge_kind(int edge_idx) const {
  auto [u, v] = map_.edges().at(static_cast<size_t>(edge_idx));
  if (v == north()) return EdgeKind::northern;
  if (v == south()) return EdgeKind::southern;
  return EdgeKind::rim;
}

std::string PseudoDoubleWheel::vertex_name(VertexId v) const {
  if (v == north()) return "N";
  if (v == south()) return "S";
  return "v" + std::to_string(v);
}

PseudoDoubleWheel pseudo_double_wheel(int faces) { return PseudoDoubleWheel(faces); }

MapAutomorphism automorphism_f(int faces) {
  if (faces < 6 || faces % 2 != 0)
    fail(ErrorCode::invalid_face_count, "f needs an even face count >= 6");
  MapAutomorphism h;
  h.image.resize(static_cast<size_t>(faces + 2));
  for (int i = 0; i < faces; ++i)
    h.image[static_cast<size_t>(i)] = ((1 - i) % faces + faces) % faces;
  h.image[static_cast<size_t>(faces)] = faces + 1;
  h.image[static_cast<size_t>(faces + 1)] = faces;
  return h;
}

MapAutomorphism automorphism_g(int faces) {
  if (faces < 6 || faces % 6 != 0)
    fail(ErrorCode::invalid_face_count, "g needs a face count divisible by six");
  MapAutomorphism h;
  h.image.resize(static_cast<size_t>(faces + 2));
  for (int i = 0; i < faces; ++i) h.image[static_cast<size_t>(i)] = (i + 6) % faces;
  h.image[static_cast<size_t>(faces)] = faces;
  h.image[static_cast<size_t>(faces + 1)] = faces + 1;
  return h;
}

bool is_automorphism(const CombinatorialMap& map, const MapAutomorphism& h) {
  int n = map.vertex_count();
  if (static_cast<int>(h.image.size()) != n) return false;
  std::vector<bool> hit(static_cast<size_t>(n), false);
  for (VertexId v = 0; v < n; ++v) {
    VertexId w = h.image[static_cast<size_t>(v)];
    if (w < 0 || w >= n || hit[static_cast<size_t>(w)]) return false;
    hit[static_cast<size_t>(w)] = true;
  }
  for (VertexId v = 0; v < n; ++v) {
    const auto& nbr = map.neighbors(v);
    const auto& img = map.neighbors(h(v));
    size_t d = nbr.size();
    if (img.size() != d) return false;
    // h must map the cyclic order at v onto the one at h(v), as a rotation.
    size_t shift = img.size();
    for (size_t i = 0; i < d; ++i)
      if (img[i] == h(nbr[0])) shift = i;
    if (shift == img.size()) return false;
    for (size_t i = 0; i < d; ++i)
      if (img[(shift + i) % d] != h(nbr[i])) return false;
  }
  return true;
}

std::vector<MapAutomorphism> find_isomorphisms(const CombinatorialMap& a,
                                               const CombinatorialMap& b) {
  std::vector<MapAutomorphism> out;
  int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return out;
  if (n == 0) return out;

  const VertexId base = 0;
  int base_deg = a.degree(base);
  for (VertexId b0 = 0; b0 < n; ++b0) {
    if (b.degree(b0) != base_deg) continue;
    const auto& img_nbr = b.neighbors(b0);
    for (size_t shift = 0; shift < img_nbr.size(); ++shift) {
      // Propagate the candidate determined by base -> b0 with rotation
      // alignment `shift`, then verify.
      MapAutomorphism h;
      h.image.assign(static_cast<size_t>(n), -1);
      h.image[static_cast<size_t>(base)] = b0;
      std::vector<std::pair<VertexId, size_t>> stack{{base, shift}};
      bool ok = true;
      while (!stack.empty() && ok) {
        auto [v, sh] = stack.back();
        stack.pop_back();
        const auto& nv = a.neighbors(v);
        const auto& nw = b.neighbors(h(v));
        size_t d = nv.size();
        if (nw.size() != d) {
          ok = false;
          break;
        }
        for (size_t i = 0; i < d; ++i) {
          VertexId from = nv[i];
          VertexId to = nw[(sh + i) % d];
          VertexId& slot = h.image[static_cast<size_t>(from)];
          if (slot == -1) {
            slot = to;
            // Alignment at `from`: its neighbor v must map to h(v).
            const auto& nf = a.neighbors(from);
            const auto& nt = b.neighbors(to);
            if (nf.size() != nt.size()) {
              ok = false;
              break;
            }
            size_t iv = 0, iw = 0;
            while (iv < nf.size() && nf[iv] != v) ++iv;
            while (iw < nt.size() && nt[iw] != h(v)) ++iw;
            if (iv == nf.size() || iw == nt.size()) {
              ok = false;
              break;
            }
            stack.push_back({from, (iw + nf.size() - iv) % nf.size()});
          } else if (slot != to) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
      bool total = std::none_of(h.image.begin(), h.image.end(),
                                [](VertexId v) { return v == -1; });
      if (!total) continue;  // disconnected graphs are out of scope here
      // Verification against b's rotation system.
      bool valid = true;
      for (VertexId v = 0; v < n && valid; ++v) {
        const auto& nv = a.neighbors(v);
        const auto& nw = b.neighbors(h(v));
        size_t d = nv.size();
        if (nw.size() != d) {
          valid = false;
          break;
        }
        size_t sh = d;
        for (size_t i = 0; i < d; ++i)
          if (nw[i] == h(nv[0])) sh = i;
        if (sh == d) {
          valid = false;
          break;
        }
        for (size_t i = 0; i < d; ++i)
          if (nw[(sh + i) % d] != h(nv[i])) valid = false;
      }
      if (valid) out.push_back(std::move(h));
    }
  }
  return out;
}

}  // namespace stq
