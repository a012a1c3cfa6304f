#include "stq/chart.hpp"

#include <algorithm>

namespace stq {

char length_label_char(LengthLabel l) {
  switch (l) {
    case LengthLabel::A: return 'a';
    case LengthLabel::B: return 'b';
    case LengthLabel::C: return 'c';
  }
  return '?';
}

std::string symbol_name(Symbol s) {
  switch (s) {
    case Symbol::alpha: return "alpha";
    case Symbol::beta: return "beta";
    case Symbol::gamma: return "gamma";
    case Symbol::delta: return "delta";
  }
  return "?";
}

AngleExpr AngleExpr::symbol(Symbol s) {
  AngleExpr e;
  e.coeff_[static_cast<size_t>(s)] = Rational(1);
  return e;
}

AngleExpr AngleExpr::pi_times(Rational r) {
  AngleExpr e;
  e.pi_ = r;
  return e;
}

bool AngleExpr::is_zero() const { return is_constant() && pi_.is_zero(); }

bool AngleExpr::is_constant() const {
  return std::all_of(coeff_.begin(), coeff_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

std::optional<Symbol> AngleExpr::single_symbol() const {
  if (!pi_.is_zero()) return std::nullopt;
  std::optional<Symbol> found;
  for (size_t i = 0; i < 4; ++i) {
    if (coeff_[i].is_zero()) continue;
    if (found || coeff_[i] != Rational(1)) return std::nullopt;
    found = static_cast<Symbol>(i);
  }
  return found;
}

AngleExpr AngleExpr::operator+(const AngleExpr& o) const {
  AngleExpr e;
  for (size_t i = 0; i < 4; ++i) e.coeff_[i] = coeff_[i] + o.coeff_[i];
  e.pi_ = pi_ + o.pi_;
  return e;
}

AngleExpr AngleExpr::operator-(const AngleExpr& o) const {
  AngleExpr e;
  for (size_t i = 0; i < 4; ++i) e.coeff_[i] = coeff_[i] - o.coeff_[i];
  e.pi_ = pi_ - o.pi_;
  return e;
}

AngleExpr AngleExpr::operator*(const Rational& r) const {
  AngleExpr e;
  for (size_t i = 0; i < 4; ++i) e.coeff_[i] = coeff_[i] * r;
  e.pi_ = pi_ * r;
  return e;
}

double AngleExpr::evaluate(const std::array<double, 4>& values) const {
  double v = pi_.to_double() * 3.14159265358979323846;
  for (size_t i = 0; i < 4; ++i) v += coeff_[i].to_double() * values[i];
  return v;
}

std::string AngleExpr::to_string() const {
  std::string s;
  auto append = [&s](const Rational& c, const std::string& unit) {
    if (c.is_zero()) return;
    std::string term;
    if (c == Rational(1))
      term = unit;
    else if (c == Rational(-1))
      term = "-" + unit;
    else if (c.is_integer())
      term = c.to_string() + "*" + unit;
    else
      term = "(" + c.to_string() + ")*" + unit;
    if (s.empty())
      s = term;
    else if (!term.empty() && term[0] == '-')
      s += term;
    else
      s += "+" + term;
  };
  for (size_t i = 0; i < 4; ++i) append(coeff_[i], symbol_name(static_cast<Symbol>(i)));
  append(pi_, "pi");
  return s.empty() ? "0" : s;
}

TilePattern TilePattern::of_type(int tile_type) {
  // Corners listed in face-trace order (the reverse of the conventional
  // alpha..delta reading); edge_after[i] sits between corner i and i+1.
  if (tile_type == 2)
    return {2,
            {Symbol::alpha, Symbol::delta, Symbol::gamma, Symbol::beta},
            {LengthLabel::B, LengthLabel::A, LengthLabel::A, LengthLabel::A}};
  if (tile_type == 4)
    return {4,
            {Symbol::alpha, Symbol::delta, Symbol::gamma, Symbol::beta},
            {LengthLabel::C, LengthLabel::B, LengthLabel::A, LengthLabel::A}};
  fail(ErrorCode::invalid_argument, "tile type must be 2 or 4");
}

const std::optional<AngleExpr>& Chart::k_at(const Angle& a) const {
  int idx = map.angle_index(a);
  if (idx < 0) fail(ErrorCode::unknown_vertex, "no such angle in the map");
  return kvals[static_cast<size_t>(a.at)][static_cast<size_t>(idx)];
}

void Chart::set_k(const Angle& a, const AngleExpr& e) {
  int idx = map.angle_index(a);
  if (idx < 0) fail(ErrorCode::unknown_vertex, "no such angle in the map");
  kvals[static_cast<size_t>(a.at)][static_cast<size_t>(idx)] = e;
}

bool Chart::fully_assigned() const {
  for (const auto& per_vertex : kvals)
    for (const auto& k : per_vertex)
      if (!k) return false;
  return true;
}

LengthLabel Chart::label_of(VertexId u, VertexId v) const {
  int e = map.edge_index(u, v);
  if (e < 0) fail(ErrorCode::invalid_argument, "no such edge");
  return edge_labels[static_cast<size_t>(e)];
}

Chart make_unassigned_chart(const CombinatorialMap& map, int wheel_faces, int tile_type,
                            std::vector<LengthLabel> edge_labels) {
  if (static_cast<int>(edge_labels.size()) != map.edge_count())
    fail(ErrorCode::invalid_argument, "one label per edge required");
  Chart c{map, wheel_faces, tile_type, std::move(edge_labels), {}};
  c.kvals.resize(static_cast<size_t>(map.vertex_count()));
  for (VertexId v = 0; v < map.vertex_count(); ++v)
    c.kvals[static_cast<size_t>(v)].resize(static_cast<size_t>(map.degree(v)));
  return c;
}

std::vector<LengthLabel> alternating_length_assignment(int faces) {
  if (faces % 6 != 0 || faces < 12)
    fail(ErrorCode::not_multiple_of_six,
         "the alternating assignment closes up only when the face count is a multiple of six");
  auto wheel = pseudo_double_wheel(faces);
  const auto& m = wheel.map();
  std::vector<LengthLabel> labels(static_cast<size_t>(m.edge_count()), LengthLabel::A);
  for (int i = 0; 6 * i < faces; ++i) {
    int e1 = m.edge_index(wheel.north(), wheel.rim(6 * i));
    int e2 = m.edge_index(wheel.south(), wheel.rim(6 * i + 1));
    int e3 = m.edge_index(wheel.rim(6 * i + 3), wheel.rim(6 * i + 4));
    labels[static_cast<size_t>(e1)] = LengthLabel::B;
    labels[static_cast<size_t>(e2)] = LengthLabel::B;
    labels[static_cast<size_t>(e3)] = LengthLabel::B;
  }
  return labels;
}

AngleExpr vertex_type(const Chart& chart, VertexId v) {
  if (v < 0 || v >= chart.map.vertex_count()) fail(ErrorCode::unknown_vertex, "unknown vertex");
  AngleExpr sum;
  const auto& ks = chart.kvals[static_cast<size_t>(v)];
  for (const auto& k : ks) {
    if (!k) fail(ErrorCode::unassigned_angle, "vertex has an unassigned angle");
    sum += *k;
  }
  return sum;
}

Chart mirror_chart(const Chart& chart) {
  Chart out = make_unassigned_chart(chart.map.mirrored(), chart.wheel_faces, chart.tile_type,
                                    chart.edge_labels);
  for (VertexId v = 0; v < chart.map.vertex_count(); ++v) {
    for (const Angle& a : chart.map.angles_around(v)) {
      const auto& k = chart.k_at(a);
      if (k) out.set_k({a.to, a.at, a.from}, *k);
    }
  }
  return out;
}

Chart apply_automorphism(const Chart& chart, const MapAutomorphism& h) {
  return transport_chart(chart, h, chart.map);
}

Chart transport_chart(const Chart& chart, const MapAutomorphism& iso,
                      const CombinatorialMap& target) {
  if (!is_automorphism(chart.map, iso) &&
      [&] {
        auto isos = find_isomorphisms(chart.map, target);
        return std::none_of(isos.begin(), isos.end(),
                            [&](const MapAutomorphism& m) { return m.image == iso.image; });
      }())
    fail(ErrorCode::not_automorphism, "mapping does not preserve the rotation system");

  Chart out = make_unassigned_chart(target, chart.wheel_faces, chart.tile_type,
                                    std::vector<LengthLabel>(
                                        static_cast<size_t>(target.edge_count()), LengthLabel::A));
  for (int e = 0; e < chart.map.edge_count(); ++e) {
    auto [u, v] = chart.map.edges()[static_cast<size_t>(e)];
    int te = target.edge_index(iso(u), iso(v));
    if (te < 0) fail(ErrorCode::not_automorphism, "edge image missing in target");
    out.edge_labels[static_cast<size_t>(te)] = chart.edge_labels[static_cast<size_t>(e)];
  }
  for (VertexId v = 0; v < chart.map.vertex_count(); ++v) {
    for (const Angle& a : chart.map.angles_around(v)) {
      const auto& k = chart.k_at(a);
      if (k) out.set_k({iso(a.from), iso(a.at), iso(a.to)}, *k);
    }
  }
  return out;
}

bool charts_equal(const Chart& x, const Chart& y) {
  if (!(x.map == y.map) || x.tile_type != y.tile_type) return false;
  if (x.edge_labels != y.edge_labels) return false;
  for (VertexId v = 0; v < x.map.vertex_count(); ++v)
    if (x.kvals[static_cast<size_t>(v)] != y.kvals[static_cast<size_t>(v)]) return false;
  return true;
}

bool equal_up_to_symmetry(const Chart& x, const Chart& y) {
  if (x.map.vertex_count() != y.map.vertex_count()) return false;
  for (const auto& h : find_isomorphisms(x.map, y.map))
    if (charts_equal(transport_chart(x, h, y.map), y)) return true;
  Chart mx = mirror_chart(x);
  for (const auto& h : find_isomorphisms(mx.map, y.map))
    if (charts_equal(transport_chart(mx, h, y.map), y)) return true;
  return false;
}

std::vector<PatternViolation> face_pattern_check(const Chart& chart) {
  std::vector<PatternViolation> out;
  TilePattern pat = TilePattern::of_type(chart.tile_type);
  for (const Face& face : chart.map.trace_faces()) {
    if (face.size() != 4) {
      out.push_back({face, "face is not a quadrangle"});
      continue;
    }
    std::array<std::optional<Symbol>, 4> corner;
    std::array<LengthLabel, 4> edge{};
    bool assigned = true;
    for (size_t i = 0; i < 4; ++i) {
      VertexId prev = face[(i + 3) % 4], at = face[i], next = face[(i + 1) % 4];
      const auto& k = chart.k_at({next, at, prev});
      if (!k || !k->single_symbol()) {
        assigned = false;
        break;
      }
      corner[i] = k->single_symbol();
      edge[i] = chart.label_of(at, next);
    }
    if (!assigned) {
      out.push_back({face, "face has unassigned or non-symbol corners"});
      continue;
    }
    bool matched = false;
    for (size_t r = 0; r < 4 && !matched; ++r) {
      bool ok = true;
      for (size_t i = 0; i < 4; ++i) {
        if (corner[i] != pat.corner[(i + r) % 4] || edge[i] != pat.edge_after[(i + r) % 4])
          ok = false;
      }
      matched = ok;
    }
    if (!matched)
      out.push_back({face, std::string("face does not match the type ") +
                               std::to_string(chart.tile_type) + " pattern"});
  }
  return out;
}

Chart canonical_chart(int faces) {
  if (faces % 6 != 0 || faces < 12)
    fail(ErrorCode::not_multiple_of_six, "the chart needs a face count divisible by six, >= 12");
  auto wheel = pseudo_double_wheel(faces);
  Chart chart = make_unassigned_chart(wheel.map(), faces, 2,
                                      alternating_length_assignment(faces));
  const AngleExpr A = AngleExpr::symbol(Symbol::alpha);
  const AngleExpr B = AngleExpr::symbol(Symbol::beta);
  const AngleExpr G = AngleExpr::symbol(Symbol::gamma);
  const AngleExpr D = AngleExpr::symbol(Symbol::delta);
  VertexId n = wheel.north(), s = wheel.south();
  auto r = [&wheel](int i) { return wheel.rim(i); };

  for (int p = 0; 6 * p < faces; ++p) {
    int b = 6 * p;
    // one six-vertex period of the rim
    chart.set_k({r(b - 1), r(b), r(b + 1)}, G);
    chart.set_k({r(b + 1), r(b), n}, D);
    chart.set_k({n, r(b), r(b - 1)}, A);

    chart.set_k({r(b + 2), r(b + 1), r(b)}, G);
    chart.set_k({r(b), r(b + 1), s}, D);
    chart.set_k({s, r(b + 1), r(b + 2)}, A);

    chart.set_k({r(b + 1), r(b + 2), r(b + 3)}, B);
    chart.set_k({r(b + 3), r(b + 2), n}, G);
    chart.set_k({n, r(b + 2), r(b + 1)}, B);

    chart.set_k({r(b + 4), r(b + 3), r(b + 2)}, D);
    chart.set_k({r(b + 2), r(b + 3), s}, G);
    chart.set_k({s, r(b + 3), r(b + 4)}, A);

    chart.set_k({r(b + 3), r(b + 4), r(b + 5)}, D);
    chart.set_k({r(b + 5), r(b + 4), n}, G);
    chart.set_k({n, r(b + 4), r(b + 3)}, A);

    chart.set_k({r(b + 6), r(b + 5), r(b + 4)}, B);
    chart.set_k({r(b + 4), r(b + 5), s}, G);
    chart.set_k({s, r(b + 5), r(b + 6)}, B);

    // the poles
    chart.set_k({r(b), n, r(b + 2)}, A);
    chart.set_k({r(b + 2), n, r(b + 4)}, B);
    chart.set_k({r(b + 4), n, r(b + 6)}, D);
    chart.set_k({r(b + 1), s, r(b - 1)}, A);
    chart.set_k({r(b - 1), s, r(b - 3)}, B);
    chart.set_k({r(b - 3), s, r(b - 5)}, D);
  }
  return chart;
}

}  // namespace stq
