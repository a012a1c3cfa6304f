#include "stq/solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace stq {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Pivot preference: delta first, alpha last, so the parametric solution keeps
// the earlier symbols free (delta = 8pi/F - alpha with alpha free).
constexpr int kPivotOrder[4] = {3, 2, 1, 0};

}  // namespace

LinearSystem LinearSystem::reduced() const {
  std::vector<LinearEquation> rows = equations_;
  std::vector<int> pivot_row_of_col(4, -1);
  std::vector<bool> used(rows.size(), false);

  for (int col : kPivotOrder) {
    int pivot = -1;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (!used[r] && !rows[r].coeff[static_cast<size_t>(col)].is_zero()) {
        pivot = static_cast<int>(r);
        break;
      }
    }
    if (pivot < 0) continue;
    used[static_cast<size_t>(pivot)] = true;
    pivot_row_of_col[static_cast<size_t>(col)] = pivot;
    LinearEquation& p = rows[static_cast<size_t>(pivot)];
    Rational inv = Rational(1) / p.coeff[static_cast<size_t>(col)];
    for (auto& c : p.coeff) c *= inv;
    p.pi_rhs *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == pivot) continue;
      Rational f = rows[r].coeff[static_cast<size_t>(col)];
      if (f.is_zero()) continue;
      for (size_t j = 0; j < 4; ++j)
        rows[r].coeff[j] -= p.coeff[j] * f;
      rows[r].pi_rhs -= p.pi_rhs * f;
    }
  }

  std::vector<LinearEquation> out;
  bool contradiction = false;
  for (const auto& row : rows) {
    bool zero = std::all_of(row.coeff.begin(), row.coeff.end(),
                            [](const Rational& c) { return c.is_zero(); });
    if (zero && !row.pi_rhs.is_zero()) contradiction = true;
  }
  if (contradiction) {
    out.push_back({{Rational(0), Rational(0), Rational(0), Rational(0)}, Rational(1)});
    return LinearSystem(std::move(out));
  }
  for (int col : kPivotOrder)
    if (pivot_row_of_col[static_cast<size_t>(col)] >= 0)
      out.push_back(rows[static_cast<size_t>(pivot_row_of_col[static_cast<size_t>(col)])]);
  return LinearSystem(std::move(out));
}

std::array<double, 4> AngleSolution::evaluate(const std::array<double, 4>& free_values) const {
  std::array<double, 4> out{};
  for (size_t i = 0; i < 4; ++i) out[i] = expr[i].evaluate(free_values);
  return out;
}

LinearEquation area_equation(int faces) {
  return {{Rational(1), Rational(1), Rational(1), Rational(1)},
          Rational(2) + Rational(4, faces)};
}

LinearSystem build_system(const Chart& chart, int faces) {
  LinearSystem sys;
  for (VertexId v = 0; v < chart.map.vertex_count(); ++v) {
    AngleExpr t = vertex_type(chart, v);
    LinearEquation eq;
    for (size_t s = 0; s < 4; ++s) eq.coeff[s] = t.coeff(static_cast<Symbol>(s));
    eq.pi_rhs = Rational(2) - t.pi_coeff();
    sys.add(eq);
  }
  sys.add(area_equation(faces));
  return sys;
}

SolveResult solve_system(const LinearSystem& system) {
  LinearSystem red = system.reduced();

  AngleSolution sol;
  for (size_t s = 0; s < 4; ++s) {
    sol.expr[s] = AngleExpr::symbol(static_cast<Symbol>(s));
    sol.free[s] = true;
  }
  for (const auto& row : red.equations()) {
    bool zero = std::all_of(row.coeff.begin(), row.coeff.end(),
                            [](const Rational& c) { return c.is_zero(); });
    if (zero) return Unsolvable{"contradictory equations"};
    int col = -1;
    for (int c : kPivotOrder)
      if (!row.coeff[static_cast<size_t>(c)].is_zero()) {
        col = c;
        break;
      }
    AngleExpr e = AngleExpr::pi_times(row.pi_rhs);
    for (size_t j = 0; j < 4; ++j) {
      if (static_cast<int>(j) == col) continue;
      if (!row.coeff[j].is_zero())
        e += AngleExpr::symbol(static_cast<Symbol>(j)) * (-row.coeff[j]);
    }
    sol.expr[static_cast<size_t>(col)] = e;
    sol.free[static_cast<size_t>(col)] = false;
  }

  // Bounds 0 < symbol < 2pi. Work in units of pi.
  std::vector<size_t> frees;
  for (size_t s = 0; s < 4; ++s)
    if (sol.free[s]) frees.push_back(s);

  for (size_t s = 0; s < 4; ++s) {
    if (sol.free[s]) continue;
    const AngleExpr& e = sol.expr[s];
    if (e.is_constant()) {
      if (e.pi_coeff() <= Rational(0) || e.pi_coeff() >= Rational(2))
        return Unsolvable{symbol_name(static_cast<Symbol>(s)) + " = " +
                          e.pi_coeff().to_string() + "*pi violates 0 < angle < 2pi"};
    } else {
      Rational lo = e.pi_coeff(), hi = e.pi_coeff();
      for (size_t j = 0; j < 4; ++j) {
        Rational c = e.coeff(static_cast<Symbol>(j));
        if (c.sign() > 0)
          hi += c * Rational(2);
        else if (c.sign() < 0)
          lo += c * Rational(2);
      }
      if (hi <= Rational(0) || lo >= Rational(2))
        return Unsolvable{symbol_name(static_cast<Symbol>(s)) + " cannot meet 0 < angle < 2pi"};
    }
  }

  if (frees.size() == 1) {
    // Exact interval intersection for the single free symbol t in (0, 2pi).
    size_t t = frees[0];
    Rational lo(0), hi(2);
    for (size_t s = 0; s < 4; ++s) {
      if (sol.free[s]) continue;
      const AngleExpr& e = sol.expr[s];
      Rational c1 = e.coeff(static_cast<Symbol>(t));
      if (c1.is_zero()) continue;
      Rational l = (Rational(0) - e.pi_coeff()) / c1;
      Rational h = (Rational(2) - e.pi_coeff()) / c1;
      if (c1.sign() < 0) std::swap(l, h);
      lo = std::max(lo, l);
      hi = std::min(hi, h);
    }
    if (lo >= hi)
      return Unsolvable{"bounds on " + symbol_name(static_cast<Symbol>(t)) + " are empty"};
  }
  return sol;
}

namespace {

enum class Relation { equal, distinct, undetermined };

Relation relation(const AngleSolution& sol, Symbol x, Symbol y) {
  AngleExpr d = sol.of(x) - sol.of(y);
  if (d.is_zero()) return Relation::equal;
  if (d.is_constant()) return Relation::distinct;
  return Relation::undetermined;
}

Relation relation_numeric(double x, double y, double tol) {
  return std::abs(x - y) <= tol ? Relation::equal : Relation::distinct;
}

PredicateResult require_distinct(std::initializer_list<Relation> rels) {
  bool undet = false;
  for (Relation r : rels) {
    if (r == Relation::equal) return PredicateResult::violated;
    if (r == Relation::undetermined) undet = true;
  }
  return undet ? PredicateResult::undetermined : PredicateResult::satisfied;
}

}  // namespace

PredicateResult lemma_opposite(int tile_type, const AngleSolution& sol) {
  if (tile_type == 2)
    return require_distinct({relation(sol, Symbol::beta, Symbol::delta),
                             relation(sol, Symbol::alpha, Symbol::gamma)});
  return require_distinct({relation(sol, Symbol::alpha, Symbol::gamma)});
}

PredicateResult lemma_forbidden_3valent(const Chart& chart) {
  if (chart.tile_type != 4) return PredicateResult::satisfied;
  for (VertexId v = 0; v < chart.map.vertex_count(); ++v) {
    if (chart.map.degree(v) != 3) continue;
    int deltas = 0, betas = 0;
    bool complete = true;
    for (const auto& k : chart.kvals[static_cast<size_t>(v)]) {
      if (!k || !k->single_symbol()) {
        complete = false;
        break;
      }
      Symbol s = *k->single_symbol();
      deltas += s == Symbol::delta;
      betas += s == Symbol::beta;
    }
    if (!complete) continue;
    if (deltas >= 2) return PredicateResult::violated;           // Z + 2 delta
    if (deltas >= 1 && betas >= 1) return PredicateResult::violated;  // Z + beta + delta
  }
  return PredicateResult::satisfied;
}

PredicateResult lemma_trapezoid(const AngleSolution& sol) {
  Relation ad = relation(sol, Symbol::alpha, Symbol::delta);
  Relation bg = relation(sol, Symbol::beta, Symbol::gamma);
  if (ad == Relation::undetermined || bg == Relation::undetermined)
    return PredicateResult::undetermined;
  return ad == bg ? PredicateResult::satisfied : PredicateResult::violated;
}

namespace {

bool lemma_aux_hypotheses(const Chart& chart) {
  bool all_a_vertex = false, mixed_vertex = false;
  for (VertexId v = 0; v < chart.map.vertex_count(); ++v) {
    if (chart.map.degree(v) != 3) continue;
    int a = 0, b = 0;
    for (VertexId u : chart.map.neighbors(v)) {
      LengthLabel l = chart.label_of(v, u);
      a += l == LengthLabel::A;
      b += l == LengthLabel::B;
    }
    if (a == 3) all_a_vertex = true;
    if (a == 2 && b == 1) mixed_vertex = true;
  }
  return all_a_vertex && mixed_vertex;
}

}  // namespace

PredicateResult lemma_aux(const Chart& chart, const AngleSolution& sol) {
  if (chart.tile_type != 2) return PredicateResult::satisfied;
  if (!lemma_aux_hypotheses(chart)) return PredicateResult::satisfied;
  return require_distinct({relation(sol, Symbol::alpha, Symbol::delta),
                           relation(sol, Symbol::beta, Symbol::gamma)});
}

PredicateResult lemma_opposite_numeric(int tile_type, const std::array<double, 4>& v,
                                       double tol) {
  auto idx = [](Symbol s) { return static_cast<size_t>(s); };
  if (tile_type == 2)
    return require_distinct(
        {relation_numeric(v[idx(Symbol::beta)], v[idx(Symbol::delta)], tol),
         relation_numeric(v[idx(Symbol::alpha)], v[idx(Symbol::gamma)], tol)});
  return require_distinct(
      {relation_numeric(v[idx(Symbol::alpha)], v[idx(Symbol::gamma)], tol)});
}

PredicateResult lemma_trapezoid_numeric(const std::array<double, 4>& v, double tol) {
  Relation ad = relation_numeric(v[0], v[3], tol);
  Relation bg = relation_numeric(v[1], v[2], tol);
  return ad == bg ? PredicateResult::satisfied : PredicateResult::violated;
}

PredicateResult lemma_aux_numeric(const Chart& chart, const std::array<double, 4>& v,
                                  double tol) {
  if (chart.tile_type != 2 || !lemma_aux_hypotheses(chart)) return PredicateResult::satisfied;
  return require_distinct(
      {relation_numeric(v[0], v[3], tol), relation_numeric(v[1], v[2], tol)});
}

bool concave_gamma(const AngleSolution& sol) {
  const AngleExpr& g = sol.of(Symbol::gamma);
  return g.is_constant() && g.pi_coeff() > Rational(1);
}

namespace {

// cos(p*pi/q) for the handful of exact values the geometry needs.
std::optional<Surd> exact_cos(long long p, long long q) {
  Rational f(p, q);
  p = f.num();
  q = f.den();
  auto table = [&]() -> std::optional<Surd> {
    if (q == 1 && p == 0) return Surd(Rational(1));
    if (q == 1 && p == 1) return Surd(Rational(-1));
    if (q == 2) return Surd(Rational(0));
    if (q == 3 && p == 1) return Surd(Rational(1, 2));
    if (q == 3 && p == 2) return Surd(Rational(-1, 2));
    if (q == 4 && p == 1) return Surd(Rational(1, 2), 2);
    if (q == 4 && p == 3) return Surd(Rational(-1, 2), 2);
    if (q == 6 && p == 1) return Surd(Rational(1, 2), 3);
    if (q == 6 && p == 5) return Surd(Rational(-1, 2), 3);
    return std::nullopt;
  };
  return table();
}

Surd surd_div(const Surd& num, const Surd& den) {
  if (den.is_zero()) fail(ErrorCode::invalid_argument, "surd division by zero");
  // 1/(r*sqrt(k)) = sqrt(k)/(r*k)
  Surd inv(Rational(1) / (den.coeff() * Rational(den.root())), den.root());
  return num * inv;
}

Surd surd_complement_sqrt(const Surd& cosine) {
  // sqrt(1 - cosine^2); the square is rational by construction
  return surd_sqrt(Rational(1) - cosine.squared_rational());
}

}  // namespace

GeometryResult solve_geometry(int faces) {
  if (faces % 6 != 0 || faces < 12)
    fail(ErrorCode::not_multiple_of_six, "face count must be a multiple of six, at least 12");

  double c8_num = std::cos(8 * kPi / faces);
  double cos_a_num = -c8_num / (1 - c8_num);
  if (cos_a_num <= 1e-12)
    return NoSolution{"cos a <= 0 at F = " + std::to_string(faces)};

  // A positive cos a needs cos(8pi/F) < 0, i.e. F < 16; among multiples of six
  // that is F = 12 alone, where every value has an exact closed form.
  std::optional<Surd> c8 = exact_cos(8, faces);
  std::optional<Surd> c4 = exact_cos(4, faces);
  GeometrySolution g;
  g.faces = faces;
  g.beta.exact = ClosedForm::pi_multiple(Rational(4, faces));
  g.gamma.exact = ClosedForm::pi_multiple(Rational(2) - Rational(8, faces));
  g.beta.radians = g.beta.exact->value();
  g.gamma.radians = g.gamma.exact->value();

  if (c8 && c8->is_rational() && c4 && c4->is_rational()) {
    Rational c8r = c8->coeff();
    Rational cos_a = -c8r / (Rational(1) - c8r);
    Surd sin_a = surd_sqrt(Rational(1) - cos_a * cos_a);
    Rational cos_v24 = cos_a * cos_a + (Rational(1) - cos_a * cos_a) * c4->coeff();
    Rational cos_b = -cos_v24;
    Surd sin_b = surd_sqrt(Rational(1) - cos_b * cos_b);

    // cos(pi - a) = cos b cos a + sin b sin a cos alpha
    Surd cos_alpha = surd_div(Surd(-cos_a - cos_b * cos_a), sin_a * sin_b);
    Surd sin_alpha = surd_complement_sqrt(cos_alpha);
    Surd s8 = surd_complement_sqrt(*c8);
    Surd cos_delta = *c8 * cos_alpha + s8 * sin_alpha;

    // cos a = cos b cos(pi-b) + sin b sin(pi-b) cos phi
    Rational cos_phi_r = (cos_a + cos_b * cos_b) / (Rational(1) - cos_b * cos_b);
    Surd cos_phi(cos_phi_r);
    Surd sin_phi = surd_complement_sqrt(cos_phi);

    // Longitude sign: with phi measured along the cyclic order at the north
    // pole, the inner product of the second and third rim vertex equals cos a;
    // the rejected sign produces a different value and is the contradiction
    // that pins phi.
    Surd cos_am = cos_alpha * cos_phi + sin_alpha * sin_phi;  // cos(alpha - phi)
    Surd cos_ap = cos_alpha * cos_phi - sin_alpha * sin_phi;  // cos(alpha + phi)
    Surd dot_accept = sin_b * sin_a * cos_am + Surd(-cos_b * cos_a);
    Surd dot_reject = sin_b * sin_a * cos_ap + Surd(-cos_b * cos_a);
    if (!(dot_accept.is_rational() && dot_accept.coeff() == cos_a))
      return NoSolution{"longitude sign check does not reproduce cos a"};
    g.rejected_sign_dot_exact = dot_reject;
    g.rejected_sign_dot = dot_reject.to_double();

    g.a.exact = ClosedForm::acos_of(Surd(cos_a));
    g.b.exact = ClosedForm::acos_of(Surd(cos_b));
    g.alpha.exact = ClosedForm::acos_of(cos_alpha);
    g.delta.exact = ClosedForm::acos_of(cos_delta);
    g.phi.exact = ClosedForm::acos_of(Surd(cos_phi_r));
    g.a.radians = g.a.exact->value();
    g.b.radians = g.b.exact->value();
    g.alpha.radians = g.alpha.exact->value();
    g.delta.radians = g.delta.exact->value();
    g.phi.radians = g.phi.exact->value();
    return g;
  }

  // Numeric fallback (unreached for admissible face counts; kept for safety).
  double cos_a = cos_a_num;
  double sin_a = std::sqrt(1 - cos_a * cos_a);
  double cos_v24 = cos_a * cos_a + (1 - cos_a * cos_a) * std::cos(4 * kPi / faces);
  double cos_b = -cos_v24;
  double sin_b = std::sqrt(1 - cos_b * cos_b);
  double cos_alpha = (-cos_a - cos_b * cos_a) / (sin_a * sin_b);
  if (std::abs(cos_alpha) > 1) return NoSolution{"no admissible alpha"};
  g.a.radians = std::acos(cos_a);
  g.b.radians = std::acos(cos_b);
  g.alpha.radians = std::acos(cos_alpha);
  g.delta.radians = 8 * kPi / faces - g.alpha.radians;
  double cos_phi = (cos_a + cos_b * cos_b) / (1 - cos_b * cos_b);
  if (std::abs(cos_phi) > 1) return NoSolution{"no admissible phi"};
  g.phi.radians = std::acos(cos_phi);
  double ap = g.alpha.radians + g.phi.radians;
  g.rejected_sign_dot = sin_b * sin_a * std::cos(ap) - cos_b * cos_a;
  return g;
}

namespace {

struct FaceSlots {
  std::array<VertexId, 4> cycle;
  std::array<Angle, 4> corner;   // angle at cycle[i]
  std::array<int, 4> edge;       // edge index between cycle[i] and cycle[i+1]
};

struct EnumerationSpace {
  PseudoDoubleWheel wheel;
  std::vector<FaceSlots> faces;
  std::vector<LengthLabel> input_labels;
};

// Faces ordered interleaved around the wheel: the face whose rim run starts
// at rim index r gets key r, so northern and southern faces alternate.
EnumerationSpace build_space(int F, const std::vector<LengthLabel>& labels) {
  EnumerationSpace sp{pseudo_double_wheel(F), {}, labels};
  const auto& m = sp.wheel.map();
  if (static_cast<int>(labels.size()) != m.edge_count())
    fail(ErrorCode::invalid_argument, "one input label per edge required");
  std::vector<std::pair<int, FaceSlots>> keyed;
  for (const Face& f : m.trace_faces()) {
    FaceSlots fs;
    std::copy(f.begin(), f.end(), fs.cycle.begin());
    std::vector<int> rims;
    for (VertexId v : f)
      if (sp.wheel.is_rim(v)) rims.push_back(v);
    int key = -1;
    for (int r : rims) {
      bool run = std::count(rims.begin(), rims.end(), (r + 1) % F) &&
                 std::count(rims.begin(), rims.end(), (r + 2) % F);
      if (run) key = r;
    }
    if (key < 0) fail(ErrorCode::inconsistent_rotation_system, "face without a rim run");
    for (size_t i = 0; i < 4; ++i) {
      VertexId prev = fs.cycle[(i + 3) % 4], at = fs.cycle[i], next = fs.cycle[(i + 1) % 4];
      fs.corner[i] = {next, at, prev};
      fs.edge[i] = m.edge_index(at, next);
    }
    keyed.push_back({key, fs});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [k, fs] : keyed) sp.faces.push_back(fs);
  return sp;
}

// Input labels are constraints: B fixes length b, A stands for "not b" (the
// assumption on the assignment), C fixes length c.
bool label_compatible(LengthLabel input, LengthLabel pattern, int tile_type) {
  switch (pattern) {
    case LengthLabel::B: return input == LengthLabel::B;
    case LengthLabel::A: return input == LengthLabel::A;
    case LengthLabel::C:
      return tile_type == 4 && (input == LengthLabel::A || input == LengthLabel::C);
  }
  return false;
}

struct SearchState {
  std::vector<int> rot;                        // per face, -1 while unplaced
  std::vector<LengthLabel> edge_label;         // refined labels
  std::vector<int> edge_uses;
  std::vector<std::vector<std::optional<Symbol>>> sym;  // [vertex][slot]
  std::vector<int> vertex_missing;
};

Chart state_to_chart(const EnumerationSpace& sp, int tile_type, const SearchState& st) {
  Chart chart = make_unassigned_chart(sp.wheel.map(), sp.wheel.faces(), tile_type,
                                      st.edge_label);
  for (VertexId v = 0; v < sp.wheel.map().vertex_count(); ++v)
    for (size_t j = 0; j < st.sym[static_cast<size_t>(v)].size(); ++j)
      if (st.sym[static_cast<size_t>(v)][j])
        chart.kvals[static_cast<size_t>(v)][j] =
            AngleExpr::symbol(*st.sym[static_cast<size_t>(v)][j]);
  return chart;
}

std::optional<SurvivingChart> leaf_filter(const EnumerationSpace& sp, int tile_type,
                                          const SearchState& st,
                                          const EnumerationOptions& opts) {
  Chart chart = state_to_chart(sp, tile_type, st);
  SolveResult res = solve_system(build_system(chart, sp.wheel.faces()));
  if (std::holds_alternative<Unsolvable>(res)) return std::nullopt;
  AngleSolution sol = std::get<AngleSolution>(res);

  if (lemma_opposite(tile_type, sol) == PredicateResult::violated) return std::nullopt;
  if (lemma_forbidden_3valent(chart) == PredicateResult::violated) return std::nullopt;
  if (tile_type == 2 && lemma_trapezoid(sol) == PredicateResult::violated) return std::nullopt;
  if (lemma_aux(chart, sol) == PredicateResult::violated) return std::nullopt;

  SurvivingChart out{std::move(chart), sol, std::nullopt};
  if (opts.geometry_filter) {
    GeometryResult geo = solve_geometry(sp.wheel.faces());
    if (std::holds_alternative<NoSolution>(geo)) return std::nullopt;
    const auto& g = std::get<GeometrySolution>(geo);
    std::array<double, 4> values = sol.evaluate(g.angle_values());
    for (double v : values)
      if (!(v > 1e-9 && v < 2 * kPi - 1e-9)) return std::nullopt;
    double tol = 1e-9;
    if (lemma_opposite_numeric(tile_type, values, tol) == PredicateResult::violated)
      return std::nullopt;
    if (tile_type == 2 &&
        lemma_trapezoid_numeric(values, tol) == PredicateResult::violated)
      return std::nullopt;
    if (lemma_aux_numeric(out.chart, values, tol) == PredicateResult::violated)
      return std::nullopt;
    out.geometry = g;
  }
  return out;
}

class Enumerator {
 public:
  Enumerator(const EnumerationSpace& sp, int tile_type, const EnumerationOptions& opts)
      : sp_(sp), type_(tile_type), pat_(TilePattern::of_type(tile_type)), opts_(opts) {
    const auto& m = sp.wheel.map();
    st_.rot.assign(sp.faces.size(), -1);
    st_.edge_label.assign(static_cast<size_t>(m.edge_count()), LengthLabel::A);
    st_.edge_uses.assign(static_cast<size_t>(m.edge_count()), 0);
    st_.sym.resize(static_cast<size_t>(m.vertex_count()));
    st_.vertex_missing.resize(static_cast<size_t>(m.vertex_count()));
    for (VertexId v = 0; v < m.vertex_count(); ++v) {
      st_.sym[static_cast<size_t>(v)].assign(static_cast<size_t>(m.degree(v)), std::nullopt);
      st_.vertex_missing[static_cast<size_t>(v)] = m.degree(v);
    }
  }

  std::vector<SurvivingChart> run() {
    if (opts_.use_pruning)
      dfs(0);
    else
      exhaustive();
    return std::move(found_);
  }

 private:
  bool try_place(size_t fi, int rot) {
    const FaceSlots& f = sp_.faces[fi];
    for (size_t i = 0; i < 4; ++i) {
      LengthLabel p = pat_.edge_after[(i + static_cast<size_t>(rot)) % 4];
      int e = f.edge[i];
      if (!label_compatible(sp_.input_labels[static_cast<size_t>(e)], p, type_)) return false;
      if (st_.edge_uses[static_cast<size_t>(e)] > 0 &&
          st_.edge_label[static_cast<size_t>(e)] != p)
        return false;
    }
    for (size_t i = 0; i < 4; ++i) {
      int e = f.edge[i];
      st_.edge_label[static_cast<size_t>(e)] =
          pat_.edge_after[(i + static_cast<size_t>(rot)) % 4];
      ++st_.edge_uses[static_cast<size_t>(e)];
      const Angle& a = f.corner[i];
      int slot = sp_.wheel.map().angle_index(a);
      st_.sym[static_cast<size_t>(a.at)][static_cast<size_t>(slot)] =
          pat_.corner[(i + static_cast<size_t>(rot)) % 4];
      --st_.vertex_missing[static_cast<size_t>(a.at)];
    }
    st_.rot[fi] = rot;
    return true;
  }

  void unplace(size_t fi) {
    const FaceSlots& f = sp_.faces[fi];
    for (size_t i = 0; i < 4; ++i) {
      int e = f.edge[i];
      --st_.edge_uses[static_cast<size_t>(e)];
      const Angle& a = f.corner[i];
      int slot = sp_.wheel.map().angle_index(a);
      st_.sym[static_cast<size_t>(a.at)][static_cast<size_t>(slot)] = std::nullopt;
      ++st_.vertex_missing[static_cast<size_t>(a.at)];
    }
    st_.rot[fi] = -1;
  }

  bool partial_feasible() {
    LinearSystem sys;
    for (VertexId v = 0; v < sp_.wheel.map().vertex_count(); ++v) {
      if (st_.vertex_missing[static_cast<size_t>(v)] != 0) continue;
      LinearEquation eq;
      for (const auto& s : st_.sym[static_cast<size_t>(v)])
        eq.coeff[static_cast<size_t>(*s)] += Rational(1);
      eq.pi_rhs = Rational(2);
      sys.add(eq);
      if (type_ == 4 && sp_.wheel.map().degree(v) == 3) {
        int deltas = 0, betas = 0;
        for (const auto& s : st_.sym[static_cast<size_t>(v)]) {
          deltas += *s == Symbol::delta;
          betas += *s == Symbol::beta;
        }
        if (deltas >= 2 || (deltas >= 1 && betas >= 1)) return false;
      }
    }
    sys.add(area_equation(sp_.wheel.faces()));
    return !std::holds_alternative<Unsolvable>(solve_system(sys));
  }

  void dfs(size_t fi) {
    if (fi == sp_.faces.size()) {
      if (auto hit = leaf_filter(sp_, type_, st_, opts_)) found_.push_back(std::move(*hit));
      return;
    }
    for (int rot = 0; rot < 4; ++rot) {
      if (!try_place(fi, rot)) continue;
      if (partial_feasible()) dfs(fi + 1);
      unplace(fi);
    }
  }

  // Brute-force oracle: every leaf of the 4^F rotation space is visited and
  // judged by the same definitional and lemma filters, with no pruning of the
  // walk itself.
  void exhaustive() {
    size_t nf = sp_.faces.size();
    std::vector<int> rots(nf, 0);
    while (true) {
      size_t placed = 0;
      while (placed < nf && try_place(placed, rots[placed])) ++placed;
      if (placed == nf) {
        if (auto hit = leaf_filter(sp_, type_, st_, opts_)) found_.push_back(std::move(*hit));
      }
      while (placed-- > 0) unplace(placed);
      size_t d = nf;
      bool carry = true;
      while (d > 0 && carry) {
        --d;
        carry = ++rots[d] == 4;
        if (carry) rots[d] = 0;
      }
      if (carry) break;
    }
  }

  const EnumerationSpace& sp_;
  int type_;
  TilePattern pat_;
  EnumerationOptions opts_;
  SearchState st_;
  std::vector<SurvivingChart> found_;
};

}  // namespace

std::vector<SurvivingChart> enumerate_charts(int faces, TileTypeSelect select,
                                             const std::vector<LengthLabel>& edge_labels,
                                             const EnumerationOptions& opts) {
  if (faces % 6 != 0 || faces < 12)
    fail(ErrorCode::not_multiple_of_six, "face count must be a multiple of six, at least 12");
  if (faces > opts.max_faces)
    fail(ErrorCode::search_space_exceeded,
         "face count exceeds the search budget of " + std::to_string(opts.max_faces));
  EnumerationSpace sp = build_space(faces, edge_labels);
  std::vector<SurvivingChart> out;
  if (select != TileTypeSelect::type4) {
    auto part = Enumerator(sp, 2, opts).run();
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  if (select != TileTypeSelect::type2) {
    auto part = Enumerator(sp, 4, opts).run();
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace stq
