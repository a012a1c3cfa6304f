#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stq/chart.hpp"
#include "stq/rational.hpp"

namespace stq {

// sum coeff[s]*s = pi_rhs * pi
struct LinearEquation {
  std::array<Rational, 4> coeff{};
  Rational pi_rhs{};

  bool operator==(const LinearEquation& o) const {
    return coeff == o.coeff && pi_rhs == o.pi_rhs;
  }
};

// Affine system over the four angle symbols with the implicit strict bounds
// 0 < symbol < 2pi. Exact arithmetic throughout; elimination is deterministic
// (pivots scanned delta, gamma, beta, alpha so that earlier symbols stay free,
// matching the parametric solution of the tiling).
class LinearSystem {
 public:
  LinearSystem() = default;
  explicit LinearSystem(std::vector<LinearEquation> eqs) : equations_(std::move(eqs)) {}

  void add(const LinearEquation& eq) { equations_.push_back(eq); }
  const std::vector<LinearEquation>& equations() const { return equations_; }

  // Reduced row echelon form; idempotent.
  LinearSystem reduced() const;

  bool operator==(const LinearSystem& o) const { return equations_ == o.equations_; }

 private:
  std::vector<LinearEquation> equations_;
};

// Solution of a system: per symbol, an affine expression in the free symbols
// (a pinned symbol has a constant expression).
struct AngleSolution {
  std::array<AngleExpr, 4> expr;
  std::array<bool, 4> free{};

  bool pinned(Symbol s) const { return !free[static_cast<size_t>(s)]; }
  const AngleExpr& of(Symbol s) const { return expr[static_cast<size_t>(s)]; }
  // Numeric values given an assignment of the free symbols.
  std::array<double, 4> evaluate(const std::array<double, 4>& free_values) const;
};

struct Unsolvable {
  std::string reason;
};

using SolveResult = std::variant<AngleSolution, Unsolvable>;

// One equation per vertex (vertex type = 2pi) plus the area equation
// alpha+beta+gamma+delta - 2pi = 4pi/F.
LinearSystem build_system(const Chart& chart, int faces);

LinearEquation area_equation(int faces);

// Reduce and check feasibility against the strict bounds. Infeasibility from
// a contradictory row or a pinned symbol outside (0, 2pi) is always detected;
// with a single free symbol the bounds are intersected exactly.
SolveResult solve_system(const LinearSystem& system);

enum class PredicateResult { satisfied, violated, undetermined };

// No inner angle equals its opposite: type 2 forbids beta=delta and
// alpha=gamma, type 4 forbids alpha=gamma.
PredicateResult lemma_opposite(int tile_type, const AngleSolution& sol);

// Type-4 charts admit no 3-valent vertex of type Z+2delta or Z+beta+delta.
PredicateResult lemma_forbidden_3valent(const Chart& chart);

// Type 2: alpha=delta iff beta=gamma; a solution forcing exactly one of the
// two equalities cannot be realized.
PredicateResult lemma_trapezoid(const AngleSolution& sol);

// If some vertex is incident only to three a-edges and some 3-valent vertex
// meets two a-edges and one b-edge, then alpha != delta and beta != gamma.
PredicateResult lemma_aux(const Chart& chart, const AngleSolution& sol);

// Numeric re-check of the same predicates at concrete symbol values.
PredicateResult lemma_opposite_numeric(int tile_type, const std::array<double, 4>& v, double tol);
PredicateResult lemma_trapezoid_numeric(const std::array<double, 4>& v, double tol);
PredicateResult lemma_aux_numeric(const Chart& chart, const std::array<double, 4>& v, double tol);

// gamma > pi at the solved values: the tile is concave.
bool concave_gamma(const AngleSolution& sol);

// Closed-form value with its double approximation.
struct GeometryValue {
  double radians = 0;
  std::optional<ClosedForm> exact;
};

// Solved geometry of the tiling for a given face count.
struct GeometrySolution {
  int faces = 12;
  GeometryValue a, b, alpha, beta, gamma, delta, phi;
  // Inner product between the second and third rim vertex when the rejected
  // longitude sign is used; equals cos a only for the accepted sign.
  double rejected_sign_dot = 0;
  std::optional<Surd> rejected_sign_dot_exact;

  std::array<double, 4> angle_values() const {
    return {alpha.radians, beta.radians, gamma.radians, delta.radians};
  }
};

struct NoSolution {
  std::string reason;
};

using GeometryResult = std::variant<GeometrySolution, NoSolution>;

// Closed-form geometric solve: cos a = -cos(8pi/F)/(1-cos(8pi/F)) must be
// positive, then b, alpha, delta and the longitude phi follow from the cosine
// theorem; the sign of phi is fixed by the inner-product consistency check.
// Requires F divisible by six and >= 12.
GeometryResult solve_geometry(int faces);

enum class TileTypeSelect { type2, type4, both };

struct EnumerationOptions {
  bool use_pruning = true;         // prune on partial infeasibility and lemmas
  bool geometry_filter = true;     // drop survivors whose geometry has no solution
  int max_faces = 24;              // search budget
};

struct SurvivingChart {
  Chart chart;
  AngleSolution solution;
  std::optional<GeometrySolution> geometry;
};

// Depth-first enumeration of all angle assignments obtained by placing the
// oriented tile pattern on every face (four rotations per face), filtered by
// edge-label compatibility, the vertex/area linear system with its bounds,
// and the pruning lemmas. With use_pruning=false every leaf of the rotation
// space is visited and the identical filter is applied at the leaves only
// (the brute-force oracle). Edge labels are constraints: B fixes length b, A
// means "not b" (an a edge for type 2, an a or c edge for type 4); surviving
// charts carry the refined labels.
std::vector<SurvivingChart> enumerate_charts(int faces, TileTypeSelect select,
                                             const std::vector<LengthLabel>& edge_labels,
                                             const EnumerationOptions& opts = {});

}  // namespace stq
