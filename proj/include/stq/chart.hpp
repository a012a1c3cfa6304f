#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "stq/map.hpp"
#include "stq/rational.hpp"

namespace stq {

// Symbolic edge length. The labels denote pairwise distinct values; the
// alternating assignment uses A and B, type-4 tiles additionally place C.
enum class LengthLabel { A, B, C };

char length_label_char(LengthLabel l);

// The four angle variables of the tile.
enum class Symbol { alpha = 0, beta = 1, gamma = 2, delta = 3 };

std::string symbol_name(Symbol s);

// Affine combination of the angle symbols with rational coefficients plus a
// rational multiple of pi; all arithmetic exact.
class AngleExpr {
 public:
  AngleExpr() = default;
  static AngleExpr symbol(Symbol s);
  static AngleExpr pi_times(Rational r);

  const Rational& coeff(Symbol s) const { return coeff_[static_cast<size_t>(s)]; }
  const Rational& pi_coeff() const { return pi_; }
  bool is_zero() const;
  bool is_constant() const;  // no symbol dependence
  std::optional<Symbol> single_symbol() const;

  AngleExpr operator+(const AngleExpr& o) const;
  AngleExpr operator-(const AngleExpr& o) const;
  AngleExpr operator*(const Rational& r) const;
  AngleExpr& operator+=(const AngleExpr& o) { return *this = *this + o; }
  bool operator==(const AngleExpr& o) const { return coeff_ == o.coeff_ && pi_ == o.pi_; }
  bool operator!=(const AngleExpr& o) const { return !(*this == o); }

  double evaluate(const std::array<double, 4>& values) const;
  std::string to_string() const;

 private:
  std::array<Rational, 4> coeff_{};
  Rational pi_{};
};

// Oriented per-face pattern of a tile type, in face-trace order: corner
// symbols and the edge label after each corner. Trace order runs opposite to
// the conventional (alpha, beta, gamma, delta) reading, hence the reversed
// spelling here.
struct TilePattern {
  int tile_type;
  std::array<Symbol, 4> corner;
  std::array<LengthLabel, 4> edge_after;

  // type 2: edge labels (a,a,a,b) with the b edge between delta and alpha;
  // type 4: edge labels (a,a,b,c) with beta between the two a edges and
  //         delta between the b and the c edge.
  static TilePattern of_type(int tile_type);
};

// A chart: a combinatorial map together with a length assignment on edges and
// an angle assignment K on the angles around every vertex (Def. 4 structure).
// K entries may be missing while a chart is being assembled.
struct Chart {
  CombinatorialMap map;
  int wheel_faces = 0;  // F of the underlying pseudo-double wheel, 0 if none
  int tile_type = 2;
  std::vector<LengthLabel> edge_labels;                      // by edge index
  std::vector<std::vector<std::optional<AngleExpr>>> kvals;  // [vertex][cyclic slot]

  const std::optional<AngleExpr>& k_at(const Angle& a) const;
  void set_k(const Angle& a, const AngleExpr& e);
  bool fully_assigned() const;
  LengthLabel label_of(VertexId u, VertexId v) const;
};

Chart make_unassigned_chart(const CombinatorialMap& map, int wheel_faces, int tile_type,
                            std::vector<LengthLabel> edge_labels);

// Alternating length assignment on pdw(F): the edges N v_{6i}, v_{6i+1} S and
// v_{6i+3} v_{6i+4} get B, everything else A. Consistent around the wheel only
// when F is a multiple of six.
std::vector<LengthLabel> alternating_length_assignment(int faces);

// Sum of K over the angles around v, simplified.
AngleExpr vertex_type(const Chart& chart, VertexId v);

// Mirror chart over the mirrored map: same lengths, reversed angles.
Chart mirror_chart(const Chart& chart);

// h(chart) = (map, L compose h^-1, K compose h^-1); h must be an automorphism.
Chart apply_automorphism(const Chart& chart, const MapAutomorphism& h);

// Transport a chart across an isomorphism iso: chart.map -> target.
Chart transport_chart(const Chart& chart, const MapAutomorphism& iso,
                      const CombinatorialMap& target);

bool charts_equal(const Chart& x, const Chart& y);

// Equality modulo all map automorphisms and the mirror.
bool equal_up_to_symmetry(const Chart& x, const Chart& y);

struct PatternViolation {
  Face face;
  std::string reason;
};

// Empty iff every face matches its tile-type pattern in some rotation.
std::vector<PatternViolation> face_pattern_check(const Chart& chart);

// The unique admissible chart for the alternating assignment, invariant under
// f and g: rim vertex types alternate between alpha+gamma+delta and
// 2*beta+gamma along each six-vertex period, and alpha, beta, delta cycle
// around both poles. Defined for F divisible by six, F >= 12.
Chart canonical_chart(int faces = 12);

}  // namespace stq
