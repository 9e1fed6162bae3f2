#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "keller/core/algebraic.hpp"
#include "keller/core/multipoly.hpp"
#include "keller/core/number_field.hpp"
#include "keller/pencil/pencil.hpp"

namespace keller {

// Chart polynomials live in (u, v, a): two local coordinates and the
// generator a of the chart's number field, reduced modulo its modulus.
inline const std::vector<std::string> kChartVars{"u", "v", "a"};

enum class ValueKind { Zero, Infinity, Finite, NonConstant };
enum class TypeLabel { I, IIa, IIb, IIc, NotHorizontal };
const char* to_string(ValueKind k);
const char* to_string(TypeLabel t);

// A point in a named chart, coordinates in one common field.
struct AlgebraicPoint {
  std::string chart;
  FieldPtr field;
  KElem u, v;
  int orbit_size = 1;  // number of conjugate points represented
  std::string field_string() const;  // modulus of the field in "a", or "1"
  std::vector<AlgebraicNumber> embedded() const;  // (u, v) under the first embedding
  std::string to_string() const;
};

// A pencil section pair num/den on a chart with the common power of the
// chart's boundary coordinate removed: raw = (num, den) * w^divided.
struct SectionPair {
  MultiPoly num, den;
  MultiPoly raw_num, raw_den;
  int divided = 0;
};

enum class PairKind { G = 0, P = 1, Q = 2 };

struct Chart {
  enum class Scope { Affine, Axis, Origin };
  int id = 0;
  std::string name;
  int parent_blowup = -1;
  int generation = 0;
  FieldPtr field;
  Scope scope = Scope::Affine;
  int boundary_var = -1;  // variable whose power is ledgered (-1 in the affine chart)
  std::array<SectionPair, 3> pairs;
  std::vector<std::pair<int, MultiPoly>> components;  // divisor components visible here
  int over_base_point = -1;                            // -1: over infinity
};

struct DivisorComponent {
  int id = 0;
  bool line_at_infinity = false;
  int created_by = -1;   // blow-up index
  int base_point = -1;   // affine base point orbit, -1 over infinity
  int weight = 1;        // conjugate copies represented
  std::string field;     // field of definition, "1" for Q
  bool g_constant = false;
  std::optional<PencilParam> lambda;  // fibre containing the component
  ValueKind p_value = ValueKind::NonConstant, q_value = ValueKind::NonConstant;
  std::string p_constant, q_constant;  // minimal polynomial of a Finite value
  TypeLabel type = TypeLabel::NotHorizontal;
  bool dicritical = false;
  int deg_p = 0, deg_q = 0;  // degrees of p_l, q_l as maps to P^1
  MultiPoly image;           // dicritical: rational-irreducible equation in (u, v)
  bool image_line_through_origin = false;
  bool horizontal() const { return !g_constant; }
  bool over_infinity() const { return base_point < 0; }
};

struct BlowupRecord {
  int index = 0;
  int generation = 0;
  AlgebraicPoint center;
  int component = 0;
  std::array<int, 3> divided_first{}, divided_second{};  // ledger per pair in the two charts
};

struct ResolveOptions {
  int max_blowups = 64;
  int cap = kDefaultDegreeCap;
  bool reverse_order = false;  // depth-first, last center first
};

struct BasePoints {
  std::vector<AlgebraicPoint> affine;       // one per conjugate orbit
  std::vector<AlgebraicPoint> at_infinity;  // one per conjugate orbit
};

// Indeterminacy points of (P : Q) on P^2 (InfiniteBaseLocus if P, Q share a factor).
BasePoints base_points(const PencilMap& f, int cap = kDefaultDegreeCap);

struct LambdaCount {
  PencilParam lambda;
  int m_lambda = 0;  // components in the fibre of one member of the orbit
};

struct ResolutionTree {
  BasePoints base;
  std::vector<BlowupRecord> blowups;
  std::vector<DivisorComponent> components;
  std::vector<std::pair<int, int>> edges;
  int h_infinity = 0;
  std::vector<int> h_b;  // per affine base point (one entry per orbit)
  int h_G = 0;
  int m = 0;
  std::vector<LambdaCount> m_lambda;
};

// The surface being resolved: charts with pending indeterminacy points.
class WorkingSurface {
public:
  struct Center {
    int chart = 0;
    Extension ext;  // field of the center over the chart field
    KElem u0, v0;
    AlgebraicPoint point;
    int base_point = -1;  // affine base point orbit, for centers in the affine chart
  };

  explicit WorkingSurface(const PencilMap& f, ResolveOptions opts = {});

  const std::vector<Chart>& charts() const { return charts_; }
  const std::vector<DivisorComponent>& components() const { return comps_; }
  const std::vector<BlowupRecord>& blowups() const { return blowups_; }

  // Current indeterminacy points in processing order.
  std::vector<Center> indeterminacy_points() const;
  bool base_point_free() const;
  // Throws NotIndeterminate when G is defined at the center.
  void blowup_once(const Center& c);
  ResolutionTree finish() const;

private:
  void add_chart(Chart c);
  void classify(DivisorComponent& d, const Chart& c, int var) const;

  PencilMap f_;
  ResolveOptions opts_;
  BasePoints base_;
  std::vector<int> base_orbit_size_;
  std::vector<Chart> charts_;
  std::vector<std::vector<Center>> pending_;
  std::vector<DivisorComponent> comps_;
  std::vector<BlowupRecord> blowups_;
  std::vector<std::pair<int, int>> edges_;
};

// Blows up every indeterminacy point until (P : Q) is a morphism.
// Throws BlowupBudgetExceeded and DegreeCapError.
ResolutionTree resolve_pencil(const PencilMap& f, ResolveOptions opts = {});

struct FiberCounts {
  int m = 0;
  int h_G = 0;
  std::vector<LambdaCount> m_lambda;
  int sum_m_lambda = 0;  // over all lambda, conjugates included
  bool balanced = false; // sum_m_lambda + h_G == m
};
FiberCounts fiber_component_counts(const ResolutionTree& t);

struct SuzukiCheck {
  int left = 0;   // sum over lambda of chi(C_lambda) - chi(C)
  int right = 0;  // chi(X) - 2 chi(C)
  bool pass = false;
};
// Needs a certified irreducible rational generic member (HypothesisNotCertified).
SuzukiCheck euler_bookkeeping(const ResolutionTree& t, const PencilProfile& profile);

std::string dual_graph_dot(const ResolutionTree& t);
std::string dual_graph_json(const ResolutionTree& t);

}  // namespace keller
