#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "keller/core/multipoly.hpp"
#include "keller/core/number_field.hpp"
#include "keller/pencil/rationality.hpp"

namespace keller {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

// A plane polynomial map F = (P, Q) in the variables (x, y).
struct PencilMap {
  PencilMap(MultiPoly p, MultiPoly q);
  static PencilMap parse(std::string_view p, std::string_view q);

  MultiPoly P, Q;
  int degP = 0, degQ = 0;
  int degree() const { return std::max(degP, degQ); }
  std::string to_string() const;
};

// lambda = (1 : t) with t a root of the monic irreducible min_poly, or
// lambda = (0 : 1). The member of lambda = (a : b) is a P + b Q.
struct PencilParam {
  bool at_q = false;
  QPoly min_poly;

  static PencilParam from_ratio(const Rational& a, const Rational& b);
  static PencilParam root_of(const QPoly& irreducible);
  bool is_rational() const { return at_q || min_poly.degree() == 1; }
  Rational t() const;  // rational t (throws otherwise)
  int orbit_size() const { return at_q ? 1 : min_poly.degree(); }
  std::string to_string() const;
  friend bool operator==(const PencilParam& a, const PencilParam& b) {
    return a.at_q == b.at_q && (a.at_q || a.min_poly == b.min_poly);
  }
};

MultiPoly pencil_member(const PencilMap& f, const Rational& a, const Rational& b);

struct MemberCount {
  PencilParam lambda;
  int r = 0;             // components of the reduced member (0: empty member)
  bool reduced = true;   // a P + b Q squarefree
};

// Exact count for the member (for algebraic lambda via the norm over Q).
MemberCount count_member(const PencilMap& f, const PencilParam& lambda);

struct ReducibleLocus {
  std::vector<MemberCount> checked;     // every candidate, counted exactly
  std::vector<std::string> unresolved;  // candidate minimal polynomials beyond the cap
  bool complete = false;
  std::string note;
};

// Finite superset of {lambda : r_lambda > 1}, each candidate counted exactly.
ReducibleLocus reducible_locus_candidates(const PencilMap& f);

struct PencilProfile {
  struct Sample {
    Rational a, b;
    int r = 0;
  };
  std::vector<Sample> sampled;
  std::vector<MemberCount> checked;   // candidates from the reducible locus
  std::vector<MemberCount> specials;  // r > generic_r
  std::vector<std::string> unresolved;
  int generic_r = 0;
  double generic_fraction = 0;
  RationalityVerdict generic_genus;
  int total_reducibility = 0;
  bool complete = false;             // reducible locus fully processed
  bool all_members_reduced = true;   // among sampled and checked members
  bool has_empty_member = false;
};

PencilProfile scan_pencil(const PencilMap& f, int n_samples = 50, std::uint64_t seed = kDefaultSeed);

}  // namespace keller
