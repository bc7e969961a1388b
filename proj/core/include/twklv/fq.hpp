#pragma once

#include "twklv/datum.hpp"
#include "twklv/galois_field.hpp"
#include "twklv/polymatrix.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twklv {

enum class Family { A1A1Sc, A1A1Int, A1A1Ad, A2C, A2S };

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);
std::vector<Family> all_families();

// Static description of a family: the folded generator, and the geometric
// (sigma-fixed) orbits with the parameter names attached to the F_q-orbits
// they split into.
struct Stratum {
  std::string label;
  std::vector<std::string> names;
};

struct FamilyInfo {
  Family family;
  std::string generator;  // folded generator id, "st" or "sts"
  int m;                  // 2 or 3
  std::vector<Stratum> strata;
  std::vector<Kind> excluded_kinds;  // kinds the classifier must not propose
};

const FamilyInfo& family_info(Family f);

// Points of the flag variety over F_q, the K(F_q)-orbits on them, and the
// relative position of pairs (0 for equal points, 1 for distinct ones).
struct FqScene {
  Family family;
  std::uint32_t q = 0;
  std::size_t point_count = 0;
  std::size_t group_size = 0;  // number of K(F_q) transformations enumerated
  std::vector<std::vector<std::size_t>> orbits;  // ordered by stratum, then least point
  std::vector<std::size_t> orbit_of;             // orbit index of each point
  std::vector<std::size_t> stratum_of_orbit;

  int relpos(std::size_t a, std::size_t b) const { return a == b ? 0 : 1; }
};

// Throws UnsupportedQ unless q is an odd prime power with q <= 25.
FqScene build_scene(Family f, std::uint32_t q);

// (f_w * f)(B) = sum over B' with relpos(B, B') = w of f(B').
std::vector<std::int64_t> convolve(const FqScene& s, int w, const std::vector<std::int64_t>& f);

// Convolution by the distinct-pair class in the basis of orbit
// characteristic functions; column O is T chi_O.
std::vector<std::vector<std::int64_t>> action_at_q(const FqScene& s);

struct CountRow {
  std::string what;
  std::string expected;
  std::string actual;
  bool pass;
};

struct CountReport {
  Family family;
  std::uint32_t q;
  std::vector<CountRow> rows;
  bool ok() const;
  std::string str() const;
};

CountReport verify_counts(const FqScene& s);

struct DerivedDatum {
  ParamDatum datum;
  PolyMatrix action;  // generator action in the parameter basis
  std::vector<std::string> notes;
};

// Needs at least four sample values. Throws InterpolationMismatch or
// UnclassifiableColumn.
DerivedDatum interpolate_datum(Family f, const std::vector<std::uint32_t>& qs);

}  // namespace twklv
