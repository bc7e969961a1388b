#pragma once

#include "twklv/coxeter.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twklv {

// Status of a generator at a parameter. Plus/minus is the sign of the length
// change along the cross action or Cayley transform.
enum class Kind {
  C1Plus, C1Minus, I1_1Plus, R1_1Minus, R1sMinus, I1_2Plus, R1_2Minus, I1_2sPlus, RNP1Plus, IC1Minus,
  C2Plus, C2Minus, SI2Plus, SR2Minus, I2_11Plus, R2_11Minus, I2_22Plus, R2_22Minus, I2_12Plus,
  R2_21Minus, RNP2Plus, IC2Minus,
  C3Plus, C3Minus, SI3Plus, R3Minus, I3Plus, SR3Minus, RNP3Plus, IC3Minus,
};

enum class Role { None, Plus, Minus, Sum, Diff };

struct KindInfo {
  Kind kind;
  std::string_view name;
  int m;
  bool has_cross;
  int cross_delta;       // length(cross) - length(self)
  int cayley_count;      // 0, 1 or 2
  int cayley_delta;      // length(cayley target) - length(self)
  bool needs_role;
};

const std::vector<KindInfo>& all_kinds();
const KindInfo& kind_info(Kind k);
std::optional<Kind> parse_kind(std::string_view s);  // accepts '-' or U+2212 for minus
std::string_view role_name(Role r);
std::optional<Role> parse_role(std::string_view s);

struct GeneratorStatus {
  Kind kind = Kind::C1Plus;
  std::optional<std::string> cross;
  std::vector<std::string> cayley;
  Role role = Role::None;
  bool operator==(const GeneratorStatus&) const = default;
};

struct Parameter {
  std::string id;
  int length = 0;
  std::optional<std::string> orbit;
  bool operator==(const Parameter&) const = default;
};

struct DatumGenerator {
  std::string id;
  int m = 1;
  bool operator==(const DatumGenerator&) const = default;
};

struct LeviSubset {
  std::vector<std::string> gens;
  std::vector<std::string> params;
  bool operator==(const LeviSubset&) const = default;
};

// Parameter datum: parameters with lengths and the status of every
// generator at every parameter. statuses[g][p] may be empty only for data
// that have not passed validation.
struct ParamDatum {
  std::string name;
  std::vector<DatumGenerator> generators;
  std::vector<Parameter> parameters;
  std::vector<std::vector<std::optional<GeneratorStatus>>> statuses;
  std::vector<LeviSubset> levi_subsets;

  bool operator==(const ParamDatum&) const = default;

  std::optional<std::size_t> param_index(std::string_view id) const;
  std::optional<std::size_t> gen_index(std::string_view id) const;
  std::size_t require_param(std::string_view id) const;  // throws DanglingReference
  std::size_t require_gen(std::string_view id) const;    // throws UnknownName
  std::vector<std::string> param_ids() const;
  std::vector<int> lengths() const;
  const GeneratorStatus& status(std::size_t g, std::size_t p) const;  // throws MissingStatus

  // resizes the status table to generators x parameters
  void reset_statuses();
  void set_status(std::string_view gen, std::string_view param, GeneratorStatus st);
  // parameters whose columns are confined to a levi subset, with the allowed rows
  std::vector<std::optional<std::vector<std::size_t>>> support_restrictions() const;
};

struct Violation {
  std::string category;  // e.g. "reciprocity", "length", "payload", "quadratic"
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string str() const;
};

// Structural invariants, reciprocity, length deltas, levi closure and the
// quadratic relation for every generator.
ValidationReport validate_datum(const ParamDatum& d);

ParamDatum datum_from_json(std::string_view text);
std::string datum_to_json(const ParamDatum& d);
ParamDatum load_datum(const std::string& path);
void save_datum(const ParamDatum& d, const std::string& path);

// Regular module of the folded Hecke algebra: one parameter per element of
// W^sigma, with the statuses that make the module action equal to left
// multiplication.
ParamDatum hecke_case_datum(const FoldedSystem& fs);

// "a2-c", "a2-s", "a1a1-sc", "a1a1-int", "a1a1-ad", or
// "hecke:<cartan>:<sigma>" such as "hecke:A3:(1 3)".
ParamDatum builtin_datum(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace twklv
