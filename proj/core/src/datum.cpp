#include "twklv/datum.hpp"

#include "twklv/errors.hpp"
#include "twklv/module_action.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace twklv {

std::optional<std::size_t> ParamDatum::param_index(std::string_view id) const {
  for (std::size_t i = 0; i < parameters.size(); ++i)
    if (parameters[i].id == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> ParamDatum::gen_index(std::string_view id) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].id == id) return i;
  return std::nullopt;
}

std::size_t ParamDatum::require_param(std::string_view id) const {
  auto i = param_index(id);
  if (!i) throw DanglingReference("unknown parameter '" + std::string(id) + "'");
  return *i;
}

std::size_t ParamDatum::require_gen(std::string_view id) const {
  auto i = gen_index(id);
  if (!i) throw UnknownName("unknown generator '" + std::string(id) + "'");
  return *i;
}

std::vector<std::string> ParamDatum::param_ids() const {
  std::vector<std::string> ids;
  for (const auto& p : parameters) ids.push_back(p.id);
  return ids;
}

std::vector<int> ParamDatum::lengths() const {
  std::vector<int> out;
  for (const auto& p : parameters) out.push_back(p.length);
  return out;
}

const GeneratorStatus& ParamDatum::status(std::size_t g, std::size_t p) const {
  if (g >= statuses.size() || p >= statuses[g].size() || !statuses[g][p])
    throw MissingStatus("no status for generator " + (g < generators.size() ? generators[g].id : "?") +
                        " at parameter " + (p < parameters.size() ? parameters[p].id : "?"));
  return *statuses[g][p];
}

void ParamDatum::reset_statuses() {
  statuses.assign(generators.size(), std::vector<std::optional<GeneratorStatus>>(parameters.size()));
}

void ParamDatum::set_status(std::string_view gen, std::string_view param, GeneratorStatus st) {
  const auto g = require_gen(gen);
  const auto p = require_param(param);
  if (statuses.size() != generators.size()) reset_statuses();
  statuses[g][p] = std::move(st);
}

std::vector<std::optional<std::vector<std::size_t>>> ParamDatum::support_restrictions() const {
  std::vector<std::optional<std::vector<std::size_t>>> out(parameters.size());
  for (const auto& levi : levi_subsets) {
    std::vector<std::size_t> rows;
    for (const auto& id : levi.params) rows.push_back(require_param(id));
    std::sort(rows.begin(), rows.end());
    for (std::size_t p : rows) {
      if (!out[p]) {
        out[p] = rows;
      } else {
        std::vector<std::size_t> both;
        std::set_intersection(out[p]->begin(), out[p]->end(), rows.begin(), rows.end(), std::back_inserter(both));
        out[p] = both;
      }
    }
  }
  return out;
}

std::string ValidationReport::str() const {
  if (ok()) return "validation: pass\n";
  std::ostringstream os;
  os << "validation: fail (" << violations.size() << " violation" << (violations.size() == 1 ? "" : "s") << ")\n";
  for (const auto& v : violations) os << "  [" << v.category << "] " << v.message << '\n';
  return os.str();
}

namespace {

class Validator {
 public:
  explicit Validator(const ParamDatum& d) : d_(d) {}

  ValidationReport run() {
    check_ids();
    check_payloads();
    if (structural_ok_) check_reciprocity();
    check_levi();
    if (structural_ok_) {
      try {
        for (const auto& f : quadratic_check(d_).failures)
          add("quadratic", "generator " + f.generator + ": (M+1)(M-u^m) has entry " + f.entry.str() + " at (" +
                               f.row + ", " + f.col + ")");
      } catch (const Error& e) {
        add("quadratic", e.what());
      }
    }
    return std::move(report_);
  }

 private:
  void add(std::string cat, std::string msg) { report_.violations.push_back({std::move(cat), std::move(msg)}); }

  std::string at(std::size_t g, std::size_t p) const {
    return d_.generators[g].id + " at " + d_.parameters[p].id;
  }

  const GeneratorStatus* st(std::size_t g, std::size_t p) const {
    if (g >= d_.statuses.size() || p >= d_.statuses[g].size() || !d_.statuses[g][p]) return nullptr;
    return &*d_.statuses[g][p];
  }

  void check_ids() {
    std::set<std::string> seen;
    for (const auto& p : d_.parameters) {
      if (!seen.insert(p.id).second) {
        add("duplicate-id", "parameter id '" + p.id + "' repeated");
        structural_ok_ = false;
      }
      if (p.length < 0) add("length", "parameter '" + p.id + "' has negative length");
    }
    seen.clear();
    for (const auto& g : d_.generators) {
      if (!seen.insert(g.id).second) {
        add("duplicate-id", "generator id '" + g.id + "' repeated");
        structural_ok_ = false;
      }
      if (g.m < 1 || g.m > 3) {
        add("generator-type", "generator '" + g.id + "' has m outside {1,2,3}");
        structural_ok_ = false;
      }
    }
  }

  void check_payloads() {
    for (std::size_t g = 0; g < d_.generators.size(); ++g) {
      for (std::size_t p = 0; p < d_.parameters.size(); ++p) {
        const GeneratorStatus* s = st(g, p);
        if (!s) {
          add("missing-status", "no status for " + at(g, p));
          structural_ok_ = false;
          continue;
        }
        const KindInfo& info = kind_info(s->kind);
        if (info.m != d_.generators[g].m)
          add("generator-type", at(g, p) + ": kind " + std::string(info.name) + " needs m=" + std::to_string(info.m));
        if (info.has_cross != s->cross.has_value()) {
          add("payload", at(g, p) + ": kind " + std::string(info.name) +
                             (info.has_cross ? " requires a cross target" : " takes no cross target"));
          structural_ok_ = false;
        }
        if (static_cast<int>(s->cayley.size()) != info.cayley_count) {
          add("payload", at(g, p) + ": kind " + std::string(info.name) + " requires " +
                             std::to_string(info.cayley_count) + " Cayley target(s)");
          structural_ok_ = false;
        }
        if (info.needs_role) {
          const bool ok = s->kind == Kind::I2_12Plus ? (s->role == Role::Plus || s->role == Role::Minus)
                                                     : (s->role == Role::Sum || s->role == Role::Diff);
          if (!ok) {
            add("payload", at(g, p) + ": kind " + std::string(info.name) + " has a missing or invalid role");
            structural_ok_ = false;
          }
        } else if (s->role != Role::None) {
          add("payload", at(g, p) + ": kind " + std::string(info.name) + " takes no role");
        }
        std::vector<std::string> refs = s->cayley;
        if (s->cross) refs.push_back(*s->cross);
        for (const auto& id : refs) {
          if (!d_.param_index(id)) {
            add("dangling-reference", at(g, p) + " references unknown parameter '" + id + "'");
            structural_ok_ = false;
          }
        }
        if (s->cayley.size() == 2 && s->cayley[0] == s->cayley[1]) {
          add("payload", at(g, p) + ": Cayley targets must be distinct");
          structural_ok_ = false;
        }
        if (s->cross && *s->cross == d_.parameters[p].id) {
          add("payload", at(g, p) + ": cross target equals the parameter itself");
          structural_ok_ = false;
        }
      }
    }
  }

  int len(const std::string& id) const { return d_.parameters[d_.require_param(id)].length; }

  // status of g at the parameter named id, or nullptr
  const GeneratorStatus* at_id(std::size_t g, const std::string& id) const { return st(g, d_.require_param(id)); }

  bool kind_is(const GeneratorStatus* s, std::initializer_list<Kind> ks) const {
    return s && std::find(ks.begin(), ks.end(), s->kind) != ks.end();
  }

  static std::multiset<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

  void check_reciprocity() {
    for (std::size_t g = 0; g < d_.generators.size(); ++g) {
      for (std::size_t p = 0; p < d_.parameters.size(); ++p) {
        const GeneratorStatus& s = *st(g, p);
        const KindInfo& info = kind_info(s.kind);
        const std::string& self = d_.parameters[p].id;
        const int l = d_.parameters[p].length;
        const std::string where = at(g, p) + " (" + std::string(info.name) + ")";

        if (s.cross && len(*s.cross) - l != info.cross_delta)
          add("length", where + ": cross target " + *s.cross + " must change length by " +
                            std::to_string(info.cross_delta));
        for (const auto& c : s.cayley)
          if (len(c) - l != info.cayley_delta)
            add("length", where + ": Cayley target " + c + " must change length by " +
                              std::to_string(info.cayley_delta));

        auto recip = [&](bool ok, const std::string& what) {
          if (!ok) add("reciprocity", where + ": " + what);
        };
        const GeneratorStatus* x = s.cross ? at_id(g, *s.cross) : nullptr;
        std::vector<const GeneratorStatus*> cs;
        for (const auto& c : s.cayley) cs.push_back(at_id(g, c));

        switch (s.kind) {
          case Kind::C1Plus:
          case Kind::C2Plus:
          case Kind::C3Plus: {
            const Kind want = s.kind == Kind::C1Plus ? Kind::C1Minus : s.kind == Kind::C2Plus ? Kind::C2Minus : Kind::C3Minus;
            recip(x && x->kind == want && x->cross == self, "cross target lacks the reciprocal complex descent");
            break;
          }
          case Kind::C1Minus:
          case Kind::C2Minus:
          case Kind::C3Minus: {
            const Kind want = s.kind == Kind::C1Minus ? Kind::C1Plus : s.kind == Kind::C2Minus ? Kind::C2Plus : Kind::C3Plus;
            recip(x && x->kind == want && x->cross == self, "cross target lacks the reciprocal complex ascent");
            break;
          }
          case Kind::I1_1Plus:
          case Kind::I2_11Plus: {
            const Kind down = s.kind == Kind::I1_1Plus ? Kind::R1_1Minus : Kind::R2_11Minus;
            recip(x && x->kind == s.kind && x->cross == self && x->cayley == s.cayley,
                  "cross partner must share the kind and Cayley target");
            recip(kind_is(cs[0], {down}) && as_set(cs[0]->cayley) == as_set({self, *s.cross}),
                  "Cayley target must be a real descent with inverse Cayley {" + self + ", " + *s.cross + "}");
            break;
          }
          case Kind::R1_1Minus:
          case Kind::R2_11Minus: {
            const Kind up = s.kind == Kind::R1_1Minus ? Kind::I1_1Plus : Kind::I2_11Plus;
            for (std::size_t k = 0; k < 2; ++k)
              recip(kind_is(cs[k], {up}) && cs[k]->cayley == std::vector<std::string>{self} &&
                        cs[k]->cross == s.cayley[1 - k],
                    "inverse Cayley target " + s.cayley[k] + " must be an imaginary ascent back to " + self +
                        " crossing " + s.cayley[1 - k]);
            break;
          }
          case Kind::I1_2Plus:
          case Kind::I2_22Plus: {
            const Kind down = s.kind == Kind::I1_2Plus ? Kind::R1_2Minus : Kind::R2_22Minus;
            for (std::size_t k = 0; k < 2; ++k)
              recip(kind_is(cs[k], {down}) && cs[k]->cayley == std::vector<std::string>{self} &&
                        cs[k]->cross == s.cayley[1 - k],
                    "Cayley target " + s.cayley[k] + " must be a real descent back to " + self + " crossing " +
                        s.cayley[1 - k]);
            break;
          }
          case Kind::R1_2Minus:
          case Kind::R2_22Minus: {
            const Kind up = s.kind == Kind::R1_2Minus ? Kind::I1_2Plus : Kind::I2_22Plus;
            recip(x && x->kind == s.kind && x->cross == self && x->cayley == s.cayley,
                  "sign partner must share the kind and inverse Cayley target");
            recip(kind_is(cs[0], {up}) && as_set(cs[0]->cayley) == as_set({self, *s.cross}),
                  "inverse Cayley target must be an imaginary ascent with Cayley {" + self + ", " + *s.cross + "}");
            break;
          }
          case Kind::SI2Plus:
          case Kind::SR2Minus:
          case Kind::SI3Plus:
          case Kind::R3Minus:
          case Kind::I3Plus:
          case Kind::SR3Minus: {
            Kind partner = Kind::SR2Minus;
            switch (s.kind) {
              case Kind::SI2Plus: partner = Kind::SR2Minus; break;
              case Kind::SR2Minus: partner = Kind::SI2Plus; break;
              case Kind::SI3Plus: partner = Kind::R3Minus; break;
              case Kind::R3Minus: partner = Kind::SI3Plus; break;
              case Kind::I3Plus: partner = Kind::SR3Minus; break;
              default: partner = Kind::I3Plus; break;
            }
            recip(kind_is(cs[0], {partner}) && cs[0]->cayley == std::vector<std::string>{self},
                  "Cayley target must have kind " + std::string(kind_info(partner).name) + " pointing back");
            break;
          }
          case Kind::I2_12Plus: {
            const Role other = s.role == Role::Plus ? Role::Minus : Role::Plus;
            recip(x && x->kind == Kind::I2_12Plus && x->role == other && x->cross == self && x->cayley == s.cayley,
                  "cross partner must be 2I12+ with the opposite role and the same Cayley list");
            const std::vector<std::string> order =
                s.role == Role::Plus ? std::vector<std::string>{self, *s.cross} : std::vector<std::string>{*s.cross, self};
            recip(kind_is(cs[0], {Kind::R2_21Minus}) && cs[0]->role == Role::Sum && cs[0]->cayley == order &&
                      cs[0]->cross == s.cayley[1],
                  "first Cayley target must be 2R21- (sum) with inverse Cayley [plus, minus]");
            recip(kind_is(cs[1], {Kind::R2_21Minus}) && cs[1]->role == Role::Diff && cs[1]->cayley == order &&
                      cs[1]->cross == s.cayley[0],
                  "second Cayley target must be 2R21- (diff) with inverse Cayley [plus, minus]");
            break;
          }
          case Kind::R2_21Minus: {
            const Role other = s.role == Role::Sum ? Role::Diff : Role::Sum;
            recip(x && x->kind == Kind::R2_21Minus && x->role == other && x->cross == self && x->cayley == s.cayley,
                  "cross partner must be 2R21- with the opposite role and the same inverse Cayley list");
            const std::vector<std::string> order =
                s.role == Role::Sum ? std::vector<std::string>{self, *s.cross} : std::vector<std::string>{*s.cross, self};
            recip(kind_is(cs[0], {Kind::I2_12Plus}) && cs[0]->role == Role::Plus && cs[0]->cayley == order,
                  "first inverse Cayley target must be 2I12+ (plus) with Cayley [sum, diff]");
            recip(kind_is(cs[1], {Kind::I2_12Plus}) && cs[1]->role == Role::Minus && cs[1]->cayley == order,
                  "second inverse Cayley target must be 2I12+ (minus) with Cayley [sum, diff]");
            break;
          }
          default:
            break;
        }
      }
    }
  }

  void check_levi() {
    for (std::size_t k = 0; k < d_.levi_subsets.size(); ++k) {
      const auto& levi = d_.levi_subsets[k];
      const std::string name = "levi subset " + std::to_string(k + 1);
      std::set<std::string> params;
      bool ok = true;
      for (const auto& id : levi.params) {
        if (!d_.param_index(id)) {
          add("levi", name + " names unknown parameter '" + id + "'");
          ok = false;
        }
        params.insert(id);
      }
      for (const auto& gid : levi.gens) {
        auto g = d_.gen_index(gid);
        if (!g) {
          add("levi", name + " names unknown generator '" + gid + "'");
          ok = false;
          continue;
        }
        if (!ok) continue;
        for (const auto& pid : levi.params) {
          const GeneratorStatus* s = st(*g, d_.require_param(pid));
          if (!s) continue;
          std::vector<std::string> refs = s->cayley;
          if (s->cross) refs.push_back(*s->cross);
          for (const auto& r : refs)
            if (!params.count(r))
              add("levi", name + " is not closed: " + gid + " at " + pid + " references " + r);
        }
      }
    }
  }

  const ParamDatum& d_;
  ValidationReport report_;
  bool structural_ok_ = true;
};

}  // namespace

ValidationReport validate_datum(const ParamDatum& d) {
  try {
    return Validator(d).run();
  } catch (const std::exception& e) {
    ValidationReport r;
    r.violations.push_back({"internal", e.what()});
    return r;
  }
}

}  // namespace twklv
