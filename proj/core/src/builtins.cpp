#include "twklv/datum.hpp"

#include "twklv/errors.hpp"
#include "twklv/hecke.hpp"

namespace twklv {

namespace {

GeneratorStatus make(Kind k, std::optional<std::string> cross = std::nullopt, std::vector<std::string> cayley = {},
                     Role role = Role::None) {
  return GeneratorStatus{k, std::move(cross), std::move(cayley), role};
}

ParamDatum skeleton(std::string name, DatumGenerator gen, std::vector<Parameter> params) {
  ParamDatum d;
  d.name = std::move(name);
  d.generators = {std::move(gen)};
  d.parameters = std::move(params);
  d.reset_statuses();
  return d;
}

// closed orbit with trivial local system, open orbit of dimension 2
ParamDatum a2_c() {
  auto d = skeleton("a2-c", {"sts", 3}, {{"L", 0, "closed"}, {"L'", 2, "open"}});
  d.set_status("sts", "L", make(Kind::I3Plus, {}, {"L'"}));
  d.set_status("sts", "L'", make(Kind::SR3Minus, {}, {"L"}));
  return d;
}

ParamDatum a2_s() {
  auto d = skeleton("a2-s", {"sts", 3}, {{"L", 0, "closed"}, {"L'", 2, "open"}, {"L''", 2, "open"}});
  d.set_status("sts", "L", make(Kind::SI3Plus, {}, {"L'"}));
  d.set_status("sts", "L'", make(Kind::R3Minus, {}, {"L"}));
  d.set_status("sts", "L''", make(Kind::RNP3Plus));
  return d;
}

ParamDatum a1a1_sc() {
  auto d = skeleton("a1a1-sc", {"st", 2},
                    {{"L1", 0, "zero"}, {"L2", 0, "infinity"}, {"L'", 2, "open"}, {"L''", 2, "open"}});
  d.set_status("st", "L1", make(Kind::I2_11Plus, "L2", {"L'"}));
  d.set_status("st", "L2", make(Kind::I2_11Plus, "L1", {"L'"}));
  d.set_status("st", "L'", make(Kind::R2_11Minus, {}, {"L1", "L2"}));
  d.set_status("st", "L''", make(Kind::RNP2Plus));
  // the sign local system on the open orbit has a clean extension, so its
  // dual is confined to itself; the Hecke identities alone do not force it
  d.levi_subsets.push_back({{}, {"L''"}});
  return d;
}

ParamDatum a1a1_int() {
  auto d = skeleton("a1a1-int", {"st", 2},
                    {{"L1", 0, "closed"}, {"L2", 0, "closed"}, {"L1'", 2, "open"}, {"L2'", 2, "open"}});
  d.set_status("st", "L1", make(Kind::I2_12Plus, "L2", {"L1'", "L2'"}, Role::Plus));
  d.set_status("st", "L2", make(Kind::I2_12Plus, "L1", {"L1'", "L2'"}, Role::Minus));
  d.set_status("st", "L1'", make(Kind::R2_21Minus, "L2'", {"L1", "L2"}, Role::Sum));
  d.set_status("st", "L2'", make(Kind::R2_21Minus, "L1'", {"L1", "L2"}, Role::Diff));
  return d;
}

ParamDatum a1a1_ad() {
  auto d = skeleton("a1a1-ad", {"st", 2}, {{"L", 0, "closed"}, {"L1'", 2, "open"}, {"L2'", 2, "open"}});
  d.set_status("st", "L", make(Kind::I2_22Plus, {}, {"L1'", "L2'"}));
  d.set_status("st", "L1'", make(Kind::R2_22Minus, "L2'", {"L"}));
  d.set_status("st", "L2'", make(Kind::R2_22Minus, "L1'", {"L"}));
  return d;
}

}  // namespace

ParamDatum hecke_case_datum(const FoldedSystem& fs) {
  ParamDatum d;
  d.name = "hecke:" + sigma_to_string(fs.sigma());
  for (const auto& g : fs.generators()) d.generators.push_back({g.label, g.m});
  for (std::size_t w = 0; w < fs.size(); ++w) d.parameters.push_back({fs.label(w), fs.length(w), std::nullopt});
  d.reset_statuses();
  for (std::size_t g = 0; g < fs.generators().size(); ++g) {
    const int m = fs.generator_m(g);
    for (std::size_t w = 0; w < fs.size(); ++w) {
      const std::size_t gw = fs.left_mul(g, w);
      const bool up = fs.length(gw) == fs.length(w) + m;
      Kind k;
      if (m == 1) k = up ? Kind::C1Plus : Kind::C1Minus;
      else if (m == 2) k = up ? Kind::C2Plus : Kind::C2Minus;
      else k = up ? Kind::C3Plus : Kind::C3Minus;
      d.statuses[g][w] = make(k, fs.label(gw));
    }
  }
  return d;
}

std::vector<std::string> builtin_names() { return {"a1a1-sc", "a1a1-int", "a1a1-ad", "a2-c", "a2-s"}; }

ParamDatum builtin_datum(std::string_view name) {
  if (name == "a2-c") return a2_c();
  if (name == "a2-s") return a2_s();
  if (name == "a1a1-sc") return a1a1_sc();
  if (name == "a1a1-int") return a1a1_int();
  if (name == "a1a1-ad") return a1a1_ad();
  if (name.substr(0, 6) == "hecke:") {
    const auto rest = name.substr(6);
    const auto colon = rest.find(':');
    const auto type = rest.substr(0, colon);
    const auto sigma = colon == std::string_view::npos ? std::string_view{} : rest.substr(colon + 1);
    auto fs = make_folded(type, sigma);
    ParamDatum d = hecke_case_datum(*fs);
    d.name = std::string(name);
    return d;
  }
  throw UnknownName("unknown built-in datum '" + std::string(name) + "'");
}

}  // namespace twklv
