#include "twklv/errors.hpp"
#include "twklv/fq.hpp"
#include "twklv/module_action.hpp"

#include <algorithm>
#include <future>

namespace twklv {

namespace {

// How one stratum's F_q-orbits combine into parameters: each parameter is a
// +-1 combination of the orbit functions of its stratum.
struct BasisVector {
  std::size_t stratum;
  std::vector<std::pair<std::size_t, int>> orbit_signs;  // local orbit position, sign
};

std::vector<std::vector<BasisVector>> basis_choices(const FamilyInfo& info, const std::vector<std::size_t>& orbit_counts) {
  // per stratum, the list of possible assignments (in name order)
  std::vector<std::vector<std::vector<BasisVector>>> per;
  for (std::size_t s = 0; s < info.strata.size(); ++s) {
    const std::size_t names = info.strata[s].names.size();
    const std::size_t k = orbit_counts[s];
    std::vector<std::vector<BasisVector>> options;
    if (k == 1 && names >= 1) {
      options.push_back({BasisVector{s, {{0, 1}}}});
    } else if (k == 2 && names == 2) {
      BasisVector plus{s, {{0, 1}, {1, 1}}};
      BasisVector minus{s, {{0, 1}, {1, -1}}};
      options.push_back({plus, minus});
      options.push_back({minus, plus});
    } else {
      throw InterpolationMismatch("stratum " + info.strata[s].label + " has " + std::to_string(k) +
                                  " F_q-orbits for " + std::to_string(names) + " parameter names");
    }
    per.push_back(std::move(options));
  }
  std::vector<std::vector<BasisVector>> out{{}};
  for (const auto& options : per) {
    std::vector<std::vector<BasisVector>> next;
    for (const auto& prefix : out)
      for (const auto& opt : options) {
        auto v = prefix;
        v.insert(v.end(), opt.begin(), opt.end());
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

// Orbit positions grouped by stratum.
std::vector<std::vector<std::size_t>> orbits_by_stratum(const FqScene& s, std::size_t strata) {
  std::vector<std::vector<std::size_t>> out(strata);
  for (std::size_t o = 0; o < s.orbits.size(); ++o) out.at(s.stratum_of_orbit[o]).push_back(o);
  return out;
}

using IntMatrix = std::vector<std::vector<Rational>>;

// Action in the parameter basis. The change of basis is P (columns are the
// basis vectors in orbit coordinates); the result is P^-1 M P, computed by
// applying M to each basis function and reading off coordinates.
IntMatrix change_basis(const FqScene& s, const std::vector<std::vector<std::int64_t>>& m,
                       const std::vector<BasisVector>& basis, const std::vector<std::vector<std::size_t>>& by_stratum) {
  const std::size_t n = basis.size();
  IntMatrix out(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> image(s.orbits.size());
    for (auto [pos, sign] : basis[j].orbit_signs) {
      const std::size_t o = by_stratum[basis[j].stratum][pos];
      for (std::size_t r = 0; r < image.size(); ++r) image[r] += Rational(sign) * m[r][o];
    }
    // orbit functions of a stratum with two orbits: chi0 = (f+ + f-)/2, chi1 = (f+ - f-)/2
    for (std::size_t i = 0; i < n; ++i) {
      const auto& bv = basis[i];
      const auto& orbs = by_stratum[bv.stratum];
      if (orbs.size() == 1) {
        out[i][j] = image[orbs[0]];
      } else {
        const Rational a = image[orbs[0]], b = image[orbs[1]];
        const int sign = bv.orbit_signs[1].second;
        out[i][j] = (a + Rational(sign) * b) / 2;
      }
    }
  }
  return out;
}

// Flips signed parameters so the first off-diagonal entry of their column
// (or, failing that, row) is positive; the sign of a +-1 combination is not
// fixed by the orbit ordering.
void normalize_signs(IntMatrix& m, const std::vector<BasisVector>& basis) {
  const std::size_t n = m.size();
  for (std::size_t j = 0; j < n; ++j) {
    const bool signed_vector = std::any_of(basis[j].orbit_signs.begin(), basis[j].orbit_signs.end(),
                                           [](auto& p) { return p.second < 0; });
    if (!signed_vector) continue;
    int sign = 0;
    for (std::size_t i = 0; i < n && sign == 0; ++i)
      if (i != j && m[i][j] != 0) sign = m[i][j] > 0 ? 1 : -1;
    for (std::size_t i = 0; i < n && sign == 0; ++i)
      if (i != j && m[j][i] != 0) sign = m[j][i] > 0 ? 1 : -1;
    if (sign >= 0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      m[i][j] = -m[i][j];
      m[j][i] = -m[j][i];
    }
  }
}

// Lagrange interpolation through the first four points, checked against the
// rest; the result must have integer coefficients.
LaurentPoly interpolate(const std::vector<std::int64_t>& xs, const std::vector<Rational>& ys, const std::string& what) {
  const std::size_t k = std::min<std::size_t>(4, xs.size());
  std::vector<Rational> coeffs(k);
  for (std::size_t i = 0; i < k; ++i) {
    // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1);
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * xs[j];
      }
      basis = std::move(next);
      denom *= Rational(xs[i] - xs[j]);
    }
    for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] += ys[i] * basis[d] / denom;
  }
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d] == 0) continue;
    if (denominator(coeffs[d]) != 1)
      throw InterpolationMismatch(what + ": interpolated coefficient " + coeffs[d].str() + " is not an integer");
    terms.push_back({static_cast<int>(d), static_cast<std::int64_t>(numerator(coeffs[d]))});
  }
  LaurentPoly p = LaurentPoly::from_terms(std::move(terms));
  for (std::size_t i = k; i < xs.size(); ++i)
    if (eval_at(p, xs[i]) != ys[i])
      throw InterpolationMismatch(what + ": entry is not a polynomial of degree <= 3 (fails at q = " +
                                  std::to_string(xs[i]) + ")");
  return p;
}

std::vector<GeneratorStatus> payload_candidates(const ParamDatum& d, const KindInfo& info) {
  std::vector<std::optional<std::string>> crosses{std::nullopt};
  if (info.has_cross) {
    crosses.clear();
    for (const auto& p : d.parameters) crosses.push_back(p.id);
  }
  std::vector<std::vector<std::string>> cayleys;
  if (info.cayley_count == 0) cayleys.push_back({});
  if (info.cayley_count == 1)
    for (const auto& p : d.parameters) cayleys.push_back({p.id});
  if (info.cayley_count == 2)
    for (const auto& a : d.parameters)
      for (const auto& b : d.parameters)
        if (a.id != b.id) cayleys.push_back({a.id, b.id});
  std::vector<Role> roles{Role::None};
  if (info.kind == Kind::I2_12Plus) roles = {Role::Plus, Role::Minus};
  if (info.kind == Kind::R2_21Minus) roles = {Role::Sum, Role::Diff};
  std::vector<GeneratorStatus> out;
  for (const auto& x : crosses)
    for (const auto& c : cayleys)
      for (Role r : roles) out.push_back(GeneratorStatus{info.kind, x, c, r});
  return out;
}

bool search(ParamDatum& d, const std::vector<std::vector<GeneratorStatus>>& cands, std::size_t col) {
  if (col == cands.size()) return validate_datum(d).ok();
  for (const auto& st : cands[col]) {
    d.statuses[0][col] = st;
    if (search(d, cands, col + 1)) return true;
  }
  d.statuses[0][col].reset();
  return false;
}

std::string describe(const std::vector<BasisVector>& basis, const ParamDatum& d) {
  std::string s;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    s += (i ? ", " : "") + d.parameters[i].id + " = ";
    for (std::size_t k = 0; k < basis[i].orbit_signs.size(); ++k) {
      const int sign = basis[i].orbit_signs[k].second;
      s += (k ? (sign > 0 ? " + " : " - ") : "") + std::string("chi") + std::to_string(basis[i].orbit_signs[k].first);
    }
  }
  return s;
}

}  // namespace

DerivedDatum interpolate_datum(Family f, const std::vector<std::uint32_t>& qs) {
  if (qs.size() < 4) throw InterpolationMismatch("need at least four values of q, got " + std::to_string(qs.size()));
  const FamilyInfo& info = family_info(f);

  std::vector<std::future<FqScene>> jobs;
  for (std::uint32_t q : qs) jobs.push_back(std::async(std::launch::async, [f, q] { return build_scene(f, q); }));
  std::vector<FqScene> scenes;
  for (auto& j : jobs) scenes.push_back(j.get());

  std::vector<std::vector<std::vector<std::int64_t>>> actions;
  std::vector<std::vector<std::vector<std::size_t>>> by_stratum;
  std::vector<std::size_t> orbit_counts;
  for (const auto& s : scenes) {
    actions.push_back(action_at_q(s));
    by_stratum.push_back(orbits_by_stratum(s, info.strata.size()));
    std::vector<std::size_t> counts;
    for (const auto& v : by_stratum.back()) counts.push_back(v.size());
    if (orbit_counts.empty()) orbit_counts = counts;
    if (counts != orbit_counts)
      throw InterpolationMismatch("orbit structure changes between q = " + std::to_string(scenes.front().q) +
                                  " and q = " + std::to_string(s.q));
  }

  std::vector<std::int64_t> xs;
  for (const auto& s : scenes) xs.push_back(s.q);

  // stratum sizes give the lengths
  std::vector<int> stratum_degree;
  for (std::size_t st = 0; st < info.strata.size(); ++st) {
    std::vector<Rational> ys;
    for (std::size_t k = 0; k < scenes.size(); ++k) {
      std::size_t total = 0;
      for (std::size_t o : by_stratum[k][st]) total += scenes[k].orbits[o].size();
      ys.push_back(Rational(static_cast<std::int64_t>(total)));
    }
    const LaurentPoly size = interpolate(xs, ys, "size of stratum " + info.strata[st].label);
    stratum_degree.push_back(size.is_zero() ? 0 : size.max_exp());
  }
  const int base = *std::min_element(stratum_degree.begin(), stratum_degree.end());

  std::string last_failure;
  for (const auto& basis : basis_choices(info, orbit_counts)) {
    ParamDatum d;
    d.name = std::string(family_name(f));
    d.generators = {{info.generator, info.m}};
    for (const auto& bv : basis) {
      const auto& stratum = info.strata[bv.stratum];
      std::size_t used = 0;
      for (const auto& p : d.parameters) used += p.orbit == stratum.label;
      d.parameters.push_back({stratum.names.at(used), stratum_degree[bv.stratum] - base, stratum.label});
    }
    d.reset_statuses();
    const std::size_t n = basis.size();

    std::vector<IntMatrix> mats;
    for (std::size_t k = 0; k < scenes.size(); ++k) {
      mats.push_back(change_basis(scenes[k], actions[k], basis, by_stratum[k]));
      normalize_signs(mats.back(), basis);
    }
    PolyMatrix action(d.param_ids());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> ys;
        for (const auto& m : mats) ys.push_back(m[i][j]);
        action(i, j) = interpolate(xs, ys, "entry (" + d.parameters[i].id + ", " + d.parameters[j].id + ")");
      }

    std::vector<std::vector<GeneratorStatus>> cands(n);
    bool matched = true;
    for (std::size_t j = 0; j < n; ++j) {
      const auto col = action.column(j);
      for (const auto& ki : all_kinds()) {
        if (ki.m != info.m) continue;
        if (std::find(info.excluded_kinds.begin(), info.excluded_kinds.end(), ki.kind) != info.excluded_kinds.end())
          continue;
        for (const auto& st : payload_candidates(d, ki))
          if (status_column(d, 0, j, st) == col) cands[j].push_back(st);
      }
      if (cands[j].empty()) {
        last_failure = "no kind matches the column of " + d.parameters[j].id + " (" + describe(basis, d) + ")";
        matched = false;
        break;
      }
    }
    if (!matched) continue;

    if (search(d, cands, 0)) {
      DerivedDatum out{d, action, {}};
      std::string qlist;
      for (auto q : qs) qlist += (qlist.empty() ? "" : ",") + std::to_string(q);
      out.notes.push_back("sampled q = " + qlist);
      out.notes.push_back("basis: " + describe(basis, d));
      return out;
    }
    last_failure = "every column matches a kind but no combination validates (" + describe(basis, d) + ")";
  }
  throw UnclassifiableColumn(std::string(family_name(f)) + ": " + last_failure);
}

}  // namespace twklv
