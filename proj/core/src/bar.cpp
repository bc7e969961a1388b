#include "twklv/bar.hpp"

#include "twklv/errors.hpp"
#include "twklv/linsolve.hpp"
#include "twklv/module_action.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace twklv {

namespace {

struct Context {
  const ParamDatum& d;
  std::size_t n;
  std::vector<int> len;
  std::vector<PolyMatrix> shifted;  // M_g + I
  std::vector<int> m;
  std::vector<std::optional<std::vector<std::size_t>>> allowed;

  explicit Context(const ParamDatum& datum) : d(datum), n(datum.parameters.size()), len(datum.lengths()) {
    const auto ids = d.param_ids();
    for (std::size_t g = 0; g < d.generators.size(); ++g) {
      shifted.push_back(generator_matrix(d, g) + PolyMatrix::identity(ids));
      m.push_back(d.generators[g].m);
    }
    allowed = d.support_restrictions();
  }

  bool row_allowed(std::size_t row, std::size_t col) const {
    if (!allowed[col]) return true;
    return std::binary_search(allowed[col]->begin(), allowed[col]->end(), row);
  }

  // rows that may carry an unknown in column col
  std::vector<std::size_t> free_rows(std::size_t col) const {
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < n; ++r)
      if (len[r] < len[col] && row_allowed(r, col)) rows.push_back(r);
    return rows;
  }
};

void check_column_shape(const Context& c, const std::vector<LaurentPoly>& col, std::size_t L) {
  for (std::size_t r = 0; r < c.n; ++r) {
    if (r == L) {
      if (col[r] != LaurentPoly::u(-c.len[L]))
        throw InconsistentDatum("bar column of " + c.d.parameters[L].id + " has diagonal " + col[r].str());
    } else if (!col[r].is_zero() && (c.len[r] >= c.len[L] || !c.row_allowed(r, L))) {
      throw InconsistentDatum("bar column of " + c.d.parameters[L].id + " has a forbidden entry at " +
                              c.d.parameters[r].id);
    }
  }
}

}  // namespace

BarMatrix bar_matrix(const ParamDatum& d) {
  const Context c(d);
  BarMatrix out{PolyMatrix(d.param_ids()), {}};
  PolyMatrix& R = out.rho;
  std::vector<bool> known(c.n, false);

  std::set<int> strata(c.len.begin(), c.len.end());
  for (int delta : strata) {
    std::vector<std::size_t> stratum;
    for (std::size_t L = 0; L < c.n; ++L)
      if (c.len[L] == delta) stratum.push_back(L);

    for (std::size_t L : stratum) {
      if (c.free_rows(L).empty()) {
        R(L, L) = LaurentPoly::u(-delta);
        known[L] = true;
        out.log.push_back(d.parameters[L].id + ": diagonal");
      }
    }

    // Strategy A: u^-m (T+1) D(a_L1) = sum_j bar(c_j) D(a_j) with a single unknown D(a_L)
    for (bool progress = true; progress;) {
      progress = false;
      for (std::size_t L : stratum) {
        if (known[L]) continue;
        for (std::size_t g = 0; g < d.generators.size() && !known[L]; ++g) {
          const PolyMatrix& N = c.shifted[g];
          for (std::size_t L1 = 0; L1 < c.n && !known[L]; ++L1) {
            if (!known[L1] || N(L, L1).is_zero()) continue;
            bool usable = true;
            for (std::size_t j = 0; j < c.n && usable; ++j)
              if (j != L && !N(j, L1).is_zero() && !known[j]) usable = false;
            if (!usable) continue;
            std::vector<LaurentPoly> rhs(c.n);
            const LaurentPoly um = LaurentPoly::u(-c.m[g]);
            for (std::size_t r = 0; r < c.n; ++r)
              for (std::size_t k = 0; k < c.n; ++k)
                if (!N(r, k).is_zero() && !R(k, L1).is_zero()) rhs[r] += um * N(r, k) * R(k, L1);
            for (std::size_t j = 0; j < c.n; ++j) {
              if (j == L || N(j, L1).is_zero()) continue;
              const LaurentPoly y = N(j, L1).bar();
              for (std::size_t r = 0; r < c.n; ++r)
                if (!R(r, j).is_zero()) rhs[r] -= y * R(r, j);
            }
            const LaurentPoly x = N(L, L1).bar();
            std::vector<LaurentPoly> col(c.n);
            for (std::size_t r = 0; r < c.n; ++r) col[r] = exact_div(rhs[r], x);
            check_column_shape(c, col, L);
            R.set_column(L, col);
            known[L] = true;
            progress = true;
            out.log.push_back(d.parameters[L].id + ": single identity, generator " + d.generators[g].id + " at " +
                              d.parameters[L1].id);
          }
        }
      }
    }

    std::vector<std::size_t> open;
    for (std::size_t L : stratum)
      if (!known[L]) open.push_back(L);
    if (open.empty()) continue;

    // Strategy B: every identity whose terms are known or open columns of this stratum
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> var;  // (row, col) -> unknown
    for (std::size_t L : open)
      for (std::size_t r : c.free_rows(L)) var.emplace(std::make_pair(r, L), var.size());
    const std::set<std::size_t> open_set(open.begin(), open.end());

    // R(r, col) as coefficient vector plus constant
    auto entry = [&](std::size_t r, std::size_t col, const LaurentPoly& factor, std::vector<LaurentPoly>& coeffs,
                     LaurentPoly& constant) {
      if (open_set.count(col)) {
        if (r == col) {
          constant += factor * LaurentPoly::u(-c.len[col]);
        } else {
          auto it = var.find({r, col});
          if (it != var.end()) coeffs[it->second] += factor;
        }
      } else {
        constant += factor * R(r, col);
      }
    };

    std::vector<std::vector<LaurentPoly>> rows;
    std::vector<LaurentPoly> rhs;
    for (std::size_t g = 0; g < d.generators.size(); ++g) {
      const PolyMatrix& N = c.shifted[g];
      const LaurentPoly um = LaurentPoly::u(-c.m[g]);
      for (std::size_t L1 = 0; L1 < c.n; ++L1) {
        bool touches = open_set.count(L1) != 0;
        bool usable = known[L1] || touches;
        for (std::size_t j = 0; j < c.n && usable; ++j) {
          if (N(j, L1).is_zero()) continue;
          if (open_set.count(j)) touches = true;
          else if (!known[j]) usable = false;
        }
        if (!usable || !touches) continue;
        for (std::size_t r = 0; r < c.n; ++r) {
          std::vector<LaurentPoly> coeffs(var.size());
          LaurentPoly constant;
          for (std::size_t k = 0; k < c.n; ++k)
            if (!N(r, k).is_zero()) entry(k, L1, um * N(r, k), coeffs, constant);
          for (std::size_t j = 0; j < c.n; ++j)
            if (!N(j, L1).is_zero()) entry(r, j, -N(j, L1).bar(), coeffs, constant);
          const bool empty = std::all_of(coeffs.begin(), coeffs.end(), [](const LaurentPoly& p) { return p.is_zero(); });
          if (empty) {
            if (!constant.is_zero())
              throw InconsistentDatum("bar identity fails for generator " + d.generators[g].id + " at " +
                                      d.parameters[L1].id);
            continue;
          }
          rows.push_back(std::move(coeffs));
          rhs.push_back(-constant);
        }
      }
    }
    std::string names;
    for (std::size_t L : open) names += (names.empty() ? "" : ", ") + d.parameters[L].id;
    std::vector<LaurentPoly> sol;
    try {
      if (var.empty()) {
        sol = {};
      } else if (rows.empty()) {
        throw Underdetermined("no identities constrain the bar columns of {" + names + "}");
      } else {
        sol = solve_laurent_system(rows, rhs);
      }
    } catch (const Underdetermined& e) {
      throw Underdetermined(std::string(e.what()) + " (bar columns of {" + names + "}; declare a levi subset or check the datum)");
    }
    for (std::size_t L : open) R(L, L) = LaurentPoly::u(-c.len[L]);
    for (const auto& [key, v] : var) R(key.first, key.second) = sol[v];
    for (std::size_t L : open) {
      check_column_shape(c, R.column(L), L);
      known[L] = true;
    }
    out.log.push_back("{" + names + "}: joint solve of " + std::to_string(rows.size()) + " identities in " +
                      std::to_string(var.size()) + " unknowns" +
                      (d.levi_subsets.empty() ? " (no levi subsets declared)" : ""));
  }

  const CheckReport report = check_bar_constraints(d, R);
  if (!report.ok()) throw InconsistentDatum(report.str("bar matrix"));
  return out;
}

CheckReport check_bar_matrix(const ParamDatum& d, const PolyMatrix& rho) {
  CheckReport rep = check_bar_constraints(d, rho);
  if (rho.size() == d.parameters.size() && !(rho * rho.bar() == PolyMatrix::identity(d.param_ids())))
    rep.failures.push_back("R * bar(R) is not the identity");
  return rep;
}

CheckReport check_bar_constraints(const ParamDatum& d, const PolyMatrix& rho) {
  CheckReport rep;
  const std::size_t n = d.parameters.size();
  const auto len = d.lengths();
  const auto ids = d.param_ids();
  if (rho.size() != n) {
    rep.failures.push_back("size mismatch");
    return rep;
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (r == c && rho(r, c) != LaurentPoly::u(-len[c]))
        rep.failures.push_back("diagonal at " + ids[c] + " is " + rho(r, c).str());
      if (r != c && len[r] >= len[c] && !rho(r, c).is_zero())
        rep.failures.push_back("entry (" + ids[r] + ", " + ids[c] + ") violates length triangularity");
    }
  const PolyMatrix id = PolyMatrix::identity(ids);
  for (std::size_t g = 0; g < d.generators.size(); ++g) {
    const PolyMatrix N = generator_matrix(d, g) + id;
    const PolyMatrix lhs = N.scaled(LaurentPoly::u(-d.generators[g].m)) * rho;
    const PolyMatrix rhs = rho * N.bar();
    if (!(lhs == rhs)) rep.failures.push_back("does not commute with generator " + d.generators[g].id);
  }
  return rep;
}

std::string CheckReport::str(std::string_view title) const {
  std::ostringstream os;
  os << title << ": " << (ok() ? "pass" : "fail") << '\n';
  for (const auto& f : failures) os << "  " << f << '\n';
  return os.str();
}

PolyMatrix klv_table(const ParamDatum& d) {
  const auto len = d.lengths();
  return canonical_basis(bar_matrix(d).rho, len);
}

}  // namespace twklv
