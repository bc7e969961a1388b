#include "twklv/module_action.hpp"

#include "twklv/errors.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace twklv {

MElt MElt::basis(std::size_t p, LaurentPoly c) {
  MElt x;
  x.add(p, c);
  return x;
}

MElt MElt::from_dense(const std::vector<LaurentPoly>& v) {
  MElt x;
  for (std::size_t i = 0; i < v.size(); ++i) x.add(i, v[i]);
  return x;
}

LaurentPoly MElt::coeff(std::size_t p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void MElt::add(std::size_t p, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<LaurentPoly> MElt::dense(std::size_t n) const {
  std::vector<LaurentPoly> v(n);
  for (const auto& [p, c] : terms_) v.at(p) = c;
  return v;
}

std::vector<LaurentPoly> status_column(const ParamDatum& d, std::size_t g, std::size_t p, const GeneratorStatus& st) {
  const KindInfo& info = kind_info(st.kind);
  const int m = info.m;
  const LaurentPoly u = LaurentPoly::u();
  const LaurentPoly um = LaurentPoly::u(m);
  std::vector<LaurentPoly> col(d.parameters.size());
  const std::string& where = d.generators[g].id + " at " + d.parameters[p].id;

  std::size_t x = p;
  if (info.has_cross) {
    if (!st.cross) throw DanglingReference(where + ": missing cross target");
    x = d.require_param(*st.cross);
  }
  if (static_cast<int>(st.cayley.size()) != info.cayley_count)
    throw DanglingReference(where + ": wrong number of Cayley targets");
  std::vector<std::size_t> c;
  for (const auto& id : st.cayley) c.push_back(d.require_param(id));

  switch (st.kind) {
    case Kind::C1Plus:
    case Kind::C2Plus:
    case Kind::C3Plus:
      col[x] += 1;
      break;
    case Kind::C1Minus:
    case Kind::C2Minus:
    case Kind::C3Minus:
      col[x] += um;
      col[p] += um - 1;
      break;
    case Kind::I1_1Plus:
    case Kind::I2_11Plus:
      col[x] += 1;
      col[c[0]] += 1;
      break;
    case Kind::R1_1Minus:
    case Kind::R2_11Minus:
      col[p] += um - 2;
      col[c[0]] += um - 1;
      col[c[1]] += um - 1;
      break;
    case Kind::R1sMinus:
      col[p] += u;
      break;
    case Kind::I1_2Plus:
    case Kind::I2_22Plus:
      col[p] += 1;
      col[c[0]] += 1;
      col[c[1]] += 1;
      break;
    case Kind::R1_2Minus:
    case Kind::R2_22Minus:
      col[c[0]] += um - 1;
      col[p] += um - 1;
      col[x] -= 1;
      break;
    case Kind::I1_2sPlus:
    case Kind::RNP1Plus:
    case Kind::RNP2Plus:
    case Kind::RNP3Plus:
      col[p] -= 1;
      break;
    case Kind::IC1Minus:
    case Kind::IC2Minus:
    case Kind::IC3Minus:
      col[p] += um;
      break;
    case Kind::SI2Plus:
    case Kind::SI3Plus:
    case Kind::I3Plus:
      col[p] += u;
      col[c[0]] += u + 1;
      break;
    case Kind::SR2Minus:
    case Kind::R3Minus:
    case Kind::SR3Minus:
      col[c[0]] += um - u;
      col[p] += um - u - 1;
      break;
    case Kind::I2_12Plus:
      if (st.role != Role::Plus && st.role != Role::Minus)
        throw DanglingReference(where + ": 2I12+ needs role plus or minus");
      col[p] += 1;
      col[c[0]] += 1;
      col[c[1]] += st.role == Role::Plus ? 1 : -1;
      break;
    case Kind::R2_21Minus:
      if (st.role != Role::Sum && st.role != Role::Diff)
        throw DanglingReference(where + ": 2R21- needs role sum or diff");
      col[p] += um - 2;
      col[c[0]] += um - 1;
      col[c[1]] += st.role == Role::Sum ? um - 1 : -(um - 1);
      break;
  }
  return col;
}

PolyMatrix generator_matrix(const ParamDatum& d, std::size_t g) {
  PolyMatrix mat(d.param_ids());
  for (const auto& block : generator_blocks(d, g))
    for (std::size_t p : block) mat.set_column(p, status_column(d, g, p, d.status(g, p)));
  return mat;
}

std::vector<std::vector<std::size_t>> generator_blocks(const ParamDatum& d, std::size_t g) {
  const std::size_t n = d.parameters.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t p = 0; p < n; ++p) {
    const auto& st = d.status(g, p);
    std::vector<std::string> refs = st.cayley;
    if (st.cross) refs.push_back(*st.cross);
    for (const auto& id : refs) parent[find(d.require_param(id))] = find(p);
  }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<long> slot(n, -1);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t r = find(p);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(slot[r])].push_back(p);
  }
  return blocks;
}

MElt apply_matrix(const PolyMatrix& m, const MElt& x) {
  MElt out;
  for (const auto& [p, c] : x.terms())
    for (std::size_t r = 0; r < m.size(); ++r)
      if (!m(r, p).is_zero()) out.add(r, m(r, p) * c);
  return out;
}

MElt act_word(const ParamDatum& d, std::span<const std::string> word, const MElt& x) {
  MElt out = x;
  for (const auto& id : word) out = apply_matrix(generator_matrix(d, d.require_gen(id)), out);
  return out;
}

QuadraticReport quadratic_check(const ParamDatum& d) {
  QuadraticReport report;
  const auto ids = d.param_ids();
  for (std::size_t g = 0; g < d.generators.size(); ++g) {
    const PolyMatrix mg = generator_matrix(d, g);
    const PolyMatrix id = PolyMatrix::identity(ids);
    const PolyMatrix prod = (mg + id) * (mg - id.scaled(LaurentPoly::u(d.generators[g].m)));
    for (std::size_t r = 0; r < prod.size(); ++r)
      for (std::size_t c = 0; c < prod.size(); ++c)
        if (!prod(r, c).is_zero()) report.failures.push_back({d.generators[g].id, ids[r], ids[c], prod(r, c)});
  }
  return report;
}

std::string QuadraticReport::str() const {
  if (ok()) return "quadratic relation: pass\n";
  std::ostringstream os;
  os << "quadratic relation: fail\n";
  for (const auto& f : failures)
    os << "  generator " << f.generator << ": entry (" << f.row << ", " << f.col << ") = " << f.entry << '\n';
  return os.str();
}

void write_melt(std::ostream& os, const ParamDatum& d, const MElt& x) {
  for (const auto& [p, c] : x.terms()) os << d.parameters[p].id << '\t' << c << '\n';
}

}  // namespace twklv
