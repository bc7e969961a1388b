#include "twklv/errors.hpp"
#include "twklv/fq.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace twklv {

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : all_families())
    if (family_name(f) == name) return f;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::A1A1Sc: return "a1a1-sc";
    case Family::A1A1Int: return "a1a1-int";
    case Family::A1A1Ad: return "a1a1-ad";
    case Family::A2C: return "a2-c";
    case Family::A2S: return "a2-s";
  }
  return "";
}

std::vector<Family> all_families() {
  return {Family::A1A1Sc, Family::A1A1Int, Family::A1A1Ad, Family::A2C, Family::A2S};
}

const FamilyInfo& family_info(Family f) {
  static const std::vector<FamilyInfo> table = {
      {Family::A1A1Sc, "st", 2, {{"zero", {"L1"}}, {"infinity", {"L2"}}, {"open", {"L'", "L''"}}}, {}},
      {Family::A1A1Int, "st", 2, {{"closed", {"L1"}}, {"open", {"L1'", "L2'"}}}, {}},
      {Family::A1A1Ad, "st", 2, {{"closed", {"L"}}, {"open", {"L1'"}}}, {}},
      // the closed orbit of the unitary form meets the open one through a
      // three-imaginary root, the orthogonal form through a semi-imaginary one
      {Family::A2C, "sts", 3, {{"closed", {"L"}}, {"open", {"L'"}}}, {Kind::SI3Plus, Kind::R3Minus}},
      {Family::A2S, "sts", 3, {{"closed", {"L"}}, {"open", {"L'", "L''"}}}, {Kind::I3Plus, Kind::SR3Minus}},
  };
  for (const auto& info : table)
    if (info.family == f) return info;
  throw std::logic_error("unknown family");
}

namespace {

using Elt = GaloisField::Elt;

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Fills orbits from a union-find over points, given a stratum for each point.
void finish_scene(FqScene& s, UnionFind& uf, const std::vector<std::size_t>& stratum_of_point) {
  const std::size_t n = s.point_count;
  std::unordered_map<std::size_t, std::size_t> root_to_orbit;
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> strata;
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t r = uf.find(p);
    auto [it, inserted] = root_to_orbit.emplace(r, orbits.size());
    if (inserted) {
      orbits.emplace_back();
      strata.push_back(stratum_of_point[p]);
    }
    orbits[it->second].push_back(p);
    if (strata[it->second] != stratum_of_point[p])
      throw std::logic_error("K(F_q)-orbit meets two geometric orbits");
  }
  std::vector<std::size_t> order(orbits.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (strata[a] != strata[b]) return strata[a] < strata[b];
    return orbits[a].front() < orbits[b].front();
  });
  s.orbit_of.assign(n, 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    s.orbits.push_back(orbits[order[k]]);
    s.stratum_of_orbit.push_back(strata[order[k]]);
    for (std::size_t p : s.orbits.back()) s.orbit_of[p] = k;
  }
}

// Twisted forms of SL2 x SL2 with Frobenius (X, Y) -> (Y^(q), X^(q)). Points
// are P1(F_{q^2}); K(F_q) is the part of the diagonal torus normaliser fixed
// by Frobenius up to the centre allowed by the isogeny type.
FqScene build_a1a1(Family family, std::uint32_t q, std::uint32_t p, std::uint32_t k) {
  GaloisField F(p, 4 * k);
  const std::uint64_t q2 = static_cast<std::uint64_t>(q) * q;
  const std::uint64_t q3 = q2 * q;

  std::vector<Elt> elems;  // F_{q^2}, then infinity at index q^2
  std::vector<std::size_t> index(F.size(), static_cast<std::size_t>(-1));
  for (Elt x = 0; x < F.size(); ++x)
    if (F.pow(x, q2) == x) {
      index[x] = elems.size();
      elems.push_back(x);
    }
  if (elems.size() != q2) throw std::logic_error("subfield enumeration failed");
  const std::size_t inf = elems.size();

  FqScene s;
  s.family = family;
  s.q = q;
  s.point_count = elems.size() + 1;

  const bool with_j = family != Family::A1A1Sc;
  std::vector<std::pair<Elt, Elt>> centre{{1, 1}};
  const Elt minus_one = F.neg(1);
  if (family == Family::A1A1Int) centre.push_back({minus_one, minus_one});
  if (family == Family::A1A1Ad) {
    centre.push_back({minus_one, 1});
    centre.push_back({1, minus_one});
    centre.push_back({minus_one, minus_one});
  }

  // a transformation is z -> a^2 z (diagonal) or z -> -1 / (a^2 z) (antidiagonal)
  std::vector<std::pair<bool, Elt>> maps;
  std::size_t found = 0;
  for (Elt a = 1; a < F.size(); ++a) {
    for (auto [e1, e2] : centre) {
      // Y^(q) = e1 X and X^(q) = e2 Y for X = J^s diag(a, 1/a)
      const Elt b = F.pow(F.mul(e1, a), q3);
      if (F.pow(a, q) != F.mul(e2, b)) continue;
      for (int shape = 0; shape < (with_j ? 2 : 1); ++shape) {
        ++found;
        maps.emplace_back(shape == 1, F.mul(a, a));
      }
    }
  }
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  s.group_size = found;

  UnionFind uf(s.point_count);
  for (auto [anti, c] : maps) {
    for (std::size_t i = 0; i < s.point_count; ++i) {
      std::size_t j;
      if (i == inf) {
        j = anti ? index[0] : inf;
      } else if (elems[i] == 0) {
        j = anti ? inf : i;
      } else {
        Elt z = F.mul(c, elems[i]);
        if (anti) z = F.neg(F.inv(z));
        j = index[z];
        if (j == static_cast<std::size_t>(-1)) throw std::logic_error("torus element leaves P1(F_{q^2})");
      }
      uf.unite(i, j);
    }
  }
  std::vector<std::size_t> stratum(s.point_count);
  for (std::size_t i = 0; i < s.point_count; ++i) {
    const bool is_zero = i != inf && elems[i] == 0;
    if (family == Family::A1A1Sc) stratum[i] = is_zero ? 0 : i == inf ? 1 : 2;
    else stratum[i] = (is_zero || i == inf) ? 0 : 1;
  }
  finish_scene(s, uf, stratum);
  return s;
}

using Vec3 = std::array<Elt, 3>;
using Mat3 = std::array<Vec3, 3>;  // columns

// Isotropic lines for h(v, w) = -v0 conj(w2) - v2 conj(w0) + v1 conj(w1) on
// F_{q^2}^3, with K = S(U2 x U1) or SO(3) over F_q.
FqScene build_a2(Family family, std::uint32_t q, std::uint32_t p, std::uint32_t k) {
  GaloisField F(p, 2 * k);
  const std::uint32_t n = F.size();
  auto conj = [&](Elt x) { return F.pow(x, q); };
  auto herm = [&](const Vec3& v, const Vec3& w) {
    Elt s = F.mul(v[1], conj(w[1]));
    s = F.sub(s, F.mul(v[0], conj(w[2])));
    s = F.sub(s, F.mul(v[2], conj(w[0])));
    return s;
  };
  auto key = [&](const Vec3& v) {
    return (static_cast<std::uint64_t>(v[0]) * n + v[1]) * n + v[2];
  };
  auto normalize = [&](Vec3 v) {
    std::size_t lead = 0;
    while (lead < 3 && v[lead] == 0) ++lead;
    if (lead == 3) throw std::logic_error("zero vector");
    const Elt inv = F.inv(v[lead]);
    for (auto& x : v) x = F.mul(x, inv);
    return v;
  };

  std::vector<Vec3> points;
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (int lead = 0; lead < 3; ++lead) {
    const std::uint32_t free_count = lead == 0 ? n * n : lead == 1 ? n : 1;
    for (std::uint32_t t = 0; t < free_count; ++t) {
      Vec3 v{0, 0, 0};
      v[static_cast<std::size_t>(lead)] = 1;
      std::uint32_t r = t;
      for (int j = lead + 1; j < 3; ++j) {
        v[static_cast<std::size_t>(j)] = r % n;
        r /= n;
      }
      if (herm(v, v) != 0) continue;
      index.emplace(key(v), points.size());
      points.push_back(v);
    }
  }

  std::vector<Mat3> group;
  if (family == Family::A2C) {
    // columns c0 = (a, 0, g), c1 = (0, l, 0), c2 = (b, 0, d)
    for (Elt a = 0; a < n; ++a)
      for (Elt g = 0; g < n; ++g) {
        if (a == 0 && g == 0) continue;
        const Vec3 c0{a, 0, g};
        if (herm(c0, c0) != 0) continue;
        for (Elt t = 0; t < n; ++t) {
          Elt b, d;
          if (a != 0) {
            // -a conj(d) - g conj(b) = -1
            b = t;
            d = conj(F.div(F.sub(1, F.mul(g, conj(b))), a));
          } else {
            b = conj(F.inv(g));
            d = t;
          }
          const Vec3 c2{b, 0, d};
          if (herm(c2, c2) != 0 || herm(c0, c2) != F.neg(1)) continue;
          const Elt det = F.sub(F.mul(a, d), F.mul(b, g));
          if (det == 0) continue;
          const Elt l = F.inv(det);
          if (F.mul(l, conj(l)) != 1) continue;
          group.push_back({c0, Vec3{0, l, 0}, c2});
        }
      }
  } else {
    std::vector<Elt> fq;
    for (Elt x = 0; x < n; ++x)
      if (F.pow(x, q) == x) fq.push_back(x);
    auto bil = [&](const Vec3& v, const Vec3& w) {
      Elt s = F.mul(v[1], w[1]);
      s = F.sub(s, F.mul(v[0], w[2]));
      s = F.sub(s, F.mul(v[2], w[0]));
      return s;
    };
    std::vector<Vec3> isotropic;
    for (Elt x : fq)
      for (Elt y : fq)
        for (Elt z : fq) {
          const Vec3 v{x, y, z};
          if ((x || y || z) && bil(v, v) == 0) isotropic.push_back(v);
        }
    const Elt minus_one = F.neg(1);
    auto det3 = [&](const Mat3& m) {
      // columns m[0], m[1], m[2]
      auto e = [&](int r, int c) { return m[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]; };
      Elt s = F.mul(e(0, 0), F.sub(F.mul(e(1, 1), e(2, 2)), F.mul(e(1, 2), e(2, 1))));
      s = F.sub(s, F.mul(e(0, 1), F.sub(F.mul(e(1, 0), e(2, 2)), F.mul(e(1, 2), e(2, 0)))));
      s = F.add(s, F.mul(e(0, 2), F.sub(F.mul(e(1, 0), e(2, 1)), F.mul(e(1, 1), e(2, 0)))));
      return s;
    };
    for (const Vec3& c0 : isotropic)
      for (const Vec3& c2 : isotropic) {
        if (bil(c0, c2) != minus_one) continue;
        // c1 spans the orthogonal complement of c0 and c2: J c0 x J c2
        const Vec3 r0{F.neg(c0[2]), c0[1], F.neg(c0[0])};
        const Vec3 r2{F.neg(c2[2]), c2[1], F.neg(c2[0])};
        const Vec3 kvec{F.sub(F.mul(r0[1], r2[2]), F.mul(r0[2], r2[1])),
                        F.sub(F.mul(r0[2], r2[0]), F.mul(r0[0], r2[2])),
                        F.sub(F.mul(r0[0], r2[1]), F.mul(r0[1], r2[0]))};
        const Elt norm = bil(kvec, kvec);
        if (norm == 0) continue;
        for (Elt mu : fq) {
          if (mu == 0 || F.mul(F.mul(mu, mu), norm) != 1) continue;
          const Vec3 c1{F.mul(mu, kvec[0]), F.mul(mu, kvec[1]), F.mul(mu, kvec[2])};
          const Mat3 m{c0, c1, c2};
          if (det3(m) == 1) group.push_back(m);
        }
      }
  }

  FqScene s;
  s.family = family;
  s.q = q;
  s.point_count = points.size();
  s.group_size = group.size();

  auto apply = [&](const Mat3& m, const Vec3& v) {
    Vec3 out{0, 0, 0};
    for (std::size_t c = 0; c < 3; ++c) {
      if (v[c] == 0) continue;
      for (std::size_t r = 0; r < 3; ++r) out[r] = F.add(out[r], F.mul(m[c][r], v[c]));
    }
    return normalize(out);
  };

  UnionFind uf(s.point_count);
  std::vector<bool> done(s.point_count, false);
  for (std::size_t i = 0; i < s.point_count; ++i) {
    if (done[i]) continue;
    for (const Mat3& m : group) {
      auto it = index.find(key(apply(m, points[i])));
      if (it == index.end()) throw std::logic_error("group element does not preserve the form");
      uf.unite(it->second, i);
      done[it->second] = true;
    }
    done[i] = true;
  }

  std::vector<std::size_t> stratum(s.point_count);
  for (std::size_t i = 0; i < s.point_count; ++i) {
    const Vec3& v = points[i];
    if (family == Family::A2C) {
      stratum[i] = v[1] == 0 ? 0 : 1;
    } else {
      const bool rational = std::all_of(v.begin(), v.end(), [&](Elt x) { return F.pow(x, q) == x; });
      stratum[i] = rational ? 0 : 1;
    }
  }
  finish_scene(s, uf, stratum);
  return s;
}

}  // namespace

FqScene build_scene(Family f, std::uint32_t q) {
  auto pp = prime_power(q);
  if (!pp) throw UnsupportedQ("q = " + std::to_string(q) + " is not a prime power");
  if (pp->first == 2) throw UnsupportedQ("q = " + std::to_string(q) + " has characteristic 2");
  if (q > 25) throw UnsupportedQ("q = " + std::to_string(q) + " exceeds the supported range (q <= 25)");
  switch (f) {
    case Family::A1A1Sc:
    case Family::A1A1Int:
    case Family::A1A1Ad:
      return build_a1a1(f, q, pp->first, pp->second);
    case Family::A2C:
    case Family::A2S:
      return build_a2(f, q, pp->first, pp->second);
  }
  throw std::logic_error("unknown family");
}

std::vector<std::int64_t> convolve(const FqScene& s, int w, const std::vector<std::int64_t>& f) {
  std::vector<std::int64_t> out(s.point_count, 0);
  for (std::size_t b = 0; b < s.point_count; ++b) {
    std::int64_t sum = 0;
    for (std::size_t b2 = 0; b2 < s.point_count; ++b2)
      if (s.relpos(b, b2) == w) sum += f[b2];
    out[b] = sum;
  }
  return out;
}

std::vector<std::vector<std::int64_t>> action_at_q(const FqScene& s) {
  const std::size_t k = s.orbits.size();
  std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t o = 0; o < k; ++o) {
    std::vector<std::int64_t> chi(s.point_count, 0);
    for (std::size_t p : s.orbits[o]) chi[p] = 1;
    const auto img = convolve(s, 1, chi);
    for (std::size_t o2 = 0; o2 < k; ++o2) {
      const auto& pts = s.orbits[o2];
      m[o2][o] = img[pts.front()];
      for (std::size_t p : pts)
        if (img[p] != m[o2][o]) throw std::logic_error("convolution is not K(F_q)-invariant");
    }
  }
  return m;
}

bool CountReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const CountRow& r) { return r.pass; });
}

std::string CountReport::str() const {
  std::ostringstream os;
  os << "family\t" << family_name(family) << "\nq\t" << q << '\n';
  os << "check\texpected\tactual\tresult\n";
  for (const auto& r : rows) os << r.what << '\t' << r.expected << '\t' << r.actual << '\t' << (r.pass ? "pass" : "fail") << '\n';
  return os.str();
}

namespace {

std::string join_sizes(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

}  // namespace

CountReport verify_counts(const FqScene& s) {
  const std::int64_t q = s.q;
  std::int64_t points = 0;
  std::vector<std::int64_t> sizes;
  switch (s.family) {
    case Family::A1A1Sc:
      points = q * q + 1;
      sizes = {1, 1, (q * q - 1) / 2, (q * q - 1) / 2};
      break;
    case Family::A1A1Int:
      points = q * q + 1;
      sizes = {2, (q * q - 1) / 2, (q * q - 1) / 2};
      break;
    case Family::A1A1Ad:
      points = q * q + 1;
      sizes = {2, q * q - 1};
      break;
    case Family::A2C:
      points = q * q * q + 1;
      sizes = {q + 1, q * q * q - q};
      break;
    case Family::A2S:
      points = q * q * q + 1;
      sizes = {q + 1, (q * q * q - q) / 2, (q * q * q - q) / 2};
      break;
  }
  std::vector<std::int64_t> actual;
  for (const auto& o : s.orbits) actual.push_back(static_cast<std::int64_t>(o.size()));
  CountReport rep{s.family, s.q, {}};
  rep.rows.push_back({"points", std::to_string(points), std::to_string(s.point_count),
                      static_cast<std::int64_t>(s.point_count) == points});
  rep.rows.push_back({"orbits", std::to_string(sizes.size()), std::to_string(actual.size()), sizes.size() == actual.size()});
  rep.rows.push_back({"orbit sizes", join_sizes(sizes), join_sizes(actual), join_sizes(sizes) == join_sizes(actual)});
  return rep;
}

}  // namespace twklv
