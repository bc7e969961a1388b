#include "twklv/coxeter.hpp"

#include "twklv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>

namespace twklv {

namespace {

CartanMatrix simply_laced(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  CartanMatrix a(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  for (auto [i, j] : edges) {
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
    a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -1;
  }
  return a;
}

std::vector<std::pair<int, int>> chain(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

CartanMatrix irreducible(char type, int n, const std::string& name) {
  auto bad = [&] { return UnknownName("unknown Cartan type '" + name + "'"); };
  const auto un = static_cast<std::size_t>(n);
  switch (type) {
    case 'A':
      if (n < 1) throw bad();
      return simply_laced(un, chain(n));
    case 'B':
    case 'C': {
      if (n < 2) throw bad();
      auto a = simply_laced(un, chain(n));
      if (type == 'B') a[un - 1][un - 2] = -2;
      else a[un - 2][un - 1] = -2;
      return a;
    }
    case 'D': {
      if (n < 4) throw bad();
      auto e = chain(n - 1);
      e.emplace_back(n - 3, n - 1);
      return simply_laced(un, e);
    }
    case 'E': {
      if (n < 6 || n > 8) throw bad();
      std::vector<std::pair<int, int>> e{{0, 2}, {1, 3}};
      for (int i = 2; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      return simply_laced(un, e);
    }
    case 'F': {
      if (n != 4) throw bad();
      auto a = simply_laced(4, chain(4));
      a[2][1] = -2;
      return a;
    }
    case 'G': {
      if (n != 2) throw bad();
      return {{2, -1}, {-3, 2}};
    }
    default:
      throw bad();
  }
}

}  // namespace

CartanMatrix cartan_from_name(std::string_view name) {
  const std::string full(name);
  std::vector<CartanMatrix> parts;
  std::size_t pos = 0;
  while (pos <= full.size()) {
    std::size_t next = full.find('x', pos);
    if (next == std::string::npos) next = full.size();
    const std::string part = full.substr(pos, next - pos);
    if (part.size() < 2 || !std::isupper(static_cast<unsigned char>(part[0])) ||
        !std::all_of(part.begin() + 1, part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw UnknownName("unknown Cartan type '" + full + "'");
    parts.push_back(irreducible(part[0], std::stoi(part.substr(1)), full));
    pos = next + 1;
  }
  std::size_t n = 0;
  for (const auto& p : parts) n += p.size();
  CartanMatrix a(n, std::vector<int>(n, 0));
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) a[off + i][off + j] = p[i][j];
    off += p.size();
  }
  return a;
}

WeylGroup::WeylGroup(CartanMatrix cartan, std::size_t max_order) : cartan_(std::move(cartan)) {
  const std::size_t n = cartan_.size();
  if (n == 0) throw NotFiniteType("Cartan matrix has rank 0");
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan_[i].size() != n) throw NotFiniteType("Cartan matrix is not square");
    if (cartan_[i][i] != 2) throw NotFiniteType("Cartan matrix diagonal must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan_[i][j] > 0 || ((cartan_[i][j] == 0) != (cartan_[j][i] == 0)))
        throw NotFiniteType("not a generalized Cartan matrix");
    }
  }

  // s_i(beta) = beta - <alpha_i^vee, beta> alpha_i
  auto reflect = [&](std::size_t i, const std::vector<int>& beta) {
    std::vector<int> out = beta;
    int pairing = 0;
    for (std::size_t j = 0; j < n; ++j) pairing += cartan_[i][j] * beta[j];
    out[i] -= pairing;
    return out;
  };

  std::map<std::vector<int>, std::size_t> seen;
  std::deque<std::vector<int>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.emplace(e, roots_.size());
    roots_.push_back(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      auto img = reflect(i, beta);
      if (seen.count(img)) continue;
      if (roots_.size() >= 255) throw NotFiniteType("root system is infinite or too large");
      seen.emplace(img, roots_.size());
      roots_.push_back(img);
      queue.push_back(img);
    }
  }
  const std::size_t nr = roots_.size();
  positive_.resize(nr);
  for (std::size_t k = 0; k < nr; ++k) {
    const bool pos = std::all_of(roots_[k].begin(), roots_[k].end(), [](int c) { return c >= 0; });
    const bool neg = std::all_of(roots_[k].begin(), roots_[k].end(), [](int c) { return c <= 0; });
    if (pos == neg) throw NotFiniteType("root with mixed signs; not a finite root system");
    positive_[k] = pos;
    num_positive_ += pos ? 1 : 0;
  }
  simple_root_.resize(n);
  for (std::size_t i = 0; i < n; ++i) simple_root_[i] = i;

  std::vector<std::vector<std::uint8_t>> sref(n, std::vector<std::uint8_t>(nr));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < nr; ++k) sref[i][k] = static_cast<std::uint8_t>(seen.at(reflect(i, roots_[k])));

  // breadth-first enumeration by left multiplication
  std::vector<std::uint8_t> id(nr);
  for (std::size_t k = 0; k < nr; ++k) id[k] = static_cast<std::uint8_t>(k);
  perms_ = id;
  length_.push_back(0);
  index_.emplace(key_of(id), 0);
  for (std::size_t w = 0; w < length_.size(); ++w) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint8_t> p(nr);
      for (std::size_t k = 0; k < nr; ++k) p[k] = sref[i][perms_[w * nr + k]];
      auto key = key_of(p);
      auto it = index_.find(key);
      Elt target;
      if (it == index_.end()) {
        if (length_.size() >= max_order)
          throw GroupTooLarge("Weyl group has more than " + std::to_string(max_order) + " elements");
        target = static_cast<Elt>(length_.size());
        index_.emplace(std::move(key), target);
        perms_.insert(perms_.end(), p.begin(), p.end());
        length_.push_back(length_[w] + 1);
      } else {
        target = it->second;
      }
      if (left_.size() < (w + 1) * n) left_.resize((w + 1) * n);
      left_[w * n + i] = target;
    }
  }
  const std::size_t order = length_.size();
  left_.resize(order * n);
  right_.resize(order * n);
  for (std::size_t w = 0; w < order; ++w) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint8_t> imgs(n);
      for (std::size_t j = 0; j < n; ++j) imgs[j] = perms_[w * nr + sref[i][simple_root_[j]]];
      right_[w * n + i] = find(imgs);
    }
    int inversions = 0;
    for (std::size_t k = 0; k < nr; ++k)
      if (positive_[k] && !positive_[perms_[w * nr + k]]) ++inversions;
    if (inversions != length_[w]) throw std::logic_error("length mismatch in Weyl group enumeration");
    if (length_[w] > length_[longest_]) longest_ = static_cast<Elt>(w);
  }
}

std::string WeylGroup::key_of(std::span<const std::uint8_t> perm) const {
  std::string key(rank(), '\0');
  for (std::size_t j = 0; j < rank(); ++j) key[j] = static_cast<char>(perm[simple_root_[j]]);
  return key;
}

std::size_t WeylGroup::root_index(const std::vector<int>& root) const {
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (roots_[k] == root) return k;
  throw std::invalid_argument("not a root");
}

WeylGroup::Elt WeylGroup::find(const std::vector<std::uint8_t>& simple_images) const {
  std::string key(simple_images.begin(), simple_images.end());
  auto it = index_.find(key);
  if (it == index_.end()) throw std::logic_error("root permutation is not a group element");
  return it->second;
}

WeylGroup::Elt WeylGroup::mul(Elt a, Elt b) const {
  const std::size_t nr = roots_.size();
  std::vector<std::uint8_t> imgs(rank());
  for (std::size_t j = 0; j < rank(); ++j) imgs[j] = perms_[a * nr + perms_[b * nr + simple_root_[j]]];
  return find(imgs);
}

WeylGroup::Elt WeylGroup::inverse(Elt w) const {
  const std::size_t nr = roots_.size();
  std::vector<std::uint8_t> imgs(rank());
  for (std::size_t k = 0; k < nr; ++k) {
    const auto img = perms_[w * nr + k];
    if (img < rank()) imgs[img] = static_cast<std::uint8_t>(k);
  }
  return find(imgs);
}

WeylGroup::Elt WeylGroup::from_word(std::span<const int> word) const {
  Elt w = identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = left_mul_simple(*it, w);
  return w;
}

std::vector<int> WeylGroup::reduced_word(Elt w) const {
  std::vector<int> word;
  while (length(w) > 0) {
    for (int i = 0; i < static_cast<int>(rank()); ++i) {
      const Elt v = left_mul_simple(i, w);
      if (length(v) < length(w)) {
        word.push_back(i);
        w = v;
        break;
      }
    }
  }
  return word;
}

bool WeylGroup::bruhat_leq(Elt y, Elt w) const {
  // if s w < w then y <= w iff (s y < y ? s y <= s w : y <= s w)
  while (true) {
    if (length(y) > length(w)) return false;
    if (length(w) == 0) return y == w;
    if (length(y) == length(w)) return y == w;
    int s = -1;
    for (int i = 0; i < static_cast<int>(rank()); ++i)
      if (length(left_mul_simple(i, w)) < length(w)) {
        s = i;
        break;
      }
    const Elt sy = left_mul_simple(s, y);
    if (length(sy) < length(y)) y = sy;
    w = left_mul_simple(s, w);
  }
}

std::vector<int> parse_sigma(std::string_view text, std::size_t rank) {
  std::vector<int> sigma(rank);
  for (std::size_t i = 0; i < rank; ++i) sigma[i] = static_cast<int>(i);
  std::vector<bool> used(rank, false);
  std::string s(text);
  if (s == "id" || s == "1") return sigma;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
  };
  skip_space();
  while (i < s.size()) {
    if (s[i] != '(') throw InvalidSigma("expected '(' in sigma '" + s + "'");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (i >= s.size()) throw InvalidSigma("unterminated cycle in '" + s + "'");
      if (s[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw InvalidSigma("bad character in sigma '" + s + "'");
      int v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
      if (v < 1 || static_cast<std::size_t>(v) > rank) throw InvalidSigma("sigma index out of range in '" + s + "'");
      if (used[static_cast<std::size_t>(v - 1)]) throw InvalidSigma("repeated index in sigma '" + s + "'");
      used[static_cast<std::size_t>(v - 1)] = true;
      cycle.push_back(v - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      sigma[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    skip_space();
  }
  return sigma;
}

std::string sigma_to_string(const std::vector<int>& sigma) {
  std::ostringstream os;
  std::vector<bool> done(sigma.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (done[i] || sigma[i] == static_cast<int>(i)) continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) os << ' ';
      os << j + 1;
      first = false;
      j = static_cast<std::size_t>(sigma[j]);
    }
    os << ')';
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

namespace {

std::string word_label(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i + 1);
  return s;
}

}  // namespace

FoldedSystem::FoldedSystem(WeylGroup base, std::vector<int> sigma) : base_(std::move(base)), sigma_(std::move(sigma)) {
  const std::size_t n = base_.rank();
  if (sigma_.size() != n) throw InvalidSigma("sigma has wrong size");
  std::vector<bool> hit(n, false);
  for (int v : sigma_) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || hit[static_cast<std::size_t>(v)])
      throw InvalidSigma("sigma is not a permutation");
    hit[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (sigma_[static_cast<std::size_t>(sigma_[i])] != static_cast<int>(i))
      throw InvalidSigma("sigma is not an involution: " + sigma_to_string(sigma_));

  for (std::size_t i = 0; i < n; ++i) {
    const int j = sigma_[i];
    if (j < static_cast<int>(i)) continue;
    FoldedGenerator g;
    const int ii = static_cast<int>(i);
    if (j == ii) {
      g.orbit = {ii};
      g.m = 1;
      g.element = base_.simple(ii);
      g.label = word_label({ii});
    } else {
      const auto st = base_.mul(base_.simple(ii), base_.simple(j));
      int order = 1;
      for (auto p = st; p != base_.identity(); p = base_.mul(p, st)) ++order;
      if (order == 2) {
        g.m = 2;
        g.element = st;
        g.label = word_label({ii, j});
      } else if (order == 3) {
        g.m = 3;
        g.element = base_.mul(st, base_.simple(ii));
        g.label = word_label({ii, j, ii});
      } else {
        throw UnsupportedOrbit("sigma-orbit {s" + std::to_string(i + 1) + ", s" + std::to_string(j + 1) +
                               "} has m(s,t) = " + std::to_string(order) + "; only 2 and 3 are supported");
      }
      g.orbit = {ii, j};
    }
    gens_.push_back(std::move(g));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (base_.cartan()[static_cast<std::size_t>(sigma_[i])][static_cast<std::size_t>(sigma_[j])] !=
          base_.cartan()[i][j])
        throw InvalidSigma("sigma " + sigma_to_string(sigma_) + " is not a Dynkin diagram automorphism");

  const auto& roots = base_.roots();
  std::vector<std::size_t> sigma_root(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    std::vector<int> img(n);
    for (std::size_t i = 0; i < n; ++i) img[static_cast<std::size_t>(sigma_[i])] = roots[k][i];
    sigma_root[k] = base_.root_index(img);
  }

  struct Entry {
    WeylGroup::Elt w;
    std::vector<std::size_t> word;
  };
  std::vector<Entry> fixed;
  for (WeylGroup::Elt w = 0; w < base_.order(); ++w) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      ok = base_.act(w, sigma_root[j]) == sigma_root[base_.act(w, j)];
    if (!ok) continue;
    Entry e{w, {}};
    WeylGroup::Elt v = w;
    while (base_.length(v) > 0) {
      bool found = false;
      for (std::size_t g = 0; g < gens_.size(); ++g) {
        const auto x = base_.mul(gens_[g].element, v);
        if (base_.length(x) < base_.length(v)) {
          if (base_.length(x) != base_.length(v) - gens_[g].m)
            throw std::logic_error("folded length is not additive");
          e.word.push_back(g);
          v = x;
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("sigma-fixed element without a folded descent");
    }
    fixed.push_back(std::move(e));
  }
  std::sort(fixed.begin(), fixed.end(), [&](const Entry& a, const Entry& b) {
    const int la = base_.length(a.w), lb = base_.length(b.w);
    if (la != lb) return la < lb;
    return a.word < b.word;
  });
  for (auto& e : fixed) {
    position_.emplace(e.w, elements_.size());
    elements_.push_back(e.w);
    std::string label;
    for (auto g : e.word) label += gens_[g].label;
    labels_.push_back(label.empty() ? "e" : label);
    words_.push_back(std::move(e.word));
  }
  left_.resize(elements_.size() * gens_.size());
  for (std::size_t idx = 0; idx < elements_.size(); ++idx)
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      const auto x = base_.mul(gens_[g].element, elements_[idx]);
      const int d = base_.length(x) - base_.length(elements_[idx]);
      if (d != gens_[g].m && d != -gens_[g].m) throw std::logic_error("folded length changes by other than m");
      left_[idx * gens_.size() + g] = position_.at(x);
    }
}

bool FoldedSystem::is_fixed(WeylGroup::Elt w) const { return position_.count(w) != 0; }

std::size_t FoldedSystem::index_of(WeylGroup::Elt w) const {
  auto it = position_.find(w);
  if (it == position_.end()) throw std::invalid_argument("element is not sigma-fixed");
  return it->second;
}

std::size_t FoldedSystem::index_of_label(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw UnknownName("no element labelled '" + std::string(label) + "'");
}

int FoldedSystem::max_length() const { return elements_.empty() ? 0 : length(elements_.size() - 1); }

}  // namespace twklv
