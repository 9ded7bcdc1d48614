#include "chev/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace chev {

namespace {

std::vector<int> cartan_for(char t, int n) {
  std::vector<int> a(n * n, 0);
  auto set = [&](int i, int j, int v) { a[i * n + j] = v; };
  for (int i = 0; i < n; ++i) set(i, i, 2);
  auto link = [&](int i, int j) {
    set(i, j, -1);
    set(j, i, -1);
  };
  // (short, long) entry carries the ratio
  auto multi = [&](int lng, int shrt, int ratio) {
    set(lng, shrt, -1);
    set(shrt, lng, -ratio);
  };
  switch (t) {
    case 'A':
      if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      if (n < 2) throw std::invalid_argument("B_n needs n >= 2");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      multi(n - 2, n - 1, 2);
      break;
    case 'C':
      if (n < 2) throw std::invalid_argument("C_n needs n >= 2");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      multi(n - 1, n - 2, 2);
      break;
    case 'D':
      if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw std::invalid_argument("E_n needs 6 <= n <= 8");
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) throw std::invalid_argument("F_n needs n = 4");
      link(0, 1);
      multi(1, 2, 2);
      link(2, 3);
      break;
    case 'G':
      if (n != 2) throw std::invalid_argument("G_n needs n = 2");
      multi(1, 0, 3);
      break;
    default:
      throw std::invalid_argument(std::string("unknown root system type '") + t + "'");
  }
  return a;
}

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::make(const std::string& label, size_t weyl_cap) {
  if (label.size() < 2) throw std::invalid_argument("bad root system label '" + label + "'");
  char t = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  int n = 0;
  try {
    size_t pos = 0;
    n = std::stoi(label.substr(1), &pos);
    if (pos != label.size() - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad root system label '" + label + "'");
  }
  if (n < 1 || n > kMaxRank) throw std::invalid_argument("rank out of range in '" + label + "'");
  std::shared_ptr<RootSystem> rs(new RootSystem());
  rs->type_ = t;
  rs->rank_ = n;
  rs->label_ = std::string(1, t) + std::to_string(n);
  rs->cartan_ = cartan_for(t, n);
  rs->build_roots();
  rs->build_weyl(weyl_cap);
  return rs;
}

void RootSystem::build_roots() {
  const int r = rank_;
  using Pair = std::pair<std::vector<int>, std::vector<int>>;
  std::map<std::vector<int>, std::vector<int>> found;
  std::deque<Pair> todo;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    todo.emplace_back(e, e);
  }
  while (!todo.empty()) {
    auto [c, d] = todo.front();
    todo.pop_front();
    if (found.count(c)) continue;
    found[c] = d;
    for (int i = 0; i < r; ++i) {
      int bc = 0, ad = 0;
      for (int j = 0; j < r; ++j) {
        bc += c[j] * cartan(i, j);
        ad += d[j] * cartan(j, i);
      }
      auto c2 = c;
      auto d2 = d;
      c2[i] -= bc;
      d2[i] -= ad;
      if (!found.count(c2)) todo.emplace_back(c2, d2);
    }
  }
  std::vector<Pair> pos;
  for (auto& [c, d] : found) {
    bool positive = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    if (positive) pos.emplace_back(c, d);
  }
  std::sort(pos.begin(), pos.end(), [](const Pair& a, const Pair& b) {
    int ha = 0, hb = 0;
    for (int x : a.first) ha += x;
    for (int x : b.first) hb += x;
    if (ha != hb) return ha < hb;
    return a.first < b.first;
  });
  npos_ = static_cast<int>(pos.size());
  roots_.assign(2 * npos_, Weight(r));
  root_simple_.assign(2 * npos_, {});
  coroot_.assign(2 * npos_, {});
  for (int b = 0; b < npos_; ++b) {
    const auto& [c, d] = pos[b];
    Weight w(r);
    for (int k = 0; k < r; ++k) {
      int s = 0;
      for (int j = 0; j < r; ++j) s += c[j] * cartan(k, j);
      w[k] = s;
    }
    roots_[b] = w;
    roots_[b + npos_] = -w;
    root_simple_[b] = c;
    coroot_[b] = d;
    std::vector<int> nc(c), nd(d);
    for (auto& x : nc) x = -x;
    for (auto& x : nd) x = -x;
    root_simple_[b + npos_] = nc;
    coroot_[b + npos_] = nd;
  }
  for (int b = 0; b < 2 * npos_; ++b) root_lookup_[roots_[b]] = b;
  simple_index_.assign(r, -1);
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    for (int b = 0; b < npos_; ++b)
      if (root_simple_[b] == e) simple_index_[i] = b;
  }
  int best = -1, besth = -1;
  for (int b = 0; b < npos_; ++b) {
    int h = 0;
    for (int x : coroot_[b]) h += x;
    if (h > besth) {
      besth = h;
      best = b;
    }
  }
  theta_ = best;
  coxeter_ = besth + 1;
}

int RootSystem::root_index(const Weight& w) const {
  auto it = root_lookup_.find(w);
  return it == root_lookup_.end() ? -1 : it->second;
}

int RootSystem::height(int b) const {
  int h = 0;
  for (int x : root_simple_[b]) h += x;
  return h;
}

int64_t RootSystem::pair(const Weight& mu, int b) const {
  int64_t s = 0;
  const auto& d = coroot_[b];
  for (int j = 0; j < rank_; ++j) s += static_cast<int64_t>(d[j]) * mu[j];
  return s;
}

Weight RootSystem::reflect(int b, const Weight& mu) const {
  return mu - roots_[b] * static_cast<int>(pair(mu, b));
}

Weight RootSystem::reflect(const Weight& beta, const Weight& mu) const {
  int b = root_index(beta);
  if (b < 0) throw std::invalid_argument("not a root: " + beta.str());
  return reflect(b, mu);
}

Weight RootSystem::affine_reflect(int b, int64_t k, const Weight& mu) const {
  return reflect(b, mu) + roots_[b] * static_cast<int>(k);
}

Weight RootSystem::rho() const {
  Weight w(rank_);
  for (int i = 0; i < rank_; ++i) w[i] = 1;
  return w;
}

Weight RootSystem::fundamental(int i) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("fundamental weight index out of range");
  Weight w(rank_);
  w[i - 1] = 1;
  return w;
}

bool RootSystem::is_dominant(const Weight& mu) const {
  for (int i = 0; i < rank_; ++i)
    if (mu[i] < 0) return false;
  return true;
}

bool RootSystem::is_antidominant(const Weight& mu) const {
  for (int i = 0; i < rank_; ++i)
    if (mu[i] > 0) return false;
  return true;
}

void RootSystem::build_weyl(size_t cap) {
  const int r = rank_;
  weyl_cap_ = cap;
  auto simple_act = [&](int i, const Weight& mu) {
    Weight out = mu;
    int m = mu[i];
    for (int k = 0; k < r; ++k) out[k] -= m * cartan(k, i);
    return out;
  };
  // level-by-level BFS on rho images
  std::vector<std::vector<Weight>> levels;
  std::unordered_map<Weight, int, WeightHash> level_of;
  levels.push_back({rho()});
  level_of[rho()] = 0;
  size_t total = 1;
  while (true) {
    std::vector<Weight> next;
    for (const auto& x : levels.back()) {
      for (int i = 0; i < r; ++i) {
        if (x[i] <= 0) continue;  // s_i x is longer iff <x rho, alpha_i^vee> > 0
        Weight y = simple_act(i, x);
        if (level_of.count(y)) continue;
        level_of[y] = static_cast<int>(levels.size());
        next.push_back(y);
        if (++total > cap) {
          weyl_ok_ = false;
          return;
        }
      }
    }
    if (next.empty()) break;
    levels.push_back(std::move(next));
  }
  // canonical words: first letter is the least left descent
  std::unordered_map<Weight, std::vector<int>, WeightHash> word_of;
  word_of[rho()] = {};
  for (size_t L = 1; L < levels.size(); ++L) {
    for (const auto& x : levels[L]) {
      int i = 0;
      while (x[i] >= 0) ++i;
      Weight y = simple_act(i, x);
      std::vector<int> w{i + 1};
      const auto& rest = word_of.at(y);
      w.insert(w.end(), rest.begin(), rest.end());
      word_of[x] = std::move(w);
    }
    std::sort(levels[L].begin(), levels[L].end(),
              [&](const Weight& a, const Weight& b) { return word_of.at(a) < word_of.at(b); });
  }
  size_t n = total;
  len_.resize(n);
  words_.resize(n);
  rho_image_.resize(n);
  int idx = 0;
  for (size_t L = 0; L < levels.size(); ++L)
    for (const auto& x : levels[L]) {
      len_[idx] = static_cast<int>(L);
      words_[idx] = word_of.at(x);
      rho_image_[idx] = x;
      by_rho_[x] = idx;
      ++idx;
    }
  // weight-action matrices: M_x = S_i M_{s_i x}
  mat_.assign(n * r * r, 0);
  for (int k = 0; k < r; ++k) mat_[k * r + k] = 1;
  for (size_t e = 1; e < n; ++e) {
    int i = words_[e][0] - 1;
    Weight y = simple_act(i, rho_image_[e]);
    int p = by_rho_.at(y);
    for (int col = 0; col < r; ++col) {
      Weight v(r);
      for (int k = 0; k < r; ++k) v[k] = mat_[p * r * r + k * r + col];
      Weight sv = simple_act(i, v);
      for (int k = 0; k < r; ++k) mat_[e * r * r + k * r + col] = sv[k];
    }
  }
  rmul_.assign(n * r, 0);
  lmul_.assign(n * r, 0);
  inv_.assign(n, 0);
  for (size_t e = 0; e < n; ++e) {
    for (int i = 0; i < r; ++i) {
      lmul_[e * r + i] = by_rho_.at(simple_act(i, rho_image_[e]));
      rmul_[e * r + i] = by_rho_.at(act(static_cast<Elt>(e), simple_act(i, rho())));
    }
  }
  weyl_ok_ = true;
  for (size_t e = 0; e < n; ++e) {
    Elt x = 0;
    const auto& w = words_[e];
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = rmul_[x * r + (*it - 1)];
    inv_[e] = x;
  }
  const int nr = num_roots();
  root_perm_.assign(n * nr, 0);
  for (size_t e = 0; e < n; ++e)
    for (int b = 0; b < nr; ++b) root_perm_[e * nr + b] = root_lookup_.at(act(static_cast<Elt>(e), roots_[b]));
  refl_elt_.assign(nr, 0);
  for (int b = 0; b < nr; ++b) refl_elt_[b] = by_rho_.at(reflect(b, rho()));
  if (n <= 4096) {
    size_t words64 = (n + 63) / 64;
    bruhat_.assign(n, std::vector<uint64_t>(words64, 0));
    bruhat_[0][0] = 1;
    for (size_t w = 1; w < n; ++w) {
      int s = words_[w][0] - 1;
      int sw = lmul_[w * r + s];
      for (size_t u = 0; u < n; ++u) {
        int su = lmul_[u * r + s];
        int m = len_[su] < len_[u] ? su : static_cast<int>(u);
        if (bruhat_[sw][m / 64] >> (m % 64) & 1ULL) bruhat_[w][u / 64] |= 1ULL << (u % 64);
      }
    }
  }
}

void RootSystem::require_weyl() const {
  if (!weyl_ok_)
    throw std::runtime_error("rank too large for exhaustive mode: Weyl group of " + label_ + " exceeds element cap " +
                             std::to_string(weyl_cap_));
}

size_t RootSystem::order() const {
  require_weyl();
  return len_.size();
}

Elt RootSystem::w0() const {
  require_weyl();
  return static_cast<Elt>(len_.size() - 1);
}

int RootSystem::length(Elt w) const { return len_[w]; }

const std::vector<int>& RootSystem::word(Elt w) const { return words_[w]; }

Elt RootSystem::inverse(Elt w) const { return inv_[w]; }

Elt RootSystem::mul(Elt a, Elt b) const { return by_rho_.at(act(a, rho_image_[b])); }

Elt RootSystem::rmul_simple(Elt w, int i) const { return rmul_[w * rank_ + (i - 1)]; }

Elt RootSystem::lmul_simple(int i, Elt w) const { return lmul_[w * rank_ + (i - 1)]; }

Weight RootSystem::act(Elt w, const Weight& mu) const {
  const int r = rank_;
  Weight out(r);
  const int* m = &mat_[static_cast<size_t>(w) * r * r];
  for (int k = 0; k < r; ++k) {
    int64_t s = 0;
    for (int j = 0; j < r; ++j) s += static_cast<int64_t>(m[k * r + j]) * mu[j];
    out[k] = static_cast<int32_t>(s);
  }
  return out;
}

int RootSystem::act_root(Elt w, int b) const { return root_perm_[static_cast<size_t>(w) * num_roots() + b]; }

Elt RootSystem::reflection(int b) const { return refl_elt_[b]; }

Elt RootSystem::from_word(const std::vector<int>& word) const {
  require_weyl();
  Elt x = 0;
  for (int i : word) {
    if (i < 1 || i > rank_) throw std::invalid_argument("simple reflection index out of range: " + std::to_string(i));
    x = rmul_simple(x, i);
  }
  return x;
}

bool RootSystem::is_reduced(const std::vector<int>& word) const {
  return length(from_word(word)) == static_cast<int>(word.size());
}

bool RootSystem::leq(Elt u, Elt w) const {
  if (!bruhat_.empty()) return bruhat_[w][u / 64] >> (u % 64) & 1ULL;
  if (len_[u] > len_[w]) return false;
  if (w == 0) return u == 0;
  int s = words_[w][0];
  Elt sw = lmul_simple(s, w);
  Elt su = lmul_simple(s, u);
  return leq(len_[su] < len_[u] ? su : u, sw);
}

bool RootSystem::leq_subword(Elt u, Elt w) const {
  std::set<Elt> reach{0};
  for (int s : words_[w]) {
    std::set<Elt> more = reach;
    for (Elt x : reach) more.insert(rmul_simple(x, s));
    reach.swap(more);
  }
  return reach.count(u) > 0;
}

std::vector<Elt> RootSystem::elements() const {
  require_weyl();
  std::vector<Elt> v(len_.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = static_cast<Elt>(i);
  return v;
}

std::vector<int> RootSystem::reflection_covers_up(Elt u) const {
  std::vector<int> out;
  for (int b = 0; b < npos_; ++b)
    if (len_[mul(u, refl_elt_[b])] == len_[u] + 1) out.push_back(b);
  return out;
}

std::vector<Elt> RootSystem::minimal_coset_reps(const std::set<int>& parabolic) const {
  std::vector<Elt> out;
  for (Elt w : elements()) {
    bool ok = true;
    for (int i : parabolic)
      if (len_[rmul_simple(w, i)] < len_[w]) ok = false;
    if (ok) out.push_back(w);
  }
  return out;
}

Elt RootSystem::coset_min(Elt w, const std::set<int>& parabolic) const {
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : parabolic) {
      Elt x = rmul_simple(w, i);
      if (len_[x] < len_[w]) {
        w = x;
        moved = true;
      }
    }
  }
  return w;
}

std::vector<Elt> RootSystem::coset(Elt w, const std::set<int>& parabolic) const {
  std::set<Elt> seen{w};
  std::deque<Elt> q{w};
  while (!q.empty()) {
    Elt x = q.front();
    q.pop_front();
    for (int i : parabolic) {
      Elt y = rmul_simple(x, i);
      if (seen.insert(y).second) q.push_back(y);
    }
  }
  return std::vector<Elt>(seen.begin(), seen.end());
}

std::set<int> RootSystem::stabilizer_simples(const Weight& mu) const {
  std::set<int> out;
  for (int i = 0; i < rank_; ++i)
    if (mu[i] == 0) out.insert(i + 1);
  return out;
}

std::string RootSystem::elt_str(Elt w) const {
  const auto& wd = words_[w];
  if (wd.empty()) return "id";
  std::string s;
  for (size_t k = 0; k < wd.size(); ++k) {
    if (k) s += '*';
    s += 's' + std::to_string(wd[k]);
  }
  return s;
}

Elt RootSystem::parse_elt(const std::string& s) const { return from_word(parse_word(s)); }

std::vector<int> parse_word(const std::string& s) {
  std::vector<int> out;
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty() || t == "id" || t == "e" || t == "1") return out;
  size_t i = 0;
  while (i < t.size()) {
    char ch = t[i];
    if (ch == '*' || ch == ',' || ch == 's' || ch == 'S') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("bad Weyl word '" + s + "'");
    size_t j = i;
    while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    out.push_back(std::stoi(t.substr(i, j - i)));
    i = j;
  }
  return out;
}

}  // namespace chev
