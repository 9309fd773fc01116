// Finite groups by multiplication table, subgroups, cosets, homs,
// abelianization and the index-2 transfer.
#ifndef COVERTORUS_GROUP_HPP
#define COVERTORUS_GROUP_HPP

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "covertorus/rational.hpp"

namespace covertorus {

inline int group_order_cap() {
  if (const char* e = std::getenv("COVERTORUS_MAX_ORDER")) {
    int v = std::atoi(e);
    if (v > 0) return v;
  }
  return 64;
}

struct FiniteGroup {
  int n = 1;
  std::vector<std::vector<int>> mul{{0}};
  std::vector<int> inv{0};
  // for permutation-built groups, the underlying permutations (else empty)
  std::vector<std::vector<int>> perms;

  int op(int a, int b) const { return mul[a][b]; }
  int invert(int a) const { return inv[a]; }
  int id() const { return 0; }

  int conj(int g, int x) const { return mul[mul[g][x]][inv[g]]; }

  int order_of(int g) const {
    int x = g, k = 1;
    while (x != 0) { x = mul[x][g]; ++k; }
    return k;
  }

  bool is_abelian() const {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (mul[a][b] != mul[b][a]) return false;
    return true;
  }

  void validate(int max_order = 0) const {
    int cap = max_order > 0 ? max_order : group_order_cap();
    if (n > cap) throw std::invalid_argument("group order exceeds bound " + std::to_string(cap));
    if ((int)mul.size() != n) throw std::invalid_argument("multiplication table size mismatch");
    for (int a = 0; a < n; ++a) {
      if ((int)mul[a].size() != n) throw std::invalid_argument("multiplication table row size mismatch");
      for (int b = 0; b < n; ++b)
        if (mul[a][b] < 0 || mul[a][b] >= n)
          throw std::invalid_argument("multiplication table entry out of range");
    }
    for (int a = 0; a < n; ++a)
      if (mul[0][a] != a || mul[a][0] != a)
        throw std::invalid_argument("element 0 is not an identity");
    for (int a = 0; a < n; ++a) {
      std::vector<char> seen_r(n, 0), seen_c(n, 0);
      for (int b = 0; b < n; ++b) { seen_r[mul[a][b]] = 1; seen_c[mul[b][a]] = 1; }
      for (int b = 0; b < n; ++b)
        if (!seen_r[b] || !seen_c[b])
          throw std::invalid_argument("multiplication table rows/columns are not permutations");
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
            throw std::invalid_argument("multiplication table is not associative");
    for (int a = 0; a < n; ++a)
      if (mul[a][inv[a]] != 0 || mul[inv[a]][a] != 0)
        throw std::invalid_argument("bad inverse table");
  }

  static FiniteGroup from_table(std::vector<std::vector<int>> table, int max_order = 0) {
    FiniteGroup g;
    g.n = (int)table.size();
    g.mul = std::move(table);
    g.inv.assign(g.n, -1);
    for (int a = 0; a < g.n; ++a)
      for (int b = 0; b < g.n; ++b)
        if (a < (int)g.mul.size() && b < (int)g.mul[a].size() && g.mul[a][b] == 0) g.inv[a] = b;
    for (int a = 0; a < g.n; ++a)
      if (g.inv[a] < 0) throw std::invalid_argument("element without inverse");
    g.validate(max_order);
    return g;
  }

  // Breadth-first closure of permutation generators; identity first, then
  // elements in discovery order (canonical for serialization).
  static FiniteGroup from_perms(const std::vector<std::vector<int>>& gens, int max_order = 0) {
    int cap = max_order > 0 ? max_order : group_order_cap();
    if (gens.empty()) throw std::invalid_argument("no generators");
    size_t deg = gens[0].size();
    for (const auto& p : gens) {
      if (p.size() != deg) throw std::invalid_argument("generator length mismatch");
      std::vector<char> seen(deg, 0);
      for (int v : p) {
        if (v < 0 || v >= (int)deg || seen[v]) throw std::invalid_argument("generator is not a permutation");
        seen[v] = 1;
      }
    }
    std::vector<int> idp(deg);
    for (size_t i = 0; i < deg; ++i) idp[i] = (int)i;
    std::vector<std::vector<int>> elems{idp};
    std::map<std::vector<int>, int> index{{idp, 0}};
    for (size_t head = 0; head < elems.size(); ++head) {
      for (const auto& g : gens) {
        std::vector<int> w(deg);
        for (size_t i = 0; i < deg; ++i) w[i] = elems[head][g[i]];
        if (index.emplace(w, (int)elems.size()).second) {
          elems.push_back(w);
          if ((int)elems.size() > cap)
            throw std::invalid_argument("group order exceeds bound " + std::to_string(cap));
        }
      }
    }
    int n = (int)elems.size();
    FiniteGroup g;
    g.n = n;
    g.mul.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        std::vector<int> w(deg);
        for (size_t i = 0; i < deg; ++i) w[i] = elems[a][elems[b][i]];
        g.mul[a][b] = index.at(w);
      }
    g.inv.assign(n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (g.mul[a][b] == 0) g.inv[a] = b;
    g.perms = elems;
    g.validate(max_order);
    return g;
  }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct Subgroup {
  std::vector<int> elems;        // sorted
  std::vector<char> member;      // size = parent order

  bool contains(int g) const { return member[g]; }
  int size() const { return (int)elems.size(); }
  int index_in(const FiniteGroup& G) const { return G.n / size(); }

  static Subgroup closure(const FiniteGroup& G, std::vector<int> gens) {
    std::vector<char> in(G.n, 0);
    std::vector<int> stack{0};
    in[0] = 1;
    for (int g : gens)
      if (!in[g]) { in[g] = 1; stack.push_back(g); }
    for (size_t head = 0; head < stack.size(); ++head)
      for (size_t j = 0; j < stack.size(); ++j) {
        int w = G.op(stack[head], stack[j]);
        if (!in[w]) { in[w] = 1; stack.push_back(w); }
      }
    Subgroup s;
    s.member = in;
    for (int i = 0; i < G.n; ++i)
      if (in[i]) s.elems.push_back(i);
    return s;
  }

  static Subgroup from_elements(const FiniteGroup& G, std::vector<int> elems) {
    Subgroup s = closure(G, elems);
    std::set<int> want(elems.begin(), elems.end());
    want.insert(0);
    if (want.size() != s.elems.size())
      throw std::invalid_argument("element set is not a subgroup");
    return s;
  }

  static Subgroup whole(const FiniteGroup& G) {
    Subgroup s;
    s.member.assign(G.n, 1);
    s.elems.resize(G.n);
    for (int i = 0; i < G.n; ++i) s.elems[i] = i;
    return s;
  }

  static Subgroup trivial(const FiniteGroup& G) {
    Subgroup s;
    s.member.assign(G.n, 0);
    s.member[0] = 1;
    s.elems = {0};
    return s;
  }

  static Subgroup preimage(const FiniteGroup& G, const std::vector<int>& hom_img,
                           const Subgroup& target_sub) {
    Subgroup s;
    s.member.assign(G.n, 0);
    for (int g = 0; g < G.n; ++g)
      if (target_sub.contains(hom_img[g])) { s.member[g] = 1; s.elems.push_back(g); }
    return s;
  }

  bool is_normal(const FiniteGroup& G) const {
    for (int g = 0; g < G.n; ++g)
      for (int h : elems)
        if (!member[G.conj(g, h)]) return false;
    return true;
  }
};

// Right cosets H\G (classes Hg); representative = minimal element index.
inline std::vector<int> right_coset_reps(const FiniteGroup& G, const Subgroup& H) {
  std::vector<char> done(G.n, 0);
  std::vector<int> reps;
  for (int g = 0; g < G.n; ++g) {
    if (done[g]) continue;
    reps.push_back(g);
    for (int h : H.elems) done[G.op(h, g)] = 1;
  }
  return reps;
}

// index of the right coset Hg among the given reps, plus the H-part h = g*rep^{-1}
inline std::pair<int, int> right_coset_decompose(const FiniteGroup& G, const Subgroup& H,
                                                 const std::vector<int>& reps, int g) {
  for (size_t i = 0; i < reps.size(); ++i) {
    int h = G.op(g, G.invert(reps[i]));
    if (H.contains(h)) return {(int)i, h};
  }
  throw std::logic_error("coset reps do not form a transversal");
}

struct GroupHom {
  GroupPtr src, dst;
  std::vector<int> img;

  int operator()(int g) const { return img[g]; }

  void validate() const {
    if ((int)img.size() != src->n) throw std::invalid_argument("hom table size mismatch");
    if (img[0] != 0) throw std::invalid_argument("hom does not fix identity");
    for (int a = 0; a < src->n; ++a)
      for (int b = 0; b < src->n; ++b)
        if (img[src->op(a, b)] != dst->op(img[a], img[b]))
          throw std::invalid_argument("map is not a homomorphism");
  }

  bool is_surjective() const {
    std::vector<char> seen(dst->n, 0);
    for (int v : img) seen[v] = 1;
    for (char c : seen)
      if (!c) return false;
    return true;
  }

  bool is_injective() const {
    std::set<int> s(img.begin(), img.end());
    return (int)s.size() == src->n;
  }

  Subgroup kernel() const {
    Subgroup s;
    s.member.assign(src->n, 0);
    for (int g = 0; g < src->n; ++g)
      if (img[g] == 0) { s.member[g] = 1; s.elems.push_back(g); }
    return s;
  }
};

// Quotient of G by a normal subgroup N; elements are cosets ordered with the
// identity coset first, then by minimal representative.
struct QuotientData {
  GroupPtr quotient;
  GroupHom proj;            // G -> quotient
  std::vector<int> reps;    // minimal representative per quotient element
};

inline QuotientData quotient_group(GroupPtr G, const Subgroup& N) {
  if (!N.is_normal(*G)) throw std::invalid_argument("quotient by non-normal subgroup");
  std::vector<int> coset_of(G->n, -1);
  std::vector<int> reps;
  for (int g = 0; g < G->n; ++g) {
    if (coset_of[g] >= 0) continue;
    int c = (int)reps.size();
    reps.push_back(g);
    for (int h : N.elems) coset_of[G->op(g, h)] = c;
  }
  int q = (int)reps.size();
  auto Q = std::make_shared<FiniteGroup>();
  Q->n = q;
  Q->mul.assign(q, std::vector<int>(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) Q->mul[a][b] = coset_of[G->op(reps[a], reps[b])];
  Q->inv.assign(q, -1);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (Q->mul[a][b] == 0) Q->inv[a] = b;
  Q->validate();
  QuotientData d;
  d.quotient = Q;
  d.proj.src = G;
  d.proj.dst = Q;
  d.proj.img = coset_of;
  d.reps = reps;
  return d;
}

inline Subgroup commutator_subgroup(const FiniteGroup& G) {
  std::vector<int> gens;
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b)
      gens.push_back(G.op(G.op(a, b), G.op(G.invert(a), G.invert(b))));
  return Subgroup::closure(G, gens);
}

inline QuotientData abelianization(GroupPtr G) {
  return quotient_group(G, commutator_subgroup(*G));
}

// Transfer G -> H^{ab} for an index-2 subgroup H, composed with the
// projection to the abelianization of H.  t(h) = h * tau h tau^{-1} for h in
// H and t(h*tau) = h * tau h tau^{-1} * tau^2.  The result is independent of
// tau; we verify this against every other choice.
struct TransferData {
  GroupHom hom;             // G -> Hab
  QuotientData hab;         // abelianization of H (as its own group)
  GroupPtr H_group;         // H with re-indexed elements
  std::vector<int> h_index; // parent index -> H-local index (-1 outside H)
};

inline GroupPtr subgroup_as_group(const FiniteGroup& G, const Subgroup& H,
                                  std::vector<int>* h_index_out = nullptr) {
  std::vector<int> h_index(G.n, -1);
  for (size_t i = 0; i < H.elems.size(); ++i) h_index[H.elems[i]] = (int)i;
  if (H.elems[0] != 0) throw std::logic_error("subgroup does not contain identity first");
  auto Hg = std::make_shared<FiniteGroup>();
  int m = (int)H.elems.size();
  Hg->n = m;
  Hg->mul.assign(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) Hg->mul[a][b] = h_index[G.op(H.elems[a], H.elems[b])];
  Hg->inv.assign(m, -1);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (Hg->mul[a][b] == 0) Hg->inv[a] = b;
  Hg->validate();
  if (h_index_out) *h_index_out = h_index;
  return Hg;
}

inline TransferData transfer_hom(GroupPtr G, const Subgroup& H, int tau) {
  if (2 * H.size() != G->n) throw std::invalid_argument("transfer needs an index-2 subgroup");
  if (H.contains(tau)) throw std::invalid_argument("tau lies inside the subgroup");
  TransferData t;
  t.H_group = subgroup_as_group(*G, H, &t.h_index);
  t.hab = abelianization(t.H_group);

  auto compute = [&](int tu) {
    std::vector<int> img(G->n);
    int tu2 = G->op(tu, tu);
    for (int g = 0; g < G->n; ++g) {
      int v;
      if (H.contains(g)) {
        v = G->op(g, G->conj(tu, g));
      } else {
        int h = G->op(g, G->invert(tu));  // g = h * tau
        v = G->op(G->op(h, G->conj(tu, h)), tu2);
      }
      img[g] = t.hab.proj(t.h_index[v]);
    }
    return img;
  };

  t.hom.src = G;
  t.hom.dst = t.hab.quotient;
  t.hom.img = compute(tau);
  t.hom.validate();
  for (int other = 0; other < G->n; ++other)
    if (!H.contains(other) && compute(other) != t.hom.img)
      throw std::logic_error("transfer depends on the choice of tau");
  return t;
}

// All characters G -> Q/Z of an abelian group, as dense value tables.
inline std::vector<std::vector<Frac>> abelian_characters(const FiniteGroup& G) {
  if (!G.is_abelian()) throw std::invalid_argument("characters of nonabelian group requested");
  // greedy generating sequence
  std::vector<int> gens;
  Subgroup cur = Subgroup::closure(G, {});
  for (int g = 0; g < G.n && cur.size() < G.n; ++g) {
    if (cur.contains(g)) continue;
    gens.push_back(g);
    std::vector<int> all = gens;
    cur = Subgroup::closure(G, all);
  }
  std::vector<std::vector<Frac>> out;
  std::vector<Frac> assign(gens.size());
  std::set<std::vector<std::pair<long long, long long>>> seen;

  auto try_assignment = [&]() {
    std::vector<Frac> val(G.n);
    std::vector<char> known(G.n, 0);
    val[0] = Frac(0);
    known[0] = 1;
    std::vector<int> stack{0};
    for (size_t head = 0; head < stack.size(); ++head) {
      int x = stack[head];
      for (size_t i = 0; i < gens.size(); ++i) {
        int y = G.op(x, gens[i]);
        Frac v = (val[x] + assign[i]).mod1();
        if (!known[y]) {
          known[y] = 1;
          val[y] = v;
          stack.push_back(y);
        } else if (val[y] != v) {
          return;  // inconsistent
        }
      }
    }
    std::vector<std::pair<long long, long long>> key;
    for (const Frac& f : val) key.emplace_back(f.num, f.den);
    if (seen.insert(key).second) out.push_back(val);
  };

  // depth-first over values k/ord(gen) per generator
  std::vector<int> ord(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) ord[i] = G.order_of(gens[i]);
  std::vector<int> choice(gens.size(), 0);
  while (true) {
    for (size_t i = 0; i < gens.size(); ++i) assign[i] = Frac(choice[i], ord[i]).mod1();
    try_assignment();
    size_t i = 0;
    while (i < gens.size() && ++choice[i] == ord[i]) { choice[i] = 0; ++i; }
    if (i == gens.size()) break;
  }
  if ((int)out.size() != G.n) throw std::logic_error("character enumeration incomplete");
  return out;
}

// minimal-index section of a surjective hom
inline std::vector<int> min_section(const GroupHom& phi) {
  std::vector<int> s(phi.dst->n, -1);
  for (int w = 0; w < phi.src->n; ++w)
    if (s[phi(w)] < 0) s[phi(w)] = w;
  for (int v : s)
    if (v < 0) throw std::invalid_argument("hom is not surjective");
  return s;
}

}  // namespace covertorus

#endif
