#include "homcx/group.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <queue>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include "homcx/error.hpp"
#include "homcx/hash.hpp"

namespace homcx {

namespace {

using Perm = std::vector<int>;

Perm perm_compose(const Perm& p, const Perm& q) { // p then q
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

bool is_permutation(const Perm& p, int degree) {
  if (static_cast<int>(p.size()) != degree) return false;
  std::vector<char> seen(degree, 0);
  for (int v : p) {
    if (v < 0 || v >= degree || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// Close a permutation set under composition, sort lexicographically and
// build the multiplication table. The identity sorts first, so element 0
// is always the identity.
GroupPtr group_from_closed_perms(const std::string& name,
                                 std::set<Perm> elems,
                                 const std::vector<Perm>& gen_perms) {
  std::vector<Perm> sorted(elems.begin(), elems.end());
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = (int)i;

  auto g = std::make_shared<FiniteGroup>();
  g->name = name;
  g->order = (int)sorted.size();
  g->mul.assign(g->order, std::vector<int>(g->order));
  g->inv.assign(g->order, 0);
  for (int a = 0; a < g->order; ++a)
    for (int b = 0; b < g->order; ++b) {
      auto it = index.find(perm_compose(sorted[a], sorted[b]));
      if (it == index.end())
        fail(ErrorCode::InvalidGroupFile,
             name + ": permutation set not closed under composition");
      g->mul[a][b] = it->second;
    }
  for (int a = 0; a < g->order; ++a)
    for (int b = 0; b < g->order; ++b)
      if (g->mul[a][b] == 0) g->inv[a] = b;
  for (const auto& p : gen_perms) g->generators.push_back(index.at(p));
  std::sort(g->generators.begin(), g->generators.end());
  g->generators.erase(
      std::unique(g->generators.begin(), g->generators.end()),
      g->generators.end());
  g->validate();
  return g;
}

std::set<Perm> close_perms(int degree, const std::vector<Perm>& gens) {
  std::set<Perm> seen;
  Perm id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  seen.insert(id);
  std::queue<Perm> todo;
  todo.push(id);
  for (const auto& p : gens)
    if (seen.insert(p).second) todo.push(p);
  while (!todo.empty()) {
    Perm cur = todo.front();
    todo.pop();
    for (const auto& p : gens) {
      Perm prod = perm_compose(cur, p);
      if (seen.insert(prod).second) todo.push(prod);
      if ((std::int64_t)seen.size() > 100000)
        fail(ErrorCode::InvalidGroupFile, "permutation closure too large");
    }
  }
  return seen;
}

GroupPtr make_symmetric(int n, const std::string& name, bool even_only) {
  if (n < 1) fail(ErrorCode::UnknownCatalogName, name + ": degree >= 1 required");
  if (n > 6)
    fail(ErrorCode::UnknownCatalogName,
         name + ": degree > 6 refused (table would be too large)");
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::set<Perm> elems;
  do {
    if (even_only) {
      int inversions = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (p[i] > p[j]) ++inversions;
      if (inversions % 2) continue;
    }
    elems.insert(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return group_from_closed_perms(name, elems, {});
}

GroupPtr make_cyclic(int n) {
  if (n < 1) fail(ErrorCode::UnknownCatalogName, "cyclic:n needs n >= 1");
  std::set<Perm> elems;
  for (int k = 0; k < n; ++k) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = (i + k) % n;
    elems.insert(p);
  }
  Perm r(n);
  for (int i = 0; i < n; ++i) r[i] = (i + 1) % n;
  return group_from_closed_perms("cyclic:" + std::to_string(n), elems,
                                 n > 1 ? std::vector<Perm>{r} : std::vector<Perm>{});
}

GroupPtr make_dihedral(int order) {
  if (order < 6 || order % 2)
    fail(ErrorCode::UnknownCatalogName,
         "dihedral:2n needs an even order >= 6");
  int n = order / 2;
  std::set<Perm> elems;
  for (int k = 0; k < n; ++k) {
    Perm rot(n), ref(n);
    for (int i = 0; i < n; ++i) {
      rot[i] = (i + k) % n;
      ref[i] = ((k - i) % n + n) % n;
    }
    elems.insert(rot);
    elems.insert(ref);
  }
  Perm r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  return group_from_closed_perms("dihedral:" + std::to_string(order), elems,
                                 {r, s});
}

GroupPtr make_quaternion() {
  // Units 1,-1,i,-i,j,-j,k,-k acting on themselves by right multiplication.
  // x encoded as (axis, sign): axis 0=1, 1=i, 2=j, 3=k.
  auto mul_units = [](int a, int b) {
    int ax = a / 2, as = a % 2 ? -1 : 1;
    int bx = b / 2, bs = b % 2 ? -1 : 1;
    static const int axis_table[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_table[4][4] = {
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    int cx = axis_table[ax][bx];
    int cs = as * bs * sign_table[ax][bx];
    return cx * 2 + (cs < 0 ? 1 : 0);
  };
  std::set<Perm> elems;
  std::vector<Perm> gens;
  for (int gidx = 0; gidx < 8; ++gidx) {
    Perm p(8);
    for (int x = 0; x < 8; ++x) p[x] = mul_units(x, gidx);
    elems.insert(p);
    if (gidx == 2 || gidx == 4) gens.push_back(p); // i and j
  }
  return group_from_closed_perms("quaternion:8", elems, gens);
}

} // namespace

int FiniteGroup::pow(int x, std::int64_t e) const {
  int base = e < 0 ? inv[x] : x;
  std::uint64_t k = e < 0 ? -(std::uint64_t)e : (std::uint64_t)e;
  int acc = 0;
  while (k) {
    if (k & 1) acc = mul[acc][base];
    base = mul[base][base];
    k >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(int x) const {
  int acc = x, n = 1;
  while (acc != 0) {
    acc = mul[acc][x];
    ++n;
  }
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (mul[a][b] != mul[b][a]) return false;
  return true;
}

void FiniteGroup::validate() const {
  if (order < 1) fail(ErrorCode::InvalidGroupFile, "order must be positive");
  if ((int)mul.size() != order || (int)inv.size() != order)
    fail(ErrorCode::InvalidGroupFile, "table size mismatch");
  for (const auto& row : mul) {
    if ((int)row.size() != order)
      fail(ErrorCode::InvalidGroupFile, "table row size mismatch");
    for (int v : row)
      if (v < 0 || v >= order)
        fail(ErrorCode::InvalidGroupFile, "table entry out of range");
  }
  for (int x = 0; x < order; ++x) {
    if (mul[0][x] != x || mul[x][0] != x)
      fail(ErrorCode::InvalidGroupFile, "element 0 is not the identity");
    if (mul[x][inv[x]] != 0 || mul[inv[x]][x] != 0)
      fail(ErrorCode::InvalidGroupFile, "inverse table wrong");
  }
  // Latin square property (cancellation).
  for (int x = 0; x < order; ++x) {
    std::vector<char> seen(order, 0);
    for (int y = 0; y < order; ++y) {
      if (seen[mul[x][y]])
        fail(ErrorCode::InvalidGroupFile, "row is not a permutation");
      seen[mul[x][y]] = 1;
    }
  }
  if (order <= 64) {
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        for (int c = 0; c < order; ++c)
          if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
            fail(ErrorCode::InvalidGroupFile, "multiplication not associative");
  } else {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> pick(0, order - 1);
    for (int t = 0; t < 200000; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
        fail(ErrorCode::InvalidGroupFile, "multiplication not associative");
    }
  }
  if (!generators.empty()) {
    auto closure = subgroup_closure(*this, generators);
    if ((int)closure.size() != order)
      fail(ErrorCode::InvalidGroupFile, "generators do not generate");
  }
}

std::string FiniteGroup::content_hash() const {
  Fnv64 h;
  h.feed("group");
  h.feed((std::int64_t)order);
  for (const auto& row : mul)
    for (int v : row) h.feed_byte((unsigned char)(v & 0xff)), h.feed_byte((unsigned char)((v >> 8) & 0xff));
  return h.hex();
}

GroupPtr catalog_group(const std::string& name) {
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    std::string head = name.substr(0, colon);
    std::string tail = name.substr(colon + 1);
    bool numeric = !tail.empty() &&
                   std::all_of(tail.begin(), tail.end(),
                               [](unsigned char c) { return std::isdigit(c); });
    if (numeric) {
      int n = std::stoi(tail);
      if (head == "cyclic") return make_cyclic(n);
      if (head == "sym") return make_symmetric(n, name, false);
      if (head == "alt") return make_symmetric(n, name, true);
      if (head == "dihedral") return make_dihedral(n);
      if (head == "quaternion") {
        if (n != 8) fail(ErrorCode::UnknownCatalogName, "only quaternion:8");
        return make_quaternion();
      }
      fail(ErrorCode::UnknownCatalogName, "unknown catalog family: " + head);
    }
  }
  std::ifstream probe(name);
  if (!probe.good())
    fail(ErrorCode::UnknownCatalogName,
         "not a catalog name and not a readable file: " + name);
  return load_group_file(name);
}

GroupPtr group_from_table(const std::string& name,
                          std::vector<std::vector<int>> table) {
  auto g = std::make_shared<FiniteGroup>();
  g->name = name;
  g->order = (int)table.size();
  g->mul = std::move(table);
  g->inv.assign(g->order, -1);
  for (int x = 0; x < g->order; ++x) {
    for (int y = 0; y < g->order; ++y)
      if (x < (int)g->mul.size() && y < (int)g->mul[x].size() &&
          g->mul[x][y] == 0) {
        g->inv[x] = y;
        break;
      }
    if (g->inv[x] < 0)
      fail(ErrorCode::InvalidGroupFile, "element without inverse");
  }
  g->validate();
  return g;
}

GroupPtr group_from_permutations(const std::string& name, int degree,
                                 const std::vector<std::vector<int>>& perm_gens) {
  if (degree < 1) fail(ErrorCode::InvalidGroupFile, "degree must be >= 1");
  for (const auto& p : perm_gens)
    if (!is_permutation(p, degree))
      fail(ErrorCode::InvalidGroupFile, "generator is not a permutation");
  auto elems = close_perms(degree, perm_gens);
  return group_from_closed_perms(name, elems, perm_gens);
}

GroupPtr load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidGroupFile, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorCode::InvalidGroupFile, path + ": " + e.what());
  }
  std::string name = j.value("name", path);
  if (j.contains("table")) {
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("order") && (int)table.size() != j.at("order").get<int>())
      fail(ErrorCode::InvalidGroupFile, path + ": order field mismatch");
    return group_from_table(name, std::move(table));
  }
  if (j.contains("permutation_generators")) {
    int degree = j.at("degree").get<int>();
    auto gens =
        j.at("permutation_generators").get<std::vector<std::vector<int>>>();
    return group_from_permutations(name, degree, gens);
  }
  fail(ErrorCode::InvalidGroupFile,
       path + ": need 'table' or 'permutation_generators'");
}

std::vector<GroupPtr> default_catalog(int max_order) {
  std::vector<GroupPtr> out;
  for (int n = 1; n <= max_order; ++n) out.push_back(make_cyclic(n));
  if (max_order >= 6) out.push_back(make_symmetric(3, "sym:3", false));
  if (max_order >= 24) out.push_back(make_symmetric(4, "sym:4", false));
  if (max_order >= 12) out.push_back(make_symmetric(4, "alt:4", true));
  for (int o = 6; o <= max_order; o += 2) out.push_back(make_dihedral(o));
  if (max_order >= 8) out.push_back(make_quaternion());
  return out;
}

int evaluate_word(const FiniteGroup& g, const Word& w,
                  const std::vector<int>& assignment) {
  int acc = 0;
  for (const auto& l : w.letters) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= assignment.size())
      fail(ErrorCode::GeneratorIndexOutOfRange,
           "word uses generator a" + std::to_string(l.gen + 1) +
               " beyond assignment length " +
               std::to_string(assignment.size()));
    acc = g.mul[acc][g.pow(assignment[l.gen], l.exp)];
  }
  return acc;
}

std::vector<int> subgroup_closure(const FiniteGroup& g,
                                  const std::vector<int>& seed) {
  std::vector<char> in(g.order, 0);
  std::vector<int> elems;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  };
  add(0);
  for (int s : seed) {
    if (s < 0 || s >= g.order)
      fail(ErrorCode::GeneratorIndexOutOfRange, "seed element out of range");
    add(s);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    add(g.inv[elems[i]]);
    for (std::size_t j = 0; j <= i; ++j) {
      add(g.mul[elems[i]][elems[j]]);
      add(g.mul[elems[j]][elems[i]]);
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
  std::vector<char> in(g.order, 0);
  for (int x : elems) {
    if (x < 0 || x >= g.order) return false;
    in[x] = 1;
  }
  if (!in[0]) return false;
  for (int x : elems) {
    if (!in[g.inv[x]]) return false;
    for (int y : elems)
      if (!in[g.mul[x][y]]) return false;
  }
  return true;
}

namespace {

// Subgroup generated by all [u, v] with u in a, v in b.
std::vector<int> commutator_span(const FiniteGroup& g,
                                 const std::vector<int>& a,
                                 const std::vector<int>& b) {
  std::vector<int> comms;
  comms.reserve(a.size() * b.size());
  for (int u : a)
    for (int v : b) comms.push_back(g.commutator_elems(u, v));
  return subgroup_closure(g, comms);
}

} // namespace

SeriesProfile series_profile(const FiniteGroup& g, const std::vector<int>& h) {
  if (!is_subgroup(g, h))
    fail(ErrorCode::NotASubgroup, "series_profile: set is not a subgroup");
  SeriesProfile out;
  // Lower central series within H.
  std::vector<int> cur = h;
  std::sort(cur.begin(), cur.end());
  int step = 0;
  while (true) {
    if (cur.size() == 1) {
      out.nilpotency_class = step;
      break;
    }
    auto next = commutator_span(g, cur, h);
    if (next == cur) break; // stabilized above the identity
    cur = next;
    ++step;
  }
  // Derived series.
  cur = h;
  std::sort(cur.begin(), cur.end());
  step = 0;
  while (true) {
    if (cur.size() == 1) {
      out.derived_length = step;
      break;
    }
    auto next = commutator_span(g, cur, cur);
    if (next == cur) break;
    cur = next;
    ++step;
  }
  return out;
}

ConjugacyData conjugacy_data(const FiniteGroup& g) {
  ConjugacyData out;
  out.centralizers.resize(g.order);
  std::vector<char> done(g.order, 0);
  for (int x = 0; x < g.order; ++x) {
    std::vector<int> cent;
    for (int a = 0; a < g.order; ++a)
      if (g.mul[a][x] == g.mul[x][a]) cent.push_back(a);
    out.centralizers[x] = std::move(cent);
  }
  for (int x = 0; x < g.order; ++x) {
    if (done[x]) continue;
    std::set<int> cls;
    for (int a = 0; a < g.order; ++a) cls.insert(g.conjugate(a, x));
    std::vector<int> v(cls.begin(), cls.end());
    for (int y : v) done[y] = 1;
    out.classes.push_back(std::move(v));
  }
  return out;
}

std::vector<int> commutator_subgroup(const FiniteGroup& g) {
  std::vector<int> all(g.order);
  for (int i = 0; i < g.order; ++i) all[i] = i;
  return commutator_span(g, all, all);
}

SubgroupEmbedding make_subgroup(const GroupPtr& g, const std::vector<int>& seed) {
  auto elems = subgroup_closure(*g, seed);
  std::vector<int> pos(g->order, -1);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = (int)i;
  std::vector<std::vector<int>> table(elems.size(),
                                      std::vector<int>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b)
      table[a][b] = pos[g->mul[elems[a]][elems[b]]];
  SubgroupEmbedding out;
  out.subgroup = group_from_table("sub(" + g->name + ")", std::move(table));
  out.embedding = elems;
  return out;
}

GroupPtr quotient_group(const FiniteGroup& g, const std::vector<int>& normal) {
  if (!is_subgroup(g, normal))
    fail(ErrorCode::NotASubgroup, "quotient: not a subgroup");
  std::vector<char> in_n(g.order, 0);
  for (int x : normal) in_n[x] = 1;
  for (int x : normal)
    for (int a = 0; a < g.order; ++a)
      if (!in_n[g.conjugate(a, x)])
        fail(ErrorCode::NotASubgroup, "quotient: subgroup not normal");
  std::vector<int> coset_of(g.order, -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = (int)reps.size();
    reps.push_back(x);
    for (int n : normal) coset_of[g.mul[x][n]] = id;
  }
  std::vector<std::vector<int>> table(reps.size(),
                                      std::vector<int>(reps.size()));
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b)
      table[a][b] = coset_of[g.mul[reps[a]][reps[b]]];
  return group_from_table(g.name + "/N", std::move(table));
}

} // namespace homcx
