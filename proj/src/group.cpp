#include "qrf/group.hpp"

#include <fstream>
#include <random>

#include <nlohmann/json.hpp>

#include "qrf/errors.hpp"

namespace qrf {

bool FiniteGroup::is_abelian() const {
  for (int g = 0; g < order; ++g)
    for (int h = g + 1; h < order; ++h)
      if (mult[g][h] != mult[h][g]) return false;
  return true;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> z;
  for (int g = 0; g < order; ++g) {
    bool central = true;
    for (int h = 0; h < order && central; ++h)
      central = mult[g][h] == mult[h][g];
    if (central) z.push_back(g);
  }
  return z;
}

namespace {

int find_identity(const FiniteGroup& g) {
  for (int e = 0; e < g.order; ++e) {
    bool ok = true;
    for (int h = 0; h < g.order && ok; ++h)
      ok = g.mult[e][h] == h && g.mult[h][e] == h;
    if (ok) return e;
  }
  throw NotAGroup("no identity element");
}

std::vector<int> compute_inverses(const FiniteGroup& g) {
  std::vector<int> inv(g.order, -1);
  for (int a = 0; a < g.order; ++a) {
    for (int b = 0; b < g.order; ++b) {
      if (g.mult[a][b] == g.identity && g.mult[b][a] == g.identity) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0)
      throw NotAGroup("no inverse for element " + std::to_string(a));
  }
  return inv;
}

}  // namespace

void validate_group(const FiniteGroup& g) {
  const int n = g.order;
  if (n <= 0 || static_cast<int>(g.mult.size()) != n)
    throw NotAGroup("multiplication table has wrong shape");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(g.mult[a].size()) != n)
      throw NotAGroup("row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b)
      if (g.mult[a][b] < 0 || g.mult[a][b] >= n)
        throw NotAGroup("closure fails at (" + std::to_string(a) + "," +
                        std::to_string(b) + "): entry " +
                        std::to_string(g.mult[a][b]));
  }
  const int e = g.identity;
  for (int a = 0; a < n; ++a)
    if (g.mult[e][a] != a || g.mult[a][e] != a)
      throw NotAGroup("identity axiom fails at element " + std::to_string(a));
  if (static_cast<int>(g.inv.size()) != n)
    throw NotAGroup("inverse table has wrong length");
  for (int a = 0; a < n; ++a)
    if (g.inv[a] < 0 || g.inv[a] >= n || g.mult[a][g.inv[a]] != e)
      throw NotAGroup("inverse axiom fails at element " + std::to_string(a));

  auto check_triple = [&](int a, int b, int c) {
    if (g.mult[g.mult[a][b]][c] != g.mult[a][g.mult[b][c]])
      throw NotAGroup("associativity fails at (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 10000; ++t)
      check_triple(pick(rng), pick(rng), pick(rng));
  }
}

FiniteGroup load_group(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("mult"))
    throw MalformedDocument("group document needs 'order' and 'mult'");
  FiniteGroup g;
  g.name = doc.value("name", std::string("unnamed"));
  try {
    g.order = doc.at("order").get<int>();
    g.mult = doc.at("mult").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw MalformedDocument(std::string("bad group document: ") + e.what());
  }
  if (static_cast<int>(g.mult.size()) != g.order)
    throw MalformedDocument("mult table size does not match order");
  for (const auto& row : g.mult)
    if (static_cast<int>(row.size()) != g.order)
      throw MalformedDocument("mult table row size does not match order");
  for (const auto& row : g.mult)
    for (int v : row)
      if (v < 0 || v >= g.order)
        throw NotAGroup("closure fails: entry " + std::to_string(v) +
                        " out of range");
  g.identity = find_identity(g);
  if (doc.contains("inv"))
    g.inv = doc.at("inv").get<std::vector<int>>();
  else
    g.inv = compute_inverses(g);
  validate_group(g);
  return g;
}

FiniteGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedDocument("cannot open group file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedDocument(std::string("bad JSON in ") + path + ": " +
                            e.what());
  }
  return load_group(doc);
}

FiniteGroup build_cyclic(int n) {
  if (n < 1) throw Error("cyclic group order must be positive");
  FiniteGroup g;
  g.name = "z" + std::to_string(n);
  g.order = n;
  g.mult.assign(n, std::vector<int>(n));
  g.inv.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.mult[a][b] = (a + b) % n;
    g.inv[a] = (n - a) % n;
  }
  g.identity = 0;
  return g;
}

FiniteGroup build_heisenberg(int n) {
  if (n < 1) throw Error("modulus must be positive");
  if (n % 2 == 0)
    throw EvenModulus("H(Z_n) needs odd n so that 2 is invertible mod n");
  int inv2 = (n + 1) / 2;  // 2*inv2 = n+1 = 1 mod n
  const int order = n * n * n;
  auto index = [n](int t, int a, int v) { return (t * n + a) * n + v; };
  FiniteGroup g;
  g.name = "heis" + std::to_string(n);
  g.order = order;
  g.mult.assign(order, std::vector<int>(order));
  for (int t1 = 0; t1 < n; ++t1)
    for (int a1 = 0; a1 < n; ++a1)
      for (int v1 = 0; v1 < n; ++v1)
        for (int t2 = 0; t2 < n; ++t2)
          for (int a2 = 0; a2 < n; ++a2)
            for (int v2 = 0; v2 < n; ++v2) {
              int phi = ((a2 * v1 - a1 * v2) % n + n) % n;
              phi = (phi * inv2) % n;
              g.mult[index(t1, a1, v1)][index(t2, a2, v2)] =
                  index((t1 + t2 + phi) % n, (a1 + a2) % n, (v1 + v2) % n);
            }
  g.identity = 0;
  g.inv = compute_inverses(g);
  return g;
}

}  // namespace qrf
