#ifndef QRF_GROUP_HPP
#define QRF_GROUP_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace qrf {

/// A finite group given by its Cayley table. Elements are integer indices
/// in [0, order); mult[g][h] is the index of g*h.
struct FiniteGroup {
  std::string name;
  int order = 0;
  std::vector<std::vector<int>> mult;
  std::vector<int> inv;
  int identity = 0;

  int op(int g, int h) const { return mult[g][h]; }
  int inverse(int g) const { return inv[g]; }
  bool is_abelian() const;
  std::vector<int> center() const;
};

/// Checks closure, identity, inverses and associativity; throws NotAGroup
/// naming the failing axiom and witness elements. Associativity is checked
/// exhaustively up to order 64 and on 10^4 random triples above.
void validate_group(const FiniteGroup& g);

FiniteGroup load_group(const nlohmann::json& doc);
FiniteGroup load_group_file(const std::string& path);

FiniteGroup build_cyclic(int n);

/// Discrete Heisenberg group H(Z_n) for odd n: elements (theta, a, v) in
/// Z_n^3, indexed lexicographically, with product
/// (t1,a1,v1)*(t2,a2,v2) = (t1+t2+(a2*v1-a1*v2)/2, a1+a2, v1+v2) mod n.
FiniteGroup build_heisenberg(int n);

}  // namespace qrf

#endif
