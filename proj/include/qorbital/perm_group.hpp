#ifndef QORBITAL_PERM_GROUP_HPP
#define QORBITAL_PERM_GROUP_HPP

#include <algorithm>
#include <set>

#include "qorbital/group.hpp"

namespace qorbital {

// Permutation group on {0..degree-1} given by generators; element closure is
// computed on demand and cached. Adequate for the group orders this toolkit
// meets (automorphism groups of small graphs, orbital-preserving groups).
class PermGroup {
 public:
  explicit PermGroup(int degree) : degree_(degree) {}
  PermGroup(int degree, std::vector<Perm> gens)
      : degree_(degree), gens_(std::move(gens)) {
    for (const auto& g : gens_)
      if (static_cast<int>(g.size()) != degree_)
        throw domain_error("generator degree mismatch");
  }

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  void add_generator(Perm g) {
    if (static_cast<int>(g.size()) != degree_)
      throw domain_error("generator degree mismatch");
    gens_.push_back(std::move(g));
    elements_.reset();
  }

  const std::vector<Perm>& elements(size_t max_order = 2'000'000) const {
    if (!elements_) {
      std::set<Perm> seen;
      std::vector<Perm> todo{perm_identity(degree_)};
      seen.insert(todo[0]);
      for (size_t i = 0; i < todo.size(); ++i) {
        for (const Perm& g : gens_) {
          Perm h = perm_compose(todo[i], g);
          if (seen.insert(h).second) {
            todo.push_back(std::move(h));
            if (todo.size() > max_order)
              throw domain_error("permutation group closure exceeds bound");
          }
        }
      }
      std::sort(todo.begin(), todo.end());
      elements_ = std::move(todo);
    }
    return *elements_;
  }

  size_t order() const { return elements().size(); }

  bool contains(const Perm& p) const {
    const auto& els = elements();
    return std::binary_search(els.begin(), els.end(), p);
  }

  bool contains_subgroup(const PermGroup& other) const {
    for (const Perm& g : other.generators())
      if (!contains(g)) return false;
    return true;
  }

  bool is_abelian() const {
    for (const Perm& a : gens_)
      for (const Perm& b : gens_)
        if (perm_compose(a, b) != perm_compose(b, a)) return false;
    return true;
  }

  int element_order(const Perm& p) const {
    Perm x = p;
    Perm id = perm_identity(degree_);
    int n = 1;
    while (x != id) {
      x = perm_compose(x, p);
      ++n;
    }
    return n;
  }

  // Multiset of element orders, the isomorphism invariant used by
  // isomorphic_to below.
  std::map<int, int> order_multiset() const {
    std::map<int, int> m;
    for (const Perm& p : elements()) ++m[element_order(p)];
    return m;
  }

  // Identification against the small targets this project needs. Order,
  // abelianness and the element-order multiset separate every candidate pair
  // among {Z_n, Z2xZ2, S3, D4, Q8, Z2xS3, A4, Z2xZ2xZ2, Z4xZ2, Z12, ...}.
  bool isomorphic_to(const std::string& label) const {
    size_t n = order();
    auto orders = order_multiset();
    if (label == "Z1") return n == 1;
    if (label == "Z2") return n == 2;
    if (label == "Z3") return n == 3;
    if (label == "Z4") return n == 4 && orders[4] == 2;
    if (label == "Z2xZ2") return n == 4 && orders[2] == 3;
    if (label == "Z5") return n == 5;
    if (label == "Z6") return n == 6 && is_abelian();
    if (label == "S3") return n == 6 && !is_abelian();
    if (label == "D4")
      return n == 8 && !is_abelian() && orders[2] == 5 && orders[4] == 2;
    if (label == "Q8")
      return n == 8 && !is_abelian() && orders[2] == 1 && orders[4] == 6;
    if (label == "Z2xS3" || label == "D6")
      return n == 12 && !is_abelian() && orders[2] == 7 && orders[6] == 2;
    if (label == "A4") return n == 12 && orders[3] == 8;
    throw domain_error("isomorphic_to: unknown target " + label);
  }

 private:
  int degree_;
  std::vector<Perm> gens_;
  mutable std::optional<std::vector<Perm>> elements_;
};

}  // namespace qorbital

#endif  // QORBITAL_PERM_GROUP_HPP
