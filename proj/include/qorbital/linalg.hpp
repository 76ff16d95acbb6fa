#ifndef QORBITAL_LINALG_HPP
#define QORBITAL_LINALG_HPP

#include <optional>

#include "qorbital/cyclotomic.hpp"

namespace qorbital {

// Incremental echelon form over Q(zeta) for sparse vectors, tracking how each
// pivot row decomposes over the inserted vectors. Supports span-growth tests
// and expressing further vectors as exact linear combinations.
class SpanSolver {
 public:
  using Vec = std::map<int, Cyclo>;

  // Returns true when the vector enlarged the span. Every call consumes one
  // insertion index (combinations refer to these indices).
  bool insert(Vec v) {
    Vec combo{{n_inserted_, Cyclo::one()}};
    ++n_inserted_;
    reduce(v, combo);
    if (v.empty()) return false;
    int pivot = v.begin()->first;
    Cyclo inv = v.begin()->second.inverse();
    scale(v, inv);
    scale(combo, inv);
    rows_.emplace(pivot, Row{std::move(v), std::move(combo)});
    return true;
  }

  size_t dimension() const { return rows_.size(); }
  int inserted() const { return n_inserted_; }

  bool contains(Vec v) const {
    Vec combo;
    reduce(v, combo);
    return v.empty();
  }

  // Expresses target over the inserted vectors, or nullopt if outside span.
  std::optional<Vec> express(Vec target) const {
    Vec combo;
    reduce(target, combo);
    if (!target.empty()) return std::nullopt;
    for (auto& [idx, c] : combo) c = -c;
    return combo;
  }

 private:
  struct Row {
    Vec v;      // reduced, leading coefficient 1
    Vec combo;  // v = sum combo[j] * inserted_j
  };

  static void scale(Vec& v, const Cyclo& s) {
    for (auto& [k, c] : v) c *= s;
  }

  static void axpy(Vec& v, const Cyclo& s, const Vec& w) {
    for (const auto& [k, c] : w) {
      auto it = v.find(k);
      if (it == v.end()) {
        Cyclo prod = s * c;
        if (!prod.is_zero()) v.emplace(k, prod);
      } else {
        it->second += s * c;
        if (it->second.is_zero()) v.erase(it);
      }
    }
  }

  void reduce(Vec& v, Vec& combo) const {
    while (!v.empty()) {
      auto it = rows_.find(v.begin()->first);
      if (it == rows_.end()) return;
      Cyclo factor = -v.begin()->second;
      axpy(v, factor, it->second.v);
      axpy(combo, factor, it->second.combo);
    }
  }

  std::map<int, Row> rows_;  // pivot index -> row
  int n_inserted_ = 0;
};

}  // namespace qorbital

#endif  // QORBITAL_LINALG_HPP
