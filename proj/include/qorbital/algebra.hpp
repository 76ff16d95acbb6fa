#ifndef QORBITAL_ALGEBRA_HPP
#define QORBITAL_ALGEBRA_HPP

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "qorbital/group.hpp"

namespace qorbital {

// Block dimensions [d_1..d_k] of a finite-dimensional multimatrix *-algebra
// M_{d_1} (+) ... (+) M_{d_k}; total linear dimension is sum d_i^2.
struct MultiMatrixShape {
  std::vector<int> blocks;

  size_t dim() const {
    size_t d = 0;
    for (int b : blocks) d += static_cast<size_t>(b) * static_cast<size_t>(b);
    return d;
  }
};

// Immutable algebra descriptor. Basis elements are indexed 0..dim-1 for the
// finite models; group algebras over a free product use interned word ids.
// In every model the product of two basis elements is either zero or a single
// basis element with coefficient one, which keeps multiplication sparse.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  enum class Model { MultiMatrix, GroupSum, TensorFG };

  static std::shared_ptr<const Algebra> multimatrix(MultiMatrixShape shape) {
    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->model_ = Model::MultiMatrix;
    a->shape_ = std::move(shape);
    size_t off = 0;
    for (int b : a->shape_.blocks) {
      a->offsets_.push_back(off);
      off += static_cast<size_t>(b) * static_cast<size_t>(b);
    }
    return a;
  }

  static std::shared_ptr<const Algebra> group_sum(
      std::shared_ptr<const GroupBase> g) {
    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->model_ = Model::GroupSum;
    a->group_ = std::move(g);
    return a;
  }

  // C(G) (x) C*(H): basis (sigma, gamma), componentwise product
  // (delta_sigma (x) gamma)(delta_tau (x) mu) = [sigma=tau] delta_sigma (x) gamma mu.
  static std::shared_ptr<const Algebra> tensor_fg(
      std::shared_ptr<const FiniteGroup> fun_part,
      std::shared_ptr<const FiniteGroup> grp_part) {
    auto a = std::shared_ptr<Algebra>(new Algebra());
    a->model_ = Model::TensorFG;
    a->fun_ = std::move(fun_part);
    a->tgrp_ = std::move(grp_part);
    return a;
  }

  Model model() const { return model_; }
  const MultiMatrixShape& shape() const { return shape_; }
  const std::shared_ptr<const GroupBase>& group() const { return group_; }
  const std::shared_ptr<const FiniteGroup>& fun_part() const { return fun_; }
  const std::shared_ptr<const FiniteGroup>& grp_part() const { return tgrp_; }

  std::optional<size_t> dim() const {
    switch (model_) {
      case Model::MultiMatrix:
        return shape_.dim();
      case Model::GroupSum:
        return group_->size();
      case Model::TensorFG:
        return *fun_->size() * *tgrp_->size();
    }
    return std::nullopt;
  }

  // Product of basis elements: zero or a single basis element (coeff 1).
  std::optional<int> basis_mul(int a, int b) const {
    switch (model_) {
      case Model::MultiMatrix: {
        auto [blk_a, ra, ca] = decode(a);
        auto [blk_b, rb, cb] = decode(b);
        if (blk_a != blk_b || ca != rb) return std::nullopt;
        return encode(blk_a, ra, cb);
      }
      case Model::GroupSum:
        return group_->mul(a, b);
      case Model::TensorFG: {
        int nh = static_cast<int>(*tgrp_->size());
        int sa = a / nh, ga = a % nh;
        int sb = b / nh, gb = b % nh;
        if (sa != sb) return std::nullopt;
        return sa * nh + tgrp_->mul(ga, gb);
      }
    }
    return std::nullopt;
  }

  // Adjoint of a basis element is again a basis element.
  int basis_star(int a) const {
    switch (model_) {
      case Model::MultiMatrix: {
        auto [blk, r, c] = decode(a);
        return encode(blk, c, r);
      }
      case Model::GroupSum:
        return group_->inv(a);
      case Model::TensorFG: {
        int nh = static_cast<int>(*tgrp_->size());
        return (a / nh) * nh + tgrp_->inv(a % nh);
      }
    }
    return a;
  }

  std::vector<std::pair<int, Cyclo>> unit_terms() const {
    std::vector<std::pair<int, Cyclo>> terms;
    switch (model_) {
      case Model::MultiMatrix:
        for (size_t blk = 0; blk < shape_.blocks.size(); ++blk)
          for (int r = 0; r < shape_.blocks[blk]; ++r)
            terms.emplace_back(encode(static_cast<int>(blk), r, r), Cyclo::one());
        break;
      case Model::GroupSum:
        terms.emplace_back(group_->identity(), Cyclo::one());
        break;
      case Model::TensorFG: {
        int nh = static_cast<int>(*tgrp_->size());
        for (size_t s = 0; s < *fun_->size(); ++s)
          terms.emplace_back(static_cast<int>(s) * nh, Cyclo::one());
        break;
      }
    }
    return terms;
  }

  std::string basis_name(int a) const {
    switch (model_) {
      case Model::MultiMatrix: {
        auto [blk, r, c] = decode(a);
        if (shape_.blocks[static_cast<size_t>(blk)] == 1) {
          // 1-dimensional summands are f_1, f_2, ...
          int count = 0;
          for (int i = 0; i <= blk; ++i)
            if (shape_.blocks[static_cast<size_t>(i)] == 1) ++count;
          return "f" + std::to_string(count);
        }
        std::ostringstream os;
        os << "E";
        int matrix_blocks = 0;
        for (int b : shape_.blocks)
          if (b > 1) ++matrix_blocks;
        if (matrix_blocks > 1) os << blk + 1 << ":";
        os << r + 1 << c + 1;
        return os.str();
      }
      case Model::GroupSum:
        return group_->elem_name(a);
      case Model::TensorFG: {
        int nh = static_cast<int>(*tgrp_->size());
        return "d_" + fun_->elem_name(a / nh) + "(x)" + tgrp_->elem_name(a % nh);
      }
    }
    return "?";
  }

  // MultiMatrix helpers.
  int encode(int blk, int r, int c) const {
    return static_cast<int>(offsets_[static_cast<size_t>(blk)]) +
           r * shape_.blocks[static_cast<size_t>(blk)] + c;
  }
  std::tuple<int, int, int> decode(int idx) const {
    size_t blk = 0;
    while (blk + 1 < offsets_.size() && static_cast<size_t>(idx) >= offsets_[blk + 1]) ++blk;
    int local = idx - static_cast<int>(offsets_[blk]);
    int d = shape_.blocks[blk];
    return {static_cast<int>(blk), local / d, local % d};
  }

 private:
  Algebra() = default;
  Model model_ = Model::MultiMatrix;
  MultiMatrixShape shape_;
  std::vector<size_t> offsets_;
  std::shared_ptr<const GroupBase> group_;
  std::shared_ptr<const FiniteGroup> fun_;
  std::shared_ptr<const FiniteGroup> tgrp_;
};

inline bool same_algebra(const std::shared_ptr<const Algebra>& a,
                         const std::shared_ptr<const Algebra>& b) {
  return a.get() == b.get();
}

// An element of a *-algebra: sparse basis-index -> coefficient map.
// Zero coefficients are never stored, so the representation is canonical and
// equality/zero tests are exact.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(std::shared_ptr<const Algebra> alg)
      : alg_(std::move(alg)) {}

  static AlgebraElement zero(std::shared_ptr<const Algebra> alg) {
    return AlgebraElement(std::move(alg));
  }

  static AlgebraElement unit(std::shared_ptr<const Algebra> alg) {
    AlgebraElement e(alg);
    for (auto& [idx, c] : alg->unit_terms()) e.add_term(idx, c);
    return e;
  }

  static AlgebraElement basis(std::shared_ptr<const Algebra> alg, int idx,
                              Cyclo coeff = Cyclo::one()) {
    AlgebraElement e(std::move(alg));
    e.add_term(idx, coeff);
    return e;
  }

  const std::shared_ptr<const Algebra>& algebra() const { return alg_; }
  const std::map<int, Cyclo>& terms() const { return c_; }

  bool is_zero() const { return c_.empty(); }

  Cyclo coefficient(int idx) const {
    auto it = c_.find(idx);
    return it == c_.end() ? Cyclo::zero() : it->second;
  }

  void add_term(int idx, const Cyclo& v) {
    if (v.is_zero()) return;
    auto it = c_.find(idx);
    if (it == c_.end()) {
      c_.emplace(idx, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  friend AlgebraElement operator+(const AlgebraElement& a,
                                  const AlgebraElement& b) {
    require_same(a, b);
    AlgebraElement out = a;
    for (const auto& [idx, v] : b.c_) out.add_term(idx, v);
    return out;
  }

  friend AlgebraElement operator-(const AlgebraElement& a,
                                  const AlgebraElement& b) {
    require_same(a, b);
    AlgebraElement out = a;
    for (const auto& [idx, v] : b.c_) out.add_term(idx, -v);
    return out;
  }

  AlgebraElement operator-() const {
    AlgebraElement out(alg_);
    for (const auto& [idx, v] : c_) out.c_.emplace(idx, -v);
    return out;
  }

  friend AlgebraElement operator*(const Cyclo& s, const AlgebraElement& a) {
    AlgebraElement out(a.alg_);
    if (s.is_zero()) return out;
    for (const auto& [idx, v] : a.c_) out.add_term(idx, s * v);
    return out;
  }

  friend AlgebraElement operator*(const AlgebraElement& a,
                                  const AlgebraElement& b) {
    require_same(a, b);
    AlgebraElement out(a.alg_);
    for (const auto& [ia, va] : a.c_)
      for (const auto& [ib, vb] : b.c_)
        if (auto prod = a.alg_->basis_mul(ia, ib)) out.add_term(*prod, va * vb);
    return out;
  }

  AlgebraElement& operator+=(const AlgebraElement& o) { return *this = *this + o; }
  AlgebraElement& operator-=(const AlgebraElement& o) { return *this = *this - o; }

  AlgebraElement star() const {
    AlgebraElement out(alg_);
    for (const auto& [idx, v] : c_) out.add_term(alg_->basis_star(idx), v.conj());
    return out;
  }

  bool is_projection() const {
    return *this * *this == *this && star() == *this;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    require_same(a, b);
    if (a.c_.size() != b.c_.size()) return false;
    auto ia = a.c_.begin();
    auto ib = b.c_.begin();
    for (; ia != a.c_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) {
    return !(a == b);
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, v] : c_) {
      if (!first) os << " + ";
      first = false;
      if (v.is_one())
        os << alg_->basis_name(idx);
      else
        os << "(" << v.str() << ")*" << alg_->basis_name(idx);
    }
    return os.str();
  }

 private:
  static void require_same(const AlgebraElement& a, const AlgebraElement& b) {
    if (!same_algebra(a.alg_, b.alg_))
      throw domain_error("incompatible operands: elements of different algebras");
  }

  std::shared_ptr<const Algebra> alg_;
  std::map<int, Cyclo> c_;
};

// Element of A (x) A as a sparse map over basis pairs.
class TensorSquare {
 public:
  TensorSquare() = default;
  explicit TensorSquare(std::shared_ptr<const Algebra> alg)
      : alg_(std::move(alg)) {}

  static TensorSquare outer(const AlgebraElement& a, const AlgebraElement& b) {
    TensorSquare t(a.algebra());
    for (const auto& [ia, va] : a.terms())
      for (const auto& [ib, vb] : b.terms()) t.add_term(ia, ib, va * vb);
    return t;
  }

  const std::shared_ptr<const Algebra>& algebra() const { return alg_; }
  const std::map<std::pair<int, int>, Cyclo>& terms() const { return c_; }

  bool is_zero() const { return c_.empty(); }

  void add_term(int a, int b, const Cyclo& v) {
    if (v.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = c_.find(key);
    if (it == c_.end()) {
      c_.emplace(key, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  Cyclo coefficient(int a, int b) const {
    auto it = c_.find({a, b});
    return it == c_.end() ? Cyclo::zero() : it->second;
  }

  friend TensorSquare operator+(const TensorSquare& x, const TensorSquare& y) {
    TensorSquare out = x;
    if (!out.alg_) out.alg_ = y.alg_;
    for (const auto& [k, v] : y.c_) out.add_term(k.first, k.second, v);
    return out;
  }

  friend TensorSquare operator-(const TensorSquare& x, const TensorSquare& y) {
    TensorSquare out = x;
    if (!out.alg_) out.alg_ = y.alg_;
    for (const auto& [k, v] : y.c_) out.add_term(k.first, k.second, -v);
    return out;
  }

  friend TensorSquare operator*(const Cyclo& s, const TensorSquare& x) {
    TensorSquare out(x.alg_);
    if (s.is_zero()) return out;
    for (const auto& [k, v] : x.c_) out.add_term(k.first, k.second, s * v);
    return out;
  }

  friend TensorSquare operator*(const TensorSquare& x, const TensorSquare& y) {
    TensorSquare out(x.alg_ ? x.alg_ : y.alg_);
    const Algebra& alg = *out.alg_;
    for (const auto& [ka, va] : x.c_)
      for (const auto& [kb, vb] : y.c_) {
        auto left = alg.basis_mul(ka.first, kb.first);
        if (!left) continue;
        auto right = alg.basis_mul(ka.second, kb.second);
        if (!right) continue;
        out.add_term(*left, *right, va * vb);
      }
    return out;
  }

  TensorSquare& operator+=(const TensorSquare& o) { return *this = *this + o; }

  friend bool operator==(const TensorSquare& x, const TensorSquare& y) {
    if (x.c_.size() != y.c_.size()) return false;
    auto ix = x.c_.begin();
    auto iy = y.c_.begin();
    for (; ix != x.c_.end(); ++ix, ++iy)
      if (ix->first != iy->first || !(ix->second == iy->second)) return false;
    return true;
  }
  friend bool operator!=(const TensorSquare& x, const TensorSquare& y) {
    return !(x == y);
  }

 private:
  std::shared_ptr<const Algebra> alg_;
  std::map<std::pair<int, int>, Cyclo> c_;
};

}  // namespace qorbital

#endif  // QORBITAL_ALGEBRA_HPP
