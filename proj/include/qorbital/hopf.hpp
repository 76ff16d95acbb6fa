#ifndef QORBITAL_HOPF_HPP
#define QORBITAL_HOPF_HPP

#include <tuple>

#include "qorbital/algebra.hpp"

namespace qorbital {

// Hopf structure maps (comultiplication, counit, antipode) plus the Haar
// state, all given on the basis of the algebra and extended linearly.
class HopfData {
 public:
  enum class Kind { GroupLike, FunctionAlg, TensorFG, Explicit };

  HopfData() = default;

  static HopfData group_like(std::shared_ptr<const Algebra> alg) {
    HopfData h;
    h.kind_ = Kind::GroupLike;
    h.alg_ = std::move(alg);
    return h;
  }

  static HopfData function_alg(std::shared_ptr<const Algebra> alg,
                               std::shared_ptr<const FiniteGroup> g) {
    HopfData h;
    h.kind_ = Kind::FunctionAlg;
    h.alg_ = std::move(alg);
    h.fun_group_ = std::move(g);
    return h;
  }

  static HopfData tensor_fg(std::shared_ptr<const Algebra> alg) {
    HopfData h;
    h.kind_ = Kind::TensorFG;
    h.alg_ = std::move(alg);
    return h;
  }

  static HopfData explicit_table(std::shared_ptr<const Algebra> alg,
                                 std::vector<TensorSquare> delta,
                                 std::vector<Cyclo> epsilon,
                                 std::vector<AlgebraElement> antipode,
                                 std::vector<Cyclo> haar) {
    HopfData h;
    h.kind_ = Kind::Explicit;
    h.alg_ = std::move(alg);
    h.delta_ = std::move(delta);
    h.eps_ = std::move(epsilon);
    h.antipode_ = std::move(antipode);
    h.haar_ = std::move(haar);
    return h;
  }

  bool valid() const { return alg_ != nullptr; }
  Kind kind() const { return kind_; }
  const std::shared_ptr<const Algebra>& algebra() const { return alg_; }

  TensorSquare delta_basis(int b) const {
    TensorSquare t(alg_);
    switch (kind_) {
      case Kind::GroupLike:
        t.add_term(b, b, Cyclo::one());
        break;
      case Kind::FunctionAlg: {
        // Delta(d_sigma) = sum_{xy = sigma} d_x (x) d_y.
        const FiniteGroup& g = *fun_group_;
        size_t n = *g.size();
        for (size_t x = 0; x < n; ++x) {
          int y = g.mul(g.inv(static_cast<int>(x)), b);
          t.add_term(static_cast<int>(x), y, Cyclo::one());
        }
        break;
      }
      case Kind::TensorFG: {
        const FiniteGroup& g = *alg_->fun_part();
        int nh = static_cast<int>(*alg_->grp_part()->size());
        int sigma = b / nh, gamma = b % nh;
        size_t n = *g.size();
        for (size_t x = 0; x < n; ++x) {
          int y = g.mul(g.inv(static_cast<int>(x)), sigma);
          t.add_term(static_cast<int>(x) * nh + gamma, y * nh + gamma,
                     Cyclo::one());
        }
        break;
      }
      case Kind::Explicit:
        return delta_[static_cast<size_t>(b)];
    }
    return t;
  }

  Cyclo epsilon_basis(int b) const {
    switch (kind_) {
      case Kind::GroupLike:
        return Cyclo::one();
      case Kind::FunctionAlg:
        return b == fun_group_->identity() ? Cyclo::one() : Cyclo::zero();
      case Kind::TensorFG: {
        int nh = static_cast<int>(*alg_->grp_part()->size());
        return (b / nh) == 0 ? Cyclo::one() : Cyclo::zero();
      }
      case Kind::Explicit:
        return eps_[static_cast<size_t>(b)];
    }
    return Cyclo::zero();
  }

  AlgebraElement antipode_basis(int b) const {
    switch (kind_) {
      case Kind::GroupLike:
        return AlgebraElement::basis(alg_, alg_->group()->inv(b));
      case Kind::FunctionAlg:
        return AlgebraElement::basis(alg_, fun_group_->inv(b));
      case Kind::TensorFG: {
        const FiniteGroup& g = *alg_->fun_part();
        int nh = static_cast<int>(*alg_->grp_part()->size());
        int sigma = b / nh, gamma = b % nh;
        return AlgebraElement::basis(
            alg_, g.inv(sigma) * nh + alg_->grp_part()->inv(gamma));
      }
      case Kind::Explicit:
        return antipode_[static_cast<size_t>(b)];
    }
    return AlgebraElement(alg_);
  }

  Cyclo haar_basis(int b) const {
    switch (kind_) {
      case Kind::GroupLike:
        return b == alg_->group()->identity() ? Cyclo::one() : Cyclo::zero();
      case Kind::FunctionAlg:
        return Cyclo(Rational(1, static_cast<long>(*fun_group_->size())));
      case Kind::TensorFG: {
        int nh = static_cast<int>(*alg_->grp_part()->size());
        if (b % nh != 0) return Cyclo::zero();
        return Cyclo(Rational(1, static_cast<long>(*alg_->fun_part()->size())));
      }
      case Kind::Explicit:
        return haar_[static_cast<size_t>(b)];
    }
    return Cyclo::zero();
  }

  // Linear extensions.
  TensorSquare delta(const AlgebraElement& a) const {
    TensorSquare out(alg_);
    for (const auto& [idx, v] : a.terms()) out += v * delta_basis(idx);
    return out;
  }
  Cyclo epsilon(const AlgebraElement& a) const {
    Cyclo out;
    for (const auto& [idx, v] : a.terms()) out += v * epsilon_basis(idx);
    return out;
  }
  AlgebraElement antipode(const AlgebraElement& a) const {
    AlgebraElement out(alg_);
    for (const auto& [idx, v] : a.terms()) out += v * antipode_basis(idx);
    return out;
  }
  Cyclo haar(const AlgebraElement& a) const {
    Cyclo out;
    for (const auto& [idx, v] : a.terms()) out += v * haar_basis(idx);
    return out;
  }

  // Exhaustive Hopf-axiom check over the given basis indices:
  // coassociativity, both counit laws, the antipode law, and haar(1) = 1.
  bool verify_axioms(const std::vector<int>& basis, std::string* why = nullptr) const {
    using Triple = std::map<std::tuple<int, int, int>, Cyclo>;
    auto fail = [&](const std::string& msg) {
      if (why) *why = msg;
      return false;
    };
    for (int b : basis) {
      TensorSquare d = delta_basis(b);
      // (Delta (x) id) Delta vs (id (x) Delta) Delta.
      Triple lhs, rhs;
      auto add_triple = [](Triple& t, int x, int y, int z, const Cyclo& v) {
        auto key = std::make_tuple(x, y, z);
        auto it = t.find(key);
        if (it == t.end()) {
          if (!v.is_zero()) t.emplace(key, v);
        } else {
          it->second += v;
          if (it->second.is_zero()) t.erase(it);
        }
      };
      for (const auto& [k, v] : d.terms()) {
        for (const auto& [k2, v2] : delta_basis(k.first).terms())
          add_triple(lhs, k2.first, k2.second, k.second, v * v2);
        for (const auto& [k2, v2] : delta_basis(k.second).terms())
          add_triple(rhs, k.first, k2.first, k2.second, v * v2);
      }
      if (lhs != rhs)
        return fail("coassociativity fails on basis " + alg_->basis_name(b));
      // Counit laws.
      AlgebraElement left(alg_), right(alg_);
      for (const auto& [k, v] : d.terms()) {
        left.add_term(k.second, v * epsilon_basis(k.first));
        right.add_term(k.first, v * epsilon_basis(k.second));
      }
      AlgebraElement eb = AlgebraElement::basis(alg_, b);
      if (left != eb || right != eb)
        return fail("counit law fails on basis " + alg_->basis_name(b));
      // Antipode law m(S (x) id)Delta(b) = eps(b) 1.
      AlgebraElement anti(alg_);
      for (const auto& [k, v] : d.terms())
        anti += v * (antipode_basis(k.first) *
                     AlgebraElement::basis(alg_, k.second));
      AlgebraElement expected = epsilon_basis(b) * AlgebraElement::unit(alg_);
      if (anti != expected)
        return fail("antipode law fails on basis " + alg_->basis_name(b));
    }
    if (!haar(AlgebraElement::unit(alg_)).is_one())
      return fail("haar(1) != 1");
    return true;
  }

  bool verify_axioms_all(std::string* why = nullptr) const {
    auto d = alg_->dim();
    if (!d) throw domain_error("cannot verify axioms over an infinite basis");
    std::vector<int> basis(*d);
    for (size_t i = 0; i < *d; ++i) basis[i] = static_cast<int>(i);
    return verify_axioms(basis, why);
  }

 private:
  Kind kind_ = Kind::GroupLike;
  std::shared_ptr<const Algebra> alg_;
  std::shared_ptr<const FiniteGroup> fun_group_;
  std::vector<TensorSquare> delta_;
  std::vector<Cyclo> eps_;
  std::vector<AlgebraElement> antipode_;
  std::vector<Cyclo> haar_;
};

// A Woronowicz algebra as data: the underlying *-algebra plus Hopf maps.
struct HopfAlgebra {
  std::shared_ptr<const Algebra> algebra;
  HopfData hopf;
};

// C(G) for a finite group G: commutative multimatrix algebra with |G| blocks
// of dimension 1, Haar = uniform average, counit = evaluation at identity.
inline HopfAlgebra function_algebra(std::shared_ptr<const FiniteGroup> g) {
  size_t n = *g->size();
  auto alg = Algebra::multimatrix(MultiMatrixShape{std::vector<int>(n, 1)});
  return HopfAlgebra{alg, HopfData::function_alg(alg, std::move(g))};
}

// C*(Gamma): group algebra with Delta(g) = g (x) g, Haar = coefficient of e.
inline HopfAlgebra group_algebra(std::shared_ptr<const GroupBase> g) {
  auto alg = Algebra::group_sum(std::move(g));
  return HopfAlgebra{alg, HopfData::group_like(alg)};
}

// C(G) (x) C*(H), the only tensor combination the liberation theorem needs.
inline HopfAlgebra tensor_algebra(std::shared_ptr<const FiniteGroup> fun_part,
                                  std::shared_ptr<const FiniteGroup> grp_part) {
  auto alg = Algebra::tensor_fg(std::move(fun_part), std::move(grp_part));
  return HopfAlgebra{alg, HopfData::tensor_fg(alg)};
}

}  // namespace qorbital

#endif  // QORBITAL_HOPF_HPP
