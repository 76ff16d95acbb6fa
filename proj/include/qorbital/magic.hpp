#ifndef QORBITAL_MAGIC_HPP
#define QORBITAL_MAGIC_HPP

#include <algorithm>

#include "qorbital/hopf.hpp"
#include "qorbital/linalg.hpp"

namespace qorbital {

struct MagicViolation {
  enum class Kind { NotProjection, RowSum, ColSum };
  Kind kind;
  int i;  // row (or index for sums), 0-based
  int j;  // column, -1 for sums
};

// Square matrix over a *-algebra; magic when every entry is a projection and
// all rows and columns sum to the unit.
class MagicUnitary {
 public:
  MagicUnitary(std::shared_ptr<const Algebra> alg, size_t n)
      : alg_(std::move(alg)), n_(n), e_(n * n, AlgebraElement(alg_)) {}

  size_t n() const { return n_; }
  const std::shared_ptr<const Algebra>& algebra() const { return alg_; }

  const AlgebraElement& at(size_t i, size_t j) const { return e_[i * n_ + j]; }
  void set(size_t i, size_t j, AlgebraElement v) {
    if (!same_algebra(v.algebra(), alg_))
      throw domain_error("entry from a different algebra");
    e_[i * n_ + j] = std::move(v);
  }

  // Violations are data, not errors: an empty report means magic.
  std::vector<MagicViolation> verify_magic() const {
    std::vector<MagicViolation> report;
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < n_; ++j)
        if (!at(i, j).is_projection())
          report.push_back({MagicViolation::Kind::NotProjection,
                            static_cast<int>(i), static_cast<int>(j)});
    AlgebraElement unit = AlgebraElement::unit(alg_);
    for (size_t i = 0; i < n_; ++i) {
      AlgebraElement row(alg_), col(alg_);
      for (size_t j = 0; j < n_; ++j) {
        row += at(i, j);
        col += at(j, i);
      }
      if (row != unit)
        report.push_back({MagicViolation::Kind::RowSum, static_cast<int>(i), -1});
      if (col != unit)
        report.push_back({MagicViolation::Kind::ColSum, static_cast<int>(i), -1});
    }
    return report;
  }

  bool is_magic() const { return verify_magic().empty(); }

  // Fourier-type transitive magic representation of a finite-order group
  // element: u_{kl} = (1/N) sum_m w^{(k-l)m} g^m with w = e^{2 pi i/N}.
  static MagicUnitary fourier(std::shared_ptr<const Algebra> group_alg, int g) {
    if (group_alg->model() != Algebra::Model::GroupSum)
      throw domain_error("fourier representation needs a group algebra");
    const GroupBase& grp = *group_alg->group();
    int ord = grp.order_of(g);
    unsigned nu = static_cast<unsigned>(ord);
    MagicUnitary u(group_alg, static_cast<size_t>(ord));
    Rational inv_n(1, ord);
    for (int k = 0; k < ord; ++k)
      for (int l = 0; l < ord; ++l) {
        AlgebraElement entry(group_alg);
        int gm = g;
        for (int m = 1; m <= ord; ++m) {
          entry.add_term(gm, inv_n * Cyclo::root_of_unity(
                                         nu, static_cast<long>(k - l) * m));
          gm = grp.mul(gm, g);
        }
        u.set(static_cast<size_t>(k), static_cast<size_t>(l), std::move(entry));
      }
    return u;
  }

  static MagicUnitary direct_sum(const std::vector<const MagicUnitary*>& blocks) {
    if (blocks.empty()) throw domain_error("empty direct sum");
    const auto& alg = blocks[0]->algebra();
    size_t total = 0;
    for (const MagicUnitary* b : blocks) {
      if (!same_algebra(b->algebra(), alg))
        throw domain_error("direct sum blocks over different algebras");
      total += b->n();
    }
    MagicUnitary u(alg, total);
    size_t off = 0;
    for (const MagicUnitary* b : blocks) {
      for (size_t i = 0; i < b->n(); ++i)
        for (size_t j = 0; j < b->n(); ++j)
          u.set(off + i, off + j, b->at(i, j));
      off += b->n();
    }
    return u;
  }

  // P u P^{-1} for the permutation matrix P of sigma (0-based).
  MagicUnitary permute_conjugate(const Perm& sigma) const {
    if (sigma.size() != n_) throw domain_error("permutation degree mismatch");
    Perm si = perm_inverse(sigma);
    MagicUnitary out(alg_, n_);
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < n_; ++j)
        out.set(i, j, at(static_cast<size_t>(si[i]), static_cast<size_t>(si[j])));
    return out;
  }

  // Interns the distinct entry values; id(i,j) indexes values().
  struct EntryTable {
    std::vector<AlgebraElement> values;
    std::vector<int> id;  // n*n, row-major
    size_t n = 0;

    int at(size_t i, size_t j) const { return id[i * n + j]; }
  };

  EntryTable entry_table() const {
    EntryTable t;
    t.n = n_;
    t.id.resize(n_ * n_);
    for (size_t i = 0; i < n_ * n_; ++i) {
      int found = -1;
      for (size_t v = 0; v < t.values.size(); ++v)
        if (t.values[v] == e_[i]) {
          found = static_cast<int>(v);
          break;
        }
      if (found < 0) {
        found = static_cast<int>(t.values.size());
        t.values.push_back(e_[i]);
      }
      t.id[i] = found;
    }
    return t;
  }

  // Searches for a permutation with other = P (*this) P^{-1}.
  std::optional<Perm> equivalent(const MagicUnitary& other) const {
    if (other.n_ != n_ || !same_algebra(other.alg_, alg_)) return std::nullopt;
    // Shared interning so ids are comparable across both matrices.
    std::vector<AlgebraElement> values;
    auto intern = [&values](const AlgebraElement& x) {
      for (size_t v = 0; v < values.size(); ++v)
        if (values[v] == x) return static_cast<int>(v);
      values.push_back(x);
      return static_cast<int>(values.size() - 1);
    };
    std::vector<int> idu(n_ * n_), idv(n_ * n_);
    for (size_t i = 0; i < n_ * n_; ++i) idu[i] = intern(e_[i]);
    for (size_t i = 0; i < n_ * n_; ++i) idv[i] = intern(other.e_[i]);
    // Quick reject: global entry multisets must agree.
    {
      std::vector<int> mu = idu, mv = idv;
      std::sort(mu.begin(), mu.end());
      std::sort(mv.begin(), mv.end());
      if (mu != mv) return std::nullopt;
    }
    // Row fingerprints: (diagonal id, sorted row multiset).
    auto row_sig = [this](const std::vector<int>& id, size_t r) {
      std::vector<int> sig(id.begin() + static_cast<long>(r * n_),
                           id.begin() + static_cast<long>((r + 1) * n_));
      int diag = sig[r];
      std::sort(sig.begin(), sig.end());
      sig.push_back(diag);
      return sig;
    };
    std::vector<std::vector<int>> sig_u(n_), sig_v(n_);
    for (size_t r = 0; r < n_; ++r) {
      sig_u[r] = row_sig(idu, r);
      sig_v[r] = row_sig(idv, r);
    }
    Perm m(n_, -1);
    std::vector<bool> used(n_, false);
    // Backtracking over images; v_{m(a) m(b)} must equal u_{a b}.
    std::function<bool(size_t)> rec = [&](size_t a) -> bool {
      if (a == n_) return true;
      for (size_t x = 0; x < n_; ++x) {
        if (used[x] || sig_u[a] != sig_v[x]) continue;
        bool ok = true;
        for (size_t b = 0; b <= a && ok; ++b) {
          if (m[b] < 0 && b != a) continue;
          size_t mb = (b == a) ? x : static_cast<size_t>(m[b]);
          if (idu[a * n_ + b] != idv[x * n_ + mb] ||
              idu[b * n_ + a] != idv[mb * n_ + x])
            ok = false;
        }
        if (!ok) continue;
        m[a] = static_cast<int>(x);
        used[x] = true;
        if (rec(a + 1)) return true;
        m[a] = -1;
        used[x] = false;
      }
      return false;
    };
    if (!rec(0)) return std::nullopt;
    return m;
  }

  // Transitive magic representation conditions (all exact):
  // (1) no zero entries, (2) Delta(u_ij) = sum_k u_ik (x) u_kj,
  // (3) eps(u_ij) = delta_ij, (4) S(u_ij) = u_ji.
  std::pair<bool, std::vector<std::string>> is_transitive_magic_rep(
      const HopfData& h) const {
    std::vector<std::string> reasons;
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < n_; ++j) {
        const AlgebraElement& u_ij = at(i, j);
        if (u_ij.is_zero())
          reasons.push_back("entry (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") is zero");
        TensorSquare expect(alg_);
        for (size_t k = 0; k < n_; ++k)
          expect += TensorSquare::outer(at(i, k), at(k, j));
        if (h.delta(u_ij) != expect)
          reasons.push_back("comultiplication fails at (" +
                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        Cyclo eps = h.epsilon(u_ij);
        if (eps != (i == j ? Cyclo::one() : Cyclo::zero()))
          reasons.push_back("counit fails at (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ")");
        if (h.antipode(u_ij) != at(j, i))
          reasons.push_back("antipode fails at (" + std::to_string(i + 1) +
                            "," + std::to_string(j + 1) + ")");
      }
    return {reasons.empty(), std::move(reasons)};
  }

  // Span-growth test: dimension of the unital subalgebra generated by the
  // entries. Requires a finite-dimensional algebra.
  std::pair<bool, size_t> generates() const {
    auto dim = alg_->dim();
    if (!dim) throw domain_error("generation test needs finite dimension");
    std::vector<AlgebraElement> gens;
    for (const auto& e : e_)
      if (!e.is_zero()) gens.push_back(e);
    SpanSolver span;
    std::vector<AlgebraElement> pivots;
    auto try_insert = [&](const AlgebraElement& x) {
      SpanSolver::Vec v;
      for (const auto& [idx, c] : x.terms()) v.emplace(idx, c);
      if (span.insert(std::move(v))) pivots.push_back(x);
    };
    try_insert(AlgebraElement::unit(alg_));
    for (const auto& g : gens) try_insert(g);
    for (size_t i = 0; i < pivots.size() && span.dimension() < *dim; ++i)
      for (const auto& g : gens) {
        try_insert(pivots[i] * g);
        if (span.dimension() >= *dim) break;
      }
    return {span.dimension() == *dim, span.dimension()};
  }

 private:
  std::shared_ptr<const Algebra> alg_;
  size_t n_;
  std::vector<AlgebraElement> e_;
};

}  // namespace qorbital

#endif  // QORBITAL_MAGIC_HPP
