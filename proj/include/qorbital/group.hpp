#ifndef QORBITAL_GROUP_HPP
#define QORBITAL_GROUP_HPP

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "qorbital/cyclotomic.hpp"

namespace qorbital {

// ---------------------------------------------------------------------------
// Permutations on {0..d-1}, printed in 1-based cycle notation.

using Perm = std::vector<int>;

inline Perm perm_identity(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

// (a*b)(x) = a(b(x)) — compose right-to-left like function application.
inline Perm perm_compose(const Perm& a, const Perm& b) {
  Perm p(a.size());
  for (size_t i = 0; i < a.size(); ++i) p[i] = a[b[i]];
  return p;
}

inline Perm perm_inverse(const Perm& a) {
  Perm p(a.size());
  for (size_t i = 0; i < a.size(); ++i) p[a[i]] = static_cast<int>(i);
  return p;
}

// Compact "(12)(34)" style for degree <= 9, comma-separated beyond that.
inline std::string perm_to_cycles(const Perm& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.size(), false);
  bool any = false;
  bool commas = p.size() > 9;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    os << "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first && commas) os << ",";
      os << j + 1;
      first = false;
      j = static_cast<size_t>(p[j]);
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "e";
}

// Parses "(12)(34)", "(1,2,10)", or "e". Points are 1-based.
inline Perm perm_from_cycles(const std::string& s, int degree) {
  Perm p = perm_identity(degree);
  if (s == "e" || s == "()" || s.empty()) return p;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(')
      throw usage_error("bad cycle notation at position " +
                        std::to_string(i) + " in '" + s + "'");
    ++i;
    std::vector<int> cycle;
    int cur = 0;
    bool have = false;
    bool with_commas = s.find(',', i) != std::string::npos &&
                       s.find(',', i) < s.find(')', i);
    while (i < s.size() && s[i] != ')') {
      char c = s[i];
      if (c >= '0' && c <= '9') {
        if (with_commas) {
          cur = cur * 10 + (c - '0');
          have = true;
        } else {
          cycle.push_back(c - '0');
        }
      } else if (c == ',') {
        if (!have) throw usage_error("bad cycle notation: " + s);
        cycle.push_back(cur);
        cur = 0;
        have = false;
      } else {
        throw usage_error("bad cycle notation: " + s);
      }
      ++i;
    }
    if (i == s.size()) throw usage_error("unterminated cycle in: " + s);
    if (have) cycle.push_back(cur);
    ++i;  // skip ')'
    for (int v : cycle)
      if (v < 1 || v > degree)
        throw usage_error("cycle point out of range in: " + s);
    for (size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k] - 1;
      int to = cycle[(k + 1) % cycle.size()] - 1;
      p[from] = to;
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Quaternions with exact cyclotomic coordinates, used for Q_8 and the binary
// icosahedral group 2I (coordinates in Q(sqrt5), embedded in Q(zeta_5)).

struct Quaternion {
  std::array<Cyclo, 4> c;  // 1, i, j, k components

  static Quaternion from_rationals(const Rational& a, const Rational& b,
                                   const Rational& cc, const Rational& d) {
    return Quaternion{{Cyclo(a), Cyclo(b), Cyclo(cc), Cyclo(d)}};
  }

  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    const Cyclo &a = x.c[0], &b = x.c[1], &cq = x.c[2], &d = x.c[3];
    const Cyclo &e = y.c[0], &f = y.c[1], &g = y.c[2], &h = y.c[3];
    return Quaternion{{a * e - b * f - cq * g - d * h,
                       a * f + b * e + cq * h - d * g,
                       a * g - b * h + cq * e + d * f,
                       a * h + b * g - cq * f + d * e}};
  }

  Quaternion conjugate() const { return Quaternion{{c[0], -c[1], -c[2], -c[3]}}; }

  Cyclo norm() const {
    return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3];
  }

  friend bool operator==(const Quaternion& x, const Quaternion& y) {
    return x.c[0] == y.c[0] && x.c[1] == y.c[1] && x.c[2] == y.c[2] &&
           x.c[3] == y.c[3];
  }

  std::string key() const {
    return c[0].str() + "|" + c[1].str() + "|" + c[2].str() + "|" + c[3].str();
  }

  std::string str() const {
    static const char* names[4] = {"", "i", "j", "k"};
    std::ostringstream os;
    bool first = true;
    for (int t = 0; t < 4; ++t) {
      if (c[t].is_zero()) continue;
      if (!first) os << "+";
      os << "(" << c[t].str() << ")" << names[t];
      first = false;
    }
    return first ? "0" : os.str();
  }
};

// ---------------------------------------------------------------------------
// Groups. Elements are integer indices; index 0 is the identity.

class GroupBase {
 public:
  virtual ~GroupBase() = default;
  virtual int mul(int a, int b) const = 0;
  virtual int inv(int a) const = 0;
  virtual std::optional<size_t> size() const = 0;  // nullopt when infinite
  virtual std::string elem_name(int a) const = 0;
  virtual const std::string& label() const = 0;

  int identity() const { return 0; }

  int pow(int g, long e) const {
    if (e < 0) return pow(inv(g), -e);
    int r = 0;
    int base = g;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  int order_of(int g) const {
    int x = g;
    int n = 1;
    while (x != 0) {
      x = mul(x, g);
      ++n;
      if (n > 1'000'000) throw domain_error("element order exceeds bound");
    }
    return n;
  }
};

// Table-backed finite group. Identity and inverse laws are checked at
// construction; full associativity is a test-time validation.
class FiniteGroup : public GroupBase {
 public:
  FiniteGroup(std::string label, std::vector<int> table, size_t n,
              std::vector<std::string> names)
      : label_(std::move(label)),
        n_(n),
        table_(std::move(table)),
        names_(std::move(names)) {
    if (table_.size() != n_ * n_) throw domain_error("bad group table size");
    inv_.assign(n_, -1);
    for (size_t a = 0; a < n_; ++a) {
      if (mul(0, static_cast<int>(a)) != static_cast<int>(a) ||
          mul(static_cast<int>(a), 0) != static_cast<int>(a))
        throw domain_error("identity law fails in group " + label_);
      for (size_t b = 0; b < n_; ++b)
        if (mul(static_cast<int>(a), static_cast<int>(b)) == 0) inv_[a] = static_cast<int>(b);
      if (inv_[a] < 0) throw domain_error("inverse law fails in group " + label_);
    }
  }

  int mul(int a, int b) const override {
    return table_[static_cast<size_t>(a) * n_ + static_cast<size_t>(b)];
  }
  int inv(int a) const override { return inv_[static_cast<size_t>(a)]; }
  std::optional<size_t> size() const override { return n_; }
  std::string elem_name(int a) const override { return names_[static_cast<size_t>(a)]; }
  const std::string& label() const override { return label_; }

  bool validate_associativity() const {
    for (size_t a = 0; a < n_; ++a)
      for (size_t b = 0; b < n_; ++b)
        for (size_t c = 0; c < n_; ++c)
          if (mul(mul(static_cast<int>(a), static_cast<int>(b)), static_cast<int>(c)) !=
              mul(static_cast<int>(a), mul(static_cast<int>(b), static_cast<int>(c))))
            return false;
    return true;
  }

  // Underlying permutations when built from them (empty otherwise).
  const std::vector<Perm>& perms() const { return perms_; }
  int perm_degree() const { return perm_degree_; }
  const std::vector<Quaternion>& quaternions() const { return quats_; }
  const std::map<std::string, int>& named_generators() const { return named_; }

  int find_named(const std::string& name) const {
    auto it = named_.find(name);
    if (it != named_.end()) return it->second;
    for (size_t i = 0; i < n_; ++i)
      if (names_[i] == name) return static_cast<int>(i);
    throw domain_error("no element named '" + name + "' in " + label_);
  }

  static std::shared_ptr<FiniteGroup> cyclic(unsigned n) {
    if (n == 0) throw domain_error("cyclic group order must be positive");
    std::vector<int> table(static_cast<size_t>(n) * n);
    std::vector<std::string> names(n);
    for (unsigned a = 0; a < n; ++a) {
      names[a] = a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a));
      for (unsigned b = 0; b < n; ++b)
        table[static_cast<size_t>(a) * n + b] = static_cast<int>((a + b) % n);
    }
    auto g = std::make_shared<FiniteGroup>("Z" + std::to_string(n),
                                           std::move(table), n, std::move(names));
    if (n > 1) g->named_["g"] = 1;
    return g;
  }

  static std::shared_ptr<FiniteGroup> from_permutations(
      std::string label, int degree, const std::vector<Perm>& gens,
      size_t max_order = 200000) {
    std::vector<Perm> elems{perm_identity(degree)};
    std::map<Perm, int> index{{elems[0], 0}};
    for (size_t i = 0; i < elems.size(); ++i) {
      for (const Perm& g : gens) {
        Perm h = perm_compose(elems[i], g);
        if (index.emplace(h, static_cast<int>(elems.size())).second) {
          elems.push_back(std::move(h));
          if (elems.size() > max_order)
            throw domain_error("permutation closure exceeds bound");
        }
      }
    }
    size_t n = elems.size();
    std::vector<int> table(n * n);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        table[a * n + b] = index.at(perm_compose(elems[a], elems[b]));
    std::vector<std::string> names(n);
    for (size_t a = 0; a < n; ++a) names[a] = perm_to_cycles(elems[a]);
    auto g = std::make_shared<FiniteGroup>(std::move(label), std::move(table),
                                           n, std::move(names));
    g->perms_ = std::move(elems);
    g->perm_degree_ = degree;
    return g;
  }

  static std::shared_ptr<FiniteGroup> from_quaternions(
      std::string label, const std::vector<std::pair<std::string, Quaternion>>& gens,
      size_t max_order = 1000) {
    Quaternion id = Quaternion::from_rationals(1, 0, 0, 0);
    std::vector<Quaternion> elems{id};
    std::map<std::string, int> index{{id.key(), 0}};
    for (size_t i = 0; i < elems.size(); ++i) {
      for (const auto& [name, g] : gens) {
        Quaternion h = elems[i] * g;
        auto [it, fresh] = index.emplace(h.key(), static_cast<int>(elems.size()));
        if (fresh) {
          elems.push_back(h);
          if (elems.size() > max_order)
            throw domain_error("quaternion closure exceeds bound");
        }
      }
    }
    size_t n = elems.size();
    std::vector<int> table(n * n);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        table[a * n + b] = index.at((elems[a] * elems[b]).key());
    std::vector<std::string> names(n);
    for (size_t a = 0; a < n; ++a) names[a] = elems[a].str();
    auto g = std::make_shared<FiniteGroup>(std::move(label), std::move(table),
                                           n, std::move(names));
    g->quats_ = std::move(elems);
    for (const auto& [name, q] : gens) g->named_[name] = index.at(q.key());
    return g;
  }

  std::map<std::string, int>& mutable_named() { return named_; }

 private:
  std::string label_;
  size_t n_;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
  std::vector<Perm> perms_;
  int perm_degree_ = 0;
  std::vector<Quaternion> quats_;
  std::map<std::string, int> named_;
};

// ---------------------------------------------------------------------------
// Free product Z_{N_1} * ... * Z_{N_k}, elements as reduced alternating words
// [(factor, exponent)] with exponents in 1..N_i-1. Words are interned so that
// elements can be referred to by index like any other group.

class FreeProductGroup : public GroupBase {
 public:
  using Word = std::vector<std::pair<int, int>>;

  explicit FreeProductGroup(std::vector<int> factor_orders)
      : orders_(std::move(factor_orders)) {
    for (int o : orders_)
      if (o < 1) throw domain_error("free product factor order must be >= 1");
    std::ostringstream os;
    for (size_t i = 0; i < orders_.size(); ++i)
      os << (i ? "*" : "") << "Z" << orders_[i];
    label_ = os.str();
    intern(Word{});
  }

  const std::vector<int>& factor_orders() const { return orders_; }

  int generator(int factor) const {
    if (factor < 0 || factor >= static_cast<int>(orders_.size()))
      throw domain_error("free product factor out of range");
    if (orders_[static_cast<size_t>(factor)] == 1) return 0;
    return intern(Word{{factor, 1}});
  }

  int mul(int a, int b) const override {
    Word w = word_of(a);
    for (const auto& [f, e] : word_of(b)) append(w, f, e);
    return intern(std::move(w));
  }

  int inv(int a) const override {
    const Word w = word_of(a);
    Word r;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      r.emplace_back(it->first, orders_[static_cast<size_t>(it->first)] - it->second);
    return intern(std::move(r));
  }

  std::optional<size_t> size() const override {
    int nontrivial = 0;
    for (int o : orders_)
      if (o > 1) ++nontrivial;
    if (nontrivial == 0) return 1;
    if (nontrivial == 1) {
      size_t s = 1;
      for (int o : orders_) s *= static_cast<size_t>(o);
      return s;
    }
    return std::nullopt;
  }

  std::string elem_name(int a) const override {
    const Word w = word_of(a);
    if (w.empty()) return "e";
    std::ostringstream os;
    for (const auto& [f, e] : w) {
      os << static_cast<char>('a' + f);
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

  const std::string& label() const override { return label_; }

  Word word_of(int a) const {
    std::lock_guard<std::mutex> lock(mu_);
    return words_[static_cast<size_t>(a)];
  }

 private:
  void append(Word& w, int f, int e) const {
    int ord = orders_[static_cast<size_t>(f)];
    e = ((e % ord) + ord) % ord;
    if (e == 0) return;
    if (!w.empty() && w.back().first == f) {
      int combined = (w.back().second + e) % ord;
      w.pop_back();
      if (combined != 0) {
        // Re-append; the neighbour below cannot merge further since words
        // were reduced before.
        w.emplace_back(f, combined);
      }
    } else {
      w.emplace_back(f, e);
    }
  }

  int intern(Word w) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_.find(w);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(words_.size());
    index_.emplace(w, id);
    words_.push_back(std::move(w));
    return id;
  }

  std::vector<int> orders_;
  std::string label_;
  mutable std::vector<Word> words_;
  mutable std::map<Word, int> index_;
  mutable std::mutex mu_;
};

// ---------------------------------------------------------------------------
// Abelianisation: quotient by the subgroup generated by all commutators.

struct Abelianization {
  std::shared_ptr<FiniteGroup> quotient;
  std::vector<int> map;  // element index -> coset index
};

inline Abelianization abelianization(const FiniteGroup& g) {
  size_t n = *g.size();
  // Commutator subgroup: closure of all [a,b] = a b a^-1 b^-1.
  std::set<int> sub{0};
  std::vector<int> stack;
  auto add = [&](int x) {
    if (sub.insert(x).second) stack.push_back(x);
  };
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      int ia = static_cast<int>(a), ib = static_cast<int>(b);
      add(g.mul(g.mul(ia, ib), g.mul(g.inv(ia), g.inv(ib))));
    }
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : std::vector<int>(sub.begin(), sub.end())) {
      add(g.mul(x, y));
      add(g.mul(y, x));
    }
  }
  // Cosets of the (normal) commutator subgroup.
  std::vector<int> coset(n, -1);
  std::vector<int> reps;
  for (size_t a = 0; a < n; ++a) {
    if (coset[a] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(a));
    for (int s : sub) coset[static_cast<size_t>(g.mul(static_cast<int>(a), s))] = id;
  }
  size_t q = reps.size();
  std::vector<int> table(q * q);
  for (size_t a = 0; a < q; ++a)
    for (size_t b = 0; b < q; ++b)
      table[a * q + b] = coset[static_cast<size_t>(g.mul(reps[a], reps[b]))];
  // Identity coset must be index 0: reps[coset[0]] scanning order guarantees
  // coset(e) == 0 because element 0 is visited first.
  std::vector<std::string> names(q);
  for (size_t a = 0; a < q; ++a) names[a] = "[" + g.elem_name(reps[a]) + "]";
  auto quo = std::make_shared<FiniteGroup>(g.label() + "_ab", std::move(table),
                                           q, std::move(names));
  return Abelianization{std::move(quo), std::move(coset)};
}

// ---------------------------------------------------------------------------
// Built-in zoo: Z_n, S_3..S_5, A_4, A_5, D_4, Q_8, 2I.

inline std::shared_ptr<FiniteGroup> builtin_group(const std::string& label) {
  auto perm_group = [&](const char* name, int degree,
                        std::vector<std::string> gens) {
    std::vector<Perm> ps;
    for (const auto& s : gens) ps.push_back(perm_from_cycles(s, degree));
    auto g = FiniteGroup::from_permutations(name, degree, ps);
    for (size_t i = 0; i < gens.size(); ++i)
      g->mutable_named()[gens[i]] = g->find_named(gens[i]);
    return g;
  };

  if (label.size() >= 2 && (label[0] == 'Z' || label[0] == 'z') &&
      label.find('_') == std::string::npos) {
    return FiniteGroup::cyclic(static_cast<unsigned>(std::stoul(label.substr(1))));
  }
  if (label.rfind("Z_", 0) == 0)
    return FiniteGroup::cyclic(static_cast<unsigned>(std::stoul(label.substr(2))));
  if (label == "S3" || label == "S_3") return perm_group("S3", 3, {"(12)", "(123)"});
  if (label == "S4" || label == "S_4") return perm_group("S4", 4, {"(12)", "(1234)"});
  if (label == "S5" || label == "S_5") return perm_group("S5", 5, {"(12)", "(12345)"});
  if (label == "A4" || label == "A_4") return perm_group("A4", 4, {"(123)", "(12)(34)"});
  if (label == "A5" || label == "A_5") return perm_group("A5", 5, {"(123)", "(345)"});
  if (label == "D4" || label == "D_4") return perm_group("D4", 4, {"(1234)", "(13)"});
  if (label == "Q8" || label == "Q_8") {
    auto q = [](long a, long b, long c, long d) {
      return Quaternion::from_rationals(a, b, c, d);
    };
    return FiniteGroup::from_quaternions(
        "Q8", {{"i", q(0, 1, 0, 0)}, {"j", q(0, 0, 1, 0)}, {"k", q(0, 0, 0, 1)}});
  }
  if (label == "2I") {
    // s = (1+i+j+k)/2 and t = (phi + phi^{-1} i + j)/2 with phi the golden
    // ratio; coordinates live in Q(sqrt5) inside Q(zeta_5).
    Cyclo half(Rational(1, 2));
    Cyclo phi = -(Cyclo::root_of_unity(5, 2) + Cyclo::root_of_unity(5, 3));
    Cyclo phi_inv = phi - Cyclo::one();  // 1/phi = phi - 1
    Quaternion s{{half, half, half, half}};
    Quaternion t{{half * phi, half * phi_inv, half, Cyclo::zero()}};
    return FiniteGroup::from_quaternions("2I", {{"s", s}, {"t", t}});
  }
  throw domain_error("unknown builtin group label: " + label);
}

}  // namespace qorbital

#endif  // QORBITAL_GROUP_HPP
