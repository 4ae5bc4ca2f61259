#ifndef XE_COH_HPP
#define XE_COH_HPP

// Cohomology of O(a xi + b f) and pi^*Omega^1_{P^2}(a xi + b f) on X_e, computed by
// pushing forward to P^2 (pi_* O(a xi) = Sym^a(O + O(e)) for a >= 0) and Serre duality.

#include "xe/chow.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace xe {

// ---------------------------------------------------------------------------
// P^2

/// h^i(P^2, O(d)).
inline Integer h_line_p2(int i, long d) {
  if (i == 0 && d >= 0) return binomial(Integer(d) + 2, 2);
  if (i == 2 && d <= -3) return binomial(Integer(-d) - 1, 2);
  return 0;
}

/// h^i(P^2, Omega^1(k)) by Bott's formula.
inline Integer h_omega_p2(int i, long k) {
  const Integer kk = k;
  switch (i) {
    case 0: return k >= 2 ? Integer(kk * kk - 1) : Integer(0);
    case 1: return k == 0 ? Integer(1) : Integer(0);
    case 2: return k <= -2 ? Integer(kk * kk - 1) : Integer(0);
    default: return 0;
  }
}

// ---------------------------------------------------------------------------
// Summands and formal sheaves

struct Summand {
  enum class Kind { Line, Omega };
  Kind kind = Kind::Line;
  long a = 0;  // xi coefficient
  long b = 0;  // f coefficient

  static Summand line(long a, long b) { return {Kind::Line, a, b}; }
  static Summand omega(long a, long b) { return {Kind::Omega, a, b}; }

  bool is_line() const { return kind == Kind::Line; }
  long rank() const { return is_line() ? 1 : 2; }

  /// Twist by O(da xi + db f).
  Summand twisted(long da, long db) const { return {kind, a + da, b + db}; }

  /// (pi^*Omega)^dual = pi^*Omega(3f).
  Summand dual() const {
    return is_line() ? line(-a, -b) : omega(-a, -b + 3);
  }

  /// Chern data of the summand.
  ChernData chern(long e) const {
    const ChowClass D = ChowClass::divisor(e, a, b);
    if (is_line()) return ChernData::line(D);
    // c(Omega_{P^2}) = 1 - 3h + 3h^2 pulled back, then twisted by D.
    const ChowClass f = ChowClass::f(e);
    const ChernData om(2, -3 * f, 3 * (f * f), ChowClass(e));
    return twist_chern(om, D);
  }

  friend bool operator==(const Summand&, const Summand&) = default;
  friend auto operator<=>(const Summand&, const Summand&) = default;
};

/// Tensor product of two summands; nullopt for Omega (x) Omega, which does not split
/// into the supported summand types.
inline std::optional<Summand> tensor(const Summand& s, const Summand& t) {
  if (!s.is_line() && !t.is_line()) return std::nullopt;
  const auto kind = s.is_line() ? t.kind : s.kind;
  return Summand{kind, s.a + t.a, s.b + t.b};
}

struct Term {
  Summand summand;
  Integer mult;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Finite direct sum of Line / Omega twists with positive multiplicities.
class FormalSheaf {
public:
  FormalSheaf() = default;
  explicit FormalSheaf(long e) : e_(e) {
    if (e < 0) throw std::invalid_argument("scroll parameter e must be non-negative");
  }
  FormalSheaf(long e, std::initializer_list<Term> terms) : FormalSheaf(e) {
    for (const auto& t : terms) add(t.summand, t.mult);
  }

  static FormalSheaf of(long e, Summand s, Integer mult = 1) {
    FormalSheaf r(e);
    r.add(s, std::move(mult));
    return r;
  }

  /// Adds mult copies of s; zero multiplicities are dropped, equal summands merged.
  FormalSheaf& add(const Summand& s, const Integer& mult) {
    if (mult < 0) throw std::invalid_argument("FormalSheaf: negative multiplicity");
    if (mult == 0) return *this;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                               [](const Term& t, const Summand& x) { return t.summand < x; });
    if (it != terms_.end() && it->summand == s)
      it->mult += mult;
    else
      terms_.insert(it, Term{s, mult});
    return *this;
  }

  FormalSheaf& operator+=(const FormalSheaf& o) {
    if (o.e_ != e_) throw ParameterMismatch("FormalSheaf: mixed e");
    for (const auto& t : o.terms_) add(t.summand, t.mult);
    return *this;
  }
  friend FormalSheaf operator+(FormalSheaf a, const FormalSheaf& b) { return a += b; }

  long e() const { return e_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  Integer multiplicity(const Summand& s) const {
    for (const auto& t : terms_)
      if (t.summand == s) return t.mult;
    return 0;
  }

  Integer rank() const {
    Integer r = 0;
    for (const auto& t : terms_) r += t.mult * t.summand.rank();
    return r;
  }

  /// Total Chern class (product over summands).
  ChowClass total_chern() const {
    ChowClass c = ChowClass::unit(e_);
    for (const auto& t : terms_) {
      const ChowClass ct = t.summand.chern(e_).total();
      // Multiplicities can be large; square-and-multiply keeps this cheap.
      ChowClass base = ct, acc = ChowClass::unit(e_);
      Integer n = t.mult;
      // Powers beyond 3 of (1 + nilpotent) still matter, so no truncation of n.
      while (n > 0) {
        if ((n & 1) != 0) acc *= base;
        base *= base;
        n >>= 1;
      }
      c *= acc;
    }
    return c;
  }

  ChernData chern() const {
    const Integer r = rank();
    return ChernData::from_total(static_cast<long>(r), total_chern());
  }

  /// F (x) s, nullopt when an Omega (x) Omega product appears.
  std::optional<FormalSheaf> tensor(const Summand& s) const {
    FormalSheaf r(e_);
    for (const auto& t : terms_) {
      auto p = xe::tensor(t.summand, s);
      if (!p) return std::nullopt;
      r.add(*p, t.mult);
    }
    return r;
  }

  FormalSheaf twisted(long da, long db) const {
    FormalSheaf r(e_);
    for (const auto& t : terms_) r.add(t.summand.twisted(da, db), t.mult);
    return r;
  }

  friend bool operator==(const FormalSheaf&, const FormalSheaf&) = default;

private:
  long e_ = 0;
  std::vector<Term> terms_;  // sorted by summand
};

// ---------------------------------------------------------------------------
// Cohomology on X_e

struct CohVector {
  std::array<Integer, 4> h{};

  const Integer& operator[](int i) const { return h.at(static_cast<std::size_t>(i)); }
  Integer& operator[](int i) { return h.at(static_cast<std::size_t>(i)); }
  Integer chi() const { return h[0] - h[1] + h[2] - h[3]; }
  bool vanishes_above(int i) const {
    for (int k = i + 1; k < 4; ++k)
      if (h[static_cast<std::size_t>(k)] != 0) return false;
    return true;
  }
  CohVector& operator+=(const CohVector& o) {
    for (std::size_t i = 0; i < 4; ++i) h[i] += o.h[i];
    return *this;
  }
  friend CohVector operator*(const Integer& m, CohVector v) {
    for (auto& x : v.h) x *= m;
    return v;
  }
  friend bool operator==(const CohVector&, const CohVector&) = default;
};

/// h^i(X_e, O(a xi + b f)).
inline Integer h_line(long e, int i, long a, long b) {
  if (i < 0 || i > 3) return 0;
  Integer s = 0;
  if (a >= 0) {
    if (i == 3) return 0;
    for (long j = 0; j <= a; ++j) s += h_line_p2(i, j * e + b);
  } else if (a <= -2) {
    if (i == 0) return 0;
    for (long j = 0; j <= -a - 2; ++j) s += h_line_p2(3 - i, j * e + e - b - 3);
  }
  return s;
}

/// h^i(X_e, pi^*Omega^1(a xi + b f)).
inline Integer h_omega_twist(long e, int i, long a, long b) {
  if (i < 0 || i > 3) return 0;
  if (a >= 0) {
    if (i == 3) return 0;
    Integer s = 0;
    for (long j = 0; j <= a; ++j) s += h_omega_p2(i, j * e + b);
    return s;
  }
  if (a == -1) return 0;
  // Serre duality with omega_X = O(-2 xi + (e-3) f) and Omega^dual = Omega(3f).
  return h_omega_twist(e, 3 - i, -2 - a, e - b);
}

inline Integer h_summand(long e, int i, const Summand& s) {
  return s.is_line() ? h_line(e, i, s.a, s.b) : h_omega_twist(e, i, s.a, s.b);
}

inline CohVector coh_summand(long e, const Summand& s) {
  CohVector v;
  for (int i = 0; i < 4; ++i) v[i] = h_summand(e, i, s);
  return v;
}

inline Integer h_formal(const FormalSheaf& F, int i) {
  Integer s = 0;
  for (const auto& t : F.terms()) s += t.mult * h_summand(F.e(), i, t.summand);
  return s;
}

inline CohVector coh_formal(const FormalSheaf& F) {
  CohVector v;
  for (int i = 0; i < 4; ++i) v[i] = h_formal(F, i);
  return v;
}

inline Integer chi_formal(const FormalSheaf& F) { return coh_formal(F).chi(); }

inline Integer chi_line(long e, long a, long b) {
  return h_line(e, 0, a, b) - h_line(e, 1, a, b) + h_line(e, 2, a, b) - h_line(e, 3, a, b);
}

struct DualTwist {
  int i;
  long a, b;
  friend bool operator==(const DualTwist&, const DualTwist&) = default;
};

/// Serre duality for an instanton twist E(a xi + b f) (uses E^dual = E(-(e-1)f)):
///   h^i(E(a xi + b f)) = h^{3-i}(E((-a-2) xi + (-b-2) f)).
inline DualTwist serre_dual_twist(long /*e*/, int i, long a, long b) {
  return {3 - i, -a - 2, -b - 2};
}

// ---------------------------------------------------------------------------
// Standard exact sequences, twisted by O(a xi + b f). Each entry is one term of
// 0 -> F_0 -> F_1 -> ... -> F_n -> 0.

namespace seq {

inline std::vector<FormalSheaf> om(long e, long a, long b) {  // 0 -> Omega -> O(-f)^3 -> O -> 0
  return {FormalSheaf::of(e, Summand::omega(a, b)), FormalSheaf::of(e, Summand::line(a, b - 1), 3),
          FormalSheaf::of(e, Summand::line(a, b))};
}
inline std::vector<FormalSheaf> omd(long e, long a, long b) {  // 0 -> O(-3f) -> O(-2f)^3 -> Omega -> 0
  return {FormalSheaf::of(e, Summand::line(a, b - 3)),
          FormalSheaf::of(e, Summand::line(a, b - 2), 3), FormalSheaf::of(e, Summand::omega(a, b))};
}
inline std::vector<FormalSheaf> omt(long e, long a, long b) {
  return {FormalSheaf::of(e, Summand::line(a, b - 3)),
          FormalSheaf::of(e, Summand::line(a, b - 2), 3),
          FormalSheaf::of(e, Summand::line(a, b - 1), 3), FormalSheaf::of(e, Summand::line(a, b))};
}
inline std::vector<FormalSheaf> rel(long e, long a, long b) {
  // relative Euler sequence: 0 -> O(-2xi+ef) -> O(-xi) + O(-xi+ef) -> O -> 0
  FormalSheaf mid(e);
  mid.add(Summand::line(a - 1, b), 1).add(Summand::line(a - 1, b + e), 1);
  return {FormalSheaf::of(e, Summand::line(a - 2, b + e)), mid,
          FormalSheaf::of(e, Summand::line(a, b))};
}

}  // namespace seq

/// Alternating sum of Euler characteristics along an exact sequence (zero when exact).
inline Integer sequence_chi_defect(const std::vector<FormalSheaf>& s) {
  Integer d = 0;
  for (std::size_t k = 0; k < s.size(); ++k) d += (k % 2 == 0 ? 1 : -1) * chi_formal(s[k]);
  return d;
}

// ---------------------------------------------------------------------------
// Long-exact-sequence chase

/// Closed interval [lo, hi] for a dimension; hi == nullopt means unbounded.
struct DimRange {
  Integer lo = 0;
  std::optional<Integer> hi;

  static DimRange exact(Integer v) { return {v, v}; }
  static DimRange unknown() { return {0, std::nullopt}; }
  static DimRange at_most(Integer v) { return {0, std::move(v)}; }

  bool is_zero() const { return hi && *hi == 0; }
  bool is_exact() const { return hi && *hi == lo; }

  friend DimRange operator+(const DimRange& x, const DimRange& y) {
    DimRange r{x.lo + y.lo, std::nullopt};
    if (x.hi && y.hi) r.hi = *x.hi + *y.hi;
    return r;
  }
  friend DimRange operator*(const Integer& m, const DimRange& x) {
    DimRange r{m * x.lo, std::nullopt};
    if (x.hi) r.hi = m * *x.hi;
    return r;
  }
  friend bool operator==(const DimRange&, const DimRange&) = default;
};

/// Per-degree ranges for h^0..h^3.
struct CohBounds {
  std::array<DimRange, 4> h{DimRange::unknown(), DimRange::unknown(), DimRange::unknown(),
                            DimRange::unknown()};

  static CohBounds exact(const CohVector& v) {
    CohBounds b;
    for (int i = 0; i < 4; ++i) b.h[static_cast<std::size_t>(i)] = DimRange::exact(v[i]);
    return b;
  }
  static CohBounds unknown() { return {}; }

  /// Marks h^i as known to vanish.
  CohBounds& zero(int i) {
    h.at(static_cast<std::size_t>(i)) = DimRange::exact(0);
    return *this;
  }

  /// Range for degree i; degrees outside 0..3 vanish.
  DimRange at(int i) const {
    if (i < 0 || i > 3) return DimRange::exact(0);
    return h[static_cast<std::size_t>(i)];
  }

  friend CohBounds operator+(const CohBounds& x, const CohBounds& y) {
    CohBounds r;
    for (std::size_t i = 0; i < 4; ++i) r.h[i] = x.h[i] + y.h[i];
    return r;
  }
  friend CohBounds operator*(const Integer& m, const CohBounds& b) {
    CohBounds r;
    for (std::size_t i = 0; i < 4; ++i) r.h[i] = m * b.h[i];
    return r;
  }
};

/// One position in an exact sequence: either known bounds or the single unknown entry.
struct ChaseTerm {
  std::optional<CohBounds> bounds;  // nullopt = not computable
  std::string label;

  static ChaseTerm known(const FormalSheaf& F, std::string label = {}) {
    return {CohBounds::exact(coh_formal(F)), std::move(label)};
  }
  static ChaseTerm known(CohBounds b, std::string label = {}) {
    return {std::move(b), std::move(label)};
  }
  static ChaseTerm unknown(std::string label = {}) { return {std::nullopt, std::move(label)}; }
};

struct ChaseResult {
  enum class Kind { Zero, UpperBound, Exact, Unbounded };
  Kind kind = Kind::Unbounded;
  Integer value = 0;

  static ChaseResult from(const DimRange& r) {
    if (r.is_zero()) return {Kind::Zero, 0};
    if (r.is_exact()) return {Kind::Exact, r.lo};
    if (r.hi) return {Kind::UpperBound, *r.hi};
    return {Kind::Unbounded, 0};
  }
  friend bool operator==(const ChaseResult&, const ChaseResult&) = default;
};

namespace detail {

inline Integer sat_sub(const Integer& x, const std::optional<Integer>& y) {
  if (!y) return 0;
  return x > *y ? Integer(x - *y) : Integer(0);
}

/// dim coker(X -> Y) when only the dimensions are known.
inline DimRange coker_range(const DimRange& X, const DimRange& Y) { return {sat_sub(Y.lo, X.hi), Y.hi}; }
/// dim ker(X -> Y).
inline DimRange ker_range(const DimRange& X, const DimRange& Y) { return {sat_sub(X.lo, Y.hi), X.hi}; }

/// Bounds on the unknown position of 0 -> A -> B -> C -> 0. Connecting-map ranks are
/// never guessed: every value comes from dimension counting in the long exact sequence.
inline CohBounds chase_short(const CohBounds* A, const CohBounds* B, const CohBounds* C) {
  CohBounds out;
  for (int i = 0; i < 4; ++i) {
    DimRange r;
    if (!A) {
      // H^{i-1}(B) -> H^{i-1}(C) -> H^i(A) -> H^i(B) -> H^i(C)
      r = coker_range(B->at(i - 1), C->at(i - 1)) + ker_range(B->at(i), C->at(i));
    } else if (!B) {
      // H^{i-1}(C) -> H^i(A) -> H^i(B) -> H^i(C) -> H^{i+1}(A)
      r = coker_range(C->at(i - 1), A->at(i)) + ker_range(C->at(i), A->at(i + 1));
    } else {
      // H^i(A) -> H^i(B) -> H^i(C) -> H^{i+1}(A) -> H^{i+1}(B)
      DimRange ck = coker_range(A->at(i), B->at(i));
      if (i == 0) {
        // H^0(A) -> H^0(B) is injective.
        const DimRange a0 = A->at(0), b0 = B->at(0);
        ck = DimRange{sat_sub(b0.lo, a0.hi), b0.hi ? std::optional<Integer>(*b0.hi - a0.lo) : std::nullopt};
      }
      r = ck + ker_range(A->at(i + 1), B->at(i + 1));
    }
    out.h[static_cast<std::size_t>(i)] = r;
  }
  return out;
}

}  // namespace detail

/// Cohomology bounds for the entry at `target` of an exact sequence
/// 0 -> F_0 -> ... -> F_n -> 0. The sequence is split into short exact pieces through
/// the images of the maps; every other entry must carry bounds.
inline CohBounds les_chase_bounds(const std::vector<ChaseTerm>& s, std::size_t target) {
  if (s.size() < 2) throw std::invalid_argument("les_chase: sequence needs at least two terms");
  if (target >= s.size()) throw std::out_of_range("les_chase: target position out of range");
  for (std::size_t k = 0; k < s.size(); ++k)
    if (k != target && !s[k].bounds)
      throw UnsupportedError("les_chase: more than one non-computable entry");

  const std::size_t n = s.size() - 1;
  // Image of F_{k} in F_{k+1}, computed left to right: L_0 = F_0, 0 -> L_{k-1} -> F_k -> L_k -> 0.
  std::optional<CohBounds> left;
  for (std::size_t k = 0; k < target; ++k) {
    if (k == 0)
      left = *s[0].bounds;
    else
      left = detail::chase_short(&*left, &*s[k].bounds, nullptr);
  }
  // Kernel of F_k -> F_{k+1}, right to left: R_n = F_n, 0 -> R_k -> F_k -> R_{k+1} -> 0.
  std::optional<CohBounds> right;
  for (std::size_t k = n; k > target; --k) {
    if (k == n)
      right = *s[n].bounds;
    else
      right = detail::chase_short(nullptr, &*s[k].bounds, &*right);
  }
  const CohBounds zero = CohBounds::exact(CohVector{});
  const CohBounds& A = left ? *left : zero;
  const CohBounds& C = right ? *right : zero;
  return detail::chase_short(&A, nullptr, &C);
}

inline ChaseResult les_chase(const std::vector<ChaseTerm>& s, std::size_t target, int i) {
  return ChaseResult::from(les_chase_bounds(s, target).at(i));
}

/// Wraps an all-known sequence of formal sheaves, replacing position `target` by the
/// unknown entry (used to cross-check the chase against closed forms).
inline std::vector<ChaseTerm> chase_terms(const std::vector<FormalSheaf>& s,
                                          std::optional<std::size_t> unknown = std::nullopt) {
  std::vector<ChaseTerm> out;
  for (std::size_t k = 0; k < s.size(); ++k)
    out.push_back(unknown && *unknown == k ? ChaseTerm::unknown() : ChaseTerm::known(s[k]));
  return out;
}

}  // namespace xe

#endif  // XE_COH_HPP
