#ifndef XE_CHOW_HPP
#define XE_CHOW_HPP

// Intersection ring of X_e = P(O + O(e)) over P^2:
//   A(X_e) = Z[xi, f] / (f^3, xi^2 - e xi f)
// stored in the normal-form basis {1; xi, f; xi f, f^2; xi f^2}.

#include "xe/integer.hpp"

#include <array>
#include <initializer_list>
#include <string>

namespace xe {

class ChowClass {
public:
  enum Basis : int { One = 0, Xi = 1, F = 2, XiF = 3, FF = 4, Pt = 5 };
  static constexpr int kBasisSize = 6;

  ChowClass() = default;
  explicit ChowClass(long e) : e_(e) { check_e(e); }
  ChowClass(long e, std::initializer_list<Integer> coeffs) : e_(e) {
    check_e(e);
    int i = 0;
    for (const auto& c : coeffs) {
      if (i >= kBasisSize) throw std::invalid_argument("ChowClass: too many coefficients");
      c_[i++] = c;
    }
  }

  static ChowClass unit(long e) { return basis(e, One); }
  static ChowClass xi(long e) { return basis(e, Xi); }
  static ChowClass f(long e) { return basis(e, F); }
  static ChowClass point(long e) { return basis(e, Pt); }
  static ChowClass basis(long e, Basis b) {
    ChowClass r(e);
    r.c_[b] = 1;
    return r;
  }
  /// The divisor class a*xi + b*f.
  static ChowClass divisor(long e, const Integer& a, const Integer& b) {
    ChowClass r(e);
    r.c_[Xi] = a;
    r.c_[F] = b;
    return r;
  }

  long e() const { return e_; }
  const Integer& operator[](Basis b) const { return c_[b]; }
  Integer& operator[](Basis b) { return c_[b]; }
  const std::array<Integer, kBasisSize>& coeffs() const { return c_; }

  static constexpr int codim_of(Basis b) {
    constexpr int table[kBasisSize] = {0, 1, 1, 2, 2, 3};
    return table[b];
  }

  /// Component of codimension k (all other coefficients zeroed).
  ChowClass part(int k) const {
    ChowClass r(e_);
    for (int i = 0; i < kBasisSize; ++i)
      if (codim_of(Basis(i)) == k) r.c_[i] = c_[i];
    return r;
  }

  bool is_zero() const {
    for (const auto& c : c_)
      if (c != 0) return false;
    return true;
  }

  /// True when every non-zero coefficient sits in codimension k.
  bool is_homogeneous(int k) const {
    for (int i = 0; i < kBasisSize; ++i)
      if (c_[i] != 0 && codim_of(Basis(i)) != k) return false;
    return true;
  }

  ChowClass& operator+=(const ChowClass& o) {
    same_e(o);
    for (int i = 0; i < kBasisSize; ++i) c_[i] += o.c_[i];
    return *this;
  }
  ChowClass& operator-=(const ChowClass& o) {
    same_e(o);
    for (int i = 0; i < kBasisSize; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  ChowClass& operator*=(const Integer& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }
  ChowClass& operator*=(const ChowClass& o);

  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator-(ChowClass a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend ChowClass operator*(ChowClass a, const Integer& s) { return a *= s; }
  friend ChowClass operator*(const Integer& s, ChowClass a) { return a *= s; }
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend bool operator==(const ChowClass& a, const ChowClass& b) {
    return a.e_ == b.e_ && a.c_ == b.c_;
  }
  friend bool operator!=(const ChowClass& a, const ChowClass& b) { return !(a == b); }

  ChowClass pow(unsigned n) const {
    ChowClass r = unit(e_);
    for (unsigned i = 0; i < n; ++i) r *= *this;
    return r;
  }

private:
  static void check_e(long e) {
    if (e < 0) throw std::invalid_argument("scroll parameter e must be non-negative");
  }
  void same_e(const ChowClass& o) const {
    if (o.e_ != e_)
      throw ParameterMismatch("Chow classes on X_" + std::to_string(e_) + " and X_" +
                              std::to_string(o.e_));
  }

  long e_ = 0;
  std::array<Integer, kBasisSize> c_{};
};

inline ChowClass operator*(const ChowClass& x, const ChowClass& y) {
  x.same_e(y);
  using B = ChowClass::Basis;
  const Integer e = x.e_;
  const auto& a = x.c_;
  const auto& b = y.c_;
  ChowClass r(x.e_);
  // Basis element k is xi^P[k] f^Q[k].
  // xi^2 f^q = e xi f^(q+1), f^3 = 0.
  static constexpr int P[6] = {0, 1, 0, 1, 0, 1};
  static constexpr int Q[6] = {0, 0, 1, 1, 2, 2};
  static constexpr int idx[2][3] = {{B::One, B::F, B::FF}, {B::Xi, B::XiF, B::Pt}};
  for (int i = 0; i < 6; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < 6; ++j) {
      if (b[j].is_zero()) continue;
      const int p = P[i] + P[j], q = Q[i] + Q[j];
      if (p < 2) {
        if (q <= 2) r.c_[idx[p][q]] += a[i] * b[j];
      } else if (q + 1 <= 2) {
        r.c_[idx[1][q + 1]] += e * a[i] * b[j];
      }
    }
  }
  return r;
}

inline ChowClass& ChowClass::operator*=(const ChowClass& o) { return *this = *this * o; }

inline ChowClass mul(const ChowClass& x, const ChowClass& y) { return x * y; }

/// Degree of the codimension-3 part (xi f^2 is the class of a point).
inline Integer degree(const ChowClass& x) { return x[ChowClass::Pt]; }

/// Named classes.
inline ChowClass polarization(long e) { return ChowClass::xi(e) + ChowClass::f(e); }
inline ChowClass canonical_class(long e) { return ChowClass::divisor(e, -2, e - 3); }
inline ChowClass c2_cotangent(long e) { return ChowClass(e, {0, 0, 0, 6, 3 - 3 * e, 0}); }
inline ChowClass exceptional_divisor(long e) { return ChowClass::divisor(e, 1, -e); }

// ---------------------------------------------------------------------------
// Chern data

struct ChernData {
  long rank = 0;
  ChowClass c1, c2, c3;

  ChernData() = default;
  ChernData(long r, ChowClass a, ChowClass b, ChowClass c)
      : rank(r), c1(std::move(a)), c2(std::move(b)), c3(std::move(c)) {
    validate();
  }

  long e() const { return c1.e(); }

  void validate() const {
    if (rank < 0) throw std::invalid_argument("ChernData: negative rank");
    if (c1.e() != c2.e() || c1.e() != c3.e()) throw ParameterMismatch("ChernData: mixed e");
    if (!c1.is_homogeneous(1) || !c2.is_homogeneous(2) || !c3.is_homogeneous(3))
      throw std::invalid_argument("ChernData: c_i must be homogeneous of codimension i");
  }

  /// 1 + c1 + c2 + c3.
  ChowClass total() const { return ChowClass::unit(e()) + c1 + c2 + c3; }

  static ChernData from_total(long rank, const ChowClass& c) {
    return ChernData(rank, c.part(1), c.part(2), c.part(3));
  }

  static ChernData trivial(long e, long rank) {
    return ChernData(rank, ChowClass(e), ChowClass(e), ChowClass(e));
  }

  static ChernData line(const ChowClass& D) {
    return ChernData(1, D.part(1), ChowClass(D.e()), ChowClass(D.e()));
  }

  friend bool operator==(const ChernData& a, const ChernData& b) {
    return a.rank == b.rank && a.c1 == b.c1 && a.c2 == b.c2 && a.c3 == b.c3;
  }
};

/// Inverse of a total Chern class 1 + x with x of positive codimension.
inline ChowClass total_inverse(const ChowClass& c) {
  if (c[ChowClass::One] != 1)
    throw std::invalid_argument("total_inverse: constant term must be 1");
  const ChowClass x = c - ChowClass::unit(c.e());
  const ChowClass x2 = x * x;
  return ChowClass::unit(c.e()) - x + x2 - x2 * x;
}

/// Chern data of F(D) for a divisor D:  c_k(F(D)) = sum_i C(r-i, k-i) c_i(F) D^{k-i}.
inline ChernData twist_chern(const ChernData& d, const ChowClass& D) {
  if (!D.is_homogeneous(1)) throw std::invalid_argument("twist_chern: D must be a divisor class");
  const long r = d.rank;
  // C(n, k) for small n; zero when n < k.
  const auto C = [](long n, long k) -> long {
    if (n < k) return 0;
    long v = 1;
    for (long i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
  };
  // Terms with a zero binomial are skipped (c3 for rank 2 needs neither c2 D nor D^3).
  const auto add = [](ChowClass& acc, long k, const ChowClass& x) {
    if (k != 0) acc += k == 1 ? x : Integer(k) * x;
  };
  const ChowClass D2 = D * D;
  ChowClass c1 = d.c1, c2 = d.c2, c3 = d.c3;
  add(c1, C(r, 1), D);
  add(c2, C(r - 1, 1), d.c1 * D);
  add(c2, C(r, 2), D2);
  if (C(r - 2, 1) != 0) add(c3, C(r - 2, 1), d.c2 * D);
  add(c3, C(r - 1, 2), d.c1 * D2);
  if (C(r, 3) != 0) add(c3, C(r, 3), D2 * D);
  return ChernData(d.rank, c1, c2, c3);
}

/// Chern data of End(E) = E (x) E^dual for a rank-2 bundle E.
inline ChernData endomorphism_chern(const ChernData& d) {
  if (d.rank != 2) throw std::invalid_argument("endomorphism_chern: rank 2 only");
  const long e = d.e();
  return ChernData(4, ChowClass(e), 4 * d.c2 - d.c1 * d.c1, ChowClass(e));
}

/// Hirzebruch-Riemann-Roch on X_e:
///   chi = r + (c1^3 - 3 c1 c2 + 3 c3)/6 - (K c1^2 - 2 K c2)/4 + (K^2 c1 + c2(Omega) c1)/12.
/// The rank-2 form is the r = 2 case; the value must be integral.
inline Integer chi_rr(const ChernData& d) {
  using B = ChowClass::Basis;
  const Integer e = d.e();
  // Intersection numbers of homogeneous pieces: divisors (x, y) = x xi + y f,
  // curves (p, q) = p xi f + q f^2.
  const Integer a = d.c1[B::Xi], b = d.c1[B::F];
  const Integer p = d.c2[B::XiF], q = d.c2[B::FF];
  const Integer c1sq_p = e * a * a + 2 * a * b, c1sq_q = b * b;
  const auto dc = [&](const Integer& x, const Integer& y, const Integer& P, const Integer& Q) {
    return x * (e * P + Q) + y * P;
  };
  const Integer Ka = -2, Kb = e - 3;
  const Integer KK_p = e * Ka * Ka + 2 * Ka * Kb, KK_q = Kb * Kb;
  const Integer c2om_p = 6, c2om_q = 3 - 3 * e;
  const Integer c1cube = dc(a, b, c1sq_p, c1sq_q);
  const Integer c1c2 = dc(a, b, p, q);
  const Integer twelve_chi = 12 * Integer(d.rank) + 2 * (c1cube - 3 * c1c2 + 3 * d.c3[B::Pt]) -
                             3 * (dc(Ka, Kb, c1sq_p, c1sq_q) - 2 * dc(Ka, Kb, p, q)) +
                             dc(a, b, KK_p, KK_q) + dc(a, b, c2om_p, c2om_q);
  return exact_div(twelve_chi, 12, "chi_rr: non-integral Euler characteristic");
}

/// chi(E(a xi + b f)) for an instanton with c2 = alpha xi f + beta f^2 (closed cubic form).
inline Integer chi_instanton(long e_, long alpha_, long beta_, long a_, long b_) {
  const Integer e = e_, al = alpha_, be = beta_, a = a_, b = b_;
  // Six times the displayed polynomial, to stay in integers.
  const Integer six_chi = 2 * e * e * a * a * a + 6 * e * a * a * b + 6 * a * b * b +
                          6 * (e * e + e) * a * a + 6 * b * b + 6 * (2 * e + 2) * a * b +
                          (7 * e * e + 9 * e - 6 * e * al - 6 * be + 6) * a +
                          6 * (e - al + 2) * b +
                          (3 * e * e + 3 * e - 6 * e * al - 6 * al - 6 * be + 6);
  return exact_div(six_chi, 6, "chi_instanton: non-integral value");
}

/// Chern data of an instanton twisted by a xi + b f (c3 = 0).
inline ChernData instanton_chern(long e, long alpha, long beta) {
  return ChernData(2, ChowClass::divisor(e, 0, e - 1), ChowClass(e, {0, 0, 0, alpha, beta, 0}),
                   ChowClass(e));
}

/// H-slope of an instanton: c1 H^2 / 2 = (e^2 + e - 2)/2.
inline Rational slope_mu_H(long e) { return Rational(Integer(e) * e + e - 2, 2); }

/// H-degree of a xi + b f: a e^2 + (2a + b) e + a + 2b.
inline Integer delta_H(long e_, long a_, long b_) {
  const Integer e = e_, a = a_, b = b_;
  return a * e * e + (2 * a + b) * e + a + 2 * b;
}

}  // namespace xe

#endif  // XE_CHOW_HPP
