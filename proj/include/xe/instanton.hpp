#ifndef XE_INSTANTON_HPP
#define XE_INSTANTON_HPP

#include "xe/coh.hpp"

#include <optional>
#include <string>
#include <vector>

namespace xe {

/// Rank-2 instanton data on X_e: c1 = (e-1) f, c2 = alpha xi f + beta f^2.
struct InstantonParams {
  long e = 0;
  long alpha = 0;
  long beta = 0;

  InstantonParams() = default;
  InstantonParams(long e_, long alpha_, long beta_) : e(e_), alpha(alpha_), beta(beta_) {
    if (e < 0) throw std::invalid_argument("scroll parameter e must be non-negative");
  }

  /// k = (e+1) alpha + beta
  Integer charge() const { return Integer(e + 1) * alpha + beta; }
  ChernData chern() const { return instanton_chern(e, alpha, beta); }

  friend bool operator==(const InstantonParams&, const InstantonParams&) = default;
};

/// E(H) Ulrich  <=>  e^2/2 + e/2 - e alpha - alpha - beta + 1 = 0.
inline bool is_ulrich_twist(const InstantonParams& p) {
  const Integer e = p.e;
  return e * e + e - 2 * e * p.alpha - 2 * Integer(p.alpha) - 2 * Integer(p.beta) + 2 == 0;
}

// ---------------------------------------------------------------------------
// Vanishing lemmas

enum class TwistKind { Bundle, OmegaTensor };

struct Vanishing {
  bool zero = false;
  std::string tag;  // lemma justifying the zero, empty when unknown

  static Vanishing unknown() { return {}; }
  static Vanishing by(std::string t) { return {true, std::move(t)}; }
};

/// h^i(E(a xi + b f)) or h^i(Omega (x) E(a xi + b f)) forced to vanish for every instanton.
/// The second clauses of lem1.iii / lem1.iv are read for Omega (x) E.
inline Vanishing forced_vanishing(long e, TwistKind kind, int i, long a, long b) {
  if (i < 0 || i > 3) return Vanishing::by("range");
  if (kind == TwistKind::Bundle) {
    if (a == -1 && b == -1) return Vanishing::by("sd");  // h^i(E(-H)) = 0 for any i
    if (i == 0 && ((a <= -1 && b <= e) || (a == 0 && b <= 0))) return Vanishing::by("lem1.i");
    if (i == 3 && ((a >= -1 && b >= -(e + 2)) || (a == -2 && b >= -2)))
      return Vanishing::by("lem1.ii");
    if (i == 2 && a >= -1 && b >= -1) return Vanishing::by("lem2.1");
    return Vanishing::unknown();
  }
  if (i == 0 && ((a <= -1 && b <= e + 1) || (a == 0 && b <= 1))) return Vanishing::by("lem1.iii");
  if (i == 3 && ((a >= -1 && b >= -e) || (a == -2 && b >= 0))) return Vanishing::by("lem1.iv");
  if (i == 2 && a >= -1 && b >= 1) return Vanishing::by("lem2.2");
  return Vanishing::unknown();
}

// ---------------------------------------------------------------------------
// Divisors and stability

inline bool divisor_globally_generated(long /*e*/, long a, long b) { return a >= 0 && b >= 0; }

/// Classes containing a smooth integral surface.
inline bool smooth_integral_class(long e, long a, long b) {
  return (a >= 0 && b >= 0) || (a == 1 && b == -e);
}

struct Window {
  long a_min = -10, a_max = 10, b_min = -10, b_max = 10;
};

/// Twists (a, b) in the window with delta_H(a, b) <= -mu_H(E) (strict: <).
inline std::vector<std::pair<long, long>> stability_test_region(long e, const Window& w, bool strict) {
  if (w.a_min > w.a_max || w.b_min > w.b_max) throw std::invalid_argument("empty window");
  const Rational bound = -slope_mu_H(e);
  std::vector<std::pair<long, long>> out;
  for (long a = w.a_min; a <= w.a_max; ++a)
    for (long b = w.b_min; b <= w.b_max; ++b) {
      const Rational d = Rational(delta_H(e, a, b));
      if (strict ? d < bound : d <= bound) out.emplace_back(a, b);
    }
  return out;
}

/// Earnest iff gamma = h^2(E(-(e+1)f)) vanishes.
inline bool earnest_criterion(const Integer& gamma) {
  if (gamma < 0) throw std::invalid_argument("earnest_criterion: negative dimension");
  return gamma == 0;
}

// ---------------------------------------------------------------------------
// Curves

enum class CurveClass { XiF, FF };

struct CurveClassInfo {
  CurveClass cls = CurveClass::XiF;
  Integer degree_H;
  Integer chi_O;
  std::pair<long, long> normal_bundle;  // degrees on P^1
  Integer h0_N;
  Integer h1_N;
  Integer hilbert_dim;
};

namespace detail {
inline Integer h0_p1(long d) { return d >= 0 ? Integer(d + 1) : Integer(0); }
inline Integer h1_p1(long d) { return d <= -2 ? Integer(-d - 1) : Integer(0); }
}  // namespace detail

/// Complete-intersection curves of class xi f (cut by xi and f) and f^2 (two fibres).
inline CurveClassInfo curve_info(long e, CurveClass c) {
  if (e < 0) throw std::invalid_argument("scroll parameter e must be non-negative");
  CurveClassInfo r;
  r.cls = c;
  const ChowClass H = polarization(e);
  ChowClass cls(e);
  if (c == CurveClass::XiF) {
    cls = ChowClass::xi(e) * ChowClass::f(e);
    r.normal_bundle = {1, e};
    // 0 -> O(-xi-f) -> O(-xi) + O(-f) -> O -> O_M -> 0
    r.chi_O = chi_line(e, 0, 0) - chi_line(e, -1, 0) - chi_line(e, 0, -1) + chi_line(e, -1, -1);
  } else {
    cls = ChowClass::f(e) * ChowClass::f(e);
    r.normal_bundle = {0, 0};
    // 0 -> O(-2f) -> O(-f)^2 -> O -> O_L -> 0
    r.chi_O = chi_line(e, 0, 0) - 2 * chi_line(e, 0, -1) + chi_line(e, 0, -2);
  }
  r.degree_H = degree(cls * H);
  r.h0_N = detail::h0_p1(r.normal_bundle.first) + detail::h0_p1(r.normal_bundle.second);
  r.h1_N = detail::h1_p1(r.normal_bundle.first) + detail::h1_p1(r.normal_bundle.second);
  r.hilbert_dim = r.h0_N;  // unobstructed: h^1(N) = 0
  return r;
}

// ---------------------------------------------------------------------------
// Hartshorne-Serre and Ext groups

struct SerreConstruction {
  ChernData before_twist;  // c1 = 2 xi + (1-e) f, c2 = (alpha+1) xi f
  ChernData bundle;        // twisted by -xi + (e-1) f
  bool in_existence_range = false;  // alpha > e
};

inline SerreConstruction serre_construction(long e, long alpha) {
  const ChowClass z(e);
  SerreConstruction s;
  s.before_twist = ChernData(2, ChowClass::divisor(e, 2, 1 - e),
                             Integer(alpha + 1) * (ChowClass::xi(e) * ChowClass::f(e)), z);
  s.bundle = twist_chern(s.before_twist, ChowClass::divisor(e, -1, e - 1));
  s.in_existence_range = alpha > e;
  return s;
}

struct ExtDimensions {
  Integer ext0, ext1_minus_ext2, ext2, ext3;
};

inline ExtDimensions ext_dimensions(long e, long alpha, long beta) {
  const Integer E = e;
  ExtDimensions d;
  d.ext0 = 1;
  d.ext3 = 0;
  d.ext2 = e >= 4 ? binomial(E - 2, 2) : Integer(0);
  d.ext1_minus_ext2 = (6 + 2 * E) * alpha + 4 * Integer(beta) - (E - 1) * (E - 1) - 3;
  return d;
}

/// 1 - chi(End E) from Riemann-Roch on End E (ext0 = 1, ext3 = 0).
inline Integer ext_grr_check(long e, long alpha, long beta) {
  return 1 - chi_rr(endomorphism_chern(instanton_chern(e, alpha, beta)));
}

struct ModifiedInstanton {
  InstantonParams params;
  Integer ext1;
};

/// Kernel of E -> O_L for a line L of class f^2: beta grows by one, ext1 by four.
inline ModifiedInstanton elementary_modification(const InstantonParams& p, const Integer& ext1) {
  if (p.e > 3) throw UnsupportedError("elementary_modification: requires e <= 3");
  return {InstantonParams(p.e, p.alpha, p.beta + 1), ext1 + 4};
}

// ---------------------------------------------------------------------------
// P^2 side of the pullback family (alpha = 0)

/// Smallest beta admitting a pullback instanton; also the Ulrich value.
inline Integer pullback_beta_min(long e) { return Integer(e) * (e + 1) / 2 + 1; }

/// beta >= -1 + (e^2+e)/2 from the numerical bounds for alpha = 0.
inline Integer pbk_beta_bound(long e) { return Integer(e) * (e + 1) / 2 - 1; }

inline Integer pullback_moduli_dim(long e, long beta) {
  const Integer E = e;
  return 4 * Integer(beta) + 2 * E - E * E - 4;
}

struct P2Normalization {
  long c1;       // 0 (e odd) or -1 (e even)
  long t;        // twist by O(-t)
  Integer c2;    // beta - t(e-1) + t^2
  Integer moduli_dim;  // 4 c2 - 3 or 4 c2 - 4
};

inline P2Normalization p2_normalization(long e, long beta) {
  P2Normalization n{};
  n.t = e / 2;
  n.c1 = e % 2 == 1 ? 0 : -1;
  const Integer t = n.t;
  n.c2 = Integer(beta) - t * (e - 1) + t * t;
  n.moduli_dim = 4 * n.c2 - (n.c1 == 0 ? 3 : 4);
  return n;
}

// ---------------------------------------------------------------------------
// Existence

enum class ExistenceStatus { Exists, ExistsPullback, Inadmissible, Unknown };

struct ExistenceReport {
  ExistenceStatus status = ExistenceStatus::Unknown;
  std::optional<Integer> ext1, ext2, ext3;
  std::optional<bool> earnest;
  std::optional<Integer> moduli_dim;
  std::string route;

  friend bool operator==(const ExistenceReport&, const ExistenceReport&) = default;
};

inline ExistenceReport existence_report(const InstantonParams& p) {
  ExistenceReport r;
  const long e = p.e;
  if (p.alpha < 0) {
    r.status = ExistenceStatus::Inadmissible;
    r.route = "pbk";
    return r;
  }
  if (e <= 3 && p.alpha > e && p.beta >= 0) {
    r.status = ExistenceStatus::Exists;
    r.ext1 = ext_dimensions(e, p.alpha, p.beta).ext1_minus_ext2;
    r.ext2 = 0;
    r.ext3 = 0;
    r.earnest = true;
    r.route = "thm-5.x";
    return r;
  }
  if (p.alpha == 0 && Integer(p.beta) >= pullback_beta_min(e)) {
    r.status = ExistenceStatus::ExistsPullback;
    r.moduli_dim = pullback_moduli_dim(e, p.beta);
    r.earnest = true;
    r.route = "remark-3.x";
    return r;
  }
  r.route = "none";
  return r;
}

inline const char* to_string(ExistenceStatus s) {
  switch (s) {
    case ExistenceStatus::Exists: return "exists";
    case ExistenceStatus::ExistsPullback: return "exists_pullback";
    case ExistenceStatus::Inadmissible: return "inadmissible";
    case ExistenceStatus::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace xe

#endif  // XE_INSTANTON_HPP
