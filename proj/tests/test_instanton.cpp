#include "xe/instanton.hpp"

#include <gtest/gtest.h>

using namespace xe;

TEST(Ulrich, Examples) {
  EXPECT_TRUE(is_ulrich_twist({0, 0, 1}));
  EXPECT_TRUE(is_ulrich_twist({1, 0, 2}));
  EXPECT_FALSE(is_ulrich_twist({0, 0, 0}));
  for (long e = 0; e <= 8; ++e) EXPECT_TRUE(is_ulrich_twist({e, 0, (e * e + e) / 2 + 1}));
}

TEST(Ulrich, MatchesVanishingEulerCharacteristic) {
  for (long e = 0; e <= 6; ++e)
    for (long al = 0; al <= 10; ++al)
      for (long be = 0; be <= 10; ++be)
        EXPECT_EQ(is_ulrich_twist({e, al, be}), chi_instanton(e, al, be, 0, 0) == 0);
}

TEST(Charge, Increments) {
  for (long e = 0; e <= 6; ++e)
    for (long al = 1; al <= 10; ++al)
      for (long be = 1; be <= 10; ++be) {
        const InstantonParams p(e, al, be);
        EXPECT_EQ(p.charge() - InstantonParams(e, al, be - 1).charge(), 1);
        EXPECT_EQ(p.charge() - InstantonParams(e, al - 1, be).charge(), e + 1);
      }
  EXPECT_THROW(InstantonParams(-1, 0, 0), std::invalid_argument);
}

TEST(ForcedVanishing, Examples) {
  for (long e = 0; e <= 5; ++e) {
    auto v = forced_vanishing(e, TwistKind::Bundle, 0, -1, e);
    EXPECT_TRUE(v.zero);
    EXPECT_EQ(v.tag, "lem1.i");
    v = forced_vanishing(e, TwistKind::Bundle, 2, 0, 0);
    EXPECT_TRUE(v.zero);
    EXPECT_EQ(v.tag, "lem2.1");
    EXPECT_FALSE(forced_vanishing(e, TwistKind::Bundle, 1, 5, 5).zero);
    EXPECT_EQ(forced_vanishing(e, TwistKind::Bundle, 1, -1, -1).tag, "sd");
    EXPECT_EQ(forced_vanishing(e, TwistKind::OmegaTensor, 2, 0, 1).tag, "lem2.2");
    EXPECT_EQ(forced_vanishing(e, TwistKind::OmegaTensor, 3, -1, -e).tag, "lem1.iv");
    EXPECT_FALSE(forced_vanishing(e, TwistKind::OmegaTensor, 3, -1, -e - 1).zero);
  }
}

TEST(ForcedVanishing, ZerosAreConsistentWithRiemannRoch) {
  // Where every h^i but h^1 is forced to vanish, -chi must be a dimension for every
  // instanton that exists.
  for (long e = 0; e <= 5; ++e)
    for (long al = 0; al <= 8; ++al)
      for (long be = 0; be <= 12; ++be) {
        if (existence_report({e, al, be}).status == ExistenceStatus::Unknown) continue;
        for (long a = -3; a <= 3; ++a)
          for (long b = -8; b <= 8; ++b) {
            bool all = true;
            for (int i : {0, 2, 3}) all = all && forced_vanishing(e, TwistKind::Bundle, i, a, b).zero;
            if (!all) continue;
            EXPECT_LE(chi_instanton(e, al, be, a, b), 0) << e << al << be << a << b;
          }
      }
}

TEST(Divisors, Examples) {
  for (long e = 0; e <= 5; ++e) {
    EXPECT_TRUE(divisor_globally_generated(e, 1, 0));
    EXPECT_TRUE(smooth_integral_class(e, 1, 0));
    EXPECT_EQ(divisor_globally_generated(e, 1, -e), e == 0);
    EXPECT_TRUE(smooth_integral_class(e, 1, -e));
    EXPECT_FALSE(divisor_globally_generated(e, -1, 5));
    EXPECT_FALSE(smooth_integral_class(e, -1, 5));
  }
}

TEST(Stability, Examples) {
  for (long e = 0; e <= 6; ++e) {
    const auto reg = stability_test_region(e, {}, false);
    auto has = [&](long a, long b) { return std::find(reg.begin(), reg.end(), std::pair{a, b}) != reg.end(); };
    EXPECT_TRUE(has(-2, e));
    EXPECT_EQ(delta_H(e, -2, e), -e * e - 2 * e - 2);
    EXPECT_EQ(has(0, 0), e < 2);
  }
  const auto strict = stability_test_region(0, {}, true);
  EXPECT_NE(std::find(strict.begin(), strict.end(), std::pair{0L, 0L}), strict.end());  // 0 < 1
  EXPECT_THROW(stability_test_region(0, {1, 0, 0, 0}, false), std::invalid_argument);
}

TEST(Stability, RegionMatchesChowDegrees) {
  for (long e = 0; e <= 6; ++e) {
    const ChowClass H2 = polarization(e) * polarization(e);
    const ChowClass c1 = Integer(e - 1) * ChowClass::f(e);
    for (bool strict : {false, true}) {
      std::vector<std::pair<long, long>> want;
      for (long a = -10; a <= 10; ++a)
        for (long b = -10; b <= 10; ++b) {
          // 2 D.H^2 vs -c1.H^2 (rank 2)
          const Integer lhs = 2 * degree(ChowClass::divisor(e, a, b) * H2), rhs = -degree(c1 * H2);
          if (strict ? lhs < rhs : lhs <= rhs) want.emplace_back(a, b);
        }
      EXPECT_EQ(stability_test_region(e, {}, strict), want);
    }
  }
}

TEST(Earnest, Criterion) {
  EXPECT_TRUE(earnest_criterion(0));
  EXPECT_FALSE(earnest_criterion(1));
  EXPECT_THROW(earnest_criterion(-1), std::invalid_argument);
  for (long e = 0; e <= 5; ++e)
    for (long be = (e * e + e) / 2 + 1; be <= 12; ++be)
      EXPECT_EQ(existence_report({e, 0, be}).earnest, std::optional<bool>(true));
}

TEST(Curves, Examples) {
  const auto m = curve_info(2, CurveClass::XiF);
  EXPECT_EQ(m.degree_H, 3);
  EXPECT_EQ(m.hilbert_dim, 5);
  for (long e = 0; e <= 6; ++e) {
    const auto l = curve_info(e, CurveClass::FF);
    EXPECT_EQ(l.degree_H, 1);
    EXPECT_EQ(l.hilbert_dim, 2);
    EXPECT_EQ(l.chi_O, 1);
    const auto x = curve_info(e, CurveClass::XiF);
    EXPECT_EQ(x.degree_H, e + 1);
    EXPECT_EQ(x.hilbert_dim, e + 3);
    EXPECT_EQ(x.chi_O, 1);
    // det N = (xi + f)|_M for the complete intersection of xi and f.
    EXPECT_EQ(x.normal_bundle.first + x.normal_bundle.second,
              degree((ChowClass::xi(e) + ChowClass::f(e)) * ChowClass::xi(e) * ChowClass::f(e)));
    EXPECT_EQ(x.h1_N, 0);
  }
}

TEST(Serre, Construction) {
  for (long e = 0; e <= 5; ++e)
    for (long al = 0; al <= 10; ++al) {
      const auto s = serre_construction(e, al);
      EXPECT_EQ(s.bundle.c2, Integer(al) * ChowClass::xi(e) * ChowClass::f(e));
      EXPECT_EQ(s.bundle.c1, Integer(e - 1) * ChowClass::f(e));
      EXPECT_EQ(s.in_existence_range, al > e);
      // det N_M = L|_M with L = 2 xi + (1-e) f has degree e + 1 on M.
      EXPECT_EQ(degree(s.before_twist.c1 * ChowClass::xi(e) * ChowClass::f(e)), e + 1);
    }
  const auto z = serre_construction(0, 1);
  EXPECT_EQ(z.bundle.c1, -ChowClass::f(0));
  EXPECT_EQ(z.bundle.c2, ChowClass::xi(0) * ChowClass::f(0));
}

TEST(Ext, Dimensions) {
  EXPECT_EQ(ext_dimensions(4, 5, 0).ext2, 1);
  EXPECT_EQ(ext_dimensions(6, 5, 0).ext2, 6);
  for (long e = 0; e <= 3; ++e) EXPECT_EQ(ext_dimensions(e, 5, 0).ext2, 0);
  EXPECT_EQ(ext_dimensions(2, 3, 0).ext1_minus_ext2, 26);
  EXPECT_EQ(ext_dimensions(1, 2, 0).ext1_minus_ext2, 13);
}

TEST(Ext, GrothendieckRiemannRoch) {
  for (long e = 0; e <= 6; ++e)
    for (long al = 0; al <= 10; ++al)
      for (long be = 0; be <= 10; ++be) {
        const Integer E = e;
        const Integer chi_end = 4 - 2 * Integer(al) * e - 6 * Integer(al) - 4 * Integer(be) + (E - 1) * (E - 1);
        EXPECT_EQ(ext_grr_check(e, al, be), 1 - chi_end);
        EXPECT_EQ(ext_grr_check(e, al, be), ext_dimensions(e, al, be).ext1_minus_ext2);
      }
}

TEST(ElementaryModification, Examples) {
  const InstantonParams p(1, 2, 0);
  const Integer d = *existence_report(p).ext1;
  const auto m = elementary_modification(p, d);
  EXPECT_EQ(m.params, InstantonParams(1, 2, 1));
  EXPECT_EQ(m.ext1, d + 4);
  EXPECT_EQ(m.params.charge(), p.charge() + 1);
  EXPECT_EQ(m.params.chern().c1, p.chern().c1);
  EXPECT_EQ(m.params.chern().c3, p.chern().c3);
  EXPECT_EQ(existence_report(m.params).status, ExistenceStatus::Exists);
  EXPECT_THROW(elementary_modification({4, 5, 0}, 0), UnsupportedError);
}

TEST(ElementaryModification, Iterates) {
  for (long e = 0; e <= 3; ++e)
    for (long al = e + 1; al <= e + 3; ++al) {
      InstantonParams p(e, al, 0);
      Integer x = *existence_report(p).ext1;
      const Integer x0 = x, k0 = p.charge();
      for (int n = 1; n <= 10; ++n) {
        const auto m = elementary_modification(p, x);
        p = m.params;
        x = m.ext1;
        EXPECT_EQ(p, InstantonParams(e, al, n));
        EXPECT_EQ(x, x0 + 4 * n);
        EXPECT_EQ(p.charge(), k0 + n);
        EXPECT_EQ(*existence_report(p).ext1, x);
      }
    }
}

TEST(Pullback, ModuliDimension) {
  EXPECT_EQ(pullback_moduli_dim(2, 4), 12);
  for (long e = 0; e <= 8; ++e) {
    EXPECT_EQ(pullback_beta_min(e), (e * e + e) / 2 + 1);
    EXPECT_EQ(pbk_beta_bound(e), (e * e + e) / 2 - 1);
    for (long be = 0; be <= 20; ++be) {
      const auto n = p2_normalization(e, be);
      const long t = e / 2;
      const Integer c2 = Integer(be) - Integer(t) * (e - 1) + Integer(t) * t;
      EXPECT_EQ(n.c2, c2);
      EXPECT_EQ(n.c1, e % 2 == 1 ? 0 : -1);
      EXPECT_EQ(n.moduli_dim, e % 2 == 1 ? 4 * c2 - 3 : 4 * c2 - 4);
      EXPECT_EQ(n.moduli_dim, pullback_moduli_dim(e, be));
    }
  }
}

TEST(Existence, Examples) {
  auto r = existence_report({1, 2, 0});
  EXPECT_EQ(r.status, ExistenceStatus::Exists);
  EXPECT_EQ(r.ext1, std::optional<Integer>(13));
  EXPECT_EQ(r.route, "thm-5.x");
  r = existence_report({2, 0, 4});
  EXPECT_EQ(r.status, ExistenceStatus::ExistsPullback);
  EXPECT_EQ(r.moduli_dim, std::optional<Integer>(12));
  EXPECT_EQ(r.route, "remark-3.x");
  r = existence_report({5, 6, 0});
  EXPECT_EQ(r.status, ExistenceStatus::Unknown);
  r = existence_report({2, 3, 0});
  EXPECT_EQ(r.ext1, std::optional<Integer>(26));
  r = existence_report({1, -1, 3});
  EXPECT_EQ(r.status, ExistenceStatus::Inadmissible);
  EXPECT_EQ(r.route, "pbk");
  EXPECT_STREQ(to_string(ExistenceStatus::ExistsPullback), "exists_pullback");
}
