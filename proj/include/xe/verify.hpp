#ifndef XE_VERIFY_HPP
#define XE_VERIFY_HPP

// Invariant suites run by `xeinst verify`. Every suite is deterministic for a given seed.

#include "xe/json_io.hpp"
#include "xe/render.hpp"

#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace xe {

struct VerifyGrid {
  long e_max = 5;
  long ab = 10;      // |a|, |b| bound
  long ab_chi = 8;   // twist bound for the Riemann-Roch sweep
  long param = 8;    // alpha, beta bound
  long monad_e_max = 4;
  int random_objects = 1000;
};

struct SuiteResult {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> findings;

  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok && failures.size() < 20) failures.push_back(what());
  }
  bool ok() const { return failures.empty(); }
};

namespace verify_detail {

inline std::string fmt(long e, long a, long b) {
  return "e=" + std::to_string(e) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
}

inline ChowClass random_class(std::mt19937_64& g, long e, int lo = -50, int hi = 50) {
  std::uniform_int_distribution<int> d(lo, hi);
  ChowClass x(e);
  for (int k = 0; k < 6; ++k) x[static_cast<ChowClass::Basis>(k)] = d(g);
  return x;
}

inline FormalSheaf random_sheaf(std::mt19937_64& g, long e) {
  std::uniform_int_distribution<int> n(0, 4), ab(-6, 6), kind(0, 1);
  std::uniform_int_distribution<long long> mult(1, 1000000);
  FormalSheaf F(e);
  for (int k = n(g); k > 0; --k) {
    const Summand s{kind(g) ? Summand::Kind::Line : Summand::Kind::Omega, ab(g), ab(g)};
    Integer m = mult(g);
    if (kind(g)) m *= Integer("123456789012345678901");  // beyond 64 bits
    F.add(s, m);
  }
  return F;
}

}  // namespace verify_detail

inline SuiteResult suite_ring_axioms(const VerifyGrid& gr, std::uint64_t seed) {
  SuiteResult r{"chow.ring_axioms"};
  std::mt19937_64 g(seed);
  for (long e = 0; e <= 8; ++e)
    for (int k = 0; k < 50; ++k) {
      const auto x = verify_detail::random_class(g, e), y = verify_detail::random_class(g, e),
                 z = verify_detail::random_class(g, e);
      r.expect(x * y == y * x, [&] { return "commutativity e=" + std::to_string(e); });
      r.expect((x * y) * z == x * (y * z), [&] { return "associativity e=" + std::to_string(e); });
      r.expect(x * (y + z) == x * y + x * z, [&] { return "distributivity e=" + std::to_string(e); });
    }
  for (long e = 0; e <= 8; ++e) {
    const auto H = polarization(e);
    r.expect(degree(H * ChowClass::f(e) * ChowClass::f(e)) == 1, [&] { return "H f^2 e=" + std::to_string(e); });
    r.expect(degree(H.pow(3)) == Integer(e * e + 3 * e + 3), [&] { return "H^3 e=" + std::to_string(e); });
    r.expect(degree(-canonical_class(e) * c2_cotangent(e)) == 24, [&] { return "-K c2 e=" + std::to_string(e); });
  }
  (void)gr;
  return r;
}

inline SuiteResult suite_delta_oracle(const VerifyGrid& gr) {
  SuiteResult r{"chow.delta_slope"};
  for (long e = 0; e <= gr.e_max + 1; ++e) {
    const auto H = polarization(e);
    const auto H2 = H * H;
    for (long a = -gr.ab; a <= gr.ab; ++a)
      for (long b = -gr.ab; b <= gr.ab; ++b)
        r.expect(delta_H(e, a, b) == degree(ChowClass::divisor(e, a, b) * H2),
                 [&] { return "delta_H " + verify_detail::fmt(e, a, b); });
    r.expect(2 * slope_mu_H(e) == Rational(degree(ChowClass::divisor(e, 0, e - 1) * H2)),
             [&] { return "slope e=" + std::to_string(e); });
  }
  return r;
}

inline SuiteResult suite_riemann_roch(const VerifyGrid& gr) {
  SuiteResult r{"chow.riemann_roch"};
  for (long e = 0; e <= gr.e_max; ++e)
    for (long al = 0; al <= gr.param; al += 2)
      for (long be = 0; be <= gr.param; be += 2) {
        const auto d = instanton_chern(e, al, be);
        for (long a = -gr.ab_chi; a <= gr.ab_chi; ++a)
          for (long b = -gr.ab_chi; b <= gr.ab_chi; ++b)
            r.expect(chi_rr(twist_chern(d, ChowClass::divisor(e, a, b))) == chi_instanton(e, al, be, a, b),
                     [&] { return "chi " + verify_detail::fmt(e, a, b); });
      }
  return r;
}

inline SuiteResult suite_serre(const VerifyGrid& gr) {
  SuiteResult r{"coh.serre_duality"};
  for (long e = 0; e <= gr.e_max; ++e)
    for (long a = -gr.ab; a <= gr.ab; ++a)
      for (long b = -gr.ab; b <= gr.ab; ++b)
        for (int i = 0; i < 4; ++i) {
          r.expect(h_line(e, i, a, b) == h_line(e, 3 - i, -a - 2, e - 3 - b),
                   [&] { return "line " + verify_detail::fmt(e, a, b); });
          r.expect(h_omega_twist(e, i, a, b) == h_omega_twist(e, 3 - i, -a - 2, e - b),
                   [&] { return "omega " + verify_detail::fmt(e, a, b); });
        }
  return r;
}

inline SuiteResult suite_sequences(const VerifyGrid& gr) {
  SuiteResult r{"coh.sequence_chi"};
  for (long e = 0; e <= gr.e_max; ++e)
    for (long a = -gr.ab; a <= gr.ab; ++a)
      for (long b = -gr.ab; b <= gr.ab; ++b) {
        r.expect(sequence_chi_defect(seq::om(e, a, b)) == 0, [&] { return "Om " + verify_detail::fmt(e, a, b); });
        r.expect(sequence_chi_defect(seq::omd(e, a, b)) == 0, [&] { return "OmD " + verify_detail::fmt(e, a, b); });
        r.expect(sequence_chi_defect(seq::omt(e, a, b)) == 0, [&] { return "Omt " + verify_detail::fmt(e, a, b); });
        r.expect(sequence_chi_defect(seq::rel(e, a, b)) == 0, [&] { return "Rel " + verify_detail::fmt(e, a, b); });
        r.expect(3 * chi_line(e, a, b - 1) - chi_line(e, a, b) ==
                     chi_formal(FormalSheaf::of(e, Summand::omega(a, b))),
                 [&] { return "Omega chi " + verify_detail::fmt(e, a, b); });
      }
  for (long k = -12; k <= 12; ++k) {
    const Integer K = k;
    r.expect(h_omega_p2(0, k) - h_omega_p2(1, k) + h_omega_p2(2, k) == 3 * K * (K + 1) / 2 - (K + 1) * (K + 2) / 2,
             [&] { return "Bott chi k=" + std::to_string(k); });
  }
  return r;
}

inline SuiteResult suite_orthogonality(const VerifyGrid& gr) {
  SuiteResult r{"beilinson.orthogonality"};
  for (long e = 0; e <= gr.e_max; ++e)
    for (int p = 1; p <= 3; ++p) {
      const auto rep = orthogonality_check(e, p);
      r.expect(rep.ok(), [&] {
        const auto& f = rep.failures.front();
        return "e=" + std::to_string(e) + " pair " + std::to_string(p) + " (i,j,m)=(" + std::to_string(f.i) +
               "," + std::to_string(f.j) + "," + std::to_string(f.m) + ")";
      });
    }
  return r;
}

inline SuiteResult suite_strongness(const VerifyGrid& gr) {
  SuiteResult r{"beilinson.strongness"};
  for (long e = 0; e <= gr.e_max; ++e)
    for (int c : {2, 4, 6})
      for (const auto& it : strongness_check(e, c).items)
        r.expect(it.pass, [&] { return "e=" + std::to_string(e) + " " + it.object + " via " + it.route; });
  return r;
}

inline SuiteResult suite_monads(const VerifyGrid& gr) {
  SuiteResult r{"beilinson.monads"};
  for (long e = 0; e <= gr.monad_e_max; ++e)
    for (long al = 0; al <= gr.param; ++al)
      for (long be = 0; be <= gr.param; ++be)
        for (int v = 1; v <= 3; ++v) {
          if (v == 3 && al != 0) continue;
          Monad m;
          try {
            m = monad_shape(e, al, be, v);
          } catch (const InadmissibleError&) {
            continue;
          }
          const auto c = monad_consistency(m);
          const auto where = [&] {
            return "e=" + std::to_string(e) + " alpha=" + std::to_string(al) + " beta=" + std::to_string(be) +
                   " variant=" + std::to_string(v);
          };
          r.expect(c.rank, where);
          r.expect(c.c1, where);
          r.expect(c.c2, where);
          r.expect(c.c3, where);
          r.expect(c.chi, where);
          if (v == 3) {
            bool pullback = true;
            for (const auto* F : {&m.A, &m.B, &m.C})
              for (const auto& t : F->terms()) pullback = pullback && t.summand.is_line() && t.summand.a == 0;
            r.expect(pullback, where);
          }
        }
  // Degenerations and corrections of the non-earnest monad.
  for (long e = 0; e <= 3; ++e)
    for (long g = 0; g <= 2; ++g)
      for (long d = 0; d <= 2; ++d)
        for (long h = 0; h <= 2; ++h) {
          const auto m = monad_general(e, 2, 8, g, d, h);
          const auto c = monad_consistency(m);
          r.expect(c.ok() && c.c3, [&] { return "general e=" + std::to_string(e); });
          if (g == 0 && d == 0 && h == 0) {
            Monad base = monad_shape(e, 2, 8, 1);
            Monad cmp = m;
            cmp.C1.reset();
            cmp.extra.reset();
            r.expect(cmp == base && m.C1->empty(), [&] { return "degeneration e=" + std::to_string(e); });
          }
        }
  return r;
}

/// h^1 entries against Riemann-Roch on the twisted Chern data.
inline SuiteResult suite_h1_values(const VerifyGrid& gr) {
  SuiteResult r{"beilinson.h1_values"};
  for (long e = 0; e <= gr.monad_e_max; ++e)
    for (long al = 0; al <= gr.param; ++al)
      for (long be = 0; be <= gr.param; ++be)
        for (int v = 1; v <= 3; ++v) {
          if (v == 3 && al != 0) continue;
          const auto d = instanton_chern(e, al, be);
          const auto chi = [&](long a, long b) { return chi_rr(twist_chern(d, ChowClass::divisor(e, a, b))); };
          std::vector<H1Value> h;
          try {
            h = h1_values(e, al, be, v);
          } catch (const InadmissibleError& x) {
            const Summand& s = x.twist();
            const Integer want = s.is_line() ? -chi(s.a, s.b) : chi(s.a, s.b) - 3 * chi(s.a, s.b - 1);
            r.expect(want == x.value() && want < 0, [&] { return "inadmissible " + verify_detail::fmt(e, al, be); });
            continue;
          }
          r.expect(h.size() == 5, [&] { return "size " + verify_detail::fmt(e, al, be); });
          for (const auto& x : h) {
            const Summand& s = x.twist;
            const Integer want = s.is_line() ? -chi(s.a, s.b) : chi(s.a, s.b) - 3 * chi(s.a, s.b - 1);
            r.expect(want == x.value, [&] { return twist_name(s) + " " + verify_detail::fmt(e, al, be); });
          }
        }
  return r;
}

inline SuiteResult suite_instanton(const VerifyGrid& gr) {
  SuiteResult r{"instanton.identities"};
  for (long e = 0; e <= gr.e_max + 1; ++e) {
    for (long al = 0; al <= 10; ++al)
      for (long be = 0; be <= 10; ++be) {
        const InstantonParams p(e, al, be);
        const auto where = [&] {
          return "e=" + std::to_string(e) + " alpha=" + std::to_string(al) + " beta=" + std::to_string(be);
        };
        r.expect(is_ulrich_twist(p) == (chi_instanton(e, al, be, 0, 0) == 0), where);
        r.expect(ext_grr_check(e, al, be) == ext_dimensions(e, al, be).ext1_minus_ext2, where);
        if (be > 0) r.expect(p.charge() - InstantonParams(e, al, be - 1).charge() == 1, where);
        if (al > 0) r.expect(p.charge() - InstantonParams(e, al - 1, be).charge() == e + 1, where);
      }
    const auto reg = stability_test_region(e, {}, false);
    const auto H2 = polarization(e) * polarization(e);
    const Rational mu = slope_mu_H(e);
    long inside = 0;
    for (long a = -10; a <= 10; ++a)
      for (long b = -10; b <= 10; ++b)
        if (Rational(degree(ChowClass::divisor(e, a, b) * H2)) <= -mu) ++inside;
    r.expect(inside == static_cast<long>(reg.size()), [&] { return "stability region e=" + std::to_string(e); });
    for (long beta = 0; beta <= 12; ++beta) {
      const auto n = p2_normalization(e, beta);
      r.expect(n.moduli_dim == pullback_moduli_dim(e, beta), [&] { return "P2 moduli e=" + std::to_string(e); });
    }
    const auto s = serre_construction(e, e + 1);
    r.expect(s.bundle == instanton_chern(e, e + 1, 0), [&] { return "Serre e=" + std::to_string(e); });
  }
  for (long e = 0; e <= 3; ++e) {
    InstantonParams p(e, e + 1, 0);
    Integer ext1 = *existence_report(p).ext1;
    for (int n = 1; n <= 5; ++n) {
      const auto m = elementary_modification(p, ext1);
      r.expect(m.ext1 == ext1 + 4 && m.params.charge() == p.charge() + 1 &&
                   *existence_report(m.params).ext1 == m.ext1,
               [&] { return "elementary modification e=" + std::to_string(e); });
      p = m.params;
      ext1 = m.ext1;
    }
  }
  return r;
}

/// Exists reports against the admissibility gate of the first monad; disagreements are
/// recorded as findings.
inline SuiteResult suite_existence_vs_monad(const VerifyGrid& gr) {
  SuiteResult r{"instanton.existence_vs_monad"};
  for (long e = 0; e <= 3; ++e)
    for (long al = 0; al <= gr.param; ++al)
      for (long be = 0; be <= gr.param; ++be) {
        const auto rep = existence_report(InstantonParams(e, al, be));
        ++r.checks;
        if (rep.status != ExistenceStatus::Exists && rep.status != ExistenceStatus::ExistsPullback) continue;
        const int v = rep.status == ExistenceStatus::Exists ? 1 : 3;
        try {
          (void)monad_shape(e, al, be, v);
        } catch (const InadmissibleError& x) {
          r.findings.push_back("e=" + std::to_string(e) + " alpha=" + std::to_string(al) + " beta=" +
                               std::to_string(be) + ": " + to_string(rep.status) + " but variant " +
                               std::to_string(v) + " has h^1(" + twist_name(x.twist()) + ") = " + x.value().str());
        }
      }
  return r;
}

inline SuiteResult suite_json(const VerifyGrid& gr, std::uint64_t seed) {
  SuiteResult r{"cli.json_roundtrip"};
  std::mt19937_64 g(seed + 1);
  std::uniform_int_distribution<int> pick(0, 3), small(0, 8), ev(0, 5);
  for (int k = 0; k < gr.random_objects; ++k) {
    const long e = ev(g);
    switch (pick(g)) {
      case 0: {
        auto x = verify_detail::random_class(g, e, -1000000, 1000000);
        x[ChowClass::Pt] *= Integer("100000000000000000000000");
        r.expect(chow_from_json(json::parse(to_json(x).dump())) == x, [] { return std::string("chow"); });
        break;
      }
      case 1: {
        const auto F = verify_detail::random_sheaf(g, e);
        r.expect(sheaf_from_json(json::parse(to_json(F).dump())) == F, [] { return std::string("sheaf"); });
        break;
      }
      case 2: {
        Monad m;
        const long al = small(g), be = small(g);
        try {
          m = (k % 3 == 0) ? monad_general(e, al, be + 8, small(g) % 3, small(g) % 3, small(g) % 3)
                           : monad_shape(e, al, be, 1);
        } catch (const std::invalid_argument&) {
          m = monad_closed_form(e, al, 20, 1);
        }
        r.expect(monad_from_json(json::parse(to_json(m).dump())) == m, [] { return std::string("monad"); });
        break;
      }
      default: {
        const auto rep = existence_report(InstantonParams(e % 4, small(g) - 1, small(g)));
        r.expect(existence_from_json(json::parse(to_json(rep).dump())) == rep, [] { return std::string("existence"); });
      }
    }
  }
  return r;
}

inline std::vector<SuiteResult> run_suites(std::uint64_t seed, const VerifyGrid& gr = {}) {
  return {suite_ring_axioms(gr, seed), suite_delta_oracle(gr),  suite_riemann_roch(gr),
          suite_serre(gr),             suite_sequences(gr),      suite_orthogonality(gr),
          suite_strongness(gr),        suite_monads(gr),         suite_h1_values(gr),
          suite_instanton(gr),         suite_existence_vs_monad(gr), suite_json(gr, seed)};
}

/// Prints the per-suite summary; returns true when every suite passed.
inline bool report_suites(const std::vector<SuiteResult>& suites, std::uint64_t seed, std::ostream& out) {
  out << "verify seed=" << seed << "\n";
  bool all = true;
  std::size_t findings = 0, passed = 0;
  for (const auto& s : suites) {
    out << (s.ok() ? "PASS " : "FAIL ") << s.name << " checks=" << s.checks << "\n";
    for (const auto& f : s.failures) out << "  failure: " << f << "\n";
    for (const auto& f : s.findings) out << "  finding: " << f << "\n";
    findings += s.findings.size();
    if (s.ok()) ++passed;
    all = all && s.ok();
  }
  out << "summary: " << suites.size() << " suites, " << passed << " passed, " << suites.size() - passed
      << " failed, " << findings << " findings\n";
  return all;
}

}  // namespace xe

#endif  // XE_VERIFY_HPP
