#ifndef XE_CLI_HPP
#define XE_CLI_HPP

#include "xe/verify.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace xe::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct Options {
  long e = 0, alpha = 0, beta = 0, a = 0, b = 0;
  int variant = 1;
  std::optional<long> gamma, delta, eta;
  std::string window = "-10,10,-10,10";
  std::string format = "text";
  std::string curve = "all";
  bool strict = false, ascii = false, omega = false, raw = false, symbolic = false;
  bool has_alpha = false, has_beta = false;
  std::uint64_t seed = kDefaultSeed;
};

/// Usage or range error: reported with exit code 2.
struct FlagError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Window parse_window(const std::string& s) {
  std::vector<long> v;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stol(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw FlagError("--window: not an integer: '" + tok + "'");
    }
  }
  if (v.size() != 4) throw FlagError("--window expects amin,amax,bmin,bmax");
  if (v[0] > v[1] || v[2] > v[3]) throw FlagError("--window: empty range");
  return {v[0], v[1], v[2], v[3]};
}

namespace detail {

inline void require_nonneg(long v, const char* name) {
  if (v < 0) throw FlagError(std::string("--") + name + " must be >= 0, got " + std::to_string(v));
}

inline std::string twist_label(long a, long b, Glyphs g) {
  const std::string d = render_divisor(a, b, g);
  return d.empty() ? "0" : d;
}

inline int cmd_chow(const Options& o, std::ostream& out) {
  const auto D = ChowClass::divisor(o.e, o.a, o.b);
  const auto D2 = D * D, D3 = D2 * D;
  const Integer dH = delta_H(o.e, o.a, o.b);
  if (o.format == "json") {
    out << json{{"e", o.e},
                {"a", o.a},
                {"b", o.b},
                {"divisor", to_json(D)},
                {"square", to_json(D2)},
                {"cube", to_json(D3)},
                {"degree_cube", to_json_int(degree(D3))},
                {"delta_H", to_json_int(dH)}}
               .dump(2)
        << "\n";
    return 0;
  }
  const Glyphs g{o.ascii};
  out << "D     = " << render_chow(D, g) << "\n";
  out << "D" << g.sq() << "    = " << render_chow(D2, g) << "\n";
  out << "D" << (o.ascii ? "^3" : "³") << "    = " << render_chow(D3, g) << "\n";
  out << "deg D" << (o.ascii ? "^3" : "³") << " = " << degree(D3) << "\n";
  out << "D" << g.dot() << "H" << g.sq() << "  = " << dH << "\n";
  return 0;
}

inline Summand summand_of(const Options& o) { return o.omega ? Summand::omega(o.a, o.b) : Summand::line(o.a, o.b); }

inline int cmd_coh(const Options& o, std::ostream& out) {
  const Summand s = summand_of(o);
  const auto v = coh_summand(o.e, s);
  if (o.format == "json") {
    json j = to_json(v);
    j["e"] = o.e;
    j["sheaf"] = to_json(s);
    out << j.dump(2) << "\n";
    return 0;
  }
  const Glyphs g{o.ascii};
  const std::string name = render_summand(s, g);
  for (int i = 0; i < 4; ++i) out << "h" << superscript(i, g) << "(" << name << ") = " << v[i] << "\n";
  out << (o.ascii ? "chi" : "χ") << "(" << name << ") = " << v.chi() << "\n";
  return 0;
}

inline int cmd_chi(const Options& o, std::ostream& out) {
  const Glyphs g{o.ascii};
  const bool inst = o.has_alpha || o.has_beta;
  Integer chi;
  std::string name;
  if (inst) {
    require_nonneg(o.alpha, "alpha");
    require_nonneg(o.beta, "beta");
    chi = o.omega ? chi_instanton_omega(o.e, o.alpha, o.beta, o.a, o.b)
                  : chi_instanton(o.e, o.alpha, o.beta, o.a, o.b);
    const std::string d = render_divisor(o.a, o.b, g);
    name = (o.omega ? std::string(g.omega()) + (o.ascii ? "(x)" : "⊗") : std::string()) + "E" +
           (d.empty() ? "" : "(" + d + ")");
  } else {
    const Summand s = summand_of(o);
    chi = chi_formal(FormalSheaf::of(o.e, s));
    name = render_summand(s, g);
  }
  if (o.format == "json") {
    json j{{"e", o.e}, {"a", o.a}, {"b", o.b}, {"omega", o.omega}, {"chi", to_json_int(chi)}};
    if (inst) {
      j["alpha"] = o.alpha;
      j["beta"] = o.beta;
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << (o.ascii ? "chi" : "χ") << "(" << name << ") = " << chi << "\n";
  return 0;
}

inline void check_instanton_flags(const Options& o) {
  require_nonneg(o.alpha, "alpha");
  require_nonneg(o.beta, "beta");
  if (o.variant == 3 && o.alpha != 0)
    throw FlagError("--variant 3 requires --alpha 0, got " + std::to_string(o.alpha));
}

inline int cmd_monad(const Options& o, std::ostream& out) {
  check_instanton_flags(o);
  const bool general = o.gamma || o.delta || o.eta;
  if (general && o.variant != 1) throw FlagError("--gamma/--delta/--eta apply to --variant 1 only");
  for (const auto& [v, n] : {std::pair{o.gamma, "gamma"}, {o.delta, "delta"}, {o.eta, "eta"}})
    if (v) require_nonneg(*v, n);
  const Monad m = general ? monad_general(o.e, o.alpha, o.beta, o.gamma.value_or(0), o.delta.value_or(0),
                                          o.eta.value_or(0))
                          : monad_shape(o.e, o.alpha, o.beta, o.variant);
  const auto c = monad_consistency(m);
  if (o.format == "json") {
    out << to_json(m, c).dump(2) << "\n";
    return 0;
  }
  const Glyphs g{o.ascii};
  out << render_monad(m, g);
  out << "\nchecks: rank=" << (c.rank ? "ok" : "FAIL") << " c1=" << (c.c1 ? "ok" : "FAIL")
      << " c2=" << (c.c2 ? "ok" : "FAIL") << " c3=" << (c.c3 ? "ok" : "FAIL") << " chi=" << (c.chi ? "ok" : "FAIL")
      << "\n";
  return 0;
}

inline int cmd_table(const Options& o, std::ostream& out) {
  check_instanton_flags(o);
  if (o.symbolic && o.variant != 1) throw FlagError("--symbolic applies to --variant 1 only");
  const auto t = beilinson_table(o.e, o.alpha, o.beta, o.variant, !o.symbolic);
  if (o.format == "json") {
    out << to_json(t).dump(2) << "\n";
    return 0;
  }
  out << render_table(t, !o.raw, Glyphs{o.ascii});
  return 0;
}

inline int cmd_stability(const Options& o, std::ostream& out) {
  const Window w = parse_window(o.window);
  const auto reg = stability_test_region(o.e, w, o.strict);
  const Rational mu = slope_mu_H(o.e);
  if (o.format == "json") {
    json tw = json::array();
    for (const auto& [a, b] : reg) tw.push_back({a, b});
    out << json{{"e", o.e},
                {"mu_H", to_string(mu)},
                {"strict", o.strict},
                {"window", {w.a_min, w.a_max, w.b_min, w.b_max}},
                {"twists", tw}}
               .dump(2)
        << "\n";
    return 0;
  }
  const Glyphs g{o.ascii};
  out << "mu_H(E) = " << to_string(mu) << "; twists D with D" << g.dot() << "H" << g.sq()
      << (o.strict ? " < " : " <= ") << to_string(-mu) << ": " << reg.size() << "\n";
  for (const auto& [a, b] : reg)
    out << "  " << twist_label(a, b, g) << "  (" << delta_H(o.e, a, b) << ")\n";
  return 0;
}

inline int cmd_existence(const Options& o, std::ostream& out) {
  require_nonneg(o.beta, "beta");
  const auto r = existence_report(InstantonParams(o.e, o.alpha, o.beta));
  if (o.format == "json") {
    out << to_json(r).dump(2) << "\n";
    return 0;
  }
  out << "status: " << to_string(r.status) << "\n";
  if (r.ext1) out << "ext1: " << *r.ext1 << "\n";
  if (r.ext2) out << "ext2: " << *r.ext2 << "\n";
  if (r.ext3) out << "ext3: " << *r.ext3 << "\n";
  if (r.earnest) out << "earnest: " << (*r.earnest ? "true" : "false") << "\n";
  if (r.moduli_dim) out << "moduli_dim: " << *r.moduli_dim << "\n";
  out << "route: " << r.route << "\n";
  return 0;
}

inline int cmd_curves(const Options& o, std::ostream& out) {
  std::vector<CurveClass> cls;
  if (o.curve == "all" || o.curve == "xif") cls.push_back(CurveClass::XiF);
  if (o.curve == "all" || o.curve == "ff") cls.push_back(CurveClass::FF);
  json arr = json::array();
  const Glyphs g{o.ascii};
  for (auto c : cls) {
    const auto i = curve_info(o.e, c);
    const std::string name = c == CurveClass::XiF ? "xif" : "ff";
    if (o.format == "json") {
      arr.push_back({{"class", name},
                     {"degree_H", to_json_int(i.degree_H)},
                     {"chi_O", to_json_int(i.chi_O)},
                     {"normal_bundle", {i.normal_bundle.first, i.normal_bundle.second}},
                     {"h0_N", to_json_int(i.h0_N)},
                     {"h1_N", to_json_int(i.h1_N)},
                     {"hilbert_dim", to_json_int(i.hilbert_dim)}});
      continue;
    }
    out << (c == CurveClass::XiF ? std::string(g.xi()) + "f" : "f" + g.sq()) << ": degree " << i.degree_H
        << ", " << (o.ascii ? "chi" : "χ") << "(O) = " << i.chi_O << ", N = O(" << i.normal_bundle.first
        << ")" << g.oplus() << "O(" << i.normal_bundle.second << "), h0(N) = " << i.h0_N
        << ", h1(N) = " << i.h1_N << ", Hilbert scheme dimension " << i.hilbert_dim << "\n";
  }
  if (o.format == "json") out << json{{"e", o.e}, {"curves", arr}}.dump(2) << "\n";
  return 0;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  return report_suites(run_suites(o.seed), o.seed, out) ? 0 : 1;
}

}  // namespace detail

/// Parses argv (argv[0] is the program name) and runs one subcommand.
/// Exit codes: 0 success, 1 verification failure, 2 flag, range or admissibility error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Chow ring, cohomology, Beilinson and instanton computations on X_e", "xeinst"};
  app.require_subcommand(1, 1);
  Options o;

  const auto add_e = [&](CLI::App* s) {
    s->add_option("--e", o.e, "scroll parameter e >= 0")->required()->check(CLI::NonNegativeNumber);
  };
  const auto add_ab = [&](CLI::App* s) {
    s->add_option("--a", o.a, "xi coefficient of the twist");
    s->add_option("--b", o.b, "f coefficient of the twist");
  };
  const auto add_params = [&](CLI::App* s, bool variant) {
    s->add_option("--alpha", o.alpha, "c2 = alpha xi f + beta f^2")->each([&](const std::string&) { o.has_alpha = true; });
    s->add_option("--beta", o.beta, "c2 = alpha xi f + beta f^2")->each([&](const std::string&) { o.has_beta = true; });
    if (variant) s->add_option("--variant", o.variant, "monad variant")->check(CLI::IsMember({1, 2, 3}));
  };
  const auto add_format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    s->add_flag("--ascii", o.ascii, "ASCII rendering (xi, Omega)");
  };

  auto* chow = app.add_subcommand("chow", "powers and degrees of a xi + b f");
  add_e(chow);
  add_ab(chow);
  add_format(chow);

  auto* coh = app.add_subcommand("coh", "h^i of O(a xi + b f) or Omega(a xi + b f)");
  add_e(coh);
  add_ab(coh);
  coh->add_flag("--omega", o.omega, "twist of the pulled-back cotangent bundle");
  add_format(coh);

  auto* chi = app.add_subcommand("chi", "Euler characteristic of a line bundle, Omega twist or instanton twist");
  add_e(chi);
  add_ab(chi);
  add_params(chi, false);
  chi->add_flag("--omega", o.omega, "tensor with Omega");
  add_format(chi);

  auto* monad = app.add_subcommand("monad", "monad of an instanton");
  add_e(monad);
  add_params(monad, true);
  monad->add_option("--gamma", o.gamma, "h^2(E(-(e+1)f))");
  monad->add_option("--delta", o.delta, "h^2 paired with Omega(ef)");
  monad->add_option("--eta", o.eta, "h^2 paired with O((e-1)f)");
  add_format(monad);

  auto* table = app.add_subcommand("table", "Beilinson table");
  add_e(table);
  add_params(table, true);
  table->add_flag("--raw", o.raw, "cohomology degrees only");
  table->add_flag("--symbolic", o.symbolic, "keep gamma, delta, eta as symbols");
  add_format(table);

  auto* stab = app.add_subcommand("stability", "twists to test for mu_H-stability");
  add_e(stab);
  stab->add_option("--window", o.window, "amin,amax,bmin,bmax");
  stab->add_flag("--strict", o.strict, "strict inequality");
  add_format(stab);

  auto* exist = app.add_subcommand("existence", "existence report");
  add_e(exist);
  add_params(exist, false);
  add_format(exist);

  auto* curves = app.add_subcommand("curves", "curves of class xi f and f^2");
  add_e(curves);
  curves->add_option("--class", o.curve, "xif, ff or all")->check(CLI::IsMember({"all", "xif", "ff"}));
  add_format(curves);

  auto* verify = app.add_subcommand("verify", "run every invariant suite");
  verify->add_option("--seed", o.seed, "seed for randomized suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*chow) return detail::cmd_chow(o, out);
    if (*coh) return detail::cmd_coh(o, out);
    if (*chi) return detail::cmd_chi(o, out);
    if (*monad) return detail::cmd_monad(o, out);
    if (*table) return detail::cmd_table(o, out);
    if (*stab) return detail::cmd_stability(o, out);
    if (*exist) return detail::cmd_existence(o, out);
    if (*curves) return detail::cmd_curves(o, out);
    if (*verify) return detail::cmd_verify(o, out);
  } catch (const InadmissibleError& e) {
    err << "error: " << e.what() << " (violated bound: h^1(" << twist_name(e.twist()) << ") >= 0)\n";
    return 2;
  } catch (const UnsupportedError& e) {
    err << "error: unsupported: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    err << "error: internal consistency: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"xeinst"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace xe::cli

#endif  // XE_CLI_HPP
