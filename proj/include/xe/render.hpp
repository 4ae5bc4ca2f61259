#ifndef XE_RENDER_HPP
#define XE_RENDER_HPP

#include "xe/beilinson.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace xe {

struct Glyphs {
  bool ascii = false;
  const char* xi() const { return ascii ? "xi" : "ξ"; }
  const char* omega() const { return ascii ? "Omega" : "Ω"; }
  const char* oplus() const { return ascii ? "+" : "⊕"; }
  const char* arrow() const { return ascii ? "->" : "→"; }
  const char* dot() const { return ascii ? "*" : "·"; }
  const char* minus() const { return "-"; }
  std::string sq() const { return ascii ? "^2" : "²"; }
};

/// Display width of a UTF-8 string (one column per code point).
inline std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

inline std::string pad(const std::string& s, std::size_t w, bool center = true) {
  const std::size_t d = display_width(s);
  if (d >= w) return s;
  const std::size_t left = center ? (w - d) / 2 : 0;
  return std::string(left, ' ') + s + std::string(w - d - left, ' ');
}

/// "-2·ξ + 3·ξf²" style; zero renders as "0".
inline std::string render_chow(const ChowClass& x, Glyphs g = {}) {
  const std::string X = g.xi();
  const std::string mon[6] = {"", X, "f", g.ascii ? X + "*f" : X + "f", g.ascii ? "f^2" : "f²",
                              g.ascii ? X + "*f^2" : X + "f²"};
  std::string out;
  for (int k = 0; k < 6; ++k) {
    const Integer& c = x[static_cast<ChowClass::Basis>(k)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Integer a = neg ? Integer(-c) : c;
    std::string term;
    if (k == 0)
      term = a.str();
    else if (a == 1)
      term = mon[k];
    else
      term = a.str() + g.dot() + mon[k];
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

/// a xi + b f as "-ξ+2f"; zero renders empty.
inline std::string render_divisor(long a, long b, Glyphs g = {}) {
  std::string s;
  if (a != 0) s += (a == 1 ? "" : a == -1 ? "-" : std::to_string(a)) + std::string(g.xi());
  if (b != 0) {
    if (!s.empty() && b > 0) s += "+";
    s += (b == 1 ? "" : b == -1 ? "-" : std::to_string(b)) + std::string("f");
  }
  return s;
}

inline std::string render_summand(const Summand& s, Glyphs g = {}) {
  const std::string d = render_divisor(s.a, s.b, g);
  const std::string base = s.is_line() ? "O" : g.omega();
  return d.empty() ? base : base + "(" + d + ")";
}

inline std::string render_term(const Term& t, Glyphs g = {}) {
  return render_summand(t.summand, g) + "^" + t.mult.str();
}

inline std::string render_sheaf(const FormalSheaf& F, Glyphs g = {}) {
  if (F.empty()) return "0";
  std::string s;
  for (const auto& t : F.terms()) {
    if (!s.empty()) s += std::string(" ") + g.oplus() + " ";
    s += render_term(t, g);
  }
  return s;
}

namespace detail {

/// Stacked column: terms separated by a centred direct-sum sign.
inline std::vector<std::string> stack(const FormalSheaf& F, Glyphs g) {
  std::vector<std::string> col;
  // Display order: Omega summands first, then lines with larger xi-coefficient.
  std::vector<Term> terms = F.terms();
  std::stable_sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
    if (x.summand.is_line() != y.summand.is_line()) return !x.summand.is_line();
    if (x.summand.a != y.summand.a) return x.summand.a > y.summand.a;
    return x.summand.b > y.summand.b;
  });
  for (const auto& t : terms) {
    if (!col.empty()) col.push_back(g.oplus());
    col.push_back(render_term(t, g));
  }
  if (col.empty()) col.push_back("0");
  return col;
}

inline std::string join_columns(const std::vector<std::vector<std::string>>& cols,
                                const std::vector<bool>& is_arrow) {
  std::size_t h = 1;
  for (const auto& c : cols) h = std::max(h, c.size());
  if (h % 2 == 0) ++h;
  const std::size_t mid = h / 2;
  std::vector<std::size_t> w(cols.size(), 0);
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (const auto& s : cols[i]) w[i] = std::max(w[i], display_width(s));
  std::ostringstream out;
  for (std::size_t r = 0; r < h; ++r) {
    std::string line;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const auto& c = cols[i];
      const std::size_t top = mid - c.size() / 2;
      std::string cell;
      if (is_arrow[i])
        cell = r == mid ? c[0] : "";
      else if (r >= top && r < top + c.size())
        cell = c[r - top];
      if (i) line += " ";
      line += pad(cell, w[i]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

}  // namespace detail

/// Three-term display 0 -> A -> B -> C -> 0 with stacked direct sums.
inline std::string render_monad(const Monad& m, Glyphs g = {}) {
  const std::vector<std::string> zero{"0"}, arrow{g.arrow()};
  std::vector<std::vector<std::string>> cols{zero, arrow, detail::stack(m.A, g), arrow,
                                             detail::stack(m.B, g), arrow, detail::stack(m.C, g),
                                             arrow, zero};
  std::vector<bool> is_arrow{false, true, false, true, false, true, false, true, false};
  std::string s = detail::join_columns(cols, is_arrow);
  if (m.C1) {
    s += "\nwhere the right-hand term is the kernel of\n";
    std::vector<std::vector<std::string>> c2{zero, arrow, {"C"}, arrow, detail::stack(m.C, g), arrow,
                                             detail::stack(*m.C1, g), arrow, zero};
    s += detail::join_columns(c2, is_arrow);
  }
  return s;
}

inline std::string superscript(int d, Glyphs g) {
  if (g.ascii) return "^" + std::to_string(d);
  static const char* sup[] = {"⁰", "¹", "²", "³"};
  return d >= 0 && d <= 3 ? sup[d] : "^" + std::to_string(d);
}

inline std::string render_cell(const Cell& c, bool reduced, Glyphs g) {
  if (c.kind == Cell::Kind::Star) return "*";
  const std::string H = "H" + superscript(c.degree, g);
  if (!reduced) return H;
  switch (c.kind) {
    case Cell::Kind::Zero: return "0";
    case Cell::Kind::Value: return H + "=" + c.value.str();
    case Cell::Kind::Symbol: {
      std::string sym = c.symbol;
      if (!g.ascii) sym = sym == "gamma" ? "γ" : sym == "delta" ? "δ" : sym == "eta" ? "η" : sym;
      if (c.degree == 2) return H + "=" + sym;
      return H + "=" + c.value.str() + "+" + sym;
    }
    default: return "*";
  }
}

/// Six-column table: F-side labels on top, E-side labels below, rows q = 5..0.
inline std::string render_table(const BeilinsonTable& t, bool reduced, Glyphs g = {}) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> top, bottom;
  for (int c = 0; c < 6; ++c) {
    const int j = BeilinsonTable::j_of_col(c);
    top.push_back(render_summand(t.F.objects[j].sheaf, g));
    bottom.push_back(render_summand(t.E.objects[j].sheaf, g));
  }
  rows.push_back(top);
  for (int r = 0; r < 6; ++r) {
    std::vector<std::string> row;
    for (int c = 0; c < 6; ++c) row.push_back(render_cell(reduced ? t.cells[r][c] : t.raw[r][c], reduced, g));
    rows.push_back(row);
  }
  rows.push_back(bottom);
  std::vector<std::size_t> w(6, 1);
  for (const auto& row : rows)
    for (int c = 0; c < 6; ++c) w[c] = std::max(w[c], display_width(row[c]));
  std::string rule = "+";
  for (int c = 0; c < 6; ++c) rule += std::string(w[c] + 2, '-') + "+";
  std::ostringstream out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r == 0 || r == 1 || r == rows.size() - 1) out << rule << "\n";
    out << "|";
    for (int c = 0; c < 6; ++c) out << " " << pad(rows[r][c], w[c]) << " |";
    out << "\n";
  }
  out << rule << "\n";
  return out.str();
}

}  // namespace xe

#endif  // XE_RENDER_HPP
