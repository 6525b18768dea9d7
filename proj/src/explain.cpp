#include <algorithm>
#include <sstream>

#include "pathrw/error.hpp"
#include "pathrw/rules.hpp"

namespace pathrw {

namespace {

struct Tree {
  std::string conclusion;
  std::vector<Tree> premises;
};

// Display width of UTF-8 text; every code point counts as one column.
std::size_t width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::string pad(std::size_t n) { return std::string(n, ' '); }

struct Block {
  std::vector<std::string> lines;
  std::size_t width = 0;
};

Block render(const Tree& t) {
  std::size_t cw = width(t.conclusion);
  if (t.premises.empty()) return {{t.conclusion}, cw};

  std::vector<Block> parts;
  for (const auto& p : t.premises) parts.push_back(render(p));
  std::size_t height = 0;
  std::size_t pw = 0;
  for (const auto& b : parts) {
    height = std::max(height, b.lines.size());
    pw += b.width;
  }
  constexpr std::size_t gap = 4;
  pw += gap * (parts.size() - 1);

  std::vector<std::string> rows(height);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Block& b = parts[i];
    std::size_t offset = height - b.lines.size();
    for (std::size_t r = 0; r < height; ++r) {
      std::string cell = r >= offset ? b.lines[r - offset] : "";
      rows[r] += cell + pad(b.width - width(cell));
      if (i + 1 < parts.size()) rows[r] += pad(gap);
    }
  }

  std::size_t w = std::max(pw, cw);
  Block out;
  out.width = w;
  std::size_t left = (w - pw) / 2;
  for (auto& r : rows) out.lines.push_back(pad(left) + r);
  std::string bar;
  for (std::size_t i = 0; i < w; ++i) bar += "─";
  out.lines.push_back(bar);
  out.lines.push_back(pad((w - cw) / 2) + t.conclusion);
  return out;
}

std::string subscript(const std::string& reason) {
  return width(reason) == 1 ? "_" + reason : "_{" + reason + "}";
}

std::string eq(const std::string& a, const std::string& reason, const std::string& b) {
  return a + " =" + subscript(reason) + " " + b + " : A";
}

struct Explanation {
  std::string rule_text;
  std::vector<Tree> redex;
  std::vector<Tree> contractum;
  std::string contraction;
};

Explanation table_explanation(const std::string& base) {
  if (base == "sr") {
    return {"σ(ρ) ▷_sr ρ",
            {{eq("x", "σ(ρ)", "x"), {{eq("x", "ρ", "x"), {}}}}},
            {},
            eq("x", "σ(ρ)", "x") + " ▷_sr " + eq("x", "ρ", "x")};
  }
  if (base == "ss") {
    return {"σ(σ(r)) ▷_ss r",
            {{eq("x", "σ(σ(r))", "y"), {{eq("y", "σ(r)", "x"), {{eq("x", "r", "y"), {}}}}}}},
            {},
            eq("x", "σ(σ(r))", "y") + " ▷_ss " + eq("x", "r", "y")};
  }
  if (base == "tr") {
    return {"τ(r,σ(r)) ▷_tr ρ",
            {{eq("x", "τ(r,σ(r))", "x"), {{eq("x", "r", "y"), {}}, {eq("y", "σ(r)", "x"), {}}}}},
            {},
            eq("x", "τ(r,σ(r))", "x") + " ▷_tr " + eq("x", "ρ", "x")};
  }
  if (base == "tsr") {
    return {"τ(σ(r),r) ▷_tsr ρ",
            {{eq("y", "τ(σ(r),r)", "y"), {{eq("y", "σ(r)", "x"), {}}, {eq("x", "r", "y"), {}}}}},
            {},
            eq("y", "τ(σ(r),r)", "y") + " ▷_tsr " + eq("y", "ρ", "y")};
  }
  if (base == "trr") {
    return {"τ(r,ρ) ▷_trr r",
            {{eq("x", "τ(r,ρ)", "y"), {{eq("x", "r", "y"), {}}, {eq("y", "ρ", "y"), {}}}}},
            {},
            eq("x", "τ(r,ρ)", "y") + " ▷_trr " + eq("x", "r", "y")};
  }
  if (base == "tlr") {
    return {"τ(ρ,r) ▷_tlr r",
            {{eq("x", "τ(ρ,r)", "y"), {{eq("x", "ρ", "x"), {}}, {eq("x", "r", "y"), {}}}}},
            {},
            eq("x", "τ(ρ,r)", "y") + " ▷_tlr " + eq("x", "r", "y")};
  }
  if (base == "tt") {
    Tree tr_left{eq("x", "τ(t,r)", "w"), {{eq("x", "t", "y"), {}}, {eq("y", "r", "w"), {}}}};
    Tree left{eq("x", "τ(τ(t,r),s)", "z"), {tr_left, {eq("w", "s", "z"), {}}}};
    Tree tr_right{eq("y", "τ(r,s)", "z"), {{eq("y", "r", "w"), {}}, {eq("w", "s", "z"), {}}}};
    Tree right{eq("x", "τ(t,τ(r,s))", "z"), {{eq("x", "t", "y"), {}}, tr_right}};
    return {"τ(τ(t,r),s) ▷_tt τ(t,τ(r,s))", {left}, {right},
            eq("x", "τ(τ(t,r),s)", "z") + " ▷_tt " + eq("x", "τ(t,τ(r,s))", "z")};
  }
  throw PathError(ErrorKind::UnknownRule, "no rule named '" + base + "'");
}

void append_trees(std::ostringstream& out, const std::vector<Tree>& trees) {
  for (const auto& t : trees) {
    for (const auto& line : render(t).lines) out << "    " << line << "\n";
    out << "\n";
  }
}

}  // namespace

std::string explain_rule(std::string_view name) {
  std::string base;
  std::size_t level = 1;
  try {
    std::tie(base, level) = parse_rule_name(name);
  } catch (const PathError&) {
    throw PathError(ErrorKind::UnknownRule, "no rule named '" + std::string(name) + "'");
  }

  std::ostringstream out;
  if (auto ext = RuleSet::groupoid_complete().find(base); ext && ext->extension) {
    out << "Rule " << rule_name(base, level) << " (extension, derivable from the table rules): "
        << ext->lhs.to_string() << " ▷ " << ext->rhs.to_string() << "\n\n";
    out << "  " << ext->lhs.to_string() << "\n";
    for (const auto& s : ext->derivation) {
      out << "  " << (s.direction == Direction::Forward ? "▷_" : "◁_") << rule_name(s.rule, level) << " at "
          << position_to_string(s.local) << "  " << s.result.to_string() << "\n";
    }
    return out.str();
  }

  Explanation e = table_explanation(base);
  out << "Rule " << rule_name(base, level) << ": " << e.rule_text << "\n";
  if (level > 1) {
    out << "(instantiated at level " << level << ": x, y, w, z are level " << level - 1
        << " paths and each '=' is rw_" << level - 1 << "-equality)\n";
  }
  out << "\n";
  if (e.contractum.empty()) {
    out << "  Derivation:\n\n";
    append_trees(out, e.redex);
  } else {
    out << "  Redex derivation:\n\n";
    append_trees(out, e.redex);
    out << "  Contractum derivation:\n\n";
    append_trees(out, e.contractum);
  }
  out << "  " << e.contraction << "\n";
  return out.str();
}

}  // namespace pathrw
