// Module files: a line-oriented text format for bigraded presentations.
//
//   field Q                      optional: Q, Fp:<p>, Qt, Fpt:<p>
//   vars x y                     or: n 1  (gives x0..xn)
//   params a:1 b:2               optional, name:weight (weight defaults to 1)
//   gens
//     <name> <internal> <param>  one line per generator
//   relations
//     <entry>, <entry>, ...      one row per generator, one column per relation
//
// '#' starts a comment. See docs/format.md.

#pragma once

#include <sstream>

#include "tate/module.hpp"
#include "tate/poly_parse.hpp"

namespace tate {

namespace detail {

struct SourceLine {
  int number;
  std::string text;  // comment removed
};

inline std::vector<SourceLine> source_lines(const std::string& text) {
  std::vector<SourceLine> out;
  std::istringstream is(text);
  std::string l;
  for (int k = 1; std::getline(is, l); ++k) {
    if (auto h = l.find('#'); h != std::string::npos) l.erase(h);
    if (!l.empty() && l.back() == '\r') l.pop_back();
    out.push_back({k, l});
  }
  return out;
}

inline std::vector<std::pair<int, std::string>> words(const std::string& s) {
  std::vector<std::pair<int, std::string>> w;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    size_t j = i;
    while (j < s.size() && !std::isspace((unsigned char)s[j])) ++j;
    if (j > i) w.emplace_back((int)i + 1, s.substr(i, j - i));
    i = j;
  }
  return w;
}

[[noreturn]] inline void parse_fail(int line, int col, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg);
}

inline int parse_int(int line, int col, const std::string& s) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  parse_fail(line, col, "expected an integer, found '" + s + "'");
}

}  // namespace detail

/// The `field` header line, if present.
inline std::optional<std::string> module_file_field(const std::string& text) {
  for (const auto& [n, l] : detail::source_lines(text)) {
    auto w = detail::words(l);
    if (w.size() >= 2 && w[0].second == "field") return w[1].second;
  }
  return std::nullopt;
}

template <class F>
ModulePresentation<F> parse_module_file(const std::string& text) {
  using detail::parse_fail;
  auto lines = detail::source_lines(text);
  Ring R;
  bool have_vars = false;
  enum { Header, Gens, Relations } section = Header;
  std::vector<Bidegree> gens;
  std::vector<std::string> names;
  std::vector<std::pair<int, std::vector<std::pair<int, std::string>>>> rows;  // line, (col, entry text)

  for (const auto& [ln, l] : lines) {
    auto w = detail::words(l);
    if (w.empty()) continue;
    const std::string& key = w[0].second;
    if (key == "gens" || key == "relations") {
      if (w.size() > 1) parse_fail(ln, w[1].first, "unexpected text after '" + key + "'");
      if (!have_vars) parse_fail(ln, 1, "variables must be declared before '" + key + "'");
      if (key == "gens" && section != Header) parse_fail(ln, 1, "'gens' must come right after the header");
      if (key == "relations" && section != Gens) parse_fail(ln, 1, "'relations' must follow 'gens'");
      section = key == "gens" ? Gens : Relations;
      continue;
    }
    if (section == Header) {
      if (key == "field") {
        if (w.size() != 2) parse_fail(ln, 1, "expected 'field <name>'");
      } else if (key == "vars" || key == "n") {
        if (have_vars) parse_fail(ln, 1, "variables declared twice");
        if (w.size() < 2) parse_fail(ln, 1, "expected at least one variable");
        if (key == "n") {
          if (w.size() != 2) parse_fail(ln, 1, "expected 'n <integer>'");
          int n = detail::parse_int(ln, w[1].first, w[1].second);
          if (n < 0) parse_fail(ln, w[1].first, "n must be nonnegative");
          R.x = Ring::projective(n).x;
        } else {
          for (size_t k = 1; k < w.size(); ++k) R.x.push_back(w[k].second);
        }
        have_vars = true;
      } else if (key == "params") {
        for (size_t k = 1; k < w.size(); ++k) {
          auto [col, s] = w[k];
          auto c = s.find(':');
          R.params.push_back(s.substr(0, c));
          R.weights.push_back(c == std::string::npos ? 1 : detail::parse_int(ln, col + (int)c + 1, s.substr(c + 1)));
        }
      } else {
        parse_fail(ln, w[0].first, "unknown header keyword '" + key + "'");
      }
      try {
        if (have_vars) R.validate();
      } catch (const std::invalid_argument& e) {
        parse_fail(ln, 1, e.what());
      }
    } else if (section == Gens) {
      if (w.size() != 3) parse_fail(ln, w[0].first, "expected '<name> <internal degree> <param degree>'");
      names.push_back(w[0].second);
      gens.push_back({detail::parse_int(ln, w[1].first, w[1].second), detail::parse_int(ln, w[2].first, w[2].second)});
      if (!R.has_params() && gens.back().param != 0)
        parse_fail(ln, w[2].first, "param degree must be 0 without parameters");
    } else {
      auto& row = rows.emplace_back(ln, std::vector<std::pair<int, std::string>>{});
      size_t start = 0;
      for (;;) {
        size_t comma = l.find(',', start);
        std::string piece = l.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        size_t lead = piece.find_first_not_of(" \t");
        if (lead == std::string::npos) parse_fail(ln, (int)start + 1, "empty entry");
        row.second.emplace_back((int)(start + lead) + 1, piece);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
  }
  if (!have_vars) parse_fail(lines.empty() ? 1 : lines.back().number, 1, "missing 'vars' or 'n'");
  if (section == Header) parse_fail(lines.empty() ? 1 : lines.back().number, 1, "missing 'gens'");
  if (!rows.empty() && rows.size() != gens.size())
    parse_fail(rows.back().first, 1,
               "relation matrix has " + std::to_string(rows.size()) + " rows for " + std::to_string(gens.size()) + " generators");
  const size_t ncols = rows.empty() ? 0 : rows[0].second.size();
  std::vector<std::vector<Poly<F>>> cols(ncols, std::vector<Poly<F>>(gens.size()));
  std::vector<std::optional<Bidegree>> coldeg(ncols);
  for (size_t r = 0; r < rows.size(); ++r) {
    const auto& [ln, entries] = rows[r];
    if (entries.size() != ncols)
      parse_fail(ln, 1, "row has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(ncols));
    for (size_t c = 0; c < ncols; ++c) {
      const auto& [col, s] = entries[c];
      Poly<F> p = PolyParser<F>(R, s, ln, col - 1 - (int)s.find_first_not_of(" \t")).parse();
      for (const auto& [e, coef] : p.terms) {
        Bidegree d = gens[r] + R.degree(e);
        if (!coldeg[c]) coldeg[c] = d;
        if (d != *coldeg[c])
          throw Error(ErrorCode::InhomogeneousEntry,
                      "line " + std::to_string(ln) + ", col " + std::to_string(col) + ": term " + monomial_string(R, e) +
                          " has bidegree " + R.degree(e).to_string() + ", the slot needs " +
                          (*coldeg[c] - gens[r]).to_string());
      }
      cols[c][r] = std::move(p);
    }
  }
  return build_presentation<F>(R, gens, cols, names);
}

/// Inverse of parse_module_file (up to whitespace and comments).
template <class F>
std::string print_module_file(const ModulePresentation<F>& M, const std::string& field = FieldTraits<F>::name()) {
  std::ostringstream os;
  const Ring& R = M.ring;
  os << "field " << field << "\nvars";
  for (const auto& x : R.x) os << " " << x;
  os << "\n";
  if (R.has_params()) {
    os << "params";
    for (int k = 0; k < R.np(); ++k) os << " " << R.params[k] << ":" << R.weights[k];
    os << "\n";
  }
  os << "gens\n";
  for (int g = 0; g < M.num_gens(); ++g)
    os << "  " << M.gen_names[g] << " " << M.gens[g].internal << " " << M.gens[g].param << "\n";
  if (M.num_relations() == 0) return os.str();
  os << "relations\n";
  for (int g = 0; g < M.num_gens(); ++g) {
    os << " ";
    for (int c = 0; c < M.num_relations(); ++c) os << (c ? ", " : " ") << to_string(R, M.relations[c][g]);
    os << "\n";
  }
  return os.str();
}

template <class F>
bool same_presentation(const ModulePresentation<F>& A, const ModulePresentation<F>& B) {
  return A.ring == B.ring && A.gens == B.gens && A.gen_names == B.gen_names && A.relations == B.relations &&
         A.relation_degrees == B.relation_degrees;
}

}  // namespace tate
