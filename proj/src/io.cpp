#include "radhom/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace radhom {

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> split_tokens(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

int parse_int(const Token& t, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(t.text, &used);
    if (used != t.text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw PresentationError("expected an integer, got '" + t.text + "'", line, t.column);
  }
}

bool looks_numeric(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])) && s[i] != '/') return false;
  return true;
}

}  // namespace

AlgebraPtr parse_algebra(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::optional<Field> field;
  std::optional<int> nilbound;
  std::optional<int> vertices;
  Quiver q;
  struct PendingRel {
    std::vector<Token> tokens;
    int line;
  };
  std::vector<PendingRel> pending;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = split_tokens(line);
    if (toks.empty() || toks[0].text[0] == '#') continue;
    const std::string& kw = toks[0].text;
    auto need = [&](std::size_t n) {
      if (toks.size() != n)
        throw PresentationError(kw + " expects " + std::to_string(n - 1) + " argument(s)", lineno,
                                toks.size() > n ? toks[n].column : static_cast<int>(line.size()) + 1);
    };
    if (kw == "FIELD") {
      need(2);
      if (field) throw PresentationError("duplicate FIELD line", lineno, 1);
      try {
        field = Field::parse(toks[1].text);
      } catch (const ContractViolation& e) {
        throw PresentationError(e.what(), lineno, toks[1].column);
      }
    } else if (kw == "NILBOUND") {
      need(2);
      if (nilbound) throw PresentationError("duplicate NILBOUND line", lineno, 1);
      nilbound = parse_int(toks[1], lineno);
      if (*nilbound < 2) throw PresentationError("NILBOUND must be at least 2", lineno, toks[1].column);
    } else if (kw == "VERTICES") {
      need(2);
      if (vertices) throw PresentationError("duplicate VERTICES line", lineno, 1);
      vertices = parse_int(toks[1], lineno);
      if (*vertices < 1) throw PresentationError("VERTICES must be positive", lineno, toks[1].column);
      q.vertices = *vertices;
    } else if (kw == "ARROW") {
      need(4);
      if (!vertices) throw PresentationError("ARROW before VERTICES", lineno, 1);
      if (!is_identifier(toks[1].text))
        throw PresentationError("arrow name '" + toks[1].text + "' is not an identifier", lineno, toks[1].column);
      for (const auto& a : q.arrows)
        if (a.name == toks[1].text) throw PresentationError("duplicate arrow '" + a.name + "'", lineno, toks[1].column);
      int s = parse_int(toks[2], lineno), t = parse_int(toks[3], lineno);
      if (s < 0 || s >= *vertices) throw PresentationError("source out of range", lineno, toks[2].column);
      if (t < 0 || t >= *vertices) throw PresentationError("target out of range", lineno, toks[3].column);
      q.arrows.push_back({toks[1].text, s, t});
    } else if (kw == "REL") {
      if (toks.size() < 2) throw PresentationError("empty relation", lineno, static_cast<int>(line.size()) + 1);
      pending.push_back({std::vector<Token>(toks.begin() + 1, toks.end()), lineno});
    } else {
      throw PresentationError("unknown keyword '" + kw + "'", lineno, toks[0].column);
    }
  }
  if (!field) throw PresentationError("missing FIELD line", lineno + 1, 1);
  if (!nilbound) throw PresentationError("missing NILBOUND line", lineno + 1, 1);
  if (!vertices) throw PresentationError("missing VERTICES line", lineno + 1, 1);

  std::vector<Relation> rels;
  std::vector<int> rel_line;
  for (const auto& pr : pending) {
    Relation rel;
    bool negate = false;
    bool expect_term = true;
    for (const auto& t : pr.tokens) {
      if (t.text == "+" || t.text == "-") {
        if (expect_term) throw PresentationError("dangling '" + t.text + "'", pr.line, t.column);
        negate = t.text == "-";
        expect_term = true;
        continue;
      }
      if (!expect_term) throw PresentationError("expected '+' or '-' between terms", pr.line, t.column);
      std::string body = t.text;
      Scalar coeff(*field, 1);
      std::size_t star = body.find('*');
      std::string first = body.substr(0, star);
      if (looks_numeric(first)) {
        try {
          coeff = Scalar::parse(*field, first[0] == '+' ? first.substr(1) : first);
        } catch (const ContractViolation& e) {
          throw PresentationError(e.what(), pr.line, t.column);
        }
        if (star == std::string::npos) throw PresentationError("coefficient without a path", pr.line, t.column);
        body = body.substr(star + 1);
      }
      if (negate) coeff = -coeff;
      Path p;
      try {
        p = parse_path(q, body);
      } catch (const PresentationError& e) {
        throw PresentationError(e.what(), pr.line, t.column);
      }
      if (!coeff.is_zero()) rel.terms.push_back({coeff, p});
      negate = false;
      expect_term = false;
    }
    if (expect_term) throw PresentationError("relation ends without a term", pr.line, pr.tokens.back().column);
    rels.push_back(std::move(rel));
    rel_line.push_back(pr.line);
  }
  // Build once per relation to pin diagnostics to a line, then the whole thing.
  for (std::size_t r = 0; r < rels.size(); ++r) {
    try {
      build_algebra(q, {rels[r]}, *nilbound, *field);
    } catch (const PresentationError& e) {
      if (std::string(e.what()).find("path space") == std::string::npos) throw PresentationError(e.what(), rel_line[r], 1);
      throw;
    }
  }
  return build_algebra(std::move(q), std::move(rels), *nilbound, *field);
}

AlgebraPtr load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PresentationError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

std::string print_algebra(const Algebra& a) {
  std::ostringstream os;
  os << "FIELD " << a.field().token() << '\n';
  os << "NILBOUND " << a.nilbound() << '\n';
  os << "VERTICES " << a.vertex_count() << '\n';
  for (const auto& ar : a.quiver().arrows) os << "ARROW " << ar.name << ' ' << ar.source << ' ' << ar.target << '\n';
  for (const auto& rel : a.relations()) {
    os << "REL";
    for (std::size_t i = 0; i < rel.terms.size(); ++i) {
      if (i) os << " +";
      os << ' ' << rel.terms[i].coeff.str() << '*' << path_text(a.quiver(), rel.terms[i].path);
    }
    os << '\n';
  }
  return os.str();
}

std::uint64_t fingerprint(const Algebra& a) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : print_algebra(a)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fingerprint_hex(const Algebra& a) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fingerprint(a)));
  return buf;
}

}  // namespace radhom
