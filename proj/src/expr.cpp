#include "qlat/expr.hpp"

#include <cctype>
#include <limits>

#include <json.hpp>

#include "qlat/errors.hpp"

namespace qlat {

bool Expr::operator==(const Expr& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Root: return family == o.family && n == o.n;
    case Kind::Scalar: return scalar == o.scalar;
    case Kind::Named: return name == o.name && params == o.params;
    case Kind::Perp: return children == o.children;
    case Kind::Glue: return children == o.children && glues == o.glues;
    case Kind::Literal: return gram == o.gram;
  }
  return false;
}

namespace {

constexpr int kMaxDepth = 200;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = expr(0);
    skip_space();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw SyntaxError(line, column, message);
  }
  [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Int integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer", start);
    std::string s(text_.substr(start, pos_ - start));
    if (s[0] == '+') s.erase(0, 1);
    return Int(s);
  }

  long small_integer() {
    const std::size_t start = pos_;
    Int v = integer();
    if (!v.fits_slong_p() || abs(v) > Int(1) << 40) fail("integer out of range", start);
    return v.get_si();
  }

  Rat rational(bool* had_slash = nullptr) {
    Int num = integer();
    if (had_slash) *had_slash = false;
    if (!accept('/')) return Rat(num);
    const std::size_t at = pos_;
    Int den = integer();
    if (den <= 0) fail("denominator must be positive", at);
    if (had_slash) *had_slash = true;
    return make_rat(num, den);
  }

  std::vector<long> params(std::size_t count) {
    expect('(');
    std::vector<long> out;
    for (std::size_t i = 0; i < count; ++i) {
      if (i) expect(',');
      out.push_back(small_integer());
    }
    expect(')');
    return out;
  }

  Expr literal() {
    const std::size_t start = pos_;
    expect('[');
    std::vector<RatVector> rows;
    do {
      expect('[');
      RatVector row{rational()};
      while (accept(',')) row.push_back(rational());
      expect(']');
      rows.push_back(std::move(row));
    } while (accept(','));
    expect(']');
    for (const auto& r : rows)
      if (r.size() != rows.size()) fail("gram literal must be square", start);
    Expr e;
    e.kind = Expr::Kind::Literal;
    e.gram = RatMatrix(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j) e.gram(i, j) = rows[i][j];
    return e;
  }

  GlueRef glue_ref() {
    GlueRef g;
    if (accept('[')) {
      bool slash = false;
      RatVector coords{rational(&slash)};
      bool plain = !slash;
      while (accept(',')) {
        coords.push_back(rational());
        plain = false;
      }
      expect(']');
      if (plain) {
        if (!coords[0].get_num().fits_slong_p()) fail("glue index out of range");
        g.kind = GlueRef::Kind::Index;
        g.index = coords[0].get_num().get_si();
      } else {
        g.kind = GlueRef::Kind::DualCoords;
        g.coords = std::move(coords);
      }
      return g;
    }
    const std::size_t start = pos_;
    Int one = integer();
    if (one != 1) fail("expected '[' or '1/m'", start);
    expect('/');
    const std::size_t at = pos_;
    g.kind = GlueRef::Kind::Fraction;
    g.denominator = integer();
    if (g.denominator <= 0) fail("denominator must be positive", at);
    return g;
  }

  Expr expr(int depth) {
    if (depth > kMaxDepth) fail("expression nested too deeply");
    skip_space();
    if (peek('[')) return literal();
    const std::size_t start = pos_;
    const std::string id = identifier();
    if (id.empty()) fail("expected an expression");
    Expr e;
    auto root = [&](RootFamily f) {
      e.kind = Expr::Kind::Root;
      e.family = f;
    };
    if (id == "I" || id == "A" || id == "D" || id == "Dplus") {
      root(id == "I" ? RootFamily::I : id == "A" ? RootFamily::A : id == "D" ? RootFamily::D : RootFamily::Dplus);
      e.n = params(1)[0];
    } else if (id == "E7" || id == "E8") {
      root(id == "E7" ? RootFamily::E7 : RootFamily::E8);
      e.n = id == "E7" ? 7 : 8;
    } else if (id == "s") {
      e.kind = Expr::Kind::Scalar;
      expect('(');
      e.scalar = integer();
      expect(')');
    } else if (id == "M" || id == "K" || id == "Mbig") {
      e.kind = Expr::Kind::Named;
      e.name = id;
      e.params = params(1);
    } else if (id == "Aki") {
      e.kind = Expr::Kind::Named;
      e.name = id;
      e.params = params(2);
    } else if (id == "L12" || id == "L16" || id == "M14") {
      e.kind = Expr::Kind::Named;
      e.name = id;
    } else if (id == "perp") {
      e.kind = Expr::Kind::Perp;
      expect('(');
      e.children.push_back(expr(depth + 1));
      if (!peek(',')) fail("perp needs at least two operands");
      while (accept(',')) e.children.push_back(expr(depth + 1));
      expect(')');
    } else if (id == "glue") {
      e.kind = Expr::Kind::Glue;
      expect('(');
      e.children.push_back(expr(depth + 1));
      while (accept(',')) e.children.push_back(expr(depth + 1));
      expect(';');
      e.glues.push_back(glue_ref());
      while (accept(',')) e.glues.push_back(glue_ref());
      expect(')');
      if (e.glues.size() != e.children.size())
        throw Error(ErrorCode::ArityMismatch, std::to_string(e.children.size()) + " components but " +
                                                  std::to_string(e.glues.size()) + " glue elements");
    } else {
      fail("unknown name '" + id + "'", start);
    }
    return e;
  }
};

std::string family_name(RootFamily f) {
  switch (f) {
    case RootFamily::I: return "I";
    case RootFamily::A: return "A";
    case RootFamily::D: return "D";
    case RootFamily::Dplus: return "Dplus";
    case RootFamily::E7: return "E7";
    case RootFamily::E8: return "E8";
  }
  return "?";
}

std::string print_glue(const GlueRef& g) {
  switch (g.kind) {
    case GlueRef::Kind::Index: return "[" + std::to_string(g.index) + "]";
    case GlueRef::Kind::Fraction: return "1/" + g.denominator.get_str();
    case GlueRef::Kind::DualCoords: {
      std::string s = "[";
      for (std::size_t i = 0; i < g.coords.size(); ++i) {
        if (i) s += ", ";
        s += to_string(g.coords[i]);
      }
      // a lone integer would read back as an index
      if (g.coords.size() == 1 && g.coords[0].get_den() == 1) s += "/1";
      return s + "]";
    }
  }
  return "?";
}

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse_all(); }

std::string print_expression(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Root:
      if (e.family == RootFamily::E7 || e.family == RootFamily::E8) return family_name(e.family);
      return family_name(e.family) + "(" + std::to_string(e.n) + ")";
    case Expr::Kind::Scalar: return "s(" + e.scalar.get_str() + ")";
    case Expr::Kind::Named: {
      if (e.params.empty()) return e.name;
      std::string s = e.name + "(";
      for (std::size_t i = 0; i < e.params.size(); ++i) s += (i ? "," : "") + std::to_string(e.params[i]);
      return s + ")";
    }
    case Expr::Kind::Perp: {
      std::string s = "perp(";
      for (std::size_t i = 0; i < e.children.size(); ++i) s += (i ? ", " : "") + print_expression(e.children[i]);
      return s + ")";
    }
    case Expr::Kind::Glue: {
      std::string s = "glue(";
      for (std::size_t i = 0; i < e.children.size(); ++i) s += (i ? ", " : "") + print_expression(e.children[i]);
      s += "; ";
      for (std::size_t i = 0; i < e.glues.size(); ++i) s += (i ? ", " : "") + print_glue(e.glues[i]);
      return s + ")";
    }
    case Expr::Kind::Literal: {
      std::string s = "[";
      for (std::size_t i = 0; i < e.gram.rows(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < e.gram.cols(); ++j) s += (j ? ", " : "") + to_string(e.gram(i, j));
        s += "]";
      }
      return s + "]";
    }
  }
  return "?";
}

Lattice evaluate(const Expr& e) {
  const std::string label = print_expression(e);
  switch (e.kind) {
    case Expr::Kind::Root:
      if (e.n > std::numeric_limits<int>::max() || e.n < 0) throw Error(ErrorCode::InvalidParameter, "rank out of range");
      return root_lattice({e.family, static_cast<int>(e.n)});
    case Expr::Kind::Scalar:
      if (e.scalar <= 0) throw Error(ErrorCode::InvalidParameter, "s(a) needs a >= 1");
      return diagonal_lattice({e.scalar}).with_label(label);
    case Expr::Kind::Named: {
      const auto& p = e.params;
      if (e.name == "M") return lattice_M(p[0]);
      if (e.name == "K") return lattice_K(p[0]);
      if (e.name == "Mbig") return lattice_Mbig(p[0]);
      if (e.name == "Aki") {
        if (p[1] < std::numeric_limits<int>::min() || p[1] > std::numeric_limits<int>::max())
          throw Error(ErrorCode::InvalidParameter, "A(k,i) index out of range");
        return lattice_Aki(p[0], static_cast<int>(p[1]));
      }
      if (e.name == "L12") return lattice_L12();
      if (e.name == "L16") return lattice_L16();
      return lattice_M14();
    }
    case Expr::Kind::Perp: {
      std::vector<Lattice> parts;
      for (const auto& c : e.children) parts.push_back(evaluate(c));
      return orthogonal_sum(parts).with_label(label);
    }
    case Expr::Kind::Glue: {
      GlueSpec spec;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const Expr& child = e.children[i];
        const GlueRef& ref = e.glues[i];
        switch (ref.kind) {
          case GlueRef::Kind::Index:
            if (child.kind == Expr::Kind::Root) {
              if (ref.index < 0 || ref.index > child.n + 1) throw Error(ErrorCode::IndexOutOfRange, "glue index out of range");
              spec.components.push_back(root_component({child.family, static_cast<int>(child.n)}, static_cast<int>(ref.index)));
            } else if (ref.index == 0) {
              Lattice l = evaluate(child);
              spec.components.push_back(lattice_component(l, RatVector(l.rank()), "[0]"));
            } else {
              throw Error(ErrorCode::MalformedSpec, "index glue [i] needs a root lattice component");
            }
            break;
          case GlueRef::Kind::Fraction:
            if (child.kind != Expr::Kind::Scalar) throw Error(ErrorCode::MalformedSpec, "glue 1/m needs a scalar component s(a)");
            if (child.scalar <= 0) throw Error(ErrorCode::InvalidParameter, "s(a) needs a >= 1");
            spec.components.push_back(scalar_component(child.scalar, ref.denominator));
            break;
          case GlueRef::Kind::DualCoords: {
            Lattice l = evaluate(child);
            if (ref.coords.size() != l.rank()) throw Error(ErrorCode::MalformedSpec, "glue vector length differs from component rank");
            spec.components.push_back(lattice_component(l, ref.coords, print_glue(ref)));
            break;
          }
        }
      }
      return glue(spec).with_label(label);
    }
    case Expr::Kind::Literal: return make_lattice(e.gram);
  }
  throw Error(ErrorCode::MalformedSpec, "unknown expression");
}

Lattice evaluate(std::string_view text) { return evaluate(parse_expression(text)); }

std::string lattice_to_json(const Lattice& lattice) {
  nlohmann::ordered_json j;
  j["rank"] = lattice.rank();
  nlohmann::ordered_json gram = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < lattice.rank(); ++k) row.push_back(to_string(lattice.gram()(i, k)));
    gram.push_back(std::move(row));
  }
  j["gram"] = std::move(gram);
  if (!lattice.label().empty()) j["label"] = lattice.label();
  return j.dump();
}

Lattice lattice_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidFormat, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("gram") || !j["gram"].is_array() || j["gram"].empty())
    throw Error(ErrorCode::InvalidFormat, "expected an object with a non-empty \"gram\" array");
  const auto& rows = j["gram"];
  const std::size_t n = rows.size();
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw Error(ErrorCode::InvalidFormat, "gram must be square");
    for (std::size_t k = 0; k < n; ++k) {
      const auto& v = rows[i][k];
      std::optional<Rat> r;
      if (v.is_string()) r = parse_rat(v.get<std::string>());
      else if (v.is_number_integer()) r = Rat(Int(v.dump()));
      if (!r) throw Error(ErrorCode::InvalidFormat, "gram entries must be \"p/q\" strings or integers");
      g(i, k) = *r;
    }
  }
  if (j.contains("rank") && (!j["rank"].is_number_unsigned() || j["rank"].get<std::size_t>() != n))
    throw Error(ErrorCode::InvalidFormat, "rank does not match gram");
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw Error(ErrorCode::InvalidFormat, "label must be a string");
    label = j["label"].get<std::string>();
  }
  return make_lattice(g, label);
}

}  // namespace qlat
