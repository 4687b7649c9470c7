#include <doctest.h>

#include <random>

#include "qlat/expr.hpp"
#include "qlat/morphisms.hpp"
#include "qlat/short_vectors.hpp"

using namespace qlat;

TEST_CASE("parse examples") {
  Expr m1 = parse_expression("glue(A(4), s(5); [1], 1/5)");
  CHECK(m1.kind == Expr::Kind::Glue);
  REQUIRE(m1.children.size() == 2);
  CHECK(m1.glues[0].kind == GlueRef::Kind::Index);
  CHECK(m1.glues[1].kind == GlueRef::Kind::Fraction);
  CHECK(is_isometric(evaluate(m1), root_lattice({RootFamily::I, 5})));
  Expr p = parse_expression("perp(A(2), s(5))");
  CHECK(p.kind == Expr::Kind::Perp);
  CHECK(discriminant(evaluate(p)) == 15);
  try {
    parse_expression("glue(A(11), A(5); [2])");
    FAIL("expected arity mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ArityMismatch);
  }
}

TEST_CASE("evaluate examples") {
  Lattice l16 = evaluate("L16");
  CHECK(l16.rank() == 16);
  CHECK(discriminant(l16) == 2);
  try {
    evaluate("glue(A(2), s(1); [1], 1/3)");
    FAIL("expected a non-integral result");
  } catch (const NonIntegralError& e) {
    CHECK(e.norm() == Rat(2, 3) + Rat(1, 9));
  }
  Lattice e8 = evaluate("E8");
  CHECK(discriminant(e8) == 1);
  CHECK(minimum(e8) == 2);
  CHECK(is_isometric(evaluate("glue(A(3), s(4); [2], 1/2)"), root_lattice({RootFamily::D, 4})));
  CHECK(is_isometric(evaluate("glue(E7, A(5); [1], [3])"), lattice_L12()));
  CHECK(is_isometric(evaluate("[[2,-1],[-1,2]]"), root_lattice({RootFamily::A, 2})));
  CHECK(evaluate("[[1/2]]").gram()(0, 0) == Rat(1, 2));
  // dual coordinates: [1] of A2 written out
  CHECK(is_isometric(evaluate("glue(A(2), s(3); [2/3, 1/3], 1/3)"), root_lattice({RootFamily::I, 3})));
  CHECK_THROWS_AS(evaluate("glue(A(2), s(3); 1/3, [1])"), Error);
  CHECK_THROWS_AS(evaluate("[[2,1],[1,0]]"), Error);
  CHECK_THROWS_AS(evaluate("[[2,1],[0,2]]"), Error);
  CHECK_THROWS_AS(evaluate("s(0)"), Error);
  CHECK_THROWS_AS(evaluate("D(3)"), Error);
  CHECK_THROWS_AS(evaluate("Mbig(1)"), Error);
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_expression("perp(A(2),\n  B(3))");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  for (const char* bad : {"", "A", "A(", "A(2", "perp(A(2))", "glue(A(2); )", "glue(A(2); 2/3)", "[[1,2],[3]]",
                          "[[1/0]]", "E8 E8", "s(x)", "Aki(1)", "M(99999999999999999999)", "glue(A(2), s(3); [1] 1/3)"}) {
    CHECK_THROWS_AS(parse_expression(bad), SyntaxError);
  }
}

namespace {

Expr random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> kind(0, depth > 2 ? 3 : 5), small(1, 9), sign(-3, 3);
  Expr e;
  switch (kind(rng)) {
    case 0:
      e.kind = Expr::Kind::Root;
      e.family = std::array{RootFamily::I, RootFamily::A, RootFamily::D, RootFamily::Dplus}[small(rng) % 4];
      e.n = small(rng);
      break;
    case 1:
      e.kind = Expr::Kind::Scalar;
      e.scalar = small(rng);
      break;
    case 2:
      e.kind = Expr::Kind::Named;
      e.name = std::array{"M", "K", "Aki", "L12", "Mbig"}[small(rng) % 5];
      if (e.name == "Aki") e.params = {sign(rng), small(rng)};
      else if (e.name != "L12") e.params = {small(rng)};
      break;
    case 3: {
      e.kind = Expr::Kind::Literal;
      std::size_t n = 1 + small(rng) % 3;
      e.gram = RatMatrix(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e.gram(i, j) = make_rat(sign(rng), small(rng));
      break;
    }
    case 4:
      e.kind = Expr::Kind::Perp;
      for (int i = 0, k = 2 + small(rng) % 2; i < k; ++i) e.children.push_back(random_expr(rng, depth + 1));
      break;
    default:
      e.kind = Expr::Kind::Glue;
      for (int i = 0, k = 1 + small(rng) % 3; i < k; ++i) {
        e.children.push_back(random_expr(rng, depth + 1));
        GlueRef g;
        switch (small(rng) % 3) {
          case 0: g.index = small(rng); break;
          case 1:
            g.kind = GlueRef::Kind::Fraction;
            g.denominator = small(rng);
            break;
          default:
            g.kind = GlueRef::Kind::DualCoords;
            for (int c = 0, m = 1 + small(rng) % 3; c < m; ++c) g.coords.push_back(make_rat(sign(rng), small(rng)));
        }
        e.glues.push_back(std::move(g));
      }
  }
  return e;
}

}  // namespace

TEST_CASE("print then parse is the identity on syntax trees") {
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    Expr e = random_expr(rng, 0);
    const std::string text = print_expression(e);
    Expr back = parse_expression(text);
    CHECK_MESSAGE(back == e, text);
    CHECK(print_expression(back) == text);
  }
}

TEST_CASE("parser never fails outside its error types") {
  std::mt19937 rng(9);
  const std::string alphabet = "AIDEKMLsperpglueDplusAki0123456789-+/[](),; \n\t7812";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1), len(0, 40);
  std::vector<std::string> seeds{"glue(A(4), s(20); [1], 1/5)", "perp(A(2), s(5))", "[[2,-1],[-1,2]]", "Aki(-1,4)"};
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    if (i % 2 == 0) {
      for (std::size_t k = 0, n = len(rng); k < n; ++k) s += alphabet[pick(rng)];
    } else {
      s = seeds[i % seeds.size()];
      std::uniform_int_distribution<std::size_t> at(0, s.size() - 1);
      for (int m = 0; m < 3; ++m) s[at(rng)] = alphabet[pick(rng)];
    }
    try {
      parse_expression(s);
    } catch (const SyntaxError&) {
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ArityMismatch);
    }
  }
  // deep nesting is refused, not a stack overflow
  std::string deep;
  for (int i = 0; i < 5000; ++i) deep += "perp(";
  CHECK_THROWS_AS(parse_expression(deep), SyntaxError);
}

TEST_CASE("json round trip of named lattices") {
  for (const auto& named : named_lattice_table()) {
    const std::string json = lattice_to_json(named.lattice);
    Lattice back = lattice_from_json(json);
    CHECK(back == named.lattice);
    // re-entered as a gram literal
    std::string literal = "[";
    for (std::size_t i = 0; i < back.rank(); ++i) {
      literal += i ? ",[" : "[";
      for (std::size_t j = 0; j < back.rank(); ++j) literal += (j ? "," : "") + to_string(back.gram()(i, j));
      literal += "]";
    }
    literal += "]";
    CHECK_MESSAGE(is_isometric(evaluate(literal), named.lattice), named.name);
  }
  CHECK(lattice_to_json(evaluate("[[1/2, 0], [0, 3]]")) == R"({"rank":2,"gram":[["1/2","0"],["0","3"]]})");
  CHECK(lattice_from_json(R"({"gram":[[2,1],[1,2]]})").rank() == 2);
  for (const char* bad : {"", "{}", "[1]", R"({"gram":[[1,2]]})", R"({"gram":[["x"]]})", R"({"rank":3,"gram":[["1"]]})",
                          R"({"gram":[["1"]],"label":5})"})
    CHECK_THROWS_AS(lattice_from_json(bad), Error);
  CHECK_THROWS_AS(lattice_from_json(R"({"gram":[["1","2"],["2","1"]]})"), Error);
}
