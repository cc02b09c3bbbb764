//
// Copyright (c) 2026 - present, aspkit contributors
//
// This file is part of aspkit.
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//

#include "test_support.h"

#include <aspkit/lexer.h>
#include <aspkit/parser.h>

#include <catch_amalgamated.hpp>

#include <random>

namespace aspkit::test {

static std::vector<TokenKind> kinds(const std::vector<Token>& tokens) {
	std::vector<TokenKind> out;
	for (const auto& t : tokens) out.push_back(t.kind);
	return out;
}

TEST_CASE("tokenize", "[frontend]") {
	using K = TokenKind;
	SECTION("rule") {
		auto toks = tokenize("p(X) :- q(X).");
		REQUIRE(kinds(toks) == std::vector<K>{K::Identifier, K::LParen, K::Variable, K::RParen, K::Arrow, K::Identifier,
		                                      K::LParen, K::Variable, K::RParen, K::Dot, K::End});
		CHECK(toks[0].text == "p");
		CHECK(toks[2].text == "X");
	}
	SECTION("range") {
		auto toks = tokenize("d(1..n).");
		REQUIRE(kinds(toks) == std::vector<K>{K::Identifier, K::LParen, K::Number, K::DotDot, K::Identifier, K::RParen,
		                                      K::Dot, K::End});
		CHECK(toks[2].value == 1);
		CHECK(toks[4].text == "n");
	}
	SECTION("comment") {
		auto toks = tokenize("% comment\na.");
		REQUIRE(kinds(toks) == std::vector<K>{K::Identifier, K::Dot, K::End});
		CHECK(toks[0].pos.line == 2);
		CHECK(toks[0].pos.column == 1);
	}
	SECTION("operators") {
		auto toks = tokenize(":- == != <= >= < > = + - * / ; : , [ ] { }");
		REQUIRE(kinds(toks) == std::vector<K>{K::Arrow, K::Eq, K::Ne, K::Le, K::Ge, K::Lt, K::Gt, K::Assign, K::Plus,
		                                      K::Minus, K::Star, K::Slash, K::Semicolon, K::Colon, K::Comma,
		                                      K::LBracket, K::RBracket, K::LBrace, K::RBrace, K::End});
	}
	SECTION("positions") {
		auto toks = tokenize("a.\n  bb(X).");
		CHECK(toks[2].pos.line == 2);
		CHECK(toks[2].pos.column == 3);
		CHECK(toks[4].pos.column == 6);
	}
	SECTION("illegal character") {
		try {
			tokenize("p :- q & r.");
			FAIL("expected LexError");
		}
		catch (const LexError& e) {
			CHECK(e.position().line == 1);
			CHECK(e.position().column == 8);
		}
	}
	SECTION("number overflow") { CHECK_THROWS_AS(tokenize("p(99999999999999999999)."), LexError); }
}

TEST_CASE("parse", "[frontend]") {
	SECTION("cardinality head with conditional") {
		auto prg = parseProgram("1 { q(X,Y):d(X) } 1 :- d(Y).");
		REQUIRE(prg.rules.size() == 1);
		const Rule& r = prg.rules[0];
		REQUIRE(r.head.kind == HeadKind::Aggregate);
		const Aggregate& a = r.head.aggregate;
		CHECK_FALSE(a.weighted);
		CHECK(a.lower == Term::integer(1));
		CHECK(a.upper == Term::integer(1));
		REQUIRE(a.elements.size() == 1);
		const Literal& e = a.elements[0].literal;
		CHECK(e.kind == LiteralKind::Conditional);
		CHECK(toString(e.atom) == "q(X,Y)");
		REQUIRE(e.conditions.size() == 1);
		CHECK(toString(e.conditions[0]) == "d(X)");
		REQUIRE(r.body.size() == 1);
		CHECK(toString(std::get<Literal>(r.body[0]).atom) == "d(Y)");
	}
	SECTION("integrity") {
		auto prg = parseProgram(":- a, not b.");
		REQUIRE(prg.rules.size() == 1);
		const Rule& r = prg.rules[0];
		CHECK(r.head.kind == HeadKind::Integrity);
		REQUIRE(r.body.size() == 2);
		CHECK_FALSE(std::get<Literal>(r.body[0]).negative);
		CHECK(std::get<Literal>(r.body[1]).negative);
		CHECK(std::get<Literal>(r.body[1]).atom.predicate == "b");
	}
	SECTION("pool") {
		auto prg = parseProgram("node(a ; b; c).");
		REQUIRE(prg.rules.size() == 1);
		CHECK(prg.rules[0].isFact());
		const Atom& a = prg.rules[0].head.atom;
		REQUIRE(a.args.size() == 1);
		CHECK(a.args[0] == Term::pool({Term::symbol("a"), Term::symbol("b"), Term::symbol("c")}));
	}
	SECTION("weight body") {
		auto prg = parseProgram("h :- 10 [a=6, not b=5].");
		const auto& agg = std::get<Aggregate>(prg.rules[0].body[0]);
		CHECK(agg.weighted);
		CHECK(agg.lower == Term::integer(10));
		CHECK_FALSE(agg.upper);
		REQUIRE(agg.elements.size() == 2);
		CHECK(agg.elements[0].weight == Term::integer(6));
		CHECK(agg.elements[1].literal.negative);
		CHECK(agg.elements[1].weight == Term::integer(5));
	}
	SECTION("arithmetic precedence") {
		auto prg = parseProgram("p(X) :- d(X), X == 1 + 2 * 3 - -4 / abs(X).");
		const auto& cmp = std::get<Literal>(prg.rules[0].body[1]);
		REQUIRE(cmp.kind == LiteralKind::Comparison);
		CHECK(toString(cmp.rhs) == "((1+(2*3))-(-4/abs(X)))");
	}
	SECTION("compute statement") {
		auto prg = parseProgram("a. compute 3 { a, not b }.");
		REQUIRE(prg.compute);
		CHECK(prg.compute->models == 3);
		REQUIRE(prg.compute->literals.size() == 2);
		CHECK(prg.compute->literals[1].negative);
	}
	SECTION("const declaration") {
		auto prg = parseProgram("#const n = 8. d(1..n).");
		CHECK(prg.constants.at("n") == 8);
	}
	SECTION("missing dot") {
		try {
			parseProgram("a :- b\nc.");
			FAIL("expected ParseError");
		}
		catch (const ParseError& e) {
			CHECK(e.kind() == ParseError::Kind::MissingDot);
		}
	}
	SECTION("unexpected token") {
		try {
			parseProgram("p(X :- q.");
			FAIL("expected ParseError");
		}
		catch (const ParseError& e) {
			CHECK(e.kind() == ParseError::Kind::Unexpected);
			CHECK(e.position().line == 1);
			CHECK(e.position().column == 5);
			CHECK(e.found() == "':-'");
		}
	}
	SECTION("two compute statements") {
		CHECK_THROWS_AS(parseProgram("compute { a }. compute { b }."), ParseError);
	}
}

TEST_CASE("substitute constants", "[frontend]") {
	SECTION("range bound") {
		auto prg = substituteConstants(parseProgram("d(1..n)."), {{"n", 8}});
		CHECK(toString(prg.rules[0]) == "d(1..8).");
	}
	SECTION("unbound stays symbolic") {
		auto in  = parseProgram("d(1..n). p(n).");
		CHECK(substituteConstants(in, {}) == in);
	}
	SECTION("plain argument") {
		auto prg = substituteConstants(parseProgram("p(n)."), {{"n", 3}});
		CHECK(toString(prg.rules[0]) == "p(3).");
	}
	SECTION("command line wins over declaration") {
		auto prg = substituteConstants(parseProgram("#const n = 2. p(n)."), {{"n", 5}});
		CHECK(toString(prg.rules[0]) == "p(5).");
		auto decl = substituteConstants(parseProgram("#const n = 2. p(n)."), {});
		CHECK(toString(decl.rules[0]) == "p(2).");
	}
}

TEST_CASE("corpus programs parse and print back", "[frontend]") {
	for (const char* file : {"ancestor.lp", "queens.lp", "ncolor.lp", "graph.lp", "weights.lp", "hamilton.lp", "wfs.lp",
	                         "choice.lp"}) {
		CAPTURE(file);
		auto prg = parseProgram(readFile(corpusPath(file)), file);
		CHECK_FALSE(prg.rules.empty());
		CHECK(parseProgram(toString(prg)) == prg);
	}
}

TEST_CASE("pretty printing round trip on random programs", "[frontend]") {
	std::mt19937_64 rng(3);
	auto            pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
	const char*     preds[] = {"p", "q", "r"};
	const char*     terms[] = {"X", "Y", "a", "b", "1", "X+1", "abs(Y-2)", "-3", "1..3", "(a;b)"};
	for (int i = 0; i != 200; ++i) {
		std::string text;
		for (int r = 0, rules = 1 + pick(4); r != rules; ++r) {
			auto atom = [&] {
				std::string a = preds[pick(3)];
				a += "(";
				a += terms[pick(10)];
				return a + ")";
			};
			switch (pick(4)) {
				case 0: text += atom(); break;
				case 1: text += "1 { " + atom() + " : d(X), " + atom() + " } 2"; break;
				case 2: text += "0 [ " + atom() + "=2, not " + atom() + "=3 ]"; break;
				default: break;
			}
			text += " :- d(X), d(Y), not " + atom() + ", X < Y, 1 { " + atom() + ", not " + atom() + " }.\n";
		}
		CAPTURE(text);
		ProgramAst prg;
		try {
			prg = parseProgram(text);
		}
		catch (const ParseError&) {
			continue;
		}
		CHECK(parseProgram(toString(prg)) == prg);
		CHECK(parseProgram(text) == prg);
	}
}

} // namespace aspkit::test
