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

#include <aspkit/translate.h>

#include <catch_amalgamated.hpp>

#include <random>

namespace aspkit::test {

namespace {
using R = PrimitiveRule;

GroundProgram program(std::vector<R> rules, int atoms) {
	GroundProgram p;
	for (int i = 0; i != atoms; ++i) p.symbols.intern(std::string(1, static_cast<char>('a' + i)));
	p.rules = std::move(rules);
	return p;
}
} // namespace

TEST_CASE("reduct", "[oracle]") {
	SECTION("constraint with a satisfied negative literal") {
		// h :- 1 { a, not b }.  M = {h}
		CHECK(reduct({R::constraint(4, 1, {2}, {3})}, {4}) == ReductProgram{{4, 0, {2}, {1}}});
	}
	SECTION("positive rules are unchanged") {
		CHECK(reduct({R::basic(2, {3, 4}, {})}, {}) == ReductProgram{{2, 2, {3, 4}, {1, 1}}});
		CHECK(reduct({R::weight(2, 4, {3, 4}, {1, 3}, {}, {})}, {2}) == ReductProgram{{2, 4, {3, 4}, {1, 3}}});
	}
	SECTION("choice") {
		// { a, b } :- not c.  M = {a}
		CHECK(reduct({R::choice({2, 3}, {}, {4})}, {2}) == ReductProgram{{2, 0, {}, {}}});
		CHECK(reduct({R::choice({2, 3}, {}, {4})}, {2, 4}).empty());
	}
	SECTION("basic rule blocked by the model") {
		CHECK(reduct({R::basic(2, {}, {3})}, {3}).empty());
	}
	SECTION("weight bound never drops below zero") {
		CHECK(reduct({R::weight(2, 3, {3}, {2}, {4}, {5})}, {}) == ReductProgram{{2, 0, {3}, {2}}});
		CHECK(reduct({R::weight(2, 3, {3}, {2}, {4}, {5})}, {4}) == ReductProgram{{2, 3, {3}, {2}}});
	}
}

TEST_CASE("least model", "[oracle]") {
	CHECK(leastModel({{2, 0, {}, {}}, {3, 1, {2}, {1}}}) == AtomSet{2, 3});
	CHECK(leastModel({{4, 0, {2}, {1}}}) == AtomSet{4});
	CHECK(leastModel({{4, 5, {2}, {6}}, {2, 0, {}, {}}}) == AtomSet{2, 4});
	CHECK(leastModel({{4, 5, {2}, {4}}, {2, 0, {}, {}}}) == AtomSet{2});
	CHECK(leastModel({}).empty());
}

TEST_CASE("stability", "[oracle]") {
	SECTION("even loop") {
		auto p = program({R::basic(2, {}, {3}), R::basic(3, {}, {2})}, 2);
		CHECK(isStable(p, {2}));
		CHECK(isStable(p, {3}));
		CHECK_FALSE(isStable(p, {2, 3}));
		CHECK_FALSE(isStable(p, {}));
	}
	SECTION("odd loop") {
		auto p = program({R::basic(2, {}, {2})}, 1);
		CHECK_FALSE(isStable(p, {}));
		CHECK_FALSE(isStable(p, {2}));
	}
	SECTION("falsity atom and compute statement") {
		auto p = program({R::choice({2, 3}, {}, {}), R::basic(kFalseAtom, {2, 3}, {})}, 2);
		CHECK_FALSE(isStable(p, {2, 3}));
		CHECK_FALSE(isStable(p, {kFalseAtom}));
		p.compute.requiredTrue = {3};
		CHECK_FALSE(isStable(p, {2}));
		CHECK(isStable(p, {3}));
		p.compute.requiredFalse = {3};
		CHECK_FALSE(isStable(p, {3}));
	}
	SECTION("coloring answer") {
		auto out = groundCorpus({"ncolor.lp", "graph.lp"});
		CHECK(verifyModel(out.program, {"node(a)", "node(b)", "node(c)", "edge(a,b)", "edge(a,c)", "edge(b,c)", "color(red)",
		                                "color(green)", "color(blue)", "col(a,red)", "col(b,green)", "col(c,blue)"}));
		std::string reason;
		CHECK_FALSE(verifyModel(out.program,
		                        {"node(a)", "node(b)", "node(c)", "edge(a,b)", "edge(a,c)", "edge(b,c)", "color(red)",
		                         "color(green)", "color(blue)", "col(a,red)", "col(b,red)", "col(c,blue)"},
		                        &reason));
		CHECK_FALSE(reason.empty());
	}
}

TEST_CASE("brute force", "[oracle]") {
	SECTION("even loop") {
		CHECK(bruteForceModels(program({R::basic(2, {}, {3}), R::basic(3, {}, {2})}, 2)) ==
		      std::vector<AtomSet>{{2}, {3}});
	}
	SECTION("empty program") { CHECK(bruteForceModels(GroundProgram{}) == std::vector<AtomSet>{{}}); }
	SECTION("translated choice") {
		GroundingResult g;
		g.symbols.intern("a");
		g.symbols.intern("b");
		GroundRule rule;
		rule.headKind                = GroundHeadKind::Aggregate;
		rule.headAggregate.lower     = 1;
		rule.headAggregate.upper     = 1;
		rule.headAggregate.elements  = {{2, false, 1}, {3, false, 1}};
		g.rules.push_back(rule);
		auto p = translateProgram(g);
		CHECK(named(p.symbols, bruteForceModels(p)) == std::vector<NameSet>{names({"a"}), names({"b"})});
		CHECK(bruteForceSourceModels(g.rules, {}) == std::vector<AtomSet>{{2}, {3}});
	}
	SECTION("cap") {
		std::vector<R> rules;
		for (AtomId a = 2; a != 23; ++a) rules.push_back(R::basic(a, {}, {}));
		CHECK_THROWS_AS(bruteForceModels(program(rules, 21)), CapExceeded);
		rules.resize(4);
		CHECK_THROWS_AS(bruteForceModels(program(rules, 4), 3), CapExceeded);
		CHECK(bruteForceModels(program(rules, 4), 4) == std::vector<AtomSet>{{2, 3, 4, 5}});
	}
	SECTION("models are stable and form an antichain") {
		std::mt19937_64 rng(55);
		for (int i = 0; i != 200; ++i) {
			auto p      = randomNormalProgram(rng, 7, 10);
			auto models = bruteForceModels(p);
			for (const auto& m : models) {
				CHECK(isStable(p, m));
				for (const auto& o : models) {
					if (o != m) CHECK_FALSE(std::includes(m.begin(), m.end(), o.begin(), o.end()));
				}
			}
		}
	}
}

TEST_CASE("source-level stability", "[oracle]") {
	auto lit = [](AtomId a, bool negative = false, int64_t w = 1) { return GroundLiteral{a, negative, w}; };
	SECTION("weight body") {
		// { a, b }.  h :- 10 [ a=6, not b=5 ].
		GroundRule choice;
		choice.headKind               = GroundHeadKind::Aggregate;
		choice.headAggregate.elements = {lit(2), lit(3)};
		GroundRule rule;
		rule.head = 4;
		rule.aggregates.push_back({true, 10, std::nullopt, {lit(2, false, 6), lit(3, true, 5)}});
		CHECK(bruteForceSourceModels({choice, rule}, {}) == std::vector<AtomSet>{{}, {2, 3}, {2, 4}, {3}});
	}
	SECTION("positive loop through a constraint") {
		// a :- 1 { b }.  b :- 1 { a }.
		GroundRule ra, rb;
		ra.head = 2;
		ra.aggregates.push_back({false, 1, std::nullopt, {lit(3)}});
		rb.head = 3;
		rb.aggregates.push_back({false, 1, std::nullopt, {lit(2)}});
		CHECK(bruteForceSourceModels({ra, rb}, {}) == std::vector<AtomSet>{{}});
		CHECK_FALSE(isStableSource({ra, rb}, {}, {2, 3}));
	}
	SECTION("compute literals") {
		GroundRule choice;
		choice.headKind               = GroundHeadKind::Aggregate;
		choice.headAggregate.elements = {lit(2), lit(3)};
		CHECK(bruteForceSourceModels({choice}, {lit(2), lit(3, true)}) == std::vector<AtomSet>{{2}});
	}
}

} // namespace aspkit::test
