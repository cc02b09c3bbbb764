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

#include <aspkit/domain_analysis.h>
#include <aspkit/grounder.h>
#include <aspkit/parser.h>

#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

namespace aspkit::test {

namespace {
ProgramAst prepare(const std::string& text, const std::map<std::string, int64_t>& consts = {}) {
	return expandPools(substituteConstants(parseProgram(text), consts));
}

Extension evaluate(const std::string& text, const std::map<std::string, int64_t>& consts = {}) {
	auto prg = prepare(text, consts);
	return evaluateDomainPredicates(prg, classifyDomainPredicates(buildDependencyGraph(prg), prg));
}

std::vector<std::string> groundText(const std::string& text, DomainMode mode = DomainMode::Remove,
                                    const std::map<std::string, int64_t>& consts = {}) {
	auto                     g = ground(text, consts, mode).grounding;
	std::vector<std::string> out;
	for (const auto& r : g.rules) {
		std::ostringstream os;
		printGroundRule(os, r, g.symbols);
		out.push_back(os.str());
	}
	return out;
}

std::vector<std::string> strings(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

NameSet without(const NameSet& m, const std::set<std::string>& predicates) {
	NameSet out;
	for (const auto& a : m) {
		if (!predicates.count(a.substr(0, a.find('(')))) out.insert(a);
	}
	return out;
}
} // namespace

TEST_CASE("pool expansion", "[grounder]") {
	auto prg = expandPools(parseProgram("p(a;b) :- q(1;2). h :- 1 { r(x;y) }."));
	REQUIRE(prg.rules.size() == 5);
	CHECK(toString(prg.rules[0]) == "p(a) :- q(1).");
	CHECK(toString(prg.rules[1]) == "p(a) :- q(2).");
	CHECK(toString(prg.rules[3]) == "p(b) :- q(2).");
	CHECK(toString(prg.rules[4]) == "h :- 1 { r(x), r(y) }.");
}

TEST_CASE("domain evaluation", "[grounder]") {
	SECTION("range") {
		CHECK(evaluate("d(1..3).").render({"d", 1}) == strings({"d(1)", "d(2)", "d(3)"}));
	}
	SECTION("ancestor facts") {
		auto ext = evaluate(readFile(corpusPath("ancestor.lp")));
		CHECK(ext.render({"person", 1}) == strings({"person(jack)", "person(jill)", "person(joan)"}));
		CHECK(ext.render({"parent", 2}) == strings({"parent(jack,jill)", "parent(joan,jack)"}));
		CHECK(ext.render({"son", 2}) == strings({"son(jack,joan)"}));
		CHECK(ext.find({"ancestor", 2}) == nullptr);
	}
	SECTION("arithmetic head") {
		std::string text = "e(X+1) :- d(X), X < 3. d(1..3).";
		CHECK(evaluate(text).render({"e", 1}) == strings({"e(2)", "e(3)"}));
		CHECK(naiveDatalog("e(2) :- d(1). e(3) :- d(2). d(1). d(2). d(3).").count("e(3)"));
	}
	SECTION("stratified negation") {
		auto ext = evaluate("d(1..4). e(2). e(4). f(X) :- d(X), not e(X). g(X) :- f(X), not e(X).");
		CHECK(ext.render({"f", 1}) == strings({"f(1)", "f(3)"}));
		CHECK(ext.render({"g", 1}) == strings({"g(1)", "g(3)"}));
	}
	SECTION("constants") {
		CHECK(evaluate("d(1..n).", {{"n", 4}}).relation({"d", 1}).size() == 4);
		CHECK_THROWS_AS(evaluate("d(1..n)."), UnboundConstant);
	}
	SECTION("arithmetic errors") {
		CHECK_THROWS_AS(evaluate("d(1..3). e(X/(X-1)) :- d(X)."), ArithmeticError);
		CHECK_THROWS_AS(evaluate("d(4000000000). e(X*X*X) :- d(X)."), ArithmeticError);
		CHECK_THROWS_AS(evaluate("d(1). e(X+a) :- d(X)."), UnboundConstant);
		CHECK(evaluate("d(-7). e(X/2, X mod 2) :- d(X).").render({"e", 2}) == strings({"e(-3,-1)"}));
	}
	SECTION("reversed range") {
		auto                    prg = prepare("d(3..1).");
		std::vector<Diagnostic> warnings;
		auto ext = evaluateDomainPredicates(prg, classifyDomainPredicates(buildDependencyGraph(prg), prg), &warnings);
		CHECK(ext.render({"d", 1}).empty());
		REQUIRE(warnings.size() == 1);
		CHECK(warnings[0].severity == Severity::Warning);
	}
}

TEST_CASE("semi-naive evaluation matches the naive fixpoint", "[grounder]") {
	std::mt19937_64 rng(5);
	for (int i = 0; i != 60; ++i) {
		int         nodes = std::uniform_int_distribution<int>(2, 8)(rng);
		std::string text;
		for (int a = 1; a <= nodes; ++a) {
			for (int b = 1; b <= nodes; ++b) {
				if (std::bernoulli_distribution(0.2)(rng)) text += "edge(" + std::to_string(a) + "," + std::to_string(b) + ").\n";
			}
		}
		text += "path(X,Y) :- edge(X,Y).\n"
		        "path(X,Y) :- path(X,Z), edge(Z,Y).\n"
		        "twice(X,Y) :- path(X,Z), path(Z,Y).\n";
		CAPTURE(text);
		auto prg  = prepare(text);
		auto info = classifyDomainPredicates(buildDependencyGraph(prg), prg);
		REQUIRE_FALSE(info.at({"path", 2}).isDomain);
		info.at({"path", 2}).isDomain  = true;
		info.at({"twice", 2}).isDomain = true;
		auto ext = evaluateDomainPredicates(prg, info);

		std::set<std::string> got;
		for (const char* p : {"edge", "path", "twice"}) {
			for (const auto& a : ext.render({p, 2})) got.insert(a);
		}
		CHECK(got == naiveDatalog(text));
	}
}

TEST_CASE("rule instantiation", "[grounder]") {
	SECTION("cardinality head over a domain") {
		CHECK(groundText("d(1..2). 1 { q(X,Y):d(X) } 1 :- d(Y).") ==
		      strings({"1 { q(1,1), q(2,1) } 1.", "1 { q(1,2), q(2,2) } 1."}));
	}
	SECTION("keep mode retains domain facts and literals") {
		CHECK(groundText("d(1..2). 1 { q(X,Y):d(X) } 1 :- d(Y).", DomainMode::Keep) ==
		      strings({"d(1).", "d(2).", "1 { q(1,1), q(2,1) } 1 :- d(1).", "1 { q(1,2), q(2,2) } 1 :- d(2)."}));
	}
	SECTION("queens diagonal instances") {
		// Ordered pairs of distinct cells on a common diagonal of a 4x4 board.
		std::size_t expected = 0;
		for (int x = 1; x <= 4; ++x)
			for (int y = 1; y <= 4; ++y)
				for (int x1 = 1; x1 <= 4; ++x1)
					for (int y1 = 1; y1 <= 4; ++y1)
						expected += x != x1 && y != y1 && std::abs(x - x1) == std::abs(y - y1);
		auto rules = groundText(readFile(corpusPath("queens.lp")), DomainMode::Remove, {{"n", 4}});
		auto integrity = std::ranges::count_if(rules, [](const std::string& r) { return r.rfind(":-", 0) == 0; });
		CHECK(expected == 56);
		CHECK(static_cast<std::size_t>(integrity) == expected);
		CHECK(std::ranges::count(rules, ":- q(1,1), q(2,2).") == 1);
		CHECK(std::ranges::count(rules, ":- q(1,1), q(2,3).") == 0);
	}
	SECTION("unsatisfiable domain literal") {
		CHECK(groundText("d(1). { a }. p :- d(2), a.").size() == 1);
		CHECK(groundText("d(1). { a }. p :- d(X), X > 1, a.").size() == 1);
	}
	SECTION("negative domain literals") {
		CHECK(groundText("d(1..3). e(2). { a(X) : d(X) }. p(X) :- d(X), a(X), not e(X).") ==
		      strings({"{ a(1), a(2), a(3) }.", "p(1) :- a(1).", "p(3) :- a(3)."}));
	}
	SECTION("body aggregates fold domain literals") {
		CHECK(groundText("d(1..3). e(1). { a }. h :- 2 { a, e(1), e(2) }.") == strings({"{ a }.", "h :- 1 { a }."}));
		CHECK(groundText("d(1..3). e(1). { a }. h :- 1 { a, e(1) }.") == strings({"{ a }.", "h."}));
		CHECK(groundText("d(1..3). e(1). { a }. h :- 1 { a, e(1) } 1.") == strings({"{ a }.", "h :- 0 { a } 0."}));
		CHECK(groundText("d(1..3). e(1). { a }. h :- 3 { a, e(1) }.") == strings({"{ a }.", "h :- 2 { a }."}));
		CHECK(groundText("d(1..3). e(1). { a }. h :- a, 2 { e(1), e(2) }.") == strings({"{ a }."}));
	}
	SECTION("duplicates") {
		CHECK(groundText("{ p }. h :- 1 [ p = 2, p = 3, not p = 1 ].") == strings({"{ p }.", "h :- 1 [ p=5, not p=1 ]."}));
		CHECK(groundText("d(1..2). { p }. h :- 1 { p : d(X) }.") == strings({"{ p }.", "h :- 1 { p }."}));
	}
	SECTION("head ranges") {
		CHECK(groundText("d(1). { q }. p(1..3) :- d(1), not q.") == strings({"{ q }.", "p(1) :- not q.", "p(2) :- not q.", "p(3) :- not q."}));
	}
	SECTION("compute statement") {
		auto g = ground("d(1..2). { p(X) : d(X) }. compute 2 { p(X) : d(X), not p(3) }.").grounding;
		CHECK(g.computeModels == 2);
		REQUIRE(g.compute.size() == 3);
		CHECK_FALSE(g.compute[0].negative);
		CHECK(g.compute[2].negative);
	}
	SECTION("violated domain literal in compute") {
		auto out = ground("d(1). compute { d(2) }.", {}, DomainMode::Remove);
		CHECK(stableModels(out.program).empty());
	}
}

TEST_CASE("grounding matches naive instantiation", "[grounder]") {
	std::mt19937_64 rng(17);
	auto            pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
	for (int i = 0; i != 150; ++i) {
		int         k = 2 + pick(2);
		std::string text;
		for (int c = 1; c <= k; ++c) text += "d(" + std::to_string(c) + ").\n";
		for (int f = 0, n = pick(3); f != n; ++f) text += "e(" + std::to_string(1 + pick(k)) + "," + std::to_string(1 + pick(k)) + ").\n";
		for (int r = 0, n = 1 + pick(5); r != n; ++r) {
			bool        two  = pick(2);
			auto        atom = [&](bool allowR) {
                switch (pick(allowR ? 3 : 2)) {
                    case 0: return std::string("p(") + (two && pick(2) ? "Y" : "X") + ")";
                    case 1: return std::string("q(") + (two && pick(2) ? "Y" : "X") + ")";
                    default: return std::string("r");
                }
			};
			std::string rule = pick(6) == 0 ? "" : atom(true);
			rule += " :- d(X)";
			if (two) rule += pick(2) ? ", e(X,Y)" : ", d(Y)";
			for (int b = 0, m = pick(3); b != m; ++b) rule += std::string(", ") + (pick(2) ? "not " : "") + atom(true);
			if (two && pick(3) == 0) rule += pick(2) ? ", X < Y" : ", X != Y";
			text += rule + ".\n";
		}
		CAPTURE(text);
		std::set<std::string> domain;
		for (const auto& [key, info] : ground(text).predicates) {
			if (info.isDomain) domain.insert(key.name);
		}
		auto expected = named(naiveInstantiation(text).symbols, bruteForceModels(naiveInstantiation(text)));
		for (auto& m : expected) m = without(m, domain);
		std::sort(expected.begin(), expected.end());

		CHECK(stableModels(text, {}, DomainMode::Remove) == expected);
		auto keep = stableModels(text, {}, DomainMode::Keep);
		for (auto& m : keep) m = without(m, domain);
		std::sort(keep.begin(), keep.end());
		CHECK(keep == expected);
	}
}

TEST_CASE("corpus models", "[grounder]") {
	SECTION("coloring") {
		auto out = groundCorpus({"ncolor.lp", "graph.lp"}, {}, DomainMode::Remove);
		CHECK(stableModels(out.program) ==
		      std::vector<NameSet>{names({"col(a,red)", "col(b,blue)", "col(c,green)"}),
		                           names({"col(a,red)", "col(b,green)", "col(c,blue)"})});
	}
	SECTION("queens") {
		for (int n = 1; n <= 6; ++n) {
			CAPTURE(n);
			auto out = groundCorpus({"queens.lp"}, {{"n", n}}, DomainMode::Remove);
			CHECK(stableModels(out.program) == queensSolutions(n));
		}
	}
	SECTION("weights") {
		CHECK(stableModels(groundCorpus({"weights.lp"}, {}, DomainMode::Remove).program).size() == 5);
	}
	SECTION("hamilton") {
		auto models = stableModels(groundCorpus({"hamilton.lp"}, {}, DomainMode::Remove).program);
		REQUIRE(models.size() == 1);
		CHECK(without(models[0], {"reached"}) == names({"in(1,2)", "in(2,3)", "in(3,4)", "in(4,1)"}));
	}
	SECTION("choice") {
		CHECK(stableModels(groundCorpus({"choice.lp"}, {}, DomainMode::Remove).program).size() == 2);
	}
}

} // namespace aspkit::test
