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

#include <aspkit/well_founded.h>

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

TEST_CASE("well-founded model", "[wfs]") {
	SECTION("unfounded loop") {
		// a :- b.  b :- a.  c :- not a.
		auto wf = wellFounded(program({R::basic(2, {3}, {}), R::basic(3, {2}, {}), R::basic(4, {}, {2})}, 3));
		CHECK(wf.trueAtoms == AtomSet{4});
		CHECK(wf.falseAtoms == AtomSet{2, 3});
		CHECK(wf.unknownAtoms.empty());
	}
	SECTION("even loop") {
		auto wf = wellFounded(program({R::basic(2, {}, {3}), R::basic(3, {}, {2})}, 2));
		CHECK(wf.trueAtoms.empty());
		CHECK(wf.falseAtoms.empty());
		CHECK(wf.unknownAtoms == AtomSet{2, 3});
	}
	SECTION("definite program") {
		// a.  b :- a.  c :- b, d.  d :- c.
		auto p  = program({R::basic(2, {}, {}), R::basic(3, {2}, {}), R::basic(4, {3, 5}, {}), R::basic(5, {4}, {})}, 4);
		auto wf = wellFounded(p);
		CHECK(wf.trueAtoms == AtomSet{2, 3});
		CHECK(wf.falseAtoms == AtomSet{4, 5});
		CHECK(wf.unknownAtoms.empty());
		CHECK(bruteForceModels(p) == std::vector<AtomSet>{wf.trueAtoms});
	}
	SECTION("extended rules are rejected") {
		CHECK_THROWS_AS(wellFounded(program({R::choice({2}, {}, {})}, 1)), UnsupportedRuleType);
		CHECK_THROWS_AS(wellFounded(program({R::constraint(2, 1, {3}, {})}, 2)), UnsupportedRuleType);
	}
	SECTION("corpus") {
		auto out = groundCorpus({"wfs.lp"});
		auto wf  = wellFounded(out.program);
		auto set = [&](const AtomSet& atoms) {
			NameSet s;
			for (AtomId a : atoms) s.insert(out.program.symbols.name(a));
			return s;
		};
		CHECK(set(wf.trueAtoms) == names({"c", "r"}));
		CHECK(set(wf.falseAtoms) == names({"a", "b"}));
		CHECK(set(wf.unknownAtoms) == names({"p", "q"}));
		CHECK(stableModels(out.program).size() == 2);
	}
}

TEST_CASE("well-founded model bounds the stable models", "[wfs]") {
	std::mt19937_64 rng(404);
	for (int i = 0; i != 300; ++i) {
		auto p = randomNormalProgram(rng, std::uniform_int_distribution<int>(1, 10)(rng),
		                             std::uniform_int_distribution<int>(0, 15)(rng), false);
		CAPTURE(emitGroundFormat(p));
		auto wf = wellFounded(p);
		for (AtomId a = kFirstAtom; a <= p.maxAtom(); ++a) {
			int parts = wf.trueAtoms.count(a) + wf.falseAtoms.count(a) + wf.unknownAtoms.count(a);
			CHECK(parts == 1);
		}
		auto models = bruteForceModels(p);
		for (const auto& m : models) {
			CHECK(std::includes(m.begin(), m.end(), wf.trueAtoms.begin(), wf.trueAtoms.end()));
			for (AtomId a : wf.falseAtoms) CHECK_FALSE(m.count(a));
		}
		if (wf.unknownAtoms.empty()) CHECK(models == std::vector<AtomSet>{wf.trueAtoms});
	}
}

} // namespace aspkit::test
