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

#include <aspkit/translate.h>

#include <aspkit/error.h>

#include <algorithm>

namespace aspkit {

GroundAggregate normalizeWeights(const GroundAggregate& agg) {
	GroundAggregate out = agg;
	for (auto& e : out.elements) {
		if (e.weight >= 0) continue;
		int64_t w = e.weight;
		if (w == INT64_MIN || (out.lower && __builtin_sub_overflow(*out.lower, w, &*out.lower)) ||
		    (out.upper && __builtin_sub_overflow(*out.upper, w, &*out.upper))) {
			throw ArithmeticError({}, "integer overflow normalizing weights");
		}
		e.weight   = -w;
		e.negative = !e.negative;
	}
	return out;
}

namespace {

struct Body {
	std::vector<AtomId> pos, neg;
};

int64_t capacity(const GroundAggregate& agg) {
	if (!agg.weighted) return static_cast<int64_t>(agg.elements.size());
	int64_t total = 0;
	for (const auto& e : agg.elements) {
		if (__builtin_add_overflow(total, e.weight, &total)) throw ArithmeticError({}, "integer overflow summing weights");
	}
	return total;
}

// Defines a fresh atom that holds iff at least `bound` of `agg` is satisfied.
AtomId defineAtLeast(const GroundAggregate& agg, int64_t bound, AtomAllocator& fresh, std::vector<PrimitiveRule>& out) {
	AtomId              g = fresh.fresh();
	std::vector<AtomId> pos, neg;
	std::vector<int64_t> pw, nw;
	for (const auto& e : agg.elements) {
		(e.negative ? neg : pos).push_back(e.atom);
		(e.negative ? nw : pw).push_back(e.weight);
	}
	if (agg.weighted) out.push_back(PrimitiveRule::weight(g, bound, std::move(pos), std::move(pw), std::move(neg), std::move(nw)));
	else out.push_back(PrimitiveRule::constraint(g, bound, std::move(pos), std::move(neg)));
	return g;
}

struct Guards {
	std::optional<AtomId> lower; // must hold
	std::optional<AtomId> upper; // must not hold
};

Guards defineGuards(const GroundAggregate& raw, AtomAllocator& fresh, std::vector<PrimitiveRule>& out) {
	GroundAggregate agg = raw.weighted ? normalizeWeights(raw) : raw;
	int64_t         cap = capacity(agg);
	Guards          g;
	if (agg.lower && *agg.lower > 0) g.lower = defineAtLeast(agg, std::min(*agg.lower, cap + 1), fresh, out);
	if (agg.upper && *agg.upper < cap) g.upper = defineAtLeast(agg, std::max<int64_t>(*agg.upper + 1, 0), fresh, out);
	return g;
}

} // namespace

std::vector<PrimitiveRule> translateRule(const GroundRule& rule, AtomAllocator& fresh) {
	std::vector<PrimitiveRule> out;
	Body                       body;
	for (const auto& l : rule.body) (l.negative ? body.neg : body.pos).push_back(l.atom);
	for (const auto& agg : rule.aggregates) {
		Guards g = defineGuards(agg, fresh, out);
		if (g.lower) body.pos.push_back(*g.lower);
		if (g.upper) body.neg.push_back(*g.upper);
	}
	switch (rule.headKind) {
		case GroundHeadKind::Atom: out.push_back(PrimitiveRule::basic(rule.head, body.pos, body.neg)); break;
		case GroundHeadKind::Integrity: out.push_back(PrimitiveRule::basic(kFalseAtom, body.pos, body.neg)); break;
		case GroundHeadKind::Aggregate: {
			std::vector<AtomId> heads;
			for (const auto& e : rule.headAggregate.elements) {
				if (std::find(heads.begin(), heads.end(), e.atom) == heads.end()) heads.push_back(e.atom);
			}
			out.push_back(PrimitiveRule::choice(std::move(heads), body.pos, body.neg));
			Guards g = defineGuards(rule.headAggregate, fresh, out);
			if (g.lower) {
				auto neg = body.neg;
				neg.push_back(*g.lower);
				out.push_back(PrimitiveRule::basic(kFalseAtom, body.pos, std::move(neg)));
			}
			if (g.upper) {
				auto pos = body.pos;
				pos.push_back(*g.upper);
				out.push_back(PrimitiveRule::basic(kFalseAtom, std::move(pos), body.neg));
			}
			break;
		}
	}
	return out;
}

GroundProgram translateProgram(const GroundingResult& result) {
	GroundProgram p;
	p.symbols = result.symbols;
	AtomAllocator fresh(result.symbols.maxId() + 1);
	for (const auto& r : result.rules) {
		for (auto& x : translateRule(r, fresh)) p.rules.push_back(std::move(x));
	}
	for (const auto& l : result.compute) {
		auto& v = l.negative ? p.compute.requiredFalse : p.compute.requiredTrue;
		if (std::find(v.begin(), v.end(), l.atom) == v.end()) v.push_back(l.atom);
	}
	p.compute.modelCount = result.computeModels.value_or(1);
	return p;
}

} // namespace aspkit
