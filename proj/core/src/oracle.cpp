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

#include <aspkit/oracle.h>

#include <aspkit/error.h>

#include <algorithm>
#include <limits>

namespace aspkit {

ReductProgram reduct(const std::vector<PrimitiveRule>& rules, const AtomSet& model) {
	ReductProgram out;
	auto          in = [&](AtomId a) { return model.count(a) != 0; };
	for (const auto& r : rules) {
		switch (r.type) {
			case RuleType::Basic:
				if (std::any_of(r.neg.begin(), r.neg.end(), in)) break;
				out.push_back({r.head(), static_cast<int64_t>(r.pos.size()), r.pos, std::vector<int64_t>(r.pos.size(), 1)});
				break;
			case RuleType::Constraint: {
				auto satisfied = std::count_if(r.neg.begin(), r.neg.end(), [&](AtomId a) { return !in(a); });
				out.push_back({r.head(), std::max<int64_t>(0, r.bound - satisfied), r.pos, std::vector<int64_t>(r.pos.size(), 1)});
				break;
			}
			case RuleType::Weight: {
				int64_t satisfied = 0;
				for (std::size_t i = 0; i != r.neg.size(); ++i) {
					if (!in(r.neg[i])) satisfied += r.negWeights[i];
				}
				out.push_back({r.head(), std::max<int64_t>(0, r.bound - satisfied), r.pos, r.posWeights});
				break;
			}
			case RuleType::Choice:
				if (std::any_of(r.neg.begin(), r.neg.end(), in)) break;
				for (AtomId h : r.heads) {
					if (in(h)) out.push_back({h, static_cast<int64_t>(r.pos.size()), r.pos, std::vector<int64_t>(r.pos.size(), 1)});
				}
				break;
		}
	}
	return out;
}

AtomSet leastModel(const ReductProgram& program) {
	AtomSet derived;
	for (bool changed = true; changed;) {
		changed = false;
		for (const auto& r : program) {
			if (derived.count(r.head)) continue;
			int64_t sum = 0;
			for (std::size_t i = 0; i != r.pos.size(); ++i) {
				if (derived.count(r.pos[i])) sum += r.weights[i];
			}
			if (sum >= r.bound) {
				derived.insert(r.head);
				changed = true;
			}
		}
	}
	return derived;
}

namespace {
bool computeHolds(const ComputeSpec& c, const AtomSet& m) {
	return std::all_of(c.requiredTrue.begin(), c.requiredTrue.end(), [&](AtomId a) { return m.count(a) != 0; }) &&
	       std::none_of(c.requiredFalse.begin(), c.requiredFalse.end(), [&](AtomId a) { return m.count(a) != 0; });
}

template <class Test>
std::vector<AtomSet> enumerate(const std::vector<AtomId>& atoms, std::size_t cap, Test&& test) {
	if (atoms.size() > cap) throw CapExceeded(atoms.size(), cap);
	std::vector<AtomSet> out;
	for (uint64_t bits = 0; bits < (uint64_t(1) << atoms.size()); ++bits) {
		AtomSet m;
		for (std::size_t i = 0; i != atoms.size(); ++i) {
			if (bits >> i & 1) m.insert(atoms[i]);
		}
		if (test(m)) out.push_back(std::move(m));
	}
	std::sort(out.begin(), out.end());
	return out;
}

std::vector<AtomId> sorted(std::vector<AtomId> v) {
	std::sort(v.begin(), v.end());
	v.erase(std::unique(v.begin(), v.end()), v.end());
	v.erase(std::remove(v.begin(), v.end(), kFalseAtom), v.end());
	return v;
}
} // namespace

bool isStable(const GroundProgram& program, const AtomSet& model) {
	if (model.count(kFalseAtom) || !computeHolds(program.compute, model)) return false;
	return leastModel(reduct(program.rules, model)) == model;
}

std::vector<AtomSet> bruteForceModels(const GroundProgram& program, std::size_t cap) {
	std::vector<AtomId> atoms;
	for (const auto& r : program.rules) atoms.insert(atoms.end(), r.heads.begin(), r.heads.end());
	return enumerate(sorted(std::move(atoms)), cap, [&](const AtomSet& m) { return isStable(program, m); });
}

namespace {

bool litHolds(const GroundLiteral& l, const AtomSet& m) { return (m.count(l.atom) != 0) != l.negative; }

int64_t satisfiedWeight(const GroundAggregate& agg, const AtomSet& m) {
	int64_t sum = 0;
	for (const auto& e : agg.elements) {
		if (litHolds(e, m)) sum += agg.weighted ? e.weight : 1;
	}
	return sum;
}

bool aggregateHolds(const GroundAggregate& agg, const AtomSet& m) {
	int64_t sum = satisfiedWeight(agg, m);
	return (!agg.lower || sum >= *agg.lower) && (!agg.upper || sum <= *agg.upper);
}

bool bodyHolds(const GroundRule& r, const AtomSet& m) {
	return std::all_of(r.body.begin(), r.body.end(), [&](const GroundLiteral& l) { return litHolds(l, m); }) &&
	       std::all_of(r.aggregates.begin(), r.aggregates.end(), [&](const GroundAggregate& a) { return aggregateHolds(a, m); });
}

bool headHolds(const GroundRule& r, const AtomSet& m) {
	switch (r.headKind) {
		case GroundHeadKind::Atom:      return m.count(r.head) != 0;
		case GroundHeadKind::Integrity: return false;
		case GroundHeadKind::Aggregate: return aggregateHolds(r.headAggregate, m);
	}
	return false;
}

// Reduct of a body constraint: the lower bound minus the weight of the negative
// literals satisfied by the model, over the positive literals only. An element
// with a negative weight stands for its complement with the opposite weight.
void reduceConstraint(const GroundAggregate& agg, const AtomSet& m, ReductRule& out) {
	if (!agg.lower) {
		out.bound = std::numeric_limits<int64_t>::min();
		return;
	}
	int64_t bound = *agg.lower;
	for (const auto& e : agg.elements) {
		int64_t w        = agg.weighted ? e.weight : 1;
		bool    negative = e.negative;
		if (w < 0) {
			w        = -w;
			negative = !negative;
			bound += w;
		}
		if (negative) {
			if (!m.count(e.atom)) bound -= w;
			continue;
		}
		out.pos.push_back(e.atom);
		out.weights.push_back(w);
	}
	out.bound = bound;
}

} // namespace

bool isStableSource(const std::vector<GroundRule>& rules, const std::vector<GroundLiteral>& compute, const AtomSet& model) {
	if (!std::all_of(compute.begin(), compute.end(), [&](const GroundLiteral& l) { return litHolds(l, model); })) return false;
	for (const auto& r : rules) {
		if (bodyHolds(r, model) && !headHolds(r, model)) return false;
	}
	// A rule becomes one monotone rule per head atom in the model. Each body
	// constraint is reduced separately, so the reduct is a conjunction; it is
	// evaluated by iterating all constraints of a rule together.
	struct Reduced {
		AtomId                  head;
		std::vector<AtomId>     pos; // plain positive literals
		std::vector<ReductRule> constraints;
	};
	std::vector<Reduced> reduced;
	for (const auto& r : rules) {
		if (r.headKind == GroundHeadKind::Integrity) continue;
		bool dropped = false;
		for (const auto& l : r.body) dropped |= l.negative && model.count(l.atom);
		for (const auto& a : r.aggregates) dropped |= a.upper && satisfiedWeight(a, model) > *a.upper;
		if (dropped) continue;
		Reduced base;
		for (const auto& l : r.body) {
			if (!l.negative) base.pos.push_back(l.atom);
		}
		for (const auto& a : r.aggregates) {
			ReductRule c;
			reduceConstraint(a, model, c);
			base.constraints.push_back(std::move(c));
		}
		std::vector<AtomId> heads;
		if (r.headKind == GroundHeadKind::Atom) heads.push_back(r.head);
		else {
			for (const auto& e : r.headAggregate.elements) heads.push_back(e.atom);
		}
		for (AtomId h : heads) {
			if (!model.count(h)) continue;
			base.head = h;
			reduced.push_back(base);
		}
	}
	AtomSet derived;
	for (bool changed = true; changed;) {
		changed = false;
		for (const auto& r : reduced) {
			if (derived.count(r.head)) continue;
			bool ok = std::all_of(r.pos.begin(), r.pos.end(), [&](AtomId a) { return derived.count(a) != 0; });
			for (std::size_t i = 0; ok && i != r.constraints.size(); ++i) {
				const auto& c   = r.constraints[i];
				int64_t     sum = 0;
				for (std::size_t j = 0; j != c.pos.size(); ++j) {
					if (derived.count(c.pos[j])) sum += c.weights[j];
				}
				ok = sum >= c.bound;
			}
			if (ok) {
				derived.insert(r.head);
				changed = true;
			}
		}
	}
	return derived == model;
}

std::vector<AtomSet> bruteForceSourceModels(const std::vector<GroundRule>& rules, const std::vector<GroundLiteral>& compute,
                                            std::size_t cap) {
	std::vector<AtomId> atoms;
	for (const auto& r : rules) {
		if (r.headKind == GroundHeadKind::Atom) atoms.push_back(r.head);
		for (const auto& e : r.headAggregate.elements) atoms.push_back(e.atom);
	}
	return enumerate(sorted(std::move(atoms)), cap, [&](const AtomSet& m) { return isStableSource(rules, compute, m); });
}

} // namespace aspkit
