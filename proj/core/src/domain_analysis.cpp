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

#include <aspkit/domain_analysis.h>

#include <algorithm>
#include <functional>
#include <set>

namespace aspkit {

PredicateKey keyOf(const Atom& a) { return PredicateKey{a.predicate, a.arity()}; }

std::string toString(const PredicateKey& key) { return key.name + "/" + std::to_string(key.arity); }

bool isDomain(const PredicateMap& info, const PredicateKey& key) {
	auto it = info.find(key);
	return it != info.end() && it->second.isDomain;
}

namespace {

struct BodyRef {
	const Atom* atom;
	Polarity    polarity;
};

// Atoms a rule defines. Elements of a head aggregate contribute their own
// condition atoms as additional dependencies.
struct HeadRef {
	const Atom*              atom;
	std::vector<const Atom*> conditions;
};

std::vector<HeadRef> headRefs(const Rule& r) {
	std::vector<HeadRef> out;
	if (r.head.kind == HeadKind::Atom) out.push_back({&r.head.atom, {}});
	if (r.head.kind == HeadKind::Aggregate) {
		for (const auto& e : r.head.aggregate.elements) {
			HeadRef h{&e.literal.atom, {}};
			for (const auto& c : e.literal.conditions) h.conditions.push_back(&c);
			out.push_back(std::move(h));
		}
	}
	return out;
}

void literalRefs(const Literal& l, std::vector<BodyRef>& out) {
	if (l.kind == LiteralKind::Comparison) return;
	out.push_back({&l.atom, l.negative ? Polarity::Negative : Polarity::Positive});
	for (const auto& c : l.conditions) out.push_back({&c, Polarity::Positive});
}

std::vector<BodyRef> bodyRefs(const Rule& r) {
	std::vector<BodyRef> out;
	for (const auto& b : r.body) {
		if (const auto* l = std::get_if<Literal>(&b)) {
			literalRefs(*l, out);
		}
		else {
			for (const auto& e : std::get<Aggregate>(b).elements) literalRefs(e.literal, out);
		}
	}
	return out;
}

} // namespace

/////////////////////////////////////////////////////////////////////////////////////////
// DependencyGraph
/////////////////////////////////////////////////////////////////////////////////////////
std::size_t DependencyGraph::addNode(const PredicateKey& key) {
	auto [it, inserted] = index_.emplace(key, nodes_.size());
	if (inserted) {
		nodes_.push_back(key);
		succ_.emplace_back();
		selfLoop_.push_back(false);
	}
	return it->second;
}

void DependencyGraph::addEdge(std::size_t caller, std::size_t callee, Polarity pol) {
	DependencyEdge e{nodes_[caller], nodes_[callee], pol};
	if (std::find(edges_.begin(), edges_.end(), e) != edges_.end()) return;
	edges_.push_back(std::move(e));
	if (std::find(succ_[caller].begin(), succ_[caller].end(), callee) == succ_[caller].end()) succ_[caller].push_back(callee);
	if (caller == callee) selfLoop_[caller] = true;
}

bool DependencyGraph::hasEdge(const PredicateKey& caller, const PredicateKey& callee, Polarity pol) const {
	return std::find(edges_.begin(), edges_.end(), DependencyEdge{caller, callee, pol}) != edges_.end();
}

int DependencyGraph::sccOf(const PredicateKey& key) const {
	auto it = index_.find(key);
	return it == index_.end() ? -1 : scc_[it->second];
}

std::vector<PredicateKey> DependencyGraph::component(int id) const {
	std::vector<PredicateKey> out;
	for (std::size_t i = 0; i != nodes_.size(); ++i) {
		if (scc_[i] == id) out.push_back(nodes_[i]);
	}
	return out;
}

bool DependencyGraph::isRecursive(const PredicateKey& key) const {
	auto it = index_.find(key);
	if (it == index_.end()) return false;
	return selfLoop_[it->second] || sccSize_[scc_[it->second]] > 1;
}

// Tarjan's algorithm; components are numbered in completion order, which puts
// callees before callers.
void DependencyGraph::computeComponents() {
	const std::size_t        n = nodes_.size();
	std::vector<int>         index(n, -1), low(n, 0);
	std::vector<bool>        onStack(n, false);
	std::vector<std::size_t> stack;
	int                      counter = 0;
	scc_.assign(n, -1);
	sccSize_.clear();

	std::function<void(std::size_t)> visit = [&](std::size_t v) {
		index[v] = low[v] = counter++;
		stack.push_back(v);
		onStack[v] = true;
		for (std::size_t w : succ_[v]) {
			if (index[w] < 0) {
				visit(w);
				low[v] = std::min(low[v], low[w]);
			}
			else if (onStack[w]) {
				low[v] = std::min(low[v], index[w]);
			}
		}
		if (low[v] == index[v]) {
			std::size_t size = 0;
			std::size_t w;
			do {
				w = stack.back();
				stack.pop_back();
				onStack[w] = false;
				scc_[w]    = static_cast<int>(sccSize_.size());
				++size;
			} while (w != v);
			sccSize_.push_back(size);
		}
	};
	for (std::size_t v = 0; v != n; ++v) {
		if (index[v] < 0) visit(v);
	}
	sccCount_ = sccSize_.size();
}

DependencyGraph buildDependencyGraph(const ProgramAst& program) {
	DependencyGraph g;
	for (const auto& r : program.rules) {
		auto heads = headRefs(r);
		auto body  = bodyRefs(r);
		for (const auto& h : heads) {
			std::size_t hi = g.addNode(keyOf(*h.atom));
			for (const auto* c : h.conditions) g.addEdge(hi, g.addNode(keyOf(*c)), Polarity::Positive);
			for (const auto& b : body) g.addEdge(hi, g.addNode(keyOf(*b.atom)), b.polarity);
		}
		for (const auto& b : body) g.addNode(keyOf(*b.atom));
	}
	if (program.compute) {
		std::vector<BodyRef> refs;
		for (const auto& l : program.compute->literals) literalRefs(l, refs);
		for (const auto& b : refs) g.addNode(keyOf(*b.atom));
	}
	g.computeComponents();
	return g;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Classification
/////////////////////////////////////////////////////////////////////////////////////////
PredicateMap classifyDomainPredicates(const DependencyGraph& graph, const ProgramAst& program) {
	PredicateMap info;
	for (const auto& key : graph.nodes()) {
		PredicateInfo& p = info[key];
		p.key            = key;
		p.sccId          = graph.sccOf(key);
		p.isDomain       = !graph.isRecursive(key);
	}
	for (const auto& r : program.rules) {
		for (const auto& h : headRefs(r)) {
			PredicateInfo& p = info[keyOf(*h.atom)];
			p.defined        = true;
			if (r.head.kind == HeadKind::Aggregate) {
				p.definedInConstraintHead = true;
				p.isDomain                = false;
			}
		}
	}
	for (bool changed = true; changed;) {
		changed = false;
		for (const auto& e : graph.edges()) {
			PredicateInfo& caller = info[e.caller];
			PredicateInfo& callee = info[e.callee];
			if (e.polarity == Polarity::Negative && callee.sccId >= caller.sccId && (caller.isDomain || callee.isDomain)) {
				caller.isDomain = callee.isDomain = false;
				changed                           = true;
			}
			if (caller.isDomain && !callee.isDomain) {
				caller.isDomain = false;
				changed         = true;
			}
		}
	}
	return info;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Domain restriction
/////////////////////////////////////////////////////////////////////////////////////////
namespace {

struct VarOcc {
	std::string name;
	Position    pos;
};

void collectOccurrences(const Term& t, std::vector<VarOcc>& out) {
	if (t.kind == TermKind::Variable) {
		out.push_back({t.name, t.pos});
		return;
	}
	for (const auto& a : t.args) collectOccurrences(a, out);
}

void collectOccurrences(const Atom& a, std::vector<VarOcc>& out) {
	for (const auto& t : a.args) collectOccurrences(t, out);
}

// Variables that occur directly as arguments of `a` and can therefore be bound
// by matching against the predicate's extension.
void bindableVariables(const Atom& a, std::set<std::string>& out) {
	for (const auto& t : a.args) {
		if (t.kind == TermKind::Variable) out.insert(t.name);
	}
}

struct Conditional {
	const Literal* literal;
	const Term*    weight; // may be null
};

struct RuleScope {
	std::vector<VarOcc>      global;
	std::vector<Conditional> conditionals;
};

void scanLiteral(const Literal& l, const Term* weight, RuleScope& scope) {
	if (l.kind == LiteralKind::Conditional) {
		scope.conditionals.push_back({&l, weight});
		return;
	}
	if (l.kind == LiteralKind::Comparison) {
		collectOccurrences(l.lhs, scope.global);
		collectOccurrences(l.rhs, scope.global);
	}
	else {
		collectOccurrences(l.atom, scope.global);
	}
	if (weight) collectOccurrences(*weight, scope.global);
}

void scanAggregate(const Aggregate& agg, RuleScope& scope) {
	if (agg.lower) collectOccurrences(*agg.lower, scope.global);
	if (agg.upper) collectOccurrences(*agg.upper, scope.global);
	for (const auto& e : agg.elements) scanLiteral(e.literal, agg.weighted ? &e.weight : nullptr, scope);
}

void checkConditional(const Conditional& c, const std::set<std::string>& globals, const PredicateMap& info,
                      const Position& rulePos, std::vector<Diagnostic>& out) {
	std::set<std::string> bound;
	for (const auto& cond : c.literal->conditions) {
		if (!isDomain(info, keyOf(cond))) {
			out.push_back({Severity::Error, cond.pos,
			               "condition '" + toString(cond) + "' of the rule at " + toString(rulePos) +
			                   " is not a domain predicate"});
		}
		bindableVariables(cond, bound);
	}
	std::vector<VarOcc> occs;
	collectOccurrences(c.literal->atom, occs);
	for (const auto& cond : c.literal->conditions) collectOccurrences(cond, occs);
	if (c.weight) collectOccurrences(*c.weight, occs);
	std::set<std::string> reported;
	for (const auto& v : occs) {
		if (globals.count(v.name) || bound.count(v.name) || !reported.insert(v.name).second) continue;
		out.push_back({Severity::Error, v.pos,
		               "variable '" + v.name + "' in the conditional literal of the rule at " + toString(rulePos) +
		                   " is not bound by any of its condition atoms"});
	}
}

} // namespace

std::vector<Diagnostic> checkDomainRestriction(const ProgramAst& program, const PredicateMap& info) {
	std::vector<Diagnostic> out;
	for (const auto& r : program.rules) {
		RuleScope             scope;
		std::set<std::string> covered;
		if (r.head.kind == HeadKind::Atom) collectOccurrences(r.head.atom, scope.global);
		if (r.head.kind == HeadKind::Aggregate) scanAggregate(r.head.aggregate, scope);
		for (const auto& b : r.body) {
			if (const auto* l = std::get_if<Literal>(&b)) {
				scanLiteral(*l, nullptr, scope);
				if (l->kind == LiteralKind::Atom && !l->negative && isDomain(info, keyOf(l->atom))) {
					bindableVariables(l->atom, covered);
				}
			}
			else {
				scanAggregate(std::get<Aggregate>(b), scope);
			}
		}
		std::set<std::string> globals;
		std::set<std::string> reported;
		for (const auto& v : scope.global) {
			globals.insert(v.name);
			if (covered.count(v.name) || !reported.insert(v.name).second) continue;
			out.push_back({Severity::Error, v.pos,
			               "variable '" + v.name + "' in the rule at " + toString(r.pos) +
			                   " does not occur in a positive domain predicate in the body"});
		}
		for (const auto& c : scope.conditionals) checkConditional(c, globals, info, r.pos, out);
	}
	if (program.compute) {
		for (const auto& l : program.compute->literals) {
			if (l.kind == LiteralKind::Conditional) {
				checkConditional({&l, nullptr}, {}, info, program.compute->pos, out);
				continue;
			}
			std::vector<VarOcc> occs;
			collectOccurrences(l.atom, occs);
			for (const auto& v : occs) {
				out.push_back({Severity::Error, v.pos, "variable '" + v.name + "' in compute statement is not bound"});
			}
		}
	}
	return out;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Lint
/////////////////////////////////////////////////////////////////////////////////////////
namespace {

struct ArgSlot {
	PredicateKey key;
	std::size_t  index;
	friend auto  operator<=>(const ArgSlot&, const ArgSlot&) = default;
};

template <class Fn>
void forEachAtom(const Rule& r, Fn&& fn) {
	auto lit = [&](const Literal& l) {
		if (l.kind == LiteralKind::Comparison) return;
		fn(l.atom);
		for (const auto& c : l.conditions) fn(c);
	};
	if (r.head.kind == HeadKind::Atom) fn(r.head.atom);
	if (r.head.kind == HeadKind::Aggregate) {
		for (const auto& e : r.head.aggregate.elements) lit(e.literal);
	}
	for (const auto& b : r.body) {
		if (const auto* l = std::get_if<Literal>(&b)) lit(*l);
		else
			for (const auto& e : std::get<Aggregate>(b).elements) lit(e.literal);
	}
}

void countSymbols(const Term& t, std::map<std::string, int>& counts) {
	if (t.kind == TermKind::Symbol) ++counts[t.name];
	for (const auto& a : t.args) countSymbols(a, counts);
}

void ruleVariables(const Rule& r, std::vector<VarOcc>& out) {
	if (r.head.kind == HeadKind::Atom) collectOccurrences(r.head.atom, out);
	auto aggregateVars = [&](const Aggregate& agg) {
		if (agg.lower) collectOccurrences(*agg.lower, out);
		if (agg.upper) collectOccurrences(*agg.upper, out);
		for (const auto& e : agg.elements) {
			collectOccurrences(e.literal.atom, out);
			for (const auto& c : e.literal.conditions) collectOccurrences(c, out);
			if (agg.weighted) collectOccurrences(e.weight, out);
		}
	};
	if (r.head.kind == HeadKind::Aggregate) aggregateVars(r.head.aggregate);
	for (const auto& b : r.body) {
		if (const auto* l = std::get_if<Literal>(&b)) {
			if (l->kind == LiteralKind::Comparison) {
				collectOccurrences(l->lhs, out);
				collectOccurrences(l->rhs, out);
			}
			else {
				collectOccurrences(l->atom, out);
				for (const auto& c : l->conditions) collectOccurrences(c, out);
			}
		}
		else {
			aggregateVars(std::get<Aggregate>(b));
		}
	}
}

} // namespace

std::vector<Diagnostic> lint(const ProgramAst& program, const PredicateMap& info) {
	std::vector<Diagnostic> out;

	// Singleton variables.
	for (const auto& r : program.rules) {
		std::vector<VarOcc> occs;
		ruleVariables(r, occs);
		std::map<std::string, int> counts;
		for (const auto& v : occs) ++counts[v.name];
		for (const auto& v : occs) {
			if (counts[v.name] == 1) {
				out.push_back({Severity::Warning, v.pos, "variable '" + v.name + "' occurs only once in the rule"});
			}
		}
	}

	// Constants that appear once, in an argument slot otherwise filled by variables.
	std::map<std::string, int>                  symbolCount;
	std::map<ArgSlot, std::vector<const Term*>> slots;
	auto                                        visitAtom = [&](const Atom& a) {
        for (std::size_t i = 0; i != a.args.size(); ++i) {
            countSymbols(a.args[i], symbolCount);
            slots[ArgSlot{keyOf(a), i}].push_back(&a.args[i]);
        }
	};
	for (const auto& r : program.rules) {
		forEachAtom(r, visitAtom);
		for (const auto& b : r.body) {
			if (const auto* l = std::get_if<Literal>(&b); l && l->kind == LiteralKind::Comparison) {
				countSymbols(l->lhs, symbolCount);
				countSymbols(l->rhs, symbolCount);
			}
		}
	}
	if (program.compute) {
		for (const auto& l : program.compute->literals) {
			visitAtom(l.atom);
			for (const auto& c : l.conditions) visitAtom(c);
		}
	}
	for (const auto& [slot, terms] : slots) {
		if (terms.size() < 2) continue;
		for (const Term* t : terms) {
			if (t->kind != TermKind::Symbol || symbolCount[t->name] != 1) continue;
			bool othersVariables = std::ranges::all_of(terms, [t](const Term* o) { return o == t || o->isVariable(); });
			if (othersVariables) {
				out.push_back({Severity::Warning, t->pos,
				               "constant '" + t->name + "' in argument " + std::to_string(slot.index + 1) + " of " +
				                   toString(slot.key) + " may be a mistyped variable"});
			}
		}
	}

	// Used but never defined.
	std::set<PredicateKey> reported;
	auto                   checkUse = [&](const Atom& a) {
        PredicateKey key = keyOf(a);
        auto         it  = info.find(key);
        if ((it == info.end() || !it->second.defined) && reported.insert(key).second) {
            out.push_back({Severity::Warning, a.pos, "predicate " + toString(key) + " is used but never defined"});
        }
	};
	for (const auto& r : program.rules) {
		for (const auto& b : bodyRefs(r)) checkUse(*b.atom);
		for (const auto& h : headRefs(r)) {
			for (const auto* c : h.conditions) checkUse(*c);
		}
	}
	if (program.compute) {
		std::vector<BodyRef> refs;
		for (const auto& l : program.compute->literals) literalRefs(l, refs);
		for (const auto& b : refs) checkUse(*b.atom);
	}
	std::stable_sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) {
		return std::tie(a.pos.file, a.pos.line, a.pos.column) < std::tie(b.pos.file, b.pos.line, b.pos.column);
	});
	return out;
}

} // namespace aspkit
