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

#include <aspkit/grounder.h>

#include <algorithm>
#include <climits>
#include <limits>
#include <ostream>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace aspkit {

/////////////////////////////////////////////////////////////////////////////////////////
// Pool expansion
/////////////////////////////////////////////////////////////////////////////////////////
namespace {

std::vector<Atom> expandAtom(const Atom& a) {
	std::vector<Atom> out(1);
	out[0].predicate = a.predicate;
	out[0].pos       = a.pos;
	for (const auto& arg : a.args) {
		std::vector<Term> members = arg.kind == TermKind::Pool ? arg.args : std::vector<Term>{arg};
		std::vector<Atom> next;
		next.reserve(out.size() * members.size());
		for (const auto& partial : out) {
			for (const auto& m : members) {
				next.push_back(partial);
				next.back().args.push_back(m);
			}
		}
		out = std::move(next);
	}
	return out;
}

std::vector<Literal> expandLiteral(const Literal& l) {
	if (l.kind == LiteralKind::Comparison) return {l};
	std::vector<Literal> out;
	for (auto& a : expandAtom(l.atom)) {
		Literal copy = l;
		copy.atom    = std::move(a);
		copy.conditions.clear();
		out.push_back(std::move(copy));
	}
	for (const auto& cond : l.conditions) {
		auto                 alts = expandAtom(cond);
		std::vector<Literal> next;
		for (const auto& partial : out) {
			for (const auto& c : alts) {
				next.push_back(partial);
				next.back().conditions.push_back(c);
			}
		}
		out = std::move(next);
	}
	return out;
}

Aggregate expandAggregate(const Aggregate& agg) {
	Aggregate out = agg;
	out.elements.clear();
	for (const auto& e : agg.elements) {
		for (auto& l : expandLiteral(e.literal)) out.elements.push_back(WeightedLiteral{std::move(l), e.weight});
	}
	return out;
}

} // namespace

ProgramAst expandPools(const ProgramAst& program) {
	ProgramAst out;
	out.constants = program.constants;
	for (const auto& r : program.rules) {
		std::vector<Rule> variants(1);
		variants[0].pos       = r.pos;
		variants[0].head.kind = r.head.kind;
		if (r.head.kind == HeadKind::Aggregate) variants[0].head.aggregate = expandAggregate(r.head.aggregate);
		if (r.head.kind == HeadKind::Atom) {
			std::vector<Rule> next;
			for (auto& a : expandAtom(r.head.atom)) {
				next.push_back(variants[0]);
				next.back().head.atom = std::move(a);
			}
			variants = std::move(next);
		}
		for (const auto& b : r.body) {
			std::vector<BodyElement> alts;
			if (const auto* l = std::get_if<Literal>(&b)) {
				for (auto& x : expandLiteral(*l)) alts.emplace_back(std::move(x));
			}
			else {
				alts.emplace_back(expandAggregate(std::get<Aggregate>(b)));
			}
			std::vector<Rule> next;
			next.reserve(variants.size() * alts.size());
			for (const auto& partial : variants) {
				for (const auto& alt : alts) {
					next.push_back(partial);
					next.back().body.push_back(alt);
				}
			}
			variants = std::move(next);
		}
		for (auto& v : variants) out.rules.push_back(std::move(v));
	}
	if (program.compute) {
		ComputeStatement c = *program.compute;
		c.literals.clear();
		for (const auto& l : program.compute->literals) {
			for (auto& x : expandLiteral(l)) c.literals.push_back(std::move(x));
		}
		out.compute = std::move(c);
	}
	return out;
}

namespace {

/////////////////////////////////////////////////////////////////////////////////////////
// Compiled rules
/////////////////////////////////////////////////////////////////////////////////////////
struct CTerm {
	TermKind           kind = TermKind::Integer;
	FuncOp             op   = FuncOp::Add;
	int                var  = -1;
	Value              value;
	std::string        name; // symbol name, kept for error messages
	std::vector<CTerm> args;
	Position           pos;
};

struct CAtom {
	PredicateKey     key;
	Value            predSym; // interned "name/arity", first component of atom keys
	bool             domain   = false;
	bool             hasRange = false;
	const Relation*  rel      = nullptr;
	std::vector<CTerm> args;
	std::vector<int> bareVars;   // variables occurring directly as arguments
	std::vector<int> neededVars; // variables inside compound arguments
	std::vector<int> allVars;
	Position         pos;
};

struct CLiteral {
	LiteralKind        kind     = LiteralKind::Atom;
	bool               negative = false;
	CAtom              atom;
	std::vector<CAtom> conditions;
	CmpOp              cmp = CmpOp::Eq;
	CTerm              lhs, rhs;
	std::vector<int>   vars;
	Position           pos;
};

struct CElement {
	CLiteral literal;
	CTerm    weight;
};

struct CAggregate {
	bool                  weighted = false;
	std::optional<CTerm>  lower, upper;
	std::vector<CElement> elements;
	Position              pos;
};

struct CRule {
	HeadKind                headKind = HeadKind::Atom;
	CAtom                   head;
	CAggregate              headAggregate;
	std::vector<CLiteral>   body;
	std::vector<CAggregate> aggregates;
	int                     numVars = 0;
	Position                pos;
};

class VarTable {
public:
	int index(const std::string& name) {
		auto [it, inserted] = idx_.emplace(name, static_cast<int>(idx_.size()));
		return it->second;
	}
	int size() const { return static_cast<int>(idx_.size()); }

private:
	std::map<std::string, int> idx_;
};

struct Binding {
	explicit Binding(int n)
		: values(static_cast<std::size_t>(n))
		, bound(static_cast<std::size_t>(n), 0) {}
	bool isBound(int v) const { return bound[static_cast<std::size_t>(v)] != 0; }
	void bind(int v, Value x) {
		values[static_cast<std::size_t>(v)] = x;
		bound[static_cast<std::size_t>(v)]  = 1;
	}
	void unbind(int v) { bound[static_cast<std::size_t>(v)] = 0; }

	std::vector<Value>   values;
	std::vector<uint8_t> bound;
};

void termVars(const CTerm& t, std::vector<int>& out) {
	if (t.kind == TermKind::Variable) out.push_back(t.var);
	for (const auto& a : t.args) termVars(a, out);
}

bool allBound(const std::vector<int>& vars, const std::vector<uint8_t>& bound) {
	return std::ranges::all_of(vars, [&](int v) { return bound[static_cast<std::size_t>(v)] != 0; });
}

// Planner item: a positive domain atom matched against its relation within a
// window of tuple indices, or a literal checked once its variables are bound.
struct Goal {
	enum Kind : uint8_t { Match, Check } kind = Match;
	const CAtom*    atom = nullptr;
	const CLiteral* lit  = nullptr;
	std::size_t     lo   = 0;
	std::size_t     hi   = std::numeric_limits<std::size_t>::max();

	std::size_t windowSize() const {
		std::size_t end = std::min(hi, atom->rel ? atom->rel->size() : 0);
		return end > lo ? end - lo : 0;
	}
};

// Aggregate element instance before folding/interning.
struct Instance {
	const CAtom* atom;
	Tuple        args;
	bool         negative;
	int64_t      weight;
};

/////////////////////////////////////////////////////////////////////////////////////////
// Context: compilation, term evaluation and joins
/////////////////////////////////////////////////////////////////////////////////////////
class Context {
public:
	Context(SymbolPool& pool, const PredicateMap& info, std::vector<Diagnostic>& warnings)
		: pool_(pool)
		, info_(info)
		, warnings_(warnings) {}

	using RelationFor = std::function<const Relation*(const PredicateKey&)>;

	CTerm compile(const Term& t, VarTable& vars) {
		CTerm c;
		c.kind = t.kind;
		c.op   = t.op;
		c.pos  = t.pos;
		switch (t.kind) {
			case TermKind::Variable: c.var = vars.index(t.name); break;
			case TermKind::Symbol:
				c.value = pool_.symbol(t.name);
				c.name  = t.name;
				break;
			case TermKind::Integer: c.value = Value::integer(t.value); break;
			default:
				for (const auto& a : t.args) c.args.push_back(compile(a, vars));
				break;
		}
		return c;
	}

	CAtom compile(const Atom& a, VarTable& vars, const RelationFor& relFor) {
		CAtom c;
		c.key = keyOf(a);
		c.pos = a.pos;
		if (c.key.arity > 63) throw GroundingError(a.pos, "predicate " + toString(c.key) + " has too many arguments");
		c.predSym = pool_.symbol(toString(c.key));
		c.domain  = isDomain(info_, c.key);
		if (c.domain) {
			c.rel = relFor(c.key);
			if (!c.rel) c.rel = &empty_;
		}
		for (const auto& t : a.args) {
			c.args.push_back(compile(t, vars));
			const CTerm& ct = c.args.back();
			if (ct.kind == TermKind::Range) c.hasRange = true;
			if (ct.kind == TermKind::Variable) c.bareVars.push_back(ct.var);
			else termVars(ct, c.neededVars);
		}
		c.allVars = c.bareVars;
		c.allVars.insert(c.allVars.end(), c.neededVars.begin(), c.neededVars.end());
		return c;
	}

	CLiteral compile(const Literal& l, VarTable& vars, const RelationFor& relFor) {
		CLiteral c;
		c.kind     = l.kind;
		c.negative = l.negative;
		c.pos      = l.pos;
		if (l.kind == LiteralKind::Comparison) {
			c.cmp = l.cmp;
			c.lhs = compile(l.lhs, vars);
			c.rhs = compile(l.rhs, vars);
			termVars(c.lhs, c.vars);
			termVars(c.rhs, c.vars);
			return c;
		}
		c.atom = compile(l.atom, vars, relFor);
		c.vars = c.atom.allVars;
		for (const auto& cond : l.conditions) c.conditions.push_back(compile(cond, vars, relFor));
		return c;
	}

	CAggregate compile(const Aggregate& a, VarTable& vars, const RelationFor& relFor) {
		CAggregate c;
		c.weighted = a.weighted;
		c.pos      = a.pos;
		if (a.lower) c.lower = compile(*a.lower, vars);
		if (a.upper) c.upper = compile(*a.upper, vars);
		for (const auto& e : a.elements) c.elements.push_back({compile(e.literal, vars, relFor), compile(e.weight, vars)});
		return c;
	}

	CRule compile(const Rule& r, const RelationFor& relFor) {
		VarTable vars;
		CRule    c;
		c.pos      = r.pos;
		c.headKind = r.head.kind;
		if (r.head.kind == HeadKind::Atom) c.head = compile(r.head.atom, vars, relFor);
		if (r.head.kind == HeadKind::Aggregate) c.headAggregate = compile(r.head.aggregate, vars, relFor);
		for (const auto& b : r.body) {
			if (const auto* l = std::get_if<Literal>(&b)) c.body.push_back(compile(*l, vars, relFor));
			else c.aggregates.push_back(compile(std::get<Aggregate>(b), vars, relFor));
		}
		c.numVars = vars.size();
		return c;
	}

	/////////////////////////////////////////////////////////////////////////////////////
	// Evaluation
	/////////////////////////////////////////////////////////////////////////////////////
	Value eval(const CTerm& t, const Binding& b) const {
		switch (t.kind) {
			case TermKind::Integer:
			case TermKind::Symbol:   return t.value;
			case TermKind::Variable:
				if (!b.isBound(t.var)) throw GroundingError(t.pos, "variable is not bound at this point");
				return b.values[static_cast<std::size_t>(t.var)];
			case TermKind::Range:
			case TermKind::Pool: throw GroundingError(t.pos, "range or pool not allowed in this position");
			case TermKind::Func: break;
		}
		int64_t x = integerOperand(t.args[0], b);
		int64_t r = 0;
		switch (t.op) {
			case FuncOp::Abs:
				if (x == std::numeric_limits<int64_t>::min()) throw ArithmeticError(t.pos, "integer overflow in abs");
				return Value::integer(x < 0 ? -x : x);
			case FuncOp::Neg:
				if (__builtin_sub_overflow(int64_t(0), x, &r)) throw ArithmeticError(t.pos, "integer overflow in negation");
				return Value::integer(r);
			default: break;
		}
		int64_t y = integerOperand(t.args[1], b);
		bool    overflow = false;
		switch (t.op) {
			case FuncOp::Add: overflow = __builtin_add_overflow(x, y, &r); break;
			case FuncOp::Sub: overflow = __builtin_sub_overflow(x, y, &r); break;
			case FuncOp::Mul: overflow = __builtin_mul_overflow(x, y, &r); break;
			case FuncOp::Div:
			case FuncOp::Mod:
				if (y == 0) throw ArithmeticError(t.pos, "division by zero");
				if (x == std::numeric_limits<int64_t>::min() && y == -1) {
					overflow = t.op == FuncOp::Div;
					r        = 0;
				}
				else {
					r = t.op == FuncOp::Div ? x / y : x % y;
				}
				break;
			default: break;
		}
		if (overflow) throw ArithmeticError(t.pos, std::string("integer overflow in '") + toString(t.op) + "'");
		return Value::integer(r);
	}

	int64_t integerOperand(const CTerm& t, const Binding& b) const {
		Value v = eval(t, b);
		if (v.isInteger()) return v.integer();
		if (t.kind == TermKind::Symbol) throw UnboundConstant(t.pos, t.name);
		throw ArithmeticError(t.pos, "arithmetic on symbolic constant '" + v.symbol() + "'");
	}

	int64_t evalInteger(const CTerm& t, const Binding& b, const char* what) const {
		Value v = eval(t, b);
		if (v.isInteger()) return v.integer();
		if (t.kind == TermKind::Symbol) throw UnboundConstant(t.pos, t.name);
		throw GroundingError(t.pos, std::string(what) + " must be an integer, got '" + v.symbol() + "'");
	}

	// Values of an argument; a range yields all its integers.
	void expand(const CTerm& t, const Binding& b, std::vector<Value>& out) {
		if (t.kind != TermKind::Range) {
			out.push_back(eval(t, b));
			return;
		}
		auto bound = [&](const CTerm& x) {
			Value v = eval(x, b);
			if (v.isInteger()) return v.integer();
			if (x.kind == TermKind::Symbol) throw UnboundConstant(x.pos, x.name);
			throw ArithmeticError(x.pos, "range bound '" + v.symbol() + "' is not an integer");
		};
		int64_t lo = bound(t.args[0]);
		int64_t hi = bound(t.args[1]);
		if (lo > hi) {
			warn(t.pos, "empty range " + std::to_string(lo) + ".." + std::to_string(hi));
			return;
		}
		for (int64_t i = lo;; ++i) {
			out.push_back(Value::integer(i));
			if (i == hi) break;
		}
	}

	// All ground argument tuples of `a` under `b` (several if arguments are ranges).
	std::vector<Tuple> groundArgs(const CAtom& a, const Binding& b) {
		std::vector<Tuple> out(1);
		if (!a.hasRange) {
			out[0].reserve(a.args.size());
			for (const auto& t : a.args) out[0].push_back(eval(t, b));
			return out;
		}
		std::vector<Value> vals;
		for (const auto& t : a.args) {
			vals.clear();
			expand(t, b, vals);
			std::vector<Tuple> next;
			next.reserve(out.size() * vals.size());
			for (const auto& partial : out) {
				for (const auto& v : vals) {
					next.push_back(partial);
					next.back().push_back(v);
				}
			}
			out = std::move(next);
		}
		return out;
	}

	static bool compare(CmpOp op, const Value& x, const Value& y) {
		switch (op) {
			case CmpOp::Eq: return x == y;
			case CmpOp::Ne: return x != y;
			case CmpOp::Lt: return x < y;
			case CmpOp::Le: return x <= y;
			case CmpOp::Gt: return x > y;
			case CmpOp::Ge: return x >= y;
		}
		return false;
	}

	bool holds(const CLiteral& l, const Binding& b) {
		if (l.kind == LiteralKind::Comparison) return compare(l.cmp, eval(l.lhs, b), eval(l.rhs, b));
		for (const auto& t : groundArgs(l.atom, b)) {
			if (l.atom.rel->contains(t) == l.negative) return false;
		}
		return true;
	}

	/////////////////////////////////////////////////////////////////////////////////////
	// Joins
	/////////////////////////////////////////////////////////////////////////////////////
	// Orders goals: checks run as soon as their variables are bound; among the
	// matches whose compound arguments are evaluable, the smallest window goes next.
	static std::vector<Goal> plan(std::vector<Goal> matches, std::vector<Goal> checks, std::vector<uint8_t> bound,
	                              const Position& where) {
		std::vector<Goal> out;
		std::vector<bool> usedCheck(checks.size(), false);
		auto              flush = [&] {
            for (std::size_t i = 0; i != checks.size(); ++i) {
                if (!usedCheck[i] && allBound(checks[i].lit->vars, bound)) {
                    usedCheck[i] = true;
                    out.push_back(checks[i]);
                }
            }
		};
		flush();
		std::vector<bool> usedMatch(matches.size(), false);
		for (std::size_t n = 0; n != matches.size(); ++n) {
			std::size_t best = matches.size();
			for (std::size_t i = 0; i != matches.size(); ++i) {
				if (usedMatch[i] || !allBound(matches[i].atom->neededVars, bound)) continue;
				if (best == matches.size() || matches[i].windowSize() < matches[best].windowSize()) best = i;
			}
			if (best == matches.size()) {
				throw GroundingError(where, "cannot instantiate rule: arguments of a domain literal depend on unbound variables");
			}
			usedMatch[best] = true;
			out.push_back(matches[best]);
			for (int v : matches[best].atom->bareVars) bound[static_cast<std::size_t>(v)] = 1;
			flush();
		}
		for (std::size_t i = 0; i != checks.size(); ++i) {
			if (!usedCheck[i]) throw GroundingError(checks[i].lit->pos, "literal contains variables that are never bound");
		}
		return out;
	}

	template <class Emit>
	void join(const std::vector<Goal>& goals, std::size_t i, Binding& b, Emit& emit) {
		if (i == goals.size()) {
			emit();
			return;
		}
		const Goal& g = goals[i];
		if (g.kind == Goal::Check) {
			if (holds(*g.lit, b)) join(goals, i + 1, b, emit);
			return;
		}
		const CAtom&    a   = *g.atom;
		const Relation& rel = *a.rel;
		uint64_t        mask = 0;
		Tuple           key;
		for (std::size_t k = 0; k != a.args.size(); ++k) {
			const CTerm& t = a.args[k];
			if (t.kind == TermKind::Variable && !b.isBound(t.var)) continue;
			mask |= uint64_t(1) << k;
			key.push_back(eval(t, b));
		}
		std::size_t hi    = std::min(g.hi, rel.size());
		int         fresh[64];
		auto        visit = [&](std::size_t idx) {
            if (idx < g.lo || idx >= hi) return;
            const Tuple& tup = rel[idx];
            int          n   = 0;
            bool         ok  = true;
            for (std::size_t k = 0; k != a.args.size() && ok; ++k) {
                const CTerm& t = a.args[k];
                if (t.kind != TermKind::Variable || (mask >> k) & 1) continue;
                if (!b.isBound(t.var)) {
                    b.bind(t.var, tup[k]);
                    fresh[n++] = t.var;
                }
                else {
                    ok = b.values[static_cast<std::size_t>(t.var)] == tup[k];
                }
            }
            if (ok) join(goals, i + 1, b, emit);
            for (int j = 0; j != n; ++j) b.unbind(fresh[j]);
		};
		uint64_t full = a.args.size() == 64 ? ~uint64_t(0) : (uint64_t(1) << a.args.size()) - 1;
		if (mask == 0) {
			for (std::size_t idx = g.lo; idx < hi; ++idx) visit(idx);
		}
		else if (mask == full) {
			if (int64_t idx = rel.indexOf(key); idx >= 0) visit(static_cast<std::size_t>(idx));
		}
		else {
			for (uint32_t idx : rel.lookup(mask, key)) visit(idx);
		}
	}

	// Calls `fn` once per binding of the local variables of conditional `l`.
	template <class Fn>
	void forEachCondition(const CLiteral& l, Binding& b, Fn&& fn) {
		std::vector<Goal> matches, checks;
		for (const auto& c : l.conditions) {
			Goal g;
			g.atom = &c;
			if (c.hasRange) {
				condChecks_.push_back(std::make_unique<CLiteral>());
				CLiteral& cl = *condChecks_.back();
				cl.atom      = c;
				cl.vars      = c.allVars;
				g.kind       = Goal::Check;
				g.lit        = &cl;
				checks.push_back(g);
			}
			else {
				matches.push_back(g);
			}
		}
		auto goals = plan(std::move(matches), std::move(checks), b.bound, l.pos);
		join(goals, 0, b, fn);
	}

	// Element instances of an aggregate under `b`; duplicates are merged
	// (cardinality: set semantics; weight: summed weights).
	std::vector<Instance> instances(const CAggregate& agg, Binding& b) {
		std::vector<Instance> out;
		for (const auto& e : agg.elements) {
			auto add = [&] {
				int64_t w = agg.weighted ? evalInteger(e.weight, b, "weight") : 1;
				for (auto& t : groundArgs(e.literal.atom, b)) out.push_back({&e.literal.atom, std::move(t), e.literal.negative, w});
			};
			if (e.literal.kind == LiteralKind::Conditional) forEachCondition(e.literal, b, add);
			else add();
		}
		std::vector<Instance> merged;
		std::unordered_map<Tuple, std::size_t, TupleHash> seen;
		Tuple                                             key;
		for (auto& inst : out) {
			key.clear();
			key.push_back(inst.atom->predSym);
			key.push_back(Value::integer(inst.negative ? 1 : 0));
			key.insert(key.end(), inst.args.begin(), inst.args.end());
			auto [it, inserted] = seen.emplace(key, merged.size());
			if (inserted) {
				merged.push_back(std::move(inst));
			}
			else if (agg.weighted) {
				int64_t& w = merged[it->second].weight;
				if (__builtin_add_overflow(w, inst.weight, &w)) throw ArithmeticError(agg.pos, "integer overflow summing weights");
			}
		}
		return merged;
	}

	void warn(const Position& pos, const std::string& msg) {
		if (warned_.insert({pos.file, pos.line, pos.column}).second) warnings_.push_back({Severity::Warning, pos, msg});
	}

	SymbolPool& pool() { return pool_; }

private:
	SymbolPool&                                          pool_;
	const PredicateMap&                                  info_;
	std::vector<Diagnostic>&                             warnings_;
	std::set<std::tuple<std::string, uint32_t, uint32_t>> warned_;
	std::vector<std::unique_ptr<CLiteral>>               condChecks_;
	Relation                                             empty_;
};

// Splits a rule body into match goals and check goals over domain predicates.
void bodyGoals(const CRule& r, std::vector<Goal>& matches, std::vector<Goal>& checks) {
	for (const auto& l : r.body) {
		if (l.kind == LiteralKind::Comparison) {
			checks.push_back(Goal{Goal::Check, nullptr, &l});
		}
		else if (l.kind == LiteralKind::Atom && l.atom.domain) {
			if (l.negative || l.atom.hasRange) checks.push_back(Goal{Goal::Check, &l.atom, &l});
			else matches.push_back(Goal{Goal::Match, &l.atom, &l});
		}
	}
}

// Satisfaction of an aggregate whose elements are all over domain predicates.
bool aggregateHolds(Context& ctx, const CAggregate& agg, Binding& b) {
	int64_t sum = 0;
	for (const auto& inst : ctx.instances(agg, b)) {
		if (!inst.atom->domain) throw GroundingError(agg.pos, "non-domain literal in a domain rule");
		if (inst.atom->rel->contains(inst.args) != inst.negative) {
			if (__builtin_add_overflow(sum, inst.weight, &sum)) throw ArithmeticError(agg.pos, "integer overflow summing weights");
		}
	}
	if (agg.lower && sum < ctx.evalInteger(*agg.lower, b, "lower bound")) return false;
	if (agg.upper && sum > ctx.evalInteger(*agg.upper, b, "upper bound")) return false;
	return true;
}

} // namespace

/////////////////////////////////////////////////////////////////////////////////////////
// Domain predicate evaluation
/////////////////////////////////////////////////////////////////////////////////////////
Extension evaluateDomainPredicates(const ProgramAst& program, const PredicateMap& info,
                                   std::vector<Diagnostic>* warnings) {
	Extension               ext;
	std::vector<Diagnostic> localWarnings;
	Context                 ctx(ext.pool(), info, warnings ? *warnings : localWarnings);
	DependencyGraph         graph = buildDependencyGraph(program);
	for (const auto& key : graph.nodes()) {
		if (isDomain(info, key)) ext.relation(key);
	}
	auto relFor = [&ext](const PredicateKey& key) -> const Relation* { return &ext.relation(key); };

	std::map<int, std::vector<CRule>> strata;
	for (const auto& r : program.rules) {
		if (r.head.kind != HeadKind::Atom || !isDomain(info, keyOf(r.head.atom))) continue;
		strata[graph.sccOf(keyOf(r.head.atom))].push_back(ctx.compile(r, relFor));
	}

	struct Derived {
		PredicateKey key;
		Tuple        tuple;
	};
	std::vector<Derived> buffer;

	// Evaluates `r` with the given tuple windows for its match goals.
	auto evalRule = [&](const CRule& r, const std::vector<std::pair<std::size_t, std::size_t>>& windows) {
		std::vector<Goal> matches, checks;
		bodyGoals(r, matches, checks);
		for (std::size_t i = 0; i != matches.size() && i != windows.size(); ++i) {
			matches[i].lo = windows[i].first;
			matches[i].hi = windows[i].second;
		}
		Binding b(r.numVars);
		auto    goals = Context::plan(std::move(matches), std::move(checks), b.bound, r.pos);
		auto    emit  = [&] {
            for (const auto& l : r.body) {
                if (l.kind != LiteralKind::Conditional) continue;
                bool ok   = true;
                auto test = [&] {
                    for (const auto& t : ctx.groundArgs(l.atom, b)) {
                        if (l.atom.rel->contains(t) == l.negative) ok = false;
                    }
                };
                ctx.forEachCondition(l, b, test);
                if (!ok) return;
            }
            for (const auto& agg : r.aggregates) {
                if (!aggregateHolds(ctx, agg, b)) return;
            }
            for (auto& t : ctx.groundArgs(r.head, b)) buffer.push_back({r.head.key, std::move(t)});
		};
		ctx.join(goals, 0, b, emit);
	};
	auto flush = [&] {
		bool grew = false;
		for (auto& d : buffer) grew |= ext.relation(d.key).insert(std::move(d.tuple));
		buffer.clear();
		return grew;
	};

	for (auto& [scc, rules] : strata) {
		std::set<PredicateKey> members;
		for (const auto& k : graph.component(scc)) members.insert(k);
		auto inStratum = [&](const CAtom& a) { return members.count(a.key) != 0; };

		// Full evaluation; for non-recursive strata this is all there is.
		for (const auto& r : rules) evalRule(r, {});
		flush();

		bool recursive = false;
		for (const auto& r : rules) {
			for (const auto& l : r.body) recursive |= l.kind != LiteralKind::Comparison && inStratum(l.atom);
		}
		if (!recursive) continue;

		std::map<PredicateKey, std::size_t> deltaLo, deltaHi;
		for (const auto& k : members) deltaLo[k] = 0;
		for (;;) {
			bool any = false;
			for (const auto& k : members) {
				deltaHi[k] = ext.relation(k).size();
				any |= deltaHi[k] > deltaLo[k];
			}
			if (!any) break;
			for (const auto& r : rules) {
				std::vector<Goal> matches, checks;
				bodyGoals(r, matches, checks);
				bool naive = !r.aggregates.empty();
				for (const auto& l : r.body) {
					bool sccLit = l.kind != LiteralKind::Comparison && inStratum(l.atom);
					naive |= sccLit && (l.kind == LiteralKind::Conditional || l.negative || l.atom.hasRange);
				}
				if (naive) {
					evalRule(r, {});
					continue;
				}
				// One pass per recursive literal: earlier ones see old tuples,
				// the chosen one sees only the delta, later ones see everything.
				for (std::size_t i = 0; i != matches.size(); ++i) {
					if (!inStratum(*matches[i].atom)) continue;
					std::vector<std::pair<std::size_t, std::size_t>> windows(matches.size(), {0, SIZE_MAX});
					for (std::size_t j = 0; j != matches.size(); ++j) {
						const auto& key = matches[j].atom->key;
						if (!members.count(key)) continue;
						if (j < i) windows[j] = {0, deltaLo[key]};
						else if (j == i) windows[j] = {deltaLo[key], deltaHi[key]};
						else windows[j] = {0, deltaHi[key]};
					}
					evalRule(r, windows);
				}
			}
			deltaLo = deltaHi;
			flush();
		}
	}
	return ext;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Rule instantiation
/////////////////////////////////////////////////////////////////////////////////////////
namespace {

class Instantiator {
public:
	Instantiator(const PredicateMap& info, const Extension& ext, DomainMode mode, GroundingResult& out)
		: ctx_(ext.pool(), info, out.warnings)
		, info_(info)
		, ext_(ext)
		, mode_(mode)
		, out_(out) {}

	void run(const ProgramAst& program) {
		auto relFor = [this](const PredicateKey& key) { return ext_.find(key); };
		if (mode_ == DomainMode::Keep) emitDomainFacts();
		for (const auto& r : program.rules) {
			if (r.head.kind == HeadKind::Atom && isDomain(info_, keyOf(r.head.atom))) continue;
			CRule cr = ctx_.compile(r, relFor);
			instantiate(cr);
		}
		if (program.compute) compute(*program.compute, relFor);
	}

private:
	void emitDomainFacts() {
		for (const auto& key : ext_.predicates()) {
			if (!isDomain(info_, key)) continue;
			Value predSym = ext_.pool().symbol(toString(key));
			for (const auto& t : *ext_.find(key)) {
				GroundRule g;
				g.headKind = GroundHeadKind::Atom;
				g.head     = intern(key.name, predSym, t);
				out_.rules.push_back(std::move(g));
			}
		}
	}

	AtomId intern(const std::string& pred, const Value& predSym, const Tuple& args) {
		key_.clear();
		key_.push_back(predSym);
		key_.insert(key_.end(), args.begin(), args.end());
		auto it = ids_.find(key_);
		if (it != ids_.end()) return it->second;
		AtomId id = out_.symbols.intern(atomText(pred, args));
		ids_.emplace(key_, id);
		return id;
	}
	AtomId intern(const CAtom& a, const Tuple& args) { return intern(a.key.name, a.predSym, args); }

	void instantiate(const CRule& r) {
		std::vector<Goal> matches, checks;
		bodyGoals(r, matches, checks);
		Binding b(r.numVars);
		auto    goals = Context::plan(std::move(matches), std::move(checks), b.bound, r.pos);
		auto    emit  = [&] { emitInstance(r, b); };
		ctx_.join(goals, 0, b, emit);
	}

	// Adds the ground instances of `l` to `body`. Returns false if a domain
	// instance is false, which makes the whole rule instance inapplicable.
	bool addLiteral(const CLiteral& l, Binding& b, std::vector<GroundLiteral>& body) {
		for (const auto& t : ctx_.groundArgs(l.atom, b)) {
			if (l.atom.domain) {
				if (l.atom.rel->contains(t) == l.negative) return false;
				if (!l.negative && mode_ == DomainMode::Keep) body.push_back({intern(l.atom, t), false, 1});
			}
			else {
				body.push_back({intern(l.atom, t), l.negative, 1});
			}
		}
		return true;
	}

	// Grounds a body aggregate, folding domain literals into the bounds.
	// Returns nullopt if it can never hold; an aggregate without elements is
	// returned only when it cannot be decided statically (never).
	std::optional<GroundAggregate> groundBodyAggregate(const CAggregate& agg, Binding& b, bool& trivial) {
		GroundAggregate g;
		g.weighted = agg.weighted;
		if (agg.lower) g.lower = ctx_.evalInteger(*agg.lower, b, "lower bound");
		if (agg.upper) g.upper = ctx_.evalInteger(*agg.upper, b, "upper bound");
		for (const auto& inst : ctx_.instances(agg, b)) {
			if (!inst.atom->domain) {
				g.elements.push_back({intern(*inst.atom, inst.args), inst.negative, agg.weighted ? inst.weight : 1});
				continue;
			}
			if (inst.atom->rel->contains(inst.args) == inst.negative) continue;
			if ((g.lower && __builtin_sub_overflow(*g.lower, inst.weight, &*g.lower)) ||
			    (g.upper && __builtin_sub_overflow(*g.upper, inst.weight, &*g.upper))) {
				throw ArithmeticError(agg.pos, "integer overflow folding constraint bounds");
			}
		}
		trivial = false;
		if (g.elements.empty()) {
			bool holds = (!g.lower || *g.lower <= 0) && (!g.upper || *g.upper >= 0);
			if (!holds) return std::nullopt;
			trivial = true;
		}
		else if (!agg.weighted && (!g.lower || *g.lower <= 0) && !g.upper) {
			trivial = true;
		}
		return g;
	}

	GroundAggregate groundHeadAggregate(const CAggregate& agg, Binding& b) {
		GroundAggregate g;
		g.weighted = agg.weighted;
		if (agg.lower) g.lower = ctx_.evalInteger(*agg.lower, b, "lower bound");
		if (agg.upper) g.upper = ctx_.evalInteger(*agg.upper, b, "upper bound");
		for (const auto& inst : ctx_.instances(agg, b)) {
			g.elements.push_back({intern(*inst.atom, inst.args), false, agg.weighted ? inst.weight : 1});
		}
		return g;
	}

	void emitInstance(const CRule& r, Binding& b) {
		GroundRule g;
		for (const auto& l : r.body) {
			if (l.kind == LiteralKind::Comparison) continue;
			if (l.kind == LiteralKind::Atom) {
				if (!addLiteral(l, b, g.body)) return;
				continue;
			}
			bool ok  = true;
			auto add = [&] { ok = addLiteral(l, b, g.body) && ok; };
			ctx_.forEachCondition(l, b, add);
			if (!ok) return;
		}
		for (const auto& agg : r.aggregates) {
			bool trivial = false;
			auto ga      = groundBodyAggregate(agg, b, trivial);
			if (!ga) return;
			if (!trivial) g.aggregates.push_back(std::move(*ga));
		}
		dedupe(g.body);
		switch (r.headKind) {
			case HeadKind::Integrity:
				g.headKind = GroundHeadKind::Integrity;
				out_.rules.push_back(std::move(g));
				break;
			case HeadKind::Aggregate:
				g.headKind      = GroundHeadKind::Aggregate;
				g.headAggregate = groundHeadAggregate(r.headAggregate, b);
				out_.rules.push_back(std::move(g));
				break;
			case HeadKind::Atom: {
				auto heads = ctx_.groundArgs(r.head, b);
				for (std::size_t i = 0; i != heads.size(); ++i) {
					GroundRule copy = i + 1 == heads.size() ? std::move(g) : g;
					copy.headKind   = GroundHeadKind::Atom;
					copy.head       = intern(r.head, heads[i]);
					out_.rules.push_back(std::move(copy));
				}
				break;
			}
		}
	}

	static void dedupe(std::vector<GroundLiteral>& lits) {
		std::vector<GroundLiteral> out;
		out.reserve(lits.size());
		for (const auto& l : lits) {
			if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
		}
		lits = std::move(out);
	}

	void compute(const ComputeStatement& stmt, const Context::RelationFor& relFor) {
		out_.computeModels = stmt.models;
		bool unsat         = false;
		for (const auto& lit : stmt.literals) {
			VarTable vars;
			CLiteral cl = ctx_.compile(lit, vars, relFor);
			Binding  b(vars.size());
			auto     add = [&] {
                for (const auto& t : ctx_.groundArgs(cl.atom, b)) {
                    if (cl.atom.domain) {
                        unsat |= cl.atom.rel->contains(t) == cl.negative;
                        continue;
                    }
                    GroundLiteral g{intern(cl.atom, t), cl.negative, 1};
                    if (std::find(out_.compute.begin(), out_.compute.end(), g) == out_.compute.end()) out_.compute.push_back(g);
                }
			};
			if (cl.kind == LiteralKind::Conditional) ctx_.forEachCondition(cl, b, add);
			else add();
		}
		if (unsat) {
			GroundRule g;
			g.headKind = GroundHeadKind::Integrity;
			out_.rules.push_back(std::move(g));
		}
	}

	Context                                       ctx_;
	const PredicateMap&                           info_;
	const Extension&                              ext_;
	DomainMode                                    mode_;
	GroundingResult&                              out_;
	std::unordered_map<Tuple, AtomId, TupleHash> ids_;
	Tuple                                         key_;
};

} // namespace

GroundingResult instantiateRules(const ProgramAst& program, const PredicateMap& info, const Extension& ext,
                                 DomainMode mode) {
	GroundingResult out;
	Instantiator(info, ext, mode, out).run(program);
	return out;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Printing
/////////////////////////////////////////////////////////////////////////////////////////
namespace {
void printAtom(std::ostream& os, AtomId id, const SymbolTable& symbols) {
	if (symbols.isVisible(id)) os << symbols.name(id);
	else os << "_aux" << id;
}

void printAggregate(std::ostream& os, const GroundAggregate& agg, const SymbolTable& symbols) {
	if (agg.lower) os << *agg.lower << " ";
	os << (agg.weighted ? "[" : "{");
	for (std::size_t i = 0; i != agg.elements.size(); ++i) {
		const auto& e = agg.elements[i];
		os << (i ? ", " : " ") << (e.negative ? "not " : "");
		printAtom(os, e.atom, symbols);
		if (agg.weighted) os << "=" << e.weight;
	}
	os << (agg.elements.empty() ? "" : " ") << (agg.weighted ? "]" : "}");
	if (agg.upper) os << " " << *agg.upper;
}
} // namespace

std::ostream& printGroundRule(std::ostream& os, const GroundRule& rule, const SymbolTable& symbols) {
	switch (rule.headKind) {
		case GroundHeadKind::Atom:      printAtom(os, rule.head, symbols); break;
		case GroundHeadKind::Aggregate: printAggregate(os, rule.headAggregate, symbols); break;
		case GroundHeadKind::Integrity: break;
	}
	bool first = true;
	auto sep   = [&] {
        if (first) os << (rule.headKind == GroundHeadKind::Integrity ? ":- " : " :- ");
        else os << ", ";
        first = false;
	};
	for (const auto& l : rule.body) {
		sep();
		if (l.negative) os << "not ";
		printAtom(os, l.atom, symbols);
	}
	for (const auto& a : rule.aggregates) {
		sep();
		printAggregate(os, a, symbols);
	}
	if (first && rule.headKind == GroundHeadKind::Integrity) os << ":- ";
	return os << ".";
}

} // namespace aspkit
