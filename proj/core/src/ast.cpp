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

#include <aspkit/ast.h>

#include <ostream>
#include <sstream>

namespace aspkit {

const char* toString(FuncOp op) {
	switch (op) {
		case FuncOp::Add: return "+";
		case FuncOp::Sub: return "-";
		case FuncOp::Mul: return "*";
		case FuncOp::Div: return "/";
		case FuncOp::Mod: return "mod";
		case FuncOp::Abs: return "abs";
		case FuncOp::Neg: return "-";
	}
	return "?";
}

const char* toString(CmpOp op) {
	switch (op) {
		case CmpOp::Eq: return "==";
		case CmpOp::Ne: return "!=";
		case CmpOp::Lt: return "<";
		case CmpOp::Le: return "<=";
		case CmpOp::Gt: return ">";
		case CmpOp::Ge: return ">=";
	}
	return "?";
}

Term Term::variable(std::string name, Position pos) {
	Term t;
	t.kind = TermKind::Variable;
	t.name = std::move(name);
	t.pos  = std::move(pos);
	return t;
}

Term Term::symbol(std::string name, Position pos) {
	Term t;
	t.kind = TermKind::Symbol;
	t.name = std::move(name);
	t.pos  = std::move(pos);
	return t;
}

Term Term::integer(int64_t value, Position pos) {
	Term t;
	t.kind  = TermKind::Integer;
	t.value = value;
	t.pos   = std::move(pos);
	return t;
}

Term Term::range(Term lo, Term hi, Position pos) {
	Term t;
	t.kind = TermKind::Range;
	t.args.push_back(std::move(lo));
	t.args.push_back(std::move(hi));
	t.pos = std::move(pos);
	return t;
}

Term Term::pool(std::vector<Term> members, Position pos) {
	Term t;
	t.kind = TermKind::Pool;
	t.args = std::move(members);
	t.pos  = std::move(pos);
	return t;
}

Term Term::func(FuncOp op, std::vector<Term> args, Position pos) {
	Term t;
	t.kind = TermKind::Func;
	t.op   = op;
	t.args = std::move(args);
	t.pos  = std::move(pos);
	return t;
}

bool Term::isGround() const {
	if (kind == TermKind::Variable) return false;
	for (const auto& a : args) {
		if (!a.isGround()) return false;
	}
	return true;
}

bool Term::containsRangeOrPool() const {
	if (kind == TermKind::Range || kind == TermKind::Pool) return true;
	for (const auto& a : args) {
		if (a.containsRangeOrPool()) return true;
	}
	return false;
}

bool operator==(const Term& lhs, const Term& rhs) {
	if (lhs.kind != rhs.kind) return false;
	switch (lhs.kind) {
		case TermKind::Variable:
		case TermKind::Symbol:   return lhs.name == rhs.name;
		case TermKind::Integer:  return lhs.value == rhs.value;
		case TermKind::Func:     return lhs.op == rhs.op && lhs.args == rhs.args;
		default:                 return lhs.args == rhs.args;
	}
}

Literal Literal::makeAtom(Atom a, bool negative) {
	Literal l;
	l.kind     = LiteralKind::Atom;
	l.pos      = a.pos;
	l.atom     = std::move(a);
	l.negative = negative;
	return l;
}

Literal Literal::makeConditional(Atom a, std::vector<Atom> conditions, bool negative) {
	Literal l  = makeAtom(std::move(a), negative);
	l.kind       = LiteralKind::Conditional;
	l.conditions = std::move(conditions);
	return l;
}

Literal Literal::makeComparison(Term lhs, CmpOp op, Term rhs) {
	Literal l;
	l.kind = LiteralKind::Comparison;
	l.pos  = lhs.pos;
	l.lhs  = std::move(lhs);
	l.cmp  = op;
	l.rhs  = std::move(rhs);
	return l;
}

bool operator==(const Literal& lhs, const Literal& rhs) {
	if (lhs.kind != rhs.kind || lhs.negative != rhs.negative) return false;
	switch (lhs.kind) {
		case LiteralKind::Atom:        return lhs.atom == rhs.atom;
		case LiteralKind::Conditional: return lhs.atom == rhs.atom && lhs.conditions == rhs.conditions;
		case LiteralKind::Comparison:  return lhs.cmp == rhs.cmp && lhs.lhs == rhs.lhs && lhs.rhs == rhs.rhs;
	}
	return false;
}

bool operator==(const Head& lhs, const Head& rhs) {
	if (lhs.kind != rhs.kind) return false;
	switch (lhs.kind) {
		case HeadKind::Atom:      return lhs.atom == rhs.atom;
		case HeadKind::Aggregate: return lhs.aggregate == rhs.aggregate;
		case HeadKind::Integrity: return true;
	}
	return false;
}

void collectVariables(const Term& t, std::vector<std::string>& out) {
	if (t.kind == TermKind::Variable) {
		out.push_back(t.name);
		return;
	}
	for (const auto& a : t.args) collectVariables(a, out);
}

void collectVariables(const Atom& a, std::vector<std::string>& out) {
	for (const auto& t : a.args) collectVariables(t, out);
}

void collectVariables(const Literal& l, std::vector<std::string>& out) {
	switch (l.kind) {
		case LiteralKind::Atom: collectVariables(l.atom, out); break;
		case LiteralKind::Conditional:
			collectVariables(l.atom, out);
			for (const auto& c : l.conditions) collectVariables(c, out);
			break;
		case LiteralKind::Comparison:
			collectVariables(l.lhs, out);
			collectVariables(l.rhs, out);
			break;
	}
}

/////////////////////////////////////////////////////////////////////////////////////////
// Printing
/////////////////////////////////////////////////////////////////////////////////////////
std::ostream& operator<<(std::ostream& os, const Term& t) {
	switch (t.kind) {
		case TermKind::Variable:
		case TermKind::Symbol:  return os << t.name;
		case TermKind::Integer: return os << t.value;
		case TermKind::Range:   return os << t.args[0] << ".." << t.args[1];
		case TermKind::Pool:
			for (std::size_t i = 0; i != t.args.size(); ++i) {
				if (i) os << ";";
				os << t.args[i];
			}
			return os;
		case TermKind::Func:
			if (t.op == FuncOp::Abs) return os << "abs(" << t.args[0] << ")";
			if (t.op == FuncOp::Neg) return os << "-(" << t.args[0] << ")";
			if (t.op == FuncOp::Mod) return os << "(" << t.args[0] << " mod " << t.args[1] << ")";
			return os << "(" << t.args[0] << toString(t.op) << t.args[1] << ")";
	}
	return os;
}

std::ostream& operator<<(std::ostream& os, const Atom& a) {
	os << a.predicate;
	if (!a.args.empty()) {
		os << "(";
		for (std::size_t i = 0; i != a.args.size(); ++i) {
			if (i) os << ",";
			os << a.args[i];
		}
		os << ")";
	}
	return os;
}

std::ostream& operator<<(std::ostream& os, const Literal& l) {
	if (l.kind == LiteralKind::Comparison) {
		return os << l.lhs << " " << toString(l.cmp) << " " << l.rhs;
	}
	if (l.negative) os << "not ";
	os << l.atom;
	for (const auto& c : l.conditions) os << ":" << c;
	return os;
}

std::ostream& operator<<(std::ostream& os, const Aggregate& a) {
	if (a.lower) os << *a.lower << " ";
	os << (a.weighted ? "[" : "{");
	for (std::size_t i = 0; i != a.elements.size(); ++i) {
		os << (i ? ", " : " ") << a.elements[i].literal;
		if (a.weighted) os << "=" << a.elements[i].weight;
	}
	os << (a.elements.empty() ? "" : " ") << (a.weighted ? "]" : "}");
	if (a.upper) os << " " << *a.upper;
	return os;
}

namespace {
std::ostream& printBodyElement(std::ostream& os, const BodyElement& e) {
	std::visit([&os](const auto& x) { os << x; }, e);
	return os;
}
} // namespace

std::ostream& operator<<(std::ostream& os, const Rule& r) {
	switch (r.head.kind) {
		case HeadKind::Atom:      os << r.head.atom; break;
		case HeadKind::Aggregate: os << r.head.aggregate; break;
		case HeadKind::Integrity: break;
	}
	if (!r.body.empty()) {
		os << (r.head.kind == HeadKind::Integrity ? ":- " : " :- ");
		for (std::size_t i = 0; i != r.body.size(); ++i) {
			if (i) os << ", ";
			printBodyElement(os, r.body[i]);
		}
	}
	return os << ".";
}

std::ostream& operator<<(std::ostream& os, const ProgramAst& p) {
	for (const auto& [name, value] : p.constants) os << "#const " << name << "=" << value << ".\n";
	for (const auto& r : p.rules) os << r << "\n";
	if (p.compute) {
		os << "compute ";
		if (p.compute->models) os << *p.compute->models << " ";
		os << "{";
		for (std::size_t i = 0; i != p.compute->literals.size(); ++i) {
			os << (i ? ", " : " ") << p.compute->literals[i];
		}
		os << (p.compute->literals.empty() ? "" : " ") << "}.\n";
	}
	return os;
}

namespace {
template <class T>
std::string stringify(const T& x) {
	std::ostringstream os;
	os << x;
	return os.str();
}
} // namespace

std::string toString(const Term& t) { return stringify(t); }
std::string toString(const Atom& a) { return stringify(a); }
std::string toString(const Rule& r) { return stringify(r); }
std::string toString(const ProgramAst& p) { return stringify(p); }

} // namespace aspkit
