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

#pragma once

#include <aspkit/error.h>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace aspkit {

/////////////////////////////////////////////////////////////////////////////////////////
// Terms
/////////////////////////////////////////////////////////////////////////////////////////
enum class TermKind : uint8_t { Variable, Symbol, Integer, Range, Pool, Func };

// Built-in functions. Neg is unary minus.
enum class FuncOp : uint8_t { Add, Sub, Mul, Div, Mod, Abs, Neg };

const char* toString(FuncOp op);

// Ranges and pools only occur as direct atom arguments; the parser never
// nests them inside a Func.
struct Term {
	TermKind          kind  = TermKind::Integer;
	FuncOp            op    = FuncOp::Add;
	std::string       name;      // Variable, Symbol
	int64_t           value = 0; // Integer
	std::vector<Term> args;      // Range: {lo, hi}; Pool: members; Func: operands
	Position          pos;

	static Term variable(std::string name, Position pos = {});
	static Term symbol(std::string name, Position pos = {});
	static Term integer(int64_t value, Position pos = {});
	static Term range(Term lo, Term hi, Position pos = {});
	static Term pool(std::vector<Term> members, Position pos = {});
	static Term func(FuncOp op, std::vector<Term> args, Position pos = {});

	bool isVariable() const { return kind == TermKind::Variable; }
	bool isGround() const;
	bool containsRangeOrPool() const;

	// Structural equality; positions are ignored.
	friend bool operator==(const Term& lhs, const Term& rhs);
};

struct Atom {
	std::string       predicate;
	std::vector<Term> args;
	Position          pos;

	uint32_t    arity() const { return static_cast<uint32_t>(args.size()); }
	friend bool operator==(const Atom& lhs, const Atom& rhs) {
		return lhs.predicate == rhs.predicate && lhs.args == rhs.args;
	}
};

enum class CmpOp : uint8_t { Eq, Ne, Lt, Le, Gt, Ge };
const char* toString(CmpOp op);

/////////////////////////////////////////////////////////////////////////////////////////
// Literals and rules
/////////////////////////////////////////////////////////////////////////////////////////
enum class LiteralKind : uint8_t { Atom, Comparison, Conditional };

struct Literal {
	LiteralKind       kind     = LiteralKind::Atom;
	bool              negative = false; // always false for comparisons
	Atom              atom;             // Atom, Conditional
	std::vector<Atom> conditions;       // Conditional
	CmpOp             cmp = CmpOp::Eq;  // Comparison
	Term              lhs, rhs;         // Comparison
	Position          pos;

	static Literal makeAtom(Atom a, bool negative = false);
	static Literal makeConditional(Atom a, std::vector<Atom> conditions, bool negative = false);
	static Literal makeComparison(Term lhs, CmpOp op, Term rhs);

	friend bool operator==(const Literal& lhs, const Literal& rhs);
};

struct WeightedLiteral {
	Literal literal;
	Term    weight = Term::integer(1);

	friend bool operator==(const WeightedLiteral&, const WeightedLiteral&) = default;
};

// Cardinality (`l { ... } u`) or weight (`l [ ... ] u`) constraint. A missing
// bound leaves that side unconstrained.
struct Aggregate {
	bool                         weighted = false;
	std::optional<Term>          lower;
	std::optional<Term>          upper;
	std::vector<WeightedLiteral> elements;
	Position                     pos;

	friend bool operator==(const Aggregate& lhs, const Aggregate& rhs) {
		return lhs.weighted == rhs.weighted && lhs.lower == rhs.lower && lhs.upper == rhs.upper &&
		       lhs.elements == rhs.elements;
	}
};

using BodyElement = std::variant<Literal, Aggregate>;

enum class HeadKind : uint8_t { Atom, Integrity, Aggregate };

struct Head {
	HeadKind  kind = HeadKind::Integrity;
	Atom      atom;
	Aggregate aggregate;

	friend bool operator==(const Head& lhs, const Head& rhs);
};

struct Rule {
	Head                     head;
	std::vector<BodyElement> body;
	Position                 pos;

	bool isFact() const { return head.kind == HeadKind::Atom && body.empty(); }
	friend bool operator==(const Rule& lhs, const Rule& rhs) { return lhs.head == rhs.head && lhs.body == rhs.body; }
};

struct ComputeStatement {
	std::optional<int64_t> models; // `compute N { ... }`; 0 means all
	std::vector<Literal>   literals;
	Position               pos;

	friend bool operator==(const ComputeStatement& lhs, const ComputeStatement& rhs) {
		return lhs.models == rhs.models && lhs.literals == rhs.literals;
	}
};

struct ProgramAst {
	std::vector<Rule>               rules;
	std::optional<ComputeStatement> compute;
	std::map<std::string, int64_t>  constants; // `#const name = value.`

	friend bool operator==(const ProgramAst&, const ProgramAst&) = default;
};

/////////////////////////////////////////////////////////////////////////////////////////
// Traversal helpers
/////////////////////////////////////////////////////////////////////////////////////////
// Appends the names of all variables in `t` (with repetition) to `out`.
void collectVariables(const Term& t, std::vector<std::string>& out);
void collectVariables(const Atom& a, std::vector<std::string>& out);
void collectVariables(const Literal& l, std::vector<std::string>& out);

/////////////////////////////////////////////////////////////////////////////////////////
// Printing. Output reparses to a structurally identical AST.
/////////////////////////////////////////////////////////////////////////////////////////
std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Atom& a);
std::ostream& operator<<(std::ostream& os, const Literal& l);
std::ostream& operator<<(std::ostream& os, const Aggregate& a);
std::ostream& operator<<(std::ostream& os, const Rule& r);
std::ostream& operator<<(std::ostream& os, const ProgramAst& p);

std::string toString(const Term& t);
std::string toString(const Atom& a);
std::string toString(const Rule& r);
std::string toString(const ProgramAst& p);

} // namespace aspkit
