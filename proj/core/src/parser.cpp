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

#include <aspkit/parser.h>

namespace aspkit {

namespace {

bool isComparison(TokenKind k) {
	switch (k) {
		case TokenKind::Eq:
		case TokenKind::Ne:
		case TokenKind::Lt:
		case TokenKind::Le:
		case TokenKind::Gt:
		case TokenKind::Ge:
		case TokenKind::Assign: return true;
		default:                return false;
	}
}

bool isArithmetic(TokenKind k) {
	return k == TokenKind::Plus || k == TokenKind::Minus || k == TokenKind::Star || k == TokenKind::Slash;
}

class Parser {
public:
	explicit Parser(std::span<const Token> toks)
		: toks_(toks) {
		if (toks_.empty() || toks_.back().kind != TokenKind::End) {
			throw ParseError(Position{}, "token stream terminated by end of input", "unterminated stream");
		}
	}

	ProgramAst run() {
		ProgramAst prog;
		while (cur().kind != TokenKind::End) statement(prog);
		return prog;
	}

private:
	const Token& cur() const { return toks_[at_]; }
	const Token& peek(std::size_t n) const { return toks_[std::min(at_ + n, toks_.size() - 1)]; }
	void         advance() {
        if (at_ + 1 < toks_.size()) ++at_;
	}
	bool accept(TokenKind k) {
		if (cur().kind != k) return false;
		advance();
		return true;
	}
	bool isIdent(const char* text) const { return cur().kind == TokenKind::Identifier && cur().text == text; }

	static std::string describe(const Token& t) {
		if (t.kind != TokenKind::Identifier && t.kind != TokenKind::Variable && t.kind != TokenKind::Number) {
			return toString(t.kind);
		}
		return std::string(toString(t.kind)) + " '" + t.text + "'";
	}

	[[noreturn]] void fail(const std::string& expected) const {
		throw ParseError(cur().pos, expected, describe(cur()));
	}
	[[noreturn]] void failAt(const Position& pos, const std::string& message) const {
		throw ParseError(pos, message, describe(cur()), ParseError::Kind::Semantic);
	}

	const Token& expect(TokenKind k) {
		if (cur().kind != k) fail(toString(k));
		const Token& t = cur();
		advance();
		return t;
	}

	void endStatement() {
		if (cur().kind == TokenKind::Dot) {
			advance();
			return;
		}
		throw ParseError(cur().pos, "'.'", describe(cur()), ParseError::Kind::MissingDot);
	}

	/////////////////////////////////////////////////////////////////////////////////////
	// Statements
	/////////////////////////////////////////////////////////////////////////////////////
	void statement(ProgramAst& prog) {
		if (cur().kind == TokenKind::Directive ||
		    (isIdent("const") && peek(1).kind == TokenKind::Identifier && peek(2).kind == TokenKind::Assign)) {
			constDecl(prog);
			return;
		}
		if (isIdent("compute")) {
			const Token& n = peek(1);
			bool hasCount  = n.kind == TokenKind::Number || (n.kind == TokenKind::Identifier && n.text == "all");
			if (n.kind == TokenKind::LBrace || (hasCount && peek(2).kind == TokenKind::LBrace)) {
				compute(prog);
				return;
			}
		}
		prog.rules.push_back(rule());
	}

	void constDecl(ProgramAst& prog) {
		Position pos = cur().pos;
		advance();
		std::string name = expect(TokenKind::Identifier).text;
		expect(TokenKind::Assign);
		Term value = term();
		if (value.kind != TermKind::Integer) failAt(pos, "value of constant '" + name + "' must be an integer");
		endStatement();
		prog.constants[name] = value.value;
	}

	void compute(ProgramAst& prog) {
		ComputeStatement stmt;
		stmt.pos = cur().pos;
		if (prog.compute) failAt(stmt.pos, "multiple compute statements");
		advance();
		if (cur().kind == TokenKind::Number) {
			stmt.models = cur().value;
			advance();
		}
		else if (isIdent("all")) {
			stmt.models = 0;
			advance();
		}
		expect(TokenKind::LBrace);
		if (!accept(TokenKind::RBrace)) {
			for (;;) {
				bool neg = accept(TokenKind::Not);
				stmt.literals.push_back(atomLiteral(neg));
				if (accept(TokenKind::Comma)) continue;
				expect(TokenKind::RBrace);
				break;
			}
		}
		endStatement();
		prog.compute = std::move(stmt);
	}

	Rule rule() {
		Rule r;
		r.pos = cur().pos;
		if (accept(TokenKind::Arrow)) {
			r.head.kind = HeadKind::Integrity;
			r.body      = body();
			endStatement();
			return r;
		}
		if (aggregateAhead()) {
			r.head.kind      = HeadKind::Aggregate;
			r.head.aggregate = aggregate(true);
		}
		else {
			r.head.kind = HeadKind::Atom;
			r.head.atom = atom();
			if (cur().kind == TokenKind::Colon) failAt(cur().pos, "conditional literals are not supported in rule heads");
		}
		if (accept(TokenKind::Arrow)) r.body = body();
		endStatement();
		return r;
	}

	std::vector<BodyElement> body() {
		std::vector<BodyElement> out;
		do {
			out.push_back(bodyElement());
		} while (accept(TokenKind::Comma));
		return out;
	}

	BodyElement bodyElement() {
		if (cur().kind == TokenKind::Not) {
			Position pos = cur().pos;
			advance();
			if (aggregateAhead()) failAt(pos, "negated cardinality or weight constraints are not supported");
			Literal l = atomLiteral(true);
			l.pos     = pos;
			return l;
		}
		if (aggregateAhead()) return aggregate(false);
		if (cur().kind == TokenKind::Identifier && cur().text != "abs") {
			TokenKind next = peek(1).kind;
			if (!isComparison(next) && !isArithmetic(next) && !(next == TokenKind::Identifier && peek(1).text == "mod")) {
				return atomLiteral(false);
			}
		}
		Term lhs = term();
		if (!isComparison(cur().kind)) fail("comparison operator");
		CmpOp op = cmpOp(cur().kind);
		advance();
		Term rhs = term();
		return Literal::makeComparison(std::move(lhs), op, std::move(rhs));
	}

	static CmpOp cmpOp(TokenKind k) {
		switch (k) {
			case TokenKind::Ne: return CmpOp::Ne;
			case TokenKind::Lt: return CmpOp::Lt;
			case TokenKind::Le: return CmpOp::Le;
			case TokenKind::Gt: return CmpOp::Gt;
			case TokenKind::Ge: return CmpOp::Ge;
			default:            return CmpOp::Eq;
		}
	}

	// atom (':' atom)*
	Literal atomLiteral(bool negative) {
		Atom              a = atom();
		std::vector<Atom> conds;
		while (accept(TokenKind::Colon)) conds.push_back(atom());
		if (conds.empty()) return Literal::makeAtom(std::move(a), negative);
		return Literal::makeConditional(std::move(a), std::move(conds), negative);
	}

	// True if a `{` or `[` opens before the current element ends, i.e. the
	// element is a cardinality/weight constraint with an optional lower bound.
	bool aggregateAhead() const {
		int depth = 0;
		for (std::size_t i = at_; i < toks_.size(); ++i) {
			switch (toks_[i].kind) {
				case TokenKind::LParen: ++depth; break;
				case TokenKind::RParen:
					if (--depth < 0) return false;
					break;
				case TokenKind::LBrace:
				case TokenKind::LBracket: return depth == 0;
				case TokenKind::Comma:
				case TokenKind::Dot:
				case TokenKind::Arrow:
				case TokenKind::Semicolon:
				case TokenKind::Colon:
				case TokenKind::RBrace:
				case TokenKind::RBracket:
				case TokenKind::Not:
				case TokenKind::End:
					if (depth == 0) return false;
					break;
				default:
					if (depth == 0 && isComparison(toks_[i].kind)) return false;
					break;
			}
		}
		return false;
	}

	Aggregate aggregate(bool inHead) {
		Aggregate agg;
		agg.pos = cur().pos;
		if (cur().kind != TokenKind::LBrace && cur().kind != TokenKind::LBracket) agg.lower = term();
		TokenKind close;
		if (accept(TokenKind::LBrace)) {
			close = TokenKind::RBrace;
		}
		else {
			expect(TokenKind::LBracket);
			agg.weighted = true;
			close        = TokenKind::RBracket;
		}
		if (!accept(close)) {
			for (;;) {
				agg.elements.push_back(element(agg.weighted, inHead));
				if (accept(TokenKind::Comma)) continue;
				expect(close);
				break;
			}
		}
		switch (cur().kind) {
			case TokenKind::Number:
			case TokenKind::Variable:
			case TokenKind::Minus:
			case TokenKind::LParen:
			case TokenKind::Identifier: agg.upper = term(); break;
			default:                    break;
		}
		return agg;
	}

	WeightedLiteral element(bool weighted, bool inHead) {
		Position pos = cur().pos;
		bool     neg = accept(TokenKind::Not);
		if (neg && inHead) failAt(pos, "negative literals are not allowed in constraint heads");
		WeightedLiteral el;
		Atom            a      = atom();
		bool            hasW   = false;
		auto            weight = [&] {
            if (weighted && !hasW && accept(TokenKind::Assign)) {
                el.weight = term();
                hasW      = true;
            }
		};
		weight();
		std::vector<Atom> conds;
		while (accept(TokenKind::Colon)) conds.push_back(atom());
		weight();
		el.literal     = conds.empty() ? Literal::makeAtom(std::move(a), neg)
		                               : Literal::makeConditional(std::move(a), std::move(conds), neg);
		el.literal.pos = pos;
		return el;
	}

	Atom atom() {
		Atom a;
		a.pos = cur().pos;
		if (cur().kind != TokenKind::Identifier) fail("atom");
		a.predicate = cur().text;
		advance();
		if (accept(TokenKind::LParen)) {
			do {
				a.args.push_back(argument());
			} while (accept(TokenKind::Comma));
			expect(TokenKind::RParen);
		}
		return a;
	}

	// term ('..' term)? (';' term ('..' term)?)*
	Term argument() {
		Position          pos = cur().pos;
		std::vector<Term> members;
		do {
			Term t = term();
			if (cur().kind == TokenKind::DotDot) {
				Position rpos = t.pos;
				advance();
				t = Term::range(std::move(t), term(), rpos);
			}
			members.push_back(std::move(t));
		} while (accept(TokenKind::Semicolon));
		if (members.size() == 1) return std::move(members.front());
		return Term::pool(std::move(members), pos);
	}

	/////////////////////////////////////////////////////////////////////////////////////
	// Arithmetic: additive < multiplicative < unary
	/////////////////////////////////////////////////////////////////////////////////////
	Term term() {
		Term lhs = multiplicative();
		for (;;) {
			FuncOp op;
			if (cur().kind == TokenKind::Plus) op = FuncOp::Add;
			else if (cur().kind == TokenKind::Minus) op = FuncOp::Sub;
			else return lhs;
			Position pos = lhs.pos;
			advance();
			Term rhs = multiplicative();
			lhs      = Term::func(op, {std::move(lhs), std::move(rhs)}, pos);
		}
	}

	Term multiplicative() {
		Term lhs = unary();
		for (;;) {
			FuncOp op;
			if (cur().kind == TokenKind::Star) op = FuncOp::Mul;
			else if (cur().kind == TokenKind::Slash) op = FuncOp::Div;
			else if (isIdent("mod")) op = FuncOp::Mod;
			else return lhs;
			Position pos = lhs.pos;
			advance();
			Term rhs = unary();
			lhs      = Term::func(op, {std::move(lhs), std::move(rhs)}, pos);
		}
	}

	Term unary() {
		if (cur().kind == TokenKind::Minus) {
			Position pos = cur().pos;
			advance();
			if (cur().kind == TokenKind::Number) {
				int64_t v = cur().value;
				advance();
				return Term::integer(-v, pos);
			}
			return Term::func(FuncOp::Neg, {unary()}, pos);
		}
		return primary();
	}

	Term primary() {
		const Token& t = cur();
		switch (t.kind) {
			case TokenKind::Number: {
				Term out = Term::integer(t.value, t.pos);
				advance();
				return out;
			}
			case TokenKind::Variable: {
				Term out = Term::variable(t.text, t.pos);
				advance();
				return out;
			}
			case TokenKind::Identifier: {
				Position pos = t.pos;
				if (t.text == "abs" && peek(1).kind == TokenKind::LParen) {
					advance();
					advance();
					Term arg = term();
					expect(TokenKind::RParen);
					return Term::func(FuncOp::Abs, {std::move(arg)}, pos);
				}
				if (peek(1).kind == TokenKind::LParen) failAt(pos, "function symbols are not supported: '" + t.text + "'");
				Term out = Term::symbol(t.text, pos);
				advance();
				return out;
			}
			case TokenKind::LParen: {
				advance();
				Term inner = term();
				expect(TokenKind::RParen);
				return inner;
			}
			default: fail("term");
		}
	}

	std::span<const Token> toks_;
	std::size_t            at_ = 0;
};

/////////////////////////////////////////////////////////////////////////////////////////
// Constant substitution
/////////////////////////////////////////////////////////////////////////////////////////
struct Substituter {
	const std::map<std::string, int64_t>& values;

	void apply(Term& t) const {
		if (t.kind == TermKind::Symbol) {
			if (auto it = values.find(t.name); it != values.end()) t = Term::integer(it->second, t.pos);
			return;
		}
		for (auto& a : t.args) apply(a);
	}
	void apply(Atom& a) const {
		for (auto& t : a.args) apply(t);
	}
	void apply(Literal& l) const {
		apply(l.atom);
		for (auto& c : l.conditions) apply(c);
		if (l.kind == LiteralKind::Comparison) {
			apply(l.lhs);
			apply(l.rhs);
		}
	}
	void apply(Aggregate& agg) const {
		if (agg.lower) apply(*agg.lower);
		if (agg.upper) apply(*agg.upper);
		for (auto& e : agg.elements) {
			apply(e.literal);
			apply(e.weight);
		}
	}
	void apply(Rule& r) const {
		if (r.head.kind == HeadKind::Atom) apply(r.head.atom);
		if (r.head.kind == HeadKind::Aggregate) apply(r.head.aggregate);
		for (auto& b : r.body) std::visit([this](auto& x) { apply(x); }, b);
	}
};

} // namespace

ProgramAst parseProgram(std::span<const Token> tokens) { return Parser(tokens).run(); }

ProgramAst parseProgram(std::string_view text, const std::string& file) {
	auto toks = tokenize(text, file);
	return parseProgram(toks);
}

ProgramAst parseFiles(std::span<const SourceFile> files) {
	std::vector<Token> all;
	for (const auto& f : files) {
		auto toks = tokenize(f.text, f.name);
		all.insert(all.end(), std::make_move_iterator(toks.begin()), std::make_move_iterator(toks.end() - 1));
		if (&f == &files.back()) all.push_back(std::move(toks.back()));
	}
	if (all.empty()) all.push_back(Token{TokenKind::End, "", 0, Position{"<input>", 1, 1}});
	return parseProgram(all);
}

ProgramAst substituteConstants(const ProgramAst& ast, const std::map<std::string, int64_t>& bindings) {
	std::map<std::string, int64_t> values = ast.constants;
	for (const auto& [name, v] : bindings) values[name] = v;
	ProgramAst  out = ast;
	Substituter sub{values};
	for (auto& r : out.rules) sub.apply(r);
	if (out.compute) {
		for (auto& l : out.compute->literals) sub.apply(l);
	}
	return out;
}

} // namespace aspkit
