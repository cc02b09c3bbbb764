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

#include <aspkit/parser.h>
#include <aspkit/translate.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <sys/wait.h>

namespace aspkit::test {

std::string corpusPath(const std::string& name) { return std::string(ASPKIT_CORPUS_DIR) + "/" + name; }

std::string readFile(const std::string& path) {
	std::ifstream      in(path, std::ios::binary);
	std::ostringstream s;
	s << in.rdbuf();
	return s.str();
}

GroundOutput ground(const std::string& text, const std::map<std::string, int64_t>& constants, DomainMode mode) {
	GroundOptions opts;
	opts.constants  = constants;
	opts.domainMode = mode;
	SourceFile file{"<test>", text};
	return groundSources(std::span<const SourceFile>(&file, 1), opts);
}

GroundOutput groundCorpus(const std::vector<std::string>& files, const std::map<std::string, int64_t>& constants,
                          DomainMode mode) {
	GroundOptions opts;
	opts.constants  = constants;
	opts.domainMode = mode;
	std::vector<SourceFile> sources;
	for (const auto& f : files) sources.push_back({f, readFile(corpusPath(f))});
	return groundSources(sources, opts);
}

std::vector<NameSet> named(const SymbolTable& symbols, const std::vector<AtomSet>& models) {
	std::vector<NameSet> out;
	for (const auto& m : models) {
		NameSet s;
		for (AtomId a : m) {
			if (symbols.isVisible(a)) s.insert(symbols.name(a));
		}
		out.push_back(std::move(s));
	}
	std::sort(out.begin(), out.end());
	return out;
}

std::vector<AtomSet> solverModels(const GroundProgram& program, const SolverOptions& options, int64_t count) {
	Solver               solver(program, options);
	std::vector<AtomSet> out;
	for (auto& m : solver.solve(count)) out.emplace_back(m.begin(), m.end());
	return out;
}

std::vector<NameSet> stableModels(const GroundProgram& program, const SolverOptions& options, int64_t count) {
	return named(program.symbols, solverModels(program, options, count));
}

std::vector<NameSet> stableModels(const std::string& text, const std::map<std::string, int64_t>& constants, DomainMode mode) {
	return stableModels(ground(text, constants, mode).program);
}

NameSet names(std::initializer_list<const char*> atoms) { return NameSet(atoms.begin(), atoms.end()); }

namespace {
std::string atomName(int i) { return "a" + std::to_string(i); }

template <class T>
T pick(std::mt19937_64& rng, T lo, T hi) {
	return std::uniform_int_distribution<T>(lo, hi)(rng);
}
bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }
} // namespace

GroundProgram randomNormalProgram(std::mt19937_64& rng, int atoms, int rules, bool constraints) {
	GroundProgram p;
	for (int i = 0; i != atoms; ++i) p.symbols.intern(atomName(i));
	auto atom = [&] { return static_cast<AtomId>(kFirstAtom + pick(rng, 0, atoms - 1)); };
	for (int r = 0; r != rules; ++r) {
		AtomId              head = constraints && coin(rng, 0.1) ? kFalseAtom : atom();
		std::vector<AtomId> pos, neg;
		int                 size = pick(rng, 0, 3);
		if (head == kFalseAtom) size = std::max(size, 1);
		for (int i = 0; i != size; ++i) (coin(rng, 0.45) ? neg : pos).push_back(atom());
		p.rules.push_back(PrimitiveRule::basic(head, std::move(pos), std::move(neg)));
	}
	p.compute.modelCount = 0;
	return p;
}

GroundingResult randomExtendedProgram(std::mt19937_64& rng, int atoms, int rules, bool negativeWeights) {
	GroundingResult g;
	for (int i = 0; i != atoms; ++i) g.symbols.intern(atomName(i));
	auto atom = [&] { return static_cast<AtomId>(kFirstAtom + pick(rng, 0, atoms - 1)); };
	auto weight = [&] { return negativeWeights ? pick<int64_t>(rng, -3, 4) : pick<int64_t>(rng, 0, 4); };
	auto literals = [&](int lo, int hi) {
		std::vector<GroundLiteral> out;
		int                        n = pick(rng, lo, hi);
		for (int i = 0; i != n; ++i) {
			GroundLiteral l{atom(), coin(rng, 0.4), 1};
			if (std::none_of(out.begin(), out.end(), [&](const GroundLiteral& x) { return x.atom == l.atom && x.negative == l.negative; })) {
				out.push_back(l);
			}
		}
		return out;
	};
	auto aggregate = [&](bool head) {
		GroundAggregate a;
		a.weighted = coin(rng, 0.5);
		a.elements = literals(1, 4);
		int64_t total = 0;
		for (auto& e : a.elements) {
			if (head) e.negative = false;
			if (a.weighted) e.weight = weight();
			total += a.weighted ? std::abs(e.weight) : 1;
		}
		if (head) {
			std::vector<GroundLiteral> unique;
			for (const auto& e : a.elements) {
				if (std::none_of(unique.begin(), unique.end(), [&](const GroundLiteral& x) { return x.atom == e.atom; })) unique.push_back(e);
			}
			a.elements = std::move(unique);
		}
		if (coin(rng, 0.7)) a.lower = pick<int64_t>(rng, -1, total + 1);
		if (coin(rng, 0.5)) a.upper = pick<int64_t>(rng, -1, total + 1);
		return a;
	};
	for (int r = 0; r != rules; ++r) {
		GroundRule rule;
		int        kind = pick(rng, 0, 9);
		if (kind <= 2) {
			rule.headKind      = GroundHeadKind::Aggregate;
			rule.headAggregate = aggregate(true);
			rule.body          = literals(0, 2);
		}
		else if (kind <= 6) {
			rule.headKind = coin(rng, 0.15) ? GroundHeadKind::Integrity : GroundHeadKind::Atom;
			rule.head     = rule.headKind == GroundHeadKind::Atom ? atom() : 0;
			rule.body     = literals(0, 2);
			rule.aggregates.push_back(aggregate(false));
		}
		else {
			rule.headKind = coin(rng, 0.15) ? GroundHeadKind::Integrity : GroundHeadKind::Atom;
			rule.head     = rule.headKind == GroundHeadKind::Atom ? atom() : 0;
			rule.body     = literals(rule.headKind == GroundHeadKind::Integrity ? 1 : 0, 3);
		}
		g.rules.push_back(std::move(rule));
	}
	g.computeModels = 0;
	return g;
}

namespace {

// Plain-term substitution over a finite universe.
struct Naive {
	ProgramAst            ast;
	std::vector<Term>     universe;

	explicit Naive(const std::string& text)
		: ast(parseProgram(text)) {
		std::set<std::string> seen;
		std::function<void(const Term&)> collect = [&](const Term& t) {
			if (t.kind == TermKind::Symbol || t.kind == TermKind::Integer) {
				if (seen.insert(render(t)).second) universe.push_back(t);
			}
			for (const auto& a : t.args) collect(a);
		};
		for (const auto& r : ast.rules) {
			for (const auto& t : r.head.atom.args) collect(t);
			for (const auto& b : r.body) {
				const auto& l = std::get<Literal>(b);
				if (l.kind == LiteralKind::Comparison) {
					collect(l.lhs);
					collect(l.rhs);
				}
				for (const auto& t : l.atom.args) collect(t);
			}
		}
	}

	static std::string render(const Term& t) { return t.kind == TermKind::Integer ? std::to_string(t.value) : t.name; }

	static std::string render(const Atom& a, const std::map<std::string, Term>& s) {
		std::string out = a.predicate;
		for (std::size_t i = 0; i != a.args.size(); ++i) {
			out += i ? "," : "(";
			const Term& t = a.args[i];
			out += render(t.kind == TermKind::Variable ? s.at(t.name) : t);
		}
		return a.args.empty() ? out : out + ")";
	}

	// Integers before symbols, symbols alphabetically.
	static bool compare(CmpOp op, const Term& x, const Term& y) {
		auto key = [](const Term& t) { return std::make_tuple(t.kind != TermKind::Integer, t.value, t.name); };
		auto a = key(x), b = key(y);
		switch (op) {
			case CmpOp::Eq: return a == b;
			case CmpOp::Ne: return a != b;
			case CmpOp::Lt: return a < b;
			case CmpOp::Le: return a <= b;
			case CmpOp::Gt: return a > b;
			case CmpOp::Ge: return a >= b;
		}
		return false;
	}

	template <class Fn>
	void forEachSubstitution(const Rule& r, Fn&& fn) {
		std::vector<std::string> vars;
		collectVariables(r.head.atom, vars);
		for (const auto& b : r.body) collectVariables(std::get<Literal>(b), vars);
		std::sort(vars.begin(), vars.end());
		vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
		std::map<std::string, Term> s;
		std::function<void(std::size_t)> rec = [&](std::size_t i) {
			if (i == vars.size()) {
				for (const auto& b : r.body) {
					const auto& l = std::get<Literal>(b);
					if (l.kind != LiteralKind::Comparison) continue;
					const Term& x = l.lhs.kind == TermKind::Variable ? s.at(l.lhs.name) : l.lhs;
					const Term& y = l.rhs.kind == TermKind::Variable ? s.at(l.rhs.name) : l.rhs;
					if (!compare(l.cmp, x, y)) return;
				}
				fn(s);
				return;
			}
			for (const auto& v : universe) {
				s[vars[i]] = v;
				rec(i + 1);
			}
		};
		rec(0);
	}
};

} // namespace

std::set<std::string> naiveDatalog(const std::string& text) {
	Naive                 n(text);
	std::set<std::string> facts;
	for (bool changed = true; changed;) {
		changed = false;
		for (const auto& r : n.ast.rules) {
			n.forEachSubstitution(r, [&](const std::map<std::string, Term>& s) {
				for (const auto& b : r.body) {
					const auto& l = std::get<Literal>(b);
					if (l.kind == LiteralKind::Comparison) continue;
					if (facts.count(Naive::render(l.atom, s)) == l.negative) return;
				}
				changed |= facts.insert(Naive::render(r.head.atom, s)).second;
			});
		}
	}
	return facts;
}

GroundProgram naiveInstantiation(const std::string& text) {
	Naive         n(text);
	GroundProgram p;
	for (const auto& r : n.ast.rules) {
		n.forEachSubstitution(r, [&](const std::map<std::string, Term>& s) {
			std::vector<AtomId> pos, neg;
			for (const auto& b : r.body) {
				const auto& l = std::get<Literal>(b);
				if (l.kind == LiteralKind::Comparison) continue;
				(l.negative ? neg : pos).push_back(p.symbols.intern(Naive::render(l.atom, s)));
			}
			AtomId head = r.head.kind == HeadKind::Integrity ? kFalseAtom : p.symbols.intern(Naive::render(r.head.atom, s));
			p.rules.push_back(PrimitiveRule::basic(head, std::move(pos), std::move(neg)));
		});
	}
	p.compute.modelCount = 0;
	return p;
}

std::vector<NameSet> queensSolutions(int n) {
	std::vector<int> col(static_cast<std::size_t>(n));
	for (int i = 0; i != n; ++i) col[static_cast<std::size_t>(i)] = i + 1;
	std::vector<NameSet> out;
	do {
		bool ok = true;
		for (int a = 0; a != n && ok; ++a) {
			for (int b = a + 1; b != n && ok; ++b) {
				ok = std::abs(col[static_cast<std::size_t>(a)] - col[static_cast<std::size_t>(b)]) != b - a;
			}
		}
		if (!ok) continue;
		NameSet s;
		for (int row = 0; row != n; ++row) {
			s.insert("q(" + std::to_string(col[static_cast<std::size_t>(row)]) + "," + std::to_string(row + 1) + ")");
		}
		out.push_back(std::move(s));
	} while (std::next_permutation(col.begin(), col.end()));
	std::sort(out.begin(), out.end());
	return out;
}

CliResult runCli(const std::string& args, const std::string& input) {
	namespace fs = std::filesystem;
	static int counter = 0;
	fs::path   dir     = fs::temp_directory_path() / ("aspkit_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
	fs::create_directories(dir);
	std::ofstream(dir / "in") << input;
	std::string cmd = std::string("'") + ASPKIT_CLI_PATH + "' " + args + " < '" + (dir / "in").string() + "' > '" +
	                  (dir / "out").string() + "' 2> '" + (dir / "err").string() + "'";
	int       raw = std::system(cmd.c_str());
	CliResult r;
	r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
	r.out    = readFile((dir / "out").string());
	r.err    = readFile((dir / "err").string());
	fs::remove_all(dir);
	return r;
}

std::string ringColoring(int nodes) {
	return "#const n=" + std::to_string(nodes) +
	       ".\n"
	       "node(1..n).\n"
	       "edge(X,X+1) :- node(X), X < n.\n"
	       "edge(n,1).\n"
	       "color(red;green;blue).\n"
	       "1 { col(N,C) : color(C) } 1 :- node(N).\n"
	       ":- col(X,C), col(Y,C), edge(X,Y), color(C).\n";
}

} // namespace aspkit::test
