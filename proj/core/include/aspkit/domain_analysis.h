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

#include <aspkit/ast.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace aspkit {

struct PredicateKey {
	std::string name;
	uint32_t    arity = 0;

	friend auto operator<=>(const PredicateKey&, const PredicateKey&) = default;
	friend bool operator==(const PredicateKey&, const PredicateKey&)  = default;
};

PredicateKey keyOf(const Atom& a);
std::string  toString(const PredicateKey& key); // name/arity

enum class Polarity : uint8_t { Positive, Negative };

struct DependencyEdge {
	PredicateKey caller;
	PredicateKey callee;
	Polarity     polarity;

	friend bool operator==(const DependencyEdge&, const DependencyEdge&) = default;
};

// Predicate dependency graph with its strongly connected components. SCC ids
// are topologically ordered: a callee's component never has a larger id than
// its caller's.
class DependencyGraph {
public:
	const std::vector<PredicateKey>&   nodes() const { return nodes_; }
	const std::vector<DependencyEdge>& edges() const { return edges_; }

	bool        contains(const PredicateKey& key) const { return index_.count(key) != 0; }
	bool        hasEdge(const PredicateKey& caller, const PredicateKey& callee, Polarity pol) const;
	int         sccOf(const PredicateKey& key) const;
	std::size_t sccCount() const { return sccCount_; }
	// Members of component `id` in first-occurrence order.
	std::vector<PredicateKey> component(int id) const;
	bool                      isRecursive(const PredicateKey& key) const;

private:
	friend DependencyGraph buildDependencyGraph(const ProgramAst& program);

	std::size_t addNode(const PredicateKey& key);
	void        addEdge(std::size_t caller, std::size_t callee, Polarity pol);
	void        computeComponents();

	std::vector<PredicateKey>             nodes_;
	std::map<PredicateKey, std::size_t>   index_;
	std::vector<DependencyEdge>           edges_;
	std::vector<std::vector<std::size_t>> succ_;
	std::vector<bool>                     selfLoop_;
	std::vector<int>                      scc_;
	std::vector<std::size_t>              sccSize_;
	std::size_t                           sccCount_ = 0;
};

DependencyGraph buildDependencyGraph(const ProgramAst& program);

struct PredicateInfo {
	PredicateKey key;
	bool         isDomain                = false;
	bool         definedInConstraintHead = false;
	bool         defined                 = false; // occurs in some rule head
	int          sccId                   = 0;
};

using PredicateMap = std::map<PredicateKey, PredicateInfo>;

// A predicate is a domain predicate iff it is not recursive, never occurs in
// a cardinality/weight head and depends only on domain predicates, with every
// negative dependency pointing into a strictly earlier component.
PredicateMap classifyDomainPredicates(const DependencyGraph& graph, const ProgramAst& program);

bool isDomain(const PredicateMap& info, const PredicateKey& key);

// Every variable of a rule must occur as an argument of a positive domain
// literal in the body. Variables local to a conditional literal must instead
// occur in one of its (domain) condition atoms.
std::vector<Diagnostic> checkDomainRestriction(const ProgramAst& program, const PredicateMap& info);

// Heuristic warnings: constants that look like mistyped variables, singleton
// variables and predicates that are used but never defined.
std::vector<Diagnostic> lint(const ProgramAst& program, const PredicateMap& info);

} // namespace aspkit
