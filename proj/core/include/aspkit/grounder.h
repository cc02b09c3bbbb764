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
#include <aspkit/domain_analysis.h>
#include <aspkit/extension.h>
#include <aspkit/symbol_table.h>

#include <iosfwd>
#include <optional>
#include <vector>

namespace aspkit {

// Keep: domain facts are emitted and positive domain literals stay in rule
// bodies. Remove (`-d none`): domain predicates vanish once evaluated.
enum class DomainMode : uint8_t { Keep, Remove };

struct GroundLiteral {
	AtomId  atom     = 0;
	bool    negative = false;
	int64_t weight   = 1; // only meaningful inside weight constraints

	friend bool operator==(const GroundLiteral&, const GroundLiteral&) = default;
	friend auto operator<=>(const GroundLiteral&, const GroundLiteral&) = default;
};

// Ground cardinality or weight constraint. Cardinality element lists hold no
// duplicate literals; weight element lists hold each literal once with the
// summed weight. Head elements are always positive.
struct GroundAggregate {
	bool                       weighted = false;
	std::optional<int64_t>     lower;
	std::optional<int64_t>     upper;
	std::vector<GroundLiteral> elements;

	friend bool operator==(const GroundAggregate&, const GroundAggregate&) = default;
};

enum class GroundHeadKind : uint8_t { Atom, Integrity, Aggregate };

struct GroundRule {
	GroundHeadKind               headKind = GroundHeadKind::Atom;
	AtomId                       head     = 0;
	GroundAggregate              headAggregate;
	std::vector<GroundLiteral>   body;
	std::vector<GroundAggregate> aggregates;

	friend bool operator==(const GroundRule&, const GroundRule&) = default;
};

struct GroundingResult {
	std::vector<GroundRule>    rules;
	SymbolTable                symbols;
	std::vector<GroundLiteral> compute;       // literals required by the compute statement
	std::optional<int64_t>     computeModels; // `compute N {...}`
	std::vector<Diagnostic>    warnings;
};

// Replaces pools (`p(a;b)`) by copies: in heads and plain body literals the
// rule is duplicated, inside constraints and compute statements the element is.
ProgramAst expandPools(const ProgramAst& program);

// Least model of the rules whose head is a domain predicate, computed bottom-up
// stratum by stratum with semi-naive iteration inside recursive strata.
// Throws ArithmeticError / UnboundConstant / GroundingError.
Extension evaluateDomainPredicates(const ProgramAst& program, const PredicateMap& info,
                                   std::vector<Diagnostic>* warnings = nullptr);

// Instantiates every non-domain rule over the extension. Throws like
// evaluateDomainPredicates().
GroundingResult instantiateRules(const ProgramAst& program, const PredicateMap& info, const Extension& ext,
                                 DomainMode mode = DomainMode::Keep);

// Source-syntax rendering of a ground rule; hidden atoms print as `_aux<id>`.
std::ostream& printGroundRule(std::ostream& os, const GroundRule& rule, const SymbolTable& symbols);

} // namespace aspkit
