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

#include <aspkit/symbol_table.h>

#include <cstdint>
#include <vector>

namespace aspkit {

enum class RuleType : uint8_t { Basic = 1, Constraint = 2, Choice = 3, Weight = 5 };

// One of the four primitive rule forms of the ground format.
//  - Basic:      heads[0] :- pos, not neg.
//  - Constraint: heads[0] :- bound { pos, not neg }.
//  - Choice:     { heads } :- pos, not neg.
//  - Weight:     heads[0] :- bound [ pos=posWeights, not neg=negWeights ].
struct PrimitiveRule {
	RuleType             type = RuleType::Basic;
	std::vector<AtomId>  heads;
	int64_t              bound = 0;
	std::vector<AtomId>  pos;
	std::vector<AtomId>  neg;
	std::vector<int64_t> posWeights;
	std::vector<int64_t> negWeights;

	static PrimitiveRule basic(AtomId head, std::vector<AtomId> pos, std::vector<AtomId> neg);
	static PrimitiveRule constraint(AtomId head, int64_t bound, std::vector<AtomId> pos, std::vector<AtomId> neg);
	static PrimitiveRule choice(std::vector<AtomId> heads, std::vector<AtomId> pos, std::vector<AtomId> neg);
	static PrimitiveRule weight(AtomId head, int64_t bound, std::vector<AtomId> pos, std::vector<int64_t> posWeights,
	                            std::vector<AtomId> neg, std::vector<int64_t> negWeights);

	AtomId      head() const { return heads.empty() ? 0 : heads.front(); }
	std::size_t size() const { return pos.size() + neg.size(); }

	friend bool operator==(const PrimitiveRule&, const PrimitiveRule&) = default;
};

struct ComputeSpec {
	std::vector<AtomId> requiredTrue;
	std::vector<AtomId> requiredFalse; // kFalseAtom is implied and need not be listed
	int64_t             modelCount = 1; // 0 = all

	friend bool operator==(const ComputeSpec&, const ComputeSpec&) = default;
};

struct GroundProgram {
	std::vector<PrimitiveRule> rules;
	SymbolTable                symbols;
	ComputeSpec                compute;

	// Largest atom id referenced anywhere, at least kFalseAtom.
	AtomId maxAtom() const;

	friend bool operator==(const GroundProgram&, const GroundProgram&) = default;
};

} // namespace aspkit
