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

#include <aspkit/grounder.h>
#include <aspkit/program.h>

#include <set>
#include <vector>

namespace aspkit {

using AtomSet = std::set<AtomId>;

// Negation-free rule: `head` holds once the weights of the derived atoms in
// `pos` add up to `bound`.
struct ReductRule {
	AtomId               head  = 0;
	int64_t              bound = 0;
	std::vector<AtomId>  pos;
	std::vector<int64_t> weights;

	friend bool operator==(const ReductRule&, const ReductRule&) = default;
};

using ReductProgram = std::vector<ReductRule>;

ReductProgram reduct(const std::vector<PrimitiveRule>& rules, const AtomSet& model);
AtomSet       leastModel(const ReductProgram& program);

// Stability of `model` including the compute statement of `program`.
bool isStable(const GroundProgram& program, const AtomSet& model);

// All stable models, by trying every subset of the atoms occurring in rule
// heads. Throws CapExceeded if there are more than `cap` such atoms.
std::vector<AtomSet> bruteForceModels(const GroundProgram& program, std::size_t cap = 20);

// The same two operations evaluated directly on ground rules with
// cardinality and weight constraints, without translation.
bool                 isStableSource(const std::vector<GroundRule>& rules, const std::vector<GroundLiteral>& compute,
                                    const AtomSet& model);
std::vector<AtomSet> bruteForceSourceModels(const std::vector<GroundRule>& rules, const std::vector<GroundLiteral>& compute,
                                            std::size_t cap = 20);

} // namespace aspkit
