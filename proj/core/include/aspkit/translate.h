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

#include <vector>

namespace aspkit {

// Mints hidden atom ids above every user atom.
class AtomAllocator {
public:
	explicit AtomAllocator(AtomId next)
		: next_(next < kFirstAtom ? kFirstAtom : next) {}

	AtomId fresh() { return next_++; }
	AtomId peek() const { return next_; }

private:
	AtomId next_;
};

// Replaces every element with a negative weight by its complement with the
// opposite weight, raising both bounds accordingly. Throws ArithmeticError on
// overflow.
GroundAggregate normalizeWeights(const GroundAggregate& agg);

// Primitive rules equivalent to `rule`; auxiliary atoms come from `fresh`.
std::vector<PrimitiveRule> translateRule(const GroundRule& rule, AtomAllocator& fresh);

// Translates all rules and the compute statement of a grounding result.
GroundProgram translateProgram(const GroundingResult& result);

} // namespace aspkit
