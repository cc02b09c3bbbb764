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

#include <aspkit/program.h>

#include <algorithm>

namespace aspkit {

PrimitiveRule PrimitiveRule::basic(AtomId head, std::vector<AtomId> pos, std::vector<AtomId> neg) {
	PrimitiveRule r;
	r.type  = RuleType::Basic;
	r.heads = {head};
	r.pos   = std::move(pos);
	r.neg   = std::move(neg);
	return r;
}

PrimitiveRule PrimitiveRule::constraint(AtomId head, int64_t bound, std::vector<AtomId> pos, std::vector<AtomId> neg) {
	PrimitiveRule r = basic(head, std::move(pos), std::move(neg));
	r.type          = RuleType::Constraint;
	r.bound         = bound;
	return r;
}

PrimitiveRule PrimitiveRule::choice(std::vector<AtomId> heads, std::vector<AtomId> pos, std::vector<AtomId> neg) {
	PrimitiveRule r;
	r.type  = RuleType::Choice;
	r.heads = std::move(heads);
	r.pos   = std::move(pos);
	r.neg   = std::move(neg);
	return r;
}

PrimitiveRule PrimitiveRule::weight(AtomId head, int64_t bound, std::vector<AtomId> pos, std::vector<int64_t> posWeights,
                                    std::vector<AtomId> neg, std::vector<int64_t> negWeights) {
	PrimitiveRule r = basic(head, std::move(pos), std::move(neg));
	r.type          = RuleType::Weight;
	r.bound         = bound;
	r.posWeights    = std::move(posWeights);
	r.negWeights    = std::move(negWeights);
	return r;
}

AtomId GroundProgram::maxAtom() const {
	AtomId m = std::max(kFalseAtom, symbols.maxId());
	auto   upd = [&m](const std::vector<AtomId>& v) {
        for (AtomId a : v) m = std::max(m, a);
	};
	for (const auto& r : rules) {
		upd(r.heads);
		upd(r.pos);
		upd(r.neg);
	}
	upd(compute.requiredTrue);
	upd(compute.requiredFalse);
	return m;
}

} // namespace aspkit
