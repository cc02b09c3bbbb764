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

#include <aspkit/well_founded.h>

#include <aspkit/error.h>

namespace aspkit {

WellFoundedModel wellFounded(const GroundProgram& program) {
	for (const auto& r : program.rules) {
		if (r.type != RuleType::Basic) {
			throw UnsupportedRuleType("well-founded semantics needs basic rules only, found rule type " +
			                          std::to_string(static_cast<int>(r.type)));
		}
	}
	auto gamma = [&](const AtomSet& m) { return leastModel(reduct(program.rules, m)); };
	// under: atoms known true, over: atoms possibly true
	AtomSet under;
	AtomSet over = gamma(under);
	for (;;) {
		AtomSet nextUnder = gamma(over);
		AtomSet nextOver  = gamma(nextUnder);
		if (nextUnder == under && nextOver == over) break;
		under = std::move(nextUnder);
		over  = std::move(nextOver);
	}
	WellFoundedModel wf;
	for (AtomId a = kFirstAtom; a <= program.maxAtom(); ++a) {
		if (under.count(a)) wf.trueAtoms.insert(a);
		else if (over.count(a)) wf.unknownAtoms.insert(a);
		else wf.falseAtoms.insert(a);
	}
	return wf;
}

} // namespace aspkit
