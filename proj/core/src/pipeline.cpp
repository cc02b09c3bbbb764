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

#include <aspkit/pipeline.h>

#include <aspkit/domain_analysis.h>
#include <aspkit/error.h>
#include <aspkit/oracle.h>
#include <aspkit/translate.h>
#include <aspkit/well_founded.h>

#include <algorithm>
#include <ostream>

namespace aspkit {

GroundOutput groundSources(std::span<const SourceFile> files, const GroundOptions& options) {
	ProgramAst ast = expandPools(substituteConstants(parseFiles(files), options.constants));
	GroundOutput out;
	out.predicates = classifyDomainPredicates(buildDependencyGraph(ast), ast);
	auto diags     = checkDomainRestriction(ast, out.predicates);
	if (hasErrors(diags)) throw SemanticError(std::move(diags));
	if (options.warnings) {
		auto more = lint(ast, out.predicates);
		diags.insert(diags.end(), more.begin(), more.end());
	}
	std::vector<Diagnostic> warnings;
	Extension               ext = evaluateDomainPredicates(ast, out.predicates, &warnings);
	out.grounding               = instantiateRules(ast, out.predicates, ext, options.domainMode);
	out.program                 = translateProgram(out.grounding);
	out.diagnostics             = std::move(diags);
	out.diagnostics.insert(out.diagnostics.end(), warnings.begin(), warnings.end());
	out.diagnostics.insert(out.diagnostics.end(), out.grounding.warnings.begin(), out.grounding.warnings.end());
	return out;
}

void printGroundText(std::ostream& os, const GroundingResult& grounding) {
	for (const auto& r : grounding.rules) printGroundRule(os, r, grounding.symbols) << '\n';
	if (grounding.compute.empty() && !grounding.computeModels) return;
	os << "compute";
	if (grounding.computeModels) os << ' ' << *grounding.computeModels;
	os << " {";
	for (std::size_t i = 0; i != grounding.compute.size(); ++i) {
		const auto& l = grounding.compute[i];
		os << (i ? ", " : " ") << (l.negative ? "not " : "") << grounding.symbols.name(l.atom);
	}
	os << (grounding.compute.empty() ? "" : " ") << "}.\n";
}

std::string modelText(const SymbolTable& symbols, const std::vector<AtomId>& model) {
	std::string out;
	for (AtomId a : model) {
		if (!symbols.isVisible(a)) continue;
		if (!out.empty()) out += ' ';
		out += symbols.name(a);
	}
	return out;
}

int64_t printModels(std::ostream& os, const GroundProgram& program, const SolveOptions& options, SolverStats* stats) {
	Solver  solver(program, options.solver);
	int64_t limit = options.modelCount.value_or(program.compute.modelCount);
	int64_t n     = 0;
	while (limit <= 0 || n < limit) {
		auto m = solver.next();
		if (!m) break;
		++n;
		os << "Answer: " << n << '\n' << "Stable Model: " << modelText(program.symbols, *m) << '\n';
	}
	os << (n ? "True" : "False") << '\n';
	if (stats) *stats = solver.stats();
	return n;
}

void printWellFounded(std::ostream& os, const GroundProgram& program) {
	WellFoundedModel wf   = wellFounded(program);
	auto             line = [&](const char* label, const AtomSet& atoms) {
        os << label << ' ' << modelText(program.symbols, std::vector<AtomId>(atoms.begin(), atoms.end())) << '\n';
	};
	os << "Well-founded model:\n";
	line("Positive part:", wf.trueAtoms);
	line("Negative part:", wf.falseAtoms);
	line("Unknown:", wf.unknownAtoms);
}

void printStats(std::ostream& os, const SolverStats& s) {
	os << "Models       : " << s.models << '\n'
	   << "Decisions    : " << s.decisions << '\n'
	   << "Conflicts    : " << s.conflicts << '\n'
	   << "Propagations : " << s.propagations << '\n'
	   << "Probes       : " << s.probes << '\n'
	   << "Failed lits  : " << s.failedLiterals << '\n'
	   << "Max depth    : " << s.maxDepth << '\n';
}

bool verifyModel(const GroundProgram& program, const std::vector<std::string>& atomNames, std::string* reason) {
	AtomSet m;
	for (const auto& name : atomNames) {
		auto id = program.symbols.find(name);
		if (!id) {
			if (reason) *reason = "unknown atom '" + name + "'";
			return false;
		}
		m.insert(*id);
	}
	// Hidden atoms take the value their defining rules give them.
	AtomSet visible = m;
	bool changed = true;
	for (std::size_t round = 0; changed && round <= program.rules.size(); ++round) {
		changed = false;
		AtomSet hidden;
		for (const auto& r : program.rules) {
			if (r.type == RuleType::Choice || program.symbols.isVisible(r.head()) || r.head() == kFalseAtom) continue;
			AtomSet probe(m);
			auto    red = reduct({r}, probe);
			for (const auto& x : red) {
				int64_t sum = 0;
				for (std::size_t i = 0; i != x.pos.size(); ++i) sum += probe.count(x.pos[i]) ? x.weights[i] : 0;
				if (sum >= x.bound) hidden.insert(x.head);
			}
		}
		AtomSet next = visible;
		next.insert(hidden.begin(), hidden.end());
		if (next != m) {
			m       = std::move(next);
			changed = true;
		}
	}
	bool ok = isStable(program, m);
	if (!ok && reason) *reason = "not a stable model";
	return ok;
}

} // namespace aspkit
