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
#include <aspkit/parser.h>
#include <aspkit/program.h>
#include <aspkit/solver.h>

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aspkit {

struct GroundOptions {
	std::map<std::string, int64_t> constants;
	DomainMode                     domainMode = DomainMode::Keep;
	bool                           warnings   = false; // include lint diagnostics
};

struct GroundOutput {
	PredicateMap            predicates;
	GroundingResult         grounding;   // rules before translation
	GroundProgram           program;     // primitive rules
	std::vector<Diagnostic> diagnostics; // warnings only; errors are thrown
};

// Parses, checks, grounds and translates `files`. Throws LexError, ParseError,
// SemanticError or GroundingError.
GroundOutput groundSources(std::span<const SourceFile> files, const GroundOptions& options);

// Ground rules in source syntax followed by the compute statement, if any.
void printGroundText(std::ostream& os, const GroundingResult& grounding);

struct SolveOptions {
	std::optional<int64_t> modelCount; // overrides the program's model count
	SolverOptions          solver;
};

// Visible atom names of `model` in ascending id order, space separated.
std::string modelText(const SymbolTable& symbols, const std::vector<AtomId>& model);

// Prints `Answer: i` / `Stable Model: ...` for each model and a final `True`
// or `False`. Returns the number of models printed.
int64_t printModels(std::ostream& os, const GroundProgram& program, const SolveOptions& options,
                    SolverStats* stats = nullptr);

void printWellFounded(std::ostream& os, const GroundProgram& program);
void printStats(std::ostream& os, const SolverStats& stats);

// Completes a set of visible atoms with the hidden atoms its rules derive and
// checks stability of the result.
bool verifyModel(const GroundProgram& program, const std::vector<std::string>& atomNames, std::string* reason = nullptr);

} // namespace aspkit
