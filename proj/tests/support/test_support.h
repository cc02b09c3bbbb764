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

#include <aspkit/ground_format.h>
#include <aspkit/oracle.h>
#include <aspkit/pipeline.h>
#include <aspkit/solver.h>

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace aspkit::test {

using NameSet = std::set<std::string>;

std::string corpusPath(const std::string& name);
std::string readFile(const std::string& path);

GroundOutput ground(const std::string& text, const std::map<std::string, int64_t>& constants = {},
                    DomainMode mode = DomainMode::Keep);
GroundOutput groundCorpus(const std::vector<std::string>& files, const std::map<std::string, int64_t>& constants = {},
                          DomainMode mode = DomainMode::Keep);

// Visible atom names of each model; the result is sorted.
std::vector<NameSet> named(const SymbolTable& symbols, const std::vector<AtomSet>& models);
std::vector<AtomSet> solverModels(const GroundProgram& program, const SolverOptions& options = {}, int64_t count = 0);
std::vector<NameSet> stableModels(const GroundProgram& program, const SolverOptions& options = {}, int64_t count = 0);
std::vector<NameSet> stableModels(const std::string& text, const std::map<std::string, int64_t>& constants = {},
                                  DomainMode mode = DomainMode::Keep);
NameSet              names(std::initializer_list<const char*> atoms);

// Random normal program over atoms a0..a{atoms-1}; about a tenth of the
// rules are integrity constraints when `constraints` is set.
GroundProgram randomNormalProgram(std::mt19937_64& rng, int atoms, int rules, bool constraints = true);

// Random ground program with cardinality and weight constraints in heads and
// bodies, over atoms a0..a{atoms-1}.
GroundingResult randomExtendedProgram(std::mt19937_64& rng, int atoms, int rules, bool negativeWeights = false);

// Least model of a positive Datalog program given as facts plus rules, by
// naive iteration over every substitution from the active domain. Atoms are
// rendered like the grounder renders them.
std::set<std::string> naiveDatalog(const std::string& text);

// Ground program obtained by substituting every constant of the program for
// every variable, without any domain analysis. Only plain literals and
// comparisons are supported.
GroundProgram naiveInstantiation(const std::string& text);

// All N-queens placements as sets of `q(column,row)` atoms.
std::vector<NameSet> queensSolutions(int n);

struct CliResult {
	int         status = -1;
	std::string out;
	std::string err;
};
// Runs the aspkit binary with `args` (shell syntax) and `input` on stdin.
CliResult runCli(const std::string& args, const std::string& input = "");

// Ring graph 3-coloring with `nodes` nodes.
std::string ringColoring(int nodes);

} // namespace aspkit::test
