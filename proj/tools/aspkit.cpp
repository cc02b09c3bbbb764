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

#include <aspkit/error.h>
#include <aspkit/ground_format.h>
#include <aspkit/pipeline.h>

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace aspkit;

enum ExitCode : int { Ok = 0, Usage = 1, Parse = 2, Semantic = 3, Grounding = 4 };

struct Flags {
	std::vector<std::string> constants;
	std::string              domain = "all";
	bool                     warnings = false;
	bool                     text     = false;
	bool                     wfs      = false;
	bool                     stats    = false;
	bool                     check    = false;
	std::vector<std::string> positional;
};

bool parseInteger(std::string_view s, int64_t& out) {
	auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
	return ec == std::errc() && p == s.data() + s.size();
}

bool validName(std::string_view s) {
	if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
	return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// Splits positionals into files and a trailing model count.
std::optional<int64_t> takeCount(std::vector<std::string>& args) {
	int64_t n = 0;
	if (args.empty() || !parseInteger(args.back(), n) || n < 0) return std::nullopt;
	args.pop_back();
	return n;
}

int groundFiles(const Flags& f, const std::vector<std::string>& files, GroundOutput& out) {
	GroundOptions opts;
	opts.warnings   = f.warnings;
	opts.domainMode = f.domain == "none" ? DomainMode::Remove : DomainMode::Keep;
	if (f.domain != "none" && f.domain != "all") {
		std::cerr << "aspkit: error: -d expects 'none' or 'all', got '" << f.domain << "'\n";
		return Usage;
	}
	for (const auto& c : f.constants) {
		auto    eq    = c.find('=');
		int64_t value = 0;
		if (eq == std::string::npos || !validName(c.substr(0, eq)) || !parseInteger(c.substr(eq + 1), value)) {
			std::cerr << "aspkit: error: -c expects name=integer, got '" << c << "'\n";
			return Usage;
		}
		opts.constants[c.substr(0, eq)] = value;
	}
	if (files.empty()) {
		std::cerr << "aspkit: error: no input files\n";
		return Usage;
	}
	std::vector<SourceFile> sources;
	for (const auto& name : files) {
		std::ifstream in(name, std::ios::binary);
		if (!in) {
			std::cerr << "aspkit: error: cannot open '" << name << "'\n";
			return Usage;
		}
		std::ostringstream text;
		text << in.rdbuf();
		sources.push_back({name, text.str()});
	}
	try {
		out = groundSources(sources, opts);
	}
	catch (const LexError& e) {
		std::cerr << "aspkit: error: " << e.what() << '\n';
		return Parse;
	}
	catch (const ParseError& e) {
		std::cerr << "aspkit: error: " << e.what() << '\n';
		return Parse;
	}
	catch (const SemanticError& e) {
		for (const auto& d : e.diagnostics()) std::cerr << format(d) << '\n';
		return Semantic;
	}
	catch (const GroundingError& e) {
		std::cerr << "aspkit: error: " << e.what() << '\n';
		return Grounding;
	}
	for (const auto& d : out.diagnostics) std::cerr << format(d) << '\n';
	return Ok;
}

int solveProgram(const Flags& f, const GroundProgram& program, std::optional<int64_t> count) {
	if (f.wfs) {
		try {
			printWellFounded(std::cout, program);
		}
		catch (const UnsupportedRuleType& e) {
			std::cerr << "aspkit: error: " << e.what() << '\n';
			return Parse;
		}
		return Ok;
	}
	SolveOptions opts;
	opts.modelCount                = count;
	opts.solver.verifyModels       = f.check;
	SolverStats stats;
	int64_t     n = printModels(std::cout, program, opts, &stats);
	if (f.stats) printStats(std::cerr, stats);
	return n > 0 ? Ok : 1;
}

int runGround(const Flags& f) {
	GroundOutput out;
	if (int rc = groundFiles(f, f.positional, out)) return rc;
	if (f.text) printGroundText(std::cout, out.grounding);
	else emitGroundFormat(std::cout, out.program);
	return Ok;
}

int runSolve(const Flags& f) {
	auto args  = f.positional;
	auto count = takeCount(args);
	if (!args.empty()) {
		std::cerr << "aspkit: error: unexpected argument '" << args.front() << "'\n";
		return Usage;
	}
	GroundProgram program;
	try {
		program = parseGroundFormat(std::cin);
	}
	catch (const FormatError& e) {
		std::cerr << "aspkit: error: " << e.what() << '\n';
		return Parse;
	}
	return solveProgram(f, program, count);
}

int runCombined(const Flags& f) {
	auto args  = f.positional;
	auto count = takeCount(args);
	GroundOutput out;
	if (int rc = groundFiles(f, args, out)) return rc;
	return solveProgram(f, out.program, count);
}

int runVerify(const std::string& groundFile, const std::string& modelFile) {
	std::ifstream ground(groundFile), model(modelFile);
	if (!ground || !model) {
		std::cerr << "aspkit: error: cannot open '" << (!ground ? groundFile : modelFile) << "'\n";
		return Usage;
	}
	GroundProgram program;
	try {
		program = parseGroundFormat(ground);
	}
	catch (const FormatError& e) {
		std::cerr << "aspkit: error: " << e.what() << '\n';
		return Parse;
	}
	// Raw solver output holds one model per `Stable Model:` line; anything
	// else is read as a single model.
	std::vector<std::vector<std::string>> models;
	std::vector<std::string>              plain;
	std::string                           line;
	while (std::getline(model, line)) {
		if (line.rfind("Answer:", 0) == 0 || line == "True" || line == "False") continue;
		std::vector<std::string>* into = &plain;
		if (line.rfind("Stable Model:", 0) == 0) {
			line.erase(0, 13);
			into = &models.emplace_back();
		}
		std::istringstream words(line);
		for (std::string w; words >> w;) into->push_back(w);
	}
	if (models.empty()) models.push_back(std::move(plain));
	bool allStable = true;
	for (std::size_t i = 0; i != models.size(); ++i) {
		std::string reason;
		std::cout << "Answer " << i + 1 << ": ";
		if (verifyModel(program, models[i], &reason)) {
			std::cout << "stable\n";
		}
		else {
			std::cout << "not stable: " << reason << '\n';
			allStable = false;
		}
	}
	return allStable ? Ok : 1;
}

void groundFlags(CLI::App& cmd, Flags& f) {
	cmd.add_option("-c,--const", f.constants, "Bind a constant, name=value")->allow_extra_args(false);
	cmd.add_option("-d,--domain", f.domain, "Domain predicates in the output: all or none");
	cmd.add_flag("-W,--warnings", f.warnings, "Report likely mistakes in the program");
}

void solveFlags(CLI::App& cmd, Flags& f) {
	cmd.add_flag("--wfs", f.wfs, "Print the well-founded model instead of stable models");
	cmd.add_flag("--stats", f.stats, "Print search statistics to stderr");
	cmd.add_flag("--check", f.check, "Check every model with the brute-force stability test");
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"Grounder and stable model solver for normal logic programs with cardinality and weight constraints"};
	app.require_subcommand(1);
	Flags f;

	auto* ground = app.add_subcommand("ground", "Ground programs and write the numeric ground format");
	groundFlags(*ground, f);
	ground->add_flag("--text", f.text, "Write ground rules in source syntax");
	ground->add_option("files", f.positional, "Program files")->required();

	auto* solve = app.add_subcommand("solve", "Read the numeric ground format from stdin and print stable models");
	solveFlags(*solve, f);
	solve->add_option("count", f.positional, "Number of models, 0 for all");

	auto* run = app.add_subcommand("run", "Ground and solve in one process");
	groundFlags(*run, f);
	solveFlags(*run, f);
	run->add_option("files", f.positional, "Program files, optionally followed by a model count")->required();

	std::string groundFile, modelFile;
	auto*       verify = app.add_subcommand("verify", "Check that a model is stable for a ground program");
	verify->add_option("ground-file", groundFile)->required();
	verify->add_option("model-file", modelFile)->required();

	try {
		app.parse(argc, argv);
	}
	catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	}
	catch (const CLI::CallForAllHelp& e) {
		return app.exit(e);
	}
	catch (const CLI::ParseError& e) {
		app.exit(e);
		return Usage;
	}

	if (*ground) return runGround(f);
	if (*solve) return runSolve(f);
	if (*run) return runCombined(f);
	return runVerify(groundFile, modelFile);
}
