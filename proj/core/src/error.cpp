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

#include <algorithm>

namespace aspkit {

std::string toString(const Position& pos) {
	std::string file = pos.file.empty() ? std::string("<input>") : pos.file;
	return file + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

std::string format(const Diagnostic& d) {
	return toString(d.pos) + (d.severity == Severity::Error ? ": error: " : ": warning: ") + d.message;
}

bool hasErrors(const std::vector<Diagnostic>& diags) {
	return std::ranges::any_of(diags, [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

LexError::LexError(Position pos, const std::string& message)
	: Error(toString(pos) + ": " + message)
	, pos_(std::move(pos)) {}

namespace {
std::string parseMessage(const Position& pos, const std::string& expected, const std::string& found,
                         ParseError::Kind kind) {
	std::string msg = toString(pos) + ": ";
	switch (kind) {
		case ParseError::Kind::MissingDot: msg += "missing '.' at end of rule, found " + found; break;
		case ParseError::Kind::Semantic:   msg += expected; break;
		default:                           msg += "expected " + expected + ", found " + found; break;
	}
	return msg;
}
} // namespace

ParseError::ParseError(Position pos, std::string expected, std::string found, Kind kind)
	: Error(parseMessage(pos, expected, found, kind))
	, pos_(std::move(pos))
	, expected_(std::move(expected))
	, found_(std::move(found))
	, kind_(kind) {}

namespace {
std::string joinDiagnostics(const std::vector<Diagnostic>& diags) {
	std::string out;
	for (const auto& d : diags) {
		if (!out.empty()) out += '\n';
		out += format(d);
	}
	return out;
}
} // namespace

SemanticError::SemanticError(std::vector<Diagnostic> diags)
	: Error(joinDiagnostics(diags))
	, diags_(std::move(diags)) {}

GroundingError::GroundingError(Position pos, const std::string& message)
	: Error(toString(pos) + ": " + message)
	, pos_(std::move(pos)) {}

UnboundConstant::UnboundConstant(Position pos, std::string name)
	: GroundingError(std::move(pos), "constant '" + name + "' has no integer value")
	, name_(std::move(name)) {}

FormatError::FormatError(std::size_t line, const std::string& reason)
	: Error("line " + std::to_string(line) + ": " + reason)
	, line_(line) {}

UnknownRuleType::UnknownRuleType(std::size_t line, int64_t type)
	: FormatError(line, "unknown rule type " + std::to_string(type)) {}

CapExceeded::CapExceeded(std::size_t atoms, std::size_t cap)
	: Error("brute force enumeration over " + std::to_string(atoms) + " atoms exceeds cap of " +
	        std::to_string(cap)) {}

} // namespace aspkit
