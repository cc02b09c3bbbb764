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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace aspkit {

struct Position {
	std::string file;
	uint32_t    line   = 0;
	uint32_t    column = 0;
};

// file:line:col
std::string toString(const Position& pos);

enum class Severity { Warning, Error };

struct Diagnostic {
	Severity    severity = Severity::Error;
	Position    pos;
	std::string message;
};

// file:line:col: severity: message
std::string format(const Diagnostic& d);
bool        hasErrors(const std::vector<Diagnostic>& diags);

/////////////////////////////////////////////////////////////////////////////////////////
// Exceptions
/////////////////////////////////////////////////////////////////////////////////////////
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

class LexError : public Error {
public:
	LexError(Position pos, const std::string& message);
	const Position& position() const { return pos_; }
private:
	Position pos_;
};

class ParseError : public Error {
public:
	enum class Kind { Unexpected, MissingDot, Semantic };
	ParseError(Position pos, std::string expected, std::string found, Kind kind = Kind::Unexpected);
	const Position&    position() const { return pos_; }
	const std::string& expected() const { return expected_; }
	const std::string& found() const { return found_; }
	Kind               kind() const { return kind_; }
private:
	Position    pos_;
	std::string expected_;
	std::string found_;
	Kind        kind_;
};

// Raised when domain restriction or other static checks fail.
class SemanticError : public Error {
public:
	explicit SemanticError(std::vector<Diagnostic> diags);
	const std::vector<Diagnostic>& diagnostics() const { return diags_; }
private:
	std::vector<Diagnostic> diags_;
};

class GroundingError : public Error {
public:
	GroundingError(Position pos, const std::string& message);
	const Position& position() const { return pos_; }
private:
	Position pos_;
};

class ArithmeticError : public GroundingError {
public:
	using GroundingError::GroundingError;
};

class UnboundConstant : public GroundingError {
public:
	UnboundConstant(Position pos, std::string name);
	const std::string& name() const { return name_; }
private:
	std::string name_;
};

class FormatError : public Error {
public:
	FormatError(std::size_t line, const std::string& reason);
	std::size_t line() const { return line_; }
private:
	std::size_t line_;
};

class UnknownRuleType : public FormatError {
public:
	UnknownRuleType(std::size_t line, int64_t type);
};

class UnsupportedRuleType : public Error {
public:
	using Error::Error;
};

class CapExceeded : public Error {
public:
	CapExceeded(std::size_t atoms, std::size_t cap);
};

} // namespace aspkit
