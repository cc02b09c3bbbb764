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

#include <aspkit/ast.h>
#include <aspkit/lexer.h>

#include <map>
#include <span>
#include <string>
#include <string_view>

namespace aspkit {

// Parses a token stream produced by tokenize(). Token streams of several files
// may be concatenated (dropping all but the last End token) to parse them as one
// program. Throws ParseError.
ProgramAst parseProgram(std::span<const Token> tokens);

// Convenience: tokenize + parse.
ProgramAst parseProgram(std::string_view text, const std::string& file = "<input>");

struct SourceFile {
	std::string name;
	std::string text;
};

// Tokenizes every file and parses the concatenation in order.
ProgramAst parseFiles(std::span<const SourceFile> files);

// Replaces bound symbolic constants by integers. Declarations in the program
// are applied first; `bindings` take precedence over them.
ProgramAst substituteConstants(const ProgramAst& ast, const std::map<std::string, int64_t>& bindings);

} // namespace aspkit
