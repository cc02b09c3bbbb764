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

#include <aspkit/error.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace aspkit {

enum class TokenKind : uint8_t {
	Identifier, // lowercase-initial name
	Variable,   // uppercase-initial name
	Number,
	Not,        // keyword `not`
	Directive,  // `#const`
	LParen,
	RParen,
	LBrace,
	RBrace,
	LBracket,
	RBracket,
	Comma,
	Semicolon,
	Colon,
	Arrow,      // :-
	Dot,
	DotDot,
	Plus,
	Minus,
	Star,
	Slash,
	Assign,     // =
	Eq,         // ==
	Ne,         // !=
	Lt,
	Le,
	Gt,
	Ge,
	End,
};

const char* toString(TokenKind kind);

struct Token {
	TokenKind   kind = TokenKind::End;
	std::string text;
	int64_t     value = 0; // Number
	Position    pos;
};

// Splits `text` into tokens. `%` starts a comment running to end of line.
// The token list always ends with an End token.
std::vector<Token> tokenize(std::string_view text, const std::string& file = "<input>");

} // namespace aspkit
