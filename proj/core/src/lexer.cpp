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

#include <aspkit/lexer.h>

#include <cctype>
#include <charconv>

namespace aspkit {

const char* toString(TokenKind kind) {
	switch (kind) {
		case TokenKind::Identifier: return "identifier";
		case TokenKind::Variable:   return "variable";
		case TokenKind::Number:     return "number";
		case TokenKind::Not:        return "'not'";
		case TokenKind::Directive:  return "directive";
		case TokenKind::LParen:     return "'('";
		case TokenKind::RParen:     return "')'";
		case TokenKind::LBrace:     return "'{'";
		case TokenKind::RBrace:     return "'}'";
		case TokenKind::LBracket:   return "'['";
		case TokenKind::RBracket:   return "']'";
		case TokenKind::Comma:      return "','";
		case TokenKind::Semicolon:  return "';'";
		case TokenKind::Colon:      return "':'";
		case TokenKind::Arrow:      return "':-'";
		case TokenKind::Dot:        return "'.'";
		case TokenKind::DotDot:     return "'..'";
		case TokenKind::Plus:       return "'+'";
		case TokenKind::Minus:      return "'-'";
		case TokenKind::Star:       return "'*'";
		case TokenKind::Slash:      return "'/'";
		case TokenKind::Assign:     return "'='";
		case TokenKind::Eq:         return "'=='";
		case TokenKind::Ne:         return "'!='";
		case TokenKind::Lt:         return "'<'";
		case TokenKind::Le:         return "'<='";
		case TokenKind::Gt:         return "'>'";
		case TokenKind::Ge:         return "'>='";
		case TokenKind::End:        return "end of input";
	}
	return "?";
}

namespace {

class Lexer {
public:
	Lexer(std::string_view text, const std::string& file)
		: text_(text)
		, file_(file) {}

	std::vector<Token> run() {
		std::vector<Token> out;
		for (;;) {
			skipBlanks();
			Token tok;
			tok.pos = here();
			if (at_ >= text_.size()) {
				tok.kind = TokenKind::End;
				out.push_back(std::move(tok));
				return out;
			}
			lexOne(tok);
			out.push_back(std::move(tok));
		}
	}

private:
	Position here() const { return Position{file_, line_, col_}; }
	char     peek(std::size_t off = 0) const { return at_ + off < text_.size() ? text_[at_ + off] : '\0'; }
	void     advance(std::size_t n = 1) {
        for (std::size_t i = 0; i != n && at_ < text_.size(); ++i) {
            if (text_[at_++] == '\n') {
                ++line_;
                col_ = 1;
            }
            else {
                ++col_;
            }
        }
	}

	void skipBlanks() {
		while (at_ < text_.size()) {
			char c = peek();
			if (c == '%') {
				while (at_ < text_.size() && peek() != '\n') advance();
			}
			else if (std::isspace(static_cast<unsigned char>(c))) {
				advance();
			}
			else {
				break;
			}
		}
	}

	static bool isNameChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

	void lexOne(Token& tok) {
		char c = peek();
		if (std::islower(static_cast<unsigned char>(c))) {
			tok.text = readName();
			tok.kind = tok.text == "not" ? TokenKind::Not : TokenKind::Identifier;
			return;
		}
		if (std::isupper(static_cast<unsigned char>(c))) {
			tok.text = readName();
			tok.kind = TokenKind::Variable;
			return;
		}
		if (std::isdigit(static_cast<unsigned char>(c))) {
			std::size_t start = at_;
			while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
			tok.text  = std::string(text_.substr(start, at_ - start));
			tok.kind  = TokenKind::Number;
			auto res  = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), tok.value);
			if (res.ec != std::errc{}) throw LexError(tok.pos, "integer literal '" + tok.text + "' out of range");
			if (isNameChar(peek())) throw LexError(here(), "illegal character '" + std::string(1, peek()) + "' after number");
			return;
		}
		if (c == '#') {
			advance();
			std::string name = std::islower(static_cast<unsigned char>(peek())) ? readName() : std::string();
			if (name != "const") throw LexError(tok.pos, "unknown directive '#" + name + "'");
			tok.kind = TokenKind::Directive;
			tok.text = "#const";
			return;
		}
		auto two = [&](char second) { return peek(1) == second; };
		auto set = [&](TokenKind k, std::size_t n) {
			tok.kind = k;
			tok.text = std::string(text_.substr(at_, n));
			advance(n);
		};
		switch (c) {
			case '(': return set(TokenKind::LParen, 1);
			case ')': return set(TokenKind::RParen, 1);
			case '{': return set(TokenKind::LBrace, 1);
			case '}': return set(TokenKind::RBrace, 1);
			case '[': return set(TokenKind::LBracket, 1);
			case ']': return set(TokenKind::RBracket, 1);
			case ',': return set(TokenKind::Comma, 1);
			case ';': return set(TokenKind::Semicolon, 1);
			case '+': return set(TokenKind::Plus, 1);
			case '-': return set(TokenKind::Minus, 1);
			case '*': return set(TokenKind::Star, 1);
			case '/': return set(TokenKind::Slash, 1);
			case ':': return two('-') ? set(TokenKind::Arrow, 2) : set(TokenKind::Colon, 1);
			case '.': return two('.') ? set(TokenKind::DotDot, 2) : set(TokenKind::Dot, 1);
			case '=': return two('=') ? set(TokenKind::Eq, 2) : set(TokenKind::Assign, 1);
			case '<': return two('=') ? set(TokenKind::Le, 2) : set(TokenKind::Lt, 1);
			case '>': return two('=') ? set(TokenKind::Ge, 2) : set(TokenKind::Gt, 1);
			case '!':
				if (two('=')) return set(TokenKind::Ne, 2);
				throw LexError(tok.pos, "expected '=' after '!'");
			case '"': throw LexError(tok.pos, "unterminated or unsupported string constant");
			default: break;
		}
		std::string shown = std::isprint(static_cast<unsigned char>(c)) ? std::string(1, c)
		                                                                : "\\x" + std::to_string(static_cast<unsigned char>(c));
		throw LexError(tok.pos, "illegal character '" + shown + "'");
	}

	std::string readName() {
		std::size_t start = at_;
		while (isNameChar(peek())) advance();
		return std::string(text_.substr(start, at_ - start));
	}

	std::string_view text_;
	std::string      file_;
	std::size_t      at_   = 0;
	uint32_t         line_ = 1;
	uint32_t         col_  = 1;
};

} // namespace

std::vector<Token> tokenize(std::string_view text, const std::string& file) {
	return Lexer(text, file).run();
}

} // namespace aspkit
