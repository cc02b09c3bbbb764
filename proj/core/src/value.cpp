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

#include <aspkit/value.h>

#include <ostream>

namespace aspkit {

std::strong_ordering operator<=>(const Value& a, const Value& b) {
	if (a.isInteger() != b.isInteger()) return a.isInteger() ? std::strong_ordering::less : std::strong_ordering::greater;
	if (a.isInteger()) return a.integer() <=> b.integer();
	if (&a.symbol() == &b.symbol()) return std::strong_ordering::equal;
	int c = a.symbol().compare(b.symbol());
	return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Value& v) {
	if (v.isInteger()) return os << v.integer();
	return os << v.symbol();
}

const std::string* SymbolPool::intern(std::string_view name) { return &*names_.emplace(name).first; }

std::string atomText(std::string_view predicate, const Tuple& args) {
	std::string out(predicate);
	if (args.empty()) return out;
	out += '(';
	for (std::size_t i = 0; i != args.size(); ++i) {
		if (i) out += ',';
		if (args[i].isInteger()) out += std::to_string(args[i].integer());
		else out += args[i].symbol();
	}
	out += ')';
	return out;
}

} // namespace aspkit
