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

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace aspkit {

// A ground term: an integer or an interned symbolic constant. Symbols compare
// by pointer for equality; ordering puts integers before symbols and orders
// symbols lexicographically.
class Value {
public:
	Value() = default;
	static Value integer(int64_t v) { return Value(nullptr, v); }
	static Value symbol(const std::string* interned) { return Value(interned, 0); }

	bool               isInteger() const { return sym_ == nullptr; }
	bool               isSymbol() const { return sym_ != nullptr; }
	int64_t            integer() const { return num_; }
	const std::string& symbol() const { return *sym_; }

	std::size_t hash() const {
		return sym_ ? std::hash<const void*>{}(sym_) : std::hash<int64_t>{}(num_) * 0x9e3779b97f4a7c15ULL;
	}

	friend bool operator==(const Value& a, const Value& b) { return a.sym_ == b.sym_ && a.num_ == b.num_; }
	friend std::strong_ordering operator<=>(const Value& a, const Value& b);

private:
	Value(const std::string* s, int64_t n)
		: sym_(s)
		, num_(n) {}
	const std::string* sym_ = nullptr;
	int64_t            num_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Value& v);

using Tuple = std::vector<Value>;

struct TupleHash {
	std::size_t operator()(const Tuple& t) const {
		std::size_t h = t.size();
		for (const auto& v : t) h = (h ^ v.hash()) * 0x100000001b3ULL + 0x9e3779b9;
		return h;
	}
};

// Owns the storage behind symbol Values. Pointers stay valid for the pool's lifetime.
class SymbolPool {
public:
	const std::string* intern(std::string_view name);
	Value              symbol(std::string_view name) { return Value::symbol(intern(name)); }

private:
	std::unordered_set<std::string> names_;
};

// Renders `pred(a1,...,an)`, or just `pred` for arity 0.
std::string atomText(std::string_view predicate, const Tuple& args);

} // namespace aspkit
