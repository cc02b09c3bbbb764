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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace aspkit {

using AtomId = uint32_t;

// Reserved atom standing for "false". Every integrity constraint derives it and
// the compute statement forces it false.
inline constexpr AtomId kFalseAtom = 1;
inline constexpr AtomId kFirstAtom = 2;

// Bijection between visible atom names and atom ids. Ids without a name are
// hidden (auxiliary) atoms.
class SymbolTable {
public:
	// Returns the id of `name`, assigning the next free id if it is new.
	AtomId intern(std::string_view name);
	// Binds `name` to `id`. Returns false if the id or name is already in use.
	bool   assign(AtomId id, std::string_view name);

	std::optional<AtomId> find(std::string_view name) const;
	bool                  isVisible(AtomId id) const { return id < names_.size() && !names_[id].empty(); }
	const std::string&    name(AtomId id) const;

	// Number of visible atoms.
	std::size_t size() const { return index_.size(); }
	// Largest id that has been named, or kFalseAtom if none.
	AtomId maxId() const { return names_.size() <= kFirstAtom ? kFalseAtom : static_cast<AtomId>(names_.size() - 1); }
	// Visible ids in ascending order.
	std::vector<AtomId> ids() const;

	friend bool operator==(const SymbolTable& a, const SymbolTable& b) { return a.names_ == b.names_; }

private:
	std::vector<std::string>                names_ = std::vector<std::string>(kFirstAtom);
	std::unordered_map<std::string, AtomId> index_;
};

} // namespace aspkit
