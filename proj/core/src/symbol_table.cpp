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

#include <aspkit/symbol_table.h>

namespace aspkit {

AtomId SymbolTable::intern(std::string_view name) {
	std::string key(name);
	if (auto it = index_.find(key); it != index_.end()) return it->second;
	auto id = static_cast<AtomId>(names_.size());
	names_.push_back(key);
	index_.emplace(std::move(key), id);
	return id;
}

bool SymbolTable::assign(AtomId id, std::string_view name) {
	if (id < kFirstAtom || name.empty() || isVisible(id) || index_.count(std::string(name))) return false;
	if (names_.size() <= id) names_.resize(id + 1);
	names_[id] = std::string(name);
	index_.emplace(std::string(name), id);
	return true;
}

std::optional<AtomId> SymbolTable::find(std::string_view name) const {
	if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
	return std::nullopt;
}

const std::string& SymbolTable::name(AtomId id) const {
	static const std::string empty;
	return id < names_.size() ? names_[id] : empty;
}

std::vector<AtomId> SymbolTable::ids() const {
	std::vector<AtomId> out;
	out.reserve(index_.size());
	for (AtomId id = kFirstAtom; id < names_.size(); ++id) {
		if (!names_[id].empty()) out.push_back(id);
	}
	return out;
}

} // namespace aspkit
