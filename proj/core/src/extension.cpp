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

#include <aspkit/extension.h>

#include <algorithm>

namespace aspkit {

bool Relation::insert(Tuple t) {
	auto [it, inserted] = set_.emplace(t, static_cast<uint32_t>(tuples_.size()));
	if (inserted) tuples_.push_back(std::move(t));
	return inserted;
}

int64_t Relation::indexOf(const Tuple& t) const {
	auto it = set_.find(t);
	return it == set_.end() ? -1 : static_cast<int64_t>(it->second);
}

const std::vector<uint32_t>& Relation::lookup(uint64_t mask, const Tuple& key) const {
	static const std::vector<uint32_t> none;
	Index& idx = indexes_[mask];
	Tuple  k;
	for (; idx.upto < tuples_.size(); ++idx.upto) {
		const Tuple& t = tuples_[idx.upto];
		k.clear();
		for (uint32_t i = 0; i != arity_; ++i) {
			if (mask & (uint64_t(1) << i)) k.push_back(t[i]);
		}
		idx.buckets[k].push_back(static_cast<uint32_t>(idx.upto));
	}
	auto it = idx.buckets.find(key);
	return it == idx.buckets.end() ? none : it->second;
}

Relation& Extension::relation(const PredicateKey& key) {
	auto [it, inserted] = relations_.try_emplace(key, key.arity);
	if (inserted) order_.push_back(key);
	return it->second;
}

const Relation* Extension::find(const PredicateKey& key) const {
	auto it = relations_.find(key);
	return it == relations_.end() ? nullptr : &it->second;
}

bool Extension::contains(const PredicateKey& key, const Tuple& t) const {
	const Relation* r = find(key);
	return r && r->contains(t);
}

std::vector<std::string> Extension::render(const PredicateKey& key) const {
	std::vector<std::string> out;
	if (const Relation* r = find(key)) {
		for (const auto& t : *r) out.push_back(atomText(key.name, t));
	}
	std::sort(out.begin(), out.end());
	return out;
}

} // namespace aspkit
