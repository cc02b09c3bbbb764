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

#include <aspkit/domain_analysis.h>
#include <aspkit/value.h>

#include <map>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

namespace aspkit {

// Set of ground tuples of one predicate, kept in insertion order. Lookups by a
// subset of argument positions are served from hash indexes that are built on
// first use and extended incrementally as the relation grows.
class Relation {
public:
	explicit Relation(uint32_t arity = 0)
		: arity_(arity) {}

	// Returns true if `t` was not yet present.
	bool insert(Tuple t);
	bool contains(const Tuple& t) const { return set_.count(t) != 0; }
	// Insertion index of `t`, or -1.
	int64_t indexOf(const Tuple& t) const;

	uint32_t     arity() const { return arity_; }
	std::size_t  size() const { return tuples_.size(); }
	const Tuple& operator[](std::size_t i) const { return tuples_[i]; }
	auto         begin() const { return tuples_.begin(); }
	auto         end() const { return tuples_.end(); }

	// Indices of tuples whose values at the positions set in `mask` equal `key`
	// (given in position order). Not thread-safe: may extend an index.
	const std::vector<uint32_t>& lookup(uint64_t mask, const Tuple& key) const;

private:
	struct Index {
		std::size_t                                                    upto = 0;
		std::unordered_map<Tuple, std::vector<uint32_t>, TupleHash> buckets;
	};

	uint32_t                                     arity_;
	std::vector<Tuple>                           tuples_;
	std::unordered_map<Tuple, uint32_t, TupleHash> set_;
	mutable std::unordered_map<uint64_t, Index>  indexes_;
};

// Extensions of the domain predicates: the least model of the domain part of a
// program. Owns the symbol pool its tuples refer to.
class Extension {
public:
	Extension()
		: pool_(std::make_shared<SymbolPool>()) {}

	Relation&       relation(const PredicateKey& key);
	const Relation* find(const PredicateKey& key) const;
	bool            contains(const PredicateKey& key, const Tuple& t) const;

	// Predicates in creation order.
	const std::vector<PredicateKey>& predicates() const { return order_; }

	SymbolPool&                        pool() const { return *pool_; }
	const std::shared_ptr<SymbolPool>& sharedPool() const { return pool_; }

	// Tuples of `key` as sorted strings; handy for tests and debugging.
	std::vector<std::string> render(const PredicateKey& key) const;

private:
	std::shared_ptr<SymbolPool>      pool_;
	std::map<PredicateKey, Relation> relations_;
	std::vector<PredicateKey>        order_;
};

} // namespace aspkit
