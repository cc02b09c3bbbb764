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

#include <aspkit/program.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace aspkit {

enum class Truth : uint8_t { Unknown, True, False };

struct SolverOptions {
	// Every unknown atom is probed while at most this many are unknown; above
	// it only the first `lookaheadSample` unknown atoms are.
	std::size_t lookaheadThreshold = 1000;
	std::size_t lookaheadSample    = 24;
	// Recompute unfounded sets over all atoms instead of per dirty component.
	bool fullAtmost = false;
	// Check each model against the brute-force stability test.
	bool verifyModels = false;
	// Check expand idempotence, counter consistency and backtrack integrity
	// at every step; violations are counted in SolverStats.
	bool checkInvariants = false;
	// Randomizes branching atom and polarity.
	std::optional<uint64_t> perturbationSeed;
};

struct SolverStats {
	uint64_t decisions      = 0;
	uint64_t conflicts      = 0;
	uint64_t propagations   = 0;
	uint64_t probes         = 0;
	uint64_t failedLiterals = 0;
	uint64_t atmostChecks   = 0;
	uint64_t models         = 0;
	uint64_t maxDepth       = 0;
	uint64_t invariantChecks     = 0;
	uint64_t invariantViolations = 0;
	std::vector<std::string> violations; // first few violation messages
};

// Stable model enumeration by propagation and chronological backtracking.
class Solver {
public:
	explicit Solver(const GroundProgram& program, SolverOptions options = {});
	Solver(const Solver&)            = delete;
	Solver& operator=(const Solver&) = delete;

	// Next stable model as its true atoms (hidden ones included) in ascending
	// order, or nullopt once the search space is exhausted.
	std::optional<std::vector<AtomId>> next();

	// Up to `count` further models; 0 means all.
	std::vector<std::vector<AtomId>> solve(int64_t count);

	const SolverStats& stats() const { return stats_; }
	Truth              value(AtomId a) const { return a < value_.size() ? value_[a] : Truth::Unknown; }
	AtomId             maxAtom() const { return static_cast<AtomId>(value_.size() - 1); }

	// Runs the level-0 closure and returns false on conflict. Called by next().
	bool initialize();
	// Closure of the current assignment under both inference operators.
	// Returns false on conflict; the assignment is then left inconsistent
	// until backtrack() is called.
	bool expand();
	// Temporarily assigns `a` (pushing a level), for tests of expand().
	bool assume(AtomId a, Truth v);
	void backtrack(); // undoes the last assume()

	// Trail snapshot helpers for property tests.
	std::vector<Truth> assignment() const { return value_; }

private:
	struct Lit {
		AtomId  atom;
		bool    neg;
		int64_t w;
	};
	struct Occ {
		uint32_t rule;
		bool     neg;
		int64_t  w;
	};
	struct Rule {
		RuleType type;
		uint32_t headBegin, headEnd;
		uint32_t bodyBegin, bodyEnd;
		int64_t  bound, total, maxW;
		int64_t  sat  = 0; // weight of true literals
		int64_t  fals = 0; // weight of false literals
	};
	struct Decision {
		AtomId             atom;
		Truth              value;
		bool               flipped;
		std::size_t        trailMark;
		std::vector<Truth> snapshot; // only with checkInvariants
	};

	bool   assign(AtomId a, Truth v);
	bool   litFalse(const Lit& l) const;
	Truth  litValue(const Lit& l) const;
	bool   holds(const Rule& r) const { return r.sat >= r.bound; }
	bool   failed(const Rule& r) const { return r.total - r.fals < r.bound; }
	bool   choice(const Rule& r) const { return r.type == RuleType::Choice; }
	void   onSat(uint32_t ri);
	void   onFals(uint32_t ri, int64_t before);
	void   contrapose(uint32_t ri);
	void   backchain(AtomId a);
	void   examine(uint32_t ri);
	bool   unfounded(int32_t scc);
	void   markDirty(uint32_t ri);
	void   undoTo(std::size_t mark);
	bool   resolveConflict();
	// Failed-literal probing; returns false on conflict, otherwise the branching
	// atom (0 if none is unknown).
	bool   lookahead(AtomId& choice);
	std::size_t probe(AtomId a, Truth v, bool& conflict);
	void   buildComponents();
	void   checkFixpoint();
	void   checkCounters();
	void   violation(const std::string& msg);
	std::vector<AtomId> model() const;

	SolverOptions options_;
	SolverStats   stats_;
	ComputeSpec   compute_;
	GroundProgram source_; // kept for model verification only

	std::vector<Rule>                  rules_;
	std::vector<AtomId>                heads_;
	std::vector<Lit>                   body_;
	std::vector<std::vector<Occ>>      occ_;      // per atom: body occurrences
	std::vector<std::vector<uint32_t>> headOcc_;  // per atom: rules with it in the head
	std::vector<Truth>                 value_;
	std::vector<uint32_t>              support_;  // rules with the atom in the head whose body has not failed
	std::vector<AtomId>                trail_;
	std::size_t                        qhead_ = 0;
	std::vector<Decision>              decisions_;
	bool                               conflict_ = false;
	bool                               initialized_ = false;
	bool                               exhausted_   = false;
	bool                               pendingModel_ = false;
	AtomId                             scanFrom_ = kFirstAtom;

	// Positive dependency components with a cycle.
	std::vector<int32_t>               scc_;      // per atom, -1 if trivial
	std::vector<std::vector<AtomId>>   sccAtoms_;
	std::vector<std::vector<uint32_t>> sccRules_;
	std::vector<std::vector<int32_t>>  ruleSccs_; // per rule: components of its heads
	std::vector<uint8_t>               dirty_;
	std::vector<int32_t>               dirtyList_;
	std::vector<uint32_t>              founded_;  // epoch stamps
	std::vector<uint32_t>              ruleMark_;
	std::vector<int64_t>               pot_;
	uint32_t                           epoch_ = 0;

	std::mt19937_64 rng_;
	std::vector<std::size_t> assumeMarks_;
};

} // namespace aspkit
