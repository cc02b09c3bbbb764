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

#include <aspkit/solver.h>

#include <aspkit/oracle.h>

#include <algorithm>
#include <stdexcept>

namespace aspkit {

Solver::Solver(const GroundProgram& program, SolverOptions options)
	: options_(std::move(options))
	, compute_(program.compute)
	, rng_(options_.perturbationSeed.value_or(0)) {
	if (options_.verifyModels) source_ = program;
	AtomId n = program.maxAtom();
	value_.assign(n + 1, Truth::Unknown);
	occ_.resize(n + 1);
	headOcc_.resize(n + 1);
	support_.assign(n + 1, 0);
	rules_.reserve(program.rules.size());
	for (const auto& pr : program.rules) {
		Rule r{};
		r.type      = pr.type;
		r.headBegin = static_cast<uint32_t>(heads_.size());
		heads_.insert(heads_.end(), pr.heads.begin(), pr.heads.end());
		r.headEnd   = static_cast<uint32_t>(heads_.size());
		r.bodyBegin = static_cast<uint32_t>(body_.size());
		bool weighted = pr.type == RuleType::Weight;
		for (std::size_t i = 0; i != pr.pos.size(); ++i) body_.push_back({pr.pos[i], false, weighted ? pr.posWeights[i] : 1});
		for (std::size_t i = 0; i != pr.neg.size(); ++i) body_.push_back({pr.neg[i], true, weighted ? pr.negWeights[i] : 1});
		r.bodyEnd = static_cast<uint32_t>(body_.size());
		r.total   = 0;
		r.maxW    = 0;
		for (uint32_t i = r.bodyBegin; i != r.bodyEnd; ++i) {
			r.total += body_[i].w;
			r.maxW = std::max(r.maxW, body_[i].w);
		}
		switch (pr.type) {
			case RuleType::Basic:
			case RuleType::Choice: r.bound = static_cast<int64_t>(pr.size()); break;
			default:               r.bound = pr.bound; break;
		}
		auto ri = static_cast<uint32_t>(rules_.size());
		rules_.push_back(r);
		for (uint32_t i = r.bodyBegin; i != r.bodyEnd; ++i) occ_[body_[i].atom].push_back({ri, body_[i].neg, body_[i].w});
		for (uint32_t i = r.headBegin; i != r.headEnd; ++i) headOcc_[heads_[i]].push_back(ri);
	}
	buildComponents();
	founded_.assign(n + 1, 0);
	ruleMark_.assign(rules_.size(), 0);
	pot_.assign(rules_.size(), 0);
}

void Solver::buildComponents() {
	const std::size_t n = value_.size();
	// Positive dependency edges head -> body atom, in CSR form.
	std::vector<uint32_t> start(n + 1, 0);
	for (const auto& r : rules_) {
		uint32_t pos = 0;
		for (uint32_t i = r.bodyBegin; i != r.bodyEnd; ++i) pos += !body_[i].neg;
		for (uint32_t h = r.headBegin; h != r.headEnd; ++h) start[heads_[h] + 1] += pos;
	}
	for (std::size_t i = 0; i != n; ++i) start[i + 1] += start[i];
	std::vector<AtomId>   edges(start[n]);
	std::vector<uint32_t> fill(start.begin(), start.end() - 1);
	for (const auto& r : rules_) {
		for (uint32_t h = r.headBegin; h != r.headEnd; ++h) {
			for (uint32_t i = r.bodyBegin; i != r.bodyEnd; ++i) {
				if (!body_[i].neg) edges[fill[heads_[h]]++] = body_[i].atom;
			}
		}
	}
	// Iterative Tarjan.
	std::vector<int32_t>  index(n, -1), low(n, 0);
	std::vector<uint8_t>  onStack(n, 0);
	std::vector<AtomId>   stack;
	std::vector<std::pair<AtomId, uint32_t>> calls;
	int32_t               counter = 0;
	scc_.assign(n, -1);
	for (AtomId root = 1; root < n; ++root) {
		if (index[root] >= 0) continue;
		calls.emplace_back(root, start[root]);
		index[root] = low[root] = counter++;
		stack.push_back(root);
		onStack[root] = 1;
		while (!calls.empty()) {
			auto& [v, e] = calls.back();
			if (e < start[v + 1]) {
				AtomId w = edges[e++];
				if (index[w] < 0) {
					index[w] = low[w] = counter++;
					stack.push_back(w);
					onStack[w] = 1;
					calls.emplace_back(w, start[w]);
				}
				else if (onStack[w]) {
					low[v] = std::min(low[v], index[w]);
				}
				continue;
			}
			AtomId done = v;
			calls.pop_back();
			if (!calls.empty()) low[calls.back().first] = std::min(low[calls.back().first], low[done]);
			if (low[done] != index[done]) continue;
			std::vector<AtomId> comp;
			AtomId              w = 0;
			do {
				w = stack.back();
				stack.pop_back();
				onStack[w] = 0;
				comp.push_back(w);
			} while (w != done);
			bool cyclic = comp.size() > 1 ||
			              std::find(edges.begin() + start[done], edges.begin() + start[done + 1], done) != edges.begin() + start[done + 1];
			if (!cyclic) continue;
			auto id = static_cast<int32_t>(sccAtoms_.size());
			std::sort(comp.begin(), comp.end());
			for (AtomId a : comp) scc_[a] = id;
			sccAtoms_.push_back(std::move(comp));
		}
	}
	sccRules_.resize(sccAtoms_.size());
	ruleSccs_.resize(rules_.size());
	for (uint32_t ri = 0; ri != rules_.size(); ++ri) {
		const Rule& r = rules_[ri];
		for (uint32_t h = r.headBegin; h != r.headEnd; ++h) {
			int32_t s = scc_[heads_[h]];
			if (s < 0 || std::find(ruleSccs_[ri].begin(), ruleSccs_[ri].end(), s) != ruleSccs_[ri].end()) continue;
			ruleSccs_[ri].push_back(s);
			sccRules_[static_cast<std::size_t>(s)].push_back(ri);
		}
	}
	dirty_.assign(sccAtoms_.size(), 0);
}

Truth Solver::litValue(const Lit& l) const {
	Truth v = value_[l.atom];
	if (v == Truth::Unknown || !l.neg) return v;
	return v == Truth::True ? Truth::False : Truth::True;
}

bool Solver::litFalse(const Lit& l) const { return litValue(l) == Truth::False; }

bool Solver::assign(AtomId a, Truth v) {
	if (conflict_) return false;
	if (value_[a] == v) return true;
	if (value_[a] != Truth::Unknown) {
		conflict_ = true;
		return false;
	}
	value_[a] = v;
	trail_.push_back(a);
	++stats_.propagations;
	return true;
}

void Solver::markDirty(uint32_t ri) {
	for (int32_t s : ruleSccs_[ri]) {
		if (!dirty_[static_cast<std::size_t>(s)]) {
			dirty_[static_cast<std::size_t>(s)] = 1;
			dirtyList_.push_back(s);
		}
	}
}

void Solver::onSat(uint32_t ri) {
	const Rule& r = rules_[ri];
	if (choice(r)) return;
	AtomId h = heads_[r.headBegin];
	if (holds(r)) assign(h, Truth::True);
	else if (value_[h] == Truth::False) contrapose(ri);
}

void Solver::onFals(uint32_t ri, int64_t before) {
	const Rule& r = rules_[ri];
	markDirty(ri);
	bool crossed = before >= r.bound && failed(r);
	for (uint32_t i = r.headBegin; i != r.headEnd; ++i) {
		AtomId h = heads_[i];
		if (crossed) --support_[h];
		if (conflict_ || value_[h] == Truth::False) continue;
		if (crossed && support_[h] == 0) assign(h, Truth::False);
		else if (value_[h] == Truth::True && support_[h] == 1) backchain(h);
	}
}

void Solver::contrapose(uint32_t ri) {
	const Rule& r = rules_[ri];
	if (failed(r)) return;
	if (holds(r)) {
		conflict_ = true;
		return;
	}
	if (r.sat + r.maxW < r.bound) return;
	for (uint32_t i = r.bodyBegin; i != r.bodyEnd && !conflict_; ++i) {
		const Lit& l = body_[i];
		if (value_[l.atom] == Truth::Unknown && r.sat + l.w >= r.bound) assign(l.atom, l.neg ? Truth::True : Truth::False);
	}
}

void Solver::backchain(AtomId a) {
	for (uint32_t ri : headOcc_[a]) {
		const Rule& r = rules_[ri];
		if (failed(r)) continue;
		int64_t slack = r.total - r.fals - r.bound;
		if (slack >= r.maxW) return;
		for (uint32_t i = r.bodyBegin; i != r.bodyEnd && !conflict_; ++i) {
			const Lit& l = body_[i];
			if (value_[l.atom] == Truth::Unknown && slack < l.w) assign(l.atom, l.neg ? Truth::False : Truth::True);
		}
		return;
	}
}

void Solver::examine(uint32_t ri) {
	const Rule& r = rules_[ri];
	if (!choice(r)) {
		AtomId h = heads_[r.headBegin];
		if (holds(r)) assign(h, Truth::True);
		else if (value_[h] == Truth::False) contrapose(ri);
	}
	for (uint32_t i = r.headBegin; i != r.headEnd && !conflict_; ++i) {
		AtomId h = heads_[i];
		if (support_[h] == 0) assign(h, Truth::False);
		else if (support_[h] == 1 && value_[h] == Truth::True) backchain(h);
	}
}

// Falsifies the atoms of component `scope` (all atoms if negative) that cannot
// be derived without relying on themselves.
bool Solver::unfounded(int32_t scope) {
	++stats_.atmostChecks;
	if (++epoch_ == 0) {
		std::fill(founded_.begin(), founded_.end(), 0);
		std::fill(ruleMark_.begin(), ruleMark_.end(), 0);
		epoch_ = 1;
	}
	auto inScope = [&](AtomId a) { return scope < 0 || scc_[a] == scope; };
	std::vector<AtomId> work;
	auto                found = [&](uint32_t ri) {
        const Rule& r = rules_[ri];
        for (uint32_t i = r.headBegin; i != r.headEnd; ++i) {
            AtomId h = heads_[i];
            if (inScope(h) && value_[h] != Truth::False && founded_[h] != epoch_) {
                founded_[h] = epoch_;
                work.push_back(h);
            }
        }
	};
	auto seed = [&](uint32_t ri) {
		const Rule& r = rules_[ri];
		if (failed(r)) return;
		ruleMark_[ri] = epoch_;
		int64_t p     = 0;
		for (uint32_t i = r.bodyBegin; i != r.bodyEnd; ++i) {
			const Lit& l = body_[i];
			if (litFalse(l) || (!l.neg && inScope(l.atom))) continue;
			p += l.w;
		}
		pot_[ri] = p;
		if (p >= r.bound) found(ri);
	};
	if (scope < 0) {
		for (uint32_t ri = 0; ri != rules_.size(); ++ri) seed(ri);
	}
	else {
		for (uint32_t ri : sccRules_[static_cast<std::size_t>(scope)]) seed(ri);
	}
	while (!work.empty()) {
		AtomId a = work.back();
		work.pop_back();
		for (const Occ& o : occ_[a]) {
			if (o.neg || ruleMark_[o.rule] != epoch_) continue;
			int64_t& p = pot_[o.rule];
			p += o.w;
			if (p >= rules_[o.rule].bound && p - o.w < rules_[o.rule].bound) found(o.rule);
		}
	}
	auto falsify = [&](AtomId a) {
		if (a != kFalseAtom && founded_[a] != epoch_ && value_[a] != Truth::False) assign(a, Truth::False);
	};
	if (scope < 0) {
		for (AtomId a = kFirstAtom; a < value_.size() && !conflict_; ++a) falsify(a);
	}
	else {
		for (AtomId a : sccAtoms_[static_cast<std::size_t>(scope)]) {
			if (conflict_) break;
			falsify(a);
		}
	}
	return !conflict_;
}

bool Solver::expand() {
	if (conflict_) return false;
	for (;;) {
		while (qhead_ < trail_.size()) {
			AtomId a = trail_[qhead_++];
			Truth  v = value_[a];
			for (const Occ& o : occ_[a]) {
				Rule& r = rules_[o.rule];
				if ((v == Truth::True) != o.neg) {
					r.sat += o.w;
					if (!conflict_) onSat(o.rule);
				}
				else {
					int64_t before = r.total - r.fals;
					r.fals += o.w;
					onFals(o.rule, before);
				}
			}
			if (conflict_) return false;
			if (v == Truth::True) {
				if (support_[a] == 0) conflict_ = true;
				else if (support_[a] == 1) backchain(a);
			}
			else {
				for (uint32_t ri : headOcc_[a]) {
					if (conflict_) break;
					if (!choice(rules_[ri])) contrapose(ri);
				}
			}
			if (conflict_) return false;
		}
		if (options_.fullAtmost) {
			for (int32_t s : dirtyList_) dirty_[static_cast<std::size_t>(s)] = 0;
			dirtyList_.clear();
			std::size_t before = trail_.size();
			if (!unfounded(-1)) return false;
			if (trail_.size() == before) return true;
			continue;
		}
		if (dirtyList_.empty()) return true;
		int32_t s = dirtyList_.back();
		dirtyList_.pop_back();
		dirty_[static_cast<std::size_t>(s)] = 0;
		if (!unfounded(s)) return false;
	}
}

void Solver::undoTo(std::size_t mark) {
	for (std::size_t i = trail_.size(); i-- > mark;) {
		AtomId a = trail_[i];
		if (i < qhead_) {
			Truth v = value_[a];
			for (const Occ& o : occ_[a]) {
				Rule& r = rules_[o.rule];
				if ((v == Truth::True) != o.neg) {
					r.sat -= o.w;
					continue;
				}
				bool wasFailed = failed(r);
				r.fals -= o.w;
				if (wasFailed && !failed(r)) {
					for (uint32_t h = r.headBegin; h != r.headEnd; ++h) ++support_[heads_[h]];
				}
			}
		}
		value_[a] = Truth::Unknown;
		scanFrom_ = std::min(scanFrom_, a);
	}
	trail_.resize(mark);
	qhead_    = std::min(qhead_, mark);
	conflict_ = false;
	for (int32_t s : dirtyList_) dirty_[static_cast<std::size_t>(s)] = 0;
	dirtyList_.clear();
}

bool Solver::initialize() {
	initialized_ = true;
	for (const auto& r : rules_) {
		if (failed(r)) continue;
		for (uint32_t h = r.headBegin; h != r.headEnd; ++h) ++support_[heads_[h]];
	}
	assign(kFalseAtom, Truth::False);
	for (AtomId a : compute_.requiredTrue) {
		if (a < value_.size()) assign(a, Truth::True);
	}
	for (AtomId a : compute_.requiredFalse) {
		if (a < value_.size()) assign(a, Truth::False);
	}
	for (AtomId a = kFirstAtom; a < value_.size(); ++a) {
		if (support_[a] == 0) assign(a, Truth::False);
	}
	for (uint32_t ri = 0; ri != rules_.size() && !conflict_; ++ri) examine(ri);
	for (std::size_t s = 0; s != sccAtoms_.size(); ++s) {
		dirty_[s] = 1;
		dirtyList_.push_back(static_cast<int32_t>(s));
	}
	if (!expand()) return false;
	if (options_.checkInvariants) {
		checkFixpoint();
		checkCounters();
	}
	return true;
}

std::size_t Solver::probe(AtomId a, Truth v, bool& conflict) {
	++stats_.probes;
	std::size_t mark = trail_.size();
	assign(a, v);
	conflict      = !expand();
	std::size_t n = trail_.size() - mark;
	undoTo(mark);
	return n;
}

bool Solver::lookahead(AtomId& pick) {
	std::vector<AtomId> candidates;
	for (;;) {
		pick = 0;
		while (scanFrom_ < value_.size() && value_[scanFrom_] != Truth::Unknown) ++scanFrom_;
		std::size_t unknown = value_.size() - 1 - trail_.size();
		if (unknown == 0) return true;
		std::size_t limit = unknown <= options_.lookaheadThreshold ? unknown : options_.lookaheadSample;
		candidates.clear();
		for (AtomId a = scanFrom_; a < value_.size() && candidates.size() < limit; ++a) {
			if (value_[a] == Truth::Unknown) candidates.push_back(a);
		}
		bool        forced    = false;
		std::size_t bestScore = 0;
		for (AtomId a : candidates) {
			if (value_[a] != Truth::Unknown) continue;
			bool        c1 = false, c2 = false;
			std::size_t s1 = probe(a, Truth::True, c1);
			std::size_t s2 = probe(a, Truth::False, c2);
			if (c1 && c2) {
				conflict_ = true;
				return false;
			}
			if (c1 || c2) {
				++stats_.failedLiterals;
				assign(a, c1 ? Truth::False : Truth::True);
				if (!expand()) return false;
				forced = true;
				continue;
			}
			if (pick == 0 || s1 + s2 > bestScore) {
				pick      = a;
				bestScore = s1 + s2;
			}
		}
		if (forced) continue;
		if (options_.perturbationSeed) {
			std::vector<AtomId> open;
			for (AtomId a : candidates) {
				if (value_[a] == Truth::Unknown) open.push_back(a);
			}
			if (!open.empty()) pick = open[rng_() % open.size()];
		}
		return true;
	}
}

bool Solver::resolveConflict() {
	while (!decisions_.empty()) {
		Decision& d = decisions_.back();
		undoTo(d.trailMark);
		if (options_.checkInvariants) {
			++stats_.invariantChecks;
			if (d.snapshot != value_) violation("assignment after backtracking differs from the assignment before branching");
		}
		if (!d.flipped) {
			d.flipped = true;
			d.value   = d.value == Truth::True ? Truth::False : Truth::True;
			assign(d.atom, d.value);
			return true;
		}
		decisions_.pop_back();
	}
	exhausted_ = true;
	return false;
}

std::vector<AtomId> Solver::model() const {
	std::vector<AtomId> m;
	for (AtomId a = kFirstAtom; a < value_.size(); ++a) {
		if (value_[a] == Truth::True) m.push_back(a);
	}
	return m;
}

std::optional<std::vector<AtomId>> Solver::next() {
	if (exhausted_) return std::nullopt;
	if (!initialized_) {
		if (!initialize() && !resolveConflict()) return std::nullopt;
	}
	else if (pendingModel_) {
		pendingModel_ = false;
		if (!resolveConflict()) return std::nullopt;
	}
	for (;;) {
		if (!expand()) {
			++stats_.conflicts;
			if (!resolveConflict()) return std::nullopt;
			continue;
		}
		if (options_.checkInvariants) {
			checkFixpoint();
			checkCounters();
		}
		AtomId pick = 0;
		if (!lookahead(pick)) {
			++stats_.conflicts;
			if (!resolveConflict()) return std::nullopt;
			continue;
		}
		if (pick == 0) {
			auto m = model();
			if (options_.verifyModels && !isStable(source_, AtomSet(m.begin(), m.end()))) {
				throw std::logic_error("solver produced an assignment that is not a stable model");
			}
			pendingModel_ = true;
			++stats_.models;
			return m;
		}
		Truth v = Truth::True;
		if (options_.perturbationSeed && (rng_() & 1)) v = Truth::False;
		Decision d{pick, v, false, trail_.size(), {}};
		if (options_.checkInvariants) d.snapshot = value_;
		decisions_.push_back(std::move(d));
		++stats_.decisions;
		stats_.maxDepth = std::max<uint64_t>(stats_.maxDepth, decisions_.size());
		assign(pick, v);
	}
}

std::vector<std::vector<AtomId>> Solver::solve(int64_t count) {
	std::vector<std::vector<AtomId>> out;
	while (count <= 0 || static_cast<int64_t>(out.size()) < count) {
		auto m = next();
		if (!m) break;
		out.push_back(std::move(*m));
	}
	return out;
}

bool Solver::assume(AtomId a, Truth v) {
	if (!initialized_ && !initialize()) return false;
	assumeMarks_.push_back(trail_.size());
	assign(a, v);
	return expand();
}

void Solver::backtrack() {
	if (assumeMarks_.empty()) return;
	undoTo(assumeMarks_.back());
	assumeMarks_.pop_back();
}

void Solver::violation(const std::string& msg) {
	++stats_.invariantViolations;
	if (stats_.violations.size() < 8) stats_.violations.push_back(msg);
}

// Re-examines every rule and all unfounded sets from scratch; at a fixpoint of
// expand() nothing may change.
void Solver::checkFixpoint() {
	++stats_.invariantChecks;
	std::size_t mark = trail_.size();
	for (AtomId a = kFirstAtom; a < value_.size() && !conflict_; ++a) {
		if (support_[a] == 0) assign(a, Truth::False);
	}
	for (uint32_t ri = 0; ri != rules_.size() && !conflict_; ++ri) examine(ri);
	if (!conflict_) unfounded(-1);
	if (conflict_ || trail_.size() != mark) violation("expand is not idempotent");
	undoTo(mark);
}

void Solver::checkCounters() {
	++stats_.invariantChecks;
	std::vector<uint32_t> support(value_.size(), 0);
	for (const auto& r : rules_) {
		int64_t sat = 0, fals = 0;
		for (uint32_t i = r.bodyBegin; i != r.bodyEnd; ++i) {
			Truth v = litValue(body_[i]);
			if (v == Truth::True) sat += body_[i].w;
			if (v == Truth::False) fals += body_[i].w;
		}
		if (sat != r.sat || fals != r.fals) {
			violation("rule counters disagree with the assignment");
			return;
		}
		if (r.total - fals >= r.bound) {
			for (uint32_t h = r.headBegin; h != r.headEnd; ++h) ++support[heads_[h]];
		}
	}
	if (support != support_) violation("support counts disagree with the assignment");
}

} // namespace aspkit
