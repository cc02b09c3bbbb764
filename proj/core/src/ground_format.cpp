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

#include <aspkit/ground_format.h>

#include <aspkit/error.h>

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace aspkit {

namespace {
void writeIds(std::ostream& os, const std::vector<AtomId>& ids) {
	for (AtomId a : ids) os << ' ' << a;
}
void writeWeights(std::ostream& os, const std::vector<int64_t>& ws) {
	for (int64_t w : ws) os << ' ' << w;
}
} // namespace

void emitGroundFormat(std::ostream& os, const GroundProgram& program) {
	for (const auto& r : program.rules) {
		os << static_cast<int>(r.type);
		switch (r.type) {
			case RuleType::Basic:      os << ' ' << r.head() << ' ' << r.size() << ' ' << r.neg.size(); break;
			case RuleType::Constraint: os << ' ' << r.head() << ' ' << r.size() << ' ' << r.neg.size() << ' ' << r.bound; break;
			case RuleType::Choice:
				os << ' ' << r.heads.size();
				writeIds(os, r.heads);
				os << ' ' << r.size() << ' ' << r.neg.size();
				break;
			case RuleType::Weight: os << ' ' << r.head() << ' ' << r.bound << ' ' << r.size() << ' ' << r.neg.size(); break;
		}
		writeIds(os, r.neg);
		writeIds(os, r.pos);
		if (r.type == RuleType::Weight) {
			writeWeights(os, r.negWeights);
			writeWeights(os, r.posWeights);
		}
		os << '\n';
	}
	os << "0\n";
	for (AtomId id : program.symbols.ids()) os << id << ' ' << program.symbols.name(id) << '\n';
	os << "0\nB+\n";
	for (AtomId a : program.compute.requiredTrue) os << a << '\n';
	os << "0\nB-\n" << kFalseAtom << '\n';
	for (AtomId a : program.compute.requiredFalse) {
		if (a != kFalseAtom) os << a << '\n';
	}
	os << "0\n" << program.compute.modelCount << '\n';
}

std::string emitGroundFormat(const GroundProgram& program) {
	std::ostringstream os;
	emitGroundFormat(os, program);
	return os.str();
}

namespace {

class Reader {
public:
	explicit Reader(std::istream& is)
		: is_(is) {}

	// Next line; throws on end of input.
	const std::string& line(const char* what) {
		if (!std::getline(is_, line_)) throw FormatError(lineNo_ + 1, std::string("unexpected end of input, expected ") + what);
		++lineNo_;
		if (!line_.empty() && line_.back() == '\r') line_.pop_back();
		fields_.clear();
		next_ = 0;
		std::size_t i = 0;
		while (i < line_.size()) {
			while (i < line_.size() && line_[i] == ' ') ++i;
			std::size_t start = i;
			while (i < line_.size() && line_[i] != ' ') ++i;
			if (i > start) fields_.emplace_back(line_.data() + start, i - start);
		}
		return line_;
	}

	std::size_t lineNo() const { return lineNo_; }
	bool        done() const { return next_ == fields_.size(); }
	std::size_t remaining() const { return fields_.size() - next_; }

	int64_t integer(const char* what) {
		if (done()) fail(std::string("missing ") + what);
		std::string_view f = fields_[next_++];
		int64_t          v = 0;
		auto [p, ec]       = std::from_chars(f.data(), f.data() + f.size(), v);
		if (ec != std::errc() || p != f.data() + f.size()) fail("invalid " + std::string(what) + " '" + std::string(f) + "'");
		return v;
	}
	int64_t nonNegative(const char* what) {
		int64_t v = integer(what);
		if (v < 0) fail(std::string(what) + " must be non-negative");
		return v;
	}
	AtomId atom() {
		int64_t v = integer("atom id");
		if (v < 1 || v > int64_t(UINT32_MAX)) fail("atom id out of range");
		return static_cast<AtomId>(v);
	}
	std::vector<AtomId> atoms(int64_t n) {
		if (static_cast<std::size_t>(n) > remaining()) fail("too few atom ids");
		std::vector<AtomId> out;
		out.reserve(static_cast<std::size_t>(n));
		for (int64_t i = 0; i != n; ++i) out.push_back(atom());
		return out;
	}
	std::vector<int64_t> weights(std::size_t n) {
		if (n > remaining()) fail("too few weights");
		std::vector<int64_t> out;
		out.reserve(n);
		for (std::size_t i = 0; i != n; ++i) out.push_back(nonNegative("weight"));
		return out;
	}
	void end() {
		if (!done()) fail("trailing fields");
	}
	[[noreturn]] void fail(const std::string& reason) const { throw FormatError(lineNo_, reason); }

private:
	std::istream&                 is_;
	std::string                   line_;
	std::vector<std::string_view> fields_;
	std::size_t                   next_   = 0;
	std::size_t                   lineNo_ = 0;
};

PrimitiveRule readRule(Reader& in, int64_t type) {
	PrimitiveRule r;
	int64_t       lits = 0, neg = 0;
	switch (type) {
		case 1:
			r.heads = {in.atom()};
			lits    = in.nonNegative("literal count");
			neg     = in.nonNegative("negative literal count");
			break;
		case 2:
			r.type  = RuleType::Constraint;
			r.heads = {in.atom()};
			lits    = in.nonNegative("literal count");
			neg     = in.nonNegative("negative literal count");
			r.bound = in.nonNegative("bound");
			break;
		case 3: {
			r.type  = RuleType::Choice;
			r.heads = in.atoms(in.nonNegative("head count"));
			lits    = in.nonNegative("literal count");
			neg     = in.nonNegative("negative literal count");
			break;
		}
		case 5:
			r.type  = RuleType::Weight;
			r.heads = {in.atom()};
			r.bound = in.nonNegative("bound");
			lits    = in.nonNegative("literal count");
			neg     = in.nonNegative("negative literal count");
			break;
		default: throw UnknownRuleType(in.lineNo(), type);
	}
	if (neg > lits) in.fail("negative literal count exceeds literal count");
	r.neg = in.atoms(neg);
	r.pos = in.atoms(lits - neg);
	if (r.type == RuleType::Weight) {
		r.negWeights = in.weights(r.neg.size());
		r.posWeights = in.weights(r.pos.size());
	}
	in.end();
	return r;
}

} // namespace

GroundProgram parseGroundFormat(std::istream& is) {
	GroundProgram p;
	Reader        in(is);
	for (;;) {
		in.line("rule or 0");
		int64_t type = in.integer("rule type");
		if (type == 0) {
			in.end();
			break;
		}
		p.rules.push_back(readRule(in, type));
	}
	for (;;) {
		const std::string& l = in.line("symbol or 0");
		if (l == "0") break;
		std::size_t sp = l.find(' ');
		if (sp == std::string::npos) in.fail("symbol line needs an id and a name");
		int64_t id = 0;
		auto [ptr, ec] = std::from_chars(l.data(), l.data() + sp, id);
		if (ec != std::errc() || ptr != l.data() + sp || id < kFirstAtom || id > int64_t(UINT32_MAX)) in.fail("invalid symbol id");
		std::string_view name(l.data() + sp + 1, l.size() - sp - 1);
		if (name.empty() || name.find(' ') != std::string_view::npos) in.fail("invalid symbol name");
		if (!p.symbols.assign(static_cast<AtomId>(id), name)) in.fail("duplicate symbol id or name");
	}
	auto block = [&](const char* header, std::vector<AtomId>& out) {
		if (in.line(header) != header) in.fail(std::string("expected ") + header);
		for (;;) {
			in.line("atom id or 0");
			AtomId a = 0;
			if (in.remaining() == 1) {
				int64_t v = in.integer("atom id");
				if (v == 0) break;
				if (v < 1 || v > int64_t(UINT32_MAX)) in.fail("atom id out of range");
				a = static_cast<AtomId>(v);
			}
			else {
				in.fail("expected one atom id");
			}
			out.push_back(a);
		}
	};
	block("B+", p.compute.requiredTrue);
	std::vector<AtomId> falseIds;
	block("B-", falseIds);
	for (AtomId a : falseIds) {
		if (a != kFalseAtom) p.compute.requiredFalse.push_back(a);
	}
	in.line("model count");
	p.compute.modelCount = in.nonNegative("model count");
	in.end();
	std::string rest;
	while (std::getline(is, rest)) {
		if (rest.find_first_not_of(" \r\t") != std::string::npos) throw FormatError(in.lineNo() + 1, "content after model count");
	}
	return p;
}

GroundProgram parseGroundFormat(std::string_view text) {
	std::istringstream is{std::string(text)};
	return parseGroundFormat(is);
}

} // namespace aspkit
