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

#include <iosfwd>
#include <string>
#include <string_view>

namespace aspkit {

// Line-oriented numeric interchange format:
//
//   rules          one per line, `0` terminates
//   symbols        `id name` per visible atom, `0` terminates
//   B+             ids required true, `0` terminates
//   B-             ids required false (always 1), `0` terminates
//   model count    0 = all
//
// Rule lines:
//   1 head #lits #neg neg... pos...
//   2 head #lits #neg bound neg... pos...
//   3 #heads heads... #lits #neg neg... pos...
//   5 head bound #lits #neg neg... pos... negweights... posweights...
void        emitGroundFormat(std::ostream& os, const GroundProgram& program);
std::string emitGroundFormat(const GroundProgram& program);

// Inverse of emitGroundFormat(). Throws FormatError / UnknownRuleType.
GroundProgram parseGroundFormat(std::istream& is);
GroundProgram parseGroundFormat(std::string_view text);

} // namespace aspkit
