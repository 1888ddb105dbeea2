// Copyright 2026 The guframe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef GUFRAME_TOOLS_IO_H_
#define GUFRAME_TOOLS_IO_H_

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "guframe/cgu.h"
#include "guframe/frame.h"
#include "guframe/gu.h"
#include "guframe/types.h"
#include "json.hpp"

namespace guframe::io {

using Json = nlohmann::json;

// Complex numbers are [re, im] pairs; a bare number is read as real.
Json ToJson(Complex z);
Json ToJson(const ComplexVector& v);
Json ToJson(const RealVector& v);
// Matrices are lists of columns.
Json ToJson(const ComplexMatrix& m);
Json ToJson(const GroupSpec& spec);
Json ToJson(const Frame& frame);
Json ToJson(const GUFrame& frame);
Json ToJson(const SpectralReport& report);

Complex ParseComplex(const Json& j, const std::string& where);
ComplexVector ParseVector(const Json& j, const std::string& where);
RealVector ParseRealVector(const Json& j, const std::string& where);
ComplexMatrix ParseMatrix(const Json& j, const std::string& where);
GroupSpec ParseSpec(const Json& j);

void RequireKeys(const Json& j, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional,
                 const std::string& what);

bool IsFrame(const Json& j);
bool IsGUFrame(const Json& j);

Frame ParseFrame(const Json& j, Tolerance tol);
UnitaryRep ParseRep(const Json& spec, const Json& matrices, Tolerance tol);
GUFrame ParseGUFrame(const Json& j, Tolerance tol);

struct CguInput {
  UnitaryRep rep;
  std::vector<ComplexVector> generators;
  // Present when the generators come from a seed and a second group.
  std::optional<GUGenerators> seeded;
};

CguInput ParseCgu(const Json& j, Tolerance tol);

}  // namespace guframe::io

#endif  // GUFRAME_TOOLS_IO_H_
