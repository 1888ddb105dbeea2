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
#include "io.h"

#include <cmath>
#include <set>
#include <utility>

namespace guframe::io {
namespace {

[[noreturn]] void Fail(const std::string& message) {
  throw InvalidArgument(message);
}

const Json& Field(const Json& j, const char* key) { return j.at(key); }

}  // namespace

Json ToJson(Complex z) { return Json::array({z.real(), z.imag()}); }

Json ToJson(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(ToJson(v(i)));
  return out;
}

Json ToJson(const RealVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json ToJson(const ComplexMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    out.push_back(ToJson(ComplexVector(m.col(c))));
  }
  return out;
}

Json ToJson(const GroupSpec& spec) { return Json(spec.factors()); }

Json ToJson(const Frame& frame) {
  return {{"m", frame.dim()},
          {"n", frame.size()},
          {"columns", ToJson(frame.matrix())}};
}

Json ToJson(const GUFrame& frame) {
  Json matrices = Json::array();
  for (const ComplexMatrix& u : frame.rep().matrices()) {
    matrices.push_back(ToJson(u));
  }
  return {{"spec", ToJson(frame.rep().spec())},
          {"matrices", std::move(matrices)},
          {"generator", ToJson(frame.generator())}};
}

Json ToJson(const SpectralReport& report) {
  return {{"s", ToJson(report.s)},
          {"s_hat", ToJson(report.s_hat)},
          {"sigma", ToJson(report.sigma)},
          {"index_set", report.index_set},
          {"bounds", {{"A", report.bounds.lower}, {"B", report.bounds.upper}}},
          {"dual_generator", ToJson(report.dual_generator)},
          {"canonical_generator", ToJson(report.canonical_generator)}};
}

Complex ParseComplex(const Json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    const Complex z(j[0].get<double>(), j[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      Fail(where + ": non-finite value");
    }
    return z;
  }
  Fail(where + ": expected a number or an [re, im] pair");
}

ComplexVector ParseVector(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) Fail(where + ": expected a non-empty list");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) =
        ParseComplex(j[i], where + "[" + std::to_string(i) + "]");
  }
  return v;
}

RealVector ParseRealVector(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) Fail(where + ": expected a non-empty list");
  RealVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) {
      Fail(where + "[" + std::to_string(i) + "]: expected a real number");
    }
    v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  }
  return v;
}

ComplexMatrix ParseMatrix(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    Fail(where + ": expected a non-empty list of columns");
  }
  const ComplexVector first = ParseVector(j[0], where + "[0]");
  ComplexMatrix m(first.size(), static_cast<Eigen::Index>(j.size()));
  m.col(0) = first;
  for (std::size_t c = 1; c < j.size(); ++c) {
    const std::string at = where + "[" + std::to_string(c) + "]";
    const ComplexVector col = ParseVector(j[c], at);
    if (col.size() != first.size()) Fail(at + ": column length differs");
    m.col(static_cast<Eigen::Index>(c)) = col;
  }
  return m;
}

GroupSpec ParseSpec(const Json& j) {
  if (!j.is_array()) Fail("spec: expected a list of integers such as [2, 2]");
  std::vector<int> factors;
  for (const Json& f : j) {
    if (!f.is_number_integer()) Fail("spec: factors must be integers");
    factors.push_back(f.get<int>());
  }
  return GroupSpec(std::move(factors));
}

void RequireKeys(const Json& j, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional,
                 const std::string& what) {
  if (!j.is_object()) Fail(what + ": expected a JSON object");
  std::set<std::string> known;
  for (const char* k : required) {
    if (!j.contains(k)) Fail(what + ": missing key \"" + k + "\"");
    known.insert(k);
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& item : j.items()) {
    if (!known.count(item.key())) {
      Fail(what + ": unknown key \"" + item.key() + "\"");
    }
  }
}

bool IsFrame(const Json& j) { return j.is_object() && j.contains("columns"); }

bool IsGUFrame(const Json& j) {
  return j.is_object() && j.contains("matrices") && j.contains("generator");
}

Frame ParseFrame(const Json& j, Tolerance tol) {
  RequireKeys(j, {"columns"}, {"m", "n"}, "frame");
  ComplexMatrix phi = ParseMatrix(Field(j, "columns"), "columns");
  if (j.contains("m") && j["m"] != phi.rows()) {
    Fail("frame: \"m\" does not match the column length");
  }
  if (j.contains("n") && j["n"] != phi.cols()) {
    Fail("frame: \"n\" does not match the number of columns");
  }
  return Frame(std::move(phi), tol);
}

UnitaryRep ParseRep(const Json& spec, const Json& matrices, Tolerance tol) {
  if (!matrices.is_array()) Fail("matrices: expected a list of matrices");
  std::vector<ComplexMatrix> mats;
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    mats.push_back(
        ParseMatrix(matrices[i], "matrices[" + std::to_string(i) + "]"));
  }
  return UnitaryRep(ParseSpec(spec), std::move(mats), tol);
}

GUFrame ParseGUFrame(const Json& j, Tolerance tol) {
  RequireKeys(j, {"spec", "matrices", "generator"}, {}, "GU frame");
  return GUFrame(ParseRep(Field(j, "spec"), Field(j, "matrices"), tol),
                 ParseVector(Field(j, "generator"), "generator"));
}

CguInput ParseCgu(const Json& j, Tolerance tol) {
  RequireKeys(j, {"spec", "matrices"},
              {"generators", "generator", "gen_spec", "gen_matrices"},
              "CGU frame");
  UnitaryRep rep = ParseRep(Field(j, "spec"), Field(j, "matrices"), tol);
  const bool listed = j.contains("generators");
  const bool seeded = j.contains("generator") || j.contains("gen_spec") ||
                      j.contains("gen_matrices");
  if (listed == seeded) {
    Fail("CGU frame: give either \"generators\" or \"generator\" with "
         "\"gen_spec\" and \"gen_matrices\"");
  }
  CguInput out{std::move(rep), {}, std::nullopt};
  if (listed) {
    const Json& gens = Field(j, "generators");
    if (!gens.is_array() || gens.empty()) {
      Fail("generators: expected a non-empty list of vectors");
    }
    for (std::size_t k = 0; k < gens.size(); ++k) {
      out.generators.push_back(
          ParseVector(gens[k], "generators[" + std::to_string(k) + "]"));
    }
    return out;
  }
  if (!j.contains("generator") || !j.contains("gen_spec") ||
      !j.contains("gen_matrices")) {
    Fail("CGU frame: the seeded form needs \"generator\", \"gen_spec\" and "
         "\"gen_matrices\"");
  }
  GUGenerators gens(ParseRep(Field(j, "gen_spec"), Field(j, "gen_matrices"), tol),
                    ParseVector(Field(j, "generator"), "generator"));
  out.generators = gens.generators();
  out.seeded = std::move(gens);
  return out;
}

}  // namespace guframe::io
