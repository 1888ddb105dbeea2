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
#include "cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "guframe/cgu.h"
#include "guframe/distance.h"
#include "guframe/frame.h"
#include "guframe/gu.h"
#include "guframe/lsguf.h"
#include "guframe/pruning.h"
#include "io.h"

namespace guframe::cli {
namespace {

using io::Json;

struct Options {
  double tolerance = Tolerance{}.abs;
  std::string input = "-";
  std::string output;
  std::string spec;

  int remove = -1;
  std::string coset;
  int shift = 0;

  std::string mode = "sc";
  std::string target_a;
  double beta0 = 1.0;
  std::string sigma;

  int fpf_n = 0;
  std::string u;
  std::string generator;
  int search_n = 0;
  int search_m = 0;
};

Json ErrorObject(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

Json ParseText(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(what + " is not valid JSON: " + e.what());
  }
}

Json ReadInput(const std::string& path, std::istream& in) {
  if (path == "-") {
    try {
      return Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw InvalidArgument(std::string("input is not valid JSON: ") +
                            e.what());
    }
  }
  std::ifstream file(path);
  if (!file) throw InvalidArgument("cannot open input file " + path);
  try {
    return Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(path + " is not valid JSON: " + e.what());
  }
}

// Non-finite doubles have no JSON form; they are written as null.
Json Number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

Json BoundsJson(const FrameBounds& b) {
  return {{"A", b.lower}, {"B", b.upper}};
}

std::optional<GroupSpec> SpecOption(const Options& opt) {
  if (opt.spec.empty()) return std::nullopt;
  return io::ParseSpec(ParseText(opt.spec, "--spec"));
}

GroupSpec RequireSpec(const Options& opt, const std::string& command) {
  std::optional<GroupSpec> spec = SpecOption(opt);
  if (!spec) throw InvalidArgument(command + " needs --spec");
  return *spec;
}

GUFrame ReadGUFrame(const Json& j, const Options& opt, Tolerance tol) {
  if (io::IsGUFrame(j)) {
    if (!opt.spec.empty()) {
      throw InvalidArgument("--spec applies only to plain frame input");
    }
    return io::ParseGUFrame(j, tol);
  }
  if (io::IsFrame(j)) {
    std::optional<GroupSpec> spec = SpecOption(opt);
    if (!spec) {
      throw InvalidArgument(
          "plain frame input needs --spec to identify the group ordering");
    }
    return gu_from_frame(io::ParseFrame(j, tol), *spec);
  }
  throw InvalidArgument(
      "input is neither a GU frame (spec, matrices, generator) nor a frame "
      "(columns)");
}

Json Analyze(const Json& j, const Options& opt, Tolerance tol) {
  const GUFrame g = ReadGUFrame(j, opt, tol);
  const SpectralReport report = gu_spectral(g);
  Json out = io::ToJson(report);
  out["average"] = static_cast<double>(g.size()) / g.dim() *
                   g.generator().squaredNorm();
  out["tight"] = std::abs(report.bounds.upper - report.bounds.lower) <=
                 tol.abs * std::max(1.0, report.bounds.upper);
  return out;
}

Json DualOrCanonical(const Json& j, const Options& opt, Tolerance tol,
                     bool canonical) {
  if (io::IsGUFrame(j) || !opt.spec.empty()) {
    const GUFrame g = ReadGUFrame(j, opt, tol);
    return io::ToJson(canonical ? gu_canonical(g) : gu_dual(g));
  }
  const Frame f = io::ParseFrame(j, tol);
  return io::ToJson(canonical ? canonical_tight(f) : dual_frame(f));
}

Json Synthesize(const Json& j, Tolerance tol) {
  return io::ToJson(synthesize(io::ParseGUFrame(j, tol)));
}

Json Prune(const Json& j, const Options& opt, Tolerance tol) {
  const GUFrame g = ReadGUFrame(j, opt, tol);
  if (opt.remove >= 0 && !opt.coset.empty()) {
    throw InvalidArgument("--remove and --coset are mutually exclusive");
  }
  if (opt.remove >= 0) {
    return {{"removed", {opt.remove}},
            {"spectrum", io::ToJson(prune_one_spectrum(g, opt.remove))}};
  }
  if (!opt.coset.empty()) {
    const Json set = ParseText(opt.coset, "--coset");
    if (!set.is_array()) throw InvalidArgument("--coset must be a list");
    std::vector<int> indices;
    for (const Json& v : set) {
      if (!v.is_number_integer()) {
        throw InvalidArgument("--coset entries must be integers");
      }
      indices.push_back(v.get<int>());
    }
    const CosetSpectrum r = prune_coset_spectrum(g, indices, opt.shift);
    return {{"removed", r.removed},
            {"spectrum", io::ToJson(r.spectrum)},
            {"is_frame", r.is_frame}};
  }
  const PruneReport r = prune_invariance_check(g);
  return {{"spectrum", io::ToJson(r.spectrum)},
          {"deviation", r.deviation},
          {"is_frame", r.is_frame},
          {"frame_bound_ratio", Number(r.frame_bound_ratio)}};
}

Json Construct(const Json& j, const Options& opt, Tolerance tol) {
  const GroupSpec spec = RequireSpec(opt, "construct");
  const Frame input = io::IsGUFrame(j) ? synthesize(io::ParseGUFrame(j, tol))
                                       : io::ParseFrame(j, tol);
  Json out;
  std::optional<Frame> result;
  if (opt.mode == "naive") {
    std::optional<RealVector> sigma;
    if (!opt.sigma.empty()) {
      sigma = io::ParseRealVector(ParseText(opt.sigma, "--sigma"), "--sigma");
    }
    result = naive_gu_projection(input, spec, sigma);
    out["beta"] = nullptr;
  } else {
    if (opt.target_a.empty()) {
      throw InvalidArgument("construct --mode " + opt.mode +
                            " needs --target-a");
    }
    const TargetGram target = build_target_gram(
        io::ParseVector(ParseText(opt.target_a, "--target-a"), "--target-a"),
        spec, tol);
    if (opt.mode == "sc") {
      result = sc_lsguf(input, target, opt.beta0);
      out["beta"] = opt.beta0;
    } else {
      ScaledFit fit = c_lsguf(input, target);
      out["beta"] = fit.beta;
      result = std::move(fit.frame);
    }
  }
  out["frame"] = io::ToJson(*result);
  out["E"] = ls_error(input, *result);
  out["bounds"] = BoundsJson(frame_bounds(*result));
  return out;
}

std::vector<int> ParseIntList(const std::string& text, const std::string& what) {
  const Json j = ParseText(text, what);
  if (!j.is_array() || j.empty()) {
    throw InvalidArgument(what + " must be a non-empty list of integers");
  }
  std::vector<int> out;
  for (const Json& v : j) {
    if (!v.is_number_integer()) {
      throw InvalidArgument(what + " entries must be integers");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

Json DistanceReport(const GUFrame& g) {
  const DistanceProfile p = distance_profile(g);
  const FixedPointFree fpf = is_fixed_point_free(g.rep());
  double d_min = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 1; i < p.d.size(); ++i) d_min = std::min(d_min, p.d(i));
  Json out = {{"d", io::ToJson(p.d)},
              {"d_min", Number(d_min)},
              {"fixed_point_free", fpf.fixed_point_free},
              {"normalized", p.normalized}};
  if (fpf.witness) out["witness"] = *fpf.witness;
  return out;
}

Json Distance(const Options& opt, std::istream& in, Tolerance tol) {
  const int modes = (opt.fpf_n > 0) + (opt.search_n > 0);
  if (modes > 1) {
    throw InvalidArgument("--fpf-n and --search-n are mutually exclusive");
  }
  if (opt.search_n > 0) {
    if (opt.search_m < 1) throw InvalidArgument("--search-n needs --search-m");
    const DistanceSearch best = min_distance_search(opt.search_n, opt.search_m);
    const ComplexVector phi = ComplexVector::Constant(
        opt.search_m, 1.0 / std::sqrt(static_cast<double>(opt.search_m)));
    const UnitaryRep rep = cyclic_fpf_rep(opt.search_n, best.u);
    const FixedPointFree fpf = is_fixed_point_free(rep);
    RealVector d(opt.search_n);
    for (int i = 0; i < opt.search_n; ++i) {
      d(i) = (phi - rep[i] * phi).squaredNorm();
    }
    return {{"u", best.u},
            {"d", io::ToJson(d)},
            {"d_min", best.d_min},
            {"fixed_point_free", fpf.fixed_point_free}};
  }
  if (opt.fpf_n > 0) {
    if (opt.u.empty()) throw InvalidArgument("--fpf-n needs --u");
    const std::vector<int> u = ParseIntList(opt.u, "--u");
    const int m = static_cast<int>(u.size());
    const ComplexVector phi =
        opt.generator.empty()
            ? ComplexVector(ComplexVector::Constant(
                  m, 1.0 / std::sqrt(static_cast<double>(m))))
            : io::ParseVector(ParseText(opt.generator, "--generator"),
                              "--generator");
    UnitaryRep rep = cyclic_fpf_rep(opt.fpf_n, u);
    Json out = DistanceReport(
        GUFrame(UnitaryRep(rep.spec(), rep.matrices(), tol), phi));
    out["u"] = u;
    return out;
  }
  return DistanceReport(ReadGUFrame(ReadInput(opt.input, in), opt, tol));
}

Json CheckGu(const Json& j, const Options& opt, Tolerance tol) {
  ComplexMatrix gram;
  if (j.is_object() && j.contains("gram")) {
    io::RequireKeys(j, {"gram"}, {}, "Gram input");
    gram = io::ParseMatrix(j.at("gram"), "gram");
  } else if (io::IsGUFrame(j)) {
    gram = gram_matrix(synthesize(io::ParseGUFrame(j, tol)).matrix());
  } else {
    gram = gram_matrix(io::ParseFrame(j, tol).matrix());
  }
  const PermutedGram perm = is_permuted_gram(gram, tol.abs);
  Json out = {{"permuted", perm.permuted}, {"symmetric", perm.symmetric}};
  if (!perm.permuted) {
    out["failing_row"] = perm.failing_row;
    out["failing_column"] = perm.failing_column;
  }
  if (std::optional<GroupSpec> spec = SpecOption(opt)) {
    const FtDiagonalization d = ft_diagonalizes(gram, *spec, tol.abs);
    out["gu"] = d.diagonal;
    out["ft_diagonal"] = d.diagonal;
    out["max_off_diagonal"] = d.max_off_diagonal;
    out["diagonal"] = io::ToJson(d.diagonal_values);
  } else {
    out["gu"] = perm.gu();
  }
  return out;
}

Json Cgu(const Json& j, Tolerance tol) {
  const io::CguInput input = io::ParseCgu(j, tol);
  const CGUFrame frame(input.rep, input.generators);
  const BoundsEnvelope env = bounds_envelope(frame);
  Json dual = Json::array();
  for (const ComplexVector& v : cgu_dual_generators(frame)) {
    dual.push_back(io::ToJson(v));
  }
  Json canonical = Json::array();
  for (const ComplexVector& v : cgu_canonical_generators(frame)) {
    canonical.push_back(io::ToJson(v));
  }
  Json out = {{"frame", io::ToJson(cgu_synthesize(frame))},
              {"dual_generators", std::move(dual)},
              {"canonical_generators", std::move(canonical)},
              {"bounds",
               {{"A", env.lower}, {"average", env.average}, {"B", env.upper}}}};
  if (input.seeded) {
    const CommutationPhases phases =
        commutation_phases(input.rep, input.seeded->gen_rep());
    Json rows = Json::array();
    for (Eigen::Index p = 0; p < phases.phases.rows(); ++p) {
      Json row = Json::array();
      for (Eigen::Index t = 0; t < phases.phases.cols(); ++t) {
        row.push_back(phases.phases(p, t));
      }
      rows.push_back(std::move(row));
    }
    out["commutation"] = {{"scalar", phases.scalar},
                          {"phases", std::move(rows)}};
    if (phases.scalar) {
      const SeedGenerators seeds = cgu_fast_generators(input.rep, *input.seeded);
      out["dual_seed"] = io::ToJson(seeds.dual);
      out["canonical_seed"] = io::ToJson(seeds.canonical);
    }
  }
  return out;
}

void Emit(const Json& result, const Options& opt, std::ostream& out) {
  if (opt.output.empty() || opt.output == "-") {
    out << result.dump(2) << '\n';
    return;
  }
  std::ofstream file(opt.output);
  if (!file) throw InvalidArgument("cannot open output file " + opt.output);
  file << result.dump(2) << '\n';
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out) {
  Options opt;
  CLI::App app{"Geometrically uniform frame toolkit", "guframe"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tolerance", opt.tolerance,
                 "Absolute tolerance for entrywise comparisons")
      ->capture_default_str();

  auto with_io = [&](CLI::App* sub) {
    sub->add_option("-i,--input", opt.input, "Input JSON path, - for stdin")
        ->capture_default_str();
    sub->add_option("-o,--output", opt.output, "Output JSON path");
    return sub;
  };
  auto with_spec = [&](CLI::App* sub) {
    sub->add_option("--spec", opt.spec, "Group factors as JSON, e.g. [2,2]");
    return sub;
  };

  CLI::App* analyze = with_spec(with_io(app.add_subcommand(
      "analyze", "Spectral report of a GU frame: s, s_hat, bounds, generators")));
  CLI::App* dual = with_spec(with_io(
      app.add_subcommand("dual", "Canonical dual of a frame or GU frame")));
  CLI::App* canonical = with_spec(with_io(app.add_subcommand(
      "canonical", "Canonical tight frame of a frame or GU frame")));
  CLI::App* synth = with_io(
      app.add_subcommand("synthesize", "Frame vectors of a GU frame"));
  CLI::App* prune = with_spec(with_io(app.add_subcommand(
      "prune", "Spectrum of the frame operator after removing vectors")));
  prune->add_option("--remove", opt.remove, "Remove the single vector j");
  prune->add_option("--coset", opt.coset, "Index set J as JSON");
  prune->add_option("--shift", opt.shift, "Translate J by element k");
  CLI::App* construct = with_spec(with_io(app.add_subcommand(
      "construct", "Least-squares GU frame closest to an input frame")));
  construct->add_option("--mode", opt.mode, "sc, c or naive")
      ->check(CLI::IsMember({"sc", "c", "naive"}))
      ->capture_default_str();
  construct->add_option("--target-a", opt.target_a,
                        "Target inner-product sequence as JSON");
  construct->add_option("--beta0", opt.beta0, "Scale for --mode sc")
      ->capture_default_str();
  construct->add_option("--sigma", opt.sigma,
                        "Diagonal weights for --mode naive as JSON");
  CLI::App* distance = with_spec(with_io(app.add_subcommand(
      "distance", "Distance profile and fixed-point-free checks")));
  distance->add_option("--fpf-n", opt.fpf_n, "Cyclic group order");
  distance->add_option("--u", opt.u, "Exponents u_k as JSON");
  distance->add_option("--generator", opt.generator,
                       "Generator for --fpf-n as JSON");
  distance->add_option("--search-n", opt.search_n,
                       "Search exponents for this group order");
  distance->add_option("--search-m", opt.search_m, "Dimension for the search");
  CLI::App* check = with_spec(with_io(app.add_subcommand(
      "check-gu", "Test whether a Gram matrix or frame is GU")));
  CLI::App* cgu = with_io(
      app.add_subcommand("cgu", "Compound GU frame report"));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, out);
      return kExitOk;
    }
    out << ErrorObject("validation", e.what()).dump() << '\n';
    return kExitValidation;
  }

  try {
    if (!(opt.tolerance > 0.0) || !std::isfinite(opt.tolerance)) {
      throw InvalidArgument("--tolerance must be a positive number");
    }
    Tolerance tol;
    tol.abs = opt.tolerance;
    Json result;
    if (distance->parsed()) {
      result = Distance(opt, in, tol);
    } else {
      const Json j = ReadInput(opt.input, in);
      if (analyze->parsed()) {
        result = Analyze(j, opt, tol);
      } else if (dual->parsed()) {
        result = DualOrCanonical(j, opt, tol, false);
      } else if (canonical->parsed()) {
        result = DualOrCanonical(j, opt, tol, true);
      } else if (synth->parsed()) {
        result = Synthesize(j, tol);
      } else if (prune->parsed()) {
        result = Prune(j, opt, tol);
      } else if (construct->parsed()) {
        result = Construct(j, opt, tol);
      } else if (check->parsed()) {
        result = CheckGu(j, opt, tol);
      } else if (cgu->parsed()) {
        result = Cgu(j, tol);
      }
    }
    Emit(result, opt, out);
    return kExitOk;
  } catch (const NumericalError& e) {
    out << ErrorObject("numerical", e.what()).dump() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    out << ErrorObject("validation", e.what()).dump() << '\n';
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    out << ErrorObject("validation", e.what()).dump() << '\n';
    return kExitValidation;
  } catch (const Json::exception& e) {
    out << ErrorObject("validation", e.what()).dump() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    out << ErrorObject("numerical", e.what()).dump() << '\n';
    return kExitNumerical;
  }
}

}  // namespace guframe::cli
