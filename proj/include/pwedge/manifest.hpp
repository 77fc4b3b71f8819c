#pragma once

#include "pwedge/io.hpp"
#include "pwedge/wedge.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pwedge {

// A facet named either by index or by lineage label, resolved against the
// polytope the step applies to.
using FacetSelector = std::variant<int, FacetLabel>;

struct ManifestStep {
  enum class Op { Wedge, Perturb, PerturbedWedge };
  Op op = Op::Wedge;
  std::optional<FacetSelector> foot;
  std::optional<FacetSelector> g;
  std::optional<Rational> eps;  // perturb only; chosen by stabilization when absent
};

// Declarative run description.  Re-running a manifest on the same input
// reproduces the output and log byte for byte.
//
//   # comments and blank lines are skipped
//   input cube.poly
//   interior-hint 0 0 0          (optional)
//   canonicalize always          (optional; default: only when not canonical)
//   step wedge foot=0
//   step perturbed-wedge foot=Original(0) g=4
//   step perturb g=3 eps=1/64    (must directly follow a wedge step)
//   analyze true                 (optional; append a simplicity summary)
//   output out.poly
//   log out.log                  (optional; log also returned by the runner)
struct RunManifest {
  std::string input;
  std::optional<QVector> interior_hint;
  bool always_canonicalize = false;
  std::vector<ManifestStep> steps;
  std::string output;
  std::optional<std::string> log_path;
  bool analyze = false;
};

RunManifest parse_manifest_text(const std::string& text);
RunManifest parse_manifest_file(const std::string& path);

struct RunOutcome {
  Polytope polytope;
  std::string log;
  std::string output_bytes;
};

// Executes the manifest with paths resolved against base_dir and writes the
// output polytope and log files.
RunOutcome run_manifest(const RunManifest& manifest, const std::string& base_dir = ".");

int resolve_facet(const Polytope& p, const FacetSelector& selector);

}  // namespace pwedge
