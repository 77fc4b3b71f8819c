#include "pwedge/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace pwedge {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

FacetSelector parse_selector(const std::string& text, int line) {
  try {
    std::size_t used = 0;
    const int index = std::stoi(text, &used);
    if (used == text.size()) return index;
  } catch (const std::exception&) {
  }
  auto label = FacetLabel::parse(text);
  if (!label) throw ParseError(line, "malformed facet selector '" + text + "'");
  return *label;
}

ManifestStep parse_step(const std::vector<std::string>& tokens, int line) {
  ManifestStep step;
  if (tokens.size() < 2) throw ParseError(line, "step needs an operation");
  const std::string& op = tokens[1];
  if (op == "wedge")
    step.op = ManifestStep::Op::Wedge;
  else if (op == "perturb")
    step.op = ManifestStep::Op::Perturb;
  else if (op == "perturbed-wedge")
    step.op = ManifestStep::Op::PerturbedWedge;
  else
    throw ParseError(line, "unknown step operation '" + op + "'");

  for (std::size_t i = 2; i < tokens.size(); ++i) {
    const std::string& token = tokens[i];
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected key=value, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "foot") {
      step.foot = parse_selector(value, line);
    } else if (key == "g") {
      step.g = parse_selector(value, line);
    } else if (key == "eps") {
      auto eps = parse_rational(value);
      if (!eps || *eps <= 0) throw ParseError(line, "eps must be a positive rational");
      step.eps = *eps;
    } else {
      throw ParseError(line, "unknown step argument '" + key + "'");
    }
  }

  const bool needs_foot = step.op != ManifestStep::Op::Perturb;
  const bool needs_g = step.op != ManifestStep::Op::Wedge;
  if (needs_foot && !step.foot) throw ParseError(line, "step needs foot=<facet>");
  if (needs_g && !step.g) throw ParseError(line, "step needs g=<facet>");
  if (step.eps && step.op != ManifestStep::Op::Perturb)
    throw ParseError(line, "eps is only valid on perturb steps");
  return step;
}

}  // namespace

RunManifest parse_manifest_text(const std::string& text) {
  RunManifest manifest;
  std::istringstream stream(text);
  std::string raw;
  int line_number = 0;
  while (std::getline(stream, raw)) {
    ++line_number;
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    const auto last = raw.find_last_not_of(" \t\r");
    const std::string line = raw.substr(first, last - first + 1);
    const auto tokens = split_tokens(line);
    const std::string& key = tokens[0];
    if (key == "input" && tokens.size() == 2) {
      manifest.input = tokens[1];
    } else if (key == "output" && tokens.size() == 2) {
      manifest.output = tokens[1];
    } else if (key == "log" && tokens.size() == 2) {
      manifest.log_path = tokens[1];
    } else if (key == "canonicalize" && tokens.size() == 2) {
      if (tokens[1] == "always")
        manifest.always_canonicalize = true;
      else if (tokens[1] == "auto")
        manifest.always_canonicalize = false;
      else
        throw ParseError(line_number, "canonicalize must be 'always' or 'auto'");
    } else if (key == "interior-hint") {
      QVector hint;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto value = parse_rational(tokens[i]);
        if (!value) throw ParseError(line_number, "malformed rational in interior-hint");
        hint.push_back(*value);
      }
      if (hint.empty()) throw ParseError(line_number, "interior-hint needs coordinates");
      manifest.interior_hint = std::move(hint);
    } else if (key == "analyze" && tokens.size() == 2) {
      manifest.analyze = tokens[1] == "true";
    } else if (key == "step") {
      manifest.steps.push_back(parse_step(tokens, line_number));
    } else {
      throw ParseError(line_number, "unknown manifest line '" + line + "'");
    }
  }
  if (manifest.input.empty()) throw Error("manifest needs an input path");
  if (manifest.output.empty()) throw Error("manifest needs an output path");
  return manifest;
}

RunManifest parse_manifest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_manifest_text(buffer.str());
}

int resolve_facet(const Polytope& p, const FacetSelector& selector) {
  if (std::holds_alternative<int>(selector)) {
    const int index = std::get<int>(selector);
    if (index < 0 || index >= p.facet_count())
      throw InvalidSelection("facet index " + std::to_string(index) + " out of range");
    return index;
  }
  const FacetLabel& label = std::get<FacetLabel>(selector);
  const int index = p.hrep.find_label(label);
  if (index < 0) throw InvalidSelection("no facet labeled " + label.str());
  return index;
}

namespace {

std::string selector_str(const FacetSelector& selector) {
  if (std::holds_alternative<int>(selector)) return std::to_string(std::get<int>(selector));
  return std::get<FacetLabel>(selector).str();
}

void log_polytope_line(std::ostream& log, const std::string& prefix, const Polytope& p) {
  log << prefix << " dim=" << p.dim() << " facets=" << p.facet_count()
      << " vertices=" << p.vertex_count() << "\n";
}

void log_vertex_map(std::ostream& log, const std::string& prefix,
                    const std::map<int, int>& map) {
  log << prefix;
  for (const auto& [from, to] : map) log << " " << from << ":" << to;
  log << "\n";
}

void log_classification(std::ostream& log, const std::string& prefix, const VertexClass& cls) {
  auto tally = [](const std::vector<VertexClass::Member>& members) {
    int single = 0;
    for (const auto& m : members)
      if (m.single_edge) ++single;
    return std::pair<int, int>(single, static_cast<int>(members.size()) - single);
  };
  const auto [fs, fm] = tally(cls.foot);
  const auto [ts, tm] = tally(cls.top_only);
  const auto [bs, bm] = tally(cls.base_only);
  log << prefix << " foot=" << cls.foot.size() << " top_only=" << cls.top_only.size()
      << " base_only=" << cls.base_only.size() << " foot_single=" << fs << " foot_multi=" << fm
      << " top_single=" << ts << " top_multi=" << tm << " base_single=" << bs
      << " base_multi=" << bm << "\n";
}

void log_index_list(std::ostream& log, const std::string& prefix, const std::vector<int>& list) {
  log << prefix;
  for (int v : list) log << " " << v;
  log << "\n";
}

void log_perturbation(std::ostream& log, const std::string& tag,
                      const PerturbedWedgeResult& result) {
  log << tag << " epsilon=" << format_rational(result.epsilon)
      << " g_tilde=" << result.g_tilde_index << "\n";
  log_classification(log, tag + " class", result.classification);
  log_index_list(log, tag + " removed", result.removed);
  log_index_list(log, tag + " created", result.created);
  log_vertex_map(log, tag + " vmap_survivors", result.survivors);
}

}  // namespace

RunOutcome run_manifest(const RunManifest& manifest, const std::string& base_dir) {
  namespace fs = std::filesystem;
  auto resolve_path = [&](const std::string& path) {
    fs::path p(path);
    return p.is_absolute() ? p.string() : (fs::path(base_dir) / p).string();
  };

  std::ostringstream log;
  log << "manifest input=" << manifest.input << " steps=" << manifest.steps.size() << "\n";

  const PolytopeFileData data = parse_polytope_file(resolve_path(manifest.input));
  Polytope current = load_polytope(data, manifest.always_canonicalize, manifest.interior_hint);
  log << "load canonical_input=" << (data.hrep.canonical ? "true" : "false") << "\n";
  log_polytope_line(log, "load", current);

  std::optional<WedgeResult> live_wedge;
  int step_number = 0;
  for (const ManifestStep& step : manifest.steps) {
    ++step_number;
    const std::string tag = "step=" + std::to_string(step_number);
    switch (step.op) {
      case ManifestStep::Op::Wedge: {
        const int foot = resolve_facet(current, *step.foot);
        log << tag << " op=wedge foot=" << selector_str(*step.foot) << " foot_index=" << foot
            << " foot_label=" << current.hrep.facets[foot].label.str() << "\n";
        WedgeResult w = wedge(current, foot);
        log_vertex_map(log, tag + " vmap_foot", w.foot_vertex_map);
        log_vertex_map(log, tag + " vmap_top", w.top_vertex_map);
        log_vertex_map(log, tag + " vmap_base", w.base_vertex_map);
        current = w.polytope;
        live_wedge = std::move(w);
        break;
      }
      case ManifestStep::Op::Perturb: {
        if (!live_wedge) throw InvalidSelection("perturb step must directly follow a wedge step");
        const int g = resolve_facet(current, *step.g);
        log << tag << " op=perturb g=" << selector_str(*step.g) << " g_index=" << g << "\n";
        const Rational eps = step.eps ? *step.eps : choose_epsilon(*live_wedge, g);
        PerturbedWedgeResult result = perturb(*live_wedge, g, eps);
        log_perturbation(log, tag, result);
        current = std::move(result.polytope);
        live_wedge.reset();
        break;
      }
      case ManifestStep::Op::PerturbedWedge: {
        const int foot = resolve_facet(current, *step.foot);
        const int g = resolve_facet(current, *step.g);
        if (foot == g) throw InvalidSelection("foot and perturbed facet must differ");
        log << tag << " op=perturbed-wedge foot=" << selector_str(*step.foot)
            << " foot_index=" << foot << " g=" << selector_str(*step.g) << " g_index=" << g
            << "\n";
        WedgeResult w = wedge(current, foot);
        const int g_image = w.facet_image[g];
        log_polytope_line(log, tag + " wedge", w.polytope);
        log_vertex_map(log, tag + " vmap_foot", w.foot_vertex_map);
        log_vertex_map(log, tag + " vmap_top", w.top_vertex_map);
        log_vertex_map(log, tag + " vmap_base", w.base_vertex_map);
        const Rational eps = choose_epsilon(w, g_image);
        PerturbedWedgeResult result = perturb(w, g_image, eps);
        log_perturbation(log, tag, result);
        current = std::move(result.polytope);
        live_wedge.reset();
        break;
      }
    }
    log_polytope_line(log, tag + " result", current);
  }

  if (manifest.analyze) {
    int simple = 0;
    for (int j = 0; j < current.vertex_count(); ++j)
      if (current.incidence.column_ones(j) == current.dim()) ++simple;
    log << "analyze simple_vertices=" << simple << "/" << current.vertex_count() << "\n";
  }

  RunOutcome outcome{current, {}, serialize_polytope(current)};
  log << "final dim=" << current.dim() << " facets=" << current.facet_count()
      << " vertices=" << current.vertex_count() << "\n";
  log << "output " << manifest.output << "\n";
  outcome.log = log.str();

  write_polytope_file(resolve_path(manifest.output), outcome.output_bytes);
  if (manifest.log_path) {
    std::ofstream log_file(resolve_path(*manifest.log_path), std::ios::binary);
    if (!log_file) throw Error("cannot write " + *manifest.log_path);
    log_file << outcome.log;
  }
  return outcome;
}

}  // namespace pwedge
