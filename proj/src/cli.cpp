#include "twogroups/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "twogroups/bibundle.hpp"
#include "twogroups/covering.hpp"
#include "twogroups/crossed_module.hpp"
#include "twogroups/groupoid.hpp"
#include "twogroups/io.hpp"
#include "twogroups/simplicial.hpp"
#include "twogroups/strictifier.hpp"
#include "twogroups/two_group.hpp"

namespace twogroups::cli {

namespace {

using io::Json;

struct Input {
  std::string kind;
  std::string path;
  std::string checksum;
  Json doc;
};

class Failure : public std::runtime_error {
 public:
  Failure(int code, std::string what) : std::runtime_error(std::move(what)), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

int status_of(const ValidationReport& r) {
  if (!r.structurally_sound()) return kStructural;
  return r.ok() ? kPass : kViolation;
}

// Worst of two exit codes: structural > violation > inconclusive > pass.
int worst(int a, int b) {
  auto rank = [](int c) { return c == kStructural ? 3 : c == kViolation ? 2 : c == kInconclusive ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

const char* status_name(int code) {
  switch (code) {
    case kPass: return "PASS";
    case kViolation: return "FAIL";
    case kInconclusive: return "INCONCLUSIVE";
    default: return "ERROR";
  }
}

Json names_of(const std::vector<std::string>& names, const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (std::size_t i : idx) out.push_back(names[i]);
  return out;
}

Json horn_faces(const std::vector<std::pair<std::size_t, std::string>>& faces) {
  Json out = Json::array();
  for (const auto& [i, name] : faces) out.push_back({i, name});
  return out;
}

Json layer_counts(const TruncatedSimplicialSet& x) {
  Json out = Json::array();
  for (const auto& l : x.layers) out.push_back(l.size());
  return out;
}

class Runner {
 public:
  explicit Runner(const Command& cmd) : cmd_(cmd) {}

  Json body;
  int code = kPass;

  void load() {
    for (const auto& [kind, path] : cmd_.inputs) {
      if (std::find(input_kinds().begin(), input_kinds().end(), kind) == input_kinds().end())
        throw Failure(kStructural, "unknown input kind '" + kind + "'");
      Input in{kind, path, {}, {}};
      const std::string text = io::read_file(path);
      in.checksum = io::checksum_hex(text);
      in.doc = io::parse(text);
      inputs_.push_back(std::move(in));
    }
  }

  Json input_summary() const {
    Json out = Json::array();
    for (const auto& in : inputs_) out.push_back({{"kind", in.kind}, {"path", in.path}, {"checksum", in.checksum}});
    return out;
  }

  void dispatch() {
    static const std::map<std::string, std::function<void(Runner&)>> table{
        {"validate", &Runner::validate},       {"strictify", &Runner::strictify_cmd},
        {"extract-xmod", &Runner::extract},    {"xmod-to-2group", &Runner::xmod_to_2group},
        {"bibundle-check", &Runner::bibundle}, {"nerve", &Runner::nerve},
        {"kan-check", &Runner::kan},           {"pi1", &Runner::pi1},
        {"roundtrip", &Runner::roundtrip}};
    const auto it = table.find(cmd_.subcommand);
    if (it == table.end()) throw Failure(kStructural, "unknown subcommand '" + cmd_.subcommand + "'");
    it->second(*this);
  }

 private:
  const Command& cmd_;
  std::vector<Input> inputs_;

  const Input& only_input(std::initializer_list<const char*> accepted) {
    if (inputs_.size() != 1) throw Failure(kStructural, cmd_.subcommand + " takes exactly one input");
    for (const char* k : accepted)
      if (inputs_[0].kind == k) return inputs_[0];
    std::string list;
    for (const char* k : accepted) list += std::string(list.empty() ? "" : ", ") + "--" + k;
    throw Failure(kStructural, cmd_.subcommand + " accepts " + list);
  }

  void absorb(const char* key, const ValidationReport& r) {
    body[key] = io::write_report(r);
    code = worst(code, status_of(r));
  }

  void emit(const char* key, Json artifact) {
    if (cmd_.out.empty()) {
      body[key] = std::move(artifact);
    } else {
      io::write_file(cmd_.out, artifact.dump(2) + "\n");
      body[key] = {{"written_to", cmd_.out}};
    }
  }

  // A strict 2-group read from the 2-group format: strictify it, and report
  // why not when that fails.
  std::optional<Strictification> strict_from(const CoherentTwoGroup& t) {
    const ValidationReport coherence = validate_coherent(t);
    absorb("coherence", coherence);
    if (!coherence.ok()) return std::nullopt;
    const SemistrictResult semi = is_semistrict(t);
    if (!semi.semistrict) {
      body["result"] = "NotSemistrict";
      body["reason"] = semi.reason;
      body["witness"] = semi.witness;
      code = worst(code, kViolation);
      return std::nullopt;
    }
    const AssociatorCocycle h = associator_cocycle(t);
    body["associator_cocycle"] = {{"h0", t.base.arrow_name(h.h0)},
                                  {"idempotence_certificate", h.certificate},
                                  {"constant", h.constant},
                                  {"trivial", h.trivial}};
    try {
      Strictification s = strictify(t);
      body["result"] = "strict";
      body["equivalence"] = {{"t", "identities"}, {"u", t.base.arrow_name(s.equivalence.u)}};
      return s;
    } catch (const ConnectednessAnalogViolated& e) {
      body["result"] = "ConnectednessAnalogViolated";
      body["lemma"] = e.lemma();
      body["witness"] = e.witness();
      code = worst(code, kViolation);
      return std::nullopt;
    }
  }

  void validate() {
    const Input& in = only_input({"twogroup", "xmod", "groupoid", "complex", "simplicial", "partial-group", "bibundle"});
    if (in.kind == "groupoid") {
      absorb("groupoid", validate_groupoid(io::read_groupoid(in.doc)));
    } else if (in.kind == "twogroup") {
      const CoherentTwoGroup t = io::read_two_group(in.doc);
      const ValidationReport coherence = validate_coherent(t);
      absorb("coherence", coherence);
      if (!coherence.ok()) return;
      const UnitIsotropy iso = unit_isotropy(t);
      body["unit_isotropy"] = {{"order", iso.group.order()},
                               {"arrows", iso.group.names()},
                               {"commutators_checked", iso.commutators_checked}};
      absorb("eckmann_hilton", iso.report);
      const SemistrictResult semi = is_semistrict(t);
      body["semistrict"] = semi.semistrict;
      if (!semi.semistrict) body["semistrict_failure"] = {{"reason", semi.reason}, {"witness", semi.witness}};
    } else if (in.kind == "xmod") {
      const CrossedModule x = io::read_crossed_module(in.doc);
      const ValidationReport r = validate_crossed_module(x);
      absorb("crossed_module", r);
      if (!r.ok()) return;
      const KernelCenter kc = kernel_center_check(x);
      body["kernel"] = names_of(x.gamma.names(), kc.kernel);
      body["coker_orbits"] = kc.orbits.size();
      body["commutators_checked"] = kc.commutators_checked;
      absorb("kernel_center", kc.report);
    } else if (in.kind == "complex") {
      absorb("complex", validate_complex(io::read_complex(in.doc)));
    } else if (in.kind == "simplicial") {
      absorb("simplicial", validate_simplicial(io::read_simplicial(in.doc)));
    } else if (in.kind == "partial-group") {
      absorb("partial_group", validate_partial_group(io::read_partial_group(in.doc)));
    } else {
      const PrincipalReport p = validate_principal(io::read_bibundle(in.doc));
      absorb("bibundle", p.report);
      body["right_principal"] = p.right_principal;
      body["morita"] = p.morita;
    }
  }

  void strictify_cmd() {
    const Input& in = only_input({"twogroup"});
    const CoherentTwoGroup t = io::read_two_group(in.doc);
    const auto s = strict_from(t);
    if (!s) return;
    absorb("strict", validate_strict(s->strict));
    emit("output", io::write_two_group(as_coherent(s->strict)));
  }

  void extract() {
    const Input& in = only_input({"twogroup"});
    const CoherentTwoGroup t = io::read_two_group(in.doc);
    const auto s = strict_from(t);
    if (!s) return;
    const ArrowGroup ag = arrow_group(s->strict);
    absorb("crossed_module", validate_crossed_module(ag.xmod));
    absorb("arrow_group", ag.report);
    body["products_checked"] = ag.products_checked;
    emit("output", io::write_crossed_module(ag.xmod));
  }

  void xmod_to_2group() {
    const Input& in = only_input({"xmod"});
    const CrossedModule x = io::read_crossed_module(in.doc);
    const ValidationReport r = validate_crossed_module(x);
    absorb("crossed_module", r);
    if (!r.ok()) return;
    const StrictTwoGroup s = to_strict_two_group(x);
    absorb("strict", validate_strict(s));
    body["objects"] = s.base.object_count();
    body["arrows"] = s.base.arrow_count();
    emit("output", io::write_two_group(as_coherent(s)));
  }

  void bibundle() {
    const Input& in = only_input({"bibundle"});
    const Bibundle b = io::read_bibundle(in.doc);
    const PrincipalReport p = validate_principal(b);
    absorb("report", p.report);
    body["left_report"] = io::write_report(p.left_report);
    body["right_principal"] = p.right_principal;
    body["morita"] = p.morita;
  }

  std::optional<TruncatedSimplicialSet> nerve_source() {
    const Input& in = only_input({"groupoid", "partial-group", "xmod", "twogroup", "simplicial"});
    body["source"] = in.kind;
    if (in.kind == "simplicial") return io::read_simplicial(in.doc);
    if (in.kind == "groupoid") {
      const FiniteGroupoid g = io::read_groupoid(in.doc);
      const ValidationReport r = validate_groupoid(g);
      absorb("groupoid", r);
      if (!r.ok()) return std::nullopt;
      return nerve_of_groupoid(g, cmd_.depth);
    }
    if (in.kind == "partial-group") {
      const PartialGroup p = io::read_partial_group(in.doc);
      const ValidationReport r = validate_partial_group(p);
      absorb("partial_group", r);
      if (!r.ok()) return std::nullopt;
      return nerve_of_partial_group(p, cmd_.depth);
    }
    if (in.kind == "xmod") {
      const CrossedModule x = io::read_crossed_module(in.doc);
      const ValidationReport r = validate_crossed_module(x);
      absorb("crossed_module", r);
      if (!r.ok()) return std::nullopt;
      return two_group_nerve(to_strict_two_group(x));
    }
    const auto s = strict_from(io::read_two_group(in.doc));
    if (!s) return std::nullopt;
    return two_group_nerve(s->strict);
  }

  void nerve() {
    const auto x = nerve_source();
    if (!x) return;
    body["depth"] = x->depth();
    body["layer_counts"] = layer_counts(*x);
    absorb("simplicial", validate_simplicial(*x));
    emit("output", io::write_simplicial(*x));
  }

  void kan() {
    const auto x = nerve_source();
    if (!x) return;
    const std::size_t max_m = std::min(cmd_.depth, x->depth());
    body["n"] = cmd_.kan_n;
    body["max_m"] = max_m;
    body["layer_counts"] = layer_counts(*x);
    const KanReport k = kan_check(*x, cmd_.kan_n, max_m);
    Json horns = Json::array();
    for (const HornSummary& h : k.horns) {
      Json j{{"m", h.m},
             {"j", h.j},
             {"unique_required", h.uniqueness_required},
             {"horns", h.horns},
             {"missing", h.missing},
             {"ambiguous", h.ambiguous},
             {"status", h.ok() ? "PASS" : "FAIL"}};
      if (h.missing) j["first_missing"] = horn_faces(h.first_missing);
      if (h.ambiguous) {
        j["first_ambiguous"] = horn_faces(h.first_ambiguous);
        j["first_ambiguous_fillers"] = h.first_ambiguous_fillers;
      }
      horns.push_back(std::move(j));
    }
    body["horns"] = std::move(horns);
    body["kan"] = k.ok();
    if (!k.ok()) code = worst(code, kViolation);
  }

  void pi1() {
    const Input& in = only_input({"complex"});
    const EquivariantComplex c = io::read_complex(in.doc);
    const ValidationReport valid = validate_complex(c);
    absorb("complex", valid);
    if (!valid.ok()) return;
    const QuotientComplex q = quotient(c);
    body["total"] = {{"vertices", c.vertices.size()}, {"edges", c.edges.size()}, {"cells", c.cells.size()}};
    body["quotient"] = {{"vertices", q.vertex_names.size()}, {"edges", q.edges.size()}, {"cells", q.cells.size()}};
    const Pi1Presentation p = pi1_presentation(q, 0);
    Json rel = Json::array();
    for (const Word& w : p.presentation.relators) rel.push_back(format_word(w, p.presentation.generators));
    body["pi1"] = {{"generators", p.presentation.generators}, {"relators", std::move(rel)}};
    if (!cmd_.verify_boundary) return;

    const BoundaryIsoReport b = verify_boundary_iso(c, cmd_.move_budget);
    Json images = Json::object(), surj = Json::object();
    for (std::size_t s = 0; s < b.generator_images.size(); ++s)
      images[p.presentation.generators[s]] = c.gamma.name(b.generator_images[s]);
    for (std::size_t g = 0; g < b.surjectivity_words.size(); ++g)
      surj[c.gamma.name(g)] = format_word(b.surjectivity_words[g], p.presentation.generators);
    absorb("boundary", b.report);
    body["gamma_order"] = b.gamma_order;
    body["generator_images"] = std::move(images);
    body["homomorphism_cases"] = b.homomorphism_cases;
    body["surjectivity_words"] = std::move(surj);
    body["schreier_generators"] = b.schreier_generators;
    body["schreier_certified"] = b.schreier_certified;
    body["moves_used"] = b.moves_used;
    body["injectivity"] = to_string(b.injectivity);
    body["simple_connectivity"] = b.simple_connectivity;
    const std::string order = "|Γ|=" + std::to_string(b.gamma_order);
    if (b.iso_certified()) {
      body["summary"] = "iso certified, " + order;
    } else if (b.report.ok()) {
      body["summary"] = "injectivity inconclusive, " + order;
      code = worst(code, kInconclusive);
    } else {
      body["summary"] = "boundary map checks failed, " + order;
    }
  }

  void stage(Json& stages, const std::string& name, bool ok, Json detail = Json::object()) {
    detail["stage"] = name;
    detail["status"] = ok ? "PASS" : "FAIL";
    stages.push_back(std::move(detail));
    if (!ok) code = worst(code, kViolation);
  }

  void roundtrip() {
    const Input& in = only_input({"xmod", "twogroup"});
    Json stages = Json::array();
    CrossedModule x;
    if (in.kind == "xmod") {
      x = io::read_crossed_module(in.doc);
      const ValidationReport r = validate_crossed_module(x);
      absorb("crossed_module", r);
      if (!r.ok()) return;
    } else {
      const auto s = strict_from(io::read_two_group(in.doc));
      if (!s) return;
      x = extract_crossed_module(s->strict);
      stage(stages, "extract", validate_crossed_module(x).ok());
    }
    const StrictTwoGroup s = to_strict_two_group(x);
    stage(stages, "to strict", validate_strict(s).ok(),
          {{"objects", s.base.object_count()}, {"arrows", s.base.arrow_count()}});
    const CoherentTwoGroup t = as_coherent(s);
    stage(stages, "coherence", validate_coherent(t).ok());
    std::optional<Strictification> back;
    try {
      back = strictify(t);
    } catch (const std::exception& e) {
      stage(stages, "strictify", false, {{"error", e.what()}});
      body["stages"] = std::move(stages);
      return;
    }
    stage(stages, "strictify", back->strict == s);
    const ArrowGroup ag = arrow_group(back->strict);
    stage(stages, "arrow group", ag.report.ok(), {{"products_checked", ag.products_checked}});
    const auto iso = find_crossed_module_isomorphism(ag.xmod, x);
    Json detail = Json::object();
    if (iso) {
      detail["gamma_map"] = Json::object();
      for (std::size_t g = 0; g < ag.xmod.gamma.order(); ++g)
        detail["gamma_map"][ag.xmod.gamma.name(g)] = x.gamma.name(iso->gamma_map[g]);
      detail["g0_map"] = Json::object();
      for (std::size_t a = 0; a < ag.xmod.g0.order(); ++a)
        detail["g0_map"][ag.xmod.g0.name(a)] = x.g0.name(iso->g0_map[a]);
    }
    stage(stages, "crossed module iso", iso && is_crossed_module_iso(ag.xmod, x, *iso), std::move(detail));

    const std::size_t na = s.base.arrow_count();
    if (na * na * na <= kMaxBarNerveSimplices) {
      const FiniteGroupoid g = two_kan_to_groupoid(two_group_nerve(s));
      stage(stages, "2-Kan groupoid", find_isomorphism(g, s.base).has_value(),
            {{"objects", g.object_count()}, {"arrows", g.arrow_count()}});
    } else {
      stages.push_back({{"stage", "2-Kan groupoid"}, {"status", "SKIPPED"}, {"reason", "bar nerve too large"}});
    }
    body["stages"] = std::move(stages);
  }
};

void render_text(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

Outcome run(const Command& cmd) {
  Outcome outcome;
  Json report{{"schema_version", kSchemaVersion}, {"subcommand", cmd.subcommand}};
  Runner runner(cmd);
  try {
    if (cmd.format != "json" && cmd.format != "text")
      throw Failure(kStructural, "unknown format '" + cmd.format + "'");
    if (cmd.depth < 1) throw Failure(kStructural, "depth must be at least 1");
    runner.load();
    report["inputs"] = runner.input_summary();
    report["options"] = {{"depth", cmd.depth}, {"kan_n", cmd.kan_n}, {"move_budget", cmd.move_budget},
                         {"verify_boundary", cmd.verify_boundary}};
    runner.dispatch();
    outcome.exit_code = runner.code;
  } catch (const Failure& e) {
    outcome.exit_code = e.code();
    outcome.diagnostic = e.what();
  } catch (const StructuralError& e) {
    outcome.exit_code = kStructural;
    outcome.diagnostic = e.what();
  } catch (const nlohmann::ordered_json::exception& e) {
    outcome.exit_code = kStructural;
    outcome.diagnostic = std::string("malformed input: ") + e.what();
  } catch (const NotSemistrict& e) {
    outcome.exit_code = kViolation;
    outcome.diagnostic = e.what();
  } catch (const PreconditionError& e) {
    outcome.exit_code = kStructural;
    outcome.diagnostic = e.what();
  } catch (const std::exception& e) {
    outcome.exit_code = kViolation;
    outcome.diagnostic = e.what();
  }
  if (!report.contains("inputs")) report["inputs"] = runner.input_summary();
  report["status"] = status_name(outcome.exit_code);
  report["exit_code"] = outcome.exit_code;
  if (!outcome.diagnostic.empty()) report["error"] = outcome.diagnostic;
  report["result"] = std::move(runner.body);

  if (cmd.format == "text") {
    std::ostringstream out;
    render_text(report, "", out);
    outcome.report = out.str();
  } else {
    outcome.report = report.dump(2) + "\n";
  }
  return outcome;
}

}  // namespace twogroups::cli
