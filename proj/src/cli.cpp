#include "hopfheap/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "hopfheap/catalog.hpp"
#include "hopfheap/errors.hpp"
#include "hopfheap/format.hpp"

namespace hopfheap::cli {

using nlohmann::json;

namespace {

struct Outcome {
  Outcome(Report r) : report(std::move(r)) {}

  Report report;
  json extra = json::object();
  std::vector<std::string> lines;
};

std::string describe(const Coalgebra& c, std::span<const Scalar> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string coef = v[i].to_string();
    std::string term;
    if (v[i].is_one()) {
      term = c.label(i);
    } else if ((-v[i]).is_one()) {
      term = "-" + c.label(i);
    } else {
      term = coef + "*" + c.label(i);
    }
    if (!s.empty() && term[0] != '-') s += " + ";
    else if (!s.empty()) s += " ";
    s += term;
  }
  return s.empty() ? "0" : s;
}

json report_json(const std::string& command, int code, const Report& r, const json& extra) {
  json j = extra;
  j["command"] = command;
  j["exit_code"] = code;
  j["pass"] = r.pass;
  j["check"] = r.check;
  if (!r.pass) {
    j["axiom"] = r.axiom;
    j["witness"] = r.witness;
    j["detail"] = r.detail;
  }
  return j;
}

StructureFile load(const std::string& path) { return parse_structure(read_json_file(path)); }

void emit(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << dump(j);
  } else {
    write_file_atomic(path, dump(j));
  }
}

Outcome check_heap_command(const std::string& path) {
  HopfHeap h = heap_of(load(path));
  return {check_hopf_heap(h)};
}

Outcome check_hopf_command(const std::string& path) {
  HopfAlgebraData h = hopf_of(load(path));
  Outcome o{check_bialgebra(h)};
  if (!o.report) return o;
  if (h.antipode()) {
    o.report = check_antipode(h, *h.antipode());
  } else if (auto s = solve_antipode(h)) {
    o.lines.push_back("no antipode given; solved antipode exists");
    o.report = Report::success("antipode");
  } else {
    o.report = Report::failure("antipode", "antipode-existence", {}, "the bialgebra has no antipode");
  }
  if (o.report) o.report.check = "hopf";
  return o;
}

Outcome check_galois_command(const std::string& path) {
  GaloisCoObject g = galois_of(load(path));
  Outcome o{check_galois(g)};
  if (!o.report) return o;
  o.report = check_cotranslation_props(g, cotranslation(g));
  if (o.report) o.report.check = "galois";
  return o;
}

Outcome translations_command(const std::string& path, const std::string& side_name,
                             const std::string& output) {
  HopfHeap h = heap_of(load(path));
  if (auto r = check_hopf_heap(h); !r) return {r};
  Side side = side_name == "left" ? Side::Left : Side::Right;
  TranslationAlgebra t = build_translations(h, side);
  Outcome o{Report::success("translations")};
  o.extra["side"] = to_string(side);
  o.extra["dimension"] = t.dim();
  o.lines.push_back(to_string(side) + " translation Hopf algebra: dimension " + std::to_string(t.dim()));
  if (!output.empty()) {
    write_file_atomic(output, dump(to_json(structure_of(t.hopf))));
    json sidecar;
    sidecar["side"] = to_string(side);
    sidecar["heap_dim"] = h.dim();
    sidecar["dim"] = t.dim();
    sidecar["action"] = to_json(structure_of(GaloisCoObject{h.coalgebra(), t.hopf, t.action}))["action"];
    write_file_atomic(output + ".action.json", dump(sidecar));
  }
  return o;
}

Outcome grunspan_command(const std::string& path, const std::string& output) {
  HopfHeap h = heap_of(load(path));
  if (auto r = check_hopf_heap(h); !r) return {r};
  Matrix theta = grunspan_map(h);
  Outcome o{check_grunspan(h, theta)};
  bool identity = theta.is_identity();
  o.extra["theta_is_identity"] = identity;
  o.lines.push_back(identity ? "theta = id" : "theta != id");
  const auto& c = h.coalgebra();
  for (std::size_t k = 0; k < h.dim(); ++k) {
    Vector col = theta.column(k);
    if (col != unit_vector(h.field(), h.dim(), k)) {
      o.lines.push_back("theta(" + c.label(k) + ") = " + describe(c, col));
    }
  }
  if (!output.empty()) {
    std::size_t n = h.dim();
    Tensor t(h.field(), {n, n});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t(i, j) = theta(j, i);
    json block;
    block["field"] = to_json(structure_of(c))["field"];
    block["dim"] = n;
    block["theta"] = json::array();
    auto data = t.data();
    for (std::size_t flat = 0; flat < data.size(); ++flat) {
      if (data[flat].is_zero()) continue;
      block["theta"].push_back({flat / n, flat % n, data[flat].to_string()});
    }
    block["is_identity"] = identity;
    write_file_atomic(output, dump(block));
  }
  return o;
}

Outcome ehresmann_command(const std::string& path, const std::string& output) {
  StructureFile s = load(path);
  GaloisCoObject g = s.action ? galois_of(s) : GaloisCoObject{galois_from_heap(heap_of(s))};
  if (auto r = check_galois(g); !r) return {r};
  g = with_galois_antipode(g);
  HopfHeap heap = heap_from_galois(g).heap;
  EhresmannHopf e = ehresmann_hopf(g);
  TranslationAlgebra left = build_left_translations(heap);
  ehresmann_iso_left_translations(e, left);
  Outcome o{Report::success("ehresmann")};
  o.extra["dimension"] = e.hopf.dim();
  o.extra["iso_left_translations"] = true;
  o.lines.push_back("E(C,H): dimension " + std::to_string(e.hopf.dim()));
  o.lines.push_back("isomorphic to the left translation Hopf algebra: verified");
  if (!output.empty()) {
    StructureFile out = structure_of(e.hopf);
    out.quotient_of = std::filesystem::path(path).filename().string();
    write_file_atomic(output, dump(to_json(out)));
  }
  return o;
}

Outcome roundtrip_command(const std::string& path) {
  HopfHeap h = heap_of(load(path));
  if (auto r = check_hopf_heap(h); !r) return {r};
  return {roundtrip_check(h)};
}

Outcome generate_command(const std::string& kind, const std::string& group, bool sweedler,
                         const std::string& field_text, const std::string& output,
                         std::ostream& out) {
  FieldSpec field = FieldSpec::parse(field_text);
  auto heap = [&]() {
    if (sweedler) return sweedler_heap(field);
    if (group.empty()) throw ParseError("generate " + kind + " needs --group or --sweedler");
    return group_heap(parse_group_name(group), field);
  };
  StructureFile s;
  if (kind == "group-algebra") {
    if (group.empty()) throw ParseError("generate group-algebra needs --group");
    s = structure_of(gen_group_algebra(parse_group_name(group), field));
  } else if (kind == "sweedler") {
    s = structure_of(sweedler_hopf(field));
  } else if (kind == "heap") {
    s = structure_of(heap());
  } else if (kind == "pair") {
    s = structure_of(galois_from_heap(heap()));
  } else {
    throw ParseError("unknown generator '" + kind + "'");
  }
  emit(to_json(s), output, out);
  Outcome o{Report::success("generate")};
  o.extra["dimension"] = s.dim;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks and constructions for Hopf heaps and Hopf-Galois co-objects",
               "hopfheap"};
  app.require_subcommand(1);

  std::string path, output, report_path, side = "right", kind, group, field = "Q";
  bool sweedler = false;
  std::function<Outcome()> action;
  std::string command;

  auto add = [&](const std::string& name, const std::string& help, bool with_output,
                 std::function<Outcome()> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("path", path, "Structure file")->required();
    sub->add_option("--report", report_path, "Write a JSON report here");
    if (with_output) sub->add_option("-o,--output", output, "Output file");
    sub->callback([&, name, fn] {
      command = name;
      action = fn;
    });
    return sub;
  };

  add("check-heap", "Verify the Hopf heap axioms", false, [&] { return check_heap_command(path); });
  add("check-hopf", "Verify the bialgebra and antipode axioms", false,
      [&] { return check_hopf_command(path); });
  add("check-galois", "Verify a Hopf-Galois co-object and its cotranslation map", false,
      [&] { return check_galois_command(path); });
  add("translations", "Build the translation Hopf algebra", true,
       [&] { return translations_command(path, side, output); })
      ->add_option("--side", side, "right or left")
      ->check(CLI::IsMember({"right", "left"}));
  add("grunspan", "Compute the Grunspan map", true, [&] { return grunspan_command(path, output); });
  add("ehresmann", "Build E(C,H) and compare it with the left translations", true,
      [&] { return ehresmann_command(path, output); });
  add("roundtrip", "Run the heap to Galois co-object round trip", false,
      [&] { return roundtrip_command(path); });

  CLI::App* gen = app.add_subcommand("generate", "Write a catalog structure");
  gen->add_option("kind", kind, "group-algebra | sweedler | heap | pair")
      ->required()
      ->check(CLI::IsMember({"group-algebra", "sweedler", "heap", "pair"}));
  gen->add_option("--group", group, "C1..C6, V4 or S3");
  gen->add_flag("--sweedler", sweedler, "Use the Sweedler Hopf algebra");
  gen->add_option("--field", field, "Q or Fp:<p>");
  gen->add_option("-o,--output", output, "Output file (default stdout)");
  gen->add_option("--report", report_path, "Write a JSON report here");
  gen->callback([&] {
    command = "generate";
    action = [&] { return generate_command(kind, group, sweedler, field, output, out); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  int code = kPass;
  json report;
  try {
    Outcome o = action();
    code = o.report ? kPass : kAxiomFailure;
    if (command != "generate") out << o.report.summary() << "\n";
    for (const auto& line : o.lines) out << line << "\n";
    report = report_json(command, code, o.report, o.extra);
  } catch (const ConstructionError& e) {
    code = kAxiomFailure;
    err << "error: " << e.what() << "\n";
    report = report_json(command, code, Report::failure(command, "construction", {}, e.what()), {});
  } catch (const VerificationError& e) {
    code = kAxiomFailure;
    err << "error: " << e.what() << "\n";
    report = report_json(command, code, Report::failure(command, "verification", {}, e.what()), {});
  } catch (const std::exception& e) {
    code = kInputError;
    err << "error: " << e.what() << "\n";
    report = report_json(command, code, Report::failure(command, "input", {}, e.what()), {});
  }
  if (!report_path.empty()) {
    try {
      write_file_atomic(report_path, dump(report));
    } catch (const std::exception& e) {
      err << "error: cannot write report: " << e.what() << "\n";
      return kInputError;
    }
  }
  return code;
}

}  // namespace hopfheap::cli
