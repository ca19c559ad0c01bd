// brax: generate braxtopes and related polytopes, compute their invariants
// and run the verification suites.
//
// Exit status: 0 success, 1 check failure, 2 invalid arguments or input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "braxtope/braxtope.hpp"

namespace {

using namespace braxtope;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PolytopeDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text << '\n';
}

StepOptions step_options() {
  StepOptions opts;
  if (const char* seed = std::getenv("BRAX_SEED"); seed != nullptr && *seed != '\0') {
    try {
      opts.seed = static_cast<unsigned>(std::stoul(seed));
    } catch (const std::exception&) {
      throw UsageError("BRAX_SEED must be a non-negative integer");
    }
  }
  return opts;
}

std::string tuple_line(const std::string& name, const std::vector<Count>& v) { return name + " = " + format_tuple(v); }

bool is_braxtope_document(const PolytopeDocument& doc) {
  if (doc.d < 3 || doc.n < doc.d) return false;
  return doc.family.same_facets(braxtope_facets(doc.d, doc.n));
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  int d = -1;
  int n = -1;
  int r = -1;
  std::string out;
};

int run_gen(const GenArgs& a) {
  PolytopeDocument doc;
  doc.kind = a.kind;
  doc.d = a.d;
  doc.n = a.n;
  if (a.kind == "braxtope") {
    doc.family = braxtope_facets(a.d, a.n);
  } else if (a.kind == "multiplex") {
    doc.family = multiplex_facets(a.d, a.n);
  } else if (a.kind == "cyclic") {
    doc.family = cyclic_facets(a.d, a.n);
  } else if (a.kind == "rd-braxtope") {
    if (a.r < 0) throw UsageError("rd-braxtope needs --r");
    doc.r = a.r;
    doc.family = rd_braxtope_facets(a.r, a.d, a.n);
  } else {
    throw UsageError("unknown kind '" + a.kind + "'");
  }
  write_output(a.out, to_json(doc).dump(2));
  return kOk;
}

struct AnalyzeArgs {
  std::string file;
  bool fvector = false;
  bool flagvector = false;
  bool hvector = false;
  bool compare = false;
};

int run_analyze(const AnalyzeArgs& a) {
  const auto doc = load_document(a.file);
  const auto lat = build_lattice(doc.family);
  const bool any = a.fvector || a.flagvector || a.hvector || a.compare;
  if (a.fvector || !any) std::cout << tuple_line("f", f_vector(lat).proper()) << '\n';
  if (a.flagvector) {
    for (const auto& [s, count] : flag_vector(lat).entries) {
      std::cout << "f_{" << FlagVector::key_string(s) << "} = " << count << '\n';
    }
  }
  if (a.hvector) {
    const auto facets = lat.facets();
    const bool simplicial = std::all_of(facets.begin(), facets.end(), [&](const VertexSet& f) {
      return static_cast<int>(f.size()) == lat.dim();
    });
    if (simplicial) {
      std::cout << tuple_line("h", h_from_f_simplicial(f_vector(lat), lat.dim()).values) << '\n';
    } else if (is_braxtope_document(doc)) {
      std::cout << tuple_line("h", braxtope_closed_forms(doc.d, doc.n).h.values) << '\n';
    } else {
      std::cout << "h = unavailable (nonsimplicial polytope)\n";
    }
  }
  if (a.compare) {
    if (doc.d < 3 || doc.n <= doc.d) throw UsageError("--compare-reference needs n > d >= 3");
    const auto ref = reference_comparand(doc.d, doc.n);
    const auto fq = flag_vector(lat);
    const auto fr = flag_vector(ref);
    std::cout << "S\tQ\treference\tequal\n";
    bool all_equal = true;
    for (const auto& [s, count] : fq.entries) {
      const Count other = fr.entries.count(s) ? fr.entries.at(s) : -1;
      all_equal = all_equal && other == count;
      std::cout << '{' << FlagVector::key_string(s) << "}\t" << count << '\t' << other << '\t'
                << (other == count ? "yes" : "no") << '\n';
    }
    std::cout << "flag vectors " << (all_equal ? "equal" : "differ") << '\n';
  }
  return kOk;
}

struct VerifyArgs {
  std::string file;
  int d = -1;
  int n = -1;
  std::string suite = "all";
  bool json = false;
};

int run_verify(const VerifyArgs& a) {
  const auto suite = parse_suite(a.suite);
  if (!suite) throw UsageError("unknown suite '" + a.suite + "'");
  SuiteInput in;
  in.options = step_options();
  if (!a.file.empty()) {
    const auto doc = load_document(a.file);
    in.d = doc.d;
    in.n = doc.n;
    in.family = doc.family;
    in.realization = doc.vertices;
  } else {
    if (a.d < 0 || a.n < 0) throw UsageError("verify needs FILE or --d and --n");
    in.d = a.d;
    in.n = a.n;
  }
  if (in.d < 3 || in.n < in.d) throw UsageError("verify needs n >= d >= 3");
  const auto reports = run_suite(in, *suite);
  if (a.json) {
    std::cout << to_json(reports).dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      std::cout << r.name << ": " << to_string(r.verdict);
      for (const auto& note : r.notes) std::cout << "  [" << note << ']';
      std::cout << '\n';
      for (const auto& w : r.witnesses) {
        std::cout << "  witness: " << w.what;
        for (const auto& s : w.sets) std::cout << ' ' << s;
        std::cout << '\n';
      }
    }
  }
  return all_ok(reports) ? kOk : kCheckFailed;
}

int run_realize(int d, int n, const std::string& out) {
  const auto real = realize_braxtope(d, n, step_options());
  const auto hull = hull_facets(real);
  const bool verified = hull.same_facets(braxtope_facets(d, n));
  PolytopeDocument doc;
  doc.kind = "braxtope";
  doc.d = d;
  doc.n = n;
  doc.family = braxtope_facets(d, n);
  doc.vertices = real;
  const std::string summary = std::to_string(real.points.size()) + " points, " +
                              (verified ? "oracle-verified" : "ORACLE MISMATCH") + ", " +
                              std::to_string(hull.size()) + " facets";
  if (out.empty()) {
    std::cout << to_json(doc).dump(2) << '\n';
    std::cerr << summary << '\n';
  } else {
    write_output(out, to_json(doc).dump(2));
    std::cout << summary << '\n';
  }
  return verified ? kOk : kCheckFailed;
}

int run_triangulate(int d, int n, bool check_shallow, bool as_json) {
  const auto delta = pulling_triangulation(d, n);
  const auto cert = shelling_check(delta);
  std::optional<ShallowResult> shallow;
  if (check_shallow) shallow = shallow_check(delta, build_lattice(braxtope_facets(d, n)));
  if (as_json) {
    json simplices = json::array();
    for (const auto& s : delta.facets) simplices.push_back(to_json(s));
    json out = {{"d", d}, {"n", n}, {"simplices", simplices}, {"shelling", to_json(cert)}};
    if (cert.valid) out["h"] = to_json(shelling_h(cert, d + 1));
    if (shallow) {
      out["shallow"] = shallow->shallow;
      if (shallow->witness) out["shallow_witness"] = to_json(*shallow->witness);
    }
    std::cout << out.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < delta.facets.size(); ++i) {
      std::cout << "J_" << i + 1 << " = " << delta.facets[i] << '\n';
    }
    if (cert.valid) std::cout << tuple_line("h", shelling_h(cert, d + 1).values) << '\n';
    if (shallow) {
      std::cout << "shallow: " << (shallow->shallow ? "true" : "false");
      if (shallow->witness) std::cout << " (witness " << *shallow->witness << ')';
      std::cout << '\n';
    }
  }
  if (!cert.valid) return kCheckFailed;
  return shallow && !shallow->shallow ? kCheckFailed : kOk;
}

int run_shell(const std::string& file, bool as_json) {
  const auto doc = load_document(file);
  const auto lat = build_lattice(doc.family);
  const auto rep = colex_shelling_props(lat, doc.family);
  if (as_json) {
    std::cout << to_json(rep).dump(2) << '\n';
  } else {
    for (std::size_t j = 0; j < rep.steps.size(); ++j) {
      const auto& s = rep.steps[j];
      std::cout << "F_" << j + 1 << " = " << s.facet << "  G = ";
      if (s.unique_minimal) {
        std::cout << s.restriction();
      } else {
        std::cout << "none (" << s.minimal_new_faces.size() << " minimal faces)";
      }
      std::cout << "  simplex: " << (s.minimal_is_simplex ? "yes" : "no")
                << "  quotient simplex: " << (s.quotient_is_simplex ? "yes" : "no") << '\n';
    }
    std::cout << "colex shelling: " << (rep.ok ? "valid" : "fails property (" + rep.failed_property + ")") << '\n';
  }
  return rep.ok ? kOk : kCheckFailed;
}

int run_export(const std::string& file, const std::string& format, const std::string& out) {
  const auto doc = load_document(file);
  if (format == "json") {
    write_output(out, to_json(doc).dump(2));
  } else if (format == "incidence") {
    std::ostringstream os;
    const auto order = colex_order(doc.family);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int v = 0; v <= doc.n; ++v) os << (v ? " " : "") << (order[i].contains(v) ? 1 : 0);
      if (i + 1 < order.size()) os << '\n';
    }
    write_output(out, os.str());
  } else {
    throw UsageError("unknown format '" + format + "'");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"brax: braxtopes, their face lattices and machine checks"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a facet family document");
  gen_cmd->add_option("kind", gen.kind, "braxtope | multiplex | cyclic | rd-braxtope")->required();
  gen_cmd->add_option("--d", gen.d, "dimension")->required();
  gen_cmd->add_option("--n", gen.n, "largest vertex index")->required();
  gen_cmd->add_option("--r", gen.r, "r for rd-braxtope");
  gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "print invariants of a document");
  analyze_cmd->add_option("file", analyze.file)->required();
  analyze_cmd->add_flag("--fvector", analyze.fvector);
  analyze_cmd->add_flag("--flagvector", analyze.flagvector);
  analyze_cmd->add_flag("--hvector", analyze.hvector);
  analyze_cmd->add_flag("--compare-reference", analyze.compare);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run verification checks");
  verify_cmd->add_option("file", verify.file);
  verify_cmd->add_option("--d", verify.d);
  verify_cmd->add_option("--n", verify.n);
  verify_cmd->add_option("--suite", verify.suite, "all | face-structure | braxial | shelling | geometry | conjectures");
  verify_cmd->add_flag("--json", verify.json);

  int rd = -1, rn = -1;
  std::string realize_out;
  auto* realize_cmd = app.add_subcommand("realize", "exact rational realization of Q^{d,n}");
  realize_cmd->add_option("--d", rd)->required();
  realize_cmd->add_option("--n", rn)->required();
  realize_cmd->add_option("--out", realize_out);

  int td = -1, tn = -1;
  bool check_shallow = false, tri_json = false;
  auto* tri_cmd = app.add_subcommand("triangulate", "pulling triangulation of Q^{d,n} at x_0");
  tri_cmd->add_option("--d", td)->required();
  tri_cmd->add_option("--n", tn)->required();
  tri_cmd->add_flag("--check-shallow", check_shallow);
  tri_cmd->add_flag("--json", tri_json);

  std::string shell_file;
  bool colex = false, shell_json = false;
  auto* shell_cmd = app.add_subcommand("shell", "colex shelling of a document's facets");
  shell_cmd->add_option("file", shell_file)->required();
  shell_cmd->add_flag("--colex", colex, "use colex order (the only supported order)");
  shell_cmd->add_flag("--json", shell_json);

  std::string export_file, format = "json", export_out;
  auto* export_cmd = app.add_subcommand("export", "re-emit a document");
  export_cmd->add_option("file", export_file)->required();
  export_cmd->add_option("--format", format, "json | incidence");
  export_cmd->add_option("--out", export_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*analyze_cmd) return run_analyze(analyze);
    if (*verify_cmd) return run_verify(verify);
    if (*realize_cmd) return run_realize(rd, rn, realize_out);
    if (*tri_cmd) return run_triangulate(td, tn, check_shallow, tri_json);
    if (*shell_cmd) return run_shell(shell_file, shell_json);
    if (*export_cmd) return run_export(export_file, format, export_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const DocumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const LatticeError& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const GeometryError& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kBadInput;
}
