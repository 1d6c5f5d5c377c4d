#include "hopfpi/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hopfpi/document.hpp"

namespace hopfpi {
namespace {

using nlohmann::json;

struct NamedCheck {
  std::string name;
  CheckReport rep;
};

// One command's outcome: echo, named check summaries, free-form notes, and
// timing.  The text and JSON renderings carry identical verdicts.
struct Report {
  std::string command;
  std::vector<NamedCheck> checks;
  std::vector<std::string> notes;
  long long elapsed_ms = 0;
  int exit_code = 0;

  bool pass() const {
    for (const auto& c : checks) {
      if (!c.rep.pass()) return false;
    }
    return true;
  }
};

void render_text(const Report& r, std::ostream& out) {
  out << "command: " << r.command << "\n";
  for (const auto& c : r.checks) {
    out << "check " << c.name << ": " << (c.rep.pass() ? "pass" : "FAIL")
        << " (" << c.rep.axioms_checked().size() << " axioms, "
        << c.rep.total_failures() << " failures)\n";
    if (!c.rep.pass()) out << c.rep.to_text();
  }
  for (const auto& n : r.notes) out << n << "\n";
  out << "elapsed: " << r.elapsed_ms << " ms\n";
  out << "exit: " << r.exit_code << "\n";
}

void render_json(const Report& r, std::ostream& out) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back(json{{"axioms_checked", c.rep.axioms_checked()},
                          {"failure_counts", c.rep.failure_counts()},
                          {"name", c.name},
                          {"pass", c.rep.pass()},
                          {"total_failures", c.rep.total_failures()}});
  }
  out << json{{"checks", std::move(checks)},
              {"command", r.command},
              {"elapsed_ms", r.elapsed_ms},
              {"exit", r.exit_code},
              {"notes", r.notes}}
             .dump(2)
      << "\n";
}

template <typename T>
const T& expect_kind(const Document& doc, const char* what) {
  if (const T* v = std::get_if<T>(&doc.value)) return *v;
  throw InputError(std::string("expected a ") + what + " document, found " +
                   doc.kind());
}

template <typename T>
std::pair<T, Field> load_kind(const std::string& path, const char* what) {
  Document doc = load_document(path);
  return {expect_kind<T>(doc, what), doc.field};
}

int parse_int_token(const std::string& text) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw InputError("expected an integer, found \"" + text + "\"");
  }
  if (used != text.size()) {
    throw InputError("expected an integer, found \"" + text + "\"");
  }
  return v;
}

FiniteGroup named_group(const std::string& name) {
  if (name == "trivial") return FiniteGroup::trivial();
  if (name == "v4") return FiniteGroup::klein4();
  if (name == "s3") return FiniteGroup::symmetric3();
  if (name == "d4") return FiniteGroup::dihedral4();
  if (name == "q8") return FiniteGroup::quaternion8();
  if (name.size() > 1 && name[0] == 'z') {
    int n = parse_int_token(name.substr(1));
    if (n >= 1) return FiniteGroup::cyclic(n);
  }
  throw InputError("unknown group name \"" + name + "\"");
}

// Grading specs: "trivial", "identity"/"id", "sign" (first half of the
// element list to 0, second half to 1), or an explicit "target:i0,i1,..."
// image table.  The homomorphism law is always verified.
GroupHom parse_deg(const FiniteGroup& g, const std::string& spec) {
  if (spec == "trivial") return GroupHom::trivial(g);
  if (spec == "identity" || spec == "id") return GroupHom::identity(g);
  if (spec == "sign") {
    if (g.size() % 2 != 0) {
      throw InputError("sign grading needs an even-order group");
    }
    std::vector<int> im(g.size());
    for (int i = 0; i < g.size(); ++i) im[i] = i < g.size() / 2 ? 0 : 1;
    return GroupHom(g, FiniteGroup::cyclic(2), im);
  }
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw InputError("unknown grading \"" + spec +
                     "\"; use trivial, identity, sign, or target:i0,i1,...");
  }
  FiniteGroup target = named_group(spec.substr(0, colon));
  std::vector<int> images;
  std::string rest = spec.substr(colon + 1);
  size_t start = 0;
  while (start <= rest.size()) {
    size_t comma = rest.find(',', start);
    if (comma == std::string::npos) comma = rest.size();
    images.push_back(parse_int_token(rest.substr(start, comma - start)));
    start = comma + 1;
  }
  return GroupHom(g, target, images);
}

Field parse_field_name(const std::string& name) {
  if (name == "rational") return Field::rationals();
  if (!name.empty() &&
      name.find_first_not_of("0123456789") == std::string::npos) {
    return Field::prime(std::stoull(name));
  }
  throw InputError("field must be \"rational\" or a prime modulus");
}

CheckFailure plain_failure(const std::string& axiom) {
  CheckFailure f;
  f.axiom = axiom;
  return f;
}

// Coalgebra-map laws for one braiding matrix H_a (x) H_b -> H_b (x) H_a,
// used to demonstrate that a corrupted braiding is caught.
CheckReport check_braiding_matrix(const HopfPiBrace& b, int a0, int b0,
                                  const Mat& c) {
  CheckReport rep;
  Mat lhs = tensor_comult(b.comult[b0], b.comult[a0]) * c;
  Mat rhs = kron(c, c) * tensor_comult(b.comult[a0], b.comult[b0]);
  compare_columns(rep, axioms::kBraidComult, {a0, b0},
                  {b.dim(a0), b.dim(b0)}, lhs, rhs,
                  "Delta(c(x (x) y)) = c(x_1 (x) y_1) (x) c(x_2 (x) y_2)");
  Mat lhs2 = kron(b.counit[b0], b.counit[a0]) * c;
  Mat rhs2 = kron(b.counit[a0], b.counit[b0]);
  compare_columns(rep, axioms::kBraidCounit, {a0, b0},
                  {b.dim(a0), b.dim(b0)}, lhs2, rhs2,
                  "eps(c(x (x) y)) = eps(x) eps(y)");
  return rep;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  // Shared option slots; exactly one leaf subcommand runs per invocation.
  std::string validate_path, input_path, out_path, results_path;
  std::string h_path, k_path, action_path, family_path, split_path;
  std::string group_path, deg_spec, field_name = "rational";
  long long bound = 100000000;
  int nfold = 3;
  bool with_oracle = false, perturb = false, json_mode = false;
  std::function<Report()> runner;
  std::function<Document()> maker;

  CLI::App app{
      "Exact workbench for group-graded Hopf structures.  HOPFPI_THREADS "
      "bounds checker parallelism.",
      "hopfpi"};
  app.require_subcommand(1);

  CLI::App* vcmd =
      app.add_subcommand("validate", "run the full checker suite on a file");
  vcmd->add_option("file", validate_path, "document to check")->required();
  vcmd->add_flag("--json", json_mode, "structured report");
  vcmd->callback([&] {
    runner = [&] {
      Document doc = load_document(validate_path);
      Report r;
      r.checks.push_back(
          {"document (kind " + doc.kind() + ")", validate_document(doc)});
      return r;
    };
  });

  CLI::App* ccmd = app.add_subcommand(
      "construct", "build a derived document, re-validate it, and write it");
  ccmd->require_subcommand(1);
  ccmd->callback([&] {
    runner = [&] {
      Document doc = maker();
      CheckReport rep = validate_document(doc);
      Report r;
      r.checks.push_back({"constructed " + doc.kind(), rep});
      if (rep.pass()) {
        save_document(doc, out_path);
        r.notes.push_back("wrote " + out_path);
      }
      return r;
    };
  });

  auto add_build = [&](const char* name, const char* desc) {
    CLI::App* s = ccmd->add_subcommand(name, desc);
    s->add_option("-o,--output", out_path, "output document path")->required();
    s->add_flag("--json", json_mode, "structured report");
    return s;
  };
  {
    CLI::App* s = add_build("group-algebra", "group algebra of a graded group");
    s->add_option("--group", group_path, "group document")->required();
    s->add_option("--deg", deg_spec, "grading map")->required();
    s->add_option("--field", field_name, "rational or a prime modulus");
    s->callback([&] {
      maker = [&] {
        Document gd = load_document(group_path);
        const FiniteGroup& g = expect_kind<FiniteGroup>(gd, "group");
        return make_document(
            group_algebra(parse_deg(g, deg_spec), parse_field_name(field_name)));
      };
    });
  }

  auto smash_maker = [&](bool pimod) {
    return [&, pimod] {
      auto [h, hf] = load_kind<HopfPiAlgebra>(h_path, "hopf_pi_algebra");
      auto [k, kf] = load_kind<HopfPiAlgebra>(k_path, "hopf_pi_algebra");
      auto [ma, af] = load_kind<ModuleAction>(action_path, "module action");
      if (!(hf == kf) || !(hf == af)) {
        throw InputError("inputs use different scalar fields");
      }
      if (ma.acting_dims != k.space.dims || ma.target_dims != h.space.dims) {
        throw InputError("action dimensions do not match the factors");
      }
      return make_document(pimod ? smash_brace_pimod(h, k, ma.blocks)
                                 : smash_brace_modlike(h, k, ma.blocks));
    };
  };
  for (bool pimod : {true, false}) {
    CLI::App* s = add_build(
        pimod ? "smash-pimod" : "smash-modlike",
        pimod ? "smash brace of a graded algebra with an ordinary module"
              : "smash brace of two graded algebras");
    s->add_option("--left", h_path, "graded acted-on factor (H)")->required();
    s->add_option("--right", k_path, "acting factor (K)")->required();
    s->add_option("--action", action_path, "module-shaped action document")
        ->required();
    s->callback([&, pimod] { maker = smash_maker(pimod); });
  }

  {
    CLI::App* s =
        add_build("aut-brace", "spread a brace over a grading group");
    s->add_option("--input", input_path, "trivially graded brace document")
        ->required();
    s->add_option("--family", family_path, "family-shaped action document")
        ->required();
    s->callback([&] {
      maker = [&] {
        auto [b, bf] = load_kind<HopfPiBrace>(input_path, "brace");
        auto [mf, ff] = load_kind<MapFamily>(family_path, "map family");
        if (!(bf == ff)) throw InputError("inputs use different scalar fields");
        return make_document(aut_indexed_brace(b, mf.group, mf.blocks));
      };
    });
  }

  // Single-input conversions.
  struct Conversion {
    const char* name;
    const char* desc;
    const char* input_desc;
    std::function<Document(const Document&)> fn;
  };
  const std::vector<Conversion> conversions = {
      {"bicrossed", "bicrossed product of a matched pair", "matched pair",
       [](const Document& d) {
         return make_document(
             bicrossed_product(expect_kind<MatchedPair>(d, "matched_pair")));
       }},
      {"brace-to-mp", "matched pair of a brace acting on itself", "brace",
       [](const Document& d) {
         return make_document(
             brace_to_matched_pair(expect_kind<HopfPiBrace>(d, "brace")));
       }},
      {"mp-to-brace", "brace recovered from a self matched pair",
       "matched pair",
       [](const Document& d) {
         return make_document(
             matched_pair_to_brace(expect_kind<MatchedPair>(d, "matched_pair")));
       }},
      {"post-hopf-from-brace", "triangle action carried by a brace", "brace",
       [](const Document& d) {
         return make_document(
             post_hopf_from_brace(expect_kind<HopfPiBrace>(d, "brace")));
       }},
      {"brace-from-post-hopf", "carrier and subadjacent structure as a brace",
       "post-Hopf structure",
       [](const Document& d) {
         return make_document(brace_from_post_hopf(
             expect_kind<PostHopfStructure>(d, "post_hopf")));
       }},
      {"subadjacent", "subadjacent Hopf structure of a triangle action",
       "post-Hopf structure",
       [](const Document& d) {
         return make_document(
             subadjacent(expect_kind<PostHopfStructure>(d, "post_hopf")));
       }},
      {"antipode-rb", "the antipode as an operator", "Hopf document",
       [](const Document& d) {
         return make_document(
             antipode_rb(expect_kind<HopfPiAlgebra>(d, "hopf_pi_algebra")));
       }},
      {"descendent", "deformed Hopf structure of an operator", "operator",
       [](const Document& d) {
         return make_document(
             descendent_hopf(expect_kind<RotaBaxterOperator>(d, "rota_baxter")));
       }},
      {"brace-from-rb", "original and deformed products as a brace",
       "operator",
       [](const Document& d) {
         return make_document(
             brace_from_rb(expect_kind<RotaBaxterOperator>(d, "rota_baxter")));
       }},
  };
  for (const auto& conv : conversions) {
    CLI::App* s = add_build(conv.name, conv.desc);
    s->add_option("--input", input_path,
                  std::string(conv.input_desc) + " document")
        ->required();
    s->callback([&, fn = conv.fn] {
      maker = [&, fn] { return fn(load_document(input_path)); };
    });
  }

  {
    CLI::App* s = add_build("twist-rb",
                            "conjugate an operator by an automorphism family");
    s->add_option("--input", input_path, "operator document")->required();
    s->add_option("--family", family_path, "family-shaped action document")
        ->required();
    s->callback([&] {
      maker = [&] {
        auto [rb, rf] = load_kind<RotaBaxterOperator>(input_path, "rota_baxter");
        auto [mf, ff] = load_kind<MapFamily>(family_path, "map family");
        if (!(rf == ff)) throw InputError("inputs use different scalar fields");
        if (!(mf.group == rb.hopf.group())) {
          throw InputError(
              "twisting family must be indexed by the grading group");
        }
        return make_document(twist_rb(rb, mf.blocks));
      };
    });
  }

  {
    CLI::App* s = add_build("factorization-rb",
                            "operator killing a unit-graded tensor factor");
    s->add_option("--input", input_path, "Hopf document")->required();
    s->add_option("--split", split_path, "factorization document")->required();
    s->callback([&] {
      maker = [&] {
        auto [h, hf] = load_kind<HopfPiAlgebra>(input_path, "hopf_pi_algebra");
        auto [fi, sf] = load_kind<FactorizationInput>(split_path,
                                "factorization");
        if (!(hf == sf)) throw InputError("inputs use different scalar fields");
        return make_document(
            factorization_rb(h, fi.unit_factor, fi.graded_factor));
      };
    });
  }

  {
    CLI::App* s =
        add_build("aut-rb", "spread an operator over a grading group");
    s->add_option("--input", input_path, "trivially graded operator document")
        ->required();
    s->add_option("--family", family_path, "family-shaped action document")
        ->required();
    s->callback([&] {
      maker = [&] {
        auto [rb, rf] = load_kind<RotaBaxterOperator>(input_path, "rota_baxter");
        auto [mf, ff] = load_kind<MapFamily>(family_path, "map family");
        if (!(rf == ff)) throw InputError("inputs use different scalar fields");
        return make_document(aut_indexed_rb(rb, mf.group, mf.blocks));
      };
    });
  }

  CLI::App* ecmd = app.add_subcommand(
      "enumerate-rb", "list every set-level operator on a graded group");
  ecmd->add_option("--group", group_path, "group document")->required();
  ecmd->add_option("--deg", deg_spec, "grading map")->required();
  ecmd->add_option("--bound", bound, "candidate-space cap");
  ecmd->add_flag("--oracle", with_oracle,
                 "also run the unpruned search and compare");
  ecmd->add_option("-o,--output", results_path, "write the results as JSON");
  ecmd->add_flag("--json", json_mode, "structured report");
  ecmd->callback([&] {
    runner = [&] {
      Document gd = load_document(group_path);
      const FiniteGroup& g = expect_kind<FiniteGroup>(gd, "group");
      GroupHom deg = parse_deg(g, deg_spec);
      auto res = enumerate_group_rb(deg, false, bound);
      Report r;
      r.notes.push_back("count: " + std::to_string(res.size()));
      for (const auto& tbl : res) {
        std::string line = "operator:";
        for (int v : tbl) line += " " + std::to_string(v);
        r.notes.push_back(line);
      }
      if (with_oracle) {
        auto naive = enumerate_group_rb(deg, true, bound);
        CheckReport rep;
        rep.note_checked("oracle-agreement",
                         "pruned search equals the exhaustive filter");
        if (naive != res) rep.add_failure(plain_failure("oracle-agreement"));
        r.checks.push_back({"search", rep});
      }
      if (!results_path.empty()) {
        std::ofstream f(results_path, std::ios::binary | std::ios::trunc);
        if (!f) throw InputError("cannot write " + results_path);
        f << json{{"count", res.size()}, {"solutions", res}}.dump(2) << "\n";
        r.notes.push_back("wrote " + results_path);
      }
      return r;
    };
  });

  CLI::App* ycmd =
      app.add_subcommand("ybe", "braiding analysis for a brace document");
  ycmd->add_option("file", input_path, "brace document")->required();
  ycmd->add_option("--n", nfold, "tensor length (2 or 3)");
  ycmd->add_flag("--perturb", perturb,
                 "corrupt one braiding matrix first (debug; must fail)");
  ycmd->add_flag("--json", json_mode, "structured report");
  ycmd->callback([&] {
    runner = [&] {
      Document bd = load_document(input_path);
      const HopfPiBrace& b = expect_kind<HopfPiBrace>(bd, "brace");
      if (nfold != 2 && nfold != 3) throw InputError("--n must be 2 or 3");
      BraidingAnalysis an = analyze_braiding(b, nfold);
      Report r;
      if (an.sigma_to_c) {
        r.notes.push_back("orientation: the intertwiner carries sigma to c");
      }
      if (an.c_to_sigma) {
        r.notes.push_back("orientation: the intertwiner carries c to sigma");
      }
      if (!an.sigma_to_c && !an.c_to_sigma) {
        r.notes.push_back("orientation: none found");
      }
      r.checks.push_back({"braiding", an.report});
      CheckReport orient;
      orient.note_checked("braiding-orientation",
                          "an invertible intertwiner carries one braiding "
                          "to the other");
      if (!an.intertwiner_invertible || !(an.sigma_to_c || an.c_to_sigma)) {
        orient.add_failure(plain_failure("braiding-orientation"));
      }
      r.checks.push_back({"intertwiner", orient});
      if (perturb) {
        int a0 = -1, b0 = -1;
        for (int a = 0; a < b.group().size() && a0 < 0; ++a) {
          for (int bb = 0; bb < b.group().size(); ++bb) {
            if (b.dim(a) > 0 && b.dim(bb) > 0) {
              a0 = a;
              b0 = bb;
              break;
            }
          }
        }
        Mat c = braiding_c(b, a0, b0);
        c.at(0, 0) += Scalar::one(b.field);
        r.checks.push_back(
            {"perturbed braiding", check_braiding_matrix(b, a0, b0, c)});
      }
      return r;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* active = &app;
    while (!active->get_subcommands().empty()) {
      active = active->get_subcommands().front();
    }
    out << active->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }

  std::string echo = "hopfpi";
  for (const auto& a : args) echo += " " + a;

  auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    r = runner();
  } catch (const GateError& e) {
    err << "hypothesis not met: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }
  r.command = echo;
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  r.exit_code = r.pass() ? 0 : 1;
  if (json_mode) {
    render_json(r, out);
  } else {
    render_text(r, out);
  }
  return r.exit_code;
}

}  // namespace hopfpi
