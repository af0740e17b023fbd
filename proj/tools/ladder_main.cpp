// Command-line front end. Talks to the library only through ladder.h.

#include "ladder/ladder.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int code;
  std::string message;
};

struct ElementDeleter {
  void operator()(ladder_element* e) const { ladder_element_free(e); }
};
using Element = std::unique_ptr<ladder_element, ElementDeleter>;

struct Options {
  bool json = false;
};

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

// "-" reads standard input; anything else is taken literally.
std::string element_source(const std::string& arg) {
  if (arg != "-") return arg;
  std::string text = slurp(std::cin);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

std::string file_source(const std::string& path) {
  if (path == "-") return slurp(std::cin);
  std::ifstream in(path);
  if (!in) throw Failure{kExitUsage, "cannot open '" + path + "'"};
  return slurp(in);
}

void check(ladder_status status) {
  if (status == LADDER_OK || status == LADDER_FAIL) return;
  const std::string detail = ladder_last_error();
  throw Failure{kExitUsage, detail.empty() ? ladder_status_name(status) : detail};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  ladder_string_free(s);
  return out;
}

Element parse(const std::string& arg, std::optional<ladder_kind> kind = std::nullopt) {
  ladder_element* raw = nullptr;
  const std::string text = element_source(arg);
  check(kind ? ladder_parse_kind(text.c_str(), *kind, &raw) : ladder_parse(text.c_str(), &raw));
  return Element(raw);
}

std::string text_of(const ladder_element* e) {
  char* s = nullptr;
  check(ladder_to_text(e, &s));
  return take(s);
}

Json json_of(const ladder_element* e) {
  char* s = nullptr;
  check(ladder_to_json(e, &s));
  return Json::parse(take(s));
}

Json envelope(const char* status, const std::string& summary, Json payload) {
  return Json{{"schema", 1}, {"status", status}, {"summary", summary}, {"payload", std::move(payload)}, {"counterexample", nullptr}};
}

int print_element(const Options& opt, const ladder_element* e) {
  if (opt.json)
    std::cout << envelope("value", text_of(e), json_of(e)).dump(2) << "\n";
  else
    std::cout << text_of(e) << "\n";
  return kExitPass;
}

int print_value(const Options& opt, const std::string& text, Json payload) {
  if (opt.json)
    std::cout << envelope("value", text, std::move(payload)).dump(2) << "\n";
  else
    std::cout << text << "\n";
  return kExitPass;
}

// Renders a report string produced by the library and maps its status to an
// exit code.
int print_report(const Options& opt, ladder_status status, char* raw) {
  check(status);
  const Json report = Json::parse(take(raw));
  if (opt.json) {
    std::cout << report.dump(2) << "\n";
  } else {
    const auto& payload = report["payload"];
    if (payload.is_object() && payload.contains("items")) {
      for (const auto& item : payload["items"]) {
        std::cout << (item["status"] == "pass" ? "PASS  " : "FAIL  ") << item["name"].get<std::string>() << " ("
                  << item["cases"].get<std::size_t>() << " cases)";
        if (item["status"] == "fail") std::cout << "\n      " << item["counterexample"].get<std::string>();
        std::cout << "\n";
      }
    }
    std::cout << report["summary"].get<std::string>() << "\n";
    if (report["status"] == "fail" && report["counterexample"].is_string() && !payload.contains("items"))
      std::cout << "counterexample: " << report["counterexample"].get<std::string>() << "\n";
  }
  return report["status"] == "fail" ? kExitFail : kExitPass;
}

template <class F>
int with_report(const Options& opt, F&& call) {
  char* raw = nullptr;
  const ladder_status status = call(&raw);
  return print_report(opt, status, raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the ladder insertion-elimination Lie algebra"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(ladder_version()));

  Options opt;
  app.add_flag("--json", opt.json, "Emit JSON reports")->configurable(false);

  int code = kExitPass;
  std::function<void()> action;

  // Element verbs.
  std::string a, b;
  auto* bracket = app.add_subcommand("bracket", "Bracket two elements of the same kind");
  bracket->add_option("a", a, "First element (or - for stdin)")->required();
  bracket->add_option("b", b, "Second element")->required();
  bracket->callback([&] {
    action = [&] {
      auto x = parse(a), y = parse(b);
      ladder_element* raw = nullptr;
      check(ladder_bracket(x.get(), y.get(), &raw));
      code = print_element(opt, Element(raw).get());
    };
  });

  auto* degree = app.add_subcommand("degree", "Degree n-m of a homogeneous element");
  degree->add_option("element", a, "Element (or -)")->required();
  degree->callback([&] {
    action = [&] {
      auto x = parse(a, LADDER_KIND_LIE);
      int64_t d = 0;
      int homogeneous = 0;
      check(ladder_degree(x.get(), &d, &homogeneous));
      if (homogeneous)
        code = print_value(opt, std::to_string(d), Json{{"degree", d}, {"homogeneous", true}});
      else
        code = print_value(opt, "not homogeneous", Json{{"degree", nullptr}, {"homogeneous", false}});
    };
  });

  std::uint32_t n = 0, m = 0, k = 0, p = 0;
  auto* decompose = app.add_subcommand("decompose", "Write Z[n,m] through Z[n,0], Z[0,m] and a correction");
  decompose->add_option("--n", n)->required();
  decompose->add_option("--m", m)->required();
  decompose->callback([&] {
    action = [&] { code = with_report(opt, [&](char** r) { return ladder_decompose(n, m, r); }); };
  });

  auto* act = app.add_subcommand("act", "Apply a Lie element to a ladder polynomial");
  act->add_option("element", a, "Lie element")->required();
  act->add_option("poly", b, "Ladder polynomial, e.g. t[2]^2*t[1]")->required();
  act->callback([&] {
    action = [&] {
      auto x = parse(a, LADDER_KIND_LIE), y = parse(b, LADDER_KIND_POLY);
      ladder_element* raw = nullptr;
      check(ladder_act(x.get(), y.get(), &raw));
      code = print_element(opt, Element(raw).get());
    };
  });

  auto* to_e = app.add_subcommand("to-e", "Express a Lie element in matrix units E[i,j]");
  to_e->add_option("element", a, "Lie element")->required();
  to_e->callback([&] {
    action = [&] {
      auto x = parse(a, LADDER_KIND_LIE);
      ladder_element* raw = nullptr;
      const ladder_status status = ladder_to_e(x.get(), &raw);
      check(status);
      if (status == LADDER_FAIL) {
        const std::string why = ladder_last_error();
        if (opt.json) {
          Json r = envelope("fail", why, nullptr);
          r["counterexample"] = text_of(x.get());
          std::cout << r.dump(2) << "\n";
        } else {
          std::cout << why << "\n";
        }
        code = kExitFail;
        return;
      }
      Element g(raw);
      char* trace = nullptr;
      check(ladder_trace(g.get(), &trace));
      const std::string tr = take(trace);
      if (opt.json) {
        Json payload = json_of(g.get());
        payload["trace"] = tr;
        std::cout << envelope("value", text_of(g.get()), payload).dump(2) << "\n";
      } else {
        std::cout << text_of(g.get()) << "\n";
      }
      code = kExitPass;
    };
  });

  auto* from_e = app.add_subcommand("from-e", "Embed a gl_+ element as a Lie element");
  from_e->add_option("element", a, "Element in E[i,j]")->required();
  from_e->callback([&] {
    action = [&] {
      auto x = parse(a, LADDER_KIND_GL);
      ladder_element* raw = nullptr;
      check(ladder_from_e(x.get(), &raw));
      code = print_element(opt, Element(raw).get());
    };
  });

  auto* project = app.add_subcommand("project", "Project a Lie element to the quotient C");
  project->add_option("element", a, "Lie element")->required();
  project->callback([&] {
    action = [&] {
      auto x = parse(a, LADDER_KIND_LIE);
      ladder_element* raw = nullptr;
      check(ladder_project(x.get(), &raw));
      code = print_element(opt, Element(raw).get());
    };
  });

  auto* section = app.add_subcommand("section", "Lift a quotient element C[d] back to generators");
  section->add_option("element", a, "Quotient element")->required();
  section->callback([&] {
    action = [&] {
      auto x = parse(a, LADDER_KIND_C);
      ladder_element* raw = nullptr;
      check(ladder_section(x.get(), &raw));
      code = print_element(opt, Element(raw).get());
    };
  });

  // Extension.
  std::uint32_t bound = 4;
  std::string mutation;
  auto* extension = app.add_subcommand("extension", "Extension data of gl_+ by the quotient");
  extension->require_subcommand(1);
  auto* ext_verify = extension->add_subcommand("verify", "Check the cocycle conditions and the reconstruction");
  ext_verify->add_option("--bound", bound, "Window bound")->check(CLI::PositiveNumber);
  ext_verify->add_option("--mutation", mutation, "Run against a deliberately broken rule set");
  ext_verify->callback([&] {
    action = [&] {
      code = with_report(opt, [&](char** r) { return ladder_extension_verify(bound, mutation.c_str(), r); });
    };
  });
  auto* ext_obstruct = extension->add_subcommand("obstruct", "Obstruction to splitting for a graded map b");
  ext_obstruct->add_option("--bplus", a, "b(C[1]), supported on E[h+1,h]")->required();
  ext_obstruct->add_option("--bminus", b, "b(C[-1]), supported on E[k,k+1]")->required();
  ext_obstruct->callback([&] {
    action = [&] {
      auto x = parse(a, LADDER_KIND_GL), y = parse(b, LADDER_KIND_GL);
      code = with_report(opt, [&](char** r) { return ladder_extension_obstruct(x.get(), y.get(), r); });
    };
  });
  std::uint32_t top = 0;
  auto* ext_infeasible = extension->add_subcommand("infeasible", "Certificate that no splitting exists up to E[L+1,L+1]");
  ext_infeasible->add_option("--L", top)->required();
  ext_infeasible->callback([&] {
    action = [&] { code = with_report(opt, [&](char** r) { return ladder_extension_infeasible(top, r); }); };
  });
  std::uint32_t support = 3;
  int coeff = 2;
  auto* ext_grid = extension->add_subcommand("grid", "Exhaustive search for a graded splitting map");
  ext_grid->add_option("--support", support, "Largest E index in b");
  ext_grid->add_option("--coeff", coeff, "Coefficients range over [-coeff, coeff]")->check(CLI::NonNegativeNumber);
  ext_grid->callback([&] {
    action = [&] { code = with_report(opt, [&](char** r) { return ladder_extension_grid(support, coeff, r); }); };
  });

  // Words.
  std::string alphabet_path;
  auto alphabet = [&] { return file_source(alphabet_path); };
  auto* words = app.add_subcommand("words", "Word generators Z{u|v} over a letter alphabet");
  words->require_subcommand(1);
  auto* w_bracket = words->add_subcommand("bracket", "Bracket two word-generator combinations");
  w_bracket->add_option("--alphabet", alphabet_path, "Alphabet JSON file (or -)")->required();
  w_bracket->add_option("a", a)->required();
  w_bracket->add_option("b", b)->required();
  w_bracket->callback([&] {
    action = [&] {
      const auto alpha = alphabet();
      const auto x = element_source(a), y = element_source(b);
      code = with_report(opt, [&](char** r) { return ladder_words_bracket(alpha.c_str(), x.c_str(), y.c_str(), r); });
    };
  });
  auto* w_act = words->add_subcommand("act", "Apply a word generator to a word");
  w_act->add_option("--alphabet", alphabet_path)->required();
  w_act->add_option("generator", a)->required();
  w_act->add_option("word", b, "Letters separated by '.'; empty for the empty word")->required();
  w_act->callback([&] {
    action = [&] {
      const auto alpha = alphabet();
      const auto x = element_source(a);
      code = with_report(opt, [&](char** r) { return ladder_words_act(alpha.c_str(), x.c_str(), b.c_str(), r); });
    };
  });
  auto* w_iota = words->add_subcommand("iota", "Image of Z[n,m] among word generators");
  w_iota->add_option("--alphabet", alphabet_path)->required();
  w_iota->add_option("--n", n)->required();
  w_iota->add_option("--m", m)->required();
  w_iota->callback([&] {
    action = [&] {
      const auto alpha = alphabet();
      code = with_report(opt, [&](char** r) { return ladder_words_iota(alpha.c_str(), n, m, r); });
    };
  });
  auto* w_iota_h = words->add_subcommand("iota-h", "Image of the ladder t[k] among words");
  w_iota_h->add_option("--alphabet", alphabet_path)->required();
  w_iota_h->add_option("--k", k)->required();
  w_iota_h->callback([&] {
    action = [&] {
      const auto alpha = alphabet();
      code = with_report(opt, [&](char** r) { return ladder_words_iota_h(alpha.c_str(), k, r); });
    };
  });
  auto* w_check = words->add_subcommand("check", "Compare both sides of the iota compatibility");
  w_check->add_option("--alphabet", alphabet_path)->required();
  w_check->add_option("--n", n)->required();
  w_check->add_option("--m", m)->required();
  w_check->add_option("--k", k)->required();
  w_check->callback([&] {
    action = [&] {
      const auto alpha = alphabet();
      code = with_report(opt, [&](char** r) { return ladder_words_check_iota(alpha.c_str(), n, m, k, r); });
    };
  });

  // Dyson-Schwinger.
  std::uint32_t order = 4;
  auto* dse = app.add_subcommand("dse", "Linear Dyson-Schwinger fixpoint in words");
  dse->require_subcommand(1);
  auto* dse_exp = dse->add_subcommand("expand", "Expand to a given alpha-order");
  dse_exp->add_option("--alphabet", alphabet_path)->required();
  dse_exp->add_option("--order", order);
  dse_exp->callback([&] {
    action = [&] {
      const auto alpha = alphabet();
      code = with_report(opt, [&](char** r) { return ladder_dse_expand(alpha.c_str(), order, r); });
    };
  });

  // Cohomology.
  std::string algebra = "gl";
  bool with_y = false;
  auto* coh = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology with trivial coefficients");
  coh->require_subcommand(1);
  auto* betti = coh->add_subcommand("betti", "Betti numbers of gl(n) or of an algebra given in JSON");
  betti->add_option("--algebra", algebra, "gl, or a structure-constant JSON file");
  betti->add_option("--n", n, "Size for --algebra gl");
  betti->callback([&] {
    action = [&] {
      if (algebra == "gl") {
        code = with_report(opt, [&](char** r) { return ladder_cohomology_betti_gl(n, r); });
      } else {
        const auto src = file_source(algebra);
        code = with_report(opt, [&](char** r) { return ladder_cohomology_betti_json(src.c_str(), r); });
      }
    };
  });
  auto* h1 = coh->add_subcommand("h1", "Degree functionals vanishing on brackets in the window");
  h1->add_option("--bound", bound)->check(CLI::PositiveNumber);
  h1->add_flag("--with-y", with_y, "Adjoin the grading derivation Y");
  h1->callback([&] {
    action = [&] { code = with_report(opt, [&](char** r) { return ladder_cohomology_h1(bound, with_y, r); }); };
  });
  auto* stability = coh->add_subcommand("stability", "Compare b_p(gl(n)) and b_p(gl(n-1))");
  stability->add_option("--n", n)->required();
  stability->add_option("--p", p)->required();
  stability->callback([&] {
    action = [&] { code = with_report(opt, [&](char** r) { return ladder_cohomology_stability(n, p, r); }); };
  });

  // Full suite.
  bool list = false;
  auto* verify = app.add_subcommand("verify", "Run every invariant suite");
  verify->add_option("--bound", bound, "Window bound")->check(CLI::PositiveNumber);
  verify->add_option("--mutation", mutation, "Run against a deliberately broken rule set");
  verify->add_flag("--list-mutations", list, "Print accepted mutation names");
  verify->callback([&] {
    action = [&] {
      if (list) {
        char* raw = nullptr;
        check(ladder_mutation_names(&raw));
        const Json names = Json::parse(take(raw));
        if (opt.json)
          std::cout << names.dump() << "\n";
        else
          for (const auto& name : names) std::cout << name.get<std::string>() << "\n";
        code = kExitPass;
        return;
      }
      code = with_report(opt, [&](char** r) { return ladder_verify(bound, mutation.c_str(), r); });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (action) action();
  } catch (const Failure& f) {
    std::cerr << "ladder: " << f.message << "\n";
    return f.code;
  } catch (const Json::exception& e) {
    std::cerr << "ladder: malformed report: " << e.what() << "\n";
    return kExitUsage;
  }
  return code;
}
