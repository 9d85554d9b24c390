#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bdcluster/json_io.hpp"

using namespace bdc;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  int n = 0;
  int alpha = 0;
  int beta = 0;
  bool sl = false;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--n", c.n, "matrix size")->required();
  cmd->add_option("--alpha", c.alpha, "root mapped by the triple")->required();
  cmd->add_option("--beta", c.beta, "image root")->required();
  cmd->add_flag("--sl", c.sl, "drop the determinant function");
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
}

BDTriple triple_from(const Common& c) {
  BDTriple t = make_triple(c.n, c.alpha, c.beta, c.sl ? GroupMode::SL : GroupMode::GL);
  if (t.transposed) {
    std::cerr << "note: alpha > beta, using the transposed triple alpha=" << t.alpha << " beta=" << t.beta << "\n";
  }
  return t;
}

Label parse_label(const std::string& text, int n, GroupMode mode) {
  static const std::regex re(R"(\s*\(?\s*(\d+)\s*,\s*(\d+)\s*\)?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw InvalidInput("cannot parse label '" + text + "'");
  Label l{std::stoi(m[1]), std::stoi(m[2])};
  if (l.row < 1 || l.row > n || l.col < 1 || l.col > n) throw InvalidInput("label " + l.to_string() + " outside the grid");
  if (mode == GroupMode::SL && l == Label{1, 1}) throw InvalidInput("label (1,1) is absent in SL mode");
  return l;
}

std::vector<Label> parse_sequence(const std::string& text, int n, GroupMode mode) {
  static const std::regex item(R"(\(\s*\d+\s*,\s*\d+\s*\))");
  std::vector<Label> out;
  for (std::sregex_iterator it(text.begin(), text.end(), item), end; it != end; ++it) {
    out.push_back(parse_label(it->str(), n, mode));
  }
  std::string stripped = std::regex_replace(text, item, "");
  if (stripped.find_first_not_of(" ,;") != std::string::npos || out.empty()) {
    throw InvalidInput("cannot parse sequence '" + text + "'");
  }
  return out;
}

void print_cluster_text(const std::vector<ClusterFunction>& cluster) {
  for (const auto& f : cluster) {
    std::cout << f.label.to_string() << " " << (f.frozen ? "frozen" : "mutable") << " " << to_string(f.kind) << " "
              << f.value.to_string() << "\n";
  }
}

void print_report_text(const VerificationReport& r) {
  std::cout << r.check << " n=" << r.triple.n << " alpha=" << r.triple.alpha << " beta=" << r.triple.beta << ": "
            << (r.passed() ? "PASS" : "FAIL") << " (" << r.seconds << " s)\n";
  for (const auto& [k, v] : r.details) std::cout << "  " << k << ": " << v << "\n";
  for (const auto& w : r.witnesses) {
    std::cout << "  witness";
    for (Label l : w.labels) std::cout << " " << l.to_string();
    std::cout << " expected " << w.expected << ", got " << w.actual;
    if (!w.note.empty()) std::cout << " [" << w.note << "]";
    std::cout << "\n";
  }
}

int emit_reports(std::vector<VerificationReport> reports, const std::string& format, bool as_array, bool no_timing) {
  if (no_timing) {
    for (auto& r : reports) r.seconds = 0;
  }
  bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  if (format == "text") {
    for (const auto& r : reports) print_report_text(r);
  } else if (as_array) {
    Json out = Json::array();
    for (const auto& r : reports) out.push_back(to_json(r));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << to_json(reports.front()).dump(2) << "\n";
  }
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exotic cluster structures on SL_n and GL_n"};
  app.require_subcommand(1);

  Common common;
  bool standard = false;
  bool dot = false;
  std::string f_label, g_label, sequence, suite, fault_name;
  bool inject = false;
  bool zero_r0 = false;
  bool no_timing = false;

  auto* seed_cmd = app.add_subcommand("seed", "print the initial extended cluster");
  add_common(seed_cmd, common);
  seed_cmd->add_flag("--standard", standard, "print the standard cluster instead");

  auto* quiver_cmd = app.add_subcommand("quiver", "print the quiver");
  add_common(quiver_cmd, common);
  quiver_cmd->add_flag("--dot", dot, "emit Graphviz DOT");
  quiver_cmd->add_flag("--standard", standard, "print the standard quiver instead");

  auto* bracket_cmd = app.add_subcommand("bracket", "bracket of two cluster functions");
  add_common(bracket_cmd, common);
  bracket_cmd->add_option("--f", f_label, "first label i,j")->required();
  bracket_cmd->add_option("--g", g_label, "second label i,j")->required();
  bracket_cmd->add_flag("--standard", standard, "use the standard bracket");

  auto* mutate_cmd = app.add_subcommand("mutate", "apply a mutation sequence to the initial seed");
  add_common(mutate_cmd, common);
  mutate_cmd->add_option("--seq", sequence, "labels such as \"(2,1),(2,2)\"")->required();

  auto* check_cmd = app.add_subcommand("check", "run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  check_cmd->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suites));
  add_common(check_cmd, common);
  check_cmd->add_flag("--inject-fault", inject, "corrupt the input with the suite's negative control");
  check_cmd->add_option("--fault", fault_name, "corrupt the input with a named fault")
      ->check(CLI::IsMember({"drop-term", "zero-r0", "zero-exchange", "extra-frozen"}));
  check_cmd->add_flag("--no-timing", no_timing, "report zero seconds for byte-stable output");

  auto* cybe_cmd = app.add_subcommand("cybe", "check the classical Yang-Baxter equation");
  add_common(cybe_cmd, common);
  cybe_cmd->add_flag("--standard", standard, "use the standard r-matrix");
  cybe_cmd->add_flag("--zero-r0", zero_r0, "replace r0 by zero");
  cybe_cmd->add_flag("--no-timing", no_timing, "report zero seconds for byte-stable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    const std::string& fmt = common.format;
    if (seed_cmd->parsed()) {
      BDTriple t = triple_from(common);
      std::vector<ClusterFunction> cluster = standard ? standard_cluster(t.n, t.mode) : initial_cluster(t);
      if (fmt == "text") {
        print_cluster_text(cluster);
      } else {
        std::cout << to_json(cluster).dump(2) << "\n";
      }
      return kExitPass;
    }
    if (quiver_cmd->parsed()) {
      BDTriple t = triple_from(common);
      Quiver q = standard ? standard_quiver(t.n, t.mode) : bd_quiver(t);
      if (dot) {
        std::cout << to_dot(q);
      } else if (fmt == "text") {
        for (const auto& [arc, w] : q.arcs()) {
          std::cout << arc.first.to_string() << " -> " << arc.second.to_string() << " " << w << "\n";
        }
      } else {
        std::cout << to_json(q).dump(2) << "\n";
      }
      return kExitPass;
    }
    if (bracket_cmd->parsed()) {
      BDTriple t = triple_from(common);
      Label a = parse_label(f_label, t.n, t.mode), b = parse_label(g_label, t.n, t.mode);
      std::vector<ClusterFunction> cluster = initial_cluster(t);
      const Poly& f = find_function(cluster, a).value;
      const Poly& g = find_function(cluster, b).value;
      RPlusOperator op = standard ? RPlusOperator::standard(t) : RPlusOperator::exotic(t);
      Poly br = sklyanin_bracket(f, g, op);
      auto w = poisson_coefficient(f, g, br);
      if (fmt == "text") {
        std::cout << "bracket: " << br.to_string() << "\n";
        std::cout << "omega: " << (w ? rational_to_string(*w) : "not log canonical") << "\n";
      } else {
        Json out{{"f", to_json(a)}, {"g", to_json(b)}, {"bracket", standard ? "standard" : "exotic"},
                 {"value", br.to_string()}};
        out["omega"] = w ? Json(rational_to_string(*w)) : Json(nullptr);
        std::cout << out.dump(2) << "\n";
      }
      return kExitPass;
    }
    if (mutate_cmd->parsed()) {
      BDTriple t = triple_from(common);
      std::vector<Label> seq = parse_sequence(sequence, t.n, t.mode);
      Seed s = initial_seed(t);
      for (Label k : seq) {
        try {
          s = mutate_seed(s, k).seed;
        } catch (const NotLaurentPolynomial& e) {
          std::cerr << "error: " << e.what() << "\nnumerator: " << e.numerator_text << "\n";
          return kExitFail;
        }
      }
      if (fmt == "text") {
        print_cluster_text(s.cluster);
      } else {
        std::cout << to_json(s).dump(2) << "\n";
      }
      return kExitPass;
    }
    if (check_cmd->parsed()) {
      BDTriple t = triple_from(common);
      auto fault_for = [&](const std::string& name) {
        if (!fault_name.empty()) return *parse_fault(fault_name);
        return inject ? default_fault(name) : Fault::None;
      };
      std::vector<VerificationReport> reports;
      if (suite != "all") {
        reports.push_back(run_check(suite, make_fixture(t, fault_for(suite))));
        return emit_reports(reports, fmt, false, no_timing);
      }
      if (!inject && fault_name.empty()) {
        reports = check_all(make_fixture(t));
      } else {
        for (const auto& name : suite_names()) {
          if (name != "somega") reports.push_back(run_check(name, make_fixture(t, fault_for(name))));
        }
      }
      return emit_reports(reports, fmt, true, no_timing);
    }
    if (cybe_cmd->parsed()) {
      BDTriple t = triple_from(common);
      std::vector<VerificationReport> reports{check_cybe(t, standard, zero_r0)};
      return emit_reports(reports, fmt, false, no_timing);
    }
  } catch (const InvalidTriple& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const FrozenDirection& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
