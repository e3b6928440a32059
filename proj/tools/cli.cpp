#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ttk/braid.hpp"
#include "ttk/closed_form.hpp"
#include "ttk/fox.hpp"
#include "ttk/invariants.hpp"
#include "ttk/table.hpp"
#include "ttk/verify.hpp"

namespace ttk::cli {

namespace {

using nlohmann::json;

struct KnotArgs {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::int64_t s = 0;

  [[nodiscard]] TtkParams validated() const { return validate(p, q, r, s); }
};

void add_knot_args(CLI::App* sub, KnotArgs& k, bool s_required = true) {
  sub->add_option("p", k.p, "torus strand count")->required();
  sub->add_option("q", k.q, "torus winding")->required();
  sub->add_option("r", k.r, "number of twisted strands")->required();
  auto* s = sub->add_option("s", k.s, "number of full twists");
  if (s_required) s->required();
}

json poly_json(const LaurentPoly& p) { return json::parse(to_json_text(p)); }

json optional_json(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

json params_json(const TtkParams& k) { return {k.p(), k.q(), k.r(), k.s()}; }

LaurentPoly alexander_by(const TtkParams& k, const std::string& method) {
  if (method == "fox") return alexander_from_presentation(k);
  if (method == "burau") return alexander_from_braid(k);
  return alexander_closed_form(k);
}

int cmd_alex(const KnotArgs& a, const std::string& method, const std::string& format, std::ostream& out) {
  const TtkParams k = a.validated();
  const LaurentPoly delta = alexander_by(k, method);
  if (format == "json") {
    out << json{{"params", params_json(k)}, {"method", method}, {"delta", poly_json(delta)},
                {"text", to_string(delta)}}
               .dump()
        << '\n';
  } else {
    out << to_string(delta) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const KnotArgs& a, const std::string& format, std::ostream& out) {
  const TtkParams k = a.validated();
  const VerificationReport rep = verify_knot(k);
  const std::string mismatch = rep.first_mismatch();
  if (format == "json") {
    out << json{{"params", params_json(k)},
                {"pass", mismatch.empty()},
                {"closed", to_string(rep.closed_form)},
                {"fox", to_string(rep.fox)},
                {"burau", to_string(rep.burau)},
                {"trace_matches", rep.trace_matches},
                {"identity_lemma", rep.identity_lemma},
                {"minor_relations", rep.minor_relations},
                {"unit_at_one", rep.unit_at_one},
                {"palindromic", rep.palindromic},
                {"mismatch", mismatch}}
               .dump(2)
        << '\n';
  } else {
    out << to_string(k) << '\n'
        << "  closed form   " << rep.closed_form << '\n'
        << "  fox calculus  " << rep.fox << '\n'
        << "  burau         " << rep.burau << '\n'
        << "  trace data    " << (rep.trace_matches ? "ok" : "FAIL") << '\n'
        << "  residue ids   " << (rep.identity_lemma ? "ok" : "FAIL") << '\n'
        << "  minor ids     " << (rep.minor_relations ? "ok" : "FAIL") << '\n'
        << "  Delta(1)      " << (rep.unit_at_one ? "ok" : "FAIL") << '\n'
        << "  palindromic   " << (rep.palindromic ? "ok" : "FAIL") << '\n';
    if (mismatch.empty())
      out << "PASS\n";
    else
      out << "FAIL: " << mismatch << '\n';
  }
  return mismatch.empty() ? kExitOk : kExitMismatch;
}

int cmd_modular(const KnotArgs& a, std::ostream& out) {
  const TtkParams k = a.validated();
  out << to_json_text(compute_modular_data(k)) << '\n';
  return kExitOk;
}

int cmd_group(const KnotArgs& a, bool with_matrix, std::ostream& out) {
  const TtkParams k = a.validated();
  const KnotGroup g = presentation_for_ttk(k, compute_modular_data(k));
  out << presentation_text(g.presentation);
  if (with_matrix) out << to_json_text(alexander_matrix(g.presentation, g.abelianization)) << '\n';
  return kExitOk;
}

int cmd_braid(const KnotArgs& a, bool with_matrix, std::ostream& out) {
  const TtkParams k = a.validated();
  const BraidWord b = ttk_braid_word(k);
  out << to_string(b) << '\n';
  if (with_matrix) out << to_json_text(reduced_burau_matrix(b)) << '\n';
  return kExitOk;
}

int cmd_degree(const KnotArgs& a, std::ostream& out) {
  const TtkParams k = a.validated();
  const DegreePrediction pred = predicted_degree(k, compute_modular_data(k));
  out << json{{"params", params_json(k)},
              {"regime", std::string(to_string(pred.regime))},
              {"value", optional_json(pred.value)},
              {"actual", degree_span(alexander_closed_form(k))}}
             .dump()
      << '\n';
  return kExitOk;
}

int cmd_genus(const KnotArgs& a, std::ostream& out) {
  const TtkParams k = a.validated();
  const GenusBounds g = genus_bounds(k);
  out << json{{"params", params_json(k)},
              {"lower", optional_json(g.lower)},
              {"upper", optional_json(g.upper)},
              {"exact", g.exact}}
             .dump()
      << '\n';
  return kExitOk;
}

int cmd_lspace(const KnotArgs& a, std::ostream& out) {
  const TtkParams k = a.validated();
  const LaurentPoly delta = alexander_closed_form(k);
  json witness = nullptr;
  const std::int64_t n = (k.p() - 9) / 2;
  if (k.r() == 3 && k.s() >= 2 && n >= 0 && k.p() == 9 + 2 * n && k.q() == 7 + 2 * n) {
    const LspaceWitness w = lspace_family_witness(n, k.s());
    witness = {{"n", n},
               {"exponent", w.exponent},
               {"shifted_exponent", w.shifted_exponent},
               {"coefficient", w.coefficient.get_str()}};
  }
  out << json{{"params", params_json(k)},
              {"lspace_pass", lspace_coefficient_test(delta)},
              {"alternating", lspace_alternating_test(delta)},
              {"witness", witness}}
             .dump()
      << '\n';
  return kExitOk;
}

struct TableArgs {
  std::int64_t pmax = 20;
  std::int64_t smin = 1;
  std::int64_t smax = 5;
  bool group_by_alex = false;
  std::string out;
  std::string format = "csv";
  unsigned threads = 0;
  double verify_fraction = 0.01;
};

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  const std::vector<TtkParams> grid = enumerate_ttk(a.pmax, a.smin, a.smax);
  TableOptions opts;
  opts.threads = a.threads;
  opts.verify_fraction = a.verify_fraction;
  const TableResult result = tabulate(grid, opts);

  std::vector<CollisionClass> classes;
  if (a.group_by_alex) classes = collision_classes(result.records);

  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out);
    if (!file) {
      err << "error: cannot open " << a.out << " for writing\n";
      return kExitIo;
    }
  }
  std::ostream& sink = a.out.empty() ? out : file;
  if (a.format == "json") {
    write_json(sink, result.records, a.group_by_alex ? &classes : nullptr);
  } else {
    write_csv(sink, result.records);
    if (a.group_by_alex) {
      if (a.out.empty()) {
        out << '\n';
        write_classes_csv(out, classes);
      } else {
        std::ofstream classes_file(a.out + ".classes.csv");
        if (!classes_file) {
          err << "error: cannot open " << a.out << ".classes.csv for writing\n";
          return kExitIo;
        }
        write_classes_csv(classes_file, classes);
      }
    }
  }
  sink.flush();
  if (!sink) {
    err << "error: failed writing the table\n";
    return kExitIo;
  }

  err << result.records.size() << " knots";
  if (a.group_by_alex) err << ", " << classes.size() << " collision classes";
  err << ", " << result.verified << " spot-checked\n";
  for (const auto& f : result.failures) err << "verification failure: " << f << '\n';
  return result.failures.empty() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alexander polynomials and related invariants of twisted torus knots T(p,q;r,s)", "ttk"};
  app.require_subcommand(1);

  std::function<int()> action;
  KnotArgs knot;
  std::string method = "closed";
  std::string format = "text";
  bool with_matrix = false;
  TableArgs table;

  auto* alex = app.add_subcommand("alex", "Alexander polynomial in canonical form");
  add_knot_args(alex, knot);
  alex->add_option("--method", method, "closed | fox | burau")
      ->check(CLI::IsMember({"closed", "fox", "burau"}));
  alex->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  alex->callback([&] { action = [&] { return cmd_alex(knot, method, format, out); }; });

  auto* verify = app.add_subcommand("verify", "Cross-check all three computation routes");
  add_knot_args(verify, knot);
  verify->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  verify->callback([&] { action = [&] { return cmd_verify(knot, format, out); }; });

  auto* modular = app.add_subcommand("modular", "Residue data of (p, q, r) as JSON");
  add_knot_args(modular, knot, false);
  modular->callback([&] { action = [&] { return cmd_modular(knot, out); }; });

  auto* group = app.add_subcommand("group", "Knot group presentation");
  add_knot_args(group, knot);
  group->add_flag("--matrix", with_matrix, "also print the Alexander matrix as JSON");
  group->callback([&] { action = [&] { return cmd_group(knot, with_matrix, out); }; });

  auto* braid = app.add_subcommand("braid", "Defining braid word");
  add_knot_args(braid, knot);
  braid->add_flag("--matrix", with_matrix, "also print the reduced Burau matrix as JSON");
  braid->callback([&] { action = [&] { return cmd_braid(knot, with_matrix, out); }; });

  auto* degree = app.add_subcommand("degree", "Predicted and actual degree");
  add_knot_args(degree, knot);
  degree->callback([&] { action = [&] { return cmd_degree(knot, out); }; });

  auto* genus = app.add_subcommand("genus", "Seifert genus bounds");
  add_knot_args(genus, knot);
  genus->callback([&] { action = [&] { return cmd_genus(knot, out); }; });

  auto* lspace = app.add_subcommand("lspace", "L-space coefficient obstruction");
  add_knot_args(lspace, knot);
  lspace->callback([&] { action = [&] { return cmd_lspace(knot, out); }; });

  auto* tab = app.add_subcommand("table", "Tabulate every knot in a parameter box");
  tab->add_option("--pmax", table.pmax, "largest p (>= 3)")->check(CLI::Range(std::int64_t{3}, std::int64_t{200}));
  tab->add_option("--smin", table.smin, "smallest s");
  tab->add_option("--smax", table.smax, "largest s");
  tab->add_flag("--group-by-alex", table.group_by_alex, "append classes of knots sharing a polynomial");
  tab->add_option("--out", table.out, "output path (default: stdout)");
  tab->add_option("--format", table.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  tab->add_option("--threads", table.threads, "worker threads (0: all cores)");
  tab->add_option("--verify-fraction", table.verify_fraction, "share of rows cross-checked")
      ->check(CLI::Range(0.0, 1.0));
  tab->callback([&] { action = [&] { return cmd_table(table, out, err); }; });

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("ttk");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    return action();
  } catch (const InvalidParams& e) {
    err << "error: InvalidParams " << to_string(e.reason()) << ": " << e.what() << '\n';
    return kExitInvalidParams;
  }
}

}  // namespace ttk::cli
