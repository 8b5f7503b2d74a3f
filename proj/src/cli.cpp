#include "sl3/cli.hpp"

#include "sl3/certify.hpp"
#include "sl3/classify.hpp"
#include "sl3/enumerate.hpp"
#include "sl3/error.hpp"
#include "sl3/foam.hpp"
#include "sl3/skein.hpp"
#include "sl3/web_text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

namespace sl3 {

namespace {

using nlohmann::json;

json poly_json(const LaurentPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(json::array({it->first, it->second.str()}));
  return {{"text", p.to_string()}, {"terms", terms}};
}

std::string boundary_text(const SignSequence& s) { return s.empty() ? "(closed)" : s.to_string(); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Input {
  std::string file;
  NamedWeb web;
};

std::vector<Input> load_webs(const std::vector<std::string>& files) {
  std::vector<Input> out;
  for (const auto& f : files)
    for (auto& nw : parse_web_file(f)) out.push_back({f, std::move(nw)});
  return out;
}

/// Applies fn to every index in [0, n) on up to `jobs` threads. Results keep
/// input order; the first failing item (by index) is rethrown.
template <class R>
std::vector<R> parallel_map(std::size_t n, int jobs, const std::function<R(std::size_t)>& fn) {
  std::vector<R> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t width = std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(n, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < width; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

BracketEvaluator make_evaluator(const RunConfig& c) {
  return c.seed ? BracketEvaluator(ReductionPolicy::Random, *c.seed) : BracketEvaluator();
}

void need_inputs(const RunConfig& c, std::size_t lo, std::size_t hi) {
  if (c.inputs.size() < lo || c.inputs.size() > hi)
    throw UsageError(c.command + ": expected " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi)) +
                     " argument(s), got " + std::to_string(c.inputs.size()));
}

json cmd_validate(const RunConfig& c, std::ostream& text) {
  need_inputs(c, 1, SIZE_MAX);
  json webs = json::array();
  for (const auto& in : load_webs(c.inputs)) {
    const Web& w = in.web.web;
    text << in.web.name << ": ok boundary=" << boundary_text(w.boundary()) << " vertices=" << w.vertex_count()
         << " edges=" << w.edge_count() << " circles=" << w.circle_count() << '\n';
    webs.push_back({{"file", in.file},
                    {"name", in.web.name},
                    {"boundary", w.boundary().to_string()},
                    {"vertices", w.vertex_count()},
                    {"edges", w.edge_count()},
                    {"circles", w.circle_count()}});
  }
  return {{"webs", webs}};
}

json cmd_bracket(const RunConfig& c, std::ostream& text) {
  need_inputs(c, 1, SIZE_MAX);
  auto inputs = load_webs(c.inputs);
  // Open webs are paired with their mirror image.
  auto values = parallel_map<LaurentPoly>(inputs.size(), c.jobs, [&](std::size_t i) {
    thread_local std::optional<BracketEvaluator> eval;
    if (!eval) eval.emplace(make_evaluator(c));
    const Web& w = inputs[i].web.web;
    return eval->bracket(w.is_closed() ? w : glue(w, w));
  });
  json webs = json::array();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const Web& w = inputs[i].web.web;
    text << inputs[i].web.name << (w.is_closed() ? "" : " (self-pairing)") << ": " << values[i].to_string() << '\n';
    webs.push_back({{"file", inputs[i].file},
                    {"name", inputs[i].web.name},
                    {"closed", w.is_closed()},
                    {"bracket", poly_json(values[i])}});
  }
  return {{"webs", webs}};
}

json cmd_reduce(const RunConfig& c, std::ostream& text) {
  need_inputs(c, 1, SIZE_MAX);
  json webs = json::array();
  BracketEvaluator eval = make_evaluator(c);
  for (const auto& in : load_webs(c.inputs)) {
    SkeinElement r = reduce_to_nonelliptic(in.web.web, eval);
    text << in.web.name << ": " << r.size() << " term(s)\n";
    json terms = json::array();
    int k = 0;
    for (const auto& [key, term] : r.terms()) {
      std::string name = in.web.name + "_" + std::to_string(k++);
      std::string body = to_text(term.web, name);
      text << "# coefficient " << term.coeff.to_string() << '\n' << body;
      terms.push_back({{"coefficient", poly_json(term.coeff)},
                       {"vertices", term.web.vertex_count()},
                       {"web", body}});
    }
    webs.push_back({{"file", in.file}, {"name", in.web.name}, {"terms", terms}});
  }
  return {{"webs", webs}};
}

json cmd_classify(const RunConfig& c, std::ostream& text) {
  need_inputs(c, 1, SIZE_MAX);
  json webs = json::array();
  for (const auto& in : load_webs(c.inputs)) {
    Classification k = classify(in.web.web);
    text << in.web.name << ": non_elliptic=" << yes_no(k.non_elliptic) << " superficial=" << yes_no(k.superficial)
         << " semi_non_elliptic=" << yes_no(k.semi_non_elliptic) << " one_elliptic=" << yes_no(k.one_elliptic)
         << " semi_superficial=" << yes_no(k.semi_superficial) << " blocks=" << k.block_count
         << " nested=" << k.nested_count << " faces=";
    for (std::size_t i = 0; i < k.profile.size(); ++i) text << (i ? "," : "") << k.profile[i];
    text << '\n';
    webs.push_back({{"file", in.file},
                    {"name", in.web.name},
                    {"non_elliptic", k.non_elliptic},
                    {"superficial", k.superficial},
                    {"semi_non_elliptic", k.semi_non_elliptic},
                    {"one_elliptic", k.one_elliptic},
                    {"semi_superficial", k.semi_superficial},
                    {"blocks", k.block_count},
                    {"nested", k.nested_count},
                    {"face_profile", k.profile}});
  }
  return {{"webs", webs}};
}

json cmd_enum(const RunConfig& c, std::ostream& text) {
  need_inputs(c, 1, 1);
  SignSequence eps = SignSequence::parse(c.inputs[0]);
  int budget = c.budget.value_or(default_vertex_budget(eps));
  Enumeration e = c.superficial ? search_superficial_non_elliptic(eps, budget, c.seed)
                                : search_non_elliptic(eps, budget, c.seed);
  if (!e.complete)
    throw Error(ErrorCode::BudgetExceeded,
                "webs with more than " + std::to_string(budget) + " vertices may exist; raise --budget");
  std::uint64_t dim = invariant_dim(eps);
  text << boundary_text(eps) << ": " << e.webs.size() << (c.superficial ? " superficial" : "")
       << " non-elliptic web(s), invariant_dim " << dim << ", budget " << budget << '\n';
  json webs = json::array();
  for (std::size_t i = 0; i < e.webs.size(); ++i) {
    std::string body = to_text(e.webs[i], "e" + std::to_string(i));
    text << body;
    webs.push_back({{"vertices", e.webs[i].vertex_count()}, {"web", body}});
  }
  return {{"boundary", eps.to_string()},
          {"superficial_only", c.superficial},
          {"budget", budget},
          {"count", e.webs.size()},
          {"invariant_dim", dim},
          {"webs", webs}};
}

json cmd_invdim(const RunConfig& c, std::ostream& text) {
  need_inputs(c, 1, 1);
  SignSequence eps = SignSequence::parse(c.inputs[0]);
  std::uint64_t d = invariant_dim(eps);
  text << boundary_text(eps) << ": " << d << '\n';
  return {{"boundary", eps.to_string()}, {"invariant_dim", d}};
}

Web first_web(const std::string& file) {
  auto webs = parse_web_file(file);
  if (webs.empty()) throw Error(ErrorCode::InvalidArgument, "'" + file + "' contains no web");
  return webs.front().web;
}

/// One or two files; a single file must hold at least two webs.
std::pair<Web, Web> web_pair(const RunConfig& c) {
  if (c.inputs.size() == 2) return {first_web(c.inputs[0]), first_web(c.inputs[1])};
  auto webs = parse_web_file(c.inputs[0]);
  if (webs.size() < 2) throw Error(ErrorCode::InvalidArgument, "'" + c.inputs[0] + "' holds fewer than two webs");
  return {webs[0].web, webs[1].web};
}

json cmd_homdim(const RunConfig& c, std::ostream& text) {
  need_inputs(c, 2, 2);
  auto [w1, w2] = web_pair(c);
  BracketEvaluator eval = make_evaluator(c);
  LaurentPoly h = graded_hom_dim(w1, w2, eval);
  text << h.to_string() << '\n';
  return {{"boundary", w2.boundary().to_string()}, {"hom_dim", poly_json(h)}};
}

json certificate_json(const Certificate& cert) {
  return {{"verdict", verdict_name(cert.kind)},
          {"witness", poly_json(cert.witness)},
          {"degree", cert.witness.degree() ? json(*cert.witness.degree()) : json(nullptr)},
          {"leading_coefficient", cert.witness.leading_coefficient().str()},
          {"boundary_length", cert.boundary_length}};
}

void certificate_text(const Certificate& cert, std::ostream& text) {
  text << verdict_name(cert.kind) << '\n'
       << "witness " << cert.witness.to_string() << '\n'
       << "degree " << (cert.witness.degree() ? std::to_string(*cert.witness.degree()) : "-inf")
       << " leading " << cert.witness.leading_coefficient().str() << " length " << cert.boundary_length << '\n';
}

json cmd_certify(const RunConfig& c, std::ostream& text) {
  BracketEvaluator eval = make_evaluator(c);
  Certificate cert;
  if (c.mode == "indec") {
    need_inputs(c, 1, 1);
    cert = certify_indecomposable(first_web(c.inputs[0]), eval);
  } else if (c.mode == "noniso") {
    need_inputs(c, 1, 2);
    auto [w1, w2] = web_pair(c);
    cert = certify_not_isomorphic(w1, w2, eval);
  } else {
    throw UsageError("certify: expected 'indec' or 'noniso'");
  }
  certificate_text(cert, text);
  json j = certificate_json(cert);
  j["mode"] = c.mode;
  return j;
}

json cmd_keylemma(const RunConfig& c, std::ostream& text) {
  need_inputs(c, 0, 0);
  if (c.max_len < 0) throw UsageError("keylemma: --max-len must be nonnegative");
  KeyLemmaReport r = verify_key_lemma(c.max_len, c.budget, c.jobs);
  json rows = json::array();
  for (const auto& row : r.rows) {
    text << boundary_text(row.eps) << ": " << row.webs << " web(s), " << row.pairs << " pair(s), " << row.nice
         << " nice\n";
    rows.push_back({{"boundary", row.eps.to_string()}, {"webs", row.webs}, {"pairs", row.pairs}, {"nice", row.nice}});
  }
  json bad = json::array();
  for (const auto& cert : r.counterexamples) {
    text << "counterexample " << boundary_text(cert.subjects.front().boundary()) << ' '
         << cert.witness.to_string() << '\n';
    json j = certificate_json(cert);
    j["webs"] = json::array();
    for (const auto& w : cert.subjects) j["webs"].push_back(to_text(w));
    bad.push_back(j);
  }
  text << r.pairs_checked << " pair(s) checked, " << r.symmetric_pairs << " symmetric\n";
  text << (r.all_nice() ? "all pairs nice" : std::to_string(r.counterexamples.size()) + " counterexample(s)") << '\n';
  return {{"max_len", r.max_len},
          {"budget", r.budget ? json(*r.budget) : json(nullptr)},
          {"rows", rows},
          {"pairs_checked", r.pairs_checked},
          {"symmetric_pairs", r.symmetric_pairs},
          {"all_nice", r.all_nice()},
          {"counterexamples", bad}};
}

json cmd_foam(const RunConfig& c, std::ostream& text) {
  if (c.mode != "eval") throw UsageError("foam: expected 'eval'");
  need_inputs(c, 1, SIZE_MAX);
  std::vector<std::pair<std::string, PreFoam>> foams;
  for (const auto& f : c.inputs)
    for (auto& pf : parse_foam_file(f)) foams.emplace_back(f, std::move(pf));
  auto values = parallel_map<Rational>(foams.size(), c.jobs, [&](std::size_t i) { return evaluate(foams[i].second); });
  json out = json::array();
  for (std::size_t i = 0; i < foams.size(); ++i) {
    const PreFoam& f = foams[i].second;
    text << f.name << ": " << values[i].str() << " (degree " << degree(f) << ")\n";
    out.push_back({{"file", foams[i].first}, {"name", f.name}, {"value", values[i].str()}, {"degree", degree(f)}});
  }
  return {{"foams", out}};
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, std::function<json(const RunConfig&, std::ostream&)>> commands = {
      {"validate", cmd_validate}, {"bracket", cmd_bracket}, {"reduce", cmd_reduce},     {"classify", cmd_classify},
      {"enum", cmd_enum},         {"invdim", cmd_invdim},   {"homdim", cmd_homdim},     {"certify", cmd_certify},
      {"keylemma", cmd_keylemma}, {"foam", cmd_foam},
  };
  const bool as_json = c.format == OutputFormat::Json;
  try {
    auto it = commands.find(c.command);
    if (it == commands.end()) throw UsageError("unknown command '" + c.command + "'");
    if (c.jobs < 1) throw UsageError("--jobs must be positive");
    if (c.budget && *c.budget < 1) throw UsageError("--budget must be positive");
    std::ostringstream text;
    json j = it->second(c, text);
    if (as_json) {
      json doc = {{"command", c.mode.empty() ? c.command : c.command + " " + c.mode}, {"ok", true}};
      doc.update(j);
      out << doc.dump(2) << '\n';
    } else {
      out << text.str();
    }
    if (c.command == "keylemma" && !j.at("all_nice").get<bool>()) return 1;
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    if (as_json)
      out << json{{"command", c.command},
                  {"ok", false},
                  {"error", {{"code", error_code_name(e.code())}, {"message", e.what()}}}}
                 .dump(2)
          << '\n';
    err << e.what() << '\n';
    return 1;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"sl3 web skein calculus", "sl3web"};
  RunConfig c;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "Seed for random reduction or search order");
  app.require_subcommand(1);

  auto files = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("files", c.inputs, what)->required();
  };
  files(app.add_subcommand("validate", "Parse and validate web files"), "Web files");
  files(app.add_subcommand("bracket", "Kuperberg bracket (open webs: paired with their mirror)"), "Web files");
  files(app.add_subcommand("reduce", "Rewrite into non-elliptic webs"), "Web files");
  files(app.add_subcommand("classify", "Ellipticity and superficiality classes"), "Web files");
  auto* en = app.add_subcommand("enum", "Enumerate non-elliptic webs with a given boundary");
  en->add_option("signs", c.inputs, "Sign sequence, e.g. +--+")->required()->expected(1);
  en->add_option("--budget", c.budget, "Vertex budget")->check(CLI::PositiveNumber);
  en->add_flag("--superficial", c.superficial, "Only superficial webs");
  app.add_subcommand("invdim", "Dimension of the invariant space")
      ->add_option("signs", c.inputs, "Sign sequence")
      ->required()
      ->expected(1);
  app.add_subcommand("homdim", "Graded dimension of Hom(w1, w2)")
      ->add_option("files", c.inputs, "Two web files")
      ->required()
      ->expected(2);
  auto* cert = app.add_subcommand("certify", "Indecomposability and non-isomorphism certificates");
  cert->require_subcommand(1);
  cert->add_subcommand("indec", "Certify indecomposability")
      ->add_option("file", c.inputs, "Web file")
      ->required()
      ->expected(1);
  cert->add_subcommand("noniso", "Certify two webs non-isomorphic")
      ->add_option("files", c.inputs, "Two web files, or one file with two webs")
      ->required()
      ->expected(1, 2);
  auto* kl = app.add_subcommand("keylemma", "Check every superficial non-elliptic pair up to a boundary length");
  kl->add_option("--max-len", c.max_len, "Largest boundary length")->required()->check(CLI::NonNegativeNumber);
  kl->add_option("--budget", c.budget, "Vertex budget for every boundary")->check(CLI::PositiveNumber);
  auto* foam = app.add_subcommand("foam", "Closed pre-foam evaluation");
  foam->require_subcommand(1);
  foam->add_subcommand("eval", "Evaluate pre-foams")->add_option("files", c.inputs, "Foam files")->required();

  // Sign sequences such as "-++" must not be read as options.
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
  bool signs_pending = false;
  for (auto it = args.rbegin(); it != args.rend(); ++it) {
    if (signs_pending && !it->empty() && it->find_first_not_of("+- ") == std::string::npos && *it != "--") {
      it->insert(0, "=");  // marker stripped below
      signs_pending = false;
    }
    if (*it == "enum" || *it == "invdim") signs_pending = true;
  }
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  for (auto& s : c.inputs)
    if (!s.empty() && s[0] == '=') s.erase(0, 1);

  c.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  for (const auto* sub : app.get_subcommands()) {
    c.command = sub->get_name();
    for (const auto* inner : sub->get_subcommands()) c.mode = inner->get_name();
  }
  return run(c, out, err);
}

}  // namespace sl3
