// Command-line front end. Exit status: 0 success, 1 verification failure,
// 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "vsg/abelian.hpp"
#include "vsg/acceptance.hpp"
#include "vsg/free_product.hpp"
#include "vsg/hom.hpp"
#include "vsg/hom_count.hpp"
#include "vsg/iso.hpp"
#include "vsg/schreier.hpp"
#include "vsg/structure.hpp"

using namespace vsg;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

struct Config {
  std::string family = "VSG";
  int n = 3;
  std::string triple = "111";
  std::string format = "text";
  std::uint64_t seed = SuiteOptions{}.seed;
  std::optional<std::uint64_t> budget;
  std::string file;
  std::string word;
  std::string map = "phi";
  std::vector<int> criteria;
  bool serial = false;
  bool timing = false;
  bool verbose = false;
};

class Output {
 public:
  explicit Output(bool json_lines) : json_(json_lines) {}
  void emit(json const& record, std::string const& text) const {
    if (json_)
      std::cout << record.dump() << '\n';
    else
      std::cout << text << '\n';
  }
  bool json_lines() const { return json_; }

 private:
  bool json_;
};

std::string read_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Presentation load(Config const& c) {
  if (!c.file.empty()) return parse_presentation(read_file(c.file));
  return build_presentation(parse_family(c.family), c.n);
}

int cmd_exp(Config const& c, Output const& out) {
  auto e = exponent_sums(parse_word(c.word, c.n));
  out.emit({{"word", c.word}, {"expC", e.exp_c}, {"expS", e.exp_s}, {"expCS", e.exp_cs}, {"parity", e.parity}},
           format_exponents(e));
  return kOk;
}

int cmd_perm(Config const& c, Output const& out) {
  auto phi = phi_triple(parse_family(c.family), c.n, Triple::parse(c.triple));
  auto p = phi.eval(parse_word(c.word, c.n));
  out.emit({{"word", c.word}, {"triple", c.triple}, {"perm", format_cycles(p)}, {"images", p.images()}},
           format_cycles(p));
  return kOk;
}

int cmd_decompose(Config const& c, Output const& out) {
  auto d = decompose(parse_word(c.word, c.n), Triple::parse(c.triple));
  out.emit({{"pure", format_word(d.pure)}, {"perm", format_cycles(d.perm)}, {"section", format_word(d.section_word)}},
           "pure: " + format_word(d.pure) + "\nperm: " + format_cycles(d.perm) +
               "\nsection: " + format_word(d.section_word));
  return kOk;
}

int cmd_classify(Config const& c, Output const& out) {
  auto p = load(c);
  auto ts = p.strands() >= 3 && c.file.empty() ? classify_triples(p.family(), p.strands()) : passing_triples(p);
  std::vector<std::string> strs;
  for (auto t : ts) strs.push_back(t.str());
  out.emit({{"group", p.label}, {"triples", strs}}, format_triples(ts));
  return kOk;
}

template <class G>
int report_hom(GeneratorMap<G> const& m, std::string const& what, Output const& out) {
  auto r = verify_homomorphism(m);
  json j{{"map", what}, {"homomorphism", r.is_homomorphism}, {"failures", json::array()}};
  std::string text = what + ": homomorphism=" + (r.is_homomorphism ? "true" : "false");
  for (auto const& f : r.failures) {
    j["failures"].push_back({{"relation", f.relation}, {"tag", to_string(f.tag)}, {"lhs", f.lhs_image}, {"rhs", f.rhs_image}});
    text += "\n  " + f.relation + " [" + to_string(f.tag) + "]: " + f.lhs_image + " vs " + f.rhs_image;
  }
  out.emit(j, text);
  return r.is_homomorphism ? kOk : kFailed;
}

int cmd_verify_hom(Config const& c, Output const& out) {
  auto p = load(c);
  std::string const label = p.label.empty() ? "presentation" : p.label;
  if (c.map == "phi" || c.map == "nu6") {
    auto phi = phi_triple(p, Triple::parse(c.triple));
    if (c.map == "phi") return report_hom(phi, "phi_" + c.triple + " on " + label, out);
    if (p.strands() != 6) throw Error("nu6 needs n = 6");
    std::vector<Permutation> images;
    for (auto const& img : phi.images()) images.push_back(apply_on_transpositions(outer_automorphism_s6().images, img));
    return report_hom(GeneratorMap<SymmetricGroup>(p, phi.target(), images), "nu6 o phi_" + c.triple + " on " + label,
                      out);
  }
  if (c.map == "psi") return report_hom(psi_map(p), "psi on " + label, out);
  if (c.map == "exp-c") return report_hom(exponent_map(p, ExponentKind::Classical), "expC on " + label, out);
  if (c.map == "exp-s") return report_hom(exponent_map(p, ExponentKind::Singular), "expS on " + label, out);
  if (c.map == "exp-cs") return report_hom(exponent_map(p, ExponentKind::ClassicalSingular), "expCS on " + label, out);
  if (c.map == "welded" || c.map == "extended")
    return report_hom(builtin_representation(parse_representation(c.map), p), c.map + " on " + label, out);
  throw Error("unknown map " + c.map);
}

int cmd_kernel(Config const& c, Output const& out) {
  auto k = run_kernel_pipeline(parse_family(c.family), c.n, Triple::parse(c.triple));
  json gens = json::array();
  for (std::size_t i = 0; i < k.presentation.rank(); ++i)
    gens.push_back({{"name", k.presentation.names()[i]}, {"word", format_word(k.generator_words[i])}});
  json rels = json::array();
  for (auto const& r : k.presentation.relators()) rels.push_back(k.presentation.format(r.word));
  std::string text = format_presentation(k.presentation);
  if (!text.empty() && text.back() == '\n') text.pop_back();
  out.emit({{"group", k.presentation.label},
            {"index", k.table.size()},
            {"generators", gens},
            {"relators", rels},
            {"complete", k.simplified.complete}},
           text);
  return kOk;
}

int cmd_abelianize(Config const& c, Output const& out) {
  auto p = load(c);
  auto a = abelianization(p);
  std::vector<std::string> torsion;
  for (auto const& t : a.torsion) torsion.push_back(t.get_str());
  out.emit({{"group", p.label}, {"free_rank", a.free_rank}, {"torsion", torsion}, {"text", format_invariants(a)}},
           format_invariants(a));
  return kOk;
}

int cmd_lcs2(Config const& c, Output const& out) {
  auto p = load(c);
  auto q = class2_quotient(p);
  out.emit({{"group", p.label},
            {"abelianization", format_invariants(q.abelianization)},
            {"gamma2_mod_gamma3", format_invariants(q.gamma2_mod_gamma3)}},
           "abelianization: " + format_invariants(q.abelianization) +
               "\ngamma2/gamma3: " + format_invariants(q.gamma2_mod_gamma3));
  return kOk;
}

int cmd_forbidden(Config const& c, Output const& out) {
  bool all = true;
  for (auto const& r : forbidden_all(c.n)) {
    all = all && r.separated;
    std::string sep = to_string(r.separator) + (r.detail.empty() ? "" : "/" + r.detail);
    out.emit({{"n", r.n},
              {"relation", r.relation},
              {"i", r.index},
              {"separated", r.separated},
              {"separator", sep},
              {"lhs", r.lhs_image},
              {"rhs", r.rhs_image}},
             "relation=" + std::to_string(r.relation) + " i=" + std::to_string(r.index) +
                 " separated=" + (r.separated ? "true" : "false") + " separator=" + sep + " lhs=" + r.lhs_image +
                 " rhs=" + r.rhs_image);
  }
  return all ? kOk : kFailed;
}

int cmd_nf2(Config const& c, Output const& out) {
  Word const w = parse_word(c.word, 2);
  auto nf = vsg2_normal_form(w);
  auto text = vsg2_free_product().format(nf);
  out.emit({{"word", c.word}, {"normal_form", text}, {"normal_word", format_word(vsg2_normal_word(w))}}, text);
  return kOk;
}

int cmd_homcount(Config const& c, Output const& out) {
  auto const p = load(c);
  auto f = hom_fingerprint(p);
  json counts = json::object();
  for (auto const& [name, k] : f.counts) counts[name] = k;
  out.emit({{"group", p.label}, {"counts", counts}}, format_fingerprint(f));
  return kOk;
}

int cmd_verify_iso(Config const& c, Output const& out) {
  auto cert = parse_certificate(read_file(c.file));
  Engine e1, e2;
  if (c.budget) {
    KnuthBendixLimits lim;
    lim.max_rules = static_cast<std::size_t>(*c.budget);
    auto pick = [&](Presentation const& p) {
      try {
        return make_engine(p, EngineKind::FreeProduct);
      } catch (Error const&) {
      }
      return rewriting_engine(p, lim);
    };
    e1 = pick(cert.p1);
    e2 = pick(cert.p2);
  }
  auto r = verify_iso(cert, e1, e2);
  json checks = json::array();
  for (auto const& ch : r.checks)
    checks.push_back({{"name", ch.name},
                      {"total", ch.total},
                      {"proved", ch.proved},
                      {"refuted", ch.refuted},
                      {"undecided", ch.undecided},
                      {"failures", ch.failures}});
  out.emit({{"valid", r.valid}, {"engine1", r.engine1}, {"engine2", r.engine2}, {"checks", checks}}, r.summary());
  return r.valid ? kOk : kFailed;
}

int cmd_suite(Config const& c, Output const& out) {
  SuiteOptions opts;
  opts.seed = c.seed;
  opts.exec = c.serial ? Exec::Serial : Exec::Parallel;
  if (c.budget) opts.samples = *c.budget;
  std::vector<int> ids = c.criteria;
  if (ids.empty())
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  bool all = true;
  for (int id : ids) {
    auto r = run_criterion(id, opts);
    all = all && r.passed;
    json j{{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}};
    if (c.timing) j["seconds"] = r.seconds;
    if (c.verbose || !r.passed) j["details"] = r.details;
    std::string text = format_result_line(r, c.timing);
    if (c.verbose || !r.passed)
      for (auto const& d : r.details) text += "\n    " + d;
    out.emit(j, text);
  }
  return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Virtual singular braid group toolkit"};
  app.require_subcommand(1);
  Config c;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--family", c.family, "group family (VSG, WCSG, WSG, UCVSG, UVSG, FCVSG, FCWSG, FWSG, GCVSG, B, VB, SG)");
    sub->add_option("--n", c.n, "number of strands")->check(CLI::Range(2, 16));
    sub->add_option("--triple", c.triple, "phi triple as three digits, e.g. 101");
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json-lines"}));
    sub->add_option("--seed", c.seed, "seed for randomized suites");
    sub->add_option("--budget", c.budget, "search budget (rule limit for verify-iso, samples for suite)");
  };
  auto with_word = [&](CLI::App* sub) { sub->add_option("word", c.word, "word, e.g. \"s1 t2^-1 v1\"")->required(); };
  auto with_file = [&](CLI::App* sub) { sub->add_option("--file", c.file, "presentation file instead of --family/--n"); };

  std::map<std::string, std::function<int(Config const&, Output const&)>> handlers;
  auto add = [&](std::string const& name, std::string const& help, auto handler) {
    auto* sub = app.add_subcommand(name, help);
    common(sub);
    handlers[name] = handler;
    return sub;
  };
  with_word(add("exp", "exponent sums of a word", cmd_exp));
  with_word(add("perm", "image under phi_{1,1,1} (or --triple)", cmd_perm));
  with_word(add("decompose", "pure part and permutation of a word", cmd_decompose));
  with_file(add("classify-triples", "triples for which phi is a homomorphism", cmd_classify));
  {
    auto* s = add("verify-hom", "check a built-in map on a presentation", cmd_verify_hom);
    with_file(s);
    s->add_option("--map", c.map, "phi, psi, exp-c, exp-s, exp-cs, welded, extended, nu6")
        ->check(CLI::IsMember({"phi", "psi", "exp-c", "exp-s", "exp-cs", "welded", "extended", "nu6"}));
  }
  add("kernel-presentation", "Reidemeister-Schreier kernel presentation of phi", cmd_kernel);
  with_file(add("abelianize", "abelianization invariants", cmd_abelianize));
  with_file(add("lcs2", "Gamma_2/Gamma_3 invariants", cmd_lcs2));
  add("forbidden", "separate the forbidden relations", cmd_forbidden);
  with_word(add("nf2", "VSG_2 free product normal form", cmd_nf2));
  with_file(add("homcount", "homomorphism counts into S3 and S4", cmd_homcount));
  add("verify-iso", "validate an isomorphism certificate", cmd_verify_iso)
      ->add_option("file", c.file, "certificate file")
      ->required();
  {
    auto* s = add("suite", "run the acceptance criteria", cmd_suite);
    s->add_option("--criterion", c.criteria, "criterion numbers (default: all)")->check(CLI::Range(1, kCriterionCount));
    s->add_flag("--serial", c.serial, "run property batches serially");
    s->add_flag("--timing", c.timing, "report run times");
    s->add_flag("--verbose", c.verbose, "print details for passing criteria too");
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  Output const out(c.format == "json-lines");
  try {
    auto* sub = app.get_subcommands().front();
    return handlers.at(sub->get_name())(c, out);
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
}
