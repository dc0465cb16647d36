// Command-line front end: every subcommand reads instance documents, writes a
// machine-readable report to stdout and a short human summary to stderr.
// Exit codes: 0 completed, 1 usage error, 2 input error, 3 cap exceeded,
// 4 internal error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "boxhelly/constructions.hpp"
#include "boxhelly/helly.hpp"
#include "boxhelly/io.hpp"
#include "boxhelly/svg.hpp"

namespace {

using namespace boxhelly;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

InstanceDocument load(const std::string& path, InstanceDocument::Kind kind,
                      const char* wanted) {
  InstanceDocument doc = parse_document(read_input(path));
  if (doc.kind != kind)
    throw parse_error(std::string("expected a ") + wanted + " document");
  return doc;
}

Json verdict_json(const PiercingCertificate& cert) {
  Json j;
  j["verdict"] = cert.verdict == Verdict::pierceable ? "pierceable" : "not-pierceable";
  if (cert.verdict == Verdict::pierceable)
    j["witness"] = to_json(cert.witness);
  else
    j["violation"] = cert.violation;
  return j;
}

void check_witness_hits(const Family& f, const std::vector<Point>& witness) {
  for (std::size_t i = 0; i < f.boxes.size(); ++i) {
    bool hit = false;
    for (const Point& p : witness) hit = hit || contains_point(f.boxes[i], p);
    if (!hit) throw validation_error("emitted witness misses a box", i);
  }
}

void emit(const Json& report, const std::string& oneline) {
  std::cout << report.dump(2) << "\n";
  std::cerr << oneline << "\n";
}

Json report_head(const char* kind, Json params) {
  Json j;
  j["kind"] = kind;
  j["version"] = kVersion;
  j["params"] = std::move(params);
  return j;
}

Json certificate_json(const HellyCertificate& cert) {
  Json j;
  if (cert.class_index) j["class"] = *cert.class_index;
  if (!cert.representatives.empty()) {
    Json reps = Json::array();
    for (auto& [cls, box] : cert.representatives)
      reps.push_back(Json::array({cls, box}));
    j["representatives"] = std::move(reps);
  }
  j["witness"] = to_json(cert.witness);
  return j;
}

Json helly_report_json(const char* kind, Json params, const HellyReport& rep) {
  Json j = report_head(kind, std::move(params));
  j["premise_holds"] = rep.premise_holds;
  j["conclusion_holds"] = rep.conclusion_holds;
  if (rep.premise_violation) j["premise_violation"] = *rep.premise_violation;
  if (rep.conclusion_certificate)
    j["certificate"] = certificate_json(*rep.conclusion_certificate);
  if (rep.class_count_warning) j["class_count_warning"] = true;
  return j;
}

// ---- gen parameter bag -----------------------------------------------------

struct Params {
  std::map<std::string, std::string> kv;

  const std::string& need(const std::string& key) const {
    auto it = kv.find(key);
    if (it == kv.end()) throw usage_error("gen: missing --params " + key + "=...");
    return it->second;
  }
  std::string get(const std::string& key, const std::string& fallback) const {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
  }
  std::size_t need_size(const std::string& key) const {
    try {
      long long v = std::stoll(need(key));
      if (v < 0) throw usage_error("gen: " + key + " must be non-negative");
      return static_cast<std::size_t>(v);
    } catch (const std::invalid_argument&) {
      throw usage_error("gen: " + key + " must be an integer");
    }
  }
};

Params parse_params(const std::vector<std::string>& raw) {
  Params p;
  for (const std::string& chunk : raw) {
    std::stringstream ss(chunk);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw usage_error("gen: --params entries must look like key=value");
      p.kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  return p;
}

// ---- subcommand bodies -----------------------------------------------------

int run_pierce(const std::string& input, std::size_t n) {
  auto doc = load(input, InstanceDocument::Kind::family, "family");
  auto cert = pierce_n(*doc.family, n);
  if (cert.verdict == Verdict::pierceable) {
    check_witness_hits(*doc.family, cert.witness);
  } else if (n_pierceable(doc.family->subfamily(cert.violation), n)) {
    throw validation_error("emitted violation is pierceable", 0);
  }
  Json j = report_head("pierce-report", {{"n", n}, {"boxes", doc.family->size()},
                                         {"dim", doc.dim}});
  j.update(verdict_json(cert));
  emit(j, cert.verdict == Verdict::pierceable
              ? "pierceable with " + std::to_string(cert.witness.size()) + " point(s)"
              : "not " + std::to_string(n) + "-pierceable");
  return 0;
}

int run_helly(const std::string& input, std::size_t h, std::size_t n) {
  auto doc = load(input, InstanceDocument::Kind::family, "family");
  auto rep = check_helly(*doc.family, h, n);
  if (rep.conclusion_certificate)
    check_witness_hits(*doc.family, rep.conclusion_certificate->witness);
  Json j = helly_report_json("helly-report",
                             {{"h", h}, {"n", n}, {"boxes", doc.family->size()},
                              {"dim", doc.dim}},
                             rep);
  emit(j, std::string("premise ") + (rep.premise_holds ? "holds" : "fails") +
              ", conclusion " + (rep.conclusion_holds ? "holds" : "fails"));
  return 0;
}

int run_colorful(const std::string& input, std::size_t n, bool strong) {
  auto doc = load(input, InstanceDocument::Kind::color_system, "color-system");
  auto rep = check_colorful_helly(*doc.system, n, strong);
  if (rep.conclusion_certificate) {
    const HellyCertificate& cert = *rep.conclusion_certificate;
    std::vector<AxisBox> extended = doc.system->classes[*cert.class_index].boxes;
    for (auto& [cls, box] : cert.representatives)
      extended.push_back(doc.system->classes[cls].boxes[box]);
    check_witness_hits(Family(doc.dim, std::move(extended)), cert.witness);
  }
  Json j = helly_report_json(
      "colorful-report",
      {{"n", n}, {"strong", strong}, {"classes", doc.system->classes.size()},
       {"dim", doc.dim}},
      rep);
  emit(j, std::string("premise ") + (rep.premise_holds ? "holds" : "fails") +
              (rep.conclusion_holds ? ", certificate found" : ", no certificate"));
  return 0;
}

int run_fraction(const std::string& input, std::size_t t, std::size_t n,
                 std::uint64_t samples, bool sampled, std::uint64_t seed) {
  auto doc = load(input, InstanceDocument::Kind::family, "family");
  FractionResult r = sampled
                         ? fraction_pierceable_sampled(*doc.family, t, n, samples, seed)
                         : fraction_pierceable(*doc.family, t, n);
  Json params = {{"t", t}, {"n", n}, {"boxes", doc.family->size()}, {"dim", doc.dim}};
  if (sampled) {
    params["samples"] = samples;
    params["seed"] = seed;
  }
  Json j = report_head("fraction-report", std::move(params));
  j["exact"] = r.exact;
  j["fraction"] = rat_to_string(r.fraction);
  j["hits"] = r.hits;
  j["total"] = r.total;
  emit(j, (r.exact ? "exact fraction " : "estimated fraction ") + rat_to_string(r.fraction));
  return 0;
}

int run_gen(const std::string& kind, const Params& params, std::uint64_t seed,
            bool have_seed) {
  InstanceDocument doc;
  if (kind == "lowerbound2") {
    std::size_t d = params.need_size("d");
    doc = InstanceDocument::of(gen_lowerbound_2piercing(d).system,
                               {{"name", "lowerbound2-d" + std::to_string(d)},
                                {"provenance", "boxhelly gen --kind lowerbound2"}});
  } else if (kind == "interval-tight") {
    std::size_t n = params.need_size("n");
    doc = InstanceDocument::of(gen_interval_tight(n),
                               {{"name", "interval-tight-n" + std::to_string(n)},
                                {"provenance", "boxhelly gen --kind interval-tight"}});
  } else if (kind == "cluster") {
    if (!have_seed) throw usage_error("gen --kind cluster requires --seed");
    std::string variant = params.need("variant");
    if (variant != "coverable" && variant != "far")
      throw usage_error("gen: variant must be coverable or far");
    std::size_t d = params.need_size("d");
    std::size_t n = params.need_size("n");
    std::size_t m = params.need_size("m");
    Rational epsilon = parse_rational(params.get("epsilon", "1/5"));
    Rational delta = parse_rational(params.get("delta", "1/10"));
    BaseBox base;
    if (params.kv.count("extents")) {
      std::vector<Rational> extents;
      std::stringstream ss(params.kv.at("extents"));
      std::string item;
      while (std::getline(ss, item, ':')) extents.push_back(parse_rational(item));
      base = BaseBox(std::move(extents));
    }
    auto inst = gen_cluster_instance(
        variant == "far" ? ClusterKind::far : ClusterKind::coverable, epsilon, d, n, m,
        seed, std::move(base), std::move(delta));
    doc = InstanceDocument::of(std::move(inst),
                               {{"name", "cluster-" + variant},
                                {"provenance", "boxhelly gen --kind cluster --seed " +
                                                   std::to_string(seed)}});
  } else {
    throw usage_error("gen: kind must be lowerbound2, interval-tight or cluster");
  }
  std::cout << serialize_document(doc);
  std::cerr << "generated " << doc.meta.at("name") << "\n";
  return 0;
}

int run_witness_tables(const std::string& input, const std::string& tuple_text) {
  auto doc = load(input, InstanceDocument::Kind::color_system, "color-system");
  // the tables only exist for the lower-bound construction; rebuild it from
  // the class count and require an exact match
  std::size_t t = doc.system->classes.size();
  if (doc.dim < 1 || t != 3 * doc.dim - 1)
    throw parse_error("witness-tables expects the 3d-1 class lower-bound system");
  LowerBoundSystem sys = gen_lowerbound_2piercing(doc.dim);
  for (std::size_t k = 0; k < t; ++k)
    if (!(doc.system->classes[k] == sys.system.classes[k]))
      throw parse_error("input does not match the lower-bound construction (class " +
                        std::to_string(k + 1) + ")");
  std::vector<std::size_t> tuple;
  std::stringstream ss(tuple_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      tuple.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw parse_error("--tuple must be comma-separated box indices");
    }
  }
  auto witness = witness_from_tables(sys, tuple);
  check_witness_hits(tuple_family(sys.system, tuple), {witness.x, witness.y});
  Json j = report_head("witness-report", {{"tuple", tuple}, {"dim", doc.dim}});
  j["x"] = to_json(witness.x);
  j["y"] = to_json(witness.y);
  j["reading"] = witness.axis_consistent ? "axis-consistent" : "literal";
  if (!witness.axis_consistent)
    j["discrepancy"] = "axis-consistent table reading failed; literal subscripts validated";
  emit(j, "witness pair hits all " + std::to_string(tuple.size()) + " boxes");
  return 0;
}

int run_cluster_test(const std::string& input, const std::string& gamma_text,
                     const std::string& delta_text, std::uint64_t seed) {
  auto doc = load(input, InstanceDocument::Kind::cluster_instance, "cluster-instance");
  ClusterInstance inst = *doc.cluster;
  if (!gamma_text.empty()) inst.gamma = parse_rational(gamma_text);
  if (!inst.gamma)
    throw usage_error("cluster-test needs --gamma (or a gamma field in the instance)");
  if (!delta_text.empty()) inst.delta = parse_rational(delta_text);
  auto report = cluster_test(inst, seed);
  Json j = report_head("tester-report",
                       {{"gamma", rat_to_string(*inst.gamma)},
                        {"delta", rat_to_string(inst.delta)},
                        {"n", inst.n},
                        {"points", inst.size()},
                        {"seed", seed}});
  j["verdict"] = report.accepted ? "accept" : "reject";
  if (!report.accepted) j["witness"] = to_json(report.witness);
  j["trials_run"] = report.trials_run;
  j["trials_planned"] = report.trials_planned;
  j["seed"] = report.seed;
  emit(j, report.accepted
              ? "accept after " + std::to_string(report.trials_run) + " trials"
              : "reject at trial " + std::to_string(report.trials_run));
  return 0;
}

int run_calibrate(const std::string& input, std::uint64_t samples, std::uint64_t seed) {
  auto doc = load(input, InstanceDocument::Kind::cluster_instance, "cluster-instance");
  Rational gamma = calibrate_gamma(*doc.cluster, samples, seed);
  Json j = report_head("calibration-report",
                       {{"samples", samples}, {"seed", seed}, {"n", doc.cluster->n},
                        {"points", doc.cluster->size()}});
  j["gamma"] = rat_to_string(gamma);
  emit(j, "estimated gamma " + rat_to_string(gamma));
  return 0;
}

int run_render(const std::string& input, const std::string& out,
               const std::string& witness_text) {
  auto doc = parse_document(read_input(input));
  RenderOptions options;
  if (!witness_text.empty()) {
    std::stringstream points(witness_text);
    std::string point_text;
    while (std::getline(points, point_text, ';')) {
      std::vector<Rational> coords;
      std::stringstream coord(point_text);
      std::string c;
      while (std::getline(coord, c, ',')) coords.push_back(parse_rational(c));
      options.witness.push_back(Point(std::move(coords)));
    }
    for (const Point& p : options.witness)
      if (p.dim() != doc.dim) throw parse_error("witness point dimension mismatch");
  }
  std::string svg = render_svg(doc, options);
  std::ofstream file(out, std::ios::binary);
  if (!file) throw parse_error("cannot open output file '" + out + "'");
  file << svg;
  std::size_t rects = 0;
  for (std::size_t pos = 0; (pos = svg.find("<rect", pos)) != std::string::npos; ++pos)
    ++rects;
  Json j = report_head("render-report", {{"out", out}});
  j["rects"] = rects;
  j["witness_markers"] = options.witness.size();
  emit(j, "wrote " + out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact piercing, Helly verification and cluster testing for axis-parallel boxes"};
  app.require_subcommand(1);

  std::string input = "-";
  std::size_t n = 1, h = 1, t = 1;
  std::uint64_t samples = 0, seed = 0;
  bool strong = false;
  std::string kind, tuple_text, out, witness_text, gamma_text, delta_text;
  std::vector<std::string> params_raw;

  auto* pierce = app.add_subcommand("pierce", "decide n-piercability of a family");
  pierce->add_option("--input", input);
  pierce->add_option("--n", n)->required();

  auto* helly = app.add_subcommand("helly", "check the Helly premise and conclusion");
  helly->set_help_flag("--help", "print help");  // frees -h for the tuple size
  helly->add_option("--input", input);
  helly->add_option("-h,--h", h)->required();
  helly->add_option("--n", n)->required();

  auto* colorful = app.add_subcommand("colorful", "check the colorful Helly property");
  colorful->add_option("--input", input);
  colorful->add_option("--n", n)->required();
  colorful->add_flag("--strong", strong);

  auto* fraction = app.add_subcommand("fraction", "fraction of n-pierceable t-subsets");
  fraction->add_option("--input", input);
  fraction->add_option("--t", t)->required();
  fraction->add_option("--n", n)->required();
  auto* fraction_samples = fraction->add_option("--samples", samples);
  auto* fraction_seed = fraction->add_option("--seed", seed);

  auto* gen = app.add_subcommand("gen", "generate an instance document");
  gen->add_option("--kind", kind)->required();
  gen->add_option("--params", params_raw);
  auto* gen_seed = gen->add_option("--seed", seed);

  auto* tables = app.add_subcommand("witness-tables", "table-driven witness pair");
  tables->add_option("--input", input);
  tables->add_option("--tuple", tuple_text)->required();

  auto* tester = app.add_subcommand("cluster-test", "randomized clusterability tester");
  tester->add_option("--input", input);
  tester->add_option("--gamma", gamma_text);
  tester->add_option("--delta", delta_text);
  tester->add_option("--seed", seed)->required();

  auto* calibrate = app.add_subcommand("calibrate", "estimate gamma by sampling");
  calibrate->add_option("--input", input);
  calibrate->add_option("--samples", samples)->required();
  calibrate->add_option("--seed", seed)->required();

  auto* render = app.add_subcommand("render", "render a dimension-2 document as SVG");
  render->add_option("--input", input);
  render->add_option("--out", out)->required();
  render->add_option("--witness", witness_text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // --help exits 0, real parse errors exit 1
  }

  try {
    if (pierce->parsed()) return run_pierce(input, n);
    if (helly->parsed()) return run_helly(input, h, n);
    if (colorful->parsed()) return run_colorful(input, n, strong);
    if (fraction->parsed()) {
      bool sampled = fraction_samples->count() > 0;
      if (sampled && fraction_seed->count() == 0)
        throw usage_error("fraction --samples requires an explicit --seed");
      return run_fraction(input, t, n, samples, sampled, seed);
    }
    if (gen->parsed())
      return run_gen(kind, parse_params(params_raw), seed, gen_seed->count() > 0);
    if (tables->parsed()) return run_witness_tables(input, tuple_text);
    if (tester->parsed()) return run_cluster_test(input, gamma_text, delta_text, seed);
    if (calibrate->parsed()) return run_calibrate(input, samples, seed);
    if (render->parsed()) return run_render(input, out, witness_text);
    throw usage_error("no subcommand");
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const premise_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const cap_error& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
