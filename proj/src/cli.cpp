#include "sftcd/cli.hpp"

#include <filesystem>
#include <ostream>

#include <CLI11.hpp>

#include "sftcd/bridge.hpp"
#include "sftcd/error.hpp"
#include "sftcd/fiber.hpp"
#include "sftcd/harness.hpp"
#include "sftcd/io.hpp"

namespace sftcd {

namespace {

constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string triple;
  std::string code;
  std::string which = "phi";
  std::string block;
  std::size_t max_len = 6;
  std::size_t plateau = 3;
  std::size_t jobs = 1;
  std::string point;
  // bridge
  std::string from;
  std::string to;
  std::int64_t m = 0;
  std::size_t window = 0;
  std::int64_t occurrence = 1;
  bool absolute = false;
  // classes-fixed
  std::string z;
  // verify / generate
  std::vector<std::string> corpus;
  std::string gen;
  TripleGenSpec spec;
  // dump
  std::string format = "json";
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  Options& opt;
};

void emit(Context& ctx, const json& doc) { ctx.out << doc.dump() << '\n'; }

void warn_all(Context& ctx, const LoadedTriple& loaded) {
  for (const auto& w : loaded.warnings) ctx.err << "warning: " << w << '\n';
}

LoadedTriple need_triple(Context& ctx) {
  if (ctx.opt.triple.empty()) throw Error(ErrorKind::ParseError, "--triple is required");
  auto loaded = load_triple(ctx.opt.triple);
  warn_all(ctx, loaded);
  return loaded;
}

OneBlockCode need_code(Context& ctx) {
  const std::string& source = ctx.opt.code.empty() ? ctx.opt.triple : ctx.opt.code;
  if (source.empty()) throw Error(ErrorKind::ParseError, "--code or --triple is required");
  return load_code(source, ctx.opt.which).code;
}

PeriodicPoint parse_point(const VertexShift& shift, const std::string& text) {
  auto p = PeriodicPoint::parse(shift.alphabet(), text);
  if (!p.valid_in(shift)) throw Error(ErrorKind::InvalidBlock, "periodic point " + text + " is not in the shift");
  return p;
}

json depth_json(const DepthResult& r, const Alphabet& domain, const Alphabet& block_alphabet,
                const Alphabet& witness_alphabet) {
  json routing = json::array();
  for (Symbol s : r.certificate.routing_set.members()) routing.push_back(domain.name(s));
  return {{"value", r.value},
          {"block", block_alphabet.format(r.w)},
          {"coordinate", r.certificate.n},
          {"routing_set", routing},
          {"stabilized", true},
          {"certificate", certificate_to_json(r.certificate, domain, block_alphabet, witness_alphabet)}};
}

std::string set_text(const json& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i].get<std::string>();
  return out + "}";
}

int cmd_depth(Context& ctx) {
  const auto code = need_code(ctx);
  const auto w = code.codomain().parse(ctx.opt.block);
  const auto r = depth(code, w);
  const auto doc = depth_json(r, code.domain().alphabet(), code.codomain(), code.codomain());
  emit(ctx, doc);
  ctx.err << "depth(" << ctx.opt.block << ") = " << r.value << " at n=" << r.certificate.n << " via "
          << set_text(doc["routing_set"]) << '\n';
  return 0;
}

int cmd_rdepth(Context& ctx) {
  const auto loaded = need_triple(ctx);
  const auto& t = loaded.triple;
  const auto w = t.y().alphabet().parse(ctx.opt.block);
  const auto r = relative_depth(t, w);
  const auto doc = depth_json(r, t.x().alphabet(), t.y().alphabet(), t.z_alphabet());
  emit(ctx, doc);
  ctx.err << "relative depth(" << ctx.opt.block << ") = " << r.value << " at n=" << r.certificate.n << " via "
          << set_text(doc["routing_set"]) << '\n';
  return 0;
}

void estimate_note(Context& ctx, const std::string& what, const DegreeEstimate& e) {
  ctx.err << what << " = " << e.value << " (L=" << e.scanned_length << ", "
          << (e.stabilized ? "stabilized" : "not stabilized") << ")\n";
}

int cmd_class_degree(Context& ctx) {
  const auto code = need_code(ctx);
  const auto e = class_degree(code, ctx.opt.max_len, ctx.opt.plateau);
  emit(ctx, estimate_to_json(e, code));
  estimate_note(ctx, "class degree of " + ctx.opt.which, e);
  return 0;
}

int cmd_relative(Context& ctx) {
  const auto loaded = need_triple(ctx);
  const auto& t = loaded.triple;
  DegreeEstimate e;
  if (ctx.opt.point.empty()) {
    e = relative_class_degree(t, ctx.opt.max_len, ctx.opt.plateau);
  } else {
    const auto y = parse_point(t.y(), ctx.opt.point);
    e = periodic_point_relative_degree(t, y, ctx.opt.max_len, ctx.opt.plateau);
  }
  emit(ctx, relative_estimate_to_json(e, t));
  estimate_note(ctx, "relative degree", e);
  return 0;
}

int cmd_magic(Context& ctx) {
  const auto code = need_code(ctx);
  const auto r = find_magic_block(code, ctx.opt.max_len, ctx.opt.plateau);
  emit(ctx, {{"block", code.codomain().format(r.w)},
             {"coordinate", r.coordinate},
             {"value", r.value},
             {"certified", r.certified},
             {"scanned_length", r.scanned_length},
             {"plateau", r.plateau},
             {"history", r.history}});
  ctx.err << "d*(" << code.codomain().format(r.w) << ", " << r.coordinate << ") = " << r.value
          << (r.certified ? "" : " (not certified)") << '\n';
  return 0;
}

json bridge_json(const BridgeWitness& b, const Alphabet& domain) {
  return {{"left", b.left.format(domain)},   {"right", b.right.format(domain)},
          {"m", b.m},                         {"n", b.n},
          {"middle", domain.format(b.middle)}, {"mode", std::string(to_string(b.mode))},
          {"provenance", b.provenance}};
}

int cmd_bridge(Context& ctx) {
  if (ctx.opt.from.empty() || ctx.opt.to.empty()) throw Error(ErrorKind::ParseError, "--from and --to are required");
  if (!ctx.opt.block.empty()) {
    // Two-way construction from a presented block of the triple.
    const auto loaded = need_triple(ctx);
    const auto& t = loaded.triple;
    const auto& xa = t.x().alphabet();
    const auto x = parse_point(t.x(), ctx.opt.from);
    const auto x2 = parse_point(t.x(), ctx.opt.to);
    const auto w = t.y().alphabet().parse(ctx.opt.block);
    const auto r = ctx.opt.absolute ? depth(t.phi(), w) : relative_depth(t, w);
    std::optional<Error> last;
    for (Symbol via : r.certificate.routing_set.members()) {
      try {
        const auto [forward, backward] = construct_bridge(t, x, x2, ctx.opt.occurrence, r.certificate, via);
        const auto& image = ctx.opt.absolute ? t.phi() : t.pi();
        const bool ok = verify_bridge(image, forward) && verify_bridge(image, backward);
        emit(ctx, json{{"found", true},
                       {"via", xa.name(via)},
                       {"forward", bridge_json(forward, xa)},
                       {"backward", bridge_json(backward, xa)},
                       {"verified", ok}});
        ctx.err << "bridges through " << xa.name(via) << (ok ? " verified" : " FAILED replay") << '\n';
        return ok ? 0 : kCheckFailed;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotRoutable) throw;
        last = e;
      }
    }
    emit(ctx, {{"found", false}});
    ctx.err << "no routing symbol joins the two points" << (last ? std::string(": ") + last->what() : "") << '\n';
    return 0;
  }
  const auto code = need_code(ctx);
  const auto& xa = code.domain().alphabet();
  const auto x = parse_point(code.domain(), ctx.opt.from);
  const auto x2 = parse_point(code.domain(), ctx.opt.to);
  const std::size_t window = ctx.opt.window ? ctx.opt.window : default_bridge_window(code);
  const auto r = bounded_bridge_exists(code, x, x2, ctx.opt.m, window);
  json doc = {{"found", r.found}, {"window", r.window}};
  if (r.witness) doc["witness"] = bridge_json(*r.witness, xa);
  emit(ctx, doc);
  if (r.found)
    ctx.err << "bridge at m=" << r.witness->m << " rejoins at n=" << r.witness->n << '\n';
  else
    ctx.err << "no bridge within window " << r.window << '\n';
  return 0;
}

int cmd_classes_fixed(Context& ctx) {
  const auto code = need_code(ctx);
  if (ctx.opt.z.empty()) throw Error(ErrorKind::ParseError, "--z is required");
  const Symbol z = code.codomain().index(ctx.opt.z);
  std::optional<VertexShift> codomain;
  if (!ctx.opt.triple.empty() && ctx.opt.code.empty()) {
    const auto loaded = load_triple(ctx.opt.triple);
    if (ctx.opt.which == "phi") codomain = loaded.triple.y();
    else codomain = loaded.triple.z();
  }
  const auto r = fixed_point_class_oracle(code, z, codomain ? &*codomain : nullptr);
  const auto& xa = code.domain().alphabet();
  json components = json::array();
  for (const auto& c : r.components) {
    json symbols = json::array();
    for (Symbol s : c.symbols) symbols.push_back(xa.name(s));
    components.push_back({{"symbols", symbols}, {"period", c.period}});
  }
  json reps = json::array();
  for (std::size_t i = 0; i < r.representatives.size(); ++i)
    reps.push_back({{"point", r.representatives[i].format(xa)}, {"component", r.representative_component[i]}});
  json reaches = json::array();
  for (auto [a, b] : r.reaches) reaches.push_back({a, b});
  emit(ctx, {{"z", ctx.opt.z},
             {"count", r.count},
             {"components", components},
             {"representatives", reps},
             {"reaches", reaches},
             {"caveat", r.caveat}});
  ctx.err << r.count << " transition classes over (" << ctx.opt.z << ")\n";
  return 0;
}

std::vector<TripleGenSpec> specs_from_json(const json& doc) {
  std::vector<TripleGenSpec> out;
  auto one = [&](const json& entry) {
    if (entry.is_object() && entry.contains("sweep")) {
      const auto& range = entry["sweep"];
      if (!range.is_array() || range.size() != 2) throw Error(ErrorKind::ParseError, "sweep must be [from, to]");
      for (auto s = range[0].get<std::uint64_t>(); s <= range[1].get<std::uint64_t>(); ++s)
        out.push_back(sweep_spec(s));
    } else {
      out.push_back(spec_from_json(entry));
    }
  };
  if (doc.is_array()) {
    for (const auto& e : doc) one(e);
  } else {
    one(doc);
  }
  return out;
}

int cmd_verify(Context& ctx) {
  std::vector<SuiteCase> cases;
  for (const auto& c : ctx.opt.corpus) {
    if (c == "builtin") {
      auto b = builtin_cases();
      cases.insert(cases.end(), b.begin(), b.end());
    } else if (std::filesystem::is_directory(c)) {
      auto d = directory_cases(c);
      cases.insert(cases.end(), d.begin(), d.end());
    } else {
      cases.push_back({std::filesystem::path(c).stem().string(), load_triple(c).triple});
    }
  }
  if (!ctx.opt.gen.empty()) {
    json doc;
    try {
      doc = json::parse(ctx.opt.gen);
    } catch (const json::exception&) {
      doc = read_json_file(ctx.opt.gen);
    }
    auto g = generated_cases(specs_from_json(doc));
    cases.insert(cases.end(), g.begin(), g.end());
  }
  SuiteOptions options;
  options.max_length = ctx.opt.max_len;
  options.plateau = ctx.opt.plateau;
  options.jobs = ctx.opt.jobs;
  const auto summary = run_suite(cases, options);
  for (const auto& r : summary.reports) {
    emit(ctx, report_to_json(r));
    if (r.failed()) ctx.err << "FAIL " << r.case_id << '\n';
  }
  emit(ctx, {{"summary", summary_to_json(summary)}});
  ctx.err << summary.reports.size() << " cases: " << summary.pass << " pass, " << summary.fail << " fail, "
          << summary.inconclusive << " inconclusive, " << summary.skipped << " skipped\n";
  return summary.ok() ? 0 : kCheckFailed;
}

int cmd_generate(Context& ctx) {
  std::vector<TripleGenSpec> specs = {ctx.opt.spec};
  if (!ctx.opt.gen.empty()) specs = specs_from_json(read_json_file(ctx.opt.gen));
  for (const auto& spec : specs) {
    const auto t = generate_triple(spec);
    emit(ctx, triple_to_json(t));
    ctx.err << "seed " << spec.seed << ": |X|=" << t.x().size() << " |Y|=" << t.y().size()
            << " |Z|=" << t.z_alphabet().size() << '\n';
  }
  return 0;
}

int cmd_dump(Context& ctx) {
  const auto loaded = need_triple(ctx);
  if (ctx.opt.format == "json") {
    ctx.out << triple_to_json(loaded.triple).dump(2) << '\n';
  } else if (ctx.opt.format == "dot") {
    ctx.out << triple_to_dot(loaded.triple);
  } else {
    throw Error(ErrorKind::ParseError, "--format must be json or dot");
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  Context ctx{out, err, opt};
  CLI::App app{"Degrees, depths and bridges of factor codes between shifts of finite type", "sftcd"};
  app.require_subcommand(1);

  auto source = [&](CLI::App* sub) {
    sub->add_option("--triple", opt.triple, "triple document, builtin:<name> or builtin name");
    sub->add_option("--code", opt.code, "code document (or triple document, see --which)");
    sub->add_option("--which", opt.which, "code of the triple to use")->check(CLI::IsMember({"phi", "psi", "pi"}));
  };
  auto scan = [&](CLI::App* sub) {
    sub->add_option("--max-len", opt.max_len, "longest block length scanned")->check(CLI::PositiveNumber);
    sub->add_option("--plateau", opt.plateau, "equal trailing values required to stabilize");
    sub->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  std::map<CLI::App*, int (*)(Context&)> handlers;

  auto* d = app.add_subcommand("depth", "depth of a block under a code");
  source(d);
  d->add_option("--block", opt.block, "codomain block")->required();
  handlers[d] = cmd_depth;

  auto* rd = app.add_subcommand("rdepth", "relative depth of a Y-block");
  source(rd);
  rd->add_option("--block", opt.block, "Y-block")->required();
  handlers[rd] = cmd_rdepth;

  auto* cd = app.add_subcommand("class-degree", "class degree estimate of a code");
  source(cd);
  scan(cd);
  handlers[cd] = cmd_class_degree;

  auto* rel = app.add_subcommand("relative", "degree of phi relative to psi");
  source(rel);
  scan(rel);
  rel->add_option("--point", opt.point, "restrict to blocks of a periodic point (w)@k of Y");
  handlers[rel] = cmd_relative;

  auto* mg = app.add_subcommand("magic", "magic block search");
  source(mg);
  scan(mg);
  handlers[mg] = cmd_magic;

  auto* br = app.add_subcommand("bridge", "bridges between periodic points");
  source(br);
  br->add_option("--from", opt.from, "periodic point (w)@k");
  br->add_option("--to", opt.to, "periodic point (w)@k");
  br->add_option("--m", opt.m, "cut coordinate");
  br->add_option("--window", opt.window, "largest n - m searched (default 2|A_X|)");
  br->add_option("--block", opt.block, "construct bridges from the depth certificate of this Y-block");
  br->add_option("--occurrence", opt.occurrence, "coordinate where the block starts");
  br->add_flag("--absolute", opt.absolute, "use the absolute certificate of phi");
  handlers[br] = cmd_bridge;

  auto* cf = app.add_subcommand("classes-fixed", "transition classes over a fixed point");
  source(cf);
  cf->add_option("--z", opt.z, "codomain symbol")->required();
  handlers[cf] = cmd_classes_fixed;

  auto* vf = app.add_subcommand("verify", "property checks over a corpus and generated triples");
  scan(vf);
  vf->add_option("--corpus", opt.corpus, "directory, triple file or 'builtin'");
  vf->add_option("--gen", opt.gen, "generator spec file or inline JSON");
  handlers[vf] = cmd_verify;

  auto* gn = app.add_subcommand("generate", "generate a random triple");
  gn->add_option("--seed", opt.spec.seed);
  gn->add_option("--y", opt.spec.y_symbols, "Y symbols");
  gn->add_option("--blowup-min", opt.spec.blowup_min);
  gn->add_option("--blowup-max", opt.spec.blowup_max);
  gn->add_option("--z", opt.spec.z_symbols, "Z symbols");
  gn->add_option("--density", opt.spec.edge_density);
  gn->add_option("--gen", opt.gen, "spec file");
  handlers[gn] = cmd_generate;

  auto* dp = app.add_subcommand("dump", "canonical form of a triple");
  source(dp);
  dp->add_option("--format", opt.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  handlers[dp] = cmd_dump;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    for (const auto& [sub, handler] : handlers)
      if (sub->parsed()) return handler(ctx);
  } catch (const Error& e) {
    emit(ctx, {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}});
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace sftcd
