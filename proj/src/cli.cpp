#include "bicoalg/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "bicoalg/comonadics.hpp"
#include "bicoalg/errors.hpp"
#include "bicoalg/examples.hpp"
#include "bicoalg/serialize.hpp"
#include "bicoalg/smash.hpp"

namespace bicoalg::cli {

namespace {

struct Options {
  std::string kind;
  std::vector<std::string> files;
  std::string bico_path;
  std::string objects_path;
  std::string bcc_path;
  std::string output;
  std::string format = "text";
  std::uint64_t seed = 1;
  bool second_extension = false;
  bool unchecked = false;
  // example parameters
  std::string group = "Z2";
  std::string action = "regular";
  std::size_t set_size = 0;
  std::string phi = "trivial";
  std::string coalgebra = "grouplike2";
  std::string field = "Q";
};

Field parse_field(const std::string& s) {
  if (s == "Q") return Field::rationals();
  try {
    return Field::prime(std::stoull(s));
  } catch (const std::logic_error&) {
    throw SchemaError("--field", "expected Q or a prime, got '" + s + "'");
  }
}

Coalgebra coalgebra_by_name(const std::string& name) {
  const std::string gl = "grouplike";
  if (name.rfind(gl, 0) == 0) return grouplike_coalgebra(std::stoul(name.substr(gl.size())));
  const std::string du = "dual";
  if (name.rfind(du, 0) == 0) return dual_group_coalgebra(FiniteGroup::by_name(name.substr(du.size())));
  throw SchemaError("--coalgebra", "expected grouplike<n> or dual<group>, got '" + name + "'");
}

GSet gset_by_options(const FiniteGroup& g, const Options& o) {
  GSet x;
  if (o.action == "regular") {
    x = GSet::regular(g);
  } else if (o.action == "conjugation") {
    x = GSet::conjugation(g);
  } else if (o.action == "swap") {
    if (g.order != 2) throw SchemaError("--action", "swap needs a group of order 2");
    x = GSet::swap();
  } else if (o.action == "trivial") {
    x.size = o.set_size ? o.set_size : 1;
    x.action.assign(x.size, std::vector<std::size_t>(g.order));
    for (std::size_t i = 0; i < x.size; ++i) x.action[i].assign(g.order, i);
  } else {
    throw SchemaError("--action", "expected regular, conjugation, swap or trivial");
  }
  if (o.set_size && o.set_size != x.size) {
    throw SchemaError("--set", "the " + o.action + " action has " + std::to_string(x.size) + " points");
  }
  std::vector<std::size_t> phi(x.size, g.identity);
  if (o.phi == "identity") {
    if (x.size != g.order) throw SchemaError("--phi", "identity needs X = G");
    for (std::size_t i = 0; i < x.size; ++i) phi[i] = i;
  } else if (o.phi != "trivial") {
    std::stringstream ss(o.phi);
    std::string item;
    std::size_t i = 0;
    while (std::getline(ss, item, ',')) {
      if (i >= x.size) throw SchemaError("--phi", "more values than points");
      phi[i++] = std::stoul(item);
    }
    if (i != x.size) throw SchemaError("--phi", "expected one group element per point");
  }
  return x.with_phi(phi);
}

// Writes `text` to the -o path or to `out`.
void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw Error("cannot write " + o.output);
  f << text << '\n';
}

int emit_report(const Options& o, const CheckReport& r, std::ostream& out) {
  emit(o, o.format == "json" ? report_json(r) : r.text(), out);
  return r.passed() ? Pass : Fail;
}

Bicoalgebroid need_bico(const Document& doc, const std::optional<Bicoalgebroid>& context, const std::string& what) {
  if (doc.bicoalgebroid) return *doc.bicoalgebroid;
  if (context) return *context;
  throw SchemaError("/bicoalgebroid", what + " needs a bicoalgebroid (in the file or via --bico)");
}

int do_verify(const Options& o, std::ostream& out) {
  if (o.files.size() != 1) throw SchemaError("", "verify takes exactly one input file");
  std::optional<Bicoalgebroid> context;
  if (!o.bico_path.empty()) context = need_bico(read_document(o.bico_path), std::nullopt, "--bico");
  const Document doc = read_document(o.files[0], context ? &*context : nullptr);
  std::mt19937_64 rng(o.seed);
  CheckReport r;
  const std::string& k = o.kind;
  if (k == "coalgebra") {
    if (!doc.coalgebra) throw SchemaError("/coalgebra", "missing required field");
    r = verify_coalgebra(*doc.coalgebra);
  } else if (k == "bicomodule") {
    if (doc.bicomodules.empty()) throw SchemaError("/comodules", "no bicomodules in the document");
    for (const auto& m : doc.bicomodules) r.merge(verify_bicomodule(m), m.label);
  } else if (k == "bicoalgebroid") {
    const Bicoalgebroid b = need_bico(doc, context, "verify bicoalgebroid");
    r = verify_bicoalgebroid(b, VerifyOptions{o.seed, o.second_extension, false});
  } else if (k == "h-comodule") {
    const Bicoalgebroid b = need_bico(doc, context, "verify h-comodule");
    if (doc.h_comodules.empty()) throw SchemaError("/comodules", "no h_comodule entries in the document");
    for (const auto& m : doc.h_comodules) r.merge(verify_h_comodule(m, b), m.label);
  } else if (k == "yd") {
    const Bicoalgebroid b = need_bico(doc, context, "verify yd");
    if (!doc.yd_module) throw SchemaError("/yd_module", "missing required field");
    YDModule z = o.second_extension ? with_random_action_extension(*doc.yd_module, rng) : *doc.yd_module;
    r = verify_yd(z, b);
    r.merge(check_induced_coaction(z.module, b), "induced");
  } else if (k == "bcc") {
    const Bicoalgebroid b = need_bico(doc, context, "verify bcc");
    if (!doc.bcc) throw SchemaError("/bcc", "missing required field");
    BCCData d = *doc.bcc;
    if (o.second_extension) d.yd = with_random_action_extension(d.yd, rng);
    r = verify_bcc(d, b);
  } else if (k == "bicomonad") {
    const Bicoalgebroid b = need_bico(doc, context, "verify bicomonad");
    std::vector<Bicomodule> objects{Bicomodule::regular(b.base()), regular_bicomodule(b), free_bicomodule(b.base())};
    std::vector<HComodule> comodules{unit_h_comodule(b), regular_h_comodule(b)};
    if (!o.objects_path.empty()) {
      Document objs = read_document(o.objects_path, &b);
      objects = objs.bicomodules;
      comodules = objs.h_comodules;
    }
    r = verify_bicomonad(b, objects, comodules);
  } else if (k == "opmonoidal") {
    const Bicoalgebroid b = need_bico(doc, context, "verify opmonoidal");
    if (!doc.bcc) throw SchemaError("/bcc", "missing required field");
    std::vector<HComodule> objects{unit_h_comodule(b), regular_h_comodule(b)};
    if (!o.objects_path.empty()) objects = read_document(o.objects_path, &b).h_comodules;
    r = verify_opmonoidal_comonad(*doc.bcc, b, objects);
  } else {
    throw SchemaError("", "unknown verify target '" + k + "'");
  }
  return emit_report(o, r, out);
}

int do_construct(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.bcc_path.empty()) throw SchemaError("--bcc", "construct needs --bcc");
  std::optional<Bicoalgebroid> context;
  if (!o.bico_path.empty()) context = need_bico(read_document(o.bico_path), std::nullopt, "--bico");
  const Document src = read_document(o.bcc_path, context ? &*context : nullptr);
  if (!src.bcc) throw SchemaError("/bcc", "missing required field");
  const Bicoalgebroid b = need_bico(src, context, "construct");
  Document doc;
  doc.field = src.field;
  if (o.kind == "scalar-extension") {
    if (!o.unchecked) {
      CheckReport pre = verify_bcc(*src.bcc, b);
      if (!pre.passed()) {
        err << "input is not a braided cocommutative coalgebra\n";
        Options report_only = o;
        report_only.output.clear();
        emit_report(report_only, pre, err);
        return Fail;
      }
    }
    doc.bicoalgebroid = scalar_extension_unchecked(*src.bcc, b);
  } else if (o.kind == "smash-coproduct") {
    doc.coalgebra = smash_coproduct(*src.bcc, b).coalgebra;
  } else {
    throw SchemaError("", "unknown construct target '" + o.kind + "'");
  }
  emit(o, write_document(doc), out);
  return Pass;
}

int do_example(const Options& o, std::ostream& out) {
  const Field f = parse_field(o.field);
  Document doc;
  doc.field = f;
  const std::string& k = o.kind;
  if (k == "coalgebra") {
    doc.coalgebra = in_field(coalgebra_by_name(o.coalgebra), f);
  } else if (k == "group-hopf") {
    doc.bicoalgebroid = in_field(group_hopf(FiniteGroup::by_name(o.group)), f);
  } else if (k == "coenveloping") {
    doc.bicoalgebroid = in_field(coenveloping_bico(coalgebra_by_name(o.coalgebra)), f);
  } else if (k == "finite-groupoid") {
    const FiniteGroup g = FiniteGroup::by_name(o.group);
    doc.bicoalgebroid = in_field(finite_groupoid_bico(action_groupoid(g, gset_by_options(g, o))), f);
  } else if (k == "action-groupoid" || k == "conjugation-bcc" || k == "regular-bcc") {
    const FiniteGroup g = FiniteGroup::by_name(o.group);
    const Bicoalgebroid h = group_hopf(g);
    BCCData d = k == "action-groupoid" ? action_groupoid_bcc(g, gset_by_options(g, o), h)
                : k == "conjugation-bcc" ? conjugation_bcc(g, h)
                                         : regular_bcc(g, h);
    doc.bicoalgebroid = in_field(h, f);
    doc.bcc = in_field(d, f, *doc.bicoalgebroid);
  } else {
    throw SchemaError("", "unknown example '" + k + "'");
  }
  emit(o, write_document(doc), out);
  return Pass;
}

int do_compare(const Options& o, std::ostream& out) {
  if (o.files.size() != 2) throw SchemaError("", "compare takes two bicoalgebroid files");
  const Bicoalgebroid a = need_bico(read_document(o.files[0]), std::nullopt, "compare");
  const Bicoalgebroid b = need_bico(read_document(o.files[1]), std::nullopt, "compare");
  CheckReport r;
  if (a.n() != b.n() || a.c() != b.c()) {
    r.fail("dimensions", {0, std::to_string(a.n()) + "/" + std::to_string(a.c()), std::to_string(b.n()) + "/" + std::to_string(b.c()),
                          "total/base dimensions differ"});
    return emit_report(o, r, out);
  }
  std::vector<std::size_t> pt(a.n()), pb(a.c());
  for (std::size_t i = 0; i < pt.size(); ++i) pt[i] = i;
  for (std::size_t i = 0; i < pb.size(); ++i) pb[i] = i;
  return emit_report(o, compare_bicoalgebroids(a, b, pt, pb), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification and construction of bicoalgebroids, Yetter-Drinfel'd modules and scalar extensions", "bicoalg"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* s) {
    s->add_option("-o,--output", o.output, "write the result here instead of stdout");
    s->add_option("--seed", o.seed, "seed for random extensions");
  };
  auto* verify = app.add_subcommand("verify", "run a verifier on a structure document");
  verify->add_option("kind", o.kind, "coalgebra | bicomodule | bicoalgebroid | h-comodule | yd | bcc | bicomonad | opmonoidal")->required();
  verify->add_option("file", o.files, "input document")->required();
  verify->add_option("--bico", o.bico_path, "bicoalgebroid document used as context");
  verify->add_option("--objects", o.objects_path, "document with the object list for comonad checks");
  verify->add_flag("--second-extension", o.second_extension, "re-run with a random second extension of mu / the action");
  verify->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  common(verify);

  auto* construct = app.add_subcommand("construct", "build a structure from documents");
  construct->add_option("kind", o.kind, "scalar-extension | smash-coproduct")->required();
  construct->add_option("--bcc", o.bcc_path, "document with the bcc block")->required();
  construct->add_option("--bico", o.bico_path, "bicoalgebroid document, if not inside the bcc document");
  construct->add_flag("--unchecked", o.unchecked, "skip the braided-cocommutativity gate");
  construct->add_option("--format", o.format, "format of the gate report")->check(CLI::IsMember({"text", "json"}));
  common(construct);

  auto* example = app.add_subcommand("example", "emit a generated example document");
  example->add_option("kind", o.kind,
                      "coalgebra | group-hopf | coenveloping | finite-groupoid | action-groupoid | conjugation-bcc | regular-bcc")
      ->required();
  example->add_option("--group", o.group, "Z<n>, S3 or K4");
  example->add_option("--set", o.set_size, "number of points of the G-set");
  example->add_option("--action", o.action, "regular | conjugation | swap | trivial");
  example->add_option("--phi", o.phi, "trivial | identity | comma-separated group elements");
  example->add_option("--coalgebra", o.coalgebra, "grouplike<n> or dual<group>");
  example->add_option("--field", o.field, "Q or a prime p");
  common(example);

  auto* compare = app.add_subcommand("compare", "entry-wise comparison of two bicoalgebroids");
  compare->add_option("files", o.files, "two bicoalgebroid documents")->required()->expected(2);
  compare->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  common(compare);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Pass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return Schema;
  }

  try {
    if (verify->parsed()) return do_verify(o, out);
    if (construct->parsed()) return do_construct(o, out, err);
    if (example->parsed()) return do_example(o, out);
    return do_compare(o, out);
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << '\n';
    return Schema;
  } catch (const Error& e) {
    err << "structural error: " << e.what() << '\n';
    return Structural;
  } catch (const std::exception& e) {
    err << "structural error: " << e.what() << '\n';
    return Structural;
  }
}

}  // namespace bicoalg::cli
