#include "rost/cli.hpp"

#include "rost/catalog.hpp"
#include "rost/report.hpp"
#include "rost/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace rost {

namespace {

struct Options {
  std::vector<std::string> ids;
  unsigned long p = 2;
  std::optional<int> n, m, s, d, n1, n2;
  std::vector<int> di, cdeg;
  std::string image = "versal";
  std::string family = "rost";
  std::vector<std::string> kill;
  bool structure = false;
  std::string format = "json";
  std::string out_path;
  ExecPolicy policy = ExecPolicy::parallel;
};

CatalogParams catalog_params(const Options& o) {
  CatalogParams c;
  c.p = o.p;
  c.n = o.n.value_or(2);
  c.m = o.m.value_or(1);
  c.s = o.s.value_or(2);
  c.d = o.d.value_or(0);
  c.di = o.di;
  c.cdeg = o.cdeg;
  return c;
}

VerifyParams verify_params(const Options& o) {
  VerifyParams v;
  v.p = o.p;
  v.n = o.n;
  v.n1 = o.n1;
  v.n2 = o.n2;
  v.m = o.m;
  v.s = o.s;
  v.d = o.d;
  v.di = o.di;
  v.cdeg = o.cdeg;
  v.image = o.image;
  v.family = o.family;
  return v;
}

std::string normal_form_text(const NormalForm& nf) {
  std::ostringstream os;
  for (const auto& [d, inv] : nf.degrees) os << "degree " << d << ": " << inv.to_string(nf.p) << "\n";
  if (nf.degrees.empty()) os << "zero module\n";
  return os.str();
}

std::string emit_normal_form(const NormalForm& nf, const Options& o) {
  if (o.format == "text") return normal_form_text(nf);
  return nlohmann::json(nf).dump(2) + "\n";
}

std::string do_build(const Options& o) {
  if (o.ids.size() != 1) throw UsageError("build takes exactly one object id");
  const CatalogObject obj = catalog_build(o.ids[0], catalog_params(o));
  const NormalForm nf = normalize(obj.module());
  if (!o.structure) return emit_normal_form(nf, o);
  nlohmann::json j = {{"id", obj.id}, {"params", obj.params}, {"normal_form", nf}, {"notes", obj.notes}};
  if (obj.omega) j["structure"] = structure_table_json(*obj.ring);
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& [d, pc] : obj.module().pieces())
    for (const auto& g : pc.generators) gens.push_back({{"degree", d}, {"name", g.name}});
  j["generators"] = gens;
  if (obj.km) j["km"] = *obj.km;
  if (o.format == "text") {
    std::string s = normal_form_text(nf);
    for (const auto& g : gens) s += "generator " + g["name"].get<std::string>() + " in degree " + g["degree"].dump() + "\n";
    for (const auto& n : obj.notes) s += "note: " + n + "\n";
    return s;
  }
  return j.dump(2) + "\n";
}

std::string do_tensor(const Options& o) {
  if (o.ids.size() < 2) throw UsageError("tensor takes at least two object ids");
  std::vector<std::shared_ptr<const GradedRing>> rings;
  for (const auto& id : o.ids) rings.push_back(catalog_build(id, catalog_params(o)).ring);
  return emit_normal_form(normalize(tensor_rings(rings).module()), o);
}

std::string do_quotient(const Options& o) {
  if (o.ids.size() != 1) throw UsageError("quotient takes exactly one object id");
  if (o.kill.empty()) throw UsageError("quotient needs --kill with at least one generator name");
  const CatalogObject obj = catalog_build(o.ids[0], catalog_params(o));
  std::vector<Element> gens;
  for (const auto& name : o.kill) {
    if (!obj.ring->has(name)) throw UsageError("no generator named " + name + " in " + obj.id);
    gens.push_back(obj.ring->element(name));
  }
  return emit_normal_form(normalize(prune_trivial(obj.ring->quotient_ideal(gens).module())), o);
}

std::string do_list(const Options& o) {
  if (o.format == "text") {
    std::string s = "objects:\n";
    for (const auto& id : catalog_ids()) s += "  " + id + "\n";
    s += "theorems:\n";
    for (const auto& id : theorem_ids()) s += "  " + id + "\n";
    return s;
  }
  return nlohmann::json{{"objects", catalog_ids()}, {"theorems", theorem_ids()}}.dump(2) + "\n";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::verified:
      return 0;
    case Verdict::refuted:
      return 1;
    case Verdict::not_certifiable:
      return 3;
  }
  return 3;
}

void write(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw UsageError("cannot open " + o.out_path);
  f << text;
}

void add_object_flags(CLI::App* sub, Options& o) {
  sub->add_option("--p", o.p, "prime")->check(CLI::PositiveNumber);
  sub->add_option("--n", o.n, "Rost index or quadric level");
  sub->add_option("--m", o.m, "filtration index m");
  sub->add_option("--s", o.s, "number of factors");
  sub->add_option("--d", o.d, "quadric dimension");
  sub->add_option("--di", o.di, "d_1(d) ... d_{n-1}(d) for excellent quadrics")->delimiter(',');
  sub->add_option("--cdeg", o.cdeg, "degrees of c_1(d) ... c_{n-1}(d)")->delimiter(',');
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", o.out_path, "write output to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chow rings of Rost motives and their Künneth quotients", "rostcalc"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "normal form of a catalog object");
  build->add_option("id", o.ids, "object id")->required();
  build->add_flag("--structure", o.structure, "include generators and structure constants");
  add_object_flags(build, o);

  auto* verify = app.add_subcommand("verify", "verify one theorem");
  verify->add_option("id", o.ids, "theorem id")->required();
  verify->add_option("--n1", o.n1, "first factor index");
  verify->add_option("--n2", o.n2, "second factor index");
  verify->add_option("--image", o.image, "image generators: versal, product or none");
  verify->add_option("--family", o.family, "factor family: rost or quadric");
  add_object_flags(verify, o);

  auto* all = app.add_subcommand("verify-all", "run the default parameter grid");
  bool serial = false;
  all->add_flag("--serial", serial, "run the grid on one thread");
  all->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  all->add_option("--out", o.out_path, "write output to this file");

  auto* list = app.add_subcommand("list", "list object and theorem ids");
  list->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));

  auto* tensor = app.add_subcommand("tensor", "normal form of a tensor product of catalog objects");
  tensor->add_option("ids", o.ids, "object ids")->required();
  add_object_flags(tensor, o);

  auto* quot = app.add_subcommand("quotient", "normal form of a catalog object modulo named generators");
  quot->add_option("id", o.ids, "object id")->required();
  quot->add_option("--kill", o.kill, "generator names")->delimiter(',');
  add_object_flags(quot, o);

  std::vector<const char*> argv{"rostcalc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*build) {
      write(do_build(o), o, out);
    } else if (*verify) {
      if (o.ids.size() != 1) throw UsageError("verify takes exactly one theorem id");
      const TheoremReport rep = verify_theorem(o.ids[0], verify_params(o));
      write(o.format == "text" ? to_text(rep) : nlohmann::json(rep).dump(2) + "\n", o, out);
      return exit_code(rep.verdict);
    } else if (*all) {
      const auto reports = verify_all(serial ? ExecPolicy::serial : ExecPolicy::parallel);
      std::string text;
      if (o.format == "text") {
        for (const auto& r : reports) text += to_text(r);
      } else {
        text = verify_all_json(reports).dump(2) + "\n";
      }
      write(text, o, out);
      bool refuted = false;
      for (const auto& r : reports) refuted = refuted || r.verdict == Verdict::refuted;
      return refuted ? 1 : 0;
    } else if (*list) {
      write(do_list(o), o, out);
    } else if (*tensor) {
      write(do_tensor(o), o, out);
    } else if (*quot) {
      write(do_quotient(o), o, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace rost
