#include "pcconj/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcconj/braid.hpp"
#include "pcconj/errors.hpp"
#include "pcconj/instances.hpp"

namespace pcconj::cli {

using nlohmann::json;

namespace {

constexpr int kSchema = 1;

std::set<int> parse_points(const std::string& text) {
  std::set<int> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    std::istringstream ts(token);
    int v = 0;
    while (ts >> v) out.insert(v);
    if (!ts.eof()) throw PreconditionError("cannot parse point list '" + text + "'");
  }
  return out;
}

std::set<int> initial_segment(int m) {
  std::set<int> out;
  for (int i = 1; i <= m; ++i) out.insert(i);
  return out;
}

BraidWord read_word(const GroupContext& ctx, const std::string& text,
                    bool artin) {
  if (!artin) return BraidWord::parse(ctx.strands(), text);
  const auto& pres = ctx.presentation();
  if (!pres) {
    throw PreconditionError(ctx.name() + " has no Artin presentation attached");
  }
  std::vector<int> letters;
  std::istringstream is(text);
  int v = 0;
  while (is >> v) letters.push_back(v);
  if (!is.eof()) throw PreconditionError("cannot parse word '" + text + "'");
  return pres->realize(letters);
}

json certificate_json(const std::string& group, int strands,
                      const std::set<int>& x, const BraidWord& a,
                      const BraidWord& b, const GroupContext& ctx,
                      const Decision& d) {
  json j;
  j["schema"] = kSchema;
  j["group"] = group;
  j["strands"] = strands;
  j["x"] = std::vector<int>(x.begin(), x.end());
  j["a"] = a.letters();
  j["b"] = b.letters();
  j["conjugate"] = d.conjugate();
  j["decided_at"] = d.stage == Decision::Stage::Ambient ? "ambient" : "lift";
  if (d.conjugate()) {
    const auto& h = *d.conjugator;
    j["conjugator"] = h.letters();
    j["checks"] = {{"word_problem", equals(conjugate_word(a, h), b)},
                   {"image_in_Kprime", ctx.contains(h)}};
  } else {
    j["conjugator"] = nullptr;
    j["checks"] = {{"word_problem", false}, {"image_in_Kprime", false}};
  }
  return j;
}

int report(const json& cert, bool as_json, std::ostream& out) {
  const bool conjugate = cert["conjugate"].get<bool>();
  if (as_json) {
    out << cert.dump(2) << '\n';
  } else if (conjugate) {
    std::vector<int> h = cert["conjugator"];
    out << "TRUE\nconjugator: " << BraidWord(cert["strands"].get<int>(), h).str()
        << '\n';
  } else {
    out << "FALSE (decided at the " << cert["decided_at"].get<std::string>()
        << " step)\n";
  }
  return conjugate ? kTrue : kFalse;
}

int verify_file(const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  json cert;
  try {
    in >> cert;
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("malformed certificate: ") + e.what());
  }
  if (cert.value("schema", 0) != kSchema) {
    throw PreconditionError("unsupported certificate schema");
  }
  const auto group = cert.at("group").get<std::string>();
  const int strands = cert.at("strands").get<int>();
  const auto xs = cert.at("x").get<std::vector<int>>();
  const std::set<int> x(xs.begin(), xs.end());
  const auto ctx = named_context(group, strands, x);
  const BraidWord a(strands, cert.at("a").get<std::vector<int>>());
  const BraidWord b(strands, cert.at("b").get<std::vector<int>>());

  if (!ctx.contains(a) || !ctx.contains(b)) {
    out << "invalid: inputs are not in " << ctx.name() << '\n';
    return kFalse;
  }
  if (cert.at("conjugate").get<bool>()) {
    if (cert.at("conjugator").is_null()) {
      out << "invalid: missing conjugator\n";
      return kFalse;
    }
    const BraidWord h(strands, cert.at("conjugator").get<std::vector<int>>());
    if (!equals(conjugate_word(a, h), b)) {
      out << "invalid: conjugator fails the word problem check\n";
      return kFalse;
    }
    if (!ctx.contains(h)) {
      out << "invalid: conjugator is not in " << ctx.name() << '\n';
      return kFalse;
    }
    out << "valid\n";
    return kTrue;
  }
  // A negative has no witness; re-decide it.
  if (ctx.solve(a, b).conjugate()) {
    out << "invalid: the pair is conjugate in " << ctx.name() << '\n';
    return kFalse;
  }
  out << "valid\n";
  return kTrue;
}

}  // namespace

GroupContext named_context(const std::string& group, int strands,
                           const std::set<int>& x) {
  if (group == "Bn") return braid_group_context(strands);
  if (group == "Bn-X") return bn_x_context(strands, x);
  if (group == "colored") return colored_context(strands);
  if (group == "typeB") return type_b_context(strands - 1).ambient;
  if (group == "affineA") return affine_a_context(strands - 1);
  if (group == "affineC") return affine_c_context(strands);
  if (group == "IBn") {
    const int m = static_cast<int>(x.size());
    if (x != initial_segment(m)) {
      throw PreconditionError("IBn needs --x of the form 1,2,...,m");
    }
    return ib_context(strands, m);
  }
  throw PreconditionError("unknown group '" + group + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Explicit conjugacy in braid groups and PC subgroups", "pcconj"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit machine-readable JSON");

  int strands = 0;
  std::string word_a, word_b, group, x_list, cert_path;
  bool artin = false;

  auto* nf = app.add_subcommand("nf", "Print the left normal form");
  nf->add_option("--strands", strands)->required();
  nf->add_option("word", word_a)->required();

  auto* conj = app.add_subcommand("conj", "Decide conjugacy in B_n");
  conj->add_option("--strands", strands)->required();
  conj->add_option("a", word_a)->required();
  conj->add_option("b", word_b)->required();

  const std::vector<std::string> groups{"Bn",      "Bn-X",    "colored", "typeB",
                                        "affineA", "affineC", "IBn"};

  auto* cent = app.add_subcommand("centralizer", "Centralizer generators");
  cent->add_option("--group", group, "Named group (default Bn)")
      ->check(CLI::IsMember(groups));
  cent->add_option("--x", x_list, "Point list, e.g. 1,2");
  cent->add_option("--strands", strands)->required();
  cent->add_flag("--artin", artin,
                 "Read words in the Artin generators of the realized group");
  cent->add_option("a", word_a)->required();

  auto* sub = app.add_subcommand("subconj", "Decide conjugacy in a subgroup");
  sub->add_option("--group", group)->required()->check(CLI::IsMember(groups));
  sub->add_option("--x", x_list, "Point list, e.g. 1,2");
  sub->add_option("--strands", strands)->required();
  sub->add_flag("--artin", artin,
                "Read words in the Artin generators of the realized group");
  sub->add_option("a", word_a)->required();
  sub->add_option("b", word_b)->required();

  auto* verify = app.add_subcommand("verify", "Re-check a JSON certificate");
  verify->add_option("certificate", cert_path)->required();

  for (auto* s : {nf, conj, cent, sub, verify}) {
    s->add_flag("--json", as_json, "Emit machine-readable JSON");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kError;
  }

  try {
    if (*nf) {
      const auto w = BraidWord::parse(strands, word_a);
      const auto form = normal_form(w);
      if (as_json) {
        json j;
        j["schema"] = kSchema;
        j["strands"] = strands;
        j["word"] = w.letters();
        j["inf"] = form.inf();
        j["sup"] = form.sup();
        j["factors"] = json::array();
        for (const auto& f : form.factors()) j["factors"].push_back(f.images());
        out << j.dump(2) << '\n';
      } else {
        out << form.str() << '\n';
      }
      return kTrue;
    }
    if (*cent) {
      if (group.empty()) group = "Bn";
      const auto ctx = named_context(group, strands, parse_points(x_list));
      const auto a = read_word(ctx, word_a, artin);
      const auto gens = ctx.centralizer(a);
      if (as_json) {
        json j;
        j["schema"] = kSchema;
        j["group"] = group;
        j["strands"] = strands;
        j["a"] = a.letters();
        j["generators"] = json::array();
        for (const auto& g : gens) j["generators"].push_back(g.letters());
        out << j.dump(2) << '\n';
      } else {
        for (const auto& g : gens) out << g.str() << '\n';
      }
      return kTrue;
    }
    if (*conj) {
      const auto ctx = braid_group_context(strands);
      const auto a = BraidWord::parse(strands, word_a);
      const auto b = BraidWord::parse(strands, word_b);
      return report(certificate_json("Bn", strands, {}, a, b, ctx, ctx.solve(a, b)),
                    as_json, out);
    }
    if (*sub) {
      const auto x = parse_points(x_list);
      const auto ctx = named_context(group, strands, x);
      const auto a = read_word(ctx, word_a, artin);
      const auto b = read_word(ctx, word_b, artin);
      return report(certificate_json(group, strands, x, a, b, ctx, ctx.solve(a, b)),
                    as_json, out);
    }
    if (*verify) return verify_file(cert_path, out);
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace pcconj::cli
