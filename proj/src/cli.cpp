#include "hyper/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "hyper/constructions.hpp"
#include "hyper/io.hpp"
#include "hyper/morphism.hpp"
#include "hyper/simplicity.hpp"

namespace hyper::cli {

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text[0] == '-')
    throw InvalidInput("expected a non-negative integer for " + what + ", got \"" + text + "\"");
  return static_cast<std::size_t>(v);
}

GroupTable parse_group_spec(const std::string& spec, const Caps& caps) {
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const auto kind = spec.substr(0, colon);
    const auto m = parse_count(spec.substr(colon + 1), "group parameter");
    if (m == 0) throw InvalidInput("group parameter must be positive");
    if (kind == "sym") return symmetric_group(m, caps.group_order);
    if (kind == "cyc") return cyclic_group(m);
    if (kind == "dih") return dihedral_group(m);
  }
  return parse_group(read_input(spec));
}

Subgroup parse_subgroup_spec(const GroupTable& g, const std::string& spec) {
  if (spec.rfind("stab:", 0) == 0) {
    if (g.permutations().empty()) throw InvalidInput("stab: needs a group of permutations");
    return stabilizer_subgroup(g, parse_count(spec.substr(5), "stabilized point"));
  }
  if (spec == "alt") return alternating_subgroup(g);
  if (spec == "trivial") return Subgroup::trivial(g);
  if (spec == "whole") return Subgroup::whole(g);
  if (spec.size() >= 2 && spec.front() == '{' && spec.back() == '}') {
    std::vector<std::size_t> members;
    std::string body = spec.substr(1, spec.size() - 2);
    for (char& c : body)
      if (c == ',') c = ' ';
    std::istringstream in(body);
    for (std::string tok; in >> tok;) members.push_back(parse_count(tok, "subgroup member"));
    return Subgroup::from_members(g, members);
  }
  throw InvalidInput("unrecognised subgroup \"" + spec + "\" (use stab:P, alt, trivial, whole or {0,1,...})");
}

Multistructure load_structure(const std::string& path) { return parse_multistructure(read_input(path)); }

Hypergroup load_hypergroup(const std::string& path) { return Hypergroup::certify(load_structure(path)); }

Json subgroup_json(const Subgroup& h) { return Json(h.elements()); }

Json classes_json(const Multistructure& m, const EquivalenceRelation& eq) {
  Json out = Json::array();
  for (const auto& cls : eq.classes()) {
    Json c = Json::array();
    for (auto x : cls) c.push_back(m.name(x));
    out.push_back(std::move(c));
  }
  return out;
}

Json axiom_json(const Multistructure& m, const AxiomReport& r) {
  Json out;
  out["hypergroup"] = r.is_hypergroup();
  out["associative"] = r.associative;
  out["reproductive"] = r.reproductive;
  out["all_products_nonempty"] = r.all_products_nonempty;
  Json w;
  if (r.associativity_witness) {
    auto [x, y, z] = *r.associativity_witness;
    w["associativity"] = {
        {"triple", {m.name(x), m.name(y), m.name(z)}},
        {"left_grouped", names_json(m, product_of_sets(m, m.product(x, y), ElementSet::singleton(z)))},
        {"right_grouped", names_json(m, product_of_sets(m, ElementSet::singleton(x), m.product(y, z)))}};
  }
  if (r.reproductivity_witness) w["reproductivity"] = m.name(*r.reproductivity_witness);
  if (r.empty_product_witness)
    w["empty_product"] = {m.name(r.empty_product_witness->first),
                          m.name(r.empty_product_witness->second)};
  out["witnesses"] = w.is_null() ? Json::object() : w;
  return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

struct Options {
  Caps caps;
  std::string side = "right";
  std::string method = "auto";
  std::string s_classes;
  bool quotient_only = false;
  std::vector<std::string> words;
  std::vector<std::size_t> sizes;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite hypergroups: constructions, axioms, reflets and simplicity", "hyper"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--cap-n", o.caps.simplicity_n, "largest carrier for simplicity and reflet searches")
      ->capture_default_str();
  app.add_option("--cap-group", o.caps.group_order, "largest group order for subgroup enumeration")
      ->capture_default_str();
  app.add_option("--cap-trame", o.caps.trame_size, "largest trame for canonical presentations")
      ->capture_default_str();

  int code = Ok;
  auto words = [&](CLI::App* sub, const std::string& name, std::size_t count, const std::string& help) {
    sub->add_option("args", o.words, help)
        ->required()
        ->expected(static_cast<int>(count))
        ->type_name(name);
  };

  auto* gen = app.add_subcommand("gen", "generate a structure as JSON");
  gen->require_subcommand(1);
  auto* gen_sym = gen->add_subcommand("sym", "symmetric group on M points");
  words(gen_sym, "M", 1, "points");
  gen_sym->callback([&] {
    emit(out, to_json(symmetric_group(parse_count(o.words[0], "M"), o.caps.group_order).as_multistructure()));
  });
  auto* gen_cyc = gen->add_subcommand("cyc", "cyclic group of order M");
  words(gen_cyc, "M", 1, "order");
  gen_cyc->callback([&] {
    const auto m = parse_count(o.words[0], "M");
    if (m == 0) throw InvalidInput("M must be positive");
    emit(out, to_json(cyclic_group(m).as_multistructure()));
  });
  auto* gen_coset = gen->add_subcommand("coset", "coset hypergroup G/H or H\\G");
  words(gen_coset, "GROUP SUBGROUP", 2, "group spec (sym:M, cyc:M, dih:M or a file) and subgroup spec");
  gen_coset->add_option("--side", o.side, "right (xH) or left (Hx)")
      ->check(CLI::IsMember({"right", "left"}))
      ->capture_default_str();
  gen_coset->callback([&] {
    auto g = parse_group_spec(o.words[0], o.caps);
    auto h = parse_subgroup_spec(g, o.words[1]);
    emit(out, to_json(coset_hypergroup(g, h, o.side == "left" ? CosetSide::Left : CosetSide::Right)));
  });
  auto* gen_stab = gen->add_subcommand("stab", "x.e = x, x.y = K \\ {x} on ALPHA elements");
  words(gen_stab, "ALPHA", 1, "carrier size");
  gen_stab->callback([&] { emit(out, to_json(stabilizer_hypergroup(parse_count(o.words[0], "ALPHA")))); });
  auto* gen_s = gen->add_subcommand("s-family", "S(n,(p_i)) table; block sizes, A0 first");
  gen_s->add_option("SIZES", o.sizes, "block sizes")->required();
  gen_s->callback([&] { emit(out, to_json(s_family(SFamilySizes(o.sizes)))); });
  auto* gen_utumi = gen->add_subcommand("utumi", "x.y = x + class(y) over a group");
  words(gen_utumi, "GROUP CLASSES ZERO", 3, "group spec, partition like {0}|{1,2}, zero index");
  gen_utumi->callback([&] {
    auto g = parse_group_spec(o.words[0], o.caps);
    auto base = g.as_multistructure();
    auto part = parse_partition(o.words[1], base.size());
    emit(out, to_json(utumi({base, part, parse_count(o.words[2], "ZERO")})));
  });
  auto* gen_canon = gen->add_subcommand("canon", "canonical presentation of a structure, as trame DSL");
  words(gen_canon, "FILE", 1, "structure JSON");
  gen_canon->add_flag("--quotient", o.quotient_only, "print the quotient JSON instead of the trame");
  gen_canon->callback([&] {
    auto p = canonical_presentation(load_structure(o.words[0]), o.caps);
    if (o.quotient_only) emit(out, to_json(quotient(p)));
    else out << print_trame(p);
  });

  auto* verify = app.add_subcommand("verify", "check the hypergroup axioms");
  words(verify, "FILE", 1, "structure JSON");
  verify->callback([&] {
    auto m = load_structure(o.words[0]);
    auto report = verify_axioms(m);
    emit(out, axiom_json(m, report));
    if (!report.is_hypergroup()) code = Negative;
  });

  auto* simple = app.add_subcommand("simple", "decide simplicity by exhaustive congruence search");
  words(simple, "FILE", 1, "hypergroup JSON");
  simple->add_option("--method", o.method,
                     "auto (scalar-identity shortcut when available), brute (pruned search over "
                     "all partitions) or naive (every partition checked)")
      ->check(CLI::IsMember({"auto", "brute", "naive"}))
      ->capture_default_str();
  simple->callback([&] {
    auto h = load_hypergroup(o.words[0]);
    CongruenceSearchOptions opts;
    opts.prune = o.method != "naive";
    opts.use_scalar_identity = o.method == "auto";
    auto v = decide_simplicity(h, o.caps, opts);
    Json j;
    j["simple"] = v.simple;
    j["method"] = o.method;
    j["elements"] = h.size();
    j["congruences"] = v.congruences;
    j["partitions_checked"] = v.stats.leaves_checked;
    j["partitions_covered"] = v.stats.partitions_covered;
    j["witness"] = v.witness ? classes_json(h, *v.witness) : Json(nullptr);
    emit(out, j);
    if (!v.simple) code = Negative;
  });

  auto* simple_coset = app.add_subcommand("simple-coset", "simplicity of G/H from the subgroups of G");
  words(simple_coset, "GROUP SUBGROUP", 2, "group spec and subgroup spec");
  simple_coset->callback([&] {
    auto g = parse_group_spec(o.words[0], o.caps);
    auto h = parse_subgroup_spec(g, o.words[1]);
    auto ks = invariant_modulo_subgroups(g, h, o.caps);
    const bool verdict = h.order() != g.order() && ks.size() == 2;
    Json list = Json::array();
    for (const auto& k : ks) list.push_back(subgroup_json(k));
    Json j;
    j["simple"] = verdict;
    j["group_order"] = g.order();
    j["subgroup"] = subgroup_json(h);
    j["index"] = g.order() / h.order();
    j["invariant_subgroups"] = std::move(list);
    j["count"] = ks.size();
    emit(out, j);
    if (!verdict) code = Negative;
  });

  auto* reflets_cmd = app.add_subcommand("reflets", "all reflets up to isomorphism");
  words(reflets_cmd, "FILE", 1, "hypergroup JSON");
  reflets_cmd->callback([&] {
    Json list = Json::array();
    for (const auto& r : reflets(load_hypergroup(o.words[0]), o.caps)) list.push_back(to_json(r));
    emit(out, list);
  });

  auto* iso = app.add_subcommand("iso", "search for an isomorphism");
  words(iso, "FILE1 FILE2", 2, "two structure JSON files");
  iso->callback([&] {
    auto a = load_structure(o.words[0]);
    auto b = load_structure(o.words[1]);
    auto f = find_isomorphism(a, b);
    Json j;
    j["isomorphic"] = f.has_value();
    if (f) {
      Json pairs = Json::array();
      for (std::size_t x = 0; x < a.size(); ++x) pairs.push_back({a.name(x), b.name((*f)[x])});
      j["bijection"] = std::move(pairs);
    } else {
      j["bijection"] = "none";
      code = Negative;
    }
    emit(out, j);
  });

  auto* opp = app.add_subcommand("opposite", "transpose the table");
  words(opp, "FILE", 1, "structure JSON");
  opp->callback([&] { emit(out, to_json(opposite(load_structure(o.words[0])))); });

  auto* classify = app.add_subcommand("classify-s", "class of S(n,(p_i)) with its witness");
  classify->add_option("SIZES", o.sizes, "block sizes, A0 first")->required();
  classify->callback([&] {
    SFamilySizes sizes(o.sizes);
    auto m = s_family(sizes);
    const auto cls = s_family_class(sizes);
    Json j;
    j["sizes"] = o.sizes;
    j["class"] = to_string(cls);
    Json w = nullptr;
    if (auto ce = s_family_counterexample(sizes)) {
      w = Json::object();
      w["case"] = ce->verification_case;
      w["triple"] = {m.name(ce->triple[0]), m.name(ce->triple[1]), m.name(ce->triple[2])};
      w["left_grouped"] = names_json(m, ce->left_grouped);
      w["right_grouped"] = names_json(m, ce->right_grouped);
    } else if (cls == SFamilyClass::EmptyProduct) {
      auto r = verify_axioms(m);
      if (r.empty_product_witness)
        w = {{"empty_product",
              {m.name(r.empty_product_witness->first), m.name(r.empty_product_witness->second)}}};
    }
    j["witness"] = std::move(w);
    emit(out, j);
  });

  auto* trame = app.add_subcommand("trame", "operations on a presentation in the trame DSL");
  trame->require_subcommand(1);
  auto* t_quot = trame->add_subcommand("quotient", "T/R as structure JSON");
  words(t_quot, "FILE", 1, "trame file");
  t_quot->callback([&] { emit(out, to_json(quotient(parse_trame(read_input(o.words[0]))))); });
  auto* t_adeq = trame->add_subcommand("adequate", "adequacy conditions on the trame");
  words(t_adeq, "FILE", 1, "trame file");
  t_adeq->callback([&] {
    auto p = parse_trame(read_input(o.words[0]));
    auto q = quotient(p);
    auto r = check_adequacy(p);
    Json j;
    j["adequate"] = r.adequate();
    j["reproductive"] = r.reproductive;
    j["associative"] = r.associative;
    if (r.reproductivity_witness)
      j["reproductivity_witness"] = {q.name(r.reproductivity_witness->first),
                                     q.name(r.reproductivity_witness->second)};
    if (r.associativity_witness) {
      Json w = Json::array();
      for (auto c : *r.associativity_witness) w.push_back(q.name(c));
      j["associativity_witness"] = std::move(w);
    }
    emit(out, j);
    if (!r.adequate()) code = Negative;
  });
  auto* t_inv = trame->add_subcommand("invariant", "is S invariant modulo R");
  words(t_inv, "FILE", 1, "trame file");
  t_inv->add_option("--s", o.s_classes, "classes of S, e.g. \"{t0 t1} {t2}\"")->required();
  t_inv->callback([&] {
    auto p = parse_trame(read_input(o.words[0]));
    auto s = parse_classes(o.s_classes, p.trame);
    auto r = check_invariance_modulo(p.trame, p.r, s);
    Json j;
    j["invariant"] = r.invariant();
    j["contains"] = r.contains;
    j["pair_condition"] = r.pair_condition;
    j["reflective"] = is_reflective_modulo(p.trame, p.r, s);
    j["witness"] = r.witness ? Json{p.trame.name(r.witness->first), p.trame.name(r.witness->second)}
                             : Json(nullptr);
    emit(out, j);
    if (!r.invariant()) code = Negative;
  });
  auto* t_simple = trame->add_subcommand("simple", "simplicity of T/R decided on the trame");
  words(t_simple, "FILE", 1, "trame file");
  t_simple->callback([&] {
    auto p = parse_trame(read_input(o.words[0]));
    auto v = presentation_simplicity(p, o.caps);
    Json j;
    j["simple"] = v.simple;
    j["reflective"] = v.reflective_count;
    j["invariant"] = v.invariant_count;
    j["partitions"] = v.partitions;
    emit(out, j);
    if (!v.simple) code = Negative;
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return BadInput;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return OverCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return BadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return BadInput;
  }
  return code;
}

}  // namespace hyper::cli
