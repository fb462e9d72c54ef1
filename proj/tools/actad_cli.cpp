#include <CLI11.hpp>
#include <future>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "actad/base.hpp"
#include "actad/enumerate.hpp"
#include "actad/morphisms.hpp"
#include "actad/phi_map.hpp"
#include "actad/presentation.hpp"
#include "actad/render.hpp"
#include "actad/selftest.hpp"

using namespace actad;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool g_json = false;
bool g_pretty = false;

Element element_arg(const std::string& text, int level) {
  Literal lit = parse_literal(text);
  if (lit.kind == Literal::Kind::Number && level != 1) {
    throw UsageError("bare integer '" + text + "' needs --level 1");
  }
  return level > 0 ? validate(lit, level) : validate(lit);
}

std::vector<int> int_list(const std::string& text, char sep = ',') {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("'" + item + "' is not an integer");
    }
  }
  return out;
}

// "2,1;1,2,3" -> {{2,1},{1,2,3}}; an empty group is the empty permutation.
std::vector<Perm> perm_list(const std::string& text) {
  std::vector<Perm> out;
  std::stringstream in(text);
  std::string group;
  while (std::getline(in, group, ';')) out.push_back(int_list(group));
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

json element_json(const Element& x) { return json::parse(to_json(x)); }

void emit(const json& j, const std::string& plain) {
  if (g_json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << plain;
  }
}

void print_element(const Element& x) {
  emit({{"element", to_string(x)}, {"value", element_json(x)}}, to_string(x) + "\n");
  if (g_pretty && !g_json && x.level() <= 3) std::cout << render(x, RenderFormat::Ascii);
}

std::string shuffle_text(const ShuffleMap& s) {
  std::string out = "phi";
  for (int j = 1; j <= s.mx; ++j) {
    if (j != s.slot) out += " " + std::to_string(j) + ":" + std::to_string(s.phi_at(j));
  }
  out += "\npsi";
  for (int k = 1; k <= s.my; ++k) out += " " + std::to_string(k) + ":" + std::to_string(s.psi_at(k));
  return out + "\n";
}

json shuffle_json(const ShuffleMap& s) { return {{"slot", s.slot}, {"phi", s.phi}, {"psi", s.psi}}; }

GammaSequence raw_sequence(const std::string& text, int level) {
  Literal lit = parse_literal(text);
  if (lit.kind != Literal::Kind::List) throw UsageError("normalize expects a bracketed raw sequence");
  GammaSequence g;
  for (const Literal& item : lit.items) g.factors.push_back(level > 1 ? validate(item, level - 1) : validate(item));
  for (long a : lit.indices) g.indices.push_back(static_cast<int>(a));
  return g;
}

std::string morphism_text(const OneMor2& f) {
  return "target " + to_string(f.target) + "\nleaves " + join(f.leaf_perm) + "\nnodes " + join(f.node_relabel) + "\n";
}

json morphism_json(const OneMor2& f) {
  return {{"source", to_string(f.source)},
          {"target", to_string(f.target)},
          {"node_perms", f.node_perms},
          {"leaf_perm", f.leaf_perm},
          {"node_relabel", f.node_relabel}};
}

json morphism_json(const TwoMor2& g) {
  return {{"source", to_string(g.source)}, {"target", to_string(g.target)}, {"sigma", g.sigma}};
}

Presentation chosen_presentation(int sym, const std::string& tree, bool five) {
  const int picked = (sym > 0) + !tree.empty() + five;
  if (picked != 1) throw UsageError("give exactly one of --sym, --tree, --five");
  if (sym > 0) return symmetric_presentation(sym);
  if (five) return five_node_presentation();
  return tree_presentation(element_arg(tree, 2)).presentation;
}

void print_report(const SuiteReport& r) {
  if (g_json) {
    std::cout << json{{"suite", r.name},
                      {"checks", r.checks},
                      {"failures", r.failures},
                      {"first_failure", r.first_failure},
                      {"seconds", r.seconds}}
                     .dump()
              << "\n";
    return;
  }
  std::cout << r.name << ": " << r.checks << " checks, " << r.failures << " failures";
  if (r.failures) std::cout << "; first: " << r.first_failure;
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plain bases, their morphisms, ordinal maps and tree presentations"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "JSON output");
  app.add_flag("--pretty", g_pretty, "add ASCII diagrams");
  int level = 0;
  std::function<void()> action;

  auto* validate_cmd = app.add_subcommand("validate", "check an element literal and print its canonical form");
  std::string lit_a, lit_b, lit_c;
  int slot = 0;
  validate_cmd->add_option("element", lit_a)->required();
  validate_cmd->add_option("--level", level);
  validate_cmd->callback([&] { action = [&] { print_element(element_arg(lit_a, level)); }; });

  auto* compose_cmd = app.add_subcommand("compose", "x o_i y");
  compose_cmd->add_option("x", lit_a)->required();
  compose_cmd->add_option("i", slot)->required();
  compose_cmd->add_option("y", lit_b)->required();
  compose_cmd->add_option("--level", level);
  compose_cmd->callback([&] {
    action = [&] {
      Composite c = compose(element_arg(lit_a, level), slot, element_arg(lit_b, level));
      emit({{"result", to_string(c.result)}, {"shuffle", shuffle_json(c.shuffle)}}, to_string(c.result) + "\n");
      if (g_pretty && !g_json && c.result.level() <= 3) std::cout << render(c.result, RenderFormat::Ascii);
    };
  });

  auto* shuffle_cmd = app.add_subcommand("shuffle", "position maps of x o_i y");
  shuffle_cmd->add_option("x", lit_a)->required();
  shuffle_cmd->add_option("i", slot)->required();
  shuffle_cmd->add_option("y", lit_b)->required();
  shuffle_cmd->add_option("--level", level);
  shuffle_cmd->callback([&] {
    action = [&] {
      ShuffleMap s = shuffle(element_arg(lit_a, level), slot, element_arg(lit_b, level));
      emit(shuffle_json(s), shuffle_text(s));
    };
  });

  auto* normalize_cmd = app.add_subcommand("normalize", "sort a raw application sequence");
  std::string strategy = "left";
  std::uint64_t seed = 1;
  normalize_cmd->add_option("sequence", lit_a, "raw literal such as [2,2,2|2,1]")->required();
  normalize_cmd->add_option("--level", level);
  normalize_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"left", "right", "random"}));
  normalize_cmd->add_option("--seed", seed);
  normalize_cmd->callback([&] {
    action = [&] {
      const SwapStrategy st = strategy == "left"    ? SwapStrategy::LeftFirst
                              : strategy == "right" ? SwapStrategy::RightFirst
                                                    : SwapStrategy::Random;
      Normalized n = normalize(raw_sequence(lit_a, level), st, seed);
      emit({{"element", to_string(n.element)}, {"perm", n.perm}},
           to_string(n.element) + "\nperm " + join(n.perm) + "\n");
    };
  });

  auto* fg_cmd = app.add_subcommand("fg", "print m, F and G");
  fg_cmd->add_option("element", lit_a)->required();
  fg_cmd->add_option("--level", level);
  fg_cmd->callback([&] {
    action = [&] {
      Element x = element_arg(lit_a, level);
      std::vector<std::string> f;
      for (const Element& e : slots_F(x)) f.push_back(to_string(e));
      std::string plain = "m " + std::to_string(arity_m(x)) + "\nF";
      for (const auto& s : f) plain += " " + s;
      plain += "\nG " + to_string(total_G(x)) + "\n";
      emit({{"m", arity_m(x)}, {"F", f}, {"G", to_string(total_G(x))}}, plain);
    };
  });

  auto* head_cmd = app.add_subcommand("head", "head decomposition");
  head_cmd->add_option("element", lit_a)->required();
  head_cmd->add_option("--level", level);
  head_cmd->callback([&] {
    action = [&] {
      HeadForm h = decompose_head(element_arg(lit_a, level));
      std::string plain = "head " + to_string(h.head) + "\n";
      json atts = json::array();
      for (const Attachment& a : h.attachments) {
        plain += "slot " + std::to_string(a.slot) + " " + to_string(a.subtree) + "\n";
        atts.push_back({{"slot", a.slot}, {"subtree", to_string(a.subtree)}, {"positions", a.positions}});
      }
      emit({{"head", to_string(h.head)}, {"attachments", atts}}, plain);
    };
  });

  auto* ord_cmd = app.add_subcommand("ord", "ordinal notations and the maps into them");
  ord_cmd->require_subcommand(1);
  auto* ord_eval = ord_cmd->add_subcommand("eval", "value of an element");
  std::string alphas;
  ord_eval->add_option("element", lit_a)->required();
  ord_eval->add_option("--level", level);
  ord_eval->add_option("--alphas", alphas, "per-factor weights separated by ';'");
  ord_eval->callback([&] {
    action = [&] {
      Element z = element_arg(lit_a, level);
      Ordinal v;
      if (!alphas.empty()) {
        std::vector<Ordinal> ws;
        std::stringstream in(alphas);
        std::string item;
        while (std::getline(in, item, ';')) ws.push_back(parse_ordinal(item));
        v = eval_phin(z, ws);
      } else {
        v = z.level() == 2 ? eval_phi2(z) : eval_phin(z);
      }
      emit({{"value", to_string(v)}}, to_string(v) + "\n");
    };
  });
  auto* ord_encode = ord_cmd->add_subcommand("encode", "an element of the given level with this value");
  ord_encode->add_option("ordinal", lit_a)->required();
  ord_encode->add_option("--level", level)->required();
  ord_encode->callback([&] {
    action = [&] { print_element(encode(parse_ordinal(lit_a), level)); };
  });
  auto* ord_cmp = ord_cmd->add_subcommand("cmp", "prints <, = or >");
  ord_cmp->add_option("a", lit_a)->required();
  ord_cmp->add_option("b", lit_b)->required();
  ord_cmp->callback([&] {
    action = [&] {
      auto c = cmp(parse_ordinal(lit_a), parse_ordinal(lit_b));
      const std::string s = c < 0 ? "<" : c > 0 ? ">" : "=";
      emit({{"cmp", s}}, s + "\n");
    };
  });
  auto* ord_add = ord_cmd->add_subcommand("add", "ordinal sum");
  ord_add->add_option("a", lit_a)->required();
  ord_add->add_option("b", lit_b)->required();
  ord_add->callback([&] {
    action = [&] {
      const std::string s = to_string(add(parse_ordinal(lit_a), parse_ordinal(lit_b)));
      emit({{"value", s}}, s + "\n");
    };
  });

  auto* group_cmd = app.add_subcommand("group", "presentations and coset enumeration");
  group_cmd->require_subcommand(1);
  int sym = 0;
  bool five = false, gap = false;
  std::int64_t max_cosets = 100000;
  auto add_source = [&](CLI::App* c) {
    c->add_option("--sym", sym, "symmetric group S_n");
    c->add_option("--tree", lit_a, "binary level-2 element");
    c->add_flag("--five", five, "the five-node relator set a, b, c, d");
  };
  auto* group_present = group_cmd->add_subcommand("present", "print a presentation");
  add_source(group_present);
  group_present->add_flag("--gap", gap, "one relator per line, a1*a2 style");
  group_present->callback([&] {
    action = [&] {
      Presentation p = chosen_presentation(sym, lit_a, five);
      std::string text = gap ? to_gap(p) : to_string(p) + "\n";
      emit({{"generators", p.generators}, {"relators", p.relators}, {"text", to_string(p)}}, text);
    };
  });
  auto* group_order = group_cmd->add_subcommand("order", "order by coset enumeration");
  add_source(group_order);
  group_order->add_option("--max-cosets", max_cosets);
  group_order->callback([&] {
    action = [&] {
      CosetTable t = todd_coxeter(chosen_presentation(sym, lit_a, five), max_cosets);
      emit({{"order", t.order}, {"defined", t.defined}}, std::to_string(t.order) + "\n");
    };
  });
  auto* group_verify = group_cmd->add_subcommand("verify", "edges of a binary tree realize S_n");
  group_verify->add_option("element", lit_a)->required();
  group_verify->add_option("--max-cosets", max_cosets);
  group_verify->callback([&] {
    action = [&] {
      RealizationReport r = verify_symmetric_realization(element_arg(lit_a, 2), max_cosets);
      std::ostringstream plain;
      plain << "nodes " << r.nodes << "\nrelators_hold " << r.relators_hold << "\ngenerated_order "
            << r.generated_order << "\npresented_order " << r.presented_order << "\nexpected_order "
            << r.expected_order << "\nisomorphic " << r.isomorphic << "\n";
      emit({{"nodes", r.nodes},
            {"relators_hold", r.relators_hold},
            {"generated_order", r.generated_order},
            {"presented_order", r.presented_order},
            {"expected_order", r.expected_order},
            {"isomorphic", r.isomorphic}},
           plain.str());
      if (!r.isomorphic) throw Error(ErrorKind::Overflow, "realization failed");
    };
  });

  auto* enum_cmd = app.add_subcommand("enum", "bounded enumeration and counts");
  int max_factors = 3, max_arity = 3, binary = 0, ea2_set = -1, ea2_n = 0;
  bool count_only = false;
  std::string by = "nodes";
  enum_cmd->add_option("--level", level);
  enum_cmd->add_option("--max-factors", max_factors);
  enum_cmd->add_option("--max-arity", max_arity);
  enum_cmd->add_flag("--count-only", count_only);
  enum_cmd->add_option("--binary", binary, "count binary elements of this size");
  enum_cmd->add_option("--by", by, "size of --binary in nodes or leaves")->check(CLI::IsMember({"nodes", "leaves"}));
  enum_cmd->add_option("--ea2-set", ea2_set, "set size for the free algebra component count");
  enum_cmd->add_option("--ea2-n", ea2_n, "arity for the free algebra component count");
  enum_cmd->callback([&] {
    action = [&] {
      if (binary > 0) {
        const int k = by == "nodes" ? binary : binary - 1;
        const std::int64_t c = count_binary(k);
        emit({{"nodes", k}, {"leaves", k + 1}, {"count", c}}, std::to_string(c) + "\n");
        return;
      }
      if (ea2_set >= 0) {
        FreeEA2Count c = free_ea2_component_count(ea2_set, ea2_n);
        std::ostringstream plain;
        plain << c.catalan_factor << " " << c.sym_factor << " " << c.multiset_factor << " " << c.product << "\n";
        emit({{"catalan", c.catalan_factor}, {"sym", c.sym_factor}, {"multiset", c.multiset_factor}, {"product", c.product}},
             plain.str());
        return;
      }
      if (level < 1) throw UsageError("enum needs --level, --binary or --ea2-set");
      auto xs = enumerate(level, max_factors, max_arity);
      if (count_only) {
        emit({{"count", xs.size()}}, std::to_string(xs.size()) + "\n");
        return;
      }
      json all = json::array();
      for (const Element& x : xs) {
        if (g_json) {
          all.push_back(to_string(x));
        } else {
          std::cout << to_string(x) << "\n";
        }
      }
      if (g_json) std::cout << all.dump() << "\n";
    };
  });

  auto* mor_cmd = app.add_subcommand("mor", "level-2 morphisms");
  mor_cmd->require_subcommand(1);
  std::string perms, sigma, sigma_y;
  auto* mor_apply1 = mor_cmd->add_subcommand("apply1", "prong permutations, one group per node: 2,1;1,2");
  mor_apply1->add_option("element", lit_a)->required();
  mor_apply1->add_option("--perms", perms)->required();
  mor_apply1->callback([&] {
    action = [&] {
      OneMor2 f = apply_one(element_arg(lit_a, 2), perm_list(perms));
      emit(morphism_json(f), morphism_text(f));
    };
  });
  auto* mor_apply2 = mor_cmd->add_subcommand("apply2", "node permutation: target factor t is source factor sigma(t)");
  mor_apply2->add_option("element", lit_a)->required();
  mor_apply2->add_option("--sigma", sigma)->required();
  mor_apply2->callback([&] {
    action = [&] {
      auto g = apply_two(element_arg(lit_a, 2), int_list(sigma));
      if (!g) {
        std::cerr << "NoMorphism: the permuted factors do not form an element\n";
        throw std::logic_error("no morphism");
      }
      emit(morphism_json(*g), "target " + to_string(g->target) + "\n");
    };
  });
  auto* mor_square = mor_cmd->add_subcommand("square", "complete a {1}-morphism and a {2}-morphism to a square");
  mor_square->add_option("element", lit_a)->required();
  mor_square->add_option("--perms", perms)->required();
  mor_square->add_option("--sigma", sigma)->required();
  mor_square->callback([&] {
    action = [&] {
      Element x = element_arg(lit_a, 2);
      auto g = apply_two(x, int_list(sigma));
      if (!g) throw UsageError("--sigma does not give a {2}-morphism");
      Square12 s = complete_square(apply_one(x, perm_list(perms)), *g);
      std::string f2;
      for (size_t t = 0; t < s.f2.node_perms.size(); ++t) f2 += (t ? ";" : "") + join(s.f2.node_perms[t]);
      emit({{"f", morphism_json(s.f)},
            {"g", morphism_json(s.g)},
            {"f2", morphism_json(s.f2)},
            {"g2", morphism_json(s.g2)},
            {"square", is_square(s)}},
           "x1 " + to_string(s.f.target) + "\nx2 " + to_string(s.g.target) + "\nw " + to_string(s.f2.target) +
               "\nf2 " + f2 + "\ng2 " + join(s.g2.sigma) + "\n");
    };
  });
  auto* mor_induce = mor_cmd->add_subcommand("induce", "node permutation induced on x o_i y");
  mor_induce->add_option("x", lit_a)->required();
  mor_induce->add_option("i", slot)->required();
  mor_induce->add_option("y", lit_b)->required();
  mor_induce->add_option("--sigma-x", sigma)->required();
  mor_induce->add_option("--sigma-y", sigma_y)->required();
  mor_induce->callback([&] {
    action = [&] {
      Element x = element_arg(lit_a, 2), y = element_arg(lit_b, 2);
      auto f = apply_two(x, int_list(sigma));
      auto g = apply_two(y, int_list(sigma_y));
      if (!f || !g) throw UsageError("sigmas must give {2}-morphisms");
      TwoMor2 h = induced_two_on_composition(x, slot, y, *f, *g);
      emit(morphism_json(h), "source " + to_string(h.source) + "\ntarget " + to_string(h.target) + "\nsigma " +
                                 join(h.sigma) + "\n");
    };
  });
  auto* mor_list = mor_cmd->add_subcommand("list", "all morphisms of one kind out of an element");
  std::string kind = "two";
  mor_list->add_option("element", lit_a)->required();
  mor_list->add_option("--kind", kind)->check(CLI::IsMember({"one", "two"}));
  mor_list->callback([&] {
    action = [&] {
      Element x = element_arg(lit_a, 2);
      json all = json::array();
      std::ostringstream plain;
      if (kind == "one") {
        for_each_one(x, [&](const OneMor2& f) {
          std::string ps;
          for (size_t t = 0; t < f.node_perms.size(); ++t) ps += (t ? ";" : "") + join(f.node_perms[t]);
          plain << ps << " -> " << to_string(f.target) << "\n";
          all.push_back(morphism_json(f));
        });
      } else {
        for_each_two(x, [&](const TwoMor2& g) {
          plain << join(g.sigma) << " -> " << to_string(g.target) << "\n";
          all.push_back(morphism_json(g));
        });
      }
      emit(all, plain.str());
    };
  });

  auto* render_cmd = app.add_subcommand("render", "ASCII or DOT drawing");
  std::string format = "ascii";
  render_cmd->add_option("element", lit_a)->required();
  render_cmd->add_option("--level", level);
  render_cmd->add_option("--format", format)->check(CLI::IsMember({"ascii", "dot"}));
  render_cmd->callback([&] {
    action = [&] {
      std::cout << render(element_arg(lit_a, level), format == "ascii" ? RenderFormat::Ascii : RenderFormat::Dot);
    };
  });

  auto* selftest_cmd = app.add_subcommand("selftest", "property batteries");
  std::string suite = "all", size = "small";
  int jobs = 1;
  selftest_cmd->add_option("suite", suite, "axioms, oracle, confluence, morphisms, ordinals, groups, counts or all");
  selftest_cmd->add_option("--seed", seed);
  selftest_cmd->add_option("--size", size)->check(CLI::IsMember({"small", "medium", "large"}));
  selftest_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  selftest_cmd->callback([&] {
    action = [&] {
      std::vector<std::string> names;
      if (suite == "all") {
        names = suite_names();
      } else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end()) {
        names = {suite};
      } else {
        throw UsageError("unknown suite " + suite);
      }
      const SuiteSize sz = parse_suite_size(size);
      std::vector<SuiteReport> reports(names.size());
      for (size_t start = 0; start < names.size(); start += static_cast<size_t>(jobs)) {
        std::vector<std::future<SuiteReport>> running;
        for (size_t k = start; k < std::min(names.size(), start + static_cast<size_t>(jobs)); ++k) {
          running.push_back(std::async(std::launch::async, [&, k] { return run_suite(names[k], seed, sz); }));
        }
        for (size_t k = 0; k < running.size(); ++k) reports[start + k] = running[k].get();
      }
      bool ok = true;
      for (const SuiteReport& r : reports) {
        print_report(r);
        ok = ok && r.ok();
      }
      if (!ok) throw std::logic_error("failures");
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    if (action) action();
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::logic_error&) {
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
