#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "bv/io.hpp"
#include "bv/prefix_map.hpp"
#include "bv/render.hpp"
#include "bv/rewrite.hpp"
#include "bv/subgroup.hpp"
#include "json.hpp"

using namespace bv;

int main(int argc, char** argv) {
  CLI::App app{"calculator for the braided and symmetric tree diagram groups"};
  app.require_subcommand(1);

  std::string flavor_s = "B";
  uint64_t seed = 12345;
  uint64_t fuel = 0;
  bool json_out = false;
  app.add_option("--flavor", flavor_s, "element flavor: B (braided) or S (symmetric)")
      ->check(CLI::IsMember({"B", "S"}));
  app.add_option("--seed", seed, "seed for randomized verification");
  app.add_option("--fuel", fuel, "rewriting step budget (0 = default)");
  app.add_flag("--json", json_out, "print results as json");

  int rc = 0;
  auto flavor = [&] { return flavor_s == "B" ? Flavor::Braided : Flavor::Symmetric; };
  auto print_elem = [&](const FractionTriple& t) {
    std::cout << (json_out ? to_json(t) : format(t)) << "\n";
  };

  std::string nf_elem;
  auto* nf = app.add_subcommand("nf", "reduce an element to its normal form");
  nf->add_option("element", nf_elem, "element expression")->required();
  nf->callback([&] { print_elem(reduce(parse_element(nf_elem, flavor()))); });

  std::string eq_a, eq_b;
  auto* eq = app.add_subcommand("eq", "test two elements for equality");
  eq->add_option("a", eq_a, "first element")->required();
  eq->add_option("b", eq_b, "second element")->required();
  eq->callback([&] {
    bool r = frac_eq(parse_element(eq_a, flavor()), parse_element(eq_b, flavor()));
    if (json_out)
      std::cout << nlohmann::json{{"equal", r}}.dump() << "\n";
    else
      std::cout << (r ? "true" : "false") << "\n";
    rc = r ? 0 : 1;
  });

  std::string mul_a, mul_b;
  auto* mul = app.add_subcommand("mul", "multiply two elements");
  mul->add_option("a", mul_a, "first element")->required();
  mul->add_option("b", mul_b, "second element")->required();
  mul->callback([&] {
    print_elem(frac_mul(parse_element(mul_a, flavor()), parse_element(mul_b, flavor())));
  });

  std::string inv_elem;
  auto* inv = app.add_subcommand("inv", "invert an element");
  inv->add_option("element", inv_elem, "element expression")->required();
  inv->callback([&] { print_elem(frac_inv(parse_element(inv_elem, flavor()))); });

  std::string mem_elem;
  auto* mem = app.add_subcommand("member", "test membership in BV (or V)");
  mem->add_option("element", mem_elem, "element expression")->required();
  mem->callback([&] {
    FractionTriple t = reduce(parse_element(mem_elem, flavor()));
    bool m = is_member(t);
    const char* gname = flavor() == Flavor::Braided ? "BV" : "V";
    if (json_out) {
      nlohmann::json j{{"member", m}};
      if (m) j["type"] = t.num.length();
      std::cout << j.dump() << "\n";
    } else if (m) {
      std::cout << "member of " << gname << ", type " << t.num.length() << "\n";
    } else {
      std::cout << "not a member of " << gname << "\n";
    }
    rc = m ? 0 : 1;
  });

  std::string proj_elem;
  auto* proj = app.add_subcommand("project", "project a braided element to the symmetric group");
  proj->add_option("element", proj_elem, "element expression")->required();
  proj->callback([&] { print_elem(project_to_V(parse_element(proj_elem, flavor()))); });

  std::string eval_elem;
  auto* ev = app.add_subcommand("eval", "print the prefix substitution of a symmetric element");
  ev->add_option("element", eval_elem, "element expression")->required();
  ev->callback([&] {
    PrefixMap m = as_prefix_map(reduce(parse_element(eval_elem, flavor())));
    if (json_out) {
      nlohmann::json j;
      auto pairs = nlohmann::json::array();
      for (const auto& p : m.pairs)
        pairs.push_back({std::to_string(p.source.tree) + "." + p.source.path,
                         std::to_string(p.target.tree) + "." + p.target.path});
      j["pairs"] = std::move(pairs);
      j["tail_start"] = m.tail_start;
      j["tail_shift"] = m.tail_shift;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << format(m);
    }
  });

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->require_subcommand(1);

  uint32_t vp_max = 6;
  auto* vp = ver->add_subcommand("presentation", "check the defining relations");
  vp->add_option("--max-index", vp_max, "largest generator index");
  vp->callback([&] {
    PresentationReport rep = verify_presentation(vp_max, flavor());
    for (const auto& c : rep.checks) {
      if (c.ok)
        std::cout << "OK   " << c.name << "\n";
      else
        std::cout << "FAIL " << c.name << "  lhs = " << format(c.lhs)
                  << "  rhs = " << format(c.rhs) << "\n";
    }
    if (json_out)
      std::cout << nlohmann::json{{"relations", rep.checks.size()},
                                  {"failures", rep.failures()}}
                       .dump()
                << "\n";
    else
      std::cout << rep.checks.size() << " relations, " << rep.failures()
                << " failures\n";
    rc = rep.ok() ? 0 : 1;
  });

  uint64_t vx_count = 1000;
  uint32_t vx_bound = 8;
  auto* vx = ver->add_subcommand("axioms", "check the mutual action identities");
  vx->add_option("--count", vx_count, "number of sampled instances");
  vx->add_option("--bound", vx_bound, "word length bound for samples");
  vx->callback([&] {
    ZappaReport rep = check_zappa_axioms(vx_count, vx_bound, seed, flavor());
    for (const auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
    if (json_out)
      std::cout << nlohmann::json{{"checked", rep.checked},
                                  {"failures", rep.failures.size()}}
                       .dump()
                << "\n";
    else
      std::cout << "checked " << rep.checked << " identities, "
                << rep.failures.size() << " failures\n";
    rc = rep.ok() ? 0 : 1;
  });

  uint32_t vc_min = 2, vc_max = 10;
  auto* vc = ver->add_subcommand("confluence", "certify local confluence of the rewrite schemas");
  vc->add_option("--min", vc_min, "smallest index bound");
  vc->add_option("--max", vc_max, "largest index bound");
  vc->callback([&] {
    std::vector<std::pair<std::string, Rule>> schemas;
    schemas.emplace_back("forest", forest_rule());
    schemas.emplace_back("hedge", hedge_rule());
    schemas.emplace_back("hedge-descending", hedge_rule_descending());
    uint64_t bad = 0;
    uint64_t peaks = 0;
    for (const auto& [name, rule] : schemas)
      for (uint32_t b = vc_min; b <= vc_max; ++b) {
        ConfluenceReport rep = check_local_confluence({rule}, b, false, fuel);
        std::cout << (rep.ok() ? "OK   " : "FAIL ") << name << " bound " << b
                  << " (" << rep.peaks << " peaks)\n";
        bad += rep.failures.size();
        peaks += rep.peaks;
      }
    if (json_out)
      std::cout << nlohmann::json{{"peaks", peaks}, {"failures", bad}}.dump() << "\n";
    else if (bad)
      std::cout << "confluence failures: " << bad << "\n";
    else
      std::cout << "all " << peaks << " peaks join\n";
    rc = bad ? 1 : 0;
  });

  std::string rd_elem, rd_format = "svg", rd_out;
  bool rd_raw = false;
  auto* rd = app.add_subcommand("render", "draw an element as trees and braid");
  rd->add_option("element", rd_elem, "element expression")->required();
  rd->add_option("--format", rd_format, "svg or ascii")
      ->check(CLI::IsMember({"svg", "ascii"}));
  rd->add_option("--out", rd_out, "write to a file instead of stdout");
  rd->add_flag("--raw", rd_raw, "draw the braid word without free reduction");
  rd->callback([&] {
    DiagramSpec d = make_diagram(parse_element(rd_elem, flavor()), !rd_raw);
    std::string img = rd_format == "svg" ? render_svg(d) : render_ascii(d);
    if (rd_out.empty()) {
      std::cout << img;
    } else {
      std::ofstream f(rd_out);
      if (!f) throw error("cannot open " + rd_out);
      f << img;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
