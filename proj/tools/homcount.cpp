// homcount command-line front end. Exit status: 0 success, 1 verification
// failure, 2 input error or exceeded bound.

#include <homcount/cocycle_dp.hpp>
#include <homcount/goursat.hpp>
#include <homcount/mobius.hpp>
#include <homcount/pipeline.hpp>
#include <homcount/report.hpp>
#include <homcount/rubik.hpp>
#include <homcount/surfaces.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

using namespace homcount;

namespace {

struct Config {
  std::string group, group2, complex, presentation, circuit, gamma, extension, ordering = "default", gluing, output;
  std::string mode = "gauge", stage = "rsat4", filter = "all", generators = "standard", pairs;
  std::uint64_t max_enumeration = WorkBounds{}.max_enumeration;
  std::uint64_t max_states = WorkBounds{}.max_states;
  std::size_t threads = 1, genus = 2, orbits = 7, count = 10;
  std::uint64_t seed = 1;
  bool json = false, no_zsat = false, eager = false, with_count = false;
};

/// Relative paths that do not exist are looked up in $HOMCOUNT_DATA, then
/// in the data directory of the source tree.
std::filesystem::path resolve(const std::string& p)
{
  std::filesystem::path path(p);
  if (path.empty() || std::filesystem::exists(path) || path.is_absolute())
    return path;
  if (const char* env = std::getenv("HOMCOUNT_DATA"))
    if (auto q = std::filesystem::path(env) / path; std::filesystem::exists(q))
      return q;
#ifdef HOMCOUNT_DEFAULT_DATA_DIR
  if (auto q = std::filesystem::path(HOMCOUNT_DEFAULT_DATA_DIR) / path; std::filesystem::exists(q))
    return q;
#endif
  return path;
}

std::string require(const std::string& value, const std::string& flag)
{
  if (value.empty())
    throw input_error("missing required flag " + flag);
  return value;
}

FiniteGroup group_from(const std::string& flag, const std::string& value)
{
  return load_group(resolve(require(value, flag)));
}

/// The fundamental group from --presentation or the edge-path group of --complex.
Presentation presentation_from(const Config& cfg)
{
  if (!cfg.presentation.empty() == !cfg.complex.empty())
    throw input_error("give exactly one of --presentation and --complex");
  if (!cfg.presentation.empty())
    return load_presentation(resolve(cfg.presentation));
  auto file = load_complex(resolve(cfg.complex));
  return presentation_from_complex(file.complex).presentation;
}

void add_group(Report& r, const std::string& key, const FiniteGroup& g)
{
  r.add(key, g.name());
  r.add(key + "_order", static_cast<std::uint64_t>(g.order()));
}

void write_file(const std::string& path, const std::string& text)
{
  std::ofstream out(path);
  if (!out)
    throw input_error("cannot write " + path);
  out << text;
}

std::string hex_list(const std::vector<std::uint32_t>& v)
{
  std::string out;
  for (auto x : v)
    out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

Report run_homology(const Config& cfg)
{
  auto file = load_complex(resolve(require(cfg.complex, "--complex")));
  const auto& x = file.complex;
  Report r;
  r.add("vertices", static_cast<std::uint64_t>(x.vertex_count()));
  r.add("simplices", static_cast<std::uint64_t>(x.size()));
  r.add("dimension", static_cast<std::int64_t>(x.dimension()));
  r.add("euler_characteristic", static_cast<std::int64_t>(x.euler_characteristic()));
  auto h = homology(x);
  for (std::size_t k = 0; k < h.size() && k <= static_cast<std::size_t>(std::max(0, x.dimension())); ++k)
    r.add("H" + std::to_string(k), format_homology_group(h[k]));
  return r;
}

Report run_count_hom(const Config& cfg)
{
  auto g = group_from("--group", cfg.group);
  auto p = presentation_from(cfg);
  CountOptions opts;
  opts.max_enumeration = cfg.max_enumeration;
  auto c = count_all(p, g, opts);
  Report r;
  add_group(r, "group", g);
  r.add("generators", static_cast<std::uint64_t>(p.generators));
  r.add("relators", static_cast<std::uint64_t>(p.relators.size()));
  r.add("homs", c.homs);
  r.add("surjections", c.surjections);
  r.add("automorphisms", static_cast<std::uint64_t>(c.automorphisms));
  r.add("quotients", c.quotients);
  return r;
}

InversionTable inversion_for(const Config& cfg, const FiniteGroup& g, const Presentation& p)
{
  CountOptions opts;
  opts.max_enumeration = cfg.max_enumeration;
  return quotient_counts_via_inversion(g, [&](const FiniteGroup& j) { return count_homs(p, j, opts); });
}

Report run_count_quot(const Config& cfg)
{
  auto g = group_from("--group", cfg.group);
  auto p = presentation_from(cfg);
  CountOptions opts;
  opts.max_enumeration = cfg.max_enumeration;
  auto direct = count_all(p, g, opts);
  auto table = inversion_for(cfg, g, p);
  const auto& top = table.rows.back();
  if (top.quotients != direct.quotients)
    throw verification_error("count-quot: inversion gives " + to_string(top.quotients) + " quotients, direct count " +
                             to_string(direct.quotients));
  auto hq = check_hq(table);
  Report r;
  add_group(r, "group", g);
  r.add("homs", direct.homs);
  r.add("surjections", direct.surjections);
  r.add("quotients", direct.quotients);
  r.add("quotients_by_inversion", top.quotients);
  BigInt proper = 0;
  for (std::size_t i = 1; i + 1 < table.rows.size(); ++i)
    proper += table.rows[i].quotients;
  r.add("proper_nontrivial_quotients", proper);
  r.add("hq_applicable", hq.applicable);
  r.add("hq_holds", hq.holds);
  return r;
}

Report run_invert_lattice(const Config& cfg)
{
  auto g = group_from("--group", cfg.group);
  auto p = presentation_from(cfg);
  auto table = inversion_for(cfg, g, p);
  Report r;
  add_group(r, "group", g);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    r.add_row("subgroup", {{"index", i},
                           {"order", row.subgroup.order()},
                           {"homs", Report::big(row.homs)},
                           {"surjections", Report::big(row.surjections)},
                           {"automorphisms", row.automorphisms},
                           {"quotients", Report::big(row.quotients)}});
  }
  r.add("total_homs", table.total_homs);
  r.add("weighted_sum", table.weighted_sum);
  r.add("consistent", table.consistent);
  auto hq = check_hq(table);
  r.add("hq_applicable", hq.applicable);
  r.add("hq_holds", hq.holds);
  if (!table.consistent)
    throw verification_error("invert-lattice: sum of |Aut(J)| #Q(X, J) differs from #H(X, G)");
  return r;
}

Report run_dp_count(const Config& cfg)
{
  auto g = group_from("--group", cfg.group);
  auto file = load_complex(resolve(require(cfg.complex, "--complex")));
  const auto& x = file.complex;
  SimplexOrdering ord;
  if (cfg.ordering == "default")
    ord = file.ordering ? *file.ordering : x.default_ordering();
  else if (cfg.ordering == "greedy")
    ord = greedy_ordering(x);
  else {
    auto other = load_complex(resolve(cfg.ordering));
    if (!other.ordering)
      throw input_error("--ordering file " + cfg.ordering + " has no 'order' section");
    for (auto id : *other.ordering) {
      auto mine = x.find(other.complex.simplex(id));
      if (!mine)
        throw input_error("--ordering names a simplex that is not in the complex");
      ord.push_back(*mine);
    }
  }
  DpOptions opts;
  if (cfg.mode == "full")
    opts.mode = DpMode::full;
  else if (cfg.mode != "gauge")
    throw input_error("--mode must be gauge or full");
  opts.defer_edges = !cfg.eager;
  opts.max_states = cfg.max_states;
  auto w = ordering_width(x, ord);
  auto res = dp_count_homs(x, ord, g, opts);
  Report r;
  add_group(r, "group", g);
  r.add("simplices", static_cast<std::uint64_t>(x.size()));
  r.add("width", static_cast<std::uint64_t>(w.width));
  r.add("edge_width", static_cast<std::uint64_t>(w.edge_width));
  r.add("mode", cfg.mode);
  r.add("max_states", static_cast<std::uint64_t>(res.max_states));
  r.add("homs", res.homs);
  if (opts.mode == DpMode::full)
    r.add("cocycles", res.cocycles);
  return r;
}

AlphabetSpec target_alphabet() { return zsat_data_alphabet(); }

Report run_reduce(const Config& cfg)
{
  auto c = load_boolean(resolve(require(cfg.circuit, "--circuit")));
  auto s = run_pipeline(c, target_alphabet());
  Report r;
  r.add("inputs", static_cast<std::uint64_t>(c.inputs()));
  r.add("boolean_gates", static_cast<std::uint64_t>(c.gates().size()));
  auto stage_row = [&](const std::string& name, const RsatInstance& inst) {
    std::size_t arity = 0;
    for (const auto& g : inst.circuit.gates())
      arity = std::max(arity, g.wires.size());
    Report::Fields f{{"name", name},
                     {"alphabet", inst.circuit.alphabet()},
                     {"width", inst.circuit.width()},
                     {"gates", inst.circuit.gates().size()},
                     {"max_arity", arity},
                     {"planar", inst.circuit.is_planar()}};
    if (cfg.with_count)
      f.push_back({"count", Report::big(count_rsat(inst, cfg.max_enumeration))});
    r.add_row("stage", f);
  };
  stage_row("RSAT1", s.rsat1.instance);
  stage_row("RSAT2", s.rsat2.instance);
  stage_row("RSAT3", s.rsat3);
  stage_row("RSAT4", s.rsat4);
  r.add("packing_k", static_cast<std::uint64_t>(s.plan.k));
  if (!cfg.output.empty()) {
    const RsatInstance* chosen = nullptr;
    if (cfg.stage == "rsat3")
      chosen = &s.rsat3;
    else if (cfg.stage == "rsat4")
      chosen = &s.rsat4;
    else if (cfg.stage == "rsat1" || cfg.stage == "rsat2")
      throw input_error("--stage " + cfg.stage + " has per-wire init/final sets; only rsat3 and rsat4 can be written");
    else
      throw input_error("--stage must be one of rsat1, rsat2, rsat3, rsat4");
    auto inst = *chosen;
    if (!inst.circuit.is_planar())
      inst.circuit = planarize(inst.circuit);
    write_file(cfg.output, format_rsat(inst));
    r.add("written", cfg.stage);
  }
  return r;
}

Report run_verify_parsimony(const Config& cfg, int& status)
{
  auto c = load_boolean(resolve(require(cfg.circuit, "--circuit")));
  PipelineOptions opts;
  opts.max_enumeration = cfg.max_enumeration;
  if (!cfg.gamma.empty() && !cfg.no_zsat)
    opts.gamma = std::make_shared<const FiniteGroup>(group_from("--gamma", cfg.gamma));
  auto rep = verify_parsimony(c, opts);
  Report r;
  r.add("inputs", static_cast<std::uint64_t>(c.inputs()));
  r.add("boolean_gates", static_cast<std::uint64_t>(c.gates().size()));
  if (opts.gamma)
    add_group(r, "gamma", *opts.gamma);
  for (const auto& s : rep.stages)
    r.add_row("stage", {{"name", s.stage},
                        {"count", Report::big(s.count)},
                        {"expected", Report::big(s.expected)},
                        {"ok", s.ok}});
  r.add("result", rep.ok ? "PASS" : "FAIL");
  if (!rep.ok)
    status = 1;
  return r;
}

Report run_compile_zsat(const Config& cfg, int& status)
{
  auto inst = load_rsat(resolve(require(cfg.circuit, "--circuit")));
  auto gamma = std::make_shared<const FiniteGroup>(group_from("--gamma", cfg.gamma));
  auto z = ZAlphabet::minimal(gamma);
  const auto b = z.data_orbits().size();
  if (inst.circuit.alphabet() != b)
    throw input_error("compile-zsat: circuit alphabet must have " + std::to_string(b) + " symbols");
  for (std::size_t w = 0; w < inst.circuit.width(); ++w)
    if (inst.init[w] != z.b_init() || inst.final[w] != z.b_final())
      throw input_error("compile-zsat: init and final sets must be {" + hex_list(z.b_init()) + "} and {" +
                        hex_list(z.b_final()) + "} on every wire");
  auto d = compile_zsat(inst.circuit, z);
  Report r;
  add_group(r, "gamma", *gamma);
  r.add("alphabet_points", static_cast<std::uint64_t>(z.act.points()));
  r.add("width", static_cast<std::uint64_t>(d.width));
  r.add("main_gates", static_cast<std::uint64_t>(d.main_gates));
  r.add("postcomputation_gates", static_cast<std::uint64_t>(d.gates.size() - d.main_gates));
  std::size_t arity = 0;
  for (const auto& g : d.gates)
    arity = std::max<std::size_t>(arity, g.arity);
  r.add("max_arity", static_cast<std::uint64_t>(arity));
  r.add("gates_in_rubik", true);
  if (cfg.with_count) {
    auto rsat = count_rsat(inst, cfg.max_enumeration);
    auto zsat = count_zsat(d, cfg.max_enumeration);
    BigInt expected = BigInt(gamma->order()) * rsat + 1;
    r.add("rsat_count", rsat);
    r.add("zsat_count", zsat);
    r.add("expected", expected);
    r.add("result", zsat == expected ? "PASS" : "FAIL");
    if (zsat != expected)
      status = 1;
  }
  if (!cfg.output.empty()) {
    std::ostringstream out;
    out << "# ZSAT instance over the minimal alphabet for " << gamma->name() << "\n";
    out << "gamma " << cfg.gamma << "\npoints " << z.act.points() << "\nzombie " << z.zombie << "\n";
    out << "init " << hex_list(z.points_of(z.init_orbits)) << "\nfinal " << hex_list(z.points_of(z.final_orbits))
        << "\nwidth " << d.width << '\n';
    for (const auto& g : d.gates) {
      out << "gate " << g.position << ' ' << g.arity;
      for (auto x : g.table)
        out << ' ' << x;
      out << '\n';
    }
    write_file(cfg.output, out.str());
  }
  return r;
}

Report run_orbit(const Config& cfg)
{
  auto g = group_from("--group", cfg.group);
  auto filter = parse_rep_filter(cfg.filter);
  std::optional<SchurInvariant> sch;
  if (!cfg.extension.empty())
    sch.emplace(g, load_extension(resolve(cfg.extension)));
  std::vector<std::vector<Elem>> seeds;
  enumerate_reps(cfg.genus, g, filter, [&](const std::vector<Elem>& t) { seeds.push_back(t); },
                 sch ? &*sch : nullptr, cfg.max_enumeration);
  auto rep = orbit_report(seeds, standard_twists(cfg.genus), cfg.genus, g, sch ? &*sch : nullptr);
  Report r;
  add_group(r, "group", g);
  r.add("genus", static_cast<std::uint64_t>(cfg.genus));
  r.add("filter", cfg.filter);
  r.add("generators", format_twist_word(standard_twists(cfg.genus)));
  r.add("seeds", static_cast<std::uint64_t>(rep.seeds));
  r.add("orbits", static_cast<std::uint64_t>(rep.orbits.size()));
  for (std::size_t i = 0; i < rep.orbits.size(); ++i) {
    const auto& o = rep.orbits[i];
    Report::Fields f{{"index", i}, {"size", o.size}, {"seeds", o.seeds}};
    if (sch)
      f.push_back({"schur", o.schur_mixed ? Report::Json("mixed") : Report::Json(*o.schur)});
    f.push_back({"surjective", o.surjective});
    f.push_back({"aut_closed", o.aut_closed});
    r.add_row("orbit", f);
  }
  r.add("transitive", rep.transitive);
  if (sch)
    r.add("schur_separated", rep.schur_separated);
  return r;
}

Report run_heegaard(const Config& cfg)
{
  auto g = group_from("--group", cfg.group);
  auto h = load_gluing(resolve(require(cfg.gluing, "--gluing")));
  auto c = heegaard_count(h, g, cfg.max_enumeration);
  auto p = heegaard_presentation(h);
  CountOptions opts;
  opts.max_enumeration = cfg.max_enumeration;
  auto by_presentation = count_homs(p, g, opts);
  if (by_presentation != c.homs)
    throw verification_error("heegaard-count: tuple count " + to_string(c.homs) + " differs from presentation count " +
                             to_string(by_presentation));
  Report r;
  add_group(r, "group", g);
  r.add("genus", static_cast<std::uint64_t>(h.genus));
  r.add("word", format_twist_word(h.word));
  r.add("torelli", is_torelli(h.word, h.genus));
  r.add("homs", c.homs);
  r.add("surjections", c.surjections);
  r.add("automorphisms", static_cast<std::uint64_t>(c.automorphisms));
  r.add("quotients", c.quotients);
  r.add("presentation", format_presentation(p));
  return r;
}

Report run_rubik(const Config& cfg)
{
  auto gamma = std::make_shared<const FiniteGroup>(group_from("--gamma", cfg.gamma));
  auto act = GSetAction::free_orbits(gamma, 0, cfg.orbits);
  auto gens = standard_rubik_generators(act);
  if (cfg.generators == "random") {
    // products of random standard generators
    std::mt19937_64 rng(cfg.seed);
    std::vector<Permutation> random;
    for (std::size_t i = 0; i < cfg.count; ++i) {
      Permutation p(act.points());
      for (int j = 0; j < 20; ++j)
        p = p * gens[rng() % gens.size()];
      random.push_back(p);
    }
    gens = std::move(random);
  } else if (cfg.generators != "standard")
    throw input_error("--generators must be standard or random");
  auto rep = rubik_surjectivity_check(gens, act);
  Report r;
  add_group(r, "gamma", *gamma);
  r.add("orbits", static_cast<std::uint64_t>(rep.orbits));
  r.add("generators", static_cast<std::uint64_t>(gens.size()));
  r.add("orbit_action", to_string(rep.orbit_action_class));
  r.add("contains_alt", rep.orbit_action_contains_alt);
  r.add("two_transitive", rep.gset_two_transitive);
  r.add("alt_quotient_excluded", rep.alt_quotient_excluded);
  r.add("generated_order", rep.generated_order);
  r.add("rubik_order", rep.rubik_order);
  r.add("generates_rubik", rep.generates_rubik);
  r.add("consistent", rep.consistent_with_theorem);
  if (!rep.consistent_with_theorem)
    throw verification_error("rubik-check: (i) and (ii) hold but the generators do not give the Rubik group");
  return r;
}

Report run_goursat(const Config& cfg)
{
  auto g1 = group_from("--group", cfg.group);
  auto g2 = cfg.group2.empty() ? g1 : group_from("--group2", cfg.group2);
  std::vector<std::pair<Elem, Elem>> gens;
  for (const auto& tok : io::split_words(std::string(require(cfg.pairs, "--pairs")))) {
    auto colon = tok.find(':');
    if (colon == std::string::npos)
      throw input_error("--pairs entries look like a:b, got '" + tok + "'");
    gens.emplace_back(static_cast<Elem>(io::parse_uint(tok.substr(0, colon), "--pairs")),
                      static_cast<Elem>(io::parse_uint(tok.substr(colon + 1), "--pairs")));
  }
  auto h = close_pairs(g1, g2, gens);
  auto d = goursat_decompose(h, g1, g2);
  auto back = goursat_reconstruct(d, g1, g2);
  if (back != d.members)
    throw verification_error("goursat: reconstruction differs from H");
  Report r;
  add_group(r, "group1", g1);
  add_group(r, "group2", g2);
  r.add("subgroup_order", static_cast<std::uint64_t>(h.size()));
  r.add("n1_order", static_cast<std::uint64_t>(d.n1.order()));
  r.add("n2_order", static_cast<std::uint64_t>(d.n2.order()));
  r.add("quotient_order", static_cast<std::uint64_t>(d.q1.group.order()));
  r.add("reconstruction_matches", true);
  return r;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact homomorphism counting, circuit reductions and surface-group tools"};
  app.fallthrough();
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--max-enumeration", cfg.max_enumeration, "Bound on brute-force enumeration size")
    ->check(CLI::PositiveNumber);
  app.add_option("--max-states", cfg.max_states, "Bound on dynamic-programming states")->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "Worker cap (runs are single-threaded)")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized generators");
  app.add_flag("--json", cfg.json, "Print the report as JSON");

  auto group = [&](CLI::App* s) { s->add_option("--group", cfg.group, "Group file"); };
  auto source = [&](CLI::App* s) {
    s->add_option("--presentation", cfg.presentation, "Presentation file");
    s->add_option("--complex", cfg.complex, "Simplicial complex file");
  };

  auto* homology_cmd = app.add_subcommand("homology", "Integral homology of a complex");
  homology_cmd->add_option("--complex", cfg.complex, "Simplicial complex file");

  auto* count_hom = app.add_subcommand("count-hom", "#H, surjections and #Q by brute force");
  group(count_hom);
  source(count_hom);

  auto* count_quot = app.add_subcommand("count-quot", "#Q checked against subgroup-lattice inversion");
  group(count_quot);
  source(count_quot);

  auto* dp = app.add_subcommand("dp-count", "Bounded-width cocycle count on a complex");
  group(dp);
  dp->add_option("--complex", cfg.complex, "Simplicial complex file");
  dp->add_option("--ordering", cfg.ordering, "default, greedy, or a complex file with an order section");
  dp->add_option("--mode", cfg.mode, "gauge or full");
  dp->add_flag("--eager", cfg.eager, "Label every edge when it is placed");

  auto* invert = app.add_subcommand("invert-lattice", "#Q(X, J) for every subgroup J");
  group(invert);
  source(invert);

  auto* reduce = app.add_subcommand("reduce", "Run the CSAT to RSAT4 pipeline");
  reduce->add_option("--circuit", cfg.circuit, "Boolean circuit file");
  reduce->add_option("--stage", cfg.stage, "Stage written by --output (rsat3 or rsat4)");
  reduce->add_option("--output", cfg.output, "Write the chosen stage as a circuit file");
  reduce->add_flag("--count", cfg.with_count, "Count every stage by brute force");

  auto* verify = app.add_subcommand("verify-parsimony", "Count every pipeline stage by brute force");
  verify->add_option("--circuit", cfg.circuit, "Boolean circuit file");
  verify->add_option("--gamma", cfg.gamma, "Group for the ZSAT stage");
  verify->add_flag("--no-zsat", cfg.no_zsat, "Skip the ZSAT stage");

  auto* zsat = app.add_subcommand("compile-zsat", "Compile a planar circuit over 4 symbols into ZSAT");
  zsat->add_option("--circuit", cfg.circuit, "Reversible circuit file");
  zsat->add_option("--gamma", cfg.gamma, "Group file");
  zsat->add_option("--output", cfg.output, "Write the ZSAT instance");
  zsat->add_flag("--count", cfg.with_count, "Check #ZSAT = |Γ| #RSAT + 1 by brute force");

  auto* orbit = app.add_subcommand("orbit", "Mapping-class orbits on surface-group representations");
  group(orbit);
  orbit->add_option("--extension", cfg.extension, "Stem extension file for Schur classes");
  orbit->add_option("--genus", cfg.genus, "Surface genus")->check(CLI::PositiveNumber);
  orbit->add_option("--filter", cfg.filter, "all, surjective or schur-zero");

  auto* heegaard = app.add_subcommand("heegaard-count", "#H and #Q of a Heegaard gluing");
  group(heegaard);
  heegaard->add_option("--gluing", cfg.gluing, "Gluing file");

  auto* rubik = app.add_subcommand("rubik-check", "Rubik-group generation check on free orbits");
  rubik->add_option("--gamma", cfg.gamma, "Group file");
  rubik->add_option("--orbits", cfg.orbits, "Number of free orbits");
  rubik->add_option("--generators", cfg.generators, "standard or random");
  rubik->add_option("--count", cfg.count, "Number of random generators");

  auto* goursat = app.add_subcommand("goursat", "Goursat decomposition of a subgroup of G1 x G2");
  goursat->add_option("--group", cfg.group, "First factor");
  goursat->add_option("--group2", cfg.group2, "Second factor (default: the first)");
  goursat->add_option("--pairs", cfg.pairs, "Generating pairs a:b separated by spaces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  int status = 0;
  try {
    Report r;
    if (homology_cmd->parsed())
      r = run_homology(cfg);
    else if (count_hom->parsed())
      r = run_count_hom(cfg);
    else if (count_quot->parsed())
      r = run_count_quot(cfg);
    else if (dp->parsed())
      r = run_dp_count(cfg);
    else if (invert->parsed())
      r = run_invert_lattice(cfg);
    else if (reduce->parsed())
      r = run_reduce(cfg);
    else if (verify->parsed())
      r = run_verify_parsimony(cfg, status);
    else if (zsat->parsed())
      r = run_compile_zsat(cfg, status);
    else if (orbit->parsed())
      r = run_orbit(cfg);
    else if (heegaard->parsed())
      r = run_heegaard(cfg);
    else if (rubik->parsed())
      r = run_rubik(cfg);
    else if (goursat->parsed())
      r = run_goursat(cfg);
    std::cout << (cfg.json ? r.json() : r.text());
  } catch (const verification_error& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const bound_exceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << '\n';
    return 2;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
