#include "stabclass/cli.hpp"

#include <chrono>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "stabclass/bijections.hpp"
#include "stabclass/catalog.hpp"
#include "stabclass/errors.hpp"

namespace stabclass {

namespace {

std::string gens_text(const GroupPtr& g, const std::vector<Element>& gens) {
  if (gens.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += g->element(gens[i]).to_cycle_string();
  }
  return out;
}

std::vector<unsigned> primes_for(std::size_t order, const std::string& filter) {
  std::vector<unsigned> out;
  for (unsigned p : prime_divisors(order)) {
    if (filter == "all" || filter == std::to_string(p)) out.push_back(p);
  }
  return out;
}

void write_json(const std::optional<std::string>& path, const Json& doc) {
  if (!path) return;
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + *path);
  f << dump(doc);
}

struct Tally {
  std::size_t runs = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;

  void add(const std::string& label, const CheckReport& r) {
    ++runs;
    if (r.passed()) return;
    ++failed;
    for (const auto& item : r.items) {
      if (item.passed) continue;
      for (const auto& w : item.witnesses) failures.push_back(label + ": " + item.name + ": " + w);
      if (item.witnesses.empty()) failures.push_back(label + ": " + item.name);
    }
    if (!r.skipped.empty()) failures.push_back(label + ": skipped: " + r.skipped);
  }
};

Json labelled(const std::string& key, const std::string& value, const CheckReport& r) {
  Json j = check_json(r);
  Json out;
  out[key] = value;
  for (auto& [k, v] : j.items()) out[k] = v;
  return out;
}

}  // namespace

CommandResult cmd_decide(const DecideOptions& opts, const std::vector<std::string>& command) {
  Limits limits;
  limits.max_order = opts.max_order;
  const GroupPtr a = parse_group(opts.group_a, limits);
  const GroupPtr b = parse_group(opts.group_b, limits);
  if (!is_prime(opts.prime)) throw std::invalid_argument("--prime must be a prime");

  ClassifyContext ctx;
  const Verdict v = decide(a, b, opts.prime, &ctx);
  Json props = Json::object();
  std::ostringstream text;
  text << "G  = " << opts.group_a << " (order " << a->order() << ")\n";
  text << "G' = " << opts.group_b << " (order " << b->order() << ")\n";
  text << "p  = " << opts.prime << "\n\n";
  text << std::left << std::setw(28) << "Q" << std::setw(12) << "|Inj|" << std::setw(12) << "|Cen|" << std::setw(8)
       << "Inj" << std::setw(12) << "|Rep|" << "Rep\n";
  for (const auto& row : v.per_q) {
    auto pair = [](std::size_t x, std::size_t y) { return std::to_string(x) + "/" + std::to_string(y); };
    text << std::setw(28) << row.name;
    if (row.inj) {
      text << std::setw(12) << pair(row.inj->size_a, row.inj->size_b) << std::setw(12) << pair(row.cen_a, row.cen_b)
           << std::setw(8) << (row.inj->verdict.isomorphic ? "iso" : "DIFF");
    } else {
      text << std::setw(12) << "-" << std::setw(12) << "-" << std::setw(8) << "-";
    }
    text << std::setw(12) << pair(row.rep.size_a, row.rep.size_b) << (row.rep.verdict.isomorphic ? "iso" : "DIFF")
         << "\n";
  }
  text << "\n";
  for (const auto& w : v.witnesses) text << "witness Q = " << w.q << ": " << w.diff << "\n";
  if (!v.rep_inj_consistent) {
    text << "WARNING: Rep comparison on the tested range disagrees with the Inj comparison\n";
  }
  text << "verdict: algebraic criterion " << (v.equivalent ? "holds" : "fails") << " at p = " << opts.prime;
  if (v.equivalent) text << " (corollary: the p-completed classifying spaces are stably equivalent)";
  text << "\n";

  int code = v.equivalent ? 0 : 1;
  if (opts.check_props && v.equivalent) {
    const auto p2 = check_prop2(a, b, opts.prime, &ctx);
    const auto p6 = check_prop6(a, b, opts.prime, &ctx);
    props["prop2"] = check_json(p2);
    props["prop6"] = check_json(p6);
    for (const auto* r : {&p2, &p6}) {
      text << r->title << ": " << (r->passed() ? "pass" : "FAIL") << "\n";
      for (const auto& item : r->items) {
        if (item.passed) continue;
        for (const auto& w : item.witnesses) text << "  " << item.name << ": " << w << "\n";
      }
    }
    if (!p2.passed() || !p6.passed()) code = 2;
  }

  Json inputs{{"group_a", opts.group_a},
              {"group_b", opts.group_b},
              {"prime", opts.prime},
              {"max_order", opts.max_order},
              {"check_props", opts.check_props}};
  CommandResult result{code, text.str(),
                       report_document(command, std::move(inputs), verdict_json(v), per_q_json(v), std::move(props),
                                       Json::object())};
  return result;
}

CommandResult cmd_verify(const VerifyOptions& opts, const std::vector<std::string>& command) {
  if (opts.prime != "all") {
    unsigned p = 0;
    try {
      p = static_cast<unsigned>(std::stoul(opts.prime));
    } catch (const std::exception&) {
      throw std::invalid_argument("--prime must be a prime or 'all'");
    }
    if (!is_prime(p) || std::to_string(p) != opts.prime) throw std::invalid_argument("--prime must be a prime or 'all'");
  }
  const auto groups = corpus(opts.max_order);
  const std::size_t lemma_bound = std::min<std::size_t>(opts.max_order, 24);
  ClassifyContext ctx;
  Tally tally;
  Json lemma3 = Json::array();
  Json lemma4 = Json::array();
  Json lemma5 = Json::array();

  std::vector<GroupSpec> small_p_groups;
  for (const auto& spec : corpus(std::min<std::size_t>(opts.max_order, 8))) {
    if (prime_divisors(spec.resolved->order()).size() <= 1) small_p_groups.push_back(spec);
  }
  const GroupPtr s3 = parse_group("S3");
  const GroupPtr s4 = parse_group("S4");

  for (const auto& spec : groups) {
    const GroupPtr& g = spec.resolved;
    for (unsigned p : primes_for(g->order(), opts.prime)) {
      const std::string label = spec.text + " p=" + std::to_string(p);
      TildeClassTable table = ctx.tilde(g, p);
      if (opts.corrupt_fixture && table.size() >= 2) table = corrupt_table_for_testing(std::move(table), 0, 1);
      const auto r3 = verify_lemma3(table);
      tally.add(label + " lemma3", r3);
      Json entry = labelled("group", spec.text, r3);
      entry["prime"] = p;
      lemma3.push_back(std::move(entry));

      if (g->order() > lemma_bound) continue;
      LemmaWorkspace ws(table);
      const Embedding emb = product_embedding(g);
      std::vector<Embedding> embeddings{emb};
      if (same_group(g, s3)) embeddings.push_back(extension_embedding(g, s4));
      for (const auto& qs : small_p_groups) {
        if (qs.resolved->order() > 1 && !is_p_power(qs.resolved->order(), p)) continue;
        const GroupPtr q = ctx.canonical_q(qs.resolved);
        for (const auto& e : embeddings) {
          const auto r4 = verify_lemma4(q, ws, ctx.aut(q), &e);
          const std::string tag = label + " Q=" + qs.text + " into " + name_of(e.super);
          tally.add(tag + " lemma4", r4);
          Json j = labelled("group", spec.text, r4);
          j["prime"] = p;
          j["q"] = qs.text;
          j["embedding"] = name_of(e.super);
          lemma4.push_back(std::move(j));
        }
      }
      for (std::size_t i = 0; i < ws.table().size(); ++i) {
        for (std::size_t k = 0; k < ws.table().size(); ++k) {
          const auto r5 = verify_lemma5(i, k, ws);
          tally.add(label + " lemma5 i=" + std::to_string(i) + " k=" + std::to_string(k), r5);
          Json j = labelled("group", spec.text, r5);
          j["prime"] = p;
          j["i"] = i;
          j["k"] = k;
          lemma5.push_back(std::move(j));
        }
      }
    }
  }

  Json prop2 = Json::array();
  Json prop6 = Json::array();
  std::size_t pairs_decided = 0;
  std::size_t pairs_equivalent = 0;
  for (std::size_t x = 0; x < groups.size(); ++x) {
    const GroupPtr& g = groups[x].resolved;
    if (g->order() > lemma_bound) continue;
    for (std::size_t y = x + 1; y < groups.size(); ++y) {
      const GroupPtr& h = groups[y].resolved;
      if (h->order() > lemma_bound) continue;
      for (unsigned p : primes_for(g->order(), opts.prime)) {
        if (h->order() % p != 0) continue;
        // Non-isomorphic Sylows already separate the pair.
        if (!isomorphic(sylow(g, p).as_group(), sylow(h, p).as_group())) continue;
        ++pairs_decided;
        if (!decide(g, h, p, &ctx).equivalent) continue;
        ++pairs_equivalent;
        const std::string label = groups[x].text + " ~ " + groups[y].text + " p=" + std::to_string(p);
        const auto r2 = check_prop2(g, h, p, &ctx);
        const auto r6 = check_prop6(g, h, p, &ctx);
        tally.add(label + " prop2", r2);
        tally.add(label + " prop6", r6);
        for (auto [arr, r] : {std::pair{&prop2, &r2}, std::pair{&prop6, &r6}}) {
          Json j = labelled("pair", groups[x].text + " ~ " + groups[y].text, *r);
          j["prime"] = p;
          arr->push_back(std::move(j));
        }
      }
    }
  }

  std::ostringstream text;
  text << "verify: corpus up to order " << opts.max_order << ", prime " << opts.prime
       << (opts.corrupt_fixture ? " (corrupted fixture)" : "") << "\n";
  text << "  lemma3 runs: " << lemma3.size() << "\n";
  text << "  lemma4 runs: " << lemma4.size() << "\n";
  text << "  lemma5 runs: " << lemma5.size() << "\n";
  text << "  pairs decided: " << pairs_decided << ", equivalent: " << pairs_equivalent << "\n";
  text << "  prop2/prop6 runs: " << prop2.size() + prop6.size() << "\n";
  text << "  failed runs: " << tally.failed << " of " << tally.runs << "\n";
  for (const auto& f : tally.failures) text << "  FAIL " << f << "\n";
  text << (tally.failed == 0 ? "all checks passed" : "some checks FAILED") << "\n";

  Json inputs{{"max_order", opts.max_order}, {"prime", opts.prime}, {"corrupt_fixture", opts.corrupt_fixture}};
  Json verdict{{"passed", tally.failed == 0},
               {"runs", tally.runs},
               {"failed", tally.failed},
               {"failures", tally.failures},
               {"pairs_decided", pairs_decided},
               {"pairs_equivalent", pairs_equivalent}};
  Json props{{"prop2", std::move(prop2)}, {"prop6", std::move(prop6)}};
  Json lemmas{{"lemma3", std::move(lemma3)}, {"lemma4", std::move(lemma4)}, {"lemma5", std::move(lemma5)}};
  return {tally.failed == 0 ? 0 : 1, text.str(),
          report_document(command, std::move(inputs), std::move(verdict), Json::array(), std::move(props),
                          std::move(lemmas))};
}

CommandResult cmd_inspect(const InspectOptions& opts, const std::vector<std::string>& command) {
  const GroupPtr g = parse_group(opts.group);
  const unsigned p = opts.prime;
  if (!is_prime(p)) throw std::invalid_argument("--prime must be a prime");
  std::ostringstream text;
  text << "group " << opts.group << ": order " << g->order() << ", degree " << g->degree() << ", generators "
       << canonical_form(g) << "\n\n";

  Json subgroups = Json::array();
  text << "subgroup classes (order, class size, normal, type, generators):\n";
  {
    const auto all = all_subgroups(g);
    std::map<std::vector<Element>, std::size_t> idx;
    for (std::size_t i = 0; i < all.size(); ++i) idx.emplace(all[i].elements(), i);
    std::vector<bool> seen(all.size(), false);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (seen[i]) continue;
      std::size_t members = 0;
      for (std::size_t x = 0; x < g->order(); ++x) {
        const std::size_t j = idx.at(conjugate(all[i], static_cast<Element>(x)).elements());
        if (!seen[j]) {
          seen[j] = true;
          ++members;
        }
      }
      const std::string type = name_of(all[i].as_group());
      const std::string gens = gens_text(g, all[i].generators());
      text << "  " << std::setw(4) << all[i].order() << std::setw(4) << members << "  " << (members == 1 ? "yes" : "no ")
           << "  " << std::left << std::setw(20) << type << std::right << gens << "\n";
      subgroups.push_back(
          {{"order", all[i].order()}, {"class_size", members}, {"type", type}, {"generators", gens}});
    }
  }

  const Subgroup syl = sylow(g, p);
  const std::string syl_type = name_of(syl.as_group());
  text << "\nSylow " << p << "-subgroup: order " << syl.order() << ", type " << syl_type << ", generators "
       << gens_text(g, syl.generators()) << "\n";

  ClassifyContext ctx;
  const TildeClassTable& table = ctx.tilde(g, p);
  Json tilde = Json::array();
  text << "\ntilde classes (j, Q_j, tilde Q_j, members):\n";
  for (std::size_t j = 0; j < table.size(); ++j) {
    const auto& rep = table.rep(j);
    const auto members = static_cast<std::size_t>(std::count(table.membership.begin(), table.membership.end(), j));
    const std::string base = name_of(rep.base.as_group());
    const std::string tl = name_of(rep.tilde_group);
    text << "  " << j << "  " << base << " <" << gens_text(g, rep.base.generators()) << ">  in  " << tl << " <"
         << gens_text(g, rep.tilde.generators()) << ">  " << members << "\n";
    tilde.push_back({{"j", j},
                     {"base", base},
                     {"base_generators", gens_text(g, rep.base.generators())},
                     {"tilde", tl},
                     {"tilde_order", rep.tilde.order()},
                     {"members", members}});
  }

  std::vector<std::pair<std::string, GroupPtr>> qs;
  if (opts.q) {
    qs.emplace_back(*opts.q, parse_group(*opts.q));
  } else {
    for (const auto& q : q_candidates(g, g, p, &ctx)) qs.emplace_back(name_of(q), q);
  }
  Json per_q = Json::array();
  text << "\nper Q (|Hom|, |Rep|, |Inj|, |Cen|, |nCen|):\n";
  for (const auto& [name, q] : qs) {
    const std::size_t hom = all_homomorphisms(q, g).size();
    const ClassSet& rep = ctx.rep(q, g);
    const ClassSet& inj = ctx.inj(q, g);
    const auto [cen, ncen] = split_cen(inj, p);
    text << "  " << std::left << std::setw(24) << name << std::right << std::setw(6) << hom << std::setw(6) << rep.size()
         << std::setw(6) << inj.size() << std::setw(6) << cen.size() << std::setw(6) << ncen.size() << "\n";
    std::vector<std::size_t> sizes{inj.size(), cen.size(), ncen.size()};
    const auto acts = joint_actions(sizes, {inj.action()->table, cen.action()->table, ncen.action()->table},
                                    Limits{2000, 4096, 20000});
    const auto family = ctx.family(acts[0].group, p);
    Json profiles;
    const char* names[] = {"inj", "cen", "ncen"};
    for (std::size_t s = 0; s < 3; ++s) {
      const auto prof = profile(acts[s], family, p);
      profiles[names[s]] = profile_json(prof);
      text << "    " << names[s] << " fixed points:";
      for (std::size_t k = 0; k < family.size(); ++k) text << " [" << describe_subgroup(family[k]) << "]=" << prof.counts[k];
      text << "\n";
    }
    per_q.push_back({{"q", name},
                     {"hom", hom},
                     {"rep", rep.size()},
                     {"inj", inj.size()},
                     {"cen", cen.size()},
                     {"ncen", ncen.size()},
                     {"profiles", std::move(profiles)}});
  }

  Json inputs{{"group", opts.group}, {"prime", p}};
  if (opts.q) inputs["q"] = *opts.q;
  Json verdict{{"order", g->order()}, {"sylow", syl_type}, {"subgroups", std::move(subgroups)}, {"tilde", std::move(tilde)}};
  return {0, text.str(),
          report_document(command, std::move(inputs), std::move(verdict), std::move(per_q), Json::object(),
                          Json::object())};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"stable classification of p-completed classifying spaces of small groups"};
  app.require_subcommand(1);

  DecideOptions dopt;
  auto* decide_cmd = app.add_subcommand("decide", "compare two groups at a prime");
  decide_cmd->add_option("--group-a", dopt.group_a, "first group spec")->required();
  decide_cmd->add_option("--group-b", dopt.group_b, "second group spec")->required();
  decide_cmd->add_option("--prime", dopt.prime, "prime p")->required();
  decide_cmd->add_option("--json", dopt.json_path, "write the structured report here");
  decide_cmd->add_option("--max-order", dopt.max_order, "group order bound");
  decide_cmd->add_flag("--check-props", dopt.check_props, "also run the Cen consistency checks");

  VerifyOptions vopt;
  auto* verify_cmd = app.add_subcommand("verify", "verify the constructions over the corpus");
  verify_cmd->add_option("--max-order", vopt.max_order, "corpus order bound")->required();
  verify_cmd->add_option("--prime", vopt.prime, "prime or 'all'")->required();
  verify_cmd->add_option("--json", vopt.json_path, "write the structured report here");
  verify_cmd->add_flag("--corrupt-fixture", vopt.corrupt_fixture)->group("");

  InspectOptions iopt;
  auto* inspect_cmd = app.add_subcommand("inspect", "print subgroup, tilde and class data");
  inspect_cmd->add_option("--group", iopt.group, "group spec")->required();
  inspect_cmd->add_option("--prime", iopt.prime, "prime p")->required();
  inspect_cmd->add_option("--q", iopt.q, "restrict to this Q");
  inspect_cmd->add_option("--json", iopt.json_path, "write the structured report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  std::vector<std::string> command(argv + 1, argv + argc);
  try {
    const auto start = std::chrono::steady_clock::now();
    CommandResult r;
    std::optional<std::string> path;
    if (*decide_cmd) {
      r = cmd_decide(dopt, command);
      path = dopt.json_path;
    } else if (*verify_cmd) {
      if (vopt.max_order > kCorpusCeiling) throw std::invalid_argument("--max-order above corpus ceiling");
      r = cmd_verify(vopt, command);
      path = vopt.json_path;
    } else {
      r = cmd_inspect(iopt, command);
      path = iopt.json_path;
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    out << r.text << "elapsed: " << elapsed.count() << " s\n";
    write_json(path, r.document);
    return r.exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace stabclass
