#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqfres/sqfres.hpp"

namespace sqfres::cli {

namespace {

using nlohmann::json;

MonomialIdeal load_ideal(const RunConfig& cfg) {
  if (cfg.seed) return random_ideal(cfg.random_vars, cfg.random_gens, *cfg.seed);
  if (!cfg.inline_ideal.empty()) return parse_ideal(cfg.inline_ideal, cfg.parse);
  if (cfg.input_path.empty())
    throw Error(ErrorCode::ParseError, "no input: give a file, --ideal or --seed");
  if (cfg.input_path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_ideal(text, cfg.parse);
  }
  return parse_ideal(read_file(cfg.input_path), cfg.parse);
}

bool letters_for(const RunConfig& cfg, const MonomialIdeal& ideal) {
  return cfg.parse.letters || ideal.vars().single_letter();
}

std::string mono(const MonomialIdeal& ideal, const SqfMonomial& m) {
  return to_string(m, ideal.vars());
}

json names(const MonomialIdeal& ideal, const GenSequence& seq) {
  json out = json::array();
  for (auto g : seq) out.push_back(mono(ideal, ideal.gen(g)));
  return out;
}

std::string seq_text(const MonomialIdeal& ideal, const GenSequence& seq) {
  std::string s = "(";
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (k) s += ", ";
    s += mono(ideal, ideal.gen(seq[k]));
  }
  return s + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

std::vector<std::size_t> parse_positions(const std::string& text, std::size_t count,
                                         const char* what) {
  std::vector<std::size_t> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty()) continue;
    std::size_t p = 0;
    try {
      p = std::stoul(token);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, std::string("bad ") + what + " entry '" + token + "'");
    }
    if (p < 1 || p > count)
      throw Error(ErrorCode::OutOfRange, std::string(what) + " entry " + token + " outside 1.." +
                                             std::to_string(count));
    out.push_back(p - 1);
  }
  return out;
}

// ---------------------------------------------------------------- betti

int cmd_betti(const RunConfig& cfg, const MonomialIdeal& ideal, std::ostream& out) {
  const auto table = betti_table(ideal, cfg.field, cfg.limits, cfg.threads);
  if (cfg.format == Format::Json) {
    out << write_betti_json(table, ideal.vars());
    return kOk;
  }
  // m2 stays byte-identical to Macaulay2's betti output
  if (cfg.format == Format::Text) out << "over " << cfg.field.to_string() << '\n';
  out << write_betti_m2(table);
  return kOk;
}

// ---------------------------------------------------------------- lattice

int cmd_lattice(const RunConfig& cfg, const MonomialIdeal& ideal, std::ostream& out) {
  const auto lat = build_lattice(ideal, cfg.limits.lattice_cap);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  if (cfg.hasse) covers = lat.hasse_covers(ideal);
  std::vector<SqfMonomial> comps;
  SqfMonomial target;
  if (!cfg.complements_of.empty()) {
    target = parse_monomial(cfg.complements_of, ideal.vars(), letters_for(cfg, ideal));
    comps = enumerate_complements(ideal, lat, target);
  }
  if (cfg.format == Format::Json) {
    json doc;
    doc["size"] = lat.size();
    json elems = json::array();
    for (const auto& e : lat.elements()) elems.push_back(mono(ideal, e));
    doc["elements"] = elems;
    if (cfg.hasse) {
      json h = json::array();
      for (const auto& [a, b] : covers) h.push_back({a, b});
      doc["hasse"] = h;
    }
    if (!cfg.complements_of.empty()) {
      doc["complements_of"] = mono(ideal, target);
      json c = json::array();
      for (const auto& e : comps) c.push_back(mono(ideal, e));
      doc["complements"] = c;
    }
    emit(out, doc);
    return kOk;
  }
  out << "# " << lat.size() << " elements\n";
  for (std::size_t i = 0; i < lat.size(); ++i) out << i << ": " << mono(ideal, lat.element(i)) << '\n';
  if (cfg.hasse) {
    out << "# covers\n";
    for (const auto& [a, b] : covers) out << a << " < " << b << '\n';
  }
  if (!cfg.complements_of.empty()) {
    out << "# complements of " << mono(ideal, target) << '\n';
    for (const auto& e : comps) out << mono(ideal, e) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- covers

json woc_json(const MonomialIdeal& ideal, const GenSequence& seq, const WocCheck& c) {
  json doc;
  doc["sequence"] = names(ideal, seq);
  doc["well_ordered"] = c.ok;
  if (!c.ok) {
    doc["reason"] = c.reason;
    if (c.failing_generator) doc["failing_generator"] = mono(ideal, ideal.gen(*c.failing_generator));
  }
  json w = json::array();
  for (const auto& [g, j] : c.witnesses)
    w.push_back({{"generator", mono(ideal, ideal.gen(g))}, {"j", j}});
  doc["witnesses"] = w;
  return doc;
}

void woc_text(std::ostream& out, const MonomialIdeal& ideal, const GenSequence& seq,
              const WocCheck& c) {
  out << seq_text(ideal, seq) << ": " << (c.ok ? "well ordered cover" : "not a well ordered cover");
  if (!c.ok) out << " (" << c.reason << ")";
  out << '\n';
  for (const auto& [g, j] : c.witnesses)
    out << "  " << mono(ideal, ideal.gen(g)) << ": j = " << j << '\n';
}

int cmd_covers(const RunConfig& cfg, const MonomialIdeal& ideal, std::ostream& out) {
  const bool json_out = cfg.format == Format::Json;
  const bool letters = letters_for(cfg, ideal);
  auto need_sequence = [&] {
    if (cfg.sequence.empty())
      throw Error(ErrorCode::InvalidArgument, "this mode needs --sequence");
    return parse_generator_sequence(cfg.sequence, ideal, letters);
  };

  if (cfg.well_ordered) {
    WocSearchOptions opts;
    opts.size = cfg.size;
    opts.first_only = cfg.first_only;
    opts.budget = cfg.limits.search_budget;
    const auto res = find_well_ordered_covers(ideal, opts);
    if (json_out) {
      json list = json::array();
      for (const auto& s : res.covers) list.push_back(names(ideal, s));
      emit(out, {{"well_ordered_covers", list}, {"exhaustive", res.exhaustive}, {"states", res.states}});
    } else {
      for (const auto& s : res.covers) out << seq_text(ideal, s) << '\n';
      if (res.covers.empty())
        out << "none found (" << (res.exhaustive ? "search exhaustive" : "budget exhausted") << ")\n";
      else if (!res.exhaustive)
        out << "partial: budget exhausted\n";
    }
    return res.exhaustive || (cfg.first_only && !res.covers.empty()) ? kOk : kBudgetExhausted;
  }
  if (cfg.check) {
    const auto seq = need_sequence();
    const auto c = check_well_ordered_cover(ideal, seq);
    if (json_out) emit(out, woc_json(ideal, seq, c));
    else woc_text(out, ideal, seq, c);
    return kOk;
  }
  if (cfg.split) {
    const auto seq = need_sequence();
    const auto cert = split_certificate(ideal, seq, *cfg.split);
    if (!cert.complement_ok || !cert.suffix_woc_ok)
      throw Error(ErrorCode::Internal, "split of a well ordered cover failed a guaranteed property");
    if (json_out) {
      emit(out, {{"sequence", names(ideal, seq)},
                 {"a", cert.a},
                 {"m", mono(ideal, cert.m)},
                 {"m2", mono(ideal, cert.m2)},
                 {"complement_ok", cert.complement_ok},
                 {"suffix_woc_ok", cert.suffix_woc_ok},
                 {"prefix_woc_ok", cert.prefix_woc_ok},
                 {"condition", to_string(cert.condition)}});
    } else {
      out << "split at a = " << cert.a << " of " << seq_text(ideal, seq) << '\n'
          << "m  = " << mono(ideal, cert.m) << '\n'
          << "m2 = " << mono(ideal, cert.m2) << '\n'
          << "lattice complements: " << yes_no(cert.complement_ok) << '\n'
          << "suffix well ordered in its induced ideal: " << yes_no(cert.suffix_woc_ok) << '\n'
          << "prefix well ordered in its induced ideal: " << yes_no(cert.prefix_woc_ok) << '\n'
          << "condition: " << to_string(cert.condition) << '\n';
    }
    return kOk;
  }
  if (cfg.alpha) {
    const auto seq = need_sequence();
    std::optional<GenSequence> order;
    if (!cfg.alpha_order.empty()) order = parse_generator_sequence(cfg.alpha_order, ideal, letters);
    const auto res = alpha_values(ideal, seq, order);
    if (json_out) {
      emit(out, {{"sequence", names(ideal, seq)},
                 {"nonmembers", names(ideal, res.nonmembers)},
                 {"alpha", res.alpha},
                 {"ell", res.ell}});
    } else {
      out << "sequence: " << seq_text(ideal, seq) << '\n';
      for (std::size_t k = 0; k < res.alpha.size(); ++k)
        out << "alpha(" << mono(ideal, ideal.gen(res.nonmembers[k])) << ") = " << res.alpha[k] << '\n';
      out << "ell = " << res.ell << '\n';
    }
    return kOk;
  }
  if (cfg.rotate) {
    const auto seq = need_sequence();
    const auto rotated = rotate_cover(ideal, seq, *cfg.rotate);
    const auto c = check_well_ordered_cover(ideal, rotated);
    if (json_out) {
      auto doc = woc_json(ideal, rotated, c);
      doc["original"] = names(ideal, seq);
      doc["i"] = *cfg.rotate;
      emit(out, doc);
    } else {
      woc_text(out, ideal, rotated, c);
    }
    return kOk;
  }
  // --minimal is the default mode.
  const auto covers = enumerate_minimal_covers(ideal, cfg.limits.search_budget);
  if (json_out) {
    json list = json::array();
    for (const auto& c : covers) list.push_back(names(ideal, c));
    emit(out, {{"minimal_covers", list}, {"exhaustive", true}});
  } else {
    for (const auto& c : covers) out << seq_text(ideal, c) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- bouquets

json bouquet_set_json(const MonomialIdeal& ideal, const BouquetSet& set) {
  json bs = json::array();
  for (const auto& b : set.bouquets) {
    json fv = json::array();
    for (auto v : b.free_vertex) fv.push_back(ideal.vars().name(v));
    bs.push_back({{"facets", names(ideal, b.facets)},
                  {"root", mono(ideal, b.root)},
                  {"free_vertices", fv},
                  {"vertices", mono(ideal, b.vertices)}});
  }
  return {{"bouquets", bs},
          {"representatives", names(ideal, set.representatives)},
          {"spans_delta", set.spans_delta},
          {"outside_condition_ok", set.outside_condition_ok}};
}

void bouquet_set_text(std::ostream& out, const MonomialIdeal& ideal, const BouquetSet& set) {
  for (std::size_t k = 0; k < set.bouquets.size(); ++k) {
    const auto& b = set.bouquets[k];
    out << "B" << k + 1 << " = <";
    for (std::size_t f = 0; f < b.facets.size(); ++f)
      out << (f ? ", " : "") << mono(ideal, ideal.gen(b.facets[f]));
    out << ">  root " << mono(ideal, b.root) << "  representative "
        << mono(ideal, ideal.gen(set.representatives[k])) << '\n';
  }
  out << "spans vertex set: " << yes_no(set.spans_delta)
      << ", outside condition: " << yes_no(set.outside_condition_ok) << '\n';
}

int cmd_bouquets(const RunConfig& cfg, const MonomialIdeal& ideal, std::ostream& out) {
  const bool json_out = cfg.format == Format::Json;
  const bool letters = letters_for(cfg, ideal);
  const auto complex = facet_complex(ideal);

  std::optional<BouquetSet> chosen;
  json doc = json::object();
  int status = kOk;

  if (!cfg.groups.empty()) {
    std::vector<GenSequence> groups;
    std::istringstream in(cfg.groups);
    for (std::string g; std::getline(in, g, '|');) groups.push_back(parse_generator_sequence(g, ideal, letters));
    std::optional<GenSequence> reps;
    if (!cfg.representatives.empty())
      reps = parse_generator_sequence(cfg.representatives, ideal, letters);
    const auto check = is_strongly_disjoint(complex, groups, reps);
    if (json_out) {
      doc["strongly_disjoint"] = check.ok;
      if (check.ok) doc["set"] = bouquet_set_json(ideal, check.set);
      else doc["reason"] = check.reason;
    } else if (check.ok) {
      out << "strongly disjoint set of bouquets\n";
      bouquet_set_text(out, ideal, check.set);
    } else {
      out << "not strongly disjoint: " << check.reason << '\n';
    }
    if (check.ok) chosen = check.set;
  } else {
    BouquetSearchOptions opts;
    opts.first_only = cfg.first_only || !cfg.ordering.empty() || !cfg.partition.empty();
    opts.budget = cfg.limits.search_budget;
    const auto res = contains_strongly_disjoint_set(complex, opts);
    if (json_out) {
      json sets = json::array();
      for (const auto& s : res.sets) sets.push_back(bouquet_set_json(ideal, s));
      doc["sets"] = sets;
      doc["exhaustive"] = res.exhaustive;
    } else {
      for (std::size_t k = 0; k < res.sets.size(); ++k) {
        out << "# set " << k + 1 << '\n';
        bouquet_set_text(out, ideal, res.sets[k]);
      }
      if (res.sets.empty())
        out << "none found (" << (res.exhaustive ? "search exhaustive" : "budget exhausted") << ")\n";
      else if (!res.exhaustive)
        out << "partial: search not exhaustive\n";
    }
    if (!res.sets.empty()) chosen = res.sets.front();
    if (!res.exhaustive && res.sets.empty()) status = kBudgetExhausted;
  }

  if (!cfg.ordering.empty()) {
    if (!chosen) throw Error(ErrorCode::InvalidBouquetSet, "no bouquet set to order");
    const auto order = parse_positions(cfg.ordering, chosen->bouquets.size(), "ordering");
    const auto seq = bouquet_ordering(complex, *chosen, order);
    const auto c = check_well_ordered_cover(ideal, seq);
    if (json_out) doc["ordering"] = woc_json(ideal, seq, c);
    else woc_text(out, ideal, seq, c);
  }
  if (!cfg.partition.empty()) {
    if (!chosen) throw Error(ErrorCode::InvalidBouquetSet, "no bouquet set to partition");
    const auto side = parse_positions(cfg.partition, chosen->bouquets.size(), "partition");
    const auto table = betti_table(ideal, cfg.field, cfg.limits, cfg.threads);
    const auto cert = bouquet_subadditivity(complex, *chosen, side, table, cfg.limits);
    if (json_out) {
      doc["subadditivity"] = {{"b1", cert.b1}, {"b2", cert.b2},
                              {"m", mono(ideal, cert.m)}, {"m2", mono(ideal, cert.m2)},
                              {"complement_ok", cert.complement_ok}, {"coprime", cert.coprime},
                              {"beta_m", cert.beta_m}, {"beta_m2", cert.beta_m2},
                              {"t_b", cert.t_b}, {"t_b1", cert.t_b1}, {"t_b2", cert.t_b2},
                              {"inequality_ok", cert.inequality_ok}, {"field", cfg.field.to_string()}};
    } else {
      out << "m = " << mono(ideal, cert.m) << " (b' = " << cert.b1 << "), m2 = " << mono(ideal, cert.m2)
          << " (b'' = " << cert.b2 << ")\n"
          << "lattice complements: " << yes_no(cert.complement_ok) << '\n'
          << "beta_{" << cert.b1 << "," << mono(ideal, cert.m) << "} = " << cert.beta_m << ", beta_{"
          << cert.b2 << "," << mono(ideal, cert.m2) << "} = " << cert.beta_m2 << " over "
          << cfg.field.to_string() << '\n'
          << "t_" << cert.b1 + cert.b2 << " = " << cert.t_b << " <= t_" << cert.b1 << " + t_"
          << cert.b2 << " = " << cert.t_b1 + cert.t_b2 << ": " << yes_no(cert.inequality_ok) << '\n';
    }
  }
  if (json_out) emit(out, doc);
  return status;
}

// ---------------------------------------------------------------- subadd

json witnesses_json(const MonomialIdeal& ideal, int i, int a, int b, const WitnessSearchResult& r) {
  json pairs = json::array();
  for (const auto& w : r.pairs)
    pairs.push_back({{"m", mono(ideal, w.m)}, {"m2", mono(ideal, w.m2)},
                     {"beta_m", w.beta_m}, {"beta_m2", w.beta_m2}});
  return {{"i", i}, {"a", a}, {"b", b}, {"exhaustive", r.exhaustive}, {"pairs", pairs}};
}

void witnesses_text(std::ostream& out, const MonomialIdeal& ideal, int i, int a, int b,
                    const WitnessSearchResult& r) {
  out << "complement witnesses for i = " << i << ", a = " << a << ", b = " << b << ":";
  if (r.pairs.empty()) out << " none found (" << (r.exhaustive ? "search exhaustive" : "budget exhausted") << ")";
  out << '\n';
  for (const auto& w : r.pairs) out << "  " << mono(ideal, w.m) << " | " << mono(ideal, w.m2) << '\n';
}

int cmd_subadd(const RunConfig& cfg, const MonomialIdeal& ideal, std::ostream& out) {
  const bool json_out = cfg.format == Format::Json;
  const auto table = betti_table(ideal, cfg.field, cfg.limits, cfg.threads);
  WitnessSearchOptions wopts;
  wopts.first_only = !cfg.all;
  wopts.budget = cfg.limits.search_budget;
  bool exhaustive = true;
  json doc;
  doc["field"] = cfg.field.to_string();

  if (cfg.witnesses.size() == 3) {
    const int i = cfg.witnesses[0], a = cfg.witnesses[1], b = cfg.witnesses[2];
    const auto r = search_complement_witnesses(ideal, table, i, a, b, wopts);
    exhaustive = exhaustive && (r.exhaustive || !r.pairs.empty());
    if (json_out) doc["witnesses"] = witnesses_json(ideal, i, a, b, r);
    else witnesses_text(out, ideal, i, a, b, r);
  }
  if (cfg.top_degree.size() == 3) {
    const int i = cfg.top_degree[0], a = cfg.top_degree[1], b = cfg.top_degree[2];
    const auto c = top_degree_check(ideal, table, i, a, b, wopts);
    if (json_out) {
      doc["top_degree"] = {{"i", i}, {"a", a}, {"b", b}, {"applicable", c.applicable}, {"r", c.r},
                           {"t_a", c.t_a}, {"t_b", c.t_b}, {"holds", c.holds},
                           {"witnesses", witnesses_json(ideal, i, a, b, c.witnesses)}};
    } else {
      out << "top degree r = " << c.r << ", beta_{" << i << ",top} "
          << (c.applicable ? "nonzero" : "zero (inapplicable, vacuously true)") << '\n'
          << "t_" << a << " + t_" << b << " = " << c.t_a + c.t_b << " >= " << c.r << ": "
          << yes_no(c.holds) << '\n';
      if (c.applicable) witnesses_text(out, ideal, i, a, b, c.witnesses);
    }
  }
  if (cfg.full || (cfg.witnesses.empty() && cfg.top_degree.empty())) {
    SubadditivityOptions sopts;
    sopts.collect_witnesses = cfg.all;
    sopts.search = wopts;
    const auto rep = verify_subadditivity(ideal, table, sopts);
    if (json_out) {
      json t = json::object();
      for (const auto& [a, v] : rep.t) t[std::to_string(a)] = v;
      json checks = json::array();
      for (const auto& c : rep.checks)
        checks.push_back({{"a", c.a}, {"b", c.b}, {"t_a", c.t_a}, {"t_b", c.t_b},
                          {"t_ab", c.t_ab}, {"holds", c.holds()}});
      json viol = json::array();
      for (const auto& [a, b] : rep.violations) viol.push_back({a, b});
      json wit = json::array();
      for (const auto& [key, r] : rep.witnesses) {
        wit.push_back(witnesses_json(ideal, std::get<0>(key), std::get<1>(key), std::get<2>(key), r));
        exhaustive = exhaustive && (r.exhaustive || !r.pairs.empty());
      }
      doc["pd"] = rep.pd;
      doc["t"] = t;
      doc["checks"] = checks;
      doc["violations"] = viol;
      doc["complement_witnesses"] = wit;
    } else {
      out << "field " << rep.field.to_string() << ", pd = " << rep.pd << '\n';
      for (const auto& [a, v] : rep.t) out << "t_" << a << " = " << v << '\n';
      for (const auto& c : rep.checks)
        out << "t_" << c.a + c.b << " = " << c.t_ab << " <= t_" << c.a << " + t_" << c.b << " = "
            << c.t_a + c.t_b << ": " << yes_no(c.holds()) << '\n';
      out << (rep.violations.empty() ? "no violations" : "VIOLATIONS FOUND") << '\n';
      for (const auto& [key, r] : rep.witnesses) {
        witnesses_text(out, ideal, std::get<0>(key), std::get<1>(key), std::get<2>(key), r);
        exhaustive = exhaustive && (r.exhaustive || !r.pairs.empty());
      }
    }
  }
  if (json_out) {
    doc["exhaustive"] = exhaustive;
    emit(out, doc);
  }
  return exhaustive ? kOk : kBudgetExhausted;
}

// ---------------------------------------------------------------- homology

int cmd_homology(const RunConfig& cfg, const MonomialIdeal& ideal, std::ostream& out) {
  if (cfg.multidegree.empty()) throw Error(ErrorCode::InvalidArgument, "homology needs --multidegree");
  const auto m = parse_monomial(cfg.multidegree, ideal.vars(), letters_for(cfg, ideal));
  const auto faces = taylor_faces_below(ideal, m, cfg.limits.face_cap);
  const auto ranks = reduced_homology_ranks(faces, cfg.field);
  const auto row = multigraded_betti_row(ideal, m, cfg.field, cfg.limits);
  const bool in_lattice = in_lcm_lattice(ideal, m);
  if (cfg.format == Format::Json) {
    json dims = json::array();
    for (std::size_t s = 0; s < ranks.face_counts.size(); ++s)
      dims.push_back({{"dim", static_cast<int>(s) - 1},
                      {"faces", ranks.face_counts[s]},
                      {"boundary_rank", ranks.boundary_ranks[s]},
                      {"reduced_homology", ranks.homology_ranks[s]}});
    json betti = json::array();
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i]) betti.push_back({{"i", i}, {"rank", row[i]}});
    emit(out, {{"multidegree", mono(ideal, m)}, {"field", cfg.field.to_string()},
               {"void", faces.is_void()}, {"in_lcm_lattice", in_lattice},
               {"dimensions", dims}, {"betti", betti}});
    return kOk;
  }
  out << "Gamma_<" << mono(ideal, m) << " over " << cfg.field.to_string();
  if (faces.is_void()) {
    out << ": void complex\n";
  } else {
    out << '\n' << "dim  faces  rank(boundary)  reduced homology\n";
    for (std::size_t s = 0; s < ranks.face_counts.size(); ++s)
      out << static_cast<int>(s) - 1 << "  " << ranks.face_counts[s] << "  "
          << ranks.boundary_ranks[s] << "  " << ranks.homology_ranks[s] << '\n';
    if (ranks.acyclic()) out << "acyclic\n";
  }
  out << (in_lattice ? "in" : "not in") << " the lcm lattice\n";
  bool any = false;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i]) {
      out << "beta_{" << i << "," << mono(ideal, m) << "} = " << row[i] << '\n';
      any = true;
    }
  if (!any) out << "all multigraded Betti numbers vanish at " << mono(ideal, m) << '\n';
  return kOk;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const auto ideal = load_ideal(cfg);
    if (cfg.command == "betti") return cmd_betti(cfg, ideal, out);
    if (cfg.command == "lattice") return cmd_lattice(cfg, ideal, out);
    if (cfg.command == "covers") return cmd_covers(cfg, ideal, out);
    if (cfg.command == "bouquets") return cmd_bouquets(cfg, ideal, out);
    if (cfg.command == "subadd") return cmd_subadd(cfg, ideal, out);
    if (cfg.command == "homology") return cmd_homology(cfg, ideal, out);
    err << "error: unknown command '" << cfg.command << "'\n";
    return kDomainError;
  } catch (const SizeLimitExceeded& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return kDomainError;
  }
}

namespace {

std::optional<std::uint64_t> env_budget(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  const std::string s(v);
  if (!std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 18 || std::stoull(s) == 0)
    throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be a positive integer");
  return std::stoull(s);
}

}  // namespace

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    if (auto v = env_budget("SQFRES_LATTICE_CAP")) cfg.limits.lattice_cap = *v;
    if (auto v = env_budget("SQFRES_FACE_CAP")) cfg.limits.face_cap = *v;
    if (auto v = env_budget("SQFRES_SEARCH_BUDGET")) cfg.limits.search_budget = *v;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }

  CLI::App app{"Betti numbers, well ordered covers and subadditivity for square-free monomial ideals",
               "sqfres"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string field = "q";
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"m2", Format::M2}, {"json", Format::Json}};

  app.add_option("-i,--input", cfg.input_path, "Ideal file (text or JSON); '-' reads stdin");
  app.add_option("--ideal", cfg.inline_ideal, "Inline ideal, e.g. \"x*y, y*z\" or \"xy,yz\" with --letters");
  app.add_flag("--letters", cfg.parse.letters, "Every character of a token is a variable");
  app.add_flag("--polarize", cfg.parse.polarize, "Accept exponents and polarize");
  app.add_option("--field", field, "q (rationals) or p:<prime>")->capture_default_str();
  app.add_option("--format", cfg.format, "text, m2 or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Use a random ideal from this seed instead of an input");
  app.add_option("--random-vars", cfg.random_vars, "Variables of the random ideal")->check(CLI::Range(1, 26));
  app.add_option("--random-gens", cfg.random_gens, "Generators of the random ideal")->check(CLI::PositiveNumber);
  app.add_option("--lattice-cap", cfg.limits.lattice_cap, "Maximum lcm lattice size")->check(CLI::PositiveNumber);
  app.add_option("--face-cap", cfg.limits.face_cap, "Maximum faces per Taylor subcomplex")->check(CLI::PositiveNumber);
  app.add_option("--search-budget", cfg.limits.search_budget, "Maximum search states")->check(CLI::PositiveNumber);

  auto add_input = [&](CLI::App* sub) { sub->add_option("input", cfg.input_path, "Ideal file"); };

  auto* betti = app.add_subcommand("betti", "Graded and multigraded Betti table");
  add_input(betti);

  auto* lattice = app.add_subcommand("lattice", "Elements of the lcm lattice");
  add_input(lattice);
  lattice->add_flag("--hasse", cfg.hasse, "Also list the cover relation");
  lattice->add_option("--complements", cfg.complements_of, "List lattice complements of this element");

  auto* covers = app.add_subcommand("covers", "Minimal and well ordered covers");
  add_input(covers);
  covers->add_flag("--minimal", cfg.minimal, "List minimal covers (default)");
  covers->add_flag("--well-ordered", cfg.well_ordered, "Search well ordered covers");
  covers->add_option("--size", cfg.size, "Only covers of this size");
  auto* first = covers->add_flag("--first", cfg.first_only, "Stop at the first one found");
  covers->add_flag("--all", cfg.all, "Report all (default)")->excludes(first);
  covers->add_option("--sequence", cfg.sequence, "Generator sequence, e.g. \"ab,xy,bc,xz\"");
  covers->add_flag("--check", cfg.check, "Check --sequence");
  covers->add_option("--split", cfg.split, "Split certificate of --sequence after position a");
  covers->add_flag("--alpha", cfg.alpha, "alpha values and ell of --sequence");
  covers->add_option("--order", cfg.alpha_order, "Order of the non-members for --alpha");
  covers->add_option("--rotate", cfg.rotate, "Rotate --sequence to start at position i");

  auto* bouquets = app.add_subcommand("bouquets", "Strongly disjoint sets of bouquets");
  add_input(bouquets);
  bouquets->add_flag("--find", cfg.find, "Search (default when --check is absent)");
  bouquets->add_flag("--first", cfg.first_only, "Stop at the first set found");
  bouquets->add_option("--check", cfg.groups, "Bouquets as facet groups, e.g. \"bcd,abc | gy,gx\"");
  bouquets->add_option("--reps", cfg.representatives, "Representatives for --check, one per bouquet");
  bouquets->add_option("--ordering", cfg.ordering, "1-based bouquet permutation, e.g. \"2,1\"");
  bouquets->add_option("--subadd", cfg.partition, "1-based bouquet positions forming one side");

  auto* subadd = app.add_subcommand("subadd", "Subadditivity of maximal shifts");
  add_input(subadd);
  subadd->add_flag("--full", cfg.full, "Check every t_{a+b} <= t_a + t_b (default)");
  subadd->add_option("--witnesses", cfg.witnesses, "i a b: lattice complement witnesses")->expected(3);
  subadd->add_option("--top-degree", cfg.top_degree, "i a b: compare t_a + t_b with the top degree")
      ->expected(3);
  subadd->add_flag("--all", cfg.all, "All witnesses instead of the first");

  auto* homology = app.add_subcommand("homology", "Homology of one Taylor subcomplex");
  add_input(homology);
  homology->add_option("--multidegree,-m", cfg.multidegree, "Square-free multidegree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kDomainError;
  }
  try {
    cfg.field = FieldSpec::parse(field);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  for (auto* sub : {betti, lattice, covers, bouquets, subadd, homology})
    if (sub->parsed()) cfg.command = sub->get_name();
  return run(cfg, out, err);
}

}  // namespace sqfres::cli
