#include "sqfres/betti.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "parallel.hpp"
#include "sqfres/lattice.hpp"

namespace sqfres {

std::size_t BettiTable::graded_at(int i, int j) const {
  auto it = graded.find({i, j});
  return it == graded.end() ? 0 : it->second;
}

std::size_t BettiTable::multigraded_at(int i, const SqfMonomial& m) const {
  for (const auto& e : multigraded)
    if (e.i == i && e.m == m) return e.rank;
  return 0;
}

std::size_t BettiTable::total(int i) const {
  std::size_t s = 0;
  for (const auto& [key, r] : graded)
    if (key.first == i) s += r;
  return s;
}

std::vector<std::size_t> multigraded_betti_row(const MonomialIdeal& ideal,
                                               const SqfMonomial& m,
                                               const FieldSpec& field,
                                               const Limits& limits) {
  if (m.is_one()) return {1};
  // Off the lattice Γ_{<m} is a cone or a full simplex; the Betti numbers
  // vanish there even though {∅} would suggest β_1 = 1 when no generator
  // divides m.
  if (!in_lcm_lattice(ideal, m)) return {};
  const auto ranks = reduced_homology_ranks(taylor_faces_below(ideal, m, limits.face_cap), field);
  std::vector<std::size_t> row(ranks.homology_ranks.size() + 1, 0);
  for (std::size_t s = 0; s < ranks.homology_ranks.size(); ++s)
    row[s + 1] = ranks.homology_ranks[s];
  while (!row.empty() && row.back() == 0) row.pop_back();
  return row;
}

std::size_t multigraded_betti(const MonomialIdeal& ideal, int i, const SqfMonomial& m,
                              const FieldSpec& field, const Limits& limits) {
  if (i < 0) return 0;
  if (i == 0) return m.is_one() ? 1 : 0;
  const auto row = multigraded_betti_row(ideal, m, field, limits);
  return static_cast<std::size_t>(i) < row.size() ? row[static_cast<std::size_t>(i)] : 0;
}

void aggregate(BettiTable& table) {
  std::sort(table.multigraded.begin(), table.multigraded.end(),
            [](const MultigradedEntry& a, const MultigradedEntry& b) {
              return a.i != b.i ? a.i < b.i : canonical_less(a.m, b.m);
            });
  table.graded.clear();
  table.t.clear();
  table.pd = 0;
  for (const auto& e : table.multigraded) {
    if (e.rank == 0) continue;
    table.graded[{e.i, static_cast<int>(e.m.degree())}] += e.rank;
    table.pd = std::max(table.pd, e.i);
  }
  for (const auto& [key, r] : table.graded) {
    if (key.first < 1) continue;
    auto& t = table.t[key.first];
    t = std::max(t, key.second);
  }
}

BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field,
                       const Limits& limits, unsigned threads) {
  const auto lattice = build_lattice(ideal, limits.lattice_cap);
  std::vector<std::vector<std::size_t>> rows(lattice.size());
  detail::parallel_for(lattice.size(), threads, [&](std::size_t k) {
    rows[k] = multigraded_betti_row(ideal, lattice.element(k), field, limits);
  });
  BettiTable table;
  table.field = field;
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t i = 0; i < rows[k].size(); ++i)
      if (rows[k][i] > 0)
        table.multigraded.push_back({static_cast<int>(i), lattice.element(k), rows[k][i]});
  aggregate(table);
  return table;
}

int t_max(const BettiTable& table, int a) {
  if (a < 1 || a > table.pd)
    throw Error(ErrorCode::OutOfRange, "t_" + std::to_string(a) +
                                           " is undefined; need 1 <= a <= pd = " +
                                           std::to_string(table.pd));
  return table.t.at(a);
}

std::string write_betti_m2(const GradedBetti& graded) {
  int pd = 0, lo = 0, hi = 0;
  bool first = true;
  for (const auto& [key, r] : graded) {
    if (r == 0) continue;
    const int row = key.second - key.first;
    pd = std::max(pd, key.first);
    lo = first ? row : std::min(lo, row);
    hi = first ? row : std::max(hi, row);
    first = false;
  }
  const auto ncols = static_cast<std::size_t>(pd + 1);
  std::vector<std::size_t> totals(ncols, 0);
  for (const auto& [key, r] : graded)
    if (key.first >= 0) totals[static_cast<std::size_t>(key.first)] += r;

  std::vector<std::string> labels{"", "total:"};
  std::vector<std::vector<std::string>> cells;
  {
    std::vector<std::string> header, tot;
    for (std::size_t c = 0; c < ncols; ++c) {
      header.push_back(std::to_string(c));
      tot.push_back(std::to_string(totals[c]));
    }
    cells.push_back(std::move(header));
    cells.push_back(std::move(tot));
  }
  for (int row = lo; row <= hi; ++row) {
    labels.push_back(std::to_string(row) + ":");
    std::vector<std::string> line;
    for (std::size_t c = 0; c < ncols; ++c) {
      auto it = graded.find({static_cast<int>(c), row + static_cast<int>(c)});
      line.push_back(it == graded.end() || it->second == 0 ? "." : std::to_string(it->second));
    }
    cells.push_back(std::move(line));
  }
  std::size_t label_w = 0;
  for (const auto& l : labels) label_w = std::max(label_w, l.size());
  std::vector<std::size_t> width(ncols, 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < ncols; ++c) width[c] = std::max(width[c], line[c].size());

  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    out << std::string(label_w - labels[r].size(), ' ') << labels[r];
    for (std::size_t c = 0; c < ncols; ++c)
      out << ' ' << std::string(width[c] - cells[r][c].size(), ' ') << cells[r][c];
    out << '\n';
  }
  return out.str();
}

std::string write_betti_m2(const BettiTable& table) { return write_betti_m2(table.graded); }

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

[[noreturn]] void bad_table(const std::string& why) {
  throw Error(ErrorCode::ParseError, "malformed Betti table: " + why);
}

std::size_t parse_count(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) bad_table("bad entry '" + s + "'");
  return std::stoull(s);
}

}  // namespace

GradedBetti parse_betti_m2(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::vector<std::string>> lines;
  for (std::string line; std::getline(in, line);) {
    auto t = tokens(line);
    if (!t.empty()) lines.push_back(std::move(t));
  }
  if (lines.size() < 2) bad_table("missing header or totals");
  const auto ncols = lines[0].size();
  for (std::size_t c = 0; c < ncols; ++c)
    if (parse_count(lines[0][c]) != c) bad_table("header must be 0 1 2 ...");
  if (lines[1].size() != ncols + 1 || lines[1][0] != "total:") bad_table("bad totals row");
  GradedBetti graded;
  std::vector<std::size_t> sums(ncols, 0);
  for (std::size_t r = 2; r < lines.size(); ++r) {
    const auto& line = lines[r];
    if (line.size() != ncols + 1 || line[0].size() < 2 || line[0].back() != ':')
      bad_table("bad row '" + line[0] + "'");
    int row = 0;
    try {
      row = std::stoi(line[0].substr(0, line[0].size() - 1));
    } catch (const std::exception&) {
      bad_table("bad row label '" + line[0] + "'");
    }
    for (std::size_t c = 0; c < ncols; ++c) {
      if (line[c + 1] == ".") continue;
      const auto v = parse_count(line[c + 1]);
      if (v == 0) continue;
      graded[{static_cast<int>(c), row + static_cast<int>(c)}] = v;
      sums[c] += v;
    }
  }
  for (std::size_t c = 0; c < ncols; ++c)
    if (parse_count(lines[1][c + 1]) != sums[c]) bad_table("totals do not match rows");
  return graded;
}

std::string write_betti_json(const BettiTable& table, const VariableTable& vars) {
  using nlohmann::json;
  json doc;
  doc["field"] = table.field.to_string();
  doc["pd"] = table.pd;
  json t = json::object();
  for (const auto& [a, v] : table.t) t[std::to_string(a)] = v;
  doc["t"] = t;
  json totals = json::array();
  for (int i = 0; i <= table.pd; ++i) totals.push_back(table.total(i));
  doc["totals"] = totals;
  json graded = json::array();
  for (const auto& [key, r] : table.graded)
    graded.push_back({{"i", key.first}, {"j", key.second}, {"rank", r}});
  doc["graded"] = graded;
  json multi = json::array();
  for (const auto& e : table.multigraded) {
    json support = json::array();
    for (auto v : e.m.indices()) support.push_back(vars.name(v));
    multi.push_back({{"i", e.i},
                     {"multidegree", to_string(e.m, vars)},
                     {"support", support},
                     {"rank", e.rank}});
  }
  doc["multigraded"] = multi;
  return doc.dump(2) + "\n";
}

}  // namespace sqfres
