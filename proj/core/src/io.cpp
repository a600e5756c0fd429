#include "sqfres/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sqfres {

namespace {

using json = nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Splits into generator chunks on newlines, ',' and ';', dropping comment
/// lines and blanks.
std::vector<std::string_view> generator_chunks(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  bool comment = false;
  bool at_line_start = true;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : '\n';
    if (at_line_start && !std::isspace(static_cast<unsigned char>(c))) {
      comment = c == '#';
      at_line_start = false;
    }
    if (c == '\n' || c == ',' || c == ';') {
      if (!comment) {
        auto chunk = trim(text.substr(start, i - start));
        if (!chunk.empty()) out.push_back(chunk);
      }
      start = i + 1;
      if (c == '\n') {
        comment = false;
        at_line_start = true;
      }
    }
  }
  return out;
}

struct Factor {
  std::string name;
  unsigned exponent = 1;
};

unsigned parse_exponent(std::string_view digits, std::string_view context) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error(ErrorCode::ParseError, "bad exponent in '" + std::string(context) + "'");
  const auto e = std::stoul(std::string(digits));
  if (e == 0 || e > 1000)
    throw Error(ErrorCode::ParseError, "exponent out of range in '" + std::string(context) + "'");
  return static_cast<unsigned>(e);
}

std::vector<Factor> split_factors(std::string_view chunk, bool letters) {
  std::vector<Factor> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == '*' || std::isspace(static_cast<unsigned char>(c)); };
  while (i < chunk.size()) {
    if (is_sep(chunk[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < chunk.size() && !is_sep(chunk[j])) ++j;
    const auto token = chunk.substr(i, j - i);
    i = j;
    const auto caret = token.find('^');
    const auto base = token.substr(0, caret);
    const unsigned e = caret == std::string_view::npos
                           ? 1u
                           : parse_exponent(token.substr(caret + 1), token);
    if (base.empty())
      throw Error(ErrorCode::ParseError, "missing variable name in '" + std::string(token) + "'");
    if (base == "1")
      throw Error(ErrorCode::ParseError, "the constant 1 is not a valid generator");
    if (letters) {
      for (std::size_t k = 0; k < base.size(); ++k)
        out.push_back({std::string(1, base[k]), k + 1 == base.size() ? e : 1u});
    } else {
      out.push_back({std::string(base), e});
    }
  }
  return out;
}

}  // namespace

MonomialIdeal parse_ideal_text(std::string_view text, const ParseOptions& opts) {
  const auto chunks = generator_chunks(text);
  if (chunks.empty()) throw Error(ErrorCode::ParseError, "input contains no generators");
  std::vector<GeneralMonomial> general;
  bool square_free = true;
  for (auto chunk : chunks) {
    GeneralMonomial g;
    for (auto& f : split_factors(chunk, opts.letters)) {
      auto it = std::find_if(g.begin(), g.end(), [&](const auto& p) { return p.first == f.name; });
      if (it != g.end()) it->second += f.exponent;
      else g.emplace_back(f.name, f.exponent);
    }
    if (g.empty()) throw Error(ErrorCode::ParseError, "empty generator '" + std::string(chunk) + "'");
    for (const auto& [n, e] : g)
      if (e > 1) square_free = false;
    general.push_back(std::move(g));
  }
  if (!square_free && !opts.polarize)
    throw Error(ErrorCode::ParseError,
                "input is not square-free (enable polarization to accept exponents)");
  // polarize() interns variables in first-seen order and is the identity on
  // square-free input, so it doubles as the square-free constructor.
  return polarize(general);
}

std::string write_ideal_text(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << "# " << ideal.num_gens() << " generators\n";
  for (const auto& g : ideal.gens()) {
    bool first = true;
    for (auto v : g.indices()) {
      if (!first) out << ' ';
      out << ideal.vars().name(v);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

MonomialIdeal parse_ideal_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("generators"))
    throw Error(ErrorCode::ParseError, "JSON ideal needs a \"generators\" array");
  std::vector<std::string> names;
  const bool explicit_vars = doc.contains("variables");
  try {
    if (explicit_vars) names = doc.at("variables").get<std::vector<std::string>>();
    const auto& gens = doc.at("generators");
    if (!gens.is_array()) throw Error(ErrorCode::ParseError, "\"generators\" must be an array");
    std::vector<std::vector<std::string>> raw;
    for (const auto& g : gens) raw.push_back(g.get<std::vector<std::string>>());
    if (!explicit_vars) {
      for (const auto& g : raw)
        for (const auto& n : g)
          if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
    }
    auto table = make_variable_table(std::move(names));
    std::vector<SqfMonomial> monos;
    for (const auto& g : raw) {
      SqfMonomial m;
      for (const auto& n : g) {
        const auto v = table->find(n);
        if (v == table->size())
          throw Error(ErrorCode::ParseError, "generator uses undeclared variable '" + n + "'");
        if (m.contains(v))
          throw Error(ErrorCode::ParseError, "repeated variable '" + n + "' in a generator");
        m.insert(v);
      }
      if (m.is_one()) throw Error(ErrorCode::ParseError, "empty generator");
      monos.push_back(m);
    }
    if (monos.empty()) throw Error(ErrorCode::ParseError, "input contains no generators");
    return normalize_generators(monos, table);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON ideal: ") + e.what());
  }
}

std::string write_ideal_json(const MonomialIdeal& ideal) {
  json doc;
  std::vector<std::string> names;
  for (auto v : ideal.top().indices()) names.push_back(ideal.vars().name(v));
  doc["variables"] = names;
  json gens = json::array();
  for (const auto& g : ideal.gens()) {
    std::vector<std::string> vs;
    for (auto v : g.indices()) vs.push_back(ideal.vars().name(v));
    gens.push_back(vs);
  }
  doc["generators"] = gens;
  return doc.dump(2) + "\n";
}

MonomialIdeal parse_ideal(std::string_view text, const ParseOptions& opts) {
  const auto t = trim(text);
  if (t.empty()) throw Error(ErrorCode::ParseError, "input is empty");
  if (t.front() == '{') return parse_ideal_json(t);
  return parse_ideal_text(t, opts);
}

MonomialIdeal ideal_from_letters(std::string_view text) {
  ParseOptions opts;
  opts.letters = true;
  return parse_ideal_text(text, opts);
}

SqfMonomial parse_monomial(std::string_view text, const VariableTable& vars, bool letters) {
  const auto t = trim(text);
  if (t == "1") return {};
  SqfMonomial m;
  for (const auto& f : split_factors(t, letters)) {
    if (f.exponent != 1)
      throw Error(ErrorCode::ParseError, "exponents are not allowed here: '" + std::string(t) + "'");
    const auto v = vars.find(f.name);
    if (v == vars.size())
      throw Error(ErrorCode::ParseError, "unknown variable '" + f.name + "'");
    m.insert(v);
  }
  return m;
}

std::vector<SqfMonomial> parse_monomial_list(std::string_view text, const VariableTable& vars,
                                             bool letters) {
  std::vector<SqfMonomial> out;
  for (auto chunk : generator_chunks(text)) out.push_back(parse_monomial(chunk, vars, letters));
  return out;
}

std::vector<std::size_t> parse_generator_sequence(std::string_view text,
                                                  const MonomialIdeal& ideal, bool letters) {
  std::vector<std::size_t> out;
  for (const auto& m : parse_monomial_list(text, ideal.vars(), letters)) {
    const auto idx = ideal.index_of(m);
    if (!idx)
      throw Error(ErrorCode::ParseError,
                  to_string(m, ideal.vars()) + " is not a generator of the ideal");
    out.push_back(*idx);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sqfres
