#include "sdep/io.hpp"

#include <fstream>
#include <sstream>

#include "sdep/error.hpp"

namespace sdep::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::kParse, where + ": " + what);
}

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

long integer(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected an integer, got " + v.dump());
  return v.get<long>();
}

MultiDegree degree(const Json& v, std::size_t n, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of " + std::to_string(n) + " integers");
  if (v.size() != n) {
    fail(where, "has " + std::to_string(v.size()) + " entries, the ring has n = " +
                    std::to_string(n));
  }
  std::vector<int> c;
  for (std::size_t i = 0; i < v.size(); ++i) {
    c.push_back(static_cast<int>(integer(v[i], where + "[" + std::to_string(i) + "]")));
  }
  return MultiDegree(std::move(c));
}

std::vector<MultiDegree> degree_list(const Json& v, std::size_t n, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  std::vector<MultiDegree> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(degree(v[i], n, where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

FieldSpec field_from_json(const Json& v, const std::string& where) {
  try {
    if (v.is_string()) return FieldSpec::parse(v.get<std::string>());
    if (v.is_object() && v.contains("Fp")) {
      return FieldSpec::prime(static_cast<std::uint64_t>(integer(v.at("Fp"), where + ".Fp")));
    }
  } catch (const Error& e) {
    fail(where, e.what());
  }
  fail(where, "expected \"Q\" or {\"Fp\": p}");
}

Json field_to_json(const FieldSpec& f) {
  if (!f.is_finite()) return "Q";
  return Json{{"Fp", f.characteristic()}};
}

Json degree_to_json(const MultiDegree& d) {
  Json a = Json::array();
  for (int c : d) a.push_back(c);
  return a;
}

ModulePresentation module_kind(const Json& m, std::size_t n, const FieldSpec& field,
                               const std::string& where) {
  const Json& kind_v = member(m, "kind", where);
  if (!kind_v.is_string()) fail(where + ".kind", "expected a string");
  const std::string kind = kind_v.get<std::string>();
  if (kind == "presentation") {
    ModulePresentation pres;
    pres.n = n;
    pres.field = field;
    pres.generators = degree_list(member(m, "generators", where), n, where + ".generators");
    if (m.contains("relations")) {
      const Json& rels = m.at("relations");
      if (!rels.is_array()) fail(where + ".relations", "expected an array");
      for (std::size_t r = 0; r < rels.size(); ++r) {
        const std::string rw = where + ".relations[" + std::to_string(r) + "]";
        if (!rels[r].is_array()) fail(rw, "expected an array of terms");
        Relation rel;
        for (std::size_t t = 0; t < rels[r].size(); ++t) {
          const std::string tw = rw + "[" + std::to_string(t) + "]";
          const Json& term = rels[r][t];
          const long gen = integer(member(term, "gen", tw), tw + ".gen");
          if (gen < 1 || static_cast<std::size_t>(gen) > pres.generators.size()) {
            fail(tw + ".gen", "generator " + std::to_string(gen) + " out of range 1.." +
                                  std::to_string(pres.generators.size()));
          }
          const MultiDegree shift = degree(member(term, "shift", tw), n, tw + ".shift");
          Scalar coeff = field.one();
          if (term.contains("coeff")) {
            const Json& c = term.at("coeff");
            try {
              if (c.is_string()) coeff = field.parse_scalar(c.get<std::string>());
              else coeff = field.from_int(integer(c, tw + ".coeff"));
            } catch (const Error& e) {
              if (e.kind() != ErrorKind::kParse) throw;
              fail(tw + ".coeff", e.what());
            }
          }
          rel.terms.push_back({static_cast<std::size_t>(gen - 1), shift, coeff});
        }
        pres.relations.push_back(std::move(rel));
      }
    }
    return pres;
  }
  if (kind == "monomial_ideal" || kind == "quotient_by_monomial_ideal") {
    const auto gens = degree_list(member(m, "generators", where), n, where + ".generators");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!gens[i].is_nonnegative()) {
        fail(where + ".generators[" + std::to_string(i) + "]", "negative exponent");
      }
    }
    return kind == "monomial_ideal" ? monomial_ideal(n, field, gens)
                                    : quotient_by_monomial_ideal(n, field, gens);
  }
  if (kind == "free") {
    return free_module(n, field, degree_list(member(m, "shifts", where), n, where + ".shifts"));
  }
  if (kind == "direct_sum") {
    const Json& parts = member(m, "summands", where);
    if (!parts.is_array()) fail(where + ".summands", "expected an array");
    std::vector<ModulePresentation> pieces;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::string pw = where + ".summands[" + std::to_string(i) + "]";
      long copies = 1;
      if (parts[i].is_object() && parts[i].contains("copies")) {
        copies = integer(parts[i].at("copies"), pw + ".copies");
        if (copies < 0) fail(pw + ".copies", "negative");
      }
      ModulePresentation p = module_kind(parts[i], n, field, pw);
      for (long c = 0; c < copies; ++c) pieces.push_back(p);
    }
    if (pieces.empty()) {
      ModulePresentation zero;
      zero.n = n;
      zero.field = field;
      return zero;
    }
    return direct_sum(pieces);
  }
  fail(where + ".kind", "unknown kind '" + kind + "'");
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, path + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into a line number.
    std::size_t line = 1;
    for (std::size_t i = 0; i < std::min(e.byte, text.size()); ++i) line += text[i] == '\n';
    throw Error(ErrorKind::kParse, path + ":" + std::to_string(line) + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kParse, path + ": cannot write");
  out << text;
}

ModuleFile parse_module(const Json& doc, const std::string& source,
                        const std::optional<FieldSpec>& field) {
  const Json& ring = member(doc, "ring", source);
  const long n = integer(member(ring, "n", source + ".ring"), source + ".ring.n");
  if (n < 0 || n > 32) fail(source + ".ring.n", "must be in 0..32");
  const FieldSpec f = field ? *field
                            : (ring.contains("field")
                                   ? field_from_json(ring.at("field"), source + ".ring.field")
                                   : FieldSpec::rationals());
  ModuleFile out;
  out.presentation =
      module_kind(member(doc, "module", source), static_cast<std::size_t>(n), f, source + ".module");
  out.presentation.n = static_cast<std::size_t>(n);
  out.presentation.field = f;
  if (doc.contains("g") && !doc.at("g").is_null()) {
    out.g = degree(doc.at("g"), static_cast<std::size_t>(n), source + ".g");
  }
  try {
    out.presentation.validate();
  } catch (const Error& e) {
    throw Error(e.kind(), source + ": " + e.what());
  }
  return out;
}

ModuleFile read_module_file(const std::string& path, const std::optional<FieldSpec>& field) {
  return parse_module(read_json_file(path), path, field);
}

Json module_to_json(const ModulePresentation& pres, const std::optional<MultiDegree>& g) {
  Json doc;
  doc["ring"] = Json{{"n", pres.n}, {"field", field_to_json(pres.field)}};
  if (g) doc["g"] = degree_to_json(*g);
  Json gens = Json::array();
  for (const MultiDegree& d : pres.generators) gens.push_back(degree_to_json(d));
  Json rels = Json::array();
  for (const Relation& r : pres.relations) {
    Json terms = Json::array();
    for (const RelationTerm& t : r.terms) {
      terms.push_back(Json{{"gen", t.gen + 1}, {"shift", degree_to_json(t.shift)},
                           {"coeff", t.coeff.to_string()}});
    }
    rels.push_back(std::move(terms));
  }
  doc["module"] = Json{{"kind", "presentation"}, {"generators", gens}, {"relations", rels}};
  return doc;
}

HilbertDecomposition parse_decomposition(const Json& doc, std::size_t n, const MultiDegree& g,
                                         const std::string& source) {
  auto mult_of = [&](const Json& e, const std::string& w) {
    if (!e.contains("mult")) return 1L;
    const long m = integer(e.at("mult"), w + ".mult");
    if (m < 0) fail(w + ".mult", "negative multiplicity");
    return m;
  };
  if (doc.is_object() && doc.contains("summands")) {
    const Json& list = doc.at("summands");
    if (!list.is_array()) fail(source + ".summands", "expected an array");
    HilbertDecomposition d;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string w = source + ".summands[" + std::to_string(i) + "]";
      const Json& vars = member(list[i], "vars", w);
      if (!vars.is_array()) fail(w + ".vars", "expected an array of 1-based indices");
      VarSet z;
      for (const Json& v : vars) {
        const long j = integer(v, w + ".vars");
        if (j < 1 || static_cast<std::size_t>(j) > n) {
          fail(w + ".vars", "variable " + std::to_string(j) + " outside 1.." + std::to_string(n));
        }
        z.insert(static_cast<std::size_t>(j - 1));
      }
      const MultiDegree shift = degree(member(list[i], "shift", w), n, w + ".shift");
      for (long c = mult_of(list[i], w); c > 0; --c) d.summands.push_back({z, shift});
    }
    return d;
  }
  if (doc.is_object() && doc.contains("intervals")) {
    const Json& list = doc.at("intervals");
    if (!list.is_array()) fail(source + ".intervals", "expected an array");
    HilbertPartition p;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string w = source + ".intervals[" + std::to_string(i) + "]";
      const MultiDegree a = degree(member(list[i], "a", w), n, w + ".a");
      const MultiDegree b = degree(member(list[i], "b", w), n, w + ".b");
      if (!a.precedes(b) || !b.precedes(g) || !a.is_nonnegative()) {
        fail(w, "needs 0 <= a <= b <= g = " + g.to_string());
      }
      for (long c = mult_of(list[i], w); c > 0; --c) p.intervals.push_back({a, b});
    }
    return induced_decomposition(p, g);
  }
  fail(source, "expected \"summands\" or \"intervals\"");
}

HilbertDecomposition read_decomposition_file(const std::string& path, std::size_t n,
                                             const MultiDegree& g) {
  return parse_decomposition(read_json_file(path), n, g, path);
}

Json decomposition_to_json(const HilbertDecomposition& c) {
  Json list = Json::array();
  for (std::size_t i = 0; i < c.summands.size();) {
    std::size_t j = i;
    while (j < c.summands.size() && c.summands[j] == c.summands[i]) ++j;
    Json vars = Json::array();
    for (std::size_t v : c.summands[i].vars.members()) vars.push_back(v + 1);
    list.push_back(Json{{"vars", vars}, {"shift", degree_to_json(c.summands[i].shift)},
                        {"mult", j - i}});
    i = j;
  }
  return Json{{"summands", list}};
}

Json certificate_to_json(const Certificate& cert) {
  Json doc;
  doc["format"] = "sdep-certificate";
  doc["version"] = 1;
  doc["basis_convention"] = kBasisConvention;
  const Json module = module_to_json(cert.presentation, cert.g);
  doc["ring"] = module["ring"];
  doc["g"] = module["g"];
  doc["module"] = module["module"];
  if (cert.sdepth) doc["sdepth"] = cert.sdepth->to_string();
  doc["decomposition"] = decomposition_to_json(cert.decomposition);
  Json w = Json::object();
  for (const auto& [v, s] : cert.witness) w[v.to_string()] = s.to_string();
  doc["witness"] = w;
  return doc;
}

Certificate parse_certificate(const Json& doc, const std::string& source) {
  if (!doc.is_object() || doc.value("format", std::string()) != "sdep-certificate") {
    fail(source, "not an sdep certificate");
  }
  const std::string convention = doc.value("basis_convention", std::string());
  if (convention != kBasisConvention) {
    fail(source, "basis convention '" + convention + "' is not " + kBasisConvention);
  }
  const ModuleFile mf = parse_module(doc, source);
  if (!mf.g) fail(source, "missing \"g\"");
  Certificate cert;
  cert.presentation = mf.presentation;
  cert.g = *mf.g;
  cert.decomposition = parse_decomposition(member(doc, "decomposition", source), mf.presentation.n,
                                           cert.g, source + ".decomposition");
  if (doc.contains("sdepth")) {
    const Json& sd = doc.at("sdepth");
    if (sd.is_string() && sd.get<std::string>() == "inf") {
      cert.sdepth = Depth::infinite();
    } else if (sd.is_string() && !sd.get<std::string>().empty() &&
               sd.get<std::string>().find_first_not_of("0123456789") == std::string::npos) {
      cert.sdepth = Depth::finite(std::stoul(sd.get<std::string>()));
    } else {
      fail(source + ".sdepth", "expected \"inf\" or a decimal string");
    }
  }
  const Json& w = member(doc, "witness", source);
  if (!w.is_object()) fail(source + ".witness", "expected an object");
  for (const auto& [key, value] : w.items()) {
    const std::string where = source + ".witness." + key;
    if (!value.is_string()) fail(where, "expected a scalar string");
    try {
      cert.witness[GenericVar::parse(key)] =
          mf.presentation.field.parse_scalar(value.get<std::string>());
    } catch (const Error& e) {
      fail(where, e.what());
    }
  }
  return cert;
}

Certificate read_certificate_file(const std::string& path) {
  return parse_certificate(read_json_file(path), path);
}

}  // namespace sdep::io
