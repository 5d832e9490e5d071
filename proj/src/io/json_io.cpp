#include "qfloer/io/json_io.hpp"

#include "qfloer/errors.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace qfloer::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw SchemaError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

void check_schema(const Json& j) {
  if (!j.is_object()) bad("top-level value must be an object");
  const Json& s = field(j, "schema");
  if (!s.is_number_integer() || s.get<long long>() != kSchemaVersion) {
    bad("unsupported schema version " + s.dump());
  }
}

long long as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  return j.get<long long>();
}

std::size_t as_index(const Json& j, const std::string& what) {
  long long v = as_int(j, what);
  if (v < 0) bad(what + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

const std::string& as_string(const Json& j, const std::string& what) {
  if (!j.is_string()) bad(what + " must be a string");
  return j.get_ref<const std::string&>();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    Rational r = Rational::parse(j.get<std::string>());
    if (!r.is_integer()) bad("expected an integer, got " + j.dump());
    return r.num();
  }
  bad("expected an integer, got " + j.dump());
}

Json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return Json(static_cast<long long>(v));
  }
  return Json(v.str());
}

Json space_to_json(const GradedSpace& s) {
  Json out = Json::array();
  for (const auto& b : s.basis()) out.push_back({{"label", b.label}, {"degree", b.degree}});
  return out;
}

GradedSpace space_from_json(const Json& j, const std::string& prefix) {
  if (j.is_array()) {
    std::vector<BasisElement> basis;
    std::set<std::string> seen;
    for (const auto& b : j) {
      BasisElement e{as_string(field(b, "label"), "basis label"), as_int(field(b, "degree"), "basis degree")};
      if (!seen.insert(e.label).second) bad("duplicate basis label '" + e.label + "'");
      basis.push_back(std::move(e));
    }
    return GradedSpace(std::move(basis));
  }
  if (j.is_object()) {
    std::map<long long, std::size_t> dims;
    for (const auto& [key, value] : j.items()) {
      long long deg = 0;
      try {
        std::size_t pos = 0;
        deg = std::stoll(key, &pos);
        if (pos != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        bad("graded space key '" + key + "' is not a degree");
      }
      dims[deg] = as_index(value, "dimension");
    }
    return GradedSpace::from_dims(dims, prefix);
  }
  bad("graded space must be a {degree: dim} map or a list of basis elements");
}

std::size_t basis_id(const GradedSpace& s, const Json& j) {
  if (j.is_string()) return s.index(j.get<std::string>());
  std::size_t id = as_index(j, "basis id");
  if (id >= s.dim()) bad("basis id " + std::to_string(id) + " out of range");
  return id;
}

Json vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

// Dense list of coordinates or a sparse {label: coefficient} map.
RationalVector vector_from_json(const GradedSpace& s, const Json& j, const std::string& what) {
  RationalVector v = s.zero();
  if (j.is_array()) {
    if (j.size() != s.dim()) bad(what + " has " + std::to_string(j.size()) + " coordinates, expected " + std::to_string(s.dim()));
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = rational_from_json(j[i]);
  } else if (j.is_object()) {
    for (const auto& [label, value] : j.items()) v[s.index(label)] = rational_from_json(value);
  } else {
    bad(what + " must be a coordinate list");
  }
  return v;
}

RationalVector cochain(const GradedSpace& s, const Json& j, const char* key, long long degree) {
  if (!j.contains(key)) return s.zero();
  RationalVector v = vector_from_json(s, j.at(key), key);
  auto d = s.degree_of(v);
  if (d && *d != degree) bad(std::string(key) + " must have degree " + std::to_string(degree));
  return v;
}

Objects objects_from_json(const Json& j) {
  Objects objs;
  if (!j.is_array()) bad("objects must be a list of labels");
  for (const auto& o : j) objs.push_back(as_string(o, "object label"));
  return objs;
}

Json status_json(Status s) { return Json(to_string(s)); }

}  // namespace

Json to_json(const Rational& r) { return Json(r.fraction_str()); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_array() && j.size() == 2) {
    BigInt den = bigint_from_json(j[1]);
    if (den.is_zero()) bad("zero denominator");
    return Rational(bigint_from_json(j[0]), den);
  }
  bad("expected a rational, got " + j.dump());
}

Json to_json(const QLaurent& p) {
  Json out = Json::array();
  for (const auto& [exp, coeff] : p.terms()) out.push_back({to_json(coeff), to_json(exp)});
  return out;
}

QLaurent qlaurent_from_json(const Json& j) {
  if (!j.is_array()) {
    // A bare rational is a constant.
    return QLaurent(rational_from_json(j));
  }
  QLaurent p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) bad("q-monomial must be [coefficient, exponent]");
    p += QLaurent::monomial(rational_from_json(t[0]), rational_from_json(t[1]));
  }
  return p;
}

Json to_json(const QLattice& lat) {
  Json pairing = Json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < lat.size(); ++j) row.push_back(to_json(lat.pairing()(i, j)));
    pairing.push_back(std::move(row));
  }
  Json spheres = Json::array();
  for (bool s : lat.spheres()) spheres.push_back(s);
  return {{"schema", kSchemaVersion}, {"n", lat.n()}, {"labels", lat.labels()}, {"spheres", spheres}, {"pairing", pairing}};
}

QLattice lattice_from_json(const Json& j) {
  check_schema(j);
  if (j.contains("builder")) {
    const Json& b = j.at("builder");
    const std::string& kind = as_string(field(b, "kind"), "builder kind");
    if (kind == "Am") return build_Am(as_index(field(b, "m"), "m"), as_int(field(b, "n"), "n"));
    if (kind == "affine_A1") return build_affine_A1(b.contains("n") ? as_int(b.at("n"), "n") : 3);
    bad("unknown lattice builder '" + kind + "'");
  }
  long long n = as_int(field(j, "n"), "n");
  const Json& labels = field(j, "labels");
  if (!labels.is_array()) bad("labels must be a list");
  std::vector<std::string> names;
  for (const auto& l : labels) names.push_back(as_string(l, "label"));
  const std::size_t size = names.size();
  std::vector<bool> spheres(size, true);
  if (j.contains("spheres")) {
    const Json& s = j.at("spheres");
    if (!s.is_array() || s.size() != size) bad("spheres must list one flag per label");
    for (std::size_t i = 0; i < size; ++i) {
      if (!s[i].is_boolean()) bad("sphere flags must be booleans");
      spheres[i] = s[i].get<bool>();
    }
  }
  const Json& rows = field(j, "pairing");
  if (!rows.is_array() || rows.size() != size) bad("pairing must be a square matrix matching labels");
  QMatrix pairing(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    if (!rows[r].is_array() || rows[r].size() != size) bad("pairing must be a square matrix matching labels");
    for (std::size_t c = 0; c < size; ++c) pairing(r, c) = qlaurent_from_json(rows[r][c]);
  }
  return QLattice(n, std::move(names), std::move(pairing), std::move(spheres));
}

Json to_json(const TwistWord& w) {
  Json letters = Json::array();
  for (const auto& l : w) letters.push_back({l.sphere, l.exponent});
  return {{"schema", kSchemaVersion}, {"word", letters}};
}

TwistWord word_from_json(const Json& j) {
  check_schema(j);
  const Json& letters = field(j, "word");
  if (!letters.is_array()) bad("word must be a list of letters");
  TwistWord w;
  for (const auto& l : letters) {
    TwistLetter letter;
    long long exponent = 0;
    if (l.is_array() && l.size() == 2) {
      letter.sphere = as_index(l[0], "sphere index");
      exponent = as_int(l[1], "exponent");
    } else if (l.is_object()) {
      letter.sphere = as_index(field(l, "sphere"), "sphere index");
      exponent = as_int(field(l, "exponent"), "exponent");
    } else {
      bad("letter must be [sphere, exponent]");
    }
    if (exponent != 1 && exponent != -1) bad("twist exponent must be +1 or -1");
    letter.exponent = static_cast<int>(exponent);
    w.push_back(letter);
  }
  return w;
}

Json to_json(const EquivariantTable& t) {
  Json entries = Json::array();
  for (const auto& [key, dim] : t.entries()) {
    entries.push_back({{"degree", key.first}, {"weight", to_json(key.second)}, {"dim", dim}});
  }
  return {{"schema", kSchemaVersion}, {"n", t.n()}, {"entries", entries}, {"q_intersection", to_json(q_intersection(t))}};
}

EquivariantTable table_from_json(const Json& j) {
  check_schema(j);
  EquivariantTable t(as_int(field(j, "n"), "n"));
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) bad("entries must be a list");
  for (const auto& e : entries) {
    t.add(as_int(field(e, "degree"), "degree"), rational_from_json(field(e, "weight")), as_index(field(e, "dim"), "dim"));
  }
  return t;
}

Json to_json(const ChainModel& m) {
  Json spaces = Json::array();
  for (const auto& [objs, space] : m.spaces) {
    spaces.push_back({{"objects", {objs.first, objs.second}}, {"space", space_to_json(space)}});
  }
  Json ops = Json::array();
  for (const auto& [key, op] : m.ops) {
    Json entries = Json::array();
    for (const auto& [tuple, value] : op.entries()) {
      Json out = Json::array();
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (value[i].is_zero()) continue;
        out.push_back({i, bigint_to_json(value[i].num()), bigint_to_json(value[i].den())});
      }
      if (out.empty()) continue;
      entries.push_back({{"inputs", tuple}, {"output", out}});
    }
    ops.push_back({{"kind", to_string(key.first)}, {"objects", key.second}, {"entries", entries}});
  }
  Json units = Json::object();
  for (const auto& [l, v] : m.unit) units[l] = vector_to_json(v);
  Json cs = Json::object();
  for (const auto& [l, v] : m.c) cs[l] = vector_to_json(v);
  return {{"schema", kSchemaVersion},
          {"n", m.n},
          {"closed", space_to_json(m.closed)},
          {"lagrangians", m.lagrangians},
          {"spaces", spaces},
          {"ops", ops},
          {"e", vector_to_json(m.e)},
          {"b", vector_to_json(m.b)},
          {"beta", vector_to_json(m.beta)},
          {"unit", units},
          {"c", cs}};
}

ChainModel model_from_json(const Json& j) {
  check_schema(j);
  ChainModel m;
  m.n = as_int(field(j, "n"), "n");
  m.closed = space_from_json(field(j, "closed"), "z");
  m.lagrangians = objects_from_json(field(j, "lagrangians"));
  std::set<std::string> known(m.lagrangians.begin(), m.lagrangians.end());
  if (known.size() != m.lagrangians.size()) bad("duplicate lagrangian label");

  if (j.contains("spaces")) {
    const Json& spaces = j.at("spaces");
    if (!spaces.is_array()) bad("spaces must be a list");
    for (const auto& s : spaces) {
      Objects objs = objects_from_json(field(s, "objects"));
      if (objs.size() != 2 || !known.count(objs[0]) || !known.count(objs[1])) bad("space objects must be two known lagrangians");
      if (m.has_space(objs[0], objs[1])) bad("space CF(" + objs[0] + "," + objs[1] + ") given twice");
      m.spaces[{objs[0], objs[1]}] = space_from_json(field(s, "space"), "x");
    }
  }

  if (j.contains("ops")) {
    const Json& ops = j.at("ops");
    if (!ops.is_array()) bad("ops must be a list");
    for (const auto& o : ops) {
      OpKind kind = op_kind_from_string(as_string(field(o, "kind"), "op kind"));
      Objects objs = o.contains("objects") ? objects_from_json(o.at("objects")) : Objects{};
      if (objs.size() != object_count(kind)) bad(to_string(kind) + " takes " + std::to_string(object_count(kind)) + " objects");
      for (const auto& l : objs) {
        if (!known.count(l)) bad("unknown lagrangian '" + l + "'");
      }
      if (m.has(kind, objs)) bad(to_string(kind) + " given twice for the same objects");
      MultiOp* slot = nullptr;
      try {
        slot = &m.define(kind, objs);
      } catch (const MissingTensor& err) {
        bad(to_string(kind) + ": " + err.what());
      }
      MultiOp& op = *slot;
      const Json& entries = o.contains("entries") ? o.at("entries") : Json::array();
      if (!entries.is_array()) bad("entries must be a list");
      for (const auto& e : entries) {
        const Json& inputs = field(e, "inputs");
        if (!inputs.is_array() || inputs.size() != op.arity()) {
          bad(to_string(kind) + " entry needs " + std::to_string(op.arity()) + " inputs");
        }
        MultiOp::Tuple tuple;
        for (std::size_t s = 0; s < inputs.size(); ++s) tuple.push_back(basis_id(op.inputs()[s], inputs[s]));
        RationalVector value = op.on_basis(tuple);
        const Json& output = field(e, "output");
        if (!output.is_array()) bad("output must be a list of [id, num, den]");
        for (const auto& c : output) {
          if (!c.is_array() || (c.size() != 2 && c.size() != 3)) bad("output coordinate must be [id, num, den]");
          std::size_t id = basis_id(op.output(), c[0]);
          Rational coeff = c.size() == 3 ? rational_from_json(Json::array({c[1], c[2]})) : rational_from_json(c[1]);
          value[id] += coeff;
        }
        try {
          op.set(tuple, value);
        } catch (const DegreeError& err) {
          bad(std::string("degree violation: ") + err.what());
        }
      }
    }
  }

  m.e = cochain(m.closed, j, "e", 0);
  m.b = cochain(m.closed, j, "b", 1);
  m.beta = cochain(m.closed, j, "beta", -1);
  auto per_object = [&](const char* key, std::map<std::string, RationalVector>& out) {
    if (!j.contains(key)) return;
    const Json& map = j.at(key);
    if (!map.is_object()) bad(std::string(key) + " must map lagrangian labels to cochains");
    for (const auto& [l, v] : map.items()) {
      if (!known.count(l)) bad("unknown lagrangian '" + l + "'");
      if (!m.has_space(l, l)) bad("CF(" + l + "," + l + ") is needed for " + key);
      const GradedSpace& s = m.cf(l, l);
      RationalVector vec = vector_from_json(s, v, key);
      auto d = s.degree_of(vec);
      if (d && *d != 0) bad(std::string(key) + " must have degree 0");
      out[l] = std::move(vec);
    }
  };
  per_object("unit", m.unit);
  per_object("c", m.c);
  return m;
}

Json to_json(const Report& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json value = Json::array();
    for (const auto& [label, coeff] : w.value) value.push_back({label, to_json(coeff)});
    witnesses.push_back({{"kind", w.kind}, {"inputs", w.inputs}, {"value", value}});
  }
  Json out{{"identity", r.identity}, {"objects", r.objects}, {"status", status_json(r.status)}, {"failures", r.failures}, {"witnesses", witnesses}};
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

Json reports_to_json(const std::vector<Report>& reports) {
  std::size_t counts[3] = {0, 0, 0};
  Json list = Json::array();
  for (const auto& r : reports) {
    ++counts[static_cast<int>(r.status)];
    list.push_back(to_json(r));
  }
  Json failed = Json::array();
  for (const auto& r : reports) {
    if (r.status == Status::fail) failed.push_back(r.identity);
  }
  return {{"schema", kSchemaVersion},
          {"status", counts[1] == 0 ? "pass" : "fail"},
          {"summary", {{"pass", counts[0]}, {"fail", counts[1]}, {"skipped", counts[2]}}},
          {"failed", failed},
          {"reports", list}};
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) bad("cannot write '" + path + "'");
  out << dump(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qfloer::io
