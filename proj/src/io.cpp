#include "shiftkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace shiftkit {

using nlohmann::json;

ParseError::ParseError(const std::string& origin, std::size_t line, const std::string& field, const std::string& message)
    : std::invalid_argument(origin + ":" + std::to_string(line) + ": " + field + ": " + message),
      line_(line),
      field_(field) {}

bool AlgebraFile::operator==(const AlgebraFile& o) const {
  auto arrows_eq = [](const std::vector<Arrow>& a, const std::vector<Arrow>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].name != b[i].name || a[i].source != b[i].source || a[i].target != b[i].target) return false;
    return true;
  };
  return version == o.version && name == o.name && field == o.field && vertices == o.vertices &&
         arrows_eq(arrows, o.arrows) && relations == o.relations && nilpotency_cap == o.nilpotency_cap &&
         expected == o.expected;
}

Quiver AlgebraFile::quiver() const {
  return Quiver{vertices, arrows};
}

std::size_t AlgebraFile::line_of(const std::string& pointer) const {
  std::string p = pointer;
  for (;;) {
    auto it = lines.find(p);
    if (it != lines.end()) return it->second;
    if (p.empty()) return 1;
    p = p.substr(0, p.rfind('/'));
  }
}

namespace {

std::string escape_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

/// Minimal JSON scanner that only tracks where values start; syntax errors are left to the parser.
class LineIndexer {
 public:
  explicit LineIndexer(const std::string& text) : t_(text) {}

  std::map<std::string, std::size_t> run() {
    value("");
    return std::move(out_);
  }

 private:
  bool more() const { return i_ < t_.size(); }

  void ws() {
    while (more() && std::isspace(static_cast<unsigned char>(t_[i_]))) {
      if (t_[i_] == '\n') ++line_;
      ++i_;
    }
  }

  std::string str() {
    std::string s;
    ++i_;
    while (more() && t_[i_] != '"') {
      if (t_[i_] == '\\' && i_ + 1 < t_.size()) ++i_;
      if (t_[i_] == '\n') ++line_;
      s += t_[i_++];
    }
    ++i_;
    return s;
  }

  void value(const std::string& ptr) {
    ws();
    if (!more()) return;
    out_.emplace(ptr, line_);
    char c = t_[i_];
    if (c == '{') {
      ++i_;
      for (;;) {
        ws();
        if (!more() || t_[i_] == '}') break;
        if (t_[i_] != '"') return;
        std::string key = str();
        ws();
        if (!more() || t_[i_] != ':') return;
        ++i_;
        value(ptr + "/" + escape_token(key));
        ws();
        if (more() && t_[i_] == ',') {
          ++i_;
          continue;
        }
        break;
      }
      if (more()) ++i_;
    } else if (c == '[') {
      ++i_;
      for (std::size_t k = 0;; ++k) {
        ws();
        if (!more() || t_[i_] == ']') break;
        value(ptr + "/" + std::to_string(k));
        ws();
        if (more() && t_[i_] == ',') {
          ++i_;
          continue;
        }
        break;
      }
      if (more()) ++i_;
    } else if (c == '"') {
      str();
    } else {
      while (more() && !std::isspace(static_cast<unsigned char>(t_[i_])) && t_[i_] != ',' && t_[i_] != ']' &&
             t_[i_] != '}')
        ++i_;
    }
  }

  const std::string& t_;
  std::size_t i_ = 0, line_ = 1;
  std::map<std::string, std::size_t> out_;
};

const std::set<std::string> kTopKeys = {"version", "name", "field", "vertices", "arrows", "relations", "nilpotency_cap", "expected"};
const std::set<std::string> kExpectedKeys = {"dim", "loewy_length", "gldim", "injdim", "domdim", "n", "simples"};
const std::regex kCoeff(R"(-?[0-9]+(/[0-9]+)?)");
const std::regex kArrowName(R"([A-Za-z_][A-Za-z0-9_']*)");
const std::regex kGeq(R"(geq:[0-9]+)");
const std::regex kGammaKey(R"(gldim_gamma\.[0-9]+)");

class Validator {
 public:
  Validator(AlgebraFile& f) : f_(f) {}

  [[noreturn]] void fail(const std::string& ptr, const std::string& msg) const {
    throw ParseError(f_.origin, f_.line_of(ptr), ptr.empty() ? "/" : ptr, msg);
  }

  std::size_t count(const json& j, const std::string& ptr, std::size_t min) const {
    if (!j.is_number_integer()) fail(ptr, "expected a non-negative integer");
    auto v = j.get<long long>();
    if (v < static_cast<long long>(min)) fail(ptr, "must be at least " + std::to_string(min));
    return static_cast<std::size_t>(v);
  }

  std::string text(const json& j, const std::string& ptr) const {
    if (!j.is_string()) fail(ptr, "expected a string");
    return j.get<std::string>();
  }

  void only_keys(const json& j, const std::string& ptr, const std::set<std::string>& keys) const {
    if (!j.is_object()) fail(ptr, "expected an object");
    for (const auto& [k, v] : j.items())
      if (!keys.count(k)) fail(ptr + "/" + escape_token(k), "unknown key '" + k + "'");
  }

  void run(const json& doc) {
    only_keys(doc, "", kTopKeys);
    if (!doc.contains("version")) fail("", "missing key 'version'");
    if (count(doc["version"], "/version", 1) != 1) fail("/version", "unsupported version");
    f_.version = 1;
    if (doc.contains("name")) f_.name = text(doc["name"], "/name");
    if (doc.contains("field")) {
      try {
        f_.field = FieldSpec::parse(text(doc["field"], "/field"));
      } catch (const std::invalid_argument& e) {
        if (dynamic_cast<const ParseError*>(&e)) throw;
        fail("/field", e.what());
      }
    }
    if (!doc.contains("vertices")) fail("", "missing key 'vertices'");
    f_.vertices = count(doc["vertices"], "/vertices", 1);
    if (doc.contains("arrows")) arrows(doc["arrows"]);
    if (doc.contains("relations")) relations(doc["relations"]);
    if (doc.contains("nilpotency_cap")) f_.nilpotency_cap = count(doc["nilpotency_cap"], "/nilpotency_cap", 1);
    if (doc.contains("expected")) expected(doc["expected"]);
  }

 private:
  void arrows(const json& a) {
    if (!a.is_array()) fail("/arrows", "expected an array");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::string p = "/arrows/" + std::to_string(i);
      only_keys(a[i], p, {"name", "source", "target"});
      for (const char* k : {"name", "source", "target"})
        if (!a[i].contains(k)) fail(p, std::string("missing key '") + k + "'");
      Arrow arrow;
      arrow.name = text(a[i]["name"], p + "/name");
      if (!std::regex_match(arrow.name, kArrowName)) fail(p + "/name", "malformed arrow name '" + arrow.name + "'");
      if (arrow.name.size() >= 2 && arrow.name[0] == 'e' &&
          std::all_of(arrow.name.begin() + 1, arrow.name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        fail(p + "/name", "arrow name '" + arrow.name + "' clashes with a trivial path label");
      if (!seen.insert(arrow.name).second) fail(p + "/name", "duplicate arrow name '" + arrow.name + "'");
      std::size_t s = count(a[i]["source"], p + "/source", 1);
      std::size_t t = count(a[i]["target"], p + "/target", 1);
      if (s > f_.vertices) fail(p + "/source", "unknown vertex " + std::to_string(s));
      if (t > f_.vertices) fail(p + "/target", "unknown vertex " + std::to_string(t));
      arrow.source = s - 1;
      arrow.target = t - 1;
      f_.arrows.push_back(arrow);
    }
  }

  void relations(const json& r) {
    if (!r.is_array()) fail("/relations", "expected an array");
    const Quiver q = f_.quiver();
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::string p = "/relations/" + std::to_string(i);
      if (!r[i].is_array() || r[i].empty()) fail(p, "expected a non-empty array of terms");
      std::vector<RelationTermText> combo;
      std::optional<std::pair<std::size_t, std::size_t>> ends;
      for (std::size_t j = 0; j < r[i].size(); ++j) {
        std::string tp = p + "/" + std::to_string(j);
        only_keys(r[i][j], tp, {"coeff", "path"});
        if (!r[i][j].contains("coeff")) fail(tp, "missing key 'coeff'");
        if (!r[i][j].contains("path")) fail(tp, "missing key 'path'");
        RelationTermText term;
        const json& c = r[i][j]["coeff"];
        if (c.is_number_integer())
          term.coeff = std::to_string(c.get<long long>());
        else
          term.coeff = text(c, tp + "/coeff");
        if (!std::regex_match(term.coeff, kCoeff)) fail(tp + "/coeff", "malformed coefficient '" + term.coeff + "'");
        if (auto slash = term.coeff.find('/'); slash != std::string::npos &&
            term.coeff.find_first_not_of('0', slash + 1) == std::string::npos)
          fail(tp + "/coeff", "zero denominator");
        const json& path = r[i][j]["path"];
        if (!path.is_array()) fail(tp + "/path", "expected an array of arrow names");
        if (path.size() < 2) fail(tp + "/path", "inconsistent relation: paths must have length at least 2");
        std::size_t prev_target = 0;
        for (std::size_t k = 0; k < path.size(); ++k) {
          std::string ap = tp + "/path/" + std::to_string(k);
          std::string nm = text(path[k], ap);
          std::size_t idx = q.find(nm);
          if (idx == static_cast<std::size_t>(-1)) fail(ap, "unknown arrow '" + nm + "'");
          if (k > 0 && q.arrows[idx].source != prev_target) fail(ap, "inconsistent relation: path is not composable at '" + nm + "'");
          prev_target = q.arrows[idx].target;
          term.path.push_back(nm);
        }
        std::pair<std::size_t, std::size_t> e{q.arrows[q.find(term.path.front())].source, prev_target};
        if (ends && *ends != e) fail(tp + "/path", "inconsistent relation: terms have different endpoints");
        ends = e;
        combo.push_back(std::move(term));
      }
      f_.relations.push_back(std::move(combo));
    }
  }

  void expected(const json& e) {
    if (!e.is_object()) fail("/expected", "expected an object");
    for (const auto& [k, v] : e.items()) {
      std::string p = "/expected/" + escape_token(k);
      if (!kExpectedKeys.count(k) && !std::regex_match(k, kGammaKey)) fail(p, "unknown key '" + k + "'");
      if (v.is_number_integer()) {
        f_.expected[k] = std::to_string(count(v, p, 0));
      } else if (v.is_string() && std::regex_match(v.get<std::string>(), kGeq)) {
        f_.expected[k] = v.get<std::string>();
      } else {
        fail(p, "expected an integer or \"geq:N\"");
      }
    }
  }

  AlgebraFile& f_;
};

}  // namespace

std::map<std::string, std::size_t> index_lines(const std::string& text) {
  return LineIndexer(text).run();
}

AlgebraFile parse_algebra_text(const std::string& text, const std::string& origin) {
  AlgebraFile f;
  f.origin = origin;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + upto, '\n'));
    throw ParseError(origin, line, "<json>", e.what());
  }
  f.lines = index_lines(text);
  Validator(f).run(doc);
  return f;
}

AlgebraFile parse_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "<file>", "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra_text(ss.str(), path);
}

std::string emit_algebra_file(const AlgebraFile& f) {
  json doc;
  doc["version"] = f.version;
  doc["name"] = f.name;
  if (f.field) doc["field"] = f.field->to_string();
  doc["vertices"] = f.vertices;
  doc["arrows"] = json::array();
  for (const auto& a : f.arrows) doc["arrows"].push_back({{"name", a.name}, {"source", a.source + 1}, {"target", a.target + 1}});
  doc["relations"] = json::array();
  for (const auto& combo : f.relations) {
    json c = json::array();
    for (const auto& t : combo) c.push_back({{"coeff", t.coeff}, {"path", t.path}});
    doc["relations"].push_back(c);
  }
  doc["nilpotency_cap"] = f.nilpotency_cap;
  if (!f.expected.empty()) {
    json e = json::object();
    for (const auto& [k, v] : f.expected) {
      if (v.rfind("geq:", 0) == 0)
        e[k] = v;
      else
        e[k] = std::stoull(v);
    }
    doc["expected"] = e;
  }
  return doc.dump(2) + "\n";
}

FieldSpec resolve_field(const std::optional<std::string>& flag, const AlgebraFile* file) {
  if (flag) return FieldSpec::parse(*flag);
  if (file && file->field) return *file->field;
  if (const char* env = std::getenv("SHIFTKIT_FIELD"); env && *env) return FieldSpec::parse(env);
  return FieldSpec{FieldKind::prime, 101};
}

template <class F>
std::vector<RelationCombo<F>> relations_over(const AlgebraFile& f, const F& field) {
  std::vector<RelationCombo<F>> out;
  for (std::size_t i = 0; i < f.relations.size(); ++i) {
    RelationCombo<F> combo;
    for (std::size_t j = 0; j < f.relations[i].size(); ++j) {
      const auto& t = f.relations[i][j];
      std::string ptr = "/relations/" + std::to_string(i) + "/" + std::to_string(j) + "/coeff";
      try {
        combo.push_back({field.from_string(t.coeff), t.path});
      } catch (const std::exception& e) {
        throw ParseError(f.origin, f.line_of(ptr), ptr, e.what());
      }
    }
    out.push_back(std::move(combo));
  }
  return out;
}

template std::vector<RelationCombo<PrimeField>> relations_over(const AlgebraFile&, const PrimeField&);
template std::vector<RelationCombo<Rationals>> relations_over(const AlgebraFile&, const Rationals&);

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace shiftkit
