#include "shiftkit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#ifndef SHIFTKIT_CORPUS_DIR
#define SHIFTKIT_CORPUS_DIR "corpus"
#endif

namespace shiftkit {

using nlohmann::json;

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::fail: return 1;
    case Verdict::inconclusive: return 3;
    default: return 0;
  }
}

json to_json(const Capped& c) {
  if (c.at_least) return c.json_token();
  return c.value;
}

std::string default_corpus_dir() {
  if (const char* env = std::getenv("SHIFTKIT_CORPUS"); env && *env) return env;
  return SHIFTKIT_CORPUS_DIR;
}

namespace {

json capped_list(const std::vector<Capped>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

json one_based(const std::vector<std::size_t>& vs) {
  json out = json::array();
  for (auto v : vs) out.push_back(v + 1);
  return out;
}

json inputs_json(const AlgebraFile& f, const FieldSpec& fs, const Options& o, json extra = json::object()) {
  json in = std::move(extra);
  in["name"] = f.name;
  in["field"] = fs.to_string();
  in["cap"] = o.cap;
  in["seed"] = o.seed;
  in["digest"] = fnv1a_hex(emit_algebra_file(f) + in.dump());
  return in;
}

std::string token(const Capped& c) {
  return c.at_least ? c.json_token() : std::to_string(c.value);
}

/// Expected token against a computed one. A computed "geq:M" below the expected value cannot
/// confirm it and is inconclusive rather than a mismatch.
Verdict expected_verdict(const std::string& want, const std::string& got) {
  if (want == got) return Verdict::pass;
  auto parse = [](const std::string& t) {
    bool geq = t.rfind("geq:", 0) == 0;
    return std::pair<bool, std::size_t>{geq, std::stoul(geq ? t.substr(4) : t)};
  };
  auto [wg, wv] = parse(want);
  auto [gg, gv] = parse(got);
  if (!gg) return Verdict::fail;
  if (wg) return gv >= wv ? Verdict::pass : Verdict::inconclusive;
  return gv <= wv ? Verdict::inconclusive : Verdict::fail;
}

template <class F>
struct Ctx {
  const AlgebraFile& file;
  AlgebraPtr<F> a;
  const Options& opt;
};

/// Builds the algebra over the resolved field and runs fn(Ctx<F>).
template <class Fn>
auto with_algebra(const AlgebraFile& f, const Options& o, Fn&& fn) {
  FieldSpec fs = resolve_field(o.field, &f);
  return with_field(fs, [&](auto field) {
    using F = decltype(field);
    Ctx<F> c{f, build_algebra(f, field), o};
    return fn(c, fs);
  });
}

template <class F>
json analyze_section(const Ctx<F>& c, Verdict& verdict) {
  const auto& a = c.a;
  auto p = profile(a, c.opt.cap);
  json inv;
  inv["dim"] = a->dim();
  inv["simples"] = a->num_vertices();
  inv["loewy_length"] = a->radical().loewy_length;
  inv["cartan"] = cartan_matrix(*a);
  inv["basic"] = a->is_basic();
  inv["gldim"] = to_json(p.gldim);
  inv["injdim"] = to_json(p.injdim);
  inv["domdim"] = to_json(p.domdim);
  inv["n"] = to_json(p.n);
  inv["simple_pd"] = capped_list(p.simple_pd);
  inv["qf3"] = p.qf3();
  inv["proj_inj"] = one_based(proj_inj_generator(a, c.opt.seed).vertices);

  json checks;
  Verdict agree = Verdict::not_applicable;
  if (p.gldim.finite()) agree = p.gldim == p.injdim && p.gldim == p.n ? Verdict::pass : Verdict::fail;
  checks["gldim_injdim_n_agree"] = to_string(agree);
  Verdict dom = Verdict::not_applicable;
  if (p.injdim.finite() && p.injdim.value > 0)
    dom = p.domdim.finite() && p.domdim.value <= p.injdim.value ? Verdict::pass : Verdict::fail;
  checks["domdim_le_injdim"] = to_string(dom);
  auto env = injective_envelope(regular_module(a));
  Verdict qf3 = p.qf3() == is_projective(env.injective.module) ? Verdict::pass : Verdict::fail;
  checks["qf3_envelope_projective"] = to_string(qf3);

  std::map<std::string, std::string> actual = {
      {"dim", std::to_string(a->dim())},      {"loewy_length", std::to_string(a->radical().loewy_length)},
      {"gldim", token(p.gldim)},              {"injdim", token(p.injdim)},
      {"domdim", token(p.domdim)},            {"n", token(p.n)},
      {"simples", std::to_string(a->num_vertices())}};
  Verdict exp = Verdict::not_applicable;
  json mismatches = json::array();
  for (const auto& [k, v] : c.file.expected) {
    auto it = actual.find(k);
    if (it == actual.end()) continue;
    Verdict one = expected_verdict(v, it->second);
    exp = combine(exp, one);
    if (one == Verdict::fail) mismatches.push_back(k + ": expected " + v + ", got " + it->second);
  }
  checks["expected"] = to_string(exp);
  if (!mismatches.empty()) checks["expected_mismatch"] = mismatches;
  for (Verdict v : {agree, dom, qf3, exp}) verdict = combine(verdict, v);
  return {{"invariants", inv}, {"checks", checks}};
}

template <class F>
json shift_section(const Ctx<F>& c, std::size_t k, Verdict& verdict) {
  const auto& a = c.a;
  const auto cap = c.opt.cap;
  const auto seed = c.opt.seed;
  auto sd = shifted_module(a, k, seed);
  json out;
  json summands = json::array();
  for (std::size_t i = 0; i < sd.summands.size(); ++i)
    summands.push_back({{"dimension_vector", sd.summands[i]->dimension_vector()}, {"in_pi", bool(sd.summand_in_pi[i])}});
  out["level"] = k;
  out["cosyzygy_dimension_vector"] = sd.cosyzygy->dimension_vector();
  out["summands"] = summands;

  json tilt;
  try {
    auto cert = verify_tilting(sd, cap);
    tilt["pd"] = to_json(cert.pd);
    tilt["self_ext"] = cert.self_ext;
    tilt["witness_exact"] = cert.witness_exact;
    tilt["witness_in_add_t"] = cert.witness_in_add_t;
    tilt["hom_left_exact"] = cert.hom_left_exact;
    tilt["summands"] = cert.summands;
    tilt["verdict"] = to_string(Verdict::pass);
  } catch (const VerificationError& e) {
    tilt["verdict"] = to_string(Verdict::fail);
    tilt["error"] = e.what();
    verdict = combine(verdict, Verdict::fail);
  }
  out["tilting"] = tilt;

  auto g = endomorphism_algebra(sd);
  auto gr = shift_gldim_report(a, k, cap, seed);
  out["gamma"] = {{"dim", g.gamma->dim()},
                  {"simples", g.gamma->num_vertices()},
                  {"cartan", cartan_matrix(*g.gamma)},
                  {"loewy_length", g.gamma->radical().loewy_length},
                  {"gldim", to_json(gr.gldim_gamma)}};
  out["gldim_report"] = {{"gldim_lambda", to_json(gr.gldim_lambda)},
                         {"gldim_gamma", to_json(gr.gldim_gamma)},
                         {"verdict", to_string(gr.verdict)}};
  verdict = combine(verdict, gr.verdict);
  if (k >= 1) {
    auto ir = shifted_injdim_check(a, k, cap, seed);
    out["injdim_check"] = {{"n", to_json(ir.n)}, {"injdim_t", to_json(ir.injdim_t)}, {"verdict", to_string(ir.verdict)}};
    if (!ir.note.empty()) out["injdim_check"]["note"] = ir.note;
    verdict = combine(verdict, ir.verdict);
  }
  auto it = c.file.expected.find("gldim_gamma." + std::to_string(k));
  if (it != c.file.expected.end()) {
    Verdict ev = it->second == token(gr.gldim_gamma) ? Verdict::pass : Verdict::fail;
    out["expected_gldim_gamma"] = {{"expected", it->second}, {"verdict", to_string(ev)}};
    verdict = combine(verdict, ev);
  }
  return out;
}

template <class F>
json mechanism_section(const Ctx<F>& c, std::size_t k, std::optional<std::size_t> simple, Verdict& verdict) {
  auto rep = mechanism_check(c.a, k, simple, c.opt.cap, c.opt.seed);
  json rows = json::array();
  for (const auto& r : rep.rows) {
    json row = {{"simple", r.simple + 1}, {"pd_simple", to_json(r.pd_simple)}, {"verdict", to_string(r.verdict)}};
    if (r.pd_simple.finite()) {
      row["lowest_degree"] = r.lo;
      row["cohomology"] = r.cohomology;
      row["cohomology_minimized"] = r.cohomology_min;
      row["width"] = r.width;
      row["width_minimized"] = r.width_min;
      row["tor_vanishes"] = r.tor_vanishes;
      row["width_bounded"] = r.width_bounded;
    }
    rows.push_back(row);
  }
  verdict = combine(verdict, rep.verdict);
  return {{"level", k}, {"n", to_json(rep.n)}, {"bound", rep.n.finite() ? json(rep.n.value + 1) : json(nullptr)},
          {"rows", rows}, {"verdict", to_string(rep.verdict)}};
}

template <class F>
json order_section(const Ctx<F>& c, std::size_t d, std::size_t k, Verdict& verdict) {
  TensorOrderSpec<F> spec{c.a, d};
  auto op = order_profile(spec, c.opt.cap);
  json prof = {{"krull", d},
               {"base_ring", spec.base_ring()},
               {"cm_domdim", to_json(op.cm_domdim)},
               {"n", to_json(op.n)},
               {"gldim_lambda", to_json(op.gldim_lambda)},
               {"predicted_bound", to_json(op.predicted_bound)},
               {"qf3", op.qf3},
               {"applicable", op.applicable ? json(*op.applicable ? "yes" : "no") : json("inconclusive")}};
  auto tr = theorem_report(spec, k, c.opt.cap, c.opt.seed);
  verdict = combine(verdict, tr.verdict);
  json th = {{"level", k},
             {"gldim_gamma_base", to_json(tr.gldim_gamma_base)},
             {"lhs", to_json(tr.lhs)},
             {"rhs", to_json(tr.rhs)},
             {"verdict", to_string(tr.verdict)}};
  return {{"profile", prof}, {"theorem", th}, {"assumption", kTransferAssumption}};
}

std::vector<std::filesystem::path> corpus_files(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  if (!std::filesystem::is_directory(dir)) throw std::invalid_argument("not a directory: " + dir);
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".alg") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  return files;
}

std::string label_of(const AlgebraFile& f, const std::filesystem::path& p) {
  return f.name.empty() ? p.stem().string() : f.name;
}

template <class F>
void corpus_entry(const Ctx<F>& c, const std::string& name, json& profiles, json& shifts, json& orders, json& ends,
                  Verdict& verdict) {
  const auto cap = c.opt.cap;
  Verdict av = Verdict::not_applicable;
  json an = analyze_section(c, av);
  verdict = combine(verdict, av);
  const auto& inv = an["invariants"];
  profiles.push_back({{"algebra", name},
                      {"dim", inv["dim"]},
                      {"gldim", inv["gldim"]},
                      {"injdim", inv["injdim"]},
                      {"domdim", inv["domdim"]},
                      {"n", inv["n"]},
                      {"checks", to_string(av)}});
  auto p = profile(c.a, cap);

  std::size_t kmax = p.gldim.finite() ? (p.domdim.finite() ? p.domdim.value : cap) : std::min<std::size_t>(1, p.domdim.at_least ? 1 : p.domdim.value);
  for (std::size_t k = 0; k <= kmax; ++k) {
    Verdict rv = Verdict::not_applicable;
    json row = {{"algebra", name}, {"k", k}};
    try {
      json s = shift_section(c, k, rv);
      row["gldim_lambda"] = s["gldim_report"]["gldim_lambda"];
      row["gldim_gamma"] = s["gldim_report"]["gldim_gamma"];
      row["simples_gamma"] = s["gamma"]["simples"];
      row["inequality"] = s["gldim_report"]["verdict"];
      row["tilting"] = s["tilting"]["verdict"];
      row["injdim_t"] = k >= 1 ? s["injdim_check"]["injdim_t"] : json("-");
      row["injdim_check"] = k >= 1 ? s["injdim_check"]["verdict"] : json("-");
      if (p.gldim.finite()) {
        json m = mechanism_section(c, k, std::nullopt, rv);
        std::size_t wmax = 0;
        for (const auto& r : m["rows"]) wmax = std::max<std::size_t>(wmax, r.value("width_minimized", 0));
        row["max_width"] = wmax;
        row["mechanism"] = m["verdict"];
      } else {
        row["max_width"] = "-";
        row["mechanism"] = to_string(Verdict::not_applicable);
      }
    } catch (const VerificationError& e) {
      rv = Verdict::fail;
      row["error"] = e.what();
    }
    row["verdict"] = to_string(rv);
    verdict = combine(verdict, rv);
    shifts.push_back(row);
  }

  if (p.n.finite() && p.n.value >= 1) {
    for (std::size_t d = 0; d < p.n.value; ++d) {
      Verdict rv = Verdict::not_applicable;
      json row = {{"algebra", name}, {"d", d}, {"k", 1}, {"n", to_json(p.n)}};
      try {
        json o = order_section(c, d, 1, rv);
        row["gldim_lambda"] = o["profile"]["gldim_lambda"];
        row["lhs"] = o["theorem"]["lhs"];
        row["rhs"] = o["theorem"]["rhs"];
        row["verdict"] = o["theorem"]["verdict"];
      } catch (const PreconditionError& e) {
        rv = Verdict::not_applicable;
        row["note"] = e.what();
        row["verdict"] = to_string(rv);
      }
      verdict = combine(verdict, rv);
      orders.push_back(row);
    }
  } else {
    orders.push_back({{"algebra", name}, {"d", "-"}, {"k", 1}, {"n", to_json(p.n)},
                      {"note", "theorem not applicable: n = " + p.n.text()},
                      {"verdict", to_string(Verdict::not_applicable)}});
  }

  json row = {{"algebra", name}, {"module", "regular+dual"}};
  try {
    auto e = generator_cogenerator_check(parse_module_spec(c.a, "regular+dual"), cap, c.opt.seed);
    row["summands"] = e.summands;
    row["end_dim"] = e.end_dim;
    row["domdim_end"] = to_json(e.domdim_end);
    row["verdict"] = to_string(e.verdict);
    verdict = combine(verdict, e.verdict);
  } catch (const PreconditionError& e) {
    row["verdict"] = to_string(Verdict::fail);
    row["error"] = e.what();
    verdict = combine(verdict, Verdict::fail);
  }
  ends.push_back(row);
}

/// Structural invariant suite on one algebra; each row counts the instances checked.
template <class F>
void invariant_entry(const Ctx<F>& c, const std::string& name, json& rows, Verdict& verdict) {
  const auto& a = c.a;
  auto op = a->opposite();
  auto cat = catalog(a);
  std::vector<ModulePtr<F>> mods;
  for (const auto* list : {&cat.simples, &cat.projectives, &cat.injectives})
    mods.insert(mods.end(), list->begin(), list->end());
  mods.push_back(regular_module(a));
  auto add = [&](const std::string& check, std::size_t count, bool ok) {
    Verdict v = ok ? Verdict::pass : Verdict::fail;
    verdict = combine(verdict, v);
    rows.push_back({{"algebra", name}, {"check", check}, {"instances", count}, {"verdict", to_string(v)}});
  };

  std::size_t n = 0;
  bool ok = true;
  for (const auto& m : mods)
    for (const auto& x : mods) {
      ++n;
      ok = ok && hom_space(m, x).dim() == hom_space(dualize(x), dualize(m)).dim();
    }
  add("hom_duality", n, ok);

  n = 0;
  ok = true;
  for (const auto& m : cat.simples)
    for (const auto& x : mods) {
      ++n;
      ok = ok && ext_dims(m, x, 4) == ext_dims(dualize(x), dualize(m), 4);
    }
  add("ext_duality_i_le_4", n, ok);

  n = 0;
  ok = true;
  for (const auto& m : mods)
    for (const auto& x : mods)
      for (const auto& f : hom_basis(m, x)) {
        ++n;
        auto fac = morphism_factor(f);
        ok = ok && fac.kernel.module->dim() + fac.image.module->dim() == m->dim() &&
             x->dim() == fac.image.module->dim() + fac.cokernel.module->dim();
      }
  add("rank_nullity", n, ok);

  n = 0;
  ok = true;
  for (const auto& m : mods) {
    auto r = minimal_resolution(m, Direction::projective, 4);
    for (std::size_t j = 0; j < a->num_vertices(); ++j) {
      auto e = ext_dims(m, cat.simples[j], 4);
      for (std::size_t i = 0; i < r.vertices.size() && i <= 4; ++i) {
        ++n;
        auto mult = static_cast<std::size_t>(std::count(r.vertices[i].begin(), r.vertices[i].end(), j));
        ok = ok && mult == e[i];
      }
    }
  }
  add("ext_simple_multiplicities", n, ok);

  auto d0 = decompose(regular_module(a), c.opt.seed);
  auto d1 = decompose(regular_module(a), c.opt.seed + 1);
  ok = d0.summands.size() == d1.summands.size();
  for (std::size_t i = 0; ok && i < d0.summands.size(); ++i)
    ok = d0.summands[i]->dimension_vector() == d1.summands[i]->dimension_vector() &&
         isomorphic(d0.summands[i], d1.summands[i], c.opt.seed);
  add("decomposition_seed_independent", d0.summands.size(), ok);

  Verdict v1 = Verdict::not_applicable, v2 = Verdict::not_applicable;
  std::string j1 = analyze_section(c, v1).dump(), j2 = analyze_section(c, v2).dump();
  add("json_deterministic", 2, j1 == j2);
}

std::string render_value(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.rfind("geq:", 0) == 0) return "≥ " + s.substr(4);
    return s;
  }
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + render_value(v[i]);
    return s + "]";
  }
  if (v.is_object()) return v.dump();
  return v.dump();
}

std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

std::string pad(const std::string& s, std::size_t w) {
  std::size_t d = display_width(s);
  return s + std::string(w > d ? w - d : 0, ' ');
}

void render_rows(std::ostringstream& os, const std::string& title, const json& rows, const std::string& indent = "  ") {
  std::vector<std::string> cols;
  auto add_col = [&](const std::string& k) {
    if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  };
  for (const auto& r : rows)
    if (r.contains("algebra")) add_col("algebra");
  for (const auto& r : rows)
    for (const auto& [k, v] : r.items())
      if (k != "verdict" && k != "error" && k != "note") add_col(k);
  for (const char* k : {"verdict", "note", "error"})
    for (const auto& r : rows)
      if (r.contains(k)) add_col(k);
  std::vector<std::size_t> w(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    w[i] = display_width(cols[i]);
    for (const auto& r : rows) w[i] = std::max(w[i], display_width(r.contains(cols[i]) ? render_value(r[cols[i]]) : "-"));
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string l = indent;
    for (std::size_t i = 0; i < cells.size(); ++i) l += (i ? " " : "") + pad(cells[i], w[i]);
    while (!l.empty() && l.back() == ' ') l.pop_back();
    os << l << "\n";
  };
  os << title << "\n";
  line(cols);
  for (const auto& r : rows) {
    std::vector<std::string> cells;
    for (const auto& c : cols) cells.push_back(r.contains(c) ? render_value(r[c]) : "-");
    line(cells);
  }
}

void render_section(std::ostringstream& os, const std::string& prefix, const json& v, std::size_t depth) {
  for (const auto& [k, x] : v.items()) {
    std::string key = prefix.empty() ? k : prefix + "." + k;
    if (x.is_object()) {
      render_section(os, key, x, depth);
    } else if (x.is_array() && !x.empty() && x[0].is_object()) {
      std::ostringstream sub;
      render_rows(sub, "  " + key + ":", x, "    ");
      os << sub.str();
    } else {
      os << "  " << pad(key, 34) << " " << render_value(x) << "\n";
    }
  }
}

}  // namespace

std::string render_table(const json& record) {
  std::ostringstream os;
  os << "shiftkit " << record.value("command", std::string("?"));
  if (record.contains("inputs")) {
    const auto& in = record["inputs"];
    for (const auto& [k, v] : in.items()) os << "  " << k << "=" << render_value(v);
  }
  os << "\n";
  for (const auto& [k, v] : record.items()) {
    if (k == "command" || k == "inputs" || k == "verdict") continue;
    if (v.is_array() && !v.empty() && v[0].is_object()) {
      render_rows(os, k + ":", v);
    } else if (v.is_object()) {
      os << k << ":\n";
      render_section(os, "", v, 1);
    } else {
      os << pad(k, 36) << " " << render_value(v) << "\n";
    }
  }
  os << "verdict: " << record.value("verdict", std::string("?")) << "\n";
  return os.str();
}

template <class F>
ModulePtr<F> parse_module_spec(const AlgebraPtr<F>& a, const std::string& spec) {
  std::vector<ModulePtr<F>> parts;
  std::stringstream ss(spec);
  std::string item;
  auto bad = [&](const std::string& why) { throw std::invalid_argument("bad module spec '" + spec + "': " + why); };
  while (std::getline(ss, item, '+')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }), item.end());
    if (item.empty()) bad("empty summand");
    std::size_t mult = 1;
    if (auto star = item.find('*'); star != std::string::npos) {
      std::string m = item.substr(0, star);
      if (m.empty() || !std::all_of(m.begin(), m.end(), [](unsigned char ch) { return std::isdigit(ch); })) bad("bad multiplier");
      mult = std::stoul(m);
      item = item.substr(star + 1);
    }
    ModulePtr<F> m;
    if (item == "regular") {
      m = regular_module(a);
    } else if (item == "dual") {
      m = dualize(regular_module(a->opposite()));
    } else if (item.size() >= 2 && (item[0] == 'P' || item[0] == 'I' || item[0] == 'S')) {
      std::string num = item.substr(1);
      if (!std::all_of(num.begin(), num.end(), [](unsigned char ch) { return std::isdigit(ch); })) bad("unknown summand " + item);
      std::size_t i = std::stoul(num);
      if (i < 1 || i > a->num_vertices()) bad("vertex out of range in " + item);
      const auto& list = item[0] == 'P' ? projectives(a) : item[0] == 'I' ? injectives(a) : simples(a);
      m = list[i - 1];
    } else {
      bad("unknown summand " + item);
    }
    for (std::size_t r = 0; r < mult; ++r) parts.push_back(m);
  }
  if (parts.empty()) bad("no summands");
  return direct_sum(parts).module;
}

template ModulePtr<PrimeField> parse_module_spec(const AlgebraPtr<PrimeField>&, const std::string&);
template ModulePtr<Rationals> parse_module_spec(const AlgebraPtr<Rationals>&, const std::string&);

CommandResult cmd_analyze(const AlgebraFile& f, const Options& o) {
  return with_algebra(f, o, [&](const auto& c, const FieldSpec& fs) {
    CommandResult r;
    json body = analyze_section(c, r.verdict);
    r.record = {{"command", "analyze"}, {"inputs", inputs_json(f, fs, o)}, {"invariants", body["invariants"]},
                {"checks", body["checks"]}, {"verdict", to_string(r.verdict)}};
    return r;
  });
}

CommandResult cmd_shift(const AlgebraFile& f, std::size_t level, const Options& o) {
  return with_algebra(f, o, [&](const auto& c, const FieldSpec& fs) {
    CommandResult r;
    json body = shift_section(c, level, r.verdict);
    r.record = {{"command", "shift"}, {"inputs", inputs_json(f, fs, o, {{"level", level}})}, {"shift", body},
                {"verdict", to_string(r.verdict)}};
    return r;
  });
}

CommandResult cmd_order(const AlgebraFile& f, std::size_t krull, std::size_t level, const Options& o) {
  return with_algebra(f, o, [&](const auto& c, const FieldSpec& fs) {
    CommandResult r;
    json body = order_section(c, krull, level, r.verdict);
    r.record = {{"command", "order"}, {"inputs", inputs_json(f, fs, o, {{"krull", krull}, {"level", level}})},
                {"order", body["profile"]}, {"theorem", body["theorem"]}, {"assumption", body["assumption"]},
                {"verdict", to_string(r.verdict)}};
    return r;
  });
}

CommandResult cmd_endcheck(const AlgebraFile& f, const std::string& module_spec, const Options& o) {
  return with_algebra(f, o, [&](const auto& c, const FieldSpec& fs) {
    CommandResult r;
    auto m = parse_module_spec(c.a, module_spec);
    auto e = generator_cogenerator_check(m, o.cap, o.seed);
    r.verdict = e.verdict;
    r.record = {{"command", "endcheck"},
                {"inputs", inputs_json(f, fs, o, {{"module", module_spec}})},
                {"endcheck",
                 {{"summands", e.summands}, {"end_dim", e.end_dim}, {"domdim_end", to_json(e.domdim_end)}, {"bound", 2}}},
                {"verdict", to_string(r.verdict)}};
    return r;
  });
}

CommandResult cmd_mechanism(const AlgebraFile& f, std::size_t level, std::optional<std::size_t> simple, const Options& o) {
  return with_algebra(f, o, [&](const auto& c, const FieldSpec& fs) {
    CommandResult r;
    json extra = {{"level", level}};
    if (simple) extra["simple"] = *simple + 1;
    json body = mechanism_section(c, level, simple, r.verdict);
    r.record = {{"command", "mechanism"}, {"inputs", inputs_json(f, fs, o, extra)}, {"mechanism", body},
                {"verdict", to_string(r.verdict)}};
    return r;
  });
}

namespace {

CommandResult corpus_run(const std::string& dir, const Options& o, bool with_invariants) {
  CommandResult r;
  json profiles = json::array(), shifts = json::array(), orders = json::array(), ends = json::array();
  json invariants = json::array(), errors = json::array();
  json names = json::array();
  std::string digest_input;
  for (const auto& path : corpus_files(dir)) {
    AlgebraFile f;
    try {
      f = parse_algebra_file(path.string());
    } catch (const ParseError& e) {
      errors.push_back({{"algebra", path.filename().string()}, {"error", e.what()}, {"verdict", "fail"}});
      r.verdict = combine(r.verdict, Verdict::fail);
      continue;
    }
    std::string name = label_of(f, path);
    names.push_back(name);
    digest_input += emit_algebra_file(f);
    try {
      with_algebra(f, o, [&](const auto& c, const FieldSpec&) {
        corpus_entry(c, name, profiles, shifts, orders, ends, r.verdict);
        if (with_invariants) invariant_entry(c, name, invariants, r.verdict);
        return 0;
      });
    } catch (const std::exception& e) {
      errors.push_back({{"algebra", name}, {"error", e.what()}, {"verdict", "fail"}});
      r.verdict = combine(r.verdict, Verdict::fail);
    }
  }
  json inputs = {{"algebras", names}, {"cap", o.cap}, {"seed", o.seed}, {"field", o.field ? *o.field : "file"}};
  inputs["digest"] = fnv1a_hex(digest_input + inputs.dump());
  r.record = {{"command", with_invariants ? "selftest" : "corpus"},
              {"inputs", inputs},
              {"profiles", profiles},
              {"shifts", shifts},
              {"orders", orders},
              {"endchecks", ends},
              {"order_assumption", kTransferAssumption},
              {"verdict", to_string(r.verdict)}};
  if (with_invariants) r.record["invariants"] = invariants;
  if (!errors.empty()) r.record["errors"] = errors;
  return r;
}

}  // namespace

CommandResult cmd_corpus(const std::string& dir, const Options& o) {
  return corpus_run(dir, o, false);
}

CommandResult cmd_selftest(const std::string& dir, const Options& o) {
  return corpus_run(dir, o, true);
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"shiftkit: dominant dimension, shifted tilting modules and shifted algebras"};
  app.require_subcommand(1);
  Options opt;
  std::string field_flag, json_path;
  app.add_option("--cap", opt.cap, "resolution length cap (default 24)")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "random seed (default 0)");
  app.add_option("--field", field_flag, "q or p<prime>; overrides the file and SHIFTKIT_FIELD");
  app.add_option("--json", json_path, "write the canonical JSON report to this path (- for stdout, replacing the table)");
  app.fallthrough();

  std::string file, dir, module_spec;
  std::size_t level = 0, krull = 0, simple = 0;

  auto* analyze = app.add_subcommand("analyze", "homological profile of an algebra file");
  analyze->add_option("FILE", file)->required();
  auto* shift = app.add_subcommand("shift", "shifted module, tilting certificate and shifted algebra");
  shift->add_option("FILE", file)->required();
  shift->add_option("--level", level, "shift level k")->required();
  auto* order = app.add_subcommand("order", "tensor-order profile and theorem report");
  order->add_option("FILE", file)->required();
  order->add_option("--krull", krull, "Krull dimension d of the base ring")->required();
  order->add_option("--level", level, "shift level k")->default_val(1);
  auto* endcheck = app.add_subcommand("endcheck", "domdim End(M) >= 2 for a generator-cogenerator M");
  endcheck->add_option("FILE", file)->required();
  endcheck->add_option("--module", module_spec, "e.g. regular+dual, 2*S1+P2")->default_val("regular+dual");
  auto* mechanism = app.add_subcommand("mechanism", "Tor vanishing and width checks per simple of the shifted algebra");
  mechanism->add_option("FILE", file)->required();
  mechanism->add_option("--level", level, "shift level k")->required();
  auto* simple_opt = mechanism->add_option("--simple", simple, "only this simple (1-based)")->check(CLI::PositiveNumber);
  auto* corpus = app.add_subcommand("corpus", "run every check over a directory of algebra files");
  corpus->add_option("DIR", dir)->required();
  auto* selftest = app.add_subcommand("selftest", "corpus run plus invariant suites on the bundled corpus");
  selftest->add_option("DIR", dir, "corpus directory (default: bundled corpus)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (!field_flag.empty()) opt.field = field_flag;

  auto start = std::chrono::steady_clock::now();
  CommandResult res;
  try {
    if (!field_flag.empty()) FieldSpec::parse(field_flag);
    if (*analyze) {
      res = cmd_analyze(parse_algebra_file(file), opt);
    } else if (*shift) {
      res = cmd_shift(parse_algebra_file(file), level, opt);
    } else if (*order) {
      res = cmd_order(parse_algebra_file(file), krull, level, opt);
    } else if (*endcheck) {
      res = cmd_endcheck(parse_algebra_file(file), module_spec, opt);
    } else if (*mechanism) {
      std::optional<std::size_t> which;
      if (simple_opt->count()) which = simple - 1;
      res = cmd_mechanism(parse_algebra_file(file), level, which, opt);
    } else if (*corpus) {
      res = cmd_corpus(dir, opt);
    } else if (*selftest) {
      res = cmd_selftest(dir.empty() ? default_corpus_dir() : dir, opt);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return 2;
  } catch (const AdmissibilityError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    err << "assertion failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  if (json_path == "-") {
    out << res.record.dump(2) << "\n";
    return exit_code(res.verdict);
  }
  out << render_table(res.record) << "wall time: " << ms << " ms\n";
  if (!json_path.empty()) {
    std::ofstream js(json_path, std::ios::binary);
    if (!js) {
      err << "error: cannot write " << json_path << "\n";
      return 2;
    }
    js << res.record.dump(2) << "\n";
  }
  return exit_code(res.verdict);
}

}  // namespace shiftkit
