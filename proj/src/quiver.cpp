#include "shiftkit/quiver.hpp"

#include <map>
#include <set>

namespace shiftkit {

void Quiver::validate() const {
  std::set<std::string> names;
  for (const auto& a : arrows) {
    if (a.name.empty()) throw std::invalid_argument("arrow with empty name");
    if (!names.insert(a.name).second) throw std::invalid_argument("duplicate arrow name '" + a.name + "'");
    if (a.source >= vertices || a.target >= vertices)
      throw std::invalid_argument("arrow '" + a.name + "' references a vertex out of range");
  }
}

std::size_t Quiver::find(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  return static_cast<std::size_t>(-1);
}

namespace {

constexpr std::size_t kMaxPaths = 200000;

struct Path {
  std::size_t start = 0, end = 0;
  std::vector<std::size_t> arrows;
  std::size_t length() const { return arrows.size(); }
};

/// All paths of length <= max_len, grouped by length, with a lookup from (start, arrows).
struct PathTable {
  std::vector<Path> paths;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
  std::vector<std::vector<std::size_t>> by_length;

  PathTable(const Quiver& q, std::size_t max_len) {
    by_length.resize(max_len + 1);
    for (std::size_t v = 0; v < q.vertices; ++v) add({v, v, {}});
    for (std::size_t len = 1; len <= max_len; ++len)
      for (std::size_t idx : std::vector<std::size_t>(by_length[len - 1]))
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
          if (q.arrows[a].source != paths[idx].end) continue;
          Path p = paths[idx];
          p.arrows.push_back(a);
          p.end = q.arrows[a].target;
          add(std::move(p));
          if (paths.size() > kMaxPaths) throw AdmissibilityError("not admissible within cap: path count exceeds limit");
        }
  }
  void add(Path p) {
    std::size_t i = paths.size();
    index[{p.start, p.arrows}] = i;
    by_length[p.length()].push_back(i);
    paths.push_back(std::move(p));
  }
  std::size_t find(std::size_t start, const std::vector<std::size_t>& arrows) const {
    auto it = index.find({start, arrows});
    return it == index.end() ? static_cast<std::size_t>(-1) : it->second;
  }
};

template <class F>
using Sparse = std::map<std::size_t, typename F::Elem>;

/// Incremental echelon basis of a subspace of path space; pivots are leading (longest) terms.
template <class F>
struct IdealSpan {
  const F& f;
  const PathTable& table;
  std::vector<Sparse<F>> rows;
  std::vector<std::size_t> pivots;
  std::map<std::size_t, std::size_t> pivot_row;

  // Leading term: longest path, ties broken by larger index.
  std::size_t leading(const Sparse<F>& v) const {
    std::size_t best = static_cast<std::size_t>(-1);
    for (const auto& [k, c] : v) {
      if (best == static_cast<std::size_t>(-1) || table.paths[k].length() > table.paths[best].length() ||
          (table.paths[k].length() == table.paths[best].length() && k > best))
        best = k;
    }
    return best;
  }

  void axpy(Sparse<F>& v, const Sparse<F>& r, const typename F::Elem& s) const {
    for (const auto& [k, c] : r) {
      auto it = v.find(k);
      auto val = f.sub_mul(it == v.end() ? f.zero() : it->second, s, c);
      if (f.is_zero(val)) {
        if (it != v.end()) v.erase(it);
      } else if (it == v.end()) {
        v.emplace(k, val);
      } else {
        it->second = val;
      }
    }
  }

  void reduce(Sparse<F>& v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto it = v.find(pivots[r]);
      if (it == v.end()) continue;
      auto c = it->second;
      axpy(v, rows[r], c);
    }
  }

  bool insert(Sparse<F> v) {
    reduce(v);
    if (v.empty()) return false;
    std::size_t lead = leading(v);
    auto inv = f.inv(v[lead]);
    for (auto& [k, c] : v) c = f.mul(c, inv);
    pivot_row[lead] = rows.size();
    pivots.push_back(lead);
    rows.push_back(std::move(v));
    return true;
  }
};

template <class F>
std::vector<Sparse<F>> relation_vectors(const Quiver& q, const std::vector<RelationCombo<F>>& relations,
                                        const F& f, const PathTable& table, std::size_t max_len) {
  std::vector<Sparse<F>> out;
  for (std::size_t r = 0; r < relations.size(); ++r) {
    Sparse<F> v;
    for (const auto& term : relations[r]) {
      std::vector<std::size_t> arrows;
      for (const auto& name : term.path) arrows.push_back(q.find(name));
      if (arrows.size() > max_len) continue;
      std::size_t idx = table.find(q.arrows[arrows[0]].source, arrows);
      auto& slot = v[idx];
      slot = f.add(slot, term.coeff);
      if (f.is_zero(slot)) v.erase(idx);
    }
    out.push_back(std::move(v));
  }
  return out;
}

template <class F>
void validate_relations(const Quiver& q, const std::vector<RelationCombo<F>>& relations) {
  for (std::size_t r = 0; r < relations.size(); ++r) {
    const std::string where = "relation " + std::to_string(r + 1);
    if (relations[r].empty()) throw RelationError("inconsistent relation: " + where + " is empty");
    std::size_t src = 0, tgt = 0;
    for (std::size_t t = 0; t < relations[r].size(); ++t) {
      const auto& path = relations[r][t].path;
      if (path.size() < 2) throw RelationError("inconsistent relation: " + where + " has a path of length < 2");
      std::vector<std::size_t> arrows;
      for (const auto& name : path) {
        std::size_t a = q.find(name);
        if (a == static_cast<std::size_t>(-1))
          throw RelationError("inconsistent relation: " + where + " uses unknown arrow '" + name + "'");
        arrows.push_back(a);
      }
      for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
        if (q.arrows[arrows[i]].target != q.arrows[arrows[i + 1]].source)
          throw RelationError("inconsistent relation: " + where + " has non-composable arrows '" + path[i] + "', '" +
                              path[i + 1] + "'");
      std::size_t s = q.arrows[arrows.front()].source, e = q.arrows[arrows.back()].target;
      if (t == 0) {
        src = s;
        tgt = e;
      } else if (s != src || e != tgt) {
        throw RelationError("inconsistent relation: " + where + " mixes paths with different endpoints");
      }
    }
  }
}

std::string path_label(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + std::to_string(p.start + 1);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '.';
    s += q.arrows[p.arrows[i]].name;
  }
  return s;
}

}  // namespace

template <class F>
AlgebraPtr<F> build_based_algebra(const Quiver& q, const std::vector<RelationCombo<F>>& relations, const F& field,
                                  std::size_t nilpotency_cap) {
  q.validate();
  validate_relations(q, relations);
  if (q.vertices == 0) throw std::invalid_argument("quiver has no vertices");
  if (nilpotency_cap == 0) throw std::invalid_argument("nilpotency cap must be positive");

  for (std::size_t len = 1; len <= nilpotency_cap; ++len) {
    PathTable table(q, len);
    IdealSpan<F> span{field, table, {}, {}, {}};
    std::vector<Sparse<F>> queue = relation_vectors(q, relations, field, table, len);
    while (!queue.empty()) {
      Sparse<F> v = std::move(queue.back());
      queue.pop_back();
      span.reduce(v);
      if (v.empty()) continue;
      span.insert(v);
      // two-sided closure by arrows, truncated above length len
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        Sparse<F> right, left;
        for (const auto& [k, c] : v) {
          const Path& p = table.paths[k];
          if (p.length() + 1 > len) continue;
          if (p.end == q.arrows[a].source) {
            auto arr = p.arrows;
            arr.push_back(a);
            right[table.find(p.start, arr)] = c;
          }
          if (q.arrows[a].target == p.start) {
            std::vector<std::size_t> arr{a};
            arr.insert(arr.end(), p.arrows.begin(), p.arrows.end());
            left[table.find(q.arrows[a].source, arr)] = c;
          }
        }
        if (!right.empty()) queue.push_back(std::move(right));
        if (!left.empty()) queue.push_back(std::move(left));
      }
    }
    bool all_in = true;
    for (std::size_t idx : table.by_length[len])
      if (!span.pivot_row.count(idx)) {
        all_in = false;
        break;
      }
    if (!all_in) {
      if (len == nilpotency_cap)
        throw AdmissibilityError("not admissible within cap: nonzero paths of length " + std::to_string(len) +
                                 " survive");
      continue;
    }

    // Standard paths of length < len form the basis.
    std::vector<std::size_t> basis_paths;
    for (std::size_t l = 0; l < len; ++l)
      for (std::size_t idx : table.by_length[l])
        if (!span.pivot_row.count(idx)) basis_paths.push_back(idx);
    const std::size_t n = basis_paths.size();
    std::map<std::size_t, std::size_t> position;
    for (std::size_t i = 0; i < n; ++i) position[basis_paths[i]] = i;

    auto normal_form = [&](std::size_t idx) {
      Mat<F> out(field, 1, n);
      Sparse<F> v{{idx, field.one()}};
      span.reduce(v);
      for (const auto& [k, c] : v) out(0, position.at(k)) = c;
      return out;
    };

    typename BasedAlgebra<F>::Init init{field, {}, {}, {}, {}, Provenance::quiver_built, {}, {}};
    for (std::size_t i = 0; i < n; ++i) {
      const Path& p = table.paths[basis_paths[i]];
      init.src.push_back(p.start);
      init.tgt.push_back(p.end);
      init.labels.push_back(path_label(q, p));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Path& pj = table.paths[basis_paths[j]];
      Mat<F> r(field, n, n);
      for (std::size_t i = 0; i < n; ++i) {
        const Path& pi = table.paths[basis_paths[i]];
        if (pi.end != pj.start) continue;
        if (pi.length() + pj.length() >= len) continue;
        auto arr = pi.arrows;
        arr.insert(arr.end(), pj.arrows.begin(), pj.arrows.end());
        r.set_block(i, 0, normal_form(table.find(pi.start, arr)));
      }
      init.right_mult.push_back(std::move(r));
    }
    for (std::size_t v = 0; v < q.vertices; ++v) {
      Mat<F> e(field, 1, n);
      e(0, position.at(table.find(v, {}))) = field.one();
      init.idempotents.push_back(std::move(e));
    }
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      Mat<F> g(field, 1, n);
      g(0, position.at(table.find(q.arrows[a].source, {a}))) = field.one();
      init.radical_generators.push_back(std::move(g));
    }
    auto alg = BasedAlgebra<F>::create(std::move(init));
    alg->check_axioms();
    return alg;
  }
  throw AdmissibilityError("not admissible within cap");
}

template AlgebraPtr<PrimeField> build_based_algebra(const Quiver&, const std::vector<RelationCombo<PrimeField>>&,
                                                    const PrimeField&, std::size_t);
template AlgebraPtr<Rationals> build_based_algebra(const Quiver&, const std::vector<RelationCombo<Rationals>>&,
                                                   const Rationals&, std::size_t);

}  // namespace shiftkit
