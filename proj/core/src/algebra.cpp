#include "rmw/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace rmw {

using Sparse = std::vector<std::pair<int, Q>>;

namespace {

void sparse_add(Sparse& acc, int idx, const Q& c) {
  for (auto& [i, x] : acc)
    if (i == idx) {
      x += c;
      return;
    }
  acc.emplace_back(idx, c);
}

}  // namespace

std::vector<std::pair<int, Q>> QuiverAlgebra::append_arrow(const Sparse& v, int arrow) const {
  Sparse out;
  for (const auto& [k, c] : v) {
    if (sgn(c) == 0) continue;
    // degree of k
    int d = 0;
    while (d + 1 < static_cast<int>(degree_start_.size()) && degree_start_[d + 1] <= k) ++d;
    if (d + 1 >= static_cast<int>(extend_.size())) continue;
    auto it = extend_[d + 1].find({k, arrow});
    if (it == extend_[d + 1].end()) continue;
    for (const auto& [j, x] : it->second) sparse_add(out, j, c * x);
  }
  Sparse cleaned;
  for (auto& [j, x] : out)
    if (sgn(x) != 0) cleaned.emplace_back(j, x);
  return cleaned;
}

Vec QuiverAlgebra::reduce_path(int src, const std::vector<int>& arr) const {
  Vec out(dim());
  Sparse cur{{src, Q(1)}};  // trivial path e_src has global index src
  int at = src;
  for (int a : arr) {
    if (arrows[a].src != at) return out;  // not a path: zero
    cur = append_arrow(cur, a);
    at = arrows[a].tgt;
  }
  for (const auto& [j, x] : cur) out[j] += x;
  return out;
}

int QuiverAlgebra::arrow_index(const std::string& id) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows[i].id == id) return i;
  throw InputError("UnknownArrow", id);
}

std::string QuiverAlgebra::path_name(int b) const {
  const Path& p = basis_[b];
  if (p.arrows.empty()) return "e_" + vertices[p.src];
  std::string s;
  for (size_t i = 0; i < p.arrows.size(); ++i) s += (i ? "*" : "") + arrows[p.arrows[i]].id;
  return s;
}

bool QuiverAlgebra::check_associative() const {
  int n = dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        // (ab)c
        Vec left(n), right(n);
        const Vec& ab = mult(a, b);
        for (int k = 0; k < n; ++k)
          if (sgn(ab[k]) != 0) left = vadd(left, vscale(ab[k], mult(k, c)));
        const Vec& bc = mult(b, c);
        for (int k = 0; k < n; ++k)
          if (sgn(bc[k]) != 0) right = vadd(right, vscale(bc[k], mult(a, k)));
        if (left != right) return false;
      }
  return true;
}

std::shared_ptr<QuiverAlgebra> build_algebra(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                                             std::vector<Relation> relations, int max_length) {
  auto A = std::make_shared<QuiverAlgebra>();
  A->vertices = std::move(vertices);
  A->arrows = std::move(arrows);
  A->relations = std::move(relations);
  const int nv = A->num_vertices();
  for (const auto& a : A->arrows)
    if (a.src < 0 || a.src >= nv || a.tgt < 0 || a.tgt >= nv) throw InputError("BadArrow", a.id);
  // Validate relations: nonempty, homogeneous, parallel, each term a path.
  std::vector<int> rel_len, rel_src;
  for (const auto& r : A->relations) {
    if (r.terms.empty()) throw InputError("InadmissibleRelation", "empty relation");
    int len = static_cast<int>(r.terms[0].path.size());
    int s = -1, t = -1;
    for (const auto& term : r.terms) {
      if (static_cast<int>(term.path.size()) != len)
        throw InputError("InadmissibleRelation", "relations must be homogeneous");
      if (len < 2) throw InputError("InadmissibleRelation", "relation not in the square of the arrow ideal");
      int ps = A->arrows[term.path.front()].src;
      int at = ps;
      for (int a : term.path) {
        if (A->arrows[a].src != at) throw InputError("InadmissibleRelation", "term is not a path");
        at = A->arrows[a].tgt;
      }
      if (s < 0) {
        s = ps;
        t = at;
      } else if (s != ps || t != at) {
        throw InputError("InadmissibleRelation", "terms are not parallel");
      }
    }
    rel_len.push_back(len);
    rel_src.push_back(s);
  }

  // Degree 0.
  for (int v = 0; v < nv; ++v) A->basis_.push_back(Path{v, v, {}});
  A->degree_start_ = {0};
  A->extend_.resize(1);  // extend_[0] unused
  int d = 0;
  while (true) {
    ++d;
    if (d > max_length) throw Error("InfiniteDimensional", "path algebra quotient does not close below the length bound");
    int prev_start = A->degree_start_[d - 1];
    int prev_end = static_cast<int>(A->basis_.size());
    // Candidates.
    std::vector<std::pair<int, int>> cand;
    for (int k = prev_start; k < prev_end; ++k)
      for (int a = 0; a < A->num_arrows(); ++a)
        if (A->arrows[a].src == A->basis_[k].tgt) cand.emplace_back(k, a);
    if (cand.empty()) break;
    std::map<std::pair<int, int>, int> cand_idx;
    for (size_t i = 0; i < cand.size(); ++i) cand_idx[cand[i]] = static_cast<int>(i);
    // Relation vectors in candidate coordinates.
    std::vector<Vec> rows;
    for (size_t r = 0; r < A->relations.size(); ++r) {
      int L = rel_len[r];
      if (L > d) continue;
      int ustart = A->degree_start_[d - L];
      int uend = (d - L + 1 < static_cast<int>(A->degree_start_.size())) ? A->degree_start_[d - L + 1] : prev_end;
      for (int u = ustart; u < uend; ++u) {
        if (A->basis_[u].tgt != rel_src[r]) continue;
        Vec row(cand.size());
        for (const auto& term : A->relations[r].terms) {
          Sparse cur{{u, Q(1)}};
          for (int t = 0; t + 1 < L; ++t) cur = A->append_arrow(cur, term.path[t]);
          int last = term.path.back();
          for (const auto& [k, c] : cur) {
            auto it = cand_idx.find({k, last});
            if (it != cand_idx.end()) row[it->second] += term.coef * c;
          }
        }
        if (!vzero(row)) rows.push_back(std::move(row));
      }
    }
    const int m = static_cast<int>(cand.size());
    std::vector<bool> is_piv(m, false);
    RrefResult rr{Mat(0, m), {}};
    if (!rows.empty()) {
      rr = rref(Mat::from_rows(rows, m));
      for (int p : rr.pivots) is_piv[p] = true;
    }
    int new_start = static_cast<int>(A->basis_.size());
    std::vector<int> new_index(m, -1);
    for (int i = 0; i < m; ++i)
      if (!is_piv[i]) {
        new_index[i] = static_cast<int>(A->basis_.size());
        Path p = A->basis_[cand[i].first];
        p.arrows.push_back(cand[i].second);
        p.tgt = A->arrows[cand[i].second].tgt;
        A->basis_.push_back(p);
      }
    A->degree_start_.push_back(new_start);
    std::map<std::pair<int, int>, Sparse> ext;
    for (int i = 0; i < m; ++i) {
      Sparse s;
      if (!is_piv[i]) {
        s.emplace_back(new_index[i], Q(1));
      } else {
        int row = static_cast<int>(std::find(rr.pivots.begin(), rr.pivots.end(), i) - rr.pivots.begin());
        for (int f = 0; f < m; ++f)
          if (!is_piv[f] && sgn(rr.R(row, f)) != 0) s.emplace_back(new_index[f], -rr.R(row, f));
      }
      ext[cand[i]] = s;
    }
    A->extend_.push_back(std::move(ext));
    if (static_cast<int>(A->basis_.size()) == new_start) break;
  }
  // Multiplication table.
  const int n = A->dim();
  A->mult_.assign(static_cast<size_t>(n) * n, Vec(n));
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      const Path& pb = A->basis_[b];
      const Path& pc = A->basis_[c];
      if (pb.tgt != pc.src) continue;
      Sparse cur{{b, Q(1)}};
      for (int a : pc.arrows) cur = A->append_arrow(cur, a);
      Vec v(n);
      for (const auto& [j, x] : cur) v[j] += x;
      A->mult_[static_cast<size_t>(b) * n + c] = v;
    }
  A->between_.assign(static_cast<size_t>(nv) * nv, {});
  for (int b = 0; b < n; ++b) A->between_[A->basis_[b].src * nv + A->basis_[b].tgt].push_back(b);
  A->compute_self_injective();
  return A;
}

void QuiverAlgebra::compute_self_injective() {
  // Non-owning handle so that module constructions can be used here.
  AlgebraPtr self(std::shared_ptr<const QuiverAlgebra>(), this);
  std::set<int> socle_vertices;
  self_injective_ = true;
  for (int v = 0; v < num_vertices(); ++v) {
    Module P = projective_module(self, v);
    auto soc = socle_basis(P);
    int total = 0, at = -1;
    for (int w = 0; w < num_vertices(); ++w)
      if (soc[w].cols() > 0) {
        total += soc[w].cols();
        at = w;
      }
    if (total != 1) {
      self_injective_ = false;
      return;
    }
    Module I = injective_module(self, at);
    if (I.total_dim() != P.total_dim() || socle_vertices.count(at)) {
      self_injective_ = false;
      return;
    }
    socle_vertices.insert(at);
  }
}

// ---------------------------------------------------------------------------
// JSON

std::shared_ptr<QuiverAlgebra> algebra_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw InputError("ParseError", e.what());
  }
  std::vector<std::string> vertices;
  for (const auto& v : j.at("vertices")) vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  auto vindex = [&](const nlohmann::json& x) {
    std::string s = x.is_string() ? x.get<std::string>() : x.dump();
    for (size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == s) return static_cast<int>(i);
    throw InputError("ParseError", "unknown vertex " + s);
  };
  std::vector<Arrow> arrows;
  for (const auto& a : j.at("arrows")) arrows.push_back(Arrow{a.at("id").get<std::string>(), vindex(a.at("src")), vindex(a.at("tgt"))});
  auto aindex = [&](const std::string& id) {
    for (size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].id == id) return static_cast<int>(i);
    throw InputError("ParseError", "unknown arrow " + id);
  };
  std::vector<Relation> rels;
  if (j.contains("relations"))
    for (const auto& r : j.at("relations")) {
      Relation rel;
      for (const auto& t : r.at("terms")) {
        RelationTerm term;
        const auto& c = t.at("coef");
        term.coef = c.is_string() ? qparse(c.get<std::string>()) : Q(c.get<long>());
        for (const auto& a : t.at("path")) term.path.push_back(aindex(a.get<std::string>()));
        rel.terms.push_back(term);
      }
      rels.push_back(rel);
    }
  int bound = j.value("path_length_bound", 64);
  return build_algebra(vertices, arrows, rels, bound);
}

std::shared_ptr<QuiverAlgebra> load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("FileNotFound", path);
  std::stringstream ss;
  ss << in.rdbuf();
  return algebra_from_json_text(ss.str());
}

std::string algebra_to_json_text(const QuiverAlgebra& A) {
  nlohmann::ordered_json j;
  j["vertices"] = A.vertices;
  j["arrows"] = nlohmann::ordered_json::array();
  for (const auto& a : A.arrows)
    j["arrows"].push_back({{"id", a.id}, {"src", A.vertices[a.src]}, {"tgt", A.vertices[a.tgt]}});
  j["relations"] = nlohmann::ordered_json::array();
  for (const auto& r : A.relations) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& t : r.terms) {
      std::vector<std::string> p;
      for (int a : t.path) p.push_back(A.arrows[a].id);
      terms.push_back({{"coef", qstr(t.coef)}, {"path", p}});
    }
    j["relations"].push_back({{"terms", terms}});
  }
  return j.dump(2);
}

std::shared_ptr<QuiverAlgebra> nakayama_cyclic(int nv, int L) {
  std::vector<std::string> vs;
  std::vector<Arrow> as;
  for (int i = 0; i < nv; ++i) vs.push_back(std::to_string(i + 1));
  for (int i = 0; i < nv; ++i) as.push_back(Arrow{"a" + std::to_string(i + 1), i, (i + 1) % nv});
  std::vector<Relation> rels;
  for (int i = 0; i < nv; ++i) {
    RelationTerm t{Q(1), {}};
    for (int k = 0; k < L; ++k) t.path.push_back((i + k) % nv);
    rels.push_back(Relation{{t}});
  }
  return build_algebra(vs, as, rels);
}

std::shared_ptr<QuiverAlgebra> linear_path_algebra(int n) {
  std::vector<std::string> vs;
  std::vector<Arrow> as;
  for (int i = 0; i < n; ++i) vs.push_back(std::to_string(i + 1));
  for (int i = 1; i < n; ++i) as.push_back(Arrow{"a" + std::to_string(i), i, i - 1});  // i+1 -> i
  return build_algebra(vs, as, {});
}

std::shared_ptr<QuiverAlgebra> truncated_loop(int power) {
  RelationTerm t{Q(1), std::vector<int>(power, 0)};
  return build_algebra({"1"}, {Arrow{"x", 0, 0}}, {Relation{{t}}});
}

// ---------------------------------------------------------------------------
// Modules

int Module::total_dim() const {
  int s = 0;
  for (int d : dim) s += d;
  return s;
}

Mat Module::path_action(int src, const std::vector<int>& arr) const {
  Mat m = Mat::identity(dim[src]);
  for (int a : arr) m = act[a] * m;
  return m;
}

bool Module::satisfies_relations() const {
  for (const auto& r : alg->relations) {
    const auto& t0 = r.terms.front();
    int s = alg->arrows[t0.path.front()].src;
    int t = alg->arrows[t0.path.back()].tgt;
    Mat acc(dim[t], dim[s]);
    for (const auto& term : r.terms) {
      Mat pa = path_action(s, term.path);
      for (int i = 0; i < acc.rows(); ++i)
        for (int j = 0; j < acc.cols(); ++j) acc(i, j) += term.coef * pa(i, j);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

std::string Module::dim_vector() const {
  std::string s = "(";
  for (size_t i = 0; i < dim.size(); ++i) s += (i ? "," : "") + std::to_string(dim[i]);
  return s + ")";
}

Module zero_module(AlgebraPtr A) {
  Module M{A, std::vector<int>(A->num_vertices(), 0), {}};
  for (const auto& a : A->arrows) {
    (void)a;
    M.act.emplace_back(0, 0);
  }
  return M;
}

namespace {

int arrow_basis_index(const QuiverAlgebra& A, int a) {
  Vec v = A.reduce_path(A.arrows[a].src, {a});
  for (int i = 0; i < A.dim(); ++i)
    if (sgn(v[i]) != 0) return i;
  return -1;
}

}  // namespace

Module projective_module(AlgebraPtr A, int v) {
  const int nv = A->num_vertices();
  Module M{A, std::vector<int>(nv), {}};
  for (int w = 0; w < nv; ++w) M.dim[w] = static_cast<int>(A->paths_between(v, w).size());
  for (int a = 0; a < A->num_arrows(); ++a) {
    int s = A->arrows[a].src, t = A->arrows[a].tgt;
    Mat m(M.dim[t], M.dim[s]);
    int ab = arrow_basis_index(*A, a);
    const auto& src_paths = A->paths_between(v, s);
    const auto& tgt_paths = A->paths_between(v, t);
    for (size_t j = 0; j < src_paths.size(); ++j) {
      if (ab < 0) continue;
      const Vec& prod = A->mult(src_paths[j], ab);
      for (size_t i = 0; i < tgt_paths.size(); ++i) m(static_cast<int>(i), static_cast<int>(j)) = prod[tgt_paths[i]];
    }
    M.act.push_back(m);
  }
  return M;
}

Module injective_module(AlgebraPtr A, int v) {
  const int nv = A->num_vertices();
  Module M{A, std::vector<int>(nv), {}};
  for (int w = 0; w < nv; ++w) M.dim[w] = static_cast<int>(A->paths_between(w, v).size());
  for (int a = 0; a < A->num_arrows(); ++a) {
    int s = A->arrows[a].src, t = A->arrows[a].tgt;
    Mat m(M.dim[t], M.dim[s]);
    int ab = arrow_basis_index(*A, a);
    const auto& qs = A->paths_between(s, v);   // basis of (I_v)_s (dual)
    const auto& qts = A->paths_between(t, v);  // basis of (I_v)_t (dual)
    for (size_t i = 0; i < qts.size(); ++i) {
      if (ab < 0) continue;
      const Vec& prod = A->mult(ab, qts[i]);  // a followed by q'
      for (size_t j = 0; j < qs.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = prod[qs[j]];
    }
    M.act.push_back(m);
  }
  return M;
}

Module simple_module(AlgebraPtr A, int v) {
  Module M{A, std::vector<int>(A->num_vertices(), 0), {}};
  M.dim[v] = 1;
  for (const auto& a : A->arrows) M.act.emplace_back(M.dim[a.tgt], M.dim[a.src]);
  return M;
}

Module regular_module(AlgebraPtr A) {
  std::vector<Module> parts;
  for (int v = 0; v < A->num_vertices(); ++v) parts.push_back(projective_module(A, v));
  return direct_sum(A, parts).sum;
}

Module make_module(AlgebraPtr A, std::vector<int> dim, std::vector<Mat> act) {
  if (static_cast<int>(dim.size()) != A->num_vertices() || static_cast<int>(act.size()) != A->num_arrows())
    throw InputError("BadModule", "wrong number of vertices or arrows");
  Module M{A, std::move(dim), std::move(act)};
  for (int a = 0; a < A->num_arrows(); ++a)
    if (M.act[a].rows() != M.dim[A->arrows[a].tgt] || M.act[a].cols() != M.dim[A->arrows[a].src])
      throw InputError("BadModule", "arrow matrix has wrong shape");
  if (!M.satisfies_relations()) throw InputError("BadModule", "relations not satisfied");
  return M;
}

ModuleMap zero_map(const Module& M, const Module& N) {
  ModuleMap f;
  for (size_t v = 0; v < M.dim.size(); ++v) f.m.emplace_back(N.dim[v], M.dim[v]);
  return f;
}

ModuleMap identity_map(const Module& M) {
  ModuleMap f;
  for (int d : M.dim) f.m.push_back(Mat::identity(d));
  return f;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap h;
  for (size_t v = 0; v < f.m.size(); ++v) h.m.push_back(g.m[v] * f.m[v]);
  return h;
}

ModuleMap add_maps(const ModuleMap& a, const ModuleMap& b) {
  ModuleMap h;
  for (size_t v = 0; v < a.m.size(); ++v) h.m.push_back(a.m[v] + b.m[v]);
  return h;
}

ModuleMap scale_map(const Q& s, const ModuleMap& a) {
  ModuleMap h = a;
  for (auto& m : h.m)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) *= s;
  return h;
}

bool is_module_map(const Module& M, const Module& N, const ModuleMap& f) {
  for (int a = 0; a < M.alg->num_arrows(); ++a) {
    int s = M.alg->arrows[a].src, t = M.alg->arrows[a].tgt;
    if (!(f.m[t] * M.act[a] == N.act[a] * f.m[s])) return false;
  }
  return true;
}

bool map_is_zero(const ModuleMap& f) {
  for (const auto& m : f.m)
    if (!m.is_zero()) return false;
  return true;
}

bool map_is_injective(const ModuleMap& f) {
  for (const auto& m : f.m)
    if (rank(m) != m.cols()) return false;
  return true;
}

bool map_is_surjective(const ModuleMap& f) {
  for (const auto& m : f.m)
    if (rank(m) != m.rows()) return false;
  return true;
}

bool map_is_iso(const ModuleMap& f) {
  for (const auto& m : f.m)
    if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
  return true;
}

std::optional<ModuleMap> map_inverse(const ModuleMap& f) {
  ModuleMap g;
  for (const auto& m : f.m) {
    if (m.rows() == 0 && m.cols() == 0) {
      g.m.emplace_back(0, 0);
      continue;
    }
    auto inv = inverse(m);
    if (!inv) return std::nullopt;
    g.m.push_back(*inv);
  }
  return g;
}

int flat_size(const Module& M, const Module& N) {
  int s = 0;
  for (size_t v = 0; v < M.dim.size(); ++v) s += M.dim[v] * N.dim[v];
  return s;
}

Vec flatten(const Module& M, const Module& N, const ModuleMap& f) {
  Vec out;
  out.reserve(flat_size(M, N));
  for (size_t v = 0; v < M.dim.size(); ++v)
    for (int i = 0; i < N.dim[v]; ++i)
      for (int j = 0; j < M.dim[v]; ++j) out.push_back(f.m[v](i, j));
  return out;
}

ModuleMap unflatten(const Module& M, const Module& N, const Vec& x) {
  ModuleMap f;
  size_t k = 0;
  for (size_t v = 0; v < M.dim.size(); ++v) {
    Mat m(N.dim[v], M.dim[v]);
    for (int i = 0; i < N.dim[v]; ++i)
      for (int j = 0; j < M.dim[v]; ++j) m(i, j) = x[k++];
    f.m.push_back(m);
  }
  return f;
}

Mat hom_basis(const Module& M, const Module& N) {
  const auto& A = *M.alg;
  const int nv = A.num_vertices();
  std::vector<int> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + M.dim[v] * N.dim[v];
  const int nvar = off[nv];
  std::vector<Vec> rows;
  for (int a = 0; a < A.num_arrows(); ++a) {
    int s = A.arrows[a].src, t = A.arrows[a].tgt;
    // phi_t * M_a - N_a * phi_s = 0, entry (r, c): r < N_t, c < M_s.
    for (int r = 0; r < N.dim[t]; ++r)
      for (int c = 0; c < M.dim[s]; ++c) {
        Vec row(nvar);
        for (int k = 0; k < M.dim[t]; ++k) {
          const Q& x = M.act[a](k, c);
          if (sgn(x) != 0) row[off[t] + r * M.dim[t] + k] += x;
        }
        for (int k = 0; k < N.dim[s]; ++k) {
          const Q& x = N.act[a](r, k);
          if (sgn(x) != 0) row[off[s] + k * M.dim[s] + c] -= x;
        }
        if (!vzero(row)) rows.push_back(std::move(row));
      }
  }
  if (rows.empty()) return Mat::identity(nvar);
  return nullspace(Mat::from_rows(rows, nvar));
}

std::vector<ModuleMap> hom_modules(const Module& M, const Module& N) {
  Mat B = hom_basis(M, N);
  std::vector<ModuleMap> out;
  for (int j = 0; j < B.cols(); ++j) out.push_back(unflatten(M, N, B.col(j)));
  return out;
}

DirectSum direct_sum(AlgebraPtr A, const std::vector<Module>& parts) {
  const int nv = A->num_vertices();
  DirectSum ds;
  ds.sum = zero_module(A);
  std::vector<std::vector<int>> off(parts.size(), std::vector<int>(nv, 0));
  for (int v = 0; v < nv; ++v) {
    int o = 0;
    for (size_t p = 0; p < parts.size(); ++p) {
      off[p][v] = o;
      o += parts[p].dim[v];
    }
    ds.sum.dim[v] = o;
  }
  for (int a = 0; a < A->num_arrows(); ++a) {
    int s = A->arrows[a].src, t = A->arrows[a].tgt;
    Mat m(ds.sum.dim[t], ds.sum.dim[s]);
    for (size_t p = 0; p < parts.size(); ++p) m.set_block(off[p][t], off[p][s], parts[p].act[a]);
    ds.sum.act[a] = m;
  }
  for (size_t p = 0; p < parts.size(); ++p) {
    ModuleMap inc, pr;
    for (int v = 0; v < nv; ++v) {
      Mat i(ds.sum.dim[v], parts[p].dim[v]), q(parts[p].dim[v], ds.sum.dim[v]);
      for (int k = 0; k < parts[p].dim[v]; ++k) {
        i(off[p][v] + k, k) = 1;
        q(k, off[p][v] + k) = 1;
      }
      inc.m.push_back(i);
      pr.m.push_back(q);
    }
    ds.incl.push_back(inc);
    ds.proj.push_back(pr);
  }
  return ds;
}

namespace {

// Submodule spanned per vertex by the columns of `basis`, which must be
// closed under the action.
SubModule submodule_from_basis(const Module& M, const std::vector<Mat>& basis) {
  const auto& A = *M.alg;
  SubModule S;
  S.sub = zero_module(M.alg);
  for (int v = 0; v < A.num_vertices(); ++v) S.sub.dim[v] = basis[v].cols();
  for (int a = 0; a < A.num_arrows(); ++a) {
    int s = A.arrows[a].src, t = A.arrows[a].tgt;
    if (basis[s].cols() == 0 || basis[t].cols() == 0) {
      S.sub.act[a] = Mat(basis[t].cols(), basis[s].cols());
      continue;
    }
    auto x = solve(basis[t], M.act[a] * basis[s]);
    if (!x) throw Error("InternalError", "subspace not closed under the action");
    S.sub.act[a] = *x;
  }
  for (int v = 0; v < A.num_vertices(); ++v) S.incl.m.push_back(basis[v]);
  // Fix shapes for empty bases.
  for (int v = 0; v < A.num_vertices(); ++v)
    if (basis[v].cols() == 0) S.incl.m[v] = Mat(M.dim[v], 0);
  return S;
}

}  // namespace

SubModule kernel(const Module& M, const Module& N, const ModuleMap& f) {
  (void)N;
  std::vector<Mat> basis;
  for (size_t v = 0; v < M.dim.size(); ++v) {
    if (M.dim[v] == 0) {
      basis.emplace_back(0, 0);
      continue;
    }
    basis.push_back(f.m[v].rows() == 0 ? Mat::identity(M.dim[v]) : nullspace(f.m[v]));
  }
  return submodule_from_basis(M, basis);
}

SubModule image(const Module& M, const Module& N, const ModuleMap& f) {
  (void)M;
  std::vector<Mat> basis;
  for (size_t v = 0; v < N.dim.size(); ++v) {
    if (f.m[v].cols() == 0) {
      basis.emplace_back(N.dim[v], 0);
      continue;
    }
    basis.push_back(colspace(f.m[v]));
  }
  return submodule_from_basis(N, basis);
}

QuotModule cokernel(const Module& M, const Module& N, const ModuleMap& f) {
  (void)M;
  const auto& A = *N.alg;
  const int nv = A.num_vertices();
  std::vector<Mat> pi(nv), sec(nv);
  QuotModule Q;
  Q.quot = zero_module(N.alg);
  for (int v = 0; v < nv; ++v) {
    if (N.dim[v] == 0) {
      pi[v] = Mat(0, 0);
      sec[v] = Mat(0, 0);
      continue;
    }
    Mat img = f.m[v].cols() == 0 ? Mat(N.dim[v], 0) : colspace(f.m[v]);
    pi[v] = left_annihilator(img);
    if (pi[v].rows() == 0) pi[v] = Mat(0, N.dim[v]);
    Q.quot.dim[v] = pi[v].rows();
    if (pi[v].rows() > 0)
      sec[v] = *solve(pi[v], Mat::identity(pi[v].rows()));
    else
      sec[v] = Mat(N.dim[v], 0);
  }
  for (int a = 0; a < A.num_arrows(); ++a) {
    int s = A.arrows[a].src, t = A.arrows[a].tgt;
    if (Q.quot.dim[s] == 0 || Q.quot.dim[t] == 0) {
      Q.quot.act[a] = Mat(Q.quot.dim[t], Q.quot.dim[s]);
      continue;
    }
    Q.quot.act[a] = pi[t] * N.act[a] * sec[s];
  }
  for (int v = 0; v < nv; ++v) Q.proj.m.push_back(pi[v].rows() == 0 ? Mat(0, N.dim[v]) : pi[v]);
  return Q;
}

std::vector<Mat> top_basis(const Module& M) {
  const auto& A = *M.alg;
  std::vector<Mat> out;
  for (int v = 0; v < A.num_vertices(); ++v) {
    Mat rad(M.dim[v], 0);
    for (int a = 0; a < A.num_arrows(); ++a)
      if (A.arrows[a].tgt == v && M.act[a].cols() > 0) rad = Mat::hcat(rad, M.act[a]);
    out.push_back(complement_basis(rad, M.dim[v]));
  }
  return out;
}

std::vector<Mat> socle_basis(const Module& M) {
  const auto& A = *M.alg;
  std::vector<Mat> out;
  for (int v = 0; v < A.num_vertices(); ++v) {
    Mat stack(0, M.dim[v]);
    for (int a = 0; a < A.num_arrows(); ++a)
      if (A.arrows[a].src == v && M.act[a].rows() > 0) stack = Mat::vcat(stack, M.act[a]);
    if (M.dim[v] == 0)
      out.emplace_back(0, 0);
    else
      out.push_back(stack.rows() == 0 ? Mat::identity(M.dim[v]) : nullspace(stack));
  }
  return out;
}

Cover proj_cover(const Module& M) {
  const auto& A = *M.alg;
  const int nv = A.num_vertices();
  auto tops = top_basis(M);
  std::vector<Module> parts;
  std::vector<std::pair<int, Vec>> gens;
  for (int v = 0; v < nv; ++v)
    for (int k = 0; k < tops[v].cols(); ++k) {
      parts.push_back(projective_module(M.alg, v));
      gens.emplace_back(v, tops[v].col(k));
    }
  DirectSum ds = direct_sum(M.alg, parts);
  ModuleMap f;
  for (int w = 0; w < nv; ++w) {
    Mat m(M.dim[w], ds.sum.dim[w]);
    int col = 0;
    for (const auto& [v, g] : gens) {
      for (int b : A.paths_between(v, w)) {
        Vec img = M.path_action(v, A.basis()[b].arrows) * g;
        m.set_col(col++, img);
      }
    }
    f.m.push_back(m);
  }
  return Cover{ds.sum, f};
}

Cover inj_hull(const Module& M) {
  const auto& A = *M.alg;
  const int nv = A.num_vertices();
  auto soc = socle_basis(M);
  std::vector<Module> parts;
  std::vector<std::pair<int, Vec>> funcs;  // (vertex, functional on M_v)
  for (int v = 0; v < nv; ++v) {
    if (soc[v].cols() == 0) continue;
    Mat full = Mat::hcat(soc[v], complement_basis(soc[v], M.dim[v]));
    Mat inv = *inverse(full);
    for (int k = 0; k < soc[v].cols(); ++k) {
      parts.push_back(injective_module(M.alg, v));
      funcs.emplace_back(v, inv.row(k));
    }
  }
  DirectSum ds = direct_sum(M.alg, parts);
  ModuleMap f;
  for (int w = 0; w < nv; ++w) {
    Mat m(ds.sum.dim[w], M.dim[w]);
    int row = 0;
    for (const auto& [v, lam] : funcs) {
      for (int b : A.paths_between(w, v)) {
        Mat act = M.path_action(w, A.basis()[b].arrows);  // M_w -> M_v
        Mat lrow = Mat::from_rows({lam}, M.dim[v]) * act;
        for (int j = 0; j < M.dim[w]; ++j) m(row, j) = lrow(0, j);
        ++row;
      }
    }
    f.m.push_back(m);
  }
  return Cover{ds.sum, f};
}

Module syzygy(const Module& M) {
  if (!M.alg->self_injective()) throw Error("NotSelfInjective", "syzygy requires a self-injective algebra");
  Cover c = proj_cover(M);
  return kernel(c.P, M, c.map).sub;
}

Module cosyzygy(const Module& M) {
  if (!M.alg->self_injective()) throw Error("NotSelfInjective", "cosyzygy requires a self-injective algebra");
  Cover c = inj_hull(M);
  return cokernel(M, c.P, c.map).quot;
}

Module nakayama(const Module& M) {
  const auto& A = *M.alg;
  if (!A.self_injective()) throw Error("NotSelfInjective", "Nakayama functor requires a self-injective algebra");
  const int nv = A.num_vertices();
  std::vector<Module> P;
  std::vector<Mat> H;
  for (int v = 0; v < nv; ++v) {
    P.push_back(projective_module(M.alg, v));
    H.push_back(hom_basis(M, P.back()));
  }
  Module N = zero_module(M.alg);
  for (int v = 0; v < nv; ++v) N.dim[v] = H[v].cols();
  for (int a = 0; a < A.num_arrows(); ++a) {
    int v = A.arrows[a].src, v2 = A.arrows[a].tgt;
    // Left multiplication by the arrow: P_{v2} -> P_v.
    int ab = arrow_basis_index(A, a);
    ModuleMap ell;
    for (int w = 0; w < nv; ++w) {
      const auto& from = A.paths_between(v2, w);
      const auto& to = A.paths_between(v, w);
      Mat m(static_cast<int>(to.size()), static_cast<int>(from.size()));
      for (size_t j = 0; j < from.size(); ++j) {
        const Vec& prod = A.mult(ab, from[j]);
        for (size_t i = 0; i < to.size(); ++i) m(static_cast<int>(i), static_cast<int>(j)) = prod[to[i]];
      }
      ell.m.push_back(m);
    }
    Mat K(H[v].cols(), H[v2].cols());
    for (int j = 0; j < H[v2].cols(); ++j) {
      ModuleMap h = unflatten(M, P[v2], H[v2].col(j));
      Vec img = flatten(M, P[v], compose(ell, h));
      auto c = solve(H[v], img);
      if (!c) throw Error("InternalError", "Nakayama functor: image not in Hom space");
      for (int i = 0; i < H[v].cols(); ++i) K(i, j) = (*c)[i];
    }
    N.act[a] = K.transpose();
  }
  return N;
}

Mat end_radical(const Module& M, const Mat& E) {
  const int k = E.cols();
  std::vector<ModuleMap> maps;
  for (int j = 0; j < k; ++j) maps.push_back(unflatten(M, M, E.col(j)));
  Mat G(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      Q tr = 0;
      for (size_t v = 0; v < M.dim.size(); ++v) {
        const Mat& x = maps[a].m[v];
        const Mat& y = maps[b].m[v];
        for (int i = 0; i < x.rows(); ++i)
          for (int l = 0; l < x.cols(); ++l) tr += x(i, l) * y(l, i);
      }
      G(a, b) = tr;
      G(b, a) = tr;
    }
  Mat coeffs = nullspace(G);
  return E * coeffs;
}

bool is_indecomposable(const Module& M) {
  if (M.total_dim() == 0) return false;
  Mat E = hom_basis(M, M);
  Mat R = end_radical(M, E);
  return E.cols() - R.cols() == 1;
}

bool is_projective_indec(const Module& M) {
  auto tops = top_basis(M);
  int total = 0, at = -1;
  for (size_t v = 0; v < tops.size(); ++v)
    if (tops[v].cols() > 0) {
      total += tops[v].cols();
      at = static_cast<int>(v);
    }
  if (total != 1) return false;
  return projective_module(M.alg, at).total_dim() == M.total_dim();
}

std::optional<ModuleMap> find_iso(const Module& M, const Module& N) {
  if (M.dim != N.dim) return std::nullopt;
  if (M.total_dim() == 0) return identity_map(M);
  Mat H = hom_basis(M, N);
  Mat K = hom_basis(N, M);
  if (H.cols() == 0 || K.cols() == 0) return std::nullopt;
  // Cheap attempt first: a generic map.
  Rng rng(0x1507);
  for (int attempt = 0; attempt < 3; ++attempt) {
    Vec c = rng.random_vec(H.cols());
    ModuleMap u = unflatten(M, N, H * c);
    if (map_is_iso(u)) return u;
  }
  // Exact certificate for indecomposable M: some basis map u has v u outside
  // rad End(M), and then u is an isomorphism.
  Mat E = hom_basis(M, M);
  Mat R = end_radical(M, E);
  for (int a = 0; a < H.cols(); ++a) {
    ModuleMap u = unflatten(M, N, H.col(a));
    for (int b = 0; b < K.cols(); ++b) {
      ModuleMap v = unflatten(N, M, K.col(b));
      Vec vu = flatten(M, M, compose(v, u));
      if (!in_span(R, vu)) {
        if (map_is_iso(u)) return u;
      }
    }
  }
  return std::nullopt;
}

namespace {

// Restricts M to complementary submodules given by per-vertex bases.
std::vector<Summand> split_by_bases(const Module& M, const std::vector<Mat>& b1, const std::vector<Mat>& b2) {
  const int nv = static_cast<int>(M.dim.size());
  SubModule s1 = submodule_from_basis(M, b1);
  SubModule s2 = submodule_from_basis(M, b2);
  ModuleMap p1, p2;
  for (int v = 0; v < nv; ++v) {
    int k1 = b1[v].cols(), k2 = b2[v].cols();
    if (M.dim[v] == 0) {
      p1.m.emplace_back(0, 0);
      p2.m.emplace_back(0, 0);
      continue;
    }
    Mat full = Mat::hcat(b1[v].cols() ? b1[v] : Mat(M.dim[v], 0), b2[v].cols() ? b2[v] : Mat(M.dim[v], 0));
    Mat inv = *inverse(full);
    p1.m.push_back(k1 ? inv.block(0, 0, k1, M.dim[v]) : Mat(0, M.dim[v]));
    p2.m.push_back(k2 ? inv.block(k1, 0, k2, M.dim[v]) : Mat(0, M.dim[v]));
  }
  return {Summand{s1.sub, s1.incl, p1}, Summand{s2.sub, s2.incl, p2}};
}

// Fitting decomposition for psi: M = ker psi^N (+) im psi^N.
std::optional<std::vector<Summand>> fitting_split(const Module& M, const ModuleMap& psi) {
  const int nv = static_cast<int>(M.dim.size());
  const int N = M.total_dim();
  std::vector<Mat> kb(nv), ib(nv);
  int kt = 0, it = 0;
  for (int v = 0; v < nv; ++v) {
    if (M.dim[v] == 0) {
      kb[v] = Mat(0, 0);
      ib[v] = Mat(0, 0);
      continue;
    }
    Mat p = Mat::identity(M.dim[v]);
    for (int k = 0; k < N; ++k) p = psi.m[v] * p;
    kb[v] = nullspace(p);
    ib[v] = colspace(p);
    kt += kb[v].cols();
    it += ib[v].cols();
  }
  if (kt == 0 || it == 0) return std::nullopt;
  return split_by_bases(M, kb, ib);
}

// Best rational approximation with bounded denominator.
Q rational_approx(double x, long maxden) {
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int it = 0; it < 40; ++it) {
    double a = std::floor(r);
    long ai = static_cast<long>(a);
    long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > maxden) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = r - a;
    if (std::abs(frac) < 1e-12) break;
    r = 1.0 / frac;
  }
  if (q1 == 0) return Q(static_cast<long>(std::llround(x)));
  return Q(p1, q1);
}

std::vector<Q> eigen_candidates(const ModuleMap& phi);

std::vector<Summand> decompose_rec(const Module& M, int depth);

std::vector<Summand> compose_summands(const Summand& outer, const std::vector<Summand>& inner) {
  std::vector<Summand> out;
  for (const auto& s : inner) out.push_back(Summand{s.mod, compose(outer.incl, s.incl), compose(s.proj, outer.proj)});
  return out;
}

std::optional<std::vector<Summand>> try_split(const Module& M) {
  Mat E = hom_basis(M, M);
  Mat R = end_radical(M, E);
  if (E.cols() - R.cols() <= 1) return std::nullopt;
  // Split off a projective summand if there is one: P_v is a summand iff some
  // composite P_v -> M -> P_v is invertible.
  for (int v = 0; v < M.alg->num_vertices(); ++v) {
    Module P = projective_module(M.alg, v);
    if (P.total_dim() > M.total_dim()) continue;
    Mat H = hom_basis(P, M);
    Mat K = hom_basis(M, P);
    for (int a = 0; a < H.cols(); ++a)
      for (int b = 0; b < K.cols(); ++b) {
        ModuleMap u = unflatten(P, M, H.col(a));
        ModuleMap w = unflatten(M, P, K.col(b));
        ModuleMap wu = compose(w, u);
        if (!map_is_iso(wu)) continue;
        ModuleMap e = compose(u, compose(*map_inverse(wu), w));  // idempotent
        auto s = fitting_split(M, e);
        if (s) return s;
      }
  }
  // Fitting splitting with endomorphisms having rational eigenvalues.
  Rng rng(0xdec0);
  std::vector<ModuleMap> cands;
  for (int j = 0; j < E.cols(); ++j) cands.push_back(unflatten(M, M, E.col(j)));
  for (int t = 0; t < 40; ++t) {
    Vec c(E.cols());
    for (auto& x : c) x = rng.small_int(-1, 2) < 1 ? Q(0) : rng.small_q();
    cands.push_back(unflatten(M, M, E * c));
  }
  for (const auto& phi : cands) {
    for (const Q& lam : eigen_candidates(phi)) {
      ModuleMap psi = phi;
      for (auto& m : psi.m)
        for (int i = 0; i < m.rows(); ++i) m(i, i) -= lam;
      auto s = fitting_split(M, psi);
      if (s) return s;
    }
  }
  throw Error("NonSplitField", "could not split module with dimension vector " + M.dim_vector());
}

std::vector<Summand> decompose_rec(const Module& M, int depth) {
  if (M.total_dim() == 0) return {};
  auto parts = try_split(M);
  if (!parts) return {Summand{M, identity_map(M), identity_map(M)}};
  std::vector<Summand> out;
  for (const auto& p : *parts) {
    auto sub = decompose_rec(p.mod, depth + 1);
    auto lifted = compose_summands(p, sub);
    out.insert(out.end(), lifted.begin(), lifted.end());
  }
  return out;
}

}  // namespace
}  // namespace rmw

#include <Eigen/Dense>

namespace rmw {
namespace {

std::vector<Q> eigen_candidates(const ModuleMap& phi) {
  std::vector<Q> out;
  for (const auto& m : phi.m) {
    if (m.rows() == 0) continue;
    Eigen::MatrixXd d(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> es(d, false);
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
      auto ev = es.eigenvalues()[i];
      if (std::abs(ev.imag()) > 1e-6) continue;
      Q c = rational_approx(ev.real(), 2000);
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::vector<Summand> decompose(const Module& M) { return decompose_rec(M, 0); }

std::vector<IsoClass> decompose_classes(const Module& M) {
  std::vector<IsoClass> out;
  for (const auto& s : decompose(M)) {
    bool found = false;
    for (auto& c : out)
      if (find_iso(c.rep, s.mod)) {
        ++c.multiplicity;
        found = true;
        break;
      }
    if (!found) out.push_back(IsoClass{s.mod, 1});
  }
  return out;
}

Module strip_projectives(const Module& M) {
  std::vector<Module> keep;
  for (const auto& s : decompose(M))
    if (!is_projective_indec(s.mod)) keep.push_back(s.mod);
  if (keep.empty()) return zero_module(M.alg);
  if (keep.size() == 1) return keep[0];
  return direct_sum(M.alg, keep).sum;
}

}  // namespace rmw
