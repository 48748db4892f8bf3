#include "subpat/verify.hpp"

#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "subpat/bases.hpp"
#include "subpat/cache.hpp"
#include "subpat/catalog.hpp"
#include "subpat/classes.hpp"
#include "subpat/containment.hpp"
#include "subpat/polygeo.hpp"
#include "subpat/shape.hpp"
#include "subpat/wilfkit.hpp"

namespace subpat {

namespace cat = catalog;

bool SuiteReport::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return !checks.empty();
}

namespace {

std::string one_line(const BinaryMatrix& m) {
  std::string s = m.to_text();
  for (auto& ch : s) {
    if (ch == '\n') ch = '/';
  }
  return s;
}

std::string join_counts(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string rank_bound(int r) { return "rank<=" + std::to_string(r); }
std::string size_bound(int n) { return "size<=" + std::to_string(n); }

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::vector<BinaryMatrix> perm_matrices(std::initializer_list<const char*> ps) { return cat::perms(ps); }

std::set<std::string> compact_set(const std::vector<Permutation>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(p.to_compact());
  return out;
}

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ",") + x;
  return out;
}

// Geometric predicate against avoidance over every polyomino up to max_rank.
CheckResult equivalence(const std::string& id, int max_rank, int shards,
                        const std::function<bool(const BinaryMatrix&)>& geometric,
                        const std::vector<BinaryMatrix>& basis) {
  CheckResult out;
  out.id = id;
  out.bound = rank_bound(max_rank);
  std::uint64_t bad = 0;
  std::uint64_t inside = 0;
  std::optional<BinaryMatrix> first;
  GenerateOptions opts;
  opts.shards = shards;
  for (int r = min_rank(GroundSet::Polyominoes); r <= max_rank; ++r) {
    for_each_element(GroundSet::Polyominoes, r, [&](const BinaryMatrix& x) {
      ++out.checked;
      const bool g = geometric(x);
      if (g) ++inside;
      if (g != avoids_all(basis, x)) {
        if (!first) first = x;
        ++bad;
      }
    }, opts);
  }
  out.pass = bad == 0;
  out.details.emplace_back("members", std::to_string(inside));
  out.details.emplace_back("discrepancies", std::to_string(bad));
  if (first) out.details.emplace_back("first", one_line(*first));
  return out;
}

CheckResult witness_check(const std::string& id, int bound, const std::optional<WitnessPair>& w,
                          const std::function<bool(const BinaryMatrix&)>& host_ok,
                          const std::function<bool(const BinaryMatrix&)>& sub_ok) {
  CheckResult out;
  out.id = id;
  out.bound = rank_bound(bound);
  if (!w) {
    out.details.emplace_back("witness", "none");
    return out;
  }
  out.checked = 1;
  const auto e = find_embedding(w->host, w->sub);
  const bool embedded = e && is_valid_embedding(w->host, w->sub, *e) && !(w->host == w->sub);
  out.pass = embedded && is_polyomino(w->host) && is_polyomino(w->sub) && host_ok(w->host) && sub_ok(w->sub);
  out.details.emplace_back("host", one_line(w->host));
  out.details.emplace_back("sub", one_line(w->sub));
  return out;
}

SuiteReport suite_convex(const SuiteOptions& o) {
  SuiteReport r{"convex", 1, {}};
  const int rank = o.max_rank > 0 ? o.max_rank : 9;
  r.checks.push_back(equivalence("convex-vs-avoidance", rank, o.shards,
                                 [](const BinaryMatrix& x) { return is_convex(x); }, cat::convex_basis()));
  // The extra canonical obstruction: outside the class closure, every proper
  // submatrix inside it.
  CheckResult extra;
  extra.id = "extra-obstruction-canonical";
  const int host_rank = 12;
  extra.bound = rank_bound(host_rank);
  const auto a = cat::convex_extra_obstruction();
  const bool no_host = !find_convex_host(a, host_rank).has_value();
  bool subs_hosted = true;
  std::set<BinaryMatrix> subs;
  const int R = a.rows();
  const int C = a.cols();
  for (int rs = 1; rs < (1 << R); ++rs) {
    for (int cs = 1; cs < (1 << C); ++cs) {
      if (rs == (1 << R) - 1 && cs == (1 << C) - 1) continue;
      std::vector<int> rows;
      std::vector<int> cols;
      for (int i = 0; i < R; ++i) {
        if ((rs >> i) & 1) rows.push_back(i + 1);
      }
      for (int j = 0; j < C; ++j) {
        if ((cs >> j) & 1) cols.push_back(j + 1);
      }
      subs.insert(a.submatrix(rows, cols));
    }
  }
  for (const auto& s : subs) {
    if (!find_convex_host(s, host_rank)) subs_hosted = false;
  }
  extra.checked = subs.size() + 1;
  extra.pass = no_host && subs_hosted;
  extra.details.emplace_back("matrix", one_line(a));
  extra.details.emplace_back("convex_host_found", no_host ? "no" : "yes");
  extra.details.emplace_back("proper_submatrices_hosted", subs_hosted ? "all" : "not-all");
  r.checks.push_back(extra);
  return r;
}

SuiteReport suite_directed_convex(const SuiteOptions& o) {
  SuiteReport r{"directed-convex", 1, {}};
  const int rank = o.max_rank > 0 ? o.max_rank : 9;
  r.checks.push_back(equivalence("directed-convex-vs-avoidance", rank, o.shards,
                                 [](const BinaryMatrix& x) { return is_directed_convex(x); },
                                 cat::directed_convex_basis()));
  r.checks.push_back(witness_check("directed-not-a-class", rank, find_directed_non_class_witness(rank),
                                   [](const BinaryMatrix& x) { return is_directed(x); },
                                   [](const BinaryMatrix& x) { return !is_directed(x); }));
  return r;
}

SuiteReport suite_parallelogram(const SuiteOptions& o) {
  SuiteReport r{"parallelogram", 1, {}};
  const int rank = o.max_rank > 0 ? o.max_rank : 9;
  r.checks.push_back(equivalence("parallelogram-vs-avoidance", rank, o.shards,
                                 [](const BinaryMatrix& x) { return is_parallelogram(x); }, cat::parallelogram_basis()));
  CheckResult unique;
  unique.id = "p-basis-is-unique-minimal-m-basis";
  const int rmax = 7;
  unique.bound = rank_bound(rmax);
  const ClassSpec c(GroundSet::Polyominoes, cat::parallelogram_basis());
  const auto res = p_basis_is_minimal_m_basis(c, rmax);
  const auto canonical = canonical_m_basis(c, default_dmax(GroundSet::Polyominoes), default_plus_budget(GroundSet::Polyominoes));
  const auto minimal = minimal_m_bases(c, canonical, rmax);
  unique.checked = res.basis.members.size();
  unique.pass = res.minimal && minimal.size() == 1 && minimal.front().members == res.basis.members;
  unique.details.emplace_back("p_basis_size", std::to_string(res.basis.members.size()));
  unique.details.emplace_back("minimal_m_bases", std::to_string(minimal.size()));
  r.checks.push_back(unique);
  return r;
}

SuiteReport suite_lconvex(const SuiteOptions& o) {
  SuiteReport r{"lconvex", 1, {}};
  const int rank = o.max_rank > 0 ? o.max_rank : 9;
  r.checks.push_back(equivalence("lconvex-vs-avoidance", rank, o.shards,
                                 [](const BinaryMatrix& x) {
                                   const auto d = convexity_degree(x);
                                   return d && *d <= 1;
                                 },
                                 cat::lconvex_basis()));
  const int wrank = 12;
  r.checks.push_back(witness_check("two-convex-not-a-class", wrank, find_two_convex_non_class_witness(wrank),
                                   [](const BinaryMatrix& x) {
                                     const auto d = convexity_degree(x);
                                     return d && *d <= 2;
                                   },
                                   [](const BinaryMatrix& x) { return convexity_degree(x) == 3; }));
  return r;
}

SuiteReport suite_lpolyomino(const SuiteOptions& o) {
  SuiteReport r{"lpolyomino", 1, {}};
  const int rank = o.max_rank > 0 ? o.max_rank : 9;
  r.checks.push_back(equivalence("comparable-rows-columns-vs-avoidance", rank, o.shards,
                                 [](const BinaryMatrix& x) { return rows_columns_comparable(x); },
                                 cat::lpolyomino_basis()));
  return r;
}

SuiteReport suite_cprime(const SuiteOptions& o) {
  SuiteReport r{"cprime", 1, {}};
  const int rank = o.max_rank > 0 ? o.max_rank : 9;
  r.checks.push_back(equivalence("boundary-contact-vs-avoidance", rank, o.shards,
                                 [](const BinaryMatrix& x) { return boundary_contact(x); }, cat::cprime_basis()));
  const int size = o.max_size > 0 ? o.max_size : 4;
  CheckResult emb;
  emb.id = "permutation-embedding";
  emb.bound = size_bound(size);
  emb.pass = true;
  std::vector<std::uint64_t> per_size;
  for (int m = 1; m <= size; ++m) {
    std::set<BinaryMatrix> images;
    std::uint64_t valid = 0;
    for (const auto& p : all_permutations(m)) {
      const auto img = embed_permutation_in_c_prime(p);
      ++emb.checked;
      if (img.rows() == 2 * m && img.cols() == 2 * m && is_polyomino(img) && in_c_prime(img) &&
          boundary_contact(img)) {
        ++valid;
      } else {
        emb.pass = false;
      }
      images.insert(img);
    }
    if (images.size() != all_permutations(m).size() || valid != images.size()) emb.pass = false;
    per_size.push_back(images.size());
  }
  emb.details.emplace_back("distinct_images", join_counts(per_size));
  r.checks.push_back(emb);
  return r;
}

SuiteReport suite_ryser(const SuiteOptions& o) {
  SuiteReport r{"ryser", 1, {}};
  const int size = o.max_size > 0 ? std::min(o.max_size, 5) : 4;
  CheckResult eq;
  eq.id = "unique-projections-vs-switch-avoidance";
  eq.bound = "box<=" + std::to_string(size) + "x" + std::to_string(size);
  std::uint64_t unique = 0;
  std::uint64_t bad = 0;
  const std::vector<BinaryMatrix> switches{cat::switch_main(), cat::switch_anti()};
  for (int rows = 1; rows <= size; ++rows) {
    for (int cols = 1; cols <= size; ++cols) {
      for_each_in_box(GroundSet::BinaryMatrices, rows, cols, [&](const BinaryMatrix& m) {
        ++eq.checked;
        const bool u = is_unique_for_projections(m);
        if (u) ++unique;
        if (u != avoids_all(switches, m)) ++bad;
      });
    }
  }
  eq.pass = bad == 0;
  eq.details.emplace_back("unique", std::to_string(unique));
  eq.details.emplace_back("discrepancies", std::to_string(bad));
  r.checks.push_back(eq);

  CheckResult lp;
  lp.id = "lconvex-determined-by-projections";
  const int rank = 8;
  lp.bound = rank_bound(rank) + ",box<=5x5";
  lp.pass = true;
  const ClassSpec lconvex(GroundSet::Polyominoes, cat::lconvex_basis());
  for (int rr = 2; rr <= rank; ++rr) {
    for_each_member(lconvex, rr, [&](const BinaryMatrix& x) {
      if (x.rows() > 5 || x.cols() > 5) return;
      ++lp.checked;
      if (!is_unique_for_projections(x)) lp.pass = false;
    });
  }
  r.checks.push_back(lp);
  return r;
}

SuiteReport suite_infinite_basis(const SuiteOptions& o) {
  SuiteReport r{"infinite-basis", 1, {}};
  const int top = o.max_rank > 0 ? o.max_rank : 14;
  const int exact = top - 4;
  const int mid = top - 2;
  if (exact < 2) throw std::invalid_argument("infinite-basis needs --max-rank of at least 6");
  const std::vector<BinaryMatrix> seed{cat::infinite_basis_seed()};
  const ClassSpec c(GroundSet::Polyominoes, seed);
  const auto pb = p_basis(c, exact, o.shards);

  CheckResult base;
  base.id = "exhaustive-p-basis";
  base.bound = rank_bound(exact);
  base.checked = pb.members.size();
  base.pass = pb.members.antichain_verified();
  std::map<int, std::uint64_t> by_rank;
  for (const auto& m : pb.members) ++by_rank[m.rank()];
  std::vector<std::uint64_t> counts;
  for (const auto& [rk, n] : by_rank) counts.push_back(n);
  base.details.emplace_back("count", std::to_string(pb.members.size()));
  base.details.emplace_back("per_rank", join_counts(counts));
  r.checks.push_back(base);

  // Family members inside the exhaustive range must show up there.
  CheckResult family;
  family.id = "staircase-family-consistent";
  family.bound = rank_bound(exact);
  family.pass = true;
  for (int rk = 2; rk <= exact; ++rk) {
    for (const auto& x : staircase_candidates(rk)) {
      ++family.checked;
      if (is_p_basis_element(GroundSet::Polyominoes, seed, x) != pb.members.contains(x)) family.pass = false;
    }
  }
  r.checks.push_back(family);

  std::uint64_t lower = pb.members.size();
  std::vector<std::uint64_t> bounds{lower};
  bool growing = true;
  for (auto [lo, hi] : {std::pair{exact, mid}, std::pair{mid, top}}) {
    CheckResult w;
    w.id = "witness-above-rank-" + std::to_string(lo);
    w.bound = rank_bound(hi);
    std::uint64_t found = 0;
    for (int rk = lo + 1; rk <= hi; ++rk) {
      for (const auto& x : staircase_candidates(rk)) {
        ++w.checked;
        if (is_p_basis_element(GroundSet::Polyominoes, seed, x)) {
          if (found == 0) w.details.emplace_back("first", one_line(x));
          ++found;
        }
      }
    }
    w.pass = found > 0;
    growing = growing && w.pass;
    lower += found;
    bounds.push_back(lower);
    w.details.emplace_back("validated", std::to_string(found));
    r.checks.push_back(w);
  }
  CheckResult grow;
  grow.id = "p-basis-strictly-growing";
  grow.bound = rank_bound(exact) + "," + rank_bound(mid) + "," + rank_bound(top);
  grow.checked = 3;
  grow.pass = growing;
  grow.details.emplace_back("counts", join_counts(bounds));
  grow.details.emplace_back("first_exact_rest_lower_bounds", "yes");
  r.checks.push_back(grow);
  return r;
}

CheckResult minimal_perms_check(const std::string& id, const BinaryMatrix& m, std::set<std::string> expected) {
  CheckResult out;
  out.id = id;
  out.bound = "exact";
  const auto got = compact_set(minimal_perms_containing(m));
  out.checked = got.size();
  out.pass = got == expected;
  out.details.emplace_back("perms", join(got));
  return out;
}

CheckResult same_members_check(const std::string& id, const ClassSpec& a, const ClassSpec& b, int n) {
  CheckResult out;
  out.id = id;
  out.bound = size_bound(n);
  const auto cmp = equal_classes(a, b, n);
  out.checked = static_cast<std::uint64_t>(cmp.verified_upto);
  out.pass = cmp.equal;
  if (cmp.witness) out.details.emplace_back("differs_at", one_line(*cmp.witness));
  return out;
}

SuiteReport suite_perm_f(const SuiteOptions& o) {
  SuiteReport r{"perm-f", 1, {}};
  const int n = o.max_size > 0 ? o.max_size : 8;
  const ClassSpec f(GroundSet::Permutations, {cat::m_f()});
  const ClassSpec classic(GroundSet::Permutations, perm_matrices({"123", "132", "213"}));
  r.checks.push_back(same_members_check("mf-equals-classical-basis", f, classic, n));
  CheckResult fib;
  fib.id = "fibonacci-recurrence";
  fib.bound = size_bound(n);
  const auto seq = count_sequence(f, n, {o.shards, n, std::nullopt}).counts();
  fib.checked = seq.size();
  fib.pass = seq.size() >= 2 && seq[0] == 1 && seq[1] == 2;
  for (std::size_t i = 2; i < seq.size(); ++i) {
    if (seq[i] != seq[i - 1] + seq[i - 2]) fib.pass = false;
  }
  fib.details.emplace_back("counts", join_counts(seq));
  r.checks.push_back(fib);
  r.checks.push_back(minimal_perms_check("minimal-perms-containing-mf", cat::m_f(), {"123", "132", "213"}));
  return r;
}

SuiteReport suite_perm_g(const SuiteOptions& o) {
  SuiteReport r{"perm-g", 1, {}};
  const int n = o.max_size > 0 ? o.max_size : 8;
  const ClassSpec g(GroundSet::Permutations, perm_matrices({"123", "132", "231"}));
  CheckResult cnt;
  cnt.id = "count-equals-size";
  cnt.bound = size_bound(n);
  const auto seq = count_sequence(g, n, {o.shards, n, std::nullopt}).counts();
  cnt.checked = seq.size();
  cnt.pass = true;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] != i + 1) cnt.pass = false;
  }
  cnt.details.emplace_back("counts", join_counts(seq));
  r.checks.push_back(cnt);
  r.checks.push_back(
      same_members_check("mg-equals-classical-basis", ClassSpec(GroundSet::Permutations, {cat::m_g()}), g, n));
  r.checks.push_back(minimal_perms_check("minimal-perms-containing-mg", cat::m_g(), {"123", "132", "231"}));
  return r;
}

SuiteReport suite_perm_hjk(const SuiteOptions& o) {
  SuiteReport r{"perm-hjk", 1, {}};
  const int n = o.max_size > 0 ? o.max_size : 7;
  const std::vector<std::pair<std::string, BinaryMatrix>> named{
      {"h", cat::m_h()}, {"j", cat::m_j()}, {"k", cat::m_k()}};
  const std::vector<std::pair<const char*, BinaryMatrix>> bordered{
      {"123", cat::m_h()}, {"132", cat::m_j()}, {"213", cat::m_k()}};
  CheckResult b;
  b.id = "top-bordered-identities";
  b.bound = "exact";
  b.pass = true;
  for (const auto& [tau, m] : bordered) {
    ++b.checked;
    if (border(Permutation::parse(tau), BorderSide::Top) != m) b.pass = false;
  }
  r.checks.push_back(b);
  for (const auto& [name, m] : named) {
    CheckResult c;
    c.id = "count-" + name + "-central-binomial";
    c.bound = size_bound(n);
    const auto seq = count_sequence(ClassSpec(GroundSet::Permutations, {m}), n, {o.shards, n, std::nullopt}).counts();
    c.checked = seq.size();
    c.pass = true;
    for (int k = 2; k <= n; ++k) {
      if (seq[static_cast<std::size_t>(k - 1)] != binomial(2 * k - 2, k - 1)) c.pass = false;
    }
    c.details.emplace_back("counts", join_counts(seq));
    r.checks.push_back(c);
  }
  return r;
}

SuiteReport suite_wilf(const SuiteOptions& o) {
  SuiteReport r{"wilf", 1, {}};
  const int n = o.max_size > 0 ? o.max_size : 7;
  const CountOptions copts{o.shards, n, std::nullopt};
  const std::vector<Permutation> b1{Permutation::parse("123")};
  const std::vector<Permutation> b2{Permutation::parse("132")};
  const auto rep = check_wilf_equivalence(b1, b2, n, copts);
  CheckResult eq;
  eq.id = "eight-bordered-classes-agree";
  eq.bound = size_bound(n);
  eq.checked = rep.sequences.size();
  eq.pass = rep.all_equal && rep.sequences.size() == 8;
  r.checks.push_back(eq);
  CheckResult formula;
  formula.id = "n-times-catalan";
  formula.bound = size_bound(n);
  formula.pass = true;
  for (const auto& s : rep.sequences) {
    ++formula.checked;
    for (const auto& [k, cnt] : s.terms) {
      const std::uint64_t cat_prev = k >= 2 ? binomial(2 * (k - 1), k - 1) / static_cast<std::uint64_t>(k) : 1;
      if (cnt != static_cast<std::uint64_t>(k) * cat_prev) formula.pass = false;
    }
  }
  if (!rep.sequences.empty()) formula.details.emplace_back("counts", join_counts(rep.sequences.front().counts()));
  r.checks.push_back(formula);
  CheckResult prop;
  prop.id = "bordered-count-identity";
  prop.bound = size_bound(n);
  prop.pass = true;
  for (const auto* b : {&b1, &b2}) {
    for (auto side : kAllSides) {
      ++prop.checked;
      if (!check_bordered_count(*b, side, n, copts).holds) prop.pass = false;
    }
  }
  r.checks.push_back(prop);
  return r;
}

}  // namespace

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "suite " << name << " v" << version << '\n';
  for (const auto& c : checks) {
    os << "check " << c.id << ' ' << c.bound << " checked=" << c.checked;
    for (const auto& [k, v] : c.details) os << ' ' << k << '=' << v;
    os << ' ' << (c.pass ? "PASS" : "FAIL") << '\n';
  }
  os << "result " << (pass() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  std::ostringstream hash;
  hash << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(name + " v" + std::to_string(version));
  j["spec_hash"] = hash.str();
  j["suite"] = name;
  j["version"] = version;
  std::string bounds;
  for (const auto& c : checks) bounds += (bounds.empty() ? "" : ";") + c.id + ":" + c.bound;
  j["bound"] = bounds;
  auto items = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json item;
    item["id"] = c.id;
    item["bound"] = c.bound;
    item["checked"] = c.checked;
    for (const auto& [k, v] : c.details) item["details"][k] = v;
    item["pass"] = c.pass;
    items.push_back(item);
  }
  j["items"] = items;
  j["complete"] = true;
  j["pass"] = pass();
  return j.dump(2) + "\n";
}

std::vector<std::string> suite_names() {
  return {"convex", "directed-convex", "parallelogram", "lconvex", "ryser", "lpolyomino",
          "cprime", "infinite-basis", "perm-f", "perm-g", "perm-hjk", "wilf"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  static const std::map<std::string, std::function<SuiteReport(const SuiteOptions&)>> suites{
      {"convex", suite_convex},         {"directed-convex", suite_directed_convex},
      {"parallelogram", suite_parallelogram}, {"lconvex", suite_lconvex},
      {"ryser", suite_ryser},           {"lpolyomino", suite_lpolyomino},
      {"cprime", suite_cprime},         {"infinite-basis", suite_infinite_basis},
      {"perm-f", suite_perm_f},         {"perm-g", suite_perm_g},
      {"perm-hjk", suite_perm_hjk},     {"wilf", suite_wilf}};
  const auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown suite: " + name);
  return it->second(opts);
}

std::vector<BinaryMatrix> staircase_candidates(int rank) {
  std::vector<BinaryMatrix> out;
  // rows k >= 3, top run t >= 2, width t + k - 2, rank 2k + t - 2.
  for (int k = 3; 2 * k <= rank; ++k) {
    const int t = rank - 2 * k + 2;
    if (t < 2) continue;
    const int w = t + k - 2;
    if (w > BinaryMatrix::kMaxCols) continue;
    std::vector<std::string> rows;
    std::string top(static_cast<std::size_t>(w), '0');
    for (int j = 0; j < t; ++j) top[static_cast<std::size_t>(j)] = '1';
    rows.push_back(top);
    for (int i = 2; i <= k - 1; ++i) {
      std::string row(static_cast<std::size_t>(w), '0');
      row[0] = '1';
      row[static_cast<std::size_t>(t + i - 3)] = '1';
      row[static_cast<std::size_t>(t + i - 2)] = '1';
      rows.push_back(row);
    }
    std::string bottom(static_cast<std::size_t>(w), '0');
    bottom[0] = '1';
    bottom[1] = '1';
    bottom[static_cast<std::size_t>(w - 1)] = '1';
    rows.push_back(bottom);
    out.push_back(BinaryMatrix::from_rows(rows));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace subpat
