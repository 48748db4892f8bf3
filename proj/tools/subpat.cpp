#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "subpat/bases.hpp"
#include "subpat/cache.hpp"
#include "subpat/classes.hpp"
#include "subpat/errors.hpp"
#include "subpat/verify.hpp"
#include "subpat/wilfkit.hpp"

using namespace subpat;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string ground = "perm";
  std::string avoid = "none";
  std::string format = "text";
  std::string cache;
  bool no_cache = false;
  int shards = 0;
  int budget = 0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--ground,--ground-set", c.ground, "perm | poly | matrix | quasi")->capture_default_str();
  cmd->add_option("--avoid", c.avoid, "file of excluded matrices, or none")->capture_default_str();
  cmd->add_option("--budget", c.budget, "largest rank allowed (0: default)");
  cmd->add_option("--shards", c.shards, "worker threads (0: logical cores)");
  cmd->add_option("--cache", c.cache, "cache directory (default $SUBPAT_CACHE or ./.subpat-cache)");
  cmd->add_flag("--no-cache", c.no_cache, "do not read or write the count cache");
}

int shard_count(int requested) {
  if (requested > 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

ClassSpec load_spec(const Common& c) {
  const auto g = parse_ground_set(c.ground);
  if (!g) throw UsageError("unknown ground set: " + c.ground);
  std::vector<BinaryMatrix> excluded;
  if (c.avoid != "none") {
    std::ifstream in(c.avoid);
    if (!in) throw UsageError("cannot read " + c.avoid);
    std::stringstream buf;
    buf << in.rdbuf();
    excluded = parse_matrix_list(buf.str());
  }
  ClassSpec spec(*g, std::move(excluded));
  for (const auto& w : spec.warnings) std::cerr << "warning: " << w << '\n';
  return spec;
}

std::string join_lines(const std::vector<BinaryMatrix>& ms) { return format_matrix_list(ms); }

json matrix_items(const std::vector<BinaryMatrix>& ms) {
  json items = json::array();
  for (const auto& m : ms) items.push_back(m.to_text());
  return items;
}

int cmd_enumerate(const Common& c, int max, bool list) {
  const auto spec = load_spec(c);
  if (max < min_rank(spec.ground)) throw UsageError("--max must be at least " + std::to_string(min_rank(spec.ground)));
  CountOptions opts;
  opts.shards = shard_count(c.shards);
  opts.budget = c.budget;
  if (!c.no_cache) opts.cache_dir = c.cache.empty() ? CountCache::default_dir() : std::filesystem::path(c.cache);
  const int budget = c.budget > 0 ? c.budget : default_budget(spec.ground);
  if (max > budget) throw BudgetExceeded("rank " + std::to_string(max) + " exceeds the budget of " + std::to_string(budget));

  if (list) {
    std::vector<std::pair<int, std::vector<BinaryMatrix>>> per_rank;
    for (int r = min_rank(spec.ground); r <= max; ++r) per_rank.emplace_back(r, members(spec, r, opts.shards));
    if (c.format == "json") {
      json j;
      j["spec_hash"] = spec_hash_hex(spec);
      j["bound"] = max;
      json items = json::array();
      for (const auto& [r, ms] : per_rank) items.push_back({{"rank", r}, {"members", matrix_items(ms)}});
      j["items"] = items;
      j["complete"] = true;
      std::cout << j.dump(2) << '\n';
    } else {
      for (const auto& [r, ms] : per_rank) {
        std::cout << "# rank " << r << " (" << ms.size() << ")\n";
        std::cout << join_lines(ms);
        if (!ms.empty()) std::cout << '\n';
      }
    }
    return 0;
  }

  const auto seq = count_sequence(spec, max, opts);
  if (c.format == "csv") {
    std::cout << seq.to_csv();
  } else if (c.format == "bfile") {
    std::cout << seq.to_bfile();
  } else if (c.format == "json") {
    json j;
    j["spec_hash"] = spec_hash_hex(spec);
    j["bound"] = max;
    json items = json::array();
    for (const auto& [r, n] : seq.terms) items.push_back({{"rank", r}, {"count", n}});
    j["items"] = items;
    j["complete"] = true;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "# " << to_string(spec.ground) << " spec " << spec_hash_hex(spec) << ", verified<=" << max << '\n';
    for (const auto& [r, n] : seq.terms) std::cout << r << ' ' << n << '\n';
  }
  return 0;
}

void print_manifest(const ClassSpec& spec, const std::string& kind, const std::string& bound, bool complete,
                    const std::vector<std::vector<BinaryMatrix>>& sets, const std::string& format) {
  if (format == "json") {
    json j;
    j["spec_hash"] = spec_hash_hex(spec);
    j["kind"] = kind;
    j["bound"] = bound;
    json items = json::array();
    if (kind == "minimal") {
      for (const auto& s : sets) items.push_back(matrix_items(s));
    } else if (!sets.empty()) {
      items = matrix_items(sets.front());
    }
    j["items"] = items;
    j["complete"] = complete;
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << "# " << kind << " basis\n";
  std::cout << "spec_hash " << spec_hash_hex(spec) << '\n';
  std::cout << "ground " << to_string(spec.ground) << '\n';
  std::cout << "bound " << bound << '\n';
  std::cout << "complete " << (complete ? "yes" : "no") << '\n';
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (kind == "minimal") std::cout << "\n# basis " << i + 1 << '\n';
    std::cout << "members " << sets[i].size() << "\n\n" << join_lines(sets[i]);
  }
}

int cmd_basis(const Common& c, const std::string& kind, int max, int dmax) {
  const auto spec = load_spec(c);
  const int budget = c.budget > 0 ? c.budget : default_plus_budget(spec.ground);
  const int d = dmax > 0 ? dmax : default_dmax(spec.ground);
  if (kind == "p") {
    const int rmax = max > 0 ? max : default_budget(spec.ground) - 1;
    if (spec.ground != GroundSet::Permutations && rmax > default_budget(spec.ground) && c.budget < rmax) {
      throw BudgetExceeded("p-basis search above rank " + std::to_string(default_budget(spec.ground)));
    }
    const auto pb = p_basis(spec, rmax, shard_count(c.shards));
    const std::string bound = pb.complete_upto ? "rank<=" + std::to_string(*pb.complete_upto) : "all";
    print_manifest(spec, "p", bound, !pb.complete_upto.has_value(), {pb.members.members()}, c.format);
    return 0;
  }
  const auto canonical = canonical_m_basis(spec, d, budget);
  if (kind == "canonical") {
    print_manifest(spec, "canonical", "rank<=" + std::to_string(d), canonical.exact, {canonical.members.members()},
                   c.format);
    return 0;
  }
  if (kind == "minimal") {
    const int rmax = max > 0 ? max : (spec.ground == GroundSet::Permutations ? 8 : 9);
    const auto bases = minimal_m_bases(spec, canonical, rmax);
    std::vector<std::vector<BinaryMatrix>> sets;
    for (const auto& b : bases) sets.push_back(b.members.members());
    print_manifest(spec, "minimal", "rank<=" + std::to_string(rmax), false, sets, c.format);
    return 0;
  }
  throw UsageError("unknown basis kind: " + kind);
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts, const std::string& format) {
  const auto report = run_suite(suite, opts);
  std::cout << (format == "json" ? report.to_json() : report.to_text());
  return report.pass() ? 0 : kExitFail;
}

std::vector<Permutation> parse_perm_list(const std::string& text) {
  std::vector<Permutation> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(Permutation::parse(item));
  }
  if (out.empty()) throw UsageError("empty permutation list");
  return out;
}

int cmd_wilf(const std::string& b1, const std::string& b2, int n, const Common& c) {
  CountOptions opts;
  opts.shards = shard_count(c.shards);
  opts.budget = c.budget > 0 ? c.budget : std::max(n, default_budget(GroundSet::Permutations));
  if (!c.no_cache) opts.cache_dir = c.cache.empty() ? CountCache::default_dir() : std::filesystem::path(c.cache);
  const auto rep = check_wilf_equivalence(parse_perm_list(b1), parse_perm_list(b2), n, opts);
  if (c.format == "kv") {
    for (std::size_t i = 0; i < rep.labels.size(); ++i) {
      std::cout << rep.labels[i] << '=';
      const auto counts = rep.sequences[i].counts();
      for (std::size_t k = 0; k < counts.size(); ++k) std::cout << (k ? "," : "") << counts[k];
      std::cout << '\n';
    }
    std::cout << "all_equal=" << (rep.all_equal ? "true" : "false") << '\n';
    std::cout << "verified_upto=" << n << '\n';
  } else {
    std::cout << "# bordered classes, sizes 1.." << n << '\n';
    for (std::size_t i = 0; i < rep.labels.size(); ++i) {
      std::cout << rep.labels[i] << ':';
      for (auto v : rep.sequences[i].counts()) std::cout << ' ' << v;
      std::cout << '\n';
    }
    std::cout << (rep.all_equal ? "all eight sequences agree" : "sequences differ");
    if (rep.first_difference) std::cout << " (first at size " << *rep.first_difference << ")";
    std::cout << '\n';
  }
  return rep.all_equal ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submatrix pattern classes of permutations and polyominoes"};
  app.require_subcommand(1);

  Common enum_c;
  int enum_max = 6;
  bool enum_list = false;
  auto* en = app.add_subcommand("enumerate", "count (or list) class members by rank");
  add_common(en, enum_c);
  en->add_option("--max,--rank", enum_max, "largest rank (size for permutations)")->capture_default_str();
  en->add_option("--format", enum_c.format, "text | csv | json | bfile")
      ->check(CLI::IsMember({"text", "csv", "json", "bfile"}));
  en->add_flag("--list", enum_list, "print the members instead of counts");

  Common basis_c;
  std::string kind = "p";
  int basis_max = 0;
  int dmax = 0;
  auto* ba = app.add_subcommand("basis", "p-basis, canonical m-basis or minimal m-bases");
  add_common(ba, basis_c);
  ba->add_option("--kind", kind, "p | canonical | minimal")->check(CLI::IsMember({"p", "canonical", "minimal"}));
  ba->add_option("--max", basis_max, "rank bound for p-basis search and class comparison");
  ba->add_option("--dmax", dmax, "largest candidate rank for the canonical m-basis");
  ba->add_option("--format", basis_c.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  std::string suite;
  SuiteOptions sopts;
  std::string verify_format = "text";
  auto* ve = app.add_subcommand("verify", "run a named verification suite");
  ve->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  ve->add_option("--max-rank", sopts.max_rank, "rank bound (0: suite default)");
  ve->add_option("--max-size", sopts.max_size, "size bound (0: suite default)");
  ve->add_option("--shards", sopts.shards, "worker threads (0: logical cores)");
  ve->add_option("--format", verify_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  Common wilf_c;
  std::string b1 = "123";
  std::string b2 = "132";
  int wilf_n = 7;
  auto* wi = app.add_subcommand("wilf", "compare the eight bordered classes of two bases");
  wi->add_option("--b1", b1, "comma-separated permutations")->capture_default_str();
  wi->add_option("--b2", b2, "comma-separated permutations")->capture_default_str();
  wi->add_option("--max-size", wilf_n, "largest size")->capture_default_str();
  wi->add_option("--format", wilf_c.format, "text | kv")->check(CLI::IsMember({"text", "kv"}));
  wi->add_option("--shards", wilf_c.shards, "worker threads (0: logical cores)");
  wi->add_option("--cache", wilf_c.cache, "cache directory");
  wi->add_flag("--no-cache", wilf_c.no_cache, "do not use the count cache");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*en) return cmd_enumerate(enum_c, enum_max, enum_list);
    if (*ba) return cmd_basis(basis_c, kind, basis_max, dmax);
    if (*ve) {
      sopts.shards = shard_count(sopts.shards);
      return cmd_verify(suite, sopts, verify_format);
    }
    if (*wi) return cmd_wilf(b1, b2, wilf_n, wilf_c);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
