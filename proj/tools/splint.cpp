// splint: characters, dimensions and branching rules for splint root systems.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "splint/splint.hpp"

namespace {

using namespace splint;

enum class Format { Human, Json, Tsv, Ascii };

struct Options {
  std::string format = "human";
  std::string cache_dir;
  int jobs = 0;
  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "tsv") return Format::Tsv;
    if (format == "ascii") return Format::Ascii;
    return Format::Human;
  }
};

struct Failure {
  int code;
  std::string message;
};

std::string tuple_str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string half_str(int doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

std::string weight_str(const WeightVector& w) {
  std::string s = "(";
  for (int i = 0; i < w.rank(); ++i) s += (i ? "," : "") + half_str(w.doubled(i));
  return s + ")";
}

const RootSystem& system_or_fail(const std::string& label) {
  try {
    return catalog(label);
  } catch (const Error& e) {
    throw Failure{2, e.what()};
  }
}

DominantWeight dominant_or_fail(const RootSystem& rs, const std::vector<int>& w) {
  if (static_cast<int>(w.size()) != rs.rank()) {
    throw Failure{2, rs.label() + " needs " + std::to_string(rs.rank()) + " labels, got " +
                         std::to_string(w.size())};
  }
  for (int x : w)
    if (x < 0) throw Failure{2, "labels must be nonnegative"};
  return DominantWeight{w, rs.label()};
}

/// Runs f(i) for i in [0, n) on a small pool; results land by index so the
/// output order never depends on scheduling.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& f) {
  const std::size_t workers = std::max<std::size_t>(
      1, std::min<std::size_t>(n, jobs > 0 ? static_cast<std::size_t>(jobs) : std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto run = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// ---------------------------------------------------------------------------

int cmd_dim(const Options& o, const std::string& label, const std::vector<int>& w) {
  const RootSystem& rs = system_or_fail(label);
  const DominantWeight lam = dominant_or_fail(rs, w);
  const std::int64_t d = dim_weyl(rs, lam);
  if (o.fmt() == Format::Json) {
    std::cout << json{{"system", label}, {"lambda", w}, {"dim", d}}.dump() << '\n';
  } else {
    std::cout << d << '\n';
  }
  return 0;
}

int cmd_char(const Options& o, const std::string& label, const std::vector<int>& w) {
  const RootSystem& rs = system_or_fail(label);
  const DominantWeight lam = dominant_or_fail(rs, w);
  const auto chi = irrep_character(rs, lam);
  switch (o.fmt()) {
    case Format::Json:
      std::cout << json{{"system", label},
                        {"lambda", w},
                        {"dimension", chi->dimension},
                        {"character", to_json(chi->character)}}
                       .dump()
                << '\n';
      break;
    case Format::Tsv:
      for (const auto& [mu, m] : chi->character.sorted_terms()) {
        for (int i = 0; i < mu.rank(); ++i) std::cout << half_str(mu.doubled(i)) << '\t';
        std::cout << m << '\n';
      }
      break;
    default:
      std::cout << label << ' ' << tuple_str(w) << ": dimension " << chi->dimension << ", "
                << chi->character.size() << " weights\n";
      for (const auto& [mu, m] : chi->character.sorted_terms()) std::cout << "  " << weight_str(mu) << "  " << m << '\n';
  }
  return 0;
}

int cmd_system(const Options& o, const std::string& label) {
  const RootSystem& rs = system_or_fail(label);
  if (o.fmt() == Format::Json) {
    std::cout << to_json(rs).dump() << '\n';
    return 0;
  }
  std::cout << rs.label() << ": rank " << rs.rank() << ", " << rs.positive_roots().size() << " positive roots, |W| = "
            << rs.weyl().order() << "\n  rho = " << weight_str(rs.rho()) << '\n';
  for (std::size_t i = 0; i < rs.simple_roots().size(); ++i) {
    std::cout << "  alpha_" << i + 1 << " = " << weight_str(rs.simple_roots()[i]) << "   omega_" << i + 1 << " = "
              << weight_str(rs.fundamental_weights()[i]) << '\n';
  }
  return 0;
}

void print_ascii_grid(const BranchingResult& r) {
  int n = 0;
  for (const auto& [nu, m] : r.summands) n = std::max({n, nu[0], nu[1]});
  std::int64_t widest = 1;
  for (const auto& [nu, m] : r.summands) widest = std::max(widest, m);
  const int width = static_cast<int>(std::to_string(widest).size()) + 1;
  for (int b = n; b >= 0; --b) {
    std::ostringstream line;
    line << std::setw(3) << b << " |";
    for (int a = 0; a <= n; ++a) {
      auto it = r.summands.find({a, b});
      line << std::setw(width) << (it == r.summands.end() ? std::string(".") : std::to_string(it->second));
    }
    std::cout << line.str() << '\n';
  }
  std::cout << "    +" << std::string(static_cast<std::size_t>(width * (n + 1)), '-') << '\n' << "     ";
  for (int a = 0; a <= n; ++a) std::cout << std::setw(width) << a;
  std::cout << '\n';
}

void print_branching(const Options& o, const BranchingResult& r) {
  switch (o.fmt()) {
    case Format::Json:
      std::cout << to_json(r).dump() << '\n';
      break;
    case Format::Tsv:
      for (const auto& [nu, m] : r.summands) {
        for (std::size_t i = 0; i < nu.size(); ++i) std::cout << (i ? "," : "") << nu[i];
        std::cout << '\t' << m << '\n';
      }
      break;
    case Format::Ascii:
      if (catalog(r.sub).rank() != 2) throw Failure{2, "ascii output needs a rank-2 subalgebra"};
      print_ascii_grid(r);
      break;
    case Format::Human:
      std::cout << r.ambient_weight.system << ' ' << tuple_str(r.ambient_weight.coeffs) << " -> " << r.sub << '\n';
      for (const auto& [nu, m] : r.summands) std::cout << "  " << m << " x " << tuple_str(nu) << '\n';
      std::cout << "coefficient_sum " << r.coefficient_sum << "\ndim_check " << (r.dim_check ? "ok" : "FAILED")
                << '\n';
  }
}

int cmd_branch(const Options& o, const std::string& tag_in, std::vector<int> w, bool use_rule,
               const std::string& series) {
  SplintCase c;
  try {
    c = splint_case(tag_in);
  } catch (const Error& e) {
    throw Failure{2, e.what()};
  }
  if (!series.empty()) {
    if (c.tag != "V_F4_B4" && c.tag != "V_F4_D4") throw Failure{2, "--series applies to V_F4_B4 and V_F4_D4"};
    if (w.size() != 1) throw Failure{2, "--series takes a single integer k"};
    w = series_label(parse_series(series), w[0]);
  }
  dominant_or_fail(catalog(c.ambient), w);
  const BranchingResult r = use_rule ? apply_rule(c.tag, w).second : branch_oracle(c, w);
  print_branching(o, r);
  return r.dim_check ? 0 : 1;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<int>> box(int rank, int max) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < rank; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& p : out)
      for (int x = 0; x <= max; ++x) {
        auto q = p;
        q.push_back(x);
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

/// Weights at which a closed-form rule exists, all labels <= max.
std::vector<std::vector<int>> sweep_weights(const std::string& tag, int max) {
  const int rank = catalog(splint_case(tag).ambient).rank();
  std::vector<std::vector<int>> out;
  if (tag == "III") {
    for (const auto& w : box(3, max)) {
      const bool ok = (w[2] == 0) || (w[0] == 0 && w[1] == 0);
      if (ok) out.push_back(w);
    }
  } else if (tag == "V_F4_B4" || tag == "V_F4_D4") {
    for (int k = 0; k <= max; ++k) out.push_back({k, 0, 0, 0});
    for (int k = 1; k <= max; ++k) out.push_back({0, 0, 0, k});
    if (tag == "V_F4_D4") {
      for (const auto& [lam, s] : f4_d4_examples())
        if (std::find(out.begin(), out.end(), lam) == out.end()) out.push_back(lam);
    }
  } else {
    out = box(rank, max);
  }
  return out;
}

int verify_schur(const Options& o, int max) {
  struct Line {
    std::string what;
    bool ok;
  };
  std::vector<Line> lines;
  for (int a = 0; a <= max; ++a)
    for (int b = 0; b <= max; ++b) {
      const SchurSum e = pieri_e2({a + b, a}) - pieri_e1({a + b, a});
      lines.push_back({"h_point " + tuple_str({a, b}), h_point(a, b) == e});
    }
  for (int k = 0; k <= max; ++k)
    for (int l = 0; l <= max; ++l) {
      if (l <= k) lines.push_back({"lemma_triangle " + tuple_str({k, l}), verify_lemma_triangle(k, l)});
      for (int i = 0; i < std::min(k, l); ++i)
        lines.push_back({"lemma_hex " + tuple_str({i, k, l}), verify_lemma_hex(i, k, l)});
      lines.push_back({"theorem " + tuple_str({k, l}), verify_theorem(k, l)});
    }
  const auto bad = std::count_if(lines.begin(), lines.end(), [](const Line& x) { return !x.ok; });
  if (o.fmt() == Format::Json) {
    json arr = json::array();
    for (const auto& x : lines) arr.push_back({{"check", x.what}, {"ok", x.ok}});
    std::cout << json{{"checks", arr}, {"failed", bad}}.dump() << '\n';
  } else {
    for (const auto& x : lines)
      if (o.fmt() == Format::Tsv) std::cout << x.what << '\t' << (x.ok ? "ok" : "FAIL") << '\n';
      else if (!x.ok) std::cout << "FAIL " << x.what << '\n';
    if (o.fmt() != Format::Tsv) std::cout << lines.size() << " identities checked, " << bad << " failed\n";
  }
  return bad == 0 ? 0 : 1;
}

int cmd_verify(const Options& o, const std::string& what, int max) {
  if (max < 0) throw Failure{2, "--max must be nonnegative"};
  if (what == "schur") return verify_schur(o, max);
  std::vector<std::string> tags;
  if (what == "all") {
    tags = case_tags();
  } else {
    try {
      tags.push_back(canonical_case_tag(what));
    } catch (const Error& e) {
      throw Failure{2, e.what()};
    }
  }
  std::vector<std::pair<std::string, std::vector<int>>> jobs;
  for (const auto& t : tags)
    for (auto& w : sweep_weights(t, max)) jobs.emplace_back(t, std::move(w));
  std::vector<std::optional<RuleReport>> reports(jobs.size());
  parallel_for(jobs.size(), o.jobs, [&](std::size_t i) { reports[i] = verify_rule(jobs[i].first, jobs[i].second); });

  int theorem_bad = 0, conjecture_bad = 0, dim_bad = 0;
  json arr = json::array();
  for (const auto& rep : reports) {
    const bool dims = rep->rule_result.dim_check && rep->oracle_result.dim_check;
    if (!dims) ++dim_bad;
    if (!rep->equal) ++(rep->expected == "theorem" ? theorem_bad : conjecture_bad);
    switch (o.fmt()) {
      case Format::Json:
        arr.push_back(to_json(*rep));
        break;
      case Format::Tsv:
        std::cout << rep->case_tag << '\t' << tuple_str(rep->lambda) << '\t' << rep->rule << '\t'
                  << (rep->equal ? "equal" : "differ") << '\t' << rep->expected << '\t' << (dims ? "ok" : "FAIL")
                  << '\n';
        break;
      default:
        std::cout << rep->case_tag << ' ' << tuple_str(rep->lambda) << "  " << rep->rule << "  "
                  << (rep->equal ? "equal" : "DIFFER") << " (" << rep->expected << ")"
                  << (dims ? "" : "  dimension check FAILED") << '\n';
    }
  }
  if (o.fmt() == Format::Json) {
    std::cout << json{{"reports", arr},
                      {"theorem_mismatches", theorem_bad},
                      {"conjecture_mismatches", conjecture_bad},
                      {"dimension_failures", dim_bad}}
                     .dump()
              << '\n';
  } else if (o.fmt() == Format::Human) {
    std::cout << reports.size() << " cases: " << theorem_bad << " theorem mismatches, " << conjecture_bad
              << " conjecture mismatches, " << dim_bad << " dimension failures\n";
  }
  return theorem_bad == 0 && dim_bad == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------

int cmd_table(const Options& o, const std::string& which) {
  int n = 0;
  std::string x = "alpha", y = "beta";
  std::function<std::int64_t(int, int)> value;
  if (which == "fig1a") {
    n = 7;
    value = [](int a, int b) { return dim_weyl(catalog("A2"), DominantWeight{{a, b}, "A2"}); };
  } else if (which == "fig1b") {
    n = 4;
    x = "k";
    y = "l";
    value = [](int k, int l) { return dim_weyl(catalog("G2"), DominantWeight{{k, l}, "G2"}); };
  } else if (which == "fig2a") {
    n = 7;
    value = [](int a, int b) { return static_cast<std::int64_t>(hexagon_multiplicity(HexagonSpec{3, 2}, a, b)); };
  } else {
    throw Failure{2, "unknown table '" + which + "' (fig1a, fig1b, fig2a)"};
  }
  std::vector<std::vector<std::int64_t>> grid(static_cast<std::size_t>(n), std::vector<std::int64_t>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) grid[j][i] = value(i, j);

  if (o.fmt() == Format::Json) {
    std::cout << json{{"table", which}, {"x", x}, {"y", y}, {"values", grid}}.dump() << '\n';
    return 0;
  }
  if (o.fmt() == Format::Tsv) {
    std::cout << y << '\\' << x;
    for (int i = 0; i < n; ++i) std::cout << '\t' << i;
    std::cout << '\n';
    for (int j = n - 1; j >= 0; --j) {
      std::cout << j;
      for (int i = 0; i < n; ++i) std::cout << '\t' << grid[j][i];
      std::cout << '\n';
    }
    return 0;
  }
  std::size_t width = 1;
  for (const auto& row : grid)
    for (auto v : row) width = std::max(width, std::to_string(v).size());
  for (int j = n - 1; j >= 0; --j) {
    std::cout << std::setw(3) << j << " |";
    for (int i = 0; i < n; ++i) std::cout << std::setw(static_cast<int>(width) + 1) << grid[j][i];
    std::cout << '\n';
  }
  std::cout << "    +" << std::string((width + 1) * static_cast<std::size_t>(n), '-') << "\n     ";
  for (int i = 0; i < n; ++i) std::cout << std::setw(static_cast<int>(width) + 1) << i;
  std::cout << "   (" << x << " across, " << y << " up)\n";
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_schur(const Options& o, const std::string& op, const std::vector<int>& args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw Failure{2, "schur " + op + " takes " + std::to_string(n) + " integers"};
  };
  auto emit = [&](const SchurSum& s) {
    if (o.fmt() == Format::Json) std::cout << to_json(s).dump() << '\n';
    else std::cout << s.to_string() << '\n';
  };
  auto index = [&] {
    need(2);
    if (args[1] < 0 || args[0] < args[1]) throw Failure{2, "need a >= b >= 0"};
    return SchurIndex{args[0], args[1]};
  };
  try {
    if (op == "h") {
      need(2);
      if (args[0] < 0 || args[1] < 0) throw Failure{2, "need alpha, beta >= 0"};
      emit(h_point(args[0], args[1]));
    } else if (op == "e1") {
      emit(pieri_e1(index()));
    } else if (op == "e2") {
      emit(pieri_e2(index()));
    } else if (op == "layer") {
      need(3);
      emit(h_layer(args[0], args[1], args[2]));
    } else if (op == "points") {
      need(3);
      const auto pts = layer_points(args[0], args[1], args[2]);
      if (o.fmt() == Format::Json) {
        std::cout << json(pts).dump() << '\n';
      } else {
        for (const auto& [a, b] : pts) std::cout << a << ' ' << b << '\n';
      }
    } else if (op == "theorem") {
      need(2);
      if (args[0] < 0 || args[1] < 0) throw Failure{2, "need k, l >= 0"};
      const SchurSum lhs = theorem_lhs(args[0], args[1]);
      const SchurSum rhs = theorem_rhs(args[0], args[1]);
      if (o.fmt() == Format::Json) {
        std::cout << json{{"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}, {"equal", lhs == rhs}}.dump() << '\n';
      } else {
        std::cout << "lhs " << lhs.to_string() << "\nrhs " << rhs.to_string() << '\n'
                  << (lhs == rhs ? "equal" : "DIFFER") << '\n';
      }
      return lhs == rhs ? 0 : 1;
    } else {
      throw Failure{2, "unknown schur operation '" + op + "' (h, e1, e2, layer, points, theorem)"};
    }
  } catch (const Error& e) {
    throw Failure{2, e.what()};
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"splint: characters and branching rules for splint root systems"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"human", "json", "tsv", "ascii"}));
  app.add_option("--cache-dir", opt.cache_dir, "Directory for the on-disk character cache (or SPLINT_CACHE_DIR)");
  app.add_option("--jobs", opt.jobs, "Worker threads for verification sweeps (default: all cores)");
  app.fallthrough();

  std::string label, tag, what, which, op, series;
  std::vector<int> weight;
  int max = 2;
  bool rule = false, oracle = false;

  auto* dim = app.add_subcommand("dim", "Dimension of an irreducible module");
  dim->add_option("system", label)->required();
  dim->add_option("weight", weight, "Highest weight in fundamental-weight labels");

  auto* ch = app.add_subcommand("char", "Weight multiplicities of an irreducible module");
  ch->add_option("system", label)->required();
  ch->add_option("weight", weight);

  auto* sys = app.add_subcommand("system", "Describe a root system");
  sys->add_option("system", label)->required();

  auto* br = app.add_subcommand("branch", "Branch an irreducible module along a splint embedding");
  br->add_option("case", tag, "I2..I4, II2..II4, III, IV, V_F4_B4, V_B4_D4, V_F4_D4")->required();
  br->add_option("weight", weight);
  auto* rule_flag = br->add_flag("--rule", rule, "Use the closed-form rule");
  br->add_flag("--oracle", oracle, "Restrict and decompose the character (default)")->excludes(rule_flag);
  br->add_option("--out", opt.format, "Same as the global --format")
      ->check(CLI::IsMember({"human", "json", "tsv", "ascii"}));
  br->add_option("--series", series, "first: Pi_{k,0,0,0}; last: Pi_{0,0,0,k}")
      ->check(CLI::IsMember({"first", "last"}));

  auto* ver = app.add_subcommand("verify", "Compare closed-form rules with the oracle");
  ver->add_option("what", what, "A case tag, 'schur', or 'all'")->required();
  ver->add_option("--max", max, "Largest label in the sweep");

  auto* tab = app.add_subcommand("table", "Regenerate a dimension or multiplicity table");
  tab->add_option("which", which, "fig1a, fig1b or fig2a")->required();

  auto* sch = app.add_subcommand("schur", "Schur-basis calculus");
  sch->add_option("op", op, "h, e1, e2, layer, points, theorem")->required();
  sch->add_option("args", weight);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::shared_ptr<CharacterStore> store;
    if (!opt.cache_dir.empty()) store = std::make_shared<DiskCache>(opt.cache_dir);
    else store = DiskCache::from_env();
    if (store) default_character_cache().set_store(store);

    if (*dim) return cmd_dim(opt, label, weight);
    if (*ch) return cmd_char(opt, label, weight);
    if (*sys) return cmd_system(opt, label);
    if (*br) return cmd_branch(opt, tag, weight, rule, series);
    if (*ver) return cmd_verify(opt, what, max);
    if (*tab) return cmd_table(opt, which);
    if (*sch) return cmd_schur(opt, op, weight);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
