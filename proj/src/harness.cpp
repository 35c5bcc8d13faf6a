#include "pathcover/harness.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "pathcover/factor.hpp"
#include "pathcover/local_ops.hpp"
#include "pathcover/matching.hpp"
#include "pathcover/phase1.hpp"
#include "pathcover/structure.hpp"

namespace pathcover {

namespace {

// Uniform double in [0,1) from the top 53 bits; avoids the
// implementation-defined std::uniform_real_distribution.
double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (unit(rng) < p) es.push_back({i, j});
    }
  }
  return Graph::from_edges(n, std::move(es));
}

Graph gen_planted(int n, int paths, double noise, std::uint64_t seed, int* planted_cover) {
  std::mt19937_64 rng(seed);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[i], perm[j]);
  }
  std::set<Edge> es;
  int pos = 0;
  int covered = 0;
  for (int k = 0; k < paths; ++k) {
    int remaining = n - pos;
    if (remaining < 5) break;
    int len = 5 + static_cast<int>(rng() % 4);
    if (len > remaining) len = remaining;
    for (int i = 1; i < len; ++i) {
      es.insert(make_edge(perm[pos + i - 1], perm[pos + i]));
    }
    pos += len;
    covered += len;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (unit(rng) < noise) es.insert({i, j});
    }
  }
  if (planted_cover) *planted_cover = covered;
  return Graph::from_edges(n, std::vector<Edge>(es.begin(), es.end()));
}

std::string csv_header() {
  return "seed,n,m,model,alg,opt,branch_depth,ops1,ops2,ops3,ms";
}

std::string csv_row(const InstanceRecord& rec) {
  std::ostringstream os;
  os << rec.seed << ',' << rec.n << ',' << rec.m << ',' << rec.model << ',' << rec.alg
     << ',' << rec.opt << ',' << rec.branch_depth << ',' << rec.ops[0] << ','
     << rec.ops[1] << ',' << rec.ops[2] << ',' << std::fixed << std::setprecision(3)
     << rec.ms;
  return os.str();
}

int brute_cover_weight(const Graph& g, const HState& h, int max_edges) {
  RescueGraph rg = build_rescue_graph(g, h);
  int k = static_cast<int>(rg.eligible.size());
  if (k > max_edges) return -1;
  std::vector<Edge> es(rg.eligible.begin(), rg.eligible.end());
  int best = 0;
  std::vector<int> deg(g.n, 0);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    PathCycleCover cover;
    bool ok = true;
    std::fill(deg.begin(), deg.end(), 0);
    for (int i = 0; i < k && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      cover.insert(es[i]);
      if (++deg[es[i].first] > 2 || ++deg[es[i].second] > 2) ok = false;
    }
    if (!ok) continue;
    best = std::max(best, cover_weight(cover, h));
  }
  return best;
}

VerifyOutcome verify_instance(const Graph& g, std::uint64_t seed,
                              const std::string& model, const VerifyOptions& opt) {
  VerifyOutcome out;
  out.rec.seed = seed;
  out.rec.n = g.n;
  out.rec.m = g.m();
  out.rec.model = model;

  auto viol = [&out](const std::string& msg) {
    if (out.violations.size() < 50) out.violations.push_back(msg);
  };

  int ref = -1;
  if (opt.with_oracle && g.n <= opt.oracle.vertex_cap) {
    try {
      ref = exact_opt(g, 5, opt.oracle);
    } catch (const BudgetExceeded&) {
      ref = -1;
    }
  }
  out.rec.opt = ref;

  try {
    std::vector<int> mate = maximum_matching(g);
    MatchCertificate cert = certify_maximum(g, mate);
    if (!cert.maximum) viol("matching is not maximum");
    int matched = 2 * matching_size(mate);
    if (ref >= 0 && 5 * matched < 4 * ref) {
      viol("matched vertices fall below four fifths of the optimum");
    }

    Phase1Result p1 = run_phase1(g, mate, [&](const char* stage, const HState& hs) {
      for (const std::string& msg : audit_h_state(g, hs, false)) {
        viol(std::string(stage) + ": " + msg);
      }
    });
    for (const std::string& msg : audit_h_state(g, p1.h, true)) {
      viol(std::string("after merging: ") + msg);
    }

    RescueGraph rg = build_rescue_graph(g, p1.h);
    FGInstance inst = build_fg_instance(rg);
    PathCycleCover raw = extract_cover(max_weight_fg_factor(inst), inst);
    int w = cover_weight(raw, p1.h);
    if (opt.brute_cover_check) {
      int bw = brute_cover_weight(g, p1.h);
      if (bw >= 0 && bw != w) {
        std::ostringstream msg;
        msg << "rescue weight " << w << " differs from exhaustive " << bw;
        viol(msg.str());
      }
    }
    PathCycleCover cover = prune_cover(raw, p1.h);
    if (cover_weight(cover, p1.h) != w) viol("pruning changed the rescued weight");
    CoverContext ctx = compute_m_c(cover, p1.h);
    if (ref >= 0 && 5 * 2 * static_cast<int>(ctx.m_c.size()) < 4 * ref) {
      viol("rescued matched vertices fall below four fifths of the optimum");
    }

    LocalOpsResult ops = run_until_stable(g, p1.h, cover);
    CoverContext ctx2 = compute_m_c(ops.cover, p1.h);
    if (ref >= 0 && 5 * 2 * static_cast<int>(ctx2.m_c.size()) < 4 * ref) {
      viol("rescued matched vertices fall below four fifths after rewiring");
    }

    auto t0 = std::chrono::steady_clock::now();
    SolveResult sr = solve(g);
    auto t1 = std::chrono::steady_clock::now();
    out.rec.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    out.rec.alg = sr.sol.covered();
    out.rec.branch_depth = sr.depth();
    out.rec.ops = sr.total_ops();
    out.trunk_only = sr.depth() == 1 && !sr.base_case;

    ValidationResult vr = validate_solution(g, sr.sol, 5);
    if (!vr.ok) viol("solution invalid: " + vr.message);

    if (ref >= 0) {
      int alg = out.rec.alg;
      if (alg > ref) viol("solver covered more vertices than the optimum");
      long long d = 35LL * ref - 26LL * alg;
      bool within = d <= 0 || d * d <= 3826LL * alg * alg;
      if (!within) {
        std::ostringstream msg;
        msg << "approximation factor exceeded: opt=" << ref << " alg=" << alg;
        viol(msg.str());
      }
      if (out.trunk_only && 32LL * ref > 75LL * alg) {
        std::ostringstream msg;
        msg << "trunk-only bound exceeded: opt=" << ref << " alg=" << alg;
        viol(msg.str());
      }
    }

    if (opt.check_determinism) {
      SolveResult sr2 = solve(g);
      bool same = sr.sol.paths.size() == sr2.sol.paths.size();
      for (std::size_t i = 0; same && i < sr.sol.paths.size(); ++i) {
        same = sr.sol.paths[i].verts == sr2.sol.paths[i].verts;
      }
      if (!same) viol("solver output is not deterministic");
    }
  } catch (const std::exception& e) {
    viol(std::string("pipeline exception: ") + e.what());
  }
  return out;
}

}  // namespace pathcover
