#include "trislice/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "trislice/bounds.hpp"
#include "trislice/verify.hpp"

namespace trislice {

namespace {

using Clock = std::chrono::steady_clock;

// Membership over raw intersection sizes 0..128, one bit per value.
struct LevelBits {
  std::uint64_t bits[3] = {0, 0, 0};
  std::int64_t p = 0;  // 0 means exact mode

  bool allows(int raw) const {
    int v = p != 0 ? static_cast<int>(raw % p) : raw;
    return (bits[v >> 6] >> (v & 63)) & 1;
  }
};

LevelBits level_bits(const IntersectionProfile& profile, int level) {
  LevelBits out;
  out.p = profile.modulus().value_or(0);
  for (int v : profile.level(level))
    if (v <= 128) out.bits[v >> 6] |= 1ull << (v & 63);
  return out;
}

struct Shared {
  std::atomic<int> best_size{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_tripped{false};
  std::atomic<bool> bound_capped{false};
  std::atomic<int> next_root{0};
  std::mutex witness_mutex;
  SetFamily witness{1};

  std::optional<std::uint64_t> max_nodes;
  std::optional<double> max_time;
  Clock::time_point started;
  int cap = -1;  // tightest proven bound, -1 when none applies
  int arity = 0;
};

class Worker {
 public:
  Worker(const std::vector<Subset>& cands, const std::vector<LevelBits>& levels, int arity,
         Shared& shared)
      : cands_(cands), levels_(levels), k_(arity), shared_(shared) {
    meets_.resize(static_cast<std::size_t>(std::max(0, k_ - 1)));
    alive_pool_.resize(2);
    frame_pool_.resize(2);
  }

  // Runs the subtree rooted at candidate index ci, restricted to candidates
  // with larger indices.
  void run_root(int ci) {
    push_member(cands_[static_cast<std::size_t>(ci)]);
    enter_node();
    report();
    if (!shared_.stop.load(std::memory_order_relaxed)) {
      auto& child = alive_at(1);
      child.clear();
      for (int q = ci + 1; q < static_cast<int>(cands_.size()); ++q)
        if (admissible_incremental(cands_[static_cast<std::size_t>(q)])) child.push_back(q);
      if (!child.empty()) expand(1);
    }
    pop_member();
  }

  void flush_nodes() {
    shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed);
    local_nodes_ = 0;
  }

 private:
  std::vector<int>& alive_at(int depth) {
    if (static_cast<std::size_t>(depth) >= alive_pool_.size())
      alive_pool_.resize(static_cast<std::size_t>(depth) + 1);
    return alive_pool_[static_cast<std::size_t>(depth)];
  }
  std::vector<std::size_t>& frame_at(int depth) {
    if (static_cast<std::size_t>(depth) >= frame_pool_.size())
      frame_pool_.resize(static_cast<std::size_t>(depth) + 1);
    return frame_pool_[static_cast<std::size_t>(depth)];
  }

  void push_member(const Subset& x) {
    int d = static_cast<int>(family_.size());
    auto& frame = frame_at(d);
    frame.assign(meets_.size(), 0);
    for (std::size_t j = 0; j < meets_.size(); ++j) frame[j] = meets_[j].size();
    // New j-wise meets come from the old (j-1)-wise meets; walk levels top
    // down so each source is read before it grows.
    int top = std::min(k_ - 1, d + 1);
    for (int j = top; j >= 2; --j) {
      const auto& source = meets_[static_cast<std::size_t>(j - 2)];
      auto& dest = meets_[static_cast<std::size_t>(j - 1)];
      std::size_t limit = frame[static_cast<std::size_t>(j - 2)];
      for (std::size_t s = 0; s < limit; ++s) dest.push_back(source[s].intersect(x));
    }
    if (k_ >= 2) meets_[0].push_back(x);
    family_.push_back(x);
  }

  void pop_member() {
    int d = static_cast<int>(family_.size()) - 1;
    const auto& frame = frame_at(d);
    for (std::size_t j = 0; j < meets_.size(); ++j)
      meets_[j].resize(frame[j]);
    family_.pop_back();
  }

  // Tests the candidate against the meets added by the latest push only;
  // older constraints were checked when the candidate survived the parent's
  // alive list.
  bool admissible_incremental(const Subset& c) const {
    int d = static_cast<int>(family_.size()) - 1;
    const auto& frame = frame_pool_[static_cast<std::size_t>(d)];
    for (std::size_t j = 0; j < meets_.size(); ++j) {
      const LevelBits& allowed = levels_[j + 1];  // tuple size j+2
      for (std::size_t idx = frame[j]; idx < meets_[j].size(); ++idx)
        if (!allowed.allows(meets_[j][idx].intersect(c).size())) return false;
    }
    return true;
  }

  void enter_node() {
    if (++local_nodes_ >= 1024) checkpoint();
  }

  void checkpoint() {
    flush_nodes();
    if (shared_.max_nodes &&
        shared_.nodes.load(std::memory_order_relaxed) >= *shared_.max_nodes) {
      shared_.budget_tripped.store(true, std::memory_order_relaxed);
      shared_.stop.store(true, std::memory_order_relaxed);
    }
    if (shared_.max_time) {
      double elapsed = std::chrono::duration<double>(Clock::now() - shared_.started).count();
      if (elapsed >= *shared_.max_time) {
        shared_.budget_tripped.store(true, std::memory_order_relaxed);
        shared_.stop.store(true, std::memory_order_relaxed);
      }
    }
  }

  void report() {
    int d = static_cast<int>(family_.size());
    if (d <= shared_.best_size.load(std::memory_order_relaxed)) return;
    std::lock_guard<std::mutex> lock(shared_.witness_mutex);
    if (d <= shared_.best_size.load(std::memory_order_relaxed)) return;
    shared_.witness = SetFamily(cands_.front().ground(), family_);
    shared_.best_size.store(d, std::memory_order_relaxed);
    if (shared_.cap >= 0 && d == shared_.cap) {
      shared_.bound_capped.store(true, std::memory_order_relaxed);
      shared_.stop.store(true, std::memory_order_relaxed);
    }
  }

  void expand(int depth) {
    // alive_pool_[depth] holds the candidate indices compatible with the
    // current family; anything deeper must come from its suffix.
    const std::size_t alive_count = alive_at(depth).size();
    for (std::size_t pos = 0; pos < alive_count; ++pos) {
      if (shared_.stop.load(std::memory_order_relaxed)) return;
      int best = shared_.best_size.load(std::memory_order_relaxed);
      if (depth + static_cast<int>(alive_count - pos) <= best) break;
      int ci = alive_pool_[static_cast<std::size_t>(depth)][pos];
      push_member(cands_[static_cast<std::size_t>(ci)]);
      enter_node();
      report();
      auto& child = alive_at(depth + 1);
      child.clear();
      const auto& alive = alive_pool_[static_cast<std::size_t>(depth)];
      for (std::size_t q = pos + 1; q < alive_count; ++q) {
        const Subset& c = cands_[static_cast<std::size_t>(alive[q])];
        if (admissible_incremental(c)) child.push_back(alive[q]);
      }
      if (!child.empty()) expand(depth + 1);
      pop_member();
    }
  }

  const std::vector<Subset>& cands_;
  const std::vector<LevelBits>& levels_;
  int k_;
  Shared& shared_;

  std::vector<Subset> family_;
  std::vector<std::vector<Subset>> meets_;       // meets_[j] = (j+1)-wise meets
  std::vector<std::vector<int>> alive_pool_;     // per-depth candidate indices
  std::vector<std::vector<std::size_t>> frame_pool_;  // per-depth meet sizes
  std::uint64_t local_nodes_ = 0;
};

// Validity of a family treated as a search prefix: every constraint among
// the present members must hold, but the size floor |F| >= k does not apply.
bool prefix_valid(const SetFamily& family, const IntersectionProfile& profile) {
  VerificationReport report = verify_family(family, profile, VerifyOptions{0});
  for (const Violation& v : report.violations)
    if (v.kind != Violation::Kind::FamilyTooSmall) return false;
  return true;
}

int proven_cap(int n, const IntersectionProfile& profile) {
  BoundReport report = bound_report(n, profile.modulus(), profile);
  if (!report.tightest) return -1;
  if (*report.tightest > BigInt(1) << 30) return -1;
  return static_cast<int>(*report.tightest);
}

}  // namespace

bool extend_check(const SetFamily& family, const Subset& candidate,
                  const IntersectionProfile& profile) {
  if (candidate.ground() != family.ground())
    fail(ErrorKind::Context, "candidate ground size differs from the family's");
  if (family.contains(candidate))
    fail(ErrorKind::Duplication, "candidate " + candidate.to_string() + " already present");
  if (!profile.level_allows(1, candidate.size())) return false;

  int k = profile.arity();
  int m = family.size();
  // Every (i-1)-subset of the family, met with the candidate, must satisfy
  // level i. Recursion mirrors the verifier's colex enumeration.
  for (int i = 2; i <= k; ++i) {
    int take = i - 1;
    if (take > m) break;
    std::vector<int> stack;
    bool ok = true;
    auto rec = [&](auto&& self, int depth_left, int below, const Subset& meet) -> void {
      if (!ok) return;
      if (depth_left == 0) {
        if (!profile.level_allows(i, meet.size())) ok = false;
        return;
      }
      for (int top = depth_left - 1; top < below && ok; ++top) {
        Subset next = meet.intersect(family.member(top));
        self(self, depth_left - 1, top, next);
      }
    };
    rec(rec, take, m, candidate);
    if (!ok) return false;
  }
  return true;
}

SearchOutcome max_family(int n, const IntersectionProfile& profile, const SearchBudget& budget,
                         const SearchOptions& options) {
  if (n < 1 || n > kMaxSearchGround)
    fail(ErrorKind::Parameter, "search ground size must be in [1, " +
                                   std::to_string(kMaxSearchGround) + "], got " +
                                   std::to_string(n));
  if (budget.parallel_width < 1)
    fail(ErrorKind::Parameter, "parallel width must be at least 1");

  Clock::time_point started = Clock::now();

  // Candidates: every subset whose size passes level 1, in lex order.
  std::vector<Subset> cands;
  for (std::uint64_t rank = 0; rank < (1ull << n); ++rank) {
    Subset s = Subset::from_lex_rank(n, rank);
    if (profile.level_allows(1, s.size())) cands.push_back(s);
  }

  std::vector<LevelBits> levels;
  for (int i = 1; i <= profile.arity(); ++i) levels.push_back(level_bits(profile, i));

  Shared shared;
  shared.started = started;
  shared.max_nodes = budget.max_nodes;
  shared.max_time = budget.max_time_seconds;
  shared.arity = profile.arity();
  shared.witness = SetFamily(n);
  if (options.use_bound_cutoff) shared.cap = proven_cap(n, profile);

  if (options.seed) {
    if (options.seed->ground() != n)
      fail(ErrorKind::Context, "seed family ground size differs from n");
    if (!prefix_valid(*options.seed, profile))
      fail(ErrorKind::Parameter, "seed family violates the profile's constraints");
    shared.witness = *options.seed;
    shared.best_size.store(options.seed->size(), std::memory_order_relaxed);
    if (shared.cap >= 0 && options.seed->size() == shared.cap)
      shared.bound_capped.store(true, std::memory_order_relaxed);
  }

  shared.nodes.store(1, std::memory_order_relaxed);  // the empty root

  // Roots: with canonical_first only one representative per admissible size
  // survives (elements packed at the top of [n]); every family has a
  // relabeled copy whose lex-least member has that form.
  std::vector<int> roots;
  for (int ci = 0; ci < static_cast<int>(cands.size()); ++ci) {
    if (options.canonical_first) {
      const Subset& s = cands[static_cast<std::size_t>(ci)];
      Subset packed = Subset::empty(n);
      for (int e = n - s.size() + 1; e <= n; ++e) packed = packed.with(e);
      if (!(s == packed)) continue;
    }
    roots.push_back(ci);
  }

  bool capped_at_start = shared.bound_capped.load(std::memory_order_relaxed);
  auto work = [&](Worker& worker) {
    while (!shared.stop.load(std::memory_order_relaxed)) {
      int slot = shared.next_root.fetch_add(1, std::memory_order_relaxed);
      if (slot >= static_cast<int>(roots.size())) break;
      int ci = roots[static_cast<std::size_t>(slot)];
      int potential = 1 + static_cast<int>(cands.size()) - 1 - ci;
      if (potential <= shared.best_size.load(std::memory_order_relaxed)) continue;
      worker.run_root(ci);
    }
    worker.flush_nodes();
  };

  if (!capped_at_start && !cands.empty()) {
    int width = std::min(budget.parallel_width, std::max(1, static_cast<int>(roots.size())));
    if (width <= 1) {
      Worker worker(cands, levels, profile.arity(), shared);
      work(worker);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(width));
      for (int w = 0; w < width; ++w)
        pool.emplace_back([&] {
          Worker worker(cands, levels, profile.arity(), shared);
          work(worker);
        });
      for (auto& t : pool) t.join();
    }
  }

  SearchOutcome outcome;
  outcome.max_size = shared.best_size.load();
  outcome.witness = shared.witness;
  outcome.nodes_visited = shared.nodes.load();
  outcome.exhausted = !shared.budget_tripped.load();
  outcome.bound_capped = shared.bound_capped.load();
  outcome.infeasible = outcome.max_size < profile.arity();
  outcome.elapsed_seconds = std::chrono::duration<double>(Clock::now() - started).count();

  if (!outcome.infeasible) {
    VerificationReport check = verify_family(outcome.witness, profile);
    if (!check.valid || outcome.witness.size() != outcome.max_size)
      fail(ErrorKind::Internal, "search witness fails re-certification");
  }
  return outcome;
}

bool certify(const SearchOutcome& outcome, const IntersectionProfile& profile) {
  if (outcome.infeasible) return true;  // vacuous: no witness obligations
  return verify_family(outcome.witness, profile).valid &&
         outcome.witness.size() == outcome.max_size;
}

}  // namespace trislice
