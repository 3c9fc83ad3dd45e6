#include "tfold/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "tfold/blocking.hpp"
#include "tfold/extremal.hpp"

namespace tfold {
namespace {

struct Frame {
  std::vector<std::uint32_t> count;
  std::vector<std::uint32_t> remaining;
  PointMask chosen;
  std::uint32_t size = 0;
  PointIndex next = 0;
};

struct Shared {
  const IncidencePlane& plane;
  std::uint32_t t;
  std::uint32_t secant;  // b + 1
  std::uint32_t target;
  const std::vector<char>* root_allowed;  // null without symmetry
  std::uint64_t budget;
  // Nodes counted locally before publishing; small budgets publish often.
  std::uint64_t batch = std::clamp<std::uint64_t>(budget / 64, 1, 1024);
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> leaves{0};
  std::atomic<bool> aborted{false};
};

class Walker {
 public:
  Walker(Shared& shared, PointIndex stop, std::vector<Frame>* prefixes)
      : s_(shared), stop_(stop), prefixes_(prefixes) {}

  ~Walker() { flush(); }

  void run(Frame& f) { descend(f); }
  std::vector<PointMask> take_leaves() { return std::move(leaves_); }

 private:
  void flush() {
    if (local_nodes_ == 0) return;
    const std::uint64_t total = s_.nodes.fetch_add(local_nodes_) + local_nodes_;
    local_nodes_ = 0;
    if (total > s_.budget) s_.aborted = true;
  }

  void descend(Frame& f) {
    if (s_.aborted.load(std::memory_order_relaxed)) return;
    if (++local_nodes_ >= s_.batch) flush();

    const PointIndex i = f.next;
    if (i == stop_) {
      if (prefixes_) {
        prefixes_->push_back(f);
      } else {
        ++s_.leaves;
        leaves_.push_back(f.chosen);
      }
      return;
    }
    const auto lines = s_.plane.lines_through_point(i);
    const auto left_after = static_cast<std::uint32_t>(s_.plane.point_count() - i - 1);
    f.next = i + 1;

    const bool may_open = !s_.root_allowed || f.size > 0 || (*s_.root_allowed)[i];
    if (f.size < s_.target && may_open) {
      bool ok = true;
      for (LineIndex l : lines) {
        --f.remaining[l];
        if (++f.count[l] > s_.secant) ok = false;
      }
      if (ok) {
        f.chosen.set(i);
        ++f.size;
        descend(f);
        --f.size;
        f.chosen.reset(i);
      }
      for (LineIndex l : lines) {
        ++f.remaining[l];
        --f.count[l];
      }
    }

    if (f.size + left_after >= s_.target) {
      bool ok = true;
      for (LineIndex l : lines) {
        if (f.count[l] + --f.remaining[l] < s_.t) ok = false;
      }
      if (ok) descend(f);
      for (LineIndex l : lines) ++f.remaining[l];
    }
    f.next = i;
  }

  Shared& s_;
  PointIndex stop_;
  std::vector<Frame>* prefixes_;
  std::vector<PointMask> leaves_;
  std::uint64_t local_nodes_ = 0;
};

// Every target-size subset in lexicographic order; no pruning at all.
std::vector<PointMask> enumerate_subsets(Shared& s) {
  const auto n_points = static_cast<std::uint32_t>(s.plane.point_count());
  std::vector<PointMask> out;
  if (s.target > n_points) return out;
  std::vector<std::uint32_t> idx(s.target);
  std::iota(idx.begin(), idx.end(), 0U);
  while (true) {
    if (s.nodes.fetch_add(1) + 1 > s.budget) {
      s.aborted = true;
      return out;
    }
    if (!s.root_allowed || idx.empty() || (*s.root_allowed)[idx.front()]) {
      PointMask m(n_points);
      for (auto p : idx) m.set(p);
      ++s.leaves;
      out.push_back(std::move(m));
    }
    // Advance to the next combination.
    std::size_t k = idx.size();
    while (k > 0 && idx[k - 1] == n_points - (idx.size() - k) - 1) --k;
    if (k == 0) return out;
    ++idx[k - 1];
    for (std::size_t j = k; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<char> orbit_minima(const IncidencePlane& plane, const std::vector<std::vector<PointIndex>>& perms) {
  const std::size_t n_points = plane.point_count();
  std::vector<std::size_t> parent(n_points);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& perm : perms) {
    if (perm.size() != n_points) throw std::invalid_argument("symmetry permutation has the wrong length");
    std::vector<char> seen(n_points, 0);
    for (PointIndex img : perm) {
      if (img >= n_points || seen[img]) throw std::invalid_argument("symmetry list entry is not a permutation");
      seen[img] = 1;
    }
    for (LineIndex l = 0; l < plane.line_count(); ++l) {
      const auto pts = plane.line(l);
      std::vector<PointIndex> image;
      for (PointIndex p : pts) image.push_back(perm[p]);
      std::sort(image.begin(), image.end());
      const auto target = plane.line(plane.line_through(image[0], image[1]));
      if (!std::equal(image.begin(), image.end(), target.begin(), target.end())) {
        throw std::invalid_argument("symmetry permutation does not map lines to lines");
      }
    }
    for (std::size_t p = 0; p < n_points; ++p) {
      const std::size_t a = find(p);
      const std::size_t b = find(perm[p]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<char> allowed(n_points, 0);
  for (std::size_t p = 0; p < n_points; ++p) allowed[p] = find(p) == p;
  return allowed;
}

struct Checked {
  std::vector<PointSet> sets;
  std::vector<PointSet> anomalies;
};

Checked check_leaves(const SearchTask& task, std::vector<PointMask> leaves) {
  Checked out;
  const IncidencePlane& plane = *task.plane;
  for (auto& m : leaves) {
    PointSet s(task.plane, std::move(m));
    if (s.size() != *task.size) continue;
    if (!is_t_fold_blocking(plane, s, task.t) || !is_minimal(plane, s, task.t)) continue;
    if (is_two_valued(spectrum(plane, s), task.t, *task.b)) {
      out.sets.push_back(std::move(s));
    } else {
      out.anomalies.push_back(std::move(s));
    }
  }
  return out;
}

void sort_sets(std::vector<PointSet>& sets) {
  std::sort(sets.begin(), sets.end(),
            [](const PointSet& a, const PointSet& b) { return a.indices() < b.indices(); });
}

}  // namespace

SearchTask make_search_task(PlanePtr plane, std::uint64_t t, SearchOptions options) {
  if (!plane) throw std::invalid_argument("search task needs a plane");
  const std::uint64_t n = plane->order();
  if (t < 1 || t > n) {
    throw std::invalid_argument("search: t = " + std::to_string(t) + " outside 1.." + std::to_string(n));
  }
  SearchTask task;
  task.plane = std::move(plane);
  task.t = t;
  task.options = std::move(options);
  const BoundValue v = max_size_bound(n, t);
  if (v.attainable) {
    task.size = static_cast<std::uint64_t>(*v.bound);
    task.b = static_cast<std::uint64_t>(*v.b);
  }
  return task;
}

SearchResult exhaustive_extremal_search(const SearchTask& task) {
  if (!task.plane) throw std::invalid_argument("search task needs a plane");
  const IncidencePlane& plane = *task.plane;
  if (task.t < 1 || task.t > plane.order()) throw std::invalid_argument("search: t out of range");
  if (task.options.node_budget == 0) throw std::invalid_argument("search: node budget must be positive");
  if (task.options.workers == 0) throw std::invalid_argument("search: at least one worker is required");

  const auto start = std::chrono::steady_clock::now();
  SearchResult result;
  result.symmetry_reduced = task.options.symmetry;
  if (!task.size || !task.b) {
    result.vacuous = true;
    result.complete = true;
    return result;
  }
  if (const BoundValue v = max_size_bound(plane.order(), task.t);
      !v.attainable || *v.bound != *task.size || *v.b != *task.b) {
    throw std::invalid_argument("search: target size must equal the attainable bound");
  }

  std::vector<char> allowed;
  if (task.options.symmetry) allowed = orbit_minima(plane, task.options.permutations);

  Shared shared{plane,
                static_cast<std::uint32_t>(task.t),
                static_cast<std::uint32_t>(*task.b + 1),
                static_cast<std::uint32_t>(*task.size),
                task.options.symmetry ? &allowed : nullptr,
                task.options.node_budget};

  std::vector<Checked> per_task;
  if (!task.options.pruning) {
    per_task.push_back(check_leaves(task, enumerate_subsets(shared)));
  } else {
    const std::size_t n_points = plane.point_count();
    Frame root;
    root.count.assign(plane.line_count(), 0);
    root.remaining.resize(plane.line_count());
    for (LineIndex l = 0; l < plane.line_count(); ++l) {
      root.remaining[l] = static_cast<std::uint32_t>(plane.line(l).size());
    }
    root.chosen = PointMask(n_points);

    // Split the tree at a fixed depth; subtrees are independent and their
    // results concatenate in lexicographic order.
    std::size_t split = 0;
    if (task.options.workers > 1) {
      while ((std::size_t{1} << split) < 16 * static_cast<std::size_t>(task.options.workers)) ++split;
      split = std::min(split, n_points);
    }
    std::vector<Frame> prefixes;
    {
      Walker w(shared, static_cast<PointIndex>(split), &prefixes);
      w.run(root);
    }

    per_task.resize(prefixes.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= prefixes.size()) return;
        std::vector<PointMask> leaves;
        {
          Walker w(shared, static_cast<PointIndex>(n_points), nullptr);
          w.run(prefixes[i]);
          leaves = w.take_leaves();
        }
        per_task[i] = check_leaves(task, std::move(leaves));
      }
    };
    const unsigned n_threads =
        static_cast<unsigned>(std::min<std::size_t>(task.options.workers, std::max<std::size_t>(prefixes.size(), 1)));
    if (n_threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    }
  }

  for (auto& c : per_task) {
    for (auto& s : c.sets) result.sets.push_back(std::move(s));
    for (auto& s : c.anomalies) result.anomalies.push_back(std::move(s));
  }
  sort_sets(result.sets);
  sort_sets(result.anomalies);
  result.nodes = shared.nodes.load();
  result.leaves = shared.leaves.load();
  result.complete = !shared.aborted.load();
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

CertificationReport certify_no_other_t(const PlanePtr& plane, std::uint64_t t_first, std::uint64_t t_last,
                                       const SearchOptions& options) {
  CertificationReport report;
  report.order = plane->order();
  report.prime_power = as_prime_power(report.order);

  std::map<std::uint64_t, FamilyLabel> predicted;
  if (report.prime_power) {
    for (const auto& c : classify_prime_power(*report.prime_power)) {
      predicted[static_cast<std::uint64_t>(c.t)] = c.family;
    }
  }

  report.passed = true;
  for (std::uint64_t t = t_first; t <= t_last; ++t) {
    CertificationEntry e;
    e.t = t;
    const SearchTask task = make_search_task(plane, t, options);
    const BoundValue v = max_size_bound(plane->order(), t);
    e.attainable = v.attainable;
    e.bound = v.bound;
    e.b = v.b;
    const SearchResult r = exhaustive_extremal_search(task);
    e.found = r.sets.size();
    e.complete = r.complete && r.anomalies.empty();
    e.nodes = r.nodes;
    for (const auto& s : r.sets) ++e.families[characterize(*plane, s, t)];

    if (report.prime_power) {
      const auto it = predicted.find(t);
      e.expected = it != predicted.end();
      if (*e.expected) e.expected_family = it->second;
      const bool families_ok =
          std::all_of(e.families.begin(), e.families.end(),
                      [&](const auto& kv) { return e.expected_family && kv.first == *e.expected_family; });
      e.matches = e.complete && (e.found > 0) == *e.expected && families_ok;
    } else {
      e.matches = e.complete;
    }
    report.passed = report.passed && e.matches;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace tfold
