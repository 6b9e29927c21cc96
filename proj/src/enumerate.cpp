#include "zonogon/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "zonogon/canon.hpp"
#include "zonogon/irreducible.hpp"

namespace zonogon {

namespace {

using Sink = std::function<bool(const TilingComplex&, const std::vector<Move>&)>;

struct Dfs {
  SweepBuilder builder;
  const SearchConfig& cfg;
  const Sink& sink;
  std::uint64_t nodes = 0;
  std::uint64_t emitted = 0;
  bool stopped = false;

  Dfs(const Multiplicities& mult, const SearchConfig& c, const Sink& s)
      : builder(mult), cfg(c), sink(s) {}

  void rec() {
    ++nodes;
    if (cfg.progress_hook && nodes % cfg.progress_interval == 0)
      cfg.progress_hook(nodes, emitted);
    if (builder.at_final()) {
      if (builder.partial().faces.size() >= 2) {
        ++emitted;
        if (!sink(builder.snapshot(), builder.history())) stopped = true;
        if (cfg.max_solutions && emitted >= *cfg.max_solutions) stopped = true;
      }
      return;
    }
    for (const Move& mv : builder.admissible()) {
      if (!builder.normal_after_history(mv)) continue;
      int f = builder.apply(mv);
      bool prune = false;
      if ((cfg.prune_pair_convex || cfg.prune_closure) && !builder.at_final())
        prune = witness_after_gluing(builder.partial(), builder.rotations(), f,
                                     cfg.prune_pair_convex, cfg.prune_closure);
      if (!prune) rec();
      builder.undo();
      if (stopped) return;
    }
  }
};

bool rep_less(const Multiplicities& ma, const std::vector<Move>& wa,
              const Multiplicities& mb, const std::vector<Move>& wb) {
  if (ma.m != mb.m) return ma.m < mb.m;
  auto key = [](const Move& mv) { return std::pair(mv.start, mv.len); };
  return std::lexicographical_compare(
      wa.begin(), wa.end(), wb.begin(), wb.end(),
      [&](const Move& x, const Move& y) { return key(x) < key(y); });
}

}  // namespace

void enumerate_tilings(const Multiplicities& mult, const SearchConfig& cfg,
                       const Sink& sink) {
  if (!mult.valid())
    throw std::invalid_argument("invalid multiplicities (entries must be 1..2k-3)");
  Dfs dfs(mult, cfg, sink);
  dfs.rec();
}

ClassSet enumerate_irreducible_classes(const Multiplicities& mult,
                                       const SearchConfig& cfg) {
  ClassSet set;
  enumerate_tilings(mult, cfg,
                    [&](const TilingComplex& c, const std::vector<Move>& word) {
    ++set.emitted;
    if (!is_irreducible(c).first) return true;
    ++set.irreducible;
    std::string hex = code_hex(canonical_code(c));
    auto it = set.by_code.find(hex);
    if (it == set.by_code.end()) {
      set.by_code.emplace(hex, ClassEntry{c, word, 1});
    } else {
      ++it->second.tilings;
      if (rep_less(c.mult, word, it->second.rep.mult, it->second.rep_word)) {
        it->second.rep = c;
        it->second.rep_word = word;
      }
    }
    return true;
  });
  return set;
}

std::vector<Multiplicities> canonical_multiplicity_vectors(int k) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  int cap = 2 * k - 3;
  auto is_canonical = [k](const std::vector<int>& m) {
    std::vector<int> image(k);
    for (int rev = 0; rev < 2; ++rev) {
      for (int s = 0; s < k; ++s) {
        for (int i = 0; i < k; ++i)
          image[i] = rev ? m[((s - i) % k + k) % k] : m[(s + i) % k];
        if (image < m) return false;
      }
    }
    return true;
  };
  std::vector<Multiplicities> out;
  std::vector<int> m(k, 1);
  for (;;) {
    if (is_canonical(m)) out.push_back(Multiplicities{k, m});
    int i = k - 1;
    while (i >= 0 && m[i] == cap) m[i--] = 1;
    if (i < 0) break;
    ++m[i];
  }
  return out;
}

void merge_class_sets(ClassSet& into, ClassSet&& from) {
  into.emitted += from.emitted;
  into.irreducible += from.irreducible;
  for (auto& [code, entry] : from.by_code) {
    auto it = into.by_code.find(code);
    if (it == into.by_code.end()) {
      into.by_code.emplace(code, std::move(entry));
    } else {
      it->second.tilings += entry.tilings;
      if (rep_less(entry.rep.mult, entry.rep_word, it->second.rep.mult,
                   it->second.rep_word)) {
        it->second.rep = std::move(entry.rep);
        it->second.rep_word = std::move(entry.rep_word);
      }
    }
  }
}

ClassSet enumerate_irreducible_classes(int k, const SearchConfig& cfg, int jobs) {
  auto vecs = canonical_multiplicity_vectors(k);
  ClassSet all;
  if (jobs <= 1) {
    for (const auto& mult : vecs)
      merge_class_sets(all, enumerate_irreducible_classes(mult, cfg));
    return all;
  }
  std::atomic<size_t> next{0};
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= vecs.size()) break;
        ClassSet piece = enumerate_irreducible_classes(vecs[i], cfg);
        std::lock_guard<std::mutex> lock(mu);
        merge_class_sets(all, std::move(piece));
      }
    });
  }
  for (auto& t : pool) t.join();
  return all;
}

}  // namespace zonogon
