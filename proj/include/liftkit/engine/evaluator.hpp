#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "liftkit/engine/category.hpp"
#include "liftkit/engine/expr.hpp"
#include "liftkit/engine/parallel.hpp"
#include "liftkit/engine/verdict.hpp"

namespace liftkit::engine {

/// An expression that cannot be evaluated: an inner step would quantify over
/// an infinite class.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvalOptions {
  /// Size bound for oracle-backed inner classes that carry no bound of their own.
  std::size_t working_bound = 4;
  /// Truncation for unbounded inner steps evaluated by lifting. Without it
  /// such steps are rejected.
  std::optional<std::size_t> inner_bound;
  unsigned threads = 1;
};

/// An exact characterization of the class denoted by `prefix`.
template <class M>
struct Oracle {
  std::string name;
  OrthExpr<M> prefix;
  std::function<bool(const M&)> holds;
  /// Largest size at which agreement with lifting was checked; 0 = unverified.
  std::size_t verified_bound = 0;
};

template <Category C>
class Evaluator;

/**
 * Oracle substitution table. An oracle is used only after `verify` has
 * matched it against lifting over every morphism up to the working bound.
 */
template <Category C>
class OracleRegistry {
 public:
  using M = typename C::Morphism;

  struct Disagreement {
    std::string oracle;
    M morphism;
    bool oracle_says;
  };

  void add(std::string name, OrthExpr<M> prefix, std::function<bool(const M&)> holds) {
    entries_.push_back({std::move(name), std::move(prefix), std::move(holds), 0});
  }

  const std::vector<Oracle<M>>& entries() const { return entries_; }

  const Oracle<M>* find(const C& cat, const OrthExpr<M>& prefix, std::size_t needed) const {
    for (const auto& o : entries_) {
      if (o.verified_bound >= needed && same_expr(cat, o.prefix, prefix)) return &o;
    }
    return nullptr;
  }

  /// Checks each oracle against lifting (no substitution) over all morphisms
  /// of size <= bound; agreeing oracles become usable up to `bound`.
  std::vector<Disagreement> verify(const C& cat, std::size_t bound, EvalOptions options = {}) {
    std::vector<Disagreement> out;
    Evaluator<C> plain(cat, options);
    for (auto& o : entries_) {
      bool agrees = true;
      for (const auto& entry : plain.enumerate_class(o.prefix, bound)) {
        const bool says = o.holds(entry.morphism);
        if (says != entry.verdict.member()) {
          agrees = false;
          out.push_back({o.name, entry.morphism, says});
        }
      }
      if (agrees) o.verified_bound = std::max(o.verified_bound, bound);
    }
    return out;
  }

  static bool same_expr(const C& cat, const OrthExpr<M>& a, const OrthExpr<M>& b) {
    if (a.steps != b.steps || a.generators.size() != b.generators.size()) return false;
    auto keys = [&](const OrthExpr<M>& e) {
      std::vector<typename C::Key> k;
      for (const auto& g : e.generators) k.push_back(cat.key(g));
      std::sort(k.begin(), k.end());
      return k;
    };
    return keys(a) == keys(b);
  }

 private:
  std::vector<Oracle<M>> entries_;
};

/// A computed morphism set standing for an inner class.
template <class M>
struct Stage {
  std::vector<M> members;
  Approx approx = Approx::Exact;
  std::vector<StepTrace> trace;
};

/**
 * Bounded evaluation of iterated orthogonals.
 *
 * Inner classes are computed as finite sets of isomorphism representatives.
 * A written bound `_{<n}` is part of the class, so it keeps the set exact; a
 * truncation supplied by the options under-approximates. Each orthogonal
 * reverses inclusions, which is how the Approx tags propagate. Inner sets are
 * cached per expression prefix.
 */
template <Category C>
class Evaluator {
 public:
  using M = typename C::Morphism;

  explicit Evaluator(const C& cat, EvalOptions options = {},
                     const OracleRegistry<C>* oracles = nullptr)
      : cat_(cat), options_(options), oracles_(oracles), cache_(std::make_shared<Cache>()) {}

  const C& category() const { return cat_; }
  const EvalOptions& options() const { return options_; }

  /// Index into `set` of the first member that `h` fails to lift against on
  /// `side`, with the failing square.
  std::optional<std::pair<std::size_t, Square<M>>> first_failure(const M& h,
                                                                 const std::vector<M>& set,
                                                                 Side side) const {
    for (std::size_t i = 0; i < set.size(); ++i) {
      const M& f = side == Side::Left ? h : set[i];
      const M& g = side == Side::Left ? set[i] : h;
      if (decide(cat_, f, g)) continue;
      return std::pair{i, *cat_.lift(f, g).square};
    }
    return std::nullopt;
  }

  /// The set standing for `expr` truncated to its first `count` steps.
  Stage<M> stage(const OrthExpr<M>& expr, std::size_t count) const {
    if (expr.generators.empty()) throw EvalError("empty generator list");
    const CacheKey key = cache_key(expr, count);
    {
      std::lock_guard lock(cache_->mutex);
      if (auto it = cache_->stages.find(key); it != cache_->stages.end()) return it->second;
    }
    Stage<M> result;
    if (count == 0) {
      result.members = expr.generators;
      std::stable_sort(result.members.begin(), result.members.end(),
                       [&](const M& a, const M& b) { return cat_.key(a) < cat_.key(b); });
    } else {
      result = next_stage(expr, count, stage(expr, count - 1));
    }
    std::lock_guard lock(cache_->mutex);
    cache_->stages.emplace(key, result);
    return result;
  }

  Verdict<M> member(const OrthExpr<M>& expr, const M& h) const {
    if (expr.steps.empty()) throw EvalError("expression has no orthogonal step");
    const Step& last = expr.steps.back();
    if (last.bound && (cat_.size(cat_.domain(h)) >= *last.bound ||
                       cat_.size(cat_.codomain(h)) >= *last.bound)) {
      Verdict<M> v;
      v.kind = VerdictKind::ExactNo;
      v.note = "outside the step bound <" + std::to_string(*last.bound);
      return v;
    }
    if (oracles_) {
      if (const auto* o = oracles_->find(cat_, expr, options_.working_bound)) {
        Verdict<M> v;
        v.kind = o->holds(h) ? VerdictKind::ExactYes : VerdictKind::ExactNo;
        v.note = "oracle " + o->name;
        return v;
      }
    }
    return judge(h, stage(expr, expr.steps.size() - 1), last.side);
  }

  /// Every isomorphism class of morphisms with ends of size <= output_bound,
  /// in key order, each with its verdict.
  std::vector<ClassEntry<M>> enumerate_class(const OrthExpr<M>& expr, std::size_t output_bound) const {
    if (output_bound < 1) throw EvalError("output bound must be at least 1");
    if (expr.steps.empty()) throw EvalError("expression has no orthogonal step");
    // Fail early on unboundable inner steps.
    if (expr.steps.size() > 1) stage(expr, expr.steps.size() - 1);
    const auto candidates = cat_.morphisms(output_bound);
    std::vector<std::optional<ClassEntry<M>>> slots(candidates.size());
    parallel_for(candidates.size(), options_.threads, [&](std::size_t i) {
      slots[i] = ClassEntry<M>{candidates[i], member(expr, candidates[i])};
    });
    std::vector<ClassEntry<M>> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
  }

 private:
  struct CacheKey {
    std::vector<typename C::Key> generators;
    std::vector<std::tuple<int, std::size_t>> steps;
    friend bool operator<(const CacheKey& a, const CacheKey& b) {
      return std::tie(a.generators, a.steps) < std::tie(b.generators, b.steps);
    }
  };

  struct Cache {
    std::mutex mutex;
    std::map<CacheKey, Stage<M>> stages;
  };

  CacheKey cache_key(const OrthExpr<M>& expr, std::size_t count) const {
    CacheKey k;
    for (const auto& g : expr.generators) k.generators.push_back(cat_.key(g));
    std::sort(k.generators.begin(), k.generators.end());
    for (std::size_t i = 0; i < count; ++i) {
      k.steps.emplace_back(expr.steps[i].side == Side::Left ? 0 : 1,
                           expr.steps[i].bound.value_or(0));
    }
    return k;
  }

  static Approx after_orthogonal(Approx prev, bool written_bound) {
    // Orthogonals reverse inclusion; a truncation only ever removes members.
    switch (prev) {
      case Approx::Exact: return written_bound ? Approx::Exact : Approx::Under;
      case Approx::Under: return written_bound ? Approx::Over : Approx::Unknown;
      case Approx::Over: return Approx::Under;
      case Approx::Unknown: return Approx::Unknown;
    }
    return Approx::Unknown;
  }

  Stage<M> next_stage(const OrthExpr<M>& expr, std::size_t count, const Stage<M>& prev) const {
    const Step& step = expr.steps[count - 1];
    const Oracle<M>* oracle =
        oracles_ ? oracles_->find(cat_, expr.prefix(count), options_.working_bound) : nullptr;
    std::size_t max_size = 0;
    if (step.bound) {
      if (*step.bound == 0) throw EvalError("step bound must be positive");
      max_size = *step.bound - 1;
    } else if (oracle) {
      max_size = options_.inner_bound.value_or(options_.working_bound);
    } else if (options_.inner_bound) {
      max_size = *options_.inner_bound;
    } else {
      throw EvalError("inner step " + std::to_string(count) +
                      " has no size bound and no registered oracle; the class it quantifies "
                      "over is infinite (add _{<N} or supply an inner bound)");
    }

    const auto candidates = cat_.morphisms(max_size);
    std::vector<char> keep(candidates.size(), 0);
    parallel_for(candidates.size(), options_.threads, [&](std::size_t i) {
      keep[i] = oracle ? oracle->holds(candidates[i])
                       : !first_failure(candidates[i], prev.members, step.side).has_value();
    });

    Stage<M> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (keep[i]) out.members.push_back(candidates[i]);
    if (oracle) {
      out.approx = step.bound ? Approx::Exact : Approx::Under;
    } else {
      out.approx = after_orthogonal(prev.approx, step.bound.has_value());
    }
    out.trace = prev.trace;
    out.trace.push_back({step, max_size, out.approx, out.members.size(), oracle ? oracle->name : ""});
    return out;
  }

  Verdict<M> judge(const M& h, const Stage<M>& inner, Side side) const {
    Verdict<M> v;
    v.steps = inner.trace;
    const auto failure = first_failure(h, inner.members, side);
    if (failure) {
      v.witness = inner.members[failure->first];
      v.square = failure->second;
    }
    switch (inner.approx) {
      case Approx::Exact:
        v.kind = failure ? VerdictKind::ExactNo : VerdictKind::ExactYes;
        v.definitive = true;
        break;
      case Approx::Under:
        v.kind = failure ? VerdictKind::BoundedNo : VerdictKind::BoundedYes;
        v.definitive = failure.has_value();
        break;
      case Approx::Over:
        v.kind = failure ? VerdictKind::BoundedNo : VerdictKind::BoundedYes;
        v.definitive = !failure.has_value();
        break;
      case Approx::Unknown:
        v.kind = failure ? VerdictKind::BoundedNo : VerdictKind::BoundedYes;
        v.definitive = false;
        break;
    }
    return v;
  }

  const C& cat_;
  EvalOptions options_;
  const OracleRegistry<C>* oracles_;
  std::shared_ptr<Cache> cache_;
};

/// Membership for a single orthogonal step over explicit generators; always exact.
template <Category C>
Verdict<typename C::Morphism> is_member_one_step(const Evaluator<C>& ev,
                                                 const OrthExpr<typename C::Morphism>& expr,
                                                 const typename C::Morphism& h) {
  if (expr.steps.size() != 1) throw EvalError("expected a single orthogonal step");
  return ev.member(expr, h);
}

}  // namespace liftkit::engine
