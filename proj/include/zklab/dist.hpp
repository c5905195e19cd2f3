#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zklab/rat.hpp"
#include "zklab/seed.hpp"

namespace zklab {

struct EmptyPreimageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite distribution with exact rational weights. Outcomes are opaque
// ordered tokens; weights are strictly positive and sum to exactly 1.
template <class T>
class Dist {
  public:
    Dist() = default;

    static Dist from_weights(std::vector<std::pair<T, Rat>> entries) {
        Dist d;
        Rat total = 0;
        for (auto& [outcome, w] : entries) {
            if (w < 0) throw std::invalid_argument("Dist: negative weight");
            if (w == 0) continue;
            auto [it, fresh] = d.w_.emplace(std::move(outcome), w);
            if (!fresh) throw std::invalid_argument("Dist: duplicate outcome");
            total += w;
        }
        if (total != 1) throw std::invalid_argument("Dist: weights sum to " + rat_str(total) + ", not 1");
        return d;
    }

    static Dist point(T outcome) { return from_weights({{std::move(outcome), Rat(1)}}); }

    // Accumulates (outcome, weight) pairs, merging duplicates; call
    // finish() once the mass is complete.
    class Builder {
      public:
        void add(const T& outcome, const Rat& w) {
            if (w < 0) throw std::invalid_argument("Dist: negative weight");
            if (w == 0) return;
            w_[outcome] += w;
        }
        Dist finish() {
            Rat total = 0;
            for (auto& [o, w] : w_) total += w;
            if (total != 1)
                throw std::invalid_argument("Dist: weights sum to " + rat_str(total) + ", not 1");
            Dist d;
            d.w_ = std::move(w_);
            return d;
        }

      private:
        std::map<T, Rat> w_;
    };

    const std::map<T, Rat>& support() const { return w_; }

    Rat prob(const T& outcome) const {
        auto it = w_.find(outcome);
        return it == w_.end() ? Rat(0) : it->second;
    }

    bool operator==(const Dist& other) const { return w_ == other.w_; }

  private:
    std::map<T, Rat> w_;
};

// Half the L1 distance; the advantage of the optimal distinguisher.
template <class T>
Rat tv_distance(const Dist<T>& a, const Dist<T>& b) {
    Rat sum = 0;
    for (const auto& [o, w] : a.support()) sum += rat_abs(w - b.prob(o));
    for (const auto& [o, w] : b.support())
        if (a.prob(o) == 0) sum += w;
    return sum / 2;
}

// Conditional law of the second coordinate given the first. Conditioning on
// a value outside the first marginal's support is the undefined case the
// caller must own, so it is a hard error here.
template <class A, class B>
Dist<B> condition_on_first(const Dist<std::pair<A, B>>& joint, const A& observed) {
    Rat marginal = 0;
    for (const auto& [o, w] : joint.support())
        if (o.first == observed) marginal += w;
    if (marginal == 0) throw EmptyPreimageError("condition: observed value has zero marginal mass");
    std::vector<std::pair<B, Rat>> entries;
    for (const auto& [o, w] : joint.support())
        if (o.first == observed) entries.emplace_back(o.second, w / marginal);
    typename Dist<B>::Builder b;
    for (auto& [o, w] : entries) b.add(o, w);
    return b.finish();
}

template <class A, class B>
Dist<A> marginal_first(const Dist<std::pair<A, B>>& joint) {
    typename Dist<A>::Builder b;
    for (const auto& [o, w] : joint.support()) b.add(o.first, w);
    return b.finish();
}

// Pointwise weighted sum of component distributions.
template <class T>
Dist<T> mix(const std::vector<std::pair<Dist<T>, Rat>>& components) {
    Rat total = 0;
    for (const auto& [d, w] : components) {
        if (w < 0) throw std::invalid_argument("mix: negative weight");
        total += w;
    }
    if (total != 1) throw std::invalid_argument("mix: weights sum to " + rat_str(total) + ", not 1");
    typename Dist<T>::Builder b;
    for (const auto& [d, w] : components)
        for (const auto& [o, p] : d.support()) b.add(o, p * w);
    return b.finish();
}

// Precomputed cumulative table over a common denominator, so each draw is an
// exact integer comparison. Use this for hot sampling loops. Holds pointers
// into the source Dist, which must outlive the sampler.
template <class T>
class DistSampler {
  public:
    explicit DistSampler(const Dist<T>& d) {
        if (d.support().empty()) throw std::invalid_argument("DistSampler: empty distribution");
        Int den = 1;
        for (const auto& [o, w] : d.support())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), Rat(w).get_den_mpz_t());
        Int cum = 0;
        for (const auto& [o, w] : d.support()) {
            cum += Int(w.get_num()) * (den / Int(w.get_den()));
            cum_.emplace_back(cum, &o);
        }
        den_ = den;
    }

    const T& draw(SeedStream& s) const {
        Int v = s.uniform_int(den_);
        // cum_ is strictly increasing; first entry with cum > v wins.
        std::size_t lo = 0, hi = cum_.size() - 1;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (cum_[mid].first > v)
                hi = mid;
            else
                lo = mid + 1;
        }
        return *cum_[lo].second;
    }

  private:
    Int den_;
    std::vector<std::pair<Int, const T*>> cum_;
};

// One-off draw; build a DistSampler instead when sampling repeatedly.
template <class T>
const T& sample(const Dist<T>& d, SeedStream& s) {
    return DistSampler<T>(d).draw(s);
}

}  // namespace zklab
