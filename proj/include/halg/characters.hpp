#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "halg/setcomp.hpp"

namespace halg {

// Structure descriptor for a connected twisted double bialgebra over a
// concrete combinatorial basis K. split(x, I) returns the terms of the
// coproduct piece sending x into (part over I) tensor (part over the rest);
// an empty combination encodes a vanishing split.
template <class K>
struct BialgebraDescriptor {
    std::function<LabelSet(const K&)> ground;
    std::function<LinComb<TensorKey<K, K>>(const K&, const LabelSet&)> split;
    std::function<LinComb<TensorKey<K, K>>(const K&)> internal_delta;
    std::function<Rational(const K&)> eps_prime;
    // Connected factors of a basis element, used to shrink character memo
    // tables; may be left empty.
    std::function<std::vector<K>(const K&)> components;
    // Number of blocks/classes; strictly decreases along nontrivial
    // quotients, which drives the triangular star-inverse recursion.
    std::function<std::size_t(const K&)> piece_count;
};

using std::size_t;

// A multiplicative rational-valued functional with a synchronized memo.
template <class K>
class Character {
public:
    using Rule = std::function<Rational(const K&)>;

    Character() = default;
    Character(Rule rule, std::function<std::vector<K>(const K&)> components = nullptr)
        : state_(std::make_shared<State>()) {
        state_->rule = std::move(rule);
        state_->components = std::move(components);
    }

    Rational operator()(const K& x) const {
        if (!state_) throw std::logic_error("empty character");
        {
            std::lock_guard<std::mutex> lock(state_->mutex);
            auto it = state_->memo.find(x);
            if (it != state_->memo.end()) return it->second;
        }
        Rational value;
        std::vector<K> parts;
        if (state_->components) parts = state_->components(x);
        if (parts.size() > 1) {
            value = 1;
            for (const auto& p : parts) value *= (*this)(p);
        } else {
            value = state_->rule(x);
        }
        std::lock_guard<std::mutex> lock(state_->mutex);
        state_->memo.emplace(x, value);
        return value;
    }

private:
    struct State {
        Rule rule;
        std::function<std::vector<K>(const K&)> components;
        std::map<K, Rational> memo;
        std::mutex mutex;
    };
    std::shared_ptr<State> state_;
};

// Counit of the restriction coproduct: 1 exactly on the empty-ground unit.
template <class K>
Rational counit(const BialgebraDescriptor<K>& desc, const K& x) {
    return desc.ground(x).empty() ? Rational(1) : Rational(0);
}

namespace detail {

template <class F>
void for_each_subset(const std::vector<Label>& labels, F&& f) {
    for (size_t mask = 0; mask < (1u << labels.size()); ++mask) {
        LabelSet I;
        for (size_t i = 0; i < labels.size(); ++i)
            if ((mask >> i) & 1u) I.insert(labels[i]);
        f(I);
    }
}

}  // namespace detail

// Convolution through the restriction coproduct: (a * b)(x) sums
// a(x restricted to I) b(x restricted to the rest) over all subsets I.
template <class K, class FA, class FB>
Rational conv_D(const BialgebraDescriptor<K>& desc, FA&& a, FB&& b, const K& x) {
    LabelSet g = desc.ground(x);
    std::vector<Label> labels(g.begin(), g.end());
    Rational total = 0;
    detail::for_each_subset(labels, [&](const LabelSet& I) {
        for (const auto& [pair, coeff] : desc.split(x, I).terms())
            total += coeff * a(pair.first) * b(pair.second);
    });
    return total;
}

// Convolution through the internal coproduct.
template <class K, class FA, class FB>
Rational conv_d(const BialgebraDescriptor<K>& desc, FA&& a, FB&& b, const K& x) {
    Rational total = 0;
    for (const auto& [pair, coeff] : desc.internal_delta(x).terms())
        total += coeff * a(pair.first) * b(pair.second);
    return total;
}

// q-th convolution power: sum of H_n(q) (lambda - counit)^{*n}, truncated at
// n = |ground(x)| by local nilpotence.
template <class K, class F>
Rational power(const BialgebraDescriptor<K>& desc, F&& lambda, const Rational& q, const K& x) {
    auto diff = [&](const K& y) { return lambda(y) - counit(desc, y); };
    // Iterated convolution powers of diff. The same restrictions of x recur
    // across subset splits, so memoize per (power, element) to keep the
    // recursion polynomial in the number of distinct restrictions.
    std::map<std::pair<size_t, K>, Rational> memo;
    std::function<Rational(size_t, const K&)> pow_n = [&](size_t n, const K& y) -> Rational {
        if (n == 0) return counit(desc, y);
        if (n == 1) return diff(y);
        auto it = memo.find({n, y});
        if (it != memo.end()) return it->second;
        Rational value = conv_D(
            desc, [&](const K& z) { return pow_n(n - 1, z); }, diff, y);
        memo.emplace(std::make_pair(n, y), value);
        return value;
    };
    size_t n_max = desc.ground(x).size();
    Rational total = 0;
    for (size_t n = 0; n <= n_max; ++n) total += hilbert(n, q) * pow_n(n, x);
    return total;
}

template <class K>
Character<K> inverse_conv(const BialgebraDescriptor<K>& desc, const Character<K>& lambda) {
    return Character<K>([desc, lambda](const K& x) { return power(desc, lambda, Rational(-1), x); },
                        desc.components);
}

// Star-inverse by the triangular recursion: the internal coproduct of x has
// exactly the terms x tensor (finest restriction) with x itself on the left;
// every other left leg has strictly fewer pieces.
template <class K>
Character<K> inverse_star(const BialgebraDescriptor<K>& desc, const Character<K>& lambda) {
    auto memo = std::make_shared<std::map<K, Rational>>();
    auto mutex = std::make_shared<std::mutex>();
    auto rec_holder = std::make_shared<std::function<Rational(const K&)>>();
    *rec_holder = [desc, lambda, memo, mutex, rec_holder](const K& x) -> Rational {
        {
            std::lock_guard<std::mutex> lock(*mutex);
            auto it = memo->find(x);
            if (it != memo->end()) return it->second;
        }
        Rational diagonal = 0;
        Rational rest = 0;
        for (const auto& [pair, coeff] : desc.internal_delta(x).terms()) {
            if (pair.first == x)
                diagonal += coeff * lambda(pair.second);
            else
                rest += coeff * (*rec_holder)(pair.first) * lambda(pair.second);
        }
        if (diagonal == 0)
            throw std::domain_error("character is not star-invertible (vanishes on a single piece)");
        Rational value = (desc.eps_prime(x) - rest) / diagonal;
        std::lock_guard<std::mutex> lock(*mutex);
        memo->emplace(x, value);
        return value;
    };
    return Character<K>([rec_holder](const K& x) { return (*rec_holder)(x); });
}

// Right action of a character on a morphism into any linear basis:
// (phi <- lambda)(x) sums lambda(x'') phi(x') over the internal coproduct.
template <class K, class T, class Phi, class F>
LinComb<T> act_left(const BialgebraDescriptor<K>& desc, Phi&& phi, F&& lambda, const K& x) {
    LinComb<T> out;
    for (const auto& [pair, coeff] : desc.internal_delta(x).terms())
        out += phi(pair.first) * (coeff * lambda(pair.second));
    return out;
}

// All set compositions (ordered set partitions) of a label set.
inline std::vector<SetComposition> set_compositions_of(const LabelSet& ground) {
    std::vector<std::vector<std::vector<Label>>> raw;
    std::vector<Label> labels(ground.begin(), ground.end());
    if (labels.empty()) {
        raw.push_back({});
    } else {
        std::vector<std::vector<Label>> acc;
        std::function<void(const std::vector<Label>&)> rec = [&](const std::vector<Label>& rest) {
            if (rest.empty()) {
                raw.push_back(acc);
                return;
            }
            // every nonempty subset of rest can be the next block
            for (size_t mask = 1; mask < (1u << rest.size()); ++mask) {
                std::vector<Label> block, remaining;
                for (size_t i = 0; i < rest.size(); ++i) {
                    if ((mask >> i) & 1u)
                        block.push_back(rest[i]);
                    else
                        remaining.push_back(rest[i]);
                }
                acc.push_back(block);
                rec(remaining);
                acc.pop_back();
            }
        };
        rec(labels);
    }
    std::vector<SetComposition> out;
    out.reserve(raw.size());
    for (auto& blocks : raw) out.push_back(SetComposition(std::move(blocks)));
    return out;
}

// Universal morphism into set compositions: the coefficient of each
// composition (A_1..A_k) is the iterated split of x along it, evaluated by
// lambda on every leg.
template <class K, class F>
LinComb<SetComposition> universal_to_comp(const BialgebraDescriptor<K>& desc, F&& lambda,
                                          const K& x) {
    std::function<Rational(const K&, const std::vector<std::vector<Label>>&, size_t)> legs =
        [&](const K& y, const std::vector<std::vector<Label>>& parts, size_t idx) -> Rational {
        if (idx + 1 >= parts.size()) return lambda(y);
        LabelSet I(parts[idx].begin(), parts[idx].end());
        Rational total = 0;
        for (const auto& [pair, coeff] : desc.split(y, I).terms())
            total += coeff * lambda(pair.first) * legs(pair.second, parts, idx + 1);
        return total;
    };
    LinComb<SetComposition> out;
    for (const auto& comp : set_compositions_of(desc.ground(x))) {
        Rational coeff = comp.blocks.empty() ? (desc.ground(x).empty() ? Rational(1) : Rational(0))
                                             : legs(x, comp.blocks, 0);
        out.add_term(comp, coeff);
    }
    return out;
}

}  // namespace halg
