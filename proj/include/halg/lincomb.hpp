#pragma once

#include <functional>
#include <map>
#include <tuple>
#include <utility>

#include "halg/rational.hpp"

namespace halg {

// Sparse formal linear combination over a canonically ordered basis key type.
// Invariants: no stored coefficient is zero; iteration follows the key order,
// so equal mathematical values serialize identically.
template <class K>
class LinComb {
public:
    using key_type = K;
    using map_type = std::map<K, Rational>;

    LinComb() = default;
    explicit LinComb(K key) { terms_[std::move(key)] = 1; }
    LinComb(K key, Rational coeff) {
        if (coeff != 0) terms_[std::move(key)] = std::move(coeff);
    }

    static LinComb zero() { return LinComb(); }

    const map_type& terms() const& { return terms_; }
    // Iterating the terms of a temporary must not dangle: hand the map out by
    // value so range-for keeps it alive.
    map_type terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const K& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const K& key, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& other) {
        for (const auto& [k, c] : other.terms_) add_term(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& other) {
        for (const auto& [k, c] : other.terms_) add_term(k, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Rational& c) { return a *= c; }
    friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

    // Applies a basis-level map linearly.
    template <class F>
    auto map(F&& f) const {
        using R = decltype(f(std::declval<const K&>()));
        R out;
        for (const auto& [k, c] : terms_) out += f(k) * c;
        return out;
    }

private:
    map_type terms_;
};

template <class K>
LinComb<K> lc_add(const LinComb<K>& a, const LinComb<K>& b) {
    return a + b;
}

template <class K>
LinComb<K> lc_scale(const LinComb<K>& a, const Rational& c) {
    return a * c;
}

// Bilinear extension of a basis-level product f : K1 x K2 -> LinComb<K3>.
template <class K1, class K2, class F>
auto bilinear_extend(F&& f, const LinComb<K1>& a, const LinComb<K2>& b) {
    using R = decltype(f(std::declval<const K1&>(), std::declval<const K2&>()));
    R out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) out += f(ka, kb) * (ca * cb);
    return out;
}

template <class K1, class K2>
using TensorKey = std::pair<K1, K2>;

template <class K1, class K2, class K3>
using TensorKey3 = std::tuple<K1, K2, K3>;

// Tensor product of two linear combinations.
template <class K1, class K2>
LinComb<TensorKey<K1, K2>> tensor(const LinComb<K1>& a, const LinComb<K2>& b) {
    LinComb<TensorKey<K1, K2>> out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) out.add_term({ka, kb}, ca * cb);
    return out;
}

}  // namespace halg
