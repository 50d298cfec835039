#include "halg/laws.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "halg/domains.hpp"
#include "halg/json_io.hpp"

namespace halg {

Rational rat_pow(const Rational& base, long exp) {
    Rational out = 1;
    Rational b = base;
    long e = exp;
    if (e < 0) {
        if (base == 0) throw std::domain_error("zero to a negative power");
        b = Rational{1} / base;
        e = -e;
    }
    for (long i = 0; i < e; ++i) out *= b;
    return out;
}

namespace {

Label shifted(const Label& l, std::size_t off) {
    return std::to_string(std::stoul(l) + off);
}

SetComposition relabel(const SetComposition& c, std::size_t off) {
    auto blocks = c.blocks;
    for (auto& b : blocks)
        for (auto& l : b) l = shifted(l, off);
    return SetComposition(std::move(blocks));
}

BlockGraph relabel(const BlockGraph& g, std::size_t off) {
    auto blocks = g.blocks;
    for (auto& b : blocks)
        for (auto& l : b) l = shifted(l, off);
    return BlockGraph(std::move(blocks), g.edges);
}

QuasiPoset relabel(const QuasiPoset& t, std::size_t off) {
    auto classes = t.classes;
    for (auto& c : classes)
        for (auto& l : c) l = shifted(l, off);
    return QuasiPoset(std::move(classes), t.covers);
}

template <class F>
void for_each_subset_of(const std::vector<Label>& labels, F&& f) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << labels.size()); ++mask) {
        LabelSet I;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if ((mask >> i) & 1u) I.insert(labels[i]);
        f(I);
    }
}

std::string label_set_text(const LabelSet& I) {
    std::string out = "{";
    for (const auto& l : I) out += (out.size() > 1 ? "," : "") + l;
    return out + "}";
}

using Functional = std::pair<std::string, std::function<Rational(const Json&)>>;

// Wraps a pure functional with a shared cache; the law loops evaluate the
// same functional on the same restrictions many times over.
template <class K, class F>
std::function<Rational(const K&)> memoized(F f) {
    auto cache = std::make_shared<std::map<K, Rational>>();
    return [cache, f = std::move(f)](const K& y) {
        auto it = cache->find(y);
        if (it != cache->end()) return it->second;
        Rational v = f(y);
        cache->emplace(y, v);
        return v;
    };
}

// Both coproducts are pure in the basis element (and the chosen subset), and
// the convolution law loops revisit the same restrictions constantly, so give
// the descriptor shared caches before handing it to the law battery.
template <class K>
void cache_descriptor(BialgebraDescriptor<K>& desc) {
    auto split = desc.split;
    auto split_cache =
        std::make_shared<std::map<std::pair<K, std::vector<Label>>, LinComb<TensorKey<K, K>>>>();
    desc.split = [split, split_cache](const K& x, const LabelSet& I) {
        std::pair<K, std::vector<Label>> key{x, std::vector<Label>(I.begin(), I.end())};
        auto it = split_cache->find(key);
        if (it != split_cache->end()) return it->second;
        auto v = split(x, I);
        split_cache->emplace(std::move(key), v);
        return v;
    };
    auto idelta = desc.internal_delta;
    auto idelta_cache = std::make_shared<std::map<K, LinComb<TensorKey<K, K>>>>();
    desc.internal_delta = [idelta, idelta_cache](const K& x) {
        auto it = idelta_cache->find(x);
        if (it != idelta_cache->end()) return it->second;
        auto v = idelta(x);
        idelta_cache->emplace(x, v);
        return v;
    };
}

// One named functional on a basis type.
template <class K>
struct NamedFn {
    std::string name;
    std::function<Rational(const K&)> fn;
};

// Everything the generic law battery needs to know about one bialgebra.
template <class K>
struct Family {
    std::string prefix;
    BialgebraDescriptor<K> desc;
    std::function<LinComb<K>(const K&, const K&)> product;
    std::vector<K> singles;
    std::vector<std::pair<K, K>> pairs;
    std::vector<NamedFn<K>> functionals;  // unital linear functionals
    std::vector<NamedFn<K>> characters;   // multiplicative ones
};

struct Suite {
    std::vector<LawResult> results;
    std::size_t checked = 0;
    std::string failure;
    std::chrono::steady_clock::time_point started;

    void begin() {
        checked = 0;
        failure.clear();
        started = std::chrono::steady_clock::now();
    }
    // Registers one check; on the first failure, make() must render the
    // counterexample.
    template <class Make>
    void check(bool ok, Make&& make) {
        ++checked;
        if (!ok && failure.empty()) failure = make();
    }
    void end(const std::string& name) {
        results.push_back({name, failure.empty(), checked, failure});
        if (std::getenv("HALG_LAW_TIMING")) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
            std::fprintf(stderr, "%8lld ms  %s\n", static_cast<long long>(ms), name.c_str());
        }
    }
};

template <class K>
std::string instance_text(const K& x) {
    return to_json(x).dump();
}

template <class K>
using Pair = TensorKey<K, K>;
template <class K>
using Triple = TensorKey3<K, K, K>;

template <class K>
void generic_laws(Suite& s, const Family<K>& fam) {
    const auto& desc = fam.desc;

    // Coassociativity of the restriction coproduct.
    s.begin();
    for (const auto& x : fam.singles) {
        LabelSet g = desc.ground(x);
        std::vector<Label> labels(g.begin(), g.end());
        for_each_subset_of(labels, [&](const LabelSet& I) {
            std::vector<Label> rest;
            for (const auto& l : labels)
                if (!I.count(l)) rest.push_back(l);
            for_each_subset_of(rest, [&](const LabelSet& J) {
                LinComb<Triple<K>> lhs, rhs;
                for (const auto& [ab, c1] : desc.split(x, I).terms())
                    for (const auto& [cd, c2] : desc.split(ab.second, J).terms())
                        lhs.add_term({ab.first, cd.first, cd.second}, c1 * c2);
                LabelSet IJ = I;
                IJ.insert(J.begin(), J.end());
                for (const auto& [ef, c1] : desc.split(x, IJ).terms())
                    for (const auto& [gh, c2] : desc.split(ef.first, I).terms())
                        rhs.add_term({gh.first, gh.second, ef.second}, c1 * c2);
                s.check(lhs == rhs, [&] {
                    return instance_text(x) + " with I=" + label_set_text(I) +
                           " J=" + label_set_text(J);
                });
            });
        });
    }
    s.end(fam.prefix + "/restriction-coassociativity");

    // Counit of the restriction coproduct.
    s.begin();
    for (const auto& x : fam.singles) {
        auto empty_side = desc.split(x, LabelSet{});
        bool ok = empty_side.size() == 1;
        if (ok) {
            const auto& [pair, c] = *empty_side.terms().begin();
            ok = c == 1 && desc.ground(pair.first).empty() && pair.second == x;
        }
        auto full_side = desc.split(x, desc.ground(x));
        bool ok2 = full_side.size() == 1;
        if (ok2) {
            const auto& [pair, c] = *full_side.terms().begin();
            ok2 = c == 1 && pair.first == x && desc.ground(pair.second).empty();
        }
        s.check(ok && ok2, [&] { return instance_text(x); });
    }
    s.end(fam.prefix + "/restriction-counit");

    // Coassociativity of the internal coproduct.
    s.begin();
    for (const auto& x : fam.singles) {
        LinComb<Triple<K>> lhs, rhs;
        for (const auto& [ab, c1] : desc.internal_delta(x).terms()) {
            for (const auto& [a12, c2] : desc.internal_delta(ab.first).terms())
                lhs.add_term({a12.first, a12.second, ab.second}, c1 * c2);
            for (const auto& [b12, c2] : desc.internal_delta(ab.second).terms())
                rhs.add_term({ab.first, b12.first, b12.second}, c1 * c2);
        }
        s.check(lhs == rhs, [&] { return instance_text(x); });
    }
    s.end(fam.prefix + "/internal-coassociativity");

    // Counit laws for the internal coproduct.
    s.begin();
    for (const auto& x : fam.singles) {
        LinComb<K> left, right, expect{x};
        for (const auto& [ab, c] : desc.internal_delta(x).terms()) {
            left.add_term(ab.second, c * desc.eps_prime(ab.first));
            right.add_term(ab.first, c * desc.eps_prime(ab.second));
        }
        s.check(left == expect && right == expect, [&] { return instance_text(x); });
    }
    s.end(fam.prefix + "/internal-counit");

    // The restriction coproduct is multiplicative for the product.
    s.begin();
    for (const auto& [x, y] : fam.pairs) {
        LabelSet gx = desc.ground(x), gy = desc.ground(y);
        std::vector<Label> all(gx.begin(), gx.end());
        all.insert(all.end(), gy.begin(), gy.end());
        auto prod = fam.product(x, y);
        for_each_subset_of(all, [&](const LabelSet& I) {
            LinComb<Pair<K>> lhs, rhs;
            for (const auto& [k, c] : prod.terms())
                for (const auto& [ab, c2] : desc.split(k, I).terms())
                    lhs.add_term(ab, c * c2);
            LabelSet Ix, Iy;
            for (const auto& l : I) (gx.count(l) ? Ix : Iy).insert(l);
            for (const auto& [xs, cx] : desc.split(x, Ix).terms())
                for (const auto& [ys, cy] : desc.split(y, Iy).terms())
                    rhs += tensor(fam.product(xs.first, ys.first),
                                  fam.product(xs.second, ys.second)) *
                           (cx * cy);
            s.check(lhs == rhs, [&] {
                return instance_text(x) + " and " + instance_text(y) +
                       " with I=" + label_set_text(I);
            });
        });
    }
    s.end(fam.prefix + "/product-restriction-compatibility");

    // Cointeraction: the internal coproduct is multiplicative as well.
    s.begin();
    for (const auto& [x, y] : fam.pairs) {
        LinComb<Pair<K>> lhs, rhs;
        for (const auto& [k, c] : fam.product(x, y).terms())
            for (const auto& [ab, c2] : desc.internal_delta(k).terms()) lhs.add_term(ab, c * c2);
        for (const auto& [xs, cx] : desc.internal_delta(x).terms())
            for (const auto& [ys, cy] : desc.internal_delta(y).terms())
                rhs += tensor(fam.product(xs.first, ys.first),
                              fam.product(xs.second, ys.second)) *
                       (cx * cy);
        s.check(lhs == rhs, [&] { return instance_text(x) + " and " + instance_text(y); });
    }
    s.end(fam.prefix + "/product-internal-cointeraction");

    // Pairwise convolutions through either coproduct, memoized once so the
    // associativity triples below do not recompute them per instance.
    const auto& fns = fam.functionals;
    std::map<std::pair<std::size_t, std::size_t>, std::function<Rational(const K&)>> pair_D,
        pair_d;
    for (std::size_t i = 0; i < fns.size(); ++i)
        for (std::size_t j = 0; j < fns.size(); ++j) {
            pair_D[{i, j}] = memoized<K>([&desc, a = fns[i].fn, b = fns[j].fn](const K& y) {
                return conv_D(desc, a, b, y);
            });
            pair_d[{i, j}] = memoized<K>([&desc, a = fns[i].fn, b = fns[j].fn](const K& y) {
                return conv_d(desc, a, b, y);
            });
        }

    // Convolution group: associativity, unit, inverses via the (-1) power.
    s.begin();
    auto eps = [&](const K& y) { return counit(desc, y); };
    for (const auto& x : fam.singles) {
        for (std::size_t i = 0; i < fns.size(); ++i)
            for (std::size_t j = 0; j < fns.size(); ++j)
                for (std::size_t k = 0; k < fns.size(); ++k)
                    s.check(conv_D(desc, pair_D.at({i, j}), fns[k].fn, x) ==
                                conv_D(desc, fns[i].fn, pair_D.at({j, k}), x),
                            [&] {
                                return fns[i].name + "," + fns[j].name + "," + fns[k].name +
                                       " on " + instance_text(x);
                            });
    }
    for (const auto& a : fam.functionals) {
        auto inv = memoized<K>([&desc, &a](const K& y) { return power(desc, a.fn, Rational(-1), y); });
        for (const auto& x : fam.singles) {
            bool unit_ok = conv_D(desc, a.fn, eps, x) == a.fn(x) &&
                           conv_D(desc, eps, a.fn, x) == a.fn(x);
            bool inv_ok = conv_D(desc, a.fn, inv, x) == counit(desc, x) &&
                          conv_D(desc, inv, a.fn, x) == counit(desc, x);
            s.check(unit_ok && inv_ok,
                    [&] { return a.name + " on " + instance_text(x); });
        }
    }
    s.end(fam.prefix + "/convolution-group-laws");

    // Star monoid: associativity, unit eps', two-sided star inverses.
    s.begin();
    for (const auto& x : fam.singles) {
        for (std::size_t i = 0; i < fns.size(); ++i)
            for (std::size_t j = 0; j < fns.size(); ++j)
                for (std::size_t k = 0; k < fns.size(); ++k)
                    s.check(conv_d(desc, pair_d.at({i, j}), fns[k].fn, x) ==
                                conv_d(desc, fns[i].fn, pair_d.at({j, k}), x),
                            [&] {
                                return fns[i].name + "," + fns[j].name + "," + fns[k].name +
                                       " on " + instance_text(x);
                            });
    }
    for (const auto& a : fam.functionals) {
        auto inv = inverse_star(desc, Character<K>(a.fn, desc.components));
        for (const auto& x : fam.singles) {
            bool unit_ok = conv_d(desc, a.fn, desc.eps_prime, x) == a.fn(x) &&
                           conv_d(desc, desc.eps_prime, a.fn, x) == a.fn(x);
            bool inv_ok = conv_d(desc, a.fn, inv, x) == desc.eps_prime(x) &&
                          conv_d(desc, inv, a.fn, x) == desc.eps_prime(x);
            s.check(unit_ok && inv_ok,
                    [&] { return a.name + " on " + instance_text(x); });
        }
    }
    s.end(fam.prefix + "/star-monoid-laws");

    // Right distributivity of star over the convolution product.
    s.begin();
    const auto& chars = fam.characters;
    std::map<std::pair<std::size_t, std::size_t>, std::function<Rational(const K&)>> star_char;
    for (std::size_t i = 0; i < fns.size(); ++i)
        for (std::size_t k = 0; k < chars.size(); ++k)
            star_char[{i, k}] = memoized<K>([&desc, a = fns[i].fn, c = chars[k].fn](const K& y) {
                return conv_d(desc, a, c, y);
            });
    for (const auto& x : fam.singles)
        for (std::size_t i = 0; i < fns.size(); ++i)
            for (std::size_t j = 0; j < fns.size(); ++j)
                for (std::size_t k = 0; k < chars.size(); ++k)
                    s.check(conv_d(desc, pair_D.at({i, j}), chars[k].fn, x) ==
                                conv_D(desc, star_char.at({i, k}), star_char.at({j, k}), x),
                            [&] {
                                return fns[i].name + "," + fns[j].name + "," + chars[k].name +
                                       " on " + instance_text(x);
                            });
    s.end(fam.prefix + "/star-over-convolution-distributivity");

    // Exponent laws for convolution powers.
    s.begin();
    const std::vector<Rational> exponents{Rational(2), Rational(-1), Rational(1) / 2};
    for (const auto& a : fam.functionals) {
        std::map<Rational, std::function<Rational(const K&)>> pow_of;
        for (const auto& p : exponents)
            pow_of.emplace(p, memoized<K>([&desc, &a, p](const K& y) {
                               return power(desc, a.fn, p, y);
                           }));
        for (const auto& x : fam.singles) {
            bool ok = power(desc, a.fn, Rational(1), x) == a.fn(x) &&
                      power(desc, a.fn, Rational(0), x) == counit(desc, x);
            for (const auto& p : exponents)
                for (const auto& q : exponents) {
                    ok = ok && conv_D(desc, pow_of.at(p), pow_of.at(q), x) ==
                                   power(desc, a.fn, p + q, x);
                    ok = ok && power(desc, pow_of.at(p), q, x) == power(desc, a.fn, p * q, x);
                }
            s.check(ok, [&] { return a.name + " on " + instance_text(x); });
        }
    }
    s.end(fam.prefix + "/power-exponent-laws");

    // The character <-> morphism correspondence round-trips.
    s.begin();
    for (const auto& x : fam.singles) {
        for (const auto& a : fam.functionals) {
            auto phi = universal_to_comp(desc, a.fn, x);
            Rational recovered = 0;
            for (const auto& [k, c] : phi.terms()) recovered += c * eps_prime(k);
            s.check(recovered == a.fn(x), [&] { return a.name + " on " + instance_text(x); });
        }
        for (const auto& a : fam.characters) {
            auto base = [&](const K& y) { return universal_to_comp(desc, desc.eps_prime, y); };
            auto acted = act_left<K, SetComposition>(desc, base, a.fn, x);
            s.check(acted == universal_to_comp(desc, a.fn, x),
                    [&] { return a.name + " on " + instance_text(x); });
        }
    }
    s.end(fam.prefix + "/universal-morphism-roundtrip");
}

std::vector<std::vector<int>> int_compositions(int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (int first = 1; first <= n; ++first)
        for (auto rest : int_compositions(n - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    return out;
}

}  // namespace

std::vector<SetComposition> all_set_compositions(std::size_t n) {
    LabelSet ground;
    for (std::size_t i = 1; i <= n; ++i) ground.insert(std::to_string(i));
    return set_compositions_of(ground);
}

std::vector<BlockGraph> all_block_graphs(std::size_t n) {
    std::vector<Label> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    std::vector<BlockGraph> out;
    for (const auto& partition : set_partitions(n)) {
        std::vector<std::vector<Label>> blocks;
        for (const auto& group : partition) {
            std::vector<Label> block;
            for (auto idx : group) block.push_back(labels[idx]);
            blocks.push_back(std::move(block));
        }
        const std::size_t b = blocks.size();
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = i + 1; j < b; ++j) slots.emplace_back(i, j);
        for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
            std::vector<std::pair<std::size_t, std::size_t>> edges;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if ((mask >> i) & 1u) edges.push_back(slots[i]);
            out.emplace_back(blocks, std::move(edges));
        }
    }
    return out;
}

std::vector<QuasiPoset> all_quasi_posets(std::size_t n) {
    std::vector<Label> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    std::vector<QuasiPoset> out;
    for (const auto& partition : set_partitions(n)) {
        std::vector<std::vector<Label>> classes;
        for (const auto& group : partition) {
            std::vector<Label> cls;
            for (auto idx : group) cls.push_back(labels[idx]);
            classes.push_back(std::move(cls));
        }
        const std::size_t k = classes.size();
        // enumerate partial orders on k points as transitive closures
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (i != j) slots.emplace_back(i, j);
        std::set<std::vector<bool>> seen;
        for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
            std::vector<bool> rel(k * k, false);
            for (std::size_t i = 0; i < k; ++i) rel[i * k + i] = true;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if ((mask >> i) & 1u) rel[slots[i].first * k + slots[i].second] = true;
            for (std::size_t m = 0; m < k; ++m)
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        if (rel[i * k + m] && rel[m * k + j]) rel[i * k + j] = true;
            bool antisym = true;
            for (std::size_t i = 0; i < k && antisym; ++i)
                for (std::size_t j = i + 1; j < k && antisym; ++j)
                    if (rel[i * k + j] && rel[j * k + i]) antisym = false;
            if (!antisym || !seen.insert(rel).second) continue;
            std::vector<std::pair<std::size_t, std::size_t>> covers;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    if (i == j || !rel[i * k + j]) continue;
                    bool direct = true;
                    for (std::size_t m = 0; m < k && direct; ++m)
                        if (m != i && m != j && rel[i * k + m] && rel[m * k + j]) direct = false;
                    if (direct) covers.emplace_back(i, j);
                }
            out.emplace_back(classes, std::move(covers));
        }
    }
    return out;
}

std::int64_t proper_coloring_count(const BlockGraph& g, int k) {
    const std::size_t b = g.degree();
    std::int64_t count = 0;
    std::vector<int> color(b, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == b) {
            ++count;
            return;
        }
        for (int c = 1; c <= k; ++c) {
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u)
                if (g.has_edge(u, v) && color[u] == c) ok = false;
            if (!ok) continue;
            color[v] = c;
            rec(v + 1);
        }
    };
    rec(0);
    return count;
}

namespace {

std::int64_t monotone_map_count(const QuasiPoset& t, int k, bool strict) {
    const std::size_t n = t.class_count();
    std::int64_t count = 0;
    std::vector<int> value(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == n) {
            ++count;
            return;
        }
        for (int c = 1; c <= k; ++c) {
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u) {
                if (t.leq(u, v) && (strict ? value[u] >= c : value[u] > c)) ok = false;
                if (t.leq(v, u) && (strict ? c >= value[u] : c > value[u])) ok = false;
            }
            if (!ok) continue;
            value[v] = c;
            rec(v + 1);
        }
    };
    rec(0);
    return count;
}

}  // namespace

std::int64_t strict_monotone_count(const QuasiPoset& t, int k) {
    return monotone_map_count(t, k, true);
}

std::int64_t weak_monotone_count(const QuasiPoset& t, int k) {
    return monotone_map_count(t, k, false);
}

LawReport run_law_suite(std::size_t max_size) {
    const auto start = std::chrono::steady_clock::now();
    LawReport report;
    report.max_size = max_size;
    Suite s;

    // --- instance families -------------------------------------------------
    auto build_pairs = [&](auto gen) {
        using K = typename decltype(gen(0))::value_type;
        std::vector<std::pair<K, K>> pairs;
        for (std::size_t a = 0; a <= max_size; ++a)
            for (std::size_t b = 0; a + b <= max_size; ++b)
                for (const auto& x : gen(a))
                    for (const auto& y : gen(b)) pairs.emplace_back(x, relabel(y, a));
        return pairs;
    };

    Family<SetComposition> comp;
    comp.prefix = "comp";
    comp.desc = comp_descriptor();
    cache_descriptor(comp.desc);
    comp.product = [](const SetComposition& a, const SetComposition& b) {
        return quasi_shuffle(a, b);
    };
    for (std::size_t n = 0; n <= max_size; ++n)
        for (auto& c : all_set_compositions(n)) comp.singles.push_back(std::move(c));
    comp.pairs = build_pairs([](std::size_t n) { return all_set_compositions(n); });
    {
        auto epsp = comp.desc.eps_prime;
        comp.functionals = {
            {"eps-prime", epsp},
            {"ones", [](const SetComposition&) { return Rational(1); }},
            {"two-power-length",
             [](const SetComposition& c) { return rat_pow(2, static_cast<long>(c.length())); }}};
        auto d = comp.desc;
        comp.characters = {{"eps-prime", epsp},
                           {"eps-prime-square", [d, epsp](const SetComposition& c) {
                                return power(d, epsp, Rational(2), c);
                            }}};
    }

    Family<BlockGraph> graph;
    graph.prefix = "graph";
    graph.desc = graph_descriptor();
    cache_descriptor(graph.desc);
    graph.product = [](const BlockGraph& a, const BlockGraph& b) {
        return LinComb<BlockGraph>(disjoint_union(a, b));
    };
    for (std::size_t n = 0; n <= max_size; ++n)
        for (auto& g : all_block_graphs(n)) graph.singles.push_back(std::move(g));
    graph.pairs = build_pairs([](std::size_t n) { return all_block_graphs(n); });
    graph.functionals = {
        {"eps-prime", graph.desc.eps_prime},
        {"ones", [](const BlockGraph&) { return Rational(1); }},
        {"two-power-blocks",
         [](const BlockGraph& g) { return rat_pow(2, static_cast<long>(g.degree())); }}};
    graph.characters = {
        {"ones", [](const BlockGraph&) { return Rational(1); }},
        {"acyclic-orientations", [](const BlockGraph& g) { return Rational(ao_count(g)); }},
        {"two-power-edges",
         [](const BlockGraph& g) { return rat_pow(2, static_cast<long>(g.edges.size())); }}};

    Family<QuasiPoset> top;
    top.prefix = "top";
    top.desc = top_descriptor();
    cache_descriptor(top.desc);
    top.product = [](const QuasiPoset& a, const QuasiPoset& b) {
        return LinComb<QuasiPoset>(disjoint_union(a, b));
    };
    for (std::size_t n = 0; n <= max_size; ++n)
        for (auto& t : all_quasi_posets(n)) top.singles.push_back(std::move(t));
    top.pairs = build_pairs([](std::size_t n) { return all_quasi_posets(n); });
    top.functionals = {
        {"eps-prime", top.desc.eps_prime},
        {"ones", [](const QuasiPoset&) { return Rational(1); }},
        {"two-power-classes",
         [](const QuasiPoset& t) { return rat_pow(2, static_cast<long>(t.class_count())); }}};
    top.characters = {
        {"ones", [](const QuasiPoset&) { return Rational(1); }},
        {"heap-orders", [](const QuasiPoset& t) { return lambda_ho(t); }},
        {"two-power-covers",
         [](const QuasiPoset& t) { return rat_pow(2, static_cast<long>(t.covers.size())); }}};

    // --- generic double-bialgebra laws -------------------------------------
    auto memoize_family = [](auto& fam) {
        using Key = typename std::decay_t<decltype(fam.singles)>::value_type;
        for (auto& f : fam.functionals) f.fn = memoized<Key>(f.fn);
        for (auto& f : fam.characters) f.fn = memoized<Key>(f.fn);
    };
    memoize_family(comp);
    memoize_family(graph);
    memoize_family(top);
    generic_laws(s, comp);
    generic_laws(s, graph);
    generic_laws(s, top);

    // --- set-composition specific laws -------------------------------------
    s.begin();
    for (const auto& [x, y] : comp.pairs)
        s.check(quasi_shuffle(x, y) == quasi_shuffle(y, x),
                [&, &x = x, &y = y] { return instance_text(x) + " and " + instance_text(y); });
    s.end("comp/quasi-shuffle-commutativity");

    s.begin();
    for (std::size_t a = 1; a <= max_size; ++a)
        for (std::size_t b = 1; a + b <= max_size; ++b)
            for (std::size_t c = 1; a + b + c <= max_size; ++c)
                for (const auto& x : all_set_compositions(a))
                    for (const auto& yy : all_set_compositions(b))
                        for (const auto& zz : all_set_compositions(c)) {
                            auto y = relabel(yy, a);
                            auto z = relabel(zz, a + b);
                            auto left = bilinear_extend(
                                [](const SetComposition& u, const SetComposition& v) {
                                    return quasi_shuffle(u, v);
                                },
                                quasi_shuffle(x, y), LinComb<SetComposition>(z));
                            auto right = bilinear_extend(
                                [](const SetComposition& u, const SetComposition& v) {
                                    return quasi_shuffle(u, v);
                                },
                                LinComb<SetComposition>(x), quasi_shuffle(y, z));
                            s.check(left == right, [&] {
                                return instance_text(x) + ", " + instance_text(y) + ", " +
                                       instance_text(z);
                            });
                        }
    s.end("comp/quasi-shuffle-associativity");

    s.begin();
    for (const auto& c : comp.singles)
        s.check(internal_delta(c) == internal_delta_via_cont(c),
                [&, &c = c] { return instance_text(c); });
    s.end("comp/internal-coproduct-cross-check");

    s.begin();
    for (const auto& [x, y] : comp.pairs) {
        LinComb<SetComposition> lhs;
        for (const auto& [k, c] : shuffle(x, y).terms()) lhs += rho_iso(k) * c;
        auto rhs = bilinear_extend(
            [](const SetComposition& u, const SetComposition& v) { return quasi_shuffle(u, v); },
            rho_iso(x), rho_iso(y));
        s.check(lhs == rhs,
                [&, &x = x, &y = y] { return instance_text(x) + " and " + instance_text(y); });
    }
    s.end("comp/rho-exchanges-shuffle-and-quasi-shuffle");

    s.begin();
    for (const auto& c : comp.singles)
        s.check(universal_to_comp(comp.desc, comp.desc.eps_prime, c) ==
                    LinComb<SetComposition>(c),
                [&, &c = c] { return instance_text(c); });
    s.end("comp/universal-morphism-is-identity");

    // --- graph specific laws ------------------------------------------------
    s.begin();
    for (const auto& g : graph.singles) {
        LinComb<BlockGraph> round1, round2;
        for (const auto& [h, c] : gamma(g).terms()) round1 += gamma_inv(h) * c;
        for (const auto& [h, c] : gamma_inv(g).terms()) round2 += gamma(h) * c;
        LinComb<BlockGraph> expect{g};
        s.check(round1 == expect && round2 == expect, [&, &g = g] { return instance_text(g); });
    }
    s.end("graph/gamma-inverse-roundtrip");

    s.begin();
    for (const auto& g : graph.singles) {
        LinComb<SetComposition> via_gamma;
        for (const auto& [h, c] : gamma(g).terms()) via_gamma += phi_chr(h) * c;
        s.check(phi_chr_q(g, Rational(-1)) == via_gamma, [&, &g = g] { return instance_text(g); });
    }
    s.end("graph/chromatic-at-minus-one-via-gamma");

    s.begin();
    for (const auto& g : graph.singles)
        s.check(universal_to_comp(graph.desc, graph.desc.eps_prime, g) == phi_chr(g),
                [&, &g = g] { return instance_text(g); });
    s.end("graph/universal-morphism-equals-chromatic");

    const std::vector<Rational> dual_qs{Rational(2), Rational(1) / 2, Rational(-3)};
    s.begin();
    for (const auto& g : graph.singles)
        for (const auto& q : dual_qs) {
            auto lhs = chromatic_polynomial(g, q);
            auto rhs = poly_scale_var(chromatic_polynomial(g, 1), Rational(1) / q) *
                       rat_pow(q, static_cast<long>(g.degree()));
            s.check(lhs == rhs, [&, &g = g] {
                return instance_text(g) + " at q=" + rat_to_string(q);
            });
        }
    s.end("graph/duality-principle");

    // --- topology specific laws ---------------------------------------------
    s.begin();
    for (const auto& t : top.singles) {
        LinComb<QuasiPoset> round1, round2;
        for (const auto& [u, c] : gamma_top(t).terms()) round1 += gamma_top_inv(u) * c;
        for (const auto& [u, c] : gamma_top_inv(t).terms()) round2 += gamma_top(u) * c;
        LinComb<QuasiPoset> expect{t};
        s.check(round1 == expect && round2 == expect, [&, &t = t] { return instance_text(t); });
    }
    s.end("top/gamma-inverse-roundtrip");

    s.begin();
    for (const auto& t : top.singles) {
        LinComb<SetComposition> via_gamma;
        for (const auto& [u, c] : gamma_top(t).terms()) via_gamma += phi_ehr(u) * c;
        s.check(phi_ehr_q(t, Rational(-1)) == via_gamma, [&, &t = t] { return instance_text(t); });
    }
    s.end("top/ehrhart-at-minus-one-via-gamma");

    s.begin();
    for (const auto& t : top.singles)
        s.check(universal_to_comp(top.desc, top.desc.eps_prime, t) == phi_ehr(t),
                [&, &t = t] { return instance_text(t); });
    s.end("top/universal-morphism-equals-ehrhart");

    s.begin();
    for (const auto& t : top.singles) {
        if (t.class_count() == 0) continue;
        Rational lhs = 0;
        const auto ground = t.ground();
        for (const auto& open : open_sets(t)) {
            if (open.empty() || open.size() == t.class_count()) continue;
            LabelSet O;
            for (auto i : open) O.insert(t.classes[i].begin(), t.classes[i].end());
            LabelSet rest;
            for (const auto& l : ground)
                if (!O.count(l)) rest.insert(l);
            auto to = restrict_topology(t, O);
            auto tr = restrict_topology(t, rest);
            lhs += Rational(factorial(t.class_count())) /
                   (Rational(factorial(to->class_count())) *
                    Rational(factorial(tr->class_count()))) *
                   Rational(heap_order_count(*tr)) * Rational(heap_order_count(*to));
        }
        Rational rhs = (rat_pow(2, static_cast<long>(t.class_count())) - 2) *
                       Rational(heap_order_count(t));
        s.check(lhs == rhs, [&, &t = t] { return instance_text(t); });
    }
    s.end("top/heap-order-open-set-identity");

    // phi_ehr at q = -1 enumerates weak monotone surjections, with eps'
    // image identically one.
    s.begin();
    for (const auto& t : top.singles) {
        LinComb<SetComposition> weak_sum;
        for (const auto& f : weak_extensions(t)) {
            std::vector<std::vector<Label>> fibers(static_cast<std::size_t>(f.max_value()));
            for (std::size_t i = 0; i < t.class_count(); ++i)
                for (const auto& l : t.classes[i])
                    fibers[f.images[i] - 1].push_back(l);
            weak_sum.add_term(SetComposition(std::move(fibers)), 1);
        }
        auto value = phi_ehr_q(t, Rational(-1));
        Rational eps_image = 0;
        for (const auto& [k, c] : value.terms()) eps_image += c * eps_prime(k);
        s.check(value == weak_sum && eps_image == 1, [&, &t = t] { return instance_text(t); });
    }
    s.end("top/ehrhart-at-minus-one-counts-weak-extensions");

    // Star inverses of the duality characters have closed forms.
    s.begin();
    {
        auto ones_char = Character<QuasiPoset>([](const QuasiPoset&) { return Rational(1); },
                                               top.desc.components);
        auto ones_inv = inverse_star(top.desc, ones_char);
        for (const auto& t : top.singles) {
            long sign_exp = static_cast<long>(t.class_count() + t.component_count());
            s.check(ones_inv(t) == rat_pow(-1, sign_exp), [&, &t = t] { return instance_text(t); });
        }
        auto ho_char = Character<QuasiPoset>([](const QuasiPoset& t) { return lambda_ho(t); },
                                             top.desc.components);
        auto ho_inv = inverse_star(top.desc, ho_char);
        for (const auto& q : dual_qs) {
            auto scaled = Character<QuasiPoset>(
                [q](const QuasiPoset& t) {
                    return rat_pow(q, static_cast<long>(t.class_count()) -
                                          static_cast<long>(t.component_count())) *
                           lambda_ho(t);
                },
                top.desc.components);
            auto scaled_inv = inverse_star(top.desc, scaled);
            for (const auto& t : top.singles) {
                auto expect = rat_pow(q, static_cast<long>(t.class_count()) -
                                             static_cast<long>(t.component_count())) *
                              ho_inv(t);
                s.check(scaled_inv(t) == expect, [&, &t = t] {
                    return instance_text(t) + " at q=" + rat_to_string(q);
                });
            }
        }
    }
    s.end("top/duality-character-inverses");

    s.begin();
    for (const auto& t : top.singles)
        for (const auto& q : dual_qs) {
            auto lhs = ehrhart_polynomial(t, q);
            auto rhs = poly_scale_var(ehrhart_polynomial(t, 1), Rational(1) / q) *
                       rat_pow(q, static_cast<long>(t.class_count()));
            s.check(lhs == rhs, [&, &t = t] {
                return instance_text(t) + " at q=" + rat_to_string(q);
            });
        }
    s.end("top/duality-principle");

    // Cofreeness criterion for the joint product: splitting a joint product
    // either cuts inside the left factor, inside the right factor, or gives 0.
    s.begin();
    for (const auto& [x, y] : top.pairs) {
        auto xy = joint_product(x, y);
        const LabelSet gx = x.ground(), gy = y.ground();
        std::vector<Label> all(gx.begin(), gx.end());
        all.insert(all.end(), gy.begin(), gy.end());
        for_each_subset_of(all, [&, &x = x, &y = y](const LabelSet& I) {
            LabelSet J;
            for (const auto& l : all)
                if (!I.count(l)) J.insert(l);
            LinComb<Pair<QuasiPoset>> lhs;
            if (auto cut = delta_split(xy, I, J)) lhs.add_term({cut->first, cut->second}, 1);
            LinComb<Pair<QuasiPoset>> rhs;
            const bool x_inside = std::all_of(gx.begin(), gx.end(),
                                              [&](const Label& l) { return I.count(l) > 0; });
            const bool y_inside = std::all_of(gy.begin(), gy.end(),
                                              [&](const Label& l) { return J.count(l) > 0; });
            if (x_inside) {
                LabelSet L;
                for (const auto& l : I)
                    if (!gx.count(l)) L.insert(l);
                if (auto cut = delta_split(y, L, J))
                    rhs.add_term({joint_product(x, cut->first), cut->second}, 1);
            } else if (y_inside) {
                LabelSet Kset;
                for (const auto& l : J)
                    if (!gy.count(l)) Kset.insert(l);
                if (auto cut = delta_split(x, I, Kset))
                    rhs.add_term({cut->first, joint_product(cut->second, y)}, 1);
            }
            s.check(lhs == rhs, [&] {
                return instance_text(x) + " and " + instance_text(y) +
                       " with I=" + label_set_text(I);
            });
        });
    }
    s.end("top/joint-product-cofreeness-criterion");

    // --- QSym / polynomial level --------------------------------------------
    s.begin();
    for (int n = 0; n <= static_cast<int>(max_size); ++n)
        for (const auto& parts : int_compositions(n)) {
            IntComposition c{parts};
            for (const auto& q : dual_qs) {
                auto lhs = H_morphism(theta_q_qsym(c, q));
                auto rhs = poly_scale_var(H_morphism(c), q);
                s.check(lhs == rhs, [&] {
                    return to_json(c).dump() + " at q=" + rat_to_string(q);
                });
            }
        }
    s.end("qsym/hilbert-graduation-square");

    report.laws = std::move(s.results);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

}  // namespace halg
