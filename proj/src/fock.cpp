#include "halg/fock.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace halg {

IntComposition::IntComposition(std::vector<int> p) : parts(std::move(p)) {
    for (int v : parts)
        if (v <= 0) throw std::invalid_argument("composition parts must be positive");
}

Polynomial::Polynomial(std::vector<Rational> c) : coeffs(std::move(c)) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (coeffs.size() < other.coeffs.size()) coeffs.resize(other.coeffs.size());
    for (std::size_t i = 0; i < other.coeffs.size(); ++i) coeffs[i] += other.coeffs[i];
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial{};
    std::vector<Rational> out(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) out[i + j] += a.coeffs[i] * b.coeffs[j];
    return Polynomial{std::move(out)};
}

Polynomial operator*(Polynomial a, const Rational& c) {
    for (auto& v : a.coeffs) v *= c;
    while (!a.coeffs.empty() && a.coeffs.back() == 0) a.coeffs.pop_back();
    return a;
}

PackedWord k_encode(const SetComposition& c) {
    const auto g = c.ground();
    const std::size_t n = g.size();
    std::vector<int> block_of(n, 0);
    for (std::size_t b = 0; b < c.length(); ++b) {
        for (const auto& label : c.blocks[b]) {
            std::size_t value = 0;
            try {
                value = std::stoul(label);
            } catch (const std::exception&) {
                throw std::invalid_argument("word encoding needs labels 1..n, got \"" + label +
                                            "\"");
            }
            if (value < 1 || value > n || std::to_string(value) != label || block_of[value - 1])
                throw std::invalid_argument("word encoding needs labels 1..n, got \"" + label +
                                            "\"");
            block_of[value - 1] = static_cast<int>(b) + 1;
        }
    }
    return PackedWord{std::move(block_of)};
}

IntComposition khat_encode(const SetComposition& c) {
    std::vector<int> parts;
    parts.reserve(c.length());
    for (const auto& b : c.blocks) parts.push_back(static_cast<int>(b.size()));
    return IntComposition{std::move(parts)};
}

LinComb<PackedWord> k_image(const LinComb<SetComposition>& x) {
    LinComb<PackedWord> out;
    for (const auto& [c, coeff] : x.terms()) out.add_term(k_encode(c), coeff);
    return out;
}

LinComb<IntComposition> khat_image(const LinComb<SetComposition>& x) {
    LinComb<IntComposition> out;
    for (const auto& [c, coeff] : x.terms()) out.add_term(khat_encode(c), coeff);
    return out;
}

LinComb<IntComposition> qsym_quasi_shuffle(const IntComposition& a, const IntComposition& b) {
    LinComb<IntComposition> out;
    for (const auto& s : enumerate_qsh(a.length(), b.length())) {
        std::vector<int> parts(static_cast<std::size_t>(s.max_value()), 0);
        for (std::size_t i = 0; i < a.length(); ++i) parts[s.images[i] - 1] += a.parts[i];
        for (std::size_t i = 0; i < b.length(); ++i)
            parts[s.images[a.length() + i] - 1] += b.parts[i];
        out.add_term(IntComposition{std::move(parts)}, 1);
    }
    return out;
}

LinComb<PackedWord> wqsym_product(const PackedWord& u, const PackedWord& v) {
    const int mu = u.max_value();
    const int mv = v.max_value();
    LinComb<PackedWord> out;
    for (const auto& s : enumerate_qsh(static_cast<std::size_t>(mu), static_cast<std::size_t>(mv))) {
        std::vector<int> letters;
        letters.reserve(u.images.size() + v.images.size());
        for (int x : u.images) letters.push_back(s.images[x - 1]);
        for (int x : v.images) letters.push_back(s.images[mu + x - 1]);
        out.add_term(PackedWord{std::move(letters)}, 1);
    }
    return out;
}

LinComb<TensorKey<PackedWord, PackedWord>> wqsym_delta(const PackedWord& u) {
    LinComb<TensorKey<PackedWord, PackedWord>> out;
    for (const auto& [sigma, tau] : enumerate_cont(static_cast<std::size_t>(u.max_value()))) {
        std::vector<int> left, right;
        left.reserve(u.images.size());
        right.reserve(u.images.size());
        for (int x : u.images) {
            left.push_back(sigma.images[x - 1]);
            right.push_back(tau.images[x - 1]);
        }
        out.add_term({PackedWord{std::move(left)}, PackedWord{std::move(right)}}, 1);
    }
    return out;
}

std::vector<std::pair<IntComposition, IntComposition>> qsym_deconcat(const IntComposition& c) {
    std::vector<std::pair<IntComposition, IntComposition>> out;
    for (std::size_t p = 0; p <= c.length(); ++p) {
        IntComposition left{std::vector<int>(c.parts.begin(), c.parts.begin() + p)};
        IntComposition right{std::vector<int>(c.parts.begin() + p, c.parts.end())};
        out.emplace_back(std::move(left), std::move(right));
    }
    return out;
}

namespace {

// Invokes f with the segment boundaries for every subset of the k-1 interior
// cut points of a length-k sequence.
template <typename F>
void for_each_cut(std::size_t k, F&& f) {
    if (k == 0) {
        f(std::vector<std::size_t>{0});
        return;
    }
    const std::size_t interior = k - 1;
    for (std::size_t mask = 0; mask < (std::size_t{1} << interior); ++mask) {
        std::vector<std::size_t> bounds{0};
        for (std::size_t i = 0; i < interior; ++i)
            if (mask & (std::size_t{1} << i)) bounds.push_back(i + 1);
        bounds.push_back(k);
        f(bounds);
    }
}

}  // namespace

LinComb<TensorKey<IntComposition, IntComposition>> qsym_delta(const IntComposition& c) {
    LinComb<TensorKey<IntComposition, IntComposition>> out;
    for_each_cut(c.length(), [&](const std::vector<std::size_t>& bounds) {
        std::vector<int> merged;
        LinComb<IntComposition> right;
        right.add_term(IntComposition{}, 1);
        for (std::size_t s = 0; s + 1 < bounds.size(); ++s) {
            std::vector<int> seg(c.parts.begin() + bounds[s], c.parts.begin() + bounds[s + 1]);
            merged.push_back(std::accumulate(seg.begin(), seg.end(), 0));
            LinComb<IntComposition> next;
            IntComposition seg_comp{std::move(seg)};
            for (const auto& [r, coeff] : right.terms())
                next += lc_scale(qsym_quasi_shuffle(r, seg_comp), coeff);
            right = std::move(next);
        }
        IntComposition left{std::move(merged)};
        for (const auto& [r, coeff] : right.terms()) out.add_term({left, r}, coeff);
    });
    return out;
}

Polynomial hilbert_poly(std::size_t n) {
    Polynomial p{{Rational{1}}};
    for (std::size_t i = 0; i < n; ++i)
        p = p * Polynomial{{Rational{-static_cast<long>(i)}, Rational{1}}};
    return p * Rational{Rational{1} / Rational{factorial(n)}};
}

Polynomial H_morphism(const IntComposition& c) { return hilbert_poly(c.length()); }

Polynomial H_morphism(const LinComb<IntComposition>& x) {
    Polynomial out;
    for (const auto& [c, coeff] : x.terms()) out += H_morphism(c) * coeff;
    return out;
}

LinComb<IntComposition> theta_q_qsym(const IntComposition& c, const Rational& q) {
    LinComb<IntComposition> out;
    for_each_cut(c.length(), [&](const std::vector<std::size_t>& bounds) {
        std::vector<int> merged;
        Rational weight = 1;
        for (std::size_t s = 0; s + 1 < bounds.size(); ++s) {
            const std::size_t len = bounds[s + 1] - bounds[s];
            merged.push_back(std::accumulate(c.parts.begin() + bounds[s],
                                             c.parts.begin() + bounds[s + 1], 0));
            weight *= hilbert(len, q);
        }
        out.add_term(IntComposition{std::move(merged)}, weight);
    });
    return out;
}

Polynomial chromatic_polynomial(const BlockGraph& g, const Rational& q) {
    return H_morphism(khat_image(phi_chr_q(g, q)));
}

Polynomial ehrhart_polynomial(const QuasiPoset& t, const Rational& q) {
    return H_morphism(khat_image(phi_ehr_q(t, q)));
}

Rational poly_eval(const Polynomial& p, const Rational& x) {
    Rational out = 0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) out = out * x + *it;
    return out;
}

Polynomial poly_scale_var(const Polynomial& p, const Rational& q) {
    std::vector<Rational> out = p.coeffs;
    Rational power = 1;
    for (auto& c : out) {
        c *= power;
        power *= q;
    }
    return Polynomial{std::move(out)};
}

std::string poly_to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = p.coeffs.size(); d-- > 0;) {
        const Rational& c = p.coeffs[d];
        if (c == 0) continue;
        const Rational mag = c < 0 ? Rational{-c} : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const bool unit = mag == 1 && d > 0;
        if (!unit) os << rat_to_string(mag);
        if (d > 0) {
            if (!unit) os << "*";
            os << "X";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

namespace {

constexpr std::size_t kCanonicalCap = 8;

std::string encode_shape(const std::vector<std::size_t>& sizes,
                         std::vector<std::pair<std::size_t, std::size_t>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    std::ostringstream os;
    os << "sizes:";
    for (std::size_t i = 0; i < sizes.size(); ++i) os << (i ? "," : "") << sizes[i];
    os << "|pairs:";
    for (std::size_t i = 0; i < pairs.size(); ++i)
        os << (i ? "," : "") << pairs[i].first << "-" << pairs[i].second;
    return os.str();
}

template <typename Pairs>
std::string minimal_encoding(const std::vector<std::vector<Label>>& parts, const Pairs& pairs,
                             bool directed) {
    const std::size_t n = parts.size();
    if (n > kCanonicalCap)
        throw std::invalid_argument("isomorphism-class keys are limited to 8 parts");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::vector<std::size_t> sizes(n);
        for (std::size_t i = 0; i < n; ++i) sizes[perm[i]] = parts[i].size();
        std::vector<std::pair<std::size_t, std::size_t>> mapped;
        mapped.reserve(pairs.size());
        for (const auto& [a, b] : pairs) {
            std::size_t x = perm[a], y = perm[b];
            if (!directed && x > y) std::swap(x, y);
            mapped.emplace_back(x, y);
        }
        std::string enc = encode_shape(sizes, std::move(mapped));
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

std::string canonical_class(const BlockGraph& g) {
    return "graph|" + minimal_encoding(g.blocks, g.edges, false);
}

std::string canonical_class(const QuasiPoset& t) {
    return "top|" + minimal_encoding(t.classes, t.covers, true);
}

}  // namespace halg
