#include "conegauge/sampling.hpp"

#include "conegauge/linalg.hpp"

namespace conegauge {

std::int64_t RationalSampler::integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
    std::uint64_t draw = engine_();
    while (draw >= limit) draw = engine_();
    return lo + static_cast<std::int64_t>(draw % span);
}

Rational RationalSampler::positive_value() { return {static_cast<long>(integer(1, 4096)), 64}; }

RVector RationalSampler::positive_values(std::size_t n) {
    RVector out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(positive_value());
    return out;
}

Rational RationalSampler::value_in(std::int64_t lo, std::int64_t hi, std::int64_t den) {
    return {static_cast<long>(integer(lo * den, hi * den)), static_cast<long>(den)};
}

RVector RationalSampler::convex_weights(std::size_t n) {
    RVector w;
    Rational total;
    for (std::size_t i = 0; i < n; ++i) {
        w.emplace_back(static_cast<long>(integer(1, 64)));
        total += w.back();
    }
    for (auto& x : w) x /= total;
    return w;
}

Point RationalSampler::interior_point(const Polytope& k) {
    const RVector w = convex_weights(k.size());
    Point x(k.dim());
    for (std::size_t i = 0; i < k.size(); ++i) x = x + w[i] * k.vertex(i);
    return x;
}

std::vector<std::size_t> RationalSampler::permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i > 1; --i) {
        const auto j = static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(i) - 1));
        std::swap(p[i - 1], p[j]);
    }
    return p;
}

PolytopeRef RationalSampler::simplex(std::size_t dim, std::string name) {
    for (;;) {
        std::vector<Point> pts(dim + 1, Point(dim));
        for (auto& p : pts)
            for (auto& c : p) c = value_in(-4, 4, 8);
        linalg::RMatrix rows;
        for (const auto& p : pts) {
            RVector r = p;
            r.emplace_back(1);
            rows.push_back(std::move(r));
        }
        if (linalg::row_basis(rows).dependent.empty()) return make_polytope(std::move(pts), std::move(name));
    }
}

double RationalSampler::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace conegauge
