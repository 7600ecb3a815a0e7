/*
   Copyright 2026 The qclcd Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qclcd/distance.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <thread>
#include <vector>

#include "qclcd/error.hpp"

namespace qclcd {

namespace {

constexpr unsigned kNoWeight = std::numeric_limits<unsigned>::max();

// Base-q counter t together with its reflected digits g_j = (t_j - t_{j+1}) mod q.
// Going from t to t+1 changes exactly one reflected digit, by +1 mod q.
struct Counter {
    std::uint64_t q;
    std::vector<std::uint64_t> t, g;

    Counter(std::uint64_t q_, unsigned k, std::uint64_t start) : q(q_), t(k, 0), g(k, 0) {
        for (unsigned j = 0; j < k; ++j) {
            t[j] = start % q;
            start /= q;
        }
        for (unsigned j = 0; j < k; ++j) {
            const std::uint64_t next = j + 1 < k ? t[j + 1] : 0;
            g[j] = (t[j] + q - next) % q;
        }
    }

    // Advances t and returns (digit index, old reflected value).
    std::pair<unsigned, std::uint64_t> step() {
        unsigned j = 0;
        while (t[j] == q - 1) t[j++] = 0;
        ++t[j];
        const std::uint64_t v = g[j];
        g[j] = v + 1 == q ? 0 : v + 1;
        return {j, v};
    }
};

struct Bitsliced {
    unsigned planes, words, m;
    std::size_t stride;  // words per vector: planes * 2 * words

    Bitsliced(unsigned planes_, unsigned m_) : planes(planes_), words((m_ + 63) / 64), m(m_) {
        stride = static_cast<std::size_t>(planes) * 2 * words;
    }

    void load(std::span<const Coeff> v, std::uint64_t* out) const {
        std::fill(out, out + stride, 0);
        for (unsigned i = 0; i < 2 * m; ++i) {
            const unsigned h = i < m ? 0 : 1;
            const unsigned pos = i % m;
            for (unsigned b = 0; b < planes; ++b)
                if ((v[i] >> b) & 1U) out[(b * 2 + h) * words + pos / 64] |= std::uint64_t{1} << (pos % 64);
        }
    }

    unsigned weight(const std::uint64_t* s, WeightKind kind) const {
        unsigned w = 0;
        for (unsigned x = 0; x < words; ++x) {
            std::uint64_t s0 = 0, s1 = 0;
            for (unsigned b = 0; b < planes; ++b) {
                s0 |= s[(b * 2) * words + x];
                s1 |= s[(b * 2 + 1) * words + x];
            }
            w += kind == WeightKind::hamming ? std::popcount(s0) + std::popcount(s1) : std::popcount(s0 | s1);
        }
        return w;
    }
};

unsigned vector_weight(std::span<const Coeff> v, unsigned m, WeightKind kind) {
    unsigned w = 0;
    if (kind == WeightKind::hamming) {
        for (Coeff a : v) w += a != 0;
    } else {
        for (unsigned i = 0; i < m; ++i) w += (v[i] != 0 || v[m + i] != 0);
    }
    return w;
}

// Codeword of the message whose reflected digits are g.
std::vector<Coeff> encode(const Matrix& gm, const std::vector<std::uint64_t>& g) {
    const auto& f = gm.field().data();
    std::vector<Coeff> v(gm.cols(), 0);
    for (std::size_t j = 0; j < gm.rows(); ++j) {
        if (g[j] == 0) continue;
        for (std::size_t i = 0; i < gm.cols(); ++i) v[i] = f.add(v[i], f.mul(g[j], gm(j, i)));
    }
    return v;
}

// deltas[j * q + v] = (e_{v+1} - e_v) * row j
std::vector<std::vector<Coeff>> delta_rows(const Matrix& gm) {
    const FieldSpec& field = gm.field();
    const auto& f = field.data();
    const std::uint64_t q = field.order();
    std::vector<std::vector<Coeff>> d;
    d.reserve(gm.rows() * q);
    for (std::size_t j = 0; j < gm.rows(); ++j)
        for (std::uint64_t v = 0; v < q; ++v) {
            const Coeff s = f.sub((v + 1) % q, v);
            std::vector<Coeff> r(gm.cols());
            for (std::size_t i = 0; i < gm.cols(); ++i) r[i] = f.mul(s, gm(j, i));
            d.push_back(std::move(r));
        }
    return d;
}

unsigned run_bitsliced(const Matrix& gm, WeightKind kind, std::uint64_t begin, std::uint64_t end,
                       unsigned stop_below = 0) {
    const FieldSpec& field = gm.field();
    const std::uint64_t q = field.order();
    const unsigned k = static_cast<unsigned>(gm.rows());
    const Bitsliced bs(field.degree(), static_cast<unsigned>(gm.cols() / 2));
    const std::size_t S = bs.stride;

    // binary fields only need the rows themselves
    const bool binary = q == 2;
    std::vector<std::uint64_t> deltas;
    if (binary) {
        deltas.resize(k * S);
        for (unsigned j = 0; j < k; ++j) bs.load(gm.row(j), deltas.data() + j * S);
    } else {
        const auto rows = delta_rows(gm);
        deltas.resize(rows.size() * S);
        for (std::size_t r = 0; r < rows.size(); ++r) bs.load(rows[r], deltas.data() + r * S);
    }

    Counter ctr(q, k, begin);
    std::vector<std::uint64_t> state(S);
    bs.load(encode(gm, ctr.g), state.data());

    unsigned best = kNoWeight;
    std::uint64_t* s = state.data();
    for (std::uint64_t t = begin;;) {
        if (t != 0) {
            best = std::min(best, bs.weight(s, kind));
            if (best < stop_below) return best;
        }
        if (++t == end) break;
        const std::uint64_t* d;
        if (binary) {
            const unsigned j = static_cast<unsigned>(std::countr_one(t - 1));
            d = deltas.data() + j * S;
        } else {
            const auto [j, v] = ctr.step();
            d = deltas.data() + (j * q + v) * S;
        }
        for (std::size_t x = 0; x < S; ++x) s[x] ^= d[x];
    }
    return best;
}

unsigned run_generic(const Matrix& gm, WeightKind kind, std::uint64_t begin, std::uint64_t end,
                     unsigned stop_below = 0) {
    const auto& f = gm.field().data();
    const std::uint64_t q = gm.field().order();
    const unsigned k = static_cast<unsigned>(gm.rows());
    const unsigned m = static_cast<unsigned>(gm.cols() / 2);
    const auto deltas = delta_rows(gm);

    Counter ctr(q, k, begin);
    std::vector<Coeff> v = encode(gm, ctr.g);
    unsigned best = kNoWeight;
    for (std::uint64_t t = begin;;) {
        if (t != 0) {
            best = std::min(best, vector_weight(v, m, kind));
            if (best < stop_below) return best;
        }
        if (++t == end) break;
        const auto [j, old] = ctr.step();
        const auto& d = deltas[j * q + old];
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(v[i], d[i]);
    }
    return best;
}

}  // namespace

std::string_view to_string(WeightKind w) noexcept { return w == WeightKind::hamming ? "hamming" : "symplectic"; }

std::optional<WeightKind> parse_weight_kind(std::string_view s) noexcept {
    if (s == "hamming") return WeightKind::hamming;
    if (s == "symplectic") return WeightKind::symplectic;
    return std::nullopt;
}

std::optional<std::uint64_t> message_count(std::uint64_t q, unsigned k) noexcept {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / q) return std::nullopt;
        r *= q;
    }
    return r;
}

DistanceResult min_distance(const Matrix& g, WeightKind kind, std::uint64_t budget, unsigned threads) {
    const auto t0 = std::chrono::steady_clock::now();
    const FieldSpec& field = g.field();
    const unsigned k = static_cast<unsigned>(g.rows());
    if (k == 0) throw Error(ErrorCode::ZeroCode, "the code has dimension 0 and no nonzero codeword");
    if (g.cols() % 2 != 0 && kind == WeightKind::symplectic)
        throw Error(ErrorCode::UnsupportedSize, "symplectic weight needs an even length");
    const auto total = message_count(field.order(), k);
    if (!total || *total > budget)
        throw Error(ErrorCode::BudgetExceeded,
                    std::to_string(field.order()) + "^" + std::to_string(k) + " codewords exceed the budget of " +
                        std::to_string(budget));
    if (rank(g) != k) throw Error(ErrorCode::RankMismatch, "generator rows are linearly dependent");

    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, *total));

    const bool bitsliced = field.characteristic() == 2;
    const auto run = [&](std::uint64_t b, std::uint64_t e) {
        return bitsliced ? run_bitsliced(g, kind, b, e) : run_generic(g, kind, b, e);
    };
    const auto bound = [&](unsigned i) {
        return *total / threads * i + std::min<std::uint64_t>(i, *total % threads);
    };

    std::vector<unsigned> best(threads, kNoWeight);
    if (threads == 1) {
        best[0] = run(0, *total);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back([&, i] {
                const std::uint64_t b = bound(i), e = bound(i + 1);
                if (b < e) best[i] = run(b, e);
            });
    }

    DistanceResult r;
    r.kind = kind;
    r.value = *std::min_element(best.begin(), best.end());
    r.codewords = *total - 1;
    r.budget = budget;
    r.threads = threads;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::optional<unsigned> min_distance_at_least(const Matrix& g, WeightKind kind, unsigned floor) {
    if (g.rows() == 0) throw Error(ErrorCode::ZeroCode, "the code has dimension 0 and no nonzero codeword");
    const auto total = message_count(g.field().order(), static_cast<unsigned>(g.rows()));
    if (!total) throw Error(ErrorCode::BudgetExceeded, "message space does not fit in 64 bits");
    const unsigned d = g.field().characteristic() == 2 ? run_bitsliced(g, kind, 0, *total, floor)
                                                        : run_generic(g, kind, 0, *total, floor);
    if (d < floor) return std::nullopt;
    return d;
}

DistanceResult min_distance(const QCCode& c, WeightKind kind, std::uint64_t budget, unsigned threads) {
    const unsigned k = qc_dimension(c);
    if (k == 0) throw Error(ErrorCode::ZeroCode, "the code has dimension 0 and no nonzero codeword");
    const auto total = message_count(c.field().order(), k);
    if (!total || *total > budget)
        throw Error(ErrorCode::BudgetExceeded,
                    std::to_string(c.field().order()) + "^" + std::to_string(k) +
                        " codewords exceed the budget of " + std::to_string(budget));
    return min_distance(qc_generator_matrix(c), kind, budget, threads);
}

}  // namespace qclcd
