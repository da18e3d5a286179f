#include "dualmod/bressoud.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace dualmod::bressoud {

namespace {

void require_strict_odd(const Partition& mu, const char* op) {
    if (!mu.is_strict())
        throw std::invalid_argument(std::string(op) + ": " + mu.to_string() + " is not strict");
    if (!mu.is_odd())
        throw std::invalid_argument(std::string(op) + ": " + mu.to_string() +
                                    " has an even part");
}

int mod4(int x) { return ((x % 4) + 4) % 4; }

// The block of mu whose parts sum to sigma, if sigma is a valid block sum.
std::optional<std::vector<int>> decode_block(int sigma) {
    if (sigma < 1) return std::nullopt;
    if (sigma % 2 == 1) return std::vector<int>{sigma};
    if (mod4(sigma) != 0 || sigma < 4) return std::nullopt;
    return std::vector<int>{sigma / 2 + 1, sigma / 2 - 1};
}

}  // namespace

std::vector<int> BlockDecomposition::sums() const {
    std::vector<int> out;
    out.reserve(blocks.size());
    for (const auto& b : blocks) out.push_back(std::accumulate(b.begin(), b.end(), 0));
    return out;
}

Partition BlockDecomposition::flatten() const {
    std::vector<int> parts;
    for (const auto& b : blocks) parts.insert(parts.end(), b.begin(), b.end());
    return Partition(std::move(parts));
}

int ShiftedComposition::weight() const { return std::accumulate(zeta.begin(), zeta.end(), 0); }

BlockDecomposition blocks(const Partition& mu) {
    require_strict_odd(mu, "blocks");
    BlockDecomposition out;
    const auto& p = mu.parts();
    for (std::size_t j = 0; j < p.size();) {
        if (j + 1 < p.size() && p[j] == p[j + 1] + 2) {
            out.blocks.push_back({p[j], p[j + 1]});
            j += 2;
        } else {
            out.blocks.push_back({p[j]});
            j += 1;
        }
    }
    return out;
}

ShiftedComposition shift(const std::vector<int>& sigma) {
    ShiftedComposition out;
    out.zeta.resize(sigma.size());
    for (std::size_t j = 0; j < sigma.size(); ++j) out.zeta[j] = sigma[j] + 4 * static_cast<int>(j);
    out.order.resize(sigma.size());
    std::iota(out.order.begin(), out.order.end(), std::size_t{0});
    std::stable_sort(out.order.begin(), out.order.end(),
                     [&](std::size_t a, std::size_t b) { return out.zeta[a] > out.zeta[b]; });
    return out;
}

Chain forward_chain(const Partition& mu) {
    Chain chain;
    chain.mu = mu;
    chain.blocks = blocks(mu);
    chain.sigma = chain.blocks.sums();
    chain.shifted = shift(chain.sigma);
    std::vector<int> gamma(chain.sigma.size());
    for (std::size_t j = 0; j < gamma.size(); ++j)
        gamma[j] = chain.shifted.zeta[chain.shifted.order[j]] - 4 * static_cast<int>(j);
    chain.gamma = Partition(std::move(gamma));
    chain.lambda = gamma_to_lambda(chain.gamma);
    return chain;
}

Partition forward(const Partition& mu) { return forward_chain(mu).gamma; }

bool satisfies_gap_conditions(const Partition& gamma) {
    const auto& g = gamma.parts();
    int last_even = -1;
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (mod4(g[j]) == 2) return false;
        if (j > 0 && g[j - 1] - g[j] < 4) return false;
        if (g[j] % 2 == 0) {
            if (last_even >= 0 && last_even - g[j] < 8) return false;
            last_even = g[j];
        }
    }
    return true;
}

Partition gamma_to_lambda(const Partition& gamma) {
    for (int part : gamma.parts()) {
        if (mod4(part) == 2)
            throw std::invalid_argument("gamma_to_lambda: part " + std::to_string(part) +
                                        " is congruent to 2 mod 4");
    }
    if (!satisfies_gap_conditions(gamma))
        throw std::invalid_argument("gamma_to_lambda: " + gamma.to_string() +
                                    " violates the gap conditions");
    std::vector<int> parts;
    for (int g : gamma.parts()) {
        if (g % 2 == 0) {
            parts.push_back(g / 2 + 1);
            parts.push_back(g / 2 - 1);
        } else {
            parts.push_back((g + 1) / 2);
            parts.push_back((g - 1) / 2);
        }
    }
    if (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

Chain inverse_chain(const Partition& lambda) {
    Chain chain;
    chain.lambda = lambda;
    if (lambda.empty()) return chain;
    if (!lambda.is_strict() || !benson_reducible(lambda))
        throw std::invalid_argument("bressoud inverse: " + lambda.to_string() +
                                    " does not satisfy Benson's conditions");

    std::vector<int> gamma;
    for (auto [a, b] : PairedView(lambda).pairs) gamma.push_back(a + b);
    chain.gamma = Partition(gamma);
    const std::size_t s = gamma.size();

    std::vector<int> sorted_zeta(s);
    for (std::size_t j = 0; j < s; ++j) sorted_zeta[j] = gamma[j] + 4 * static_cast<int>(j);

    // Assign a zeta value to each block position so the decoded blocks form
    // a strict odd partition consistent with the greedy block rule.
    std::vector<bool> used(s, false);
    std::vector<std::vector<int>> assigned;
    std::vector<std::size_t> source;
    std::function<bool(std::size_t)> place = [&](std::size_t j) -> bool {
        if (j == s) return true;
        std::optional<int> last_tried;
        for (std::size_t k = 0; k < s; ++k) {
            if (used[k] || (last_tried && *last_tried == sorted_zeta[k])) continue;
            last_tried = sorted_zeta[k];
            auto block = decode_block(sorted_zeta[k] - 4 * static_cast<int>(j));
            if (!block) continue;
            if (!assigned.empty()) {
                const auto& prev = assigned.back();
                const int gap = prev.back() - block->front();
                if (gap < 2 || (prev.size() == 1 && gap < 4)) continue;
            }
            used[k] = true;
            assigned.push_back(*block);
            source.push_back(k);
            if (place(j + 1)) return true;
            used[k] = false;
            assigned.pop_back();
            source.pop_back();
        }
        return false;
    };
    if (!place(0))
        throw std::logic_error("bressoud inverse: no preimage found for " + lambda.to_string());

    chain.blocks.blocks = assigned;
    chain.sigma = chain.blocks.sums();
    chain.mu = chain.blocks.flatten();
    chain.shifted = shift(chain.sigma);
    return chain;
}

Partition inverse(const Partition& lambda) { return inverse_chain(lambda).mu; }

std::vector<Partition> gap_partitions(int n) {
    if (n < 0) throw std::invalid_argument("gap_partitions: weight must be non-negative");
    std::vector<Partition> out;
    std::vector<int> parts;
    std::function<void(int, int, int)> rec = [&](int remaining, int max_part, int max_even) {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            if (mod4(part) == 2) continue;
            if (part % 2 == 0 && part > max_even) continue;
            parts.push_back(part);
            rec(remaining - part, part - 4, part % 2 == 0 ? part - 8 : max_even);
            parts.pop_back();
        }
    };
    rec(n, n, n);
    return out;
}

SchurCounts verify_schur(int n) {
    if (n < 0) throw std::invalid_argument("verify_schur: weight must be non-negative");
    if (n == 0) return {1, 1, 1};
    SchurCounts counts;
    counts.strict_odd = enumerate(n, PartitionFilter::StrictOdd).size();
    counts.gap_condition = gap_partitions(n).size();
    counts.benson = enumerate(n, PartitionFilter::Benson).size();
    return counts;
}

bool verify_sum_lemma(const Partition& mu) {
    require_strict_odd(mu, "verify_sum_lemma");
    const Partition lambda = forward_chain(mu).lambda;
    const int lhs = (mu.weight() - static_cast<int>(mu.length()));
    return lhs % 2 == 0 && lhs / 2 == even_part_sum(lambda);
}

}  // namespace dualmod::bressoud
