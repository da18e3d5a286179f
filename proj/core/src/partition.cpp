#include "dualmod/partition.hpp"

#include <charconv>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace dualmod {

namespace {

void require_strict(const Partition& lambda, const char* op) {
    if (!lambda.is_strict()) {
        throw std::invalid_argument(std::string(op) + ": partition " + lambda.to_string() +
                                    " is not strict");
    }
}

bool passes(const Partition& p, PartitionFilter filter) {
    switch (filter) {
        case PartitionFilter::All: return true;
        case PartitionFilter::Strict: return p.is_strict();
        case PartitionFilter::Odd: return p.is_odd();
        case PartitionFilter::StrictOdd: return p.is_strict() && p.is_odd();
        case PartitionFilter::Benson: return p.is_strict() && benson_reducible(p);
        case PartitionFilter::BensonPlus:
            return p.is_strict() && benson_reducible(p) && even_part_sum(p) % 2 == 0;
    }
    return false;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view literal) {
    std::vector<int> parts;
    if (literal.empty() || literal == "0") return Partition{};
    std::size_t pos = 0;
    while (pos <= literal.size()) {
        auto comma = literal.find(',', pos);
        auto token = literal.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
            throw std::invalid_argument("malformed partition literal '" + std::string(literal) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

bool Partition::is_strict() const noexcept {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] == parts_[i - 1]) return false;
    return true;
}

bool Partition::is_odd() const noexcept {
    for (int p : parts_)
        if (p % 2 == 0) return false;
    return true;
}

std::string Partition::to_string() const { return "(" + to_literal() + ")"; }

std::string Partition::to_literal() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
    return out.str();
}

PartitionFilter parse_filter(std::string_view name) {
    if (name == "all") return PartitionFilter::All;
    if (name == "strict") return PartitionFilter::Strict;
    if (name == "odd") return PartitionFilter::Odd;
    if (name == "strict-odd") return PartitionFilter::StrictOdd;
    if (name == "benson") return PartitionFilter::Benson;
    if (name == "benson-plus") return PartitionFilter::BensonPlus;
    throw std::invalid_argument("unknown filter '" + std::string(name) +
                                "' (expected all, strict, odd, strict-odd, benson, benson-plus)");
}

std::string_view filter_name(PartitionFilter filter) {
    switch (filter) {
        case PartitionFilter::All: return "all";
        case PartitionFilter::Strict: return "strict";
        case PartitionFilter::Odd: return "odd";
        case PartitionFilter::StrictOdd: return "strict-odd";
        case PartitionFilter::Benson: return "benson";
        case PartitionFilter::BensonPlus: return "benson-plus";
    }
    return "?";
}

std::vector<Partition> enumerate(int n, PartitionFilter filter) {
    if (n < 0) throw std::invalid_argument("enumerate: weight must be non-negative");
    const bool odd_only = filter == PartitionFilter::Odd || filter == PartitionFilter::StrictOdd;
    const bool strict_only = filter != PartitionFilter::All && filter != PartitionFilter::Odd;
    std::vector<Partition> out;
    if (n == 0) {
        if (!odd_only) {
            if (filter == PartitionFilter::All || filter == PartitionFilter::Strict)
                out.emplace_back();
        }
        return out;
    }

    // Depth-first with the largest next part first gives lexicographically
    // decreasing order.
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            Partition p(parts);
            if (passes(p, filter)) out.push_back(std::move(p));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            if (odd_only && part % 2 == 0) continue;
            parts.push_back(part);
            rec(remaining - part, strict_only ? part - 1 : part);
            parts.pop_back();
        }
    };
    rec(n, n);
    return out;
}

PairedView::PairedView(const Partition& lambda) {
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size(); i += 2)
        pairs.emplace_back(p[i], i + 1 < p.size() ? p[i + 1] : 0);
}

Partition PairedView::flatten() const {
    std::vector<int> parts;
    for (auto [a, b] : pairs) {
        parts.push_back(a);
        if (b > 0) parts.push_back(b);
    }
    return Partition(std::move(parts));
}

std::string_view verdict_name(DualityVerdict verdict) {
    switch (verdict) {
        case DualityVerdict::NotSplit: return "not-split";
        case DualityVerdict::SelfDualPair: return "self-dual-pair";
        case DualityVerdict::DualPair: return "dual-pair";
    }
    return "?";
}

DualityVerdict parse_verdict(std::string_view name) {
    if (name == "not-split") return DualityVerdict::NotSplit;
    if (name == "self-dual-pair") return DualityVerdict::SelfDualPair;
    if (name == "dual-pair") return DualityVerdict::DualPair;
    throw std::invalid_argument("unknown duality verdict '" + std::string(name) + "'");
}

bool benson_reducible(const Partition& lambda) {
    require_strict(lambda, "benson_reducible");
    // n = 0 is treated as not reducible: A_0 has only the trivial module.
    if (lambda.empty()) return false;
    for (auto [a, b] : PairedView(lambda).pairs) {
        const int diff = a - b;
        if (diff != 1 && diff != 2) return false;
        if ((a + b) % 4 == 2) return false;
    }
    return true;
}

int even_part_sum(const Partition& lambda) {
    int sum = 0;
    for (std::size_t i = 1; i < lambda.length(); i += 2) sum += lambda[i];
    return sum;
}

DualityVerdict summand_duality(const Partition& lambda) {
    require_strict(lambda, "summand_duality");
    if (!benson_reducible(lambda)) return DualityVerdict::NotSplit;
    return even_part_sum(lambda) % 2 == 0 ? DualityVerdict::SelfDualPair
                                          : DualityVerdict::DualPair;
}

int tau_parity(const Partition& lambda) {
    require_strict(lambda, "tau_parity");
    int transpositions = 0;
    for (int part : lambda.parts()) transpositions += part / 2;
    return transpositions % 2;
}

std::uint64_t partition_count(int n) {
    if (n < 0) return 0;
    // Euler's pentagonal number recurrence.
    std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::int64_t acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
            acc += sign * static_cast<std::int64_t>(p[m - g1]);
            if (g2 <= m) acc += sign * static_cast<std::int64_t>(p[m - g2]);
        }
        p[m] = static_cast<std::uint64_t>(acc);
    }
    return p[n];
}

}  // namespace dualmod
