#include "dualmod/class_census.hpp"

#include <stdexcept>

namespace dualmod::census {

namespace {

void require_positive(int n, const char* op) {
    if (n < 1) throw std::invalid_argument(std::string(op) + ": n must be at least 1");
}

std::uint64_t strict_not_benson(int n) {
    return enumerate(n, PartitionFilter::Strict).size() - enumerate(n, PartitionFilter::Benson).size();
}

}  // namespace

int ClassRecord::inverting_transpositions() const {
    return (mu.weight() - static_cast<int>(mu.length())) / 2;
}

std::vector<ClassRecord> two_regular_classes(int n) {
    require_positive(n, "two_regular_classes");
    std::vector<ClassRecord> out;
    for (auto& mu : enumerate(n, PartitionFilter::Odd)) {
        ClassRecord rec;
        rec.mu = std::move(mu);
        rec.splits = rec.mu.is_strict();
        rec.real = !rec.splits || rec.inverting_transpositions() % 2 == 0;
        out.push_back(std::move(rec));
    }
    return out;
}

std::uint64_t self_dual_count(int n) {
    std::uint64_t count = 0;
    for (const auto& rec : two_regular_classes(n)) {
        if (!rec.splits) count += 1;
        else if (rec.real) count += 2;
    }
    return count;
}

std::uint64_t irreducible_count(int n) {
    require_positive(n, "irreducible_count");
    return 2 * enumerate(n, PartitionFilter::Benson).size() + strict_not_benson(n);
}

std::uint64_t class_count_with_splitting(int n) {
    std::uint64_t count = 0;
    for (const auto& rec : two_regular_classes(n)) count += rec.splits ? 2 : 1;
    return count;
}

std::uint64_t predicted_self_dual_count(int n) {
    require_positive(n, "predicted_self_dual_count");
    return 2 * enumerate(n, PartitionFilter::BensonPlus).size() + strict_not_benson(n);
}

bool census_consistent(int n) {
    return self_dual_count(n) == predicted_self_dual_count(n) &&
           irreducible_count(n) == class_count_with_splitting(n);
}

}  // namespace dualmod::census
