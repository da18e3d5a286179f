#include "dualmod/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dualmod {

Permutation::Permutation(std::size_t n) : images_(n) { std::iota(images_.begin(), images_.end(), 0); }

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
        if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[x])
            throw std::invalid_argument("Permutation: images are not a bijection");
        seen[x] = true;
    }
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
    Permutation p(n);
    std::swap(p.images_.at(a), p.images_.at(b));
    return p;
}

Permutation Permutation::coxeter(std::size_t n, std::size_t i) {
    if (i < 1 || i >= n) throw std::invalid_argument("coxeter: index out of range");
    return transposition(n, i - 1, i);
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("Permutation: degree mismatch");
    Permutation out(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) out.images_[i] = a.images_[b.images_[i]];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out(degree());
    for (std::size_t i = 0; i < degree(); ++i) out.images_[images_[i]] = static_cast<int>(i);
    return out;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < degree(); ++i)
        if (images_[i] != static_cast<int>(i)) return false;
    return true;
}

bool Permutation::is_involution() const { return !is_identity() && (*this * *this).is_identity(); }

int Permutation::parity() const {
    std::vector<bool> seen(degree(), false);
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) seen[j] = true;
    }
    return static_cast<int>((degree() - cycles) % 2);
}

std::vector<std::size_t> Permutation::coxeter_word() const {
    // Sort the one-line notation with adjacent swaps; each swap at positions
    // (i, i+1) right-multiplies by s_{i+1}. Reversing gives the word.
    std::vector<int> line = images_;
    std::vector<std::size_t> swaps;
    for (std::size_t pass = 0; pass < line.size(); ++pass)
        for (std::size_t i = 0; i + 1 < line.size(); ++i)
            if (line[i] > line[i + 1]) {
                std::swap(line[i], line[i + 1]);
                swaps.push_back(i + 1);
            }
    // images_ * s_{w1} * ... * s_{wk} = id, so images_ = s_{wk} * ... * s_{w1}.
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

std::string Permutation::to_string() const {
    std::ostringstream out;
    std::vector<bool> seen(degree(), false);
    bool any = false;
    for (std::size_t i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == static_cast<int>(i)) continue;
        any = true;
        out << '(';
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
            seen[j] = true;
            out << (j == i ? "" : " ") << j + 1;
        }
        out << ')';
    }
    if (!any) out << "()";
    return out.str();
}

}  // namespace dualmod
