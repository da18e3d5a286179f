#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dualmod {

/// Permutation of {0, ..., n-1}; image(i) is where i is sent.
/// Printed and parsed in 1-based cycle notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::size_t n);
    /// Throws std::invalid_argument unless `images` is a bijection.
    explicit Permutation(std::vector<int> images);

    static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);
    /// The Coxeter generator s_i = (i, i+1), 1-based i.
    static Permutation coxeter(std::size_t n, std::size_t i);

    std::size_t degree() const noexcept { return images_.size(); }
    int operator()(std::size_t i) const { return images_[i]; }
    const std::vector<int>& images() const noexcept { return images_; }

    /// (a * b)(i) = a(b(i)): b acts first.
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    Permutation inverse() const;

    bool is_identity() const;
    bool is_involution() const;
    /// 0 for even, 1 for odd, by cycle counting.
    int parity() const;

    /// Word s_{w[0]} * s_{w[1]} * ... (1-based indices) equal to this
    /// permutation, from bubble sort.
    std::vector<std::size_t> coxeter_word() const;

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

}  // namespace dualmod
