#include "dualmod/representation.hpp"

#include <map>
#include <stdexcept>

#include "dualmod/linalg.hpp"

namespace dualmod {

std::string_view group_name(GroupKind g) { return g == GroupKind::Symmetric ? "S" : "A"; }
std::string_view field_name(FieldKind f) { return f == FieldKind::F2 ? "F2" : "F4"; }

Representation::Representation(GroupKind group, FieldKind field, int n, std::size_t dim,
                               std::vector<Generator> gens, std::optional<Partition> lambda)
    : group_(group), field_(field), n_(n), dim_(dim), gens_(std::move(gens)), lambda_(std::move(lambda)) {
    for (const auto& g : gens_) {
        if (g.matrix.rows() != dim_ || g.matrix.cols() != dim_)
            throw std::invalid_argument("Representation: generator " + g.label + " has wrong shape");
        if (field_ == FieldKind::F2 && !g.matrix.is_f2())
            throw std::invalid_argument("Representation: generator " + g.label + " is not over F2");
        if (static_cast<int>(g.element.degree()) != n_)
            throw std::invalid_argument("Representation: generator " + g.label + " has wrong degree");
    }
}

std::vector<MatrixF4> Representation::matrices() const {
    std::vector<MatrixF4> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back(g.matrix);
    return out;
}

bool Representation::generators_invertible() const {
    for (const auto& g : gens_)
        if (!is_invertible(g.matrix)) return false;
    return true;
}

std::vector<std::string> Representation::labels() const {
    std::vector<std::string> out;
    for (const auto& g : gens_) out.push_back(g.label);
    return out;
}

MatrixF4 Representation::evaluate(const Permutation& g) const {
    if (static_cast<int>(g.degree()) != n_) throw std::invalid_argument("evaluate: degree mismatch");
    const auto word = g.coxeter_word();
    MatrixF4 m = MatrixF4::identity(dim_);
    auto find = [&](const Permutation& p) -> const MatrixF4* {
        for (const auto& gen : gens_)
            if (gen.element == p) return &gen.matrix;
        return nullptr;
    };
    if (group_ == GroupKind::Symmetric) {
        // g = s_{w0} s_{w1} ... so M(g) = ... M(s_{w1}) M(s_{w0}).
        for (std::size_t idx : word) {
            const MatrixF4* s = find(Permutation::coxeter(g.degree(), idx));
            if (!s) throw std::invalid_argument("evaluate: missing Coxeter generator");
            m = *s * m;
        }
        return m;
    }
    if (word.size() % 2 != 0) throw std::invalid_argument("evaluate: odd permutation in alternating group");
    // s_a s_b = (s_1 s_a)^{-1} (s_1 s_b), with s_1 s_1 = 1.
    std::map<std::size_t, MatrixF4> h_cache, h_inverse_cache;
    auto h = [&](std::size_t i) -> const MatrixF4& {
        auto it = h_cache.find(i);
        if (it != h_cache.end()) return it->second;
        if (i == 1) return h_cache.emplace(i, MatrixF4::identity(dim_)).first->second;
        const Permutation p = Permutation::coxeter(g.degree(), 1) * Permutation::coxeter(g.degree(), i);
        const MatrixF4* mat = find(p);
        if (!mat) throw std::invalid_argument("evaluate: missing generator s1*s" + std::to_string(i));
        return h_cache.emplace(i, *mat).first->second;
    };
    auto h_inverse = [&](std::size_t i) -> const MatrixF4& {
        auto it = h_inverse_cache.find(i);
        if (it != h_inverse_cache.end()) return it->second;
        // s_1 s_i has order 3 for i = 2 and at most 2 otherwise.
        const MatrixF4& m = h(i);
        return h_inverse_cache.emplace(i, i == 2 ? m * m : m).first->second;
    };
    for (std::size_t k = 0; k < word.size(); k += 2) {
        const MatrixF4 pair = h(word[k + 1]) * h_inverse(word[k]);
        m = pair * m;
    }
    return m;
}

Representation Representation::with_matrices(std::vector<MatrixF4> matrices, FieldKind field) const {
    if (matrices.size() != gens_.size())
        throw std::invalid_argument("with_matrices: generator count mismatch");
    std::vector<Generator> gens = gens_;
    const std::size_t dim = matrices.empty() ? dim_ : matrices.front().rows();
    for (std::size_t i = 0; i < gens.size(); ++i) gens[i].matrix = std::move(matrices[i]);
    return Representation(group_, field, n_, dim, std::move(gens), lambda_);
}

}  // namespace dualmod
