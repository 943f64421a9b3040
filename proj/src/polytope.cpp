#include "votopes/polytope.hpp"

#include <stdexcept>

namespace votopes {

long long LinearForm::eval(const std::vector<long long>& x) const {
    if (x.size() != coeffs.size())
        throw std::invalid_argument("LinearForm::eval: arity mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * x[i];
    return s;
}

long long LinearForm::coeff_sum() const {
    long long s = 0;
    for (long long c : coeffs) s += c;
    return s;
}

void HPolytope::validate() const {
    auto check = [&](const LinearForm& f) {
        if (static_cast<int>(f.coeffs.size()) != ambient_dim)
            throw std::invalid_argument("HPolytope: form arity != ambient dimension");
    };
    for (const auto& f : closed_inequalities) check(f);
    for (const auto& f : strict_inequalities) check(f);
    check(grading);
    for (long long c : grading.coeffs)
        if (c != 1) throw std::invalid_argument("HPolytope: grading must be all ones");
}

HPolytope make_polytope(int ambient_dim) {
    HPolytope p;
    p.ambient_dim = ambient_dim;
    p.grading.coeffs.assign(ambient_dim, 1);
    return p;
}

HPolytope closure(const HPolytope& p) {
    HPolytope c = p;
    for (auto& f : c.strict_inequalities) c.closed_inequalities.push_back(f);
    c.strict_inequalities.clear();
    return c;
}

bool reciprocity_applicable(const HPolytope& p, int polytope_dim) {
    if (!p.closed_inequalities.empty()) return false;
    for (const auto& f : p.strict_inequalities)
        if (f.coeff_sum() != 0) return false;
    return polytope_dim == p.ambient_dim - 1;
}

}  // namespace votopes
