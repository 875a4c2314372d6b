#include "lie/characters.hpp"

#include <algorithm>

#include "lie/weyl.hpp"

namespace lie {

std::vector<long> weight_exponent(const RootSystem& rs, const Vec& mu) {
    std::vector<long> e(rs.rank);
    for (std::size_t i = 0; i < rs.rank; ++i) {
        Rat c = rs.coroot_pairing(mu, i);
        if (!c.is_integer())
            fail(Error::Kind::invalid_argument, "weight_exponent: not a lattice weight");
        e[i] = c.to_long();
    }
    return e;
}

Vec weight_from_exponent(const RootSystem& rs, const std::vector<long>& e) {
    Vec x(rs.rank, Rat(0));
    for (std::size_t i = 0; i < rs.rank; ++i)
        x = x + Rat(e[i]) * rs.fundamental_weights[i];
    return x;
}

namespace {

LaurentPoly weyl_numerator(const RootSystem& rs, const Vec& lambda) {
    auto W = generate_weyl_group(rs, 1u << 22);
    LaurentPoly num(rs.rank);
    Vec lr = lambda + rs.rho;
    for (const auto& w : W) {
        Vec im = w.apply(lr) - rs.rho;
        num.add_term(weight_exponent(rs, im), Rat(w.sign()));
    }
    return num;
}

LaurentPoly weyl_denominator_product(const RootSystem& rs) {
    LaurentPoly prod = LaurentPoly::constant(rs.rank, Rat(1));
    for (const auto& a : rs.positive_roots) {
        LaurentPoly f = LaurentPoly::constant(rs.rank, Rat(1));
        f.add_term(weight_exponent(rs, -a), Rat(-1));
        prod *= f;
    }
    return prod;
}

} // namespace

LaurentPoly weyl_character(const RootSystem& rs, const Vec& lambda) {
    for (std::size_t i = 0; i < rs.rank; ++i) {
        Rat c = rs.coroot_pairing(lambda, i);
        if (c.sign() < 0 || !c.is_integer())
            fail(Error::Kind::invalid_argument, "weyl_character: weight not dominant integral");
    }
    return weyl_numerator(rs, lambda).divide_exact(weyl_denominator_product(rs));
}

Rat weyl_dimension(const RootSystem& rs, const Vec& lambda) {
    Rat num(1), den(1);
    Vec lr = lambda + rs.rho;
    for (const auto& a : rs.positive_roots) {
        num *= rs.inner(lr, a);
        den *= rs.inner(rs.rho, a);
    }
    Rat d = num / den;
    if (!d.is_integer())
        fail(Error::Kind::invalid_argument, "weyl_dimension: non-integer value");
    return d;
}

bool weyl_denominator_check(const RootSystem& rs) {
    Vec zero(rs.rank, Rat(0));
    return weyl_numerator(rs, zero) == weyl_denominator_product(rs);
}

Rat character_dimension(const LaurentPoly& ch) {
    Rat s(0);
    for (const auto& [e, c] : ch.terms()) {
        (void)e;
        s += c;
    }
    return s;
}

std::vector<TensorSummand> tensor_decompose(const RootSystem& rs, const Vec& lambda, const Vec& mu) {
    LaurentPoly prod = weyl_character(rs, lambda) * weyl_character(rs, mu);
    Rat total = character_dimension(prod);
    std::vector<TensorSummand> out;
    while (!prod.is_zero()) {
        // Highest remaining weight: maximal height, ties by exponent order.
        const LaurentPoly::Exps* best = nullptr;
        Rat best_h(0);
        for (const auto& [e, c] : prod.terms()) {
            (void)c;
            Vec w = weight_from_exponent(rs, e);
            Rat h = rs.height(w);
            if (!best || h > best_h || (h == best_h && e > *best)) {
                best = &e;
                best_h = h;
            }
        }
        Vec hw = weight_from_exponent(rs, *best);
        if (!rs.is_dominant(hw))
            fail(Error::Kind::invalid_argument, "tensor_decompose: highest term not dominant");
        Rat mult = prod.coeff(*best);
        if (!mult.is_integer() || mult.sign() <= 0)
            fail(Error::Kind::invalid_argument, "tensor_decompose: non-positive multiplicity");
        prod -= mult * weyl_character(rs, hw);
        out.push_back({hw, mult.to_long()});
    }
    Rat sum(0);
    for (const auto& s : out) sum += Rat(s.multiplicity) * weyl_dimension(rs, s.highest_weight);
    if (sum != total)
        fail(Error::Kind::invalid_argument, "tensor_decompose: dimension not conserved");
    return out;
}

} // namespace lie
