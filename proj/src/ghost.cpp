#include "witt/ghost.hpp"

namespace witt {

SparsePoly ghost_poly(const std::vector<long>& indices, std::size_t i, VarId var_offset) {
    SparsePoly g;
    const long n = indices.at(i);
    for (std::size_t j = 0; j <= i; ++j) {
        const long k = indices[j];
        if (n % k != 0) continue;
        g = g + SparsePoly::var(var_offset + static_cast<VarId>(j),
                                static_cast<std::uint32_t>(n / k))
                    .scaled(mpq_class(k));
    }
    return g;
}

std::vector<RingElem> ghost_values(const std::vector<long>& indices,
                                   const std::vector<RingElem>& coords) {
    if (indices.size() != coords.size()) throw invalid_value("ghost: slot count mismatch");
    const RingSpec& R = coords.empty() ? RingSpec::integers() : coords[0].ring();
    std::vector<RingElem> out;
    out.reserve(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const long n = indices[i];
        RingElem acc = RingElem::zero(R);
        for (std::size_t j = 0; j <= i; ++j) {
            const long k = indices[j];
            if (n % k != 0) continue;
            acc = acc + RingElem::of(R, k) * coords[j].pow(static_cast<unsigned long>(n / k));
        }
        out.push_back(acc);
    }
    return out;
}

std::vector<RingElem> ghost_invert_values(const std::vector<long>& indices,
                                          const std::vector<RingElem>& targets) {
    if (indices.size() != targets.size()) throw invalid_value("ghost inversion: slot count mismatch");
    const RingSpec& R = targets.empty() ? RingSpec::integers() : targets[0].ring();
    std::vector<RingElem> z;
    z.reserve(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const long n = indices[i];
        RingElem acc = targets[i];
        for (std::size_t j = 0; j < i; ++j) {
            const long k = indices[j];
            if (n % k != 0) continue;
            acc = acc - RingElem::of(R, k) * z[j].pow(static_cast<unsigned long>(n / k));
        }
        try {
            z.push_back(acc.div_exact(RingElem::of(R, n)));
        } catch (const non_exact_division&) {
            throw non_integral_ghost(n);
        }
    }
    return z;
}

std::vector<SparsePoly> ghost_invert_symbolic(const std::vector<long>& indices,
                                              const std::vector<SparsePoly>& targets) {
    if (indices.size() != targets.size()) throw invalid_value("ghost inversion: slot count mismatch");
    std::vector<SparsePoly> z;
    z.reserve(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const long n = indices[i];
        SparsePoly acc = targets[i];
        for (std::size_t j = 0; j < i; ++j) {
            const long k = indices[j];
            if (n % k != 0) continue;
            acc = acc - z[j].pow(static_cast<std::uint32_t>(n / k)).scaled(mpq_class(k));
        }
        z.push_back(acc.divided(n));
    }
    return z;
}

namespace {

std::vector<SparsePoly> law_targets(const std::vector<long>& indices, LawOp op) {
    const VarId t = static_cast<VarId>(indices.size());
    std::vector<SparsePoly> targets;
    targets.reserve(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        SparsePoly gx = ghost_poly(indices, i, 0);
        switch (op) {
            case LawOp::sum: targets.push_back(gx + ghost_poly(indices, i, t)); break;
            case LawOp::prod: targets.push_back(gx * ghost_poly(indices, i, t)); break;
            case LawOp::neg: targets.push_back(-gx); break;
        }
    }
    return targets;
}

} // namespace

std::vector<SparsePoly> derive_coordinate_law(const std::vector<long>& indices, LawOp op) {
    return ghost_invert_symbolic(indices, law_targets(indices, op));
}

void certify_ghost_targets(const std::vector<long>& indices,
                           const std::vector<SparsePoly>& law,
                           const std::vector<SparsePoly>& targets) {
    if (law.size() != indices.size() || targets.size() != indices.size())
        throw certification_failure("law has the wrong number of coordinates");
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const long n = indices[i];
        SparsePoly acc;
        for (std::size_t j = 0; j <= i; ++j) {
            const long k = indices[j];
            if (n % k != 0) continue;
            acc = acc + law[j].pow(static_cast<std::uint32_t>(n / k)).scaled(mpq_class(k));
        }
        if (acc != targets[i])
            throw certification_failure("ghost compatibility fails at index " + std::to_string(n));
    }
}

void certify_ghost_compatibility(const std::vector<long>& indices,
                                 const std::vector<SparsePoly>& law, LawOp op) {
    certify_ghost_targets(indices, law, law_targets(indices, op));
}

namespace {

std::vector<RingElem> lift_to_z(const std::vector<RingElem>& coords) {
    const RingSpec Z = RingSpec::integers();
    std::vector<RingElem> out;
    out.reserve(coords.size());
    for (const auto& c : coords) out.push_back(RingElem::of(Z, c.num()));
    return out;
}

std::vector<RingElem> combine_ghosts(const std::vector<long>& idx, WittOp op,
                                     const std::vector<RingElem>& a,
                                     const std::vector<RingElem>* b) {
    std::vector<RingElem> ga = ghost_values(idx, a);
    if (op == WittOp::neg) {
        for (auto& g : ga) g = -g;
        return ghost_invert_values(idx, ga);
    }
    std::vector<RingElem> gb = ghost_values(idx, *b);
    for (std::size_t i = 0; i < ga.size(); ++i) {
        switch (op) {
            case WittOp::add: ga[i] = ga[i] + gb[i]; break;
            case WittOp::sub: ga[i] = ga[i] - gb[i]; break;
            case WittOp::mul: ga[i] = ga[i] * gb[i]; break;
            case WittOp::neg: break;
        }
    }
    return ghost_invert_values(idx, ga);
}

} // namespace

std::vector<RingElem> witt_coordinate_op(const RingSpec& ring,
                                         const std::vector<long>& indices, WittOp op,
                                         const std::vector<RingElem>& a,
                                         const std::vector<RingElem>* b) {
    if (ring.torsion_free()) return combine_ghosts(indices, op, a, b);
    std::vector<RingElem> az = lift_to_z(a);
    std::vector<RingElem> bz;
    if (b) bz = lift_to_z(*b);
    std::vector<RingElem> z = combine_ghosts(indices, op, az, b ? &bz : nullptr);
    std::vector<RingElem> out;
    out.reserve(z.size());
    for (const auto& c : z) out.push_back(reduce_to(c, ring));
    return out;
}

} // namespace witt
