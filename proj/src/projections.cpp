#include "ordercone/projections.hpp"

#include <algorithm>
#include <map>

#include "ordercone/errors.hpp"
#include "ordercone/parallel.hpp"

namespace ordercone {

namespace {

bool is_idempotent(const Mat& P) { return mat_mul(P, P) == P; }

Mat range_basis_of(const Mat& P) { return row_basis(transpose(P)); }

BandProjection make_projection(const OrderedSpace& s, const Band& range, const Band& kernel) {
    BandProjection bp;
    bp.matrix = projection_onto(range.basis, kernel.basis);
    bp.range_band = range;
    bp.kernel_band = kernel;
    bp.P_positive = positive_operator(s, bp.matrix);
    bp.complement_positive =
        positive_operator(s, mat_sub(Mat::identity(s.dim), bp.matrix));
    if (!bp.P_positive || !bp.complement_positive)
        throw PositivityContradiction(
            "direct sum of a band and its complement with a non-positive projection");
    return bp;
}

} // namespace

std::optional<BandProjection> is_projection_band(const OrderedSpace& s, const Band& B) {
    Band comp = complement_of_basis(s, B.basis);
    if (B.basis.rows + comp.basis.rows != s.dim) return std::nullopt;
    if (subspace_intersection(B.basis, comp.basis).rows != 0) return std::nullopt;
    return make_projection(s, B, comp);
}

Characterisation check_characterisation(const OrderedSpace& s, const Mat& P) {
    if (P.rows != s.dim || P.cols != s.dim)
        throw DimensionMismatchError("check_characterisation: shape mismatch");
    if (!is_idempotent(P))
        throw NotIdempotentError("check_characterisation: P² != P");

    const Mat range = range_basis_of(P);
    const Mat kernel = nullspace(P);
    const Band range_complement = complement_of_basis(s, range);
    const Band kernel_complement = complement_of_basis(s, kernel);

    Characterisation c;

    // (i) definitional: the range is a band whose band projection equals P.
    {
        Band closure = complement_of_basis(s, range_complement.basis);
        bool def = closure.basis == range;
        if (def) {
            Band range_band = closure;
            if (range_band.basis.rows + range_complement.basis.rows == s.dim) {
                Mat Q = projection_onto(range_band.basis, range_complement.basis);
                def = Q == P && positive_operator(s, Q) &&
                      positive_operator(s, mat_sub(Mat::identity(s.dim), Q));
            } else {
                def = false;
            }
        }
        c.band_projection_def = def;
    }

    c.kernel_is_range_complement = kernel == range_complement.basis;
    c.range_is_kernel_complement = range == kernel_complement.basis;
    c.range_disjoint_kernel = subspaces_disjoint(s, range, kernel);
    c.both_positive = positive_operator(s, P) &&
                      positive_operator(s, mat_sub(Mat::identity(s.dim), P));
    {
        const Mat Q = mat_sub(Mat::identity(s.dim), P);
        c.complement_route = positive_operator(s, Q) &&
                             positive_operator(s, mat_sub(Mat::identity(s.dim), Q));
    }

    const auto routes = c.as_list();
    const bool first = routes.front();
    for (bool r : routes)
        if (r != first)
            throw TheoremViolation(
                "characterisation routes disagree for an idempotent operator");
    c.verdict = first;
    return c;
}

BooleanAlgebraReport enumerate_band_projections(const OrderedSpace& s) {
    BooleanAlgebraReport rep;
    rep.bands = enumerate_bands(s);

    std::vector<std::optional<BandProjection>> slots(rep.bands.size());
    parallel_for(rep.bands.size(), [&](std::size_t i) {
        if (!rep.bands[i].is_projection_band) return;
        Band comp = complement_of_basis(s, rep.bands[i].basis);
        // link the complement back to its enumerated id
        for (const auto& other : rep.bands)
            if (other.basis == comp.basis) {
                comp = other;
                break;
            }
        slots[i] = make_projection(s, rep.bands[i], comp);
    });
    for (auto& slot : slots)
        if (slot) rep.projections.push_back(std::move(*slot));

    std::sort(rep.projections.begin(), rep.projections.end(),
              [](const BandProjection& a, const BandProjection& b) {
                  return mat_less(a.range_band.basis, b.range_band.basis);
              });

    // Minimal nonzero projection bands by containment scan.
    for (std::size_t i = 0; i < rep.projections.size(); ++i) {
        const auto& Bi = rep.projections[i].range_band;
        if (Bi.basis.rows == 0) continue;
        bool minimal = true;
        for (std::size_t j = 0; j < rep.projections.size() && minimal; ++j) {
            if (j == i) continue;
            const auto& Bj = rep.projections[j].range_band;
            if (Bj.basis.rows == 0 || Bj.basis.rows >= Bi.basis.rows) continue;
            if (subspace_contains_all(Bi.basis, Bj.basis)) minimal = false;
        }
        if (minimal) {
            rep.minimal_projection_ids.push_back(i);
            rep.minimal_band_ids.push_back(rep.projections[i].range_band.id);
        }
    }
    rep.m = rep.minimal_projection_ids.size();
    rep.is_lattice = rep.m == s.dim;

    if (rep.m > s.dim)
        throw TheoremViolation("more minimal projection bands than the dimension");
    if (rep.projections.size() != (std::size_t(1) << rep.m))
        throw TheoremViolation("band projection count is not 2^m");

    // Pairwise annihilation and the partition of the identity.
    const std::size_t n = s.dim;
    Mat sum = Mat::zero(n, n);
    for (auto i : rep.minimal_projection_ids) {
        for (auto j : rep.minimal_projection_ids) {
            if (i == j) continue;
            if (!mat_is_zero(mat_mul(rep.projections[i].matrix, rep.projections[j].matrix)))
                throw TheoremViolation("minimal band projections do not annihilate");
        }
        sum = mat_add(sum, rep.projections[i].matrix);
    }
    if (rep.m > 0 && sum != Mat::identity(n))
        throw TheoremViolation("minimal band projections do not sum to the identity");

    // Every projection is the sum over a unique subset of the minimal ones.
    const auto find_projection = [&](const Mat& M) -> std::size_t {
        for (std::size_t i = 0; i < rep.projections.size(); ++i)
            if (rep.projections[i].matrix == M) return i;
        throw TheoremViolation("operator expected in the Boolean algebra is missing");
    };
    {
        std::vector<char> seen(rep.projections.size(), 0);
        for (std::uint32_t mask = 0; mask < (1u << rep.m); ++mask) {
            Mat acc = Mat::zero(n, n);
            for (std::size_t j = 0; j < rep.m; ++j)
                if (mask & (1u << j))
                    acc = mat_add(acc, rep.projections[rep.minimal_projection_ids[j]].matrix);
            const std::size_t idx = find_projection(acc);
            if (seen[idx])
                throw TheoremViolation("two subsets of minimal projections coincide");
            seen[idx] = 1;
        }
    }

    const std::size_t count = rep.projections.size();
    rep.meet_table.assign(count, std::vector<std::size_t>(count, 0));
    rep.join_table.assign(count, std::vector<std::size_t>(count, 0));
    rep.complement_map.assign(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
        const Mat& Pi = rep.projections[i].matrix;
        rep.complement_map[i] = find_projection(mat_sub(Mat::identity(n), Pi));
        for (std::size_t j = 0; j < count; ++j) {
            const Mat& Pj = rep.projections[j].matrix;
            Mat PiPj = mat_mul(Pi, Pj);
            if (PiPj != mat_mul(Pj, Pi))
                throw TheoremViolation("band projections do not commute");
            rep.meet_table[i][j] = find_projection(PiPj);
            rep.join_table[i][j] = find_projection(mat_sub(mat_add(Pi, Pj), PiPj));
        }
    }

    // Boolean laws on the finished tables.
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            if (rep.meet_table[i][j] != rep.meet_table[j][i] ||
                rep.join_table[i][j] != rep.join_table[j][i])
                throw TheoremViolation("lattice operations are not commutative");
            for (std::size_t k = 0; k < count; ++k) {
                if (rep.meet_table[rep.join_table[i][j]][k] !=
                    rep.join_table[rep.meet_table[i][k]][rep.meet_table[j][k]])
                    throw TheoremViolation("distributivity fails");
                if (rep.meet_table[rep.meet_table[i][j]][k] !=
                    rep.meet_table[i][rep.meet_table[j][k]])
                    throw TheoremViolation("meet is not associative");
                if (rep.join_table[rep.join_table[i][j]][k] !=
                    rep.join_table[i][rep.join_table[j][k]])
                    throw TheoremViolation("join is not associative");
            }
        }
        const std::size_t comp = rep.complement_map[i];
        const std::size_t zero = find_projection(Mat::zero(n, n));
        const std::size_t one = find_projection(Mat::identity(n));
        if (rep.meet_table[i][comp] != zero || rep.join_table[i][comp] != one)
            throw TheoremViolation("complementation fails");
    }
    return rep;
}

namespace {

BandProjection projection_from_matrix(const OrderedSpace& s, const Mat& P) {
    auto c = check_characterisation(s, P);
    if (!c.verdict)
        throw NotBandProjectionError("operator is not a band projection");
    Band range;
    range.basis = range_basis_of(P);
    Band range_band = complement_of_basis(s, complement_of_basis(s, range.basis).basis);
    auto bp = is_projection_band(s, range_band);
    if (!bp) throw InternalError("verified band projection failed reconstruction");
    return *bp;
}

} // namespace

BooleanOps boolean_ops(const OrderedSpace& s, const Mat& P, const Mat& Q) {
    BandProjection bp = projection_from_matrix(s, P);
    BandProjection bq = projection_from_matrix(s, Q);

    Mat PQ = mat_mul(P, Q);
    if (PQ != mat_mul(Q, P)) throw TheoremViolation("band projections do not commute");

    BooleanOps out{projection_from_matrix(s, PQ),
                   projection_from_matrix(s, mat_sub(mat_add(P, Q), PQ)),
                   projection_from_matrix(s, mat_sub(Mat::identity(s.dim), P))};

    // Range identities: PQX = PX ∩ QX and (P+Q-PQ)X = PX + QX.
    Mat inter = subspace_intersection(bp.range_band.basis, bq.range_band.basis);
    if (out.meet.range_band.basis != inter)
        throw TheoremViolation("range of PQ is not PX ∩ QX");
    Mat sum = subspace_sum(bp.range_band.basis, bq.range_band.basis);
    if (out.join.range_band.basis != sum)
        throw TheoremViolation("range of P+Q-PQ is not PX + QX");

    // Invariance: P maps QX into QX and vice versa.
    for (std::size_t r = 0; r < bq.range_band.basis.rows; ++r)
        if (!subspace_contains(bq.range_band.basis,
                               mat_vec(P, bq.range_band.basis.row(r))))
            throw TheoremViolation("P does not leave QX invariant");
    for (std::size_t r = 0; r < bp.range_band.basis.rows; ++r)
        if (!subspace_contains(bp.range_band.basis,
                               mat_vec(Q, bp.range_band.basis.row(r))))
            throw TheoremViolation("Q does not leave PX invariant");

    return out;
}

TripleVerdict domination_check(const OrderedSpace& s, const Mat& P, const Mat& Q) {
    BandProjection bp = projection_from_matrix(s, P);
    BandProjection bq = projection_from_matrix(s, Q);

    TripleVerdict v;
    v.a = subspace_contains_all(bq.range_band.basis, bp.range_band.basis);
    v.b = mat_mul(Q, P) == P;
    v.c = positive_operator(s, mat_sub(Q, P));
    if (v.a != v.b || v.b != v.c)
        throw TheoremViolation("domination routes disagree");
    return v;
}

TripleVerdict trivial_intersection_check(const OrderedSpace& s, const Mat& P, const Mat& Q) {
    BandProjection bp = projection_from_matrix(s, P);
    BandProjection bq = projection_from_matrix(s, Q);

    TripleVerdict v;
    v.a = mat_is_zero(mat_mul(P, Q));
    v.b = subspace_intersection(bp.range_band.basis, bq.range_band.basis).rows == 0;
    v.c = subspaces_disjoint(s, bp.range_band.basis, bq.range_band.basis);
    if (v.a != v.b || v.b != v.c)
        throw TheoremViolation("trivial-intersection routes disagree");
    return v;
}

bool range_kernel_check(const OrderedSpace& s, const Mat& P) {
    if (!is_idempotent(P)) throw NotIdempotentError("range_kernel_check: P² != P");

    const auto band_and_projection = [&](const Mat& basis) {
        Band closure = complement_of_basis(s, complement_of_basis(s, basis).basis);
        if (closure.basis != row_basis(basis)) return false;
        return closure.is_projection_band;
    };

    const bool result =
        band_and_projection(range_basis_of(P)) && band_and_projection(nullspace(P));
    auto c = check_characterisation(s, P);
    if (result != c.verdict)
        throw TheoremViolation(
            "range/kernel projection-band route disagrees with the characterisation");
    return result;
}

bool product_infimum_check(const OrderedSpace& s, const std::vector<Mat>& projections,
                           const Vec& x) {
    if (projections.empty())
        throw InvalidArgumentError("product_infimum_check: empty projection list");
    if (!contains_positive(s, x))
        throw NotPositiveError("product_infimum_check: x must be positive");

    std::vector<Vec> images;
    Vec g = x;
    for (const auto& P : projections) {
        projection_from_matrix(s, P); // validates
        images.push_back(mat_vec(P, x));
    }
    for (auto it = projections.rbegin(); it != projections.rend(); ++it)
        g = mat_vec(*it, g);

    auto inf = infimum(s, images);
    return inf.has_value() && *inf == g;
}

Decomposition decompose(const OrderedSpace& s) {
    Decomposition dec;
    dec.report = enumerate_band_projections(s);

    Mat iso(0, s.dim);
    for (auto pid : dec.report.minimal_projection_ids) {
        const BandProjection& bp = dec.report.projections[pid];
        const Mat& U = bp.range_band.basis; // k x n
        dec.factor_bases.push_back(U);

        auto sub = cone_subspace_intersection(s.cone, U);
        OrderedSpace factor = validate(sub.sub_generators, U.rows);
        dec.factors.push_back(factor);

        // Coordinate map: solve U^T c = column of P for each column.
        Mat Ut = transpose(U);
        Mat C(U.rows, s.dim);
        for (std::size_t col = 0; col < s.dim; ++col) {
            Vec rhs(s.dim);
            for (std::size_t i = 0; i < s.dim; ++i) rhs[i] = bp.matrix.at(i, col);
            auto sol = solve(Ut, rhs);
            if (!sol.consistent)
                throw InternalError("projection image is outside its own band");
            for (std::size_t i = 0; i < U.rows; ++i) C.at(i, col) = sol.x[i];
        }
        iso = stack_rows(iso, C);
    }
    dec.iso = iso;

    auto inv = inverse(iso);
    if (!inv) throw TheoremViolation("decomposition map is not invertible");

    // Forward positivity: each generator of X+ lands in the product cone.
    for (const auto& g : s.cone.generators) {
        Vec image = mat_vec(iso, g);
        std::size_t off = 0;
        for (std::size_t j = 0; j < dec.factors.size(); ++j) {
            Vec block(image.begin() + static_cast<std::ptrdiff_t>(off),
                      image.begin() + static_cast<std::ptrdiff_t>(off + dec.factors[j].dim));
            if (!contains_positive(dec.factors[j], block))
                throw TheoremViolation("decomposition map is not positive");
            off += dec.factors[j].dim;
        }
    }
    // Backward positivity: embedded factor generators land in X+.
    {
        std::size_t off = 0;
        for (std::size_t j = 0; j < dec.factors.size(); ++j) {
            for (const auto& g : dec.factors[j].cone.generators) {
                Vec embedded(s.dim, Rat(0));
                for (std::size_t i = 0; i < g.size(); ++i) embedded[off + i] = g[i];
                if (!contains_positive(s, mat_vec(*inv, embedded)))
                    throw TheoremViolation("inverse decomposition map is not positive");
            }
            off += dec.factors[j].dim;
        }
    }
    // No factor splits further.
    for (const auto& factor : dec.factors) {
        auto sub_report = enumerate_band_projections(factor);
        if (sub_report.m != 1)
            throw TheoremViolation("a minimal projection band still decomposes");
    }
    return dec;
}

Band generated_projection_band(const OrderedSpace& s, const std::vector<Vec>& S) {
    auto rep = enumerate_band_projections(s);
    std::vector<Band> containing;
    for (const auto& bp : rep.projections) {
        bool ok = true;
        for (const auto& v : S)
            if (!subspace_contains(bp.range_band.basis, v)) {
                ok = false;
                break;
            }
        if (ok) containing.push_back(bp.range_band);
    }
    Band meet = band_meet(s, containing);
    if (!meet.is_projection_band)
        throw TheoremViolation("meet of projection bands is not a projection band");
    return meet;
}

} // namespace ordercone
