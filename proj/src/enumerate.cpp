#include "montesinos/enumerate.hpp"

#include <numeric>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "montesinos/log.hpp"

namespace montesinos {

std::vector<RationalTangle> canonical_tangles(int q_bound) {
    std::vector<RationalTangle> out;
    for (std::int64_t q = 2; q <= q_bound; ++q) {
        for (std::int64_t p = -(q / 2); 2 * p <= q; ++p) {
            if (p == 0 || std::gcd(p < 0 ? -p : p, q) != 1) continue;
            if (q % 2 == 0 && 2 * p == -q) continue;  // tie resolves positive
            out.push_back(canonical_tangle(p, q).first);
        }
    }
    return out;
}

namespace {

// Mirror-orbit preference: same-q tangles order by |p| first, positive
// before negative, so representatives favor positive slopes.
std::tuple<std::int64_t, std::int64_t, int> pref_key(const RationalTangle& t) {
    std::int64_t a = t.p < 0 ? -t.p : t.p;
    return {t.q, a, t.p < 0 ? 1 : 0};
}

bool pref_less_equal(const std::array<RationalTangle, 3>& x,
                     const std::array<RationalTangle, 3>& y) {
    for (int i = 0; i < 3; ++i) {
        auto kx = pref_key(x[i]), ky = pref_key(y[i]);
        if (kx < ky) return true;
        if (ky < kx) return false;
    }
    return true;
}

} // namespace

std::vector<MontesinosKnot> canonical_orbit_reps(int q_bound) {
    auto tangles = canonical_tangles(q_bound);
    std::vector<MontesinosKnot> out;
    const std::size_t n = tangles.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            for (std::size_t k = j; k < n; ++k) {
                MontesinosKnot knot;
                knot.tangles = {tangles[i], tangles[j], tangles[k]};
                knot.e0 = 0;
                MontesinosKnot m = mirror(knot);
                m.e0 = 0;  // orbit identity ignores the absorbed twists
                if (pref_less_equal(knot.tangles, m.tangles))
                    out.push_back(knot);
            }
        }
    }
    return out;
}

namespace {

EnumRow make_row(const MontesinosKnot& knot, bool classify_knots) {
    EnumRow row;
    row.knot = knot;
    row.components = component_count(knot);
    if (row.components == 1 && classify_knots) {
        try {
            row.classification = classify(knot);
        } catch (const std::exception& e) {
            Classification c;
            c.kind = VerdictKind::Anomaly;
            c.note = std::string("internal error: ") + e.what();
            row.classification = std::move(c);
        }
    }
    return row;
}

EnumSummary summarize(const std::vector<EnumRow>& rows) {
    EnumSummary s;
    s.total = rows.size();
    for (const auto& row : rows) {
        if (row.components != 1) {
            ++s.links;
            continue;
        }
        ++s.knots;
        if (!row.classification) continue;
        const Classification& c = *row.classification;
        switch (c.kind) {
            case VerdictKind::Certified:
                if (c.source == CertificateSource::Preset) ++s.certified_preset;
                else ++s.certified_solver;
                break;
            case VerdictKind::Family:
                ++s.family;
                if (c.family && c.family->family >= 1 && c.family->family <= 5)
                    ++s.family_counts[static_cast<std::size_t>(c.family->family - 1)];
                break;
            case VerdictKind::Anomaly:
                ++s.anomaly;
                break;
        }
    }
    return s;
}

std::vector<MontesinosKnot> select_rows(const RunConfig& config) {
    std::vector<MontesinosKnot> all = canonical_orbit_reps(config.q_bound);
    if (config.include_links)
        return all;
    std::vector<MontesinosKnot> knots;
    knots.reserve(all.size());
    for (auto& k : all)
        if (is_knot(k)) knots.push_back(std::move(k));
    return knots;
}

} // namespace

EnumResult enumerate_and_classify_serial(const RunConfig& config) {
    EnumResult result;
    auto items = select_rows(config);
    result.rows.reserve(items.size());
    for (const auto& knot : items)
        result.rows.push_back(make_row(knot, true));
    result.summary = summarize(result.rows);
    return result;
}

EnumResult enumerate_and_classify(const RunConfig& config) {
#ifdef _OPENMP
    if (config.parallelism > 1) {
        EnumResult result;
        auto items = select_rows(config);
        result.rows.resize(items.size());
        MONTESINOS_LOG_INFO("enumerating " << items.size() << " rows on "
                            << config.parallelism << " threads");
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(items.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(config.parallelism)
        for (std::ptrdiff_t idx = 0; idx < n; ++idx)
            result.rows[static_cast<std::size_t>(idx)] =
                make_row(items[static_cast<std::size_t>(idx)], true);
        result.summary = summarize(result.rows);
        return result;
    }
#endif
    return enumerate_and_classify_serial(config);
}

} // namespace montesinos
