#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qdeg/slice.hpp"

namespace qdeg {

// Empirical verification of the classification of slice rank functions.
// Constant functions must take one value over random slice points; image
// functions must be constant over the image of the embedding with the value
// attained at the zero representation; quiver functions must differ from
// their distinguished partner by a constant offset.

struct TableEntry {
    std::string name;       // U[v], L[v], or B[v,w]
    FunctionClass cls;
    std::string partner;    // display of the paired quiver function, if any
    long reference = 0;     // constant value / image value / offset
    int samples = 0;
    bool ok = true;
};

struct TableReport {
    int n = 0;
    DimVector dstar;
    std::vector<TableEntry> entries;
    int contradictions = 0;
};

template <class F>
TableReport verify_tables(F f, int n, const DimVector& dstar, int samples, std::uint64_t seed) {
    TableReport report;
    report.n = n;
    report.dstar = dstar;
    auto layout = make_slice_layout(n, dstar);
    const int k = static_cast<int>(layout->cols.size());
    std::mt19937_64 rng(seed);

    std::vector<SlicePoint<F>> random_points;
    std::vector<SlicePoint<F>> image_points;
    std::vector<Rep<F>> reps;
    for (int i = 0; i < samples; ++i) {
        random_points.push_back(random_slice_point(f, layout, rng));
        reps.push_back(random_rep(f, layout->star, dstar, rng));
        image_points.push_back(slice_embed(reps.back(), layout));
    }
    SlicePoint<F> at_zero = slice_template(f, layout);

    struct Fn {
        std::string name;
        FunctionClass cls;
        std::function<std::size_t(const SlicePoint<F>&)> eval;
    };
    std::vector<Fn> fns;
    for (int v = 0; v < k; ++v) {
        fns.push_back({"U[" + layout->cols[static_cast<std::size_t>(v)].display() + "]",
                       classify_upper(n, v),
                       [v](const SlicePoint<F>& p) { return rank_upper(p, v); }});
        fns.push_back({"L[" + layout->cols[static_cast<std::size_t>(v)].display() + "]",
                       classify_lower(n, v),
                       [v](const SlicePoint<F>& p) { return rank_lower(p, v); }});
    }
    for (int v = 0; v < k; ++v)
        for (int w = v + 1; w < k; ++w)
            fns.push_back({"B[" + layout->cols[static_cast<std::size_t>(v)].display() + "," +
                               layout->cols[static_cast<std::size_t>(w)].display() + "]",
                           classify_both(n, v, w),
                           [v, w](const SlicePoint<F>& p) { return rank_both(p, v, w); }});

    for (const auto& fn : fns) {
        TableEntry entry;
        entry.name = fn.name;
        entry.cls = fn.cls;
        entry.samples = samples;
        switch (fn.cls.type) {
            case FunctionClass::Constant: {
                long ref = static_cast<long>(fn.eval(at_zero));
                entry.reference = ref;
                for (const auto& p : random_points)
                    if (static_cast<long>(fn.eval(p)) != ref) { entry.ok = false; break; }
                break;
            }
            case FunctionClass::Image: {
                long ref = static_cast<long>(fn.eval(at_zero));
                entry.reference = ref;
                for (const auto& p : image_points)
                    if (static_cast<long>(fn.eval(p)) != ref) { entry.ok = false; break; }
                break;
            }
            case FunctionClass::Quiver: {
                const RankFunction& partner = *fn.cls.partner;
                entry.partner = partner.display();
                QMatrix pm = rank_function_matrix(n, partner);
                bool first = true;
                for (int i = 0; i < samples; ++i) {
                    long diff = static_cast<long>(fn.eval(image_points[static_cast<std::size_t>(i)])) -
                                static_cast<long>(rank(evaluate(pm, reps[static_cast<std::size_t>(i)])));
                    if (first) {
                        entry.reference = diff;
                        first = false;
                    } else if (diff != entry.reference) {
                        entry.ok = false;
                        break;
                    }
                }
                break;
            }
        }
        if (!entry.ok) ++report.contradictions;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace qdeg
