#include "semiconvex/arcs.hpp"

#include <algorithm>

namespace semiconvex {

namespace {

// Non-wrapping interval on the cut line [0, 2*pi].
struct CutInterval {
    double lo, hi;
    bool lo_closed, hi_closed;
};

// Sweep-merge sorted cut intervals. Two endpoints within eps are one point;
// abutting intervals merge iff at least one side is closed there.
std::vector<CutInterval> merge_sorted(std::vector<CutInterval> in, double eps) {
    std::vector<CutInterval> out;
    for (const CutInterval& iv : in) {
        if (out.empty()) {
            out.push_back(iv);
            continue;
        }
        CutInterval& cur = out.back();
        bool overlap = iv.lo < cur.hi - eps;
        bool abut = !overlap && iv.lo <= cur.hi + eps;
        if (overlap || (abut && (cur.hi_closed || iv.lo_closed))) {
            if (iv.lo <= cur.lo + eps) cur.lo_closed = cur.lo_closed || iv.lo_closed;
            if (iv.hi > cur.hi + eps) {
                cur.hi = iv.hi;
                cur.hi_closed = iv.hi_closed;
            } else if (iv.hi >= cur.hi - eps) {
                cur.hi_closed = cur.hi_closed || iv.hi_closed;
            }
        } else {
            out.push_back(iv);
        }
    }
    return out;
}

Arc arc_from_cut(double lo, double hi, bool lo_closed, bool hi_closed) {
    return Arc{normalize_angle(lo), hi - lo, lo_closed, hi_closed};
}

}  // namespace

ArcSet canonicalize(const std::vector<Arc>& arcs, double eps) {
    std::vector<CutInterval> cut;
    bool full = false;
    for (const Arc& a : arcs) {
        double w = a.width;
        if (w < 0.0) continue;
        if (w >= kTwoPi - eps) {
            // Width-2*pi arcs: full circle if any flag is closed (or the width
            // strictly exceeds 2*pi), else the circle punctured at `start`.
            if (a.start_closed || a.end_closed || w > kTwoPi + eps) {
                full = true;
                break;
            }
            double s = normalize_angle(a.start);
            if (s <= eps || s >= kTwoPi - eps) {
                cut.push_back(CutInterval{0.0, kTwoPi, false, false});  // punctured at the cut
            } else {
                cut.push_back(CutInterval{0.0, s, true, false});
                cut.push_back(CutInterval{s, kTwoPi, false, true});
            }
            continue;
        }
        bool sc = a.start_closed, ec = a.end_closed;
        if (w <= eps) {
            // Collapse to a degenerate direction; an all-open sliver is empty.
            if (!sc && !ec) continue;
            w = 0.0;
            sc = ec = true;
        }
        double s = normalize_angle(a.start);
        double e = s + w;
        if (e <= kTwoPi) {
            cut.push_back(CutInterval{s, e, sc, ec});
        } else {
            cut.push_back(CutInterval{s, kTwoPi, sc, true});
            cut.push_back(CutInterval{0.0, e - kTwoPi, true, ec});
        }
    }
    if (full) return ArcSet{full_circle()};
    if (cut.empty()) return ArcSet{};

    std::sort(cut.begin(), cut.end(), [](const CutInterval& x, const CutInterval& y) {
        if (x.lo != y.lo) return x.lo < y.lo;
        return x.hi < y.hi;
    });
    std::vector<CutInterval> merged = merge_sorted(std::move(cut), eps);

    // Re-glue across the 0/2*pi cut.
    ArcSet out;
    if (merged.size() == 1 && merged.front().lo <= eps && merged.front().hi >= kTwoPi - eps) {
        const CutInterval& iv = merged.front();
        if (iv.lo_closed || iv.hi_closed) return ArcSet{full_circle()};
        return ArcSet{Arc{0.0, kTwoPi, false, false}};  // punctured at 0
    }
    bool glue = merged.size() >= 2 && merged.front().lo <= eps &&
                merged.back().hi >= kTwoPi - eps &&
                (merged.front().lo_closed || merged.back().hi_closed);
    size_t first = 0, last = merged.size();
    if (glue) {
        const CutInterval& head = merged.front();
        const CutInterval& tail = merged.back();
        double w = (kTwoPi - tail.lo) + head.hi;
        out.push_back(Arc{normalize_angle(tail.lo), std::min(w, kTwoPi), tail.lo_closed,
                          head.hi_closed});
        first = 1;
        last = merged.size() - 1;
    }
    for (size_t i = first; i < last; ++i) {
        const CutInterval& iv = merged[i];
        bool sc = iv.lo_closed, ec = iv.hi_closed;
        double w = iv.hi - iv.lo;
        if (w <= eps) {
            if (!sc && !ec) continue;
            out.push_back(degenerate_arc(iv.lo));
        } else {
            out.push_back(arc_from_cut(iv.lo, iv.hi, sc, ec));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Arc& x, const Arc& y) { return x.start < y.start; });
    return out;
}

ArcSet arcset_union(const ArcSet& a, const ArcSet& b, double eps) {
    std::vector<Arc> all;
    all.reserve(a.size() + b.size());
    all.insert(all.end(), a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    return canonicalize(all, eps);
}

ArcSet arcset_complement(const ArcSet& a, double eps) {
    if (a.empty()) return ArcSet{full_circle()};
    if (a.size() == 1) {
        const Arc& only = a.front();
        if (only.is_full_circle()) return ArcSet{};
        if (only.width >= kTwoPi - eps && !only.start_closed && !only.end_closed)
            return ArcSet{degenerate_arc(only.start)};  // punctured circle
        if (only.width <= eps)
            return ArcSet{Arc{only.start, kTwoPi, false, false}};  // puncture a point
        return canonicalize(
            {Arc{normalize_angle(only.end()), kTwoPi - only.width, !only.end_closed,
                 !only.start_closed}},
            eps);
    }
    // Gaps between cyclically consecutive arcs, flags flipped.
    std::vector<Arc> gaps;
    for (size_t i = 0; i < a.size(); ++i) {
        const Arc& cur = a[i];
        const Arc& nxt = a[(i + 1) % a.size()];
        double gs = normalize_angle(cur.end());
        // Cyclic gap width; gs is normalized, so wrap-around shows up as a
        // negative difference regardless of which pair straddles the cut.
        double w = nxt.start - gs;
        if (w < -eps) w += kTwoPi;
        if (w <= eps) {
            // Zero-width gap survives only between two open endpoints.
            if (!cur.end_closed && !nxt.start_closed) gaps.push_back(degenerate_arc(gs));
            continue;
        }
        gaps.push_back(Arc{gs, std::min(w, kTwoPi), !cur.end_closed, !nxt.start_closed});
    }
    return canonicalize(gaps, eps);
}

bool arcset_covers_circle(const ArcSet& a) {
    return a.size() == 1 && a.front().is_full_circle();
}

std::optional<double> uncovered_direction(const ArcSet& a, double eps) {
    ArcSet comp = arcset_complement(a, eps);
    if (comp.empty()) return std::nullopt;
    const Arc& g = comp.front();
    if (g.width <= eps) return normalize_angle(g.start);
    return normalize_angle(g.start + 0.5 * g.width);
}

double arcset_measure(const ArcSet& a) {
    double total = 0.0;
    for (const Arc& arc : a) total += arc.width;
    return std::min(total, kTwoPi);
}

bool arcset_contains_direction(const ArcSet& a, double theta, double eps) {
    double t = normalize_angle(theta);
    for (const Arc& arc : a) {
        if (arc.is_full_circle()) return true;
        double u = t - arc.start;
        if (u < -eps) u += kTwoPi;
        if (u <= eps) return arc.start_closed;  // endpoint zone takes the endpoint flag
        if (u < arc.width - eps) return true;
        if (u <= arc.width + eps) return arc.end_closed;
    }
    return false;
}

bool arcset_equal(const ArcSet& a, const ArcSet& b, double eps) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        const Arc &x = a[i], &y = b[i];
        bool full_x = x.is_full_circle(), full_y = y.is_full_circle();
        if (full_x || full_y) {
            if (full_x != full_y) return false;
            continue;
        }
        if (angle_distance(x.start, y.start) > eps) return false;
        if (std::abs(x.width - y.width) > eps) return false;
        bool deg = x.width <= eps;
        if (!deg && (x.start_closed != y.start_closed || x.end_closed != y.end_closed))
            return false;
    }
    return true;
}

bool arcset_contains(const ArcSet& outer, const ArcSet& inner, double eps) {
    return arcset_equal(arcset_union(outer, inner, eps), outer, eps);
}

}  // namespace semiconvex
