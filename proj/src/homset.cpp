#include "bq/homset.hpp"

#include <algorithm>

namespace bq {

bool check_coloring(const Diagram& d, const Biquandle& x, const Coloring& col) {
    const int m = d.num_semiarcs();
    if (static_cast<int>(col.size()) != m + d.free_loops) return false;
    for (int v : col) {
        if (v < 0 || v >= x.size()) return false;
    }
    for (const auto& c : d.crossings) {
        int ui = col[c.under_in], uo = col[c.under_out];
        int oi = col[c.over_in], oo = col[c.over_out];
        if (c.sign > 0) {
            if (uo != x.under(ui, oi) || oo != x.over(oi, ui)) return false;
        } else {
            if (ui != x.under(uo, oo) || oi != x.over(oo, uo)) return false;
        }
    }
    return true;
}

namespace {

// Returns false on contradiction.  col uses -1 for unassigned.
bool assign(std::vector<int>& col, int slot, int value, bool& changed) {
    if (col[slot] == -1) {
        col[slot] = value;
        changed = true;
        return true;
    }
    return col[slot] == value;
}

bool propagate(const Diagram& d, const Biquandle& x, std::vector<int>& col) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : d.crossings) {
            int ui = col[c.under_in], uo = col[c.under_out];
            int oi = col[c.over_in], oo = col[c.over_out];
            if (c.sign > 0) {
                if (ui != -1 && oi != -1) {
                    if (!assign(col, c.under_out, x.under(ui, oi), changed)) return false;
                    if (!assign(col, c.over_out, x.over(oi, ui), changed)) return false;
                } else if (uo != -1 && oo != -1) {
                    auto [a, b] = x.s_inverse(oo, uo);
                    if (!assign(col, c.under_in, a, changed)) return false;
                    if (!assign(col, c.over_in, b, changed)) return false;
                }
            } else {
                if (uo != -1 && oo != -1) {
                    if (!assign(col, c.under_in, x.under(uo, oo), changed)) return false;
                    if (!assign(col, c.over_in, x.over(oo, uo), changed)) return false;
                } else if (ui != -1 && oi != -1) {
                    auto [a, b] = x.s_inverse(oi, ui);
                    if (!assign(col, c.under_out, a, changed)) return false;
                    if (!assign(col, c.over_out, b, changed)) return false;
                }
            }
        }
    }
    return true;
}

void search(const Diagram& d, const Biquandle& x, std::vector<int> col,
            std::vector<Coloring>& out) {
    const int m = d.num_semiarcs();
    int next = -1;
    for (int s = 0; s < m; ++s) {
        if (col[s] == -1) {
            next = s;
            break;
        }
    }
    if (next == -1) {
        out.push_back(std::move(col));
        return;
    }
    for (int v = 0; v < x.size(); ++v) {
        std::vector<int> branch = col;
        branch[next] = v;
        if (propagate(d, x, branch)) {
            search(d, x, std::move(branch), out);
        }
    }
}

} // namespace

Homset enumerate_colorings(const Diagram& d, const Biquandle& x) {
    validate_diagram(d);
    std::vector<Coloring> semiarc_colorings;
    search(d, x, std::vector<int>(d.num_semiarcs(), -1), semiarc_colorings);

    // Free loops are unconstrained: extend by every value combination.
    std::vector<Coloring> colorings;
    for (const auto& base : semiarc_colorings) {
        std::vector<Coloring> extended{base};
        for (int l = 0; l < d.free_loops; ++l) {
            std::vector<Coloring> wider;
            for (const auto& c : extended) {
                for (int v = 0; v < x.size(); ++v) {
                    Coloring next = c;
                    next.push_back(v);
                    wider.push_back(std::move(next));
                }
            }
            extended = std::move(wider);
        }
        for (auto& c : extended) colorings.push_back(std::move(c));
    }
    std::sort(colorings.begin(), colorings.end());
    return Homset{d, x, std::move(colorings)};
}

int Homset::index_of(const Coloring& col) const {
    auto it = std::lower_bound(colorings.begin(), colorings.end(), col);
    if (it == colorings.end() || *it != col) return -1;
    return static_cast<int>(it - colorings.begin());
}

long long counting_invariant(const Diagram& d, const Biquandle& x) {
    return enumerate_colorings(d, x).size();
}

Coloring apply_endomorphism(const BiquandleMap& f, const Coloring& col) {
    Coloring out(col.size());
    for (size_t i = 0; i < col.size(); ++i) {
        out[i] = f.table[col[i]];
    }
    return out;
}

} // namespace bq
