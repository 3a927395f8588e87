#include "bq/quiver.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace bq {

namespace {

std::vector<BiquandleMap> resolve_subset(const Biquandle& x, const SubsetSpec& s) {
    switch (s.kind) {
        case SubsetSpec::Kind::Full:
            return enumerate_endomorphisms(x);
        case SubsetSpec::Kind::Identity: {
            BiquandleMap id;
            id.table.resize(x.size());
            for (int i = 0; i < x.size(); ++i) id.table[i] = i;
            return {id};
        }
        case SubsetSpec::Kind::Explicit:
            break;
    }
    for (size_t m = 0; m < s.maps.size(); ++m) {
        const auto& f = s.maps[m];
        if (static_cast<int>(f.table.size()) != x.size()) {
            throw ValidationError("endomorphism " + std::to_string(m) + " has " +
                                  std::to_string(f.table.size()) +
                                  " entries, expected " + std::to_string(x.size()));
        }
        for (int v : f.table) {
            if (v < 0 || v >= x.size()) {
                throw ValidationError("endomorphism " + std::to_string(m) +
                                      " maps outside the element range");
            }
        }
        for (int a = 0; a < x.size(); ++a) {
            for (int b = 0; b < x.size(); ++b) {
                if (f(x.under(a, b)) != x.under(f(a), f(b)) ||
                    f(x.over(a, b)) != x.over(f(a), f(b))) {
                    throw ValidationError(
                        "map " + std::to_string(m) + " is not an endomorphism: fails at (" +
                        std::to_string(a) + ", " + std::to_string(b) + ")");
                }
            }
        }
        for (size_t k = 0; k < m; ++k) {
            if (s.maps[k] == f) {
                throw ValidationError("duplicate endomorphism at positions " +
                                      std::to_string(k) + " and " + std::to_string(m));
            }
        }
    }
    return s.maps;
}

} // namespace

std::vector<int> ColoringQuiver::in_degrees() const {
    std::vector<int> deg(homset.colorings.size(), 0);
    for (const auto& a : arrows) ++deg[a.dst];
    return deg;
}

ColoringQuiver build_coloring_quiver(const Diagram& d, const Biquandle& x,
                                     const SubsetSpec& s) {
    ColoringQuiver q{enumerate_colorings(d, x), resolve_subset(x, s), {}};
    for (int v = 0; v < q.homset.size(); ++v) {
        for (size_t e = 0; e < q.endos.size(); ++e) {
            Coloring image = apply_endomorphism(q.endos[e], q.homset.colorings[v]);
            int target = q.homset.index_of(image);
            if (target < 0) {
                throw Error("endomorphism image is not a coloring");
            }
            q.arrows.push_back({v, target, static_cast<int>(e)});
        }
    }
    return q;
}

ExpPolynomial in_degree_polynomial(const ColoringQuiver& q) {
    ExpPolynomial p({"u"});
    for (int deg : q.in_degrees()) {
        p.add_term({deg}, 1);
    }
    return p;
}

BracketQuiver build_bracket_quiver(const Diagram& d, const BiquandleBracket& bb,
                                   const SubsetSpec& s) {
    ColoringQuiver q = build_coloring_quiver(d, bb.biquandle(), s);
    std::vector<RingElem> weights = bracket_values(bb, q.homset);
    return BracketQuiver{std::move(q), std::move(weights)};
}

ExpPolynomial arrow_polynomial(const BracketQuiver& bq) {
    ExpPolynomial p({"s", "t"});
    for (const auto& a : bq.quiver.arrows) {
        p.add_term({bq.weights[a.src].value, bq.weights[a.dst].value}, 1);
    }
    return p;
}

ExpPolynomial vertex_polynomial(const BracketQuiver& bq) {
    ExpPolynomial p({"u", "w"});
    std::vector<int> deg = bq.quiver.in_degrees();
    for (size_t v = 0; v < bq.weights.size(); ++v) {
        p.add_term({bq.weights[v].value, deg[v]}, 1);
    }
    return p;
}

namespace {

std::string color_label(const Coloring& col) {
    std::ostringstream os;
    for (size_t i = 0; i < col.size(); ++i) {
        if (i) os << ' ';
        os << col[i];
    }
    return os.str();
}

std::string dot_impl(const ColoringQuiver& q, const std::vector<RingElem>* weights) {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (int v = 0; v < q.homset.size(); ++v) {
        os << "  v" << v << " [label=\"" << color_label(q.homset.colorings[v]);
        if (weights) os << "|β=" << (*weights)[v].value;
        os << "\"];\n";
    }
    for (const auto& a : q.arrows) {
        os << "  v" << a.src << " -> v" << a.dst << " [label=\"" << a.endo << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string json_impl(const ColoringQuiver& q, const std::vector<RingElem>* weights) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (int v = 0; v < q.homset.size(); ++v) {
        nlohmann::ordered_json vert;
        vert["id"] = v;
        vert["colors"] = q.homset.colorings[v];
        if (weights) vert["beta"] = (*weights)[v].value;
        j["vertices"].push_back(std::move(vert));
    }
    j["arrows"] = nlohmann::ordered_json::array();
    for (const auto& a : q.arrows) {
        j["arrows"].push_back({{"src", a.src}, {"dst", a.dst}, {"endo", a.endo}});
    }
    j["endos"] = nlohmann::ordered_json::array();
    for (const auto& f : q.endos) {
        j["endos"].push_back(f.table);
    }
    return j.dump(2) + "\n";
}

} // namespace

std::string export_dot(const ColoringQuiver& q) { return dot_impl(q, nullptr); }

std::string export_dot(const BracketQuiver& bq) {
    return dot_impl(bq.quiver, &bq.weights);
}

std::string export_json(const ColoringQuiver& q) { return json_impl(q, nullptr); }

std::string export_json(const BracketQuiver& bq) {
    return json_impl(bq.quiver, &bq.weights);
}

} // namespace bq
