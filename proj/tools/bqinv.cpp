#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bq/algebra.hpp"
#include "bq/bracket.hpp"
#include "bq/diagram.hpp"
#include "bq/errors.hpp"
#include "bq/homset.hpp"
#include "bq/quiver.hpp"
#include "bq/ring.hpp"

namespace {

bq::Biquandle load_biquandle(const std::string& path) {
    return bq::Biquandle::from_tables(bq::parse_biquandle_file(path));
}

bq::BiquandleBracket load_bracket(const bq::Biquandle& x, const std::string& path) {
    return bq::BiquandleBracket(x, bq::parse_bracket_file(path));
}

bq::SubsetSpec parse_subset(const std::string& spec, const bq::Biquandle& x) {
    if (spec == "full") return bq::SubsetSpec::full();
    if (spec == "identity") return bq::SubsetSpec::identity();
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) {
            throw bq::Error("cannot open file: " + spec.substr(1));
        }
        std::vector<bq::BiquandleMap> maps;
        std::string raw;
        int line_no = 0;
        while (std::getline(in, raw)) {
            ++line_no;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            std::istringstream is(raw);
            std::vector<int> table;
            int v;
            while (is >> v) table.push_back(v);
            if (!is.eof()) {
                throw bq::FormatError(line_no, "expected whitespace-separated integers");
            }
            if (!table.empty()) maps.push_back(bq::BiquandleMap{std::move(table)});
        }
        (void)x;
        return bq::SubsetSpec::explicit_list(std::move(maps));
    }
    throw bq::FormatError(0, "--quiver must be full, identity, or @<file>");
}

std::string coloring_line(const bq::Coloring& col) {
    std::ostringstream os;
    for (size_t i = 0; i < col.size(); ++i) {
        if (i) os << ' ';
        os << col[i];
    }
    return os.str();
}

void print_axiom_violations(const bq::AxiomReport& report) {
    for (const auto& v : report.violations) {
        std::cout << "axiom " << v.axiom << " violation at (";
        for (size_t i = 0; i < v.witness.size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << v.witness[i];
        }
        std::cout << "): " << v.detail << "\n";
    }
}

void print_bracket_violations(const bq::BracketReport& report) {
    for (const auto& v : report.violations) {
        std::cout << v.kind << " violation at (";
        for (size_t i = 0; i < v.witness.size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << v.witness[i];
        }
        std::cout << "): " << v.detail << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"biquandle invariants: colorings, brackets, quivers"};
    app.require_subcommand(1);

    std::string biquandle_path, diagram_path, bracket_path, check_path;
    std::string quiver_spec = "full";
    std::string format = "dot";
    bool as_json = false;
    int modulus = 0;
    int limit = 0;
    bool progress = false;
    long long seed = 0;  // reserved; all computation is deterministic

    int status = 1;  // set by the subcommand callbacks

    auto* check_biq = app.add_subcommand("check-biquandle", "verify biquandle axioms");
    check_biq->add_option("path", check_path, "biquandle file")->required();
    check_biq->callback([&] {
        auto tables = bq::parse_biquandle_file(check_path);
        auto report = bq::verify_axioms(tables);
        if (report.ok()) {
            std::cout << "OK n=" << tables.n << "\n";
            status = 0;
        } else {
            print_axiom_violations(report);
            status = 1;
        }
    });

    auto* check_brk = app.add_subcommand("check-bracket", "verify bracket conditions");
    check_brk->add_option("--biquandle", biquandle_path, "biquandle file")->required();
    check_brk->add_option("--bracket", bracket_path, "bracket file")->required();
    check_brk->callback([&] {
        auto x = load_biquandle(biquandle_path);
        auto tables = bq::parse_bracket_file(bracket_path);
        auto result = bq::verify_bracket(x, tables);
        if (result.report.ok()) {
            std::cout << "OK delta=" << result.bracket->delta().value
                      << " w=" << result.bracket->w().value << "\n";
            status = 0;
        } else {
            print_bracket_violations(result.report);
            status = 1;
        }
    });

    auto* count = app.add_subcommand("count", "counting invariant");
    count->add_option("--biquandle", biquandle_path)->required();
    count->add_option("--diagram", diagram_path)->required();
    count->add_flag("--json", as_json);
    count->callback([&] {
        auto x = load_biquandle(biquandle_path);
        auto d = bq::parse_diagram_file(diagram_path);
        long long n = bq::counting_invariant(d, x);
        if (as_json) {
            std::cout << nlohmann::json{{"count", n}}.dump() << "\n";
        } else {
            std::cout << n << "\n";
        }
        status = 0;
    });

    auto* homset = app.add_subcommand("homset", "list all colorings");
    homset->add_option("--biquandle", biquandle_path)->required();
    homset->add_option("--diagram", diagram_path)->required();
    homset->add_flag("--json", as_json);
    homset->callback([&] {
        auto x = load_biquandle(biquandle_path);
        auto d = bq::parse_diagram_file(diagram_path);
        auto hs = bq::enumerate_colorings(d, x);
        if (as_json) {
            nlohmann::json j;
            j["colorings"] = hs.colorings;
            std::cout << j.dump() << "\n";
        } else {
            for (const auto& col : hs.colorings) {
                std::cout << coloring_line(col) << "\n";
            }
        }
        status = 0;
    });

    auto* quiver = app.add_subcommand("quiver", "coloring quiver");
    quiver->add_option("--biquandle", biquandle_path)->required();
    quiver->add_option("--diagram", diagram_path)->required();
    quiver->add_option("--quiver", quiver_spec, "full, identity, or @<file>");
    quiver->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
    quiver->callback([&] {
        auto x = load_biquandle(biquandle_path);
        auto d = bq::parse_diagram_file(diagram_path);
        auto q = bq::build_coloring_quiver(d, x, parse_subset(quiver_spec, x));
        std::cout << (format == "dot" ? bq::export_dot(q) : bq::export_json(q));
        status = 0;
    });

    auto* bracket = app.add_subcommand("bracket", "state-sum value per coloring");
    bracket->add_option("--biquandle", biquandle_path)->required();
    bracket->add_option("--bracket", bracket_path)->required();
    bracket->add_option("--diagram", diagram_path)->required();
    bracket->add_flag("--json", as_json);
    bracket->callback([&] {
        auto x = load_biquandle(biquandle_path);
        auto bb = load_bracket(x, bracket_path);
        auto d = bq::parse_diagram_file(diagram_path);
        auto hs = bq::enumerate_colorings(d, x);
        auto values = bq::bracket_values(bb, hs);
        if (as_json) {
            nlohmann::json j = nlohmann::json::array();
            for (size_t i = 0; i < values.size(); ++i) {
                j.push_back({{"colors", hs.colorings[i]}, {"value", values[i].value}});
            }
            std::cout << nlohmann::json{{"values", j}}.dump() << "\n";
        } else {
            for (size_t i = 0; i < values.size(); ++i) {
                std::cout << coloring_line(hs.colorings[i]) << " : " << values[i].value
                          << "\n";
            }
        }
        status = 0;
    });

    auto* multiset = app.add_subcommand("bracket-multiset", "sorted state-sum multiset");
    multiset->add_option("--biquandle", biquandle_path)->required();
    multiset->add_option("--bracket", bracket_path)->required();
    multiset->add_option("--diagram", diagram_path)->required();
    multiset->add_flag("--json", as_json);
    multiset->callback([&] {
        auto x = load_biquandle(biquandle_path);
        auto bb = load_bracket(x, bracket_path);
        auto d = bq::parse_diagram_file(diagram_path);
        auto values = bq::bracket_multiset(bb, d);
        if (as_json) {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& v : values) j.push_back(v.value);
            std::cout << nlohmann::json{{"multiset", j}}.dump() << "\n";
        } else {
            std::cout << bq::multiset_string(values) << "\n";
        }
        status = 0;
    });

    auto* bquiver = app.add_subcommand("bracket-quiver", "weighted coloring quiver");
    bquiver->add_option("--biquandle", biquandle_path)->required();
    bquiver->add_option("--bracket", bracket_path)->required();
    bquiver->add_option("--diagram", diagram_path)->required();
    bquiver->add_option("--quiver", quiver_spec, "full, identity, or @<file>");
    bquiver->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
    bquiver->callback([&] {
        auto x = load_biquandle(biquandle_path);
        auto bb = load_bracket(x, bracket_path);
        auto d = bq::parse_diagram_file(diagram_path);
        auto q = bq::build_bracket_quiver(d, bb, parse_subset(quiver_spec, x));
        std::cout << (format == "dot" ? bq::export_dot(q) : bq::export_json(q));
        status = 0;
    });

    auto* arrow = app.add_subcommand("arrow-poly", "arrow polynomial in s, t");
    arrow->add_option("--biquandle", biquandle_path)->required();
    arrow->add_option("--bracket", bracket_path)->required();
    arrow->add_option("--diagram", diagram_path)->required();
    arrow->add_option("--quiver", quiver_spec, "full, identity, or @<file>");
    arrow->add_flag("--json", as_json);
    arrow->callback([&] {
        auto x = load_biquandle(biquandle_path);
        auto bb = load_bracket(x, bracket_path);
        auto d = bq::parse_diagram_file(diagram_path);
        auto q = bq::build_bracket_quiver(d, bb, parse_subset(quiver_spec, x));
        std::string s = bq::canonical_string(bq::arrow_polynomial(q));
        if (as_json) {
            std::cout << nlohmann::json{{"polynomial", s}}.dump() << "\n";
        } else {
            std::cout << s << "\n";
        }
        status = 0;
    });

    auto* vertex = app.add_subcommand("vertex-poly", "vertex polynomial in u, w");
    vertex->add_option("--biquandle", biquandle_path)->required();
    vertex->add_option("--bracket", bracket_path)->required();
    vertex->add_option("--diagram", diagram_path)->required();
    vertex->add_option("--quiver", quiver_spec, "full, identity, or @<file>");
    vertex->add_flag("--json", as_json);
    vertex->callback([&] {
        auto x = load_biquandle(biquandle_path);
        auto bb = load_bracket(x, bracket_path);
        auto d = bq::parse_diagram_file(diagram_path);
        auto q = bq::build_bracket_quiver(d, bb, parse_subset(quiver_spec, x));
        std::string s = bq::canonical_string(bq::vertex_polynomial(q));
        if (as_json) {
            std::cout << nlohmann::json{{"polynomial", s}}.dump() << "\n";
        } else {
            std::cout << s << "\n";
        }
        status = 0;
    });

    auto* indeg = app.add_subcommand("indeg-poly", "in-degree polynomial in u");
    indeg->add_option("--biquandle", biquandle_path)->required();
    indeg->add_option("--diagram", diagram_path)->required();
    indeg->add_option("--quiver", quiver_spec, "full, identity, or @<file>");
    indeg->add_flag("--json", as_json);
    indeg->callback([&] {
        auto x = load_biquandle(biquandle_path);
        auto d = bq::parse_diagram_file(diagram_path);
        auto q = bq::build_coloring_quiver(d, x, parse_subset(quiver_spec, x));
        std::string s = bq::canonical_string(bq::in_degree_polynomial(q));
        if (as_json) {
            std::cout << nlohmann::json{{"polynomial", s}}.dump() << "\n";
        } else {
            std::cout << s << "\n";
        }
        status = 0;
    });

    auto* search = app.add_subcommand("search-brackets", "exhaustive bracket search");
    search->add_option("--biquandle", biquandle_path)->required();
    search->add_option("--modulus", modulus, "coefficient ring Z_N")->required();
    search->add_option("--limit", limit, "stop after this many results");
    search->add_flag("--progress", progress, "report progress on stderr");
    search->callback([&] {
        auto x = load_biquandle(biquandle_path);
        auto result = bq::search_brackets(
            x, modulus, limit,
            [](const bq::BracketTables& t) { std::cout << bq::bracket_to_text(t) << "---\n"; },
            progress ? std::function<void(long long)>([](long long n) {
                std::cerr << "searched " << n << " candidates\n";
            })
                     : std::function<void(long long)>{});
        std::cout << "found " << result.found.size() << "\n";
        status = 0;
    });

    app.add_option("--seed", seed, "reserved; computations are deterministic");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const bq::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return status;
}
