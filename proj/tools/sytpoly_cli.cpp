// sytpoly: enumerate shifted standard Young tableaux, their diagonal/gap
// vectors, the lattice points and vertices of the associated Minkowski-sum
// polytope, and mechanically verify the identities tying them together.

#include "sytpoly/poly.hpp"
#include "sytpoly/polytope.hpp"
#include "sytpoly/tableaux.hpp"
#include "sytpoly/trees.hpp"
#include "sytpoly/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::ordered_json;
using namespace sytpoly;

constexpr std::uint64_t kDefaultSeed = 1729;
constexpr int kEnumerationCap = 6; // full tableau enumeration explodes past this

struct CommonOpts {
    int n = 0;
    std::string lambda_text;
    std::string format = "text";
    bool force = false;
};

Partition parse_lambda(const CommonOpts& o) {
    return Partition::parse(o.lambda_text, o.n);
}

void require_desk_scale(int n, bool force) {
    if (n > kEnumerationCap && !force)
        throw CLI::ValidationError(
            "--n", "n > " + std::to_string(kEnumerationCap) +
                       " enumerates a huge set; pass --force to override");
}

std::string join(const std::vector<int>& v, const char* sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run_tableaux(const CommonOpts& o, std::optional<int> limit) {
    require_desk_scale(o.n, o.force);
    const Partition lambda = parse_lambda(o);
    const auto all = enumerate_tableaux(build_diagram(o.n, lambda));
    const size_t emit_count =
        limit ? std::min(all.size(), static_cast<size_t>(*limit)) : all.size();

    if (o.format == "json") {
        ordered_json out;
        out["n"] = o.n;
        out["lambda"] = lambda.parts();
        out["total"] = all.size();
        out["emitted"] = emit_count;
        out["tableaux"] = ordered_json::array();
        for (size_t i = 0; i < emit_count; ++i) {
            const ShiftedTableau& t = all[i];
            ordered_json rows = ordered_json::array();
            for (int r = 1; r <= o.n; ++r) {
                ordered_json row = ordered_json::array();
                for (int c = r; c <= t.diagram().row_end(r); ++c)
                    row.push_back(t.at(r, c));
                rows.push_back(row);
            }
            out["tableaux"].push_back({{"rows", rows},
                                       {"diag", diagonal_vector(t)},
                                       {"gaps", gap_vector(t)}});
        }
        emit(out);
    } else if (o.format == "tsv") {
        for (size_t i = 0; i < emit_count; ++i) {
            const ShiftedTableau& t = all[i];
            std::cout << i << "\t" << join(diagonal_vector(t), ",") << "\t"
                      << join(gap_vector(t), ",") << "\t"
                      << join(t.entries(), " ") << "\n";
        }
    } else {
        std::cout << "# " << all.size() << " tableaux of shape ("
                  << join(lambda.parts(), ",") << "), n=" << o.n << "\n";
        for (size_t i = 0; i < emit_count; ++i) {
            const ShiftedTableau& t = all[i];
            std::cout << "tableau " << i << "  diag=(" << join(diagonal_vector(t), ",")
                      << ")  gaps=(" << join(gap_vector(t), ",") << ")\n";
            for (int r = 1; r <= o.n; ++r) {
                std::cout << std::string(static_cast<size_t>(4 * (r - 1)), ' ');
                for (int c = r; c <= t.diagram().row_end(r); ++c) {
                    const std::string cell = std::to_string(t.at(r, c));
                    const size_t pad = cell.size() < 4 ? 4 - cell.size() : 1;
                    std::cout << std::string(pad, ' ') << cell;
                }
                std::cout << "\n";
            }
        }
    }
    return 0;
}

int run_gaps(const CommonOpts& o) {
    require_desk_scale(o.n, o.force);
    const Partition lambda = parse_lambda(o);
    const auto table = count_by_gaps(build_diagram(o.n, lambda));

    if (o.format == "json") {
        ordered_json out;
        out["n"] = o.n;
        out["lambda"] = lambda.parts();
        out["table"] = ordered_json::array();
        for (const auto& [a, c] : table)
            out["table"].push_back({{"gaps", a}, {"count", to_decimal(c)}});
        emit(out);
    } else if (o.format == "tsv") {
        for (const auto& [a, c] : table)
            std::cout << join(a, ",") << "\t" << to_decimal(c) << "\n";
    } else {
        BigInt total(0);
        for (const auto& [a, c] : table) {
            std::cout << "N(" << join(a, ",") << ") = " << to_decimal(c) << "\n";
            total += c;
        }
        std::cout << "# " << table.size() << " gap vectors, " << to_decimal(total)
                  << " tableaux\n";
    }
    return 0;
}

int run_points(const CommonOpts& o) {
    if (o.n > 10 && !o.force)
        throw CLI::ValidationError("--n", "n > 10 needs --force");
    const Partition lambda = parse_lambda(o);
    const auto pts = lattice_points(p_lambda(o.n, lambda));

    if (o.format == "json") {
        ordered_json out;
        out["n"] = o.n;
        out["lambda"] = lambda.parts();
        out["points"] = ordered_json::array();
        for (const auto& p : pts) out["points"].push_back(p);
        emit(out);
    } else if (o.format == "tsv") {
        for (const auto& p : pts) std::cout << join(p, ",") << "\n";
    } else {
        std::cout << "# " << pts.size() << " lattice points of P(lambda=("
                  << join(lambda.parts(), ",") << "), n=" << o.n << ")\n";
        for (const auto& p : pts) std::cout << "(" << join(p, ",") << ")\n";
    }
    return 0;
}

int run_vertices(const CommonOpts& o, bool with_tableaux) {
    if (o.n > 10 && !o.force)
        throw CLI::ValidationError("--n", "n > 10 needs --force");
    const Partition lambda = parse_lambda(o);
    const int k = lambda.positive_part_count();
    const auto vertices = enumerate_vertices(o.n, lambda);

    auto tableau_rows = [&](const VertexPoint& v) -> std::optional<ordered_json> {
        if (k < 1 || !is_bk_forest(v.tree, k)) return std::nullopt;
        const ShiftedTableau t = construct_vertex_tableau(v.tree, lambda);
        ordered_json rows = ordered_json::array();
        for (int r = 1; r <= o.n; ++r) {
            ordered_json row = ordered_json::array();
            for (int c = r; c <= t.diagram().row_end(r); ++c)
                row.push_back(t.at(r, c));
            rows.push_back(row);
        }
        return rows;
    };

    if (o.format == "json") {
        ordered_json out;
        out["n"] = o.n;
        out["lambda"] = lambda.parts();
        out["vertices"] = ordered_json::array();
        for (const auto& v : vertices) {
            ordered_json item = {{"tree", encode_tree(v.tree)},
                                 {"vertex", v.coords},
                                 {"diag", diag_from_gaps(v.coords)}};
            if (with_tableaux) {
                const auto rows = tableau_rows(v);
                item["tableau"] = rows ? *rows : ordered_json(nullptr);
            }
            out["vertices"].push_back(item);
        }
        emit(out);
    } else if (o.format == "tsv") {
        for (const auto& v : vertices)
            std::cout << encode_tree(v.tree) << "\t" << join(v.coords, ",") << "\t"
                      << join(diag_from_gaps(v.coords), ",") << "\n";
    } else {
        std::cout << "# " << vertices.size() << " vertices of P(lambda=("
                  << join(lambda.parts(), ",") << "), n=" << o.n << ")\n";
        for (const auto& v : vertices) {
            std::cout << "vertex (" << join(v.coords, ",") << ")  diag=("
                      << join(diag_from_gaps(v.coords), ",") << ")  tree="
                      << encode_tree(v.tree) << "\n";
            if (with_tableaux) {
                const auto rows = tableau_rows(v);
                if (rows) {
                    int r = 1;
                    for (const auto& row : *rows) {
                        std::cout << std::string(static_cast<size_t>(4 * (r - 1)), ' ');
                        for (const auto& cell : row) {
                            const std::string s = cell.dump();
                            const size_t pad = s.size() < 4 ? 4 - s.size() : 1;
                            std::cout << std::string(pad, ' ') << s;
                        }
                        std::cout << "\n";
                        ++r;
                    }
                } else {
                    std::cout << "    (no B_k-forest witness; no constructed tableau)\n";
                }
            }
        }
    }
    return 0;
}

int emit_reports(const std::vector<VerificationReport>& reports,
                 const std::string& format) {
    int failed = 0;
    for (const auto& r : reports)
        if (!r.pass) ++failed;

    if (format == "json") {
        ordered_json out;
        out["reports"] = ordered_json::array();
        for (const auto& r : reports) out["reports"].push_back(r.to_json());
        out["summary"] = {{"passed", reports.size() - failed}, {"failed", failed}};
        emit(out);
    } else if (format == "tsv") {
        for (const auto& r : reports)
            std::cout << r.claim << "\t" << (r.pass ? "pass" : "fail") << "\t"
                      << r.ms << "\n";
    } else {
        for (const auto& r : reports) std::cout << r.to_text() << "\n";
        std::cout << "# " << (reports.size() - failed) << "/" << reports.size()
                  << " claims passed\n";
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shifted Young tableaux, their diagonal vectors, and the "
                 "lattice points and vertices of the matching Minkowski-sum "
                 "polytope"};
    app.require_subcommand(1);

    CommonOpts opt;
    std::optional<int> limit;
    bool with_tableaux = false;
    int max_n = 4, max_part = 3;
    std::uint64_t seed = kDefaultSeed;

    auto add_common = [&](CLI::App* sub, bool need_shape) {
        if (need_shape) {
            sub->add_option("--n", opt.n, "ambient n")->required();
            sub->add_option("--lambda", opt.lambda_text,
                            "partition, comma-separated (\"\" for empty)");
        }
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "tsv", "text"}));
        sub->add_flag("--force", opt.force, "override the safety cap on n");
    };

    CLI::App* tab = app.add_subcommand("tableaux", "list standard shifted tableaux");
    add_common(tab, true);
    int limit_value = 0;
    CLI::Option* limit_opt =
        tab->add_option("--limit", limit_value, "emit at most this many");

    CLI::App* gaps = app.add_subcommand("gaps", "the gap-vector count table");
    add_common(gaps, true);

    CLI::App* points = app.add_subcommand("points", "lattice points of the polytope");
    add_common(points, true);

    CLI::App* vertices = app.add_subcommand("vertices", "vertices of the polytope");
    add_common(vertices, true);
    vertices->add_flag("--with-tableaux", with_tableaux,
                       "include constructed tableaux where defined");

    CLI::App* verify = app.add_subcommand("verify", "check the built-in claims");
    verify->require_subcommand(1);
    auto add_verify_common = [&](CLI::App* sub, bool grid) {
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "tsv", "text"}));
        sub->add_flag("--force", opt.force, "override the safety cap");
        if (grid) {
            sub->add_option("--max-n", max_n, "grid bound on n");
            sub->add_option("--max-part", max_part, "grid bound on parts");
        }
        sub->add_option("--seed", seed, "seed for randomized checks");
    };

    CLI::App* v_id = verify->add_subcommand("identity", "the generating identity");
    v_id->add_option("--n", opt.n, "single case: n");
    v_id->add_option("--lambda", opt.lambda_text, "single case: partition");
    add_verify_common(v_id, true);

    CLI::App* v_bij = verify->add_subcommand("bijection", "gap vectors = lattice points");
    v_bij->add_option("--n", opt.n, "single case: n");
    v_bij->add_option("--lambda", opt.lambda_text, "single case: partition");
    add_verify_common(v_bij, true);

    CLI::App* v_vc = verify->add_subcommand("vertex-count", "forest counts vs closed form");
    add_verify_common(v_vc, true);

    CLI::App* v_all = verify->add_subcommand("all", "every claim");
    add_verify_common(v_all, true);

    try {
        app.parse(argc, argv);

        if (tab->parsed()) {
            if (limit_opt->count()) limit = limit_value;
            return run_tableaux(opt, limit);
        }
        if (gaps->parsed()) return run_gaps(opt);
        if (points->parsed()) return run_points(opt);
        if (vertices->parsed()) return run_vertices(opt, with_tableaux);

        if (verify->parsed()) {
            if (max_n > kEnumerationCap && !opt.force)
                throw CLI::ValidationError("--max-n", "grid past n=6 needs --force");
            std::vector<VerificationReport> reports;
            for (CLI::App* sub : {v_id, v_bij}) {
                if (sub->parsed() && sub->count("--lambda") && !sub->count("--n"))
                    throw CLI::ValidationError("--lambda", "requires --n");
            }
            if (v_id->parsed()) {
                if (v_id->count("--n")) {
                    require_desk_scale(opt.n, opt.force);
                    reports.push_back(verify_identity_case(opt.n, parse_lambda(opt)));
                } else {
                    reports.push_back(verify_identity_grid(max_n, max_part));
                }
            } else if (v_bij->parsed()) {
                if (v_bij->count("--n")) {
                    require_desk_scale(opt.n, opt.force);
                    reports.push_back(verify_bijection_case(opt.n, parse_lambda(opt)));
                } else {
                    reports.push_back(verify_bijection_grid(max_n, max_part));
                }
            } else if (v_vc->parsed()) {
                reports.push_back(verify_vertex_counts(std::max(max_n, 8)));
                reports.push_back(verify_count_variant(std::max(max_n, 8)));
            } else {
                reports = verify_all(max_n, max_part, seed);
            }
            return emit_reports(reports, opt.format);
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
