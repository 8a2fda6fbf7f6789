// Command line front end: orbit signatures, degeneration order decisions,
// poset construction, slice table verification, and the double-Grassmannian
// reduction.  Exit codes: 0 success (and oracle agreement), 1 usage error,
// 2 validation error, 3 oracle disagreement.

#include <filesystem>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "qdeg/io.hpp"
#include "qdeg/orbits.hpp"
#include "qdeg/slice.hpp"
#include "qdeg/verify.hpp"

using namespace qdeg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDisagreement = 3;

struct Validation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FieldSpec field_from_flag(const std::string& flag) {
    if (flag.empty() || flag == "Q" || flag == "q") return {FieldSpec::Rationals, 0};
    std::string s = flag;
    for (auto& c : s) c = static_cast<char>(std::tolower(c));
    if (s.rfind("gf", 0) == 0) {
        std::size_t at = s.find_first_of(":=");
        if (at != std::string::npos)
            return {FieldSpec::Prime, std::stoull(s.substr(at + 1))};
    }
    throw Validation("bad --field value (use Q or GF:p): " + flag);
}

json resolve_relative(const std::string& base_file, const std::string& ref) {
    std::filesystem::path p(ref);
    if (p.is_relative()) p = std::filesystem::path(base_file).parent_path() / p;
    return read_json_file(p.string());
}

struct RepFile {
    QuiverSpec spec;
    json mats;
};

RepFile load_rep_file(const std::string& path) {
    json j = read_json_file(path);
    RepFile rf;
    rf.spec = parse_rep_quiver(j, [&](const std::string& ref) { return resolve_relative(path, ref); });
    rf.mats = j.contains("mats") ? j["mats"] : json::object();
    return rf;
}

FieldSpec pick_field(const FieldSpec& from_file, const std::string& flag) {
    if (!flag.empty()) return field_from_flag(flag);
    return from_file;
}

template <class Fn>
int with_field(const FieldSpec& fs, Fn&& fn) {
    if (fs.kind == FieldSpec::Prime) return fn(PrimeField(fs.p));
    return fn(RationalField{});
}

// ---- signature ------------------------------------------------------------

int cmd_signature(const std::string& rep_path, const std::string& field_flag,
                  std::int64_t act_seed) {
    RepFile rf = load_rep_file(rep_path);
    StarEmbedding e = embed_type_D(rf.spec.quiver, rf.spec.dim);
    return with_field(pick_field(rf.spec.field, field_flag), [&](auto f) {
        auto q = std::make_shared<const Quiver>(rf.spec.quiver);
        auto v = parse_rep_mats(rf.mats, f, q, rf.spec.dim);
        if (act_seed >= 0) {
            std::mt19937_64 rng(static_cast<std::uint64_t>(act_seed));
            v = act(v, GroupElement<decltype(f)>::random(f, v.dim, rng));
        }
        auto sig = signature(star_extend(v, e), e.n);
        std::cout << signature_to_json(e.n, sig).dump(2) << "\n";
        return kExitOk;
    });
}

// ---- order ------------------------------------------------------------------

int cmd_order(const std::string& path1, const std::string& path2, bool oracle,
              const std::string& field_flag, std::uint64_t seed) {
    RepFile r1 = load_rep_file(path1);
    RepFile r2 = load_rep_file(path2);
    if (!(r1.spec.quiver == r2.spec.quiver) || r1.spec.dim != r2.spec.dim)
        throw Validation("the two representations live on different quivers or dimensions");
    StarEmbedding e = embed_type_D(r1.spec.quiver, r1.spec.dim);
    return with_field(pick_field(r1.spec.field, field_flag), [&](auto f) {
        auto q = std::make_shared<const Quiver>(r1.spec.quiver);
        auto v1 = parse_rep_mats(r1.mats, f, q, r1.spec.dim);
        auto v2 = parse_rep_mats(r2.mats, f, q, r2.spec.dim);
        auto s1 = orbit_signature(v1, e);
        auto s2 = orbit_signature(v2, e);
        json out;
        out["same_orbit"] = (s1 == s2);
        out["leq"] = signature_leq(s1, s2); // orbit closure of the first inside the second
        out["geq"] = signature_leq(s2, s1);
        int code = kExitOk;
        if (oracle) {
            auto rs = build_root_system(f, q, seed);
            bool oracle_leq = bongartz_leq(rs, v2, v1); // first in closure of second
            bool oracle_geq = bongartz_leq(rs, v1, v2);
            out["oracle"] = {{"leq", oracle_leq}, {"geq", oracle_geq}};
            bool agree = (oracle_leq == out["leq"].get<bool>()) &&
                         (oracle_geq == out["geq"].get<bool>());
            out["verdict"] = agree ? "AGREE" : "DISAGREE";
            if (!agree) code = kExitDisagreement;
        }
        std::cout << out.dump(2) << "\n";
        return code;
    });
}

// ---- poset ------------------------------------------------------------------

int cmd_poset(const std::string& quiver_path, bool dot, std::size_t max_orbits,
              const std::string& field_flag, std::uint64_t seed) {
    QuiverSpec qs = parse_quiver_spec(read_json_file(quiver_path));
    StarEmbedding e = embed_type_D(qs.quiver, qs.dim);
    return with_field(pick_field(qs.field, field_flag), [&](auto f) {
        auto q = std::make_shared<const Quiver>(qs.quiver);
        auto os = enumerate_orbits(f, q, qs.dim, seed, max_orbits);
        auto poset = hasse_poset(os, e);
        if (dot)
            std::cout << poset_to_dot(poset, os.roots.roots);
        else
            std::cout << poset_to_json(poset, os.roots.roots, qs, e.n).dump(2) << "\n";
        return kExitOk;
    });
}

// ---- verify-tables ------------------------------------------------------------

int cmd_verify_tables(int n, const std::string& dims, int samples, const std::string& field_flag,
                      std::uint64_t seed, bool emit_json) {
    if (n < 1 || n > 3) throw Validation("verify-tables supports n in {1, 2, 3}");
    Quiver star = build_star(n);
    DimVector dstar(star.vertices.size());
    if (dims.empty() || dims == "random") {
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        for (auto& x : dstar) x = 1 + static_cast<int>(rng() % 3);
    } else {
        json j = read_json_file(dims);
        for (std::size_t z = 0; z < star.vertices.size(); ++z) {
            if (!j.contains(star.vertices[z]))
                throw Validation("dims file missing vertex " + star.vertices[z]);
            dstar[z] = j[star.vertices[z]].get<int>();
        }
    }
    FieldSpec fs = field_flag.empty() ? FieldSpec{} : field_from_flag(field_flag);
    return with_field(fs, [&](auto f) {
        auto report = verify_tables(f, n, dstar, samples, seed);
        if (emit_json) {
            json j;
            j["n"] = report.n;
            json dim = json::object();
            for (std::size_t z = 0; z < star.vertices.size(); ++z)
                dim[star.vertices[z]] = report.dstar[z];
            j["dstar"] = dim;
            j["contradictions"] = report.contradictions;
            json rows = json::array();
            for (const auto& en : report.entries) {
                json row;
                row["function"] = en.name;
                row["class"] = en.cls.type == FunctionClass::Constant ? "constant"
                               : en.cls.type == FunctionClass::Image  ? "image"
                                                                      : "quiver";
                if (en.cls.type == FunctionClass::Quiver) {
                    row["partner"] = en.partner;
                    row["offset"] = en.reference;
                } else {
                    row["value"] = en.reference;
                }
                row["samples"] = en.samples;
                row["status"] = en.ok ? "ok" : "contradiction";
                rows.push_back(row);
            }
            j["entries"] = rows;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "slice function classification for n=" << report.n << ", dstar=[";
            for (std::size_t z = 0; z < report.dstar.size(); ++z)
                std::cout << (z ? "," : "") << report.dstar[z];
            std::cout << "]\n";
            for (const auto& en : report.entries) {
                std::cout << "  " << en.name << ": ";
                switch (en.cls.type) {
                    case FunctionClass::Constant:
                        std::cout << "C value=" << en.reference;
                        break;
                    case FunctionClass::Image:
                        std::cout << "Im value=" << en.reference;
                        break;
                    case FunctionClass::Quiver:
                        std::cout << en.partner << " offset=" << en.reference;
                        break;
                }
                std::cout << (en.ok ? "" : "  [CONTRADICTION]") << "\n";
            }
            std::cout << report.entries.size() << " functions, " << report.contradictions
                      << " contradictions\n";
        }
        return report.contradictions == 0 ? kExitOk : kExitValidation;
    });
}

// ---- grassmann -----------------------------------------------------------------

// The type D quiver with every arrow oriented toward the branch vertex and
// the dimension vector (a, b, n, n-1, ..., 1).
Quiver grassmann_quiver(int n) {
    Quiver q;
    q.add_vertex("u");
    q.add_vertex("w");
    for (int i = n; i >= 1; --i) q.add_vertex("z" + std::to_string(i));
    q.add_arrow("mu", "u", "z" + std::to_string(n));
    q.add_arrow("nw", "w", "z" + std::to_string(n));
    for (int i = 1; i < n; ++i)
        q.add_arrow("f" + std::to_string(i), "z" + std::to_string(i), "z" + std::to_string(i + 1));
    return q;
}

template <class F>
Rep<F> grassmann_rep(F f, std::shared_ptr<const Quiver> q, int a, int b, int n,
                     const Matrix<F>& m, const Matrix<F>& nn, const Matrix<F>& flag) {
    if (static_cast<int>(m.rows()) != a || static_cast<int>(m.cols()) != n)
        throw Validation("subspace matrix M must be a x n");
    if (static_cast<int>(nn.rows()) != b || static_cast<int>(nn.cols()) != n)
        throw Validation("subspace matrix N must be b x n");
    if (rank(m) != std::min(m.rows(), m.cols()))
        throw Validation("M is rank-deficient (outside the open locus)");
    if (rank(nn) != std::min(nn.rows(), nn.cols()))
        throw Validation("N is rank-deficient (outside the open locus)");
    if (static_cast<int>(flag.rows()) != n || static_cast<int>(flag.cols()) != n ||
        !is_invertible(flag))
        throw Validation("flag must be an ordered basis: n x n invertible");

    DimVector d(q->vertices.size(), 0);
    d[static_cast<std::size_t>(q->vertex_index("u"))] = a;
    d[static_cast<std::size_t>(q->vertex_index("w"))] = b;
    for (int i = 1; i <= n; ++i)
        d[static_cast<std::size_t>(q->vertex_index("z" + std::to_string(i)))] = i;
    Rep<F> rep = zero_rep(f, q, d);
    rep.mats[static_cast<std::size_t>(q->arrow_index("mu"))] = m;
    rep.mats[static_cast<std::size_t>(q->arrow_index("nw"))] = nn;
    // Step i sits inside step i+1: solve F_i B_{i+1} = B_i on the flag's rows
    // (vertex z_n carries the standard basis, so F_{n-1} is just B_{n-1}).
    for (int i = 1; i < n; ++i) {
        Matrix<F> bi = submatrix(flag, 0, static_cast<std::size_t>(i), 0, flag.cols());
        Matrix<F> fi(f, 0, 0);
        if (i == n - 1) {
            fi = bi;
        } else {
            Matrix<F> bnext = submatrix(flag, 0, static_cast<std::size_t>(i + 1), 0, flag.cols());
            auto sol = solve_xa_eq_b(bnext, bi);
            if (!sol) throw Validation("flag rows are not nested (not a flag)");
            fi = *sol;
        }
        rep.mats[static_cast<std::size_t>(q->arrow_index("f" + std::to_string(i)))] = fi;
    }
    check_shapes(rep);
    return rep;
}

int cmd_grassmann(int a, int b, int n, const std::vector<std::string>& files, bool oracle,
                  const std::string& field_flag, std::uint64_t seed) {
    if (n < 2) throw Validation("the double-Grassmannian reduction needs n >= 2");
    if (a < 1 || b < 1 || a > n || b > n) throw Validation("need 1 <= a, b <= n");
    Quiver qq = grassmann_quiver(n);
    auto q = std::make_shared<const Quiver>(qq);
    DimVector d(q->vertices.size(), 0);
    d[static_cast<std::size_t>(q->vertex_index("u"))] = a;
    d[static_cast<std::size_t>(q->vertex_index("w"))] = b;
    for (int i = 1; i <= n; ++i)
        d[static_cast<std::size_t>(q->vertex_index("z" + std::to_string(i)))] = i;
    StarEmbedding e = embed_type_D(qq, d);
    FieldSpec fs = field_flag.empty() ? FieldSpec{} : field_from_flag(field_flag);
    return with_field(fs, [&](auto f) {
        auto load = [&](const std::string& p) { return parse_matrix(read_json_file(p), f); };
        auto rep1 = grassmann_rep(f, q, a, b, n, load(files[0]), load(files[1]), load(files[2]));
        auto rep2 = grassmann_rep(f, q, a, b, n, load(files[3]), load(files[4]), load(files[5]));
        auto s1 = orbit_signature(rep1, e);
        auto s2 = orbit_signature(rep2, e);
        json out;
        out["same_orbit"] = (s1 == s2);
        out["leq"] = signature_leq(s1, s2);
        out["geq"] = signature_leq(s2, s1);
        int code = kExitOk;
        if (oracle) {
            auto rs = build_root_system(f, q, seed);
            bool oracle_leq = bongartz_leq(rs, rep2, rep1);
            bool oracle_geq = bongartz_leq(rs, rep1, rep2);
            out["oracle"] = {{"leq", oracle_leq}, {"geq", oracle_geq}};
            bool agree = (oracle_leq == out["leq"].get<bool>()) &&
                         (oracle_geq == out["geq"].get<bool>());
            out["verdict"] = agree ? "AGREE" : "DISAGREE";
            if (!agree) code = kExitDisagreement;
        }
        std::cout << out.dump(2) << "\n";
        return code;
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbit invariants, degeneration order, and symmetric-variety slices for type D quiver representations"};
    app.require_subcommand(1);

    std::string field_flag;
    std::uint64_t seed = 1;

    auto* sig = app.add_subcommand("signature", "print the rank signature of a representation");
    std::string sig_rep;
    std::int64_t sig_act = -1;
    sig->add_option("rep", sig_rep, "representation JSON file")->required();
    sig->add_option("--field", field_flag, "coefficient field: Q or GF:p");
    sig->add_option("--act-random-seed", sig_act,
                    "act by a random base change drawn from this seed first");

    auto* ord = app.add_subcommand("order", "compare the orbits of two representations");
    std::string ord_rep1, ord_rep2;
    bool ord_oracle = false;
    ord->add_option("rep1", ord_rep1)->required();
    ord->add_option("rep2", ord_rep2)->required();
    ord->add_flag("--oracle", ord_oracle, "cross-check with the Hom-dimension criterion");
    ord->add_option("--field", field_flag, "coefficient field: Q or GF:p");
    ord->add_option("--seed", seed, "seed for oracle sampling");

    auto* pos = app.add_subcommand("poset", "enumerate orbits and print the degeneration poset");
    std::string pos_quiver;
    bool pos_dot = false, pos_json = false;
    std::size_t max_orbits = kDefaultOrbitBudget;
    pos->add_option("quiver", pos_quiver, "quiver JSON file with a dimension vector")->required();
    pos->add_flag("--dot", pos_dot, "emit graphviz instead of JSON");
    pos->add_flag("--json", pos_json, "emit JSON (default)");
    pos->add_option("--max-orbits", max_orbits, "orbit enumeration budget");
    pos->add_option("--field", field_flag, "coefficient field: Q or GF:p");
    pos->add_option("--seed", seed, "seed for representative sampling");

    auto* ver = app.add_subcommand("verify-tables",
                                   "classify every slice rank function and verify it empirically");
    int ver_n = 2, ver_samples = 100;
    std::string ver_dims;
    bool ver_json = false;
    ver->add_option("--n", ver_n, "star quiver size (1..3)");
    ver->add_option("--dims", ver_dims, "random (default) or a JSON file of dimensions");
    ver->add_option("--samples", ver_samples, "sample count per function");
    ver->add_flag("--json", ver_json, "emit the report as JSON");
    ver->add_option("--field", field_flag, "coefficient field: Q or GF:p");
    ver->add_option("--seed", seed, "sampling seed");

    auto* gr = app.add_subcommand("grassmann",
                                  "compare Borel orbits of two double-Grassmannian configurations");
    int gr_a = 0, gr_b = 0, gr_n = 0;
    std::vector<std::string> gr_files;
    bool gr_oracle = false;
    gr->add_option("--a", gr_a, "dimension of the first subspace")->required();
    gr->add_option("--b", gr_b, "dimension of the second subspace")->required();
    gr->add_option("--n", gr_n, "ambient dimension")->required();
    gr->add_option("files", gr_files,
                   "six files: M1 N1 FLAG1 M2 N2 FLAG2 (matrices as JSON arrays)")
        ->expected(6);
    gr->add_flag("--oracle", gr_oracle, "cross-check with the Hom-dimension criterion");
    gr->add_option("--field", field_flag, "coefficient field: Q or GF:p");
    gr->add_option("--seed", seed, "seed for oracle sampling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sig->parsed()) return cmd_signature(sig_rep, field_flag, sig_act);
        if (ord->parsed()) return cmd_order(ord_rep1, ord_rep2, ord_oracle, field_flag, seed);
        if (pos->parsed()) return cmd_poset(pos_quiver, pos_dot && !pos_json, max_orbits,
                                            field_flag, seed);
        if (ver->parsed())
            return cmd_verify_tables(ver_n, ver_dims, ver_samples, field_flag, seed, ver_json);
        if (gr->parsed())
            return cmd_grassmann(gr_a, gr_b, gr_n, gr_files, gr_oracle, field_flag, seed);
    } catch (const Validation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
