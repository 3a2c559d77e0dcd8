// kmss: command-line front end for the Kac-Moody symmetric-space library.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 Undetermined
// verdict (tits-cone / causal only). All structured output honors --json.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kmss/gcm.hpp"
#include "kmss/geometry.hpp"
#include "kmss/laurent.hpp"
#include "kmss/liegroup.hpp"
#include "kmss/refspace.hpp"
#include "kmss/weylrep.hpp"

using json = nlohmann::json;
using namespace kmss;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndetermined = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Input parsing

json parse_json(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw UsageError("invalid JSON in " + what);
    return j;
}

// Inline "[[...]]" or a file holding either the bare array or {"A": [[...]]}.
std::vector<std::vector<long long>> read_matrix(const std::string& inline_text,
                                                const std::string& file_path) {
    if (inline_text.empty() && file_path.empty())
        throw UsageError("a matrix is required (--matrix or --file)");
    json j;
    if (!inline_text.empty()) {
        j = parse_json(inline_text, "--matrix");
    } else {
        std::ifstream in(file_path);
        if (!in) throw UsageError("cannot open file: " + file_path);
        std::stringstream buf;
        buf << in.rdbuf();
        j = parse_json(buf.str(), file_path);
    }
    if (j.is_object() && j.contains("A")) j = j["A"];
    if (!j.is_array()) throw UsageError("matrix must be a JSON array of rows");
    std::vector<std::vector<long long>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw UsageError("matrix rows must be arrays");
        std::vector<long long> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw UsageError("matrix entries must be integers");
            r.push_back(v.get<long long>());
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

Rat rat_of_json(const json& v) {
    if (v.is_number_integer()) return Rat(v.get<long long>());
    if (v.is_string()) {
        try {
            return rat_from_string(v.get<std::string>());
        } catch (const std::exception&) {
            throw UsageError("bad rational literal: " + v.get<std::string>());
        }
    }
    throw UsageError("coordinates must be integers or rational strings like \"1/2\"");
}

QVec read_point(const std::string& text, const std::string& what) {
    json j = parse_json(text, what);
    if (!j.is_array()) throw UsageError(what + " must be a JSON array");
    QVec p;
    for (const auto& v : j) p.push_back(rat_of_json(v));
    return p;
}

WeylWord read_word(const std::string& text) {
    if (text.empty()) return {};
    json j = parse_json(text, "--word");
    if (!j.is_array()) throw UsageError("--word must be a JSON array of 1-based letters");
    WeylWord w;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long long>() < 1)
            throw UsageError("word letters must be positive integers");
        w.push_back(v.get<std::size_t>());
    }
    return w;
}

std::vector<std::size_t> read_perm(const std::string& text) {
    json j = parse_json(text, "--perm");
    if (!j.is_array()) throw UsageError("--perm must be a JSON array (0-based images)");
    std::vector<std::size_t> p;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw UsageError("permutation images must be nonnegative integers");
        p.push_back(v.get<std::size_t>());
    }
    return p;
}

std::size_t descent_cap(std::size_t flag_cap) {
    if (flag_cap != 0) return flag_cap;
    if (const char* env = std::getenv("KMSS_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw UsageError("KMSS_CAP must be a positive integer");
    }
    return kDefaultDescentCap;
}

// ---------------------------------------------------------------------------
// Serialization

json qmat_json(const QMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json qvec_json(const QVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_to_string(x));
    return a;
}

json word_json(const WeylWord& w) {
    json a = json::array();
    for (auto g : w) a.push_back(g);
    return a;
}

json root_json(const RealRoot& r) {
    json coords = json::array();
    for (const auto& c : r.coords) coords.push_back(c.str());
    return {{"coords", coords},
            {"height", r.height().str()},
            {"witness", word_json(r.witness)},
            {"witness_index", r.witness_index}};
}

json laurent_json(const LaurentPoly& p) {
    json obj = json::object();
    for (const auto& [exp, coeff] : p.coefficients()) obj[std::to_string(exp)] = coeff.str();
    return obj;
}

json laurent_matrix_json(const LaurentMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(laurent_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json mat2_json(const Mat2& m) {
    return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})});
}

std::string qmat_str(const QMat& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << rat_to_string(m(i, j));
        os << "]\n";
    }
    return os.str();
}

std::string cone_status_str(ConeStatus s) {
    switch (s) {
        case ConeStatus::InCone: return "in_cone";
        case ConeStatus::InNegativeCone: return "in_negative_cone";
        case ConeStatus::Undetermined: return "undetermined";
    }
    return "?";
}

json axiom_json(const AxiomResult& r) {
    json j{{"checked", r.checked}, {"passed", r.passed}, {"proved", r.proved}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

json check_json(const CheckResult& r) {
    json j{{"passed", r.passed}, {"samples", r.samples}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

// ---------------------------------------------------------------------------
// RunReport envelope

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct Emitter {
    bool as_json = false;
    std::string command;
    std::string inputs;  // canonical echo of the parsed inputs, for the hash
    std::vector<std::string> warnings;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    // Machine path: wrap results in the run report. Human path: the caller
    // already printed; nothing more to do.
    int finish(const json& results, const std::string& human, int code = kExitOk) {
        if (as_json) {
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
            json report{{"command", command},
                        {"inputs_hash", fnv1a(command + "\n" + inputs)},
                        {"results", results},
                        {"warnings", warnings},
                        {"elapsed_ms", elapsed}};
            std::cout << report.dump(2) << "\n";
        } else {
            std::cout << human;
            for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
        }
        return code;
    }
};

// ---------------------------------------------------------------------------
// Shared option bundle for matrix-consuming commands

struct MatrixOpts {
    std::string matrix_text;
    std::string file_path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--matrix", matrix_text, "GCM inline as JSON, e.g. '[[2,-1],[-1,2]]'");
        cmd->add_option("--file", file_path, "JSON file holding the GCM ({\"A\": [[...]]})");
    }
    Gcm load(Emitter& em) const {
        auto raw = read_matrix(matrix_text, file_path);
        std::ostringstream os;
        for (const auto& row : raw) {
            for (auto v : row) os << v << ",";
            os << ";";
        }
        em.inputs += "A=" + os.str();
        return validate_gcm(raw);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kac-Moody symmetric space toolkit"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit a machine-readable run report");

    // --- classify ----------------------------------------------------------
    auto* c_classify = app.add_subcommand("classify", "type / rank / corank of a GCM");
    MatrixOpts m_classify;
    m_classify.attach(c_classify);

    // --- dynkin ------------------------------------------------------------
    auto* c_dynkin = app.add_subcommand("dynkin", "Dynkin diagram as DOT text");
    MatrixOpts m_dynkin;
    m_dynkin.attach(c_dynkin);

    // --- coxeter -----------------------------------------------------------
    auto* c_coxeter = app.add_subcommand("coxeter", "Coxeter matrix (0 encodes infinity)");
    MatrixOpts m_coxeter;
    m_coxeter.attach(c_coxeter);

    // --- symmetrize --------------------------------------------------------
    auto* c_symmetrize = app.add_subcommand("symmetrize", "D, B with A = D B, D = diag(epsilon)");
    MatrixOpts m_symmetrize;
    m_symmetrize.attach(c_symmetrize);

    // --- roots -------------------------------------------------------------
    auto* c_roots = app.add_subcommand("roots", "positive real roots up to a height bound");
    MatrixOpts m_roots;
    m_roots.attach(c_roots);
    long long roots_bound = 10;
    c_roots->add_option("--bound", roots_bound, "height bound (default 10)");

    // --- weyl --------------------------------------------------------------
    auto* c_weyl = app.add_subcommand("weyl", "matrix of a Weyl word on the coroot space");
    MatrixOpts m_weyl;
    m_weyl.attach(c_weyl);
    std::string weyl_word;
    bool weyl_dual = false;
    c_weyl->add_option("--word", weyl_word, "word as JSON, 1-based letters, e.g. '[1,2,1]'")
        ->required();
    c_weyl->add_flag("--dual", weyl_dual, "act on root functionals instead");

    // --- reduce ------------------------------------------------------------
    auto* c_reduce = app.add_subcommand("reduce", "reduced space a-bar; optional reduced word");
    MatrixOpts m_reduce;
    m_reduce.attach(c_reduce);
    std::string reduce_word;
    c_reduce->add_option("--word", reduce_word, "also print the reduced representation matrix");

    // --- tits-cone ---------------------------------------------------------
    auto* c_cone = app.add_subcommand("tits-cone", "Tits-cone membership by reflection descent");
    MatrixOpts m_cone;
    m_cone.attach(c_cone);
    std::string cone_point;
    std::size_t cone_cap = 0;
    c_cone->add_option("--point", cone_point, "point in coroot coordinates, JSON array")
        ->required();
    c_cone->add_option("--cap", cone_cap, "descent step cap (default 10000 or KMSS_CAP)");

    // --- causal ------------------------------------------------------------
    auto* c_causal = app.add_subcommand("causal", "causal order of two points on the flat");
    MatrixOpts m_causal;
    m_causal.attach(c_causal);
    std::string causal_x, causal_y;
    std::size_t causal_cap = 0;
    c_causal->add_option("--x", causal_x, "first point, reduced coordinates")->required();
    c_causal->add_option("--y", causal_y, "second point, reduced coordinates")->required();
    c_causal->add_option("--cap", causal_cap, "descent step cap (default 10000 or KMSS_CAP)");

    // --- singular ----------------------------------------------------------
    auto* c_singular = app.add_subcommand("singular", "root hyperplanes through a point");
    MatrixOpts m_singular;
    m_singular.attach(c_singular);
    std::string singular_point;
    long long singular_bound = 10;
    c_singular->add_option("--point", singular_point, "point in coroot coordinates")->required();
    c_singular->add_option("--bound", singular_bound, "root height bound (default 10)");

    // --- star-spherical ----------------------------------------------------
    auto* c_star = app.add_subcommand("star-spherical", "is every vertex star spherical?");
    MatrixOpts m_star;
    m_star.attach(c_star);

    // --- automorphisms -----------------------------------------------------
    auto* c_autos = app.add_subcommand("automorphisms", "diagram automorphism group");
    MatrixOpts m_autos;
    m_autos.attach(c_autos);
    bool autos_coxeter = false;
    c_autos->add_flag("--coxeter", autos_coxeter, "automorphisms of the Coxeter diagram instead");

    // --- realize -----------------------------------------------------------
    auto* c_realize = app.add_subcommand("realize", "canonical linear realization on a-bar");
    MatrixOpts m_realize;
    m_realize.attach(c_realize);
    std::string realize_word, realize_perm;
    int realize_sign = 1;
    c_realize->add_option("--word", realize_word, "Weyl word, JSON (default empty)");
    c_realize->add_option("--perm", realize_perm, "diagram automorphism, 0-based images")
        ->required();
    c_realize->add_option("--sign", realize_sign, "+1 or -1 (default +1)");

    // --- check-axioms ------------------------------------------------------
    auto* c_axioms = app.add_subcommand("check-axioms", "reflection-space axioms RS1-RS4");
    std::string axioms_model = "euclidean";
    std::size_t axioms_samples = 1000, axioms_dim = 3;
    std::uint64_t axioms_seed = 0;
    c_axioms
        ->add_option("--model", axioms_model,
                     "euclidean | sl2-group | s3-involution | hyperbolic")
        ->check(CLI::IsMember({"euclidean", "sl2-group", "s3-involution", "hyperbolic"}));
    c_axioms->add_option("--samples", axioms_samples, "sample count (default 1000)");
    c_axioms->add_option("--dim", axioms_dim, "dimension for the euclidean model (default 3)");
    c_axioms->add_option("--seed", axioms_seed, "rng seed (default 0)");

    // --- translation -------------------------------------------------------
    auto* c_transl = app.add_subcommand("translation", "transvection-group identities");
    std::string transl_model = "euclidean";
    std::size_t transl_samples = 1000, transl_dim = 1;
    std::uint64_t transl_seed = 0;
    c_transl->add_option("--model", transl_model, "euclidean | hyperbolic")
        ->check(CLI::IsMember({"euclidean", "hyperbolic"}));
    c_transl->add_option("--samples", transl_samples, "sample count (default 1000)");
    c_transl->add_option("--dim", transl_dim, "dimension for the euclidean model (default 1)");
    c_transl->add_option("--seed", transl_seed, "rng seed (default 0)");

    // --- flats -------------------------------------------------------------
    auto* c_flats = app.add_subcommand("flats", "weak-flat checks on a subset candidate");
    std::string flats_subset = "affine-line";
    std::size_t flats_samples = 300;
    std::uint64_t flats_seed = 0;
    c_flats
        ->add_option("--subset", flats_subset, "affine-line | integer-lattice | diagonal")
        ->check(CLI::IsMember({"affine-line", "integer-lattice", "diagonal"}));
    c_flats->add_option("--samples", flats_samples, "sample count (default 300)");
    c_flats->add_option("--seed", flats_seed, "rng seed (default 0)");

    // --- demo-hole ---------------------------------------------------------
    auto* c_hole = app.add_subcommand("demo-hole", "the non-diagonalizable affine twist example");
    std::size_t hole_n = 1;
    c_hole->add_option("--n", hole_n, "block parameter, matrix size n+1 (default 1)")
        ->check(CLI::PositiveNumber);

    // --- kostant -----------------------------------------------------------
    auto* c_kostant = app.add_subcommand("kostant", "rank-one Kostant convexity sweep");
    std::size_t kostant_samples = 10000;
    double kostant_s = 1.0;
    c_kostant->add_option("--samples", kostant_samples, "grid size (default 10000)");
    c_kostant->add_option("--s", kostant_s, "torus parameter s > 0 (default 1.0)");

    // --- kak ---------------------------------------------------------------
    auto* c_kak = app.add_subcommand("kak", "KAK and Iwasawa factors of an SL2(R) element");
    std::string kak_entries;
    c_kak->add_option("--entries", kak_entries, "matrix [[a,b],[c,d]] with det 1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 exit handles --help with code 0; fold real errors into 2
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Emitter em;
    em.as_json = as_json;

    try {
        if (*c_classify) {
            em.command = "classify";
            Gcm a = m_classify.load(em);
            Classification cls = classify(a);
            json results{
                {"type", to_string(cls.type)}, {"rank", cls.rank}, {"corank", cls.corank}};
            std::ostringstream os;
            os << "type:   " << to_string(cls.type) << "\n"
               << "rank:   " << cls.rank << "\n"
               << "corank: " << cls.corank << "\n";
            return em.finish(results, os.str());
        }

        if (*c_dynkin) {
            em.command = "dynkin";
            Gcm a = m_dynkin.load(em);
            std::string dot = dynkin_dot(a);
            return em.finish(json{{"dot", dot}}, dot);
        }

        if (*c_coxeter) {
            em.command = "coxeter";
            Gcm a = m_coxeter.load(em);
            CoxeterMatrix cm = coxeter_matrix(a);
            json rows = json::array();
            std::ostringstream os;
            for (std::size_t i = 0; i < cm.n; ++i) {
                json row = json::array();
                os << "  [";
                for (std::size_t j = 0; j < cm.n; ++j) {
                    row.push_back(cm.entry(i, j));
                    if (j) os << " ";
                    if (cm.entry(i, j) == kCoxeterInfinity)
                        os << "inf";
                    else
                        os << cm.entry(i, j);
                }
                os << "]\n";
                rows.push_back(std::move(row));
            }
            return em.finish(json{{"m", rows}, {"infinity_encoding", kCoxeterInfinity}}, os.str());
        }

        if (*c_symmetrize) {
            em.command = "symmetrize";
            Gcm a = m_symmetrize.load(em);
            Symmetrization sym = symmetrize(a);
            json eps = json::array();
            std::ostringstream os;
            os << "epsilon: [";
            for (std::size_t i = 0; i < sym.epsilon.size(); ++i) {
                eps.push_back(sym.epsilon[i].str());
                os << (i ? " " : "") << sym.epsilon[i].str();
            }
            os << "]\nB:\n" << qmat_str(sym.b);
            return em.finish(json{{"epsilon", eps}, {"B", qmat_json(sym.b)}}, os.str());
        }

        if (*c_roots) {
            em.command = "roots";
            Gcm a = m_roots.load(em);
            em.inputs += " bound=" + std::to_string(roots_bound);
            if (roots_bound < 1) throw UsageError("--bound must be positive");
            auto roots = enumerate_real_roots(a, BigInt(roots_bound));
            json list = json::array();
            std::ostringstream os;
            for (const auto& r : roots) {
                list.push_back(root_json(r));
                os << "  (";
                for (std::size_t j = 0; j < r.coords.size(); ++j)
                    os << (j ? " " : "") << r.coords[j].str();
                os << ")  height " << r.height().str() << "\n";
            }
            os << roots.size() << " positive real roots of height <= " << roots_bound << "\n";
            return em.finish(json{{"roots", list}, {"count", roots.size()}}, os.str());
        }

        if (*c_weyl) {
            em.command = "weyl";
            Gcm a = m_weyl.load(em);
            WeylWord w = read_word(weyl_word);
            em.inputs += " word=" + weyl_word + (weyl_dual ? " dual" : "");
            for (auto g : w)
                if (g > a.size()) throw UsageError("word letter exceeds the matrix size");
            QMat rho = weyl_dual ? dual_word_to_matrix(a, w) : word_to_matrix(a, w);
            return em.finish(json{{"matrix", qmat_json(rho)}}, qmat_str(rho));
        }

        if (*c_reduce) {
            em.command = "reduce";
            Gcm a = m_reduce.load(em);
            ReducedSpace rs = reduced_space(a);
            json results{{"l", rs.l},
                         {"projection", qmat_json(rs.projection)},
                         {"section", qmat_json(rs.section)}};
            std::ostringstream os;
            os << "l = " << rs.l << "\nprojection:\n"
               << qmat_str(rs.projection) << "section:\n"
               << qmat_str(rs.section);
            if (!reduce_word.empty()) {
                WeylWord w = read_word(reduce_word);
                em.inputs += " word=" + reduce_word;
                for (auto g : w)
                    if (g > a.size()) throw UsageError("word letter exceeds the matrix size");
                QMat red = reduced_rep_matrix(a, w);
                results["reduced_matrix"] = qmat_json(red);
                os << "reduced word matrix:\n" << qmat_str(red);
            }
            return em.finish(results, os.str());
        }

        if (*c_cone) {
            em.command = "tits-cone";
            Gcm a = m_cone.load(em);
            QVec p = read_point(cone_point, "--point");
            std::size_t cap = descent_cap(cone_cap);
            em.inputs += " point=" + cone_point + " cap=" + std::to_string(cap);
            ConeVerdict v = tits_cone_membership(a, p, cap);
            json results{{"status", cone_status_str(v.status)},
                         {"witness", word_json(v.witness)},
                         {"interior", v.interior},
                         {"steps", v.steps}};
            std::ostringstream os;
            os << "status:   " << cone_status_str(v.status) << "\n";
            if (v.status != ConeStatus::Undetermined) {
                os << "witness:  [";
                for (std::size_t i = 0; i < v.witness.size(); ++i)
                    os << (i ? " " : "") << v.witness[i];
                os << "]\ninterior: " << (v.interior ? "true" : "false") << "\n";
            }
            os << "steps:    " << v.steps << "\n";
            int code = v.status == ConeStatus::Undetermined ? kExitUndetermined : kExitOk;
            return em.finish(results, os.str(), code);
        }

        if (*c_causal) {
            em.command = "causal";
            Gcm a = m_causal.load(em);
            QVec x = read_point(causal_x, "--x"), y = read_point(causal_y, "--y");
            std::size_t cap = descent_cap(causal_cap);
            em.inputs += " x=" + causal_x + " y=" + causal_y + " cap=" + std::to_string(cap);
            CausalRelation r = causal_flat_order(a, x, y, cap);
            json results{{"relation", to_string(r)}};
            int code = r == CausalRelation::Undetermined ? kExitUndetermined : kExitOk;
            return em.finish(results, "relation: " + to_string(r) + "\n", code);
        }

        if (*c_singular) {
            em.command = "singular";
            Gcm a = m_singular.load(em);
            QVec p = read_point(singular_point, "--point");
            em.inputs += " point=" + singular_point + " bound=" + std::to_string(singular_bound);
            if (singular_bound < 1) throw UsageError("--bound must be positive");
            auto roots = singular_roots_at(a, p, BigInt(singular_bound));
            json list = json::array();
            std::ostringstream os;
            for (const auto& r : roots) {
                list.push_back(root_json(r));
                os << "  (";
                for (std::size_t j = 0; j < r.coords.size(); ++j)
                    os << (j ? " " : "") << r.coords[j].str();
                os << ")\n";
            }
            os << roots.size() << " singular roots of height <= " << singular_bound << "\n";
            return em.finish(json{{"roots", list}, {"count", roots.size()}}, os.str());
        }

        if (*c_star) {
            em.command = "star-spherical";
            Gcm a = m_star.load(em);
            bool star = is_star_spherical(a);
            bool two = is_two_spherical(a);
            json results{{"star_spherical", star}, {"two_spherical", two}};
            std::ostringstream os;
            os << "star-spherical: " << (star ? "true" : "false") << "\n"
               << "two-spherical:  " << (two ? "true" : "false") << "\n";
            return em.finish(results, os.str());
        }

        if (*c_autos) {
            em.command = "automorphisms";
            Gcm a = m_autos.load(em);
            em.inputs += autos_coxeter ? " coxeter" : "";
            auto perms =
                autos_coxeter ? coxeter_diagram_automorphisms(a) : diagram_automorphisms(a);
            json list = json::array();
            std::ostringstream os;
            for (const auto& p : perms) {
                json jp = json::array();
                os << "  [";
                for (std::size_t i = 0; i < p.size(); ++i) {
                    jp.push_back(p[i]);
                    os << (i ? " " : "") << p[i];
                }
                os << "]\n";
                list.push_back(std::move(jp));
            }
            os << perms.size() << " automorphisms\n";
            return em.finish(json{{"automorphisms", list}, {"count", perms.size()}}, os.str());
        }

        if (*c_realize) {
            em.command = "realize";
            Gcm a = m_realize.load(em);
            WeylWord w = read_word(realize_word);
            VertexPermutation sigma = read_perm(realize_perm);
            em.inputs += " word=" + realize_word + " perm=" + realize_perm +
                         " sign=" + std::to_string(realize_sign);
            LinearRealization lr = canonical_linear_realization(a, w, sigma, realize_sign);
            json results{{"matrix", qmat_json(lr.matrix)},
                         {"word", word_json(lr.word)},
                         {"diagram_automorphism", lr.diagram_automorphism},
                         {"sign", lr.sign}};
            return em.finish(results, qmat_str(lr.matrix));
        }

        if (*c_axioms) {
            em.command = "check-axioms";
            em.inputs += "model=" + axioms_model + " samples=" + std::to_string(axioms_samples) +
                         " seed=" + std::to_string(axioms_seed);
            Rng rng(axioms_seed);
            AxiomReport rep;
            if (axioms_model == "euclidean")
                rep = check_axioms(EuclideanModel(axioms_dim), axioms_samples, rng);
            else if (axioms_model == "sl2-group")
                rep = check_axioms(Sl2GroupModel{}, axioms_samples, rng);
            else if (axioms_model == "s3-involution")
                rep = check_axioms(PermInvolutionModel::s3_transpositions(), axioms_samples, rng);
            else
                rep = check_axioms(PosDefModel{}, axioms_samples, rng);
            json results{{"rs1", axiom_json(rep.rs1)},
                         {"rs2", axiom_json(rep.rs2)},
                         {"rs3", axiom_json(rep.rs3)},
                         {"rs4", axiom_json(rep.rs4)},
                         {"all_passed", rep.all_passed()}};
            std::ostringstream os;
            auto line = [&](const char* name, const AxiomResult& r) {
                os << name << ": " << (r.passed ? "pass" : "FAIL")
                   << (r.proved ? " (proved)" : "");
                if (!r.witness.empty()) os << "  witness " << r.witness;
                os << "\n";
            };
            line("RS1", rep.rs1);
            line("RS2", rep.rs2);
            line("RS3", rep.rs3);
            line("RS4", rep.rs4);
            return em.finish(results, os.str());
        }

        if (*c_transl) {
            em.command = "translation";
            em.inputs += "model=" + transl_model + " samples=" + std::to_string(transl_samples) +
                         " seed=" + std::to_string(transl_seed);
            Rng rng(transl_seed);
            TranslationReport rep;
            if (transl_model == "euclidean")
                rep = translation_group_checks(EuclideanRModel(transl_dim), transl_samples, rng);
            else
                rep = translation_group_checks(PosDefModel{}, transl_samples, rng);
            json results{{"geodesic_precheck", check_json(rep.geodesic_precheck)},
                         {"homomorphism", check_json(rep.homomorphism)},
                         {"base_independence", check_json(rep.base_independence)},
                         {"doubling", check_json(rep.doubling)},
                         {"all_passed", rep.all_passed()}};
            std::ostringstream os;
            auto line = [&](const char* name, const CheckResult& r) {
                os << name << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.samples
                   << " samples)\n";
            };
            line("geodesic pre-check", rep.geodesic_precheck);
            line("homomorphism", rep.homomorphism);
            line("base independence", rep.base_independence);
            line("doubling", rep.doubling);
            return em.finish(results, os.str());
        }

        if (*c_flats) {
            em.command = "flats";
            em.inputs += "subset=" + flats_subset + " samples=" + std::to_string(flats_samples) +
                         " seed=" + std::to_string(flats_seed);
            Rng rng(flats_seed);
            WeakFlatReport rep;
            if (flats_subset == "affine-line") {
                EuclideanModel e2(2);
                AffineLineSubset line{{Rat(1), Rat(2)}, {Rat(3), Rat(-1)}};
                rep = weak_flat_checks(e2, line, flats_samples, rng);
            } else if (flats_subset == "integer-lattice") {
                EuclideanModel e1(1);
                rep = weak_flat_checks(e1, IntegerLatticeSubset{}, flats_samples, rng);
            } else {
                PosDefModel m;
                rep = weak_flat_checks(m, DiagonalSubgroupSubset{}, flats_samples, rng);
            }
            json results{{"f1_reflection_closure", check_json(rep.f1_reflection_closure)},
                         {"f2_midpoints", check_json(rep.f2_midpoints)},
                         {"f3_weakly_abelian", check_json(rep.f3_weakly_abelian)},
                         {"all_passed", rep.all_passed()}};
            std::ostringstream os;
            auto line = [&](const char* name, const CheckResult& r) {
                os << name << ": " << (r.passed ? "pass" : "FAIL");
                if (!r.witness.empty()) os << "  witness " << r.witness;
                os << "\n";
            };
            line("F1 reflection closure", rep.f1_reflection_closure);
            line("F2 midpoints", rep.f2_midpoints);
            line("F3 weakly abelian", rep.f3_weakly_abelian);
            return em.finish(results, os.str());
        }

        if (*c_hole) {
            em.command = "demo-hole";
            em.inputs += "n=" + std::to_string(hole_n);
            HoleExample h = example_hole(hole_n);
            // the quadratic factor's middle coefficient is t + 4 + t^-1
            LaurentPoly c = LaurentPoly::t() + LaurentPoly(4) + LaurentPoly::t_inv();
            bool splits = quadratic_splits_over_laurent(c);
            Diagonalizability diag = diagonalizable_in_affine(h.v);
            MidpointReport mid = midpoint_obstruction(h.v);
            json results{{"v", laurent_matrix_json(h.v)},
                         {"charpoly", json::array()},
                         {"quadratic_splits", splits},
                         {"diagonalizable", diag.diagonalizable},
                         {"reason", diag.reason},
                         {"midpoint_exists", mid.midpoint_exists},
                         {"midpoint_explanation", mid.explanation}};
            for (const auto& coeff : h.charpoly) results["charpoly"].push_back(laurent_json(coeff));
            std::ostringstream os;
            os << "v (twist of the unipotent u):\n";
            for (std::size_t i = 0; i < h.v.size(); ++i) {
                os << "  [";
                for (std::size_t j = 0; j < h.v.size(); ++j)
                    os << (j ? " | " : "") << h.v(i, j).str();
                os << "]\n";
            }
            os << "char(v) = " << charpoly_str(h.charpoly) << "\n"
               << "quadratic factor splits over R[t,t^-1]: " << (splits ? "yes" : "no") << "\n"
               << "diagonalizable: " << (diag.diagonalizable ? "yes" : "no") << " (" << diag.reason
               << ")\n"
               << "midpoint exists: " << (mid.midpoint_exists ? "yes" : "no") << "\n"
               << mid.explanation << "\n";
            return em.finish(results, os.str());
        }

        if (*c_kostant) {
            em.command = "kostant";
            em.inputs += "samples=" + std::to_string(kostant_samples) +
                         " s=" + std::to_string(kostant_s);
            if (kostant_s <= 0) throw UsageError("--s must be positive");
            if (kostant_samples < 2) throw UsageError("--samples must be at least 2");
            const double pi = std::acos(-1.0);
            double max_abs = 0, at_zero = kostant_rank_one(kostant_s, 0.0),
                   at_half_pi = kostant_rank_one(kostant_s, pi / 2);
            for (std::size_t i = 0; i < kostant_samples; ++i) {
                double phi = 2 * pi * double(i) / double(kostant_samples);
                max_abs = std::max(max_abs, std::abs(kostant_rank_one(kostant_s, phi)));
            }
            bool within = max_abs <= kostant_s + 1e-10;
            json results{{"s", kostant_s},
                         {"max_abs_log_a", max_abs},
                         {"within_convex_hull", within},
                         {"value_at_phi_0", at_zero},
                         {"value_at_phi_half_pi", at_half_pi}};
            std::ostringstream os;
            os << "s = " << kostant_s << ", sweep of " << kostant_samples << " angles\n"
               << "max |log a'| = " << max_abs << (within ? " <= s (convexity holds)" : " > s!")
               << "\n"
               << "phi = 0:    log a' = " << at_zero << "\n"
               << "phi = pi/2: log a' = " << at_half_pi << "\n";
            return em.finish(results, os.str());
        }

        if (*c_kak) {
            em.command = "kak";
            em.inputs += "entries=" + kak_entries;
            json j = parse_json(kak_entries, "--entries");
            if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
                !j[1].is_array() || j[1].size() != 2)
                throw UsageError("--entries must be a 2x2 JSON array");
            Mat2 g{j[0][0].get<double>(), j[0][1].get<double>(), j[1][0].get<double>(),
                   j[1][1].get<double>()};
            if (std::abs(g.det() - 1.0) > 1e-9)
                throw DomainError("NonUnitDeterminant", "entries must have determinant 1");
            KakDecomposition kd = kak(g);
            IwasawaDecomposition iw = iwasawa(g);
            json results{{"kak",
                          {{"k1", mat2_json(kd.k1)}, {"a", mat2_json(kd.a)},
                           {"k2", mat2_json(kd.k2)}}},
                         {"iwasawa",
                          {{"u", mat2_json(iw.u)}, {"a", mat2_json(iw.a)},
                           {"k", mat2_json(iw.k)}}}};
            auto show = [](const char* name, const Mat2& m, std::ostringstream& os) {
                os << name << " = [[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d
                   << "]]\n";
            };
            std::ostringstream os;
            os << "KAK:\n";
            show("  k1", kd.k1, os);
            show("  a ", kd.a, os);
            show("  k2", kd.k2, os);
            os << "Iwasawa:\n";
            show("  u ", iw.u, os);
            show("  a ", iw.a, os);
            show("  k ", iw.k, os);
            return em.finish(results, os.str());
        }

        throw UsageError("no command given");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error [" << e.code << "]: " << e.what() << "\n";
        return kExitDomain;
    }
}
