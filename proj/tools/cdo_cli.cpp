#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cdo/character.hpp"
#include "cdo/json_io.hpp"
#include "cdo/suite.hpp"

namespace {

using namespace cdo;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;        // bad preconditions / malformed input
constexpr int kExitNotInvariant = 2;  // verification produced a nonzero residual
constexpr int kExitInternal = 3;      // truncation/shape assertion failure

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw domain_error("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

struct Options {
    std::string lambda, mu, table_path, input_path, gamma = "full";
    int max_order = 10;
    int max_weight = 24;
    int weight = 0;
    int cap_delta = 0;
    int suite_weight = 5;
    bool json = false;
    bool constant = false;
    bool section6 = false;
    bool run_check = false;
    bool serial = false;
};

PartitionPair parse_pair(const Options& o) {
    return {Partition::parse(o.lambda), Partition::parse(o.mu)};
}

std::unique_ptr<DimensionTable> load_table(const Options& o) {
    if (o.table_path.empty()) {
        require(o.gamma == "full", "unknown group '" + o.gamma + "'; use --gamma full or --table");
        return nullptr;
    }
    return std::make_unique<DimensionTable>(table_from_json(load_json(o.table_path)));
}

int cmd_adjoint(const Options& o) {
    PartitionPair p = parse_pair(o);
    const AdjointExpansion& exp = adjoint_monomial(p, p.weight() + o.cap_delta);
    if (o.json) {
        Json j{{"source", {{"lambda", p.lambda.str()}, {"mu", p.mu.str()}}},
               {"cap", exp.cap},
               {"element", element_to_json(exp.element)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "pi(g) a[-λ]b[-μ] pi(g)^-1 for (" << p.lambda.str() << " | " << p.mu.str()
                  << "), cap " << exp.cap << ":\n  " << element_str(exp.element) << "\n";
    }
    return kExitOk;
}

int cmd_lift(const Options& o) {
    require(!(o.constant && o.section6), "--constant and --section6 are mutually exclusive");
    PartitionPair p = parse_pair(o);

    LiftingOperator op;
    InvariantVector vec;
    if (o.section6) {
        require(p.lambda.is_empty(), "--section6 requires λ = ∅");
        int weight2l = o.weight > 0 ? o.weight : 2 * p.mu.count();
        vec = section6_lifting(p.mu, weight2l);
        op = {p, BElement{}, LiftKind::Section6};
        for (const auto& t : vec.terms) {
            Word w;
            w.an = t.pair.lambda;
            w.bn = t.pair.mu;
            w.a0 = t.sym ? t.sym->depth : 0;
            op.element.add(std::move(w), t.coeff);
        }
    } else if (o.constant) {
        op = constant_lifting_operator(p, o.cap_delta);
        vec = lifting_vector(op);
    } else {
        op = solve_lifting(p, o.cap_delta).op;
        vec = lifting_vector(op);
    }

    if (o.json) {
        Json j{{"operator", operator_to_json(op)}, {"vector", vector_to_json(vec)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "A = " << element_str(op.element) << "\n";
        std::cout << "lift = " << vector_str(vec) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const Options& o) {
    require(!o.input_path.empty(), "verify needs --input file.json");
    Json j = load_json(o.input_path);
    InvariantVector v = vector_from_json(j.contains("vector") ? j.at("vector") : j);
    VerifyResult r = verify_invariance(v, o.cap_delta);
    if (o.json) {
        Json out{{"invariant", r.invariant}, {"residual", symbolic_sum_to_json(r.residual)}};
        std::cout << out.dump(2) << "\n";
    } else if (r.invariant) {
        std::cout << "invariant: the symbolic residual pi(g)v - v vanishes identically\n";
    } else {
        std::cout << "NOT verified (sufficient condition inconclusive); residual:\n  "
                  << r.residual.str() << "\n";
    }
    return r.invariant ? kExitOk : kExitNotInvariant;
}

int cmd_dims(const Options& o) {
    auto table = load_table(o);
    DimensionTable out;
    if (table) {
        out = *table;
    } else {
        out = full_level_table(o.max_weight);
    }
    if (o.json) {
        std::cout << table_to_json(out).dump(2) << "\n";
    } else {
        std::cout << "# dim M_k(" << out.group << ")\n";
        for (const auto& [k, d] : out.dims) std::cout << k << " " << d << "\n";
    }
    return kExitOk;
}

int cmd_character(const Options& o) {
    auto table = load_table(o);
    QSeries direct = o.serial ? character_direct_serial(o.max_order, table.get())
                              : character_direct(o.max_order, table.get());
    if (o.run_check) {
        QSeries prod = character_product(o.max_order, table.get());
        if (!(prod == direct)) {
            std::cerr << "character mismatch:\n  product: " << prod.str()
                      << "\n  direct:  " << direct.str() << "\n";
            return kExitInternal;
        }
    }
    if (o.json) {
        Json j{{"group", table ? table->group : "Gamma(1)"},
               {"series", qseries_to_json(direct)},
               {"checked", o.run_check}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (int n = 0; n <= direct.order(); ++n)
            std::cout << "q^" << n << "  " << rational_str(direct[n]) << "\n";
        if (o.run_check) std::cout << "# product formula agrees to q^" << o.max_order << "\n";
    }
    return kExitOk;
}

int cmd_selftest(const Options& o) {
    bool ok = run_suite(o.suite_weight, !o.serial, std::cout);
    return ok ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus of chiral differential operators on the upper half plane"};
    app.require_subcommand(1);
    Options o;

    auto add_pair_flags = [&o](CLI::App* c) {
        c->add_option("--lambda", o.lambda, "a-side partition, e.g. \"2,1\" (empty for ∅)");
        c->add_option("--mu", o.mu, "b-side partition");
    };

    CLI::App* adjoint = app.add_subcommand("adjoint", "adjoint action on a_{-λ}b_{-μ}");
    add_pair_flags(adjoint);
    adjoint->add_option("--cap", o.cap_delta, "extra truncation headroom (audit)");
    adjoint->add_flag("--json", o.json);

    CLI::App* lift = app.add_subcommand("lift", "Γ-invariant lifting operators");
    add_pair_flags(lift);
    lift->add_flag("--constant", o.constant, "E2-corrected lifting (l = 0)");
    lift->add_flag("--section6", o.section6, "closed-form lifting (λ = ∅, p(μ) = k)");
    lift->add_option("--weight", o.weight, "modular-form weight 2k for --section6");
    lift->add_option("--cap", o.cap_delta, "extra truncation headroom (audit)");
    lift->add_flag("--json", o.json);

    CLI::App* verify = app.add_subcommand("verify", "replay symbolic invariance verification");
    verify->add_option("--input", o.input_path, "vector JSON (or a lift --json output)")->required();
    verify->add_option("--cap", o.cap_delta, "extra truncation headroom (audit)");
    verify->add_flag("--json", o.json);

    CLI::App* dims = app.add_subcommand("dims", "dimension tables dim M_k(Γ)");
    dims->add_option("--gamma", o.gamma, "group selector (builtin: full)");
    dims->add_option("--max", o.max_weight, "largest weight");
    dims->add_option("--table", o.table_path, "JSON dimension table");
    dims->add_flag("--json", o.json);

    CLI::App* character = app.add_subcommand("character", "character of D^ch(H,Γ)");
    character->add_option("--gamma", o.gamma, "group selector (builtin: full)");
    character->add_option("--max-order", o.max_order, "truncation order N");
    character->add_option("--table", o.table_path, "JSON dimension table");
    character->add_flag("--check", o.run_check, "also run the product/direct cross-check");
    character->add_flag("--serial", o.serial, "use the serial reference kernel");
    character->add_flag("--json", o.json);

    CLI::App* selftest = app.add_subcommand("selftest", "run the invariant suite");
    selftest->add_option("--max-weight", o.suite_weight, "weight bound (default 5)");
    selftest->add_flag("--serial", o.serial, "disable the OpenMP sweeps");

    CLI11_PARSE(app, argc, argv);

    try {
        if (adjoint->parsed()) return cmd_adjoint(o);
        if (lift->parsed()) return cmd_lift(o);
        if (verify->parsed()) return cmd_verify(o);
        if (dims->parsed()) return cmd_dims(o);
        if (character->parsed()) return cmd_character(o);
        if (selftest->parsed()) return cmd_selftest(o);
    } catch (const internal_error& e) {
        std::cerr << "internal assertion: " << e.what() << "\n";
        return kExitInternal;
    } catch (const missing_dimension_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
