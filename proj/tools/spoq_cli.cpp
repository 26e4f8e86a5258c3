// Command-line front end; talks to the shared library through its C API only.

#include <CLI11.hpp>

#include <cstdio>
#include <string>

#include "spoq/spoq.h"

namespace {

int status_to_exit(spoq_status s) {
    switch (s) {
        case SPOQ_OK: return 0;
        case SPOQ_ERROR_OBSTRUCTION: return 2;  // mathematical failure, diagnostics serialized
        default: return 1;
    }
}

struct Call {
    char* output = nullptr;
    char* error = nullptr;
    ~Call() {
        spoq_free_string(output);
        spoq_free_string(error);
    }
    int finish(spoq_status s) {
        if (output) std::fputs(output, stdout);
        if (s != SPOQ_OK && error) std::fprintf(stderr, "error: %s\n", error);
        return status_to_exit(s);
    }
};

const char* opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

struct Weights {
    std::string lambda, delta;
    bool ok = false;
};

Weights resolve(const std::string& lambda, const std::string& mu, const std::string& delta,
                bool need_delta) {
    Weights w;
    int given = !lambda.empty() + !mu.empty() + !delta.empty();
    if (given >= 2) {
        char* lam = nullptr;
        char* del = nullptr;
        char* err = nullptr;
        spoq_status s = spoq_resolve_weights(opt(lambda), opt(mu), opt(delta), &lam, &del, &err);
        if (s != SPOQ_OK) {
            if (err) std::fprintf(stderr, "error: %s\n", err);
            spoq_free_string(err);
            return w;
        }
        w.lambda = lam;
        w.delta = del;
        w.ok = true;
        spoq_free_string(lam);
        spoq_free_string(del);
        return w;
    }
    if (!need_delta && !lambda.empty()) {
        w.lambda = lambda;
        w.ok = true;
        return w;
    }
    std::fprintf(stderr, "error: give two of --lambda, --mu, --delta\n");
    return w;
}

const char* basis_matrix_text(int i) {
    static const char* kBasis[8] = {
        "1,0,0,0; 0,-1,0,0; 0,0,0,0; 0,0,0,0",  "0,1,0,0; 0,0,0,0; 0,0,0,0; 0,0,0,0",
        "0,0,0,0; 1,0,0,0; 0,0,0,0; 0,0,0,0",   "0,0,0,0; 0,0,0,0; 0,0,0,1; 0,0,-1,0",
        "0,0,1,0; 0,0,0,0; 0,1,0,0; 0,0,0,0",   "0,0,0,1; 0,0,0,0; 0,0,0,0; 0,1,0,0",
        "0,0,0,0; 0,0,1,0; -1,0,0,0; 0,0,0,0",  "0,0,0,0; 0,0,0,1; 0,0,0,0; -1,0,0,0"};
    return (i >= 0 && i < 8) ? kBasis[i] : nullptr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant quantization machinery on the supercircle S^{1|2}"};
    app.require_subcommand(1);

    std::string k, lambda, mu, delta, f1, f2, ham, fmt = "text", method, rep = "L", target, matrix,
                                              max_k;
    int basis = -1, trials = 20, max_degree = 6;
    unsigned long long seed = 1;

    auto add_weights = [&](CLI::App* c) {
        c->add_option("--lambda", lambda, "input density weight");
        c->add_option("--mu", mu, "output density weight");
        c->add_option("--delta", delta, "weight shift mu - lambda");
    };
    auto add_symbol = [&](CLI::App* c) {
        c->add_option("--k", k, "symbol degree (integer or half-integer, e.g. 3/2)")->required();
        c->add_option("--f1", f1, "first symbol component")->required();
        c->add_option("--f2", f2, "second symbol component (default 0)");
    };

    CLI::App* quantize = app.add_subcommand("quantize", "equivariant quantization of a symbol");
    add_weights(quantize);
    add_symbol(quantize);
    quantize->add_option("--method", method, "iterative | closed-form")->default_str("iterative");
    quantize->add_option("--format", fmt, "text | json");

    CLI::App* gamma = app.add_subcommand("gamma", "defect of the affine quantization on a symbol");
    add_weights(gamma);
    add_symbol(gamma);
    gamma->add_option("--f", ham, "quadratic contact Hamiltonian (x^2, x*t1, x*t2)")->required();
    gamma->add_option("--method", method, "direct | closed-form")->default_str("direct");
    gamma->add_option("--format", fmt, "text | json");

    CLI::App* casimir = app.add_subcommand("casimir", "Casimir action on a symbol");
    add_weights(casimir);
    add_symbol(casimir);
    casimir->add_option("--rep", rep, "L | calL");
    casimir->add_option("--format", fmt, "text | json");

    CLI::App* critical = app.add_subcommand("critical", "critical weight shifts up to --max-k");
    critical->add_option("--max-k", max_k, "largest degree considered")->required();
    critical->add_option("--format", fmt, "text | json");

    CLI::App* lie = app.add_subcommand("lie", "Lie derivative along a contact field");
    add_weights(lie);
    lie->add_option("--target", target, "density | operator | symbol")->required();
    lie->add_option("--f", ham, "contact Hamiltonian")->required();
    lie->add_option("--k", k, "symbol degree (for operator/symbol targets)");
    lie->add_option("--f1", f1, "density (target density) or first symbol component")->required();
    lie->add_option("--f2", f2, "second symbol component");
    lie->add_option("--format", fmt, "text | json");

    CLI::App* embed = app.add_subcommand("embed", "embed a 4x4 matrix as a vector field");
    embed->add_option("--matrix", matrix, "rows 'a,b,c,d; e,f,g,h; ...'");
    embed->add_option("--basis", basis, "standard basis matrix index 0..7");
    embed->add_option("--format", fmt, "text | json");

    CLI::App* check = app.add_subcommand("check", "randomized exact equivariance check");
    add_weights(check);
    check->add_option("--k", k, "symbol degree")->required();
    check->add_option("--trials", trials, "random symbols per generator");
    check->add_option("--seed", seed, "RNG seed");
    check->add_option("--max-degree", max_degree, "polynomial degree bound for random inputs");
    check->add_option("--method", method, "iterative | closed-form")->default_str("iterative");
    check->add_option("--format", fmt, "text | json");

    CLI11_PARSE(app, argc, argv);

    Call call;
    if (quantize->parsed()) {
        Weights w = resolve(lambda, mu, delta, true);
        if (!w.ok) return 1;
        if (method.empty()) method = "iterative";
        return call.finish(spoq_cmd_quantize(k.c_str(), w.lambda.c_str(), w.delta.c_str(),
                                             f1.c_str(), opt(f2), method.c_str(), fmt.c_str(),
                                             &call.output, &call.error));
    }
    if (gamma->parsed()) {
        Weights w = resolve(lambda, mu, delta, true);
        if (!w.ok) return 1;
        if (method.empty()) method = "direct";
        return call.finish(spoq_cmd_gamma(ham.c_str(), k.c_str(), w.lambda.c_str(),
                                          w.delta.c_str(), f1.c_str(), opt(f2), method.c_str(),
                                          fmt.c_str(), &call.output, &call.error));
    }
    if (casimir->parsed()) {
        Weights w = resolve(lambda, mu, delta, true);
        if (!w.ok) return 1;
        return call.finish(spoq_cmd_casimir(rep.c_str(), k.c_str(), w.lambda.c_str(),
                                            w.delta.c_str(), f1.c_str(), opt(f2), fmt.c_str(),
                                            &call.output, &call.error));
    }
    if (critical->parsed()) {
        return call.finish(spoq_cmd_critical(max_k.c_str(), fmt.c_str(), &call.output, &call.error));
    }
    if (lie->parsed()) {
        bool density = target == "density";
        Weights w = resolve(lambda, mu, delta, !density);
        if (!w.ok) return 1;
        return call.finish(spoq_cmd_lie(target.c_str(), ham.c_str(), opt(k), w.lambda.c_str(),
                                        opt(w.delta), f1.c_str(), opt(f2), fmt.c_str(),
                                        &call.output, &call.error));
    }
    if (embed->parsed()) {
        const char* m = matrix.empty() ? basis_matrix_text(basis) : matrix.c_str();
        if (!m) {
            std::fprintf(stderr, "error: give --matrix or --basis 0..7\n");
            return 1;
        }
        return call.finish(spoq_cmd_embed(m, fmt.c_str(), &call.output, &call.error));
    }
    if (check->parsed()) {
        Weights w = resolve(lambda, mu, delta, true);
        if (!w.ok) return 1;
        if (method.empty()) method = "iterative";
        return call.finish(spoq_cmd_check(k.c_str(), w.lambda.c_str(), w.delta.c_str(), trials,
                                          seed, max_degree, method.c_str(), fmt.c_str(),
                                          &call.output, &call.error));
    }
    return 1;
}
