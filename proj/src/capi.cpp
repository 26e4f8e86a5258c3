#include "spoq/spoq.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "spoq/json_io.hpp"

using namespace spoq;

struct spoq_superfn {
    SuperFn value;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(char** error, const std::string& msg) {
    if (error) *error = dup_string(msg);
}

/* Uniform exception boundary: parse errors, domain errors, obstructions. */
template <typename Fn>
spoq_status guarded(char** error, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        set_error(error, e.what());
        return SPOQ_ERROR_PARSE;
    } catch (const std::invalid_argument& e) {
        set_error(error, e.what());
        return SPOQ_ERROR_DOMAIN;
    } catch (const std::domain_error& e) {
        set_error(error, e.what());
        return SPOQ_ERROR_DOMAIN;
    } catch (const std::exception& e) {
        set_error(error, e.what());
        return SPOQ_ERROR_INTERNAL;
    }
}

Rational parse_rational_arg(const char* text, const char* name) {
    if (!text) throw std::invalid_argument(std::string("missing argument: ") + name);
    auto r = Rational::parse(text);
    if (!r) throw ParseError(std::string("invalid rational for ") + name + ": '" + text + "'", 0);
    return *r;
}

SuperFn parse_superfn_arg(const char* text, const char* name) {
    if (!text) throw std::invalid_argument(std::string("missing argument: ") + name);
    return parse_superfn(text).value;
}

bool json_format(const char* format) {
    if (!format || std::strcmp(format, "json") == 0) return true;
    if (std::strcmp(format, "text") == 0) return false;
    throw std::invalid_argument("format must be 'text' or 'json'");
}

QuantizeMethod parse_method(const char* method) {
    if (!method || std::strcmp(method, "iterative") == 0) return QuantizeMethod::Iterative;
    if (std::strcmp(method, "closed-form") == 0) return QuantizeMethod::ClosedForm;
    throw std::invalid_argument("method must be 'iterative' or 'closed-form'");
}

/* Linear extension of a symbol map over the parity split of (f1, f2). */
template <typename Fn>
GradedSymbol over_parts(HalfInt k, const Rational& delta, const SuperFn& F1, const SuperFn& F2,
                        Fn&& fn) {
    GradedSymbol out(delta);
    for (const Symbol& s : homogeneous_parts(k, delta, F1, F2)) out = out + fn(s);
    return out;
}

}  // namespace

extern "C" {

const char* spoq_version(void) { return "1.0.0"; }

void spoq_free_string(char* s) { std::free(s); }

spoq_status spoq_superfn_parse(const char* text, spoq_superfn** out, char** error) {
    return guarded(error, [&] {
        if (!text || !out) throw std::invalid_argument("null argument");
        auto res = parse_superfn(text);
        *out = new spoq_superfn{std::move(res.value)};
        return SPOQ_OK;
    });
}

void spoq_superfn_free(spoq_superfn* f) { delete f; }

char* spoq_superfn_print(const spoq_superfn* f) { return dup_string(format(f->value)); }

char* spoq_superfn_json(const spoq_superfn* f) { return dup_string(superfn_json(f->value).dump()); }

spoq_status spoq_superfn_mul(const spoq_superfn* a, const spoq_superfn* b, spoq_superfn** out,
                             char** error) {
    return guarded(error, [&] {
        if (!a || !b || !out) throw std::invalid_argument("null argument");
        *out = new spoq_superfn{a->value * b->value};
        return SPOQ_OK;
    });
}

spoq_status spoq_superfn_derive(const spoq_superfn* f, const char* direction, spoq_superfn** out,
                                char** error) {
    return guarded(error, [&] {
        if (!f || !direction || !out) throw std::invalid_argument("null argument");
        SuperFn r;
        if (std::strcmp(direction, "x") == 0)
            r = derive_x(f->value);
        else if (std::strcmp(direction, "t1") == 0)
            r = derive_theta(1, f->value);
        else if (std::strcmp(direction, "t2") == 0)
            r = derive_theta(2, f->value);
        else
            throw std::invalid_argument("direction must be x, t1 or t2");
        *out = new spoq_superfn{std::move(r)};
        return SPOQ_OK;
    });
}

spoq_status spoq_superfn_dbar(int i, const spoq_superfn* f, spoq_superfn** out, char** error) {
    return guarded(error, [&] {
        if (!f || !out) throw std::invalid_argument("null argument");
        *out = new spoq_superfn{dbar(i, f->value)};
        return SPOQ_OK;
    });
}

spoq_status spoq_resolve_weights(const char* lambda, const char* mu, const char* delta,
                                 char** lambda_out, char** delta_out, char** error) {
    return guarded(error, [&] {
        int given = (lambda != nullptr) + (mu != nullptr) + (delta != nullptr);
        if (given < 2) throw std::invalid_argument("need two of lambda, mu, delta");
        std::optional<Rational> l, m, d;
        if (lambda) l = parse_rational_arg(lambda, "lambda");
        if (mu) m = parse_rational_arg(mu, "mu");
        if (delta) d = parse_rational_arg(delta, "delta");
        if (!l) l = *m - *d;
        if (!d) d = *m - *l;
        if (m && *m != *l + *d)
            throw std::invalid_argument("inconsistent weights: mu != lambda + delta");
        if (lambda_out) *lambda_out = dup_string(l->str());
        if (delta_out) *delta_out = dup_string(d->str());
        return SPOQ_OK;
    });
}

spoq_status spoq_cmd_quantize(const char* k, const char* lambda, const char* delta, const char* f1,
                              const char* f2, const char* method, const char* fmt, char** output,
                              char** error) {
    return guarded(error, [&] {
        HalfInt deg = parse_halfint(k ? k : throw std::invalid_argument("missing argument: k"));
        Rational lam = parse_rational_arg(lambda, "lambda");
        Rational del = parse_rational_arg(delta, "delta");
        SuperFn F1 = parse_superfn_arg(f1, "f1");
        SuperFn F2 = f2 ? parse_superfn_arg(f2, "f2") : SuperFn::zero();
        QuantizeMethod m = parse_method(method);
        bool as_json = json_format(fmt);

        QuantizationResult merged;
        merged.graded = GradedSymbol(del);
        merged.op = DiffOp::zero(lam, lam + del);
        try {
            for (const Symbol& s : homogeneous_parts(deg, del, F1, F2)) {
                QuantizationResult r = quantize(s, lam, m);
                for (const auto& dgn : r.diagnostics) merged.diagnostics.push_back(dgn);
                if (r.status == QuantizeStatus::NoSolution) {
                    merged.status = QuantizeStatus::NoSolution;
                    merged.graded.reset();
                    merged.op.reset();
                    break;
                }
                if (r.status == QuantizeStatus::Ambiguous && merged.status == QuantizeStatus::Unique)
                    merged.status = QuantizeStatus::Ambiguous;
                merged.graded = *merged.graded + *r.graded;
                merged.op = *merged.op + *r.op;
            }
        } catch (const ZeroDenominatorError& e) {
            if (output) *output = dup_string(as_json ? Json{{"status", "zero_denominator"},
                                                            {"coefficient", e.coefficient()},
                                                            {"degree", e.degree().str()}}
                                                           .dump(2)
                                                     : std::string("status: zero_denominator (") +
                                                           e.what() + ")\n");
            set_error(error, e.what());
            return SPOQ_ERROR_OBSTRUCTION;
        }

        if (output)
            *output = dup_string(as_json ? result_json(merged).dump(2) : result_text(merged));
        return merged.status == QuantizeStatus::NoSolution ? SPOQ_ERROR_OBSTRUCTION : SPOQ_OK;
    });
}

spoq_status spoq_cmd_gamma(const char* f, const char* k, const char* lambda, const char* delta,
                           const char* f1, const char* f2, const char* method, const char* fmt,
                           char** output, char** error) {
    return guarded(error, [&] {
        SuperFn ham = parse_superfn_arg(f, "f");
        HalfInt deg = parse_halfint(k ? k : throw std::invalid_argument("missing argument: k"));
        Rational lam = parse_rational_arg(lambda, "lambda");
        Rational del = parse_rational_arg(delta, "delta");
        SuperFn F1 = parse_superfn_arg(f1, "f1");
        SuperFn F2 = f2 ? parse_superfn_arg(f2, "f2") : SuperFn::zero();
        bool closed = method && std::strcmp(method, "closed-form") == 0;
        if (method && !closed && std::strcmp(method, "direct") != 0)
            throw std::invalid_argument("method must be 'direct' or 'closed-form'");

        GradedSymbol g = over_parts(deg, del, F1, F2, [&](const Symbol& s) {
            return closed ? gamma_closed_form(ham, s, lam) : gamma(ham, s, lam);
        });
        if (output)
            *output = dup_string(json_format(fmt) ? graded_json(g).dump(2) : format(g) + "\n");
        return SPOQ_OK;
    });
}

spoq_status spoq_cmd_casimir(const char* rep, const char* k, const char* lambda, const char* delta,
                             const char* f1, const char* f2, const char* fmt, char** output,
                             char** error) {
    return guarded(error, [&] {
        CasimirRep r;
        if (!rep || std::strcmp(rep, "L") == 0)
            r = CasimirRep::L;
        else if (std::strcmp(rep, "calL") == 0)
            r = CasimirRep::CalL;
        else
            throw std::invalid_argument("rep must be 'L' or 'calL'");
        HalfInt deg = parse_halfint(k ? k : throw std::invalid_argument("missing argument: k"));
        Rational lam = parse_rational_arg(lambda, "lambda");
        Rational del = parse_rational_arg(delta, "delta");
        SuperFn F1 = parse_superfn_arg(f1, "f1");
        SuperFn F2 = f2 ? parse_superfn_arg(f2, "f2") : SuperFn::zero();
        GradedSymbol g =
            over_parts(deg, del, F1, F2, [&](const Symbol& s) { return casimir(s, lam, r); });
        if (output)
            *output = dup_string(json_format(fmt) ? graded_json(g).dump(2) : format(g) + "\n");
        return SPOQ_OK;
    });
}

spoq_status spoq_cmd_critical(const char* max_k, const char* fmt, char** output, char** error) {
    return guarded(error, [&] {
        HalfInt mk = parse_halfint(max_k ? max_k : throw std::invalid_argument("missing argument: max-k"));
        auto values = critical_values(mk);
        if (output) {
            if (json_format(fmt)) {
                *output = dup_string(critical_json(values).dump(2));
            } else {
                std::string s;
                for (const auto& v : values) s += (s.empty() ? "" : " ") + v.str();
                *output = dup_string(s + "\n");
            }
        }
        return SPOQ_OK;
    });
}

spoq_status spoq_cmd_lie(const char* target, const char* f, const char* k, const char* lambda,
                         const char* delta, const char* f1, const char* f2, const char* fmt,
                         char** output, char** error) {
    return guarded(error, [&] {
        if (!target) throw std::invalid_argument("missing argument: target");
        SuperFn ham = parse_superfn_arg(f, "f");
        Rational lam = parse_rational_arg(lambda, "lambda");
        SuperFn F1 = parse_superfn_arg(f1, "f1");
        bool as_json = json_format(fmt);

        if (std::strcmp(target, "density") == 0) {
            SuperFn r = lie_density(ham, lam, F1);
            if (output) *output = dup_string(as_json ? superfn_json(r).dump(2) : format(r) + "\n");
            return SPOQ_OK;
        }

        HalfInt deg = parse_halfint(k ? k : throw std::invalid_argument("missing argument: k"));
        Rational del = parse_rational_arg(delta, "delta");
        SuperFn F2 = f2 ? parse_superfn_arg(f2, "f2") : SuperFn::zero();

        if (std::strcmp(target, "symbol") == 0) {
            GradedSymbol g = over_parts(deg, del, F1, F2, [&](const Symbol& s) {
                GradedSymbol one(del);
                one.add(lie_symbol(ham, s));
                return one;
            });
            if (output) *output = dup_string(as_json ? graded_json(g).dump(2) : format(g) + "\n");
            return SPOQ_OK;
        }
        if (std::strcmp(target, "operator") == 0) {
            DiffOp D(lam, lam + del);
            for (const Symbol& s : homogeneous_parts(deg, del, F1, F2)) D = D + q_aff(s, lam);
            DiffOp r = lie_op(ham, D);
            if (output) *output = dup_string(as_json ? operator_json(r).dump(2) : format(r) + "\n");
            return SPOQ_OK;
        }
        throw std::invalid_argument("target must be density, operator or symbol");
    });
}

spoq_status spoq_cmd_embed(const char* matrix, const char* fmt, char** output, char** error) {
    return guarded(error, [&] {
        if (!matrix) throw std::invalid_argument("missing argument: matrix");
        SpoMatrix m = parse_matrix(matrix);
        VectorField v = projective_embed(m);
        if (output)
            *output = dup_string(json_format(fmt) ? vectorfield_json(v).dump(2) : format(v) + "\n");
        return SPOQ_OK;
    });
}

spoq_status spoq_cmd_check(const char* k, const char* lambda, const char* delta, int trials,
                           unsigned long long seed, int max_degree, const char* method,
                           const char* fmt, char** output, char** error) {
    return guarded(error, [&] {
        HalfInt deg = parse_halfint(k ? k : throw std::invalid_argument("missing argument: k"));
        Rational lam = parse_rational_arg(lambda, "lambda");
        Rational del = parse_rational_arg(delta, "delta");
        if (trials <= 0) throw std::invalid_argument("trials must be positive");
        EquivarianceReport rep = verify_equivariance(lam, del, deg, trials, seed, parse_method(method),
                                                     max_degree > 0 ? max_degree : 6);
        if (output)
            *output = dup_string(json_format(fmt) ? report_json(rep).dump(2) : report_text(rep));
        return rep.all_passed() ? SPOQ_OK : SPOQ_ERROR_OBSTRUCTION;
    });
}

}  // extern "C"
