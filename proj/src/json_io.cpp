#include "spoq/json_io.hpp"

namespace spoq {

Json rational_json(const Rational& r) { return r.str(); }

namespace {

Json poly_json(const Poly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.str());
    return a;
}

const char* status_name(QuantizeStatus s) {
    switch (s) {
        case QuantizeStatus::Unique: return "unique";
        case QuantizeStatus::NoSolution: return "no_solution";
        case QuantizeStatus::Ambiguous: return "ambiguous";
    }
    return "?";
}

const char* parity_name(const std::optional<Parity>& p) {
    if (!p) return "mixed";
    return *p == Parity::Even ? "even" : "odd";
}

}  // namespace

Json superfn_json(const SuperFn& f) {
    return Json{{"f0", poly_json(f.f0)},
                {"f1", poly_json(f.f1)},
                {"f2", poly_json(f.f2)},
                {"f12", poly_json(f.f12)}};
}

Json operator_json(const DiffOp& D) {
    Json terms = Json::array();
    for (const auto& [k, c] : D.terms())
        terms.push_back(Json{{"l", k.l}, {"m", k.m}, {"n", k.n}, {"coeff", superfn_json(c)}});
    return Json{{"lambda", D.lambda().str()}, {"mu", D.mu().str()}, {"terms", terms}};
}

Json symbol_json(const Symbol& S) {
    return Json{{"degree", S.degree().str()},
                {"delta", S.delta().str()},
                {"parity", parity_name(S.parity())},
                {"F1", superfn_json(S.F1())},
                {"F2", superfn_json(S.F2())}};
}

Json graded_json(const GradedSymbol& S) {
    Json parts = Json::array();
    for (auto it = S.parts().rbegin(); it != S.parts().rend(); ++it) parts.push_back(symbol_json(it->second));
    return Json{{"delta", S.delta().str()}, {"parts", parts}};
}

Json vectorfield_json(const VectorField& X) {
    return Json{{"a", superfn_json(X.a)}, {"b1", superfn_json(X.b1)}, {"b2", superfn_json(X.b2)}};
}

namespace {

Json diagnostics_json(const std::vector<PivotDiagnostic>& ds) {
    Json a = Json::array();
    for (const auto& d : ds)
        a.push_back(Json{{"degree", d.degree.str()},
                         {"pivot", d.pivot.str()},
                         {"residual_zero", d.residual_zero}});
    return a;
}

}  // namespace

Json result_json(const QuantizationResult& r) {
    Json j{{"status", status_name(r.status)}};
    if (r.op) j["operator"] = operator_json(*r.op);
    if (r.graded) j["graded"] = graded_json(*r.graded);
    j["diagnostics"] = diagnostics_json(r.diagnostics);
    return j;
}

Json report_json(const EquivarianceReport& r) {
    Json per = Json::object();
    for (size_t i = 0; i < kGenerators.size(); ++i)
        per[generator_name(kGenerators[i])] = r.failures_per_generator[i];
    Json j{{"lambda", r.lambda.str()},
           {"delta", r.delta.str()},
           {"degree", r.degree.str()},
           {"trials", r.trials},
           {"usable", r.usable},
           {"generators_passed", r.generators_passed()},
           {"failures", per}};
    if (!r.usable) j["reason"] = r.unusable_reason;
    if (!r.counterexamples.empty()) j["counterexamples"] = r.counterexamples;
    return j;
}

Json critical_json(const std::set<Rational>& values) {
    Json a = Json::array();
    for (const auto& v : values) a.push_back(v.str());
    return a;
}

std::string result_text(const QuantizationResult& r) {
    std::string out = std::string("status: ") + status_name(r.status) + "\n";
    if (r.op) out += "operator: " + format(*r.op) + "\n";
    if (r.graded) out += "graded symbol: " + format(*r.graded) + "\n";
    if (!r.diagnostics.empty()) {
        out += "pivots:";
        for (const auto& d : r.diagnostics)
            out += " [deg " + d.degree.str() + ": " + d.pivot.str() +
                   (d.residual_zero ? ", residual 0" : ", residual != 0") + "]";
        out += "\n";
    }
    return out;
}

std::string report_text(const EquivarianceReport& r) {
    if (!r.usable) return "UNUSABLE: " + r.unusable_reason + "\n";
    std::string out = r.all_passed() ? "PASS " : "FAIL ";
    out += std::to_string(r.generators_passed()) + "/8 generators (" + std::to_string(r.trials) +
           " trials, k=" + r.degree.str() + ", lambda=" + r.lambda.str() + ", delta=" + r.delta.str() +
           ")\n";
    for (size_t i = 0; i < kGenerators.size(); ++i)
        if (r.failures_per_generator[i])
            out += std::string("  generator ") + generator_name(kGenerators[i]) + ": " +
                   std::to_string(r.failures_per_generator[i]) + " failures\n";
    for (const auto& c : r.counterexamples) out += "  counterexample: " + c + "\n";
    return out;
}

}  // namespace spoq
