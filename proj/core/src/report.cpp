#include "zdga/report.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"

namespace zdga {

namespace {

class StageClock {
public:
    explicit StageClock(bool enabled, std::map<std::string, double>& out)
        : enabled_(enabled), out_(out) {}

    template <typename F>
    auto time(const std::string& stage, F&& f) {
        if (!enabled_) return f();
        auto t0 = std::chrono::steady_clock::now();
        auto result = f();
        auto t1 = std::chrono::steady_clock::now();
        out_[stage] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return result;
    }

private:
    bool enabled_;
    std::map<std::string, double>& out_;
};

} // namespace

AnalysisReport analyze(std::string_view spec_text, const AnalysisOptions& options) {
    AnalysisReport report;
    StageClock clock(options.timing, report.timings_ms);

    RingSpec spec = clock.time("parse", [&] { return parse(spec_text); });
    FiniteRing ring =
        clock.time("elaborate", [&] { return elaborate(spec, {options.max_order}); });
    report.spec_text = ring.spec_text;
    report.ring_order = ring.order;
    report.zero_divisor_count = static_cast<int>(zero_divisors(ring).size());

    ZeroDivisorGraph g = clock.time("graph", [&] { return build_graph(ring); });
    report.vertex_count = g.vertex_count();
    if (g.vertex_count() == 0) {
        report.psi_g_status = PsiGStatus::UndefinedEmptyGraph;
        return report;
    }
    report.min_degree = min_degree(g);

    BoundBreakdown bounds;
    bounds.quadratic = 1;
    while (static_cast<long long>(bounds.quadratic + 1) * bounds.quadratic <= g.vertex_count())
        ++bounds.quadratic;
    bounds.min_degree = (*report.min_degree + 3) / 2;

    if (g.vertex_count() > options.max_exact_vertices) {
        report.psi_g_status = PsiGStatus::NotComputedCap;
        report.bounds = bounds;
        return report;
    }

    report.gamma = clock.time("gamma", [&] { return domination_number(g).value; });
    report.gamma_a = clock.time("gamma_a", [&] { return alliance_number(g).value; });
    bounds.gamma_a_product = g.vertex_count() / *report.gamma_a;
    report.bounds = bounds;

    PsiGResult result = clock.time("psi_g", [&] { return psi_g(g, report.gamma_a); });
    report.psi_g_status = PsiGStatus::Computed;
    report.psi_g = result.value;
    verify_certificate(g, result.certificate);
    report.certificate = std::move(result.certificate);

    if (options.oracle && g.vertex_count() <= 10) {
        int expected = clock.time("oracle", [&] { return psi_g_bruteforce(g); });
        if (expected != *report.psi_g)
            throw VerificationError("solver value " + std::to_string(*report.psi_g) +
                                    " disagrees with exhaustive enumeration " +
                                    std::to_string(expected) + " for " + report.spec_text);
    }
    return report;
}

namespace {

nlohmann::ordered_json certificate_json(const PartitionCertificate& cert) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["ring_spec"] = cert.ring_spec;
    j["graph_hash"] = cert.graph_hash;
    auto classes = nlohmann::ordered_json::array();
    for (const auto& cc : cert.classes) {
        nlohmann::ordered_json cj;
        cj["members"] = cc.members.to_vector();
        auto stats = nlohmann::ordered_json::array();
        for (const auto& st : cc.stats)
            stats.push_back({{"vertex", st.vertex}, {"deg_in", st.deg_in}, {"deg_out", st.deg_out}});
        cj["stats"] = std::move(stats);
        auto dom = nlohmann::ordered_json::array();
        for (const auto& dw : cc.domination)
            dom.push_back({{"vertex", dw.vertex}, {"neighbor", dw.neighbor}});
        cj["domination"] = std::move(dom);
        classes.push_back(std::move(cj));
    }
    j["classes"] = std::move(classes);
    return j;
}

template <typename T>
nlohmann::ordered_json opt_json(const std::optional<T>& v) {
    if (v) return *v;
    return nullptr;
}

} // namespace

std::string to_json(const PartitionCertificate& cert, int indent) {
    return certificate_json(cert).dump(indent) + "\n";
}

std::string to_json(const AnalysisReport& report, bool include_certificate, int indent) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["spec_text"] = report.spec_text;
    j["ring_order"] = report.ring_order;
    j["zero_divisor_count"] = report.zero_divisor_count;
    j["vertex_count"] = report.vertex_count;
    j["min_degree"] = opt_json(report.min_degree);
    j["gamma"] = opt_json(report.gamma);
    j["gamma_a"] = opt_json(report.gamma_a);
    switch (report.psi_g_status) {
    case PsiGStatus::Computed:
        j["psi_g"] = *report.psi_g;
        break;
    case PsiGStatus::UndefinedEmptyGraph:
        j["psi_g"] = "undefined (empty graph)";
        break;
    case PsiGStatus::NotComputedCap:
        j["psi_g"] = "not computed (cap)";
        break;
    }
    if (report.bounds) {
        j["bounds"] = {{"quadratic", report.bounds->quadratic},
                       {"gamma_a_product", opt_json(report.bounds->gamma_a_product)},
                       {"min_degree", report.bounds->min_degree}};
    } else {
        j["bounds"] = nullptr;
    }
    if (include_certificate && report.certificate)
        j["certificate"] = certificate_json(*report.certificate);
    else
        j["certificate"] = nullptr;
    if (!report.timings_ms.empty()) j["timings_ms"] = report.timings_ms;
    return j.dump(indent) + "\n";
}

std::string to_json(const TheoremReport& report, int indent) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["total"] = report.total;
    j["matched"] = report.matched;
    j["mismatched"] = report.mismatched;
    j["skipped"] = report.skipped;
    auto cases = nlohmann::ordered_json::array();
    for (const auto& c : report.cases) {
        nlohmann::ordered_json cj;
        cj["theorem_id"] = c.theorem_id;
        cj["spec_text"] = c.spec_text;
        cj["predicted_psi_g"] = c.predicted_psi_g;
        cj["predicted_gamma_a"] = opt_json(c.predicted_gamma_a);
        cj["predicted_zero_divisors"] = opt_json(c.predicted_zero_divisors);
        cj["skipped"] = c.skipped;
        cj["computed_psi_g"] = opt_json(c.computed_psi_g);
        cj["computed_gamma_a"] = opt_json(c.computed_gamma_a);
        cj["computed_zero_divisors"] = opt_json(c.computed_zero_divisors);
        cj["construction_verified"] = opt_json(c.construction_verified);
        cj["constructed_classes"] = c.constructed_classes;
        cj["match"] = c.skipped ? nlohmann::ordered_json(nullptr)
                                : nlohmann::ordered_json(c.match);
        cases.push_back(std::move(cj));
    }
    j["cases"] = std::move(cases);
    return j.dump(indent) + "\n";
}

std::string to_table(const AnalysisReport& report) {
    std::ostringstream out;
    out << "ring            " << report.spec_text << "\n";
    out << "order           " << report.ring_order << "\n";
    out << "|Z(R)|          " << report.zero_divisor_count << "\n";
    out << "vertices        " << report.vertex_count << "\n";
    auto opt_line = [&](const char* name, const std::optional<int>& v) {
        out << name << (v ? std::to_string(*v) : std::string("-")) << "\n";
    };
    opt_line("min degree      ", report.min_degree);
    opt_line("gamma           ", report.gamma);
    opt_line("gamma_a         ", report.gamma_a);
    switch (report.psi_g_status) {
    case PsiGStatus::Computed:
        out << "psi_g           " << *report.psi_g << "\n";
        break;
    case PsiGStatus::UndefinedEmptyGraph:
        out << "psi_g           undefined (empty graph)\n";
        break;
    case PsiGStatus::NotComputedCap:
        out << "psi_g           not computed (cap)\n";
        break;
    }
    if (report.bounds) {
        out << "bounds          quadratic=" << report.bounds->quadratic;
        if (report.bounds->gamma_a_product)
            out << " gamma_a_product=" << *report.bounds->gamma_a_product;
        out << " min_degree=" << report.bounds->min_degree << "\n";
    }
    if (report.certificate && report.certificate->class_count() >= 2) {
        out << "partition       ";
        for (int i = 0; i < report.certificate->class_count(); ++i) {
            if (i) out << " | ";
            bool first = true;
            report.certificate->classes[i].members.for_each([&](int v) {
                if (!first) out << ",";
                out << v;
                first = false;
            });
        }
        out << "\n";
    }
    for (const auto& [stage, ms] : report.timings_ms)
        out << "time " << stage << std::string(stage.size() < 11 ? 11 - stage.size() : 1, ' ')
            << ms << " ms\n";
    return out.str();
}

std::string to_table(const TheoremReport& report) {
    std::ostringstream out;
    std::size_t idw = 10, specw = 9;
    for (const auto& c : report.cases) {
        idw = std::max(idw, c.theorem_id.size());
        specw = std::max(specw, c.spec_text.size());
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w > s.size() ? w - s.size() : 1, ' ');
    };
    out << pad("theorem", idw + 2) << pad("ring", specw + 2) << "predicted  computed   result\n";
    auto show = [](const std::optional<int>& v) {
        return v ? std::to_string(*v) : std::string("-");
    };
    for (const auto& c : report.cases) {
        std::string predicted = std::to_string(c.predicted_psi_g);
        if (c.predicted_gamma_a) predicted += "/g" + show(c.predicted_gamma_a);
        std::string computed = c.skipped ? "-" : show(c.computed_psi_g);
        if (!c.skipped && c.computed_gamma_a) computed += "/g" + show(c.computed_gamma_a);
        std::string result = c.skipped ? "skipped" : (c.match ? "match" : "MISMATCH");
        if (!c.skipped && c.construction_verified)
            result += *c.construction_verified ? "+cert" : "+CERTFAIL";
        out << pad(c.theorem_id, idw + 2) << pad(c.spec_text, specw + 2) << pad(predicted, 11)
            << pad(computed, 11) << result << "\n";
    }
    out << report.matched << "/" << (report.total - report.skipped) << " cases match, "
        << report.skipped << " skipped\n";
    return out.str();
}

} // namespace zdga
