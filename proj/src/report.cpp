#include "skewq/report.hpp"

#include <sstream>
#include <thread>

#include "skewq/json_io.hpp"

namespace skewq {

using nlohmann::json;

ClassRow analyze_graph(const QuadGraph& g, long long budget) {
    ClassRow row;
    row.representative = g;
    SignSystem eps = g.to_sign_system();
    row.clifford = structure(eps);
    row.scheme = point_scheme(eps);
    row.bounds = rank_bounds(eps);
    row.high = high_rank(eps);
    row.smooth = is_smooth(eps);
    row.trace = reduce_to_base(g, budget);
    return row;
}

unsigned long long ClassificationReport::total_graphs() const {
    unsigned long long t = 0;
    for (const auto& r : rows) t += r.size;
    return t;
}

ClassificationReport classification_report(int n, long long budget, int threads) {
    if (n < 3 || n > 7) throw std::invalid_argument("classification report supports 3 <= n <= 7");
    ClassificationReport rep;
    rep.n = n;
    std::vector<MutationClass> classes = classify(n);
    rep.rows.resize(classes.size());

    auto work = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            rep.rows[i] = analyze_graph(classes[i].representative, budget);
            rep.rows[i].id = (int)i + 1;
            rep.rows[i].size = classes[i].size;
        }
    };
    int workers = std::max(1, threads);
    if (workers == 1 || classes.size() < 2) {
        work(0, classes.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (classes.size() + workers - 1) / workers;
        for (size_t lo = 0; lo < classes.size(); lo += chunk)
            pool.emplace_back(work, lo, std::min(lo + chunk, classes.size()));
        for (auto& t : pool) t.join();
    }
    return rep;
}

namespace {

std::string components_str(const PointScheme& ps) {
    if (ps.components.size() == 1 && ps.components[0].empty()) return "P^" + std::to_string(ps.n - 1);
    std::ostringstream os;
    for (size_t i = 0; i < ps.components.size(); ++i) {
        if (i) os << " u ";
        os << "V(";
        for (size_t k = 0; k < ps.components[i].size(); ++k) {
            if (k) os << ",";
            os << "x" << ps.components[i][k];
        }
        os << ")";
    }
    return os.str();
}

}  // namespace

std::string ClassificationReport::table() const {
    std::ostringstream os;
    os << version << " | classification n=" << n << " | " << rows.size() << " classes, "
       << total_graphs() << " graphs\n";
    for (const auto& r : rows) {
        os << "(" << r.id << ") " << r.representative.str() << "\n";
        os << "    class size " << r.size << "; C(A) = " << r.clifford.components << " x M_"
           << r.clifford.block << "(k); uCM ~ D^b(mod k^" << r.clifford.components << ")\n";
        os << "    E = " << components_str(r.scheme) << " [l=" << r.scheme.ell << "]\n";
        os << "    rank in [" << r.bounds.lo << "," << r.bounds.hi << "]"
           << (r.bounds.exact ? " (exact)" : "") << "; high rank: " << high_rank_str(r.high)
           << "; smooth: " << (r.smooth ? "yes" : "no") << "\n";
        if (r.trace.stuck())
            os << "    reduction: stuck\n";
        else
            os << "    reduction: " << r.trace.steps.size() << " steps, descriptor 2^"
               << r.trace.multiplicity_log2 << " x " << (*r.trace.descriptor() >> r.trace.multiplicity_log2)
               << " = " << *r.trace.descriptor() << "\n";
    }
    return os.str();
}

json ClassificationReport::json() const {
    nlohmann::json out{{"version", version}, {"n", n}, {"total_graphs", total_graphs()}};
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row{{"id", r.id},
                           {"representative", to_json(r.representative)},
                           {"class_size", r.size},
                           {"clifford", {{"m", r.clifford.m},
                                         {"rankB", r.clifford.rankB},
                                         {"components", r.clifford.components},
                                         {"block", r.clifford.block}}},
                           {"descriptor", r.clifford.components},
                           {"point_scheme", {{"components", r.scheme.components},
                                             {"ell", r.scheme.ell}}},
                           {"rank", {{"lo", r.bounds.lo},
                                     {"hi", r.bounds.hi},
                                     {"high_rank", high_rank_str(r.high)},
                                     {"smooth", r.smooth}}}};
        if (r.bounds.exact) row["rank"]["exact"] = *r.bounds.exact;
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& s : r.trace.steps)
            steps.push_back({{"op", s.op}, {"params", s.params}, {"result", to_json(s.result)}});
        row["trace"] = {{"steps", steps},
                        {"multiplicity_log2", r.trace.multiplicity_log2},
                        {"stuck", r.trace.stuck()}};
        if (!r.trace.stuck()) {
            row["trace"]["terminal"] = to_json(*r.trace.terminal);
            row["trace"]["descriptor"] = *r.trace.descriptor();
        }
        classes.push_back(row);
    }
    out["classes"] = classes;
    return out;
}

std::optional<long long> band_descriptor(int n, int ell) {
    if (n % 2 == 1) {
        if (ell == 0) return 1;
        if (ell <= 3) return 4;
        if (ell <= 10) return 16;
        return std::nullopt;
    }
    if (ell <= 1) return 2;
    if (ell <= 6) return 8;
    if (ell <= 15) return 32;
    return std::nullopt;
}

ConjectureScanReport conjecture_scan(int n, int threads) {
    if (n < 3 || n > 7) throw std::invalid_argument("conjecture scan supports 3 <= n <= 7");
    ConjectureScanReport rep;
    rep.n = n;
    std::vector<MutationClass> classes = classify(n);
    rep.classes = (int)classes.size();
    std::vector<std::optional<ConjectureViolation>> hits(classes.size());

    auto work = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            SignSystem eps = classes[i].representative.to_sign_system();
            int ell = point_scheme(eps).ell;
            long long N = descriptor(eps);
            auto want = band_descriptor(n, ell);
            if (!want || *want != N)
                hits[i] = ConjectureViolation{(int)i + 1, classes[i].representative, ell, N};
        }
    };
    int workers = std::max(1, threads);
    if (workers == 1 || classes.size() < 2) {
        work(0, classes.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (classes.size() + workers - 1) / workers;
        for (size_t lo = 0; lo < classes.size(); lo += chunk)
            pool.emplace_back(work, lo, std::min(lo + chunk, classes.size()));
        for (auto& t : pool) t.join();
    }
    for (auto& h : hits)
        if (h) rep.violations.push_back(*h);
    return rep;
}

std::string ConjectureScanReport::table() const {
    std::ostringstream os;
    os << kToolVersion << " | conjecture scan n=" << n << " | " << classes << " classes, "
       << violations.size() << " violations\n";
    for (const auto& v : violations)
        os << "  class (" << v.class_id << ") " << v.representative.str() << ": l=" << v.ell
           << ", N=" << v.descriptor << "\n";
    return os.str();
}

json ConjectureScanReport::json() const {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : violations)
        vs.push_back({{"class_id", v.class_id},
                      {"representative", to_json(v.representative)},
                      {"ell", v.ell},
                      {"descriptor", v.descriptor}});
    return nlohmann::json{
        {"version", kToolVersion}, {"n", n}, {"classes", classes}, {"violations", vs}};
}

}  // namespace skewq
