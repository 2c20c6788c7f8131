#include "ricci/ricci.h"

#include "ricci/adversarial.hpp"
#include "ricci/bounds.hpp"
#include "ricci/emd.hpp"
#include "ricci/errors.hpp"
#include "ricci/graph.hpp"
#include "ricci/local_approx.hpp"
#include "ricci/oracle.hpp"
#include "ricci/sampling.hpp"

#include <json.hpp>

#include <cstring>
#include <new>
#include <string>

using ricci::errc;
using ricci::rational;

namespace {

thread_local std::string g_last_error;

ricci_status status_of(errc code) {
    switch (code) {
    case errc::malformed_input: return RICCI_ERR_MALFORMED_INPUT;
    case errc::unknown_node: return RICCI_ERR_UNKNOWN_NODE;
    case errc::not_an_edge: return RICCI_ERR_NOT_AN_EDGE;
    case errc::degree_mismatch: return RICCI_ERR_DEGREE_MISMATCH;
    case errc::oracle_too_large: return RICCI_ERR_ORACLE_TOO_LARGE;
    case errc::domain_error: return RICCI_ERR_DOMAIN;
    case errc::precondition_violation: return RICCI_ERR_PRECONDITION;
    case errc::unsupported_regime: return RICCI_ERR_UNSUPPORTED_REGIME;
    case errc::io_error: return RICCI_ERR_IO;
    case errc::internal: return RICCI_ERR_INTERNAL;
    }
    return RICCI_ERR_INTERNAL;
}

template <typename Fn> ricci_status guarded(Fn&& fn) {
    try {
        fn();
        return RICCI_OK;
    } catch (const ricci::error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RICCI_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return RICCI_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit_value(const rational& value, char** fraction, char** decimal) {
    if (fraction) *fraction = dup_string(ricci::to_fraction_string(value));
    if (decimal) *decimal = dup_string(ricci::to_decimal_string(value));
}

const ricci::graph& unwrap(const ricci_graph* g) {
    if (!g) ricci::fail(errc::domain_error, "null graph handle");
    return *reinterpret_cast<const ricci::graph*>(g);
}

nlohmann::ordered_json counters_block(const ricci::query_counters& c) {
    return {{"pair", c.pair},
            {"neighbor", c.neighbor},
            {"weighted_neighbor", c.weighted_neighbor},
            {"selective_degree", c.selective_degree}};
}

struct approx_opts {
    rational eps{1, 10};
    rational delta{1, 10};
    rational r{1, 5};
    int d = 3;
    int k = 0;
    ricci::estimator_backend backend = ricci::estimator_backend::local;
    std::uint64_t seed = 0;
};

approx_opts parse_opts(const ricci_approx_options* o) {
    approx_opts out;
    if (!o) return out;
    if (o->eps) out.eps = ricci::parse_rational(o->eps);
    if (o->delta) out.delta = ricci::parse_rational(o->delta);
    if (o->r) out.r = ricci::parse_rational(o->r);
    if (o->d > 0) out.d = o->d;
    if (o->k > 0) out.k = o->k;
    out.backend = o->exact_backend ? ricci::estimator_backend::exact
                                   : ricci::estimator_backend::local;
    out.seed = o->seed;
    return out;
}

} // namespace

extern "C" {

const char* ricci_version(void) { return "1.0.0"; }

const char* ricci_last_error_message(void) { return g_last_error.c_str(); }

void ricci_string_free(char* s) { delete[] s; }

ricci_status ricci_graph_load(const char* path, ricci_graph** out) {
    return guarded([&] {
        if (!path || !out) ricci::fail(errc::domain_error, "null argument");
        auto* g = new ricci::graph(ricci::graph::load(path));
        *out = reinterpret_cast<ricci_graph*>(g);
    });
}

ricci_status ricci_graph_from_edges(const char* const* tails, const char* const* heads,
                                    size_t count, ricci_graph** out) {
    return guarded([&] {
        if (!out || (count > 0 && (!tails || !heads))) {
            ricci::fail(errc::domain_error, "null argument");
        }
        std::vector<std::pair<std::string, std::string>> pairs;
        pairs.reserve(count);
        for (size_t i = 0; i < count; ++i) pairs.emplace_back(tails[i], heads[i]);
        auto* g = new ricci::graph(ricci::graph::from_edge_list(pairs));
        *out = reinterpret_cast<ricci_graph*>(g);
    });
}

void ricci_graph_free(ricci_graph* g) { delete reinterpret_cast<ricci::graph*>(g); }

ricci_status ricci_graph_node_count(const ricci_graph* g, size_t* out) {
    return guarded([&] {
        if (!out) ricci::fail(errc::domain_error, "null argument");
        *out = static_cast<size_t>(unwrap(g).node_count());
    });
}

ricci_status ricci_graph_edge_count(const ricci_graph* g, size_t* out) {
    return guarded([&] {
        if (!out) ricci::fail(errc::domain_error, "null argument");
        *out = static_cast<size_t>(unwrap(g).edge_count());
    });
}

ricci_status ricci_curvature_edge(const ricci_graph* g, const char* u, const char* v,
                                  char** fraction, char** decimal) {
    return guarded([&] {
        const auto& graph = unwrap(g);
        if (!u || !v) ricci::fail(errc::domain_error, "null node label");
        emit_value(ricci::curvature_edge(graph, graph.index_of(u), graph.index_of(v)), fraction,
                   decimal);
    });
}

ricci_status ricci_curvature_node(const ricci_graph* g, const char* v, char** fraction,
                                  char** decimal) {
    return guarded([&] {
        const auto& graph = unwrap(g);
        if (!v) ricci::fail(errc::domain_error, "null node label");
        emit_value(ricci::curvature_node(graph, graph.index_of(v)), fraction, decimal);
    });
}

ricci_status ricci_curvature_avg(const ricci_graph* g, char** fraction, char** decimal) {
    return guarded([&] { emit_value(ricci::curvature_avg(unwrap(g)), fraction, decimal); });
}

ricci_status ricci_curvature_bounds(const ricci_graph* g, const char* u, const char* v,
                                    char** tvd, char** lower, char** upper) {
    return guarded([&] {
        const auto& graph = unwrap(g);
        if (!u || !v) ricci::fail(errc::domain_error, "null node label");
        auto b = ricci::curvature_bounds(graph, graph.index_of(u), graph.index_of(v));
        if (tvd) *tvd = dup_string(ricci::to_fraction_string(b.tvd));
        if (lower) *lower = dup_string(ricci::to_fraction_string(b.lower));
        if (upper) *upper = dup_string(ricci::to_fraction_string(b.upper));
    });
}

ricci_status ricci_approx_edge(const ricci_graph* g, const char* u, const char* v,
                               const char* mode, const ricci_approx_options* options,
                               char** json_out) {
    return guarded([&] {
        const auto& graph = unwrap(g);
        if (!u || !v || !mode || !json_out) ricci::fail(errc::domain_error, "null argument");
        auto opts = parse_opts(options);
        auto res = ricci::approx_edge_on_graph(graph, graph.index_of(u), graph.index_of(v), mode,
                                               opts.eps, opts.delta, opts.d, opts.backend,
                                               opts.seed);
        nlohmann::ordered_json j;
        j["estimate"] = ricci::to_fraction_string(res.estimate);
        j["decimal"] = ricci::to_decimal_string(res.estimate);
        j["guarantee"] = ricci::to_fraction_string(res.guarantee);
        j["side"] = "lower_biased";
        j["case"] = res.case_label;
        j["queries"] = counters_block(res.queries);
        *json_out = dup_string(j.dump());
    });
}

ricci_status ricci_approx_node(const ricci_graph* g, const char* v,
                               const ricci_approx_options* options, char** json_out) {
    return guarded([&] {
        const auto& graph = unwrap(g);
        if (!v || !json_out) ricci::fail(errc::domain_error, "null argument");
        auto opts = parse_opts(options);
        int node = graph.index_of(v);
        ricci::graph_session session(graph, opts.seed);
        ricci::estimator_config cfg{opts.r, opts.k, opts.seed};
        auto value = ricci::estimate_node_curvature(
            session, node, graph.degree(node), cfg,
            [&graph](int a, int b) { return ricci::curvature_edge(graph, a, b); });
        nlohmann::ordered_json j;
        j["estimate"] = ricci::to_fraction_string(value);
        j["decimal"] = ricci::to_decimal_string(value);
        j["guarantee"] = ricci::to_fraction_string(2 * cfg.r);
        j["samples"] = cfg.effective_k();
        j["queries"] = counters_block(session.counters());
        *json_out = dup_string(j.dump());
    });
}

ricci_status ricci_approx_avg(const ricci_graph* g, const ricci_approx_options* options,
                              char** json_out) {
    return guarded([&] {
        const auto& graph = unwrap(g);
        if (!json_out) ricci::fail(errc::domain_error, "null argument");
        auto opts = parse_opts(options);
        ricci::graph_session session(graph, opts.seed);
        std::vector<int> degrees;
        degrees.reserve(static_cast<size_t>(graph.node_count()));
        for (int v = 0; v < graph.node_count(); ++v) degrees.push_back(graph.degree(v));
        ricci::estimator_config cfg{opts.r, opts.k, opts.seed};
        auto value = ricci::estimate_avg_curvature(
            session, degrees, cfg,
            [&graph](int a, int b) { return ricci::curvature_edge(graph, a, b); });
        nlohmann::ordered_json j;
        j["estimate"] = ricci::to_fraction_string(value);
        j["decimal"] = ricci::to_decimal_string(value);
        j["guarantee"] = ricci::to_fraction_string(2 * cfg.r);
        j["samples"] = cfg.effective_k();
        j["queries"] = counters_block(session.counters());
        *json_out = dup_string(j.dump());
    });
}

ricci_status ricci_experiment_run(const char* family, const char* strategy, int n, int trials,
                                  uint64_t seed, char** csv_out) {
    return guarded([&] {
        if (!family || !strategy || !csv_out) ricci::fail(errc::domain_error, "null argument");
        auto report = ricci::run_experiment(ricci::parse_strategy(strategy),
                                            ricci::parse_family(family), n, trials, seed);
        *csv_out = dup_string(report.to_csv());
    });
}

} // extern "C"
