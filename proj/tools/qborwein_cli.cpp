#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qborwein/qborwein.hpp"

namespace qb = qborwein;
using qb::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts "p/q", an integer, or an exact decimal like 0.23 (= 23/100).
qb::Rational parse_rational(const std::string& s) {
    const auto dot = s.find('.');
    if (dot == std::string::npos) {
        try {
            return qb::Rational::from_string(s);
        } catch (const std::exception&) {
            throw UsageError("cannot parse '" + s + "' as p/q, integer, or decimal");
        }
    }
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    std::string sign;
    if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
        if (head[0] == '-') sign = "-";
        head.erase(0, 1);
    }
    const auto digits = [](const std::string& t) {
        return t.find_first_not_of("0123456789") == std::string::npos;
    };
    if ((head.empty() && tail.empty()) || !digits(head) || tail.empty() || !digits(tail))
        throw UsageError("cannot parse decimal '" + s + "'");
    return qb::Rational::from_string(sign + head + tail + "/1" + std::string(tail.size(), '0'));
}

qb::Quadratic critical_exponent() {
    return qb::Quadratic(qb::Rational(9, 2), qb::Rational(-1, 2), 73);
}

// An exponent as given on the command line: exact rational, or an element
// a + b*sqrt(D) ("critical" is the preset (9 - sqrt(73))/2).
struct Exponent {
    std::string token;
    qb::Rational rat;
    std::optional<qb::Quadratic> quad;

    bool is_quadratic() const { return quad.has_value(); }
    qb::Quadratic as_quadratic() const { return quad ? *quad : qb::Quadratic(rat); }
    json exact_json() const { return quad ? qb::coeff_to_json(*quad) : qb::coeff_to_json(rat); }
};

Exponent parse_exponent_token(const std::string& token) {
    Exponent e;
    e.token = token;
    if (token == "critical")
        e.quad = critical_exponent();
    else
        e.rat = parse_rational(token);
    return e;
}

Exponent parse_exponent(const std::string& d_token, const std::string& quad_triple) {
    if (!quad_triple.empty()) {
        std::vector<std::string> parts;
        std::stringstream ss(quad_triple);
        std::string item;
        while (std::getline(ss, item, ',')) parts.push_back(item);
        if (parts.size() != 3) throw UsageError("--quad wants a,b,D meaning a + b*sqrt(D)");
        unsigned long D = 0;
        try {
            size_t pos = 0;
            D = std::stoul(parts[2], &pos);
            if (pos != parts[2].size()) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            throw UsageError("--quad: D must be a nonnegative integer");
        }
        Exponent e;
        e.token = quad_triple;
        try {
            e.quad = qb::Quadratic(parse_rational(parts[0]), parse_rational(parts[1]), D);
        } catch (const std::domain_error& ex) {
            throw UsageError(std::string("--quad: ") + ex.what());
        }
        return e;
    }
    if (d_token.empty()) throw UsageError("an exponent is required: --d or --quad");
    return parse_exponent_token(d_token);
}

enum class RingKind { Exact, ExactQuadratic, Certified };

RingKind resolve_ring(const std::string& requested, const Exponent& d) {
    if (requested == "formal")
        throw UsageError(
            "the formal exponent ring carries no numeric verdicts; "
            "use the region subcommand for formal-d analysis");
    if (requested.empty())
        return d.is_quadratic() ? RingKind::ExactQuadratic : RingKind::Exact;
    if (requested == "rational") {
        if (d.is_quadratic())
            throw UsageError(
                "a quadratic exponent cannot run in the rational ring; "
                "use --ring quadratic or --ring interval");
        return RingKind::Exact;
    }
    if (requested == "quadratic") return RingKind::ExactQuadratic;
    return RingKind::Certified;
}

struct Sink {
    std::ofstream file;
    std::ostream* out = &std::cout;

    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);
        if (!file) throw UsageError("cannot open output file '" + path + "'");
        out = &file;
    }
    std::ostream& os() { return *out; }
};

std::string default_cache_dir() {
    const char* env = std::getenv("QBORWEIN_CACHE_DIR");
    return env ? std::string(env) : std::string();
}

template <typename R>
qb::Series<R> expand_cached(const qb::ProductSpec& spec, const std::string& cache_dir,
                            const std::function<qb::Series<R>()>& compute) {
    if (cache_dir.empty()) return compute();
    qb::SeriesCache cache(cache_dir);
    if (auto hit = cache.template load<R>(spec)) return std::move(*hit);
    qb::Series<R> f = compute();
    cache.store(spec, f);
    return f;
}

std::string to_display(const qb::Rational& x) { return x.to_string(); }
std::string to_display(const qb::Quadratic& x) { return x.to_string(); }
std::string to_display(const qb::Interval& x) { return x.to_string(); }

std::string csv_safe(std::string v) {
    for (char& ch : v)
        if (ch == ',') ch = ';';
    return v;
}

std::string witness_text(const json& w) {
    if (w.is_null()) return "-";
    if (w.is_string()) return w.get<std::string>();
    return w.dump();
}

template <typename R>
void print_series(std::ostream& os, const qb::Series<R>& f, const qb::ProductSpec& spec,
                  const std::string& format) {
    if (format == "json") {
        json out = qb::series_to_json(f);
        out["version"] = 1;
        out["spec"] = spec.to_json();
        os << out.dump() << "\n";
    } else if (format == "csv") {
        os << "index,value\n";
        for (int k = 0; k <= f.order(); ++k) os << k << "," << csv_safe(to_display(f[k])) << "\n";
    } else {
        os << "order " << f.order() << ", ring " << qb::ring_traits<R>::name << "\n";
        for (int k = 0; k <= f.order(); ++k) os << "q^" << k << "\t" << to_display(f[k]) << "\n";
    }
}

template <typename R>
void print_dissection(std::ostream& os, const qb::Dissection3<R>& dis, const json& params,
                      const std::string& format) {
    const qb::Series<R>* comps[3] = {&dis.A, &dis.B, &dis.C};
    const char* names[3] = {"A", "B", "C"};
    if (format == "json") {
        json out{{"version", 1},
                 {"params", params},
                 {"A", qb::series_to_json(dis.A)},
                 {"B", qb::series_to_json(dis.B)},
                 {"C", qb::series_to_json(dis.C)}};
        os << out.dump() << "\n";
    } else if (format == "csv") {
        os << "component,index,value\n";
        for (int c = 0; c < 3; ++c)
            for (int k = 0; k <= comps[c]->order(); ++k)
                os << names[c] << "," << k << "," << csv_safe(to_display((*comps[c])[k])) << "\n";
    } else {
        for (int c = 0; c < 3; ++c) {
            os << names[c] << ":";
            for (int k = 0; k <= comps[c]->order(); ++k)
                os << (k ? " " : "\t") << to_display((*comps[c])[k]);
            os << "\n";
        }
    }
}

void print_report(std::ostream& os, const qb::VerificationReport& rep, const std::string& format) {
    if (format == "json") {
        os << rep.to_json().dump() << "\n";
        return;
    }
    if (format == "csv") {
        os << "field,value\n";
        os << "status," << to_string(rep.status) << "\n";
        os << "checked_order," << rep.checked_order << "\n";
        os << "ring," << rep.ring << "\n";
        for (const auto& c : rep.components) {
            os << c.name << ".first_violation,"
               << (c.first_violation >= 0 ? std::to_string(c.first_violation) : "-") << "\n";
            os << c.name << ".witness," << csv_safe(witness_text(c.witness)) << "\n";
        }
        return;
    }
    os << "status: " << to_string(rep.status) << "\n";
    os << "checked order: " << rep.checked_order << "\n";
    os << "ring: " << rep.ring << "\n";
    for (const auto& c : rep.components) {
        os << "component " << c.name << ": ";
        if (c.first_violation >= 0)
            os << "first violation at index " << c.first_violation << ", witness "
               << witness_text(c.witness) << "\n";
        else if (c.first_unknown >= 0)
            os << "sign undecided at index " << c.first_unknown << ", value "
               << witness_text(c.witness) << "\n";
        else
            os << "all coefficients nonnegative\n";
    }
}

std::string endpoint_text(const qb::AlgebraicNumber& x) {
    if (x.is_rational()) return x.rational_value().to_string();
    if (auto quad = x.as_quadratic()) return quad->to_string();
    std::ostringstream os;
    os << "root of " << x.minimal_polynomial().to_string() << " in [" << x.lower().to_string()
       << ", " << x.upper().to_string() << "]";
    return os.str();
}

// Shared per-subcommand options; each subcommand registers the subset it
// actually understands.
struct Opts {
    int order = -1;
    std::string d_token;
    std::string quad_triple;
    std::string ring;
    unsigned bits = 128;
    std::string format = "text";
    std::string cache_dir = default_cache_dir();
    int jobs = 1;
    std::string output;
    std::string domain = "0:4";
    int n = -1;
    bool squared = false;
    std::vector<std::string> values;
    std::string grid;
    int sum_bound = 0;
};

void add_output_opts(CLI::App* sub, Opts& o) {
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--output,-o", o.output, "write to a file instead of stdout");
}

void add_exponent_opts(CLI::App* sub, Opts& o) {
    auto* d = sub->add_option(
        "--d", o.d_token, "exponent: p/q, integer, decimal, or 'critical' for (9-sqrt(73))/2");
    sub->add_option("--quad", o.quad_triple, "exponent a,b,D meaning a + b*sqrt(D)")->excludes(d);
    sub->add_option("--ring", o.ring, "coefficient ring (default: inferred from the exponent)")
        ->check(CLI::IsMember({"rational", "quadratic", "interval", "formal"}));
    sub->add_option("--bits", o.bits, "interval working precision floor (default 128)")
        ->check(CLI::Range(8u, 65536u));
}

void add_cache_opts(CLI::App* sub, Opts& o) {
    sub->add_option("--cache-dir", o.cache_dir,
                    "series cache directory (default: $QBORWEIN_CACHE_DIR)");
}

int require_order(const Opts& o, int minimum) {
    if (o.order < minimum)
        throw UsageError("--order must be >= " + std::to_string(minimum));
    return o.order;
}

int cmd_expand(const Opts& o) {
    const Exponent d = parse_exponent(o.d_token, o.quad_triple);
    const int N = require_order(o, 0);
    const RingKind ring = resolve_ring(o.ring, d);
    Sink sink(o.output);
    if (ring == RingKind::Exact) {
        const auto spec = qb::ProductSpec::fractional(d.rat, N);
        const auto f = expand_cached<qb::Rational>(
            spec, o.cache_dir, [&] { return qb::borwein_product_fractional(d.rat, N); });
        print_series(sink.os(), f, spec, o.format);
    } else if (ring == RingKind::ExactQuadratic) {
        const qb::Quadratic dq = d.as_quadratic();
        const auto spec = qb::ProductSpec::fractional(dq, N);
        const auto f = expand_cached<qb::Quadratic>(
            spec, o.cache_dir, [&] { return qb::borwein_product_fractional(dq, N); });
        print_series(sink.os(), f, spec, o.format);
    } else {
        qb::ProductSpec spec;
        spec.d = json{{"exact", d.exact_json()}, {"bits", o.bits}};
        spec.N = N;
        const auto f = expand_cached<qb::Interval>(spec, o.cache_dir, [&] {
            return d.is_quadratic()
                       ? qb::borwein_product_fractional_interval(*d.quad, N, o.bits)
                       : qb::borwein_product_fractional_interval(d.rat, N, o.bits);
        });
        print_series(sink.os(), f, spec, o.format);
    }
    return 0;
}

int cmd_dissect(const Opts& o) {
    Sink sink(o.output);
    if (o.n >= 0) {
        if (!o.d_token.empty() || !o.quad_triple.empty())
            throw UsageError("give either --n (finite product) or --d, not both");
        const int N = o.order >= 0 ? o.order : (o.squared ? 6 : 3) * o.n * o.n;
        const auto f =
            o.squared ? qb::borwein_product_squared_finite(o.n, N) : qb::borwein_product_finite(o.n, N);
        json params{{"n", o.n}, {"squared", o.squared}, {"N", N}};
        print_dissection(sink.os(), qb::borwein_dissect(f), params, o.format);
        return 0;
    }
    const Exponent d = parse_exponent(o.d_token, o.quad_triple);
    const int N = require_order(o, 0);
    const RingKind ring = resolve_ring(o.ring, d);
    json params{{"d", d.exact_json()}, {"N", N}};
    if (ring == RingKind::Exact) {
        print_dissection(sink.os(), qb::borwein_dissect(qb::borwein_product_fractional(d.rat, N)),
                         params, o.format);
    } else if (ring == RingKind::ExactQuadratic) {
        print_dissection(
            sink.os(), qb::borwein_dissect(qb::borwein_product_fractional(d.as_quadratic(), N)),
            params, o.format);
    } else {
        params["bits"] = o.bits;
        const auto f = d.is_quadratic()
                           ? qb::borwein_product_fractional_interval(*d.quad, N, o.bits)
                           : qb::borwein_product_fractional_interval(d.rat, N, o.bits);
        print_dissection(sink.os(), qb::borwein_dissect(f), params, o.format);
    }
    return 0;
}

qb::VerificationReport verify_one(const Exponent& d, int N, RingKind ring, unsigned bits) {
    switch (ring) {
        case RingKind::Exact:
            return qb::verify_fractional(d.rat, N);
        case RingKind::ExactQuadratic:
            return qb::verify_fractional(d.as_quadratic(), N);
        case RingKind::Certified:
            return d.is_quadratic() ? qb::verify_fractional_interval(*d.quad, N, bits)
                                    : qb::verify_fractional_interval(d.rat, N, bits);
    }
    throw std::logic_error("unreachable ring kind");
}

int cmd_verify(const Opts& o) {
    const Exponent d = parse_exponent(o.d_token, o.quad_triple);
    const int N = require_order(o, 0);
    const RingKind ring = resolve_ring(o.ring, d);
    const qb::VerificationReport rep = verify_one(d, N, ring, o.bits);
    Sink sink(o.output);
    print_report(sink.os(), rep, o.format);
    return rep.exit_code();
}

int cmd_finite(const Opts& o) {
    if (o.n < 0) throw UsageError("--n is required and must be >= 0");
    const qb::VerificationReport rep = qb::verify_finite_borwein(o.n, o.squared);
    Sink sink(o.output);
    print_report(sink.os(), rep, o.format);
    if (o.squared && rep.status == qb::VerifyStatus::Violation) {
        std::cerr << "*** RESEARCH FINDING ***\n"
                  << "The squared finite Borwein product at n = " << o.n
                  << " has a certified negative dissection coefficient.\n"
                  << "Re-check independently before drawing conclusions. Full report:\n"
                  << rep.to_json().dump(2) << "\n";
    }
    return rep.exit_code();
}

void parse_domain(const std::string& s, qb::Rational& lo, qb::Rational& hi) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw UsageError("--domain wants lo:hi");
    lo = parse_rational(s.substr(0, colon));
    hi = parse_rational(s.substr(colon + 1));
    if (!(lo < hi)) throw UsageError("--domain is empty: " + s);
}

int cmd_region(const Opts& o) {
    const int N = require_order(o, 1);
    qb::Rational dlo, dhi;
    parse_domain(o.domain, dlo, dhi);
    const qb::FeasibleRegion region = qb::feasible_region(N, dlo, dhi);
    Sink sink(o.output);
    if (o.format == "json")
        sink.os() << region.to_json().dump() << "\n";
    else
        sink.os() << region.to_json().dump(2) << "\n";
    std::ostringstream summary;
    summary << "region(N=" << N << ") over [" << dlo.to_string() << ", " << dhi.to_string()
            << "]: " << region.intervals.size() << " interval(s)";
    for (size_t i = 0; i < region.intervals.size(); ++i) {
        summary << (i ? ", " : ": ") << "[" << endpoint_text(region.intervals[i].first) << ", "
                << endpoint_text(region.intervals[i].second) << "]";
    }
    std::cerr << summary.str() << "\n";
    return 0;
}

int severity(int exit_code) { return exit_code == 0 ? 0 : exit_code == 2 ? 1 : 2; }

int cmd_scan(const Opts& o) {
    const int N = require_order(o, 0);
    std::vector<Exponent> ds;
    for (const auto& tok : o.values) ds.push_back(parse_exponent_token(tok));
    if (!o.grid.empty()) {
        // lo:hi:count, an inclusive arithmetic progression of exact rationals
        std::vector<std::string> parts;
        std::stringstream ss(o.grid);
        std::string item;
        while (std::getline(ss, item, ':')) parts.push_back(item);
        if (parts.size() != 3) throw UsageError("--grid wants lo:hi:count");
        const qb::Rational lo = parse_rational(parts[0]), hi = parse_rational(parts[1]);
        long count = 0;
        try {
            count = std::stol(parts[2]);
        } catch (const std::exception&) {
            throw UsageError("--grid: count must be an integer");
        }
        if (count < 1) throw UsageError("--grid: count must be >= 1");
        if (count == 1) {
            Exponent e;
            e.token = lo.to_string();
            e.rat = lo;
            ds.push_back(e);
        } else {
            const qb::Rational step = (hi - lo) / qb::Rational(count - 1);
            for (long i = 0; i < count; ++i) {
                Exponent e;
                e.rat = lo + qb::Rational(i) * step;
                e.token = e.rat.to_string();
                ds.push_back(std::move(e));
            }
        }
    }
    if (ds.empty()) throw UsageError("scan needs a nonempty --values list or a --grid");

    std::vector<RingKind> rings;
    rings.reserve(ds.size());
    for (const auto& d : ds) rings.push_back(resolve_ring(o.ring, d));

    std::vector<qb::VerificationReport> reps(ds.size());
    std::vector<std::string> errors(ds.size());
    std::atomic<size_t> next{0};
    const auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < ds.size();) {
            try {
                reps[i] = verify_one(ds[i], N, rings[i], o.bits);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const size_t jobs = std::min<size_t>(size_t(std::max(o.jobs, 1)), ds.size());
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (size_t i = 0; i < ds.size(); ++i)
        if (!errors[i].empty())
            throw std::runtime_error("scan: d=" + ds[i].token + ": " + errors[i]);

    Sink sink(o.output);
    int worst = 0;
    for (const auto& rep : reps)
        if (severity(rep.exit_code()) > severity(worst)) worst = rep.exit_code();
    if (o.format == "json") {
        json results = json::array();
        for (size_t i = 0; i < ds.size(); ++i)
            results.push_back(json{{"d", ds[i].token}, {"report", reps[i].to_json()}});
        sink.os() << json{{"version", 1}, {"order", N}, {"results", results}}.dump() << "\n";
    } else if (o.format == "csv") {
        sink.os() << "d,status,checked_order\n";
        for (size_t i = 0; i < ds.size(); ++i)
            sink.os() << csv_safe(ds[i].token) << "," << to_string(reps[i].status) << ","
                      << reps[i].checked_order << "\n";
    } else {
        for (size_t i = 0; i < ds.size(); ++i)
            sink.os() << "d=" << ds[i].token << ": " << to_string(reps[i].status)
                      << " (checked order " << reps[i].checked_order << ")\n";
        sink.os() << "worst: " << to_string(worst == 0   ? qb::VerifyStatus::Verified
                                            : worst == 1 ? qb::VerifyStatus::Violation
                                                         : qb::VerifyStatus::Inconclusive)
                  << "\n";
    }
    return worst;
}

int cmd_jtp(const Opts& o) {
    const int N = o.order >= 0 ? o.order : 200;
    int K = o.sum_bound;
    if (K <= 0)
        for (K = 0; long(K + 1) * (K + 1) <= N;) ++K;
    const auto r1 = qb::jacobi_triple_product_check(N, K, +1);
    const auto r2 = qb::jacobi_triple_product_check(N, K, -1);
    Sink sink(o.output);
    if (o.format == "json") {
        const auto one = [](int z, const qb::TripleProductReport& r) {
            json j{{"z", z}, {"ok", r.ok}};
            j["first_mismatch"] = r.ok ? json(nullptr) : json(r.first_mismatch);
            if (!r.ok) {
                j["product_side"] = qb::coeff_to_json(r.product_side);
                j["sum_side"] = qb::coeff_to_json(r.sum_side);
            }
            return j;
        };
        sink.os() << json{{"version", 1},
                          {"order", N},
                          {"sum_bound", K},
                          {"results", json::array({one(+1, r1), one(-1, r2)})}}
                         .dump()
                  << "\n";
    } else {
        const auto one = [&](int z, const qb::TripleProductReport& r) {
            sink.os() << "z=" << (z > 0 ? "+1" : "-1") << ": ";
            if (r.ok)
                sink.os() << "match to order " << N << "\n";
            else
                sink.os() << "MISMATCH at q^" << r.first_mismatch << " (product "
                          << r.product_side.to_string() << ", sum " << r.sum_side.to_string()
                          << ")\n";
        };
        one(+1, r1);
        one(-1, r2);
    }
    return r1.ok && r2.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Borwein product toolkit: truncated expansions of (q,q^2;q^3)_inf^d, "
        "3-dissection, certified nonnegativity checks, and exact feasible regions "
        "for the exponent d"};
    app.require_subcommand(1);

    Opts o;

    auto* expand = app.add_subcommand("expand", "expand (q,q^2;q^3)_inf^d to a truncated series");
    expand->add_option("--order,-N", o.order, "truncation order")->required();
    add_exponent_opts(expand, o);
    add_cache_opts(expand, o);
    add_output_opts(expand, o);

    auto* dissect = app.add_subcommand("dissect", "3-dissect a product into components A, B, C");
    dissect->add_option("--order,-N", o.order, "truncation order (finite: natural degree)");
    dissect->add_option("--n", o.n, "finite product stage");
    dissect->add_flag("--squared", o.squared, "square the finite product");
    add_exponent_opts(dissect, o);
    add_output_opts(dissect, o);

    auto* verify = app.add_subcommand("verify", "certify dissection nonnegativity for one exponent");
    verify->add_option("--order,-N", o.order, "truncation order")->required();
    add_exponent_opts(verify, o);
    add_output_opts(verify, o);

    auto* finite = app.add_subcommand("finite", "verify a finite Borwein polynomial");
    finite->add_option("--n", o.n, "product stage")->required();
    finite->add_flag("--squared", o.squared, "use the squared product");
    add_output_opts(finite, o);

    auto* region = app.add_subcommand("region", "exact feasible d-region of the first N constraints");
    region->add_option("--order,-N", o.order, "number of coefficient constraints")->required();
    region->add_option("--domain", o.domain, "search domain lo:hi");
    add_output_opts(region, o);

    auto* scan = app.add_subcommand("scan", "verify a batch of exponents");
    scan->add_option("--order,-N", o.order, "truncation order")->required();
    scan->add_option("--values", o.values, "comma-separated exponents (rationals or 'critical')")
        ->delimiter(',');
    scan->add_option("--grid", o.grid, "arithmetic progression lo:hi:count");
    scan->add_option("--jobs", o.jobs, "parallel verifications")->check(CLI::Range(1, 256));
    add_exponent_opts(scan, o);
    add_output_opts(scan, o);

    auto* jtp = app.add_subcommand("jtp", "self-test: Jacobi triple product at z = +-1");
    jtp->add_option("--order,-N", o.order, "truncation order (default 200)");
    jtp->add_option("--sum-bound", o.sum_bound, "theta sum bound K, needs (K+1)^2 > N");
    add_output_opts(jtp, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (expand->parsed()) return cmd_expand(o);
        if (dissect->parsed()) return cmd_dissect(o);
        if (verify->parsed()) return cmd_verify(o);
        if (finite->parsed()) return cmd_finite(o);
        if (region->parsed()) return cmd_region(o);
        if (scan->parsed()) return cmd_scan(o);
        if (jtp->parsed()) return cmd_jtp(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
