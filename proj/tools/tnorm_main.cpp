// Command line front end: norm balls, evaluation, Farey paths, satellite
// composition, face-count towers, and the exhaustive sweep. Output is a
// single JSON document on stdout (plus an optional SVG file); failures print
// an error JSON and exit with 1 for usage problems, 2 for domain problems,
// and 3 for internal consistency failures.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tnorm/contfrac.hpp"
#include "tnorm/diagram.hpp"
#include "tnorm/errors.hpp"
#include "tnorm/farey.hpp"
#include "tnorm/fraction.hpp"
#include "tnorm/satellite.hpp"
#include "tnorm/thurston_ball.hpp"

#include "serialize.hpp"
#include "svg.hpp"

namespace {

using nlohmann::ordered_json;
using namespace tnorm;

// Arguments that fail to parse are usage errors (exit 1), as opposed to
// well-formed values outside the math's domain (exit 2).
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

int fail(int code, const char* kind, const std::string& message) {
    ordered_json j;
    j["error"] = message;
    j["kind"] = kind;
    std::cout << j.dump(2) << "\n";
    return code;
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

Fraction cli_fraction(const std::string& text) {
    try {
        return Fraction::parse(text);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

std::vector<long long> cli_int_list(const std::string& text, const char* what) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

void maybe_write_svg(const std::string& path, const NormBall& ball) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw DomainError("cannot open SVG output file '" + path + "'");
    tnorm_cli::write_svg(out, ball);
}

// --- ball ---------------------------------------------------------------

int run_ball(const std::string& fraction, const std::string& cf, bool mirror,
             const std::string& svg) {
    if (fraction.empty() == cf.empty()) {
        throw UsageError("ball needs exactly one of a fraction argument or --cf");
    }
    RationalDiagram d = fraction.empty()
                            ? RationalDiagram(ContinuedFraction(cli_int_list(cf, "--cf")), mirror)
                            : RationalDiagram::from_fraction(cli_fraction(fraction), mirror);
    print_json(tnorm_cli::ball_json(d));
    maybe_write_svg(svg, build_ball(d));
    return 0;
}

// --- eval ---------------------------------------------------------------

int run_eval(const std::string& fraction, const std::string& cls, bool mirror) {
    std::size_t comma = cls.find(',');
    if (comma == std::string::npos) throw UsageError("--class needs the form a,b");
    Fraction a = cli_fraction(cls.substr(0, comma));
    Fraction b = cli_fraction(cls.substr(comma + 1));
    if (a.is_inf() || b.is_inf()) throw UsageError("--class needs finite coordinates");
    RationalDiagram d = RationalDiagram::from_fraction(cli_fraction(fraction), mirror);
    Fraction value = evaluate(build_ball(d), a, b);
    print_json(ordered_json(value.str()));
    return 0;
}

// --- farey-path ---------------------------------------------------------

int run_farey_path(const std::string& fraction, long long max_den, bool has_max_den) {
    Fraction f = cli_fraction(fraction);
    std::vector<Fraction> path;
    if (has_max_den) {
        if (f.is_inf() || f <= Fraction(0) || f >= Fraction(1)) {
            throw DomainError("farey-path needs a fraction strictly between 0 and 1");
        }
        if (f.den() % 2 != 0) throw DomainError("farey-path needs an even denominator");
        auto found = t10_path_in(t10_tree_build(max_den), f);
        if (!found) {
            throw DomainError("no path to " + f.str() + " within --max-den " +
                              std::to_string(max_den));
        }
        path = *found;
    } else {
        path = t10_path(f);
    }
    print_json(tnorm_cli::farey_path_json(f, path));
    return 0;
}

// --- satellite ----------------------------------------------------------

// A ball argument is either a fraction p/q (ball and linking number from the
// diagram) or an inline JSON object {"vertex_norms": {...}} (linking number
// must then come from the --lk flag). The flag always wins when given.
std::pair<NormBall, Int> cli_ball_spec(const std::string& spec, bool has_lk, long long lk,
                                       const char* which) {
    NormBall ball;
    Int lk_out;
    std::size_t first = spec.find_first_not_of(" \t");
    if (first != std::string::npos && spec[first] == '{') {
        ordered_json j;
        try {
            j = ordered_json::parse(spec);
        } catch (const std::exception& e) {
            throw UsageError(std::string("cannot parse ") + which + " JSON: " + e.what());
        }
        VertexNorms v;
        try {
            const auto& n = j.at("vertex_norms");
            v.x10 = Int(n.at("l1").get<long long>());
            v.x01 = Int(n.at("l2").get<long long>());
            v.x11 = Int(n.at("l1+l2").get<long long>());
            v.x1m1 = Int(n.at("l1-l2").get<long long>());
        } catch (const std::exception&) {
            throw UsageError(std::string(which) +
                             " JSON needs integer vertex_norms {l1, l2, l1+l2, l1-l2}");
        }
        ball = build_ball(v);
        if (!has_lk) {
            throw UsageError(std::string(which) + " given as JSON needs its --lk flag");
        }
        lk_out = lk;
    } else {
        RationalDiagram d = RationalDiagram::from_fraction(cli_fraction(spec));
        ball = build_ball(d);
        lk_out = has_lk ? Int(lk) : Int(linking_number(d));
    }
    return {std::move(ball), std::move(lk_out)};
}

int run_satellite(const std::string& companion, const std::string& pattern, bool has_lk_c,
                  long long lk_c, bool has_lk_p, long long lk_p, const std::string& svg) {
    auto [companion_ball, companion_lk] = cli_ball_spec(companion, has_lk_c, lk_c, "--companion");
    auto [pattern_ball, pattern_lk] = cli_ball_spec(pattern, has_lk_p, lk_p, "--pattern");
    SatelliteInput in{std::move(companion_ball), std::move(companion_lk),
                      std::move(pattern_ball), std::move(pattern_lk)};
    NormBall composed = satellite_ball(in);
    print_json(tnorm_cli::satellite_json(in, composed));
    maybe_write_svg(svg, composed);
    return 0;
}

// --- family -------------------------------------------------------------

int run_family(long long faces, const std::string& svg) {
    if (faces < 0) throw DomainError("--faces must be nonnegative");
    if (faces % 2 != 0) throw DomainError("--faces must be even, balls have 2n faces");
    if (faces > 512) throw DomainError("--faces too large for this tool (limit 512)");
    FaceCountResult result = ball_with_face_count(static_cast<int>(faces / 2));
    print_json(tnorm_cli::family_json(static_cast<int>(faces), result));
    maybe_write_svg(svg, result.ball);
    return 0;
}

// --- sweep --------------------------------------------------------------

int sweep_thread_count() {
    if (const char* env = std::getenv("TNORM_SWEEP_THREADS")) {
        int n = std::atoi(env);
        if (n < 1 || n > 64) throw DomainError("TNORM_SWEEP_THREADS must be in 1..64");
        return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw > 16 ? 16 : hw);
}

// All reduced fractions with even denominator up to max_q, in (q, p) order.
std::vector<Fraction> even_denominator_fractions(long long max_q) {
    std::vector<Fraction> out;
    for (long long q = 2; q <= max_q; q += 2) {
        for (long long p = 1; p < q; p += 2) { // even q forces odd p
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
        }
    }
    return out;
}

// Per-link invariant checks: the classification self-checks, the octagon
// bound, the Farey-distance oracle for x(l1), cone additivity, and the
// base-type ray criterion. Returns an empty string on success.
std::string sweep_check(const Fraction& f, const Int& farey_x10) {
    try {
        RationalDiagram d = RationalDiagram::from_fraction(f);
        BallClassification cls = classify(d);
        if (cls.faces > 8) return f.str() + ": face count " + std::to_string(cls.faces) + " > 8";

        VertexNorms norms = vertex_norms(d);
        if (norms.x10 != farey_x10) {
            return f.str() + ": x(l1) = " + norms.x10.str() + " but the Farey tree says " +
                   farey_x10.str();
        }

        NormBall ball = build_ball(norms);
        auto val = [&ball](long long a, long long b) {
            return evaluate(ball, Fraction(a), Fraction(b));
        };
        if (val(2, 1) != val(1, 0) + val(1, 1) || val(2, -1) != val(1, 0) + val(1, -1)) {
            return f.str() + ": cone additivity failed";
        }

        bool in_pm1 = true;
        for (const Fraction& r : cls.rays) {
            in_pm1 = in_pm1 && (r == Fraction(1) || r == Fraction(-1));
        }
        if (in_pm1 != cls.base_type) return f.str() + ": base-type ray criterion failed";
        return "";
    } catch (const std::exception& e) {
        return f.str() + ": " + e.what();
    }
}

int run_sweep(long long max_q) {
    if (max_q < 0) throw DomainError("sweep bound must be nonnegative");
    if (max_q > 2000) throw DomainError("sweep bound must be at most 2000");

    const std::vector<Fraction> fractions = even_denominator_fractions(max_q);

    // One tree and one breadth-first distance pass serve every fraction: the
    // path to p/q never needs denominators beyond q, so the max_q tree
    // contains all of them.
    T10Graph tree = t10_tree_build(max_q);
    std::vector<long long> dist(tree.vertices.size(), -1);
    {
        std::vector<std::size_t> queue{0};
        dist[0] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::size_t v = queue[head];
            for (std::size_t w : tree.adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    std::unordered_map<std::string, long long> farey_x10;
    farey_x10.reserve(tree.vertices.size());
    for (std::size_t i = 0; i < tree.vertices.size(); ++i) {
        if (dist[i] >= 0) farey_x10[tree.vertices[i].str()] = dist[i] - 1;
    }

    std::vector<std::string> results(fractions.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < fractions.size(); i = next.fetch_add(1)) {
            auto it = farey_x10.find(fractions[i].str());
            if (it == farey_x10.end()) {
                results[i] = fractions[i].str() + ": not reachable in the Farey tree";
            } else {
                results[i] = sweep_check(fractions[i], Int(it->second));
            }
        }
    };
    int threads = sweep_thread_count();
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    ordered_json failures = ordered_json::array();
    for (const std::string& r : results) {
        if (!r.empty()) failures.push_back(r);
    }
    ordered_json j;
    j["max_q"] = max_q;
    j["links"] = fractions.size();
    j["failures"] = failures;
    j["summary"] = "checked " + std::to_string(fractions.size()) + " links, " +
                   std::to_string(failures.size()) + " failures";
    print_json(j);
    return failures.empty() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thurston norm balls of two-bridge link exteriors"};
    app.require_subcommand(1);

    auto* ball_cmd = app.add_subcommand("ball", "norm ball of a two-bridge link");
    std::string ball_fraction, ball_cf, ball_svg;
    bool ball_mirror = false;
    ball_cmd->add_option("fraction", ball_fraction, "reduced p/q with even q, in (0,1)");
    ball_cmd->add_option("--cf", ball_cf, "positive twist-box sizes a1,a2,...");
    ball_cmd->add_flag("--mirror", ball_mirror, "use the mirror diagram");
    ball_cmd->add_option("--svg", ball_svg, "also render the ball to this SVG file");

    auto* eval_cmd = app.add_subcommand("eval", "norm of a homology class");
    std::string eval_fraction, eval_class;
    bool eval_mirror = false;
    eval_cmd->add_option("fraction", eval_fraction, "reduced p/q with even q")->required();
    eval_cmd->add_option("--class", eval_class, "class a,b meaning a*l1 + b*l2")->required();
    eval_cmd->add_flag("--mirror", eval_mirror, "use the mirror diagram");

    auto* farey_cmd = app.add_subcommand("farey-path", "tree path from 1/0 to p/q");
    std::string farey_fraction;
    long long farey_max_den = 0;
    farey_cmd->add_option("fraction", farey_fraction, "reduced p/q with even q")->required();
    auto* farey_max_opt =
        farey_cmd->add_option("--max-den", farey_max_den, "denominator bound for the tree");

    auto* sat_cmd = app.add_subcommand("satellite", "compose two norm balls");
    std::string sat_companion, sat_pattern, sat_svg;
    long long sat_lk_c = 0, sat_lk_p = 0;
    sat_cmd->add_option("--companion", sat_companion, "p/q or JSON {\"vertex_norms\": ...}")
        ->required();
    sat_cmd->add_option("--pattern", sat_pattern, "p/q or JSON {\"vertex_norms\": ...}")
        ->required();
    auto* sat_lk_c_opt = sat_cmd->add_option("--lk-companion", sat_lk_c, "companion linking number");
    auto* sat_lk_p_opt = sat_cmd->add_option("--lk-pattern", sat_lk_p, "pattern linking number");
    sat_cmd->add_option("--svg", sat_svg, "also render the composed ball to this SVG file");

    auto* family_cmd = app.add_subcommand("family", "a ball with a prescribed face count");
    long long family_faces = 0;
    std::string family_svg;
    family_cmd->add_option("--faces", family_faces, "even face count 2n")->required();
    family_cmd->add_option("--svg", family_svg, "also render the final ball to this SVG file");

    auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive invariant checks");
    long long sweep_max_q = 0;
    sweep_cmd->add_option("max_q", sweep_max_q, "check all even denominators up to this bound")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // help output
        return fail(1, "usage", e.what());
    }

    try {
        if (*ball_cmd) return run_ball(ball_fraction, ball_cf, ball_mirror, ball_svg);
        if (*eval_cmd) return run_eval(eval_fraction, eval_class, eval_mirror);
        if (*farey_cmd) {
            return run_farey_path(farey_fraction, farey_max_den, farey_max_opt->count() > 0);
        }
        if (*sat_cmd) {
            return run_satellite(sat_companion, sat_pattern, sat_lk_c_opt->count() > 0, sat_lk_c,
                                 sat_lk_p_opt->count() > 0, sat_lk_p, sat_svg);
        }
        if (*family_cmd) return run_family(family_faces, family_svg);
        if (*sweep_cmd) return run_sweep(sweep_max_q);
        return fail(1, "usage", "no subcommand given");
    } catch (const UsageError& e) {
        return fail(1, "usage", e.what());
    } catch (const DomainError& e) {
        return fail(2, "domain", e.what());
    } catch (const InternalError& e) {
        return fail(3, "internal", e.what());
    } catch (const std::exception& e) {
        return fail(3, "internal", e.what());
    }
}
