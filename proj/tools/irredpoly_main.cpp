/*
   Copyright 2026 the irredpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line surface: construct, qnr, check, factor, bench.
//
// Exit codes: 0 success; 1 invalid input; 2 internal verification failure;
// 3 "reducible" verdict from `check`. The seed is printed on stderr so any
// run's timing behavior is reproducible; outputs never depend on it.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "irredpoly/bench.hpp"
#include "irredpoly/record.hpp"

namespace {

using namespace irredpoly;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitVerificationFailure = 2;
constexpr int kExitReducible = 3;

struct CliConfig {
    std::string p_text;
    unsigned k = 1;
    unsigned d = 1;
    std::optional<std::uint64_t> seed;
    std::string modulus_text;  // empty = not given
    bool json = false;
    bool no_verify = false;
    bool verify = true;
    std::string cache_path;  // empty = not given
    std::string poly_text;
    unsigned factor_degree = 1;
    std::string grid_text;
    unsigned runs = 5;
};

std::uint64_t resolve_seed(const CliConfig& cfg) {
    if (cfg.seed) return *cfg.seed;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::string resolve_cache_path(const CliConfig& cfg) {
    if (!cfg.cache_path.empty()) return cfg.cache_path;
    if (const char* env = std::getenv("IRRED_CACHE")) return env;
    return {};
}

/// Cache-aware construction. Hits are re-verified with Rabin (unless
/// --no-verify) before being served; failures are ignored and rebuilt.
ConstructionRecord cached_construct(const Natural& p, unsigned k, unsigned d,
                                    const std::optional<std::string>& modulus,
                                    const std::string& cache_path, bool verify,
                                    SeededRng& rng) {
    if (!cache_path.empty()) {
        ConstructionRecord key;
        key.p = p;
        key.k = k;
        key.d = d;
        key.modulus_text = modulus;
        if (auto hit = cache_lookup(cache_path, key)) {
            if (!verify || verify_record(*hit)) return *hit;
            std::cerr << "irredpoly: cached record failed re-verification; rebuilding\n";
        }
    }
    ConstructionRecord rec = construct_record(p, k, d, modulus, rng);
    if (!cache_path.empty()) cache_append(cache_path, rec);
    return rec;
}

int cmd_construct(const CliConfig& cfg, SeededRng& rng) {
    const Natural p = parse_natural(cfg.p_text);
    if (cfg.k < 1 || cfg.d < 1) throw InvalidInputError("k and d must be >= 1");
    if (!cfg.modulus_text.empty() && cfg.k == 1)
        throw InvalidInputError("--modulus requires -k greater than 1");
    const std::string cache_path = resolve_cache_path(cfg);

    std::optional<std::string> modulus;
    if (cfg.k > 1) {
        if (!cfg.modulus_text.empty()) {
            // Normalize the user's text through parse/print so cache keys
            // and records always carry the normative form.
            const Fp P(p);
            Poly<Fp> h = poly_from_text(P, cfg.modulus_text);
            if (h.degree() != static_cast<int>(cfg.k) || !h.is_monic())
                throw InvalidInputError("modulus must be monic of degree k");
            if (!rabin_is_irreducible(h)) throw InvalidInputError("modulus is reducible");
            modulus = poly_to_text(h);
        } else {
            // The canonical representation of F_{p^k} is itself a cacheable
            // (p, 1, k) construction.
            modulus =
                cached_construct(p, 1, cfg.k, std::nullopt, cache_path, cfg.verify, rng)
                    .poly_text;
        }
    }

    ConstructionRecord rec =
        cached_construct(p, cfg.k, cfg.d, modulus, cache_path, cfg.verify, rng);
    if (cfg.json)
        std::cout << record_to_line(rec) << "\n";
    else
        std::cout << rec.poly_text << "\n";
    return kExitOk;
}

int cmd_qnr(const CliConfig& cfg, SeededRng& rng) {
    const Fp P(parse_natural(cfg.p_text));
    QnrResult res = canonical_qnr(P, rng);
    if (cfg.json) {
        nlohmann::json j;
        j["p"] = natural_to_string(P.p());
        j["chain"] = nlohmann::json::array();
        for (const auto& a : res.chain) j["chain"].push_back(natural_to_string(a.v));
        j["poly"] = poly_to_text(res.poly);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "chain:";
        for (const auto& a : res.chain) std::cout << ' ' << natural_to_string(a.v);
        std::cout << "\npoly: " << poly_to_text(res.poly) << "\n";
    }
    return kExitOk;
}

/// Shared -p/-k/--modulus handling for check and factor. Returns the
/// extension context when k > 1.
std::optional<FpExt> make_context(const Fp& P, const CliConfig& cfg) {
    if (cfg.k == 1) {
        if (!cfg.modulus_text.empty())
            throw InvalidInputError("--modulus requires -k greater than 1");
        return std::nullopt;
    }
    if (cfg.modulus_text.empty())
        throw InvalidInputError("-k greater than 1 requires --modulus");
    Poly<Fp> h = poly_from_text(P, cfg.modulus_text);
    if (h.degree() != static_cast<int>(cfg.k) || !h.is_monic())
        throw InvalidInputError("modulus must be monic of degree k");
    if (!rabin_is_irreducible(h)) throw InvalidInputError("modulus is reducible");
    return FpExt(P, h, /*verify_irreducible=*/false);
}

int cmd_check(const CliConfig& cfg) {
    const Fp P(parse_natural(cfg.p_text));
    const auto ctx = make_context(P, cfg);
    bool irreducible = false;
    if (ctx) {
        Poly<FpExt> f = poly_from_text(*ctx, cfg.poly_text);
        if (f.degree() < 1 || !f.is_monic())
            throw InvalidInputError("check: polynomial must be monic of degree >= 1");
        irreducible = rabin_is_irreducible(f);
    } else {
        Poly<Fp> f = poly_from_text(P, cfg.poly_text);
        if (f.degree() < 1 || !f.is_monic())
            throw InvalidInputError("check: polynomial must be monic of degree >= 1");
        irreducible = rabin_is_irreducible(f);
    }
    if (cfg.json) {
        nlohmann::json j;
        j["irreducible"] = irreducible;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (irreducible ? "irreducible" : "reducible") << "\n";
    }
    return irreducible ? kExitOk : kExitReducible;
}

template <class F>
std::vector<std::string> factor_to_texts(const F& K, const std::string& poly_text,
                                         unsigned factor_degree, SeededRng& rng) {
    Poly<F> f = poly_from_text(K, poly_text);
    if (f.degree() < 1 || !f.is_monic())
        throw InvalidInputError("factor: polynomial must be monic of degree >= 1");
    if (factor_degree < 1 || f.degree() % static_cast<int>(factor_degree) != 0)
        throw InvalidInputError("factor: --deg must divide the polynomial degree");
    // Squarefreeness pre-check so user errors do not surface as internal
    // verification failures.
    Poly<F> d = poly_derivative(f);
    if (d.is_zero() || poly_gcd(f, d).degree() != 0)
        throw InvalidInputError("factor: polynomial is not squarefree");
    std::vector<std::string> out;
    for (const auto& g : edf(f, factor_degree, rng)) out.push_back(poly_to_text(g));
    return out;
}

int cmd_factor(const CliConfig& cfg, SeededRng& rng) {
    const Fp P(parse_natural(cfg.p_text));
    const auto ctx = make_context(P, cfg);
    std::vector<std::string> factors =
        ctx ? factor_to_texts(*ctx, cfg.poly_text, cfg.factor_degree, rng)
            : factor_to_texts(P, cfg.poly_text, cfg.factor_degree, rng);
    if (cfg.json) {
        nlohmann::json j;
        j["factors"] = factors;
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& t : factors) std::cout << t << "\n";
    }
    return kExitOk;
}

std::vector<BenchPoint> parse_grid(const std::string& text) {
    std::vector<BenchPoint> grid;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw InvalidInputError("bench grid items must look like p:d");
        BenchPoint point;
        point.p = parse_natural(item.substr(0, colon));
        point.d = static_cast<unsigned>(std::stoul(item.substr(colon + 1)));
        if (point.d < 1) throw InvalidInputError("bench grid degree must be >= 1");
        grid.push_back(std::move(point));
        pos = comma + 1;
    }
    if (grid.empty()) throw InvalidInputError("bench grid is empty");
    return grid;
}

int cmd_bench(const CliConfig& cfg, std::uint64_t seed) {
    if (cfg.runs < 5) throw InvalidInputError("bench needs at least 5 runs per point");
    const auto grid = parse_grid(cfg.grid_text);
    const auto rows = run_bench(grid, cfg.runs, seed);
    if (cfg.json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json r;
            r["p"] = natural_to_string(row.p);
            r["d"] = row.d;
            r["algorithm"] = row.algorithm;
            r["median_ms"] = row.median_ms;
            r["runs"] = row.runs;
            j.push_back(r);
        }
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& row : rows)
            std::cout << natural_to_string(row.p) << ' ' << row.d << ' ' << row.algorithm
                      << ' ' << row.median_ms << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudo-deterministic canonical irreducible polynomials over finite fields"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto add_field_opts = [&](CLI::App* sub, bool with_kd) {
        sub->add_option("-p", cfg.p_text, "prime characteristic")->required();
        if (with_kd) {
            sub->add_option("-k", cfg.k, "extension degree of the ambient field");
            sub->add_option("--modulus", cfg.modulus_text,
                            "monic degree-k modulus over F_p (text form)");
        }
        sub->add_option("--seed", cfg.seed, "64-bit seed (default: OS entropy)");
        sub->add_flag("--json", cfg.json, "emit JSON");
    };

    CLI::App* construct = app.add_subcommand("construct", "canonical irreducible polynomial");
    add_field_opts(construct, true);
    construct->add_option("-d", cfg.d, "degree of the output polynomial");
    construct->add_flag("--no-verify", cfg.no_verify, "skip re-verification of cache hits");
    construct->add_option("--cache", cfg.cache_path,
                          "append-only JSON-lines cache (default: $IRRED_CACHE)");

    CLI::App* qnr = app.add_subcommand("qnr", "canonical quadratic non-residue chain");
    add_field_opts(qnr, false);

    CLI::App* check = app.add_subcommand("check", "Rabin irreducibility verdict");
    add_field_opts(check, true);
    check->add_option("-f", cfg.poly_text, "polynomial (normative text form)")->required();

    CLI::App* factor = app.add_subcommand("factor", "equal-degree factorization");
    add_field_opts(factor, true);
    factor->add_option("-f", cfg.poly_text, "polynomial (normative text form)")->required();
    factor->add_option("--deg", cfg.factor_degree, "common degree of the factors")->required();

    CLI::App* bench = app.add_subcommand("bench", "timing table for construct vs random");
    bench->add_option("--grid", cfg.grid_text, "comma-separated p:d points")->required();
    bench->add_option("--runs", cfg.runs, "runs per point (>= 5)");
    bench->add_option("--seed", cfg.seed, "64-bit seed (default: OS entropy)");
    bench->add_flag("--json", cfg.json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    cfg.verify = !cfg.no_verify;
    const std::uint64_t seed = resolve_seed(cfg);
    std::cerr << "irredpoly: seed " << seed << "\n";
    SeededRng rng(seed);

    try {
        if (app.got_subcommand(construct)) return cmd_construct(cfg, rng);
        if (app.got_subcommand(qnr)) return cmd_qnr(cfg, rng);
        if (app.got_subcommand(check)) return cmd_check(cfg);
        if (app.got_subcommand(factor)) return cmd_factor(cfg, rng);
        if (app.got_subcommand(bench)) return cmd_bench(cfg, seed);
    } catch (const InvalidInputError& e) {
        std::cerr << "irredpoly: error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const BudgetExceededError& e) {
        std::cerr << "irredpoly: error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const VerificationError& e) {
        std::cerr << "irredpoly: internal verification failure: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const std::exception& e) {
        std::cerr << "irredpoly: internal error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitInvalidInput;
}
