/*
   Copyright 2026 The seminorm authors

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

#include <CLI11.hpp>
#include <iostream>

#include "seminorm/json_io.hpp"
#include "seminorm/seminorm.hpp"

namespace {

using namespace seminorm;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitNotReduced = 3;
constexpr int kExitResource = 4;
constexpr int kExitInternal = 5;

struct Options {
    std::string file;
    bool emit_json = false;
    bool assume_reduced = false;
    std::string variable = "Yy";
    std::uint64_t seed = 0;
    unsigned max_degree = 64;
};

AffineRing load_ring(const Options& opt) {
    RingFile rf = parse_ring_file(opt.file);
    return rf.to_ring();
}

void require_reduced(const AffineRing& R, const Options& opt) {
    if (opt.assume_reduced) return;
    if (!is_reduced_ring(R, {opt.seed})) throw NotReduced("input ring is not reduced");
}

void print_ring_text(const AffineRing& R, std::ostream& os) { os << R.to_string() << "\n"; }

void print_map_text(const RingMap& f, const std::string& label, std::ostream& os) {
    os << label << ": " << f.to_string() << "\n";
}

int cmd_seminormalize(const Options& opt) {
    AffineRing R = load_ring(opt);
    require_reduced(R, opt);
    RecursionContext ctx{0, opt.variable, opt.seed};
    SeminormalizationResult res = seminormalize(R, ctx);
    if (opt.emit_json) {
        json j;
        j["status"] = "ok";
        j["command"] = "seminormalize";
        j["ring"] = ring_to_json(res.sn_ring);
        json maps = json::array();
        json m1 = map_to_json(res.map_in);
        m1["name"] = "to_seminormalization";
        json m2 = map_to_json(res.map_to_norm);
        m2["name"] = "to_normalization";
        maps.push_back(m1);
        maps.push_back(m2);
        j["maps"] = maps;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "seminormalization:\n  ";
        print_ring_text(res.sn_ring, std::cout);
        std::cout << "  ";
        print_map_text(res.map_in, "map from input", std::cout);
        std::cout << "  ";
        print_map_text(res.map_to_norm, "map to normalization", std::cout);
        std::cout << "  normalization:\n    ";
        print_ring_text(res.map_to_norm.target(), std::cout);
    }
    return kExitOk;
}

int cmd_is_seminormal(const Options& opt) {
    AffineRing R = load_ring(opt);
    require_reduced(R, opt);
    bool sn = is_seminormal(R, RecursionContext{0, opt.variable, opt.seed}, true);
    if (opt.emit_json) {
        json j;
        j["status"] = "ok";
        j["command"] = "is-seminormal";
        j["booleans"] = {{"is_seminormal", sn}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (sn ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int cmd_normalize(const Options& opt) {
    AffineRing R = load_ring(opt);
    require_reduced(R, opt);
    NormalizationResult n = normalize_reduced(R, {opt.seed});
    if (opt.emit_json) {
        json j;
        j["status"] = "ok";
        j["command"] = "normalize";
        j["ring"] = ring_to_json(n.normal_ring);
        json m = map_to_json(n.map);
        m["name"] = "to_normalization";
        j["maps"] = json::array({m});
        json idems = json::array();
        for (const auto& e : n.idempotents) idems.push_back(e.to_string());
        j["idempotents"] = idems;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "normalization:\n  ";
        print_ring_text(n.normal_ring, std::cout);
        std::cout << "  ";
        print_map_text(n.map, "map from input", std::cout);
        std::cout << "  idempotents:";
        for (const auto& e : n.idempotents) std::cout << " " << e.to_string();
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_min_primes(const Options& opt) {
    AffineRing R = load_ring(opt);
    AffineRing ambient(R.field(), R.vars(), {});
    std::vector<RingElement> gens;
    for (const auto& q : R.groebner().elems) gens.push_back(RingElement(ambient, q));
    MinimalPrimeSet mp = minimal_primes(make_ideal(ambient, gens), {opt.seed});
    if (opt.emit_json) {
        json j;
        j["status"] = "ok";
        j["command"] = "min-primes";
        json ideals = json::array();
        for (const auto& p : mp.primes) ideals.push_back(ideal_to_json(p));
        j["ideals"] = ideals;
        j["certified"] = mp.certified;
        std::cout << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < mp.primes.size(); ++i) {
            std::cout << "component " << i << (mp.certified[i] ? "" : " (uncertified)") << ":";
            for (const auto& g : mp.primes[i].gens) std::cout << " " << g.to_string() << ";";
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_radical(const Options& opt) {
    AffineRing R = load_ring(opt);
    AffineRing ambient(R.field(), R.vars(), {});
    std::vector<RingElement> gens;
    for (const auto& q : R.groebner().elems) gens.push_back(RingElement(ambient, q));
    IdealHandle rad = radical(make_ideal(ambient, gens), {opt.seed});
    if (opt.emit_json) {
        json j;
        j["status"] = "ok";
        j["command"] = "radical";
        j["ideals"] = json::array({ideal_to_json(rad)});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "radical:";
        for (const auto& g : rad.gens) std::cout << " " << g.to_string() << ";";
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_conductor(const Options& opt) {
    AffineRing R = load_ring(opt);
    require_reduced(R, opt);
    NormalizationResult n = normalize_reduced(R, {opt.seed});
    IdealHandle c = conductor(n);
    if (opt.emit_json) {
        json j;
        j["status"] = "ok";
        j["command"] = "conductor";
        j["ideals"] = json::array({ideal_to_json(c)});
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "conductor:";
        for (const auto& g : c.gens) std::cout << " " << g.to_string() << ";";
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_dim(const Options& opt) {
    AffineRing R = load_ring(opt);
    int d = krull_dimension(R);
    if (opt.emit_json) {
        json j;
        j["status"] = "ok";
        j["command"] = "dim";
        j["dimension"] = d;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << d << "\n";
    }
    return kExitOk;
}

int cmd_check_reduced(const Options& opt) {
    AffineRing R = load_ring(opt);
    bool red = is_reduced_ring(R, {opt.seed});
    if (opt.emit_json) {
        json j;
        j["status"] = "ok";
        j["command"] = "check-reduced";
        j["booleans"] = {{"reduced", red}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (red ? "true" : "false") << "\n";
    }
    return kExitOk;
}

void emit_error(const Options& opt, const std::string& code, const std::string& what) {
    if (opt.emit_json) {
        json j;
        j["status"] = "error";
        j["code"] = code;
        j["message"] = what;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cerr << "error (" << code << "): " << what << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"seminorm: seminormalization of reduced affine rings over QQ and GF(p)"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool with_variable) {
        sub->add_option("file", opt.file, "ring description file")->required();
        sub->add_flag("--json", opt.emit_json, "emit machine-readable JSON");
        sub->add_option("--seed", opt.seed, "seed for the randomized factorization steps");
        sub->add_option("--max-degree", opt.max_degree,
                        "degree ceiling for Groebner basis elements (resource guard)");
        sub->add_flag("--assume-reduced", opt.assume_reduced, "skip the reducedness verification");
        if (with_variable)
            sub->add_option("--variable", opt.variable, "output variable symbol (default Yy)");
    };

    auto* sn = app.add_subcommand("seminormalize", "compute R^SN with R -> R^SN -> R^N");
    add_common(sn, true);
    auto* issn = app.add_subcommand("is-seminormal", "test whether the ring is seminormal");
    add_common(issn, true);
    auto* nor = app.add_subcommand("normalize", "compute the normalization R^N");
    add_common(nor, false);
    auto* mp = app.add_subcommand("min-primes", "minimal primes of the defining ideal");
    add_common(mp, false);
    auto* rad = app.add_subcommand("radical", "radical of the defining ideal");
    add_common(rad, false);
    auto* cond = app.add_subcommand("conductor", "conductor of the normalization");
    add_common(cond, false);
    auto* dim = app.add_subcommand("dim", "Krull dimension of the ring");
    add_common(dim, false);
    auto* chk = app.add_subcommand("check-reduced", "test whether the defining ideal is radical");
    add_common(chk, false);

    CLI11_PARSE(app, argc, argv);

    seminorm::global_limits().max_poly_degree = opt.max_degree;

    try {
        if (sn->parsed()) return cmd_seminormalize(opt);
        if (issn->parsed()) return cmd_is_seminormal(opt);
        if (nor->parsed()) return cmd_normalize(opt);
        if (mp->parsed()) return cmd_min_primes(opt);
        if (rad->parsed()) return cmd_radical(opt);
        if (cond->parsed()) return cmd_conductor(opt);
        if (dim->parsed()) return cmd_dim(opt);
        if (chk->parsed()) return cmd_check_reduced(opt);
    } catch (const seminorm::ParseError& e) {
        emit_error(opt, "parse", e.what());
        return kExitParse;
    } catch (const seminorm::NotReduced& e) {
        emit_error(opt, "not-reduced", e.what());
        return kExitNotReduced;
    } catch (const seminorm::UnsupportedDegree& e) {
        emit_error(opt, "unsupported-degree", e.what());
        return kExitResource;
    } catch (const seminorm::IncompleteDecomposition& e) {
        emit_error(opt, "incomplete-decomposition", e.what());
        return kExitResource;
    } catch (const seminorm::ResourceLimitExceeded& e) {
        emit_error(opt, "resource-limit", e.what());
        return kExitResource;
    } catch (const seminorm::ValueError& e) {
        emit_error(opt, "invalid-input", e.what());
        return kExitParse;
    } catch (const seminorm::InvariantViolation& e) {
        emit_error(opt, "internal-invariant", e.what());
        return kExitInternal;
    } catch (const std::exception& e) {
        emit_error(opt, "internal", e.what());
        return kExitInternal;
    }
    return kExitInternal;
}
