#pragma once

// Command-line front end for ptcalc. Kept in a header so the test suite can
// drive `run` with captured streams.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ptcalc/json.hpp"
#include "ptcalc/ptcalc.hpp"

namespace ptc::cli {

inline constexpr const char* kTableEnv = "PTCALC_TABLE";

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// NAME:RANK:FDIRS, e.g. `id:1:0`.
inline ThomStructure parse_structure(const std::string& spec) {
    auto first = spec.find(':');
    auto second = first == std::string::npos ? std::string::npos : spec.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos || first == 0)
        throw CLI::ValidationError("--structure", "expected NAME:RANK:FDIRS, got '" + spec + "'");
    std::string name = spec.substr(0, first);
    int rank = 0;
    int fdirs = 0;
    try {
        std::size_t used = 0;
        std::string r = spec.substr(first + 1, second - first - 1);
        rank = std::stoi(r, &used);
        if (used != r.size()) throw std::invalid_argument(r);
        std::string f = spec.substr(second + 1);
        fdirs = std::stoi(f, &used);
        if (used != f.size()) throw std::invalid_argument(f);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--structure", "expected integer RANK and FDIRS in '" + spec + "'");
    }
    if (rank < 1 || fdirs < 0 || fdirs > rank)
        throw CLI::ValidationError("--structure", "need RANK >= 1 and 0 <= FDIRS <= RANK in '" + spec + "'");
    return ThomStructure::generic(name, rank, fdirs);
}

/// The framed structure of the given rank, or the parsed one after checking
/// that its rank matches the codimension implied by the dimensions.
inline ThomStructure structure_for(const std::string& spec, int rank, const std::string& role) {
    if (spec.empty()) {
        if (rank < 1) throw domain_error(role + " would have rank " + std::to_string(rank) + " < 1");
        return ThomStructure::framed(rank);
    }
    ThomStructure s = parse_structure(spec);
    if (s.rank() != rank)
        throw domain_error(role + " structure '" + spec + "' has rank " + std::to_string(s.rank()) +
                           " but the dimensions require rank " + std::to_string(rank));
    return s;
}

inline void print_summands(std::ostream& out, const Decomposition& d, const CobordismAnswer* a) {
    for (const auto& s : d.summands) {
        out << s.label << "  " << to_string(s.space) << "  " << render(s.group);
        if (a) {
            std::string g = a->geometric_name(s.label);
            if (!g.empty()) out << "  [" << g << "]";
        }
        out << '\n';
    }
}

inline void print_answer(std::ostream& out, const CobordismAnswer& a) {
    out << "space: " << to_string(a.space) << '\n';
    if (a.decomposition && a.status == Status::Group) print_summands(out, *a.decomposition, &a);
    if (auto t = a.total()) out << "total: " << render(*t) << '\n';
    out << "status: " << status_name(a.status) << '\n';
    for (const auto& n : a.notes) out << "note: " << n << '\n';
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(int argc, const char* const* argv) {
        CLI::App app{"ptcalc: Pontryagin-Thom cobordism calculator"};
        app.require_subcommand(1);
        app.fallthrough();
        std::string format = "text";
        std::string table_path;
        app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
        app.add_option("--table", table_path, "Sphere table file (overrides $" + std::string(kTableEnv) + ")");

        // hall
        int generators = 2;
        int max_weight = 3;
        auto* hall = app.add_subcommand("hall", "List a system of basic Whitehead products");
        hall->add_option("--generators", generators, "Number of generators")->required()->check(CLI::Range(1, 64));
        hall->add_option("--max-weight", max_weight, "Largest weight")->required()->check(CLI::PositiveNumber);

        // pi
        int m = 0;
        std::string space_text;
        auto* pi = app.add_subcommand("pi", "pi_m of a wedge of suspensions via Hilton-Milnor");
        pi->add_option("--m", m, "Degree")->required();
        pi->add_option("--space", space_text, "Space term")->required();

        // cob
        int codim = 0;
        bool framed = false;
        bool generic_ambient = false;
        std::string structure;
        std::string structure_prime;
        auto* cobc = app.add_subcommand("cob", "Cobordism of submanifolds");
        cobc->add_option("--m", m, "Ambient dimension")->required();
        cobc->add_option("--codim", codim, "Codimension")->required();
        auto* cob_framed = cobc->add_flag("--framed", framed, "Framed normal structure");
        cobc->add_option("--structure", structure, "NAME:RANK:FDIRS")->excludes(cob_framed);
        cobc->add_flag("--generic-ambient", generic_ambient, "Ambient is a generic closed m-manifold");

        // lcob / ncob
        int k1 = 0;
        int k2 = 0;
        auto add_pair = [&](CLI::App* sub) {
            sub->add_option("--m", m, "Ambient dimension")->required();
            sub->add_option("--k1", k1, "Dimension of K")->required();
            sub->add_option("--k2", k2, "Dimension of K′")->required();
            auto* f = sub->add_flag("--framed", framed, "All structures framed");
            sub->add_option("--structure", structure, "θ as NAME:RANK:FDIRS")->excludes(f);
            sub->add_option("--structure-prime", structure_prime, "θ′ as NAME:RANK:FDIRS")->excludes(f);
        };
        auto* lcobc = app.add_subcommand("lcob", "Cobordism of links K ⊔ K′");
        add_pair(lcobc);
        auto* ncobc = app.add_subcommand("ncob", "Cobordism of nested manifolds K′ ⊆ K");
        add_pair(ncobc);

        // nested
        std::vector<int> dims;
        std::vector<std::string> structures;
        auto* nested = app.add_subcommand("nested", "Iterated nested cobordism K_r ⊆ ... ⊆ K_1");
        nested->add_option("--m", m, "Ambient dimension")->required();
        nested->add_option("--dims", dims, "k_r,..,k_1 (innermost first)")->required()->delimiter(',');
        auto* nf = nested->add_flag("--framed", framed, "All structures framed");
        nested->add_option("--structures", structures, "NAME:RANK:FDIRS per level, innermost first")
            ->delimiter(',')
            ->excludes(nf);

        // stable
        int k = 0;
        std::optional<int> stable_k2;
        auto* stable = app.add_subcommand("stable", "Stable (nested) cobordism groups");
        stable->add_option("--k", k, "Degree (k1 when --k2 is given)")->required();
        stable->add_option("--k2", stable_k2, "Inner degree for nested classes");
        auto* sf = stable->add_flag("--framed", framed, "All structures framed");
        stable->add_option("--structure", structure, "Θ as NAME:RANK:FDIRS")->excludes(sf);
        stable->add_option("--structure-prime", structure_prime, "θ′ as NAME:RANK:FDIRS")->excludes(sf);

        // table
        std::string validate_path;
        auto* table = app.add_subcommand("table", "Validate a sphere table file");
        table->add_option("--validate", validate_path, "Table file")->required();

        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp& e) {
            out_ << app.help();
            return kOk;
        } catch (const CLI::ParseError& e) {
            err_ << "usage error: " << e.what() << '\n';
            return kUsageError;
        }

        json_ = format == "json";
        try {
            if (table->parsed()) return do_table(validate_path);
            SphereTable tbl = resolve_table(table_path);
            if (hall->parsed()) return do_hall(generators, max_weight);
            if (pi->parsed()) return do_pi(m, space_text, tbl);
            if (cobc->parsed()) {
                if (codim < 1 || codim > m) throw domain_error("codim must lie in [1, m]");
                ThomStructure theta = structure_for(structure, codim, "θ");
                return emit(ptc::cob(m, theta, !generic_ambient, tbl));
            }
            if (lcobc->parsed()) {
                check_pair(m, k1, k2, false);
                ThomStructure theta = structure_for(structure, m - k1, "θ");
                ThomStructure theta_prime = structure_for(structure_prime, m - k2, "θ′");
                return emit(ptc::lcob(m, theta_prime, theta, tbl));
            }
            if (ncobc->parsed()) {
                check_pair(m, k1, k2, true);
                ThomStructure theta = structure_for(structure, m - k1, "θ");
                ThomStructure theta_prime = structure_for(structure_prime, k1 - k2, "θ′");
                return emit(ptc::ncob(m, theta_prime, theta, tbl));
            }
            if (nested->parsed()) return do_nested(m, dims, structures, tbl);
            if (stable->parsed()) return do_stable(k, stable_k2, structure, structure_prime, tbl);
        } catch (const CLI::ValidationError& e) {
            err_ << "usage error: " << e.what() << '\n';
            return kUsageError;
        } catch (const domain_error& e) {
            err_ << "error: " << e.what() << '\n';
            return kDomainError;
        } catch (const parse_error& e) {
            err_ << "error: " << e.what() << '\n';
            return kDomainError;
        } catch (const resource_error& e) {
            err_ << "error: " << e.what() << '\n';
            return kDomainError;
        }
        return kUsageError;
    }

private:
    static SphereTable resolve_table(const std::string& path) {
        if (!path.empty()) return load_table(path);
        if (const char* env = std::getenv(kTableEnv); env != nullptr && *env != '\0') return load_table(env);
        return default_table();
    }

    static void check_pair(int m, int k1, int k2, bool nested) {
        if (m < 1) throw domain_error("m must be positive");
        if (nested) {
            if (!(0 <= k2 && k2 < k1 && k1 < m))
                throw domain_error("nested dimensions need 0 <= k2 < k1 < m");
        } else if (!(0 <= k1 && k1 < m && 0 <= k2 && k2 < m)) {
            throw domain_error("link dimensions need 0 <= k1, k2 < m");
        }
    }

    int emit(const CobordismAnswer& a) {
        if (json_) out_ << answer_json(a).dump(2) << '\n';
        else print_answer(out_, a);
        return kOk;
    }

    int do_table(const std::string& path) {
        SphereTable t = load_table(path);
        if (json_) {
            out_ << nlohmann::json{{"valid", true},
                                   {"stable", t.stable_stems().size()},
                                   {"unstable", t.unstable_entries().size()}}
                        .dump(2)
                 << '\n';
        } else {
            out_ << "ok: " << t.stable_stems().size() << " stable, " << t.unstable_entries().size()
                 << " unstable entries\n";
        }
        return kOk;
    }

    int do_hall(int g, int w) {
        ProductSystem sys = generate_system(g, w);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : sys.products()) {
            if (json_) {
                arr.push_back({{"weight", p.weight()}, {"degree", p.multidegree()}, {"bracket", p.str()}});
                continue;
            }
            out_ << "w=" << p.weight() << " deg=(";
            for (std::size_t i = 0; i < p.multidegree().size(); ++i) out_ << (i ? "," : "") << p.multidegree()[i];
            out_ << ") " << p.str() << '\n';
        }
        if (json_) out_ << arr.dump(2) << '\n';
        return kOk;
    }

    int do_pi(int m, const std::string& text, const SphereTable& tbl) {
        SpaceExpr term = parse_space(text);
        Decomposition d = pi_of_wedge(m, term, tbl);
        if (json_) {
            nlohmann::json j = decomposition_json(d);
            j["space"] = to_string(normalize(term));
            j["status"] = "group";
            out_ << j.dump(2) << '\n';
        } else {
            out_ << "space: " << to_string(normalize(term)) << '\n';
            print_summands(out_, d, nullptr);
            out_ << "total: " << render(d.total()) << '\n';
            out_ << "status: group\n";
        }
        return kOk;
    }

    int do_nested(int m, const std::vector<int>& dims, const std::vector<std::string>& specs, const SphereTable& tbl) {
        if (dims.empty()) throw domain_error("--dims needs at least one dimension");
        if (!specs.empty() && specs.size() != dims.size())
            throw domain_error("--structures needs one entry per dimension in --dims");
        // dims = k_r, ..., k_1 innermost first; outer rank m - k_1, inner k_{i} - k_{i+1}.
        for (std::size_t i = 0; i + 1 < dims.size(); ++i)
            if (!(dims[i] < dims[i + 1])) throw domain_error("--dims must be strictly increasing (innermost first)");
        if (dims.front() < 0 || dims.back() >= m) throw domain_error("--dims need 0 <= k_r and k_1 < m");
        std::vector<ThomStructure> chain;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            int outer_dim = i + 1 < dims.size() ? dims[i + 1] : m;
            std::string spec = specs.empty() ? std::string{} : specs[i];
            chain.push_back(structure_for(spec, outer_dim - dims[i], "level " + std::to_string(i + 1)));
        }
        return emit(nested_chain(m, chain, tbl));
    }

    int do_stable(int k, std::optional<int> k2, const std::string& spec, const std::string& spec_prime,
                  const SphereTable& tbl) {
        ThomStructure theta = spec.empty() ? ThomStructure::framed(1) : parse_structure(spec);
        if (!k2) return emit(stable_cob(k, theta, tbl));
        if (!(0 <= *k2 && *k2 < k)) throw domain_error("stable nested degrees need 0 <= k2 < k");
        ThomStructure theta_prime = structure_for(spec_prime, k - *k2, "θ′");
        return emit(stable_ncob(k, *k2, theta_prime, theta, tbl));
    }

    std::ostream& out_;
    std::ostream& err_;
    bool json_ = false;
};

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    return Runner(out, err).run(argc, argv);
}

} // namespace ptc::cli
