// Command-line front end. Subcommands: check, decompose, realize,
// index-numeric, homology, lefschetz, growth. JSON in, JSON out; exit 0 on
// success, 1 on a mathematical rejection (with a JSON payload), 2 on
// input/usage errors (diagnostics on stderr).
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fpindex/json_io.hpp"
#include "fpindex/sphere_map.hpp"

using namespace fpindex;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;

struct DomainFailure {
    json payload;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const json& payload) {
    std::string text = payload.dump(2) + "\n";
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

json parse_json(const std::string& text) {
    return json::parse(text);  // throws json::parse_error on malformed input
}

// A sequence either given directly or generated by an integral decomposition
// over its full period.
PeriodicSequence sequence_from_input(const json& j) {
    if (j.is_object() && j.contains("coefficients")) {
        DoldDecomposition d = decomposition_from_json(j);
        if (!d.is_integral)
            throw DomainFailure{json{
                {"error", "decomposition has non-integral coefficients"},
                {"coefficients", decomposition_to_json(d)["coefficients"]}}};
        long long q = support_lcm(d);
        std::vector<long long> values;
        for (long long n = 1; n <= q; ++n)
            values.push_back(to_long_checked(evaluate(d, n).get_num()));
        return PeriodicSequence(q, std::move(values));
    }
    return sequence_from_json(j);
}

json check_payload(const PeriodicSequence& seq) {
    DoldDecomposition d = dold_coefficients(seq);
    DoldCheck check = check_dold(seq);
    json payload{{"dold", check.ok},
                 {"coefficients", decomposition_to_json(d)["coefficients"]}};
    if (check.witness)
        payload["witness"] = witness_to_json(*check.witness);
    return payload;
}

int cmd_check(const json& input, const std::string& out_path) {
    PeriodicSequence seq = sequence_from_input(input);
    json payload = check_payload(seq);
    write_output(out_path, payload);
    return payload.at("dold").get<bool>() ? kExitOk : kExitDomain;
}

int cmd_decompose(const json& input, const std::string& out_path) {
    PeriodicSequence seq = sequence_from_input(input);
    DoldDecomposition d = dold_coefficients(seq);
    json payload = decomposition_to_json(d);
    DoldCheck check = check_dold(seq);
    payload["dold"] = check.ok;
    if (check.ok)
        payload["roots_of_unity"] = root_form_to_json(roots_of_unity_form(seq));
    else if (check.witness)
        payload["witness"] = witness_to_json(*check.witness);
    write_output(out_path, payload);
    return kExitOk;
}

int cmd_realize(const json& input, const std::string& out_path) {
    PeriodicSequence seq = sequence_from_input(input);
    DoldCheck check = check_dold(seq);
    if (!check.ok) {
        json payload{{"error", "sequence fails the Dold congruences"},
                     {"witness", witness_to_json(*check.witness)}};
        write_output(out_path, payload);
        return kExitDomain;
    }
    RoundtripReport report = verify_roundtrip(seq);
    json table = json::array();
    for (const auto& row : report.table)
        table.push_back(json::array({row[0], row[1], row[2]}));
    json payload{{"plan", plan_to_json(plan_realization(seq))},
                 {"verification",
                  json{{"ok", report.ok},
                       {"checked_up_to", report.checked_up_to},
                       {"table", table}}}};
    write_output(out_path, payload);
    return report.ok ? kExitOk : kExitDomain;
}

int cmd_index_numeric(const std::string& map_id, const std::string& input_path,
                      long long n, double eps, int level, unsigned seed,
                      const std::string& out_path) {
    json payload;
    try {
        if (!map_id.empty()) {
            if (map_id == "anosov-suspension") {
                auto values = anosov_index_sequence(n);
                payload = json{{"index", values.back()},
                               {"note", "symbolic only"},
                               {"sequence", values}};
                write_output(out_path, payload);
                return kExitOk;
            }
            auto m = catalog_find(map_id);
            if (!m)
                throw std::invalid_argument("unknown catalog map: " + map_id);
            IndexReport r = fixed_point_index(m->map, n, eps, level);
            payload = json{{"index", r.index},
                           {"residual", r.residual},
                           {"level_used", r.level_used},
                           {"epsilon_check", r.epsilon_check}};
        } else {
            json input = parse_json(read_input(input_path));
            RealizationPlan plan =
                input.contains("plan") ? plan_from_json(input.at("plan")) : plan_from_json(input);
            SkewProductSpec spec = build_skew_product(plan, seed);
            IndexReport r = fixed_point_index(spec.as_space_map(), n, eps, level);
            payload = json{{"index", r.index},
                           {"residual", r.residual},
                           {"level_used", r.level_used},
                           {"epsilon_check", r.epsilon_check},
                           {"symbolic", index_sequence(plan, n)},
                           {"agrees", r.index == index_sequence(plan, n)}};
        }
    } catch (const MeshTooCoarse& e) {
        write_output(out_path, json{{"error", e.what()}, {"kind", "MeshTooCoarse"}});
        return kExitDomain;
    } catch (const DegenerateDisplacement& e) {
        write_output(out_path, json{{"error", e.what()}, {"kind", "DegenerateDisplacement"}});
        return kExitDomain;
    } catch (const GeometryOverlap& e) {
        write_output(out_path, json{{"error", e.what()}, {"kind", "GeometryOverlap"}});
        return kExitDomain;
    } catch (const PropertyPViolation& e) {
        write_output(out_path,
                     json{{"error", e.what()},
                          {"kind", "PropertyPViolation"},
                          {"witness", json::array({e.witness.x, e.witness.y, e.witness.z})}});
        return kExitDomain;
    }
    write_output(out_path, payload);
    return kExitOk;
}

int cmd_homology(const json& input, long long n_max, const std::string& out_path) {
    std::string warnings;
    SimplicialPair pair = pair_from_json(input, &warnings);
    if (!warnings.empty())
        std::cerr << warnings;
    auto groups = relative_homology(pair);
    json payload{{"homology", homology_to_json(groups)}};

    std::optional<ChainMap> map;
    if (input.is_object() && input.contains("map"))
        map = chain_map_from_json(input.at("map"));
    else if (input.is_object() && input.contains("vertex_map"))
        map = chain_map_from_vertex_map(pair, input.at("vertex_map").get<std::vector<int>>());
    if (map) {
        json lefschetz = json::array();
        for (long long n = 1; n <= n_max; ++n)
            lefschetz.push_back(lefschetz_number(*map, n).get_str());
        payload["lefschetz"] = lefschetz;
        const IntMatrix& m0 = map->matrices[0];
        const IntMatrix& m3 = map->matrices[3];
        if (m0.rows() == 1 && m0.cols() == 1 && m0.at(0, 0) == 1 && (m3.empty() || m3.is_zero())) {
            json table = json::array();
            for (long long n = 1; n <= n_max; ++n)
                table.push_back(index_from_traces(*map, n).get_str());
            payload["index_from_traces"] = table;
        }
    }
    write_output(out_path, payload);
    return kExitOk;
}

int cmd_lefschetz(const json& input, long long n_max, const std::string& out_path) {
    ChainMap map = chain_map_from_json(input);
    json lefschetz = json::array();
    for (long long n = 1; n <= n_max; ++n)
        lefschetz.push_back(lefschetz_number(map, n).get_str());
    write_output(out_path, json{{"lefschetz", lefschetz}});
    return kExitOk;
}

int cmd_growth(const json& input, const std::string& out_path) {
    std::vector<long long> samples;
    if (input.is_object() && input.contains("samples"))
        samples = input.at("samples").get<std::vector<long long>>();
    else if (input.is_array())
        samples = input.get<std::vector<long long>>();
    else
        throw std::invalid_argument("growth input needs a \"samples\" array");
    write_output(out_path, json{{"growth_exponent", growth_exponent(samples)}});
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis and realization of fixed-point index sequences"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string input_path = "-";
    std::string output_path = "-";
    unsigned seed = 0;
    app.add_option("--input", input_path, "input file, or - for stdin")->capture_default_str();
    app.add_option("--output", output_path, "output file, or - for stdout")->capture_default_str();
    app.add_option("--seed", seed, "seed for sampled verification grids");

    auto* check = app.add_subcommand("check", "Dold congruence check with certificate");
    auto* decompose =
        app.add_subcommand("decompose", "coefficients, integrality, roots-of-unity form");
    auto* realize = app.add_subcommand("realize", "realization plan plus round-trip table");

    auto* index_numeric =
        app.add_subcommand("index-numeric", "numerical fixed point index via sphere degree");
    std::string map_id;
    long long n = 1;
    double eps = 1e-2;
    int level = 4;
    index_numeric->add_option("--map", map_id, "catalog map id (omit to read a plan JSON)");
    index_numeric->add_option("--n", n, "iterate")->capture_default_str();
    index_numeric->add_option("--epsilon", eps, "sphere radius")->capture_default_str();
    index_numeric->add_option("--level", level, "icosphere subdivision level")
        ->capture_default_str();

    auto* homology = app.add_subcommand("homology", "relative homology and Lefschetz tables");
    long long n_max = 3;
    homology->add_option("--n-max", n_max, "table length")->capture_default_str();
    auto* lefschetz = app.add_subcommand("lefschetz", "Lefschetz numbers of explicit matrices");
    long long lefschetz_n_max = 3;
    lefschetz->add_option("--n-max", lefschetz_n_max, "table length")->capture_default_str();
    auto* growth = app.add_subcommand("growth", "tail growth exponent of a sample list");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return cmd_check(parse_json(read_input(input_path)), output_path);
        if (decompose->parsed())
            return cmd_decompose(parse_json(read_input(input_path)), output_path);
        if (realize->parsed())
            return cmd_realize(parse_json(read_input(input_path)), output_path);
        if (index_numeric->parsed())
            return cmd_index_numeric(map_id, input_path, n, eps, level, seed, output_path);
        if (homology->parsed())
            return cmd_homology(parse_json(read_input(input_path)), n_max, output_path);
        if (lefschetz->parsed())
            return cmd_lefschetz(parse_json(read_input(input_path)), lefschetz_n_max, output_path);
        if (growth->parsed())
            return cmd_growth(parse_json(read_input(input_path)), output_path);
    } catch (const DomainFailure& f) {
        write_output(output_path, f.payload);
        return kExitDomain;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
