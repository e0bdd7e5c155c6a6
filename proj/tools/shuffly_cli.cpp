// Batch front end: parse diagrams and elements, run verification campaigns,
// emit deterministic JSON reports.
//
// Exit codes: 0 success (zero failures), 1 check failures, 2 usage/schema
// errors, 3 exact-division violation (internal invariant), 4 not-in-span.

#include "shuffly/decompose.hpp"
#include "shuffly/json_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using nlohmann::json;
using namespace shuffly;

void write_report(const std::string& out_path, const json& report) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw shuffly_error("cannot open output file " + out_path);
    os << report.dump(2) << "\n";
}

json load_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw schema_error("cannot open " + path);
    json j;
    try {
        is >> j;
    } catch (const json::exception& e) {
        throw schema_error(std::string("invalid JSON: ") + e.what());
    }
    return j;
}

struct timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

int finish_campaign(const std::string& command, const dynkin_diagram& d, const json& params,
                    const std::vector<check_record>& records, const std::string& out_path,
                    const timer& t) {
    size_t failures = 0;
    for (const check_record& r : records)
        if (!r.pass) ++failures;
    json report{{"command", command},
                {"diagram", d.parities()},
                {"parameters", params},
                {"checks", check_records_to_json(records)},
                {"failures", failures}};
    write_report(out_path, report);
    // Timing is reported out of band so the JSON stays byte-identical
    // across runs and parallelism settings.
    std::cerr << command << ": " << records.size() << " checks, " << failures << " failures, "
              << t.ms() << " ms\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shuffly: exact shuffle superalgebra toolkit"};
    app.require_subcommand(1);

    std::string parities, out_path, case_name = "rational";
    int max_mode = 3;

    auto* verify = app.add_subcommand("verify", "run a relation-kernel campaign");
    verify->add_option("--case", case_name, "rational|trig")
        ->check(CLI::IsMember({"rational", "trig"}));
    verify->add_option("--parities", parities, "diagram parity string, e.g. 011")->required();
    verify->add_option("--max-mode", max_mode, "mode window");
    verify->add_option("--out", out_path, "report path (stdout when omitted)");

    std::string file_a, file_b;
    bool naive = false;
    auto* shuffle = app.add_subcommand("shuffle", "star product of two element files");
    shuffle->add_option("a", file_a, "first element JSON")->required();
    shuffle->add_option("b", file_b, "second element JSON")->required();
    shuffle->add_flag("--naive", naive, "use the full-symmetrization oracle path");
    shuffle->add_option("--out", out_path, "output path (stdout when omitted)");

    std::string file_el, dspec;
    auto* specialize = app.add_subcommand("specialize", "apply phi_d to an element");
    specialize->add_option("element", file_el, "element JSON")->required();
    specialize->add_option("--d", dspec, "degree vector, e.g. a1..2:1,a1..1:2")->required();
    specialize->add_option("--out", out_path, "output path");

    auto* isgood = app.add_subcommand("isgood", "good-element membership");
    isgood->add_option("element", file_el, "element JSON")->required();
    isgood->add_option("--out", out_path, "output path");

    auto* isintegral = app.add_subcommand("isintegral", "integral-element membership");
    isintegral->add_option("element", file_el, "element JSON")->required();
    isintegral->add_option("--out", out_path, "output path");

    auto* decompose = app.add_subcommand("decompose", "PBW decomposition of a good element");
    decompose->add_option("element", file_el, "element JSON")->required();
    decompose->add_option("--out", out_path, "output path");

    int k_max = 3, mode_max = 4;
    auto* independence = app.add_subcommand("independence", "rank-1 basis independence");
    independence->add_option("--parities", parities, "two-character parity string")->required();
    independence->add_option("--k-max", k_max, "maximal product length");
    independence->add_option("--max-mode", mode_max, "mode window");
    independence->add_option("--out", out_path, "report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    timer t;
    try {
        if (verify->parsed()) {
            dynkin_diagram d(parities);
            std::vector<check_record> records =
                case_name == "rational" ? verify_positive_relations(d, max_mode)
                                        : verify_quantum_relations(d, max_mode);
            json params{{"case", case_name}, {"max_mode", max_mode}};
            return finish_campaign("verify", d, params, records, out_path, t);
        }

        if (shuffle->parsed()) {
            shuffle_element a = element_from_json(load_json(file_a));
            shuffle_element b = element_from_json(load_json(file_b));
            if (a.mode() != b.mode())
                throw schema_error("shuffle: elements have different algebra modes");
            shuffle_element prod =
                a.mode() == algebra_mode::rational
                    ? (naive ? star_naive(a, b) : star(a, b))
                    : (naive ? star_trig_naive(a, b) : star_trig(a, b));
            write_report(out_path, element_to_json(prod));
            return 0;
        }

        if (specialize->parsed()) {
            shuffle_element f = element_from_json(load_json(file_el));
            degree_vector dd;
            std::stringstream ss(dspec);
            std::string item;
            while (std::getline(ss, item, ',')) {
                auto colon = item.rfind(':');
                if (colon == std::string::npos) throw schema_error("--d: expected root:mult");
                auto beta = root_interval::parse(item.substr(0, colon));
                if (!beta) throw schema_error("--d: bad root " + item);
                int mult = 0;
                try {
                    mult = std::stoi(item.substr(colon + 1));
                } catch (const std::exception&) {
                    throw schema_error("--d: bad multiplicity in " + item);
                }
                if (mult < 0) throw schema_error("--d: negative multiplicity in " + item);
                dd.set(*beta, dd.at(*beta) + mult);
            }
            specialization_result r = phi(f, dd);
            write_report(out_path, specialization_to_json(r));
            return 0;
        }

        if (isgood->parsed()) {
            shuffle_element f = element_from_json(load_json(file_el));
            good_report rep = is_good(f);
            json jr{{"good", rep.good}};
            if (rep.witness) {
                json w = json::array();
                for (const auto& [beta, mult] : rep.witness->support())
                    w.push_back(json::array({beta.name(), mult}));
                jr["witness"] = w;
            }
            write_report(out_path, jr);
            return rep.good ? 0 : 1;
        }

        if (isintegral->parsed()) {
            shuffle_element f = element_from_json(load_json(file_el));
            bool ok = is_integral(f);
            write_report(out_path, json{{"integral", ok}});
            return ok ? 0 : 1;
        }

        if (decompose->parsed()) {
            shuffle_element f = element_from_json(load_json(file_el));
            decomposition dec = decompose_good(f);
            write_report(out_path, decomposition_to_json(dec));
            return 0;
        }

        if (independence->parsed()) {
            dynkin_diagram d(parities);
            if (d.colors() != 1) throw schema_error("independence: need a length-2 diagram");
            json ranks = json::array();
            bool all_full = true;
            for (int k = 1; k <= k_max; ++k) {
                rank1_report rep = rank1_independence(d, k, mode_max);
                all_full = all_full && rep.full();
                ranks.push_back(
                    json{{"k", k}, {"rank", rep.rank}, {"expected", rep.expected}});
            }
            write_report(out_path, json{{"parities", d.parities()}, {"ranks", ranks}});
            return all_full ? 0 : 1;
        }
    } catch (const schema_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const not_divisible& e) {
        std::cerr << "internal divisibility violation: " << e.what() << "\n";
        return 3;
    } catch (const not_in_span& e) {
        std::cerr << "not in span: " << e.what() << "\n";
        return 4;
    } catch (const shuffly_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
