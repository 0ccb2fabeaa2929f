#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "atk/json_io.hpp"
#include "atk/transform.hpp"

namespace {

atk::Cycle parse_cycle(const std::string& text) {
    atk::Cycle out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::size_t a = piece.find_first_not_of(" \t");
        std::size_t b = piece.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw std::invalid_argument("empty entry in cycle '" + text + "'");
        piece = piece.substr(a, b - a + 1);
        std::size_t digits = piece[0] == '-' ? 1 : 0;
        if (piece.size() == digits ||
            piece.find_first_not_of("0123456789", digits) != std::string::npos)
            throw std::invalid_argument("bad integer '" + piece + "' in cycle");
        out.emplace_back(piece);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

void emit(const atk::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toric calculus for boundary cycles of rational surface pairs"};
    app.require_subcommand(1);

    int search_default = atk::default_max_moves;
    if (const char* env = std::getenv("ATK_MAX_MOVES")) {
        int v = std::atoi(env);
        if (v > 0)
            search_default = v;
    }

    std::string fan_cycle;
    CLI::App* cmd_fan = app.add_subcommand("fan", "print the fan of a cycle, if one exists");
    cmd_fan->add_option("cycle", fan_cycle, "comma-separated entries")->required();

    std::string check_cycle;
    CLI::App* cmd_check = app.add_subcommand("check", "definiteness and numeric invariants");
    cmd_check->add_option("cycle", check_cycle, "comma-separated entries")->required();

    std::string charge_cycle;
    CLI::App* cmd_charge = app.add_subcommand("charge", "charge and degree of a cycle");
    cmd_charge->add_option("cycle", charge_cycle, "comma-separated entries")->required();

    std::string tr_cycle;
    int tr_up = 0, tr_down = 0;
    CLI::App* cmd_tr = app.add_subcommand("transform", "apply one elementary transformation");
    cmd_tr->add_option("cycle", tr_cycle, "comma-separated entries")->required();
    cmd_tr->add_option("--up", tr_up, "1-based component blown up on")->required();
    cmd_tr->add_option("--down", tr_down, "1-based component blown down at")->required();

    std::string path_start, path_target;
    int path_max = search_default;
    long long path_entry_min = atk::default_entry_min;
    CLI::App* cmd_path = app.add_subcommand("path", "shortest move sequence between cycles");
    cmd_path->add_option("start", path_start, "comma-separated entries")->required();
    cmd_path->add_option("target", path_target, "comma-separated entries")->required();
    cmd_path->add_option("--max-moves", path_max, "search depth bound");
    cmd_path->add_option("--entry-min", path_entry_min, "smallest entry explored");

    CLI::App* cmd_models = app.add_subcommand("models", "list the five standard toric models");

    std::string pi1_model, pi1_marks;
    CLI::App* cmd_pi1 = app.add_subcommand("pi1", "fundamental group of a marked model");
    cmd_pi1->add_option("--model", pi1_model, "T6|T7|Ti|Tii|T9")->required();
    cmd_pi1->add_option("--marks", pi1_marks, "comma-separated mark multiplicities")->required();

    std::string vt_mode = "auto";
    int vt_table = 0;
    bool vt_lenient = false, vt_parallel = false;
    CLI::App* cmd_vt = app.add_subcommand("verify-tables", "replay the bundled contraction tables");
    cmd_vt->add_option("--mode", vt_mode, "literal|swapped|auto")
        ->check(CLI::IsMember({"literal", "swapped", "auto"}));
    cmd_vt->add_option("--table", vt_table, "restrict to one table (7, 8 or 9)")
        ->check(CLI::IsMember({7, 8, 9}));
    cmd_vt->add_flag("--lenient", vt_lenient, "exit 0 even when rows fail");
    cmd_vt->add_flag("--parallel", vt_parallel, "replay rows concurrently");

    std::string cl_cycle;
    CLI::App* cmd_cl = app.add_subcommand("classify", "count deformation types of a cycle");
    cmd_cl->add_option("cycle", cl_cycle, "comma-separated entries")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_fan->parsed()) {
            atk::Cycle c = parse_cycle(fan_cycle);
            atk::Fan f = atk::fan_from_cycle(c);
            atk::ordered_json out;
            out["cycle"] = atk::json_cycle(c);
            out["rays"] = atk::json_fan(f);
            emit(out);
        } else if (cmd_check->parsed()) {
            emit(atk::json_invariants(parse_cycle(check_cycle)));
        } else if (cmd_charge->parsed()) {
            atk::Cycle c = parse_cycle(charge_cycle);
            atk::PairInvariants inv = atk::invariants_of(c);
            atk::ordered_json out;
            out["cycle"] = atk::json_cycle(c);
            out["d_squared"] = atk::json_int(inv.d_squared);
            out["charge"] = atk::json_int(inv.charge);
            out["toric"] = atk::toric_realizable(c);
            emit(out);
        } else if (cmd_tr->parsed()) {
            atk::Cycle c = parse_cycle(tr_cycle);
            atk::Move m{tr_up - 1, tr_down - 1};
            atk::Cycle r = atk::elem_transform(c, m);
            atk::ordered_json out;
            out["start"] = atk::json_cycle(c);
            out["move"] = atk::json_move(m);
            out["result"] = atk::json_cycle(r);
            emit(out);
        } else if (cmd_path->parsed()) {
            atk::Cycle s = parse_cycle(path_start);
            atk::Cycle t = parse_cycle(path_target);
            std::optional<atk::Path> p = atk::find_path(s, t, path_max, atk::Int(path_entry_min));
            if (!p)
                atk::fail(atk::errc::not_found_within_bounds,
                          "no move sequence within " + std::to_string(path_max) + " moves");
            emit(atk::json_path(*p));
        } else if (cmd_models->parsed()) {
            atk::ordered_json out = atk::ordered_json::array();
            for (const atk::StandardModel& m : atk::standard_models())
                out.push_back(atk::json_model(m));
            emit(out);
        } else if (cmd_pi1->parsed()) {
            std::optional<atk::ModelName> name = atk::parse_model_name(pi1_model);
            if (!name)
                throw std::invalid_argument("unknown model '" + pi1_model + "'");
            const atk::StandardModel& m = atk::standard_model(*name);
            atk::MarkedPair p = atk::make_marked_pair(m.fan, parse_cycle(pi1_marks));
            atk::ordered_json out;
            out["model"] = atk::to_string(*name);
            atk::ordered_json marks = atk::ordered_json::array();
            for (const atk::Int& v : p.marks)
                marks.push_back(atk::json_int(v));
            out["marks"] = marks;
            out["pi1"] = atk::json_group(atk::fundamental_group(p));
            emit(out);
        } else if (cmd_vt->parsed()) {
            atk::ReplayMode mode = *atk::parse_replay_mode(vt_mode);
            atk::VerifySummary sum = atk::verify_all(mode, vt_table, vt_parallel);
            for (const atk::ReplayReport& r : sum.reports)
                std::cout << atk::json_replay_report(r).dump() << "\n";
            std::cerr << "mode " << atk::to_string(mode) << ", " << sum.reports.size()
                      << " rows: " << sum.n_literal << " literal, " << sum.n_swapped
                      << " swapped, " << sum.n_per_move << " per-move, " << sum.n_search
                      << " by search, " << sum.n_fail << " failed\n";
            for (const atk::ReplayReport& r : sum.reports)
                if (r.status == atk::ReplayStatus::fail)
                    std::cerr << "FAIL table " << r.table_id << " row " << r.row_index << " "
                              << r.label << ": " << r.notes << "\n";
            if (!sum.all_ok && !vt_lenient)
                return 1;
        } else if (cmd_cl->parsed()) {
            atk::Cycle c = parse_cycle(cl_cycle);
            atk::TypeCount t = atk::deformation_types(c);
            emit(atk::json_type_count(c, t));
        }
        return 0;
    } catch (const atk::domain_error& e) {
        std::cerr << atk::json_error(e).dump() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
}
