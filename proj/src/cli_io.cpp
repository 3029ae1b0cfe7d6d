#include "seatstorm/cli_io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "seatstorm/crosscheck.hpp"
#include "seatstorm/oracle.hpp"
#include "seatstorm/solvers_multi.hpp"

namespace seatstorm {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

Votes parse_votes(const std::string& text, int line_no) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing characters");
        if (v < 0) throw std::invalid_argument("negative");
        return v;
    } catch (const std::exception&) {
        throw InputError("line " + std::to_string(line_no) + ": bad vote count '" + text + "'");
    }
}

}  // namespace

ElectionData load_election(const std::string& csv_path, const LoadOptions& options) {
    std::ifstream in(csv_path);
    if (!in) throw InputError("cannot open election file: " + csv_path);

    std::string line;
    if (!std::getline(in, line)) throw InputError(csv_path + ": empty file");
    {
        auto header = split(strip(line), ',');
        if (header.size() != 3 || strip(header[0]) != "district_id" ||
            strip(header[1]) != "party" || strip(header[2]) != "votes")
            throw InputError(csv_path + ": expected header 'district_id,party,votes'");
    }

    std::vector<std::string> district_ids;
    std::vector<std::string> party_names;
    std::map<std::string, std::size_t> district_index, party_index;
    std::map<std::pair<std::size_t, std::size_t>, Votes> counts;

    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (strip(line).empty()) continue;
        auto fields = split(line, ',');
        if (fields.size() != 3)
            throw InputError("line " + std::to_string(line_no) + ": expected 3 fields, got " +
                             std::to_string(fields.size()));
        std::string district = strip(fields[0]);
        std::string party = strip(fields[1]);
        if (district.empty() || party.empty())
            throw InputError("line " + std::to_string(line_no) + ": empty district or party");
        Votes votes = parse_votes(strip(fields[2]), line_no);
        if (!district_index.count(district)) {
            district_index[district] = district_ids.size();
            district_ids.push_back(district);
        }
        if (!party_index.count(party)) {
            party_index[party] = party_names.size();
            party_names.push_back(party);
        }
        counts[{district_index[district], party_index[party]}] += votes;
    }
    if (district_ids.empty()) throw InputError(csv_path + ": no election rows");

    // tie-break order: explicit list, or file order of first appearance
    std::vector<std::string> order = options.tie_break.empty() ? party_names : options.tie_break;
    if (!options.tie_break.empty()) {
        if (order.size() != party_names.size())
            throw InputError("tie-break list must name all " +
                             std::to_string(party_names.size()) + " parties");
        for (const auto& name : order)
            if (!party_index.count(name))
                throw InputError("tie-break list names unknown party '" + name + "'");
    }

    ElectionData data;
    data.district_ids = district_ids;
    std::map<std::size_t, int> remap;  // old party slot -> tie-break position
    for (std::size_t i = 0; i < order.size(); ++i) {
        remap[party_index[order[i]]] = static_cast<int>(i);
        data.parties.push_back(Party{static_cast<int>(i) + 1, order[i]});
    }

    data.election.num_parties = static_cast<int>(order.size());
    for (std::size_t dj = 0; dj < district_ids.size(); ++dj) {
        District d;
        d.profile.counts.assign(order.size(), 0);
        for (std::size_t p = 0; p < party_names.size(); ++p) {
            auto it = counts.find({dj, p});
            if (it != counts.end())
                d.profile.counts[static_cast<std::size_t>(remap[p])] = it->second;
        }
        auto seats_it = options.seats_by_district.find(district_ids[dj]);
        d.seats = seats_it != options.seats_by_district.end() ? seats_it->second
                                                              : options.default_seats;
        if (d.seats < 1)
            throw InputError("district '" + district_ids[dj] + "' needs at least one seat");
        d.threshold = resolve_threshold(options.threshold, d.profile.total());
        data.election.districts.push_back(std::move(d));
    }
    return data;
}

RankedElection load_ranked_ballots(const std::string& csv_path, const ElectionData& data,
                                   const LoadOptions& options) {
    std::ifstream in(csv_path);
    if (!in) throw InputError("cannot open ballot file: " + csv_path);

    std::map<std::string, int> party_pos;
    for (const auto& p : data.parties) party_pos[p.name] = p.index - 1;
    std::map<std::string, std::size_t> district_pos;
    for (std::size_t i = 0; i < data.district_ids.size(); ++i)
        district_pos[data.district_ids[i]] = i;

    RankedElection ranked;
    ranked.num_parties = static_cast<int>(data.parties.size());
    for (const auto& d : data.election.districts) {
        RankedDistrict rd;
        rd.seats = d.seats;
        rd.profile.num_parties = ranked.num_parties;
        ranked.districts.push_back(std::move(rd));
    }

    std::string line;
    if (!std::getline(in, line)) throw InputError(csv_path + ": empty file");
    {
        auto header = split(strip(line), ',');
        if (header.size() != 3 || strip(header[0]) != "district_id" ||
            strip(header[1]) != "multiplicity" || strip(header[2]) != "ranking")
            throw InputError(csv_path + ": expected header 'district_id,multiplicity,ranking'");
    }
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (strip(line).empty()) continue;
        auto fields = split(line, ',');
        if (fields.size() != 3)
            throw InputError("line " + std::to_string(line_no) + ": expected 3 fields");
        auto dit = district_pos.find(strip(fields[0]));
        if (dit == district_pos.end())
            throw InputError("line " + std::to_string(line_no) + ": unknown district '" +
                             strip(fields[0]) + "'");
        Votes mult = parse_votes(strip(fields[1]), line_no);
        if (mult < 1)
            throw InputError("line " + std::to_string(line_no) + ": multiplicity must be >= 1");

        RankedBallot ballot;
        ballot.multiplicity = mult;
        std::vector<bool> seen(party_pos.size(), false);
        for (const auto& name : split(strip(fields[2]), '>')) {
            auto pit = party_pos.find(strip(name));
            if (pit == party_pos.end())
                throw InputError("line " + std::to_string(line_no) + ": unknown party '" +
                                 strip(name) + "'");
            if (seen[static_cast<std::size_t>(pit->second)])
                throw InputError("line " + std::to_string(line_no) + ": party repeated in ranking");
            seen[static_cast<std::size_t>(pit->second)] = true;
            ballot.ranking.push_back(pit->second);
        }
        if (ballot.ranking.size() != party_pos.size())
            throw InputError("line " + std::to_string(line_no) +
                             ": ranking must cover every party");
        ranked.districts[dit->second].profile.ballots.push_back(std::move(ballot));
    }
    for (std::size_t j = 0; j < ranked.districts.size(); ++j) {
        ranked.districts[j].threshold =
            resolve_threshold(options.threshold, ranked.districts[j].profile.total());
    }
    return ranked;
}

void write_election_csv(const ElectionData& data, std::ostream& os) {
    os << "district_id,party,votes\n";
    for (std::size_t j = 0; j < data.election.districts.size(); ++j) {
        const auto& counts = data.election.districts[j].profile.counts;
        for (std::size_t p = 0; p < counts.size(); ++p)
            os << data.district_ids[j] << "," << data.parties[p].name << "," << counts[p]
               << "\n";
    }
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw InputError("config parse error: " + std::string(e.what()));
    }
    if (!doc.is_object()) throw InputError("config must be a JSON object");

    static const std::vector<std::string> known = {
        "method",    "divisors",  "threshold", "seats",        "default_seats",
        "tie_break", "mode",      "objective", "direction",    "star",
        "l",         "k",         "budget_fraction", "seed",   "merge_targets",
        "merge_trials"};
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw InputError("config: unknown key '" + it.key() + "'");
    }

    RunConfig cfg;
    auto get_string = [&](const char* key) -> std::optional<std::string> {
        if (!doc.contains(key)) return std::nullopt;
        if (!doc[key].is_string()) throw InputError(std::string("config: ") + key + " must be a string");
        return doc[key].get<std::string>();
    };
    cfg.method = get_string("method");
    cfg.threshold = get_string("threshold");
    cfg.mode = get_string("mode");
    cfg.objective = get_string("objective");
    cfg.direction = get_string("direction");
    cfg.star = get_string("star");
    cfg.budget_fraction = get_string("budget_fraction");
    if (doc.contains("divisors"))
        for (const auto& v : doc["divisors"]) cfg.divisors.push_back(v.get<std::string>());
    if (doc.contains("seats")) {
        if (doc["seats"].is_number_integer()) {
            cfg.default_seats = doc["seats"].get<int>();
        } else if (doc["seats"].is_object()) {
            for (auto it = doc["seats"].begin(); it != doc["seats"].end(); ++it)
                cfg.seats_by_district[it.key()] = it.value().get<int>();
        } else {
            throw InputError("config: seats must be an integer or an object");
        }
    }
    if (doc.contains("default_seats")) cfg.default_seats = doc["default_seats"].get<int>();
    if (doc.contains("tie_break"))
        for (const auto& v : doc["tie_break"]) cfg.tie_break.push_back(v.get<std::string>());
    if (doc.contains("l")) cfg.target_seats = doc["l"].get<int>();
    if (doc.contains("k")) cfg.budget = doc["k"].get<Votes>();
    if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("merge_targets"))
        for (const auto& v : doc["merge_targets"]) cfg.merge_targets.push_back(v.get<int>());
    if (doc.contains("merge_trials")) cfg.merge_trials = doc["merge_trials"].get<int>();
    return cfg;
}

namespace {

ThresholdSpec parse_threshold(const std::string& text) {
    if (text.rfind("abs:", 0) == 0)
        return ThresholdSpec::absolute(parse_votes(text.substr(4), 0));
    return ThresholdSpec::relative(Rational::parse(text));
}

Method parse_method(const std::string& name, const std::vector<std::string>& divisors) {
    if (name == "dhondt") return Method::dhondt();
    if (name == "sainte-lague") return Method::sainte_lague();
    if (name == "lrm") return Method::lrm();
    if (name == "fptp") return Method::fptp();
    if (name == "custom") {
        if (divisors.empty())
            throw InputError("custom method needs a divisor list");
        std::vector<Rational> values;
        for (const auto& v : divisors) values.push_back(Rational::parse(v));
        return Method::divisor(DivisorSequence::custom(std::move(values)));
    }
    throw InputError("unknown method '" + name + "' (dhondt, sainte-lague, lrm, fptp, custom)");
}

int parse_star(const std::string& text, const ElectionData& data) {
    for (const auto& p : data.parties)
        if (p.name == text) return p.index - 1;
    try {
        std::size_t pos = 0;
        int idx = std::stoi(text, &pos);
        if (pos == text.size() && idx >= 1 && idx <= static_cast<int>(data.parties.size()))
            return idx - 1;
    } catch (const std::exception&) {
    }
    throw InputError("unknown party '" + text + "'");
}

// options shared by most subcommands, merged with an optional config file;
// explicit flags win
struct CommonArgs {
    std::string election_file;
    std::string ranked_file;
    std::string config_file;
    std::string method = "dhondt";
    std::string threshold = "abs:0";
    std::string seats = "1";
    std::string mode = "top-choice";
    std::string tie_break;
    std::vector<std::string> divisors;
    bool method_set = false, threshold_set = false, seats_set = false, mode_set = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--election", args.election_file, "election CSV (district_id,party,votes)")
        ->required();
    cmd->add_option("--ranked", args.ranked_file,
                    "ranked ballots CSV (district_id,multiplicity,ranking)");
    cmd->add_option("--config", args.config_file, "JSON config file; flags override it");
    cmd->add_option("--method", args.method, "dhondt | sainte-lague | lrm | fptp | custom")
        ->each([&](const std::string&) { args.method_set = true; });
    cmd->add_option("--divisor", args.divisors, "custom divisor values (repeatable, exact)");
    cmd->add_option("--threshold", args.threshold,
                    "'abs:N' or a relative fraction like 0.05 or 1/150")
        ->each([&](const std::string&) { args.threshold_set = true; });
    cmd->add_option("--seats", args.seats, "seats per district: N or id=N,id=N")
        ->each([&](const std::string&) { args.seats_set = true; });
    cmd->add_option("--mode", args.mode, "top-choice | second-chance")
        ->each([&](const std::string&) { args.mode_set = true; });
    cmd->add_option("--tie-break", args.tie_break, "comma-separated party order");
}

struct LoadedRun {
    ElectionData data;
    Method method = Method::dhondt();
    std::string mode;
    RunConfig cfg;
};

LoadedRun load_run(CommonArgs& args) {
    LoadedRun run;
    if (!args.config_file.empty()) run.cfg = parse_config_file(args.config_file);

    std::string method = args.method_set || !run.cfg.method ? args.method : *run.cfg.method;
    std::string threshold =
        args.threshold_set || !run.cfg.threshold ? args.threshold : *run.cfg.threshold;
    std::string mode = args.mode_set || !run.cfg.mode ? args.mode : *run.cfg.mode;
    std::vector<std::string> divisors = args.divisors.empty() ? run.cfg.divisors : args.divisors;

    LoadOptions options;
    options.threshold = parse_threshold(threshold);
    options.seats_by_district = run.cfg.seats_by_district;
    if (run.cfg.default_seats) options.default_seats = *run.cfg.default_seats;
    if (args.seats_set || run.cfg.seats_by_district.empty()) {
        // "N" or "id=N,id=N"
        if (args.seats.find('=') == std::string::npos) {
            try {
                options.default_seats = std::stoi(args.seats);
            } catch (const std::exception&) {
                throw InputError("bad --seats value '" + args.seats + "'");
            }
        } else {
            for (const auto& part : split(args.seats, ',')) {
                auto kv = split(part, '=');
                if (kv.size() != 2) throw InputError("bad --seats entry '" + part + "'");
                try {
                    options.seats_by_district[strip(kv[0])] = std::stoi(kv[1]);
                } catch (const std::exception&) {
                    throw InputError("bad --seats entry '" + part + "'");
                }
            }
        }
    }
    if (!args.tie_break.empty()) {
        for (const auto& name : split(args.tie_break, ',')) options.tie_break.push_back(strip(name));
    } else {
        options.tie_break = run.cfg.tie_break;
    }

    run.data = load_election(args.election_file, options);
    run.method = parse_method(method, divisors);
    run.mode = mode;
    if (run.mode != "top-choice" && run.mode != "second-chance")
        throw InputError("unknown mode '" + run.mode + "'");
    if (run.mode == "second-chance") {
        if (args.ranked_file.empty())
            throw InputError("second-chance mode needs --ranked ballots");
        run.data.ranked = load_ranked_ballots(args.ranked_file, run.data, options);
    }
    return run;
}

void print_seats(const ElectionData& data, const SeatAllocation& seats, std::ostream& os) {
    os << "party            seats\n";
    for (std::size_t i = 0; i < data.parties.size(); ++i)
        os << std::left << std::setw(17) << data.parties[i].name
           << seats.seats[i] << "\n";
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw InputError("cannot write output file: " + path);
    return os;
}

void print_plan(const ElectionData& data, const CampaignPlan& plan, std::ostream& os) {
    if (plan.moves.empty()) {
        os << "no vote moves needed\n";
        return;
    }
    os << "vote moves (cost " << plan.cost() << "):\n";
    for (const auto& mv : plan.moves)
        os << "  " << data.district_ids[static_cast<std::size_t>(mv.district)] << ": "
           << mv.count << " x " << data.parties[static_cast<std::size_t>(mv.from)].name
           << " -> " << data.parties[static_cast<std::size_t>(mv.to)].name << "\n";
}

Direction parse_direction(const std::string& s) {
    if (s == "constructive") return Direction::Constructive;
    if (s == "destructive") return Direction::Destructive;
    throw InputError("unknown direction '" + s + "'");
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args) {
    CLI::App app{"apportionment elections: seat allocation and strategic campaigns"};
    app.require_subcommand(1);

    // apportion ----------------------------------------------------------
    CommonArgs ap_args;
    auto* ap = app.add_subcommand("apportion", "allocate seats for an election");
    add_common(ap, ap_args);
    std::string ap_out;
    ap->add_option("--out", ap_out, "also write the allocation as CSV");

    // bribe / min-budget ---------------------------------------------------
    CommonArgs br_args, mb_args;
    std::string br_star, br_direction = "constructive", br_objective = "seats";
    int br_l = 1;
    Votes br_k = 0;
    bool br_assert_yes = false;
    auto* br = app.add_subcommand("bribe", "decide a strategic-campaign instance");
    add_common(br, br_args);
    br->add_option("--star", br_star, "distinguished party (name or 1-based index)")->required();
    br->add_option("--direction", br_direction, "constructive | destructive");
    br->add_option("--objective", br_objective, "seats | winner");
    br->add_option("--l", br_l, "seat target for the seats objective");
    br->add_option("--k", br_k, "budget (number of vote changes)");
    br->add_flag("--assert-yes", br_assert_yes, "exit 1 on a NO decision");

    std::string mb_star, mb_direction = "constructive", mb_objective = "seats";
    int mb_l = 1;
    auto* mb = app.add_subcommand("min-budget", "minimal budget that flips the decision to YES");
    add_common(mb, mb_args);
    mb->add_option("--star", mb_star, "distinguished party")->required();
    mb->add_option("--direction", mb_direction, "constructive | destructive");
    mb->add_option("--objective", mb_objective, "seats | winner");
    mb->add_option("--l", mb_l, "seat target for the seats objective");

    // sweep ---------------------------------------------------------------
    CommonArgs sw_args;
    std::string sw_star, sw_direction = "constructive", sw_fraction = "0.0025", sw_out;
    auto* sw = app.add_subcommand("sweep", "seat delta across a threshold grid (.dat output)");
    add_common(sw, sw_args);
    sw->add_option("--star", sw_star, "distinguished party")->required();
    sw->add_option("--direction", sw_direction, "constructive | destructive");
    sw->add_option("--budget-fraction", sw_fraction, "budget as a fraction of the ballots");
    sw->add_option("--out", sw_out, "output .dat file")->required();

    // merge-experiment ------------------------------------------------------
    CommonArgs mg_args;
    std::string mg_star, mg_direction = "constructive", mg_targets, mg_out;
    std::uint64_t mg_seed = 1;
    int mg_trials = 3;
    auto* mg = app.add_subcommand("merge-experiment",
                                  "average optimal budgets under random district merging");
    add_common(mg, mg_args);
    mg->add_option("--star", mg_star, "distinguished party")->required();
    mg->add_option("--direction", mg_direction, "constructive | destructive");
    mg->add_option("--targets", mg_targets, "comma-separated target district counts")->required();
    mg->add_option("--seed", mg_seed, "RNG seed (mt19937_64)");
    mg->add_option("--trials", mg_trials, "trials per target count");
    mg->add_option("--out", mg_out, "output CSV file");

    // heuristics-compare ----------------------------------------------------
    CommonArgs hc_args;
    std::string hc_direction = "constructive", hc_out;
    auto* hc = app.add_subcommand("heuristics-compare",
                                  "effectiveness of simple strategies vs the optimal solver");
    add_common(hc, hc_args);
    hc->add_option("--direction", hc_direction, "constructive | destructive");
    hc->add_option("--out", hc_out, "output CSV file");

    // oracle-check ----------------------------------------------------------
    Votes oc_votes = 8;
    Votes oc_budget = 2;
    int oc_threads = 2;
    bool oc_multi = false;
    auto* oc = app.add_subcommand("oracle-check",
                                  "compare every solver against brute force on a small grid");
    oc->add_option("--max-votes", oc_votes, "total votes per instance");
    oc->add_option("--max-budget", oc_budget, "largest budget checked");
    oc->add_option("--threads", oc_threads, "worker threads");
    oc->add_flag("--multi", oc_multi, "also run the multi-district grid");

    std::vector<const char*> argv;
    argv.push_back("seatstorm");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return 0;
        }
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    auto run = [&]() -> int {
    if (ap->parsed()) {
        LoadedRun run = load_run(ap_args);
        std::vector<SeatAllocation> per_district;
        if (run.mode == "second-chance") {
            for (const auto& rd : run.data.ranked->districts) {
                ApportionmentProblem p;
                p.sigma = second_chance_support(rd.profile, rd.threshold);
                p.threshold = rd.threshold;
                p.seats = rd.seats;
                per_district.push_back(apportion(p, run.method));
            }
        } else {
            for (const auto& d : run.data.election.districts) {
                ApportionmentProblem p;
                p.sigma = top_choice_support(d.profile, d.threshold);
                p.threshold = d.threshold;
                p.seats = d.seats;
                per_district.push_back(apportion(p, run.method));
            }
        }
        SeatAllocation total = aggregate_districts(per_district);
        total.seats.resize(run.data.parties.size(), 0);
        print_seats(run.data, total, std::cout);
        if (!ap_out.empty()) {
            auto os = open_out(ap_out);
            os << "party,seats\n";
            for (std::size_t i = 0; i < run.data.parties.size(); ++i)
                os << run.data.parties[i].name << "," << total.seats[i] << "\n";
        }
        return 0;
    }

    if (br->parsed()) {
        LoadedRun run = load_run(br_args);
        int star = parse_star(br_star, run.data);
        Direction dir = parse_direction(br_direction);
        Objective obj = br_objective == "winner" ? Objective::winner() : Objective::seats(br_l);
        if (br_objective != "winner" && br_objective != "seats")
            throw InputError("unknown objective '" + br_objective + "'");
        bool yes = false;
        CampaignPlan plan;
        if (run.mode == "second-chance") {
            RankedBriberyInstance inst;
            inst.election = *run.data.ranked;
            inst.method = run.method;
            inst.star = star;
            inst.direction = dir;
            inst.objective = obj;
            inst.budget = br_k;
            OracleResult r = oracle_decide_second_chance(inst);
            yes = r.yes;
            std::cout << (yes ? "YES" : "NO") << "\n";
            if (yes) std::cout << "minimal budget " << r.min_budget << "\n";
        } else {
            BriberyInstance inst;
            inst.election = run.data.election;
            inst.method = run.method;
            inst.star = star;
            inst.direction = dir;
            inst.objective = obj;
            inst.budget = br_k;
            Decision dec = solve(inst);
            yes = dec.yes;
            plan = dec.plan;
            std::cout << (yes ? "YES" : "NO") << "\n";
            if (yes) print_plan(run.data, plan, std::cout);
        }
        return yes || !br_assert_yes ? 0 : 1;
    }

    if (mb->parsed()) {
        LoadedRun run = load_run(mb_args);
        if (run.mode == "second-chance")
            throw InputError("min-budget works in top-choice mode; use bribe for second-chance");
        BriberyInstance inst;
        inst.election = run.data.election;
        inst.method = run.method;
        inst.star = parse_star(mb_star, run.data);
        inst.direction = parse_direction(mb_direction);
        inst.objective =
            mb_objective == "winner" ? Objective::winner() : Objective::seats(mb_l);
        MultiBudgetResult r = min_budget(inst);
        if (r.budget.is_unbounded()) {
            std::cout << "infeasible\n";
        } else {
            std::cout << "minimal budget " << r.budget.value() << "\n";
            print_plan(run.data, r.plan, std::cout);
        }
        return 0;
    }

    if (sw->parsed()) {
        LoadedRun run = load_run(sw_args);
        if (run.data.election.districts.size() != 1)
            throw InputError("sweep expects a single-district election");
        SweepResult result = threshold_sweep(
            run.data.election.districts.front().profile, run.data.election.districts.front().seats,
            parse_star(sw_star, run.data), Rational::parse(sw_fraction), run.method,
            parse_direction(sw_direction));
        auto os = open_out(sw_out);
        write_sweep_dat(result, os);
        std::cout << "wrote " << result.points.size() << " grid points to " << sw_out << "\n";
        return 0;
    }

    if (mg->parsed()) {
        LoadedRun run = load_run(mg_args);
        MergePlan plan;
        plan.seed = mg_seed;
        plan.trials = mg_trials;
        for (const auto& part : split(mg_targets, ','))
            plan.target_district_counts.push_back(std::stoi(strip(part)));
        ThresholdSpec spec = parse_threshold(mg_args.threshold_set || run.cfg.threshold
                                                 ? (mg_args.threshold_set ? mg_args.threshold
                                                                          : *run.cfg.threshold)
                                                 : mg_args.threshold);
        MergeReport report =
            district_merge_experiment(run.data.election, spec, run.method,
                                      parse_star(mg_star, run.data),
                                      parse_direction(mg_direction), plan);
        if (mg_out.empty()) {
            write_merge_csv(report, std::cout);
        } else {
            auto os = open_out(mg_out);
            write_merge_csv(report, os);
            std::cout << "wrote " << report.rows.size() << " rows to " << mg_out << "\n";
        }
        return 0;
    }

    if (hc->parsed()) {
        LoadedRun run = load_run(hc_args);
        EffectivenessReport report;
        report.countries.push_back(hc_args.election_file);
        report.tables.push_back(effectiveness_ratios(run.data.election, run.method,
                                                     parse_direction(hc_direction)));
        write_effectiveness_csv(report, std::cout);
        if (!hc_out.empty()) {
            auto os = open_out(hc_out);
            write_effectiveness_csv(report, os);
        }
        return 0;
    }

    if (oc->parsed()) {
        SingleGridSpec spec;
        spec.max_votes = oc_votes;
        spec.max_budget = oc_budget;
        spec.threads = oc_threads;
        spec.check_lemma2 = true;
        CrossCheckReport rep = crosscheck_single_district(spec);
        if (oc_multi) {
            MultiGridSpec mspec;
            mspec.max_budget = oc_budget;
            mspec.threads = oc_threads;
            rep.merge(crosscheck_multi_district(mspec));
        }
        for (const auto& s : rep.samples) std::cout << "  " << s << "\n";
        if (rep.ok()) {
            std::cout << "all " << rep.decisions << " decisions agree with the oracle ("
                      << rep.lemma2_checks << " move-restriction checks)\n";
            return 0;
        }
        std::cout << rep.mismatches << " mismatches, " << rep.witness_failures
                  << " witness failures, " << rep.lemma2_violations
                  << " move-restriction violations out of " << rep.decisions << " decisions\n";
        return 1;
    }

    return 2;
    };

    try {
        return run();
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InstanceTooLargeError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace seatstorm
