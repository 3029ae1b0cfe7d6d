#include "seatstorm/experiments.hpp"

#include <iomanip>
#include <ostream>
#include <random>
#include <stdexcept>

#include "seatstorm/solvers_multi.hpp"

namespace seatstorm {

std::vector<Rational> default_threshold_grid() {
    // 0 .. 12 percent in 0.05% steps
    std::vector<Rational> grid;
    for (int i = 0; i <= 240; ++i) grid.push_back(Rational(i, 20));
    return grid;
}

SweepResult threshold_sweep(const TopChoiceProfile& profile, int seats, int star,
                            const Rational& budget_fraction, const Method& method,
                            Direction direction, const std::vector<Rational>& grid_percent) {
    const Votes n = profile.total();
    if (n < 1) throw std::invalid_argument("threshold sweep needs ballots");
    const Votes budget = (budget_fraction * Rational(n)).floor();

    SweepResult result;
    result.direction = direction;
    result.budget_fraction = budget_fraction;
    for (const Rational& pct : grid_percent) {
        const Votes tau = resolve_threshold(ThresholdSpec::relative(pct / Rational(100)), n);
        Election e = Election::single(profile, tau, seats);
        SweepPoint p;
        p.threshold_percent = pct;
        p.seat_delta = max_seat_delta(e, method, star, direction, budget);
        result.points.push_back(p);
    }
    return result;
}

namespace {

// Fixed-point percent with two decimals; the default grid steps by 0.05, so
// the representation is exact and byte-stable across runs.
std::string percent_str(const Rational& pct) {
    Rational scaled = pct * Rational(100);
    if (!scaled.is_integer()) throw std::invalid_argument("grid percent finer than 0.01");
    std::int64_t hundredths = scaled.num();
    std::string sign = hundredths < 0 ? "-" : "";
    if (hundredths < 0) hundredths = -hundredths;
    std::string frac = std::to_string(hundredths % 100);
    if (frac.size() < 2) frac = "0" + frac;
    return sign + std::to_string(hundredths / 100) + "." + frac;
}

}  // namespace

void write_sweep_dat(const SweepResult& result, std::ostream& os) {
    for (const auto& p : result.points)
        os << percent_str(p.threshold_percent) << " " << p.seat_delta << "\n";
}

Election merged_election(const Election& election, const ThresholdSpec& threshold,
                         std::uint64_t seed, int trial, int target_districts) {
    if (target_districts < 1 || target_districts > static_cast<int>(election.districts.size()))
        throw std::invalid_argument("target district count out of range");
    // one documented generator: mt19937_64 over (seed, trial)
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1));
    Election e = election;
    while (static_cast<int>(e.districts.size()) > target_districts) {
        const std::size_t live = e.districts.size();
        std::size_t i = static_cast<std::size_t>(rng() % live);
        std::size_t j = static_cast<std::size_t>(rng() % (live - 1));
        if (j >= i) ++j;
        if (i > j) std::swap(i, j);
        District& a = e.districts[i];
        const District& b = e.districts[j];
        if (a.profile.counts.size() < b.profile.counts.size())
            a.profile.counts.resize(b.profile.counts.size(), 0);
        for (std::size_t p = 0; p < b.profile.counts.size(); ++p)
            a.profile.counts[p] += b.profile.counts[p];
        a.seats += b.seats;
        e.districts.erase(e.districts.begin() + static_cast<std::ptrdiff_t>(j));
        a.threshold = resolve_threshold(threshold, a.profile.total());
    }
    return e;
}

MergeReport district_merge_experiment(const Election& election, const ThresholdSpec& threshold,
                                      const Method& method, int star, Direction direction,
                                      const MergePlan& plan) {
    MergeReport report;
    report.direction = direction;

    const SeatAllocation now = evaluate_election(election, method);
    const int held = now.seats[static_cast<std::size_t>(star)];
    if (direction == Direction::Constructive) {
        report.goal_seats = election.total_seats() / 2 + 1;
        report.seat_change = report.goal_seats - held;
        if (report.seat_change <= 0)
            throw std::invalid_argument("distinguished party already holds a majority");
    } else {
        if (held < 1) throw std::invalid_argument("distinguished party holds no seat to lose");
        report.goal_seats = held / 2;  // lose half of the original seats
        report.seat_change = held - report.goal_seats;
    }

    auto min_cost = [&](const Election& e) {
        BriberyInstance inst;
        inst.election = e;
        inst.method = method;
        inst.star = star;
        inst.direction = direction;
        inst.objective = Objective::seats(report.goal_seats);
        MultiBudgetResult r = min_budget(inst);
        if (r.budget.is_unbounded())
            throw std::runtime_error("merge experiment goal unreachable");
        return r.budget.value();
    };

    double original_mps = 0.0;
    {
        MergeRow row;
        row.districts = static_cast<int>(election.districts.size());
        Votes b = min_cost(election);
        row.trial_budgets = {b};
        row.average_budget = static_cast<double>(b);
        row.budget_per_seat = row.average_budget / report.seat_change;
        row.ratio_to_original = 1.0;
        original_mps = row.budget_per_seat;
        report.rows.push_back(row);
    }

    for (int target : plan.target_district_counts) {
        MergeRow row;
        row.districts = target;
        double sum = 0;
        for (int t = 0; t < plan.trials; ++t) {
            Election merged = merged_election(election, threshold, plan.seed, t, target);
            Votes b = min_cost(merged);
            row.trial_budgets.push_back(b);
            sum += static_cast<double>(b);
        }
        row.average_budget = sum / plan.trials;
        row.budget_per_seat = row.average_budget / report.seat_change;
        row.ratio_to_original = row.budget_per_seat / original_mps;
        report.rows.push_back(row);
    }
    return report;
}

EffectivenessReport effectiveness_experiment(const std::vector<CountrySpec>& countries,
                                             Direction direction) {
    EffectivenessReport report;
    for (const auto& country : countries) {
        report.countries.push_back(country.name);
        report.tables.push_back(effectiveness_ratios(country.election, country.method, direction));
    }
    return report;
}

void write_effectiveness_csv(const EffectivenessReport& report, std::ostream& os) {
    os << "country,strategy";
    if (!report.tables.empty())
        for (const auto& col : report.tables.front().columns) os << "," << col;
    os << "\n";
    os << std::fixed << std::setprecision(5);
    for (std::size_t c = 0; c < report.countries.size(); ++c) {
        const auto& table = report.tables[c];
        for (std::size_t s = 0; s < table.strategies.size(); ++s) {
            os << report.countries[c] << "," << strategy_name(table.strategies[s]);
            for (const auto& cell : table.cells[s]) os << "," << cell.ratio;
            os << "\n";
        }
    }
}

void write_merge_csv(const MergeReport& report, std::ostream& os) {
    os << "districts,average_budget,budget_per_seat,ratio,trial_budgets\n";
    os << std::fixed << std::setprecision(5);
    for (const auto& row : report.rows) {
        os << row.districts << "," << row.average_budget << "," << row.budget_per_seat << ","
           << row.ratio_to_original << ",";
        for (std::size_t i = 0; i < row.trial_budgets.size(); ++i)
            os << (i ? ";" : "") << row.trial_budgets[i];
        os << "\n";
    }
}

}  // namespace seatstorm
