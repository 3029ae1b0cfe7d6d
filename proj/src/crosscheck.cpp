#include "seatstorm/crosscheck.hpp"

#include <atomic>
#include <functional>
#include <sstream>
#include <random>
#include <thread>

#include "seatstorm/solvers_multi.hpp"
#include "seatstorm/solvers_single.hpp"

namespace seatstorm {

void CrossCheckReport::merge(const CrossCheckReport& other) {
    decisions += other.decisions;
    mismatches += other.mismatches;
    witness_failures += other.witness_failures;
    lemma2_checks += other.lemma2_checks;
    lemma2_violations += other.lemma2_violations;
    for (const auto& s : other.samples)
        if (samples.size() < 8) samples.push_back(s);
}

namespace {

std::vector<Method> grid_methods() {
    return {Method::dhondt(), Method::sainte_lague(), Method::lrm(), Method::fptp()};
}

void enumerate_compositions(int parties, Votes total_max,
                            const std::function<void(const std::vector<Votes>&)>& visit) {
    std::vector<Votes> counts(static_cast<std::size_t>(parties), 0);
    auto rec = [&](auto&& self, int i, Votes left) -> void {
        if (i == parties - 1) {
            counts[static_cast<std::size_t>(i)] = left;
            visit(counts);
            return;
        }
        for (Votes v = 0; v <= left; ++v) {
            counts[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, left - v);
        }
    };
    for (Votes n = 1; n <= total_max; ++n) rec(rec, 0, n);
}

std::string describe(const District& d, const Method& method, int star, Direction dir,
                     const Objective& obj, Votes k) {
    std::ostringstream os;
    os << method.name() << " tau=" << d.threshold << " kappa=" << d.seats << " counts=[";
    for (std::size_t i = 0; i < d.profile.counts.size(); ++i)
        os << (i ? "," : "") << d.profile.counts[i];
    os << "] star=" << star + 1
       << (dir == Direction::Constructive ? " constructive" : " destructive");
    if (obj.kind == Objective::Kind::Seats) os << " seats l=" << obj.ell;
    else os << " winner";
    os << " K=" << k;
    return os.str();
}

void check_base(const District& d, const Method& method, const SingleGridSpec& spec,
                CrossCheckReport& rep) {
    const int m = d.profile.parties();
    auto outcomes = enumerate_district_outcomes(d, spec.max_budget, method);

    BriberyInstance inst;
    inst.election = Election::single(d.profile, d.threshold, d.seats);
    inst.method = method;

    for (int star = 0; star < m; ++star) {
        inst.star = star;
        for (Direction dir : {Direction::Constructive, Direction::Destructive}) {
            inst.direction = dir;
            std::vector<Objective> objectives;
            const int lo = dir == Direction::Constructive ? 1 : 0;
            for (int ell = lo; ell <= d.seats; ++ell) objectives.push_back(Objective::seats(ell));
            if (spec.include_winner) objectives.push_back(Objective::winner());

            // restricted move family, for the Lemma 2 comparison
            std::vector<DistrictOutcome> restricted;
            const bool lemma2 = spec.check_lemma2 && method.is_divisor();
            if (lemma2)
                restricted = enumerate_district_outcomes(d, spec.max_budget, method,
                                                         MoveFamily::StarOnly, star, dir);

            for (const Objective& obj : objectives) {
                Cost oracle_min = Cost::unbounded();
                for (const auto& o : outcomes) {
                    SeatAllocation seats;
                    seats.seats = o.seats;
                    if (objective_satisfied(seats, star, dir, obj)) {
                        oracle_min = Cost(o.cost);
                        break;  // outcomes sorted by cost
                    }
                }
                inst.objective = obj;
                for (Votes k = 0; k <= spec.max_budget; ++k) {
                    inst.budget = k;
                    Decision dec = solve_single(inst);
                    rep.decisions += 1;
                    const bool expected = oracle_min.within(k);
                    if (dec.yes != expected) {
                        rep.mismatches += 1;
                        if (rep.samples.size() < 8)
                            rep.samples.push_back("decision mismatch (solver " +
                                                  std::string(dec.yes ? "YES" : "NO") +
                                                  ", oracle " + (expected ? "YES" : "NO") + "): " +
                                                  describe(d, method, star, dir, obj, k));
                    } else if (dec.yes && !plan_certifies(inst, dec.plan)) {
                        rep.witness_failures += 1;
                        if (rep.samples.size() < 8)
                            rep.samples.push_back("witness does not certify: " +
                                                  describe(d, method, star, dir, obj, k));
                    }
                }
                if (lemma2 && obj.kind == Objective::Kind::Seats) {
                    Cost restricted_min = Cost::unbounded();
                    for (const auto& o : restricted) {
                        SeatAllocation seats;
                        seats.seats = o.seats;
                        if (objective_satisfied(seats, star, dir, obj)) {
                            restricted_min = Cost(o.cost);
                            break;
                        }
                    }
                    rep.lemma2_checks += 1;
                    if (!(restricted_min == oracle_min)) {
                        rep.lemma2_violations += 1;
                        if (rep.samples.size() < 8)
                            rep.samples.push_back(
                                "restricted move family changes the optimum: " +
                                describe(d, method, star, dir, obj, spec.max_budget));
                    }
                }
            }
        }
    }
}

}  // namespace

namespace {

// minimal cost over the product of per-district outcome lists whose
// aggregated seats satisfy the objective (the oracle's inner fold)
Cost multi_oracle_min(const std::vector<std::vector<DistrictOutcome>>& outcomes, int parties,
                      Votes budget, int star, Direction dir, const Objective& obj) {
    Cost best = Cost::unbounded();
    std::vector<int> totals(static_cast<std::size_t>(parties), 0);
    auto dfs = [&](auto&& self, std::size_t j, Votes spent) -> void {
        if (j == outcomes.size()) {
            SeatAllocation agg;
            agg.seats = totals;
            if (objective_satisfied(agg, star, dir, obj)) best = min(best, Cost(spent));
            return;
        }
        for (const auto& o : outcomes[j]) {
            if (spent + o.cost > budget) break;
            if (best.within(spent + o.cost)) continue;
            for (std::size_t i = 0; i < o.seats.size(); ++i) totals[i] += o.seats[i];
            self(self, j + 1, spent + o.cost);
            for (std::size_t i = 0; i < o.seats.size(); ++i) totals[i] -= o.seats[i];
        }
    };
    dfs(dfs, 0, 0);
    return best;
}

std::string describe_multi(const Election& e, const Method& method, int star, Direction dir,
                           const Objective& obj, Votes k) {
    std::ostringstream os;
    os << method.name() << " q=" << e.districts.size() << " star=" << star + 1
       << (dir == Direction::Constructive ? " constructive" : " destructive");
    if (obj.kind == Objective::Kind::Seats) os << " seats l=" << obj.ell;
    else os << " winner";
    os << " K=" << k << " districts:";
    for (const auto& d : e.districts) {
        os << " [";
        for (std::size_t i = 0; i < d.profile.counts.size(); ++i)
            os << (i ? "," : "") << d.profile.counts[i];
        os << "|tau=" << d.threshold << ",k=" << d.seats << "]";
    }
    return os.str();
}

void check_multi_base(const Election& e, const Method& method, const MultiGridSpec& spec,
                      CrossCheckReport& rep) {
    const int m = e.num_parties;
    const int kappa = e.total_seats();

    std::vector<std::vector<DistrictOutcome>> outcomes(e.districts.size());
    for (std::size_t j = 0; j < e.districts.size(); ++j)
        outcomes[j] = enumerate_district_outcomes(e.districts[j], spec.max_budget, method);

    BriberyInstance inst;
    inst.election = e;
    inst.method = method;
    for (int star = 0; star < m; ++star) {
        inst.star = star;
        for (Direction dir : {Direction::Constructive, Direction::Destructive}) {
            inst.direction = dir;
            std::vector<Objective> objectives;
            const int lo = dir == Direction::Constructive ? 1 : 0;
            for (int ell = lo; ell <= kappa; ++ell) objectives.push_back(Objective::seats(ell));
            const bool check_winner =
                dir == Direction::Destructive && method.kind() == Method::Kind::Fptp;
            if (check_winner) objectives.push_back(Objective::winner());

            for (const Objective& obj : objectives) {
                inst.objective = obj;
                Cost oracle_min =
                    multi_oracle_min(outcomes, m, spec.max_budget, star, dir, obj);
                for (Votes k = 0; k <= spec.max_budget; ++k) {
                    inst.budget = k;
                    Decision dec;
                    if (obj.kind == Objective::Kind::Seats)
                        dec = dir == Direction::Constructive
                                  ? mab(e, method, star, obj.ell, k)
                                  : dmab(e, method, star, obj.ell, k);
                    else
                        dec = fptp_dmawb(e, star, k);
                    rep.decisions += 1;
                    const bool expected = oracle_min.within(k);
                    if (dec.yes != expected) {
                        rep.mismatches += 1;
                        if (rep.samples.size() < 8)
                            rep.samples.push_back("multi decision mismatch (solver " +
                                                  std::string(dec.yes ? "YES" : "NO") +
                                                  ", oracle " + (expected ? "YES" : "NO") +
                                                  "): " + describe_multi(e, method, star, dir, obj, k));
                    } else if (dec.yes && !plan_certifies(inst, dec.plan)) {
                        rep.witness_failures += 1;
                        if (rep.samples.size() < 8)
                            rep.samples.push_back("multi witness does not certify: " +
                                                  describe_multi(e, method, star, dir, obj, k));
                    }
                    // the guardrailed exhaustive winner search must match the
                    // polynomial FPTP algorithm as well
                    if (check_winner && obj.kind == Objective::Kind::Winner) {
                        Decision ws = winner_multi_search(e, method, star, dir, k);
                        rep.decisions += 1;
                        if (ws.yes != expected) {
                            rep.mismatches += 1;
                            if (rep.samples.size() < 8)
                                rep.samples.push_back(
                                    "winner_multi_search mismatch: " +
                                    describe_multi(e, method, star, dir, obj, k));
                        } else if (ws.yes && !plan_certifies(inst, ws.plan)) {
                            rep.witness_failures += 1;
                            if (rep.samples.size() < 8)
                                rep.samples.push_back("winner_multi_search witness: " +
                                                       describe_multi(e, method, star, dir, obj, k));
                        }
                    }
                }
            }
        }
    }
}

}  // namespace

CrossCheckReport crosscheck_multi_district(const MultiGridSpec& spec) {
    // Exhaustive enumeration over every vote distribution is astronomically
    // large for several districts, so the grid combines a full sweep over
    // small two-district elections with a seeded deterministic sample of the
    // whole bounded space.
    std::vector<Election> elections;

    std::vector<std::vector<Votes>> small_profiles;
    enumerate_compositions(2, 4, [&](const std::vector<Votes>& c) { small_profiles.push_back(c); });
    for (const auto& a : small_profiles)
        for (const auto& b : small_profiles)
            for (int ka = 1; ka <= 2; ++ka)
                for (int kb = 1; kb <= 2; ++kb)
                    for (Votes tau : spec.thresholds) {
                        Election e;
                        e.num_parties = 2;
                        e.districts.push_back(District{TopChoiceProfile{a}, tau, ka});
                        e.districts.push_back(District{TopChoiceProfile{b}, tau, kb});
                        elections.push_back(std::move(e));
                    }

    std::mt19937_64 rng(0x5ea75706u);
    for (int trial = 0; trial < 2500; ++trial) {
        Election e;
        const int q = spec.district_counts[rng() % spec.district_counts.size()];
        e.num_parties = 2 + static_cast<int>(rng() % (spec.max_parties - 1));
        for (int j = 0; j < q; ++j) {
            District d;
            d.profile.counts.resize(static_cast<std::size_t>(e.num_parties));
            Votes left = static_cast<Votes>(rng() % (spec.max_district_votes + 1));
            for (auto& c : d.profile.counts) {
                c = left > 0 ? static_cast<Votes>(rng() % (left + 1)) : 0;
                left -= c;
            }
            d.threshold = spec.thresholds[rng() % spec.thresholds.size()];
            d.seats = 1 + static_cast<int>(rng() % spec.max_district_seats);
            e.districts.push_back(std::move(d));
        }
        Votes total = e.total_votes();
        if (total == 0) continue;
        elections.push_back(std::move(e));
    }

    const auto methods = grid_methods();
    const int nthreads = std::max(1, spec.threads);
    std::vector<CrossCheckReport> parts(static_cast<std::size_t>(nthreads));
    std::atomic<std::size_t> next{0};
    auto worker = [&](int tid) {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= elections.size() * methods.size()) return;
            const Election& e = elections[i / methods.size()];
            const Method& method = methods[i % methods.size()];
            check_multi_base(e, method, spec, parts[static_cast<std::size_t>(tid)]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker, t);
    worker(0);
    for (auto& t : pool) t.join();

    CrossCheckReport rep;
    for (const auto& p : parts) rep.merge(p);
    return rep;
}

CrossCheckReport crosscheck_single_district(const SingleGridSpec& spec) {
    // materialize the base list, then distribute over threads
    struct Base {
        std::vector<Votes> counts;
        Votes tau;
        int kappa;
        int method;
    };
    std::vector<Base> bases;
    const auto methods = grid_methods();
    for (int m : spec.party_counts) {
        enumerate_compositions(m, spec.max_votes, [&](const std::vector<Votes>& counts) {
            for (Votes tau : spec.thresholds)
                for (int kappa : spec.seat_counts)
                    for (int mi = 0; mi < static_cast<int>(methods.size()); ++mi)
                        bases.push_back(Base{counts, tau, kappa, mi});
        });
    }

    const int nthreads = std::max(1, spec.threads);
    std::vector<CrossCheckReport> parts(static_cast<std::size_t>(nthreads));
    std::atomic<std::size_t> next{0};
    auto worker = [&](int tid) {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= bases.size()) return;
            const Base& b = bases[i];
            District d;
            d.profile.counts = b.counts;
            d.threshold = b.tau;
            d.seats = b.kappa;
            check_base(d, methods[static_cast<std::size_t>(b.method)], spec,
                       parts[static_cast<std::size_t>(tid)]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker, t);
    worker(0);
    for (auto& t : pool) t.join();

    CrossCheckReport rep;
    for (const auto& p : parts) rep.merge(p);
    return rep;
}

}  // namespace seatstorm
