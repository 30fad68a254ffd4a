#include "lambdaosc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "lambdaosc/solver.hpp"

namespace lambdaosc {

std::vector<double> SweepConfig::uniform_grid(double lo, double hi,
                                              int points) {
    if (points < 1) throw std::invalid_argument("grid needs >= 1 point");
    std::vector<double> g(points);
    if (points == 1) {
        g[0] = lo;
        return g;
    }
    for (int i = 0; i < points; ++i)
        g[i] = lo + (hi - lo) * double(i) / double(points - 1);
    return g;
}

PhysicalParams apply_axis(const PhysicalParams& base, const std::string& axis,
                          double value) {
    PhysicalParams p = base;
    if (axis == "omega23_over_2Omega0")
        p.omega23 = 2.0 * p.Omega0 * value;
    else if (axis == "omega23")
        p.omega23 = value;
    else if (axis == "omega")
        p.omega = value;
    else if (axis == "Omega0")
        p.Omega0 = value;
    else if (axis == "g")
        p.g = value;
    else if (axis == "gamma")
        p.gamma = value;
    else if (axis == "gamma2")
        p.gamma2 = value;
    else if (axis == "gamma3")
        p.gamma3 = value;
    else if (axis == "kappa")
        p.kappa = value;
    else if (axis == "nbar")
        p.nbar = value;
    else
        throw std::invalid_argument("unknown sweep axis: " + axis);
    return p;
}

namespace {

struct PointResult {
    Observables obs;
    double residual = 0;
};

PointResult solve_point(const PhysicalParams& p, Case which, int n_max,
                        const GeneratorVariants& v) {
    const DressedParams d = derive_dressed(p);
    const BaseRates b = base_rates(d, p.gamma2, p.gamma3, p.gamma);
    RateMatrix m;
    if (which == Case::I)
        m = assemble_case1(p, d,
                           case1_rates(b, d, p.gamma2, p.gamma3, p.gamma),
                           n_max, v);
    else
        m = assemble_case2(p, d,
                           case2_rates(b, d, p.gamma2, p.gamma3, p.gamma),
                           n_max, v);
    const SteadyStateResult ss = steady_state(m);
    return {reduce(ss.state, p.nbar), ss.residual};
}

bool close_rel(double a, double b, double tol) {
    if (std::isnan(a) && std::isnan(b)) return true;
    if (std::isnan(a) || std::isnan(b)) return false;
    return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1e-30});
}

} // namespace

SweepRow converge_nmax(const PhysicalParams& point, Case which,
                       const SweepConfig& cfg) {
    SweepRow row;
    row.which = which;
    const int floor_n = which == Case::II ? 2 : 1;
    int n = cfg.n_max_start > 0
                ? cfg.n_max_start
                : int(std::ceil(8.0 * (point.nbar + 1.0)));
    n = std::clamp(n, floor_n, cfg.n_max_cap);

    bool have_prev = false;
    PointResult prev;
    try {
        while (true) {
            PointResult cur;
            bool cur_ok = true;
            try {
                cur = solve_point(point, which, n, cfg.variants);
            } catch (const NonPhysical&) {
                cur_ok = false; // truncation too small, keep doubling
            }
            if (cur_ok) {
                if (have_prev &&
                    close_rel(prev.obs.mean_n, cur.obs.mean_n, cfg.conv_tol) &&
                    close_rel(prev.obs.g2, cur.obs.g2, cfg.conv_tol)) {
                    row.converged = true;
                    row.obs = cur.obs;
                    row.residual = cur.residual;
                    row.n_max_used = n;
                    return row;
                }
                prev = cur;
                have_prev = true;
            }
            if (n >= cfg.n_max_cap) {
                row.converged = false;
                if (have_prev) {
                    row.obs = prev.obs;
                    row.residual = prev.residual;
                    row.n_max_used = n;
                } else {
                    row.failed = true;
                    row.error = "no physical solution up to n_max_cap";
                }
                return row;
            }
            n = std::min(2 * n, cfg.n_max_cap);
        }
    } catch (const std::exception& e) {
        row.failed = true;
        row.converged = false;
        row.error = e.what();
        return row;
    }
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    if (cfg.grid.empty())
        throw std::invalid_argument("run_sweep: empty grid");
    std::vector<Case> cases;
    if (cfg.cases == CaseSelect::I || cfg.cases == CaseSelect::Both)
        cases.push_back(Case::I);
    if (cfg.cases == CaseSelect::II || cfg.cases == CaseSelect::Both)
        cases.push_back(Case::II);

    struct Task {
        Case which;
        double axis_value;
    };
    std::vector<Task> tasks;
    for (Case c : cases) {
        std::vector<double> sorted = cfg.grid;
        std::sort(sorted.begin(), sorted.end());
        for (double x : sorted) tasks.push_back({c, x});
    }

    std::vector<SweepRow> rows(tasks.size());
    const int jobs = std::max(1, cfg.jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t k = next.fetch_add(1);
            if (k >= tasks.size()) break;
            const Task& t = tasks[k];
            const PhysicalParams p =
                apply_axis(cfg.base, cfg.axis, t.axis_value);
            SweepRow row = converge_nmax(p, t.which, cfg);
            row.axis_value = t.axis_value;
            rows[k] = std::move(row);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::size_t failures = 0;
    for (const auto& r : rows) failures += r.failed ? 1 : 0;
    if (!rows.empty() && failures == rows.size())
        throw std::runtime_error("run_sweep: every grid point failed");
    return rows;
}

} // namespace lambdaosc
