#include "lambdaosc/csv.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace lambdaosc {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_header(bool with_analytic) {
    std::string h =
        "axis,case,mean_n,mean_n_over_nbar,g2,Rz,pop1,pop2,pop3,"
        "n_max_used,converged,residual";
    if (with_analytic) h += ",rz_g0,pop1_g0,pop2_g0,pop3_g0";
    return h;
}

std::string csv_row(const SweepRow& r,
                    const std::optional<EmitterPopulations>& analytic) {
    std::ostringstream os;
    os << format_double(r.axis_value) << ',' << static_cast<int>(r.which)
       << ',' << format_double(r.obs.mean_n) << ','
       << format_double(r.obs.mean_n_over_nbar) << ','
       << format_double(r.obs.g2) << ',' << format_double(r.obs.Rz) << ','
       << format_double(r.obs.pop1) << ',' << format_double(r.obs.pop2) << ','
       << format_double(r.obs.pop3) << ',' << r.n_max_used << ','
       << (r.converged ? 1 : 0) << ',' << format_double(r.residual);
    if (analytic) {
        os << ',' << format_double(analytic->pop2 - analytic->pop3) << ','
           << format_double(analytic->pop1) << ','
           << format_double(analytic->pop2) << ','
           << format_double(analytic->pop3);
    }
    return os.str();
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows,
               const std::vector<std::optional<EmitterPopulations>>& analytic) {
    const bool with = !analytic.empty();
    os << csv_header(with) << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i)
        os << csv_row(rows[i], with ? analytic[i]
                                    : std::optional<EmitterPopulations>{})
           << '\n';
}

std::string run_manifest_json(const std::string& config_json,
                              const std::vector<SweepRow>& rows) {
    nlohmann::json j;
    j["schema_version"] = kCsvSchemaVersion;
    j["code_version"] = LAMBDAOSC_VERSION;
    j["config"] = nlohmann::json::parse(config_json);
    auto status = nlohmann::json::array();
    for (const auto& r : rows) {
        status.push_back({{"axis", r.axis_value},
                          {"case", static_cast<int>(r.which)},
                          {"n_max_used", r.n_max_used},
                          {"converged", r.converged},
                          {"failed", r.failed},
                          {"error", r.error}});
    }
    j["rows"] = status;
    return j.dump(2);
}

} // namespace lambdaosc
