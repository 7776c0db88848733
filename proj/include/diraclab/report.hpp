#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "diraclab/carleman.hpp"
#include "diraclab/clifford.hpp"
#include "diraclab/landis.hpp"
#include "diraclab/reduction2d.hpp"
#include "diraclab/regularity.hpp"

#include <json.hpp>

namespace diraclab {

// All numeric output is printed with 17 significant digits so that re-runs
// with the same config produce byte-identical bodies; anything
// time-dependent goes into '#' comment lines only.
std::string format_double(double v);

// RFC-4180-style escaping: fields containing comma, quote, or newline are
// quoted with internal quotes doubled.
std::string csv_escape(const std::string& field);

class CsvWriter {
  public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}
    void comment(const std::string& text);  // "# text" line, excluded from the body
    void row(const std::vector<std::string>& fields);

  private:
    std::ostream& out_;
};

// "# generated <UTC timestamp>" — the only place a timestamp may appear.
std::string timestamp_comment();

void carleman_csv(std::ostream& out, const std::vector<CarlemanReport>& reports,
                  bool with_timestamp = true);
void landis_csv(std::ostream& out, const VanishingCurve& curve, const LowerBoundReport& bound,
                bool with_timestamp = true);
void regularity_csv(std::ostream& out, const std::vector<RegularityReport>& reports,
                    bool with_timestamp = true);

// Two-column dump for external plotters.
void plot_xy(std::ostream& out, const std::vector<double>& x, const std::vector<double>& y);

// (index vector, N complex entries) per row.
void dump_field_csv(std::ostream& out, const SpinorField& u);
void dump_field_binary(std::ostream& out, const SpinorField& u);

nlohmann::json clifford_json(int n, const CliffordCheckReport& report);
nlohmann::json envelope_json(const EnvelopeFit& fit);
nlohmann::json reduction_json(const EffectiveScalar& red);
nlohmann::json system_residual_json(const SystemResidual& res);

} // namespace diraclab
