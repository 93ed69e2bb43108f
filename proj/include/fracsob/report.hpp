#ifndef FRACSOB_REPORT_HPP
#define FRACSOB_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include "fracsob/grid.hpp"

namespace fracsob {

/// One inequality/identity check: measured left side, reference right side,
/// their ratio, the parameters, and the discretization it was run at.
struct VerificationReport {
    std::string target;
    std::string function_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    bool pass = false;
    double tol_lo = 0.0;  // admissible ratio band (or slack bound, per target)
    double tol_hi = 0.0;
    std::map<std::string, double> params;
    Grid grid;
    std::string note;
};

/// One (function, s) row of the embedding study.
struct EmbeddingReport {
    std::string function_id;
    double s = 0.0;
    double holder_quotient_sup = 0.0;
    double hs_norm_value = 0.0;
    double ratio = 0.0;
    std::vector<double> gap_grid;
    Grid grid;
    std::string note;
};

/// Serialize reports as {"meta": {...}, "records": [...]}.
std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            const std::map<std::string, double>& tolerances);
std::string reports_to_json(const std::vector<EmbeddingReport>& reports,
                            const std::map<std::string, double>& tolerances);

/// Flat CSV with the fixed sweep header: function,s,holder_sup,hs_norm,ratio,L,N
std::string embedding_reports_to_csv(const std::vector<EmbeddingReport>& reports);

/// Write-temp-then-rename so readers never observe partial files.
void write_file_atomic(const std::string& path, const std::string& body);

}  // namespace fracsob

#endif
