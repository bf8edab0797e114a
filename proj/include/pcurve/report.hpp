#ifndef PCURVE_REPORT_HPP
#define PCURVE_REPORT_HPP

#include <json.hpp>

#include "pcurve/fermat.hpp"
#include "pcurve/jacobian.hpp"
#include "pcurve/linalg.hpp"
#include "pcurve/planecurve.hpp"

namespace pcurve {

// Array of rows, entries printed in the field-element grammar.
nlohmann::json matrix_to_json(const Matrix& m);

nlohmann::json plane_curve_report(const PlaneCurveSpec& c, const SemilinearMap& hw);
nlohmann::json cartier_report(const PlaneCurveSpec& c, const SemilinearMap& cm, const SemilinearMap& hw);
nlohmann::json fermat_report_json(const FermatReport& r);
nlohmann::json genericity_json(const GenericityCertificate& cert);
nlohmann::json jacobian_report(const JacobianDecomposition& d, const SmoothModel& s,
                               const std::vector<std::string>& flags);
nlohmann::json preset_report(const SingularFermatPreset& preset);
nlohmann::json dims_report(int m, int n);

}  // namespace pcurve

#endif  // PCURVE_REPORT_HPP
