#ifndef MIRAHORIC_SERIALIZE_HPP
#define MIRAHORIC_SERIALIZE_HPP

// JSON and CSV encodings. Every number is an exact string: "7/3", "-2" or
// "5 mod 11". Object keys are emitted in sorted order, so equal inputs give
// identical bytes.

#include <string>
#include <vector>

#include "json.hpp"
#include "mirahoric/kirillov.hpp"
#include "mirahoric/mann.hpp"
#include "mirahoric/principal_series.hpp"
#include "mirahoric/spectra.hpp"

namespace mirahoric {

using Json = nlohmann::json;

Json matrix_to_json(const LocalMatrix& m);
Json matrix_to_json(const CoeffMatrix& m);
CoeffMatrix coeff_matrix_from_json(const Json& j, const CoeffField& field);
std::string matrix_to_csv(const CoeffMatrix& m);

Json mann_reps_to_json(int n, int j, const BaseField& F, LevelKind kind,
                       const std::vector<MannRep>& reps, const CosetDegree& degree);
Json partition_report_to_json(int r, const PartitionReport& report);

// { "n": ..., "M": ..., "entries": [{"m": [...], "c": "num/den"}, ...] }
Json tuple_vector_to_json(const TupleVector& v);
TupleVector tuple_vector_from_json(const Json& j, const CoeffField& field);

Json basis_to_json(const InvariantBasis& basis);
Json hecke_to_json(const HeckeMatrix& h, const InvariantBasis& basis);
Json polynomial_to_json(const Polynomial& p);
Json report_to_json(const SpectralReport& report);

Json error_to_json(const std::string& kind, const std::string& message);

}  // namespace mirahoric

#endif  // MIRAHORIC_SERIALIZE_HPP
