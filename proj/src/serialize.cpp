#include "mirahoric/serialize.hpp"

#include <sstream>

namespace mirahoric {

Json matrix_to_json(const LocalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_to_json(const CoeffMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

CoeffMatrix coeff_matrix_from_json(const Json& j, const CoeffField& field) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidArgument, "matrix JSON must be an array");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.front().size();
  CoeffMatrix m = coeff_zero(rows, cols, field);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw Error(ErrorKind::InvalidArgument, "ragged matrix JSON");
    for (std::size_t k = 0; k < cols; ++k)
      m(i, k) = Coeff::parse(j[i][k].get<std::string>(), field);
  }
  return m;
}

std::string matrix_to_csv(const CoeffMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (k) out << ',';
      out << m(i, k).to_string();
    }
    out << '\n';
  }
  return out.str();
}

Json mann_reps_to_json(int n, int j, const BaseField& F, LevelKind kind,
                       const std::vector<MannRep>& reps, const CosetDegree& degree) {
  Json out;
  out["n"] = n;
  out["j"] = j;
  out["p"] = F.p();
  out["level_kind"] = kind == LevelKind::Positive ? "positive" : "zero";
  out["degree"] = degree.value.get_str();
  Json list = Json::array();
  for (const MannRep& rep : reps) {
    Json item;
    item["I"] = rep.subset;
    Json free = Json::array();
    for (const FreeEntry& e : rep.free_entries)
      free.push_back({{"row", e.row}, {"col", e.col}, {"value", std::to_string(e.value)}});
    item["free_entries"] = std::move(free);
    item["matrix"] = matrix_to_json(rep.matrix);
    list.push_back(std::move(item));
  }
  out["reps"] = std::move(list);
  return out;
}

Json partition_report_to_json(int r, const PartitionReport& report) {
  return {{"r", r},
          {"pairwise_distinct", report.pairwise_distinct},
          {"oracle_index", report.oracle_index.get_str()},
          {"degree", report.degree.get_str()},
          {"degree_matches", report.degree_matches}};
}

Json tuple_vector_to_json(const TupleVector& v) {
  Json out;
  out["n"] = v.n();
  out["M"] = v.trunc();
  Json entries = Json::array();
  for (const auto& [m, c] : v.entries()) entries.push_back({{"m", m}, {"c", c.to_string()}});
  out["entries"] = std::move(entries);
  return out;
}

TupleVector tuple_vector_from_json(const Json& j, const CoeffField& field) {
  try {
    TupleVector v(j.at("n").get<int>(), j.at("M").get<int>(), field);
    for (const auto& e : j.at("entries"))
      v.set(e.at("m").get<std::vector<int>>(), Coeff::parse(e.at("c").get<std::string>(), field));
    return v;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed tuple vector: ") + e.what());
  }
}

Json basis_to_json(const InvariantBasis& basis) {
  Json out;
  out["n"] = basis.n;
  out["p"] = basis.p;
  out["r"] = basis.r;
  out["dim"] = basis.size();
  Json rows = Json::array();
  Json lifts = Json::array();
  for (std::size_t x = 0; x < basis.size(); ++x) {
    Json row = Json::array();
    for (long e : basis.rows[x].entries) row.push_back(std::to_string(e));
    rows.push_back(std::move(row));
    lifts.push_back(matrix_to_json(basis.lifts[x]));
  }
  out["rows"] = std::move(rows);
  out["lifts"] = std::move(lifts);
  return out;
}

Json hecke_to_json(const HeckeMatrix& h, const InvariantBasis& basis) {
  Json out;
  out["n"] = h.n;
  out["p"] = h.p;
  out["r"] = h.r;
  out["j"] = h.j;
  out["field"] = h.chi.field().name();
  out["mode"] = h.chi.normalized() ? "normalized" : "unnormalized";
  Json chi = Json::array();
  for (const Coeff& c : h.chi.values()) chi.push_back(c.to_string());
  out["chi"] = std::move(chi);
  Json rows = Json::array();
  for (const auto& row : basis.rows) {
    Json r = Json::array();
    for (long e : row.entries) r.push_back(std::to_string(e));
    rows.push_back(std::move(r));
  }
  out["basis"] = std::move(rows);
  out["matrix"] = matrix_to_json(h.entries);
  return out;
}

Json polynomial_to_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (const Coeff& c : p.coeffs()) coeffs.push_back(c.to_string());
  return {{"coeffs", std::move(coeffs)}, {"text", p.to_string()}};
}

Json report_to_json(const SpectralReport& report) {
  Json out;
  Json params;
  params["n"] = report.n;
  params["p"] = report.p;
  params["r"] = report.r;
  params["field"] = report.field.name();
  params["chi"] = report.chi;
  params["mode"] = report.normalized ? "normalized" : "unnormalized";
  params["valuation_prime"] =
      report.valuation_prime ? Json(*report.valuation_prime) : Json(nullptr);
  out["params"] = std::move(params);
  out["dim"] = report.dim;
  out["dim_F"] = report.dim_F;
  out["dim_L"] = report.dim_L ? Json(*report.dim_L) : Json(nullptr);
  if (!report.dim_L) out["dim_L_note"] = report.dim_L_note;
  out["dim_F_by_level"] = report.dim_F_by_level;
  out["stabilization_r"] = report.stabilization_r;

  Json polys = Json::array();
  Json operators = Json::array();
  for (const OperatorSpectrum& op : report.operators) {
    polys.push_back(polynomial_to_json(op.char_poly));
    Json jordan = Json::object();
    for (const EigenBlock& e : op.eigen) jordan[e.eigenvalue.to_string()] = e.jordan;
    operators.push_back({{"j", op.j},
                         {"splits", op.splits},
                         {"semisimple", op.semisimple},
                         {"jordan", std::move(jordan)}});
  }
  out["char_polys"] = std::move(polys);
  out["operators"] = operators;
  // Jordan data of U^(1) at top level.
  out["jordan"] = operators.empty() ? Json::object() : operators.front()["jordan"];

  Json joint = Json::array();
  for (const JointEigenspace& e : report.joint_eigenspaces) {
    Json values = Json::array();
    for (const Coeff& c : e.eigenvalues) values.push_back(c.to_string());
    joint.push_back({{"eigenvalues", std::move(values)}, {"dim", e.dim}});
  }
  out["joint_eigenspaces"] = std::move(joint);
  return out;
}

Json error_to_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace mirahoric
