#include "simonlab/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "simonlab/error.hpp"

namespace simonlab {

namespace {

void emit(std::string& out, const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        emit(out, it.value());
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ',';
        emit(out, j[i]);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        break;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      break;
    }
    default:
      out += j.dump();
  }
}

template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

FieldSpec field_from_json(const Json& j) {
  return FieldSpec(j.at("p").get<std::uint32_t>(), j.at("n").get<int>());
}

std::string register_name(Register r) {
  switch (r) {
    case Register::kQuery:
      return "query";
    case Register::kOutput:
      return "output";
    case Register::kWork:
      return "work";
  }
  return "query";
}

Register register_from_name(const std::string& name) {
  if (name == "query") return Register::kQuery;
  if (name == "output") return Register::kOutput;
  if (name == "work") return Register::kWork;
  throw FormatError("unknown register '" + name + "'");
}

Json bits_to_json(std::uint32_t word, int n) {
  Json out = Json::array();
  for (int i = 0; i < n; ++i) out.push_back((word >> i) & 1u);
  return out;
}

std::uint32_t bits_from_json(const Json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw FormatError("bit vector must have n entries");
  std::uint32_t word = 0;
  for (int i = 0; i < n; ++i) {
    const int bit = j[static_cast<std::size_t>(i)].get<int>();
    if (bit != 0 && bit != 1) throw FormatError("bit vector entries must be 0 or 1");
    word |= static_cast<std::uint32_t>(bit) << i;
  }
  return word;
}

}  // namespace

std::string to_canonical_string(const Json& j) {
  std::string out;
  emit(out, j);
  out += '\n';
  return out;
}

void write_canonical(std::ostream& out, const Json& j) { out << to_canonical_string(j); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return guarded("parsing JSON", [&] { return Json::parse(in); });
}

Json vector_to_json(const FpVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

FpVector vector_from_json(const Json& j, const FieldSpec& field) {
  return guarded("vector", [&] {
    if (!j.is_array() || static_cast<int>(j.size()) != field.n()) {
      throw FormatError("vector must have n = " + std::to_string(field.n()) + " entries");
    }
    FpVector v(field.n());
    for (int i = 0; i < field.n(); ++i) v[i] = field.reduce(j[static_cast<std::size_t>(i)].get<Residue>());
    return v;
  });
}

Json matrix_to_json(const FpMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.field().n(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.field().n(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return Json{{"p", m.field().p()}, {"n", m.field().n()}, {"rows", std::move(rows)}};
}

FpMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    const FieldSpec field = field_from_json(j);
    const Json& rows = j.at("rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != field.n()) throw FormatError("matrix must have n rows");
    FpRows entries(field.n(), field.n());
    for (int r = 0; r < field.n(); ++r) {
      entries.row(r) = vector_from_json(rows[static_cast<std::size_t>(r)], field).transpose();
    }
    return FpMatrix(field, entries);
  });
}

Json subspace_to_json(const Subspace& s) {
  Json basis = Json::array();
  for (int r = 0; r < s.dim(); ++r) basis.push_back(vector_to_json(s.basis_vector(r)));
  return Json{{"p", s.field().p()}, {"n", s.field().n()}, {"basis", std::move(basis)}};
}

Subspace subspace_from_json(const Json& j) {
  return guarded("subspace", [&] {
    const FieldSpec field = field_from_json(j);
    std::vector<FpVector> gens;
    for (const Json& v : j.at("basis")) gens.push_back(vector_from_json(v, field));
    return Subspace::span(field, std::span<const FpVector>(gens));
  });
}

Json partial_to_json(const PartialFn& s) {
  Json pairs = Json::array();
  for (const auto& [x, y] : s.pairs()) pairs.push_back(Json{{"x", vector_to_json(x)}, {"y", vector_to_json(y)}});
  return Json{{"p", s.field().p()}, {"n", s.field().n()}, {"pairs", std::move(pairs)}};
}

PartialFn partial_from_json(const Json& j) {
  return guarded("partial function", [&] {
    const FieldSpec field = field_from_json(j);
    PartialFn s(field);
    for (const Json& pair : j.at("pairs")) {
      s.insert(vector_from_json(pair.at("x"), field), vector_from_json(pair.at("y"), field));
    }
    return s;
  });
}

Json general_to_json(const GeneralInstance& g) {
  Json table = Json::array();
  for (std::uint32_t v : g.table) table.push_back(bits_to_json(v, g.n));
  Json shift = g.hidden_shift ? bits_to_json(*g.hidden_shift, g.n) : Json(nullptr);
  return Json{{"n", g.n}, {"table", std::move(table)}, {"shift", std::move(shift)}};
}

GeneralInstance general_from_json(const Json& j) {
  return guarded("general instance", [&] {
    GeneralInstance g;
    g.n = j.at("n").get<int>();
    if (g.n < 1 || g.n > kMaxGeneralBits) throw FormatError("general instance n out of range");
    for (const Json& word : j.at("table")) g.table.push_back(bits_from_json(word, g.n));
    const Json& shift = j.at("shift");
    if (!shift.is_null()) g.hidden_shift = bits_from_json(shift, g.n);
    if (!is_valid(g)) throw FormatError("table does not match its declared shift structure");
    return g;
  });
}

Json circuit_to_json(const Circuit& c) {
  Json ops = Json::array();
  for (const CircuitOp& op : c.ops()) {
    if (std::holds_alternative<QftQuery>(op)) {
      ops.push_back(Json{{"type", "qft_query"}});
    } else if (std::holds_alternative<IqftQuery>(op)) {
      ops.push_back(Json{{"type", "iqft_query"}});
    } else if (std::holds_alternative<OracleCall>(op)) {
      ops.push_back(Json{{"type", "oracle"}});
    } else {
      const auto& d = std::get<DenseUnitary>(op);
      Json re = Json::array(), im = Json::array();
      for (Eigen::Index r = 0; r < d.matrix.rows(); ++r) {
        Json rr = Json::array(), ri = Json::array();
        for (Eigen::Index col = 0; col < d.matrix.cols(); ++col) {
          rr.push_back(d.matrix(r, col).real());
          ri.push_back(d.matrix(r, col).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ri));
      }
      ops.push_back(Json{{"type", "dense"},
                         {"register", register_name(d.reg)},
                         {"matrix_re", std::move(re)},
                         {"matrix_im", std::move(im)}});
    }
  }
  Json accept = Json::array();
  for (const FpVector& v : c.accept()) accept.push_back(vector_to_json(v));
  return Json{{"p", c.field().p()},
              {"n", c.field().n()},
              {"workspace", c.workspace_dim()},
              {"ops", std::move(ops)},
              {"accept", std::move(accept)}};
}

Circuit circuit_from_json(const Json& j) {
  return guarded("circuit", [&] {
    const FieldSpec field = field_from_json(j);
    const int workspace = j.value("workspace", 1);
    std::vector<CircuitOp> ops;
    for (const Json& op : j.at("ops")) {
      const std::string type = op.at("type").get<std::string>();
      if (type == "qft_query") {
        ops.emplace_back(QftQuery{});
      } else if (type == "iqft_query") {
        ops.emplace_back(IqftQuery{});
      } else if (type == "oracle") {
        ops.emplace_back(OracleCall{});
      } else if (type == "dense") {
        const Json& re = op.at("matrix_re");
        const auto dim = static_cast<Eigen::Index>(re.size());
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
        for (Eigen::Index r = 0; r < dim; ++r) {
          const Json& row = re[static_cast<std::size_t>(r)];
          if (static_cast<Eigen::Index>(row.size()) != dim) throw FormatError("dense matrix must be square");
          for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = row[static_cast<std::size_t>(c)].get<double>();
        }
        if (op.contains("matrix_im")) {
          const Json& im = op.at("matrix_im");
          if (static_cast<Eigen::Index>(im.size()) != dim) throw FormatError("matrix_im shape mismatch");
          for (Eigen::Index r = 0; r < dim; ++r) {
            const Json& row = im[static_cast<std::size_t>(r)];
            if (static_cast<Eigen::Index>(row.size()) != dim) throw FormatError("matrix_im shape mismatch");
            for (Eigen::Index c = 0; c < dim; ++c) {
              m(r, c) += std::complex<double>(0.0, row[static_cast<std::size_t>(c)].get<double>());
            }
          }
        }
        ops.emplace_back(DenseUnitary{register_from_name(op.at("register").get<std::string>()), std::move(m)});
      } else {
        throw FormatError("unknown op type '" + type + "'");
      }
    }
    std::vector<FpVector> accept;
    for (const Json& v : j.at("accept")) accept.push_back(vector_from_json(v, field));
    return Circuit(field, workspace, std::move(ops), std::move(accept));
  });
}

std::string rational_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

Json rational_poly_to_json(const RationalPoly& poly) {
  Json coeffs = Json::array();
  for (const mpq_class& c : poly.coefficients()) coeffs.push_back(rational_string(c));
  return Json{{"degree", poly.degree()}, {"coefficients", std::move(coeffs)}};
}

Json qtable_to_json(const QTable& t) {
  Json points = Json::array();
  for (const auto& pt : t.points()) {
    points.push_back(Json{{"k", pt.k},
                          {"D", pt.d.get_str()},
                          {"num", pt.value.get_num().get_str()},
                          {"den", pt.value.get_den().get_str()}});
  }
  return Json{{"p", t.p()}, {"n", t.n()}, {"points", std::move(points)}};
}

QTable qtable_from_json(const Json& j) {
  return guarded("QTable", [&] {
    std::vector<QTable::Point> points;
    for (const Json& pt : j.at("points")) {
      mpq_class value(mpz_class(pt.at("num").get<std::string>()), mpz_class(pt.at("den").get<std::string>()));
      if (value.get_den() == 0) throw FormatError("QTable: zero denominator");
      value.canonicalize();
      points.push_back({pt.at("k").get<int>(), mpz_class(pt.at("D").get<std::string>()), value});
    }
    return QTable(j.at("p").get<std::uint32_t>(), j.at("n").get<int>(), std::move(points));
  });
}

Json part3_to_json(const Part3Report& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"h", row.h},
                        {"conditioned", row.conditioned.get_str()},
                        {"extending", row.extending.get_str()},
                        {"value", row.value ? Json(rational_string(*row.value)) : Json(nullptr)}});
  }
  return Json{{"rows", std::move(rows)},
              {"common_value", r.common_value ? Json(rational_string(*r.common_value)) : Json(nullptr)},
              {"pass", r.pass}};
}

Json lemma1_to_json(const MinDegreeReport& r) {
  Json per_degree = Json::array();
  for (const auto& res : r.per_degree) {
    Json entry{{"d", res.degree}, {"status", res.feasible ? "feasible" : "infeasible"}};
    if (res.feasible) {
      entry["witness"] = rational_poly_to_json(res.witness);
    } else {
      Json cert = Json::array();
      for (const mpq_class& y : res.certificate) cert.push_back(rational_string(y));
      entry["certificate"] = std::move(cert);
    }
    per_degree.push_back(std::move(entry));
  }
  const int n = r.instance.n;
  Json out{{"p", r.instance.p},
           {"n", n},
           {"accept_lo", rational_string(r.instance.accept_lo)},
           {"reject_hi", rational_string(r.instance.reject_hi)},
           {"constraints", hypothesis_system(r.instance, 0).names},
           {"per_degree", std::move(per_degree)},
           {"min_feasible", r.min_feasible ? Json(*r.min_feasible) : Json(nullptr)},
           {"lemma_bound", "n/4"},
           {"pass", r.bound_certified}};
  if (r.min_feasible) out["meets_(n+1)/4"] = 4 * *r.min_feasible >= n + 1;
  return out;
}

}  // namespace simonlab
