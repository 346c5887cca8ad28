#include "weitz/json_io.hpp"

namespace weitz {

using nlohmann::json;

json curvature_to_json(const AlgebraicCurvature& R) {
  json entries = json::array();
  for (int i = 0; i < R.n; ++i)
    for (int j = i + 1; j < R.n; ++j)
      for (int k = 0; k < R.n; ++k)
        for (int l = k + 1; l < R.n; ++l) {
          if (std::make_pair(i, j) > std::make_pair(k, l)) continue;
          const Rational& v = R.at(i, j, k, l);
          if (sgn(v) == 0) continue;
          entries.push_back(json::array({i + 1, j + 1, k + 1, l + 1, v.get_str()}));
        }
  return json{{"schema", kSchema}, {"type", "curvature"}, {"n", R.n}, {"R", entries}};
}

AlgebraicCurvature curvature_from_json(const json& doc) {
  if (!doc.contains("n") || !doc.contains("R"))
    fail(ErrorKind::ParseError, "curvature document needs fields n and R");
  int n = doc.at("n").get<int>();
  if (n < 3) fail(ErrorKind::WrongDimension, "curvature needs n >= 3");
  AlgebraicCurvature R = AlgebraicCurvature::zero(n);
  for (const json& row : doc.at("R")) {
    if (!row.is_array() || row.size() != 5)
      fail(ErrorKind::ParseError, "curvature entries are [i,j,k,l,value] rows");
    int i = row[0].get<int>() - 1, j = row[1].get<int>() - 1;
    int k = row[2].get<int>() - 1, l = row[3].get<int>() - 1;
    if (i < 0 || j >= n || k < 0 || l >= n || i >= j || k >= l ||
        std::make_pair(i, j) > std::make_pair(k, l))
      fail(ErrorKind::ParseError, "curvature entry outside the canonical index set");
    Rational v = parse_rational(row[4].get<std::string>());
    for (auto [a, b, c, d] : {std::array<int, 4>{i, j, k, l}, std::array<int, 4>{k, l, i, j}}) {
      R.at(a, b, c, d) = v;
      R.at(b, a, c, d) = -v;
      R.at(a, b, d, c) = -v;
      R.at(b, a, d, c) = v;
    }
  }
  R.validate();
  return R;
}

namespace {

json gmatrix_to_json(const GMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

GMatrix gmatrix_from_json(const json& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  GMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) fail(ErrorKind::ParseError, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = parse_gaussian(rows[i][j].get<std::string>());
  }
  return m;
}

}  // namespace

json rep_to_json(const RepRealization& rep) {
  json weight = json::array();
  for (const Rational& e : rep.rho.entries()) weight.push_back(e.get_str());
  json gens = json::object();
  for (int i = 0; i < rep.ctx.n; ++i)
    for (int j = i + 1; j < rep.ctx.n; ++j)
      gens[std::to_string(i + 1) + "," + std::to_string(j + 1)] = gmatrix_to_json(rep.gen(i, j));
  return json{{"schema", kSchema},
              {"type", "representation"},
              {"n", rep.ctx.n},
              {"weight", weight},
              {"dim", rep.dim},
              {"unitary", rep.unitary},
              {"gram", gmatrix_to_json(rep.gram)},
              {"generators", gens}};
}

RepRealization rep_from_json(const json& doc) {
  for (const char* field : {"n", "weight", "dim", "gram", "generators"})
    if (!doc.contains(field))
      fail(ErrorKind::ParseError, std::string("representation document lacks ") + field);
  int n = doc.at("n").get<int>();
  std::vector<Rational> entries;
  for (const json& e : doc.at("weight")) entries.push_back(parse_rational(e.get<std::string>()));
  DominantWeight rho = DominantWeight::validate(std::move(entries), n);

  RepRealization rep{WeightContext::of(n), rho, doc.at("dim").get<std::size_t>(), {},
                     gmatrix_from_json(doc.at("gram")), false};
  rep.unitary = (rep.gram == GMatrix::identity(rep.dim));
  rep.upper.assign(static_cast<std::size_t>(n) * n, GMatrix());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::string key = std::to_string(i + 1) + "," + std::to_string(j + 1);
      if (!doc.at("generators").contains(key))
        fail(ErrorKind::ParseError, "missing generator " + key);
      GMatrix g = gmatrix_from_json(doc.at("generators").at(key));
      if (g.rows() != rep.dim || g.cols() != rep.dim)
        fail(ErrorKind::ParseError, "generator " + key + " has the wrong shape");
      rep.upper[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(j)] = std::move(g);
    }
  rep.validate();
  return rep;
}

}  // namespace weitz
