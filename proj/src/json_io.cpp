#include "heigen/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace heigen {

namespace {

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw Error(ErrorKind::InvalidInput, std::string("missing integer field '") + key + "'");
  return j.at(key).get<int>();
}

double get_num(const json& j, const char* key) {
  if (!j.contains(key)) return 0.0;
  if (!j.at(key).is_number())
    throw Error(ErrorKind::InvalidInput, std::string("field '") + key + "' must be a number");
  return j.at(key).get<double>();
}

void emit(std::ostringstream& os, const json& j, int indent, int level) {
  auto nl = [&](int lv) {
    if (indent < 0) return;
    os << '\n' << std::string(static_cast<std::size_t>(indent * lv), ' ');
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',';
        first = false;
        nl(level + 1);
        os << json(it.key()).dump() << (indent < 0 ? ":" : ": ");
        emit(os, it.value(), indent, level + 1);
      }
      nl(level);
      os << '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // short numeric arrays stay on one line
      bool flat = j.size() <= 4;
      for (const auto& e : j) flat = flat && (e.is_number() || e.is_null());
      os << '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << (flat ? ", " : ",");
        if (!flat) nl(level + 1);
        emit(os, j[i], indent, level + 1);
      }
      if (!flat) nl(level);
      os << ']';
      return;
    }
    case json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        os << "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      os << buf;
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace

std::string dump17(const json& j, int indent) {
  std::ostringstream os;
  emit(os, j, indent, 0);
  return os.str();
}

PolySystem<double> system_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "system must be a JSON object");
  const int n = get_int(j, "n"), d = get_int(j, "d");
  require(n >= 2, "n must be >= 2");
  require(d >= 2, "d must be >= 2");
  std::string basis = "weyl";
  if (j.contains("basis")) {
    if (!j.at("basis").is_string()) throw Error(ErrorKind::InvalidInput, "basis must be a string");
    basis = j.at("basis").get<std::string>();
  }
  require(basis == "weyl" || basis == "monomial", "basis must be 'weyl' or 'monomial'");
  if (!j.contains("components") || !j.at("components").is_array())
    throw Error(ErrorKind::InvalidInput, "missing 'components' array");
  const json& comps = j.at("components");
  require(static_cast<int>(comps.size()) == n, "need exactly n components");
  auto table = exponent_table<double>(n, d);
  CMatrix<double> c = CMatrix<double>::Zero(n, table->size());
  for (int i = 0; i < n; ++i) {
    if (!comps[i].is_array()) throw Error(ErrorKind::InvalidInput, "component must be an array of terms");
    for (const json& term : comps[i]) {
      if (!term.is_object() || !term.contains("alpha") || !term.at("alpha").is_array())
        throw Error(ErrorKind::InvalidInput, "term needs an 'alpha' array");
      std::vector<int> alpha;
      int sum = 0;
      for (const json& a : term.at("alpha")) {
        if (!a.is_number_integer() || a.get<int>() < 0)
          throw Error(ErrorKind::InvalidInput, "alpha entries must be non-negative integers");
        alpha.push_back(a.get<int>());
        sum += alpha.back();
      }
      require(static_cast<int>(alpha.size()) == n && sum == d, "alpha must have n entries summing to d");
      const std::complex<double> z(get_num(term, "re"), get_num(term, "im"));
      require(std::isfinite(z.real()) && std::isfinite(z.imag()), "coefficients must be finite");
      c(i, table->index_of(alpha)) += z;
    }
  }
  if (basis == "monomial") return monomial_to_weyl<double>(n, d, c);
  return PolySystem<double>(n, d, std::move(c));
}

json system_to_json(const PolySystem<double>& f) {
  json comps = json::array();
  const auto& t = f.table();
  for (int i = 0; i < f.components(); ++i) {
    json terms = json::array();
    for (Eigen::Index k = 0; k < t.size(); ++k) {
      const std::complex<double> z = f.coeffs()(i, k);
      if (z == std::complex<double>(0)) continue;
      terms.push_back({{"alpha", std::vector<int>(t.alpha(k), t.alpha(k) + f.vars())},
                       {"re", z.real()},
                       {"im", z.imag()}});
    }
    comps.push_back(terms);
  }
  return {{"n", f.vars()}, {"d", f.degree()}, {"basis", "weyl"}, {"components", comps}};
}

json complex_to_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json vector_to_json(const CVector<double>& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_to_json(v(i)));
  return a;
}

CVector<double> vector_from_json(const json& j) {
  require(j.is_array(), "expected an array of [re, im] pairs");
  CVector<double> v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    require(j[i].is_array() && j[i].size() == 2 && j[i][0].is_number() && j[i][1].is_number(),
            "expected [re, im]");
    v(static_cast<Eigen::Index>(i)) = {j[i][0].get<double>(), j[i][1].get<double>()};
  }
  return v;
}

json report_to_json(const SolveReport<double>& r, std::uint64_t seed) {
  return {{"v", vector_to_json(r.cand.v)},
          {"lambda", complex_to_json(r.cand.lambda)},
          {"iterations", r.iterations},
          {"residual", r.residual},
          {"mu_final", r.mu_final},
          {"status", to_string(r.status)},
          {"seed", seed},
          {"alpha", r.alpha},
          {"mu_sq_integral", r.mu_sq_int}};
}

json start_to_json(const StartTriple<double>& s, std::uint64_t seed) {
  return {{"system", system_to_json(s.g)},
          {"zeta", vector_to_json(s.zeta)},
          {"eta", complex_to_json(s.eta)},
          {"rejections", s.rejections},
          {"seed", seed}};
}

json bench_to_json(const BenchReport& b) {
  json rows = json::array();
  for (const auto& e : b.entries) {
    rows.push_back({{"statistic", e.statistic},
                    {"name", e.name},
                    {"n", e.n},
                    {"d", e.d},
                    {"samples", e.samples},
                    {"mean", e.mean},
                    {"stderr", e.stderr_},
                    {"bound", e.bound},
                    {"check", to_string(e.kind)},
                    {"pass", e.pass}});
  }
  return {{"seed", b.seed}, {"pass", b.all_pass()}, {"entries", rows}};
}

std::string bench_to_csv(const BenchReport& b) {
  std::ostringstream os;
  os << "statistic,name,n,d,samples,mean,stderr,bound,pass\n";
  char buf[40];
  auto num = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  for (const auto& e : b.entries) {
    os << e.statistic << ',' << e.name << ',' << e.n << ',' << e.d << ',' << e.samples << ','
       << num(e.mean) << ',' << num(e.stderr_) << ',' << num(e.bound) << ','
       << (e.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace heigen
