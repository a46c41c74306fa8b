#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "heigen/experiments.hpp"
#include "heigen/homotopy.hpp"

namespace heigen {

using json = nlohmann::json;

// {"n","d","basis":"weyl"|"monomial","components":[[{"alpha","re","im"},...],...]}
PolySystem<double> system_from_json(const json& j);
json system_to_json(const PolySystem<double>& f);

json complex_to_json(std::complex<double> z);
json vector_to_json(const CVector<double>& v);
CVector<double> vector_from_json(const json& j);

json report_to_json(const SolveReport<double>& r, std::uint64_t seed);
json start_to_json(const StartTriple<double>& s, std::uint64_t seed);
json bench_to_json(const BenchReport& b);
std::string bench_to_csv(const BenchReport& b);

// Serializer with every float printed as %.17g, so equal values always give
// equal bytes. Non-finite floats become null.
std::string dump17(const json& j, int indent = 2);

}  // namespace heigen
