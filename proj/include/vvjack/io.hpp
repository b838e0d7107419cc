#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "vvjack/errors.hpp"
#include "vvjack/symmetric_jack.hpp"
#include "vvjack/torus_wave.hpp"
#include "vvjack/verify.hpp"

namespace vvjack::io {

using json = nlohmann::ordered_json;

// --- argument parsing -------------------------------------------------------

// "2,2,1" -> Partition.
Partition parse_partition(std::string_view text);
// "0,1,-1" -> Composition.
Composition parse_composition(std::string_view text);
// "T3", "3", or an explicit content vector "0,-1,1,0".
int parse_tableau(const Representation& rep, std::string_view text);
std::vector<double> parse_doubles(std::string_view text);

// --- serialization ----------------------------------------------------------

json rational(const Rational& q);
json rationals(const RVector& v);
json tableau(const Representation& rep, int t);
// Terms in exponent order, then tableau order: {exponent, tableau, coeff}.
json poly(const VVPoly& p);
json matrix(const CMatrix& m);
json error(const Error& e);
json error(std::string_view kind, std::string_view message);

// --- reports shared by the command line tool and the Python module -----------

json tableaux_report(const Partition& tau);
json nsjp_report(YangBaxterGraph& graph, std::span<const int> alpha, int t);
json norm_report(YangBaxterGraph& graph, std::span<const int> alpha, int t);
json jack_report(const KappaContext& ctx, const SymmetricJack& j);
// Every symmetric polynomial with partition label lambda, one per column-strict filling.
json jack_components_report(YangBaxterGraph& graph, std::span<const int> lambda, int shift);
// {passed, checks, tau, kappa} for a suite run.
json checks_report(const KappaContext& ctx, const std::vector<CheckResult>& results);
json count_report(const Partition& tau, int max_degree, bool restrict_last_zero, const KappaContext* ctx);
json integrate_report(const TorusSystem& sys, const TorusMatrix& l);

}  // namespace vvjack::io
