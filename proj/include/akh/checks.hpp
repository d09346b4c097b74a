#pragma once

#include <string>
#include <vector>

#include "akh/diagram.hpp"
#include "akh/generators.hpp"
#include "akh/report.hpp"

// Property suites shared by the command line and the test drivers.
namespace akh::checks {

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs a suite on one given diagram. Suites needing auxiliary data draw it from rng.
std::vector<Check> on_diagram(const std::string& suite, const AnnularDiagram& d, gen::Rng& rng,
                              int cap = kDefaultCap);
// Generates one instance suited to the suite and runs it.
std::vector<Check> on_random(const std::string& suite, gen::Rng& rng, int max_crossings, int cap = kDefaultCap);

std::vector<Check> differential_laws(const AnnularDiagram& d, int cap = kDefaultCap);
std::vector<Check> mirror_duality(const AnnularDiagram& d);
std::vector<Check> same_homology(const std::string& label, const AnnularDiagram& a, const AnnularDiagram& b);
std::vector<Check> euler_coherence(const AnnularDiagram& d);
std::vector<Check> t_duality(const AnnularDiagram& d);

std::vector<Check> cone_law(const gen::ConeInstance& c);
std::vector<Check> bifiltered_reduction(const f2::ChainComplexF2& c, int r_max = 4);

}  // namespace akh::checks
