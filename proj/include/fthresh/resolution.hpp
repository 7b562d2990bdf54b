#ifndef FTHRESH_RESOLUTION_HPP
#define FTHRESH_RESOLUTION_HPP

#include <map>
#include <optional>
#include <vector>

#include "fthresh/ideal.hpp"
#include "fthresh/rational.hpp"

namespace fthresh {

struct GradedFreeModule {
  std::vector<std::int64_t> shifts;  // generator degrees j in S(-j)
  int rank() const { return static_cast<int>(shifts.size()); }
};

// Minimal graded free resolution of S/I: modules[0] = S and maps[k] is the
// differential modules[k+1] -> modules[k], a rank_k x rank_{k+1} matrix of
// homogeneous polynomials with entries in the irrelevant ideal.
struct GradedComplex {
  CtxPtr ctx;
  std::vector<GradedFreeModule> modules;
  std::vector<std::vector<std::vector<Polynomial>>> maps;

  int length() const { return static_cast<int>(modules.size()) - 1; }
};

GradedComplex freeResolution(const Ideal& I);

struct BettiTable {
  std::map<std::pair<int, std::int64_t>, std::int64_t> entries;  // (i,j)->beta
  int pd = 0;
  std::int64_t reg = 0;
};

// Reads the Betti numbers off a minimal complex; throws MinimalityError when
// a differential entry has a unit (nonzero constant) term.
BettiTable bettiTable(const GradedComplex& C);

// a_i(R) for 0 <= i <= dim, absent entries meaning H^i_m(R) = 0. Computed by
// graded duality from the dualized resolution: a_{n-k} = -n - mindeg Ext^k.
struct AInvariants {
  std::map<int, std::int64_t> values;
  int dim = 0;

  std::optional<std::int64_t> a(int i) const {
    auto it = values.find(i);
    if (it == values.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::int64_t> top() const { return a(dim); }
};

AInvariants aInvariants(const Ideal& I);

struct Classification {
  bool isCM = false;
  bool isGorenstein = false;
  int dim = 0;
  int depth = 0;
  std::int64_t type = 0;  // total rank at homological position pd
  int pd = 0;
};

Classification classify(const Ideal& I);

struct HomologicalBoundsReport {
  int pd = 0;
  std::int64_t mu = 0;   // minimal number of generators of I
  std::int64_t reg = 0;
  int dim = 0;
  std::optional<Rational> fpt;
  bool pdBoundHolds = false;   // pd <= mu
  bool regBoundHolds = false;  // reg <= dim - fpt
  bool asserted = false;       // bounds are theorems only for F-pure rings
};

HomologicalBoundsReport homologicalBounds(const Ideal& I,
                                          std::optional<Rational> fpt);

}  // namespace fthresh

#endif
