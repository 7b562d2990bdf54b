#ifndef FTHRESH_RINGFILE_HPP
#define FTHRESH_RINGFILE_HPP

#include <string>
#include <vector>

#include "fthresh/ideal.hpp"

namespace fthresh {

struct RingFile {
  std::string name;  // optional metadata
  CtxPtr ctx;
  Ideal ideal;
};

// Line-oriented ring definition:
//   # comment
//   name = optional label
//   p = 5
//   vars = x y z
//   gens:
//   x^2 + y*z
// Generators must be homogeneous; p must be prime. Errors carry line/column.
RingFile parseRingFile(const std::string& text);
RingFile loadRingFile(const std::string& path);

std::string printRingFile(const RingFile& rf);

}  // namespace fthresh

#endif
