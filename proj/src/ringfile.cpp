#include "fthresh/ringfile.hpp"

#include <fstream>
#include <sstream>

namespace fthresh {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

RingFile parseRingFile(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  std::string name;
  std::optional<std::int64_t> p;
  std::vector<std::string> vars;
  std::vector<std::pair<int, std::string>> genLines;
  bool inGens = false;

  while (std::getline(in, line)) {
    ++lineNo;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    if (!inGens) {
      if (s == "gens:") {
        inGens = true;
        continue;
      }
      std::size_t eq = s.find('=');
      if (eq == std::string::npos) {
        throw ParseError("expected 'key = value' or 'gens:'", lineNo, 1);
      }
      std::string key = trim(s.substr(0, eq));
      std::string value = trim(s.substr(eq + 1));
      if (key == "p") {
        try {
          p = std::stoll(value);
        } catch (const std::exception&) {
          throw ParseError("invalid characteristic '" + value + "'", lineNo,
                           static_cast<int>(eq) + 2);
        }
      } else if (key == "vars") {
        std::istringstream vs(value);
        std::string v;
        while (vs >> v) vars.push_back(v);
      } else if (key == "name") {
        name = value;
      } else {
        throw ParseError("unknown key '" + key + "'", lineNo, 1);
      }
    } else {
      genLines.emplace_back(lineNo, s);
    }
  }

  if (!p) throw ParseError("missing 'p = <prime>'", lineNo, 1);
  if (*p < 2 || *p >= (std::int64_t(1) << 31) ||
      !PrimeField::isPrime(static_cast<std::uint64_t>(*p))) {
    throw ParseError(std::to_string(*p) + " is not a prime in range", 1, 1);
  }
  if (vars.empty()) throw ParseError("missing 'vars = ...'", lineNo, 1);

  CtxPtr ctx;
  try {
    ctx = makeRing(static_cast<std::uint32_t>(*p), vars);
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), 1, 1);
  }

  std::vector<Polynomial> gens;
  for (const auto& [ln, src] : genLines) {
    Polynomial g;
    try {
      g = parsePolynomial(ctx, src);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), ln, e.col);
    }
    if (!g.isHomogeneous()) {
      throw ParseError("inhomogeneous generator '" + src + "'", ln, 1);
    }
    gens.push_back(std::move(g));
  }
  return RingFile{name, ctx, Ideal(ctx, std::move(gens))};
}

RingFile loadRingFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseRingFile(buf.str());
}

std::string printRingFile(const RingFile& rf) {
  std::ostringstream os;
  if (!rf.name.empty()) os << "name = " << rf.name << "\n";
  os << "p = " << rf.ctx->p << "\n";
  os << "vars =";
  for (const auto& v : rf.ctx->varNames) os << " " << v;
  os << "\ngens:\n";
  for (const auto& g : rf.ideal.generators()) os << toString(g) << "\n";
  return os.str();
}

}  // namespace fthresh
