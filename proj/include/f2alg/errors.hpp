// Error types shared across the engine.
#ifndef F2ALG_ERRORS_HPP
#define F2ALG_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace f2alg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Syntax or validation failure while reading the presentation format.
struct ParseError : Error {
    int line;
    int col;
    ParseError(int line_, int col_, const std::string& msg)
        : Error("parse error at line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                ": " + msg),
          line(line_),
          col(col_)
    {
    }
};

struct DimensionError : Error {
    using Error::Error;
};

// Degree exceeds the algebra's computation bound.
struct BoundError : Error {
    using Error::Error;
};

struct HomogeneityError : Error {
    using Error::Error;
};

// An evaluation needed a Steenrod table entry (g, i) that the presentation
// does not specify. `missing` lists the (generator name, i) pairs needed.
struct UnknownSqError : Error {
    std::vector<std::pair<std::string, int>> missing;
    explicit UnknownSqError(std::vector<std::pair<std::string, int>> missing_)
        : Error(describe(missing_)), missing(std::move(missing_))
    {
    }

private:
    static std::string describe(const std::vector<std::pair<std::string, int>>& m)
    {
        std::string s = "unknown Steenrod value";
        for (size_t k = 0; k < m.size(); ++k)
            s += (k ? ", " : ": ") + ("Sq^" + std::to_string(m[k].second) + "(" + m[k].first + ")");
        return s;
    }
};

// A certificate check was invoked on data violating its hypotheses.
struct HypothesisError : Error {
    using Error::Error;
};

struct UnknownModelError : Error {
    using Error::Error;
};

}  // namespace f2alg

#endif
