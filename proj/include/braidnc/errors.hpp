#pragma once

#include <stdexcept>
#include <string>

namespace braidnc {

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct NonTermination : std::runtime_error {
    explicit NonTermination(const std::string& what) : std::runtime_error(what) {}
};

struct InhomogeneousOperand : std::runtime_error {
    explicit InhomogeneousOperand(const std::string& what) : std::runtime_error(what) {}
};

struct OddPhaseExponent : std::runtime_error {
    explicit OddPhaseExponent(const std::string& what) : std::runtime_error(what) {}
};

struct NotVertical : std::runtime_error {
    explicit NotVertical(const std::string& what) : std::runtime_error(what) {}
};

struct OrbitBlowup : std::runtime_error {
    explicit OrbitBlowup(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateSample : std::runtime_error {
    explicit DegenerateSample(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    ParseError(int line, int col, const std::string& what)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + what),
          line(line), col(col) {}
    int line;
    int col;
};

struct UnknownOperator : std::runtime_error {
    explicit UnknownOperator(const std::string& what) : std::runtime_error(what) {}
};

} // namespace braidnc
