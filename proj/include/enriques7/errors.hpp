#pragma once

#include <stdexcept>
#include <string>

namespace enr7 {

// Base class for all domain errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A point has a zero coordinate in the requested affine chart.
class ChartDegenerate : public Error {
public:
    explicit ChartDegenerate(const std::string& what) : Error(what) {}
};

class ZeroPolynomial : public Error {
public:
    ZeroPolynomial() : Error("zero polynomial") {}
};

class IdentityElement : public Error {
public:
    IdentityElement() : Error("identity element has no proper fixed locus") {}
};

// The linear system cutting out surfaces singular at P has kernel dimension != 1.
class DegenerateKernel : public Error {
public:
    explicit DegenerateKernel(int dim)
        : Error("singularity conditions have kernel dimension " + std::to_string(dim)),
          dim(dim) {}
    int dim;
};

class FixedPoint : public Error {
public:
    explicit FixedPoint(const std::string& what) : Error(what) {}
};

class NotCritical : public Error {
public:
    explicit NotCritical(const std::string& what) : Error(what) {}
};

class FixedLocusViolation : public Error {
public:
    explicit FixedLocusViolation(const std::string& what) : Error(what) {}
};

class ExtraSingularityFound : public Error {
public:
    explicit ExtraSingularityFound(const std::string& what) : Error(what) {}
};

// Exact splitting of a restricted quadratic failed while the caller demanded exact roots.
class IrrationalRoot : public Error {
public:
    explicit IrrationalRoot(int line_id)
        : Error("restricted quadratic on fixed line " + std::to_string(line_id) +
                " does not split over Q(i)"),
          line_id(line_id) {}
    int line_id;
};

class BasePointHit : public Error {
public:
    explicit BasePointHit(const std::string& what) : Error(what) {}
};

class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& what) : Error(what) {}
};

class Disconnected : public Error {
public:
    Disconnected() : Error("graph is not connected") {}
    explicit Disconnected(const std::string& what) : Error(what) {}
};

class UnknownType : public Error {
public:
    explicit UnknownType(const std::string& what) : Error(what) {}
};

class NotDivisible : public Error {
public:
    explicit NotDivisible(const std::string& what) : Error(what) {}
};

} // namespace enr7
