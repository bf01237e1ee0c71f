#pragma once

#include <stdexcept>
#include <string>

namespace pulveriser {

// Domain errors carry a stable name that the CLI prints on stderr.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define PULVERISER_DOMAIN_ERROR(Name)                                \
    class Name : public DomainError {                                \
    public:                                                          \
        explicit Name(const std::string& what = #Name)               \
            : DomainError(#Name, what) {}                            \
    }

PULVERISER_DOMAIN_ERROR(ZeroDenominator);
PULVERISER_DOMAIN_ERROR(NonPositiveInput);
PULVERISER_DOMAIN_ERROR(InvalidGenerators);
PULVERISER_DOMAIN_ERROR(NegativeExponent);
PULVERISER_DOMAIN_ERROR(LengthOutOfRange);
PULVERISER_DOMAIN_ERROR(IndexOutOfRange);
PULVERISER_DOMAIN_ERROR(NegativeCadence);
PULVERISER_DOMAIN_ERROR(CadenceOutOfRange);
PULVERISER_DOMAIN_ERROR(NegativeRow);
PULVERISER_DOMAIN_ERROR(InvalidWins);
PULVERISER_DOMAIN_ERROR(NegativeRadicand);
PULVERISER_DOMAIN_ERROR(InvalidBase);
PULVERISER_DOMAIN_ERROR(ZeroDivisor);
PULVERISER_DOMAIN_ERROR(NotSolvable);
PULVERISER_DOMAIN_ERROR(DegenerateInput);
PULVERISER_DOMAIN_ERROR(PerfectSquare);
PULVERISER_DOMAIN_ERROR(InvalidModulus);
PULVERISER_DOMAIN_ERROR(OutOfRange);
PULVERISER_DOMAIN_ERROR(NotPrimeInput);
PULVERISER_DOMAIN_ERROR(SinkClosed);

#undef PULVERISER_DOMAIN_ERROR

} // namespace pulveriser
