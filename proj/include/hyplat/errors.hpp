#pragma once

#include <stdexcept>
#include <string>

namespace hyplat {

/// Base of all domain errors raised by the library. The CLI maps these to
/// exit code 2; anything else (I/O, parse) maps to exit code 1.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

#define HYPLAT_ERROR_TYPE(Name)                                        \
    class Name : public Error {                                        \
      public:                                                          \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    }

// lattice_core
HYPLAT_ERROR_TYPE(DegenerateLattice);
HYPLAT_ERROR_TYPE(MismatchedLattices);
HYPLAT_ERROR_TYPE(FormNotPreserved);
HYPLAT_ERROR_TYPE(NotUnimodular);

// spectral
HYPLAT_ERROR_TYPE(NonMonic);
HYPLAT_ERROR_TYPE(BadConstantTerm);
HYPLAT_ERROR_TYPE(SignatureUnsupported);
HYPLAT_ERROR_TYPE(SalemContractViolated);
HYPLAT_ERROR_TYPE(VerificationFailed);
HYPLAT_ERROR_TYPE(ReducibleSalemFactor);
HYPLAT_ERROR_TYPE(DegreeCapExceeded);

// nef_dynamics
HYPLAT_ERROR_TYPE(NotPositiveEntropy);
HYPLAT_ERROR_TYPE(EigenspaceDimensionNot1);
HYPLAT_ERROR_TYPE(NoConvergence);
HYPLAT_ERROR_TYPE(SplittingFailed);

// zariski
HYPLAT_ERROR_TYPE(NotPseudoEffectiveRelative);
HYPLAT_ERROR_TYPE(NonUniqueResult);

// surface_model
HYPLAT_ERROR_TYPE(NullSetMismatch);
HYPLAT_ERROR_TYPE(OrbitNotClosed);
HYPLAT_ERROR_TYPE(NotGStable);
HYPLAT_ERROR_TYPE(NotDisjoint);
HYPLAT_ERROR_TYPE(NoIntegralBasis);
HYPLAT_ERROR_TYPE(NegativeCoefficient);
HYPLAT_ERROR_TYPE(EmptyStab);

// weyl_coxeter
HYPLAT_ERROR_TYPE(NotMinusTwoRoot);

// stabilizer_analysis
HYPLAT_ERROR_TYPE(NotStabilized);
HYPLAT_ERROR_TYPE(NotClosedUnderComposition);
HYPLAT_ERROR_TYPE(NotNullEntropy);
HYPLAT_ERROR_TYPE(NotFound);

// internal postcondition failures: these signal a bug, not bad input
HYPLAT_ERROR_TYPE(ContractViolation);

#undef HYPLAT_ERROR_TYPE

}  // namespace hyplat
