#pragma once

#include <stdexcept>
#include <string>

namespace qsd {

// Base class for all toolkit errors. code() is a stable machine-readable
// identifier (snake_case); what() carries the human-readable detail.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

  private:
    std::string code_;
};

// A pair of input vectors fails the orthonormality check. State indices are
// 0-based positions in the input list; `overlap` is |<a|b>| for i != j and
// | ||a|| - 1 | for i == j.
class NotOrthonormal : public Error {
  public:
    NotOrthonormal(int first, int second, double overlap)
        : Error("not_orthonormal",
                "states " + std::to_string(first) + " and " + std::to_string(second) +
                    " are not orthonormal (overlap " + std::to_string(overlap) + ")"),
          first(first), second(second), overlap(overlap) {}
    int first;
    int second;
    double overlap;
};

class BadCardinality : public Error {
  public:
    explicit BadCardinality(const std::string& message) : Error("bad_cardinality", message) {}
};

class NotNormalized : public Error {
  public:
    explicit NotNormalized(const std::string& message) : Error("not_normalized", message) {}
};

class NonHermitian : public Error {
  public:
    explicit NonHermitian(double deviation)
        : Error("non_hermitian",
                "matrix is not Hermitian (max |m - m_dagger| = " + std::to_string(deviation) + ")"),
          deviation(deviation) {}
    double deviation;
};

class NotUnitary : public Error {
  public:
    explicit NotUnitary(double deviation)
        : Error("not_unitary",
                "matrix is not unitary (max |m_dagger m - I| = " + std::to_string(deviation) + ")"),
          deviation(deviation) {}
    double deviation;
};

// Eigenvalue-array indices are 1-based (array j belongs to operator U_j).
class UnbalancedArray : public Error {
  public:
    explicit UnbalancedArray(int array)
        : Error("unbalanced_array",
                "eigenvalue array " + std::to_string(array) + " does not contain equal numbers of +1 and -1"),
          array(array) {}
    int array;
};

class DuplicateOrComplement : public Error {
  public:
    DuplicateOrComplement(int array, int other)
        : Error("duplicate_or_complement",
                "eigenvalue array " + std::to_string(array) + " equals array " + std::to_string(other) +
                    " or its complement"),
          array(array), other(other) {}
    int array;
    int other;
};

// Two states (0-based) would receive the same ancilla signature.
class NonInjectiveSignatures : public Error {
  public:
    NonInjectiveSignatures(int state_a, int state_b)
        : Error("non_injective_signatures",
                "states " + std::to_string(state_a) + " and " + std::to_string(state_b) +
                    " share the same eigenvalue signature"),
          state_a(state_a), state_b(state_b) {}
    int state_a;
    int state_b;
};

class DimensionMismatch : public Error {
  public:
    explicit DimensionMismatch(const std::string& message) : Error("dimension_mismatch", message) {}
};

class NotAMember : public Error {
  public:
    explicit NotAMember(double best_probability)
        : Error("not_a_member",
                "input is not a member of the discriminator's state set (best outcome probability " +
                    std::to_string(best_probability) + ")"),
          best_probability(best_probability) {}
    double best_probability;
};

class UnsupportedFamily : public Error {
  public:
    explicit UnsupportedFamily(const std::string& message) : Error("unsupported_family", message) {}
};

class UnknownSpin : public Error {
  public:
    explicit UnknownSpin(int spin)
        : Error("unknown_spin", "spin index " + std::to_string(spin) + " is outside the spin system"),
          spin(spin) {}
    int spin;
};

class UnknownPreset : public Error {
  public:
    explicit UnknownPreset(const std::string& name)
        : Error("unknown_preset", "unknown preset \"" + name + "\""), name(name) {}
    std::string name;
};

class ParseError : public Error {
  public:
    explicit ParseError(const std::string& message) : Error("parse_error", message) {}
};

}  // namespace qsd
