/**
 * @file core.hpp
 * @brief Lens-space identifiers, Spin^c label bookkeeping, and the error
 *        taxonomy shared by every module.
 *
 * Labels and homology classes are residues mod p and are auto-reduced on
 * use; out-of-range representatives are never an error. The only domain
 * errors raised here are a non-positive p and a non-coprime (p,q).
 */
#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratgenus/rational.hpp"

namespace ratgenus {

// -------- errors --------
//
// DomainError covers invalid user input (CLI exit code 1).
// InternalInvariantError covers broken internal conventions (exit code 3):
// they indicate a bug or a mislabeled table, never a bad argument.

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonCoprimeError : public DomainError {
public:
    using DomainError::DomainError;
};

class InvalidOrderError : public DomainError {
public:
    using DomainError::DomainError;
};

class DegenerateClassError : public DomainError {
public:
    using DomainError::DomainError;
};

class NotLSpacePatternError : public DomainError {
public:
    using DomainError::DomainError;
};

class PolynomialError : public DomainError {
public:
    using DomainError::DomainError;
};

class InternalInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class LabelingInconsistencyError : public InternalInvariantError {
public:
    using InternalInvariantError::InternalInvariantError;
};

class InvariantViolationError : public InternalInvariantError {
public:
    using InternalInvariantError::InternalInvariantError;
};

// -------- labels and identifiers --------

/// Reduces v into [0, p). Works for any representative, including negatives.
inline long long mod_reduce(long long v, long long p) {
    long long r = v % p;
    return r < 0 ? r + p : r;
}

enum class LabelConvention { recursion, surgery_sigma };

/// L(p,q) with 0 <= q < p and gcd(p,q) = 1; (1,0) is the 3-sphere.
struct LensSpaceId {
    long long p = 1;
    long long q = 0;
    friend bool operator==(const LensSpaceId&, const LensSpaceId&) = default;
};

/// Canonicalizes (p,q): reduces q mod p and verifies coprimality.
/// Throws InvalidOrderError if p <= 0, NonCoprimeError if gcd(p, q mod p) != 1.
inline LensSpaceId normalize_lens(long long p, long long q) {
    if (p <= 0) throw InvalidOrderError("lens space order must be positive, got p=" + std::to_string(p));
    if (p == 1) return {1, 0};
    long long qr = mod_reduce(q, p);
    if (std::gcd(p, qr) != 1)
        throw NonCoprimeError("L(" + std::to_string(p) + "," + std::to_string(qr) + "): parameters are not coprime");
    return {p, qr};
}

/// A torsion first-homology class, a residue mod p.
struct HomologyClass {
    long long k = 0;
};

/// A Spin^c structure label, a residue mod p under a stated convention.
struct SpinCLabel {
    long long value = 0;
    LabelConvention convention = LabelConvention::recursion;
};

/// Order of the class k in Z/p, i.e. p / gcd(p, k); the zero class has order 1.
inline long long order_of(HomologyClass a, long long p) {
    if (p <= 0) throw InvalidOrderError("order_of: p must be positive");
    long long k = mod_reduce(a.k, p);
    return p / std::gcd(p, k);
}

/// The full correction-term table of a space with |H_1| = p: one exact
/// rational per Spin^c label 0..p-1, under the stated labeling convention.
struct CorrectionTerms {
    long long p = 1;
    LabelConvention convention = LabelConvention::recursion;
    std::vector<Rational> values;  // size p, indexed by label

    const Rational& at(long long label) const { return values[mod_reduce(label, p)]; }
};

}  // namespace ratgenus
