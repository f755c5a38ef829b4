#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sidem {

/// Base class for every error raised by the library.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A presentation is malformed (wrong table shape, coordinate out of range).
class PresentationError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// A ring or module axiom fails. `witness` holds the offending elements as
/// element indices, in the order the axiom quantifies them.
class AxiomViolation : public AlgebraError {
 public:
  AxiomViolation(std::string axiom, std::vector<std::uint32_t> witness,
                 const std::string& detail)
      : AlgebraError("axiom violated (" + axiom + "): " + detail),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::vector<std::uint32_t> witness_;
};

class SizeExceeded : public AlgebraError {
 public:
  SizeExceeded(const std::string& what, std::size_t size, std::size_t cap)
      : AlgebraError(what + ": size " + std::to_string(size) + " exceeds cap " +
                     std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

class RingMismatch : public AlgebraError {
 public:
  RingMismatch() : AlgebraError("operands belong to different rings") {}
};

class ArityMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Raised when an ideal expected to be prime is not. For a proper ideal the
/// witness is a pair (a, b) with ab in the ideal and a, b outside it.
class NotPrime : public AlgebraError {
 public:
  NotPrime(std::vector<std::uint32_t> witness, const std::string& detail)
      : AlgebraError("ideal is not prime: " + detail), witness_(std::move(witness)) {}

  const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::uint32_t> witness_;
};

/// I x N is not an ideal of the idealization: some a in I, m in M has am outside N.
class NotHomogeneous : public AlgebraError {
 public:
  NotHomogeneous(std::uint32_t a, std::uint32_t m, const std::string& detail)
      : AlgebraError("not a homogeneous ideal: " + detail), a_(a), m_(m) {}

  std::uint32_t ring_element() const noexcept { return a_; }
  std::uint32_t module_element() const noexcept { return m_; }

 private:
  std::uint32_t a_;
  std::uint32_t m_;
};

class UnknownCheck : public AlgebraError {
 public:
  explicit UnknownCheck(const std::string& id) : AlgebraError("unknown check id: " + id) {}
};

}  // namespace sidem
