#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace modlat {

enum class Errc {
  closure_exceeds_cap,
  invalid_permutation,
  not_a_group,
  not_normal,
  not_an_action,
  not_prime,
  bad_depth,
  bad_ordering,
  unknown_name,
  bad_parameters,
  unknown_selector,
  load_error,
  internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised by Cayley-table validation; carries the violated axiom and the
// offending elements (unused slots are zero).
class NotAGroupError : public Error {
 public:
  NotAGroupError(std::string axiom, std::array<std::uint32_t, 3> witness, const std::string& what)
      : Error(Errc::not_a_group, what), axiom_(std::move(axiom)), witness_(witness) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::array<std::uint32_t, 3>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::array<std::uint32_t, 3> witness_;
};

}  // namespace modlat
