#pragma once

#include <stdexcept>
#include <string>

namespace mqd {

// Bad user input: malformed JSON, unknown names, invalid algebra data.
class input_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An enumeration or certification exceeded its configured work cap.
// Callers must treat this as "undecided", never as a negative answer.
class cap_exceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed (certificate did not verify).
class verify_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace mqd
