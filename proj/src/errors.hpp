#pragma once

#include <stdexcept>
#include <string>

namespace ds {

// Exception taxonomy mirroring the C API status codes.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct range_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct factor_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ds
